//! Structure-constant verification for braided quantum groups.
//!
//! A finite-dimensional candidate is given by six tensors (product, unit,
//! coproduct, counit, antipode, braiding). The crate checks the axioms,
//! derives the secondary braiding τ, verifies a catalog of consequences,
//! builds the deformed family `G_n` and explores braid systems.
//!
//! ```
//! use braidcheck::{axioms, spec};
//!
//! let s = spec::sweedler();
//! assert!(axioms::check_all(&s).overall());
//! ```

pub mod axioms;
pub mod braid;
pub mod catalog;
pub mod cli;
pub mod derived;
pub mod error;
pub mod report;
pub mod spec;
pub mod tensor;

pub use error::{Error, Result};
pub use report::{CheckItem, CheckReport};
pub use spec::QGSpec;
pub use tensor::MultiOp;
