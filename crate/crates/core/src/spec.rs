//! Candidate braided quantum groups given by structure constants.

mod builtins;
mod file;

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tensor::{MultiOp, Shape};

pub use builtins::{
    builtin, builtin_names, clifford_rank1, group_algebra, superline, sweedler, symmetric_group, z2,
};
pub use file::{entries_of, from_json, load, save, to_json, Entry, InstanceFile};

pub const DEFAULT_TOL: f64 = 1e-9;

/// The six structure tensors of a spec.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TensorName {
    Product,
    Unit,
    Coproduct,
    Counit,
    Antipode,
    Braiding,
}

impl TensorName {
    pub const ALL: [TensorName; 6] = [
        TensorName::Product,
        TensorName::Unit,
        TensorName::Coproduct,
        TensorName::Counit,
        TensorName::Antipode,
        TensorName::Braiding,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TensorName::Product => "product",
            TensorName::Unit => "unit",
            TensorName::Coproduct => "coproduct",
            TensorName::Counit => "counit",
            TensorName::Antipode => "antipode",
            TensorName::Braiding => "braiding",
        }
    }

    /// `(arity_in, arity_out)`
    pub fn arities(self) -> (usize, usize) {
        match self {
            TensorName::Product => (2, 1),
            TensorName::Unit => (0, 1),
            TensorName::Coproduct => (1, 2),
            TensorName::Counit => (1, 0),
            TensorName::Antipode => (1, 1),
            TensorName::Braiding => (2, 2),
        }
    }

    pub fn shape(self, dim: usize) -> Shape {
        let (i, o) = self.arities();
        Shape::new(dim, i, o)
    }
}

impl fmt::Display for TensorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A candidate braided quantum group `(A, m, 1, φ, ε, κ, σ)`.
///
/// Construction only checks shapes and the nondegeneracy of the unit and
/// counit; whether the axioms hold is decided by [`crate::axioms`].
#[derive(Clone, Debug)]
pub struct QGSpec {
    dim: usize,
    labels: Vec<String>,
    product: MultiOp,
    unit: MultiOp,
    coproduct: MultiOp,
    counit: MultiOp,
    antipode: MultiOp,
    braiding: MultiOp,
    tol: f64,
}

/// Builder-style input to [`QGSpec::new`].
#[derive(Clone, Debug)]
pub struct Structure {
    pub product: MultiOp,
    pub unit: MultiOp,
    pub coproduct: MultiOp,
    pub counit: MultiOp,
    pub antipode: MultiOp,
    pub braiding: MultiOp,
}

impl QGSpec {
    pub fn new(labels: Vec<String>, s: Structure, tol: f64) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::InvalidSpec("dimension must be at least 1".into()));
        }
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::InvalidSpec(format!(
                "tolerance must be positive, got {tol}"
            )));
        }
        let spec = QGSpec {
            dim,
            labels,
            product: s.product,
            unit: s.unit,
            coproduct: s.coproduct,
            counit: s.counit,
            antipode: s.antipode,
            braiding: s.braiding,
            tol,
        };
        for name in TensorName::ALL {
            let expected = name.shape(dim);
            let got = spec.tensor(name).shape();
            if got != expected {
                return Err(Error::InvalidSpec(format!(
                    "{name} has shape {got}, expected {expected}"
                )));
            }
        }
        if spec.unit.max_abs() == 0.0 {
            return Err(Error::InvalidSpec("unit vector is zero".into()));
        }
        if spec.counit.max_abs() == 0.0 {
            return Err(Error::InvalidSpec("counit is zero".into()));
        }
        Ok(spec)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn product(&self) -> &MultiOp {
        &self.product
    }

    pub fn unit(&self) -> &MultiOp {
        &self.unit
    }

    pub fn coproduct(&self) -> &MultiOp {
        &self.coproduct
    }

    pub fn counit(&self) -> &MultiOp {
        &self.counit
    }

    pub fn antipode(&self) -> &MultiOp {
        &self.antipode
    }

    pub fn braiding(&self) -> &MultiOp {
        &self.braiding
    }

    pub fn tensor(&self, name: TensorName) -> &MultiOp {
        match name {
            TensorName::Product => &self.product,
            TensorName::Unit => &self.unit,
            TensorName::Coproduct => &self.coproduct,
            TensorName::Counit => &self.counit,
            TensorName::Antipode => &self.antipode,
            TensorName::Braiding => &self.braiding,
        }
    }

    pub fn structure(&self) -> Structure {
        Structure {
            product: self.product.clone(),
            unit: self.unit.clone(),
            coproduct: self.coproduct.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            braiding: self.braiding.clone(),
        }
    }

    pub fn with_tol(&self, tol: f64) -> Result<Self> {
        QGSpec::new(self.labels.clone(), self.structure(), tol)
    }

    /// Copy with one structure tensor replaced.
    pub fn with_tensor(&self, name: TensorName, op: MultiOp) -> Result<Self> {
        let mut s = self.structure();
        match name {
            TensorName::Product => s.product = op,
            TensorName::Unit => s.unit = op,
            TensorName::Coproduct => s.coproduct = op,
            TensorName::Counit => s.counit = op,
            TensorName::Antipode => s.antipode = op,
            TensorName::Braiding => s.braiding = op,
        }
        QGSpec::new(self.labels.clone(), s, self.tol)
    }

    /// Copy with a single structure constant shifted by `delta`.
    pub fn perturbed(&self, name: TensorName, row: usize, col: usize, delta: f64) -> Result<Self> {
        let op = self.tensor(name);
        let value = op.get(row, col) + Complex64::new(delta, 0.0);
        self.with_tensor(name, op.with_entry(row, col, value)?)
    }

    /// Index of a basis label.
    pub fn basis(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Maximum residual over all six tensors against another spec.
    pub fn residual(&self, other: &QGSpec) -> Result<f64> {
        TensorName::ALL.iter().try_fold(0.0f64, |acc, &name| {
            Ok(acc.max(self.tensor(name).residual(other.tensor(name))?))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_wrong_shapes() {
        let s = sweedler();
        let mut st = s.structure();
        st.product = MultiOp::identity(4, 1);
        let err = QGSpec::new(s.labels().to_vec(), st, 1e-9).unwrap_err();
        assert!(err.to_string().contains("product"), "{err}");
    }

    #[test]
    fn rejects_zero_unit_and_counit() {
        let s = z2();
        assert!(s
            .with_tensor(TensorName::Unit, MultiOp::zeros(2, 0, 1))
            .is_err());
        assert!(s
            .with_tensor(TensorName::Counit, MultiOp::zeros(2, 1, 0))
            .is_err());
        assert!(s.with_tol(0.0).is_err());
        assert!(s.with_tol(f64::NAN).is_err());
    }

    #[test]
    fn perturbed_changes_one_entry() {
        let s = clifford_rank1();
        let p = s.perturbed(TensorName::Braiding, 0, 3, 1e-3).unwrap();
        assert!((p.residual(&s).unwrap() - 1e-3).abs() < 1e-15);
    }
}
