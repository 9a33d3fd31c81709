//! Builds an instance from raw structure constants, saves it as `.bqg.json`
//! and runs every check on the reloaded file.
//!
//! The instance is the super line: basis {1, e}, e² = 0, e primitive,
//! κ(e) = −e and the braiding picks up a sign on e⊗e.

use braidcheck::cli::{check, Suite};
use braidcheck::spec::{self, QGSpec, Structure, DEFAULT_TOL};
use braidcheck::tensor::Scalar;
use braidcheck::MultiOp;

const ONE: usize = 0;
const E: usize = 1;
const D: usize = 2;

fn pair(a: usize, b: usize) -> usize {
    a * D + b
}

fn op(
    arity_in: usize,
    arity_out: usize,
    entries: &[(usize, usize, f64)],
) -> braidcheck::Result<MultiOp> {
    MultiOp::from_triplets(
        D,
        arity_in,
        arity_out,
        entries.iter().map(|&(r, c, v)| (r, c, Scalar::new(v, 0.0))),
    )
}

fn super_line() -> braidcheck::Result<QGSpec> {
    let structure = Structure {
        product: op(
            2,
            1,
            &[
                (ONE, pair(ONE, ONE), 1.0),
                (E, pair(ONE, E), 1.0),
                (E, pair(E, ONE), 1.0),
            ],
        )?,
        unit: op(0, 1, &[(ONE, 0, 1.0)])?,
        coproduct: op(
            1,
            2,
            &[
                (pair(ONE, ONE), ONE, 1.0),
                (pair(E, ONE), E, 1.0),
                (pair(ONE, E), E, 1.0),
            ],
        )?,
        counit: op(1, 0, &[(0, ONE, 1.0)])?,
        antipode: op(1, 1, &[(ONE, ONE, 1.0), (E, E, -1.0)])?,
        braiding: op(
            2,
            2,
            &[
                (pair(ONE, ONE), pair(ONE, ONE), 1.0),
                (pair(E, ONE), pair(ONE, E), 1.0),
                (pair(ONE, E), pair(E, ONE), 1.0),
                (pair(E, E), pair(E, E), -1.0),
            ],
        )?,
    };
    QGSpec::new(vec!["1".into(), "e".into()], structure, DEFAULT_TOL)
}

fn main() -> braidcheck::Result<()> {
    let s = super_line()?;
    let path = std::env::temp_dir().join("super_line.bqg.json");
    spec::save(&s, &path)?;
    println!("wrote {}", path.display());

    let reloaded = spec::load(&path)?;
    assert_eq!(reloaded.residual(&s)?, 0.0);
    let report = check(&reloaded, Suite::All, None)?;
    println!(
        "all suites: {} items, overall {}",
        report.len(),
        report.overall()
    );

    let flipped = s.with_tensor(spec::TensorName::Braiding, MultiOp::flip(D))?;
    let report = check(&flipped, Suite::Axioms, None)?;
    println!(
        "\nwith the plain flip: {} of {} checks fail",
        report.failures().count(),
        report.len()
    );
    Ok(())
}
