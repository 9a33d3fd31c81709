//! Builds the deformed groups G_n of the Clifford instance and prints the
//! new product of the odd generator with itself.

use braidcheck::braid::build_gn;
use braidcheck::derived::DerivedSet;
use braidcheck::spec::clifford_rank1;

fn main() -> braidcheck::Result<()> {
    let s = clifford_rank1();
    let d = DerivedSet::compute(&s)?;
    let e = s.basis("e").expect("label");
    for n in -2..=3 {
        let g = build_gn(&s, &d, n)?;
        let ee = g.spec_n.product().get(0, e * 2 + e);
        println!(
            "G_{n:<2}  e·e = {:>2}·1   {} checks, overall {}",
            ee.re,
            g.report.len(),
            g.report.overall()
        );
    }
    Ok(())
}
