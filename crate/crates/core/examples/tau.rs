//! Derives the secondary braiding τ and the operators built from it.

use braidcheck::derived::{check_derived, derive_tau, DerivedSet};
use braidcheck::spec::{builtin, clifford_rank1};
use braidcheck::MultiOp;

fn main() -> braidcheck::Result<()> {
    let s = clifford_rank1();
    let tau = derive_tau(&s)?;
    println!(
        "clifford_rank1: |τ − σ| = {:.2}",
        tau.residual(s.braiding())?
    );
    for (r, c, v) in tau.nonzeros() {
        println!("  τ[{r}, {c}] = {}", v.re);
    }

    let d = DerivedSet::compute(&s)?;
    let id2 = MultiOp::identity(2, 2);
    println!(
        "|ττ⁻¹ − id| = {:.1e}",
        tau.compose(&d.tau_inv)?.residual(&id2)?
    );
    println!("|στ⁻¹ − id| = {:.2}", d.st_inv.residual(&id2)?);

    for name in ["z2", "sweedler", "superline"] {
        let (_, report) = check_derived(&builtin(name)?);
        println!(
            "{name:<10} {}",
            report.to_text().lines().last().unwrap_or_default()
        );
    }
    Ok(())
}
