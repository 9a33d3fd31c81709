//! Classifies each built-in by whether its counit is multiplicative.

use braidcheck::braid::{build_gn, classify};
use braidcheck::derived::{derive_tau, DerivedSet};
use braidcheck::spec::{builtin, builtin_names, clifford_rank1};

fn main() -> braidcheck::Result<()> {
    for name in builtin_names() {
        let s = builtin(name)?;
        let c = classify(&s, &derive_tau(&s)?)?;
        print!("{name:<16} {}", c.to_text());
    }

    let s = clifford_rank1();
    let g0 = build_gn(&s, &DerivedSet::compute(&s)?, 0)?.spec_n;
    print!(
        "{:<16} {}",
        "clifford G_0",
        classify(&g0, &derive_tau(&g0)?)?.to_text()
    );
    Ok(())
}
