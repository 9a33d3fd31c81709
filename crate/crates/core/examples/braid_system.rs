//! Checks {σ, τ} as a braid system, completes it and matches members to σ_n.

use braidcheck::braid::{complete, family_range, is_braid_system, match_family};
use braidcheck::derived::DerivedSet;
use braidcheck::spec::clifford_rank1;

fn main() -> braidcheck::Result<()> {
    let s = clifford_rank1();
    let d = DerivedSet::compute(&s)?;
    let pair = [s.braiding().clone(), d.tau.clone()];
    let report = is_braid_system(&s, &pair);
    println!(
        "{{σ, τ}}: {} items, overall {}",
        report.len(),
        report.overall()
    );

    let depth = 3;
    let system = complete(&s, &pair, depth)?;
    print!("{}", system.to_text());

    let matched = match_family(&s, &d, &system.ops, family_range(depth))?;
    let ns: Vec<String> = matched
        .iter()
        .map(|m| m.map_or("?".into(), |n| n.to_string()))
        .collect();
    println!("σ_n indices: {}", ns.join(" "));
    Ok(())
}
