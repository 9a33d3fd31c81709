//! Evaluates the identity catalog, in full and by family.

use std::collections::BTreeMap;

use braidcheck::catalog::{find, list_catalog, run_catalog};
use braidcheck::derived::DerivedSet;
use braidcheck::spec::sweedler;

fn main() -> braidcheck::Result<()> {
    let s = sweedler();
    let d = DerivedSet::compute(&s)?;

    let mut families: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for entry in list_catalog() {
        families.entry(entry.family).or_default().push(entry.id);
    }
    for (family, ids) in &families {
        let report = run_catalog(&s, &d, Some(ids))?;
        println!(
            "{family:<40} {:>2} identities, max residual {:.1e}",
            report.len(),
            report.max_residual()
        );
    }

    let entry = find("2.47").expect("catalog id");
    println!("\n{}: {}", entry.id, entry.formula);
    println!("{}", entry.check(&s, &d).to_text());
    Ok(())
}
