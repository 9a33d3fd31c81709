//! Runs the axiom suite on every built-in instance, then on a corrupted copy.

use braidcheck::axioms::check_all;
use braidcheck::spec::{builtin, builtin_names, TensorName};

fn main() -> braidcheck::Result<()> {
    for name in builtin_names() {
        let report = check_all(&builtin(name)?);
        println!(
            "{name:<16} {} items, overall {}, max residual {:.1e}",
            report.len(),
            report.overall(),
            report.max_residual()
        );
    }

    // x⊗x sits at row and column 2·4 + 2.
    let broken = builtin("sweedler")?.perturbed(TensorName::Braiding, 10, 10, 1.0)?;
    println!("\nsweedler with σ(x⊗x) doubled:");
    for item in check_all(&broken).failures() {
        println!("  {}", item.to_text());
    }
    Ok(())
}
