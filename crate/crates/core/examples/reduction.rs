//! Reduction of indefinite binary quadratic forms and their cycles.
use modgraph::QuadForm;

fn main() -> modgraph::Result<()> {
    let f = QuadForm::from_i64(5, 7, 1);
    let (g, m) = f.reduce()?;
    println!("{f} reduces to {g} via {m} in {} steps", f.reduction_steps()?);

    let class = g.cycle()?;
    println!("cycle of length {}:", class.len());
    for h in class.forms() {
        println!("  {h}");
    }
    println!("automorph {}", g.automorph()?);
    println!(
        "{f} ~ {}: {}",
        QuadForm::from_i64(1, 5, -1),
        f.equivalent(&QuadForm::from_i64(1, 5, -1))?
    );
    Ok(())
}
