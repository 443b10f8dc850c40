//! Quotient graphs of the congruence subgroups Gamma0(N), Gamma1(N), Gamma(N).
use modgraph::{congruence::congruence_graph, CongruenceSpec, Family};

fn main() -> modgraph::Result<()> {
    println!("{:>8} {:>3} {:>6} {:>6} {:>9}", "family", "N", "index", "genus", "punctures");
    for family in [Family::Gamma0, Family::Gamma1, Family::GammaFull] {
        for n in [2, 3, 5, 7, 11] {
            let g = congruence_graph(&CongruenceSpec::new(family, n)?)?;
            let p = g.passport()?;
            println!("{:>8} {n:>3} {:>6} {:>6} {:>9}", family.to_string(), p.edges, p.genus, p.punctures);
        }
    }
    Ok(())
}
