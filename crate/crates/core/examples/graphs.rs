//! Ribbon graphs from permutation pairs: passports, faces and DOT output.
use modgraph::RibbonGraph;

fn main() -> modgraph::Result<()> {
    // the coset action of Gamma0(2): S swaps 0 and 1, L cycles all three
    let g = RibbonGraph::from_permutation_pair(&[1, 0, 2], &[1, 2, 0])?;
    let p = g.passport()?;
    println!("edges {} genus {} punctures {}", p.edges, p.genus, p.punctures);
    println!("faces {:?} monodromy {}", p.face_degrees, p.monodromy_order);

    let json = g.to_json();
    let back = RibbonGraph::from_json(&json)?;
    println!("json round trip isomorphic: {}", back.is_isomorphic(&g));

    for w in g.generators()? {
        println!("generator {w}");
    }
    print!("{}", g.to_dot());
    Ok(())
}
