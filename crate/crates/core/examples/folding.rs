//! Stallings-style folding: the quotient graph of a finitely generated subgroup.
use modgraph::{fold_subgroup_graph, farey_ball, Word};

fn main() -> modgraph::Result<()> {
    let gens: Vec<Word> = ["LS", "SLSL"]
        .iter()
        .map(|s| s.parse())
        .collect::<modgraph::Result<_>>()?;
    let g = fold_subgroup_graph(&gens);
    println!("<LS, SLSL>: {} edges, stubs: {}", g.edge_count(), g.has_stubs());
    for probe in ["LSLS", "S", "L", "SLSLLSLS"] {
        let w: Word = probe.parse()?;
        println!("  contains {probe}: {}", g.contains(&w)?);
    }

    let cyclic = fold_subgroup_graph(&["LSLLS".parse()?]);
    if let Some(spine) = cyclic.spine() {
        println!("<LSLLS> spine length {}", spine.edges.len());
    }

    for r in 0..5 {
        println!("Farey ball of radius {r}: {} edges", farey_ball(r).edge_count());
    }
    Ok(())
}
