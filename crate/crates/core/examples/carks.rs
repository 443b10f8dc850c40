//! Carks of hyperbolic words, reciprocity and SVG drawings.
use modgraph::cark::{word_to_cark, Cark};
use modgraph::Word;

fn main() -> modgraph::Result<()> {
    for text in ["LSLLS", "LSLSLLS", "(LSLLS)^2", "SLSLLSLL"] {
        let w: Word = text.parse()?;
        let c = word_to_cark(&w)?;
        println!("{text:>10} -> {c:<6} reciprocal {}", c.is_reciprocal());
    }

    let c: Cark = "PPMM".parse()?;
    println!("{c} back to the word {}", c.to_word());
    let path = std::env::temp_dir().join("ppmm.svg");
    std::fs::write(&path, c.to_svg()).expect("writable temp dir");
    println!("wrote {}", path.display());
    Ok(())
}
