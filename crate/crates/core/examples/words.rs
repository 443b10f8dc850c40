//! Normal forms, matrices and conjugacy classes of PSL(2,Z) words.
use modgraph::Word;

fn main() -> modgraph::Result<()> {
    for text in ["SS", "LLL", "SLSLL", "(LSLLS)^2", "LSLSLLS"] {
        let w: Word = text.parse()?;
        println!(
            "{text:>10} -> {:<12} matrix {:<10} cyclic {:<10} {}",
            w.to_string(),
            w.to_matrix().to_string(),
            w.cyclic_normal_form().to_string(),
            w.classify()
        );
    }

    let w: Word = "LSLLS".parse()?;
    let g: Word = "SL".parse()?;
    let c = w.conjugate_by(&g);
    println!("{w} conjugated by {g} is {c}; conjugate: {}", c.is_conjugate_to(&w));

    let m = modgraph::Mat::from_i64(5, 2, 2, 1)?;
    println!("matrix {m} is the word {}", m.to_word());

    let hyperbolic = Word::enumerate_up_to(8)
        .into_iter()
        .filter(|w| w.classify().is_hyperbolic())
        .count();
    println!("{hyperbolic} hyperbolic words of length at most 8");
    Ok(())
}
