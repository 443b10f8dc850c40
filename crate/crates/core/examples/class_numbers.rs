//! Narrow class numbers and composition of classes.
use modgraph::forms::{class_number, classes, compose, principal_form};
use num_bigint::BigInt;

fn main() -> modgraph::Result<()> {
    for d in [5, 8, 12, 13, 40, 60, 85, 145, 229] {
        println!("h({d}) = {}", class_number(&BigInt::from(d))?);
    }

    let d = BigInt::from(60);
    let all = classes(&d)?;
    let reps: Vec<_> = all.iter().map(|c| c.key().clone()).collect();
    println!("classes of discriminant {d}: {}", reps.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" "));
    println!("principal form {}", principal_form(&d)?);
    for a in &reps {
        let row: Vec<String> = reps.iter().map(|b| compose(a, b).map(|f| f.to_string())).collect::<modgraph::Result<_>>()?;
        println!("{a:>10} * : {}", row.join(" "));
    }
    Ok(())
}
