//! Fundamental solutions of t^2 - D u^2 = 4.
use modgraph::forms::pell_fundamental;
use num_bigint::BigInt;

fn main() -> modgraph::Result<()> {
    for d in [5, 8, 12, 13, 61, 109, 181, 991] {
        let p = pell_fundamental(&BigInt::from(d))?;
        println!("D = {d:>4}: t = {}, u = {}", p.t, p.u);
    }
    Ok(())
}
