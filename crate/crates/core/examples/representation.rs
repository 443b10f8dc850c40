//! Minima and representation of integers by indefinite forms.
use modgraph::{QuadForm, Representation};
use num_bigint::BigInt;

fn main() -> modgraph::Result<()> {
    let f = QuadForm::from_i64(-2, 5, 6);
    println!("minimum of {f}: {}", f.minimum()?);

    let g = QuadForm::from_i64(1, 1, -1);
    for n in [1, 2, 4, 5, 11, 19, -1, -29] {
        match g.represents(&BigInt::from(n))? {
            Representation::Present { x, y } => println!("{g} represents {n} at ({x}, {y})"),
            Representation::Absent { .. } => println!("{g} does not represent {n}"),
        }
    }
    Ok(())
}
