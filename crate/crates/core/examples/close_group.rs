//! Materialize a permutation group and print basic data about it.
//!
//! cargo run --example close_group -- 7 "(1 2 3 4 5 6 7)" "(1 2)(3 6)"

use beauville::{FiniteGroup, Permutation};

fn main() -> beauville::Result<()> {
    let mut args = std::env::args().skip(1);
    let (degree, gens) = match args.next() {
        Some(d) => {
            let degree: usize = d.parse().expect("degree must be a number");
            let gens = args
                .map(|s| Permutation::parse_cycles(degree, &s))
                .collect::<beauville::Result<Vec<_>>>()?;
            (degree, gens)
        }
        None => (
            5,
            vec![
                Permutation::parse_cycles(5, "(1 2 3 4 5)")?,
                Permutation::parse_cycles(5, "(1 2)(3 4)")?,
            ],
        ),
    };
    let g = FiniteGroup::close(degree, gens)?;
    println!("order {}", g.order());
    println!("exponent {}", g.exponent());
    let classes = g.conjugacy_classes();
    println!("{} conjugacy classes", classes.len());
    for c in 0..classes.len() {
        let rep = classes.members(c)[0];
        println!(
            "  size {:>4}  order {:>3}  e.g. {}",
            classes.members(c).len(),
            g.element_order(rep),
            g.element(rep)
        );
    }
    Ok(())
}
