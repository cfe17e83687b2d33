//! Enumerate spherical generating vectors and test disjointness of pairs.
//!
//! cargo run --example generating_vectors -- z5xz5 5,5,5

use beauville::catalog;
use beauville::vectors::{curve_genus, disjoint, enumerate, stabilizer_set};
use beauville::Signature;

fn main() -> beauville::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "z5xz5".into());
    let sig: Signature = args.next().unwrap_or_else(|| "5,5,5".into()).parse()?;
    let g = catalog::lookup(&name).expect("unknown catalog group").build()?;
    let vectors = enumerate(&g, &sig);
    println!("{} generating vectors of signature {sig}", vectors.len());
    if let Ok(genus) = curve_genus(g.order() as u64, &sig) {
        println!("covering curve genus {genus}");
    }
    let Some(first) = vectors.first() else { return Ok(()) };
    let cycles: Vec<String> = first.entries().iter().map(|&h| g.element(h).to_string()).collect();
    println!("first: [{}]", cycles.join(", "));
    println!("|Sigma| = {}", stabilizer_set(&g, first.entries()).len());
    let partners = vectors
        .iter()
        .filter(|v| disjoint(&g, first.entries(), v.entries()))
        .count();
    println!("{partners} vectors form a disjoint pair with it");
    Ok(())
}
