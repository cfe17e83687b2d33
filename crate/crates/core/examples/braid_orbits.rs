//! Split the generating vectors of a signature into braid orbits.
//!
//! cargo run --release --example braid_orbits -- psl28 7,7,7

use beauville::braid::{hurwitz_move, orbit_partition};
use beauville::catalog;
use beauville::vectors::enumerate;
use beauville::Signature;

fn main() -> beauville::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "a5".into());
    let sig: Signature = args.next().unwrap_or_else(|| "2,5,5".into()).parse()?;
    let g = catalog::lookup(&name).expect("unknown catalog group").build()?;
    let vectors = enumerate(&g, &sig);
    let orbits = orbit_partition(&g, &vectors)?;
    println!("{} vectors in {} braid orbits", vectors.len(), orbits.len());
    for (i, o) in orbits.iter().enumerate() {
        let rep = o.representative();
        let cycles: Vec<String> = rep.entries().iter().map(|&h| g.element(h).to_string()).collect();
        println!("orbit {i}: {} members, representative [{}]", o.len(), cycles.join(", "));
    }
    if let Some(v) = vectors.first() {
        let moved = hurwitz_move(&g, v.entries(), 1)?;
        let cycles: Vec<String> = moved.iter().map(|&h| g.element(h).to_string()).collect();
        println!("sigma_1 of the first vector: [{}]", cycles.join(", "));
    }
    Ok(())
}
