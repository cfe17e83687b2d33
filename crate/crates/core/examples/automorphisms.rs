//! Compute Aut(G) for a catalog group and compare it with the inner automorphisms.
//!
//! cargo run --release --example automorphisms -- a6

use std::collections::HashSet;

use beauville::automorphism::{compute_aut, Automorphism};
use beauville::catalog;

fn main() -> beauville::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "a5".into());
    let entry = catalog::lookup(&name).expect("unknown catalog group");
    let g = entry.build()?;
    let auts = compute_aut(&g)?;
    let inner: HashSet<Automorphism> = g.ids().map(|x| Automorphism::inner(&g, x)).collect();
    println!("{}: |G| = {}, |Aut(G)| = {}", entry.name, g.order(), auts.len());
    println!("|Inn(G)| = {}, |Out(G)| = {}", inner.len(), auts.len() / inner.len());
    Ok(())
}
