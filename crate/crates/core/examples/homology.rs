//! First homology of a surface given by a disjoint pair, step by step.
//!
//! cargo run --example homology

use beauville::catalog;
use beauville::homology::{
    abelian_invariants, diagonal_coset_table, direct_product_presentation, polygonal_presentation,
    rewrite_presentation, Transversal,
};
use beauville::vectors::{disjoint, enumerate};
use beauville::Signature;

fn main() -> beauville::Result<()> {
    let g = catalog::lookup("z5xz5").unwrap().build()?;
    let sig: Signature = "5,5,5".parse()?;
    let vectors = enumerate(&g, &sig);
    let v1 = &vectors[0];
    let v2 = vectors
        .iter()
        .find(|v| disjoint(&g, v1.entries(), v.entries()))
        .expect("a disjoint partner exists");

    let p = direct_product_presentation(
        &polygonal_presentation(sig.periods()),
        &polygonal_presentation(sig.periods()),
    );
    println!(
        "T1 x T2: {} generators, {} relators",
        p.generator_count(),
        p.relators().len()
    );
    println!("H1(T1 x T2) = {}", abelian_invariants(&p)?);

    let table = diagonal_coset_table(&g, v1.entries(), v2.entries())?;
    println!("diagonal subgroup has index {}", table.size());
    let sub = rewrite_presentation(&p, &table, Transversal::Forward);
    println!(
        "rewritten: {} generators, {} relators",
        sub.generator_count(),
        sub.relators().len()
    );
    println!("H1(S) = {}", abelian_invariants(&sub)?);
    Ok(())
}
