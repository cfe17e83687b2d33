//! Classify the components for one group and signature pair.
//!
//! cargo run --release --example classify -- s5 4,4,5 3,6,6

use beauville::catalog;
use beauville::classify::{classify_with, ClassifyOptions};
use beauville::report::RunReport;
use beauville::Signature;

fn main() -> beauville::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "a5".into());
    let t1: Signature = args.next().unwrap_or_else(|| "2,5,5".into()).parse()?;
    let t2: Signature = args.next().unwrap_or_else(|| "3,3,3,3".into()).parse()?;
    let (name, g) = catalog::resolve(&name, beauville::group::DEFAULT_ELEMENT_CAP)?;
    let c = classify_with(&g, &t1, &t2, &ClassifyOptions::default())?;
    println!(
        "{} + {} braid orbits, {} disjoint orbit pairs, |Aut(G)| = {}",
        c.orbits1.len(),
        c.orbits2.len(),
        c.disjoint_pairs.len(),
        c.automorphisms.len()
    );
    let report = RunReport::new(&name, &g, &t1, &t2, &c.invariants, &c.records);
    print!("{}", report.to_text());
    Ok(())
}
