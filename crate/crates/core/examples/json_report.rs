//! Produce a JSON report and read it back.
//!
//! cargo run --example json_report

use beauville::catalog;
use beauville::classify::{classify_with, ClassifyOptions};
use beauville::report::RunReport;
use beauville::Signature;

fn main() -> beauville::Result<()> {
    let g = catalog::lookup("z3xz3").unwrap().build()?;
    let t: Signature = "3,3,3,3".parse()?;
    let c = classify_with(&g, &t, &t, &ClassifyOptions::default())?;
    let report = RunReport::new("z3xz3", &g, &t, &t, &c.invariants, &c.records);
    let json = report.to_json();
    println!("{json}");
    assert_eq!(RunReport::from_json(&json)?, report);
    Ok(())
}
