//! Recompute a published table row by row.
//!
//! cargo run --release --example reproduce_table -- 4

use beauville::classify::ClassifyOptions;
use beauville::tables::{rows_of, run_row};

fn main() -> beauville::Result<()> {
    let table: u8 = std::env::args().nth(1).map_or(1, |s| s.parse().expect("table number"));
    for row in rows_of(table) {
        println!("{}", run_row(row, &ClassifyOptions::default())?.line());
    }
    Ok(())
}
