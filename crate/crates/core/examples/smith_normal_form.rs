//! Invariant factors of an integer matrix.
//!
//! cargo run --example smith_normal_form

use beauville::homology::{invariant_factors, AbelianInvariants, SnfLimits};

fn main() -> beauville::Result<()> {
    let dense: [[i64; 3]; 3] = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]];
    let rows: Vec<Vec<(usize, i64)>> = dense
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(j, &x)| (j, x))
                .collect()
        })
        .collect();
    let chain = invariant_factors(rows, 3, &SnfLimits::default())?;
    let shown: Vec<String> = chain.iter().map(|d| d.to_string()).collect();
    println!("invariant factors: {}", shown.join(" "));
    let cyclic: Vec<u64> = chain.iter().map(|d| d.to_string().parse().unwrap()).collect();
    println!("cokernel: {}", AbelianInvariants::from_cyclic_factors(&cyclic));
    Ok(())
}
