//! First homology of the surface attached to a disjoint pair of spherical
//! systems of generators.
//!
//! The fundamental group is the fibre product of the two polygonal groups
//! over `G`, a subgroup of index `|G|` in their direct product. Its coset
//! table is written down directly, a Reidemeister–Schreier presentation is
//! read off, and the abelianization comes from an integer Smith normal form.

mod abelian;
mod coset;
mod snf;

pub use abelian::{chain_from_cyclic_factors, AbelianInvariants};
pub use coset::{diagonal_coset_table, rewrite_presentation, CosetTable, Transversal};
pub use snf::{invariant_factors, SnfLimits};

use crate::error::{Error, Result};
use crate::group::{ElementId, FiniteGroup};

/// A word in the generators: `+k` is generator `k` (1-based), `-k` its inverse.
pub type Word = Vec<i32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPresentation {
    generator_count: usize,
    relators: Vec<Word>,
}

impl FpPresentation {
    pub fn new(generator_count: usize, relators: Vec<Word>) -> Result<Self> {
        for w in &relators {
            if let Some(&bad) = w
                .iter()
                .find(|&&x| x == 0 || x.unsigned_abs() as usize > generator_count)
            {
                return Err(Error::Input(format!(
                    "letter {bad} out of range for {generator_count} generators"
                )));
            }
        }
        Ok(FpPresentation {
            generator_count,
            relators,
        })
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Exponent-sum matrix, one sparse row per relator.
    pub fn exponent_rows(&self) -> Vec<Vec<(usize, i64)>> {
        self.relators
            .iter()
            .map(|w| {
                let mut row: Vec<(usize, i64)> = Vec::new();
                let mut letters: Vec<i32> = w.clone();
                letters.sort_by_key(|x| x.unsigned_abs());
                for x in letters {
                    let col = x.unsigned_abs() as usize - 1;
                    let e = x.signum() as i64;
                    match row.last_mut() {
                        Some((c, v)) if *c == col => *v += e,
                        _ => row.push((col, e)),
                    }
                }
                row.retain(|&(_, v)| v != 0);
                row
            })
            .collect()
    }
}

/// Cancels adjacent inverse letters.
pub fn free_reduce(word: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &x in word {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// `⟨c_1, .., c_r | c_1^{m_1}, .., c_r^{m_r}, c_1 ⋯ c_r⟩`.
pub fn polygonal_presentation(periods: &[u32]) -> FpPresentation {
    let r = periods.len();
    let mut relators: Vec<Word> = periods
        .iter()
        .enumerate()
        .map(|(i, &m)| vec![i as i32 + 1; m as usize])
        .collect();
    relators.push((1..=r as i32).collect());
    FpPresentation {
        generator_count: r,
        relators,
    }
}

/// Direct product: relators of both factors, then every commutator
/// `[c_i, c'_j] = c_i c'_j c_i^-1 c'_j^-1`.
pub fn direct_product_presentation(p1: &FpPresentation, p2: &FpPresentation) -> FpPresentation {
    let r = p1.generator_count as i32;
    let s = p2.generator_count as i32;
    let shift = |w: &Word| -> Word { w.iter().map(|&x| x + x.signum() * r).collect() };
    let mut relators: Vec<Word> = p1.relators.clone();
    relators.extend(p2.relators.iter().map(shift));
    for i in 1..=r {
        for j in 1..=s {
            relators.push(vec![i, r + j, -i, -(r + j)]);
        }
    }
    FpPresentation {
        generator_count: (r + s) as usize,
        relators,
    }
}

/// Abelianization with the default matrix size limits.
pub fn abelian_invariants(p: &FpPresentation) -> Result<AbelianInvariants> {
    abelian_invariants_with(p, &SnfLimits::default())
}

pub fn abelian_invariants_with(p: &FpPresentation, limits: &SnfLimits) -> Result<AbelianInvariants> {
    let rows = p.exponent_rows();
    let factors = invariant_factors(rows, p.generator_count, limits)?;
    AbelianInvariants::from_nonzero_factors(p.generator_count, factors)
}

/// `H_1(S, Z)` for the disjoint pair `(V1, V2)`.
pub fn first_homology(group: &FiniteGroup, v1: &[ElementId], v2: &[ElementId]) -> Result<AbelianInvariants> {
    first_homology_with(group, v1, v2, Transversal::Forward, &SnfLimits::default())
}

pub fn first_homology_with(
    group: &FiniteGroup,
    v1: &[ElementId],
    v2: &[ElementId],
    transversal: Transversal,
    limits: &SnfLimits,
) -> Result<AbelianInvariants> {
    let orders = |v: &[ElementId]| -> Vec<u32> { v.iter().map(|&h| group.element_order(h)).collect() };
    let ambient = direct_product_presentation(
        &polygonal_presentation(&orders(v1)),
        &polygonal_presentation(&orders(v2)),
    );
    let table = diagonal_coset_table(group, v1, v2)?;
    table.verify(&ambient)?;
    let rewritten = rewrite_presentation(&ambient, &table, transversal);
    let h1 = abelian_invariants_with(&rewritten, limits)?;
    if h1.rank() != 0 {
        return Err(Error::Internal(format!(
            "first homology has free rank {}; the pair is not disjoint or the computation is wrong",
            h1.rank()
        )));
    }
    Ok(h1)
}
