//! Integer Smith normal form for sparse relation matrices.
//!
//! Elimination runs on sparse rows with pivots chosen by smallest absolute
//! value and then smallest Markowitz cost, so unit pivots in short rows and
//! columns are consumed first. Once the remaining block is small or dense it
//! is finished by dense elimination. Everything first runs on checked `i64`
//! arithmetic; any overflow restarts the computation on `BigInt`.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct SnfLimits {
    pub max_rows: usize,
    pub max_cols: usize,
    /// Switch to dense elimination once both dimensions are below this.
    pub dense_dim: usize,
    /// Switch to dense elimination once the fill ratio exceeds this.
    pub dense_density: f64,
    /// Never build a dense block with more entries than this.
    pub dense_max_entries: usize,
}

impl Default for SnfLimits {
    fn default() -> Self {
        SnfLimits {
            max_rows: 50_000,
            max_cols: 20_000,
            dense_dim: 200,
            dense_density: 0.2,
            dense_max_entries: 4_000_000,
        }
    }
}

trait Scalar: Clone + PartialEq + Sized {
    fn from_i64(v: i64) -> Self;
    fn vanishes(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn cmp_abs(&self, other: &Self) -> Ordering;
    /// `(q, r)` with `self = q d + r` and `0 <= r < |d|`.
    fn div_rem(&self, d: &Self) -> Option<(Self, Self)>;
    /// `self - q x`.
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        Some((self.checked_div_euclid(*d)?, self.checked_rem_euclid(*d)?))
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*x)?)
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let (mut q, mut r) = self.div_mod_floor(d);
        if r.is_negative() {
            // only when d < 0
            r -= d;
            q += 1;
        }
        Some((q, r))
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        Some(self - q * x)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Nonzero invariant factors of the cokernel of the matrix whose rows are
/// `rows` (sparse `(column, value)` lists), as a divisibility chain including
/// leading ones. The free rank is `ncols` minus the length of the result.
pub fn invariant_factors(rows: Vec<Vec<(usize, i64)>>, ncols: usize, limits: &SnfLimits) -> Result<Vec<BigInt>> {
    if rows.len() > limits.max_rows || ncols > limits.max_cols {
        return Err(Error::Resource(format!(
            "relation matrix {} x {ncols} exceeds the limit {} x {}",
            rows.len(),
            limits.max_rows,
            limits.max_cols
        )));
    }
    let mut unique: HashSet<Vec<(u32, i64)>> = HashSet::new();
    for mut row in rows {
        row.sort_unstable_by_key(|e| e.0);
        let mut merged: Vec<(u32, i64)> = Vec::with_capacity(row.len());
        for (c, v) in row {
            if c >= ncols {
                return Err(Error::Input(format!("column {c} out of range for {ncols} columns")));
            }
            match merged.last_mut() {
                Some((lc, lv)) if *lc as usize == c => {
                    *lv = lv
                        .checked_add(v)
                        .ok_or_else(|| Error::Resource("matrix entry overflows i64".into()))?
                }
                _ => merged.push((c as u32, v)),
            }
        }
        merged.retain(|e| e.1 != 0);
        if merged.is_empty() {
            continue;
        }
        if merged[0].1 < 0 {
            if merged.iter().any(|e| e.1 == i64::MIN) {
                return Err(Error::Resource("matrix entry overflows i64".into()));
            }
            merged.iter_mut().for_each(|e| e.1 = -e.1);
        }
        unique.insert(merged);
    }
    let mut rows: Vec<Vec<(u32, i64)>> = unique.into_iter().collect();
    rows.sort_unstable();

    let diagonal = match eliminate::<i64>(&rows, ncols, limits) {
        Some(d) => d,
        None => eliminate::<BigInt>(&rows, ncols, limits).expect("BigInt arithmetic cannot overflow"),
    };
    Ok(divisibility_chain(diagonal))
}

/// Rearranges positive diagonal entries into `d_1 | d_2 | ..` with the same cokernel.
pub(crate) fn divisibility_chain(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            if !(&d[j] % &d[i]).is_zero() {
                let g = d[i].gcd(&d[j]);
                let l = d[i].lcm(&d[j]);
                d[i] = g;
                d[j] = l;
            }
        }
    }
    d
}

struct Sparse<S> {
    rows: Vec<Vec<(u32, S)>>,
    col_rows: Vec<Vec<u32>>,
    col_count: Vec<u32>,
    live_rows: usize,
    live_cols: usize,
    nnz: usize,
}

impl<S: Scalar> Sparse<S> {
    fn new(rows: &[Vec<(u32, i64)>], ncols: usize) -> Self {
        let mut col_rows = vec![Vec::new(); ncols];
        let mut col_count = vec![0u32; ncols];
        let mut nnz = 0;
        let rows: Vec<Vec<(u32, S)>> = rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                for &(c, _) in row {
                    col_rows[c as usize].push(r as u32);
                    col_count[c as usize] += 1;
                }
                nnz += row.len();
                row.iter().map(|&(c, v)| (c, S::from_i64(v))).collect()
            })
            .collect();
        let live_cols = col_count.iter().filter(|&&k| k > 0).count();
        Sparse {
            live_rows: rows.len(),
            rows,
            col_rows,
            col_count,
            live_cols,
            nnz,
        }
    }

    fn entry(&self, r: usize, c: u32) -> Option<&S> {
        let row = &self.rows[r];
        row.binary_search_by_key(&c, |e| e.0).ok().map(|i| &row[i].1)
    }

    fn dec_col(&mut self, c: u32) {
        let k = &mut self.col_count[c as usize];
        *k -= 1;
        if *k == 0 {
            self.live_cols -= 1;
        }
    }

    fn inc_col(&mut self, c: u32, r: u32) {
        let k = &mut self.col_count[c as usize];
        if *k == 0 {
            self.live_cols += 1;
        }
        *k += 1;
        self.col_rows[c as usize].push(r);
    }

    /// `row[t] -= q * pivot`.
    fn axpy(&mut self, t: usize, q: &S, pivot: &[(u32, S)]) -> Option<()> {
        let old = std::mem::take(&mut self.rows[t]);
        let mut out = Vec::with_capacity(old.len() + pivot.len());
        let (mut i, mut j) = (0, 0);
        while i < old.len() || j < pivot.len() {
            let take_old = j == pivot.len() || (i < old.len() && old[i].0 < pivot[j].0);
            let take_piv = i == old.len() || (j < pivot.len() && pivot[j].0 < old[i].0);
            if take_old {
                out.push(old[i].clone());
                i += 1;
            } else if take_piv {
                let (c, ref x) = pivot[j];
                let v = S::from_i64(0).sub_mul(q, x)?;
                if !v.vanishes() {
                    self.inc_col(c, t as u32);
                    self.nnz += 1;
                    out.push((c, v));
                }
                j += 1;
            } else {
                let c = old[i].0;
                let v = old[i].1.sub_mul(q, &pivot[j].1)?;
                if v.vanishes() {
                    self.dec_col(c);
                    self.nnz -= 1;
                } else {
                    out.push((c, v));
                }
                i += 1;
                j += 1;
            }
        }
        if out.is_empty() {
            self.live_rows -= 1;
        }
        self.rows[t] = out;
        Some(())
    }

    fn pick_pivot(&self) -> Option<(usize, u32)> {
        let mut best: Option<(usize, u32, &S, u64)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            let rl = row.len() as u64;
            for (c, v) in row {
                let cost = (rl - 1) * (self.col_count[*c as usize] as u64 - 1);
                let better = match &best {
                    None => true,
                    Some((_, _, bv, bc)) => match v.cmp_abs(bv) {
                        Ordering::Less => true,
                        Ordering::Equal => cost < *bc,
                        Ordering::Greater => false,
                    },
                };
                if better {
                    if v.is_unit() && cost == 0 {
                        return Some((r, *c));
                    }
                    best = Some((r, *c, v, cost));
                }
            }
        }
        best.map(|(r, c, _, _)| (r, c))
    }

    fn wants_dense(&self, limits: &SnfLimits) -> bool {
        let area = self.live_rows * self.live_cols;
        if area == 0 || area > limits.dense_max_entries {
            return false;
        }
        (self.live_rows < limits.dense_dim && self.live_cols < limits.dense_dim)
            || self.nnz as f64 > limits.dense_density * area as f64
    }

    fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut col_index = vec![usize::MAX; self.col_count.len()];
        let mut next = 0;
        for (c, &k) in self.col_count.iter().enumerate() {
            if k > 0 {
                col_index[c] = next;
                next += 1;
            }
        }
        self.rows
            .iter()
            .filter(|r| !r.is_empty())
            .map(|row| {
                let mut dense = vec![BigInt::zero(); next];
                for (c, v) in row {
                    dense[col_index[*c as usize]] = v.to_bigint();
                }
                dense
            })
            .collect()
    }
}

/// Diagonal entries (absolute values, unordered); `None` on overflow.
fn eliminate<S: Scalar>(rows: &[Vec<(u32, i64)>], ncols: usize, limits: &SnfLimits) -> Option<Vec<BigInt>> {
    let mut m = Sparse::<S>::new(rows, ncols);
    let mut diagonal = Vec::new();
    while m.live_rows > 0 {
        if m.wants_dense(limits) {
            diagonal.extend(dense_diagonal(m.to_dense()));
            return Some(diagonal);
        }
        let Some((r, c)) = m.pick_pivot() else { break };
        let pivot_value = m.entry(r, c).expect("pivot entry").clone();

        // clear the pivot column with row operations
        let pivot_row = std::mem::take(&mut m.rows[r]);
        let mut targets: Vec<u32> = std::mem::take(&mut m.col_rows[c as usize]);
        targets.sort_unstable();
        targets.dedup();
        let mut keep = vec![r as u32];
        for t in targets {
            let t = t as usize;
            if t == r {
                continue;
            }
            let Some(v) = m.entry(t, c).cloned() else { continue };
            let (q, rem) = v.div_rem(&pivot_value)?;
            m.axpy(t, &q, &pivot_row)?;
            if !rem.vanishes() {
                keep.push(t as u32);
            }
        }
        m.rows[r] = pivot_row;
        let column_done = keep.len() == 1;
        m.col_rows[c as usize] = keep;
        if !column_done {
            continue;
        }

        // the column holds only the pivot, so column operations touch only row r
        let row = std::mem::take(&mut m.rows[r]);
        let mut reduced = Vec::with_capacity(row.len());
        for (c2, v) in row {
            if c2 == c {
                reduced.push((c2, v));
                continue;
            }
            let (_, rem) = v.div_rem(&pivot_value)?;
            if rem.vanishes() {
                m.dec_col(c2);
                m.nnz -= 1;
            } else {
                reduced.push((c2, rem));
            }
        }
        if reduced.len() == 1 {
            diagonal.push(pivot_value.to_bigint().abs());
            m.dec_col(c);
            m.nnz -= 1;
            m.live_rows -= 1;
            m.col_rows[c as usize].clear();
        } else {
            m.rows[r] = reduced;
        }
    }
    Some(diagonal)
}

/// Dense elimination; returns the absolute values of the nonzero diagonal.
#[allow(clippy::needless_range_loop)]
fn dense_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_abs(&a, t..rows, t..cols) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t].clone();
            let mut done = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, rem) = Scalar::div_rem(&a[i][t], &p).expect("BigInt");
                let (head, tail) = a.split_at_mut(i);
                let src = &head[t];
                for (dst, s) in tail[0][t..].iter_mut().zip(&src[t..]) {
                    if !s.is_zero() {
                        *dst -= &q * s;
                    }
                }
                if !rem.is_zero() {
                    done = false;
                }
            }
            if done {
                for j in t + 1..cols {
                    if a[t][j].is_zero() {
                        continue;
                    }
                    let (_, rem) = Scalar::div_rem(&a[t][j], &p).expect("BigInt");
                    if !rem.is_zero() {
                        done = false;
                    }
                    a[t][j] = rem;
                }
            }
            if done {
                break;
            }
            // bring the smallest entry of row t or column t to the pivot
            let mut best = (t, t);
            for i in t..rows {
                if !a[i][t].is_zero() && a[i][t].cmp_abs(&a[best.0][best.1]) == Ordering::Less {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if !a[t][j].is_zero() && a[t][j].cmp_abs(&a[best.0][best.1]) == Ordering::Less {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}

fn min_abs(a: &[Vec<BigInt>], rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if a[i][j].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[i][j].cmp_abs(&a[bi][bj]) == Ordering::Less) {
                best = Some((i, j));
            }
        }
    }
    best
}
