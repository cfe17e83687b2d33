//! Independent oracles shared by the test targets.

#![allow(dead_code)]

use beauville::{ElementId, FiniteGroup, Signature};
use num_integer::Integer;

/// Textbook dense Smith form on i128; returns the nonzero diagonal.
#[allow(clippy::needless_range_loop)]
pub fn naive_snf(mut a: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut done = true;
        for i in t + 1..rows {
            let q = a[i][t].div_euclid(a[t][t]);
            for j in t..cols {
                a[i][j] -= q * a[t][j];
            }
            if a[i][t] != 0 {
                done = false;
            }
        }
        for j in t + 1..cols {
            let q = a[t][j].div_euclid(a[t][t]);
            for i in t..rows {
                a[i][j] -= q * a[i][t];
            }
            if a[t][j] != 0 {
                done = false;
            }
        }
        if !done {
            continue;
        }
        // the pivot must divide the rest of the block
        let bad = (t + 1..rows)
            .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
            .find(|&(i, j)| a[i][j] % a[t][t] != 0);
        if let Some((i, _)) = bad {
            for j in t..cols {
                a[t][j] += a[i][j];
            }
            continue;
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `d_k`: gcd of all k x k minors, so that the k-th invariant factor is
/// `d_k / d_{k-1}`.
pub fn determinantal_divisors(a: &[Vec<i128>]) -> Vec<i128> {
    let rows = a.len();
    let cols = a[0].len();
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let m: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| a[i][j]).collect()).collect();
                g = g.gcd(&det(&m));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g);
    }
    out
}

/// All |G|^r tuples, filtered by the definition.
pub fn brute_force(g: &FiniteGroup, sig: &Signature) -> Vec<Vec<ElementId>> {
    let r = sig.len();
    let n = g.order() as u32;
    let mut out = Vec::new();
    let mut idx = vec![0u32; r];
    loop {
        let v: Vec<ElementId> = idx.iter().map(|&i| ElementId(i)).collect();
        let orders_ok = v.iter().zip(sig.periods()).all(|(&h, &m)| g.element_order(h) == m);
        if orders_ok && g.product(&v) == ElementId::IDENTITY && g.subgroup_order(&v) == g.order() {
            out.push(v);
        }
        let mut k = 0;
        loop {
            if k == r {
                out.sort();
                return out;
            }
            idx[k] += 1;
            if idx[k] < n {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

pub fn sparse(a: &[Vec<i128>]) -> Vec<Vec<(usize, i64)>> {
    a.iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(j, &x)| (j, x as i64))
                .collect()
        })
        .collect()
}

/// A random `rows x cols` matrix with entries in [-10, 10] and a random share of zeros.
pub fn random_matrix(rng: &mut impl rand::Rng) -> Vec<Vec<i128>> {
    let rows = rng.gen_range(1..=8);
    let cols = rng.gen_range(1..=8);
    let zero_bias = rng.gen_range(0.0..0.7);
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    if rng.gen_bool(zero_bias) {
                        0
                    } else {
                        rng.gen_range(-10..=10)
                    }
                })
                .collect()
        })
        .collect()
}

/// Invariant factors from determinantal divisors.
pub fn factors_from_minors(a: &[Vec<i128>]) -> Vec<i128> {
    let mut prev = 1i128;
    determinantal_divisors(a)
        .into_iter()
        .map(|d| {
            let f = d / prev;
            prev = d;
            f
        })
        .collect()
}
