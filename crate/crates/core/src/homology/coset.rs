use std::collections::VecDeque;

use super::{free_reduce, FpPresentation, Word};
use crate::error::{Error, Result};
use crate::group::{ElementId, FiniteGroup};

/// Right action of the ambient generators on the cosets of a subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    size: usize,
    // action[k][c] = c · generator k
    action: Vec<Vec<u32>>,
    inverse_action: Vec<Vec<u32>>,
    base: u32,
}

/// Order in which the Schreier tree explores generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Transversal {
    #[default]
    Forward,
    Reverse,
}

impl CosetTable {
    pub fn from_actions(action: Vec<Vec<u32>>, base: u32) -> Result<Self> {
        let size = action.first().map_or(1, |a| a.len());
        let mut inverse_action = Vec::with_capacity(action.len());
        for (k, row) in action.iter().enumerate() {
            if row.len() != size {
                return Err(Error::Input(format!("action row {k} has the wrong length")));
            }
            let mut inv = vec![u32::MAX; size];
            for (c, &d) in row.iter().enumerate() {
                if d as usize >= size || inv[d as usize] != u32::MAX {
                    return Err(Error::Internal(format!("action of generator {k} is not a bijection")));
                }
                inv[d as usize] = c as u32;
            }
            inverse_action.push(inv);
        }
        if base as usize >= size {
            return Err(Error::Input("base point out of range".into()));
        }
        Ok(CosetTable {
            size,
            action,
            inverse_action,
            base,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn generator_count(&self) -> usize {
        self.action.len()
    }

    pub fn action(&self, k: usize) -> &[u32] {
        &self.action[k]
    }

    #[inline]
    fn step(&self, c: u32, letter: i32) -> u32 {
        let k = letter.unsigned_abs() as usize - 1;
        if letter > 0 {
            self.action[k][c as usize]
        } else {
            self.inverse_action[k][c as usize]
        }
    }

    /// Coset reached from `c` by reading `word` left to right.
    pub fn trace(&self, c: u32, word: &[i32]) -> u32 {
        word.iter().fold(c, |d, &x| self.step(d, x))
    }

    /// Checks transitivity from the base point and that every relator of
    /// `p` fixes every coset.
    pub fn verify(&self, p: &FpPresentation) -> Result<()> {
        if p.generator_count() != self.generator_count() {
            return Err(Error::Internal(format!(
                "presentation has {} generators, table has {}",
                p.generator_count(),
                self.generator_count()
            )));
        }
        let mut seen = vec![false; self.size];
        seen[self.base as usize] = true;
        let mut queue = VecDeque::from([self.base]);
        let mut reached = 1;
        while let Some(c) = queue.pop_front() {
            for row in &self.action {
                let d = row[c as usize];
                if !seen[d as usize] {
                    seen[d as usize] = true;
                    reached += 1;
                    queue.push_back(d);
                }
            }
        }
        if reached != self.size {
            return Err(Error::Internal("coset action is not transitive".into()));
        }
        for (i, rel) in p.relators().iter().enumerate() {
            for c in 0..self.size as u32 {
                if self.trace(c, rel) != c {
                    return Err(Error::Internal(format!(
                        "relator {} acts nontrivially on coset {c}",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Cosets of the fibre product in `T_1 × T_2`, indexed by `G` through
/// `(a, b) ↦ ψ_1(a)^-1 ψ_2(b)`. A first-factor generator with image `h` acts
/// by `c ↦ h^-1 c`, a second-factor generator with image `k` by `c ↦ c k`.
pub fn diagonal_coset_table(group: &FiniteGroup, v1: &[ElementId], v2: &[ElementId]) -> Result<CosetTable> {
    for &h in v1.iter().chain(v2) {
        group.check_id(h)?;
    }
    let mut action = Vec::with_capacity(v1.len() + v2.len());
    for &h in v1 {
        let hinv = group.inverse(h);
        action.push(group.ids().map(|c| group.mul(hinv, c).0).collect());
    }
    for &k in v2 {
        action.push(group.ids().map(|c| group.mul(c, k).0).collect());
    }
    CosetTable::from_actions(action, ElementId::IDENTITY.0)
}

/// Reidemeister–Schreier presentation of the subgroup stabilizing the base
/// coset. Schreier generators are the non-tree pairs (coset, generator),
/// numbered coset-major; there is one rewritten relator per (coset, relator).
pub fn rewrite_presentation(p: &FpPresentation, table: &CosetTable, transversal: Transversal) -> FpPresentation {
    let n = table.size();
    let ngens = table.generator_count();
    let order: Vec<usize> = match transversal {
        Transversal::Forward => (0..ngens).collect(),
        Transversal::Reverse => (0..ngens).rev().collect(),
    };
    let mut in_tree = vec![false; n * ngens];
    let mut seen = vec![false; n];
    seen[table.base() as usize] = true;
    let mut queue = VecDeque::from([table.base()]);
    while let Some(c) = queue.pop_front() {
        for &k in &order {
            let d = table.action(k)[c as usize];
            if !seen[d as usize] {
                seen[d as usize] = true;
                in_tree[c as usize * ngens + k] = true;
                queue.push_back(d);
            }
        }
    }
    // 1-based Schreier generator numbers, 0 on tree edges
    let mut label = vec![0i32; n * ngens];
    let mut next = 0;
    for (slot, &tree) in label.iter_mut().zip(&in_tree) {
        if !tree {
            next += 1;
            *slot = next;
        }
    }

    let mut relators: Vec<Word> = Vec::with_capacity(n * p.relators().len());
    for c in 0..n as u32 {
        for rel in p.relators() {
            let mut word = Vec::with_capacity(rel.len());
            let mut d = c;
            for &x in rel {
                let k = x.unsigned_abs() as usize - 1;
                if x > 0 {
                    let l = label[d as usize * ngens + k];
                    if l != 0 {
                        word.push(l);
                    }
                    d = table.step(d, x);
                } else {
                    let e = table.step(d, x);
                    let l = label[e as usize * ngens + k];
                    if l != 0 {
                        word.push(-l);
                    }
                    d = e;
                }
            }
            debug_assert_eq!(d, c);
            relators.push(free_reduce(&word));
        }
    }
    FpPresentation::new(next as usize, relators).expect("labels are in range")
}

#[cfg(test)]
mod tests {
    use super::super::{abelian_invariants, direct_product_presentation, polygonal_presentation};
    use super::*;
    use crate::perm::Permutation;

    fn group(degree: usize, gens: &[&str]) -> FiniteGroup {
        let gens = gens
            .iter()
            .map(|s| Permutation::parse_cycles(degree, s).unwrap())
            .collect();
        FiniteGroup::close(degree, gens).unwrap()
    }

    #[test]
    fn trivial_group_table() {
        let t = group(1, &["()"]);
        let e = ElementId::IDENTITY;
        let table = diagonal_coset_table(&t, &[e, e], &[e, e]).unwrap();
        assert_eq!(table.size(), 1);
        for k in 0..4 {
            assert_eq!(table.action(k), &[0]);
        }
        let p = polygonal_presentation(&[2, 3, 7]);
        let rewritten = rewrite_presentation(
            &p,
            &CosetTable::from_actions(vec![vec![0]; 3], 0).unwrap(),
            Transversal::Forward,
        );
        assert_eq!(rewritten, p);
    }

    #[test]
    fn left_and_right_translations_commute() {
        let a5 = group(5, &["(1 2 3 4 5)", "(1 2)(3 4)"]);
        let gens = a5.generator_ids().to_vec();
        let table = diagonal_coset_table(&a5, &gens, &gens).unwrap();
        let (l, r) = (table.action(0), table.action(3));
        for c in 0..60 {
            assert_eq!(l[r[c] as usize], r[l[c] as usize]);
        }
    }

    #[test]
    fn z5_squared_relators_act_trivially() {
        let g = group(10, &["(1 2 3 4 5)", "(6 7 8 9 10)"]);
        let a = g.generator_ids()[0];
        let b = g.generator_ids()[1];
        let v = vec![a, b, g.inverse(g.mul(a, b))];
        let table = diagonal_coset_table(&g, &v, &v).unwrap();
        for k in 0..6 {
            for c in 0..25u32 {
                assert_eq!(table.trace(c, &[k + 1; 5]), c);
            }
        }
        let p = polygonal_presentation(&[5, 5, 5]);
        let ambient = direct_product_presentation(&p, &p);
        table.verify(&ambient).unwrap();
    }

    #[test]
    fn bad_relator_is_detected() {
        let g = group(10, &["(1 2 3 4 5)", "(6 7 8 9 10)"]);
        let a = g.generator_ids()[0];
        let b = g.generator_ids()[1];
        // product is not the identity
        let v = vec![a, b, b];
        let table = diagonal_coset_table(&g, &v, &v).unwrap();
        let p = polygonal_presentation(&[5, 5, 5]);
        assert!(matches!(
            table.verify(&direct_product_presentation(&p, &p)),
            Err(Error::Internal(_))
        ));
    }

    #[test]
    fn schreier_counts() {
        let a5 = group(5, &["(1 2 3 4 5)", "(1 2)(3 4)"]);
        let sig: crate::vectors::Signature = "2,5,5".parse().unwrap();
        let v = crate::vectors::enumerate(&a5, &sig)[0].entries().to_vec();
        let p = polygonal_presentation(&[2, 5, 5]);
        let ambient = direct_product_presentation(&p, &p);
        let table = diagonal_coset_table(&a5, &v, &v).unwrap();
        let rw = rewrite_presentation(&ambient, &table, Transversal::Forward);
        assert_eq!(rw.generator_count(), 60 * 6 - 59);
        assert_eq!(rw.generator_count(), 301);
        assert_eq!(rw.relators().len(), 60 * 17);
        assert_eq!(rw.relators().len(), 1020);
        // the pair is not disjoint, but the transversal still must not matter
        let h = abelian_invariants(&rw).unwrap();
        let rev = abelian_invariants(&rewrite_presentation(&ambient, &table, Transversal::Reverse)).unwrap();
        assert_eq!(h, rev);
    }
}
