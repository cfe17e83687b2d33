//! Automorphism groups of small materialized groups.
//!
//! A short generating sequence is chosen greedily, candidate images are
//! restricted to elements with matching order and conjugacy class size, and
//! every complete assignment is extended along a BFS tree over the
//! generating sequence. Surviving maps are checked to be bijective and
//! multiplicative on all pairs before they are accepted.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{ElementId, FiniteGroup};

pub const DEFAULT_AUT_CAP: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    map: Vec<ElementId>,
}

impl Automorphism {
    pub fn identity(order: usize) -> Self {
        Automorphism {
            map: (0..order as u32).map(ElementId).collect(),
        }
    }

    /// Conjugation `x ↦ g x g^-1`.
    pub fn inner(group: &FiniteGroup, g: ElementId) -> Self {
        Automorphism {
            map: group.ids().map(|x| group.conjugate(x, g)).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, g: ElementId) -> ElementId {
        self.map[g.index()]
    }

    pub fn map(&self) -> &[ElementId] {
        &self.map
    }

    /// Coordinatewise image of a vector of elements.
    pub fn apply_to_vector(&self, v: &[ElementId]) -> Vec<ElementId> {
        v.iter().map(|&g| self.apply(g)).collect()
    }

    /// `self` after `other`: `x ↦ self(other(x))`.
    pub fn after(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            map: other.map.iter().map(|&g| self.apply(g)).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut map = vec![ElementId::IDENTITY; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            map[y.index()] = ElementId(x as u32);
        }
        Automorphism { map }
    }
}

/// Coordinatewise image `φ(V)`.
pub fn apply_to_vector(phi: &Automorphism, v: &[ElementId]) -> Vec<ElementId> {
    phi.apply_to_vector(v)
}

/// Greedy generating sequence: repeatedly add the element whose addition
/// gives the largest subgroup, ties broken by smallest id.
pub fn greedy_generating_sequence(group: &FiniteGroup) -> Vec<ElementId> {
    let n = group.order();
    let mut seq = Vec::new();
    let mut current = 1;
    while current < n {
        let best = group
            .ids()
            .skip(1)
            .map(|g| {
                let mut trial = seq.clone();
                trial.push(g);
                (group.subgroup_order(&trial), g)
            })
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .expect("nontrivial group");
        seq.push(best.1);
        current = best.0;
    }
    seq
}

struct Extension<'a> {
    group: &'a FiniteGroup,
    gens: Vec<ElementId>,
    // elements in BFS order over `gens`, with (parent, generator index)
    order: Vec<(ElementId, ElementId, usize)>,
}

impl<'a> Extension<'a> {
    fn new(group: &'a FiniteGroup, gens: Vec<ElementId>) -> Self {
        let n = group.order();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut order = Vec::with_capacity(n);
        let mut queue = vec![ElementId::IDENTITY];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for (k, &s) in gens.iter().enumerate() {
                let y = group.mul(x, s);
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    queue.push(y);
                    order.push((y, x, k));
                }
            }
            i += 1;
        }
        Extension { group, gens, order }
    }

    /// Extends generator images to a map on all of G, returning it only if
    /// it is a bijective homomorphism.
    fn extend(&self, images: &[ElementId]) -> Option<Vec<ElementId>> {
        let g = self.group;
        let n = g.order();
        let mut map = vec![ElementId::IDENTITY; n];
        let mut hit = vec![false; n];
        hit[0] = true;
        for &(y, x, k) in &self.order {
            let img = g.mul(map[x.index()], images[k]);
            if hit[img.index()] {
                return None;
            }
            hit[img.index()] = true;
            map[y.index()] = img;
        }
        // φ(x s) = φ(x) φ(s) for every x and generator s makes φ a homomorphism
        for x in g.ids() {
            for (k, &s) in self.gens.iter().enumerate() {
                if map[g.mul(x, s).index()] != g.mul(map[x.index()], images[k]) {
                    return None;
                }
            }
        }
        Some(map)
    }
}

fn search(
    ext: &Extension<'_>,
    candidates: &[Vec<ElementId>],
    prefix: &mut Vec<ElementId>,
    out: &mut Vec<Automorphism>,
) {
    if prefix.len() == candidates.len() {
        if let Some(map) = ext.extend(prefix) {
            out.push(Automorphism { map });
        }
        return;
    }
    let depth = prefix.len();
    for &c in &candidates[depth] {
        prefix.push(c);
        search(ext, candidates, prefix, out);
        prefix.pop();
    }
}

fn verify_multiplicative(group: &FiniteGroup, phi: &Automorphism) -> bool {
    group.ids().all(|a| {
        let fa = phi.apply(a);
        group
            .ids()
            .all(|b| phi.apply(group.mul(a, b)) == group.mul(fa, phi.apply(b)))
    })
}

/// All automorphisms of `group`, with the default cap on `|G|`.
pub fn compute_aut(group: &FiniteGroup) -> Result<Vec<Automorphism>> {
    compute_aut_with_cap(group, DEFAULT_AUT_CAP)
}

pub fn compute_aut_with_cap(group: &FiniteGroup, cap: usize) -> Result<Vec<Automorphism>> {
    let n = group.order();
    if n > cap {
        return Err(Error::Resource(format!(
            "automorphism search is capped at groups of order {cap}, got {n}"
        )));
    }
    if n == 1 {
        return Ok(vec![Automorphism::identity(1)]);
    }
    let gens = greedy_generating_sequence(group);
    let classes = group.conjugacy_classes();
    let candidates: Vec<Vec<ElementId>> = gens
        .iter()
        .map(|&s| {
            group
                .ids()
                .filter(|&c| {
                    group.element_order(c) == group.element_order(s)
                        && classes.size_of_class_of(c) == classes.size_of_class_of(s)
                })
                .collect()
        })
        .collect();
    let ext = Extension::new(group, gens.clone());

    // branches over the first image run in parallel; results are sorted below
    let mut auts: Vec<Automorphism> = candidates[0]
        .par_iter()
        .flat_map_iter(|&c| {
            let mut out = Vec::new();
            let mut prefix = vec![c];
            search(&ext, &candidates, &mut prefix, &mut out);
            out
        })
        .collect();

    if let Some(bad) = auts.par_iter().position_any(|phi| !verify_multiplicative(group, phi)) {
        return Err(Error::Internal(format!(
            "candidate automorphism {bad} is not multiplicative"
        )));
    }

    auts.sort_by_cached_key(|phi| phi.apply_to_vector(&gens));
    verify_group(&auts, &gens)?;
    Ok(auts)
}

/// Checks that the list is a group, comparing maps by their values on the
/// generating sequence. A generating set is grown greedily and the subgroup
/// it generates is closed by search; every product must already be listed,
/// and the search has to reach every element. A finite set closed under
/// composition is a group, so inverses need no separate check.
fn verify_group(auts: &[Automorphism], gens: &[ElementId]) -> Result<()> {
    let key = |phi: &Automorphism| phi.apply_to_vector(gens);
    let lookup: HashMap<Vec<ElementId>, usize> = auts.iter().enumerate().map(|(i, phi)| (key(phi), i)).collect();
    if lookup.len() != auts.len() {
        return Err(Error::Internal("duplicate automorphisms".into()));
    }
    let Some(&identity) = lookup.get(gens) else {
        return Err(Error::Internal("identity automorphism missing".into()));
    };
    let not_closed = || Error::Internal("automorphism list is not closed under composition".into());
    let mut reached = vec![false; auts.len()];
    reached[identity] = true;
    let mut members = vec![identity];
    let mut generators: Vec<usize> = Vec::new();
    for start in 0..auts.len() {
        if reached[start] {
            continue;
        }
        generators.push(start);
        // products of every member with the new generator, then of every new
        // member with all generators
        let mut head = 0;
        let old = members.len();
        while head < members.len() {
            let phi = &auts[members[head]];
            let gs: &[usize] = if head < old {
                &generators[generators.len() - 1..]
            } else {
                &generators
            };
            for &g in gs {
                let psi = &auts[g];
                let composite: Vec<ElementId> = gens.iter().map(|&s| phi.apply(psi.apply(s))).collect();
                let &k = lookup.get(&composite).ok_or_else(not_closed)?;
                if !reached[k] {
                    reached[k] = true;
                    members.push(k);
                }
            }
            head += 1;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn group(degree: usize, gens: &[&str]) -> FiniteGroup {
        let gens = gens
            .iter()
            .map(|s| Permutation::parse_cycles(degree, s).unwrap())
            .collect();
        FiniteGroup::close(degree, gens).unwrap()
    }

    /// Invertible 2x2 matrices over Z/p, counted by brute force.
    fn gl2_count(p: i64) -> usize {
        let mut count = 0;
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        if (a * d - b * c).rem_euclid(p) != 0 {
                            count += 1;
                        }
                    }
                }
            }
        }
        count
    }

    #[test]
    fn z5_squared_is_gl2_5() {
        let z = group(10, &["(1 2 3 4 5)", "(6 7 8 9 10)"]);
        let auts = compute_aut(&z).unwrap();
        assert_eq!(gl2_count(5), 480);
        assert_eq!(auts.len(), 480);
    }

    #[test]
    fn trivial_group() {
        let t = group(2, &["()"]);
        let auts = compute_aut(&t).unwrap();
        assert_eq!(auts, vec![Automorphism::identity(1)]);
    }

    #[test]
    fn a5_has_s5_automorphisms() {
        let a5 = group(5, &["(1 2 3 4 5)", "(1 2)(3 4)"]);
        let auts = compute_aut(&a5).unwrap();
        assert_eq!(auts.len(), 120);
        let mut inner: Vec<Automorphism> = a5.ids().map(|g| Automorphism::inner(&a5, g)).collect();
        inner.sort();
        inner.dedup();
        assert_eq!(inner.len(), 60);
        for phi in &inner {
            assert!(auts.contains(phi));
        }
        assert!(auts.contains(&Automorphism::identity(60)));
    }

    #[test]
    fn automorphisms_preserve_order_and_class_size() {
        let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
        let auts = compute_aut(&s4).unwrap();
        // S4 is complete
        assert_eq!(auts.len(), 24);
        let classes = s4.conjugacy_classes();
        for phi in &auts {
            for g in s4.ids() {
                assert_eq!(s4.element_order(phi.apply(g)), s4.element_order(g));
                assert_eq!(classes.size_of_class_of(phi.apply(g)), classes.size_of_class_of(g));
            }
        }
    }

    #[test]
    fn deterministic_output() {
        let z = group(6, &["(1 2 3)", "(4 5 6)"]);
        let a = compute_aut(&z).unwrap();
        let b = compute_aut(&z).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 48);
    }

    #[test]
    fn inner_automorphism_on_vector() {
        let a5 = group(5, &["(1 2 3 4 5)", "(1 2)(3 4)"]);
        let g = a5.generator_ids()[1];
        let v = vec![a5.generator_ids()[0], g];
        let phi = Automorphism::inner(&a5, g);
        let expect: Vec<_> = v.iter().map(|&h| a5.conjugate(h, g)).collect();
        assert_eq!(apply_to_vector(&phi, &v), expect);
        assert_eq!(apply_to_vector(&Automorphism::identity(60), &v), v);
    }

    #[test]
    fn cap() {
        let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
        assert!(matches!(compute_aut_with_cap(&s4, 10), Err(Error::Resource(_))));
    }

    #[test]
    fn group_check_rejects_incomplete_lists() {
        let a5 = group(5, &["(1 2 3 4 5)", "(1 2)(3 4)"]);
        let gens = greedy_generating_sequence(&a5);
        let mut auts = compute_aut(&a5).unwrap();
        assert!(verify_group(&auts, &gens).is_ok());
        let last = auts.pop().unwrap();
        assert!(matches!(verify_group(&auts, &gens), Err(Error::Internal(_))));
        // the inner automorphisms alone form a subgroup
        let inner: Vec<Automorphism> = a5.ids().map(|g| Automorphism::inner(&a5, g)).collect();
        assert!(verify_group(&inner, &gens).is_ok());
        auts.push(last.clone());
        auts.push(last);
        assert!(verify_group(&auts, &gens).is_err());
    }
}
