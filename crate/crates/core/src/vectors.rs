//! Spherical systems of generators, stabilizer sets, and numerical invariants.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{ElementId, FiniteGroup};

/// Ordered branching orders `(m_1, .., m_r)`, each at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Signature(Vec<u32>);

impl Signature {
    pub fn new(periods: Vec<u32>) -> Result<Self> {
        if periods.is_empty() {
            return Err(Error::Input("a signature needs at least one period".into()));
        }
        if let Some(&m) = periods.iter().find(|&&m| m < 2) {
            return Err(Error::Input(format!("period {m} is smaller than 2")));
        }
        Ok(Signature(periods))
    }

    pub fn periods(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether every period divides the exponent of `group`.
    pub fn compatible_with(&self, group: &FiniteGroup) -> bool {
        let exp = group.exponent();
        self.0.iter().all(|&m| exp.is_multiple_of(m as u64))
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// Comma separated periods, e.g. `2,5,5`. Surrounding brackets are allowed.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let periods = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Input(format!("bad period {t:?} in signature {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Signature::new(periods)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("]")
    }
}

/// A tuple `(h_1, .., h_r)` with product 1 that generates the group and whose
/// entry orders equal the signature coordinatewise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratingVector {
    entries: Vec<ElementId>,
}

impl GeneratingVector {
    /// Validates all three defining conditions.
    pub fn new(group: &FiniteGroup, entries: Vec<ElementId>, signature: &Signature) -> Result<Self> {
        for &h in &entries {
            group.check_id(h)?;
        }
        if let Some(problem) = check_spherical(group, &entries, signature) {
            return Err(Error::Input(problem));
        }
        Ok(GeneratingVector { entries })
    }

    /// Wraps a tuple already known to be valid.
    pub(crate) fn new_unchecked(entries: Vec<ElementId>) -> Self {
        GeneratingVector { entries }
    }

    pub fn entries(&self) -> &[ElementId] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn into_entries(self) -> Vec<ElementId> {
        self.entries
    }

    /// Orders of the entries, which is the signature of the vector.
    pub fn signature(&self, group: &FiniteGroup) -> Signature {
        Signature(self.entries.iter().map(|&h| group.element_order(h)).collect())
    }
}

/// Returns a description of the first violated condition, if any.
pub fn check_spherical(group: &FiniteGroup, entries: &[ElementId], signature: &Signature) -> Option<String> {
    if entries.len() != signature.len() {
        return Some(format!(
            "vector has {} entries but the signature has {}",
            entries.len(),
            signature.len()
        ));
    }
    for (i, (&h, &m)) in entries.iter().zip(signature.periods()).enumerate() {
        if group.element_order(h) != m {
            return Some(format!(
                "entry {} has order {} instead of {m}",
                i + 1,
                group.element_order(h)
            ));
        }
    }
    if group.product(entries) != ElementId::IDENTITY {
        return Some("product of the entries is not the identity".into());
    }
    if !group.generates(entries) {
        return Some("entries do not generate the group".into());
    }
    None
}

/// All spherical systems of generators of `group` with signature `sig`,
/// sorted lexicographically by element id.
///
/// The first `r - 1` coordinates range over elements of the prescribed
/// orders and the last one is the inverse of their product.
pub fn enumerate(group: &FiniteGroup, sig: &Signature) -> Vec<GeneratingVector> {
    let r = sig.len();
    // a single entry would have to be the identity
    if r < 2 {
        return Vec::new();
    }
    let periods = sig.periods();
    let pools: Vec<Vec<ElementId>> = periods[..r - 1].iter().map(|&m| group.elements_of_order(m)).collect();
    let last = periods[r - 1];
    if pools.iter().any(|p| p.is_empty()) || group.elements_of_order(last).is_empty() {
        return Vec::new();
    }

    let mut out: Vec<GeneratingVector> = pools[0]
        .par_iter()
        .flat_map_iter(|&h| {
            let mut found = Vec::new();
            let mut prefix = vec![h];
            extend(group, &pools, last, &mut prefix, h, &mut found);
            found
        })
        .collect();
    out.sort();
    out
}

fn extend(
    group: &FiniteGroup,
    pools: &[Vec<ElementId>],
    last: u32,
    prefix: &mut Vec<ElementId>,
    product: ElementId,
    found: &mut Vec<GeneratingVector>,
) {
    if prefix.len() == pools.len() {
        let closing = group.inverse(product);
        if group.element_order(closing) == last && group.generates(prefix) {
            let mut entries = prefix.clone();
            entries.push(closing);
            found.push(GeneratingVector::new_unchecked(entries));
        }
        return;
    }
    for &h in &pools[prefix.len()] {
        prefix.push(h);
        extend(group, pools, last, prefix, group.mul(product, h), found);
        prefix.pop();
    }
}

/// `Σ(V)`: all conjugates of all powers of the entries, identity included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerSet {
    members: Vec<ElementId>,
}

impl StabilizerSet {
    pub fn members(&self) -> &[ElementId] {
        &self.members
    }

    pub fn contains(&self, g: ElementId) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The members other than the identity.
    pub fn nontrivial(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.members.iter().copied().filter(|&g| g != ElementId::IDENTITY)
    }
}

pub fn stabilizer_set(group: &FiniteGroup, v: &[ElementId]) -> StabilizerSet {
    let classes = group.conjugacy_classes();
    let mut class_hit = vec![false; classes.len()];
    for &h in v {
        let mut p = ElementId::IDENTITY;
        for _ in 0..group.element_order(h) {
            class_hit[classes.class_of(p)] = true;
            p = group.mul(p, h);
        }
    }
    class_hit[classes.class_of(ElementId::IDENTITY)] = true;
    let mut members: Vec<ElementId> = class_hit
        .iter()
        .enumerate()
        .filter(|(_, &hit)| hit)
        .flat_map(|(c, _)| classes.members(c).iter().copied())
        .collect();
    members.sort();
    StabilizerSet { members }
}

/// Whether `Σ(V1) ∩ Σ(V2) = {1}`.
pub fn disjoint(group: &FiniteGroup, v1: &[ElementId], v2: &[ElementId]) -> bool {
    let s1 = stabilizer_set(group, v1);
    let s2 = stabilizer_set(group, v2);
    disjoint_sets(&s1, &s2)
}

pub fn disjoint_sets(s1: &StabilizerSet, s2: &StabilizerSet) -> bool {
    s1.nontrivial().all(|g| !s2.contains(g))
}

/// Genus of a Galois cover of the projective line with the given group order
/// and branching signature, from `2g - 2 = |G| (-2 + Σ (m_i - 1)/m_i)`.
/// Genus given by the Hurwitz formula, without requiring it to be at least 2.
pub fn hurwitz_genus(group_order: u64, sig: &Signature) -> Result<i64> {
    let l = sig
        .periods()
        .iter()
        .fold(1i128, |acc, &m| num_integer::lcm(acc, m as i128));
    let sum: i128 = sig.periods().iter().map(|&m| (m as i128 - 1) * (l / m as i128)).sum();
    let numer = group_order as i128 * (sum - 2 * l);
    if numer % l != 0 {
        return Err(Error::Inconsistency(format!(
            "Hurwitz formula gives a non-integral 2g-2 for |G| = {group_order} and {sig}"
        )));
    }
    let two_g_minus_two = numer / l;
    if two_g_minus_two % 2 != 0 {
        return Err(Error::Inconsistency(format!(
            "Hurwitz formula gives odd 2g-2 = {two_g_minus_two} for |G| = {group_order} and {sig}"
        )));
    }
    Ok((two_g_minus_two / 2 + 1) as i64)
}

pub fn curve_genus(group_order: u64, sig: &Signature) -> Result<u64> {
    let g = hurwitz_genus(group_order, sig)?;
    if g < 2 {
        return Err(Error::Validation(format!(
            "covering curve for |G| = {group_order} and {sig} has genus {g} < 2"
        )));
    }
    Ok(g as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    pub g1: i64,
    pub g2: i64,
    /// Holomorphic Euler characteristic.
    pub chi: i64,
    pub pg: i64,
    pub q: u64,
    /// Topological Euler number, equal to `c_2`.
    pub euler: i64,
    /// Dimension of the moduli family, `r + s - 6`.
    pub dimension: u64,
}

impl SurfaceInvariants {
    pub fn compute(group_order: u64, t1: &Signature, t2: &Signature) -> Result<Self> {
        curve_genus(group_order, t1)?;
        curve_genus(group_order, t2)?;
        Self::from_hurwitz(group_order, t1, t2)
    }

    /// Same formulas without the requirement `g >= 2`; used to describe
    /// signature pairs that admit no generating vectors at all.
    pub fn from_hurwitz(group_order: u64, t1: &Signature, t2: &Signature) -> Result<Self> {
        let g1 = hurwitz_genus(group_order, t1)?;
        let g2 = hurwitz_genus(group_order, t2)?;
        let prod = (g1 - 1) * (g2 - 1);
        if prod % group_order as i64 != 0 {
            return Err(Error::Inconsistency(format!(
                "(g1-1)(g2-1) = {prod} is not divisible by |G| = {group_order}"
            )));
        }
        let chi = prod / group_order as i64;
        let dimension = (t1.len() + t2.len())
            .checked_sub(6)
            .ok_or_else(|| Error::Validation(format!("signatures {t1} and {t2} are too short")))?
            as u64;
        Ok(SurfaceInvariants {
            g1,
            g2,
            chi,
            pg: chi - 1,
            q: 0,
            euler: 4 * chi,
            dimension,
        })
    }
}

pub fn surface_invariants(group: &FiniteGroup, t1: &Signature, t2: &Signature) -> Result<SurfaceInvariants> {
    SurfaceInvariants::compute(group.order() as u64, t1, t2)
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

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    fn z5sq() -> FiniteGroup {
        group(10, &["(1 2 3 4 5)", "(6 7 8 9 10)"])
    }

    #[test]
    fn signature_parsing() {
        assert_eq!(sig("2,5,5").periods(), &[2, 5, 5]);
        assert_eq!(sig("[3, 3, 4]").to_string(), "[3,3,4]");
        assert!("2,1,5".parse::<Signature>().is_err());
        assert!("2,x".parse::<Signature>().is_err());
        assert!("".parse::<Signature>().is_err());
    }

    #[test]
    fn z5_squared_555_brute_force() {
        let g = z5sq();
        let got = enumerate(&g, &sig("5,5,5"));
        let mut brute = Vec::new();
        for a in g.ids() {
            for b in g.ids() {
                let c = g.inverse(g.mul(a, b));
                if g.element_order(a) == 5
                    && g.element_order(b) == 5
                    && g.element_order(c) == 5
                    && g.subgroup_order(&[a, b]) == 25
                {
                    brute.push(vec![a, b, c]);
                }
            }
        }
        assert_eq!(brute.len(), 480);
        let got: Vec<Vec<ElementId>> = got.into_iter().map(|v| v.into_entries()).collect();
        assert_eq!(got, brute);
    }

    #[test]
    fn no_elements_of_required_order() {
        let z2 = group(2, &["(1 2)"]);
        assert!(enumerate(&z2, &sig("3,3,3")).is_empty());
    }

    #[test]
    fn a5_outputs_are_valid() {
        let a5 = group(5, &["(1 2 3 4 5)", "(1 2)(3 4)"]);
        let t = sig("2,5,5");
        let vs = enumerate(&a5, &t);
        assert!(!vs.is_empty());
        for v in &vs {
            let e = v.entries();
            // independent recheck
            let mut prod = a5.element(ElementId::IDENTITY).clone();
            for &h in e {
                prod = crate::perm::compose(&prod, a5.element(h)).unwrap();
            }
            assert!(prod.is_identity());
            assert_eq!(a5.element(e[0]).order(), 2);
            assert_eq!(a5.element(e[1]).order(), 5);
            assert_eq!(a5.element(e[2]).order(), 5);
            assert_eq!(a5.subgroup_order(e), 60);
            assert_eq!(v.signature(&a5), t);
        }
    }

    #[test]
    fn generating_vector_validation() {
        let g = z5sq();
        let a = g.generator_ids()[0];
        let b = g.generator_ids()[1];
        let c = g.inverse(g.mul(a, b));
        let t = sig("5,5,5");
        assert!(GeneratingVector::new(&g, vec![a, b, c], &t).is_ok());
        assert!(GeneratingVector::new(&g, vec![a, b, b], &t).is_err());
        let a2 = g.pow(a, 2);
        let a3 = g.pow(a, 2);
        assert!(GeneratingVector::new(&g, vec![a, a2, a3], &t).is_err());
        assert!(GeneratingVector::new(&g, vec![a, b], &t).is_err());
    }

    #[test]
    fn stabilizer_trivial_group() {
        let t = group(1, &["()"]);
        let s = stabilizer_set(&t, &[ElementId::IDENTITY]);
        assert_eq!(s.members(), &[ElementId::IDENTITY]);
    }

    #[test]
    fn stabilizer_z5_squared_is_three_lines() {
        let g = z5sq();
        let a = g.generator_ids()[0];
        let b = g.generator_ids()[1];
        let c = g.inverse(g.mul(a, b));
        let s = stabilizer_set(&g, &[a, b, c]);
        let mut expect: Vec<ElementId> = (0..5)
            .flat_map(|k| [g.pow(a, k), g.pow(b, k), g.pow(g.mul(a, b), k)])
            .collect();
        expect.sort();
        expect.dedup();
        assert_eq!(expect.len(), 13);
        assert_eq!(s.members(), &expect[..]);
    }

    #[test]
    fn stabilizer_a5_brute_force() {
        let a5 = group(5, &["(1 2 3 4 5)", "(1 2)(3 4)"]);
        for v in enumerate(&a5, &sig("2,5,5")).iter().take(20) {
            let mut brute = Vec::new();
            for x in a5.ids() {
                for &h in v.entries() {
                    for j in 0..a5.element_order(h) as i64 {
                        brute.push(a5.conjugate(a5.pow(h, j), x));
                    }
                }
            }
            brute.sort();
            brute.dedup();
            let s = stabilizer_set(&a5, v.entries());
            assert_eq!(s.members(), &brute[..]);
            // squares of a 5-cycle lie in the other class, so both classes appear
            assert_eq!(s.len(), 1 + 15 + 24);
        }
    }

    #[test]
    fn disjointness() {
        let g = z5sq();
        let a = g.generator_ids()[0];
        let b = g.generator_ids()[1];
        // lines of (Z5)^2: <a> and <a^k b> for k = 0..4
        let v1 = [a, b, g.inverse(g.mul(a, b))];
        assert!(!disjoint(&g, &v1, &v1));
        // a^2 b, a^4 b^3 and their product a b^4 span the lines k = 2, 3, 4
        let x = g.mul(g.pow(a, 2), b);
        let y = g.mul(g.pow(a, 4), g.pow(b, 3));
        assert_eq!(g.mul(x, y), g.mul(a, g.pow(b, 4)));
        let v2 = [x, y, g.inverse(g.mul(x, y))];
        assert!(disjoint(&g, &v1, &v2));
        assert!(disjoint(&g, &v2, &v1));
        // brute force over the definition
        let brute = |v: &[ElementId]| -> Vec<ElementId> {
            let mut out: Vec<_> = v
                .iter()
                .flat_map(|&h| (1..5).map(move |j| (h, j)))
                .map(|(h, j)| g.pow(h, j))
                .collect();
            out.sort();
            out.dedup();
            out
        };
        let (s1, s2) = (brute(&v1), brute(&v2));
        assert!(s1.iter().all(|e| !s2.contains(e)));
        let v3 = [a, x, g.inverse(g.mul(a, x))];
        assert!(!disjoint(&g, &v1, &v3));
    }

    #[test]
    fn a5_555_pairs_never_disjoint() {
        let a5 = group(5, &["(1 2 3 4 5)", "(1 2)(3 4)"]);
        let vs = enumerate(&a5, &sig("5,5,5"));
        assert!(!vs.is_empty());
        let sets: Vec<_> = vs.iter().map(|v| stabilizer_set(&a5, v.entries())).collect();
        for s1 in &sets {
            for s2 in &sets {
                assert!(!disjoint_sets(s1, s2));
            }
        }
    }

    #[test]
    fn genus_values() {
        assert_eq!(curve_genus(25, &sig("5,5,5")).unwrap(), 6);
        assert_eq!(curve_genus(49, &sig("7,7,7")).unwrap(), 15);
        assert_eq!(curve_genus(120, &sig("4,4,5")).unwrap(), 19);
        assert_eq!(curve_genus(120, &sig("3,6,6")).unwrap(), 21);
        // spherical and euclidean triangle groups
        assert!(matches!(curve_genus(60, &sig("2,3,5")), Err(Error::Validation(_))));
        assert!(matches!(curve_genus(6, &sig("3,3,3")), Err(Error::Validation(_))));
        // 7 * (-2 + 1/2 + 1/2 + 1/2 + 2/3) is not an integer
        assert!(matches!(curve_genus(7, &sig("2,2,2,3")), Err(Error::Inconsistency(_))));
    }

    #[test]
    fn surface_invariant_values() {
        let inv = SurfaceInvariants::compute(25, &sig("5,5,5"), &sig("5,5,5")).unwrap();
        assert_eq!((inv.chi, inv.pg, inv.q, inv.euler, inv.dimension), (1, 0, 0, 4, 0));
        let inv = SurfaceInvariants::compute(49, &sig("7,7,7"), &sig("7,7,7")).unwrap();
        assert_eq!(inv.chi, 4);
        let inv = SurfaceInvariants::compute(120, &sig("4,4,5"), &sig("3,6,6")).unwrap();
        assert_eq!(inv.chi, 3);
        let inv = SurfaceInvariants::compute(60, &sig("2,5,5"), &sig("3,3,3,3")).unwrap();
        assert_eq!(inv.dimension, 1);
        let inv = SurfaceInvariants::compute(60, &sig("3,3,5"), &sig("2,2,2,2,2")).unwrap();
        assert_eq!((inv.dimension, inv.chi), (2, 1));
    }
}
