//! Randomized invariants of the building blocks.

mod common;

use std::sync::OnceLock;

use beauville::braid::{hurwitz_move, inverse_hurwitz_move, orbit_partition};
use beauville::catalog;
use beauville::vectors::{check_spherical, enumerate};
use beauville::{ElementId, FiniteGroup, GeneratingVector, Signature};
use common::brute_force;
use proptest::prelude::*;

struct Fixture {
    group: FiniteGroup,
    sig: Signature,
    vectors: Vec<GeneratingVector>,
}

fn fixture(name: &str, sig: &str) -> Fixture {
    let group = catalog::lookup(name).unwrap().build().unwrap();
    let sig: Signature = sig.parse().unwrap();
    let vectors = enumerate(&group, &sig);
    assert!(!vectors.is_empty());
    Fixture { group, sig, vectors }
}

fn a5() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| fixture("a5", "2,2,3,5"))
}

fn z3sq() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| fixture("z3xz3", "3,3,3,3"))
}

fn sorted_orders(g: &FiniteGroup, v: &[ElementId]) -> Vec<u32> {
    let mut o: Vec<u32> = v.iter().map(|&h| g.element_order(h)).collect();
    o.sort();
    o
}

fn check_move(f: &Fixture, pick: usize, i: usize) -> Result<(), TestCaseError> {
    let g = &f.group;
    let v = f.vectors[pick % f.vectors.len()].entries();
    let i = 1 + i % (v.len() - 1);
    let w = hurwitz_move(g, v, i).unwrap();
    prop_assert_eq!(g.product(&w), ElementId::IDENTITY);
    prop_assert!(g.generates(&w));
    prop_assert_eq!(sorted_orders(g, &w), sorted_orders(g, v));
    // positions other than i, i+1 are untouched
    for k in 0..v.len() {
        if k + 1 != i && k != i {
            prop_assert_eq!(w[k], v[k]);
        }
    }
    prop_assert_eq!(inverse_hurwitz_move(g, &w, i).unwrap(), v.to_vec());
    prop_assert_eq!(
        hurwitz_move(g, &inverse_hurwitz_move(g, v, i).unwrap(), i).unwrap(),
        v.to_vec()
    );
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    #[test]
    fn hurwitz_moves_in_a5(pick in any::<usize>(), i in any::<usize>()) {
        check_move(a5(), pick, i)?;
    }

    #[test]
    fn hurwitz_moves_in_z3_squared(pick in any::<usize>(), i in any::<usize>()) {
        check_move(z3sq(), pick, i)?;
    }
}

fn orbits_s5_456() -> &'static (FiniteGroup, Vec<beauville::braid::BraidOrbit>) {
    static F: OnceLock<(FiniteGroup, Vec<beauville::braid::BraidOrbit>)> = OnceLock::new();
    F.get_or_init(|| {
        let g = catalog::lookup("s5").unwrap().build().unwrap();
        let v = enumerate(&g, &"4,5,6".parse().unwrap());
        let orbits = orbit_partition(&g, &v).unwrap();
        (g, orbits)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, ..ProptestConfig::default() })]

    #[test]
    fn braid_orbits_are_closed_under_conjugation(o in any::<usize>(), x in any::<u32>()) {
        let (g, orbits) = orbits_s5_456();
        let orbit = &orbits[o % orbits.len()];
        let x = ElementId(x % g.order() as u32);
        let conj: Vec<ElementId> = orbit
            .representative()
            .entries()
            .iter()
            .map(|&h| g.conjugate(h, x))
            .collect();
        prop_assert!(orbit.members().iter().any(|m| m.entries() == &conj[..]));
    }

    #[test]
    fn enumerated_vectors_are_spherical(pick in any::<usize>()) {
        let f = a5();
        let v = &f.vectors[pick % f.vectors.len()];
        prop_assert_eq!(check_spherical(&f.group, v.entries(), &f.sig), None);
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for (name, sig, expected) in [("z5xz5", "5,5,5", Some(480)), ("z3xz3", "3,3,3,3", None)] {
        let g = catalog::lookup(name).unwrap().build().unwrap();
        let sig: Signature = sig.parse().unwrap();
        let fast: Vec<Vec<ElementId>> = enumerate(&g, &sig).into_iter().map(|v| v.into_entries()).collect();
        let slow = brute_force(&g, &sig);
        assert_eq!(fast, slow, "{name} {sig}");
        if let Some(n) = expected {
            assert_eq!(fast.len(), n);
        }
    }
}
