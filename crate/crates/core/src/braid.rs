//! Hurwitz braid orbits of spherical systems of generators.
//!
//! Exploration follows the full braid action, so intermediate tuples may have
//! their orders permuted, but an orbit only keeps the tuples whose order
//! sequence equals that of the seed.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::group::{ElementId, FiniteGroup};
use crate::vectors::GeneratingVector;

pub const DEFAULT_ORBIT_CAP: usize = 10_000_000;

/// `σ_i(V) = [.., h_i h_{i+1} h_i^-1, h_i, ..]` with 1-based `i`.
pub fn hurwitz_move(group: &FiniteGroup, v: &[ElementId], i: usize) -> Result<Vec<ElementId>> {
    check_index(v, i)?;
    Ok(hurwitz_move_unchecked(group, v, i - 1))
}

/// `σ_i^-1(V) = [.., h_{i+1}, h_{i+1}^-1 h_i h_{i+1}, ..]` with 1-based `i`.
pub fn inverse_hurwitz_move(group: &FiniteGroup, v: &[ElementId], i: usize) -> Result<Vec<ElementId>> {
    check_index(v, i)?;
    let k = i - 1;
    let mut out = v.to_vec();
    let (a, b) = (v[k], v[k + 1]);
    out[k] = b;
    out[k + 1] = group.mul(group.mul(group.inverse(b), a), b);
    Ok(out)
}

fn check_index(v: &[ElementId], i: usize) -> Result<()> {
    if i == 0 || i >= v.len() {
        return Err(Error::Input(format!(
            "Hurwitz move index {i} out of range 1..={}",
            v.len().saturating_sub(1)
        )));
    }
    Ok(())
}

#[inline]
fn hurwitz_move_unchecked(group: &FiniteGroup, v: &[ElementId], k: usize) -> Vec<ElementId> {
    let mut out = v.to_vec();
    let (a, b) = (v[k], v[k + 1]);
    out[k] = group.conjugate(b, a);
    out[k + 1] = a;
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidOrbit {
    /// Sorted; the first member is the representative.
    members: Vec<GeneratingVector>,
}

impl BraidOrbit {
    pub fn representative(&self) -> &GeneratingVector {
        &self.members[0]
    }

    pub fn members(&self) -> &[GeneratingVector] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Members of the braid orbit of `seed` with the same order sequence, sorted.
pub fn orbit_of(group: &FiniteGroup, seed: &[ElementId], cap: usize) -> Result<Vec<Vec<ElementId>>> {
    let orders: Vec<u32> = seed.iter().map(|&h| group.element_order(h)).collect();
    let mut seen: HashSet<Vec<ElementId>> = HashSet::new();
    seen.insert(seed.to_vec());
    let mut stack = vec![seed.to_vec()];
    let mut short = Vec::new();
    while let Some(v) = stack.pop() {
        if v.iter().zip(&orders).all(|(&h, &m)| group.element_order(h) == m) {
            short.push(v.clone());
        }
        // forward moves suffice: each is a bijection on a finite orbit
        for k in 0..v.len().saturating_sub(1) {
            let w = hurwitz_move_unchecked(group, &v, k);
            if !seen.contains(&w) {
                if seen.len() >= cap {
                    return Err(Error::Resource(format!("braid orbit exceeds the cap of {cap} tuples")));
                }
                seen.insert(w.clone());
                stack.push(w);
            }
        }
    }
    short.sort();
    Ok(short)
}

/// Partitions `vectors` (all of one signature) into braid orbits, ordered by
/// representative.
pub fn orbit_partition(group: &FiniteGroup, vectors: &[GeneratingVector]) -> Result<Vec<BraidOrbit>> {
    orbit_partition_with_cap(group, vectors, DEFAULT_ORBIT_CAP)
}

pub fn orbit_partition_with_cap(
    group: &FiniteGroup,
    vectors: &[GeneratingVector],
    cap: usize,
) -> Result<Vec<BraidOrbit>> {
    let mut sorted: Vec<&GeneratingVector> = vectors.iter().collect();
    sorted.sort();
    sorted.dedup();
    let position: HashMap<&[ElementId], usize> = sorted.iter().enumerate().map(|(i, v)| (v.entries(), i)).collect();
    let mut assigned = vec![false; sorted.len()];
    let mut orbits = Vec::new();
    for (i, v) in sorted.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        let members = orbit_of(group, v.entries(), cap)?;
        for m in &members {
            match position.get(m.as_slice()) {
                Some(&j) if !assigned[j] => assigned[j] = true,
                Some(_) => {
                    return Err(Error::Internal(format!(
                        "tuple {m:?} reached from two different orbits"
                    )))
                }
                None => return Err(Error::Internal(format!("braid orbit left the input set at {m:?}"))),
            }
        }
        orbits.push(BraidOrbit {
            members: members.into_iter().map(GeneratingVector::new_unchecked).collect(),
        });
    }
    Ok(orbits)
}
