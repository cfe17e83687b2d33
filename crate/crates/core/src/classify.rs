//! Moduli components of surfaces isogenous to a product for a group and a
//! pair of signatures.
//!
//! Braid orbits of each signature are computed, pairs of orbits that are
//! not disjoint are dropped, and the remaining orbit pairs are identified
//! under `Aut(G)` (and under exchanging the factors when both signatures
//! agree). One representative pair per class is reported together with its
//! first homology group.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::automorphism::{compute_aut_with_cap, Automorphism, DEFAULT_AUT_CAP};
use crate::braid::{orbit_partition_with_cap, BraidOrbit, DEFAULT_ORBIT_CAP};
use crate::error::{Error, Result};
use crate::group::{ElementId, FiniteGroup};
use crate::homology::{first_homology_with, AbelianInvariants, SnfLimits, Transversal};
use crate::vectors::{disjoint_sets, enumerate, stabilizer_set, GeneratingVector, Signature, SurfaceInvariants};

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    pub orbit_cap: usize,
    pub aut_cap: usize,
    pub snf: SnfLimits,
    /// Skip the homology computation (records then carry no homology).
    pub homology: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            orbit_cap: DEFAULT_ORBIT_CAP,
            aut_cap: DEFAULT_AUT_CAP,
            snf: SnfLimits::default(),
            homology: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentRecord {
    pub rep1: GeneratingVector,
    pub rep2: GeneratingVector,
    pub invariants: SurfaceInvariants,
    pub homology: Option<AbelianInvariants>,
}

/// Intermediate data of a classification run, kept for inspection and tests.
#[derive(Debug)]
pub struct Classification {
    pub invariants: SurfaceInvariants,
    pub orbits1: Vec<BraidOrbit>,
    /// Same as `orbits1` when the signatures are equal.
    pub orbits2: Vec<BraidOrbit>,
    pub automorphisms: Vec<Automorphism>,
    /// Disjoint orbit pairs before the automorphism quotient.
    pub disjoint_pairs: Vec<(usize, usize)>,
    /// One orbit pair per component.
    pub representatives: Vec<(usize, usize)>,
    pub records: Vec<ComponentRecord>,
}

pub fn classify(group: &FiniteGroup, t1: &Signature, t2: &Signature) -> Result<Vec<ComponentRecord>> {
    Ok(classify_with(group, t1, t2, &ClassifyOptions::default())?.records)
}

pub fn classify_with(
    group: &FiniteGroup,
    t1: &Signature,
    t2: &Signature,
    opts: &ClassifyOptions,
) -> Result<Classification> {
    let order = group.order() as u64;
    for t in [t1, t2] {
        if t.len() < 3 {
            return Err(Error::Validation(format!("signature {t} has fewer than three periods")));
        }
    }
    let same = t1 == t2;
    let vectors1 = enumerate(group, t1);
    let vectors2 = if same { Vec::new() } else { enumerate(group, t2) };
    if vectors1.is_empty() || (!same && vectors2.is_empty()) {
        // Nothing to classify; the genus bound is not enforced here.
        return Ok(Classification {
            invariants: SurfaceInvariants::from_hurwitz(order, t1, t2)?,
            orbits1: Vec::new(),
            orbits2: Vec::new(),
            automorphisms: Vec::new(),
            disjoint_pairs: Vec::new(),
            representatives: Vec::new(),
            records: Vec::new(),
        });
    }
    let invariants = SurfaceInvariants::compute(order, t1, t2)?;

    // Step 1: braid orbits
    let orbits1 = orbit_partition_with_cap(group, &vectors1, opts.orbit_cap)?;
    let orbits2 = if same {
        orbits1.clone()
    } else {
        orbit_partition_with_cap(group, &vectors2, opts.orbit_cap)?
    };

    // Step 2: disjoint orbit pairs
    let stab1: Vec<_> = orbits1
        .iter()
        .map(|o| stabilizer_set(group, o.representative().entries()))
        .collect();
    let stab2: Vec<_> = if same {
        stab1.clone()
    } else {
        orbits2
            .iter()
            .map(|o| stabilizer_set(group, o.representative().entries()))
            .collect()
    };
    let disjoint_pairs: Vec<(usize, usize)> = (0..orbits1.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let stab2 = &stab2;
            let s1 = &stab1[i];
            (0..orbits2.len())
                .filter(move |&j| disjoint_sets(s1, &stab2[j]))
                .map(move |j| (i, j))
        })
        .collect();

    // Step 3: Aut(G) and factor exchange
    let (automorphisms, representatives) = if disjoint_pairs.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        let auts = compute_aut_with_cap(group, opts.aut_cap)?;
        let maps1 = orbit_maps(&auts, &orbits1)?;
        let maps2 = if same {
            maps1.clone()
        } else {
            orbit_maps(&auts, &orbits2)?
        };
        let reps = aut_action_on_orbit_pairs(&maps1, &maps2, &disjoint_pairs, same)?;
        (auts, reps)
    };

    // Step 4: homology of each representative
    let mut records: Vec<ComponentRecord> = representatives
        .par_iter()
        .map(|&(i, j)| {
            let rep1 = orbits1[i].representative().clone();
            let rep2 = orbits2[j].representative().clone();
            let homology = if opts.homology {
                Some(first_homology_with(
                    group,
                    rep1.entries(),
                    rep2.entries(),
                    Transversal::Forward,
                    &opts.snf,
                )?)
            } else {
                None
            };
            Ok(ComponentRecord {
                rep1,
                rep2,
                invariants,
                homology,
            })
        })
        .collect::<Result<_>>()?;
    records.sort_by(|a, b| (&a.rep1, &a.rep2).cmp(&(&b.rep1, &b.rep2)));

    Ok(Classification {
        invariants,
        orbits1,
        orbits2,
        automorphisms,
        disjoint_pairs,
        representatives,
        records,
    })
}

/// For each automorphism, the induced permutation of the orbit list.
pub fn orbit_maps(auts: &[Automorphism], orbits: &[BraidOrbit]) -> Result<Vec<Vec<usize>>> {
    let mut owner: HashMap<&[ElementId], usize> = HashMap::new();
    for (k, o) in orbits.iter().enumerate() {
        for m in o.members() {
            owner.insert(m.entries(), k);
        }
    }
    auts.par_iter()
        .map(|phi| {
            orbits
                .iter()
                .map(|o| {
                    let image = phi.apply_to_vector(o.representative().entries());
                    owner.get(image.as_slice()).copied().ok_or_else(|| {
                        Error::Internal(format!(
                            "automorphic image {image:?} lies outside the enumerated orbits"
                        ))
                    })
                })
                .collect()
        })
        .collect()
}

/// Quotient of the disjoint orbit pairs by the automorphism action, and by
/// exchanging the two factors when `swap` is set. Pairs are taken in
/// increasing order and every image of a chosen pair is removed.
pub fn aut_action_on_orbit_pairs(
    maps1: &[Vec<usize>],
    maps2: &[Vec<usize>],
    pairs: &[(usize, usize)],
    swap: bool,
) -> Result<Vec<(usize, usize)>> {
    if maps1.len() != maps2.len() {
        return Err(Error::Internal("automorphism maps of different lengths".into()));
    }
    let mut work: BTreeSet<(usize, usize)> = pairs.iter().copied().collect();
    let mut reps = Vec::new();
    while let Some(&(i, j)) = work.iter().next() {
        work.remove(&(i, j));
        if swap {
            work.remove(&(j, i));
        }
        reps.push((i, j));
        for (m1, m2) in maps1.iter().zip(maps2) {
            let (a, b) = (
                *m1.get(i)
                    .ok_or_else(|| Error::Internal("orbit index out of range".into()))?,
                *m2.get(j)
                    .ok_or_else(|| Error::Internal("orbit index out of range".into()))?,
            );
            work.remove(&(a, b));
            if swap {
                work.remove(&(b, a));
            }
        }
    }
    Ok(reps)
}
