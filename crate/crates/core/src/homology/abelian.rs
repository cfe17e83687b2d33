use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::snf::divisibility_chain;
use crate::error::{Error, Result};

/// A finitely generated abelian group `Z^rank ⊕ Z/d_1 ⊕ .. ⊕ Z/d_k` with
/// `d_1 | d_2 | .. | d_k` and every `d_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbelianInvariants {
    rank: usize,
    torsion: Vec<u64>,
}

impl AbelianInvariants {
    pub fn new(rank: usize, torsion: Vec<u64>) -> Result<Self> {
        if torsion.iter().any(|&d| d < 2) {
            return Err(Error::Input(format!(
                "torsion coefficients {torsion:?} must be at least 2"
            )));
        }
        if torsion.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::Input(format!(
                "torsion coefficients {torsion:?} are not a divisibility chain"
            )));
        }
        Ok(AbelianInvariants { rank, torsion })
    }

    pub(crate) fn from_nonzero_factors(ncols: usize, factors: Vec<BigInt>) -> Result<Self> {
        let rank = ncols - factors.len();
        let torsion = factors
            .into_iter()
            .filter(|d| !d.is_one())
            .map(|d| {
                d.to_u64()
                    .ok_or_else(|| Error::Resource(format!("torsion coefficient {d} exceeds 64 bits")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AbelianInvariants { rank, torsion })
    }

    /// Canonical form of a direct sum of cyclic groups `Z/n` (0 meaning `Z`).
    pub fn from_cyclic_factors(factors: &[u64]) -> Self {
        let rank = factors.iter().filter(|&&n| n == 0).count();
        let finite: Vec<BigInt> = factors.iter().filter(|&&n| n > 1).map(|&n| BigInt::from(n)).collect();
        let torsion = divisibility_chain(finite)
            .into_iter()
            .filter(|d| !d.is_one())
            .map(|d| d.to_u64().expect("product of u64 factors"))
            .collect();
        AbelianInvariants { rank, torsion }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> u128 {
        self.torsion.iter().map(|&d| d as u128).product()
    }

    /// Direct sum.
    pub fn direct_sum(&self, other: &AbelianInvariants) -> AbelianInvariants {
        let mut factors: Vec<u64> = self.torsion.iter().chain(&other.torsion).copied().collect();
        factors.extend(std::iter::repeat_n(0, self.rank + other.rank));
        Self::from_cyclic_factors(&factors)
    }
}

/// Chain form of a list of cyclic orders.
pub fn chain_from_cyclic_factors(factors: &[u64]) -> Vec<u64> {
    AbelianInvariants::from_cyclic_factors(factors).torsion
}

impl fmt::Display for AbelianInvariants {
    /// Chain form with repeated factors grouped, e.g. `(Z3)^2 x Z15`;
    /// the trivial group prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.torsion.len() {
            let d = self.torsion[i];
            let mut j = i;
            while j < self.torsion.len() && self.torsion[j] == d {
                j += 1;
            }
            parts.push(if j - i == 1 {
                format!("Z{d}")
            } else {
                format!("(Z{d})^{}", j - i)
            });
            i = j;
        }
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            k => parts.push(format!("Z^{k}")),
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" x "))
        }
    }
}

impl FromStr for AbelianInvariants {
    type Err = Error;

    /// Accepts products of `Zn`, `(Zn)^k`, `Z`, `Z^k` separated by `x`, in
    /// any order and not necessarily in chain form; `0` is the trivial group.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Input(format!("cannot parse abelian group {s:?}"));
        let text = s.trim();
        if text == "0" || text == "1" {
            return Ok(AbelianInvariants {
                rank: 0,
                torsion: vec![],
            });
        }
        let mut factors = Vec::new();
        for part in text.split(['x', '×', '*']) {
            let part = part.trim();
            let (base, exp) = match part.rsplit_once('^') {
                Some((b, e)) => (b.trim(), e.trim().parse::<usize>().map_err(|_| bad())?),
                None => (part, 1),
            };
            let base = base.trim_start_matches('(').trim_end_matches(')').trim();
            let n = base.strip_prefix('Z').ok_or_else(bad)?.trim();
            let n = n.strip_prefix('_').unwrap_or(n);
            let n: u64 = if n.is_empty() { 0 } else { n.parse().map_err(|_| bad())? };
            factors.extend(std::iter::repeat_n(n, exp));
        }
        Ok(Self::from_cyclic_factors(&factors))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render() {
        let h = AbelianInvariants::new(0, vec![3, 3, 15]).unwrap();
        assert_eq!(h.to_string(), "(Z3)^2 x Z15");
        let h = AbelianInvariants::new(0, vec![2, 2, 4, 8]).unwrap();
        assert_eq!(h.to_string(), "(Z2)^2 x Z4 x Z8");
        assert_eq!(AbelianInvariants::new(0, vec![]).unwrap().to_string(), "0");
        assert_eq!(AbelianInvariants::new(2, vec![7]).unwrap().to_string(), "Z7 x Z^2");
    }

    #[test]
    fn parse_accepts_any_decomposition() {
        let a: AbelianInvariants = "(Z3)^2 x Z15".parse().unwrap();
        assert_eq!(a.torsion(), &[3, 3, 15]);
        let b: AbelianInvariants = "Z3 x Z3 x Z3 x Z5".parse().unwrap();
        assert_eq!(b, a);
        let c: AbelianInvariants = "Z_7 × Z_21".parse().unwrap();
        assert_eq!(c.torsion(), &[7, 21]);
        let d: AbelianInvariants = "Z^2 x Z4".parse().unwrap();
        assert_eq!((d.rank(), d.torsion()), (2, &[4u64][..]));
        assert!("Q3".parse::<AbelianInvariants>().is_err());
    }

    #[test]
    fn validation() {
        assert!(AbelianInvariants::new(0, vec![1]).is_err());
        assert!(AbelianInvariants::new(0, vec![4, 6]).is_err());
    }

    #[test]
    fn direct_sum() {
        let a = AbelianInvariants::new(0, vec![5, 5]).unwrap();
        assert_eq!(a.direct_sum(&a).torsion(), &[5, 5, 5, 5]);
        let b = AbelianInvariants::new(1, vec![2]).unwrap();
        let c = AbelianInvariants::new(0, vec![3]).unwrap();
        assert_eq!(b.direct_sum(&c), AbelianInvariants::new(1, vec![6]).unwrap());
    }
}
