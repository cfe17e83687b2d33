//! Permutations on `{0, .., n-1}`.
//!
//! Composition is left to right: `compose(p, q)` applies `p` first and then
//! `q`, so `i ↦ q(p(i))`. Every product of group elements in this crate
//! follows that convention, including products of generating vectors and the
//! coset actions used for the homology computation.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::Input(format!(
                    "image list {images:?} is not a bijection of 0..{n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let p = p as usize;
                if p >= degree {
                    return Err(Error::Input(format!(
                        "point {} out of range for degree {degree}",
                        p + 1
                    )));
                }
                if touched[p] {
                    return Err(Error::Input(format!("point {} appears twice in cycle notation", p + 1)));
                }
                touched[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based disjoint cycle notation such as `(1 2 3)(4 5)`.
    /// Commas are accepted as separators; `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Input(format!("expected '(' in {text:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Input(format!("unclosed cycle in {text:?}")))?;
            let body = &open[..close];
            let mut cycle = Vec::new();
            for tok in body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
            {
                let p: u32 = tok
                    .parse()
                    .map_err(|_| Error::Input(format!("bad point {tok:?} in {text:?}")))?;
                if p == 0 {
                    return Err(Error::Input("cycle points are 1-based".into()));
                }
                cycle.push(p - 1);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = open[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut p = self.images[start] as usize;
            while p != start {
                seen[p] = true;
                cycle.push(p as u32);
                p = self.images[p] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Order as the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }
}

/// `i ↦ q(p(i))`: apply `p` first, then `q`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.degree() != q.degree() {
        return Err(Error::Input(format!(
            "degree mismatch: {} vs {}",
            p.degree(),
            q.degree()
        )));
    }
    Ok(Permutation {
        images: p.images.iter().map(|&i| q.images[i as usize]).collect(),
    })
}

impl fmt::Display for Permutation {
    /// 1-based disjoint cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(degree, s).unwrap()
    }

    #[test]
    fn identity_and_inverse() {
        let q = p(5, "(1 2 3)(4 5)");
        assert_eq!(compose(&Permutation::identity(5), &q).unwrap(), q);
        assert!(compose(&q, &q.inverse()).unwrap().is_identity());
    }

    #[test]
    fn left_to_right_convention() {
        let a = p(3, "(1 2)");
        let b = p(3, "(2 3)");
        // pointwise, both conventions
        let ltr: Vec<u32> = (0..3).map(|i| b.apply(a.apply(i))).collect();
        let rtl: Vec<u32> = (0..3).map(|i| a.apply(b.apply(i))).collect();
        assert_eq!(ltr, vec![2, 0, 1]);
        assert_eq!(rtl, vec![1, 2, 0]);
        let c = compose(&a, &b).unwrap();
        assert_eq!(c.images(), &ltr[..]);
        // 0 -> 2 -> 1 -> 0
        assert_eq!(c.to_string(), "(1 3 2)");
    }

    #[test]
    fn degree_mismatch() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(compose(&a, &b), Err(Error::Input(_))));
    }

    #[test]
    fn parse_and_print() {
        let q = p(7, "(1 2 3 4 5)(6 7)");
        assert_eq!(q.to_string(), "(1 2 3 4 5)(6 7)");
        assert_eq!(q.order(), 10);
        assert_eq!(p(4, "()").to_string(), "()");
        assert_eq!(p(4, "(1,2)(3,4)").to_string(), "(1 2)(3 4)");
        assert!(Permutation::parse_cycles(3, "(1 4)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 2)(2 3)").is_err());
        assert!(Permutation::parse_cycles(3, "1 2").is_err());
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    }
}
