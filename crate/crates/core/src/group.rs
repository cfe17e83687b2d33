//! Finite permutation groups with every element materialized.
//!
//! Elements are enumerated breadth first from the identity, multiplying on
//! the right by the generators in input order, so element ids are
//! deterministic for a given generator list. All higher level code works with
//! [`ElementId`] handles rather than permutations.

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{compose, Permutation};

pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

/// Groups up to this order get a full multiplication table on first use.
pub const FULL_TABLE_LIMIT: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementId(pub u32);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug)]
pub struct ConjugacyClasses {
    class_of: Vec<u32>,
    members: Vec<Vec<ElementId>>,
}

impl ConjugacyClasses {
    pub fn class_of(&self, g: ElementId) -> usize {
        self.class_of[g.index()] as usize
    }

    pub fn members(&self, class: usize) -> &[ElementId] {
        &self.members[class]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn size_of_class_of(&self, g: ElementId) -> usize {
        self.members[self.class_of(g)].len()
    }
}

#[derive(Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    generator_ids: Vec<ElementId>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, ElementId>,
    orders: Vec<u32>,
    inverses: Vec<ElementId>,
    // right_gen[e * ngens + k] = e * generator k
    right_gen: Vec<ElementId>,
    // BFS tree: elements[e] = elements[parent.0] * generator parent.1
    parent: Vec<(ElementId, u32)>,
    table: OnceLock<Vec<ElementId>>,
    classes: OnceLock<ConjugacyClasses>,
}

impl FiniteGroup {
    /// Closure of `generators` with the default element cap.
    pub fn close(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::close_with_cap(degree, generators, DEFAULT_ELEMENT_CAP)
    }

    pub fn close_with_cap(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Input("a group needs at least one generator".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::Input(format!(
                "generator {g} has degree {} but the group has degree {degree}",
                g.degree()
            )));
        }
        let ngens = generators.len();
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, ElementId::IDENTITY);
        let mut parent = vec![(ElementId::IDENTITY, 0u32)];
        let mut right_gen: Vec<ElementId> = Vec::new();
        let mut cursor = 0;
        while cursor < elements.len() {
            for (k, g) in generators.iter().enumerate() {
                let prod = compose(&elements[cursor], g)?;
                let next = match index.get(&prod) {
                    Some(&e) => e,
                    None => {
                        if elements.len() >= cap {
                            return Err(Error::Resource(format!(
                                "group closure exceeds the element cap of {cap}"
                            )));
                        }
                        let e = ElementId(elements.len() as u32);
                        index.insert(prod.clone(), e);
                        elements.push(prod);
                        parent.push((ElementId(cursor as u32), k as u32));
                        e
                    }
                };
                right_gen.push(next);
            }
            cursor += 1;
        }
        debug_assert_eq!(right_gen.len(), elements.len() * ngens);
        let orders = elements.iter().map(|p| p.order() as u32).collect();
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let generator_ids = generators.iter().map(|g| index[g]).collect();
        Ok(FiniteGroup {
            degree,
            generators,
            generator_ids,
            elements,
            index,
            orders,
            inverses,
            right_gen,
            parent,
            table: OnceLock::new(),
            classes: OnceLock::new(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_ids(&self) -> &[ElementId] {
        &self.generator_ids
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn ids(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.elements.len() as u32).map(ElementId)
    }

    pub fn element(&self, g: ElementId) -> &Permutation {
        &self.elements[g.index()]
    }

    pub fn id_of(&self, p: &Permutation) -> Option<ElementId> {
        self.index.get(p).copied()
    }

    pub fn check_id(&self, g: ElementId) -> Result<()> {
        if g.index() < self.elements.len() {
            Ok(())
        } else {
            Err(Error::Input(format!(
                "element id {} out of range for a group of order {}",
                g.0,
                self.order()
            )))
        }
    }

    #[inline]
    pub fn element_order(&self, g: ElementId) -> u32 {
        self.orders[g.index()]
    }

    #[inline]
    pub fn inverse(&self, g: ElementId) -> ElementId {
        self.inverses[g.index()]
    }

    /// `g` times the `k`-th input generator.
    #[inline]
    pub fn mul_generator(&self, g: ElementId, k: usize) -> ElementId {
        self.right_gen[g.index() * self.generators.len() + k]
    }

    fn full_table(&self) -> Option<&[ElementId]> {
        let n = self.order();
        if n > FULL_TABLE_LIMIT {
            return None;
        }
        Some(self.table.get_or_init(|| {
            let mut table = vec![ElementId::IDENTITY; n * n];
            for a in 0..n {
                let row = &mut table[a * n..(a + 1) * n];
                row[0] = ElementId(a as u32);
                for b in 1..n {
                    let (p, k) = self.parent[b];
                    row[b] = self.mul_generator(row[p.index()], k as usize);
                }
            }
            table
        }))
    }

    /// Product `a * b` (apply `a`, then `b`).
    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        match self.full_table() {
            Some(t) => t[a.index() * self.order() + b.index()],
            None => {
                let p = compose(self.element(a), self.element(b)).expect("same degree");
                self.index[&p]
            }
        }
    }

    /// Product of a sequence, left to right.
    pub fn product(&self, elems: &[ElementId]) -> ElementId {
        elems.iter().fold(ElementId::IDENTITY, |acc, &g| self.mul(acc, g))
    }

    pub fn pow(&self, g: ElementId, k: i64) -> ElementId {
        let ord = self.element_order(g) as i64;
        let k = k.rem_euclid(ord);
        let mut out = ElementId::IDENTITY;
        for _ in 0..k {
            out = self.mul(out, g);
        }
        out
    }

    /// `x g x^-1`.
    pub fn conjugate(&self, g: ElementId, x: ElementId) -> ElementId {
        self.mul(self.mul(x, g), self.inverse(x))
    }

    /// The conjugacy class of `g`, sorted by id.
    pub fn conjugates(&self, g: ElementId) -> Vec<ElementId> {
        let classes = self.conjugacy_classes();
        classes.members(classes.class_of(g)).to_vec()
    }

    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![u32::MAX; n];
            let mut members = Vec::new();
            for start in 0..n {
                if class_of[start] != u32::MAX {
                    continue;
                }
                let c = members.len() as u32;
                let mut class = vec![ElementId(start as u32)];
                class_of[start] = c;
                let mut i = 0;
                while i < class.len() {
                    let g = class[i];
                    for &s in &self.generator_ids {
                        let h = self.conjugate(g, s);
                        if class_of[h.index()] == u32::MAX {
                            class_of[h.index()] = c;
                            class.push(h);
                        }
                    }
                    i += 1;
                }
                class.sort();
                members.push(class);
            }
            ConjugacyClasses { class_of, members }
        })
    }

    /// Membership bitmap of the subgroup generated by `elems`.
    pub fn subgroup_closure(&self, elems: &[ElementId]) -> Vec<bool> {
        let n = self.order();
        let mut member = vec![false; n];
        member[0] = true;
        let mut queue = VecDeque::from([ElementId::IDENTITY]);
        while let Some(g) = queue.pop_front() {
            for &s in elems {
                let h = self.mul(g, s);
                if !member[h.index()] {
                    member[h.index()] = true;
                    queue.push_back(h);
                }
            }
        }
        member
    }

    pub fn subgroup_order(&self, elems: &[ElementId]) -> usize {
        self.subgroup_closure(elems).iter().filter(|&&b| b).count()
    }

    /// Whether `elems` generate the whole group.
    pub fn generates(&self, elems: &[ElementId]) -> bool {
        self.subgroup_order(elems) == self.order()
    }

    /// Elements of order exactly `m`, in id order.
    pub fn elements_of_order(&self, m: u32) -> Vec<ElementId> {
        self.ids().filter(|&g| self.element_order(g) == m).collect()
    }

    /// Exponent of the group (lcm of element orders).
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1u64, |acc, &o| num_integer::lcm(acc, o as u64))
    }

    /// Shortlex-in-BFS word for `g` in the input generators (generator indices).
    pub fn word(&self, g: ElementId) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = g;
        while cur != ElementId::IDENTITY {
            let (p, k) = self.parent[cur.index()];
            word.push(k as usize);
            cur = p;
        }
        word.reverse();
        word
    }

    /// Elements in BFS order paired with the BFS tree edge that reached them.
    /// Entry 0 is the identity and carries no edge.
    pub fn bfs_tree(&self) -> &[(ElementId, u32)] {
        &self.parent
    }
}
