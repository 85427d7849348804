//! Explicit finite groups on dense element indices.

mod action;
mod aut;
mod classes;
mod extension;
mod families;

pub use action::{
    action_equivalence, central_cyclic_subgroup, verify_aut_sequence, xm_classes, xm_classes_with,
    AutSequenceReport, CocentralAction, EquivalenceMode, XmClass,
};
pub use aut::{automorphism_group, automorphism_group_with, isomorphic, AutGroup, Constraint};
pub use classes::{cc_m_bullet, conjugacy_classes, power_conjugacy, CcSplit, GroupLike};
pub use extension::{central_extension, ExtensionSpec};
pub use families::{
    alternating, cyclic, dihedral, dihedral_psi, make_group, make_group_with, product, psl2, sl2,
    sl2_conjugation, symmetric, GroupFile,
};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Global limits for searches and constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_group_order: usize,
    pub max_aut_order: usize,
    pub max_h2_order: usize,
    pub max_nodes: u64,
    pub max_hopf_dim: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_group_order: 400,
            max_aut_order: 400,
            max_h2_order: 120,
            max_nodes: 200_000_000,
            max_hopf_dim: 1000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    identity: u32,
    inverse: Vec<u32>,
    generators: Vec<u32>,
    orders: Vec<u32>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table && self.identity == other.identity
    }
}

impl Eq for FiniteGroup {}

/// Sorted element list of a subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subgroup {
    pub elements: Vec<u32>,
}

impl Subgroup {
    pub fn new(mut elements: Vec<u32>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Subgroup { elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// A permutation of element indices respecting the multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Automorphism {
    pub map: Vec<u32>,
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Automorphism {
            map: (0..n as u32).collect(),
        }
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.map[x as usize]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            map: other.map.iter().map(|&x| self.map[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![0u32; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Automorphism { map: inv }
    }

    /// Power with a possibly negative exponent.
    pub fn pow(&self, k: i64) -> Automorphism {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Automorphism::identity(self.map.len());
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base);
        }
        out
    }

    /// All powers θ^0, …, θ^{ord-1}.
    pub fn powers(&self) -> Vec<Automorphism> {
        let mut out = vec![Automorphism::identity(self.map.len())];
        loop {
            let next = out.last().unwrap().compose(self);
            if next.is_identity() {
                return out;
            }
            out.push(next);
        }
    }

    pub fn order(&self) -> usize {
        self.powers().len()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Checks bijectivity and the homomorphism property on `g`.
    pub fn is_automorphism_of(&self, g: &FiniteGroup) -> bool {
        if self.map.len() != g.order() {
            return false;
        }
        let mut seen = vec![false; g.order()];
        for &y in &self.map {
            if y as usize >= g.order() || std::mem::replace(&mut seen[y as usize], true) {
                return false;
            }
        }
        g.elements().all(|x| {
            g.elements()
                .all(|y| self.apply(g.mul(x, y)) == g.mul(self.apply(x), self.apply(y)))
        })
    }
}

impl FiniteGroup {
    /// Validates a flat multiplication table and builds the group.
    pub fn from_table(name: &str, order: usize, table: Vec<u32>) -> Result<Self> {
        let g = Self::build(name, order, table, None)?;
        g.check_associative()?;
        Ok(g)
    }

    /// Builds from a table known to be a group law; only the Latin-square shape is checked.
    pub(crate) fn from_trusted_table(name: &str, order: usize, table: Vec<u32>) -> Self {
        Self::build(name, order, table, None).expect("trusted table must be a group law")
    }

    pub(crate) fn build(
        name: &str,
        order: usize,
        table: Vec<u32>,
        generators: Option<Vec<u32>>,
    ) -> Result<Self> {
        if order == 0 || table.len() != order * order {
            return Err(Error::InvalidTable(
                "table shape does not match order".into(),
            ));
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(Error::InvalidTable("entry out of range".into()));
        }
        let identity = (0..order)
            .find(|&e| {
                (0..order).all(|x| {
                    table[e * order + x] as usize == x && table[x * order + e] as usize == x
                })
            })
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?
            as u32;
        let mut inverse = vec![u32::MAX; order];
        for x in 0..order {
            for y in 0..order {
                if table[x * order + y] == identity {
                    if table[y * order + x] != identity {
                        return Err(Error::InvalidTable("one-sided inverse".into()));
                    }
                    inverse[x] = y as u32;
                    break;
                }
            }
            if inverse[x] == u32::MAX {
                return Err(Error::InvalidTable(format!("element {x} has no inverse")));
            }
        }
        let mut g = FiniteGroup {
            name: name.to_string(),
            order,
            table,
            identity,
            inverse,
            generators: Vec::new(),
            orders: Vec::new(),
        };
        g.orders = (0..order as u32).map(|x| g.compute_order(x)).collect();
        match generators {
            Some(gens) => {
                if gens.iter().any(|&x| x as usize >= order) || g.closure(&gens).order() != order {
                    return Err(Error::InvalidTable("generators do not generate".into()));
                }
                g.generators = gens;
            }
            None => g.generators = g.find_generators(),
        }
        Ok(g)
    }

    pub fn check_associative(&self) -> Result<()> {
        for x in self.elements() {
            for y in self.elements() {
                let xy = self.mul(x, y);
                for z in self.elements() {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Err(Error::InvalidTable(format!(
                            "associativity fails at ({x},{y},{z})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> + Clone {
        0..self.order as u32
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.table[x as usize * self.order + y as usize]
    }

    #[inline]
    pub fn inv(&self, x: u32) -> u32 {
        self.inverse[x as usize]
    }

    #[inline]
    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn table_rows(&self) -> Vec<Vec<u32>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn pow(&self, x: u32, k: u64) -> u32 {
        let mut r = self.identity;
        for _ in 0..k % self.orders[x as usize] as u64 {
            r = self.mul(r, x);
        }
        r
    }

    /// Power with a signed exponent.
    pub fn zpow(&self, x: u32, k: i64) -> u32 {
        let o = self.orders[x as usize] as i64;
        self.pow(x, k.rem_euclid(o) as u64)
    }

    fn compute_order(&self, x: u32) -> u32 {
        let mut y = x;
        let mut k = 1;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn elem_order(&self, x: u32) -> u32 {
        self.orders[x as usize]
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn commutes(&self, x: u32, y: u32) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| self.commutes(a, b)))
    }

    pub fn exponent(&self) -> u64 {
        self.orders
            .iter()
            .fold(1u64, |acc, &o| crate::arith::lcm(acc, o as u64))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.iter().any(|&o| o as usize == self.order)
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[u32]) -> Subgroup {
        let mut seen = vec![false; self.order];
        seen[self.identity as usize] = true;
        let mut queue = VecDeque::from([self.identity]);
        let mut out = vec![self.identity];
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        Subgroup::new(out)
    }

    fn closure_size(&self, gens: &[u32], seen: &mut [bool], queue: &mut Vec<u32>) -> usize {
        seen.iter_mut().for_each(|s| *s = false);
        queue.clear();
        seen[self.identity as usize] = true;
        queue.push(self.identity);
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    queue.push(y);
                }
            }
        }
        queue.len()
    }

    /// Greedy small generating set: an element of maximal order, then
    /// repeatedly the element enlarging the generated subgroup the most.
    fn find_generators(&self) -> Vec<u32> {
        if self.order == 1 {
            return Vec::new();
        }
        let max_order = *self.orders.iter().max().unwrap();
        let first = self.orders.iter().position(|&o| o == max_order).unwrap() as u32;
        let mut gens = vec![first];
        let mut seen = vec![false; self.order];
        let mut queue = Vec::with_capacity(self.order);
        let mut size = self.closure_size(&gens, &mut seen, &mut queue);
        while size < self.order {
            let mut best = (size, u32::MAX);
            for y in self.elements() {
                gens.push(y);
                let s = self.closure_size(&gens, &mut seen, &mut queue);
                gens.pop();
                if s > best.0 {
                    best = (s, y);
                    if s == self.order {
                        break;
                    }
                }
            }
            gens.push(best.1);
            size = best.0;
        }
        gens
    }

    pub fn is_subgroup(&self, elems: &[u32]) -> bool {
        let s = Subgroup::new(elems.to_vec());
        s.contains(self.identity)
            && s.elements.iter().all(|&x| {
                s.contains(self.inv(x)) && s.elements.iter().all(|&y| s.contains(self.mul(x, y)))
            })
    }

    pub fn is_normal(&self, n: &Subgroup) -> bool {
        self.generators
            .iter()
            .all(|&g| n.elements.iter().all(|&x| n.contains(self.conj(g, x))))
    }

    pub fn center(&self) -> Subgroup {
        Subgroup::new(
            self.elements()
                .filter(|&x| self.generators.iter().all(|&g| self.commutes(x, g)))
                .collect(),
        )
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let comms: Vec<u32> = self
            .elements()
            .flat_map(|x| self.elements().map(move |y| (x, y)))
            .map(|(x, y)| self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y))))
            .collect();
        let mut uniq = comms;
        uniq.sort_unstable();
        uniq.dedup();
        self.closure(&uniq)
    }

    /// Fixed points of an automorphism.
    pub fn fixed_points(&self, theta: &Automorphism) -> Subgroup {
        Subgroup::new(self.elements().filter(|&x| theta.apply(x) == x).collect())
    }

    /// Inner automorphism y ↦ x y x⁻¹.
    pub fn inner(&self, x: u32) -> Automorphism {
        Automorphism {
            map: self.elements().map(|y| self.conj(x, y)).collect(),
        }
    }

    /// Quotient by a normal subgroup; cosets are labelled by their minimal
    /// element and ordered accordingly.
    pub fn quotient(&self, n: &Subgroup) -> Result<(FiniteGroup, Vec<u32>)> {
        if !self.is_subgroup(&n.elements) || !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let mut label = vec![u32::MAX; self.order];
        let mut reps = Vec::new();
        for x in self.elements() {
            if label[x as usize] != u32::MAX {
                continue;
            }
            let idx = reps.len() as u32;
            reps.push(x);
            for &k in &n.elements {
                label[self.mul(x, k) as usize] = idx;
            }
        }
        let q = reps.len();
        let mut table = vec![0u32; q * q];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i * q + j] = label[self.mul(a, b) as usize];
            }
        }
        let name = format!("{}/N{}", self.name, n.order());
        Ok((FiniteGroup::from_trusted_table(&name, q, table), label))
    }

    pub fn structure_info(&self) -> StructureInfo {
        let center = self.center();
        let derived = self.derived_subgroup();
        let (ab, _) = self.quotient(&derived).expect("derived subgroup is normal");
        StructureInfo {
            center,
            exponent: self.exponent(),
            derived_subgroup: derived,
            abelianization: ab,
            is_cyclic: self.is_cyclic(),
        }
    }

    /// Relabels elements through a bijection `perm` (old index → new index).
    pub fn relabel(&self, perm: &[u32]) -> FiniteGroup {
        let n = self.order;
        let mut table = vec![0u32; n * n];
        for x in self.elements() {
            for y in self.elements() {
                table[perm[x as usize] as usize * n + perm[y as usize] as usize] =
                    perm[self.mul(x, y) as usize];
            }
        }
        let gens = self.generators.iter().map(|&g| perm[g as usize]).collect();
        FiniteGroup::build(&self.name, n, table, Some(gens)).expect("relabeling preserves the law")
    }

    /// Canonical byte string of the table, used for hashing.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 + self.table.len() * 4);
        out.extend_from_slice(&(self.order as u64).to_le_bytes());
        for &x in &self.table {
            out.extend_from_slice(&x.to_le_bytes());
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct StructureInfo {
    pub center: Subgroup,
    pub exponent: u64,
    pub derived_subgroup: Subgroup,
    pub abelianization: FiniteGroup,
    pub is_cyclic: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_associative_table() {
        // A Latin square with identity that is not a group (order 5 loop).
        let rows = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ];
        let table = rows.iter().flatten().map(|&x| x as u32).collect();
        assert!(FiniteGroup::from_table("loop", 5, table).is_err());
    }

    #[test]
    fn quotient_labels_cosets() {
        let d4 = dihedral(4);
        let z = d4.center();
        assert_eq!(z.elements, vec![0, 2]);
        let (q, proj) = d4.quotient(&z).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.exponent(), 2);
        assert_eq!(proj[2], 0);
    }

    #[test]
    fn automorphism_algebra() {
        let g = cyclic(5);
        let a = Automorphism {
            map: vec![0, 2, 4, 1, 3],
        };
        assert!(a.is_automorphism_of(&g));
        assert_eq!(a.order(), 4);
        assert_eq!(a.compose(&a.inverse()), Automorphism::identity(5));
        assert_eq!(a.pow(-1), a.inverse());
    }
}
