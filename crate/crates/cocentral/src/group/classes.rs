//! Conjugacy classes and the power-conjugacy relation CC_m^•.

use super::FiniteGroup;
use crate::arith::units;
use std::collections::BTreeMap;

/// Minimal group interface shared by table groups and automorphism groups.
pub trait GroupLike {
    fn size(&self) -> usize;
    fn op(&self, a: usize, b: usize) -> usize;
    fn inv_of(&self, a: usize) -> usize;
    fn id(&self) -> usize;
    fn gens(&self) -> Vec<usize>;

    fn power(&self, a: usize, k: u64) -> usize {
        let mut r = self.id();
        for _ in 0..k {
            r = self.op(r, a);
        }
        r
    }
}

impl GroupLike for FiniteGroup {
    fn size(&self) -> usize {
        self.order()
    }
    fn op(&self, a: usize, b: usize) -> usize {
        self.mul(a as u32, b as u32) as usize
    }
    fn inv_of(&self, a: usize) -> usize {
        self.inv(a as u32) as usize
    }
    fn id(&self) -> usize {
        self.identity() as usize
    }
    fn gens(&self) -> Vec<usize> {
        self.generators().iter().map(|&g| g as usize).collect()
    }
    fn power(&self, a: usize, k: u64) -> usize {
        self.pow(a as u32, k) as usize
    }
}

/// Class label per element (restricted to `domain` when given), classes
/// numbered by increasing minimal element.
pub(crate) fn class_labels<G: GroupLike + ?Sized>(g: &G, domain: Option<&[bool]>) -> Vec<usize> {
    let n = g.size();
    let gens = g.gens();
    let gens_inv: Vec<usize> = gens.iter().map(|&s| g.inv_of(s)).collect();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for x in 0..n {
        if label[x] != usize::MAX || domain.is_some_and(|d| !d[x]) {
            continue;
        }
        label[x] = next;
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            for (&s, &si) in gens.iter().zip(&gens_inv) {
                let c = g.op(g.op(s, y), si);
                if label[c] == usize::MAX {
                    label[c] = next;
                    stack.push(c);
                }
            }
        }
        next += 1;
    }
    label
}

pub fn conjugacy_classes<G: GroupLike + ?Sized>(g: &G) -> Vec<Vec<usize>> {
    let label = class_labels(g, None);
    let count = label.iter().max().map_or(0, |&m| m + 1);
    let mut classes = vec![Vec::new(); count];
    for (x, &l) in label.iter().enumerate() {
        classes[l].push(x);
    }
    classes
}

pub(crate) fn class_sizes(g: &FiniteGroup) -> Vec<usize> {
    let label = class_labels(g, None);
    let mut count = vec![0usize; g.order()];
    for &l in &label {
        count[l] += 1;
    }
    label.iter().map(|&l| count[l]).collect()
}

/// CC_m^• together with its split by element order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcSplit {
    pub representatives: Vec<usize>,
    /// Element order → representatives of that order.
    pub by_order: BTreeMap<u64, Vec<usize>>,
    /// For each element, the index into `representatives` of its class
    /// (`usize::MAX` outside the domain).
    pub class_of: Vec<usize>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi] = lo;
    }
}

/// Elements with x^m = 1 up to conjugacy and prime-to-m powers.
/// With `include_identity` the identity forms its own class.
pub fn power_conjugacy<G: GroupLike + ?Sized>(g: &G, m: u64, include_identity: bool) -> CcSplit {
    let n = g.size();
    let e = g.id();
    let domain: Vec<bool> = (0..n)
        .map(|x| (x != e || include_identity) && g.power(x, m) == e)
        .collect();
    let label = class_labels(g, Some(&domain));
    let classes = label
        .iter()
        .filter(|&&l| l != usize::MAX)
        .max()
        .map_or(0, |&m| m + 1);
    let mut first = vec![usize::MAX; classes];
    for x in 0..n {
        if domain[x] && first[label[x]] == usize::MAX {
            first[label[x]] = x;
        }
    }
    let mut parent: Vec<usize> = (0..classes).collect();
    let us = units(m);
    for c in 0..classes {
        let x = first[c];
        for &l in &us {
            let y = g.power(x, l);
            union(&mut parent, c, label[y]);
        }
    }
    let mut reps: Vec<usize> = Vec::new();
    let mut root_index = BTreeMap::new();
    for c in 0..classes {
        let r = find(&mut parent, c);
        root_index.entry(r).or_insert_with(|| {
            reps.push(first[r]);
            reps.len() - 1
        });
    }
    let class_of = (0..n)
        .map(|x| {
            if domain[x] {
                root_index[&find(&mut parent, label[x])]
            } else {
                usize::MAX
            }
        })
        .collect();
    let mut by_order: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for &r in &reps {
        let mut o = 1u64;
        let mut y = r;
        while y != e {
            y = g.op(y, r);
            o += 1;
        }
        by_order.entry(o).or_default().push(r);
    }
    CcSplit {
        representatives: reps,
        by_order,
        class_of,
    }
}

/// CC_m^•(G): nontrivial elements with x^m = 1 up to conjugacy and
/// prime-to-m powers.
pub fn cc_m_bullet<G: GroupLike + ?Sized>(g: &G, m: u64) -> CcSplit {
    power_conjugacy(g, m, false)
}

#[cfg(test)]
mod tests {
    use super::super::families::*;
    use super::*;

    #[test]
    fn class_counts() {
        assert_eq!(conjugacy_classes(&symmetric(3)).len(), 3);
        assert_eq!(conjugacy_classes(&alternating(5)).len(), 5);
        assert_eq!(conjugacy_classes(&cyclic(7)).len(), 7);
    }

    #[test]
    fn cc_bullet_examples() {
        assert_eq!(cc_m_bullet(&symmetric(5), 2).representatives.len(), 2);
        assert_eq!(cc_m_bullet(&cyclic(2), 2).representatives.len(), 1);
        let c = cc_m_bullet(&cyclic(4), 4);
        assert_eq!(c.representatives, vec![1, 2]);
        assert_eq!(c.by_order[&4], vec![1]);
        assert_eq!(c.by_order[&2], vec![2]);
    }
}
