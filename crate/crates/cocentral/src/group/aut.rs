//! Backtracking search for automorphisms and isomorphisms.

use super::classes::{class_sizes, GroupLike};
use super::{Automorphism, Budget, FiniteGroup, Subgroup};
use crate::error::{Error, Result};
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    None,
    Preserve(Subgroup),
    FixPointwise(Subgroup),
}

/// A group of automorphisms, stored as permutations in lexicographic order.
#[derive(Clone, Debug)]
pub struct AutGroup {
    elements: Vec<Automorphism>,
    index: HashMap<Vec<u32>, usize>,
    identity: usize,
    generators: Vec<usize>,
}

impl AutGroup {
    pub fn new(mut elements: Vec<Automorphism>) -> Self {
        elements.sort();
        elements.dedup();
        let index: HashMap<Vec<u32>, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, a)| (a.map.clone(), i))
            .collect();
        let identity = elements
            .iter()
            .position(|a| a.is_identity())
            .expect("automorphism list contains the identity");
        let mut g = AutGroup {
            elements,
            index,
            identity,
            generators: Vec::new(),
        };
        g.generators = g.find_generators();
        g
    }

    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &Automorphism {
        &self.elements[i]
    }

    pub fn index_of(&self, a: &Automorphism) -> Option<usize> {
        self.index.get(&a.map).copied()
    }

    pub fn contains(&self, a: &Automorphism) -> bool {
        self.index.contains_key(&a.map)
    }

    pub fn generator_elements(&self) -> Vec<Automorphism> {
        self.generators
            .iter()
            .map(|&i| self.elements[i].clone())
            .collect()
    }

    fn closure_len(&self, gens: &[usize]) -> usize {
        let mut seen = vec![false; self.len()];
        seen[self.identity] = true;
        let mut stack = vec![self.identity];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.op(x, g);
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    }

    fn find_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut size = 1;
        let mut i = 0;
        while size < self.len() {
            gens.push(i);
            let s = self.closure_len(&gens);
            if s > size {
                size = s;
            } else {
                gens.pop();
            }
            i += 1;
        }
        gens
    }

    /// Closed under composition and inversion, contains the identity.
    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|a| {
            self.contains(&a.inverse())
                && self
                    .generators
                    .iter()
                    .all(|&g| self.contains(&a.compose(&self.elements[g])))
        })
    }
}

impl GroupLike for AutGroup {
    fn size(&self) -> usize {
        self.elements.len()
    }
    fn op(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b]).map]
    }
    fn inv_of(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse().map]
    }
    fn id(&self) -> usize {
        self.identity
    }
    fn gens(&self) -> Vec<usize> {
        self.generators.clone()
    }
}

struct Search<'a> {
    src: &'a FiniteGroup,
    dst: &'a FiniteGroup,
    gens: Vec<u32>,
    candidates: Vec<Vec<u32>>,
    images: Vec<u32>,
    nodes: u64,
    max_nodes: u64,
    first_only: bool,
    found: Vec<Vec<u32>>,
}

impl Search<'_> {
    /// Extends the partial assignment on ⟨g_1..g_j⟩; returns the map if
    /// consistent and injective.
    fn extend(&self, j: usize) -> Option<Vec<u32>> {
        let n = self.src.order();
        let mut map = vec![u32::MAX; n];
        let mut used = vec![false; self.dst.order()];
        let e = self.src.identity();
        map[e as usize] = self.dst.identity();
        used[self.dst.identity() as usize] = true;
        let mut queue = vec![e];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for i in 0..j {
                let y = self.src.mul(x, self.gens[i]);
                let img = self.dst.mul(map[x as usize], self.images[i]);
                let cur = map[y as usize];
                if cur == u32::MAX {
                    if used[img as usize] {
                        return None;
                    }
                    used[img as usize] = true;
                    map[y as usize] = img;
                    queue.push(y);
                } else if cur != img {
                    return None;
                }
            }
        }
        Some(map)
    }

    fn run(&mut self, j: usize) -> Result<()> {
        if self.first_only && !self.found.is_empty() {
            return Ok(());
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::BudgetExceeded(format!(
                "automorphism search exceeded {} nodes",
                self.max_nodes
            )));
        }
        if j == self.gens.len() {
            if let Some(map) = self.extend(j) {
                if map.iter().all(|&x| x != u32::MAX) {
                    self.found.push(map);
                }
            }
            return Ok(());
        }
        for c in 0..self.candidates[j].len() {
            let y = self.candidates[j][c];
            if self.images[..j].contains(&y) {
                continue;
            }
            self.images.push(y);
            if j == 0 || self.extend(j + 1).is_some() {
                self.run(j + 1)?;
            }
            self.images.pop();
        }
        Ok(())
    }
}

fn search(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    first_only: bool,
    budget: &Budget,
) -> Result<Vec<Vec<u32>>> {
    if src.order() != dst.order() {
        return Ok(Vec::new());
    }
    let src_sizes = class_sizes(src);
    let dst_sizes = class_sizes(dst);
    let gens = src.generators().to_vec();
    let candidates = gens
        .iter()
        .map(|&g| {
            dst.elements()
                .filter(|&y| {
                    dst.elem_order(y) == src.elem_order(g)
                        && dst_sizes[y as usize] == src_sizes[g as usize]
                })
                .collect()
        })
        .collect();
    let mut s = Search {
        src,
        dst,
        gens,
        candidates,
        images: Vec::new(),
        nodes: 0,
        max_nodes: budget.max_nodes,
        first_only,
        found: Vec::new(),
    };
    s.run(0)?;
    Ok(s.found)
}

pub fn automorphism_group(g: &FiniteGroup, constraint: &Constraint) -> Result<AutGroup> {
    automorphism_group_with(g, constraint, &Budget::default())
}

pub fn automorphism_group_with(
    g: &FiniteGroup,
    constraint: &Constraint,
    budget: &Budget,
) -> Result<AutGroup> {
    if g.order() > budget.max_aut_order {
        return Err(Error::BudgetExceeded(format!(
            "automorphism search on order {} exceeds cap {}",
            g.order(),
            budget.max_aut_order
        )));
    }
    let maps = search(g, g, false, budget)?;
    let keep = |a: &Automorphism| match constraint {
        Constraint::None => true,
        Constraint::Preserve(t) => t.elements.iter().all(|&x| t.contains(a.apply(x))),
        Constraint::FixPointwise(t) => t.elements.iter().all(|&x| a.apply(x) == x),
    };
    let auts = maps
        .into_iter()
        .map(|map| Automorphism { map })
        .filter(keep)
        .collect();
    Ok(AutGroup::new(auts))
}

fn sorted_invariants(g: &FiniteGroup) -> Vec<(u32, usize)> {
    let sizes = class_sizes(g);
    let mut v: Vec<(u32, usize)> = g
        .elements()
        .map(|x| (g.elem_order(x), sizes[x as usize]))
        .collect();
    v.sort_unstable();
    v
}

/// An isomorphism `g1 → g2` as an index map, if one exists.
pub fn isomorphic(g1: &FiniteGroup, g2: &FiniteGroup) -> Option<Automorphism> {
    if g1 == g2 {
        return Some(Automorphism::identity(g1.order()));
    }
    if g1.order() != g2.order() || sorted_invariants(g1) != sorted_invariants(g2) {
        return None;
    }
    let budget = Budget::default();
    search(g1, g2, true, &budget)
        .ok()?
        .into_iter()
        .next()
        .map(|map| Automorphism { map })
}

#[cfg(test)]
mod tests {
    use super::super::families::*;
    use super::*;

    #[test]
    fn automorphism_counts() {
        assert_eq!(
            automorphism_group(&dihedral(6), &Constraint::None)
                .unwrap()
                .len(),
            12
        );
        assert_eq!(
            automorphism_group(&symmetric(4), &Constraint::None)
                .unwrap()
                .len(),
            24
        );
        let z5sq = product(&cyclic(5), &cyclic(5));
        assert_eq!(
            automorphism_group(&z5sq, &Constraint::None).unwrap().len(),
            480
        );
    }

    #[test]
    fn aut_is_closed_and_sorted() {
        let a = automorphism_group(&dihedral(4), &Constraint::None).unwrap();
        assert_eq!(a.len(), 8);
        assert!(a.is_closed());
        assert!(a.elements().windows(2).all(|w| w[0] < w[1]));
        assert!(a.get(0).is_identity());
    }

    #[test]
    fn isomorphism_detection() {
        assert!(isomorphic(&cyclic(4), &product(&cyclic(2), &cyclic(2))).is_none());
        let w = isomorphic(&dihedral(3), &symmetric(3)).unwrap();
        let (d, s) = (dihedral(3), symmetric(3));
        for x in d.elements() {
            for y in d.elements() {
                assert_eq!(w.apply(d.mul(x, y)), s.mul(w.apply(x), w.apply(y)));
            }
        }
        let g = alternating(4);
        assert!(isomorphic(&g, &g).unwrap().is_identity());
    }

    #[test]
    fn constraints_give_subgroups() {
        let g = cyclic(4);
        let t = Subgroup::new(vec![0, 2]);
        let pres = automorphism_group(&g, &Constraint::Preserve(t.clone())).unwrap();
        let fix = automorphism_group(&g, &Constraint::FixPointwise(t)).unwrap();
        assert_eq!(pres.len(), 2);
        assert_eq!(fix.len(), 2);
    }

    #[test]
    fn budget_cap() {
        let b = Budget {
            max_aut_order: 10,
            ..Budget::default()
        };
        assert!(automorphism_group_with(&dihedral(6), &Constraint::None, &b).is_err());
    }
}
