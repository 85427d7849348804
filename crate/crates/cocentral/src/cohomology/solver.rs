//! Fast solver for ∂φ = σ using a spanning tree of the Cayley graph.
//!
//! Along tree edges x = p·s the equation fixes φ(x) = φ(p) + φ(s) − σ(p,s),
//! so φ(x) = c_x + n_x·v with v the values on the generators. Every
//! non-tree edge (x, s) then contributes one linear equation in v, and for a
//! cocycle σ these equations are equivalent to the full system.

use super::UnitMap;
use crate::group::FiniteGroup;
use crate::linalg::ModSystem;

#[derive(Clone, Debug)]
pub struct CoboundarySolver {
    order: usize,
    gens: Vec<u32>,
    /// BFS order starting at the identity.
    pub(crate) bfs: Vec<u32>,
    /// (parent, generator index) with x = parent · s_j; unused for identity.
    pub(crate) parent: Vec<(u32, usize)>,
    /// Generator-count vectors n_x, flattened |H| × g.
    pub(crate) counts: Vec<i64>,
    /// Non-tree edges (x, j).
    pub(crate) non_tree: Vec<(u32, usize)>,
    /// Variable index of (x, j) when non-tree, else `usize::MAX`.
    pub(crate) edge_var: Vec<usize>,
    mul: Vec<u32>,
}

impl CoboundarySolver {
    pub fn new(g: &FiniteGroup) -> Self {
        let n = g.order();
        let gens: Vec<u32> = g.generators().to_vec();
        let k = gens.len();
        let mut parent = vec![(u32::MAX, usize::MAX); n];
        let mut seen = vec![false; n];
        let e = g.identity();
        seen[e as usize] = true;
        let mut bfs = vec![e];
        let mut head = 0;
        let mut tree_edge = vec![false; n * k];
        while head < bfs.len() {
            let x = bfs[head];
            head += 1;
            for (j, &s) in gens.iter().enumerate() {
                let y = g.mul(x, s);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    parent[y as usize] = (x, j);
                    tree_edge[x as usize * k + j] = true;
                    bfs.push(y);
                }
            }
        }
        let mut counts = vec![0i64; n * k];
        for &x in bfs.iter().skip(1) {
            let (p, j) = parent[x as usize];
            for t in 0..k {
                counts[x as usize * k + t] = counts[p as usize * k + t];
            }
            counts[x as usize * k + j] += 1;
        }
        let mut non_tree = Vec::new();
        let mut edge_var = vec![usize::MAX; n * k];
        for x in g.elements() {
            for j in 0..k {
                if !tree_edge[x as usize * k + j] {
                    edge_var[x as usize * k + j] = non_tree.len();
                    non_tree.push((x, j));
                }
            }
        }
        let mul = (0..n as u32)
            .flat_map(|x| gens.iter().map(move |&s| (x, s)))
            .map(|(x, s)| g.mul(x, s))
            .collect();
        CoboundarySolver {
            order: n,
            gens,
            bfs,
            parent,
            counts,
            non_tree,
            edge_var,
            mul,
        }
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    #[inline]
    pub(crate) fn times_gen(&self, x: u32, j: usize) -> u32 {
        self.mul[x as usize * self.gens.len() + j]
    }

    pub(crate) fn count(&self, x: u32, j: usize) -> i64 {
        self.counts[x as usize * self.gens.len() + j]
    }

    fn coefficient_row(&self, x: u32, j: usize) -> Vec<i64> {
        let k = self.gens.len();
        let y = self.times_gen(x, j);
        (0..k)
            .map(|t| self.count(x, t) + i64::from(t == j) - self.count(y, t))
            .collect()
    }

    /// Solves ∂φ = σ over Z/N, where σ only needs to be evaluated on
    /// (x, generator) pairs. Returns the canonical particular solution.
    pub fn solve(&self, sigma: impl Fn(u32, u32) -> u64, modulus: u64) -> Option<UnitMap> {
        let n = modulus;
        let k = self.gens.len();
        let mut c = vec![0u64; self.order];
        for &x in self.bfs.iter().skip(1) {
            let (p, j) = self.parent[x as usize];
            c[x as usize] = (c[p as usize] + n - sigma(p, self.gens[j]) % n) % n;
        }
        let mut sys = ModSystem::new(n, k);
        for &(x, j) in &self.non_tree {
            let y = self.times_gen(x, j);
            let rhs = (sigma(x, self.gens[j]) % n + n - c[x as usize] + c[y as usize]) % n;
            sys.add_row(&self.coefficient_row(x, j), rhs);
        }
        let v = sys.solve()?;
        Some(self.expand(&c, &v, n))
    }

    fn expand(&self, c: &[u64], v: &[u64], n: u64) -> UnitMap {
        let k = self.gens.len();
        UnitMap::from_fn(self.order, n, |x| {
            let mut acc = c[x as usize] as u128;
            for t in 0..k {
                acc += (self.count(x, t).rem_euclid(n as i64) as u128) * v[t] as u128;
            }
            (acc % n as u128) as u64
        })
    }

    /// All homomorphisms H → Z/N, sorted by their value arrays.
    pub fn characters(&self, modulus: u64) -> Vec<UnitMap> {
        let k = self.gens.len();
        let mut sys = ModSystem::new(modulus, k);
        for &(x, j) in &self.non_tree {
            sys.add_row(&self.coefficient_row(x, j), 0);
        }
        let zero = vec![0u64; self.order];
        let mut out: Vec<UnitMap> = sys
            .kernel_elements()
            .iter()
            .map(|v| self.expand(&zero, v, modulus))
            .collect();
        out.sort_by(|a, b| a.values.cmp(&b.values));
        out
    }
}

/// Hom(G, Z/N) in canonical order.
pub fn characters(g: &FiniteGroup, modulus: u64) -> Vec<UnitMap> {
    CoboundarySolver::new(g).characters(modulus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{coboundary, solve_coboundary, Cocycle2};
    use crate::group::{alternating, cyclic, dihedral, symmetric};

    #[test]
    fn character_counts() {
        assert_eq!(characters(&alternating(5), 60).len(), 1);
        assert_eq!(characters(&symmetric(4), 4).len(), 2);
        assert_eq!(characters(&cyclic(6), 3).len(), 3);
        assert_eq!(characters(&dihedral(4), 2).len(), 4);
        for chi in characters(&dihedral(6), 12) {
            assert!(chi.is_character(&dihedral(6)));
        }
    }

    #[test]
    fn recovers_coboundaries() {
        let g = dihedral(5);
        let mu = UnitMap::from_fn(10, 20, |x| if x == 0 { 0 } else { (7 * x as u64 + 3) % 20 });
        let tau = coboundary(&g, &mu);
        let sol = solve_coboundary(&g, &tau, 20).unwrap();
        assert_eq!(coboundary(&g, &sol), tau);
    }

    #[test]
    fn z2_nontrivial_class_needs_larger_modulus() {
        let g = cyclic(2);
        let tau = Cocycle2::from_fn(2, 2, |x, y| u64::from(x == 1 && y == 1));
        assert!(solve_coboundary(&g, &tau, 2).is_none());
        assert!(solve_coboundary(&g, &tau, 4).is_some());
    }
}
