//! Brute-force scan of the Hopf algebra axioms on basis elements.

use super::MonomialHopf;
use crate::cyclo::RootSums;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::hash::Hash;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    /// First failing basis elements, if any.
    pub witness: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub dimension: usize,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect()
    }
}

/// Linear combinations keyed by basis tuples, as lists of root exponents.
struct Sum<K>(HashMap<K, Vec<u64>>);

impl<K: Hash + Eq + Clone> Sum<K> {
    fn new() -> Self {
        Sum(HashMap::new())
    }

    fn add(&mut self, k: K, e: u64) {
        self.0.entry(k).or_default().push(e);
    }

    fn equals(&self, other: &Sum<K>, roots: &RootSums) -> bool {
        let empty = Vec::new();
        self.0
            .iter()
            .all(|(k, v)| roots.equal(v, other.0.get(k).unwrap_or(&empty)))
            && other
                .0
                .iter()
                .all(|(k, v)| self.0.contains_key(k) || roots.equal(v, &empty))
    }
}

struct Scan<'a> {
    h: &'a MonomialHopf,
    roots: RootSums,
    dim: u32,
    n: u64,
    /// Right factors c with b·c ≠ 0, per b.
    nonzero_right: Vec<Vec<u32>>,
}

fn check(name: &str, witness: Option<Vec<u32>>) -> AxiomCheck {
    AxiomCheck {
        name: name.to_string(),
        passed: witness.is_none(),
        witness,
    }
}

impl Scan<'_> {
    fn associativity(&self) -> Option<Vec<u32>> {
        let h = self.h;
        let n = self.n;
        for a in 0..self.dim {
            for b in 0..self.dim {
                match h.mul(a, b) {
                    Some((ab, e1)) => {
                        for c in 0..self.dim {
                            let lhs = h.mul(ab, c).map(|(t, e)| (t, (e1 + e) % n));
                            let rhs = h
                                .mul(b, c)
                                .and_then(|(bc, e2)| h.mul(a, bc).map(|(t, e)| (t, (e2 + e) % n)));
                            if lhs != rhs {
                                return Some(vec![a, b, c]);
                            }
                        }
                    }
                    None => {
                        for &c in &self.nonzero_right[b as usize] {
                            let (bc, _) = h.mul(b, c).unwrap();
                            if h.mul(a, bc).is_some() {
                                return Some(vec![a, b, c]);
                            }
                        }
                    }
                }
            }
        }
        None
    }

    fn unit(&self) -> Option<Vec<u32>> {
        let h = self.h;
        for b in 0..self.dim {
            let mut left = Sum::new();
            let mut right = Sum::new();
            for &(u, e) in h.unit() {
                if let Some((t, p)) = h.mul(u, b) {
                    left.add(t, (e + p) % self.n);
                }
                if let Some((t, p)) = h.mul(b, u) {
                    right.add(t, (e + p) % self.n);
                }
            }
            let mut id = Sum::new();
            id.add(b, 0);
            if !left.equals(&id, &self.roots) || !right.equals(&id, &self.roots) {
                return Some(vec![b]);
            }
        }
        None
    }

    fn coassociativity(&self) -> Option<Vec<u32>> {
        let h = self.h;
        for b in 0..self.dim {
            let mut left = Sum::new();
            let mut right = Sum::new();
            for &(l, r, e) in h.coproduct(b) {
                for &(ll, lr, f) in h.coproduct(l) {
                    left.add((ll, lr, r), (e + f) % self.n);
                }
                for &(rl, rr, f) in h.coproduct(r) {
                    right.add((l, rl, rr), (e + f) % self.n);
                }
            }
            if !left.equals(&right, &self.roots) {
                return Some(vec![b]);
            }
        }
        None
    }

    fn counit(&self) -> Option<Vec<u32>> {
        let h = self.h;
        for b in 0..self.dim {
            let mut left = Sum::new();
            let mut right = Sum::new();
            for &(l, r, e) in h.coproduct(b) {
                if let Some(c) = h.counit(l) {
                    left.add(r, (e + c) % self.n);
                }
                if let Some(c) = h.counit(r) {
                    right.add(l, (e + c) % self.n);
                }
            }
            let mut id = Sum::new();
            id.add(b, 0);
            if !left.equals(&id, &self.roots) || !right.equals(&id, &self.roots) {
                return Some(vec![b]);
            }
        }
        None
    }

    fn coproduct_multiplicative(&self) -> Option<Vec<u32>> {
        let h = self.h;
        let by_left: Vec<HashMap<u32, Vec<(u32, u64)>>> = (0..self.dim)
            .map(|b| {
                let mut m: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
                for &(l, r, e) in h.coproduct(b) {
                    m.entry(l).or_default().push((r, e));
                }
                m
            })
            .collect();
        for a in 0..self.dim {
            for b in 0..self.dim {
                let mut lhs = Sum::new();
                if let Some((t, e)) = h.mul(a, b) {
                    for &(l, r, f) in h.coproduct(t) {
                        lhs.add((l, r), (e + f) % self.n);
                    }
                }
                let mut rhs = Sum::new();
                for &(a1, a2, e) in h.coproduct(a) {
                    for &b1 in &self.nonzero_right[a1 as usize] {
                        let Some(terms) = by_left[b as usize].get(&b1) else {
                            continue;
                        };
                        let (l, p) = h.mul(a1, b1).unwrap();
                        for &(b2, f) in terms {
                            if let Some((r, q)) = h.mul(a2, b2) {
                                rhs.add((l, r), (e + f + p + q) % self.n);
                            }
                        }
                    }
                }
                if !lhs.equals(&rhs, &self.roots) {
                    return Some(vec![a, b]);
                }
            }
        }
        None
    }

    fn unit_grouplike(&self) -> Option<Vec<u32>> {
        let h = self.h;
        let mut lhs = Sum::new();
        let mut eps = Vec::new();
        for &(u, e) in h.unit() {
            for &(l, r, f) in h.coproduct(u) {
                lhs.add((l, r), (e + f) % self.n);
            }
            if let Some(c) = h.counit(u) {
                eps.push((e + c) % self.n);
            }
        }
        let mut rhs = Sum::new();
        for &(u, e) in h.unit() {
            for &(v, f) in h.unit() {
                rhs.add((u, v), (e + f) % self.n);
            }
        }
        (!lhs.equals(&rhs, &self.roots) || !self.roots.equal(&eps, &[0])).then(Vec::new)
    }

    fn counit_multiplicative(&self) -> Option<Vec<u32>> {
        let h = self.h;
        for a in 0..self.dim {
            for b in 0..self.dim {
                let lhs = h
                    .mul(a, b)
                    .and_then(|(t, e)| h.counit(t).map(|c| (e + c) % self.n));
                let rhs = match (h.counit(a), h.counit(b)) {
                    (Some(x), Some(y)) => Some((x + y) % self.n),
                    _ => None,
                };
                if lhs != rhs {
                    return Some(vec![a, b]);
                }
            }
        }
        None
    }

    /// m(S⊗id)Δ = ηε (left) or m(id⊗S)Δ = ηε (right).
    fn antipode(&self, left: bool) -> Option<Vec<u32>> {
        let h = self.h;
        for b in 0..self.dim {
            let mut lhs = Sum::new();
            for &(l, r, e) in h.coproduct(b) {
                let prod = if left {
                    let (s, f) = h.antipode(l);
                    h.mul(s, r).map(|(t, p)| (t, e + f + p))
                } else {
                    let (s, f) = h.antipode(r);
                    h.mul(l, s).map(|(t, p)| (t, e + f + p))
                };
                if let Some((t, x)) = prod {
                    lhs.add(t, x % self.n);
                }
            }
            let mut rhs = Sum::new();
            if let Some(c) = h.counit(b) {
                for &(u, e) in h.unit() {
                    rhs.add(u, (c + e) % self.n);
                }
            }
            if !lhs.equals(&rhs, &self.roots) {
                return Some(vec![b]);
            }
        }
        None
    }

    fn antipode_anti_multiplicative(&self) -> Option<Vec<u32>> {
        let h = self.h;
        for a in 0..self.dim {
            for b in 0..self.dim {
                let lhs = h.mul(a, b).map(|(t, e)| {
                    let (s, f) = h.antipode(t);
                    (s, (e + f) % self.n)
                });
                let (sa, ea) = h.antipode(a);
                let (sb, eb) = h.antipode(b);
                let rhs = h.mul(sb, sa).map(|(t, p)| (t, (ea + eb + p) % self.n));
                if lhs != rhs {
                    return Some(vec![a, b]);
                }
            }
        }
        None
    }

    /// Products of grade i and grade j basis elements span grade i + j.
    fn strong_grading(&self) -> Option<Vec<u32>> {
        let h = self.h;
        let m = h.m;
        let n = h.group.order();
        for i in 0..m {
            for j in 0..m {
                let mut hit = vec![false; n];
                for x in 0..n as u32 {
                    for y in 0..n as u32 {
                        if let Some((t, _)) = h.mul(h.basis_index(x, i), h.basis_index(y, j)) {
                            let (z, k) = h.basis_pair(t);
                            if k == (i + j) % m {
                                hit[z as usize] = true;
                            }
                        }
                    }
                }
                if hit.iter().any(|&v| !v) {
                    return Some(vec![i as u32, j as u32]);
                }
            }
        }
        None
    }
}

pub fn verify_hopf_axioms(h: &MonomialHopf) -> AxiomReport {
    let dim = h.dimension() as u32;
    let nonzero_right = (0..dim)
        .map(|b| (0..dim).filter(|&c| h.mul(b, c).is_some()).collect())
        .collect();
    let s = Scan {
        h,
        roots: RootSums::new(h.modulus),
        dim,
        n: h.modulus,
        nonzero_right,
    };
    AxiomReport {
        dimension: h.dimension(),
        checks: vec![
            check("associativity", s.associativity()),
            check("unit", s.unit()),
            check("coassociativity", s.coassociativity()),
            check("counit", s.counit()),
            check("coproduct multiplicative", s.coproduct_multiplicative()),
            check("unit grouplike", s.unit_grouplike()),
            check("counit multiplicative", s.counit_multiplicative()),
            check("left antipode", s.antipode(true)),
            check("right antipode", s.antipode(false)),
            check(
                "antipode anti-multiplicative",
                s.antipode_anti_multiplicative(),
            ),
            check("strong grading", s.strong_grading()),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::super::{build_am, build_am_unchecked};
    use super::*;
    use crate::cohomology::dihedral_tau_omega;
    use crate::group::{dihedral, dihedral_psi};
    use crate::mdata::{solve_a, MDatum};
    use std::sync::Arc;

    fn d6_datum() -> MDatum {
        let g = Arc::new(dihedral(6));
        let tau = dihedral_tau_omega(6, 1);
        let theta = dihedral_psi(6, 0, -1).unwrap();
        let a = solve_a(&g, 2, &theta, &tau).unwrap().unwrap().solutions[0].clone();
        MDatum {
            group: g,
            m: 2,
            theta,
            a,
            tau,
        }
    }

    #[test]
    fn valid_datum_passes() {
        let r = verify_hopf_axioms(&build_am(&d6_datum()).unwrap());
        assert!(r.all_pass(), "{:?}", r.failed());
        assert_eq!(r.dimension, 24);
    }

    #[test]
    fn corrupted_cocycle_breaks_coassociativity() {
        let mut d = d6_datum();
        let mut tau = d.tau.lift(d.modulus());
        let k = 3 * 12 + 7;
        tau.values[k] = (tau.values[k] + 1) % tau.modulus;
        d.tau = tau;
        let r = verify_hopf_axioms(&build_am_unchecked(&d).unwrap());
        assert!(r.failed().contains(&"coassociativity"));
    }
}
