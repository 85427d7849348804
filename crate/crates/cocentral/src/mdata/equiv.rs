//! Equivalence of m-data with explicit witnesses (f, l, φ):
//!
//! 1. θ'^l = f∘θ∘f⁻¹
//! 2. Σ_{k<m} φ(θ'^k y) + l·a'(y) = a(f⁻¹ y)
//! 3. Σ_{k<l} τ'(θ'^{−k}x, θ'^{−k}y) + φ(xy) = τ(f⁻¹x, f⁻¹y) + φ(x) + φ(y)

use super::MDatum;
use crate::arith::lcm;
use crate::cohomology::{CoboundarySolver, Cocycle2, UnitMap};
use crate::error::Result;
use crate::group::{automorphism_group, isomorphic, Automorphism, Constraint, FiniteGroup};
use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceWitness {
    /// Isomorphism H → H'.
    pub f: Automorphism,
    pub l: u64,
    /// φ : H' → μ_N.
    pub phi: UnitMap,
}

fn unit_range(m: u64) -> Vec<u64> {
    if m == 1 {
        vec![1]
    } else {
        crate::arith::units(m)
    }
}

/// Reusable search state for data over one fixed group.
pub(crate) struct EquivContext<'a> {
    group: &'a FiniteGroup,
    aut: &'a [Automorphism],
    solver: CoboundarySolver,
    chars: RefCell<HashMap<u64, Arc<Vec<UnitMap>>>>,
}

impl<'a> EquivContext<'a> {
    pub(crate) fn new(group: &'a FiniteGroup, aut: &'a [Automorphism]) -> Self {
        EquivContext {
            group,
            aut,
            solver: CoboundarySolver::new(group),
            chars: RefCell::new(HashMap::new()),
        }
    }

    fn characters(&self, modulus: u64) -> Arc<Vec<UnitMap>> {
        self.chars
            .borrow_mut()
            .entry(modulus)
            .or_insert_with(|| Arc::new(self.solver.characters(modulus)))
            .clone()
    }

    /// First witness for d1 ~ d2 in canonical (l, f, χ) order.
    pub(crate) fn find(&self, d1: &MDatum, d2: &MDatum) -> Option<EquivalenceWitness> {
        let g = self.group;
        let n = g.order();
        let m = d1.m;
        if d2.m != m {
            return None;
        }
        let base = lcm(d1.modulus(), d2.modulus());
        let work = base * g.exponent();
        let (d1, d2) = (d1.lifted(work), d2.lifted(work));
        let chars = self.characters(work);
        let gens = g.generators();

        // Orbit sums S(χ)(y) = Σ_k χ(θ'^k y), keyed for lookup.
        let theta2_powers: Vec<Automorphism> = {
            let mut v = Vec::with_capacity(m as usize);
            let mut p = Automorphism::identity(n);
            for _ in 0..m {
                v.push(p.clone());
                p = p.compose(&d2.theta);
            }
            v
        };
        let orbit_sum = |phi: &UnitMap| -> Vec<u64> {
            (0..n as u32)
                .map(|y| {
                    theta2_powers
                        .iter()
                        .fold(0u64, |acc, p| (acc + phi.get(p.apply(y))) % work)
                })
                .collect()
        };
        let mut by_orbit: HashMap<Vec<u64>, usize> = HashMap::new();
        for (i, chi) in chars.iter().enumerate() {
            by_orbit.entry(orbit_sum(chi)).or_insert(i);
        }

        let theta2_inv = d2.theta.inverse();
        for l in unit_range(m) {
            let t2l = d2.theta.pow(l as i64);
            // c'_l(x,y) = Σ_{k<l} τ'(θ'^{−k}x, θ'^{−k}y)
            let mut c = Cocycle2::zero(n, work);
            let mut p = Automorphism::identity(n);
            for _ in 0..l {
                for x in 0..n as u32 {
                    for y in 0..n as u32 {
                        let idx = x as usize * n + y as usize;
                        c.values[idx] = (c.values[idx] + d2.tau.get(p.apply(x), p.apply(y))) % work;
                    }
                }
                p = theta2_inv.compose(&p);
            }
            for f in self.aut {
                if !gens
                    .iter()
                    .all(|&s| t2l.apply(f.apply(s)) == f.apply(d1.theta.apply(s)))
                {
                    continue;
                }
                if t2l.compose(f) != f.compose(&d1.theta) {
                    continue;
                }
                let finv = f.inverse();
                let sigma = |x: u32, y: u32| {
                    (c.get(x, y) + work - d1.tau.get(finv.apply(x), finv.apply(y))) % work
                };
                let symmetric_on_gens = gens.iter().enumerate().all(|(i, &s)| {
                    gens[i + 1..]
                        .iter()
                        .all(|&t| !g.commutes(s, t) || sigma(s, t) == sigma(t, s))
                });
                if !symmetric_on_gens {
                    continue;
                }
                let Some(phi0) = self.solver.solve(sigma, work) else {
                    continue;
                };
                let s0 = orbit_sum(&phi0);
                let target: Vec<u64> = (0..n as u32)
                    .map(|y| {
                        let want = d1.a.get(finv.apply(y)) + 2 * work
                            - (l % work) * d2.a.get(y) % work
                            - s0[y as usize];
                        want % work
                    })
                    .collect();
                if let Some(&i) = by_orbit.get(&target) {
                    let phi = phi0.add(&chars[i]);
                    let w = EquivalenceWitness {
                        f: f.clone(),
                        l,
                        phi,
                    };
                    debug_assert!(verify_witness(&d1, &d2, &w));
                    return Some(w);
                }
            }
        }
        None
    }
}

/// d2 re-expressed on the group of d1 through an isomorphism ι : H1 → H2.
fn pull_to(d2: &MDatum, group: &Arc<FiniteGroup>, iota: &Automorphism) -> MDatum {
    let iinv = iota.inverse();
    MDatum {
        group: group.clone(),
        m: d2.m,
        theta: iinv.compose(&d2.theta).compose(iota),
        a: d2.a.compose(iota),
        tau: crate::cohomology::pullback(&d2.tau, iota),
    }
}

/// Searches all of Aut(H); for data on different but isomorphic groups the
/// witness map f goes from H to H'.
pub fn equivalent(d1: &MDatum, d2: &MDatum) -> Result<Option<EquivalenceWitness>> {
    let aut = automorphism_group(&d1.group, &Constraint::None)?;
    equivalent_in(d1, d2, aut.elements())
}

/// As [`equivalent`], with f restricted to the given automorphisms of H.
pub fn equivalent_in(
    d1: &MDatum,
    d2: &MDatum,
    aut: &[Automorphism],
) -> Result<Option<EquivalenceWitness>> {
    if d1.m != d2.m {
        return Ok(None);
    }
    if d1.group == d2.group {
        return Ok(EquivContext::new(&d1.group, aut).find(d1, d2));
    }
    let Some(iota) = isomorphic(&d1.group, &d2.group) else {
        return Ok(None);
    };
    let pulled = pull_to(d2, &d1.group, &iota);
    let w = EquivContext::new(&d1.group, aut).find(d1, &pulled);
    Ok(w.map(|w| EquivalenceWitness {
        f: iota.compose(&w.f),
        l: w.l,
        phi: w.phi.compose(&iota.inverse()),
    }))
}

/// Checks conditions (1)–(3) verbatim.
pub fn verify_witness(d1: &MDatum, d2: &MDatum, w: &EquivalenceWitness) -> bool {
    let n = d1.order();
    let (g1, g2) = (&d1.group, &d2.group);
    if d1.m != d2.m || n != d2.order() || w.f.map.len() != n || w.phi.values.len() != n {
        return false;
    }
    let finv = w.f.inverse();
    let is_iso = g1.elements().all(|x| {
        g1.elements()
            .all(|y| w.f.apply(g1.mul(x, y)) == g2.mul(w.f.apply(x), w.f.apply(y)))
    });
    if !is_iso || w.phi.get(g2.identity()) != 0 {
        return false;
    }
    if d2.theta.pow(w.l as i64) != w.f.compose(&d1.theta).compose(&finv) {
        return false;
    }
    let work = lcm(lcm(d1.modulus(), d2.modulus()), w.phi.modulus);
    let (d1, d2, phi) = (d1.lifted(work), d2.lifted(work), w.phi.lift(work));
    let th = &d2.theta;
    let th_inv = th.inverse();
    for y in g2.elements() {
        let mut s = 0u64;
        let mut z = y;
        for _ in 0..d1.m {
            s = (s + phi.get(z)) % work;
            z = th.apply(z);
        }
        if (s + (w.l % work) * d2.a.get(y)) % work != d1.a.get(finv.apply(y)) {
            return false;
        }
    }
    for x in g2.elements() {
        for y in g2.elements() {
            let mut c = 0u64;
            let (mut px, mut py) = (x, y);
            for _ in 0..w.l {
                c = (c + d2.tau.get(px, py)) % work;
                px = th_inv.apply(px);
                py = th_inv.apply(py);
            }
            let lhs = (c + phi.get(g2.mul(x, y))) % work;
            let rhs = (d1.tau.get(finv.apply(x), finv.apply(y)) + phi.get(x) + phi.get(y)) % work;
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{coboundary, dihedral_tau_omega};
    use crate::group::{alternating, dihedral, dihedral_psi};
    use crate::mdata::{enumerate_classes, solve_a, ClassFilter};

    fn dihedral_datum(n: usize, u: i64, v: i64, w: u64) -> Vec<MDatum> {
        let g = Arc::new(dihedral(n));
        let tau = dihedral_tau_omega(n, w);
        let theta = dihedral_psi(n, u, v).unwrap();
        solve_a(&g, 2, &theta, &tau)
            .unwrap()
            .map(|s| s.solutions)
            .unwrap_or_default()
            .into_iter()
            .map(|a| MDatum {
                group: g.clone(),
                m: 2,
                theta: theta.clone(),
                a,
                tau: tau.clone(),
            })
            .collect()
    }

    #[test]
    fn reflexive_with_identity_witness() {
        for d in dihedral_datum(6, 0, -1, 1) {
            let w = equivalent(&d, &d).unwrap().unwrap();
            assert!(w.f.is_identity());
            assert_eq!(w.l, 1);
            assert!(verify_witness(&d, &d, &w));
        }
    }

    #[test]
    fn transport_is_equivalent() {
        let data = dihedral_datum(6, 0, -1, 1);
        let aut = automorphism_group(&data[0].group, &Constraint::None).unwrap();
        for d in &data {
            for f in aut.elements().iter().step_by(5) {
                let t = d.transport(f, 1).unwrap();
                t.check().unwrap();
                let w = equivalent(d, &t).unwrap().expect("transport is equivalent");
                assert!(verify_witness(d, &t, &w));
            }
        }
        let g = Arc::new(alternating(5));
        let x = g.elements().find(|&x| g.elem_order(x) == 5).unwrap();
        let d = MDatum {
            theta: g.inner(x),
            ..MDatum::trivial(g.clone(), 5)
        };
        let t = d.transport(&g.inner(1), 2).unwrap();
        t.check().unwrap();
        assert!(equivalent(&d, &t).unwrap().is_some());
    }

    #[test]
    fn cocycle_shift_is_equivalent() {
        let d = dihedral_datum(6, 0, -1, 1).remove(0);
        let mu = UnitMap::from_fn(
            12,
            6,
            |x| if x == 0 { 0 } else { (x as u64 * x as u64) % 6 },
        );
        let shifted = d
            .shift_cocycle(&d.tau.add(&coboundary(&d.group, &mu)))
            .unwrap();
        let w = equivalent(&d, &shifted).unwrap().unwrap();
        assert!(verify_witness(&d, &shifted, &w));
        let back = equivalent(&shifted, &d).unwrap().unwrap();
        assert!(verify_witness(&shifted, &d, &back));
    }

    #[test]
    fn a5_has_four_noncommutative_classes() {
        let h = Arc::new(alternating(5));
        let classes = enumerate_classes(&h, 2, ClassFilter::Noncommutative).unwrap();
        assert_eq!(classes.len(), 4);
        for i in 0..classes.len() {
            for j in 0..classes.len() {
                let found = equivalent(&classes[i].rep, &classes[j].rep)
                    .unwrap()
                    .is_some();
                assert_eq!(found, i == j);
            }
        }
    }

    #[test]
    fn isomorphic_groups_are_absorbed() {
        let g = dihedral(3);
        let perm: Vec<u32> = vec![0, 2, 1, 5, 4, 3];
        let relabeled = Arc::new(g.relabel(&perm));
        let d = dihedral_datum(3, 0, -1, 0).remove(0);
        let iota = Automorphism { map: perm.clone() };
        let d2 = MDatum {
            group: relabeled,
            m: 2,
            theta: iota.compose(&d.theta).compose(&iota.inverse()),
            a: d.a.compose(&iota.inverse()),
            tau: crate::cohomology::pullback(&d.tau, &iota.inverse()),
        };
        d2.check().unwrap();
        let w = equivalent(&d, &d2).unwrap().unwrap();
        assert!(verify_witness(&d, &d2, &w));
    }
}
