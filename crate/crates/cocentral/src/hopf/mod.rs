//! Monomial Hopf algebras on the basis e_x g^i of A_m(H, θ, a, τ) and of
//! graded twists, with axiom scans and isomorphism invariants.

mod axioms;
mod fingerprint;
mod twist;

pub use axioms::{verify_hopf_axioms, AxiomCheck, AxiomReport};
pub use fingerprint::{fingerprint, hopf_invariants, GroupSummary, HopfFingerprint};
pub use twist::graded_twist_direct;

use crate::error::{Error, Result};
use crate::group::{Automorphism, Budget, FiniteGroup};
use crate::mdata::MDatum;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

const ZERO: u32 = u32::MAX;

/// Basis element b = i·|H| + x stands for e_x g^i; scalars are exponents of
/// a primitive N-th root of unity.
#[derive(Clone, Debug)]
pub struct MonomialHopf {
    pub group: Arc<FiniteGroup>,
    pub m: u64,
    pub modulus: u64,
    /// Dense dim × dim table of product targets (`u32::MAX` for zero).
    product: Vec<u32>,
    product_exp: Vec<u64>,
    /// Δ(b) as (left, right, exponent) terms.
    coproduct: Vec<Vec<(u32, u32, u64)>>,
    /// ε(b) as an exponent, or zero.
    counit: Vec<Option<u64>>,
    /// The unit as a sum of scaled basis elements.
    unit: Vec<(u32, u64)>,
    antipode: Vec<(u32, u64)>,
}

impl MonomialHopf {
    pub fn dimension(&self) -> usize {
        self.group.order() * self.m as usize
    }

    pub fn basis_index(&self, x: u32, i: u64) -> u32 {
        (i as usize * self.group.order() + x as usize) as u32
    }

    /// (x, i) of a basis index.
    pub fn basis_pair(&self, b: u32) -> (u32, u64) {
        let n = self.group.order();
        ((b as usize % n) as u32, (b as usize / n) as u64)
    }

    pub fn grade(&self, b: u32) -> u64 {
        self.basis_pair(b).1
    }

    pub fn mul(&self, a: u32, b: u32) -> Option<(u32, u64)> {
        let k = a as usize * self.dimension() + b as usize;
        let t = self.product[k];
        (t != ZERO).then(|| (t, self.product_exp[k]))
    }

    pub fn coproduct(&self, b: u32) -> &[(u32, u32, u64)] {
        &self.coproduct[b as usize]
    }

    pub fn counit(&self, b: u32) -> Option<u64> {
        self.counit[b as usize]
    }

    pub fn unit(&self) -> &[(u32, u64)] {
        &self.unit
    }

    pub fn antipode(&self, b: u32) -> (u32, u64) {
        self.antipode[b as usize]
    }

    /// Assembles the tables; the antipode is solved from the left
    /// convolution identity.
    pub(crate) fn from_parts(
        group: Arc<FiniteGroup>,
        m: u64,
        modulus: u64,
        product: Vec<u32>,
        product_exp: Vec<u64>,
        coproduct: Vec<Vec<(u32, u32, u64)>>,
        counit: Vec<Option<u64>>,
        unit: Vec<(u32, u64)>,
    ) -> Result<Self> {
        let mut h = MonomialHopf {
            group,
            m,
            modulus,
            product,
            product_exp,
            coproduct,
            counit,
            unit,
            antipode: Vec::new(),
        };
        h.antipode = h.solve_antipode()?;
        Ok(h)
    }

    /// For each grade i, Δ(e_1 g^i) = Σ c·b₁⊗b₂ and m(S⊗id)Δ = ε·1 give one
    /// equation per term: S(b₁) is the unique grade −i element t with
    /// t·b₂ ≠ 0, scaled so that the term contributes the unit coefficient.
    fn solve_antipode(&self) -> Result<Vec<(u32, u64)>> {
        let n = self.group.order();
        let nn = self.modulus;
        let e = self.group.identity();
        let mut unit_coeff = vec![None; self.dimension()];
        for &(b, c) in &self.unit {
            unit_coeff[b as usize] = Some(c);
        }
        let mut s = vec![(ZERO, 0u64); self.dimension()];
        let fail = |msg: &str| Error::InvalidDatum(vec![format!("antipode: {msg}")]);
        for i in 0..self.m {
            let b0 = self.basis_index(e, i);
            let eps = self.counit(b0).ok_or_else(|| fail("ε(e_1 g^i) vanishes"))?;
            let target_grade = (self.m - i) % self.m;
            let mut seen = vec![false; n];
            for &(b1, b2, c) in self.coproduct(b0) {
                let hits: Vec<(u32, u32, u64)> = (0..n as u32)
                    .map(|x| self.basis_index(x, target_grade))
                    .filter_map(|t| self.mul(t, b2).map(|(w, p)| (t, w, p)))
                    .collect();
                let [(t, w, p)] = hits[..] else {
                    return Err(fail("no unique partner"));
                };
                let (wx, _) = self.basis_pair(w);
                if seen[wx as usize] {
                    return Err(fail("repeated target"));
                }
                seen[wx as usize] = true;
                let u = unit_coeff[w as usize].ok_or_else(|| fail("target outside the unit"))?;
                // ζ^{s + c + p} = ζ^{eps + u}
                let exp = (2 * nn + eps + u - c % nn - p % nn) % nn;
                s[b1 as usize] = (t, exp);
            }
        }
        if s.iter().any(|&(t, _)| t == ZERO) {
            return Err(fail("some basis element is not reached"));
        }
        Ok(s)
    }

    pub fn dump(&self) -> HopfDump {
        let dim = self.dimension() as u32;
        let mut product = Vec::new();
        for a in 0..dim {
            for b in 0..dim {
                if let Some((t, e)) = self.mul(a, b) {
                    product.push([a as u64, b as u64, t as u64, e]);
                }
            }
        }
        HopfDump {
            modulus: self.modulus,
            m: self.m,
            group_order: self.group.order(),
            basis: (0..dim)
                .map(|b| self.basis_pair(b))
                .map(|(x, i)| [x as u64, i])
                .collect(),
            product,
            coproduct: (0..dim)
                .flat_map(|b| {
                    self.coproduct(b)
                        .iter()
                        .map(move |&(l, r, e)| [b as u64, l as u64, r as u64, e])
                })
                .collect(),
            counit: (0..dim)
                .filter_map(|b| self.counit(b).map(|e| [b as u64, e]))
                .collect(),
            unit: self.unit.iter().map(|&(b, e)| [b as u64, e]).collect(),
            antipode: (0..dim)
                .map(|b| {
                    let (t, e) = self.antipode(b);
                    [b as u64, t as u64, e]
                })
                .collect(),
        }
    }
}

/// Sparse JSON rendering of the structure tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfDump {
    pub modulus: u64,
    pub m: u64,
    pub group_order: usize,
    /// [x, i] per basis index.
    pub basis: Vec<[u64; 2]>,
    /// [a, b, target, exponent] for nonzero products.
    pub product: Vec<[u64; 4]>,
    /// [b, left, right, exponent].
    pub coproduct: Vec<[u64; 4]>,
    /// [b, exponent] for nonzero counit values.
    pub counit: Vec<[u64; 2]>,
    pub unit: Vec<[u64; 2]>,
    /// [b, target, exponent].
    pub antipode: Vec<[u64; 3]>,
}

/// A_m(H, θ, a, τ):
/// (x,i)·(y,j) = [x = θ^i y]·ζ^{⌊(i+j)/m⌋·a(x)}·(x, i+j mod m),
/// Δ(x,i) = Σ_{yz=x} ζ^{c_i(y,z)} (y,i)⊗(z,i) with
/// c_i(y,z) = Σ_{k<i} τ(θ^{−k}y, θ^{−k}z), ε(x,i) = [x = 1].
pub fn build_am(d: &MDatum) -> Result<MonomialHopf> {
    build_am_with(d, &Budget::default())
}

pub fn build_am_with(d: &MDatum, budget: &Budget) -> Result<MonomialHopf> {
    d.check()?;
    if d.order() * d.m as usize > budget.max_hopf_dim {
        return Err(Error::BudgetExceeded(format!(
            "Hopf algebra of dimension {} exceeds cap {}",
            d.order() * d.m as usize,
            budget.max_hopf_dim
        )));
    }
    build_am_unchecked(d)
}

/// Builds the tables without validating the datum (used to exercise the
/// axiom scan on corrupted input).
pub fn build_am_unchecked(d: &MDatum) -> Result<MonomialHopf> {
    let g = d.group.clone();
    let n = g.order();
    let m = d.m;
    let nn = d.modulus();
    let dl = d.lifted(nn);
    let dim = n * m as usize;
    let idx = |x: u32, i: u64| (i as usize * n + x as usize) as u32;
    let theta_pows: Vec<Automorphism> = (0..m as i64).map(|k| dl.theta.pow(k)).collect();
    let mut product = vec![ZERO; dim * dim];
    let mut product_exp = vec![0u64; dim * dim];
    for i in 0..m {
        for x in 0..n as u32 {
            let a = idx(x, i);
            for j in 0..m {
                // x = θ^i(y) ⟺ y = θ^{−i}(x)
                let y = theta_pows[((m - i) % m) as usize].apply(x);
                let b = idx(y, j);
                let k = a as usize * dim + b as usize;
                product[k] = idx(x, (i + j) % m);
                product_exp[k] = ((i + j) / m) * dl.a.get(x) % nn;
            }
        }
    }
    let theta_inv = dl.theta.inverse();
    let mut coproduct = vec![Vec::new(); dim];
    // c_i(y,z) accumulated over i
    let mut c = vec![0u64; n * n];
    let mut p = Automorphism::identity(n);
    for i in 0..m {
        for y in 0..n as u32 {
            for z in 0..n as u32 {
                let x = g.mul(y, z);
                coproduct[idx(x, i) as usize].push((
                    idx(y, i),
                    idx(z, i),
                    c[y as usize * n + z as usize],
                ));
            }
        }
        for y in 0..n as u32 {
            for z in 0..n as u32 {
                let k = y as usize * n + z as usize;
                c[k] = (c[k] + dl.tau.get(p.apply(y), p.apply(z))) % nn;
            }
        }
        p = theta_inv.compose(&p);
    }
    let e = g.identity();
    let counit = (0..dim as u32)
        .map(|b| ((b as usize % n) as u32 == e).then_some(0))
        .collect();
    let unit = (0..n as u32).map(|x| (idx(x, 0), 0)).collect();
    MonomialHopf::from_parts(g, m, nn, product, product_exp, coproduct, counit, unit)
}
