//! 2-cocycles and maps with values in μ_N, written additively as exponents mod N.

mod dihedral;
mod h2;
mod solver;

pub use dihedral::{dihedral_tau_omega, dihedral_trivial_test, DihedralTrivialTest};
pub use h2::{
    h2_compute, h2_compute_with, schur_modulus, schur_multiplier, CohomologyGroup, SchurMultiplier,
};
pub use solver::{characters, CoboundarySolver};

use crate::arith::{lcm, mul_mod, neg_mod};
use crate::error::{Error, Result};
use crate::group::{Automorphism, FiniteGroup};
use serde::{Deserialize, Serialize};

/// A map H → μ_N stored as exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnitMap {
    pub modulus: u64,
    pub values: Vec<u64>,
}

impl UnitMap {
    pub fn zero(order: usize, modulus: u64) -> Self {
        UnitMap {
            modulus,
            values: vec![0; order],
        }
    }

    pub fn from_fn(order: usize, modulus: u64, f: impl Fn(u32) -> u64) -> Self {
        UnitMap {
            modulus,
            values: (0..order as u32).map(|x| f(x) % modulus).collect(),
        }
    }

    #[inline]
    pub fn get(&self, x: u32) -> u64 {
        self.values[x as usize]
    }

    /// Re-expresses the exponents over a multiple of the modulus.
    pub fn lift(&self, to: u64) -> UnitMap {
        assert!(to % self.modulus == 0, "lift target must be a multiple");
        let c = to / self.modulus;
        UnitMap {
            modulus: to,
            values: self.values.iter().map(|&v| v * c).collect(),
        }
    }

    pub fn add(&self, other: &UnitMap) -> UnitMap {
        let n = lcm(self.modulus, other.modulus);
        let (a, b) = (self.lift(n), other.lift(n));
        UnitMap::from_fn(a.values.len(), n, |x| a.get(x) + b.get(x))
    }

    pub fn neg(&self) -> UnitMap {
        UnitMap::from_fn(self.values.len(), self.modulus, |x| {
            neg_mod(self.get(x), self.modulus)
        })
    }

    pub fn sub(&self, other: &UnitMap) -> UnitMap {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: u64) -> UnitMap {
        UnitMap::from_fn(self.values.len(), self.modulus, |x| {
            mul_mod(self.get(x), k, self.modulus)
        })
    }

    /// x ↦ self(f(x)).
    pub fn compose(&self, f: &Automorphism) -> UnitMap {
        UnitMap::from_fn(self.values.len(), self.modulus, |x| self.get(f.apply(x)))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Whether the map is a homomorphism H → Z/N.
    pub fn is_character(&self, g: &FiniteGroup) -> bool {
        coboundary(g, self).is_zero()
    }
}

/// A normalized 2-cocycle H×H → μ_N stored as an exponent table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cocycle2 {
    pub modulus: u64,
    pub order: usize,
    pub values: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct CocycleRepr {
    modulus: u64,
    values: Vec<Vec<u64>>,
}

impl Serialize for Cocycle2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CocycleRepr {
            modulus: self.modulus,
            values: self
                .values
                .chunks(self.order.max(1))
                .map(|r| r.to_vec())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cocycle2 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = CocycleRepr::deserialize(d)?;
        let order = r.values.len();
        if r.values.iter().any(|row| row.len() != order) {
            return Err(serde::de::Error::custom("cocycle table is not square"));
        }
        if r.modulus == 0 {
            return Err(serde::de::Error::custom("modulus must be positive"));
        }
        Ok(Cocycle2 {
            modulus: r.modulus,
            order,
            values: r
                .values
                .into_iter()
                .flatten()
                .map(|v| v % r.modulus)
                .collect(),
        })
    }
}

impl Cocycle2 {
    pub fn zero(order: usize, modulus: u64) -> Self {
        Cocycle2 {
            modulus,
            order,
            values: vec![0; order * order],
        }
    }

    pub fn from_fn(order: usize, modulus: u64, f: impl Fn(u32, u32) -> u64) -> Self {
        let mut values = Vec::with_capacity(order * order);
        for x in 0..order as u32 {
            for y in 0..order as u32 {
                values.push(f(x, y) % modulus);
            }
        }
        Cocycle2 {
            modulus,
            order,
            values,
        }
    }

    #[inline]
    pub fn get(&self, x: u32, y: u32) -> u64 {
        self.values[x as usize * self.order + y as usize]
    }

    pub fn lift(&self, to: u64) -> Cocycle2 {
        assert!(to % self.modulus == 0, "lift target must be a multiple");
        let c = to / self.modulus;
        Cocycle2 {
            modulus: to,
            order: self.order,
            values: self.values.iter().map(|&v| v * c).collect(),
        }
    }

    pub fn add(&self, other: &Cocycle2) -> Cocycle2 {
        let n = lcm(self.modulus, other.modulus);
        let (a, b) = (self.lift(n), other.lift(n));
        Cocycle2 {
            modulus: n,
            order: self.order,
            values: a
                .values
                .iter()
                .zip(&b.values)
                .map(|(&x, &y)| (x + y) % n)
                .collect(),
        }
    }

    pub fn neg(&self) -> Cocycle2 {
        Cocycle2 {
            modulus: self.modulus,
            order: self.order,
            values: self
                .values
                .iter()
                .map(|&v| neg_mod(v, self.modulus))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Cocycle2) -> Cocycle2 {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: u64) -> Cocycle2 {
        Cocycle2 {
            modulus: self.modulus,
            order: self.order,
            values: self
                .values
                .iter()
                .map(|&v| mul_mod(v, k, self.modulus))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order as u32)
            .all(|x| (0..self.order as u32).all(|y| self.get(x, y) == self.get(y, x)))
    }

    /// Checks normalization and the cocycle identity on all triples.
    pub fn check(&self, g: &FiniteGroup) -> Result<()> {
        if self.order != g.order() {
            return Err(Error::InvalidCocycle("size does not match group".into()));
        }
        let e = g.identity();
        for x in g.elements() {
            if self.get(e, x) != 0 || self.get(x, e) != 0 {
                return Err(Error::InvalidCocycle(format!("not normalized at {x}")));
            }
        }
        let n = self.modulus;
        for x in g.elements() {
            for y in g.elements() {
                let xy = g.mul(x, y);
                let a = self.get(x, y);
                for z in g.elements() {
                    if (a + self.get(xy, z)) % n != (self.get(y, z) + self.get(x, g.mul(y, z))) % n
                    {
                        return Err(Error::InvalidCocycle(format!(
                            "identity fails at ({x},{y},{z})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// ∂μ(x,y) = μ(x) + μ(y) − μ(xy).
pub fn coboundary(g: &FiniteGroup, mu: &UnitMap) -> Cocycle2 {
    let n = mu.modulus;
    Cocycle2::from_fn(g.order(), n, |x, y| {
        mu.get(x) + mu.get(y) + n - mu.get(g.mul(x, y))
    })
}

/// (x,y) ↦ τ(f(x), f(y)).
pub fn pullback(tau: &Cocycle2, f: &Automorphism) -> Cocycle2 {
    Cocycle2::from_fn(tau.order, tau.modulus, |x, y| {
        tau.get(f.apply(x), f.apply(y))
    })
}

/// Σ_{i<m} τ(θ^i x, θ^i y).
pub fn power_product(tau: &Cocycle2, theta: &Automorphism, m: u64) -> Result<Cocycle2> {
    if !theta.pow(m as i64).is_identity() {
        return Err(Error::InvalidDatum(vec![
            "theta^m is not the identity".into()
        ]));
    }
    let n = tau.modulus;
    let mut acc = Cocycle2::zero(tau.order, n);
    let mut power = Automorphism::identity(tau.order);
    for _ in 0..m {
        let pb = pullback(tau, &power);
        for (a, b) in acc.values.iter_mut().zip(&pb.values) {
            *a = (*a + b) % n;
        }
        power = power.compose(theta);
    }
    Ok(acc)
}

/// μ_x(y) = τ(xy, x⁻¹) + τ(x, y) − τ(x, x⁻¹), satisfying
/// τ = ∂μ_x + pullback(τ, ad(x)).
pub fn inner_trivializer(g: &FiniteGroup, tau: &Cocycle2, x: u32) -> Result<UnitMap> {
    let n = tau.modulus;
    let xi = g.inv(x);
    let mu = UnitMap::from_fn(g.order(), n, |y| {
        tau.get(g.mul(x, y), xi) + tau.get(x, y) + n - tau.get(x, xi)
    });
    let rhs = coboundary(g, &mu).add(&pullback(tau, &g.inner(x)));
    if &rhs != tau {
        return Err(Error::InvalidCocycle(
            "inner trivializer identity fails".into(),
        ));
    }
    Ok(mu)
}

/// μ with ∂μ = τ over Z/N', or `None`.
pub fn solve_coboundary(g: &FiniteGroup, tau: &Cocycle2, modulus: u64) -> Option<UnitMap> {
    assert!(
        modulus % tau.modulus == 0,
        "modulus must be a multiple of the cocycle modulus"
    );
    let lifted = tau.lift(modulus);
    let solver = CoboundarySolver::new(g);
    let mu = solver.solve(|x, y| lifted.get(x, y), modulus)?;
    (coboundary(g, &mu) == lifted).then_some(mu)
}

/// Whether τ becomes a coboundary over k^×.
pub fn is_kx_trivial(g: &FiniteGroup, tau: &Cocycle2) -> bool {
    solve_coboundary(g, tau, tau.modulus * g.exponent()).is_some()
}

/// Whether two cocycles define the same class over k^×.
pub fn kx_cohomologous(g: &FiniteGroup, a: &Cocycle2, b: &Cocycle2) -> bool {
    is_kx_trivial(g, &a.sub(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, symmetric};

    #[test]
    fn coboundary_of_character_vanishes() {
        let g = cyclic(6);
        let chi = UnitMap::from_fn(6, 6, |x| x as u64);
        assert!(coboundary(&g, &chi).is_zero());
        let mu = UnitMap::from_fn(6, 6, |x| (x * x) as u64 % 6);
        let mu = UnitMap::from_fn(6, 6, |x| if x == 0 { 0 } else { mu.get(x) });
        coboundary(&g, &mu).check(&g).unwrap();
    }

    #[test]
    fn power_product_trivial_cases() {
        let g = dihedral(3);
        let tau = coboundary(
            &g,
            &UnitMap::from_fn(6, 6, |x| if x == 0 { 0 } else { x as u64 }),
        );
        let id = Automorphism::identity(6);
        assert_eq!(power_product(&tau, &id, 1).unwrap(), tau);
        assert_eq!(power_product(&tau, &id, 3).unwrap(), tau.scale(3));
    }

    #[test]
    fn inner_trivializer_identity() {
        let g = symmetric(3);
        let mu = UnitMap::from_fn(6, 4, |x| if x == 0 { 0 } else { (x as u64 * 3 + 1) % 4 });
        let tau = coboundary(&g, &mu);
        for x in g.elements() {
            inner_trivializer(&g, &tau, x).unwrap();
        }
        assert!(inner_trivializer(&g, &tau, 0).unwrap().is_zero());
    }

    #[test]
    fn serde_round_trip() {
        let t = Cocycle2::from_fn(2, 2, |x, y| u64::from(x == 1 && y == 1));
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"modulus":2,"values":[[0,0],[0,1]]}"#);
        let back: Cocycle2 = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }
}
