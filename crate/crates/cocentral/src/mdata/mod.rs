//! m-data (H, θ, a, τ): validation, solving for a, transport along
//! automorphisms and cohomologous cocycles, equivalence and classification.

mod classes;
mod equiv;
mod from_action;
mod structure;

pub use classes::{enumerate_classes, enumerate_classes_in, ClassFilter, DatumClass, DatumPool};
pub(crate) use equiv::EquivContext;
pub use equiv::{equivalent, equivalent_in, verify_witness, EquivalenceWitness};
pub use from_action::{datum_from_action, ActionDatum};
pub use structure::{structure_groups, StructureGroups};

use crate::arith::{gcd, lcm};
use crate::cohomology::{
    characters, coboundary, power_product, pullback, solve_coboundary, CoboundarySolver, Cocycle2,
    UnitMap,
};
use crate::error::{Error, Result};
use crate::group::{make_group, Automorphism, FiniteGroup, GroupFile};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MDatum {
    pub group: Arc<FiniteGroup>,
    pub m: u64,
    pub theta: Automorphism,
    pub a: UnitMap,
    pub tau: Cocycle2,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<String>,
    /// μ : H → Z/m witnessing the graded twist type, when requested and found.
    pub twist_mu: Option<UnitMap>,
    pub twist_checked: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn is_twist_type(&self) -> bool {
        self.is_valid() && self.twist_mu.is_some()
    }
}

impl MDatum {
    /// The trivial datum (H, id, 0, 0).
    pub fn trivial(group: Arc<FiniteGroup>, m: u64) -> Self {
        let n = group.order();
        MDatum {
            theta: Automorphism::identity(n),
            a: UnitMap::zero(n, 1),
            tau: Cocycle2::zero(n, 1),
            group,
            m,
        }
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// lcm of the moduli of a and τ.
    pub fn modulus(&self) -> u64 {
        lcm(self.a.modulus, self.tau.modulus)
    }

    /// The same datum with a and τ expressed over a multiple of both moduli.
    pub fn lifted(&self, to: u64) -> MDatum {
        MDatum {
            a: self.a.lift(to),
            tau: self.tau.lift(to),
            ..self.clone()
        }
    }

    pub fn is_commutative(&self) -> bool {
        self.theta.is_identity()
    }

    pub fn validate(&self, check_twist_type: bool) -> ValidationReport {
        let g = &self.group;
        let n = g.order();
        let mut v = Vec::new();
        if self.m == 0 {
            v.push("m must be positive".to_string());
        }
        if self.theta.map.len() != n || !self.theta.is_automorphism_of(g) {
            v.push("theta is not an automorphism of H".into());
        } else if !self.theta.pow(self.m as i64).is_identity() {
            v.push("theta^m is not the identity".into());
        }
        if self.a.values.len() != n || self.tau.order != n {
            v.push("a or tau has the wrong size".into());
            return ValidationReport {
                violations: v,
                ..Default::default()
            };
        }
        if self.a.get(g.identity()) != 0 {
            v.push("a(1) is not 1".into());
        }
        if v.is_empty() && self.a.compose(&self.theta) != self.a {
            v.push("a∘theta differs from a".into());
        }
        if let Err(e) = self.tau.check(g) {
            v.push(format!("tau is not a normalized cocycle: {e}"));
        }
        if v.is_empty() {
            let big = self.modulus();
            let d = self.lifted(big);
            let p = power_product(&d.tau, &d.theta, self.m).expect("theta^m checked");
            let lhs = p.add(&coboundary(g, &d.a));
            if !lhs.is_zero() {
                v.push("datum equation fails".into());
            }
        }
        let mut report = ValidationReport {
            violations: v,
            twist_mu: None,
            twist_checked: check_twist_type,
        };
        if check_twist_type && report.is_valid() {
            report.twist_mu = self.twist_type_witness();
        }
        report
    }

    pub fn check(&self) -> Result<()> {
        let r = self.validate(false);
        if r.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidDatum(r.violations))
        }
    }

    /// μ : H → Z/m with Σ_i μ∘θ^i = 0, τ = ∂μ + τ∘(θ×θ) and
    /// a = Σ_{k=1}^{m−1} k·μ∘θ^{−k}.
    fn twist_type_witness(&self) -> Option<UnitMap> {
        let g = &self.group;
        let m = self.m;
        let big = lcm(self.modulus(), m);
        let tau = self.tau.lift(big);
        let a = self.a.lift(big);
        let step = big / m;
        let sigma = tau.sub(&pullback(&tau, &self.theta));
        if sigma.values.iter().any(|v| v % step != 0) {
            return None;
        }
        let sigma_m = Cocycle2 {
            modulus: m,
            order: sigma.order,
            values: sigma.values.iter().map(|v| v / step).collect(),
        };
        let solver = CoboundarySolver::new(g);
        let mu0 = solver.solve(|x, y| sigma_m.get(x, y), m)?;
        if coboundary(g, &mu0) != sigma_m {
            return None;
        }
        let theta_inv = self.theta.inverse();
        for chi in solver.characters(m) {
            let mu = mu0.add(&chi);
            let mut orbit_sum = UnitMap::zero(g.order(), m);
            let mut power = Automorphism::identity(g.order());
            for _ in 0..m {
                orbit_sum = orbit_sum.add(&mu.compose(&power));
                power = power.compose(&self.theta);
            }
            if !orbit_sum.is_zero() {
                continue;
            }
            let mut acc = UnitMap::zero(g.order(), m);
            let mut power = Automorphism::identity(g.order());
            for k in 1..m {
                power = power.compose(&theta_inv);
                acc = acc.add(&mu.compose(&power).scale(k));
            }
            if acc.lift(big) == a {
                return Some(mu);
            }
        }
        None
    }

    /// (H, f∘θ^l∘f⁻¹, l·(a∘f⁻¹), Σ_{k<l} τ∘(θ^{−k}f⁻¹ × θ^{−k}f⁻¹)).
    pub fn transport(&self, f: &Automorphism, l: u64) -> Result<MDatum> {
        if gcd(l % self.m.max(1), self.m) != 1 && self.m != 1 {
            return Err(Error::NotUnit { l, m: self.m });
        }
        let finv = f.inverse();
        let theta = f.compose(&self.theta.pow(l as i64)).compose(&finv);
        let a = self.a.compose(&finv).scale(l);
        let n = self.tau.modulus;
        let mut tau = Cocycle2::zero(self.order(), n);
        let theta_inv = self.theta.inverse();
        let mut power = Automorphism::identity(self.order());
        for _ in 0..l {
            tau = tau.add(&pullback(&self.tau, &power.compose(&finv)));
            power = theta_inv.compose(&power);
        }
        Ok(MDatum {
            group: self.group.clone(),
            m: self.m,
            theta,
            a,
            tau,
        })
    }

    /// The datum with cocycle τ' = τ + ∂μ and a' = a − Σ_i μ∘θ^i.
    pub fn shift_cocycle(&self, tau_new: &Cocycle2) -> Result<MDatum> {
        let g = &self.group;
        let base = lcm(self.modulus(), tau_new.modulus);
        let work = base * g.exponent();
        let diff = tau_new.lift(base).sub(&self.tau.lift(base));
        let mu = solve_coboundary(g, &diff, work).ok_or(Error::NotCohomologous)?;
        Ok(self.shift_by(&mu, tau_new))
    }

    fn shift_by(&self, mu: &UnitMap, tau_new: &Cocycle2) -> MDatum {
        let mut orbit = UnitMap::zero(self.order(), mu.modulus);
        let mut power = Automorphism::identity(self.order());
        for _ in 0..self.m {
            orbit = orbit.add(&mu.compose(&power));
            power = power.compose(&self.theta);
        }
        MDatum {
            group: self.group.clone(),
            m: self.m,
            theta: self.theta.clone(),
            a: self.a.sub(&orbit),
            tau: tau_new.clone(),
        }
    }

    /// Shifts by μ with μ∘θ = μ and m·μ = a, so the new a is trivial.
    pub fn normalize(&self) -> MDatum {
        let n = self.a.modulus;
        let mu = UnitMap {
            modulus: n * self.m,
            values: self.a.values.clone(),
        };
        let tau = self.tau.add(&coboundary(&self.group, &mu));
        self.shift_by(&mu, &tau)
    }
}

/// Solutions a of Σ_i τ∘(θ^i×θ^i) = −∂a with a∘θ = a, over Z/(N_τ·exp(H)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ASolutions {
    pub modulus: u64,
    pub particular: UnitMap,
    pub characters: Vec<UnitMap>,
    /// particular + χ for the characters χ making the sum θ-invariant.
    pub solutions: Vec<UnitMap>,
}

pub fn solve_a(
    group: &FiniteGroup,
    m: u64,
    theta: &Automorphism,
    tau: &Cocycle2,
) -> Result<Option<ASolutions>> {
    let p = power_product(tau, theta, m)?;
    let work = tau.modulus * group.exponent();
    let Some(mu) = solve_coboundary(group, &p, work) else {
        return Ok(None);
    };
    let particular = mu.neg();
    let chars = characters(group, work);
    let solutions: Vec<UnitMap> = chars
        .iter()
        .map(|chi| particular.add(chi))
        .filter(|a| &a.compose(theta) == a)
        .collect();
    if solutions.is_empty() {
        return Ok(None);
    }
    Ok(Some(ASolutions {
        modulus: work,
        particular,
        characters: chars,
        solutions,
    }))
}

/// Either a family descriptor or an inline table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Spec(String),
    Table(GroupFile),
}

impl GroupRef {
    pub fn resolve(&self) -> Result<FiniteGroup> {
        match self {
            GroupRef::Spec(s) => make_group(s),
            GroupRef::Table(t) => t.clone().into_group(),
        }
    }
}

/// On-disk datum format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumFile {
    pub group: GroupRef,
    pub m: u64,
    pub theta: Vec<u32>,
    pub a: UnitMap,
    pub tau: Cocycle2,
}

impl DatumFile {
    pub fn from_datum(d: &MDatum, group: GroupRef) -> Self {
        DatumFile {
            group,
            m: d.m,
            theta: d.theta.map.clone(),
            a: d.a.clone(),
            tau: d.tau.clone(),
        }
    }

    pub fn into_datum(self) -> Result<MDatum> {
        let g = self.group.resolve()?;
        let n = g.order();
        if self.theta.len() != n || self.a.values.len() != n || self.tau.order != n {
            return Err(Error::InvalidDatum(vec![
                "sizes do not match the group".into()
            ]));
        }
        if self.a.modulus == 0 || self.a.values.iter().any(|&v| v >= self.a.modulus) {
            return Err(Error::InvalidDatum(vec!["a values out of range".into()]));
        }
        Ok(MDatum {
            group: Arc::new(g),
            m: self.m,
            theta: Automorphism { map: self.theta },
            a: self.a,
            tau: self.tau,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{dihedral_tau_omega, h2_compute};
    use crate::group::{alternating, cyclic, dihedral, dihedral_psi, product, symmetric};

    #[test]
    fn trivial_datum_is_valid() {
        for g in [cyclic(4), dihedral(3), alternating(4)] {
            let g = Arc::new(g);
            for m in 1..5 {
                let r = MDatum::trivial(g.clone(), m).validate(true);
                assert!(r.is_valid(), "{:?}", r.violations);
                assert!(r.is_twist_type());
            }
        }
    }

    #[test]
    fn non_invariant_a_is_rejected() {
        let g = Arc::new(dihedral(4));
        let theta = dihedral_psi(4, 1, 1).unwrap();
        // a(r^i s^j) = i is a character moved by Ψ_{1,1}, which has order 4
        let a = UnitMap::from_fn(8, 2, |x| u64::from(x % 2));
        assert!(a.is_character(&g));
        let d = MDatum {
            group: g,
            m: 4,
            theta,
            a,
            tau: Cocycle2::zero(8, 2),
        };
        let r = d.validate(false);
        assert!(r.violations.iter().any(|s| s.contains("theta")));
    }

    #[test]
    fn solve_a_trivial_theta_gives_characters() {
        let g = symmetric(3);
        let id = Automorphism::identity(6);
        let s = solve_a(&g, 2, &id, &Cocycle2::zero(6, 2)).unwrap().unwrap();
        assert_eq!(s.solutions.len(), characters(&g, s.modulus).len());
        for a in &s.solutions {
            assert!(a.is_character(&g));
        }
    }

    #[test]
    fn solve_a_unique_on_a5() {
        let g = alternating(5);
        let h = h2_compute(&g, 4).unwrap();
        let tau = h.kx_reps.iter().find(|t| !t.is_zero()).unwrap();
        // conjugation by an element of order 2
        let x = g.elements().find(|&x| g.elem_order(x) == 2).unwrap();
        let s = solve_a(&g, 2, &g.inner(x), tau).unwrap().unwrap();
        assert_eq!(s.solutions.len(), 1);
    }

    #[test]
    fn transport_and_shift_preserve_validity() {
        let g = Arc::new(dihedral(6));
        let tau = dihedral_tau_omega(6, 1);
        let theta = dihedral_psi(6, 0, -1).unwrap();
        let s = solve_a(&g, 2, &theta, &tau).unwrap().unwrap();
        let d = MDatum {
            group: g.clone(),
            m: 2,
            theta,
            a: s.solutions[0].clone(),
            tau,
        };
        d.check().unwrap();
        assert_eq!(d.transport(&Automorphism::identity(12), 1).unwrap(), d);
        let f = dihedral_psi(6, 1, 5).unwrap();
        d.transport(&f, 1).unwrap().check().unwrap();
        let mu = UnitMap::from_fn(12, 6, |x| if x == 0 { 0 } else { (x as u64 * 5) % 6 });
        let shifted = d.shift_cocycle(&d.tau.add(&coboundary(&g, &mu))).unwrap();
        shifted.check().unwrap();
        let normal = d.normalize();
        normal.check().unwrap();
        assert!(normal.a.is_character(&g));
    }

    #[test]
    fn datum_file_round_trip() {
        let g = product(&cyclic(2), &cyclic(2));
        let d = MDatum::trivial(Arc::new(g.clone()), 3);
        let file = DatumFile::from_datum(&d, GroupRef::Table(GroupFile::from(&g)));
        let json = serde_json::to_string(&file).unwrap();
        let back: DatumFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back.into_datum().unwrap(), d);
        let spec = r#"{"group":"cyclic:3","m":2,"theta":[0,2,1],"a":{"modulus":1,"values":[0,0,0]},"tau":{"modulus":1,"values":[[0,0,0],[0,0,0],[0,0,0]]}}"#;
        let d: DatumFile = serde_json::from_str(spec).unwrap();
        d.into_datum().unwrap().check().unwrap();
    }
}
