//! Abelian cocentral extensions of O(D_n) by kZ_2 through the explicit
//! family data: τ_ω, the maps a_{x,y} and order-two automorphisms Ψ_{u,v}.

use super::counting::{classify_extensions, count_via_cc, ClassifyOptions};
use super::report::{Check, ClassReport, Method, TableRow};
use crate::arith::{factorize, gcd};
use crate::cohomology::{dihedral_tau_omega, Cocycle2, UnitMap};
use crate::error::{Error, Result};
use crate::group::{dihedral, dihedral_psi, Automorphism, FiniteGroup};
use crate::mdata::{structure_groups, EquivContext, MDatum};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::sync::Arc;

/// a_{x,y}(r^i s^j) = x^i y^j over μ_{4n}, with ω, x, y given as exponents
/// of ζ_{4n}. Ψ_{u,v} and ω enter through the constraints on x and y.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DihedralDatumSpec {
    pub n: usize,
    pub u: u64,
    pub v: u64,
    pub omega: u64,
    pub x: u64,
    pub y: u64,
}

impl DihedralDatumSpec {
    pub fn modulus(&self) -> u64 {
        4 * self.n as u64
    }

    pub fn a(&self) -> UnitMap {
        let w = self.modulus();
        let n = self.n;
        UnitMap::from_fn(2 * n, w, |e| {
            let (i, j) = (e as u64 % n as u64, e as u64 / n as u64);
            (i * self.x + j * self.y) % w
        })
    }
}

/// ω = −1 when n/2 is odd, a primitive n-th root otherwise; as an exponent
/// of ζ_n.
pub fn omega_exponent(n: usize) -> u64 {
    if (n / 2) % 2 == 1 {
        n as u64 / 2
    } else {
        1
    }
}

/// (k, l) of an automorphism written as Ψ_{k,l}: r ↦ r^l, s ↦ s r^k.
fn psi_params(n: usize, f: &Automorphism) -> (u64, u64) {
    let l = f.map[1] as u64;
    let k = (n as u64 - (f.map[n] as u64 - n as u64)) % n as u64;
    (k, l)
}

/// Ψ_{u,v} of order two, one per conjugacy class of Aut(D_n), each the
/// lexicographically least (u, v) in its class.
pub fn order_two_classes(n: usize) -> Result<Vec<(u64, u64)>> {
    let units: Vec<u64> = (1..n as u64).filter(|&l| gcd(l, n as u64) == 1).collect();
    let mut all = Vec::new();
    for k in 0..n as u64 {
        for &l in &units {
            all.push(dihedral_psi(n, k as i64, l as i64)?);
        }
    }
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    let mut involutions: Vec<(u64, u64)> = all
        .iter()
        .filter(|f| !f.is_identity() && f.pow(2).is_identity())
        .map(|f| psi_params(n, f))
        .collect();
    involutions.sort_unstable();
    for (u, v) in involutions {
        if seen.contains(&(u, v)) {
            continue;
        }
        let t = dihedral_psi(n, u as i64, v as i64)?;
        for f in &all {
            seen.insert(psi_params(n, &f.compose(&t).compose(&f.inverse())));
        }
        reps.push((u, v));
    }
    Ok(reps)
}

/// Expected number of compatible maps a_{±x,±y} for an order-two Ψ_{u,v},
/// with u, v reduced into [0, n).
pub fn expected_compatible_maps(n: usize, u: u64, v: u64) -> (&'static str, u64) {
    let n64 = n as u64;
    if (n / 2) % 2 == 1 {
        return if u % 2 == 0 {
            ("n/2 odd, u even", 4)
        } else {
            ("n/2 odd, u odd", 2)
        };
    }
    let k_even = (v * v) % (2 * n64) == 1;
    let l = u * (1 + v) / n64;
    let l_even = (u * (1 + v)) % n64 == 0 && l % 2 == 0;
    match (u % 2 == 0, k_even, l_even) {
        (_, false, _) => ("n/2 even, v^2 != 1 mod 2n", 0),
        (true, true, true) => ("n/2 even, u even, k and l even", 4),
        (true, true, false) => ("n/2 even, u even, l odd", 0),
        (false, true, true) => ("n/2 even, u odd, k and l even", 2),
        (false, true, false) => ("n/2 even, u odd, k even, l odd", 2),
    }
}

/// Number of classes of reduced 2-data with automorphism Ψ_{u,v}, read off
/// the per-case table; `None` when no row covers (u, v).
pub fn table_value(n: usize, u: u64, v: u64) -> Option<(&'static str, u64)> {
    let n64 = n as u64;
    let two_n = 2 * n64;
    if (n / 2) % 2 == 1 {
        return Some(if u % 2 == 1 {
            ("n/2 odd, u odd", 1)
        } else {
            ("n/2 odd, u even", 3)
        });
    }
    let v_sq = (v * v) % two_n == 1;
    if u % 2 == 1 {
        return v_sq.then_some(("n/2 even, u odd, v^2 = 1 mod 2n", 1));
    }
    let uv = (u * (v + 1)) % two_n == 0;
    if !(v_sq && uv) {
        return None;
    }
    if n % 8 == 0 {
        Some(("n = 0 mod 8, u even", 2))
    } else if v % 4 == 3 {
        Some(("n = 4 mod 8, u even, v = 3 mod 4", 2))
    } else {
        Some(("n = 4 mod 8, u even, v = 1 mod 4", 3))
    }
}

/// The number e_n of universal noncommutative extensions claimed for the
/// families covered by the closed-form statements.
pub fn expected_e_n(n: usize) -> Option<u64> {
    let f = factorize(n as u64);
    let odd: Vec<_> = f.iter().filter(|(p, _)| *p != 2).collect();
    let two = f.iter().find(|(p, _)| *p == 2).map_or(0, |&(_, k)| k);
    match (two, odd.len()) {
        (0, 1) => Some(2),
        (0, 2) => Some(6),
        (k, 0) if k >= 2 => Some(3),
        (1, 1) => Some(5),
        (2, 1) => Some(9),
        (k, 1) if k >= 3 => Some(10),
        _ => None,
    }
}

/// n = 2^s·p^r with s ≥ 3, where the published total double counts one
/// conjugacy class of Ψ and the table undercounts another.
pub fn e_n_disputed(n: usize) -> bool {
    let odd = n >> n.trailing_zeros();
    n.trailing_zeros() >= 3 && odd > 1 && factorize(odd as u64).len() == 1
}

/// All (x, y) solving x^n = 1, x² = ω^{−v−1}, y² = ω^u over μ_{4n}.
pub fn candidate_specs(n: usize, u: u64, v: u64) -> Vec<DihedralDatumSpec> {
    let w = 4 * n as u64;
    let omega = omega_exponent(n) * 4;
    let x_target = (w - (v + 1) * omega % w) % w;
    let y_target = u * omega % w;
    let xs: Vec<u64> = (0..w)
        .filter(|&x| (n as u64 * x) % w == 0 && (2 * x) % w == x_target)
        .collect();
    let ys: Vec<u64> = (0..w).filter(|&y| (2 * y) % w == y_target).collect();
    let mut out = Vec::new();
    for &x in &xs {
        for &y in &ys {
            out.push(DihedralDatumSpec {
                n,
                u,
                v,
                omega,
                x,
                y,
            });
        }
    }
    out
}

fn automorphisms(n: usize) -> Result<Vec<Automorphism>> {
    let mut out = Vec::new();
    for k in 0..n as i64 {
        for l in 1..n as i64 {
            if gcd(l as u64, n as u64) == 1 {
                out.push(dihedral_psi(n, k, l)?);
            }
        }
    }
    Ok(out)
}

pub fn dihedral_suite(n: usize, opts: &ClassifyOptions) -> Result<ClassReport> {
    dihedral_suite_with(n, opts, &dihedral_tau_omega)
}

/// As `dihedral_suite` with the cocycle family supplied by the caller.
pub fn dihedral_suite_with(
    n: usize,
    opts: &ClassifyOptions,
    tau_omega: &dyn Fn(usize, u64) -> Cocycle2,
) -> Result<ClassReport> {
    if n < 3 {
        return Err(Error::Hypothesis(format!(
            "dihedral suite needs n >= 3, got {n}"
        )));
    }
    let h = Arc::new(dihedral(n));
    let full = classify_extensions(&h, 2, Method::Full, opts)?;
    let mut r = if n % 2 == 1 {
        odd_route(&h, opts)?
    } else {
        even_route(&h, n, tau_omega)?
    };
    if n % 2 == 0 {
        let rows = r.enumerated_value.unwrap_or(0);
        let total = full.enumerated_value.unwrap_or(0);
        r.checks.push(Check::new(
            "row-sum-equals-enumeration",
            rows == total,
            format!("rows give {rows}, generic enumeration gives {total}"),
        ));
    }
    r.enumerated_value = full.enumerated_value;
    r.checks.extend(full.checks);
    r.classes = full.classes;
    r.paper_value = expected_e_n(n);
    if e_n_disputed(n) {
        r.disputed = true;
        r.notes.push(format!(
            "the listed representatives Psi(0,v) and Psi({},v) with v = 1 mod 8, v != 1 are conjugate, \
             and that class carries 3 data rather than 2",
            1usize << n.trailing_zeros()
        ));
    }
    Ok(r.finalize())
}

fn odd_route(h: &Arc<FiniteGroup>, opts: &ClassifyOptions) -> Result<ClassReport> {
    let cc = count_via_cc(h, 2, opts)?;
    let mut r = ClassReport::new("dihedral", h.name(), Method::Both);
    r.formula_value = cc.formula_value;
    r.hypotheses = cc.hypotheses;
    r.notes = cc.notes;
    Ok(r)
}

fn even_route(
    h: &Arc<FiniteGroup>,
    n: usize,
    tau_omega: &dyn Fn(usize, u64) -> Cocycle2,
) -> Result<ClassReport> {
    let mut r = ClassReport::new("dihedral", h.name(), Method::Both);
    let w = 4 * n as u64;
    let tau = tau_omega(n, omega_exponent(n)).lift(w);
    let aut = automorphisms(n)?;
    let ctx = EquivContext::new(h, &aut);
    let mut table_total = 0u64;
    let mut computed_total = 0u64;
    let mut cases_ok = true;
    for (u, v) in order_two_classes(n)? {
        let theta = dihedral_psi(n, u as i64, v as i64)?;
        let mut valid: Vec<MDatum> = Vec::new();
        for spec in candidate_specs(n, u, v) {
            let d = MDatum {
                group: h.clone(),
                m: 2,
                theta: theta.clone(),
                a: spec.a(),
                tau: tau.clone(),
            };
            if d.check().is_ok() && structure_groups(&d).is_ok_and(|s| s.is_reduced) {
                valid.push(d);
            }
        }
        let (case, expected_maps) = expected_compatible_maps(n, u, v);
        if valid.len() as u64 != expected_maps {
            cases_ok = false;
            r.notes.push(format!(
                "Psi({u},{v}): {} compatible maps, case list ({case}) gives {expected_maps}",
                valid.len()
            ));
        }
        let mut reps: Vec<MDatum> = Vec::new();
        for d in valid {
            if !reps.iter().any(|rep| ctx.find(rep, &d).is_some()) {
                reps.push(d);
            }
        }
        let expected = table_value(n, u, v);
        let label = format!(
            "Psi({u},{v}) [{}]",
            expected.map_or("no table row", |(l, _)| l)
        );
        let exp = expected.map_or(0, |(_, v)| v);
        table_total += exp;
        computed_total += reps.len() as u64;
        r.rows.push(TableRow {
            label,
            expected: Some(exp),
            computed: reps.len() as u64,
        });
    }
    r.checks.push(Check::new(
        "compatible-maps-match-case-list",
        cases_ok,
        "number of a_{x,y} passing the datum equation and invariance",
    ));
    r.formula_value = Some(table_total);
    r.notes
        .push(format!("sum of computed N(u,v) = {computed_total}"));
    r.enumerated_value = Some(computed_total);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::Status;

    #[test]
    fn order_two_representatives() {
        // three classes for n = 4 and for n = 2p^r
        assert_eq!(order_two_classes(4).unwrap().len(), 3);
        assert_eq!(order_two_classes(6).unwrap().len(), 3);
        assert_eq!(order_two_classes(9).unwrap().len(), 1);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(expected_e_n(9), Some(2));
        assert_eq!(expected_e_n(15), Some(6));
        assert_eq!(expected_e_n(8), Some(3));
        assert_eq!(expected_e_n(10), Some(5));
        assert_eq!(expected_e_n(12), Some(9));
        assert_eq!(expected_e_n(40), Some(10));
        assert_eq!(expected_e_n(30), None);
    }

    #[test]
    fn extra_s_factor_breaks_odd_u() {
        // a(s) = ω^{−u} y fails the datum equation for Ψ_{1,7} on D_8
        let n = 8;
        let h = Arc::new(dihedral(n));
        let tau = dihedral_tau_omega(n, 1).lift(32);
        let theta = dihedral_psi(n, 1, 7).unwrap();
        for spec in candidate_specs(n, 1, 7) {
            let shifted = UnitMap::from_fn(16, 32, |e| {
                let j = e as u64 / n as u64;
                (spec.a().get(e) + j * (32 - spec.omega)) % 32
            });
            let d = MDatum {
                group: h.clone(),
                m: 2,
                theta: theta.clone(),
                a: shifted,
                tau: tau.clone(),
            };
            assert!(d.check().is_err());
        }
    }

    #[test]
    fn disputed_family() {
        assert!(e_n_disputed(24) && e_n_disputed(40) && e_n_disputed(16 * 9));
        assert!(!e_n_disputed(16) && !e_n_disputed(12) && !e_n_disputed(8 * 15));
    }

    #[test]
    fn e8() {
        let r = dihedral_suite(8, &ClassifyOptions::default()).unwrap();
        assert_eq!(r.enumerated_value, Some(3));
        assert_eq!(r.status, Status::Pass, "{}", r.render_text());
    }

    #[test]
    fn e12_rows() {
        let r = dihedral_suite(12, &ClassifyOptions::default()).unwrap();
        assert_eq!(r.status, Status::Pass, "{}", r.render_text());
        assert_eq!(r.enumerated_value, Some(9));
    }
}
