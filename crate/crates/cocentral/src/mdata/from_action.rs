//! The m-datum of a graded twist O(G)^{i,α}.
//!
//! With H = G/⟨z⟩ and the section s picking the minimal element of each
//! coset: s(x)s(y) = s(xy)·z^{τ₀(x,y)}, α(s(x)) = s(θx)·z^{μ(x)}, and
//! a = Σ_{k=1}^{m−1} k·μ∘θ^{−k}, all exponents mod m.

use super::MDatum;
use crate::cohomology::{Cocycle2, UnitMap};
use crate::error::{Error, Result};
use crate::group::{Automorphism, CocentralAction};
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct ActionDatum {
    pub datum: MDatum,
    /// Coset label of every element of G.
    pub projection: Vec<u32>,
    /// Minimal element of each coset.
    pub section: Vec<u32>,
    /// Exponent of z in the ⟨z⟩-component of every element: x = s(π x)·z^{k}.
    pub fiber_exponent: Vec<u64>,
    pub mu: UnitMap,
}

pub fn datum_from_action(act: &CocentralAction) -> Result<ActionDatum> {
    act.validate()?;
    let g = &act.group;
    let m = act.m;
    let (h, projection) = g.quotient(&act.fiber())?;
    let q = h.order();
    let mut section = vec![u32::MAX; q];
    for x in g.elements() {
        let c = projection[x as usize] as usize;
        if section[c] == u32::MAX {
            section[c] = x;
        }
    }
    let mut zlog = vec![u64::MAX; g.order()];
    let mut p = g.identity();
    for k in 0..m {
        zlog[p as usize] = k;
        p = g.mul(p, act.z);
    }
    let fiber_exponent: Vec<u64> = g
        .elements()
        .map(|x| {
            let s = section[projection[x as usize] as usize];
            zlog[g.mul(g.inv(s), x) as usize]
        })
        .collect();
    let tau = Cocycle2::from_fn(q, m, |x, y| {
        fiber_exponent[g.mul(section[x as usize], section[y as usize]) as usize]
    });
    let theta = Automorphism {
        map: (0..q)
            .map(|c| projection[act.alpha.apply(section[c]) as usize])
            .collect(),
    };
    let mu = UnitMap::from_fn(q, m, |c| {
        fiber_exponent[act.alpha.apply(section[c as usize]) as usize]
    });
    let theta_inv = theta.inverse();
    let mut a = UnitMap::zero(q, m);
    let mut power = Automorphism::identity(q);
    for k in 1..m {
        power = power.compose(&theta_inv);
        a = a.add(&mu.compose(&power).scale(k));
    }
    let datum = MDatum {
        group: Arc::new(h),
        m,
        theta,
        a,
        tau,
    };
    let report = datum.validate(true);
    if !report.is_twist_type() {
        let mut v = report.violations;
        v.push("datum of an action failed the graded twist check".into());
        return Err(Error::InvalidDatum(v));
    }
    Ok(ActionDatum {
        datum,
        projection,
        section,
        fiber_exponent,
        mu,
    })
}
