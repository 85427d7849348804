//! The graded twist of the function algebra O(G) by a cocentral action,
//! built directly on functions on G.

use super::MonomialHopf;
use crate::error::{Error, Result};
use crate::group::{Automorphism, CocentralAction};
use std::sync::Arc;

/// Twisted product f·g = f·(g∘α^{−i}) for f of degree i, on the basis
/// b_{x,i} = 1_{xZ}·ζ_m^{U_i} with U_i = Σ_{k<i} u∘α^{−k} and u the fiber
/// exponent over the coset section.
pub fn graded_twist_direct(act: &CocentralAction) -> Result<MonomialHopf> {
    act.validate()?;
    let g = &act.group;
    let m = act.m;
    let (h, proj) = g.quotient(&act.fiber())?;
    let q = h.order();
    let n = g.order();
    let mut section = vec![u32::MAX; q];
    for x in g.elements() {
        let c = proj[x as usize] as usize;
        if section[c] == u32::MAX {
            section[c] = x;
        }
    }
    let mut zlog = vec![u64::MAX; n];
    let mut p = g.identity();
    for k in 0..m {
        zlog[p as usize] = k;
        p = g.mul(p, act.z);
    }
    let u: Vec<u64> = g
        .elements()
        .map(|x| zlog[g.mul(g.inv(section[proj[x as usize] as usize]), x) as usize])
        .collect();
    let alpha_inv = act.alpha.inverse();
    let inv_pows: Vec<Automorphism> = (0..m as i64).map(|k| alpha_inv.pow(k)).collect();
    // big_u[i][g] = U_i(g)
    let mut big_u = vec![vec![0u64; n]];
    for i in 1..m as usize {
        let prev = &big_u[i - 1];
        let next = g
            .elements()
            .map(|x| (prev[x as usize] + u[inv_pows[i - 1].apply(x) as usize]) % m)
            .collect();
        big_u.push(next);
    }
    let dim = q * m as usize;
    let idx = |x: u32, i: u64| (i as usize * q + x as usize) as u32;
    let bad = |msg: &str| Error::InvalidDatum(vec![format!("graded twist: {msg}")]);
    let coset: Vec<Vec<u32>> = {
        let mut c = vec![Vec::new(); q];
        for x in g.elements() {
            c[proj[x as usize] as usize].push(x);
        }
        c
    };

    let mut product = vec![super::ZERO; dim * dim];
    let mut product_exp = vec![0u64; dim * dim];
    for i in 0..m {
        let ai = &inv_pows[i as usize];
        for x in 0..q as u32 {
            // 1_{yZ}(α^{−i} g) ≠ 0 on xZ exactly for y = π(α^{−i} s(x))
            let y = proj[ai.apply(section[x as usize]) as usize];
            for j in 0..m {
                let k = (i + j) % m;
                let e_at = |gg: u32| {
                    (big_u[i as usize][gg as usize] + big_u[j as usize][ai.apply(gg) as usize] + m
                        - big_u[k as usize][gg as usize])
                        % m
                };
                let e = e_at(section[x as usize]);
                if coset[x as usize].iter().any(|&gg| e_at(gg) != e) {
                    return Err(bad("product exponent is not constant on a coset"));
                }
                let s = idx(x, i) as usize * dim + idx(y, j) as usize;
                product[s] = idx(x, k);
                product_exp[s] = e;
            }
        }
    }

    let mut coproduct = vec![Vec::new(); dim];
    for i in 0..m as usize {
        let ui = &big_u[i];
        for y in 0..q as u32 {
            for w in 0..q as u32 {
                let (sy, sw) = (section[y as usize], section[w as usize]);
                let c =
                    (ui[g.mul(sy, sw) as usize] + 2 * m - ui[sy as usize] - ui[sw as usize]) % m;
                let x = h.mul(y, w);
                coproduct[idx(x, i as u64) as usize].push((idx(y, i as u64), idx(w, i as u64), c));
            }
        }
    }
    let e = g.identity();
    let he = proj[e as usize];
    let counit = (0..dim as u32)
        .map(|b| {
            let (x, i) = (b as usize % q, b as usize / q);
            (x as u32 == he).then(|| big_u[i][e as usize])
        })
        .collect();
    let unit = (0..q as u32).map(|x| (idx(x, 0), 0)).collect();
    MonomialHopf::from_parts(
        Arc::new(h),
        m,
        m,
        product,
        product_exp,
        coproduct,
        counit,
        unit,
    )
}

#[cfg(test)]
mod tests {
    use super::super::{build_am, fingerprint, verify_hopf_axioms};
    use super::*;
    use crate::group::{sl2, xm_classes};
    use crate::mdata::datum_from_action;

    fn compare(group: crate::group::FiniteGroup, m: u64, expected_classes: usize) {
        let g = Arc::new(group);
        let classes = xm_classes(&g, m, true).unwrap();
        assert_eq!(classes.len(), expected_classes);
        let z = crate::group::central_cyclic_subgroup(&g, m).unwrap().1;
        for c in classes {
            let act = CocentralAction {
                group: g.clone(),
                m,
                z,
                alpha: c.rep,
            };
            let tw = graded_twist_direct(&act).unwrap();
            assert!(verify_hopf_axioms(&tw).all_pass());
            let am = build_am(&datum_from_action(&act).unwrap().datum).unwrap();
            let (f1, f2) = (fingerprint(&tw).unwrap(), fingerprint(&am).unwrap());
            assert_eq!(f1, f2);
            assert!(!f1.commutative);
        }
    }

    #[test]
    fn sl2_3_twists_match_datum_algebras() {
        compare(sl2(3), 2, xm_classes(&sl2(3), 2, true).unwrap().len());
    }

    #[test]
    fn sl2_5_twists_match_datum_algebras() {
        compare(sl2(5), 2, 2);
    }
}
