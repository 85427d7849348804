//! Isomorphism invariants of monomial Hopf algebras: (co)commutativity,
//! the group Alg(A, k) of characters, and the universal grading group.

use super::MonomialHopf;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::mdata::{structure_groups, MDatum};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub order: usize,
    pub abelian: bool,
    pub cyclic: bool,
    /// Element orders, sorted.
    pub element_orders: Vec<u32>,
}

impl GroupSummary {
    pub fn of(g: &FiniteGroup) -> Self {
        let mut element_orders = g.element_orders().to_vec();
        element_orders.sort_unstable();
        GroupSummary {
            order: g.order(),
            abelian: g.is_abelian(),
            cyclic: g.is_cyclic(),
            element_orders,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfFingerprint {
    pub dimension: usize,
    pub commutative: bool,
    pub cocommutative: bool,
    /// Alg(A, k), whose function algebra is the abelianization of A.
    pub abelianization: GroupSummary,
    /// Order of the universal grading group when it is cyclic.
    pub universal_grading: Option<usize>,
    /// Whether the cocentral map onto kZ_m is universal.
    pub reduced: bool,
}

/// Characters χ = (x, Λ): χ(e_y g^i) = [y = x]·ζ_{mN}^{iΛ − m·p_i(x)}, where
/// (e_x g)^i = ζ_N^{p_i(x)} e_x g^i. Requires x to be fixed by the product
/// support and (e_x g)^m = ζ_N^{p_m} e_x, so Λ ≡ p_m mod N.
struct Characters {
    /// Admissible x with p_i(x), i = 0..=m.
    points: Vec<(u32, Vec<u64>)>,
    big: u64,
}

fn characters(h: &MonomialHopf, support: impl Fn(u32) -> bool) -> Result<Characters> {
    let m = h.m;
    let nn = h.modulus;
    let mut points = Vec::new();
    for x in h.group.elements().filter(|&x| support(x)) {
        let g1 = h.basis_index(x, 1 % m);
        let mut p = vec![0u64; m as usize + 1];
        let mut cur = (h.basis_index(x, 0), 0u64);
        let mut ok = true;
        for i in 1..=m {
            let Some((t, e)) = h.mul(cur.0, g1) else {
                ok = false;
                break;
            };
            cur = (t, (cur.1 + e) % nn);
            if t != h.basis_index(x, i % m) {
                ok = false;
                break;
            }
            p[i as usize] = cur.1;
        }
        if ok {
            points.push((x, p));
        }
    }
    let ch = Characters {
        points,
        big: m * nn,
    };
    // every product e_x g^i · e_x g^j must be compatible with χ
    for (x, p) in &ch.points {
        for i in 0..m {
            for j in 0..m {
                let (t, e) = h
                    .mul(h.basis_index(*x, i), h.basis_index(*x, j))
                    .ok_or_else(|| {
                        Error::InvalidDatum(vec!["character support not closed".into()])
                    })?;
                let lhs = (p[i as usize] + p[j as usize] + e) % nn;
                let k = (i + j) % m;
                let wrap = if i + j >= m { p[m as usize] } else { 0 };
                if t != h.basis_index(*x, k) || lhs != (p[k as usize] + wrap) % nn {
                    return Err(Error::InvalidDatum(vec![
                        "characters are inconsistent".into()
                    ]));
                }
            }
        }
    }
    Ok(ch)
}

/// The group of characters over the given support, with (x, Λ) indexed by
/// position(x)·m + t where Λ = p_m(x) + N·t mod mN.
fn character_group(h: &MonomialHopf, ch: &Characters, name: &str) -> FiniteGroup {
    let m = h.m;
    let nn = h.modulus;
    let big = ch.big;
    let g = &h.group;
    let pos: std::collections::HashMap<u32, usize> = ch
        .points
        .iter()
        .enumerate()
        .map(|(i, (x, _))| (*x, i))
        .collect();
    let size = ch.points.len() * m as usize;
    // coefficient of (e_x g ⊗ e_y g) in Δ(e_{xy} g)
    let coef = |x: u32, y: u32| -> u64 {
        let b = h.basis_index(g.mul(x, y), 1 % m);
        let (l, r) = (h.basis_index(x, 1 % m), h.basis_index(y, 1 % m));
        h.coproduct(b)
            .iter()
            .find(|&&(a, c, _)| a == l && c == r)
            .map(|&(_, _, e)| e)
            .expect("coproduct term present")
    };
    let mut table = Vec::with_capacity(size * size);
    for (x, px) in &ch.points {
        for t in 0..m {
            for (y, py) in &ch.points {
                for s in 0..m {
                    let z = g.mul(*x, *y);
                    let lx = (px[m as usize] + nn * t) % big;
                    let ly = (py[m as usize] + nn * s) % big;
                    let lz = (lx + ly + m * coef(*x, *y)) % big;
                    let pz = ch.points[pos[&z]].1[m as usize];
                    let r = ((lz + big - pz) % big) / nn;
                    table.push((pos[&z] * m as usize + r as usize) as u32);
                }
            }
        }
    }
    FiniteGroup::from_trusted_table(name, size, table)
}

/// Computes the fingerprint from the structure tables alone.
pub fn fingerprint(h: &MonomialHopf) -> Result<HopfFingerprint> {
    let dim = h.dimension() as u32;
    let g = &h.group;
    let commutative = (0..dim).all(|a| (0..a).all(|b| h.mul(a, b) == h.mul(b, a)));
    let cocommutative = (0..dim).all(|b| {
        let mut fwd: Vec<(u32, u32, u64)> = h.coproduct(b).to_vec();
        let mut rev: Vec<(u32, u32, u64)> =
            h.coproduct(b).iter().map(|&(l, r, e)| (r, l, e)).collect();
        fwd.sort_unstable();
        rev.sort_unstable();
        fwd == rev
    });
    let all = characters(h, |_| true)?;
    let alg = character_group(h, &all, "Alg");
    // Central x whose coproduct coefficients commute with every y in all grades.
    let center = g.center();
    let z: Vec<u32> = center
        .elements
        .iter()
        .copied()
        .filter(|&x| {
            (0..h.m).all(|i| {
                g.elements().all(|y| {
                    let c = |l: u32, r: u32| {
                        let b = h.basis_index(g.mul(l, r), i);
                        let (bl, br) = (h.basis_index(l, i), h.basis_index(r, i));
                        h.coproduct(b)
                            .iter()
                            .find(|&&(a, c, _)| a == bl && c == br)
                            .map(|&(_, _, e)| e)
                    };
                    c(x, y) == c(y, x)
                })
            })
        })
        .collect();
    let z_chars = characters(h, |x| z.contains(&x))?;
    let theta_trivial_on_z = z_chars.points.len() == z.len();
    let g0 = character_group(h, &z_chars, "G0");
    let universal_grading = (theta_trivial_on_z && g0.is_cyclic()).then(|| g0.order());
    Ok(HopfFingerprint {
        dimension: h.dimension(),
        commutative,
        cocommutative,
        abelianization: GroupSummary::of(&alg),
        universal_grading,
        reduced: z.len() == 1,
    })
}

/// The fingerprint predicted from the datum: commutative ⟺ θ = id,
/// cocommutative ⟺ H abelian and τ symmetric, abelianization G(H,θ,a,τ).
pub fn hopf_invariants(d: &MDatum) -> Result<HopfFingerprint> {
    let s = structure_groups(d)?;
    Ok(HopfFingerprint {
        dimension: d.order() * d.m as usize,
        commutative: d.theta.is_identity(),
        cocommutative: d.group.is_abelian() && d.tau.is_symmetric(),
        abelianization: GroupSummary::of(&s.g_group),
        universal_grading: s.universal_grading_order(),
        reduced: s.is_reduced,
    })
}
