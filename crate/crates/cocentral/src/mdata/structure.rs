//! The groups Z_{τ,θ}(H), G(H,θ,a,τ) and G₀(H,θ,a,τ) of a datum.

use super::MDatum;
use crate::group::{FiniteGroup, Subgroup};

#[derive(Clone, Debug)]
pub struct StructureGroups {
    pub z_tau_theta: Subgroup,
    pub fixed_points: Subgroup,
    /// Pairs (x, λ) with x ∈ H^θ and λ^m = a(x).
    pub g_group: FiniteGroup,
    /// The same over Z_{τ,θ}(H)^θ.
    pub g0_group: FiniteGroup,
    pub is_cyclic_datum: bool,
    pub is_reduced: bool,
}

impl StructureGroups {
    /// Order of the universal grading group, when it is cyclic.
    pub fn universal_grading_order(&self) -> Option<usize> {
        self.is_cyclic_datum.then(|| self.g0_group.order())
    }
}

/// Central x with τ(θ^i x, y) = τ(y, θ^i x) for all y and i.
pub fn z_tau_theta(d: &MDatum) -> Subgroup {
    let g = &d.group;
    let center = g.center();
    let keep: Vec<u32> = center
        .elements
        .iter()
        .copied()
        .filter(|&x| {
            let mut z = x;
            for _ in 0..d.m {
                if g.elements().any(|y| d.tau.get(z, y) != d.tau.get(y, z)) {
                    return false;
                }
                z = d.theta.apply(z);
            }
            true
        })
        .collect();
    Subgroup::new(keep)
}

/// G(K, θ, a, τ) for a θ-stable subgroup K, as elements (x, Λ) with
/// Λ mod m·N and Λ ≡ a(x) mod N, indexed by position(x)·m + t.
fn pair_group(d: &MDatum, support: &[u32], name: &str) -> FiniteGroup {
    let g = &d.group;
    let n = d.modulus();
    let m = d.m;
    let big = m * n;
    let a = d.a.lift(n);
    let tau = d.tau.lift(n);
    let pos: std::collections::HashMap<u32, usize> =
        support.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let size = support.len() * m as usize;
    let lambda = |x: u32, t: u64| (a.get(x) + n * t) % big;
    let mut table = Vec::with_capacity(size * size);
    for &x in support {
        for t in 0..m {
            for &y in support {
                for s in 0..m {
                    let z = g.mul(x, y);
                    let l = (m * tau.get(x, y) + lambda(x, t) + lambda(y, s)) % big;
                    // l ≡ a(z) mod n by the datum equation on H^θ
                    let r = ((l + big - a.get(z)) % big) / n;
                    table.push((pos[&z] * m as usize + r as usize) as u32);
                }
            }
        }
    }
    FiniteGroup::from_trusted_table(name, size, table)
}

pub fn structure_groups(d: &MDatum) -> crate::Result<StructureGroups> {
    d.check()?;
    let g = &d.group;
    let z = z_tau_theta(d);
    let fixed = g.fixed_points(&d.theta);
    let z_fixed: Vec<u32> = z
        .elements
        .iter()
        .copied()
        .filter(|&x| d.theta.apply(x) == x)
        .collect();
    let g_group = pair_group(d, &fixed.elements, "G");
    let g0_group = pair_group(d, &z_fixed, "G0");
    let theta_trivial_on_z = z_fixed.len() == z.order();
    Ok(StructureGroups {
        is_cyclic_datum: theta_trivial_on_z && g0_group.is_cyclic(),
        is_reduced: z.order() == 1,
        z_tau_theta: z,
        fixed_points: fixed,
        g_group,
        g0_group,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{dihedral_tau_omega, Cocycle2, UnitMap};
    use crate::group::{alternating, cyclic, dihedral, dihedral_psi, Automorphism};
    use crate::mdata::solve_a;
    use std::sync::Arc;

    #[test]
    fn trivial_datum_center() {
        for (g, reduced) in [
            (dihedral(4), false),
            (alternating(4), true),
            (cyclic(3), false),
        ] {
            let d = MDatum::trivial(Arc::new(g.clone()), 2);
            let s = structure_groups(&d).unwrap();
            assert_eq!(s.z_tau_theta, g.center());
            assert_eq!(s.is_reduced, reduced);
            assert_eq!(s.g_group.order(), 2 * g.order());
        }
    }

    #[test]
    fn even_dihedral_nontrivial_cocycle_is_reduced() {
        let n = 6;
        let g = Arc::new(dihedral(n));
        let tau = dihedral_tau_omega(n, 1);
        let theta = dihedral_psi(n, 0, -1).unwrap();
        let a = solve_a(&g, 2, &theta, &tau).unwrap().unwrap().solutions[0].clone();
        let d = MDatum {
            group: g,
            m: 2,
            theta,
            a,
            tau,
        };
        let s = structure_groups(&d).unwrap();
        assert!(s.is_reduced);
        assert!(s.is_cyclic_datum);
        assert_eq!(s.universal_grading_order(), Some(2));
        assert_eq!(s.g_group.order(), 2 * s.fixed_points.order());
    }

    #[test]
    fn pair_group_is_extension() {
        // a(1) = −1 and τ = 1: G = {(x, λ) : λ² = a(x)} is Z_4
        let g = Arc::new(cyclic(2));
        let d = MDatum {
            group: g,
            m: 2,
            theta: Automorphism::identity(2),
            a: UnitMap {
                modulus: 2,
                values: vec![0, 1],
            },
            tau: Cocycle2::zero(2, 2),
        };
        d.check().unwrap();
        let s = structure_groups(&d).unwrap();
        s.g_group.check_associative().unwrap();
        assert_eq!(s.g_group.order(), 4);
        assert!(s.g_group.is_cyclic());
    }
}
