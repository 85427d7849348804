//! Equivalence classes of m-data over a fixed group.

use super::equiv::EquivContext;
use super::structure::structure_groups;
use super::{solve_a, MDatum};
use crate::cohomology::{h2_compute_with, is_kx_trivial, schur_modulus, Cocycle2};
use crate::error::Result;
use crate::group::{
    automorphism_group_with, power_conjugacy, Automorphism, Budget, Constraint, FiniteGroup,
};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassFilter {
    All,
    /// θ ≠ id; for abelian H also [τ] ≠ 1, so the Hopf algebra is
    /// neither commutative nor cocommutative.
    Noncommutative,
    /// Noncommutative with Z_{τ,θ}(H) trivial.
    Reduced,
    /// Noncommutative with cyclic universal grading group.
    Cyclic,
}

#[derive(Clone, Debug)]
pub struct DatumClass {
    pub rep: MDatum,
    /// Number of pool members in the class.
    pub members: usize,
    pub is_reduced: bool,
    pub is_cyclic: bool,
}

/// The automorphisms, θ representatives and cocycle representatives from
/// which candidate data are built.
#[derive(Clone, Debug)]
pub struct DatumPool {
    pub aut: Vec<Automorphism>,
    pub theta_reps: Vec<Automorphism>,
    pub taus: Vec<Cocycle2>,
}

impl DatumPool {
    /// θ up to conjugacy and prime-to-m powers; τ over H²(H, k^×).
    pub fn generic(h: &FiniteGroup, m: u64, budget: &Budget) -> Result<Self> {
        let aut = automorphism_group_with(h, &Constraint::None, budget)?;
        let split = power_conjugacy(&aut, m, true);
        let theta_reps = split
            .representatives
            .iter()
            .map(|&i| aut.get(i).clone())
            .collect();
        let modulus = schur_modulus(h.order() as u64).max(1);
        let taus = h2_compute_with(h, modulus, budget)?.kx_reps;
        Ok(DatumPool {
            aut: aut.elements().to_vec(),
            theta_reps,
            taus,
        })
    }
}

fn passes(d: &MDatum, filter: ClassFilter) -> Result<(bool, bool, bool)> {
    let s = structure_groups(d)?;
    let noncomm =
        !d.theta.is_identity() && (!d.group.is_abelian() || !is_kx_trivial(&d.group, &d.tau));
    let ok = match filter {
        ClassFilter::All => true,
        ClassFilter::Noncommutative => noncomm,
        ClassFilter::Reduced => noncomm && s.is_reduced,
        ClassFilter::Cyclic => noncomm && s.is_cyclic_datum,
    };
    Ok((ok, s.is_reduced, s.is_cyclic_datum))
}

pub fn enumerate_classes(
    h: &Arc<FiniteGroup>,
    m: u64,
    filter: ClassFilter,
) -> Result<Vec<DatumClass>> {
    let budget = Budget::default();
    let pool = DatumPool::generic(h, m, &budget)?;
    enumerate_classes_in(h, m, filter, &pool)
}

/// Builds every (θ, a, τ) from the pool, keeps those passing the filter and
/// merges them by equivalence. Representatives are the first pool members
/// of their class, in pool order (θ, then τ, then a).
pub fn enumerate_classes_in(
    h: &Arc<FiniteGroup>,
    m: u64,
    filter: ClassFilter,
    pool: &DatumPool,
) -> Result<Vec<DatumClass>> {
    let ctx = EquivContext::new(h, &pool.aut);
    let mut classes: Vec<DatumClass> = Vec::new();
    for theta in &pool.theta_reps {
        if filter != ClassFilter::All && theta.is_identity() {
            continue;
        }
        for tau in &pool.taus {
            let Some(sol) = solve_a(h, m, theta, tau)? else {
                continue;
            };
            for a in sol.solutions {
                let d = MDatum {
                    group: h.clone(),
                    m,
                    theta: theta.clone(),
                    a,
                    tau: tau.clone(),
                };
                let (ok, is_reduced, is_cyclic) = passes(&d, filter)?;
                if !ok {
                    continue;
                }
                match classes.iter_mut().find(|c| ctx.find(&c.rep, &d).is_some()) {
                    Some(c) => c.members += 1,
                    None => classes.push(DatumClass {
                        rep: d,
                        members: 1,
                        is_reduced,
                        is_cyclic,
                    }),
                }
            }
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, symmetric};

    #[test]
    fn trivial_group_has_no_noncommutative_classes() {
        let h = Arc::new(cyclic(1));
        assert!(enumerate_classes(&h, 3, ClassFilter::Noncommutative)
            .unwrap()
            .is_empty());
        assert_eq!(enumerate_classes(&h, 3, ClassFilter::All).unwrap().len(), 1);
    }

    #[test]
    fn odd_dihedral() {
        let h = Arc::new(dihedral(3));
        assert_eq!(
            enumerate_classes(&h, 2, ClassFilter::Noncommutative)
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn even_dihedral_reduced() {
        let h = Arc::new(dihedral(8));
        assert_eq!(
            enumerate_classes(&h, 2, ClassFilter::Reduced)
                .unwrap()
                .len(),
            3
        );
    }

    #[test]
    fn s4_extensions() {
        let h = Arc::new(symmetric(4));
        assert_eq!(
            enumerate_classes(&h, 2, ClassFilter::Noncommutative)
                .unwrap()
                .len(),
            8
        );
    }
}
