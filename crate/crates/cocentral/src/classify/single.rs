//! Reports about one explicit datum.

use super::counting::{entry_for, ClassifyOptions};
use super::report::{Check, ClassReport, Method};
use crate::error::Result;
use crate::hopf::{build_am_with, fingerprint, hopf_invariants, verify_hopf_axioms};
use crate::mdata::{structure_groups, DatumFile, GroupRef, MDatum};

/// Validates the datum equation and reports the structure groups.
pub fn describe_datum(d: &MDatum, source: GroupRef, opts: &ClassifyOptions) -> Result<ClassReport> {
    let mut r = ClassReport::new(
        "datum",
        format!("{} m={}", d.group.name(), d.m),
        Method::Full,
    );
    let v = d.validate(true);
    r.checks.push(Check::new(
        "datum-valid",
        v.is_valid(),
        v.violations.join("; "),
    ));
    if v.is_valid() {
        let s = structure_groups(d)?;
        r.notes
            .push(format!("|Z_tau,theta(H)| = {}", s.z_tau_theta.order()));
        r.notes
            .push(format!("|H^theta| = {}", s.fixed_points.order()));
        r.notes.push(format!(
            "|G| = {}, |G0| = {}",
            s.g_group.order(),
            s.g0_group.order()
        ));
        r.notes
            .push(format!("graded twist type: {}", v.is_twist_type()));
        let (mut entry, check) = entry_for(d, 1, s.is_reduced, s.is_cyclic_datum, opts);
        entry.datum = DatumFile::from_datum(d, source);
        r.checks.extend(check);
        r.classes.push(entry);
    }
    Ok(r.finalize())
}

/// Builds the Hopf algebra of a datum, scans every axiom and compares the
/// fingerprint read off the tables with the one predicted by the datum.
pub fn hopf_report(d: &MDatum, source: GroupRef, opts: &ClassifyOptions) -> Result<ClassReport> {
    let mut r = ClassReport::new(
        "hopf",
        format!("{} m={}", d.group.name(), d.m),
        Method::Full,
    );
    d.check()?;
    let h = build_am_with(d, &opts.budget)?;
    let axioms = verify_hopf_axioms(&h);
    r.checks.push(Check::new(
        "hopf-axioms",
        axioms.all_pass(),
        format!("failed: {:?}", axioms.failed()),
    ));
    let fp = fingerprint(&h)?;
    let predicted = hopf_invariants(d)?;
    r.checks.push(Check::new(
        "fingerprint-matches-datum",
        fp == predicted,
        "table fingerprint against datum invariants",
    ));
    let s = structure_groups(d)?;
    r.classes.push(super::report::ClassEntry {
        datum: DatumFile::from_datum(d, source),
        members: 1,
        reduced: s.is_reduced,
        cyclic: s.is_cyclic_datum,
        fingerprint: Some(fp),
        axioms: Some(axioms.all_pass()),
    });
    r.enumerated_value = Some(h.dimension() as u64);
    r.notes.push("count is the dimension".into());
    Ok(r.finalize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::report::Status;
    use crate::cohomology::dihedral_tau_omega;
    use crate::group::{dihedral, dihedral_psi};
    use crate::mdata::solve_a;
    use std::sync::Arc;

    fn d4_datum() -> MDatum {
        let h = Arc::new(dihedral(4));
        let theta = dihedral_psi(4, 0, 3).unwrap();
        let tau = dihedral_tau_omega(4, 1);
        let a = solve_a(&h, 2, &theta, &tau).unwrap().unwrap().solutions[0].clone();
        MDatum {
            group: h,
            m: 2,
            theta,
            a,
            tau,
        }
    }

    #[test]
    fn datum_and_hopf_reports() {
        let d = d4_datum();
        let o = ClassifyOptions::default();
        let r = describe_datum(&d, GroupRef::Spec("dihedral:4".into()), &o).unwrap();
        assert_eq!(r.status, Status::Pass, "{}", r.render_text());
        let r = hopf_report(&d, GroupRef::Spec("dihedral:4".into()), &o).unwrap();
        assert_eq!(r.status, Status::Pass, "{}", r.render_text());
        assert_eq!(r.enumerated_value, Some(16));
    }

    #[test]
    fn invalid_datum_fails() {
        let mut d = d4_datum();
        d.a =
            d.a.add(&crate::cohomology::UnitMap::from_fn(8, d.a.modulus, |x| {
                u64::from(x >= 4)
            }));
        let r = describe_datum(
            &d,
            GroupRef::Spec("dihedral:4".into()),
            &ClassifyOptions::default(),
        )
        .unwrap();
        assert_eq!(r.status, Status::Fail);
    }
}
