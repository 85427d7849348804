//! Classification drivers: product-formula counts, full enumerations and
//! the family suites.

mod counting;
mod dihedral;
mod report;
mod single;
mod suite;
mod zp2;

pub use counting::{
    classify_extensions, classify_extensions_in, count_via_cc, graded_twist_classes,
    group_invariants, ClassifyOptions, GroupInvariants,
};
pub use dihedral::{
    candidate_specs, dihedral_suite, dihedral_suite_with, e_n_disputed, expected_compatible_maps,
    expected_e_n, omega_exponent, order_two_classes, table_value, DihedralDatumSpec,
};
pub use report::{Check, ClassEntry, ClassReport, Method, Status, SuiteReport, TableRow};
pub use single::{describe_datum, hopf_report};
pub use suite::{
    a5_suite, a5_table_value, a5_value_disputed, paper_jobs, run_jobs, run_paper_suite,
    s4_extension_twists, schur_item, sl2_twist_item, Job, SuiteOptions,
};
pub use zp2::{
    diagonal_classes, gl2_automorphisms, listed_representatives, zp2_closed_form, zp2_group,
    zp2_matrix, zp2_suite, zp2_tau,
};
