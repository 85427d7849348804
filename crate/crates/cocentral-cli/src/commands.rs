//! Verb handlers; every verb produces a suite report.

use crate::cache::{Cache, PoolPayload};
use crate::{Cli, Filter, Suite, Verb, USAGE};
use cocentral::classify::{
    classify_extensions_in, describe_datum, graded_twist_classes, hopf_report, run_paper_suite,
    ClassEntry, ClassReport, ClassifyOptions, Method, Status, SuiteOptions, SuiteReport,
};
use cocentral::cohomology::schur_multiplier;
use cocentral::group::{make_group_with, FiniteGroup};
use cocentral::mdata::{enumerate_classes_in, ClassFilter, DatumFile, DatumPool, GroupRef};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::io::Write;
use std::sync::Arc;
use std::time::Duration;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Engine(cocentral::Error),
    Output(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(s) => write!(f, "{s}"),
            CliError::Engine(e) => write!(f, "{e}"),
            CliError::Output(e) => write!(f, "cannot write report: {e}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use cocentral::Error as E;
        match self {
            CliError::Input(_) => USAGE,
            CliError::Engine(E::InvalidSpec(_) | E::Io(_) | E::Json(_) | E::InvalidTable(_)) => {
                USAGE
            }
            CliError::Engine(_) | CliError::Output(_) => 1,
        }
    }
}

impl From<cocentral::Error> for CliError {
    fn from(e: cocentral::Error) -> Self {
        CliError::Engine(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn options(cli: &Cli) -> ClassifyOptions {
    let mut o = ClassifyOptions::default();
    if let Some(n) = cli.common.max_order {
        o.budget.max_group_order = n as usize;
    }
    o
}

fn group(spec: &str, o: &ClassifyOptions) -> Result<Arc<FiniteGroup>> {
    Ok(Arc::new(make_group_with(spec, &o.budget)?))
}

fn read_datum(path: &std::path::Path) -> Result<(cocentral::mdata::MDatum, GroupRef)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let file: DatumFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{} is not a datum file: {e}", path.display())))?;
    let source = file.group.clone();
    Ok((file.into_datum()?, source))
}

/// Automorphisms and cocycle representatives, through the cache when one
/// is configured.
fn pool(cli: &Cli, h: &FiniteGroup, m: u64, o: &ClassifyOptions) -> Result<DatumPool> {
    let Some(dir) = &cli.common.cache else {
        return Ok(DatumPool::generic(h, m, &o.budget)?);
    };
    let cache = Cache::new(dir).map_err(CliError::Output)?;
    let tag = format!("datum-pool:m={m}");
    if let Some(p) = cache.load(h, &tag, |p: &PoolPayload| p.is_valid_for(h)) {
        return Ok(p.into_pool());
    }
    let p = DatumPool::generic(h, m, &o.budget)?;
    // an unwritable cache only costs recomputation
    let _ = cache.store(h, &tag, &PoolPayload::from_pool(&p));
    Ok(p)
}

fn single(cli: &Cli, name: &str, f: impl FnOnce() -> Result<ClassReport>) -> Result<SuiteReport> {
    if cli.common.budget == Some(Duration::ZERO) {
        return Ok(SuiteReport {
            items: Vec::new(),
            skipped: vec![name.to_string()],
        });
    }
    Ok(SuiteReport {
        items: vec![f()?],
        skipped: Vec::new(),
    })
}

pub fn report(cli: &Cli) -> Result<SuiteReport> {
    let o = options(cli);
    match &cli.verb {
        Verb::Classify {
            group: spec,
            m,
            method,
        } => single(cli, "classify", || {
            let h = group(spec, &o)?;
            let p = if method.uses_enumeration() {
                Some(pool(cli, &h, *m, &o)?)
            } else {
                None
            };
            Ok(classify_extensions_in(&h, *m, *method, &o, p.as_ref())?)
        }),
        Verb::Twists { group: spec, m } => single(cli, "twists", || {
            Ok(graded_twist_classes(&group(spec, &o)?, *m, &o)?)
        }),
        Verb::Schur { group: spec } => single(cli, "schur", || {
            let h = group(spec, &o)?;
            let s = schur_multiplier(&h, &o.budget)?;
            let mut r = ClassReport::new("schur", h.name(), Method::Full);
            r.enumerated_value = Some(s.order);
            r.notes.push(format!("cyclic: {}", s.cyclic));
            Ok(r.finalize())
        }),
        Verb::Datum {
            file: Some(path), ..
        } => single(cli, "datum", || {
            let (d, source) = read_datum(path)?;
            Ok(describe_datum(&d, source, &o)?)
        }),
        Verb::Datum {
            group: Some(spec),
            m: Some(m),
            filter,
            ..
        } => single(cli, "datum", || {
            let h = group(spec, &o)?;
            let p = pool(cli, &h, *m, &o)?;
            let filter = match filter {
                Filter::All => ClassFilter::All,
                Filter::Noncommutative => ClassFilter::Noncommutative,
                Filter::Reduced => ClassFilter::Reduced,
                Filter::Cyclic => ClassFilter::Cyclic,
            };
            let classes = enumerate_classes_in(&h, *m, filter, &p)?;
            let mut r =
                ClassReport::new("datum classes", format!("{} m={m}", h.name()), Method::Full);
            r.enumerated_value = Some(classes.len() as u64);
            r.notes.push(format!("filter: {filter:?}"));
            for c in classes {
                r.classes.push(ClassEntry {
                    datum: DatumFile::from_datum(&c.rep, GroupRef::Spec(spec.clone())),
                    members: c.members,
                    reduced: c.is_reduced,
                    cyclic: c.is_cyclic,
                    fingerprint: None,
                    axioms: None,
                });
            }
            Ok(r.finalize())
        }),
        Verb::Datum { .. } => Err(CliError::Input(
            "datum needs --file or --group with --m".into(),
        )),
        Verb::Hopf { file } => single(cli, "hopf", || {
            let (d, source) = read_datum(file)?;
            Ok(hopf_report(&d, source, &o)?)
        }),
        Verb::Verify {
            suite: Suite::Paper,
            stretch,
        } => {
            let mut opts = SuiteOptions {
                time_budget: cli.common.budget,
                stretch: *stretch,
                ..Default::default()
            };
            if let Some(n) = cli.common.max_order {
                opts.classify.budget.max_group_order = n as usize;
            }
            Ok(run_paper_suite(&opts))
        }
        Verb::Verify {
            suite: Suite::Properties,
            ..
        } => {
            if cli.common.budget == Some(Duration::ZERO) {
                return Ok(SuiteReport::default());
            }
            relabel_suite(cli.common.seed, &o)
        }
    }
}

/// Extension counts recomputed on randomly relabeled copies of small groups.
fn relabel_suite(seed: u64, o: &ClassifyOptions) -> Result<SuiteReport> {
    const TRIALS: usize = 3;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SuiteReport::default();
    for (spec, m) in [
        ("dihedral:4", 2),
        ("dihedral:3", 2),
        ("alternating:4", 3),
        ("product(cyclic:3,cyclic:3)", 3),
    ] {
        let h = group(spec, o)?;
        let base = classify_extensions_in(&h, m, Method::Full, o, None)?.enumerated_value;
        let mut r = ClassReport::new(format!("relabel {spec} m={m}"), spec, Method::Full);
        r.enumerated_value = base;
        let mut counts = Vec::new();
        for _ in 0..TRIALS {
            let mut perm: Vec<u32> = (0..h.order() as u32).collect();
            perm.shuffle(&mut rng);
            let g = Arc::new(h.relabel(&perm));
            counts.push(classify_extensions_in(&g, m, Method::Full, o, None)?.enumerated_value);
        }
        r.checks.push(cocentral::classify::Check::new(
            "count-invariant-under-relabeling",
            counts.iter().all(|c| *c == base),
            format!("{TRIALS} relabelings gave {counts:?}"),
        ));
        out.items.push(r.finalize());
    }
    Ok(out)
}

pub fn render(cli: &Cli, r: &SuiteReport) -> String {
    if cli.common.json {
        serde_json::to_string_pretty(r).expect("reports serialize") + "\n"
    } else {
        r.render_text()
    }
}

pub fn exit_code(r: &SuiteReport) -> u8 {
    match r.worst() {
        None | Some(Status::Pass) => 0,
        Some(Status::Fail) => 1,
        Some(Status::Discrepancy) => 2,
    }
}

pub fn run(cli: &Cli) -> Result<u8> {
    let r = report(cli)?;
    let text = render(cli, &r);
    match &cli.common.out {
        Some(path) => std::fs::write(path, text).map_err(CliError::Output)?,
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(CliError::Output)?,
    }
    Ok(exit_code(&r))
}
