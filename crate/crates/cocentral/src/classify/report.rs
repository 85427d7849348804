//! Report values shared by the classification drivers and the CLI.

use crate::hopf::HopfFingerprint;
use crate::mdata::DatumFile;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "cc-formula")]
    Cc,
    #[serde(rename = "full-enumeration")]
    Full,
    #[serde(rename = "both")]
    Both,
}

impl Method {
    pub fn uses_formula(self) -> bool {
        matches!(self, Method::Cc | Method::Both)
    }

    pub fn uses_enumeration(self) -> bool {
        matches!(self, Method::Full | Method::Both)
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "cc" | "cc-formula" => Ok(Method::Cc),
            "full" | "full-enumeration" => Ok(Method::Full),
            "both" => Ok(Method::Both),
            _ => Err(format!("unknown method `{s}` (expected cc, full or both)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Discrepancy,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Discrepancy => "discrepancy",
            Status::Fail => "fail",
        })
    }
}

/// A named condition with its outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            holds,
            detail: detail.into(),
        }
    }
}

/// One line of a per-case table, such as a count for a fixed automorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub label: String,
    pub expected: Option<u64>,
    pub computed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub datum: DatumFile,
    /// Pool members merged into this class.
    pub members: usize,
    pub reduced: bool,
    pub cyclic: bool,
    pub fingerprint: Option<HopfFingerprint>,
    /// Outcome of the full axiom scan, when the algebra was small enough.
    pub axioms: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub item: String,
    pub input: String,
    pub method: Method,
    pub paper_value: Option<u64>,
    pub formula_value: Option<u64>,
    pub enumerated_value: Option<u64>,
    pub status: Status,
    /// The expected value is known to be contested; mismatches against it
    /// are discrepancies rather than failures.
    pub disputed: bool,
    /// Hypotheses of the product formulas, informational.
    pub hypotheses: Vec<Check>,
    /// Conditions that must hold for the item to pass.
    pub checks: Vec<Check>,
    pub rows: Vec<TableRow>,
    pub classes: Vec<ClassEntry>,
    pub notes: Vec<String>,
}

impl ClassReport {
    pub fn new(item: impl Into<String>, input: impl Into<String>, method: Method) -> Self {
        ClassReport {
            item: item.into(),
            input: input.into(),
            method,
            paper_value: None,
            formula_value: None,
            enumerated_value: None,
            status: Status::Pass,
            disputed: false,
            hypotheses: Vec::new(),
            checks: Vec::new(),
            rows: Vec::new(),
            classes: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Enumerated count, falling back to the formula.
    pub fn count(&self) -> Option<u64> {
        self.enumerated_value.or(self.formula_value)
    }

    pub fn with_paper_value(mut self, v: u64) -> Self {
        self.paper_value = Some(v);
        self.finalize()
    }

    /// Recomputes the status from the values, rows and checks.
    pub fn finalize(mut self) -> Self {
        let mut status = Status::Pass;
        let mut raise = |s: Status| status = status.max(s);
        if self.checks.iter().any(|c| !c.holds) {
            raise(Status::Fail);
        }
        if self
            .rows
            .iter()
            .any(|r| r.expected.is_some_and(|e| e != r.computed))
        {
            raise(if self.disputed {
                Status::Discrepancy
            } else {
                Status::Fail
            });
        }
        if let (Some(f), Some(e)) = (self.formula_value, self.enumerated_value) {
            if f != e {
                raise(Status::Discrepancy);
            }
        }
        let computed = [self.formula_value, self.enumerated_value];
        if let Some(p) = self.paper_value {
            if computed.iter().all(Option::is_none) {
                raise(Status::Fail);
            }
            for v in computed.into_iter().flatten() {
                if v != p {
                    raise(if self.disputed {
                        Status::Discrepancy
                    } else {
                        Status::Fail
                    });
                }
            }
        }
        self.status = status;
        self
    }

    /// Stable human-readable rendering.
    pub fn render_text(&self) -> String {
        let show = |v: Option<u64>| v.map_or("-".to_string(), |v| v.to_string());
        let mut out = format!(
            "[{}] {} ({}): expected {}, formula {}, enumerated {}\n",
            self.status,
            self.item,
            self.input,
            show(self.paper_value),
            show(self.formula_value),
            show(self.enumerated_value)
        );
        for h in &self.hypotheses {
            out += &format!("  hypothesis {}: {} ({})\n", h.name, h.holds, h.detail);
        }
        for c in &self.checks {
            out += &format!("  check {}: {} ({})\n", c.name, c.holds, c.detail);
        }
        for r in &self.rows {
            out += &format!(
                "  row {}: expected {}, computed {}\n",
                r.label,
                show(r.expected),
                r.computed
            );
        }
        if !self.classes.is_empty() {
            out += &format!("  classes: {}\n", self.classes.len());
        }
        for n in &self.notes {
            out += &format!("  note: {n}\n");
        }
        out
    }
}

/// Aggregated output of several items.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub items: Vec<ClassReport>,
    /// Items not started because the time budget ran out.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<String>,
}

impl SuiteReport {
    /// Worst status over all items; `None` when nothing ran.
    pub fn worst(&self) -> Option<Status> {
        self.items.iter().map(|i| i.status).max()
    }

    pub fn render_text(&self) -> String {
        let mut out: String = self.items.iter().map(ClassReport::render_text).collect();
        for s in &self.skipped {
            out += &format!("[skipped] {s}\n");
        }
        let count = |s: Status| self.items.iter().filter(|i| i.status == s).count();
        out += &format!(
            "{} items: {} pass, {} discrepancy, {} fail\n",
            self.items.len(),
            count(Status::Pass),
            count(Status::Discrepancy),
            count(Status::Fail)
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(paper: Option<u64>, formula: Option<u64>, enumerated: Option<u64>) -> ClassReport {
        let mut r = ClassReport::new("x", "y", Method::Both);
        r.paper_value = paper;
        r.formula_value = formula;
        r.enumerated_value = enumerated;
        r.finalize()
    }

    #[test]
    fn status_rules() {
        assert_eq!(report(Some(4), Some(4), Some(4)).status, Status::Pass);
        assert_eq!(report(Some(4), Some(4), Some(5)).status, Status::Fail);
        assert_eq!(report(None, Some(4), Some(5)).status, Status::Discrepancy);
        assert_eq!(report(Some(4), None, None).status, Status::Fail);
        let mut r = report(Some(7), Some(8), Some(8));
        r.disputed = true;
        assert_eq!(r.finalize().status, Status::Discrepancy);
    }

    #[test]
    fn empty_suite_serializes_to_empty_items() {
        let s = SuiteReport::default();
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"items":[]}"#);
        assert_eq!(s.worst(), None);
    }

    #[test]
    fn method_parsing() {
        assert_eq!("both".parse::<Method>().unwrap(), Method::Both);
        assert_eq!("cc".parse::<Method>().unwrap(), Method::Cc);
        assert!("fast".parse::<Method>().is_err());
    }
}
