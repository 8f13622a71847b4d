//! Cross-checks every column of the dataset against the quantities derived
//! from first principles.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::classify::{classify, classify_genus, Classification};
use crate::dataset::Dataset;
use crate::family::{branch_count, enumerate_levels, genus_of_family, parameter_count, probe_separable, FamilyRecord};
use crate::signature::{complete_signature, moduli_dimension, RepairOutcome, RepairStatus};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Signature,
    Delta,
    ParameterCount,
    Genus,
    Level,
    GroupOrder,
    Classification,
    Separability,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckKind::Signature => "signature",
            CheckKind::Delta => "delta",
            CheckKind::ParameterCount => "parameter count",
            CheckKind::Genus => "genus",
            CheckKind::Level => "level",
            CheckKind::GroupOrder => "group order",
            CheckKind::Classification => "classification",
            CheckKind::Separability => "separability",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Warning(String),
    Failure(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub kind: CheckKind,
    #[serde(flatten)]
    pub status: CheckStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowReport {
    pub genus: u32,
    pub nr: u32,
    pub repair: RepairOutcome,
    pub verdict: Option<Classification>,
    pub checks: Vec<Check>,
}

impl RowReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| matches!(c.status, CheckStatus::Failure(_)))
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| matches!(c.status, CheckStatus::Warning(_)))
    }

    pub fn status(&self, kind: CheckKind) -> Option<&CheckStatus> {
        self.checks.iter().find(|c| c.kind == kind).map(|c| &c.status)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusClassification {
    pub genus: u32,
    pub possibly_not: BTreeSet<u32>,
    pub stored_blue: BTreeSet<u32>,
    pub unclassified: BTreeSet<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub rows: usize,
    pub checks: usize,
    pub warnings: usize,
    pub failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub strict: bool,
    pub rows: Vec<RowReport>,
    pub classification: Vec<GenusClassification>,
    pub summary: Summary,
}

impl VerifyReport {
    /// 0 when no check failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.failures == 0 {
            0
        } else {
            1
        }
    }

    pub fn row(&self, genus: u32, nr: u32) -> Option<&RowReport> {
        self.rows.iter().find(|r| (r.genus, r.nr) == (genus, nr))
    }

    /// Rows with at least one failing check of the given kind.
    pub fn failing(&self, kind: CheckKind) -> Vec<(u32, u32)> {
        self.rows
            .iter()
            .filter(|r| matches!(r.status(kind), Some(CheckStatus::Failure(_))))
            .map(|r| (r.genus, r.nr))
            .collect()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut genus = 0;
        for row in &self.rows {
            let notes: Vec<&Check> = row.checks.iter().filter(|c| c.status != CheckStatus::Pass).collect();
            if notes.is_empty() {
                continue;
            }
            if row.genus != genus {
                genus = row.genus;
                let _ = writeln!(out, "genus {genus}");
            }
            for c in notes {
                let (tag, detail) = match &c.status {
                    CheckStatus::Warning(d) => ("WARN", d),
                    CheckStatus::Failure(d) => ("FAIL", d),
                    CheckStatus::Pass => unreachable!(),
                };
                let _ = writeln!(out, "  Nr. {:<3} {tag} {}: {detail}", row.nr, c.kind);
            }
        }
        out.push_str("classification\n");
        for g in &self.classification {
            let _ = write!(
                out,
                "  genus {:<2} possibly not definable {}; stored blue {}",
                g.genus,
                fmt_set(&g.possibly_not),
                fmt_set(&g.stored_blue)
            );
            if !g.unclassified.is_empty() {
                let _ = write!(out, "; unclassified {}", fmt_set(&g.unclassified));
            }
            out.push('\n');
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "summary: {} rows, {} checks, {} warnings, {} failures{}",
            s.rows,
            s.checks,
            s.warnings,
            s.failures,
            if self.strict { " (strict)" } else { "" }
        );
        out
    }
}

fn fmt_set(s: &BTreeSet<u32>) -> String {
    let items: Vec<String> = s.iter().map(u32::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn signature_check(rec: &FamilyRecord, repair: &RepairOutcome, strict: bool) -> CheckStatus {
    let printed = rec.signature.to_compact_string();
    match repair.status {
        RepairStatus::Consistent => CheckStatus::Pass,
        RepairStatus::Unrepairable => CheckStatus::Failure(format!(
            "printed ({printed}) fails Riemann–Hurwitz for |G| = {} and no single-entry repair exists",
            rec.group_order()
        )),
        RepairStatus::Completed | RepairStatus::Corrected => {
            let fixed = repair.repaired.as_ref().expect("repaired signature present");
            let change = repair.change.expect("change present");
            let mut msg = format!(
                "printed ({printed}) {} to ({}) by {change}",
                if repair.status == RepairStatus::Completed {
                    "completed"
                } else {
                    "corrected"
                },
                fixed.to_compact_string()
            );
            if repair.is_ambiguous() {
                let others: Vec<String> = repair.candidates[1..]
                    .iter()
                    .map(|c| format!("({})", c.signature.to_compact_string()))
                    .collect();
                let _ = write!(msg, "; ambiguous, other candidates {}", others.join(", "));
            }
            if strict {
                CheckStatus::Failure(msg)
            } else {
                CheckStatus::Warning(msg)
            }
        }
    }
}

fn check_row(rec: &FamilyRecord, strict: bool) -> RowReport {
    let mut checks = Vec::new();
    let mut push = |kind, status| checks.push(Check { kind, status });
    let order = rec.group_order();
    let repair = complete_signature(rec.genus, order, &rec.signature);
    push(CheckKind::Signature, signature_check(rec, &repair, strict));

    let sig = repair.effective().unwrap_or(&rec.signature);
    push(
        CheckKind::Delta,
        match moduli_dimension(0, sig.r()) {
            Ok(d) if d == rec.delta => CheckStatus::Pass,
            Ok(d) => CheckStatus::Failure(format!("printed δ = {} but r - 3 = {d}", rec.delta)),
            Err(e) => CheckStatus::Failure(e.to_string()),
        },
    );

    let params = parameter_count(&rec.template);
    push(
        CheckKind::ParameterCount,
        if params == rec.delta {
            CheckStatus::Pass
        } else {
            CheckStatus::Failure(format!(
                "equation has {params} parameters but printed δ = {}",
                rec.delta
            ))
        },
    );

    push(
        CheckKind::Genus,
        match genus_of_family(rec) {
            Ok(g) if g == rec.genus => CheckStatus::Pass,
            Ok(g) => CheckStatus::Failure(format!("equation {} at level {} has genus {g}", rec.template, rec.n)),
            Err(e) => CheckStatus::Failure(format!("equation {} at level {}: {e}", rec.template, rec.n)),
        },
    );

    push(
        CheckKind::Level,
        match branch_count(rec.n, &rec.template) {
            Ok(b) if enumerate_levels(rec.genus).contains(&(rec.n, b)) => CheckStatus::Pass,
            Ok(b) => CheckStatus::Failure(format!(
                "(n, B) = ({}, {b}) is not a level of genus {}",
                rec.n, rec.genus
            )),
            Err(e) => CheckStatus::Failure(e.to_string()),
        },
    );

    push(
        CheckKind::GroupOrder,
        match &rec.group {
            Some(label) if label.recognized && label.order != order => CheckStatus::Failure(format!(
                "label {} has order {} but n·|Ḡ| = {}·{} = {order}",
                label.text,
                label.order,
                rec.n,
                rec.reduced.order()
            )),
            _ => CheckStatus::Pass,
        },
    );

    let verdict = classify(rec);
    push(
        CheckKind::Classification,
        match &verdict {
            Ok(c) => {
                let open = *c == Classification::PossiblyNotDefinable;
                if open == rec.blue {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Failure(format!(
                        "computed {c} but the row is {}marked blue",
                        if rec.blue { "" } else { "not " }
                    ))
                }
            }
            Err(e) => CheckStatus::Failure(format!("not classified: {e}")),
        },
    );

    push(
        CheckKind::Separability,
        match probe_separable(&rec.template) {
            Ok(true) => CheckStatus::Pass,
            Ok(false) => CheckStatus::Warning(format!(
                "{} is not separable at the probe point a_i = 5, 7, 11, ...",
                rec.template
            )),
            Err(e) => CheckStatus::Warning(format!("probe failed: {e}")),
        },
    );

    RowReport {
        genus: rec.genus,
        nr: rec.nr,
        repair,
        verdict: verdict.ok(),
        checks,
    }
}

/// Runs every check over one genus or the whole dataset. In strict mode a
/// printed signature that needed repair counts as a failure.
pub fn verify(ds: &Dataset, genus: Option<u32>, strict: bool) -> VerifyReport {
    let rows: Vec<RowReport> = ds
        .records()
        .iter()
        .filter(|r| genus.is_none_or(|g| r.genus == g))
        .map(|r| check_row(r, strict))
        .collect();
    let genera: BTreeSet<u32> = rows.iter().map(|r| r.genus).collect();
    let classification = genera
        .into_iter()
        .map(|g| {
            let report = classify_genus(g, ds);
            GenusClassification {
                genus: g,
                possibly_not: report.possibly_not(),
                stored_blue: report.stored_blue(),
                unclassified: report.unclassified().iter().map(|r| r.nr).collect(),
            }
        })
        .collect();
    let summary = Summary {
        rows: rows.len(),
        checks: rows.iter().map(|r| r.checks.len()).sum(),
        warnings: rows.iter().map(|r| r.warnings().count()).sum(),
        failures: rows.iter().map(|r| r.failures().count()).sum(),
    };
    VerifyReport {
        strict,
        rows,
        classification,
        summary,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::load_embedded;

    #[test]
    fn repaired_rows_warn_by_default_and_fail_when_strict() {
        let ds = load_embedded();
        let lenient = verify(&ds, Some(9), false);
        let strict = verify(&ds, Some(9), true);
        let row = lenient.row(9, 8).unwrap();
        assert!(matches!(
            row.status(CheckKind::Signature),
            Some(CheckStatus::Warning(_))
        ));
        let row = strict.row(9, 8).unwrap();
        assert!(matches!(
            row.status(CheckKind::Signature),
            Some(CheckStatus::Failure(_))
        ));
        assert_eq!(strict.exit_code(), 1);
        assert_eq!(
            strict.failing(CheckKind::Signature),
            vec![(9, 8), (9, 9), (9, 11), (9, 12), (9, 13)]
        );
    }

    #[test]
    fn genus5_blue_set() {
        let ds = load_embedded();
        let report = verify(&ds, Some(5), false);
        assert_eq!(report.classification[0].possibly_not, BTreeSet::from([1, 2, 6]));
        assert_eq!(report.failing(CheckKind::Classification), vec![]);
        let text = report.render_text();
        assert!(text.contains("possibly not definable {1, 2, 6}"), "{text}");
        assert!(text.contains("Nr. 5"), "{text}");
    }

    #[test]
    fn ambiguous_repairs_list_alternatives() {
        let ds = load_embedded();
        let report = verify(&ds, Some(9), false);
        match report.row(9, 9).unwrap().status(CheckKind::Signature) {
            Some(CheckStatus::Warning(msg)) => assert!(msg.contains("ambiguous"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn summary_counts_add_up() {
        let ds = load_embedded();
        let report = verify(&ds, None, false);
        assert_eq!(report.summary.rows, 224);
        assert_eq!(report.summary.checks, 224 * 8);
        assert_eq!(report, verify(&ds, None, false));
    }
}
