//! The embedded dataset and its JSON and CSV forms.

mod tables;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::family::{EquationTemplate, FamilyRecord};
use crate::groups::{parse_group_label, ReducedGroupKind};
use crate::signature::{complete_signature, RepairOutcome};

pub const SCHEMA_VERSION: &str = "v1";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DatasetError {
    #[error("invalid JSON document: {0}")]
    Json(String),
    #[error("unsupported schema {0:?}; expected \"v1\"")]
    UnsupportedSchema(String),
    #[error("record {index} (genus {genus}, Nr. {nr}): {message}")]
    Row {
        index: usize,
        genus: String,
        nr: String,
        message: String,
    },
    #[error("duplicate record genus {genus}, Nr. {nr}")]
    Duplicate { genus: u32, nr: u32 },
    #[error("genus {genus}: row numbers must run 1..{count}, found {found:?}")]
    NonContiguous { genus: u32, count: usize, found: Vec<u32> },
}

/// A curve named in the prose of the tables' discussion, kept apart from the
/// numbered rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedCurve {
    pub genus: u32,
    pub n: u32,
    pub label: String,
    pub template: EquationTemplate,
}

/// Repair outcome of one row whose printed signature fails Riemann–Hurwitz.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Erratum {
    pub genus: u32,
    pub nr: u32,
    pub outcome: RepairOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dataset {
    records: Vec<FamilyRecord>,
    errata: Vec<Erratum>,
    named_curves: Vec<NamedCurve>,
}

#[derive(Serialize, Deserialize)]
struct Document<R> {
    schema: String,
    records: Vec<R>,
    #[serde(default)]
    errata: Vec<Erratum>,
    #[serde(default)]
    named_curves: Vec<NamedCurve>,
}

/// The rows of all tables, genus 3 to 10.
pub fn load_embedded() -> Dataset {
    Dataset::new(tables::records(), tables::named_curves()).expect("embedded tables are consistent")
}

fn errata_of(records: &[FamilyRecord]) -> Vec<Erratum> {
    records
        .iter()
        .filter_map(|r| {
            let outcome = complete_signature(r.genus, r.group_order(), &r.signature);
            outcome.is_erratum().then_some(Erratum {
                genus: r.genus,
                nr: r.nr,
                outcome,
            })
        })
        .collect()
}

fn check_record(r: &FamilyRecord) -> Result<(), String> {
    if r.genus < 2 {
        return Err(format!("genus {} is below 2", r.genus));
    }
    if r.n < 2 {
        return Err(format!("level {} is below 2", r.n));
    }
    match r.reduced {
        ReducedGroupKind::Cyclic { m } | ReducedGroupKind::Dihedral { m } if m < 2 => {
            return Err(format!("reduced group {:?} needs m >= 2", r.reduced));
        }
        _ => {}
    }
    if let Some(label) = &r.group {
        let reparsed = parse_group_label(&label.text, Some(r.group_order())).map_err(|e| e.to_string())?;
        if reparsed != *label {
            return Err(format!(
                "group label {:?} does not match its stored order {} (recognized: {})",
                label.text, label.order, label.recognized
            ));
        }
    }
    Ok(())
}

impl Dataset {
    /// Builds a dataset, checking that `(genus, Nr)` is unique and that row
    /// numbers are contiguous from 1 in each genus. Records are kept sorted
    /// by `(genus, Nr)`; errata are recomputed from the records.
    pub fn new(mut records: Vec<FamilyRecord>, named_curves: Vec<NamedCurve>) -> Result<Self, DatasetError> {
        records.sort_by_key(FamilyRecord::id);
        let mut by_genus: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for pair in records.windows(2) {
            if pair[0].id() == pair[1].id() {
                return Err(DatasetError::Duplicate {
                    genus: pair[0].genus,
                    nr: pair[0].nr,
                });
            }
        }
        for r in &records {
            by_genus.entry(r.genus).or_default().push(r.nr);
        }
        for (genus, nrs) in by_genus {
            if nrs.iter().enumerate().any(|(k, &nr)| nr as usize != k + 1) {
                return Err(DatasetError::NonContiguous {
                    genus,
                    count: nrs.len(),
                    found: nrs,
                });
            }
        }
        let errata = errata_of(&records);
        Ok(Dataset {
            records,
            errata,
            named_curves,
        })
    }

    pub fn records(&self) -> &[FamilyRecord] {
        &self.records
    }

    pub fn errata(&self) -> &[Erratum] {
        &self.errata
    }

    pub fn named_curves(&self) -> &[NamedCurve] {
        &self.named_curves
    }

    pub fn get(&self, genus: u32, nr: u32) -> Option<&FamilyRecord> {
        self.records
            .binary_search_by_key(&(genus, nr), FamilyRecord::id)
            .ok()
            .map(|i| &self.records[i])
    }

    pub fn erratum(&self, genus: u32, nr: u32) -> Option<&Erratum> {
        self.errata.iter().find(|e| (e.genus, e.nr) == (genus, nr))
    }

    pub fn genus(&self, genus: u32) -> impl Iterator<Item = &FamilyRecord> {
        self.records.iter().filter(move |r| r.genus == genus)
    }

    pub fn genera(&self) -> BTreeSet<u32> {
        self.records.iter().map(|r| r.genus).collect()
    }

    pub fn count(&self, genus: u32) -> usize {
        self.genus(genus).count()
    }

    /// Number of rows of the given genus at each level `n`.
    pub fn count_by_level(&self, genus: u32) -> BTreeMap<u32, usize> {
        let mut tally = BTreeMap::new();
        for r in self.genus(genus) {
            *tally.entry(r.n).or_insert(0) += 1;
        }
        tally
    }

    pub fn to_json(&self) -> String {
        let doc = Document {
            schema: SCHEMA_VERSION.to_string(),
            records: self.records.clone(),
            errata: self.errata.clone(),
            named_curves: self.named_curves.clone(),
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("dataset serializes");
        text.push('\n');
        text
    }

    /// Parses a dataset document. Errors name the offending row by index and
    /// by `(genus, Nr)` where those fields are readable. Errata in the
    /// document are ignored and recomputed.
    pub fn from_json(text: &str) -> Result<Self, DatasetError> {
        let doc: Document<Value> = serde_json::from_str(text).map_err(|e| DatasetError::Json(e.to_string()))?;
        if doc.schema != SCHEMA_VERSION {
            return Err(DatasetError::UnsupportedSchema(doc.schema));
        }
        let mut records = Vec::with_capacity(doc.records.len());
        for (index, value) in doc.records.into_iter().enumerate() {
            let field = |name: &str| value.get(name).map_or_else(|| "?".to_string(), |v| v.to_string());
            let (genus, nr) = (field("genus"), field("nr"));
            let row_err = |message: String| DatasetError::Row {
                index,
                genus: genus.clone(),
                nr: nr.clone(),
                message,
            };
            let record: FamilyRecord = serde_json::from_value(value.clone()).map_err(|e| row_err(e.to_string()))?;
            check_record(&record).map_err(row_err)?;
            records.push(record);
        }
        Dataset::new(records, doc.named_curves)
    }

    /// CSV with one line per record, optionally restricted to one genus.
    pub fn export_csv(&self, genus: Option<u32>) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "genus",
            "Nr",
            "reduced_group",
            "full_group",
            "order",
            "n",
            "m",
            "signature",
            "delta",
            "blue",
            "equation",
        ])
        .expect("write to memory");
        for r in self.records.iter().filter(|r| genus.is_none_or(|g| r.genus == g)) {
            w.write_record([
                r.genus.to_string(),
                r.nr.to_string(),
                r.reduced.to_string(),
                r.group.as_ref().map(|g| g.text.clone()).unwrap_or_default(),
                r.group_order().to_string(),
                r.n.to_string(),
                r.m().map(|m| m.to_string()).unwrap_or_default(),
                r.signature.to_string(),
                r.delta.to_string(),
                r.blue.to_string(),
                r.template.to_string(),
            ])
            .expect("write to memory");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("CSV is UTF-8")
    }
}
