//! Sufficient criteria for a superelliptic curve to be definable over its
//! field of moduli, applied to family records.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::dataset::Dataset;
use crate::family::FamilyRecord;
use crate::groups::ReducedGroupKind;
use crate::signature::{complete_signature, is_odd_signature, moduli_dimension, quotient_genus_rational, Signature};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("genus {genus}, Nr. {nr}: signature {signature} fails Riemann–Hurwitz (quotient genus {quotient_genus}) and has no single-entry repair")]
    Unrepairable {
        genus: u32,
        nr: u32,
        signature: String,
        quotient_genus: BigRational,
    },
    #[error("no table exists for genus {0}; tables cover genus 3 to 10")]
    GenusOutOfRange(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DefinabilityReason {
    UniqueSubgroupCriterion,
    OddSignature,
    Quasiplatonic,
}

impl DefinabilityReason {
    pub fn code(self) -> &'static str {
        match self {
            DefinabilityReason::UniqueSubgroupCriterion => "unique_subgroup_criterion",
            DefinabilityReason::OddSignature => "odd_signature",
            DefinabilityReason::Quasiplatonic => "quasiplatonic",
        }
    }

    pub fn theorem(self) -> &'static str {
        match self {
            DefinabilityReason::UniqueSubgroupCriterion => {
                "uniqueness of the superelliptic subgroup: a reduced automorphism group other than trivial or cyclic makes the curve definable over its field of moduli"
            }
            DefinabilityReason::OddSignature => {
                "Artebani–Quispe: a curve whose quotient by its automorphism group has genus zero and odd signature is definable over its field of moduli"
            }
            DefinabilityReason::Quasiplatonic => {
                "Wolfart: quasiplatonic curves (moduli dimension zero) are definable over their field of moduli"
            }
        }
    }
}

impl fmt::Display for DefinabilityReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DefinabilityReason::UniqueSubgroupCriterion => "UniqueSubgroupCriterion",
            DefinabilityReason::OddSignature => "OddSignature",
            DefinabilityReason::Quasiplatonic => "Quasiplatonic",
        })
    }
}

/// `PossiblyNotDefinable` means none of the sufficient criteria applies. It
/// does not assert that the curve fails to be definable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Classification {
    Definable(DefinabilityReason),
    PossiblyNotDefinable,
}

const OPEN_CASE: &str =
    "no sufficient criterion applies; definability over the field of moduli is open for this family";

impl Classification {
    pub fn is_definable(self) -> bool {
        matches!(self, Classification::Definable(_))
    }

    pub fn reason(self) -> Option<DefinabilityReason> {
        match self {
            Classification::Definable(r) => Some(r),
            Classification::PossiblyNotDefinable => None,
        }
    }

    pub fn theorem(self) -> &'static str {
        self.reason().map_or(OPEN_CASE, DefinabilityReason::theorem)
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Definable(r) => write!(f, "Definable({r})"),
            Classification::PossiblyNotDefinable => f.write_str("PossiblyNotDefinable"),
        }
    }
}

/// `{"verdict": ..., "reason": ..., "theorem": ...}`
impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(3))?;
        let verdict = if self.is_definable() {
            "definable"
        } else {
            "possibly_not_definable"
        };
        map.serialize_entry("verdict", verdict)?;
        map.serialize_entry("reason", &self.reason().map(DefinabilityReason::code))?;
        map.serialize_entry("theorem", self.theorem())?;
        map.end()
    }
}

/// Applies the criteria in priority order: non-cyclic reduced group, odd
/// signature, zero moduli dimension. `sig` must have a genus-zero quotient.
pub fn classify_with(reduced: ReducedGroupKind, sig: &Signature) -> Classification {
    if !reduced.is_cyclic_or_trivial() {
        Classification::Definable(DefinabilityReason::UniqueSubgroupCriterion)
    } else if is_odd_signature(sig) {
        Classification::Definable(DefinabilityReason::OddSignature)
    } else if moduli_dimension(0, sig.r()) == Ok(0) {
        Classification::Definable(DefinabilityReason::Quasiplatonic)
    } else {
        Classification::PossiblyNotDefinable
    }
}

/// Classifies a record from its reduced group and its signature, repaired
/// when the printed one fails Riemann–Hurwitz. The stored blue flag is not
/// read.
pub fn classify(rec: &FamilyRecord) -> Result<Classification, ClassifyError> {
    let order = rec.group_order();
    let outcome = complete_signature(rec.genus, order, &rec.signature);
    match outcome.effective() {
        Some(sig) => Ok(classify_with(rec.reduced, sig)),
        None => Err(ClassifyError::Unrepairable {
            genus: rec.genus,
            nr: rec.nr,
            signature: rec.signature.to_string(),
            quotient_genus: quotient_genus_rational(rec.genus, order, &rec.signature),
        }),
    }
}

/// Row numbers marked blue in the tables for genus 3 to 10.
pub fn expected_blue(genus: u32) -> Result<BTreeSet<u32>, ClassifyError> {
    let rows: &[u32] = match genus {
        3 => &[1, 2],
        4 => &[1, 3, 5],
        5 => &[1, 2, 6],
        6 => &[9, 10, 13, 15],
        7 => &[1, 2, 11],
        8 => &[2, 6, 7, 8],
        9 => &[1, 3, 4, 14, 16, 20],
        10 => &[2, 3, 16, 17, 19, 20, 23],
        _ => return Err(ClassifyError::GenusOutOfRange(genus)),
    };
    Ok(rows.iter().copied().collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowVerdict {
    pub nr: u32,
    pub verdict: Result<Classification, ClassifyError>,
    pub blue: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusReport {
    pub genus: u32,
    pub rows: Vec<RowVerdict>,
}

impl GenusReport {
    pub fn possibly_not(&self) -> BTreeSet<u32> {
        self.rows
            .iter()
            .filter(|r| r.verdict == Ok(Classification::PossiblyNotDefinable))
            .map(|r| r.nr)
            .collect()
    }

    pub fn definable_count(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| matches!(r.verdict, Ok(c) if c.is_definable()))
            .count()
    }

    pub fn unclassified(&self) -> Vec<&RowVerdict> {
        self.rows.iter().filter(|r| r.verdict.is_err()).collect()
    }

    pub fn stored_blue(&self) -> BTreeSet<u32> {
        self.rows.iter().filter(|r| r.blue).map(|r| r.nr).collect()
    }

    /// Rows where the computed verdict disagrees with the stored flag:
    /// `(flagged but not computed, computed but not flagged)`.
    pub fn blue_diff(&self) -> (BTreeSet<u32>, BTreeSet<u32>) {
        let computed = self.possibly_not();
        let stored = self.stored_blue();
        (
            stored.difference(&computed).copied().collect(),
            computed.difference(&stored).copied().collect(),
        )
    }
}

pub fn classify_genus(genus: u32, ds: &Dataset) -> GenusReport {
    let rows = ds
        .genus(genus)
        .map(|r| RowVerdict {
            nr: r.nr,
            verdict: classify(r),
            blue: r.blue,
        })
        .collect();
    GenusReport { genus, rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::load_embedded;
    use proptest::prelude::*;
    use DefinabilityReason::*;

    #[test]
    fn genus5_examples() {
        let ds = load_embedded();
        assert_eq!(
            classify(ds.get(5, 8).unwrap()),
            Ok(Classification::Definable(UniqueSubgroupCriterion))
        );
        assert_eq!(
            classify(ds.get(5, 7).unwrap()),
            Ok(Classification::Definable(OddSignature))
        );
        assert_eq!(
            classify(ds.get(5, 1).unwrap()),
            Ok(Classification::PossiblyNotDefinable)
        );
    }

    #[test]
    fn genus_reports() {
        let ds = load_embedded();
        let set = |v: &[u32]| v.iter().copied().collect::<BTreeSet<u32>>();
        assert_eq!(classify_genus(3, &ds).possibly_not(), set(&[1, 2]));
        assert_eq!(classify_genus(4, &ds).possibly_not(), set(&[1, 3, 5]));
        assert_eq!(classify_genus(9, &ds).possibly_not(), set(&[1, 3, 4, 14, 16, 20]));
        let r3 = classify_genus(3, &ds);
        assert_eq!(
            r3.rows[4].verdict,
            Ok(Classification::Definable(UniqueSubgroupCriterion))
        );
        assert_eq!(r3.blue_diff(), (BTreeSet::new(), BTreeSet::new()));
    }

    #[test]
    fn expected_sets() {
        assert_eq!(
            expected_blue(10).unwrap().into_iter().collect::<Vec<_>>(),
            vec![2, 3, 16, 17, 19, 20, 23]
        );
        assert_eq!(
            expected_blue(8).unwrap().into_iter().collect::<Vec<_>>(),
            vec![2, 6, 7, 8]
        );
        assert_eq!(
            expected_blue(7).unwrap().into_iter().collect::<Vec<_>>(),
            vec![1, 2, 11]
        );
        assert_eq!(expected_blue(2), Err(ClassifyError::GenusOutOfRange(2)));
        assert_eq!(expected_blue(11), Err(ClassifyError::GenusOutOfRange(11)));
    }

    #[test]
    fn unrepairable_rows_are_not_classified() {
        let ds = load_embedded();
        let err = classify(ds.get(6, 11).unwrap()).unwrap_err();
        assert!(matches!(err, ClassifyError::Unrepairable { genus: 6, nr: 11, .. }));
    }

    #[test]
    fn verdict_json() {
        let v = serde_json::to_value(Classification::Definable(OddSignature)).unwrap();
        assert_eq!(v["verdict"], "definable");
        assert_eq!(v["reason"], "odd_signature");
        let v = serde_json::to_value(Classification::PossiblyNotDefinable).unwrap();
        assert_eq!(v["verdict"], "possibly_not_definable");
        assert!(v["reason"].is_null());
        assert!(v["theorem"].as_str().unwrap().contains("open"));
    }

    #[test]
    fn genus_two_records_can_be_classified() {
        // No genus-2 rows ship; ad hoc records go through classify_with.
        let sig: Signature = "2,4,8".parse().unwrap();
        assert_eq!(
            classify_with(ReducedGroupKind::Cyclic { m: 4 }, &sig),
            Classification::Definable(OddSignature)
        );
        let sig: Signature = "2^6".parse().unwrap();
        assert_eq!(
            classify_with(ReducedGroupKind::Trivial, &sig),
            Classification::PossiblyNotDefinable
        );
    }

    fn reduced_kind() -> impl Strategy<Value = ReducedGroupKind> {
        prop_oneof![
            Just(ReducedGroupKind::Trivial),
            (2u32..30).prop_map(|m| ReducedGroupKind::Cyclic { m }),
            (2u32..30).prop_map(|m| ReducedGroupKind::Dihedral { m }),
            Just(ReducedGroupKind::TetraA4),
            Just(ReducedGroupKind::OctaS4),
            Just(ReducedGroupKind::IcosaA5),
        ]
    }

    fn signature() -> impl Strategy<Value = Signature> {
        prop::collection::btree_map(2u32..30, 1u32..6, 1..5).prop_map(|m| Signature::new(m).unwrap())
    }

    proptest! {
        #[test]
        fn non_cyclic_reduced_group_dominates(kind in reduced_kind(), a in signature(), b in signature()) {
            if !kind.is_cyclic_or_trivial() {
                prop_assert_eq!(classify_with(kind, &a), classify_with(kind, &b));
            }
        }

        #[test]
        fn possibly_not_implies_even_signature(kind in reduced_kind(), s in signature()) {
            prop_assume!(s.r() >= 3);
            if classify_with(kind, &s) == Classification::PossiblyNotDefinable {
                prop_assert!(s.entries().all(|(_, k)| k % 2 == 0));
                prop_assert_eq!(s.r() % 2, 0);
                prop_assert_eq!(moduli_dimension(0, s.r()).unwrap() % 2, 1);
            }
        }

        #[test]
        fn triangle_signatures_are_definable(kind in reduced_kind(), a in 2u32..40, b in 2u32..40, c in 2u32..40) {
            let s = Signature::from_orders(&[a, b, c]).unwrap();
            prop_assert!(classify_with(kind, &s).is_definable());
        }
    }
}
