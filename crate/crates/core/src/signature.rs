//! Signatures of branched coverings `X → X/G`: Riemann–Hurwitz arithmetic,
//! moduli dimension, the odd-signature test and repair of signatures that
//! fail to balance.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SignatureError {
    #[error("cone order {0} is invalid; cone orders are at least 2")]
    InvalidConeOrder(u32),
    #[error("multiplicity of cone order {0} must be at least 1")]
    ZeroMultiplicity(u32),
    #[error("cannot parse signature {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("inconsistent signature: Riemann–Hurwitz gives quotient genus {quotient_genus}")]
    Inconsistent { quotient_genus: BigRational },
    #[error("moduli dimension 3·{g0} - 3 + {r} is negative")]
    NegativeDimension { g0: u32, r: u32 },
    #[error("curve genus must be at least 2 (got {0})")]
    GenusTooSmall(u32),
    #[error("group order must be at least 1")]
    ZeroOrder,
    #[error("branch data must be nonempty")]
    EmptyBranchData,
    #[error("level must be at least 2 (got {0})")]
    LevelTooSmall(u32),
    #[error("branch datum {d} is outside 1..{n}")]
    BranchDatumOutOfRange { d: u32, n: u32 },
}

/// Multiset of cone orders, kept sorted by cone order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    cones: BTreeMap<u32, u32>,
}

impl Signature {
    pub fn empty() -> Self {
        Signature::default()
    }

    /// Builds a signature from `(cone order, multiplicity)` pairs. Repeated
    /// cone orders are merged.
    pub fn new<I: IntoIterator<Item = (u32, u32)>>(entries: I) -> Result<Self, SignatureError> {
        let mut cones = BTreeMap::new();
        for (c, k) in entries {
            if c < 2 {
                return Err(SignatureError::InvalidConeOrder(c));
            }
            if k == 0 {
                return Err(SignatureError::ZeroMultiplicity(c));
            }
            *cones.entry(c).or_insert(0) += k;
        }
        Ok(Signature { cones })
    }

    /// Builds a signature from a list of cone orders in any order.
    pub fn from_orders(orders: &[u32]) -> Result<Self, SignatureError> {
        Self::new(orders.iter().map(|&c| (c, 1)))
    }

    /// Number of cone points, counted with multiplicity.
    pub fn r(&self) -> u32 {
        self.cones.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.cones.iter().map(|(&c, &k)| (c, k))
    }

    pub fn multiplicity(&self, cone_order: u32) -> u32 {
        self.cones.get(&cone_order).copied().unwrap_or(0)
    }

    /// Cone orders expanded by multiplicity, ascending.
    pub fn orders(&self) -> Vec<u32> {
        self.entries()
            .flat_map(|(c, k)| std::iter::repeat_n(c, k as usize))
            .collect()
    }

    /// `Σ (1 − 1/c)` over all cone points.
    pub fn ramification_sum(&self) -> BigRational {
        self.entries()
            .map(|(c, k)| BigRational::new(BigInt::from(k) * BigInt::from(c - 1), BigInt::from(c)))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    fn with_added(&self, c: u32) -> Signature {
        let mut s = self.clone();
        *s.cones.entry(c).or_insert(0) += 1;
        s
    }

    fn with_removed(&self, c: u32) -> Signature {
        let mut s = self.clone();
        if let Some(k) = s.cones.get_mut(&c) {
            *k -= 1;
            if *k == 0 {
                s.cones.remove(&c);
            }
        }
        s
    }

    /// Rendering with `", "` separators, for human-facing tables.
    pub fn to_compact_string(&self) -> String {
        self.render(", ")
    }

    fn render(&self, sep: &str) -> String {
        self.entries()
            .map(|(c, k)| if k == 1 { c.to_string() } else { format!("{c}^{k}") })
            .collect::<Vec<_>>()
            .join(sep)
    }
}

/// Canonical text form: `2^5,4^2`.
impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(","))
    }
}

impl FromStr for Signature {
    type Err = SignatureError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Ok(Signature::empty());
        }
        let err = |reason: &str| SignatureError::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let mut entries = Vec::new();
        for item in compact.split(',') {
            let (c, k) = match item.split_once('^') {
                Some((c, k)) => (c, k),
                None => (item, "1"),
            };
            let c: u32 = c.parse().map_err(|_| err("cone order is not an integer"))?;
            let k: u32 = k.parse().map_err(|_| err("multiplicity is not an integer"))?;
            entries.push((c, k));
        }
        Signature::new(entries)
    }
}

impl Serialize for Signature {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Signature {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// The exact rational value of `g₀` from
/// `2(g − 1) = 2|G|(g₀ − 1) + |G|·Σ(1 − 1/c)`.
pub fn quotient_genus_rational(genus: u32, order: u64, sig: &Signature) -> BigRational {
    let order = BigInt::from(order);
    let lhs = BigRational::from_integer(BigInt::from(2) * (BigInt::from(genus) - 1));
    let ram = sig.ramification_sum() * BigRational::from_integer(order.clone());
    BigRational::one() + (lhs - ram) / BigRational::from_integer(order * 2)
}

/// Genus of the quotient orbifold `X/G`, solved exactly from Riemann–Hurwitz.
pub fn quotient_genus(genus: u32, order: u64, sig: &Signature) -> Result<u32, SignatureError> {
    if genus < 2 {
        return Err(SignatureError::GenusTooSmall(genus));
    }
    if order == 0 {
        return Err(SignatureError::ZeroOrder);
    }
    let g0 = quotient_genus_rational(genus, order, sig);
    if !g0.is_integer() || g0.is_negative() {
        return Err(SignatureError::Inconsistent { quotient_genus: g0 });
    }
    Ok(g0
        .to_integer()
        .to_u32()
        .expect("quotient genus is bounded by the curve genus"))
}

/// `δ = 3g₀ − 3 + r`, the dimension of the locus of curves with this action.
pub fn moduli_dimension(g0: u32, r: u32) -> Result<u32, SignatureError> {
    (3 * g0 + r)
        .checked_sub(3)
        .ok_or(SignatureError::NegativeDimension { g0, r })
}

/// True iff some cone order appears an odd number of times.
pub fn is_odd_signature(sig: &Signature) -> bool {
    sig.entries().any(|(_, k)| k % 2 == 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepairStatus {
    Consistent,
    Completed,
    Corrected,
    Unrepairable,
}

/// A single-entry edit to a printed signature.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "edit", rename_all = "snake_case")]
pub enum SignatureChange {
    Appended { order: u32 },
    Replaced { from: u32, to: u32 },
}

impl fmt::Display for SignatureChange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignatureChange::Appended { order } => write!(f, "appended cone order {order}"),
            SignatureChange::Replaced { from, to } => {
                write!(f, "replaced cone order {from} by {to}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepairCandidate {
    pub change: SignatureChange,
    pub signature: Signature,
}

/// Result of checking a printed signature against Riemann–Hurwitz with a
/// genus-zero quotient, and of the single-entry repair search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepairOutcome {
    pub status: RepairStatus,
    pub printed: Signature,
    pub repaired: Option<Signature>,
    pub change: Option<SignatureChange>,
    /// Every single-entry fix found, preferred one first.
    pub candidates: Vec<RepairCandidate>,
}

impl RepairOutcome {
    /// The signature downstream checks should use, if there is one.
    pub fn effective(&self) -> Option<&Signature> {
        match self.status {
            RepairStatus::Consistent => Some(&self.printed),
            RepairStatus::Completed | RepairStatus::Corrected => self.repaired.as_ref(),
            RepairStatus::Unrepairable => None,
        }
    }

    pub fn is_ambiguous(&self) -> bool {
        self.candidates.len() > 1
    }

    pub fn is_erratum(&self) -> bool {
        self.status != RepairStatus::Consistent
    }
}

fn balances(genus: u32, order: u64, sig: &Signature) -> bool {
    quotient_genus_rational(genus, order, sig).is_zero()
}

fn divisor_cone_orders(order: u64) -> Vec<u32> {
    (2..=order)
        .filter(|c| order.is_multiple_of(*c))
        .filter_map(|c| u32::try_from(c).ok())
        .collect()
}

/// Checks that `partial` yields a genus-zero quotient and otherwise searches
/// for a single-entry fix: first appending one cone order, then replacing one
/// printed entry. Candidate cone orders are the divisors of `order`.
pub fn complete_signature(genus: u32, order: u64, partial: &Signature) -> RepairOutcome {
    let mut outcome = RepairOutcome {
        status: RepairStatus::Unrepairable,
        printed: partial.clone(),
        repaired: None,
        change: None,
        candidates: Vec::new(),
    };
    if genus < 2 || order == 0 {
        return outcome;
    }
    if balances(genus, order, partial) {
        outcome.status = RepairStatus::Consistent;
        return outcome;
    }
    let divisors = divisor_cone_orders(order);

    let appended: Vec<RepairCandidate> = divisors
        .iter()
        .map(|&c| RepairCandidate {
            change: SignatureChange::Appended { order: c },
            signature: partial.with_added(c),
        })
        .filter(|cand| balances(genus, order, &cand.signature))
        .collect();
    if !appended.is_empty() {
        outcome.status = RepairStatus::Completed;
        outcome.candidates = appended;
    } else {
        let mut replaced = Vec::new();
        // Largest printed order first, so the preferred candidate leads.
        for (from, _) in partial.entries().collect::<Vec<_>>().into_iter().rev() {
            let reduced = partial.with_removed(from);
            for &to in divisors.iter().filter(|&&to| to != from) {
                let sig = reduced.with_added(to);
                if balances(genus, order, &sig) {
                    replaced.push(RepairCandidate {
                        change: SignatureChange::Replaced { from, to },
                        signature: sig,
                    });
                }
            }
        }
        if replaced.is_empty() {
            return outcome;
        }
        outcome.status = RepairStatus::Corrected;
        outcome.candidates = replaced;
    }
    let preferred = &outcome.candidates[0];
    outcome.repaired = Some(preferred.signature.clone());
    outcome.change = Some(preferred.change);
    outcome
}

/// Whether `d` is valid branch data for a `C_n` covering of the sphere with
/// every cone point of full order `n`: each `dᵢ` is a unit mod `n` and
/// `Σ dᵢ ≡ 0 (mod n)`.
pub fn cyclic_branch_data_valid(n: u32, d: &[u32]) -> Result<bool, SignatureError> {
    if n < 2 {
        return Err(SignatureError::LevelTooSmall(n));
    }
    if d.is_empty() {
        return Err(SignatureError::EmptyBranchData);
    }
    if let Some(&bad) = d.iter().find(|&&x| x == 0 || x >= n) {
        return Err(SignatureError::BranchDatumOutOfRange { d: bad, n });
    }
    let units = d.iter().all(|&x| x.gcd(&n) == 1);
    let sum: u64 = d.iter().map(|&x| u64::from(x)).sum();
    Ok(units && sum.is_multiple_of(u64::from(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    #[test]
    fn quotient_genus_examples() {
        assert_eq!(quotient_genus(5, 4, &sig("2^8")), Ok(0));
        assert_eq!(quotient_genus(5, 24, &sig("2^2,3^2")), Ok(0));
        assert_eq!(quotient_genus(2, 1, &Signature::empty()), Ok(2));
    }

    #[test]
    fn quotient_genus_reports_rational_residue() {
        match quotient_genus(5, 22, &sig("2,22,22")) {
            Err(SignatureError::Inconsistent { quotient_genus }) => {
                assert_eq!(quotient_genus, BigRational::new((-1).into(), 44.into()));
            }
            other => panic!("expected inconsistency, got {other:?}"),
        }
        assert_eq!(quotient_genus(1, 4, &sig("2^4")), Err(SignatureError::GenusTooSmall(1)));
    }

    #[test]
    fn moduli_dimension_examples() {
        assert_eq!(moduli_dimension(0, 8), Ok(5));
        assert_eq!(moduli_dimension(0, 3), Ok(0));
        assert_eq!(moduli_dimension(1, 0), Ok(0));
        assert_eq!(
            moduli_dimension(0, 2),
            Err(SignatureError::NegativeDimension { g0: 0, r: 2 })
        );
    }

    #[test]
    fn odd_signature_examples() {
        assert!(is_odd_signature(&sig("2^5,4^2")));
        assert!(!is_odd_signature(&sig("2^8")));
        assert!(is_odd_signature(&sig("2,11,22")));
    }

    #[test]
    fn completion_examples() {
        let out = complete_signature(9, 30, &sig("3,10^2"));
        assert_eq!(out.status, RepairStatus::Corrected);
        assert_eq!(out.repaired, Some(sig("3,10,30")));
        assert_eq!(out.change, Some(SignatureChange::Replaced { from: 10, to: 30 }));

        let out = complete_signature(10, 42, &sig("2,4,21"));
        assert_eq!(out.status, RepairStatus::Corrected);
        assert_eq!(out.repaired, Some(sig("2,21,42")));

        let out = complete_signature(5, 4, &sig("2^8"));
        assert_eq!(out.status, RepairStatus::Consistent);
        assert_eq!(out.effective(), Some(&sig("2^8")));
    }

    #[test]
    fn truncated_signature_is_completed() {
        // 2^8 over V_4 with the last cone point dropped.
        let out = complete_signature(5, 4, &sig("2^7"));
        assert_eq!(out.status, RepairStatus::Completed);
        assert_eq!(out.change, Some(SignatureChange::Appended { order: 2 }));
        assert_eq!(out.repaired, Some(sig("2^8")));
    }

    #[test]
    fn ambiguous_correction_reports_all_candidates() {
        let out = complete_signature(9, 28, &sig("4,7^2"));
        assert_eq!(out.status, RepairStatus::Corrected);
        assert!(out.is_ambiguous());
        assert_eq!(out.repaired, Some(sig("4,7,28")));
        let all: Vec<_> = out.candidates.iter().map(|c| c.signature.clone()).collect();
        assert_eq!(all, vec![sig("4,7,28"), sig("7^3")]);
    }

    #[test]
    fn hopeless_signature_is_unrepairable() {
        let out = complete_signature(6, 6, &sig("2^3,3^2,6^2"));
        assert_eq!(out.status, RepairStatus::Unrepairable);
        assert_eq!(out.effective(), None);
    }

    #[test]
    fn branch_data_examples() {
        assert_eq!(cyclic_branch_data_valid(2, &[1; 12]), Ok(true));
        assert_eq!(cyclic_branch_data_valid(4, &[2, 1, 1]), Ok(false));
        assert_eq!(cyclic_branch_data_valid(3, &[1, 1, 1]), Ok(true));
        assert_eq!(cyclic_branch_data_valid(3, &[]), Err(SignatureError::EmptyBranchData));
        assert_eq!(
            cyclic_branch_data_valid(3, &[3]),
            Err(SignatureError::BranchDatumOutOfRange { d: 3, n: 3 })
        );
    }

    #[test]
    fn text_form() {
        assert_eq!(sig("2, 5, 5, 10").to_string(), "2,5^2,10");
        assert_eq!(sig("2^5, 4^2").to_compact_string(), "2^5, 4^2");
        assert_eq!(sig("").r(), 0);
        assert!(matches!(
            "1,2".parse::<Signature>(),
            Err(SignatureError::InvalidConeOrder(1))
        ));
        assert!(matches!(
            "2^0".parse::<Signature>(),
            Err(SignatureError::ZeroMultiplicity(2))
        ));
        assert!(matches!("2,x".parse::<Signature>(), Err(SignatureError::Parse { .. })));
    }

    fn any_signature() -> impl Strategy<Value = Signature> {
        prop::collection::btree_map(2u32..40, 1u32..6, 0..5).prop_map(|m| Signature::new(m).unwrap())
    }

    proptest! {
        #[test]
        fn text_round_trip(s in any_signature()) {
            let text = s.to_string();
            let back: Signature = text.parse().unwrap();
            prop_assert_eq!(&back, &s);
            prop_assert_eq!(back.to_string(), text);
        }

        #[test]
        fn even_signatures_have_even_length(s in any_signature()) {
            if !is_odd_signature(&s) {
                prop_assert_eq!(s.r() % 2, 0);
            }
        }

        #[test]
        fn genus_zero_dimension_is_r_minus_three(s in any_signature()) {
            prop_assume!(s.r() >= 3);
            prop_assert_eq!(moduli_dimension(0, s.r()).unwrap(), s.r() - 3);
        }

        #[test]
        fn completion_is_idempotent(genus in 2u32..12, order in 1u64..64, s in any_signature()) {
            let out = complete_signature(genus, order, &s);
            if let Some(fixed) = out.repaired.as_ref() {
                prop_assert!(balances(genus, order, fixed));
                prop_assert_eq!(complete_signature(genus, order, fixed).status, RepairStatus::Consistent);
            }
        }

        #[test]
        fn branch_validity_ignores_order(n in 2u32..12, raw in prop::collection::vec(1u32..100, 1..8), seed in any::<u64>()) {
            let d: Vec<u32> = raw.iter().map(|x| 1 + x % (n - 1)).collect();
            let mut shuffled = d.clone();
            // deterministic rotation plus reversal
            let k = (seed as usize) % shuffled.len();
            shuffled.rotate_left(k);
            shuffled.reverse();
            prop_assert_eq!(
                cyclic_branch_data_valid(n, &d).unwrap(),
                cyclic_branch_data_valid(n, &shuffled).unwrap()
            );
        }
    }
}
