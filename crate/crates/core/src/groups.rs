//! Reduced automorphism groups (finite subgroups of PGL₂) and the printed
//! names of full automorphism groups.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Isomorphism class of the reduced group `Ḡ = G/H`.
///
/// `Dihedral { m }` stores the half-order; the group has order `2m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReducedGroupKind {
    Trivial,
    Cyclic {
        m: u32,
    },
    Dihedral {
        m: u32,
    },
    #[serde(rename = "a4")]
    TetraA4,
    #[serde(rename = "s4")]
    OctaS4,
    #[serde(rename = "a5")]
    IcosaA5,
}

impl ReducedGroupKind {
    pub fn order(self) -> u64 {
        match self {
            ReducedGroupKind::Trivial => 1,
            ReducedGroupKind::Cyclic { m } => u64::from(m),
            ReducedGroupKind::Dihedral { m } => 2 * u64::from(m),
            ReducedGroupKind::TetraA4 => 12,
            ReducedGroupKind::OctaS4 => 24,
            ReducedGroupKind::IcosaA5 => 60,
        }
    }

    pub fn is_cyclic_or_trivial(self) -> bool {
        matches!(self, ReducedGroupKind::Trivial | ReducedGroupKind::Cyclic { .. })
    }

    /// The `m` column value for cyclic and dihedral kinds, 1 for trivial.
    pub fn m(self) -> Option<u32> {
        match self {
            ReducedGroupKind::Trivial => Some(1),
            ReducedGroupKind::Cyclic { m } | ReducedGroupKind::Dihedral { m } => Some(m),
            _ => None,
        }
    }

    /// Name of the table block the kind belongs to.
    pub fn block(self) -> &'static str {
        match self {
            ReducedGroupKind::Trivial | ReducedGroupKind::Cyclic { .. } => "C_m",
            ReducedGroupKind::Dihedral { .. } => "D_2m",
            ReducedGroupKind::TetraA4 => "A_4",
            ReducedGroupKind::OctaS4 => "S_4",
            ReducedGroupKind::IcosaA5 => "A_5",
        }
    }
}

pub fn reduced_order(kind: ReducedGroupKind) -> u64 {
    kind.order()
}

pub fn is_cyclic_or_trivial(kind: ReducedGroupKind) -> bool {
    kind.is_cyclic_or_trivial()
}

/// `|G| = n·|Ḡ|`.
pub fn full_group_order(n: u32, kind: ReducedGroupKind) -> u64 {
    u64::from(n) * kind.order()
}

impl fmt::Display for ReducedGroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReducedGroupKind::Trivial => f.write_str("{1}"),
            ReducedGroupKind::Cyclic { m } => write!(f, "C_{m}"),
            ReducedGroupKind::Dihedral { m } if *m == 2 => f.write_str("V_4"),
            ReducedGroupKind::Dihedral { m } => write!(f, "D_{}", 2 * m),
            ReducedGroupKind::TetraA4 => f.write_str("A_4"),
            ReducedGroupKind::OctaS4 => f.write_str("S_4"),
            ReducedGroupKind::IcosaA5 => f.write_str("A_5"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupLabelError {
    #[error("group label is empty")]
    Empty,
    #[error("malformed group label {text:?}: {reason}")]
    Malformed { text: String, reason: String },
    #[error("group label {0:?} names an extension group whose order needs row context")]
    UnresolvedOpaque(String),
}

/// A printed full-group name together with its order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupLabel {
    pub text: String,
    pub order: u64,
    /// False when the order came from row context instead of the label.
    pub recognized: bool,
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

fn normalize(text: &str) -> String {
    let spaced = text.replace("\\times", " × ").replace(['×', '*'], " × ");
    spaced.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn factorial(k: u64) -> Option<u64> {
    (1..=k).try_fold(1u64, |acc, i| acc.checked_mul(i))
}

/// Order of one atom such as `C_3`, `D_{12}`, `V_4`, `C_3^2`; `None` for
/// opaque extension groups.
fn atom_order(atom: &str, text: &str) -> Result<Option<u64>, GroupLabelError> {
    let malformed = |reason: &str| GroupLabelError::Malformed {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    if atom == "K" {
        return Ok(None);
    }
    let (base, power) = match atom.rsplit_once('^') {
        Some((b, p)) if !b.ends_with('_') => {
            let p = p.trim_matches(|c| c == '{' || c == '}');
            (b, p.parse::<u32>().map_err(|_| malformed("bad exponent"))?)
        }
        _ => (atom, 1),
    };
    let (letter, index) = base
        .split_once('_')
        .ok_or_else(|| malformed("expected a subscripted atom such as C_3"))?;
    let index = index.trim_matches(|c| c == '{' || c == '}');
    let k: u64 = index.parse().map_err(|_| malformed("subscript is not an integer"))?;
    let order = match letter {
        "C" | "D" if k >= 1 => k,
        "V" if k == 4 => 4,
        "A" if k >= 2 => factorial(k).ok_or_else(|| malformed("order overflow"))? / 2,
        "S" if k >= 1 => factorial(k).ok_or_else(|| malformed("order overflow"))?,
        "G" => return Ok(None),
        _ => return Err(malformed("unknown group symbol")),
    };
    order
        .checked_pow(power)
        .map(Some)
        .ok_or_else(|| malformed("order overflow"))
}

/// Parses a printed group name. Products of recognized atoms get their order
/// from the factors; labels containing an opaque atom (`G_k`, `K`) take the
/// order supplied by the row.
pub fn parse_group_label(text: &str, context_order: Option<u64>) -> Result<GroupLabel, GroupLabelError> {
    let text = normalize(text);
    if text.is_empty() {
        return Err(GroupLabelError::Empty);
    }
    let mut order = Some(1u64);
    for atom in text.split(" × ") {
        let atom: String = atom.chars().filter(|c| !c.is_whitespace()).collect();
        if atom.is_empty() {
            return Err(GroupLabelError::Malformed {
                text: text.clone(),
                reason: "empty factor".into(),
            });
        }
        order = match (order, atom_order(&atom, &text)?) {
            (Some(a), Some(b)) => Some(a.checked_mul(b).ok_or_else(|| GroupLabelError::Malformed {
                text: text.clone(),
                reason: "order overflow".into(),
            })?),
            _ => None,
        };
    }
    match (order, context_order) {
        (Some(order), _) => Ok(GroupLabel {
            text,
            order,
            recognized: true,
        }),
        (None, Some(order)) => Ok(GroupLabel {
            text,
            order,
            recognized: false,
        }),
        (None, None) => Err(GroupLabelError::UnresolvedOpaque(text)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ReducedGroupKind::*;

    #[test]
    fn reduced_orders() {
        assert_eq!(reduced_order(Dihedral { m: 3 }), 6);
        assert_eq!(reduced_order(IcosaA5), 60);
        assert_eq!(reduced_order(Cyclic { m: 13 }), 13);
        assert_eq!(reduced_order(Trivial), 1);
    }

    #[test]
    fn cyclic_or_trivial() {
        assert!(is_cyclic_or_trivial(Trivial));
        assert!(is_cyclic_or_trivial(Cyclic { m: 4 }));
        assert!(!is_cyclic_or_trivial(Dihedral { m: 7 }));
        assert!(!is_cyclic_or_trivial(OctaS4));
    }

    #[test]
    fn full_orders() {
        assert_eq!(full_group_order(3, IcosaA5), 180);
        assert_eq!(full_group_order(2, Dihedral { m: 12 }), 48);
        assert_eq!(full_group_order(2, Trivial), 2);
    }

    #[test]
    fn labels() {
        assert_eq!(parse_group_label("D_6 × C_3", None).unwrap().order, 18);
        assert_eq!(parse_group_label("V_4", None).unwrap().order, 4);
        let g8 = parse_group_label("G_8", Some(full_group_order(2, Dihedral { m: 12 }))).unwrap();
        assert_eq!((g8.order, g8.recognized), (48, false));
        assert_eq!(parse_group_label("D_{14}\\times C_2", None).unwrap().order, 28);
        assert_eq!(parse_group_label("C_3^2", None).unwrap().order, 9);
        assert_eq!(parse_group_label("A_5 × C_3", None).unwrap().order, 180);
        assert!(matches!(
            parse_group_label("S_4 x C_2", None),
            Err(GroupLabelError::Malformed { .. })
        ));
    }

    #[test]
    fn label_errors() {
        assert_eq!(parse_group_label("  ", None), Err(GroupLabelError::Empty));
        assert_eq!(
            parse_group_label("K", None),
            Err(GroupLabelError::UnresolvedOpaque("K".into()))
        );
        assert!(matches!(
            parse_group_label("Q_8", None),
            Err(GroupLabelError::Malformed { .. })
        ));
        assert!(matches!(
            parse_group_label("C_x", None),
            Err(GroupLabelError::Malformed { .. })
        ));
        assert!(matches!(
            parse_group_label("C_2 ×", None),
            Err(GroupLabelError::Malformed { .. })
        ));
    }

    #[test]
    fn label_text_round_trips_modulo_whitespace() {
        for text in ["D_6 × C_3", "V_4×C_4", "  G_18 ", "C_2 ×   C_5"] {
            let label = parse_group_label(text, Some(1)).unwrap();
            let again = parse_group_label(&label.to_string(), Some(1)).unwrap();
            assert_eq!(again, label);
            let squash = |s: &str| s.chars().filter(|c| !c.is_whitespace()).collect::<String>();
            assert_eq!(squash(&label.text), squash(text));
        }
    }

    #[test]
    fn display() {
        assert_eq!(Trivial.to_string(), "{1}");
        assert_eq!(Cyclic { m: 5 }.to_string(), "C_5");
        assert_eq!(Dihedral { m: 2 }.to_string(), "V_4");
        assert_eq!(Dihedral { m: 7 }.to_string(), "D_14");
    }
}
