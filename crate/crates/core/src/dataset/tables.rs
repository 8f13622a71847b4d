//! The embedded classification tables, genus 3 to 10.
//!
//! Signatures, δ and blue markings are stored as printed. Equations are
//! encoded structurally; sums and products over `i` are expanded.

use num_rational::BigRational;

use crate::exact_poly::QuadExt;
use crate::family::{f1_factor, Coefficient, EquationTemplate, Factor, FamilyRecord, Term};
use crate::groups::{full_group_order, parse_group_label, ReducedGroupKind};

use super::NamedCurve;

type Fs = Vec<Factor>;

enum K {
    Int(i64),
    Q(i64, i64),
    A(u32),
}

fn poly(terms: &[(u32, K)]) -> Fs {
    let terms = terms
        .iter()
        .map(|(e, k)| {
            let c = match k {
                K::Int(v) => Coefficient::int(*v),
                K::Q(p, q) => Coefficient::Fixed(QuadExt::rational(BigRational::new((*p).into(), (*q).into()))),
                K::A(i) => Coefficient::Param(*i),
            };
            Term::new(*e, c)
        })
        .collect();
    vec![Factor::new(terms)]
}

/// `x`
fn x() -> Fs {
    poly(&[(1, K::Int(1))])
}

/// `x^e + c`
fn bin(e: u32, c: i64) -> Fs {
    poly(&[(e, K::Int(1)), (0, K::Int(c))])
}

/// `x^e + a_i x^h + 1`
fn tri(e: u32, h: u32, i: u32) -> Fs {
    poly(&[(e, K::Int(1)), (h, K::A(i)), (0, K::Int(1))])
}

/// `x^top + Σ_{i=1}^{count} a_i x^{step·i} + 1`
fn sum(top: u32, step: u32, count: u32) -> Fs {
    let mut terms = vec![(top, K::Int(1))];
    terms.extend((1..=count).map(|i| (step * i, K::A(i))));
    terms.push((0, K::Int(1)));
    poly(&terms)
}

/// `∏_{i=1}^{count} (x^e + a_i x^h + 1)`
fn prod(count: u32, e: u32, h: u32) -> Fs {
    (1..=count).flat_map(|i| tri(e, h, i)).collect()
}

fn f1() -> Fs {
    vec![f1_factor()]
}

/// `x^4 + 2√-3 x^2 + 1`
fn sqrt3() -> Fs {
    let two_sqrt = QuadExt::new(
        BigRational::from_integer(0.into()),
        BigRational::from_integer(2.into()),
        -3,
    )
    .expect("-3 is square-free");
    vec![Factor::new(vec![
        Term::new(4, Coefficient::int(1)),
        Term::new(2, Coefficient::Fixed(two_sqrt)),
        Term::new(0, Coefficient::int(1)),
    ])]
}

/// `x^8 + 14x^4 + 1`
fn oct() -> Fs {
    poly(&[(8, K::Int(1)), (4, K::Int(14)), (0, K::Int(1))])
}

/// `x^12 - 33x^8 - 33x^4 + 1`
fn cube() -> Fs {
    poly(&[(12, K::Int(1)), (8, K::Int(-33)), (4, K::Int(-33)), (0, K::Int(1))])
}

fn eq(parts: Vec<Fs>) -> EquationTemplate {
    let factors: Vec<Factor> = parts.into_iter().flatten().collect();
    let radicand = factors
        .iter()
        .flat_map(|f| &f.terms)
        .find_map(|t| match &t.coeff {
            Coefficient::Fixed(q) if !q.is_rational() => Some(q.radicand()),
            _ => None,
        })
        .unwrap_or(1);
    EquationTemplate::new(factors, radicand).expect("embedded template is well formed")
}

fn cyc(m: u32) -> ReducedGroupKind {
    if m == 1 {
        ReducedGroupKind::Trivial
    } else {
        ReducedGroupKind::Cyclic { m }
    }
}

fn dih(m: u32) -> ReducedGroupKind {
    ReducedGroupKind::Dihedral { m }
}

const A4: ReducedGroupKind = ReducedGroupKind::TetraA4;
const S4: ReducedGroupKind = ReducedGroupKind::OctaS4;
const A5: ReducedGroupKind = ReducedGroupKind::IcosaA5;

struct Rows {
    genus: u32,
    out: Vec<FamilyRecord>,
}

impl Rows {
    #[allow(clippy::too_many_arguments)]
    fn row(
        &mut self,
        nr: u32,
        blue: bool,
        reduced: ReducedGroupKind,
        n: u32,
        group: &str,
        sig: &str,
        delta: u32,
        parts: Vec<Fs>,
    ) {
        assert_eq!(nr as usize, self.out.len() + 1, "rows are numbered consecutively");
        let group = (!group.is_empty())
            .then(|| parse_group_label(group, Some(full_group_order(n, reduced))).expect("embedded label parses"));
        self.out.push(FamilyRecord {
            genus: self.genus,
            nr,
            n,
            reduced,
            group,
            signature: sig.parse().expect("embedded signature parses"),
            delta,
            template: eq(parts),
            blue,
        });
    }
}

const B: bool = true;
const W: bool = false;

pub(super) fn records() -> Vec<FamilyRecord> {
    let mut all = Vec::with_capacity(224);
    for (genus, fill) in [
        (3, genus3 as fn(&mut Rows)),
        (4, genus4),
        (5, genus5),
        (6, genus6),
        (7, genus7),
        (8, genus8),
        (9, genus9),
        (10, genus10),
    ] {
        let mut rows = Rows { genus, out: Vec::new() };
        fill(&mut rows);
        all.extend(rows.out);
    }
    all
}

fn genus3(t: &mut Rows) {
    t.row(1, B, cyc(1), 2, "C_2", "2^8", 5, vec![x(), sum(6, 1, 5)]);
    t.row(2, B, cyc(2), 2, "V_4", "2^6", 3, vec![sum(8, 2, 3)]);
    t.row(3, W, cyc(2), 2, "C_4", "2^3,4^2", 2, vec![x(), sum(6, 2, 2)]);
    t.row(4, W, cyc(2), 3, "C_6", "2,3^2,6", 1, vec![tri(4, 2, 1)]);
    t.row(5, W, dih(2), 4, "V_4 × C_4", "2^3,4", 1, vec![tri(4, 2, 1)]);
}

fn genus4(t: &mut Rows) {
    use K::*;
    t.row(1, B, cyc(1), 2, "C_2", "2^10", 7, vec![x(), sum(8, 1, 7)]);
    t.row(2, W, cyc(2), 2, "V_4", "2^7", 4, vec![sum(10, 2, 4)]);
    t.row(
        3,
        B,
        cyc(2),
        2,
        "C_4",
        "2^4,4^2",
        3,
        vec![x(), poly(&[(8, Int(1)), (6, A(3)), (4, A(2)), (2, A(1)), (0, Int(1))])],
    );
    t.row(4, W, cyc(3), 2, "C_6", "2^3,3,6", 2, vec![sum(9, 3, 2)]);
    t.row(5, B, cyc(1), 3, "C_3", "3^6", 3, vec![x(), sum(4, 1, 3)]);
    t.row(
        6,
        W,
        cyc(2),
        3,
        "C_2 × C_3",
        "2^2,3^3",
        2,
        vec![poly(&[(6, Int(1)), (4, A(2)), (2, A(1)), (0, Int(1))])],
    );
    t.row(7, W, dih(3), 3, "D_6 × C_3", "2^2,3^2", 1, vec![tri(6, 3, 1)]);
    t.row(
        8,
        W,
        dih(2),
        3,
        "V_4 × C_3",
        "2^2,3,6",
        1,
        vec![bin(2, -1), tri(4, 2, 1)],
    );
    t.row(9, W, dih(2), 3, "V_4 × C_3", "2^2,3,6", 1, vec![x(), tri(4, 2, 1)]);
}

fn genus5(t: &mut Rows) {
    use K::*;
    t.row(1, B, cyc(2), 2, "V_4", "2^8", 5, vec![sum(12, 2, 5)]);
    t.row(2, B, cyc(3), 2, "C_3 × C_2", "2^4,3^2", 3, vec![sum(12, 3, 3)]);
    t.row(
        3,
        W,
        cyc(4),
        2,
        "C_2 × C_4",
        "2^3,4^2",
        2,
        vec![poly(&[(12, Int(1)), (8, A(2)), (4, A(1)), (0, Int(1))])],
    );
    t.row(4, W, cyc(11), 2, "C_22", "2,11,22", 0, vec![bin(11, 1)]);
    t.row(5, W, cyc(2), 11, "C_22", "2,22,22", 0, vec![bin(2, 1)]);
    t.row(6, B, cyc(1), 2, "C_2", "2^12", 9, vec![x(), sum(10, 1, 9)]);
    t.row(7, W, cyc(2), 2, "C_4", "2^5,4^2", 4, vec![x(), sum(10, 2, 4)]);
    t.row(8, W, dih(2), 2, "", "2^6", 3, vec![prod(3, 4, 2)]);
    t.row(9, W, dih(3), 2, "", "2^4,3", 2, vec![prod(2, 6, 3)]);
    t.row(10, W, dih(6), 2, "", "2^3,6", 1, vec![tri(12, 6, 1)]);
    t.row(11, W, dih(4), 2, "", "2^2,4^2", 1, vec![bin(4, -1), tri(8, 4, 1)]);
    t.row(12, W, dih(12), 2, "", "2,4,12", 0, vec![bin(12, -1)]);
    t.row(13, W, dih(5), 2, "", "2^3,10", 1, vec![x(), tri(10, 5, 1)]);
    t.row(14, W, dih(2), 2, "", "2^3,4^2", 2, vec![bin(4, -1), prod(2, 4, 2)]);
    t.row(15, W, dih(3), 2, "", "2,3,4^2", 1, vec![bin(6, -1), tri(6, 3, 1)]);
    t.row(16, W, dih(2), 2, "", "2^3,4^2", 2, vec![x(), bin(2, -1), prod(2, 4, 2)]);
    t.row(17, W, dih(10), 2, "", "2,4,20", 0, vec![x(), bin(10, -1)]);
    t.row(18, W, A4, 2, "", "2^2,3^2", 1, vec![f1()]);
    t.row(19, W, S4, 2, "", "3,4^2", 0, vec![cube()]);
    t.row(
        20,
        W,
        A5,
        2,
        "",
        "2,3,10",
        0,
        vec![x(), poly(&[(10, Int(1)), (5, Int(11)), (0, Int(-1))])],
    );
}

fn genus6(t: &mut Rows) {
    use K::*;
    t.row(1, W, cyc(2), 2, "V_4", "2^9", 6, vec![sum(14, 2, 6)]);
    t.row(2, W, cyc(13), 2, "C_26", "2,13,26", 0, vec![bin(13, 1)]);
    t.row(3, W, cyc(7), 3, "C_21", "3,7,21", 0, vec![bin(7, 1)]);
    t.row(4, W, cyc(5), 4, "C_20", "4,5,20", 0, vec![bin(5, 1)]);
    t.row(5, W, cyc(2), 5, "C_10", "2,5^2,10", 1, vec![tri(4, 2, 1)]);
    t.row(6, W, cyc(4), 5, "C_20", "4,5,20", 0, vec![bin(4, 1)]);
    t.row(7, W, cyc(3), 7, "C_21", "3,7,21", 0, vec![bin(3, 1)]);
    t.row(8, W, cyc(2), 13, "C_26", "2,13,26", 0, vec![bin(2, 1)]);
    t.row(9, B, cyc(1), 2, "C_2", "2^14", 11, vec![x(), sum(12, 1, 11)]);
    t.row(10, B, cyc(2), 2, "C_4", "2^6,4^2", 5, vec![x(), sum(12, 2, 5)]);
    t.row(11, W, cyc(3), 2, "C_6", "2^3,3^2,6^2", 3, vec![x(), sum(12, 3, 3)]);
    t.row(12, W, cyc(4), 2, "C_8", "2^3,8^2", 2, vec![x(), sum(12, 4, 2)]);
    t.row(13, B, cyc(1), 3, "C_3", "3^8", 5, vec![sum(6, 1, 5)]);
    t.row(
        14,
        W,
        cyc(2),
        3,
        "C_6",
        "3^3,6^2",
        2,
        vec![poly(&[(6, Int(1)), (4, A(2)), (2, A(1)), (0, Int(1))])],
    );
    t.row(15, B, cyc(1), 4, "C_4", "4^6", 3, vec![sum(4, 1, 3)]);
    t.row(16, W, cyc(1), 5, "C_5", "5^5", 2, vec![sum(3, 1, 2)]);
    t.row(17, W, dih(7), 2, "D_14 × C_2", "2^3,7", 1, vec![tri(14, 7, 1)]);
    t.row(18, W, dih(2), 2, "G_5", "2^5,4", 3, vec![bin(2, -1), prod(3, 4, 2)]);
    t.row(19, W, dih(14), 2, "G_5", "2,4,14", 0, vec![bin(14, -1)]);
    t.row(20, W, dih(5), 5, "D_10 × C_2", "2,5,10", 0, vec![bin(5, -1)]);
    t.row(21, W, dih(2), 2, "D_8", "2^5,4", 3, vec![x(), prod(3, 4, 2)]);
    t.row(22, W, dih(3), 2, "D_6 × C_2", "2^4,6", 2, vec![x(), prod(2, 4, 2)]);
    t.row(23, W, dih(6), 2, "D_24", "2^3,12", 1, vec![x(), tri(12, 6, 1)]);
    t.row(24, W, dih(3), 3, "D_6 × C_3", "2^2,3,9", 1, vec![x(), tri(6, 3, 1)]);
    t.row(25, W, dih(2), 4, "D_16", "2^2,4,8", 1, vec![x(), tri(4, 2, 1)]);
    t.row(
        26,
        W,
        dih(4),
        2,
        "G_8",
        "2^2,4,8",
        1,
        vec![x(), bin(4, -1), tri(8, 4, 1)],
    );
    t.row(27, W, dih(12), 2, "G_8", "2,4,24", 0, vec![x(), bin(12, -1)]);
    t.row(
        28,
        W,
        dih(2),
        3,
        "V_4 × C_3",
        "2,3,6^2",
        1,
        vec![x(), bin(2, -1), tri(4, 2, 1)],
    );
    t.row(29, W, dih(6), 3, "D_12 × C_3", "2,6,18", 0, vec![x(), bin(6, -1)]);
    t.row(30, W, dih(4), 4, "G_8", "2,8,16", 0, vec![x(), bin(4, -1)]);
    t.row(31, W, dih(3), 5, "D_6 × C_5", "2,10,15", 0, vec![x(), bin(3, -1)]);
    t.row(32, W, dih(2), 7, "V_4 × C_7", "2,14^2", 0, vec![x(), bin(2, -1)]);
    t.row(
        33,
        W,
        dih(2),
        2,
        "G_9",
        "2^2,4^3",
        2,
        vec![x(), bin(4, -1), prod(2, 4, 2)],
    );
    t.row(
        34,
        W,
        dih(3),
        2,
        "G_9",
        "2,4^2,6",
        1,
        vec![x(), bin(6, -1), tri(6, 3, 1)],
    );
    t.row(35, W, S4, 4, "G_18", "2,3,16", 0, vec![x(), bin(4, -1)]);
    t.row(36, W, S4, 2, "G_19", "2,6,8", 0, vec![x(), bin(4, -1), oct()]);
}

fn genus7(t: &mut Rows) {
    use K::*;
    t.row(1, B, cyc(2), 2, "V_4", "2^10", 7, vec![sum(16, 2, 7)]);
    t.row(2, B, cyc(4), 2, "C_2 × C_4", "2^4,4^2", 3, vec![sum(16, 4, 3)]);
    t.row(
        3,
        W,
        cyc(3),
        3,
        "C_3^2",
        "3^5",
        2,
        vec![poly(&[(9, Int(1)), (6, A(2)), (3, A(1)), (0, Int(1))])],
    );
    t.row(4, W, cyc(3), 2, "C_6", "2^5,3,6", 4, vec![sum(15, 3, 4)]);
    t.row(5, W, cyc(5), 2, "C_10", "2^3,5,10", 2, vec![sum(15, 5, 2)]);
    t.row(6, W, cyc(15), 2, "C_30", "2,15,30", 0, vec![bin(15, 1)]);
    t.row(
        7,
        W,
        cyc(2),
        3,
        "C_6",
        "2,3^4,6",
        3,
        vec![poly(&[(8, Int(1)), (6, A(3)), (4, A(2)), (2, A(1)), (0, Int(1))])],
    );
    t.row(8, W, cyc(4), 3, "C_12", "3^2,4,12", 1, vec![tri(8, 4, 1)]);
    t.row(9, W, cyc(8), 3, "C_24", "3,8,24", 0, vec![bin(8, 1)]);
    t.row(10, W, cyc(2), 15, "C_30", "2,15,30", 0, vec![bin(2, 1)]);
    t.row(11, B, cyc(1), 2, "C_2", "2^16", 13, vec![x(), sum(14, 1, 13)]);
    t.row(12, W, cyc(2), 2, "C_4", "2^7,4^2", 6, vec![x(), sum(14, 2, 6)]);
    t.row(13, W, cyc(1), 3, "C_3", "3^9", 6, vec![sum(7, 1, 6)]);
    t.row(14, W, dih(2), 2, "V_4 × C_2", "2^7", 4, vec![prod(4, 4, 2)]);
    t.row(15, W, dih(4), 2, "D_8 × C_2", "2^4,4", 2, vec![prod(2, 8, 4)]);
    t.row(16, W, dih(8), 2, "D_16 × C_2", "2^3,8", 1, vec![tri(16, 8, 1)]);
    t.row(17, W, dih(16), 2, "G_5", "2,4,16", 0, vec![bin(16, -1)]);
    t.row(
        18,
        W,
        dih(3),
        3,
        "D_6 × C_3",
        "2,3^2,6",
        1,
        vec![bin(3, -1), tri(6, 3, 1)],
    );
    t.row(19, W, dih(9), 3, "D_18 × C_3", "2,6,9", 0, vec![bin(9, -1)]);
    t.row(20, W, dih(7), 2, "D_14 × C_2", "2^3,14", 1, vec![x(), tri(14, 7, 1)]);
    t.row(21, W, dih(2), 2, "G_7", "2^4,4^2", 3, vec![bin(4, -1), prod(3, 4, 2)]);
    t.row(22, W, dih(4), 2, "G_7", "2,4^3", 1, vec![bin(8, -1), tri(8, 4, 1)]);
    t.row(
        23,
        W,
        dih(2),
        2,
        "G_8",
        "2^4,4^2",
        3,
        vec![x(), bin(2, -1), prod(3, 4, 2)],
    );
    t.row(24, W, dih(14), 2, "G_8", "2,4,28", 0, vec![x(), bin(14, -1)]);
    t.row(25, W, dih(7), 3, "D_14 × C_3", "2,6,21", 0, vec![x(), bin(7, -1)]);
    t.row(26, W, dih(2), 8, "G_8", "2,16^2", 0, vec![x(), bin(2, -1)]);
    t.row(27, W, A4, 2, "K", "2^2,3,6", 1, vec![sqrt3(), f1()]);
}

fn genus8(t: &mut Rows) {
    t.row(1, W, cyc(2), 2, "V_4", "2^11", 8, vec![sum(18, 2, 8)]);
    t.row(2, B, cyc(3), 2, "C_2 × C_3", "2^6,3^2", 5, vec![sum(18, 3, 5)]);
    t.row(3, W, cyc(6), 2, "C_2 × C_6", "2^3,6^2", 2, vec![sum(18, 6, 2)]);
    t.row(4, W, cyc(17), 2, "C_34", "2,17,34", 0, vec![bin(17, 1)]);
    t.row(5, W, cyc(2), 17, "C_34", "2,17,34", 0, vec![bin(2, 1)]);
    t.row(6, B, cyc(1), 2, "C_2", "2^18", 15, vec![x(), sum(16, 1, 15)]);
    t.row(7, B, cyc(2), 2, "C_4", "2^8,4^2", 7, vec![x(), sum(16, 2, 7)]);
    t.row(8, B, cyc(4), 2, "C_8", "2^4,8^2", 3, vec![x(), sum(16, 4, 3)]);
    t.row(9, W, dih(3), 2, "D_6 × C_2", "2^5,3", 3, vec![prod(3, 6, 3)]);
    t.row(10, W, dih(9), 2, "D_18 × C_2", "2^3,9", 1, vec![tri(18, 9, 1)]);
    t.row(11, W, dih(2), 2, "G_5", "2^6,4", 4, vec![bin(2, -1), prod(4, 4, 2)]);
    t.row(12, W, dih(6), 2, "G_5", "2^2,4,6", 1, vec![bin(6, -1), tri(12, 6, 1)]);
    t.row(13, W, dih(18), 2, "G_5", "2,4,18", 0, vec![bin(18, -1)]);
    t.row(14, W, dih(2), 2, "D_8", "2^6,4", 4, vec![x(), prod(4, 4, 2)]);
    t.row(15, W, dih(4), 2, "D_16", "2^4,8", 2, vec![x(), prod(2, 8, 4)]);
    t.row(16, W, dih(8), 2, "D_32", "2^3,16", 1, vec![x(), tri(16, 8, 1)]);
    t.row(17, W, dih(3), 2, "G_9", "2^2,3,4^2", 2, vec![bin(6, -1), prod(2, 6, 3)]);
    t.row(18, W, dih(16), 2, "G_8", "2,4,32", 0, vec![x(), bin(16, -1)]);
    t.row(19, W, dih(2), 2, "G_9", "2^3,4^3", 3, vec![x(), prod(3, 6, 3)]);
    t.row(
        20,
        W,
        dih(4),
        2,
        "G_9",
        "2,4^2,8",
        1,
        vec![x(), bin(8, -1), tri(8, 4, 1)],
    );
    t.row(21, W, A4, 2, "K", "2,3^2,4", 1, vec![x(), bin(4, -1), f1()]);
    t.row(22, W, S4, 2, "G_22", "3,4,8", 0, vec![x(), bin(4, -1), cube()]);
}

fn genus9(t: &mut Rows) {
    use K::*;
    t.row(1, B, cyc(2), 2, "V_4", "2^12", 9, vec![sum(20, 2, 9)]);
    t.row(2, W, cyc(4), 2, "C_2 × C_4", "2^5,4^2", 4, vec![sum(20, 4, 4)]);
    t.row(3, B, cyc(5), 2, "C_2 × C_5", "2^4,5^2", 3, vec![sum(20, 5, 3)]);
    t.row(4, B, cyc(2), 4, "C_2 × C_4", "2^2,4^4", 3, vec![sum(8, 2, 3)]);
    t.row(5, W, cyc(19), 2, "C_38", "2,19,38", 0, vec![bin(19, 1)]);
    t.row(6, W, cyc(2), 3, "C_6", "2,3^5,6", 4, vec![sum(10, 2, 4)]);
    t.row(7, W, cyc(5), 3, "C_15", "3^2,5,15", 1, vec![tri(10, 5, 1)]);
    t.row(8, W, cyc(10), 3, "C_30", "3,10^2", 0, vec![bin(10, 1)]);
    t.row(9, W, cyc(7), 4, "C_28", "4,7^2", 0, vec![bin(7, 1)]);
    t.row(10, W, cyc(2), 7, "C_14", "2,7^2,14", 1, vec![tri(4, 2, 1)]);
    t.row(11, W, cyc(4), 7, "C_28", "4^2,7", 0, vec![bin(4, 1)]);
    t.row(12, W, cyc(3), 10, "C_30", "3^2,10", 0, vec![bin(3, 1)]);
    t.row(13, W, cyc(2), 19, "C_38", "2^2,19", 0, vec![bin(2, 1)]);
    t.row(14, B, cyc(1), 2, "C_2", "2^20", 17, vec![x(), sum(18, 1, 17)]);
    t.row(15, W, cyc(2), 2, "C_4", "2^9,4^2", 8, vec![x(), sum(18, 2, 8)]);
    t.row(16, B, cyc(3), 2, "C_6", "2^6,6^2", 5, vec![x(), sum(18, 3, 5)]);
    t.row(17, W, cyc(6), 2, "C_12", "2^3,12^2", 2, vec![x(), sum(18, 6, 2)]);
    t.row(18, W, cyc(1), 3, "C_3", "3^11", 8, vec![sum(9, 1, 8)]);
    t.row(
        19,
        W,
        cyc(3),
        3,
        "C_9",
        "3^3,9^2",
        2,
        vec![poly(&[(9, Int(1)), (6, A(2)), (3, A(1)), (0, Int(1))])],
    );
    t.row(20, B, cyc(1), 4, "C_4", "4^8", 5, vec![sum(6, 1, 5)]);
    t.row(
        21,
        W,
        cyc(2),
        4,
        "C_8",
        "4^3,8^2",
        2,
        vec![poly(&[(6, Int(1)), (4, A(2)), (2, A(1)), (0, Int(1))])],
    );
    t.row(22, W, cyc(1), 7, "C_7", "7^5", 2, vec![sum(3, 1, 2)]);
    t.row(23, W, dih(2), 2, "V_4 × C_2", "2^8", 5, vec![prod(5, 4, 2)]);
    t.row(24, W, dih(5), 2, "D_10 × C_2", "2^4,5", 2, vec![prod(2, 10, 5)]);
    t.row(25, W, dih(10), 2, "D_20 × C_2", "2^3,10", 1, vec![tri(20, 10, 1)]);
    t.row(26, W, dih(2), 4, "V_4 × C_4", "2^3,4^2", 2, vec![prod(2, 4, 2)]);
    t.row(27, W, dih(4), 4, "D_8 × C_4", "2^2,4^2", 1, vec![tri(8, 4, 1)]);
    t.row(28, W, dih(4), 2, "G_5", "2^3,4^2", 2, vec![bin(4, -1), prod(2, 8, 4)]);
    t.row(29, W, dih(20), 2, "G_5", "2,4,20", 0, vec![bin(20, -1)]);
    t.row(30, W, dih(8), 4, "G_5", "2,8^2", 0, vec![bin(8, -1)]);
    t.row(31, W, dih(3), 2, "D_6 × C_2", "2^5,6", 3, vec![x(), prod(3, 6, 3)]);
    t.row(32, W, dih(9), 2, "D_18 × C_2", "2^3,18", 1, vec![x(), tri(18, 9, 1)]);
    t.row(33, W, dih(3), 4, "D_6 × C_4", "2^2,4,12", 1, vec![x(), tri(6, 3, 1)]);
    t.row(34, W, dih(2), 2, "G_7", "2^5,4^2", 4, vec![bin(4, -1), prod(4, 4, 2)]);
    t.row(35, W, dih(5), 2, "G_9", "2,4^2,5", 1, vec![bin(10, -1), tri(10, 5, 1)]);
    t.row(36, W, dih(2), 4, "G_7", "2,4,8^2", 1, vec![bin(4, -1), tri(4, 2, 1)]);
    t.row(
        37,
        W,
        dih(2),
        2,
        "G_8",
        "2^5,4^2",
        4,
        vec![x(), bin(2, -1), prod(4, 4, 2)],
    );
    t.row(
        38,
        W,
        dih(6),
        2,
        "G_8",
        "2^2,4,12",
        1,
        vec![x(), bin(6, -1), tri(12, 6, 1)],
    );
    t.row(39, W, dih(18), 2, "G_8", "2,4,36", 0, vec![x(), bin(18, -1)]);
    t.row(
        40,
        W,
        dih(3),
        3,
        "D_6 × C_3",
        "2,3,6,9",
        1,
        vec![x(), bin(3, -1), tri(6, 3, 1)],
    );
    t.row(41, W, dih(9), 3, "D_18 × C_3", "2,6,27", 0, vec![x(), bin(9, -1)]);
    t.row(
        42,
        W,
        dih(2),
        4,
        "G_8",
        "2,4,8^2",
        1,
        vec![x(), bin(2, -1), tri(4, 2, 1)],
    );
    t.row(43, W, dih(6), 4, "G_8", "2,8,24", 0, vec![x(), bin(6, -1)]);
    t.row(44, W, dih(3), 7, "D_6 × C_7", "2,14,21", 0, vec![x(), bin(3, -1)]);
    t.row(45, W, dih(2), 10, "G_8", "2,20^2", 0, vec![x(), bin(2, -1)]);
    t.row(
        46,
        W,
        dih(3),
        2,
        "G_9",
        "2^2,4^2,6",
        2,
        vec![x(), bin(6, -1), prod(2, 6, 3)],
    );
    t.row(47, W, A4, 2, "K", "2^2,6^2", 1, vec![oct(), f1()]);
    t.row(48, W, S4, 4, "G_17", "2,4,12", 0, vec![oct()]);
    t.row(49, W, S4, 2, "G_21", "4^2,6", 0, vec![oct(), cube()]);
    t.row(
        50,
        W,
        A5,
        2,
        "",
        "2,5,6",
        0,
        vec![poly(&[
            (20, Int(1)),
            (15, Int(-228)),
            (10, Int(494)),
            (5, Int(228)),
            (0, Int(1)),
        ])],
    );
}

fn genus10(t: &mut Rows) {
    use K::*;
    t.row(1, W, cyc(2), 2, "V_4", "2^13", 10, vec![sum(22, 2, 10)]);
    t.row(2, B, cyc(2), 3, "C_2 × C_3", "2^2,3^6", 5, vec![sum(12, 2, 5)]);
    t.row(3, B, cyc(3), 3, "C_3^2", "3^6", 3, vec![sum(12, 3, 3)]);
    t.row(4, W, cyc(4), 3, "C_3 × C_4", "3^3,4^2", 2, vec![sum(12, 4, 2)]);
    t.row(5, W, cyc(2), 6, "C_2 × C_6", "2^2,6^3", 2, vec![sum(6, 2, 2)]);
    t.row(6, W, cyc(3), 2, "C_6", "2^7,3,6", 6, vec![sum(21, 3, 6)]);
    t.row(7, W, cyc(7), 2, "C_14", "2^3,7,14", 2, vec![sum(21, 7, 2)]);
    t.row(8, W, cyc(21), 2, "C_42", "2,4,21", 0, vec![bin(21, 1)]);
    t.row(9, W, cyc(11), 3, "C_33", "3,11^2", 0, vec![bin(11, 1)]);
    t.row(
        10,
        W,
        cyc(2),
        5,
        "C_10",
        "2,5^3,10",
        2,
        vec![poly(&[(6, Int(1)), (4, A(2)), (2, A(1)), (0, Int(1))])],
    );
    t.row(11, W, cyc(3), 5, "C_15", "3,5^2,15", 1, vec![tri(6, 3, 1)]);
    t.row(12, W, cyc(6), 5, "C_30", "5,6^2", 0, vec![bin(6, 1)]);
    t.row(13, W, cyc(5), 6, "C_30", "5^2,6", 0, vec![bin(5, 1)]);
    t.row(14, W, cyc(3), 11, "C_33", "3^2,11", 0, vec![bin(3, 1)]);
    t.row(15, W, cyc(2), 21, "C_42", "2,21,42", 0, vec![bin(2, 1)]);
    t.row(16, B, cyc(1), 2, "C_2", "2^22", 19, vec![x(), sum(20, 1, 19)]);
    t.row(17, B, cyc(2), 2, "C_4", "2^10,4^2", 9, vec![x(), sum(20, 2, 9)]);
    t.row(18, W, cyc(4), 2, "C_8", "2^5,8^2", 4, vec![x(), sum(20, 4, 4)]);
    t.row(19, B, cyc(5), 2, "C_10", "2^4,10^2", 3, vec![x(), sum(20, 5, 3)]);
    t.row(20, B, cyc(1), 3, "C_3", "3^12", 9, vec![sum(10, 1, 9)]);
    t.row(21, W, cyc(2), 3, "C_6", "3^5,6^2", 4, vec![sum(10, 2, 4)]);
    t.row(22, W, cyc(1), 5, "C_5", "5^7", 4, vec![sum(5, 1, 4)]);
    t.row(23, B, cyc(1), 6, "C_6", "6^6", 3, vec![sum(4, 1, 3)]);
    t.row(24, W, dih(11), 2, "D_22 × C_2", "2^3,11", 1, vec![tri(22, 11, 1)]);
    t.row(25, W, dih(2), 3, "V_4 × C_3", "2^3,3^3", 3, vec![prod(3, 4, 2)]);
    t.row(26, W, dih(3), 3, "D_6 × C_3", "2^2,3^3", 2, vec![prod(2, 6, 3)]);
    t.row(27, W, dih(6), 3, "D_12 × C_3", "2^2,3,6", 1, vec![tri(12, 6, 1)]);
    t.row(28, W, dih(3), 6, "D_6 × C_6", "2^2,3,6", 1, vec![tri(6, 3, 1)]);
    t.row(29, W, dih(2), 2, "G_5", "2^7,4", 5, vec![bin(2, -1), prod(5, 4, 2)]);
    t.row(30, W, dih(22), 2, "G_5", "2,4,22", 0, vec![bin(22, -1)]);
    t.row(
        31,
        W,
        dih(4),
        3,
        "D_8 × C_3",
        "2,3,4,6",
        1,
        vec![bin(4, -1), tri(8, 4, 1)],
    );
    t.row(32, W, dih(12), 3, "D_24 × C_3", "2,6,12", 0, vec![bin(12, -1)]);
    t.row(33, W, dih(2), 6, "G_5", "2^2,6,12", 1, vec![bin(2, -1), tri(4, 2, 1)]);
    t.row(34, W, dih(6), 6, "G_5", "2,6,12", 0, vec![bin(6, -1)]);
    t.row(35, W, dih(2), 2, "D_8", "2^7,4", 5, vec![x(), prod(5, 4, 2)]);
    t.row(36, W, dih(5), 2, "D_10 × C_2", "2^4,10", 2, vec![x(), prod(2, 10, 5)]);
    t.row(37, W, dih(10), 2, "D_40", "2^3,20", 1, vec![x(), tri(20, 10, 1)]);
    t.row(38, W, dih(5), 3, "D_10 × C_3", "2^2,3,15", 1, vec![x(), tri(10, 5, 1)]);
    t.row(39, W, dih(2), 6, "D_24", "2^2,6,12", 1, vec![x(), tri(4, 2, 1)]);
    t.row(
        40,
        W,
        dih(2),
        3,
        "V_4 × C_3",
        "2,3^2,6^2",
        2,
        vec![bin(2, -1), prod(2, 4, 2)],
    );
    t.row(
        41,
        W,
        dih(3),
        3,
        "D_6 × C_3",
        "3^2,6^2",
        1,
        vec![bin(6, -1), tri(6, 3, 1)],
    );
    t.row(
        42,
        W,
        dih(4),
        2,
        "G_8",
        "2^3,4,8",
        2,
        vec![x(), bin(4, -1), prod(2, 8, 4)],
    );
    t.row(43, W, dih(20), 2, "G_8", "2,4,40", 0, vec![x(), bin(20, -1)]);
    t.row(
        44,
        W,
        dih(2),
        3,
        "V_4 × C_3",
        "2,3^2,6^2",
        2,
        vec![x(), bin(2, -1), prod(2, 4, 2)],
    );
    t.row(45, W, dih(10), 3, "D_20 × C_3", "2,6,30", 0, vec![x(), bin(10, -1)]);
    t.row(46, W, dih(5), 5, "D_10 × C_5", "2,10,25", 0, vec![x(), bin(5, -1)]);
    t.row(47, W, dih(4), 6, "G_8", "2,12,24", 0, vec![x(), bin(4, -1)]);
    t.row(48, W, dih(2), 11, "V_4 × C_11", "2,22^2", 0, vec![x(), bin(2, -1)]);
    t.row(
        49,
        W,
        dih(2),
        2,
        "G_9",
        "2^4,4^3",
        4,
        vec![x(), bin(4, -1), prod(4, 4, 2)],
    );
    t.row(
        50,
        W,
        dih(5),
        2,
        "G_9",
        "2,4^2,10",
        1,
        vec![x(), bin(10, -1), tri(10, 5, 1)],
    );
    t.row(51, W, A4, 3, "", "2,3^3", 1, vec![f1()]);
    t.row(52, W, A4, 2, "", "2,3,4,6", 1, vec![x(), bin(4, -1), sqrt3(), f1()]);
    t.row(53, W, S4, 6, "G_18", "2,3,24", 0, vec![x(), bin(4, -1)]);
    t.row(54, W, S4, 3, "S_4 × C_3", "3,4,6", 0, vec![cube()]);
    t.row(
        55,
        W,
        A5,
        3,
        "A_5 × C_3",
        "2,3,15",
        0,
        vec![x(), poly(&[(10, Int(1)), (5, Int(11)), (0, Int(-1))])],
    );
}

/// Single curves named in the genus 3 and 4 discussion, outside the tables.
pub(super) fn named_curves() -> Vec<NamedCurve> {
    use K::*;
    let named = |genus: u32, n: u32, label: &str, parts: Vec<Fs>| NamedCurve {
        genus,
        n,
        label: label.to_string(),
        template: eq(parts),
    };
    vec![
        named(3, 4, "A_4", vec![poly(&[(4, Int(1)), (2, Int(2)), (0, Q(1, 3))])]),
        named(3, 2, "S_4", vec![poly(&[(8, Int(1)), (4, Int(14)), (0, Int(1))])]),
        named(3, 4, "G_5", vec![bin(4, -1)]),
        named(3, 3, "D_6 × C_3", vec![x(), bin(3, -1)]),
        named(3, 4, "G_8", vec![x(), bin(2, -1)]),
        named(3, 2, "C_14", vec![bin(7, 1)]),
        named(3, 3, "C_12", vec![bin(4, 1)]),
        named(4, 3, "S_4", vec![x(), bin(4, -1)]),
        named(4, 3, "D_12 × C_3", vec![bin(6, -1)]),
        named(4, 5, "D_4 × C_5", vec![x(), bin(2, -1)]),
        named(4, 2, "C_18", vec![bin(9, 1)]),
        named(4, 3, "C_15", vec![bin(5, 1)]),
    ]
}
