//! Superelliptic family records `yⁿ = f(x)`: structural equation templates
//! and the quantities derived from them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact_poly::{is_separable, ArithmeticError, Poly, QuadExt};
use crate::groups::{GroupLabel, ReducedGroupKind};
use crate::signature::Signature;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("equation template has no factors")]
    EmptyTemplate,
    #[error("factor {0} has no terms")]
    EmptyFactor(usize),
    #[error("factor {factor} repeats exponent {exponent}")]
    RepeatedExponent { factor: usize, exponent: u32 },
    #[error("zero coefficient at exponent {exponent} of factor {factor}")]
    ZeroCoefficient { factor: usize, exponent: u32 },
    #[error("parameter index 0 is invalid; parameters are numbered from 1")]
    ParameterIndexZero,
    #[error("parameter indices must be 1..{count}, found {found:?}")]
    NonContiguousParameters { count: usize, found: Vec<u32> },
    #[error("fixed coefficient {coeff} does not lie in Q(sqrt({radicand}))")]
    RadicandMismatch { coeff: String, radicand: i64 },
    #[error("no value supplied for parameter a_{0}")]
    MissingParameter(u32),
    #[error("level {n} and degree {degree}: n does not divide the degree and they are not coprime, so the branch structure is not superelliptic")]
    NonSuperellipticBranching { n: u32, degree: u32 },
    #[error("level must be at least 2 (got {0})")]
    LevelTooSmall(u32),
    #[error("branch count must be at least 3 (got {0})")]
    TooFewBranchPoints(u32),
    #[error("(n - 1)(B - 2) = {0} is odd, so the genus is not an integer")]
    NonIntegralGenus(u32),
    #[error("genus {0} is below 2")]
    GenusBelowTwo(u32),
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
}

/// Coefficient of one monomial of a factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coefficient {
    Fixed(QuadExt),
    Param(u32),
    /// `factor · a_param`, e.g. `-a_1` or `2a_1`.
    Scaled {
        factor: BigRational,
        param: u32,
    },
}

impl Coefficient {
    pub fn int(v: i64) -> Self {
        Coefficient::Fixed(QuadExt::from_integer(v))
    }

    pub fn param(&self) -> Option<u32> {
        match self {
            Coefficient::Fixed(_) => None,
            Coefficient::Param(i) | Coefficient::Scaled { param: i, .. } => Some(*i),
        }
    }

    fn value(&self, values: &BTreeMap<u32, BigRational>) -> Result<QuadExt, FamilyError> {
        match self {
            Coefficient::Fixed(q) => Ok(q.clone()),
            Coefficient::Param(i) => values
                .get(i)
                .map(|v| QuadExt::rational(v.clone()))
                .ok_or(FamilyError::MissingParameter(*i)),
            Coefficient::Scaled { factor, param } => values
                .get(param)
                .map(|v| QuadExt::rational(v * factor))
                .ok_or(FamilyError::MissingParameter(*param)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub exponent: u32,
    pub coeff: Coefficient,
}

impl Term {
    pub fn new(exponent: u32, coeff: Coefficient) -> Self {
        Term { exponent, coeff }
    }
}

/// One factor of `f(x)`, terms kept in printed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub terms: Vec<Term>,
}

impl Factor {
    pub fn new(terms: Vec<Term>) -> Self {
        Factor { terms }
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.exponent).max().unwrap_or(0)
    }

    fn is_monomial(&self) -> bool {
        matches!(self.terms.as_slice(), [t] if t.coeff == Coefficient::int(1))
    }

    fn to_poly(&self, values: &BTreeMap<u32, BigRational>) -> Result<Poly, FamilyError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push((t.exponent, t.coeff.value(values)?));
        }
        Ok(Poly::from_terms(terms))
    }
}

/// The sextic-invariant factor
/// `x¹² − a₁x¹⁰ − 33x⁸ + 2a₁x⁶ − 33x⁴ − a₁x² + 1` shared by the tetrahedral rows.
pub fn f1_factor() -> Factor {
    let scaled = |k: i64| Coefficient::Scaled {
        factor: BigRational::from_integer(k.into()),
        param: 1,
    };
    Factor::new(vec![
        Term::new(12, Coefficient::int(1)),
        Term::new(10, scaled(-1)),
        Term::new(8, Coefficient::int(-33)),
        Term::new(6, scaled(2)),
        Term::new(4, Coefficient::int(-33)),
        Term::new(2, scaled(-1)),
        Term::new(0, Coefficient::int(1)),
    ])
}

/// Structural form of `f(x)` in `yⁿ = f(x)`. Fixed coefficients live in
/// `ℚ(√radicand)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "repr::TemplateRepr", into = "repr::TemplateRepr")]
pub struct EquationTemplate {
    factors: Vec<Factor>,
    radicand: i64,
}

impl EquationTemplate {
    pub fn new(factors: Vec<Factor>, radicand: i64) -> Result<Self, FamilyError> {
        if factors.is_empty() {
            return Err(FamilyError::EmptyTemplate);
        }
        let mut params = BTreeSet::new();
        for (fi, factor) in factors.iter().enumerate() {
            if factor.terms.is_empty() {
                return Err(FamilyError::EmptyFactor(fi));
            }
            let mut seen = BTreeSet::new();
            for t in &factor.terms {
                if !seen.insert(t.exponent) {
                    return Err(FamilyError::RepeatedExponent {
                        factor: fi,
                        exponent: t.exponent,
                    });
                }
                match &t.coeff {
                    Coefficient::Fixed(q) => {
                        if q.is_zero() {
                            return Err(FamilyError::ZeroCoefficient {
                                factor: fi,
                                exponent: t.exponent,
                            });
                        }
                        if !q.is_rational() && q.radicand() != radicand {
                            return Err(FamilyError::RadicandMismatch {
                                coeff: q.to_string(),
                                radicand,
                            });
                        }
                    }
                    Coefficient::Scaled { factor, .. } if factor.is_zero() => {
                        return Err(FamilyError::ZeroCoefficient {
                            factor: fi,
                            exponent: t.exponent,
                        });
                    }
                    _ => {}
                }
                if let Some(i) = t.coeff.param() {
                    if i == 0 {
                        return Err(FamilyError::ParameterIndexZero);
                    }
                    params.insert(i);
                }
            }
        }
        let found: Vec<u32> = params.into_iter().collect();
        if found.iter().enumerate().any(|(k, &i)| i as usize != k + 1) {
            return Err(FamilyError::NonContiguousParameters {
                count: found.len(),
                found,
            });
        }
        Ok(EquationTemplate { factors, radicand })
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn radicand(&self) -> i64 {
        self.radicand
    }
}

fn render_coeff_prefix(c: &Coefficient, first: bool, out: &mut String, is_constant: bool) {
    // Splits a coefficient into a sign and a magnitude printed before x^e.
    let (negative, body) = match c {
        Coefficient::Param(i) => (false, format!("a_{i}")),
        Coefficient::Scaled { factor, param } => {
            let mag = factor.abs();
            let body = if mag.is_one() {
                format!("a_{param}")
            } else {
                format!("{mag}a_{param}")
            };
            (factor.is_negative(), body)
        }
        Coefficient::Fixed(q) if q.is_rational() => {
            let a = q.rational_part();
            let mag = a.abs();
            let body = if mag.is_one() && !is_constant {
                String::new()
            } else {
                mag.to_string()
            };
            (a.is_negative(), body)
        }
        Coefficient::Fixed(q) if q.rational_part().is_zero() => {
            let b = q.irrational_part();
            let mag = b.abs();
            let coef = if mag.is_one() { String::new() } else { mag.to_string() };
            (b.is_negative(), format!("{coef}√{}", q.radicand()))
        }
        Coefficient::Fixed(q) => (false, format!("({q})")),
    };
    match (first, negative) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    out.push_str(&body);
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, t) in self.terms.iter().enumerate() {
            render_coeff_prefix(&t.coeff, k == 0, &mut out, t.exponent == 0);
            match t.exponent {
                0 => {}
                1 => out.push('x'),
                e => out.push_str(&format!("x^{e}")),
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Display for EquationTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [only] = self.factors.as_slice() {
            return if *only == f1_factor() {
                f.write_str("f_1(x)")
            } else {
                write!(f, "{only}")
            };
        }
        let f1 = f1_factor();
        for factor in &self.factors {
            if *factor == f1 {
                f.write_str("f_1(x)")?;
            } else if factor.is_monomial() {
                write!(f, "{factor}")?;
            } else {
                write!(f, "({factor})")?;
            }
        }
        Ok(())
    }
}

/// One table row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub genus: u32,
    pub nr: u32,
    /// Level: the order of the superelliptic automorphism.
    pub n: u32,
    pub reduced: ReducedGroupKind,
    /// Printed full-group name, absent where the table leaves the cell empty.
    pub group: Option<GroupLabel>,
    /// Signature exactly as printed.
    pub signature: Signature,
    pub delta: u32,
    pub template: EquationTemplate,
    /// Printed marking of rows whose field of moduli is not known to be a
    /// field of definition. Kept for comparison only.
    pub blue: bool,
}

impl FamilyRecord {
    pub fn m(&self) -> Option<u32> {
        self.reduced.m()
    }

    /// `|G| = n·|Ḡ|`.
    pub fn group_order(&self) -> u64 {
        crate::groups::full_group_order(self.n, self.reduced)
    }

    pub fn id(&self) -> (u32, u32) {
        (self.genus, self.nr)
    }
}

pub fn template_degree(t: &EquationTemplate) -> Result<u32, FamilyError> {
    if t.factors.is_empty() {
        return Err(FamilyError::EmptyTemplate);
    }
    Ok(t.factors.iter().map(Factor::degree).sum())
}

pub fn parameter_count(t: &EquationTemplate) -> u32 {
    let params: BTreeSet<u32> = t
        .factors
        .iter()
        .flat_map(|f| f.terms.iter().filter_map(|t| t.coeff.param()))
        .collect();
    params.len() as u32
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Number of branch points of `x` on the curve, counting infinity when
/// `n ∤ deg f`.
pub fn branch_count(n: u32, t: &EquationTemplate) -> Result<u32, FamilyError> {
    if n < 2 {
        return Err(FamilyError::LevelTooSmall(n));
    }
    let degree = template_degree(t)?;
    if degree % n == 0 {
        Ok(degree)
    } else if gcd(n, degree) == 1 {
        Ok(degree + 1)
    } else {
        Err(FamilyError::NonSuperellipticBranching { n, degree })
    }
}

/// `g = (n − 1)(B − 2)/2`.
pub fn superelliptic_genus(n: u32, b: u32) -> Result<u32, FamilyError> {
    if n < 2 {
        return Err(FamilyError::LevelTooSmall(n));
    }
    if b < 3 {
        return Err(FamilyError::TooFewBranchPoints(b));
    }
    let twice = (n - 1) * (b - 2);
    if twice % 2 == 1 {
        return Err(FamilyError::NonIntegralGenus(twice));
    }
    let g = twice / 2;
    if g < 2 {
        return Err(FamilyError::GenusBelowTwo(g));
    }
    Ok(g)
}

pub fn genus_of_family(rec: &FamilyRecord) -> Result<u32, FamilyError> {
    superelliptic_genus(rec.n, branch_count(rec.n, &rec.template)?)
}

/// All `(n, B)` with `n ≥ 2`, `B ≥ 3` and `(n − 1)(B − 2) = 2g`.
pub fn enumerate_levels(g: u32) -> BTreeSet<(u32, u32)> {
    let two_g = 2 * g;
    (1..=two_g)
        .filter(|d| two_g.is_multiple_of(*d))
        .map(|d| (d + 1, two_g / d + 2))
        .collect()
}

/// Expands the template into a polynomial with the given parameter values.
pub fn instantiate(t: &EquationTemplate, values: &BTreeMap<u32, BigRational>) -> Result<Poly, FamilyError> {
    let mut product = Poly::constant(QuadExt::one());
    for factor in &t.factors {
        product = &product * &factor.to_poly(values)?;
    }
    Ok(product)
}

/// The fixed probe point `a_i = i-th prime from 5 on`.
pub fn probe_values(count: u32) -> BTreeMap<u32, BigRational> {
    let mut primes = Vec::new();
    let mut candidate = 5u32;
    while primes.len() < count as usize {
        if (2..candidate)
            .take_while(|d| d * d <= candidate)
            .all(|d| !candidate.is_multiple_of(d))
        {
            primes.push(candidate);
        }
        candidate += 1;
    }
    primes
        .into_iter()
        .enumerate()
        .map(|(k, p)| (k as u32 + 1, BigRational::from_integer(BigInt::from(p))))
        .collect()
}

/// Whether the template instantiated at [`probe_values`] is separable.
pub fn probe_separable(t: &EquationTemplate) -> Result<bool, FamilyError> {
    let poly = instantiate(t, &probe_values(parameter_count(t)))?;
    Ok(is_separable(&poly)?)
}

mod repr {
    //! JSON shape of equation templates.

    use super::*;

    #[derive(Serialize, Deserialize)]
    pub struct TemplateRepr {
        factors: Vec<Vec<TermRepr>>,
        radicand: i64,
    }

    #[derive(Serialize, Deserialize)]
    struct TermRepr {
        e: u32,
        c: CoeffRepr,
    }

    #[derive(Serialize, Deserialize)]
    #[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
    enum CoeffRepr {
        Fixed { a: String, b: String },
        Param { i: u32 },
        Scaled { factor: String, i: u32 },
    }

    fn rational(text: &str) -> Result<BigRational, String> {
        text.parse().map_err(|_| format!("invalid rational {text:?}"))
    }

    impl From<EquationTemplate> for TemplateRepr {
        fn from(t: EquationTemplate) -> Self {
            let factors = t
                .factors
                .into_iter()
                .map(|f| {
                    f.terms
                        .into_iter()
                        .map(|term| TermRepr {
                            e: term.exponent,
                            c: match term.coeff {
                                Coefficient::Fixed(q) => CoeffRepr::Fixed {
                                    a: q.rational_part().to_string(),
                                    b: q.irrational_part().to_string(),
                                },
                                Coefficient::Param(i) => CoeffRepr::Param { i },
                                Coefficient::Scaled { factor, param } => CoeffRepr::Scaled {
                                    factor: factor.to_string(),
                                    i: param,
                                },
                            },
                        })
                        .collect()
                })
                .collect();
            TemplateRepr {
                factors,
                radicand: t.radicand,
            }
        }
    }

    impl TryFrom<TemplateRepr> for EquationTemplate {
        type Error = String;

        fn try_from(r: TemplateRepr) -> Result<Self, String> {
            let mut factors = Vec::with_capacity(r.factors.len());
            for f in r.factors {
                let mut terms = Vec::with_capacity(f.len());
                for t in f {
                    let coeff = match t.c {
                        CoeffRepr::Fixed { a, b } => {
                            let q =
                                QuadExt::new(rational(&a)?, rational(&b)?, r.radicand).map_err(|e| e.to_string())?;
                            Coefficient::Fixed(q)
                        }
                        CoeffRepr::Param { i } => Coefficient::Param(i),
                        CoeffRepr::Scaled { factor, i } => Coefficient::Scaled {
                            factor: rational(&factor)?,
                            param: i,
                        },
                    };
                    terms.push(Term::new(t.e, coeff));
                }
                factors.push(Factor::new(terms));
            }
            EquationTemplate::new(factors, r.radicand).map_err(|e| e.to_string())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::QuadExt;
    use proptest::prelude::*;

    fn c(v: i64) -> Coefficient {
        Coefficient::int(v)
    }

    fn factor(terms: &[(u32, Coefficient)]) -> Factor {
        Factor::new(terms.iter().cloned().map(|(e, c)| Term::new(e, c)).collect())
    }

    fn x() -> Factor {
        factor(&[(1, c(1))])
    }

    fn tmpl(factors: Vec<Factor>) -> EquationTemplate {
        EquationTemplate::new(factors, 1).unwrap()
    }

    fn biquad(i: u32) -> Factor {
        factor(&[(4, c(1)), (2, Coefficient::Param(i)), (0, c(1))])
    }

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn degrees() {
        let t = tmpl(vec![x(), factor(&[(10, c(1)), (5, Coefficient::Param(1)), (0, c(1))])]);
        assert_eq!(template_degree(&t), Ok(11));
        assert_eq!(template_degree(&tmpl(vec![f1_factor()])), Ok(12));
        assert_eq!(template_degree(&tmpl(vec![factor(&[(2, c(1)), (0, c(1))])])), Ok(2));
        assert_eq!(EquationTemplate::new(vec![], 1), Err(FamilyError::EmptyTemplate));
    }

    #[test]
    fn parameter_counts() {
        assert_eq!(parameter_count(&tmpl(vec![f1_factor()])), 1);
        let mut terms = vec![Term::new(12, c(1))];
        terms.extend((1..=5).map(|i| Term::new(2 * i, Coefficient::Param(i))));
        terms.push(Term::new(0, c(1)));
        assert_eq!(parameter_count(&tmpl(vec![Factor::new(terms)])), 5);
        assert_eq!(parameter_count(&tmpl(vec![factor(&[(21, c(1)), (0, c(1))])])), 0);
    }

    #[test]
    fn branch_counts() {
        assert_eq!(branch_count(5, &tmpl(vec![biquad(1)])), Ok(5));
        let t = tmpl(vec![x(), factor(&[(10, c(1)), (5, Coefficient::Param(1)), (0, c(1))])]);
        assert_eq!(branch_count(2, &t), Ok(12));
        assert_eq!(
            branch_count(4, &tmpl(vec![factor(&[(6, c(1)), (0, c(1))])])),
            Err(FamilyError::NonSuperellipticBranching { n: 4, degree: 6 })
        );
    }

    #[test]
    fn genus_formula() {
        assert_eq!(superelliptic_genus(2, 12), Ok(5));
        assert_eq!(superelliptic_genus(5, 5), Ok(6));
        assert_eq!(superelliptic_genus(11, 3), Ok(5));
        assert_eq!(superelliptic_genus(2, 5), Err(FamilyError::NonIntegralGenus(3)));
        assert_eq!(superelliptic_genus(2, 4), Err(FamilyError::GenusBelowTwo(1)));
    }

    #[test]
    fn genus_from_records() {
        let sqrt = Coefficient::Fixed(QuadExt::new(rat(0), rat(2), -3).unwrap());
        let t = EquationTemplate::new(
            vec![
                x(),
                factor(&[(4, c(1)), (0, c(-1))]),
                factor(&[(4, c(1)), (2, sqrt), (0, c(1))]),
                f1_factor(),
            ],
            -3,
        )
        .unwrap();
        let rec = FamilyRecord {
            genus: 10,
            nr: 52,
            n: 2,
            reduced: ReducedGroupKind::TetraA4,
            group: None,
            signature: "2,3,4,6".parse().unwrap(),
            delta: 1,
            template: t,
            blue: false,
        };
        assert_eq!(genus_of_family(&rec), Ok(10));
        assert_eq!(rec.template.to_string(), "x(x^4 - 1)(x^4 + 2√-3x^2 + 1)f_1(x)");
        let rec7 = FamilyRecord {
            n: 3,
            template: tmpl(vec![factor(&[(8, c(1)), (0, c(1))])]),
            genus: 7,
            ..rec.clone()
        };
        assert_eq!(genus_of_family(&rec7), Ok(7));
        let rec3 = FamilyRecord {
            n: 4,
            template: tmpl(vec![biquad(1)]),
            genus: 3,
            ..rec
        };
        assert_eq!(genus_of_family(&rec3), Ok(3));
    }

    #[test]
    fn levels() {
        let set = |v: &[(u32, u32)]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(enumerate_levels(5), set(&[(2, 12), (3, 7), (6, 4), (11, 3)]));
        assert_eq!(enumerate_levels(2), set(&[(2, 6), (3, 4), (5, 3)]));
        assert!(enumerate_levels(6).contains(&(13, 3)));
    }

    #[test]
    fn instantiation() {
        let t = tmpl(vec![biquad(1)]);
        let at = |v: i64| BTreeMap::from([(1, rat(v))]);
        assert_eq!(
            instantiate(&t, &at(3)).unwrap(),
            Poly::from_int_coeffs(&[1, 0, 3, 0, 1])
        );
        let p = instantiate(&t, &at(2)).unwrap();
        assert_eq!(p, Poly::from_int_coeffs(&[1, 0, 2, 0, 1]));
        assert_eq!(is_separable(&p), Ok(false));
        let diff = tmpl(vec![factor(&[(2, c(1)), (0, c(-1))]), factor(&[(2, c(1)), (0, c(1))])]);
        assert_eq!(
            instantiate(&diff, &BTreeMap::new()).unwrap(),
            Poly::from_int_coeffs(&[-1, 0, 0, 0, 1])
        );
        assert_eq!(instantiate(&t, &BTreeMap::new()), Err(FamilyError::MissingParameter(1)));
    }

    #[test]
    fn probe_uses_primes_from_five() {
        let v: Vec<_> = probe_values(4).into_values().collect();
        assert_eq!(v, vec![rat(5), rat(7), rat(11), rat(13)]);
        assert_eq!(probe_separable(&tmpl(vec![f1_factor()])), Ok(true));
    }

    #[test]
    fn validation() {
        assert_eq!(
            EquationTemplate::new(vec![biquad(2)], 1),
            Err(FamilyError::NonContiguousParameters {
                count: 1,
                found: vec![2]
            })
        );
        assert_eq!(
            EquationTemplate::new(vec![factor(&[(2, c(1)), (2, c(3))])], 1),
            Err(FamilyError::RepeatedExponent { factor: 0, exponent: 2 })
        );
        let sqrt = Coefficient::Fixed(QuadExt::new(rat(0), rat(1), -3).unwrap());
        assert!(matches!(
            EquationTemplate::new(vec![factor(&[(2, sqrt), (0, c(1))])], 1),
            Err(FamilyError::RadicandMismatch { .. })
        ));
    }

    #[test]
    fn rendering() {
        assert_eq!(tmpl(vec![f1_factor()]).to_string(), "f_1(x)");
        assert_eq!(
            f1_factor().to_string(),
            "x^12 - a_1x^10 - 33x^8 + 2a_1x^6 - 33x^4 - a_1x^2 + 1"
        );
        assert_eq!(tmpl(vec![x(), biquad(1)]).to_string(), "x(x^4 + a_1x^2 + 1)");
        assert_eq!(tmpl(vec![factor(&[(21, c(1)), (0, c(1))])]).to_string(), "x^21 + 1");
    }

    #[test]
    fn json_shape() {
        let t = tmpl(vec![x(), f1_factor()]);
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(v["radicand"], 1);
        assert_eq!(v["factors"][0][0]["c"]["kind"], "fixed");
        assert_eq!(
            v["factors"][1][1]["c"],
            serde_json::json!({"kind": "scaled", "factor": "-1", "i": 1})
        );
        let back: EquationTemplate = serde_json::from_value(v).unwrap();
        assert_eq!(back, t);
        let bad = serde_json::json!({"factors": [[{"e": 2, "c": {"kind": "param", "i": 3}}]], "radicand": 1});
        assert!(serde_json::from_value::<EquationTemplate>(bad).is_err());
    }

    proptest! {
        #[test]
        fn enumerate_levels_matches_brute_force(g in 2u32..200) {
            let brute: BTreeSet<(u32, u32)> = (2..=2 * g + 1)
                .flat_map(|n| (3..=2 * g + 2).map(move |b| (n, b)))
                .filter(|&(n, b)| (n - 1) * (b - 2) == 2 * g)
                .collect();
            prop_assert_eq!(enumerate_levels(g), brute);
        }

        #[test]
        fn genus_formula_inverts_levels(g in 2u32..200) {
            for (n, b) in enumerate_levels(g) {
                prop_assert_eq!(superelliptic_genus(n, b), Ok(g));
            }
        }
    }
}
