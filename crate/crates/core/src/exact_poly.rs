//! Exact arithmetic over ℚ and quadratic extensions ℚ(√d), and univariate
//! polynomials with coefficients in such a field.
//!
//! Everything here is exact: rational components are arbitrary-precision and
//! there is no floating point. A polynomial lives in a single radicand
//! context; purely rational values are members of every context and combine
//! freely with anything.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithmeticError {
    #[error("radicand {0} must be a square-free integer other than 0")]
    InvalidRadicand(i64),
    #[error("a rational radicand (d = 1) cannot carry an irrational part")]
    IrrationalPartWithoutRadicand,
    #[error("cannot combine values from Q(sqrt({0})) and Q(sqrt({1}))")]
    MixedRadicands(i64, i64),
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("separability is undefined for constant polynomials")]
    ConstantPolynomial,
    #[error("division by zero")]
    DivisionByZero,
}

/// Returns true if `d` is a valid radicand: nonzero and not divisible by the
/// square of any prime. `1` (plain rationals) and `-1` are valid.
pub fn is_square_free(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    let mut rest = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            rest /= p;
            if rest.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// An element `a + b√d` of ℚ(√d).
///
/// Values with `b = 0` are normalised to `d = 1`, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: BigRational,
    b: BigRational,
    d: i64,
}

impl QuadExt {
    pub fn new(a: BigRational, b: BigRational, d: i64) -> Result<Self, ArithmeticError> {
        if !is_square_free(d) {
            return Err(ArithmeticError::InvalidRadicand(d));
        }
        if d == 1 && !b.is_zero() {
            return Err(ArithmeticError::IrrationalPartWithoutRadicand);
        }
        Ok(Self::normalized(a, b, d))
    }

    fn normalized(a: BigRational, b: BigRational, d: i64) -> Self {
        if b.is_zero() {
            QuadExt { a, b, d: 1 }
        } else {
            QuadExt { a, b, d }
        }
    }

    pub fn rational(a: BigRational) -> Self {
        QuadExt {
            a,
            b: BigRational::zero(),
            d: 1,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.b
    }

    /// The radicand; `1` for rational values.
    pub fn radicand(&self) -> i64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Common radicand of two values, if they live in a common field.
    pub fn common_radicand(&self, other: &QuadExt) -> Result<i64, ArithmeticError> {
        match (self.d, other.d) {
            (1, d) | (d, 1) => Ok(d),
            (d, e) if d == e => Ok(d),
            (d, e) => Err(ArithmeticError::MixedRadicands(d, e)),
        }
    }

    fn join(&self, other: &QuadExt) -> i64 {
        match self.common_radicand(other) {
            Ok(d) => d,
            Err(e) => panic!("{e}"),
        }
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> BigRational {
        let d = BigRational::from_integer(BigInt::from(self.d));
        &self.a * &self.a - d * &self.b * &self.b
    }

    pub fn inverse(&self) -> Result<QuadExt, ArithmeticError> {
        if self.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        // d is square-free and not 1, so the norm vanishes only at zero.
        let n = self.norm();
        Ok(Self::normalized(&self.a / &n, -(&self.b) / &n, self.d))
    }

    pub fn checked_div(&self, other: &QuadExt) -> Result<QuadExt, ArithmeticError> {
        self.common_radicand(other)?;
        Ok(self * &other.inverse()?)
    }
}

impl<'a> Add<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        let d = self.join(rhs);
        QuadExt::normalized(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
}

impl<'a> Sub<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        let d = self.join(rhs);
        QuadExt::normalized(&self.a - &rhs.a, &self.b - &rhs.b, d)
    }
}

impl<'a> Mul<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        let d = self.join(rhs);
        let dr = BigRational::from_integer(BigInt::from(d));
        let a = &self.a * &rhs.a + &self.b * &rhs.b * dr;
        let b = &self.a * &rhs.b + &rhs.a * &self.b;
        QuadExt::normalized(a, b, d)
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::normalized(-(&self.a), -(&self.b), self.d)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $m(self, rhs: QuadExt) -> QuadExt {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -(&self)
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = |b: &BigRational| -> String {
            if b.is_one() {
                format!("√{}", self.d)
            } else if (-b).is_one() {
                format!("-√{}", self.d)
            } else {
                format!("{}√{}", fmt_rational(b), self.d)
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.a)),
            (true, false) => write!(f, "{}", root(&self.b)),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{} - {}", fmt_rational(&self.a), root(&-(&self.b)))
                } else {
                    write!(f, "{} + {}", fmt_rational(&self.a), root(&self.b))
                }
            }
        }
    }
}

/// A univariate polynomial over ℚ(√d). Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    coeffs: BTreeMap<u32, QuadExt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: QuadExt) -> Self {
        Self::monomial(c, 0)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(QuadExt::one(), 1)
    }

    pub fn monomial(c: QuadExt, exponent: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exponent, c);
        }
        Poly { coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (u32, QuadExt)>>(terms: I) -> Self {
        let mut p = Poly::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    /// Integer coefficients listed from the constant term upward.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(e, &c)| (e as u32, QuadExt::from_integer(c))),
        )
    }

    fn add_term(&mut self, e: u32, c: &QuadExt) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.get(&e) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.coeffs.remove(&e);
        } else {
            self.coeffs.insert(e, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coefficient(&self) -> Option<&QuadExt> {
        self.coeffs.values().next_back()
    }

    pub fn coefficient(&self, exponent: u32) -> QuadExt {
        self.coeffs.get(&exponent).cloned().unwrap_or_else(QuadExt::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &QuadExt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// The radicand shared by all coefficients, `1` if all are rational.
    pub fn radicand(&self) -> Result<i64, ArithmeticError> {
        let mut d = 1;
        for c in self.coeffs.values() {
            d = match (d, c.radicand()) {
                (1, e) | (e, 1) => e,
                (a, b) if a == b => a,
                (a, b) => return Err(ArithmeticError::MixedRadicands(a, b)),
            };
        }
        Ok(d)
    }

    pub fn scale(&self, c: &QuadExt) -> Poly {
        Poly::from_terms(self.coeffs.iter().map(|(&e, k)| (e, k * c)))
    }

    fn shifted_scaled(&self, shift: u32, c: &QuadExt) -> Poly {
        Poly::from_terms(self.coeffs.iter().map(|(&e, k)| (e + shift, k * c)))
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_terms(
            self.coeffs
                .iter()
                .filter(|(&e, _)| e > 0)
                .map(|(&e, c)| (e - 1, c * &QuadExt::from_integer(i64::from(e)))),
        )
    }

    /// Scales so the leading coefficient is one. The zero polynomial is
    /// returned unchanged.
    pub fn monic(&self) -> Poly {
        match self.leading_coefficient() {
            None => Poly::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inverse().expect("leading coefficient is nonzero")),
        }
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), ArithmeticError> {
        let dd = divisor.degree().ok_or(ArithmeticError::DivisionByZero)?;
        let inv_lc = divisor.leading_coefficient().expect("nonzero divisor").inverse()?;
        let mut quotient = Poly::zero();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading_coefficient().expect("nonzero remainder") * &inv_lc;
            let shift = rd - dd;
            rem = &rem - &divisor.shifted_scaled(shift, &factor);
            quotient.add_term(shift, &factor);
        }
        Ok((quotient, rem))
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::constant(QuadExt::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c);
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_terms(self.coeffs.iter().map(|(&e, c)| (e, -c)))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.coeffs.iter().rev() {
            let (neg, mag) = if c.is_rational() && c.rational_part().is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let coeff = if mag.is_rational() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match e {
                0 => write!(f, "{coeff}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{coeff}")?;
                    }
                    if e == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Monic greatest common divisor by the Euclidean algorithm.
pub fn poly_gcd(p: &Poly, q: &Poly) -> Result<Poly, ArithmeticError> {
    if p.is_zero() && q.is_zero() {
        return Err(ArithmeticError::GcdOfZeros);
    }
    let mut a = p.monic();
    let mut b = q.monic();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b)?;
        a = b;
        b = r.monic();
    }
    Ok(a.monic())
}

pub fn derivative(p: &Poly) -> Poly {
    p.derivative()
}

/// True iff `p` has no repeated roots, i.e. `gcd(p, p′)` is constant.
pub fn is_separable(p: &Poly) -> Result<bool, ArithmeticError> {
    match p.degree() {
        None => Err(ArithmeticError::ZeroPolynomial),
        Some(0) => Err(ArithmeticError::ConstantPolynomial),
        Some(_) => {
            if MODULAR_PRIMES.iter().any(|&m| separable_mod(p, m)) {
                return Ok(true);
            }
            Ok(poly_gcd(p, &p.derivative())?.degree() == Some(0))
        }
    }
}

const MODULAR_PRIMES: [u64; 3] = [1_000_000_007, 998_244_353, 2_147_483_647];

/// Sufficient test: a rational polynomial whose reduction modulo a prime
/// larger than its degree keeps its degree and is separable there has nonzero
/// discriminant, hence is separable over Q. `false` means inconclusive.
fn separable_mod(p: &Poly, m: u64) -> bool {
    let Some(deg) = p.degree() else { return false };
    if u64::from(deg) >= m {
        return false;
    }
    let mut f = vec![0u64; deg as usize + 1];
    for (e, c) in p.terms() {
        if !c.is_rational() {
            return false;
        }
        match reduce_mod(c.rational_part(), m) {
            Some(v) => f[e as usize] = v,
            None => return false,
        }
    }
    if f[deg as usize] == 0 {
        return false;
    }
    let df: Vec<u64> = (1..f.len()).map(|i| mul_mod(f[i], i as u64, m)).collect();
    gcd_mod(f, df, m).len() == 1
}

fn reduce_mod(q: &BigRational, m: u64) -> Option<u64> {
    let big = BigInt::from(m);
    let to_u64 = |x: &BigInt| -> u64 {
        let r = x.mod_floor(&big);
        r.to_u64().expect("reduced below modulus")
    };
    let den = to_u64(q.denom());
    if den == 0 {
        return None;
    }
    Some(mul_mod(to_u64(q.numer()), pow_mod(den, m - 2, m), m))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (u128::from(a) * u128::from(b) % u128::from(m)) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Monic gcd over F_m of dense coefficient vectors, constant term first.
fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, m: u64) -> Vec<u64> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), m - 2, m);
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let factor = mul_mod(*a.last().unwrap(), inv, m);
            for (i, &c) in b.iter().enumerate() {
                let sub = mul_mod(factor, c, m);
                a[i + shift] = (a[i + shift] + m - sub) % m;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}
