//! Exact arithmetic for univariate polynomials and rational functions in the
//! dimension parameter `d`, over arbitrary-precision rationals.
//!
//! A `RationalFunction` is kept in canonical form at all times:
//! - numerator and denominator are coprime,
//! - the denominator is monic and nonzero,
//! - zero is represented as `0/1`.
//!
//! Canonical form makes equality a field-by-field comparison, so exact values
//! can be checked literally against golden data.

use crate::error::{Result, WgError};
use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type BigRat = BigRational;

pub fn rat(n: i64) -> BigRat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> BigRat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense univariate polynomial in `d`, coefficients stored by ascending
/// degree with no trailing zeros (the zero polynomial has no coefficients).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigRat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Poly::new(vec![c])
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// The indeterminate `d`.
    pub fn var() -> Self {
        Poly::from_int_coeffs(&[0, 1])
    }

    /// `c * d^k`
    pub fn monomial(c: BigRat, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRat::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRat {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> BigRat {
        self.coeffs.last().cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitute `d -> -d`.
    pub fn substitute_neg(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Euclidean division; panics if `rhs` is zero.
    pub fn divrem(&self, rhs: &Poly) -> (Poly, Poly) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        let dr = rhs.degree().unwrap();
        let lc = rhs.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRat::zero(); self.coeffs.len().saturating_sub(dr)];
        while rem.len() > dr {
            let k = rem.len() - 1 - dr;
            let q = rem.last().unwrap() / &lc;
            if !q.is_zero() {
                for (i, c) in rhs.coeffs.iter().enumerate() {
                    let v = &rem[k + i] - &q * c;
                    rem[k + i] = v;
                }
            }
            rem.pop();
            quot[k] = q;
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            if rem.len() <= dr {
                break;
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic gcd by the Euclidean algorithm over exact rationals.
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let mut a = self.clone().into_monic();
        let mut b = rhs.clone().into_monic();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.into_monic();
        }
        a
    }

    fn into_monic(self) -> Poly {
        if self.is_zero() {
            return self;
        }
        let lc = self.leading_coeff();
        if lc.is_one() {
            self
        } else {
            self.scale(&(BigRat::one() / lc))
        }
    }

    /// Writes `self = content * primitive` with `primitive` an integer-coefficient
    /// polynomial of positive leading coefficient and coprime coefficients.
    pub fn int_content_and_primitive(&self) -> (BigRat, Vec<BigInt>) {
        if self.is_zero() {
            return (BigRat::zero(), vec![]);
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = num::integer::lcm(den_lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = num::integer::gcd(g, c.clone());
        }
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        (BigRational::new(g, den_lcm), prim)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Poly::new(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &coeffs[i + j] + a * b;
                coeffs[i + j] = v;
            }
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit_coeff = abs.is_one() && k > 0;
            if !unit_coeff {
                if abs.is_integer() {
                    write!(f, "{}", abs)?;
                } else {
                    write!(f, "({})", abs)?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "d")?,
                _ => write!(f, "d^{}", k)?,
            }
        }
        Ok(())
    }
}

/// Reduced quotient of two polynomials in `d`; the universal value type for
/// Weingarten entries and exact moments.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    /// Builds the unique reduced, monic-denominator representative of `num/den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(WgError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, r1) = num.divrem(&g);
        debug_assert!(r1.is_zero());
        let (den, r2) = den.divrem(&g);
        debug_assert!(r2.is_zero());
        let lc = den.leading_coeff();
        let inv = BigRat::one() / lc;
        Ok(RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("nonzero denominator")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominator")
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(WgError::InvertZero);
        }
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Exact evaluation at `x`; succeeds at removable poles of any unreduced
    /// representation because the stored form is reduced.
    pub fn eval(&self, x: &BigRat) -> Result<BigRat> {
        let den = self.den.eval(x);
        if den.is_zero() {
            return Err(WgError::PoleAt(x.clone()));
        }
        Ok(self.num.eval(x) / den)
    }

    /// Substitute `d -> -d` and re-reduce to canonical form.
    pub fn substitute_neg(&self) -> Self {
        RationalFunction::new(self.num.substitute_neg(), self.den.substitute_neg())
            .expect("nonzero denominator")
    }

    /// `deg(num) - deg(den)`; `None` for the zero function.
    pub fn order(&self) -> Option<i64> {
        Some(self.num.degree()? as i64 - self.den.degree().unwrap() as i64)
    }

    /// Leading coefficient of the large-`d` expansion (denominator is monic).
    pub fn leading_coeff(&self) -> BigRat {
        self.num.leading_coeff()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(RfJson::from(self)).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: RfJson = serde_json::from_value(v.clone())
            .map_err(|e| WgError::Parse(e.to_string()))?;
        j.try_into()
    }

    /// Human-readable form with numerator and denominator split into integer
    /// linear factors where possible, e.g. `-1/(d(d-1)(d+2))`.
    pub fn factored(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let (cn, num_fact) = factor_integer_roots(&self.num);
        let (cd, den_fact) = factor_integer_roots(&self.den);
        let scalar = cn / cd;
        let num_str = factored_to_string(&scalar, &num_fact);
        if den_fact.is_empty() {
            num_str
        } else {
            let den_str = factored_to_string(&BigRat::one(), &den_fact);
            let den_wrapped = if den_fact.len() == 1 && !den_str.starts_with('(') {
                // single bare factor like "d" still gets wrapped for clarity
                if den_str.len() == 1 {
                    den_str
                } else {
                    format!("({})", den_str)
                }
            } else {
                format!("({})", den_str)
            };
            format!("{}/{}", maybe_paren(&num_str), den_wrapped)
        }
    }

    /// Factored numerator and denominator as separate strings (denominator
    /// "1" for polynomials), for layouts that typeset the fraction themselves.
    pub fn factored_pair(&self) -> (String, String) {
        if self.is_zero() {
            return ("0".to_string(), "1".to_string());
        }
        let (cn, num_fact) = factor_integer_roots(&self.num);
        let (cd, den_fact) = factor_integer_roots(&self.den);
        let scalar = cn / cd;
        let num_str = factored_to_string(&scalar, &num_fact);
        if den_fact.is_empty() {
            (num_str, "1".to_string())
        } else {
            (num_str, factored_to_string(&BigRat::one(), &den_fact))
        }
    }
}

fn maybe_paren(s: &str) -> String {
    // a sum needs parentheses when used as a quotient numerator
    let inner_sign = s
        .char_indices()
        .skip(1)
        .any(|(_, c)| (c == '+' || c == '-') && !s.starts_with('('));
    if inner_sign && !s.starts_with('(') {
        format!("({})", s)
    } else {
        s.to_string()
    }
}

enum Factor {
    /// `(d - root)^mult`
    Linear { root: BigInt, mult: usize },
    /// residual factor that has no integer roots
    Rest(Poly),
}

/// Splits `p` into a rational constant times integer linear factors times a
/// residual integer polynomial.
fn factor_integer_roots(p: &Poly) -> (BigRat, Vec<Factor>) {
    assert!(!p.is_zero());
    let (content, prim) = p.int_content_and_primitive();
    let mut q = Poly::new(prim.iter().map(|c| BigRational::from_integer(c.clone())).collect());
    let mut factors = Vec::new();

    // root at 0: strip trailing low-order zeros
    let mut zero_mult = 0usize;
    while !q.is_zero() && q.coeff(0).is_zero() {
        let (quot, _) = q.divrem(&Poly::var());
        q = quot;
        zero_mult += 1;
    }
    if zero_mult > 0 {
        factors.push(Factor::Linear { root: BigInt::zero(), mult: zero_mult });
    }

    // integer roots divide the constant term
    let mut candidates: Vec<BigInt> = Vec::new();
    if q.degree().unwrap_or(0) >= 1 {
        let c0 = q.coeff(0);
        let c0int = c0.numer().abs();
        let mut k = BigInt::one();
        while &k * &k <= c0int {
            if (&c0int % &k).is_zero() {
                let other = &c0int / &k;
                for cand in [k.clone(), -k.clone(), other.clone(), -other] {
                    if !candidates.contains(&cand) {
                        candidates.push(cand);
                    }
                }
            }
            k += 1;
        }
        candidates.sort();
    }
    for r in candidates {
        let x = BigRational::from_integer(r.clone());
        let mut mult = 0usize;
        while q.degree().unwrap_or(0) >= 1 && q.eval(&x).is_zero() {
            let lin = Poly::new(vec![-x.clone(), BigRat::one()]);
            let (quot, rem) = q.divrem(&lin);
            debug_assert!(rem.is_zero());
            q = quot;
            mult += 1;
        }
        if mult > 0 {
            factors.push(Factor::Linear { root: r, mult });
        }
    }
    let mut scalar = content;
    if let Some(0) = q.degree() {
        scalar *= q.coeff(0);
    } else if !q.is_zero() && q.degree().unwrap() >= 1 {
        factors.push(Factor::Rest(q));
    }
    // stable display order: d first, then factors by |root| ascending with
    // (d - a) before (d + a), residual factors last
    factors.sort_by_key(|f| match f {
        Factor::Linear { root, .. } => (0, root.abs(), root.is_negative()),
        Factor::Rest(_) => (1, BigInt::zero(), false),
    });
    (scalar, factors)
}

fn factored_to_string(scalar: &BigRat, factors: &[Factor]) -> String {
    let mut out = String::new();
    let one = BigRat::one();
    let minus_one = -BigRat::one();
    if factors.is_empty() {
        return format!("{}", scalar);
    }
    if *scalar == minus_one {
        out.push('-');
    } else if *scalar != one {
        out.push_str(&format!("{}", scalar));
    }
    for f in factors {
        match f {
            Factor::Linear { root, mult } => {
                let base = if root.is_zero() {
                    "d".to_string()
                } else if root.is_negative() {
                    format!("(d+{})", -root.clone())
                } else {
                    format!("(d-{})", root)
                };
                if *mult == 1 {
                    out.push_str(&base);
                } else {
                    out.push_str(&format!("{}^{}", base, mult));
                }
            }
            Factor::Rest(p) => out.push_str(&format!("({})", p)),
        }
    }
    out
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RfJson {
    num: Vec<String>,
    den: Vec<String>,
}

impl From<&RationalFunction> for RfJson {
    fn from(rf: &RationalFunction) -> Self {
        RfJson {
            num: rf.num.coeffs().iter().map(|c| c.to_string()).collect(),
            den: rf.den.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl TryFrom<RfJson> for RationalFunction {
    type Error = WgError;
    fn try_from(j: RfJson) -> Result<Self> {
        let parse = |v: &[String]| -> Result<Vec<BigRat>> {
            v.iter()
                .map(|s| s.parse::<BigRational>().map_err(|e| WgError::Parse(e.to_string())))
                .collect()
        };
        RationalFunction::new(Poly::new(parse(&j.num)?), Poly::new(parse(&j.den)?))
    }
}
