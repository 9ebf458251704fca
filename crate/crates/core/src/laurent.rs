//! Integer Laurent polynomials in one variable `t`.
//!
//! Units of `Z[t, 1/t]` are `±t^n`. Invariants derived from presentation
//! matrices are only defined up to units, so [`LaurentPoly::canonical`] picks a
//! representative: lowest exponent 0, lowest coefficient positive.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    // exponent -> coefficient; no zero coefficients stored
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `a + b t`, the shape of most presentation-matrix entries.
    pub fn linear(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self::monomial(a, 0) + Self::monomial(b, 1)
    }

    /// `coeffs[k]` is the coefficient of `t^(min_exp + k)`.
    pub fn from_coeffs<T: Into<BigInt>>(min_exp: i64, coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            p.add_term(min_exp + k as i64, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Width of the exponent range, 0 for constants and for the zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact evaluation at a nonzero integer.
    pub fn eval(&self, t0: &BigInt) -> Result<BigRational> {
        if t0.is_zero() {
            return Err(Error::EvalAtZero);
        }
        let base = BigRational::from_integer(t0.clone());
        let mut acc = BigRational::zero();
        for (&e, c) in &self.terms {
            let p = if e >= 0 {
                num_traits::pow(base.clone(), e as usize)
            } else {
                num_traits::pow(base.recip(), e.unsigned_abs() as usize)
            };
            acc += p * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Evaluation at an integer when the result is known to be integral (no
    /// negative exponents, or `t0 = ±1`).
    pub fn eval_int(&self, t0: i64) -> Result<BigInt> {
        let v = self.eval(&BigInt::from(t0))?;
        if !v.is_integer() {
            return Err(Error::InexactDivision {
                numerator: v.numer().to_string(),
                denominator: v.denom().to_string(),
            });
        }
        Ok(v.to_integer())
    }

    /// Representative modulo units: minimum exponent 0 and a positive
    /// coefficient there. Zero stays zero.
    pub fn canonical(&self) -> Self {
        let Some(lo) = self.min_exp() else {
            return Self::zero();
        };
        let shifted = self.shift(-lo);
        if shifted.coeff(0).is_negative() {
            -shifted
        } else {
            shifted
        }
    }

    pub fn equal_up_to_units(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Gcd of the coefficients (nonnegative; 0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Exact quotient `self / divisor` in `Z[t, 1/t]`, or `None` when the
    /// division does not come out even.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (a_lo, b_lo) = (self.min_exp()?, divisor.min_exp()?);
        let mut rem = to_dense(self);
        let den = to_dense(divisor);
        if rem.len() < den.len() {
            return None;
        }
        let lead = den.last()?.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - den.len() + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + den.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in den.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(a_lo - b_lo, quot))
    }
}

/// Dense coefficient vector of `p * t^(-min_exp)`, lowest degree first.
fn to_dense(p: &LaurentPoly) -> Vec<BigInt> {
    let Some(lo) = p.min_exp() else {
        return Vec::new();
    };
    let mut v = vec![BigInt::zero(); (p.span() + 1) as usize];
    for (&e, c) in &p.terms {
        v[(e - lo) as usize] = c.clone();
    }
    v
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return Vec::new();
    }
    let mut out: Vec<BigInt> = v.iter().map(|c| c / &g).collect();
    trim(&mut out);
    out
}

/// Pseudo-remainder of `a` by `b` in `Z[t]` (dense, trimmed, `b` nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    let lead = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() && !r.is_empty() {
        let top = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c *= &lead;
        }
        for (j, d) in b.iter().enumerate() {
            r[shift + j] -= &top * d;
        }
        trim(&mut r);
    }
    r
}

/// Gcd of two primitive polynomials in `Z[t]` via the primitive
/// pseudo-remainder sequence.
fn primitive_gcd(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    primitive(&a)
}

/// Gcd in `Z[t, 1/t]`: gcd of contents times gcd of primitive parts, returned
/// in canonical form. Zero inputs are ignored; all-zero input gives zero.
pub fn poly_gcd<'a>(ps: impl IntoIterator<Item = &'a LaurentPoly>) -> LaurentPoly {
    let mut content = BigInt::zero();
    let mut prim: Option<Vec<BigInt>> = None;
    for p in ps {
        if p.is_zero() {
            continue;
        }
        content = content.gcd(&p.content());
        let pp = primitive(&to_dense(p));
        prim = Some(match prim {
            None => pp,
            Some(acc) => primitive_gcd(acc, pp),
        });
    }
    match prim {
        None => LaurentPoly::zero(),
        Some(g) => LaurentPoly::from_coeffs(0, g).scale(&content).canonical(),
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| &acc * &p)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

/// Ascending exponents: `2 + 192*t + 972*t^2 - 12289*t^3`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let var = match e {
                0 => None,
                1 => Some("t".to_string()),
                _ => Some(format!("t^{e}")),
            };
            match var {
                None => write!(f, "{mag}")?,
                Some(v) if mag.is_one() => f.write_str(&v)?,
                Some(v) => write!(f, "{mag}*{v}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Accepts the rendering grammar: signed terms `c`, `c*t^k`, `c t^k`, `t^k`,
/// `t`, with optional whitespace anywhere. Exponents may be negative.
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let raw: Vec<char> = s.chars().collect();
        for (k, w) in raw.windows(2).enumerate() {
            if w[0].is_ascii_digit() && w[1].is_whitespace() {
                let next = raw[k + 1..].iter().find(|c| !c.is_whitespace());
                if next.is_some_and(char::is_ascii_digit) {
                    return Err(Error::Parse(format!("whitespace inside a number in {s:?}")));
                }
            }
        }
        let chars: Vec<char> = raw.into_iter().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let err = |msg: &str, at: usize| Error::Parse(format!("{msg} at position {at} in {s:?}"));
        let mut p = LaurentPoly::zero();
        let mut i = 0;
        let mut first = true;
        while i < chars.len() {
            let mut sign = BigInt::one();
            match chars[i] {
                '+' if !first => i += 1,
                '-' => {
                    sign = -sign;
                    i += 1;
                }
                _ if first => {}
                _ => return Err(err("expected '+' or '-'", i)),
            }
            first = false;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let coeff = if i > start {
                chars[start..i]
                    .iter()
                    .collect::<String>()
                    .parse::<BigInt>()
                    .unwrap()
            } else {
                BigInt::one()
            };
            let had_coeff = i > start;
            if had_coeff && i < chars.len() && chars[i] == '*' {
                i += 1;
                if chars.get(i) != Some(&'t') {
                    return Err(err("expected 't' after '*'", i));
                }
            }
            let mut exp = 0i64;
            if i < chars.len() && chars[i] == 't' {
                i += 1;
                exp = 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let paren = chars.get(i) == Some(&'(');
                    if paren {
                        i += 1;
                    }
                    let es = i;
                    if chars.get(i) == Some(&'-') {
                        i += 1;
                    }
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let text: String = chars[es..i].iter().collect();
                    exp = text.parse().map_err(|_| err("bad exponent", es))?;
                    if paren {
                        if chars.get(i) != Some(&')') {
                            return Err(err("expected ')'", i));
                        }
                        i += 1;
                    }
                }
            } else if !had_coeff {
                return Err(err("expected a term", i));
            }
            p.add_term(exp, sign * coeff);
        }
        Ok(p)
    }
}
