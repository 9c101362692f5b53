//! Exact scalars over the rationals and over prime fields GF(p).
//!
//! Every [`Scalar`] carries its [`FieldSpec`]; binary operations between
//! scalars of different fields are rejected. The checked methods
//! (`checked_add`, ...) return a [`FieldError`]; the operator impls panic on
//! a mismatch and are meant for code that has already validated its inputs,
//! such as the entries of a [`crate::linalg::Matrix`].

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a supported prime (need 2 <= p < 2^32, p prime)")]
    NotPrime(u64),
    #[error("no primitive {n}-th root of unity in {field}")]
    NoSuchRoot { field: FieldSpec, n: u64 },
    #[error("cannot parse {text:?} as a scalar of {field}: {reason}")]
    Parse {
        text: String,
        field: FieldSpec,
        reason: String,
    },
}

/// Either the rationals or GF(p) for a prime `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    // 0 encodes the rationals
    p: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    Rational,
    Prime,
}

impl FieldSpec {
    pub const RATIONAL: FieldSpec = FieldSpec { p: 0 };

    /// GF(p); `p` is checked for primality by trial division.
    pub fn prime(p: u64) -> Result<FieldSpec, FieldError> {
        if !(2..(1 << 32)).contains(&p) || !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldSpec { p })
    }

    pub fn kind(&self) -> FieldKind {
        if self.p == 0 {
            FieldKind::Rational
        } else {
            FieldKind::Prime
        }
    }

    pub fn is_rational(&self) -> bool {
        self.p == 0
    }

    /// The modulus for GF(p), `None` for the rationals.
    pub fn modulus(&self) -> Option<u64> {
        (self.p != 0).then_some(self.p)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.p {
            0 => Scalar(Repr::Rat(BigRational::from_integer(BigInt::from(v)))),
            p => Scalar(Repr::Mod {
                v: v.rem_euclid(p as i64) as u64,
                p,
            }),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self.p {
            0 => Scalar(Repr::Rat(BigRational::from_integer(v.clone()))),
            p => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar(Repr::Mod {
                    v: r.to_u64().expect("residue fits in u64"),
                    p,
                })
            }
        }
    }

    /// `num/den` in this field; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match self.p {
            0 => Ok(Scalar(Repr::Rat(BigRational::new(num.clone(), den.clone())))),
            _ => self.from_bigint(num).checked_div(&self.from_bigint(den)),
        }
    }

    /// Parses the textual scalar syntax: `a` or `a/b` with decimal integers
    /// and an optional leading minus. Prime-field input is reduced modulo p.
    pub fn parse(&self, text: &str) -> Result<Scalar, FieldError> {
        let err = |reason: &str| FieldError::Parse {
            text: text.to_string(),
            field: *self,
            reason: reason.to_string(),
        };
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (t, None),
        };
        let parse_int = |s: &str, allow_sign: bool| -> Result<BigInt, FieldError> {
            let digits = if allow_sign {
                s.strip_prefix('-').unwrap_or(s)
            } else {
                s
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("expected decimal integer"));
            }
            s.parse::<BigInt>().map_err(|_| err("expected decimal integer"))
        };
        let n = parse_int(num, true)?;
        match den {
            None => Ok(self.from_bigint(&n)),
            Some(d) => {
                let d = parse_int(d, false)?;
                self.from_ratio(&n, &d).map_err(|_| err("zero denominator"))
            }
        }
    }

    /// All elements of a prime field in residue order; `None` over the rationals.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        let p = self.modulus()?;
        Some((0..p).map(|v| Scalar(Repr::Mod { v, p })).collect())
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.p {
            0 => write!(f, "Q"),
            p => write!(f, "GF({p})"),
        }
    }
}

impl FieldSpec {
    /// The command-line and file spelling: `Q` or `prime:p`.
    pub fn tag(&self) -> String {
        match self.p {
            0 => "Q".into(),
            p => format!("prime:{p}"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = FieldError;

    /// Accepts `Q`, `rational`, `prime:p`, `GF(p)` and a bare prime `p`.
    fn from_str(s: &str) -> Result<FieldSpec, FieldError> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") || s.eq_ignore_ascii_case("rational") {
            return Ok(FieldSpec::RATIONAL);
        }
        let digits = s
            .strip_prefix("prime:")
            .or_else(|| s.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')))
            .unwrap_or(s);
        let p = digits.parse::<u64>().map_err(|e| FieldError::Parse {
            text: s.into(),
            field: FieldSpec::RATIONAL,
            reason: format!("not a field name: {e}"),
        })?;
        FieldSpec::prime(p)
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum FieldRepr {
    Rational,
    Prime { p: u64 },
}

#[derive(serde::Deserialize)]
#[serde(untagged)]
enum FieldInput {
    Object(FieldRepr),
    Name(String),
}

/// Serialized as `{"kind":"rational"}` or `{"kind":"prime","p":7}`; the
/// string spellings accepted by `FromStr` also deserialize.
impl serde::Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.p {
            0 => FieldRepr::Rational,
            p => FieldRepr::Prime { p },
        }
        .serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<FieldSpec, D::Error> {
        match FieldInput::deserialize(d)? {
            FieldInput::Object(FieldRepr::Rational) => Ok(FieldSpec::RATIONAL),
            FieldInput::Object(FieldRepr::Prime { p }) => FieldSpec::prime(p).map_err(serde::de::Error::custom),
            FieldInput::Name(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let e = (a as i64).extended_gcd(&(p as i64));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(p as i64) as u64
}

/// An exact field element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rat(BigRational),
    Mod { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match &self.0 {
            Repr::Rat(_) => FieldSpec::RATIONAL,
            Repr::Mod { p, .. } => FieldSpec { p: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rat(r) => r.is_zero(),
            Repr::Mod { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rat(r) => r.is_one(),
            Repr::Mod { v, .. } => *v == 1,
        }
    }

    /// The rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rat(r) => Some(r),
            Repr::Mod { .. } => None,
        }
    }

    /// The canonical residue, if this is a prime-field scalar.
    pub fn residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Mod { v, .. } => Some(*v),
            Repr::Rat(_) => None,
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<(), FieldError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.same_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.same_field(other)?;
        Ok(self.add_unchecked(&other.neg_ref()))
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Rat(r) => Scalar(Repr::Rat(r.recip())),
            Repr::Mod { v, p } => Scalar(Repr::Mod {
                v: inv_mod(*v, *p),
                p: *p,
            }),
        })
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Scalar, FieldError> {
        if exp < 0 {
            return self.inv()?.pow(-exp);
        }
        Ok(match &self.0 {
            Repr::Rat(r) => Scalar(Repr::Rat(num_traits::pow(r.clone(), exp as usize))),
            Repr::Mod { v, p } => Scalar(Repr::Mod {
                v: pow_mod(*v, exp as u64, *p),
                p: *p,
            }),
        })
    }

    /// Multiplicative order, or `None` for zero and for rationals other than ±1.
    pub fn multiplicative_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        match &self.0 {
            Repr::Rat(r) => {
                if r.is_one() {
                    Some(1)
                } else if (-r).is_one() {
                    Some(2)
                } else {
                    None
                }
            }
            Repr::Mod { v, p } => {
                let group = p - 1;
                let mut order = group;
                for q in prime_factors(group) {
                    while order % q == 0 && pow_mod(*v, order / q, *p) == 1 {
                        order /= q;
                    }
                }
                Some(order)
            }
        }
    }

    fn neg_ref(&self) -> Scalar {
        match &self.0 {
            Repr::Rat(r) => Scalar(Repr::Rat(-r)),
            Repr::Mod { v, p } => Scalar(Repr::Mod {
                v: if *v == 0 { 0 } else { p - v },
                p: *p,
            }),
        }
    }

    fn add_unchecked(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a + b)),
            (Repr::Mod { v: a, p }, Repr::Mod { v: b, .. }) => Scalar(Repr::Mod { v: (a + b) % p, p: *p }),
            _ => unreachable!("field checked by caller"),
        }
    }

    fn mul_unchecked(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a * b)),
            (Repr::Mod { v: a, p }, Repr::Mod { v: b, .. }) => Scalar(Repr::Mod { v: a * b % p, p: *p }),
            _ => unreachable!("field checked by caller"),
        }
    }
}

/// A scalar of exact multiplicative order `n`.
///
/// Over GF(p) the result is `g^((p-1)/n)` for the smallest generator `g` of
/// the unit group; over the rationals only `n = 1` and `n = 2` succeed.
pub fn find_root_of_unity(field: FieldSpec, n: u64) -> Result<Scalar, FieldError> {
    let none = FieldError::NoSuchRoot { field, n };
    match field.modulus() {
        _ if n == 0 => Err(none),
        None => match n {
            1 => Ok(field.one()),
            2 => Ok(field.from_i64(-1)),
            _ => Err(none),
        },
        Some(p) => {
            let group = p - 1;
            if group % n != 0 {
                return Err(none);
            }
            let g = smallest_generator(p);
            Ok(Scalar(Repr::Mod {
                v: pow_mod(g, group / n, p),
                p,
            }))
        }
    }
}

fn smallest_generator(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let group = p - 1;
    let factors = prime_factors(group);
    (2..p)
        .find(|&g| factors.iter().all(|q| pow_mod(g, group / q, p) != 1))
        .expect("GF(p)^x is cyclic")
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rat(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Repr::Rat(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Repr::Mod { v, .. } => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rat(_) => write!(f, "{self}"),
            Repr::Mod { p, .. } => write!(f, "{self}_{p}"),
        }
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn expect_ok(r: Result<Scalar, FieldError>) -> Scalar {
    match r {
        Ok(v) => v,
        Err(e) => panic!("scalar arithmetic: {e}"),
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                expect_ok(self.$checked(rhs))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                expect_ok(self.$checked(&rhs))
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                expect_ok(self.$checked(rhs))
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        // in-place for rationals avoids reallocating the numerator
        match (&mut self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => *a += b,
            (Repr::Mod { v: a, p }, Repr::Mod { v: b, p: q }) if p == q => *a = (*a + b) % *p,
            _ => panic!(
                "scalar arithmetic: {}",
                FieldError::FieldMismatch(self.field(), rhs.field())
            ),
        }
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self += &rhs.neg_ref();
    }
}

impl Scalar {
    /// `self += a * b`, the inner step of every structure-constant contraction.
    pub fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut self.0, &a.0, &b.0) {
            (Repr::Mod { v, p }, Repr::Mod { v: x, p: px }, Repr::Mod { v: y, p: py }) if p == px && p == py => {
                *v = (*v + x * y % *p) % *p;
            }
            _ => *self += &(a * b),
        }
    }

    /// Sign of a rational scalar (used for canonical printing in reports).
    pub fn is_negative_rational(&self) -> bool {
        matches!(&self.0, Repr::Rat(r) if r.is_negative())
    }
}
