//! Exact arithmetic in the cyclotomic field `K = Q(ξ)`, where `ξ` is a
//! primitive sixth root of unity (`ξ² = ξ − 1`, `ξ³ = −1`).
//!
//! Every element is stored as `r0 + r1·ξ` with both coordinates reduced
//! rationals, so structural equality is field equality. Rationals take an
//! inline `i64` fast path and only promote to arbitrary precision when an
//! intermediate result no longer fits.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed scalar literal `{0}`")]
    Parse(String),
}

/// A reduced rational number with a machine-word fast path.
///
/// Invariant: `Small(n, d)` has `d > 0`, `gcd(n, d) = 1` and neither field is
/// `i64::MIN`; `Big` is used only when the reduced value does not fit that
/// form. This makes the derived equality structural.
#[derive(Clone, Debug)]
pub enum Rat {
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl Rat {
    pub const ZERO: Rat = Rat::Small(0, 1);
    pub const ONE: Rat = Rat::Small(1, 1);

    pub fn int(n: i64) -> Rat {
        Rat::from_i128(n as i128, 1)
    }

    /// `n / d` for a nonzero denominator.
    pub fn new(n: i64, d: i64) -> Rat {
        assert!(d != 0, "zero denominator");
        Rat::from_i128(n as i128, d as i128)
    }

    fn from_i128(n: i128, d: i128) -> Rat {
        let (mut n, mut d) = (n, d);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        if n == 0 {
            return Rat::ZERO;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) if a != i64::MIN && b != i64::MIN => Rat::Small(a, b),
            _ => Rat::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    fn from_big(r: BigRational) -> Rat {
        // BigRational arithmetic keeps results reduced with positive denominator.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(a), Some(b)) if a != i64::MIN && b != i64::MIN => Rat::Small(a, b),
            _ => Rat::Big(Box::new(r)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rat::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rat::Small(n, _) => *n < 0,
            Rat::Big(b) => b.is_negative(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Rat::Small(n, d) => *n as f64 / *d as f64,
            Rat::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn neg(&self) -> Rat {
        match self {
            Rat::Small(n, d) => Rat::Small(-n, *d),
            Rat::Big(b) => Rat::from_big(-(**b).clone()),
        }
    }

    pub fn add(&self, o: &Rat) -> Rat {
        match (self, o) {
            (Rat::Small(0, _), _) => o.clone(),
            (_, Rat::Small(0, _)) => self.clone(),
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                if b == d {
                    Rat::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    Rat::from_i128(
                        *a as i128 * *d as i128 + *c as i128 * *b as i128,
                        *b as i128 * *d as i128,
                    )
                }
            }
            _ => Rat::from_big(self.to_big() + o.to_big()),
        }
    }

    pub fn sub(&self, o: &Rat) -> Rat {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Rat) -> Rat {
        match (self, o) {
            (Rat::Small(0, _), _) | (_, Rat::Small(0, _)) => Rat::ZERO,
            (Rat::Small(1, 1), _) => o.clone(),
            (_, Rat::Small(1, 1)) => self.clone(),
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                Rat::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rat::from_big(self.to_big() * o.to_big()),
        }
    }

    pub fn recip(&self) -> Result<Rat, ScalarError> {
        match self {
            Rat::Small(0, _) => Err(ScalarError::DivisionByZero),
            Rat::Small(n, d) => Ok(Rat::from_i128(*d as i128, *n as i128)),
            Rat::Big(b) => Ok(Rat::from_big(b.recip())),
        }
    }

    fn parse(s: &str) -> Option<Rat> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::from_big(BigRational::new(n, d)))
    }
}

impl PartialEq for Rat {
    fn eq(&self, o: &Rat) -> bool {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => a == c && b == d,
            (Rat::Big(x), Rat::Big(y)) => x == y,
            _ => false,
        }
    }
}
impl Eq for Rat {}

impl Hash for Rat {
    fn hash<H: Hasher>(&self, h: &mut H) {
        match self {
            Rat::Small(n, d) => {
                0u8.hash(h);
                n.hash(h);
                d.hash(h);
            }
            Rat::Big(b) => {
                1u8.hash(h);
                b.hash(h);
            }
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, o: &Rat) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Rat {
    fn cmp(&self, o: &Rat) -> Ordering {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&o.to_big()),
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(n, 1) => write!(f, "{n}"),
            Rat::Small(n, d) => write!(f, "{n}/{d}"),
            Rat::Big(b) if b.denom().is_one() => write!(f, "{}", b.numer()),
            Rat::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

/// An element `r0 + r1·ξ` of `K = Q(ξ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub r0: Rat,
    pub r1: Rat,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub const fn zero() -> Scalar {
        Scalar { r0: Rat::ZERO, r1: Rat::ZERO }
    }

    pub const fn one() -> Scalar {
        Scalar { r0: Rat::ONE, r1: Rat::ZERO }
    }

    /// The generator `ξ`.
    pub const fn xi() -> Scalar {
        Scalar { r0: Rat::ZERO, r1: Rat::ONE }
    }

    pub fn new(r0: Rat, r1: Rat) -> Scalar {
        Scalar { r0, r1 }
    }

    pub fn int(n: i64) -> Scalar {
        Scalar { r0: Rat::int(n), r1: Rat::ZERO }
    }

    pub fn rational(n: i64, d: i64) -> Scalar {
        Scalar { r0: Rat::new(n, d), r1: Rat::ZERO }
    }

    /// `a + b·ξ` with integer coordinates.
    pub fn from_ints(a: i64, b: i64) -> Scalar {
        Scalar { r0: Rat::int(a), r1: Rat::int(b) }
    }

    pub fn is_zero(&self) -> bool {
        self.r0.is_zero() && self.r1.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.r0.is_one() && self.r1.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.r1.is_zero()
    }

    /// Galois conjugate `ξ ↦ ξ⁻¹ = 1 − ξ`.
    pub fn conj(&self) -> Scalar {
        Scalar { r0: self.r0.add(&self.r1), r1: self.r1.neg() }
    }

    /// Field norm `N(a + bξ) = a² + ab + b²`.
    pub fn norm(&self) -> Rat {
        let (a, b) = (&self.r0, &self.r1);
        a.mul(a).add(&a.mul(b)).add(&b.mul(b))
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.r1.is_zero() {
            return Ok(Scalar { r0: self.r0.recip()?, r1: Rat::ZERO });
        }
        let n = self.norm().recip()?;
        let c = self.conj();
        Ok(Scalar { r0: c.r0.mul(&n), r1: c.r1.mul(&n) })
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &o.inv()?)
    }

    /// `self^k` for any integer `k` (negative powers need a nonzero base).
    pub fn pow(&self, k: i64) -> Scalar {
        let base = if k < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Scalar::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        acc
    }

    pub fn mul_rat(&self, r: &Rat) -> Scalar {
        Scalar { r0: self.r0.mul(r), r1: self.r1.mul(r) }
    }

    /// Complex embedding with `ξ ↦ e^{iπ/3}`.
    pub fn to_complex(&self) -> Complex64 {
        let h = 3f64.sqrt() / 2.0;
        let (a, b) = (self.r0.to_f64(), self.r1.to_f64());
        Complex64::new(a + 0.5 * b, h * b)
    }

    /// Canonical literal `p/q+r/s*x` (`x` stands for `ξ`).
    pub fn to_literal(&self) -> String {
        self.to_string()
    }

    pub fn parse_literal(s: &str) -> Result<Scalar, ScalarError> {
        s.parse()
    }
}

/// `ξ^k` for any integer `k`, reduced modulo 6.
pub fn xi_power(k: i64) -> Scalar {
    match k.rem_euclid(6) {
        0 => Scalar::from_ints(1, 0),
        1 => Scalar::from_ints(0, 1),
        2 => Scalar::from_ints(-1, 1),
        3 => Scalar::from_ints(-1, 0),
        4 => Scalar::from_ints(0, -1),
        _ => Scalar::from_ints(1, -1),
    }
}

fn mul_ref(x: &Scalar, y: &Scalar) -> Scalar {
    if x.r1.is_zero() {
        return y.mul_rat(&x.r0);
    }
    if y.r1.is_zero() {
        return x.mul_rat(&y.r0);
    }
    // (a + bξ)(c + dξ) = (ac − bd) + (ad + bc + bd)ξ
    let ac = x.r0.mul(&y.r0);
    let bd = x.r1.mul(&y.r1);
    let ad = x.r0.mul(&y.r1);
    let bc = x.r1.mul(&y.r0);
    Scalar { r0: ac.sub(&bd), r1: ad.add(&bc).add(&bd) }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar { r0: self.r0.add(&o.r0), r1: self.r1.add(&o.r1) }
    }
}
impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar { r0: self.r0.sub(&o.r0), r1: self.r1.sub(&o.r1) }
    }
}
impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        mul_ref(self, o)
    }
}
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        self.checked_div(o).expect("division by zero")
    }
}
impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { r0: self.r0.neg(), r1: self.r1.neg() }
    }
}
impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        if o.is_zero() {
            return;
        }
        self.r0 = self.r0.add(&o.r0);
        self.r1 = self.r1.add(&o.r1);
    }
}
impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        *self += &o;
    }
}
impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        self.r0 = self.r0.sub(&o.r0);
        self.r1 = self.r1.sub(&o.r1);
    }
}
impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = mul_ref(self, o);
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::int(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.r0.is_zero(), self.r1.is_zero()) {
            (_, true) => write!(f, "{}", self.r0),
            (true, false) => write!(f, "{}*x", self.r1),
            (false, false) => {
                if self.r1.is_negative() {
                    write!(f, "{}{}*x", self.r0, self.r1)
                } else {
                    write!(f, "{}+{}*x", self.r0, self.r1)
                }
            }
        }
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;

    /// Accepts sums of terms `p/q`, `p/q*x`, `x`, each optionally signed.
    fn from_str(s: &str) -> Result<Scalar, ScalarError> {
        let err = || ScalarError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = t.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'/' && bytes[i - 1] != b'*' {
                terms.push(&t[start..i]);
                start = i;
            }
        }
        terms.push(&t[start..]);
        let mut acc = Scalar::zero();
        for term in terms {
            let (neg, body) = match term.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, term.strip_prefix('+').unwrap_or(term)),
            };
            let (coef, is_xi) = if body == "x" {
                (Rat::ONE, true)
            } else if let Some(c) = body.strip_suffix("*x") {
                (Rat::parse(c).ok_or_else(err)?, true)
            } else {
                if body.contains('x') {
                    return Err(err());
                }
                (Rat::parse(body).ok_or_else(err)?, false)
            };
            let coef = if neg { coef.neg() } else { coef };
            if is_xi {
                acc.r1 = acc.r1.add(&coef);
            } else {
                acc.r0 = acc.r0.add(&coef);
            }
        }
        Ok(acc)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Which square root of `ξ − 1` plays the role of `θ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ThetaSign {
    #[default]
    Plus,
    Minus,
}

impl FromStr for ThetaSign {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plus" | "+" => Ok(ThetaSign::Plus),
            "minus" | "-" => Ok(ThetaSign::Minus),
            other => Err(format!("unknown theta sign `{other}` (expected plus or minus)")),
        }
    }
}

impl fmt::Display for ThetaSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ThetaSign::Plus => "plus",
            ThetaSign::Minus => "minus",
        })
    }
}

/// The constants `ξ`, `Λ = (ξ−1)/(ξ+1)` and `θ` (a square root of `ξ − 1`).
///
/// Because `ξ² = ξ − 1`, both `θ = ξ` and `θ = −ξ` already live in `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedConstants {
    pub xi: Scalar,
    pub lambda: Scalar,
    pub theta: Scalar,
    pub theta_sign: ThetaSign,
}

impl NamedConstants {
    pub fn new(theta_sign: ThetaSign) -> NamedConstants {
        let xi = Scalar::xi();
        let lambda = (&xi - &Scalar::one()) / (&xi + &Scalar::one());
        let theta = match theta_sign {
            ThetaSign::Plus => xi.clone(),
            ThetaSign::Minus => -&xi,
        };
        NamedConstants { xi, lambda, theta, theta_sign }
    }

    pub fn lambda_inv(&self) -> Scalar {
        self.lambda.inv().expect("Λ is nonzero")
    }

    pub fn theta_inv(&self) -> Scalar {
        self.theta.inv().expect("θ is nonzero")
    }
}

impl Default for NamedConstants {
    fn default() -> Self {
        NamedConstants::new(ThetaSign::Plus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_polynomial() {
        let x = Scalar::xi();
        assert_eq!(&x * &x, Scalar::from_ints(-1, 1));
        assert_eq!(x.pow(3), Scalar::int(-1));
        assert_eq!(x.pow(6), Scalar::one());
        assert_eq!(x.pow(-1), Scalar::from_ints(1, -1));
    }

    #[test]
    fn lambda_value() {
        let c = NamedConstants::default();
        assert_eq!(c.lambda, Scalar::new(Rat::new(-1, 3), Rat::new(2, 3)));
        assert_eq!(c.lambda_inv(), Scalar::from_ints(1, -2));
        assert_eq!(&c.theta * &c.theta, &c.xi - &Scalar::one());
    }

    #[test]
    fn literal_forms() {
        for (s, v) in [
            ("0", Scalar::zero()),
            ("-2/3", Scalar::rational(-2, 3)),
            ("1*x", Scalar::xi()),
            ("x", Scalar::xi()),
            ("1/2-3/4*x", Scalar::new(Rat::new(1, 2), Rat::new(-3, 4))),
        ] {
            assert_eq!(s.parse::<Scalar>().unwrap(), v);
        }
        assert_eq!(Scalar::new(Rat::new(1, 2), Rat::new(-3, 4)).to_string(), "1/2-3/4*x");
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("y".parse::<Scalar>().is_err());
    }

    #[test]
    fn big_promotion_and_demotion() {
        let big = Rat::int(i64::MAX - 1);
        let sq = big.mul(&big);
        assert!(matches!(sq, Rat::Big(_)));
        let back = sq.mul(&big.recip().unwrap());
        assert_eq!(back, big);
        assert!(matches!(back, Rat::Small(..)));
    }
}
