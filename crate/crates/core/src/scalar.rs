//! Exact scalars: arbitrary-precision rationals or residues modulo an odd prime.
//!
//! Rational mode is the certified mode. Prime-field mode exists for fast
//! screening runs only.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default prime for screening runs.
pub const DEFAULT_SCREEN_PRIME: u32 = 32003;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScalarMode {
    Rational,
    PrimeField(u32),
}

impl ScalarMode {
    /// Validated prime-field mode; `p` must be an odd prime below 2^31.
    pub fn prime_field(p: u32) -> Result<Self> {
        if !(3..(1 << 31)).contains(&p) || p.is_multiple_of(2) || !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not an odd prime below 2^31")));
        }
        Ok(ScalarMode::PrimeField(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            ScalarMode::Rational => 0,
            ScalarMode::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            ScalarMode::Rational => Scalar::Q(BigRational::zero()),
            ScalarMode::PrimeField(p) => Scalar::Fp(0, *p),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            ScalarMode::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            ScalarMode::PrimeField(p) => Scalar::Fp(v.rem_euclid(*p as i64) as u32, *p),
        }
    }

    /// Image of a rational in this mode. Fails when the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        match self {
            ScalarMode::Rational => Ok(Scalar::Q(q.clone())),
            ScalarMode::PrimeField(p) => {
                let pb = BigInt::from(*p);
                let num = q.numer().mod_floor(&pb).to_u32().unwrap();
                let den = q.denom().mod_floor(&pb).to_u32().unwrap();
                if den == 0 {
                    return Err(Error::ModeUnsupported(format!("denominator divisible by {p}")));
                }
                Ok(Scalar::Fp(mul_mod(num, inv_mod(den, *p), *p), *p))
            }
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        self.from_rational(&BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn label(&self) -> String {
        match self {
            ScalarMode::Rational => "QQ".to_string(),
            ScalarMode::PrimeField(p) => format!("FP:{p}"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= p as u64 {
        if (p as u64).is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat; p is prime.
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// An exact scalar. Rationals are kept in lowest terms with positive denominator
/// (guaranteed by `BigRational`); residues lie in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp(u32, u32),
}

impl Scalar {
    pub fn mode(&self) -> ScalarMode {
        match self {
            Scalar::Q(_) => ScalarMode::Rational,
            Scalar::Fp(_, p) => ScalarMode::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp(v, _) => *v == 1,
        }
    }

    pub fn same_mode(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Q(_), Scalar::Q(_)) => true,
            (Scalar::Fp(_, p), Scalar::Fp(_, q)) => p == q,
            _ => false,
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        if !self.same_mode(other) {
            return Err(Error::ModeMismatch);
        }
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        if !self.same_mode(other) {
            return Err(Error::ModeMismatch);
        }
        Ok(self * other)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp(v, p) => Scalar::Fp(inv_mod(*v, *p), *p),
        })
    }

    /// `self / other`; panics on division by zero.
    pub fn div(&self, other: &Scalar) -> Scalar {
        self * &other.inv().expect("division by zero scalar")
    }

    /// Reduction of a rational value into `F_p`; `None` if the denominator vanishes.
    pub fn reduce_mod(&self, p: u32) -> Option<Scalar> {
        match self {
            Scalar::Q(q) => ScalarMode::PrimeField(p).from_rational(q).ok(),
            Scalar::Fp(_, _) => Some(self.clone()),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::Fp(..) => None,
        }
    }

    /// True for strictly negative rationals; residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_negative(),
            Scalar::Fp(..) => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp(v, _) => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(_) => write!(f, "{self}"),
            Scalar::Fp(v, p) => write!(f, "{v} mod {p}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp(a, p), Scalar::Fp(b, q)) if p == q => {
                let s = *a as u64 + *b as u64;
                Scalar::Fp((s % *p as u64) as u32, *p)
            }
            _ => panic!("scalar mode mismatch"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp(a, p), Scalar::Fp(b, q)) if p == q => {
                let s = *a as u64 + *p as u64 - *b as u64;
                Scalar::Fp((s % *p as u64) as u32, *p)
            }
            _ => panic!("scalar mode mismatch"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp(a, p), Scalar::Fp(b, q)) if p == q => Scalar::Fp(mul_mod(*a, *b, *p), *p),
            _ => panic!("scalar mode mismatch"),
        }
    }
}

impl<'a> std::ops::Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        if rhs.is_one() {
            self.clone()
        } else {
            Scalar::div(self, rhs)
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp(0, p) => Scalar::Fp(0, *p),
            Scalar::Fp(a, p) => Scalar::Fp(p - a, *p),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let q = ScalarMode::Rational.from_ratio(6, -4).unwrap();
        assert_eq!(q.to_string(), "-3/2");
    }

    #[test]
    fn prime_field_validation() {
        assert!(ScalarMode::prime_field(2).is_err());
        assert!(ScalarMode::prime_field(9).is_err());
        assert!(ScalarMode::prime_field(32003).is_ok());
    }

    #[test]
    fn fp_arithmetic() {
        let m = ScalarMode::prime_field(7).unwrap();
        assert_eq!(&m.from_i64(3) * &m.from_i64(5), m.one());
        assert_eq!(&m.from_i64(3) - &m.from_i64(5), m.from_i64(5));
        assert_eq!(m.from_ratio(1, 2).unwrap(), m.from_i64(4));
        assert!(m.from_ratio(1, 7).is_err());
    }

    #[test]
    fn mode_mismatch_is_reported() {
        let a = ScalarMode::Rational.one();
        let b = ScalarMode::PrimeField(7).one();
        assert_eq!(a.try_add(&b), Err(Error::ModeMismatch));
    }
}
