//! Field elements for the two supported base fields.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The base field every computation is carried out over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    #[default]
    Rationals,
    PrimeField(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    /// The prime field of order `p`; fails unless `p` is prime.
    pub fn prime(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 {
            return Err(Error::InvalidField(format!("modulus {p} is too large")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar(Repr::Q(BigRational::from_integer(BigInt::from(n)))),
            FieldSpec::PrimeField(p) => Scalar(Repr::Fp {
                v: n.rem_euclid(p as i64) as u64,
                p,
            }),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar(Repr::Q(BigRational::from_integer(n.clone()))),
            FieldSpec::PrimeField(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar(Repr::Fp {
                    v: r.to_u64().unwrap_or(0),
                    p,
                })
            }
        }
    }

    /// `num / den` in this field; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        let d = self.from_bigint(den);
        match d.inv() {
            Some(di) => Ok(&self.from_bigint(num) * &di),
            None => Err(Error::InvalidField(format!(
                "denominator {den} is zero in {self}"
            ))),
        }
    }

    /// Parses `n` or `n/d`.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::InvalidField(format!("cannot parse scalar `{s}`"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                self.from_ratio(&n, &d)
            }
            None => Ok(self.from_bigint(&BigInt::from_str(s).map_err(|_| bad())?)),
        }
    }

    /// Small deterministic nonzero scalars used as probing values.
    pub fn probe_values(&self, count: usize) -> Vec<Scalar> {
        let limit = match self {
            FieldSpec::Rationals => count,
            FieldSpec::PrimeField(p) => count.min((*p - 1) as usize),
        };
        (1..=limit as i64).map(|k| self.from_i64(k)).collect()
    }

    /// All field elements, when the field is finite.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => Some((0..*p as i64).map(|k| self.from_i64(k)).collect()),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q`, `q`, `F5`, `f5`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = t.strip_prefix('F').or_else(|| t.strip_prefix('f')) {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::InvalidField(format!("unknown field `{s}`")))?;
            return FieldSpec::prime(p);
        }
        Err(Error::InvalidField(format!("unknown field `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

/// An element of a [`FieldSpec`]. Arithmetic between elements of different
/// fields is a logic error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

fn inv_mod(a: u64, p: u64) -> u64 {
    // p prime, a != 0: a^(p-2)
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * a as u128) % p as u128) as u64;
        }
        a = ((a as u128 * a as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match &self.0 {
            Repr::Q(_) => FieldSpec::Rationals,
            Repr::Fp { p, .. } => FieldSpec::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Q(q) => q.is_zero(),
            Repr::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Q(q) => q.is_one(),
            Repr::Fp { v, .. } => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Q(q) => Scalar(Repr::Q(q.recip())),
            Repr::Fp { v, p } => Scalar(Repr::Fp {
                v: inv_mod(*v, *p),
                p: *p,
            }),
        })
    }

    pub fn pow(&self, e: u64) -> Scalar {
        match &self.0 {
            Repr::Q(q) => Scalar(Repr::Q(num_traits::pow(q.clone(), e as usize))),
            Repr::Fp { v, p } => Scalar(Repr::Fp {
                v: pow_mod(*v, e, *p),
                p: *p,
            }),
        }
    }

    /// The rational value, if this is an element of Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Q(q) => Some(q),
            Repr::Fp { .. } => None,
        }
    }

    /// Canonical integer representative in `0..p` for prime-field elements.
    pub fn as_residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Q(_) => None,
            Repr::Fp { v, .. } => Some(*v),
        }
    }

    /// Integer value for elements of Q with denominator one, or residues.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Q(q) if q.is_integer() => q.to_integer().to_i64(),
            Repr::Q(_) => None,
            Repr::Fp { v, .. } => Some(*v as i64),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Q(q) => q.is_negative(),
            Repr::Fp { .. } => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Q(q) => write!(f, "{q}"),
            Repr::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Q(a), Repr::Q(b)) => Scalar(Repr::Q(a + b)),
            (Repr::Fp { v: a, p }, Repr::Fp { v: b, p: q }) if p == q => Scalar(Repr::Fp {
                v: ((*a as u128 + *b as u128) % *p as u128) as u64,
                p: *p,
            }),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Q(a), Repr::Q(b)) => Scalar(Repr::Q(a - b)),
            (Repr::Fp { v: a, p }, Repr::Fp { v: b, p: q }) if p == q => Scalar(Repr::Fp {
                v: ((*a as u128 + *p as u128 - *b as u128) % *p as u128) as u64,
                p: *p,
            }),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Q(a), Repr::Q(b)) => Scalar(Repr::Q(a * b)),
            (Repr::Fp { v: a, p }, Repr::Fp { v: b, p: q }) if p == q => Scalar(Repr::Fp {
                v: ((*a as u128 * *b as u128) % *p as u128) as u64,
                p: *p,
            }),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        #[allow(clippy::suspicious_arithmetic_impl)]
        let q = self * &inv;
        q
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Q(a) => Scalar(Repr::Q(-a)),
            Repr::Fp { v, p } => Scalar(Repr::Fp {
                v: (p - v) % p,
                p: *p,
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut self.0, &rhs.0) {
            (Repr::Q(a), Repr::Q(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut self.0, &rhs.0) {
            (Repr::Q(a), Repr::Q(b)) => *a -= b,
            _ => *self = &*self - rhs,
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}
