//! Exact scalar fields: arbitrary-precision rationals and small prime fields.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// The rational numbers with arbitrary-precision numerator and denominator.
pub type Q = BigRational;

/// Failure to read a scalar from its textual form.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseScalarError {
    #[error("malformed scalar `{0}` (expected an integer or `p/q`)")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// An exact field in which all structure computations take place.
///
/// Implementations must be exact: equality is decidable and the field axioms
/// hold on the nose.  Values are immutable and cheap enough to clone.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(n: i64) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Characteristic of the field (0 for the rationals).
    fn characteristic() -> u64;
    /// Short name of the field, e.g. `Q` or `F_7`.
    fn field_name() -> String;
    /// Parse an integer `n` or a fraction `p/q`.
    fn parse(s: &str) -> Result<Self, ParseScalarError>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `(-1)^e` as a field element.
    fn sign(e: i64) -> Self {
        if e.rem_euclid(2) == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }

    /// `num / den`, or `None` when `den` vanishes in the field.
    fn ratio(num: i64, den: i64) -> Option<Self> {
        Self::from_i64(den).inv().map(|d| Self::from_i64(num) * d)
    }

    /// Exact quotient, `None` when dividing by zero.
    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }
}

fn split_fraction(s: &str) -> Result<(BigInt, BigInt), ParseScalarError> {
    let t = s.trim();
    let (p, q) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let num: BigInt = p
        .parse()
        .map_err(|_| ParseScalarError::Malformed(s.to_string()))?;
    let den: BigInt = q
        .parse()
        .map_err(|_| ParseScalarError::Malformed(s.to_string()))?;
    if den.is_zero() {
        return Err(ParseScalarError::ZeroDenominator(s.to_string()));
    }
    Ok((num, den))
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn characteristic() -> u64 {
        0
    }
    fn field_name() -> String {
        "Q".to_string()
    }
    fn parse(s: &str) -> Result<Self, ParseScalarError> {
        let (num, den) = split_fraction(s)?;
        Ok(BigRational::new(num, den))
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

/// The prime field `F_P`.  Intended for exhaustive enumeration in tests; the
/// modulus must be an odd prime below 2^32.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const CHECK: () = assert!(P > 2 && P < (1 << 32), "modulus must be an odd prime below 2^32");

    pub fn new(n: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::CHECK;
        Fp(n.rem_euclid(P as i64) as u64)
    }

    /// Canonical representative in `0..P`.
    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Fp(acc)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp((self.0 + o.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp((self.0 + P - o.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(self.0 * o.0 % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> AddAssign for Fp<P> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<const P: u64> SubAssign for Fp<P> {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl<const P: u64> MulAssign for Fp<P> {
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn zero() -> Self {
        Fp::new(0)
    }
    fn one() -> Self {
        Fp::new(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn from_i64(n: i64) -> Self {
        Fp::new(n)
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }
    fn characteristic() -> u64 {
        P
    }
    fn field_name() -> String {
        format!("F_{P}")
    }
    fn parse(s: &str) -> Result<Self, ParseScalarError> {
        let (num, den) = split_fraction(s)?;
        let m = BigInt::from(P);
        let reduce = |x: &BigInt| -> Self {
            let r = ((x % &m) + &m) % &m;
            let v: u64 = r.abs().try_into().expect("residue fits in u64");
            Fp::new(v as i64)
        };
        let d = reduce(&den);
        let inv = d
            .inv()
            .ok_or_else(|| ParseScalarError::ZeroDenominator(s.to_string()))?;
        Ok(reduce(&num) * inv)
    }
}
