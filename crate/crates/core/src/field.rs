//! Coefficient fields.
//!
//! Everything above this module is generic over [`Field`], which extends the
//! `num-traits` numeric tower with exact inversion and a few conversions the
//! algebra layer needs. Two families are provided: arbitrary-precision
//! rationals ([`Rational`]) and prime fields [`Fp<P>`] with a compile-time
//! modulus.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Rem, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use rand::Rng;

/// Arbitrary-precision rational numbers.
pub type Rational = BigRational;

/// An exact, commutative field usable as polynomial coefficients.
pub trait Field:
    Num
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Clone
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Characteristic of the field; `0` for the rationals.
    const CHARACTERISTIC: u64;

    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    fn from_i64(v: i64) -> Self;

    /// Image of a rational number, `None` when the denominator vanishes.
    fn from_rational(r: &Rational) -> Option<Self>;

    /// Human-readable field name, e.g. `QQ` or `GF(32003)`.
    fn name() -> String;

    /// A pseudo-random element. Over the rationals this draws small integers.
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Integer representative when the element is an integer (finite fields:
    /// the canonical residue in `[0, p)`).
    fn to_integer(&self) -> Option<BigInt>;

    /// Rational representative (finite fields: the canonical residue).
    fn to_rational(&self) -> Rational;

    /// Element with canonical index `i` for enumerating a finite field.
    fn from_index(i: u64) -> Self {
        Self::from_i64(i as i64)
    }

    fn is_finite() -> bool {
        Self::CHARACTERISTIC != 0
    }

    fn pow_u64(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

impl Field for BigRational {
    const CHARACTERISTIC: u64 = 0;

    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_rational(r: &Rational) -> Option<Self> {
        Some(r.clone())
    }

    fn name() -> String {
        "QQ".to_string()
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::from_i64(rng.gen_range(-9..=9))
    }

    fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| num_rational::Ratio::to_integer(self))
    }

    fn to_rational(&self) -> Rational {
        self.clone()
    }
}

/// Prime field `Z/PZ` with `P < 2^31`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub const MODULUS: u32 = P;

    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl<const P: u32> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Prints the symmetric representative so that small negative integers
/// read naturally.
impl<const P: u32> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 > P / 2 {
            write!(f, "-{}", P - self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        let s = self.0 as u64 + o.0 as u64;
        Fp(if s >= P as u64 { s - P as u64 } else { s } as u32)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        if self.0 >= o.0 {
            Fp(self.0 - o.0)
        } else {
            Fp(self.0 + (P - o.0))
        }
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    #[inline]
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u64 * o.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.inv()
    }
}

impl<const P: u32> Rem for Fp<P> {
    type Output = Self;
    fn rem(self, o: Self) -> Self {
        assert!(o.0 != 0, "remainder by zero");
        Fp(0)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<const P: u32> AddAssign for Fp<P> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<const P: u32> SubAssign for Fp<P> {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl<const P: u32> MulAssign for Fp<P> {
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> Num for Fp<P> {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        i64::from_str_radix(s, radix).map(Fp::new)
    }
}

impl<const P: u32> FromStr for Fp<P> {
    type Err = std::num::ParseIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim().parse::<i64>().map(Fp::new)
    }
}

impl<const P: u32> Field for Fp<P> {
    const CHARACTERISTIC: u64 = P as u64;

    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero in GF({P})");
        // extended Euclid on i64
        let (mut a, mut b) = (self.0 as i64, P as i64);
        let (mut x0, mut x1) = (1i64, 0i64);
        while b != 0 {
            let q = a / b;
            (a, b) = (b, a - q * b);
            (x0, x1) = (x1, x0 - q * x1);
        }
        Fp::new(x0)
    }

    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }

    fn from_rational(r: &Rational) -> Option<Self> {
        let p = BigInt::from(P);
        let num = r.numer().mod_floor(&p).to_i64()?;
        let den = r.denom().mod_floor(&p).to_i64()?;
        if den == 0 {
            None
        } else {
            Some(Fp::new(num) / Fp::new(den))
        }
    }

    fn name() -> String {
        format!("GF({P})")
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp(rng.gen_range(0..P))
    }

    fn to_integer(&self) -> Option<BigInt> {
        Some(BigInt::from(self.0))
    }

    fn to_rational(&self) -> Rational {
        Rational::from_integer(BigInt::from(self.0))
    }

    fn from_index(i: u64) -> Self {
        Fp((i % P as u64) as u32)
    }
}

/// Parses a coefficient literal `n` or `a/b` into the field.
pub fn parse_coefficient<F: Field>(text: &str) -> Option<F> {
    let r = parse_rational(text)?;
    F::from_rational(&r)
}

pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            (!b.is_zero()).then(|| BigRational::new(a, b))
        }
        None => text.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// True when `c` prints without a leading minus sign.
pub fn is_display_positive<F: Field>(c: &F) -> bool {
    !c.to_string().starts_with('-')
}

/// Absolute value of a rational, used when clearing contents.
pub fn rational_abs(r: &Rational) -> Rational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    type F = Fp<32003>;

    #[test]
    fn inverse_round_trips() {
        for v in [1i64, 2, 3, 31999, 16001, -5] {
            let a = F::from_i64(v);
            assert_eq!(a * a.inv(), F::one());
        }
    }

    #[test]
    fn rational_reduction() {
        let half = parse_rational("1/2").unwrap();
        let h = F::from_rational(&half).unwrap();
        assert_eq!(h * F::from_i64(2), F::one());
        let bad = BigRational::new(BigInt::from(1), BigInt::from(32003));
        assert!(F::from_rational(&bad).is_none());
    }

    #[test]
    fn display_uses_symmetric_residue() {
        assert_eq!(F::from_i64(-3).to_string(), "-3");
        assert_eq!(F::from_i64(7).to_string(), "7");
    }
}
