//! Exact coefficient rings.
//!
//! Everything in the crate is generic over [`Ring`]: a commutative ring with
//! structural equality, a partial exact halving, and a partial unit inverse.
//! Values are kept in canonical form so that identity checking is plain `==`.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

mod hyper;
mod poly;
mod quad;
mod series;

pub use hyper::{hyper_mul, Hyper};
pub use poly::{poly_eval, poly_mul, Poly};
pub use quad::{quad_mul, Discriminant, Quad, Sqrt5, SqrtX2Plus4};
pub(crate) use series::render_ascending;
pub use series::{series_inv, Series, DEFAULT_ORDER};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;
/// Canonical rational number (reduced, positive denominator).
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("value {0} is not exactly divisible by 2")]
    NonHalvable(String),
    #[error("constant term {0} is not a unit")]
    NonUnitConstantTerm(String),
}

/// Commutative ring contract shared by every coefficient type.
pub trait Ring:
    Clone
    + PartialEq
    + Eq
    + Debug
    + Send
    + Sync
    + Render
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Returns `s` with `s + s == self`.
    fn halve(&self) -> Result<Self, RingError>;

    /// Multiplicative inverse when `self` is a unit.
    fn inverse(&self) -> Option<Self>;

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// Canonical text rendering.
pub trait Render {
    fn render(&self) -> String;

    /// True when the rendering is a single term, so it can be written in
    /// front of a unit symbol without parentheses.
    fn is_atomic(&self) -> bool;
}

/// Renders `coeff` followed by the unit symbol `unit`, e.g. `2h`, `-x^2`,
/// `(1+h)t`.
pub(crate) fn scaled_term<R: Ring>(coeff: &R, unit: &str) -> String {
    if coeff.is_one() {
        unit.to_string()
    } else if (-coeff.clone()).is_one() {
        format!("-{unit}")
    } else if coeff.is_atomic() {
        format!("{}{unit}", coeff.render())
    } else {
        format!("({}){unit}", coeff.render())
    }
}

/// Joins already-rendered terms with `+`, letting leading minus signs act as
/// the separator. An empty list renders as `0`.
pub(crate) fn join_terms<I: IntoIterator<Item = String>>(terms: I) -> String {
    let mut out = String::new();
    for t in terms {
        if !out.is_empty() && !t.starts_with('-') {
            out.push('+');
        }
        out.push_str(&t);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl Render for Int {
    fn render(&self) -> String {
        self.to_string()
    }

    fn is_atomic(&self) -> bool {
        true
    }
}

impl Ring for Int {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn halve(&self) -> Result<Self, RingError> {
        let (q, r) = self.div_rem(&BigInt::from(2));
        if Zero::is_zero(&r) {
            Ok(q)
        } else {
            Err(RingError::NonHalvable(self.to_string()))
        }
    }

    fn inverse(&self) -> Option<Self> {
        if One::is_one(&self.abs()) {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl Render for Rat {
    fn render(&self) -> String {
        if One::is_one(self.denom()) {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }

    fn is_atomic(&self) -> bool {
        true
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn halve(&self) -> Result<Self, RingError> {
        Ok(self / BigRational::from_integer(BigInt::from(2)))
    }

    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Builds a rational from a numerator and a nonzero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact halving, the `exact_halve` operation of the ring contract.
pub fn exact_halve<R: Ring>(r: &R) -> Result<R, RingError> {
    r.halve()
}

/// Generates owned/borrowed operator forwarding for a type whose
/// `&a op &b` impls are written by hand.
macro_rules! forward_ring_ops {
    (impl[$($gen:tt)*] $ty:ty) => {
        impl<$($gen)*> ::std::ops::Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl<'b, $($gen)*> ::std::ops::Add<&'b $ty> for $ty {
            type Output = $ty;
            fn add(self, rhs: &'b $ty) -> $ty {
                &self + rhs
            }
        }
        impl<$($gen)*> ::std::ops::Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl<'b, $($gen)*> ::std::ops::Sub<&'b $ty> for $ty {
            type Output = $ty;
            fn sub(self, rhs: &'b $ty) -> $ty {
                &self - rhs
            }
        }
        impl<$($gen)*> ::std::ops::Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
        impl<'b, $($gen)*> ::std::ops::Mul<&'b $ty> for $ty {
            type Output = $ty;
            fn mul(self, rhs: &'b $ty) -> $ty {
                &self * rhs
            }
        }
        impl<$($gen)*> ::std::ops::Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }
    };
}
pub(crate) use forward_ring_ops;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halve_int() {
        assert_eq!(Int::from(6).halve().unwrap(), Int::from(3));
        assert_eq!(Int::from(0).halve().unwrap(), Int::from(0));
        assert_eq!(Int::from(-8).halve().unwrap(), Int::from(-4));
        assert!(matches!(
            Int::from(7).halve(),
            Err(RingError::NonHalvable(_))
        ));
        assert!(Int::from(-7).halve().is_err());
    }

    #[test]
    fn halve_rat() {
        assert_eq!(exact_halve(&rat(7, 1)).unwrap(), rat(7, 2));
        assert_eq!(exact_halve(&rat(1, 3)).unwrap(), rat(1, 6));
    }

    #[test]
    fn rat_canonical() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &Int::from(-3));
        assert_eq!(r.denom(), &Int::from(2));
        assert_eq!(r.render(), "-3/2");
        assert_eq!(rat(4, 2).render(), "2");
    }

    #[test]
    fn int_units() {
        assert_eq!(Int::from(-1).inverse(), Some(Int::from(-1)));
        assert_eq!(Int::from(2).inverse(), None);
        assert_eq!(rat(2, 3).inverse(), Some(rat(3, 2)));
        assert_eq!(<Rat as Ring>::zero().inverse(), None);
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(Int::from(3).pow(0), Int::from(1));
        assert_eq!(Int::from(3).pow(5), Int::from(243));
        assert_eq!(
            Int::from(2).pow(100),
            Int::from(2).pow(50) * Int::from(2).pow(50)
        );
    }

    #[test]
    fn join_and_scale() {
        assert_eq!(join_terms(Vec::<String>::new()), "0");
        assert_eq!(
            join_terms(["1".into(), "-2h".into(), "3e".into()]),
            "1-2h+3e"
        );
        assert_eq!(scaled_term(&Int::from(1), "h"), "h");
        assert_eq!(scaled_term(&Int::from(-1), "h"), "-h");
        assert_eq!(scaled_term(&Int::from(-3), "h"), "-3h");
        assert_eq!(scaled_term(&rat(1, 2), "i"), "1/2i");
    }
}
