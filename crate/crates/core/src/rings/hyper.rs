use std::ops::{Add, Mul, Neg, Sub};

use super::{forward_ring_ops, join_terms, scaled_term, Render, Ring, RingError};

/// Hyperbolic (split-complex) number `u + v h` with `h^2 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyper<R> {
    pub u: R,
    pub v: R,
}

impl<R: Ring> Hyper<R> {
    pub fn new(u: R, v: R) -> Self {
        Hyper { u, v }
    }

    pub fn real(u: R) -> Self {
        Hyper { u, v: R::zero() }
    }

    /// The unit `h`.
    pub fn h() -> Self {
        Hyper {
            u: R::zero(),
            v: R::one(),
        }
    }

    pub fn from_ints(u: i64, v: i64) -> Self {
        Hyper::new(R::from_int(u), R::from_int(v))
    }

    /// `u + v h -> u - v h`.
    pub fn conj(&self) -> Self {
        Hyper::new(self.u.clone(), -self.v.clone())
    }

    pub fn scale(&self, k: &R) -> Self {
        Hyper::new(self.u.clone() * k.clone(), self.v.clone() * k.clone())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Hyper<S> {
        Hyper::new(f(&self.u), f(&self.v))
    }
}

/// `(u1 + v1 h)(u2 + v2 h) = (u1 u2 + v1 v2) + (u1 v2 + u2 v1) h`.
pub fn hyper_mul<R: Ring>(a: &Hyper<R>, b: &Hyper<R>) -> Hyper<R> {
    a * b
}

impl<'b, R: Ring> Add<&'b Hyper<R>> for &Hyper<R> {
    type Output = Hyper<R>;

    fn add(self, rhs: &'b Hyper<R>) -> Hyper<R> {
        Hyper::new(
            self.u.clone() + rhs.u.clone(),
            self.v.clone() + rhs.v.clone(),
        )
    }
}

impl<'b, R: Ring> Sub<&'b Hyper<R>> for &Hyper<R> {
    type Output = Hyper<R>;

    fn sub(self, rhs: &'b Hyper<R>) -> Hyper<R> {
        Hyper::new(
            self.u.clone() - rhs.u.clone(),
            self.v.clone() - rhs.v.clone(),
        )
    }
}

impl<'b, R: Ring> Mul<&'b Hyper<R>> for &Hyper<R> {
    type Output = Hyper<R>;

    fn mul(self, rhs: &'b Hyper<R>) -> Hyper<R> {
        Hyper::new(
            self.u.clone() * rhs.u.clone() + self.v.clone() * rhs.v.clone(),
            self.u.clone() * rhs.v.clone() + rhs.u.clone() * self.v.clone(),
        )
    }
}

impl<R: Ring> Neg for &Hyper<R> {
    type Output = Hyper<R>;

    fn neg(self) -> Hyper<R> {
        Hyper::new(-self.u.clone(), -self.v.clone())
    }
}

forward_ring_ops!(impl[R: Ring] Hyper<R>);

impl<R: Ring> Render for Hyper<R> {
    fn render(&self) -> String {
        let mut terms = Vec::new();
        if !self.u.is_zero() {
            terms.push(self.u.render());
        }
        if !self.v.is_zero() {
            terms.push(scaled_term(&self.v, "h"));
        }
        join_terms(terms)
    }

    fn is_atomic(&self) -> bool {
        match (self.u.is_zero(), self.v.is_zero()) {
            (_, true) => self.u.is_atomic(),
            (true, false) => self.v.is_atomic(),
            (false, false) => false,
        }
    }
}

impl<R: Ring> Ring for Hyper<R> {
    fn zero() -> Self {
        Hyper::new(R::zero(), R::zero())
    }

    fn one() -> Self {
        Hyper::real(R::one())
    }

    fn from_int(n: i64) -> Self {
        Hyper::real(R::from_int(n))
    }

    fn halve(&self) -> Result<Self, RingError> {
        Ok(Hyper::new(self.u.halve()?, self.v.halve()?))
    }

    fn inverse(&self) -> Option<Self> {
        let n = self.u.clone() * self.u.clone() - self.v.clone() * self.v.clone();
        let inv = n.inverse()?;
        Some(self.conj().scale(&inv))
    }
}
