use std::fmt::Debug;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use super::{forward_ring_ops, join_terms, scaled_term, Poly, Rat, Render, Ring, RingError};

/// Fixes the value `D = c^2` of a quadratic extension at the type level.
pub trait Discriminant<R: Ring>:
    Clone + Copy + Debug + PartialEq + Eq + Default + Send + Sync + 'static
{
    fn value() -> R;
}

/// `c = sqrt(5)` over the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Hash)]
pub struct Sqrt5;

impl Discriminant<Rat> for Sqrt5 {
    fn value() -> Rat {
        Rat::from_int(5)
    }
}

/// `c = sqrt(x^2 + 4)` over rational polynomials in `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Hash)]
pub struct SqrtX2Plus4;

impl Discriminant<Poly<Rat>> for SqrtX2Plus4 {
    fn value() -> Poly<Rat> {
        Poly::from_ints(&[4, 0, 1])
    }
}

/// `x + y*c` with `c^2 = D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quad<R, D> {
    pub x: R,
    pub y: R,
    _d: PhantomData<D>,
}

impl<R: Ring, D: Discriminant<R>> Quad<R, D> {
    pub fn new(x: R, y: R) -> Self {
        Quad {
            x,
            y,
            _d: PhantomData,
        }
    }

    pub fn rational(x: R) -> Self {
        Self::new(x, R::zero())
    }

    /// The generator `c`.
    pub fn generator() -> Self {
        Self::new(R::zero(), R::one())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.x.clone(), -self.y.clone())
    }

    /// `q * conj(q) = x^2 - D y^2`.
    pub fn norm(&self) -> R {
        self.x.clone() * self.x.clone() - D::value() * self.y.clone() * self.y.clone()
    }

    /// The roots `(w + c)/2` and `(w - c)/2` of `t^2 - w t - 1`, valid when
    /// `D = w^2 + 4`.
    pub fn char_roots(weight: &R) -> Result<(Self, Self), RingError> {
        let half_w = weight.halve()?;
        let half_one = R::one().halve()?;
        Ok((
            Self::new(half_w.clone(), half_one.clone()),
            Self::new(half_w, -half_one),
        ))
    }
}

/// `(x1 + y1 c)(x2 + y2 c) = (x1 x2 + D y1 y2) + (x1 y2 + x2 y1) c`.
pub fn quad_mul<R: Ring, D: Discriminant<R>>(u: &Quad<R, D>, v: &Quad<R, D>) -> Quad<R, D> {
    u * v
}

impl<'b, R: Ring, D: Discriminant<R>> Add<&'b Quad<R, D>> for &Quad<R, D> {
    type Output = Quad<R, D>;

    fn add(self, rhs: &'b Quad<R, D>) -> Quad<R, D> {
        Quad::new(
            self.x.clone() + rhs.x.clone(),
            self.y.clone() + rhs.y.clone(),
        )
    }
}

impl<'b, R: Ring, D: Discriminant<R>> Sub<&'b Quad<R, D>> for &Quad<R, D> {
    type Output = Quad<R, D>;

    fn sub(self, rhs: &'b Quad<R, D>) -> Quad<R, D> {
        Quad::new(
            self.x.clone() - rhs.x.clone(),
            self.y.clone() - rhs.y.clone(),
        )
    }
}

impl<'b, R: Ring, D: Discriminant<R>> Mul<&'b Quad<R, D>> for &Quad<R, D> {
    type Output = Quad<R, D>;

    fn mul(self, rhs: &'b Quad<R, D>) -> Quad<R, D> {
        let x = self.x.clone() * rhs.x.clone() + D::value() * self.y.clone() * rhs.y.clone();
        let y = self.x.clone() * rhs.y.clone() + rhs.x.clone() * self.y.clone();
        Quad::new(x, y)
    }
}

impl<R: Ring, D: Discriminant<R>> Neg for &Quad<R, D> {
    type Output = Quad<R, D>;

    fn neg(self) -> Quad<R, D> {
        Quad::new(-self.x.clone(), -self.y.clone())
    }
}

forward_ring_ops!(impl[R: Ring, D: Discriminant<R>] Quad<R, D>);

impl<R: Ring, D: Discriminant<R>> Render for Quad<R, D> {
    /// `x+y*sqrt(D)`, e.g. `1/2+1/2sqrt(5)`.
    fn render(&self) -> String {
        let mut terms = Vec::new();
        if !self.x.is_zero() {
            terms.push(self.x.render());
        }
        if !self.y.is_zero() {
            terms.push(scaled_term(
                &self.y,
                &format!("sqrt({})", D::value().render()),
            ));
        }
        join_terms(terms)
    }

    fn is_atomic(&self) -> bool {
        match (self.x.is_zero(), self.y.is_zero()) {
            (_, true) => self.x.is_atomic(),
            (true, false) => self.y.is_atomic(),
            (false, false) => false,
        }
    }
}

impl<R: Ring, D: Discriminant<R>> Ring for Quad<R, D> {
    fn zero() -> Self {
        Self::new(R::zero(), R::zero())
    }

    fn one() -> Self {
        Self::new(R::one(), R::zero())
    }

    fn from_int(n: i64) -> Self {
        Self::rational(R::from_int(n))
    }

    fn halve(&self) -> Result<Self, RingError> {
        Ok(Self::new(self.x.halve()?, self.y.halve()?))
    }

    fn inverse(&self) -> Option<Self> {
        let inv_norm = self.norm().inverse()?;
        let c = self.conj();
        Some(Self::new(c.x * inv_norm.clone(), c.y * inv_norm))
    }
}
