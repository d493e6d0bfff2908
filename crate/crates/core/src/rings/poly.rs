use std::ops::{Add, Mul, Neg, Sub};

use super::{forward_ring_ops, join_terms, scaled_term, Render, Ring, RingError};

/// Dense univariate polynomial in `x`, coefficients in ascending degree.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Poly {
            coeffs: vec![R::zero(), R::one()],
        }
    }

    /// `c * x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, k: &R) -> Self {
        self.map(|c| c.clone() * k.clone())
    }
}

/// Schoolbook product, canonicalized.
pub fn poly_mul<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> Poly<R> {
    p * q
}

/// Evaluates `p` at `a`.
pub fn poly_eval<R: Ring>(p: &Poly<R>, a: &R) -> R {
    p.eval(a)
}

impl<'b, R: Ring> Add<&'b Poly<R>> for &Poly<R> {
    type Output = Poly<R>;

    fn add(self, rhs: &'b Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'b, R: Ring> Sub<&'b Poly<R>> for &Poly<R> {
    type Output = Poly<R>;

    fn sub(self, rhs: &'b Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'b, R: Ring> Mul<&'b Poly<R>> for &Poly<R> {
    type Output = Poly<R>;

    fn mul(self, rhs: &'b Poly<R>) -> Poly<R> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly { coeffs: Vec::new() };
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;

    fn neg(self) -> Poly<R> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

forward_ring_ops!(impl[R: Ring] Poly<R>);

fn power_of_x(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "x".to_string(),
        _ => format!("x^{k}"),
    }
}

impl<R: Ring> Render for Poly<R> {
    /// Descending powers of `x`, e.g. `x^5+4x^3+3x`.
    fn render(&self) -> String {
        join_terms(
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| {
                    if k == 0 {
                        c.render()
                    } else {
                        scaled_term(c, &power_of_x(k))
                    }
                }),
        )
    }

    fn is_atomic(&self) -> bool {
        match self.coeffs.iter().filter(|c| !c.is_zero()).count() {
            0 => true,
            1 => self.coeffs.last().is_some_and(|c| c.is_atomic()),
            _ => false,
        }
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        Self::constant(R::one())
    }

    fn from_int(n: i64) -> Self {
        Self::constant(R::from_int(n))
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn halve(&self) -> Result<Self, RingError> {
        Ok(Poly::new(
            self.coeffs
                .iter()
                .map(|c| c.halve())
                .collect::<Result<_, _>>()?,
        ))
    }

    fn inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => c.inverse().map(Self::constant),
            _ => None,
        }
    }
}
