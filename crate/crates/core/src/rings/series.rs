use std::ops::{Add, Mul, Neg, Sub};

use super::{join_terms, scaled_term, Ring, RingError};

/// Default truncation order for generating-function checks.
pub const DEFAULT_ORDER: usize = 32;

/// Power series in `t` known modulo `t^(order+1)`.
///
/// Always stores exactly `order + 1` coefficients. Binary operations on
/// series of different orders truncate to the smaller one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series<R> {
    coeffs: Vec<R>,
    order: usize,
}

impl<R: Ring> Series<R> {
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        Series { coeffs, order }
    }

    pub fn constant(c: R, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &R {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order)].to_vec(), order)
    }

    /// Multiplicative inverse modulo `t^(order+1)`.
    pub fn inv(&self) -> Result<Self, RingError> {
        let c0_inv = self.coeffs[0]
            .inverse()
            .ok_or_else(|| RingError::NonUnitConstantTerm(self.coeffs[0].render()))?;
        let mut out: Vec<R> = Vec::with_capacity(self.order + 1);
        out.push(c0_inv.clone());
        for k in 1..=self.order {
            let mut acc = R::zero();
            for j in 1..=k {
                acc = acc + self.coeffs[j].clone() * out[k - j].clone();
            }
            out.push(-(acc * c0_inv.clone()));
        }
        Ok(Series {
            coeffs: out,
            order: self.order,
        })
    }

    /// Ascending rendering in the variable `var`, e.g. `h+(1+h)t`.
    pub fn render_in(&self, var: &str) -> String {
        render_ascending(&self.coeffs, var)
    }
}

/// Renders coefficients as an ascending polynomial in `var`.
pub(crate) fn render_ascending<R: Ring>(coeffs: &[R], var: &str) -> String {
    join_terms(
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.render(),
                1 => scaled_term(c, var),
                _ => scaled_term(c, &format!("{var}^{k}")),
            }),
    )
}

/// Series inverse of a series with unit constant term.
pub fn series_inv<R: Ring>(s: &Series<R>) -> Result<Series<R>, RingError> {
    s.inv()
}

impl<'b, R: Ring> Add<&'b Series<R>> for &Series<R> {
    type Output = Series<R>;

    fn add(self, rhs: &'b Series<R>) -> Series<R> {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order)
            .map(|k| self.coeffs[k].clone() + rhs.coeffs[k].clone())
            .collect();
        Series { coeffs, order }
    }
}

impl<'b, R: Ring> Sub<&'b Series<R>> for &Series<R> {
    type Output = Series<R>;

    fn sub(self, rhs: &'b Series<R>) -> Series<R> {
        self + &(-rhs)
    }
}

impl<'b, R: Ring> Mul<&'b Series<R>> for &Series<R> {
    type Output = Series<R>;

    fn mul(self, rhs: &'b Series<R>) -> Series<R> {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order)
            .map(|k| {
                (0..=k).fold(R::zero(), |acc, j| {
                    acc + self.coeffs[j].clone() * rhs.coeffs[k - j].clone()
                })
            })
            .collect();
        Series { coeffs, order }
    }
}

impl<R: Ring> Neg for &Series<R> {
    type Output = Series<R>;

    fn neg(self) -> Series<R> {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            order: self.order,
        }
    }
}

crate::rings::forward_ring_ops!(impl[R: Ring] Series<R>);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{Hyper, Int};

    fn s(c: &[i64], order: usize) -> Series<Int> {
        Series::new(c.iter().map(|&v| Int::from(v)).collect(), order)
    }

    /// Long division of 1 by `den`, coefficient by coefficient, written
    /// without the `inv` recursion.
    fn long_divide_one(den: &[i64], order: usize) -> Vec<i64> {
        let mut rem = vec![0i64; order + 1];
        rem[0] = 1;
        let mut q = Vec::new();
        for k in 0..=order {
            let c = rem[k] / den[0];
            q.push(c);
            for (j, d) in den.iter().enumerate() {
                if k + j <= order {
                    rem[k + j] -= c * d;
                }
            }
        }
        q
    }

    #[test]
    fn inverse_examples() {
        let oracle = long_divide_one(&[1, -1, -1], 5);
        assert_eq!(oracle, vec![1, 1, 2, 3, 5, 8]);
        assert_eq!(series_inv(&s(&[1, -1, -1], 5)).unwrap(), s(&oracle, 5));
        assert_eq!(series_inv(&s(&[1], 4)).unwrap(), s(&[1], 4));
        assert_eq!(series_inv(&s(&[1, -1], 3)).unwrap(), s(&[1, 1, 1, 1], 3));
        assert_eq!(
            series_inv(&s(&[-1, 1], 3)).unwrap(),
            s(&[-1, -1, -1, -1], 3)
        );
    }

    #[test]
    fn non_unit_constant() {
        assert!(matches!(
            series_inv(&s(&[2, 1], 3)),
            Err(RingError::NonUnitConstantTerm(_))
        ));
        assert!(series_inv(&s(&[0, 1], 3)).is_err());
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = s(&[1, 2, 3, 4], 3);
        let b = s(&[1, 1], 1);
        assert_eq!((&a + &b).order(), 1);
        assert_eq!(&a * &b, s(&[1, 3], 1));
    }

    #[test]
    fn render_ascending_hyper() {
        let coeffs = vec![Hyper::<Int>::h(), Hyper::from_ints(1, 1)];
        assert_eq!(render_ascending(&coeffs, "x"), "h+(1+h)x");
        let coeffs = vec![Hyper::<Int>::from_ints(2, 3), Hyper::from_ints(-1, 1)];
        assert_eq!(render_ascending(&coeffs, "x"), "2+3h+(-1+h)x");
        assert_eq!(s(&[0, 0, -2], 2).render_in("t"), "-2t^2");
    }
}
