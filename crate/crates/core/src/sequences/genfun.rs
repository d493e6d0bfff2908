//! Generating functions `N(t) / (1 - w t - t^2)` for second-order
//! recurrences `s_{n+2} = w s_{n+1} + s_n`.

use crate::rings::{render_ascending, Hyper, Int, Poly, Ring, RingError, Series};
use crate::spinor::HSpinor;

use super::{SeqKind, Sequences};

/// Degree-one numerator `constant + linear t` with spinor coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenNumerator<R> {
    pub constant: HSpinor<R>,
    pub linear: HSpinor<R>,
}

/// `s0 + (s1 - w s0) t`.
pub fn generating_numerator<R: Ring>(
    s0: &HSpinor<R>,
    s1: &HSpinor<R>,
    weight: &R,
) -> GenNumerator<R> {
    GenNumerator {
        constant: s0.clone(),
        linear: s1 - &s0.scale_base(weight),
    }
}

impl<R: Ring> GenNumerator<R> {
    pub fn new(constant: HSpinor<R>, linear: HSpinor<R>) -> Self {
        GenNumerator { constant, linear }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.linear.is_zero()
    }

    /// Renders as a spinor of ascending polynomials in `var`, e.g.
    /// `[h+(1+h)x; 2h+(1+h)x]`.
    pub fn render_in(&self, var: &str) -> String {
        let entry = |c: &Hyper<R>, l: &Hyper<R>| render_ascending(&[c.clone(), l.clone()], var);
        format!(
            "[{}; {}]",
            entry(&self.constant.s1, &self.linear.s1),
            entry(&self.constant.s2, &self.linear.s2)
        )
    }

    /// Coefficients of `t^0 ..= t^order` in `N(t) / (1 - w t - t^2)`.
    pub fn expand(&self, weight: &R, order: usize) -> Result<Vec<HSpinor<R>>, RingError> {
        let denominator = Series::new(
            vec![Hyper::one(), -Hyper::real(weight.clone()), -Hyper::one()],
            order,
        );
        let inv = denominator.inv()?;
        let entry = |c: &Hyper<R>, l: &Hyper<R>| {
            let num = Series::new(vec![c.clone(), l.clone()], order);
            &num * &inv
        };
        let first = entry(&self.constant.s1, &self.linear.s1);
        let second = entry(&self.constant.s2, &self.linear.s2);
        Ok(first
            .coeffs()
            .iter()
            .zip(second.coeffs())
            .map(|(a, b)| HSpinor::new(a.clone(), b.clone()))
            .collect())
    }
}

/// First index `k` at which the expansion of `numerator` disagrees with
/// `terms[k]`, or `None` if all supplied terms match.
pub fn first_series_mismatch<R: Ring>(
    numerator: &GenNumerator<R>,
    weight: &R,
    terms: &[HSpinor<R>],
) -> Result<Option<usize>, RingError> {
    let Some(order) = terms.len().checked_sub(1) else {
        return Ok(None);
    };
    let expansion = numerator.expand(weight, order)?;
    Ok(expansion.iter().zip(terms).position(|(a, b)| a != b))
}

impl Sequences {
    /// Recurrence weight `w` of a kind: `1` for integer kinds, `x` for
    /// polynomial ones.
    pub fn weight(&self, kind: SeqKind) -> Poly<Int> {
        if kind.is_polynomial() {
            Poly::x()
        } else {
            Poly::one()
        }
    }

    /// Numerator derived from the seeds of `kind`, over `Z[x]`.
    pub fn derived_numerator(&self, kind: SeqKind) -> GenNumerator<Poly<Int>> {
        generating_numerator(
            &self.poly_spinor(kind, 0),
            &self.poly_spinor(kind, 1),
            &self.weight(kind),
        )
    }
}

/// Expands the derived numerator of `kind` to order `order` and compares
/// every coefficient with the recurrence values.
pub fn genfun_series_check(seqs: &Sequences, kind: SeqKind, order: usize) -> bool {
    let terms: Vec<_> = (0..=order).map(|n| seqs.poly_spinor(kind, n)).collect();
    matches!(
        first_series_mismatch(&seqs.derived_numerator(kind), &seqs.weight(kind), &terms),
        Ok(None)
    )
}
