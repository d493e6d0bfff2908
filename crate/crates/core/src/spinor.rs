//! Hybrid spinors: two-component columns of hyperbolic numbers, the map
//! `chi` from hybrid numbers, the conjugation operators, and the `Q̂`
//! left-multiplication matrix.

use std::ops::{Add, Mul, Neg, Sub};

use crate::hybrid::{hybrid_mul, Hybrid};
use crate::rings::{Hyper, Render, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HSpinor<R> {
    pub s1: Hyper<R>,
    pub s2: Hyper<R>,
}

impl<R: Ring> HSpinor<R> {
    pub fn new(s1: Hyper<R>, s2: Hyper<R>) -> Self {
        HSpinor { s1, s2 }
    }

    /// `[u1 + v1 h; u2 + v2 h]` from integer parts.
    pub fn from_ints(u1: i64, v1: i64, u2: i64, v2: i64) -> Self {
        HSpinor::new(Hyper::from_ints(u1, v1), Hyper::from_ints(u2, v2))
    }

    pub fn zero() -> Self {
        HSpinor::new(Hyper::zero(), Hyper::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.s1.is_zero() && self.s2.is_zero()
    }

    pub fn entries(&self) -> [&Hyper<R>; 2] {
        [&self.s1, &self.s2]
    }

    /// Multiplies both entries by a hyperbolic scalar.
    pub fn scale(&self, k: &Hyper<R>) -> Self {
        HSpinor::new(&self.s1 * k, &self.s2 * k)
    }

    /// Multiplies both entries by a base-ring scalar.
    pub fn scale_base(&self, k: &R) -> Self {
        HSpinor::new(self.s1.scale(k), self.s2.scale(k))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> HSpinor<S> {
        HSpinor::new(self.s1.map(&f), self.s2.map(&f))
    }

    /// Applies `f` to each hyperbolic entry.
    pub fn map_entries<S: Ring>(&self, f: impl Fn(&Hyper<R>) -> Hyper<S>) -> HSpinor<S> {
        HSpinor::new(f(&self.s1), f(&self.s2))
    }
}

impl<'b, R: Ring> Add<&'b HSpinor<R>> for &HSpinor<R> {
    type Output = HSpinor<R>;

    fn add(self, o: &'b HSpinor<R>) -> HSpinor<R> {
        HSpinor::new(&self.s1 + &o.s1, &self.s2 + &o.s2)
    }
}

impl<'b, R: Ring> Sub<&'b HSpinor<R>> for &HSpinor<R> {
    type Output = HSpinor<R>;

    fn sub(self, o: &'b HSpinor<R>) -> HSpinor<R> {
        HSpinor::new(&self.s1 - &o.s1, &self.s2 - &o.s2)
    }
}

impl<R: Ring> Neg for &HSpinor<R> {
    type Output = HSpinor<R>;

    fn neg(self) -> HSpinor<R> {
        HSpinor::new(-&self.s1, -&self.s2)
    }
}

impl<R: Ring> Add for HSpinor<R> {
    type Output = HSpinor<R>;
    fn add(self, o: HSpinor<R>) -> HSpinor<R> {
        &self + &o
    }
}

impl<R: Ring> Sub for HSpinor<R> {
    type Output = HSpinor<R>;
    fn sub(self, o: HSpinor<R>) -> HSpinor<R> {
        &self - &o
    }
}

impl<R: Ring> Neg for HSpinor<R> {
    type Output = HSpinor<R>;
    fn neg(self) -> HSpinor<R> {
        -&self
    }
}

impl<R: Ring> Render for HSpinor<R> {
    /// `[u1+v1h; u2+v2h]`.
    fn render(&self) -> String {
        format!("[{}; {}]", self.s1.render(), self.s2.render())
    }

    fn is_atomic(&self) -> bool {
        true
    }
}

/// 2x2 matrix with hyperbolic entries. Entries commute, so `det` is the
/// ordinary determinant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpinorMat<R> {
    pub m11: Hyper<R>,
    pub m12: Hyper<R>,
    pub m21: Hyper<R>,
    pub m22: Hyper<R>,
}

impl<R: Ring> SpinorMat<R> {
    pub fn new(m11: Hyper<R>, m12: Hyper<R>, m21: Hyper<R>, m22: Hyper<R>) -> Self {
        SpinorMat { m11, m12, m21, m22 }
    }

    pub fn identity() -> Self {
        SpinorMat::new(Hyper::one(), Hyper::zero(), Hyper::zero(), Hyper::one())
    }

    /// `H = diag(1, -1)`.
    pub fn h_matrix() -> Self {
        SpinorMat::new(Hyper::one(), Hyper::zero(), Hyper::zero(), -Hyper::one())
    }

    pub fn det(&self) -> Hyper<R> {
        &self.m11 * &self.m22 - &self.m12 * &self.m21
    }

    pub fn column1(&self) -> HSpinor<R> {
        HSpinor::new(self.m11.clone(), self.m21.clone())
    }

    pub fn scale(&self, k: &Hyper<R>) -> Self {
        SpinorMat::new(&self.m11 * k, &self.m12 * k, &self.m21 * k, &self.m22 * k)
    }
}

impl<'b, R: Ring> Mul<&'b SpinorMat<R>> for &SpinorMat<R> {
    type Output = SpinorMat<R>;

    fn mul(self, o: &'b SpinorMat<R>) -> SpinorMat<R> {
        SpinorMat::new(
            &self.m11 * &o.m11 + &self.m12 * &o.m21,
            &self.m11 * &o.m12 + &self.m12 * &o.m22,
            &self.m21 * &o.m11 + &self.m22 * &o.m21,
            &self.m21 * &o.m12 + &self.m22 * &o.m22,
        )
    }
}

impl<R: Ring> Render for SpinorMat<R> {
    fn render(&self) -> String {
        format!(
            "[[{}, {}], [{}, {}]]",
            self.m11.render(),
            self.m12.render(),
            self.m21.render(),
            self.m22.render()
        )
    }

    fn is_atomic(&self) -> bool {
        true
    }
}

/// `chi(a + b i + c e + d h) = [a + h c; (c - b) + h d]`.
pub fn chi<R: Ring>(z: &Hybrid<R>) -> HSpinor<R> {
    HSpinor::new(
        Hyper::new(z.a.clone(), z.c.clone()),
        Hyper::new(z.c.clone() - z.b.clone(), z.d.clone()),
    )
}

/// Spinor of the conjugate hybrid number, `[a - h c; (b - c) - h d]`.
///
/// Needs the preimage: `chi` is injective but the conjugate is not a
/// function of the spinor entries alone in the form used here.
pub fn spinor_bar<R: Ring>(s: &HSpinor<R>, z: &Hybrid<R>) -> HSpinor<R> {
    debug_assert_eq!(*s, chi(z), "spinor_bar called with a mismatched preimage");
    chi(&z.conj())
}

/// Hyperbolic conjugate of each entry, `u + v h -> u - v h`.
pub fn spinor_star<R: Ring>(s: &HSpinor<R>) -> HSpinor<R> {
    HSpinor::new(s.s1.conj(), s.s2.conj())
}

/// Spinor conjugate `h H S*`: `[h (S*)1; -h (S*)2]`.
pub fn spinor_tilde<R: Ring>(s: &HSpinor<R>) -> HSpinor<R> {
    let star = spinor_star(s);
    let h = Hyper::h();
    HSpinor::new(&h * &star.s1, -(&h * &star.s2))
}

/// Mate `-H S*`: `[-(S*)1; (S*)2]`.
pub fn spinor_mate<R: Ring>(s: &HSpinor<R>) -> HSpinor<R> {
    let star = spinor_star(s);
    HSpinor::new(-star.s1, star.s2)
}

/// `Q̂(p) = [[a + h c, (b - c) + h d], [(c - b) + h d, a - h c]]`.
pub fn qhat<R: Ring>(z: &Hybrid<R>) -> SpinorMat<R> {
    SpinorMat::new(
        Hyper::new(z.a.clone(), z.c.clone()),
        Hyper::new(z.b.clone() - z.c.clone(), z.d.clone()),
        Hyper::new(z.c.clone() - z.b.clone(), z.d.clone()),
        Hyper::new(z.a.clone(), -z.c.clone()),
    )
}

/// Matrix-vector product over the hyperbolic numbers.
pub fn mat_apply<R: Ring>(m: &SpinorMat<R>, s: &HSpinor<R>) -> HSpinor<R> {
    HSpinor::new(
        &m.m11 * &s.s1 + &m.m12 * &s.s2,
        &m.m21 * &s.s1 + &m.m22 * &s.s2,
    )
}

/// The three spinors compared when auditing the printed product
/// correspondence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceReport<R> {
    /// `chi(p q)`.
    pub direct: HSpinor<R>,
    /// `Q̂(p) chi(q)`.
    pub left_regular: HSpinor<R>,
    /// `-h (Q̂(p) (H chi(q)))`.
    pub printed: HSpinor<R>,
}

impl<R: Ring> CorrespondenceReport<R> {
    pub fn left_regular_holds(&self) -> bool {
        self.direct == self.left_regular
    }

    pub fn printed_holds(&self) -> bool {
        self.direct == self.printed
    }
}

pub fn audit_product_correspondence<R: Ring>(
    p: &Hybrid<R>,
    q: &Hybrid<R>,
) -> CorrespondenceReport<R> {
    let chi_q = chi(q);
    let qp = qhat(p);
    let printed = mat_apply(&qp, &mat_apply(&SpinorMat::h_matrix(), &chi_q)).scale(&-Hyper::h());
    CorrespondenceReport {
        direct: chi(&hybrid_mul(p, q)),
        left_regular: mat_apply(&qp, &chi_q),
        printed,
    }
}
