//! Binet closed forms `s_n = A alpha^n + B beta^n` with coefficients in a
//! quadratic extension.

use crate::rings::{Discriminant, Int, Poly, Quad, Rat, Ring, Sqrt5, SqrtX2Plus4};
use crate::spinor::HSpinor;

use super::{SeqError, SeqKind, Sequences};

/// Coefficients of a Binet form together with the roots they belong to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinetCoeffs<R, D> {
    pub a: HSpinor<Quad<R, D>>,
    pub b: HSpinor<Quad<R, D>>,
    pub alpha: Quad<R, D>,
    pub beta: Quad<R, D>,
}

fn embed<R: Ring, D: Discriminant<R>>(s: &HSpinor<R>) -> HSpinor<Quad<R, D>> {
    s.map(|r| Quad::rational(r.clone()))
}

fn check_roots<R: Ring, D: Discriminant<R>>(
    alpha: &Quad<R, D>,
    beta: &Quad<R, D>,
) -> Result<(), SeqError> {
    if alpha - beta == Quad::generator() {
        Ok(())
    } else {
        Err(SeqError::BadRoots)
    }
}

type SpinorPair<R, D> = (HSpinor<Quad<R, D>>, HSpinor<Quad<R, D>>);
type QuadPair<R, D> = (Quad<R, D>, Quad<R, D>);

/// The division-free pair `(s1 - beta s0, s1 - alpha s0)`, so that
/// `c s_n = P alpha^n - Q beta^n`.
pub fn cleared_coeffs<R: Ring, D: Discriminant<R>>(
    s0: &HSpinor<R>,
    s1: &HSpinor<R>,
    alpha: &Quad<R, D>,
    beta: &Quad<R, D>,
) -> Result<SpinorPair<R, D>, SeqError> {
    check_roots(alpha, beta)?;
    let (e0, e1) = (embed(s0), embed(s1));
    Ok((&e1 - &e0.scale_base(beta), &e1 - &e0.scale_base(alpha)))
}

/// Solves the seed system at `n = 0, 1`:
/// `A = (s1 - beta s0) / c`, `B = (alpha s0 - s1) / c` with `c = alpha - beta`.
pub fn binet_coeffs<R: Ring, D: Discriminant<R>>(
    s0: &HSpinor<R>,
    s1: &HSpinor<R>,
    alpha: &Quad<R, D>,
    beta: &Quad<R, D>,
) -> Result<BinetCoeffs<R, D>, SeqError> {
    let (p, q) = cleared_coeffs(s0, s1, alpha, beta)?;
    let inv_c = Quad::<R, D>::generator()
        .inverse()
        .ok_or(SeqError::NotInvertible)?;
    Ok(BinetCoeffs {
        a: p.scale_base(&inv_c),
        b: -q.scale_base(&inv_c),
        alpha: alpha.clone(),
        beta: beta.clone(),
    })
}

/// Scalar version of [`binet_coeffs`].
pub fn scalar_binet_coeffs<R: Ring, D: Discriminant<R>>(
    s0: &R,
    s1: &R,
    alpha: &Quad<R, D>,
    beta: &Quad<R, D>,
) -> Result<QuadPair<R, D>, SeqError> {
    let c = binet_coeffs(
        &super::scalar_spinor(s0.clone()),
        &super::scalar_spinor(s1.clone()),
        alpha,
        beta,
    )?;
    Ok((c.a.s1.u, c.b.s1.u))
}

fn project<R: Ring, D: Discriminant<R>>(
    s: &HSpinor<Quad<R, D>>,
    n: usize,
) -> Result<HSpinor<R>, SeqError> {
    let parts = [&s.s1.u, &s.s1.v, &s.s2.u, &s.s2.v];
    if parts.iter().any(|q| !q.y.is_zero()) {
        return Err(SeqError::ResidualIrrational(n));
    }
    Ok(s.map(|q| q.x.clone()))
}

/// `A alpha^n + B beta^n`, required to be free of the generator `c`.
pub fn binet_eval<R: Ring, D: Discriminant<R>>(
    coeffs: &BinetCoeffs<R, D>,
    n: usize,
) -> Result<HSpinor<R>, SeqError> {
    let sum = &coeffs.a.scale_base(&coeffs.alpha.pow(n as u64))
        + &coeffs.b.scale_base(&coeffs.beta.pow(n as u64));
    project(&sum, n)
}

/// Checks `c s_n = (s1 - beta s0) alpha^n - (s1 - alpha s0) beta^n` for each
/// supplied term without dividing by `c`. Returns the first failing index.
pub fn binet_cleared_mismatch<R: Ring, D: Discriminant<R>>(
    s0: &HSpinor<R>,
    s1: &HSpinor<R>,
    alpha: &Quad<R, D>,
    beta: &Quad<R, D>,
    terms: impl IntoIterator<Item = HSpinor<R>>,
) -> Result<Option<usize>, SeqError> {
    let (p, q) = cleared_coeffs(s0, s1, alpha, beta)?;
    let c = Quad::<R, D>::generator();
    let mut alpha_n = Quad::one();
    let mut beta_n = Quad::one();
    for (n, term) in terms.into_iter().enumerate() {
        let lhs = embed(&term).scale_base(&c);
        let rhs = &p.scale_base(&alpha_n) - &q.scale_base(&beta_n);
        if lhs != rhs {
            return Ok(Some(n));
        }
        alpha_n = alpha_n * alpha;
        beta_n = beta_n * beta;
    }
    Ok(None)
}

fn to_rat(s: &HSpinor<Int>) -> HSpinor<Rat> {
    s.map(|c| Rat::from_integer(c.clone()))
}

fn to_rat_poly(s: &HSpinor<Poly<Int>>) -> HSpinor<Poly<Rat>> {
    s.map(|p| p.map(|c| Rat::from_integer(c.clone())))
}

/// Division-free Binet check for `n = 0..=n_max`. Polynomial kinds work in
/// `Q[x][c]` with `c^2 = x^2 + 4`; integer kinds in `Q[c]` with `c^2 = 5`.
pub fn binet_check_poly(seqs: &Sequences, kind: SeqKind, n_max: usize) -> bool {
    let outcome = if kind.is_polynomial() {
        let (alpha, beta) =
            Quad::<Poly<Rat>, SqrtX2Plus4>::char_roots(&Poly::x()).expect("halving over Q[x]");
        let term = |n| to_rat_poly(&seqs.poly_spinor(kind, n));
        binet_cleared_mismatch(&term(0), &term(1), &alpha, &beta, (0..=n_max).map(term))
    } else {
        let (alpha, beta) = Quad::<Rat, Sqrt5>::char_roots(&Rat::one()).expect("halving over Q");
        let term = |n| to_rat(&seqs.int_spinor(kind, n));
        binet_cleared_mismatch(&term(0), &term(1), &alpha, &beta, (0..=n_max).map(term))
    };
    matches!(outcome, Ok(None))
}

/// Binet coefficients of an integer-valued kind over `Q(sqrt 5)`.
pub fn golden_coeffs(seqs: &Sequences, kind: SeqKind) -> Result<BinetCoeffs<Rat, Sqrt5>, SeqError> {
    let (alpha, beta) = Quad::<Rat, Sqrt5>::char_roots(&Rat::one())?;
    binet_coeffs(
        &to_rat(&seqs.int_spinor(kind, 0)),
        &to_rat(&seqs.int_spinor(kind, 1)),
        &alpha,
        &beta,
    )
}

pub(crate) fn rat_spinor(s: &HSpinor<Int>) -> HSpinor<Rat> {
    to_rat(s)
}

pub(crate) fn rat_poly_spinor(s: &HSpinor<Poly<Int>>) -> HSpinor<Poly<Rat>> {
    to_rat_poly(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{rat, Hyper};

    type Q5 = Quad<Rat, Sqrt5>;

    fn roots() -> (Q5, Q5) {
        Q5::char_roots(&Rat::one()).unwrap()
    }

    fn q(x: (i64, i64), y: (i64, i64)) -> Q5 {
        Q5::new(rat(x.0, x.1), rat(y.0, y.1))
    }

    /// Solves `A + B = s0`, `A alpha + B beta = s1` by Cramer's rule in
    /// `Q(sqrt 5)`, independently of `binet_coeffs`.
    fn cramer(s0: &Q5, s1: &Q5) -> (Q5, Q5) {
        let (alpha, beta) = roots();
        let det_inv = (&beta - &alpha).inverse().unwrap();
        let a = (s0 * &beta - s1.clone()) * &det_inv;
        let b = (s1 - &(s0 * &alpha)) * &det_inv;
        (a, b)
    }

    #[test]
    fn fibonacci_scalar_seeds() {
        let (alpha, beta) = roots();
        let (a, b) = scalar_binet_coeffs(&Rat::zero(), &Rat::one(), &alpha, &beta).unwrap();
        assert_eq!(a, q((0, 1), (1, 5)));
        assert_eq!(b, q((0, 1), (-1, 5)));
        assert_eq!((a, b), cramer(&Q5::zero(), &Q5::one()));
    }

    #[test]
    fn fsh_seed_coefficients() {
        let seqs = Sequences::new();
        let c = golden_coeffs(&seqs, SeqKind::Fsh).unwrap();
        // 1/sqrt5 + h (3 + sqrt5)/(2 sqrt5) = sqrt5/5 + h (1/2 + 3 sqrt5/10)
        let a1 = Hyper::new(q((0, 1), (1, 5)), q((1, 2), (3, 10)));
        // 1/sqrt5 + h (2 + sqrt5)/sqrt5 = sqrt5/5 + h (1 + 2 sqrt5/5)
        let a2 = Hyper::new(q((0, 1), (1, 5)), q((1, 1), (2, 5)));
        assert_eq!(c.a, HSpinor::new(a1, a2));
        for entry in 0..2 {
            for part in 0..2 {
                let pick = |s: &HSpinor<Q5>| {
                    let h = if entry == 0 { &s.s1 } else { &s.s2 };
                    if part == 0 {
                        h.u.clone()
                    } else {
                        h.v.clone()
                    }
                };
                let s0 = pick(&to_rat(&seqs.fsh(0)).map(|r| Q5::rational(r.clone())));
                let s1 = pick(&to_rat(&seqs.fsh(1)).map(|r| Q5::rational(r.clone())));
                let (a, b) = cramer(&s0, &s1);
                assert_eq!(pick(&c.a), a);
                assert_eq!(pick(&c.b), b);
            }
        }
    }

    #[test]
    fn zero_seeds() {
        let (alpha, beta) = roots();
        let z = HSpinor::<Rat>::zero();
        let c = binet_coeffs(&z, &z, &alpha, &beta).unwrap();
        assert!(c.a.is_zero() && c.b.is_zero());
    }

    #[test]
    fn eval_reproduces_recurrence() {
        let seqs = Sequences::new();
        let fsh = golden_coeffs(&seqs, SeqKind::Fsh).unwrap();
        assert_eq!(
            binet_eval(&fsh, 0).unwrap(),
            to_rat(&HSpinor::from_ints(0, 1, 0, 2))
        );
        assert_eq!(
            binet_eval(&fsh, 10).unwrap(),
            to_rat(&HSpinor::from_ints(55, 144, 55, 233))
        );
        let lsh = golden_coeffs(&seqs, SeqKind::Lsh).unwrap();
        assert_eq!(binet_eval(&lsh, 7).unwrap(), to_rat(&seqs.lsh(7)));
    }

    #[test]
    fn residue_detected() {
        let (alpha, beta) = roots();
        let mut c = golden_coeffs(&Sequences::new(), SeqKind::Fsh).unwrap();
        c.a.s1.u = c.a.s1.u + Q5::generator();
        assert!(matches!(
            binet_eval(&c, 1),
            Err(SeqError::ResidualIrrational(1))
        ));
        assert_eq!(c.alpha, alpha);
        assert_eq!(c.beta, beta);
    }

    #[test]
    fn bad_roots_and_non_invertible() {
        let (alpha, beta) = roots();
        let z = HSpinor::<Rat>::zero();
        assert_eq!(binet_coeffs(&z, &z, &beta, &alpha), Err(SeqError::BadRoots));
        let x = Poly::<Rat>::x();
        let (pa, pb) = Quad::<Poly<Rat>, SqrtX2Plus4>::char_roots(&x).unwrap();
        let zp = HSpinor::<Poly<Rat>>::zero();
        assert_eq!(
            binet_coeffs(&zp, &zp, &pa, &pb),
            Err(SeqError::NotInvertible)
        );
    }

    #[test]
    fn cleared_polynomial_check() {
        let seqs = Sequences::new();
        assert!(binet_check_poly(&seqs, SeqKind::FshPoly, 16));
        assert!(binet_check_poly(&seqs, SeqKind::LshPoly, 16));
        assert!(binet_check_poly(&seqs, SeqKind::FshPoly, 0));
        assert!(binet_check_poly(&seqs, SeqKind::Fib, 30));
        assert!(binet_check_poly(&seqs, SeqKind::Lsh, 30));
    }

    #[test]
    fn cleared_check_rejects_wrong_terms() {
        let seqs = Sequences::new();
        let (alpha, beta) = roots();
        let s0 = to_rat(&seqs.fsh(0));
        let s1 = to_rat(&seqs.fsh(1));
        // the n = 3 slot carries FSH_4 instead of FSH_3
        let terms = (0..5).map(|n| to_rat(&seqs.fsh(n + usize::from(n == 3))));
        assert_eq!(
            binet_cleared_mismatch(&s0, &s1, &alpha, &beta, terms).unwrap(),
            Some(3)
        );
    }
}
