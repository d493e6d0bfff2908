//! Fibonacci and Lucas numbers and polynomials, their hybrid numbers and
//! spinor sequences, Binet coefficients, generating-function numerators and
//! the Cassini determinant.

use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use thiserror::Error;

use crate::hybrid::Hybrid;
use crate::rings::{Hyper, Int, Poly, Rat, Render, Ring, RingError};
use crate::spinor::{chi, HSpinor, SpinorMat};

mod binet;
mod genfun;
mod identities;

pub use binet::golden_coeffs;
pub use binet::{
    binet_check_poly, binet_cleared_mismatch, binet_coeffs, binet_eval, cleared_coeffs,
    scalar_binet_coeffs, BinetCoeffs,
};
pub(crate) use binet::{rat_poly_spinor, rat_spinor};
pub use genfun::{first_series_mismatch, generating_numerator, genfun_series_check, GenNumerator};
pub use identities::{identity_lhs_rhs, IdentityKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("negative index {0}")]
    NegativeIndex(i64),
    #[error("unknown identity '{0}'")]
    UnknownIdentity(String),
    #[error("unknown sequence kind '{0}'")]
    UnknownKind(String),
    #[error("division by the extension generator is not possible over this ring")]
    NotInvertible,
    #[error("alpha - beta is not the extension generator")]
    BadRoots,
    #[error("irrational residue left at n = {0}")]
    ResidualIrrational(usize),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Converts a signed index, rejecting negatives.
pub fn index(n: i64) -> Result<usize, SeqError> {
    usize::try_from(n).map_err(|_| SeqError::NegativeIndex(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeqKind {
    Fib,
    Lucas,
    Fsh,
    Lsh,
    FshPoly,
    LshPoly,
}

impl SeqKind {
    pub const ALL: [SeqKind; 6] = [
        SeqKind::Fib,
        SeqKind::Lucas,
        SeqKind::Fsh,
        SeqKind::Lsh,
        SeqKind::FshPoly,
        SeqKind::LshPoly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeqKind::Fib => "fib",
            SeqKind::Lucas => "lucas",
            SeqKind::Fsh => "fsh",
            SeqKind::Lsh => "lsh",
            SeqKind::FshPoly => "fsh-poly",
            SeqKind::LshPoly => "lsh-poly",
        }
    }

    pub fn is_polynomial(self) -> bool {
        matches!(self, SeqKind::FshPoly | SeqKind::LshPoly)
    }
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeqKind {
    type Err = SeqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SeqKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| SeqError::UnknownKind(s.to_string()))
    }
}

/// One term of any of the sequence families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeqTerm {
    Int(Int),
    Poly(Poly<Int>),
    Spinor(HSpinor<Int>),
    PolySpinor(HSpinor<Poly<Int>>),
}

impl SeqTerm {
    pub fn render(&self) -> String {
        match self {
            SeqTerm::Int(v) => v.render(),
            SeqTerm::Poly(v) => v.render(),
            SeqTerm::Spinor(v) => v.render(),
            SeqTerm::PolySpinor(v) => v.render(),
        }
    }

    /// Renders the term with `x` replaced by `at`. Integer-valued terms do
    /// not depend on `x` and return `None`.
    pub fn render_at(&self, at: &Rat) -> Option<String> {
        let eval = |p: &Poly<Int>| p.map(|c| Rat::from_integer(c.clone())).eval(at);
        match self {
            SeqTerm::Poly(p) => Some(eval(p).render()),
            SeqTerm::PolySpinor(s) => Some(s.map(eval).render()),
            SeqTerm::Int(_) | SeqTerm::Spinor(_) => None,
        }
    }
}

/// Spinor with `s` as real part of the first entry and zero elsewhere; lets
/// scalar sequences share the spinor machinery.
pub fn scalar_spinor<R: Ring>(s: R) -> HSpinor<R> {
    HSpinor::new(Hyper::real(s), Hyper::zero())
}

/// Memoized generators. Each cache holds a prefix of its sequence and is
/// extended on demand under a lock, so one instance can be shared across
/// threads.
pub struct Sequences {
    fib: Mutex<Vec<Int>>,
    lucas: Mutex<Vec<Int>>,
    fib_poly: Mutex<Vec<Poly<Int>>>,
    lucas_poly: Mutex<Vec<Poly<Int>>>,
}

impl Default for Sequences {
    fn default() -> Self {
        Self::new()
    }
}

fn extend<T: Clone>(memo: &Mutex<Vec<T>>, n: usize, step: impl Fn(&T, &T) -> T) -> T {
    let mut v = memo.lock().expect("sequence cache poisoned");
    while v.len() <= n {
        let next = step(&v[v.len() - 1], &v[v.len() - 2]);
        v.push(next);
    }
    v[n].clone()
}

impl Sequences {
    pub fn new() -> Self {
        Sequences {
            fib: Mutex::new(vec![Int::from(0), Int::from(1)]),
            lucas: Mutex::new(vec![Int::from(2), Int::from(1)]),
            fib_poly: Mutex::new(vec![Poly::zero(), Poly::one()]),
            // L_1(x) = x, matching the listed terms 2, x, x^2+2, ...
            lucas_poly: Mutex::new(vec![Poly::from_int(2), Poly::x()]),
        }
    }

    pub fn fib(&self, n: usize) -> Int {
        extend(&self.fib, n, |a, b| a + b)
    }

    pub fn lucas(&self, n: usize) -> Int {
        extend(&self.lucas, n, |a, b| a + b)
    }

    /// `F_{n+1}(x) = x F_n(x) + F_{n-1}(x)`.
    pub fn fib_poly(&self, n: usize) -> Poly<Int> {
        extend(&self.fib_poly, n, |a, b| &Poly::x() * a + b)
    }

    pub fn lucas_poly(&self, n: usize) -> Poly<Int> {
        extend(&self.lucas_poly, n, |a, b| &Poly::x() * a + b)
    }

    /// `F_n + F_{n+1} i + F_{n+2} e + F_{n+3} h`.
    pub fn hybrid_fib(&self, n: usize) -> Hybrid<Int> {
        Hybrid::new(
            self.fib(n),
            self.fib(n + 1),
            self.fib(n + 2),
            self.fib(n + 3),
        )
    }

    pub fn hybrid_lucas(&self, n: usize) -> Hybrid<Int> {
        Hybrid::new(
            self.lucas(n),
            self.lucas(n + 1),
            self.lucas(n + 2),
            self.lucas(n + 3),
        )
    }

    pub fn hybrid_fib_poly(&self, n: usize) -> Hybrid<Poly<Int>> {
        Hybrid::new(
            self.fib_poly(n),
            self.fib_poly(n + 1),
            self.fib_poly(n + 2),
            self.fib_poly(n + 3),
        )
    }

    pub fn hybrid_lucas_poly(&self, n: usize) -> Hybrid<Poly<Int>> {
        Hybrid::new(
            self.lucas_poly(n),
            self.lucas_poly(n + 1),
            self.lucas_poly(n + 2),
            self.lucas_poly(n + 3),
        )
    }

    /// Hybrid Fibonacci spinor `chi(F_n + F_{n+1} i + F_{n+2} e + F_{n+3} h)`.
    pub fn fsh(&self, n: usize) -> HSpinor<Int> {
        chi(&self.hybrid_fib(n))
    }

    pub fn lsh(&self, n: usize) -> HSpinor<Int> {
        chi(&self.hybrid_lucas(n))
    }

    pub fn fsh_poly(&self, n: usize) -> HSpinor<Poly<Int>> {
        chi(&self.hybrid_fib_poly(n))
    }

    pub fn lsh_poly(&self, n: usize) -> HSpinor<Poly<Int>> {
        chi(&self.hybrid_lucas_poly(n))
    }

    pub fn term(&self, kind: SeqKind, n: usize) -> SeqTerm {
        match kind {
            SeqKind::Fib => SeqTerm::Int(self.fib(n)),
            SeqKind::Lucas => SeqTerm::Int(self.lucas(n)),
            SeqKind::Fsh => SeqTerm::Spinor(self.fsh(n)),
            SeqKind::Lsh => SeqTerm::Spinor(self.lsh(n)),
            SeqKind::FshPoly => SeqTerm::PolySpinor(self.fsh_poly(n)),
            SeqKind::LshPoly => SeqTerm::PolySpinor(self.lsh_poly(n)),
        }
    }

    /// Integer kinds as spinors (`fib`/`lucas` via [`scalar_spinor`]).
    pub(crate) fn int_spinor(&self, kind: SeqKind, n: usize) -> HSpinor<Int> {
        match kind {
            SeqKind::Fib => scalar_spinor(self.fib(n)),
            SeqKind::Lucas => scalar_spinor(self.lucas(n)),
            SeqKind::Fsh => self.fsh(n),
            SeqKind::Lsh => self.lsh(n),
            SeqKind::FshPoly | SeqKind::LshPoly => {
                panic!("{kind} is a polynomial sequence")
            }
        }
    }

    /// Any kind as a spinor over `Z[x]`; integer kinds are constants.
    pub(crate) fn poly_spinor(&self, kind: SeqKind, n: usize) -> HSpinor<Poly<Int>> {
        match kind {
            SeqKind::FshPoly => self.fsh_poly(n),
            SeqKind::LshPoly => self.lsh_poly(n),
            _ => self.int_spinor(kind, n).map(|c| Poly::constant(c.clone())),
        }
    }

    /// `Q_h` with columns `FSH_n` and `[(F_{n+1} - F_{n+2}) + h F_{n+3};
    /// F_n - h F_{n+2}]`.
    pub fn qh_matrix(&self, n: usize) -> SpinorMat<Int> {
        let f = |k| self.fib(n + k);
        SpinorMat::new(
            Hyper::new(f(0), f(2)),
            Hyper::new(f(1) - f(2), f(3)),
            Hyper::new(f(2) - f(1), f(3)),
            Hyper::new(f(0), -f(2)),
        )
    }

    /// Determinant of `Q_h` over the hyperbolic integers.
    pub fn cassini(&self, n: usize) -> Hyper<Int> {
        self.qh_matrix(n).det()
    }

    /// `-F_{2n+5} + 2 F_n^2`.
    pub fn cassini_closed_form(&self, n: usize) -> Int {
        let f = self.fib(n);
        Int::from(2) * &f * &f - self.fib(2 * n + 5)
    }
}
