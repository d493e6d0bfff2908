//! Both sides of the shift/convolution identities between the spinor
//! sequences, evaluated exactly. Callers compare.

use std::fmt;
use std::str::FromStr;

use crate::rings::{Int, Poly};

use super::{index, SeqError, SeqTerm, Sequences};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    /// `FSH_{n+2} - FSH_{n-2} = LSH_n`, `n >= 2`.
    FshShiftDifference,
    /// `5 FSH_n + LSH_n = 2 LSH_{n+1}`.
    FiveFshPlusLsh,
    /// `L_{n+1} FSH_n + L_n FSH_{n-1} = LSH_{2n}`.
    LucasWeightedFsh,
    /// `F_{n+1} FSH_n + F_n FSH_{n-1} = FSH_{2n}`.
    FibWeightedFsh,
    /// `LSH_n(x) = FSH_{n+1}(x) + FSH_{n-1}(x)`.
    LshPolyFromFshPoly,
    /// `LSH_n(x) = 2 FSH_{n+1}(x) - x FSH_n(x)`.
    LshPolyTwoFsh,
    /// `(x^2 + 4) FSH_n(x) = LSH_{n+1}(x) + (-1)^{n+1} LSH_{n-1}(x)`.
    DiscriminantFshPoly,
    /// `(x^2 + 4) FSH_n(x) = LSH_{n+1}(x) + LSH_{n-1}(x)`.
    DiscriminantFshPolyUnsigned,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 8] = [
        IdentityKind::FshShiftDifference,
        IdentityKind::FiveFshPlusLsh,
        IdentityKind::LucasWeightedFsh,
        IdentityKind::FibWeightedFsh,
        IdentityKind::LshPolyFromFshPoly,
        IdentityKind::LshPolyTwoFsh,
        IdentityKind::DiscriminantFshPoly,
        IdentityKind::DiscriminantFshPolyUnsigned,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::FshShiftDifference => "fsh-shift-difference",
            IdentityKind::FiveFshPlusLsh => "five-fsh-plus-lsh",
            IdentityKind::LucasWeightedFsh => "lucas-weighted-fsh",
            IdentityKind::FibWeightedFsh => "fib-weighted-fsh",
            IdentityKind::LshPolyFromFshPoly => "lsh-poly-from-fsh-poly",
            IdentityKind::LshPolyTwoFsh => "lsh-poly-two-fsh",
            IdentityKind::DiscriminantFshPoly => "discriminant-fsh-poly",
            IdentityKind::DiscriminantFshPolyUnsigned => "discriminant-fsh-poly-unsigned",
        }
    }

    /// Smallest admissible `n`.
    pub fn min_index(self) -> usize {
        match self {
            IdentityKind::FshShiftDifference => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityKind {
    type Err = SeqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| SeqError::UnknownIdentity(s.to_string()))
    }
}

/// Evaluates `(lhs, rhs)` of `id` at `n`. Indices that would go negative
/// are rejected with [`SeqError::NegativeIndex`].
pub fn identity_lhs_rhs(
    seqs: &Sequences,
    id: IdentityKind,
    n: i64,
) -> Result<(SeqTerm, SeqTerm), SeqError> {
    let m = index(n)?;
    let lowest = n - id.min_index() as i64;
    if lowest < 0 {
        return Err(SeqError::NegativeIndex(lowest));
    }
    let int = |c: Int| Poly::constant(c);
    let (lhs, rhs) = match id {
        IdentityKind::FshShiftDifference => (
            SeqTerm::Spinor(seqs.fsh(m + 2) - seqs.fsh(m - 2)),
            SeqTerm::Spinor(seqs.lsh(m)),
        ),
        IdentityKind::FiveFshPlusLsh => (
            SeqTerm::Spinor(seqs.fsh(m).scale_base(&Int::from(5)) + seqs.lsh(m)),
            SeqTerm::Spinor(seqs.lsh(m + 1).scale_base(&Int::from(2))),
        ),
        IdentityKind::LucasWeightedFsh => (
            SeqTerm::Spinor(
                seqs.fsh(m).scale_base(&seqs.lucas(m + 1))
                    + seqs.fsh(m - 1).scale_base(&seqs.lucas(m)),
            ),
            SeqTerm::Spinor(seqs.lsh(2 * m)),
        ),
        IdentityKind::FibWeightedFsh => (
            SeqTerm::Spinor(
                seqs.fsh(m).scale_base(&seqs.fib(m + 1)) + seqs.fsh(m - 1).scale_base(&seqs.fib(m)),
            ),
            SeqTerm::Spinor(seqs.fsh(2 * m)),
        ),
        IdentityKind::LshPolyFromFshPoly => (
            SeqTerm::PolySpinor(seqs.lsh_poly(m)),
            SeqTerm::PolySpinor(seqs.fsh_poly(m + 1) + seqs.fsh_poly(m - 1)),
        ),
        IdentityKind::LshPolyTwoFsh => (
            SeqTerm::PolySpinor(seqs.lsh_poly(m)),
            SeqTerm::PolySpinor(
                seqs.fsh_poly(m + 1).scale_base(&int(Int::from(2)))
                    - seqs.fsh_poly(m).scale_base(&Poly::x()),
            ),
        ),
        IdentityKind::DiscriminantFshPoly | IdentityKind::DiscriminantFshPolyUnsigned => {
            let disc = Poly::from_ints(&[4, 0, 1]);
            let tail = seqs.lsh_poly(m - 1);
            // (-1)^{n+1} is -1 exactly when n is even
            let tail = if id == IdentityKind::DiscriminantFshPoly && m % 2 == 0 {
                -tail
            } else {
                tail
            };
            (
                SeqTerm::PolySpinor(seqs.fsh_poly(m).scale_base(&disc)),
                SeqTerm::PolySpinor(seqs.lsh_poly(m + 1) + tail),
            )
        }
    };
    Ok((lhs, rhs))
}
