//! The left-right pair classifier and its independent geometric oracle.
//!
//! Two transformations form a left-right pair when the images of the open
//! quadrant are disjoint. The classifier decides this with two integer
//! comparisons; the oracle re-decides it from the slice intervals and, for
//! overlapping slices, produces an exact interior point of both images as
//! a machine-checkable witness.

use num_rational::BigRational;
use num_traits::One;

use crate::exact::{ExtendedRational, GaussianRational};
use crate::matrix::Matrix;

/// Outcome of the geometric disjointness check.
///
/// A witness is present exactly when the slices overlap; it lies in both
/// open slices, which `Matrix::contains_interior` can verify.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairVerdict {
    pub is_pair: bool,
    pub witness: Option<GaussianRational>,
}

/// Decides whether `(a, b)` is a left-right pair:
/// `a₁d₂ ≤ b₂c₁ or a₂d₁ ≤ c₂b₁`, exact integer comparisons throughout.
///
/// The condition is symmetric in its arguments; which element is called
/// "left" is a labeling choice.
pub fn is_left_right_pair(a: &Matrix, b: &Matrix) -> bool {
    a.a() * b.d() <= b.b() * a.c() || b.a() * a.d() <= b.c() * a.b()
}

/// Checks disjointness of the two image slices directly and, when they
/// overlap, constructs a point of the intersection.
///
/// The witness search takes the midpoint `m` of the overlap interval (or
/// `max(lo) + 1` when both slices are rays) and halves an imaginary offset
/// starting from 1 until `m + εi` lies in both open slices. Points with
/// real part strictly inside both intervals and small enough imaginary
/// part always qualify, so the loop terminates; the cap only documents
/// that argument.
pub fn disjointness_oracle(a: &Matrix, b: &Matrix) -> PairVerdict {
    let sa = a.slice();
    let sb = b.slice();
    if sa.interior_disjoint(&sb) {
        return PairVerdict {
            is_pair: true,
            witness: None,
        };
    }

    let lo = sa.lo().max(sb.lo());
    let hi = sa.hi().min(sb.hi());
    let m = if hi.is_infinite() {
        lo.add(&ExtendedRational::one())
    } else {
        lo.add(hi).half()
    };
    let m = m.to_rational().expect("midpoint is finite");

    let mut eps = BigRational::one();
    for _ in 0..=512 {
        let candidate = GaussianRational::new(m.clone(), eps.clone());
        if a.contains_interior(&candidate) && b.contains_interior(&candidate) {
            return PairVerdict {
                is_pair: false,
                witness: Some(candidate),
            };
        }
        eps /= BigRational::from_integer(2.into());
    }
    panic!("witness search exceeded 512 halvings for overlapping slices {sa} and {sb}");
}

/// All matrices with entries bounded by `max_entry` and determinant 1, in
/// lexicographic order of `(a, b, c, d)`. Exhaustive by construction, so
/// it doubles as its own test oracle.
pub fn enumerate_sl2n(max_entry: u64) -> Vec<Matrix> {
    let mut out = Vec::new();
    for a in 0..=max_entry {
        for b in 0..=max_entry {
            for c in 0..=max_entry {
                for d in 0..=max_entry {
                    let (ad, bc) = (u128::from(a) * u128::from(d), u128::from(b) * u128::from(c));
                    if ad == bc + 1 {
                        out.push(Matrix::new(a, b, c, d).expect("determinant checked"));
                    }
                }
            }
        }
    }
    out
}
