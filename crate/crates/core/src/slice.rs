use std::fmt;

use crate::error::Error;
use crate::exact::ExtendedRational;

/// The image of the open quadrant under a transformation, stored by its
/// boundary-interval endpoints.
///
/// The endpoints are the complete invariant of a slice: the bounding
/// geodesic (a semicircle over `[lo, hi]`, or the vertical ray at `lo` when
/// `hi = inf`) and the diameter are derived on demand. `lo` is always
/// finite and `lo < hi`.
///
/// Textual form: `"[lo, hi)"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Slice {
    lo: ExtendedRational,
    hi: ExtendedRational,
}

impl Slice {
    pub fn new(lo: ExtendedRational, hi: ExtendedRational) -> Result<Self, Error> {
        if lo.is_infinite() {
            return Err(Error::InvalidSlice("low endpoint must be finite".into()));
        }
        if lo >= hi {
            return Err(Error::InvalidSlice(format!(
                "endpoints out of order: {lo} >= {hi}"
            )));
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> &ExtendedRational {
        &self.lo
    }

    pub fn hi(&self) -> &ExtendedRational {
        &self.hi
    }

    pub fn is_bounded(&self) -> bool {
        self.hi.is_finite()
    }

    /// Length of the boundary interval: `hi - lo`, infinite for ray slices.
    pub fn diam(&self) -> ExtendedRational {
        self.hi
            .checked_sub(&self.lo)
            .expect("slice invariant lo < hi")
    }

    /// Strict membership of a boundary point in the open interval
    /// `(lo, hi)`.
    pub fn contains_point(&self, x: &ExtendedRational) -> bool {
        &self.lo < x && x < &self.hi
    }

    /// Whether the open intervals of two slices are disjoint; touching
    /// endpoints still count as disjoint.
    pub fn interior_disjoint(&self, other: &Slice) -> bool {
        self.hi <= other.lo || other.hi <= self.lo
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.lo, self.hi)
    }
}

/// The n-fold contraction bound `t/(nt + 1)` for a starting diameter
/// `t > 0`: an upper bound for the diameter after `n` further applications
/// of any matrix with `c != 0`. Strictly decreasing in `n`.
///
/// Panics when `t` is infinite or zero.
pub fn contraction_bound(t: &ExtendedRational, n: u64) -> ExtendedRational {
    assert!(
        t.is_finite() && !t.is_zero(),
        "contraction bound needs finite t > 0"
    );
    // t/(nt + 1) with t = p/q is p/(np + q).
    ExtendedRational::new(t.num().clone(), t.num() * n + t.den())
        .expect("denominator is at least 1")
}
