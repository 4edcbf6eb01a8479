//! Exact-arithmetic classification of SL₂(ℕ₀) left-right pairs and
//! navigation of the forests of infinite binary trees they generate.
//!
//! A matrix with nonnegative integer entries and determinant 1 acts on the
//! open quadrant `𝒟 = {x + iy | x, y > 0}` as a Möbius transformation, and
//! the image is a *slice* bounded by a geodesic with rational endpoints
//! `b/d` and `a/c`. Two such matrices form a *left-right pair* when their
//! slices are disjoint, which happens exactly when
//! `a₁d₂ ≤ b₂c₁ or a₂d₁ ≤ c₂b₁`; the pair then generates a forest on `𝒟`
//! whose trees are all rooted. This crate implements:
//!
//! * exact extended-rational and Gaussian-rational arithmetic
//!   ([`exact`]),
//! * the matrix action on boundary points, interior points and slices
//!   ([`matrix`], [`slice`]),
//! * the pair classifier with an independent geometric oracle and witness
//!   construction ([`pairs`]),
//! * forest navigation: vertex classification, guaranteed-terminating
//!   root finding, descent along words, level-order enumeration, and
//!   contraction diagnostics ([`forest`]).
//!
//! All arithmetic is arbitrary precision; every predicate is decided
//! exactly, with no floating point anywhere. Everything is an immutable
//! value type and every operation a pure function, so the whole API can be
//! used concurrently without restriction.

pub mod error;
pub mod exact;
pub mod forest;
pub mod matrix;
pub mod pairs;
pub mod slice;
pub mod word;

pub use error::Error;
pub use exact::{ExtendedRational, GaussianRational};
pub use forest::{
    contraction_trace, Classification, ForestConfig, Mode, RootResult, Vertex, DEFAULT_MAX_STEPS,
};
pub use matrix::Matrix;
pub use pairs::{disjointness_oracle, enumerate_sl2n, is_left_right_pair, PairVerdict};
pub use slice::{contraction_bound, Slice};
pub use word::{Letter, PathWord};
