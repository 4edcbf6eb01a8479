//! Navigation of the forest generated by a left-right pair: every vertex
//! of the open quadrant has at most one parent (the slices are disjoint),
//! and walking parents terminates at a root after finitely many steps.
//!
//! Boundary mode runs the same machinery on the positive real axis, where
//! the Calkin-Wilf pair reproduces the classic tree of positive rationals
//! and root finding coincides with the Euclidean algorithm.

use std::fmt;

use num_traits::{CheckedSub, Zero};

use crate::error::Error;
use crate::exact::{ExtendedRational, GaussianRational};
use crate::matrix::Matrix;
use crate::pairs::is_left_right_pair;
use crate::word::{Letter, PathWord};

/// Step guard for root searches. Termination is a theorem, so exhausting
/// this signals a bug, not a deep tree.
pub const DEFAULT_MAX_STEPS: usize = 1 << 20;

/// Which realization of the forest to navigate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Vertices are points of the open quadrant.
    Interior,
    /// Vertices are positive rationals on the boundary; membership uses
    /// the open slice intervals.
    Boundary,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Interior => "interior",
            Mode::Boundary => "boundary",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "interior" => Ok(Mode::Interior),
            "boundary" => Ok(Mode::Boundary),
            other => Err(Error::Parse(format!("invalid mode {other:?}"))),
        }
    }
}

/// A forest vertex: an interior point of the quadrant, or a finite
/// positive rational in boundary mode.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Vertex {
    Interior(GaussianRational),
    Boundary(ExtendedRational),
}

impl Vertex {
    pub fn interior(z: GaussianRational) -> Result<Self, Error> {
        if !z.in_quadrant() {
            return Err(Error::InvalidVertex {
                vertex: z.to_string(),
                mode: Mode::Interior.to_string(),
            });
        }
        Ok(Vertex::Interior(z))
    }

    pub fn boundary(x: ExtendedRational) -> Result<Self, Error> {
        if x.is_infinite() || x.is_zero() {
            return Err(Error::InvalidVertex {
                vertex: x.to_string(),
                mode: Mode::Boundary.to_string(),
            });
        }
        Ok(Vertex::Boundary(x))
    }

    /// Parses vertex text according to the mode's grammar.
    pub fn parse(s: &str, mode: Mode) -> Result<Self, Error> {
        match mode {
            Mode::Interior => Self::interior(s.parse()?),
            Mode::Boundary => Self::boundary(s.parse()?),
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            Vertex::Interior(_) => Mode::Interior,
            Vertex::Boundary(_) => Mode::Boundary,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Interior(z) => z.fmt(f),
            Vertex::Boundary(x) => x.fmt(f),
        }
    }
}

/// Result of classifying a vertex by its unique incoming edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    ChildOfLeft(Vertex),
    ChildOfRight(Vertex),
    Root,
}

/// Result of a terminating root search: the root, the word spelling the
/// composition from the root back down to the query vertex (outermost
/// generator first), and the number of steps taken (= word length).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootResult {
    pub root: Vertex,
    pub word: PathWord,
    pub steps: usize,
}

/// A validated left-right pair together with the navigation mode.
#[derive(Debug, Clone)]
pub struct ForestConfig {
    left: Matrix,
    right: Matrix,
    mode: Mode,
}

impl ForestConfig {
    /// Validates that neither generator is the identity and that the pair
    /// predicate holds (the latter implies the former, but the identity
    /// case gets its own error for clarity).
    pub fn new(left: Matrix, right: Matrix, mode: Mode) -> Result<Self, Error> {
        if left.is_identity() || right.is_identity() {
            return Err(Error::IdentityGenerator);
        }
        if !is_left_right_pair(&left, &right) {
            return Err(Error::NotAPair {
                left: left.to_string(),
                right: right.to_string(),
            });
        }
        Ok(Self { left, right, mode })
    }

    pub fn left(&self) -> &Matrix {
        &self.left
    }

    pub fn right(&self) -> &Matrix {
        &self.right
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn generator(&self, letter: Letter) -> &Matrix {
        match letter {
            Letter::L => &self.left,
            Letter::R => &self.right,
        }
    }

    fn check_vertex(&self, v: &Vertex) -> Result<(), Error> {
        if v.mode() != self.mode {
            return Err(Error::InvalidVertex {
                vertex: v.to_string(),
                mode: self.mode.to_string(),
            });
        }
        Ok(())
    }

    /// The parent of `z` under generator `m`, if `z` lies in `m`'s open
    /// slice.
    fn interior_parent(m: &Matrix, z: &GaussianRational) -> Option<GaussianRational> {
        match m.inverse_apply(z) {
            Ok(w) if w.in_quadrant() => Some(w),
            _ => None,
        }
    }

    /// Boundary-mode parent: membership is the open interval of the slice,
    /// and the inverse image `(dp - bq)/(aq - cp)` is positive exactly
    /// when the membership holds.
    fn boundary_parent(m: &Matrix, x: &ExtendedRational) -> Option<ExtendedRational> {
        if !m.slice().contains_point(x) {
            return None;
        }
        let num = (m.d() * x.num())
            .checked_sub(&(m.b() * x.den()))
            .expect("membership in (b/d, a/c) makes dp - bq positive");
        let den = (m.a() * x.den())
            .checked_sub(&(m.c() * x.num()))
            .expect("membership in (b/d, a/c) makes aq - cp positive");
        Some(ExtendedRational::new(num, den).expect("both parts positive"))
    }

    /// Determines the unique incoming edge of `v`, or `Root` when `v` is
    /// in neither open slice. Disjointness makes the memberships mutually
    /// exclusive.
    pub fn classify(&self, v: &Vertex) -> Result<Classification, Error> {
        self.check_vertex(v)?;
        let (from_left, from_right) = match v {
            Vertex::Interior(z) => (
                Self::interior_parent(&self.left, z).map(Vertex::Interior),
                Self::interior_parent(&self.right, z).map(Vertex::Interior),
            ),
            Vertex::Boundary(x) => (
                Self::boundary_parent(&self.left, x).map(Vertex::Boundary),
                Self::boundary_parent(&self.right, x).map(Vertex::Boundary),
            ),
        };
        debug_assert!(
            !(from_left.is_some() && from_right.is_some()),
            "disjoint slices admit at most one parent"
        );
        Ok(match (from_left, from_right) {
            (Some(p), _) => Classification::ChildOfLeft(p),
            (_, Some(p)) => Classification::ChildOfRight(p),
            (None, None) => Classification::Root,
        })
    }

    /// Walks parent edges until a root is reached, collecting the letters
    /// in discovery order. The first letter found is the edge into `v`,
    /// i.e. the outermost generator, so the collected word satisfies
    /// `descend(root, word) = v` exactly.
    pub fn find_root(&self, v: &Vertex, max_steps: usize) -> Result<RootResult, Error> {
        let mut current = v.clone();
        let mut word = PathWord::new();
        loop {
            match self.classify(&current)? {
                Classification::Root => {
                    let steps = word.len();
                    return Ok(RootResult {
                        root: current,
                        word,
                        steps,
                    });
                }
                Classification::ChildOfLeft(parent) => {
                    if word.len() == max_steps {
                        return Err(Error::StepLimitExceeded(max_steps));
                    }
                    word.push(Letter::L);
                    current = parent;
                }
                Classification::ChildOfRight(parent) => {
                    if word.len() == max_steps {
                        return Err(Error::StepLimitExceeded(max_steps));
                    }
                    word.push(Letter::R);
                    current = parent;
                }
            }
        }
    }

    fn apply_letter(&self, letter: Letter, v: &Vertex) -> Vertex {
        let m = self.generator(letter);
        match v {
            Vertex::Interior(z) => Vertex::Interior(
                m.apply_interior(z)
                    .expect("valid vertices stay in the quadrant"),
            ),
            Vertex::Boundary(x) => Vertex::Boundary(m.apply_boundary(x)),
        }
    }

    /// Evaluates the word on `v`, innermost (last) letter first, so that
    /// `descend(find_root(v).root, find_root(v).word) = v`.
    pub fn descend(&self, v: &Vertex, word: &PathWord) -> Result<Vertex, Error> {
        self.check_vertex(v)?;
        let mut current = v.clone();
        for &letter in word.letters().iter().rev() {
            current = self.apply_letter(letter, &current);
        }
        Ok(current)
    }

    /// Breadth-first expansion of the subtree below `root` down to `depth`.
    ///
    /// Emits `2^(depth+1) - 1` entries; level `k` contains all words of
    /// length `k` in lexicographic order (`L < R`). The vertex paired with
    /// a word is the word's composition applied to `root`.
    pub fn enumerate(&self, root: &Vertex, depth: u32) -> Result<Vec<(PathWord, Vertex)>, Error> {
        self.check_vertex(root)?;
        let mut out = Vec::new();
        let mut level: Vec<(PathWord, Matrix)> = vec![(PathWord::new(), Matrix::identity())];
        for k in 0..=depth {
            for (word, m) in &level {
                let vertex = match root {
                    Vertex::Interior(z) => Vertex::Interior(
                        m.apply_interior(z)
                            .expect("valid vertices stay in the quadrant"),
                    ),
                    Vertex::Boundary(x) => Vertex::Boundary(m.apply_boundary(x)),
                };
                out.push((word.clone(), vertex));
            }
            if k < depth {
                level = level
                    .iter()
                    .flat_map(|(word, m)| {
                        [Letter::L, Letter::R]
                            .into_iter()
                            .map(move |letter| (word.child(letter), m * self.generator(letter)))
                    })
                    .collect();
            }
        }
        Ok(out)
    }
}

/// The diameters of the slices of `M¹, …, Mⁿ`.
///
/// Requires `c != 0`: translations preserve diameters and every power has
/// an unbounded slice. With `c != 0` every entry is finite, the sequence
/// is strictly decreasing, and entry `k` is bounded by the contraction
/// bound seeded with entry 1.
pub fn contraction_trace(m: &Matrix, n: u32) -> Result<Vec<ExtendedRational>, Error> {
    if m.c().is_zero() {
        return Err(Error::InfiniteDiameter);
    }
    let mut power = m.clone();
    let mut out = Vec::with_capacity(n as usize);
    for _ in 0..n {
        out.push(power.slice().diam());
        power = &power * m;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: u64, b: u64, c: u64, d: u64) -> Matrix {
        Matrix::new(a, b, c, d).unwrap()
    }

    fn q(n: u64, d: u64) -> ExtendedRational {
        ExtendedRational::new(n, d).unwrap()
    }

    fn cw(mode: Mode) -> ForestConfig {
        ForestConfig::new(m(1, 1, 0, 1), m(1, 0, 1, 1), mode).unwrap()
    }

    fn iv(s: &str) -> Vertex {
        Vertex::parse(s, Mode::Interior).unwrap()
    }

    fn bv(s: &str) -> Vertex {
        Vertex::parse(s, Mode::Boundary).unwrap()
    }

    fn word(s: &str) -> PathWord {
        s.parse().unwrap()
    }

    #[test]
    fn config_rejects_non_pairs_and_identity() {
        assert!(matches!(
            ForestConfig::new(Matrix::identity(), m(1, 0, 1, 1), Mode::Interior),
            Err(Error::IdentityGenerator)
        ));
        // slices (1/2, 1) and (0, 1) overlap
        assert!(matches!(
            ForestConfig::new(m(1, 1, 1, 2), m(1, 0, 1, 1), Mode::Interior),
            Err(Error::NotAPair { .. })
        ));
    }

    #[test]
    fn vertex_validation() {
        assert!(Vertex::parse("3/2+1/1i", Mode::Interior).is_ok());
        assert!(Vertex::parse("3/2-1/1i", Mode::Interior).is_err());
        assert!(Vertex::parse("0/1+1/1i", Mode::Interior).is_err());
        assert!(Vertex::parse("3/5", Mode::Boundary).is_ok());
        assert!(Vertex::parse("0/1", Mode::Boundary).is_err());
        assert!(Vertex::parse("inf", Mode::Boundary).is_err());
    }

    #[test]
    fn classify_interior_examples() {
        let cfg = cw(Mode::Interior);
        assert_eq!(
            cfg.classify(&iv("3/2+1/1i")).unwrap(),
            Classification::ChildOfLeft(iv("1/2+1/1i"))
        );
        // 1/2 + i/2 inverts onto the geodesic under R and out of the
        // quadrant under L, so it is a root
        assert_eq!(cfg.classify(&iv("1/2+1/2i")).unwrap(), Classification::Root);
    }

    #[test]
    fn classify_boundary_example() {
        let cfg = cw(Mode::Boundary);
        assert_eq!(
            cfg.classify(&bv("3/5")).unwrap(),
            Classification::ChildOfRight(bv("3/2"))
        );
    }

    #[test]
    fn classify_rejects_mode_mismatch() {
        let cfg = cw(Mode::Interior);
        assert!(matches!(
            cfg.classify(&bv("3/5")),
            Err(Error::InvalidVertex { .. })
        ));
    }

    #[test]
    fn find_root_examples() {
        let cfg = cw(Mode::Interior);

        let at_root = cfg.find_root(&iv("1/2+1/2i"), DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(at_root.root, iv("1/2+1/2i"));
        assert_eq!(at_root.word, PathWord::new());
        assert_eq!(at_root.steps, 0);

        let one_up = cfg.find_root(&iv("3/2+1/1i"), DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(one_up.root, iv("1/2+1/1i"));
        assert_eq!(one_up.word, word("L"));
        assert_eq!(one_up.steps, 1);

        let cfg = cw(Mode::Boundary);
        let three_fifths = cfg.find_root(&bv("3/5"), DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(three_fifths.root, bv("1/1"));
        assert_eq!(three_fifths.word, word("RLR"));
        assert_eq!(three_fifths.steps, 3);
    }

    #[test]
    fn find_root_guard_trips() {
        let cfg = cw(Mode::Boundary);
        assert_eq!(
            cfg.find_root(&bv("3/5"), 1),
            Err(Error::StepLimitExceeded(1))
        );
    }

    #[test]
    fn descend_examples() {
        let cfg = cw(Mode::Boundary);
        assert_eq!(
            cfg.descend(&bv("3/5"), &PathWord::new()).unwrap(),
            bv("3/5")
        );
        assert_eq!(cfg.descend(&bv("1/1"), &word("RLR")).unwrap(), bv("3/5"));

        let cfg = cw(Mode::Interior);
        assert_eq!(
            cfg.descend(&iv("1/2+1/1i"), &word("L")).unwrap(),
            iv("3/2+1/1i")
        );
    }

    #[test]
    fn descend_inverts_find_root() {
        let cfg = cw(Mode::Boundary);
        for (p, den) in [(5u64, 2u64), (17, 12), (99, 70), (1, 100)] {
            let v = Vertex::boundary(q(p, den)).unwrap();
            let found = cfg.find_root(&v, DEFAULT_MAX_STEPS).unwrap();
            assert_eq!(cfg.descend(&found.root, &found.word).unwrap(), v);
        }
    }

    #[test]
    fn enumerate_calkin_wilf_levels() {
        let cfg = cw(Mode::Boundary);
        let root = bv("1/1");

        let depth0 = cfg.enumerate(&root, 0).unwrap();
        assert_eq!(depth0, vec![(PathWord::new(), root.clone())]);

        let depth1 = cfg.enumerate(&root, 1).unwrap();
        assert_eq!(
            depth1[1..],
            [(word("L"), bv("2/1")), (word("R"), bv("1/2"))]
        );

        // level 2 in lexicographic word order
        let depth2 = cfg.enumerate(&root, 2).unwrap();
        assert_eq!(depth2.len(), 7);
        assert_eq!(
            depth2[3..],
            [
                (word("LL"), bv("3/1")),
                (word("LR"), bv("3/2")),
                (word("RL"), bv("2/3")),
                (word("RR"), bv("1/3")),
            ]
        );
    }

    #[test]
    fn enumerate_words_are_consistent_with_descend() {
        let cfg = cw(Mode::Boundary);
        let root = bv("1/1");
        for (w, v) in cfg.enumerate(&root, 4).unwrap() {
            assert_eq!(cfg.descend(&root, &w).unwrap(), v);
        }
    }

    #[test]
    fn contraction_trace_examples() {
        assert_eq!(
            contraction_trace(&m(1, 0, 1, 1), 3).unwrap(),
            vec![q(1, 1), q(1, 2), q(1, 3)]
        );
        assert_eq!(
            contraction_trace(&m(1, 1, 1, 2), 2).unwrap(),
            vec![q(1, 2), q(1, 15)]
        );
        assert_eq!(
            contraction_trace(&Matrix::identity(), 3),
            Err(Error::InfiniteDiameter)
        );
        assert_eq!(
            contraction_trace(&m(1, 3, 0, 1), 3),
            Err(Error::InfiniteDiameter)
        );
    }
}
