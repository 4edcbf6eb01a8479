use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::exact::{ExtendedRational, GaussianRational};
use crate::slice::Slice;

/// An element of SL₂(ℕ₀): nonnegative integer entries with `ad - bc = 1`.
///
/// Acts on the closed quadrant as the Möbius transformation
/// `z ↦ (az + b)/(cz + d)`. The determinant forces `a ≥ 1` and `d ≥ 1`,
/// which the constructor checks along with the determinant itself.
///
/// Textual form: `"a b c d"`, space separated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    a: BigUint,
    b: BigUint,
    c: BigUint,
    d: BigUint,
}

fn rat(u: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(u.clone()))
}

impl Matrix {
    pub fn new(
        a: impl Into<BigUint>,
        b: impl Into<BigUint>,
        c: impl Into<BigUint>,
        d: impl Into<BigUint>,
    ) -> Result<Self, Error> {
        let m = Self {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        // ad - bc = 1, phrased without signed arithmetic.
        if &m.a * &m.d != &m.b * &m.c + 1u32 {
            return Err(Error::InvalidMatrix(m.to_string()));
        }
        debug_assert!(!m.a.is_zero() && !m.d.is_zero());
        Ok(m)
    }

    pub fn identity() -> Self {
        Self::new(1u32, 0u32, 0u32, 1u32).expect("identity has determinant 1")
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    pub fn a(&self) -> &BigUint {
        &self.a
    }

    pub fn b(&self) -> &BigUint {
        &self.b
    }

    pub fn c(&self) -> &BigUint {
        &self.c
    }

    pub fn d(&self) -> &BigUint {
        &self.d
    }

    /// `n`-th power by repeated composition; `n = 0` gives the identity.
    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::identity();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Action on boundary points: `p/q ↦ (ap + bq)/(cp + dq)`.
    ///
    /// The same formula covers infinity: the canonical `1/0` maps to `a/c`.
    /// The image is always well defined because `d ≥ 1` rules out `0/0`.
    pub fn apply_boundary(&self, x: &ExtendedRational) -> ExtendedRational {
        let num = &self.a * x.num() + &self.b * x.den();
        let den = &self.c * x.num() + &self.d * x.den();
        ExtendedRational::new(num, den).expect("0/0 cannot arise when d >= 1")
    }

    /// Action on interior points `z` of the open quadrant.
    ///
    /// The image lies in the open quadrant again, so the result is checked
    /// before being returned.
    pub fn apply_interior(&self, z: &GaussianRational) -> Result<GaussianRational, Error> {
        if !z.in_quadrant() {
            return Err(Error::OutsideDomain(z.to_string()));
        }
        let num = &z.scale(&rat(&self.a)) + &GaussianRational::from_real(rat(&self.b));
        let den = &z.scale(&rat(&self.c)) + &GaussianRational::from_real(rat(&self.d));
        let image = num
            .div(&den)
            .expect("cz + d is nonzero for z in the quadrant");
        debug_assert!(
            image.in_quadrant(),
            "image of the quadrant left the quadrant"
        );
        Ok(image)
    }

    /// Inverse action, via the adjugate `(d, -b; -c, a)`.
    ///
    /// Defined on all of ℂ except the pole `a/c`; the result may have
    /// negative or zero components and carries no quadrant guarantee.
    pub fn inverse_apply(&self, z: &GaussianRational) -> Result<GaussianRational, Error> {
        let num = &z.scale(&rat(&self.d)) - &GaussianRational::from_real(rat(&self.b));
        let den = &GaussianRational::from_real(rat(&self.a)) - &z.scale(&rat(&self.c));
        if den.is_zero() {
            return Err(Error::PoleInput(z.to_string()));
        }
        Ok(num.div(&den).expect("nonzero denominator"))
    }

    /// Whether `z` lies in the open slice `M(𝒟)`.
    ///
    /// Uses the inverse action: `z ∈ M(𝒟)` iff `M⁻¹(z)` is strictly inside
    /// the quadrant. Points on the bounding geodesic invert onto the
    /// coordinate axes and are excluded; the pole is real, hence also
    /// outside.
    pub fn contains_interior(&self, z: &GaussianRational) -> bool {
        match self.inverse_apply(z) {
            Ok(w) => w.in_quadrant(),
            Err(_) => false,
        }
    }

    /// The image of the quadrant: a slice with endpoints `b/d` and `a/c`.
    pub fn slice(&self) -> Slice {
        let lo = ExtendedRational::new(self.b.clone(), self.d.clone())
            .expect("d >= 1 keeps the low endpoint finite");
        let hi =
            ExtendedRational::new(self.a.clone(), self.c.clone()).expect("a >= 1 rules out 0/0");
        Slice::new(lo, hi).expect("bc < ad orders the endpoints")
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    /// Semigroup product; determinants multiply, so no revalidation.
    fn mul(self, rhs: Self) -> Matrix {
        Matrix {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for Matrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let entries: Vec<&str> = s.split_whitespace().collect();
        let [a, b, c, d]: [&str; 4] = entries
            .try_into()
            .map_err(|_| Error::Parse(format!("matrix {s:?} must have exactly 4 entries")))?;
        let nat = |t: &str| {
            BigUint::from_str(t).map_err(|_| Error::Parse(format!("invalid matrix entry {t:?}")))
        };
        Self::new(nat(a)?, nat(b)?, nat(c)?, nat(d)?)
    }
}
