use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Error;

/// An exact complex number with rational components.
///
/// Components are signed and always in lowest terms (`BigRational`
/// canonicalizes on every operation). Points of the open quadrant have both
/// components strictly positive; intermediate values produced by inverse
/// transformations may be negative or zero.
///
/// Textual form: `"p/q+r/si"`, with each component printed as a full
/// fraction and negative components prefixed by `-` (e.g. `"-1/2+3/4i"`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(
            BigRational::zero(),
            BigRational::from_integer(BigInt::from(1)),
        )
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Strict membership in the open quadrant (re > 0 and im > 0).
    pub fn in_quadrant(&self) -> bool {
        self.re.is_positive() && self.im.is_positive()
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²`, the squared modulus.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Scales both components by a rational factor.
    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(&self.re * k, &self.im * k)
    }

    /// Exact quotient via the conjugate; errors when `other` is zero.
    pub fn div(&self, other: &Self) -> Result<Self, Error> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self * &other.conjugate();
        let n = other.norm_sq();
        Ok(Self::new(num.re / &n, num.im / &n))
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;

    fn add(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;

    fn sub(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;

    fn mul(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

fn write_component(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.is_negative() {
        write!(f, "-")?;
    }
    write!(f, "{}/{}", r.numer().magnitude(), r.denom().magnitude())
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_component(f, &self.re)?;
        write!(f, "{}", if self.im.is_negative() { "-" } else { "+" })?;
        write!(
            f,
            "{}/{}",
            self.im.numer().magnitude(),
            self.im.denom().magnitude()
        )?;
        write!(f, "i")
    }
}

fn parse_component(s: &str) -> Result<BigRational, Error> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let parse_int = |t: &str| {
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("invalid integer {t:?}")));
        }
        BigInt::from_str(t).map_err(|e| Error::Parse(e.to_string()))
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (parse_int(n)?, parse_int(d)?),
        None => (parse_int(body)?, BigInt::from(1)),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    let r = BigRational::new(num, den);
    Ok(if neg { -r } else { r })
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let body = s
            .strip_suffix('i')
            .ok_or_else(|| Error::Parse(format!("gaussian rational {s:?} must end in 'i'")))?;
        // The separating sign is the first '+' or '-' after the leading
        // character, so a negative real part still parses.
        let sep = body
            .char_indices()
            .skip(1)
            .find(|(_, c)| *c == '+' || *c == '-')
            .ok_or_else(|| Error::Parse(format!("missing imaginary component in {s:?}")))?;
        let (re_str, rest) = body.split_at(sep.0);
        let im_mag = parse_component(&rest[1..])?;
        let re = parse_component(re_str)?;
        let im = if sep.1 == '-' { -im_mag } else { im_mag };
        Ok(Self::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn g(rn: i64, rd: i64, in_: i64, id: i64) -> GaussianRational {
        GaussianRational::new(r(rn, rd), r(in_, id))
    }

    #[test]
    fn conjugate_quotients() {
        // (1+i) / (1-i) = i
        assert_eq!(
            g(1, 1, 1, 1).div(&g(1, 1, -1, 1)).unwrap(),
            GaussianRational::i()
        );
        // (1/2 + i/2) / (1/2 - i/2) = i, checked by multiplying back
        let z = g(1, 2, 1, 2);
        let w = g(1, 2, -1, 2);
        let q = z.div(&w).unwrap();
        assert_eq!(q, GaussianRational::i());
        assert_eq!(&q * &w, z);
    }

    #[test]
    fn division_by_one_is_identity() {
        let z = g(3, 7, -2, 5);
        let one = GaussianRational::from_real(r(1, 1));
        assert_eq!(z.div(&one).unwrap(), z);
    }

    #[test]
    fn division_by_zero_errors() {
        let zero = GaussianRational::from_real(BigRational::zero());
        assert_eq!(g(1, 1, 1, 1).div(&zero), Err(Error::DivisionByZero));
    }

    #[test]
    fn quadrant_membership_is_strict() {
        assert!(g(1, 2, 1, 3).in_quadrant());
        assert!(!g(0, 1, 1, 1).in_quadrant());
        assert!(!g(1, 1, 0, 1).in_quadrant());
        assert!(!g(-1, 2, 1, 1).in_quadrant());
    }

    #[test]
    fn display_matches_grammar() {
        assert_eq!(g(3, 2, 1, 1).to_string(), "3/2+1/1i");
        assert_eq!(g(-1, 2, 1, 2).to_string(), "-1/2+1/2i");
        assert_eq!(g(1, 2, -3, 4).to_string(), "1/2-3/4i");
    }

    #[test]
    fn parse_round_trips() {
        for z in [g(3, 2, 1, 1), g(-1, 2, 1, 2), g(1, 2, -3, 4), g(0, 1, 5, 3)] {
            assert_eq!(z.to_string().parse::<GaussianRational>().unwrap(), z);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/2", "1/2+i", "1/2+1/0i", "1/2++1/2i", "one+twoi"] {
            assert!(s.parse::<GaussianRational>().is_err(), "accepted {s:?}");
        }
    }
}
