use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// A nonnegative rational in lowest terms, extended with the point at
/// infinity.
///
/// Canonical form is maintained by every constructor and operation:
/// `gcd(num, den) = 1`, infinity is always stored as `1/0`, and zero as
/// `0/1`. `0/0` is rejected. With these representatives, structural
/// equality coincides with numeric equality and the cross-multiplication
/// comparison below is a total order with `inf` greater than every finite
/// value.
///
/// Textual form: `"p/q"` (always with the denominator) or `"inf"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendedRational {
    num: BigUint,
    den: BigUint,
}

impl ExtendedRational {
    /// Builds `num/den` in canonical form. `0/0` is an error; `x/0` with
    /// `x != 0` normalizes to the canonical infinity `1/0`.
    pub fn new(num: impl Into<BigUint>, den: impl Into<BigUint>) -> Result<Self, Error> {
        let (num, den) = (num.into(), den.into());
        if num.is_zero() && den.is_zero() {
            return Err(Error::ZeroOverZero);
        }
        let g = num.gcd(&den);
        Ok(Self {
            num: &num / &g,
            den: &den / &g,
        })
    }

    pub fn from_integer(n: impl Into<BigUint>) -> Self {
        Self {
            num: n.into(),
            den: BigUint::one(),
        }
    }

    pub fn infinity() -> Self {
        Self {
            num: BigUint::one(),
            den: BigUint::zero(),
        }
    }

    pub fn zero() -> Self {
        Self {
            num: BigUint::zero(),
            den: BigUint::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1u32)
    }

    pub fn num(&self) -> &BigUint {
        &self.num
    }

    pub fn den(&self) -> &BigUint {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.is_infinite()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Sum, with infinity absorbing.
    pub fn add(&self, other: &Self) -> Self {
        if self.is_infinite() || other.is_infinite() {
            return Self::infinity();
        }
        Self::new(
            &self.num * &other.den + &other.num * &self.den,
            &self.den * &other.den,
        )
        .expect("finite operands have nonzero denominators")
    }

    /// `self - other`, defined when `other` is finite and `other <= self`.
    /// `inf - finite = inf`.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if other.is_infinite() {
            return None;
        }
        if self.is_infinite() {
            return Some(Self::infinity());
        }
        let lhs = &self.num * &other.den;
        let rhs = &other.num * &self.den;
        if lhs < rhs {
            return None;
        }
        Some(Self::new(lhs - rhs, &self.den * &other.den).expect("denominator is nonzero"))
    }

    /// Half of a finite value; infinity is returned unchanged.
    pub fn half(&self) -> Self {
        if self.is_infinite() {
            return Self::infinity();
        }
        Self::new(self.num.clone(), &self.den * 2u32).expect("denominator is nonzero")
    }

    /// Signed-rational view; `None` for infinity.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.is_infinite() {
            return None;
        }
        Some(BigRational::new(
            BigInt::from(self.num.clone()),
            BigInt::from(self.den.clone()),
        ))
    }
}

impl Ord for ExtendedRational {
    /// Cross-multiplication: `p/q < r/s` iff `p*s < r*q`. With canonical
    /// representatives this also orders infinity correctly (`1/0` beats
    /// every `p/q` since `1*q > p*0`).
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for ExtendedRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Self::infinity());
        }
        let parse_nat = |t: &str| {
            BigUint::from_str(t).map_err(|_| Error::Parse(format!("invalid natural number {t:?}")))
        };
        match s.split_once('/') {
            Some((num, den)) => Self::new(parse_nat(num)?, parse_nat(den)?),
            None => Ok(Self::from_integer(parse_nat(s)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: u64, d: u64) -> ExtendedRational {
        ExtendedRational::new(n, d).unwrap()
    }

    #[test]
    fn constructors_canonicalize() {
        assert_eq!(q(6, 4), q(3, 2));
        assert_eq!(q(0, 7), ExtendedRational::zero());
        assert_eq!(q(5, 0), ExtendedRational::infinity());
        assert_eq!(q(3, 2).num(), &BigUint::from(3u32));
        assert_eq!(q(3, 2).den(), &BigUint::from(2u32));
    }

    #[test]
    fn zero_over_zero_is_rejected() {
        assert_eq!(ExtendedRational::new(0u32, 0u32), Err(Error::ZeroOverZero));
    }

    #[test]
    fn compare_cross_multiplies() {
        assert_eq!(q(1, 2).cmp(&q(2, 3)), Ordering::Less);
        assert_eq!(q(2, 3).cmp(&q(2, 3)), Ordering::Equal);
        assert_eq!(q(2, 3).cmp(&q(1, 2)), Ordering::Greater);
    }

    #[test]
    fn infinity_dominates() {
        assert_eq!(q(5, 1).cmp(&ExtendedRational::infinity()), Ordering::Less);
        assert_eq!(
            ExtendedRational::infinity().cmp(&ExtendedRational::infinity()),
            Ordering::Equal
        );
        assert!(ExtendedRational::infinity() > q(1_000_000, 1));
    }

    #[test]
    fn add_and_sub() {
        assert_eq!(q(1, 2).add(&q(1, 3)), q(5, 6));
        assert_eq!(
            q(1, 2).add(&ExtendedRational::infinity()),
            ExtendedRational::infinity()
        );
        assert_eq!(q(2, 3).checked_sub(&q(1, 2)), Some(q(1, 6)));
        assert_eq!(q(1, 2).checked_sub(&q(2, 3)), None);
        assert_eq!(
            q(1, 2).checked_sub(&q(1, 2)),
            Some(ExtendedRational::zero())
        );
        assert_eq!(
            ExtendedRational::infinity().checked_sub(&q(7, 2)),
            Some(ExtendedRational::infinity())
        );
        assert_eq!(
            ExtendedRational::infinity().checked_sub(&ExtendedRational::infinity()),
            None
        );
    }

    #[test]
    fn half_halves() {
        assert_eq!(q(3, 2).half(), q(3, 4));
        assert_eq!(
            ExtendedRational::infinity().half(),
            ExtendedRational::infinity()
        );
    }

    #[test]
    fn display_and_parse_round_trip() {
        for v in [
            q(0, 1),
            q(1, 1),
            q(3, 5),
            q(22, 7),
            ExtendedRational::infinity(),
        ] {
            assert_eq!(v.to_string().parse::<ExtendedRational>().unwrap(), v);
        }
        assert_eq!("3/5".parse::<ExtendedRational>().unwrap(), q(3, 5));
        assert_eq!("7".parse::<ExtendedRational>().unwrap(), q(7, 1));
        assert_eq!(
            "inf".parse::<ExtendedRational>().unwrap(),
            ExtendedRational::infinity()
        );
        assert_eq!(q(1, 1).to_string(), "1/1");
        assert_eq!(ExtendedRational::infinity().to_string(), "inf");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "-1/2", "1/2/3", "a/b", "0/0", "1.5"] {
            assert!(s.parse::<ExtendedRational>().is_err(), "accepted {s:?}");
        }
    }
}
