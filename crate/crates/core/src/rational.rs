//! Extended rationals ("slopes") and the elementary arithmetic of 2-bridge
//! link slopes: residues, inverse residues, Schubert equivalence and the
//! link-type predicate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A reduced extended rational `num/den`, with `den >= 0`.
///
/// The point at infinity is stored as `1/0`, so structural equality is value
/// equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Slope {
    num: BigInt,
    den: BigInt,
}

impl Slope {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if num.is_zero() && den.is_zero() {
            return Err(Error::ZeroOverZero);
        }
        if den.is_zero() {
            return Ok(Self::infinity());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / &g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Slope { num, den })
    }

    /// Builds `num/den` from a column vector `(den, num)` of a projective
    /// matrix action. Panics on the zero vector.
    pub(crate) fn from_vector(den: BigInt, num: BigInt) -> Self {
        Slope::new(num, den).expect("zero vector has no slope")
    }

    pub fn infinity() -> Self {
        Slope {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Slope {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// Largest integer `<= self`. Infinity has no floor.
    pub fn floor(&self) -> Option<BigInt> {
        if self.is_infinite() {
            None
        } else {
            Some(self.num.div_floor(&self.den))
        }
    }

    /// `self + k`; infinity is fixed.
    pub fn add_integer(&self, k: &BigInt) -> Slope {
        if self.is_infinite() {
            return self.clone();
        }
        Slope {
            num: &self.num + k * &self.den,
            den: self.den.clone(),
        }
    }

    /// `-self`; infinity is fixed.
    pub fn neg(&self) -> Slope {
        if self.is_infinite() {
            return self.clone();
        }
        Slope {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// Total bit length of numerator and denominator.
    pub fn bit_length(&self) -> u64 {
        self.num.bits() + self.den.bits()
    }

    /// Denominator as a machine integer, when it fits.
    pub fn den_u64(&self) -> Option<u64> {
        self.den.to_u64()
    }

    fn require_finite(&self) -> Result<()> {
        if self.is_infinite() {
            Err(Error::InfinityInput)
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Accepts `-?[0-9]+/[0-9]+` or `inf`.
    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(Slope::infinity());
        }
        let bad = || Error::Parse(s.to_string());
        let (num, den) = s.split_once('/').ok_or_else(bad)?;
        let digits = num.strip_prefix('-').unwrap_or(num);
        let all_digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(digits) || !all_digits(den) {
            return Err(bad());
        }
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        Slope::new(num, den)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Orders by value on the extended real line, with infinity last.
impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The type of the 2-bridge link `K(q/p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LinkKind {
    TrivialKnot,
    TorusLink,
    HyperbolicKnot,
    HyperbolicTwoComponent,
    NonHyperbolicTwoComponent,
}

impl LinkKind {
    pub fn components(self) -> u8 {
        match self {
            LinkKind::TrivialKnot | LinkKind::TorusLink | LinkKind::HyperbolicKnot => 1,
            LinkKind::HyperbolicTwoComponent | LinkKind::NonHyperbolicTwoComponent => 2,
        }
    }

    pub fn is_hyperbolic(self) -> bool {
        matches!(
            self,
            LinkKind::HyperbolicKnot | LinkKind::HyperbolicTwoComponent
        )
    }
}

/// `q mod p` in `[0, p)`.
pub fn residue_class(r: &Slope) -> Result<BigInt> {
    r.require_finite()?;
    Ok(r.num.mod_floor(&r.den))
}

/// Inverse of `a` modulo `m` in `[0, m)`, if `gcd(a, m) = 1`.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(m);
    let egcd = a.extended_gcd(m);
    if !egcd.gcd.is_one() {
        return None;
    }
    Some(egcd.x.mod_floor(m))
}

/// `q'/p` with `q q' = 1 (mod p)` and `0 < q' < p`.
pub fn inverse_slope(r: &Slope) -> Result<Slope> {
    r.require_finite()?;
    if r.den <= BigInt::one() {
        return Err(Error::IntegerSlope(r.to_string()));
    }
    let inv = mod_inverse(&r.num, &r.den).expect("reduced slope has a unit numerator");
    Ok(Slope {
        num: inv,
        den: r.den.clone(),
    })
}

/// Schubert equivalence of `K(r1)` and `K(r2)`, without identifying mirrors.
pub fn slope_equivalent(r1: &Slope, r2: &Slope) -> Result<bool> {
    r1.require_finite()?;
    r2.require_finite()?;
    if r1.den != r2.den {
        return Ok(false);
    }
    let a = residue_class(r1)?;
    let b = residue_class(r2)?;
    if a == b {
        return Ok(true);
    }
    Ok(mod_inverse(&a, &r1.den).is_some_and(|inv| inv == b))
}

/// Whether `q = +-1 (mod p)`; such slopes give the trivial knot or torus links.
pub fn is_unit_residue(r: &Slope) -> Result<bool> {
    let q = residue_class(r)?;
    let p = &r.den;
    Ok(p <= &BigInt::from(2u8) || q.is_one() || q == p - 1u8)
}

pub fn link_kind(r: &Slope) -> Result<LinkKind> {
    r.require_finite()?;
    let p = &r.den;
    if p.is_one() {
        return Ok(LinkKind::TrivialKnot);
    }
    let hyperbolic = !is_unit_residue(r)?;
    Ok(match (p.is_odd(), hyperbolic) {
        (true, true) => LinkKind::HyperbolicKnot,
        (true, false) => LinkKind::TorusLink,
        (false, true) => LinkKind::HyperbolicTwoComponent,
        (false, false) => LinkKind::NonHyperbolicTwoComponent,
    })
}

/// Shorthand for tests and built-in tables. Panics on `0/0`.
pub fn slope(num: i64, den: i64) -> Slope {
    Slope::new(num, den).expect("valid slope")
}

/// All reduced slopes `q/p` with `0 < q < p` and `lo <= p <= hi`, ordered by
/// denominator then numerator.
pub fn proper_slopes(lo: u64, hi: u64) -> impl Iterator<Item = Slope> {
    (lo.max(2)..=hi).flat_map(|p| {
        (1..p)
            .filter(move |q| q.gcd(&p) == 1)
            .map(move |q| Slope {
                num: BigInt::from(q),
                den: BigInt::from(p),
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_slope_normalizes() {
        assert_eq!(Slope::new(6, 15).unwrap(), slope(2, 5));
        assert_eq!(Slope::new(-3, 0).unwrap(), Slope::infinity());
        assert_eq!(Slope::new(4, -6).unwrap().to_string(), "-2/3");
        assert_eq!(Slope::new(0, 0), Err(Error::ZeroOverZero));
        assert_eq!(Slope::new(0, -7).unwrap().to_string(), "0/1");
    }

    #[test]
    fn residues() {
        assert_eq!(residue_class(&slope(7, 11)).unwrap(), BigInt::from(7));
        assert_eq!(residue_class(&slope(-4, 11)).unwrap(), BigInt::from(7));
        assert_eq!(residue_class(&slope(5, 1)).unwrap(), BigInt::zero());
        assert_eq!(residue_class(&Slope::infinity()), Err(Error::InfinityInput));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse_slope(&slope(3, 5)).unwrap(), slope(2, 5));
        assert_eq!(inverse_slope(&slope(10, 33)).unwrap(), slope(10, 33));
        assert_eq!(inverse_slope(&slope(5, 17)).unwrap(), slope(7, 17));
        assert!(matches!(
            inverse_slope(&slope(3, 1)),
            Err(Error::IntegerSlope(_))
        ));
        assert_eq!(inverse_slope(&Slope::infinity()), Err(Error::InfinityInput));
    }

    #[test]
    fn equivalence_examples() {
        assert!(slope_equivalent(&slope(3, 5), &slope(2, 5)).unwrap());
        assert!(slope_equivalent(&slope(8, 13), &slope(5, 13)).unwrap());
        assert!(!slope_equivalent(&slope(2, 7), &slope(3, 7)).unwrap());
        assert!(!slope_equivalent(&slope(2, 7), &slope(2, 9)).unwrap());
    }

    #[test]
    fn kinds() {
        assert_eq!(link_kind(&slope(2, 5)).unwrap(), LinkKind::HyperbolicKnot);
        assert_eq!(link_kind(&slope(1, 3)).unwrap(), LinkKind::TorusLink);
        assert_eq!(
            link_kind(&slope(3, 8)).unwrap(),
            LinkKind::HyperbolicTwoComponent
        );
        assert_eq!(link_kind(&slope(4, 1)).unwrap(), LinkKind::TrivialKnot);
        assert_eq!(
            link_kind(&slope(1, 2)).unwrap(),
            LinkKind::NonHyperbolicTwoComponent
        );
        assert_eq!(link_kind(&slope(1, 3)).unwrap().components(), 1);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("inf".parse::<Slope>().unwrap(), Slope::infinity());
        assert_eq!("-4/6".parse::<Slope>().unwrap().to_string(), "-2/3");
        assert!("4".parse::<Slope>().is_err());
        assert!("+4/3".parse::<Slope>().is_err());
        assert!("4/-3".parse::<Slope>().is_err());
        assert!("0/0".parse::<Slope>().is_err());
    }

    #[test]
    fn ordering_puts_infinity_last() {
        let mut v = vec![Slope::infinity(), slope(1, 2), slope(-3, 1), slope(1, 3)];
        v.sort();
        assert_eq!(
            v,
            vec![slope(-3, 1), slope(1, 3), slope(1, 2), Slope::infinity()]
        );
    }

    // Equivalence relation and involution checks, exhaustive up to p = 100.
    #[test]
    fn schubert_sweep() {
        for p in 2..=100u64 {
            let class: Vec<Slope> = proper_slopes(p, p).collect();
            for a in &class {
                let inv = inverse_slope(a).unwrap();
                assert_eq!(inverse_slope(&inv).unwrap(), *a);
                assert!(slope_equivalent(a, a).unwrap());
                for b in &class {
                    let ab = slope_equivalent(a, b).unwrap();
                    assert_eq!(ab, slope_equivalent(b, a).unwrap());
                    if ab {
                        assert_eq!(link_kind(a).unwrap(), link_kind(b).unwrap());
                        for c in &class {
                            if slope_equivalent(b, c).unwrap() {
                                assert!(slope_equivalent(a, c).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }
}
