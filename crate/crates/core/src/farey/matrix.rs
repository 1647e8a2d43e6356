use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{mod_inverse, Slope};

/// Integer 2x2 matrix of determinant +-1, considered up to sign.
///
/// A slope `q/p` is the column vector `(p, q)`; the matrix `[[a,b],[c,d]]`
/// sends it to `(ap + bq, cp + dq)`, i.e. `s -> (c + d s)/(a + b s)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjMatrix {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl ProjMatrix {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        ProjMatrix {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn identity() -> Self {
        ProjMatrix::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Inverse up to sign (the adjugate, rescaled by the unit determinant).
    pub fn inverse(&self) -> Self {
        let m = ProjMatrix {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        };
        if self.det().is_negative() {
            m.negated()
        } else {
            m
        }
    }

    pub fn negated(&self) -> Self {
        ProjMatrix {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }

    /// Equality in PGL(2, Z).
    pub fn eq_projective(&self, other: &Self) -> bool {
        self == other || *self == other.negated()
    }

    pub fn is_projective_identity(&self) -> bool {
        self.eq_projective(&ProjMatrix::identity())
    }

    pub fn apply(&self, s: &Slope) -> Slope {
        let (p, q) = (s.den(), s.num());
        let den = &self.a * p + &self.b * q;
        let num = &self.c * p + &self.d * q;
        Slope::from_vector(den, num)
    }
}

impl Mul for &ProjMatrix {
    type Output = ProjMatrix;

    fn mul(self, rhs: &ProjMatrix) -> ProjMatrix {
        ProjMatrix {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }
}

impl fmt::Display for ProjMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for ProjMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ProjMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An edge of the Farey tessellation: two slopes with `|p1 q2 - p2 q1| = 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FareyEdge {
    lo: Slope,
    hi: Slope,
}

/// `p1 q2 - p2 q1` for the vectors of two slopes.
pub fn cross(s1: &Slope, s2: &Slope) -> BigInt {
    s1.den() * s2.num() - s2.den() * s1.num()
}

impl FareyEdge {
    pub fn new(s1: Slope, s2: Slope) -> Result<Self> {
        if !cross(&s1, &s2).abs().is_one() {
            return Err(Error::NotNeighbors(s1.to_string(), s2.to_string()));
        }
        let (lo, hi) = if s1 <= s2 { (s1, s2) } else { (s2, s1) };
        Ok(FareyEdge { lo, hi })
    }

    /// The vertical edge `{inf, n}`.
    pub fn vertical(n: BigInt) -> Self {
        FareyEdge {
            lo: Slope::integer(n),
            hi: Slope::infinity(),
        }
    }

    pub fn endpoints(&self) -> (&Slope, &Slope) {
        (&self.lo, &self.hi)
    }

    pub fn image(&self, m: &ProjMatrix) -> FareyEdge {
        let (s1, s2) = (m.apply(&self.lo), m.apply(&self.hi));
        let (lo, hi) = if s1 <= s2 { (s1, s2) } else { (s2, s1) };
        FareyEdge { lo, hi }
    }

    /// The reflection of the tessellation in this edge.
    pub fn reflection(&self) -> ProjMatrix {
        reflection_in_edge(self)
    }
}

impl fmt::Display for FareyEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

impl fmt::Debug for FareyEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for FareyEdge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (&self.lo, &self.hi).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FareyEdge {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (s1, s2) = <(Slope, Slope)>::deserialize(d)?;
        FareyEdge::new(s1, s2).map_err(serde::de::Error::custom)
    }
}

/// Conjugate of `diag(1, -1)` by the matrix with columns `(p1,q1)`, `(p2,q2)`.
pub fn reflection_in_edge(e: &FareyEdge) -> ProjMatrix {
    let (s1, s2) = e.endpoints();
    let (p1, q1) = (s1.den(), s1.num());
    let (p2, q2) = (s2.den(), s2.num());
    let trace_part = p1 * q2 + p2 * q1;
    ProjMatrix {
        a: trace_part.clone(),
        b: -(p1 * p2 * 2u8),
        c: q1 * q2 * 2u8,
        d: -trace_part,
    }
}

/// The edges of the tessellation at a non-integral vertex `q/p`: its
/// neighbors are exactly `(q0 + k q)/(p0 + k p)` for `k` in `Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    pub vertex: Slope,
    pub base: Slope,
}

impl Fan {
    pub fn neighbor(&self, k: &BigInt) -> Slope {
        Slope::new(
            self.base.num() + k * self.vertex.num(),
            self.base.den() + k * self.vertex.den(),
        )
        .expect("fan neighbor is a valid slope")
    }

    pub fn edge(&self, k: &BigInt) -> FareyEdge {
        FareyEdge::new(self.vertex.clone(), self.neighbor(k)).expect("fan edges are Farey edges")
    }
}

pub fn farey_neighbors(r: &Slope) -> Result<Fan> {
    if r.is_infinite() {
        return Err(Error::InfinityInput);
    }
    if r.is_integer() {
        return Err(Error::IntegerSlope(r.to_string()));
    }
    let (p, q) = (r.den(), r.num());
    // q p0 = 1 (mod p), so p q0 - q p0 = -1
    let p0 = mod_inverse(q, p).expect("reduced");
    let q0 = (q * &p0 - 1u8).div_floor(p);
    Ok(Fan {
        vertex: r.clone(),
        base: Slope::new(q0, p0)?,
    })
}

/// A matrix `B` with `B(r) = inf`: first row `(q, -p)`, second row a Bezout
/// completion.
pub fn conjugator_to_infinity(r: &Slope) -> Result<ProjMatrix> {
    if r.is_infinite() {
        return Err(Error::InfinityInput);
    }
    let (p, q) = (r.den(), r.num());
    let egcd = q.extended_gcd(p);
    let (mut x, mut y) = (egcd.x, egcd.y);
    if egcd.gcd.is_negative() {
        x = -x;
        y = -y;
    }
    debug_assert!((q * &x + p * &y).is_one());
    let m = ProjMatrix {
        a: q.clone(),
        b: -p.clone(),
        c: y,
        d: x,
    };
    debug_assert!(m.det().is_one());
    debug_assert!(m.apply(r).is_infinite());
    Ok(m)
}
