use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Slope;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    M0,
    M1,
    M2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::M0 => "M0",
            Family::M1 => "M1",
            Family::M2 => "M2",
        };
        f.write_str(s)
    }
}

/// Edges of the weighted graph carried by a Heckoid orbifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeLabel {
    LinkOrJ1,
    J2,
    TauPlus,
    TauMinus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Weight {
    Infinite,
    Finite(u64),
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Infinite => f.write_str("inf"),
            Weight::Finite(n) => write!(f, "{n}"),
        }
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Weight::Infinite => s.serialize_str("inf"),
            Weight::Finite(n) => s.serialize_u64(*n),
        }
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(n) => Ok(Weight::Finite(n)),
            Raw::S(s) if s == "inf" => Ok(Weight::Infinite),
            Raw::S(s) => Err(serde::de::Error::custom(format!("bad weight {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParabolicLocus {
    TwoAnnuli,
    OneAnnulus,
    TwoD22,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HeckoidIsom {
    Z2xZ2,
    Z2,
}

impl fmt::Display for HeckoidIsom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeckoidIsom::Z2xZ2 => f.write_str("(Z2)^2"),
            HeckoidIsom::Z2 => f.write_str("Z2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckoidDescriptor {
    pub family: Family,
    pub slope: Slope,
    pub index: u64,
    pub weights: BTreeMap<EdgeLabel, Weight>,
    pub parabolic_locus: ParabolicLocus,
    pub isometry_group: HeckoidIsom,
    pub fuchsian_degenerate: bool,
    pub figure_type: u8,
}

impl HeckoidDescriptor {
    fn build(family: Family, slope: Slope, index: u64, fuchsian_degenerate: bool) -> Self {
        let mut weights = BTreeMap::new();
        weights.insert(EdgeLabel::LinkOrJ1, Weight::Infinite);
        weights.insert(EdgeLabel::TauMinus, Weight::Finite(index));
        let (parabolic_locus, isometry_group, figure_type) = match family {
            Family::M0 => (ParabolicLocus::TwoAnnuli, HeckoidIsom::Z2xZ2, 2),
            Family::M1 => {
                weights.insert(EdgeLabel::J2, Weight::Finite(2));
                (ParabolicLocus::OneAnnulus, HeckoidIsom::Z2, 3)
            }
            Family::M2 => {
                weights.insert(EdgeLabel::J2, Weight::Finite(2));
                weights.insert(EdgeLabel::TauPlus, Weight::Finite(2));
                (ParabolicLocus::TwoD22, HeckoidIsom::Z2, 4)
            }
        };
        HeckoidDescriptor {
            family,
            slope,
            index,
            weights,
            parabolic_locus,
            isometry_group,
            fuchsian_degenerate,
            figure_type,
        }
    }

    /// Checks that family, locus, isometry group and weights agree.
    pub fn is_consistent(&self) -> bool {
        let shape = match self.family {
            Family::M0 => {
                self.parabolic_locus == ParabolicLocus::TwoAnnuli
                    && self.isometry_group == HeckoidIsom::Z2xZ2
                    && self.weights.len() == 2
                    && self.index >= 2
            }
            Family::M1 => {
                self.parabolic_locus == ParabolicLocus::OneAnnulus
                    && self.isometry_group == HeckoidIsom::Z2
                    && self.weights.len() == 3
                    && self.index >= 3
                    && self.index % 2 == 1
            }
            Family::M2 => {
                self.parabolic_locus == ParabolicLocus::TwoD22
                    && self.isometry_group == HeckoidIsom::Z2
                    && self.weights.len() == 4
                    && self.index >= 3
                    && self.index % 2 == 1
            }
        };
        shape
            && self.weights.get(&EdgeLabel::LinkOrJ1) == Some(&Weight::Infinite)
            && self.weights.get(&EdgeLabel::TauMinus) == Some(&Weight::Finite(self.index))
    }
}

impl fmt::Display for HeckoidDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}; {})", self.family, self.slope, self.index)
    }
}

/// The r-hat renormalization of `q/p` with `0 < q < p`.
pub fn hat_r(r: &Slope) -> Result<Slope> {
    let (p, q) = (r.den(), r.num());
    if r.is_infinite() || !q.is_positive() || q >= p {
        return Err(Error::OutOfRange(r.to_string()));
    }
    let two = BigInt::from(2);
    if p.is_odd() {
        if q.is_even() {
            Slope::new(q / &two, p.clone())
        } else {
            Slope::new((p + q) / &two, p.clone())
        }
    } else {
        Slope::new(q.clone(), p / &two)
    }
}

/// `r` moved into `[0, 1)`.
fn unit_representative(r: &Slope) -> Slope {
    let fl = r.floor().expect("finite slope");
    r.add_integer(&-fl)
}

/// Descriptor of `G(r; n)`, with `n` given as the integer `2n`.
pub fn heckoid_descriptor(r: &Slope, twice_n: u64) -> Result<HeckoidDescriptor> {
    if twice_n < 3 {
        return Err(Error::InvalidIndex(twice_n.to_string()));
    }
    if r.is_infinite() {
        return Err(Error::InfinityInput);
    }
    let base = unit_representative(r);
    let degenerate = r.is_integer();
    if twice_n.is_multiple_of(2) {
        return Ok(HeckoidDescriptor::build(Family::M0, base, twice_n / 2, degenerate));
    }
    let family = if r.den().is_odd() {
        Family::M1
    } else {
        Family::M2
    };
    let slope = if degenerate { base } else { hat_r(&base)? };
    Ok(HeckoidDescriptor::build(family, slope, twice_n, degenerate))
}

/// Parses `n` as an integer or a fraction with denominator 2, returning `2n`.
pub fn parse_half_integer(s: &str) -> Result<u64> {
    let bad = || Error::InvalidIndex(s.to_string());
    match s.split_once('/') {
        None => s.parse::<u64>().ok().and_then(|n| n.checked_mul(2)).ok_or_else(bad),
        Some((m, "2")) => m.parse::<u64>().map_err(|_| bad()),
        Some(_) => Err(bad()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckoidReport {
    pub descriptor: HeckoidDescriptor,
    pub unique_pair: bool,
    pub figure_type: u8,
    pub statements: Vec<String>,
    pub annotation: Option<String>,
}

pub fn heckoid_classification(r: &Slope, twice_n: u64) -> Result<HeckoidReport> {
    let d = heckoid_descriptor(r, twice_n)?;
    let n_text = if twice_n.is_multiple_of(2) {
        (twice_n / 2).to_string()
    } else {
        format!("{twice_n}/2")
    };
    let mut statements = vec![format!(
        "G({}; {}) has a unique parabolic generating pair up to equivalence",
        r, n_text
    )];
    let annotation = if d.fuchsian_degenerate {
        statements.push(format!(
            "Fuchsian: the pair generating the Hecke group H({}) is the unique parabolic generating pair",
            twice_n
        ));
        Some(format!("S^2({},inf,inf) x I", n_text))
    } else {
        statements.push(format!(
            "the pair is realized by figure type ({})",
            d.figure_type
        ));
        None
    };
    Ok(HeckoidReport {
        figure_type: d.figure_type,
        descriptor: d,
        unique_pair: true,
        statements,
        annotation,
    })
}

pub type Mat2 = [[f64; 2]; 2];

pub fn mat_mul(x: &Mat2, y: &Mat2) -> Mat2 {
    [
        [
            x[0][0] * y[0][0] + x[0][1] * y[1][0],
            x[0][0] * y[0][1] + x[0][1] * y[1][1],
        ],
        [
            x[1][0] * y[0][0] + x[1][1] * y[1][0],
            x[1][0] * y[0][1] + x[1][1] * y[1][1],
        ],
    ]
}

/// Generators `A_m`, `Q` of the Hecke group `H(m)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HeckeMatrices {
    pub m: u32,
    pub a: Mat2,
    pub q: Mat2,
}

impl HeckeMatrices {
    pub fn lambda(&self) -> f64 {
        2.0 * (PI / self.m as f64).cos()
    }

    pub fn qa(&self) -> Mat2 {
        mat_mul(&self.q, &self.a)
    }

    pub fn qa_power(&self) -> Mat2 {
        let qa = self.qa();
        let mut acc = [[1.0, 0.0], [0.0, 1.0]];
        for _ in 0..self.m {
            acc = mat_mul(&acc, &qa);
        }
        acc
    }

    /// Distance of `(Q A_m)^m` from the nearer of `I` and `-I`, entrywise.
    pub fn power_defect(&self) -> f64 {
        let p = self.qa_power();
        let dist = |sign: f64| {
            (p[0][0] - sign)
                .abs()
                .max(p[0][1].abs())
                .max(p[1][0].abs())
                .max((p[1][1] - sign).abs())
        };
        dist(1.0).min(dist(-1.0))
    }

    pub fn trace_defect(&self) -> f64 {
        let qa = self.qa();
        ((qa[0][0] + qa[1][1]).abs() - self.lambda()).abs()
    }
}

pub fn hecke_matrices(m: u32) -> Result<HeckeMatrices> {
    if m < 3 {
        return Err(Error::IndexTooSmall(m));
    }
    let lambda = 2.0 * (PI / m as f64).cos();
    Ok(HeckeMatrices {
        m,
        a: [[1.0, lambda], [0.0, 1.0]],
        q: [[0.0, 1.0], [-1.0, 0.0]],
    })
}
