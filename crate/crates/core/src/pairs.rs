//! Isometry groups of hyperbolic 2-bridge link complements and the ledger of
//! candidate parabolic generating pairs.
//!
//! Every candidate pair carries its omega-invariant: the image of the product
//! of the two meridians in `H_1` of the double branched cover, a cyclic group
//! of order `p`. A pair can only generate the link group when this class
//! generates `Z_p`, which rules out every candidate except the upper and lower
//! meridian pairs.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::farey::cross;
use crate::rational::{link_kind, residue_class, LinkKind, Slope};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IsomGroup {
    /// `(Z_2)^2`
    Z2xZ2,
    /// Dihedral group of order 8.
    D4,
    /// `(Z_2)^3`
    Z2cubed,
}

impl fmt::Display for IsomGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IsomGroup::Z2xZ2 => "(Z2)^2",
            IsomGroup::D4 => "D4",
            IsomGroup::Z2cubed => "(Z2)^3",
        })
    }
}

/// The residues `q^2 mod p` and `q^2 mod 2p` that drive every case split.
struct SquareClass {
    p: BigInt,
    q: BigInt,
    sq_mod_p_is_one: bool,
    sq_mod_2p: BigInt,
}

impl SquareClass {
    fn of(r: &Slope) -> Result<Self> {
        let kind = link_kind(r)?;
        if !kind.is_hyperbolic() {
            return Err(Error::NotHyperbolic(r.to_string()));
        }
        let p = r.den().clone();
        let q = residue_class(r)?;
        let sq = &q * &q;
        Ok(SquareClass {
            sq_mod_p_is_one: sq.mod_floor(&p).is_one(),
            sq_mod_2p: sq.mod_floor(&(&p * 2u8)),
            p,
            q,
        })
    }

    fn p_odd(&self) -> bool {
        self.p.is_odd()
    }

    /// `p` even and `q^2 = 1 (mod 2p)`.
    fn edge_symmetric(&self) -> bool {
        self.p.is_even() && self.sq_mod_2p.is_one()
    }

    /// `p` odd and `q^2 = 1 (mod p)`, or `p` even and `q^2 = p + 1 (mod 2p)`.
    fn geodesic_symmetric(&self) -> bool {
        if self.p_odd() {
            self.sq_mod_p_is_one
        } else {
            self.sq_mod_2p == &self.p + 1u8
        }
    }

    /// Whether the link has extra strong inversions.
    fn has_extra_inversion(&self) -> bool {
        if self.p_odd() {
            self.sq_mod_p_is_one
        } else {
            self.edge_symmetric()
        }
    }
}

pub fn isometry_group(r: &Slope) -> Result<IsomGroup> {
    let sc = SquareClass::of(r)?;
    Ok(if sc.edge_symmetric() {
        IsomGroup::Z2cubed
    } else if sc.geodesic_symmetric() {
        IsomGroup::D4
    } else {
        IsomGroup::Z2xZ2
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitCase {
    /// The extra involution is the reflection in a Farey edge; `p = 2 p1 p2`.
    EdgeCase,
    /// The extra involution is the reflection in a geodesic; `p = p1 p2`.
    GeodesicCase,
}

/// Endpoints `s1 = q1/p1`, `s2 = q2/p2` (`p1 <= p2`) of the edge or geodesic
/// whose reflection swaps `inf` and `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtraSplit {
    pub s1: Slope,
    pub s2: Slope,
    pub case: SplitCase,
}

/// Solves for the extra split of `r` by searching factorizations of `p/2`
/// (edge case) or `p` (geodesic case).
pub fn extra_split(r: &Slope) -> Result<ExtraSplit> {
    let sc = SquareClass::of(r)?;
    let case = if sc.edge_symmetric() {
        SplitCase::EdgeCase
    } else if sc.geodesic_symmetric() {
        SplitCase::GeodesicCase
    } else {
        return Err(Error::ConditionNotMet(r.to_string()));
    };
    let mut solutions = split_solutions(&sc.p, &sc.q, case);
    if solutions.is_empty() {
        solutions = split_solutions(&sc.p, &(&sc.p - &sc.q), case);
    }
    match solutions.len() {
        0 => Err(Error::NoSolution(r.to_string())),
        1 => {
            let (s1, s2) = solutions.pop().expect("one solution");
            Ok(ExtraSplit { s1, s2, case })
        }
        n => Err(Error::Ambiguous(r.to_string(), n)),
    }
}

/// All unordered solutions `{q1/p1, q2/p2}` with `p1 <= p2` of
/// `p2 q1 + p1 q2 = t q`, `p2 q1 - p1 q2 = +-t`, `p1 p2 = N`, where `t = 1`,
/// `N = p/2` in the edge case and `t = 2`, `N = p` in the geodesic case.
fn split_solutions(p: &BigInt, q: &BigInt, case: SplitCase) -> Vec<(Slope, Slope)> {
    let (n, det) = match case {
        SplitCase::EdgeCase => (p / 2u8, BigInt::one()),
        SplitCase::GeodesicCase => (p.clone(), BigInt::from(2u8)),
    };
    let two = BigInt::from(2u8);
    let mut found: Vec<(Slope, Slope)> = Vec::new();
    let mut d = two.clone();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let e = &n / &d;
            for (p1, p2) in [(d.clone(), e.clone()), (e.clone(), d.clone())] {
                for sign in [1i8, -1] {
                    let signed = if sign > 0 { det.clone() } else { -det.clone() };
                    // p2 q1 = (t q + signed)/2, p1 q2 = (t q - signed)/2
                    let tq = match case {
                        SplitCase::EdgeCase => q.clone(),
                        SplitCase::GeodesicCase => q * 2u8,
                    };
                    let x = &tq + &signed;
                    let y = &tq - &signed;
                    if x.is_odd() || y.is_odd() {
                        continue;
                    }
                    let (x, y) = (x / 2u8, y / 2u8);
                    if !(&x % &p2).is_zero() || !(&y % &p1).is_zero() {
                        continue;
                    }
                    let (q1, q2) = (x / &p2, y / &p1);
                    let admissible = |qi: &BigInt, pi: &BigInt| {
                        qi.is_positive() && qi < pi && qi.gcd(pi).is_one()
                    };
                    if !admissible(&q1, &p1) || !admissible(&q2, &p2) {
                        continue;
                    }
                    let s1 = Slope::new(q1, p1.clone()).expect("valid");
                    let s2 = Slope::new(q2, p2.clone()).expect("valid");
                    let pair = order_split(s1, s2);
                    if !found.contains(&pair) {
                        found.push(pair);
                    }
                }
            }
        }
        d += 1u8;
    }
    found
}

fn order_split(s1: Slope, s2: Slope) -> (Slope, Slope) {
    if (s1.den(), &s1) <= (s2.den(), &s2) {
        (s1, s2)
    } else {
        (s2, s1)
    }
}

impl ExtraSplit {
    /// Checks the exact identities tying the split to `r`.
    pub fn verify(&self, r: &Slope) -> bool {
        let (p, q) = (r.den(), match residue_class(r) {
            Ok(q) => q,
            Err(_) => return false,
        });
        let (p1, q1, p2, q2) = (self.s1.den(), self.s1.num(), self.s2.den(), self.s2.num());
        let det = cross(&self.s1, &self.s2).abs();
        let sum = p1 * q2 + p2 * q1;
        let in_range = |pi: &BigInt| pi > &BigInt::one() && pi < p;
        if !in_range(p1) || !in_range(p2) || p1 > p2 {
            return false;
        }
        match self.case {
            SplitCase::EdgeCase => {
                det.is_one() && *p == p1 * p2 * 2u8 && (sum == q || sum == p - &q)
            }
            SplitCase::GeodesicCase => {
                det == BigInt::from(2u8)
                    && *p == p1 * p2
                    && (sum == &q * 2u8 || sum == (p - &q) * 2u8)
            }
        }
    }
}

/// Class of `omega(m1, m2)` in `Z_p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OmegaValue {
    Exact(#[serde(with = "crate::serde_int")] BigInt),
    InSet(#[serde(with = "crate::serde_int::vec")] Vec<BigInt>),
    /// Known to generate `Z_p`, residue not fixed.
    GeneratorClass,
}

impl OmegaValue {
    /// Whether the class could generate `Z_p`.
    pub fn could_generate(&self, p: &BigInt) -> bool {
        match self {
            OmegaValue::GeneratorClass => true,
            OmegaValue::Exact(k) => k.gcd(p).is_one(),
            OmegaValue::InSet(ks) => ks.iter().any(|k| k.gcd(p).is_one()),
        }
    }
}

impl fmt::Display for OmegaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OmegaValue::Exact(k) => write!(f, "{k}"),
            OmegaValue::InSet(ks) => {
                let parts: Vec<String> = ks.iter().map(ToString::to_string).collect();
                write!(f, "{{{}}}", parts.join(","))
            }
            OmegaValue::GeneratorClass => f.write_str("generator"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PairKind {
    Upper,
    Lower,
    LongUpper,
    LongLower,
    IntermediateL,
    IntermediateR,
    /// A meridian pair carried by a fixed arc of an extra strong inversion.
    Extra {
        strong_inversion: u8,
        arc: u8,
        arc_slope: Slope,
    },
}

impl PairKind {
    pub fn name(&self) -> &'static str {
        match self {
            PairKind::Upper => "upper",
            PairKind::Lower => "lower",
            PairKind::LongUpper => "long_upper",
            PairKind::LongLower => "long_lower",
            PairKind::IntermediateL => "intermediate_l",
            PairKind::IntermediateR => "intermediate_r",
            PairKind::Extra { .. } => "extra",
        }
    }
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairKind::Extra {
                strong_inversion,
                arc,
                arc_slope,
            } => write!(f, "extra(inversion {strong_inversion}, arc {arc}, slope {arc_slope})"),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCandidate {
    #[serde(flatten)]
    pub kind: PairKind,
    pub omega: OmegaValue,
    pub generates: bool,
    pub note: String,
}

pub fn omega_of_candidate(kind: &PairKind, r: &Slope) -> Result<OmegaValue> {
    let sc = SquareClass::of(r)?;
    let not_applicable = || Error::KindNotApplicable(kind.to_string(), r.to_string());
    match kind {
        PairKind::Upper | PairKind::Lower => Ok(OmegaValue::GeneratorClass),
        PairKind::LongUpper | PairKind::LongLower if sc.p_odd() => {
            Ok(OmegaValue::Exact(BigInt::zero()))
        }
        PairKind::IntermediateL | PairKind::IntermediateR if !sc.p_odd() => {
            Ok(OmegaValue::InSet(vec![BigInt::zero(), &sc.p / 2u8]))
        }
        PairKind::Extra { arc_slope, .. } if sc.has_extra_inversion() => {
            let split = extra_split(r)?;
            if *arc_slope != split.s1 && *arc_slope != split.s2 {
                return Err(not_applicable());
            }
            Ok(OmegaValue::Exact(arc_slope.den().mod_floor(&sc.p)))
        }
        _ => Err(not_applicable()),
    }
}

/// Every parabolic generating pair of `G(r)` is equivalent to one of these.
pub fn candidates(r: &Slope) -> Result<Vec<PairCandidate>> {
    let sc = SquareClass::of(r)?;
    let mut kinds: Vec<(PairKind, String)> = vec![
        (PairKind::Upper, "meridian pair of the upper tunnel".into()),
        (PairKind::Lower, "meridian pair of the lower tunnel".into()),
    ];
    if sc.p_odd() {
        kinds.push((
            PairKind::LongUpper,
            "second fixed tunnel of the strong inversion fixing the upper tunnel".into(),
        ));
        kinds.push((
            PairKind::LongLower,
            "second fixed tunnel of the strong inversion fixing the lower tunnel".into(),
        ));
    } else {
        let note = "equivalent to the other intermediate pair modulo the automorphism induced by the vertical involution";
        kinds.push((PairKind::IntermediateL, note.into()));
        kinds.push((PairKind::IntermediateR, note.into()));
    }
    if sc.has_extra_inversion() {
        let split = extra_split(r)?;
        let slopes = [&split.s1, &split.s2];
        let extras: Vec<(u8, u8, usize)> = if sc.p_odd() {
            // two extra strong inversions, conjugate by the order-4 symmetry
            vec![(0, 0, 0), (0, 0, 1), (1, 0, 0), (1, 0, 1)]
        } else {
            // one extra strong inversion with four fixed arcs
            vec![(0, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 1)]
        };
        let via = if sc.p_odd() {
            "the order-4 extra symmetry"
        } else {
            "the vertical involution"
        };
        for (inv, arc, which) in extras {
            kinds.push((
                PairKind::Extra {
                    strong_inversion: inv,
                    arc,
                    arc_slope: slopes[which].clone(),
                },
                format!(
                    "extra class {} (arc slope {}); its two members are equivalent modulo the automorphism induced by {via}",
                    which + 1,
                    slopes[which]
                ),
            ));
        }
    }
    kinds
        .into_iter()
        .map(|(kind, note)| {
            let omega = omega_of_candidate(&kind, r)?;
            let generates = omega.could_generate(&sc.p);
            Ok(PairCandidate {
                kind,
                omega,
                generates,
                note,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub slope: Slope,
    pub link_kind: LinkKind,
    pub isometry_group: IsomGroup,
    pub extra_split: Option<ExtraSplit>,
    pub candidates: Vec<PairCandidate>,
    /// Names of the candidates whose omega-class can generate `Z_p`.
    pub verdict: Vec<String>,
    pub upper_lower_equivalent: bool,
    pub statements: Vec<String>,
}

pub fn classify(r: &Slope) -> Result<ClassificationReport> {
    let kind = link_kind(r)?;
    if !kind.is_hyperbolic() {
        return Err(Error::NotHyperbolic(r.to_string()));
    }
    let candidates = candidates(r)?;
    let verdict: Vec<String> = candidates
        .iter()
        .filter(|c| c.generates)
        .map(|c| c.kind.name().to_string())
        .collect();
    let isometry_group = isometry_group(r)?;
    let extra_split = match extra_split(r) {
        Ok(split) => Some(split),
        Err(Error::ConditionNotMet(_)) => None,
        Err(e) => return Err(e),
    };
    let mut statements = vec![
        "every parabolic generating pair is equivalent to the upper or the lower meridian pair"
            .to_string(),
        "the upper and lower meridian pairs are not equivalent".to_string(),
        "a generating pair has omega generating Z_p; every other candidate fails this".to_string(),
    ];
    if kind == LinkKind::HyperbolicTwoComponent {
        statements.push(
            "the two intermediate pairs are equivalent modulo the vertical involution; equivalence as pairs is not decided"
                .to_string(),
        );
    }
    if candidates.iter().any(|c| matches!(c.kind, PairKind::Extra { .. })) {
        statements.push(
            "the four extra meridian pairs are divided into two classes up to automorphisms"
                .to_string(),
        );
    }
    Ok(ClassificationReport {
        slope: r.clone(),
        link_kind: kind,
        isometry_group,
        extra_split,
        candidates,
        verdict,
        upper_lower_equivalent: false,
        statements,
    })
}
