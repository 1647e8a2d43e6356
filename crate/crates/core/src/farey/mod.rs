//! The Farey tessellation as an arithmetic object: edge reflections, the
//! reflection groups generated by the edges at a vertex, reduction to a
//! fundamental domain of `Gamma_inf * Gamma_r`, and orbit membership with
//! verifiable witness words.

mod matrix;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Slope;

pub use matrix::{
    conjugator_to_infinity, cross, farey_neighbors, reflection_in_edge, Fan, FareyEdge,
    ProjMatrix,
};

/// A product of edge reflections, written left to right and applied right
/// to left: `[e1, e2, e3]` acts as `R(e1) R(e2) R(e3)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReflectionWord {
    edges: Vec<FareyEdge>,
}

impl ReflectionWord {
    pub fn new(edges: Vec<FareyEdge>) -> Self {
        ReflectionWord { edges }
    }

    /// Builds a word from reflections listed in the order they are applied.
    pub fn from_applied(mut applied: Vec<FareyEdge>) -> Self {
        applied.reverse();
        ReflectionWord { edges: applied }
    }

    pub fn edges(&self) -> &[FareyEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn matrix(&self) -> ProjMatrix {
        self.edges
            .iter()
            .fold(ProjMatrix::identity(), |m, e| &m * &e.reflection())
    }

    pub fn apply(&self, x: &Slope) -> Slope {
        self.matrix().apply(x)
    }
}

impl fmt::Display for ReflectionWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

/// Result of testing whether `x` lies in the orbit of `r` or of infinity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum MembershipVerdict {
    InOrbitOfR { word: ReflectionWord },
    InOrbitOfInfinity { word: ReflectionWord },
    NotInOrbit { reduced_rep: Slope },
}

impl MembershipVerdict {
    pub fn is_member(&self) -> bool {
        !matches!(self, MembershipVerdict::NotInOrbit { .. })
    }

    pub fn word(&self) -> Option<&ReflectionWord> {
        match self {
            MembershipVerdict::InOrbitOfR { word } | MembershipVerdict::InOrbitOfInfinity { word } => {
                Some(word)
            }
            MembershipVerdict::NotInOrbit { .. } => None,
        }
    }
}

/// Folds `x` into `[c, c+1] U {inf}` with at most two reflections
/// `t -> 2n - t`.
pub fn fold_to_strip(x: &Slope, c: &BigInt) -> (Slope, ReflectionWord) {
    let mut applied = Vec::new();
    let y = fold_applied(x, c, &mut applied);
    (y, ReflectionWord::from_applied(applied))
}

fn fold_applied(x: &Slope, c: &BigInt, applied: &mut Vec<FareyEdge>) -> Slope {
    if x.is_infinite() {
        return x.clone();
    }
    let (num, den) = (x.num(), x.den());
    // x - c = 2k + u with u in [0, 2)
    let k = (num - c * den).div_floor(&(den * 2u8));
    let u_num = num - c * den - &k * den * 2u8;
    if u_num <= *den {
        if k.is_zero() {
            return x.clone();
        }
        // x - 2k = rho_c(rho_{c+k}(x))
        applied.push(FareyEdge::vertical(c + &k));
        applied.push(FareyEdge::vertical(c.clone()));
        x.add_integer(&(-(&k * 2u8)))
    } else {
        // 2(c+1+k) - x lies in [c, c+1]
        let n = c + 1u8 + &k;
        applied.push(FareyEdge::vertical(n.clone()));
        x.neg().add_integer(&(n * 2u8))
    }
}

/// Fixed data for reducing modulo `Gamma_inf * Gamma_r`.
#[derive(Debug, Clone)]
pub struct Reducer {
    r: Slope,
    strip: BigInt,
    to_inf: ProjMatrix,
    from_inf: ProjMatrix,
    wedge_strip: BigInt,
}

impl Reducer {
    pub fn new(r: &Slope) -> Result<Self> {
        if r.is_infinite() {
            return Err(Error::InfinityInput);
        }
        if r.is_integer() {
            return Err(Error::IntegerSlope(r.to_string()));
        }
        let to_inf = conjugator_to_infinity(r)?;
        let from_inf = to_inf.inverse();
        let wedge_strip = to_inf
            .apply(&Slope::infinity())
            .floor()
            .expect("B(inf) is finite");
        Ok(Reducer {
            r: r.clone(),
            strip: r.floor().expect("finite"),
            to_inf,
            from_inf,
            wedge_strip,
        })
    }

    pub fn slope(&self) -> &Slope {
        &self.r
    }

    /// The four generating reflections: the two strip walls at infinity and
    /// the two walls at `r` of the wedge containing infinity.
    pub fn generators(&self) -> [FareyEdge; 4] {
        let wall = |n: BigInt| FareyEdge::vertical(n).image(&self.from_inf);
        [
            FareyEdge::vertical(self.strip.clone()),
            FareyEdge::vertical(&self.strip + 1u8),
            wall(self.wedge_strip.clone()),
            wall(&self.wedge_strip + 1u8),
        ]
    }

    pub fn iteration_cap(x: &Slope) -> usize {
        64 + 4 * x.bit_length() as usize
    }

    pub fn reduce(&self, x: &Slope) -> Result<(Slope, ReflectionWord)> {
        let cap = Self::iteration_cap(x);
        let mut cur = x.clone();
        let mut applied = Vec::new();
        for _ in 0..cap {
            let before = applied.len();
            cur = fold_applied(&cur, &self.strip, &mut applied);

            let mut wedge_moves = Vec::new();
            let folded = fold_applied(&self.to_inf.apply(&cur), &self.wedge_strip, &mut wedge_moves);
            if !wedge_moves.is_empty() {
                cur = self.from_inf.apply(&folded);
                applied.extend(wedge_moves.iter().map(|e| e.image(&self.from_inf)));
            }
            if applied.len() == before {
                return Ok((cur, ReflectionWord::from_applied(applied)));
            }
        }
        Err(Error::IterationCapExceeded(cap))
    }

    pub fn orbit_member(&self, x: &Slope) -> Result<MembershipVerdict> {
        let (rep, word) = self.reduce(x)?;
        let verdict = if rep == self.r {
            MembershipVerdict::InOrbitOfR { word }
        } else if rep.is_infinite() {
            MembershipVerdict::InOrbitOfInfinity { word }
        } else {
            return Ok(MembershipVerdict::NotInOrbit { reduced_rep: rep });
        };
        let w = verdict.word().expect("positive verdict");
        assert_eq!(w.apply(x), rep, "witness word does not map {x} to {rep}");
        Ok(verdict)
    }
}

pub fn reduce(x: &Slope, r: &Slope) -> Result<(Slope, ReflectionWord)> {
    Reducer::new(r)?.reduce(x)
}

/// Whether `x` is in the `Gamma_inf * Gamma_r`-orbit of `r` or of infinity.
///
/// Orbit elements all have denominator divisible by `p`, which rejects most
/// inputs before any reduction; the reduced representative is still reported.
pub fn orbit_member(x: &Slope, r: &Slope) -> Result<MembershipVerdict> {
    let reducer = Reducer::new(r)?;
    if !(x.den() % r.den()).is_zero() {
        let (rep, _) = reducer.reduce(x)?;
        return Ok(MembershipVerdict::NotInOrbit { reduced_rep: rep });
    }
    reducer.orbit_member(x)
}

/// Brute-force orbit enumeration: images of `{r, inf}` under all words of
/// length at most `depth` in the four generators, keeping denominators up to
/// `max_den`.
pub fn orbit_bfs(r: &Slope, depth: usize, max_den: &BigInt) -> Result<BTreeSet<Slope>> {
    let reducer = Reducer::new(r)?;
    let gens: Vec<ProjMatrix> = reducer.generators().iter().map(|e| e.reflection()).collect();
    let mut seen: BTreeSet<Slope> = [r.clone(), Slope::infinity()].into_iter().collect();
    let mut frontier: Vec<Slope> = seen.iter().cloned().collect();
    for _ in 0..depth {
        let mut next = Vec::new();
        for x in &frontier {
            for g in &gens {
                let y = g.apply(x);
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    Ok(seen.into_iter().filter(|s| s.den() <= max_den).collect())
}
