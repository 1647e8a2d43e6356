//! Epimorphisms between 2-bridge knot groups.

mod groups;
mod presentation;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use groups::FiniteGroupTable;
pub use presentation::{
    dihedral_witness, free_reduce, hom_count, riley_presentation, Letter, Presentation,
};

use crate::error::{Error, Result};
use crate::farey::{MembershipVerdict, Reducer, ReflectionWord};
use crate::rational::{inverse_slope, Slope};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Clause {
    #[serde(rename = "C1_r")]
    C1R,
    #[serde(rename = "C1_rPlus1")]
    C1RPlus1,
    #[serde(rename = "C2_r")]
    C2R,
    #[serde(rename = "C2_rPlus1")]
    C2RPlus1,
    TrivialTarget,
}

impl Clause {
    /// 1 for the orbit of `r`, 2 for the orbit of `r'`, 0 for a trivial target.
    pub fn number(self) -> u8 {
        match self {
            Clause::C1R | Clause::C1RPlus1 => 1,
            Clause::C2R | Clause::C2RPlus1 => 2,
            Clause::TrivialTarget => 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpiVerdict {
    pub exists: bool,
    pub satisfied_clause: Option<Clause>,
    pub witness: Option<ReflectionWord>,
    /// The slope the witness acts on: `r~` or `r~ + 1`.
    pub tested: Option<Slope>,
    /// `r` or `r'`, whichever orbit was hit.
    pub base: Option<Slope>,
    pub obstruction: Option<String>,
}

impl EpiVerdict {
    /// Whether the witness maps the tested slope into `{base, inf}`.
    pub fn witness_is_valid(&self) -> bool {
        match (&self.witness, &self.tested, &self.base) {
            (Some(w), Some(x), Some(b)) => {
                let y = w.apply(x);
                y == *b || y.is_infinite()
            }
            _ => self.satisfied_clause == Some(Clause::TrivialTarget),
        }
    }
}

impl fmt::Display for EpiVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.exists, self.satisfied_clause) {
            (true, Some(Clause::TrivialTarget)) => f.write_str("YES (trivial knot target)"),
            (true, Some(c)) => write!(
                f,
                "YES (clause {}, witness length {})",
                c.number(),
                self.witness.as_ref().map_or(0, |w| w.len())
            ),
            _ => write!(
                f,
                "NO ({})",
                self.obstruction.as_deref().unwrap_or("no orbit contains the slope")
            ),
        }
    }
}

fn require_knot(s: &Slope) -> Result<()> {
    if s.is_infinite() {
        return Err(Error::InfinityInput);
    }
    if s.den().is_even() {
        return Err(Error::LinkSlope(s.to_string()));
    }
    Ok(())
}

fn unit_representative(r: &Slope) -> Slope {
    let fl = r.floor().expect("finite slope");
    r.add_integer(&-fl)
}

/// Decides whether `G(r~)` maps onto `G(r)` for 2-bridge knots.
///
/// `r~` or `r~ + 1` must lie in the orbit of `r` or `inf` under the group
/// generated by reflections in the Farey edges at `r` and at `inf`, or
/// likewise for `r' = inverse_slope(r)`.
pub fn epi_exists(r_tilde: &Slope, r: &Slope) -> Result<EpiVerdict> {
    require_knot(r_tilde)?;
    require_knot(r)?;
    if r.den().is_one() {
        return Ok(EpiVerdict {
            exists: true,
            satisfied_clause: Some(Clause::TrivialTarget),
            witness: None,
            tested: None,
            base: None,
            obstruction: None,
        });
    }
    let r0 = unit_representative(r);
    let r1 = inverse_slope(&r0)?;
    let shifted = r_tilde.add_integer(&BigInt::one());
    let tests = [
        (Clause::C1R, r_tilde, &r0),
        (Clause::C1RPlus1, &shifted, &r0),
        (Clause::C2R, r_tilde, &r1),
        (Clause::C2RPlus1, &shifted, &r1),
    ];
    let p = r.den();
    if !(r_tilde.den() % p).is_zero() {
        return Ok(EpiVerdict {
            exists: false,
            satisfied_clause: None,
            witness: None,
            tested: None,
            base: None,
            obstruction: Some(format!(
                "denominator {} ≢ 0 mod {} for both {} and {}; r′ = {}",
                r_tilde.den(),
                p,
                r_tilde,
                shifted,
                r1
            )),
        });
    }
    let reducers = [Reducer::new(&r0)?, Reducer::new(&r1)?];
    let mut reps = Vec::new();
    for (clause, x, base) in tests {
        let reducer = if base == &r0 { &reducers[0] } else { &reducers[1] };
        match reducer.orbit_member(x)? {
            MembershipVerdict::NotInOrbit { reduced_rep } => reps.push(reduced_rep),
            v => {
                let verdict = EpiVerdict {
                    exists: true,
                    satisfied_clause: Some(clause),
                    witness: v.word().cloned(),
                    tested: Some(x.clone()),
                    base: Some(base.clone()),
                    obstruction: None,
                };
                debug_assert!(verdict.witness_is_valid());
                return Ok(verdict);
            }
        }
    }
    Ok(EpiVerdict {
        exists: false,
        satisfied_clause: None,
        witness: None,
        tested: None,
        base: None,
        obstruction: Some(format!(
            "{} and {} reduce to {}, {} modulo the group of {} and to {}, {} modulo the group of r′ = {}",
            r_tilde, shifted, reps[0], reps[1], r0, reps[2], reps[3], r1
        )),
    })
}

/// Whether `r~` or `r~ + 1` lies in the orbit of `r` or `inf`; valid for
/// links as a sufficient condition.
pub fn ors_orbit_condition(
    r_tilde: &Slope,
    r: &Slope,
) -> Result<(bool, Option<ReflectionWord>)> {
    let reducer = Reducer::new(r)?;
    if r_tilde.is_infinite() {
        return Ok((true, Some(ReflectionWord::default())));
    }
    for x in [r_tilde.clone(), r_tilde.add_integer(&BigInt::one())] {
        if !(x.den() % r.den()).is_zero() {
            continue;
        }
        let v = reducer.orbit_member(&x)?;
        if v.is_member() {
            return Ok((true, v.word().cloned()));
        }
    }
    Ok((false, None))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomComparison {
    pub group: String,
    pub target_count: usize,
    pub source_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub checked: Vec<HomComparison>,
    pub violations: Vec<String>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

fn knot_hom_count(s: &Slope, g: &FiniteGroupTable) -> Result<usize> {
    if s.den().is_one() {
        return Ok(g.order());
    }
    Ok(hom_count(&riley_presentation(s)?, g))
}

/// An epimorphism `G(r~) -> G(r)` injects `Hom(G(r), F)` into
/// `Hom(G(r~), F)`; checks that inequality for every table.
pub fn epi_consistency_check(
    r_tilde: &Slope,
    r: &Slope,
    verdict: &EpiVerdict,
    tables: &[FiniteGroupTable],
) -> Result<ConsistencyReport> {
    let mut report = ConsistencyReport {
        checked: Vec::new(),
        violations: Vec::new(),
    };
    if !verdict.exists {
        return Ok(report);
    }
    if !verdict.witness_is_valid() {
        report
            .violations
            .push(format!("witness for {r_tilde} -> {r} does not verify"));
    }
    if r.den() > &BigInt::one() && !(r_tilde.den() % r.den()).is_zero() {
        report
            .violations
            .push(format!("{} does not divide {}", r.den(), r_tilde.den()));
    }
    for g in tables {
        let target_count = knot_hom_count(r, g)?;
        let source_count = knot_hom_count(r_tilde, g)?;
        if target_count > source_count {
            report.violations.push(format!(
                "|Hom(G({r}), {0})| = {target_count} exceeds |Hom(G({r_tilde}), {0})| = {source_count}",
                g.name()
            ));
        }
        report.checked.push(HomComparison {
            group: g.name().to_string(),
            target_count,
            source_count,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::slope;

    #[test]
    fn torus_knot_example() {
        let v = epi_exists(&slope(1, 9), &slope(1, 3)).unwrap();
        assert!(v.exists);
        assert_eq!(v.satisfied_clause.unwrap().number(), 1);
        assert_eq!(v.witness.as_ref().unwrap().len(), 2);
        assert!(v.witness_is_valid());
        assert_eq!(v.to_string(), "YES (clause 1, witness length 2)");
    }

    #[test]
    fn denominator_obstruction() {
        let v = epi_exists(&slope(2, 5), &slope(1, 3)).unwrap();
        assert!(!v.exists);
        assert_eq!(
            v.obstruction.as_deref(),
            Some("denominator 5 ≢ 0 mod 3 for both 2/5 and 7/5; r′ = 1/3")
        );
    }

    #[test]
    fn self_maps() {
        let v = epi_exists(&slope(3, 7), &slope(3, 7)).unwrap();
        assert!(v.exists);
        assert_eq!(v.satisfied_clause, Some(Clause::C1R));
        assert!(v.witness.unwrap().is_empty());
    }

    #[test]
    fn trivial_and_rejected_targets() {
        let v = epi_exists(&slope(3, 7), &slope(2, 1)).unwrap();
        assert_eq!(v.satisfied_clause, Some(Clause::TrivialTarget));
        assert!(matches!(
            epi_exists(&slope(1, 3), &slope(1, 4)),
            Err(Error::LinkSlope(_))
        ));
        assert!(matches!(
            epi_exists(&Slope::infinity(), &slope(1, 3)),
            Err(Error::InfinityInput)
        ));
    }

    #[test]
    fn orbit_condition() {
        assert!(ors_orbit_condition(&slope(1, 6), &slope(1, 3)).unwrap().0);
        let (ok, w) = ors_orbit_condition(&slope(11, 30), &slope(2, 5)).unwrap();
        assert!(ok);
        assert!(!w.unwrap().is_empty());
        assert!(!ors_orbit_condition(&slope(1, 2), &slope(1, 3)).unwrap().0);
        assert!(matches!(
            ors_orbit_condition(&slope(1, 2), &slope(1, 1)),
            Err(Error::IntegerSlope(_))
        ));
    }

    #[test]
    fn consistency() {
        let (rt, r) = (slope(1, 9), slope(1, 3));
        let v = epi_exists(&rt, &r).unwrap();
        let rep = epi_consistency_check(&rt, &r, &v, &[FiniteGroupTable::symmetric(3)]).unwrap();
        assert!(rep.is_consistent());
        assert_eq!(rep.checked[0].target_count, 12);
        assert!(rep.checked[0].source_count >= 12);

        let rep = epi_consistency_check(&rt, &r, &v, &[FiniteGroupTable::cyclic(5)]).unwrap();
        assert_eq!((rep.checked[0].target_count, rep.checked[0].source_count), (5, 5));

        let v = epi_exists(&r, &r).unwrap();
        let rep = epi_consistency_check(&r, &r, &v, &FiniteGroupTable::builtins()).unwrap();
        assert!(rep.is_consistent());
    }

    #[test]
    fn verdict_json() {
        let v = epi_exists(&slope(1, 9), &slope(1, 3)).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        assert!(json.contains("\"satisfied_clause\":\"C1_r\""));
        let back: EpiVerdict = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }
}
