//! Exhaustive and seeded property sweeps over every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::contfrac::{
    cf_even, cf_eval, cf_positive, even_symmetry_class, pos_symmetry_class, EvenSymmetry,
    PosSymmetry,
};
use crate::epi::{dihedral_witness, epi_exists, riley_presentation};
use crate::farey::{orbit_bfs, FareyEdge, Reducer, ReflectionWord};
use crate::heckoid::{hat_r, heckoid_descriptor, hecke_matrices, Family};
use crate::pairs::{classify, isometry_group, IsomGroup, OmegaValue, PairKind};
use crate::rational::{inverse_slope, is_unit_residue, proper_slopes, slope, Slope};

const MAX_RECORDED: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepResult {
    pub name: String,
    pub checked: usize,
    pub violation_count: usize,
    pub violations: Vec<String>,
}

impl SweepResult {
    fn new(name: &str) -> Self {
        SweepResult {
            name: name.to_string(),
            checked: 0,
            violation_count: 0,
            violations: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violation_count += 1;
            if self.violations.len() < MAX_RECORDED {
                self.violations.push(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfcheckReport {
    pub max_p: u64,
    pub seed: u64,
    pub sweeps: Vec<SweepResult>,
}

impl SelfcheckReport {
    pub fn passed(&self) -> bool {
        self.sweeps.iter().all(SweepResult::passed)
    }
}

fn lower_half(max_p: u64) -> impl Iterator<Item = Slope> {
    proper_slopes(3, max_p).filter(|r| r.num() * 2u8 <= *r.den())
}

fn hyperbolic(max_p: u64) -> impl Iterator<Item = Slope> {
    proper_slopes(3, max_p).filter(|r| !is_unit_residue(r).unwrap_or(true))
}

fn sweep_even_cf(max_p: u64) -> SweepResult {
    let mut s = SweepResult::new("even continued fractions");
    for r in lower_half(max_p) {
        let (p, q) = (r.den(), r.num());
        if p.is_odd() && q.is_odd() {
            continue;
        }
        let Ok(cf) = cf_even(&r) else {
            s.check(false, || format!("{r}: no even expansion"));
            continue;
        };
        s.check(cf_eval(&cf.entries()).ok().as_ref() == Some(&r), || {
            format!("{r}: {cf} does not evaluate back")
        });
        s.check((cf.len() % 2 == 0) == p.is_odd(), || format!("{r}: length parity"));
        let class = even_symmetry_class(&r).ok();
        if p.is_odd() {
            let congruent = (q * q).mod_floor(p).is_one();
            s.check((class == Some(EvenSymmetry::Antipalindromic)) == congruent, || {
                format!("{r}: antipalindrome iff q^2 = 1 mod p")
            });
        } else {
            let congruent = (q * q).mod_floor(&(p * 2u8)).is_one();
            s.check((class == Some(EvenSymmetry::Palindromic)) == congruent, || {
                format!("{r}: palindrome iff q^2 = 1 mod 2p")
            });
        }
    }
    s
}

fn sweep_positive_cf(max_p: u64) -> SweepResult {
    let mut s = SweepResult::new("positive continued fractions");
    for r in lower_half(max_p) {
        let (p, q) = (r.den(), r.num());
        let Ok(cf) = cf_positive(&r) else {
            s.check(false, || format!("{r}: no positive expansion"));
            continue;
        };
        let a = cf.entries();
        let two = BigInt::from(2);
        s.check(a[0] >= two && a[a.len() - 1] >= two, || format!("{r}: end entries {cf}"));
        s.check(cf_eval(a).ok().as_ref() == Some(&r), || format!("{r}: {cf} round trip"));
        let two_p = p * 2u8;
        let sq = (q * q).mod_floor(&two_p);
        let even_case = p.is_even() && sq.is_one();
        let odd_case =
            (p.is_odd() && (q * q).mod_floor(p).is_one()) || (p.is_even() && sq == p + 1u8);
        let class = pos_symmetry_class(&r).ok();
        s.check((class == Some(PosSymmetry::SymEvenMiddle)) == even_case, || {
            format!("{r}: even middle case")
        });
        s.check((class == Some(PosSymmetry::SymOddMiddle)) == odd_case, || {
            format!("{r}: odd middle case")
        });
    }
    s
}

fn sweep_pairs(max_p: u64) -> SweepResult {
    let mut s = SweepResult::new("isometry groups and pair ledger");
    for r in hyperbolic(max_p) {
        let p = r.den();
        let Ok(rep) = classify(&r) else {
            s.check(false, || format!("{r}: classify failed"));
            continue;
        };
        s.check(rep.verdict == ["upper", "lower"], || format!("{r}: verdict {:?}", rep.verdict));
        for c in &rep.candidates {
            let ok = match (&c.kind, &c.omega) {
                (PairKind::Upper | PairKind::Lower, OmegaValue::GeneratorClass) => c.generates,
                (PairKind::LongUpper | PairKind::LongLower, OmegaValue::Exact(k)) => k.is_zero(),
                (PairKind::IntermediateL | PairKind::IntermediateR, OmegaValue::InSet(ks)) => {
                    ks.iter().all(|k| k.is_zero() || *k == p / 2u8)
                }
                (PairKind::Extra { arc_slope, .. }, OmegaValue::Exact(k)) => {
                    k == arc_slope.den() && k > &BigInt::one() && k < p && !k.gcd(p).is_one()
                }
                _ => false,
            };
            s.check(ok, || format!("{r}: candidate {}", c.kind));
        }
        if let Some(split) = &rep.extra_split {
            s.check(split.verify(&r), || format!("{r}: extra split identities"));
        } else {
            s.check(rep.isometry_group == IsomGroup::Z2xZ2, || {
                format!("{r}: symmetric slope without split")
            });
        }
        let sym = [
            isometry_group(&Slope::new(p - r.num(), p.clone()).expect("mirror")),
            isometry_group(&inverse_slope(&r).expect("inverse")),
        ];
        s.check(sym.iter().all(|g| g.as_ref().ok() == Some(&rep.isometry_group)), || {
            format!("{r}: mirror or inverse changes the isometry group")
        });
    }
    s
}

fn sweep_heckoid(max_p: u64, rng: &mut ChaCha8Rng) -> SweepResult {
    let mut s = SweepResult::new("heckoid descriptors");
    for r in proper_slopes(2, max_p) {
        let ok = hat_r(&r).is_ok_and(|h| h.num().gcd(h.den()).is_one() && h.den() <= r.den());
        s.check(ok, || format!("{r}: hat_r"));
    }
    let top = max_p.max(3) as i64;
    for _ in 0..200 {
        let p: i64 = rng.gen_range(2..=top);
        let q: i64 = rng.gen_range(1..p);
        let twice_n: u64 = rng.gen_range(3..64);
        if q.gcd(&p) != 1 {
            continue;
        }
        let r = slope(q, p);
        let expected = match (twice_n % 2, p % 2) {
            (0, _) => Family::M0,
            (_, 1) => Family::M1,
            _ => Family::M2,
        };
        let ok = heckoid_descriptor(&r, twice_n)
            .is_ok_and(|d| d.family == expected && d.is_consistent());
        s.check(ok, || format!("{r}, 2n = {twice_n}: family"));
    }
    for m in 3..=12 {
        let ok = hecke_matrices(m)
            .is_ok_and(|h| h.trace_defect() < 1e-12 && h.power_defect() < 1e-9);
        s.check(ok, || format!("H({m}) invariants"));
    }
    s
}

fn random_word(reducer: &Reducer, len: usize, rng: &mut ChaCha8Rng) -> ReflectionWord {
    let gens = reducer.generators();
    let edges: Vec<FareyEdge> = (0..len).map(|_| gens[rng.gen_range(0..4)].clone()).collect();
    ReflectionWord::new(edges)
}

fn sweep_orbits(rng: &mut ChaCha8Rng) -> SweepResult {
    let mut s = SweepResult::new("orbit reduction");
    let bases = [slope(1, 3), slope(2, 5), slope(3, 7), slope(2, 7), slope(5, 17)];
    for r in &bases {
        let reducer = Reducer::new(r).expect("non-integral base");
        for x in orbit_bfs(r, 4, &BigInt::from(500)).expect("bfs") {
            let ok = reducer.orbit_member(&x).is_ok_and(|v| {
                v.word().is_some_and(|w| {
                    let y = w.apply(&x);
                    y == *r || y.is_infinite()
                })
            });
            s.check(ok, || format!("{x} from the orbit of {r} is not recognized"));
            s.check((x.den() % r.den()).is_zero(), || format!("{x}: denominator"));
        }
    }
    for _ in 0..200 {
        let r = &bases[rng.gen_range(0..bases.len())];
        let reducer = Reducer::new(r).expect("non-integral base");
        let p: i64 = rng.gen_range(1..200);
        let x = slope(rng.gen_range(-400..400), p);
        let w = random_word(&reducer, rng.gen_range(0..8), rng);
        let ok = match (reducer.reduce(&x), reducer.reduce(&w.apply(&x))) {
            (Ok((a, _)), Ok((b, _))) => {
                a == b && reducer.reduce(&a).is_ok_and(|(c, word)| c == a && word.is_empty())
            }
            _ => false,
        };
        s.check(ok, || format!("reduce({x}) modulo {r} not word-invariant or idempotent"));
    }
    s
}

fn sweep_epi(max_p: u64) -> SweepResult {
    let mut s = SweepResult::new("epimorphism criterion");
    let one = BigInt::one();
    let top = max_p.min(60);
    let sources: Vec<Slope> = proper_slopes(3, top).filter(|r| r.den().is_odd()).collect();
    for p in [3i64, 5, 7] {
        for q in 1..p {
            if q.gcd(&p) != 1 {
                continue;
            }
            let r = slope(q, p);
            for rt in &sources {
                let Ok(v) = epi_exists(rt, &r) else {
                    s.check(false, || format!("{rt} -> {r}: error"));
                    continue;
                };
                if v.exists {
                    s.check(v.witness_is_valid(), || format!("{rt} -> {r}: witness"));
                    s.check((rt.den() % p).is_zero(), || format!("{rt} -> {r}: divisibility"));
                }
                let mirror = Slope::new(rt.den() - rt.num(), rt.den().clone()).expect("mirror");
                let variants = [
                    rt.add_integer(&one),
                    mirror,
                    inverse_slope(rt).expect("inverse"),
                ];
                for alt in variants {
                    let same = epi_exists(&alt, &r).is_ok_and(|w| w.exists == v.exists);
                    s.check(same, || format!("{rt} vs {alt} -> {r}: invariance"));
                }
            }
        }
    }
    for r in proper_slopes(3, max_p.min(40)).filter(|r| r.den().is_odd()) {
        let ok = riley_presentation(&r).is_ok_and(|pres| {
            let (a, b) = pres.exponent_sums();
            a == -b
        });
        s.check(ok, || format!("{r}: abelianization"));
        s.check(dihedral_witness(&r).is_ok_and(|w| w.is_some()), || {
            format!("{r}: no dihedral witness")
        });
    }
    s
}

/// Runs every sweep for denominators up to `max_p`; `seed` drives the
/// randomized parts.
pub fn selfcheck(max_p: u64, seed: u64) -> SelfcheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sweeps = vec![
        sweep_even_cf(max_p),
        sweep_positive_cf(max_p),
        sweep_pairs(max_p),
        sweep_heckoid(max_p, &mut rng),
        sweep_orbits(&mut rng),
        sweep_epi(max_p),
    ];
    SelfcheckReport { max_p, seed, sweeps }
}
