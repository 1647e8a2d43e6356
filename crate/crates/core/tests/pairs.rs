use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use twobridge::pairs::{
    candidates, classify, extra_split, isometry_group, IsomGroup, OmegaValue, PairKind, SplitCase,
};
use twobridge::rational::{inverse_slope, is_unit_residue, proper_slopes};
use twobridge::Slope;

fn hyperbolic(max_p: u64) -> impl Iterator<Item = Slope> {
    proper_slopes(3, max_p).filter(|r| !is_unit_residue(r).unwrap())
}

/// Every split `{q1/p1, q2/p2}` of `r` found by direct search over numerators,
/// falling back to the mirror `p - q` when `q` itself has none.
fn brute_splits(r: &Slope) -> Vec<(i64, i64, i64, i64)> {
    let p: i64 = r.den().try_into().unwrap();
    let q: i64 = r.num().try_into().unwrap();
    let direct = brute_splits_for(p, q);
    if direct.is_empty() {
        brute_splits_for(p, p - q)
    } else {
        direct
    }
}

fn brute_splits_for(p: i64, q: i64) -> Vec<(i64, i64, i64, i64)> {
    let mut out = Vec::new();
    for (prod, cross, scale) in [(p / 2, 1, 1), (p, 2, 2)] {
        if scale == 1 && p % 2 != 0 {
            continue;
        }
        for p1 in 2..prod {
            if prod % p1 != 0 {
                continue;
            }
            let p2 = prod / p1;
            if p2 < p1 || p2 < 2 {
                continue;
            }
            for q1 in 1..p1 {
                for q2 in 1..p2 {
                    if q1.gcd(&p1) != 1 || q2.gcd(&p2) != 1 {
                        continue;
                    }
                    let sum = p1 * q2 + p2 * q1;
                    if (p1 * q2 - p2 * q1).abs() == cross && sum == scale * q {
                        out.push((q1, p1, q2, p2));
                    }
                }
            }
        }
    }
    out
}

#[test]
fn trichotomy_up_to_300() {
    for r in hyperbolic(300) {
        let p = r.den();
        let q = r.num();
        let two_p = p * 2u8;
        let branches = [
            (q * q - 1u8).mod_floor(p) != BigInt::zero(),
            p.is_odd() && (q * q).mod_floor(p).is_one(),
            p.is_even() && (q * q).mod_floor(&two_p) == (p + 1u8),
            p.is_even() && (q * q).mod_floor(&two_p).is_one(),
        ];
        let expected = [
            IsomGroup::Z2xZ2,
            IsomGroup::D4,
            IsomGroup::D4,
            IsomGroup::Z2cubed,
        ];
        let fired: Vec<usize> = (0..4).filter(|&i| branches[i]).collect();
        assert_eq!(fired.len(), 1, "{r}");
        assert_eq!(isometry_group(&r).unwrap(), expected[fired[0]], "{r}");
    }
}

#[test]
fn extra_splits_up_to_300() {
    let mut seen = 0;
    for r in hyperbolic(300) {
        let brute = brute_splits(&r);
        match extra_split(&r) {
            Ok(split) => {
                seen += 1;
                assert_eq!(brute.len(), 1, "{r}: {brute:?}");
                let (q1, p1, q2, p2) = brute[0];
                let pair = [&split.s1, &split.s2];
                let got: Vec<(i64, i64)> = pair
                    .iter()
                    .map(|s| (s.num().try_into().unwrap(), s.den().try_into().unwrap()))
                    .collect();
                assert!(
                    got == vec![(q1, p1), (q2, p2)] || got == vec![(q2, p2), (q1, p1)],
                    "{r}: {got:?} vs {brute:?}"
                );
                assert!(split.verify(&r));
                let p = r.den();
                let (bp1, bp2) = (split.s1.den(), split.s2.den());
                let cross = (bp1 * split.s2.num() - bp2 * split.s1.num()).abs();
                let sum = bp1 * split.s2.num() + bp2 * split.s1.num();
                match split.case {
                    SplitCase::EdgeCase => {
                        assert_eq!(&(bp1 * bp2 * 2u8), p);
                        assert!(cross.is_one());
                        assert!(&sum == r.num() || sum == p - r.num());
                    }
                    SplitCase::GeodesicCase => {
                        assert_eq!(&(bp1 * bp2), p);
                        assert_eq!(cross, BigInt::from(2));
                        assert!(sum == r.num() * 2u8 || sum == (p - r.num()) * 2u8);
                    }
                }
                for pi in [bp1, bp2] {
                    assert!(pi > &BigInt::one() && pi < p);
                    assert!(pi.gcd(p) > BigInt::one());
                }
            }
            Err(_) => assert!(brute.is_empty(), "{r}: missed {brute:?}"),
        }
    }
    assert!(seen > 50);
}

#[test]
fn ledger_up_to_300() {
    for r in hyperbolic(300) {
        let rep = classify(&r).unwrap();
        assert_eq!(rep.verdict, vec!["upper", "lower"], "{r}");
        assert!(!rep.upper_lower_equivalent);
        let p = r.den();
        for c in &rep.candidates {
            match (&c.kind, &c.omega) {
                (PairKind::Upper | PairKind::Lower, OmegaValue::GeneratorClass) => {
                    assert!(c.generates)
                }
                (PairKind::LongUpper | PairKind::LongLower, OmegaValue::Exact(k)) => {
                    assert!(k.is_zero());
                    assert!(!c.generates);
                }
                (PairKind::IntermediateL | PairKind::IntermediateR, OmegaValue::InSet(ks)) => {
                    let half = p / 2u8;
                    assert!(ks.iter().all(|k| k.is_zero() || *k == half));
                    assert!(ks.iter().all(|k| !k.gcd(p).is_one()));
                    assert!(!c.generates);
                }
                (PairKind::Extra { arc_slope, .. }, OmegaValue::Exact(k)) => {
                    assert_eq!(k, arc_slope.den());
                    assert!(k > &BigInt::one() && k < p);
                    assert!(k.gcd(p) > BigInt::one());
                    assert!(!c.generates);
                }
                other => panic!("{r}: unexpected {other:?}"),
            }
        }
        let extras = rep
            .candidates
            .iter()
            .filter(|c| matches!(c.kind, PairKind::Extra { .. }))
            .count();
        let extra_inversion = matches!(
            (rep.isometry_group, p.is_odd()),
            (IsomGroup::D4, true) | (IsomGroup::Z2cubed, false)
        );
        assert_eq!(extras, if extra_inversion { 4 } else { 0 }, "{r}");
    }
}

fn kind_profile(r: &Slope) -> BTreeMap<String, Vec<BigInt>> {
    let p = r.den();
    let mut out: BTreeMap<String, Vec<BigInt>> = BTreeMap::new();
    for c in candidates(r).unwrap() {
        let omegas = match &c.omega {
            OmegaValue::Exact(k) => vec![k.clone()],
            OmegaValue::InSet(ks) => ks.clone(),
            OmegaValue::GeneratorClass => vec![],
        };
        let entry = out.entry(c.kind.name().to_string()).or_default();
        for k in omegas {
            let neg = (p - &k).mod_floor(p);
            entry.push(k.min(neg));
        }
        entry.sort();
    }
    out
}

#[test]
fn mirror_and_inverse_invariance() {
    for r in hyperbolic(200) {
        let mirror = Slope::new(r.den() - r.num(), r.den().clone()).unwrap();
        let inv = inverse_slope(&r).unwrap();
        assert_eq!(isometry_group(&r).unwrap(), isometry_group(&mirror).unwrap());
        assert_eq!(isometry_group(&r).unwrap(), isometry_group(&inv).unwrap());
        assert_eq!(kind_profile(&r), kind_profile(&mirror), "{r}");
    }
}

#[test]
fn report_json_round_trip() {
    for r in [(2, 5), (5, 12), (10, 33), (3, 8)] {
        let rep = classify(&twobridge::rational::slope(r.0, r.1)).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        let back: twobridge::pairs::ClassificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rep);
    }
}
