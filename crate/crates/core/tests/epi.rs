use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use twobridge::epi::{
    dihedral_witness, epi_consistency_check, epi_exists, hom_count, riley_presentation,
    FiniteGroupTable,
};
use twobridge::rational::{inverse_slope, link_kind, proper_slopes, slope};
use twobridge::{LinkKind, Slope};

type Perm = [usize; 3];

fn pmul(x: Perm, y: Perm) -> Perm {
    [x[y[0]], x[y[1]], x[y[2]]]
}

/// Pairs of permutations of three letters with `aba = bab`.
fn s3_trefoil_pairs() -> usize {
    let mut all = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                if i != j && j != k && i != k {
                    all.push([i, j, k]);
                }
            }
        }
    }
    assert_eq!(all.len(), 6);
    let mut n = 0;
    for &a in &all {
        for &b in &all {
            if pmul(pmul(a, b), a) == pmul(pmul(b, a), b) {
                n += 1;
            }
        }
    }
    n
}

#[test]
fn s3_oracle() {
    assert_eq!(s3_trefoil_pairs(), 12);
    let pres = riley_presentation(&slope(1, 3)).unwrap();
    assert_eq!(hom_count(&pres, &FiniteGroupTable::symmetric(3)), 12);
}

fn knot_slopes(lo: u64, hi: u64) -> Vec<Slope> {
    proper_slopes(lo, hi).filter(|r| r.den().is_odd()).collect()
}

#[test]
fn cyclic_counts_and_abelianization() {
    let cyclic: Vec<_> = (2..=6).map(FiniteGroupTable::cyclic).collect();
    for r in knot_slopes(3, 40) {
        let pres = riley_presentation(&r).unwrap();
        let (ea, eb) = pres.exponent_sums();
        assert_eq!(ea, -eb);
        for g in &cyclic {
            assert_eq!(hom_count(&pres, g), g.order(), "{r} into {}", g.name());
        }
        assert!(dihedral_witness(&r).unwrap().is_some(), "{r}");
    }
}

#[test]
fn self_epimorphisms() {
    let hyperbolic: Vec<Slope> = knot_slopes(5, 40)
        .into_iter()
        .filter(|r| link_kind(r).unwrap() == LinkKind::HyperbolicKnot)
        .take(50)
        .collect();
    assert_eq!(hyperbolic.len(), 50);
    for r in &hyperbolic {
        let v = epi_exists(r, r).unwrap();
        assert!(v.exists && v.witness_is_valid(), "{r}");
    }
}

#[test]
fn invariance_sweep() {
    let one = BigInt::from(1);
    for p in [3i64, 5, 7] {
        for q in 1..p {
            if q.gcd(&p) != 1 {
                continue;
            }
            let r = slope(q, p);
            for rt in knot_slopes(3, 60) {
                let v = epi_exists(&rt, &r).unwrap();
                if v.exists {
                    assert!(v.witness_is_valid(), "{rt} -> {r}");
                    assert!((rt.den() % p).eq(&BigInt::from(0)), "{rt} -> {r}");
                }
                let shifted = epi_exists(&rt.add_integer(&one), &r).unwrap();
                assert_eq!(shifted.exists, v.exists, "translate {rt} -> {r}");
                let mirror = Slope::new(rt.den() - rt.num(), rt.den().clone()).unwrap();
                assert_eq!(epi_exists(&mirror, &r).unwrap().exists, v.exists, "mirror {rt}");
                let inv = inverse_slope(&rt).unwrap();
                assert_eq!(epi_exists(&inv, &r).unwrap().exists, v.exists, "inverse {rt}");
            }
        }
    }
}

#[test]
fn hom_count_monotonicity() {
    let tables = FiniteGroupTable::builtins();
    let knots = knot_slopes(3, 40);
    let mut cache: HashMap<Slope, Vec<usize>> = HashMap::new();
    let mut counts = |s: &Slope| -> Vec<usize> {
        cache
            .entry(s.clone())
            .or_insert_with(|| {
                let pres = riley_presentation(s).unwrap();
                tables.iter().map(|g| hom_count(&pres, g)).collect()
            })
            .clone()
    };
    let mut positive = 0;
    for rt in &knots {
        for r in &knots {
            if rt.den() % r.den() != BigInt::from(0) {
                continue;
            }
            let v = epi_exists(rt, r).unwrap();
            if !v.exists {
                continue;
            }
            positive += 1;
            let (a, b) = (counts(r), counts(rt));
            for i in 0..a.len() {
                assert!(a[i] <= b[i], "{rt} -> {r} in group #{i}");
            }
        }
    }
    assert!(positive > 100);
    let v = epi_exists(&slope(1, 9), &slope(1, 3)).unwrap();
    let rep = epi_consistency_check(&slope(1, 9), &slope(1, 3), &v, &tables).unwrap();
    assert!(rep.is_consistent());
}
