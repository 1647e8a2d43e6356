use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;
use twobridge::farey::{
    orbit_bfs, orbit_member, reduce, reflection_in_edge, FareyEdge, MembershipVerdict, ProjMatrix,
    Reducer,
};
use twobridge::rational::slope;
use twobridge::Slope;

const TARGETS: [(i64, i64); 5] = [(1, 3), (2, 5), (3, 7), (2, 7), (5, 17)];

#[test]
fn bfs_orbit_is_recognized() {
    for (q, p) in TARGETS {
        let r = slope(q, p);
        let orbit = orbit_bfs(&r, 6, &BigInt::from(500)).unwrap();
        assert!(orbit.len() > 10);
        for x in &orbit {
            assert!((x.den() % p).eq(&BigInt::from(0)), "{x} for {r}");
            let verdict = orbit_member(x, &r).unwrap();
            let word = verdict.word().unwrap_or_else(|| panic!("{x} rejected for {r}"));
            let image = word.apply(x);
            assert!(image == r || image.is_infinite(), "{x} -> {image}");
        }
    }
}

#[test]
fn orbits_of_r_and_infinity_are_distinct() {
    for (q, p) in TARGETS {
        let r = slope(q, p);
        assert!(matches!(
            orbit_member(&Slope::infinity(), &r).unwrap(),
            MembershipVerdict::InOrbitOfInfinity { .. }
        ));
        assert!(matches!(
            orbit_member(&r, &r).unwrap(),
            MembershipVerdict::InOrbitOfR { .. }
        ));
    }
}

// Random edges are images of {0, inf} under products of the standard
// generators of PGL(2, Z).
fn random_matrix(steps: &[u8]) -> ProjMatrix {
    let gens = [
        ProjMatrix::new(1, 0, 1, 1),
        ProjMatrix::new(1, 0, -1, 1),
        ProjMatrix::new(0, 1, 1, 0),
        ProjMatrix::new(1, 1, 0, 1),
    ];
    steps
        .iter()
        .fold(ProjMatrix::identity(), |m, &i| &m * &gens[i as usize % 4])
}

fn random_x() -> impl Strategy<Value = Slope> {
    (-500i64..500, 1i64..200).prop_map(|(n, d)| slope(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn reflections_are_involutions(steps in proptest::collection::vec(0u8..4, 0..30)) {
        let m = random_matrix(&steps);
        let edge = FareyEdge::new(slope(0, 1), Slope::infinity()).unwrap().image(&m);
        let refl = reflection_in_edge(&edge);
        prop_assert_eq!(refl.det(), BigInt::from(-1));
        prop_assert!((&refl * &refl).is_projective_identity());
        let (a, b) = edge.endpoints();
        prop_assert_eq!(&refl.apply(a), a);
        prop_assert_eq!(&refl.apply(b), b);
    }

    #[test]
    fn reduce_is_idempotent_and_word_invariant(
        x in random_x(),
        t in 0usize..TARGETS.len(),
        word in proptest::collection::vec(0usize..4, 0..12),
    ) {
        let (q, p) = TARGETS[t];
        let r = slope(q, p);
        let reducer = Reducer::new(&r).unwrap();
        let (rep, w) = reducer.reduce(&x).unwrap();
        prop_assert_eq!(w.apply(&x), rep.clone());
        prop_assert_eq!(w.matrix().det().abs(), BigInt::from(1));
        prop_assert_eq!(reducer.reduce(&rep).unwrap().0, rep.clone());

        let gens = reducer.generators();
        let moved = word.iter().fold(x.clone(), |acc, &i| gens[i].reflection().apply(&acc));
        prop_assert_eq!(reduce(&moved, &r).unwrap().0, rep);

        if (x.den() % p) == BigInt::from(0) {
            for g in &gens {
                prop_assert_eq!(g.reflection().apply(&x).den() % p, BigInt::from(0));
            }
        }
        let shifted = x.add_integer(&BigInt::from(2));
        prop_assert_eq!(
            orbit_member(&x, &r).unwrap().is_member(),
            orbit_member(&shifted, &r).unwrap().is_member()
        );
    }
}
