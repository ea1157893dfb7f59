use outfold::analysis::{partition_holds, random_fold, random_loop, random_rose, rng};
use outfold::fold::{apply_move, general_fold, Move};
use outfold::graph::LabeledRose;
use outfold::projection::{farey_distance, PrimitiveClass};
use outfold::twist::{relative_twist, TreeEdge, TwistConfig};
use outfold::word::{Automorphism, Letter, Loop, Word};
use proptest::prelude::*;

fn word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..2 * rank, 0..=max_len)
        .prop_map(|s| Word::reduce(s.into_iter().map(Letter::from_symbol)))
}

fn rose(rank: usize, max_steps: usize) -> impl Strategy<Value = LabeledRose> {
    (any::<u64>(), 0..=max_steps)
        .prop_map(move |(seed, steps)| random_rose(&mut rng(seed), rank, steps, 6))
}

fn slope() -> impl Strategy<Value = PrimitiveClass> {
    (-9i64..=9, 0i64..=9)
        .prop_filter("coprime", |&(p, q)| num_integer::gcd(p, q) == 1)
        .prop_map(|(p, q)| PrimitiveClass::new(p, q).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn word_group_laws(u in word(3, 12), v in word(3, 12)) {
        prop_assert!(u.mul(&u.inverse()).is_identity());
        prop_assert_eq!(u.inverse().inverse(), u.clone());
        prop_assert_eq!(u.mul(&v).inverse(), v.inverse().mul(&u.inverse()));
        prop_assert_eq!(Word::parse(&u.to_string()).unwrap(), u.clone());
        let (core, conj) = u.cyclic_reduce();
        prop_assert!(core.is_cyclically_reduced());
        prop_assert_eq!(conj.mul(&core).mul(&conj.inverse()), u);
    }

    #[test]
    fn basis_rewrite_round_trips(r in rose(3, 6), w in word(3, 10)) {
        let coords = r.basis().rewrite(&w).unwrap();
        prop_assert_eq!(r.basis().evaluate(&coords), w);
    }

    #[test]
    fn automorphism_inverse(r in rose(3, 6), w in word(3, 10)) {
        let phi = Automorphism::from_basis(r.basis().clone());
        prop_assert!(phi.compose(&phi.inverse()).is_identity());
        prop_assert_eq!(phi.inverse().apply(&phi.apply(&w)), w);
    }

    #[test]
    fn fold_then_inverse_is_identity(r in rose(3, 6), seed in any::<u64>()) {
        let m = random_fold(&mut rng(seed), 3);
        let folded = general_fold(&r, m).unwrap();
        let back = general_fold(&folded, m.inverse()).unwrap();
        prop_assert_eq!(back.labels(), r.labels());
    }

    #[test]
    fn length_is_a_loop_invariant(r in rose(3, 6), seed in any::<u64>(), k in 0usize..8) {
        let alpha = random_loop(&mut rng(seed), 3, 8);
        let w = alpha.representative();
        let l = r.combinatorial_length(&alpha).unwrap();
        prop_assert!(l >= 1);
        prop_assert_eq!(r.combinatorial_length(&alpha.inverse()).unwrap(), l);
        let rotated = Loop::new(&w.rotate(k % w.len())).unwrap();
        prop_assert_eq!(r.combinatorial_length(&rotated).unwrap(), l);
        for m in [Move::Invert { edge: 0 }, Move::Swap { first: 1, second: 2 }] {
            prop_assert_eq!(apply_move(&r, m).unwrap().combinatorial_length(&alpha).unwrap(), l);
        }
    }

    #[test]
    fn single_fold_at_most_halves_length(r in rose(3, 6), seed in any::<u64>()) {
        let mut g = rng(seed);
        let alpha = random_loop(&mut g, 3, 8);
        let folded = general_fold(&r, random_fold(&mut g, 3)).unwrap();
        let (l, l2) = (r.combinatorial_length(&alpha).unwrap(), folded.combinatorial_length(&alpha).unwrap());
        prop_assert!(2 * l2 >= l && 2 * l >= l2, "{l} {l2}");
    }

    #[test]
    fn partition_of_boundary(r in rose(3, 5), base in word(3, 3), sym in 0usize..6) {
        prop_assert!(partition_holds(r.basis(), &TreeEdge::new(base, Letter::from_symbol(sym))));
    }

    #[test]
    fn farey_metric(x in slope(), y in slope(), z in slope()) {
        let (dxy, dyz, dxz) = (farey_distance(x, y), farey_distance(y, z), farey_distance(x, z));
        prop_assert_eq!(dxy, farey_distance(y, x));
        prop_assert_eq!(dxy == 0, x == y);
        prop_assert_eq!(dxy == 1, x.is_adjacent(y));
        prop_assert!(dxz <= dxy + dyz);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn twist_ignores_petal_relabeling(r in rose(3, 4), seed in any::<u64>()) {
        let alpha = random_loop(&mut rng(seed), 3, 4);
        let r0 = LabeledRose::standard(3);
        let cfg = TwistConfig::default();
        let t = relative_twist(&r, &r0, &alpha, &cfg).unwrap();
        prop_assert!(t.stable);
        prop_assert_eq!(t.integer_part, t.numerator / t.denominator);
        prop_assert_eq!(t.denominator as usize, r.combinatorial_length(&alpha).unwrap());
        let relabeled = apply_move(&apply_move(&r, Move::Swap { first: 0, second: 2 }).unwrap(), Move::Invert { edge: 1 }).unwrap();
        let t2 = relative_twist(&relabeled, &r0, &alpha, &cfg).unwrap();
        prop_assert_eq!((t2.numerator, t2.denominator), (t.numerator, t.denominator));
        let t3 = relative_twist(&r, &r0, &alpha.inverse(), &cfg).unwrap();
        prop_assert_eq!((t3.numerator, t3.denominator), (t.numerator, t.denominator));
    }
}
