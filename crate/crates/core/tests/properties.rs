mod common;

use common::word;
use hirschkit::braid::{braids_equal, canonical_representative, full_twist, is_periodic, left_normal_form};
use hirschkit::hirsch::{dual_fibration_params, embed_curve, glue_image, gluing_cokernel};
use hirschkit::invariants::{alexander_knot, closure_info, reduced_burau, PolyMatrix};
use hirschkit::{BraidWord, DEFAULT_BUDGET};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn letters(strands: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    let top = strands as i32 - 1;
    prop::collection::vec((1..=top, any::<bool>()).prop_map(|(i, s)| if s { i } else { -i }), 0..=max_len)
}

fn braid(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |l| letters(l, max_len).prop_map(move |v| word(l, &v)))
}

fn braid_pair(max_strands: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=max_strands).prop_flat_map(move |l| {
        (letters(l, max_len), letters(l, max_len)).prop_map(move |(a, b)| (word(l, &a), word(l, &b)))
    })
}

fn knot_braid() -> impl Strategy<Value = BraidWord> {
    braid(5, 12).prop_filter("knot closure", common::is_knot)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, max_global_rejects: 100_000, ..ProptestConfig::default() })]

    #[test]
    fn permutation_is_a_homomorphism((a, b) in braid_pair(6, 10)) {
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(ab.permutation(), a.permutation().then(&b.permutation()));
    }

    #[test]
    fn exponent_sum_invariants((w, g) in braid_pair(5, 10)) {
        prop_assert_eq!(w.conjugate(&g).unwrap().exponent_sum(), w.exponent_sum());
        prop_assert_eq!(w.inverse().exponent_sum(), -w.exponent_sum());
        prop_assert_eq!(w.free_reduce().exponent_sum(), w.exponent_sum());
    }

    #[test]
    fn normal_form_is_sound(w in braid(5, 14), seed in any::<u64>()) {
        let nf = left_normal_form(&w);
        prop_assert!(braids_equal(&nf.to_word(), &w).unwrap());
        prop_assert_eq!(&left_normal_form(&w.free_reduce()), &nf);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let other = common::scramble(&mut rng, &w, 6);
        prop_assert_eq!(left_normal_form(&other), nf);
    }

    #[test]
    fn inverse_cancels(w in braid(5, 12)) {
        let id = w.compose(&w.inverse()).unwrap();
        prop_assert!(braids_equal(&id, &BraidWord::identity(w.strands())).unwrap());
    }

    #[test]
    fn full_twist_is_central(w in braid(5, 12)) {
        let tw = full_twist(w.strands()).unwrap();
        prop_assert!(braids_equal(&tw.compose(&w).unwrap(), &w.compose(&tw).unwrap()).unwrap());
    }

    #[test]
    fn burau_is_multiplicative((a, b) in braid_pair(5, 8)) {
        let lhs = reduced_burau(&a.compose(&b).unwrap());
        prop_assert_eq!(lhs, reduced_burau(&a).mul(&reduced_burau(&b)));
        let inv = reduced_burau(&a).mul(&reduced_burau(&a.inverse()));
        prop_assert!(inv.is_identity());
    }

    #[test]
    fn burau_respects_braid_equality(w in braid(4, 10), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let other = common::scramble(&mut rng, &w, 5);
        prop_assert_eq!(reduced_burau(&w), reduced_burau(&other));
    }

    #[test]
    fn alexander_invariance(w in knot_braid(), g in letters(5, 6), positive in any::<bool>()) {
        let delta = alexander_knot(&w).unwrap();
        let g: Vec<i32> = g.into_iter().filter(|x| (x.unsigned_abs() as usize) < w.strands()).collect();
        let conj = w.conjugate(&word(w.strands(), &g)).unwrap();
        prop_assert_eq!(&alexander_knot(&conj).unwrap(), &delta);
        prop_assert_eq!(&alexander_knot(&w.markov_stabilize(positive)).unwrap(), &delta);
        prop_assert!(matches!(delta.eval(1), Some(1) | Some(-1)));
        let mirror = delta.reciprocal().unit_normalize();
        prop_assert_eq!(mirror, delta);
    }

    #[test]
    fn linking_matrix_symmetric_and_invariant(w in braid(5, 12), g in letters(5, 6)) {
        let info = closure_info(&w);
        let m = &info.linking_matrix;
        for i in 0..m.len() {
            prop_assert_eq!(m[i][i], 0);
            for j in 0..m.len() {
                prop_assert_eq!(m[i][j], m[j][i]);
            }
        }
        prop_assert_eq!(info.axis_linking.iter().sum::<usize>(), w.strands());
        let g: Vec<i32> = g.into_iter().filter(|x| (x.unsigned_abs() as usize) < w.strands()).collect();
        let other = closure_info(&w.conjugate(&word(w.strands(), &g)).unwrap());
        let signature = |info: &hirschkit::ClosureInfo| {
            let mut rows: Vec<(usize, Vec<i64>)> = info
                .linking_matrix
                .iter()
                .zip(&info.axis_linking)
                .map(|(row, &a)| {
                    let mut r = row.clone();
                    r.sort_unstable();
                    (a, r)
                })
                .collect();
            rows.sort();
            rows
        };
        prop_assert_eq!(signature(&info), signature(&other));
    }

    #[test]
    fn canonical_representative_is_a_class_invariant(w in braid(4, 8), g in letters(4, 5)) {
        let g: Vec<i32> = g.into_iter().filter(|x| (x.unsigned_abs() as usize) < w.strands()).collect();
        let conj = w.conjugate(&word(w.strands(), &g)).unwrap();
        let a = canonical_representative(&w, DEFAULT_BUDGET);
        let b = canonical_representative(&conj, DEFAULT_BUDGET);
        prop_assume!(a.complete && b.complete);
        prop_assert_eq!(a.normal_form, b.normal_form);
    }

    #[test]
    fn fibration_identities(n in 2i64..12, k in -200i64..200) {
        let fp = dual_fibration_params(n, k).unwrap();
        prop_assert_eq!(fp.p1 + fp.q1 * k, fp.p2);
        prop_assert_eq!(fp.s * fp.q1, n * fp.q2);
        prop_assert_eq!((n * n - 1) % fp.q2, 0);
        let image = glue_image(&fp.outer_curve(), k).unwrap();
        prop_assert_eq!(embed_curve(&image, n), embed_curve(&fp.inner_curve(), n));
    }

    #[test]
    fn cokernel_order(n in 2i64..9, k in -10i64..=10) {
        prop_assert_eq!(gluing_cokernel(n, k).unwrap().order(), Some(((n - 1) * (n - 1)) as u64));
    }
}

#[test]
fn twisted_rotations_are_periodic() {
    for l in 2..=5usize {
        let delta: Vec<i32> = (1..l as i32).collect();
        let delta = word(l, &delta);
        let tw = full_twist(l).unwrap();
        for j in -3..=3 {
            let w = tw.pow(j).compose(&delta).unwrap();
            assert!(is_periodic(&w), "l={l} j={j}");
        }
    }
}

#[test]
fn burau_determinant_of_identity_minus_identity() {
    assert!(PolyMatrix::identity(3).sub(&PolyMatrix::identity(3)).determinant().is_zero());
}
