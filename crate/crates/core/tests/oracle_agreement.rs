mod common;

use num_traits::{Signed, Zero};
use proptest::prelude::*;

use common::{schedule_from_seeds, spec_strategy};
use fatforest_core::closed::{
    betti_closed, betti_via_strand_subtraction, invariants_closed, skeleton_numerator, upper_strand,
    SkeletonQuery,
};
use fatforest_core::exact::sign;
use fatforest_core::{build_fat_forest, invariants_from_table, FatForestSpec, FieldSpec, Integer, Oracle};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_characteristic(spec in spec_strategy(3, 5, 10), k in 0usize..5) {
        let c = build_fat_forest(&spec).unwrap().skeleton(k);
        let h = Oracle::default().reduced_homology_dims(&c).unwrap();
        let from_faces: Integer = c.f_vector().entries().iter().enumerate()
            .map(|(idx, f)| sign(idx as i64 - 1) * f).sum();
        let from_homology: Integer = h.iter().enumerate()
            .map(|(idx, &b)| sign(idx as i64 - 1) * Integer::from(b)).sum();
        prop_assert_eq!(from_faces, from_homology);
    }

    #[test]
    fn routes_agree(spec in spec_strategy(3, 5, 10), k in 1usize..5) {
        prop_assume!(spec.sizes.len() >= 2);
        let c = build_fat_forest(&spec).unwrap().skeleton(k);
        let q = SkeletonQuery::new(spec.sizes.clone(), k).unwrap();
        let gf2 = Oracle::new(FieldSpec::GF2).hochster_betti(&c).unwrap();
        let gf3 = Oracle::new(FieldSpec::GF3).hochster_betti(&c).unwrap();
        prop_assert_eq!(&gf2, &gf3);
        prop_assert_eq!(&betti_closed(&q).unwrap(), &gf2);
        prop_assert_eq!(&betti_via_strand_subtraction(&q).unwrap(), &gf2);

        let inv = invariants_from_table(&gf2, c.n_vertices(), c.dimension());
        prop_assert_eq!(invariants_closed(&q).unwrap(), inv);
        prop_assert_eq!(Oracle::default().reisner_is_cm(&c).unwrap(), inv.depth == inv.krull_dim);
    }

    #[test]
    fn strands_outside_range_vanish(spec in spec_strategy(3, 5, 10), k in 1usize..5) {
        let full = build_fat_forest(&spec).unwrap();
        let oracle = Oracle::default();
        let whole = oracle.hochster_betti(&full).unwrap();
        let sk = oracle.hochster_betti(&full.skeleton(k)).unwrap();
        for ((i, j), v) in sk.entries() {
            prop_assert!(!v.is_negative());
            prop_assert!(j - i <= k + 1, "β_{{{},{}}} = {} beyond diagonal {}", i, j, v, k + 1);
        }
        for i in 0..=full.n_vertices() {
            for j in i..=full.n_vertices() {
                if j - i < k + 1 {
                    prop_assert_eq!(sk.get(i, j), whole.get(i, j));
                }
            }
        }
    }

    #[test]
    fn alternating_sums_give_numerator(spec in spec_strategy(3, 5, 10), k in 0usize..5) {
        let c = build_fat_forest(&spec).unwrap().skeleton(k);
        let table = Oracle::default().hochster_betti(&c).unwrap();
        let h = skeleton_numerator(&SkeletonQuery::new(spec.sizes.clone(), k).unwrap());
        for j in 0..=c.n_vertices() {
            prop_assert_eq!(table.alternating_sum(j), h.coeff(j));
        }
    }

    #[test]
    fn gluing_does_not_matter(
        sizes in common::sizes_strategy(4, 5, 11),
        a in prop::collection::vec(any::<u64>(), 4),
        b in prop::collection::vec(any::<u64>(), 4),
        k in 0usize..5,
    ) {
        let ca = build_fat_forest(&FatForestSpec::new(sizes.clone(), schedule_from_seeds(&sizes, &a))).unwrap().skeleton(k);
        let cb = build_fat_forest(&FatForestSpec::new(sizes.clone(), schedule_from_seeds(&sizes, &b))).unwrap().skeleton(k);
        prop_assert_eq!(ca.f_vector(), cb.f_vector());
        let oracle = Oracle::default();
        prop_assert_eq!(oracle.hochster_betti(&ca).unwrap(), oracle.hochster_betti(&cb).unwrap());
    }
}

#[test]
fn single_facet_skeleton_upper_strand() {
    // the upper strand formula also holds for one facet; only the linear strand needs e >= 2
    for n in 3..=7usize {
        for k in 1..n - 1 {
            let q = SkeletonQuery::new(vec![n], k).unwrap();
            let c = build_fat_forest(&FatForestSpec::chain(&[n])).unwrap().skeleton(k);
            let table = Oracle::default().hochster_betti(&c).unwrap();
            let strand = upper_strand(&q).unwrap();
            assert_eq!(strand.values, table.strand(k + 1), "n = {n}, k = {k}");
            assert!(table.strand(1).iter().all(Zero::is_zero));
        }
    }
}

#[test]
fn rational_oracle_matches_finite_fields() {
    let c = build_fat_forest(&FatForestSpec::new(vec![3, 3, 2], fatforest_core::Gluing::Star))
        .unwrap()
        .skeleton(1);
    let q = Oracle::new(FieldSpec::Rational).hochster_betti(&c).unwrap();
    assert_eq!(q, Oracle::new(FieldSpec::GF2).hochster_betti(&c).unwrap());
    assert_eq!(q, Oracle::new(FieldSpec::prime(7).unwrap()).hochster_betti(&c).unwrap());
}
