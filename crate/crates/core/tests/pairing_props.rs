use std::collections::BTreeMap;

use proptest::prelude::*;

use arrangement_pairing::arrangement::{
    bounded_complex, is_coloop_free, is_simple, Arrangement, BoundedComplex, Hyperplane, RegionOrder,
};
use arrangement_pairing::fixtures;
use arrangement_pairing::nerve::{independence_complex, Chain};
use arrangement_pairing::pairing::{
    gram_matrix, is_cycle, phi_matrix, psi_chains, verify, verify_with_order, TheoremVerdict,
};
use arrangement_pairing::rational::{frac, int, QVector, Verdict};
use arrangement_pairing::Error;

fn arrangement(m: usize, s: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Arrangement> {
    prop::collection::vec((prop::collection::vec(-5i64..=5, m), -5i64..=5), s).prop_map(move |hs| {
        let hs = hs
            .into_iter()
            .map(|(mut n, c)| {
                if n.iter().all(|&x| x == 0) {
                    n[m - 1] = 1;
                }
                Hyperplane::new(n.into_iter().map(int).collect(), int(c)).unwrap()
            })
            .collect();
        Arrangement::new(m, hs).unwrap()
    })
}

fn any_arrangement() -> impl Strategy<Value = Arrangement> {
    (1usize..=3).prop_flat_map(|m| arrangement(m, m + 1..=m + 3))
}

fn generic() -> impl Strategy<Value = Arrangement> {
    any_arrangement().prop_filter("simple, coloop-free, with a bounded region", |a| {
        is_simple(a) && is_coloop_free(a) && !bounded_complex(a).regions().is_empty()
    })
}

fn parity(m: usize) -> i64 {
    if m.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Region vertex sets, used to match regions between arrangements.
fn region_keys(bc: &BoundedComplex) -> Vec<Vec<QVector>> {
    bc.regions()
        .iter()
        .map(|r| r.vertices().iter().map(|v| v.point.clone()).collect())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn phi_is_symmetric_with_vertex_counts_on_the_diagonal(arr in any_arrangement()) {
        let bc = bounded_complex(&arr);
        prop_assume!(!bc.regions().is_empty());
        let phi = phi_matrix(&arr, &bc).unwrap();
        prop_assert!(phi.is_symmetric());
        for (i, region) in bc.regions().iter().enumerate() {
            prop_assert_eq!(phi.get(i, i), parity(arr.ambient_dim()) * region.vertices().len() as i64);
        }
    }

    #[test]
    fn gram_identity_and_cycles_on_generic_input(arr in generic()) {
        let m = arr.ambient_dim();
        let bc = bounded_complex(&arr);
        let phi = phi_matrix(&arr, &bc).unwrap();
        prop_assert_eq!(&phi, &gram_matrix(&arr, &bc).unwrap().scaled(parity(m)));
        let k = independence_complex(&arr);
        for c in psi_chains(&arr, &bc).unwrap() {
            prop_assert_eq!(c.chain.degree(), m - 1);
            prop_assert!(is_cycle(&k, &c.chain).unwrap());
        }
        let rep = verify(&arr).unwrap();
        prop_assert_eq!(rep.theorem_verdict, TheoremVerdict::Verified);
        prop_assert!(rep.failures.is_empty());
        prop_assert_eq!(rep.homology_rank_top, bc.regions().len());
    }

    #[test]
    fn psi_survives_flipping_a_hyperplane(arr in generic(), pick in 0usize..6) {
        let i = pick % arr.len();
        let flipped = arr.with_hyperplane(i, arr.hyperplane(i).flipped()).unwrap();
        let chains = |a: &Arrangement| -> BTreeMap<Vec<QVector>, Chain> {
            let bc = bounded_complex(a);
            region_keys(&bc).into_iter().zip(psi_chains(a, &bc).unwrap().into_iter().map(|c| c.chain)).collect()
        };
        prop_assert_eq!(chains(&arr), chains(&flipped));
    }

    #[test]
    fn positive_rescaling_changes_nothing(arr in any_arrangement(), pick in 0usize..6, num in 1i64..=7, den in 1i64..=7) {
        let bc = bounded_complex(&arr);
        prop_assume!(!bc.regions().is_empty());
        let i = pick % arr.len();
        let scaled = arr.with_hyperplane(i, arr.hyperplane(i).scaled(&frac(num, den))).unwrap();
        let bc2 = bounded_complex(&scaled);
        prop_assert_eq!(region_keys(&bc), region_keys(&bc2));
        prop_assert_eq!(phi_matrix(&arr, &bc).unwrap(), phi_matrix(&scaled, &bc2).unwrap());
        let (a, b) = (verify(&arr).unwrap(), verify(&scaled).unwrap());
        prop_assert_eq!(a.region_signs, b.region_signs);
        prop_assert_eq!(a.definiteness, b.definiteness);
        prop_assert_eq!(a.theorem_verdict, b.theorem_verdict);
    }

    #[test]
    fn input_order_is_a_permutation_of_lex_order(arr in any_arrangement()) {
        prop_assume!(!bounded_complex(&arr).regions().is_empty());
        let lex = verify_with_order(&arr, RegionOrder::Lex).unwrap();
        let input = verify_with_order(&arr, RegionOrder::Input).unwrap();
        let perm: Vec<usize> = input
            .region_signs
            .iter()
            .map(|s| lex.region_signs.iter().position(|t| t == s).unwrap())
            .collect();
        for (a, &pa) in perm.iter().enumerate() {
            for (b, &pb) in perm.iter().enumerate() {
                prop_assert_eq!(input.phi.get(a, b), lex.phi.get(pa, pb));
            }
        }
        prop_assert_eq!(input.definiteness.verdict, lex.definiteness.verdict);
        prop_assert_eq!(input.theorem_verdict, lex.theorem_verdict);
    }
}

#[test]
fn fixture_pairings() {
    let tri = fixtures::tri();
    assert_eq!(phi_matrix(&tri, &bounded_complex(&tri)).unwrap().rows(), vec![vec![3]]);
    let pts = fixtures::pts3();
    let bc = bounded_complex(&pts);
    assert_eq!(phi_matrix(&pts, &bc).unwrap().rows(), vec![vec![-2, 1], vec![1, -2]]);
    assert_eq!(gram_matrix(&pts, &bc).unwrap().rows(), vec![vec![2, -1], vec![-1, 2]]);
    let rep = verify(&fixtures::fig1()).unwrap();
    assert_eq!(rep.phi_verdict, Verdict::Indefinite);
    assert_eq!(rep.definiteness.minors, vec![int(3), int(5), int(5), int(-75)]);
}

#[test]
fn gram_requires_simple_vertices() {
    let fig = fixtures::fig1();
    let bc = bounded_complex(&fig);
    assert!(matches!(gram_matrix(&fig, &bc), Err(Error::Unsupported(_))));
}

#[test]
fn no_bounded_region_is_reported() {
    let arr = Arrangement::from_i64(2, &[(&[1, 0], 0), (&[1, 0], -1), (&[0, 1], 0)]).unwrap();
    assert_eq!(verify(&arr).unwrap_err(), Error::NoBoundedRegions);
    assert_eq!(phi_matrix(&arr, &bounded_complex(&arr)).unwrap_err(), Error::NoBoundedRegions);
}
