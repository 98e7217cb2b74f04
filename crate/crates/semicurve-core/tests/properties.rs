use num_bigint::BigInt;
use proptest::prelude::*;
use semicurve_core::curve::{jacobian, presentation_3, structure_constants_3};
use semicurve_core::obstruction::sumset_hm;
use semicurve_core::order_bound::{find_sm, nu, partition_counts, predict_sm};
use semicurve_core::poly::SparsePolynomial;
use semicurve_core::semigroup::enumerate_by_genus;
use semicurve_core::{Error, NumericalSemigroup};

fn semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2u32..24, 1..5)
        .prop_filter_map("gcd > 1", |g| NumericalSemigroup::from_generators(&g).ok())
}

proptest! {
    #[test]
    fn semigroup_invariants(s in semigroup()) {
        let c = s.conductor();
        prop_assert!(s.contains(0));
        prop_assert_eq!(s.genus() as usize, s.gaps().len());
        prop_assert!(c <= 2 * s.genus());
        if c > 0 {
            prop_assert!(!s.contains(c - 1));
        }
        for &a in s.small_elements() {
            for &b in s.small_elements() {
                prop_assert!(s.contains(a + b));
            }
        }
        let e = s.multiplicity();
        prop_assert_eq!(s.apery_set(e).unwrap().len(), e as usize);
        let again = NumericalSemigroup::from_generators(s.min_generators()).unwrap();
        prop_assert_eq!(&again, &s);
        let p = s.profile();
        prop_assert_eq!(p.e, e);
        if let Some(d) = p.d {
            prop_assert!(d < c && s.contains(d));
        }
    }

    #[test]
    fn nu_is_partition_total(s in semigroup(), j in 0usize..40) {
        let x = s.nth_member(j);
        prop_assert_eq!(nu(&s, x).unwrap(), partition_counts(&s, x).map(|p| p.total()).unwrap_or_else(|_| nu(&s, x).unwrap()));
        prop_assert!(nu(&s, x).unwrap() >= 1);
    }

    #[test]
    fn sm_prediction_contains_brute_force(s in semigroup()) {
        prop_assume!(!s.is_ordinary() && !s.is_naturals());
        let pred = predict_sm(&s).unwrap();
        let sm = find_sm(&s).s_m.unwrap() as i64;
        prop_assert!(pred.contains(sm), "{} {:?} s_m = {}", s, pred, sm);
    }

    #[test]
    fn sumset_matches_naive(s in semigroup()) {
        prop_assume!(!s.gaps().is_empty());
        let h2 = sumset_hm(&s, 2).unwrap();
        let mut naive: Vec<usize> = s.gaps().iter()
            .flat_map(|&a| s.gaps().iter().map(move |&b| (a + b) as usize))
            .collect();
        naive.sort();
        naive.dedup();
        prop_assert_eq!(h2.iter().collect::<Vec<_>>(), naive);
    }

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        for i in 0..3 {
            let lhs = (&a * &b).partial_derivative(i);
            let rhs = &(&a.partial_derivative(i) * &b) + &(&a * &b.partial_derivative(i));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn euler_identity(a in poly()) {
        let w = a.weights().to_vec();
        let Some(d) = a.homogeneous_degree() else { return Ok(()); };
        let e = (0..3).fold(SparsePolynomial::zero(&w), |acc, i| {
            &acc + &a.euler_component(i).scale(&BigInt::from(w[i]))
        });
        prop_assert_eq!(e, a.scale(&BigInt::from(d)));
    }
}

fn poly() -> impl Strategy<Value = SparsePolynomial> {
    let w = [2u64, 3, 5];
    prop::collection::vec((-5i64..6, 0u32..3, 0u32..3, 0u32..3), 0..5).prop_map(move |ts| {
        ts.into_iter().fold(SparsePolynomial::zero(&w), |acc, (c, i, j, k)| {
            &acc + &SparsePolynomial::term(&w, vec![i, j, k], c)
        })
    })
}

#[test]
fn genus_counts() {
    let mut counts = [0usize; 9];
    for s in enumerate_by_genus(8) {
        counts[s.genus() as usize] += 1;
    }
    assert_eq!(counts, [1, 1, 2, 4, 7, 12, 23, 39, 67]);
}

#[test]
fn three_generated_presentations_up_to_genus_12() {
    let mut seen = 0;
    for s in enumerate_by_genus(12).filter(|s| s.embedding_dimension() == 3) {
        let k = structure_constants_3(&s).unwrap();
        let n = s.min_generators();
        let (u, v, l, m, w, z) = (k.u as u64, k.v as u64, k.lambda as u64, k.mu as u64, k.w as u64, k.z as u64);
        let n = [n[0] as u64, n[1] as u64, n[2] as u64];
        assert_eq!(u * n[1], l * n[0] + w * n[2]);
        assert_eq!(v * n[2], m * n[0] + z * n[1]);
        assert!(k.consistent);
        assert_eq!(k.complete_intersection, z * w * m == 0);
        match presentation_3(&s) {
            Ok(p) => {
                jacobian(&p).unwrap();
                jacobian(&p.normalized()).unwrap();
                seen += 1;
            }
            Err(e) => assert_eq!(e, Error::CompleteIntersection),
        }
    }
    assert!(seen > 50);
}
