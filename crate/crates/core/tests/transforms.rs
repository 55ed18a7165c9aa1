use bentkit::analysis::{self, nonlinearity, resiliency_report};
use bentkit::anf::{degree, degree_of_variable, mobius, mobius_inv};
use bentkit::oracle;
use bentkit::walsh::inverse_walsh;
use bentkit::{walsh_transform, BooleanFunction};
use proptest::prelude::*;

fn function(max_n: u32) -> impl Strategy<Value = BooleanFunction> {
    (1..=max_n).prop_flat_map(|n| {
        let words = (1usize << n).div_ceil(64);
        proptest::collection::vec(any::<u64>(), words)
            .prop_map(move |w| BooleanFunction::from_words(n, w).unwrap())
    })
}

fn pair(max_n: u32) -> impl Strategy<Value = (BooleanFunction, BooleanFunction)> {
    (1..=max_n).prop_flat_map(|n| {
        let words = (1usize << n).div_ceil(64);
        (
            proptest::collection::vec(any::<u64>(), words),
            proptest::collection::vec(any::<u64>(), words),
        )
            .prop_map(move |(a, b)| {
                (
                    BooleanFunction::from_words(n, a).unwrap(),
                    BooleanFunction::from_words(n, b).unwrap(),
                )
            })
    })
}

proptest! {
    #[test]
    fn butterfly_matches_definition(f in function(9)) {
        prop_assert_eq!(walsh_transform(&f), oracle::naive_walsh(&f).unwrap());
    }

    #[test]
    fn spectrum_identities(f in function(12)) {
        let s = walsh_transform(&f);
        prop_assert!(s.parseval_holds());
        prop_assert_eq!(s.get(0), (1i64 << f.n()) - 2 * f.weight() as i64);
        prop_assert_eq!(inverse_walsh(&s).unwrap(), f);
    }

    #[test]
    fn mobius_round_trips(f in function(12)) {
        let a = mobius(&f);
        prop_assert_eq!(mobius_inv(&a), f.clone());
        // the transform is its own inverse on raw tables
        let twice = mobius(a.coefficients());
        prop_assert_eq!(twice.coefficients(), &f);
    }

    #[test]
    fn degree_of_xor((f, g) in pair(10)) {
        let h = f.xor(&g).unwrap();
        prop_assert!(degree(&h) <= degree(&f).max(degree(&g)));
        for i in 1..=f.n() {
            prop_assert!(degree_of_variable(&f, i).unwrap() <= degree(&f));
        }
    }

    #[test]
    fn restriction_sum_is_partial_derivative(f in function(10), j in 1u32..=10) {
        prop_assume!(f.n() >= 2 && j <= f.n());
        let (f0, f1) = f.split(j).unwrap();
        let d = f.derivative(1 << (f.n() - j)).unwrap().restrict(j, false).unwrap();
        prop_assert_eq!(f0.xor(&f1).unwrap(), d);
    }

    #[test]
    fn nonlinearity_matches_affine_distance(f in function(8)) {
        prop_assert_eq!(nonlinearity(&f), oracle::exhaustive_nonlinearity(&f).unwrap());
    }

    #[test]
    fn resiliency_matches_definition(f in function(8)) {
        let (ci, res) = resiliency_report(&f);
        prop_assert_eq!(res, oracle::resiliency_order_by_definition(&f).unwrap());
        for r in 0..=ci {
            prop_assert!(oracle::correlation_immune_by_definition(&f, r).unwrap());
        }
        if ci < f.n() {
            prop_assert!(!oracle::correlation_immune_by_definition(&f, ci + 1).unwrap());
        }
    }

    #[test]
    fn siegenthaler_and_divisibility(f in function(10)) {
        let (_, res) = resiliency_report(&f);
        let n = f.n();
        if res >= 0 {
            let bounds = analysis::bounds_report(n, res, degree(&f));
            prop_assert!(degree(&f) <= bounds.degree_cap);
            if res as u32 + 2 <= n {
                prop_assert_eq!(nonlinearity(&f) % (1 << (res + 1)), 0);
            }
        }
    }

    #[test]
    fn translation_and_duality(f in function(10), a in any::<u32>()) {
        let a = a & ((1 << f.n()) - 1);
        prop_assert_eq!(f.translate(a).unwrap().translate(a).unwrap(), f.clone());
        let s = walsh_transform(&f);
        let t = walsh_transform(&f.translate(a).unwrap());
        for w in 0..1u32 << f.n() {
            let sign = if (w & a).count_ones() % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(t.get(w), sign * s.get(w));
        }
    }
}

#[test]
fn every_four_variable_function() {
    let mut bent = 0;
    for t in 0u64..1 << 16 {
        let f = BooleanFunction::from_words(4, vec![t]).unwrap();
        let s = walsh_transform(&f);
        assert_eq!(s, oracle::naive_walsh(&f).unwrap());
        if analysis::is_bent(&f) {
            bent += 1;
            assert_eq!(analysis::dual(&analysis::dual(&f).unwrap()).unwrap(), f);
        }
    }
    // the number of 4-variable bent functions
    assert_eq!(bent, 896);
}
