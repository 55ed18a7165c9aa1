use bentkit::analysis::{complementary_plateaued, dual, is_bent, nonlinearity, plateaued_order, resiliency_report};
use bentkit::anf::{degree, degree_of_variable};
use bentkit::constructions::*;
use bentkit::corpus;
use bentkit::galois::GaloisField;
use bentkit::oracle;
use bentkit::{walsh_transform, BooleanFunction, Error};
use proptest::prelude::*;
use rand_xoshiro::rand_core::SeedableRng;
use rand_xoshiro::Xoshiro256StarStar;

fn rng(seed: u64) -> Xoshiro256StarStar {
    Xoshiro256StarStar::seed_from_u64(seed)
}

fn even() -> impl Strategy<Value = u32> {
    prop_oneof![Just(2u32), Just(4), Just(6)]
}

fn ip(n: u32) -> BooleanFunction {
    let h = n / 2;
    BooleanFunction::from_fn(n, |i| ((i >> h) & i & ((1 << h) - 1)).count_ones() & 1 == 1).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn restricted_sum_is_bent_with_predicted_dual(seed in any::<u64>(), n in even(), m in even(), v in 0usize..4) {
        let mut r = rng(seed);
        let f = corpus::random_bent(&mut r, n).unwrap();
        let g = corpus::random_bent(&mut r, m).unwrap();
        let mu = 1 + corpus::below(&mut r, n as u64) as u32;
        let rho = 1 + corpus::below(&mut r, m as u64) as u32;
        let variant = Variant::ALL[v];
        let h = construction2(&f, mu, &g, rho, variant).unwrap();
        prop_assert_eq!(h.n(), n + m - 2);
        prop_assert!(is_bent(&h));
        prop_assert_eq!(dual(&h).unwrap(), construction2_dual(&f, mu, &g, rho, variant).unwrap());
    }

    #[test]
    fn variants_are_translates(seed in any::<u64>(), n in even(), m in even()) {
        let mut r = rng(seed);
        let f = corpus::random_bent(&mut r, n).unwrap();
        let g = corpus::random_bent(&mut r, m).unwrap();
        let (mu, rho) = (1 + corpus::below(&mut r, n as u64) as u32, 1 + corpus::below(&mut r, m as u64) as u32);
        let ft = f.translate(1 << (n - mu)).unwrap();
        let gt = g.translate(1 << (m - rho)).unwrap();
        prop_assert_eq!(construction2(&f, mu, &g, rho, Variant::V10).unwrap(), construction2(&ft, mu, &g, rho, Variant::V00).unwrap());
        prop_assert_eq!(construction2(&f, mu, &g, rho, Variant::V01).unwrap(), construction2(&f, mu, &gt, rho, Variant::V00).unwrap());
        prop_assert_eq!(construction2(&f, mu, &g, rho, Variant::V11).unwrap(), construction2(&ft, mu, &gt, rho, Variant::V00).unwrap());
    }

    #[test]
    fn restrictions_are_complementary_plateaued(seed in any::<u64>(), n in prop_oneof![Just(2u32), Just(4), Just(6), Just(8)]) {
        let mut r = rng(seed);
        let f = corpus::random_bent(&mut r, n).unwrap();
        for j in 1..=n {
            let (f0, f1) = f.split(j).unwrap();
            prop_assert!(complementary_plateaued(&f0, &f1).unwrap());
            prop_assert_eq!(plateaued_order(&f0).0, Some(n - 2));
        }
    }

    #[test]
    fn degree_of_restricted_sum(seed in any::<u64>(), n in prop_oneof![Just(4u32), Just(6)], m in prop_oneof![Just(4u32), Just(6)]) {
        let mut r = rng(seed);
        let f = corpus::random_bent(&mut r, n).unwrap();
        let g = corpus::random_bent(&mut r, m).unwrap();
        let (mu, rho) = (1 + corpus::below(&mut r, n as u64) as u32, 1 + corpus::below(&mut r, m as u64) as u32);
        let h = construction2(&f, mu, &g, rho, Variant::V00).unwrap();
        let bound = (n + m - 2) / 2 - 1;
        let d = degree(&h);
        prop_assert!((2..=bound).contains(&d));
        // mixed monomials come only from (f0 + f1)(g0 + g1), so their top
        // degree is deg(f, x_mu) - 1 + deg(g, y_rho) - 1
        let (f0, f1) = f.split(mu).unwrap();
        let (g0, g1) = g.split(rho).unwrap();
        let mixed = degree(&f0.xor(&f1).unwrap()) + degree(&g0.xor(&g1).unwrap());
        prop_assert_eq!(mixed, degree_of_variable(&f, mu).unwrap() + degree_of_variable(&g, rho).unwrap() - 2);
        let pure = degree(&x_part(&h, m - 1)).max(degree(&y_part(&h, m - 1)));
        prop_assert_eq!(d, mixed.max(pure));
        if n == m {
            prop_assert_eq!(d == bound, degree_of_variable(&f, mu).unwrap() == n / 2 && degree_of_variable(&g, rho).unwrap() == m / 2);
        }
    }

    #[test]
    fn nmm_matches_composition(seed in any::<u64>(), n in even(), m in even()) {
        let mut r = rng(seed);
        let phi = corpus::random_permutation(&mut r, n / 2).unwrap();
        let psi = corpus::random_permutation(&mut r, m / 2).unwrap();
        let u = corpus::random_function(&mut r, n / 2).unwrap();
        let v = corpus::random_function(&mut r, m / 2).unwrap();
        let mu = 1 + corpus::below(&mut r, (n / 2) as u64) as u32;
        let rho = 1 + corpus::below(&mut r, (m / 2) as u64) as u32;
        let h = corollary_nmm(&phi, &psi, mu, rho, &u, &v).unwrap();
        let composed = construction2(&mm_function(&phi, &u).unwrap(), mu, &mm_function(&psi, &v).unwrap(), rho, Variant::V00).unwrap();
        prop_assert_eq!(&h, &composed);
        prop_assert!(is_bent(&h));
    }

    #[test]
    fn rothaus_family(seed in any::<u64>(), n in prop_oneof![Just(2u32), Just(4)], m in prop_oneof![Just(2u32), Just(4)]) {
        let mut r = rng(seed);
        let triple = |r: &mut Xoshiro256StarStar, n: u32| {
            let f = corpus::random_bent(r, n).unwrap();
            let l1 = BooleanFunction::linear(n, corpus::below(r, 1 << n) as u32).unwrap();
            let l2 = BooleanFunction::linear(n, corpus::below(r, 1 << n) as u32).unwrap();
            [f.clone(), f.xor(&l1).unwrap(), f.xor(&l2).unwrap()]
        };
        let fs = triple(&mut r, n);
        let gs = triple(&mut r, m);
        let fr = [&fs[0], &fs[1], &fs[2]];
        let gr = [&gs[0], &gs[1], &gs[2]];
        let h = corollary_rothaus(fr, gr).unwrap();
        prop_assert!(is_bent(&h));
        prop_assert_eq!(&h, &corollary_rothaus_formula(fr, gr).unwrap());
        let composed = construction2(&rothaus(fr[0], fr[1], fr[2]).unwrap(), n + 2, &rothaus(gr[0], gr[1], gr[2]).unwrap(), m + 2, Variant::V00).unwrap();
        prop_assert_eq!(h, composed);
    }

    #[test]
    fn class_d_family(seed in any::<u64>(), n in prop_oneof![Just(4u32), Just(6)], m in prop_oneof![Just(4u32), Just(6)]) {
        let mut r = rng(seed);
        let (phi, e1, e2) = corpus::random_class_d_params(&mut r, n / 2).unwrap();
        let (psi, x1, x2) = corpus::random_class_d_params(&mut r, m / 2).unwrap();
        let mu = 1 + corpus::below(&mut r, n as u64) as u32;
        let rho = 1 + corpus::below(&mut r, m as u64) as u32;
        let f = ClassD { phi, e1, e2 };
        let g = ClassD { phi: psi, e1: x1, e2: x2 };
        let h = corollary_class_d(&f, mu, &g, rho).unwrap();
        prop_assert!(is_bent(&h));
        let d = degree(&h);
        prop_assert!(2 <= d && d < (n + m - 2) / 2);
    }

    #[test]
    fn psab_family(seed in any::<u64>(), n in prop_oneof![Just(4u32), Just(6), Just(8)], m in prop_oneof![Just(4u32), Just(6)]) {
        let mut r = rng(seed);
        let side = |r: &mut Xoshiro256StarStar, n: u32| {
            let field = GaloisField::new(n / 2).unwrap();
            let theta = corpus::random_field_function(r, field);
            let q = field.order() as u64;
            loop {
                let (a, b) = (corpus::below(r, q) as u32, corpus::below(r, q) as u32);
                let (alpha, beta) = (corpus::below(r, q) as u32, corpus::below(r, q) as u32);
                let t = field.trace_raw(field.mul_raw(a, alpha) ^ field.mul_raw(b, beta));
                if (a, b) != (0, 0) && t {
                    return (theta, Hyperplane { a, b, alpha, beta });
                }
            }
        };
        let (theta, fp) = side(&mut r, n);
        let (vartheta, gp) = side(&mut r, m);
        let h = corollary_psab(&theta, fp, &vartheta, gp).unwrap();
        prop_assert_eq!(h.n(), n + m - 2);
        prop_assert!(is_bent(&h));
        let (f0, f1) = psap_split(&theta, fp).unwrap();
        prop_assert!(complementary_plateaued(&f0, &f1).unwrap());
    }

    #[test]
    fn gis_walsh_identity(seed in any::<u64>(), n in 2u32..=5, m in 2u32..=5) {
        let mut r = rng(seed);
        let f: Vec<_> = (0..3).map(|_| corpus::random_function(&mut r, n).unwrap()).collect();
        let g: Vec<_> = (0..3).map(|_| corpus::random_function(&mut r, m).unwrap()).collect();
        let h = generalized_indirect_sum([&f[0], &f[1], &f[2]], [&g[0], &g[1], &g[2]]).unwrap();
        let nu1 = f[0].xor(&f[1]).unwrap().xor(&f[2]).unwrap();
        let nu2 = g[0].xor(&g[1]).unwrap().xor(&g[2]).unwrap();
        let ws: Vec<_> = f.iter().chain([&nu1]).map(walsh_transform).collect();
        let vs: Vec<_> = g.iter().chain([&nu2]).map(walsh_transform).collect();
        let wh = oracle::naive_walsh(&h).unwrap();
        for a in 0..1u32 << n {
            let (w1, w2, w3, w123) = (ws[0].get(a), ws[1].get(a), ws[2].get(a), ws[3].get(a));
            for b in 0..1u32 << m {
                let sum = vs[0].get(b) * (w1 + w2 + w3 + w123)
                    + vs[1].get(b) * (w1 - w2 - w3 + w123)
                    + vs[2].get(b) * (w1 - w2 + w3 - w123)
                    + vs[3].get(b) * (w1 + w2 - w3 - w123);
                prop_assert_eq!(sum % 4, 0);
                prop_assert_eq!(wh.get(a << m | b), sum / 4);
            }
        }
    }

    #[test]
    fn gis_resiliency(seed in any::<u64>(), n in 3u32..=5, m in 3u32..=5, t in 0u32..=1, k in 0u32..=1) {
        let mut r = rng(seed);
        let f = corpus::random_resilient_triple(&mut r, n, t).unwrap();
        let g = corpus::random_resilient_triple(&mut r, m, k).unwrap();
        let h = generalized_indirect_sum([&f[0], &f[1], &f[2]], [&g[0], &g[1], &g[2]]).unwrap();
        prop_assert!(resiliency_report(&h).1 >= (t + k + 1) as i32);
        prop_assert!(oracle::resiliency_by_definition(&h, t + k + 1).unwrap());
    }

    #[test]
    fn four_cases(seed in any::<u64>(), m in 2u32..=4) {
        let mut r = rng(seed);
        let (triple, _) = corpus::random_derivative_triple(&mut r, 4).unwrap();
        let g: Vec<_> = (0..3).map(|_| corpus::random_function(&mut r, m).unwrap()).collect();
        let f = triple.functions();
        let h = generalized_indirect_sum([&f[0], &f[1], &f[2]], [&g[0], &g[1], &g[2]]).unwrap();
        let nu2 = g[0].xor(&g[1]).unwrap().xor(&g[2]).unwrap();
        let spectra = [walsh_transform(&g[0]), walsh_transform(&g[1]), walsh_transform(&g[2]), walsh_transform(&nu2)];
        let w1 = walsh_transform(&f[0]);
        let wh = walsh_transform(&h);
        let cases = walsh_cases(&triple).unwrap();
        for a in 0..16u32 {
            let c = cases[a as usize];
            prop_assert_eq!(c, walsh_case_classify(&triple, a).unwrap());
            let s = &spectra[c.multiplier() as usize];
            for b in 0..1u32 << m {
                prop_assert_eq!(wh.get(a << m | b), s.get(b) * w1.get(a));
            }
        }
    }
}

/// `x -> h(x, 0)`, whose ANF is the `y`-free part of `h`'s.
fn x_part(h: &BooleanFunction, m: u32) -> BooleanFunction {
    BooleanFunction::from_fn(h.n() - m, |x| h.get(x << m)).unwrap()
}

/// `y -> h(0, y)`.
fn y_part(h: &BooleanFunction, m: u32) -> BooleanFunction {
    BooleanFunction::from_fn(m, |y| h.get(y)).unwrap()
}

#[test]
fn direct_sum_nonlinearity_formula() {
    let mut r = rng(7);
    for _ in 0..50 {
        let n = 1 + corpus::below(&mut r, 6) as u32;
        let m = 1 + corpus::below(&mut r, 6) as u32;
        let f = corpus::random_function(&mut r, n).unwrap();
        let g = corpus::random_function(&mut r, m).unwrap();
        let (nf, ng) = (nonlinearity(&f), nonlinearity(&g));
        let h = direct_sum(&f, &g).unwrap();
        assert_eq!(nonlinearity(&h), (ng << n) + (nf << m) - 2 * nf * ng);
    }
    let h = direct_sum(&ip(4), &ip(4)).unwrap();
    assert_eq!(nonlinearity(&h), 120);
}

#[test]
fn premise_errors() {
    let lin = BooleanFunction::linear(4, 0b1010).unwrap();
    assert_eq!(construction2(&lin, 1, &ip(4), 1, Variant::V00), Err(Error::NotBent));
    assert!(rothaus(&ip(4), &ip(4), &lin).unwrap_err().is_premise());
    let t = BentTriple::new(ip(4), ip(4), lin.clone()).unwrap();
    assert!(!t.is_certified());
    assert!(theorem42_build(&t, [&lin, &lin, &lin]).unwrap_err().is_premise());
}

#[test]
fn indirect_sum_dual_formula() {
    let mut r = rng(11);
    for _ in 0..20 {
        let fs: Vec<_> = (0..2).map(|_| corpus::random_bent(&mut r, 4).unwrap()).collect();
        let gs: Vec<_> = (0..2).map(|_| corpus::random_bent(&mut r, 4).unwrap()).collect();
        let h = indirect_sum(&fs[0], &fs[1], &gs[0], &gs[1]).unwrap();
        assert!(is_bent(&h));
        let d = |f: &BooleanFunction| dual(f).unwrap();
        assert_eq!(dual(&h).unwrap(), indirect_sum(&d(&fs[0]), &d(&fs[1]), &d(&gs[0]), &d(&gs[1])).unwrap());
    }
}

#[test]
fn spec_examples() {
    let h = construction2(&ip(4), 4, &ip(4), 4, Variant::V00).unwrap();
    assert!(is_bent(&h));
    assert_eq!(nonlinearity(&h), 28);
    let y = ip(2);
    assert!(is_bent(&construction2(&ip(6), 3, &y, 2, Variant::V00).unwrap()));
    // self-dual inputs feed the dual formula their own restrictions
    assert_eq!(construction2_dual(&ip(4), 2, &ip(4), 3, Variant::V00).unwrap(), construction2(&ip(4), 2, &ip(4), 3, Variant::V00).unwrap());
    let id = PermutationMap::identity(2).unwrap();
    let z = BooleanFunction::zero(2).unwrap();
    assert!(is_bent(&corollary_nmm(&id, &id, 1, 1, &z, &z).unwrap()));
    let constant = PermutationMap::general(2, 2, vec![1, 1, 1, 1]).unwrap();
    assert!(!is_bent(&mm_function(&constant, &z).unwrap()));
    // degenerate Rothaus family: f + g + x_{n+1} y_{m+1}
    let (f, g) = (ip(4), ip(2));
    let h = corollary_rothaus([&f, &f, &f], [&g, &g, &g]).unwrap();
    let expected = BooleanFunction::from_fn(8, |i| {
        let (x, u, y, v) = (i >> 4, i >> 3 & 1, i >> 1 & 3, i & 1);
        f.get(x) ^ g.get(y) ^ (u & v == 1)
    })
    .unwrap();
    assert_eq!(h, expected);
}

#[test]
fn gis_bent_mode() {
    let mut r = rng(13);
    for _ in 0..5 {
        let tf = corpus::random_bent_triple(&mut r, 6).unwrap();
        let g = corpus::random_bent(&mut r, 6).unwrap();
        let l1 = BooleanFunction::linear(6, corpus::below(&mut r, 64) as u32).unwrap();
        let l2 = BooleanFunction::linear(6, corpus::below(&mut r, 64) as u32).unwrap();
        let gs = [g.clone(), g.xor(&l1).unwrap(), g.xor(&l2).unwrap()];
        let f = tf.functions();
        let h = generalized_indirect_sum([&f[0], &f[1], &f[2]], [&gs[0], &gs[1], &gs[2]]).unwrap();
        assert_eq!(h.n(), 12);
        assert!(is_bent(&h));
    }
}

#[test]
fn table_one_shapes() {
    let mut r = rng(17);
    let (triple, _) = corpus::random_derivative_triple(&mut r, 4).unwrap();
    let f = triple.functions();
    let g1 = corpus::random_function(&mut r, 3).unwrap();
    let g2 = corpus::random_function(&mut r, 3).unwrap();
    for i in 1..=3 {
        let yi = BooleanFunction::linear(3, 1 << (3 - i)).unwrap();
        let g3 = g2.xor(&yi).unwrap();
        let diff = indirect_sum_difference([&f[0], &f[1], &f[2]], [&g1, &g2, &g3]).unwrap();
        let expected = f[1].xor(&f[2]).unwrap().block_combine(&yi, bentkit::Combine::And).unwrap();
        assert_eq!(diff, expected);
    }
}
