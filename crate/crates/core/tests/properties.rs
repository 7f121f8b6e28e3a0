use num_traits::{One, Zero};
use proptest::prelude::*;
use witgen_core::genus::obstruction_integers;
use witgen_core::ringcore::{compose_series, int, rat, MPoly, QSeries, Rational, UniSeries};
use witgen_core::toric::{
    hirzebruch, intersection_table, picard_data, product_projective, projective_space,
    LocalizationParams, Localizer, ValidatedFan,
};

const ORDER: usize = 4;
const VARS: usize = 2;
const CAP: usize = 3;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn qseries() -> impl Strategy<Value = QSeries> {
    prop::collection::vec(small_rat(), ORDER + 1).prop_map(|c| QSeries::from_coeffs(ORDER, c))
}

fn unit_qseries() -> impl Strategy<Value = QSeries> {
    (qseries(), (1i64..=7, 1i64..=3)).prop_map(|(mut s, (n, d))| {
        s.set_coeff(0, rat(n, d));
        s
    })
}

fn exponent() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..=CAP as u32, VARS)
}

fn mpoly() -> impl Strategy<Value = MPoly<Rational>> {
    prop::collection::vec((exponent(), small_rat()), 0..6)
        .prop_map(|terms| MPoly::from_terms(VARS, CAP, terms))
}

fn mpoly_no_constant() -> impl Strategy<Value = MPoly<Rational>> {
    mpoly().prop_map(|p| {
        MPoly::from_terms(
            VARS,
            CAP,
            p.terms()
                .filter(|(e, _)| e.iter().any(|&a| a > 0))
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    })
}

fn uniseries() -> impl Strategy<Value = UniSeries<Rational>> {
    prop::collection::vec(small_rat(), CAP + 3).prop_map(|c| UniSeries::from_coeffs(CAP + 2, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn qseries_ring_axioms(a in qseries(), b in qseries(), c in qseries()) {
        let add = |x: &QSeries, y: &QSeries| x.checked_add(y).unwrap();
        let mul = |x: &QSeries, y: &QSeries| x.checked_mul(y).unwrap();
        prop_assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
        prop_assert_eq!(add(&a, &b), add(&b, &a));
        prop_assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
        prop_assert_eq!(mul(&a, &b), mul(&b, &a));
        prop_assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
        prop_assert_eq!(mul(&a, &QSeries::one(ORDER)), a.clone());
        prop_assert_eq!(add(&a, &QSeries::zero(ORDER)), a);
    }

    #[test]
    fn mpoly_ring_axioms(a in mpoly(), b in mpoly(), c in mpoly()) {
        let add = |x: &MPoly<Rational>, y: &MPoly<Rational>| x.try_add(y).unwrap();
        let mul = |x: &MPoly<Rational>, y: &MPoly<Rational>| x.try_mul(y).unwrap();
        prop_assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
        prop_assert_eq!(add(&a, &b), add(&b, &a));
        prop_assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
        prop_assert_eq!(mul(&a, &b), mul(&b, &a));
        prop_assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
        let one = MPoly::constant(VARS, CAP, Rational::one());
        prop_assert_eq!(mul(&a, &one), a.clone());
        prop_assert!(add(&a, &a.neg()).is_zero());
    }

    #[test]
    fn qseries_inverse(a in unit_qseries()) {
        let inv = a.invert().unwrap();
        prop_assert_eq!(a.checked_mul(&inv).unwrap(), QSeries::one(ORDER));
    }

    #[test]
    fn mpoly_inverse(p in mpoly_no_constant(), (n, d) in (1i64..=7, 1i64..=3)) {
        let u = p.try_add(&MPoly::constant(VARS, CAP, rat(n, d))).unwrap();
        let inv = u.invert().unwrap();
        prop_assert_eq!(u.try_mul(&inv).unwrap(), MPoly::constant(VARS, CAP, Rational::one()));
    }

    #[test]
    fn composition_matches_substitution(f in uniseries(), p in mpoly_no_constant()) {
        let mut naive = MPoly::zero(VARS, CAP);
        for (j, c) in f.coeffs().iter().enumerate() {
            let power = if j == 0 {
                MPoly::constant(VARS, CAP, Rational::one())
            } else {
                p.try_pow(j as u32).unwrap()
            };
            let term = power.scale(c);
            naive = naive.try_add(&term).unwrap();
        }
        prop_assert_eq!(compose_series(&f, &p).unwrap(), naive);
    }

    #[test]
    fn parity_matches_diagonal(
        k in 1usize..=3,
        rows in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 0..5),
        m in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 0..7),
    ) {
        let trim = |v: &Vec<Vec<i64>>| -> Vec<Vec<i64>> { v.iter().map(|r| r[..k].to_vec()).collect() };
        let rep = obstruction_integers(&trim(&m), &trim(&rows), k);
        for i in 0..k {
            prop_assert_eq!(rep.parity[i], rep.diag[i].rem_euclid(2));
        }
    }
}

fn fans() -> Vec<ValidatedFan> {
    vec![
        projective_space(3).unwrap(),
        product_projective(&[2, 1]).unwrap(),
        product_projective(&[1, 1, 1]).unwrap(),
        hirzebruch(1).unwrap(),
        hirzebruch(3).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn localization_is_lambda_independent(seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for fan in fans() {
            let pd = picard_data(&fan).unwrap();
            let table = intersection_table(&fan, &pd, 11).unwrap();
            for _ in 0..5 {
                let params = LocalizationParams::sample(fan.num_rays(), &mut rng);
                let Ok(loc) = Localizer::new(&fan, &pd, &params) else { continue };
                for (alpha, v) in &table.entries {
                    prop_assert_eq!(&loc.integrate_monomial(alpha).unwrap(), v);
                }
            }
        }
    }
}

#[test]
fn zero_is_absorbing() {
    let z = MPoly::<Rational>::zero(VARS, CAP);
    let p = MPoly::from_terms(VARS, CAP, vec![(vec![1, 0], int(3))]);
    assert!(p.try_mul(&z).unwrap().is_zero());
    assert!(Rational::zero().is_zero());
}
