use thetacf_core::cf::{approx_order, cf_of_series, measure_estimate};
use thetacf_core::verify::{check_lemma3, quartic_root, Context, ThetaExpansion};
use thetacf_core::words::{series_of_prefix, w_prefix, Phi};
use thetacf_core::{Alphabet, Field, Polynomial, PrimeField, RationalFunction, Rationals};

#[test]
fn approximants_are_convergents_of_theta() {
    let ctx = Context::for_max_n(3);
    let exp = ThetaExpansion::new(&ctx, 3).unwrap();
    for n in 1..=3 {
        let p = ctx.lemma1_pair(n).unwrap();
        let f = RationalFunction::new(p.r, p.s).unwrap();
        assert_eq!(exp.table.index_of(&f), Some(4 * n));
        let theta = ctx.theta(400).unwrap();
        assert!(approx_order(&theta, &f).unwrap() > 2 * f.den().degree().unwrap() as i64);
    }
}

#[test]
fn series_and_rational_routes_agree() {
    let ctx = Context::for_max_n(2);
    let exp = ThetaExpansion::new(&ctx, 2).unwrap();
    let theta = series_of_prefix(&w_prefix(200), &Alphabet::default());
    let cert = cf_of_series(&theta).unwrap();
    let k = exp.cf.quotients().len().min(cert.cf.quotients().len());
    assert!(k >= 12);
    assert_eq!(&exp.cf.quotients()[..k], &cert.cf.quotients()[..k]);
    let terms = measure_estimate(&exp.degrees()).unwrap();
    assert_eq!(terms[3].nu.to_string(), "5/2");
}

#[test]
fn generating_function_of_a_period() {
    // 12 repeated forever is (T + 2)/(T^2 - 1)
    let period = w_prefix(2);
    let f = Phi(&period, &Alphabet::default());
    let t2 = Polynomial::t_pow(Rationals, 2);
    let t2_minus_1 = &t2 - &Polynomial::one(Rationals);
    let repeated = RationalFunction::new(f.num() * &t2, f.den() * &t2_minus_1).unwrap();
    let want = RationalFunction::parse(Rationals, "(T + 2)/(T^2 - 1)").unwrap();
    assert_eq!(repeated, want);
}

#[test]
fn lemma3_rows_at_n4() {
    let ctx = Context::for_max_n(4);
    let rows = check_lemma3(&ctx, 4).unwrap();
    assert!(rows.iter().all(|r| r.pass));
}

#[test]
fn quartic_root_over_several_fields() {
    for p in [3, 5, 13] {
        let f = PrimeField::new(p).unwrap();
        let x = quartic_root(p, 40).unwrap().root;
        assert_eq!(x.coeff(-1), Some(f.one()));
        assert_eq!(x.coeff(0), Some(f.zero()));
    }
}
