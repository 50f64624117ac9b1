use num_bigint::{BigInt, BigUint};
use num_traits::One;
use proptest::prelude::*;

use pjshadow::arith::{self, Prime};
use pjshadow::imj;
use pjshadow::jshadow;
use pjshadow::padic::{self, PadicNumber};
use pjshadow::rational::NonzeroRational;
use pjshadow::symbols::{self, Place, SignValue};

fn primes(max: u64) -> Vec<u64> {
    arith::primes_up_to(max)
}

fn prime(max: u64) -> impl Strategy<Value = Prime> {
    prop::sample::select(primes(max)).prop_map(|p| Prime::new(p).unwrap())
}

fn odd_prime(max: u64) -> impl Strategy<Value = Prime> {
    prop::sample::select(primes(max).into_iter().filter(|&p| p > 2).collect::<Vec<_>>())
        .prop_map(|p| Prime::new(p).unwrap())
}

fn nonzero(bound: i64) -> impl Strategy<Value = i64> {
    (1..=bound, any::<bool>()).prop_map(|(n, neg)| if neg { -n } else { n })
}

fn rational(bound: i64) -> impl Strategy<Value = NonzeroRational> {
    (nonzero(bound), 1..=bound).prop_map(|(n, d)| NonzeroRational::new(n, d).unwrap())
}

fn prime_power(max: u64) -> impl Strategy<Value = u64> {
    prop::sample::select((2..=max).filter(|&q| arith::prime_power(q).is_some()).collect::<Vec<_>>())
}

fn place(max: u64) -> impl Strategy<Value = Place> {
    prop_oneof![prime(max).prop_map(Place::Finite), Just(Place::Infinity)]
}

/// `(x mod p^n)` for a rational whose denominator is prime to `p`.
fn residue_of(x: &NonzeroRational, p: Prime, n: u32) -> BigUint {
    let m = p.pow(n);
    let num = arith::reduce_mod(x.numer(), &m);
    let den = arith::reduce_mod(x.denom(), &m);
    num * arith::inverse_mod(&den, &m).unwrap() % m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn valuation_is_additive(x in rational(10_000), y in rational(10_000), p in prime(100)) {
        prop_assert_eq!(padic::vp(&x.mul(&y), p), padic::vp(&x, p) + padic::vp(&y, p));
    }

    #[test]
    fn norm_is_multiplicative(x in rational(10_000), y in rational(10_000), p in prime(100)) {
        let lhs = padic::padic_norm(&x.mul(&y), p);
        prop_assert_eq!(lhs, padic::padic_norm(&x, p).mul(&padic::padic_norm(&y, p)));
    }

    #[test]
    fn teichmuller_is_a_root_of_unity(p in odd_prime(50), a in 1u64..1_000) {
        prop_assume!(a % p.get() != 0);
        let w = padic::teichmuller(&BigInt::from(a), p, 16).unwrap();
        prop_assert_eq!(w.pow(p.get() as i64 - 1).unwrap(), PadicNumber::one(p, 16).unwrap());
        prop_assert_eq!(w.to_residue().unwrap() % p.get(), BigUint::from(a % p.get()));
    }

    #[test]
    fn log_is_a_homomorphism(p in odd_prime(50), a in 0u64..10_000, b in 0u64..10_000) {
        const N: u32 = 20;
        let x = PadicNumber::from_integer(1 + p.get() * a, p, N).unwrap();
        let y = PadicNumber::from_integer(1 + p.get() * b, p, N).unwrap();
        let lx = padic::residue_mod(&padic::padic_log(&x).unwrap(), N).unwrap();
        let ly = padic::residue_mod(&padic::padic_log(&y).unwrap(), N).unwrap();
        let lxy = padic::residue_mod(&padic::padic_log(&x.mul(&y).unwrap()).unwrap(), N).unwrap();
        prop_assert_eq!(lxy, (lx + ly) % p.pow(N));
    }

    #[test]
    fn rezk_log_lands_in_zl(p in odd_prime(30), a in 1u64..100_000) {
        prop_assume!(a % p.get() != 0);
        let x = PadicNumber::from_integer(a, p, 24).unwrap();
        let r = padic::rezk_log_pi0(&x).unwrap();
        prop_assert!(r.is_zero() || r.valuation().unwrap() >= 0);
    }

    #[test]
    fn generator_test_depends_on_u_mod_l_squared(l in odd_prime(100), u in 2u64..10_000, t in 0u64..50, n in 2u32..4) {
        prop_assume!(u % l.get() != 0);
        let shifted = BigInt::from(u) + BigInt::from(l.pow(n)) * t;
        prop_assert_eq!(
            padic::is_topological_generator(u, l).unwrap(),
            padic::is_topological_generator(shifted, l).unwrap()
        );
    }

    #[test]
    fn hilbert_is_bilinear_and_symmetric(
        a in rational(500), a2 in rational(500), b in rational(500), v in place(60)
    ) {
        let h = |x: &NonzeroRational, y: &NonzeroRational| symbols::hilbert_symbol(x, y, v);
        prop_assert_eq!(h(&a.mul(&a2), &b), h(&a, &b) * h(&a2, &b));
        prop_assert_eq!(h(&a, &b), h(&b, &a));
    }

    #[test]
    fn hilbert_sees_only_square_classes(a in rational(500), b in rational(500), c in rational(100), v in place(60)) {
        let a2 = a.mul(&c.pow(2));
        prop_assert_eq!(symbols::hilbert_symbol(&a2, &b, v), symbols::hilbert_symbol(&a, &b, v));
    }

    #[test]
    fn steinberg_relations(a in rational(1_000), v in place(60)) {
        prop_assert_eq!(symbols::hilbert_symbol(&a, &a.neg(), v), SignValue::Plus);
        if let Ok(one_minus) = NonzeroRational::from_ratio(num_rational::BigRational::one() - a.as_ratio()) {
            prop_assert_eq!(symbols::hilbert_symbol(&a, &one_minus, v), SignValue::Plus);
        }
    }

    /// At odd `p` the Hilbert symbol is the Legendre symbol of the tame symbol.
    #[test]
    fn tame_symbol_determines_hilbert(a in rational(2_000), b in rational(2_000), p in odd_prime(60)) {
        let t = symbols::tame_symbol(&a, &b, p);
        prop_assert!(t >= 1 && t < p.get());
        let leg = symbols::legendre(&BigInt::from(t), p).unwrap();
        prop_assert_eq!(SignValue::from_i8(leg).unwrap(), symbols::hilbert_symbol(&a, &b, Place::Finite(p)));
    }

    #[test]
    fn reciprocity_on_random_pairs(a in rational(1_000_000), b in rational(1_000_000)) {
        prop_assert!(symbols::hilbert_reciprocity_check(&a, &b).unwrap().holds());
        prop_assert!(jshadow::product_formula_pi2(&a, &b).unwrap().holds());
    }

    #[test]
    fn tame_j_is_multiplicative(x in rational(100_000), y in rational(100_000), p in prime(100)) {
        let j = |z: &NonzeroRational| jshadow::j_tame_pi1(z, p);
        prop_assert_eq!(j(&x.mul(&y)), j(&x).mul(&j(&y)));
    }

    /// The tame pi_1 map is the valuation followed by the pi_0 map of `F_p`.
    #[test]
    fn tame_j_factors_through_degree(x in rational(100_000), p in prime(100)) {
        let v = padic::vp(&x, p);
        let up = jshadow::j_fp_pi0(v.max(0) as u32, p);
        let down = jshadow::j_fp_pi0((-v).max(0) as u32, p);
        let expected = NonzeroRational::new(BigInt::from(up), BigInt::from(down)).unwrap();
        prop_assert_eq!(jshadow::j_tame_pi1(&x, p), expected);
    }

    #[test]
    fn wild_j_is_multiplicative(x in rational(100_000), y in rational(100_000), p in prime(100)) {
        prop_assume!(padic::vp(&x, p) == 0 && padic::vp(&y, p) == 0);
        let e = |z: &NonzeroRational| PadicNumber::embed(z, p, 32).unwrap();
        let j = |z: &PadicNumber| jshadow::j_wild_pi1(z).unwrap();
        let xy = e(&x).mul(&e(&y)).unwrap();
        prop_assert_eq!(j(&xy), j(&e(&x)).mul(&j(&e(&y))).unwrap());
    }

    #[test]
    fn k1_order_symmetry_and_closed_form(l in odd_prime(97), k in 1i64..=60, pick in 0usize..3) {
        let u = pjshadow::sweep::generators(l, 3).unwrap()[pick];
        let pos = imj::k1_sphere_order(l, k, u).unwrap();
        let neg = imj::k1_sphere_order(l, -k, u).unwrap();
        prop_assert!(pos.consistent && neg.consistent);
        prop_assert_eq!(&pos.report, &neg.report);
        let canonical = imj::k1_sphere_order(l, k, padic::canonical_generator(l).unwrap()).unwrap();
        prop_assert_eq!(&pos.report, &canonical.report);
        if k % (l.get() as i64 - 1) != 0 {
            prop_assert!(pos.report.is_trivial());
        }
    }

    #[test]
    fn quillen_orders_are_prime_to_q(q in prime_power(1_000), i in 1u32..=8) {
        let r = imj::k_finite_field(2 * i - 1, q).unwrap();
        prop_assert!(imj::prime_to_characteristic(&r, q));
        prop_assert!(r.is_consistent());
        prop_assert!(imj::k_finite_field(2 * i, q).unwrap().is_trivial());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    /// Embedded arithmetic agrees with exact rational arithmetic to the
    /// tracked precision.
    #[test]
    fn embedded_arithmetic_round_trips(
        x in rational(100_000), y in rational(100_000), p in prime(100), n in 1u32..=24
    ) {
        let e = |z: &NonzeroRational| PadicNumber::embed(z, p, n).unwrap();
        let (ex, ey) = (e(&x), e(&y));

        let prod = ex.mul(&ey).unwrap();
        prop_assert!(prod.represents(&x.mul(&y)));
        let quot = ex.div(&ey).unwrap();
        prop_assert!(quot.represents(&x.div(&y)));

        let exact_sum = num_rational::BigRational::from(x.as_ratio().clone()) + y.as_ratio();
        match (ex.add(&ey), NonzeroRational::from_ratio(exact_sum)) {
            (Ok(s), Ok(sum)) => {
                prop_assert_eq!(s.absolute_precision(), ex.absolute_precision().min(ey.absolute_precision()));
                prop_assert_eq!(s.valuation().unwrap(), padic::vp(&sum, p));
                // digits agree with the sum, modulo what the sum is known to
                let v = padic::vp(&sum, p);
                let unit = sum.mul(&NonzeroRational::pow_of_prime(p.get(), -v));
                prop_assert_eq!(s.unit_digits().unwrap(), &residue_of(&unit, p, s.precision()));
            }
            (Err(pjshadow::error::Error::PrecisionUnderflow), r) => {
                // cancellation down to the precision floor
                let floor = ex.absolute_precision().min(ey.absolute_precision());
                prop_assert!(r.map_or(true, |sum| padic::vp(&sum, p) >= floor));
            }
            (Ok(s), Err(_)) => prop_assert!(false, "x + y = 0 but got {}", s),
            (Err(e), _) => prop_assert!(false, "unexpected error {}", e),
        }
    }

    #[test]
    fn adelic_product_is_one(x in rational(1_000_000)) {
        prop_assert_eq!(jshadow::adelic_norm_product(&x).unwrap(), NonzeroRational::one());
    }
}

#[test]
fn bernoulli_denominators_match_prime_products() {
    let table = imj::bernoulli_table(60);
    for n in (2..=60).step_by(2) {
        let d = imj::vsc_denominator(n).unwrap();
        assert_eq!(table[n as usize].denom(), &BigInt::from(d), "n = {n}");
    }
    for (n, b) in table.into_iter().enumerate() {
        let b = imj::BernoulliRational { index: n as u32, value: b };
        assert!(imj::bernoulli_invariants_hold(&b), "B_{n} = {b}");
    }
}
