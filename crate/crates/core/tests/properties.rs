use colorsuper::enveloping::Envelope;
use colorsuper::grassmann::{GradedPoly, Monomial, Var};
use colorsuper::rational::int;
use colorsuper::scga::build_scga;
use colorsuper::Gen;
use proptest::prelude::*;

fn var_strategy() -> impl Strategy<Value = Var> {
    prop_oneof![
        Just(Var::X1),
        Just(Var::X2),
        Just(Var::X3),
        Just(Var::Theta1),
        Just(Var::Theta2),
        (0u32..3).prop_map(Var::Psi),
        (0u32..2).prop_map(Var::Z),
        (0u32..2).prop_map(|n| Var::Y(n, n + 1)),
        Just(Var::W(0, 1)),
        (0u32..2, 0u32..2).prop_map(|(n, m)| Var::Sigma(n, m)),
    ]
}

/// A signed product of up to four variables times `E^k`.
fn mono_strategy() -> impl Strategy<Value = GradedPoly> {
    (prop::collection::vec(var_strategy(), 0..=4), -2i64..=2, -3i64..=3).prop_map(|(vs, k, c)| {
        GradedPoly::product(&vs).mul(&GradedPoly::exp(int(k))).scaled(&int(if c == 0 { 1 } else { c }))
    })
}

fn gen_strategy() -> impl Strategy<Value = Gen> {
    prop::sample::select(vec![Gen::H, Gen::D, Gen::K, Gen::Q, Gen::S, Gen::P(0), Gen::P(1), Gen::X(0)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graded_derivatives_commute(f in mono_strategy(), a in var_strategy(), b in var_strategy()) {
        let ab = f.derive(b).derive(a);
        let ba = f.derive(a).derive(b);
        let s = int(a.degree().sign(b.degree()) as i64);
        prop_assert_eq!(ab.sub(&ba.scaled(&s)), GradedPoly::zero());
    }

    #[test]
    fn constants_are_annihilated(c in -5i64..5, k in -2i64..=2, v in var_strategy()) {
        let f = GradedPoly::constant(int(c));
        prop_assert!(f.derive(v).is_zero());
        // E^k is a function of x3 only.
        if v != Var::X3 {
            prop_assert!(GradedPoly::exp(int(k)).derive(v).is_zero());
        }
    }

    #[test]
    fn multiplication_is_associative(p in mono_strategy(), q in mono_strategy(), r in mono_strategy()) {
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
    }

    #[test]
    fn variables_commute_up_to_sign(a in var_strategy(), b in var_strategy()) {
        let ab = GradedPoly::product(&[a, b]);
        let ba = GradedPoly::product(&[b, a]);
        prop_assert_eq!(ab, ba.scaled(&int(a.degree().sign(b.degree()) as i64)));
    }

    #[test]
    fn derivative_obeys_graded_leibniz(p in mono_strategy(), q in mono_strategy(), v in var_strategy()) {
        let lhs = p.mul(&q).derive(v);
        let rhs = p.derive(v).mul(&q).plus(&p.twisted(v.degree()).mul(&q.derive(v)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_weights_add(k in -4i64..=4, j in -4i64..=4) {
        let e = GradedPoly::exp(int(k)).mul(&GradedPoly::exp(int(j)));
        prop_assert_eq!(e, GradedPoly::term(Monomial::exp(int(k + j)), int(1)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn pbw_rewriting_is_confluent(word in prop::collection::vec(gen_strategy(), 0..=5),
                                  picks in prop::collection::vec(0usize..8, 64)) {
        let env = Envelope::new(build_scga(1, true).unwrap());
        let canonical = env.normal_order(&word);
        let mut it = picks.into_iter().cycle();
        let other = env.normal_order_with(&word, &mut |d: &[usize]| it.next().unwrap() % d.len());
        prop_assert_eq!(canonical, other);
    }

    #[test]
    fn pbw_product_is_associative(a in prop::collection::vec(gen_strategy(), 0..=3),
                                  b in prop::collection::vec(gen_strategy(), 0..=3),
                                  c in prop::collection::vec(gen_strategy(), 0..=3)) {
        let env = Envelope::new(build_scga(1, true).unwrap());
        let (x, y, z) = (env.normal_order(&a), env.normal_order(&b), env.normal_order(&c));
        prop_assert_eq!(env.mul(&env.mul(&x, &y), &z), env.mul(&x, &env.mul(&y, &z)));
        let whole: Vec<Gen> = a.iter().chain(&b).chain(&c).copied().collect();
        prop_assert_eq!(env.mul(&env.mul(&x, &y), &z), env.normal_order(&whole));
    }
}
