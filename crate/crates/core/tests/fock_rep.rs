use colorsuper::colored::build_colored_explicit;
use colorsuper::enveloping::{Envelope, PbwElement};
use colorsuper::fock::{build_fock_rep, build_fock_rep_with, quadratic_in_envelope, quadratic_terms, verify_identities, verify_relations, Orientation};
use colorsuper::involution::verify_star_rep;
use colorsuper::scga::build_scga;
use colorsuper::{Gen, InvolutionKind, InvolutionSpec, SignChoice};

#[test]
fn quadratic_realization_reproduces_brackets_symbolically() {
    for two_ell in [1, 3] {
        let base = build_scga(two_ell, true).unwrap();
        let env = Envelope::new(base.clone());
        for g in [Gen::H, Gen::D, Gen::K, Gen::Q, Gen::S] {
            let quad = quadratic_in_envelope(&env, &quadratic_terms(two_ell, g));
            let dg = base.degree(g).unwrap();
            for &y in base.basis() {
                if !matches!(y, Gen::P(_) | Gen::X(_)) {
                    continue;
                }
                let got = env.colored_bracket(&quad, &PbwElement::gen(y), dg, base.degree(y).unwrap());
                let want: PbwElement = base
                    .bracket_gens(g, y)
                    .unwrap()
                    .iter()
                    .fold(PbwElement::zero(), |acc, (h, c)| {
                        if *h == Gen::I { acc.plus(&PbwElement::scalar(c.clone())) } else { acc.plus(&PbwElement::gen(*h).scaled(c)) }
                    });
                assert_eq!(got, want, "two_ell={two_ell}: [{g}, {y}]");
            }
        }
    }
}

#[test]
fn relations_hold_on_interior() {
    for two_ell in [1, 3] {
        for cutoff in [4, 8] {
            if two_ell == 3 && cutoff == 8 {
                continue;
            }
            let rep = build_fock_rep(two_ell, cutoff).unwrap();
            for alg in [build_scga(two_ell, true).unwrap(), build_colored_explicit(two_ell, true).unwrap()] {
                let r = verify_relations(&rep, &alg).unwrap();
                assert!(r.passed(), "two_ell={two_ell} cutoff={cutoff}: {r} {:?}", r.violations.first());
            }
        }
    }
}

#[test]
fn identities_for_three_halves() {
    let r = verify_identities(3, 4).unwrap();
    assert_eq!(r.expected_boson, "-2/1");
    assert!(r.passed(), "{r:?}");
}

#[test]
fn star_representations() {
    let plus = build_fock_rep_with(1, 8, Orientation::Standard).unwrap();
    let spec = InvolutionSpec::new(InvolutionKind::Adjoint1, SignChoice::Plus, 1).unwrap();
    let r = verify_star_rep(&plus, &spec).unwrap();
    assert!(r.passed(), "{r} {:?}", r.violations);
    let rev = build_fock_rep_with(1, 8, Orientation::Reversed).unwrap();
    let spec = InvolutionSpec::new(InvolutionKind::Adjoint2, SignChoice::Minus, 1).unwrap();
    let r = verify_star_rep(&rev, &spec).unwrap();
    assert!(r.passed(), "{r} {:?}", r.violations);
    // No mode orientation or sign choice makes the representation superstar.
    for orientation in [Orientation::Standard, Orientation::Reversed] {
        let rep = build_fock_rep_with(1, 8, orientation).unwrap();
        for sign in SignChoice::BOTH {
            let spec = InvolutionSpec::new(InvolutionKind::Superadjoint, sign, 1).unwrap();
            assert!(!verify_star_rep(&rep, &spec).unwrap().passed());
        }
    }
}
