//! The N=1 superconformal Galilei algebra `g_l` and its mass-extended form,
//! with super parity embedded in Z2 x Z2 as even = (0,0), odd = (0,1).

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{AlgebraBuilder, ColorAlgebra};
use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::generator::Gen;
use crate::grading::Degree;
use crate::rational::{self, factorial, frac, int, Rational};

/// Mass-extension coefficients `I_n = (-1)^n n! (2l-n)!` and
/// `alpha_n = I_n / (2l-n)`, with central charge `c = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralData {
    pub two_ell: u32,
    pub i: Vec<Rational>,
    pub alpha: Vec<Rational>,
}

impl CentralData {
    pub fn new(two_ell: u32) -> Self {
        let n = two_ell;
        let i: Vec<Rational> = (0..=n)
            .map(|k| {
                let mag: BigInt = factorial(k) * factorial(n - k);
                let v = Rational::from_integer(mag);
                if k % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .collect();
        let alpha = (0..n).map(|k| &i[k as usize] / int((n - k) as i64)).collect();
        CentralData { two_ell, i, alpha }
    }

    pub fn i_n(&self, n: u32) -> &Rational {
        &self.i[n as usize]
    }

    pub fn alpha_n(&self, n: u32) -> &Rational {
        &self.alpha[n as usize]
    }
}

/// Basis of `g_l` in PBW order, with the central element last when present.
pub fn scga_basis(two_ell: u32, central: bool) -> Vec<(Gen, Degree)> {
    let mut v = vec![(Gen::H, Degree::EVEN), (Gen::D, Degree::EVEN), (Gen::K, Degree::EVEN)];
    v.extend((0..=two_ell).map(|n| (Gen::P(n), Degree::EVEN)));
    v.push((Gen::Q, Degree::ODD));
    v.push((Gen::S, Degree::ODD));
    v.extend((0..two_ell).map(|n| (Gen::X(n), Degree::ODD)));
    if central {
        v.push((Gen::I, Degree::EVEN));
    }
    v
}

fn t(g: Gen, c: Rational) -> AlgebraElement {
    AlgebraElement::term(g, c)
}

/// Builds `g_l` (`central = false`) or the mass-extended algebra with `c = 1`.
pub fn build_scga(two_ell: u32, central: bool) -> Result<ColorAlgebra> {
    if central && two_ell % 2 == 0 {
        return Err(Error::CentralExtensionUnavailable { two_ell });
    }
    let name = if central { "scga-central" } else { "scga" };
    let mut b = AlgebraBuilder::new(name, two_ell, central);
    for (g, d) in scga_basis(two_ell, central) {
        b.generator(g, d);
    }
    let n2 = two_ell as i64;
    let ell = rational::ell(two_ell);
    let one = Rational::one;
    let half = || frac(1, 2);

    b.set(Gen::D, Gen::H, t(Gen::H, one()))?;
    b.set(Gen::D, Gen::K, t(Gen::K, -one()))?;
    b.set(Gen::H, Gen::K, t(Gen::D, int(2)))?;
    b.set(Gen::D, Gen::Q, t(Gen::Q, half()))?;
    b.set(Gen::K, Gen::Q, t(Gen::S, one()))?;
    b.set(Gen::H, Gen::S, t(Gen::Q, one()))?;
    b.set(Gen::D, Gen::S, t(Gen::S, -half()))?;
    b.set(Gen::Q, Gen::Q, t(Gen::H, int(2)))?;
    b.set(Gen::S, Gen::S, t(Gen::K, int(-2)))?;
    b.set(Gen::Q, Gen::S, t(Gen::D, int(-2)))?;

    for n in 0..=two_ell {
        let ni = n as i64;
        if n > 0 {
            b.set(Gen::H, Gen::P(n), t(Gen::P(n - 1), int(ni)))?;
            b.set(Gen::Q, Gen::P(n), t(Gen::X(n - 1), int(ni)))?;
        }
        b.set(Gen::D, Gen::P(n), t(Gen::P(n), -(int(ni) - &ell)))?;
        if n < two_ell {
            b.set(Gen::K, Gen::P(n), t(Gen::P(n + 1), int(-(ni - n2))))?;
            b.set(Gen::S, Gen::P(n), t(Gen::X(n), int(ni - n2)))?;
        }
    }
    for n in 0..two_ell {
        let ni = n as i64;
        if n > 0 {
            b.set(Gen::H, Gen::X(n), t(Gen::X(n - 1), int(ni)))?;
        }
        b.set(Gen::D, Gen::X(n), t(Gen::X(n), -(int(ni) - &ell + half())))?;
        if n + 1 < two_ell {
            b.set(Gen::K, Gen::X(n), t(Gen::X(n + 1), int(-(ni - n2 + 1))))?;
        }
        b.set(Gen::Q, Gen::X(n), t(Gen::P(n), one()))?;
        b.set(Gen::S, Gen::X(n), t(Gen::P(n + 1), one()))?;
    }

    if central {
        let cd = CentralData::new(two_ell);
        for n in 0..=two_ell {
            let m = two_ell - n;
            b.set(Gen::P(n), Gen::P(m), t(Gen::I, cd.i_n(n).clone()))?;
        }
        for n in 0..two_ell {
            let m = two_ell - 1 - n;
            b.set(Gen::X(n), Gen::X(m), t(Gen::I, cd.alpha_n(n).clone()))?;
        }
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::check_jacobi;

    #[test]
    fn smallest_algebra_has_eight_generators() {
        let g = build_scga(1, false).unwrap();
        assert_eq!(
            g.basis(),
            &[Gen::H, Gen::D, Gen::K, Gen::P(0), Gen::P(1), Gen::Q, Gen::S, Gen::X(0)]
        );
        for two_ell in 0..6 {
            assert_eq!(build_scga(two_ell, false).unwrap().dim(), 2 * two_ell as usize + 6);
        }
    }

    #[test]
    fn printed_relations() {
        let g = build_scga(2, false).unwrap();
        assert_eq!(g.bracket_gens(Gen::D, Gen::H).unwrap(), AlgebraElement::gen(Gen::H));
        assert_eq!(g.bracket_gens(Gen::Q, Gen::Q).unwrap(), t(Gen::H, int(2)));
        assert!(g.bracket_gens(Gen::D, Gen::D).unwrap().is_zero());
        assert!(g.bracket_gens(Gen::H, Gen::Q).unwrap().is_zero());
        // [D, P_n] = -(n - l) P_n with l = 1
        assert_eq!(g.bracket_gens(Gen::D, Gen::P(0)).unwrap(), t(Gen::P(0), int(1)));
        assert_eq!(g.bracket_gens(Gen::P(2), Gen::Q).unwrap(), t(Gen::X(1), int(-2)));
    }

    #[test]
    fn central_extension_values() {
        let g = build_scga(1, true).unwrap();
        assert_eq!(g.bracket_gens(Gen::P(0), Gen::P(1)).unwrap(), AlgebraElement::gen(Gen::I));
        assert_eq!(g.bracket_gens(Gen::X(0), Gen::X(0)).unwrap(), AlgebraElement::gen(Gen::I));
        assert!(matches!(build_scga(2, true), Err(Error::CentralExtensionUnavailable { two_ell: 2 })));
    }

    #[test]
    fn central_data_invariants() {
        for two_ell in [1u32, 3, 5, 21] {
            let cd = CentralData::new(two_ell);
            for n in 0..=two_ell {
                let sign = if two_ell % 2 == 0 { int(1) } else { int(-1) };
                assert_eq!(cd.i_n(two_ell - n), &(cd.i_n(n) * sign));
            }
            for n in 0..two_ell {
                assert_eq!(cd.alpha_n(n), cd.alpha_n(two_ell - 1 - n));
            }
        }
        let cd = CentralData::new(3);
        assert_eq!(cd.i, vec![int(6), int(-2), int(2), int(-6)]);
        assert_eq!(cd.alpha, vec![int(2), int(-1), int(2)]);
    }

    #[test]
    fn jacobi_holds() {
        for two_ell in 0..=4 {
            let r = check_jacobi(&build_scga(two_ell, false).unwrap());
            assert!(r.passed(), "two_ell={two_ell}: {:?}", r.violations.first());
        }
        for two_ell in [1, 3] {
            let r = check_jacobi(&build_scga(two_ell, true).unwrap());
            assert!(r.passed(), "central two_ell={two_ell}: {:?}", r.violations.first());
        }
    }

    #[test]
    fn spin_modules_are_nilpotent() {
        for two_ell in 1..=4u32 {
            let g = build_scga(two_ell, false).unwrap();
            let ad = |x: Gen, y: &AlgebraElement| g.bracket(&AlgebraElement::gen(x), y).unwrap();
            let mut p = AlgebraElement::gen(Gen::P(0));
            let mut q = AlgebraElement::gen(Gen::P(two_ell));
            for _ in 0..two_ell {
                p = ad(Gen::K, &p);
                q = ad(Gen::H, &q);
                assert!(!p.is_zero() && !q.is_zero());
            }
            assert!(ad(Gen::K, &p).is_zero());
            assert!(ad(Gen::H, &q).is_zero());
            let mut x = AlgebraElement::gen(Gen::X(0));
            for _ in 0..two_ell - 1 {
                x = ad(Gen::K, &x);
                assert!(!x.is_zero());
            }
            assert!(ad(Gen::K, &x).is_zero());
        }
    }

    #[test]
    fn central_element_is_central() {
        let g = build_scga(3, true).unwrap();
        for &x in g.basis() {
            assert!(g.bracket_gens(Gen::I, x).unwrap().is_zero());
        }
    }
}
