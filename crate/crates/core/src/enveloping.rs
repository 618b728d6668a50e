//! PBW normal ordering in the enveloping algebra of a (super) base algebra.
//!
//! Product signs come from the base algebra's own degrees. When the base
//! carries the central element `I`, it is specialized to the scalar `c = 1`,
//! so monomials never contain it.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::ColorAlgebra;
use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::generator::Gen;
use crate::grading::Degree;
use crate::linalg::SpanSolver;
use crate::rational::{self, frac, int, Rational};

/// Ordered product of generators with positive exponents, strictly
/// increasing in the generator order. The empty monomial is the identity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PbwMonomial(Vec<(Gen, u32)>);

impl PbwMonomial {
    pub fn one() -> Self {
        PbwMonomial(vec![])
    }

    pub fn factors(&self) -> &[(Gen, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    fn from_word(word: &[Gen]) -> Self {
        let mut out: Vec<(Gen, u32)> = vec![];
        for g in word {
            match out.last_mut() {
                Some((h, e)) if h == g => *e += 1,
                _ => out.push((*g, 1)),
            }
        }
        PbwMonomial(out)
    }

    fn to_word(&self) -> Vec<Gen> {
        self.0.iter().flat_map(|(g, e)| std::iter::repeat_n(*g, *e as usize)).collect()
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(g, e)| if *e == 1 { g.to_string() } else { format!("{g}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PbwElement {
    terms: BTreeMap<PbwMonomial, Rational>,
}

impl PbwElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(PbwMonomial::one(), c);
        e
    }

    pub fn gen(g: Gen) -> Self {
        let mut e = Self::zero();
        e.add_term(PbwMonomial(vec![(g, 1)]), Rational::one());
        e
    }

    pub fn monomial(factors: &[(Gen, u32)], c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(PbwMonomial(factors.to_vec()), c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<PbwMonomial, Rational> {
        &self.terms
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, other: &PbwElement, c: &Rational) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn scaled(&self, c: &Rational) -> PbwElement {
        let mut out = PbwElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &PbwElement) -> PbwElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn plus(&self, other: &PbwElement) -> PbwElement {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    /// The scalar part if the element is a multiple of the identity.
    pub fn as_scalar(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&PbwMonomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }
}

impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if m.0.is_empty() {
                write!(f, "{}", rational::to_compact(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{} {m}", rational::to_compact(&abs))?;
            }
        }
        Ok(())
    }
}

/// Enveloping algebra of a base algebra, with rewriting
/// `b a -> (-1)^{|a||b|} a b + [b, a]` for out-of-order neighbours and
/// `x x -> 1/2 [x, x]` for odd `x`.
#[derive(Clone, Debug)]
pub struct Envelope {
    base: ColorAlgebra,
}

impl Envelope {
    pub fn new(base: ColorAlgebra) -> Self {
        Envelope { base }
    }

    pub fn base(&self) -> &ColorAlgebra {
        &self.base
    }

    fn degree(&self, g: Gen) -> Degree {
        self.base.degree(g).expect("word letters belong to the base algebra")
    }

    fn is_descent(&self, b: Gen, a: Gen) -> bool {
        b > a || (b == a && self.degree(b).is_nilpotent())
    }

    /// Pushes `prefix · x · suffix` for every term of `x`, dropping the
    /// central element (it acts as the scalar 1).
    fn push_replacement(
        &self,
        pending: &mut BTreeMap<Vec<Gen>, Rational>,
        prefix: &[Gen],
        x: &AlgebraElement,
        suffix: &[Gen],
        scale: &Rational,
    ) {
        for (g, k) in x.iter() {
            let mut w = prefix.to_vec();
            if *g != Gen::I {
                w.push(*g);
            }
            w.extend_from_slice(suffix);
            add_word(pending, w, scale * k);
        }
    }

    pub fn normal_order(&self, word: &[Gen]) -> PbwElement {
        self.normal_order_with(word, &mut |_: &[usize]| 0)
    }

    /// Normal ordering where `choose` picks which of the current descent
    /// positions to rewrite next. Every strategy gives the same result.
    pub fn normal_order_with(&self, word: &[Gen], choose: &mut dyn FnMut(&[usize]) -> usize) -> PbwElement {
        let mut pending: BTreeMap<Vec<Gen>, Rational> = BTreeMap::new();
        let word: Vec<Gen> = word.iter().copied().filter(|g| *g != Gen::I).collect();
        pending.insert(word, Rational::one());
        let mut done = PbwElement::zero();
        while let Some((w, c)) = pending.pop_first() {
            let descents: Vec<usize> =
                (0..w.len().saturating_sub(1)).filter(|&p| self.is_descent(w[p], w[p + 1])).collect();
            if descents.is_empty() {
                done.add_term(PbwMonomial::from_word(&w), c);
                continue;
            }
            let p = descents[choose(&descents).min(descents.len() - 1)];
            let (b, a) = (w[p], w[p + 1]);
            let br = self.base.bracket_gens(b, a).expect("letters belong to the base algebra");
            if a == b {
                self.push_replacement(&mut pending, &w[..p], &br, &w[p + 2..], &(c * frac(1, 2)));
            } else {
                let mut swapped = w.clone();
                swapped.swap(p, p + 1);
                let s = self.degree(b).sign(self.degree(a));
                add_word(&mut pending, swapped, &c * int(s as i64));
                self.push_replacement(&mut pending, &w[..p], &br, &w[p + 2..], &c);
            }
        }
        done
    }

    pub fn mul(&self, u: &PbwElement, v: &PbwElement) -> PbwElement {
        let mut out = PbwElement::zero();
        for (m1, c1) in &u.terms {
            for (m2, c2) in &v.terms {
                let mut w = m1.to_word();
                w.extend(m2.to_word());
                out.add_scaled(&self.normal_order(&w), &(c1 * c2));
            }
        }
        out
    }

    /// `u v - (-1)^{a.b} v u` with the Z2 x Z2 degrees supplied by the caller.
    pub fn colored_bracket(&self, u: &PbwElement, v: &PbwElement, deg_u: Degree, deg_v: Degree) -> PbwElement {
        let uv = self.mul(u, v);
        let vu = self.mul(v, u);
        let mut out = uv;
        out.add_scaled(&vu, &int(-(deg_u.sign(deg_v) as i64)));
        out
    }
}

fn add_word(pending: &mut BTreeMap<Vec<Gen>, Rational>, w: Vec<Gen>, c: Rational) {
    if c.is_zero() {
        return;
    }
    let slot = pending.entry(w.clone()).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        pending.remove(&w);
    }
}

/// Solver for expressing PBW elements over a fixed spanning set.
#[derive(Clone, Debug)]
pub struct SpanDecomposer {
    names: Vec<Gen>,
    solver: SpanSolver<PbwMonomial>,
}

impl SpanDecomposer {
    pub fn new(span: &[(Gen, PbwElement)]) -> Result<Self> {
        let vectors: Vec<BTreeMap<PbwMonomial, Rational>> = span.iter().map(|(_, e)| e.terms.clone()).collect();
        let solver = SpanSolver::new(&vectors).map_err(|i| Error::LinearlyDependent(span[i].0))?;
        Ok(SpanDecomposer { names: span.iter().map(|(g, _)| *g).collect(), solver })
    }

    pub fn decompose(&self, elt: &PbwElement) -> Result<AlgebraElement> {
        let r = self.solver.reduce(&elt.terms);
        if !r.is_exact() {
            let residual = PbwElement { terms: r.residual };
            return Err(Error::NotInSpan { residual: residual.to_string() });
        }
        Ok(self.names.iter().copied().zip(r.coefficients).collect())
    }
}

pub fn decompose_in_span(elt: &PbwElement, span: &[(Gen, PbwElement)]) -> Result<AlgebraElement> {
    SpanDecomposer::new(span)?.decompose(elt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scga::build_scga;

    fn env(two_ell: u32, central: bool) -> Envelope {
        Envelope::new(build_scga(two_ell, central).unwrap())
    }

    #[test]
    fn odd_square_halves_the_anticommutator() {
        let u = env(1, false);
        assert_eq!(u.normal_order(&[Gen::Q, Gen::Q]), PbwElement::gen(Gen::H));
        assert_eq!(u.normal_order(&[Gen::H]), PbwElement::gen(Gen::H));
    }

    #[test]
    fn central_element_becomes_scalar() {
        let u = env(1, true);
        let expected = PbwElement::monomial(&[(Gen::P(0), 1), (Gen::P(1), 1)], int(1)).sub(&PbwElement::scalar(int(1)));
        assert_eq!(u.normal_order(&[Gen::P(1), Gen::P(0)]), expected);
        // X_0 X_0 = 1/2 {X_0, X_0} = alpha_0 / 2
        assert_eq!(u.normal_order(&[Gen::X(0), Gen::X(0)]), PbwElement::scalar(frac(1, 2)));
    }

    #[test]
    fn colored_brackets_of_generators() {
        let u = env(1, false);
        let p0 = PbwElement::gen(Gen::P(0));
        let q = PbwElement::gen(Gen::Q);
        assert_eq!(
            u.colored_bracket(&p0, &p0, Degree::D01, Degree::D01),
            PbwElement::monomial(&[(Gen::P(0), 2)], int(2))
        );
        assert!(u.colored_bracket(&p0, &q, Degree::D01, Degree::D10).is_zero());
        // {Q, Lam_00} with Lam_00 = 2 P_0 X_0 gives P_00 = 2 P_0^2.
        let lam = PbwElement::monomial(&[(Gen::P(0), 1), (Gen::X(0), 1)], int(2));
        assert_eq!(
            u.colored_bracket(&q, &lam, Degree::D10, Degree::D10),
            PbwElement::monomial(&[(Gen::P(0), 2)], int(2))
        );
        let s = PbwElement::gen(Gen::S);
        let qs = u.colored_bracket(&q, &s, Degree::D10, Degree::D10);
        assert!(qs.plus(&PbwElement::gen(Gen::D).scaled(&int(2))).is_zero());
    }

    #[test]
    fn span_decomposition() {
        let u = env(1, true);
        let x0 = PbwElement::gen(Gen::X(0));
        let pp = PbwElement::monomial(&[(Gen::P(0), 1), (Gen::P(1), 1)], int(2));
        let span = vec![(Gen::Pc(0, 1), pp.clone()), (Gen::I, PbwElement::scalar(int(1)))];
        assert_eq!(decompose_in_span(&pp, &span).unwrap(), AlgebraElement::gen(Gen::Pc(0, 1)));
        // the super anticommutator {X_0, X_0} = alpha_0 = 1
        let anti = u.mul(&x0, &x0).scaled(&int(2));
        assert_eq!(decompose_in_span(&anti, &span).unwrap(), AlgebraElement::gen(Gen::I));
        let err = decompose_in_span(&x0, &span).unwrap_err();
        assert!(matches!(err, Error::NotInSpan { .. }));
    }
}
