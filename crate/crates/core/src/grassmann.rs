//! Z2 x Z2 graded Grassmann numbers: polynomials in graded variables with the
//! sign rule `xi_a xi_b = (-1)^{a.b} xi_b xi_a`, a formal group-like factor
//! `E^k = exp(k x3)`, and graded left derivatives.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::grading::Degree;
use crate::rational::{self, int, Rational};

/// Graded variables in their canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X1,
    X2,
    X3,
    Theta1,
    Theta2,
    Psi(u32),
    Z(u32),
    /// Symmetric: stored with `n <= m`.
    Y(u32, u32),
    /// Antisymmetric: stored with `n < m`.
    W(u32, u32),
    Sigma(u32, u32),
}

impl Var {
    pub fn degree(self) -> Degree {
        match self {
            Var::X1 | Var::X2 | Var::X3 | Var::Y(..) | Var::W(..) => Degree::D00,
            Var::Psi(_) => Degree::D01,
            Var::Theta1 | Var::Theta2 | Var::Sigma(..) => Degree::D10,
            Var::Z(_) => Degree::D11,
        }
    }

    pub fn is_nilpotent(self) -> bool {
        self.degree().is_nilpotent()
    }

    /// `y_{nm}` in canonical form.
    pub fn y(n: u32, m: u32) -> Var {
        Var::Y(n.min(m), n.max(m))
    }

    /// `w_{nm}` as `(sign, canonical variable)`; `None` when `n == m`.
    pub fn w(n: u32, m: u32) -> Option<(i8, Var)> {
        match n.cmp(&m) {
            std::cmp::Ordering::Less => Some((1, Var::W(n, m))),
            std::cmp::Ordering::Greater => Some((-1, Var::W(m, n))),
            std::cmp::Ordering::Equal => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X1 => write!(f, "x1"),
            Var::X2 => write!(f, "x2"),
            Var::X3 => write!(f, "x3"),
            Var::Theta1 => write!(f, "theta1"),
            Var::Theta2 => write!(f, "theta2"),
            Var::Psi(n) => write!(f, "psi_{n}"),
            Var::Z(n) => write!(f, "z_{n}"),
            Var::Y(n, m) => write!(f, "y_{{{n},{m}}}"),
            Var::W(n, m) => write!(f, "w_{{{n},{m}}}"),
            Var::Sigma(n, m) => write!(f, "sigma_{{{n},{m}}}"),
        }
    }
}

impl FromStr for Var {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("unknown variable '{s}'");
        let pair = |body: &str| -> Result<(u32, u32), String> {
            let inner = body.strip_prefix('{').and_then(|b| b.strip_suffix('}')).ok_or_else(bad)?;
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
        };
        match s {
            "x1" => return Ok(Var::X1),
            "x2" => return Ok(Var::X2),
            "x3" => return Ok(Var::X3),
            "theta1" => return Ok(Var::Theta1),
            "theta2" => return Ok(Var::Theta2),
            _ => {}
        }
        let (head, body) = s.split_once('_').ok_or_else(bad)?;
        match head {
            "psi" => Ok(Var::Psi(body.parse().map_err(|_| bad())?)),
            "z" => Ok(Var::Z(body.parse().map_err(|_| bad())?)),
            "y" => pair(body).map(|(a, b)| Var::y(a, b)),
            "w" => match pair(body)? {
                (a, b) if a < b => Ok(Var::W(a, b)),
                _ => Err(format!("'{s}' is not canonical (w_{{n,m}} needs n < m)")),
            },
            "sigma" => pair(body).map(|(a, b)| Var::Sigma(a, b)),
            _ => Err(bad()),
        }
    }
}

/// `(-1)^{e1 e2 (a.b)}`: sign for moving `v^e2` past `u^e1`.
fn swap_sign(u: Var, e1: u32, v: Var, e2: u32) -> i8 {
    if u.degree().dot(v.degree()) == 1 && (e1 * e2) % 2 == 1 {
        -1
    } else {
        1
    }
}

/// A canonically ordered product of variables times `E^weight`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    factors: Vec<(Var, u32)>,
    weight: Rational,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { factors: vec![], weight: Rational::zero() }
    }

    pub fn var(v: Var) -> Self {
        Monomial { factors: vec![(v, 1)], weight: Rational::zero() }
    }

    pub fn exp(k: Rational) -> Self {
        Monomial { factors: vec![], weight: k }
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.factors
    }

    pub fn weight(&self) -> &Rational {
        &self.weight
    }

    pub fn degree(&self) -> Degree {
        self.factors.iter().fold(Degree::D00, |d, (v, e)| if e % 2 == 1 { d + v.degree() } else { d })
    }

    pub fn total_power(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    /// Product with sign, or `None` if a nilpotent variable is squared.
    pub fn mul(&self, other: &Monomial) -> Option<(i8, Monomial)> {
        let mut sign = 1i8;
        // Each factor of `other` moves left past the factors of `self` that
        // come after it in canonical order.
        for &(v, e2) in &other.factors {
            for &(u, e1) in self.factors.iter().rev() {
                if u <= v {
                    break;
                }
                sign *= swap_sign(u, e1, v, e2);
            }
        }
        let mut merged: Vec<(Var, u32)> = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() || j < other.factors.len() {
            let next = match (self.factors.get(i), other.factors.get(j)) {
                (Some(a), Some(b)) if a.0 == b.0 => {
                    i += 1;
                    j += 1;
                    if a.0.is_nilpotent() {
                        return None;
                    }
                    (a.0, a.1 + b.1)
                }
                (Some(a), Some(b)) if a.0 < b.0 => {
                    i += 1;
                    *a
                }
                (Some(_), Some(b)) => {
                    j += 1;
                    *b
                }
                (Some(a), None) => {
                    i += 1;
                    *a
                }
                (None, Some(b)) => {
                    j += 1;
                    *b
                }
                (None, None) => unreachable!(),
            };
            merged.push(next);
        }
        Some((sign, Monomial { factors: merged, weight: &self.weight + &other.weight }))
    }

    /// Left derivative with respect to a (canonical) variable: move one copy
    /// to the front, then strip it; the exponent is the multiplicity.
    pub fn derive(&self, v: Var) -> Vec<(Rational, Monomial)> {
        let mut out = vec![];
        if let Some(pos) = self.factors.iter().position(|(u, _)| *u == v) {
            let mut sign = 1i8;
            for &(u, e) in &self.factors[..pos] {
                sign *= swap_sign(u, e, v, 1);
            }
            let e = self.factors[pos].1;
            let mut rest = self.clone();
            if e == 1 {
                rest.factors.remove(pos);
            } else {
                rest.factors[pos].1 -= 1;
            }
            out.push((int(sign as i64 * e as i64), rest));
        }
        if v == Var::X3 && !self.weight.is_zero() {
            out.push((self.weight.clone(), self.clone()));
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        if !self.weight.is_zero() {
            parts.push(format!("E^{}", rational::to_compact(&self.weight)));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Graded polynomial with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl GradedPoly {
    pub fn zero() -> Self {
        GradedPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        GradedPoly::term(Monomial::one(), c)
    }

    pub fn one() -> Self {
        GradedPoly::constant(Rational::one())
    }

    pub fn var(v: Var) -> Self {
        GradedPoly::term(Monomial::var(v), Rational::one())
    }

    pub fn exp(k: Rational) -> Self {
        GradedPoly::term(Monomial::exp(k), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = GradedPoly::zero();
        p.add_term(m, c);
        p
    }

    /// Product of the given variables in the order written.
    pub fn product(vars: &[Var]) -> Self {
        vars.iter().fold(GradedPoly::one(), |acc, v| acc.mul(&GradedPoly::var(*v)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &GradedPoly, c: &Rational) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn plus(&self, other: &GradedPoly) -> GradedPoly {
        let mut p = self.clone();
        p.add_scaled(other, &Rational::one());
        p
    }

    pub fn sub(&self, other: &GradedPoly) -> GradedPoly {
        let mut p = self.clone();
        p.add_scaled(other, &-Rational::one());
        p
    }

    pub fn scaled(&self, c: &Rational) -> GradedPoly {
        let mut p = GradedPoly::zero();
        p.add_scaled(self, c);
        p
    }

    pub fn mul(&self, other: &GradedPoly) -> GradedPoly {
        let mut out = GradedPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((s, m)) = m1.mul(m2) {
                    out.add_term(m, c1 * c2 * int(s as i64));
                }
            }
        }
        out
    }

    pub fn derive(&self, v: Var) -> GradedPoly {
        let mut out = GradedPoly::zero();
        for (m, c) in &self.terms {
            for (k, dm) in m.derive(v) {
                out.add_term(dm, c * k);
            }
        }
        out
    }

    /// Multiplies each monomial of degree `b` by `(-1)^{a.b}`.
    pub fn twisted(&self, a: Degree) -> GradedPoly {
        let mut out = GradedPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * int(a.sign(m.degree()) as i64));
        }
        out
    }

    /// The common degree of all monomials, if homogeneous.
    pub fn degree(&self) -> Option<Degree> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn variables(&self) -> impl Iterator<Item = Var> + '_ {
        self.terms.keys().flat_map(|m| m.factors.iter().map(|(v, _)| *v))
    }
}

/// `p * q` with the graded sign rule.
pub fn gp_multiply(p: &GradedPoly, q: &GradedPoly) -> GradedPoly {
    p.mul(q)
}

/// Graded left derivative `d/dv p`.
pub fn gp_derive(v: Var, p: &GradedPoly) -> GradedPoly {
    p.derive(v)
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            let sep = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let body = m.to_string();
            if body == "1" {
                write!(f, "{sep}{}", rational::to_compact(&mag))?;
            } else if mag.is_one() {
                write!(f, "{sep}{body}")?;
            } else {
                write!(f, "{sep}{}*{body}", rational::to_compact(&mag))?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(vars: &[Var]) -> GradedPoly {
        GradedPoly::product(vars)
    }

    #[test]
    fn sign_rule() {
        let (a, b) = (p(&[Var::Psi(0), Var::Psi(1)]), p(&[Var::Psi(1), Var::Psi(0)]));
        assert_eq!(b, a.scaled(&int(-1)));
        assert_eq!(p(&[Var::Z(0), Var::Theta1]), p(&[Var::Theta1, Var::Z(0)]).scaled(&int(-1)));
        assert_eq!(p(&[Var::Psi(0), Var::Theta1]), p(&[Var::Theta1, Var::Psi(0)]));
        assert!(p(&[Var::Theta1, Var::Theta1]).is_zero());
        assert!(!p(&[Var::Z(0), Var::Z(0)]).is_zero());
    }

    #[test]
    fn printed_derivative_examples() {
        let f = p(&[Var::X2, Var::Psi(1), Var::Psi(2)]);
        assert_eq!(f.derive(Var::Psi(2)), p(&[Var::X2, Var::Psi(1)]).scaled(&int(-1)));
        let f = p(&[Var::Psi(1), Var::Theta1, Var::Z(3)]);
        assert_eq!(f.derive(Var::Theta1), p(&[Var::Psi(1), Var::Z(3)]));
        let f = p(&[Var::X2, Var::Psi(3), Var::Z(1), Var::Z(1)]);
        assert_eq!(f.derive(Var::Z(1)), p(&[Var::X2, Var::Psi(3), Var::Z(1)]).scaled(&int(-2)));
    }

    #[test]
    fn exponential_weight() {
        let f = GradedPoly::var(Var::X3).mul(&GradedPoly::exp(rational::frac(1, 2)));
        let d = f.derive(Var::X3);
        let want = GradedPoly::exp(rational::frac(1, 2)).plus(&f.scaled(&rational::frac(1, 2)));
        assert_eq!(d, want);
        assert!(GradedPoly::one().derive(Var::X1).is_zero());
    }

    #[test]
    fn variable_names() {
        for v in [Var::X1, Var::Theta2, Var::Psi(3), Var::y(2, 1), Var::W(0, 2), Var::Sigma(2, 0)] {
            assert_eq!(v.to_string().parse::<Var>(), Ok(v));
        }
        assert_eq!("y_{2,1}".parse::<Var>(), Ok(Var::Y(1, 2)));
        assert!("w_{2,1}".parse::<Var>().is_err());
    }
}
