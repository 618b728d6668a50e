use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::generator::Gen;
use crate::rational::{self, Rational};

/// Exact linear combination of basis generators. Zero coefficients are never
/// stored, so the empty map is the zero element.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct AlgebraElement {
    terms: BTreeMap<Gen, Rational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn gen(g: Gen) -> Self {
        Self::term(g, Rational::one())
    }

    pub fn term(g: Gen, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(g, c);
        e
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

    pub fn add_term(&mut self, g: Gen, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(g).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn add_scaled(&mut self, other: &AlgebraElement, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (g, v) in &other.terms {
            self.add_term(*g, v * c);
        }
    }

    pub fn scaled(&self, c: &Rational) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> AlgebraElement {
        self.scaled(&-Rational::one())
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn plus(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn coeff(&self, g: Gen) -> Rational {
        self.terms.get(&g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Gen, &Rational)> {
        self.terms.iter()
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> + '_ {
        self.terms.keys().copied()
    }
}

impl FromIterator<(Gen, Rational)> for AlgebraElement {
    fn from_iter<T: IntoIterator<Item = (Gen, Rational)>>(iter: T) -> Self {
        let mut e = AlgebraElement::zero();
        for (g, c) in iter {
            e.add_term(g, c);
        }
        e
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if abs.is_one() {
                write!(f, "{g}")?;
            } else {
                write!(f, "{}*{g}", rational::to_compact(&abs))?;
            }
        }
        Ok(())
    }
}
