//! Exact numbers `a + b*sqrt(t)` for a fixed squarefree integer `t`, which may
//! be negative (then `sqrt(t)` is imaginary and conjugation flips `b`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    pub a: Rational,
    pub b: Rational,
    pub t: i64,
}

/// Writes `n = k^2 * t` with `t` squarefree (sign kept in `t`).
pub fn squarefree_part(n: i64) -> (i64, i64) {
    assert!(n != 0, "squarefree part of zero");
    let sign = n.signum();
    let mut m = n.abs();
    let (mut k, mut t) = (1i64, 1i64);
    let mut p = 2;
    while p * p <= m {
        while m % (p * p) == 0 {
            m /= p * p;
            k *= p;
        }
        if m % p == 0 {
            m /= p;
            t *= p;
        }
        p += 1;
    }
    (k, sign * t * m)
}

impl Surd {
    pub fn rational(a: Rational) -> Self {
        Surd { a, b: Rational::zero(), t: 1 }
    }

    pub fn zero() -> Self {
        Surd::rational(Rational::zero())
    }

    pub fn one() -> Self {
        Surd::rational(Rational::one())
    }

    /// Exact square root of a nonzero rational `p/q`.
    pub fn sqrt(x: &Rational) -> Self {
        if x.is_zero() {
            return Surd::zero();
        }
        let prod = (x.numer() * x.denom()).to_i64().expect("radicand fits in i64");
        let (k, t) = squarefree_part(prod);
        let coeff = Rational::new(BigInt::from(k), x.denom().clone());
        if t == 1 {
            Surd::rational(coeff)
        } else {
            Surd { a: Rational::zero(), b: coeff, t }.normalize()
        }
    }

    fn normalize(mut self) -> Self {
        if self.b.is_zero() {
            self.t = 1;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    pub fn conj(&self) -> Self {
        if self.t < 0 {
            Surd { a: self.a.clone(), b: -self.b.clone(), t: self.t }
        } else {
            self.clone()
        }
    }

    fn radicand(&self, other: &Surd) -> i64 {
        match (self.b.is_zero(), other.b.is_zero()) {
            (true, _) => other.t,
            (_, true) => self.t,
            _ => {
                assert_eq!(self.t, other.t, "mixing different square roots");
                self.t
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Surd { a: &self.a * c, b: &self.b * c, t: self.t }.normalize()
    }

    /// `p/q` or `p/q+r/s*sqrt(t)`.
    pub fn to_canonical(&self) -> String {
        if self.b.is_zero() {
            return rational::to_canonical(&self.a);
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        format!("{}{sign}{}*sqrt({})", rational::to_canonical(&self.a), rational::to_canonical(&self.b.abs()), self.t)
    }

    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        if let Some(body) = s.strip_suffix(')') {
            let (head, t) = body.rsplit_once("*sqrt(")?;
            let t: i64 = t.parse().ok()?;
            let split = head.char_indices().skip(1).filter(|(_, c)| *c == '+' || *c == '-').last()?.0;
            let a = rational::parse(&head[..split])?;
            let b = rational::parse(head[split..].trim_start_matches('+'))?;
            return Some(Surd { a, b, t }.normalize());
        }
        rational::parse(s).map(Surd::rational)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical())
    }
}

impl Add for &Surd {
    type Output = Surd;
    fn add(self, o: &Surd) -> Surd {
        let t = self.radicand(o);
        Surd { a: &self.a + &o.a, b: &self.b + &o.b, t }.normalize()
    }
}

impl Sub for &Surd {
    type Output = Surd;
    fn sub(self, o: &Surd) -> Surd {
        self + &(-o)
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd { a: -self.a.clone(), b: -self.b.clone(), t: self.t }
    }
}

impl Mul for &Surd {
    type Output = Surd;
    fn mul(self, o: &Surd) -> Surd {
        let t = self.radicand(o);
        let tr = Rational::from_integer(BigInt::from(t));
        Surd { a: &self.a * &o.a + &self.b * &o.b * tr, b: &self.a * &o.b + &self.b * &o.a, t }.normalize()
    }
}

impl From<Rational> for Surd {
    fn from(a: Rational) -> Self {
        Surd::rational(a)
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn square_roots() {
        let h = Surd::sqrt(&frac(1, 2));
        assert_eq!(h.to_canonical(), "0/1+1/2*sqrt(2)");
        assert_eq!((&h * &h).as_rational(), Some(&frac(1, 2)));
        let i = Surd::sqrt(&frac(-1, 2));
        assert_eq!((&i * &i).as_rational(), Some(&frac(-1, 2)));
        assert_eq!((&i * &i.conj()).as_rational(), Some(&frac(1, 2)));
        assert_eq!(Surd::sqrt(&int(9)).as_rational(), Some(&int(3)));
        assert_eq!(squarefree_part(-12), (2, -3));
    }

    #[test]
    fn round_trip() {
        for s in [Surd::sqrt(&frac(3, 8)), Surd::rational(frac(-7, 3)), &Surd::one() - &Surd::sqrt(&int(-5))] {
            assert_eq!(Surd::parse(&s.to_canonical()), Some(s.clone()));
        }
        assert_eq!(Surd::parse("1/2-3/1*sqrt(2)").unwrap().b, int(-3));
    }
}
