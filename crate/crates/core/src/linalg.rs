//! Exact span membership over an arbitrary monomial index.
//!
//! The spanning set is brought to echelon form by fraction-free elimination
//! (integer rows, cross-multiplication, content removal); targets are then
//! reduced against the echelon rows with exact rationals.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Rational;

type IntRow<K> = BTreeMap<K, BigInt>;

#[derive(Clone, Debug)]
struct EchelonRow<K> {
    pivot: K,
    row: IntRow<K>,
    /// Integer combination of the original spanning vectors equal to `row`.
    combo: Vec<BigInt>,
}

/// Outcome of reducing a target against the span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction<K: Ord> {
    pub coefficients: Vec<Rational>,
    pub residual: BTreeMap<K, Rational>,
}

impl<K: Ord> Reduction<K> {
    pub fn is_exact(&self) -> bool {
        self.residual.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct SpanSolver<K: Ord + Clone> {
    size: usize,
    rows: BTreeMap<K, EchelonRow<K>>,
}

/// Clears denominators; returns the integer row and the scale applied.
fn to_integer_row<K: Ord + Clone>(v: &BTreeMap<K, Rational>) -> (IntRow<K>, BigInt) {
    let lcm = v.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let row = v
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k.clone(), c.numer() * (&lcm / c.denom())))
        .collect();
    (row, lcm)
}

fn remove_content<K>(row: &mut IntRow<K>, combo: &mut [BigInt]) {
    let g = row.values().chain(combo.iter()).fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g > BigInt::one() {
        for c in row.values_mut() {
            *c /= &g;
        }
        for c in combo.iter_mut() {
            *c /= &g;
        }
    }
}

impl<K: Ord + Clone> SpanSolver<K> {
    /// Returns the position of the first vector that depends on its
    /// predecessors as the error.
    pub fn new(span: &[BTreeMap<K, Rational>]) -> Result<Self, usize> {
        let size = span.len();
        let mut rows: BTreeMap<K, EchelonRow<K>> = BTreeMap::new();
        for (idx, v) in span.iter().enumerate() {
            let (mut row, scale) = to_integer_row(v);
            let mut combo = vec![BigInt::zero(); size];
            combo[idx] = scale;
            loop {
                let Some(lead) = row.keys().next().cloned() else {
                    return Err(idx);
                };
                let Some(e) = rows.get(&lead) else {
                    remove_content(&mut row, &mut combo);
                    rows.insert(lead.clone(), EchelonRow { pivot: lead, row, combo });
                    break;
                };
                let ep = &e.row[&e.pivot];
                let rp = row[&lead].clone();
                let mut next: IntRow<K> = BTreeMap::new();
                for (k, c) in &row {
                    next.insert(k.clone(), c * ep);
                }
                for (k, c) in &e.row {
                    let slot = next.entry(k.clone()).or_insert_with(BigInt::zero);
                    *slot -= &rp * c;
                }
                next.retain(|_, c| !c.is_zero());
                for (a, b) in combo.iter_mut().zip(&e.combo) {
                    *a = &*a * ep - &rp * b;
                }
                row = next;
                remove_content(&mut row, &mut combo);
            }
        }
        Ok(SpanSolver { size, rows })
    }

    pub fn reduce(&self, target: &BTreeMap<K, Rational>) -> Reduction<K> {
        let mut t: BTreeMap<K, Rational> =
            target.iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k.clone(), c.clone())).collect();
        let mut coeffs = vec![Rational::zero(); self.size];
        let mut residual = BTreeMap::new();
        while let Some((lead, c)) = t.pop_first() {
            let Some(e) = self.rows.get(&lead) else {
                residual.insert(lead, c);
                continue;
            };
            let f = &c / Rational::from_integer(e.row[&e.pivot].clone());
            for (k, v) in e.row.iter().skip(1) {
                let slot = t.entry(k.clone()).or_insert_with(Rational::zero);
                *slot -= &f * Rational::from_integer(v.clone());
                if slot.is_zero() {
                    t.remove(k);
                }
            }
            for (a, b) in coeffs.iter_mut().zip(&e.combo) {
                if !b.is_zero() {
                    *a += &f * Rational::from_integer(b.clone());
                }
            }
        }
        Reduction { coefficients: coeffs, residual }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn v(entries: &[(u32, Rational)]) -> BTreeMap<u32, Rational> {
        entries.iter().cloned().collect()
    }

    #[test]
    fn solves_triangular_and_dense_systems() {
        let span = vec![
            v(&[(0, int(2)), (1, int(1))]),
            v(&[(1, frac(1, 3)), (2, int(1))]),
            v(&[(0, int(1)), (2, int(5))]),
        ];
        let s = SpanSolver::new(&span).unwrap();
        assert_eq!(s.rank(), 3);
        // target = 1*s0 - 2*s1 + 3*s2
        let target = v(&[(0, int(5)), (1, int(1) - frac(2, 3)), (2, int(13))]);
        let r = s.reduce(&target);
        assert!(r.is_exact());
        assert_eq!(r.coefficients, vec![int(1), int(-2), int(3)]);
    }

    #[test]
    fn residual_outside_span() {
        let span = vec![v(&[(0, int(1)), (1, int(1))])];
        let s = SpanSolver::new(&span).unwrap();
        let r = s.reduce(&v(&[(0, int(1))]));
        assert!(!r.is_exact());
        assert_eq!(r.residual, v(&[(1, int(-1))]));
    }

    #[test]
    fn dependent_span_is_reported() {
        let span = vec![v(&[(0, int(1))]), v(&[(1, int(1))]), v(&[(0, int(2)), (1, int(-3))])];
        assert_eq!(SpanSolver::new(&span).unwrap_err(), 2);
    }
}
