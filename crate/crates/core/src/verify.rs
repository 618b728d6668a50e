use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{ColorAlgebra, IndexVec};
use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::generator::Gen;
use crate::grading::Degree;
use crate::par::{self, Exec};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub generators: Vec<Gen>,
    pub detail: String,
}

impl Violation {
    pub fn new(generators: Vec<Gen>, detail: impl Into<String>) -> Self {
        Violation { generators, detail: detail.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({}): {}", names.join(", "), self.detail)
    }
}

impl Serialize for Gen {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Outcome of an exhaustive check: how many cases were examined and every
/// case that failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>) -> Self {
        VerificationReport { check: check.into(), checked: 0, violations: vec![] }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn absorb(&mut self, other: VerificationReport) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: checked {}, violations {}", self.check, self.checked, self.violations.len())
    }
}

/// Graded antisymmetry of the stored table: every pair stored in both
/// orientations must satisfy `[X_a, X_b] = -(-1)^{a.b} [X_b, X_a]`, and a
/// diagonal entry with `a.a = 0` must vanish.
pub fn check_antisymmetry(alg: &ColorAlgebra) -> VerificationReport {
    let mut report = VerificationReport::new("graded antisymmetry");
    let n = alg.dim();
    report.checked = n * (n + 1) / 2;
    let table = alg.raw_table();
    for ((x, y), v) in table {
        let (dx, dy) = (alg.degree(*x).unwrap(), alg.degree(*y).unwrap());
        if x == y {
            if dx.sign(dy) == 1 && !v.is_zero() {
                report.violations.push(Violation::new(vec![*x, *y], format!("[{x},{x}] = {v}, expected 0")));
            }
            continue;
        }
        if alg.position(*x) > alg.position(*y) {
            continue;
        }
        if let Some(w) = table.get(&(*y, *x)) {
            let expected = w.scaled(&Rational::from_integer((-(dx.sign(dy)) as i64).into()));
            if *v != expected {
                report.violations.push(Violation::new(
                    vec![*x, *y],
                    format!("[{x},{y}] = {v} but -(-1)^(a.b)[{y},{x}] = {expected}"),
                ));
            }
        }
    }
    report
}

/// Every structure constant lands in degree `a + b`.
pub fn check_grading(alg: &ColorAlgebra) -> VerificationReport {
    let mut report = VerificationReport::new("grading closure");
    for (x, y, v) in alg.entries() {
        report.checked += 1;
        let target = alg.degree(x).unwrap() + alg.degree(y).unwrap();
        for g in v.generators() {
            let d = alg.degree(g).unwrap();
            if d != target {
                report.violations.push(Violation::new(
                    vec![x, y],
                    format!("[{x},{y}] = {v} contains {g} of degree {d}, expected {target}"),
                ));
                break;
            }
        }
    }
    report
}

fn accumulate(acc: &mut BTreeMap<usize, Rational>, v: &IndexVec, scale: &Rational) {
    for (k, c) in v {
        let slot = acc.entry(*k).or_insert_with(Rational::zero);
        *slot += scale * c;
    }
}

/// `(-1)^{a.c}[X,[Y,Z]] + (-1)^{b.a}[Y,[Z,X]] + (-1)^{c.b}[Z,[X,Y]]` for basis
/// positions `i, j, k`.
pub fn jacobi_residual(alg: &ColorAlgebra, i: usize, j: usize, k: usize) -> IndexVec {
    let deg = alg.degrees();
    let (a, b, c) = (deg[i], deg[j], deg[k]);
    let mut acc = BTreeMap::new();
    let terms = [(i, j, k, a.sign(c)), (j, k, i, b.sign(a)), (k, i, j, c.sign(b))];
    for (x, y, z, s) in terms {
        for (w, coeff) in alg.dense_entry(y, z) {
            let scale = coeff * Rational::from_integer((s as i64).into());
            accumulate(&mut acc, alg.dense_entry(x, *w), &scale);
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Exhaustive graded Jacobi scan over unordered triples with repetition.
pub fn check_jacobi(alg: &ColorAlgebra) -> VerificationReport {
    check_jacobi_with(alg, Exec::default())
}

pub fn check_jacobi_with(alg: &ColorAlgebra, exec: Exec) -> VerificationReport {
    let n = alg.dim();
    let rows = par::map_range(exec, n, |i| {
        let mut found = vec![];
        let mut count = 0usize;
        for j in i..n {
            for k in j..n {
                count += 1;
                let r = jacobi_residual(alg, i, j, k);
                if !r.is_empty() {
                    let b = alg.basis();
                    found.push(Violation::new(
                        vec![b[i], b[j], b[k]],
                        format!("residual {}", alg.to_element(&r)),
                    ));
                }
            }
        }
        (count, found)
    });
    let mut report = VerificationReport::new("graded Jacobi identity");
    for (count, found) in rows {
        report.checked += count;
        report.violations.extend(found);
    }
    report
}

/// Closure of the span of the basis elements whose degree is in `degrees`.
pub fn check_span_closure(alg: &ColorAlgebra, members: &[Gen], label: &str) -> VerificationReport {
    let mut report = VerificationReport::new(label);
    for (p, x) in members.iter().enumerate() {
        for y in &members[p..] {
            report.checked += 1;
            let v = alg.bracket_gens(*x, *y).expect("members belong to the basis");
            let outside = v.generators().find(|g| !members.contains(g));
            if let Some(g) = outside {
                report.violations.push(Violation::new(vec![*x, *y], format!("[{x},{y}] = {v} leaves the span via {g}")));
            }
        }
    }
    report
}

/// The spans of degrees {(0,0),(0,1)} and {(0,0),(1,0)} are sub-superalgebras.
pub fn check_sub_superalgebras(alg: &ColorAlgebra) -> VerificationReport {
    let mut report = VerificationReport::new("sub-superalgebra closure");
    for other in [Degree::D01, Degree::D10] {
        let members: Vec<Gen> = alg
            .basis()
            .iter()
            .zip(alg.degrees())
            .filter(|(_, d)| **d == Degree::D00 || **d == other)
            .map(|(g, _)| *g)
            .collect();
        report.absorb(check_span_closure(alg, &members, "sub-superalgebra closure"));
    }
    report
}

/// Basis split by the eigenvalue of `ad(grader)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdDecomposition {
    pub plus: Vec<(Gen, Rational)>,
    pub zero: Vec<(Gen, Rational)>,
    pub minus: Vec<(Gen, Rational)>,
}

impl AdDecomposition {
    pub fn eigenvalue(&self, g: Gen) -> Option<&Rational> {
        self.plus.iter().chain(&self.zero).chain(&self.minus).find(|(h, _)| *h == g).map(|(_, l)| l)
    }

    pub fn names(list: &[(Gen, Rational)]) -> Vec<Gen> {
        list.iter().map(|(g, _)| *g).collect()
    }
}

pub fn ad_eigen_decompose(alg: &ColorAlgebra, grader: Gen) -> Result<AdDecomposition> {
    let mut out = AdDecomposition { plus: vec![], zero: vec![], minus: vec![] };
    for &g in alg.basis() {
        let image = alg.bracket_gens(grader, g)?;
        let lambda = image.coeff(g);
        let rest = image.sub(&AlgebraElement::term(g, lambda.clone()));
        if !rest.is_zero() {
            return Err(Error::NotDiagonal { grader, generator: g, image: image.to_string() });
        }
        let slot = if rational::is_negative(&lambda) {
            &mut out.minus
        } else if lambda.is_zero() {
            &mut out.zero
        } else {
            &mut out.plus
        };
        slot.push((g, lambda));
    }
    Ok(out)
}

/// `[G^0, G^0] in G^0` and `[G^0, G^pm] in G^pm`, by brute force.
pub fn check_triangular_brackets(alg: &ColorAlgebra, dec: &AdDecomposition) -> VerificationReport {
    let mut report = VerificationReport::new("triangular bracket inclusions");
    let zero = AdDecomposition::names(&dec.zero);
    for (label, sector) in [("G^0", &dec.zero), ("G^+", &dec.plus), ("G^-", &dec.minus)] {
        let members = AdDecomposition::names(sector);
        for x in &zero {
            for y in &members {
                report.checked += 1;
                let v = alg.bracket_gens(*x, *y).expect("basis members");
                let outside = v.generators().find(|g| !members.contains(g));
                if let Some(g) = outside {
                    report.violations.push(Violation::new(
                        vec![*x, *y],
                        format!("[{x},{y}] = {v} has {g} outside {label}"),
                    ));
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraBuilder;
    use crate::rational::int;

    #[test]
    fn empty_table_passes_everything() {
        let mut b = AlgebraBuilder::new("abelian", 1, false);
        b.generator(Gen::H, Degree::D00).generator(Gen::P(0), Degree::D01);
        let a = b.build().unwrap();
        assert!(check_antisymmetry(&a).passed());
        assert!(check_jacobi(&a).passed());
        assert_eq!(check_jacobi(&a).checked, 4);
    }

    #[test]
    fn self_bracket_of_commuting_degree_must_vanish() {
        let mut b = AlgebraBuilder::new("bad", 1, false);
        b.generator(Gen::H, Degree::D00).generator(Gen::D, Degree::D00);
        b.set_raw(Gen::D, Gen::D, AlgebraElement::term(Gen::H, int(1)));
        let a = b.build().unwrap();
        assert_eq!(check_antisymmetry(&a).violations.len(), 1);
    }
}
