//! Boson-fermion realization of the mass-extended algebra on a truncated Fock
//! space, with exact matrix entries.
//!
//! Boson states are kept unnormalized (`a^dag |n> = |n+1>`, `a |n> = n |n-1>`,
//! `<n|n> = n!`) so every entry stays rational; the Hermitian adjoint is taken
//! with respect to that diagonal Gram matrix, which is the conjugate transpose
//! in the orthonormal basis.
//!
//! The matrices live on a space padded by [`PAD`] extra boson levels per mode.
//! States whose occupations are all below the cutoff form the interior: any
//! product of two quadratic operators applied to an interior state is computed
//! without touching the truncation edge, so comparisons there are exact.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use serde_json::json;

use crate::algebra::ColorAlgebra;
use crate::colored::{colored_basis, colored_degree};
use crate::element::AlgebraElement;
use crate::enveloping::{Envelope, PbwElement};
use crate::error::{Error, Result};
use crate::generator::Gen;
use crate::grading::Degree;
use crate::par::{self, Exec};
use crate::rational::{self, frac, int, Rational};
use crate::scga::{build_scga, CentralData};
use crate::surd::Surd;
use crate::verify::{VerificationReport, Violation};

/// Extra boson levels kept beyond the cutoff.
pub const PAD: usize = 4;
pub const MIN_CUTOFF: usize = 2;

#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix {
    dim: usize,
    rows: Vec<BTreeMap<usize, Surd>>,
}

impl SparseMatrix {
    pub fn zero(dim: usize) -> Self {
        SparseMatrix { dim, rows: vec![BTreeMap::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = SparseMatrix::zero(dim);
        for i in 0..dim {
            m.rows[i].insert(i, Surd::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Surd {
        self.rows[i].get(&j).cloned().unwrap_or_else(Surd::zero)
    }

    pub fn add_entry(&mut self, i: usize, j: usize, v: &Surd) {
        if v.is_zero() {
            return;
        }
        let slot = self.rows[i].entry(j).or_insert_with(Surd::zero);
        *slot = &*slot + v;
        if slot.is_zero() {
            self.rows[i].remove(&j);
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn add_scaled(&mut self, other: &SparseMatrix, c: &Surd) {
        for (i, row) in other.rows.iter().enumerate() {
            for (j, v) in row {
                self.add_entry(i, *j, &(v * c));
            }
        }
    }

    pub fn scaled(&self, c: &Surd) -> SparseMatrix {
        let mut m = SparseMatrix::zero(self.dim);
        m.add_scaled(self, c);
        m
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut m = self.clone();
        m.add_scaled(other, &Surd::rational(int(-1)));
        m
    }

    fn row_times(&self, row: &BTreeMap<usize, Surd>) -> BTreeMap<usize, Surd> {
        let mut out: BTreeMap<usize, Surd> = BTreeMap::new();
        for (k, a) in row {
            for (j, b) in &self.rows[*k] {
                let slot = out.entry(*j).or_insert_with(Surd::zero);
                *slot = &*slot + &(a * b);
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        SparseMatrix { dim: self.dim, rows: self.rows.iter().map(|r| other.row_times(r)).collect() }
    }

    /// Rows of `self * other` for the given row indices only.
    fn mul_rows(&self, other: &SparseMatrix, rows: &[usize]) -> BTreeMap<usize, BTreeMap<usize, Surd>> {
        rows.iter().map(|&i| (i, other.row_times(&self.rows[i]))).collect()
    }

    /// `A B - (-1)^{a.b} B A`.
    pub fn colored_bracket(&self, other: &SparseMatrix, a: Degree, b: Degree) -> SparseMatrix {
        let mut m = self.mul(other);
        m.add_scaled(&other.mul(self), &Surd::rational(int(-(a.sign(b) as i64))));
        m
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Surd)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// The member of each pair with positive `ad D` eigenvalue annihilates.
    Standard,
    /// The opposite assignment.
    Reversed,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FockBasisState {
    pub boson_occupations: Vec<u32>,
    pub fermion_bits: Vec<bool>,
}

impl FockBasisState {
    /// Z2 x Z2 degree: fermion parity f and boson-number parity b give (f, b + f).
    pub fn degree(&self) -> Degree {
        let b = self.boson_occupations.iter().sum::<u32>() % 2;
        let f = self.fermion_bits.iter().filter(|x| **x).count() as u32 % 2;
        Degree::new(f as u8, ((b + f) % 2) as u8)
    }

    /// `<s|s>` in the unnormalized boson basis.
    pub fn norm(&self) -> Rational {
        let mut n = BigInt::one();
        for &k in &self.boson_occupations {
            n *= rational::factorial(k);
        }
        Rational::from_integer(n)
    }
}

#[derive(Clone, Debug)]
pub struct FockRep {
    two_ell: u32,
    cutoff: usize,
    orientation: Orientation,
    states: Vec<FockBasisState>,
    interior: Vec<usize>,
    matrices: BTreeMap<Gen, SparseMatrix>,
}

/// Coefficients `c` and factors `(x, y)` of the quadratic expressions giving
/// `H, D, K, Q, S` in terms of `P_n` and `X_n`.
pub fn quadratic_terms(two_ell: u32, g: Gen) -> Vec<(Rational, Gen, Gen)> {
    let cd = CentralData::new(two_ell);
    let e = two_ell;
    let l = rational::ell(two_ell);
    let inv_i = |n: u32| Rational::one() / cd.i_n(n);
    let inv_a = |n: u32| Rational::one() / cd.alpha_n(n);
    let mut v = vec![];
    match g {
        Gen::H => {
            for n in 1..=e {
                v.push((frac(-1, 2) * int(n as i64) * inv_i(n), Gen::P(e - n), Gen::P(n - 1)));
            }
            for n in 1..e {
                v.push((frac(-1, 2) * int(n as i64) * inv_a(n), Gen::X(e - 1 - n), Gen::X(n - 1)));
            }
        }
        Gen::D => {
            for n in 0..=e {
                v.push((frac(1, 2) * (int(n as i64) - &l) * inv_i(n), Gen::P(e - n), Gen::P(n)));
            }
            for n in 0..e {
                v.push((frac(1, 2) * (int(n as i64) + frac(1, 2) - &l) * inv_a(n), Gen::X(e - 1 - n), Gen::X(n)));
            }
        }
        Gen::K => {
            for n in 1..=e {
                v.push((frac(1, 2) * int(n as i64) * inv_i(n), Gen::P(e + 1 - n), Gen::P(n)));
            }
            for n in 1..e {
                v.push((frac(1, 2) * int(n as i64) * inv_a(n), Gen::X(e - n), Gen::X(n)));
            }
        }
        Gen::Q => {
            for n in 1..=e {
                v.push((-int(n as i64) * inv_i(n), Gen::P(e - n), Gen::X(n - 1)));
            }
        }
        Gen::S => {
            for n in 1..=e {
                v.push((-int(n as i64) * inv_i(n), Gen::P(e + 1 - n), Gen::X(n - 1)));
            }
        }
        _ => {}
    }
    v
}

/// `sum 1/I_n P_{2l-n} P_n` and `sum 1/alpha_n X_{2l-1-n} X_n`.
pub fn identity_terms(two_ell: u32) -> (Vec<(Rational, Gen, Gen)>, Vec<(Rational, Gen, Gen)>) {
    let cd = CentralData::new(two_ell);
    let e = two_ell;
    let bos = (0..=e).map(|n| (Rational::one() / cd.i_n(n), Gen::P(e - n), Gen::P(n))).collect();
    let fer = (0..e).map(|n| (Rational::one() / cd.alpha_n(n), Gen::X(e - 1 - n), Gen::X(n))).collect();
    (bos, fer)
}

/// The quadratic expressions as elements of the enveloping algebra.
pub fn quadratic_in_envelope(env: &Envelope, terms: &[(Rational, Gen, Gen)]) -> PbwElement {
    let mut out = PbwElement::zero();
    for (c, x, y) in terms {
        out.add_scaled(&env.normal_order(&[*x, *y]), c);
    }
    out
}

fn require_odd(two_ell: u32) -> Result<()> {
    if two_ell % 2 == 0 {
        return Err(Error::OddEllRequired { two_ell });
    }
    Ok(())
}

pub fn build_fock_rep(two_ell: u32, cutoff: usize) -> Result<FockRep> {
    build_fock_rep_with(two_ell, cutoff, Orientation::Standard)
}

pub fn build_fock_rep_with(two_ell: u32, cutoff: usize, orientation: Orientation) -> Result<FockRep> {
    require_odd(two_ell)?;
    if cutoff < MIN_CUTOFF {
        return Err(Error::CutoffTooSmall { cutoff, minimum: MIN_CUTOFF });
    }
    let e = two_ell;
    let n_bos = e.div_ceil(2) as usize;
    let n_fer = e.div_ceil(2) as usize;
    let levels = cutoff + PAD;

    let mut states = vec![];
    let total = levels.pow(n_bos as u32) << n_fer;
    for idx in 0..total {
        let mut r = idx;
        let fermion_bits = (0..n_fer).map(|_| {
            let bit = r & 1 == 1;
            r >>= 1;
            bit
        });
        let fermion_bits: Vec<bool> = fermion_bits.collect();
        let boson_occupations = (0..n_bos)
            .map(|_| {
                let k = (r % levels) as u32;
                r /= levels;
                k
            })
            .collect();
        states.push(FockBasisState { boson_occupations, fermion_bits });
    }
    let index_of = |s: &FockBasisState| -> usize {
        let mut idx = 0usize;
        for &k in s.boson_occupations.iter().rev() {
            idx = idx * levels + k as usize;
        }
        let mut bits = 0usize;
        for (j, &b) in s.fermion_bits.iter().enumerate() {
            if b {
                bits |= 1 << j;
            }
        }
        (idx << n_fer) | bits
    };
    let interior: Vec<usize> = (0..states.len())
        .filter(|&i| states[i].boson_occupations.iter().all(|&k| (k as usize) < cutoff))
        .collect();
    if interior.is_empty() {
        return Err(Error::TruncationTooSmall { cutoff });
    }
    let dim = states.len();

    let bos_lower = |k: usize| {
        let mut m = SparseMatrix::zero(dim);
        for (j, s) in states.iter().enumerate() {
            let occ = s.boson_occupations[k];
            if occ > 0 {
                let mut t = s.clone();
                t.boson_occupations[k] -= 1;
                m.add_entry(index_of(&t), j, &Surd::rational(int(occ as i64)));
            }
        }
        m
    };
    let bos_raise = |k: usize| {
        let mut m = SparseMatrix::zero(dim);
        for (j, s) in states.iter().enumerate() {
            if (s.boson_occupations[k] as usize) + 1 < levels {
                let mut t = s.clone();
                t.boson_occupations[k] += 1;
                m.add_entry(index_of(&t), j, &Surd::one());
            }
        }
        m
    };
    let fer = |k: usize, create: bool| {
        let mut m = SparseMatrix::zero(dim);
        for (j, s) in states.iter().enumerate() {
            if s.fermion_bits[k] != create {
                let before = s.fermion_bits[..k].iter().filter(|b| **b).count();
                let mut t = s.clone();
                t.fermion_bits[k] = create;
                let sign = if before % 2 == 0 { 1 } else { -1 };
                m.add_entry(index_of(&t), j, &Surd::rational(int(sign)));
            }
        }
        m
    };

    let cd = CentralData::new(e);
    let mut matrices = BTreeMap::new();
    let r = |c: Rational| Surd::rational(c);
    for n in 0..=e {
        if 2 * n > e {
            continue;
        }
        let k = n as usize;
        let (a, ad) = (bos_lower(k), bos_raise(k));
        let i_n = cd.i_n(n).clone();
        let (low, high) = match orientation {
            Orientation::Standard => (a, ad.scaled(&r(i_n))),
            Orientation::Reversed => (ad, a.scaled(&r(-i_n))),
        };
        matrices.insert(Gen::P(n), low);
        matrices.insert(Gen::P(e - n), high);
    }
    let mid = (e - 1) / 2;
    for n in 0..e {
        if n > mid {
            continue;
        }
        let k = n as usize;
        let al = cd.alpha_n(n).clone();
        if n == mid {
            let mut c = fer(k, false);
            c.add_scaled(&fer(k, true), &Surd::one());
            let s = Surd::sqrt(&(al / int(2)));
            matrices.insert(Gen::X(n), c.scaled(&s));
        } else {
            let (f, fd) = (fer(k, false), fer(k, true));
            let (low, high) = match orientation {
                Orientation::Standard => (f, fd.scaled(&r(al))),
                Orientation::Reversed => (fd, f.scaled(&r(al))),
            };
            matrices.insert(Gen::X(n), low);
            matrices.insert(Gen::X(e - 1 - n), high);
        }
    }
    matrices.insert(Gen::I, SparseMatrix::identity(dim));
    for g in [Gen::H, Gen::D, Gen::K, Gen::Q, Gen::S] {
        let m = quadratic_matrix(&matrices, dim, &quadratic_terms(e, g));
        matrices.insert(g, m);
    }
    for g in colored_basis(e) {
        let (x, y) = match g {
            Gen::Pc(n, m) => (Gen::P(n), Gen::P(m)),
            Gen::Xc(n, m) => (Gen::X(n), Gen::X(m)),
            Gen::Lam(n, m) => (Gen::P(n), Gen::X(m)),
            _ => continue,
        };
        let m = matrices[&x].colored_bracket(&matrices[&y], colored_degree(x), colored_degree(y));
        matrices.insert(g, m);
    }
    Ok(FockRep { two_ell, cutoff, orientation, states, interior, matrices })
}

fn quadratic_matrix(ms: &BTreeMap<Gen, SparseMatrix>, dim: usize, terms: &[(Rational, Gen, Gen)]) -> SparseMatrix {
    let mut out = SparseMatrix::zero(dim);
    for (c, x, y) in terms {
        out.add_scaled(&ms[x].mul(&ms[y]), &Surd::rational(c.clone()));
    }
    out
}

/// A mismatch between two matrices at an interior entry.
#[derive(Clone, Debug)]
pub struct EntryMismatch {
    pub row: usize,
    pub col: usize,
    pub left: Surd,
    pub right: Surd,
}

impl FockRep {
    pub fn two_ell(&self) -> u32 {
        self.two_ell
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn dim(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[FockBasisState] {
        &self.states
    }

    pub fn interior(&self) -> &[usize] {
        &self.interior
    }

    pub fn matrix(&self, g: Gen) -> Result<&SparseMatrix> {
        self.matrices.get(&g).ok_or(Error::UnknownGenerator(g))
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> + '_ {
        self.matrices.keys().copied()
    }

    /// Matrix of a linear combination of generators.
    pub fn represent(&self, x: &AlgebraElement) -> Result<SparseMatrix> {
        let mut m = SparseMatrix::zero(self.dim());
        for (g, c) in x.iter() {
            m.add_scaled(self.matrix(*g)?, &Surd::rational(c.clone()));
        }
        Ok(m)
    }

    fn is_interior(&self, i: usize) -> bool {
        self.interior.binary_search(&i).is_ok()
    }

    /// First interior entry where `a` and `b` differ.
    pub fn compare_on_interior(&self, a: &SparseMatrix, b: &SparseMatrix) -> Option<EntryMismatch> {
        for &i in &self.interior {
            let cols = a.rows[i].keys().chain(b.rows[i].keys()).filter(|j| self.is_interior(**j));
            for &j in cols {
                let (x, y) = (a.get(i, j), b.get(i, j));
                if x != y {
                    return Some(EntryMismatch { row: i, col: j, left: x, right: y });
                }
            }
        }
        None
    }

    /// Interior block of `A B - (-1)^{a.b} B A` compared with `target`.
    fn bracket_mismatch(
        &self,
        a: &SparseMatrix,
        b: &SparseMatrix,
        sign: i8,
        target: &SparseMatrix,
    ) -> Option<EntryMismatch> {
        let ab = a.mul_rows(b, &self.interior);
        let ba = b.mul_rows(a, &self.interior);
        let s = Surd::rational(int(sign as i64));
        for &i in &self.interior {
            let mut row = ab[&i].clone();
            for (j, v) in &ba[&i] {
                let slot = row.entry(*j).or_insert_with(Surd::zero);
                *slot = &*slot - &(v * &s);
            }
            let cols: Vec<usize> = row.keys().chain(target.rows[i].keys()).copied().collect();
            for j in cols {
                if !self.is_interior(j) {
                    continue;
                }
                let got = row.get(&j).cloned().unwrap_or_else(Surd::zero);
                let want = target.get(i, j);
                if got != want {
                    return Some(EntryMismatch { row: i, col: j, left: got, right: want });
                }
            }
        }
        None
    }

    /// Hermitian adjoint with respect to the Fock inner product.
    pub fn adjoint(&self, a: &SparseMatrix) -> SparseMatrix {
        let mut out = SparseMatrix::zero(self.dim());
        for (i, j, v) in a.triplets() {
            let w = self.states[i].norm() / self.states[j].norm();
            out.add_entry(j, i, &v.conj().scale(&w));
        }
        out
    }

    /// Graded adjoint for an operator of degree `deg`:
    /// `(A^s)_{ij} = (-1)^{deg . deg(j)} (A^dag)_{ij}`.
    pub fn superadjoint(&self, a: &SparseMatrix, deg: Degree) -> SparseMatrix {
        let mut out = self.adjoint(a);
        for row in out.rows.iter_mut() {
            for (j, v) in row.iter_mut() {
                if deg.sign(self.states[*j].degree()) < 0 {
                    *v = -&*v;
                }
            }
        }
        out
    }

    /// Interior block of a generator as JSON sparse triplets.
    pub fn matrices_json(&self) -> serde_json::Value {
        let pos: BTreeMap<usize, usize> = self.interior.iter().enumerate().map(|(k, i)| (*i, k)).collect();
        let mut obj = serde_json::Map::new();
        for (g, m) in &self.matrices {
            let entries: Vec<serde_json::Value> = m
                .triplets()
                .filter_map(|(i, j, v)| {
                    let (r, c) = (pos.get(&i)?, pos.get(&j)?);
                    Some(json!({"row": r, "col": c, "value": v.to_canonical()}))
                })
                .collect();
            obj.insert(g.to_string(), serde_json::Value::Array(entries));
        }
        json!({
            "two_ell": self.two_ell,
            "cutoff": self.cutoff,
            "orientation": self.orientation,
            "dimension": self.interior.len(),
            "matrices": obj,
        })
    }
}

/// Every bracket of `alg` (the extended superalgebra or the extended colored
/// algebra) evaluated on matrices and compared on the interior.
pub fn verify_relations(rep: &FockRep, alg: &ColorAlgebra) -> Result<VerificationReport> {
    verify_relations_with(rep, alg, Exec::default())
}

pub fn verify_relations_with(rep: &FockRep, alg: &ColorAlgebra, exec: Exec) -> Result<VerificationReport> {
    if alg.two_ell() != rep.two_ell {
        return Err(Error::BasisMismatch(format!(
            "representation has two_ell = {}, algebra has two_ell = {}",
            rep.two_ell,
            alg.two_ell()
        )));
    }
    let basis = alg.basis();
    for &g in basis {
        rep.matrix(g)?;
    }
    let pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|i| (i..basis.len()).map(move |j| (i, j))).collect();
    let results = par::map(exec, &pairs, |&(i, j)| -> Result<Option<Violation>> {
        let (x, y) = (basis[i], basis[j]);
        let sign = alg.degrees()[i].sign(alg.degrees()[j]);
        let target = rep.represent(&alg.bracket_gens(x, y)?)?;
        Ok(rep.bracket_mismatch(&rep.matrices[&x], &rep.matrices[&y], sign, &target).map(|m| {
            Violation::new(vec![x, y], format!("entry ({}, {}): {} vs {}", m.row, m.col, m.left, m.right))
        }))
    });
    let mut report = VerificationReport::new(format!("Fock relations of {}", alg.name()));
    for r in results {
        report.checked += 1;
        if let Some(v) = r? {
            report.violations.push(v);
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub two_ell: u32,
    pub expected_boson: String,
    pub expected_fermion: String,
    pub symbolic_boson: Option<String>,
    pub symbolic_fermion: Option<String>,
    pub matrix_boson: Option<String>,
    pub matrix_fermion: Option<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        [&self.symbolic_boson, &self.matrix_boson].iter().all(|v| v.as_deref() == Some(&self.expected_boson))
            && [&self.symbolic_fermion, &self.matrix_fermion]
                .iter()
                .all(|v| v.as_deref() == Some(&self.expected_fermion))
    }
}

fn scalar_on_interior(rep: &FockRep, m: &SparseMatrix) -> Option<String> {
    let first = rep.interior[0];
    let c = m.get(first, first);
    let target = SparseMatrix::identity(rep.dim()).scaled(&c);
    rep.compare_on_interior(m, &target).is_none().then(|| c.to_canonical())
}

/// The two scalar identities, normal-ordered in the enveloping algebra of the
/// extended superalgebra and evaluated on Fock matrices.
pub fn verify_identities(two_ell: u32, cutoff: usize) -> Result<IdentityReport> {
    require_odd(two_ell)?;
    let l = rational::ell(two_ell);
    let env = Envelope::new(build_scga(two_ell, true)?);
    let (bos, fer) = identity_terms(two_ell);
    let rep = build_fock_rep(two_ell, cutoff)?;
    let canon = |x: Option<Rational>| x.map(|r| rational::to_canonical(&r));
    Ok(IdentityReport {
        two_ell,
        expected_boson: rational::to_canonical(&(-&l - frac(1, 2))),
        expected_fermion: rational::to_canonical(&l),
        symbolic_boson: canon(quadratic_in_envelope(&env, &bos).as_scalar()),
        symbolic_fermion: canon(quadratic_in_envelope(&env, &fer).as_scalar()),
        matrix_boson: scalar_on_interior(&rep, &quadratic_matrix(&rep.matrices, rep.dim(), &bos)),
        matrix_fermion: scalar_on_interior(&rep, &quadratic_matrix(&rep.matrices, rep.dim(), &fer)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mass_extension_on_matrices() {
        let rep = build_fock_rep(1, 6).unwrap();
        let (p0, p1, x0) = (rep.matrix(Gen::P(0)).unwrap(), rep.matrix(Gen::P(1)).unwrap(), rep.matrix(Gen::X(0)).unwrap());
        let comm = p0.mul(p1).sub(&p1.mul(p0));
        assert!(rep.compare_on_interior(&comm, &SparseMatrix::identity(rep.dim())).is_none());
        let sq = x0.mul(x0);
        let half = SparseMatrix::identity(rep.dim()).scaled(&Surd::rational(frac(1, 2)));
        assert!(rep.compare_on_interior(&sq, &half).is_none());
    }

    #[test]
    fn identities_smallest_case() {
        let r = verify_identities(1, 8).unwrap();
        assert_eq!(r.expected_boson, "-1/1");
        assert_eq!(r.expected_fermion, "1/2");
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn preconditions() {
        assert!(matches!(build_fock_rep(2, 8), Err(Error::OddEllRequired { two_ell: 2 })));
        assert!(matches!(build_fock_rep(1, 1), Err(Error::CutoffTooSmall { cutoff: 1, minimum: 2 })));
    }
}
