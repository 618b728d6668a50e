use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::generator::Gen;
use crate::grading::Degree;
use crate::rational::Rational;

/// Sparse vector over basis positions, sorted by position.
pub type IndexVec = Vec<(usize, Rational)>;

/// A finite-dimensional color superalgebra given by a structure-constant table.
///
/// The table normally holds one orientation per unordered pair (the one with
/// the smaller basis position on the left); the other orientation is recovered
/// with the sign rule. Entries stored in both orientations are kept verbatim
/// so that [`crate::verify::check_antisymmetry`] can inspect them.
#[derive(Clone, Debug)]
pub struct ColorAlgebra {
    name: String,
    two_ell: u32,
    central: bool,
    basis: Vec<Gen>,
    degrees: Vec<Degree>,
    index: HashMap<Gen, usize>,
    table: BTreeMap<(Gen, Gen), AlgebraElement>,
    dense: Vec<IndexVec>,
}

impl PartialEq for ColorAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.two_ell == other.two_ell
            && self.central == other.central
            && self.basis == other.basis
            && self.degrees == other.degrees
            && self.dense == other.dense
    }
}

impl ColorAlgebra {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn two_ell(&self) -> u32 {
        self.two_ell
    }

    pub fn central(&self) -> bool {
        self.central
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Gen] {
        &self.basis
    }

    pub fn degrees(&self) -> &[Degree] {
        &self.degrees
    }

    pub fn contains(&self, g: Gen) -> bool {
        self.index.contains_key(&g)
    }

    pub fn position(&self, g: Gen) -> Option<usize> {
        self.index.get(&g).copied()
    }

    pub fn degree(&self, g: Gen) -> Option<Degree> {
        self.position(g).map(|i| self.degrees[i])
    }

    /// Degree of a homogeneous element; `None` for zero or mixed elements.
    pub fn degree_of(&self, x: &AlgebraElement) -> Option<Degree> {
        let mut deg = None;
        for g in x.generators() {
            let d = self.degree(g)?;
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        deg
    }

    /// Raw table as stored, including non-canonical orientations.
    pub fn raw_table(&self) -> &BTreeMap<(Gen, Gen), AlgebraElement> {
        &self.table
    }

    /// Nonzero structure constants in canonical orientation, in basis order.
    pub fn entries(&self) -> Vec<(Gen, Gen, AlgebraElement)> {
        let n = self.dim();
        let mut out = vec![];
        for i in 0..n {
            for j in i..n {
                let v = self.dense_entry(i, j);
                if !v.is_empty() {
                    out.push((self.basis[i], self.basis[j], self.to_element(v)));
                }
            }
        }
        out
    }

    pub fn dense_entry(&self, i: usize, j: usize) -> &IndexVec {
        &self.dense[i * self.dim() + j]
    }

    pub fn to_element(&self, v: &IndexVec) -> AlgebraElement {
        v.iter().map(|(k, c)| (self.basis[*k], c.clone())).collect()
    }

    pub fn to_index_vec(&self, x: &AlgebraElement) -> Result<IndexVec> {
        let mut v: IndexVec = x
            .iter()
            .map(|(g, c)| self.position(*g).map(|i| (i, c.clone())).ok_or(Error::UnknownGenerator(*g)))
            .collect::<Result<_>>()?;
        v.sort_by_key(|(i, _)| *i);
        Ok(v)
    }

    /// Bracket of two basis generators.
    pub fn bracket_gens(&self, x: Gen, y: Gen) -> Result<AlgebraElement> {
        let i = self.position(x).ok_or(Error::UnknownGenerator(x))?;
        let j = self.position(y).ok_or(Error::UnknownGenerator(y))?;
        Ok(self.to_element(self.dense_entry(i, j)))
    }

    /// Bilinear extension of the table.
    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        let xv = self.to_index_vec(x)?;
        let yv = self.to_index_vec(y)?;
        Ok(self.to_element(&self.bracket_index(&xv, &yv)))
    }

    pub fn bracket_index(&self, x: &IndexVec, y: &IndexVec) -> IndexVec {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                let ab = a * b;
                for (k, c) in self.dense_entry(*i, *j) {
                    let slot = acc.entry(*k).or_insert_with(Rational::zero);
                    *slot += &ab * c;
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// A builder preloaded with this algebra, for derived or perturbed copies.
    pub fn to_builder(&self) -> AlgebraBuilder {
        AlgebraBuilder {
            name: self.name.clone(),
            two_ell: self.two_ell,
            central: self.central,
            basis: self.basis.iter().copied().zip(self.degrees.iter().copied()).collect(),
            table: self.table.clone(),
        }
    }

    fn lookup(&self, x: Gen, y: Gen) -> AlgebraElement {
        if let Some(v) = self.table.get(&(x, y)) {
            return v.clone();
        }
        if let Some(v) = self.table.get(&(y, x)) {
            let s = self.degree(x).unwrap().sign(self.degree(y).unwrap());
            return v.scaled(&Rational::from_integer((-s as i64).into()));
        }
        AlgebraElement::zero()
    }
}

#[derive(Clone, Debug)]
pub struct AlgebraBuilder {
    name: String,
    two_ell: u32,
    central: bool,
    basis: Vec<(Gen, Degree)>,
    table: BTreeMap<(Gen, Gen), AlgebraElement>,
}

impl AlgebraBuilder {
    pub fn new(name: impl Into<String>, two_ell: u32, central: bool) -> Self {
        AlgebraBuilder { name: name.into(), two_ell, central, basis: vec![], table: BTreeMap::new() }
    }

    pub fn generator(&mut self, g: Gen, d: Degree) -> &mut Self {
        self.basis.push((g, d));
        self
    }

    fn position(&self, g: Gen) -> Option<usize> {
        self.basis.iter().position(|(b, _)| *b == g)
    }

    fn degree(&self, g: Gen) -> Option<Degree> {
        self.basis.iter().find(|(b, _)| *b == g).map(|(_, d)| *d)
    }

    /// Records `[x, y] = value`, moving it to canonical orientation. A second
    /// assignment to the same unordered pair must agree with the first.
    pub fn set(&mut self, x: Gen, y: Gen, value: AlgebraElement) -> Result<&mut Self> {
        let px = self.position(x).ok_or(Error::UnknownGenerator(x))?;
        let py = self.position(y).ok_or(Error::UnknownGenerator(y))?;
        let (key, value) = if px <= py {
            ((x, y), value)
        } else {
            let s = self.degree(x).unwrap().sign(self.degree(y).unwrap());
            ((y, x), value.scaled(&Rational::from_integer((-s as i64).into())))
        };
        match self.table.get(&key) {
            Some(existing) if *existing != value => {
                return Err(Error::InconsistentEntry {
                    left: key.0,
                    right: key.1,
                    existing: existing.to_string(),
                    new: value.to_string(),
                })
            }
            _ => {}
        }
        if value.is_zero() {
            self.table.remove(&key);
        } else {
            self.table.insert(key, value);
        }
        Ok(self)
    }

    /// Adds `value` to the current canonical entry for `[x, y]`.
    pub fn accumulate(&mut self, x: Gen, y: Gen, value: AlgebraElement) -> Result<&mut Self> {
        let px = self.position(x).ok_or(Error::UnknownGenerator(x))?;
        let py = self.position(y).ok_or(Error::UnknownGenerator(y))?;
        let (key, value) = if px <= py {
            ((x, y), value)
        } else {
            let s = self.degree(x).unwrap().sign(self.degree(y).unwrap());
            ((y, x), value.scaled(&Rational::from_integer((-s as i64).into())))
        };
        let total = self.table.get(&key).cloned().unwrap_or_default().plus(&value);
        if total.is_zero() {
            self.table.remove(&key);
        } else {
            self.table.insert(key, total);
        }
        Ok(self)
    }

    /// Stores `[x, y] = value` exactly as given, without canonicalization or
    /// consistency checks.
    pub fn set_raw(&mut self, x: Gen, y: Gen, value: AlgebraElement) -> &mut Self {
        self.table.insert((x, y), value);
        self
    }

    pub fn build(&self) -> Result<ColorAlgebra> {
        let basis: Vec<Gen> = self.basis.iter().map(|(g, _)| *g).collect();
        let degrees: Vec<Degree> = self.basis.iter().map(|(_, d)| *d).collect();
        let index: HashMap<Gen, usize> = basis.iter().enumerate().map(|(i, g)| (*g, i)).collect();
        for ((x, y), v) in &self.table {
            for g in [*x, *y].into_iter().chain(v.generators()) {
                if !index.contains_key(&g) {
                    return Err(Error::UnknownGenerator(g));
                }
            }
        }
        let mut alg = ColorAlgebra {
            name: self.name.clone(),
            two_ell: self.two_ell,
            central: self.central,
            basis,
            degrees,
            index,
            table: self.table.clone(),
            dense: vec![],
        };
        let n = alg.dim();
        let mut dense = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let e = alg.lookup(alg.basis[i], alg.basis[j]);
                dense.push(alg.to_index_vec(&e)?);
            }
        }
        alg.dense = dense;
        Ok(alg)
    }
}
