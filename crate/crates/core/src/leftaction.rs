//! The left action `Y f(g) = d/dtau f(exp(-tau Y) g)` computed from the
//! structure constants alone, in the parametrization
//! `g = e^{x1 H} e^{theta1 Q} e^{psi.P} e^{z.X} e^{theta2 S} e^{x2 K} e^{x3 D}
//!      e^{y.Pc} e^{w.Xc} e^{sigma.Lam}`.
//!
//! Writing `Omega_i = g^{-1} d_i g`, the coefficients `a_i` of the vector
//! field solve `sum_i a_i Omega_i = -g^{-1} Y g`. Everything is evaluated in
//! the adjoint action with graded polynomial coefficients.

use std::collections::BTreeMap;

use num_traits::One;

use crate::algebra::ColorAlgebra;
use crate::colored::colored_degree;
use crate::error::{Error, Result};
use crate::generator::Gen;
use crate::grassmann::{GradedPoly, Var};
use crate::par::{self, Exec};
use crate::rational::{int, Rational};
use crate::vf::DiffOperator;

/// An algebra element with polynomial coefficients written on the left.
type PolyElem = BTreeMap<Gen, GradedPoly>;

/// Safety cap on the length of an `ad` series.
const MAX_SERIES: usize = 64;

fn add_to(x: &mut PolyElem, g: Gen, p: &GradedPoly) {
    if p.is_zero() {
        return;
    }
    let slot = x.entry(g).or_default();
    *slot = slot.plus(p);
    if slot.is_zero() {
        x.remove(&g);
    }
}

fn scale(x: &PolyElem, c: &Rational) -> PolyElem {
    x.iter().map(|(g, p)| (*g, p.scaled(c))).filter(|(_, p)| !p.is_zero()).collect()
}

fn plus(mut x: PolyElem, y: &PolyElem) -> PolyElem {
    for (g, p) in y {
        add_to(&mut x, *g, p);
    }
    x
}

/// One exponential factor of the parametrization.
#[derive(Clone, Debug)]
enum Factor {
    /// `exp(sum p_i T_i)`, with `deg p_i = deg T_i`.
    Sum(Vec<(Var, Gen)>),
    /// `exp(x3 D)`, acting diagonally.
    Dilation,
}

fn factors(two_ell: u32) -> Vec<Factor> {
    let e = two_ell;
    let mut pc = vec![];
    let mut xc = vec![];
    let mut lam = vec![];
    for n in 0..=e {
        for m in n..=e {
            pc.push((Var::Y(n, m), Gen::Pc(n, m)));
        }
        for m in 0..e {
            lam.push((Var::Sigma(n, m), Gen::Lam(n, m)));
        }
    }
    for n in 0..e {
        for m in n + 1..e {
            xc.push((Var::W(n, m), Gen::Xc(n, m)));
        }
    }
    vec![
        Factor::Sum(vec![(Var::X1, Gen::H)]),
        Factor::Sum(vec![(Var::Theta1, Gen::Q)]),
        Factor::Sum((0..=e).map(|n| (Var::Psi(n), Gen::P(n))).collect()),
        Factor::Sum((0..e).map(|n| (Var::Z(n), Gen::X(n))).collect()),
        Factor::Sum(vec![(Var::Theta2, Gen::S)]),
        Factor::Sum(vec![(Var::X2, Gen::K)]),
        Factor::Dilation,
        Factor::Sum(pc),
        Factor::Sum(xc),
        Factor::Sum(lam),
    ]
}

struct Adjoint<'a> {
    alg: &'a ColorAlgebra,
    table: BTreeMap<(Gen, Gen), Vec<(Gen, Rational)>>,
    weight: BTreeMap<Gen, Rational>,
}

impl<'a> Adjoint<'a> {
    fn new(alg: &'a ColorAlgebra) -> Result<Self> {
        let mut table = BTreeMap::new();
        let mut weight = BTreeMap::new();
        for &x in alg.basis() {
            for &y in alg.basis() {
                let b = alg.bracket_gens(x, y)?;
                if !b.is_zero() {
                    table.insert((x, y), b.iter().map(|(g, c)| (*g, c.clone())).collect());
                }
            }
            let dx = alg.bracket_gens(Gen::D, x)?;
            let lambda = dx.coeff(x);
            if dx.sub(&crate::element::AlgebraElement::term(x, lambda.clone())).len() != 0 {
                return Err(Error::NotDiagonal { grader: Gen::D, generator: x, image: dx.to_string() });
            }
            weight.insert(x, lambda);
        }
        Ok(Adjoint { alg, table, weight })
    }

    /// `ad_{sum p_i T_i}` applied to `x`: `[pT, dU] = (-1)^{T.d} p d [T, U]`.
    fn ad(&self, terms: &[(Var, Gen)], x: &PolyElem) -> PolyElem {
        let mut out = PolyElem::new();
        for &(p, t) in terms {
            let pv = GradedPoly::var(p);
            for (u, d) in x {
                if let Some(image) = self.table.get(&(t, *u)) {
                    let coeff = pv.mul(&d.twisted(colored_degree(t)));
                    for (v, c) in image {
                        add_to(&mut out, *v, &coeff.scaled(c));
                    }
                }
            }
        }
        out
    }

    /// `sum_k coeff(k) ad^k x`, stopping once the powers vanish.
    fn series(&self, terms: &[(Var, Gen)], x: &PolyElem, coeff: impl Fn(usize) -> Rational) -> Result<PolyElem> {
        let mut out = scale(x, &coeff(0));
        let mut power = x.clone();
        for k in 1..=MAX_SERIES {
            power = self.ad(terms, &power);
            if power.is_empty() {
                return Ok(out);
            }
            out = plus(out, &scale(&power, &coeff(k)));
        }
        Err(Error::NotInSpan { residual: "ad series did not terminate".into() })
    }

    /// `Ad(f^{-1}) x` for one factor `f`.
    fn conj_inverse(&self, f: &Factor, x: &PolyElem) -> Result<PolyElem> {
        match f {
            Factor::Dilation => Ok(x
                .iter()
                .map(|(g, p)| (*g, p.mul(&GradedPoly::exp(-self.weight[g].clone()))))
                .collect()),
            Factor::Sum(terms) => self.series(terms, x, |k| {
                let s = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
                s / factorial(k)
            }),
        }
    }

    /// `f^{-1} d_p f` for the parameter `p` of factor `f`.
    fn maurer_cartan(&self, f: &Factor, g: Gen) -> Result<PolyElem> {
        let unit: PolyElem = [(g, GradedPoly::one())].into_iter().collect();
        match f {
            Factor::Dilation => Ok(unit),
            Factor::Sum(terms) => self.series(terms, &unit, |k| {
                let s = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
                s / factorial(k + 1)
            }),
        }
    }
}

fn factorial(k: usize) -> Rational {
    (1..=k as i64).fold(Rational::one(), |acc, i| acc * int(i))
}

/// Inverse of `c E^w (1 + n)` with `n` nilpotent; `None` if not of that form.
fn unit_inverse(p: &GradedPoly) -> Option<GradedPoly> {
    let mut body = p.terms().iter().filter(|(m, _)| m.factors().iter().all(|(v, _)| !v.is_nilpotent()));
    let (m, c) = body.next()?;
    if body.next().is_some() || !m.factors().is_empty() {
        return None;
    }
    let b_inv = GradedPoly::exp(-m.weight().clone()).scaled(&(Rational::one() / c));
    let n = b_inv.mul(p).sub(&GradedPoly::one());
    let mut inv = GradedPoly::one();
    let mut power = GradedPoly::one();
    loop {
        power = power.mul(&n).scaled(&-Rational::one());
        if power.is_zero() {
            break;
        }
        inv = inv.plus(&power);
    }
    Some(inv.mul(&b_inv))
}

/// Vector fields of the left action for every basis element of `alg`.
pub fn left_action_generators(alg: &ColorAlgebra, exec: Exec) -> Result<BTreeMap<Gen, DiffOperator>> {
    let adj = Adjoint::new(alg)?;
    let fs = factors(alg.two_ell());
    let params: Vec<(usize, Var, Gen)> = fs
        .iter()
        .enumerate()
        .flat_map(|(j, f)| match f {
            Factor::Sum(t) => t.iter().map(|&(v, g)| (j, v, g)).collect::<Vec<_>>(),
            Factor::Dilation => vec![(j, Var::X3, Gen::D)],
        })
        .collect();
    for &(_, _, g) in &params {
        if !alg.contains(g) {
            return Err(Error::UnknownGenerator(g));
        }
    }
    if params.len() != alg.dim() {
        return Err(Error::BasisMismatch(format!("{} parameters for {} generators", params.len(), alg.dim())));
    }

    // Rows of Omega, one per parameter.
    let rows: Vec<Result<PolyElem>> = par::map(exec, &params, |&(j, _, g)| {
        let mut x = adj.maurer_cartan(&fs[j], g)?;
        for f in &fs[j + 1..] {
            x = adj.conj_inverse(f, &x)?;
        }
        Ok(x)
    });
    let mut omega = rows.into_iter().collect::<Result<Vec<_>>>()?;

    // Right-hand sides, one per generator.
    let rhs: Vec<Result<PolyElem>> = par::map(exec, adj.alg.basis(), |&y| {
        let mut x: PolyElem = [(y, GradedPoly::constant(-Rational::one()))].into_iter().collect();
        for f in &fs {
            x = adj.conj_inverse(f, &x)?;
        }
        Ok(x)
    });
    let mut rhs = rhs.into_iter().collect::<Result<Vec<_>>>()?;

    // Column reduction of `a . Omega = R`; the same column operations are
    // applied to every right-hand side.
    let mut pivots: Vec<Gen> = Vec::with_capacity(params.len());
    for i in 0..params.len() {
        let preferred = params[i].2;
        let candidates =
            std::iter::once(preferred).chain(omega[i].keys().copied().filter(|g| *g != preferred)).collect::<Vec<_>>();
        let (col, inv) = candidates
            .into_iter()
            .filter(|g| !pivots.contains(g))
            .find_map(|g| omega[i].get(&g).and_then(unit_inverse).map(|inv| (g, inv)))
            .ok_or_else(|| Error::NotInSpan { residual: format!("no invertible pivot for parameter {}", params[i].1) })?;
        let scale_col = |x: &mut PolyElem| {
            if let Some(p) = x.get(&col).cloned() {
                x.insert(col, p.mul(&inv));
            }
        };
        omega.iter_mut().for_each(scale_col);
        rhs.iter_mut().for_each(scale_col);
        let factors: Vec<(Gen, GradedPoly)> =
            omega[i].iter().filter(|(g, _)| **g != col).map(|(g, p)| (*g, p.clone())).collect();
        let eliminate = |x: &mut PolyElem| {
            if let Some(pc) = x.get(&col).cloned() {
                for (g, f) in &factors {
                    add_to(x, *g, &pc.mul(f).scaled(&-Rational::one()));
                }
            }
        };
        omega.iter_mut().for_each(eliminate);
        rhs.iter_mut().for_each(eliminate);
        pivots.push(col);
    }

    let mut out = BTreeMap::new();
    for (k, &y) in adj.alg.basis().iter().enumerate() {
        let mut op = DiffOperator::zero();
        for (i, &(_, v, _)) in params.iter().enumerate() {
            if let Some(a) = rhs[k].get(&pivots[i]) {
                op.add(&DiffOperator::term(a.clone(), v));
            }
        }
        out.insert(y, op);
    }
    Ok(out)
}
