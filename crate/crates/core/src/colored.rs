//! The color superalgebras `G_l` and `G~_l`, built two ways: transcribed from
//! the printed sector relations, and derived by bracketing the composite
//! elements inside the enveloping algebra.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{AlgebraBuilder, ColorAlgebra};
use crate::element::AlgebraElement;
use crate::enveloping::{Envelope, PbwElement, SpanDecomposer};
use crate::error::{Error, Result};
use crate::generator::Gen;
use crate::grading::Degree;
use crate::par::{self, Exec};
use crate::rational::{self, frac, int, Rational};
use crate::scga::{build_scga, CentralData};
use crate::verify::{ad_eigen_decompose, AdDecomposition, VerificationReport, Violation};

/// Z2 x Z2 degree of each generator family.
pub fn colored_degree(g: Gen) -> Degree {
    match g {
        Gen::H | Gen::D | Gen::K | Gen::Pc(..) | Gen::Xc(..) | Gen::I => Degree::D00,
        Gen::P(_) => Degree::D01,
        Gen::Q | Gen::S | Gen::Lam(..) => Degree::D10,
        Gen::X(_) => Degree::D11,
    }
}

/// Basis of `G_l` in generator order.
pub fn colored_basis(two_ell: u32) -> Vec<Gen> {
    let n = two_ell;
    let mut v = vec![Gen::H, Gen::D, Gen::K];
    v.extend((0..=n).map(Gen::P));
    v.push(Gen::Q);
    v.push(Gen::S);
    v.extend((0..n).map(Gen::X));
    for a in 0..=n {
        for b in a..=n {
            v.push(Gen::Pc(a, b));
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            v.push(Gen::Xc(a, b));
        }
    }
    for a in 0..=n {
        for b in 0..n {
            v.push(Gen::Lam(a, b));
        }
    }
    v
}

/// `8 l (l + 1) + 7` evaluated exactly.
pub fn expected_dimension(two_ell: u32) -> Rational {
    let l = rational::ell(two_ell);
    int(8) * &l * (&l + int(1)) + int(7)
}

fn check_central(two_ell: u32, central: bool) -> Result<()> {
    if central && two_ell % 2 == 0 {
        return Err(Error::CentralExtensionUnavailable { two_ell });
    }
    Ok(())
}

fn name(central: bool, how: &str) -> String {
    format!("{}-{how}", if central { "colored-central" } else { "colored" })
}

fn new_builder(two_ell: u32, central: bool, how: &str) -> AlgebraBuilder {
    let mut b = AlgebraBuilder::new(name(central, how), two_ell, central);
    for g in colored_basis(two_ell) {
        b.generator(g, colored_degree(g));
    }
    b
}

/// Index-checked constructors; out-of-range indices give zero.
struct Idx {
    n: i64,
}

impl Idx {
    fn p(&self, a: i64, c: Rational) -> AlgebraElement {
        if (0..=self.n).contains(&a) {
            AlgebraElement::term(Gen::P(a as u32), c)
        } else {
            AlgebraElement::zero()
        }
    }

    fn x(&self, a: i64, c: Rational) -> AlgebraElement {
        if (0..self.n).contains(&a) {
            AlgebraElement::term(Gen::X(a as u32), c)
        } else {
            AlgebraElement::zero()
        }
    }

    fn pc(&self, a: i64, b: i64, c: Rational) -> AlgebraElement {
        if (0..=self.n).contains(&a) && (0..=self.n).contains(&b) {
            AlgebraElement::term(Gen::pc(a as u32, b as u32), c)
        } else {
            AlgebraElement::zero()
        }
    }

    fn xc(&self, a: i64, b: i64, c: Rational) -> AlgebraElement {
        if !((0..self.n).contains(&a) && (0..self.n).contains(&b)) {
            return AlgebraElement::zero();
        }
        match Gen::xc(a as u32, b as u32) {
            Some((s, g)) => AlgebraElement::term(g, c * int(s as i64)),
            None => AlgebraElement::zero(),
        }
    }

    fn lam(&self, a: i64, b: i64, c: Rational) -> AlgebraElement {
        if (0..=self.n).contains(&a) && (0..self.n).contains(&b) {
            AlgebraElement::term(Gen::Lam(a as u32, b as u32), c)
        } else {
            AlgebraElement::zero()
        }
    }
}

fn delta(a: i64, b: i64) -> Rational {
    if a == b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

fn sum(parts: impl IntoIterator<Item = AlgebraElement>) -> AlgebraElement {
    parts.into_iter().fold(AlgebraElement::zero(), |acc, p| acc.plus(&p))
}

/// `G_l` (or `G~_l` with `c = 1`) from the printed sector relations.
pub fn build_colored_explicit(two_ell: u32, central: bool) -> Result<ColorAlgebra> {
    check_central(two_ell, central)?;
    let mut b = new_builder(two_ell, central, "explicit");
    let n2 = two_ell as i64;
    let ix = Idx { n: n2 };
    let l = rational::ell(two_ell);
    let one = Rational::one;
    let half = || frac(1, 2);
    let i64r = |v: i64| int(v);

    let pcs: Vec<(i64, i64)> = (0..=n2).flat_map(|a| (a..=n2).map(move |c| (a, c))).collect();
    let xcs: Vec<(i64, i64)> = (0..n2).flat_map(|a| (a + 1..n2).map(move |c| (a, c))).collect();
    let lams: Vec<(i64, i64)> = (0..=n2).flat_map(|a| (0..n2).map(move |c| (a, c))).collect();
    let pgen = |a: i64, c: i64| Gen::Pc(a as u32, c as u32);
    let xgen = |a: i64, c: i64| Gen::Xc(a as u32, c as u32);
    let lgen = |a: i64, c: i64| Gen::Lam(a as u32, c as u32);

    // (0,0)-(0,0)
    b.accumulate(Gen::D, Gen::H, AlgebraElement::gen(Gen::H))?;
    b.accumulate(Gen::H, Gen::K, AlgebraElement::term(Gen::D, int(2)))?;
    b.accumulate(Gen::D, Gen::K, AlgebraElement::term(Gen::K, -one()))?;
    for &(n, m) in &pcs {
        let g = pgen(n, m);
        b.accumulate(Gen::H, g, sum([ix.pc(n - 1, m, i64r(n)), ix.pc(n, m - 1, i64r(m))]))?;
        b.accumulate(Gen::D, g, ix.pc(n, m, -(i64r(n + m) - int(2) * &l)))?;
        b.accumulate(
            Gen::K,
            g,
            sum([ix.pc(n + 1, m, -(i64r(n) - int(2) * &l)), ix.pc(n, m + 1, -(i64r(m) - int(2) * &l))]),
        )?;
    }
    for &(n, m) in &xcs {
        let g = xgen(n, m);
        b.accumulate(Gen::H, g, sum([ix.xc(n - 1, m, i64r(n)), ix.xc(n, m - 1, i64r(m))]))?;
        b.accumulate(Gen::D, g, ix.xc(n, m, -(i64r(n + m) - int(2) * &l + one())))?;
        b.accumulate(
            Gen::K,
            g,
            sum([
                ix.xc(n + 1, m, -(i64r(n) - int(2) * &l + one())),
                ix.xc(n, m + 1, -(i64r(m) - int(2) * &l + one())),
            ]),
        )?;
    }
    // (0,0)-(0,1)
    for n in 0..=n2 {
        let g = Gen::P(n as u32);
        b.accumulate(Gen::H, g, ix.p(n - 1, i64r(n)))?;
        b.accumulate(Gen::D, g, ix.p(n, -(i64r(n) - &l)))?;
        b.accumulate(Gen::K, g, ix.p(n + 1, -(i64r(n) - int(2) * &l)))?;
    }
    // (0,0)-(1,0)
    b.accumulate(Gen::H, Gen::S, AlgebraElement::gen(Gen::Q))?;
    b.accumulate(Gen::D, Gen::Q, AlgebraElement::term(Gen::Q, half()))?;
    b.accumulate(Gen::D, Gen::S, AlgebraElement::term(Gen::S, -half()))?;
    b.accumulate(Gen::K, Gen::Q, AlgebraElement::gen(Gen::S))?;
    for &(n, m) in &lams {
        let g = lgen(n, m);
        b.accumulate(Gen::H, g, sum([ix.lam(n - 1, m, i64r(n)), ix.lam(n, m - 1, i64r(m))]))?;
        b.accumulate(Gen::D, g, ix.lam(n, m, -(i64r(n + m) - int(2) * &l + half())))?;
        b.accumulate(
            Gen::K,
            g,
            sum([
                ix.lam(n + 1, m, -(i64r(n) - int(2) * &l)),
                ix.lam(n, m + 1, -(i64r(m) - int(2) * &l + one())),
            ]),
        )?;
    }
    for &(n, m) in &pcs {
        let g = pgen(n, m);
        b.accumulate(Gen::Q, g, sum([ix.lam(m, n - 1, i64r(n)), ix.lam(n, m - 1, i64r(m))]))?;
        b.accumulate(
            Gen::S,
            g,
            sum([ix.lam(n, m, i64r(m) - int(2) * &l), ix.lam(m, n, i64r(n) - int(2) * &l)]),
        )?;
    }
    for &(n, m) in &xcs {
        let g = xgen(n, m);
        b.accumulate(Gen::Q, g, sum([ix.lam(n, m, one()), ix.lam(m, n, -one())]))?;
        b.accumulate(Gen::S, g, sum([ix.lam(n + 1, m, one()), ix.lam(m + 1, n, -one())]))?;
    }
    // (0,0)-(1,1)
    for n in 0..n2 {
        let g = Gen::X(n as u32);
        b.accumulate(Gen::H, g, ix.x(n - 1, i64r(n)))?;
        b.accumulate(Gen::D, g, ix.x(n, -(i64r(n) - &l + half())))?;
        b.accumulate(Gen::K, g, ix.x(n + 1, -(i64r(n) - int(2) * &l + one())))?;
    }
    // (0,1)-(0,1), (0,1)-(1,0), (0,1)-(1,1)
    for n in 0..=n2 {
        for m in n..=n2 {
            b.accumulate(Gen::P(n as u32), Gen::P(m as u32), ix.pc(n, m, one()))?;
        }
        b.accumulate(Gen::P(n as u32), Gen::Q, ix.x(n - 1, -i64r(n)))?;
        b.accumulate(Gen::P(n as u32), Gen::S, ix.x(n, -(i64r(n) - int(2) * &l)))?;
        for m in 0..n2 {
            b.accumulate(Gen::P(n as u32), Gen::X(m as u32), ix.lam(n, m, one()))?;
        }
    }
    // (1,0)-(1,0)
    b.accumulate(Gen::Q, Gen::Q, AlgebraElement::term(Gen::H, int(2)))?;
    b.accumulate(Gen::Q, Gen::S, AlgebraElement::term(Gen::D, int(-2)))?;
    b.accumulate(Gen::S, Gen::S, AlgebraElement::term(Gen::K, int(-2)))?;
    for &(n, m) in &lams {
        let g = lgen(n, m);
        b.accumulate(Gen::Q, g, sum([ix.xc(n - 1, m, i64r(n)), ix.pc(n, m, one())]))?;
        b.accumulate(Gen::S, g, sum([ix.xc(n, m, i64r(n) - int(2) * &l), ix.pc(n, m + 1, one())]))?;
    }
    // (1,0)-(1,1), (1,1)-(1,1)
    for n in 0..n2 {
        b.accumulate(Gen::Q, Gen::X(n as u32), ix.p(n, one()))?;
        b.accumulate(Gen::S, Gen::X(n as u32), ix.p(n + 1, one()))?;
        for m in n + 1..n2 {
            b.accumulate(Gen::X(n as u32), Gen::X(m as u32), ix.xc(n, m, one()))?;
        }
    }

    if central {
        add_mass_extension(&mut b, two_ell, &pcs, &xcs, &lams)?;
    }
    b.build()
}

/// Additional relations of `G~_l`.
fn add_mass_extension(
    b: &mut AlgebraBuilder,
    two_ell: u32,
    pcs: &[(i64, i64)],
    xcs: &[(i64, i64)],
    lams: &[(i64, i64)],
) -> Result<()> {
    let n2 = two_ell as i64;
    let ix = Idx { n: n2 };
    let cd = CentralData::new(two_ell);
    let i_n = |k: i64| -> Rational {
        if (0..=n2).contains(&k) {
            cd.i_n(k as u32).clone()
        } else {
            Rational::zero()
        }
    };
    let al = |k: i64| -> Rational {
        if (0..n2).contains(&k) {
            cd.alpha_n(k as u32).clone()
        } else {
            Rational::zero()
        }
    };
    let two = || int(2);
    let e = n2;
    let f = n2 - 1;

    // (0,0)-(0,0)
    for (p, &(n, m)) in pcs.iter().enumerate() {
        for &(k, r) in &pcs[p..] {
            let v = sum([
                ix.pc(m, r, two() * i_n(n) * delta(n + k, e)),
                ix.pc(m, k, two() * i_n(n) * delta(n + r, e)),
                ix.pc(n, r, two() * i_n(m) * delta(m + k, e)),
                ix.pc(n, k, two() * i_n(m) * delta(m + r, e)),
            ]);
            b.accumulate(Gen::Pc(n as u32, m as u32), Gen::Pc(k as u32, r as u32), v)?;
        }
    }
    for (p, &(n, m)) in xcs.iter().enumerate() {
        for &(k, r) in &xcs[p..] {
            let v = sum([
                ix.xc(m, r, -two() * al(n) * delta(n + k, f)),
                ix.xc(m, k, two() * al(n) * delta(n + r, f)),
                ix.xc(n, r, two() * al(m) * delta(m + k, f)),
                ix.xc(n, k, -two() * al(m) * delta(m + r, f)),
            ]);
            b.accumulate(Gen::Xc(n as u32, m as u32), Gen::Xc(k as u32, r as u32), v)?;
        }
    }
    // (0,0)-(0,1)
    for &(n, m) in pcs {
        for k in 0..=n2 {
            let v = sum([
                ix.p(m, two() * delta(n + k, e) * i_n(n)),
                ix.p(n, two() * delta(m + k, e) * i_n(m)),
            ]);
            b.accumulate(Gen::Pc(n as u32, m as u32), Gen::P(k as u32), v)?;
        }
    }
    // (0,0)-(1,0)
    for &(k, r) in lams {
        let lam = Gen::Lam(k as u32, r as u32);
        for &(n, m) in pcs {
            let v = sum([
                ix.lam(m, r, two() * delta(n + k, e) * i_n(n)),
                ix.lam(n, r, two() * delta(m + k, e) * i_n(m)),
            ]);
            b.accumulate(Gen::Pc(n as u32, m as u32), lam, v)?;
        }
        for &(n, m) in xcs {
            let v = sum([
                ix.lam(k, m, -two() * delta(n + r, f) * al(n)),
                ix.lam(k, n, two() * delta(m + r, f) * al(m)),
            ]);
            b.accumulate(Gen::Xc(n as u32, m as u32), lam, v)?;
        }
    }
    // (0,0)-(1,1)
    for &(n, m) in xcs {
        for k in 0..n2 {
            let v = sum([
                ix.x(m, -two() * delta(n + k, f) * al(n)),
                ix.x(n, two() * delta(m + k, f) * al(m)),
            ]);
            b.accumulate(Gen::Xc(n as u32, m as u32), Gen::X(k as u32), v)?;
        }
    }
    // (0,1)-(1,0)
    for n in 0..=n2 {
        for &(m, k) in lams {
            let v = ix.x(k, two() * delta(n + m, e) * i_n(n));
            b.accumulate(Gen::P(n as u32), Gen::Lam(m as u32, k as u32), v)?;
        }
    }
    // (1,0)-(1,0)
    for (p, &(n, m)) in lams.iter().enumerate() {
        for &(k, r) in &lams[p..] {
            let v = sum([
                ix.xc(m, r, two() * delta(n + k, e) * i_n(n)),
                ix.pc(n, k, two() * delta(m + r, f) * al(m)),
            ]);
            b.accumulate(Gen::Lam(n as u32, m as u32), Gen::Lam(k as u32, r as u32), v)?;
        }
    }
    // (1,0)-(1,1)
    for &(n, m) in lams {
        for k in 0..n2 {
            let v = ix.p(n, two() * delta(m + k, f) * al(m));
            b.accumulate(Gen::Lam(n as u32, m as u32), Gen::X(k as u32), v)?;
        }
    }
    Ok(())
}

/// Image of a basis generator of `G_l` in the enveloping algebra.
pub fn envelope_image(env: &Envelope, g: Gen) -> PbwElement {
    let pair = |a: Gen, b: Gen| {
        env.colored_bracket(&PbwElement::gen(a), &PbwElement::gen(b), colored_degree(a), colored_degree(b))
    };
    match g {
        Gen::Pc(n, m) => pair(Gen::P(n), Gen::P(m)),
        Gen::Xc(n, m) => pair(Gen::X(n), Gen::X(m)),
        Gen::Lam(n, m) => pair(Gen::P(n), Gen::X(m)),
        other => PbwElement::gen(other),
    }
}

/// `G_l` (or `G~_l`) with every structure constant computed by bracketing the
/// enveloping-algebra images and solving for the result over the basis.
pub fn derive_colored_from_envelope(two_ell: u32, central: bool) -> Result<ColorAlgebra> {
    derive_colored_with(two_ell, central, Exec::default())
}

pub fn derive_colored_with(two_ell: u32, central: bool, exec: Exec) -> Result<ColorAlgebra> {
    check_central(two_ell, central)?;
    let env = Envelope::new(build_scga(two_ell, central)?);
    let basis = colored_basis(two_ell);
    let images: Vec<(Gen, PbwElement)> = basis.iter().map(|g| (*g, envelope_image(&env, *g))).collect();
    let solver = SpanDecomposer::new(&images)?;
    let pairs: Vec<(usize, usize)> =
        (0..basis.len()).flat_map(|i| (i..basis.len()).map(move |j| (i, j))).collect();
    let values = par::map(exec, &pairs, |&(i, j)| {
        let (x, y) = (basis[i], basis[j]);
        let br = env.colored_bracket(&images[i].1, &images[j].1, colored_degree(x), colored_degree(y));
        solver.decompose(&br).map_err(|e| match e {
            Error::NotInSpan { residual } => Error::ClosureFailure { left: x, right: y, residual },
            other => other,
        })
    });
    let mut b = new_builder(two_ell, central, "derived");
    for (&(i, j), v) in pairs.iter().zip(values) {
        b.set(basis[i], basis[j], v?)?;
    }
    b.build()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiffEntry {
    pub left: Gen,
    pub right: Gen,
    pub a_value: String,
    pub b_value: String,
}

impl fmt::Display for DiffEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]: {} vs {}", self.left, self.right, self.a_value, self.b_value)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiffReport {
    pub a: String,
    pub b: String,
    pub pairs_compared: usize,
    pub entries: Vec<DiffEntry>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Every unordered basis pair whose bracket differs between the two algebras.
pub fn compare_algebras(a: &ColorAlgebra, b: &ColorAlgebra) -> Result<DiffReport> {
    let mut sa: Vec<(Gen, Degree)> = a.basis().iter().copied().zip(a.degrees().iter().copied()).collect();
    let mut sb: Vec<(Gen, Degree)> = b.basis().iter().copied().zip(b.degrees().iter().copied()).collect();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Err(Error::BasisMismatch(format!("{} has {} generators, {} has {}", a.name(), a.dim(), b.name(), b.dim())));
    }
    let basis = a.basis();
    let mut report = DiffReport { a: a.name().into(), b: b.name().into(), pairs_compared: 0, entries: vec![] };
    for (i, &x) in basis.iter().enumerate() {
        for &y in &basis[i..] {
            report.pairs_compared += 1;
            let va = a.bracket_gens(x, y)?;
            let vb = b.bracket_gens(x, y)?;
            if va != vb {
                report.entries.push(DiffEntry { left: x, right: y, a_value: va.to_string(), b_value: vb.to_string() });
            }
        }
    }
    Ok(report)
}

/// Split of the basis by the sign of the `ad D` eigenvalue.
pub type TriangularDecomposition = AdDecomposition;

pub fn triangular_decompose(alg: &ColorAlgebra) -> Result<TriangularDecomposition> {
    ad_eigen_decompose(alg, Gen::D)
}

fn le(n: i64, bound: &Rational) -> bool {
    int(n) <= *bound
}

fn ge(n: i64, bound: &Rational) -> bool {
    int(n) >= *bound
}

/// Zero sector as listed in closed form for integer and half-integer `l`.
pub fn expected_zero_sector(two_ell: u32) -> Vec<Gen> {
    let n2 = two_ell as i64;
    let l = rational::ell(two_ell);
    let integer = two_ell % 2 == 0;
    let mut v = vec![Gen::D];
    let (pb, xb) = if integer { (l.clone(), &l - int(1)) } else { (&l - frac(1, 2), &l - frac(3, 2)) };
    v.extend((0..=n2).filter(|&n| le(n, &pb)).map(|n| Gen::pc(n as u32, (n2 - n) as u32)));
    v.extend((0..n2).filter(|&n| le(n, &xb) && n < n2 - 1 - n).map(|n| Gen::Xc(n as u32, (n2 - 1 - n) as u32)));
    if integer {
        v.push(Gen::P(two_ell / 2));
    } else {
        v.push(Gen::X((two_ell - 1) / 2));
    }
    v.sort();
    v
}

/// Positive and negative sectors from the printed index-range tables.
pub fn expected_signed_sectors(two_ell: u32) -> (Vec<Gen>, Vec<Gen>) {
    let n2 = two_ell as i64;
    let l = rational::ell(two_ell);
    let integer = two_ell % 2 == 0;
    let h = frac(1, 2);
    let mut plus = vec![Gen::H, Gen::Q];
    let mut minus = vec![Gen::K, Gen::S];

    let pc_n = if integer { &l - int(1) } else { &l - &h };
    let xc_n = if integer { &l - int(2) } else { &l - frac(3, 2) };
    let p_n = pc_n.clone();
    let x_n = if integer { &l - int(1) } else { &l - frac(3, 2) };
    for n in 0..=n2 {
        if le(n, &pc_n) {
            for m in n..=(n2 - 1 - n) {
                plus.push(Gen::Pc(n as u32, m as u32));
            }
        }
        if n < n2 && le(n, &xc_n) {
            for m in (n + 1)..=(n2 - 2 - n) {
                plus.push(Gen::Xc(n as u32, m as u32));
            }
        }
        if le(n, &p_n) {
            plus.push(Gen::P(n as u32));
        }
        if n <= n2 - 1 {
            for m in 0..=(n2 - 1 - n) {
                plus.push(Gen::Lam(n as u32, m as u32));
            }
        }
        if n < n2 && le(n, &x_n) {
            plus.push(Gen::X(n as u32));
        }
    }

    let pc_m = if integer { &l + int(1) } else { &l + &h };
    let xc_m = pc_m.clone();
    let p_lo = pc_m.clone();
    let x_lo = if integer { l.clone() } else { &l + &h };
    for m in 0..=n2 {
        if ge(m, &pc_m) {
            for n in (n2 + 1 - m)..=m {
                minus.push(Gen::Pc(n as u32, m as u32));
            }
        }
        if m <= n2 - 1 && ge(m, &xc_m) {
            for n in (n2 - m)..m {
                minus.push(Gen::Xc(n as u32, m as u32));
            }
        }
        if ge(m, &p_lo) {
            minus.push(Gen::P(m as u32));
        }
    }
    for n in 1..=n2 {
        for m in (n2 - n)..n2 {
            minus.push(Gen::Lam(n as u32, m as u32));
        }
    }
    for n in 0..n2 {
        if ge(n, &x_lo) {
            minus.push(Gen::X(n as u32));
        }
    }
    plus.sort();
    minus.sort();
    (plus, minus)
}

/// Computes the decomposition and checks it against the closed-form sector
/// lists; also checks `[G^0, G^pm] in G^pm` and `[G^0, G^0] in G^0`.
pub fn check_triangular(alg: &ColorAlgebra) -> Result<(TriangularDecomposition, VerificationReport)> {
    let dec = triangular_decompose(alg)?;
    let mut report = VerificationReport::new("triangular decomposition");
    let (plus, minus) = expected_signed_sectors(alg.two_ell());
    let zero = expected_zero_sector(alg.two_ell());
    for (label, got, want) in [("G^0", &dec.zero, &zero), ("G^+", &dec.plus, &plus), ("G^-", &dec.minus, &minus)] {
        report.checked += 1;
        let mut got = AdDecomposition::names(got);
        got.sort();
        if got != *want {
            let extra: Vec<String> = got.iter().filter(|g| !want.contains(g)).map(|g| g.to_string()).collect();
            let missing: Vec<String> = want.iter().filter(|g| !got.contains(g)).map(|g| g.to_string()).collect();
            report.violations.push(Violation::new(
                vec![],
                format!("{label}: unexpected {{{}}}, missing {{{}}}", extra.join(", "), missing.join(", ")),
            ));
        }
    }
    report.absorb(crate::verify::check_triangular_brackets(alg, &dec));
    Ok((dec, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_formula() {
        for (two_ell, dim) in [(1u32, 13usize), (2, 23), (3, 37), (4, 55)] {
            assert_eq!(colored_basis(two_ell).len(), dim);
            assert_eq!(expected_dimension(two_ell), int(dim as i64));
            assert_eq!(build_colored_explicit(two_ell, false).unwrap().dim(), dim);
        }
    }

    #[test]
    fn printed_relations_are_transcribed() {
        let g = build_colored_explicit(2, false).unwrap();
        assert_eq!(g.bracket_gens(Gen::P(1), Gen::X(0)).unwrap(), AlgebraElement::gen(Gen::Lam(1, 0)));
        assert_eq!(
            g.bracket_gens(Gen::Q, Gen::Xc(0, 1)).unwrap(),
            AlgebraElement::gen(Gen::Lam(0, 1)).sub(&AlgebraElement::gen(Gen::Lam(1, 0)))
        );
        assert!(matches!(build_colored_explicit(2, true), Err(Error::CentralExtensionUnavailable { .. })));
    }

    #[test]
    fn derived_matches_printed_smallest_case() {
        let a = build_colored_explicit(1, false).unwrap();
        let b = derive_colored_from_envelope(1, false).unwrap();
        let diff = compare_algebras(&a, &b).unwrap();
        assert!(diff.is_empty(), "{:#?}", diff.entries);
    }

    #[test]
    fn zero_sector_lists() {
        assert_eq!(expected_zero_sector(2), {
            let mut v = vec![Gen::D, Gen::Pc(0, 2), Gen::Pc(1, 1), Gen::Xc(0, 1), Gen::P(1)];
            v.sort();
            v
        });
        assert_eq!(expected_zero_sector(1), vec![Gen::D, Gen::X(0), Gen::Pc(0, 1)]);
    }
}
