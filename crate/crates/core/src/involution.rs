//! Graded anti-involutions: the two adjoint operations and the superadjoint.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::ColorAlgebra;
use crate::element::AlgebraElement;
use crate::colored::colored_degree;
use crate::error::{Error, Result};
use crate::fock::FockRep;
use crate::generator::Gen;
use crate::rational::{frac, int, Rational};
use crate::verify::{ad_eigen_decompose, VerificationReport, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InvolutionKind {
    Adjoint1,
    Adjoint2,
    Superadjoint,
}

impl InvolutionKind {
    pub const ALL: [InvolutionKind; 3] = [InvolutionKind::Adjoint1, InvolutionKind::Adjoint2, InvolutionKind::Superadjoint];

    pub fn as_str(self) -> &'static str {
        match self {
            InvolutionKind::Adjoint1 => "adjoint1",
            InvolutionKind::Adjoint2 => "adjoint2",
            InvolutionKind::Superadjoint => "superadjoint",
        }
    }

    pub fn is_super(self) -> bool {
        self == InvolutionKind::Superadjoint
    }
}

impl fmt::Display for InvolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InvolutionKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        InvolutionKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown involution kind '{s}'"))
    }
}

/// The upper sign of the `±` printed for `P_n` (and the matching sign for `X_n`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SignChoice {
    Plus,
    Minus,
}

impl SignChoice {
    pub const BOTH: [SignChoice; 2] = [SignChoice::Plus, SignChoice::Minus];

    pub fn value(self) -> i64 {
        match self {
            SignChoice::Plus => 1,
            SignChoice::Minus => -1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SignChoice::Plus => "plus",
            SignChoice::Minus => "minus",
        }
    }
}

impl fmt::Display for SignChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SignChoice {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "plus" | "+" => Ok(SignChoice::Plus),
            "minus" | "-" => Ok(SignChoice::Minus),
            _ => Err(format!("unknown sign choice '{s}'")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct InvolutionSpec {
    pub kind: InvolutionKind,
    pub sign: SignChoice,
    pub two_ell: u32,
    pub images: BTreeMap<Gen, AlgebraElement>,
}

fn neg1(k: u32) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

impl InvolutionSpec {
    /// Images of every generator of `G_l`; the central generator `I` (when
    /// present in a base algebra) is fixed.
    pub fn new(kind: InvolutionKind, sign: SignChoice, two_ell: u32) -> Result<Self> {
        if kind.is_super() && two_ell % 2 == 0 {
            return Err(Error::UndefinedInvolution { two_ell });
        }
        let e = two_ell;
        let eps = sign.value();
        let t = |g: Gen, c: i64| AlgebraElement::term(g, int(c));
        let pc = |n: u32, m: u32, c: i64| t(Gen::pc(e - n, e - m), c);
        let xc = |n: u32, m: u32, c: i64| {
            let (s, g) = Gen::xc(e - 1 - n, e - 1 - m).expect("distinct indices");
            t(g, c * s as i64)
        };
        let lam = |n: u32, m: u32, c: i64| t(Gen::Lam(e - n, e - 1 - m), c);
        let mut images = BTreeMap::new();
        images.insert(Gen::D, t(Gen::D, 1));
        images.insert(Gen::I, t(Gen::I, 1));
        let (a, b) = match kind {
            InvolutionKind::Adjoint1 | InvolutionKind::Adjoint2 => (-1, -1),
            InvolutionKind::Superadjoint => (1, 1),
        };
        images.insert(Gen::H, t(Gen::K, a));
        images.insert(Gen::K, t(Gen::H, b));
        let (q, s) = match kind {
            InvolutionKind::Adjoint1 => (1, 1),
            InvolutionKind::Adjoint2 => (-1, -1),
            InvolutionKind::Superadjoint => (1, -1),
        };
        images.insert(Gen::Q, t(Gen::S, q));
        images.insert(Gen::S, t(Gen::Q, s));
        for n in 0..=e {
            let c = match kind {
                InvolutionKind::Superadjoint => eps * neg1(n),
                _ => eps,
            };
            images.insert(Gen::P(n), t(Gen::P(e - n), c));
            for m in n..=e {
                let c = match kind {
                    InvolutionKind::Superadjoint => neg1(n + m + 1),
                    _ => 1,
                };
                images.insert(Gen::Pc(n, m), pc(n, m, c));
            }
            for m in 0..e {
                let c = match kind {
                    InvolutionKind::Adjoint1 => 1,
                    InvolutionKind::Adjoint2 => -1,
                    InvolutionKind::Superadjoint => neg1(n + m),
                };
                images.insert(Gen::Lam(n, m), lam(n, m, c));
            }
        }
        for n in 0..e {
            let c = match kind {
                InvolutionKind::Adjoint1 => eps,
                InvolutionKind::Adjoint2 => -eps,
                InvolutionKind::Superadjoint => -eps * neg1(n),
            };
            images.insert(Gen::X(n), t(Gen::X(e - 1 - n), c));
            for m in n + 1..e {
                let c = match kind {
                    InvolutionKind::Superadjoint => neg1(n + m + 1),
                    _ => -1,
                };
                images.insert(Gen::Xc(n, m), xc(n, m, c));
            }
        }
        Ok(InvolutionSpec { kind, sign, two_ell, images })
    }

    pub fn image(&self, g: Gen) -> Result<&AlgebraElement> {
        self.images.get(&g).ok_or(Error::UnknownGenerator(g))
    }

    /// Antilinear extension; rational coefficients are their own conjugates.
    pub fn apply(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero();
        for (g, c) in x.iter() {
            out.add_scaled(self.image(*g)?, &conjugate(c));
        }
        Ok(out)
    }
}

fn conjugate(c: &Rational) -> Rational {
    c.clone()
}

/// Convenience wrapper around [`InvolutionSpec::new`] + [`InvolutionSpec::apply`].
pub fn apply(spec: &InvolutionSpec, x: &AlgebraElement) -> Result<AlgebraElement> {
    spec.apply(x)
}

/// Unordered basis pairs `{X, Y}` on which property (iii) fails.
pub fn bracket_property_failures(alg: &ColorAlgebra, spec: &InvolutionSpec) -> Result<Vec<(Gen, Gen)>> {
    let mut out = vec![];
    let basis = alg.basis();
    for (i, &x) in basis.iter().enumerate() {
        for &y in &basis[i..] {
            if property_iii_residual(alg, spec, x, y)?.is_some() {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

fn property_iii_residual(
    alg: &ColorAlgebra,
    spec: &InvolutionSpec,
    x: Gen,
    y: Gen,
) -> Result<Option<AlgebraElement>> {
    let lhs = spec.apply(&alg.bracket_gens(x, y)?)?;
    let mut rhs = alg.bracket(spec.image(y)?, spec.image(x)?)?;
    if spec.kind.is_super() {
        let (a, b) = (alg.degree(x).unwrap(), alg.degree(y).unwrap());
        rhs = rhs.scaled(&int(a.sign(b) as i64));
    }
    let r = lhs.sub(&rhs);
    Ok(if r.is_zero() { None } else { Some(r) })
}

/// Exhaustive check of properties (i)-(iv), plus the reversal of `ad D`
/// eigenvalues.
pub fn verify_antiinvolution(alg: &ColorAlgebra, spec: &InvolutionSpec) -> Result<VerificationReport> {
    if spec.two_ell != alg.two_ell() {
        return Err(Error::BasisMismatch(format!(
            "involution built for two_ell = {}, algebra has two_ell = {}",
            spec.two_ell,
            alg.two_ell()
        )));
    }
    let mut report = VerificationReport::new(format!("{} ({})", spec.kind, spec.sign));
    let basis = alg.basis();

    // (i)
    for &g in basis {
        report.checked += 1;
        let img = spec.image(g)?;
        let want = alg.degree(g).unwrap();
        if img.is_zero() || alg.degree_of(img) != Some(want) {
            report.violations.push(Violation::new(vec![g], format!("(i) image {img} not in degree {want}")));
        }
    }
    // (ii)
    let (alpha, beta) = (frac(2, 3), frac(-5, 7));
    for (i, &x) in basis.iter().enumerate() {
        for &y in &basis[i..] {
            report.checked += 1;
            let combo = AlgebraElement::term(x, alpha.clone()).plus(&AlgebraElement::term(y, beta.clone()));
            let lhs = spec.apply(&combo)?;
            let rhs = spec.image(x)?.scaled(&conjugate(&alpha)).plus(&spec.image(y)?.scaled(&conjugate(&beta)));
            if lhs != rhs {
                report.violations.push(Violation::new(vec![x, y], "(ii) not antilinear"));
            }
        }
    }
    // (iii) over ordered pairs
    for &x in basis {
        for &y in basis {
            report.checked += 1;
            if let Some(r) = property_iii_residual(alg, spec, x, y)? {
                report.violations.push(Violation::new(vec![x, y], format!("(iii) residual {r}")));
            }
        }
    }
    // (iv)
    for &g in basis {
        report.checked += 1;
        let twice = spec.apply(spec.image(g)?)?;
        let d = alg.degree(g).unwrap();
        let want = if spec.kind.is_super() {
            AlgebraElement::term(g, int(d.total_parity_sign() as i64))
        } else {
            AlgebraElement::gen(g)
        };
        if twice != want {
            report.violations.push(Violation::new(vec![g], format!("(iv) square is {twice}")));
        }
    }
    // ad D eigenvalue reversal
    let dec = ad_eigen_decompose(alg, Gen::D)?;
    for &g in basis {
        report.checked += 1;
        let lam = dec.eigenvalue(g).cloned().unwrap_or_else(Rational::zero);
        let img = spec.image(g)?;
        let ok = img.generators().all(|h| dec.eigenvalue(h).cloned().unwrap_or_else(Rational::zero) == -lam.clone());
        if !ok {
            report.violations.push(Violation::new(vec![g], format!("image {img} does not carry eigenvalue {}", -lam)));
        }
    }
    Ok(report)
}

/// The pairs carrying the mass central extension: `{P_n, P_{2l-n}}` and
/// `{X_n, X_{2l-1-n}}`, written in generator order.
pub fn mass_extension_pairs(two_ell: u32) -> Vec<(Gen, Gen)> {
    let mut out = vec![];
    for n in 0..=two_ell {
        let m = two_ell - n;
        if n <= m {
            out.push((Gen::P(n), Gen::P(m)));
        }
    }
    for n in 0..two_ell {
        let m = two_ell - 1 - n;
        if n <= m {
            out.push((Gen::X(n), Gen::X(m)));
        }
    }
    out
}

/// Where the superadjoint stops being compatible with the bracket once the
/// mass extension is switched on.
#[derive(Clone, Debug, Serialize)]
pub struct MassExtensionReport {
    pub two_ell: u32,
    pub sign: SignChoice,
    /// Property (iii) failures on the unextended colored algebra.
    pub colored_plain_failures: Vec<(Gen, Gen)>,
    /// Property (iii) failures on the extended colored algebra (`I` = 1).
    pub colored_extended_failures: Vec<(Gen, Gen)>,
    /// Property (iii) failures on the centrally extended superalgebra.
    pub relation_failures: Vec<(Gen, Gen)>,
    pub mass_pairs: Vec<(Gen, Gen)>,
}

impl MassExtensionReport {
    /// The failing relations are exactly the mass-extension relations.
    pub fn exact(&self) -> bool {
        self.colored_plain_failures.is_empty() && self.relation_failures == self.mass_pairs
    }
}

pub fn superadjoint_mass_extension_check(two_ell: u32, sign: SignChoice) -> Result<MassExtensionReport> {
    use crate::colored::build_colored_explicit;
    use crate::scga::build_scga;
    let spec = InvolutionSpec::new(InvolutionKind::Superadjoint, sign, two_ell)?;
    let plain = build_colored_explicit(two_ell, false)?;
    let ext = build_colored_explicit(two_ell, true)?;
    let base = build_scga(two_ell, true)?;
    Ok(MassExtensionReport {
        two_ell,
        sign,
        colored_plain_failures: bracket_property_failures(&plain, &spec)?,
        colored_extended_failures: bracket_property_failures(&ext, &spec)?,
        relation_failures: bracket_property_failures(&base, &spec)?,
        mass_pairs: mass_extension_pairs(two_ell),
    })
}

/// Star condition `pi(omega(X)) = pi(X)^dag` on the truncation interior, for
/// every generator carried by the representation. For the superadjoint the
/// graded operator adjoint is used instead.
pub fn verify_star_rep(rep: &FockRep, spec: &InvolutionSpec) -> Result<VerificationReport> {
    if rep.two_ell() != spec.two_ell {
        return Err(Error::BasisMismatch(format!(
            "representation has two_ell = {}, involution has two_ell = {}",
            rep.two_ell(),
            spec.two_ell
        )));
    }
    let label = if spec.kind.is_super() { "superstar" } else { "star" };
    let mut report = VerificationReport::new(format!("{label} {} ({}) at cutoff {}", spec.kind, spec.sign, rep.cutoff()));
    for g in rep.generators() {
        report.checked += 1;
        let lhs = rep.represent(spec.image(g)?)?;
        let m = rep.matrix(g)?;
        let rhs = if spec.kind.is_super() { rep.superadjoint(m, colored_degree(g)) } else { rep.adjoint(m) };
        if let Some(e) = rep.compare_on_interior(&lhs, &rhs) {
            report.violations.push(Violation::new(
                vec![g],
                format!("entry ({}, {}): {} vs {}", e.row, e.col, e.left, e.right),
            ));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::build_colored_explicit;

    #[test]
    fn printed_images() {
        let a1 = InvolutionSpec::new(InvolutionKind::Adjoint1, SignChoice::Plus, 1).unwrap();
        let a2 = InvolutionSpec::new(InvolutionKind::Adjoint2, SignChoice::Plus, 1).unwrap();
        let sa = InvolutionSpec::new(InvolutionKind::Superadjoint, SignChoice::Plus, 1).unwrap();
        assert_eq!(a1.image(Gen::H).unwrap(), &AlgebraElement::term(Gen::K, int(-1)));
        assert_eq!(a1.image(Gen::Q).unwrap(), &AlgebraElement::gen(Gen::S));
        assert_eq!(a2.image(Gen::Q).unwrap(), &AlgebraElement::term(Gen::S, int(-1)));
        assert_eq!(sa.image(Gen::D).unwrap(), &AlgebraElement::gen(Gen::D));
        let q2 = sa.apply(sa.image(Gen::Q).unwrap()).unwrap();
        assert_eq!(q2, AlgebraElement::term(Gen::Q, int(-1)));
        assert!(matches!(
            InvolutionSpec::new(InvolutionKind::Superadjoint, SignChoice::Plus, 2),
            Err(Error::UndefinedInvolution { two_ell: 2 })
        ));
    }

    #[test]
    fn adjoint1_on_smallest_algebra() {
        let g = build_colored_explicit(2, false).unwrap();
        for sign in SignChoice::BOTH {
            let spec = InvolutionSpec::new(InvolutionKind::Adjoint1, sign, 2).unwrap();
            let r = verify_antiinvolution(&g, &spec).unwrap();
            assert!(r.passed(), "{r}: {:?}", r.violations.first());
        }
    }
}
