use std::fmt;
use std::str::FromStr;

/// A named basis generator. Indices use the doubled convention: every bound
/// is expressed through `two_ell = 2l`.
///
/// The derived order is the PBW order of the enveloping algebra:
/// `H < D < K < P_0 < .. < Q < S < X_0 < .. < I`, with the composites
/// `P_nm`, `X_nm`, `Lam_nm` sorted after the simple generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    H,
    D,
    K,
    P(u32),
    Q,
    S,
    X(u32),
    /// `P_nm = {P_n, P_m}`, stored with `n <= m`.
    Pc(u32, u32),
    /// `X_nm = [X_n, X_m]`, stored with `n < m`.
    Xc(u32, u32),
    /// `Lam_nm = {P_n, X_m}`.
    Lam(u32, u32),
    /// Central element of the mass extension.
    I,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    H,
    D,
    K,
    P,
    Q,
    S,
    X,
    Pc,
    Xc,
    Lam,
    I,
}

impl Gen {
    pub fn family(self) -> Family {
        match self {
            Gen::H => Family::H,
            Gen::D => Family::D,
            Gen::K => Family::K,
            Gen::P(_) => Family::P,
            Gen::Q => Family::Q,
            Gen::S => Family::S,
            Gen::X(_) => Family::X,
            Gen::Pc(..) => Family::Pc,
            Gen::Xc(..) => Family::Xc,
            Gen::Lam(..) => Family::Lam,
            Gen::I => Family::I,
        }
    }

    /// `P_nm` with the symmetric canonicalization applied.
    pub fn pc(n: u32, m: u32) -> Gen {
        Gen::Pc(n.min(m), n.max(m))
    }

    /// `X_nm` as `(sign, generator)`; `None` when `n == m` (the element vanishes).
    pub fn xc(n: u32, m: u32) -> Option<(i8, Gen)> {
        match n.cmp(&m) {
            std::cmp::Ordering::Less => Some((1, Gen::Xc(n, m))),
            std::cmp::Ordering::Greater => Some((-1, Gen::Xc(m, n))),
            std::cmp::Ordering::Equal => None,
        }
    }

    /// Whether the indices are in range for the given `two_ell`.
    pub fn in_range(self, two_ell: u32) -> bool {
        let n = two_ell;
        match self {
            Gen::P(i) => i <= n,
            Gen::X(i) => i < n,
            Gen::Pc(i, j) => i <= j && j <= n,
            Gen::Xc(i, j) => i < j && j < n,
            Gen::Lam(i, j) => i <= n && j < n,
            _ => true,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::H => write!(f, "H"),
            Gen::D => write!(f, "D"),
            Gen::K => write!(f, "K"),
            Gen::Q => write!(f, "Q"),
            Gen::S => write!(f, "S"),
            Gen::I => write!(f, "I"),
            Gen::P(n) => write!(f, "P_{n}"),
            Gen::X(n) => write!(f, "X_{n}"),
            Gen::Pc(n, m) => write!(f, "P_{{{n},{m}}}"),
            Gen::Xc(n, m) => write!(f, "X_{{{n},{m}}}"),
            Gen::Lam(n, m) => write!(f, "Lam_{{{n},{m}}}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseGenError(pub String);

impl fmt::Display for ParseGenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid generator id {:?}", self.0)
    }
}

impl std::error::Error for ParseGenError {}

impl FromStr for Gen {
    type Err = ParseGenError;

    fn from_str(s: &str) -> Result<Gen, ParseGenError> {
        let err = || ParseGenError(s.to_string());
        let simple = match s {
            "H" => Some(Gen::H),
            "D" => Some(Gen::D),
            "K" => Some(Gen::K),
            "Q" => Some(Gen::Q),
            "S" => Some(Gen::S),
            "I" => Some(Gen::I),
            _ => None,
        };
        if let Some(g) = simple {
            return Ok(g);
        }
        let (head, rest) = s.split_once('_').ok_or_else(err)?;
        if let Some(inner) = rest.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            let (a, b) = inner.split_once(',').ok_or_else(err)?;
            let a: u32 = a.trim().parse().map_err(|_| err())?;
            let b: u32 = b.trim().parse().map_err(|_| err())?;
            return match head {
                "P" if a <= b => Ok(Gen::Pc(a, b)),
                "X" if a < b => Ok(Gen::Xc(a, b)),
                "Lam" => Ok(Gen::Lam(a, b)),
                _ => Err(err()),
            };
        }
        let a: u32 = rest.parse().map_err(|_| err())?;
        match head {
            "P" => Ok(Gen::P(a)),
            "X" => Ok(Gen::X(a)),
            _ => Err(err()),
        }
    }
}
