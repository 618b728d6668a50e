use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element of Z2 x Z2. The derived order is (0,0) < (0,1) < (1,0) < (1,1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree {
    a1: u8,
    a2: u8,
}

impl Degree {
    pub const D00: Degree = Degree { a1: 0, a2: 0 };
    pub const D01: Degree = Degree { a1: 0, a2: 1 };
    pub const D10: Degree = Degree { a1: 1, a2: 0 };
    pub const D11: Degree = Degree { a1: 1, a2: 1 };
    pub const ALL: [Degree; 4] = [Self::D00, Self::D01, Self::D10, Self::D11];

    /// Super parity embedded as even -> (0,0), odd -> (0,1).
    pub const EVEN: Degree = Self::D00;
    pub const ODD: Degree = Self::D01;

    pub fn new(a1: u8, a2: u8) -> Degree {
        Degree { a1: a1 & 1, a2: a2 & 1 }
    }

    pub fn components(self) -> (u8, u8) {
        (self.a1, self.a2)
    }

    pub fn dot(self, other: Degree) -> u8 {
        (self.a1 * other.a1 + self.a2 * other.a2) & 1
    }

    /// `(-1)^{a.b}` as +1 / -1.
    pub fn sign(self, other: Degree) -> i8 {
        if self.dot(other) == 0 {
            1
        } else {
            -1
        }
    }

    /// `(-1)^{a1 + a2}`, the square of a superadjoint on this sector.
    pub fn total_parity_sign(self) -> i8 {
        if (self.a1 + self.a2) & 1 == 0 {
            1
        } else {
            -1
        }
    }

    /// True when homogeneous elements of this degree square to zero in a
    /// graded-commutative setting (`a.a = 1`).
    pub fn is_nilpotent(self) -> bool {
        self.dot(self) == 1
    }

    pub fn as_str(self) -> &'static str {
        match (self.a1, self.a2) {
            (0, 0) => "00",
            (0, 1) => "01",
            (1, 0) => "10",
            _ => "11",
        }
    }

    pub fn parse(s: &str) -> Option<Degree> {
        match s {
            "00" => Some(Self::D00),
            "01" => Some(Self::D01),
            "10" => Some(Self::D10),
            "11" => Some(Self::D11),
            _ => None,
        }
    }
}

impl Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        Degree { a1: self.a1 ^ rhs.a1, a2: self.a2 ^ rhs.a2 }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a1, self.a2)
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Degree::parse(&s)
            .ok_or_else(|| serde::de::Error::custom(format!("invalid degree token {s:?}")))
    }
}
