use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Rational;

/// coefficient·√radicand with radicand ∈ {1, 2, 3}, never evaluated numerically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct QuadMagnitude {
    coefficient: Rational,
    radicand: u8,
}

impl QuadMagnitude {
    pub fn new(coefficient: Rational, radicand: u8) -> Option<Self> {
        if !matches!(radicand, 1..=3) || coefficient.is_negative() {
            return None;
        }
        Some(QuadMagnitude {
            coefficient,
            radicand,
        })
    }

    pub fn coefficient(&self) -> Rational {
        self.coefficient
    }

    pub fn radicand(&self) -> u8 {
        self.radicand
    }

    pub fn square(&self) -> Rational {
        self.coefficient * self.coefficient * Rational::from_integer(self.radicand as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }
}

impl PartialOrd for QuadMagnitude {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadMagnitude {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.radicand == other.radicand {
            self.coefficient.cmp(&other.coefficient)
        } else {
            self.square()
                .cmp(&other.square())
                .then(self.radicand.cmp(&other.radicand))
        }
    }
}

/// Prints `2`, `√2`, `3√2/2`, `√3/3` and so on.
impl fmt::Display for QuadMagnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand == 1 || self.coefficient.is_zero() {
            return write!(f, "{}", self.coefficient);
        }
        let (n, d) = (*self.coefficient.numer(), *self.coefficient.denom());
        let num = if n == 1 { String::new() } else { n.to_string() };
        if d == 1 {
            write!(f, "{num}√{}", self.radicand)
        } else {
            write!(f, "{num}√{}/{d}", self.radicand)
        }
    }
}
