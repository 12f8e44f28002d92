use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::fields::poly::Poly;

/// Which kind of field a square class or group-ring element lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    Finite { p: u64, f: u32 },
    Rational,
    Function { p: u64, f: u32 },
}

impl FieldKind {
    /// Whether the square-class group is trivial (finite fields of characteristic 2).
    pub fn trivial_classes(self) -> bool {
        matches!(self, FieldKind::Finite { p: 2, .. })
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gf = |p: u64, e: u32| if e == 1 { format!("GF({p})") } else { format!("GF({p}^{e})") };
        match *self {
            FieldKind::Finite { p, f: e } => write!(f, "{}", gf(p, e)),
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Function { p, f: e } => write!(f, "{}(t)", gf(p, e)),
        }
    }
}

/// A square class, encoded canonically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SquareClass {
    /// Finite field: whether the class is the nonsquare one.
    Finite(bool),
    /// Q: sign and the primes occurring to an odd power, ascending.
    Rational { negative: bool, primes: Vec<BigInt> },
    /// F_q(t): leading coefficient class, odd-multiplicity monic irreducibles
    /// (sorted), and degree parity.
    Function { lead_nonsquare: bool, irreducibles: Vec<Poly>, odd_degree: bool },
}

fn sym_diff<T: Ord + Clone>(a: &[T], b: &[T]) -> Vec<T> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            out.push(b[j].clone());
            j += 1;
        } else {
            i += 1;
            j += 1;
        }
    }
    out
}

impl SquareClass {
    pub fn identity(kind: FieldKind) -> Self {
        match kind {
            FieldKind::Finite { .. } => SquareClass::Finite(false),
            FieldKind::Rational => SquareClass::Rational { negative: false, primes: Vec::new() },
            FieldKind::Function { .. } => {
                SquareClass::Function { lead_nonsquare: false, irreducibles: Vec::new(), odd_degree: false }
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            SquareClass::Finite(b) => !b,
            SquareClass::Rational { negative, primes } => !negative && primes.is_empty(),
            SquareClass::Function { lead_nonsquare, irreducibles, odd_degree } => {
                !lead_nonsquare && irreducibles.is_empty() && !odd_degree
            }
        }
    }

    pub fn mul(&self, o: &SquareClass) -> Result<SquareClass> {
        match (self, o) {
            (SquareClass::Finite(a), SquareClass::Finite(b)) => Ok(SquareClass::Finite(a ^ b)),
            (
                SquareClass::Rational { negative: s1, primes: p1 },
                SquareClass::Rational { negative: s2, primes: p2 },
            ) => Ok(SquareClass::Rational { negative: s1 ^ s2, primes: sym_diff(p1, p2) }),
            (
                SquareClass::Function { lead_nonsquare: l1, irreducibles: i1, odd_degree: d1 },
                SquareClass::Function { lead_nonsquare: l2, irreducibles: i2, odd_degree: d2 },
            ) => Ok(SquareClass::Function {
                lead_nonsquare: l1 ^ l2,
                irreducibles: sym_diff(i1, i2),
                odd_degree: d1 ^ d2,
            }),
            _ => Err(Error::KindMismatch),
        }
    }

    pub fn matches(&self, kind: FieldKind) -> bool {
        matches!(
            (self, kind),
            (SquareClass::Finite(_), FieldKind::Finite { .. })
                | (SquareClass::Rational { .. }, FieldKind::Rational)
                | (SquareClass::Function { .. }, FieldKind::Function { .. })
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products() {
        let a = SquareClass::Rational { negative: true, primes: vec![BigInt::from(2), BigInt::from(5)] };
        let b = SquareClass::Rational { negative: true, primes: vec![BigInt::from(3), BigInt::from(5)] };
        let c = a.mul(&b).unwrap();
        assert_eq!(c, SquareClass::Rational { negative: false, primes: vec![BigInt::from(2), BigInt::from(3)] });
        assert!(a.mul(&a).unwrap().is_identity());
        assert_eq!(a.mul(&SquareClass::Finite(true)).unwrap_err(), Error::KindMismatch);
    }
}
