//! The square/nonsquare partition of `F_q^×` permuted by `x -> 1/x` and `x -> 1-x`.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fields::{FqElem, FqField, GlobalElem, Place};
use crate::groupring::GroupRingElement;
use crate::identities::SymbolSum;
use crate::prebloch::{NodeName, Tower};

/// `{1}`, then `R̄_{±1}` (squares) and `N̄_{±1}` (nonsquares), the subscript
/// recording whether `1 - a` is a square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartitionClass {
    One,
    R1,
    Rm1,
    N1,
    Nm1,
}

impl PartitionClass {
    pub const ALL: [PartitionClass; 5] =
        [PartitionClass::One, PartitionClass::R1, PartitionClass::Rm1, PartitionClass::N1, PartitionClass::Nm1];

    pub fn label(self) -> &'static str {
        match self {
            PartitionClass::One => "ONE",
            PartitionClass::R1 => "R1",
            PartitionClass::Rm1 => "Rm1",
            PartitionClass::N1 => "N1",
            PartitionClass::Nm1 => "Nm1",
        }
    }
}

impl fmt::Display for PartitionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn require_odd(k: &FqField) -> Result<()> {
    if k.q() % 2 == 0 {
        Err(Error::EvenCharacteristic)
    } else {
        Ok(())
    }
}

pub fn classify(k: &FqField, x: FqElem) -> Result<PartitionClass> {
    require_odd(k)?;
    if x == k.zero() {
        return Err(Error::ZeroInput);
    }
    if x == k.one() {
        return Ok(PartitionClass::One);
    }
    let tau_square = k.is_square(k.sub(k.one(), x))?;
    Ok(match (k.is_square(x)?, tau_square) {
        (true, true) => PartitionClass::R1,
        (true, false) => PartitionClass::Rm1,
        (false, true) => PartitionClass::N1,
        (false, false) => PartitionClass::Nm1,
    })
}

/// Class of a unit of a global field by its residue; principal units land in `One`.
pub fn classify_unit(place: &Place, a: &GlobalElem) -> Result<PartitionClass> {
    classify(place.residue_field(), place.residue(a)?)
}

/// Sizes of the five classes, with the closed forms they should match.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub q: u64,
    /// Indexed like [`PartitionClass::ALL`].
    pub counts: [u64; 5],
    pub expected: [u64; 5],
}

impl Census {
    pub fn count(&self, c: PartitionClass) -> u64 {
        self.counts[c as usize]
    }

    pub fn matches(&self) -> bool {
        self.counts == self.expected
    }

    pub fn to_json(&self) -> Value {
        let side = |v: &[u64; 5]| -> serde_json::Map<String, Value> {
            PartitionClass::ALL.iter().map(|c| (c.label().to_string(), json!(v[*c as usize]))).collect()
        };
        json!({
            "q": self.q,
            "actual": side(&self.counts),
            "expected": side(&self.expected),
            "matches": self.matches(),
        })
    }
}

/// Closed-form class sizes for odd `q`.
pub fn expected_counts(q: u64) -> [u64; 5] {
    if q % 4 == 1 {
        let a = (q - 1) / 4;
        [1, (q - 5) / 4, a, a, a]
    } else {
        let a = (q - 3) / 4;
        [1, a, a, a, (q + 1) / 4]
    }
}

pub fn census(k: &FqField) -> Result<Census> {
    require_odd(k)?;
    let mut counts = [0u64; 5];
    for x in k.nonzero() {
        counts[classify(k, x)? as usize] += 1;
    }
    Ok(Census { q: k.q(), counts, expected: expected_counts(k.q()) })
}

fn members(k: &FqField, c: PartitionClass) -> Result<BTreeSet<FqElem>> {
    let mut s = BTreeSet::new();
    for x in k.nonzero() {
        if classify(k, x)? == c {
            s.insert(x);
        }
    }
    Ok(s)
}

/// One set equality between a class and an image of a class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitLaw {
    pub name: String,
    pub holds: bool,
}

/// Checks the `σ = (x -> 1/x)`, `τ = (x -> 1-x)` laws for the residue of `q` mod 4.
pub fn orbit_laws(k: &FqField) -> Result<Vec<OrbitLaw>> {
    require_odd(k)?;
    let sigma = |s: &BTreeSet<FqElem>| -> Result<BTreeSet<FqElem>> { s.iter().map(|&x| k.inv(x)).collect() };
    let tau = |s: &BTreeSet<FqElem>| -> BTreeSet<FqElem> { s.iter().map(|&x| k.sub(k.one(), x)).collect() };
    use PartitionClass::*;
    // (image of, under, equals)
    let laws: &[(PartitionClass, char, PartitionClass)] = if k.q() % 4 == 1 {
        &[(R1, 's', R1), (R1, 't', R1), (N1, 's', Nm1), (Rm1, 's', Rm1)]
    } else {
        &[(Nm1, 's', Nm1), (Nm1, 't', Nm1), (R1, 's', Rm1), (N1, 's', N1)]
    };
    let mut out = Vec::new();
    for &(from, map, to) in laws {
        let src = members(k, from)?;
        let img = if map == 's' { sigma(&src)? } else { tau(&src) };
        let name = format!("{}({from}) = {to}", if map == 's' { "sigma" } else { "tau" });
        out.push(OrbitLaw { name, holds: img == members(k, to)? });
    }
    Ok(out)
}

pub fn orbit_check(k: &FqField) -> Result<bool> {
    Ok(orbit_laws(k)?.iter().all(|l| l.holds))
}

/// A decomposition `n = r₁ + r₂` of a nonsquare into nonzero squares, smallest `r₁` first.
pub fn sum_of_squares(k: &FqField, n: FqElem) -> Result<(FqElem, FqElem)> {
    require_odd(k)?;
    if n == k.zero() {
        return Err(Error::ZeroInput);
    }
    if k.is_square(n)? {
        return Err(Error::SquareInput);
    }
    for r1 in k.nonzero() {
        let r2 = k.sub(n, r1);
        if k.is_square(r1)? && r2 != k.zero() && k.is_square(r2)? {
            return Ok((r1, r2));
        }
    }
    Err(Error::BadArgument(format!("no decomposition of {} found", k.format(n))))
}

/// Whether `e₋(b)[a]` vanishes in the odd localization of `RP̂(F_q)`; expected
/// whenever `a ≡ -b` modulo squares.
pub fn annihilates(tower: &Tower, a: FqElem, b: FqElem) -> Result<bool> {
    let k = tower.field();
    let s = SymbolSum::term(k, GroupRingElement::e_minus(k, &b)?, &a)?;
    Ok(tower.eval_odd(NodeName::RPhat, &s)?.is_zero())
}
