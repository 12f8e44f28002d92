//! Localization of a presented group away from 2.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::group::{GroupElement, PresentedGroup};
use crate::error::{Error, Result};
use crate::groupring::Dyadic;

/// `G ⊗ Z[1/2]`: odd torsion parts of the invariant factors plus a free part
/// with dyadic coordinates.
pub struct OddLocalized {
    source: Arc<PresentedGroup>,
    // (Smith index, odd part > 1)
    torsion: Vec<(usize, BigInt)>,
    free: Vec<usize>,
}

impl fmt::Debug for OddLocalized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OddLocalized(torsion={:?}, free_rank={})", self.invariant_factors(), self.free.len())
    }
}

fn odd_part(d: &BigInt) -> BigInt {
    let mut d = d.clone();
    while !d.is_zero() && d.is_even() {
        d /= 2;
    }
    d
}

impl OddLocalized {
    pub fn new(source: &Arc<PresentedGroup>) -> Arc<Self> {
        let mut torsion = Vec::new();
        let mut free = Vec::new();
        for i in 0..source.n_gens() {
            let d = source.smith_modulus(i);
            if d.is_zero() {
                free.push(i);
            } else {
                let o = odd_part(&d);
                if !o.is_one() {
                    torsion.push((i, o));
                }
            }
        }
        Arc::new(OddLocalized { source: source.clone(), torsion, free })
    }

    pub fn source(&self) -> &Arc<PresentedGroup> {
        &self.source
    }

    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.torsion.iter().map(|(_, o)| o.clone()).collect()
    }

    pub fn free_rank(&self) -> usize {
        self.free.len()
    }

    pub fn order(&self) -> Option<BigInt> {
        if self.free.is_empty() {
            Some(self.torsion.iter().map(|(_, o)| o).product())
        } else {
            None
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free.is_empty() && self.torsion.is_empty()
    }

    pub fn zero(self: &Arc<Self>) -> OddElement {
        OddElement {
            group: self.clone(),
            torsion: vec![BigInt::zero(); self.torsion.len()],
            free: vec![Dyadic::zero(); self.free.len()],
        }
    }

    /// Image of an element of the source group.
    pub fn map(self: &Arc<Self>, x: &GroupElement) -> Result<OddElement> {
        if !Arc::ptr_eq(x.group(), &self.source) {
            return Err(Error::ParentMismatch);
        }
        let y = x.invariant_coords();
        let torsion = self.torsion.iter().map(|(i, o)| y[*i].mod_floor(o)).collect();
        let free = self.free.iter().map(|&i| Dyadic::from_int(y[i].clone())).collect();
        Ok(OddElement { group: self.clone(), torsion, free })
    }

    /// Generators of the torsion and free parts, in that order.
    pub fn generators(self: &Arc<Self>) -> Vec<OddElement> {
        let mut out = Vec::new();
        for k in 0..self.torsion.len() {
            let mut e = self.zero();
            e.torsion[k] = BigInt::one();
            out.push(e);
        }
        for k in 0..self.free.len() {
            let mut e = self.zero();
            e.free[k] = Dyadic::one();
            out.push(e);
        }
        out
    }
}

/// Element of an odd localization.
#[derive(Clone)]
pub struct OddElement {
    group: Arc<OddLocalized>,
    torsion: Vec<BigInt>,
    free: Vec<Dyadic>,
}

impl PartialEq for OddElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.torsion == other.torsion && self.free == other.free
    }
}

impl Eq for OddElement {}

impl fmt::Debug for OddElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for OddElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .torsion
            .iter()
            .zip(&self.group.torsion)
            .map(|(c, (_, o))| format!("{c} mod {o}"))
            .collect();
        parts.extend(self.free.iter().map(|d| d.to_string()));
        write!(f, "[{}]", parts.join(", "))
    }
}

impl OddElement {
    pub fn group(&self) -> &Arc<OddLocalized> {
        &self.group
    }

    pub fn torsion_coords(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn free_coords(&self) -> &[Dyadic] {
        &self.free
    }

    fn same(&self, o: &OddElement) -> Result<()> {
        if Arc::ptr_eq(&self.group, &o.group) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn add(&self, o: &OddElement) -> Result<OddElement> {
        self.same(o)?;
        let torsion = self
            .torsion
            .iter()
            .zip(&o.torsion)
            .zip(&self.group.torsion)
            .map(|((a, b), (_, m))| (a + b).mod_floor(m))
            .collect();
        let free = self.free.iter().zip(&o.free).map(|(a, b)| a + b).collect();
        Ok(OddElement { group: self.group.clone(), torsion, free })
    }

    pub fn neg(&self) -> OddElement {
        self.scale(&Dyadic::from_int(-1))
    }

    pub fn sub(&self, o: &OddElement) -> Result<OddElement> {
        self.add(&o.neg())
    }

    /// Multiplication by a dyadic rational.
    pub fn scale(&self, d: &Dyadic) -> OddElement {
        let k = d.log2_den();
        let two_inv = |m: &BigInt| -> BigInt {
            // inverse of 2^k modulo the odd number m
            let two = BigInt::from(2).modpow(&BigInt::from(k), m);
            let e = two.extended_gcd(m);
            e.x.mod_floor(m)
        };
        let torsion = self
            .torsion
            .iter()
            .zip(&self.group.torsion)
            .map(|(c, (_, m))| (c * d.numerator() * two_inv(m)).mod_floor(m))
            .collect();
        let free = self.free.iter().map(|c| c * d).collect();
        OddElement { group: self.group.clone(), torsion, free }
    }

    pub fn div_pow2(&self, k: u32) -> OddElement {
        self.scale(&Dyadic::new(BigInt::one(), k))
    }

    pub fn is_zero(&self) -> bool {
        self.torsion.iter().all(|c| c.is_zero()) && self.free.iter().all(|c| c.is_zero())
    }

    pub fn order(&self) -> Option<BigInt> {
        if self.free.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut ord = BigInt::one();
        for (c, (_, m)) in self.torsion.iter().zip(&self.group.torsion) {
            ord = ord.lcm(&(m / m.gcd(c)));
        }
        Some(ord)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn localizations() {
        let z12 = PresentedGroup::cyclic(12);
        let l = OddLocalized::new(&z12);
        assert_eq!(l.invariant_factors(), vec![BigInt::from(3)]);
        let x = l.map(&z12.gen(0)).unwrap();
        assert_eq!(x.order(), Some(BigInt::from(3)));
        let h = x.div_pow2(1);
        assert_eq!(h.add(&h).unwrap(), x);

        assert!(OddLocalized::new(&PresentedGroup::cyclic(8)).is_trivial());

        let z = PresentedGroup::free(1);
        let lz = OddLocalized::new(&z);
        let q = lz.map(&z.gen(0)).unwrap().div_pow2(2);
        assert_eq!(q.free_coords()[0].to_string(), "1/4");
    }
}
