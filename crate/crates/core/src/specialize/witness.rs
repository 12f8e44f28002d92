use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::map::SpecializationMap;
use crate::error::{Error, Result};
use crate::exactalg::OddElement;
use crate::fields::factor::is_prime_u64;
use crate::fields::{Field, GlobalField, Place};
use crate::groupring::GroupRingElement;
use crate::identities::{d_const, SymbolSum};
use crate::prebloch::NodeName;

/// The fixed point at which `D` is evaluated to realize the order-3 class.
pub const D_POINT: i64 = 2;

fn check_primes(primes: &[u64]) -> Result<()> {
    if primes.is_empty() {
        return Err(Error::BadArgument("the set of primes is empty".into()));
    }
    let mut seen = BTreeSet::new();
    for &p in primes {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if !seen.insert(p) {
            return Err(Error::BadArgument(format!("prime {p} is repeated")));
        }
    }
    Ok(())
}

/// `1 + #{p ∈ S : p ≡ -1 mod 3}`, the lower bound for the 3-rank of `RB` of the `S`-integers.
pub fn rank_bound(primes: &[u64]) -> Result<usize> {
    check_primes(primes)?;
    Ok(1 + primes.iter().filter(|&&p| p % 3 == 2).count())
}

/// `𝔻 = -D(2)` over Q.
pub fn order3_sum() -> Result<SymbolSum<GlobalField>> {
    let q = GlobalField::Rational;
    Ok(d_const(&q, &q.from_int(D_POINT))?.neg())
}

/// Local images of the sums `e₋(w)·𝔻`, `w ∈ S`, and of the kernel element
/// `∏ e₊(w)·𝔻`.
#[derive(Clone, Debug)]
pub struct WitnessReport {
    pub places: Vec<u64>,
    /// `matrix[v][w]`: `e₋(w)·𝔻` at `v` with `ε = -1`, in the odd part of `RP̂(k_v)`.
    pub matrix: Vec<Vec<OddElement>>,
    pub expected: Vec<Vec<OddElement>>,
    /// Order of `c_{k_v}` in the odd part of `RP̂(k_v)`.
    pub c_orders: Vec<BigInt>,
    /// `∏ e₊(w)·𝔻` at each `v` with `ε = -1`; expected to vanish.
    pub kernel_images: Vec<OddElement>,
    /// The same element at each `v` with `ε = +1` into the odd part of `RedP(k_v)`.
    pub kernel_detect: Vec<OddElement>,
    pub kernel_expected: Vec<OddElement>,
    pub rank_bound: usize,
}

impl WitnessReport {
    pub fn matrix_holds(&self) -> bool {
        self.matrix == self.expected
    }

    pub fn kernel_holds(&self) -> bool {
        self.kernel_images.iter().all(OddElement::is_zero) && self.kernel_detect == self.kernel_expected
    }

    pub fn holds(&self) -> bool {
        self.matrix_holds() && self.kernel_holds()
    }

    pub fn to_json(&self) -> Value {
        let show = |row: &[OddElement]| row.iter().map(|e| e.to_string()).collect::<Vec<_>>();
        json!({
            "places": self.places,
            "matrix": self.matrix.iter().map(|r| show(r)).collect::<Vec<_>>(),
            "expected": self.expected.iter().map(|r| show(r)).collect::<Vec<_>>(),
            "c_orders": self.c_orders.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
            "kernel_images": show(&self.kernel_images),
            "kernel_detect": show(&self.kernel_detect),
            "kernel_expected": show(&self.kernel_expected),
            "matrix_holds": self.matrix_holds(),
            "kernel_holds": self.kernel_holds(),
            "rank_bound": self.rank_bound,
        })
    }
}

pub fn witness_matrix(primes: &[u64]) -> Result<WitnessReport> {
    let rank_bound = rank_bound(primes)?;
    let q = GlobalField::Rational;
    let d = order3_sum()?;
    let rows: Vec<SymbolSum<GlobalField>> = primes
        .iter()
        .map(|&w| Ok(d.scale(&GroupRingElement::e_minus(&q, &q.from_int(w as i64))?)))
        .collect::<Result<_>>()?;
    let mut kernel = d.clone();
    for &w in primes {
        kernel = kernel.scale(&GroupRingElement::e_plus(&q, &q.from_int(w as i64))?);
    }

    let mut matrix = Vec::new();
    let mut expected = Vec::new();
    let mut c_orders = Vec::new();
    let mut kernel_images = Vec::new();
    let mut kernel_detect = Vec::new();
    let mut kernel_expected = Vec::new();
    for &v in primes {
        let place = Place::prime(v)?;
        let pi = q.from_int(v as i64);
        let minus = SpecializationMap::new(&place, &pi, -1, NodeName::RPhat)?;
        let plus = SpecializationMap::with_tower(&place, &pi, 1, NodeName::RedP, minus.tower().clone())?;
        let c = minus.odd().map(&minus.tower().c(NodeName::RPhat)?)?;
        let c_red = plus.odd().map(&plus.tower().c(NodeName::RedP)?)?;
        c_orders.push(c.order().expect("finite group"));
        let mut row = Vec::new();
        let mut want = Vec::new();
        for (&w, sum) in primes.iter().zip(&rows) {
            row.push(minus.specialize_odd(sum)?);
            want.push(if v == w { c.neg() } else { minus.odd().zero() });
        }
        matrix.push(row);
        expected.push(want);
        kernel_images.push(minus.specialize_odd(&kernel)?);
        kernel_detect.push(plus.specialize_odd(&kernel)?);
        kernel_expected.push(c_red.neg());
    }
    Ok(WitnessReport {
        places: primes.to_vec(),
        matrix,
        expected,
        c_orders,
        kernel_images,
        kernel_detect,
        kernel_expected,
        rank_bound,
    })
}
