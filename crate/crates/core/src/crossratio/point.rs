use std::fmt;

use crate::error::{Error, Result};
use crate::fields::Field;

/// A point of `P¹(F)`, normalized to `(a : 1)` or `∞ = (1 : 0)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProjPoint<E> {
    Affine(E),
    Infinity,
}

impl<E: fmt::Debug> fmt::Debug for ProjPoint<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Affine(a) => write!(f, "{a:?}"),
            ProjPoint::Infinity => write!(f, "inf"),
        }
    }
}

impl<E: Clone> ProjPoint<E> {
    pub fn from_homogeneous<F: Field<Elem = E>>(f: &F, a: &E, b: &E) -> Result<Self> {
        match (f.is_zero(a), f.is_zero(b)) {
            (true, true) => Err(Error::ZeroInput),
            (_, true) => Ok(ProjPoint::Infinity),
            _ => Ok(ProjPoint::Affine(f.div(a, b)?)),
        }
    }

    pub fn homogeneous<F: Field<Elem = E>>(&self, f: &F) -> (E, E) {
        match self {
            ProjPoint::Affine(a) => (a.clone(), f.one()),
            ProjPoint::Infinity => (f.one(), f.zero()),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }

    pub fn format<F: Field<Elem = E>>(&self, f: &F) -> String {
        match self {
            ProjPoint::Affine(a) => f.format_elem(a),
            ProjPoint::Infinity => "inf".into(),
        }
    }

    pub fn parse<F: Field<Elem = E>>(f: &F, s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "∞" => Ok(ProjPoint::Infinity),
            t => Ok(ProjPoint::Affine(f.parse_elem(t)?)),
        }
    }
}

/// An element of `SL₂(F)` acting on `P¹(F)` by Möbius transformations.
#[derive(Clone, PartialEq)]
pub struct SL2Elem<F: Field> {
    field: F,
    m: [F::Elem; 4],
}

impl<F: Field> fmt::Debug for SL2Elem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.m.iter().map(|x| self.field.format_elem(x)).collect();
        write!(f, "[[{}, {}], [{}, {}]]", e[0], e[1], e[2], e[3])
    }
}

impl<F: Field> SL2Elem<F> {
    /// `[[a, b], [c, d]]`; the determinant must be 1.
    pub fn new(field: &F, a: F::Elem, b: F::Elem, c: F::Elem, d: F::Elem) -> Result<Self> {
        let det = field.sub(&field.mul(&a, &d), &field.mul(&b, &c));
        if !field.is_one(&det) {
            return Err(Error::BadArgument(format!("determinant is {}, not 1", field.format_elem(&det))));
        }
        Ok(SL2Elem { field: field.clone(), m: [a, b, c, d] })
    }

    pub fn from_ints(field: &F, a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(field, field.from_int(a), field.from_int(b), field.from_int(c), field.from_int(d))
    }

    pub fn identity(field: &F) -> Self {
        SL2Elem { field: field.clone(), m: [field.one(), field.zero(), field.zero(), field.one()] }
    }

    /// `[[-1, 1], [-1, 0]]`, of order 3: `x -> 1 - 1/x`.
    pub fn order_three(field: &F) -> Self {
        Self::from_ints(field, -1, 1, -1, 0).expect("determinant 1")
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn entries(&self) -> &[F::Elem; 4] {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(&self.field)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let f = &self.field;
        let [a, b, c, d] = &self.m;
        let [e, g, h, k] = &o.m;
        let dot = |x: &F::Elem, y: &F::Elem, z: &F::Elem, w: &F::Elem| f.add(&f.mul(x, y), &f.mul(z, w));
        SL2Elem { field: f.clone(), m: [dot(a, e, b, h), dot(a, g, b, k), dot(c, e, d, h), dot(c, g, d, k)] }
    }

    pub fn inverse(&self) -> Self {
        let f = &self.field;
        let [a, b, c, d] = &self.m;
        SL2Elem { field: f.clone(), m: [d.clone(), f.neg(b), f.neg(c), a.clone()] }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity(&self.field);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Exact order, if at most `limit`.
    pub fn order(&self, limit: u64) -> Option<u64> {
        let mut x = self.clone();
        for n in 1..=limit {
            if x.is_identity() {
                return Some(n);
            }
            x = x.mul(self);
        }
        None
    }

    pub fn apply(&self, p: &ProjPoint<F::Elem>) -> ProjPoint<F::Elem> {
        let f = &self.field;
        let (u, v) = p.homogeneous(f);
        let [a, b, c, d] = &self.m;
        let num = f.add(&f.mul(a, &u), &f.mul(b, &v));
        let den = f.add(&f.mul(c, &u), &f.mul(d, &v));
        ProjPoint::from_homogeneous(f, &num, &den).expect("invertible matrix")
    }
}
