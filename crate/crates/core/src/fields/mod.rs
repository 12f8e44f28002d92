//! Finite fields, Q and F_q(t), their places, residues and square classes.

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::groupring::{FieldKind, SquareClass};

pub mod factor;
pub mod fq;
pub mod global;
pub mod place;
pub mod poly;

pub use fq::{FqElem, FqField};
pub use global::{GlobalElem, GlobalField, RatFunc};
pub use place::{Place, PlaceDatum};
pub use poly::Poly;

/// Operations shared by every coefficient field.
pub trait Field: Clone + PartialEq + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + Ord + Debug + Send + Sync;

    fn kind(&self) -> FieldKind;
    fn name(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn square_class(&self, a: &Self::Elem) -> Result<SquareClass>;
    /// A fixed element of the given class.
    fn class_representative(&self, c: &SquareClass) -> Result<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

impl Field for FqField {
    type Elem = FqElem;

    fn kind(&self) -> FieldKind {
        FieldKind::Finite { p: self.p(), f: self.f() }
    }

    fn name(&self) -> String {
        FqField::name(self)
    }

    fn zero(&self) -> FqElem {
        FqField::zero(self)
    }

    fn one(&self) -> FqElem {
        FqField::one(self)
    }

    fn from_int(&self, n: i64) -> FqElem {
        FqField::from_int(self, n)
    }

    fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        FqField::add(self, *a, *b)
    }

    fn neg(&self, a: &FqElem) -> FqElem {
        FqField::neg(self, *a)
    }

    fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        FqField::mul(self, *a, *b)
    }

    fn inv(&self, a: &FqElem) -> Result<FqElem> {
        FqField::inv(self, *a)
    }

    fn is_zero(&self, a: &FqElem) -> bool {
        a.0 == 0
    }

    fn square_class(&self, a: &FqElem) -> Result<SquareClass> {
        Ok(SquareClass::Finite(!self.is_square(*a)?))
    }

    fn class_representative(&self, c: &SquareClass) -> Result<FqElem> {
        match c {
            SquareClass::Finite(false) => Ok(FqField::one(self)),
            SquareClass::Finite(true) => self
                .smallest_nonsquare()
                .ok_or_else(|| Error::BadArgument("no nonsquares in characteristic 2".into())),
            _ => Err(Error::KindMismatch),
        }
    }

    fn format_elem(&self, a: &FqElem) -> String {
        self.format(*a)
    }

    fn parse_elem(&self, s: &str) -> Result<FqElem> {
        self.parse(s)
    }
}
