use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::class::{FieldKind, SquareClass};
use super::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::fields::Field;

/// Element of `Z[1/2][F^x/(F^x)^2]`; integral elements are those of `R_F`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    kind: FieldKind,
    terms: BTreeMap<SquareClass, Dyadic>,
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(c, d)| format!("{d}*{c:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl GroupRingElement {
    pub fn zero(kind: FieldKind) -> Self {
        GroupRingElement { kind, terms: BTreeMap::new() }
    }

    pub fn one(kind: FieldKind) -> Self {
        Self::scalar(kind, Dyadic::one())
    }

    pub fn scalar(kind: FieldKind, d: Dyadic) -> Self {
        let mut e = Self::zero(kind);
        e.push(SquareClass::identity(kind), d);
        e
    }

    pub fn int(kind: FieldKind, n: i64) -> Self {
        Self::scalar(kind, Dyadic::from_int(n))
    }

    /// The basis element of a square class.
    pub fn class(kind: FieldKind, c: SquareClass) -> Result<Self> {
        if !c.matches(kind) {
            return Err(Error::KindMismatch);
        }
        let c = if kind.trivial_classes() { SquareClass::identity(kind) } else { c };
        let mut e = Self::zero(kind);
        e.push(c, Dyadic::one());
        Ok(e)
    }

    /// `<a>`.
    pub fn of<F: Field>(field: &F, a: &F::Elem) -> Result<Self> {
        Self::class(field.kind(), field.square_class(a)?)
    }

    /// `<<a>> = <a> - 1`.
    pub fn pf<F: Field>(field: &F, a: &F::Elem) -> Result<Self> {
        Ok(&Self::of(field, a)? - &Self::one(field.kind()))
    }

    /// `p_+(a) = 1 + <a>`.
    pub fn p_plus<F: Field>(field: &F, a: &F::Elem) -> Result<Self> {
        Ok(&Self::one(field.kind()) + &Self::of(field, a)?)
    }

    /// `p_-(a) = 1 - <a>`.
    pub fn p_minus<F: Field>(field: &F, a: &F::Elem) -> Result<Self> {
        Ok(&Self::one(field.kind()) - &Self::of(field, a)?)
    }

    /// `e_+(a) = p_+(a) / 2`.
    pub fn e_plus<F: Field>(field: &F, a: &F::Elem) -> Result<Self> {
        Ok(Self::p_plus(field, a)?.scale(&Dyadic::half()))
    }

    /// `e_-(a) = p_-(a) / 2`.
    pub fn e_minus<F: Field>(field: &F, a: &F::Elem) -> Result<Self> {
        Ok(Self::p_minus(field, a)?.scale(&Dyadic::half()))
    }

    fn push(&mut self, c: SquareClass, d: Dyadic) {
        if d.is_zero() {
            return;
        }
        let entry = self.terms.entry(c).or_default();
        *entry = &*entry + &d;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn terms(&self) -> &BTreeMap<SquareClass, Dyadic> {
        &self.terms
    }

    pub fn coefficient(&self, c: &SquareClass) -> Dyadic {
        self.terms.get(c).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(Dyadic::is_integer)
    }

    /// Largest denominator exponent among the coefficients.
    pub fn max_log2_den(&self) -> u32 {
        self.terms.values().map(Dyadic::log2_den).max().unwrap_or(0)
    }

    pub fn augmentation(&self) -> Dyadic {
        self.terms.values().fold(Dyadic::zero(), |a, b| &a + b)
    }

    pub fn scale(&self, d: &Dyadic) -> Self {
        let mut e = Self::zero(self.kind);
        for (c, v) in &self.terms {
            e.push(c.clone(), v * d);
        }
        e
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        if self.kind != o.kind {
            return Err(Error::KindMismatch);
        }
        let mut e = self.clone();
        for (c, v) in &o.terms {
            e.push(c.clone(), v.clone());
        }
        Ok(e)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        if self.kind != o.kind {
            return Err(Error::KindMismatch);
        }
        let mut e = Self::zero(self.kind);
        for (c1, v1) in &self.terms {
            for (c2, v2) in &o.terms {
                e.push(c1.mul(c2)?, v1 * v2);
            }
        }
        Ok(e)
    }

    /// JSON list of `{class, num, den2}` with classes written as representatives.
    pub fn to_json<F: Field>(&self, field: &F) -> Result<Value> {
        let mut out = Vec::new();
        for (c, v) in &self.terms {
            let rep = field.class_representative(c)?;
            out.push(json!({
                "class": field.format_elem(&rep),
                "num": v.numerator().to_string(),
                "den2": v.log2_den(),
            }));
        }
        Ok(Value::Array(out))
    }

    pub fn from_json<F: Field>(field: &F, v: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("bad group ring element {v}"));
        let arr = v.as_array().ok_or_else(bad)?;
        let mut e = Self::zero(field.kind());
        for t in arr {
            let class = t.get("class").and_then(Value::as_str).ok_or_else(bad)?;
            let num: BigInt = match t.get("num") {
                Some(Value::String(s)) => s.parse().map_err(|_| bad())?,
                Some(Value::Number(n)) => BigInt::from(n.as_i64().ok_or_else(bad)?),
                _ => return Err(bad()),
            };
            let den2 = t.get("den2").and_then(Value::as_u64).unwrap_or(0) as u32;
            let a = field.parse_elem(class)?;
            let c = Self::of(field, &a)?;
            e = &e + &c.scale(&Dyadic::new(num, den2));
        }
        Ok(e)
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, o: &GroupRingElement) -> GroupRingElement {
        self.checked_add(o).expect("group ring elements of different kinds")
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, o: &GroupRingElement) -> GroupRingElement {
        self + &(-o)
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        self.scale(&Dyadic::from_int(-1))
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, o: &GroupRingElement) -> GroupRingElement {
        self.checked_mul(o).expect("group ring elements of different kinds")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{FqField, GlobalField};

    #[test]
    fn idempotents() {
        let q = GlobalField::Rational;
        let (a, b) = (q.from_int(-3), q.from_int(10));
        let em = GroupRingElement::e_minus(&q, &a).unwrap();
        let ep = GroupRingElement::e_plus(&q, &a).unwrap();
        assert_eq!(&em * &em, em);
        assert!((&em * &ep).is_zero());
        assert_eq!(&em + &ep, GroupRingElement::one(q.kind()));
        let pa = GroupRingElement::pf(&q, &a).unwrap();
        let pb = GroupRingElement::pf(&q, &b).unwrap();
        let ab = q.mul(&a, &b);
        let expect = &(&(&GroupRingElement::of(&q, &ab).unwrap() - &GroupRingElement::of(&q, &a).unwrap())
            - &GroupRingElement::of(&q, &b).unwrap())
            + &GroupRingElement::one(q.kind());
        assert_eq!(&pa * &pb, expect);
        let pp = GroupRingElement::p_plus(&q, &a).unwrap();
        let pm = GroupRingElement::p_minus(&q, &a).unwrap();
        assert!((&pp * &pm).is_zero());
    }

    #[test]
    fn json_round_trip() {
        let k = FqField::prime(7).unwrap();
        let x = &GroupRingElement::e_minus(&k, &k.from_int(3)).unwrap() + &GroupRingElement::int(k.kind(), 5);
        let j = x.to_json(&k).unwrap();
        assert_eq!(GroupRingElement::from_json(&k, &j).unwrap(), x);
        let k8 = FqField::of_order(8).unwrap();
        let c = GroupRingElement::of(&k8, &k8.from_code(5).unwrap()).unwrap();
        assert_eq!(c, GroupRingElement::one(k8.kind()));
    }
}
