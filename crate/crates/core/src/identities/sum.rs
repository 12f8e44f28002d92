use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fields::Field;
use crate::groupring::GroupRingElement;

/// Formal sum `Σ α_i [x_i]` with group-ring coefficients.
///
/// Like symbols are combined; the symbol `[1]` is kept formally and evaluates to zero.
#[derive(Clone, PartialEq)]
pub struct SymbolSum<F: Field> {
    field: F,
    terms: BTreeMap<F::Elem, GroupRingElement>,
}

impl<F: Field> fmt::Debug for SymbolSum<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(x, c)| format!("({c:?})[{}]", self.field.format_elem(x)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<F: Field> SymbolSum<F> {
    pub fn zero(field: &F) -> Self {
        SymbolSum { field: field.clone(), terms: BTreeMap::new() }
    }

    /// `[x]`.
    pub fn symbol(field: &F, x: &F::Elem) -> Result<Self> {
        Self::term(field, GroupRingElement::one(field.kind()), x)
    }

    /// `α [x]`.
    pub fn term(field: &F, coeff: GroupRingElement, x: &F::Elem) -> Result<Self> {
        if field.is_zero(x) {
            return Err(Error::ZeroInput);
        }
        if coeff.kind() != field.kind() {
            return Err(Error::KindMismatch);
        }
        let mut s = Self::zero(field);
        if !coeff.is_zero() {
            s.terms.insert(x.clone(), coeff);
        }
        Ok(s)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&F::Elem, &GroupRingElement)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, coeff: &GroupRingElement, x: &F::Elem) {
        let e = self.terms.entry(x.clone()).or_insert_with(|| GroupRingElement::zero(coeff.kind()));
        *e = &*e + coeff;
        if e.is_zero() {
            self.terms.remove(x);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut s = self.clone();
        for (x, c) in &o.terms {
            s.add_term(c, x);
        }
        s
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(x, c)| (x.clone(), -c)).collect();
        SymbolSum { field: self.field.clone(), terms }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Left multiplication by a group-ring element.
    pub fn scale(&self, a: &GroupRingElement) -> Self {
        let mut s = Self::zero(&self.field);
        for (x, c) in &self.terms {
            s.add_term(&(a * c), x);
        }
        s
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(GroupRingElement::is_integral)
    }

    pub fn max_log2_den(&self) -> u32 {
        self.terms.values().map(GroupRingElement::max_log2_den).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> Result<Value> {
        let mut terms = Vec::new();
        for (x, c) in &self.terms {
            terms.push(json!({ "coeff": c.to_json(&self.field)?, "arg": self.field.format_elem(x) }));
        }
        Ok(json!({ "field": self.field.name(), "terms": terms }))
    }

    pub fn from_json(field: &F, v: &Value) -> Result<Self> {
        let bad = || Error::Parse("bad symbol sum".into());
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(bad)?;
        let mut s = Self::zero(field);
        for t in terms {
            let arg = t.get("arg").and_then(Value::as_str).ok_or_else(bad)?;
            let x = field.parse_elem(arg)?;
            let c = match t.get("coeff") {
                Some(c) => GroupRingElement::from_json(field, c)?,
                None => GroupRingElement::one(field.kind()),
            };
            s = s.add(&Self::term(field, c, &x)?);
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::GlobalField;

    #[test]
    fn combine_and_round_trip() {
        let q = GlobalField::Rational;
        let x = q.parse_elem("3/7").unwrap();
        let a = GroupRingElement::pf(&q, &q.from_int(-1)).unwrap();
        let s = SymbolSum::term(&q, a.clone(), &x).unwrap().add(&SymbolSum::symbol(&q, &x).unwrap());
        assert_eq!(s.len(), 1);
        let back = SymbolSum::from_json(&q, &s.to_json().unwrap()).unwrap();
        assert_eq!(back, s);
        assert!(s.sub(&s).is_empty());
        assert_eq!(SymbolSum::symbol(&q, &q.from_int(0)).unwrap_err(), Error::ZeroInput);
    }
}
