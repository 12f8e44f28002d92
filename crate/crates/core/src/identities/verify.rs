//! Exact checks of the module identities in `RP(F_q)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use super::elements::{c_const, d_const, psi};
use super::sum::SymbolSum;
use crate::error::{Error, Result};
use crate::exactalg::GroupElement;
use crate::fields::{Field, FqElem, FqField};
use crate::groupring::{GroupRingElement, SquareClass};
use crate::prebloch::{NodeName, Tower};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    Cocycle,
    CocycleCor(u8),
    Lambda1Psi,
    Df,
    DfNorm,
    Const,
    Order3,
    MinusOne,
    PhiIdentity,
    KksSum,
}

impl Identity {
    pub fn all() -> Vec<Identity> {
        let mut v = vec![Identity::Cocycle];
        v.extend((1..=8).map(Identity::CocycleCor));
        v.extend([
            Identity::Lambda1Psi,
            Identity::Df,
            Identity::DfNorm,
            Identity::Const,
            Identity::Order3,
            Identity::MinusOne,
            Identity::PhiIdentity,
            Identity::KksSum,
        ]);
        v
    }

    pub fn name(self) -> String {
        match self {
            Identity::Cocycle => "cocycle".into(),
            Identity::CocycleCor(k) => format!("cocycle_cor_{k}"),
            Identity::Lambda1Psi => "lambda1_psi".into(),
            Identity::Df => "df".into(),
            Identity::DfNorm => "df_norm".into(),
            Identity::Const => "const".into(),
            Identity::Order3 => "order3".into(),
            Identity::MinusOne => "minus_one".into(),
            Identity::PhiIdentity => "phi_identity".into(),
            Identity::KksSum => "kks_sum".into(),
        }
    }

    /// Whether the identity is stated for `ψ₁` and `ψ₂` separately.
    pub fn uses_index(self) -> bool {
        matches!(self, Identity::Cocycle | Identity::CocycleCor(_) | Identity::Lambda1Psi)
    }

    /// Number of field parameters.
    pub fn arity(self) -> usize {
        match self {
            Identity::Cocycle
            | Identity::CocycleCor(1 | 2 | 6 | 7 | 8)
            | Identity::Const
            | Identity::PhiIdentity => 2,
            Identity::CocycleCor(4 | 5) | Identity::Lambda1Psi | Identity::Df | Identity::DfNorm | Identity::Order3 => 1,
            _ => 0,
        }
    }

    /// Parameters must avoid 0 and 1.
    fn generic_args(self) -> bool {
        matches!(self, Identity::Const | Identity::Order3)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::all()
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Parameters of a single check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub i: Option<u8>,
    pub x: Option<FqElem>,
    pub y: Option<FqElem>,
}

impl Params {
    fn to_json(&self, k: &FqField) -> Value {
        let mut m = serde_json::Map::new();
        if let Some(i) = self.i {
            m.insert("i".into(), json!(i));
        }
        if let Some(x) = self.x {
            m.insert("x".into(), json!(k.format(x)));
        }
        if let Some(y) = self.y {
            m.insert("y".into(), json!(k.format(y)));
        }
        Value::Object(m)
    }
}

/// Outcome of one check: both sides and, for group identities, their difference.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub identity: Identity,
    pub params: Params,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
    pub difference: Option<GroupElement>,
}

impl Verdict {
    pub fn to_json(&self, k: &FqField) -> Value {
        json!({
            "identity": self.identity.name(),
            "params": self.params.to_json(k),
            "holds": self.holds,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "difference": self.difference.as_ref().map(|d| d.to_string()),
        })
    }
}

/// Checks identities in the refined pre-Bloch group of one finite field.
pub struct Verifier<'a> {
    tower: &'a Tower,
    k: FqField,
}

fn need<T: Copy>(v: Option<T>, what: &str) -> Result<T> {
    v.ok_or_else(|| Error::BadArgument(format!("missing parameter {what}")))
}

impl<'a> Verifier<'a> {
    pub fn new(tower: &'a Tower) -> Self {
        Verifier { k: tower.field().clone(), tower }
    }

    fn ev(&self, s: &SymbolSum<FqField>) -> Result<GroupElement> {
        self.tower.eval(NodeName::RP, s)
    }

    fn psi(&self, i: u8, x: FqElem) -> Result<GroupElement> {
        self.ev(&psi(i, &self.k, &x)?)
    }

    fn act(&self, a: &GroupRingElement, x: &GroupElement) -> Result<GroupElement> {
        self.tower.act(NodeName::RP, a, x)
    }

    fn cls(&self, x: FqElem) -> Result<GroupRingElement> {
        GroupRingElement::of(&self.k, &x)
    }

    fn pf(&self, x: FqElem) -> Result<GroupRingElement> {
        GroupRingElement::pf(&self.k, &x)
    }

    fn minus_one(&self) -> FqElem {
        self.k.neg(self.k.one())
    }

    fn group_verdict(&self, id: Identity, params: Params, lhs: GroupElement, rhs: GroupElement) -> Result<Verdict> {
        let d = lhs.sub(&rhs)?;
        Ok(Verdict {
            identity: id,
            params,
            holds: d.is_zero(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            difference: Some(d),
        })
    }

    pub fn verify(&self, id: Identity, params: &Params) -> Result<Verdict> {
        let k = &self.k;
        let p = params.clone();
        let i = if id.uses_index() { need(params.i, "i")? } else { 1 };
        if i != 1 && i != 2 {
            return Err(Error::BadArgument(format!("psi index must be 1 or 2, got {i}")));
        }
        let x = || need(params.x, "x");
        let y = || need(params.y, "y");
        for v in [params.x, params.y].into_iter().flatten() {
            if v == k.zero() {
                return Err(Error::ZeroInput);
            }
            if id.generic_args() && v == k.one() {
                return Err(Error::BadArgument("parameter must differ from 1".into()));
            }
        }
        let g = self.tower.refined().group();
        let zero = g.zero();
        let m1 = self.minus_one();
        let sq = |a: FqElem| k.mul(a, a);
        match id {
            Identity::Cocycle => {
                let (x, y) = (x()?, y()?);
                let lhs = self.psi(i, k.mul(x, y))?;
                let rhs = self.act(&self.cls(x)?, &self.psi(i, y)?)?.add(&self.psi(i, x)?)?;
                self.group_verdict(id, p, lhs, rhs)
            }
            Identity::CocycleCor(n) => match n {
                1 => {
                    let (x, y) = (x()?, y()?);
                    let lhs = self.psi(i, k.mul(x, sq(y)))?;
                    let rhs = self.psi(i, x)?.add(&self.psi(i, sq(y))?)?;
                    self.group_verdict(id, p, lhs, rhs)
                }
                2 => {
                    let (x, y) = (x()?, y()?);
                    let lhs = self.act(&self.pf(x)?, &self.psi(i, sq(y))?)?;
                    self.group_verdict(id, p, lhs, zero)
                }
                3 => {
                    let lhs = self.psi(i, m1)?.scale(&BigInt::from(2));
                    self.group_verdict(id, p, lhs, zero)
                }
                4 => {
                    let x = x()?;
                    let lhs = self.psi(i, sq(x))?;
                    let rhs = self.act(&self.pf(x)?, &self.psi(i, m1)?)?.neg();
                    self.group_verdict(id, p, lhs, rhs)
                }
                5 => {
                    let x = x()?;
                    let v = self.psi(i, sq(x))?;
                    // also zero outright when -1 is a square
                    let lhs = if k.is_square(m1)? { v } else { v.scale(&BigInt::from(2)) };
                    self.group_verdict(id, p, lhs, zero)
                }
                6 => {
                    let (x, y) = (x()?, y()?);
                    let a = &self.pf(x)? * &self.pf(y)?;
                    let lhs = self.act(&a, &self.psi(i, m1)?)?;
                    self.group_verdict(id, p, lhs, zero)
                }
                7 => {
                    let (x, y) = (x()?, y()?);
                    let v = self.act(&self.pf(x)?, &self.psi(i, y)?)?;
                    let lhs = self.act(&self.cls(m1)?, &v)?;
                    self.group_verdict(id, p, lhs, v)
                }
                8 => {
                    let (x, y) = (x()?, y()?);
                    let eps = BigInt::from(if k.is_square(m1)? { 1 } else { 2 });
                    let lhs = self.psi(i, k.mul(x, sq(y)))?.scale(&eps);
                    let rhs = self.psi(i, x)?.scale(&eps);
                    self.group_verdict(id, p, lhs, rhs)
                }
                _ => Err(Error::UnknownIdentity(id.name())),
            },
            Identity::Lambda1Psi => self.lambda1_psi(p, i, x()?),
            Identity::Df => {
                let x = x()?;
                let c = self.tower.c(NodeName::RP)?;
                let lhs = self.act(&self.pf(x)?, &c)?;
                let rhs = self.psi(1, x)?.sub(&self.psi(2, x)?)?;
                self.group_verdict(id, p, lhs, rhs)
            }
            Identity::DfNorm => {
                // every element of a finite field is a norm from F(ζ₃)
                let x = x()?;
                let c = self.tower.c(NodeName::RP)?;
                let lhs = self.act(&self.pf(x)?, &c)?;
                self.group_verdict(id, p, lhs, zero)
            }
            Identity::Const => {
                let (x, y) = (x()?, y()?);
                let lhs = self.ev(&c_const(k, &x)?)?;
                let rhs = self.ev(&c_const(k, &y)?)?;
                self.group_verdict(id, p, lhs, rhs)
            }
            Identity::Order3 => {
                let x = x()?;
                let d = self.ev(&d_const(k, &x)?)?;
                let c = self.tower.c(NodeName::RP)?;
                let mut v = self.group_verdict(id, p, d.scale(&BigInt::from(3)), zero)?;
                v.holds &= d == c;
                Ok(v)
            }
            Identity::MinusOne => {
                let b = self.tower.b(NodeName::RP)?;
                let lhs = self.act(&self.cls(m1)?, &b)?;
                self.group_verdict(id, p, lhs, b)
            }
            Identity::PhiIdentity => {
                let (x, y) = (x()?, y()?);
                let phi = |t: FqElem| k.add(k.sub(k.mul(t, t), t), k.one());
                let s = k.sub(k.add(x, y), k.one());
                if s == k.zero() {
                    return Err(Error::BadArgument("phi identity needs x + y != 1".into()));
                }
                let lhs = k.mul(phi(x), phi(y));
                let arg = k.div(k.sub(k.mul(x, y), k.one()), s)?;
                let rhs = k.mul(k.mul(s, s), phi(arg));
                Ok(Verdict {
                    identity: id,
                    params: p,
                    holds: lhs == rhs,
                    lhs: k.format(lhs),
                    rhs: k.format(rhs),
                    difference: None,
                })
            }
            Identity::KksSum => {
                let holds = self.tower.check_kk()?;
                Ok(Verdict {
                    identity: id,
                    params: p,
                    holds,
                    lhs: "K1+K2".into(),
                    rhs: "K1+I*c (direct)".into(),
                    difference: None,
                })
            }
        }
    }

    /// `λ₁(ψᵢ(x)) = -p₊(-1)<<x>>`, compared in the `I²` coordinate of the target.
    fn lambda1_psi(&self, p: Params, i: u8, x: FqElem) -> Result<Verdict> {
        let k = &self.k;
        let rhs = -&(&GroupRingElement::p_plus(k, &self.minus_one())? * &self.pf(x)?);
        let refined = self.tower.refined();
        let img = refined.lambda().apply(&self.psi(i, x)?)?;
        let lhs_iota = if refined.classes() == 2 { img.coords()[0].clone() } else { BigInt::zero() };
        // I² is spanned by iota = 2 - 2<u>; an element a·1 + b·<u> of I² is (a/2)·iota
        let a = rhs.coefficient(&SquareClass::identity(k.kind()));
        let aug_zero = rhs.augmentation().is_zero();
        let rhs_iota = a.to_integer().map(|v| v / 2);
        let holds = aug_zero && rhs_iota.as_ref() == Some(&lhs_iota);
        Ok(Verdict {
            identity: Identity::Lambda1Psi,
            params: p,
            holds,
            lhs: format!("{lhs_iota}*iota"),
            rhs: format!("{:?}", rhs),
            difference: None,
        })
    }

    /// Parameter tuples covering every admissible choice for the identity.
    pub fn exhaustive_params(&self, id: Identity) -> Vec<Params> {
        let k = &self.k;
        let elems: Vec<FqElem> = k
            .nonzero()
            .filter(|&a| !(id.generic_args() && a == k.one()))
            .collect();
        let indices: Vec<Option<u8>> = if id.uses_index() { vec![Some(1), Some(2)] } else { vec![None] };
        let mut out = Vec::new();
        for &i in &indices {
            match id.arity() {
                0 => out.push(Params { i, x: None, y: None }),
                1 => out.extend(elems.iter().map(|&x| Params { i, x: Some(x), y: None })),
                _ => {
                    for &x in &elems {
                        for &y in &elems {
                            if id == Identity::PhiIdentity && k.add(x, y) == k.one() {
                                continue;
                            }
                            out.push(Params { i, x: Some(x), y: Some(y) });
                        }
                    }
                }
            }
        }
        out
    }

    /// Runs the identity over all admissible parameters and returns the failures.
    pub fn exhaustive(&self, id: Identity) -> Result<SuiteResult> {
        let params = self.exhaustive_params(id);
        let mut failures = Vec::new();
        for p in &params {
            let v = self.verify(id, p)?;
            if !v.holds {
                failures.push(v);
            }
        }
        Ok(SuiteResult { identity: id, checked: params.len(), failures })
    }
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub identity: Identity,
    pub checked: usize,
    pub failures: Vec<Verdict>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in Identity::all() {
            assert_eq!(id.name().parse::<Identity>().unwrap(), id);
        }
        assert!(matches!("nope".parse::<Identity>(), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn df_at_five() {
        let k = FqField::prime(5).unwrap();
        let t = Tower::build(&k).unwrap();
        let v = Verifier::new(&t);
        let r = v.verify(Identity::Df, &Params { x: Some(k.from_int(2)), ..Default::default() }).unwrap();
        assert!(r.holds);
        for id in Identity::all() {
            assert!(v.exhaustive(id).unwrap().passed(), "{id}");
        }
    }
}
