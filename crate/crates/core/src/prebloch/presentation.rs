use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::{GroupElement, GroupHom, IntMatrix, Kernel, OddElement, OddLocalized, PresentedGroup};
use crate::fields::{Field, FqElem, FqField};
use crate::groupring::{GroupRingElement, SquareClass};
use crate::identities::{relator_classical, relator_refined, SymbolSum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Refined,
    Classical,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Refined => "refined",
            Flavor::Classical => "classical",
        }
    }
}

/// `RP(F_q)` or `P(F_q)` as a presented group, with the Bloch-Wigner map into
/// `I^2 ⊕ AS^2` (refined) or `AS^2` (classical).
///
/// Generators are `<g>[x]` for `x = w^k`, `k = 1..q-2`, with `w` the fixed
/// primitive element; the index is `(k-1)*classes + g`. For `q = 2` there are
/// no symbols and a single extra generator `b`.
#[derive(Debug)]
pub struct PreBlochPresentation {
    field: FqField,
    flavor: Flavor,
    classes: usize,
    index: HashMap<FqElem, usize>,
    symbols: Vec<FqElem>,
    group: Arc<PresentedGroup>,
    target: Arc<PresentedGroup>,
    lambda: GroupHom,
    kernel: Kernel,
    odd: Arc<OddLocalized>,
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

impl PreBlochPresentation {
    pub fn build(field: &FqField, flavor: Flavor) -> Result<Self> {
        let q = field.q();
        let odd = q % 2 == 1;
        let classes = if odd && flavor == Flavor::Refined { 2 } else { 1 };
        let symbols: Vec<FqElem> = (1..q.saturating_sub(1)).map(|k| field.exp(k)).collect();
        let index: HashMap<FqElem, usize> = symbols.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let extra = usize::from(q == 2);
        let n = symbols.len() * classes + extra;

        let action = if classes == 2 {
            let mut a = IntMatrix::zeros(n, n);
            for s in 0..symbols.len() {
                a.set(2 * s, 2 * s + 1, big(1));
                a.set(2 * s + 1, 2 * s, big(1));
            }
            vec![a]
        } else {
            Vec::new()
        };

        let mut relators: Vec<Vec<BigInt>> = Vec::new();
        for x in &symbols {
            for y in &symbols {
                if x == y {
                    continue;
                }
                let s = match flavor {
                    Flavor::Refined => relator_refined(field, x, y)?,
                    Flavor::Classical => relator_classical(field, x, y)?,
                };
                let v = coords_raw(field, &index, classes, &s, n)?;
                if classes == 2 {
                    relators.push(action[0].apply(&v)?);
                }
                relators.push(v);
            }
        }
        match (q, classes) {
            (2, _) => {
                let mut r = vec![BigInt::zero(); n];
                r[0] = big(3);
                relators.push(r);
            }
            (3, 2) => relators.push(vec![big(2), big(2)]),
            (3, 1) => relators.push(vec![big(4)]),
            _ => {}
        }
        relators.retain(|r| r.iter().any(|c| !c.is_zero()));
        let group = PresentedGroup::new(n, relators, action)?;

        // target: [iota, w∘w] refined, [w∘w] classical; AS^2 vanishes for even q
        let (target, rows) = match (odd, classes) {
            (false, _) => (PresentedGroup::trivial(), 0),
            (true, 2) => {
                let act = IntMatrix::from_i64(2, 2, &[-1, 0, 0, 1])?;
                (PresentedGroup::new(2, vec![vec![big(0), big(2)]], vec![act])?, 2)
            }
            (true, _) => (PresentedGroup::cyclic(2), 1),
        };
        let mut m = IntMatrix::zeros(rows, n);
        if odd {
            for (s, &x) in symbols.iter().enumerate() {
                let omx = field.sub(field.one(), x);
                let ns = !field.is_square(x)? && !field.is_square(omx)?;
                let as2 = (field.dlog(x)? * field.dlog(omx)?) % 2;
                for g in 0..classes {
                    let col = s * classes + g;
                    if classes == 2 {
                        if ns {
                            m.set(0, col, big(if g == 0 { 1 } else { -1 }));
                        }
                        m.set(1, col, big(as2 as i64));
                    } else {
                        m.set(0, col, big(as2 as i64));
                    }
                }
            }
        }
        let lambda = GroupHom::new(group.clone(), target.clone(), m)?;
        let kernel = lambda.kernel()?;
        Ok(PreBlochPresentation {
            field: field.clone(),
            flavor,
            classes,
            index,
            symbols,
            odd: OddLocalized::new(&group),
            group,
            target,
            lambda,
            kernel,
        })
    }

    pub fn field(&self) -> &FqField {
        &self.field
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Number of square classes acting on the generators (1 or 2).
    pub fn classes(&self) -> usize {
        self.classes
    }

    pub fn group(&self) -> &Arc<PresentedGroup> {
        &self.group
    }

    pub fn target(&self) -> &Arc<PresentedGroup> {
        &self.target
    }

    /// `Λ` (refined) or `λ` (classical).
    pub fn lambda(&self) -> &GroupHom {
        &self.lambda
    }

    pub fn bloch(&self) -> &Kernel {
        &self.kernel
    }

    pub fn bloch_group(&self) -> &Arc<PresentedGroup> {
        &self.kernel.group
    }

    pub fn odd(&self) -> &Arc<OddLocalized> {
        &self.odd
    }

    /// Symbols `x ≠ 1` in generator order.
    pub fn symbols(&self) -> &[FqElem] {
        &self.symbols
    }

    /// Generator index of `<g>[x]`, `None` for `x = 1`.
    pub fn gen_index(&self, x: FqElem, class: usize) -> Option<usize> {
        self.index.get(&x).map(|s| s * self.classes + class.min(self.classes - 1))
    }

    /// The distinguished generator of `RP(F_2)`.
    pub fn small_generator(&self) -> Option<GroupElement> {
        (self.field.q() == 2).then(|| self.group.gen(0))
    }

    /// Generator coordinates of an integral symbol sum.
    pub fn coords(&self, s: &SymbolSum<FqField>) -> Result<Vec<BigInt>> {
        coords_raw(&self.field, &self.index, self.classes, s, self.group.n_gens())
    }

    /// Class of a symbol sum; coefficients must be integral.
    pub fn eval(&self, s: &SymbolSum<FqField>) -> Result<GroupElement> {
        self.group.elem(self.coords(s)?)
    }

    /// Class of a symbol sum with dyadic coefficients after inverting 2.
    pub fn eval_odd(&self, s: &SymbolSum<FqField>) -> Result<OddElement> {
        eval_dyadic(s, |t| self.eval(t), &self.odd)
    }

    /// Image of a group-ring element acting on an element, through the class action.
    pub fn act(&self, a: &GroupRingElement, x: &GroupElement) -> Result<GroupElement> {
        act_on(&self.group, self.classes, a, x)
    }

    pub fn report(&self) -> Value {
        json!({
            "q": self.field.q(),
            "flavor": self.flavor.name(),
            "generators": self.group.n_gens(),
            "relators": self.group.relators().len(),
            "group": self.group.describe(),
            "bloch": self.bloch_group().describe(),
        })
    }
}

fn coords_raw(
    field: &FqField,
    index: &HashMap<FqElem, usize>,
    classes: usize,
    s: &SymbolSum<FqField>,
    n: usize,
) -> Result<Vec<BigInt>> {
    if s.field() != field {
        return Err(Error::KindMismatch);
    }
    let mut v = vec![BigInt::zero(); n];
    for (x, coeff) in s.terms() {
        // [1] = 0
        let Some(&slot) = index.get(x) else {
            continue;
        };
        for (class, d) in coeff.terms() {
            let g = usize::from(classes == 2 && *class == SquareClass::Finite(true));
            v[slot * classes + g] += d.to_integer().ok_or(Error::NonIntegral)?;
        }
    }
    Ok(v)
}

/// Group-ring action on a presented group whose only action generator is `<u>`.
pub(crate) fn act_on(
    g: &Arc<PresentedGroup>,
    classes: usize,
    a: &GroupRingElement,
    x: &GroupElement,
) -> Result<GroupElement> {
    let mut out = g.zero();
    for (c, d) in a.terms() {
        let k = d.to_integer().ok_or(Error::NonIntegral)?;
        let moved = match c {
            SquareClass::Finite(true) if classes == 2 => x.act(0)?,
            SquareClass::Finite(_) => x.clone(),
            _ => return Err(Error::KindMismatch),
        };
        out = out.add(&moved.scale(&k))?;
    }
    Ok(out)
}

/// Evaluates `2^k s` integrally and divides by `2^k` in the odd localization.
pub(crate) fn eval_dyadic<F>(s: &SymbolSum<FqField>, eval: F, odd: &Arc<OddLocalized>) -> Result<OddElement>
where
    F: Fn(&SymbolSum<FqField>) -> Result<GroupElement>,
{
    let k = s.max_log2_den();
    let scaled = s.scale(&GroupRingElement::int(s.field().kind(), 1i64 << k));
    Ok(odd.map(&eval(&scaled)?)?.div_pow2(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn order(q: u64, flavor: Flavor) -> BigInt {
        let k = FqField::of_order(q).unwrap();
        PreBlochPresentation::build(&k, flavor).unwrap().bloch_group().order().unwrap()
    }

    #[test]
    fn small_bloch_orders() {
        assert_eq!(order(5, Flavor::Refined), BigInt::from(3));
        assert_eq!(order(7, Flavor::Refined), BigInt::from(4));
        assert_eq!(order(4, Flavor::Classical), BigInt::from(5));
        assert_eq!(order(2, Flavor::Refined), BigInt::from(3));
        assert_eq!(order(3, Flavor::Refined), BigInt::from(2));
        assert_eq!(order(3, Flavor::Classical), BigInt::from(2));
    }

    #[test]
    fn one_is_zero() {
        let k = FqField::prime(7).unwrap();
        let p = PreBlochPresentation::build(&k, Flavor::Refined).unwrap();
        let s = SymbolSum::symbol(&k, &k.one()).unwrap();
        assert!(p.eval(&s).unwrap().is_zero());
        let half = SymbolSum::term(&k, GroupRingElement::e_minus(&k, &k.from_int(3)).unwrap(), &k.from_int(2)).unwrap();
        assert_eq!(p.eval(&half).unwrap_err(), Error::NonIntegral);
        assert!(p.eval_odd(&half).is_ok());
    }
}
