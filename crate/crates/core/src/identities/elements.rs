//! The distinguished formal sums: ψ₁, ψ₂, C̃, C, D and the defining relators.

use super::sum::SymbolSum;
use crate::error::{Error, Result};
use crate::fields::Field;
use crate::groupring::GroupRingElement;

/// Which constant-valued expression to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constant {
    CTilde,
    C,
    D,
}

fn cls<F: Field>(f: &F, a: &F::Elem) -> Result<GroupRingElement> {
    GroupRingElement::of(f, a)
}

fn minus_one<F: Field>(f: &F) -> F::Elem {
    f.neg(&f.one())
}

fn check_generic<F: Field>(f: &F, x: &F::Elem) -> Result<()> {
    if f.is_zero(x) || f.is_one(x) {
        Err(Error::BadArgument(format!("{} must differ from 0 and 1", f.format_elem(x))))
    } else {
        Ok(())
    }
}

/// `ψ₁(x) = [x] + <-1>[x⁻¹]`.
pub fn psi1<F: Field>(f: &F, x: &F::Elem) -> Result<SymbolSum<F>> {
    if f.is_zero(x) {
        return Err(Error::ZeroInput);
    }
    if f.is_one(x) {
        return Ok(SymbolSum::zero(f));
    }
    let xi = f.inv(x)?;
    Ok(SymbolSum::symbol(f, x)?.add(&SymbolSum::term(f, cls(f, &minus_one(f))?, &xi)?))
}

/// `ψ₂(x) = <1-x>(<x>[x] + [x⁻¹])`, and `ψ₂(1) = 0`.
pub fn psi2<F: Field>(f: &F, x: &F::Elem) -> Result<SymbolSum<F>> {
    if f.is_zero(x) {
        return Err(Error::ZeroInput);
    }
    if f.is_one(x) {
        return Ok(SymbolSum::zero(f));
    }
    let xi = f.inv(x)?;
    let inner = SymbolSum::term(f, cls(f, x)?, x)?.add(&SymbolSum::symbol(f, &xi)?);
    Ok(inner.scale(&cls(f, &f.sub(&f.one(), x))?))
}

pub fn psi<F: Field>(i: u8, f: &F, x: &F::Elem) -> Result<SymbolSum<F>> {
    match i {
        1 => psi1(f, x),
        2 => psi2(f, x),
        _ => Err(Error::BadArgument(format!("psi index must be 1 or 2, got {i}"))),
    }
}

/// `C̃(x) = [x] + <-1>[1-x]`.
pub fn c_tilde<F: Field>(f: &F, x: &F::Elem) -> Result<SymbolSum<F>> {
    check_generic(f, x)?;
    let omx = f.sub(&f.one(), x);
    Ok(SymbolSum::symbol(f, x)?.add(&SymbolSum::term(f, cls(f, &minus_one(f))?, &omx)?))
}

/// `C(x) = C̃(x) + <<1-x>>ψ₁(x)`; its class is `b_F`.
pub fn c_const<F: Field>(f: &F, x: &F::Elem) -> Result<SymbolSum<F>> {
    check_generic(f, x)?;
    let omx = f.sub(&f.one(), x);
    Ok(c_tilde(f, x)?.add(&psi1(f, x)?.scale(&GroupRingElement::pf(f, &omx)?)))
}

/// `D(x) = [x] + <-1>[1/(1-x⁻¹)] - ψ₁(1/(1-x))`; its class is `2 b_F`.
pub fn d_const<F: Field>(f: &F, x: &F::Elem) -> Result<SymbolSum<F>> {
    check_generic(f, x)?;
    let one = f.one();
    let a = f.inv(&f.sub(&one, &f.inv(x)?))?;
    let b = f.inv(&f.sub(&one, x))?;
    Ok(SymbolSum::symbol(f, x)?
        .add(&SymbolSum::term(f, cls(f, &minus_one(f))?, &a)?)
        .sub(&psi1(f, &b)?))
}

pub fn constant<F: Field>(kind: Constant, f: &F, x: &F::Elem) -> Result<SymbolSum<F>> {
    match kind {
        Constant::CTilde => c_tilde(f, x),
        Constant::C => c_const(f, x),
        Constant::D => d_const(f, x),
    }
}

fn relator_args<F: Field>(f: &F, x: &F::Elem, y: &F::Elem) -> Result<[F::Elem; 5]> {
    for z in [x, y] {
        check_generic(f, z)?;
    }
    if x == y {
        return Err(Error::BadArgument("relator needs x != y".into()));
    }
    let one = f.one();
    let xi = f.inv(x)?;
    let yi = f.inv(y)?;
    Ok([
        x.clone(),
        y.clone(),
        f.div(y, x)?,
        f.div(&f.sub(&one, &xi), &f.sub(&one, &yi))?,
        f.div(&f.sub(&one, x), &f.sub(&one, y))?,
    ])
}

/// `S_{x,y} = [x] - [y] + <x>[y/x] - <x⁻¹-1>[(1-x⁻¹)/(1-y⁻¹)] + <1-x>[(1-x)/(1-y)]`.
pub fn relator_refined<F: Field>(f: &F, x: &F::Elem, y: &F::Elem) -> Result<SymbolSum<F>> {
    let [a, b, c, d, e] = relator_args(f, x, y)?;
    let one = f.one();
    let xi = f.inv(x)?;
    let k = f.kind();
    let mut s = SymbolSum::symbol(f, &a)?;
    s = s.sub(&SymbolSum::symbol(f, &b)?);
    s = s.add(&SymbolSum::term(f, cls(f, x)?, &c)?);
    s = s.sub(&SymbolSum::term(f, cls(f, &f.sub(&xi, &one))?, &d)?);
    s = s.add(&SymbolSum::term(f, cls(f, &f.sub(&one, x))?, &e)?);
    debug_assert_eq!(s.field().kind(), k);
    Ok(s)
}

/// `R_{x,y} = [x] - [y] + [y/x] - [(1-x⁻¹)/(1-y⁻¹)] + [(1-x)/(1-y)]`.
pub fn relator_classical<F: Field>(f: &F, x: &F::Elem, y: &F::Elem) -> Result<SymbolSum<F>> {
    let [a, b, c, d, e] = relator_args(f, x, y)?;
    let mut s = SymbolSum::symbol(f, &a)?;
    s = s.sub(&SymbolSum::symbol(f, &b)?);
    s = s.add(&SymbolSum::symbol(f, &c)?);
    s = s.sub(&SymbolSum::symbol(f, &d)?);
    s = s.add(&SymbolSum::symbol(f, &e)?);
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{FqField, GlobalField};

    #[test]
    fn shapes() {
        let q = GlobalField::Rational;
        let m1 = q.from_int(-1);
        let p = psi1(&q, &m1).unwrap();
        // ψ₁(-1) = (1 + <-1>)[-1]
        let expect = SymbolSum::term(&q, GroupRingElement::p_plus(&q, &m1).unwrap(), &m1).unwrap();
        assert_eq!(p, expect);
        assert!(psi2(&q, &q.one()).unwrap().is_empty());
        assert!(psi1(&q, &q.from_int(0)).is_err());
        assert!(c_const(&q, &q.one()).is_err());
        let k = FqField::prime(7).unwrap();
        let s = relator_refined(&k, &k.from_int(2), &k.from_int(3)).unwrap();
        assert!(s.len() <= 5);
    }
}
