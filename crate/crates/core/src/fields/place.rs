use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::factor::is_probable_prime;
use super::fq::{FqElem, FqField};
use super::global::{GlobalElem, GlobalField, RatFunc};
use super::poly::Poly;
use super::Field;
use crate::error::{Error, Result};

const EMBED_LIMIT: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaceDatum {
    Prime(BigInt),
    Irreducible(Poly),
    Infinity,
}

/// A discrete valuation of Q or F_q(t) together with its residue field.
#[derive(Clone)]
pub struct Place {
    field: GlobalField,
    datum: PlaceDatum,
    residue: FqField,
    // for F_q(t) at a finite place: root of the place polynomial in the residue
    // field, and images of base-field codes (None means codes are preserved)
    root: Option<FqElem>,
    embed: Option<Arc<Vec<FqElem>>>,
}

impl PartialEq for Place {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.datum == other.datum
    }
}

impl Eq for Place {}

impl fmt::Debug for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Place({})", self.label())
    }
}

fn find_root(big: &FqField, p: &Poly, embed: &dyn Fn(FqElem) -> FqElem) -> Option<FqElem> {
    big.elements().find(|&z| p.eval_embedded(big, embed, z) == big.zero())
}

impl Place {
    pub fn new(field: &GlobalField, datum: PlaceDatum) -> Result<Place> {
        match (field, &datum) {
            (GlobalField::Rational, PlaceDatum::Prime(p)) => {
                if !is_probable_prime(p) {
                    return Err(Error::BadArgument(format!("{p} is not prime")));
                }
                let pu = p
                    .to_u64()
                    .filter(|&v| v < (1 << 62))
                    .ok_or_else(|| Error::Unsupported(format!("residue field of size {p}")))?;
                Ok(Place { field: field.clone(), datum, residue: FqField::prime(pu)?, root: None, embed: None })
            }
            (GlobalField::Function(k), PlaceDatum::Irreducible(pi)) => {
                if pi.is_zero() || pi.lead() != k.one() || !pi.is_irreducible(k) {
                    return Err(Error::BadArgument(format!("{} is not monic irreducible", pi.format('t'))));
                }
                let d = pi.deg() as u32;
                if k.f() == 1 {
                    let modulus: Vec<u64> = pi.coeffs().iter().map(|c| c.code()).collect();
                    let residue = FqField::new(k.p(), d, Some(modulus))?;
                    let root = residue.generator();
                    return Ok(Place { field: field.clone(), datum, residue, root: Some(root), embed: None });
                }
                if d == 1 {
                    let root = k.neg(pi.coeff(0));
                    return Ok(Place { field: field.clone(), datum, residue: k.clone(), root: Some(root), embed: None });
                }
                if k.q().checked_pow(d).is_none_or(|s| s > EMBED_LIMIT) {
                    return Err(Error::Unsupported(format!("residue field of degree {d} over {}", k.name())));
                }
                let big = FqField::new(k.p(), k.f() * d, None)?;
                // image of the generator of the base field
                let base_mod: Vec<FqElem> = k.modulus().iter().map(|&c| FqElem(c)).collect();
                let base_poly = Poly::new(base_mod);
                let beta = find_root(&big, &base_poly, &|c| c).ok_or(Error::ReducibleModulus)?;
                let table: Vec<FqElem> = k
                    .elements()
                    .map(|c| {
                        k.digits(c)
                            .iter()
                            .rev()
                            .fold(big.zero(), |acc, &dg| big.add(big.mul(acc, beta), FqElem(dg)))
                    })
                    .collect();
                let root = find_root(&big, pi, &|c| table[c.code() as usize]).ok_or(Error::ReducibleModulus)?;
                Ok(Place { field: field.clone(), datum, residue: big, root: Some(root), embed: Some(Arc::new(table)) })
            }
            (GlobalField::Function(k), PlaceDatum::Infinity) => {
                Ok(Place { field: field.clone(), datum, residue: k.clone(), root: None, embed: None })
            }
            _ => Err(Error::KindMismatch),
        }
    }

    pub fn prime(p: u64) -> Result<Place> {
        Place::new(&GlobalField::Rational, PlaceDatum::Prime(BigInt::from(p)))
    }

    pub fn infinity(field: &GlobalField) -> Result<Place> {
        Place::new(field, PlaceDatum::Infinity)
    }

    pub fn poly(field: &GlobalField, pi: Poly) -> Result<Place> {
        Place::new(field, PlaceDatum::Irreducible(pi))
    }

    /// Parses a prime (over Q), a monic irreducible in `t`, or `inf`.
    pub fn parse(field: &GlobalField, s: &str) -> Result<Place> {
        let s = s.trim();
        match field {
            GlobalField::Rational => {
                let p: BigInt = s.parse().map_err(|_| Error::Parse(format!("bad prime {s:?}")))?;
                Place::new(field, PlaceDatum::Prime(p))
            }
            GlobalField::Function(k) => {
                if s == "inf" || s == "infinity" {
                    Place::infinity(field)
                } else {
                    Place::poly(field, Poly::parse(k, s, 't')?)
                }
            }
        }
    }

    pub fn field(&self) -> &GlobalField {
        &self.field
    }

    pub fn datum(&self) -> &PlaceDatum {
        &self.datum
    }

    pub fn residue_field(&self) -> &FqField {
        &self.residue
    }

    pub fn label(&self) -> String {
        match &self.datum {
            PlaceDatum::Prime(p) => p.to_string(),
            PlaceDatum::Irreducible(pi) => pi.format('t'),
            PlaceDatum::Infinity => "inf".into(),
        }
    }

    pub fn default_uniformizer(&self) -> GlobalElem {
        match &self.datum {
            PlaceDatum::Prime(p) => GlobalElem::Rational(BigRational::from_integer(p.clone())),
            PlaceDatum::Irreducible(pi) => GlobalElem::Function(RatFunc::from_poly(pi.clone())),
            PlaceDatum::Infinity => {
                let k = self.field.base().expect("function field");
                GlobalElem::Function(RatFunc::new(k, Poly::one(), Poly::var()).expect("nonzero"))
            }
        }
    }

    fn poly_order(&self, k: &FqField, pi: &Poly, a: &Poly) -> i64 {
        let mut a = a.clone();
        let mut n = 0;
        while let Some(q) = a.div_exact(k, pi) {
            a = q;
            n += 1;
        }
        n
    }

    pub fn valuation(&self, a: &GlobalElem) -> Result<i64> {
        if self.field.is_zero(a) {
            return Err(Error::ZeroInput);
        }
        match (&self.datum, a) {
            (PlaceDatum::Prime(p), GlobalElem::Rational(x)) => {
                let count = |n: &BigInt| {
                    let mut n = n.clone();
                    let mut c = 0i64;
                    while n.is_multiple_of(p) {
                        n /= p;
                        c += 1;
                    }
                    c
                };
                Ok(count(x.numer()) - count(x.denom()))
            }
            (PlaceDatum::Irreducible(pi), GlobalElem::Function(x)) => {
                let k = self.field.base()?;
                Ok(self.poly_order(k, pi, x.num()) - self.poly_order(k, pi, x.den()))
            }
            (PlaceDatum::Infinity, GlobalElem::Function(x)) => Ok(x.den().deg() as i64 - x.num().deg() as i64),
            _ => Err(Error::KindMismatch),
        }
    }

    fn reduce_poly(&self, a: &Poly) -> FqElem {
        let root = self.root.expect("finite place");
        match &self.embed {
            None => a.eval_embedded(&self.residue, &|c| c, root),
            Some(t) => a.eval_embedded(&self.residue, &|c| t[c.code() as usize], root),
        }
    }

    /// Image of a unit in the residue field.
    pub fn residue(&self, a: &GlobalElem) -> Result<FqElem> {
        if self.valuation(a)? != 0 {
            return Err(Error::NotUnit);
        }
        let r = &self.residue;
        match (&self.datum, a) {
            (PlaceDatum::Prime(p), GlobalElem::Rational(x)) => {
                let n = x.numer().mod_floor(p).to_u64().expect("reduced");
                let d = x.denom().mod_floor(p).to_u64().expect("reduced");
                r.div(FqElem(n), FqElem(d))
            }
            (PlaceDatum::Irreducible(_), GlobalElem::Function(x)) => {
                r.div(self.reduce_poly(x.num()), self.reduce_poly(x.den()))
            }
            (PlaceDatum::Infinity, GlobalElem::Function(x)) => r.div(x.num().lead(), x.den().lead()),
            _ => Err(Error::KindMismatch),
        }
    }

    /// `(v(a), residue(a * uniformizer^-v(a)))`.
    pub fn unit_decompose(&self, a: &GlobalElem, uniformizer: &GlobalElem) -> Result<(i64, FqElem)> {
        if self.field.is_zero(a) {
            return Err(Error::ZeroInput);
        }
        if self.valuation(uniformizer)? != 1 {
            return Err(Error::InvalidUniformizer);
        }
        let r = self.valuation(a)?;
        let u = self.field.mul(a, &self.field.pow(uniformizer, -r)?);
        Ok((r, self.residue(&u)?))
    }

    /// Is `a` congruent to 1 modulo the maximal ideal (a principal unit)?
    pub fn is_principal_unit(&self, a: &GlobalElem) -> Result<bool> {
        Ok(self.valuation(a)? == 0 && self.residue(a)? == self.residue.one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_places() {
        let q = GlobalField::Rational;
        let p5 = Place::prime(5).unwrap();
        assert_eq!(p5.valuation(&q.parse_elem("50/3").unwrap()).unwrap(), 2);
        let p7 = Place::prime(7).unwrap();
        assert_eq!(p7.residue(&q.parse_elem("10/3").unwrap()).unwrap(), FqElem(1));
        assert_eq!(p5.residue(&q.parse_elem("5/3").unwrap()).unwrap_err(), Error::NotUnit);
        let five = q.from_int(5);
        assert_eq!(p5.unit_decompose(&q.parse_elem("50/3").unwrap(), &five).unwrap(), (2, FqElem(4)));
        let p3 = Place::prime(3).unwrap();
        assert_eq!(p3.unit_decompose(&q.from_int(3), &q.from_int(3)).unwrap(), (1, FqElem(1)));
        assert_eq!(p3.unit_decompose(&q.from_int(3), &q.from_int(9)).unwrap_err(), Error::InvalidUniformizer);
    }

    #[test]
    fn function_field_places() {
        let k = FqField::prime(5).unwrap();
        let f = GlobalField::Function(k.clone());
        let pt = Place::poly(&f, Poly::var()).unwrap();
        assert_eq!(pt.valuation(&f.parse_elem("(t^2+t)/(t+1)").unwrap()).unwrap(), 1);
        assert_eq!(pt.residue(&f.parse_elem("(t+2)/(t+1)").unwrap()).unwrap(), FqElem(2));
        let inf = Place::infinity(&f).unwrap();
        assert_eq!(inf.valuation(&f.parse_elem("t^3").unwrap()).unwrap(), -3);
        let a = f.parse_elem("t^3+t^2").unwrap();
        assert_eq!(pt.unit_decompose(&a, &f.t().unwrap()).unwrap(), (2, FqElem(1)));
        assert_eq!(inf.residue(&f.parse_elem("(3t+1)/(t+4)").unwrap()).unwrap(), FqElem(3));

        // degree-2 place: residues are multiplicative
        let pi = Poly::parse(&k, "t^2+2", 't').unwrap();
        let pl = Place::poly(&f, pi).unwrap();
        assert_eq!(pl.residue_field().q(), 25);
        let x = f.parse_elem("t+3").unwrap();
        let y = f.parse_elem("(t^2+t+1)/(t+1)").unwrap();
        let r = pl.residue_field();
        assert_eq!(pl.residue(&f.mul(&x, &y)).unwrap(), r.mul(pl.residue(&x).unwrap(), pl.residue(&y).unwrap()));
    }

    #[test]
    fn places_over_extension_bases() {
        let k = FqField::of_order(9).unwrap();
        let f = GlobalField::Function(k.clone());
        let pi = (0..81).map(|i| Poly::monic_from_index(&k, 2, i)).find(|p| p.is_irreducible(&k)).unwrap();
        let pl = Place::poly(&f, pi).unwrap();
        assert_eq!(pl.residue_field().q(), 81);
        let a = f.parse_elem("3t+1").unwrap();
        let b = f.parse_elem("t^3+4").unwrap();
        let r = pl.residue_field();
        assert_eq!(pl.residue(&f.mul(&a, &b)).unwrap(), r.mul(pl.residue(&a).unwrap(), pl.residue(&b).unwrap()));
        let s = f.add(&a, &b);
        assert_eq!(pl.residue(&s).unwrap(), r.add(pl.residue(&a).unwrap(), pl.residue(&b).unwrap()));
    }
}
