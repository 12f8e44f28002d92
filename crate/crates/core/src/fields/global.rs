use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::factor::factor_integer;
use super::fq::FqField;
use super::poly::Poly;
use super::Field;
use crate::error::{Error, Result};
use crate::groupring::{FieldKind, SquareClass};

/// Q or the rational function field F_q(t).
#[derive(Clone, PartialEq, Eq)]
pub enum GlobalField {
    Rational,
    Function(FqField),
}

impl fmt::Debug for GlobalField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Field::name(self))
    }
}

/// Reduced quotient of polynomials with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(k: &FqField, num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroInput);
        }
        if num.is_zero() {
            return Ok(RatFunc { num, den: Poly::one() });
        }
        let g = num.gcd(k, &den);
        let num = num.div_exact(k, &g).expect("gcd divides");
        let den = den.div_exact(k, &g).expect("gcd divides");
        let l = k.inv(den.lead())?;
        Ok(RatFunc { num: num.scale(k, l), den: den.scale(k, l) })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn format(&self) -> String {
        if self.den.is_one() {
            self.num.format('t')
        } else {
            format!("({})/({})", self.num.format('t'), self.den.format('t'))
        }
    }
}

/// Element of a global field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GlobalElem {
    Rational(BigRational),
    Function(RatFunc),
}

impl GlobalElem {
    pub fn as_rational(&self) -> Result<&BigRational> {
        match self {
            GlobalElem::Rational(r) => Ok(r),
            _ => Err(Error::KindMismatch),
        }
    }

    pub fn as_function(&self) -> Result<&RatFunc> {
        match self {
            GlobalElem::Function(r) => Ok(r),
            _ => Err(Error::KindMismatch),
        }
    }
}

fn split_fraction(s: &str) -> Result<(String, Option<String>)> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut depth = 0i32;
    let mut cut = None;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => {
                if cut.is_some() {
                    return Err(Error::Parse(format!("more than one fraction bar in {s:?}")));
                }
                cut = Some(i);
            }
            _ => {}
        }
    }
    let strip = |t: &str| -> String {
        let t = t.trim();
        if t.starts_with('(') && t.ends_with(')') {
            t[1..t.len() - 1].to_string()
        } else {
            t.to_string()
        }
    };
    Ok(match cut {
        Some(i) => (strip(&s[..i]), Some(strip(&s[i + 1..]))),
        None => (strip(&s), None),
    })
}

impl GlobalField {
    pub fn rational() -> Self {
        GlobalField::Rational
    }

    pub fn function(k: FqField) -> Self {
        GlobalField::Function(k)
    }

    /// Parses `Q`, `GF(q)(t)` or `GF(p^f)(t)`.
    pub fn parse_field(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" || s == "QQ" {
            return Ok(GlobalField::Rational);
        }
        let inner = s
            .strip_suffix("(t)")
            .and_then(|r| r.strip_prefix("GF("))
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("unknown global field {s:?}")))?;
        Ok(GlobalField::Function(parse_finite_order(inner)?))
    }

    pub fn base(&self) -> Result<&FqField> {
        match self {
            GlobalField::Function(k) => Ok(k),
            GlobalField::Rational => Err(Error::KindMismatch),
        }
    }

    pub fn rat(&self, n: i64, d: i64) -> Result<GlobalElem> {
        if d == 0 {
            return Err(Error::ZeroInput);
        }
        match self {
            GlobalField::Rational => Ok(GlobalElem::Rational(BigRational::new(n.into(), d.into()))),
            GlobalField::Function(k) => {
                let num = Poly::constant(k.from_int(n));
                let den = Poly::constant(k.from_int(d));
                Ok(GlobalElem::Function(RatFunc::new(k, num, den)?))
            }
        }
    }

    pub fn integer(&self, n: &BigInt) -> GlobalElem {
        match self {
            GlobalField::Rational => GlobalElem::Rational(BigRational::from_integer(n.clone())),
            GlobalField::Function(k) => {
                let p = BigInt::from(k.p());
                let r = ((n % &p) + &p) % &p;
                let c = k.from_int(r.to_string().parse::<i64>().expect("reduced"));
                GlobalElem::Function(RatFunc::from_poly(Poly::constant(c)))
            }
        }
    }

    pub fn poly(&self, p: Poly) -> Result<GlobalElem> {
        match self {
            GlobalField::Function(_) => Ok(GlobalElem::Function(RatFunc::from_poly(p))),
            GlobalField::Rational => Err(Error::KindMismatch),
        }
    }

    pub fn ratfunc(&self, num: Poly, den: Poly) -> Result<GlobalElem> {
        let k = self.base()?;
        Ok(GlobalElem::Function(RatFunc::new(k, num, den)?))
    }

    pub fn t(&self) -> Result<GlobalElem> {
        self.poly(Poly::var())
    }

    pub fn pow(&self, a: &GlobalElem, e: i64) -> Result<GlobalElem> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut r = self.one();
        for _ in 0..e.unsigned_abs() {
            r = self.mul(&r, &base);
        }
        Ok(r)
    }
}

pub(crate) fn parse_finite_order(s: &str) -> Result<FqField> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad field order {s:?}"));
    if let Some((p, f)) = s.split_once('^') {
        let p: u64 = p.trim().parse().map_err(|_| bad())?;
        let f: u32 = f.trim().parse().map_err(|_| bad())?;
        FqField::new(p, f, None)
    } else {
        let q: u64 = s.parse().map_err(|_| bad())?;
        FqField::of_order(q)
    }
}

impl Field for GlobalField {
    type Elem = GlobalElem;

    fn kind(&self) -> FieldKind {
        match self {
            GlobalField::Rational => FieldKind::Rational,
            GlobalField::Function(k) => FieldKind::Function { p: k.p(), f: k.f() },
        }
    }

    fn name(&self) -> String {
        match self {
            GlobalField::Rational => "Q".into(),
            GlobalField::Function(k) => format!("{}(t)", k.name()),
        }
    }

    fn zero(&self) -> GlobalElem {
        self.integer(&BigInt::zero())
    }

    fn one(&self) -> GlobalElem {
        self.integer(&BigInt::one())
    }

    fn from_int(&self, n: i64) -> GlobalElem {
        self.integer(&BigInt::from(n))
    }

    fn add(&self, a: &GlobalElem, b: &GlobalElem) -> GlobalElem {
        match (self, a, b) {
            (GlobalField::Rational, GlobalElem::Rational(x), GlobalElem::Rational(y)) => {
                GlobalElem::Rational(x + y)
            }
            (GlobalField::Function(k), GlobalElem::Function(x), GlobalElem::Function(y)) => {
                let num = x.num.mul(k, &y.den).add(k, &y.num.mul(k, &x.den));
                let den = x.den.mul(k, &y.den);
                GlobalElem::Function(RatFunc::new(k, num, den).expect("nonzero denominator"))
            }
            _ => panic!("mixed field kinds"),
        }
    }

    fn neg(&self, a: &GlobalElem) -> GlobalElem {
        match (self, a) {
            (_, GlobalElem::Rational(x)) => GlobalElem::Rational(-x),
            (GlobalField::Function(k), GlobalElem::Function(x)) => {
                GlobalElem::Function(RatFunc { num: x.num.neg(k), den: x.den.clone() })
            }
            _ => panic!("mixed field kinds"),
        }
    }

    fn mul(&self, a: &GlobalElem, b: &GlobalElem) -> GlobalElem {
        match (self, a, b) {
            (GlobalField::Rational, GlobalElem::Rational(x), GlobalElem::Rational(y)) => {
                GlobalElem::Rational(x * y)
            }
            (GlobalField::Function(k), GlobalElem::Function(x), GlobalElem::Function(y)) => {
                let num = x.num.mul(k, &y.num);
                let den = x.den.mul(k, &y.den);
                GlobalElem::Function(RatFunc::new(k, num, den).expect("nonzero denominator"))
            }
            _ => panic!("mixed field kinds"),
        }
    }

    fn inv(&self, a: &GlobalElem) -> Result<GlobalElem> {
        if self.is_zero(a) {
            return Err(Error::ZeroInput);
        }
        match (self, a) {
            (GlobalField::Rational, GlobalElem::Rational(x)) => Ok(GlobalElem::Rational(x.recip())),
            (GlobalField::Function(k), GlobalElem::Function(x)) => {
                Ok(GlobalElem::Function(RatFunc::new(k, x.den.clone(), x.num.clone())?))
            }
            _ => Err(Error::KindMismatch),
        }
    }

    fn is_zero(&self, a: &GlobalElem) -> bool {
        match a {
            GlobalElem::Rational(x) => x.is_zero(),
            GlobalElem::Function(x) => x.is_zero(),
        }
    }

    fn square_class(&self, a: &GlobalElem) -> Result<SquareClass> {
        if self.is_zero(a) {
            return Err(Error::ZeroInput);
        }
        match (self, a) {
            (GlobalField::Rational, GlobalElem::Rational(x)) => {
                let mut primes: Vec<BigInt> = Vec::new();
                for part in [x.numer(), x.denom()] {
                    for (p, e) in factor_integer(part) {
                        if e % 2 == 1 {
                            primes.push(p);
                        }
                    }
                }
                primes.sort();
                Ok(SquareClass::Rational { negative: x.is_negative(), primes })
            }
            (GlobalField::Function(k), GlobalElem::Function(x)) => {
                let (lead, fn_) = x.num.factor(k)?;
                let (_, fd) = x.den.factor(k)?;
                let mut odd: Vec<Poly> = fn_
                    .into_iter()
                    .chain(fd)
                    .filter(|(_, e)| e % 2 == 1)
                    .map(|(p, _)| p)
                    .collect();
                odd.sort();
                // numerator and denominator are coprime, so no factor repeats here
                let lead_nonsquare = k.p() != 2 && !k.is_square(lead)?;
                let odd_degree = (x.num.deg() + x.den.deg()) % 2 == 1;
                Ok(SquareClass::Function { lead_nonsquare, irreducibles: odd, odd_degree })
            }
            _ => Err(Error::KindMismatch),
        }
    }

    fn class_representative(&self, c: &SquareClass) -> Result<GlobalElem> {
        match (self, c) {
            (GlobalField::Rational, SquareClass::Rational { negative, primes }) => {
                let mut n: BigInt = primes.iter().product();
                if *negative {
                    n = -n;
                }
                Ok(GlobalElem::Rational(BigRational::from_integer(n)))
            }
            (GlobalField::Function(k), SquareClass::Function { lead_nonsquare, irreducibles, .. }) => {
                let c = if *lead_nonsquare {
                    k.smallest_nonsquare().ok_or(Error::EvenCharacteristic)?
                } else {
                    k.one()
                };
                let mut p = Poly::constant(c);
                for f in irreducibles {
                    p = p.mul(k, f);
                }
                Ok(GlobalElem::Function(RatFunc::from_poly(p)))
            }
            _ => Err(Error::KindMismatch),
        }
    }

    fn format_elem(&self, a: &GlobalElem) -> String {
        match a {
            GlobalElem::Rational(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            GlobalElem::Function(x) => x.format(),
        }
    }

    fn parse_elem(&self, s: &str) -> Result<GlobalElem> {
        let (n, d) = split_fraction(s)?;
        match self {
            GlobalField::Rational => {
                let bad = |t: &str| Error::Parse(format!("bad rational {t:?}"));
                let num = BigInt::from_str(&n).map_err(|_| bad(&n))?;
                let den = match d {
                    Some(d) => BigInt::from_str(&d).map_err(|_| bad(&d))?,
                    None => BigInt::one(),
                };
                if den.is_zero() {
                    return Err(Error::ZeroInput);
                }
                Ok(GlobalElem::Rational(BigRational::new(num, den)))
            }
            GlobalField::Function(k) => {
                let num = Poly::parse(k, &n, 't')?;
                let den = match d {
                    Some(d) => Poly::parse(k, &d, 't')?,
                    None => Poly::one(),
                };
                Ok(GlobalElem::Function(RatFunc::new(k, num, den)?))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_classes() {
        let q = GlobalField::Rational;
        let c = q.square_class(&q.parse_elem("-18").unwrap()).unwrap();
        assert_eq!(c, SquareClass::Rational { negative: true, primes: vec![BigInt::from(2)] });
        assert!(q.square_class(&q.parse_elem("4/9").unwrap()).unwrap().is_identity());
        let rep = q.class_representative(&c).unwrap();
        assert_eq!(q.format_elem(&rep), "-2");
        assert_eq!(q.square_class(&q.from_int(0)).unwrap_err(), Error::ZeroInput);
    }

    #[test]
    fn function_field_literals_and_classes() {
        let k = FqField::prime(5).unwrap();
        let f = GlobalField::Function(k.clone());
        let a = f.parse_elem("(t^2+t)/(t+1)").unwrap();
        assert_eq!(f.format_elem(&a), "t");
        let b = f.parse_elem("(2t^3+2t)/(t^2+3t+1)").unwrap();
        assert_eq!(f.format_elem(&b), "(2t^3+2t)/(t^2+3t+1)");
        let c = f.square_class(&b).unwrap();
        let rep = f.class_representative(&c).unwrap();
        assert_eq!(f.square_class(&rep).unwrap(), c);
        let sq = f.mul(&b, &b);
        assert!(f.square_class(&sq).unwrap().is_identity());
        assert_eq!(GlobalField::parse_field("GF(5)(t)").unwrap(), f);
    }
}
