use super::class::SquareClass;
use super::dyadic::Dyadic;
use super::ring::GroupRingElement;
use crate::error::{Error, Result};
use crate::fields::{Field, GlobalElem, Place};

/// The ring map `R_F -> R_k`, `<u pi^r> -> eps^r <u bar>`, attached to a place,
/// a uniformizer and a sign.
#[derive(Clone, Debug)]
pub struct Rho {
    place: Place,
    uniformizer: GlobalElem,
    eps: i8,
}

impl Rho {
    pub fn new(place: &Place, uniformizer: &GlobalElem, eps: i8) -> Result<Self> {
        if eps != 1 && eps != -1 {
            return Err(Error::BadArgument(format!("sign must be +1 or -1, got {eps}")));
        }
        if place.valuation(uniformizer)? != 1 {
            return Err(Error::InvalidUniformizer);
        }
        Ok(Rho { place: place.clone(), uniformizer: uniformizer.clone(), eps })
    }

    pub fn place(&self) -> &Place {
        &self.place
    }

    pub fn uniformizer(&self) -> &GlobalElem {
        &self.uniformizer
    }

    pub fn eps(&self) -> i8 {
        self.eps
    }

    /// Sign and residue class of the image of a class.
    pub fn class_image(&self, c: &SquareClass) -> Result<(i8, SquareClass)> {
        let f = self.place.field();
        let a = f.class_representative(c)?;
        let (r, u) = self.place.unit_decompose(&a, &self.uniformizer)?;
        let sign = if r % 2 != 0 { self.eps } else { 1 };
        Ok((sign, self.place.residue_field().square_class(&u)?))
    }

    pub fn apply(&self, x: &GroupRingElement) -> Result<GroupRingElement> {
        if x.kind() != self.place.field().kind() {
            return Err(Error::KindMismatch);
        }
        let k = self.place.residue_field();
        let mut out = GroupRingElement::zero(k.kind());
        for (c, v) in x.terms() {
            let (s, rc) = self.class_image(c)?;
            let term = GroupRingElement::class(k.kind(), rc)?.scale(&(v * &Dyadic::from_int(s)));
            out = &out + &term;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::GlobalField;

    #[test]
    fn images_at_five() {
        let q = GlobalField::Rational;
        let p5 = Place::prime(5).unwrap();
        let k = p5.residue_field().clone();
        let minus = Rho::new(&p5, &q.from_int(5), -1).unwrap();
        let plus = Rho::new(&p5, &q.from_int(5), 1).unwrap();
        let g = |a: i64| GroupRingElement::of(&q, &q.from_int(a)).unwrap();
        assert_eq!(minus.apply(&g(5)).unwrap(), GroupRingElement::int(k.kind(), -1));
        assert_eq!(minus.apply(&g(7)).unwrap(), GroupRingElement::of(&k, &k.from_int(2)).unwrap());
        assert_eq!(plus.apply(&g(-25)).unwrap(), GroupRingElement::one(k.kind()));
        assert!(Rho::new(&p5, &q.from_int(25), 1).is_err());
        // multiplicativity on a few products
        for (a, b) in [(10, -3), (15, 35), (-2, 7)] {
            let (x, y) = (&g(a) + &g(1), &g(b) - &g(3));
            let lhs = minus.apply(&(&x * &y)).unwrap();
            let rhs = &minus.apply(&x).unwrap() * &minus.apply(&y).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
