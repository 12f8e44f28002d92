use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactalg::{GroupElement, OddElement, OddLocalized, PresentedGroup};
use crate::fields::{Field, GlobalElem, GlobalField, Place, Poly};
use crate::groupring::{Dyadic, GroupRingElement, Rho};
use crate::identities::SymbolSum;
use crate::prebloch::{NodeName, Tower};

/// Largest residue field for which a target tower is built.
pub const MAX_RESIDUE: u64 = 64;

/// `S_{π,ε}` into `RP̂(k)`, or its classical shadow into `RedP(k)`.
///
/// A term `α[a]` goes to `ρ(α)·[ā]` for units, `ρ(α)·b_k` for `v(a) > 0` and
/// `-ρ(α)·b_k` for `v(a) < 0`.
#[derive(Clone, Debug)]
pub struct SpecializationMap {
    rho: Rho,
    tower: Arc<Tower>,
    target: NodeName,
    b: GroupElement,
}

/// Builds the tower of a residue field, refusing fields that are too large.
pub fn residue_tower(place: &Place) -> Result<Arc<Tower>> {
    let k = place.residue_field();
    if k.q() > MAX_RESIDUE {
        return Err(Error::Unsupported(format!("residue field {} is too large", k.name())));
    }
    Ok(Arc::new(Tower::build(k)?))
}

impl SpecializationMap {
    pub fn new(place: &Place, uniformizer: &GlobalElem, eps: i8, target: NodeName) -> Result<Self> {
        Self::with_tower(place, uniformizer, eps, target, residue_tower(place)?)
    }

    /// Same as [`SpecializationMap::new`] with a prebuilt tower of the residue field.
    pub fn with_tower(
        place: &Place,
        uniformizer: &GlobalElem,
        eps: i8,
        target: NodeName,
        tower: Arc<Tower>,
    ) -> Result<Self> {
        if !matches!(target, NodeName::RPhat | NodeName::RedP) {
            return Err(Error::BadArgument(format!("specialization targets RPhat or RedP, not {target}")));
        }
        if tower.field() != place.residue_field() {
            return Err(Error::KindMismatch);
        }
        let rho = Rho::new(place, uniformizer, eps)?;
        let b = tower.b(target)?;
        Ok(SpecializationMap { rho, tower, target, b })
    }

    pub fn place(&self) -> &Place {
        self.rho.place()
    }

    pub fn field(&self) -> &GlobalField {
        self.rho.place().field()
    }

    pub fn eps(&self) -> i8 {
        self.rho.eps()
    }

    pub fn rho(&self) -> &Rho {
        &self.rho
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn target(&self) -> NodeName {
        self.target
    }

    pub fn group(&self) -> &Arc<PresentedGroup> {
        self.tower.node(self.target).group()
    }

    pub fn odd(&self) -> &Arc<OddLocalized> {
        self.tower.node(self.target).odd()
    }

    /// `b_k` in the target.
    pub fn b(&self) -> &GroupElement {
        &self.b
    }

    /// Image of the bare symbol `[a]`.
    pub fn symbol_image(&self, a: &GlobalElem) -> Result<GroupElement> {
        let place = self.place();
        let v = place.valuation(a)?;
        if v > 0 {
            return Ok(self.b.clone());
        }
        if v < 0 {
            return Ok(self.b.neg());
        }
        let k = place.residue_field();
        let s = SymbolSum::symbol(k, &place.residue(a)?)?;
        self.tower.eval(self.target, &s)
    }

    /// Image of an integral sum.
    pub fn specialize(&self, sum: &SymbolSum<GlobalField>) -> Result<GroupElement> {
        if sum.field() != self.field() {
            return Err(Error::KindMismatch);
        }
        if !sum.is_integral() {
            return Err(Error::NonIntegral);
        }
        let mut out = self.group().zero();
        for (a, alpha) in sum.terms() {
            let r = self.rho.apply(alpha)?;
            let x = self.symbol_image(a)?;
            out = out.add(&self.tower.act(self.target, &r, &x)?)?;
        }
        Ok(out)
    }

    /// Image in the odd localization of the target; dyadic coefficients are allowed.
    pub fn specialize_odd(&self, sum: &SymbolSum<GlobalField>) -> Result<OddElement> {
        if sum.field() != self.field() {
            return Err(Error::KindMismatch);
        }
        let k = sum.max_log2_den();
        let two_k = Dyadic::from_int(BigInt::one() << k);
        let scaled = sum.scale(&GroupRingElement::scalar(sum.field().kind(), two_k));
        Ok(self.odd().map(&self.specialize(&scaled)?)?.div_pow2(k))
    }

    /// Image of `α·x` for an element `x` already in the target.
    pub fn act(&self, alpha: &GroupRingElement, x: &GroupElement) -> Result<GroupElement> {
        self.tower.act(self.target, &self.rho.apply(alpha)?, x)
    }
}

/// Checks that the images of `<<π>>p₊(-1)<c>[a]`, for units `a` and classes `c`
/// of units, generate `2p₊(-1)·RP̂(k)`; the map must target `RPhat` with `ε = -1`.
pub fn check_surjectivity(map: &SpecializationMap) -> Result<bool> {
    if map.target() != NodeName::RPhat || map.eps() != -1 {
        return Err(Error::BadArgument("surjectivity is checked for RPhat with eps = -1".into()));
    }
    let f = map.field();
    let place = map.place();
    let k = place.residue_field();
    let pi = map.rho().uniformizer();
    let m1 = f.from_int(-1);
    let coeff = &GroupRingElement::pf(f, pi)? * &GroupRingElement::p_plus(f, &m1)?;

    // one unit lift per residue class, and one unit per square class
    let lifts = unit_lifts(place)?;
    let mut class_units = vec![f.one()];
    for u in &lifts {
        if !k.is_square(place.residue(u)?)? {
            class_units.push(u.clone());
            break;
        }
    }
    let mut images = Vec::new();
    for a in &lifts {
        for c in &class_units {
            let alpha = &coeff * &GroupRingElement::of(f, c)?;
            images.push(map.specialize(&SymbolSum::term(f, alpha, a)?)?);
        }
    }

    let two_pp = GroupRingElement::p_plus(k, &k.from_int(-1))?.scale(&Dyadic::from_int(2));
    let g = map.group();
    let mut wanted = Vec::new();
    for i in 0..g.n_gens() {
        wanted.push(map.tower().act(NodeName::RPhat, &two_pp, &g.gen(i))?);
    }
    g.same_span(&images, &wanted)
}

/// A global unit reducing to each nonzero residue.
fn unit_lifts(place: &Place) -> Result<Vec<GlobalElem>> {
    let k = place.residue_field();
    let f = place.field();
    let mut out = Vec::new();
    match f {
        GlobalField::Rational => {
            for a in 1..k.q() as i64 {
                out.push(f.from_int(a));
            }
        }
        GlobalField::Function(base) => {
            if base != k {
                return Err(Error::Unsupported("unit lifts for residue extensions".into()));
            }
            for a in k.nonzero() {
                out.push(f.poly(Poly::constant(a))?);
            }
        }
    }
    debug_assert!(out.iter().all(|u| place.valuation(u).ok() == Some(0)));
    Ok(out)
}
