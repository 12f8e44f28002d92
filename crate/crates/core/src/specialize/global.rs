use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::map::SpecializationMap;
use crate::error::Result;
use crate::exactalg::OddElement;
use crate::fields::factor::factor_integer;
use crate::fields::{GlobalElem, GlobalField, Place, PlaceDatum, Poly};
use crate::groupring::SquareClass;
use crate::identities::SymbolSum;
use crate::prebloch::NodeName;

#[derive(Clone, Debug)]
pub struct GlobalEntry {
    pub place: Place,
    pub image: OddElement,
}

/// Nonzero local images of a sum, one per place, in ascending place order.
#[derive(Clone, Debug, Default)]
pub struct GlobalImage {
    pub entries: Vec<GlobalEntry>,
}

impl GlobalImage {
    pub fn support(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.place.label()).collect()
    }

    pub fn get(&self, place: &Place) -> Option<&OddElement> {
        self.entries.iter().find(|e| &e.place == place).map(|e| &e.image)
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                json!({
                    "place": e.place.label(),
                    "image": e.image.to_string(),
                    "order": e.image.order().map(|o| o.to_string()),
                })
            })
            .collect();
        json!({ "support": self.support(), "entries": entries })
    }
}

fn odd_primes(n: &BigInt, out: &mut BTreeSet<PlaceDatum>) {
    for (p, e) in factor_integer(n) {
        if e % 2 == 1 {
            out.insert(PlaceDatum::Prime(p));
        }
    }
}

fn odd_irreducibles(f: &GlobalField, p: &Poly, out: &mut BTreeSet<PlaceDatum>) -> Result<()> {
    let k = f.base()?;
    for (q, e) in p.factor(k)?.1 {
        if e % 2 == 1 {
            out.insert(PlaceDatum::Irreducible(q));
        }
    }
    Ok(())
}

/// Places where some argument has odd valuation or some coefficient class is odd.
pub fn candidate_places(sum: &SymbolSum<GlobalField>) -> Result<Vec<Place>> {
    let f = sum.field();
    let mut data = BTreeSet::new();
    for (a, alpha) in sum.terms() {
        match a {
            GlobalElem::Rational(x) => {
                odd_primes(x.numer(), &mut data);
                odd_primes(x.denom(), &mut data);
            }
            GlobalElem::Function(x) => {
                odd_irreducibles(f, x.num(), &mut data)?;
                odd_irreducibles(f, x.den(), &mut data)?;
                if (x.num().deg() as i64 - x.den().deg() as i64) % 2 != 0 {
                    data.insert(PlaceDatum::Infinity);
                }
            }
        }
        for c in alpha.terms().keys() {
            match c {
                SquareClass::Rational { primes, .. } => {
                    data.extend(primes.iter().map(|p| PlaceDatum::Prime(p.clone())));
                }
                SquareClass::Function { irreducibles, odd_degree, .. } => {
                    data.extend(irreducibles.iter().map(|p| PlaceDatum::Irreducible(p.clone())));
                    if *odd_degree {
                        data.insert(PlaceDatum::Infinity);
                    }
                }
                SquareClass::Finite(_) => {}
            }
        }
    }
    data.into_iter().map(|d| Place::new(f, d)).collect()
}

/// Local images with `ε = -1` into the odd part of `RedP(k_v)` at the given places.
pub fn global_image_at(sum: &SymbolSum<GlobalField>, places: &[Place]) -> Result<Vec<GlobalEntry>> {
    let mut out = Vec::new();
    for place in places {
        let map = SpecializationMap::new(place, &place.default_uniformizer(), -1, NodeName::RedP)?;
        out.push(GlobalEntry { place: place.clone(), image: map.specialize_odd(sum)? });
    }
    Ok(out)
}

/// The multi-place map on sums in `½ I_F·RB(F)`: its local images vanish away
/// from [`candidate_places`], so only those are evaluated; zero images are dropped.
pub fn global_image(sum: &SymbolSum<GlobalField>) -> Result<GlobalImage> {
    let places = candidate_places(sum)?;
    let mut entries = global_image_at(sum, &places)?;
    entries.retain(|e| !e.image.is_zero());
    Ok(GlobalImage { entries })
}
