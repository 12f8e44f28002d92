use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::map::SpecializationMap;
use crate::error::{Error, Result};
use crate::exactalg::GroupElement;
use crate::fields::{Field, GlobalElem, GlobalField, Place, Poly};
use crate::identities::relator_refined;

/// The eight valuation patterns of a pair `(x, y)`; `U₁` is the group of
/// principal units.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationCase {
    /// `v(x) = v(y) ≠ 0`
    I,
    /// `v(x), v(y) ≠ 0`, `v(x) ≠ v(y)`
    II,
    /// `x, y ∈ U₁`
    III,
    /// `x ∈ U₁`, `v(y) ≠ 0`
    IV,
    /// `x ∈ U ∖ U₁`, `v(y) ≠ 0`
    V,
    /// `y ∈ U ∖ U₁`, `v(x) ≠ 0`
    VI,
    /// `x ∈ U ∖ U₁`, `y ∈ U₁`
    VII,
    /// `x, y ∈ U ∖ U₁`
    VIII,
}

impl RelationCase {
    pub const ALL: [RelationCase; 8] = [
        RelationCase::I,
        RelationCase::II,
        RelationCase::III,
        RelationCase::IV,
        RelationCase::V,
        RelationCase::VI,
        RelationCase::VII,
        RelationCase::VIII,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> &'static str {
        ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii"][self.index()]
    }
}

impl fmt::Display for RelationCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label())
    }
}

/// Case of a pair; `mirrored` is set when the roles of `x` and `y` are
/// swapped relative to the case description (only possible for IV and VII).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub case: RelationCase,
    pub mirrored: bool,
}

pub fn classify(place: &Place, x: &GlobalElem, y: &GlobalElem) -> Result<Classification> {
    let (vx, vy) = (place.valuation(x)?, place.valuation(y)?);
    let plain = |case| Classification { case, mirrored: false };
    let mirror = |case| Classification { case, mirrored: true };
    Ok(match (vx != 0, vy != 0) {
        (true, true) if vx == vy => plain(RelationCase::I),
        (true, true) => plain(RelationCase::II),
        (false, true) if place.is_principal_unit(x)? => plain(RelationCase::IV),
        (false, true) => plain(RelationCase::V),
        (true, false) if place.is_principal_unit(y)? => mirror(RelationCase::IV),
        (true, false) => plain(RelationCase::VI),
        (false, false) => match (place.is_principal_unit(x)?, place.is_principal_unit(y)?) {
            (true, true) => plain(RelationCase::III),
            (false, true) => plain(RelationCase::VII),
            (true, false) => mirror(RelationCase::VII),
            (false, false) => plain(RelationCase::VIII),
        },
    })
}

fn check_pair(f: &GlobalField, x: &GlobalElem, y: &GlobalElem) -> Result<()> {
    for z in [x, y] {
        if f.is_zero(z) || f.is_one(z) {
            return Err(Error::BadArgument(format!("{} must differ from 0 and 1", f.format_elem(z))));
        }
    }
    if x == y {
        return Err(Error::BadArgument("relation needs x != y".into()));
    }
    Ok(())
}

/// Image of the refined relator `S_{x,y}` under the map; zero when the map is well defined.
pub fn relation_image(map: &SpecializationMap, x: &GlobalElem, y: &GlobalElem) -> Result<GroupElement> {
    check_pair(map.field(), x, y)?;
    map.specialize(&relator_refined(map.field(), x, y)?)
}

/// Per-place outcome of the stratified relator fuzz.
#[derive(Clone, Debug)]
pub struct FuzzReport {
    pub place: String,
    pub pairs: usize,
    pub counts: [usize; 8],
    pub mirrored: usize,
    /// Pairs whose image was nonzero.
    pub failures: Vec<(String, String)>,
}

impl FuzzReport {
    pub fn passed(&self, min_per_case: usize) -> bool {
        self.failures.is_empty() && self.counts.iter().all(|&c| c >= min_per_case)
    }

    pub fn to_json(&self) -> Value {
        let counts: serde_json::Map<String, Value> =
            RelationCase::ALL.iter().map(|c| (c.label().to_string(), json!(self.counts[c.index()]))).collect();
        json!({
            "place": self.place,
            "pairs": self.pairs,
            "case_counts": counts,
            "mirrored": self.mirrored,
            "failures": self.failures.iter().map(|(x, y)| json!([x, y])).collect::<Vec<_>>(),
        })
    }
}

struct Sampler<'a> {
    map: &'a SpecializationMap,
    rng: ChaCha8Rng,
}

impl Sampler<'_> {
    fn field(&self) -> &GlobalField {
        self.map.field()
    }

    fn pi(&self) -> &GlobalElem {
        self.map.rho().uniformizer()
    }

    fn raw(&mut self) -> Result<GlobalElem> {
        let f = self.field().clone();
        match &f {
            GlobalField::Rational => {
                let mut n = 0;
                while n == 0 {
                    n = self.rng.gen_range(-60i64..=60);
                }
                let d = self.rng.gen_range(1i64..=60);
                f.rat(n, d)
            }
            GlobalField::Function(k) => {
                let poly = |rng: &mut ChaCha8Rng| loop {
                    let deg = rng.gen_range(0..=3usize);
                    let c = (0..=deg).map(|_| k.from_code(rng.gen_range(0..k.q())).expect("in range")).collect();
                    let p = Poly::new(c);
                    if !p.is_zero() {
                        return p;
                    }
                };
                let (n, d) = (poly(&mut self.rng), poly(&mut self.rng));
                f.ratfunc(n, d)
            }
        }
    }

    fn unit(&mut self) -> Result<GlobalElem> {
        let a = self.raw()?;
        let v = self.map.place().valuation(&a)?;
        let f = self.field().clone();
        Ok(f.mul(&a, &f.pow(self.pi(), -v)?))
    }

    fn principal(&mut self) -> Result<GlobalElem> {
        let m = self.rng.gen_range(1..=2);
        let f = self.field().clone();
        let u = self.unit()?;
        Ok(f.add(&f.one(), &f.mul(&u, &f.pow(self.pi(), m)?)))
    }

    fn nonprincipal(&mut self) -> Result<GlobalElem> {
        for _ in 0..1000 {
            let u = self.unit()?;
            if !self.map.place().is_principal_unit(&u)? {
                return Ok(u);
            }
        }
        Err(Error::Unsupported("residue field has no units other than 1".into()))
    }

    fn nonunit(&mut self, v: i64) -> Result<GlobalElem> {
        let f = self.field().clone();
        let u = self.unit()?;
        Ok(f.mul(&u, &f.pow(self.pi(), v)?))
    }

    fn valuation(&mut self) -> i64 {
        let v = self.rng.gen_range(1..=2);
        if self.rng.gen_bool(0.5) {
            v
        } else {
            -v
        }
    }

    fn pair(&mut self, case: RelationCase) -> Result<(GlobalElem, GlobalElem)> {
        let swap = self.rng.gen_bool(0.5);
        let (x, y) = match case {
            RelationCase::I => {
                let v = self.valuation();
                (self.nonunit(v)?, self.nonunit(v)?)
            }
            RelationCase::II => {
                let v = self.valuation();
                let mut w = self.valuation();
                while w == v {
                    w = self.valuation();
                }
                (self.nonunit(v)?, self.nonunit(w)?)
            }
            RelationCase::III => (self.principal()?, self.principal()?),
            RelationCase::IV => {
                let v = self.valuation();
                let (a, b) = (self.principal()?, self.nonunit(v)?);
                if swap {
                    (b, a)
                } else {
                    (a, b)
                }
            }
            RelationCase::V => {
                let v = self.valuation();
                (self.nonprincipal()?, self.nonunit(v)?)
            }
            RelationCase::VI => {
                let v = self.valuation();
                (self.nonunit(v)?, self.nonprincipal()?)
            }
            RelationCase::VII => {
                let (a, b) = (self.nonprincipal()?, self.principal()?);
                if swap {
                    (b, a)
                } else {
                    (a, b)
                }
            }
            RelationCase::VIII => (self.nonprincipal()?, self.nonprincipal()?),
        };
        Ok((x, y))
    }
}

/// Runs `pairs` relator images through the map, cycling through the eight
/// cases so each gets an equal share. Every image must vanish.
pub fn fuzz_relations(map: &SpecializationMap, pairs: usize, seed: u64) -> Result<FuzzReport> {
    let place = map.place().clone();
    let f = map.field().clone();
    let mut s = Sampler { map, rng: ChaCha8Rng::seed_from_u64(seed) };
    let mut counts = [0usize; 8];
    let mut mirrored = 0;
    let mut failures = Vec::new();
    for i in 0..pairs {
        let want = RelationCase::ALL[i % 8];
        let (x, y) = loop {
            let (x, y) = s.pair(want)?;
            if check_pair(&f, &x, &y).is_ok() {
                break (x, y);
            }
        };
        let c = classify(&place, &x, &y)?;
        counts[c.case.index()] += 1;
        mirrored += usize::from(c.mirrored);
        if !relation_image(map, &x, &y)?.is_zero() {
            failures.push((f.format_elem(&x), f.format_elem(&y)));
        }
    }
    Ok(FuzzReport { place: place.label(), pairs, counts, mirrored, failures })
}
