use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::point::{ProjPoint, SL2Elem};
use crate::error::{Error, Result};
use crate::fields::{Field, FqElem, FqField};
use crate::groupring::GroupRingElement;
use crate::identities::SymbolSum;

type Point<F> = ProjPoint<<F as Field>::Elem>;

/// The single term `<c>[r]` attached to four distinct points of `P¹(F)`.
pub fn refined_cross_ratio<F: Field>(f: &F, pts: &[Point<F>; 4]) -> Result<SymbolSum<F>> {
    for i in 0..4 {
        for j in i + 1..4 {
            if pts[i] == pts[j] {
                return Err(Error::BadArgument("cross ratio needs four distinct points".into()));
            }
        }
    }
    let fin = |i: usize| match &pts[i] {
        ProjPoint::Affine(a) => Some(a.clone()),
        ProjPoint::Infinity => None,
    };
    let d = |a: &F::Elem, b: &F::Elem| f.sub(a, b);
    let (class, arg) = match (fin(0), fin(1), fin(2), fin(3)) {
        (Some(x0), Some(x1), Some(x2), Some(x3)) => (
            f.div(&f.mul(&d(&x2, &x0), &d(&x0, &x1)), &d(&x2, &x1))?,
            f.div(&f.mul(&d(&x2, &x1), &d(&x3, &x0)), &f.mul(&d(&x2, &x0), &d(&x3, &x1)))?,
        ),
        (None, Some(x1), Some(x2), Some(x3)) => (d(&x1, &x2), f.div(&d(&x1, &x2), &d(&x1, &x3))?),
        (Some(x0), None, Some(x2), Some(x3)) => (d(&x2, &x0), f.div(&d(&x3, &x0), &d(&x2, &x0))?),
        (Some(x0), Some(x1), None, Some(x3)) => (d(&x0, &x1), f.div(&d(&x3, &x0), &d(&x3, &x1))?),
        (Some(x0), Some(x1), Some(x2), None) => (
            f.div(&f.mul(&d(&x2, &x0), &d(&x0, &x1)), &d(&x2, &x1))?,
            f.div(&d(&x2, &x1), &d(&x2, &x0))?,
        ),
        _ => unreachable!("distinct points contain at most one infinity"),
    };
    SymbolSum::term(f, GroupRingElement::of(f, &class)?, &arg)
}

fn orbit<F: Field>(t: &SL2Elem<F>, x: &Point<F>, r: u64) -> Vec<Point<F>> {
    let mut out = vec![x.clone()];
    for _ in 1..r {
        out.push(t.apply(out.last().expect("nonempty")));
    }
    out
}

/// Largest order searched for when computing the order of `t`.
pub const ORDER_LIMIT: u64 = 1 << 20;

/// Image of the generator of `H₃(<t>)` in `RP(F)`, built from a point `x` with
/// trivial stabilizer and a point `y` off its orbit.
pub fn cyclic_h3_image<F: Field>(t: &SL2Elem<F>, x: &Point<F>, y: &Point<F>) -> Result<SymbolSum<F>> {
    let f = t.field();
    let r = t.order(ORDER_LIMIT).ok_or_else(|| Error::BadArgument("t does not have finite order".into()))?;
    if r < 2 {
        return Err(Error::BadArgument("t must have order at least 2".into()));
    }
    let xs = orbit(t, x, r);
    if xs[1..].contains(x) {
        return Err(Error::BadStabilizer);
    }
    if xs.contains(y) {
        return Err(Error::PointInOrbit);
    }
    let cr = |p: [&Point<F>; 4]| refined_cross_ratio(f, &p.map(Clone::clone));
    let ri = r as usize;
    // r = 2 forces t = -1, which fixes every point, so here r >= 3
    let mut sum = SymbolSum::zero(f);
    for i in 1..ri.saturating_sub(2) {
        sum = sum.add(&cr([&xs[0], &xs[1], &xs[i + 1], &xs[i + 2]])?);
    }
    let (x0, x1, xm) = (&xs[0], &xs[1], &xs[ri - 1]);
    sum = sum.add(&cr([y, x1, xm, x0])?).sub(&cr([y, x0, x1, xm])?);
    let ty = t.apply(y);
    if ty != *y {
        sum = sum.add(&cr([y, &ty, x0, x1])?).add(&cr([y, &ty, x1, x0])?);
    }
    Ok(sum)
}

/// A matrix `[[α, aβ], [β, α]]` with `α² - aβ² = 1`, `a` the smallest nonsquare,
/// of exact order `r`; such elements form a cyclic group of order `q + 1`.
pub fn torus_element(k: &FqField, r: u64) -> Result<SL2Elem<FqField>> {
    let q = k.q();
    if q % 2 == 0 {
        return Err(Error::EvenCharacteristic);
    }
    if r == 0 || (q + 1) % r != 0 {
        return Err(Error::BadArgument(format!("order {r} does not divide {}", q + 1)));
    }
    let a = k.smallest_nonsquare().ok_or(Error::EvenCharacteristic)?;
    for alpha in k.elements() {
        for beta in k.elements() {
            let det = k.sub(k.mul(alpha, alpha), k.mul(a, k.mul(beta, beta)));
            if det != k.one() {
                continue;
            }
            let t = SL2Elem::new(k, alpha, k.mul(a, beta), beta, alpha)?;
            if t.order(q + 1) == Some(r) {
                return Ok(t);
            }
        }
    }
    Err(Error::BadArgument(format!("no torus element of order {r}")))
}

pub fn all_points(k: &FqField) -> Vec<ProjPoint<FqElem>> {
    let mut v: Vec<_> = k.elements().map(ProjPoint::Affine).collect();
    v.push(ProjPoint::Infinity);
    v
}

/// All admissible `(x, y)` for `t`: `x` with trivial stabilizer, `y` off the orbit of `x`.
pub fn admissible_pairs(t: &SL2Elem<FqField>) -> Result<Vec<(ProjPoint<FqElem>, ProjPoint<FqElem>)>> {
    let k = t.field();
    let r = t.order(ORDER_LIMIT).ok_or_else(|| Error::BadArgument("t does not have finite order".into()))?;
    let pts = all_points(k);
    let mut out = Vec::new();
    for x in &pts {
        let xs = orbit(t, x, r);
        if xs[1..].contains(x) {
            continue;
        }
        for y in &pts {
            if !xs.contains(y) {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    Ok(out)
}

/// `n` admissible pairs drawn without replacement from a seeded shuffle.
pub fn sample_pairs(
    t: &SL2Elem<FqField>,
    n: usize,
    seed: u64,
) -> Result<Vec<(ProjPoint<FqElem>, ProjPoint<FqElem>)>> {
    let mut all = admissible_pairs(t)?;
    all.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    all.truncate(n);
    Ok(all)
}
