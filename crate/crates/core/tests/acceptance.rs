//! End-to-end acceptance checks; prints one PASS/FAIL line per criterion.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use bloch_core::crossratio::{cyclic_h3_image, sample_pairs, torus_element, SL2Elem};
use bloch_core::fields::{Field, FqField, GlobalField, Place};
use bloch_core::groupring::GroupRingElement;
use bloch_core::identities::{Identity, SymbolSum, Verifier};
use bloch_core::partition::{census, orbit_check, sum_of_squares};
use bloch_core::prebloch::{NodeName, Tower};
use bloch_core::specialize::{
    check_surjectivity, fuzz_relations, global_image, global_image_at, order3_sum, rank_bound, witness_matrix,
    SpecializationMap,
};
use num_bigint::BigInt;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<T: std::fmt::Debug>(x: T) -> String {
    format!("{x:?}")
}

struct Towers(BTreeMap<u64, (Tower, Duration)>);

impl Towers {
    fn get(&mut self, q: u64) -> Result<&(Tower, Duration), String> {
        if !self.0.contains_key(&q) {
            let start = Instant::now();
            let t = Tower::build(&FqField::of_order(q).map_err(e)?).map_err(e)?;
            self.0.insert(q, (t, start.elapsed()));
        }
        Ok(&self.0[&q])
    }
}

const ODD: [u64; 10] = [5, 7, 9, 11, 13, 17, 19, 23, 25, 27];
const EVEN: [u64; 3] = [4, 8, 16];

fn bloch_order(t: &Tower, n: NodeName) -> Option<BigInt> {
    t.node(n).bloch_group().order()
}

fn c1(towers: &mut Towers) -> Outcome {
    let start = Instant::now();
    for q in ODD {
        let (t, dt) = towers.get(q)?;
        ensure(*dt < Duration::from_secs(10), format!("q={q} took {dt:?}"))?;
        let want = BigInt::from((q + 1) / 2);
        ensure(bloch_order(t, NodeName::RP) == Some(want), format!("|RB(F_{q})| wrong"))?;
    }
    for q in EVEN {
        let (t, dt) = towers.get(q)?;
        ensure(*dt < Duration::from_secs(10), format!("q={q} took {dt:?}"))?;
        ensure(bloch_order(t, NodeName::P) == Some(BigInt::from(q + 1)), format!("|B(F_{q})| wrong"))?;
    }
    ensure(start.elapsed() < Duration::from_secs(120), "suite over 2 min")?;
    Ok(format!("13 fields in {:.1?}", start.elapsed()))
}

fn c2(towers: &mut Towers) -> Outcome {
    for q in ODD.iter().chain(&EVEN) {
        let (t, _) = towers.get(*q)?;
        let r = t.node(NodeName::RP).bloch_group().invariant_factors();
        let c = t.node(NodeName::P).bloch_group().invariant_factors();
        ensure(r == c, format!("q={q}: {r:?} vs {c:?}"))?;
    }
    Ok("invariant factors agree for 13 fields".into())
}

fn c3(towers: &mut Towers) -> Outcome {
    for q in [7u64, 11, 19, 23] {
        let (t, _) = towers.get(q)?;
        ensure(bloch_order(t, NodeName::RPtilde) == Some(BigInt::from((q + 1) / 4)), format!("q={q}"))?;
    }
    for q in ODD.iter().filter(|&&q| q % 4 == 1) {
        let (t, _) = towers.get(*q)?;
        let a = t.node(NodeName::RPtilde).bloch_group().invariant_factors();
        let b = t.node(NodeName::RP).bloch_group().invariant_factors();
        ensure(a == b, format!("q={q}: {a:?} vs {b:?}"))?;
    }
    Ok("q = 7, 11, 19, 23 and q ≡ 1 mod 4".into())
}

fn c4(towers: &mut Towers) -> Outcome {
    let f2 = Tower::small_field_table(2).map_err(e)?;
    let f3 = Tower::small_field_table(3).map_err(e)?;
    ensure(bloch_order(&f2, NodeName::RP) == Some(BigInt::from(3)), "RB(F_2)")?;
    ensure(bloch_order(&f3, NodeName::RP) == Some(BigInt::from(2)), "RB(F_3)")?;
    ensure(f3.node(NodeName::P).group().order() == Some(BigInt::from(4)), "P(F_3)")?;
    let _ = towers;
    Ok("3, 2, 4".into())
}

fn c5(towers: &mut Towers) -> Outcome {
    let ids: Vec<Identity> = {
        let mut v = vec![Identity::Cocycle];
        v.extend((1..=8).map(Identity::CocycleCor));
        v.extend([Identity::Lambda1Psi, Identity::Const, Identity::Order3, Identity::MinusOne, Identity::Df]);
        v
    };
    let mut checked = 0;
    for q in [5u64, 7, 9, 11, 13] {
        let (t, _) = towers.get(q)?;
        let v = Verifier::new(t);
        for &id in &ids {
            let r = v.exhaustive(id).map_err(e)?;
            ensure(r.passed(), format!("q={q} {id}: {} failures", r.failures.len()))?;
            checked += r.checked;
        }
    }
    Ok(format!("{checked} checks, 0 failures"))
}

fn rational_map(p: u64, eps: i8, node: NodeName) -> Result<SpecializationMap, String> {
    let place = Place::prime(p).map_err(e)?;
    SpecializationMap::new(&place, &GlobalField::Rational.from_int(p as i64), eps, node).map_err(e)
}

fn c6() -> Outcome {
    let start = Instant::now();
    let mut maps = Vec::new();
    for p in [3u64, 5, 7, 13] {
        maps.push(rational_map(p, -1, NodeName::RPhat)?);
    }
    let f5 = GlobalField::function(FqField::prime(5).map_err(e)?);
    for label in ["t", "inf"] {
        let place = Place::parse(&f5, label).map_err(e)?;
        maps.push(SpecializationMap::new(&place, &place.default_uniformizer(), -1, NodeName::RPhat).map_err(e)?);
    }
    let mut min = usize::MAX;
    for (i, m) in maps.iter().enumerate() {
        let r = fuzz_relations(m, 200, i as u64).map_err(e)?;
        ensure(r.passed(10), r.to_json().to_string())?;
        min = min.min(*r.counts.iter().min().unwrap_or(&0));
    }
    ensure(start.elapsed() < Duration::from_secs(60), "over 1 min")?;
    Ok(format!("6 places x 200 pairs, min per case {min}, {:.1?}", start.elapsed()))
}

fn c7() -> Outcome {
    let q = GlobalField::Rational;
    let m = rational_map(5, -1, NodeName::RPhat)?;
    let k = m.place().residue_field().clone();
    let sym = |a: i64| SymbolSum::symbol(&q, &q.from_int(a)).map_err(e);
    ensure(&m.specialize(&sym(5)?).map_err(e)? == m.b(), "[5] -> b")?;
    let two = m.tower().eval(NodeName::RPhat, &SymbolSum::symbol(&k, &k.from_int(2)).map_err(e)?).map_err(e)?;
    ensure(m.specialize(&sym(2)?).map_err(e)? == two, "[2] -> [2]")?;
    let seven = GroupRingElement::of(&q, &q.from_int(7)).map_err(e)?;
    let two_class = GroupRingElement::of(&k, &k.from_int(2)).map_err(e)?;
    for a in [2i64, 3, 4, 6, 7, 8, 9, 11, 12, 13, 14, 16] {
        let s = SymbolSum::term(&q, seven.clone(), &q.from_int(a)).map_err(e)?;
        let t = SymbolSum::term(&k, two_class.clone(), &k.from_int(a)).map_err(e)?;
        let want = m.tower().eval(NodeName::RPhat, &t).map_err(e)?;
        ensure(m.specialize(&s).map_err(e)? == want, format!("<7>[{a}]"))?;
    }
    Ok("[5], [2], <7>[a] for 12 units a".into())
}

fn c8() -> Outcome {
    for p in [5u64, 7, 13] {
        ensure(check_surjectivity(&rational_map(p, -1, NodeName::RPhat)?).map_err(e)?, format!("F_{p}"))?;
    }
    Ok("F_5, F_7, F_13".into())
}

fn c9(towers: &mut Towers) -> Outcome {
    for (q, r) in [(5u64, 3u64), (13, 7)] {
        let (tw, _) = towers.get(q)?;
        let k = tw.field().clone();
        let t = torus_element(&k, r).map_err(e)?;
        let pairs = sample_pairs(&t, 5, 0).map_err(e)?;
        ensure(pairs.len() == 5, "fewer than 5 admissible pairs")?;
        let rp = tw.node(NodeName::RP);
        let mut first = None;
        for (x, y) in &pairs {
            let img = tw.eval(NodeName::RP, &cyclic_h3_image(&t, x, y).map_err(e)?).map_err(e)?;
            ensure(rp.in_bloch(&img).map_err(e)?, "image not in RB")?;
            let odd = rp.to_bloch_odd(&img).map_err(e)?;
            ensure(odd.order() == Some(BigInt::from(r)), format!("q={q}: order {:?}", odd.order()))?;
            match &first {
                None => first = Some(odd),
                Some(f) => ensure(*f == odd, format!("q={q}: images differ"))?,
            }
        }
    }
    for q in [5u64, 11, 17] {
        let (tw, _) = towers.get(q)?;
        let k = tw.field().clone();
        let t = SL2Elem::order_three(&k);
        let minus_c = tw.c(NodeName::RP).map_err(e)?.neg();
        for (x, y) in sample_pairs(&t, 5, 1).map_err(e)? {
            let img = tw.eval(NodeName::RP, &cyclic_h3_image(&t, &x, &y).map_err(e)?).map_err(e)?;
            ensure(img == minus_c, format!("q={q}: t0 image is not -c"))?;
        }
    }
    Ok("orders 3 (q=5) and 7 (q=13) over 5 pairs; t0 = -c for q = 5, 11, 17".into())
}

fn c10() -> Outcome {
    for q in (3u64..=31).step_by(2) {
        let Ok(k) = FqField::of_order(q) else { continue };
        let c = census(&k).map_err(e)?;
        ensure(c.matches(), c.to_json().to_string())?;
        ensure(orbit_check(&k).map_err(e)?, format!("orbit laws fail for q={q}"))?;
        for n in k.nonzero().filter(|&n| !k.is_square(n).unwrap_or(true)) {
            let (a, b) = sum_of_squares(&k, n).map_err(e)?;
            ensure(k.add(a, b) == n, format!("q={q}"))?;
        }
    }
    Ok("odd q <= 31".into())
}

fn c11() -> Outcome {
    let r = witness_matrix(&[5, 11, 17]).map_err(e)?;
    ensure(r.matrix_holds(), r.to_json().to_string())?;
    ensure(r.c_orders.iter().all(|o| *o == BigInt::from(3)), "c not of order 3")?;
    ensure(rank_bound(&[5, 11, 17]).map_err(e)? == 4, "rank bound")?;
    ensure(r.kernel_holds(), "kernel witness")?;
    Ok("3x3 matrix = -diag(c), bound 4".into())
}

fn c12() -> Outcome {
    let q = GlobalField::Rational;
    let s = order3_sum()
        .map_err(e)?
        .neg()
        .scale(&GroupRingElement::e_minus(&q, &q.from_int(5)).map_err(e)?);
    let g = global_image(&s).map_err(e)?;
    ensure(g.support() == vec!["5".to_string()], format!("support {:?}", g.support()))?;
    let places: Vec<Place> = [3u64, 5, 7, 11, 13].iter().map(|&p| Place::prime(p).map_err(e)).collect::<Result<_, _>>()?;
    for entry in global_image_at(&s, &places).map_err(e)? {
        let p: u64 = entry.place.label().parse().map_err(e)?;
        let direct = rational_map(p, -1, NodeName::RedP)?.specialize_odd(&s).map_err(e)?;
        ensure(direct.torsion_coords() == entry.image.torsion_coords(), format!("mismatch at {p}"))?;
        ensure((p == 5) != entry.image.is_zero(), format!("support at {p}"))?;
    }
    Ok("support {5}".into())
}

fn main() {
    let mut towers = Towers(BTreeMap::new());
    let criteria: Vec<(&str, Box<dyn FnMut(&mut Towers) -> Outcome>)> = vec![
        ("Bloch-group orders", Box::new(c1)),
        ("refined/classical agreement", Box::new(c2)),
        ("quotient-tower orders", Box::new(c3)),
        ("small-field tables", Box::new(c4)),
        ("identity suite", Box::new(c5)),
        ("specialization well-definedness", Box::new(|_| c6())),
        ("specialization values", Box::new(|_| c7())),
        ("surjectivity at finite residue", Box::new(|_| c8())),
        ("cross-ratio recipe", Box::new(c9)),
        ("partition census", Box::new(|_| c10())),
        ("3-rank witnesses", Box::new(|_| c11())),
        ("global-map support", Box::new(|_| c12())),
    ];
    let mut failed = 0;
    for (i, (name, mut f)) in criteria.into_iter().enumerate() {
        let out = catch_unwind(AssertUnwindSafe(|| f(&mut towers))).unwrap_or_else(|_| Err("panicked".into()));
        match out {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
