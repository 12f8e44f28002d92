use std::fs;
use std::io::Read;

use bloch_core::crossratio::{cyclic_h3_image, sample_pairs, torus_element, SL2Elem};
use bloch_core::fields::{Field, FqField, GlobalField, Place};
use bloch_core::identities::{Identity, Params, SymbolSum, Verifier};
use bloch_core::partition::{census, orbit_laws};
use bloch_core::prebloch::{NodeName, Tower};
use bloch_core::specialize::{
    classify, fuzz_relations, global_image, rank_bound, relation_image, witness_matrix, SpecializationMap,
};
use bloch_core::{Error, Result};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::report::{Check, RunReport};

fn num(b: &BigInt) -> Value {
    match b.to_i64() {
        Some(v) => json!(v),
        None => json!(b.to_string()),
    }
}

fn nums(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(num).collect())
}

fn odd_part(mut n: u64) -> u64 {
    while n > 0 && n % 2 == 0 {
        n /= 2;
    }
    n
}

/// Node name, plus whether the Bloch kernel of the node is meant.
fn parse_node(s: &str) -> Result<(NodeName, bool)> {
    let bloch = [
        ("RB", NodeName::RP),
        ("RBtilde", NodeName::RPtilde),
        ("RBhat", NodeName::RPhat),
        ("RBbar", NodeName::RPbar),
        ("B", NodeName::P),
        ("RedB", NodeName::RedP),
        ("RedBbar", NodeName::RedPbar),
    ];
    if let Some((_, n)) = bloch.iter().find(|(name, _)| name.eq_ignore_ascii_case(s)) {
        return Ok((*n, true));
    }
    Ok((s.parse()?, false))
}

fn expected_bloch_order(q: u64, node: NodeName) -> Option<u64> {
    let full = if q % 2 == 1 { (q + 1) / 2 } else { q + 1 };
    match node {
        NodeName::RP | NodeName::P => Some(full),
        NodeName::RPtilde if q % 4 == 3 && q > 3 => Some((q + 1) / 4),
        _ => None,
    }
}

pub fn finite(q: u64, node: &str) -> Result<RunReport> {
    let (name, bloch) = parse_node(node)?;
    let k = FqField::of_order(q)?;
    let tower = Tower::build(&k)?;
    let n = tower.node(name);
    let g = if bloch { n.bloch_group() } else { n.group() };
    let mut r = RunReport::default();
    r.set("q", json!(q));
    r.set("node", json!(node));
    r.set("invariant_factors", nums(&g.invariant_factors()));
    r.set("free_rank", json!(g.free_rank()));
    r.set("order", g.order().as_ref().map_or(Value::Null, num));
    if bloch {
        if let Some(want) = expected_bloch_order(q, name) {
            r.check(Check::new("bloch_order", json!({ "q": q, "node": node }), json!(want), r.fields["order"].clone()));
        }
    }
    if name == NodeName::P && !bloch && q == 3 {
        r.check(Check::new("order", json!({ "q": 3, "node": node }), json!(4), r.fields["order"].clone()));
    }
    Ok(r)
}

pub fn verify(q: u64, suite: &str, i: Option<u8>, x: Option<&str>, y: Option<&str>) -> Result<RunReport> {
    let k = FqField::of_order(q)?;
    let tower = Tower::build(&k)?;
    let v = Verifier::new(&tower);
    let ids: Vec<Identity> = if suite == "all" { Identity::all() } else { vec![suite.parse()?] };
    let mut r = RunReport::default();
    r.set("q", json!(q));
    r.set("suite", json!(suite));
    if x.is_some() || y.is_some() || i.is_some() {
        let params = Params { i, x: x.map(|s| k.parse(s)).transpose()?, y: y.map(|s| k.parse(s)).transpose()? };
        let mut verdicts = Vec::new();
        for id in ids {
            let verdict = v.verify(id, &params)?;
            r.check(Check::new(id.name(), json!({ "q": q }), json!(true), json!(verdict.holds)));
            verdicts.push(verdict.to_json(&k));
        }
        r.set("verdicts", Value::Array(verdicts));
        return Ok(r);
    }
    let mut failures = Vec::new();
    for id in ids {
        let res = v.exhaustive(id)?;
        r.check(Check::new(
            id.name(),
            json!({ "q": q, "checked": res.checked }),
            json!(0),
            json!(res.failures.len()),
        ));
        failures.extend(res.failures.iter().take(5).map(|f| f.to_json(&k)));
    }
    r.set("failures", Value::Array(failures));
    Ok(r)
}

fn read_input(path: &str) -> Result<Value> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::BadArgument(e.to_string()))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Error::BadArgument(format!("{path}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))
}

fn read_sum(field: &GlobalField, path: &str) -> Result<SymbolSum<GlobalField>> {
    let v = read_input(path)?;
    if let Some(name) = v.get("field").and_then(Value::as_str) {
        if GlobalField::parse_field(name)? != *field {
            return Err(Error::BadArgument(format!("input sum is over {name}, not {}", field.name())));
        }
    }
    SymbolSum::from_json(field, &v)
}

pub struct SpecializeArgs<'a> {
    pub field: &'a str,
    pub place: &'a str,
    pub eps: i8,
    pub uniformizer: Option<&'a str>,
    pub node: &'a str,
    pub input: Option<&'a str>,
    pub odd: bool,
    pub relation: Option<&'a str>,
    pub fuzz: Option<usize>,
    pub seed: u64,
}

pub fn specialize(a: &SpecializeArgs) -> Result<RunReport> {
    let field = GlobalField::parse_field(a.field)?;
    let place = Place::parse(&field, a.place)?;
    let pi = match a.uniformizer {
        Some(s) => field.parse_elem(s)?,
        None => place.default_uniformizer(),
    };
    let node: NodeName = a.node.parse()?;
    let map = SpecializationMap::new(&place, &pi, a.eps, node)?;
    let mut r = RunReport::default();
    r.set("field", json!(field.name()));
    r.set("place", json!(place.label()));
    r.set("residue_field", json!(place.residue_field().name()));
    r.set("uniformizer", json!(field.format_elem(&pi)));
    r.set("eps", json!(a.eps));
    r.set("target", json!(node.as_str()));
    if let Some(path) = a.input {
        let sum = read_sum(&field, path)?;
        let odd = a.odd || !sum.is_integral();
        r.set("odd_localized", json!(odd));
        if odd {
            let img = map.specialize_odd(&sum)?;
            r.set("image", json!(img.to_string()));
            r.set("image_order", img.order().as_ref().map_or(Value::Null, num));
            r.set("is_zero", json!(img.is_zero()));
        } else {
            let img = map.specialize(&sum)?;
            r.set("image", json!(img.to_string()));
            r.set("image_coords", nums(img.coords()));
            r.set("image_order", img.order().as_ref().map_or(Value::Null, num));
            r.set("is_zero", json!(img.is_zero()));
        }
    }
    if let Some(rel) = a.relation {
        let (xs, ys) = rel
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("relation needs x,y, got {rel:?}")))?;
        let (x, y) = (field.parse_elem(xs)?, field.parse_elem(ys)?);
        let img = relation_image(&map, &x, &y)?;
        let c = classify(&place, &x, &y)?;
        r.set("relation", json!({ "x": xs.trim(), "y": ys.trim(), "case": c.case.label(), "mirrored": c.mirrored }));
        r.check(Check::new("relation_vanishes", json!({ "x": xs.trim(), "y": ys.trim() }), json!(true), json!(img.is_zero())));
    }
    if let Some(n) = a.fuzz {
        let rep = fuzz_relations(&map, n, a.seed)?;
        r.set("fuzz", rep.to_json());
        r.check(Check::new("fuzz_failures", json!({ "pairs": n, "seed": a.seed }), json!(0), json!(rep.failures.len())));
    }
    Ok(r)
}

pub fn global(field: &str, input: &str) -> Result<RunReport> {
    let field = GlobalField::parse_field(field)?;
    let sum = read_sum(&field, input)?;
    let g = global_image(&sum)?;
    let mut r = RunReport::default();
    r.set("field", json!(field.name()));
    r.set("eps", json!(-1));
    r.set("target", json!("RedP (odd part)"));
    r.set("global_image", g.to_json());
    Ok(r)
}

pub fn counts(q: u64) -> Result<RunReport> {
    let k = FqField::of_order(q)?;
    let c = census(&k)?;
    let mut r = RunReport::default();
    r.set("census", c.to_json());
    r.check(Check::new("census", json!({ "q": q }), c.to_json()["expected"].clone(), c.to_json()["actual"].clone()));
    for law in orbit_laws(&k)? {
        r.check(Check::new(law.name.clone(), json!({ "q": q }), json!(true), json!(law.holds)));
    }
    Ok(r)
}

pub fn h3cyclic(q: u64, order: Option<u64>, t0: bool, seed: u64) -> Result<RunReport> {
    let k = FqField::of_order(q)?;
    let t = if t0 {
        SL2Elem::order_three(&k)
    } else {
        let r = order.ok_or_else(|| Error::BadArgument("--order is required unless --t0 is given".into()))?;
        torus_element(&k, r)?
    };
    let r_t = t.order(4 * q + 4).ok_or_else(|| Error::BadArgument("t has no small finite order".into()))?;
    let (x, y) = sample_pairs(&t, 1, seed)?
        .into_iter()
        .next()
        .ok_or(Error::BadStabilizer)?;
    let sum = cyclic_h3_image(&t, &x, &y)?;
    let tower = Tower::build(&k)?;
    let rp = tower.node(NodeName::RP);
    let img = tower.eval(NodeName::RP, &sum)?;
    let in_bloch = rp.in_bloch(&img)?;
    let mut r = RunReport::default();
    r.set("q", json!(q));
    let entries: Vec<String> = t.entries().iter().map(|e| k.format(*e)).collect();
    r.set("t", json!([[entries[0], entries[1]], [entries[2], entries[3]]]));
    r.set("order_of_t", json!(r_t));
    r.set("x", json!(x.format(&k)));
    r.set("y", json!(y.format(&k)));
    r.set("sum", sum.to_json()?);
    r.check(Check::new("in_bloch", json!({}), json!(true), json!(in_bloch)));
    if in_bloch {
        let odd = rp.to_bloch_odd(&img)?;
        let ord = odd.order().unwrap_or_default();
        r.set("image", json!(odd.to_string()));
        r.set("order_in_RB_odd", num(&ord));
        let divides = ord.to_u64().is_some_and(|o| o > 0 && odd_part(r_t) % o == 0);
        r.check(Check::new("order_divides_odd_part_of_r", json!({ "r": r_t }), json!(true), json!(divides)));
        if odd_part(r_t) == odd_part(q + 1) {
            r.check(Check::new("order_is_odd_part_of_q_plus_1", json!({ "q": q }), json!(odd_part(q + 1)), num(&ord)));
        }
    }
    if t0 {
        let minus_c = tower.c(NodeName::RP)?.neg();
        r.check(Check::new("equals_minus_c", json!({ "q": q }), json!(minus_c.to_string()), json!(img.to_string())));
    }
    Ok(r)
}

fn parse_primes(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad prime {p:?}"))))
        .collect()
}

pub fn rankbound(primes: &str) -> Result<RunReport> {
    let ps = parse_primes(primes)?;
    let mut r = RunReport::default();
    r.set("primes", json!(ps));
    r.set("bound", json!(rank_bound(&ps)?));
    Ok(r)
}

pub fn witness(primes: &str) -> Result<RunReport> {
    let ps = parse_primes(primes)?;
    let w = witness_matrix(&ps)?;
    let mut r = RunReport::default();
    r.set("witness", w.to_json());
    for (i, v) in ps.iter().enumerate() {
        for (j, u) in ps.iter().enumerate() {
            r.check(Check::new(
                "matrix_entry",
                json!({ "v": v, "w": u }),
                json!(w.expected[i][j].to_string()),
                json!(w.matrix[i][j].to_string()),
            ));
        }
        r.check(Check::new("kernel_vanishes", json!({ "v": v }), json!(true), json!(w.kernel_images[i].is_zero())));
        r.check(Check::new(
            "kernel_detected",
            json!({ "v": v }),
            json!(w.kernel_expected[i].to_string()),
            json!(w.kernel_detect[i].to_string()),
        ));
    }
    Ok(r)
}
