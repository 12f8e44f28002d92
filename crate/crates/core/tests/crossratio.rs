use bloch_core::crossratio::*;
use bloch_core::fields::FqField;
use bloch_core::groupring::GroupRingElement;
use bloch_core::identities::SymbolSum;
use bloch_core::prebloch::{NodeName, Tower};
use num_bigint::BigInt;

type Pt = ProjPoint<bloch_core::fields::FqElem>;

fn pt(k: &FqField, a: i64) -> Pt {
    ProjPoint::Affine(k.from_int(a))
}

#[test]
fn cross_ratio_cases() {
    let k = FqField::prime(7).unwrap();
    let x = k.from_int(5);
    let s = refined_cross_ratio(&k, &[ProjPoint::Infinity, pt(&k, 0), pt(&k, 1), ProjPoint::Affine(x)]).unwrap();
    let m1 = k.from_int(-1);
    let want = SymbolSum::term(&k, GroupRingElement::of(&k, &m1).unwrap(), &k.inv(x).unwrap()).unwrap();
    assert_eq!(s, want);

    let s = refined_cross_ratio(&k, &[pt(&k, 0), pt(&k, 1), pt(&k, 3), ProjPoint::Infinity]).unwrap();
    // <-3/2>[2/3] in GF(7): -3/2 = 2, 2/3 = 3
    let want = SymbolSum::term(&k, GroupRingElement::of(&k, &k.from_int(2)).unwrap(), &k.from_int(3)).unwrap();
    assert_eq!(s, want);
    assert!(refined_cross_ratio(&k, &[pt(&k, 0), pt(&k, 1), pt(&k, 1), pt(&k, 2)]).is_err());
}

// classical cross ratio from 2x2 determinants of homogeneous coordinates
fn classical(k: &FqField, p: &[Pt; 4]) -> bloch_core::fields::FqElem {
    let h: Vec<_> = p.iter().map(|x| x.homogeneous(k)).collect();
    let det = |i: usize, j: usize| k.sub(k.mul(h[i].0, h[j].1), k.mul(h[i].1, h[j].0));
    k.div(k.mul(det(2, 1), det(3, 0)), k.mul(det(2, 0), det(3, 1))).unwrap()
}

#[test]
fn classical_shadow_matches_determinant_formula() {
    let k = FqField::prime(11).unwrap();
    let pts = all_points(&k);
    let mut checked = 0;
    for a in 0..pts.len() {
        for b in 0..pts.len() {
            let quad = [pts[a].clone(), pts[b].clone(), pts[(a + 3) % 12].clone(), pts[(b + 7) % 12].clone()];
            let Ok(s) = refined_cross_ratio(&k, &quad) else { continue };
            let (arg, _) = s.terms().next().unwrap();
            assert_eq!(*arg, classical(&k, &quad));
            checked += 1;
        }
    }
    assert!(checked > 50);
}

fn image_odd(tower: &Tower, s: &SymbolSum<FqField>) -> bloch_core::exactalg::OddElement {
    let rp = tower.node(NodeName::RP);
    let x = tower.eval(NodeName::RP, s).unwrap();
    assert!(rp.in_bloch(&x).unwrap());
    rp.to_bloch_odd(&x).unwrap()
}

#[test]
fn order_three_is_minus_c() {
    for q in [5u64, 11, 17] {
        let k = FqField::prime(q).unwrap();
        let tower = Tower::build(&k).unwrap();
        let t = SL2Elem::order_three(&k);
        let minus_c = tower.c(NodeName::RP).unwrap().neg();
        for (x, y) in sample_pairs(&t, 6, q).unwrap() {
            let s = cyclic_h3_image(&t, &x, &y).unwrap();
            assert_eq!(tower.eval(NodeName::RP, &s).unwrap(), minus_c, "q = {q}");
        }
    }
}

#[test]
fn torus_images_have_full_odd_order() {
    for (q, r) in [(5u64, 3u64), (13, 7), (9, 5)] {
        let k = FqField::of_order(q).unwrap();
        let tower = Tower::build(&k).unwrap();
        let t = torus_element(&k, r).unwrap();
        assert_eq!(t.order(100), Some(r));
        let pairs = sample_pairs(&t, 6, 7).unwrap();
        assert!(pairs.len() >= 5);
        let first = image_odd(&tower, &cyclic_h3_image(&t, &pairs[0].0, &pairs[0].1).unwrap());
        assert_eq!(first.order(), Some(BigInt::from(r)));
        for (x, y) in &pairs[1..] {
            assert_eq!(image_odd(&tower, &cyclic_h3_image(&t, x, y).unwrap()), first);
        }
    }
}

#[test]
fn bad_inputs() {
    let k = FqField::prime(7).unwrap();
    let t = SL2Elem::order_three(&k);
    // t(x) = x iff x^2 - x + 1 = 0; over GF(7) x = 3, 5
    assert!(matches!(cyclic_h3_image(&t, &pt(&k, 3), &pt(&k, 2)), Err(bloch_core::Error::BadStabilizer)));
    let x = pt(&k, 2);
    let tx = t.apply(&x);
    assert!(matches!(cyclic_h3_image(&t, &x, &tx), Err(bloch_core::Error::PointInOrbit)));
    assert!(SL2Elem::from_ints(&k, 1, 1, 1, 1).is_err());
    assert!(torus_element(&k, 3).is_err());
}
