use bloch_core::fields::{FqField, GlobalField, Place};
use bloch_core::fields::Field;
use bloch_core::partition::*;
use bloch_core::prebloch::Tower;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn odd_orders() -> Vec<u64> {
    vec![3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31]
}

#[test]
fn classify_examples() {
    let k13 = FqField::prime(13).unwrap();
    assert_eq!(classify(&k13, k13.from_int(4)).unwrap(), PartitionClass::R1);
    assert_eq!(classify(&k13, k13.from_int(3)).unwrap(), PartitionClass::Rm1);
    let k7 = FqField::prime(7).unwrap();
    assert_eq!(classify(&k7, k7.one()).unwrap(), PartitionClass::One);
    assert!(classify(&k7, k7.zero()).is_err());
    assert!(classify(&FqField::of_order(8).unwrap(), FqField::of_order(8).unwrap().one()).is_err());
}

#[test]
fn classify_matches_squares_table() {
    for q in odd_orders() {
        let k = FqField::of_order(q).unwrap();
        // squares by direct enumeration
        let squares: Vec<_> = k.nonzero().map(|x| k.mul(x, x)).collect();
        let sq = |x| squares.contains(&x);
        for x in k.nonzero().filter(|&x| x != k.one()) {
            let want = match (sq(x), sq(k.sub(k.one(), x))) {
                (true, true) => PartitionClass::R1,
                (true, false) => PartitionClass::Rm1,
                (false, true) => PartitionClass::N1,
                (false, false) => PartitionClass::Nm1,
            };
            assert_eq!(classify(&k, x).unwrap(), want);
        }
    }
}

#[test]
fn census_and_orbits() {
    let by = |q: u64| {
        let c = census(&FqField::of_order(q).unwrap()).unwrap();
        use PartitionClass::*;
        (c.count(Rm1), c.count(Nm1), c.count(N1), c.count(R1))
    };
    assert_eq!(by(13), (3, 3, 3, 2));
    assert_eq!(by(7), (1, 2, 1, 1));
    assert_eq!(by(5), (1, 1, 1, 0));
    for q in odd_orders() {
        let k = FqField::of_order(q).unwrap();
        let c = census(&k).unwrap();
        assert!(c.matches(), "{}", c.to_json());
        assert_eq!(c.counts.iter().sum::<u64>(), q - 1);
        assert!(orbit_check(&k).unwrap(), "q = {q}: {:?}", orbit_laws(&k).unwrap());
    }
}

#[test]
fn two_squares() {
    let check = |q: u64, n: i64| {
        let k = FqField::prime(q).unwrap();
        let (a, b) = sum_of_squares(&k, k.from_int(n)).unwrap();
        assert_eq!(k.add(a, b), k.from_int(n));
        (a.code(), b.code())
    };
    assert_eq!(check(7, 3), (1, 2));
    assert_eq!(check(5, 2), (1, 1));
    check(13, 2);
    let k13 = FqField::prime(13).unwrap();
    // the other decomposition 3 + 12 is valid too
    assert!(k13.is_square(k13.from_int(3)).unwrap() && k13.is_square(k13.from_int(12)).unwrap());
    assert!(sum_of_squares(&k13, k13.from_int(4)).is_err());
    for q in odd_orders() {
        let k = FqField::of_order(q).unwrap();
        for n in k.nonzero().filter(|&n| !k.is_square(n).unwrap()) {
            let (a, b) = sum_of_squares(&k, n).unwrap();
            assert!(k.is_square(a).unwrap() && k.is_square(b).unwrap() && b != k.zero());
            assert_eq!(k.add(a, b), n);
        }
    }
}

#[test]
fn lifted_classes() {
    let q = GlobalField::Rational;
    let p = Place::prime(13).unwrap();
    assert_eq!(classify_unit(&p, &q.from_int(17)).unwrap(), PartitionClass::R1);
    assert_eq!(classify_unit(&p, &q.from_int(14)).unwrap(), PartitionClass::One);
    assert!(classify_unit(&p, &q.from_int(13)).is_err());
}

#[test]
fn annihilation() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for q in [5u64, 7, 9, 11, 13] {
        let k = FqField::of_order(q).unwrap();
        let tower = Tower::build(&k).unwrap();
        let elems: Vec<_> = k.nonzero().collect();
        let mut hits = 0;
        while hits < 20 {
            let a = elems[rng.gen_range(0..elems.len())];
            let b = elems[rng.gen_range(0..elems.len())];
            let same = k.is_square(a).unwrap() == k.is_square(k.neg(b)).unwrap();
            if same {
                assert!(annihilates(&tower, a, b).unwrap(), "q = {q}, a = {a:?}, b = {b:?}");
                hits += 1;
            }
        }
    }
}
