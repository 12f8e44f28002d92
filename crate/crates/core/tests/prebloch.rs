use bloch_core::fields::FqField;
use bloch_core::prebloch::{Flavor, PreBlochPresentation};
use num_bigint::BigInt;

fn build(q: u64, flavor: Flavor) -> PreBlochPresentation {
    PreBlochPresentation::build(&FqField::of_order(q).unwrap(), flavor).unwrap()
}

#[test]
fn bloch_orders_odd() {
    for q in [5u64, 7, 9, 11, 13, 17, 19, 23, 25, 27] {
        let r = build(q, Flavor::Refined);
        let c = build(q, Flavor::Classical);
        assert_eq!(r.bloch_group().order(), Some(BigInt::from((q + 1) / 2)), "q={q}");
        assert_eq!(r.bloch_group().invariant_factors(), c.bloch_group().invariant_factors(), "q={q}");
    }
}

#[test]
fn bloch_orders_even() {
    for q in [4u64, 8, 16] {
        let c = build(q, Flavor::Classical);
        assert_eq!(c.bloch_group().order(), Some(BigInt::from(q + 1)), "q={q}");
    }
}
