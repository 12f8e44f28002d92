//! Integer factorization for square-class extraction over Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const TRIAL_LIMIT: u64 = 10_000;

/// Miller-Rabin with the first twelve prime bases (deterministic below 3.3e24).
pub fn is_probable_prime(n: &BigInt) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    for &p in &WITNESSES {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if n.is_multiple_of(&p) {
            return false;
        }
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let mut d = nm1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn is_prime_u64(n: u64) -> bool {
    is_probable_prime(&BigInt::from(n))
}

fn pollard_brent(n: &BigInt) -> BigInt {
    // n is odd, composite, and has no small factors
    let one = BigInt::one();
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut y = BigInt::from(2);
        let mut r: u64 = 1;
        let mut q = BigInt::one();
        let m: u64 = 64;
        let mut g = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    q = (&q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
        c += 1;
    }
}

fn split(n: BigInt, out: &mut Vec<BigInt>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(&n);
    let e = &n / &d;
    split(d, out);
    split(e, out);
}

/// Prime factorization of `|n|` for nonzero `n`, primes ascending.
pub fn factor_integer(n: &BigInt) -> Vec<(BigInt, u32)> {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut n = n.abs();
    let mut primes: Vec<BigInt> = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        while n.is_multiple_of(&bp) {
            n /= &bp;
            primes.push(bp.clone());
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        split(n, &mut primes);
    }
    primes.sort();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    for q in primes {
        match out.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => out.push((q, 1)),
        }
    }
    out
}

/// Factorization of a machine integer.
pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    factor_integer(&BigInt::from(n))
        .into_iter()
        .map(|(p, e)| (p.to_u64().expect("factor of a u64"), e))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reconstructs_integers() {
        for n in (1u64..2000).chain([999_983, 1_000_000, 600_851_475_143, 18_446_744_073_709_551_557]) {
            let f = factor_u64(n);
            let prod: u128 = f.iter().map(|&(p, e)| (p as u128).pow(e)).product();
            assert_eq!(prod, n as u128);
            assert!(f.iter().all(|&(p, _)| is_prime_u64(p)));
        }
        let big = BigInt::from(1_000_000_007u64) * BigInt::from(998_244_353u64);
        let f = factor_integer(&big);
        assert_eq!(f, vec![(BigInt::from(998_244_353u64), 1), (BigInt::from(1_000_000_007u64), 1)]);
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (2..100).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(primes.len(), 25);
        assert!(!is_prime_u64(561));
        assert!(!is_prime_u64(1));
    }
}
