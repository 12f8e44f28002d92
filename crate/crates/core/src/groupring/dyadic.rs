use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// A rational number with power-of-two denominator, `num / 2^exp`, kept reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    pub fn new(num: BigInt, exp: u32) -> Self {
        let mut d = Dyadic { num, exp };
        d.reduce();
        d
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Self {
        Dyadic { num: n.into(), exp: 0 }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn half() -> Self {
        Dyadic { num: BigInt::one(), exp: 1 }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.exp = 0;
            return;
        }
        while self.exp > 0 && self.num.is_even() {
            self.num /= 2;
            self.exp -= 1;
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    /// Exponent of the (reduced) denominator `2^exp`.
    pub fn log2_den(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.exp == 0
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.num.clone())
    }

    /// `self * 2^k` as an integer; `k` must be at least the denominator exponent.
    pub fn scaled_integer(&self, k: u32) -> BigInt {
        assert!(k >= self.exp, "scaling does not clear the denominator");
        &self.num << (k - self.exp) as usize
    }

    pub fn div_pow2(&self, k: u32) -> Self {
        Dyadic::new(self.num.clone(), self.exp + k)
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, BigInt::one() << self.exp as usize)
        }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exp.max(other.exp);
        self.scaled_integer(e).cmp(&other.scaled_integer(e))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, o: &Dyadic) -> Dyadic {
        let e = self.exp.max(o.exp);
        Dyadic::new(self.scaled_integer(e) + o.scaled_integer(e), e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, o: &Dyadic) -> Dyadic {
        let e = self.exp.max(o.exp);
        Dyadic::new(self.scaled_integer(e) - o.scaled_integer(e), e)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, o: &Dyadic) -> Dyadic {
        Dyadic::new(&self.num * &o.num, self.exp + o.exp)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { num: -&self.num, exp: self.exp }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let h = Dyadic::half();
        let s = &h + &h;
        assert_eq!(s, Dyadic::one());
        assert!(s.is_integer());
        let q = &h * &h;
        assert_eq!(q.log2_den(), 2);
        assert_eq!(q.to_string(), "1/4");
        assert_eq!(&(&q - &h) + &q, Dyadic::zero());
        assert!(q < h);
        assert_eq!(Dyadic::new(BigInt::from(12), 3).to_string(), "3/2");
    }
}
