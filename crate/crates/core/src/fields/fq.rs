use std::fmt;
use std::sync::Arc;

use super::factor::{factor_u64, is_prime_u64};
use crate::error::{Error, Result};

const TABLE_LIMIT: u64 = 1 << 16;

/// Element of a finite field: the code `Σ c_i p^i` of its residue
/// `Σ c_i x^i` modulo the field's defining polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqElem(pub(crate) u64);

impl FqElem {
    pub fn code(self) -> u64 {
        self.0
    }
}

struct Tables {
    exp: Vec<u64>,
    log: Vec<u32>,
}

struct Inner {
    p: u64,
    f: u32,
    q: u64,
    modulus: Vec<u64>,
    primitive: u64,
    tables: Option<Tables>,
}

/// The finite field GF(p^f) with a fixed defining polynomial.
#[derive(Clone)]
pub struct FqField(Arc<Inner>);

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FqField {}

impl fmt::Debug for FqField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

// Dense polynomials over GF(p), low degree first.
fn ptrim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    ptrim(out)
}

fn prem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut a = ptrim(a.to_vec());
    let dm = m.len() - 1;
    let inv = powmod(m[dm], p - 2, p);
    while a.len() > dm {
        let k = a.len() - 1;
        let c = mulmod(a[k], inv, p);
        for (i, &mi) in m.iter().enumerate() {
            let idx = k - dm + i;
            a[idx] = (a[idx] + p - mulmod(c, mi, p)) % p;
        }
        a = ptrim(a);
    }
    a
}

fn pgcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (ptrim(a.to_vec()), ptrim(b.to_vec()));
    while !b.is_empty() {
        let r = prem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn ppowmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut r = vec![1u64];
    let mut b = prem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = prem(&pmul(&r, &b, p), m, p);
        }
        b = prem(&pmul(&b, &b, p), m, p);
        e >>= 1;
    }
    r
}

/// Ben-Or irreducibility test for a monic polynomial over GF(p).
pub(crate) fn is_irreducible_mod_p(m: &[u64], p: u64) -> bool {
    let d = m.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x = vec![0, 1];
    let mut h = x.clone();
    for _ in 0..d / 2 {
        h = ppowmod(&h, p, m, p);
        let mut diff = h.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        if pgcd(m, &diff, p).len() > 1 {
            return false;
        }
    }
    true
}

impl FqField {
    /// GF(p^f) with the given defining polynomial (monic, low degree first),
    /// or the lexicographically smallest monic irreducible comparing `c_0` first.
    pub fn new(p: u64, f: u32, modulus: Option<Vec<u64>>) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if f == 0 {
            return Err(Error::BadArgument("extension degree must be positive".into()));
        }
        let q = p
            .checked_pow(f)
            .filter(|&q| q < (1 << 62))
            .ok_or_else(|| Error::Unsupported(format!("field of size {p}^{f} is too large")))?;
        let modulus = match modulus {
            Some(m) => {
                let m: Vec<u64> = m.into_iter().map(|c| c % p).collect();
                if m.len() != f as usize + 1 || m[f as usize] != 1 || !is_irreducible_mod_p(&m, p) {
                    return Err(Error::ReducibleModulus);
                }
                m
            }
            None => default_modulus(p, f)?,
        };
        let mut inner = Inner { p, f, q, modulus, primitive: 0, tables: None };
        inner.primitive = find_primitive(&inner);
        if q <= TABLE_LIMIT {
            let mut exp = Vec::with_capacity(q as usize - 1);
            let mut log = vec![0u32; q as usize];
            let mut x = 1u64;
            for k in 0..q - 1 {
                exp.push(x);
                log[x as usize] = k as u32;
                x = slow_mul(&inner, x, inner.primitive);
            }
            inner.tables = Some(Tables { exp, log });
        }
        Ok(FqField(Arc::new(inner)))
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// GF(q) for a prime power `q`, with the default modulus.
    pub fn of_order(q: u64) -> Result<Self> {
        let f = factor_u64(q);
        if f.len() != 1 {
            return Err(Error::BadArgument(format!("{q} is not a prime power")));
        }
        Self::new(f[0].0, f[0].1, None)
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn f(&self) -> u32 {
        self.0.f
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn name(&self) -> String {
        if self.0.f == 1 {
            format!("GF({})", self.0.p)
        } else {
            format!("GF({}^{})", self.0.p, self.0.f)
        }
    }

    pub fn zero(&self) -> FqElem {
        FqElem(0)
    }

    pub fn one(&self) -> FqElem {
        FqElem(1)
    }

    pub fn from_code(&self, c: u64) -> Result<FqElem> {
        if c < self.0.q {
            Ok(FqElem(c))
        } else {
            Err(Error::BadArgument(format!("code {c} out of range for {}", self.name())))
        }
    }

    pub fn from_int(&self, n: i64) -> FqElem {
        FqElem((n.rem_euclid(self.0.p as i64)) as u64)
    }

    /// Class of `x` modulo the defining polynomial.
    pub fn generator(&self) -> FqElem {
        if self.0.f == 1 {
            FqElem((self.0.p - self.0.modulus[0]) % self.0.p)
        } else {
            FqElem(self.0.p)
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        (0..self.0.q).map(FqElem)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = FqElem> {
        (1..self.0.q).map(FqElem)
    }

    pub fn digits(&self, a: FqElem) -> Vec<u64> {
        let p = self.0.p;
        let mut c = a.0;
        (0..self.0.f)
            .map(|_| {
                let d = c % p;
                c /= p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, d: &[u64]) -> FqElem {
        let p = self.0.p;
        let mut c = 0u64;
        for &x in d.iter().rev() {
            c = c * p + x % p;
        }
        FqElem(c)
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        let p = self.0.p;
        if self.0.f == 1 {
            return FqElem((a.0 + b.0) % p);
        }
        if p == 2 {
            return FqElem(a.0 ^ b.0);
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
        self.from_digits(&s)
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        let p = self.0.p;
        if self.0.f == 1 {
            return FqElem((p - a.0) % p);
        }
        if p == 2 {
            return a;
        }
        let d: Vec<u64> = self.digits(a).iter().map(|x| (p - x) % p).collect();
        self.from_digits(&d)
    }

    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        if a.0 == 0 || b.0 == 0 {
            return FqElem(0);
        }
        if self.0.f == 1 {
            return FqElem(mulmod(a.0, b.0, self.0.p));
        }
        match &self.0.tables {
            Some(t) => {
                let k = (t.log[a.0 as usize] as u64 + t.log[b.0 as usize] as u64) % (self.0.q - 1);
                FqElem(t.exp[k as usize])
            }
            None => FqElem(slow_mul(&self.0, a.0, b.0)),
        }
    }

    pub fn pow(&self, a: FqElem, e: u64) -> FqElem {
        if let (Some(t), true) = (&self.0.tables, a.0 != 0) {
            let k = (t.log[a.0 as usize] as u128 * e as u128) % (self.0.q as u128 - 1);
            return FqElem(t.exp[k as usize]);
        }
        let mut r = self.one();
        let mut b = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    /// Power with a signed exponent; fails for zero base and negative exponent.
    pub fn pow_signed(&self, a: FqElem, e: i64) -> Result<FqElem> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            Ok(self.pow(self.inv(a)?, e.unsigned_abs()))
        }
    }

    pub fn inv(&self, a: FqElem) -> Result<FqElem> {
        if a.0 == 0 {
            return Err(Error::ZeroInput);
        }
        if let Some(t) = &self.0.tables {
            let q1 = self.0.q - 1;
            let k = (q1 - t.log[a.0 as usize] as u64) % q1;
            return Ok(FqElem(t.exp[k as usize]));
        }
        Ok(self.pow(a, self.0.q - 2))
    }

    pub fn div(&self, a: FqElem, b: FqElem) -> Result<FqElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn is_square(&self, a: FqElem) -> Result<bool> {
        if a.0 == 0 {
            return Err(Error::ZeroInput);
        }
        if self.0.p == 2 {
            return Ok(true);
        }
        if let Some(t) = &self.0.tables {
            return Ok(t.log[a.0 as usize] % 2 == 0);
        }
        Ok(self.pow(a, (self.0.q - 1) / 2) == self.one())
    }

    pub fn smallest_nonsquare(&self) -> Option<FqElem> {
        if self.0.p == 2 {
            return None;
        }
        self.nonzero().find(|&a| !self.is_square(a).expect("nonzero"))
    }

    /// The smallest (by code) primitive element.
    pub fn primitive(&self) -> FqElem {
        FqElem(self.0.primitive)
    }

    /// Discrete logarithm to the base of [`FqField::primitive`].
    pub fn dlog(&self, a: FqElem) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::ZeroInput);
        }
        match &self.0.tables {
            Some(t) => Ok(t.log[a.0 as usize] as u64),
            None => Err(Error::Unsupported(format!("discrete logarithms in {}", self.name()))),
        }
    }

    pub fn exp(&self, k: u64) -> FqElem {
        self.pow(self.primitive(), k)
    }

    pub fn multiplicative_order(&self, a: FqElem) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::ZeroInput);
        }
        let mut n = self.0.q - 1;
        for (l, _) in factor_u64(self.0.q - 1) {
            while n % l == 0 && self.pow(a, n / l) == self.one() {
                n /= l;
            }
        }
        Ok(n)
    }

    pub fn format(&self, a: FqElem) -> String {
        if self.0.f == 1 {
            return a.0.to_string();
        }
        let d = self.digits(a);
        let mut terms = Vec::new();
        for (i, &c) in d.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// Parses an integer or a polynomial in `x` such as `2x^2+x+1`.
    pub fn parse(&self, s: &str) -> Result<FqElem> {
        let coeffs = parse_poly_terms(s, 'x')?;
        let p = self.0.p as i128;
        let mut acc = vec![0i128; coeffs.iter().map(|(e, _)| *e).max().unwrap_or(0) + 1];
        for (e, c) in coeffs {
            acc[e] = (acc[e] + c).rem_euclid(p);
        }
        let digits: Vec<u64> = acc.iter().map(|&c| c as u64).collect();
        Ok(self.reduce_digits(&digits))
    }

    /// Reduces an arbitrary-length coefficient list modulo the defining polynomial.
    pub fn reduce_digits(&self, d: &[u64]) -> FqElem {
        let p = self.0.p;
        let red = prem(&d.iter().map(|c| c % p).collect::<Vec<_>>(), &self.0.modulus, p);
        self.from_digits(&red)
    }
}

/// Parses `Σ c x^e` into (exponent, coefficient) pairs.
pub(crate) fn parse_poly_terms(s: &str, var: char) -> Result<Vec<(usize, i128)>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty literal".into()));
    }
    let bad = || Error::Parse(format!("cannot parse {s:?}"));
    let mut out = Vec::new();
    let bytes: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1i128;
        while i < bytes.len() && (bytes[i] == '+' || bytes[i] == '-') {
            if bytes[i] == '-' {
                sign = -sign;
            }
            i += 1;
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coef: Option<i128> = if i > start {
            Some(bytes[start..i].iter().collect::<String>().parse().map_err(|_| bad())?)
        } else {
            None
        };
        if i < bytes.len() && bytes[i] == '*' {
            i += 1;
        }
        let mut exp = 0usize;
        if i < bytes.len() && bytes[i] == var {
            i += 1;
            exp = 1;
            if i < bytes.len() && bytes[i] == '^' {
                i += 1;
                let s2 = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                exp = bytes[s2..i].iter().collect::<String>().parse().map_err(|_| bad())?;
            }
        } else if coef.is_none() {
            return Err(bad());
        }
        out.push((exp, sign * coef.unwrap_or(1)));
        if i < bytes.len() && bytes[i] != '+' && bytes[i] != '-' {
            return Err(bad());
        }
    }
    Ok(out)
}

fn slow_mul(inner: &Inner, a: u64, b: u64) -> u64 {
    let p = inner.p;
    let digits = |mut c: u64| -> Vec<u64> {
        let mut d = Vec::new();
        while c > 0 {
            d.push(c % p);
            c /= p;
        }
        d
    };
    let prod = prem(&pmul(&digits(a), &digits(b), p), &inner.modulus, p);
    let mut c = 0u64;
    for &x in prod.iter().rev() {
        c = c * p + x;
    }
    c
}

fn slow_pow(inner: &Inner, a: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    let mut b = a;
    while e > 0 {
        if e & 1 == 1 {
            r = slow_mul(inner, r, b);
        }
        b = slow_mul(inner, b, b);
        e >>= 1;
    }
    r
}

fn find_primitive(inner: &Inner) -> u64 {
    let q1 = inner.q - 1;
    if q1 == 1 {
        return 1;
    }
    let primes: Vec<u64> = factor_u64(q1).into_iter().map(|(l, _)| l).collect();
    (2..inner.q)
        .find(|&g| primes.iter().all(|&l| slow_pow(inner, g, q1 / l) != 1))
        .expect("finite fields have primitive elements")
}

fn default_modulus(p: u64, f: u32) -> Result<Vec<u64>> {
    if f == 1 {
        return Ok(vec![0, 1]);
    }
    let total = p.checked_pow(f).ok_or_else(|| Error::Unsupported("modulus search space".into()))?;
    for k in 0..total {
        // c_0 is the most significant digit of k, so k runs in lexicographic order
        let mut m = vec![0u64; f as usize + 1];
        let mut c = k;
        for j in (0..f as usize).rev() {
            m[j] = c % p;
            c /= p;
        }
        m[f as usize] = 1;
        if is_irreducible_mod_p(&m, p) {
            return Ok(m);
        }
    }
    Err(Error::ReducibleModulus)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction() {
        assert_eq!(FqField::new(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FqField::of_order(9).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FqField::of_order(8).unwrap().modulus(), &[1, 0, 1, 1]);
        assert_eq!(FqField::new(3, 2, Some(vec![2, 0, 1])).unwrap_err(), Error::ReducibleModulus);
        assert!(FqField::new(3, 2, Some(vec![2, 2, 1])).is_ok());
    }

    #[test]
    fn squares_match_brute_force() {
        for q in [3u64, 5, 7, 9, 11, 13, 25, 27, 49] {
            let k = FqField::of_order(q).unwrap();
            let squares: std::collections::BTreeSet<FqElem> = k.nonzero().map(|a| k.mul(a, a)).collect();
            for a in k.nonzero() {
                assert_eq!(k.is_square(a).unwrap(), squares.contains(&a), "q={q} a={a:?}");
            }
        }
        let k7 = FqField::prime(7).unwrap();
        assert!(k7.is_square(FqElem(2)).unwrap());
        assert!(!k7.is_square(FqElem(3)).unwrap());
        let k8 = FqField::of_order(8).unwrap();
        assert!(k8.nonzero().all(|a| k8.is_square(a).unwrap()));
        assert_eq!(k7.is_square(FqElem(0)).unwrap_err(), Error::ZeroInput);
    }

    #[test]
    fn field_axioms_and_tables() {
        for q in [4u64, 8, 9, 16, 25, 27] {
            let k = FqField::of_order(q).unwrap();
            for a in k.nonzero() {
                assert_eq!(k.mul(a, k.inv(a).unwrap()), k.one());
                assert_eq!(k.add(a, k.neg(a)), k.zero());
                for b in k.elements() {
                    assert_eq!(k.mul(a, b), FqElem(slow_mul(&k.0, a.0, b.0)));
                }
            }
            assert_eq!(k.multiplicative_order(k.primitive()).unwrap(), q - 1);
            assert_eq!(k.exp(k.dlog(k.generator()).unwrap()), k.generator());
        }
    }

    #[test]
    fn literals() {
        let k = FqField::of_order(9).unwrap();
        let a = k.parse("2x+1").unwrap();
        assert_eq!(k.format(a), "2x+1");
        assert_eq!(k.parse("x^2").unwrap(), k.parse("-1").unwrap());
        let big = FqField::prime(1_000_000_007).unwrap();
        assert_eq!(big.format(big.parse("-1").unwrap()), "1000000006");
        assert!(k.parse("2y").is_err());
    }
}
