use super::fq::{parse_poly_terms, FqElem, FqField};
use crate::error::{Error, Result};

/// Polynomial over a finite field, low degree first, without trailing zeros.
///
/// The field is passed to every operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly(Vec<FqElem>);

const FACTOR_WORK_LIMIT: u64 = 4_000_000;

impl Poly {
    pub fn new(mut c: Vec<FqElem>) -> Self {
        while c.last().is_some_and(|x| x.0 == 0) {
            c.pop();
        }
        Poly(c)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![FqElem(1)])
    }

    pub fn constant(c: FqElem) -> Self {
        Poly::new(vec![c])
    }

    /// `t - c` written as the monomial list.
    pub fn linear(k: &FqField, c: FqElem) -> Self {
        Poly::new(vec![k.neg(c), k.one()])
    }

    pub fn var() -> Self {
        Poly(vec![FqElem(0), FqElem(1)])
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].0 == 1
    }

    /// Degree; the zero polynomial has degree `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of the zero polynomial")
    }

    pub fn lead(&self) -> FqElem {
        self.0.last().copied().unwrap_or(FqElem(0))
    }

    pub fn coeff(&self, i: usize) -> FqElem {
        self.0.get(i).copied().unwrap_or(FqElem(0))
    }

    pub fn add(&self, k: &FqField, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new((0..n).map(|i| k.add(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn neg(&self, k: &FqField) -> Poly {
        Poly(self.0.iter().map(|&c| k.neg(c)).collect())
    }

    pub fn sub(&self, k: &FqField, o: &Poly) -> Poly {
        self.add(k, &o.neg(k))
    }

    pub fn scale(&self, k: &FqField, c: FqElem) -> Poly {
        Poly::new(self.0.iter().map(|&x| k.mul(x, c)).collect())
    }

    pub fn mul(&self, k: &FqField, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FqElem(0); self.0.len() + o.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a.0 == 0 {
                continue;
            }
            for (j, &b) in o.0.iter().enumerate() {
                out[i + j] = k.add(out[i + j], k.mul(a, b));
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, k: &FqField, mut e: u64) -> Poly {
        let mut r = Poly::one();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(k, &b);
            }
            b = b.mul(k, &b);
            e >>= 1;
        }
        r
    }

    pub fn divrem(&self, k: &FqField, d: &Poly) -> Result<(Poly, Poly)> {
        if d.is_zero() {
            return Err(Error::ZeroInput);
        }
        let dd = d.deg();
        let inv = k.inv(d.lead())?;
        let mut r = self.0.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut q = vec![FqElem(0); r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = k.mul(r[i], inv);
            if c.0 == 0 {
                continue;
            }
            q[i - dd] = c;
            for (j, &dj) in d.0.iter().enumerate() {
                let idx = i - dd + j;
                r[idx] = k.sub(r[idx], k.mul(c, dj));
            }
        }
        Ok((Poly::new(q), Poly::new(r)))
    }

    pub fn rem(&self, k: &FqField, d: &Poly) -> Result<Poly> {
        Ok(self.divrem(k, d)?.1)
    }

    /// Exact quotient, `None` when `d` does not divide `self`.
    pub fn div_exact(&self, k: &FqField, d: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(k, d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn monic(&self, k: &FqField) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = k.inv(self.lead()).expect("nonzero lead");
        self.scale(k, inv)
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, k: &FqField, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(k, &b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(k)
    }

    pub fn eval(&self, k: &FqField, x: FqElem) -> FqElem {
        self.0.iter().rev().fold(FqElem(0), |acc, &c| k.add(k.mul(acc, x), c))
    }

    /// Evaluates after mapping the coefficients through `embed` into `big`.
    pub fn eval_embedded(&self, big: &FqField, embed: &dyn Fn(FqElem) -> FqElem, x: FqElem) -> FqElem {
        self.0.iter().rev().fold(FqElem(0), |acc, &c| big.add(big.mul(acc, x), embed(c)))
    }

    pub fn powmod(&self, k: &FqField, mut e: u128, m: &Poly) -> Result<Poly> {
        let mut r = Poly::one().rem(k, m)?;
        let mut b = self.rem(k, m)?;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(k, &b).rem(k, m)?;
            }
            b = b.mul(k, &b).rem(k, m)?;
            e >>= 1;
        }
        Ok(r)
    }

    /// Ben-Or irreducibility test (over `k`).
    pub fn is_irreducible(&self, k: &FqField) -> bool {
        let Some(d) = self.degree() else { return false };
        if d == 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        let m = self.monic(k);
        let x = Poly::var();
        let mut h = x.clone();
        for _ in 0..d / 2 {
            h = h.powmod(k, k.q() as u128, &m).expect("nonzero modulus");
            if !m.gcd(k, &h.sub(k, &x)).is_one() {
                return false;
            }
        }
        true
    }

    /// The monic polynomial of degree `d` whose lower coefficients have the
    /// base-q digits of `index`.
    pub fn monic_from_index(k: &FqField, d: usize, mut index: u64) -> Poly {
        let q = k.q();
        let mut c = Vec::with_capacity(d + 1);
        for _ in 0..d {
            c.push(FqElem(index % q));
            index /= q;
        }
        c.push(FqElem(1));
        Poly(c)
    }

    /// Factorization into a leading constant and monic irreducible factors
    /// (sorted, with multiplicities).
    pub fn factor(&self, k: &FqField) -> Result<(FqElem, Vec<(Poly, u32)>)> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let lead = self.lead();
        let mut rest = self.monic(k);
        let mut out: Vec<(Poly, u32)> = Vec::new();
        let q = k.q();
        let mut d = 1usize;
        while rest.deg() >= 2 * d {
            if rest.is_irreducible(k) {
                break;
            }
            let count = q.checked_pow(d as u32).filter(|&c| c <= FACTOR_WORK_LIMIT).ok_or_else(|| {
                Error::Unsupported(format!("factoring a degree {} polynomial over {}", self.deg(), k.name()))
            })?;
            for idx in 0..count {
                let cand = Poly::monic_from_index(k, d, idx);
                let mut e = 0;
                while let Some(qt) = rest.div_exact(k, &cand) {
                    rest = qt;
                    e += 1;
                }
                if e > 0 {
                    out.push((cand, e));
                }
                if rest.deg() < 2 * d {
                    break;
                }
            }
            d += 1;
        }
        if rest.deg() > 0 {
            match out.iter_mut().find(|(f, _)| *f == rest) {
                Some((_, e)) => *e += 1,
                None => out.push((rest, 1)),
            }
        }
        out.sort();
        Ok((lead, out))
    }

    /// Writes the polynomial in `var`; coefficients are field codes.
    pub fn format(&self, var: char) -> String {
        let mut terms = Vec::new();
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.0 == 0 {
                continue;
            }
            let coef = if c.0 == 1 && i > 0 { String::new() } else { c.0.to_string() };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}{var}"),
                _ => format!("{coef}{var}^{i}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// Parses a polynomial in `var` with integer (f = 1) or code (f > 1) coefficients.
    pub fn parse(k: &FqField, s: &str, var: char) -> Result<Poly> {
        let terms = parse_poly_terms(s, var)?;
        let n = terms.iter().map(|(e, _)| *e).max().unwrap_or(0) + 1;
        let mut c = vec![FqElem(0); n];
        for (e, v) in terms {
            let x = if k.f() == 1 {
                k.from_int((v.rem_euclid(k.p() as i128)) as i64)
            } else {
                let code = k.from_code(v.unsigned_abs() as u64)?;
                if v < 0 {
                    k.neg(code)
                } else {
                    code
                }
            };
            c[e] = k.add(c[e], x);
        }
        Ok(Poly::new(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_gcd() {
        let k = FqField::prime(5).unwrap();
        let a = Poly::parse(&k, "t^3+2t+1", 't').unwrap();
        let b = Poly::parse(&k, "t^2+1", 't').unwrap();
        let (q, r) = a.divrem(&k, &b).unwrap();
        assert_eq!(q.mul(&k, &b).add(&k, &r), a);
        let g = Poly::parse(&k, "t+1", 't').unwrap();
        assert_eq!(a.mul(&k, &g).gcd(&k, &b.mul(&k, &g)), g.gcd(&k, &g).mul(&k, &a.gcd(&k, &b)));
        assert_eq!(Poly::parse(&k, "2t^2-1", 't').unwrap().format('t'), "2t^2+4");
    }

    #[test]
    fn irreducibility_counts() {
        // number of monic irreducibles of degree d over GF(q): (1/d) Σ μ(d/e) q^e
        let k = FqField::prime(3).unwrap();
        let counts: Vec<usize> = (1..=4)
            .map(|d| (0..3u64.pow(d as u32)).filter(|&i| Poly::monic_from_index(&k, d, i).is_irreducible(&k)).count())
            .collect();
        assert_eq!(counts, vec![3, 3, 8, 18]);
        let k4 = FqField::of_order(4).unwrap();
        let c2 = (0..16).filter(|&i| Poly::monic_from_index(&k4, 2, i).is_irreducible(&k4)).count();
        assert_eq!(c2, 6);
    }

    #[test]
    fn factorization_reassembles() {
        let k = FqField::prime(5).unwrap();
        let a = Poly::parse(&k, "3t^7+t^5+2t^2+4t+1", 't').unwrap();
        let b = Poly::parse(&k, "t^2+2", 't').unwrap();
        let f = a.mul(&k, &b).mul(&k, &b);
        let (lead, fs) = f.factor(&k).unwrap();
        let mut prod = Poly::constant(lead);
        for (g, e) in &fs {
            assert!(g.is_irreducible(&k));
            prod = prod.mul(&k, &g.pow(&k, *e as u64));
        }
        assert_eq!(prod, f);
        assert!(fs.iter().any(|(g, e)| g == &b && *e >= 2));
    }
}
