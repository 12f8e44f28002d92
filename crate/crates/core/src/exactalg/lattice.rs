//! Row-style Hermite normal forms and integer kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Hermite basis of a sublattice of Z^n, maintained incrementally.
///
/// Rows are in echelon form with positive pivots, and every entry above a
/// pivot lies in `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hnf {
    n: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn leading(v: &[BigInt]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

fn axpy(target: &mut [BigInt], q: &BigInt, src: &[BigInt]) {
    // target -= q * src
    for (t, s) in target.iter_mut().zip(src) {
        if !s.is_zero() {
            *t -= q * s;
        }
    }
}

impl Hnf {
    pub fn new(n: usize) -> Self {
        Hnf { n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors<I: IntoIterator<Item = Vec<BigInt>>>(n: usize, vs: I) -> Self {
        let mut h = Hnf::new(n);
        h.extend(vs);
        h
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn extend<I: IntoIterator<Item = Vec<BigInt>>>(&mut self, vs: I) {
        let mut changed = false;
        for v in vs {
            changed |= self.insert_raw(v);
        }
        if changed {
            self.normalize();
        }
    }

    /// Adds a vector to the lattice; returns whether the lattice grew.
    pub fn insert(&mut self, v: Vec<BigInt>) -> bool {
        let changed = self.insert_raw(v);
        if changed {
            self.normalize();
        }
        changed
    }

    fn insert_raw(&mut self, mut v: Vec<BigInt>) -> bool {
        assert_eq!(v.len(), self.n, "vector length does not match lattice dimension");
        let mut changed = false;
        let mut j = 0;
        while let Some(lead) = leading(&v) {
            while j < self.rows.len() && self.pivots[j] < lead {
                j += 1;
            }
            if j == self.rows.len() || self.pivots[j] > lead {
                if v[lead].is_negative() {
                    for x in v.iter_mut() {
                        *x = -&*x;
                    }
                }
                self.rows.insert(j, v);
                self.pivots.insert(j, lead);
                return true;
            }
            let a = self.rows[j][lead].clone();
            let b = v[lead].clone();
            if b.is_multiple_of(&a) {
                let q = &b / &a;
                axpy(&mut v, &q, &self.rows[j]);
            } else {
                let eg = a.extended_gcd(&b);
                let g = eg.gcd;
                let (s, t) = (eg.x, eg.y);
                let new_row: Vec<BigInt> =
                    self.rows[j].iter().zip(&v).map(|(r, w)| &s * r + &t * w).collect();
                let (ag, bg) = (&a / &g, &b / &g);
                let rest: Vec<BigInt> =
                    v.iter().zip(&self.rows[j]).map(|(w, r)| &ag * w - &bg * r).collect();
                self.rows[j] = new_row;
                v = rest;
                changed = true;
            }
            j += 1;
        }
        changed
    }

    fn normalize(&mut self) {
        for j in 0..self.rows.len() {
            let p = self.pivots[j];
            if self.rows[j][p].is_negative() {
                for x in self.rows[j].iter_mut() {
                    *x = -&*x;
                }
            }
            let (head, tail) = self.rows.split_at_mut(j);
            let row = &tail[0];
            for r in head.iter_mut() {
                let q = r[p].div_floor(&row[p]);
                if !q.is_zero() {
                    axpy(r, &q, row);
                }
            }
        }
    }

    /// Canonical representative of `v` modulo the lattice.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let q = v[p].div_floor(&row[p]);
            if !q.is_zero() {
                axpy(&mut v, &q, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.solve(v).is_some()
    }

    /// Coefficients of `v` in the Hermite basis, if `v` lies in the lattice.
    pub fn solve(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut v = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if let Some(l) = leading(&v) {
                if l < p {
                    return None;
                }
            }
            let (q, r) = v[p].div_rem(&row[p]);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                axpy(&mut v, &q, row);
            }
            coeffs.push(q);
        }
        if leading(&v).is_some() {
            None
        } else {
            Some(coeffs)
        }
    }
}

fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    // nearest integer to a/b, used to keep entries small
    let two = BigInt::from(2);
    (a * &two + b).div_floor(&(b * &two))
}

/// Basis of the integer kernel `{ z : A z = 0 }` of the matrix whose columns are
/// `columns` (each of length `m`).
pub fn integer_kernel(m: usize, columns: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let b = columns.len();
    let mut rows: Vec<Vec<BigInt>> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut r = c.clone();
            r.resize(m, BigInt::zero());
            let mut id = vec![BigInt::zero(); b];
            id[i] = BigInt::from(1);
            r.extend(id);
            r
        })
        .collect();
    let mut start = 0;
    for col in 0..m {
        if start == b {
            break;
        }
        loop {
            let best = (start..b)
                .filter(|&r| !rows[r][col].is_zero())
                .min_by(|&x, &y| rows[x][col].abs().cmp(&rows[y][col].abs()));
            let Some(best) = best else { break };
            rows.swap(start, best);
            let (head, tail) = rows.split_at_mut(start + 1);
            let piv = &head[start];
            let mut clean = true;
            for r in tail.iter_mut() {
                if r[col].is_zero() {
                    continue;
                }
                let q = round_div(&r[col], &piv[col]);
                axpy(r, &q, piv);
                if !r[col].is_zero() {
                    clean = false;
                }
            }
            if clean {
                start += 1;
                break;
            }
        }
    }
    rows[start..].iter().map(|r| r[m..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::matrix::big_vec;

    #[test]
    fn hermite_basis_is_canonical() {
        let a = Hnf::from_vectors(2, vec![big_vec(&[4, 6]), big_vec(&[6, 4])]);
        let b = Hnf::from_vectors(2, vec![big_vec(&[2, -2]), big_vec(&[0, 10]), big_vec(&[10, 10])]);
        assert_eq!(a.basis(), b.basis());
        assert_eq!(a.basis(), &[big_vec(&[2, 8]), big_vec(&[0, 10])]);
        assert!(a.contains(&big_vec(&[4, 6])));
        assert!(!a.contains(&big_vec(&[1, 0])));
        assert_eq!(a.reduce(&big_vec(&[5, 3])), big_vec(&[1, 7]));
    }

    #[test]
    fn kernel_of_small_matrix() {
        // columns (1,2), (2,4), (3,6): kernel has rank 2
        let cols = vec![big_vec(&[1, 2]), big_vec(&[2, 4]), big_vec(&[3, 6])];
        let k = integer_kernel(2, &cols);
        assert_eq!(k.len(), 2);
        for z in &k {
            let s: BigInt = z.iter().zip(&[1, 2, 3]).map(|(a, &c)| a * c).sum();
            assert!(s.is_zero());
        }
        let h = Hnf::from_vectors(3, k);
        assert!(h.contains(&big_vec(&[2, -1, 0])));
        assert!(h.contains(&big_vec(&[3, 0, -1])));
    }
}
