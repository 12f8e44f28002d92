//! Smith normal form with transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// `diag = left * m * right`, with `right_inv = right^-1`.
///
/// `diag` lists the first `min(rows, cols)` diagonal entries, nonnegative and
/// each dividing the next (zeros last).
#[derive(Clone, Debug)]
pub struct Smith {
    pub diag: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub right_inv: IntMatrix,
}

type Dense = Vec<Vec<BigInt>>;

fn to_dense(m: &IntMatrix) -> Dense {
    m.to_rows()
}

fn ident(n: usize) -> Dense {
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i32)).collect())
        .collect()
}

fn row_sub(m: &mut Dense, target: usize, q: &BigInt, src: usize) {
    // row_target -= q * row_src
    let (a, b) = if target < src {
        let (h, t) = m.split_at_mut(src);
        (&mut h[target], &t[0])
    } else {
        let (h, t) = m.split_at_mut(target);
        (&mut t[0], &h[src])
    };
    for (x, y) in a.iter_mut().zip(b.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

fn col_sub(m: &mut Dense, target: usize, q: &BigInt, src: usize) {
    for row in m.iter_mut() {
        if !row[src].is_zero() {
            let d = q * &row[src];
            row[target] -= d;
        }
    }
}

fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (a * &two + b).div_floor(&(b * &two))
}

pub fn smith(m: &IntMatrix) -> Smith {
    let (r, n) = (m.rows(), m.cols());
    let mut a = to_dense(m);
    let mut u = ident(r);
    let mut v = ident(n);
    let mut vi = ident(n);
    let k = r.min(n);
    for t in 0..k {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, x) in row.iter().enumerate().skip(t) {
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            if bi != t {
                a.swap(bi, t);
                u.swap(bi, t);
            }
            if bj != t {
                for row in a.iter_mut() {
                    row.swap(bj, t);
                }
                for row in v.iter_mut() {
                    row.swap(bj, t);
                }
                vi.swap(bj, t);
            }
            let mut dirty = false;
            for i in t + 1..r {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = round_div(&a[i][t], &a[t][t]);
                row_sub(&mut a, i, &q, t);
                row_sub(&mut u, i, &q, t);
                dirty |= !a[i][t].is_zero();
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = round_div(&a[t][j], &a[t][t]);
                col_sub(&mut a, j, &q, t);
                col_sub(&mut v, j, &q, t);
                // inverse of a column operation is the opposite row operation
                let nq = -q;
                row_sub(&mut vi, t, &nq, j);
                dirty |= !a[t][j].is_zero();
            }
            if dirty {
                continue;
            }
            let p = a[t][t].clone();
            let bad = (t + 1..r).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let m1 = BigInt::from(-1);
                    row_sub(&mut a, t, &m1, i);
                    row_sub(&mut u, t, &m1, i);
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
    }
    let diag = (0..k).map(|i| a[i][i].clone()).collect();
    Smith {
        diag,
        left: IntMatrix::from_rows(u, r).expect("square"),
        right: IntMatrix::from_rows(v, n).expect("square"),
        right_inv: IntMatrix::from_rows(vi, n).expect("square"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix, expect: &[i64]) {
        let s = smith(m);
        let d = s.left.mul(m).unwrap().mul(&s.right).unwrap();
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let want = if i == j && i < expect.len() { BigInt::from(expect[i]) } else { BigInt::zero() };
                assert_eq!(d.get(i, j), &want, "entry ({i},{j})");
            }
        }
        assert!(s.left.is_unimodular());
        assert!(s.right.mul(&s.right_inv).unwrap().is_identity());
    }

    #[test]
    fn known_forms() {
        check(&IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]).unwrap(), &[1, 6]);
        check(&IntMatrix::from_i64(2, 3, &[2, 4, 4, -6, 6, 12]).unwrap(), &[2, 6]);
        check(&IntMatrix::from_i64(3, 3, &[2, 4, 4, -6, 6, 12, 10, -4, -16]).unwrap(), &[2, 6, 12]);
        check(&IntMatrix::from_i64(2, 2, &[4, 6, 6, 9]).unwrap(), &[1, 0]);
    }
}
