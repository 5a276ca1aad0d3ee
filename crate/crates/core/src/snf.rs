//! Smith normal form over the integers with unimodular certificates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<BigInt>>;

/// `u * m * v = d`, with `d` diagonal, nonnegative, and each diagonal entry dividing the next.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: Matrix,
    pub v: Matrix,
    pub d: Matrix,
}

impl SmithForm {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let k = self.d.len().min(self.d.first().map_or(0, |r| r.len()));
        (0..k).map(|i| self.d[i][i].clone()).filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn from_i64(m: &[Vec<i64>]) -> Matrix {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn mul(a: &Matrix, b: &Matrix, inner: usize, cols: usize) -> Matrix {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut s = BigInt::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            s += &row[k] * &b[k][j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free elimination.
pub fn determinant(m: &Matrix) -> BigInt {
    let n = m.len();
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else { return BigInt::zero() };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        BigInt::one()
    } else {
        sign * &a[n - 1][n - 1]
    }
}

struct State {
    a: Matrix,
    u: Matrix,
    v: Matrix,
    rows: usize,
    cols: usize,
}

impl State {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in self.a.iter_mut().chain(self.v.iter_mut()) {
            r.swap(i, j);
        }
    }

    /// row_i -= q row_j
    fn add_row(&mut self, i: usize, j: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            let src = m[j].clone();
            for (x, s) in m[i].iter_mut().zip(&src) {
                *x -= q * s;
            }
        }
    }

    /// col_i -= q col_j
    fn add_col(&mut self, i: usize, j: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.v] {
            for r in m.iter_mut() {
                let s = q * &r[j];
                r[i] -= s;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.u] {
            for x in m[i].iter_mut() {
                *x = -&*x;
            }
        }
    }

    /// Smallest nonzero entry in the lower-right block from `t`.
    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                if !self.a[i][j].is_zero() && best.is_none_or(|(bi, bj)| self.a[i][j].abs() < self.a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }
}

pub fn smith_normal_form(m: &Matrix) -> SmithForm {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut s = State { a: m.clone(), u: identity(rows), v: identity(cols), rows, cols };
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = s.min_entry(t) else { break };
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if !s.a[i][t].is_zero() {
                    let q = s.a[i][t].div_floor(&s.a[t][t]);
                    s.add_row(i, t, &q);
                    if !s.a[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !s.a[t][j].is_zero() {
                    let q = s.a[t][j].div_floor(&s.a[t][t]);
                    s.add_col(j, t, &q);
                    if !s.a[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if !dirty {
                // pivot must divide the rest of the block
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !(&s.a[i][j] % &s.a[t][t]).is_zero());
                match bad {
                    None => break,
                    Some((i, _)) => {
                        let one = BigInt::from(-1);
                        s.add_row(t, i, &one);
                        continue;
                    }
                }
            }
            let (pi, pj) = s.min_entry(t).unwrap();
            // keep the pivot in row t or column t only when it is already there
            if pi == t || pj == t {
                s.swap_rows(t, pi);
                s.swap_cols(t, pj);
            } else {
                let (ci, cj) = (t..rows)
                    .flat_map(|i| (t..cols).map(move |j| (i, j)))
                    .filter(|&(i, j)| (i == t || j == t) && !s.a[i][j].is_zero())
                    .min_by_key(|&(i, j)| s.a[i][j].abs())
                    .unwrap();
                s.swap_rows(t, ci);
                s.swap_cols(t, cj);
            }
        }
        if s.a[t][t].is_negative() {
            s.negate_row(t);
        }
        t += 1;
    }
    SmithForm { u: s.u, v: s.v, d: s.a }
}

/// Verifies `u m v = d`, `det u = ±1`, `det v = ±1`, and the divisibility chain.
pub fn verify(m: &Matrix, f: &SmithForm) -> bool {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let um = mul(&f.u, m, rows, cols);
    let umv = mul(&um, &f.v, cols, cols);
    if umv != f.d {
        return false;
    }
    for (i, r) in f.d.iter().enumerate() {
        for (j, x) in r.iter().enumerate() {
            if i != j && !x.is_zero() {
                return false;
            }
        }
    }
    let diag: Vec<BigInt> = (0..rows.min(cols)).map(|i| f.d[i][i].clone()).collect();
    if diag.iter().any(|x| x.is_negative()) {
        return false;
    }
    for w in diag.windows(2) {
        if w[0].is_zero() && !w[1].is_zero() || !w[0].is_zero() && !(&w[1] % &w[0]).is_zero() {
            return false;
        }
    }
    determinant(&f.u).abs().is_one() && determinant(&f.v).abs().is_one()
}
