//! Dense rational matrices, row-major, `m[row][col]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Matrix = Vec<Vec<BigRational>>;

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![BigRational::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigRational::one();
    }
    m
}

fn cols_of(a: &Matrix) -> usize {
    a.first().map_or(0, |r| r.len())
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = cols_of(b);
    let mut out = zeros(a.len(), n);
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += x * &b[k][j];
            }
        }
    }
    out
}

pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (ar, ac, br, bc) = (a.len(), cols_of(a), b.len(), cols_of(b));
    let mut out = zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            for k in 0..br {
                for l in 0..bc {
                    out[i * br + k][j * bc + l] = &a[i][j] * &b[k][l];
                }
            }
        }
    }
    out
}

pub fn add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn scale(a: &Matrix, c: &BigRational) -> Matrix {
    a.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

pub fn is_zero(a: &Matrix) -> bool {
    a.iter().all(|r| r.iter().all(|x| x.is_zero()))
}

/// Row echelon form by Gaussian elimination; returns the rank.
pub fn rank(a: &Matrix) -> usize {
    let mut m = a.clone();
    let cols = cols_of(&m);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &piv;
            for j in c..cols {
                let t = &f * &m[r][j];
                m[i][j] -= t;
            }
        }
        r += 1;
    }
    r
}

/// Gauss-Jordan inverse of a square matrix.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut m: Matrix = a
        .iter()
        .zip(identity(n))
        .map(|(r, e)| r.iter().cloned().chain(e).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..2 * n {
                    let t = &f * &m[c][j];
                    m[i][j] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Matrix of the map permuting tensor factors: factor `j` of the input goes to
/// slot `target[j]` of the output. Row-major multi-indices.
pub fn permutation(target: &[usize], dims: &[usize]) -> Matrix {
    let k = dims.len();
    let mut out_dims = vec![0; k];
    for j in 0..k {
        out_dims[target[j]] = dims[j];
    }
    let total: usize = dims.iter().product();
    let mut m = zeros(total, total);
    for col in 0..total {
        let mut idx = vec![0; k];
        let mut rem = col;
        for j in (0..k).rev() {
            idx[j] = rem % dims[j];
            rem /= dims[j];
        }
        let mut out = vec![0; k];
        for j in 0..k {
            out[target[j]] = idx[j];
        }
        let row = out.iter().zip(&out_dims).fold(0, |acc, (i, d)| acc * d + i);
        m[row][col] = BigRational::one();
    }
    m
}
