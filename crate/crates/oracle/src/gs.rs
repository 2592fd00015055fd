//! The bialgebra bicomplexes of `k[Z/n]` on `H^p ⊗ (H*)^q`, assembled
//! entry by entry from the group law.
//!
//! A basis element is a tuple `(a_1..a_p; x_1..x_q)` meaning
//! `g^{a_1} ⊗ .. ⊗ g^{a_p} ⊗ d_{x_1} ⊗ .. ⊗ d_{x_q}`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::dense::{int, rank, zeros, Matrix};

/// Which end terms enter the differentials.
#[derive(Clone, Copy, Debug)]
pub struct Ends {
    /// `g_p` shifts every delta, `(p,q) -> (p-1,q)`.
    pub last_group: bool,
    /// `g_1` shifts every delta.
    pub first_group: bool,
    /// `d_{x_1}` evaluated on the product of the group elements.
    pub first_delta: bool,
    /// `d_{x_q}` evaluated on the product of the group elements.
    pub last_delta: bool,
}

impl Ends {
    pub fn variant(v: u8) -> Ends {
        match v {
            1 => Ends { last_group: false, first_group: false, first_delta: false, last_delta: false },
            2 => Ends { last_group: true, first_group: false, first_delta: true, last_delta: false },
            3 => Ends { last_group: false, first_group: true, first_delta: false, last_delta: true },
            _ => Ends { last_group: true, first_group: true, first_delta: true, last_delta: true },
        }
    }
}

fn encode(tuple: &[usize], n: usize) -> usize {
    tuple.iter().fold(0, |acc, &t| acc * n + t)
}

fn decode(mut idx: usize, len: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
    out
}

fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

fn bump(m: &mut Matrix, row: usize, col: usize, c: i64) {
    m[row][col] += int(c);
}

/// Horizontal differential `(p,q) -> (p-1,q)`.
pub fn horizontal(n: usize, p: usize, q: usize, ends: Ends) -> Matrix {
    let cols = n.pow((p + q) as u32);
    let mut m = zeros(n.pow((p + q - 1) as u32), cols);
    for col in 0..cols {
        let t = decode(col, p + q, n);
        let (g, x) = t.split_at(p);
        for i in 1..p {
            let mut merged: Vec<usize> = g[..i - 1].to_vec();
            merged.push((g[i - 1] + g[i]) % n);
            merged.extend_from_slice(&g[i + 1..]);
            merged.extend_from_slice(x);
            bump(&mut m, encode(&merged, n), col, sign(i % 2 == 1));
        }
        if ends.last_group {
            let inv = (n - g[p - 1]) % n;
            let mut out = g[..p - 1].to_vec();
            out.extend(x.iter().map(|&xi| (xi + inv) % n));
            bump(&mut m, encode(&out, n), col, sign(p % 2 == 1));
        }
        if ends.first_group {
            let inv = (n - g[0]) % n;
            let mut out = g[1..].to_vec();
            out.extend(x.iter().map(|&xi| (xi + inv) % n));
            bump(&mut m, encode(&out, n), col, 1);
        }
    }
    m
}

/// Vertical differential `(p,q) -> (p,q-1)`.
pub fn vertical(n: usize, p: usize, q: usize, ends: Ends) -> Matrix {
    let cols = n.pow((p + q) as u32);
    let mut m = zeros(n.pow((p + q - 1) as u32), cols);
    let sp = sign(p % 2 == 1);
    let spq = sign((p + q) % 2 == 1);
    for col in 0..cols {
        let t = decode(col, p + q, n);
        let (g, x) = t.split_at(p);
        let prod = g.iter().sum::<usize>() % n;
        for i in 1..q {
            // d_x d_y = [x = y] d_x
            if x[i - 1] != x[i] {
                continue;
            }
            let mut out = g.to_vec();
            out.extend_from_slice(&x[..i]);
            out.extend_from_slice(&x[i + 1..]);
            bump(&mut m, encode(&out, n), col, sp * sign(i % 2 == 1));
        }
        if ends.first_delta && x[0] == prod {
            let mut out = g.to_vec();
            out.extend_from_slice(&x[1..]);
            bump(&mut m, encode(&out, n), col, sp);
        }
        if ends.last_delta && x[q - 1] == prod {
            let mut out = g.to_vec();
            out.extend_from_slice(&x[..q - 1]);
            bump(&mut m, encode(&out, n), col, spq);
        }
    }
    m
}

/// Differential `Tot_k -> Tot_{k-1}` with summands ordered by `p` ascending.
pub fn total_differential(n: usize, k: usize, ends: Ends) -> Matrix {
    let block = n.pow(k as u32);
    let lower = n.pow(k as u32 - 1);
    let mut m = zeros(k * lower, (k + 1) * block);
    for p in 0..=k {
        let q = k - p;
        let col0 = p * block;
        if p >= 1 {
            let h = horizontal(n, p, q, ends);
            place(&mut m, &h, (p - 1) * lower, col0);
        }
        if q >= 1 {
            let v = vertical(n, p, q, ends);
            place(&mut m, &v, p * lower, col0);
        }
    }
    m
}

fn place(m: &mut Matrix, block: &Matrix, row0: usize, col0: usize) {
    for (r, row) in block.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            if !v.is_zero() {
                m[row0 + r][col0 + c] += v;
            }
        }
    }
}

/// Homology dimensions of the total complex in degrees `0..=max`, with the
/// columns of every differential visited in the order given by `order`.
pub fn total_homology_with(n: usize, max: usize, ends: Ends, order: impl Fn(usize) -> Vec<usize>) -> Vec<usize> {
    let rank_of = |k: usize| -> usize {
        if k == 0 {
            return 0;
        }
        let d = total_differential(n, k, ends);
        let cols = d.first().map_or(0, |r| r.len());
        let perm = order(cols);
        let shuffled: Matrix = d.iter().map(|row| perm.iter().map(|&c| row[c].clone()).collect()).collect();
        rank(&shuffled)
    };
    let ranks: Vec<usize> = (0..=max + 1).map(rank_of).collect();
    (0..=max).map(|k| (k + 1) * n.pow(k as u32) - ranks[k] - ranks[k + 1]).collect()
}

pub fn total_homology(n: usize, max: usize, ends: Ends) -> Vec<usize> {
    total_homology_with(n, max, ends, |c| (0..c).collect())
}

/// `true` when every entry is zero.
pub fn vanishes(m: &Matrix) -> bool {
    m.iter().all(|r| r.iter().all(BigRational::is_zero))
}
