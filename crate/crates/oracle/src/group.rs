//! The group algebra of a cyclic group and its dual, written out directly.
//!
//! Basis of `k[Z/n]` is `g^0 .. g^{n-1}`; basis of the dual is the delta
//! functions `d_0 .. d_{n-1}`. All maps are dense matrices with row-major
//! multi-indices, leftmost factor slowest.

use num_rational::BigRational;
use num_traits::One;

use crate::dense::{zeros, Matrix};

fn one() -> BigRational {
    BigRational::one()
}

/// `g^a g^b = g^{a+b}`.
pub fn mul(n: usize) -> Matrix {
    let mut m = zeros(n, n * n);
    for a in 0..n {
        for b in 0..n {
            m[(a + b) % n][a * n + b] = one();
        }
    }
    m
}

/// `g^a -> g^a ⊗ g^a`.
pub fn comul(n: usize) -> Matrix {
    let mut m = zeros(n * n, n);
    for a in 0..n {
        m[a * n + a][a] = one();
    }
    m
}

pub fn counit(n: usize) -> Matrix {
    vec![vec![one(); n]]
}

pub fn unit(n: usize) -> Matrix {
    let mut m = zeros(n, 1);
    m[0][0] = one();
    m
}

pub fn antipode(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for a in 0..n {
        m[(n - a) % n][a] = one();
    }
    m
}

/// Dual algebra: `d_a d_b = [a = b] d_a`.
pub fn dual_mul(n: usize) -> Matrix {
    let mut m = zeros(n, n * n);
    for a in 0..n {
        m[a][a * n + a] = one();
    }
    m
}

/// Dual coproduct with the reversed pairing: `d_a -> Σ_{x+y=a} d_y ⊗ d_x`.
pub fn dual_comul(n: usize) -> Matrix {
    let mut m = zeros(n * n, n);
    for x in 0..n {
        for y in 0..n {
            m[y * n + x][(x + y) % n] = one();
        }
    }
    m
}

/// Unit of the dual is the counit of the group algebra: `Σ d_a`.
pub fn dual_unit(n: usize) -> Matrix {
    vec![vec![one()]; n]
}

/// Counit of the dual is evaluation at the identity.
pub fn dual_counit(n: usize) -> Matrix {
    let mut m = zeros(1, n);
    m[0][0] = one();
    m
}

/// `g^a ⊗ d_b -> d_{b-a} ⊗ g^a`: the pairing-induced braiding between the
/// group algebra and its dual.
pub fn sigma_bi(n: usize) -> Matrix {
    let mut m = zeros(n * n, n * n);
    for a in 0..n {
        for b in 0..n {
            m[((b + n - a) % n) * n + a][a * n + b] = one();
        }
    }
    m
}
