//! Braided differentials, their bar/cobar/Hochschild specialisations, the
//! bialgebra bicomplexes and homology dimensions.

mod bialg;
mod complexes;

pub use bialg::{gs_bicomplex, gs_operators, ps_bicomplex, ps_bicomplex_hopf, ps_operators, BialgebraOperators};
pub use complexes::{
    bar_complex, bar_operator, braided_differential, braided_layout, check_bidifferential, cobar_dual,
    hochschild_complex,
};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactnum::{Field, LinMap};
use crate::report::Report;
use crate::tensorspace::BasedSpace;

/// A truncated chain complex; `differentials[k]` is `d_{k+1}: C_{k+1} -> C_k`.
#[derive(Clone, Debug)]
pub struct GradedComplex {
    pub name: String,
    pub spaces: Vec<BasedSpace>,
    pub differentials: Vec<LinMap>,
}

impl GradedComplex {
    pub fn new(name: impl Into<String>, spaces: Vec<BasedSpace>, differentials: Vec<LinMap>) -> Result<GradedComplex> {
        if differentials.len() + 1 != spaces.len() {
            return Err(Error::Arity(format!("{} spaces need {} differentials", spaces.len(), spaces.len() - 1)));
        }
        for (k, d) in differentials.iter().enumerate() {
            if d.domain_dim() != spaces[k + 1].dim() || d.codomain_dim() != spaces[k].dim() {
                return Err(Error::Shape(format!("d_{} is {}x{}", k + 1, d.codomain_dim(), d.domain_dim())));
            }
        }
        Ok(GradedComplex { name: name.into(), spaces, differentials })
    }

    pub fn max_degree(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.dim()).collect()
    }

    /// `d_n`, for `1 <= n <= max_degree`.
    pub fn differential(&self, n: usize) -> Option<&LinMap> {
        n.checked_sub(1).and_then(|k| self.differentials.get(k))
    }
}

pub fn check_complex(c: &GradedComplex) -> Report {
    let mut rep = Report::new();
    for n in 2..=c.max_degree() {
        let dd = c.differentials[n - 2].compose(&c.differentials[n - 1]).expect("shapes");
        rep.expect_zero(&format!("d∘d = 0 at degree {n}"), &dd, &[c.spaces[n].dim()]);
    }
    rep
}

/// `d: (n,m) -> (n-1,m)` and `d': (n,m) -> (n,m-1)` on bidegrees with
/// `n + m <= max_total`.
#[derive(Clone, Debug)]
pub struct Bicomplex {
    pub name: String,
    pub max_total: usize,
    pub spaces: BTreeMap<(usize, usize), BasedSpace>,
    pub d: BTreeMap<(usize, usize), LinMap>,
    pub d_prime: BTreeMap<(usize, usize), LinMap>,
}

impl Bicomplex {
    pub fn dim(&self, n: usize, m: usize) -> usize {
        self.spaces.get(&(n, m)).map_or(0, |s| s.dim())
    }

    fn zero_from(&self, field: Field, n: usize, m: usize) -> LinMap {
        LinMap::zero(field, 0, self.dim(n, m))
    }

    fn field(&self) -> Field {
        self.d.values().chain(self.d_prime.values()).next().map_or(Field::Rational, |m| m.field())
    }

    /// `Tot_k = ⊕_{n+m=k} C_{n,m}` with `n` increasing, and `d + d'`.
    pub fn total(&self) -> GradedComplex {
        let f = self.field();
        let mut spaces = Vec::new();
        let mut offsets: Vec<BTreeMap<usize, usize>> = Vec::new();
        for k in 0..=self.max_total {
            let mut offs = BTreeMap::new();
            let mut parts = Vec::new();
            let mut acc = 0;
            for n in 0..=k {
                offs.insert(n, acc);
                let s = &self.spaces[&(n, k - n)];
                acc += s.dim();
                parts.push(s.clone());
            }
            spaces.push(BasedSpace::direct_sum(&format!("Tot{k}"), &parts));
            offsets.push(offs);
        }
        let mut differentials = Vec::new();
        for k in 1..=self.max_total {
            let mut trip = Vec::new();
            for n in 0..=k {
                let m = k - n;
                let col0 = offsets[k][&n];
                if n >= 1 {
                    let row0 = offsets[k - 1][&(n - 1)];
                    trip.extend(self.d[&(n, m)].triplets().map(|(r, c, v)| (row0 + r, col0 + c, v.clone())));
                }
                if m >= 1 {
                    let row0 = offsets[k - 1][&n];
                    trip.extend(self.d_prime[&(n, m)].triplets().map(|(r, c, v)| (row0 + r, col0 + c, v.clone())));
                }
            }
            let map = LinMap::from_columns(f, spaces[k - 1].dim(), columns(spaces[k].dim(), trip));
            differentials.push(map);
        }
        GradedComplex { name: format!("Tot({})", self.name), spaces, differentials }
    }
}

fn columns(n: usize, trip: Vec<(usize, usize, crate::exactnum::Scalar)>) -> Vec<Vec<(usize, crate::exactnum::Scalar)>> {
    let mut cols = vec![Vec::new(); n];
    for (r, c, v) in trip {
        cols[c].push((r, v));
    }
    cols
}

/// `d∘d = 0`, `d'∘d' = 0` and `d∘d' + d'∘d = 0` on every stored bidegree.
pub fn check_bicomplex(b: &Bicomplex) -> Report {
    let mut rep = Report::new();
    for (&(n, m), s) in &b.spaces {
        let dim = [s.dim()];
        if n >= 2 {
            let dd = b.d[&(n - 1, m)].compose(&b.d[&(n, m)]).expect("shapes");
            rep.expect_zero(&format!("d∘d = 0 at ({n},{m})"), &dd, &dim);
        }
        if m >= 2 {
            let dd = b.d_prime[&(n, m - 1)].compose(&b.d_prime[&(n, m)]).expect("shapes");
            rep.expect_zero(&format!("d'∘d' = 0 at ({n},{m})"), &dd, &dim);
        }
        if n >= 1 && m >= 1 {
            let a = b.d[&(n, m - 1)].compose(&b.d_prime[&(n, m)]).expect("shapes");
            let c = b.d_prime[&(n - 1, m)].compose(&b.d[&(n, m)]).expect("shapes");
            rep.expect_zero(&format!("d∘d' + d'∘d = 0 at ({n},{m})"), &a.add(&c).expect("shapes"), &dim);
        }
    }
    rep
}

fn homology_at(incoming: Option<&LinMap>, outgoing: Option<&LinMap>, dim: usize) -> usize {
    let kernel = outgoing.map_or(dim, |d| dim - d.rank());
    kernel - incoming.map_or(0, |d| d.rank())
}

/// `dim H_n` for `0 <= n < max_degree`; the top degree has no stored incoming
/// differential and is left out.
pub fn homology_dims(c: &GradedComplex) -> Result<Vec<usize>> {
    let rep = check_complex(c);
    if !rep.is_clean() {
        return Err(Error::Axiom(format!("refusing an uncertified complex: {}", rep.to_string().trim_end())));
    }
    Ok((0..c.max_degree())
        .map(|n| homology_at(c.differential(n + 1), c.differential(n), c.spaces[n].dim()))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Homology of `d` along each row `m`.
    Rows,
    /// Homology of `d'` along each column `n`.
    Columns,
    Total,
}

/// One row of a homology table; `m` is absent for total degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyEntry {
    pub n: usize,
    pub m: Option<usize>,
    pub dim: usize,
}

pub fn bicomplex_homology(b: &Bicomplex, dir: Direction) -> Result<Vec<HomologyEntry>> {
    let rep = check_bicomplex(b);
    if !rep.is_clean() {
        return Err(Error::Axiom(format!("refusing an uncertified bicomplex: {}", rep.to_string().trim_end())));
    }
    if dir == Direction::Total {
        let dims = homology_dims(&b.total())?;
        return Ok(dims.into_iter().enumerate().map(|(n, dim)| HomologyEntry { n, m: None, dim }).collect());
    }
    let f = b.field();
    let mut out = Vec::new();
    for (&(n, m), s) in &b.spaces {
        if n + m >= b.max_total {
            continue;
        }
        let (incoming, outgoing) = match dir {
            Direction::Rows => (b.d.get(&(n + 1, m)), b.d.get(&(n, m))),
            _ => (b.d_prime.get(&(n, m + 1)), b.d_prime.get(&(n, m))),
        };
        let zero = b.zero_from(f, n, m);
        let outgoing = outgoing.or(Some(&zero));
        out.push(HomologyEntry { n, m: Some(m), dim: homology_at(incoming, outgoing, s.dim()) });
    }
    Ok(out)
}

/// Tab-separated table with header `n\tm\tdim`; total degrees print `*` for `m`.
pub fn format_table(entries: &[HomologyEntry]) -> String {
    let mut s = String::from("n\tm\tdim\n");
    for e in entries {
        let m = e.m.map_or("*".to_string(), |m| m.to_string());
        s.push_str(&format!("{}\t{}\t{}\n", e.n, m, e.dim));
    }
    s
}

#[cfg(test)]
mod tests;
