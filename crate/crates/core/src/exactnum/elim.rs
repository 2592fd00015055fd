//! Sparse column elimination: rank, inverses, linear solves.

use std::collections::HashMap;

use super::linmap::LinMap;
use super::scalar::{Field, Scalar};

type SparseVec = Vec<(u32, Scalar)>;

/// `a + c * b` for sorted sparse vectors.
fn axpy(a: &SparseVec, c: &Scalar, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental echelon basis of a column span. Each stored column has a
/// distinct leading row and leading coefficient one. With tracking on, every
/// stored column also remembers which combination of inserted vectors made it.
pub(crate) struct Reducer {
    field: Field,
    pivot_of_row: HashMap<u32, usize>,
    basis: Vec<SparseVec>,
    combos: Option<Vec<SparseVec>>,
}

impl Reducer {
    pub(crate) fn new(field: Field, track: bool) -> Self {
        Reducer {
            field,
            pivot_of_row: HashMap::new(),
            basis: Vec::new(),
            combos: track.then(Vec::new),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `v` until it vanishes or its leading row is free. Returns the
    /// remainder and the combination of basis columns that was subtracted.
    fn reduce(&self, mut v: SparseVec, mut combo: SparseVec) -> (SparseVec, SparseVec) {
        while let Some((lead, c)) = v.first().cloned() {
            let Some(&k) = self.pivot_of_row.get(&lead) else { break };
            let neg = -&c;
            v = axpy(&v, &neg, &self.basis[k]);
            if let Some(cs) = &self.combos {
                combo = axpy(&combo, &neg, &cs[k]);
            }
        }
        (v, combo)
    }

    /// Inserts a vector; `tag` is its index among inserted vectors. Returns
    /// whether it was independent of the vectors inserted so far.
    pub(crate) fn insert(&mut self, v: SparseVec, tag: usize) -> bool {
        let start = if self.combos.is_some() {
            vec![(tag as u32, self.field.one())]
        } else {
            Vec::new()
        };
        let (v, combo) = self.reduce(v, start);
        let Some((lead, c)) = v.first().cloned() else { return false };
        let inv = c.inv().expect("nonzero leading entry");
        let v: SparseVec = v.into_iter().map(|(r, x)| (r, &x * &inv)).collect();
        self.pivot_of_row.insert(lead, self.basis.len());
        self.basis.push(v);
        if let Some(cs) = &mut self.combos {
            cs.push(combo.into_iter().map(|(r, x)| (r, &x * &inv)).collect());
        }
        true
    }

    /// Writes `v` as a combination of the inserted vectors, if it lies in
    /// their span. Needs tracking.
    pub(crate) fn express(&self, v: SparseVec) -> Option<SparseVec> {
        let (rest, combo) = self.reduce(v, Vec::new());
        if !rest.is_empty() {
            return None;
        }
        Some(combo.into_iter().map(|(r, x)| (r, -&x)).collect())
    }
}

fn column_vec(m: &LinMap, j: usize) -> SparseVec {
    m.column(j).map(|(r, v)| (r as u32, v.clone())).collect()
}

impl LinMap {
    pub fn rank(&self) -> usize {
        // Reduce along the shorter side.
        let m = if self.codomain_dim() < self.domain_dim() {
            self.transpose()
        } else {
            self.clone()
        };
        let mut red = Reducer::new(m.field(), false);
        for j in 0..m.domain_dim() {
            red.insert(column_vec(&m, j), j);
        }
        red.rank()
    }

    pub fn kernel_dim(&self) -> usize {
        self.domain_dim() - self.rank()
    }

    /// Two-sided inverse, or `None` when the map is not square or singular.
    pub fn try_inverse(&self) -> Option<LinMap> {
        let n = self.domain_dim();
        if n != self.codomain_dim() {
            return None;
        }
        let mut red = Reducer::new(self.field(), true);
        for j in 0..n {
            if !red.insert(column_vec(self, j), j) {
                return None;
            }
        }
        let one = self.field().one();
        let cols = (0..n)
            .map(|i| {
                red.express(vec![(i as u32, one.clone())])
                    .expect("full rank")
                    .into_iter()
                    .map(|(r, v)| (r as usize, v))
                    .collect()
            })
            .collect();
        Some(LinMap::from_columns(self.field(), n, cols))
    }

    /// Some `x` with `self(x) = b`, as a sparse vector, or `None` if `b` is
    /// outside the image.
    pub fn solve(&self, b: &[(usize, Scalar)]) -> Option<Vec<(usize, Scalar)>> {
        let mut red = Reducer::new(self.field(), true);
        for j in 0..self.domain_dim() {
            red.insert(column_vec(self, j), j);
        }
        let mut bv: SparseVec = b
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(r, v)| (*r as u32, v.clone()))
            .collect();
        bv.sort_by_key(|e| e.0);
        red.express(bv)
            .map(|x| x.into_iter().map(|(r, v)| (r as usize, v)).collect())
    }
}
