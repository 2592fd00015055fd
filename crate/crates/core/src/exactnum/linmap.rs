use std::fmt;

use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// Sparse linear map `k^domain -> k^codomain` stored in compressed-column form.
///
/// Entries of each column are sorted by row and never zero, so two maps are
/// equal exactly when their matrices are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinMap {
    field: Field,
    rows: usize,
    cols: usize,
    col_ptr: Vec<usize>,
    row_idx: Vec<u32>,
    vals: Vec<Scalar>,
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinMap[{}x{} over {}]{{", self.rows, self.cols, self.field)?;
        for (i, (r, c, v)) in self.triplets().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if i == 64 {
                write!(f, "...")?;
                break;
            }
            write!(f, "({r},{c})={v}")?;
        }
        write!(f, "}}")
    }
}

/// Scatter accumulator reused across columns.
pub(crate) struct Accumulator {
    slots: Vec<Option<Scalar>>,
    touched: Vec<u32>,
}

impl Accumulator {
    pub(crate) fn new(len: usize) -> Self {
        Accumulator {
            slots: vec![None; len],
            touched: Vec::new(),
        }
    }

    #[inline]
    pub(crate) fn add(&mut self, row: u32, v: Scalar) {
        match &mut self.slots[row as usize] {
            Some(x) => *x += &v,
            slot @ None => {
                *slot = Some(v);
                self.touched.push(row);
            }
        }
    }

    /// Drains the accumulated column into `rows`/`vals`, sorted, zeros dropped.
    pub(crate) fn drain_into(&mut self, rows: &mut Vec<u32>, vals: &mut Vec<Scalar>) {
        self.touched.sort_unstable();
        for &r in &self.touched {
            if let Some(v) = self.slots[r as usize].take() {
                if !v.is_zero() {
                    rows.push(r);
                    vals.push(v);
                }
            }
        }
        self.touched.clear();
    }
}

impl LinMap {
    pub fn zero(field: Field, codomain: usize, domain: usize) -> LinMap {
        LinMap {
            field,
            rows: codomain,
            cols: domain,
            col_ptr: vec![0; domain + 1],
            row_idx: Vec::new(),
            vals: Vec::new(),
        }
    }

    pub fn identity(field: Field, n: usize) -> LinMap {
        LinMap {
            field,
            rows: n,
            cols: n,
            col_ptr: (0..=n).collect(),
            row_idx: (0..n as u32).collect(),
            vals: vec![field.one(); n],
        }
    }

    /// The map `1 -> k` or `k -> 1` given by a scalar.
    pub fn scalar(s: Scalar) -> LinMap {
        let field = s.field();
        LinMap::from_columns(field, 1, vec![vec![(0, s)]])
    }

    /// Builds a map from `(row, col, value)` triplets.
    ///
    /// Zero values are dropped; duplicate positions, out-of-range indices and
    /// values from another field are errors.
    pub fn from_triplets<I>(field: Field, codomain: usize, domain: usize, entries: I) -> Result<LinMap>
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); domain];
        for (r, c, v) in entries {
            if r >= codomain || c >= domain {
                return Err(Error::Shape(format!(
                    "entry ({r},{c}) outside a {codomain}x{domain} map"
                )));
            }
            if v.field() != field {
                return Err(Error::FieldMismatch(format!(
                    "entry ({r},{c}) lies in {} but the map is over {field}",
                    v.field()
                )));
            }
            cols[c].push((r, v));
        }
        for (c, col) in cols.iter_mut().enumerate() {
            col.sort_by_key(|e| e.0);
            if let Some(w) = col.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(Error::Invalid(format!("duplicate entry ({},{c})", w[0].0)));
            }
        }
        Ok(LinMap::from_columns(field, codomain, cols))
    }

    /// Builds a map column by column, summing repeated rows.
    pub fn from_columns(field: Field, codomain: usize, columns: Vec<Vec<(usize, Scalar)>>) -> LinMap {
        let mut acc = Accumulator::new(codomain);
        let mut out = LinMap::zero(field, codomain, columns.len());
        for (c, col) in columns.into_iter().enumerate() {
            for (r, v) in col {
                assert!(r < codomain, "row {r} out of range {codomain}");
                debug_assert_eq!(v.field(), field);
                acc.add(r as u32, v);
            }
            acc.drain_into(&mut out.row_idx, &mut out.vals);
            out.col_ptr[c + 1] = out.row_idx.len();
        }
        out
    }

    pub fn from_dense(field: Field, rows: &[Vec<Scalar>], domain: usize) -> LinMap {
        let mut cols = vec![Vec::new(); domain];
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    cols[c].push((r, v.clone()));
                }
            }
        }
        LinMap::from_columns(field, rows.len(), cols)
    }

    /// Map sending basis vector `j` to basis vector `images[j]`.
    pub fn from_basis_map(field: Field, codomain: usize, images: &[usize]) -> LinMap {
        let one = field.one();
        LinMap {
            field,
            rows: codomain,
            cols: images.len(),
            col_ptr: (0..=images.len()).collect(),
            row_idx: images.iter().map(|&i| {
                assert!(i < codomain);
                i as u32
            }).collect(),
            vals: vec![one; images.len()],
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn domain_dim(&self) -> usize {
        self.cols
    }

    pub fn codomain_dim(&self) -> usize {
        self.rows
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vals.is_empty()
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        let (a, b) = (self.col_ptr[j], self.col_ptr[j + 1]);
        self.row_idx[a..b]
            .iter()
            .map(|&r| r as usize)
            .zip(self.vals[a..b].iter())
    }

    pub(crate) fn column_raw(&self, j: usize) -> (&[u32], &[Scalar]) {
        let (a, b) = (self.col_ptr[j], self.col_ptr[j + 1]);
        (&self.row_idx[a..b], &self.vals[a..b])
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        let (rs, vs) = self.column_raw(col);
        match rs.binary_search(&(row as u32)) {
            Ok(i) => vs[i].clone(),
            Err(_) => self.field.zero(),
        }
    }

    /// All nonzero entries as `(row, col, value)`, ordered by column then row.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        (0..self.cols).flat_map(move |c| self.column(c).map(move |(r, v)| (r, c, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut d = vec![vec![self.field.zero(); self.cols]; self.rows];
        for (r, c, v) in self.triplets() {
            d[r][c] = v.clone();
        }
        d
    }

    fn check_field(&self, other: &LinMap) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field, other.field)));
        }
        Ok(())
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinMap) -> Result<LinMap> {
        self.check_field(g)?;
        if g.rows != self.cols {
            return Err(Error::Shape(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, g.rows, g.cols
            )));
        }
        let mut acc = Accumulator::new(self.rows);
        let mut out = LinMap::zero(self.field, self.rows, g.cols);
        out.row_idx.reserve(g.nnz());
        out.vals.reserve(g.nnz());
        for j in 0..g.cols {
            let (gr, gv) = g.column_raw(j);
            for (&k, gkj) in gr.iter().zip(gv) {
                let (fr, fv) = self.column_raw(k as usize);
                for (&r, frk) in fr.iter().zip(fv) {
                    acc.add(r, frk * gkj);
                }
            }
            acc.drain_into(&mut out.row_idx, &mut out.vals);
            out.col_ptr[j + 1] = out.row_idx.len();
        }
        Ok(out)
    }

    /// Composes a chain applied right to left: `chain(&[f, g, h]) = f ∘ g ∘ h`.
    pub fn chain(maps: &[&LinMap]) -> Result<LinMap> {
        let (last, rest) = maps
            .split_last()
            .ok_or_else(|| Error::Shape("empty composition".into()))?;
        let mut acc = (*last).clone();
        for m in rest.iter().rev() {
            acc = m.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Kronecker product; the left factor indexes slowest.
    pub fn kron(&self, g: &LinMap) -> LinMap {
        assert_eq!(self.field, g.field, "field mismatch in kron");
        let rows = self.rows * g.rows;
        let cols = self.cols * g.cols;
        let mut out = LinMap::zero(self.field, rows, cols);
        out.row_idx.reserve(self.nnz() * g.nnz());
        out.vals.reserve(self.nnz() * g.nnz());
        for j1 in 0..self.cols {
            let (fr, fv) = self.column_raw(j1);
            for j2 in 0..g.cols {
                let (gr, gv) = g.column_raw(j2);
                for (&r1, v1) in fr.iter().zip(fv) {
                    for (&r2, v2) in gr.iter().zip(gv) {
                        let v = v1 * v2;
                        if !v.is_zero() {
                            out.row_idx.push(r1 * g.rows as u32 + r2);
                            out.vals.push(v);
                        }
                    }
                }
                out.col_ptr[j1 * g.cols + j2 + 1] = out.row_idx.len();
            }
        }
        out
    }

    /// `Id_left ⊗ self ⊗ Id_right`, built directly.
    pub fn lift(&self, left: usize, right: usize) -> LinMap {
        if left == 1 && right == 1 {
            return self.clone();
        }
        let rows = left * self.rows * right;
        let cols = left * self.cols * right;
        assert!(rows <= u32::MAX as usize, "map too large");
        let mut out = LinMap::zero(self.field, rows, cols);
        out.row_idx.reserve(self.nnz() * left * right);
        out.vals.reserve(self.nnz() * left * right);
        let mut c = 0;
        for a in 0..left {
            for j in 0..self.cols {
                let (fr, fv) = self.column_raw(j);
                for b in 0..right {
                    for (&r, v) in fr.iter().zip(fv) {
                        out.row_idx
                            .push(((a * self.rows + r as usize) * right + b) as u32);
                        out.vals.push(v.clone());
                    }
                    c += 1;
                    out.col_ptr[c] = out.row_idx.len();
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> LinMap {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for (r, c, v) in self.triplets() {
            cols[r].push((c, v.clone()));
        }
        LinMap::from_columns(self.field, self.cols, cols)
    }

    fn zip_with(&self, o: &LinMap, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<LinMap> {
        self.check_field(o)?;
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let zero = self.field.zero();
        let mut out = LinMap::zero(self.field, self.rows, self.cols);
        for j in 0..self.cols {
            let (ar, av) = self.column_raw(j);
            let (br, bv) = o.column_raw(j);
            let (mut i, mut k) = (0, 0);
            while i < ar.len() || k < br.len() {
                let (r, v) = if k >= br.len() || (i < ar.len() && ar[i] < br[k]) {
                    i += 1;
                    (ar[i - 1], f(&av[i - 1], &zero))
                } else if i >= ar.len() || br[k] < ar[i] {
                    k += 1;
                    (br[k - 1], f(&zero, &bv[k - 1]))
                } else {
                    i += 1;
                    k += 1;
                    (ar[i - 1], f(&av[i - 1], &bv[k - 1]))
                };
                if !v.is_zero() {
                    out.row_idx.push(r);
                    out.vals.push(v);
                }
            }
            out.col_ptr[j + 1] = out.row_idx.len();
        }
        Ok(out)
    }

    pub fn add(&self, o: &LinMap) -> Result<LinMap> {
        self.zip_with(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &LinMap) -> Result<LinMap> {
        self.zip_with(o, |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        if s.is_zero() {
            return LinMap::zero(self.field, self.rows, self.cols);
        }
        let mut out = self.clone();
        for v in out.vals.iter_mut() {
            *v = &*v * s;
        }
        out
    }

    pub fn neg(&self) -> LinMap {
        let mut out = self.clone();
        for v in out.vals.iter_mut() {
            *v = -&*v;
        }
        out
    }

    /// Sum of a non-empty list of equally shaped maps.
    pub fn sum<'a>(field: Field, codomain: usize, domain: usize, maps: impl IntoIterator<Item = &'a LinMap>) -> Result<LinMap> {
        let mut acc = LinMap::zero(field, codomain, domain);
        for m in maps {
            acc = acc.add(m)?;
        }
        Ok(acc)
    }

    /// Restriction to a contiguous range of columns.
    pub fn column_block(&self, start: usize, len: usize) -> LinMap {
        let a = self.col_ptr[start];
        let b = self.col_ptr[start + len];
        LinMap {
            field: self.field,
            rows: self.rows,
            cols: len,
            col_ptr: self.col_ptr[start..=start + len].iter().map(|p| p - a).collect(),
            row_idx: self.row_idx[a..b].to_vec(),
            vals: self.vals[a..b].to_vec(),
        }
    }

    /// Restriction to a contiguous range of rows.
    pub fn row_block(&self, start: usize, len: usize) -> LinMap {
        let cols = (0..self.cols)
            .map(|j| {
                self.column(j)
                    .filter(|(r, _)| *r >= start && *r < start + len)
                    .map(|(r, v)| (r - start, v.clone()))
                    .collect()
            })
            .collect();
        LinMap::from_columns(self.field, len, cols)
    }

    /// Applies the map to a sparse vector given as `(index, value)` pairs.
    pub fn apply(&self, v: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
        let mut acc = Accumulator::new(self.rows);
        for (j, x) in v {
            for (r, a) in self.column(*j) {
                acc.add(r as u32, a * x);
            }
        }
        let (mut rows, mut vals) = (Vec::new(), Vec::new());
        acc.drain_into(&mut rows, &mut vals);
        rows.into_iter().map(|r| r as usize).zip(vals).collect()
    }

    /// First column where the two maps differ.
    pub fn first_difference(&self, o: &LinMap) -> Option<usize> {
        if self.rows != o.rows || self.cols != o.cols {
            return Some(0);
        }
        (0..self.cols).find(|&j| self.column_raw(j) != o.column_raw(j))
    }

    /// First column with a nonzero entry.
    pub fn first_nonzero_column(&self) -> Option<usize> {
        (0..self.cols).find(|&j| self.col_ptr[j] != self.col_ptr[j + 1])
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == LinMap::identity(self.field, self.rows)
    }

    /// Converts every entry into another field (integers and fractions are
    /// reduced; fails when a denominator is not invertible).
    pub fn to_field(&self, field: Field) -> Result<LinMap> {
        if field == self.field {
            return Ok(self.clone());
        }
        let entries = self
            .triplets()
            .map(|(r, c, v)| {
                let q = v
                    .to_rational()
                    .ok_or_else(|| Error::FieldMismatch("cannot lift residues to ℚ".into()))?;
                Ok((r, c, field.from_rational(&q)?))
            })
            .collect::<Result<Vec<_>>>()?;
        LinMap::from_triplets(field, self.rows, self.cols, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use braidkit_oracle::dense;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn q() -> Field {
        Field::Rational
    }

    fn from_ints(rows: usize, cols: usize, data: &[i64]) -> LinMap {
        let d: Vec<Vec<Scalar>> = data
            .chunks(cols)
            .map(|r| r.iter().map(|&x| q().from_i64(x)).collect())
            .collect();
        assert_eq!(d.len(), rows);
        LinMap::from_dense(q(), &d, cols)
    }

    fn to_oracle(m: &LinMap) -> dense::Matrix {
        m.to_dense()
            .iter()
            .map(|r| r.iter().map(|v| v.to_rational().unwrap()).collect())
            .collect()
    }

    fn from_oracle(m: &dense::Matrix, cols: usize) -> LinMap {
        let d: Vec<Vec<Scalar>> = m
            .iter()
            .map(|r| r.iter().map(|v| q().from_rational(v).unwrap()).collect())
            .collect();
        LinMap::from_dense(q(), &d, cols)
    }

    fn arb_map(rows: usize, cols: usize) -> impl Strategy<Value = LinMap> {
        proptest::collection::vec(prop_oneof![3 => Just(0i64), 1 => -3i64..4], rows * cols)
            .prop_map(move |v| from_ints(rows, cols, &v))
    }

    #[test]
    fn identity_and_nilpotent() {
        let id = LinMap::identity(q(), 2);
        assert_eq!(id.compose(&id).unwrap(), id);
        let n = from_ints(2, 2, &[0, 1, 0, 0]);
        assert!(n.compose(&n).unwrap().is_zero());
    }

    #[test]
    fn shape_errors() {
        let a = LinMap::zero(q(), 2, 3);
        let e = a.compose(&a).unwrap_err();
        assert!(e.to_string().contains("incompatible shapes"));
        assert!(LinMap::from_triplets(q(), 2, 2, [(0, 0, q().one()), (0, 0, q().one())]).is_err());
        assert!(LinMap::from_triplets(q(), 2, 2, [(2, 0, q().one())]).is_err());
        assert!(LinMap::from_triplets(q(), 2, 2, [(0, 0, Field::Prime(5).one())]).is_err());
        let z = LinMap::from_triplets(q(), 2, 2, [(0, 0, q().zero())]).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn kron_small_cases() {
        let k = LinMap::identity(q(), 2).kron(&LinMap::identity(q(), 3));
        assert_eq!(k, LinMap::identity(q(), 6));
        let f = from_ints(1, 2, &[1, 2]);
        let g = from_ints(2, 1, &[3, 5]);
        let fg = f.kron(&g);
        assert_eq!(fg.codomain_dim(), 2);
        assert_eq!(fg.domain_dim(), 2);
        assert_eq!(fg.rank(), 1);
        assert_eq!(to_oracle(&fg), dense::kron(&to_oracle(&f), &to_oracle(&g)));
    }

    #[test]
    fn lift_matches_kron() {
        let f = from_ints(2, 3, &[1, 0, 2, 0, -1, 1]);
        let a = LinMap::identity(q(), 2);
        let b = LinMap::identity(q(), 3);
        assert_eq!(f.lift(2, 3), a.kron(&f).kron(&b));
    }

    #[test]
    fn rank_and_inverse_basics() {
        let z = LinMap::zero(q(), 3, 3);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_dim(), 3);
        let id = LinMap::identity(q(), 4);
        assert_eq!(id.rank(), 4);
        assert_eq!(id.kernel_dim(), 0);
        assert_eq!(LinMap::identity(q(), 5).try_inverse(), Some(LinMap::identity(q(), 5)));
        assert_eq!(from_ints(2, 2, &[0, 1, 0, 0]).try_inverse(), None);
    }

    proptest! {
        #[test]
        fn compose_matches_dense(f in arb_map(4, 4), g in arb_map(4, 4)) {
            let got = f.compose(&g).unwrap();
            let want = dense::mul(&to_oracle(&f), &to_oracle(&g));
            prop_assert_eq!(to_oracle(&got), want);
        }

        #[test]
        fn compose_associative(f in arb_map(3, 4), g in arb_map(4, 2), h in arb_map(2, 3)) {
            let a = f.compose(&g).unwrap().compose(&h).unwrap();
            let b = f.compose(&g.compose(&h).unwrap()).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn kron_functorial(f in arb_map(2, 2), g in arb_map(2, 2), f2 in arb_map(2, 2), g2 in arb_map(2, 2)) {
            let lhs = f.kron(&g).compose(&f2.kron(&g2)).unwrap();
            let rhs = f.compose(&f2).unwrap().kron(&g.compose(&g2).unwrap());
            prop_assert_eq!(&lhs, &rhs);
            prop_assert_eq!(to_oracle(&lhs), dense::mul(&dense::kron(&to_oracle(&f), &to_oracle(&g)), &dense::kron(&to_oracle(&f2), &to_oracle(&g2))));
        }

        #[test]
        fn rank_matches_dense(f in arb_map(5, 6)) {
            prop_assert_eq!(f.rank(), dense::rank(&to_oracle(&f)));
            prop_assert_eq!(f.rank() + f.kernel_dim(), 6);
        }

        #[test]
        fn inverse_is_two_sided(f in arb_map(4, 4)) {
            match f.try_inverse() {
                Some(g) => {
                    prop_assert!(f.compose(&g).unwrap().is_identity());
                    prop_assert!(g.compose(&f).unwrap().is_identity());
                }
                None => prop_assert!(f.rank() < 4),
            }
        }

        #[test]
        fn transpose_involutive(f in arb_map(3, 5)) {
            prop_assert_eq!(f.transpose().transpose(), f.clone());
            prop_assert_eq!(f.transpose().rank(), f.rank());
        }

        #[test]
        fn solve_finds_preimages(f in arb_map(4, 3), x in proptest::collection::vec(-3i64..4, 3)) {
            let xs: Vec<(usize, Scalar)> = x.iter().enumerate().filter(|(_, v)| **v != 0).map(|(i, v)| (i, q().from_i64(*v))).collect();
            let b = f.apply(&xs);
            let sol = f.solve(&b).expect("consistent system");
            prop_assert_eq!(f.apply(&sol), b);
        }
    }

    #[test]
    fn dense_round_trip_through_oracle() {
        let m: dense::Matrix = vec![
            vec![BigRational::from_integer(1.into()), BigRational::new(1.into(), 2.into())],
            vec![BigRational::from_integer(0.into()), BigRational::from_integer((-3).into())],
        ];
        let l = from_oracle(&m, 2);
        assert_eq!(to_oracle(&l), m);
        assert_eq!(l.try_inverse().map(|i| to_oracle(&i)), dense::inverse(&m));
    }

    #[test]
    fn blocks() {
        let f = from_ints(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(f.column_block(1, 2), from_ints(3, 2, &[2, 3, 5, 6, 8, 9]));
        assert_eq!(f.row_block(1, 1), from_ints(1, 3, &[4, 5, 6]));
    }
}
