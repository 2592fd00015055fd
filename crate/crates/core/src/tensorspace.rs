//! Based vector spaces, tensor words and the maps built from their shape:
//! positional embeddings, factor permutations, evaluation/coevaluation and
//! the rainbow duality.
//!
//! Multi-indices are row-major with the leftmost factor slowest, matching
//! [`LinMap::kron`].

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::{Field, LinMap};
use crate::perm::Perm;

/// A finite-dimensional space with named basis vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BasedSpace {
    label: Arc<str>,
    names: Arc<[String]>,
}

impl fmt::Debug for BasedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(dim {})", self.label, self.dim())
    }
}

impl BasedSpace {
    pub fn new(label: impl Into<String>, names: Vec<String>) -> Result<BasedSpace> {
        let mut sorted: Vec<&String> = names.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Invalid(format!("repeated basis name {:?}", w[0])));
        }
        Ok(BasedSpace {
            label: Arc::from(label.into()),
            names: names.into(),
        })
    }

    /// Space with basis `prefix0, prefix1, ..`.
    pub fn numbered(label: &str, prefix: &str, dim: usize) -> BasedSpace {
        BasedSpace::new(label, (0..dim).map(|i| format!("{prefix}{i}")).collect()).expect("distinct")
    }

    /// The unit object: one basis vector named `1`.
    pub fn unit() -> BasedSpace {
        BasedSpace::new("I", vec!["1".into()]).expect("distinct")
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relabel(&self, label: impl Into<String>) -> BasedSpace {
        BasedSpace {
            label: Arc::from(label.into()),
            names: self.names.clone(),
        }
    }

    /// Dual space; basis vector `i` is the functional dual to `e_i`, named
    /// with a trailing star.
    pub fn dual(&self) -> BasedSpace {
        let names = self.names.iter().map(|n| dual_name(n)).collect();
        BasedSpace::new(dual_name(&self.label), names).expect("distinct")
    }

    /// Tensor product of spaces, basis named `a⊗b`.
    pub fn tensor(factors: &[BasedSpace]) -> BasedSpace {
        let label = factors.iter().map(|f| f.label()).collect::<Vec<_>>().join("⊗");
        let mut names = vec![String::new()];
        for f in factors {
            names = names
                .iter()
                .flat_map(|a| {
                    f.names().iter().map(move |b| {
                        if a.is_empty() {
                            b.clone()
                        } else {
                            format!("{a}⊗{b}")
                        }
                    })
                })
                .collect();
        }
        if factors.is_empty() {
            return BasedSpace::unit();
        }
        BasedSpace::new(label, names).expect("distinct")
    }

    /// Direct sum, basis names tagged by summand when needed.
    pub fn direct_sum(label: &str, parts: &[BasedSpace]) -> BasedSpace {
        let names = parts
            .iter()
            .enumerate()
            .flat_map(|(k, p)| p.names().iter().map(move |n| format!("{n}@{}", k + 1)))
            .collect();
        BasedSpace::new(label, names).expect("distinct")
    }
}

fn dual_name(n: &str) -> String {
    match n.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{n}*"),
    }
}

/// Ordered list of tensor factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorWord {
    factors: Vec<BasedSpace>,
}

impl TensorWord {
    pub fn new(factors: Vec<BasedSpace>) -> TensorWord {
        TensorWord { factors }
    }

    pub fn power(v: &BasedSpace, n: usize) -> TensorWord {
        TensorWord::new(vec![v.clone(); n])
    }

    pub fn factors(&self) -> &[BasedSpace] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.dim()).collect()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim()).product()
    }

    pub fn space(&self) -> BasedSpace {
        BasedSpace::tensor(&self.factors)
    }

    pub fn multi_index(&self, idx: usize) -> Vec<usize> {
        split_index(idx, &self.dims())
    }

    pub fn flat_index(&self, multi: &[usize]) -> usize {
        join_index(multi, &self.dims())
    }

    pub fn dual(&self) -> TensorWord {
        TensorWord::new(self.factors.iter().rev().map(|f| f.dual()).collect())
    }

    /// Replaces `arity` factors starting at 1-based position `i` by `with`.
    pub fn splice(&self, i: usize, arity: usize, with: &[BasedSpace]) -> TensorWord {
        let mut f = self.factors[..i - 1].to_vec();
        f.extend_from_slice(with);
        f.extend_from_slice(&self.factors[i - 1 + arity..]);
        TensorWord::new(f)
    }
}

/// Row-major multi-index of a flat index.
pub fn split_index(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = idx % dims[k];
        idx /= dims[k];
    }
    out
}

pub fn join_index(multi: &[usize], dims: &[usize]) -> usize {
    multi.iter().zip(dims).fold(0, |acc, (i, d)| acc * d + i)
}

/// `Id^{⊗(i-1)} ⊗ φ ⊗ Id^{⊗..}` where `φ` acts on the `arity` factors of
/// `dims` starting at 1-based position `i`.
pub fn embed_at(phi: &LinMap, i: usize, arity: usize, dims: &[usize]) -> Result<LinMap> {
    if i == 0 || i - 1 + arity > dims.len() {
        return Err(Error::Arity(format!(
            "slot {i}..{} outside a word of length {}",
            i + arity - 1,
            dims.len()
        )));
    }
    let slot: usize = dims[i - 1..i - 1 + arity].iter().product();
    if slot != phi.domain_dim() {
        return Err(Error::Arity(format!(
            "map with domain {} placed on factors of total dimension {slot}",
            phi.domain_dim()
        )));
    }
    let left = dims[..i - 1].iter().product();
    let right = dims[i - 1 + arity..].iter().product();
    Ok(phi.lift(left, right))
}

/// [`embed_at`] with the context given as a word of spaces.
pub fn embed_in_word(phi: &LinMap, i: usize, domain: &[BasedSpace], context: &TensorWord) -> Result<LinMap> {
    let n = domain.len();
    if i == 0 || i - 1 + n > context.len() || context.factors()[i - 1..i - 1 + n] != *domain {
        return Err(Error::Arity(format!("slot {i} of {context:?} does not hold {domain:?}")));
    }
    embed_at(phi, i, n, &context.dims())
}

/// Permutes tensor factors: input factor `j` lands in output slot `θ(j)`.
pub fn perm_operator(field: Field, theta: &Perm, dims: &[usize]) -> Result<LinMap> {
    let k = dims.len();
    if theta.len() != k {
        return Err(Error::Arity(format!("permutation of {} letters on {k} factors", theta.len())));
    }
    let mut out_dims = vec![0; k];
    for j in 0..k {
        out_dims[theta.apply(j)] = dims[j];
    }
    let total: usize = dims.iter().product();
    let mut out = vec![0; k];
    let images: Vec<usize> = (0..total)
        .map(|col| {
            let idx = split_index(col, dims);
            for j in 0..k {
                out[theta.apply(j)] = idx[j];
            }
            join_index(&out, &out_dims)
        })
        .collect();
    Ok(LinMap::from_basis_map(field, total, &images))
}

/// Dimensions after [`perm_operator`].
pub fn permuted_dims(theta: &Perm, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (j, &d) in dims.iter().enumerate() {
        out[theta.apply(j)] = d;
    }
    out
}

/// The flip `V ⊗ W -> W ⊗ V`.
pub fn swap(field: Field, dv: usize, dw: usize) -> LinMap {
    perm_operator(field, &Perm::simple(2, 1), &[dv, dw]).expect("two factors")
}

/// Reverses the order of the factors.
pub fn reversal(field: Field, dims: &[usize]) -> LinMap {
    let n = dims.len();
    let theta = Perm::new((0..n).rev().collect()).expect("reversal");
    perm_operator(field, &theta, dims).expect("matching length")
}

/// `ev: V* ⊗ V -> I`, `δ_i ⊗ e_j ↦ [i = j]`.
pub fn evaluation(field: Field, dim: usize) -> LinMap {
    let one = field.one();
    LinMap::from_triplets(field, 1, dim * dim, (0..dim).map(|i| (0, i * dim + i, one.clone())))
        .expect("valid")
}

/// `coev: I -> V ⊗ V*`, `1 ↦ Σ e_i ⊗ δ_i`.
pub fn coevaluation(field: Field, dim: usize) -> LinMap {
    evaluation(field, dim).transpose()
}

/// `V ⊗ V* -> I`, `e_j ⊗ δ_i ↦ [i = j]`.
pub fn evaluation_twisted(field: Field, dim: usize) -> LinMap {
    evaluation(field, dim)
        .compose(&swap(field, dim, dim))
        .expect("square")
}

/// `I -> V* ⊗ V`, `1 ↦ Σ δ_i ⊗ e_i`.
pub fn coevaluation_twisted(field: Field, dim: usize) -> LinMap {
    swap(field, dim, dim)
        .compose(&coevaluation(field, dim))
        .expect("square")
}

/// Rainbow dual of `f: V_1⊗..⊗V_p -> W_1⊗..⊗W_q`, a map
/// `W_q*⊗..⊗W_1* -> V_p*⊗..⊗V_1*` with
/// `⟨f*(λ), v⟩ = ⟨λ, f(v)⟩` under the nested pairing.
pub fn dual_map(f: &LinMap, domain_dims: &[usize], codomain_dims: &[usize]) -> Result<LinMap> {
    let dd: usize = domain_dims.iter().product();
    let cd: usize = codomain_dims.iter().product();
    if dd != f.domain_dim() || cd != f.codomain_dim() {
        return Err(Error::Shape(format!(
            "dual of a {}x{} map with word dimensions {cd}x{dd}",
            f.codomain_dim(),
            f.domain_dim()
        )));
    }
    let field = f.field();
    let rev_cod: Vec<usize> = codomain_dims.iter().rev().copied().collect();
    let into_t = reversal(field, &rev_cod);
    let out_of_t = reversal(field, domain_dims);
    LinMap::chain(&[&out_of_t, &f.transpose(), &into_t])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Scalar;
    use proptest::prelude::*;

    fn q() -> Field {
        Field::Rational
    }

    fn arb_map(rows: usize, cols: usize) -> impl Strategy<Value = LinMap> {
        proptest::collection::vec(-2i64..3, rows * cols).prop_map(move |v| {
            let d: Vec<Vec<Scalar>> = v.chunks(cols).map(|r| r.iter().map(|&x| q().from_i64(x)).collect()).collect();
            LinMap::from_dense(q(), &d, cols)
        })
    }

    #[test]
    fn embed_identity_and_errors() {
        let id = LinMap::identity(q(), 3);
        assert!(embed_at(&id, 2, 1, &[2, 3, 2]).unwrap().is_identity());
        assert!(embed_at(&id, 1, 1, &[2, 3]).is_err());
        let err = embed_at(&id, 3, 1, &[2, 3]).unwrap_err();
        assert!(err.to_string().contains("position/arity mismatch"));
    }

    #[test]
    fn tensor_names() {
        let h = BasedSpace::new("H", vec!["1".into(), "g".into()]).unwrap();
        let t = BasedSpace::tensor(&[h.clone(), h.dual()]);
        assert_eq!(t.names()[1], "1⊗g*");
        assert_eq!(h.dual().dual(), h);
        assert!(BasedSpace::new("X", vec!["a".into(), "a".into()]).is_err());
    }

    #[test]
    fn swap_exchanges_pairs() {
        let t = swap(q(), 2, 3);
        // e_1 ⊗ f_2 (index 1*3+2) goes to f_2 ⊗ e_1 (index 2*2+1)
        assert_eq!(t.apply(&[(5, q().one())]), vec![(5, q().one())]);
        assert_eq!(t.apply(&[(1, q().one())]), vec![(2, q().one())]);
        assert!(t.compose(&swap(q(), 3, 2)).unwrap().is_identity());
    }

    #[test]
    fn omega_square() {
        // ω_4 in one-line form 1 3 2 4.
        let omega = Perm::parse("1 3 2 4", 4).unwrap();
        let dims = [2, 3, 2, 3];
        let w = perm_operator(q(), &omega, &dims).unwrap();
        let w_again = perm_operator(q(), &omega, &permuted_dims(&omega, &dims)).unwrap();
        let w2 = w_again.compose(&w).unwrap();
        let direct = perm_operator(q(), &omega.then_after(&omega), &dims).unwrap();
        assert_eq!(w2, direct);
    }

    #[test]
    fn zigzag() {
        let d = 4;
        let id = LinMap::identity(q(), d);
        // V -> V⊗V*⊗V -> V with ev on the right pair twisted
        let left = coevaluation(q(), d).kron(&id);
        let right = id.kron(&evaluation(q(), d));
        assert!(right.compose(&left).unwrap().is_identity());
        let left2 = id.kron(&coevaluation_twisted(q(), d));
        let right2 = evaluation_twisted(q(), d).kron(&id);
        assert!(right2.compose(&left2).unwrap().is_identity());
        assert_eq!(evaluation(q(), 1), LinMap::identity(q(), 1));
    }

    proptest! {
        #[test]
        fn perm_operator_is_homomorphism(
            a in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle(),
            b in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle(),
        ) {
            let (a, b) = (Perm::new(a).unwrap(), Perm::new(b).unwrap());
            let dims = [2, 3, 1, 2];
            let pb = perm_operator(q(), &b, &dims).unwrap();
            let pa = perm_operator(q(), &a, &permuted_dims(&b, &dims)).unwrap();
            prop_assert_eq!(pa.compose(&pb).unwrap(), perm_operator(q(), &a.then_after(&b), &dims).unwrap());
        }

        #[test]
        fn dual_is_involutive_and_contravariant(f in arb_map(2, 4), g in arb_map(4, 4)) {
            let df = dual_map(&f, &[2, 2], &[2]).unwrap();
            prop_assert_eq!(dual_map(&df, &[2], &[2, 2]).unwrap(), f.clone());
            let fg = f.compose(&g).unwrap();
            let dg = dual_map(&g, &[2, 2], &[2, 2]).unwrap();
            prop_assert_eq!(dual_map(&fg, &[2, 2], &[2]).unwrap(), dg.compose(&df).unwrap());
        }

        #[test]
        fn embed_commutes_with_kron(f in arb_map(2, 4)) {
            let a = embed_at(&f, 2, 2, &[3, 2, 2]).unwrap().kron(&LinMap::identity(q(), 2));
            let b = embed_at(&f, 2, 2, &[3, 2, 2, 2]).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
