//! Shuffle sets, positive braid words and the multi-quantum (co)shuffles of
//! a braided system.
//!
//! A braid word `σ_{i_1} .. σ_{i_k}` acts as the composite
//! `σ^{i_1} ∘ .. ∘ σ^{i_k}`, so its rightmost letter is applied first and the
//! factor in position `j` ends in position `θ(j)` for the underlying
//! permutation `θ`. The action is partial: a letter may only cross colours
//! `k_i <= k_{i+1}`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::braid::BraidedSystem;
use crate::error::{Error, Result};
use crate::exactnum::{LinMap, Scalar};
use crate::perm::Perm;
use crate::tensorspace::embed_at;

/// A positive braid word; letters are 1-based generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<usize>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<usize>) -> Result<BraidWord> {
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i >= strands) {
            return Err(Error::Invalid(format!("σ_{bad} is not a generator of the braid monoid on {strands} strands")));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The image in the symmetric group.
    pub fn permutation(&self) -> Perm {
        Perm::from_word(self.strands, &self.letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|i| format!("σ{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A vector in one summand `V_{k_1} ⊗ .. ⊗ V_{k_d}`; colours are 0-based
/// component indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredVector {
    pub colors: Vec<usize>,
    pub coeffs: Vec<(usize, Scalar)>,
}

impl ColoredVector {
    pub fn new(colors: Vec<usize>, coeffs: Vec<(usize, Scalar)>) -> ColoredVector {
        ColoredVector { colors, coeffs }
    }

    /// A basis tensor given by its multi-index.
    pub fn basis(s: &BraidedSystem, colors: Vec<usize>, multi: &[usize]) -> ColoredVector {
        let dims = color_dims(s, &colors);
        let idx = crate::tensorspace::join_index(multi, &dims);
        ColoredVector { colors, coeffs: vec![(idx, s.field().one())] }
    }

    /// The empty word, i.e. the unit of the shuffle algebra.
    pub fn unit(s: &BraidedSystem) -> ColoredVector {
        ColoredVector { colors: vec![], coeffs: vec![(0, s.field().one())] }
    }

    pub fn degree(&self) -> usize {
        self.colors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

pub fn is_ordered(colors: &[usize]) -> bool {
    colors.windows(2).all(|w| w[0] <= w[1])
}

pub fn is_reversely_ordered(colors: &[usize]) -> bool {
    colors.windows(2).all(|w| w[0] >= w[1])
}

pub fn color_dims(s: &BraidedSystem, colors: &[usize]) -> Vec<usize> {
    colors.iter().map(|&c| s.dim(c)).collect()
}

/// Permutations increasing on consecutive blocks of the given sizes, in
/// lexicographic order of one-line notation.
pub fn shuffle_set(blocks: &[usize]) -> Vec<Perm> {
    let n: usize = blocks.iter().sum();
    // assign each output slot to a block; block b fills its slots in order
    let mut out = Vec::new();
    let mut remaining = blocks.to_vec();
    let mut slot_block = Vec::with_capacity(n);
    fn rec(remaining: &mut [usize], slot_block: &mut Vec<usize>, n: usize, blocks: &[usize], out: &mut Vec<Perm>) {
        if slot_block.len() == n {
            let mut starts: Vec<usize> = blocks
                .iter()
                .scan(0, |acc, &b| {
                    let s = *acc;
                    *acc += b;
                    Some(s)
                })
                .collect();
            let mut images = vec![0; n];
            for (slot, &b) in slot_block.iter().enumerate() {
                images[starts[b]] = slot;
                starts[b] += 1;
            }
            out.push(Perm::new(images).expect("bijective"));
            return;
        }
        for b in 0..remaining.len() {
            if remaining[b] > 0 {
                remaining[b] -= 1;
                slot_block.push(b);
                rec(remaining, slot_block, n, blocks, out);
                slot_block.pop();
                remaining[b] += 1;
            }
        }
    }
    rec(&mut remaining, &mut slot_block, n, blocks, &mut out);
    out.sort_by(|a, b| a.images().cmp(b.images()));
    out
}

/// The length-preserving lift of `θ` along the descent-stripping reduced
/// word.
pub fn matsumoto_lift(theta: &Perm) -> BraidWord {
    BraidWord { strands: theta.len(), letters: theta.reduced_word() }
}

/// The linear map of `b^σ` on the summand coloured by `colors`, with the
/// output colours, or `None` when some crossing is not in the domain.
pub fn braid_operator(s: &BraidedSystem, b: &BraidWord, colors: &[usize]) -> Result<Option<(Vec<usize>, LinMap)>> {
    if b.strands() != colors.len() {
        return Err(Error::Arity(format!("{}-strand braid on a word of length {}", b.strands(), colors.len())));
    }
    let mut cur = colors.to_vec();
    let total: usize = color_dims(s, colors).iter().product();
    let mut acc = LinMap::identity(s.field(), total);
    for &i in b.letters().iter().rev() {
        let (k, l) = (cur[i - 1], cur[i]);
        if k > l {
            return Ok(None);
        }
        let step = embed_at(s.sigma(k, l), i, 2, &color_dims(s, &cur))?;
        acc = step.compose(&acc)?;
        cur.swap(i - 1, i);
    }
    Ok(Some((cur, acc)))
}

/// Only the colour bookkeeping of [`braid_operator`].
pub fn braid_colors(b: &BraidWord, colors: &[usize]) -> Option<Vec<usize>> {
    let mut cur = colors.to_vec();
    for &i in b.letters().iter().rev() {
        if cur[i - 1] > cur[i] {
            return None;
        }
        cur.swap(i - 1, i);
    }
    Some(cur)
}

pub fn braid_action(s: &BraidedSystem, b: &BraidWord, x: &ColoredVector) -> Result<Option<ColoredVector>> {
    Ok(braid_operator(s, b, &x.colors)?.map(|(colors, m)| ColoredVector { colors, coeffs: m.apply(&x.coeffs) }))
}

fn sum_vectors(s: &BraidedSystem, dim: usize, parts: Vec<Vec<(usize, Scalar)>>) -> Vec<(usize, Scalar)> {
    let col: Vec<(usize, Scalar)> = parts.into_iter().flatten().collect();
    let m = LinMap::from_columns(s.field(), dim, vec![col]);
    m.column(0).map(|(i, v)| (i, v.clone())).collect()
}

/// `Σ_θ (B_θ)^σ (x ⊗ y)` over the shuffles `θ ∈ Sh_{p,q}` whose action is
/// defined and lands in a reversely ordered summand.
pub fn qsh_multiply(s: &BraidedSystem, x: &ColoredVector, y: &ColoredVector) -> Result<ColoredVector> {
    for v in [x, y] {
        if !is_reversely_ordered(&v.colors) {
            return Err(Error::Invalid(format!("shuffle input {} is not reversely ordered", fmt_colors(&v.colors))));
        }
    }
    let colors: Vec<usize> = x.colors.iter().chain(&y.colors).copied().collect();
    let mut target = colors.clone();
    target.sort_unstable_by(|a, b| b.cmp(a));
    let dims = color_dims(s, &colors);
    let ydim: usize = color_dims(s, &y.colors).iter().product();
    let input: Vec<(usize, Scalar)> = x
        .coeffs
        .iter()
        .flat_map(|(i, a)| y.coeffs.iter().map(move |(j, b)| (i * ydim + j, a * b)))
        .collect();
    let admissible: Vec<BraidWord> = shuffle_set(&[x.degree(), y.degree()])
        .iter()
        .map(matsumoto_lift)
        .filter(|b| braid_colors(b, &colors).as_deref() == Some(&target[..]))
        .collect();
    let parts: Vec<Vec<(usize, Scalar)>> = admissible
        .par_iter()
        .map(|b| braid_operator(s, b, &colors).map(|o| o.expect("admissible").1.apply(&input)))
        .collect::<Result<_>>()?;
    let dim = dims.iter().product();
    Ok(ColoredVector { colors: target, coeffs: sum_vectors(s, dim, parts) })
}

/// One summand of a coshuffle: the map into `V_{left} ⊗ V_{right} ⊗ ..`,
/// one colour word per block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoshuffleTerm {
    pub blocks: Vec<Vec<usize>>,
    pub map: LinMap,
}

/// `Σ_{θ ∈ Sh_{p_1,..,p_k}} (B_{θ⁻¹})^σ` on the ordered summand `colors`,
/// grouped by the colour words of the output blocks.
pub fn qcosh(s: &BraidedSystem, blocks: &[usize], colors: &[usize]) -> Result<Vec<CoshuffleTerm>> {
    if !is_ordered(colors) {
        return Err(Error::Invalid(format!("coshuffle input {} is not ordered", fmt_colors(colors))));
    }
    if blocks.iter().sum::<usize>() != colors.len() {
        return Err(Error::Arity(format!("blocks {blocks:?} do not split a word of length {}", colors.len())));
    }
    let shuffles = shuffle_set(blocks);
    let maps: Vec<(Vec<usize>, LinMap)> = shuffles
        .par_iter()
        .map(|t| {
            let b = matsumoto_lift(&t.inverse());
            braid_operator(s, &b, colors).map(|o| o.expect("ordered input keeps the action defined"))
        })
        .collect::<Result<_>>()?;
    let mut grouped: BTreeMap<Vec<usize>, LinMap> = BTreeMap::new();
    for (out, m) in maps {
        match grouped.get_mut(&out) {
            Some(acc) => *acc = acc.add(&m)?,
            None => {
                grouped.insert(out, m);
            }
        }
    }
    Ok(grouped
        .into_iter()
        .map(|(out, map)| {
            let mut split = Vec::with_capacity(blocks.len());
            let mut start = 0;
            for &b in blocks {
                split.push(out[start..start + b].to_vec());
                start += b;
            }
            CoshuffleTerm { blocks: split, map }
        })
        .collect())
}

/// All ordered colour words of length `d` over `r` components.
pub fn ordered_words(r: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(r: usize, d: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for c in min..r {
            cur.push(c);
            rec(r, d, c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, d, 0, &mut Vec::new(), &mut out);
    out
}

pub fn reversely_ordered_words(r: usize, d: usize) -> Vec<Vec<usize>> {
    ordered_words(r, d)
        .into_iter()
        .map(|mut w| {
            w.reverse();
            w
        })
        .collect()
}

/// 1-based colour word for messages.
pub fn fmt_colors(colors: &[usize]) -> String {
    let parts: Vec<String> = colors.iter().map(|c| (c + 1).to_string()).collect();
    format!("({})", parts.join(","))
}

/// Associativity of the shuffle product on every triple of basis tensors of
/// total degree at most `max_degree`.
pub fn check_qsh_associativity(s: &BraidedSystem, max_degree: usize) -> Result<crate::report::Report> {
    let mut rep = crate::report::Report::new();
    let mut basis: Vec<ColoredVector> = Vec::new();
    for d in 0..=max_degree {
        for w in reversely_ordered_words(s.rank(), d) {
            let total: usize = color_dims(s, &w).iter().product();
            for i in 0..total {
                basis.push(ColoredVector { colors: w.clone(), coeffs: vec![(i, s.field().one())] });
            }
        }
    }
    for x in &basis {
        for y in &basis {
            if x.degree() + y.degree() > max_degree {
                continue;
            }
            let xy = qsh_multiply(s, x, y)?;
            for z in &basis {
                if x.degree() + y.degree() + z.degree() > max_degree {
                    continue;
                }
                let lhs = qsh_multiply(s, &xy, z)?;
                let rhs = qsh_multiply(s, x, &qsh_multiply(s, y, z)?)?;
                if lhs != rhs {
                    rep.push(
                        "shuffle associativity",
                        vec![x.coeffs[0].0, y.coeffs[0].0, z.coeffs[0].0],
                        format!("colours {} {} {}", fmt_colors(&x.colors), fmt_colors(&y.colors), fmt_colors(&z.colors)),
                    );
                    return Ok(rep);
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests;
