//! Adjoint modules on ordered tensor words, and the explicit bimodule
//! formulas they specialise to.

use super::{BraidedModule, Side};
use crate::braid::{bialgebra_crossed_data, BraidedSystem, CrossedData};
use crate::error::{Error, Result};
use crate::exactnum::LinMap;
use crate::hopf::{check_character, dual_bialgebra, Algebra, Bialgebra};
use crate::perm::Perm;
use crate::shuffle::ordered_words;
use crate::tensorspace::{embed_at, perm_operator, swap, BasedSpace};

/// Layout of `⊕_w L ⊗ V_w ⊗ R` over ordered words `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedSum {
    pub words: Vec<Vec<usize>>,
    pub offsets: Vec<usize>,
    pub total: usize,
}

impl OrderedSum {
    /// Ordered words of length `n` in the colors `lo..hi`.
    pub fn new(s: &BraidedSystem, lo: usize, hi: usize, n: usize, left: usize, right: usize) -> OrderedSum {
        let words: Vec<Vec<usize>> =
            ordered_words(hi - lo, n).into_iter().map(|w| w.into_iter().map(|c| c + lo).collect()).collect();
        let mut offsets = Vec::with_capacity(words.len());
        let mut total = 0;
        for w in &words {
            offsets.push(total);
            total += left * w.iter().map(|&c| s.dim(c)).product::<usize>() * right;
        }
        OrderedSum { words, offsets, total }
    }

    pub fn block(&self, w: &[usize]) -> Option<usize> {
        self.words.iter().position(|x| x == w)
    }

    pub fn block_dim(&self, b: usize) -> usize {
        self.offsets.get(b + 1).copied().unwrap_or(self.total) - self.offsets[b]
    }
}

/// `ω_{2n}`: slot `j` goes to `2j`, slot `n + j` to `2j + 1`.
pub fn omega(n: usize) -> Perm {
    let mut img = vec![0; 2 * n];
    for j in 0..n {
        img[j] = 2 * j;
        img[n + j] = 2 * j + 1;
    }
    Perm::new(img).expect("permutation")
}

/// `μ^{(k)}: A^{⊗k} -> A`, the unit for `k = 0`.
pub(crate) fn iterated_product(a: &Algebra, k: usize) -> LinMap {
    if k == 0 {
        return a.unit.clone();
    }
    let mut acc = a.identity();
    for _ in 1..k {
        acc = a.mul.compose(&acc.kron(&a.identity())).expect("shapes");
    }
    acc
}

fn check_sub(s: &BraidedSystem, sub: &BraidedSystem, range: std::ops::Range<usize>) -> Result<()> {
    if sub.rank() != range.len() || range.clone().any(|i| sub.dim(i - range.start) != s.dim(i)) {
        return Err(Error::Arity(format!(
            "the module must live over components {}..{}",
            range.start + 1,
            range.end
        )));
    }
    Ok(())
}

// Carries V_i leftwards across V_w: V_w ⊗ V_i -> V_i ⊗ V_w.
fn pull_left(s: &BraidedSystem, w: &[usize], i: usize) -> LinMap {
    let f = s.field();
    let mut dims: Vec<usize> = w.iter().map(|&c| s.dim(c)).collect();
    dims.push(s.dim(i));
    let total: usize = dims.iter().product();
    let mut acc = LinMap::identity(f, total);
    for k in (1..=w.len()).rev() {
        let step = embed_at(s.sigma(w[k - 1], i), k, 2, &dims).expect("dims");
        acc = step.compose(&acc).expect("shapes");
        dims.swap(k - 1, k);
    }
    acc
}

// Carries V_i rightwards across V_w: V_i ⊗ V_w -> V_w ⊗ V_i.
fn push_right(s: &BraidedSystem, i: usize, w: &[usize]) -> LinMap {
    let f = s.field();
    let mut dims = vec![s.dim(i)];
    dims.extend(w.iter().map(|&c| s.dim(c)));
    let total: usize = dims.iter().product();
    let mut acc = LinMap::identity(f, total);
    for k in 1..=w.len() {
        let step = embed_at(s.sigma(i, w[k - 1]), k, 2, &dims).expect("dims");
        acc = step.compose(&acc).expect("shapes");
        dims.swap(k - 1, k);
    }
    acc
}

/// `(ρ_i ⊗ Id) ∘ (Id_M ⊗ σ̄_{V_w, V_i})`: `M ⊗ V_w ⊗ V_i -> M ⊗ V_w`.
pub(crate) fn right_adjoint_block(s: &BraidedSystem, rho: &LinMap, i: usize, w: &[usize], dm: usize) -> LinMap {
    let dw: usize = w.iter().map(|&c| s.dim(c)).product();
    rho.lift(1, dw).compose(&pull_left(s, w, i).lift(dm, 1)).expect("shapes")
}

/// `(Id ⊗ λ_i) ∘ (σ̄_{V_i, V_w} ⊗ Id_N)`: `V_i ⊗ V_w ⊗ N -> V_w ⊗ N`.
pub(crate) fn left_adjoint_block(s: &BraidedSystem, lambda: &LinMap, i: usize, w: &[usize], dn: usize) -> LinMap {
    let dw: usize = w.iter().map(|&c| s.dim(c)).product();
    lambda.lift(dw, 1).compose(&push_right(s, i, w).lift(1, dn)).expect("shapes")
}

/// The right adjoint module on `⊕_w M ⊗ V_w`, `w` ordered of length `n` in
/// colors `1..=t`, for a right module `M` over components `t..=r` (1-based).
pub fn adjoint_module(s: &BraidedSystem, m: &BraidedModule, t: usize, n: usize) -> Result<(BraidedModule, OrderedSum)> {
    let r = s.rank();
    if t == 0 || t > r {
        return Err(Error::Arity(format!("t = {t} outside 1..={r}")));
    }
    if m.side != Side::Right {
        return Err(Error::Invalid("expected a right module".into()));
    }
    check_sub(s, &m.system, t - 1..r)?;
    let f = s.field();
    let dm = m.dim();
    let layout = OrderedSum::new(s, 0, t, n, dm, 1);
    let mut actions = Vec::new();
    for i in t - 1..r {
        let di = s.dim(i);
        let rho = m.action(i - (t - 1));
        let mut trip = Vec::new();
        for (b, w) in layout.words.iter().enumerate() {
            let local = right_adjoint_block(s, rho, i, w, dm);
            let off = layout.offsets[b];
            for (row, col, v) in local.triplets() {
                let (x, vi) = (col / di, col % di);
                trip.push((off + row, (off + x) * di + vi, v.clone()));
            }
        }
        actions.push(LinMap::from_triplets(f, layout.total, layout.total * di, trip)?);
    }
    let space = sum_space(s, &layout, Some(&m.space), None);
    let module = BraidedModule::new(space, Side::Right, actions, s.subsystem(&(t - 1..r).collect::<Vec<_>>()))?;
    Ok((module, layout))
}

/// The left adjoint module on `⊕_w V_w ⊗ N`, `w` ordered of length `n` in
/// colors `t..=r`, for a left module `N` over components `1..=t`.
pub fn adjoint_module_left(
    s: &BraidedSystem,
    nm: &BraidedModule,
    t: usize,
    n: usize,
) -> Result<(BraidedModule, OrderedSum)> {
    let r = s.rank();
    if t == 0 || t > r {
        return Err(Error::Arity(format!("t = {t} outside 1..={r}")));
    }
    if nm.side != Side::Left {
        return Err(Error::Invalid("expected a left module".into()));
    }
    check_sub(s, &nm.system, 0..t)?;
    let f = s.field();
    let dn = nm.dim();
    let layout = OrderedSum::new(s, t - 1, r, n, 1, dn);
    let mut actions = Vec::new();
    for i in 0..t {
        let di = s.dim(i);
        let lambda = nm.action(i);
        let mut trip = Vec::new();
        for (b, w) in layout.words.iter().enumerate() {
            let block = layout.block_dim(b);
            let local = left_adjoint_block(s, lambda, i, w, dn);
            let off = layout.offsets[b];
            for (row, col, v) in local.triplets() {
                let (vi, x) = (col / block, col % block);
                trip.push((off + row, vi * layout.total + off + x, v.clone()));
            }
        }
        actions.push(LinMap::from_triplets(f, layout.total, layout.total * di, trip)?);
    }
    let space = sum_space(s, &layout, None, Some(&nm.space));
    let module = BraidedModule::new(space, Side::Left, actions, s.subsystem(&(0..t).collect::<Vec<_>>()))?;
    Ok((module, layout))
}

fn sum_space(s: &BraidedSystem, layout: &OrderedSum, left: Option<&BasedSpace>, right: Option<&BasedSpace>) -> BasedSpace {
    let parts: Vec<BasedSpace> = layout
        .words
        .iter()
        .map(|w| {
            let mut factors: Vec<BasedSpace> = left.into_iter().cloned().collect();
            factors.extend(w.iter().map(|&c| s.component(c).clone()));
            factors.extend(right.cloned());
            BasedSpace::tensor(&factors)
        })
        .collect();
    BasedSpace::direct_sum("T", &parts)
}

fn power(x: &LinMap, n: usize) -> LinMap {
    (0..n).fold(LinMap::identity(x.field(), 1), |acc, _| acc.kron(x))
}

fn require_character(a: &Algebra, eps: &LinMap, what: &str) -> Result<()> {
    let rep = check_character(a, eps);
    if rep.is_clean() {
        Ok(())
    } else {
        Err(Error::Axiom(format!("{what} is not a character: {}", rep.to_string().trim_end())))
    }
}

/// `(C^n, A, B)` bimodule actions from crossed data and characters
/// `ε_A`, `ε_B`: returns `(right: C^n ⊗ A -> C^n, left: B ⊗ C^n -> C^n)`.
pub fn crossed_power_bimodule(
    data: &CrossedData,
    n: usize,
    eps_a: &LinMap,
    eps_b: &LinMap,
) -> Result<(LinMap, LinMap)> {
    require_character(&data.a, eps_a, "ε_A")?;
    require_character(&data.b, eps_b, "ε_B")?;
    let f = data.h.field();
    let (dh, da, db, dc) = (data.h.dim(), data.a.dim(), data.b.dim(), data.c.dim());
    let dcn = dc.pow(n as u32);
    let hmul = iterated_product(&data.h.algebra(), n);

    let mut inter = Vec::with_capacity(2 * n);
    for _ in 0..n {
        inter.extend([dh, dc]);
    }
    let split_l = perm_operator(f, &omega(n).inverse(), &inter)?.compose(&power(&data.delta_l, n))?;
    let right = LinMap::chain(&[
        &eps_a.lift(1, dcn),
        &data.lambda.lift(1, dcn),
        &swap(f, dcn, da).lift(dh, 1),
        &hmul.lift(1, dcn * da),
        &split_l.lift(1, da),
    ])?;

    let mut inter = Vec::with_capacity(2 * n);
    for _ in 0..n {
        inter.extend([dc, dh]);
    }
    let split_r = perm_operator(f, &omega(n).inverse(), &inter)?.compose(&power(&data.delta_r, n))?;
    let left = LinMap::chain(&[
        &eps_b.lift(dcn, 1),
        &data.rho.lift(dcn, 1),
        &swap(f, db, dcn).lift(1, dh),
        &hmul.lift(db * dcn, 1),
        &split_r.lift(db, 1),
    ])?;
    Ok((right, left))
}

/// `(H^n, H*, H*)` bimodule actions: `(left: H* ⊗ H^n -> H^n, right: H^n ⊗ H* -> H^n)`.
pub fn hstar_bimodule(h: &Bialgebra, n: usize) -> Result<(LinMap, LinMap)> {
    let data = bialgebra_crossed_data(h);
    let nu_star = dual_bialgebra(h).counit;
    let (right, left) = crossed_power_bimodule(&data, n, &nu_star, &nu_star)?;
    Ok((left, right))
}

/// Four commuting operators on `H^n ⊗ (H*)^m`; `None` where the defining
/// factor is absent.
#[derive(Clone, Debug)]
pub struct AdjointOperators {
    /// The first `H*` acts on `H^n` from the right.
    pub hstar_right: Option<LinMap>,
    /// The last `H*` acts on `H^n` from the left.
    pub hstar_left: Option<LinMap>,
    /// The last `H` acts on `(H*)^m` from the left.
    pub h_left: Option<LinMap>,
    /// The first `H` acts on `(H*)^m` from the right.
    pub h_right: Option<LinMap>,
}

impl AdjointOperators {
    pub fn all(&self) -> Vec<(&'static str, &LinMap)> {
        [
            ("H* right", &self.hstar_right),
            ("H* left", &self.hstar_left),
            ("H left", &self.h_left),
            ("H right", &self.h_right),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.as_ref().map(|v| (k, v)))
        .collect()
    }
}

pub fn bialgebra_adjoint_operators(h: &Bialgebra, n: usize, m: usize) -> Result<AdjointOperators> {
    let f = h.field();
    let d = h.dim();
    let dn = d.pow(n as u32);
    let mut ops = AdjointOperators { hstar_right: None, hstar_left: None, h_left: None, h_right: None };
    if m >= 1 {
        let rest = d.pow(m as u32 - 1);
        let (left, right) = hstar_bimodule(h, n)?;
        ops.hstar_right = Some(right.lift(1, rest));
        ops.hstar_left = Some(left.lift(1, rest).compose(&swap(f, dn * rest, d))?);
    }
    if n >= 1 {
        let dual = dual_bialgebra(h);
        let (left, right) = hstar_bimodule(&dual, m)?;
        let before = d.pow(n as u32 - 1);
        let dm = d.pow(m as u32);
        ops.h_left = Some(left.lift(before, 1));
        ops.h_right = Some(right.lift(before, 1).compose(&swap(f, d, before * dm))?);
    }
    Ok(ops)
}
