//! Hopf modules and Hopf bimodules as braided modules over `B(H)` and
//! `B'(H)`.

use super::{
    check_left_comodule, check_left_module, check_right_comodule, check_right_module, comodule_to_module,
    left_to_right, left_to_right_coaction, module_to_comodule, right_to_left, right_to_left_coaction, BraidedModule,
    Side,
};
use super::adjoint::{iterated_product, omega};
use crate::braid::{build_b, build_b_prime};
use crate::error::{Error, Result};
use crate::exactnum::LinMap;
use crate::hopf::{dual_bialgebra, Bialgebra};
use crate::report::Report;
use crate::tensorspace::{evaluation_twisted, perm_operator, swap, BasedSpace};

/// A right-right Hopf module: `ρ: M ⊗ H -> M`, `δ: M -> M ⊗ H`.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfModule {
    pub space: BasedSpace,
    pub rho: LinMap,
    pub delta: LinMap,
}

/// Actions `ρ: M ⊗ H -> M`, `λ: H ⊗ M -> M` and coactions
/// `δ: M -> M ⊗ H`, `γ: M -> H ⊗ M`.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfBimodule {
    pub space: BasedSpace,
    pub rho: LinMap,
    pub lambda: LinMap,
    pub delta: LinMap,
    pub gamma: LinMap,
}

impl HopfBimodule {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// `H` over itself by `μ` and `Δ`.
pub fn regular_hopf_module(h: &Bialgebra) -> HopfModule {
    HopfModule { space: h.space.clone(), rho: h.mul.clone(), delta: h.comul.clone() }
}

pub fn regular_hopf_bimodule(h: &Bialgebra) -> HopfBimodule {
    HopfBimodule {
        space: h.space.clone(),
        rho: h.mul.clone(),
        lambda: h.mul.clone(),
        delta: h.comul.clone(),
        gamma: h.comul.clone(),
    }
}

fn compatibility_rr(h: &Bialgebra, rho: &LinMap, delta: &LinMap, dm: usize) -> (LinMap, LinMap) {
    let f = h.field();
    let d = h.dim();
    let lhs = delta.compose(rho).expect("shapes");
    let rhs = LinMap::chain(&[&rho.kron(&h.mul), &swap(f, d, d).lift(dm, d), &delta.kron(&h.comul)]).expect("shapes");
    (lhs, rhs)
}

pub fn check_hopf_module(h: &Bialgebra, m: &HopfModule) -> Report {
    let dm = m.space.dim();
    let mut rep = check_right_module(&h.algebra(), &m.rho, dm);
    rep.merge(check_right_comodule(&h.coalgebra(), &m.delta, dm));
    let (lhs, rhs) = compatibility_rr(h, &m.rho, &m.delta, dm);
    rep.compare("Hopf compatibility", &lhs, &rhs, &[dm, h.dim()]);
    rep
}

/// `(M, ρ, δ) ↦ (M; ρ, δ^co)` over `B(H)`.
pub fn hopf_module_to_braided(h: &Bialgebra, m: &HopfModule) -> Result<BraidedModule> {
    let rep = check_hopf_module(h, m);
    if !rep.is_clean() {
        return Err(Error::Axiom(rep.to_string().trim_end().to_string()));
    }
    let dm = m.space.dim();
    let actions = vec![m.rho.clone(), comodule_to_module(&m.delta, dm, h.dim())];
    BraidedModule::new(m.space.clone(), Side::Right, actions, build_b(h))
}

pub fn braided_to_hopf_module(m: &BraidedModule) -> Result<HopfModule> {
    if m.actions.len() != 2 || m.side != Side::Right {
        return Err(Error::Arity("expected a right module over a rank 2 system".into()));
    }
    let d = m.system.dim(0);
    Ok(HopfModule {
        space: m.space.clone(),
        rho: m.actions[0].clone(),
        delta: module_to_comodule(&m.actions[1], m.dim(), d),
    })
}

/// Bimodule, bicomodule and the four Hopf compatibilities, named
/// `δ∘ρ`, `δ∘λ`, `γ∘ρ`, `γ∘λ`.
pub fn check_hopf_bimodule(h: &Bialgebra, m: &HopfBimodule) -> Report {
    let f = h.field();
    let d = h.dim();
    let dm = m.dim();
    let (alg, coalg) = (h.algebra(), h.coalgebra());
    let mut rep = check_right_module(&alg, &m.rho, dm);
    rep.merge(check_left_module(&alg, &m.lambda, dm));
    let lhs = m.lambda.compose(&m.rho.lift(d, 1)).expect("shapes");
    let rhs = m.rho.compose(&m.lambda.lift(1, d)).expect("shapes");
    rep.compare("actions commute", &lhs, &rhs, &[d, dm, d]);
    rep.merge(check_right_comodule(&coalg, &m.delta, dm));
    rep.merge(check_left_comodule(&coalg, &m.gamma, dm));
    let lhs = m.gamma.lift(1, d).compose(&m.delta).expect("shapes");
    let rhs = m.delta.lift(d, 1).compose(&m.gamma).expect("shapes");
    rep.compare("coactions commute", &lhs, &rhs, &[dm]);

    let (lhs, rhs) = compatibility_rr(h, &m.rho, &m.delta, dm);
    rep.compare("Hopf compatibility δ∘ρ", &lhs, &rhs, &[dm, d]);

    let lhs = m.delta.compose(&m.lambda).expect("shapes");
    let rhs = LinMap::chain(&[&m.lambda.kron(&h.mul), &swap(f, d, dm).lift(d, d), &h.comul.kron(&m.delta)]).expect("shapes");
    rep.compare("Hopf compatibility δ∘λ", &lhs, &rhs, &[d, dm]);

    let lhs = m.gamma.compose(&m.rho).expect("shapes");
    let rhs = LinMap::chain(&[&h.mul.kron(&m.rho), &swap(f, dm, d).lift(d, d), &m.gamma.kron(&h.comul)]).expect("shapes");
    rep.compare("Hopf compatibility γ∘ρ", &lhs, &rhs, &[dm, d]);

    let lhs = m.gamma.compose(&m.lambda).expect("shapes");
    let rhs = LinMap::chain(&[&h.mul.kron(&m.lambda), &swap(f, d, d).lift(d, dm), &h.comul.kron(&m.gamma)]).expect("shapes");
    rep.compare("Hopf compatibility γ∘λ", &lhs, &rhs, &[d, dm]);
    rep
}

/// `(M; ρ, λ, δ, γ) ↦ (M; ρ, R(λ), δ^co, R(γ)^co)` over `B'(H)`.
pub fn hopf_bimodule_to_braided(h: &Bialgebra, m: &HopfBimodule) -> Result<BraidedModule> {
    let rep = check_hopf_bimodule(h, m);
    if !rep.is_clean() {
        return Err(Error::Axiom(rep.to_string().trim_end().to_string()));
    }
    let (dm, d) = (m.dim(), h.dim());
    let actions = vec![
        m.rho.clone(),
        left_to_right(&m.lambda, dm, d),
        comodule_to_module(&m.delta, dm, d),
        comodule_to_module(&left_to_right_coaction(&m.gamma, dm, d), dm, d),
    ];
    BraidedModule::new(m.space.clone(), Side::Right, actions, build_b_prime(h))
}

pub fn braided_to_hopf_bimodule(m: &BraidedModule) -> Result<HopfBimodule> {
    if m.actions.len() != 4 || m.side != Side::Right {
        return Err(Error::Arity("expected a right module over a rank 4 system".into()));
    }
    let (dm, d) = (m.dim(), m.system.dim(0));
    Ok(HopfBimodule {
        space: m.space.clone(),
        rho: m.actions[0].clone(),
        lambda: right_to_left(&m.actions[1], dm, d),
        delta: module_to_comodule(&m.actions[2], dm, d),
        gamma: right_to_left_coaction(&module_to_comodule(&m.actions[3], dm, d), dm, d),
    })
}

/// The Hopf bimodule `M ⊗ H^n` with peripheral actions (`λ` on `M`, `μ` on
/// the last factor) and diagonal coactions.
pub fn bar_hopf_bimodule(h: &Bialgebra, m: &HopfBimodule, n: usize) -> HopfBimodule {
    if n == 0 {
        return m.clone();
    }
    let f = h.field();
    let d = h.dim();
    let dm = m.dim();
    let dn = d.pow(n as u32);
    let rho = h.mul.lift(dm * d.pow(n as u32 - 1), 1);
    let lambda = m.lambda.lift(1, dn);
    let delta_n = (0..n).fold(LinMap::identity(f, 1), |acc, _| acc.kron(&h.comul));
    let k = n + 1;
    let unshuffle = omega(k).inverse();

    let mut inter = vec![dm, d];
    inter.extend(std::iter::repeat_n(d, 2 * n));
    let regroup = perm_operator(f, &unshuffle, &inter).expect("dims");
    let collect = iterated_product(&h.algebra(), k).lift(dm * dn, 1);
    let delta = LinMap::chain(&[&collect, &regroup, &m.delta.kron(&delta_n)]).expect("shapes");

    let mut inter = vec![d, dm];
    inter.extend(std::iter::repeat_n(d, 2 * n));
    let regroup = perm_operator(f, &unshuffle, &inter).expect("dims");
    let collect = iterated_product(&h.algebra(), k).lift(1, dm * dn);
    let gamma = LinMap::chain(&[&collect, &regroup, &m.gamma.kron(&delta_n)]).expect("shapes");

    let mut parts = vec![m.space.clone()];
    parts.extend(std::iter::repeat_n(h.space.clone(), n));
    HopfBimodule { space: BasedSpace::tensor(&parts), rho, lambda, delta, gamma }
}

/// A left-left Hopf module over `H*`: `λ: H* ⊗ N -> N`, `γ: N -> H* ⊗ N`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualHopfModule {
    pub space: BasedSpace,
    pub lambda: LinMap,
    pub gamma: LinMap,
}

/// `H*` over itself.
pub fn regular_dual_hopf_module(h: &Bialgebra) -> DualHopfModule {
    let dual = dual_bialgebra(h);
    DualHopfModule { space: dual.space.clone(), lambda: dual.mul, gamma: dual.comul }
}

/// `𝐈` with `λ = ν*` and `γ = ν_{H*}`. Not a Hopf module unless `dim H = 1`;
/// used as one-sided coefficients.
pub fn unit_dual_hopf_module(h: &Bialgebra) -> DualHopfModule {
    let dual = dual_bialgebra(h);
    DualHopfModule { space: BasedSpace::unit(), lambda: dual.counit, gamma: dual.unit }
}

/// `𝐈` with `ρ = ε` and `δ = ν`, the mirror of [`unit_dual_hopf_module`].
pub fn unit_hopf_module(h: &Bialgebra) -> HopfModule {
    HopfModule { space: BasedSpace::unit(), rho: h.counit.clone(), delta: h.unit.clone() }
}

/// Module and comodule axioms over `H*`, without the Hopf compatibility.
pub fn check_dual_module_comodule(h: &Bialgebra, n: &DualHopfModule) -> Report {
    let dual = dual_bialgebra(h);
    let dn = n.space.dim();
    let mut rep = check_left_module(&dual.algebra(), &n.lambda, dn);
    rep.merge(check_left_comodule(&dual.coalgebra(), &n.gamma, dn));
    rep
}

pub fn check_dual_hopf_module(h: &Bialgebra, n: &DualHopfModule) -> Report {
    let dual = dual_bialgebra(h);
    let d = h.dim();
    let dn = n.space.dim();
    let mut rep = check_dual_module_comodule(h, n);
    let lhs = n.gamma.compose(&n.lambda).expect("shapes");
    let rhs = LinMap::chain(&[
        &dual.mul.kron(&n.lambda),
        &swap(h.field(), d, d).lift(d, dn),
        &dual.comul.kron(&n.gamma),
    ])
    .expect("shapes");
    rep.compare("Hopf compatibility", &lhs, &rhs, &[d, dn]);
    rep
}

/// `(N, λ, γ) ↦ (N; (ev ⊗ Id)(Id_H ⊗ γ), λ)`, a left module over `B(H)`.
pub fn dual_hopf_module_to_braided(h: &Bialgebra, n: &DualHopfModule) -> Result<BraidedModule> {
    let d = h.dim();
    let dn = n.space.dim();
    let f = h.field();
    let h_action = evaluation_twisted(f, d).kron(&LinMap::identity(f, dn)).compose(&n.gamma.lift(d, 1))?;
    BraidedModule::new(n.space.clone(), Side::Left, vec![h_action, n.lambda.clone()], build_b(h))
}
