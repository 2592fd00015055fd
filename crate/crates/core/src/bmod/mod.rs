//! Braided modules over braided systems, and their translations into
//! familiar module categories.

mod adjoint;
mod hopf;

pub(crate) use adjoint::{left_adjoint_block, right_adjoint_block};
pub use adjoint::{
    adjoint_module, adjoint_module_left, bialgebra_adjoint_operators, crossed_power_bimodule, hstar_bimodule, omega,
    AdjointOperators, OrderedSum,
};
pub use hopf::{
    bar_hopf_bimodule, braided_to_hopf_bimodule, braided_to_hopf_module, check_dual_hopf_module,
    check_dual_module_comodule, check_hopf_bimodule, check_hopf_module, dual_hopf_module_to_braided,
    hopf_bimodule_to_braided, hopf_module_to_braided, regular_dual_hopf_module, regular_hopf_bimodule,
    regular_hopf_module, unit_dual_hopf_module, unit_hopf_module, DualHopfModule, HopfBimodule, HopfModule,
};

use crate::braid::BraidedSystem;
use crate::btp::BraidedTensorAlgebra;
use crate::error::{Error, Result};
use crate::exactnum::{Field, LinMap};
use crate::hopf::{Algebra, Coalgebra};
use crate::perm::Perm;
use crate::report::Report;
use crate::tensorspace::{coevaluation, evaluation_twisted, swap, BasedSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A family of actions `M ⊗ V_i -> M` (right) or `V_i ⊗ M -> M` (left).
#[derive(Clone, Debug)]
pub struct BraidedModule {
    pub space: BasedSpace,
    pub side: Side,
    pub actions: Vec<LinMap>,
    pub system: BraidedSystem,
}

impl BraidedModule {
    pub fn new(space: BasedSpace, side: Side, actions: Vec<LinMap>, system: BraidedSystem) -> Result<BraidedModule> {
        if actions.len() != system.rank() {
            return Err(Error::Arity(format!("{} actions for a rank {} system", actions.len(), system.rank())));
        }
        let m = space.dim();
        for (i, a) in actions.iter().enumerate() {
            if a.codomain_dim() != m || a.domain_dim() != m * system.dim(i) {
                return Err(Error::Shape(format!(
                    "action {} is {}x{}, expected {}x{}",
                    i + 1,
                    a.codomain_dim(),
                    a.domain_dim(),
                    m,
                    m * system.dim(i)
                )));
            }
            if a.field() != system.field() {
                return Err(Error::FieldMismatch(format!("action {}", i + 1)));
            }
        }
        Ok(BraidedModule { space, side, actions, system })
    }

    /// The unit object with the given family of characters `V_i -> k`.
    pub fn character(system: &BraidedSystem, chars: Vec<LinMap>) -> Result<BraidedModule> {
        BraidedModule::new(BasedSpace::unit(), Side::Right, chars, system.clone())
    }

    /// `ε` on component `i`, zero elsewhere.
    pub fn single_character(system: &BraidedSystem, i: usize, eps: &LinMap) -> Result<BraidedModule> {
        let f = system.field();
        let chars = (0..system.rank())
            .map(|j| if j == i { eps.clone() } else { LinMap::zero(f, 1, system.dim(j)) })
            .collect();
        BraidedModule::character(system, chars)
    }

    pub fn field(&self) -> Field {
        self.system.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn action(&self, i: usize) -> &LinMap {
        &self.actions[i]
    }

    /// The unit object with zero actions: coefficients on one side only.
    pub fn unit_object(system: &BraidedSystem, side: Side) -> BraidedModule {
        let f = system.field();
        let actions = (0..system.rank()).map(|j| LinMap::zero(f, 1, system.dim(j))).collect();
        BraidedModule { space: BasedSpace::unit(), side, actions, system: system.clone() }
    }

    /// The same space over the subsystem on `indices`.
    pub fn restrict(&self, indices: &[usize]) -> BraidedModule {
        BraidedModule {
            space: self.space.clone(),
            side: self.side,
            actions: indices.iter().map(|&i| self.actions[i].clone()).collect(),
            system: self.system.subsystem(indices),
        }
    }
}

/// The compatibility of every pair `i <= j`:
/// right: `ρ_j (ρ_i ⊗ Id) = ρ_i (ρ_j ⊗ Id)(Id_M ⊗ σ_{i,j})` on `M ⊗ V_i ⊗ V_j`;
/// left: `λ_i (Id ⊗ λ_j) = λ_j (Id ⊗ λ_i)(σ_{i,j} ⊗ Id_M)` on `V_i ⊗ V_j ⊗ M`.
pub fn check_braided_module(m: &BraidedModule) -> Report {
    let mut rep = Report::new();
    let s = &m.system;
    let dm = m.dim();
    for i in 0..s.rank() {
        for j in i..s.rank() {
            let (di, dj) = (s.dim(i), s.dim(j));
            let (ri, rj) = (&m.actions[i], &m.actions[j]);
            let sigma = s.sigma(i, j);
            let name = format!("module compatibility ({},{})", i + 1, j + 1);
            match m.side {
                Side::Right => {
                    let lhs = rj.compose(&ri.lift(1, dj)).expect("shapes");
                    let rhs = LinMap::chain(&[ri, &rj.lift(1, di), &sigma.lift(dm, 1)]).expect("shapes");
                    rep.compare(&name, &lhs, &rhs, &[dm, di, dj]);
                }
                Side::Left => {
                    let lhs = ri.compose(&rj.lift(di, 1)).expect("shapes");
                    let rhs = LinMap::chain(&[rj, &ri.lift(dj, 1), &sigma.lift(1, dm)]).expect("shapes");
                    rep.compare(&name, &lhs, &rhs, &[di, dj, dm]);
                }
            }
        }
    }
    rep
}

/// Units of a pointed system act by identity.
pub fn check_module_units(m: &BraidedModule) -> Report {
    let mut rep = Report::new();
    let Some(units) = m.system.units() else {
        return rep;
    };
    let dm = m.dim();
    let id = LinMap::identity(m.field(), dm);
    for (i, nu) in units.iter().enumerate() {
        let embed = match m.side {
            Side::Right => id.kron(nu),
            Side::Left => nu.kron(&id),
        };
        let lhs = m.actions[i].compose(&embed).expect("shapes");
        rep.compare(&format!("unit {} acts by identity", i + 1), &lhs, &id, &[dm]);
    }
    rep
}

/// Right module axioms for `ρ: M ⊗ A -> M`.
pub fn check_right_module(a: &Algebra, rho: &LinMap, dm: usize) -> Report {
    let mut rep = Report::new();
    let da = a.dim();
    let lhs = rho.compose(&rho.lift(1, da)).expect("shapes");
    let rhs = rho.compose(&a.mul.lift(dm, 1)).expect("shapes");
    rep.compare("right action is associative", &lhs, &rhs, &[dm, da, da]);
    let id = LinMap::identity(a.field(), dm);
    let lhs = rho.compose(&id.kron(&a.unit)).expect("shapes");
    rep.compare("right action is unital", &lhs, &id, &[dm]);
    rep
}

/// Left module axioms for `λ: A ⊗ M -> M`.
pub fn check_left_module(a: &Algebra, lambda: &LinMap, dm: usize) -> Report {
    let mut rep = Report::new();
    let da = a.dim();
    let lhs = lambda.compose(&lambda.lift(da, 1)).expect("shapes");
    let rhs = lambda.compose(&a.mul.lift(1, dm)).expect("shapes");
    rep.compare("left action is associative", &lhs, &rhs, &[da, da, dm]);
    let id = LinMap::identity(a.field(), dm);
    let lhs = lambda.compose(&a.unit.kron(&id)).expect("shapes");
    rep.compare("left action is unital", &lhs, &id, &[dm]);
    rep
}

/// Right comodule axioms for `δ: M -> M ⊗ C`.
pub fn check_right_comodule(c: &Coalgebra, delta: &LinMap, dm: usize) -> Report {
    let mut rep = Report::new();
    let dc = c.dim();
    let lhs = delta.lift(1, dc).compose(delta).expect("shapes");
    let rhs = c.comul.lift(dm, 1).compose(delta).expect("shapes");
    rep.compare("right coaction is coassociative", &lhs, &rhs, &[dm]);
    let id = LinMap::identity(c.field(), dm);
    let lhs = id.kron(&c.counit).compose(delta).expect("shapes");
    rep.compare("right coaction is counital", &lhs, &id, &[dm]);
    rep
}

/// Left comodule axioms for `γ: M -> C ⊗ M`.
pub fn check_left_comodule(c: &Coalgebra, gamma: &LinMap, dm: usize) -> Report {
    let mut rep = Report::new();
    let dc = c.dim();
    let lhs = gamma.lift(dc, 1).compose(gamma).expect("shapes");
    let rhs = c.comul.lift(1, dm).compose(gamma).expect("shapes");
    rep.compare("left coaction is coassociative", &lhs, &rhs, &[dm]);
    let id = LinMap::identity(c.field(), dm);
    let lhs = c.counit.kron(&id).compose(gamma).expect("shapes");
    rep.compare("left coaction is counital", &lhs, &id, &[dm]);
    rep
}

/// `λ ↦ λ ∘ c_{M,V}`: a left `V`-action as a right `V^op`-action.
pub fn left_to_right(lambda: &LinMap, dm: usize, dv: usize) -> LinMap {
    lambda.compose(&swap(lambda.field(), dm, dv)).expect("shapes")
}

/// `ρ ↦ ρ ∘ c_{M,V}⁻¹`.
pub fn right_to_left(rho: &LinMap, dm: usize, dv: usize) -> LinMap {
    rho.compose(&swap(rho.field(), dv, dm)).expect("shapes")
}

/// `δ ↦ δ^co = (Id_M ⊗ ev)(δ ⊗ Id_{V*})`, a right comodule over `V` as a
/// right module over `V*`.
pub fn comodule_to_module(delta: &LinMap, dm: usize, dv: usize) -> LinMap {
    let f = delta.field();
    LinMap::identity(f, dm).kron(&evaluation_twisted(f, dv)).compose(&delta.lift(1, dv)).expect("shapes")
}

/// `ρ ↦ ρ^co = (ρ ⊗ Id_V)(Id_M ⊗ coev)`.
pub fn module_to_comodule(rho: &LinMap, dm: usize, dv: usize) -> LinMap {
    let f = rho.field();
    rho.lift(1, dv).compose(&LinMap::identity(f, dm).kron(&coevaluation(f, dv))).expect("shapes")
}

/// A left coaction `M -> V ⊗ M` as a right one `M -> M ⊗ V`.
pub fn left_to_right_coaction(gamma: &LinMap, dm: usize, dv: usize) -> LinMap {
    swap(gamma.field(), dv, dm).compose(gamma).expect("shapes")
}

pub fn right_to_left_coaction(delta: &LinMap, dm: usize, dv: usize) -> LinMap {
    swap(delta.field(), dm, dv).compose(delta).expect("shapes")
}

/// `ρ = ρ_1 (ρ_2 ⊗ Id) .. (ρ_r ⊗ Id ⊗ .. ⊗ Id)` on `M ⊗ V_r ⊗ .. ⊗ V_1`.
pub fn braided_to_btp_module(m: &BraidedModule) -> Result<LinMap> {
    if m.side != Side::Right {
        return Err(Error::Invalid("only right modules translate to product modules".into()));
    }
    let s = &m.system;
    let r = s.rank();
    let mut total = m.actions[0].clone();
    for k in 1..r {
        let inner: usize = (0..k).map(|j| s.dim(j)).product();
        total = total.compose(&m.actions[k].lift(1, inner)).expect("shapes");
    }
    Ok(total)
}

/// `ι_j: V_j -> V_r ⊗ .. ⊗ V_1`, units in all other slots.
pub fn product_inclusion(s: &BraidedSystem, j: usize) -> Result<LinMap> {
    let units = s.units().ok_or_else(|| Error::Invalid("the system carries no units".into()))?;
    let f = s.field();
    let mut acc = LinMap::identity(f, 1);
    for k in (0..s.rank()).rev() {
        let piece = if k == j { LinMap::identity(f, s.dim(k)) } else { units[k].clone() };
        acc = acc.kron(&piece);
    }
    Ok(acc)
}

/// `ρ_j = ρ ∘ (Id_M ⊗ ι_j)`.
pub fn btp_to_braided(t: &BraidedTensorAlgebra, space: BasedSpace, rho: &LinMap) -> Result<BraidedModule> {
    let s = &t.source;
    let dm = space.dim();
    let actions = (0..s.rank())
        .map(|j| rho.compose(&LinMap::identity(s.field(), dm).kron(&product_inclusion(s, j)?)))
        .collect::<Result<Vec<_>>>()?;
    BraidedModule::new(space, Side::Right, actions, s.clone())
}

/// The same actions over `θ·S`: new position `a` acts by old `ρ_{θ⁻¹(a)}`.
pub fn transport_module(m: &BraidedModule, theta: &Perm) -> Result<BraidedModule> {
    let system = m.system.permute(theta)?;
    let inv = theta.inverse();
    let actions = (0..theta.len()).map(|a| m.actions[inv.apply(a)].clone()).collect();
    BraidedModule::new(m.space.clone(), m.side, actions, system)
}
