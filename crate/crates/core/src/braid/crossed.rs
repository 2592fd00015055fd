//! The braided system `(B, C, A)` behind generalized two-sided crossed
//! products.

use super::{sigma_ass, BraidedSystem};
use crate::error::{Error, Result};
use crate::exactnum::LinMap;
use crate::hopf::{check_uaa, Algebra, Bialgebra};
use crate::report::Report;
use crate::tensorspace::swap;

/// A left `H`-module algebra `A`, a right `H`-module algebra `B` and an
/// `H`-bicomodule algebra `C`.
#[derive(Clone, Debug)]
pub struct CrossedData {
    pub h: Bialgebra,
    pub a: Algebra,
    /// `H ⊗ A -> A`.
    pub lambda: LinMap,
    pub b: Algebra,
    /// `B ⊗ H -> B`.
    pub rho: LinMap,
    pub c: Algebra,
    /// `C -> H ⊗ C`.
    pub delta_l: LinMap,
    /// `C -> C ⊗ H`.
    pub delta_r: LinMap,
}

fn id(a: &Algebra) -> LinMap {
    a.identity()
}

/// Left module algebra axioms for `λ: H ⊗ A -> A`.
pub fn check_left_module_algebra(h: &Bialgebra, a: &Algebra, lambda: &LinMap, name: &str) -> Report {
    let mut r = Report::new();
    let (dh, da) = (h.dim(), a.dim());
    let f = h.field();
    let (ih, ia) = (h.identity(), id(a));
    let lhs = lambda.compose(&h.mul.kron(&ia)).expect("shapes");
    let rhs = lambda.compose(&ih.kron(lambda)).expect("shapes");
    r.compare(&format!("{name}: action is associative"), &lhs, &rhs, &[dh, dh, da]);
    let lhs = lambda.compose(&h.unit.kron(&ia)).expect("shapes");
    r.compare(&format!("{name}: unit acts trivially"), &lhs, &ia, &[da]);
    // λ(h ⊗ ab) = λ(h_(1) ⊗ a) λ(h_(2) ⊗ b)
    let lhs = lambda.compose(&ih.kron(&a.mul)).expect("shapes");
    let rhs = LinMap::chain(&[
        &a.mul,
        &lambda.kron(lambda),
        &ih.kron(&swap(f, dh, da)).kron(&ia),
        &h.comul.kron(&ia).kron(&ia),
    ])
    .expect("shapes");
    r.compare(&format!("{name}: action is multiplicative"), &lhs, &rhs, &[dh, da, da]);
    let lhs = lambda.compose(&ih.kron(&a.unit)).expect("shapes");
    let rhs = a.unit.compose(&h.counit).expect("shapes");
    r.compare(&format!("{name}: action fixes the unit"), &lhs, &rhs, &[dh]);
    r
}

/// Right module algebra axioms for `ρ: B ⊗ H -> B`.
pub fn check_right_module_algebra(h: &Bialgebra, b: &Algebra, rho: &LinMap, name: &str) -> Report {
    let mut r = Report::new();
    let (dh, db) = (h.dim(), b.dim());
    let f = h.field();
    let (ih, ib) = (h.identity(), id(b));
    let lhs = rho.compose(&rho.kron(&ih)).expect("shapes");
    let rhs = rho.compose(&ib.kron(&h.mul)).expect("shapes");
    r.compare(&format!("{name}: action is associative"), &lhs, &rhs, &[db, dh, dh]);
    let lhs = rho.compose(&ib.kron(&h.unit)).expect("shapes");
    r.compare(&format!("{name}: unit acts trivially"), &lhs, &ib, &[db]);
    // ρ(ab ⊗ h) = ρ(a ⊗ h_(1)) ρ(b ⊗ h_(2))
    let lhs = rho.compose(&b.mul.kron(&ih)).expect("shapes");
    let rhs = LinMap::chain(&[
        &b.mul,
        &rho.kron(rho),
        &ib.kron(&swap(f, db, dh)).kron(&ih),
        &ib.kron(&ib).kron(&h.comul),
    ])
    .expect("shapes");
    r.compare(&format!("{name}: action is multiplicative"), &lhs, &rhs, &[db, db, dh]);
    let lhs = rho.compose(&b.unit.kron(&ih)).expect("shapes");
    let rhs = b.unit.compose(&h.counit).expect("shapes");
    r.compare(&format!("{name}: action fixes the unit"), &lhs, &rhs, &[dh]);
    r
}

/// Comodule algebra axioms for `δ_l: C -> H ⊗ C` and `δ_r: C -> C ⊗ H`,
/// and their commutation.
pub fn check_bicomodule_algebra(h: &Bialgebra, c: &Algebra, delta_l: &LinMap, delta_r: &LinMap) -> Report {
    let mut r = Report::new();
    let (dh, dc) = (h.dim(), c.dim());
    let f = h.field();
    let (ih, ic) = (h.identity(), id(c));
    let lhs = h.comul.kron(&ic).compose(delta_l).expect("shapes");
    let rhs = ih.kron(delta_l).compose(delta_l).expect("shapes");
    r.compare("left coaction is coassociative", &lhs, &rhs, &[dc]);
    let lhs = h.counit.kron(&ic).compose(delta_l).expect("shapes");
    r.compare("left coaction is counital", &lhs, &ic, &[dc]);
    let lhs = ic.kron(&h.comul).compose(delta_r).expect("shapes");
    let rhs = delta_r.kron(&ih).compose(delta_r).expect("shapes");
    r.compare("right coaction is coassociative", &lhs, &rhs, &[dc]);
    let lhs = ic.kron(&h.counit).compose(delta_r).expect("shapes");
    r.compare("right coaction is counital", &lhs, &ic, &[dc]);
    let lhs = delta_l.kron(&ih).compose(delta_r).expect("shapes");
    let rhs = ih.kron(delta_r).compose(delta_l).expect("shapes");
    r.compare("coactions commute", &lhs, &rhs, &[dc]);
    // algebra maps
    let lhs = delta_l.compose(&c.mul).expect("shapes");
    let rhs = LinMap::chain(&[&h.mul.kron(&c.mul), &ih.kron(&swap(f, dc, dh)).kron(&ic), &delta_l.kron(delta_l)]).expect("shapes");
    r.compare("left coaction is multiplicative", &lhs, &rhs, &[dc, dc]);
    let lhs = delta_l.compose(&c.unit).expect("shapes");
    r.compare("left coaction is unital", &lhs, &h.unit.kron(&c.unit), &[1]);
    let lhs = delta_r.compose(&c.mul).expect("shapes");
    let rhs = LinMap::chain(&[&c.mul.kron(&h.mul), &ic.kron(&swap(f, dh, dc)).kron(&ih), &delta_r.kron(delta_r)]).expect("shapes");
    r.compare("right coaction is multiplicative", &lhs, &rhs, &[dc, dc]);
    let lhs = delta_r.compose(&c.unit).expect("shapes");
    r.compare("right coaction is unital", &lhs, &c.unit.kron(&h.unit), &[1]);
    r
}

pub fn check_crossed_data(d: &CrossedData) -> Report {
    let mut r = Report::new();
    for (alg, name) in [(&d.a, "A"), (&d.b, "B"), (&d.c, "C")] {
        let mut sub = check_uaa(alg);
        for v in &mut sub.violations {
            v.axiom = format!("{name}: {}", v.axiom);
        }
        r.merge(sub);
    }
    r.merge(check_left_module_algebra(&d.h, &d.a, &d.lambda, "A"));
    r.merge(check_right_module_algebra(&d.h, &d.b, &d.rho, "B"));
    r.merge(check_bicomodule_algebra(&d.h, &d.c, &d.delta_l, &d.delta_r));
    r
}

/// The system `(B, C, A)` with
/// `ξ_{1,2} = (Id_C ⊗ ρ)(τ_{B,C} ⊗ Id_H)(Id_B ⊗ δ_r)`,
/// `ξ_{2,3} = (λ ⊗ Id_C)(Id_H ⊗ τ_{C,A})(δ_l ⊗ Id_A)`, `ξ_{1,3} = τ_{B,A}`,
/// and `σ_Ass` on the diagonal.
pub fn crossed_system(d: &CrossedData) -> Result<BraidedSystem> {
    let r = check_crossed_data(d);
    if !r.is_clean() {
        return Err(Error::Axiom(r.to_string().trim_end().to_string()));
    }
    Ok(crossed_system_unchecked(d))
}

pub fn crossed_system_unchecked(d: &CrossedData) -> BraidedSystem {
    let f = d.h.field();
    let (da, db, dc) = (d.a.dim(), d.b.dim(), d.c.dim());
    let ih = d.h.identity();
    let xi12 = LinMap::chain(&[
        &id(&d.c).kron(&d.rho),
        &swap(f, db, dc).kron(&ih),
        &id(&d.b).kron(&d.delta_r),
    ])
    .expect("shapes");
    let xi23 = LinMap::chain(&[
        &d.lambda.kron(&id(&d.c)),
        &ih.kron(&swap(f, dc, da)),
        &d.delta_l.kron(&id(&d.a)),
    ])
    .expect("shapes");
    let xi13 = swap(f, db, da);
    let algebras = vec![d.b.clone(), d.c.clone(), d.a.clone()];
    BraidedSystem::new(f, vec![d.b.space.clone(), d.c.space.clone(), d.a.space.clone()], |i, j| match (i, j) {
        (i, j) if i == j => sigma_ass(&algebras[i]),
        (0, 1) => xi12.clone(),
        (1, 2) => xi23.clone(),
        _ => xi13.clone(),
    })
    .expect("shapes")
    .with_algebras(algebras)
    .expect("dims")
}

/// The data behind `B(H)` as a crossed system: `H^cop` coacting on itself by
/// `Δ^cop` on both sides, and `H*` as a left and right `H^cop`-module
/// algebra via `λ(h ⊗ l) = ⟨l_(1), h⟩ l_(2)` and `ρ(l ⊗ h) = ⟨l_(2), h⟩ l_(1)`.
pub fn bialgebra_crossed_data(h: &Bialgebra) -> CrossedData {
    use crate::hopf::{dual_bialgebra, twist};
    use crate::tensorspace::{evaluation, evaluation_twisted};
    let d = h.dim();
    let f = h.field();
    let plain = h.with_antipode(None);
    let cop = twist(&plain, false, true);
    let dual = dual_bialgebra(&plain);
    let ih = h.identity();
    let lambda = evaluation_twisted(f, d).kron(&ih).compose(&ih.kron(&dual.comul)).expect("shapes");
    let rho = ih.kron(&evaluation(f, d)).compose(&dual.comul.kron(&ih)).expect("shapes");
    CrossedData {
        h: cop.clone(),
        a: dual.algebra(),
        lambda,
        b: dual.algebra(),
        rho,
        c: cop.algebra(),
        delta_l: cop.comul.clone(),
        delta_r: cop.comul.clone(),
    }
}
