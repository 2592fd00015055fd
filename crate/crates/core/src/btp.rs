//! Braided tensor products of algebras.
//!
//! For a braided system of UAAs `(V_1, .., V_r)` the product lives on the
//! reversed word `V_r ⊗ .. ⊗ V_1`. Two copies of that word are merged by
//! pulling each factor of the right copy leftwards through the braiding, and
//! then multiplying neighbours.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{
    build_b, build_b_prime, crossed_system, sigma_ass, sigma_ass_r, BraidedSystem, CrossedData,
};
use crate::error::{Error, Result};
use crate::exactnum::{Field, LinMap, Scalar};
use crate::hopf::{group_algebra, trivial_bialgebra, Algebra, Bialgebra};
use crate::perm::Perm;
use crate::report::Report;
use crate::tensorspace::{embed_at, swap, BasedSpace};

/// How a product was obtained, kept so that reports can be reproduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub construction: String,
    pub theta: Option<Perm>,
}

#[derive(Clone, Debug)]
pub struct BraidedTensorAlgebra {
    pub source: BraidedSystem,
    pub algebra: Algebra,
    pub provenance: Provenance,
}

/// Where `σ_{i,i}` must come from.
fn check_diagonal(s: &BraidedSystem) -> Result<()> {
    let algs = s.algebras().ok_or_else(|| Error::Invalid("the system carries no algebras".into()))?;
    for (i, a) in algs.iter().enumerate() {
        let d = s.sigma(i, i);
        if *d != sigma_ass(a) && *d != sigma_ass_r(a) {
            return Err(Error::Invalid(format!(
                "σ_({},{}) is not an associativity braiding of the component algebra",
                i + 1,
                i + 1
            )));
        }
    }
    Ok(())
}

/// Multiplication of the braided tensor product, evaluated from the system
/// without any checks.
pub fn product_multiplication(s: &BraidedSystem) -> Result<LinMap> {
    let algs = s.algebras().ok_or_else(|| Error::Invalid("the system carries no algebras".into()))?;
    let r = s.rank();
    let dims_of = |word: &[usize]| word.iter().map(|&c| s.dim(c)).collect::<Vec<_>>();
    // colour word, 0-based component indices: r-1 .. 0, r-1 .. 0
    let mut word: Vec<usize> = (0..r).rev().chain((0..r).rev()).collect();
    let total: usize = s.dims().iter().product::<usize>().pow(2);
    let mut acc = LinMap::identity(s.field(), total);
    // the right copy of component k sits just after the merged block
    for k in (1..r).rev() {
        let mut p = word.iter().rposition(|&c| c == k).expect("present");
        for _ in 0..k {
            let j = word[p - 1];
            debug_assert!(j < k);
            let step = embed_at(s.sigma(j, k), p, 2, &dims_of(&word))?;
            acc = step.compose(&acc)?;
            word.swap(p - 1, p);
            p -= 1;
        }
    }
    let mut muls = LinMap::identity(s.field(), 1);
    for k in (0..r).rev() {
        muls = muls.kron(&algs[k].mul);
    }
    muls.compose(&acc)
}

/// `ν_r ⊗ .. ⊗ ν_1`.
pub fn product_unit(s: &BraidedSystem) -> Result<LinMap> {
    let algs = s.algebras().ok_or_else(|| Error::Invalid("the system carries no algebras".into()))?;
    Ok(algs.iter().rev().fold(LinMap::identity(s.field(), 1), |acc, a| acc.kron(&a.unit)))
}

fn product_space(s: &BraidedSystem) -> BasedSpace {
    let rev: Vec<BasedSpace> = s.components().iter().rev().cloned().collect();
    BasedSpace::tensor(&rev)
}

/// The braided tensor product. Refuses systems failing the YBE, unit
/// naturality, or whose diagonal is not an associativity braiding.
pub fn braided_tensor_product(s: &BraidedSystem, construction: &str) -> Result<BraidedTensorAlgebra> {
    check_diagonal(s)?;
    let ybe = s.check_ybe();
    if !ybe.is_clean() {
        return Err(Error::Axiom(format!("the system is not braided: {}", ybe.to_string().trim_end())));
    }
    let nat = s.check_unit_naturality();
    if !nat.is_clean() {
        return Err(Error::Axiom(format!("braiding not natural for units: {}", nat.to_string().trim_end())));
    }
    Ok(braided_tensor_product_unchecked(s, construction))
}

pub fn braided_tensor_product_unchecked(s: &BraidedSystem, construction: &str) -> BraidedTensorAlgebra {
    let algebra = Algebra {
        space: product_space(s),
        mul: product_multiplication(s).expect("shapes"),
        unit: product_unit(s).expect("shapes"),
    };
    BraidedTensorAlgebra {
        source: s.clone(),
        algebra,
        provenance: Provenance { construction: construction.into(), theta: None },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssocMode {
    Exhaustive,
    Sample { count: usize, seed: u64 },
}

/// Associativity `μ(μ ⊗ id) = μ(id ⊗ μ)`. The exhaustive mode compares the
/// two maps slice by slice in the first argument: for each basis element
/// `a`, `L_a ∘ μ` against `μ ∘ (L_a ⊗ id)`. Also checks the unit laws.
pub fn check_associativity(a: &Algebra, mode: AssocMode) -> Report {
    let mut rep = Report::new();
    let d = a.dim();
    let f = a.field();
    match mode {
        AssocMode::Exhaustive => {
            let id = a.identity();
            for x in 0..d {
                let left_mult = a.mul.column_block(x * d, d);
                let lhs = a.mul.compose(&left_mult.kron(&id)).expect("shapes");
                let rhs = left_mult.compose(&a.mul).expect("shapes");
                if let Some(col) = lhs.first_difference(&rhs) {
                    rep.push("associativity", vec![x, col / d, col % d], "");
                    break;
                }
            }
        }
        AssocMode::Sample { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                let (x, y, z) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
                let xy = a.product(x, y);
                let lhs = a.mul.apply(&xy.iter().map(|(k, v)| (k * d + z, v.clone())).collect::<Vec<_>>());
                let yz = a.product(y, z);
                let rhs = a.mul.apply(&yz.iter().map(|(k, v)| (x * d + k, v.clone())).collect::<Vec<_>>());
                if lhs != rhs {
                    rep.push("associativity", vec![x, y, z], "");
                    break;
                }
            }
        }
    }
    let id = LinMap::identity(f, d);
    let left = a.mul.compose(&a.unit.kron(&id)).expect("shapes");
    rep.compare("left unit", &left, &id, &[d]);
    let right = a.mul.compose(&id.kron(&a.unit)).expect("shapes");
    rep.compare("right unit", &right, &id, &[d]);
    rep
}

/// `φ(ab) = φ(a)φ(b)` on all basis pairs and `φ(1) = 1`.
pub fn check_algebra_map(phi: &LinMap, from: &Algebra, to: &Algebra) -> Report {
    let mut rep = Report::new();
    let d = from.dim();
    let lhs = phi.compose(&from.mul).expect("shapes");
    let rhs = to.mul.compose(&phi.kron(phi)).expect("shapes");
    rep.compare("multiplicative", &lhs, &rhs, &[d, d]);
    let lhs = phi.compose(&from.unit).expect("shapes");
    rep.compare("unital", &lhs, &to.unit, &[1]);
    rep
}

/// The algebra isomorphism `V⃖ -> θ·V⃖` together with the product of the
/// permuted system. Built along a reduced word of `θ`, rightmost letter
/// first; each letter `s_p` applies the inverse braiding of the current pair
/// `(p, p+1)`, which sits at product positions `r-p, r-p+1`.
pub fn factor_permutation_iso(t: &BraidedTensorAlgebra, theta: &Perm) -> Result<(BraidedTensorAlgebra, LinMap)> {
    let s = &t.source;
    let r = s.rank();
    if theta.len() != r {
        return Err(Error::Arity(format!("permutation of {} letters on a rank {r} system", theta.len())));
    }
    let mut cur = s.clone();
    let mut iso = LinMap::identity(s.field(), t.algebra.dim());
    for &p in theta.reduced_word().iter().rev() {
        let step = Perm::simple(r, p);
        let inv = cur.crossing(p, p - 1)?;
        let rev_dims: Vec<usize> = cur.dims().into_iter().rev().collect();
        iso = embed_at(&inv, r - p, 2, &rev_dims)?.compose(&iso)?;
        cur = cur.permute(&step)?;
    }
    let mut target = braided_tensor_product_unchecked(&cur, &t.provenance.construction);
    target.provenance.theta = Some(match &t.provenance.theta {
        Some(old) => theta.then_after(old),
        None => theta.clone(),
    });
    Ok((target, iso))
}

/// `V'^op ⊗ V` from the system `(V, V')` with `σ_{1,2} = τ`.
pub fn bimodule_system(v: &Algebra, v2: &Algebra) -> BraidedSystem {
    let f = v.field();
    let op = v2.opposite();
    let algs = vec![v.clone(), op];
    BraidedSystem::new(f, vec![v.space.clone(), algs[1].space.clone()], |i, j| match (i, j) {
        (0, 1) => swap(f, v.dim(), v2.dim()),
        (i, _) => sigma_ass(&algs[i]),
    })
    .expect("shapes")
    .with_algebras(algs)
    .expect("dims")
}

pub fn enveloping_algebra(a: &Algebra) -> Result<BraidedTensorAlgebra> {
    braided_tensor_product(&bimodule_system(a, a), "enveloping")
}

/// `H* ⊗_{σ_bi} H`.
pub fn heisenberg(h: &Bialgebra) -> Result<BraidedTensorAlgebra> {
    braided_tensor_product(&build_b(h), "heisenberg")
}

/// `(H^cop)* ⊗ H* ⊗ H^op ⊗ H`.
pub fn w_algebra(h: &Bialgebra) -> Result<BraidedTensorAlgebra> {
    braided_tensor_product(&build_b_prime(h), "W")
}

/// The member `θ·W(H)` of the 24-algebra family and the isomorphism from
/// `W(H)`.
pub fn theta_w(h: &Bialgebra, theta: &Perm) -> Result<(BraidedTensorAlgebra, LinMap)> {
    let w = w_algebra(h)?;
    factor_permutation_iso(&w, theta)
}

/// Named members of the family, as cycle notation on `S_4`.
pub fn named_member(name: &str) -> Option<Perm> {
    let s = match name {
        "X" => "(1,4)(2,3)",
        "Y" => "(1,2,3,4)",
        "Z" => "(3,4)",
        _ => return None,
    };
    Some(Perm::parse(s, 4).expect("valid"))
}

pub fn two_sided_crossed(data: &CrossedData) -> Result<BraidedTensorAlgebra> {
    braided_tensor_product(&crossed_system(data)?, "two-sided")
}

/// `A ⊗ H` for a left `H`-module algebra `A`, braided by
/// `h ⊗ a ↦ λ(h_(1) ⊗ a) ⊗ h_(2)`.
pub fn smash_left(a: &Algebra, h: &Bialgebra, lambda: &LinMap) -> Result<BraidedTensorAlgebra> {
    let data = CrossedData {
        h: h.clone(),
        a: a.clone(),
        lambda: lambda.clone(),
        b: ground_algebra(h.field()),
        rho: h.counit.clone(),
        c: h.algebra(),
        delta_l: h.comul.clone(),
        delta_r: h.comul.clone(),
    };
    let sys = crossed_system(&data)?.subsystem(&[1, 2]);
    braided_tensor_product(&sys, "smash-left")
}

/// `H ⊗ B` for a right `H`-module algebra `B`.
pub fn smash_right(h: &Bialgebra, b: &Algebra, rho: &LinMap) -> Result<BraidedTensorAlgebra> {
    let data = CrossedData {
        h: h.clone(),
        a: ground_algebra(h.field()),
        lambda: h.counit.clone(),
        b: b.clone(),
        rho: rho.clone(),
        c: h.algebra(),
        delta_l: h.comul.clone(),
        delta_r: h.comul.clone(),
    };
    let sys = crossed_system(&data)?.subsystem(&[0, 1]);
    braided_tensor_product(&sys, "smash-right")
}

pub fn ground_algebra(field: Field) -> Algebra {
    trivial_bialgebra(field).algebra()
}

/// `k[Z/2]` acting on itself through the automorphism `g ↦ -g`, as a left
/// action `H ⊗ A -> A` and a right action `B ⊗ H -> B`.
pub fn sign_action(field: Field) -> (LinMap, LinMap) {
    let one = field.one();
    let m1 = field.from_i64(-1);
    // basis of H⊗A: (h, a) -> 2h + a
    let entries = vec![(0, 0, one.clone()), (1, 1, one.clone()), (0, 2, one.clone()), (1, 3, m1)];
    let lambda = LinMap::from_triplets(field, 2, 4, entries).expect("valid");
    let rho = lambda.compose(&swap(field, 2, 2)).expect("square");
    (lambda, rho)
}

/// The two-sided crossed product data with `H = A = B = C = k[Z/2]`: sign
/// actions on `A` and `B`, regular coactions on `C`.
pub fn group_crossed_data(field: Field) -> CrossedData {
    let h = group_algebra(field, 2);
    let (lambda, rho) = sign_action(field);
    CrossedData {
        h: h.clone(),
        a: h.algebra(),
        lambda,
        b: h.algebra(),
        rho,
        c: h.algebra(),
        delta_l: h.comul.clone(),
        delta_r: h.comul.clone(),
    }
}

/// Value of a product of two basis elements, for spot checks.
pub fn basis_product(a: &Algebra, x: usize, y: usize) -> Vec<(usize, Scalar)> {
    a.product(x, y)
}

#[cfg(test)]
mod tests;
