use crate::bmod::{BraidedModule, OrderedSum, Side};
use crate::braid::BraidedSystem;
use crate::error::{Error, Result};
use crate::exactnum::LinMap;
use crate::hopf::{dual_bialgebra, Algebra, Bialgebra};
use crate::perm::Perm;
use crate::report::Report;
use crate::shuffle::qcosh;
use crate::tensorspace::{embed_at, perm_operator, BasedSpace};

use super::GradedComplex;

/// `⊕_w M ⊗ V_w ⊗ N` over ordered words of length `n` in all colours.
pub fn braided_layout(s: &BraidedSystem, n: usize, dm: usize, dn: usize) -> OrderedSum {
    OrderedSum::new(s, 0, s.rank(), n, dm, dn)
}

fn check_side(s: &BraidedSystem, m: &BraidedModule, side: Side) -> Result<()> {
    if m.side != side {
        return Err(Error::Invalid(format!("expected a {side:?} module").to_lowercase()));
    }
    if m.system.rank() != s.rank() || (0..s.rank()).any(|i| m.system.dim(i) != s.dim(i)) {
        return Err(Error::Arity("the module must live over the whole system".into()));
    }
    Ok(())
}

/// `(^ρd_n, d^λ_n)` on `M ⊗ T_n ⊗ N -> M ⊗ T_{n-1} ⊗ N`, built from the
/// coshuffles `(1, n-1)` and `(n-1, 1)` of the negated braiding.
pub fn braided_differential(
    s: &BraidedSystem,
    right: &BraidedModule,
    left: &BraidedModule,
    n: usize,
) -> Result<(LinMap, LinMap)> {
    if n == 0 {
        return Err(Error::Arity("differentials start in degree 1".into()));
    }
    check_side(s, right, Side::Right)?;
    check_side(s, left, Side::Left)?;
    let f = s.field();
    let (dm, dn) = (right.dim(), left.dim());
    let neg = s.negate();
    let src = braided_layout(s, n, dm, dn);
    let dst = braided_layout(s, n - 1, dm, dn);
    let mut rho_trip = Vec::new();
    let mut lambda_trip = Vec::new();
    let sign = f.sign((n - 1) % 2 == 1);
    let word_dim = |w: &[usize]| w.iter().map(|&c| s.dim(c)).product::<usize>();

    for (b, w) in src.words.iter().enumerate() {
        let off = src.offsets[b];
        for term in qcosh(&neg, &[1, n - 1], w)? {
            let (c, rest) = (term.blocks[0][0], &term.blocks[1]);
            let local = right
                .action(c)
                .lift(1, word_dim(rest) * dn)
                .compose(&term.map.lift(dm, dn))?;
            let row0 = dst.offsets[dst.block(rest).expect("subwords stay ordered")];
            rho_trip.extend(local.triplets().map(|(r, col, v)| (row0 + r, off + col, v.clone())));
        }
        for term in qcosh(&neg, &[n - 1, 1], w)? {
            let (rest, c) = (&term.blocks[0], term.blocks[1][0]);
            let local = left
                .action(c)
                .lift(dm * word_dim(rest), 1)
                .compose(&term.map.lift(dm, dn))?
                .scale(&sign);
            let row0 = dst.offsets[dst.block(rest).expect("subwords stay ordered")];
            lambda_trip.extend(local.triplets().map(|(r, col, v)| (row0 + r, off + col, v.clone())));
        }
    }
    Ok((
        LinMap::from_triplets(f, dst.total, src.total, rho_trip)?,
        LinMap::from_triplets(f, dst.total, src.total, lambda_trip)?,
    ))
}

/// `d∘d = 0`, `d'∘d' = 0` and `d∘d' + d'∘d = 0` for degrees up to `max_degree`.
pub fn check_bidifferential(
    s: &BraidedSystem,
    right: &BraidedModule,
    left: &BraidedModule,
    max_degree: usize,
) -> Result<Report> {
    let mut rep = Report::new();
    let mut prev: Option<(LinMap, LinMap)> = None;
    for n in 1..=max_degree {
        let (d, dp) = braided_differential(s, right, left, n)?;
        if let Some((d0, dp0)) = &prev {
            let dim = [d.domain_dim()];
            rep.expect_zero(&format!("ρd∘ρd = 0 at degree {n}"), &d0.compose(&d)?, &dim);
            rep.expect_zero(&format!("dλ∘dλ = 0 at degree {n}"), &dp0.compose(&dp)?, &dim);
            let mixed = d0.compose(&dp)?.add(&dp0.compose(&d)?)?;
            rep.expect_zero(&format!("ρd∘dλ + dλ∘ρd = 0 at degree {n}"), &mixed, &dim);
        }
        prev = Some((d, dp));
    }
    Ok(rep)
}

/// `Σ_{i=1}^{n-1} (-1)^i μ^i` on `A^{⊗n}`; the zero map for `n <= 1`.
pub fn bar_operator(a: &Algebra, n: usize) -> LinMap {
    let f = a.field();
    let d = a.dim();
    let dims = vec![d; n];
    let mut acc = LinMap::zero(f, d.pow(n.saturating_sub(1) as u32), d.pow(n as u32));
    for i in 1..n {
        let term = embed_at(&a.mul, i, 2, &dims).expect("dims").scale(&f.sign(i % 2 == 1));
        acc = acc.add(&term).expect("shapes");
    }
    acc
}

fn powers(label: &str, m: &BasedSpace, v: &BasedSpace, max: usize) -> Vec<BasedSpace> {
    (0..=max)
        .map(|n| {
            let mut parts = vec![m.clone()];
            parts.extend(std::iter::repeat_n(v.clone(), n));
            BasedSpace::tensor(&parts).relabel(format!("{label}{n}"))
        })
        .collect()
}

/// The bar resolution tensored with a right module: `d_n = ρ¹ + Σ (-1)^i μ^i`
/// on `M ⊗ A^{⊗n}`, degrees `0..=max_degree`.
pub fn bar_complex(a: &Algebra, module: &BasedSpace, rho: &LinMap, max_degree: usize) -> Result<GradedComplex> {
    let (d, dm) = (a.dim(), module.dim());
    if rho.domain_dim() != dm * d || rho.codomain_dim() != dm {
        return Err(Error::Shape(format!("action is {}x{}", rho.codomain_dim(), rho.domain_dim())));
    }
    let mut diffs = Vec::new();
    for n in 1..=max_degree {
        let rest = d.pow(n as u32 - 1);
        diffs.push(rho.lift(1, rest).add(&bar_operator(a, n).lift(dm, 1))?);
    }
    GradedComplex::new("bar", powers("M⊗A^", module, &a.space, max_degree), diffs)
}

/// `Σ (-1)^i μ^i` for the product of `H*` on `(H*)^{⊗n}`, the cobar
/// differential of `H` in dual coordinates, as a complex in degrees `0..=max`.
pub fn cobar_dual(h: &Bialgebra, max_degree: usize) -> GradedComplex {
    let dual = dual_bialgebra(h).algebra();
    let diffs = (1..=max_degree).map(|n| bar_operator(&dual, n)).collect();
    let spaces = powers("H*^", &BasedSpace::unit(), &dual.space, max_degree);
    GradedComplex::new("cobar", spaces, diffs).expect("shapes")
}

/// `b = ρ¹ + Σ (-1)^i μ^i + (-1)^n λ ∘ (a_n to the front)` on `M ⊗ A^{⊗n}`.
pub fn hochschild_complex(
    a: &Algebra,
    module: &BasedSpace,
    rho: &LinMap,
    lambda: &LinMap,
    max_degree: usize,
) -> Result<GradedComplex> {
    let f = a.field();
    let (d, dm) = (a.dim(), module.dim());
    if lambda.domain_dim() != dm * d || lambda.codomain_dim() != dm {
        return Err(Error::Shape(format!("left action is {}x{}", lambda.codomain_dim(), lambda.domain_dim())));
    }
    let bar = bar_complex(a, module, rho, max_degree)?;
    let mut diffs = Vec::new();
    for (k, dbar) in bar.differentials.iter().enumerate() {
        let n = k + 1;
        let mut dims = vec![dm];
        dims.extend(std::iter::repeat_n(d, n));
        let mut img: Vec<usize> = (1..=n).collect();
        img.push(0);
        let rotate = perm_operator(f, &Perm::new(img)?, &dims)?;
        let wrap = lambda.lift(1, d.pow(n as u32 - 1)).compose(&rotate)?.scale(&f.sign(n % 2 == 1));
        diffs.push(dbar.add(&wrap)?);
    }
    GradedComplex::new("hochschild", bar.spaces, diffs)
}
