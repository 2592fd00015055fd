use std::collections::BTreeMap;

use crate::bmod::{
    bialgebra_adjoint_operators, check_braided_module, check_dual_hopf_module, dual_hopf_module_to_braided,
    hopf_module_to_braided, left_adjoint_block, right_adjoint_block, BraidedModule, DualHopfModule, HopfModule, Side,
};
use crate::braid::{build_b, BraidedSystem};
use crate::error::{Error, Result};
use crate::exactnum::{Field, LinMap};
use crate::hopf::{dual_bialgebra, Bialgebra};
use crate::report::Report;
use crate::tensorspace::BasedSpace;

use super::{bar_operator, Bicomplex};

/// The pieces of the bialgebra bicomplexes at one bidegree `(n, m)`; each is
/// `None` where its acting factor is absent.
#[derive(Clone, Debug)]
pub struct BialgebraOperators {
    /// Products of neighbouring `H` factors, `(n,m) -> (n-1,m)`.
    pub bar: Option<LinMap>,
    /// Products of neighbouring `H*` factors, `(n,m) -> (n,m-1)`.
    pub cobar: Option<LinMap>,
    /// The last `H` acts on what stands to its right.
    pub h_left: Option<LinMap>,
    /// The first `H` acts on what stands to its left.
    pub h_right: Option<LinMap>,
    /// The first `H*` acts on what stands to its left.
    pub hstar_right: Option<LinMap>,
    /// The last `H*` acts on what stands to its right.
    pub hstar_left: Option<LinMap>,
}

/// The four operators on `H^n ⊗ (H*)^m` plus the bar and cobar parts.
pub fn gs_operators(h: &Bialgebra, n: usize, m: usize) -> Result<BialgebraOperators> {
    let d = h.dim();
    let dual = dual_bialgebra(h);
    let adj = bialgebra_adjoint_operators(h, n, m)?;
    Ok(BialgebraOperators {
        bar: (n >= 1).then(|| bar_operator(&h.algebra(), n).lift(1, d.pow(m as u32))),
        cobar: (m >= 1).then(|| bar_operator(&dual.algebra(), m).lift(d.pow(n as u32), 1)),
        h_left: adj.h_left,
        h_right: adj.h_right,
        hstar_right: adj.hstar_right,
        hstar_left: adj.hstar_left,
    })
}

/// The same operators on `M ⊗ H^n ⊗ (H*)^m ⊗ N` for a right module `M` and a
/// left module `N` over `B(H)`; action 0 is the `H` action, action 1 the `H*` one.
pub fn ps_operators(h: &Bialgebra, mm: &BraidedModule, nn: &BraidedModule, n: usize, m: usize) -> Result<BialgebraOperators> {
    let d = h.dim();
    let (dm, dn) = (mm.dim(), nn.dim());
    let (hn, hm) = (d.pow(n as u32), d.pow(m as u32));
    let dual = dual_bialgebra(h);
    let s = build_b(h);
    require_over(&s, mm, Side::Right)?;
    require_over(&s, nn, Side::Left)?;
    let mut ops = BialgebraOperators { bar: None, cobar: None, h_left: None, h_right: None, hstar_right: None, hstar_left: None };
    if n >= 1 {
        let before = d.pow(n as u32 - 1);
        ops.bar = Some(bar_operator(&h.algebra(), n).lift(dm, hm * dn));
        ops.h_right = Some(mm.action(0).lift(1, before * hm * dn));
        ops.h_left = Some(left_adjoint_block(&s, nn.action(0), 0, &vec![1; m], dn).lift(dm * before, 1));
    }
    if m >= 1 {
        let after = d.pow(m as u32 - 1);
        ops.cobar = Some(bar_operator(&dual.algebra(), m).lift(dm * hn, dn));
        ops.hstar_left = Some(nn.action(1).lift(dm * hn * after, 1));
        ops.hstar_right = Some(right_adjoint_block(&s, mm.action(1), 1, &vec![0; n], dm).lift(1, after * dn));
    }
    Ok(ops)
}

fn require_over(s: &BraidedSystem, m: &BraidedModule, side: Side) -> Result<()> {
    if m.side != side {
        return Err(Error::Invalid(format!("expected a {side:?} module").to_lowercase()));
    }
    if m.system.dims() != s.dims() {
        return Err(Error::Arity("coefficients must be modules over B(H)".into()));
    }
    Ok(())
}

fn plus(acc: &mut LinMap, term: &Option<LinMap>, sign: &crate::exactnum::Scalar) -> Result<()> {
    if let Some(t) = term {
        *acc = acc.add(&t.scale(sign))?;
    }
    Ok(())
}

struct Flags {
    h_left: bool,
    h_right: bool,
    hstar_right: bool,
    hstar_left: bool,
}

fn assemble(
    name: String,
    f: Field,
    max_total: usize,
    space: impl Fn(usize, usize) -> BasedSpace,
    ops: impl Fn(usize, usize) -> Result<BialgebraOperators>,
    flags: Flags,
) -> Result<Bicomplex> {
    let mut spaces = BTreeMap::new();
    for k in 0..=max_total {
        for n in 0..=k {
            spaces.insert((n, k - n), space(n, k - n));
        }
    }
    let dim = |n: usize, m: usize| spaces[&(n, m)].dim();
    let mut d = BTreeMap::new();
    let mut d_prime = BTreeMap::new();
    for &(n, m) in spaces.keys() {
        if n == 0 && m == 0 {
            continue;
        }
        let o = ops(n, m)?;
        let one = f.one();
        let sn = f.sign(n % 2 == 1);
        let snm = f.sign((n + m) % 2 == 1);
        if n >= 1 {
            let mut acc = LinMap::zero(f, dim(n - 1, m), dim(n, m));
            plus(&mut acc, &o.bar, &one)?;
            if flags.h_left {
                plus(&mut acc, &o.h_left, &sn)?;
            }
            if flags.h_right {
                plus(&mut acc, &o.h_right, &one)?;
            }
            d.insert((n, m), acc);
        }
        if m >= 1 {
            let mut acc = LinMap::zero(f, dim(n, m - 1), dim(n, m));
            plus(&mut acc, &o.cobar, &sn)?;
            if flags.hstar_right {
                plus(&mut acc, &o.hstar_right, &sn)?;
            }
            if flags.hstar_left {
                plus(&mut acc, &o.hstar_left, &snm)?;
            }
            d_prime.insert((n, m), acc);
        }
    }
    Ok(Bicomplex { name, max_total, spaces, d, d_prime })
}

fn hn_hm(h: &Bialgebra, dual: &BasedSpace, left: Option<&BasedSpace>, right: Option<&BasedSpace>, n: usize, m: usize) -> BasedSpace {
    let mut parts: Vec<BasedSpace> = left.into_iter().cloned().collect();
    parts.extend(std::iter::repeat_n(h.space.clone(), n));
    parts.extend(std::iter::repeat_n(dual.clone(), m));
    parts.extend(right.cloned());
    BasedSpace::tensor(&parts).relabel(format!("C{n},{m}"))
}

/// The four bicomplexes on `H^n ⊗ (H*)^m`, `variant` in `1..=4`:
/// 1 has no adjoint terms, 2 adds the `H`-left and `H*`-right actions,
/// 3 the `H`-right and `H*`-left actions, 4 all of them.
pub fn gs_bicomplex(h: &Bialgebra, variant: u8, max_total: usize) -> Result<Bicomplex> {
    let flags = match variant {
        1 => Flags { h_left: false, h_right: false, hstar_right: false, hstar_left: false },
        2 => Flags { h_left: true, h_right: false, hstar_right: true, hstar_left: false },
        3 => Flags { h_left: false, h_right: true, hstar_right: false, hstar_left: true },
        4 => Flags { h_left: true, h_right: true, hstar_right: true, hstar_left: true },
        _ => return Err(Error::Invalid(format!("variant {variant} outside 1..=4"))),
    };
    let dual = dual_bialgebra(h).space;
    assemble(
        format!("C{variant}(H)"),
        h.field(),
        max_total,
        |n, m| hn_hm(h, &dual, None, None, n, m),
        |n, m| gs_operators(h, n, m),
        flags,
    )
}

/// The bicomplex on `M ⊗ H^n ⊗ (H*)^m ⊗ N` for braided modules `M` (right)
/// and `N` (left) over `B(H)`.
pub fn ps_bicomplex(h: &Bialgebra, mm: &BraidedModule, nn: &BraidedModule, max_total: usize) -> Result<Bicomplex> {
    let s = build_b(h);
    require_over(&s, mm, Side::Right)?;
    require_over(&s, nn, Side::Left)?;
    let mut rep = check_braided_module(mm);
    rep.merge(check_braided_module(nn));
    require(rep)?;
    let dual = dual_bialgebra(h).space;
    assemble(
        "C(M,H,N)".into(),
        h.field(),
        max_total,
        |n, m| hn_hm(h, &dual, Some(&mm.space), Some(&nn.space), n, m),
        |n, m| ps_operators(h, mm, nn, n, m),
        Flags { h_left: true, h_right: true, hstar_right: true, hstar_left: true },
    )
}

/// [`ps_bicomplex`] for a right-right Hopf module over `H` and a left-left
/// Hopf module over `H*`.
pub fn ps_bicomplex_hopf(h: &Bialgebra, mm: &HopfModule, nn: &DualHopfModule, max_total: usize) -> Result<Bicomplex> {
    require(check_dual_hopf_module(h, nn))?;
    ps_bicomplex(h, &hopf_module_to_braided(h, mm)?, &dual_hopf_module_to_braided(h, nn)?, max_total)
}

fn require(rep: Report) -> Result<()> {
    if rep.is_clean() {
        Ok(())
    } else {
        Err(Error::Axiom(rep.to_string().trim_end().to_string()))
    }
}
