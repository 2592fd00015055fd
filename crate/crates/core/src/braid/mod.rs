//! Braided systems: ordered families of spaces with braiding components
//! `σ_{i,j}: V_i ⊗ V_j -> V_j ⊗ V_i` for `i <= j`.
//!
//! Component indices are 0-based in the API and printed 1-based in reports.

mod crossed;

pub use crossed::{
    bialgebra_crossed_data, check_bicomodule_algebra, check_crossed_data, check_left_module_algebra,
    check_right_module_algebra, crossed_system, crossed_system_unchecked, CrossedData,
};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::{Field, LinMap, Scalar};
use crate::hopf::{dual_bialgebra, twist, Algebra, Bialgebra};
use crate::perm::Perm;
use crate::report::Report;
use crate::tensorspace::{
    coevaluation_twisted, evaluation, evaluation_twisted, perm_operator, swap, BasedSpace,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedSystem {
    field: Field,
    components: Vec<BasedSpace>,
    /// Row `i` holds `σ_{i,j}` for `j = i, .., r-1`.
    sigma: Vec<Vec<LinMap>>,
    /// The UAA carried by each component, when the system is one of UAAs.
    algebras: Option<Vec<Algebra>>,
    counits: Option<Vec<LinMap>>,
}

impl BraidedSystem {
    /// `sigma(i, j)` supplies `σ_{i,j}` for every `i <= j`.
    pub fn new(
        field: Field,
        components: Vec<BasedSpace>,
        mut sigma: impl FnMut(usize, usize) -> LinMap,
    ) -> Result<BraidedSystem> {
        let r = components.len();
        let mut rows = Vec::with_capacity(r);
        for i in 0..r {
            let mut row = Vec::with_capacity(r - i);
            for j in i..r {
                let s = sigma(i, j);
                let n = components[i].dim() * components[j].dim();
                if s.field() != field {
                    return Err(Error::FieldMismatch(format!("σ_({},{}) over {}", i + 1, j + 1, s.field())));
                }
                if s.domain_dim() != n || s.codomain_dim() != n {
                    return Err(Error::Shape(format!(
                        "σ_({},{}) is {}x{}, expected {n}x{n}",
                        i + 1,
                        j + 1,
                        s.codomain_dim(),
                        s.domain_dim()
                    )));
                }
                row.push(s);
            }
            rows.push(row);
        }
        Ok(BraidedSystem { field, components, sigma: rows, algebras: None, counits: None })
    }

    /// Attaches a UAA to every component (making the system pointed).
    pub fn with_algebras(mut self, algebras: Vec<Algebra>) -> Result<BraidedSystem> {
        if algebras.len() != self.rank() || algebras.iter().zip(&self.components).any(|(a, v)| a.dim() != v.dim()) {
            return Err(Error::Shape("algebras do not match the components".into()));
        }
        self.algebras = Some(algebras);
        Ok(self)
    }

    pub fn with_counits(mut self, counits: Vec<LinMap>) -> Result<BraidedSystem> {
        if counits.len() != self.rank()
            || counits.iter().zip(&self.components).any(|(e, v)| e.domain_dim() != v.dim() || e.codomain_dim() != 1)
        {
            return Err(Error::Shape("counits do not match the components".into()));
        }
        self.counits = Some(counits);
        Ok(self)
    }

    pub fn without_structure(mut self) -> BraidedSystem {
        self.algebras = None;
        self.counits = None;
        self
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[BasedSpace] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &BasedSpace {
        &self.components[i]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.dim()).collect()
    }

    pub fn dim(&self, i: usize) -> usize {
        self.components[i].dim()
    }

    /// `σ_{i,j}`, `i <= j`.
    pub fn sigma(&self, i: usize, j: usize) -> &LinMap {
        assert!(i <= j, "σ_({},{}) lies outside the system", i + 1, j + 1);
        &self.sigma[i][j - i]
    }

    pub fn algebras(&self) -> Option<&[Algebra]> {
        self.algebras.as_deref()
    }

    pub fn algebra(&self, i: usize) -> Option<&Algebra> {
        self.algebras.as_ref().map(|a| &a[i])
    }

    pub fn units(&self) -> Option<Vec<LinMap>> {
        self.algebras.as_ref().map(|a| a.iter().map(|x| x.unit.clone()).collect())
    }

    pub fn counits(&self) -> Option<&[LinMap]> {
        self.counits.as_deref()
    }

    /// The colored Yang-Baxter equation on every `V_i⊗V_j⊗V_k`, `i<=j<=k`.
    pub fn check_ybe(&self) -> Report {
        let r = self.rank();
        let triples: Vec<(usize, usize, usize)> = (0..r)
            .flat_map(|i| (i..r).flat_map(move |j| (j..r).map(move |k| (i, j, k))))
            .collect();
        let reports: Vec<Report> = triples.par_iter().map(|&(i, j, k)| self.check_ybe_on(i, j, k)).collect();
        let mut out = Report::new();
        for rep in reports {
            out.merge(rep);
        }
        out
    }

    pub fn check_ybe_on(&self, i: usize, j: usize, k: usize) -> Report {
        let (di, dj, dk) = (self.dim(i), self.dim(j), self.dim(k));
        let lhs = LinMap::chain(&[
            &self.sigma(j, k).lift(1, di),
            &self.sigma(i, k).lift(dj, 1),
            &self.sigma(i, j).lift(1, dk),
        ])
        .expect("shapes");
        let rhs = LinMap::chain(&[
            &self.sigma(i, j).lift(dk, 1),
            &self.sigma(i, k).lift(1, dj),
            &self.sigma(j, k).lift(di, 1),
        ])
        .expect("shapes");
        let mut rep = Report::new();
        rep.compare(&format!("YBE on ({},{},{})", i + 1, j + 1, k + 1), &lhs, &rhs, &[di, dj, dk]);
        rep
    }

    /// Units are natural for the braiding: `σ_{i,j}(ν_i ⊗ v) = v ⊗ ν_i` and
    /// `σ_{i,j}(v ⊗ ν_j) = ν_j ⊗ v`.
    pub fn check_unit_naturality(&self) -> Report {
        let mut rep = Report::new();
        let Some(units) = self.units() else { return rep };
        for i in 0..self.rank() {
            for j in i + 1..self.rank() {
                let (di, dj) = (self.dim(i), self.dim(j));
                let s = self.sigma(i, j);
                let idj = LinMap::identity(self.field, dj);
                let idi = LinMap::identity(self.field, di);
                let lhs = s.compose(&units[i].kron(&idj)).expect("shapes");
                rep.compare(&format!("unit {} natural for σ_({},{})", i + 1, i + 1, j + 1), &lhs, &idj.kron(&units[i]), &[dj]);
                let lhs = s.compose(&idi.kron(&units[j])).expect("shapes");
                rep.compare(&format!("unit {} natural for σ_({},{})", j + 1, i + 1, j + 1), &lhs, &units[j].kron(&idi), &[di]);
            }
        }
        rep
    }

    /// `σ ↦ -σ` on every component.
    pub fn negate(&self) -> BraidedSystem {
        let minus = self.field.from_i64(-1);
        BraidedSystem {
            field: self.field,
            components: self.components.clone(),
            sigma: self.sigma.iter().map(|row| row.iter().map(|s| s.scale(&minus)).collect()).collect(),
            algebras: None,
            counits: None,
        }
    }

    /// Braiding `V_k ⊗ V_l -> V_l ⊗ V_k` for any order of `k, l`, inverting
    /// the stored component when `k > l`.
    pub fn crossing(&self, k: usize, l: usize) -> Result<LinMap> {
        if k <= l {
            Ok(self.sigma(k, l).clone())
        } else {
            self.sigma(l, k).try_inverse().ok_or_else(|| {
                Error::NotInvertible(format!("σ_({},{}) is not invertible", l + 1, k + 1))
            })
        }
    }

    /// Reorders the components: new position `a` holds old component
    /// `θ⁻¹(a)`. Pairs whose order is reversed use inverted braidings.
    pub fn permute(&self, theta: &Perm) -> Result<BraidedSystem> {
        if theta.len() != self.rank() {
            return Err(Error::Arity(format!("permutation of {} letters on a rank {} system", theta.len(), self.rank())));
        }
        let inv = theta.inverse();
        let groups: Vec<Vec<usize>> = (0..self.rank()).map(|a| vec![inv.apply(a)]).collect();
        let mut out = self.regroup(&groups)?;
        out.algebras = self.algebras.as_ref().map(|al| groups.iter().map(|g| al[g[0]].clone()).collect());
        out.counits = self.counits.as_ref().map(|c| groups.iter().map(|g| c[g[0]].clone()).collect());
        Ok(out)
    }

    /// Replaces `V_s, .., V_t` (0-based, inclusive) by their direct sum.
    pub fn glue(&self, s: usize, t: usize) -> Result<BraidedSystem> {
        if s > t || t >= self.rank() {
            return Err(Error::Arity(format!("cannot glue components {}..{}", s + 1, t + 1)));
        }
        let mut groups: Vec<Vec<usize>> = (0..s).map(|i| vec![i]).collect();
        groups.push((s..=t).collect());
        groups.extend((t + 1..self.rank()).map(|i| vec![i]));
        self.regroup(&groups)
    }

    /// New system whose components are direct sums of old ones.
    fn regroup(&self, groups: &[Vec<usize>]) -> Result<BraidedSystem> {
        let spaces: Vec<BasedSpace> = groups
            .iter()
            .map(|g| {
                if g.len() == 1 {
                    self.components[g[0]].clone()
                } else {
                    let parts: Vec<BasedSpace> = g.iter().map(|&k| self.components[k].clone()).collect();
                    let label = parts.iter().map(|p| p.label()).collect::<Vec<_>>().join("⊕");
                    BasedSpace::direct_sum(&label, &parts)
                }
            })
            .collect();
        let offsets: Vec<Vec<usize>> = groups
            .iter()
            .map(|g| {
                let mut acc = 0;
                g.iter()
                    .map(|&k| {
                        let o = acc;
                        acc += self.dim(k);
                        o
                    })
                    .collect()
            })
            .collect();
        let mut sigma = Vec::new();
        for a in 0..groups.len() {
            let mut row = Vec::new();
            for b in a..groups.len() {
                let (da, db) = (spaces[a].dim(), spaces[b].dim());
                let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); da * db];
                for (ka, &k) in groups[a].iter().enumerate() {
                    for (lb, &l) in groups[b].iter().enumerate() {
                        let block = self.crossing(k, l)?;
                        let (dk, dl) = (self.dim(k), self.dim(l));
                        let (ok, ol) = (offsets[a][ka], offsets[b][lb]);
                        for x in 0..dk {
                            for y in 0..dl {
                                let col = (ok + x) * db + (ol + y);
                                for (row_idx, v) in block.column(x * dl + y) {
                                    let (y2, x2) = (row_idx / dk, row_idx % dk);
                                    cols[col].push(((ol + y2) * da + (ok + x2), v.clone()));
                                }
                            }
                        }
                    }
                }
                row.push(LinMap::from_columns(self.field, da * db, cols));
            }
            sigma.push(row);
        }
        Ok(BraidedSystem { field: self.field, components: spaces, sigma, algebras: None, counits: None })
    }

    /// The subsystem on the given components, in the given increasing order.
    pub fn subsystem(&self, indices: &[usize]) -> BraidedSystem {
        assert!(indices.windows(2).all(|w| w[0] < w[1]), "subsystem indices must increase");
        BraidedSystem {
            field: self.field,
            components: indices.iter().map(|&i| self.components[i].clone()).collect(),
            sigma: indices
                .iter()
                .enumerate()
                .map(|(a, &i)| indices[a..].iter().map(|&j| self.sigma(i, j).clone()).collect())
                .collect(),
            algebras: self.algebras.as_ref().map(|al| indices.iter().map(|&i| al[i].clone()).collect()),
            counits: self.counits.as_ref().map(|c| indices.iter().map(|&i| c[i].clone()).collect()),
        }
    }

    /// Replaces one braiding component (for building corrupted systems).
    pub fn with_sigma(&self, i: usize, j: usize, s: LinMap) -> Result<BraidedSystem> {
        let mut out = self.clone();
        if s.domain_dim() != self.sigma(i, j).domain_dim() || s.codomain_dim() != self.sigma(i, j).codomain_dim() {
            return Err(Error::Shape(format!("replacement for σ_({},{})", i + 1, j + 1)));
        }
        out.sigma[i][j - i] = s;
        Ok(out)
    }

    /// Rank-1 system on one space.
    pub fn single(space: BasedSpace, sigma: LinMap) -> Result<BraidedSystem> {
        let field = sigma.field();
        BraidedSystem::new(field, vec![space], |_, _| sigma.clone())
    }
}

/// `σ_Ass = ν ⊗ μ`: `a ⊗ b ↦ 1 ⊗ ab`.
pub fn sigma_ass(a: &Algebra) -> LinMap {
    a.unit.kron(&a.mul)
}

/// `σ^r_Ass = μ ⊗ ν`: `a ⊗ b ↦ ab ⊗ 1`.
pub fn sigma_ass_r(a: &Algebra) -> LinMap {
    a.mul.kron(&a.unit)
}

/// `σ_coAss = ε ⊗ Δ`: `a ⊗ b ↦ ε(a) Δ(b)`.
pub fn sigma_coass(c: &crate::hopf::Coalgebra) -> LinMap {
    c.counit.kron(&c.comul)
}

/// `σ_bi(h ⊗ l) = ⟨l_(1), h_(2)⟩ l_(2) ⊗ h_(1)`, a map `H ⊗ H* -> H* ⊗ H`,
/// with `l_(1) ⊗ l_(2)` the rainbow-dual coproduct of `H*`.
pub fn sigma_bi(h: &Bialgebra) -> LinMap {
    let d = h.dim();
    let f = h.field();
    let dual_comul = dual_bialgebra(&h.with_antipode(None)).comul;
    let split = h.comul.kron(&dual_comul);
    let pair = evaluation_twisted(f, d).lift(d, d);
    let flip = swap(f, d, d);
    LinMap::chain(&[&flip, &pair, &split]).expect("shapes")
}

/// `l ⊗ h ↦ ⟨l_(1), s(h_(2))⟩ h_(1) ⊗ l_(2)`, the inverse of `σ_bi` written
/// with the antipode.
pub fn sigma_bi_inverse_formula(h: &Bialgebra) -> Option<LinMap> {
    let s = h.antipode.as_ref()?;
    let d = h.dim();
    let f = h.field();
    let dual_comul = dual_bialgebra(&h.with_antipode(None)).comul;
    let id = h.identity();
    // l1 l2 h1 h2  ->  l1 s(h2) h1 l2
    let split = dual_comul.kron(&h.comul);
    let apply_s = id.kron(&id).kron(&id).kron(s);
    let arrange = perm_operator(f, &Perm::new(vec![0, 3, 2, 1]).expect("perm"), &[d, d, d, d]).expect("shapes");
    let pair = evaluation(f, d).lift(1, d * d);
    Some(LinMap::chain(&[&pair, &arrange, &apply_s, &split]).expect("shapes"))
}

/// Antipode read off from `σ_bi⁻¹`:
/// `s̃(h) = Σ_i (ε ⊗ ν*)(σ_bi⁻¹(δ_i ⊗ h)) e_i`. Absent when `σ_bi` is singular.
pub fn extract_antipode(h: &Bialgebra) -> Option<LinMap> {
    let d = h.dim();
    let f = h.field();
    let inv = sigma_bi(h).try_inverse()?;
    let id = h.identity();
    let dual_counit = dual_bialgebra(&h.with_antipode(None)).counit;
    let cap = h.counit.kron(&dual_counit).compose(&inv).expect("shapes");
    let steps = [
        cap.kron(&id),
        id.kron(&swap(f, d, d)),
        coevaluation_twisted(f, d).kron(&id),
    ];
    Some(LinMap::chain(&[&steps[0], &steps[1], &steps[2]]).expect("shapes"))
}

/// Which of the two associativity braidings sits on `H` in `B(H)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AssSide {
    /// `σ^r_Ass = μ ⊗ ν`, as in the construction of `B(H)`.
    #[default]
    Right,
    /// `σ_Ass = ν ⊗ μ`.
    Left,
}

/// The rank-2 system `B(H) = (H, H*)`; `σ_{1,2} = σ_bi`.
pub fn build_b(h: &Bialgebra) -> BraidedSystem {
    build_b_with(h, AssSide::Right)
}

pub fn build_b_with(h: &Bialgebra, side: AssSide) -> BraidedSystem {
    let dual = dual_bialgebra(&h.with_antipode(None));
    let (ah, ad) = (h.algebra(), dual.algebra());
    let s11 = match side {
        AssSide::Right => sigma_ass_r(&ah),
        AssSide::Left => sigma_ass(&ah),
    };
    let s22 = sigma_ass(&ad);
    let s12 = sigma_bi(h);
    BraidedSystem::new(h.field(), vec![h.space.clone(), dual.space.clone()], |i, j| match (i, j) {
        (0, 0) => s11.clone(),
        (1, 1) => s22.clone(),
        _ => s12.clone(),
    })
    .expect("shapes")
    .with_algebras(vec![ah, ad])
    .expect("dims")
    .with_counits(vec![h.counit.clone(), dual.counit.clone()])
    .expect("dims")
}

/// The rank-4 system `B'(H) = (H, H^op, H*, (H^cop)*)`.
pub fn build_b_prime(h: &Bialgebra) -> BraidedSystem {
    let f = h.field();
    let d = h.dim();
    let plain = h.with_antipode(None);
    let op = twist(&plain, true, false);
    let cop = twist(&plain, false, true);
    let opcop = twist(&plain, true, true);
    let v3 = dual_bialgebra(&plain);
    let v4 = dual_bialgebra(&cop);
    let algebras = vec![plain.algebra(), op.algebra(), v3.algebra(), v4.algebra()];
    let spaces = vec![
        h.space.clone(),
        h.space.relabel(format!("{}^op", h.space.label())),
        v3.space.clone(),
        v4.space.relabel(format!("({}^cop)*", h.space.label())),
    ];
    let t = swap(f, d, d);
    let bis = [sigma_bi(&plain), sigma_bi(&op), sigma_bi(&cop), sigma_bi(&opcop)];
    let sys = BraidedSystem::new(f, spaces, |i, j| match (i, j) {
        (i, j) if i == j => sigma_ass(&algebras[i]),
        (0, 1) | (2, 3) => t.clone(),
        (0, 2) => bis[0].clone(),
        (1, 2) => bis[1].clone(),
        (0, 3) => bis[2].clone(),
        (1, 3) => bis[3].clone(),
        _ => unreachable!(),
    })
    .expect("shapes");
    let counits = vec![h.counit.clone(), h.counit.clone(), v3.counit.clone(), v4.counit.clone()];
    sys.with_algebras(algebras).expect("dims").with_counits(counits).expect("dims")
}

/// `(f_j ⊗ f_i) σ_{i,j} = σ'_{i,j} (f_i ⊗ f_j)` for all `i <= j`, plus
/// preservation of units and counits when both systems carry them.
pub fn check_braided_morphism(maps: &[LinMap], s: &BraidedSystem, t: &BraidedSystem) -> Report {
    let mut rep = Report::new();
    if maps.len() != s.rank() || s.rank() != t.rank() {
        rep.push("rank", vec![], format!("{} maps between ranks {} and {}", maps.len(), s.rank(), t.rank()));
        return rep;
    }
    for (i, m) in maps.iter().enumerate() {
        if m.domain_dim() != s.dim(i) || m.codomain_dim() != t.dim(i) {
            rep.push(format!("shape of map {}", i + 1), vec![], "");
            return rep;
        }
    }
    for i in 0..s.rank() {
        for j in i..s.rank() {
            let lhs = maps[j].kron(&maps[i]).compose(s.sigma(i, j)).expect("shapes");
            let rhs = t.sigma(i, j).compose(&maps[i].kron(&maps[j])).expect("shapes");
            rep.compare(&format!("braiding ({},{})", i + 1, j + 1), &lhs, &rhs, &[s.dim(i), s.dim(j)]);
        }
    }
    if let (Some(u), Some(v)) = (s.units(), t.units()) {
        for i in 0..s.rank() {
            let lhs = maps[i].compose(&u[i]).expect("shapes");
            rep.compare(&format!("unit {}", i + 1), &lhs, &v[i], &[1]);
        }
    }
    if let (Some(e), Some(e2)) = (s.counits(), t.counits()) {
        for i in 0..s.rank() {
            let lhs = e2[i].compose(&maps[i]).expect("shapes");
            rep.compare(&format!("counit {}", i + 1), &lhs, &e[i], &[s.dim(i)]);
        }
    }
    rep
}
