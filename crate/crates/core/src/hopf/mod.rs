//! Algebras, coalgebras, bialgebras and Hopf algebras given by structure
//! constants, with exhaustive axiom checkers.

mod fixtures;

pub use fixtures::{group_algebra, idempotent_monoid_bialgebra, sweedler_h4, trivial_bialgebra};

use crate::error::{Error, Result};
use crate::exactnum::{Field, LinMap, Scalar};
use crate::report::Report;
use crate::tensorspace::{dual_map, swap, BasedSpace};

/// Unital associative algebra `(V, μ, ν)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub space: BasedSpace,
    pub mul: LinMap,
    pub unit: LinMap,
}

/// Counital coassociative coalgebra `(V, Δ, ε)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    pub space: BasedSpace,
    pub comul: LinMap,
    pub counit: LinMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    pub space: BasedSpace,
    pub mul: LinMap,
    pub unit: LinMap,
    pub comul: LinMap,
    pub counit: LinMap,
    pub antipode: Option<LinMap>,
}

fn expect_shape(what: &str, m: &LinMap, field: Field, cod: usize, dom: usize) -> Result<()> {
    if m.field() != field {
        return Err(Error::FieldMismatch(format!("{what} is over {}, expected {field}", m.field())));
    }
    if m.codomain_dim() != cod || m.domain_dim() != dom {
        return Err(Error::Shape(format!(
            "{what} is {}x{}, expected {cod}x{dom}",
            m.codomain_dim(),
            m.domain_dim()
        )));
    }
    Ok(())
}

impl Algebra {
    pub fn new(space: BasedSpace, mul: LinMap, unit: LinMap) -> Result<Algebra> {
        let a = Algebra::new_unchecked(space, mul, unit)?;
        let r = check_uaa(&a);
        if !r.is_clean() {
            return Err(Error::Axiom(r.to_string().trim_end().to_string()));
        }
        Ok(a)
    }

    /// Shape-checked only; axioms are not verified.
    pub fn new_unchecked(space: BasedSpace, mul: LinMap, unit: LinMap) -> Result<Algebra> {
        let d = space.dim();
        let f = mul.field();
        expect_shape("multiplication", &mul, f, d, d * d)?;
        expect_shape("unit", &unit, f, d, 1)?;
        Ok(Algebra { space, mul, unit })
    }

    pub fn field(&self) -> Field {
        self.mul.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `μ ∘ τ`.
    pub fn opposite(&self) -> Algebra {
        let d = self.dim();
        Algebra {
            space: self.space.relabel(format!("{}^op", self.space.label())),
            mul: self.mul.compose(&swap(self.field(), d, d)).expect("square"),
            unit: self.unit.clone(),
        }
    }

    /// Product of two basis vectors as a sparse vector.
    pub fn product(&self, a: usize, b: usize) -> Vec<(usize, Scalar)> {
        self.mul.column(a * self.dim() + b).map(|(r, v)| (r, v.clone())).collect()
    }

    pub fn identity(&self) -> LinMap {
        LinMap::identity(self.field(), self.dim())
    }
}

impl Coalgebra {
    pub fn new_unchecked(space: BasedSpace, comul: LinMap, counit: LinMap) -> Result<Coalgebra> {
        let d = space.dim();
        let f = comul.field();
        expect_shape("comultiplication", &comul, f, d * d, d)?;
        expect_shape("counit", &counit, f, 1, d)?;
        Ok(Coalgebra { space, comul, counit })
    }

    pub fn field(&self) -> Field {
        self.comul.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `τ ∘ Δ`.
    pub fn co_opposite(&self) -> Coalgebra {
        let d = self.dim();
        Coalgebra {
            space: self.space.relabel(format!("{}^cop", self.space.label())),
            comul: swap(self.field(), d, d).compose(&self.comul).expect("square"),
            counit: self.counit.clone(),
        }
    }
}

impl Bialgebra {
    /// Builds and verifies the bialgebra axioms, plus the antipode identities
    /// when an antipode is given.
    pub fn new(
        space: BasedSpace,
        mul: LinMap,
        unit: LinMap,
        comul: LinMap,
        counit: LinMap,
        antipode: Option<LinMap>,
    ) -> Result<Bialgebra> {
        let h = Bialgebra::new_unchecked(space, mul, unit, comul, counit, antipode)?;
        let mut r = check_bialgebra(&h);
        r.merge(check_antipode(&h));
        if !r.is_clean() {
            return Err(Error::Axiom(r.to_string().trim_end().to_string()));
        }
        Ok(h)
    }

    pub fn new_unchecked(
        space: BasedSpace,
        mul: LinMap,
        unit: LinMap,
        comul: LinMap,
        counit: LinMap,
        antipode: Option<LinMap>,
    ) -> Result<Bialgebra> {
        let d = space.dim();
        let f = mul.field();
        expect_shape("multiplication", &mul, f, d, d * d)?;
        expect_shape("unit", &unit, f, d, 1)?;
        expect_shape("comultiplication", &comul, f, d * d, d)?;
        expect_shape("counit", &counit, f, 1, d)?;
        if let Some(s) = &antipode {
            expect_shape("antipode", s, f, d, d)?;
        }
        Ok(Bialgebra { space, mul, unit, comul, counit, antipode })
    }

    pub fn field(&self) -> Field {
        self.mul.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn algebra(&self) -> Algebra {
        Algebra {
            space: self.space.clone(),
            mul: self.mul.clone(),
            unit: self.unit.clone(),
        }
    }

    pub fn coalgebra(&self) -> Coalgebra {
        Coalgebra {
            space: self.space.clone(),
            comul: self.comul.clone(),
            counit: self.counit.clone(),
        }
    }

    pub fn identity(&self) -> LinMap {
        LinMap::identity(self.field(), self.dim())
    }

    pub fn with_antipode(&self, s: Option<LinMap>) -> Bialgebra {
        Bialgebra { antipode: s, ..self.clone() }
    }

    /// Reinterprets the structure constants over another field.
    pub fn to_field(&self, field: Field) -> Result<Bialgebra> {
        Bialgebra::new_unchecked(
            self.space.clone(),
            self.mul.to_field(field)?,
            self.unit.to_field(field)?,
            self.comul.to_field(field)?,
            self.counit.to_field(field)?,
            self.antipode.as_ref().map(|s| s.to_field(field)).transpose()?,
        )
    }
}

pub fn check_uaa(a: &Algebra) -> Report {
    let mut r = Report::new();
    let d = a.dim();
    let id = a.identity();
    let lhs = a.mul.compose(&a.mul.kron(&id)).expect("shapes");
    let rhs = a.mul.compose(&id.kron(&a.mul)).expect("shapes");
    r.compare("associativity", &lhs, &rhs, &[d, d, d]);
    let left = a.mul.compose(&a.unit.kron(&id)).expect("shapes");
    r.compare("left unit", &left, &id, &[d]);
    let right = a.mul.compose(&id.kron(&a.unit)).expect("shapes");
    r.compare("right unit", &right, &id, &[d]);
    r
}

pub fn check_coalgebra(c: &Coalgebra) -> Report {
    let mut r = Report::new();
    let d = c.dim();
    let id = LinMap::identity(c.field(), d);
    let lhs = c.comul.kron(&id).compose(&c.comul).expect("shapes");
    let rhs = id.kron(&c.comul).compose(&c.comul).expect("shapes");
    r.compare("coassociativity", &lhs, &rhs, &[d]);
    let left = c.counit.kron(&id).compose(&c.comul).expect("shapes");
    r.compare("left counit", &left, &id, &[d]);
    let right = id.kron(&c.counit).compose(&c.comul).expect("shapes");
    r.compare("right counit", &right, &id, &[d]);
    r
}

/// The bialgebra axioms: algebra, coalgebra, and the four compatibilities.
pub fn check_bialgebra(h: &Bialgebra) -> Report {
    let mut r = check_uaa(&h.algebra());
    r.merge(check_coalgebra(&h.coalgebra()));
    r.merge(check_compatibility(h));
    r
}

/// Only the compatibility conditions between the algebra and coalgebra parts.
pub fn check_compatibility(h: &Bialgebra) -> Report {
    let mut r = Report::new();
    let d = h.dim();
    let f = h.field();
    let id = h.identity();
    let middle = id.kron(&swap(f, d, d)).kron(&id);
    let lhs = h.comul.compose(&h.mul).expect("shapes");
    let rhs = LinMap::chain(&[&h.mul.kron(&h.mul), &middle, &h.comul.kron(&h.comul)]).expect("shapes");
    r.compare("comultiplication is multiplicative", &lhs, &rhs, &[d, d]);
    let lhs = h.comul.compose(&h.unit).expect("shapes");
    r.compare("comultiplication is unital", &lhs, &h.unit.kron(&h.unit), &[1]);
    let lhs = h.counit.compose(&h.mul).expect("shapes");
    r.compare("counit is multiplicative", &lhs, &h.counit.kron(&h.counit), &[d, d]);
    let lhs = h.counit.compose(&h.unit).expect("shapes");
    r.compare("counit is unital", &lhs, &LinMap::identity(f, 1), &[1]);
    r
}

/// The two convolution identities for the stored antipode; clean when absent.
pub fn check_antipode(h: &Bialgebra) -> Report {
    let mut r = Report::new();
    let Some(s) = &h.antipode else { return r };
    let d = h.dim();
    let id = h.identity();
    let target = h.unit.compose(&h.counit).expect("shapes");
    let left = LinMap::chain(&[&h.mul, &s.kron(&id), &h.comul]).expect("shapes");
    r.compare("antipode (left)", &left, &target, &[d]);
    let right = LinMap::chain(&[&h.mul, &id.kron(s), &h.comul]).expect("shapes");
    r.compare("antipode (right)", &right, &target, &[d]);
    r
}

/// Multiplicativity and unitality of `χ: V -> I`.
pub fn check_character(a: &Algebra, chi: &LinMap) -> Report {
    let mut r = Report::new();
    let d = a.dim();
    if chi.codomain_dim() != 1 || chi.domain_dim() != d {
        r.push("character shape", vec![], format!("{}x{}", chi.codomain_dim(), chi.domain_dim()));
        return r;
    }
    let lhs = chi.compose(&a.mul).expect("shapes");
    r.compare("character is multiplicative", &lhs, &chi.kron(chi), &[d, d]);
    let lhs = chi.compose(&a.unit).expect("shapes");
    r.compare("character is unital", &lhs, &LinMap::identity(a.field(), 1), &[1]);
    r
}

/// `H^op`, `H^cop` or `H^{op,cop}`. The antipode survives the double twist
/// unchanged; a single twist takes its inverse when it exists.
pub fn twist(h: &Bialgebra, op: bool, cop: bool) -> Bialgebra {
    let d = h.dim();
    let t = swap(h.field(), d, d);
    let mul = if op { h.mul.compose(&t).expect("square") } else { h.mul.clone() };
    let comul = if cop { t.compose(&h.comul).expect("square") } else { h.comul.clone() };
    let antipode = match (op, cop) {
        (false, false) | (true, true) => h.antipode.clone(),
        _ => h.antipode.as_ref().and_then(|s| s.try_inverse()),
    };
    let suffix = match (op, cop) {
        (false, false) => "",
        (true, false) => "^op",
        (false, true) => "^cop",
        (true, true) => "^op,cop",
    };
    Bialgebra {
        space: h.space.relabel(format!("{}{suffix}", h.space.label())),
        mul,
        unit: h.unit.clone(),
        comul,
        counit: h.counit.clone(),
        antipode,
    }
}

/// The dual bialgebra `H*` under the rainbow pairing:
/// `⟨l l', h⟩ = ⟨l, h_(2)⟩⟨l', h_(1)⟩`.
pub fn dual_bialgebra(h: &Bialgebra) -> Bialgebra {
    let d = h.dim();
    Bialgebra {
        space: h.space.dual(),
        mul: dual_map(&h.comul, &[d], &[d, d]).expect("shapes"),
        unit: dual_map(&h.counit, &[d], &[]).expect("shapes"),
        comul: dual_map(&h.mul, &[d, d], &[d]).expect("shapes"),
        counit: dual_map(&h.unit, &[], &[d]).expect("shapes"),
        antipode: h.antipode.as_ref().map(|s| dual_map(s, &[d], &[d]).expect("shapes")),
    }
}

/// Solves the convolution identities for an antipode. The solution is
/// unique when it exists.
pub fn solve_antipode(h: &Bialgebra) -> Option<LinMap> {
    let d = h.dim();
    let f = h.field();
    // Unknown s_{j,a} = coefficient of e_j in s(e_a), column j*d + a.
    // Equation rows: half * d*d + k*d + i, the e_k component of the image of e_i.
    let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); d * d];
    for i in 0..d {
        for (ab, c) in h.comul.column(i) {
            let (a, b) = (ab / d, ab % d);
            for j in 0..d {
                // μ(s(e_a) ⊗ e_b)
                for (k, m) in h.mul.column(j * d + b) {
                    cols[j * d + a].push((k * d + i, c * m));
                }
                // μ(e_a ⊗ s(e_b))
                for (k, m) in h.mul.column(a * d + j) {
                    cols[j * d + b].push((d * d + k * d + i, c * m));
                }
            }
        }
    }
    let system = LinMap::from_columns(f, 2 * d * d, cols);
    let target = h.unit.compose(&h.counit).expect("shapes");
    let mut rhs = Vec::new();
    for half in 0..2 {
        for (k, i, v) in target.triplets() {
            rhs.push((half * d * d + k * d + i, v.clone()));
        }
    }
    rhs.sort_by_key(|e| e.0);
    let x = system.solve(&rhs)?;
    let entries = x.into_iter().map(|(u, v)| (u / d, u % d, v));
    Some(LinMap::from_triplets(f, d, d, entries).expect("in range"))
}
