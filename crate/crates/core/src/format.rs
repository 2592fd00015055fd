//! The JSON structure-constant file format.
//!
//! Coefficients are strings (`"-3"`, `"1/2"`) so files stay exact. A `mul`
//! triple `[i, j, k, c]` reads `e_i · e_j ∋ c e_k`; a `comul` triple reads
//! `Δ(e_i) ∋ c e_j ⊗ e_k`. `counit`, `comul` and `antipode` are optional, so
//! plain algebras fit the same format.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exactnum::{Field, LinMap, Scalar};
use crate::hopf::{Algebra, Bialgebra};
use crate::tensorspace::BasedSpace;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    name: String,
    field: String,
    dim: usize,
    basis: Vec<String>,
    unit: Vec<String>,
    mul: Vec<(usize, usize, usize, String)>,
    #[serde(default)]
    counit: Option<Vec<String>>,
    #[serde(default)]
    comul: Option<Vec<(usize, usize, usize, String)>>,
    #[serde(default)]
    antipode: Option<Vec<Vec<String>>>,
}

pub type Triple = (usize, usize, usize, Scalar);

/// Structure constants as read from, or written to, a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: String,
    pub field: Field,
    pub basis: Vec<String>,
    pub unit: Vec<Scalar>,
    pub mul: Vec<Triple>,
    pub counit: Option<Vec<Scalar>>,
    pub comul: Option<Vec<Triple>>,
    /// Row-major, `antipode[i][j]` is the coefficient of `e_i` in `S(e_j)`.
    pub antipode: Option<Vec<Vec<Scalar>>>,
}

fn scalar(field: Field, s: &str, at: &str) -> Result<Scalar> {
    field.parse_scalar(s).map_err(|e| Error::Parse(format!("{at}: {e}")))
}

fn vector(field: Field, v: &[String], dim: usize, at: &str) -> Result<Vec<Scalar>> {
    if v.len() != dim {
        return Err(Error::Parse(format!("{at}: expected {dim} entries, found {}", v.len())));
    }
    v.iter().enumerate().map(|(i, s)| scalar(field, s, &format!("{at}[{i}]"))).collect()
}

fn triples(field: Field, raw: &[(usize, usize, usize, String)], dim: usize, at: &str) -> Result<Vec<Triple>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(raw.len());
    for (n, (i, j, k, c)) in raw.iter().enumerate() {
        if [i, j, k].iter().any(|&&x| x >= dim) {
            return Err(Error::Parse(format!("{at}[{n}]: index out of range in ({i}, {j}, {k}) for dim {dim}")));
        }
        if !seen.insert((*i, *j, *k)) {
            return Err(Error::Parse(format!("duplicate {at} triple ({i}, {j}, {k})")));
        }
        out.push((*i, *j, *k, scalar(field, c, &format!("{at}[{n}]"))?));
    }
    out.sort_by_key(|t| (t.0, t.1, t.2));
    Ok(out)
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let field: Field = raw.field.parse()?;
        let dim = raw.dim;
        if dim == 0 {
            return Err(Error::Parse("dim: must be positive".into()));
        }
        if raw.basis.len() != dim {
            return Err(Error::Parse(format!("basis: expected {dim} names, found {}", raw.basis.len())));
        }
        let unique: BTreeSet<&String> = raw.basis.iter().collect();
        if unique.len() != dim {
            return Err(Error::Parse("basis: names must be distinct".into()));
        }
        if (raw.counit.is_some()) != (raw.comul.is_some()) {
            return Err(Error::Parse("counit and comul must be given together".into()));
        }
        let antipode = match &raw.antipode {
            None => None,
            Some(rows) => {
                if rows.len() != dim {
                    return Err(Error::Parse(format!("antipode: expected {dim} rows, found {}", rows.len())));
                }
                Some(
                    rows.iter()
                        .enumerate()
                        .map(|(i, r)| vector(field, r, dim, &format!("antipode[{i}]")))
                        .collect::<Result<_>>()?,
                )
            }
        };
        Ok(AlgebraFile {
            name: raw.name,
            field,
            basis: raw.basis,
            unit: vector(field, &raw.unit, dim, "unit")?,
            mul: triples(field, &raw.mul, dim, "mul")?,
            counit: raw.counit.as_deref().map(|c| vector(field, c, dim, "counit")).transpose()?,
            comul: raw.comul.as_deref().map(|c| triples(field, c, dim, "comul")).transpose()?,
            antipode,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn has_coalgebra(&self) -> bool {
        self.comul.is_some()
    }

    pub fn space(&self) -> Result<BasedSpace> {
        BasedSpace::new(self.name.clone(), self.basis.clone())
    }

    /// Reinterprets the coefficients over `target`. Rational files map into
    /// any field; prime-field files only into themselves.
    pub fn in_field(&self, target: Field) -> Result<AlgebraFile> {
        if target == self.field {
            return Ok(self.clone());
        }
        let conv = |s: &Scalar| -> Result<Scalar> {
            let q = s
                .to_rational()
                .ok_or_else(|| Error::FieldMismatch(format!("coefficients over {} cannot be read over {target}", self.field)))?;
            target.from_rational(&q)
        };
        let vec = |v: &[Scalar]| v.iter().map(conv).collect::<Result<Vec<_>>>();
        let trip = |t: &[Triple]| {
            t.iter()
                .map(|(i, j, k, c)| Ok((*i, *j, *k, conv(c)?)))
                .filter(|r: &Result<Triple>| !matches!(r, Ok((_, _, _, c)) if c.is_zero()))
                .collect::<Result<Vec<_>>>()
        };
        Ok(AlgebraFile {
            name: self.name.clone(),
            field: target,
            basis: self.basis.clone(),
            unit: vec(&self.unit)?,
            mul: trip(&self.mul)?,
            counit: self.counit.as_deref().map(vec).transpose()?,
            comul: self.comul.as_deref().map(trip).transpose()?,
            antipode: self.antipode.as_ref().map(|rows| rows.iter().map(|r| vec(r)).collect()).transpose()?,
        })
    }

    fn maps(&self) -> Result<(LinMap, LinMap)> {
        let (f, d) = (self.field, self.dim());
        let mul = LinMap::from_triplets(f, d, d * d, self.mul.iter().map(|(i, j, k, c)| (*k, i * d + j, c.clone())))?;
        let unit = LinMap::from_triplets(f, d, 1, self.unit.iter().enumerate().map(|(i, c)| (i, 0, c.clone())))?;
        Ok((mul, unit))
    }

    /// The algebra part; `checked` verifies associativity and unitality.
    pub fn algebra(&self, checked: bool) -> Result<Algebra> {
        let (mul, unit) = self.maps()?;
        if checked {
            Algebra::new(self.space()?, mul, unit)
        } else {
            Algebra::new_unchecked(self.space()?, mul, unit)
        }
    }

    pub fn bialgebra(&self, checked: bool) -> Result<Bialgebra> {
        let (f, d) = (self.field, self.dim());
        let (Some(comul), Some(counit)) = (&self.comul, &self.counit) else {
            return Err(Error::Invalid(format!("{} has no coalgebra structure", self.name)));
        };
        let (mul, unit) = self.maps()?;
        let comul = LinMap::from_triplets(f, d * d, d, comul.iter().map(|(i, j, k, c)| (j * d + k, *i, c.clone())))?;
        let counit = LinMap::from_triplets(f, 1, d, counit.iter().enumerate().map(|(i, c)| (0, i, c.clone())))?;
        let antipode = self
            .antipode
            .as_ref()
            .map(|rows| {
                LinMap::from_triplets(
                    f,
                    d,
                    d,
                    rows.iter().enumerate().flat_map(|(i, r)| r.iter().enumerate().map(move |(j, c)| (i, j, c.clone()))),
                )
            })
            .transpose()?;
        let space = self.space()?;
        if checked {
            Bialgebra::new(space, mul, unit, comul, counit, antipode)
        } else {
            Bialgebra::new_unchecked(space, mul, unit, comul, counit, antipode)
        }
    }

    pub fn from_algebra(name: &str, a: &Algebra) -> AlgebraFile {
        let d = a.dim();
        AlgebraFile {
            name: name.to_string(),
            field: a.field(),
            basis: a.space.names().to_vec(),
            unit: column(&a.unit, 0, d),
            mul: a.mul.triplets().map(|(k, col, c)| (col / d, col % d, k, c.clone())).collect::<Vec<_>>().sorted(),
            counit: None,
            comul: None,
            antipode: None,
        }
    }

    pub fn from_bialgebra(name: &str, h: &Bialgebra) -> AlgebraFile {
        let d = h.dim();
        let mut out = AlgebraFile::from_algebra(name, &h.algebra());
        out.counit = Some((0..d).map(|i| h.counit.get(0, i)).collect());
        out.comul = Some(h.comul.triplets().map(|(row, i, c)| (i, row / d, row % d, c.clone())).collect::<Vec<_>>().sorted());
        out.antipode = h.antipode.as_ref().map(|s| s.to_dense());
        out
    }

    /// Canonical text: keys in alphabetical order, triples sorted, zero
    /// coefficients dropped, one triple or matrix row per line.
    pub fn to_canonical_string(&self) -> String {
        let q = |s: &str| serde_json::to_string(s).expect("strings serialize");
        let inline = |v: &[Scalar]| format!("[{}]", v.iter().map(|c| q(&c.to_string())).collect::<Vec<_>>().join(", "));
        let block = |rows: Vec<String>| {
            if rows.is_empty() {
                "[]".to_string()
            } else {
                format!("[\n    {}\n  ]", rows.join(",\n    "))
            }
        };
        let trip = |t: &[Triple]| {
            block(t.iter().filter(|x| !x.3.is_zero()).map(|(i, j, k, c)| format!("[{i}, {j}, {k}, {}]", q(&c.to_string()))).collect())
        };
        let mut entries: Vec<(&str, String)> = Vec::new();
        if let Some(s) = &self.antipode {
            entries.push(("antipode", block(s.iter().map(|r| inline(r)).collect())));
        }
        entries.push(("basis", format!("[{}]", self.basis.iter().map(|b| q(b)).collect::<Vec<_>>().join(", "))));
        if let Some(c) = &self.comul {
            entries.push(("comul", trip(c)));
        }
        if let Some(c) = &self.counit {
            entries.push(("counit", inline(c)));
        }
        entries.push(("dim", self.dim().to_string()));
        entries.push(("field", q(&self.field.to_string())));
        entries.push(("mul", trip(&self.mul)));
        entries.push(("name", q(&self.name)));
        entries.push(("unit", inline(&self.unit)));
        let mut out = String::from("{\n");
        for (n, (k, v)) in entries.iter().enumerate() {
            let sep = if n + 1 == entries.len() { "" } else { "," };
            let _ = writeln!(out, "  {}: {v}{sep}", q(k));
        }
        out.push_str("}\n");
        out
    }
}

fn column(m: &LinMap, j: usize, len: usize) -> Vec<Scalar> {
    (0..len).map(|i| m.get(i, j)).collect()
}

trait Sorted {
    fn sorted(self) -> Self;
}

impl Sorted for Vec<Triple> {
    fn sorted(mut self) -> Self {
        self.sort_by_key(|t| (t.0, t.1, t.2));
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{group_algebra, idempotent_monoid_bialgebra, sweedler_h4};
    use proptest::prelude::*;

    fn q() -> Field {
        Field::Rational
    }

    const KZ2: &str = r#"{
  "basis": ["1", "g"],
  "comul": [
    [0, 0, 0, "1"],
    [1, 1, 1, "1"]
  ],
  "counit": ["1", "1"],
  "dim": 2,
  "field": "q",
  "mul": [
    [0, 0, 0, "1"],
    [0, 1, 1, "1"],
    [1, 0, 1, "1"],
    [1, 1, 0, "1"]
  ],
  "name": "kz2",
  "unit": ["1", "0"]
}
"#;

    #[test]
    fn group_algebra_file_loads_and_round_trips() {
        let file = AlgebraFile::parse(KZ2).unwrap();
        let h = file.bialgebra(true).unwrap();
        let reference = group_algebra(q(), 2);
        assert_eq!(h.mul, reference.mul);
        assert_eq!(h.comul, reference.comul);
        assert_eq!(file.to_canonical_string(), KZ2);
    }

    #[test]
    fn fixtures_round_trip_through_text() {
        for (name, h) in [("kz3", group_algebra(q(), 3)), ("sweedler4", sweedler_h4(q())), ("monoid2", idempotent_monoid_bialgebra(q()))] {
            let file = AlgebraFile::from_bialgebra(name, &h);
            let text = file.to_canonical_string();
            let back = AlgebraFile::parse(&text).unwrap();
            assert_eq!(back, file);
            assert_eq!(back.to_canonical_string(), text);
            let h2 = back.bialgebra(true).unwrap();
            assert_eq!((h2.mul, h2.comul, h2.antipode), (h.mul.clone(), h.comul.clone(), h.antipode.clone()));
        }
    }

    #[test]
    fn duplicate_triples_are_named() {
        let text = KZ2.replace("[1, 1, 0, \"1\"]", "[1, 1, 0, \"1\"],\n    [1, 1, 0, \"2\"]");
        let err = AlgebraFile::parse(&text).unwrap_err();
        assert_eq!(err, Error::Parse("duplicate mul triple (1, 1, 0)".into()));
    }

    #[test]
    fn malformed_files_are_rejected_with_a_location() {
        let cases = [
            (KZ2.replace("\"dim\": 2", "\"dim\": 3"), "basis"),
            (KZ2.replace("[1, 1, 1, \"1\"]", "[1, 1, 2, \"1\"]"), "comul[1]"),
            (KZ2.replace("\"counit\": [\"1\", \"1\"]", "\"counit\": [\"1\", \"x\"]"), "counit[1]"),
            (KZ2.replace("\"field\": \"q\"", "\"field\": \"fp:4\""), "4"),
            (KZ2.replace("\"name\"", "\"nmae\""), "nmae"),
            (KZ2.replace("[0, 0, 0, \"1\"],\n    [0, 1", "[0, 0, 0, \"1/0\"],\n    [0, 1"), "mul[0]"),
            (KZ2[..40].to_string(), "line"),
        ];
        for (text, needle) in cases {
            let err = AlgebraFile::parse(&text).unwrap_err().to_string();
            assert!(err.contains(needle), "{err} should mention {needle}");
        }
    }

    #[test]
    fn axioms_are_checked_unless_asked_not_to() {
        // g·g = 2 breaks multiplicativity of the comultiplication
        let text = KZ2.replace("[1, 1, 0, \"1\"]", "[1, 1, 0, \"2\"]");
        let file = AlgebraFile::parse(&text).unwrap();
        assert!(matches!(file.bialgebra(true), Err(Error::Axiom(_))));
        assert!(file.bialgebra(false).is_ok());
    }

    #[test]
    fn coefficients_move_between_fields() {
        let file = AlgebraFile::parse(KZ2).unwrap();
        let f3 = file.in_field(Field::prime(3).unwrap()).unwrap();
        let (h, reference) = (f3.bialgebra(true).unwrap(), group_algebra(Field::prime(3).unwrap(), 2));
        assert_eq!((h.mul, h.unit, h.comul, h.counit), (reference.mul, reference.unit, reference.comul, reference.counit));
        let halves = AlgebraFile::parse(&KZ2.replace("\"counit\": [\"1\", \"1\"]", "\"counit\": [\"1/2\", \"1\"]")).unwrap();
        assert!(halves.in_field(Field::prime(2).unwrap()).is_err());
        assert!(f3.in_field(q()).is_err());
    }

    #[test]
    fn algebra_only_files() {
        let a = group_algebra(q(), 2).algebra();
        let file = AlgebraFile::from_algebra("a", &a);
        let back = AlgebraFile::parse(&file.to_canonical_string()).unwrap();
        assert!(!back.has_coalgebra());
        let b = back.algebra(true).unwrap();
        assert_eq!((b.mul, b.unit), (a.mul, a.unit));
        assert!(back.bialgebra(false).is_err());
        let half = KZ2.replace("  \"counit\": [\"1\", \"1\"],\n", "");
        assert!(AlgebraFile::parse(&half).is_err());
    }

    proptest! {
        #[test]
        fn parsing_never_panics(s in ".{0,200}") {
            let _ = AlgebraFile::parse(&s);
        }

        #[test]
        fn rational_coefficients_round_trip(n in -1000i64..1000, d in 1i64..50) {
            let c = format!("{n}/{d}");
            let text = KZ2.replace("\"counit\": [\"1\", \"1\"]", &format!("\"counit\": [\"1\", \"{c}\"]"));
            let file = AlgebraFile::parse(&text).unwrap();
            let again = AlgebraFile::parse(&file.to_canonical_string()).unwrap();
            prop_assert_eq!(file, again);
        }
    }
}
