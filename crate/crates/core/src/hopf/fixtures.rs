use super::Bialgebra;
use crate::exactnum::{Field, LinMap};
use crate::tensorspace::BasedSpace;

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Assembles a bialgebra from integer structure constants:
/// `mul` lists `(i, j, k, c)` for `e_i e_j ∋ c e_k`, `comul` lists
/// `(i, j, k, c)` for `Δ e_i ∋ c e_j ⊗ e_k`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn from_tables(
    field: Field,
    label: &str,
    basis: Vec<String>,
    mul: &[(usize, usize, usize, i64)],
    comul: &[(usize, usize, usize, i64)],
    counit: &[i64],
    antipode: Option<&[(usize, usize, i64)]>,
) -> Bialgebra {
    let d = basis.len();
    let f = |c: i64| field.from_i64(c);
    let mul = LinMap::from_triplets(field, d, d * d, mul.iter().map(|&(i, j, k, c)| (k, i * d + j, f(c)))).expect("table");
    let comul = LinMap::from_triplets(field, d * d, d, comul.iter().map(|&(i, j, k, c)| (j * d + k, i, f(c)))).expect("table");
    let unit = LinMap::from_triplets(field, d, 1, [(0, 0, field.one())]).expect("table");
    let counit = LinMap::from_triplets(field, 1, d, counit.iter().enumerate().map(|(i, &c)| (0, i, f(c)))).expect("table");
    let antipode = antipode.map(|s| LinMap::from_triplets(field, d, d, s.iter().map(|&(i, j, c)| (j, i, f(c)))).expect("table"));
    let space = BasedSpace::new(label, basis).expect("distinct names");
    Bialgebra::new_unchecked(space, mul, unit, comul, counit, antipode).expect("shapes")
}

/// The ground field as a Hopf algebra.
pub fn trivial_bialgebra(field: Field) -> Bialgebra {
    from_tables(field, "k", names(&["1"]), &[(0, 0, 0, 1)], &[(0, 0, 0, 1)], &[1], Some(&[(0, 0, 1)]))
}

fn power_name(k: usize) -> String {
    match k {
        0 => "1".into(),
        1 => "g".into(),
        _ => format!("g{k}"),
    }
}

/// Group algebra of `Z/n` with basis `1, g, g2, ..`.
pub fn group_algebra(field: Field, n: usize) -> Bialgebra {
    assert!(n >= 1);
    let basis = (0..n).map(power_name).collect();
    let mul: Vec<_> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b, (a + b) % n, 1))).collect();
    let comul: Vec<_> = (0..n).map(|a| (a, a, a, 1)).collect();
    let anti: Vec<_> = (0..n).map(|a| (a, (n - a) % n, 1)).collect();
    from_tables(field, &format!("kZ{n}"), basis, &mul, &comul, &vec![1; n], Some(&anti))
}

/// Sweedler's four-dimensional Hopf algebra: `g² = 1`, `x² = 0`,
/// `xg = -gx`, `Δx = x⊗1 + g⊗x`. Basis `1, g, x, gx`.
pub fn sweedler_h4(field: Field) -> Bialgebra {
    let (one, g, x, gx) = (0, 1, 2, 3);
    let mul = [
        (one, one, one, 1),
        (one, g, g, 1),
        (one, x, x, 1),
        (one, gx, gx, 1),
        (g, one, g, 1),
        (g, g, one, 1),
        (g, x, gx, 1),
        (g, gx, x, 1),
        (x, one, x, 1),
        (x, g, gx, -1),
        (gx, one, gx, 1),
        (gx, g, x, -1),
    ];
    let comul = [
        (one, one, one, 1),
        (g, g, g, 1),
        (x, x, one, 1),
        (x, g, x, 1),
        (gx, gx, g, 1),
        (gx, one, gx, 1),
    ];
    let anti = [(one, one, 1), (g, g, 1), (x, gx, -1), (gx, x, 1)];
    from_tables(field, "H4", names(&["1", "g", "x", "gx"]), &mul, &comul, &[1, 1, 0, 0], Some(&anti))
}

/// The monoid `{1, x}` with `x² = x`, grouplike `x`. A bialgebra without
/// antipode.
pub fn idempotent_monoid_bialgebra(field: Field) -> Bialgebra {
    let mul = [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 1, 1)];
    let comul = [(0, 0, 0, 1), (1, 1, 1, 1)];
    from_tables(field, "M2", names(&["1", "x"]), &mul, &comul, &[1, 1], None)
}
