use super::*;
use crate::braid::{bialgebra_crossed_data, sigma_bi};
use crate::hopf::{check_uaa, idempotent_monoid_bialgebra, sweedler_h4};
use braidkit_oracle::{dense, group};

fn q() -> Field {
    Field::Rational
}

fn from_oracle(m: &dense::Matrix) -> LinMap {
    let cols = m.first().map_or(0, |r| r.len());
    let d: Vec<Vec<Scalar>> = m.iter().map(|r| r.iter().map(|v| q().from_rational(v).unwrap()).collect()).collect();
    LinMap::from_dense(q(), &d, cols)
}

fn e(i: usize) -> Vec<(usize, Scalar)> {
    vec![(i, q().one())]
}

/// `X ⊗ Y ⊗ X ⊗ Y -> X ⊗ X ⊗ Y ⊗ Y`.
fn middle_flip(x: usize, y: usize) -> dense::Matrix {
    let flip = dense::permutation(&[1, 0], &[y, x]);
    dense::kron(&dense::kron(&dense::identity(x), &flip), &dense::identity(y))
}

#[test]
fn heisenberg_matches_dense_formula() {
    for n in 1..=3 {
        let h = group_algebra(q(), n);
        let t = heisenberg(&h).unwrap();
        let sigma = group::sigma_bi(n);
        let inner = dense::kron(&dense::kron(&dense::identity(n), &sigma), &dense::identity(n));
        let expected = dense::mul(&dense::kron(&group::dual_mul(n), &group::mul(n)), &inner);
        assert_eq!(t.algebra.mul, from_oracle(&expected));
        let unit = dense::kron(&group::dual_unit(n), &group::unit(n));
        assert_eq!(t.algebra.unit, from_oracle(&unit));
        assert!(check_associativity(&t.algebra, AssocMode::Exhaustive).is_clean());
    }
    // (δ_1 ⊗ g)(δ_g ⊗ 1) = δ_1 ⊗ g
    let t = heisenberg(&group_algebra(q(), 2)).unwrap();
    assert_eq!(basis_product(&t.algebra, 1, 2), e(1));
    assert_eq!(t.algebra.unit.apply(&e(0)), vec![(0, q().one()), (2, q().one())]);
}

#[test]
fn transposition_gives_tensor_product_algebra() {
    let (a, b) = (group_algebra(q(), 2).algebra(), group_algebra(q(), 3).algebra());
    let sys = BraidedSystem::new(q(), vec![a.space.clone(), b.space.clone()], |i, j| match (i, j) {
        (0, 0) => sigma_ass(&a),
        (1, 1) => sigma_ass_r(&b),
        _ => swap(q(), 2, 3),
    })
    .unwrap()
    .with_algebras(vec![a, b])
    .unwrap();
    let t = braided_tensor_product(&sys, "tensor").unwrap();
    let flip = middle_flip(3, 2);
    let expected = dense::mul(&dense::kron(&group::mul(3), &group::mul(2)), &flip);
    assert_eq!(t.algebra.mul, from_oracle(&expected));
    assert_eq!(t.algebra.space.dim(), 6);
}

#[test]
fn rank_one_returns_the_algebra() {
    for h in [group_algebra(q(), 3), sweedler_h4(q()), idempotent_monoid_bialgebra(q())] {
        let a = h.algebra();
        for s in [sigma_ass(&a), sigma_ass_r(&a)] {
            let sys = BraidedSystem::single(a.space.clone(), s).unwrap().with_algebras(vec![a.clone()]).unwrap();
            let t = braided_tensor_product(&sys, "single").unwrap();
            assert_eq!(t.algebra.mul, a.mul);
            assert_eq!(t.algebra.unit, a.unit);
        }
    }
}

#[test]
fn diagonal_must_be_associativity_braiding() {
    let a = group_algebra(q(), 2).algebra();
    let sys = BraidedSystem::single(a.space.clone(), swap(q(), 2, 2)).unwrap().with_algebras(vec![a]).unwrap();
    let err = braided_tensor_product(&sys, "bad").unwrap_err();
    assert!(err.to_string().contains("σ_(1,1)"), "{err}");
}

#[test]
fn non_braided_system_is_refused() {
    let h = group_algebra(q(), 2);
    let comul = LinMap::from_triplets(q(), 4, 2, [(0, 0, q().one()), (3, 1, q().one()), (2, 1, q().one())]).unwrap();
    let bad = Bialgebra::new_unchecked(h.space.clone(), h.mul.clone(), h.unit.clone(), comul, h.counit.clone(), None).unwrap();
    let err = heisenberg(&bad).unwrap_err();
    assert!(err.to_string().contains("YBE"), "{err}");
}

#[test]
fn enveloping_algebra_of_commutative_algebra() {
    let a = group_algebra(q(), 2).algebra();
    let t = enveloping_algebra(&a).unwrap();
    let flip = middle_flip(2, 2);
    let expected = dense::mul(&dense::kron(&group::mul(2), &group::mul(2)), &flip);
    assert_eq!(t.algebra.mul, from_oracle(&expected));
    let h4 = sweedler_h4(q()).algebra();
    let env = enveloping_algebra(&h4).unwrap();
    assert!(check_associativity(&env.algebra, AssocMode::Exhaustive).is_clean());
    // (1 ⊗ x)(x ⊗ 1) = x ⊗ x and (x ⊗ 1)(x ⊗ 1) = x·^op x ⊗ 1 = 0
    assert_eq!(basis_product(&env.algebra, 2, 2 * 4), e(2 * 4 + 2));
    assert!(basis_product(&env.algebra, 2 * 4, 2 * 4).is_empty());
}

#[test]
fn sampled_and_exhaustive_modes_find_nonassociativity() {
    let h = group_algebra(q(), 2);
    let two = q().from_i64(2);
    let mul = LinMap::from_triplets(q(), 2, 4, [(0, 0, q().one()), (1, 1, q().one()), (1, 2, two), (0, 3, q().one())]).unwrap();
    let a = Algebra::new_unchecked(h.space.clone(), mul, h.unit.clone()).unwrap();
    assert!(check_associativity(&a, AssocMode::Exhaustive).mentions("associativity"));
    assert!(check_associativity(&a, AssocMode::Sample { count: 200, seed: 7 }).mentions("associativity"));
    let ok = sweedler_h4(q()).algebra();
    assert!(check_associativity(&ok, AssocMode::Sample { count: 200, seed: 7 }).is_clean());
}

#[test]
fn simple_transposition_iso_on_heisenberg() {
    let h = group_algebra(q(), 2);
    let t = heisenberg(&h).unwrap();
    let s1 = Perm::simple(2, 1);
    let (u, iso) = factor_permutation_iso(&t, &s1).unwrap();
    assert_eq!(iso, sigma_bi(&h).try_inverse().unwrap());
    assert!(check_associativity(&u.algebra, AssocMode::Exhaustive).is_clean());
    assert!(check_algebra_map(&iso, &t.algebra, &u.algebra).is_clean());
    assert_eq!(u.provenance.theta, Some(s1.clone()));
    let (back, iso2) = factor_permutation_iso(&u, &s1).unwrap();
    assert_eq!(back.algebra.mul, t.algebra.mul);
    assert!(iso2.compose(&iso).unwrap().is_identity());
}

#[test]
fn w_family_over_group_algebra() {
    let h = group_algebra(q(), 2);
    let w = w_algebra(&h).unwrap();
    assert_eq!(w.algebra.dim(), 16);
    assert!(check_uaa(&w.algebra).is_clean());
    for theta in Perm::all(4) {
        let (t, iso) = factor_permutation_iso(&w, &theta).unwrap();
        assert!(t.source.check_ybe().is_clean(), "{theta}");
        assert!(check_associativity(&t.algebra, AssocMode::Exhaustive).is_clean(), "{theta}");
        assert!(check_algebra_map(&iso, &w.algebra, &t.algebra).is_clean(), "{theta}");
    }
}

#[test]
fn isos_compose_along_products() {
    let h = sweedler_h4(q());
    let t = heisenberg(&h).unwrap();
    let s1 = Perm::simple(2, 1);
    let (u, a) = factor_permutation_iso(&t, &s1).unwrap();
    let (_, b) = factor_permutation_iso(&u, &s1).unwrap();
    assert!(b.compose(&a).unwrap().is_identity());
    let w = w_algebra(&group_algebra(q(), 2)).unwrap();
    let (x, y) = (named_member("X").unwrap(), named_member("Y").unwrap());
    let (wy, iy) = factor_permutation_iso(&w, &y).unwrap();
    let (wxy, ixy) = factor_permutation_iso(&wy, &x).unwrap();
    let (direct, idirect) = factor_permutation_iso(&w, &x.then_after(&y)).unwrap();
    assert_eq!(wxy.algebra.mul, direct.algebra.mul);
    assert_eq!(wxy.provenance.theta, direct.provenance.theta);
    assert_eq!(ixy.compose(&iy).unwrap(), idirect);
}

#[test]
fn named_members_reorder_factors() {
    let h = group_algebra(q(), 3);
    let (x, _) = theta_w(&h, &named_member("X").unwrap()).unwrap();
    let labels: Vec<&str> = x.source.components().iter().map(|c| c.label()).collect();
    assert_eq!(labels, vec!["(kZ3^cop)*", "kZ3*", "kZ3^op", "kZ3"]);
    assert!(named_member("Q").is_none());
}

#[test]
fn smash_and_crossed_products() {
    let h = group_algebra(q(), 2);
    let (lambda, rho) = sign_action(q());
    let a = h.algebra();
    let l = smash_left(&a, &h, &lambda).unwrap();
    let r = smash_right(&h, &a, &rho).unwrap();
    // (1 ⊗ g)(g ⊗ 1) = (g·g) ⊗ g = -g ⊗ g in A # H
    assert_eq!(basis_product(&l.algebra, 1, 2), vec![(3, q().from_i64(-1))]);
    for t in [&l, &r] {
        assert!(check_associativity(&t.algebra, AssocMode::Exhaustive).is_clean());
    }
    let two = two_sided_crossed(&group_crossed_data(q())).unwrap();
    assert_eq!(two.algebra.dim(), 8);
    assert!(check_associativity(&two.algebra, AssocMode::Exhaustive).is_clean());
    let data = bialgebra_crossed_data(&sweedler_h4(q()));
    let full = two_sided_crossed(&data).unwrap();
    assert!(check_associativity(&full.algebra, AssocMode::Exhaustive).is_clean());
    // a broken action is refused
    let mut bad = group_crossed_data(q());
    bad.lambda = bad.lambda.scale(&q().from_i64(2));
    assert!(two_sided_crossed(&bad).is_err());
}
