use super::*;
use crate::braid::{build_b, sigma_ass, sigma_bi};
use crate::exactnum::Field;
use crate::hopf::{group_algebra, sweedler_h4};
use proptest::prelude::*;

fn q() -> Field {
    Field::Rational
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn rank_one(h: &crate::hopf::Bialgebra) -> BraidedSystem {
    let a = h.algebra();
    BraidedSystem::single(a.space.clone(), sigma_ass(&a)).unwrap().with_algebras(vec![a]).unwrap()
}

fn v(colors: Vec<usize>, i: usize) -> ColoredVector {
    ColoredVector::new(colors, vec![(i, q().one())])
}

#[test]
fn shuffle_set_sizes() {
    for n in 0..=8 {
        for p in 0..=n {
            assert_eq!(shuffle_set(&[p, n - p]).len(), binomial(n, p), "({p},{})", n - p);
        }
    }
    assert_eq!(shuffle_set(&[1, 2, 1]).len(), 12);
    let sh11 = shuffle_set(&[1, 1]);
    assert_eq!(sh11, vec![Perm::identity(2), Perm::simple(2, 1)]);
    assert_eq!(shuffle_set(&[0, 3]), vec![Perm::identity(3)]);
}

#[test]
fn shuffle_set_matches_brute_force() {
    for blocks in [vec![2, 2], vec![1, 2, 1], vec![3, 1], vec![2, 1, 2]] {
        let n: usize = blocks.iter().sum();
        let mut starts = vec![];
        let mut acc = 0;
        for &b in &blocks {
            starts.push((acc, acc + b));
            acc += b;
        }
        let brute: Vec<Perm> = Perm::all(n)
            .into_iter()
            .filter(|t| starts.iter().all(|&(a, b)| (a..b.saturating_sub(1)).all(|j| t.apply(j) < t.apply(j + 1))))
            .collect();
        assert_eq!(shuffle_set(&blocks), brute);
    }
}

#[test]
fn matsumoto_examples() {
    assert!(matsumoto_lift(&Perm::identity(3)).is_empty());
    let t = Perm::from_word(3, &[1, 2, 1]);
    let b = matsumoto_lift(&t);
    assert_eq!(b.len(), 3);
    assert_eq!(b.permutation(), t);
    let w0 = Perm::new(vec![3, 2, 1, 0]).unwrap();
    assert_eq!(matsumoto_lift(&w0).len(), 6);
    assert!(BraidWord::new(3, vec![3]).is_err());
    assert_eq!(BraidWord::new(3, vec![1, 2]).unwrap().to_string(), "σ1 σ2");
}

#[test]
fn braid_action_examples() {
    let h = group_algebra(q(), 2);
    let s = build_b(&h);
    let x = v(vec![0, 1], 2 + 1);
    let empty = BraidWord::new(2, vec![]).unwrap();
    assert_eq!(braid_action(&s, &empty, &x).unwrap(), Some(x.clone()));
    let s1 = BraidWord::new(2, vec![1]).unwrap();
    let y = braid_action(&s, &s1, &x).unwrap().unwrap();
    assert_eq!(y.colors, vec![1, 0]);
    assert_eq!(y.coeffs, sigma_bi(&h).apply(&x.coeffs));
    assert_eq!(y.coeffs, vec![(1, q().one())]);
    assert_eq!(braid_action(&s, &s1, &v(vec![1, 0], 1)).unwrap(), None);
    assert!(braid_action(&s, &BraidWord::new(3, vec![1]).unwrap(), &x).is_err());
}

#[test]
fn shuffle_examples_rank_one() {
    let s = rank_one(&group_algebra(q(), 2));
    let g = v(vec![0], 1);
    let gg = qsh_multiply(&s, &g, &g).unwrap();
    assert_eq!(gg.colors, vec![0, 0]);
    assert_eq!(gg.coeffs, vec![(0, q().one()), (3, q().one())]);
    let terms = qcosh(&s, &[1, 1], &[0, 0]).unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0].map.apply(&[(3, q().one())]), vec![(0, q().one()), (3, q().one())]);
    let one = ColoredVector::unit(&s);
    assert_eq!(qsh_multiply(&s, &one, &gg).unwrap(), gg);
    assert_eq!(qsh_multiply(&s, &gg, &one).unwrap(), gg);
}

#[test]
fn order_preconditions() {
    let s = build_b(&group_algebra(q(), 2));
    assert!(qsh_multiply(&s, &v(vec![0, 1], 0), &v(vec![0], 0)).is_err());
    assert!(qcosh(&s, &[1, 1], &[1, 0]).is_err());
    assert!(qcosh(&s, &[1, 2], &[0, 1]).is_err());
}

#[test]
fn shuffle_is_associative() {
    let b = build_b(&group_algebra(q(), 2));
    assert!(check_qsh_associativity(&b, 3).unwrap().is_clean());
    let h4 = rank_one(&sweedler_h4(q()));
    assert!(check_qsh_associativity(&h4, 3).unwrap().is_clean());
}

#[test]
fn non_braided_shuffle_fails_associativity() {
    let h = group_algebra(q(), 2);
    let two = q().from_i64(2);
    let mul = LinMap::from_triplets(q(), 2, 4, [(0, 0, q().one()), (1, 1, q().one()), (1, 2, two), (0, 3, q().one())]).unwrap();
    let a = crate::hopf::Algebra::new_unchecked(h.space.clone(), mul, h.unit.clone()).unwrap();
    let s = BraidedSystem::single(a.space.clone(), sigma_ass(&a)).unwrap();
    assert!(!check_qsh_associativity(&s, 3).unwrap().is_clean());
}

/// `(Δ ⊗ id) Δ = (id ⊗ Δ) Δ = Δ_{p,q,r}` on every ordered summand.
fn check_coassociativity(s: &BraidedSystem, max_degree: usize) {
    let f = s.field();
    for n in 0..=max_degree {
        for colors in ordered_words(s.rank(), n) {
            for p in 0..=n {
                for q in 0..=n - p {
                    let r = n - p - q;
                    let mut expected: BTreeMap<Vec<Vec<usize>>, LinMap> = BTreeMap::new();
                    for t in qcosh(s, &[p, q, r], &colors).unwrap() {
                        expected.insert(t.blocks, t.map);
                    }
                    let mut left: BTreeMap<Vec<Vec<usize>>, LinMap> = BTreeMap::new();
                    for outer in qcosh(s, &[p + q, r], &colors).unwrap() {
                        let rd: usize = color_dims(s, &outer.blocks[1]).iter().product();
                        for inner in qcosh(s, &[p, q], &outer.blocks[0]).unwrap() {
                            let m = inner.map.kron(&LinMap::identity(f, rd)).compose(&outer.map).unwrap();
                            let key = vec![inner.blocks[0].clone(), inner.blocks[1].clone(), outer.blocks[1].clone()];
                            let e = left.remove(&key);
                            left.insert(key, match e { Some(a) => a.add(&m).unwrap(), None => m });
                        }
                    }
                    let mut right: BTreeMap<Vec<Vec<usize>>, LinMap> = BTreeMap::new();
                    for outer in qcosh(s, &[p, q + r], &colors).unwrap() {
                        let ld: usize = color_dims(s, &outer.blocks[0]).iter().product();
                        for inner in qcosh(s, &[q, r], &outer.blocks[1]).unwrap() {
                            let m = LinMap::identity(f, ld).kron(&inner.map).compose(&outer.map).unwrap();
                            let key = vec![outer.blocks[0].clone(), inner.blocks[0].clone(), inner.blocks[1].clone()];
                            let e = right.remove(&key);
                            right.insert(key, match e { Some(a) => a.add(&m).unwrap(), None => m });
                        }
                    }
                    assert_eq!(left, expected, "{colors:?} {p} {q} {r}");
                    assert_eq!(right, expected, "{colors:?} {p} {q} {r}");
                }
            }
        }
    }
}

#[test]
fn coshuffle_is_coassociative() {
    check_coassociativity(&build_b(&group_algebra(q(), 2)), 3);
    check_coassociativity(&rank_one(&sweedler_h4(q())), 3);
    check_coassociativity(&build_b(&sweedler_h4(q())).negate(), 3);
}

#[test]
fn matsumoto_well_defined_on_b_h4() {
    let s = build_b(&sweedler_h4(q()));
    let colors_all: Vec<Vec<usize>> = (0..16).map(|m| (0..4).map(|b| (m >> (3 - b)) & 1).collect()).collect();
    for theta in Perm::all(4) {
        let words = theta.all_reduced_words();
        assert!(words.contains(&theta.reduced_word()));
        for colors in &colors_all {
            let first = braid_operator(&s, &BraidWord::new(4, words[0].clone()).unwrap(), colors).unwrap();
            for w in &words[1..] {
                let other = braid_operator(&s, &BraidWord::new(4, w.clone()).unwrap(), colors).unwrap();
                assert_eq!(first, other, "{theta} {colors:?} {w:?}");
            }
        }
    }
}

proptest! {
    #[test]
    fn lift_has_inversion_length(images in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle()) {
        let t = Perm::new(images).unwrap();
        let b = matsumoto_lift(&t);
        prop_assert_eq!(b.len(), t.inversions());
        prop_assert_eq!(b.permutation(), t);
    }

    #[test]
    fn shuffles_are_increasing_on_blocks(p in 0usize..4, q in 0usize..4, r in 0usize..3) {
        let set = shuffle_set(&[p, q, r]);
        let expected = (1..=p + q + r).product::<usize>() / ((1..=p).product::<usize>() * (1..=q).product::<usize>() * (1..=r).product::<usize>());
        prop_assert_eq!(set.len(), expected);
        for t in set {
            for (a, b) in [(0, p), (p, p + q), (p + q, p + q + r)] {
                for j in a..b.saturating_sub(1) {
                    prop_assert!(t.apply(j) < t.apply(j + 1));
                }
            }
        }
    }
}
