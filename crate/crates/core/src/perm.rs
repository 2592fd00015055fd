//! Permutations of `{0, .., n-1}` in one-line form.
//!
//! `Perm(v)` sends `j` to `v[j]`. Products compose as functions:
//! `(a * b)(j) = a(b(j))`. Adjacent transpositions `s_i` are numbered from 1,
//! `s_i` swapping positions `i` and `i+1` (1-based).

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({self})")
    }
}

/// One-line notation, 1-based: `[2 1 3]`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, "]")
    }
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    /// Checks that `images` is a bijection of `0..len`.
    pub fn new(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Parse(format!("not a permutation: {images:?}")));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    /// The adjacent transposition `s_i` in `S_n`, `1 <= i < n`.
    pub fn simple(n: usize, i: usize) -> Perm {
        assert!(i >= 1 && i < n, "s_{i} outside S_{n}");
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i - 1, i);
        Perm(v)
    }

    /// Product `s_{w[0]} s_{w[1]} ...` of adjacent transpositions.
    pub fn from_word(n: usize, word: &[usize]) -> Perm {
        word.iter()
            .fold(Perm::identity(n), |acc, &i| acc.then_after(&Perm::simple(n, i)))
    }

    /// Product of cycles given with 1-based entries, rightmost cycle first.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut acc = Perm::identity(n);
        for c in cycles.iter().rev() {
            let mut v: Vec<usize> = (0..n).collect();
            for (k, &x) in c.iter().enumerate() {
                let y = c[(k + 1) % c.len()];
                if x == 0 || x > n || y == 0 || y > n {
                    return Err(Error::Parse(format!("cycle entry out of range 1..={n}")));
                }
                v[x - 1] = y - 1;
            }
            let cyc = Perm::new(v).map_err(|_| Error::Parse(format!("bad cycle {c:?}")))?;
            acc = cyc.then_after(&acc);
        }
        Ok(acc)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, j: usize) -> usize {
        self.0[j]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self * other`, i.e. `other` first.
    pub fn then_after(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len());
        Perm(other.0.iter().map(|&j| self.0[j]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.len()];
        for (j, &x) in self.0.iter().enumerate() {
            v[x] = j;
        }
        Perm(v)
    }

    pub fn inversions(&self) -> usize {
        let v = &self.0;
        (0..v.len())
            .map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count())
            .sum()
    }

    /// A reduced word `[i_1, .., i_k]` with `self = s_{i_1} ... s_{i_k}`,
    /// obtained by repeatedly splitting off the leftmost descent on the right.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        let mut rev = Vec::new();
        while let Some(i) = (0..v.len().saturating_sub(1)).find(|&i| v[i] > v[i + 1]) {
            v.swap(i, i + 1);
            rev.push(i + 1);
        }
        rev.reverse();
        rev
    }

    /// All reduced words, by brute force over descents. Exponential; for
    /// small tests only.
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        fn go(v: &mut Vec<usize>, suffix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let descents: Vec<usize> = (0..v.len().saturating_sub(1))
                .filter(|&i| v[i] > v[i + 1])
                .collect();
            if descents.is_empty() {
                out.push(suffix.iter().rev().copied().collect());
                return;
            }
            for i in descents {
                v.swap(i, i + 1);
                suffix.push(i + 1);
                go(v, suffix, out);
                suffix.pop();
                v.swap(i, i + 1);
            }
        }
        let mut out = Vec::new();
        go(&mut self.0.clone(), &mut Vec::new(), &mut out);
        out
    }

    pub fn all(n: usize) -> Vec<Perm> {
        fn heap(k: usize, v: &mut Vec<usize>, out: &mut Vec<Perm>) {
            if k <= 1 {
                out.push(Perm(v.clone()));
                return;
            }
            for i in 0..k {
                heap(k - 1, v, out);
                if k.is_multiple_of(2) {
                    v.swap(i, k - 1);
                } else {
                    v.swap(0, k - 1);
                }
            }
        }
        let mut out = Vec::new();
        heap(n, &mut (0..n).collect(), &mut out);
        out.sort();
        out
    }

    /// Parses one-line notation (`"2 1 3 4"`), a word in simple transpositions
    /// (`"s1 s3"`), or cycle notation (`"(1,4)(2,3)"`). `n` fixes the size for
    /// the last two forms.
    pub fn parse(s: &str, n: usize) -> Result<Perm> {
        let t = s.trim();
        if t.is_empty() || t == "id" || t == "e" {
            return Ok(Perm::identity(n));
        }
        if t.starts_with('(') {
            let mut cycles = Vec::new();
            for chunk in t.split('(').skip(1) {
                let body = chunk
                    .trim()
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unbalanced cycle in {s:?}")))?;
                let c = body
                    .split(|ch: char| ch == ',' || ch.is_whitespace())
                    .filter(|x| !x.is_empty())
                    .map(|x| x.parse::<usize>().map_err(|_| Error::Parse(format!("bad cycle entry {x:?}"))))
                    .collect::<Result<Vec<_>>>()?;
                cycles.push(c);
            }
            return Perm::from_cycles(n, &cycles);
        }
        let toks: Vec<&str> = t.split(|c: char| c.is_whitespace() || c == ',').filter(|x| !x.is_empty()).collect();
        if toks.iter().all(|x| x.starts_with('s')) {
            let word = toks
                .iter()
                .map(|x| {
                    let i: usize = x[1..]
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad generator {x:?}")))?;
                    if i == 0 || i >= n {
                        return Err(Error::Parse(format!("generator {x} outside S_{n}")));
                    }
                    Ok(i)
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(Perm::from_word(n, &word));
        }
        let images = toks
            .iter()
            .map(|x| match x.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(Error::Parse(format!("bad one-line entry {x:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if images.len() != n {
            return Err(Error::Parse(format!("expected {n} entries, got {}", images.len())));
        }
        Perm::new(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parsing_forms_agree() {
        let a = Perm::parse("2 1 3 4", 4).unwrap();
        assert_eq!(a, Perm::parse("s1", 4).unwrap());
        assert_eq!(Perm::parse("(1,2)", 4).unwrap(), a);
        assert_eq!(Perm::parse("(1,2,3,4)", 4).unwrap().images(), &[1, 2, 3, 0]);
        assert!(Perm::parse("1 1 2", 3).is_err());
        assert!(Perm::parse("s4", 4).is_err());
        assert!(Perm::parse("2 1", 3).is_err());
    }

    #[test]
    fn reduced_words() {
        assert!(Perm::identity(3).reduced_word().is_empty());
        let w0 = Perm(vec![3, 2, 1, 0]);
        assert_eq!(w0.reduced_word().len(), 6);
        let p = Perm::from_word(3, &[1, 2, 1]);
        assert_eq!(p.reduced_word().len(), 3);
        assert_eq!(p.all_reduced_words().len(), 2);
    }

    #[test]
    fn all_has_factorial_size() {
        assert_eq!(Perm::all(4).len(), 24);
        assert_eq!(Perm::all(0).len(), 1);
    }

    proptest! {
        #[test]
        fn reduced_word_round_trips(v in Just((0..5usize).collect::<Vec<_>>()).prop_shuffle()) {
            let p = Perm::new(v).unwrap();
            let w = p.reduced_word();
            prop_assert_eq!(w.len(), p.inversions());
            prop_assert_eq!(Perm::from_word(5, &w), p.clone());
            prop_assert!(p.then_after(&p.inverse()).is_identity());
        }
    }
}
