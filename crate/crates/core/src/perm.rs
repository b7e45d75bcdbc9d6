//! Permutations of {1..k} for small k, stored inline.

use std::fmt;

use crate::error::{AlgebraError, Result};

/// Largest supported rank.
pub const MAX_K: usize = 8;

/// Permutation in one-line notation, zero-based internally.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    len: u8,
    img: [u8; MAX_K],
}

impl Perm {
    pub fn identity(k: usize) -> Self {
        assert!(k <= MAX_K, "rank {k} exceeds {MAX_K}");
        let mut img = [0u8; MAX_K];
        for (i, x) in img.iter_mut().enumerate().take(k) {
            *x = i as u8;
        }
        Perm { len: k as u8, img }
    }

    /// Builds from a one-line list of images in 1..=k.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let k = images.len();
        if k > MAX_K {
            return Err(AlgebraError::IndexOutOfRange { index: k, max: MAX_K });
        }
        let mut seen = [false; MAX_K];
        let mut img = [0u8; MAX_K];
        for (i, &x) in images.iter().enumerate() {
            if x == 0 || x > k || seen[x - 1] {
                return Err(AlgebraError::MalformedOrder(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
            img[i] = (x - 1) as u8;
        }
        Ok(Perm { len: k as u8, img })
    }

    /// Transposition of the one-based points `i` and `j`.
    pub fn transposition(k: usize, i: usize, j: usize) -> Result<Self> {
        for x in [i, j] {
            if x == 0 || x > k {
                return Err(AlgebraError::IndexOutOfRange { index: x, max: k });
            }
        }
        let mut p = Perm::identity(k);
        p.img.swap(i - 1, j - 1);
        Ok(p)
    }

    pub fn k(&self) -> usize {
        self.len as usize
    }

    /// Image of the zero-based point `i`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    /// Image of a one-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.at(i - 1) + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        (0..self.k()).map(|i| self.at(i) + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.k()).all(|i| self.at(i) == i)
    }

    /// `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.len, other.len);
        let mut img = [0u8; MAX_K];
        for (i, x) in img.iter_mut().enumerate().take(self.k()) {
            *x = self.img[other.img[i] as usize];
        }
        Perm { len: self.len, img }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = [0u8; MAX_K];
        for i in 0..self.k() {
            img[self.img[i] as usize] = i as u8;
        }
        Perm { len: self.len, img }
    }

    pub fn inversions(&self) -> usize {
        let k = self.k();
        (0..k).map(|i| (i + 1..k).filter(|&j| self.img[i] > self.img[j]).count()).sum()
    }

    /// Sign as +1 or -1.
    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Position in the lexicographic list of all permutations of the same rank.
    pub fn rank(&self) -> usize {
        let k = self.k();
        let mut r = 0;
        for i in 0..k {
            let smaller = (i + 1..k).filter(|&j| self.img[j] < self.img[i]).count();
            r = r * (k - i) + smaller;
        }
        r
    }

    pub fn unrank(k: usize, mut r: usize) -> Perm {
        let mut digits = vec![0usize; k];
        for i in (0..k).rev() {
            let base = k - i;
            digits[i] = r % base;
            r /= base;
        }
        let mut pool: Vec<u8> = (0..k as u8).collect();
        let mut img = [0u8; MAX_K];
        for i in 0..k {
            img[i] = pool.remove(digits[i]);
        }
        Perm { len: k as u8, img }
    }

    /// All permutations of rank `k` in lexicographic order.
    pub fn all(k: usize) -> Vec<Perm> {
        (0..factorial(k)).map(|r| Perm::unrank(k, r)).collect()
    }

    /// All permutations of `k` points that fix everything outside `support`
    /// (one-based), lexicographic in one-line notation.
    pub fn all_on(k: usize, support: &[usize]) -> Vec<Perm> {
        Perm::all(support.len())
            .into_iter()
            .map(|q| {
                let mut p = Perm::identity(k);
                for (a, &x) in support.iter().enumerate() {
                    p.img[x - 1] = (support[q.at(a)] - 1) as u8;
                }
                p
            })
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect()
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|x| x.to_string()).collect();
        write!(f, "perm({})", parts.join(" "))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_roundtrip() {
        for k in 0..=5 {
            let all = Perm::all(k);
            assert_eq!(all.len(), factorial(k));
            for (r, p) in all.iter().enumerate() {
                assert_eq!(p.rank(), r);
            }
            assert!(all.windows(2).all(|w| w[0].one_line() < w[1].one_line()));
        }
    }

    #[test]
    fn transposition_squares_to_identity() {
        let s = Perm::transposition(4, 2, 4).unwrap();
        assert_eq!(s.one_line(), vec![1, 4, 3, 2]);
        assert!(s.compose(&s).is_identity());
        assert_eq!(s.sign(), -1);
        assert!(Perm::transposition(3, 1, 4).is_err());
    }

    #[test]
    fn support_subgroup() {
        let g = Perm::all_on(4, &[1, 3]);
        assert_eq!(g.len(), 2);
        assert_eq!(g[1].one_line(), vec![3, 2, 1, 4]);
    }

    proptest! {
        #[test]
        fn group_laws(a in 0usize..120, b in 0usize..120, c in 0usize..120) {
            let (x, y, z) = (Perm::unrank(5, a), Perm::unrank(5, b), Perm::unrank(5, c));
            prop_assert_eq!(x.compose(&y).compose(&z), x.compose(&y.compose(&z)));
            prop_assert!(x.compose(&x.inverse()).is_identity());
            prop_assert_eq!(x.compose(&y).sign(), x.sign() * y.sign());
        }
    }
}
