//! Permutations of `{1..n}` in one-line notation.
//!
//! Composition is as functions: `(s * p)(k) = s(p(k))`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest supported degree.
pub const MAX_DEGREE: usize = 16;

/// One-line images with a cached inverse, both stored 0-based.
#[derive(Clone, Copy)]
pub struct Permutation {
    n: u8,
    img: [u8; MAX_DEGREE],
    inv: [u8; MAX_DEGREE],
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_DEGREE, "degree {n} exceeds {MAX_DEGREE}");
        let mut img = [0u8; MAX_DEGREE];
        for (k, slot) in img.iter_mut().enumerate().take(n) {
            *slot = k as u8;
        }
        Permutation { n: n as u8, img, inv: img }
    }

    /// From 1-based images `(s(1), ..., s(n))`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::Precondition(format!("degree {n} exceeds {MAX_DEGREE}")));
        }
        let mut img = [0u8; MAX_DEGREE];
        let mut inv = [u8::MAX; MAX_DEGREE];
        for (k, &v) in images.iter().enumerate() {
            if v == 0 || v > n || inv[v - 1] != u8::MAX {
                return Err(Error::Parse(format!("not a permutation: {images:?}")));
            }
            img[k] = (v - 1) as u8;
            inv[v - 1] = k as u8;
        }
        for slot in inv.iter_mut().skip(n) {
            *slot = 0;
        }
        Ok(Permutation { n: n as u8, img, inv })
    }

    /// The transposition `s_pq` (1-based); `p == q` gives the identity.
    pub fn transposition(n: usize, p: usize, q: usize) -> Self {
        assert!(p >= 1 && q >= 1 && p <= n && q <= n, "({p},{q}) outside 1..={n}");
        let mut s = Self::identity(n);
        s.img.swap(p - 1, q - 1);
        s.inv.swap(p - 1, q - 1);
        s
    }

    /// `s_k = s_{k,k+1}`.
    pub fn adjacent(n: usize, k: usize) -> Self {
        Self::transposition(n, k, k + 1)
    }

    /// The shuffle `k -> l + k` for `k <= m`, `m + p -> p`; one-line
    /// `(l+1, ..., l+m, 1, ..., l)`. Either block may be empty.
    pub fn tau(l: usize, m: usize) -> Self {
        let images: Vec<usize> = (1..=m).map(|k| l + k).chain(1..=l).collect();
        Self::from_images(&images).expect("tau is a bijection")
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    /// `s(k)`, 1-based.
    pub fn apply(&self, k: usize) -> usize {
        debug_assert!(k >= 1 && k <= self.degree());
        self.img[k - 1] as usize + 1
    }

    /// `s^{-1}(k)`, 1-based.
    pub fn preimage(&self, k: usize) -> usize {
        debug_assert!(k >= 1 && k <= self.degree());
        self.inv[k - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.img[..self.degree()].iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.degree()).all(|k| self.img[k] as usize == k)
    }

    /// `self * other`, i.e. `k -> self(other(k))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n, other.n, "degree mismatch");
        let mut out = *self;
        for k in 0..self.degree() {
            let v = self.img[other.img[k] as usize];
            out.img[k] = v;
            out.inv[v as usize] = k as u8;
        }
        out
    }

    pub fn inverse(&self) -> Permutation {
        Permutation { n: self.n, img: self.inv, inv: self.img }
    }

    /// Acts on `{l+1, ..., l+degree}` inside `S_total`, fixing everything else.
    pub fn shifted(&self, l: usize, total: usize) -> Permutation {
        assert!(l + self.degree() <= total);
        let mut images: Vec<usize> = (1..=total).collect();
        for k in 1..=self.degree() {
            images[l + k - 1] = l + self.apply(k);
        }
        Self::from_images(&images).expect("shifted permutation")
    }

    pub fn inversions(&self) -> usize {
        let n = self.degree();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.img[i] > self.img[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Smallest `k` with `length(s_k * self) < length(self)`, so that
    /// `self = s_k * rest` with `rest` shorter.
    pub fn left_descent(&self) -> Option<usize> {
        (1..self.degree()).find(|&k| self.inv[k - 1] > self.inv[k])
    }

    /// Reduced word `[k_1, ..., k_r]` with `self = s_{k_1} ... s_{k_r}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = *self;
        while let Some(k) = cur.left_descent() {
            word.push(k);
            cur = Permutation::adjacent(cur.degree(), k).compose(&cur);
        }
        word
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.img[k] as usize;
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lens).expect("sorted cycle lengths")
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Self::from_images(&cur).expect("identity")];
        // next lexicographic permutation
        loop {
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor");
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Self::from_images(&cur).expect("permutation"));
        }
    }
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.img[..self.degree()] == other.img[..other.degree()]
    }
}

impl Eq for Permutation {}

impl std::hash::Hash for Permutation {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.img[..self.degree()].hash(state);
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.img[..self.degree()].cmp(&other.img[..other.degree()]))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        write!(f, "{}", v.join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation::identity(0));
        }
        let images = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad image {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(&images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn tau_examples() {
        assert_eq!(Permutation::tau(2, 1), p("3,1,2"));
        assert_eq!(Permutation::tau(1, 1), Permutation::transposition(2, 1, 2));
        assert_eq!(Permutation::tau(1, 2), p("2,3,1"));
        assert!(Permutation::tau(3, 0).is_identity());
    }

    #[test]
    fn composition_is_functional() {
        let s = p("2,3,1");
        let t = p("2,1,3");
        // (s t)(1) = s(t(1)) = s(2) = 3
        assert_eq!(s.compose(&t).apply(1), 3);
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(3));
    }

    #[test]
    fn reduced_words_rebuild() {
        for g in Permutation::all(5) {
            let word = g.reduced_word();
            assert_eq!(word.len(), g.inversions());
            let mut acc = Permutation::identity(5);
            for &k in &word {
                acc = acc.compose(&Permutation::adjacent(5, k));
            }
            assert_eq!(acc, g);
        }
    }

    #[test]
    fn signs_and_cycles() {
        assert_eq!(p("2,1").sign(), -1);
        assert_eq!(p("2,3,1").sign(), 1);
        assert_eq!(p("2,3,1").cycle_type(), "3".parse().unwrap());
        assert_eq!(p("2,1,4,3,5").cycle_type(), "2,2,1".parse().unwrap());
        assert_eq!(Permutation::all(4).len(), 24);
    }

    #[test]
    fn shifting() {
        let s = Permutation::transposition(2, 1, 2).shifted(2, 4);
        assert_eq!(s, Permutation::transposition(4, 3, 4));
    }

    #[test]
    fn text_round_trip() {
        assert_eq!(p("3,1,2").to_string(), "3,1,2");
        assert!("1,1".parse::<Permutation>().is_err());
        assert!("0,1".parse::<Permutation>().is_err());
    }
}
