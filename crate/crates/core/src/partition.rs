//! Partitions, boxes, hooks and mixed hooks, and the two shape
//! constructions that pick out multiplicity-free components of an induced
//! module: adding the rows of `lam` to distinct rows of `mu` (gamma) and
//! adding its columns to distinct columns of `mu` (delta).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

/// Box in row `row`, column `col` (both 1-based).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BoxCoord {
    pub row: usize,
    pub col: usize,
}

impl BoxCoord {
    pub fn new(row: usize, col: usize) -> Self {
        BoxCoord { row, col }
    }

    /// Column minus row.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl Partition {
    /// Accepts trailing zeros and drops them; anything else out of order is
    /// an error.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("not a partition: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts, i.e. the first part of the conjugate.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// 1-based part; zero beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// 1-based part of the conjugate without building it.
    pub fn conj_part(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.0.iter().take_while(|&&p| p >= j).count()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        Partition((1..=first).map(|j| self.conj_part(j)).collect())
    }

    pub fn contains(&self, b: BoxCoord) -> bool {
        b.row >= 1 && b.col >= 1 && b.col <= self.part(b.row)
    }

    /// Boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = BoxCoord> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| BoxCoord::new(i + 1, j)))
    }

    /// `lam_i + lam'_j - i - j + 1`.
    pub fn hook(&self, b: BoxCoord) -> usize {
        assert!(self.contains(b), "box {b:?} outside {self}");
        self.part(b.row) + self.conj_part(b.col) + 1 - b.row - b.col
    }

    pub fn hooks(&self) -> Vec<usize> {
        self.boxes().map(|b| self.hook(b)).collect()
    }

    pub fn hook_product(&self) -> u128 {
        self.boxes().map(|b| self.hook(b) as u128).product()
    }

    /// Componentwise minimum, i.e. the intersection of diagrams.
    pub fn intersection(&self, other: &Partition) -> Partition {
        Partition(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Componentwise sum `(lam_1 + mu_1, lam_2 + mu_2, ...)`.
    pub fn row_sum(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition((1..=n).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// `(lam' + mu')'`.
    pub fn column_sum(&self, other: &Partition) -> Partition {
        self.conjugate().row_sum(&other.conjugate()).conjugate()
    }

    /// All partitions of `n`, in reverse lexicographic order
    /// (`(n)` first, `(1^n)` last).
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// `"3,2"`; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HookKind {
    /// `lam_i + mu'_j - i - j + 1`
    First,
    /// `lam'_j + mu_i - i - j + 1`
    Second,
}

/// Mixed hook length of a box in the intersection of `lam` and `mu`.
pub fn mixed_hook(lam: &Partition, mu: &Partition, b: BoxCoord, kind: HookKind) -> Result<i64> {
    if !lam.contains(b) || !mu.contains(b) {
        return Err(Error::Precondition(format!(
            "box ({},{}) is outside the intersection of {lam} and {mu}",
            b.row, b.col
        )));
    }
    let (i, j) = (b.row as i64, b.col as i64);
    let h = match kind {
        HookKind::First => lam.part(b.row) as i64 + mu.conj_part(b.col) as i64 - i - j + 1,
        HookKind::Second => lam.conj_part(b.col) as i64 + mu.part(b.row) as i64 - i - j + 1,
    };
    if h <= 0 {
        return Err(Error::Invariant(format!("non-positive mixed hook {h} at ({i},{j})")));
    }
    Ok(h)
}

/// Boxes of `outer` that are not boxes of `other`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewComplement {
    pub outer: Partition,
    pub inner: Partition,
    pub boxes: Vec<BoxCoord>,
}

impl SkewComplement {
    pub fn new(outer: &Partition, other: &Partition) -> Self {
        let inner = outer.intersection(other);
        let boxes = outer.boxes().filter(|&b| !inner.contains(b)).collect();
        SkewComplement { outer: outer.clone(), inner, boxes }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum IndexKind {
    /// One index per row of `lam` (length `lam'_1`).
    Rows,
    /// One index per column of `lam` (length `lam_1`).
    Columns,
}

/// Pairwise distinct positive indices, not necessarily increasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IndexSequence {
    values: Vec<usize>,
    kind: IndexKind,
}

impl PartialOrd for IndexKind {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IndexKind {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (*self as u8).cmp(&(*other as u8))
    }
}

impl IndexSequence {
    pub fn new(values: Vec<usize>, kind: IndexKind) -> Result<Self> {
        if values.contains(&0) {
            return Err(Error::Precondition("indices are 1-based".into()));
        }
        for (i, v) in values.iter().enumerate() {
            if values[..i].contains(v) {
                return Err(Error::Precondition(format!("index {v} repeats in {values:?}")));
            }
        }
        Ok(IndexSequence { values, kind })
    }

    pub fn rows(values: Vec<usize>) -> Result<Self> {
        Self::new(values, IndexKind::Rows)
    }

    pub fn columns(values: Vec<usize>) -> Result<Self> {
        Self::new(values, IndexKind::Columns)
    }

    /// `a_i = i` (or `b_j = j`).
    pub fn identity(len: usize, kind: IndexKind) -> Self {
        IndexSequence { values: (1..=len).collect(), kind }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn kind(&self) -> IndexKind {
        self.kind
    }

    /// 1-based access.
    pub fn get(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn parse(s: &str, kind: IndexKind) -> Result<Self> {
        let s = s.trim();
        let values = if s.is_empty() {
            Vec::new()
        } else {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad index {t:?}"))))
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(values, kind)
    }
}

impl fmt::Display for IndexSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.values.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", v.join(","))
    }
}

/// Outcome of a shape construction. A sequence that does not come out
/// weakly decreasing is an ordinary answer, not an error.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ShapeBuild {
    Accepted(Partition),
    /// `first_violation` is the 1-based position `b` with `seq_b < seq_{b+1}`.
    Rejected { first_violation: usize },
}

impl ShapeBuild {
    pub fn accepted(self) -> Option<Partition> {
        match self {
            ShapeBuild::Accepted(p) => Some(p),
            ShapeBuild::Rejected { .. } => None,
        }
    }
}

/// `seq_{idx_i} = base_{idx_i} + adds_i`, `seq_b = base_b` elsewhere.
fn place(base: &Partition, adds: &[usize], idx: &[usize]) -> ShapeBuild {
    let top = idx.iter().copied().max().unwrap_or(0).max(base.len());
    let mut seq: Vec<usize> = (1..=top).map(|b| base.part(b)).collect();
    for (a, &i) in adds.iter().zip(idx) {
        seq[i - 1] += a;
    }
    if let Some(k) = seq.windows(2).position(|w| w[0] < w[1]) {
        return ShapeBuild::Rejected { first_violation: k + 1 };
    }
    ShapeBuild::Accepted(Partition::new(seq).expect("weakly decreasing"))
}

fn check_kind(seq: &IndexSequence, kind: IndexKind, len: usize) -> Result<()> {
    if seq.kind != kind || seq.len() != len {
        return Err(Error::Precondition(format!(
            "expected a {kind:?} sequence of length {len}, got {:?} of length {}",
            seq.kind,
            seq.len()
        )));
    }
    Ok(())
}

/// `gamma_{a_i} = mu_{a_i} + lam_i`, `gamma_b = mu_b` elsewhere.
pub fn build_gamma(lam: &Partition, mu: &Partition, a: &IndexSequence) -> Result<ShapeBuild> {
    check_kind(a, IndexKind::Rows, lam.len())?;
    Ok(place(mu, lam.parts(), a.values()))
}

/// `delta'_{b_j} = mu'_{b_j} + lam'_j`, `delta'_b = mu'_b` elsewhere;
/// returns `delta` itself (the conjugate).
pub fn build_delta(lam: &Partition, mu: &Partition, b: &IndexSequence) -> Result<ShapeBuild> {
    check_kind(b, IndexKind::Columns, lam.part(1))?;
    Ok(match place(&mu.conjugate(), lam.conjugate().parts(), b.values()) {
        ShapeBuild::Accepted(d) => ShapeBuild::Accepted(d.conjugate()),
        r => r,
    })
}

/// Exclusive upper bound on useful indices: a position past
/// `base'_1 + adds.len()` would leave a zero entry before a nonzero one.
pub fn index_bound(lam: &Partition, mu: &Partition, kind: IndexKind) -> usize {
    match kind {
        IndexKind::Rows => mu.len() + lam.len(),
        IndexKind::Columns => mu.part(1) + lam.part(1),
    }
}

/// Every index sequence whose construction is accepted, sorted
/// lexicographically. Depth-first over positions with monotonicity pruning.
pub fn enumerate_index_sequences(
    lam: &Partition,
    mu: &Partition,
    kind: IndexKind,
) -> Vec<IndexSequence> {
    let (base, adds) = match kind {
        IndexKind::Rows => (mu.clone(), lam.parts().to_vec()),
        IndexKind::Columns => (mu.conjugate(), lam.conjugate().parts().to_vec()),
    };
    let bound = index_bound(lam, mu, kind);

    struct Search<'a> {
        base: &'a Partition,
        adds: &'a [usize],
        bound: usize,
        // assignment[i] = position chosen for add i (0 = unassigned)
        assignment: Vec<usize>,
        out: Vec<Vec<usize>>,
    }

    impl Search<'_> {
        fn go(&mut self, pos: usize, prev: usize, remaining: usize) {
            if remaining == 0 {
                // Everything after `pos` is base itself, already decreasing,
                // but its first entry must not exceed the previous value.
                if self.base.part(pos) <= prev {
                    self.out.push(self.assignment.clone());
                }
                return;
            }
            if pos > self.bound || self.bound - pos + 1 < remaining {
                return;
            }
            let b = self.base.part(pos);
            if b <= prev && (b > 0 || remaining == 0) {
                self.go(pos + 1, b, remaining);
            }
            for i in 0..self.adds.len() {
                if self.assignment[i] != 0 {
                    continue;
                }
                // equal adds give distinct sequences; all are kept
                let v = b + self.adds[i];
                if v > prev {
                    continue;
                }
                self.assignment[i] = pos;
                self.go(pos + 1, v, remaining - 1);
                self.assignment[i] = 0;
            }
        }
    }

    let mut s = Search { base: &base, adds: &adds, bound, assignment: vec![0; adds.len()], out: Vec::new() };
    s.go(1, usize::MAX, adds.len());
    let mut out: Vec<IndexSequence> =
        s.out.into_iter().map(|values| IndexSequence { values, kind }).collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("3,2").conjugate(), p("2,2,1"));
        assert_eq!(p("").conjugate(), p(""));
        assert_eq!(p("4,4").conjugate(), p("2,2,2,2"));
    }

    #[test]
    fn parsing() {
        assert_eq!(p("3,2,0"), p("3,2"));
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
        assert_eq!(p("3,2").to_string(), "3,2");
        assert_eq!(p("").size(), 0);
    }

    #[test]
    fn contents() {
        assert_eq!(BoxCoord::new(1, 1).content(), 0);
        assert_eq!(BoxCoord::new(2, 1).content(), -1);
        assert_eq!(BoxCoord::new(1, 3).content(), 2);
    }

    #[test]
    fn hook_products() {
        assert_eq!(p("1").hook_product(), 1);
        assert_eq!(p("3,2").hooks(), vec![4, 3, 1, 2, 1]);
        assert_eq!(p("3,2").hook_product(), 24);
        assert_eq!(p("2,2").hook_product(), 12);
    }

    #[test]
    fn mixed_hook_examples() {
        let one = p("1");
        let b11 = BoxCoord::new(1, 1);
        assert_eq!(mixed_hook(&one, &one, b11, HookKind::First).unwrap(), 1);
        assert_eq!(mixed_hook(&one, &one, b11, HookKind::Second).unwrap(), 1);
        let (lam, mu) = (p("3,2"), p("2,1"));
        assert_eq!(mixed_hook(&lam, &mu, b11, HookKind::First).unwrap(), 4);
        assert_eq!(mixed_hook(&lam, &mu, b11, HookKind::Second).unwrap(), 3);
        let b21 = BoxCoord::new(2, 1);
        assert_eq!(mixed_hook(&lam, &mu, b21, HookKind::First).unwrap(), 2);
        assert_eq!(mixed_hook(&lam, &mu, b21, HookKind::Second).unwrap(), 1);
        assert!(mixed_hook(&lam, &mu, BoxCoord::new(1, 3), HookKind::First).is_err());
    }

    #[test]
    fn gamma_examples() {
        let a = IndexSequence::rows(vec![2, 1]).unwrap();
        assert_eq!(build_gamma(&p("3,2"), &p("2,1"), &a).unwrap(), ShapeBuild::Accepted(p("4,4")));
        let a = IndexSequence::rows(vec![1]).unwrap();
        assert_eq!(build_gamma(&p("1"), &p(""), &a).unwrap(), ShapeBuild::Accepted(p("1")));
        let a = IndexSequence::rows(vec![1, 2]).unwrap();
        assert_eq!(build_gamma(&p("1,1"), &p("1"), &a).unwrap(), ShapeBuild::Accepted(p("2,1")));
        let a = IndexSequence::rows(vec![1, 3]).unwrap();
        assert_eq!(
            build_gamma(&p("1,1"), &p("1"), &a).unwrap(),
            ShapeBuild::Rejected { first_violation: 2 }
        );
        // wrong length is a precondition failure, not a rejection
        assert!(build_gamma(&p("1,1"), &p("1"), &IndexSequence::rows(vec![1]).unwrap()).is_err());
    }

    #[test]
    fn delta_examples() {
        let b = IndexSequence::columns(vec![1]).unwrap();
        assert_eq!(build_delta(&p("1"), &p("1"), &b).unwrap(), ShapeBuild::Accepted(p("1,1")));
        assert_eq!(build_delta(&p("1,1"), &p("1"), &b).unwrap(), ShapeBuild::Accepted(p("1,1,1")));
        let b = IndexSequence::columns(vec![1, 2, 3]).unwrap();
        assert_eq!(
            build_delta(&p("3,2"), &p("2,1"), &b).unwrap(),
            ShapeBuild::Accepted(p("3,2,2,1"))
        );
    }

    #[test]
    fn index_sequence_enumeration() {
        let seqs = enumerate_index_sequences(&p("1"), &p(""), IndexKind::Rows);
        assert_eq!(seqs, vec![IndexSequence::rows(vec![1]).unwrap()]);

        let seqs: Vec<Vec<usize>> = enumerate_index_sequences(&p("1,1"), &p("1"), IndexKind::Rows)
            .into_iter()
            .map(|s| s.values().to_vec())
            .collect();
        assert_eq!(seqs, vec![vec![1, 2], vec![2, 1], vec![2, 3], vec![3, 2]]);

        let seqs: Vec<Vec<usize>> = enumerate_index_sequences(&p("3,2"), &p("2,1"), IndexKind::Rows)
            .into_iter()
            .map(|s| s.values().to_vec())
            .collect();
        assert!(seqs.contains(&vec![1, 2]));
        assert!(seqs.contains(&vec![2, 1]));
    }

    /// Brute force over a window wider than the bound: no accepted sequence
    /// may use an index beyond it.
    #[test]
    fn index_bound_is_exhaustive() {
        fn all_distinct(len: usize, max: usize) -> Vec<Vec<usize>> {
            if len == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for rest in all_distinct(len - 1, max) {
                for v in 1..=max {
                    if !rest.contains(&v) {
                        let mut s = rest.clone();
                        s.push(v);
                        out.push(s);
                    }
                }
            }
            out
        }
        for n in 1..=5 {
            for l in 1..=n {
                for lam in Partition::all_of_size(l) {
                    for mu in Partition::all_of_size(n - l) {
                        for kind in [IndexKind::Rows, IndexKind::Columns] {
                            let len = match kind {
                                IndexKind::Rows => lam.len(),
                                IndexKind::Columns => lam.part(1),
                            };
                            let bound = index_bound(&lam, &mu, kind);
                            let mut brute: Vec<IndexSequence> = all_distinct(len, bound + 3)
                                .into_iter()
                                .map(|v| IndexSequence::new(v, kind).unwrap())
                                .filter(|s| {
                                    let r = match kind {
                                        IndexKind::Rows => build_gamma(&lam, &mu, s),
                                        IndexKind::Columns => build_delta(&lam, &mu, s),
                                    };
                                    matches!(r.unwrap(), ShapeBuild::Accepted(_))
                                })
                                .collect();
                            brute.sort();
                            assert!(brute.iter().all(|s| s.values().iter().all(|&v| v <= bound)));
                            assert_eq!(enumerate_index_sequences(&lam, &mu, kind), brute, "{lam} {mu} {kind:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }
}
