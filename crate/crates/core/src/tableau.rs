//! Tableaux that are standard with respect to an explicit total order on
//! their labels.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{build_gamma, BoxCoord, IndexSequence, Partition, ShapeBuild};

/// Total order on the labels `1..=n` of a tableau.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LabelOrder {
    /// `1 < 2 < ... < n`.
    Natural,
    /// `l+1 < ... < l+m < 1 < ... < l`.
    Chain { l: usize, m: usize },
}

impl LabelOrder {
    /// Position of `label` in the order, starting at 1.
    pub fn rank(&self, label: usize) -> usize {
        match *self {
            LabelOrder::Natural => label,
            LabelOrder::Chain { l, m } => {
                if label > l {
                    label - l
                } else {
                    label + m
                }
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    order: LabelOrder,
}

/// Checks that `rows` is a filling of a partition shape by `1..=n` that
/// increases along rows and down columns in `order`.
pub fn validate(rows: &[Vec<usize>], order: LabelOrder) -> Result<Partition> {
    let shape = Partition::new(rows.iter().map(Vec::len).collect())
        .map_err(|_| Error::Precondition(format!("row lengths of {rows:?} are not a partition")))?;
    let n = shape.size();
    let mut seen = vec![false; n + 1];
    for &v in rows.iter().flatten() {
        if v == 0 || v > n || seen[v] {
            return Err(Error::Precondition(format!("labels of {rows:?} are not 1..={n}")));
        }
        seen[v] = true;
    }
    if let LabelOrder::Chain { l, m } = order {
        if l + m != n {
            return Err(Error::Precondition(format!("chain order for {l}+{m} labels on {n} boxes")));
        }
    }
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            let r = order.rank(v);
            let right_ok = row.get(j + 1).is_none_or(|&w| order.rank(w) > r);
            let below_ok = rows.get(i + 1).and_then(|below| below.get(j)).is_none_or(|&w| order.rank(w) > r);
            if !right_ok || !below_ok {
                return Err(Error::Invariant(format!(
                    "tableau {} is not standard at row {}, column {}",
                    format_rows(rows),
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(shape)
}

fn format_rows(rows: &[Vec<usize>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("/")
}

/// Parses `"6,7,2,4/8,1,3,5"` into rows without validating.
pub fn parse_rows(s: &str) -> Result<Vec<Vec<usize>>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split('/')
        .map(|row| {
            row.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
                .collect()
        })
        .collect()
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>, order: LabelOrder) -> Result<Self> {
        let shape = validate(&rows, order)?;
        Ok(StandardTableau { shape, rows, order })
    }

    /// Text form in the natural order.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_rows(s)?, LabelOrder::Natural)
    }

    pub fn empty() -> Self {
        StandardTableau { shape: Partition::empty(), rows: Vec::new(), order: LabelOrder::Natural }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn order(&self) -> LabelOrder {
        self.order
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn entry(&self, b: BoxCoord) -> usize {
        self.rows[b.row - 1][b.col - 1]
    }

    /// Box holding `label`.
    pub fn position(&self, label: usize) -> BoxCoord {
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(j) = row.iter().position(|&v| v == label) {
                return BoxCoord::new(i + 1, j + 1);
            }
        }
        panic!("label {label} not in tableau {self}");
    }

    /// `c_p` for `p = 1..=n`, at index `p - 1`.
    pub fn content_vector(&self) -> Vec<i64> {
        let mut c = vec![0; self.size()];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                c[v - 1] = j as i64 - i as i64;
            }
        }
        c
    }

    /// Row index of each label, at index `label - 1`.
    pub fn row_vector(&self) -> Vec<usize> {
        let mut r = vec![0; self.size()];
        for (i, row) in self.rows.iter().enumerate() {
            for &v in row {
                r[v - 1] = i + 1;
            }
        }
        r
    }

    /// Transpose across the main diagonal.
    pub fn reflect(&self) -> StandardTableau {
        let shape = self.shape.conjugate();
        let rows = (1..=shape.len())
            .map(|j| (1..=shape.part(j)).map(|i| self.rows[i - 1][j - 1]).collect())
            .collect();
        StandardTableau { shape, rows, order: self.order }
    }

    /// Applies `f` to every label; the result must be standard in `order`.
    pub fn relabel(&self, f: impl Fn(usize) -> usize, order: LabelOrder) -> Result<StandardTableau> {
        Self::new(self.rows.iter().map(|r| r.iter().map(|&v| f(v)).collect()).collect(), order)
    }

    /// Concatenated rows, top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rows(&self.rows))
    }
}

/// All standard tableaux of `shape` in the natural order, sorted by
/// reading word.
pub fn enumerate_standard(shape: &Partition) -> Vec<StandardTableau> {
    // place n, n-1, ... into removable corners
    fn go(cur: &mut Vec<usize>, label: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if label == 0 {
            out.push(rows.clone());
            return;
        }
        for i in 0..cur.len() {
            let len = cur[i];
            if len == 0 || cur.get(i + 1).is_some_and(|&next| next == len) {
                continue;
            }
            cur[i] -= 1;
            rows[i][len - 1] = label;
            go(cur, label - 1, rows, out);
            cur[i] += 1;
        }
    }
    let mut cur = shape.parts().to_vec();
    let mut rows: Vec<Vec<usize>> = cur.iter().map(|&p| vec![0; p]).collect();
    let mut out = Vec::new();
    go(&mut cur, shape.size(), &mut rows, &mut out);
    let mut tabs: Vec<StandardTableau> = out
        .into_iter()
        .map(|rows| StandardTableau { shape: shape.clone(), rows, order: LabelOrder::Natural })
        .collect();
    tabs.sort_by_key(StandardTableau::reading_word);
    tabs
}

/// Fills the columns consecutively downward, leftmost column first.
pub fn column_tableau(shape: &Partition) -> StandardTableau {
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
    let mut next = 1;
    for j in 1..=shape.part(1) {
        for row in rows.iter_mut().take(shape.conj_part(j)) {
            row.push(next);
            next += 1;
        }
    }
    StandardTableau { shape: shape.clone(), rows, order: LabelOrder::Natural }
}

/// Fills the rows consecutively left to right, top row first.
pub fn row_tableau(shape: &Partition) -> StandardTableau {
    let mut next = 1;
    let rows = shape
        .parts()
        .iter()
        .map(|&p| {
            let row: Vec<usize> = (next..next + p).collect();
            next += p;
            row
        })
        .collect();
    StandardTableau { shape: shape.clone(), rows, order: LabelOrder::Natural }
}

/// The tableau `Gamma` of shape `gamma`, standard in the chain order
/// `l+1, ..., l+m, 1, ..., l`.
///
/// Labels `l+1..l+m` sit where `1..m` sit in `m_tab`. For each `j`, the
/// rows of the column tableau of `lam` that have length `j` are appended,
/// in order, to the rows `a_i` (with `lam_i = j`) taken in increasing order.
pub fn build_gamma_tableau(
    lam: &Partition,
    mu: &Partition,
    a: &IndexSequence,
    m_tab: &StandardTableau,
) -> Result<StandardTableau> {
    if m_tab.shape() != mu || m_tab.order() != LabelOrder::Natural {
        return Err(Error::Precondition(format!("{m_tab} is not a standard tableau of shape {mu}")));
    }
    let gamma = match build_gamma(lam, mu, a)? {
        ShapeBuild::Accepted(g) => g,
        ShapeBuild::Rejected { first_violation } => {
            return Err(Error::Precondition(format!(
                "gamma for a = ({a}) is not a partition (fails at position {first_violation})"
            )))
        }
    };
    let (l, m) = (lam.size(), mu.size());
    let col = column_tableau(lam);
    let mut rows: Vec<Vec<usize>> = (1..=gamma.len())
        .map(|b| (1..=mu.part(b)).map(|c| l + m_tab.rows[b - 1][c - 1]).collect())
        .collect();
    for j in 1..=lam.part(1) {
        let block: Vec<usize> = (lam.conj_part(j + 1) + 1..=lam.conj_part(j)).collect();
        let mut targets: Vec<usize> = block.iter().map(|&i| a.get(i)).collect();
        targets.sort_unstable();
        for (&i, &f) in block.iter().zip(&targets) {
            rows[f - 1].extend_from_slice(&col.rows[i - 1]);
        }
    }
    let gamma_tab = StandardTableau::new(rows, LabelOrder::Chain { l, m })?;
    debug_assert_eq!(gamma_tab.shape(), &gamma);
    Ok(gamma_tab)
}

/// Order isomorphism from the chain order to the natural one:
/// `l+q -> q`, `p -> m+p`.
pub fn chain_to_natural(t: &StandardTableau) -> Result<StandardTableau> {
    let LabelOrder::Chain { l, m } = t.order() else {
        return Err(Error::Precondition("tableau is not in the chain order".into()));
    };
    t.relabel(|v| LabelOrder::Chain { l, m }.rank(v), LabelOrder::Natural)
}

/// Appends a bottom row `l+1, ..., l+m` to `lam_tab`; needs `m <= lam_i`
/// for every part.
pub fn build_theta(lam_tab: &StandardTableau, m: usize) -> Result<StandardTableau> {
    let lam = lam_tab.shape();
    if lam.parts().iter().any(|&p| p < m) {
        return Err(Error::Precondition(format!("{m} exceeds a part of {lam}")));
    }
    let l = lam.size();
    let mut rows = lam_tab.rows.clone();
    if m > 0 {
        rows.push((l + 1..=l + m).collect());
    }
    StandardTableau::new(rows, LabelOrder::Natural)
}
