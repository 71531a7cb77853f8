//! Closed forms for the eigenvalues of `J` and the identities around them.
//!
//! Every closed form here is a product of factors `(u + k)^{+-1}` with
//! integer `k`, so values are first collected as a [`LinearProduct`]
//! (exponents indexed by shift) and only then turned into a [`RatFunc`].

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::{Poly, RatFunc, Rational};
use crate::error::{Error, Result};
use crate::partition::{
    build_delta, build_gamma, enumerate_index_sequences, IndexKind, IndexSequence, Partition, ShapeBuild,
};

/// `prod_k (u + k)^{e_k}` with integer shifts.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct LinearProduct {
    exps: BTreeMap<i64, i64>,
}

impl LinearProduct {
    pub fn one() -> Self {
        Self::default()
    }

    /// Multiplies by `(u + k)^e`.
    pub fn push(&mut self, k: i64, e: i64) {
        let slot = self.exps.entry(k).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exps.remove(&k);
        }
    }

    pub fn times(&mut self, other: &LinearProduct) {
        for (&k, &e) in &other.exps {
            self.push(k, e);
        }
    }

    pub fn inverse(&self) -> LinearProduct {
        LinearProduct { exps: self.exps.iter().map(|(&k, &e)| (k, -e)).collect() }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Reduced exponents by shift.
    pub fn exponents(&self) -> &BTreeMap<i64, i64> {
        &self.exps
    }

    /// Zeros `-k` for `e_k > 0`, sorted.
    pub fn zeros(&self) -> Vec<i64> {
        let mut z: Vec<i64> = self.exps.iter().filter(|(_, &e)| e > 0).map(|(&k, _)| -k).collect();
        z.sort_unstable();
        z
    }

    /// Poles `-k` for `e_k < 0`, sorted.
    pub fn poles(&self) -> Vec<i64> {
        let mut p: Vec<i64> = self.exps.iter().filter(|(_, &e)| e < 0).map(|(&k, _)| -k).collect();
        p.sort_unstable();
        p
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        let mut num = Poly::one();
        let mut den = Poly::one();
        for (&k, &e) in &self.exps {
            let f = Poly::linear(k);
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    num = num.mul(&f);
                } else {
                    den = den.mul(&f);
                }
            }
        }
        RatFunc::new(num, den).expect("nonzero denominator")
    }

    pub fn eval(&self, u: &Rational) -> Result<Rational> {
        let mut acc = Rational::from_integer(1.into());
        for (&k, &e) in &self.exps {
            let x = u + Rational::from_integer(k.into());
            if x == Rational::from_integer(0.into()) {
                return Err(Error::Pole(u.clone()));
            }
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    acc *= &x;
                } else {
                    acc /= &x;
                }
            }
        }
        Ok(acc)
    }
}

fn sz(x: usize) -> i64 {
    x as i64
}

fn require_accepted(build: ShapeBuild, what: &str) -> Result<Partition> {
    match build {
        ShapeBuild::Accepted(p) => Ok(p),
        ShapeBuild::Rejected { first_violation } => Err(Error::Precondition(format!(
            "{what} is not a partition: increases after position {first_violation}"
        ))),
    }
}

/// `prod_{(i,j) in lam} (u - lam'_j - mu_{a_i} + a_i + j - 1) / (u - i + j)`.
pub fn theorem1_product(lam: &Partition, mu: &Partition, a: &IndexSequence) -> Result<LinearProduct> {
    require_accepted(build_gamma(lam, mu, a)?, "gamma")?;
    let mut out = LinearProduct::one();
    for bx in lam.boxes() {
        let (i, j) = (bx.row, bx.col);
        let ai = a.get(i);
        out.push(-sz(lam.conj_part(j)) - sz(mu.part(ai)) + sz(ai) + sz(j) - 1, 1);
        out.push(-sz(i) + sz(j), -1);
    }
    Ok(out)
}

/// `r_gamma` for the row sequence `a`.
pub fn theorem1_value(lam: &Partition, mu: &Partition, a: &IndexSequence) -> Result<RatFunc> {
    Ok(theorem1_product(lam, mu, a)?.to_ratfunc())
}

/// `prod_{(i,j) in lam} (u + lam_i + mu'_{b_j} - i - b_j + 1) / (u - i + j)`.
pub fn theorem2_product(lam: &Partition, mu: &Partition, b: &IndexSequence) -> Result<LinearProduct> {
    require_accepted(build_delta(lam, mu, b)?, "delta")?;
    let mut out = LinearProduct::one();
    for bx in lam.boxes() {
        let (i, j) = (bx.row, bx.col);
        let bj = b.get(j);
        out.push(sz(lam.part(i)) + sz(mu.conj_part(bj)) - sz(i) - sz(bj) + 1, 1);
        out.push(-sz(i) + sz(j), -1);
    }
    Ok(out)
}

/// `r_delta` for the column sequence `b`.
pub fn theorem2_value(lam: &Partition, mu: &Partition, b: &IndexSequence) -> Result<RatFunc> {
    Ok(theorem2_product(lam, mu, b)?.to_ratfunc())
}

/// `(u - lam'_j - mu_i + i + j - 1) / (u + lam_i + mu'_j - i - j + 1)` at box `(i, j)`.
pub fn fraction_at(lam: &Partition, mu: &Partition, i: usize, j: usize) -> LinearProduct {
    let mut out = LinearProduct::one();
    out.push(-sz(lam.conj_part(j)) - sz(mu.part(i)) + sz(i) + sz(j) - 1, 1);
    out.push(sz(lam.part(i)) + sz(mu.conj_part(j)) - sz(i) - sz(j) + 1, -1);
    out
}

fn fraction_over(lam: &Partition, mu: &Partition, boxes: impl Iterator<Item = (usize, usize)>) -> LinearProduct {
    let mut out = LinearProduct::one();
    for (i, j) in boxes {
        out.times(&fraction_at(lam, mu, i, j));
    }
    out
}

/// `h_{lam mu}`: the fraction over the boxes of `lam` with `j <= lam_i, mu_i`.
pub fn corollary_product(lam: &Partition, mu: &Partition) -> LinearProduct {
    let inner = lam.intersection(mu);
    fraction_over(lam, mu, inner.boxes().map(|b| (b.row, b.col)))
}

pub fn corollary_h(lam: &Partition, mu: &Partition) -> RatFunc {
    corollary_product(lam, mu).to_ratfunc()
}

/// The fraction over the boxes of `lam` outside `mu`; identically 1.
pub fn skew_fraction_product(lam: &Partition, mu: &Partition) -> LinearProduct {
    fraction_over(lam, mu, lam.boxes().filter(|&b| !mu.contains(b)).map(|b| (b.row, b.col)))
}

/// `r_{lam+mu} / r_{(lam'+mu')'}` from the two theorems with identity sequences.
pub fn extreme_ratio(lam: &Partition, mu: &Partition) -> Result<LinearProduct> {
    let mut out = theorem1_product(lam, mu, &IndexSequence::identity(lam.len(), IndexKind::Rows))?;
    out.times(&theorem2_product(lam, mu, &IndexSequence::identity(lam.part(1), IndexKind::Columns))?.inverse());
    Ok(out)
}

/// `prod_{i <= lam'_1, k <= mu'_1} (u+lam_i-i+k)(u-mu_k-i+k) / ((u+lam_i-mu_k-i+k)(u-i+k))`.
pub fn prop4_product(lam: &Partition, mu: &Partition) -> LinearProduct {
    let mut out = LinearProduct::one();
    for i in 1..=lam.len() {
        for k in 1..=mu.len() {
            let (li, mk, i, k) = (sz(lam.part(i)), sz(mu.part(k)), sz(i), sz(k));
            out.push(li - i + k, 1);
            out.push(-mk - i + k, 1);
            out.push(li - mk - i + k, -1);
            out.push(-i + k, -1);
        }
    }
    out
}

pub fn prop4_rhs(lam: &Partition, mu: &Partition) -> RatFunc {
    prop4_product(lam, mu).to_ratfunc()
}

/// `prod_{i=1..l} (mu_{a_i} - a_i + l + u)`.
pub fn eq7_value(l: usize, mu: &Partition, a: &IndexSequence) -> Result<Poly> {
    if a.len() != l {
        return Err(Error::Precondition(format!("sequence of length {} for l = {l}", a.len())));
    }
    Ok((1..=l).fold(Poly::one(), |acc, i| {
        let ai = a.get(i);
        acc.mul(&Poly::linear(sz(mu.part(ai)) - sz(ai) + sz(l)))
    }))
}

/// `prod_{i <= lam'_1} (u + lam_i - i + 1) / (u + lam_i - m - i + 1)`.
pub fn rtheta_product(lam: &Partition, m: usize) -> Result<LinearProduct> {
    let smallest = lam.parts().last().copied().unwrap_or(0);
    if lam.is_empty() || m > smallest {
        return Err(Error::Precondition(format!("m = {m} exceeds the smallest part of ({lam})")));
    }
    let mut out = LinearProduct::one();
    for i in 1..=lam.len() {
        let (li, i) = (sz(lam.part(i)), sz(i));
        out.push(li - i + 1, 1);
        out.push(li - sz(m) - i + 1, -1);
    }
    Ok(out)
}

pub fn rtheta_value(lam: &Partition, m: usize) -> Result<RatFunc> {
    Ok(rtheta_product(lam, m)?.to_ratfunc())
}

/// Hook lengths in reading order, their product and `l! / product`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HookDimension {
    pub hooks: Vec<usize>,
    pub product: BigInt,
    pub dim: BigInt,
}

pub fn hook_dimension(lam: &Partition) -> Result<HookDimension> {
    let hooks = lam.hooks();
    let product: BigInt = hooks.iter().map(|&h| BigInt::from(h)).product();
    let fact: BigInt = (1..=lam.size()).map(BigInt::from).product();
    let (dim, rem) = fact.div_rem(&product);
    if rem != BigInt::from(0) {
        return Err(Error::Invariant(format!("{}! is not divisible by the hook product of ({lam})", lam.size())));
    }
    Ok(HookDimension { hooks, product, dim })
}

/// `h_theta`, where `theta` is `lam` with a new row of `m` boxes below it,
/// and `h_lam m! r_theta` at `u = lam'_1`.
pub fn rtheta_induction_sides(lam: &Partition, m: usize) -> Result<(Rational, Rational)> {
    let theta = Partition::new(lam.parts().iter().copied().chain([m]).collect())?;
    let big = |x: BigInt| Rational::from_integer(x);
    let h_theta = big(hook_dimension(&theta)?.product);
    let h_lam = big(hook_dimension(lam)?.product);
    let m_fact = big((1..=m).map(BigInt::from).product());
    let r = rtheta_product(lam, m)?.eval(&Rational::from_integer(sz(lam.len()).into()))?;
    Ok((h_theta, h_lam * m_fact * r))
}

/// Integer zeros and poles of `r_{lam+mu} / r_nu` over all `gamma` and `delta` shapes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DSet {
    pub lam: Partition,
    pub mu: Partition,
    pub points: BTreeSet<i64>,
    pub gammas: usize,
    pub deltas: usize,
}

pub fn compute_dset(lam: &Partition, mu: &Partition) -> Result<DSet> {
    let top = theorem1_product(lam, mu, &IndexSequence::identity(lam.len(), IndexKind::Rows))?;
    let mut points = BTreeSet::new();
    let mut seen = BTreeSet::new();
    let mut collect = |r: LinearProduct| {
        let mut ratio = top.clone();
        ratio.times(&r.inverse());
        if seen.insert(ratio.exps.clone().into_iter().collect::<Vec<_>>()) {
            let f = ratio.to_ratfunc();
            let (z, p) = f
                .integer_zeros_and_poles()
                .ok_or_else(|| Error::Invariant(format!("non-integer root in {f}")))?;
            points.extend(z);
            points.extend(p);
        }
        Ok::<(), Error>(())
    };
    let gammas = enumerate_index_sequences(lam, mu, IndexKind::Rows);
    for a in &gammas {
        collect(theorem1_product(lam, mu, a)?)?;
    }
    let deltas = enumerate_index_sequences(lam, mu, IndexKind::Columns);
    for b in &deltas {
        collect(theorem2_product(lam, mu, b)?)?;
    }
    Ok(DSet { lam: lam.clone(), mu: mu.clone(), points, gammas: gammas.len(), deltas: deltas.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::tableau::enumerate_standard;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn rows(v: &[usize]) -> IndexSequence {
        IndexSequence::rows(v.to_vec()).unwrap()
    }

    fn cols(v: &[usize]) -> IndexSequence {
        IndexSequence::columns(v.to_vec()).unwrap()
    }

    fn lin(k: i64) -> RatFunc {
        RatFunc::linear(k)
    }

    fn frac(num: &[i64], den: &[i64]) -> RatFunc {
        let prod = |v: &[i64]| v.iter().fold(RatFunc::one(), |acc, &k| acc.mul(&lin(k)));
        prod(num).div(&prod(den)).unwrap()
    }

    /// Oracle: direct RatFunc arithmetic, factor by factor.
    fn theorem1_direct(lam: &Partition, mu: &Partition, a: &IndexSequence) -> RatFunc {
        let mut acc = RatFunc::one();
        for b in lam.boxes() {
            let (i, j) = (b.row as i64, b.col as i64);
            let ai = a.get(b.row);
            let k = -(lam.conj_part(b.col) as i64) - mu.part(ai) as i64 + ai as i64 + j - 1;
            acc = acc.mul(&lin(k)).div(&lin(j - i)).unwrap();
        }
        acc
    }

    #[test]
    fn theorem1_examples() {
        assert_eq!(theorem1_value(&p("1"), &p("1"), &rows(&[1])).unwrap(), frac(&[-1], &[0]));
        assert_eq!(theorem1_value(&p("1,1"), &p("1"), &rows(&[1, 2])).unwrap(), frac(&[-2], &[-1]));
        assert_eq!(theorem1_value(&p("1"), &Partition::empty(), &rows(&[1])).unwrap(), RatFunc::one());
        assert!(theorem1_value(&p("1,1"), &p("1"), &rows(&[1, 3])).is_err());
    }

    #[test]
    fn theorem1_matches_direct_product() {
        for n in 1..=5 {
            for lam in Partition::all_of_size(n) {
                for k in 0..=3 {
                    for mu in Partition::all_of_size(k) {
                        for a in enumerate_index_sequences(&lam, &mu, IndexKind::Rows) {
                            assert_eq!(theorem1_value(&lam, &mu, &a).unwrap(), theorem1_direct(&lam, &mu, &a));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn theorem2_examples() {
        assert_eq!(theorem2_value(&p("1"), &p("1"), &cols(&[1])).unwrap(), frac(&[1], &[0]));
        assert_eq!(theorem2_value(&p("1,1"), &p("1"), &cols(&[1])).unwrap(), frac(&[1], &[-1]));
    }

    /// `r_delta(u)` for `(lam, mu, b)` is `r_gamma(-u)` for `(lam', mu', b)`.
    #[test]
    fn theorem2_is_theorem1_of_conjugates_at_minus_u() {
        for n in 1..=5 {
            for lam in Partition::all_of_size(n) {
                for k in 0..=3 {
                    for mu in Partition::all_of_size(k) {
                        for b in enumerate_index_sequences(&lam, &mu, IndexKind::Columns) {
                            let a = IndexSequence::rows(b.values().to_vec()).unwrap();
                            let t1 = theorem1_value(&lam.conjugate(), &mu.conjugate(), &a).unwrap();
                            assert_eq!(theorem2_value(&lam, &mu, &b).unwrap(), t1.reflect());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn corollary_examples() {
        assert_eq!(corollary_h(&p("1"), &p("1")), frac(&[-1], &[1]));
        assert_eq!(corollary_h(&p("1,1"), &p("1")), frac(&[-2], &[1]));
        assert_eq!(corollary_h(&p("3,2"), &p("2,1")), frac(&[-3, -2, -1], &[4, 2, 2]));
    }

    #[test]
    fn corollary_and_skew_product() {
        for n in 0..=6 {
            for lam in Partition::all_of_size(n) {
                for k in 0..=6 - n {
                    for mu in Partition::all_of_size(k) {
                        assert!(skew_fraction_product(&lam, &mu).is_one(), "{lam} / {mu}");
                        if !lam.is_empty() {
                            assert_eq!(extreme_ratio(&lam, &mu).unwrap(), corollary_product(&lam, &mu));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn prop4_examples() {
        assert_eq!(prop4_rhs(&p("1"), &p("1")), frac(&[1, -1], &[0, 0]));
        assert_eq!(prop4_rhs(&p("1,1"), &p("1")), frac(&[1, -2], &[0, -1]));
        assert_eq!(prop4_rhs(&p("1"), &Partition::empty()), RatFunc::one());
    }

    #[test]
    fn eq7_examples() {
        assert_eq!(eq7_value(1, &p("1"), &rows(&[1])).unwrap(), Poly::linear(1));
        assert_eq!(eq7_value(2, &p("1"), &rows(&[1, 2])).unwrap(), Poly::linear(2).mul(&Poly::var()));
        assert_eq!(eq7_value(1, &Partition::empty(), &rows(&[1])).unwrap(), Poly::var());
        assert!(eq7_value(2, &p("1"), &rows(&[1])).is_err());
    }

    #[test]
    fn rtheta_examples() {
        assert_eq!(rtheta_value(&p("1"), 1).unwrap(), frac(&[1], &[0]));
        assert_eq!(rtheta_value(&p("2"), 1).unwrap(), frac(&[2], &[1]));
        assert_eq!(rtheta_value(&p("2,2"), 2).unwrap(), frac(&[2, 1], &[0, -1]));
        assert!(rtheta_value(&p("2,1"), 2).is_err());
    }

    #[test]
    fn rtheta_is_theorem2_with_identity() {
        for n in 1..=8 {
            for lam in Partition::all_of_size(n) {
                let smallest = *lam.parts().last().unwrap();
                for m in 1..=smallest {
                    let b = IndexSequence::identity(lam.part(1), IndexKind::Columns);
                    let t2 = theorem2_value(&lam, &p(&m.to_string()), &b).unwrap();
                    assert_eq!(rtheta_value(&lam, m).unwrap(), t2);
                }
            }
        }
    }

    #[test]
    fn rtheta_induction_step() {
        for n in 1..=6 {
            for lam in Partition::all_of_size(n) {
                for m in 1..=*lam.parts().last().unwrap() {
                    let (lhs, rhs) = rtheta_induction_sides(&lam, m).unwrap();
                    assert_eq!(lhs, rhs, "{lam}, m = {m}");
                }
            }
        }
    }

    #[test]
    fn hook_dimension_examples() {
        assert_eq!(hook_dimension(&p("1")).unwrap().dim, BigInt::from(1));
        let h = hook_dimension(&p("3,2")).unwrap();
        assert_eq!((h.hooks, h.product, h.dim), (vec![4, 3, 1, 2, 1], BigInt::from(24), BigInt::from(5)));
        assert_eq!(hook_dimension(&p("2,2")).unwrap().dim, BigInt::from(2));
        for n in 1..=7 {
            for lam in Partition::all_of_size(n) {
                assert_eq!(hook_dimension(&lam).unwrap().dim, BigInt::from(enumerate_standard(&lam).len()));
            }
        }
    }

    #[test]
    fn dset_small() {
        let d = compute_dset(&p("1"), &p("1")).unwrap();
        assert_eq!(d.points.into_iter().collect::<Vec<_>>(), vec![-1, 1]);
        let d = compute_dset(&p("1,1"), &p("1")).unwrap();
        assert!(d.points.contains(&-1) && d.points.contains(&2));
    }

    #[test]
    fn dset_excludes_zero_for_large_pair() {
        let (lam, mu) = (p("8,3,2,1"), p("6,4,4"));
        assert!(!compute_dset(&lam, &mu).unwrap().points.contains(&0));
        assert!(!compute_dset(&mu, &lam).unwrap().points.contains(&0));
    }

    #[test]
    fn linear_product_evaluates_like_ratfunc() {
        let lp = prop4_product(&p("3,1"), &p("2,2"));
        let x = Rational::new(17.into(), 5.into());
        assert_eq!(lp.eval(&x).unwrap(), lp.to_ratfunc().eval(&x).unwrap());
        assert!(frac(&[1], &[0]).eval(&int(0)).is_err());
    }
}
