//! Sparse elements of the group algebra of `S_n` over an exact field.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::arith::Coeff;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Products with more term pairs than this are split across threads.
const PARALLEL_THRESHOLD: usize = 1 << 14;

/// `sum c_s s` with no stored zero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct GroupAlgebraElement<F: Coeff> {
    n: usize,
    terms: BTreeMap<Permutation, F>,
}

impl<F: Coeff> GroupAlgebraElement<F> {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(Permutation::identity(n), F::one())
    }

    pub fn monomial(s: Permutation, c: F) -> Self {
        let mut out = Self::zero(s.degree());
        out.add_term(s, c);
        out
    }

    pub fn scalar(n: usize, c: F) -> Self {
        Self::monomial(Permutation::identity(n), c)
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, F)>) -> Self {
        let mut out = Self::zero(n);
        for (s, c) in terms {
            out.add_term(s, c);
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, F> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, s: &Permutation) -> F {
        self.terms.get(s).cloned().unwrap_or_else(F::zero)
    }

    /// Adds `c s` in place.
    pub fn add_term(&mut self, s: Permutation, c: F) {
        assert_eq!(s.degree(), self.n, "degree mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(s) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().plus(&c);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(*s, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.negate())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        self.map_coeffs(|x| x.times(c))
    }

    /// Coefficientwise map; zero images are dropped.
    pub fn map_coeffs<G: Coeff>(&self, f: impl Fn(&F) -> G) -> GroupAlgebraElement<G> {
        GroupAlgebraElement::from_terms(self.n, self.terms.iter().map(|(s, c)| (*s, f(c))))
    }

    pub fn try_map_coeffs<G: Coeff>(
        &self,
        f: impl Fn(&F) -> Result<G>,
    ) -> Result<GroupAlgebraElement<G>> {
        let mut out = GroupAlgebraElement::zero(self.n);
        for (s, c) in &self.terms {
            out.add_term(*s, f(c)?);
        }
        Ok(out)
    }

    /// Convolution product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let left: Vec<(&Permutation, &F)> = self.terms.iter().collect();
        let partial = |chunk: &[(&Permutation, &F)]| {
            let mut acc = Self::zero(self.n);
            for (s, a) in chunk {
                for (t, b) in &other.terms {
                    acc.add_term(s.compose(t), a.times(b));
                }
            }
            acc
        };
        if left.len() * other.len() < PARALLEL_THRESHOLD {
            return Ok(partial(&left));
        }
        // exact addition is associative, so the merge order cannot change the result
        let chunk = left.len().div_ceil(rayon::current_num_threads().max(1) * 4).max(1);
        let parts: Vec<Self> = left.par_chunks(chunk).map(partial).collect();
        let mut out = Self::zero(self.n);
        for part in parts {
            for (s, c) in part.terms {
                out.add_term(s, c);
            }
        }
        Ok(out)
    }

    /// `self * g`.
    pub fn mul_perm_right(&self, g: &Permutation) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(s, c)| (s.compose(g), c.clone())))
    }

    /// `g * self`.
    pub fn mul_perm_left(&self, g: &Permutation) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(s, c)| (g.compose(s), c.clone())))
    }

    /// `self * (a + b t)` for a two-term factor, the shape of every `f_pq`.
    pub fn mul_binomial_right(&self, a: &F, b: &F, t: &Permutation) -> Self {
        let mut out = self.scale(a);
        for (s, c) in &self.terms {
            out.add_term(s.compose(t), c.times(b));
        }
        out
    }

    /// `(a + b t) * self`.
    pub fn mul_binomial_left(&self, a: &F, b: &F, t: &Permutation) -> Self {
        let mut out = self.scale(a);
        for (s, c) in &self.terms {
            out.add_term(t.compose(s), c.times(b));
        }
        out
    }

    /// Image under `C S_m -> C S_{l+m}`, `s_pq -> s_{l+p,l+q}`.
    pub fn embed_shifted(&self, l: usize) -> Self {
        let total = l + self.n;
        Self::from_terms(total, self.terms.iter().map(|(s, c)| (s.shifted(l, total), c.clone())))
    }

    /// Image under `C S_n -> C S_total` fixing `n+1..total`.
    pub fn extend(&self, total: usize) -> Self {
        Self::from_terms(total, self.terms.iter().map(|(s, c)| (s.shifted(0, total), c.clone())))
    }

    /// `s -> sgn(s) s`, extended linearly.
    pub fn star(&self) -> Self {
        Self::from_terms(
            self.n,
            self.terms
                .iter()
                .map(|(s, c)| (*s, if s.sign() < 0 { c.negate() } else { c.clone() })),
        )
    }

    /// `g^{-1} self g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Self> {
        if g.degree() != self.n {
            return Err(Error::DegreeMismatch(self.n, g.degree()));
        }
        let gi = g.inverse();
        Ok(Self::from_terms(
            self.n,
            self.terms.iter().map(|(s, c)| (gi.compose(s).compose(g), c.clone())),
        ))
    }

    /// The scalar `c` if `self = c * 1`.
    pub fn scalar_value(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => {
                let (s, c) = self.terms.iter().next().expect("one term");
                s.is_identity().then(|| c.clone())
            }
            _ => None,
        }
    }
}

impl<F: Coeff> fmt::Display for GroupAlgebraElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(s, c)| format!("({c})[{s}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, RatFunc, Rational};
    use proptest::prelude::*;

    type Elt = GroupAlgebraElement<Rational>;

    fn s12(n: usize) -> Permutation {
        Permutation::transposition(n, 1, 2)
    }

    fn binom(n: usize, a: i64, b: i64, t: Permutation) -> Elt {
        Elt::from_terms(n, [(Permutation::identity(n), int(a)), (t, int(b))])
    }

    #[test]
    fn small_products() {
        let plus = binom(2, 1, 1, s12(2));
        let minus = binom(2, 1, -1, s12(2));
        assert!(plus.mul(&minus).unwrap().is_zero());
        assert_eq!(plus.mul(&plus).unwrap(), plus.scale(&int(2)));
        assert!(plus.mul(&Elt::one(3)).is_err());
    }

    #[test]
    fn ratfunc_square() {
        // (1 - s/u)^2 = (1 + 1/u^2) - (2/u) s
        let n = 2;
        let inv_u = RatFunc::var().inv().unwrap();
        let f = GroupAlgebraElement::from_terms(
            n,
            [(Permutation::identity(n), RatFunc::one()), (s12(n), inv_u.neg())],
        );
        let sq = f.mul(&f).unwrap();
        assert_eq!(sq.coeff(&Permutation::identity(n)), RatFunc::one().add(&inv_u.mul(&inv_u)));
        assert_eq!(sq.coeff(&s12(n)), inv_u.mul(&RatFunc::constant(int(-2))));
    }

    #[test]
    fn embedding() {
        assert_eq!(Elt::one(1).embed_shifted(2), Elt::one(3));
        let x = Elt::monomial(s12(2), int(1)).embed_shifted(2);
        assert_eq!(x, Elt::monomial(Permutation::transposition(4, 3, 4), int(1)));
        let y = binom(2, 1, -1, s12(2)).embed_shifted(1);
        assert_eq!(y, binom(3, 1, -1, Permutation::transposition(3, 2, 3)));
    }

    #[test]
    fn star_examples() {
        assert_eq!(Elt::monomial(s12(2), int(1)).star(), Elt::monomial(s12(2), int(-1)));
        assert_eq!(binom(2, 1, 1, s12(2)).star(), binom(2, 1, -1, s12(2)));
        let c: Permutation = "2,3,1".parse().unwrap();
        assert_eq!(Elt::monomial(c, int(1)).star(), Elt::monomial(c, int(1)));
    }

    #[test]
    fn conjugation_examples() {
        let x = Elt::monomial(s12(2), int(1));
        assert_eq!(x.conjugate_by(&Permutation::tau(1, 1)).unwrap(), x);
        let y = Elt::monomial(s12(3), int(1)).conjugate_by(&Permutation::tau(2, 1)).unwrap();
        assert_eq!(y, Elt::monomial(Permutation::transposition(3, 2, 3), int(1)));
        assert_eq!(Elt::one(3).conjugate_by(&Permutation::tau(2, 1)).unwrap(), Elt::one(3));
    }

    #[test]
    fn binomial_shortcuts_agree() {
        let x = binom(3, 2, -3, "2,3,1".parse().unwrap());
        let t = Permutation::transposition(3, 1, 3);
        let f = binom(3, 5, 7, t);
        assert_eq!(x.mul_binomial_right(&int(5), &int(7), &t), x.mul(&f).unwrap());
        assert_eq!(x.mul_binomial_left(&int(5), &int(7), &t), f.mul(&x).unwrap());
    }

    #[test]
    fn full_s6_product_parallel_matches_sequential() {
        let all = Permutation::all(6);
        let x = Elt::from_terms(6, all.iter().enumerate().map(|(i, s)| (*s, int(i as i64 % 7 - 3))));
        let y = Elt::from_terms(6, all.iter().enumerate().map(|(i, s)| (*s, int(i as i64 % 5 - 2))));
        let fast = x.mul(&y).unwrap();
        let mut slow = Elt::zero(6);
        for (s, a) in x.terms() {
            for (t, b) in y.terms() {
                slow.add_term(s.compose(t), a * b);
            }
        }
        assert_eq!(fast, slow);
    }

    fn arb_elt(n: usize) -> impl Strategy<Value = Elt> {
        let perms = Permutation::all(n);
        proptest::collection::vec((0..perms.len(), -4i64..5, 1i64..4), 0..8).prop_map(move |v| {
            Elt::from_terms(n, v.into_iter().map(|(i, a, b)| (perms[i], crate::arith::rat(a, b))))
        })
    }

    proptest! {
        #[test]
        fn star_is_an_involutive_automorphism(x in arb_elt(4), y in arb_elt(4)) {
            prop_assert_eq!(x.star().star(), x.clone());
            prop_assert_eq!(x.mul(&y).unwrap().star(), x.star().mul(&y.star()).unwrap());
        }

        #[test]
        fn multiplication_is_associative(x in arb_elt(5), y in arb_elt(5), z in arb_elt(5)) {
            let left = x.mul(&y).unwrap().mul(&z).unwrap();
            let right = x.mul(&y.mul(&z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
