//! The factors `f_pq(u, v) = 1 - s_pq / (u - v)` and the fusion procedure
//! that recovers `F_T` as a regular value of their ordered product.

use crate::algebra::GroupAlgebraElement;
use crate::arith::{Coeff, Poly, RatFunc, Rational};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tableau::StandardTableau;

/// `1 - s_pq / (t + shift)` in `C(t) S_n`.
pub fn f_factor(n: usize, p: usize, q: usize, shift: i64) -> GroupAlgebraElement<RatFunc> {
    assert_ne!(p, q);
    let c = RatFunc::linear(shift).inv().expect("t + shift is nonzero").neg();
    GroupAlgebraElement::from_terms(
        n,
        [(Permutation::identity(n), RatFunc::one()), (Permutation::transposition(n, p, q), c)],
    )
}

/// `1 - s_pq / d` over any field, for a nonzero difference `d`.
pub fn f_at<F: Coeff>(n: usize, p: usize, q: usize, d: &F) -> Result<GroupAlgebraElement<F>> {
    let inv = d.recip().ok_or(Error::DivisionByZero)?;
    Ok(GroupAlgebraElement::from_terms(
        n,
        [(Permutation::identity(n), F::one()), (Permutation::transposition(n, p, q), inv.negate())],
    ))
}

/// Pairs `(p, q)`, `p < q <= l`, in lexicographic order.
pub fn lex_pairs(l: usize) -> Vec<(usize, usize)> {
    (1..=l).flat_map(|p| (p + 1..=l).map(move |q| (p, q))).collect()
}

/// Ordered product of `f_pq(z_p + c_p, z_q + c_q)` along the line
/// `z_p = slope(row(p)) e`, with coefficients rational in `e`.
pub fn fusion_product(t: &StandardTableau, slope: impl Fn(usize) -> i64) -> GroupAlgebraElement<RatFunc> {
    let l = t.size();
    let c = t.content_vector();
    let r = t.row_vector();
    let mut acc = GroupAlgebraElement::<RatFunc>::one(l);
    for (p, q) in lex_pairs(l) {
        // z_p - z_q + c_p - c_q as a polynomial in e
        let diff = Poly::from_ints(&[c[p - 1] - c[q - 1], slope(r[p - 1]) - slope(r[q - 1])]);
        let coef = RatFunc::from_poly(diff).inv().expect("distinct contents within a row").neg();
        acc = acc.mul_binomial_right(&RatFunc::one(), &coef, &Permutation::transposition(l, p, q));
    }
    acc
}

/// Value at `e = 0`, or `None` if some coefficient has a pole there.
fn value_at_origin(x: &GroupAlgebraElement<RatFunc>) -> Option<GroupAlgebraElement<Rational>> {
    let zero = Rational::from_integer(0.into());
    x.try_map_coeffs(|c| c.eval(&zero)).ok()
}

/// Slope assignments tried in turn: the row index, then `K^(row-1)`.
const RETRY_BASES: [i64; 3] = [7, 1009, 100_003];

/// `F_T` from the fusion procedure.
pub fn fused_f(t: &StandardTableau) -> Result<GroupAlgebraElement<Rational>> {
    if let Some(v) = value_at_origin(&fusion_product(t, |row| row as i64)) {
        return Ok(v);
    }
    for k in RETRY_BASES {
        if let Some(v) = value_at_origin(&fusion_product(t, |row| k.pow(row as u32 - 1))) {
            return Ok(v);
        }
    }
    Err(Error::Singular(format!("fusion product of {t} has a pole at the origin on every line tried")))
}

/// A failed instance of the braid or unitarity relation of the `f_pq`.
#[derive(Clone, Debug, PartialEq)]
pub struct YangBaxterFailure {
    pub relation: &'static str,
    pub labels: (usize, usize, usize),
    pub point: (Rational, Rational, Rational),
}

/// Checks, in `C S_3` and for every labelling `(p, q, r)` of `{1, 2, 3}`,
/// `f_pq(u,v) f_pr(u,w) f_qr(v,w) = f_qr(v,w) f_pr(u,w) f_pq(u,v)` and
/// `f_pq(u,v) f_qp(v,u) = 1 - (u - v)^-2`.
pub fn check_yang_baxter(u: &Rational, v: &Rational, w: &Rational) -> Result<Vec<YangBaxterFailure>> {
    if u == v || v == w || u == w {
        return Err(Error::Precondition("points must be pairwise distinct".into()));
    }
    let n = 3;
    let mut failures = Vec::new();
    for s in Permutation::all(3) {
        let (p, q, r) = (s.apply(1), s.apply(2), s.apply(3));
        let fpq = f_at(n, p, q, &(u - v))?;
        let fpr = f_at(n, p, r, &(u - w))?;
        let fqr = f_at(n, q, r, &(v - w))?;
        let lhs = fpq.mul(&fpr)?.mul(&fqr)?;
        let rhs = fqr.mul(&fpr)?.mul(&fpq)?;
        let point = (u.clone(), v.clone(), w.clone());
        if lhs != rhs {
            failures.push(YangBaxterFailure { relation: "braid", labels: (p, q, r), point: point.clone() });
        }
        let fqp = f_at(n, q, p, &(v - u))?;
        let d = u - v;
        let scalar = Rational::from_integer(1.into()) - (&d * &d).recip();
        if fpq.mul(&fqp)? != GroupAlgebraElement::scalar(n, scalar) {
            failures.push(YangBaxterFailure { relation: "unitarity", labels: (p, q, r), point });
        }
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::partition::Partition;
    use crate::repr::matrix_element_f;
    use crate::tableau::{column_tableau, enumerate_standard, row_tableau};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn factor_examples() {
        let f = f_factor(2, 1, 2, 0);
        assert_eq!(f.coeff(&Permutation::transposition(2, 1, 2)), RatFunc::var().inv().unwrap().neg());
        // shift -1 at t = 0 gives 1 + s_12
        let v = f_factor(2, 1, 2, -1).try_map_coeffs(|c| c.eval(&int(0))).unwrap();
        assert_eq!(v, GroupAlgebraElement::from_terms(2, [(Permutation::identity(2), int(1)), (Permutation::transposition(2, 1, 2), int(1))]));
    }

    #[test]
    fn unitarity_symbolic() {
        // f_12(t, 0) f_21(0, t): the second factor's difference is -t
        let f12 = f_factor(2, 1, 2, 0);
        let minus_t = RatFunc::var().neg();
        let f21 = f_at(2, 2, 1, &minus_t).unwrap();
        let t = RatFunc::var();
        let expected = RatFunc::one().sub(&t.mul(&t).inv().unwrap());
        assert_eq!(f12.mul(&f21).unwrap(), GroupAlgebraElement::scalar(2, expected));
    }

    #[test]
    fn yang_baxter_examples() {
        assert!(check_yang_baxter(&int(5), &rat(1, 2), &int(-3)).unwrap().is_empty());
        // u - v = 1 kills the unitarity scalar
        let n = 3;
        let prod = f_at(n, 1, 2, &int(1)).unwrap().mul(&f_at(n, 2, 1, &int(-1)).unwrap()).unwrap();
        assert!(prod.is_zero());
        assert!(check_yang_baxter(&int(1), &int(1), &int(2)).is_err());
    }

    #[test]
    fn fusion_examples() {
        let row = row_tableau(&p("2"));
        assert_eq!(fused_f(&row).unwrap(), *matrix_element_f(&row));
        let col = column_tableau(&p("1,1"));
        assert_eq!(fused_f(&col).unwrap(), *matrix_element_f(&col));
        let col = column_tableau(&p("2,1"));
        assert_eq!(fused_f(&col).unwrap(), *matrix_element_f(&col));
    }

    #[test]
    fn fusion_up_to_four() {
        for l in 1..=4 {
            for shape in Partition::all_of_size(l) {
                for t in enumerate_standard(&shape) {
                    assert_eq!(fused_f(&t).unwrap(), *matrix_element_f(&t), "{t}");
                }
            }
        }
    }

    #[test]
    fn lexicographic_pairs() {
        assert_eq!(lex_pairs(3), vec![(1, 2), (1, 3), (2, 3)]);
    }
}
