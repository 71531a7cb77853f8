//! The induced module `W` as the left ideal generated by `F_L Fbar_M`, its
//! shuffled twin `W' = W tau`, the ordered products `R` and `R'`, the
//! action of `x_p`, and the intertwiner `J` with its eigenvalues.
//!
//! Ideal elements are carried as a left coefficient `A` with the element
//! itself being `A * generator`. The `x_p` action depends on `z` and `w`
//! separately, so a realization records both; [`Realization::at_u`] takes
//! `z = 0` and `w = -u`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::GroupAlgebraElement;
use crate::arith::{ratfunc_interpolate, Coeff, RatFunc, Rational};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::repr::{central_idempotent, module_generator};
use crate::tableau::StandardTableau;

/// Which ordered product.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    /// Outer index ascending, inner descending.
    R,
    /// Outer index descending, inner ascending.
    RPrime,
}

/// Index pairs `(i, j)` of the factors `f_{i, a+j}` in multiplication order.
pub fn factor_order(a: usize, b: usize, variant: Variant) -> Vec<(usize, usize)> {
    match variant {
        Variant::R => (1..=a).flat_map(|i| (1..=b).rev().map(move |j| (i, j))).collect(),
        Variant::RPrime => (1..=a).rev().flat_map(|i| (1..=b).map(move |j| (i, j))).collect(),
    }
}

/// `x * prod f_{i, a+j}(first_i + s, second_j + s')` where
/// `s - s' = t`, i.e. each factor is `1 - s_{i,a+j} / (t + first_i - second_j)`.
pub fn right_multiply_ordered<F: Coeff>(
    x: &GroupAlgebraElement<F>,
    first: &[i64],
    second: &[i64],
    t: &F,
    variant: Variant,
) -> Result<GroupAlgebraElement<F>> {
    let (a, b) = (first.len(), second.len());
    let n = x.degree();
    if a + b != n {
        return Err(Error::DegreeMismatch(a + b, n));
    }
    let one = F::one();
    let mut acc = x.clone();
    for (i, j) in factor_order(a, b, variant) {
        let d = t.plus(&F::from_i64(first[i - 1] - second[j - 1]));
        let inv = d.recip().ok_or_else(|| {
            Error::Precondition(format!("u + {} vanishes", first[i - 1] - second[j - 1]))
        })?;
        acc = acc.mul_binomial_right(&one, &inv.negate(), &Permutation::transposition(n, i, a + j));
    }
    Ok(acc)
}

/// `prod f_{i, a+j} * x`, the same product as [`right_multiply_ordered`]
/// applied on the left.
pub fn left_multiply_ordered<F: Coeff>(
    x: &GroupAlgebraElement<F>,
    first: &[i64],
    second: &[i64],
    t: &F,
    variant: Variant,
) -> Result<GroupAlgebraElement<F>> {
    let (a, b) = (first.len(), second.len());
    let n = x.degree();
    if a + b != n {
        return Err(Error::DegreeMismatch(a + b, n));
    }
    let one = F::one();
    let mut acc = x.clone();
    for (i, j) in factor_order(a, b, variant).into_iter().rev() {
        let d = t.plus(&F::from_i64(first[i - 1] - second[j - 1]));
        let inv = d.recip().ok_or_else(|| {
            Error::Precondition(format!("u + {} vanishes", first[i - 1] - second[j - 1]))
        })?;
        acc = acc.mul_binomial_left(&one, &inv.negate(), &Permutation::transposition(n, i, a + j));
    }
    Ok(acc)
}

/// `R_LM(z, w)` or `R'_LM(z, w)` at `u = z - w`.
pub fn build_r<F: Coeff>(
    lam_tab: &StandardTableau,
    m_tab: &StandardTableau,
    variant: Variant,
    u: &F,
) -> Result<GroupAlgebraElement<F>> {
    let n = lam_tab.size() + m_tab.size();
    right_multiply_ordered(
        &GroupAlgebraElement::one(n),
        &lam_tab.content_vector(),
        &m_tab.content_vector(),
        u,
        variant,
    )
}

/// `R_ML(w, z)`: the roles of the tableaux swapped, at `w - z = -u`.
pub fn build_r_swapped<F: Coeff>(lam_tab: &StandardTableau, m_tab: &StandardTableau, u: &F) -> Result<GroupAlgebraElement<F>> {
    build_r(m_tab, lam_tab, Variant::R, &u.negate())
}

/// Rejects integer points in `[-n, n]`, where some `u + c_p - d_q` vanishes.
pub fn check_point(u: &Rational, n: usize) -> Result<()> {
    let bound = Rational::from_integer((n as i64).into());
    if u.is_integer() && u <= &bound && u >= &-bound {
        return Err(Error::Precondition(format!("u = {u} is an integer in [-{n}, {n}]")));
    }
    Ok(())
}

/// `W` (or `W'`) with its generator and the parameters `z`, `w`.
#[derive(Clone, Debug)]
pub struct Realization<F: Coeff> {
    lam_tab: StandardTableau,
    m_tab: StandardTableau,
    prime: bool,
    generator: GroupAlgebraElement<F>,
    z: F,
    w: F,
}

impl<F: Coeff> Realization<F> {
    /// `W`, generated by `F_L Fbar_M`.
    pub fn w_module(lam_tab: &StandardTableau, m_tab: &StandardTableau, z: F, w: F) -> Self {
        let generator = module_generator(lam_tab, m_tab).map_coeffs(F::from_rational);
        Realization { lam_tab: lam_tab.clone(), m_tab: m_tab.clone(), prime: false, generator, z, w }
    }

    /// `W'`, generated by `tau^{-1} F_L Fbar_M tau`.
    pub fn w_prime_module(lam_tab: &StandardTableau, m_tab: &StandardTableau, z: F, w: F) -> Self {
        let tau = Permutation::tau(lam_tab.size(), m_tab.size());
        let generator = module_generator(lam_tab, m_tab)
            .conjugate_by(&tau)
            .expect("tau has the right degree")
            .map_coeffs(F::from_rational);
        Realization { lam_tab: lam_tab.clone(), m_tab: m_tab.clone(), prime: true, generator, z, w }
    }

    /// `z = 0`, `w = -u`.
    pub fn at_u(lam_tab: &StandardTableau, m_tab: &StandardTableau, u: &F, prime: bool) -> Self {
        if prime {
            Self::w_prime_module(lam_tab, m_tab, F::zero(), u.negate())
        } else {
            Self::w_module(lam_tab, m_tab, F::zero(), u.negate())
        }
    }

    pub fn l(&self) -> usize {
        self.lam_tab.size()
    }

    pub fn m(&self) -> usize {
        self.m_tab.size()
    }

    pub fn degree(&self) -> usize {
        self.l() + self.m()
    }

    pub fn generator(&self) -> &GroupAlgebraElement<F> {
        &self.generator
    }

    /// `x_p * generator = e * generator`; returns `e`.
    pub fn x_eigenvalue(&self, p: usize) -> Result<F> {
        let (l, m) = (self.l(), self.m());
        if p == 0 || p > l + m {
            return Err(Error::Precondition(format!("x_{p} with l + m = {}", l + m)));
        }
        let c = self.lam_tab.content_vector();
        let d = self.m_tab.content_vector();
        let lam_side = |p: usize| F::from_i64(c[p - 1]).plus(&self.z);
        let mu_side = |q: usize| F::from_i64(d[q - 1]).plus(&self.w);
        Ok(match (self.prime, p <= l, p <= m) {
            (false, true, _) => lam_side(p),
            (false, false, _) => mu_side(p - l),
            (true, _, true) => mu_side(p),
            (true, _, false) => lam_side(p - m),
        })
    }

    /// `B` with `x_p (A gen) = B gen`, by moving `x_p` to the right through
    /// a reduced word of each permutation using
    /// `x_{k+1} s_k = s_k x_k + 1` and `x_k s_k = s_k x_{k+1} - 1`.
    pub fn apply_x(&self, p: usize, a: &GroupAlgebraElement<F>) -> Result<GroupAlgebraElement<F>> {
        let n = self.degree();
        if a.degree() != n {
            return Err(Error::DegreeMismatch(a.degree(), n));
        }
        let eig: Vec<F> = (1..=n).map(|r| self.x_eigenvalue(r)).collect::<Result<_>>()?;
        if p == 0 || p > n {
            return Err(Error::Precondition(format!("x_{p} with l + m = {n}")));
        }
        let mut memo: HashMap<(usize, Permutation), GroupAlgebraElement<F>> = HashMap::new();
        let mut out = GroupAlgebraElement::zero(n);
        for (s, coef) in a.terms() {
            let b = move_x(p, *s, &eig, &mut memo);
            for (t, c) in b.terms() {
                out.add_term(*t, c.times(coef));
            }
        }
        Ok(out)
    }

    /// `A * generator`.
    pub fn raw(&self, a: &GroupAlgebraElement<F>) -> Result<GroupAlgebraElement<F>> {
        a.mul(&self.generator)
    }
}

fn move_x<F: Coeff>(
    p: usize,
    s: Permutation,
    eig: &[F],
    memo: &mut HashMap<(usize, Permutation), GroupAlgebraElement<F>>,
) -> GroupAlgebraElement<F> {
    if let Some(v) = memo.get(&(p, s)) {
        return v.clone();
    }
    let n = s.degree();
    let result = match s.left_descent() {
        None => GroupAlgebraElement::scalar(n, eig[p - 1].clone()),
        Some(k) => {
            let sk = Permutation::adjacent(n, k);
            let rest = sk.compose(&s);
            let mut out = if p == k + 1 {
                move_x(k, rest, eig, memo).mul_perm_left(&sk)
            } else if p == k {
                move_x(k + 1, rest, eig, memo).mul_perm_left(&sk)
            } else {
                move_x(p, rest, eig, memo).mul_perm_left(&sk)
            };
            if p == k + 1 {
                out.add_term(rest, F::one());
            } else if p == k {
                out.add_term(rest, F::one().negate());
            }
            out
        }
    };
    memo.insert((p, s), result.clone());
    result
}

/// `J`: right multiplication by `R_LM`.
pub fn operator_j<F: Coeff>(
    x: &GroupAlgebraElement<F>,
    lam_tab: &StandardTableau,
    m_tab: &StandardTableau,
    u: &F,
) -> Result<GroupAlgebraElement<F>> {
    right_multiply_ordered(x, &lam_tab.content_vector(), &m_tab.content_vector(), u, Variant::R)
}

/// `F_L Fbar_M R = R' F_L Fbar_M` at `u`; `Ok(None)` on success, otherwise
/// the first permutation whose coefficients differ.
pub fn check_eq4<F: Coeff>(lam_tab: &StandardTableau, m_tab: &StandardTableau, u: &F) -> Result<Option<Permutation>> {
    let gen = module_generator(lam_tab, m_tab).map_coeffs(F::from_rational);
    let lhs = operator_j(&gen, lam_tab, m_tab, u)?;
    let rhs = left_multiply_ordered(&gen, &lam_tab.content_vector(), &m_tab.content_vector(), u, Variant::RPrime)?;
    Ok(first_difference(&lhs, &rhs))
}

fn first_difference<F: Coeff>(x: &GroupAlgebraElement<F>, y: &GroupAlgebraElement<F>) -> Option<Permutation> {
    if x == y {
        return None;
    }
    x.terms()
        .keys()
        .chain(y.terms().keys())
        .find(|s| x.coeff(s) != y.coeff(s))
        .copied()
        .or_else(|| Some(Permutation::identity(x.degree())))
}

/// Outcome of `x_p I(gen) = I(x_p gen)` at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prop3Report {
    /// `gen R tau` equals `(R' tau) gen'`, the presentation used in `W'`.
    pub presentation_ok: bool,
    /// Indices `p` where the two sides differ.
    pub failing: Vec<usize>,
}

impl Prop3Report {
    pub fn passed(&self) -> bool {
        self.presentation_ok && self.failing.is_empty()
    }
}

/// `I` is right multiplication by `R_LM tau`. The left side is computed in
/// `W'` on the presentation `I(gen) = (R' tau) gen'`, the right side in `W`.
pub fn check_prop3<F: Coeff>(lam_tab: &StandardTableau, m_tab: &StandardTableau, u: &F) -> Result<Prop3Report> {
    let (l, m) = (lam_tab.size(), m_tab.size());
    let n = l + m;
    let tau = Permutation::tau(l, m);
    let w = Realization::at_u(lam_tab, m_tab, u, false);
    let wp = Realization::at_u(lam_tab, m_tab, u, true);

    let image = operator_j(w.generator(), lam_tab, m_tab, u)?.mul_perm_right(&tau);
    let a_prime = build_r::<F>(lam_tab, m_tab, Variant::RPrime, u)?.mul_perm_right(&tau);
    let presentation_ok = wp.raw(&a_prime)? == image;

    let one = GroupAlgebraElement::one(n);
    let mut failing = Vec::new();
    for p in 1..=n {
        let lhs = wp.raw(&wp.apply_x(p, &a_prime)?)?;
        let xp_gen = w.raw(&w.apply_x(p, &one)?)?;
        let rhs = operator_j(&xp_gen, lam_tab, m_tab, u)?.mul_perm_right(&tau);
        if lhs != rhs {
            failing.push(p);
        }
    }
    Ok(Prop3Report { presentation_ok, failing })
}

/// `R_LM(z,w) tau R_ML(w,z) tau^{-1}`.
pub fn composite_i_prime_i<F: Coeff>(lam_tab: &StandardTableau, m_tab: &StandardTableau, u: &F) -> Result<GroupAlgebraElement<F>> {
    let (l, m) = (lam_tab.size(), m_tab.size());
    let tau = Permutation::tau(l, m);
    let r = build_r::<F>(lam_tab, m_tab, Variant::R, u)?.mul_perm_right(&tau);
    let rr = right_multiply_ordered(&r, &m_tab.content_vector(), &lam_tab.content_vector(), &u.negate(), Variant::R)?;
    Ok(rr.mul_perm_right(&tau.inverse()))
}

/// `prod_{p,q} (1 - (u + c_p - d_q)^-2)`.
pub fn composite_scalar<F: Coeff>(lam_tab: &StandardTableau, m_tab: &StandardTableau, u: &F) -> Result<F> {
    let mut acc = F::one();
    for c in lam_tab.content_vector() {
        for d in m_tab.content_vector() {
            let x = u.plus(&F::from_i64(c - d));
            let inv = x.recip().ok_or(Error::DivisionByZero)?;
            acc = acc.times(&F::one().minus(&inv.times(&inv)));
        }
    }
    Ok(acc)
}

/// Scalar by which `J` (or `J'`) acts on one isotypic component.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenvalueResult<F: Coeff> {
    pub nu: Partition,
    pub value: F,
    /// Permutation whose coefficient fixed the ratio.
    pub witness: Permutation,
}

/// The `nu`-component of `W` for fixed tableaux: `A = Z_nu F_L Fbar_M`,
/// computed once and reused for every point.
#[derive(Clone, Debug)]
pub struct Component {
    nu: Partition,
    lam_tab: StandardTableau,
    m_tab: StandardTableau,
    a: GroupAlgebraElement<Rational>,
}

impl Component {
    pub fn new(nu: &Partition, lam_tab: &StandardTableau, m_tab: &StandardTableau) -> Result<Self> {
        let n = lam_tab.size() + m_tab.size();
        if nu.size() != n {
            return Err(Error::SizeMismatch(nu.size(), n));
        }
        let a = central_idempotent(nu).mul(&module_generator(lam_tab, m_tab))?;
        if a.is_zero() {
            return Err(Error::NotInModule { nu: nu.to_string() });
        }
        Ok(Component { nu: nu.clone(), lam_tab: lam_tab.clone(), m_tab: m_tab.clone(), a })
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    pub fn projection(&self) -> &GroupAlgebraElement<Rational> {
        &self.a
    }

    /// `r_nu(z, w)` at `u`.
    pub fn eigenvalue<F: Coeff>(&self, u: &F) -> Result<EigenvalueResult<F>> {
        let a = self.a.map_coeffs(F::from_rational);
        let b = operator_j(&a, &self.lam_tab, &self.m_tab, u)?;
        self.ratio(&a, &b)
    }

    /// `r'_nu(w, z)`: `J'` on `W' = W tau`, i.e. right multiplication of
    /// `tau^{-1} A tau` by `R_ML(w, z)`.
    pub fn eigenvalue_prime<F: Coeff>(&self, u: &F) -> Result<EigenvalueResult<F>> {
        let tau = Permutation::tau(self.lam_tab.size(), self.m_tab.size());
        let a = self.a.conjugate_by(&tau)?.map_coeffs(F::from_rational);
        let b = right_multiply_ordered(
            &a,
            &self.m_tab.content_vector(),
            &self.lam_tab.content_vector(),
            &u.negate(),
            Variant::R,
        )?;
        self.ratio(&a, &b)
    }

    /// [`Component::eigenvalue`] at a rational point with denominators
    /// cleared: for `u = P/Q` each factor is `(P + kQ - Q s) / (P + kQ)`, so
    /// the products run over integer coefficients and the scalar
    /// `prod (P + kQ)` is divided out once at the end.
    pub fn eigenvalue_at(&self, u: &Rational) -> Result<EigenvalueResult<Rational>> {
        let a = integral(&self.a);
        self.cleared(&a, &self.lam_tab.content_vector(), &self.m_tab.content_vector(), u)
    }

    /// [`Component::eigenvalue_prime`] with denominators cleared.
    pub fn eigenvalue_prime_at(&self, u: &Rational) -> Result<EigenvalueResult<Rational>> {
        let tau = Permutation::tau(self.lam_tab.size(), self.m_tab.size());
        let a = integral(&self.a.conjugate_by(&tau)?);
        self.cleared(&a, &self.m_tab.content_vector(), &self.lam_tab.content_vector(), &-u)
    }

    fn cleared(
        &self,
        a: &GroupAlgebraElement<Rational>,
        first: &[i64],
        second: &[i64],
        u: &Rational,
    ) -> Result<EigenvalueResult<Rational>> {
        match cleared_dense(a, first, second, u) {
            Some(Dense::Value { value, witness }) => Ok(EigenvalueResult { nu: self.nu.clone(), value, witness }),
            Some(Dense::NotProportional) => Err(Error::NotProportional { nu: self.nu.to_string() }),
            Some(Dense::Pole) => Err(Error::Pole(u.clone())),
            None => self.cleared_big(a, first, second, u),
        }
    }

    fn cleared_big(
        &self,
        a: &GroupAlgebraElement<Rational>,
        first: &[i64],
        second: &[i64],
        u: &Rational,
    ) -> Result<EigenvalueResult<Rational>> {
        let n = a.degree();
        let (p, q) = (Rational::from_integer(u.numer().clone()), Rational::from_integer(u.denom().clone()));
        let minus_q = -q.clone();
        let mut b = a.clone();
        let mut scale = Rational::from_integer(1.into());
        for (i, j) in factor_order(first.len(), second.len(), Variant::R) {
            let d = &p + &q * Rational::from_integer((first[i - 1] - second[j - 1]).into());
            if Zero::is_zero(&d) {
                return Err(Error::Pole(u.clone()));
            }
            b = b.mul_binomial_right(&d, &minus_q, &Permutation::transposition(n, i, first.len() + j));
            scale *= &d;
        }
        let mut r = self.ratio(a, &b)?;
        r.value /= scale;
        Ok(r)
    }

    fn ratio<F: Coeff>(&self, a: &GroupAlgebraElement<F>, b: &GroupAlgebraElement<F>) -> Result<EigenvalueResult<F>> {
        let (witness, a0) = a.terms().iter().next().map(|(s, c)| (*s, c.clone())).expect("nonzero projection");
        let r = b.coeff(&witness).times(&a0.recip().expect("stored coefficients are nonzero"));
        if *b != a.scale(&r) {
            return Err(Error::NotProportional { nu: self.nu.to_string() });
        }
        Ok(EigenvalueResult { nu: self.nu.clone(), value: r, witness })
    }
}

enum Dense {
    Value { value: Rational, witness: Permutation },
    NotProportional,
    Pole,
}

/// Permutations of one degree with their positions, for dense vectors.
struct DenseIndex {
    perms: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

fn dense_index(n: usize) -> Arc<DenseIndex> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<DenseIndex>>>> = OnceLock::new();
    let mut cache = CACHE.get_or_init(Default::default).lock().expect("index cache");
    cache
        .entry(n)
        .or_insert_with(|| {
            let perms = Permutation::all(n);
            let index = perms.iter().enumerate().map(|(k, s)| (*s, k)).collect();
            Arc::new(DenseIndex { perms, index })
        })
        .clone()
}

/// The cleared-denominator product on a dense `i128` vector indexed by
/// permutations. `None` when some number leaves the `i128` range.
fn cleared_dense(a: &GroupAlgebraElement<Rational>, first: &[i64], second: &[i64], u: &Rational) -> Option<Dense> {
    let n = a.degree();
    if n > 8 {
        return None;
    }
    let idx = dense_index(n);
    let (p, q) = (u.numer().to_i128()?, u.denom().to_i128()?);
    let mut x = vec![0i128; idx.perms.len()];
    for (s, c) in a.terms() {
        x[idx.index[s]] = c.to_integer().to_i128()?;
    }
    let a_dense = x.clone();
    let mut scale = Rational::from_integer(1.into());
    for (i, j) in factor_order(first.len(), second.len(), Variant::R) {
        let d = p.checked_add(q.checked_mul((first[i - 1] - second[j - 1]) as i128)?)?;
        if d == 0 {
            return Some(Dense::Pole);
        }
        scale *= Rational::from_integer(d.into());
        let t = Permutation::transposition(n, i, first.len() + j);
        let mut y = vec![0i128; x.len()];
        for (r, &c) in x.iter().enumerate() {
            if c == 0 {
                continue;
            }
            y[r] = y[r].checked_add(d.checked_mul(c)?)?;
            let k = idx.index[&idx.perms[r].compose(&t)];
            y[k] = y[k].checked_sub(q.checked_mul(c)?)?;
        }
        x = y;
    }
    let (witness, _) = a.terms().iter().next()?;
    let w = idx.index[witness];
    let (aw, bw) = (a_dense[w], x[w]);
    for (&ar, &br) in a_dense.iter().zip(&x) {
        if br.checked_mul(aw)? != bw.checked_mul(ar)? {
            return Some(Dense::NotProportional);
        }
    }
    let value = Rational::from_integer(bw.into()) / (Rational::from_integer(aw.into()) * scale);
    Some(Dense::Value { value, witness: *witness })
}

/// `x` scaled by the least common multiple of its denominators.
fn integral(x: &GroupAlgebraElement<Rational>) -> GroupAlgebraElement<Rational> {
    let l = x.terms().values().fold(num_bigint::BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    x.scale(&Rational::from_integer(l))
}

/// Rebuilds a rational function of degree at most `bound` in numerator and
/// denominator from `2 bound + 1` or more values.
pub fn interpolate_values(values: &[(Rational, Rational)], bound: usize) -> Result<RatFunc> {
    if values.len() < 2 * bound + 1 {
        return Err(Error::Precondition(format!("{} points for degree bound {bound}", values.len())));
    }
    ratfunc_interpolate(values, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::points::generic_points;
    use crate::tableau::{column_tableau, enumerate_standard};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn t(s: &str) -> StandardTableau {
        StandardTableau::parse(s).unwrap()
    }

    fn u() -> RatFunc {
        RatFunc::var()
    }

    fn lin(k: i64) -> RatFunc {
        RatFunc::linear(k)
    }

    #[test]
    fn r_single_factor() {
        let r = build_r(&t("1"), &t("1"), Variant::R, &u()).unwrap();
        let s = Permutation::transposition(2, 1, 2);
        assert_eq!(r.coeff(&s), u().inv().unwrap().neg());
        assert_eq!(r, build_r(&t("1"), &t("1"), Variant::RPrime, &u()).unwrap());
    }

    #[test]
    fn r_two_factors() {
        // contents (0, -1): R = f_13(z, w) f_23(z - 1, w)
        let r = build_r(&t("1/2"), &t("1"), Variant::R, &u()).unwrap();
        let f13 = crate::fusion::f_at(3, 1, 3, &u()).unwrap();
        let f23 = crate::fusion::f_at(3, 2, 3, &lin(-1)).unwrap();
        assert_eq!(r, f13.mul(&f23).unwrap());
        let rp = build_r(&t("1/2"), &t("1"), Variant::RPrime, &u()).unwrap();
        assert_eq!(rp, f23.mul(&f13).unwrap());
    }

    #[test]
    fn left_product_matches_full_product() {
        let (lam_tab, m_tab) = (t("1,3/2"), t("1,2"));
        let x = crate::repr::module_generator(&lam_tab, &m_tab).map_coeffs(|c| RatFunc::constant(c.clone()));
        for variant in [Variant::R, Variant::RPrime] {
            let full = build_r(&lam_tab, &m_tab, variant, &u()).unwrap().mul(&x).unwrap();
            let left = left_multiply_ordered(&x, &lam_tab.content_vector(), &m_tab.content_vector(), &u(), variant).unwrap();
            assert_eq!(full, left);
        }
    }

    #[test]
    fn factor_orders() {
        assert_eq!(factor_order(2, 2, Variant::R), vec![(1, 2), (1, 1), (2, 2), (2, 1)]);
        assert_eq!(factor_order(2, 2, Variant::RPrime), vec![(2, 1), (2, 2), (1, 1), (1, 2)]);
    }

    #[test]
    fn j_on_symmetrizers() {
        let s = Permutation::transposition(2, 1, 2);
        let id = Permutation::identity(2);
        let plus = GroupAlgebraElement::from_terms(2, [(id, RatFunc::one()), (s, RatFunc::one())]);
        let out = operator_j(&plus, &t("1"), &t("1"), &u()).unwrap();
        assert_eq!(out, plus.scale(&lin(-1).div(&u()).unwrap()));
        let minus = plus.star();
        let out = operator_j(&minus, &t("1"), &t("1"), &u()).unwrap();
        assert_eq!(out, minus.scale(&lin(1).div(&u()).unwrap()));
        assert!(operator_j(&GroupAlgebraElement::zero(2), &t("1"), &t("1"), &u()).unwrap().is_zero());
    }

    #[test]
    fn eq4_examples() {
        assert_eq!(check_eq4(&t("1"), &t("1"), &int(7)).unwrap(), None);
        assert_eq!(check_eq4(&t("1/2"), &t("1"), &rat(7, 2)).unwrap(), None);
        assert_eq!(check_eq4(&t("1,2"), &t("1"), &rat(-9, 4)).unwrap(), None);
        assert_eq!(check_eq4(&t("1,3/2"), &t("1,2"), &u()).unwrap(), None);
    }

    #[test]
    fn apply_x_examples() {
        let z = int(5);
        let w = int(-2);
        let real = Realization::w_module(&t("1,2"), &StandardTableau::empty(), z.clone(), w.clone());
        let one = GroupAlgebraElement::one(2);
        assert_eq!(real.apply_x(1, &one).unwrap(), one.scale(&z));
        let s = Permutation::transposition(2, 1, 2);
        let a = GroupAlgebraElement::monomial(s, int(1));
        let expected = GroupAlgebraElement::from_terms(2, [(s, z.clone()), (Permutation::identity(2), int(1))]);
        assert_eq!(real.apply_x(2, &a).unwrap(), expected);
        let real = Realization::w_module(&t("1"), &t("1"), z, w.clone());
        assert_eq!(real.apply_x(2, &one).unwrap(), one.scale(&w));
        assert!(real.apply_x(3, &one).is_err());
    }

    /// Oracle: the action computed from `x_{k+1} = s_k x_k s_k + s_k` as a
    /// genuine operator on raw elements of the ideal, built by expressing
    /// `x_p` through the Jucys-Murphy elements of the generator's shapes.
    /// Here we check the defining relations on the realization instead:
    /// `s_k x_k - x_{k+1} s_k = -1` and `x_p x_q = x_q x_p` as operators.
    #[test]
    fn apply_x_satisfies_defining_relations() {
        let (lam_tab, m_tab) = (t("1,3/2"), t("1/2"));
        let real = Realization::w_module(&lam_tab, &m_tab, rat(1, 3), rat(-7, 2));
        let n = real.degree();
        let gen_raw = |a: &GroupAlgebraElement<Rational>| real.raw(a).unwrap();
        for a_perm in Permutation::all(n).into_iter().step_by(11) {
            let a = GroupAlgebraElement::monomial(a_perm, int(1));
            for k in 1..n {
                let sk = Permutation::adjacent(n, k);
                // s_k x_k A - x_{k+1} s_k A = -A
                let lhs = real.apply_x(k, &a).unwrap().mul_perm_left(&sk);
                let rhs = real.apply_x(k + 1, &a.mul_perm_left(&sk)).unwrap();
                assert_eq!(gen_raw(&lhs.sub(&rhs).unwrap()), gen_raw(&a.neg()));
            }
            for p in 1..=n {
                for q in p + 1..=n {
                    let pq = real.apply_x(p, &real.apply_x(q, &a).unwrap()).unwrap();
                    let qp = real.apply_x(q, &real.apply_x(p, &a).unwrap()).unwrap();
                    assert_eq!(gen_raw(&pq), gen_raw(&qp));
                }
            }
        }
    }

    #[test]
    fn prop3_examples() {
        assert!(check_prop3(&t("1"), &t("1"), &int(5)).unwrap().passed());
        assert!(check_prop3(&t("1/2"), &t("1"), &rat(7, 3)).unwrap().passed());
        assert!(check_prop3(&t("1,2"), &t("1/2"), &u()).unwrap().passed());
    }

    #[test]
    fn eigenvalue_examples() {
        let c = Component::new(&p("2"), &t("1"), &t("1")).unwrap();
        assert_eq!(c.eigenvalue(&u()).unwrap().value, lin(-1).div(&u()).unwrap());
        assert_eq!(c.eigenvalue_prime(&u()).unwrap().value, lin(1).div(&u()).unwrap());
        let c = Component::new(&p("1,1"), &t("1"), &t("1")).unwrap();
        assert_eq!(c.eigenvalue(&u()).unwrap().value, lin(1).div(&u()).unwrap());
        assert_eq!(c.eigenvalue_prime(&u()).unwrap().value, lin(-1).div(&u()).unwrap());
        let c = Component::new(&p("2,1"), &t("1/2"), &t("1")).unwrap();
        assert_eq!(c.eigenvalue(&u()).unwrap().value, lin(-2).div(&lin(-1)).unwrap());
        assert!(matches!(Component::new(&p("3"), &t("1/2"), &t("1")), Err(Error::NotInModule { .. })));
    }

    #[test]
    fn cleared_denominators_agree_with_direct_products() {
        let lam_tab = column_tableau(&p("2,1"));
        let m_tab = t("1,2/3");
        let mut proportional = 0;
        for nu in [p("4,2"), p("3,2,1"), p("2,2,1,1")] {
            let c = Component::new(&nu, &lam_tab, &m_tab).unwrap();
            proportional += c.eigenvalue_at(&rat(1001, 3)).is_ok() as usize;
            for x in generic_points(3, 6, 4) {
                let fast = c.eigenvalue_at(&x).map(|r| r.value);
                assert_eq!(fast, c.eigenvalue(&x).map(|r| r.value));
                let a = integral(c.projection());
                let big = c.cleared_big(&a, &lam_tab.content_vector(), &m_tab.content_vector(), &x);
                assert_eq!(big.map(|r| r.value), fast);
                let prime = c.eigenvalue_prime_at(&x).map(|r| r.value);
                assert_eq!(prime, c.eigenvalue_prime(&x).map(|r| r.value));
            }
        }
        assert_eq!(proportional, 2);
    }

    #[test]
    fn multiplicity_two_is_reported() {
        let c = Component::new(&p("3,2,1"), &t("1,2/3"), &t("1,2/3")).unwrap();
        assert!(matches!(c.eigenvalue(&rat(101, 7)), Err(Error::NotProportional { .. })));
    }

    #[test]
    fn interpolation_recovers_symbolic_eigenvalue() {
        let lam_tab = column_tableau(&p("2,1"));
        let m_tab = t("1,2");
        let c = Component::new(&p("3,2"), &lam_tab, &m_tab).unwrap();
        let symbolic = c.eigenvalue(&u()).unwrap().value;
        let bound = 3 * 2;
        let values: Vec<(Rational, Rational)> = generic_points(9, 5, 2 * bound + 1)
            .into_iter()
            .map(|x| {
                let v = c.eigenvalue(&x).unwrap().value;
                (x, v)
            })
            .collect();
        assert_eq!(interpolate_values(&values, bound).unwrap(), symbolic);
    }

    #[test]
    fn eigenvalue_does_not_depend_on_tableaux() {
        let nu = p("3,1");
        let mut seen = Vec::new();
        for lam_tab in enumerate_standard(&p("2,1")) {
            let c = Component::new(&nu, &lam_tab, &t("1")).unwrap();
            seen.push(c.eigenvalue(&u()).unwrap().value);
        }
        assert!(seen.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn composite_is_scalar() {
        for (lt, mt) in [("1", "1"), ("1/2", "1"), ("1,3/2", "1,2")] {
            let (lam_tab, m_tab) = (t(lt), t(mt));
            let comp = composite_i_prime_i(&lam_tab, &m_tab, &u()).unwrap();
            assert_eq!(comp.scalar_value(), Some(composite_scalar(&lam_tab, &m_tab, &u()).unwrap()));
        }
        let one_minus = RatFunc::one().sub(&u().mul(&u()).inv().unwrap());
        assert_eq!(composite_scalar(&t("1"), &t("1"), &u()).unwrap(), one_minus);
    }

    #[test]
    fn point_policy() {
        assert!(check_point(&int(3), 3).is_err());
        assert!(check_point(&int(-3), 3).is_err());
        assert!(check_point(&int(4), 3).is_ok());
        assert!(check_point(&rat(1, 2), 3).is_ok());
    }
}
