//! Young's seminormal representations and what is built from them:
//! diagonal matrix elements `F_T`, characters, central idempotents,
//! multiplicities in the induced module and the column antisymmetrizer.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::GroupAlgebraElement;
use crate::arith::{int, Rational};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::partition::{IndexSequence, Partition};
use crate::perm::Permutation;
use crate::tableau::{
    build_gamma_tableau, chain_to_natural, column_tableau, enumerate_standard, StandardTableau,
};

pub type Element = GroupAlgebraElement<Rational>;

/// Action of `s_k` in row form: row `T` of the matrix has `diag[T]` on the
/// diagonal and, when `partner[T] = Some((T', c))`, the entry `c` at `T'`.
#[derive(Clone, Debug)]
struct Adjacent {
    diag: Vec<Rational>,
    partner: Vec<Option<(usize, Rational)>>,
}

/// Seminormal form of the irreducible representation of shape `shape`.
///
/// With `a = c(k+1) - c(k)` and `T' = s_k T`:
/// `s_k v_T = v_T / a + v_{T'}` when `k+1` lies in a lower row of `T`,
/// `s_k v_T = v_T / a + (1 - 1/a^2) v_{T'}` otherwise, and `+-v_T` when
/// `k, k+1` share a row (column).
#[derive(Debug)]
pub struct SeminormalModel {
    shape: Partition,
    basis: Vec<StandardTableau>,
    index: HashMap<Vec<usize>, usize>,
    gens: Vec<Adjacent>,
    rho: OnceLock<HashMap<Permutation, Matrix>>,
}

impl SeminormalModel {
    pub fn new(shape: &Partition) -> Self {
        let basis = enumerate_standard(shape);
        let index: HashMap<Vec<usize>, usize> =
            basis.iter().enumerate().map(|(i, t)| (t.reading_word(), i)).collect();
        let n = shape.size();
        let dim = basis.len();
        let mut gens = Vec::new();
        for k in 1..n {
            let mut g = Adjacent { diag: vec![Rational::zero(); dim], partner: vec![None; dim] };
            for (col, t) in basis.iter().enumerate() {
                let (bk, bk1) = (t.position(k), t.position(k + 1));
                if bk.row == bk1.row {
                    g.diag[col] = int(1);
                } else if bk.col == bk1.col {
                    g.diag[col] = int(-1);
                } else {
                    let a = int(bk1.content() - bk.content());
                    let inv_a = Rational::one() / &a;
                    let coef = if bk1.row > bk.row { int(1) } else { int(1) - &inv_a * &inv_a };
                    let swapped: Vec<usize> = t
                        .reading_word()
                        .iter()
                        .map(|&v| if v == k { k + 1 } else if v == k + 1 { k } else { v })
                        .collect();
                    let row = index[&swapped];
                    g.diag[col] = inv_a;
                    g.partner[row] = Some((col, coef));
                }
            }
            gens.push(g);
        }
        SeminormalModel { shape: shape.clone(), basis, index, gens, rho: OnceLock::new() }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn degree(&self) -> usize {
        self.shape.size()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    pub fn index_of(&self, t: &StandardTableau) -> Option<usize> {
        self.index.get(&t.reading_word()).copied().filter(|_| t.shape() == &self.shape)
    }

    /// Dense matrix of `s_k`.
    pub fn generator(&self, k: usize) -> Matrix {
        self.left_adjacent(k, &Matrix::identity(self.dim()))
    }

    /// `rho(s_k) * m`.
    pub fn left_adjacent(&self, k: usize, m: &Matrix) -> Matrix {
        let g = &self.gens[k - 1];
        let mut out = Matrix::zeros(m.rows(), m.cols());
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                let mut v = &g.diag[r] * &m[(r, c)];
                if let Some((p, coef)) = &g.partner[r] {
                    v += coef * &m[(*p, c)];
                }
                out[(r, c)] = v;
            }
        }
        out
    }

    fn rho_table(&self) -> &HashMap<Permutation, Matrix> {
        self.rho.get_or_init(|| {
            let n = self.degree();
            let mut perms = Permutation::all(n);
            perms.sort_by_key(Permutation::inversions);
            let mut table: HashMap<Permutation, Matrix> = HashMap::with_capacity(perms.len());
            for s in perms {
                let m = match s.left_descent() {
                    None => Matrix::identity(self.dim()),
                    Some(k) => {
                        let rest = Permutation::adjacent(n, k).compose(&s);
                        self.left_adjacent(k, &table[&rest])
                    }
                };
                table.insert(s, m);
            }
            table
        })
    }

    /// Matrix of a group element.
    pub fn rho(&self, s: &Permutation) -> Matrix {
        assert_eq!(s.degree(), self.degree(), "degree mismatch");
        self.rho_table()[s].clone()
    }

    /// Matrix of a group algebra element.
    pub fn rho_of(&self, x: &Element) -> Result<Matrix> {
        if x.degree() != self.degree() {
            return Err(Error::DegreeMismatch(x.degree(), self.degree()));
        }
        let table = self.rho_table();
        let mut out = Matrix::zeros(self.dim(), self.dim());
        for (s, c) in x.terms() {
            out.add_scaled(&table[s], c);
        }
        Ok(out)
    }

    /// Matrix of `s_{1p} + ... + s_{p-1,p}`.
    pub fn jucys_murphy(&self, p: usize) -> Matrix {
        let n = self.degree();
        let table = self.rho_table();
        let mut out = Matrix::zeros(self.dim(), self.dim());
        for k in 1..p {
            out.add_scaled(&table[&Permutation::transposition(n, k, p)], &Rational::one());
        }
        out
    }

    /// Every Jucys-Murphy matrix is diagonal with the contents of the basis
    /// tableaux on the diagonal.
    pub fn check_jucys_murphy(&self) -> Result<()> {
        for p in 1..=self.degree() {
            let x = self.jucys_murphy(p);
            if !x.is_diagonal() {
                return Err(Error::Invariant(format!("x_{p} is not diagonal on {}", self.shape)));
            }
            for (i, t) in self.basis.iter().enumerate() {
                if x[(i, i)] != int(t.content_vector()[p - 1]) {
                    return Err(Error::Invariant(format!("x_{p} on {t} is {} not c_{p}", x[(i, i)])));
                }
            }
        }
        Ok(())
    }

    /// The braid and involution relations of the generators.
    pub fn check_relations(&self) -> Result<()> {
        let n = self.degree();
        let id = Matrix::identity(self.dim());
        for k in 1..n {
            let g = self.generator(k);
            if g.mul(&g) != id {
                return Err(Error::Invariant(format!("s_{k}^2 != 1 on {}", self.shape)));
            }
            for j in k + 1..n {
                let h = self.generator(j);
                let ok = if j == k + 1 {
                    g.mul(&h).mul(&g) == h.mul(&g).mul(&h)
                } else {
                    g.mul(&h) == h.mul(&g)
                };
                if !ok {
                    return Err(Error::Invariant(format!("braid relation s_{k}, s_{j} fails on {}", self.shape)));
                }
            }
        }
        Ok(())
    }
}

/// Shared model for `shape`, built on first use.
pub fn model(shape: &Partition) -> Arc<SeminormalModel> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<SeminormalModel>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().expect("model cache").get(shape) {
        return m.clone();
    }
    let built = Arc::new(SeminormalModel::new(shape));
    cache.lock().expect("model cache").entry(shape.clone()).or_insert(built).clone()
}

/// `F_T = sum_s rho(s)_{TT} s` in `C S_l`, `l = |T|`.
pub fn matrix_element_f(t: &StandardTableau) -> Arc<Element> {
    static CACHE: OnceLock<Mutex<HashMap<StandardTableau, Arc<Element>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().expect("F cache").get(t) {
        return f.clone();
    }
    let md = model(t.shape());
    let i = md.index_of(t).expect("natural-order standard tableau");
    let l = t.size();
    let f = Element::from_terms(l, Permutation::all(l).into_iter().map(|s| {
        let c = md.rho_table()[&s][(i, i)].clone();
        (s, c)
    }));
    let f = Arc::new(f);
    cache.lock().expect("F cache").entry(t.clone()).or_insert(f).clone()
}

/// `F_L * Fbar_M` in `C S_{l+m}`, where `Fbar_M` is `F_M` moved onto the
/// labels `l+1..l+m`.
pub fn module_generator(lam_tab: &StandardTableau, m_tab: &StandardTableau) -> Element {
    let (l, m) = (lam_tab.size(), m_tab.size());
    let f = matrix_element_f(lam_tab);
    let g = matrix_element_f(m_tab);
    // the factors act on disjoint letters, so every product is distinct
    let mut out = Element::zero(l + m);
    for (s, a) in f.terms() {
        let s = s.shifted(0, l + m);
        for (t, b) in g.terms() {
            out.add_term(s.compose(&t.shifted(l, l + m)), a * b);
        }
    }
    out
}

/// Character value by the Murnaghan-Nakayama rule.
pub fn character(shape: &Partition, cycle_type: &Partition) -> Result<i64> {
    if shape.size() != cycle_type.size() {
        return Err(Error::SizeMismatch(shape.size(), cycle_type.size()));
    }
    fn go(beta: &[i64], parts: &[usize]) -> i64 {
        let Some((&r, rest)) = parts.split_first() else {
            return 1;
        };
        let r = r as i64;
        let mut total = 0;
        for (idx, &b) in beta.iter().enumerate() {
            let target = b - r;
            if target < 0 || beta.contains(&target) {
                continue;
            }
            let between = beta.iter().filter(|&&c| c > target && c < b).count();
            let mut next = beta.to_vec();
            next[idx] = target;
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += sign * go(&next, rest);
        }
        total
    }
    let k = shape.len() as i64;
    let beta: Vec<i64> = shape.parts().iter().enumerate().map(|(i, &p)| p as i64 + k - 1 - i as i64).collect();
    Ok(go(&beta, cycle_type.parts()))
}

/// `Z_nu = (dim V_nu / n!) sum_s chi(s^{-1}) s`.
pub fn central_idempotent(nu: &Partition) -> Element {
    let n = nu.size();
    let dim = model(nu).dim() as i64;
    let fact: i64 = (1..=n as i64).product();
    let scale = Rational::new(BigInt::from(dim), BigInt::from(fact));
    let mut by_class: HashMap<Partition, i64> = HashMap::new();
    Element::from_terms(
        n,
        Permutation::all(n).into_iter().map(|s| {
            let ct = s.inverse().cycle_type();
            let chi = *by_class.entry(ct.clone()).or_insert_with(|| character(nu, &ct).expect("sizes agree"));
            (s, &scale * int(chi))
        }),
    )
}

/// Multiplicity of `V_nu` in the ideal generated by `F_L Fbar_M`, as the
/// rank of that element in the `nu` model.
pub fn multiplicity_in_w(nu: &Partition, lam_tab: &StandardTableau, m_tab: &StandardTableau) -> Result<usize> {
    let n = lam_tab.size() + m_tab.size();
    if nu.size() != n {
        return Err(Error::SizeMismatch(nu.size(), n));
    }
    Ok(model(nu).rho_of(&module_generator(lam_tab, m_tab))?.rank())
}

/// `sum sgn(s) s` over the column group of the column tableau of `shape`.
pub fn column_antisymmetrizer(shape: &Partition) -> Element {
    let l = shape.size();
    let col = column_tableau(shape);
    let mut out = Element::one(l);
    for j in 1..=shape.part(1) {
        let labels: Vec<usize> = (1..=shape.conj_part(j)).map(|i| col.rows()[i - 1][j - 1]).collect();
        let k = labels.len();
        let alt = Element::from_terms(
            l,
            Permutation::all(k).into_iter().map(|s| {
                let mut images: Vec<usize> = (1..=l).collect();
                for (pos, &lab) in labels.iter().enumerate() {
                    images[lab - 1] = labels[s.apply(pos + 1) - 1];
                }
                (Permutation::from_images(&images).expect("column permutation"), int(s.sign()))
            }),
        );
        out = out.mul(&alt).expect("same degree");
    }
    out
}

/// Outcome of the check that `F_{L^c} Fbar_M` has a one-dimensional image
/// in `V_gamma`, spanned by `Q v_Gamma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prop6Report {
    pub gamma: Partition,
    pub gamma_tableau: String,
    pub model_dim: usize,
    pub rank: usize,
    pub q_v_nonzero: bool,
    pub q_v_in_image: bool,
}

impl Prop6Report {
    pub fn passed(&self) -> bool {
        self.rank == 1 && self.q_v_nonzero && self.q_v_in_image
    }
}

/// `v_Gamma` is the Young vector of `Gamma` for the chain
/// `l+1, ..., l+m, 1, ..., l`, i.e. `rho(tau)` applied to the basis vector
/// of `Gamma` relabeled to the natural order.
pub fn verify_prop6(
    lam: &Partition,
    mu: &Partition,
    a: &IndexSequence,
    m_tab: &StandardTableau,
) -> Result<Prop6Report> {
    let (l, m) = (lam.size(), mu.size());
    let gamma_tab = build_gamma_tableau(lam, mu, a, m_tab)?;
    let gamma = gamma_tab.shape().clone();
    let md = model(&gamma);
    let natural = chain_to_natural(&gamma_tab)?;
    let e = md.index_of(&natural).ok_or_else(|| Error::Invariant(format!("{natural} not in the model")))?;
    let v = md.rho(&Permutation::tau(l, m)).column(e);

    let x = md.rho_of(&module_generator(&column_tableau(lam), m_tab))?;
    let rank = x.rank();
    let qv = md.rho_of(&column_antisymmetrizer(lam).extend(l + m))?.mul_vec(&v);
    let q_v_nonzero = qv.iter().any(|c| !c.is_zero());
    let q_v_in_image = q_v_nonzero && x.with_column(&qv).rank() == rank;
    Ok(Prop6Report {
        gamma,
        gamma_tableau: gamma_tab.to_string(),
        model_dim: md.dim(),
        rank,
        q_v_nonzero,
        q_v_in_image,
    })
}
