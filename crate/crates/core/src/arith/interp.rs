use num_traits::{One, Zero};

use super::{Poly, RatFunc, Rational};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

fn check_distinct(xs: &[&Rational]) -> Result<()> {
    for (i, a) in xs.iter().enumerate() {
        if xs[..i].contains(a) {
            return Err(Error::DuplicateAbscissa((*a).clone()));
        }
    }
    Ok(())
}

/// Lagrange interpolation: the unique polynomial of degree below
/// `points.len()` through every point.
pub fn poly_interpolate(points: &[(Rational, Rational)]) -> Result<Poly> {
    check_distinct(&points.iter().map(|(x, _)| x).collect::<Vec<_>>())?;
    let mut acc = Poly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = Poly::one();
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = basis.mul(&Poly::new(vec![-xj.clone(), Rational::one()]));
                denom *= xi - xj;
            }
        }
        acc = acc.add(&basis.scale(&(yi / denom)));
    }
    Ok(acc)
}

/// Recovers `N/D` with `deg N, deg D <= degree_bound` from at least
/// `2 * degree_bound + 1` samples by solving the linear system
/// `N(x_k) - y_k D(x_k) = 0`. Any nonzero solution gives the same function
/// when the bound holds.
pub fn ratfunc_interpolate(points: &[(Rational, Rational)], degree_bound: usize) -> Result<RatFunc> {
    check_distinct(&points.iter().map(|(x, _)| x).collect::<Vec<_>>())?;
    let d = degree_bound;
    if points.len() < 2 * d + 1 {
        return Err(Error::Precondition(format!(
            "{} samples cannot pin a rational function of degree {d}",
            points.len()
        )));
    }
    let rows = points
        .iter()
        .map(|(x, y)| {
            let powers: Vec<Rational> = std::iter::successors(Some(Rational::one()), |p| Some(p * x))
                .take(d + 1)
                .collect();
            powers.iter().cloned().chain(powers.iter().map(|p| -(p * y))).collect()
        })
        .collect();
    let system = Matrix::from_rows(rows);
    let null = system.null_space();
    let v = null
        .iter()
        .find(|v| v[d + 1..].iter().any(|c| !c.is_zero()))
        .ok_or_else(|| Error::Invariant("no rational function fits the samples".into()))?;
    let f = RatFunc::new(Poly::new(v[..=d].to_vec()), Poly::new(v[d + 1..].to_vec()))?;
    for (x, y) in points {
        if f.eval(x)? != *y {
            return Err(Error::Invariant(format!("samples exceed degree bound {d}")));
        }
    }
    Ok(f)
}
