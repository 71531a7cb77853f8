//! Seeded evaluation points.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::Rational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `u = +-P/Q` with `Q` in `2..=9` and `P` a prime above `2 n Q`.
///
/// `|u| > 2n` keeps `u` clear of every integer shift `c_p - d_q` and of all
/// zeros and poles of the closed forms; `P` prime and `Q > 1` make `u` a
/// non-integer.
pub fn generic_point(rng: &mut impl Rng, n: usize) -> Rational {
    let q: u64 = rng.gen_range(2..=9);
    let mut p = 2 * n as u64 * q + 1 + rng.gen_range(0..50);
    while !is_prime(p) {
        p += 1;
    }
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    Rational::new(BigInt::from(sign * p as i64), BigInt::from(q))
}

/// `count` pairwise distinct generic points.
pub fn generic_points(seed: u64, n: usize, count: usize) -> Vec<Rational> {
    let mut r = rng(seed);
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    while out.len() < count {
        let u = generic_point(&mut r, n);
        if !out.contains(&u) {
            out.push(u);
        }
    }
    out
}

/// Small random rational, numerator in `-40..=40`, denominator in `1..=12`.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(BigInt::from(rng.gen_range(-40i64..=40)), BigInt::from(rng.gen_range(1i64..=12)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn generic_points_avoid_integers_and_small_values() {
        for n in 1..=10 {
            for u in generic_points(n as u64, n, 50) {
                assert!(!u.is_integer());
                assert!(u.abs() > Rational::from_integer(BigInt::from(2 * n)));
            }
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(generic_points(3, 6, 5), generic_points(3, 6, 5));
        assert_ne!(generic_points(3, 6, 5), generic_points(4, 6, 5));
    }
}
