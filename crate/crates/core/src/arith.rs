//! Elementary pieces the sums are built from: the sawtooth function, the
//! periodic first Bernoulli polynomial, and modular inversion.
//!
//! Both periodic functions agree off the integers:
//!
//!   ((x))   = x - floor(x) - 1/2   for x not an integer, 0 on integers
//!   B1(x)   = {x} - 1/2            everywhere, so B1(k) = -1/2 on integers
//!
//! The single point of disagreement is exactly what separates the sigma
//! variant of the shifted sums from the Dedekind-Rademacher form.

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Sawtooth ((x)): odd, 1-periodic, vanishing on the integers.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        Rational::zero()
    } else {
        x.fract() - Rational::new(1, 2)
    }
}

/// Periodic Bernoulli B1(x) = {x} - 1/2, equal to -1/2 on the integers.
pub fn bernoulli1(x: &Rational) -> Rational {
    x.fract() - Rational::new(1, 2)
}

/// Inverse of q modulo p, as the unique representative in 1..p.
///
/// Requires p >= 2 and gcd(q, p) = 1; q may be any integer.
pub fn mod_inverse(q: i64, p: i64) -> Result<i64> {
    if p < 2 {
        return Err(Error::InversionModulus(p));
    }
    let q = q.rem_euclid(p);
    // Extended Euclid, tracking only the coefficient of q. All
    // intermediate coefficients are bounded by p, so i64 suffices.
    let (mut r0, mut r1) = (q, p);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (s0, s1) = (s1, s0 - k * s1);
    }
    if r0 != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    Ok(s0.rem_euclid(p))
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    num::integer::gcd(a, b)
}
