//! Dedekind and Dedekind-Rademacher sums by direct summation.
//!
//!   s(q,p)       = sum_{k=0}^{p-1} ((kq/p)) ((k/p))
//!   s(q,p;n)     = sum_{k=0}^{p-1} B1((kq+n)/p) B1(k/p)
//!   sigma(q,p;n) = sum_{k=0}^{p-1} (((kq+n)/p)) ((k/p))
//!
//! The public sums are evaluated term by term over exact rationals,
//! with no algebraic shortcuts: they are the reference the crate-internal
//! integer kernels below are checked against. All three sums depend on
//! q and n only mod p, and both arguments are reduced before summing.

use crate::arith::{self, bernoulli1};
use crate::error::{Error, Result};
use crate::rational::Rational;

fn validate(q: i64, p: i64) -> Result<()> {
    if p < 1 {
        return Err(Error::NonPositiveModulus(p));
    }
    if arith::gcd(q.rem_euclid(p), p) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    Ok(())
}

/// Values B1(j/p) = (2j - p)/(2p) for j = 0, ..., p-1.
pub(crate) fn bernoulli1_table(p: i64) -> Vec<Rational> {
    (0..p).map(|j| Rational::new(2 * j - p, 2 * p)).collect()
}

/// Values ((j/p)) for j = 0, ..., p-1; differs from the B1 table only at
/// j = 0, where the sawtooth vanishes.
pub(crate) fn sawtooth_table(p: i64) -> Vec<Rational> {
    (0..p)
        .map(|j| {
            if j == 0 {
                Rational::zero()
            } else {
                Rational::new(2 * j - p, 2 * p)
            }
        })
        .collect()
}

/// Numerator of s(q,p;n) on the common denominator 4p^2: the same direct
/// summation as `rademacher_sum` with the constant denominator factored
/// out of the walk, so each term is a product of two bounded integers.
/// Expects p >= 1 and reduced 0 <= q, n < p.
pub(crate) fn shifted_numerator(p: i64, q: i64, n: i64) -> i128 {
    let pu = p as usize;
    let qu = q as usize;
    let mut idx = n as usize;
    let mut acc: i128 = 0;
    for k in 0..pu {
        let a = (2 * idx as i64 - p) as i128;
        let b = (2 * k as i64 - p) as i128;
        acc += a * b;
        idx += qu;
        if idx >= pu {
            idx -= pu;
        }
    }
    acc
}

/// Numerators of s(q,p;n) on 4p^2 for every shift n = 0, ..., p-1.
pub(crate) fn shifted_numerators(p: i64, q: i64) -> Vec<i128> {
    (0..p).map(|n| shifted_numerator(p, q, n)).collect()
}

/// Numerator of s(q,p) on 4p^2. The sawtooth and B1 walks differ only in
/// the k = 0 term, which contributes p^2 to the B1 walk and 0 here.
pub(crate) fn dedekind_numerator(p: i64, q: i64) -> i128 {
    shifted_numerator(p, q, 0) - (p as i128) * (p as i128)
}

/// Numerators of sigma(q,p;n) on 4p^2 for all n. Obtained from the B1
/// numerators by zeroing the two integer-argument terms: at k = 0 the
/// second factor is B1(0) = -1/2, and at k = k_q(n) the first factor is;
/// the sawtooth kills both. For n = 0 those terms coincide at k = 0.
pub(crate) fn sigma_numerators(p: i64, q: i64) -> Vec<i128> {
    if p == 1 {
        return vec![0];
    }
    let rad = shifted_numerators(p, q);
    let p128 = p as i128;
    let qp = arith::mod_inverse(q, p).expect("reduced coprime inputs");
    let mut out = Vec::with_capacity(p as usize);
    out.push(rad[0] - p128 * p128);
    let mut kq = 0i64;
    for n in 1..p {
        kq -= qp;
        if kq < 0 {
            kq += p;
        }
        out.push(
            rad[n as usize]
                + p128 * (2 * n as i128 - p128)
                + p128 * (2 * kq as i128 - p128),
        );
    }
    out
}

/// sum_{k=0}^{p-1} table[(kq + n) mod p] * table[k], with p = table.len().
///
/// The residue walk replaces the per-term mod; q and n are reduced first.
pub(crate) fn shifted_sum(table: &[Rational], q: i64, n: i64) -> Rational {
    let p = table.len();
    let q = q.rem_euclid(p as i64) as usize;
    let mut idx = n.rem_euclid(p as i64) as usize;
    let mut acc = Rational::zero();
    for k in 0..p {
        acc += &table[idx] * &table[k];
        idx += q;
        if idx >= p {
            idx -= p;
        }
    }
    acc
}

/// Classical Dedekind sum s(q,p).
pub fn dedekind_sum(q: i64, p: i64) -> Result<Rational> {
    validate(q, p)?;
    Ok(shifted_sum(&sawtooth_table(p), q, 0))
}

/// Dedekind-Rademacher sum s(q,p;n).
pub fn rademacher_sum(q: i64, p: i64, n: i64) -> Result<Rational> {
    validate(q, p)?;
    Ok(shifted_sum(&bernoulli1_table(p), q, n))
}

/// Sawtooth variant sigma(q,p;n); coincides with s(q,p) at n = 0.
pub fn sigma_sum(q: i64, p: i64, n: i64) -> Result<Rational> {
    validate(q, p)?;
    Ok(shifted_sum(&sawtooth_table(p), q, n))
}

/// The unique k in [0,p) with kq + n = 0 (mod p); 0 when p = 1.
pub fn solve_kq(q: i64, p: i64, n: i64) -> Result<i64> {
    validate(q, p)?;
    if p == 1 {
        return Ok(0);
    }
    let inv = arith::mod_inverse(q, p)?;
    let n = n.rem_euclid(p);
    Ok((-((n as i128 * inv as i128) % p as i128)).rem_euclid(p as i128) as i64)
}

/// Closed form of s(q,p;n) - sigma(q,p;n):
///
///   1/4                                  if n = 0 (mod p),
///   -(B1(n/p) + B1(kq/p)) / 2            otherwise,
///
/// where kq solves kq*q + n = 0 (mod p). The difference exists because the
/// two sums disagree exactly at the terms whose argument is an integer.
pub fn s_sigma_delta(q: i64, p: i64, n: i64) -> Result<Rational> {
    validate(q, p)?;
    let n = n.rem_euclid(p);
    if n == 0 {
        return Ok(Rational::new(1, 4));
    }
    let kq = solve_kq(q, p, n)?;
    let sum = bernoulli1(&Rational::new(n, p)) + bernoulli1(&Rational::new(kq, p));
    Ok(-sum / Rational::from_int(2))
}

/// The factor e(q,n) from Knuth's reciprocity law: 1 when n = 0 or q does
/// not divide n, otherwise 0. Requires q >= 1 and n >= 0.
pub fn knuth_e_factor(q: i64, n: i64) -> i64 {
    debug_assert!(q >= 1 && n >= 0);
    if n > 0 && n % q == 0 { 0 } else { 1 }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn dedekind_small_values() {
        assert_eq!(dedekind_sum(1, 5).unwrap(), r(1, 5));
        assert_eq!(dedekind_sum(2, 5).unwrap(), Rational::zero());
        assert_eq!(dedekind_sum(1, 2).unwrap(), Rational::zero());
        assert_eq!(dedekind_sum(7, 27).unwrap(), r(73, 162));
        assert_eq!(dedekind_sum(3, 1).unwrap(), Rational::zero());
    }

    #[test]
    fn dedekind_depends_on_q_mod_p() {
        assert_eq!(dedekind_sum(7, 5).unwrap(), dedekind_sum(2, 5).unwrap());
        assert_eq!(dedekind_sum(-2, 5).unwrap(), dedekind_sum(3, 5).unwrap());
    }

    #[test]
    fn rademacher_small_values() {
        assert_eq!(rademacher_sum(1, 1, 0).unwrap(), r(1, 4));
        assert_eq!(rademacher_sum(2, 5, 0).unwrap(), r(1, 4));
        assert_eq!(rademacher_sum(1, 5, 1).unwrap(), r(1, 20));
        assert_eq!(rademacher_sum(2, 5, 3).unwrap(), r(1, 20));
        assert_eq!(rademacher_sum(2, 5, 8).unwrap(), r(1, 20));
        assert_eq!(rademacher_sum(2, 5, -2).unwrap(), r(1, 20));
    }

    #[test]
    fn sigma_small_values() {
        assert_eq!(sigma_sum(1, 1, 0).unwrap(), Rational::zero());
        assert_eq!(sigma_sum(2, 5, 3).unwrap(), r(-1, 20));
        for (q, p) in [(1, 1), (1, 5), (2, 5), (3, 7), (7, 27)] {
            assert_eq!(sigma_sum(q, p, 0).unwrap(), dedekind_sum(q, p).unwrap());
        }
    }

    #[test]
    fn quarter_shift_at_zero() {
        for (q, p) in [(1, 1), (1, 2), (2, 5), (7, 27), (12, 31)] {
            let shifted = rademacher_sum(q, p, 0).unwrap();
            let plain = dedekind_sum(q, p).unwrap();
            assert_eq!(shifted - plain, r(1, 4));
        }
    }

    #[test]
    fn solve_kq_values() {
        assert_eq!(solve_kq(1, 5, 2).unwrap(), 3);
        assert_eq!(solve_kq(7, 27, 9).unwrap(), 18);
        assert_eq!(solve_kq(3, 1, 12).unwrap(), 0);
        // kq * q + n = 0 mod p across a small grid
        for p in 1..=30i64 {
            for q in 1..=p {
                if arith::gcd(q, p) != 1 {
                    continue;
                }
                for n in 0..p {
                    let k = solve_kq(q, p, n).unwrap();
                    assert!((0..p.max(1)).contains(&k));
                    assert_eq!((k * q + n).rem_euclid(p), 0);
                }
            }
        }
    }

    #[test]
    fn delta_matches_direct_difference() {
        assert_eq!(s_sigma_delta(2, 5, 3).unwrap(), r(1, 10));
        assert_eq!(s_sigma_delta(1, 5, 2).unwrap(), Rational::zero());
        assert_eq!(s_sigma_delta(2, 5, 0).unwrap(), r(1, 4));
        for p in 1..=25i64 {
            for q in 1..=p {
                if arith::gcd(q, p) != 1 {
                    continue;
                }
                for n in 0..p {
                    let direct =
                        rademacher_sum(q, p, n).unwrap() - sigma_sum(q, p, n).unwrap();
                    assert_eq!(s_sigma_delta(q, p, n).unwrap(), direct, "q={q} p={p} n={n}");
                }
            }
        }
    }

    #[test]
    fn integer_kernels_match_definitional_sums() {
        for p in 1..=40i64 {
            let denom = 4 * p as i128 * p as i128;
            for q in 0..p.max(1) {
                if arith::gcd(q, p) != 1 {
                    continue;
                }
                let rad = shifted_numerators(p, q);
                let sig = sigma_numerators(p, q);
                let ded = Rational::new(dedekind_numerator(p, q), denom);
                assert_eq!(ded, dedekind_sum(q, p).unwrap());
                for n in 0..p {
                    let s = Rational::new(rad[n as usize], denom);
                    assert_eq!(s, rademacher_sum(q, p, n).unwrap(), "s q={q} p={p} n={n}");
                    let sg = Rational::new(sig[n as usize], denom);
                    assert_eq!(sg, sigma_sum(q, p, n).unwrap(), "sigma q={q} p={p} n={n}");
                }
            }
        }
    }

    #[test]
    fn e_factor_cases() {
        assert_eq!(knuth_e_factor(3, 0), 1);
        assert_eq!(knuth_e_factor(3, 6), 0);
        assert_eq!(knuth_e_factor(3, 7), 1);
        assert_eq!(knuth_e_factor(1, 4), 0);
        assert_eq!(knuth_e_factor(1, 0), 1);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert_eq!(
            dedekind_sum(2, 4),
            Err(Error::NotCoprime { p: 4, q: 2 })
        );
        assert_eq!(rademacher_sum(3, 0, 1), Err(Error::NonPositiveModulus(0)));
        assert_eq!(sigma_sum(5, -5, 1), Err(Error::NonPositiveModulus(-5)));
        assert!(solve_kq(10, 15, 2).is_err());
    }
}
