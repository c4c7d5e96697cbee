//! Lens spaces, spin^c labels, and the correction terms d(L(p,q),n)
//! computed three independent ways:
//!
//!   closed     d = 2 s(q,p;n) + s(q,p) - 1/(2p)
//!   recursive  d(p,q,n) = RHS(p,q,n) - d(q, p mod q, n mod q), d(1,-,-) = 0
//!   tange      d = 3 s(q,p) + (p-1)/(2p) + 2 sum_{k=1}^{n} ((2q'k-1)/(2p))
//!
//! with q' the inverse of q mod p. The closed formula runs on an integer
//! kernel over the common denominator 4p^2; the other two keep their own
//! arithmetic, so agreement between the three is a real cross-check.

use num::bigint::BigInt;

use crate::arith::{self, sawtooth};
use crate::dedekind;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Largest supported order. Keeps the kernel's i128 bounds provable:
/// table numerators are below 3p^3 < 2^96.
const MAX_ORDER: i64 = i32::MAX as i64;

/// A lens space in normalized form: order p >= 1, parameter 0 <= q < p
/// coprime to p (q = 0 only for p = 1, which is the 3-sphere).
///
/// Construction follows L(-p,q) = L(p,-q) = -L(p,q): a negative order is
/// replaced by its absolute value and the flip is recorded, after which
/// q is reduced mod p. Consumers of a flipped space receive negated
/// d-values at the same label; the pairing of labels across the flip is
/// a convention of this library, not forced by the normalization itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LensSpace {
    p: i64,
    q: i64,
    flipped: bool,
}

/// A spin^c structure on L(p,q), identified with a residue n in [0, p).
/// Obtained from `LensSpace::spinc`, which reduces any integer mod p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinC(pub(crate) i64);

impl SpinC {
    pub fn index(self) -> i64 {
        self.0
    }
}

impl LensSpace {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == 0 {
            return Err(Error::ZeroOrder);
        }
        let pa = p.checked_abs().ok_or(Error::OrderTooLarge(p))?;
        if pa > MAX_ORDER {
            return Err(Error::OrderTooLarge(p));
        }
        let qc = q.rem_euclid(pa);
        if arith::gcd(pa, qc) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        Ok(LensSpace {
            p: pa,
            q: qc,
            flipped: p < 0,
        })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn orientation_flipped(&self) -> bool {
        self.flipped
    }

    /// Label for the residue of n mod p.
    pub fn spinc(&self, n: i64) -> SpinC {
        SpinC(n.rem_euclid(self.p))
    }

    pub fn spinc_structures(&self) -> impl Iterator<Item = SpinC> + use<> {
        (0..self.p).map(SpinC)
    }

    /// Conjugation involution n -> (q - 1 - n) mod p.
    pub fn conjugate(&self, s: SpinC) -> SpinC {
        self.spinc(self.q - 1 - s.0)
    }

    /// d by the closed formula, on the integer kernel.
    pub fn d_closed(&self, s: SpinC) -> Rational {
        let n = s.0.rem_euclid(self.p);
        let ded = dedekind::dedekind_numerator(self.p, self.q);
        self.oriented(d_from_numerators(
            self.p,
            dedekind::shifted_numerator(self.p, self.q, n),
            ded,
        ))
    }

    /// d by Euclidean descent on the reciprocity law.
    pub fn d_recursive(&self, s: SpinC) -> Rational {
        self.oriented(d_rec_raw(self.p, self.q, s.0.rem_euclid(self.p)))
    }

    /// d by Tange's formula; the sum is empty at n = 0.
    pub fn d_tange(&self, s: SpinC) -> Rational {
        let n = s.0.rem_euclid(self.p);
        if self.p == 1 {
            return Rational::zero();
        }
        let mut acc = tange_base(self.p, self.q);
        let qp = arith::mod_inverse(self.q, self.p).expect("canonical q is invertible");
        for k in 1..=n {
            acc += tange_step(self.p, qp, k);
        }
        self.oriented(acc)
    }

    /// All n at once, sharing the Dedekind term across the table.
    pub fn d_table(&self) -> CorrectionTable {
        CorrectionTable::compute(self)
    }

    /// Tange's formula for the whole table, extending the partial sum
    /// one step per label. Used by the agreement sweep so the third
    /// algorithm stays O(p) per table instead of O(p^2).
    pub(crate) fn tange_table(&self) -> Vec<Rational> {
        if self.p == 1 {
            return vec![Rational::zero()];
        }
        let qp = arith::mod_inverse(self.q, self.p).expect("canonical q is invertible");
        let mut acc = tange_base(self.p, self.q);
        let mut out = Vec::with_capacity(self.p as usize);
        out.push(self.oriented(acc.clone()));
        for k in 1..self.p {
            acc += tange_step(self.p, qp, k);
            out.push(self.oriented(acc.clone()));
        }
        out
    }

    fn oriented(&self, v: Rational) -> Rational {
        if self.flipped { -v } else { v }
    }
}

/// 3 s(q,p) + (p-1)/(2p), the n = 0 value of Tange's formula.
fn tange_base(p: i64, q: i64) -> Rational {
    let s = dedekind::dedekind_sum(q, p).expect("canonical pair is coprime");
    Rational::from_int(3) * s + Rational::new(p - 1, 2 * p)
}

/// 2 (( (2 q' k - 1) / (2p) )), the k-th increment of Tange's sum.
fn tange_step(p: i64, qp: i64, k: i64) -> Rational {
    let t = (2 * qp as i128 * k as i128 - 1).rem_euclid(2 * p as i128) as i64;
    Rational::from_int(2) * sawtooth(&Rational::new(t, 2 * p))
}

/// d = 2 s(q,p;n) + s(q,p) - 1/(2p) assembled from kernel numerators:
/// (2 rad + ded - 2p) / (4p^2).
fn d_from_numerators(p: i64, rad: i128, ded: i128) -> Rational {
    let p128 = p as i128;
    Rational::new(
        BigInt::from(2 * rad + ded - 2 * p128),
        BigInt::from(4 * p128 * p128),
    )
}

fn d_rec_raw(p: i64, q: i64, n: i64) -> Rational {
    if p == 1 {
        return Rational::zero();
    }
    rhs_fused(p, q, n) - d_rec_raw(q, p % q, n % q)
}

/// The reciprocity right-hand side as a single fraction over 4pq.
/// Used inside the descent; unit tests pin it to `reciprocity_rhs`.
fn rhs_fused(p: i64, q: i64, n: i64) -> Rational {
    let (p, q, n) = (p as i128, q as i128, n as i128);
    let numer = p * q + 4 * n * n + 4 * n * (1 - p - q) + p * p + q * q + 1 - 2 * p - 2 * q;
    Rational::new(BigInt::from(numer), BigInt::from(4 * p * q))
}

/// Right-hand side of the reciprocity law for correction terms,
///
///   1/4 + n^2/(pq) + n(1/(pq) - 1/q - 1/p)
///       + (1/4)(p/q + 1/(pq) + q/p) - 1/(2q) - 1/(2p),
///
/// valid for coprime 0 < q < p and 0 <= n < p + q.
pub fn reciprocity_rhs(p: i64, q: i64, n: i64) -> Result<Rational> {
    if q < 1 || q >= p || n < 0 || n >= p + q {
        return Err(Error::ReciprocityRange { p, q, n });
    }
    if arith::gcd(p, q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    let rp = Rational::from_int(p);
    let rq = Rational::from_int(q);
    let rn = Rational::from_int(n);
    let quarter = Rational::new(1, 4);
    let one = Rational::one();
    let pq = &rp * &rq;
    let value = &quarter
        + &rn * &rn / &pq
        + &rn * (&one / &pq - &one / &rq - &one / &rp)
        + quarter * (&rp / &rq + &one / &pq + &rq / &rp)
        - Rational::new(1, 2 * q)
        - Rational::new(1, 2 * p);
    Ok(value)
}

/// The full vector of correction terms of a lens space, indexed by the
/// spin^c label n = 0, ..., p-1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrectionTable {
    lens: LensSpace,
    values: Vec<Rational>,
}

impl CorrectionTable {
    pub fn compute(lens: &LensSpace) -> Self {
        let (p, q) = (lens.p, lens.q);
        let ded = dedekind::dedekind_numerator(p, q);
        let values = dedekind::shifted_numerators(p, q)
            .into_iter()
            .map(|rad| lens.oriented(d_from_numerators(p, rad, ded)))
            .collect();
        CorrectionTable {
            lens: *lens,
            values,
        }
    }

    pub fn lens(&self) -> &LensSpace {
        &self.lens
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, s: SpinC) -> &Rational {
        &self.values[s.0.rem_euclid(self.lens.p) as usize]
    }

    pub fn sum(&self) -> Rational {
        self.values.iter().sum()
    }

    pub fn average(&self) -> Rational {
        self.sum() / Rational::from_int(self.lens.p)
    }

    /// Labels with d = 0, ascending.
    pub fn vanishing(&self) -> Vec<SpinC> {
        (0..self.lens.p)
            .filter(|&n| self.values[n as usize].is_zero())
            .map(SpinC)
            .collect()
    }
}
