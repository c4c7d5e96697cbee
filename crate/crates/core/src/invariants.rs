//! Invariants built on the correction terms: the Casson-Walker invariant
//! and its averaging identity, the integrality laws, divisibility
//! obstructions for equal or opposite d-values, vanishing-label searches,
//! and the surgery formulas driven by Alexander-polynomial torsion.

use std::collections::HashSet;

use crate::dedekind;
use crate::error::{Error, Result};
use crate::lens::{CorrectionTable, LensSpace, SpinC};
use crate::rational::Rational;

/// Casson-Walker invariant: lambda(L(p,q)) = s(q,p), negated under an
/// orientation flip. Evaluated by the direct-summation oracle, not the
/// correction-term kernel, so comparing it with `average_d` crosses two
/// independent code paths.
pub fn casson_walker(lens: &LensSpace) -> Rational {
    let s = dedekind::dedekind_sum(lens.q(), lens.p()).expect("canonical pair is coprime");
    if lens.orientation_flipped() { -s } else { s }
}

/// (1/p) sum_n d(L(p,q),n); equals `casson_walker` on every lens space.
pub fn average_d(lens: &LensSpace) -> Rational {
    lens.d_table().average()
}

/// True iff 2p d(L,n) is an integer for every label and 6p s(q,p) is an
/// integer; both always hold.
pub fn check_integrality(lens: &LensSpace) -> bool {
    let p = lens.p();
    let two_p = Rational::from_int(2 * p);
    let table = lens.d_table();
    if !table.values().iter().all(|d| (&two_p * d).is_integer()) {
        return false;
    }
    let six_p = Rational::from_int(6 * p);
    (six_p * casson_walker(lens)).is_integer()
}

/// Outcome of testing one label pair against the divisibility
/// obstructions: when d(n1) = d(n2) then p | 2(n1-n2)(n1+n2-q+1), and
/// when d(n1) = -d(n2) then p | (n1-n2)^2 + (n1+n2-q+1)^2. A hypothesis
/// that did not fire leaves its field `None`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DivisibilityCheck {
    pub values_equal: bool,
    pub values_opposite: bool,
    pub equal_divides: Option<bool>,
    pub opposite_divides: Option<bool>,
}

impl DivisibilityCheck {
    /// Every fired hypothesis is satisfied.
    pub fn holds(&self) -> bool {
        self.equal_divides.unwrap_or(true) && self.opposite_divides.unwrap_or(true)
    }
}

pub fn divisibility_check(lens: &LensSpace, n1: SpinC, n2: SpinC) -> DivisibilityCheck {
    let table = lens.d_table();
    check_pair_with(lens, &table, n1, n2)
}

pub(crate) fn check_pair_with(
    lens: &LensSpace,
    table: &CorrectionTable,
    n1: SpinC,
    n2: SpinC,
) -> DivisibilityCheck {
    let d1 = table.value(n1);
    let d2 = table.value(n2);
    let values_equal = d1 == d2;
    let values_opposite = *d1 == -d2;
    let p = lens.p() as i128;
    let diff = (n1.index() - n2.index()) as i128;
    let cross = (n1.index() + n2.index() - lens.q() + 1) as i128;
    DivisibilityCheck {
        values_equal,
        values_opposite,
        equal_divides: values_equal.then(|| (2 * diff * cross) % p == 0),
        opposite_divides: values_opposite.then(|| (diff * diff + cross * cross) % p == 0),
    }
}

/// Labels with vanishing correction term, ascending.
pub fn vanishing_spinc(lens: &LensSpace) -> Vec<SpinC> {
    lens.d_table().vanishing()
}

/// Summary of how far n -> d(L,n) is from injective on conjugation
/// classes, plus where it vanishes and whether any label pair breaks the
/// divisibility obstructions.
#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub lens: LensSpace,
    /// Labels with d = 0, ascending.
    pub zero_labels: Vec<SpinC>,
    /// Orbits of the conjugation involution; the theoretical maximum of
    /// the image cardinality.
    pub conjugation_classes: usize,
    /// Distinct correction terms. Conjugate labels share a value, so
    /// this is the image size of the map on conjugation classes.
    pub image_cardinality: usize,
    /// Pairs n1 <= n2 whose values are equal or opposite but fail the
    /// corresponding divisibility; always empty.
    pub divisibility_violations: Vec<(SpinC, SpinC)>,
}

impl ObstructionReport {
    pub fn injective_on_classes(&self) -> bool {
        self.image_cardinality == self.conjugation_classes
    }

    /// Every vanishing label is fixed by conjugation. For odd p that pin
    /// is the unique spin structure.
    pub fn zeros_only_self_conjugate(&self) -> bool {
        self.zero_labels
            .iter()
            .all(|&s| self.lens.conjugate(s) == s)
    }
}

pub fn injectivity_report(lens: &LensSpace) -> ObstructionReport {
    let table = lens.d_table();
    let zero_labels = table.vanishing();
    let image: HashSet<&Rational> = table.values().iter().collect();
    let conjugation_classes = lens
        .spinc_structures()
        .filter(|&s| s <= lens.conjugate(s))
        .count();
    let mut divisibility_violations = Vec::new();
    for s1 in lens.spinc_structures() {
        for s2 in lens.spinc_structures().skip(s1.index() as usize) {
            if !check_pair_with(lens, &table, s1, s2).holds() {
                divisibility_violations.push((s1, s2));
            }
        }
    }
    ObstructionReport {
        lens: *lens,
        zero_labels,
        conjugation_classes,
        image_cardinality: image.len(),
        divisibility_violations,
    }
}

/// Alexander polynomial of a knot in symmetric form,
/// Delta(t) = a_0 + sum_{j>0} a_j (t^j + t^-j), normalized so that
/// Delta(1) = a_0 + 2 sum_{j>0} a_j = +-1. Trailing zero coefficients
/// are trimmed at construction; the list is rejected if the
/// normalization fails. Whether the knot is an L-space knot (the
/// hypothesis under which the surgery formula computes an actual
/// d-invariant) is not certified here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderPolynomial {
    coeffs: Vec<i64>,
}

impl AlexanderPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Result<Self> {
        while coeffs.len() > 1 && *coeffs.last().expect("nonempty") == 0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::EmptyAlexanderPolynomial);
        }
        let at_one = coeffs[0] as i128
            + 2 * coeffs[1..].iter().map(|&a| a as i128).sum::<i128>();
        if at_one != 1 && at_one != -1 {
            return Err(Error::AlexanderNormalization(at_one));
        }
        Ok(AlexanderPolynomial { coeffs })
    }

    pub fn unknot() -> Self {
        AlexanderPolynomial { coeffs: vec![1] }
    }

    /// (a_0, a_1, ..., a_m) with a_m nonzero unless m = 0.
    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Delta(1); always +1 or -1 after construction.
    pub fn at_one(&self) -> i64 {
        let v = self.coeffs[0] as i128
            + 2 * self.coeffs[1..].iter().map(|&a| a as i128).sum::<i128>();
        v as i64
    }

    /// Torsion coefficient t_i = sum_{j>=1} j a_{|i|+j}; zero once |i|
    /// reaches the degree.
    pub fn torsion_coefficient(&self, i: i64) -> i64 {
        self.torsion_at(i.unsigned_abs())
    }

    pub(crate) fn torsion_at(&self, i: u64) -> i64 {
        if i >= self.coeffs.len() as u64 {
            return 0;
        }
        let i = i as usize;
        let mut acc: i128 = 0;
        for (idx, &a) in self.coeffs.iter().enumerate().skip(i + 1) {
            acc += (idx - i) as i128 * a as i128;
        }
        i64::try_from(acc).expect("torsion coefficient fits i64")
    }

    /// Delta''(1) = sum_{j>=1} 2 j^2 a_j, from the symmetric form.
    pub fn second_derivative_at_one(&self) -> i64 {
        let mut acc: i128 = 0;
        for (j, &a) in self.coeffs.iter().enumerate().skip(1) {
            acc += 2 * (j as i128) * (j as i128) * a as i128;
        }
        i64::try_from(acc).expect("second derivative fits i64")
    }
}

/// The lens space produced by p/q-surgery on a knot in the 3-sphere.
/// Valid slopes need p, q >= 1 on top of coprimality.
pub fn surgery_lens(p: i64, q: i64) -> Result<LensSpace> {
    if p < 1 || q < 1 {
        return Err(Error::NonPositiveSurgery { p, q });
    }
    LensSpace::new(p, q)
}

/// d of p/q-surgery on a knot with the given Alexander polynomial:
/// d(L(p,q), n mod p) - 2 t_{floor(|n|/q)}. The label convention for n
/// follows the lens-space term (reduce mod p); the torsion index uses
/// |n| as written.
pub fn d_surgery(p: i64, q: i64, n: i64, alex: &AlexanderPolynomial) -> Result<Rational> {
    let lens = surgery_lens(p, q)?;
    let t = alex.torsion_at(n.unsigned_abs() / q as u64);
    Ok(lens.d_closed(lens.spinc(n)) - Rational::from_int(2 * t as i128))
}

/// lambda of p/q-surgery: s(q,p) - (q/p) Delta''(1).
pub fn casson_walker_surgery(p: i64, q: i64, alex: &AlexanderPolynomial) -> Result<Rational> {
    let lens = surgery_lens(p, q)?;
    let dd = Rational::from_int(alex.second_derivative_at_one());
    Ok(casson_walker(&lens) - Rational::new(q, p) * dd)
}
