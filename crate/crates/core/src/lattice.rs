//! Integer vectors in `Z^3`, determinants and denominators of pairs of
//! primitive vectors, and negative continued fractions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// `ceil(n / d)` for `d > 0`.
pub fn ceil_div(n: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!(d.is_positive());
    n.div_ceil(d)
}

pub fn ceil_rat(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

/// A point or linear functional of `Z^3`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVec3(pub [BigInt; 3]);

impl IntVec3 {
    pub fn new(x1: i64, x2: i64, x3: i64) -> Self {
        IntVec3([int(x1), int(x2), int(x3)])
    }

    pub fn from_big(x1: BigInt, x2: BigInt, x3: BigInt) -> Self {
        IntVec3([x1, x2, x3])
    }

    pub fn zero() -> Self {
        IntVec3::new(0, 0, 0)
    }

    pub fn unit(c: usize) -> Self {
        let mut v = IntVec3::zero();
        v.0[c] = BigInt::one();
        v
    }

    pub fn coords(&self) -> &[BigInt; 3] {
        &self.0
    }

    pub fn get(&self, c: usize) -> &BigInt {
        &self.0[c]
    }

    pub fn dot(&self, other: &IntVec3) -> BigInt {
        &self.0[0] * &other.0[0] + &self.0[1] * &other.0[1] + &self.0[2] * &other.0[2]
    }

    pub fn cross(&self, other: &IntVec3) -> IntVec3 {
        let [a1, a2, a3] = &self.0;
        let [b1, b2, b3] = &other.0;
        IntVec3([a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(Signed::is_positive)
    }

    pub fn content(&self) -> BigInt {
        content(self)
    }

    pub fn is_primitive(&self) -> bool {
        content(self).is_one()
    }

    /// Divides by the content; the zero vector is returned unchanged.
    pub fn primitive(&self) -> IntVec3 {
        let c = content(self);
        if c.is_zero() {
            return self.clone();
        }
        self.div_exact(&c)
    }

    pub fn div_exact(&self, d: &BigInt) -> IntVec3 {
        IntVec3(self.0.clone().map(|x| {
            debug_assert!((&x % d).is_zero());
            x / d
        }))
    }

    pub fn scale(&self, k: &BigInt) -> IntVec3 {
        IntVec3(self.0.clone().map(|x| x * k))
    }

    pub fn to_i64(&self) -> Option<[i64; 3]> {
        Some([self.0[0].to_i64()?, self.0[1].to_i64()?, self.0[2].to_i64()?])
    }
}

impl fmt::Display for IntVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

impl Add for &IntVec3 {
    type Output = IntVec3;
    fn add(self, o: &IntVec3) -> IntVec3 {
        IntVec3([&self.0[0] + &o.0[0], &self.0[1] + &o.0[1], &self.0[2] + &o.0[2]])
    }
}

impl Sub for &IntVec3 {
    type Output = IntVec3;
    fn sub(self, o: &IntVec3) -> IntVec3 {
        IntVec3([&self.0[0] - &o.0[0], &self.0[1] - &o.0[1], &self.0[2] - &o.0[2]])
    }
}

impl Neg for &IntVec3 {
    type Output = IntVec3;
    fn neg(self) -> IntVec3 {
        IntVec3(self.0.clone().map(|x| -x))
    }
}

impl Mul<&IntVec3> for &BigInt {
    type Output = IntVec3;
    fn mul(self, v: &IntVec3) -> IntVec3 {
        v.scale(self)
    }
}

/// Greatest common divisor of the absolute values of the coordinates;
/// zero for the zero vector.
pub fn content(v: &IntVec3) -> BigInt {
    v.0.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Which denominator to use when the determinant of a pair is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnitChoice {
    Zero,
    One,
}

impl UnitChoice {
    fn value(self) -> BigInt {
        match self {
            UnitChoice::Zero => BigInt::zero(),
            UnitChoice::One => BigInt::one(),
        }
    }
}

fn check_pair(a: &IntVec3, b: &IntVec3) -> Result<()> {
    if !a.is_primitive() || !b.is_primitive() {
        return Err(Error::NonPrimitiveInput);
    }
    if a == b {
        return Err(Error::EqualVectors);
    }
    Ok(())
}

/// Content of `a x b`.
pub fn determinant_alpha(a: &IntVec3, b: &IntVec3) -> Result<BigInt> {
    check_pair(a, b)?;
    let alpha = content(&a.cross(b));
    if alpha.is_zero() {
        return Err(Error::ParallelVectors);
    }
    Ok(alpha)
}

/// The unique `0 <= beta < alpha` with `content(beta*a + b) = alpha`, or the
/// chosen convention when `alpha = 1`.
///
/// The search is exhaustive; modular inversion of a coordinate fails when
/// every coordinate of `a` shares a factor with `alpha`.
pub fn denominator_beta(a: &IntVec3, b: &IntVec3, unit: UnitChoice) -> Result<BigInt> {
    let alpha = determinant_alpha(a, b)?;
    if alpha.is_one() {
        return Ok(unit.value());
    }
    let mut found = None;
    let mut beta = BigInt::zero();
    while beta < alpha {
        let v = &(&beta * a) + b;
        if content(&v) == alpha {
            if found.is_some() {
                return Err(Error::Internal(format!(
                    "denominator of {a}, {b} is not unique"
                )));
            }
            found = Some(beta.clone());
        }
        beta += 1;
    }
    found.ok_or_else(|| Error::Internal(format!("no denominator found for {a}, {b}")))
}

/// Negative continued fraction `[b_1, ..., b_s] = b_1 - 1/(b_2 - 1/(...))`,
/// normalized by `b_j >= 2` for `j >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CfExpansion {
    terms: Vec<BigInt>,
}

impl CfExpansion {
    pub fn new(terms: Vec<BigInt>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::OutOfRange("empty continued fraction".into()));
        }
        if terms.iter().skip(1).any(|b| *b < int(2)) {
            return Err(Error::OutOfRange("terms after the first must be >= 2".into()));
        }
        Ok(CfExpansion { terms })
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluates the fraction; `None` if an intermediate denominator vanishes.
    pub fn evaluate(&self) -> Option<Rational> {
        let mut acc: Option<Rational> = None;
        for b in self.terms.iter().rev() {
            let b = rat_int(b);
            acc = Some(match acc {
                None => b,
                Some(x) if x.is_zero() => return None,
                Some(x) => b - x.recip(),
            });
        }
        acc
    }
}

/// Expansion of `alpha / beta` for coprime `0 < beta <= alpha`.
pub fn negative_cf(alpha: &BigInt, beta: &BigInt) -> Result<CfExpansion> {
    if !beta.is_positive() || beta > alpha {
        return Err(Error::OutOfRange(format!("need 0 < beta <= alpha, got {alpha}/{beta}")));
    }
    if !alpha.gcd(beta).is_one() {
        return Err(Error::NonCoprime);
    }
    let (mut num, mut den) = (alpha.clone(), beta.clone());
    let mut terms = Vec::new();
    loop {
        let b = ceil_div(&num, &den);
        let rem = &b * &den - &num;
        terms.push(b);
        if rem.is_zero() {
            break;
        }
        num = std::mem::replace(&mut den, rem);
    }
    CfExpansion::new(terms)
}

/// The canonical primitive sequence `a_1..a_s` between `a` and `b`, together
/// with the selfintersection string `b_1..b_s` (as positive integers).
pub fn canonical_primitive_sequence_with_weights(
    a: &IntVec3,
    b: &IntVec3,
    unit: UnitChoice,
) -> Result<(Vec<IntVec3>, Vec<BigInt>)> {
    let alpha = determinant_alpha(a, b)?;
    let beta = denominator_beta(a, b, unit)?;
    if alpha.is_one() {
        return Ok(match unit {
            UnitChoice::Zero => (Vec::new(), Vec::new()),
            UnitChoice::One => (vec![a + b], vec![BigInt::one()]),
        });
    }
    let cf = negative_cf(&alpha, &beta)?;
    let first = (&(&beta * a) + b).div_exact(&alpha);
    let mut seq = vec![first];
    let mut prev = a.clone();
    for (i, bi) in cf.terms().iter().enumerate() {
        let cur = seq[i].clone();
        let next = &(bi * &cur) - &prev;
        prev = cur;
        if i + 1 < cf.len() {
            seq.push(next);
        } else if &next != b {
            return Err(Error::Internal(format!(
                "canonical primitive sequence from {a} does not close at {b}"
            )));
        }
    }
    Ok((seq, cf.terms().to_vec()))
}

pub fn canonical_primitive_sequence(
    a: &IntVec3,
    b: &IntVec3,
    unit: UnitChoice,
) -> Result<Vec<IntVec3>> {
    canonical_primitive_sequence_with_weights(a, b, unit).map(|(s, _)| s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(a: i64, b: i64, c: i64) -> IntVec3 {
        IntVec3::new(a, b, c)
    }

    #[test]
    fn content_examples() {
        assert_eq!(content(&v(2, 4, 6)), int(2));
        assert_eq!(content(&v(11, 5, 7)), int(1));
        assert_eq!(content(&v(0, 0, 0)), int(0));
        assert_eq!(content(&v(0, -6, 9)), int(3));
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(determinant_alpha(&v(11, 5, 7), &v(6, 3, 4)).unwrap(), int(1));
        assert_eq!(determinant_alpha(&v(11, 5, 7), &v(15, 8, 6)).unwrap(), int(13));
        assert_eq!(determinant_alpha(&v(32, 12, 21), &v(0, 0, 1)).unwrap(), int(4));
        assert_eq!(v(11, 5, 7).cross(&v(6, 3, 4)), v(-1, -2, 3));
    }

    #[test]
    fn alpha_errors() {
        assert_eq!(determinant_alpha(&v(2, 4, 6), &v(1, 0, 0)), Err(Error::NonPrimitiveInput));
        assert_eq!(determinant_alpha(&v(1, 2, 3), &v(1, 2, 3)), Err(Error::EqualVectors));
        assert_eq!(determinant_alpha(&v(1, 2, 3), &v(-1, -2, -3)), Err(Error::ParallelVectors));
    }

    #[test]
    fn beta_examples() {
        assert_eq!(denominator_beta(&v(11, 5, 7), &v(15, 8, 6), UnitChoice::Zero).unwrap(), int(1));
        assert_eq!(denominator_beta(&v(32, 12, 21), &v(0, 0, 1), UnitChoice::Zero).unwrap(), int(3));
        assert_eq!(denominator_beta(&v(11, 5, 7), &v(6, 3, 4), UnitChoice::Zero).unwrap(), int(0));
        assert_eq!(denominator_beta(&v(11, 5, 7), &v(6, 3, 4), UnitChoice::One).unwrap(), int(1));
    }

    #[test]
    fn cf_examples() {
        let t = |a: i64, b: i64| -> Vec<i64> {
            negative_cf(&int(a), &int(b)).unwrap().terms().iter().map(|x| x.to_i64().unwrap()).collect()
        };
        assert_eq!(t(13, 1), vec![13]);
        assert_eq!(t(4, 3), vec![2, 2, 2]);
        assert_eq!(t(5, 2), vec![3, 2]);
        assert_eq!(t(1, 1), vec![1]);
        assert_eq!(negative_cf(&int(4), &int(2)), Err(Error::NonCoprime));
        assert!(matches!(negative_cf(&int(3), &int(0)), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn sequence_examples() {
        assert_eq!(
            canonical_primitive_sequence(&v(11, 5, 7), &v(15, 8, 6), UnitChoice::Zero).unwrap(),
            vec![v(2, 1, 1)]
        );
        assert_eq!(
            canonical_primitive_sequence(&v(32, 12, 21), &v(0, 0, 1), UnitChoice::Zero).unwrap(),
            vec![v(24, 9, 16), v(16, 6, 11), v(8, 3, 6)]
        );
        assert!(canonical_primitive_sequence(&v(11, 5, 7), &v(6, 3, 4), UnitChoice::Zero)
            .unwrap()
            .is_empty());
        assert_eq!(
            canonical_primitive_sequence(&v(11, 5, 7), &v(6, 3, 4), UnitChoice::One).unwrap(),
            vec![v(17, 8, 11)]
        );
    }
}
