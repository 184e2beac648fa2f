use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::lattice::{rat_int, Rational};

/// Element of the lattice `L`: integer coefficients indexed by vertex id.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(Vec<BigInt>);

impl Cycle {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        Cycle(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Cycle(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Cycle(vec![BigInt::zero(); n])
    }

    /// `E_v`.
    pub fn basis(n: usize, v: usize) -> Self {
        let mut z = Cycle::zero(n);
        z.0[v] = BigInt::one();
        z
    }

    /// `E = sum_v E_v`.
    pub fn reduced(n: usize) -> Self {
        Cycle(vec![BigInt::one(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> &BigInt {
        &self.0[v]
    }

    pub fn set(&mut self, v: usize, x: BigInt) {
        self.0[v] = x;
    }

    pub fn add_e(&mut self, v: usize) {
        self.0[v] += 1;
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Cycle) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn to_rat(&self) -> RatCycle {
        RatCycle(self.0.iter().map(rat_int).collect())
    }

    pub fn sum(&self) -> BigInt {
        self.0.iter().sum()
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Add for &Cycle {
    type Output = Cycle;
    fn add(self, o: &Cycle) -> Cycle {
        Cycle(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Cycle {
    type Output = Cycle;
    fn sub(self, o: &Cycle) -> Cycle {
        Cycle(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

/// Element of `L (x) Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatCycle(Vec<Rational>);

impl RatCycle {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        RatCycle(coeffs)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> &Rational {
        &self.0[v]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Rational::is_integer)
    }

    pub fn to_integral(&self) -> Option<Cycle> {
        self.is_integral()
            .then(|| Cycle(self.0.iter().map(Rational::to_integer).collect()))
    }
}

impl Add for &RatCycle {
    type Output = RatCycle;
    fn add(self, o: &RatCycle) -> RatCycle {
        RatCycle(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}
