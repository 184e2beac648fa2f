use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::lattice::Rational;

/// Finite sum of `c t^e` with rational exponents and integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PuiseuxPoly {
    terms: BTreeMap<Rational, BigInt>,
}

impl PuiseuxPoly {
    pub fn zero() -> Self {
        PuiseuxPoly::default()
    }

    pub fn monomial(exp: Rational, coeff: BigInt) -> Self {
        let mut p = PuiseuxPoly::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn add_term(&mut self, exp: Rational, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, exp: &Rational) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Drops every term with exponent above `max`.
    pub fn truncate(&self, max: &Rational) -> Self {
        PuiseuxPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| *e <= max)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `t -> t^{-1}`.
    pub fn invert(&self) -> Self {
        PuiseuxPoly {
            terms: self.terms.iter().map(|(e, c)| (-e.clone(), c.clone())).collect(),
        }
    }

    /// Multiplies by `1 - t`.
    pub fn times_one_minus_t(&self) -> Self {
        let mut out = self.clone();
        for (e, c) in &self.terms {
            out.add_term(e + Rational::one(), -c.clone());
        }
        out
    }
}

impl fmt::Display for PuiseuxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*t^({e})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{int, rat};

    #[test]
    fn cancellation_removes_terms() {
        let mut p = PuiseuxPoly::monomial(rat(1, 2), int(3));
        p.add_term(rat(1, 2), int(-3));
        assert!(p.is_zero());
    }

    #[test]
    fn one_minus_t() {
        let p = PuiseuxPoly::monomial(rat(0, 1), int(1)).times_one_minus_t();
        assert_eq!(p.coeff(&rat(0, 1)), int(1));
        assert_eq!(p.coeff(&rat(1, 1)), int(-1));
        assert_eq!(p.truncate(&rat(1, 2)).len(), 1);
        assert_eq!(p.invert().coeff(&rat(-1, 1)), int(-1));
    }
}
