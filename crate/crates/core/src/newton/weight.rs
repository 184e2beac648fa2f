use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{newton_polyhedron, NewtonPolyhedron, Support};
use crate::error::{Error, Result};
use crate::lattice::{rat_int, IntVec3, Rational};
use crate::puiseux::PuiseuxPoly;

/// The Newton weight function `ell_f = min_n ell_n / wt_n` over compact faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonWeight {
    faces: Vec<(IntVec3, BigInt)>,
}

impl NewtonWeight {
    pub fn new(poly: &NewtonPolyhedron) -> Result<Self> {
        poly.require_compact()?;
        Ok(NewtonWeight {
            faces: poly
                .compact_faces()
                .iter()
                .map(|f| (f.normal.clone(), f.value.clone()))
                .collect(),
        })
    }

    pub fn from_support(s: &Support) -> Result<Self> {
        NewtonWeight::new(&newton_polyhedron(s)?)
    }

    pub fn eval(&self, p: &IntVec3) -> Rational {
        self.faces
            .iter()
            .map(|(l, w)| Rational::new(l.dot(p), w.clone()))
            .min()
            .expect("at least one compact face")
    }

    /// Every point of `Z^3_{>=0}` (or `Z^3_{>0}` when `positive`) with
    /// `ell_f(p) <= bound`, together with its weight.
    pub fn points_up_to(&self, bound: &Rational, positive: bool) -> Vec<(IntVec3, Rational)> {
        let start = if positive { BigInt::one() } else { BigInt::zero() };
        // ell_f(p) <= R forces ell_n(p) <= R wt_n for some face n
        let limit = |c: usize| -> BigInt {
            self.faces
                .iter()
                .map(|(l, w)| (bound * rat_int(w) / rat_int(l.get(c))).floor().to_integer())
                .max()
                .expect("at least one compact face")
        };
        let (b0, b1) = (limit(0), limit(1));
        let mut out = Vec::new();
        let mut x = start.clone();
        while x <= b0 {
            let mut y = start.clone();
            while y <= b1 {
                let top = self
                    .faces
                    .iter()
                    .map(|(l, w)| {
                        let rest = bound * rat_int(w) - rat_int(&(l.get(0) * &x + l.get(1) * &y));
                        (rest / rat_int(l.get(2))).floor().to_integer()
                    })
                    .max()
                    .expect("at least one compact face");
                let mut z = start.clone();
                while z <= top {
                    let p = IntVec3::from_big(x.clone(), y.clone(), z.clone());
                    let e = self.eval(&p);
                    if &e <= bound {
                        out.push((p, e));
                    }
                    z += 1;
                }
                y += 1;
            }
            x += 1;
        }
        out
    }
}

pub fn newton_weight(s: &Support, p: &IntVec3) -> Result<Rational> {
    if !p.is_nonneg() {
        return Err(Error::OutOfRange("point must have nonnegative coordinates".into()));
    }
    Ok(NewtonWeight::from_support(s)?.eval(p))
}

/// Multiset of rationals in `(-1, 0]`, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpectrumPart {
    entries: Vec<Rational>,
}

impl SpectrumPart {
    pub fn new(mut entries: Vec<Rational>) -> Result<Self> {
        let lo = -Rational::one();
        if entries.iter().any(|e| e <= &lo || e.is_positive()) {
            return Err(Error::Internal("spectrum entry outside (-1, 0]".into()));
        }
        entries.sort();
        Ok(SpectrumPart { entries })
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(value, multiplicity)` pairs in increasing order.
    pub fn multiplicities(&self) -> Vec<(Rational, usize)> {
        let mut out: Vec<(Rational, usize)> = Vec::new();
        for e in &self.entries {
            match out.last_mut() {
                Some((v, m)) if v == e => *m += 1,
                _ => out.push((e.clone(), 1)),
            }
        }
        out
    }
}

/// Points of `Z^3_{>0}` on or below the diagram, with their weights.
pub fn positive_points_under(s: &Support) -> Result<Vec<(IntVec3, Rational)>> {
    Ok(NewtonWeight::from_support(s)?.points_up_to(&Rational::one(), true))
}

/// Saito's description: `{ ell_f(p) - 1 : p in Z^3_{>0}, ell_f(p) <= 1 }`.
pub fn saito_spectrum(s: &Support) -> Result<SpectrumPart> {
    SpectrumPart::new(
        positive_points_under(s)?
            .into_iter()
            .map(|(_, e)| e - Rational::one())
            .collect(),
    )
}

/// `sum t^{1 - ell_f(p)}` over `Z^3_{>0}` on or below the diagram.
pub fn poincare_pol_part(s: &Support) -> Result<PuiseuxPoly> {
    let mut out = PuiseuxPoly::zero();
    for (_, e) in positive_points_under(s)? {
        out.add_term(Rational::one() - e, BigInt::one());
    }
    Ok(out)
}

/// `(1 - t) sum_{p >= 0} t^{ell_f(p)}`, all terms with exponent `<= max`.
pub fn poincare_newton(s: &Support, max: &Rational) -> Result<PuiseuxPoly> {
    if !max.is_positive() {
        return Err(Error::OutOfRange("maximal exponent must be positive".into()));
    }
    let w = NewtonWeight::from_support(s)?;
    let mut series = PuiseuxPoly::zero();
    for (_, e) in w.points_up_to(&(max + Rational::one()), false) {
        series.add_term(e, BigInt::one());
    }
    Ok(series.times_one_minus_t().truncate(max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{int, rat};
    use crate::newton::tests::front_page;

    #[test]
    fn weights() {
        let b = Support::brieskorn(2, 3, 7);
        assert_eq!(newton_weight(&b, &IntVec3::new(1, 1, 1)).unwrap(), rat(41, 42));
        assert_eq!(newton_weight(&b, &IntVec3::new(0, 3, 0)).unwrap(), rat(1, 1));
        assert_eq!(newton_weight(&front_page(), &IntVec3::new(1, 1, 1)).unwrap(), rat(23, 43));
        let poly = newton_polyhedron(&front_page()).unwrap();
        for f in poly.compact_faces() {
            for v in &f.vertices {
                assert_eq!(newton_weight(&front_page(), v).unwrap(), rat(1, 1));
            }
        }
    }

    #[test]
    fn no_compact_face() {
        // x y + z^2: every two dimensional face is unbounded
        let s = Support::from_i64(&[[1, 1, 0], [0, 0, 2]]).unwrap();
        assert_eq!(newton_weight(&s, &IntVec3::zero()), Err(Error::NoCompactFace));
        assert_eq!(saito_spectrum(&s), Err(Error::NoCompactFace));
    }

    #[test]
    fn brieskorn_spectra() {
        assert!(saito_spectrum(&Support::brieskorn(2, 3, 5)).unwrap().is_empty());
        assert_eq!(
            saito_spectrum(&Support::brieskorn(2, 3, 7)).unwrap().entries(),
            &[rat(-1, 42)]
        );
        assert!(poincare_pol_part(&Support::brieskorn(2, 3, 5)).unwrap().is_zero());
        assert_eq!(
            poincare_pol_part(&Support::brieskorn(2, 3, 7)).unwrap(),
            PuiseuxPoly::monomial(rat(1, 42), int(1))
        );
    }

    #[test]
    fn zero_multiplicity_counts_face_points() {
        let s = Support::brieskorn(3, 3, 3);
        let sp = saito_spectrum(&s).unwrap();
        let zeros = sp.entries().iter().filter(|e| e.is_zero()).count();
        assert_eq!(zeros, 1);
    }

    #[test]
    fn poincare_low_terms() {
        let p = poincare_newton(&Support::brieskorn(2, 3, 7), &rat(1, 1)).unwrap();
        assert_eq!(p.coeff(&rat(0, 1)), int(1));
        assert_eq!(p.coeff(&rat(41, 42)), int(1));
    }

    #[test]
    fn pol_part_inverts_to_spectrum() {
        let s = front_page();
        let sp = saito_spectrum(&s).unwrap();
        let inv = poincare_pol_part(&s).unwrap().invert();
        let mut from_poly = Vec::new();
        for (e, c) in inv.terms() {
            for _ in 0..usize::try_from(c.clone()).unwrap() {
                from_poly.push(e.clone());
            }
        }
        from_poly.sort();
        assert_eq!(sp.entries(), from_poly.as_slice());
    }
}
