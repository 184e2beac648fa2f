use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Cycle, PlumbingGraph, RatCycle};
use crate::error::{ensure_internal, Error, Result};
use crate::lattice::{rat_int, Rational};
use crate::linalg::{determinant, inverse, is_negative_definite, mat_vec, IntMatrix, RatMatrix};

/// Intersection matrix, its inverse and the dual cycles `E_v^*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionData {
    pub matrix: IntMatrix,
    pub inverse: RatMatrix,
    pub determinant: BigInt,
    /// `|H| = |det I|`.
    pub group_order: BigInt,
    /// `E_v^* = -I^{-1} e_v`, characterized by `(E_v^*, E_w) = -delta_{vw}`.
    pub dual_cycles: Vec<RatCycle>,
}

impl IntersectionData {
    /// Smallest coefficient among all `E_v^*`.
    pub fn min_dual_entry(&self) -> Option<Rational> {
        self.dual_cycles.iter().flat_map(|c| c.coeffs().iter().cloned()).min()
    }

    /// Solves `(X, E_v) = rhs_v` for all `v`.
    pub fn solve(&self, rhs: &[Rational]) -> RatCycle {
        RatCycle::new(mat_vec(&self.inverse, rhs))
    }
}

pub fn intersection_data(g: &PlumbingGraph) -> Result<IntersectionData> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let matrix = g.intersection_matrix();
    if !is_negative_definite(&matrix) {
        return Err(Error::NotNegativeDefinite);
    }
    let inv = inverse(&matrix).ok_or(Error::NotNegativeDefinite)?;
    let det = determinant(&matrix);
    let n = g.len();
    let dual_cycles: Vec<RatCycle> = (0..n)
        .map(|v| RatCycle::new((0..n).map(|w| -inv[w][v].clone()).collect()))
        .collect();
    for (v, ev) in dual_cycles.iter().enumerate() {
        for w in 0..n {
            let want = if v == w { -Rational::one() } else { Rational::zero() };
            ensure_internal!(g.rat_pairing(ev, w) == want, "dual cycle of {v} fails at {w}");
        }
        ensure_internal!(
            ev.coeffs().iter().all(Signed::is_positive),
            "dual cycle of {v} has a nonpositive entry"
        );
    }
    Ok(IntersectionData {
        matrix,
        inverse: inv,
        group_order: det.abs(),
        determinant: det,
        dual_cycles,
    })
}

/// Anticanonical cycle `Z_K`, solving `(Z_K, E_v) = 2 - b_v - 2 g_v`.
pub fn canonical_cycle(g: &PlumbingGraph) -> Result<RatCycle> {
    let data = intersection_data(g)?;
    let rhs: Vec<Rational> = g
        .vertices()
        .iter()
        .map(|x| rat_int(&(BigInt::from(2) - &x.b - BigInt::from(2) * &x.g)))
        .collect();
    Ok(data.solve(&rhs))
}

pub fn numerically_gorenstein(g: &PlumbingGraph) -> Result<bool> {
    Ok(canonical_cycle(g)?.is_integral())
}

/// Artin's minimal cycle by Laufer's algorithm, starting from the lowest id
/// and always adding the smallest `E_v` with `(Z, E_v) > 0`.
pub fn minimal_cycle(g: &PlumbingGraph) -> Result<Cycle> {
    if !is_negative_definite(&g.intersection_matrix()) {
        return Err(Error::NotNegativeDefinite);
    }
    let n = g.len();
    if n == 0 {
        return Ok(Cycle::zero(0));
    }
    let mut z = Cycle::basis(n, 0);
    while let Some(v) = (0..n).find(|&v| g.pairing(&z, v).is_positive()) {
        z.add_e(v);
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{chain, e8, star};
    use crate::graph::Vertex;
    use crate::lattice::{int, rat};

    #[test]
    fn single_vertex() {
        let g = PlumbingGraph::new(vec![Vertex::new(2, 0)], vec![]).unwrap();
        let d = intersection_data(&g).unwrap();
        assert_eq!(d.group_order, int(2));
        assert_eq!(d.dual_cycles[0].coeffs(), &[rat(1, 2)]);
        assert_eq!(minimal_cycle(&g).unwrap(), Cycle::from_i64(&[1]));
    }

    #[test]
    fn e8_data() {
        let g = e8();
        let d = intersection_data(&g).unwrap();
        assert_eq!(d.group_order, int(1));
        assert!(canonical_cycle(&g).unwrap().coeffs().iter().all(Zero::is_zero));
        for i in 0..8 {
            for j in 0..8 {
                let s: Rational = (0..8).map(|k| rat_int(&d.matrix[i][k]) * &d.inverse[k][j]).sum();
                assert_eq!(s, if i == j { rat(1, 1) } else { rat(0, 1) });
            }
        }
    }

    #[test]
    fn chains() {
        let g = chain(&[2, 2, 2, 2]);
        assert_eq!(minimal_cycle(&g).unwrap(), Cycle::from_i64(&[1, 1, 1, 1]));
        assert_eq!(intersection_data(&g).unwrap().group_order, int(5));
        let g = chain(&[3, 1, 4]);
        assert_eq!(intersection_data(&g).unwrap().group_order, int(5));
        assert!(!numerically_gorenstein(&chain(&[3])).unwrap());
    }

    #[test]
    fn non_ade_canonical_cycle() {
        // Brieskorn (2,3,7): central -1 vertex with legs -2, -3, -7
        let verts = vec![Vertex::new(1, 0), Vertex::new(2, 0), Vertex::new(3, 0), Vertex::new(7, 0)];
        let g = PlumbingGraph::new(verts, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let zk = canonical_cycle(&g).unwrap();
        assert_eq!(zk.to_integral().unwrap(), Cycle::from_i64(&[2, 1, 1, 1]));
    }

    fn brute_force_min(g: &PlumbingGraph, bound: i64) -> Option<Vec<i64>> {
        let n = g.len();
        let m: Vec<Vec<i64>> = g
            .intersection_matrix()
            .iter()
            .map(|r| r.iter().map(|x| i64::try_from(x.clone()).unwrap()).collect())
            .collect();
        // vertex v can be checked once all of v and its neighbours are set
        let ready: Vec<usize> = (0..n)
            .map(|v| (0..n).filter(|&w| w == v || m[v][w] != 0).max().unwrap())
            .collect();
        let mut best: Option<Vec<i64>> = None;
        let mut z = vec![0i64; n];
        fn rec(
            i: usize,
            z: &mut Vec<i64>,
            m: &[Vec<i64>],
            ready: &[usize],
            bound: i64,
            best: &mut Option<Vec<i64>>,
        ) {
            let n = z.len();
            if i == n {
                if z.iter().all(|&x| x == 0) {
                    return;
                }
                *best = Some(match best.take() {
                    None => z.clone(),
                    Some(b) => b.iter().zip(z.iter()).map(|(a, c)| *a.min(c)).collect(),
                });
                return;
            }
            for x in 0..=bound {
                z[i] = x;
                let ok = (0..n).filter(|&v| ready[v] == i).all(|v| {
                    (0..n).map(|w| m[v][w] * z[w]).sum::<i64>() <= 0
                });
                if ok {
                    rec(i + 1, z, m, ready, bound, best);
                }
            }
        }
        rec(0, &mut z, &m, &ready, bound, &mut best);
        best
    }

    #[test]
    fn minimal_cycle_matches_brute_force() {
        for g in [e8(), star(2, &[1, 1, 3]), star(3, &[1, 2, 2]), chain(&[2, 3, 2])] {
            let z = minimal_cycle(&g).unwrap();
            let want = brute_force_min(&g, 8).unwrap();
            let got: Vec<i64> = z.coeffs().iter().map(|x| i64::try_from(x.clone()).unwrap()).collect();
            assert_eq!(got, want);
            for v in 0..g.len() {
                assert!(!g.pairing(&z, v).is_positive());
            }
        }
    }
}
