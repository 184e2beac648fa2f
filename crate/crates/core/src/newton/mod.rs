//! Newton polyhedra of supports in `Z^3_{>=0}`.

mod anatomy;
mod chart;
mod weight;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{ensure_internal, Error, Result};
use crate::lattice::{int, IntVec3, Rational};
use crate::polygon::LatticePolygon2;

pub use anatomy::{classify_diagram, Anatomy, CentralPart};
pub use chart::PlaneChart;
pub use weight::{
    newton_weight, poincare_newton, poincare_pol_part, positive_points_under, saito_spectrum,
    NewtonWeight, SpectrumPart,
};

/// Exponents of the monomials of a function germ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Support {
    points: Vec<IntVec3>,
}

impl Support {
    pub fn new(points: Vec<IntVec3>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidSupport("empty support".into()));
        }
        if points.iter().any(|p| !p.is_nonneg()) {
            return Err(Error::InvalidSupport("negative exponent".into()));
        }
        let set: BTreeSet<IntVec3> = points.into_iter().collect();
        Ok(Support { points: set.into_iter().collect() })
    }

    pub fn from_i64(points: &[[i64; 3]]) -> Result<Self> {
        Support::new(points.iter().map(|p| IntVec3::new(p[0], p[1], p[2])).collect())
    }

    /// `x^a + y^b + z^c`.
    pub fn brieskorn(a: i64, b: i64, c: i64) -> Self {
        Support::from_i64(&[[a, 0, 0], [0, b, 0], [0, 0, c]]).expect("valid exponents")
    }

    pub fn points(&self) -> &[IntVec3] {
        &self.points
    }

    pub fn with_point(&self, p: IntVec3) -> Result<Self> {
        let mut pts = self.points.clone();
        pts.push(p);
        Support::new(pts)
    }

    /// Minimum of a linear functional over the support.
    pub fn min_value(&self, ell: &IntVec3) -> BigInt {
        self.points
            .iter()
            .map(|p| ell.dot(p))
            .min()
            .expect("support is nonempty")
    }
}

/// Kouchnirenko's criterion for an isolated singularity at the origin,
/// applied to every coordinate subspace. Supports containing the origin or a
/// point of degree one do not define a singular point and are rejected.
pub fn is_isolated(s: &Support) -> bool {
    let pts = s.points();
    if pts.iter().any(|p| p.0.iter().sum::<BigInt>() <= BigInt::one()) {
        return false;
    }
    (1u8..8).all(|mask| {
        let in_i = |j: usize| mask & (1 << j) != 0;
        let size = (0..3).filter(|&j| in_i(j)).count();
        let hits = (0..3)
            .filter(|&i| {
                pts.iter().any(|p| {
                    (0..3).all(|j| {
                        let x = p.get(j);
                        if j == i {
                            if in_i(i) { x.is_positive() } else { x.is_one() }
                        } else {
                            in_i(j) || x.is_zero()
                        }
                    })
                })
            })
            .count();
        hits >= size
    })
}

pub fn is_convenient(s: &Support) -> bool {
    (0..3).all(|c| axis_point(s, c).is_some())
}

fn axis_point(s: &Support, c: usize) -> Option<&IntVec3> {
    s.points()
        .iter()
        .find(|p| (0..3).all(|j| (j == c) == p.get(j).is_positive()))
}

/// A two dimensional face of the Newton polyhedron.
///
/// For compact faces `vertices` is the counterclockwise vertex cycle (seen
/// from the normal); for noncompact faces it lists the support points
/// attaining the minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face2D {
    pub normal: IntVec3,
    pub value: BigInt,
    pub vertices: Vec<IntVec3>,
    pub compact: bool,
}

impl Face2D {
    pub fn chart(&self) -> PlaneChart {
        PlaneChart::new(&self.normal, &self.vertices[0])
    }

    /// The face as a lattice polygon in the chart of its plane.
    pub fn polygon(&self) -> Result<LatticePolygon2> {
        let chart = self.chart();
        let pts: Vec<_> = self.vertices.iter().map(|p| chart.to_plane(p)).collect();
        LatticePolygon2::new(&pts)
    }

    /// Lattice points in the relative interior of a compact face.
    pub fn interior_point_count(&self) -> Result<BigInt> {
        Ok(self.polygon()?.interior_point_count())
    }

    /// Every lattice point of a compact face.
    pub fn lattice_points(&self) -> Result<Vec<IntVec3>> {
        let chart = self.chart();
        let poly = self.polygon()?;
        let pts = crate::polygon::scaled_points(&poly, &Rational::one(), &[]);
        Ok(pts.iter().map(|q| chart.to_space(q)).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    faces: Vec<Face2D>,
    n_compact: usize,
    adjacency: BTreeMap<(usize, usize), BigInt>,
}

fn rank(vectors: &[IntVec3]) -> usize {
    let nz: Vec<&IntVec3> = vectors.iter().filter(|v| !v.is_zero()).collect();
    let Some(first) = nz.first() else { return 0 };
    let mut second = None;
    for v in &nz {
        let c = first.cross(v);
        if !c.is_zero() {
            second = Some(c);
            break;
        }
    }
    let Some(n) = second else { return 1 };
    if nz.iter().any(|v| !n.dot(v).is_zero()) {
        3
    } else {
        2
    }
}

fn candidate_normals(s: &Support) -> BTreeSet<IntVec3> {
    let pts = s.points();
    let mut out = BTreeSet::new();
    let mut push = |v: IntVec3| {
        if v.is_zero() {
            return;
        }
        let v = if v.0.iter().all(|x| !x.is_positive()) { -&v } else { v };
        if v.is_nonneg() {
            out.insert(v.primitive());
        }
    };
    for c in 0..3 {
        push(IntVec3::unit(c));
    }
    let n = pts.len();
    for i in 0..n {
        for j in i + 1..n {
            let d = &pts[j] - &pts[i];
            for c in 0..3 {
                push(d.cross(&IntVec3::unit(c)));
            }
            for l in j + 1..n {
                push(d.cross(&(&pts[l] - &pts[i])));
            }
        }
    }
    out
}

fn plane_hull(normal: &IntVec3, points: &[IntVec3]) -> Result<Vec<IntVec3>> {
    let chart = PlaneChart::new(normal, &points[0]);
    let flat: Vec<_> = points.iter().map(|p| chart.to_plane(p)).collect();
    let poly = LatticePolygon2::new(&flat)?;
    let mut verts: Vec<IntVec3> = poly.vertices().iter().map(|q| chart.to_space(q)).collect();
    // start at the smallest vertex for a canonical cycle
    let start = (0..verts.len()).min_by_key(|&i| verts[i].clone()).unwrap_or(0);
    verts.rotate_left(start);
    Ok(verts)
}

/// Builds all two dimensional faces of the Newton polyhedron from candidate
/// normals (cross products of difference vectors among themselves and with
/// the coordinate directions, and the coordinate functionals).
pub fn newton_polyhedron(s: &Support) -> Result<NewtonPolyhedron> {
    if !is_isolated(s) {
        return Err(Error::NotIsolated);
    }
    let mut compact = Vec::new();
    let mut noncompact = Vec::new();
    for normal in candidate_normals(s) {
        let value = s.min_value(&normal);
        let minimal: Vec<IntVec3> = s
            .points()
            .iter()
            .filter(|p| normal.dot(p) == value)
            .cloned()
            .collect();
        let mut dirs: Vec<IntVec3> = minimal.iter().map(|p| p - &minimal[0]).collect();
        dirs.extend((0..3).filter(|&c| normal.get(c).is_zero()).map(IntVec3::unit));
        if rank(&dirs) != 2 {
            continue;
        }
        if normal.is_positive() {
            let vertices = plane_hull(&normal, &minimal)?;
            compact.push(Face2D { normal, value, vertices, compact: true });
        } else {
            noncompact.push(Face2D { normal, value, vertices: minimal, compact: false });
        }
    }
    let n_compact = compact.len();
    let mut faces = compact;
    faces.extend(noncompact);

    let mut adjacency = BTreeMap::new();
    for n in 0..n_compact {
        for m in 0..faces.len() {
            if m == n {
                continue;
            }
            let common: Vec<&IntVec3> = faces[n]
                .vertices
                .iter()
                .filter(|p| faces[m].normal.dot(p) == faces[m].value)
                .collect();
            if common.len() >= 2 {
                ensure_internal!(common.len() == 2, "faces meet in more than an edge");
                let t = (common[1] - common[0]).content();
                adjacency.insert((n, m), t);
            }
        }
    }
    Ok(NewtonPolyhedron { faces, n_compact, adjacency })
}

impl NewtonPolyhedron {
    pub fn faces(&self) -> &[Face2D] {
        &self.faces
    }

    pub fn compact_faces(&self) -> &[Face2D] {
        &self.faces[..self.n_compact]
    }

    pub fn noncompact_faces(&self) -> &[Face2D] {
        &self.faces[self.n_compact..]
    }

    pub fn num_compact(&self) -> usize {
        self.n_compact
    }

    /// `t_{n,m}`: number of primitive segments of `F_n cap F_m`, for compact
    /// `n`; zero when the faces do not share an edge.
    pub fn t(&self, n: usize, m: usize) -> BigInt {
        self.adjacency.get(&(n, m)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn adjacency(&self) -> &BTreeMap<(usize, usize), BigInt> {
        &self.adjacency
    }

    pub fn require_compact(&self) -> Result<()> {
        if self.n_compact == 0 {
            return Err(Error::NoCompactFace);
        }
        Ok(())
    }

    /// Sum of normalized areas of the compact faces.
    pub fn total_normalized_area(&self) -> Result<BigInt> {
        self.compact_faces()
            .iter()
            .map(|f| Ok(f.polygon()?.twice_area()))
            .sum()
    }
}

/// True iff no lattice point with all coordinates positive lies on a compact
/// face.
pub fn is_rhs_link(s: &Support) -> Result<bool> {
    let poly = newton_polyhedron(s)?;
    for f in poly.compact_faces() {
        if f.lattice_points()?.iter().any(IntVec3::is_positive) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn same_compact_faces(old: &NewtonPolyhedron, new: &NewtonPolyhedron) -> bool {
    old.compact_faces()
        .iter()
        .all(|f| new.compact_faces().iter().any(|g| g == f))
}

/// Adds a pure power `x_c^d` on each coordinate axis that carries no support
/// point, with the smallest `d` keeping every old compact face.
pub fn make_convenient(s: &Support) -> Result<Support> {
    let old = newton_polyhedron(s)?;
    let mut out = s.clone();
    for c in 0..3 {
        if axis_point(s, c).is_some() {
            continue;
        }
        let d0 = old
            .compact_faces()
            .iter()
            .map(|f| f.value.div_ceil(f.normal.get(c)))
            .max()
            .unwrap_or_else(|| s.points().iter().map(|p| p.0.iter().sum::<BigInt>()).max().unwrap_or_default())
            .max(int(2));
        let mut d = d0.clone();
        loop {
            let candidate = out.with_point(IntVec3::unit(c).scale(&d))?;
            let poly = newton_polyhedron(&candidate)?;
            if same_compact_faces(&old, &poly) {
                out = candidate;
                break;
            }
            d += 1;
            ensure_internal!(d < &d0 + int(10_000), "no axis power preserves the diagram");
        }
    }
    Ok(out)
}
