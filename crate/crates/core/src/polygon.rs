//! Empty lattice polygons: classification up to integral affine isomorphism
//! and the lattice point count of dilated polygons with boundary conditions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{ensure_internal, Error, Result};
use crate::lattice::{ceil_rat, int, rat_int, Rational};

pub type Point2 = [BigInt; 2];

pub fn p2(x: i64, y: i64) -> Point2 {
    [int(x), int(y)]
}

fn sub2(a: &Point2, b: &Point2) -> Point2 {
    [&a[0] - &b[0], &a[1] - &b[1]]
}

fn cross2(a: &Point2, b: &Point2) -> BigInt {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn content2(a: &Point2) -> BigInt {
    a[0].gcd(&a[1])
}

/// Convex lattice polygon with vertices in counterclockwise order, no three
/// consecutive vertices collinear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolygon2 {
    vertices: Vec<Point2>,
}

impl LatticePolygon2 {
    /// Convex hull of `points`.
    pub fn new(points: &[Point2]) -> Result<Self> {
        let mut pts: Vec<Point2> = points.to_vec();
        pts.sort();
        pts.dedup();
        if pts.len() < 3 {
            return Err(Error::Degenerate);
        }
        // monotone chain
        let mut hull: Vec<Point2> = Vec::with_capacity(2 * pts.len());
        for pass in 0..2 {
            let start = hull.len();
            let iter: Box<dyn Iterator<Item = &Point2>> = if pass == 0 {
                Box::new(pts.iter())
            } else {
                Box::new(pts.iter().rev())
            };
            for p in iter {
                while hull.len() >= start + 2 {
                    let a = &hull[hull.len() - 2];
                    let b = &hull[hull.len() - 1];
                    if cross2(&sub2(b, a), &sub2(p, a)).is_positive() {
                        break;
                    }
                    hull.pop();
                }
                hull.push(p.clone());
            }
            hull.pop();
        }
        if hull.len() < 3 {
            return Err(Error::Degenerate);
        }
        Ok(LatticePolygon2 { vertices: hull })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn num_edges(&self) -> usize {
        self.vertices.len()
    }

    /// Edge `i` joins vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> (&Point2, &Point2) {
        let n = self.vertices.len();
        (&self.vertices[i % n], &self.vertices[(i + 1) % n])
    }

    pub fn edge_content(&self, i: usize) -> BigInt {
        let (a, b) = self.edge(i);
        content2(&sub2(b, a))
    }

    pub fn twice_area(&self) -> BigInt {
        let n = self.vertices.len();
        (0..n)
            .map(|i| cross2(&self.vertices[i], &self.vertices[(i + 1) % n]))
            .sum()
    }

    pub fn boundary_point_count(&self) -> BigInt {
        (0..self.num_edges()).map(|i| self.edge_content(i)).sum()
    }

    /// Pick's theorem.
    pub fn interior_point_count(&self) -> BigInt {
        (self.twice_area() - self.boundary_point_count() + int(2)) / int(2)
    }

    pub fn is_empty_polygon(&self) -> bool {
        self.interior_point_count().is_zero()
    }

    pub fn map(&self, f: &AffineMap2) -> Result<LatticePolygon2> {
        let pts: Vec<Point2> = self.vertices.iter().map(|p| f.apply(p)).collect();
        LatticePolygon2::new(&pts)
    }

    /// Inward primitive normal `lambda` and level `k` with `lambda . x >= k`
    /// on the polygon, equality on edge `i`.
    pub fn edge_normal(&self, i: usize) -> (Point2, BigInt) {
        let (a, b) = self.edge(i);
        let d = sub2(b, a);
        let c = content2(&d);
        // counterclockwise order: interior lies to the left
        let lambda = [-&d[1] / &c, &d[0] / &c];
        let k = &lambda[0] * &a[0] + &lambda[1] * &a[1];
        (lambda, k)
    }
}

/// Integral affine map `x -> A x + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap2 {
    pub matrix: [[BigInt; 2]; 2],
    pub shift: Point2,
}

impl AffineMap2 {
    pub fn new(matrix: [[BigInt; 2]; 2], shift: Point2) -> Result<Self> {
        let m = AffineMap2 { matrix, shift };
        if !m.det().abs().is_one() {
            return Err(Error::OutOfRange("affine map is not unimodular".into()));
        }
        Ok(m)
    }

    pub fn det(&self) -> BigInt {
        let m = &self.matrix;
        &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
    }

    pub fn apply(&self, p: &Point2) -> Point2 {
        let m = &self.matrix;
        [
            &m[0][0] * &p[0] + &m[0][1] * &p[1] + &self.shift[0],
            &m[1][0] * &p[0] + &m[1][1] * &p[1] + &self.shift[1],
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EmptyPolygonTag {
    BigTriangle,
    TTriangle(BigInt),
    TTrapezoid(BigInt),
    TSTrapezoid { t: BigInt, s: BigInt },
}

impl EmptyPolygonTag {
    /// Vertices of the normal form.
    pub fn normal_form(&self) -> Vec<Point2> {
        let z = BigInt::zero;
        let o = BigInt::one;
        match self {
            EmptyPolygonTag::BigTriangle => vec![p2(0, 0), p2(2, 0), p2(0, 2)],
            EmptyPolygonTag::TTriangle(t) => vec![[z(), z()], [t.clone(), z()], [z(), o()]],
            EmptyPolygonTag::TTrapezoid(t) => {
                vec![[z(), z()], [t.clone(), z()], [z(), o()], [o(), o()]]
            }
            EmptyPolygonTag::TSTrapezoid { t, s } => {
                vec![[z(), z()], [t.clone(), z()], [z(), o()], [s.clone(), o()]]
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmptyPolygonClass {
    pub tag: EmptyPolygonTag,
    pub normalizing_map: AffineMap2,
}

fn sorted(mut v: Vec<Point2>) -> Vec<Point2> {
    v.sort();
    v
}

fn tag_of_normalized(verts: &[Point2]) -> Option<EmptyPolygonTag> {
    let has = |p: Point2| verts.contains(&p);
    if !has(p2(0, 0)) || !has(p2(0, 1)) && !has(p2(0, 2)) {
        return None;
    }
    let x_vertex = verts
        .iter()
        .find(|p| p[1].is_zero() && p[0].is_positive())?
        .clone();
    let t = x_vertex[0].clone();
    let candidates = [
        (verts.len() == 3 && t == int(2) && has(p2(0, 2))).then_some(EmptyPolygonTag::BigTriangle),
        (verts.len() == 3 && has(p2(0, 1))).then(|| EmptyPolygonTag::TTriangle(t.clone())),
        (verts.len() == 4 && has(p2(0, 1)) && has(p2(1, 1)))
            .then(|| EmptyPolygonTag::TTrapezoid(t.clone())),
        verts
            .iter()
            .find(|p| p[1].is_one() && p[0] > int(1))
            .filter(|p| verts.len() == 4 && has(p2(0, 1)) && t >= p[0])
            .map(|p| EmptyPolygonTag::TSTrapezoid { t: t.clone(), s: p[0].clone() }),
    ];
    candidates
        .into_iter()
        .flatten()
        .find(|tag| sorted(tag.normal_form()) == sorted(verts.to_vec()))
}

/// Finds an integral affine isomorphism taking an empty polygon to one of the
/// four normal forms.
pub fn classify_empty_polygon(f: &LatticePolygon2) -> Result<EmptyPolygonClass> {
    if !f.is_empty_polygon() {
        return Err(Error::NotEmpty);
    }
    let verts = f.vertices();
    let n = verts.len();
    for i in 0..n {
        let v0 = &verts[i];
        let next = &verts[(i + 1) % n];
        let prev = &verts[(i + n - 1) % n];
        for (a, b) in [(next, prev), (prev, next)] {
            let da = sub2(a, v0);
            let db = sub2(b, v0);
            let e1 = [&da[0] / content2(&da), &da[1] / content2(&da)];
            let e2 = [&db[0] / content2(&db), &db[1] / content2(&db)];
            let det = cross2(&e1, &e2);
            if !det.abs().is_one() {
                continue;
            }
            // inverse of the matrix with columns e1, e2
            let matrix = [
                [&e2[1] * &det, -&e2[0] * &det],
                [-&e1[1] * &det, &e1[0] * &det],
            ];
            let shift = [
                -(&matrix[0][0] * &v0[0] + &matrix[0][1] * &v0[1]),
                -(&matrix[1][0] * &v0[0] + &matrix[1][1] * &v0[1]),
            ];
            let map = AffineMap2::new(matrix, shift)?;
            let image: Vec<Point2> = verts.iter().map(|p| map.apply(p)).collect();
            if let Some(tag) = tag_of_normalized(&image) {
                return Ok(EmptyPolygonClass { tag, normalizing_map: map });
            }
        }
    }
    Err(Error::Internal("empty polygon matches no normal form".into()))
}

pub fn vertex_is_regular(f: &LatticePolygon2, p: &Point2) -> Result<bool> {
    let verts = f.vertices();
    let n = verts.len();
    let i = verts.iter().position(|v| v == p).ok_or(Error::NotAVertex)?;
    let da = sub2(&verts[(i + 1) % n], p);
    let db = sub2(&verts[(i + n - 1) % n], p);
    let det = cross2(&da, &db) / (content2(&da) * content2(&db));
    Ok(det.abs().is_one())
}

/// Polygon `rF` with edges `S` marked by `eps[S]` removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DilatedPolygonSpec {
    pub base: LatticePolygon2,
    pub r: Rational,
    pub eps: Vec<bool>,
}

impl DilatedPolygonSpec {
    pub fn new(base: LatticePolygon2, r: Rational, eps: Vec<bool>) -> Result<Self> {
        if !r.is_positive() {
            return Err(Error::OutOfRange("dilation factor must be positive".into()));
        }
        if eps.len() != base.num_edges() {
            return Err(Error::OutOfRange("one boundary flag per edge expected".into()));
        }
        let spec = DilatedPolygonSpec { base, r, eps };
        for i in 0..spec.eps.len() {
            if spec.eps[i] && !edge_support_function(&spec, i).level.is_zero() {
                return Err(Error::InadmissibleBoundary);
            }
        }
        Ok(spec)
    }

    /// Whether the edge may carry a boundary condition at this dilation.
    pub fn edge_admissible(base: &LatticePolygon2, r: &Rational, i: usize) -> bool {
        let (_, k) = base.edge_normal(i);
        (r * rat_int(&k)).is_integer()
    }
}

/// `ell(x) = normal . x - offset`, constant equal to `level` on the dilated edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeFunctional {
    pub normal: Point2,
    pub offset: BigInt,
    pub level: Rational,
}

impl EdgeFunctional {
    pub fn eval(&self, p: &Point2) -> BigInt {
        &self.normal[0] * &p[0] + &self.normal[1] * &p[1] - &self.offset
    }
}

pub fn edge_support_function(spec: &DilatedPolygonSpec, edge: usize) -> EdgeFunctional {
    let (normal, k) = spec.base.edge_normal(edge);
    let rk = &spec.r * rat_int(&k);
    let offset = ceil_rat(&rk);
    let level = rk - rat_int(&offset);
    EdgeFunctional { normal, offset, level }
}

/// The constant `sum_S c_S (ell_{rS} - eps_S)`, checked on an affine frame.
pub fn dilated_content(spec: &DilatedPolygonSpec) -> Result<BigInt> {
    if !spec.base.is_empty_polygon() {
        return Err(Error::NotEmpty);
    }
    let fns: Vec<(BigInt, EdgeFunctional)> = (0..spec.base.num_edges())
        .map(|i| (spec.base.edge_content(i), edge_support_function(spec, i)))
        .collect();
    let eval = |p: &Point2| -> BigInt {
        fns.iter()
            .zip(&spec.eps)
            .map(|((c, l), &e)| c * (l.eval(p) - if e { BigInt::one() } else { BigInt::zero() }))
            .sum()
    };
    let v0 = eval(&p2(0, 0));
    ensure_internal!(
        v0 == eval(&p2(1, 0)) && v0 == eval(&p2(0, 1)),
        "support function sum is not constant"
    );
    Ok(v0)
}

/// Rows `(y, x_min, x_max)` of the lattice points of `sF^-` for `s >= 0`;
/// `s = 0` gives the origin unless some edge is removed.
fn scaled_rows(base: &LatticePolygon2, s: &Rational, eps: &[bool]) -> Vec<(BigInt, BigInt, BigInt)> {
    let constraints: Vec<(Point2, Rational, bool)> = (0..base.num_edges())
        .map(|i| {
            let (lambda, k) = base.edge_normal(i);
            (lambda, s * rat_int(&k), eps.get(i).copied().unwrap_or(false))
        })
        .collect();
    let ys = base.vertices().iter().map(|v| s * rat_int(&v[1]));
    let ymin = ys.clone().min().expect("nonempty polygon").ceil().to_integer();
    let ymax = ys.max().expect("nonempty polygon").floor().to_integer();
    let mut rows = Vec::new();
    let mut y = ymin;
    while y <= ymax {
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        let mut feasible = true;
        for (lambda, bound, strict) in &constraints {
            // lambda0 * x >= bound - lambda1 * y
            let rhs = bound - rat_int(&(&lambda[1] * &y));
            if lambda[0].is_zero() {
                feasible &= if *strict { rhs.is_negative() } else { !rhs.is_positive() };
                continue;
            }
            let q = rhs / rat_int(&lambda[0]);
            if lambda[0].is_positive() {
                let b = if *strict { q.floor().to_integer() + 1 } else { q.ceil().to_integer() };
                lo = Some(lo.map_or(b.clone(), |l| l.max(b)));
            } else {
                let b = if *strict { q.ceil().to_integer() - 1 } else { q.floor().to_integer() };
                hi = Some(hi.map_or(b.clone(), |h| h.min(b)));
            }
        }
        if let (true, Some(lo), Some(hi)) = (feasible, lo, hi) {
            if hi >= lo {
                rows.push((y.clone(), lo, hi));
            }
        }
        y += 1;
    }
    rows
}

pub fn count_scaled_points(base: &LatticePolygon2, s: &Rational, eps: &[bool]) -> BigInt {
    scaled_rows(base, s, eps)
        .into_iter()
        .map(|(_, lo, hi)| hi - lo + 1)
        .sum()
}

/// Lattice points of `sF^-`, row by row.
pub fn scaled_points(base: &LatticePolygon2, s: &Rational, eps: &[bool]) -> Vec<Point2> {
    let mut out = Vec::new();
    for (y, lo, hi) in scaled_rows(base, s, eps) {
        let mut x = lo;
        while x <= hi {
            out.push([x.clone(), y.clone()]);
            x += 1;
        }
    }
    out
}

pub fn count_dilated_points(spec: &DilatedPolygonSpec) -> Result<BigInt> {
    if !spec.base.is_empty_polygon() {
        return Err(Error::NotEmpty);
    }
    let n = count_scaled_points(&spec.base, &spec.r, &spec.eps);
    let one = Rational::one();
    if spec.r < one {
        Ok(n)
    } else {
        Ok(n - count_scaled_points(&spec.base, &(&spec.r - one), &spec.eps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::rat;

    fn poly(pts: &[(i64, i64)]) -> LatticePolygon2 {
        let v: Vec<Point2> = pts.iter().map(|&(x, y)| p2(x, y)).collect();
        LatticePolygon2::new(&v).unwrap()
    }

    fn edge_index(f: &LatticePolygon2, a: (i64, i64), b: (i64, i64)) -> usize {
        (0..f.num_edges())
            .find(|&i| {
                let (p, q) = f.edge(i);
                (p == &p2(a.0, a.1) && q == &p2(b.0, b.1)) || (p == &p2(b.0, b.1) && q == &p2(a.0, a.1))
            })
            .unwrap()
    }

    #[test]
    fn hull_and_pick() {
        let f = poly(&[(0, 0), (2, 0), (0, 2), (1, 1), (1, 0)]);
        assert_eq!(f.vertices().len(), 3);
        assert_eq!(f.interior_point_count(), int(0));
        let g = poly(&[(0, 0), (3, 0), (0, 3)]);
        assert_eq!(g.interior_point_count(), int(1));
        assert_eq!(LatticePolygon2::new(&[p2(0, 0), p2(1, 1), p2(2, 2)]), Err(Error::Degenerate));
    }

    #[test]
    fn classify_examples() {
        let tag = |pts: &[(i64, i64)]| classify_empty_polygon(&poly(pts)).unwrap().tag;
        assert_eq!(tag(&[(0, 0), (2, 0), (0, 2)]), EmptyPolygonTag::BigTriangle);
        assert_eq!(tag(&[(0, 0), (3, 0), (0, 1)]), EmptyPolygonTag::TTriangle(int(3)));
        assert_eq!(tag(&[(0, 0), (1, 0), (0, 1), (1, 1)]), EmptyPolygonTag::TTrapezoid(int(1)));
        assert_eq!(
            tag(&[(0, 0), (5, 0), (0, 1), (3, 1)]),
            EmptyPolygonTag::TSTrapezoid { t: int(5), s: int(3) }
        );
        assert_eq!(tag(&[(0, 0), (1, 0), (0, 1)]), EmptyPolygonTag::TTriangle(int(1)));
        assert_eq!(classify_empty_polygon(&poly(&[(0, 0), (3, 0), (0, 3)])), Err(Error::NotEmpty));
    }

    #[test]
    fn classify_witness_maps() {
        let f = poly(&[(1, 1), (4, 2), (2, 1)]);
        let c = classify_empty_polygon(&f).unwrap();
        let img = f.map(&c.normalizing_map).unwrap();
        assert_eq!(sorted(img.vertices().to_vec()), sorted(c.tag.normal_form()));
    }

    #[test]
    fn regular_vertices() {
        let f = poly(&[(0, 0), (3, 0), (0, 1)]);
        assert!(!vertex_is_regular(&f, &p2(0, 1)).unwrap());
        assert!(vertex_is_regular(&f, &p2(0, 0)).unwrap());
        assert!(vertex_is_regular(&f, &p2(3, 0)).unwrap());
        assert_eq!(vertex_is_regular(&f, &p2(1, 0)), Err(Error::NotAVertex));
        let u = poly(&[(0, 0), (1, 0), (0, 1)]);
        for v in u.vertices() {
            assert!(vertex_is_regular(&u, v).unwrap());
        }
    }

    #[test]
    fn support_functions() {
        let u = poly(&[(0, 0), (1, 0), (0, 1)]);
        let spec = DilatedPolygonSpec::new(u.clone(), rat(1, 1), vec![false; 3]).unwrap();
        let bottom = edge_support_function(&spec, edge_index(&u, (0, 0), (1, 0)));
        assert_eq!(bottom.normal, p2(0, 1));
        assert_eq!(bottom.offset, int(0));
        assert_eq!(bottom.level, rat(0, 1));

        let half = DilatedPolygonSpec::new(u.clone(), rat(1, 2), vec![false; 3]).unwrap();
        let hyp = edge_support_function(&half, edge_index(&u, (1, 0), (0, 1)));
        assert_eq!(hyp.normal, p2(-1, -1));
        assert_eq!(hyp.offset, int(0));
        assert_eq!(hyp.level, rat(-1, 2));
    }

    #[test]
    fn content_and_counts() {
        let u = poly(&[(0, 0), (1, 0), (0, 1)]);
        let s = DilatedPolygonSpec::new(u.clone(), rat(1, 1), vec![false; 3]).unwrap();
        assert_eq!(dilated_content(&s).unwrap(), int(1));
        assert_eq!(count_dilated_points(&s).unwrap(), int(2));

        let s = DilatedPolygonSpec::new(u.clone(), rat(1, 2), vec![false; 3]).unwrap();
        assert_eq!(dilated_content(&s).unwrap(), int(0));
        assert_eq!(count_dilated_points(&s).unwrap(), int(1));

        let mut eps = vec![false; 3];
        eps[edge_index(&u, (0, 0), (1, 0))] = true;
        let s = DilatedPolygonSpec::new(u.clone(), rat(1, 1), eps).unwrap();
        assert_eq!(dilated_content(&s).unwrap(), int(0));
        assert_eq!(count_dilated_points(&s).unwrap(), int(1));
    }

    #[test]
    fn inadmissible_boundary() {
        let u = poly(&[(0, 0), (1, 0), (0, 1)]);
        let mut eps = vec![false; 3];
        eps[edge_index(&u, (1, 0), (0, 1))] = true;
        assert_eq!(
            DilatedPolygonSpec::new(u, rat(1, 2), eps),
            Err(Error::InadmissibleBoundary)
        );
    }
}
