use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::lattice::IntVec3;
use crate::polygon::Point2;

/// Lattice isomorphism between a rational affine plane `{ell = ell(origin)}`
/// and `Z^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneChart {
    origin: IntVec3,
    u: IntVec3,
    v: IntVec3,
    w: IntVec3,
    ww: BigInt,
}

impl PlaneChart {
    /// `normal` must be primitive.
    pub fn new(normal: &IntVec3, origin: &IntVec3) -> Self {
        let [a, b, c] = normal.coords();
        let (u, v) = if a.is_zero() && b.is_zero() {
            (IntVec3::unit(0), IntVec3::unit(1))
        } else {
            let e = a.extended_gcd(b);
            let g = a * &e.x + b * &e.y;
            let u = IntVec3::from_big(b / &g, -(a / &g), BigInt::zero());
            let v = IntVec3::from_big(-(c * &e.x), -(c * &e.y), g);
            (u, v)
        };
        let w = u.cross(&v);
        let ww = w.dot(&w);
        PlaneChart { origin: origin.clone(), u, v, w, ww }
    }

    pub fn to_plane(&self, p: &IntVec3) -> Point2 {
        let d = p - &self.origin;
        let x = d.cross(&self.v).dot(&self.w) / &self.ww;
        let y = self.u.cross(&d).dot(&self.w) / &self.ww;
        [x, y]
    }

    pub fn to_space(&self, q: &Point2) -> IntVec3 {
        &(&self.origin + &self.u.scale(&q[0])) + &self.v.scale(&q[1])
    }
}
