#![allow(dead_code)]

use nondeg_core::polygon::{p2, AffineMap2, DilatedPolygonSpec, EmptyPolygonTag, LatticePolygon2, Point2};
use nondeg_core::sequences::validate;
use nondeg_core::{Rational, Support};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Case {
    pub name: String,
    pub support: Support,
}

pub fn front_page() -> Support {
    Support::from_i64(&[[4, 0, 0], [3, 2, 0], [0, 10, 0], [2, 0, 3], [0, 3, 4], [0, 0, 8]]).unwrap()
}

/// Brieskorn `x^a + y^b + z^c` with `2 <= a <= b <= c <= max` and a rational
/// homology sphere link.
pub fn brieskorn_cases(max: i64) -> Vec<Case> {
    let mut out = Vec::new();
    for a in 2..=max {
        for b in a..=max {
            for c in b..=max {
                let s = Support::brieskorn(a, b, c);
                if validate(&s).is_ok() {
                    out.push(Case { name: format!("brieskorn({a},{b},{c})"), support: s });
                }
            }
        }
    }
    out
}

/// Convenient supports from a fixed seed: three axis powers plus a few
/// small mixed monomials, kept when the link is a rational homology sphere.
pub fn random_cases(count: usize, seed: u64) -> Vec<Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let mut pts = vec![
            [rng.gen_range(2..=7), 0, 0],
            [0, rng.gen_range(2..=7), 0],
            [0, 0, rng.gen_range(2..=7)],
        ];
        for _ in 0..rng.gen_range(1..=3) {
            let p = [rng.gen_range(0..=4), rng.gen_range(0..=4), rng.gen_range(0..=4)];
            if p.iter().filter(|&&x| x > 0).count() >= 2 {
                pts.push(p);
            }
        }
        let Ok(s) = Support::from_i64(&pts) else { continue };
        if validate(&s).is_ok() && nondeg_core::sequences::Analysis::new(&s).is_ok() {
            out.push(Case { name: format!("random{}:{:?}", out.len(), s.points()), support: s });
        }
    }
    out
}

pub fn corpus() -> Vec<Case> {
    let mut out = vec![Case { name: "front-page".into(), support: front_page() }];
    out.extend(brieskorn_cases(11));
    out.extend(random_cases(4, 20240611));
    out
}

pub struct PolygonInstance {
    pub tag: EmptyPolygonTag,
    pub spec: DilatedPolygonSpec,
}

fn random_unimodular(rng: &mut ChaCha8Rng) -> AffineMap2 {
    let mut m = [[1i64, 0], [0, 1]];
    for _ in 0..rng.gen_range(0..=4) {
        match rng.gen_range(0..3) {
            0 => {
                let k = [-2, -1, 1, 2][rng.gen_range(0..4)];
                let (i, j) = if rng.gen_bool(0.5) { (0, 1) } else { (1, 0) };
                for c in 0..2 {
                    m[i][c] += k * m[j][c];
                }
            }
            1 => m.swap(0, 1),
            _ => {
                let i = rng.gen_range(0..2);
                m[i] = [-m[i][0], -m[i][1]];
            }
        }
    }
    let big = |x: i64| BigInt::from(x);
    AffineMap2::new(
        [[big(m[0][0]), big(m[0][1])], [big(m[1][0]), big(m[1][1])]],
        p2(rng.gen_range(-3..=3), rng.gen_range(-3..=3)),
    )
    .unwrap()
}

fn random_tag(rng: &mut ChaCha8Rng) -> EmptyPolygonTag {
    let t = BigInt::from(rng.gen_range(1..=6));
    match rng.gen_range(0..4) {
        0 => EmptyPolygonTag::BigTriangle,
        1 => EmptyPolygonTag::TTriangle(t),
        2 => EmptyPolygonTag::TTrapezoid(t),
        _ => {
            let t = rng.gen_range(2..=6);
            let s = rng.gen_range(2..=t);
            EmptyPolygonTag::TSTrapezoid { t: BigInt::from(t), s: BigInt::from(s) }
        }
    }
}

/// Empty polygons from all four families moved by a unimodular affine map,
/// dilated by `0 < r <= 3`, with random admissible boundary flags.
pub fn polygon_instances(count: usize, seed: u64) -> Vec<PolygonInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let tag = random_tag(&mut rng);
        let normal = LatticePolygon2::new(&tag.normal_form()).unwrap();
        let base = normal.map(&random_unimodular(&mut rng)).unwrap();
        let q = rng.gen_range(1..=6);
        let r = Rational::new(BigInt::from(rng.gen_range(1..=3 * q)), BigInt::from(q));
        let eps: Vec<bool> = (0..base.num_edges())
            .map(|i| DilatedPolygonSpec::edge_admissible(&base, &r, i) && rng.gen_bool(0.5))
            .collect();
        let spec = DilatedPolygonSpec::new(base, r, eps).unwrap();
        out.push(PolygonInstance { tag, spec });
    }
    out
}

/// Lattice points of `sF` with the flagged edges removed, by scanning a box.
pub fn brute_scaled_count(base: &LatticePolygon2, s: &Rational, eps: &[bool]) -> i64 {
    let verts = base.vertices();
    let coord = |c: usize, up: bool| -> i64 {
        let vals = verts.iter().map(|v| s * Rational::from_integer(v[c].clone()));
        let x = if up { vals.max().unwrap().floor() } else { vals.min().unwrap().ceil() };
        x.to_integer().try_into().unwrap()
    };
    let normals: Vec<(Point2, Rational, bool)> = (0..base.num_edges())
        .map(|i| {
            let (l, k) = base.edge_normal(i);
            (l, s * Rational::from_integer(k), eps[i])
        })
        .collect();
    let mut n = 0;
    for x in coord(0, false)..=coord(0, true) {
        for y in coord(1, false)..=coord(1, true) {
            let p = p2(x, y);
            let inside = normals.iter().all(|(l, k, strict)| {
                let v = Rational::from_integer(&l[0] * &p[0] + &l[1] * &p[1]);
                if *strict { &v > k } else { &v >= k }
            });
            n += inside as i64;
        }
    }
    n
}

/// `|rF^-|` for `r < 1`, else `|rF^-| - |(r-1)F^-|`, by brute force.
pub fn brute_point_count(spec: &DilatedPolygonSpec) -> i64 {
    let one = Rational::from_integer(BigInt::from(1));
    let n = brute_scaled_count(&spec.base, &spec.r, &spec.eps);
    if spec.r < one {
        n
    } else {
        n - brute_scaled_count(&spec.base, &(&spec.r - one), &spec.eps)
    }
}
