use std::collections::{BTreeSet, VecDeque};

use num_traits::{Signed, Zero};

use super::{is_rhs_link, newton_polyhedron, Face2D, NewtonPolyhedron, Support};
use crate::error::{Error, Result};
use crate::lattice::IntVec3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CentralPart {
    Triangle(usize),
    Trapezoid(usize),
    Edges(Vec<(IntVec3, IntVec3)>),
    /// No compact face or edge meets all three coordinate planes.
    None,
}

/// Coarse shape of a diagram: its central part and, per coordinate axis, the
/// compact faces of the arm pointing along that axis (nearest first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Anatomy {
    pub central: CentralPart,
    pub arms: [Vec<usize>; 3],
}

fn touches_all_planes(points: &[&IntVec3]) -> bool {
    (0..3).all(|c| points.iter().any(|p| p.get(c).is_zero()))
}

fn is_trapezoid(face: &Face2D) -> bool {
    if face.vertices.len() != 4 {
        return false;
    }
    (0..3).any(|c| {
        let (a, b) = ((c + 1) % 3, (c + 2) % 3);
        let base: Vec<&IntVec3> = face.vertices.iter().filter(|p| p.get(c).is_zero()).collect();
        let on_a: Vec<&IntVec3> = face
            .vertices
            .iter()
            .filter(|p| p.get(a).is_zero() && p.get(c).is_positive())
            .collect();
        let on_b: Vec<&IntVec3> = face
            .vertices
            .iter()
            .filter(|p| p.get(b).is_zero() && p.get(c).is_positive())
            .collect();
        if base.len() != 2 || on_a.len() != 1 || on_b.len() != 1 {
            return false;
        }
        let (pa, pb) = (on_a[0], on_b[0]);
        if pa.get(c) != pb.get(c) {
            return false;
        }
        // base edge parallel to the top edge pb - pa
        let top = pb - pa;
        let d = base[1] - base[0];
        top.cross(&d).is_zero()
    })
}

/// Central face, central edges and arms of the diagram of an RHS input.
pub fn classify_diagram(s: &Support) -> Result<Anatomy> {
    let poly = newton_polyhedron(s)?;
    poly.require_compact()?;
    if !is_rhs_link(s)? {
        return Err(Error::NotRationalHomologySphere);
    }
    let faces = poly.compact_faces();
    let central_faces: Vec<usize> = (0..faces.len())
        .filter(|&n| {
            let v: Vec<&IntVec3> = faces[n].vertices.iter().collect();
            touches_all_planes(&v) && (v.len() == 3 || is_trapezoid(&faces[n]))
        })
        .collect();
    let central = match central_faces.as_slice() {
        [n] if faces[*n].vertices.len() == 3 => CentralPart::Triangle(*n),
        [n] => CentralPart::Trapezoid(*n),
        _ => {
            let mut edges = BTreeSet::new();
            for f in faces {
                let k = f.vertices.len();
                for i in 0..k {
                    let (p, q) = (&f.vertices[i], &f.vertices[(i + 1) % k]);
                    if touches_all_planes(&[p, q]) {
                        edges.insert(if p < q { (p.clone(), q.clone()) } else { (q.clone(), p.clone()) });
                    }
                }
            }
            if edges.is_empty() {
                CentralPart::None
            } else {
                CentralPart::Edges(edges.into_iter().collect())
            }
        }
    };
    let arms = arms(&poly, &central);
    Ok(Anatomy { central, arms })
}

fn arms(poly: &NewtonPolyhedron, central: &CentralPart) -> [Vec<usize>; 3] {
    let faces = poly.compact_faces();
    let n = faces.len();
    let seeds: Vec<usize> = match central {
        CentralPart::Triangle(c) | CentralPart::Trapezoid(c) => vec![*c],
        _ => Vec::new(),
    };
    // breadth first distance along shared edges
    let mut dist = vec![usize::MAX; n];
    let mut queue: VecDeque<usize> = seeds.iter().copied().collect();
    for &s in &seeds {
        dist[s] = 0;
    }
    while let Some(a) = queue.pop_front() {
        for b in 0..n {
            if dist[b] == usize::MAX && poly.t(a, b).is_positive() {
                dist[b] = dist[a] + 1;
                queue.push_back(b);
            }
        }
    }
    let mut out: [Vec<usize>; 3] = Default::default();
    for (axis, arm) in out.iter_mut().enumerate() {
        let (a, b) = ((axis + 1) % 3, (axis + 2) % 3);
        let mut members: Vec<usize> = (0..n)
            .filter(|m| !seeds.contains(m))
            .filter(|&m| {
                faces[m]
                    .vertices
                    .iter()
                    .all(|p| p.get(a).is_zero() || p.get(b).is_zero())
            })
            .collect();
        members.sort_by_key(|&m| (dist[m], faces[m].normal.clone()));
        *arm = members;
    }
    out
}
