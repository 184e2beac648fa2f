use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{Cycle, PlumbingGraph, Vertex};
use crate::error::{ensure_internal, Error, Result};
use crate::lattice::{
    canonical_primitive_sequence_with_weights, denominator_beta, determinant_alpha, IntVec3,
    UnitChoice,
};
use crate::newton::{newton_polyhedron, NewtonPolyhedron, Support};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BambooEnd {
    /// Compact face, which is also the graph vertex with this id.
    Node(usize),
    /// Index into [`OkaGraph::stars`].
    Star(usize),
}

/// Chain of vertices between a node and another face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bamboo {
    pub from: usize,
    pub to: BambooEnd,
    /// Vertex ids from the `from` side.
    pub vertices: Vec<usize>,
    pub alpha: BigInt,
    pub beta: BigInt,
}

/// Graph produced by Oka's algorithm. Nodes `0..num_nodes()` are the compact
/// faces in the order of [`NewtonPolyhedron::compact_faces`]; bamboo vertices
/// follow in creation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OkaGraph {
    pub graph: PlumbingGraph,
    pub ell: Vec<IntVec3>,
    /// Functionals of the noncompact faces.
    pub stars: Vec<IntVec3>,
    pub bamboos: Vec<Bamboo>,
    /// `u_{n,n'}`: neighbour of node `n` towards face `n'`.
    pub u_map: BTreeMap<(usize, BambooEnd), usize>,
    pub polyhedron: NewtonPolyhedron,
    num_nodes: usize,
}

impl OkaGraph {
    pub fn num_nodes(&self) -> usize {
        self.num_nodes
    }

    pub fn nodes(&self) -> std::ops::Range<usize> {
        0..self.num_nodes
    }

    pub fn is_node(&self, v: usize) -> bool {
        v < self.num_nodes
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    fn end_functional(&self, e: &BambooEnd) -> &IntVec3 {
        match e {
            BambooEnd::Node(m) => &self.ell[*m],
            BambooEnd::Star(k) => &self.stars[*k],
        }
    }

    /// Checks `-b_v ell_v + sum_u ell_u = 0` at every vertex, where
    /// neighbours include the star faces at the ends of star bamboos.
    pub fn check_neighbor_sums(&self) -> Result<()> {
        let n = self.len();
        let mut sums: Vec<IntVec3> = (0..n)
            .map(|v| self.ell[v].scale(&-self.graph.vertex(v).b.clone()))
            .collect();
        for v in 0..n {
            for &w in self.graph.neighbors(v) {
                sums[v] = &sums[v] + &self.ell[w];
            }
        }
        for b in &self.bamboos {
            if let BambooEnd::Star(_) = b.to {
                let last = *b.vertices.last().unwrap_or(&b.from);
                sums[last] = &sums[last] + self.end_functional(&b.to);
            }
        }
        for (v, s) in sums.iter().enumerate() {
            ensure_internal!(s.is_zero(), "neighbour sum fails at vertex {v}");
        }
        Ok(())
    }
}

/// Runs Oka's algorithm on the Newton diagram of `s`.
pub fn oka_graph(s: &Support) -> Result<OkaGraph> {
    let poly = newton_polyhedron(s)?;
    poly.require_compact()?;
    let n_nodes = poly.num_compact();
    let faces = poly.faces();
    let mut ell: Vec<IntVec3> = poly.compact_faces().iter().map(|f| f.normal.clone()).collect();
    let stars: Vec<IntVec3> = poly.noncompact_faces().iter().map(|f| f.normal.clone()).collect();
    let mut b_values: Vec<Option<BigInt>> = vec![None; n_nodes];
    let mut edges = Vec::new();
    let mut bamboos = Vec::new();
    let mut u_map = BTreeMap::new();

    for n in 0..n_nodes {
        for m in 0..faces.len() {
            let t = poly.t(n, m);
            if t.is_zero() || (m < n_nodes && m < n) {
                continue;
            }
            let to = if m < n_nodes { BambooEnd::Node(m) } else { BambooEnd::Star(m - n_nodes) };
            let unit = if m < n_nodes { UnitChoice::Zero } else { UnitChoice::One };
            let (a, b) = (&faces[n].normal, &faces[m].normal);
            let alpha = determinant_alpha(a, b)?;
            let beta = denominator_beta(a, b, unit)?;
            let (seq, weights) = canonical_primitive_sequence_with_weights(a, b, unit)?;
            let copies = t
                .to_usize()
                .ok_or_else(|| Error::OutOfRange("edge length too large".into()))?;
            for _ in 0..copies {
                let mut ids = Vec::with_capacity(seq.len());
                let mut prev = n;
                for (l, w) in seq.iter().zip(&weights) {
                    let id = ell.len();
                    ell.push(l.clone());
                    b_values.push(Some(w.clone()));
                    edges.push((prev, id));
                    ids.push(id);
                    prev = id;
                }
                if let BambooEnd::Node(m) = to {
                    edges.push((prev, m));
                }
                let first = ids.first().copied();
                let last = ids.last().copied();
                u_map.entry((n, to.clone())).or_insert(first.unwrap_or(m));
                if let BambooEnd::Node(m) = to {
                    u_map.entry((m, BambooEnd::Node(n))).or_insert(last.unwrap_or(n));
                }
                bamboos.push(Bamboo {
                    from: n,
                    to: to.clone(),
                    vertices: ids,
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                });
            }
        }
    }

    // node selfintersections from the neighbour sums
    let total = ell.len();
    let mut nbr_sum = vec![IntVec3::zero(); n_nodes];
    for &(u, v) in &edges {
        if u < n_nodes {
            nbr_sum[u] = &nbr_sum[u] + &ell[v];
        }
        if v < n_nodes {
            nbr_sum[v] = &nbr_sum[v] + &ell[u];
        }
    }
    for n in 0..n_nodes {
        let c = (0..3).find(|&c| !ell[n].get(c).is_zero()).expect("nonzero normal");
        let b = nbr_sum[n].get(c) / ell[n].get(c);
        ensure_internal!(ell[n].scale(&b) == nbr_sum[n], "node {n} has no integral selfintersection");
        b_values[n] = Some(b);
    }
    let mut vertices = Vec::with_capacity(total);
    for (v, b) in b_values.into_iter().enumerate() {
        let g = if v < n_nodes {
            poly.compact_faces()[v].interior_point_count()?
        } else {
            BigInt::zero()
        };
        vertices.push(Vertex { b: b.expect("every vertex has a weight"), g });
    }
    let graph = PlumbingGraph::new(vertices, edges)?;
    let og = OkaGraph { graph, ell, stars, bamboos, u_map, polyhedron: poly, num_nodes: n_nodes };
    og.check_neighbor_sums()?;
    Ok(og)
}

/// `m_v = min_{p in monomials} ell_v(p)`.
pub fn wt_cycle(og: &OkaGraph, monomials: &Support) -> Cycle {
    Cycle::new(og.ell.iter().map(|l| monomials.min_value(l)).collect())
}

/// `E + wt(f) - wt(x_1 x_2 x_3)`.
pub fn merle_teissier_zk(og: &OkaGraph, s: &Support) -> Cycle {
    let one = IntVec3::new(1, 1, 1);
    Cycle::new(
        og.ell
            .iter()
            .map(|l| BigInt::from(1) + s.min_value(l) - l.dot(&one))
            .collect(),
    )
}
