//! Plumbing graphs, Oka's algorithm and lattice invariants of graphs.

mod cycle;
mod intersection;
mod iso;
mod minimal;
mod oka;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{rat_int, Rational};
use crate::linalg::{is_negative_definite, IntMatrix};

pub use cycle::{Cycle, RatCycle};
pub use intersection::{
    canonical_cycle, intersection_data, minimal_cycle, numerically_gorenstein, IntersectionData,
};
pub use iso::canonical_form;
pub use minimal::{minimal_model, minimal_model_with_map};
pub use oka::{merle_teissier_zk, oka_graph, wt_cycle, Bamboo, BambooEnd, OkaGraph};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    /// Selfintersection is `-b`.
    pub b: BigInt,
    pub g: BigInt,
}

impl Vertex {
    pub fn new(b: i64, g: i64) -> Self {
        Vertex { b: BigInt::from(b), g: BigInt::from(g) }
    }
}

/// Connected plumbing graph with negative definite intersection form.
/// Vertex ids are indices into `vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlumbingGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl PlumbingGraph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let g = PlumbingGraph::build(vertices, edges)?;
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        if !is_negative_definite(&g.intersection_matrix()) {
            return Err(Error::NotNegativeDefinite);
        }
        Ok(g)
    }

    /// Structural checks only: ids in range, no loops, nonnegative genera.
    pub fn build(vertices: Vec<Vertex>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = vertices.len();
        if vertices.iter().any(|v| v.g.is_negative()) {
            return Err(Error::InvalidGraph("negative genus".into()));
        }
        let mut adj = vec![Vec::new(); n];
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort();
        for a in &mut adj {
            a.sort();
        }
        Ok(PlumbingGraph { vertices, edges: norm, adj })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &Vertex {
        &self.vertices[v]
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`, repeated for multiple edges.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbours with multiplicity.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Vertices of degree at least three.
    pub fn nodes(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.degree(v) >= 3).collect()
    }

    /// Vertices of degree one.
    pub fn ends(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_tree(&self) -> bool {
        let distinct: BTreeSet<&(usize, usize)> = self.edges.iter().collect();
        self.is_connected()
            && distinct.len() == self.edges.len()
            && self.edges.len() + 1 == self.len().max(1)
    }

    pub fn all_genera_zero(&self) -> bool {
        self.vertices.iter().all(|v| v.g.is_zero())
    }

    pub fn intersection_matrix(&self) -> IntMatrix {
        let n = self.len();
        let mut m = vec![vec![BigInt::zero(); n]; n];
        for (v, vert) in self.vertices.iter().enumerate() {
            m[v][v] = -vert.b.clone();
        }
        for &(u, v) in &self.edges {
            m[u][v] += 1;
            m[v][u] += 1;
        }
        m
    }

    /// `(Z, E_v)`.
    pub fn pairing(&self, z: &Cycle, v: usize) -> BigInt {
        let mut s = -&self.vertices[v].b * z.get(v);
        for &w in &self.adj[v] {
            s += z.get(w);
        }
        s
    }

    pub fn rat_pairing(&self, z: &RatCycle, v: usize) -> Rational {
        let mut s = -rat_int(&self.vertices[v].b) * z.get(v);
        for &w in &self.adj[v] {
            s += z.get(w);
        }
        s
    }

    /// `(A, B)`.
    pub fn form(&self, a: &Cycle, b: &Cycle) -> BigInt {
        (0..self.len()).map(|v| a.get(v) * self.pairing(b, v)).sum()
    }

    pub fn rat_form(&self, a: &RatCycle, b: &RatCycle) -> Rational {
        (0..self.len()).map(|v| a.get(v) * self.rat_pairing(b, v)).sum()
    }

    /// Vertices `v` with `b_v = 1`, genus zero and degree at most two.
    pub fn blow_down_candidates(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| {
                let x = &self.vertices[v];
                x.b.is_one() && x.g.is_zero() && self.degree(v) <= 2
            })
            .collect()
    }
}
