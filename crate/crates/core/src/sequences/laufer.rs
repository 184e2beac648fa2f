use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{ensure_internal, Error, Result};
use crate::graph::{BambooEnd, Cycle, OkaGraph, PlumbingGraph};
use crate::lattice::{ceil_div, ceil_rat, denominator_beta, rat_int, Rational, UnitChoice};
use crate::linalg::{inverse, is_negative_definite, mat_vec, RatMatrix};

/// Data for the bamboo interpolation check: `m_u = ceil((beta m_n + m_far) / alpha)`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Interpolation {
    node: usize,
    u: usize,
    far: Option<usize>,
    alpha: BigInt,
    beta: BigInt,
}

/// The Laufer operator `x` of a graph relative to a set of nodes.
#[derive(Clone, Debug)]
pub struct LauferOperator {
    graph: PlumbingGraph,
    nodes: Vec<usize>,
    is_node: Vec<bool>,
    others: Vec<usize>,
    /// Inverse of the intersection matrix restricted to `others`.
    rest_inverse: RatMatrix,
    interpolations: Vec<Interpolation>,
}

impl LauferOperator {
    pub fn new(graph: &PlumbingGraph, nodes: &[usize]) -> Result<Self> {
        let m = graph.intersection_matrix();
        if !is_negative_definite(&m) {
            return Err(Error::NotNegativeDefinite);
        }
        let n = graph.len();
        let mut is_node = vec![false; n];
        for &v in nodes {
            if v >= n {
                return Err(Error::InvalidGraph(format!("node {v} out of range")));
            }
            is_node[v] = true;
        }
        let others: Vec<usize> = (0..n).filter(|&v| !is_node[v]).collect();
        let sub: Vec<Vec<BigInt>> = others
            .iter()
            .map(|&v| others.iter().map(|&w| m[v][w].clone()).collect())
            .collect();
        let rest_inverse = inverse(&sub).ok_or(Error::NotNegativeDefinite)?;
        let mut nodes = nodes.to_vec();
        nodes.sort();
        nodes.dedup();
        Ok(LauferOperator {
            graph: graph.clone(),
            nodes,
            is_node,
            others,
            rest_inverse,
            interpolations: Vec::new(),
        })
    }

    /// Operator on an Oka graph with the compact faces as nodes; `x` then
    /// also checks the bamboo interpolation formula.
    pub fn for_oka(og: &OkaGraph) -> Result<Self> {
        let nodes: Vec<usize> = og.nodes().collect();
        let mut op = LauferOperator::new(&og.graph, &nodes)?;
        for b in &og.bamboos {
            let (Some(&first), Some(&last)) = (b.vertices.first(), b.vertices.last()) else {
                continue;
            };
            let far = match b.to {
                BambooEnd::Node(m) => Some(m),
                BambooEnd::Star(_) => None,
            };
            op.interpolations.push(Interpolation {
                node: b.from,
                u: first,
                far,
                alpha: b.alpha.clone(),
                beta: b.beta.clone(),
            });
            if let Some(m) = far {
                let beta = denominator_beta(&og.ell[m], &og.ell[b.from], UnitChoice::Zero)?;
                op.interpolations.push(Interpolation {
                    node: m,
                    u: last,
                    far: Some(b.from),
                    alpha: b.alpha.clone(),
                    beta,
                });
            }
        }
        Ok(op)
    }

    pub fn graph(&self) -> &PlumbingGraph {
        &self.graph
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn is_node(&self, v: usize) -> bool {
        self.is_node[v]
    }

    /// `x(Z)`. The Laufer sequence starts at the round-up of the rational
    /// cycle that agrees with `Z` on the nodes and is orthogonal to every
    /// other `E_v`; this is a lower bound for `x(Z)`.
    pub fn x(&self, z: &Cycle) -> Result<Cycle> {
        let rhs: Vec<Rational> = self
            .others
            .iter()
            .map(|&v| {
                let s: BigInt = self
                    .graph
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| self.is_node[w])
                    .map(|&w| z.get(w).clone())
                    .sum();
                rat_int(&-s)
            })
            .collect();
        let sol = mat_vec(&self.rest_inverse, &rhs);
        let mut start = z.clone();
        for (i, &v) in self.others.iter().enumerate() {
            start.set(v, ceil_rat(&sol[i]));
        }
        let out = self.x_from(&start);
        self.check_interpolation(&out)?;
        Ok(out)
    }

    /// Generalized Laufer sequence from `z`, valid when `z <= x(z)`.
    pub fn x_from(&self, z: &Cycle) -> Cycle {
        self.x_from_with_path(z).0
    }

    /// Like [`LauferOperator::x_from`], also returning the added vertices in order.
    pub fn x_from_with_path(&self, z: &Cycle) -> (Cycle, Vec<usize>) {
        let mut z = z.clone();
        let mut path = Vec::new();
        let mut queue: VecDeque<usize> = self.others.iter().copied().collect();
        let mut queued = vec![false; self.graph.len()];
        for &v in &self.others {
            queued[v] = true;
        }
        while let Some(v) = queue.pop_front() {
            queued[v] = false;
            let p = self.graph.pairing(&z, v);
            if !p.is_positive() {
                continue;
            }
            // repeated single steps, (Z, E_v) drops by b_v each time
            let b = &self.graph.vertex(v).b;
            let times = if b.is_positive() { ceil_div(&p, b) } else { BigInt::from(1) };
            let mut t = BigInt::zero();
            while t < times {
                path.push(v);
                z.add_e(v);
                t += 1;
            }
            for &w in self.graph.neighbors(v).iter().chain(std::iter::once(&v)) {
                if !self.is_node[w] && !queued[w] {
                    queued[w] = true;
                    queue.push_back(w);
                }
            }
        }
        (z, path)
    }

    /// Checks the bamboo interpolation formula on a fixed point of `x`.
    pub fn check_interpolation(&self, z: &Cycle) -> Result<()> {
        for ip in &self.interpolations {
            let far = ip.far.map_or_else(BigInt::zero, |m| z.get(m).clone());
            let want = ceil_div(&(&ip.beta * z.get(ip.node) + far), &ip.alpha);
            ensure_internal!(
                &want == z.get(ip.u),
                "interpolation fails at vertex {} next to node {}",
                ip.u,
                ip.node
            );
        }
        Ok(())
    }
}

/// `x(Z)` for the given node set.
pub fn laufer_x(g: &PlumbingGraph, nodes: &[usize], z: &Cycle) -> Result<Cycle> {
    LauferOperator::new(g, nodes)?.x(z)
}
