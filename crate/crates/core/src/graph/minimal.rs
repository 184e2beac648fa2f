use super::{PlumbingGraph, Vertex};
use crate::error::Result;

/// Blows down `(-1)`-curves of genus zero and degree at most two until none
/// is left.
pub fn minimal_model(g: &PlumbingGraph) -> Result<PlumbingGraph> {
    Ok(minimal_model_with_map(g)?.0)
}

/// Like [`minimal_model`], also returning for each new vertex its old id.
///
/// The lowest id candidate is blown down first. A `(-1)`-vertex joined twice
/// to the same neighbour is left alone.
pub fn minimal_model_with_map(g: &PlumbingGraph) -> Result<(PlumbingGraph, Vec<usize>)> {
    let mut verts: Vec<Vertex> = g.vertices().to_vec();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    let mut ids: Vec<usize> = (0..g.len()).collect();
    loop {
        let cur = PlumbingGraph::build(verts.clone(), edges.clone())?;
        let pick = cur.blow_down_candidates().into_iter().find(|&v| {
            let nb = cur.neighbors(v);
            !(nb.len() == 2 && nb[0] == nb[1])
        });
        let Some(v) = pick else {
            return Ok((PlumbingGraph::new(verts, edges)?, ids));
        };
        let nb = cur.neighbors(v).to_vec();
        for &u in &nb {
            verts[u].b -= 1;
        }
        let mut next: Vec<(usize, usize)> =
            edges.iter().copied().filter(|&(a, b)| a != v && b != v).collect();
        if let [u, w] = nb[..] {
            next.push((u, w));
        }
        let shift = |x: usize| if x > v { x - 1 } else { x };
        edges = next.into_iter().map(|(a, b)| (shift(a), shift(b))).collect();
        verts.remove(v);
        ids.remove(v);
    }
}
