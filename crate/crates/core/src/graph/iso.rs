use super::PlumbingGraph;
use crate::error::{Error, Result};

/// Canonical string of a decorated tree; two trees are isomorphic (respecting
/// `b` and `g`) iff their canonical forms agree.
pub fn canonical_form(g: &PlumbingGraph) -> Result<String> {
    if !g.is_tree() {
        return Err(Error::NotTree);
    }
    if g.is_empty() {
        return Ok(String::new());
    }
    let centers = centers(g);
    let mut forms: Vec<String> = centers.iter().map(|&c| encode(g, c, usize::MAX)).collect();
    forms.sort();
    Ok(forms.swap_remove(0))
}

fn centers(g: &PlumbingGraph) -> Vec<usize> {
    let n = g.len();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in g.neighbors(v) {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
}

fn encode(g: &PlumbingGraph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(g, w, v))
        .collect();
    kids.sort();
    let x = g.vertex(v);
    format!("({},{}:{})", x.b, x.g, kids.concat())
}
