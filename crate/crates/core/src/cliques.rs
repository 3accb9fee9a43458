//! Maximal homogeneous sets as maximal cliques of the two color graphs.

use crate::coloring::{Coloring, VertexSet};
use crate::error::{domain, Result};

/// Pivoted Bron–Kerbosch over bitset neighborhoods. Calls `emit` for every
/// maximal clique of the graph given by `adj`.
fn bron_kerbosch(
    adj: &[VertexSet],
    r: &mut Vec<usize>,
    p: VertexSet,
    x: VertexSet,
    emit: &mut dyn FnMut(&[usize]),
) {
    if p.is_empty() {
        if x.is_empty() {
            emit(r);
        }
        return;
    }
    // pivot: vertex of P ∪ X with most neighbors in P
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| (adj[u].intersection(&p).len(), std::cmp::Reverse(u)))
        .expect("P is nonempty");
    let mut p = p;
    let mut x = x;
    let candidates = p.difference(&adj[pivot]);
    for v in candidates.iter() {
        r.push(v);
        bron_kerbosch(
            adj,
            r,
            p.intersection(&adj[v]),
            x.intersection(&adj[v]),
            emit,
        );
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// Every maximal clique of the graph with neighborhoods `adj`.
pub fn maximal_cliques(adj: &[VertexSet]) -> Vec<VertexSet> {
    let n = adj.len();
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(
        adj,
        &mut r,
        VertexSet::full(n),
        VertexSet::empty(n),
        &mut |clique| {
            out.push(VertexSet::from_members(n, clique.iter().copied()).expect("in range"));
        },
    );
    out.sort();
    out
}

/// The ⊆-maximal homogeneous sets of `phi` (size at least 3), deduplicated and sorted.
///
/// A set is maximal homogeneous exactly when it is a maximal clique of size
/// `>= 3` in one of the two color graphs; smaller maximal cliques are dropped
/// after enumeration.
pub fn maximal_homogeneous(phi: &Coloring) -> Result<Vec<VertexSet>> {
    if phi.n() < 3 {
        return domain(format!("maximal_homogeneous needs n >= 3, got {}", phi.n()));
    }
    let ones = phi.rows();
    let zeros: Vec<VertexSet> = ones
        .iter()
        .enumerate()
        .map(|(v, row)| {
            let mut z = row.complement();
            z.remove(v);
            z
        })
        .collect();
    let mut out: Vec<VertexSet> = maximal_cliques(&ones)
        .into_iter()
        .chain(maximal_cliques(&zeros))
        .filter(|s| s.len() >= 3)
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}
