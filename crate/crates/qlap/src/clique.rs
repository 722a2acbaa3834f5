//! Exact maximum-clique computation.
//!
//! Branch-and-bound in the Bron–Kerbosch style: extend a growing clique R
//! through a candidate set P, branching only on vertices outside the
//! neighborhood of a pivot (chosen to maximize |P ∩ N(pivot)|), and pruning
//! whenever |R| + |P| cannot beat the incumbent. The same machinery powers
//! `is_k_free` with an early exit once any K_k appears, and the induced-set
//! variant the search module uses for its incremental clique test.

use crate::bitset::{self, VertexSet};
use crate::graph::Graph;

/// Order of the largest complete subgraph (at least 1, since graphs here are
/// nonempty).
pub fn clique_number(g: &Graph) -> usize {
    search(g, &VertexSet::all(g.order()), usize::MAX)
}

/// True when `g` contains no complete subgraph on `k` vertices.
pub fn is_k_free(g: &Graph, k: usize) -> bool {
    if k == 0 {
        // Every graph contains the empty clique.
        return false;
    }
    if k > g.order() {
        return true;
    }
    if k == 3 {
        return triangle_free(g);
    }
    search(g, &VertexSet::all(g.order()), k) < k
}

/// Largest clique using only vertices of `subset`, stopping early once
/// `stop_at` is reached. The search module asks this about common
/// neighborhoods when vetting an edge addition.
pub(crate) fn clique_in_subset_at_least(g: &Graph, subset: &VertexSet, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if subset.len() < k {
        return false;
    }
    search(g, subset, k) >= k
}

/// A triangle exists exactly when some edge has a common neighbor.
fn triangle_free(g: &Graph) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| g.common_neighbor_count(u, v) == 0)
}

fn search(g: &Graph, candidates: &VertexSet, stop_at: usize) -> usize {
    let mut best = 0;
    expand(g, 0, candidates, stop_at, &mut best);
    best
}

fn expand(g: &Graph, r_size: usize, p: &VertexSet, stop_at: usize, best: &mut usize) {
    if *best >= stop_at {
        return;
    }
    let p_size = p.len();
    if p_size == 0 {
        if r_size > *best {
            *best = r_size;
        }
        return;
    }
    if r_size + p_size <= *best {
        return;
    }

    // Pivot on the candidate covering most of P; only vertices outside its
    // neighborhood start new branches.
    let mut pivot = usize::MAX;
    let mut pivot_cover = 0;
    for u in p.iter() {
        let cover = bitset::intersection_count(p.words(), g.row(u));
        if pivot == usize::MAX || cover > pivot_cover {
            pivot = u;
            pivot_cover = cover;
        }
    }

    // No self-loops, so the pivot itself always passes this filter.
    let branch_vertices: Vec<usize> = p.iter().filter(|&v| !g.has_edge(pivot, v)).collect();
    let mut p = p.clone();
    for v in branch_vertices {
        if *best >= stop_at || r_size + p.len() <= *best {
            return;
        }
        let next = p.intersection(g.row(v));
        expand(g, r_size + 1, &next, stop_at, best);
        p.remove(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{labeled_graphs, Graph};

    #[test]
    fn known_clique_numbers() {
        assert_eq!(clique_number(&Graph::complete(4).unwrap()), 4);
        assert_eq!(clique_number(&Graph::cycle(5).unwrap()), 2);
        assert_eq!(clique_number(&Graph::empty(3).unwrap()), 1);
        assert_eq!(clique_number(&Graph::petersen()), 2);
        // One vertex per part.
        assert_eq!(clique_number(&Graph::turan(12, 4).unwrap()), 4);
        assert_eq!(clique_number(&Graph::turan(5, 5).unwrap()), 5);
    }

    #[test]
    fn k_free_matches_clique_number_exhaustively() {
        // Every 5-vertex labeled graph, every k: the early-exit predicate
        // must agree with the full computation.
        for g in labeled_graphs(5).unwrap() {
            let omega = clique_number(&g);
            for k in 1..=6 {
                assert_eq!(is_k_free(&g, k), omega < k, "graph {:?}, k={k}", g);
            }
        }
    }

    #[test]
    fn blowup_preserves_clique_number() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        for t in 1..=3 {
            assert_eq!(clique_number(&g.blowup(t).unwrap()), 3);
        }
        // Edgeless graphs stay edgeless: clique number 1 on both sides.
        let e = Graph::empty(3).unwrap();
        assert_eq!(clique_number(&e.blowup(3).unwrap()), 1);
    }

    #[test]
    fn edge_cases_for_k() {
        let g = Graph::complete(3).unwrap();
        assert!(!is_k_free(&g, 0));
        assert!(!is_k_free(&g, 1));
        assert!(!is_k_free(&g, 3));
        assert!(is_k_free(&g, 4));
        assert!(is_k_free(&Graph::empty(5).unwrap(), 2));
    }

    #[test]
    fn subset_variant_sees_only_the_subset() {
        let g = Graph::complete(5).unwrap();
        let mut s = VertexSet::empty(5);
        s.insert(0);
        s.insert(2);
        s.insert(4);
        assert!(clique_in_subset_at_least(&g, &s, 3));
        assert!(!clique_in_subset_at_least(&g, &s, 4));
        assert!(clique_in_subset_at_least(&g, &VertexSet::empty(5), 0));
    }
}
