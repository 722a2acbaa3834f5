//! Simple undirected graphs on 0-based vertex labels.
//!
//! Adjacency is stored as one bit row per vertex, which keeps degree counts,
//! common-neighborhood sizes, and induced-set operations cheap for everything
//! this crate does (orders up to [`MAX_ORDER`]). Graphs are immutable through
//! the public API; the search module mutates private copies via crate-internal
//! toggles.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::bitset;
use crate::error::{Error, Result};

/// Hard cap on graph order. Everything downstream (eigensolves in particular)
/// is sized for this; constructions refuse to exceed it.
pub const MAX_ORDER: usize = 1000;

/// An undirected simple graph with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl Graph {
    // ------------------------------------------------------------------
    // Construction
    // ------------------------------------------------------------------

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "graph order must be at least 1".into(),
            ));
        }
        if n > MAX_ORDER {
            return Err(Error::TooLarge {
                requested: n,
                cap: MAX_ORDER,
            });
        }
        let words_per_row = bitset::words_for(n);
        Ok(Graph {
            n,
            words_per_row,
            bits: vec![0; n * words_per_row],
        })
    }

    /// Graph on `n` vertices with exactly the given edges.
    ///
    /// Duplicate edges collapse; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_endpoints(u, v)?;
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// The complete graph K_n.
    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// The cycle C_n (requires `n >= 3`).
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        Ok(g)
    }

    /// The path P_n on `n` vertices (`n - 1` edges).
    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for v in 0..n.saturating_sub(1) {
            g.add_edge(v, v + 1);
        }
        Ok(g)
    }

    /// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10, spokes.
    pub fn petersen() -> Graph {
        let mut g = Graph::empty(10).expect("order 10 is within the cap");
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, 5 + i);
        }
        g
    }

    /// The Turán graph T_r(n): complete r-partite with part sizes as equal as
    /// possible. Parts occupy contiguous vertex ranges in nonincreasing size
    /// order, so the labeling is deterministic.
    pub fn turan(n: usize, r: usize) -> Result<Graph> {
        if r < 1 || r > n {
            return Err(Error::InvalidParameter(format!(
                "Turán graph needs 1 <= r <= n, got r={r}, n={n}"
            )));
        }
        let small = n / r;
        let bigger_parts = n % r;
        let mut g = Graph::empty(n)?;
        // part_of[v] for contiguous parts: the first `bigger_parts` parts have
        // size small+1, the rest size small.
        let mut part_of = Vec::with_capacity(n);
        for part in 0..r {
            let size = if part < bigger_parts { small + 1 } else { small };
            part_of.extend(std::iter::repeat_n(part, size));
        }
        debug_assert_eq!(part_of.len(), n);
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    /// Erdős–Rényi graph G(n, p): each pair becomes an edge independently
    /// with probability `p`, in lexicographic pair order for a given RNG.
    pub fn random(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter(format!(
                "edge probability must lie in [0,1], got {p}"
            )));
        }
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    /// The `t`-fold blowup: vertex `u` becomes `t` pairwise nonadjacent
    /// copies, copy `(u, i)` landing at index `u + i*n`, and `(u,i) ~ (v,j)`
    /// exactly when `u ~ v` here. This index layout matches the block
    /// structure the closed-form spectra are derived from.
    pub fn blowup(&self, t: usize) -> Result<Graph> {
        if t == 0 {
            return Err(Error::InvalidParameter(
                "blowup factor must be at least 1".into(),
            ));
        }
        let n = self.n;
        let order = n.checked_mul(t).filter(|&o| o <= MAX_ORDER).ok_or(
            Error::TooLarge {
                requested: n.saturating_mul(t),
                cap: MAX_ORDER,
            },
        )?;
        let mut g = Graph::empty(order)?;
        for (u, v) in self.edges() {
            for i in 0..t {
                for j in 0..t {
                    g.add_edge(u + i * n, v + j * n);
                }
            }
        }
        Ok(g)
    }

    /// The complement graph: same vertices, edge exactly where there was none.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("order unchanged");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// This graph plus `k` fresh isolated vertices.
    pub fn add_isolated(&self, k: usize) -> Result<Graph> {
        let order = self.n.checked_add(k).filter(|&o| o <= MAX_ORDER).ok_or(
            Error::TooLarge {
                requested: self.n.saturating_add(k),
                cap: MAX_ORDER,
            },
        )?;
        let mut g = Graph::empty(order)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        Ok(g)
    }

    // ------------------------------------------------------------------
    // Mutation (crate-internal: the public surface is immutable)
    // ------------------------------------------------------------------

    pub(crate) fn check_endpoints(&self, u: usize, v: usize) -> Result<()> {
        for &w in &[u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        Ok(())
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let w = self.words_per_row;
        bitset::set(&mut self.bits[u * w..(u + 1) * w], v);
        bitset::set(&mut self.bits[v * w..(v + 1) * w], u);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let w = self.words_per_row;
        bitset::clear(&mut self.bits[u * w..(u + 1) * w], v);
        bitset::clear(&mut self.bits[v * w..(v + 1) * w], u);
    }

    pub(crate) fn toggle_edge(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            self.remove_edge(u, v);
        } else {
            self.add_edge(u, v);
        }
    }

    // ------------------------------------------------------------------
    // Accessors
    // ------------------------------------------------------------------

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        bitset::count(&self.bits) / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bitset::test(self.row(u), v)
    }

    /// The adjacency row of `v` as raw bitset words.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words_per_row..(v + 1) * self.words_per_row]
    }

    pub fn words_per_row(&self) -> usize {
        self.words_per_row
    }

    pub fn degree(&self, v: usize) -> usize {
        bitset::count(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bitset::ones(self.row(v))
    }

    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        bitset::intersection_count(self.row(u), self.row(v))
    }

    /// All edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    // ------------------------------------------------------------------
    // Structure
    // ------------------------------------------------------------------

    /// Component index for every vertex; indices are assigned in order of the
    /// smallest vertex in each component.
    pub fn component_ids(&self) -> Vec<usize> {
        let mut id = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if id[start] != usize::MAX {
                continue;
            }
            id[start] = next;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if id[v] == usize::MAX {
                        id[v] = next;
                        queue.push_back(v);
                    }
                }
            }
            next += 1;
        }
        id
    }

    pub fn is_connected(&self) -> bool {
        self.component_ids().iter().all(|&c| c == 0)
    }

    /// Breadth-first 2-coloring of the whole graph.
    pub fn is_bipartite(&self) -> bool {
        self.two_color().is_some()
    }

    /// True when at least one connected component is 2-colorable. This is the
    /// combinatorial side of the q_min = 0 criterion.
    pub fn has_bipartite_component(&self) -> bool {
        let colors = self.two_coloring_attempt();
        let ids = self.component_ids();
        let ncomp = ids.iter().copied().max().map_or(0, |m| m + 1);
        let mut component_ok = vec![true; ncomp];
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if colors[u] == colors[v] {
                    component_ok[ids[u]] = false;
                }
            }
        }
        component_ok.iter().any(|&ok| ok)
    }

    /// A proper 2-coloring if one exists.
    pub fn two_color(&self) -> Option<Vec<bool>> {
        let colors = self.two_coloring_attempt();
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if colors[u] == colors[v] {
                    return None;
                }
            }
        }
        Some(colors)
    }

    /// BFS 2-coloring attempt: valid on bipartite components, and the
    /// conflict pattern identifies the odd-cycle components.
    fn two_coloring_attempt(&self) -> Vec<bool> {
        let mut color = vec![false; self.n];
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        color[v] = !color[u];
                        queue.push_back(v);
                    }
                }
            }
        }
        color
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.edge_count(), self.edges())
    }
}

// ----------------------------------------------------------------------
// Labeled enumeration (tiny orders)
// ----------------------------------------------------------------------

/// All vertex pairs `(u, v)` with `u < v`, lexicographically. This fixed slot
/// order is shared by the exhaustive enumeration and the search moves.
pub fn edge_slots(n: usize) -> Vec<(usize, usize)> {
    let mut slots = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            slots.push((u, v));
        }
    }
    slots
}

/// Graph whose edge set is the given bitmask over `edge_slots(n)`.
pub fn from_edge_mask(n: usize, mask: u64) -> Result<Graph> {
    let slots = edge_slots(n);
    if slots.len() > 63 {
        return Err(Error::SizeLimit {
            what: "from_edge_mask",
            detail: format!("{} edge slots exceed a 64-bit mask", slots.len()),
        });
    }
    let mut g = Graph::empty(n)?;
    for (i, &(u, v)) in slots.iter().enumerate() {
        if mask >> i & 1 == 1 {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Iterator over every labeled graph on `n` vertices, in edge-mask order.
/// Capped at `n <= 7` (2^21 graphs); larger orders are not enumerable here.
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > 7 {
        return Err(Error::SizeLimit {
            what: "labeled_graphs",
            detail: format!("exhaustive enumeration supports 1 <= n <= 7, got {n}"),
        });
    }
    let slots = edge_slots(n);
    let total = 1u64 << slots.len();
    Ok((0..total).map(move |mask| {
        from_edge_mask(n, mask).expect("order and mask already validated")
    }))
}

// ----------------------------------------------------------------------
// Brute-force isomorphism (test-scale only)
// ----------------------------------------------------------------------

/// Exact isomorphism test by backtracking over vertex maps. Only for tiny
/// graphs: orders above 10 are refused.
pub fn is_isomorphic_small(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() > 10 || b.order() > 10 {
        return Err(Error::SizeLimit {
            what: "is_isomorphic_small",
            detail: "brute-force isomorphism is capped at order 10".into(),
        });
    }
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }

    let n = a.order();
    // map[u] = image of u in b; backtrack vertex by vertex, checking edges
    // against all previously mapped vertices.
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let u = map.len();
        if u == a.order() {
            return true;
        }
        for image in 0..b.order() {
            if used[image] || a.degree(u) != b.degree(image) {
                continue;
            }
            let consistent = (0..u).all(|w| a.has_edge(w, u) == b.has_edge(map[w], image));
            if !consistent {
                continue;
            }
            map.push(image);
            used[image] = true;
            if extend(a, b, map, used) {
                return true;
            }
            map.pop();
            used[image] = false;
        }
        false
    }

    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    Ok(extend(a, b, &mut map, &mut used))
}

// ----------------------------------------------------------------------
// Named constructions
// ----------------------------------------------------------------------

/// Named graphs reachable from the command line and the examples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphLabel {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Empty(usize),
    Petersen,
    Turan { n: usize, r: usize },
    HigmanSims,
}

impl GraphLabel {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            GraphLabel::Complete(n) => Graph::complete(n),
            GraphLabel::Cycle(n) => Graph::cycle(n),
            GraphLabel::Path(n) => Graph::path(n),
            GraphLabel::Empty(n) => Graph::empty(n),
            GraphLabel::Petersen => Ok(Graph::petersen()),
            GraphLabel::Turan { n, r } => Graph::turan(n, r),
            GraphLabel::HigmanSims => crate::srg::higman_sims(),
        }
    }
}

impl fmt::Display for GraphLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphLabel::Complete(n) => write!(f, "complete:{n}"),
            GraphLabel::Cycle(n) => write!(f, "cycle:{n}"),
            GraphLabel::Path(n) => write!(f, "path:{n}"),
            GraphLabel::Empty(n) => write!(f, "empty:{n}"),
            GraphLabel::Petersen => write!(f, "petersen"),
            GraphLabel::Turan { n, r } => write!(f, "turan:{n},{r}"),
            GraphLabel::HigmanSims => write!(f, "higman-sims"),
        }
    }
}

impl FromStr for GraphLabel {
    type Err = Error;

    /// Accepts `complete:N` (alias `kN`), `cycle:N` (`cN`), `path:N` (`pN`),
    /// `empty:N`, `petersen`, `turan:N,R`, `higman-sims`.
    fn from_str(s: &str) -> Result<GraphLabel> {
        let s = s.trim();
        let lower = s.to_ascii_lowercase();
        let bad = |msg: String| Error::InvalidParameter(msg);
        let parse_n = |txt: &str| {
            txt.parse::<usize>()
                .map_err(|_| bad(format!("expected a number in graph label, got {txt:?}")))
        };
        if let Some((kind, rest)) = lower.split_once(':') {
            return match kind {
                "complete" | "k" => Ok(GraphLabel::Complete(parse_n(rest)?)),
                "cycle" | "c" => Ok(GraphLabel::Cycle(parse_n(rest)?)),
                "path" | "p" => Ok(GraphLabel::Path(parse_n(rest)?)),
                "empty" => Ok(GraphLabel::Empty(parse_n(rest)?)),
                "turan" => {
                    let (n_txt, r_txt) = rest.split_once(',').ok_or_else(|| {
                        bad("turan label needs the form turan:N,R".into())
                    })?;
                    Ok(GraphLabel::Turan {
                        n: parse_n(n_txt)?,
                        r: parse_n(r_txt)?,
                    })
                }
                other => Err(bad(format!("unknown graph label kind {other:?}"))),
            };
        }
        match lower.as_str() {
            "petersen" => Ok(GraphLabel::Petersen),
            "higman-sims" | "higmansims" | "hs" => Ok(GraphLabel::HigmanSims),
            _ => {
                // shorthand like k5 / c5 / p4
                if let Some(rest) = lower.strip_prefix('k') {
                    if let Ok(n) = rest.parse() {
                        return Ok(GraphLabel::Complete(n));
                    }
                }
                if let Some(rest) = lower.strip_prefix('c') {
                    if let Ok(n) = rest.parse() {
                        return Ok(GraphLabel::Cycle(n));
                    }
                }
                if let Some(rest) = lower.strip_prefix('p') {
                    if let Ok(n) = rest.parse() {
                        return Ok(GraphLabel::Path(n));
                    }
                }
                Err(bad(format!("unknown graph label {s:?}")))
            }
        }
    }
}
