//! The Higman–Sims graph, built from scratch, plus a strongly-regular
//! parameter checker.
//!
//! Construction route: the projective plane of order 4 gives 21 points and 21
//! lines; its hyperovals (6-point sets meeting every line in 0 or 2 points)
//! fall into three classes of 56 under the even-intersection relation; one
//! class, together with the extended lines, forms the 77 blocks of the Steiner
//! system S(3,6,22); the Higman–Sims graph is then assembled on a root vertex,
//! the 22 Steiner points, and the 77 blocks. Every stage re-checks itself and
//! fails loudly rather than emitting a wrong graph.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Strongly-regular parameters (v, k, lambda, mu).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

/// Parameters of the Higman–Sims graph.
pub const HIGMAN_SIMS_PARAMS: SrgParams = SrgParams {
    v: 100,
    k: 22,
    lambda: 0,
    mu: 6,
};

/// Exact strongly-regular check over every vertex pair. Returns the first
/// violation as a message, or `None` when `g` is an SRG with these parameters.
pub fn srg_violation(g: &Graph, params: SrgParams) -> Option<String> {
    if g.order() != params.v {
        return Some(format!("order is {}, expected {}", g.order(), params.v));
    }
    for u in 0..g.order() {
        let d = g.degree(u);
        if d != params.k {
            return Some(format!("vertex {u} has degree {d}, expected {}", params.k));
        }
    }
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            let common = g.common_neighbor_count(u, v);
            let expected = if g.has_edge(u, v) { params.lambda } else { params.mu };
            if common != expected {
                return Some(format!(
                    "pair ({u},{v}) has {common} common neighbors, expected {expected}"
                ));
            }
        }
    }
    None
}

// ----------------------------------------------------------------------
// GF(4) and the projective plane of order 4
// ----------------------------------------------------------------------

// Field elements 0, 1, x, x+1 encoded as 0..4 with x^2 = x + 1; addition is
// XOR of the codes.
const GF4_MUL: [[u8; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
];
const GF4_INV: [u8; 4] = [0, 1, 3, 2]; // inverse of 0 unused

type Vec3 = [u8; 3];

fn mul(a: u8, b: u8) -> u8 {
    GF4_MUL[a as usize][b as usize]
}

fn dot(a: Vec3, b: Vec3) -> u8 {
    mul(a[0], b[0]) ^ mul(a[1], b[1]) ^ mul(a[2], b[2])
}

/// Scale so the first nonzero coordinate becomes 1; this picks one canonical
/// representative per projective point.
fn normalize(v: Vec3) -> Vec3 {
    let lead = v.iter().copied().find(|&c| c != 0).expect("nonzero vector");
    let s = GF4_INV[lead as usize];
    [mul(s, v[0]), mul(s, v[1]), mul(s, v[2])]
}

/// The 21 projective points in sorted canonical order.
fn projective_points() -> Vec<Vec3> {
    let mut points = Vec::new();
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                if (a, b, c) == (0, 0, 0) {
                    continue;
                }
                points.push(normalize([a, b, c]));
            }
        }
    }
    points.sort_unstable();
    points.dedup();
    points
}

/// Bitmasks (over point indices) of the 21 lines: a line is the zero set of a
/// dual point.
fn line_masks(points: &[Vec3]) -> Result<Vec<u32>> {
    let duals = projective_points();
    let mut lines = Vec::with_capacity(duals.len());
    for d in &duals {
        let mut mask = 0u32;
        for (i, p) in points.iter().enumerate() {
            if dot(*d, *p) == 0 {
                mask |= 1 << i;
            }
        }
        if mask.count_ones() != 5 {
            return Err(Error::ConstructionCheck(format!(
                "projective line has {} points, expected 5",
                mask.count_ones()
            )));
        }
        lines.push(mask);
    }
    if lines.len() != 21 {
        return Err(Error::ConstructionCheck(format!(
            "found {} projective lines, expected 21",
            lines.len()
        )));
    }
    Ok(lines)
}

/// All hyperovals as point bitmasks, in lexicographic order of their sorted
/// point lists (which is the enumeration order of 6-subsets).
// Indexing a 2D table by a vertex pair is clearer than iterator chains here.
#[allow(clippy::needless_range_loop)]
fn hyperovals(lines: &[u32]) -> Result<Vec<u32>> {
    // line_through[u][v]: index of the unique line containing points u and v.
    let mut line_through = [[usize::MAX; 21]; 21];
    for (li, &mask) in lines.iter().enumerate() {
        for u in 0..21 {
            if mask >> u & 1 == 0 {
                continue;
            }
            for v in u + 1..21 {
                if mask >> v & 1 == 1 {
                    if line_through[u][v] != usize::MAX {
                        return Err(Error::ConstructionCheck(format!(
                            "points {u},{v} lie on two lines"
                        )));
                    }
                    line_through[u][v] = li;
                    line_through[v][u] = li;
                }
            }
        }
    }

    let mut found = Vec::new();
    let mut subset = [0usize; 6];
    enumerate_six_subsets(&mut subset, 0, 0, &mut |set: &[usize; 6]| {
        let mask: u32 = set.iter().map(|&p| 1u32 << p).sum();
        let is_hyperoval = set.iter().enumerate().all(|(i, &u)| {
            set[i + 1..].iter().all(|&v| {
                (lines[line_through[u][v]] & mask).count_ones() == 2
            })
        });
        if is_hyperoval {
            found.push(mask);
        }
    });
    if found.len() != 168 {
        return Err(Error::ConstructionCheck(format!(
            "found {} hyperovals, expected 168",
            found.len()
        )));
    }
    Ok(found)
}

fn enumerate_six_subsets(
    subset: &mut [usize; 6],
    depth: usize,
    start: usize,
    visit: &mut impl FnMut(&[usize; 6]),
) {
    if depth == 6 {
        visit(subset);
        return;
    }
    for p in start..21 {
        subset[depth] = p;
        enumerate_six_subsets(subset, depth + 1, p + 1, visit);
    }
}

/// The hyperoval class (size 56) containing the lexicographically smallest
/// hyperoval: exactly the ones meeting it in an even number of points.
fn even_intersection_class(all: &[u32]) -> Result<Vec<u32>> {
    let anchor = all[0];
    let class: Vec<u32> = all
        .iter()
        .copied()
        .filter(|h| (h & anchor).count_ones().is_multiple_of(2))
        .collect();
    if class.len() != 56 {
        return Err(Error::ConstructionCheck(format!(
            "even-intersection class has {} hyperovals, expected 56",
            class.len()
        )));
    }
    for (i, &a) in class.iter().enumerate() {
        for &b in &class[i + 1..] {
            if (a & b).count_ones() % 2 != 0 {
                return Err(Error::ConstructionCheck(
                    "hyperoval class is not closed under even intersection".into(),
                ));
            }
        }
    }
    Ok(class)
}

// ----------------------------------------------------------------------
// Steiner system S(3,6,22) and the graph
// ----------------------------------------------------------------------

/// Blocks of S(3,6,22) as bitmasks over 22 points (bit 21 is the extension
/// point added to every line). Lines come first, then the hyperoval class.
fn steiner_blocks() -> Result<Vec<u32>> {
    let points = projective_points();
    if points.len() != 21 {
        return Err(Error::ConstructionCheck(format!(
            "found {} projective points, expected 21",
            points.len()
        )));
    }
    let lines = line_masks(&points)?;
    let ovals = even_intersection_class(&hyperovals(&lines)?)?;

    let extension = 1u32 << 21;
    let mut blocks: Vec<u32> = lines.iter().map(|&l| l | extension).collect();
    blocks.extend_from_slice(&ovals);
    if blocks.len() != 77 {
        return Err(Error::ConstructionCheck(format!(
            "built {} blocks, expected 77",
            blocks.len()
        )));
    }

    // Steiner self-check: every 3 of the 22 points lie in exactly one block.
    for i in 0..22u32 {
        for j in i + 1..22 {
            for k in j + 1..22 {
                let triple = 1 << i | 1 << j | 1 << k;
                let containing = blocks.iter().filter(|&&b| b & triple == triple).count();
                if containing != 1 {
                    return Err(Error::ConstructionCheck(format!(
                        "triple {{{i},{j},{k}}} lies in {containing} blocks, expected exactly 1"
                    )));
                }
            }
        }
    }
    Ok(blocks)
}

/// The Higman–Sims graph on 100 vertices, deterministically labeled:
/// vertex 0 is the root, 1..=22 are the Steiner points, 23..=99 the blocks
/// (extended lines first, then hyperovals). Root ~ every point; point ~ block
/// containing it; blocks ~ exactly when disjoint. The full SRG(100,22,0,6)
/// check runs before the graph is returned.
pub fn higman_sims() -> Result<Graph> {
    let blocks = steiner_blocks()?;
    let mut g = Graph::empty(100)?;
    for p in 0..22 {
        g.add_edge(0, 1 + p);
    }
    for (b, &mask) in blocks.iter().enumerate() {
        for p in 0..22 {
            if mask >> p & 1 == 1 {
                g.add_edge(1 + p, 23 + b);
            }
        }
    }
    for (b1, &m1) in blocks.iter().enumerate() {
        for (b2, &m2) in blocks.iter().enumerate().skip(b1 + 1) {
            if m1 & m2 == 0 {
                g.add_edge(23 + b1, 23 + b2);
            }
        }
    }
    if let Some(violation) = srg_violation(&g, HIGMAN_SIMS_PARAMS) {
        return Err(Error::ConstructionCheck(format!(
            "Higman–Sims parameter check failed: {violation}"
        )));
    }
    Ok(g)
}
