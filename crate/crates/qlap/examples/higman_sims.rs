//! The 100-vertex strongly regular graph and the triangle-free record.
//!
//! The graph built here is the unique strongly regular graph with
//! parameters (100, 22, 0, 6): 100 vertices, 22-regular, adjacent vertices
//! share no common neighbour (so the graph is triangle-free), non-adjacent
//! vertices share exactly six. Its adjacency spectrum is {22, 2^77, (−8)^22},
//! so q_min = 22 − 8 = 14 by the regular-graph identity — the largest known
//! q_min among triangle-free graphs relative to order, giving the lower
//! bound 14⌊n/100⌋ via blowups and padding.
//!
//! Run with: cargo run --release --example higman_sims

use qlap::clique::is_k_free;
use qlap::search::blowup_padding_bound;
use qlap::spectral::{check_regular_identity, q_min, spectrum, MatrixKind};
use qlap::srg::{higman_sims, srg_violation, HIGMAN_SIMS_PARAMS};

fn main() -> qlap::Result<()> {
    let g = higman_sims()?;
    println!("order {}, {} edges, triangle-free: {}", g.order(), g.edge_count(),
        is_k_free(&g, 3));

    match srg_violation(&g, HIGMAN_SIMS_PARAMS) {
        None => println!("strongly regular (100, 22, 0, 6): verified"),
        Some(why) => println!("SRG CHECK FAILED: {why}"),
    }

    let adj = spectrum(&g, MatrixKind::Adjacency)?;
    let mults: Vec<String> = adj
        .multiplicities()
        .iter()
        .map(|(v, k)| format!("{:.6}^{k}", v))
        .collect();
    println!("adjacency spectrum: {}", mults.join(", "));

    let (qmin, identity) = check_regular_identity(&g)?;
    println!("q_min = {qmin:.10} (regular identity d + lambda_min = {identity:.10})");

    // The 2-blowup doubles q_min: a 200-vertex triangle-free graph with
    // q_min = 28, checked both through the closed form and directly.
    let closed = blowup_padding_bound(&g, 200)?;
    let blown = g.blowup(2)?;
    let direct = q_min(&blown)?;
    println!(
        "2-blowup (200 vertices): closed-form q_min = {:.10}, direct = {direct:.10}, \
         triangle-free: {}",
        closed.0,
        is_k_free(&blown, 3)
    );

    // Padding to 250 vertices: the blowup factor stays 2, the construction
    // value stays 28 — but the padded witness itself has isolated vertices,
    // hence bipartite components, hence q_min = 0. The value describes the
    // unpadded 200-vertex blowup, not the padded graph.
    let (value, witness) = blowup_padding_bound(&g, 250)?;
    println!(
        "padding to 250: construction value {value} from the 200-vertex blowup; \
         the padded witness has q_min = {:.1} (isolated vertices force a bipartite component)",
        q_min(&witness)?
    );
    Ok(())
}
