//! Evidence gathering on two open questions: does the Turán graph maximize
//! q_min among K_{r+1}-free graphs for large n, and is the limit constant
//! c_r equal to 1 − 2/r?
//!
//! The probe never asserts either statement. For n ≤ 7 it enumerates every
//! labeled graph and classifies the winners exactly (up to isomorphism);
//! beyond that it reports the best graph a seeded local search can find.
//! The small-order picture is already instructive: at n = 7, r = 3 the
//! Turán graph is *strictly beaten* by the join of a pentagon with two
//! nonadjacent vertices — q_min = (11−√41)/2 ≈ 2.2984 against
//! q_min(T_3(7)) = (11−√57)/2 ≈ 1.7251 — so any uniqueness statement for
//! the Turán graph genuinely needs its "n sufficiently large" hypothesis.
//!
//! Run with: cargo run --release --example conjecture_probe

use qlap::search::{conjecture2_probe, SearchConfig};

fn main() -> qlap::Result<()> {
    for (n, r) in [(5, 3), (6, 3), (7, 3), (6, 4), (7, 4)] {
        let mut budget = SearchConfig::new(n, r);
        budget.seed = 7;
        let p = conjecture2_probe(n, r, &budget)?;
        println!(
            "n={n} r={r} [{}]",
            match p.method {
                qlap::search::ProbeMethod::Exhaustive => "exhaustive",
                qlap::search::ProbeMethod::LocalSearch => "local search",
            }
        );
        println!(
            "  T_{r}({n}) q_min = {:.10}; best found = {:.10} (witness {})",
            p.turan_qmin, p.best_qmin, p.best_graph6
        );
        println!(
            "  reaches Turan: {} | exceeds Turan: {} | non-Turan attainer: {}",
            p.reaches_turan,
            p.exceeds_turan,
            match p.non_turan_attainer {
                Some(b) => b.to_string(),
                None => "undetermined".into(),
            }
        );
        println!(
            "  best ratio q_min/n = {:.6} vs conjectured limit 1 - 2/r = {:.6} \
             (upper bound {:.4})",
            p.best_ratio, p.conjectured_c_r, p.upper_bound
        );
        println!();
    }

    // Larger orders, local-search evidence only.
    for (n, r) in [(12, 3), (15, 4)] {
        let mut budget = SearchConfig::new(n, r);
        budget.seed = 7;
        budget.restarts = 10;
        budget.steps_per_restart = 2500;
        let p = conjecture2_probe(n, r, &budget)?;
        println!(
            "n={n} r={r} [local search, seed 7]: T_{r}({n}) = {:.6}, best found = {:.6}, \
             exceeds: {}",
            p.turan_qmin, p.best_qmin, p.exceeds_turan
        );
    }

    println!();
    println!(
        "The limit constants c_r remain open: proven windows only (for example \
         c_2 in [0.14, 2/9) and c_3 in (1/3, 4/9]), no value is asserted anywhere \
         in this crate."
    );
    Ok(())
}
