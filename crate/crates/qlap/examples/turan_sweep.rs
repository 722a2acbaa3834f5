//! The Turán graph's smallest signless-Laplacian eigenvalue, swept over
//! (n, r) — including the orders where the classical floor fails.
//!
//! The complete r-partite Turán graph T_r(n) is the natural candidate for
//! maximizing q_min among K_{r+1}-free graphs. Writing n = rq + s, its
//! q_min is often quoted as sitting in the sandwich
//!
//!     (r−2)⌊n/r⌋  ≤  q_min(T_r(n))  ≤  (1−2/r)n,
//!
//! with equality throughout when r | n. The sweep below shows the true
//! picture: the floor holds — with equality exactly when s ∈ {0, 2} — for
//! every remainder except s = 1, where q_min(T_r(n)) drops *below*
//! (r−2)⌊n/r⌋ by up to 1 − 2/r. The smallest case is T_3(7) = K_{3,2,2}
//! with q_min = (11−√57)/2 ≈ 1.7251 < 2: the symmetric part-quotient block
//! contributes an eigenvalue the classical bound does not account for.
//! The upper bound and the Laplacian identity μ_2 = n − ⌈n/r⌉ hold
//! everywhere.
//!
//! Run with: cargo run --release --example turan_sweep

use qlap::bounds::{turan_qmin_check, TuranCheck};

fn main() -> qlap::Result<()> {
    println!("{}", TuranCheck::TSV_HEADER);
    let mut floor_failures: Vec<(usize, usize, f64, f64)> = Vec::new();
    for r in 3..=8usize {
        for n in (r + 1)..=40 {
            let t = turan_qmin_check(n, r)?;
            if n <= 12 {
                println!("{}", t.tsv_row());
            }
            assert!(t.qmin <= t.upper + 1e-9, "upper bound failed?!");
            assert!((t.mu2 - t.mu2_expected).abs() <= 1e-7, "mu_2 identity failed?!");
            assert_eq!(t.lower_holds, n % r != 1, "unexpected floor status");
            if !t.lower_holds {
                floor_failures.push((n, r, t.qmin, t.lower));
            }
        }
    }

    println!();
    println!(
        "floor (r-2)*floor(n/r) fails at {} of the 213 swept pairs — exactly those with \
         n = 1 (mod r):",
        floor_failures.len()
    );
    for (n, r, qmin, lower) in floor_failures.iter().take(6) {
        println!(
            "  T_{r}({n}): q_min = {qmin:.6} < {lower}  (deficit {:.6}, always < 1 - 2/r = {:.6})",
            lower - qmin,
            1.0 - 2.0 / *r as f64
        );
    }
    println!("  ... and {} more", floor_failures.len() - 6);

    println!();
    println!("exact closed forms at the smallest failure, T_3(7) = K_(3,2,2):");
    let t = turan_qmin_check(7, 3)?;
    println!(
        "  computed q_min = {:.12}; (11 - sqrt 57)/2 = {:.12}",
        t.qmin,
        (11.0 - 57.0_f64.sqrt()) / 2.0
    );
    println!(
        "  yet the *maximum* over K_4-free graphs on 7 vertices is not harmed: \
         C_5 joined to two\n  nonadjacent vertices reaches (11 - sqrt 41)/2 = {:.12} > 2 \
         (see the conjecture_probe example)",
        (11.0 - 41.0_f64.sqrt()) / 2.0
    );
    Ok(())
}
