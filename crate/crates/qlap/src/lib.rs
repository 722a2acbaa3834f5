//! Tools for studying the smallest signless-Laplacian eigenvalue (q_min) of
//! graphs without large cliques.
//!
//! The signless Laplacian of a graph is Q = D + A (degree matrix plus
//! adjacency matrix). Its smallest eigenvalue q_min is zero exactly when
//! some component of the graph is bipartite, which makes q_min a spectral
//! measure of how far a graph is from bipartite. This crate implements the
//! machinery needed to explore how large q_min can get when the graph is
//! required to be K_{r+1}-free:
//!
//! - [`graph`]: compact adjacency-bitset graphs with the standard
//!   constructions (complete, cycle, Turán, Petersen, blowups, complements)
//!   and a brute-force isomorphism check for tiny graphs;
//! - [`graph6`]: the graph6 text codec (including the long size form up to
//!   1000 vertices) and a plain edge-list format;
//! - [`eigen`]: a dense cyclic Jacobi eigensolver for symmetric matrices;
//! - [`spectral`]: adjacency / Laplacian / signless-Laplacian spectra,
//!   q_min, μ₂, closed-form blowup spectra, the complement-blowup spectra,
//!   and the d + λ_min identity for regular graphs;
//! - [`clique`]: exact clique number and K-freeness tests (Bron–Kerbosch
//!   with pivoting);
//! - [`srg`]: the Higman–Sims graph built deterministically from the
//!   projective plane PG(2,4) via a Steiner system S(3,6,22), with every
//!   construction step self-checked;
//! - [`bipartite`]: exact (Gray-code) and heuristic max-cut, and the
//!   bipartization-cost report against the q_min·n/4 lower bound;
//! - [`bounds`]: every closed-form bound on the extremal function, with
//!   consistency-checked reports;
//! - [`search`]: exhaustive (n ≤ 7) and seeded local search for
//!   K_{r+1}-free graphs with large q_min, blowup padding bounds, and an
//!   evidence-only probe of the Turán-optimality conjecture.
//!
//! # Where to start
//!
//! The `examples/` directory is the guided tour — one runnable program per
//! capability:
//!
//! ```text
//! cargo run --release --example blowup_spectra    # closed forms vs direct eigensolves
//! cargo run --release --example higman_sims       # SRG(100,22,0,6) from scratch
//! cargo run --release --example bipartization     # max-cut vs q_min·n/4 on small corpora
//! cargo run --release --example bound_table       # the known window around f_r(n)
//! cargo run --release --example turan_sweep       # the Turán sandwich and μ₂ identity
//! cargo run --release --example extremal_search   # exhaustive + local search
//! cargo run --release --example conjecture_probe  # Turán-optimality evidence
//! ```
//!
//! The same functionality is scriptable through the thin `qlap` binary; see
//! the README for the subcommand list.
//!
//! # A two-minute example
//!
//! ```
//! use qlap::{Graph, MatrixKind};
//!
//! // q_min(C_5) = (3 − √5)/2, the worst case among 5-vertex
//! // triangle-free graphs.
//! let c5 = Graph::cycle(5)?;
//! let q = qlap::spectral::q_min(&c5)?;
//! assert!((q - (3.0 - 5.0_f64.sqrt()) / 2.0).abs() < 1e-10);
//!
//! // Blowing up a graph scales its q_min exactly; the closed-form blowup
//! // spectrum agrees with a direct eigensolve of the materialized blowup.
//! let closed = qlap::spectral::blowup_spectrum_closed(&c5, 3, MatrixKind::SignlessLaplacian)?;
//! let direct = qlap::spectral::spectrum(&c5.blowup(3)?, MatrixKind::SignlessLaplacian)?;
//! assert!(closed.max_abs_difference(&direct)? < 1e-8);
//! # Ok::<(), qlap::Error>(())
//! ```
//!
//! # Conventions
//!
//! Eigenvalues of the adjacency and signless-Laplacian matrices are indexed
//! in descending order; Laplacian eigenvalues μ₁ ≤ μ₂ ≤ … ascend. All
//! spectra are computed by the crate's own Jacobi solver at a fixed internal
//! tolerance; documented accuracies are what the acceptance suite pins.
//! Randomized procedures take explicit seeds and are bit-reproducible;
//! parallel runs merge deterministically.

mod bitset;
mod seeding;

pub mod bipartite;
pub mod bounds;
pub mod clique;
pub mod eigen;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod search;
pub mod spectral;
pub mod srg;

pub use error::{Error, Result};
pub use graph::{Graph, GraphLabel, MAX_ORDER};
pub use spectral::{MatrixKind, Spectrum};
