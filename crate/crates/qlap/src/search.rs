//! Lower-bound hunting: how large can q_min get among K_{r+1}-free graphs?
//!
//! Three tools, in increasing order of reach:
//! - [`exhaustive_search`]: the exact maximum over *all* labeled graphs of
//!   order n ≤ 7, by brute-force enumeration with early clique rejection;
//! - [`local_search`]: seeded hill climbing / simulated annealing over
//!   single-edge toggles (or degree-preserving swaps in regular mode) for
//!   n ≤ 60, fully reproducible from its seed;
//! - [`blowup_padding_bound`]: the classical construction lower bound from
//!   blowing up a good small graph.
//!
//! [`conjecture2_probe`] packages a search run into evidence for or against
//! the open conjecture that the Turán graph maximizes q_min among
//! K_{r+1}-free graphs of its order. Nothing in this module asserts any open
//! conjecture; searches report what they found and how it compares.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::bounds::{self, BoundSource};
use crate::clique;
use crate::error::{Error, Result};
use crate::graph::{edge_slots, from_edge_mask, is_isomorphic_small, Graph};
use crate::graph6;
use crate::seeding;
use crate::spectral;

/// Exhaustive enumeration stops here: 2^21 labeled graphs at n = 7.
pub const MAX_EXHAUSTIVE_ORDER: usize = 7;

/// Local search stops here; each step costs a full n×n eigensolve.
pub const MAX_SEARCH_ORDER: usize = 60;

/// Two objective values within this distance are treated as equal (plateau
/// moves, witness tie-breaks).
const TIE_TOL: f64 = 1e-12;

/// Simulated-annealing schedule: geometric cooling from an initial
/// temperature. Defaults come from pilot runs and are recorded in results
/// via the config, so runs stay reproducible.
#[derive(Clone, Debug, Serialize)]
pub struct Anneal {
    pub initial_temperature: f64,
    pub cooling: f64,
}

impl Default for Anneal {
    fn default() -> Anneal {
        Anneal {
            initial_temperature: 0.5,
            cooling: 0.995,
        }
    }
}

/// Where each restart begins.
#[derive(Clone, Debug, Default)]
pub enum StartPoint {
    /// The Turán graph T_r(n), the conjectured optimum.
    Turan,
    /// A random maximal-ish K_{r+1}-free graph drawn from the restart's RNG.
    #[default]
    Random,
    /// A caller-supplied graph; must have order n and be K_{r+1}-free.
    Given(Graph),
}

/// Full description of a local-search run. Identical configs (including the
/// seed) produce bit-identical results.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub n: usize,
    pub r: usize,
    pub seed: u64,
    pub restarts: usize,
    pub steps_per_restart: usize,
    /// `None` means plain hill climbing with plateau walks.
    pub anneal: Option<Anneal>,
    pub start: StartPoint,
    /// Best-effort regular mode: when the start graph is regular, moves are
    /// degree-preserving two-edge swaps instead of single toggles (a single
    /// toggle always changes two degrees, so it can never keep regularity).
    /// With a non-regular start the flag is ignored.
    pub regular_only: bool,
    /// Run restarts on a thread pool. The merged result is identical to the
    /// single-threaded one: restarts are independently seeded and merged in
    /// restart order.
    pub parallel: bool,
}

impl SearchConfig {
    pub fn new(n: usize, r: usize) -> SearchConfig {
        SearchConfig {
            n,
            r,
            seed: 0,
            restarts: 8,
            steps_per_restart: 1500,
            anneal: None,
            start: StartPoint::Random,
            regular_only: false,
            parallel: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.r < 2 {
            return Err(Error::InvalidParameter(format!(
                "clique parameter r must be at least 2, got {}",
                self.r
            )));
        }
        if self.n <= self.r {
            return Err(Error::InvalidParameter(format!(
                "order must exceed r, got n = {}, r = {}",
                self.n, self.r
            )));
        }
        if self.n > MAX_SEARCH_ORDER {
            return Err(Error::InvalidParameter(format!(
                "order {} exceeds the search cap {MAX_SEARCH_ORDER}",
                self.n
            )));
        }
        if self.restarts == 0 || self.steps_per_restart == 0 {
            return Err(Error::InvalidParameter(
                "restarts and steps_per_restart must be positive".into(),
            ));
        }
        if let Some(a) = &self.anneal {
            if !(a.cooling > 0.0 && a.cooling < 1.0) {
                return Err(Error::InvalidParameter(format!(
                    "cooling factor must lie in (0,1), got {}",
                    a.cooling
                )));
            }
            if !(a.initial_temperature > 0.0 && a.initial_temperature.is_finite()) {
                return Err(Error::InvalidParameter(format!(
                    "initial temperature must be positive and finite, got {}",
                    a.initial_temperature
                )));
            }
        }
        if let StartPoint::Given(g) = &self.start {
            if g.order() != self.n {
                return Err(Error::InvalidParameter(format!(
                    "start graph has order {}, config says {}",
                    g.order(),
                    self.n
                )));
            }
            if !clique::is_k_free(g, self.r + 1) {
                return Err(Error::InvalidParameter(format!(
                    "start graph contains a K_{}",
                    self.r + 1
                )));
            }
        }
        Ok(())
    }
}

/// How the best value found compares with the Turán graph of the same order
/// — the quantity the open conjecture is about (populated for r ≥ 3).
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Conjecture2Comparison {
    pub turan_qmin: f64,
    /// best_qmin − turan_qmin.
    pub difference: f64,
    /// best_qmin ≥ turan_qmin − 1e-9.
    pub reaches_turan: bool,
    /// best_qmin > turan_qmin + 1e-9; a verified witness here would refute
    /// the conjecture.
    pub exceeds_turan: bool,
}

/// Outcome of a search. The witness is re-verified at emission: it must be
/// K_{r+1}-free and reproduce `best_qmin` within 1e-8.
#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub r: usize,
    #[serde(skip)]
    pub best_graph: Graph,
    pub best_graph6: String,
    pub best_qmin: f64,
    /// Number of eigensolves performed.
    pub evaluations: u64,
    /// Tightest unconditional upper bound for this (n, r) and its source.
    pub upper_bound_used: (f64, BoundSource),
    /// upper − best: how much head-room the bound still leaves.
    pub gap_to_upper: f64,
    pub conjecture2: Option<Conjecture2Comparison>,
    /// Seed of the run; `None` for deterministic exhaustive searches.
    pub seed: Option<u64>,
}

impl SearchResult {
    /// One JSON-lines record: `{n, r, seed, steps, best_qmin, graph6,
    /// upper_bound, source, timestamp}`. The timestamp key is omitted when
    /// `timestamp` is `None` so that outputs can be byte-reproducible.
    pub fn json_record(&self, timestamp: Option<u64>) -> String {
        let mut map = serde_json::Map::new();
        map.insert("n".into(), self.n.into());
        map.insert("r".into(), self.r.into());
        map.insert(
            "seed".into(),
            match self.seed {
                Some(s) => s.into(),
                None => serde_json::Value::Null,
            },
        );
        map.insert("steps".into(), self.evaluations.into());
        map.insert("best_qmin".into(), self.best_qmin.into());
        map.insert("graph6".into(), self.best_graph6.clone().into());
        map.insert("upper_bound".into(), self.upper_bound_used.0.into());
        map.insert("source".into(), self.upper_bound_used.1.tag().into());
        if let Some(ts) = timestamp {
            map.insert("timestamp".into(), ts.into());
        }
        serde_json::Value::Object(map).to_string()
    }
}

/// Re-verify a winning graph and assemble the result record.
fn finish_result(
    n: usize,
    r: usize,
    best_graph: Graph,
    best_qmin: f64,
    evaluations: u64,
    seed: Option<u64>,
) -> Result<SearchResult> {
    if !clique::is_k_free(&best_graph, r + 1) {
        return Err(Error::ConstructionCheck(format!(
            "search emitted a graph containing K_{}",
            r + 1
        )));
    }
    let recomputed = spectral::q_min(&best_graph)?;
    if (recomputed - best_qmin).abs() > 1e-8 {
        return Err(Error::ConstructionCheck(format!(
            "search claimed q_min = {best_qmin} but the witness re-evaluates \
             to {recomputed}"
        )));
    }
    let upper_bound_used = bounds::tightest_upper(n, r)?;
    let conjecture2 = if r >= 3 && n >= r {
        let turan_qmin = spectral::q_min(&Graph::turan(n, r)?)?;
        Some(Conjecture2Comparison {
            turan_qmin,
            difference: best_qmin - turan_qmin,
            reaches_turan: best_qmin >= turan_qmin - 1e-9,
            exceeds_turan: best_qmin > turan_qmin + 1e-9,
        })
    } else {
        None
    };
    Ok(SearchResult {
        n,
        r,
        best_graph6: graph6::to_graph6(&best_graph),
        best_graph,
        best_qmin,
        evaluations,
        gap_to_upper: upper_bound_used.0 - best_qmin,
        upper_bound_used,
        conjecture2,
        seed,
    })
}

/// Exact maximum of q_min over all labeled K_{r+1}-free graphs of order n.
///
/// Enumerates every edge subset (2^(n(n−1)/2) graphs), rejecting those with
/// a K_{r+1} before any eigensolve. Deterministic; among maximizers (ties
/// within 1e-12) the witness is the graph with the lexicographically
/// smallest sorted edge list.
pub fn exhaustive_search(n: usize, r: usize) -> Result<SearchResult> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "clique parameter r must be at least 2, got {r}"
        )));
    }
    if n == 0 || n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::SizeLimit {
            what: "exhaustive_search",
            detail: format!(
                "order {n} is outside 1..={MAX_EXHAUSTIVE_ORDER}; use local_search \
                 for larger orders"
            ),
        });
    }
    let slots = edge_slots(n);
    let mut best_qmin = f64::NEG_INFINITY;
    let mut best: Option<(Graph, Vec<(usize, usize)>)> = None;
    let mut evaluations = 0u64;
    for mask in 0..(1u64 << slots.len()) {
        let g = from_edge_mask(n, mask)?;
        if !clique::is_k_free(&g, r + 1) {
            continue;
        }
        let q = spectral::q_min(&g)?;
        evaluations += 1;
        if q > best_qmin + TIE_TOL {
            best_qmin = q;
            let edges = g.edges();
            best = Some((g, edges));
        } else if (q - best_qmin).abs() <= TIE_TOL {
            let edges = g.edges();
            if best.as_ref().is_none_or(|(_, be)| edges < *be) {
                best = Some((g, edges));
            }
        }
    }
    let (best_graph, _) = best.expect("the empty graph is always K-free");
    finish_result(n, r, best_graph, best_qmin, evaluations, None)
}

/// Columnar index of the unordered pair (u, v), u < v, in `edge_slots(n)`.
fn slot_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * n - u * (u + 3) / 2 + v - 1
}

fn push_tabu(tabu: &mut VecDeque<usize>, slot: usize, cap: usize) {
    tabu.push_back(slot);
    while tabu.len() > cap {
        tabu.pop_front();
    }
}

fn start_graph(config: &SearchConfig, rng: &mut ChaCha8Rng) -> Result<Graph> {
    match &config.start {
        StartPoint::Turan => Graph::turan(config.n, config.r),
        StartPoint::Given(g) => Ok(g.clone()),
        StartPoint::Random => {
            // Visit the edge slots in random order and add each with
            // probability 1/2 when doing so stays K_{r+1}-free; yields a
            // scattered, reasonably dense legal start.
            let mut g = Graph::empty(config.n)?;
            let mut order = edge_slots(config.n);
            order.shuffle(rng);
            for (u, v) in order {
                if rng.gen_bool(0.5) && addition_is_free(&g, u, v, config.r) {
                    g.add_edge(u, v);
                }
            }
            Ok(g)
        }
    }
}

/// Adding (u, v) creates a K_{r+1} exactly when the common neighborhood of
/// u and v already contains a K_{r−1}.
fn addition_is_free(g: &Graph, u: usize, v: usize, r: usize) -> bool {
    let common = VertexSet::all(g.order())
        .intersection(g.row(u))
        .intersection(g.row(v));
    !clique::clique_in_subset_at_least(g, &common, r - 1)
}

struct RestartOutcome {
    qmin: f64,
    graph6: String,
    graph: Graph,
    evaluations: u64,
}

fn run_restart(config: &SearchConfig, index: u64) -> Result<RestartOutcome> {
    let n = config.n;
    let r = config.r;
    let mut rng = seeding::rng_for(config.seed, index);
    let slots = edge_slots(n);

    let mut current = start_graph(config, &mut rng)?;
    let mut cur_q = spectral::q_min(&current)?;
    let mut evaluations = 1u64;
    let mut best_q = cur_q;
    let mut best_g = current.clone();

    let use_swaps = config.regular_only && current.regular_degree().is_some();
    let tabu_cap = 2 * n;
    let plateau_cap = 2 * n;
    let mut tabu: VecDeque<usize> = VecDeque::new();
    let mut plateau = 0usize;
    let mut temperature = config.anneal.as_ref().map(|a| a.initial_temperature);

    for _ in 0..config.steps_per_restart {
        let proposal = if use_swaps {
            propose_swap(&mut current, r, &slots, &tabu, &mut rng)
        } else {
            propose_toggle(&mut current, r, &slots, &tabu, &mut rng)
        };
        if let Some(touched) = proposal {
            // The proposal is already applied to `current`; decide.
            let q = spectral::q_min(&current)?;
            evaluations += 1;
            let delta = q - cur_q;
            let accept = if delta > TIE_TOL {
                true
            } else if delta.abs() <= TIE_TOL {
                plateau < plateau_cap
            } else if let Some(t) = temperature {
                rng.gen::<f64>() < (delta / t).exp()
            } else {
                false
            };
            if accept {
                plateau = if delta.abs() <= TIE_TOL { plateau + 1 } else { 0 };
                cur_q = q;
                for slot in &touched {
                    push_tabu(&mut tabu, *slot, tabu_cap);
                }
                if cur_q > best_q {
                    best_q = cur_q;
                    best_g = current.clone();
                }
            } else {
                revert(&mut current, &slots, &touched);
            }
        }
        if let Some(t) = temperature.as_mut() {
            *t *= config.anneal.as_ref().expect("temperature implies anneal").cooling;
        }
    }

    Ok(RestartOutcome {
        qmin: best_q,
        graph6: graph6::to_graph6(&best_g),
        graph: best_g,
        evaluations,
    })
}

/// Toggle one random non-tabu slot if legal; returns the touched slots with
/// the move already applied, or `None` if the step proposes nothing.
fn propose_toggle(
    current: &mut Graph,
    r: usize,
    slots: &[(usize, usize)],
    tabu: &VecDeque<usize>,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<usize>> {
    let slot = rng.gen_range(0..slots.len());
    if tabu.contains(&slot) {
        return None;
    }
    let (u, v) = slots[slot];
    if !current.has_edge(u, v) && !addition_is_free(current, u, v, r) {
        return None;
    }
    current.toggle_edge(u, v);
    Some(vec![slot])
}

/// Degree-preserving move: remove edges (a,b), (c,d) and add (a,d), (b,c).
/// Applied only when the four endpoints are distinct, the new pairs are
/// non-edges, nothing involved is tabu, and the result stays K_{r+1}-free.
fn propose_swap(
    current: &mut Graph,
    r: usize,
    _slots: &[(usize, usize)],
    tabu: &VecDeque<usize>,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<usize>> {
    let n = current.order();
    let edges = current.edges();
    if edges.len() < 2 {
        return None;
    }
    let i = rng.gen_range(0..edges.len());
    let j = rng.gen_range(0..edges.len());
    if i == j {
        return None;
    }
    let (a, b) = edges[i];
    let (mut c, mut d) = edges[j];
    if rng.gen_bool(0.5) {
        std::mem::swap(&mut c, &mut d);
    }
    if a == c || a == d || b == c || b == d {
        return None;
    }
    if current.has_edge(a, d) || current.has_edge(b, c) {
        return None;
    }
    let touched = [
        slot_index(n, a.min(b), a.max(b)),
        slot_index(n, c.min(d), c.max(d)),
        slot_index(n, a.min(d), a.max(d)),
        slot_index(n, b.min(c), b.max(c)),
    ];
    if touched.iter().any(|s| tabu.contains(s)) {
        return None;
    }
    current.remove_edge(a, b);
    current.remove_edge(c, d);
    current.add_edge(a, d);
    current.add_edge(b, c);
    // The two additions interact, so check the whole graph rather than the
    // incremental common-neighborhood test.
    if !clique::is_k_free(current, r + 1) {
        current.remove_edge(a, d);
        current.remove_edge(b, c);
        current.add_edge(a, b);
        current.add_edge(c, d);
        return None;
    }
    Some(touched.to_vec())
}

/// Undo an applied move by toggling its touched slots back.
fn revert(current: &mut Graph, slots: &[(usize, usize)], touched: &[usize]) {
    for &slot in touched {
        let (u, v) = slots[slot];
        current.toggle_edge(u, v);
    }
}

/// Seeded stochastic search for K_{r+1}-free graphs with large q_min.
///
/// Hill climbing over legal single-edge toggles, accepting equal-value moves
/// (plateau walks capped at 2n consecutive steps, last 2n touched slots
/// tabu), optionally with simulated annealing for downhill moves. Restart i
/// draws its own RNG from (seed, i); results merge by maximum value with
/// ties going to the lexicographically smallest graph6 witness, so single-
/// and multi-threaded runs agree exactly. The result is never below the
/// start graph's q_min.
pub fn local_search(config: &SearchConfig) -> Result<SearchResult> {
    config.validate()?;
    let outcomes: Vec<RestartOutcome> = if config.parallel {
        use rayon::prelude::*;
        (0..config.restarts)
            .into_par_iter()
            .map(|i| run_restart(config, i as u64))
            .collect::<Result<Vec<_>>>()?
    } else {
        (0..config.restarts)
            .map(|i| run_restart(config, i as u64))
            .collect::<Result<Vec<_>>>()?
    };

    let mut evaluations = 0u64;
    let mut best: Option<RestartOutcome> = None;
    for outcome in outcomes {
        evaluations += outcome.evaluations;
        best = Some(match best {
            None => outcome,
            Some(cur) => {
                let wins = outcome.qmin > cur.qmin + TIE_TOL
                    || ((outcome.qmin - cur.qmin).abs() <= TIE_TOL
                        && outcome.graph6 < cur.graph6);
                if wins {
                    outcome
                } else {
                    cur
                }
            }
        });
    }
    let b = best.expect("restarts >= 1 is validated");
    finish_result(config.n, config.r, b.graph, b.qmin, evaluations, Some(config.seed))
}

/// Classical construction lower bound: blow up a good small graph H by
/// t = ⌊n/v(H)⌋ and pad to order n with isolated vertices.
///
/// Returns (t·q_min(H), padded witness). The witness itself has q_min = 0
/// whenever the padding is nonzero — isolated vertices are bipartite
/// components — so the value reports the q_min of the unpadded blowup, which
/// is what the construction contributes as a lower-bound term; callers that
/// need a graph attaining the value should use the unpadded blowup.
pub fn blowup_padding_bound(h: &Graph, n: usize) -> Result<(f64, Graph)> {
    let v = h.order();
    if n < v {
        return Err(Error::InvalidParameter(format!(
            "target order {n} is below the base graph's order {v}"
        )));
    }
    let t = n / v;
    let value = t as f64 * spectral::q_min(h)?;
    let witness = h.blowup(t)?.add_isolated(n - t * v)?;
    Ok((value, witness))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProbeMethod {
    Exhaustive,
    LocalSearch,
}

/// Evidence report on the conjecture that T_r(n) uniquely maximizes q_min
/// among K_{r+1}-free graphs of order n, plus the conjectured limit ratio
/// 1 − 2/r. Purely observational: no field ever asserts the conjecture.
#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub n: usize,
    pub r: usize,
    pub method: ProbeMethod,
    pub turan_qmin: f64,
    pub best_qmin: f64,
    pub best_graph6: String,
    /// best_qmin − turan_qmin.
    pub difference: f64,
    pub reaches_turan: bool,
    pub exceeds_turan: bool,
    /// Whether a graph *not* isomorphic to T_r(n) attains q_min ≥
    /// turan_qmin − 1e-9. Exact (via isomorphism check) in the exhaustive
    /// branch; in the local-search branch a cheap certificate (edge count +
    /// degree sequence) can prove `Some(true)`, while a certificate match
    /// leaves the classification undetermined (`None`).
    pub non_turan_attainer: Option<bool>,
    /// The conjectured limit ratio 1 − 2/r.
    pub conjectured_c_r: f64,
    /// best_qmin / n, for comparison with the conjectured ratio.
    pub best_ratio: f64,
    pub upper_bound: f64,
    pub seed: Option<u64>,
    pub evaluations: u64,
}

/// Probe the Turán-optimality conjecture at (n, r): exhaustively for n ≤ 7,
/// otherwise with a seeded local search drawing its budget (seed, restarts,
/// steps, annealing, start) from `budget` (whose n and r are overridden).
pub fn conjecture2_probe(n: usize, r: usize, budget: &SearchConfig) -> Result<ProbeReport> {
    if r < 3 {
        return Err(Error::InvalidParameter(format!(
            "the Turán-optimality probe needs r >= 3, got {r}"
        )));
    }
    if n <= r {
        return Err(Error::InvalidParameter(format!(
            "order must exceed r, got n = {n}, r = {r}"
        )));
    }
    let turan = Graph::turan(n, r)?;
    let turan_qmin = spectral::q_min(&turan)?;

    let (result, method, non_turan_attainer) = if n <= MAX_EXHAUSTIVE_ORDER {
        let result = exhaustive_search(n, r)?;
        // Second pass: does any graph not isomorphic to T_r(n) reach the
        // Turán value? (The first pass cannot answer this, because its
        // witness tie-break prefers small edge lists.)
        let mut found = false;
        for mask in 0..(1u64 << edge_slots(n).len()) {
            let g = from_edge_mask(n, mask)?;
            if !clique::is_k_free(&g, r + 1) {
                continue;
            }
            if spectral::q_min(&g)? >= turan_qmin - 1e-9 && !is_isomorphic_small(&g, &turan)? {
                found = true;
                break;
            }
        }
        (result, ProbeMethod::Exhaustive, Some(found))
    } else {
        let mut cfg = budget.clone();
        cfg.n = n;
        cfg.r = r;
        let result = local_search(&cfg)?;
        let attainer = if result.best_qmin < turan_qmin - 1e-9 {
            Some(false)
        } else {
            let mut got = result.best_graph.degrees();
            got.sort_unstable();
            let mut want = turan.degrees();
            want.sort_unstable();
            if result.best_graph.edge_count() != turan.edge_count() || got != want {
                Some(true)
            } else {
                // Certificate matches T_r(n); isomorphism is not decided
                // at this scale.
                None
            }
        };
        (result, ProbeMethod::LocalSearch, attainer)
    };

    Ok(ProbeReport {
        n,
        r,
        method,
        turan_qmin,
        best_qmin: result.best_qmin,
        best_graph6: result.best_graph6.clone(),
        difference: result.best_qmin - turan_qmin,
        reaches_turan: result.best_qmin >= turan_qmin - 1e-9,
        exceeds_turan: result.best_qmin > turan_qmin + 1e-9,
        non_turan_attainer,
        conjectured_c_r: 1.0 - 2.0 / r as f64,
        best_ratio: result.best_qmin / n as f64,
        upper_bound: result.upper_bound_used.0,
        seed: result.seed,
        evaluations: result.evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_small_cases() {
        // Every triangle-free graph on 4 vertices is bipartite.
        let r = exhaustive_search(4, 2).unwrap();
        assert!(r.best_qmin.abs() < 1e-9);
        // K_3 is the best K_4-free graph on 3 vertices.
        let r = exhaustive_search(3, 3).unwrap();
        assert!((r.best_qmin - 1.0).abs() < 1e-8);
        assert_eq!(r.best_graph.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert!(r.conjecture2.unwrap().reaches_turan);
    }

    #[test]
    fn exhaustive_finds_the_five_cycle() {
        let r = exhaustive_search(5, 2).unwrap();
        let golden = (3.0 - 5.0_f64.sqrt()) / 2.0;
        assert!((r.best_qmin - golden).abs() < 1e-8, "got {}", r.best_qmin);
        assert!(is_isomorphic_small(&r.best_graph, &Graph::cycle(5).unwrap()).unwrap());
        assert!(r.best_qmin <= r.upper_bound_used.0 + 1e-9);
    }

    #[test]
    fn exhaustive_rejects_large_orders() {
        assert!(matches!(
            exhaustive_search(8, 2),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn slot_index_matches_edge_slots() {
        for n in [2usize, 3, 5, 8] {
            for (idx, (u, v)) in edge_slots(n).into_iter().enumerate() {
                assert_eq!(slot_index(n, u, v), idx);
            }
        }
    }

    #[test]
    fn local_search_is_reproducible_and_bounded_by_start() {
        let mut cfg = SearchConfig::new(6, 3);
        cfg.seed = 11;
        cfg.restarts = 3;
        cfg.steps_per_restart = 300;
        cfg.start = StartPoint::Turan;
        let a = local_search(&cfg).unwrap();
        let b = local_search(&cfg).unwrap();
        assert_eq!(a.best_graph6, b.best_graph6);
        assert_eq!(a.best_qmin.to_bits(), b.best_qmin.to_bits());
        assert_eq!(a.evaluations, b.evaluations);
        // Never below the start value q_min(T_3(6)) = 2.
        assert!(a.best_qmin >= 2.0 - 1e-9);
        assert_eq!(a.seed, Some(11));
    }

    #[test]
    fn parallel_merge_matches_serial() {
        let mut cfg = SearchConfig::new(6, 2);
        cfg.seed = 5;
        cfg.restarts = 4;
        cfg.steps_per_restart = 200;
        let serial = local_search(&cfg).unwrap();
        cfg.parallel = true;
        let parallel = local_search(&cfg).unwrap();
        assert_eq!(serial.best_graph6, parallel.best_graph6);
        assert_eq!(serial.best_qmin.to_bits(), parallel.best_qmin.to_bits());
        assert_eq!(serial.evaluations, parallel.evaluations);
    }

    #[test]
    fn local_search_matches_exhaustive_on_five_vertices() {
        let oracle = exhaustive_search(5, 2).unwrap();
        let mut cfg = SearchConfig::new(5, 2);
        cfg.seed = 7;
        let found = local_search(&cfg).unwrap();
        assert!(
            (found.best_qmin - oracle.best_qmin).abs() <= 1e-8,
            "search {} vs oracle {}",
            found.best_qmin,
            oracle.best_qmin
        );
    }

    #[test]
    fn annealing_stays_reproducible() {
        let mut cfg = SearchConfig::new(7, 3);
        cfg.seed = 3;
        cfg.restarts = 2;
        cfg.steps_per_restart = 250;
        cfg.anneal = Some(Anneal::default());
        let a = local_search(&cfg).unwrap();
        let b = local_search(&cfg).unwrap();
        assert_eq!(a.best_graph6, b.best_graph6);
        assert_eq!(a.evaluations, b.evaluations);
    }

    #[test]
    fn invalid_configs_are_rejected() {
        assert!(SearchConfig::new(5, 1).validate().is_err());
        assert!(SearchConfig::new(4, 4).validate().is_err());
        assert!(SearchConfig::new(61, 2).validate().is_err());
        let mut cfg = SearchConfig::new(6, 2);
        cfg.restarts = 0;
        assert!(cfg.validate().is_err());
        let mut cfg = SearchConfig::new(6, 2);
        cfg.anneal = Some(Anneal {
            initial_temperature: 0.5,
            cooling: 1.0,
        });
        assert!(cfg.validate().is_err());
        let mut cfg = SearchConfig::new(6, 2);
        cfg.start = StartPoint::Given(Graph::cycle(5).unwrap());
        assert!(cfg.validate().is_err());
        let mut cfg = SearchConfig::new(6, 2);
        cfg.start = StartPoint::Given(Graph::complete(6).unwrap());
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn regular_mode_preserves_the_degree_sequence() {
        let mut cfg = SearchConfig::new(10, 2);
        cfg.seed = 2;
        cfg.restarts = 2;
        cfg.steps_per_restart = 150;
        cfg.start = StartPoint::Given(Graph::petersen());
        cfg.regular_only = true;
        let r = local_search(&cfg).unwrap();
        assert_eq!(r.best_graph.regular_degree(), Some(3));
        // q_min(Petersen) = 1; the result can only improve on its start.
        assert!(r.best_qmin >= 1.0 - 1e-9);
    }

    #[test]
    fn padding_bound_values_and_witnesses() {
        let (value, witness) = blowup_padding_bound(&Graph::complete(3).unwrap(), 7).unwrap();
        assert!((value - 2.0).abs() < 1e-8);
        assert_eq!(witness.order(), 7);
        assert_eq!(witness.edge_count(), 12); // K_3 doubled: 3 * 2 * 2
        assert!(clique::is_k_free(&witness, 4));
        // Padding present: the witness itself has q_min 0.
        assert!(spectral::q_min(&witness).unwrap().abs() < 1e-9);

        // No padding when v(H) | n: witness is the pure blowup.
        let c5 = Graph::cycle(5).unwrap();
        let (value, witness) = blowup_padding_bound(&c5, 5).unwrap();
        assert!((value - spectral::q_min(&c5).unwrap()).abs() < 1e-12);
        assert_eq!(witness, c5);

        assert!(matches!(
            blowup_padding_bound(&Graph::petersen(), 9),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn exhaustive_frozen_optima_on_six_vertices() {
        // Triangle-free on 6 vertices: the best is the theta graph made of
        // two endpoints joined by paths of lengths 2, 2 and 3 — not C_5 plus
        // anything. In particular f_2(6) ≈ 0.2907 < 0.3820 ≈ f_2(5): the
        // maximum is *not* monotone in the order.
        let r = exhaustive_search(6, 2).unwrap();
        assert!((r.best_qmin - 0.2907246406).abs() < 1e-8, "got {}", r.best_qmin);
        assert_eq!(r.best_graph6, "EsWW");

        // K_5-free on 6 vertices: the Turán value 2 is attained, but the
        // lexicographically first attainer is a 12-edge non-Turán graph
        // (T_4(6) has 13 edges), an exact tie at q_min = 2.
        let r = exhaustive_search(6, 4).unwrap();
        assert!((r.best_qmin - 2.0).abs() < 1e-8);
        assert_eq!(r.best_graph6, "E~zO");
        assert!(!is_isomorphic_small(&r.best_graph, &Graph::turan(6, 4).unwrap()).unwrap());
    }

    #[test]
    fn seven_vertex_k4_free_record_is_the_pentagon_join() {
        // The best K_4-free graph on 7 vertices is C_5 ∨ 2K_1 (a pentagon
        // fully joined to two nonadjacent vertices), whose equitable
        // partition {cycle, apexes} gives the quotient [[6, 2], [5, 5]] and
        // hence q_min = (11 − √41)/2 ≈ 2.2984. This strictly beats the
        // Turán graph: q_min(T_3(7)) = (11 − √57)/2 ≈ 1.7251.
        let r = exhaustive_search(7, 3).unwrap();
        let golden = (11.0 - 41.0_f64.sqrt()) / 2.0;
        assert!((r.best_qmin - golden).abs() < 1e-8, "got {}", r.best_qmin);
        assert_eq!(r.best_graph6, "F}iZw");

        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for apex in [5, 6] {
            edges.extend((0..5).map(|i| (i, apex)));
        }
        let join = Graph::from_edges(7, &edges).unwrap();
        assert!(is_isomorphic_small(&r.best_graph, &join).unwrap());

        let c2 = r.conjecture2.unwrap();
        assert!(c2.exceeds_turan);
        assert!((c2.difference - (57.0_f64.sqrt() - 41.0_f64.sqrt()) / 2.0).abs() < 1e-8);
    }

    #[test]
    fn padding_value_is_only_a_floor_when_the_order_divides() {
        // With zero padding the witness is the blowup itself and the value
        // is a true order-n floor, so the exhaustive maximum dominates it.
        let c5 = Graph::cycle(5).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let (v, _) = blowup_padding_bound(&c5, 5).unwrap();
        assert!(exhaustive_search(5, 2).unwrap().best_qmin >= v - 1e-9);
        let (v, _) = blowup_padding_bound(&k3, 6).unwrap();
        assert!(exhaustive_search(6, 3).unwrap().best_qmin >= v - 1e-9);

        // With nonzero padding it is not: the value ignores the isolated
        // vertices (whose presence forces q_min = 0), and the order-n
        // maximum can sit strictly below it. Both facts are pinned here.
        let (v, witness) = blowup_padding_bound(&c5, 6).unwrap();
        assert!((v - (3.0 - 5.0_f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!(spectral::q_min(&witness).unwrap().abs() < 1e-9);
        assert!(exhaustive_search(6, 2).unwrap().best_qmin < v - 0.09);
        let (v, _) = blowup_padding_bound(&c5, 7).unwrap();
        assert!(exhaustive_search(7, 2).unwrap().best_qmin < v - 0.02);
    }

    #[test]
    fn probe_on_six_vertices_is_exact() {
        let budget = SearchConfig::new(6, 3);
        let rep = conjecture2_probe(6, 3, &budget).unwrap();
        assert_eq!(rep.method, ProbeMethod::Exhaustive);
        assert!((rep.turan_qmin - 2.0).abs() < 1e-8);
        assert!(rep.reaches_turan);
        assert!(!rep.exceeds_turan);
        // The octahedron is the unique attainer on 6 vertices.
        assert_eq!(rep.non_turan_attainer, Some(false));
        assert!((rep.conjectured_c_r - 1.0 / 3.0).abs() < 1e-12);
        assert!(rep.best_qmin <= rep.upper_bound + 1e-9);
    }

    #[test]
    fn probe_on_seven_vertices_detects_the_non_turan_record() {
        let budget = SearchConfig::new(7, 3);
        let rep = conjecture2_probe(7, 3, &budget).unwrap();
        assert_eq!(rep.method, ProbeMethod::Exhaustive);
        assert!(rep.exceeds_turan);
        assert_eq!(rep.non_turan_attainer, Some(true));
        assert_eq!(rep.best_graph6, "F}iZw");
    }

    #[test]
    fn probe_rejects_small_r() {
        let budget = SearchConfig::new(6, 3);
        assert!(matches!(
            conjecture2_probe(6, 2, &budget),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            conjecture2_probe(3, 3, &budget),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn json_record_shape() {
        let r = exhaustive_search(4, 2).unwrap();
        let line = r.json_record(Some(123));
        let v: serde_json::Value = serde_json::from_str(&line).unwrap();
        for key in [
            "n",
            "r",
            "seed",
            "steps",
            "best_qmin",
            "graph6",
            "upper_bound",
            "source",
            "timestamp",
        ] {
            assert!(v.get(key).is_some(), "missing key {key}");
        }
        assert!(v["seed"].is_null());
        assert_eq!(v["timestamp"], 123);
        let bare = r.json_record(None);
        let v: serde_json::Value = serde_json::from_str(&bare).unwrap();
        assert!(v.get("timestamp").is_none());
    }
}
