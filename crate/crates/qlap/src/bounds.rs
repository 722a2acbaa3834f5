//! Closed-form bounds on the largest possible q_min of a K_{r+1}-free graph,
//! assembled into consistency-checked reports.
//!
//! Throughout, `f_r(n)` denotes the maximum of q_min over all K_{r+1}-free
//! graphs on n vertices, and `c_r` the limiting ratio f_r(n)/n. Neither is
//! known exactly for any r; this module carries the best published window:
//! lower bounds from explicit constructions (Turán graphs, the Higman–Sims
//! graph and its blowups) and upper bounds from max-cut and chromatic
//! arguments. Reports never assert more than the formulas give.

use serde::Serialize;

use crate::clique;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral;

/// Slack used when comparing computed eigenvalues against closed-form bounds.
pub const BOUND_TOL: f64 = 1e-9;

/// Provenance tag for a bound value, named after the classical result the
/// formula instantiates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundSource {
    /// Lower bound (r−2)⌊n/r⌋ from Turán graphs (blowups of K_r).
    Turan,
    /// Lower bound 14⌊n/100⌋ for triangle-free graphs from blowups of the
    /// Higman–Sims graph.
    HigmanSims,
    /// Upper bound (1 − 3/(3r−1))n for K_{r+1}-free graphs, r ≥ 3, via the
    /// Andrásfai–Erdős–Sós chromatic threshold.
    AndrasfaiErdosSos,
    /// Upper bound 2n/9 for triangle-free graphs, from the
    /// Erdős–Faudree–Pach–Spencer max-cut theorem.
    Efps,
    /// Upper bound 4n/9 for K_4-free graphs, from Sudakov's max-cut theorem.
    Sudakov,
    /// Conditional upper bound 0.16n for triangle-free graphs; holds only if
    /// Erdős's bipartization conjecture (n²/25 edge deletions suffice) is
    /// true. Never used in assertions.
    ErdosConditional,
    /// Upper bound (5 − (4/r)(√(r²−r)+1))n for regular K_{r+1}-free graphs
    /// (Brandt); at r = 2 this is (3−2√2)n ≈ 0.1716n.
    Brandt,
    /// Per-graph bound q_min ≤ δ (minimum degree), strict on connected
    /// graphs with at least one edge.
    MinDegree,
    /// Per-graph bound q_min ≤ ((r−2)/(r−1))·2m/n for r-partite graphs.
    RPartite,
}

impl BoundSource {
    pub fn tag(&self) -> &'static str {
        match self {
            BoundSource::Turan => "turan",
            BoundSource::HigmanSims => "higman-sims",
            BoundSource::AndrasfaiErdosSos => "andrasfai-erdos-sos",
            BoundSource::Efps => "efps",
            BoundSource::Sudakov => "sudakov",
            BoundSource::ErdosConditional => "erdos-conditional",
            BoundSource::Brandt => "brandt",
            BoundSource::MinDegree => "min-degree",
            BoundSource::RPartite => "r-partite",
        }
    }
}

impl std::fmt::Display for BoundSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// One bound value with its provenance and applicability qualifiers.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct BoundEntry {
    pub value: f64,
    pub source: BoundSource,
    /// True when the bound depends on an unproven conjecture.
    pub conditional: bool,
    /// True when the bound applies only to regular graphs.
    pub regular_only: bool,
}

impl BoundEntry {
    fn new(value: f64, source: BoundSource) -> BoundEntry {
        BoundEntry {
            value,
            source,
            conditional: false,
            regular_only: false,
        }
    }

    fn conditional(value: f64, source: BoundSource) -> BoundEntry {
        BoundEntry {
            value,
            source,
            conditional: true,
            regular_only: false,
        }
    }

    fn regular_only(value: f64, source: BoundSource) -> BoundEntry {
        BoundEntry {
            value,
            source,
            conditional: false,
            regular_only: true,
        }
    }

    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}",
            self.value, self.source, self.conditional, self.regular_only
        )
    }
}

/// The known window for the limit ratio c_r = lim f_r(n)/n, with explicit
/// endpoint inclusivity (the triangle-free case is closed below and open
/// above; the r ≥ 3 cases are the reverse).
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CrInterval {
    pub low: f64,
    pub low_inclusive: bool,
    pub high: f64,
    pub high_inclusive: bool,
}

impl std::fmt::Display for CrInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.low_inclusive { '[' } else { '(' },
            self.low,
            self.high,
            if self.high_inclusive { ']' } else { ')' },
        )
    }
}

/// All applicable closed-form bounds for K_{r+1}-free graphs on n vertices.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub r: usize,
    pub lower_bounds: Vec<BoundEntry>,
    pub upper_bounds: Vec<BoundEntry>,
    pub regular_only_uppers: Vec<BoundEntry>,
    pub c_r_interval: CrInterval,
}

impl BoundReport {
    /// Best (largest) lower bound on f_r(n).
    pub fn max_lower(&self) -> f64 {
        self.lower_bounds
            .iter()
            .map(|e| e.value)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Tightest upper bound that does not rest on a conjecture and applies
    /// to all (not just regular) graphs.
    pub fn min_unconditional_upper(&self) -> f64 {
        self.upper_bounds
            .iter()
            .filter(|e| !e.conditional)
            .map(|e| e.value)
            .fold(f64::INFINITY, f64::min)
    }

    pub const TSV_HEADER: &'static str = "kind\tvalue\tsource\tconditional\tregular_only";

    /// One row per bound entry, lower bounds first.
    pub fn tsv(&self) -> String {
        let mut out = String::new();
        out.push_str(Self::TSV_HEADER);
        for e in &self.lower_bounds {
            out.push_str(&format!("\nlower\t{}", e.tsv_row()));
        }
        for e in &self.upper_bounds {
            out.push_str(&format!("\nupper\t{}", e.tsv_row()));
        }
        for e in &self.regular_only_uppers {
            out.push_str(&format!("\nupper\t{}", e.tsv_row()));
        }
        out
    }
}

/// Value of the Brandt bound for regular K_{r+1}-free graphs on n vertices.
fn brandt_value(n: usize, r: usize) -> f64 {
    let r = r as f64;
    (5.0 - (4.0 / r) * (((r * r - r).sqrt()) + 1.0)) * n as f64
}

/// Assemble every known closed-form bound on f_r(n).
///
/// Requires r ≥ 2 (r = 2 means triangle-free) and n > r (below that every
/// graph on n vertices is K_{r+1}-free for trivial reasons and the reports
/// would be vacuous).
pub fn qmin_bounds(n: usize, r: usize) -> Result<BoundReport> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "clique parameter r must be at least 2, got {r}"
        )));
    }
    if n <= r {
        return Err(Error::InvalidParameter(format!(
            "order n must exceed r, got n = {n}, r = {r}"
        )));
    }
    let nf = n as f64;
    let rf = r as f64;

    let (lower_bounds, upper_bounds, c_r_interval) = if r == 2 {
        let lower = vec![BoundEntry::new(
            14.0 * (n / 100) as f64,
            BoundSource::HigmanSims,
        )];
        let upper = vec![
            BoundEntry::new(2.0 * nf / 9.0, BoundSource::Efps),
            BoundEntry::conditional(0.16 * nf, BoundSource::ErdosConditional),
        ];
        let interval = CrInterval {
            low: 0.14,
            low_inclusive: true,
            high: 2.0 / 9.0,
            high_inclusive: false,
        };
        (lower, upper, interval)
    } else {
        let lower = vec![BoundEntry::new(
            (r as f64 - 2.0) * (n / r) as f64,
            BoundSource::Turan,
        )];
        let mut upper = vec![BoundEntry::new(
            (1.0 - 3.0 / (3.0 * rf - 1.0)) * nf,
            BoundSource::AndrasfaiErdosSos,
        )];
        if r == 3 {
            upper.push(BoundEntry::new(4.0 * nf / 9.0, BoundSource::Sudakov));
        }
        let interval = CrInterval {
            low: 1.0 - 2.0 / rf,
            low_inclusive: false,
            high: if r == 3 {
                4.0 / 9.0
            } else {
                1.0 - 3.0 / (3.0 * rf - 1.0)
            },
            high_inclusive: true,
        };
        (lower, upper, interval)
    };

    let report = BoundReport {
        n,
        r,
        lower_bounds,
        upper_bounds,
        regular_only_uppers: vec![BoundEntry::regular_only(
            brandt_value(n, r),
            BoundSource::Brandt,
        )],
        c_r_interval,
    };
    debug_assert!(report.max_lower() <= report.min_unconditional_upper() + BOUND_TOL);
    Ok(report)
}

/// The tightest unconditional upper bound applicable to every K_{r+1}-free
/// graph on n vertices, with its source. Unlike [`qmin_bounds`] this places
/// no restriction on n, so it can cap search outputs even when n ≤ r.
pub fn tightest_upper(n: usize, r: usize) -> Result<(f64, BoundSource)> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "clique parameter r must be at least 2, got {r}"
        )));
    }
    let nf = n as f64;
    Ok(match r {
        2 => (2.0 * nf / 9.0, BoundSource::Efps),
        3 => (4.0 * nf / 9.0, BoundSource::Sudakov),
        _ => (
            (1.0 - 3.0 / (3.0 * r as f64 - 1.0)) * nf,
            BoundSource::AndrasfaiErdosSos,
        ),
    })
}

/// Exact r-colorability check used to guard [`rpartite_qmin_upper`] for
/// small r: bipartiteness for r = 2, backtracking for r = 3.
fn is_r_colorable_small(g: &Graph, r: usize) -> bool {
    match r {
        2 => g.is_bipartite(),
        3 => three_colorable(g),
        _ => unreachable!("only r <= 3 is checked exactly"),
    }
}

fn three_colorable(g: &Graph) -> bool {
    fn assign(g: &Graph, colors: &mut [u8], v: usize, used: u8) -> bool {
        if v == g.order() {
            return true;
        }
        // Symmetry pruning: allow at most one fresh color per step.
        let limit = (used + 1).min(3);
        'candidate: for c in 1..=limit {
            for u in g.neighbors(v) {
                if u < v && colors[u] == c {
                    continue 'candidate;
                }
            }
            colors[v] = c;
            if assign(g, colors, v + 1, used.max(c)) {
                return true;
            }
            colors[v] = 0;
        }
        false
    }
    let mut colors = vec![0u8; g.order()];
    assign(g, &mut colors, 0, 0)
}

/// Upper bound q_min(G) ≤ ((r−2)/(r−1))·2m/n, valid for every r-partite G.
///
/// r-partiteness is the caller's responsibility; it is verified exactly for
/// r ≤ 3 (bipartiteness / backtracking 3-coloring) and trusted for r ≥ 4.
pub fn rpartite_qmin_upper(g: &Graph, r: usize) -> Result<f64> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "part count r must be at least 2, got {r}"
        )));
    }
    if r <= 3 && !is_r_colorable_small(g, r) {
        return Err(Error::Precondition(format!(
            "graph is not {r}-partite, so the {r}-partite bound does not apply"
        )));
    }
    let rf = r as f64;
    Ok((rf - 2.0) / (rf - 1.0) * 2.0 * g.edge_count() as f64 / g.order() as f64)
}

/// Check one K_{r+1}-free graph against every applicable closed-form bound.
///
/// Returns the list of violated inequalities (each with its source tag and
/// the numbers involved). The list is empty on every valid input unless the
/// implementation — or one of the published theorems — is wrong, so a
/// non-empty result must be surfaced loudly, never swallowed.
///
/// Applied bounds: the triangle-free (r = 2), K_4-free (r = 3), and general
/// r ≥ 3 order bounds; the Brandt bound when the graph is regular; and the
/// minimum-degree bound q_min ≤ δ, in its strict form on connected graphs
/// with at least one edge. Conditional bounds are never checked.
pub fn check_graph_against_bounds(g: &Graph, r: usize) -> Result<Vec<String>> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "clique parameter r must be at least 2, got {r}"
        )));
    }
    let omega = clique::clique_number(g);
    if omega > r {
        return Err(Error::Precondition(format!(
            "graph contains K_{omega}, so it is not K_{}-free",
            r + 1
        )));
    }

    let n = g.order();
    let nf = n as f64;
    let qmin = spectral::q_min(g)?;
    let mut violations = Vec::new();
    let mut check_upper = |value: f64, source: BoundSource| {
        if qmin > value + BOUND_TOL {
            violations.push(format!(
                "{source}: q_min = {qmin} exceeds bound {value} (n = {n}, r = {r})"
            ));
        }
    };

    if r == 2 {
        check_upper(2.0 * nf / 9.0, BoundSource::Efps);
    } else {
        check_upper(
            (1.0 - 3.0 / (3.0 * r as f64 - 1.0)) * nf,
            BoundSource::AndrasfaiErdosSos,
        );
        if r == 3 {
            check_upper(4.0 * nf / 9.0, BoundSource::Sudakov);
        }
    }
    if g.regular_degree().is_some() {
        check_upper(brandt_value(n, r), BoundSource::Brandt);
    }

    let delta = g.min_degree() as f64;
    if qmin > delta + BOUND_TOL {
        violations.push(format!(
            "{}: q_min = {qmin} exceeds minimum degree {delta}",
            BoundSource::MinDegree
        ));
    } else if g.is_connected() && n >= 2 && qmin > delta - BOUND_TOL {
        violations.push(format!(
            "{}: q_min = {qmin} is not strictly below minimum degree {delta} \
             on a connected graph",
            BoundSource::MinDegree
        ));
    }

    Ok(violations)
}

/// The Turán-graph sandwich around q_min(T_r(n)), together with the
/// second-smallest Laplacian eigenvalue identity μ_2(T_r(n)) = n − ⌈n/r⌉.
///
/// `lower` carries the classical closed-form benchmark (r−2)⌊n/r⌋. Writing
/// n = rq + s: for s = 0 the benchmark is attained exactly (the lower
/// comparison must be non-strict), and for s ≥ 2 it holds with equality at
/// s = 2; but for s = 1 the true q_min falls *below* the benchmark by up to
/// 1 − 2/r — with one oversized part the part-quotient matrix contributes
/// the eigenvalue ((3r−4)q + 1 − √((rq)² + 2(3r−4)q + 1))/2 < (r−2)q.
/// (Smallest counterexample: T_3(7) = K_{3,2,2} has q_min = (11−√57)/2 ≈
/// 1.725 < 2.) `lower_holds` records the comparison instead of asserting an
/// inequality that is false for a third of all orders.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct TuranCheck {
    pub n: usize,
    pub r: usize,
    /// The classical benchmark (r−2)⌊n/r⌋ (see the type-level caveat).
    pub lower: f64,
    pub qmin: f64,
    pub upper: f64,
    pub mu2: f64,
    pub mu2_expected: f64,
    /// qmin ≥ lower − 1e-9; false exactly when n ≡ 1 (mod r).
    pub lower_holds: bool,
    pub lower_is_equality: bool,
    pub upper_is_equality: bool,
}

impl TuranCheck {
    pub const TSV_HEADER: &'static str =
        "n\tr\tlower\tqmin\tupper\tmu2\tmu2_expected\tlower_holds\tlower_eq\tupper_eq";

    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.n,
            self.r,
            self.lower,
            self.qmin,
            self.upper,
            self.mu2,
            self.mu2_expected,
            self.lower_holds,
            self.lower_is_equality,
            self.upper_is_equality
        )
    }
}

/// Evaluate and verify the Turán sandwich and μ_2 identity for T_r(n).
///
/// Errors with a self-check failure (not a silent flag) if the computed
/// spectrum escapes the *provable* part of the sandwich — the upper bound
/// (1 − 2/r)n — or misses the μ_2 identity, since either would mean an
/// implementation bug. The classical lower benchmark (r−2)⌊n/r⌋ is reported
/// through `lower_holds` rather than asserted, because it is genuinely false
/// when n ≡ 1 (mod r); see [`TuranCheck`].
pub fn turan_qmin_check(n: usize, r: usize) -> Result<TuranCheck> {
    if r < 3 {
        return Err(Error::InvalidParameter(format!(
            "Turán check needs r >= 3, got {r} (at r = 2 the graph is bipartite \
             and q_min is identically 0)"
        )));
    }
    if r > n {
        return Err(Error::InvalidParameter(format!(
            "Turán graph needs n >= r, got n = {n}, r = {r}"
        )));
    }
    let g = Graph::turan(n, r)?;
    let qmin = spectral::q_min(&g)?;
    let mu2 = spectral::mu_2(&g)?;
    let lower = (r as f64 - 2.0) * (n / r) as f64;
    let upper = (1.0 - 2.0 / r as f64) * n as f64;
    let mu2_expected = (n - n.div_ceil(r)) as f64;

    if qmin > upper + BOUND_TOL {
        return Err(Error::ConstructionCheck(format!(
            "q_min(T_{r}({n})) = {qmin} exceeded the upper bound {upper}"
        )));
    }
    if (mu2 - mu2_expected).abs() > 1e-7 {
        return Err(Error::ConstructionCheck(format!(
            "μ_2(T_{r}({n})) = {mu2} does not match n - ⌈n/r⌉ = {mu2_expected}"
        )));
    }

    Ok(TuranCheck {
        n,
        r,
        lower,
        qmin,
        upper,
        mu2,
        mu2_expected,
        lower_holds: qmin >= lower - BOUND_TOL,
        lower_is_equality: (qmin - lower).abs() <= 1e-7,
        upper_is_equality: (qmin - upper).abs() <= 1e-7,
    })
}
