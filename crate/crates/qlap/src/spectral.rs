//! Adjacency, Laplacian, and signless-Laplacian spectra, the scalar
//! extractors q_min and mu_2, and the closed-form spectra of blowups and
//! their complements.
//!
//! Conventions used throughout: adjacency and signless-Laplacian eigenvalues
//! are reported descending; the Laplacian accessor also exposes the ascending
//! view (the usual mu_1 <= ... <= mu_n), which is what `mu_2` indexes into.

use std::fmt;
use std::str::FromStr;

use crate::eigen::{self, SymmetricMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which matrix of a graph to take the spectrum of.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
    ];

    /// Single-letter name: A, L, or Q.
    pub fn letter(self) -> char {
        match self {
            MatrixKind::Adjacency => 'A',
            MatrixKind::Laplacian => 'L',
            MatrixKind::SignlessLaplacian => 'Q',
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<MatrixKind> {
        match s.to_ascii_lowercase().as_str() {
            "a" | "adjacency" => Ok(MatrixKind::Adjacency),
            "l" | "laplacian" => Ok(MatrixKind::Laplacian),
            "q" | "signless" | "signless-laplacian" => Ok(MatrixKind::SignlessLaplacian),
            other => Err(Error::InvalidParameter(format!(
                "unknown matrix kind {other:?} (use A, L, or Q)"
            ))),
        }
    }
}

/// Default width for grouping near-equal eigenvalues when reporting
/// multiplicities. Grouping is presentation only: spectra are always compared
/// as sorted lists of plain values.
pub const GROUPING_TOL: f64 = 1e-6;

/// Internal eigensolver tolerance; tighter than the solver's public default
/// because accuracy is cheap at these orders.
pub(crate) const EIGEN_TOL: f64 = 1e-12;

/// A full spectrum, sorted descending.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    grouping_tol: f64,
}

impl Spectrum {
    /// Wrap and sort a list of eigenvalues (descending).
    pub fn from_values(mut values: Vec<f64>) -> Spectrum {
        values.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
        Spectrum {
            values,
            grouping_tol: GROUPING_TOL,
        }
    }

    pub fn with_grouping_tol(mut self, tol: f64) -> Spectrum {
        self.grouping_tol = tol;
        self
    }

    /// Values in descending order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Values in ascending order (the Laplacian convention).
    pub fn ascending(&self) -> Vec<f64> {
        let mut v = self.values.clone();
        v.reverse();
        v
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> f64 {
        self.values[0]
    }

    pub fn min(&self) -> f64 {
        *self.values.last().expect("spectra are nonempty")
    }

    /// Eigenvalues grouped within `grouping_tol`, reported as
    /// (group mean, multiplicity), in descending order of value.
    pub fn multiplicities(&self) -> Vec<(f64, usize)> {
        let mut groups: Vec<(f64, usize)> = Vec::new();
        let mut start = 0;
        while start < self.values.len() {
            let mut end = start + 1;
            while end < self.values.len()
                && self.values[start] - self.values[end] <= self.grouping_tol
            {
                end += 1;
            }
            let count = end - start;
            let mean = self.values[start..end].iter().sum::<f64>() / count as f64;
            groups.push((mean, count));
            start = end;
        }
        groups
    }

    /// Largest elementwise gap between two spectra of equal length.
    pub fn max_abs_difference(&self, other: &Spectrum) -> Result<f64> {
        if self.len() != other.len() {
            return Err(Error::InvalidParameter(format!(
                "cannot compare spectra of lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }
}

// ----------------------------------------------------------------------
// Matrices and direct spectra
// ----------------------------------------------------------------------

/// The A, L = D - A, or Q = D + A matrix of a graph, with exact integer
/// entries.
pub fn matrix_of(g: &Graph, kind: MatrixKind) -> SymmetricMatrix {
    let n = g.order();
    SymmetricMatrix::from_fn(n, |i, j| {
        if i == j {
            match kind {
                MatrixKind::Adjacency => 0.0,
                _ => g.degree(i) as f64,
            }
        } else if g.has_edge(i, j) {
            match kind {
                MatrixKind::Adjacency => 1.0,
                MatrixKind::Laplacian => -1.0,
                MatrixKind::SignlessLaplacian => 1.0,
            }
        } else {
            0.0
        }
    })
    .expect("graph matrices have finite entries and positive order")
}

/// All eigenvalues of a symmetric matrix as a [`Spectrum`]; see
/// [`eigen::jacobi_eigenvalues`] for the iteration and its failure mode.
pub fn eigenvalues_symmetric(m: &SymmetricMatrix, tol: f64) -> Result<Spectrum> {
    Ok(Spectrum::from_values(eigen::jacobi_eigenvalues(m, tol)?))
}

/// Spectrum of the chosen matrix of `g`.
pub fn spectrum(g: &Graph, kind: MatrixKind) -> Result<Spectrum> {
    eigenvalues_symmetric(&matrix_of(g, kind), EIGEN_TOL)
}

/// Smallest signless-Laplacian eigenvalue. Zero exactly when some component
/// is bipartite; numerically a bipartite q_min may come out a hair below
/// zero, which callers compare with tolerances.
pub fn q_min(g: &Graph) -> Result<f64> {
    Ok(spectrum(g, MatrixKind::SignlessLaplacian)?.min())
}

/// Laplacian spectrum in ascending order.
pub fn laplacian_ascending(g: &Graph) -> Result<Vec<f64>> {
    Ok(spectrum(g, MatrixKind::Laplacian)?.ascending())
}

/// Second-smallest Laplacian eigenvalue (the algebraic connectivity).
pub fn mu_2(g: &Graph) -> Result<f64> {
    if g.order() < 2 {
        return Err(Error::InvalidParameter(
            "mu_2 needs a graph on at least 2 vertices".into(),
        ));
    }
    Ok(laplacian_ascending(g)?[1])
}

// ----------------------------------------------------------------------
// Closed-form blowup spectra
// ----------------------------------------------------------------------

/// Spectrum of the chosen matrix of the t-fold blowup of `g`, by closed form
/// — the tn-by-tn matrix is never built.
///
/// With base eigenvalues lambda_i / mu_i / q_i and degrees d_i:
/// adjacency gives {t*lambda_i} plus n(t-1) zeros; Laplacian gives {t*mu_i}
/// plus each t*d_i with multiplicity t-1; signless Laplacian gives {t*q_i}
/// plus each t*d_i with multiplicity t-1. For t = 1 this is just the spectrum
/// of `g` itself.
pub fn blowup_spectrum_closed(g: &Graph, t: usize, kind: MatrixKind) -> Result<Spectrum> {
    if t == 0 {
        return Err(Error::InvalidParameter(
            "blowup factor must be at least 1".into(),
        ));
    }
    if t == 1 {
        return spectrum(g, kind);
    }
    let base = spectrum(g, kind)?;
    let tf = t as f64;
    let n = g.order();
    let mut values: Vec<f64> = base.values().iter().map(|v| tf * v).collect();
    match kind {
        MatrixKind::Adjacency => {
            values.extend(std::iter::repeat_n(0.0, n * (t - 1)));
        }
        MatrixKind::Laplacian | MatrixKind::SignlessLaplacian => {
            for v in 0..n {
                let scaled = tf * g.degree(v) as f64;
                values.extend(std::iter::repeat_n(scaled, t - 1));
            }
        }
    }
    Ok(Spectrum::from_values(values))
}

/// Spectrum of the chosen matrix of the complement of the t-fold blowup of
/// `g`, by closed form.
///
/// Writing bars for complement quantities of `g` (order n, degrees d_i):
/// adjacency gives {t*lambda_i(comp) + t - 1} plus n(t-1) copies of -1;
/// signless Laplacian gives {t*qbar_i + 2(t-1)} plus each t*n - t*d_i - 2
/// with multiplicity t-1; the Laplacian comes from the complement identity
/// applied at the multiset level: {0} plus {t*n - nu} over the blowup's
/// Laplacian values with one zero removed. For t = 1 this is the spectrum of
/// the complement of `g`.
pub fn blowup_complement_spectrum_closed(g: &Graph, t: usize, kind: MatrixKind) -> Result<Spectrum> {
    if t == 0 {
        return Err(Error::InvalidParameter(
            "blowup factor must be at least 1".into(),
        ));
    }
    if t == 1 {
        return spectrum(&g.complement(), kind);
    }
    let tf = t as f64;
    let n = g.order();
    let values = match kind {
        MatrixKind::Adjacency => {
            let comp = spectrum(&g.complement(), MatrixKind::Adjacency)?;
            let mut values: Vec<f64> = comp.values().iter().map(|v| tf * v + tf - 1.0).collect();
            values.extend(std::iter::repeat_n(-1.0, n * (t - 1)));
            values
        }
        MatrixKind::SignlessLaplacian => {
            let comp = spectrum(&g.complement(), MatrixKind::SignlessLaplacian)?;
            let mut values: Vec<f64> = comp
                .values()
                .iter()
                .map(|v| tf * v + 2.0 * (tf - 1.0))
                .collect();
            for v in 0..n {
                let value = tf * n as f64 - tf * g.degree(v) as f64 - 2.0;
                values.extend(std::iter::repeat_n(value, t - 1));
            }
            values
        }
        MatrixKind::Laplacian => {
            // Complement identity on the blowup: its ascending Laplacian
            // spectrum starts with a zero; the remaining tn - 1 values nu map
            // to tn - nu, and one zero is restored for the complement.
            let blown = blowup_spectrum_closed(g, t, MatrixKind::Laplacian)?;
            let ascending = blown.ascending();
            let total = tf * n as f64;
            let mut values: Vec<f64> =
                ascending[1..].iter().map(|nu| total - nu).collect();
            values.push(0.0);
            values
        }
    };
    Ok(Spectrum::from_values(values))
}

/// For a regular graph, q_min equals degree + smallest adjacency eigenvalue.
/// Returns `(q_min, d + lambda_min)` so callers can compare the two routes.
pub fn check_regular_identity(g: &Graph) -> Result<(f64, f64)> {
    let d = g.regular_degree().ok_or_else(|| {
        Error::InvalidParameter("regular identity needs a regular graph".into())
    })?;
    let qmin = q_min(g)?;
    let lambda_min = spectrum(g, MatrixKind::Adjacency)?.min();
    Ok((qmin, d as f64 + lambda_min))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::labeled_graphs;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn assert_spectrum(got: &Spectrum, want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len(), "got {got:?}, want {want:?}");
        for (g, w) in got.values().iter().zip(want) {
            assert!((g - w).abs() <= tol, "got {:?}, want {want:?}", got.values());
        }
    }

    #[test]
    fn hand_checked_spectra() {
        // Q(K_3) = I + all-ones.
        let q3 = spectrum(&Graph::complete(3).unwrap(), MatrixKind::SignlessLaplacian).unwrap();
        assert_spectrum(&q3, &[4.0, 1.0, 1.0], 1e-10);
        // A(C_4): eigenvalues 2cos(2 pi k / 4).
        let a4 = spectrum(&Graph::cycle(4).unwrap(), MatrixKind::Adjacency).unwrap();
        assert_spectrum(&a4, &[2.0, 0.0, 0.0, -2.0], 1e-10);
        // Q of the complete tripartite K_{2,2,2} (4-regular, lambda_min = -2).
        let octa = Graph::turan(6, 3).unwrap();
        let q = spectrum(&octa, MatrixKind::SignlessLaplacian).unwrap();
        assert_spectrum(&q, &[8.0, 4.0, 4.0, 4.0, 2.0, 2.0], 1e-9);
        // L(P_3) ascending.
        assert_spectrum(
            &spectrum(&Graph::path(3).unwrap(), MatrixKind::Laplacian).unwrap(),
            &[3.0, 1.0, 0.0],
            1e-10,
        );
    }

    #[test]
    fn qmin_values() {
        // Golden-ratio expression for the 5-cycle.
        let want = (3.0 - 5.0f64.sqrt()) / 2.0;
        assert!((q_min(&Graph::cycle(5).unwrap()).unwrap() - want).abs() < 1e-10);
        // Bipartite graphs sit at zero.
        assert!(q_min(&Graph::cycle(6).unwrap()).unwrap().abs() < 1e-10);
        assert!(q_min(&Graph::turan(7, 2).unwrap()).unwrap().abs() < 1e-9);
        // K_4: 4-clique is 3-regular with lambda_min = -1.
        assert!((q_min(&Graph::complete(4).unwrap()).unwrap() - 2.0).abs() < 1e-10);
    }

    #[test]
    fn mu2_values_and_guard() {
        assert!((mu_2(&Graph::turan(6, 3).unwrap()).unwrap() - 4.0).abs() < 1e-9);
        assert!((mu_2(&Graph::complete(4).unwrap()).unwrap() - 4.0).abs() < 1e-9);
        // Disconnected: second-smallest Laplacian eigenvalue is 0.
        let disc = Graph::complete(3).unwrap().add_isolated(1).unwrap();
        assert!(mu_2(&disc).unwrap().abs() < 1e-10);
        assert!(mu_2(&Graph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn blowup_closed_forms_match_frozen_examples() {
        // K_2 doubled is C_4; Q(C_4) = {4,2,2,0}.
        let k2 = Graph::complete(2).unwrap();
        assert_spectrum(
            &blowup_spectrum_closed(&k2, 2, MatrixKind::SignlessLaplacian).unwrap(),
            &[4.0, 2.0, 2.0, 0.0],
            1e-9,
        );
        // P_3 doubled, Laplacian: {2 mu_i} = {0,2,6} plus 2*degrees {2,4,2}.
        assert_spectrum(
            &blowup_spectrum_closed(&Graph::path(3).unwrap(), 2, MatrixKind::Laplacian).unwrap(),
            &[6.0, 4.0, 2.0, 2.0, 2.0, 0.0],
            1e-9,
        );
        // K_2 tripled is K_{3,3}: {3 lambda_i} plus 4 zeros.
        assert_spectrum(
            &blowup_spectrum_closed(&k2, 3, MatrixKind::Adjacency).unwrap(),
            &[3.0, 0.0, 0.0, 0.0, 0.0, -3.0],
            1e-9,
        );
    }

    #[test]
    fn blowup_complement_closed_forms_match_frozen_examples() {
        let k2 = Graph::complete(2).unwrap();
        // Complement of C_4 is 2K_2: Q = {2,2,0,0}, A = {1,1,-1,-1}.
        assert_spectrum(
            &blowup_complement_spectrum_closed(&k2, 2, MatrixKind::SignlessLaplacian).unwrap(),
            &[2.0, 2.0, 0.0, 0.0],
            1e-9,
        );
        assert_spectrum(
            &blowup_complement_spectrum_closed(&k2, 2, MatrixKind::Adjacency).unwrap(),
            &[1.0, 1.0, -1.0, -1.0],
            1e-9,
        );
        // Complement of the doubled K_3 (= K_{2,2,2}) is 3K_2, whose
        // Laplacian spectrum is {0,2} three times over.
        assert_spectrum(
            &blowup_complement_spectrum_closed(&Graph::complete(3).unwrap(), 2, MatrixKind::Laplacian)
                .unwrap(),
            &[2.0, 2.0, 2.0, 0.0, 0.0, 0.0],
            1e-9,
        );
    }

    #[test]
    fn closed_forms_equal_direct_eigensolves() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for trial in 0..12 {
            let n = 2 + (trial % 7);
            let t = 2 + (trial % 3);
            let g = Graph::random(n, 0.45, &mut rng).unwrap();
            let blown = g.blowup(t).unwrap();
            let comp = blown.complement();
            for kind in MatrixKind::ALL {
                let closed = blowup_spectrum_closed(&g, t, kind).unwrap();
                let direct = spectrum(&blown, kind).unwrap();
                assert!(
                    closed.max_abs_difference(&direct).unwrap() < 1e-7,
                    "blowup {kind} mismatch at n={n}, t={t}"
                );
                let closed_c = blowup_complement_spectrum_closed(&g, t, kind).unwrap();
                let direct_c = spectrum(&comp, kind).unwrap();
                assert!(
                    closed_c.max_abs_difference(&direct_c).unwrap() < 1e-7,
                    "complement {kind} mismatch at n={n}, t={t}"
                );
            }
        }
    }

    #[test]
    fn t_equals_one_falls_back_and_t_zero_errors() {
        let g = Graph::cycle(5).unwrap();
        for kind in MatrixKind::ALL {
            let one = blowup_spectrum_closed(&g, 1, kind).unwrap();
            assert_eq!(one.values(), spectrum(&g, kind).unwrap().values());
            let comp = blowup_complement_spectrum_closed(&g, 1, kind).unwrap();
            assert_eq!(comp.values(), spectrum(&g.complement(), kind).unwrap().values());
            assert!(blowup_spectrum_closed(&g, 0, kind).is_err());
            assert!(blowup_complement_spectrum_closed(&g, 0, kind).is_err());
        }
    }

    #[test]
    fn qmin_scales_linearly_under_blowup() {
        let g = Graph::cycle(5).unwrap();
        let base = q_min(&g).unwrap();
        for t in 2..=4 {
            let direct = q_min(&g.blowup(t).unwrap()).unwrap();
            assert!((direct - t as f64 * base).abs() < 1e-7);
            let closed = blowup_spectrum_closed(&g, t, MatrixKind::SignlessLaplacian)
                .unwrap()
                .min();
            assert!((closed - t as f64 * base).abs() < 1e-7);
        }
    }

    #[test]
    fn trace_identities_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for _ in 0..10 {
            let g = Graph::random(9, 0.5, &mut rng).unwrap();
            let m2 = 2.0 * g.edge_count() as f64;
            let tol = 1e-7 * g.order() as f64;
            let sum = |kind| -> f64 {
                spectrum(&g, kind).unwrap().values().iter().sum()
            };
            assert!((sum(MatrixKind::Adjacency)).abs() < tol);
            assert!((sum(MatrixKind::Laplacian) - m2).abs() < tol);
            assert!((sum(MatrixKind::SignlessLaplacian) - m2).abs() < tol);
        }
    }

    #[test]
    fn laplacian_and_q_spectra_are_positive_semidefinite() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..10 {
            let g = Graph::random(8, 0.4, &mut rng).unwrap();
            assert!(spectrum(&g, MatrixKind::Laplacian).unwrap().min() >= -1e-8);
            assert!(spectrum(&g, MatrixKind::SignlessLaplacian).unwrap().min() >= -1e-8);
        }
    }

    #[test]
    fn complement_laplacian_multiset_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..10 {
            let g = Graph::random(10, 0.5, &mut rng).unwrap();
            let n = g.order() as f64;
            let mine = laplacian_ascending(&g).unwrap();
            let mut predicted: Vec<f64> = mine[1..].iter().map(|mu| n - mu).collect();
            predicted.push(0.0);
            let predicted = Spectrum::from_values(predicted);
            let actual = spectrum(&g.complement(), MatrixKind::Laplacian).unwrap();
            assert!(predicted.max_abs_difference(&actual).unwrap() < 1e-7);
        }
    }

    #[test]
    fn bipartite_criterion_exhaustive_small() {
        for g in labeled_graphs(4).unwrap() {
            let qmin = q_min(&g).unwrap();
            assert_eq!(
                qmin <= 1e-8,
                g.has_bipartite_component(),
                "criterion failed on {g:?}"
            );
        }
    }

    #[test]
    fn regular_identity_on_known_graphs() {
        for g in [Graph::cycle(5).unwrap(), Graph::complete(4).unwrap(), Graph::petersen()] {
            let (qmin, via_adjacency) = check_regular_identity(&g).unwrap();
            assert!((qmin - via_adjacency).abs() < 1e-8);
        }
        assert!(check_regular_identity(&Graph::path(3).unwrap()).is_err());
    }

    #[test]
    fn multiplicity_grouping_is_presentation_only() {
        let s = Spectrum::from_values(vec![2.0, 1.0 + 4e-7, 1.0, 0.0]);
        let groups = s.multiplicities();
        assert_eq!(groups.len(), 3);
        assert_eq!(groups[1].1, 2);
        assert!((groups[1].0 - 1.0).abs() < 1e-6);
        // Raw values stay exact.
        assert_eq!(s.values()[1], 1.0 + 4e-7);
    }

    #[test]
    fn spectrum_comparisons_require_equal_lengths() {
        let a = Spectrum::from_values(vec![1.0, 0.0]);
        let b = Spectrum::from_values(vec![1.0]);
        assert!(a.max_abs_difference(&b).is_err());
    }

    #[test]
    fn matrix_kind_parsing() {
        assert_eq!("q".parse::<MatrixKind>().unwrap(), MatrixKind::SignlessLaplacian);
        assert_eq!("A".parse::<MatrixKind>().unwrap(), MatrixKind::Adjacency);
        assert_eq!("laplacian".parse::<MatrixKind>().unwrap(), MatrixKind::Laplacian);
        assert!("x".parse::<MatrixKind>().is_err());
    }
}
