//! Dense symmetric matrices and a cyclic Jacobi eigensolver.
//!
//! Jacobi iteration is chosen deliberately: it is deterministic, simple to
//! verify, and delivers high relative accuracy on the small dense matrices
//! this crate produces (orders up to 1000, most far smaller). Speed is a
//! non-goal at these sizes.

use crate::error::{Error, Result};

/// Default relative tolerance for [`jacobi_eigenvalues`]: iteration stops when
/// the off-diagonal Frobenius norm falls below `tol` times the full norm.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Sweep cap; exceeding it is reported as an error, never papered over.
pub const MAX_SWEEPS: usize = 100;

/// A real symmetric matrix in full row-major storage. The two mirrored
/// entries of every pair are kept bit-identical.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    a: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Result<SymmetricMatrix> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "matrix order must be at least 1".into(),
            ));
        }
        Ok(SymmetricMatrix { n, a: vec![0.0; n * n] })
    }

    /// Build from an entry function; `f` is consulted only for `i <= j` and
    /// the result mirrored, so symmetry holds by construction.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<SymmetricMatrix> {
        let mut m = SymmetricMatrix::zeros(n)?;
        for i in 0..n {
            for j in i..n {
                let value = f(i, j);
                if !value.is_finite() {
                    return Err(Error::InvalidParameter(format!(
                        "matrix entry ({i},{j}) is not finite: {value}"
                    )));
                }
                m.set_sym(i, j, value);
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    /// Write both `(i, j)` and `(j, i)`.
    pub fn set_sym(&mut self, i: usize, j: usize, value: f64) {
        self.a[i * self.n + j] = value;
        self.a[j * self.n + i] = value;
    }

    /// Whitespace-separated rows, for external cross-checking.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    out.push(' ');
                }
                out.push_str(&format!("{}", self.get(i, j)));
            }
            out.push('\n');
        }
        out
    }

    fn frobenius_norm(&self) -> f64 {
        self.a.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    let x = self.a[i * self.n + j];
                    sum += x * x;
                }
            }
        }
        sum.sqrt()
    }
}

/// All eigenvalues of `m`, descending, by cyclic Jacobi rotations.
///
/// Sweeps visit the strict upper triangle row by row, annihilating each entry
/// with a Givens rotation; the iteration stops once the off-diagonal Frobenius
/// norm is at most `tol` times the full Frobenius norm (which rotations
/// preserve). Non-convergence within [`MAX_SWEEPS`] sweeps is an error
/// carrying the residual.
pub fn jacobi_eigenvalues(m: &SymmetricMatrix, tol: f64) -> Result<Vec<f64>> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let n = m.n;
    let mut work = m.clone();
    let full_norm = work.frobenius_norm();

    for _ in 0..MAX_SWEEPS {
        if work.off_diagonal_norm() <= tol * full_norm {
            let mut values: Vec<f64> = (0..n).map(|i| work.get(i, i)).collect();
            values.sort_by(|a, b| b.partial_cmp(a).expect("finite entries stay finite"));
            return Ok(values);
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut work, p, q);
            }
        }
    }
    Err(Error::NoConvergence {
        sweeps: MAX_SWEEPS,
        residual: work.off_diagonal_norm(),
    })
}

/// One Jacobi rotation annihilating entry (p, q).
fn rotate(m: &mut SymmetricMatrix, p: usize, q: usize) {
    let n = m.n;
    let apq = m.a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = m.a[p * n + p];
    let aqq = m.a[q * n + q];

    // tan of the rotation angle, via the stable smaller-root formula.
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1.0e150 {
        // Guard against theta^2 overflow; for huge theta, t ~ 1/(2 theta).
        0.5 / theta
    } else {
        let root = (theta * theta + 1.0).sqrt();
        if theta >= 0.0 { 1.0 / (theta + root) } else { 1.0 / (theta - root) }
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = m.a[k * n + p];
        let akq = m.a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        m.a[k * n + p] = new_kp;
        m.a[p * n + k] = new_kp;
        m.a[k * n + q] = new_kq;
        m.a[q * n + k] = new_kq;
    }
    m.a[p * n + p] = app - t * apq;
    m.a[q * n + q] = aqq + t * apq;
    m.a[p * n + q] = 0.0;
    m.a[q * n + p] = 0.0;
}
