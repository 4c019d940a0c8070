use crate::error::{Error, Result};

/// Solves `A x = rhs` for symmetric tridiagonal `A` by elimination without pivoting.
///
/// `diag` has length `n`, `off` length `n − 1` (`off[i] = A[i][i+1] = A[i+1][i]`).
/// Any non-finite pivot or solution entry is reported as a solver failure.
pub fn solve_symmetric(diag: &[f64], off: &[f64], rhs: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    if n == 0 || off.len() + 1 != n || rhs.len() != n {
        return Err(Error::InvalidArgument(format!(
            "tridiagonal shapes do not match: diag {n}, off {}, rhs {}",
            off.len(),
            rhs.len()
        )));
    }
    let mut d = diag.to_vec();
    let mut r = rhs.to_vec();
    for i in 1..n {
        let m = off[i - 1] / d[i - 1];
        d[i] -= m * off[i - 1];
        r[i] -= m * r[i - 1];
        if !(d[i].is_finite() && r[i].is_finite()) || d[i] == 0.0 {
            return Err(Error::SolverFailure { row: i });
        }
    }
    let mut x = vec![0.0; n];
    x[n - 1] = r[n - 1] / d[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = (r[i] - off[i] * x[i + 1]) / d[i];
    }
    if let Some(row) = x.iter().position(|v| !v.is_finite()) {
        return Err(Error::SolverFailure { row });
    }
    Ok(x)
}
