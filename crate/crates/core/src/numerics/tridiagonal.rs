//! Thomas-style elimination for tridiagonal systems.

use crate::error::{Error, Result};

/// A tridiagonal system A x = b. `sub[0]` and `sup[n-1]` are ignored.
#[derive(Debug, Clone)]
pub struct TridiagonalSystem {
    pub sub: Vec<f64>,
    pub diag: Vec<f64>,
    pub sup: Vec<f64>,
    pub rhs: Vec<f64>,
}

impl TridiagonalSystem {
    pub fn n(&self) -> usize {
        self.diag.len()
    }

    /// Residual infinity norm ||A x - b||_inf for a candidate solution.
    pub fn residual_inf(&self, x: &[f64]) -> f64 {
        let n = self.n();
        let mut worst = 0.0f64;
        for i in 0..n {
            let mut ax = self.diag[i] * x[i];
            if i > 0 {
                ax += self.sub[i] * x[i - 1];
            }
            if i + 1 < n {
                ax += self.sup[i] * x[i + 1];
            }
            worst = worst.max((ax - self.rhs[i]).abs());
        }
        worst
    }
}

/// Solves the system by forward elimination / back substitution.
pub fn solve_tridiagonal(sys: &TridiagonalSystem) -> Result<Vec<f64>> {
    let n = sys.n();
    if n == 0 || sys.sub.len() != n || sys.sup.len() != n || sys.rhs.len() != n {
        return Err(Error::InvalidArgument(
            "tridiagonal system arrays must share a nonzero length".into(),
        ));
    }
    let mut scratch = vec![0.0; n];
    let mut x = vec![0.0; n];
    solve_tridiagonal_into(&sys.sub, &sys.diag, &sys.sup, &sys.rhs, &mut scratch, &mut x)?;
    Ok(x)
}

/// Allocation-free variant for hot loops (PDE time stepping).
pub fn solve_tridiagonal_into(
    sub: &[f64],
    diag: &[f64],
    sup: &[f64],
    rhs: &[f64],
    scratch: &mut [f64],
    x: &mut [f64],
) -> Result<()> {
    let n = diag.len();
    let mut den = diag[0];
    if den.abs() < 1e-300 {
        return Err(Error::SingularPivot { row: 0 });
    }
    scratch[0] = sup[0] / den;
    x[0] = rhs[0] / den;
    for i in 1..n {
        den = diag[i] - sub[i] * scratch[i - 1];
        if den.abs() < 1e-300 {
            return Err(Error::SingularPivot { row: i });
        }
        if i + 1 < n {
            scratch[i] = sup[i] / den;
        }
        x[i] = (rhs[i] - sub[i] * x[i - 1]) / den;
    }
    for i in (0..n - 1).rev() {
        x[i] -= scratch[i] * x[i + 1];
    }
    Ok(())
}
