//! Bisection root bracketing.

use crate::error::{Error, Result};

/// Bisects f on [lo, hi] down to a bracket of width <= tol and returns its
/// midpoint. Requires f(lo) * f(hi) <= 0.
pub fn bisect_root<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    if !(lo < hi) {
        return Err(Error::InvalidArgument("bisect_root needs lo < hi".into()));
    }
    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa * fb > 0.0 {
        return Err(Error::NotBracketed { lo, hi });
    }
    while b - a > tol {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break; // hit floating-point resolution
        }
        let fm = f(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if fa * fm < 0.0 {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::norm_cdf;

    #[test]
    fn linear_root() {
        let r = bisect_root(|x| x - 1.0, 0.0, 2.0, 1e-12).unwrap();
        assert!((r - 1.0).abs() < 1e-12);
    }

    #[test]
    fn normal_median() {
        let r = bisect_root(|x| norm_cdf(x) - 0.5, -3.0, 3.0, 1e-12).unwrap();
        assert!(r.abs() < 1e-12);
    }

    #[test]
    fn cube_root_of_two() {
        let r = bisect_root(|x| x * x * x - 2.0, 0.0, 2.0, 1e-9).unwrap();
        assert!((r - 1.259_921_049_894_873_2).abs() < 1e-6);
    }

    #[test]
    fn rejects_non_bracketing() {
        assert!(matches!(
            bisect_root(|x| x * x + 1.0, -1.0, 1.0, 1e-10),
            Err(Error::NotBracketed { .. })
        ));
    }
}
