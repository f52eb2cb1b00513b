//! Classical fourth-order Runge-Kutta integration on a fixed mesh.

use crate::error::{Error, Result};

/// Integrates dy/dt = field(t, y) over the given strictly increasing mesh,
/// returning the state at every mesh point (including the initial one).
///
/// Signals `NonFinite` as soon as the state leaves the finite range.
pub fn rk4_solve<F>(mut field: F, y0: &[f64], mesh: &[f64]) -> Result<Vec<Vec<f64>>>
where
    F: FnMut(f64, &[f64], &mut [f64]),
{
    if mesh.len() < 2 {
        return Err(Error::InvalidArgument("mesh needs at least two points".into()));
    }
    for pair in mesh.windows(2) {
        if !(pair[0] < pair[1]) {
            return Err(Error::InvalidArgument("mesh must be strictly increasing".into()));
        }
    }
    let dim = y0.len();
    let mut out = Vec::with_capacity(mesh.len());
    out.push(y0.to_vec());
    let mut y = y0.to_vec();
    let mut k1 = vec![0.0; dim];
    let mut k2 = vec![0.0; dim];
    let mut k3 = vec![0.0; dim];
    let mut k4 = vec![0.0; dim];
    let mut tmp = vec![0.0; dim];
    for step in mesh.windows(2) {
        let (t, h) = (step[0], step[1] - step[0]);
        field(t, &y, &mut k1);
        for i in 0..dim {
            tmp[i] = y[i] + 0.5 * h * k1[i];
        }
        field(t + 0.5 * h, &tmp, &mut k2);
        for i in 0..dim {
            tmp[i] = y[i] + 0.5 * h * k2[i];
        }
        field(t + 0.5 * h, &tmp, &mut k3);
        for i in 0..dim {
            tmp[i] = y[i] + h * k3[i];
        }
        field(t + h, &tmp, &mut k4);
        for i in 0..dim {
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            if !y[i].is_finite() {
                return Err(Error::NonFinite("rk4_solve state"));
            }
        }
        out.push(y.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uniform_mesh(t0: f64, t1: f64, steps: usize) -> Vec<f64> {
        (0..=steps)
            .map(|i| t0 + (t1 - t0) * i as f64 / steps as f64)
            .collect()
    }

    #[test]
    fn exponential_decay() {
        let mesh = uniform_mesh(0.0, 1.0, 100);
        let traj = rk4_solve(|_, y, dy| dy[0] = -y[0], &[1.0], &mesh).unwrap();
        let got = traj.last().unwrap()[0];
        assert!((got - (-1.0f64).exp()).abs() < 1e-8, "got {got}");
    }

    #[test]
    fn constant_field_is_identity() {
        let mesh = uniform_mesh(0.0, 2.0, 10);
        let traj = rk4_solve(|_, _, dy| dy[0] = 0.0, &[3.5], &mesh).unwrap();
        for s in &traj {
            assert_eq!(s[0], 3.5);
        }
    }

    #[test]
    fn rotation_by_pi() {
        // dy/dt = [[0,1],[-1,0]] y rotates (1,0) to (-1,0) at t = pi
        let mesh = uniform_mesh(0.0, std::f64::consts::PI, 200);
        let traj = rk4_solve(
            |_, y, dy| {
                dy[0] = y[1];
                dy[1] = -y[0];
            },
            &[1.0, 0.0],
            &mesh,
        )
        .unwrap();
        let end = traj.last().unwrap();
        assert!((end[0] + 1.0).abs() < 1e-6 && end[1].abs() < 1e-6);
    }

    #[test]
    fn fourth_order_by_richardson() {
        // global error on a linear field shrinks ~16x when the step halves
        let err = |steps: usize| {
            let mesh = uniform_mesh(0.0, 1.0, steps);
            let traj = rk4_solve(|_, y, dy| dy[0] = -y[0], &[1.0], &mesh).unwrap();
            (traj.last().unwrap()[0] - (-1.0f64).exp()).abs()
        };
        let (e1, e2) = (err(25), err(50));
        let ratio = e1 / e2;
        assert!((10.0..24.0).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn signals_blowup() {
        let mesh = uniform_mesh(0.0, 10.0, 20);
        let res = rk4_solve(|_, y, dy| dy[0] = y[0] * y[0] * 1e6, &[1.0], &mesh);
        assert!(matches!(res, Err(Error::NonFinite(_))));
    }

    #[test]
    fn rejects_bad_mesh() {
        assert!(rk4_solve(|_, _, dy| dy[0] = 0.0, &[0.0], &[0.0, 0.0, 1.0]).is_err());
        assert!(rk4_solve(|_, _, dy| dy[0] = 0.0, &[0.0], &[0.0]).is_err());
    }
}
