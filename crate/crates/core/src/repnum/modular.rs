//! Floating-point spot checks of the theta transformation laws
//!
//! ```text
//! theta(z + 1, Q) = theta(z, Q)
//! theta(-1/z, Q)  = sqrt(z/i)^n  D^(-1/2)  theta(z, Q^-1)
//! ```
//!
//! where `theta(z, M) = sum_{x in Z^n} exp(pi i z x^T M x)`. This is the only
//! floating-point path in the crate; nothing exact depends on it.
//!
//! A lattice sum is truncated to `x^T M x <= T`. `T` starts where single terms
//! fall below `cutoff` and grows until a bound on the total dropped mass is
//! also below `cutoff`: the points with `m < x^T M x <= m + 1` lie in a box
//! with at most `prod_i (2 sqrt((m+1) (M^-1)_ii) + 1)` points, each of modulus
//! at most `exp(-pi y m)`.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::QuadForm;
use crate::error::{Error, Result};

/// Cap on enumerated lattice points per sum.
const MAX_POINTS: f64 = 5.0e7;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThetaCheck {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub absdiff: f64,
}

struct RealForm {
    matrix: Vec<Vec<f64>>,
    inverse_diag: Vec<f64>,
}

impl RealForm {
    fn of(form: &QuadForm) -> Self {
        let inv = form.inverse();
        RealForm {
            matrix: form
                .rows()
                .into_iter()
                .map(|r| r.into_iter().map(|v| v as f64).collect())
                .collect(),
            inverse_diag: (0..form.dim()).map(|i| inv[i][i].to_f64().unwrap()).collect(),
        }
    }

    fn inverse_of(form: &QuadForm) -> Self {
        let inv = form.inverse();
        RealForm {
            matrix: inv
                .iter()
                .map(|r| r.iter().map(|v| v.to_f64().unwrap()).collect())
                .collect(),
            inverse_diag: (0..form.dim()).map(|i| form.entry(i, i) as f64).collect(),
        }
    }

    fn dim(&self) -> usize {
        self.matrix.len()
    }

    fn value(&self, x: &[i64]) -> f64 {
        let mut total = 0.0;
        for (p, row) in self.matrix.iter().enumerate() {
            let r: f64 = row.iter().zip(x).map(|(a, &v)| a * v as f64).sum();
            total += x[p] as f64 * r;
        }
        total
    }

    fn box_widths(&self, t: f64) -> Vec<i64> {
        // small relative margin so rounding cannot shrink the box
        self.inverse_diag
            .iter()
            .map(|d| ((t * d).max(0.0).sqrt() * (1.0 + 1e-12)).floor() as i64)
            .collect()
    }

    fn box_count(&self, t: f64) -> f64 {
        self.box_widths(t).iter().map(|&w| (2 * w + 1) as f64).product()
    }

    /// Upper bound on `sum_{x^T M x > t} exp(-pi y x^T M x)`.
    fn tail_bound(&self, y: f64, t: f64) -> f64 {
        let n = self.dim() as f64;
        let scale: f64 = self
            .inverse_diag
            .iter()
            .map(|d| 2.0 * d.sqrt() + 1.0)
            .product();
        // shell m holds at most scale * (m+1)^(n/2) points of modulus <= e^{-pi y m}
        let term = |m: f64| scale * (m + 1.0).powf(n / 2.0) * (-std::f64::consts::PI * y * m).exp();
        let mut m = t.floor();
        let mut sum: f64 = 0.0;
        loop {
            let ratio = ((m + 2.0) / (m + 1.0)).powf(n / 2.0) * (-std::f64::consts::PI * y).exp();
            let tm = term(m);
            if ratio < 1.0 && tm < 1e-3 * sum.max(f64::MIN_POSITIVE) {
                return sum + tm / (1.0 - ratio);
            }
            if ratio < 1.0 && tm == 0.0 {
                return sum;
            }
            sum += tm;
            m += 1.0;
        }
    }

    fn theta(&self, z: Complex64, cutoff: f64) -> Result<Complex64> {
        let y = z.im;
        if !(y > 0.0) {
            return Err(Error::OutOfRange("Im z must be positive".into()));
        }
        if !(cutoff > 0.0) {
            return Err(Error::OutOfRange("cutoff must be positive".into()));
        }
        let mut t = (-cutoff.ln() / (std::f64::consts::PI * y)).max(1.0);
        let mut tail = self.tail_bound(y, t);
        while tail > cutoff {
            t *= 1.25;
            if self.box_count(t) > MAX_POINTS {
                return Err(Error::NoConvergence { cutoff, tail });
            }
            tail = self.tail_bound(y, t);
        }
        if self.box_count(t) > MAX_POINTS {
            return Err(Error::NoConvergence { cutoff, tail });
        }
        let widths = self.box_widths(t);
        let mut x: Vec<i64> = widths.iter().map(|&w| -w).collect();
        let phase = Complex64::new(0.0, std::f64::consts::PI) * z;
        let mut sum = Complex64::new(0.0, 0.0);
        loop {
            sum += (phase * self.value(&x)).exp();
            let mut i = 0;
            loop {
                if i == x.len() {
                    return Ok(sum);
                }
                x[i] += 1;
                if x[i] <= widths[i] {
                    break;
                }
                x[i] = -widths[i];
                i += 1;
            }
        }
    }
}

/// `theta(z, Q)` by truncated lattice sum.
pub fn theta_numeric(form: &QuadForm, z: Complex64, cutoff: f64) -> Result<Complex64> {
    RealForm::of(form).theta(z, cutoff)
}

/// Compares `theta(-1/z, Q)` with `sqrt(z/i)^n D^(-1/2) theta(z, Q^-1)`,
/// principal branch of the square root.
pub fn theta_modular_numcheck(form: &QuadForm, z: Complex64, cutoff: f64) -> Result<ThetaCheck> {
    if !(z.im > 0.0) {
        return Err(Error::OutOfRange("Im z must be positive".into()));
    }
    let n = form.dim() as i32;
    let det = form.determinant().to_f64().unwrap();
    let lhs = RealForm::of(form).theta(-z.inv(), cutoff)?;
    let root = (z / Complex64::i()).sqrt();
    let rhs = root.powi(n) * det.powf(-0.5) * RealForm::inverse_of(form).theta(z, cutoff)?;
    Ok(ThetaCheck {
        lhs,
        rhs,
        absdiff: (lhs - rhs).norm(),
    })
}

/// Compares `theta(z + 1, Q)` with `theta(z, Q)`.
pub fn theta_translation_numcheck(form: &QuadForm, z: Complex64, cutoff: f64) -> Result<ThetaCheck> {
    let real = RealForm::of(form);
    let lhs = real.theta(z + 1.0, cutoff)?;
    let rhs = real.theta(z, cutoff)?;
    Ok(ThetaCheck {
        lhs,
        rhs,
        absdiff: (lhs - rhs).norm(),
    })
}
