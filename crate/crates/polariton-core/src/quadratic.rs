//! Two coupled oscillators with spring coupling `K` and gyrotropic
//! (momentum) coupling `G`:
//!
//! ```text
//! ẍc + Ωc² xc + K xm − 2G ẋm = 0
//! ẍm + Ωm² xm + K xc + 2G ẋc = 0
//! ```
//!
//! With x ∝ e^{−iωt} this becomes M(ω)·x = 0, where
//! M = [[Ωc² − ω², K + 2iωG], [K − 2iωG, Ωm² − ω²]].
//! Every two-oscillator model in the crate is a special case.

use crate::error::{Error, Result};
use crate::C64;
use nalgebra::{Matrix4, Vector2};

const I: C64 = C64::new(0.0, 1.0);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadratic2 {
    pub omega_c: C64,
    pub omega_m: C64,
    pub k: C64,
    pub g: C64,
}

/// Roots of the secular equation, ordered by real part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Roots {
    pub plus: C64,
    pub minus: C64,
    /// False when the lower root of ω² is negative (lossless) so that the
    /// lower branch is purely imaginary.
    pub lower_real: bool,
}

impl Quadratic2 {
    pub fn real(omega_c: f64, omega_m: f64, k: f64, g: f64) -> Self {
        Self { omega_c: omega_c.into(), omega_m: omega_m.into(), k: k.into(), g: g.into() }
    }

    pub fn is_real(&self) -> bool {
        [self.omega_c, self.omega_m, self.k, self.g].iter().all(|z| z.im == 0.0)
    }

    /// M(ω) as row-major entries.
    pub fn matrix(&self, w: C64) -> [[C64; 2]; 2] {
        let w2 = w * w;
        [
            [self.omega_c * self.omega_c - w2, self.k + 2.0 * I * w * self.g],
            [self.k - 2.0 * I * w * self.g, self.omega_m * self.omega_m - w2],
        ]
    }

    /// (T, P) with ω⁴ − Tω² + P = 0.
    pub fn secular(&self) -> (C64, C64) {
        let c2 = self.omega_c * self.omega_c;
        let m2 = self.omega_m * self.omega_m;
        let g2 = self.g * self.g;
        let cm = self.omega_c * self.omega_m;
        (c2 + m2 + 4.0 * g2, (cm - self.k) * (cm + self.k))
    }

    /// Discriminant T² − 4P written as a sum of squares so that it stays
    /// non-negative for real coefficients.
    fn discriminant(&self) -> C64 {
        let c2 = self.omega_c * self.omega_c;
        let m2 = self.omega_m * self.omega_m;
        let g2 = self.g * self.g;
        let d = c2 - m2;
        d * d + 8.0 * g2 * (c2 + m2) + 16.0 * g2 * g2 + 4.0 * self.k * self.k
    }

    /// Eigenfrequencies in closed form.
    pub fn roots(&self) -> Roots {
        if self.is_real() {
            self.roots_real()
        } else {
            self.roots_complex()
        }
    }

    fn roots_real(&self) -> Roots {
        let (t, p) = self.secular();
        let (t, p) = (t.re, p.re);
        let s_plus = 0.5 * (t + self.discriminant().re.max(0.0).sqrt());
        let s_minus = if s_plus > 0.0 { p / s_plus } else { 0.0 };
        let plus = C64::new(s_plus.max(0.0).sqrt(), 0.0);
        let minus = if s_minus >= 0.0 { C64::new(s_minus.sqrt(), 0.0) } else { C64::new(0.0, (-s_minus).sqrt()) };
        Roots { plus, minus, lower_real: s_minus >= 0.0 }
    }

    fn roots_complex(&self) -> Roots {
        let (t, p) = self.secular();
        let sq = self.discriminant().sqrt();
        let big = if (t + sq).norm() >= (t - sq).norm() { 0.5 * (t + sq) } else { 0.5 * (t - sq) };
        let other = if big.norm() > 0.0 { p / big } else { C64::new(0.0, 0.0) };
        let (a, b) = (big.sqrt(), other.sqrt());
        let (plus, minus) = order(a, b);
        Roots { plus, minus, lower_real: true }
    }

    /// x_c/x_m for the null vector of M(ω), read from the larger row.
    pub fn ratio(&self, w: C64) -> Result<C64> {
        let m = self.matrix(w);
        let row = if m[0][0].norm() + m[0][1].norm() >= m[1][0].norm() + m[1][1].norm() { m[0] } else { m[1] };
        let (a, b) = (row[0], row[1]);
        let scale = a.norm().max(b.norm());
        if scale == 0.0 || a.norm() <= 1e-15 * scale {
            return Err(Error::Pole(format!("amplitude ratio diverges at ω = {w}: the mode is purely cavity-like")));
        }
        Ok(-b / a)
    }

    /// Unit-norm null vector (x_c, x_m) of M(ω).
    pub fn null_vector(&self, w: C64) -> Vector2<C64> {
        let m = self.matrix(w);
        let row = if m[0][0].norm() + m[0][1].norm() >= m[1][0].norm() + m[1][1].norm() { m[0] } else { m[1] };
        let v = if row[0].norm() == 0.0 && row[1].norm() == 0.0 {
            // M vanishes: both oscillators degenerate and uncoupled
            Vector2::new(C64::new(1.0, 0.0), C64::new(0.0, 0.0))
        } else {
            Vector2::new(row[1], -row[0])
        };
        v / C64::new(v.norm(), 0.0)
    }

    /// Solves M(ω)·x = f.
    pub fn solve(&self, w: C64, f: [C64; 2]) -> Result<[C64; 2]> {
        let m = self.matrix(w);
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let scale = m[0][0].norm() * m[1][1].norm() + m[0][1].norm() * m[1][0].norm();
        if det.norm() <= 1e-12 * scale {
            return Err(Error::Pole(format!("response is singular at ω = {w}")));
        }
        Ok([(m[1][1] * f[0] - m[0][1] * f[1]) / det, (m[0][0] * f[1] - m[1][0] * f[0]) / det])
    }

    /// Eigenfrequencies from the first-order state-space form, independent
    /// of the closed-form roots. Returns the two roots with Re ω ≥ 0.
    pub fn state_space_roots(&self) -> Result<(C64, C64)> {
        let mut a = Matrix4::<C64>::zeros();
        a[(0, 2)] = C64::new(1.0, 0.0);
        a[(1, 3)] = C64::new(1.0, 0.0);
        a[(2, 0)] = -self.omega_c * self.omega_c;
        a[(2, 1)] = -self.k;
        a[(3, 0)] = -self.k;
        a[(3, 1)] = -self.omega_m * self.omega_m;
        a[(2, 3)] = 2.0 * self.g;
        a[(3, 2)] = -2.0 * self.g;
        let lambdas: Vec<C64> = if self.is_real() {
            a.map(|z| z.re).complex_eigenvalues().iter().copied().collect()
        } else {
            a.eigenvalues()
                .ok_or_else(|| Error::Eigen("complex Schur did not converge".into()))?
                .iter()
                .copied()
                .collect()
        };
        let mut ws: Vec<C64> = lambdas.iter().map(|l| I * l).collect();
        // keep the physical half: Re ω > 0, or the +i root of a purely
        // imaginary pair
        ws.sort_by(|x, y| y.re.partial_cmp(&x.re).unwrap().then(y.im.partial_cmp(&x.im).unwrap()));
        let (a, b) = order(ws[0], ws[1]);
        Ok((a, b))
    }
}

/// Orders two frequencies by real part, ties by imaginary part.
fn order(a: C64, b: C64) -> (C64, C64) {
    if (a.re, a.im) >= (b.re, b.im) {
        (a, b)
    } else {
        (b, a)
    }
}
