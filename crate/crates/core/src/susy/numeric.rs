//! Partner-potential spectra on a finite-difference grid.
//!
//! `H = p^2/2 + V` on `[a, b]` with Dirichlet boundaries and `N` interior
//! points, `h = (b - a)/(N + 1)`, becomes the tridiagonal matrix with diagonal
//! `1/h^2 + V(x_j)` and off-diagonal `-1/(2 h^2)`. Eigenvalues come from
//! Sturm-sequence bisection.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("grid needs at least 3 interior points, got {0}")]
    GridTooSmall(usize),
    #[error("domain [{0}, {1}] is not a finite interval")]
    BadDomain(f64, f64),
    #[error("potential is not finite at x = {0}")]
    NonFinite(f64),
    #[error("asked for {requested} eigenvalues of a {size}x{size} matrix")]
    TooManyLevels { requested: usize, size: usize },
    #[error("unknown superpotential {0:?} (expected quadratic, linear, cubic or zero)")]
    UnknownSuperpotential(String),
}

/// Catalog of superpotentials with analytic derivatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Superpotential {
    /// `U = x^2`
    Quadratic,
    /// `U = 2x`
    Linear,
    /// `U = x^3`
    Cubic,
    /// `U = 0`
    Zero,
}

impl Superpotential {
    pub const ALL: [Superpotential; 4] = [
        Superpotential::Quadratic,
        Superpotential::Linear,
        Superpotential::Cubic,
        Superpotential::Zero,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Superpotential::Quadratic => "quadratic",
            Superpotential::Linear => "linear",
            Superpotential::Cubic => "cubic",
            Superpotential::Zero => "zero",
        }
    }

    pub fn u(self, x: f64) -> f64 {
        match self {
            Superpotential::Quadratic => x * x,
            Superpotential::Linear => 2.0 * x,
            Superpotential::Cubic => x * x * x,
            Superpotential::Zero => 0.0,
        }
    }

    pub fn du(self, x: f64) -> f64 {
        match self {
            Superpotential::Quadratic => 2.0 * x,
            Superpotential::Linear => 2.0,
            Superpotential::Cubic => 3.0 * x * x,
            Superpotential::Zero => 0.0,
        }
    }

    pub fn d2u(self, x: f64) -> f64 {
        match self {
            Superpotential::Quadratic => 2.0,
            Superpotential::Linear | Superpotential::Zero => 0.0,
            Superpotential::Cubic => 6.0 * x,
        }
    }

    /// Largest relative disagreement between the analytic `U'`, `U''` and
    /// central differences of `U`, `U'` at the sample points.
    pub fn derivative_consistency(self, samples: &[f64]) -> f64 {
        let step = 1e-4;
        samples
            .iter()
            .map(|&x| {
                let d1 = (self.u(x + step) - self.u(x - step)) / (2.0 * step);
                let d2 = (self.du(x + step) - self.du(x - step)) / (2.0 * step);
                let e1 = (d1 - self.du(x)).abs() / self.du(x).abs().max(1.0);
                let e2 = (d2 - self.d2u(x)).abs() / self.d2u(x).abs().max(1.0);
                e1.max(e2)
            })
            .fold(0.0, f64::max)
    }

    /// Exact levels of `(p^2/2 + V-, p^2/2 + V+)` on the whole line, when known.
    pub fn analytic_levels(self, k: usize) -> Option<(Vec<f64>, Vec<f64>)> {
        match self {
            Superpotential::Quadratic => Some((
                (1..=k).map(|n| n as f64).collect(),
                (0..k).map(|n| n as f64).collect(),
            )),
            _ => None,
        }
    }
}

impl fmt::Display for Superpotential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Superpotential {
    type Err = SpectrumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Superpotential::ALL
            .into_iter()
            .find(|u| u.name() == s)
            .ok_or_else(|| SpectrumError::UnknownSuperpotential(s.to_string()))
    }
}

/// `V-+(x) = U'(x)^2/8 +- U''(x)/4`.
#[derive(Debug, Clone, Copy)]
pub struct PartnerPotentials {
    pub superpotential: Superpotential,
}

impl PartnerPotentials {
    pub fn minus(&self, x: f64) -> f64 {
        let u = self.superpotential;
        u.du(x).powi(2) / 8.0 + u.d2u(x) / 4.0
    }

    pub fn plus(&self, x: f64) -> f64 {
        let u = self.superpotential;
        u.du(x).powi(2) / 8.0 - u.d2u(x) / 4.0
    }
}

pub fn partner_potentials(u: Superpotential) -> PartnerPotentials {
    PartnerPotentials { superpotential: u }
}

/// A real symmetric tridiagonal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Tridiagonal {
    pub diag: Vec<f64>,
    /// `off[j]` couples rows `j` and `j + 1`.
    pub off: Vec<f64>,
}

impl Tridiagonal {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Self {
        assert_eq!(off.len() + 1, diag.len().max(1), "off-diagonal length");
        Tridiagonal { diag, off }
    }

    pub fn size(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues strictly below `lambda`.
    fn count_below(&self, lambda: f64) -> usize {
        let mut count = 0;
        let mut q = 1.0;
        for j in 0..self.diag.len() {
            let coupling = if j == 0 {
                0.0
            } else {
                self.off[j - 1] * self.off[j - 1] / q
            };
            q = self.diag[j] - lambda - coupling;
            if q == 0.0 {
                q = -f64::EPSILON * (self.diag[j].abs() + lambda.abs()).max(f64::MIN_POSITIVE);
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn gershgorin(&self) -> (f64, f64) {
        let n = self.diag.len();
        (0..n).fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), j| {
            let left = if j > 0 { self.off[j - 1].abs() } else { 0.0 };
            let right = if j + 1 < n { self.off[j].abs() } else { 0.0 };
            (
                lo.min(self.diag[j] - left - right),
                hi.max(self.diag[j] + left + right),
            )
        })
    }
}

pub fn discretize(
    v: impl Fn(f64) -> f64,
    domain: (f64, f64),
    n: usize,
) -> Result<Tridiagonal, SpectrumError> {
    let (a, b) = domain;
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(SpectrumError::BadDomain(a, b));
    }
    if n < 3 {
        return Err(SpectrumError::GridTooSmall(n));
    }
    let h = (b - a) / (n + 1) as f64;
    let kinetic = 1.0 / (h * h);
    let diag = (1..=n)
        .map(|j| {
            let x = a + j as f64 * h;
            let value = v(x);
            if value.is_finite() {
                Ok(kinetic + value)
            } else {
                Err(SpectrumError::NonFinite(x))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Tridiagonal {
        diag,
        off: vec![-0.5 * kinetic; n - 1],
    })
}

/// The `k` smallest eigenvalues in ascending order.
pub fn lowest_eigenvalues(t: &Tridiagonal, k: usize) -> Result<Vec<f64>, SpectrumError> {
    if k > t.size() {
        return Err(SpectrumError::TooManyLevels {
            requested: k,
            size: t.size(),
        });
    }
    let (lo0, hi0) = t.gershgorin();
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let (mut lo, mut hi) = (out.last().copied().unwrap_or(lo0).max(lo0), hi0);
        // count_below(lo) <= i < count_below(hi) throughout
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if t.count_below(mid) > i {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumConfig {
    pub superpotential: Superpotential,
    pub domain: (f64, f64),
    pub grid: usize,
    pub levels: usize,
    pub tol: f64,
}

impl Default for SpectrumConfig {
    fn default() -> Self {
        SpectrumConfig {
            superpotential: Superpotential::Quadratic,
            domain: (-10.0, 10.0),
            grid: 2000,
            levels: 6,
            tol: 1e-3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PairingKind {
    /// One spectrum has an extra lowest level near zero.
    Shifted,
    /// Level `n` of one spectrum against level `n` of the other.
    Direct,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairedLevels {
    pub error: f64,
    pub h_minus: f64,
    pub h_plus: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct UnpairedLevel {
    pub energy: f64,
    pub side: &'static str,
}

/// Keys are declared in sorted order so the JSON text is key-sorted.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub convention: &'static str,
    pub domain: (f64, f64),
    pub grid: usize,
    pub h_minus: Vec<f64>,
    pub h_plus: Vec<f64>,
    pub levels: usize,
    /// Largest deviation from the exact whole-line levels, when known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_analytic_error: Option<f64>,
    pub max_pairing_error: f64,
    pub pairing: PairingKind,
    pub pairs: Vec<PairedLevels>,
    pub status: crate::laws::Status,
    pub superpotential: Superpotential,
    pub tol: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unpaired: Option<UnpairedLevel>,
}

pub const SPECTRUM_CONVENTION: &str =
    "H- = p^2/2 + U'^2/8 + U''/4 (top-left block, sigma_z = diag(1,-1)); H+ = p^2/2 + U'^2/8 - U''/4";

pub fn spectral_pairing_report(cfg: &SpectrumConfig) -> Result<SpectrumReport, SpectrumError> {
    let v = partner_potentials(cfg.superpotential);
    let minus = discretize(|x| v.minus(x), cfg.domain, cfg.grid)?;
    let plus = discretize(|x| v.plus(x), cfg.domain, cfg.grid)?;
    let (h_minus, h_plus) = std::thread::scope(|s| {
        let m = s.spawn(|| lowest_eigenvalues(&minus, cfg.levels));
        let p = lowest_eigenvalues(&plus, cfg.levels);
        (m.join().expect("eigenvalue worker"), p)
    });
    let (h_minus, h_plus) = (h_minus?, h_plus?);

    let near_zero = |e: Option<&f64>| e.is_some_and(|e| e.abs() < cfg.tol);
    let (pairing, unpaired, pairs): (_, _, Vec<PairedLevels>) =
        match (near_zero(h_minus.first()), near_zero(h_plus.first())) {
            (false, true) => (
                PairingKind::Shifted,
                Some(UnpairedLevel {
                    energy: h_plus[0],
                    side: "h_plus",
                }),
                h_minus
                    .iter()
                    .zip(&h_plus[1..])
                    .map(|(&m, &p)| pair(m, p))
                    .collect(),
            ),
            (true, false) => (
                PairingKind::Shifted,
                Some(UnpairedLevel {
                    energy: h_minus[0],
                    side: "h_minus",
                }),
                h_minus[1..]
                    .iter()
                    .zip(&h_plus)
                    .map(|(&m, &p)| pair(m, p))
                    .collect(),
            ),
            _ => (
                PairingKind::Direct,
                None,
                h_minus
                    .iter()
                    .zip(&h_plus)
                    .map(|(&m, &p)| pair(m, p))
                    .collect(),
            ),
        };
    let max_pairing_error = pairs.iter().map(|p| p.error).fold(0.0, f64::max);
    let max_analytic_error = cfg
        .superpotential
        .analytic_levels(cfg.levels)
        .map(|(em, ep)| {
            h_minus
                .iter()
                .zip(&em)
                .chain(h_plus.iter().zip(&ep))
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        });
    let status = if max_pairing_error <= cfg.tol {
        crate::laws::Status::Pass
    } else {
        crate::laws::Status::Fail
    };
    Ok(SpectrumReport {
        convention: SPECTRUM_CONVENTION,
        domain: cfg.domain,
        grid: cfg.grid,
        h_minus,
        h_plus,
        levels: cfg.levels,
        max_analytic_error,
        max_pairing_error,
        pairing,
        pairs,
        status,
        superpotential: cfg.superpotential,
        tol: cfg.tol,
        unpaired,
    })
}

fn pair(h_minus: f64, h_plus: f64) -> PairedLevels {
    PairedLevels {
        error: (h_minus - h_plus).abs(),
        h_minus,
        h_plus,
    }
}
