//! Adjacency spectra and the quantities derived from them.

use serde::{Deserialize, Serialize};

use crate::eigen::symmetric_eigenvalues;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::inertia::{exact_inertia, Inertia};

/// Relative tolerance for the trace identity `s+ + s- = 2m`, scaled by `n^2`.
pub const TRACE_TOLERANCE: f64 = 1e-8;

/// Zero-classification tolerance `1e-8 * max(1, max degree)`.
pub fn default_zero_tolerance(g: &Graph) -> f64 {
    1e-8 * g.max_degree().max(1) as f64
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    /// Adjacency eigenvalues, descending.
    pub eigenvalues: Vec<f64>,
    pub inertia: Inertia,
    pub zero_tolerance: f64,
    /// Whether the sign counts at `zero_tolerance` had to be corrected to the
    /// exact inertia.
    pub reconciled: bool,
}

/// Adjacency eigenvalues of `g`, descending, without sign classification.
pub fn adjacency_eigenvalues(g: &Graph) -> Result<Vec<f64>> {
    symmetric_eigenvalues(g.adjacency_matrix(), g.order()).ok_or_else(|| Error::NoConvergence {
        g6: to_graph6(g),
    })
}

/// Counts eigenvalues above `tol`, below `-tol`, and in between.
pub fn sign_counts(eigenvalues: &[f64], tol: f64) -> Inertia {
    let positive = eigenvalues.iter().filter(|&&x| x > tol).count();
    let negative = eigenvalues.iter().filter(|&&x| x < -tol).count();
    Inertia::new(positive, negative, eigenvalues.len() - positive - negative)
}

/// Eigenvalues plus inertia. Sign counts at `tol` are reconciled against the
/// exact inertia: when they differ, the exact counts are adopted provided
/// every eigenvalue that changes class lies within `10 * tol` of zero.
pub fn eigen_decompose(g: &Graph, tol: f64) -> Result<Spectrum> {
    let eigenvalues = adjacency_eigenvalues(g)?;
    let numeric = sign_counts(&eigenvalues, tol);
    let exact = exact_inertia(g);
    if numeric == exact {
        return Ok(Spectrum {
            eigenvalues,
            inertia: exact,
            zero_tolerance: tol,
            reconciled: false,
        });
    }
    let near_zero = |x: f64| x.abs() <= 10.0 * tol;
    let (p, z) = (exact.positive, exact.zero);
    let consistent = eigenvalues.iter().enumerate().all(|(i, &x)| {
        let exact_class = if i < p {
            1
        } else if i < p + z {
            0
        } else {
            -1
        };
        let numeric_class = if x > tol {
            1
        } else if x < -tol {
            -1
        } else {
            0
        };
        exact_class == numeric_class || near_zero(x)
    });
    if !consistent {
        return Err(Error::InertiaMismatch {
            g6: to_graph6(g),
            numeric: numeric.as_tuple(),
            exact: exact.as_tuple(),
        });
    }
    Ok(Spectrum {
        eigenvalues,
        inertia: exact,
        zero_tolerance: tol,
        reconciled: true,
    })
}

/// [`eigen_decompose`] at [`default_zero_tolerance`].
pub fn spectrum(g: &Graph) -> Result<Spectrum> {
    eigen_decompose(g, default_zero_tolerance(g))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralSums {
    pub s_plus: f64,
    pub s_minus: f64,
    pub energy: f64,
    pub mu_max: f64,
    pub mu_min: f64,
}

/// Power sums over the `pi` leading and `nu` trailing eigenvalues. Eigenvalues
/// classified as zero contribute to neither sum; the trace identity
/// `s+ + s- = 2m` must then hold to `1e-8 n^2`.
pub fn spectral_sums(spec: &Spectrum, m: usize) -> Result<SpectralSums> {
    let ev = &spec.eigenvalues;
    let n = ev.len();
    let Inertia {
        positive, negative, ..
    } = spec.inertia;
    let s_plus: f64 = ev[..positive].iter().map(|x| x * x).sum();
    let s_minus: f64 = ev[n - negative..].iter().map(|x| x * x).sum();
    let sums = SpectralSums {
        s_plus,
        s_minus,
        energy: ev.iter().map(|x| x.abs()).sum(),
        mu_max: ev[0],
        mu_min: ev[n - 1],
    };
    let two_m = 2 * m;
    if (s_plus + s_minus - two_m as f64).abs() > TRACE_TOLERANCE * (n * n) as f64 {
        return Err(Error::TraceIdentity {
            sum: s_plus + s_minus,
            two_m,
        });
    }
    Ok(sums)
}

/// Closed-form conference-graph quantities on `n = 4t + 1` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConferenceForms {
    /// `s+(G) = s+(complement)`.
    pub s_plus_each: f64,
    /// `s+(G) + s+(complement)`.
    pub pair_sum: f64,
    /// `E(G) + E(complement)`.
    pub energy_pair: f64,
}

/// Conference spectrum `(n-1)/2`, `((sqrt n - 1)/2)` and `(-(sqrt n + 1)/2)`,
/// the latter two each with multiplicity `(n-1)/2`.
pub fn conference_spectrum(n: usize) -> Result<Vec<f64>> {
    if n < 5 || n % 4 != 1 {
        return Err(Error::InvalidConferenceOrder(n));
    }
    let r = (n as f64).sqrt();
    let half = (n - 1) / 2;
    let mut out = vec![(n - 1) as f64 / 2.0];
    out.extend(std::iter::repeat_n((r - 1.0) / 2.0, half));
    out.extend(std::iter::repeat_n(-(r + 1.0) / 2.0, half));
    Ok(out)
}

pub fn conference_closed_form(n: usize) -> Result<ConferenceForms> {
    if n < 5 || n % 4 != 1 {
        return Err(Error::InvalidConferenceOrder(n));
    }
    let nf = n as f64;
    let r = nf.sqrt();
    let s_plus_each = (nf - 1.0).powi(2) / 4.0 + (nf - 1.0) * (nf + 1.0 - 2.0 * r) / 8.0;
    Ok(ConferenceForms {
        s_plus_each,
        pair_sum: (nf - 1.0) * (3.0 * nf - 1.0 - 2.0 * r) / 4.0,
        energy_pair: (nf - 1.0) * (1.0 + r),
    })
}
