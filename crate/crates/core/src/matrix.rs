//! Small dense complex-matrix helpers on top of `ndarray`.
//!
//! Everything in this crate works with `Array2<Complex64>` ("CMat") and
//! `Array1<Complex64>` ("CVec"). The helpers here are the handful of
//! operations ndarray does not ship directly: Kronecker products, conjugate
//! transpose, phase-insensitive comparison, and canonical forms used as hash
//! keys during search.

use ndarray::{Array1, Array2};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMat = Array2<Complex64>;
pub type CVec = Array1<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// n x n identity.
pub fn identity(n: usize) -> CMat {
    Array2::eye(n)
}

/// Kronecker product, `a` on the high bits: `kron(A, B)[i*m+k, j*m+l] = A[i,j] B[k,l]`.
pub fn kron(a: &CMat, b: &CMat) -> CMat {
    let (ar, ac) = a.dim();
    let (br, bc) = b.dim();
    let mut out = Array2::from_elem((ar * br, ac * bc), ZERO);
    for i in 0..ar {
        for j in 0..ac {
            let aij = a[[i, j]];
            if aij == ZERO {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out[[i * br + k, j * bc + l]] = aij * b[[k, l]];
                }
            }
        }
    }
    out
}

/// Conjugate transpose.
pub fn dagger(a: &CMat) -> CMat {
    let mut out = a.t().to_owned();
    out.mapv_inplace(|z| z.conj());
    out
}

/// Largest entrywise absolute difference.
pub fn max_abs_diff(a: &CMat, b: &CMat) -> f64 {
    debug_assert_eq!(a.dim(), b.dim());
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Entrywise equality within `eps`.
pub fn approx_eq(a: &CMat, b: &CMat, eps: f64) -> bool {
    a.dim() == b.dim() && max_abs_diff(a, b) <= eps
}

/// `|tr(A^dag B)| / n`: 1.0 iff A and B are equal up to a global phase
/// (for unitary inputs).
pub fn phase_fidelity(a: &CMat, b: &CMat) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.nrows(),
            got: b.nrows(),
        });
    }
    let n = a.nrows() as f64;
    let tr: Complex64 = a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum();
    Ok(tr.norm() / n)
}

/// Decide `B ~ phase * A` and return the aligning phase (so `A * phase ~= B`).
///
/// Fidelity test: `|tr(A^dag B)| / n >= 1 - eps`. The returned phase is
/// `tr(A^dag B)` normalized to unit modulus; it is meaningful only when the
/// first component of the pair is true.
pub fn equal_up_to_phase(a: &CMat, b: &CMat, eps: f64) -> Result<(bool, Complex64)> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.nrows(),
            got: b.nrows(),
        });
    }
    let tr: Complex64 = a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum();
    let n = a.nrows() as f64;
    let fid = tr.norm() / n;
    let phase = if tr.norm() > 0.0 { tr / tr.norm() } else { ONE };
    Ok((fid >= 1.0 - eps, phase))
}

/// Max deviation from unitarity, `max |A^dag A - I|`.
pub fn unitarity_defect(a: &CMat) -> f64 {
    let n = a.nrows();
    max_abs_diff(&dagger(a).dot(a), &identity(n))
}

/// Grid used by canonical float keys: every real component is snapped to an
/// integer multiple of 2^-20 so that keys are stable under ~1e-7 noise.
pub const CANON_GRID: f64 = 1.0 / (1 << 20) as f64;

fn snap(x: f64) -> i64 {
    (x / CANON_GRID).round() as i64
}

/// Canonical byte key of a unitary up to global phase.
///
/// The matrix is divided by the phase of its first entry of modulus > 1e-6
/// (scanned row-major), making that entry real positive, then every component
/// is snapped to the 2^-20 grid and serialized. Two unitaries that differ by
/// a global phase (and by < ~1e-7 noise) produce identical keys.
pub fn canonical_unitary_key(a: &CMat) -> Vec<u8> {
    let pivot = a.iter().find(|z| z.norm() > 1e-6);
    let phase = match pivot {
        Some(z) => z / z.norm(),
        None => ONE,
    };
    let mut out = Vec::with_capacity(a.len() * 16);
    for z in a.iter() {
        let w = z / phase;
        out.extend_from_slice(&snap(w.re).to_le_bytes());
        out.extend_from_slice(&snap(w.im).to_le_bytes());
    }
    out
}

/// Canonical byte key of a state vector up to global phase (same grid).
pub fn canonical_state_key(v: &CVec) -> Vec<u8> {
    let pivot = v.iter().find(|z| z.norm() > 1e-6);
    let phase = match pivot {
        Some(z) => z / z.norm(),
        None => ONE,
    };
    let mut out = Vec::with_capacity(v.len() * 16);
    for z in v.iter() {
        let w = z / phase;
        out.extend_from_slice(&snap(w.re).to_le_bytes());
        out.extend_from_slice(&snap(w.im).to_le_bytes());
    }
    out
}

/// Build a matrix from a nested slice literal (test/reference convenience).
pub fn from_rows(rows: &[&[Complex64]]) -> CMat {
    let r = rows.len();
    let c = rows[0].len();
    let mut out = Array2::from_elem((r, c), ZERO);
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row.len(), c);
        for (j, z) in row.iter().enumerate() {
            out[[i, j]] = *z;
        }
    }
    out
}

/// Diagonal matrix from entries.
pub fn diag(entries: &[Complex64]) -> CMat {
    let n = entries.len();
    let mut out = Array2::from_elem((n, n), ZERO);
    for (i, z) in entries.iter().enumerate() {
        out[[i, i]] = *z;
    }
    out
}
