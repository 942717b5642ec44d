//! Gate synthesis: diagonal gates by Walsh transform, multiply-controlled
//! gates, single-logical-qubit rotations, and controlled unitaries.
//!
//! Diagonal synthesis is exact: a target `diag(e^{i phi_j})` on `N` logical
//! qubits expands over Z-string characters, every nonzero coefficient becomes
//! one many-body rotation step (through the cheapest Majorana support), and
//! the empty-set coefficient becomes the global prefactor. Everything else
//! here is built from that plus exact single-qubit rotations.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::catalog;
use crate::encoding::Encoding;
use crate::error::{Error, Result};
use crate::matrix::{identity, kron, CMat};
use crate::program::{Angle, MajoranaProgram, MajoranaStep};

/// Coefficients below this are dropped from synthesized programs.
pub const PRUNE_TOL: f64 = 1e-12;

/// Walsh spectrum of a phase vector: `c[mask] = 2^-N sum_j phi_j chi_mask(j)`
/// with `chi_mask(j) = (-1)^{popcount(j & mask)}`. Phases are first reduced
/// mod 2pi. Index 0 is the global-phase coefficient.
pub fn walsh_coefficients(phases: &[f64]) -> Result<Vec<f64>> {
    let dim = phases.len();
    if dim == 0 || dim & (dim - 1) != 0 {
        return Err(Error::BadParams {
            name: "walsh".into(),
            reason: format!("phase vector length {dim} is not a power of two"),
        });
    }
    let reduced: Vec<f64> = phases.iter().map(|p| p.rem_euclid(2.0 * PI)).collect();
    let scale = 1.0 / dim as f64;
    let mut out = vec![0.0; dim];
    for (mask, c) in out.iter_mut().enumerate() {
        let mut acc = 0.0;
        for (j, p) in reduced.iter().enumerate() {
            let chi = if ((j & mask).count_ones()) % 2 == 0 {
                1.0
            } else {
                -1.0
            };
            acc += chi * p;
        }
        *c = acc * scale;
    }
    Ok(out)
}

/// Synthesize `diag(e^{i phases[j]})` on `num_logical` qubits.
///
/// Emits at most `2^N - 1` steps (one per nonzero nonempty-support Walsh
/// coefficient, each `|c| > PRUNE_TOL`), with angle `-c_S` on the Majorana
/// support chosen by [`Encoding::zstring_to_majorana_indices`]; the
/// prefactor is `e^{i c_0}`.
pub fn synth_diagonal(num_logical: usize, phases: &[f64]) -> Result<MajoranaProgram> {
    let enc = Encoding::new(num_logical);
    if phases.len() != enc.logical_dimension() {
        return Err(Error::DimensionMismatch {
            expected: enc.logical_dimension(),
            got: phases.len(),
        });
    }
    let coeffs = walsh_coefficients(phases)?;
    let mut prog = MajoranaProgram::new(enc.num_majoranas())
        .with_prefactor(Complex64::from_polar(1.0, coeffs[0]));
    for (mask, &c_s) in coeffs.iter().enumerate().skip(1) {
        if c_s.abs() <= PRUNE_TOL {
            continue;
        }
        let support: Vec<usize> = (1..=num_logical)
            .filter(|&k| mask >> (k - 1) & 1 == 1)
            .collect();
        let indices = enc.zstring_to_majorana_indices(&support)?;
        prog.push_step(MajoranaStep::new(indices, Angle::Float(-c_s))?);
    }
    Ok(prog)
}

/// C^n-phase: `diag(1,...,1,e^{i phi})` on `n+1` logical qubits.
pub fn synth_cn_phase(n: usize, phi: f64) -> Result<MajoranaProgram> {
    if n == 0 {
        return Err(Error::BadParams {
            name: "cn_phase".into(),
            reason: "need at least one control (n >= 1)".into(),
        });
    }
    let dim = 1usize << (n + 1);
    let mut phases = vec![0.0; dim];
    phases[dim - 1] = phi;
    synth_diagonal(n + 1, &phases)
}

/// C^n-Z on `n+1` logical qubits.
///
/// The all-ones phase pattern has the closed-form spectrum
/// `c_mask = (-1)^popcount(mask) pi / 2^(n+1)`, so the steps are built with
/// symbolic angles instead of going through the float Walsh transform. The
/// resulting matrix is bit-identical to `synth_cn_phase(n, PI)`.
pub fn synth_cn_z(n: usize) -> Result<MajoranaProgram> {
    if n == 0 {
        return Err(Error::BadParams {
            name: "cn_z".into(),
            reason: "need at least one control (n >= 1)".into(),
        });
    }
    let num_logical = n + 1;
    let enc = Encoding::new(num_logical);
    let dim = 1usize << num_logical;
    let mut prog = MajoranaProgram::new(enc.num_majoranas())
        .with_prefactor(Complex64::from_polar(1.0, PI / dim as f64));
    for mask in 1..dim {
        let support: Vec<usize> = (1..=num_logical)
            .filter(|&k| mask >> (k - 1) & 1 == 1)
            .collect();
        let indices = enc.zstring_to_majorana_indices(&support)?;
        // step angle is -c_mask
        let numerator = if mask.count_ones() % 2 == 0 { -1 } else { 1 };
        prog.push_step(MajoranaStep::new(
            indices,
            Angle::pi(numerator, dim as i64),
        )?);
    }
    Ok(prog)
}

/// Exact `Rz(theta)` on logical qubit `k` of `num_logical`.
pub fn rz_on_logical(num_logical: usize, k: usize, theta: f64) -> Result<MajoranaProgram> {
    let enc = Encoding::new(num_logical);
    if k == 0 || k > num_logical {
        return Err(Error::IndexOutOfRange {
            index: k,
            what: "logical qubit",
            max: num_logical,
        });
    }
    let mut prog = MajoranaProgram::new(enc.num_majoranas());
    prog.push_step(MajoranaStep::new(
        vec![2 * k + 1, 2 * k + 2],
        Angle::Float(theta / 2.0),
    )?);
    Ok(prog)
}

/// Exact `Rx(theta)` on logical qubit `k`: one 2k-body rotation on Majoranas
/// `{2, ..., 2k+1}`.
pub fn rx_on_logical(num_logical: usize, k: usize, theta: f64) -> Result<MajoranaProgram> {
    let enc = Encoding::new(num_logical);
    if k == 0 || k > num_logical {
        return Err(Error::IndexOutOfRange {
            index: k,
            what: "logical qubit",
            max: num_logical,
        });
    }
    let mut prog = MajoranaProgram::new(enc.num_majoranas());
    prog.push_step(MajoranaStep::new(
        (2..=2 * k + 1).collect(),
        Angle::Float(theta / 2.0),
    )?);
    Ok(prog)
}

/// Exact Hadamard on logical qubit `k`: `i * Rz(pi/2) Rx(pi/2) Rz(pi/2)`,
/// three rotation steps at angle pi/4 each.
pub fn hadamard_on_logical(num_logical: usize, k: usize) -> Result<MajoranaProgram> {
    let enc = Encoding::new(num_logical);
    if k == 0 || k > num_logical {
        return Err(Error::IndexOutOfRange {
            index: k,
            what: "logical qubit",
            max: num_logical,
        });
    }
    let rz_quarter = MajoranaStep::new(vec![2 * k + 1, 2 * k + 2], Angle::pi(1, 4))?;
    let mut prog =
        MajoranaProgram::new(enc.num_majoranas()).with_prefactor(Complex64::new(0.0, 1.0));
    prog.push_step(rz_quarter.clone());
    prog.push_step(MajoranaStep::new(
        (2..=2 * k + 1).collect(),
        Angle::pi(1, 4),
    )?);
    prog.push_step(rz_quarter);
    Ok(prog)
}

/// C^n-NOT on `n+1` logical qubits: Hadamards on the target around C^n-Z.
/// `target` is 1-based; every other logical qubit is a control.
pub fn synth_cn_not(n: usize, target: usize) -> Result<MajoranaProgram> {
    let num_logical = n + 1;
    if target == 0 || target > num_logical {
        return Err(Error::IndexOutOfRange {
            index: target,
            what: "target logical qubit",
            max: num_logical,
        });
    }
    let h = hadamard_on_logical(num_logical, target)?;
    let cnz = synth_cn_z(n)?;
    h.then(&cnz)?.then(&h)
}

/// C^n-SWAP on `n+2` logical qubits: swaps logicals 1 and 2 when the other
/// `n` qubits are all 1 (three C^{n+1}-NOTs with targets 1, 2, 1).
pub fn synth_cn_swap(n: usize) -> Result<MajoranaProgram> {
    if n == 0 {
        return Err(Error::BadParams {
            name: "cn_swap".into(),
            reason: "need at least one control (n >= 1)".into(),
        });
    }
    let t1 = synth_cn_not(n + 1, 1)?;
    let t2 = synth_cn_not(n + 1, 2)?;
    t1.then(&t2)?.then(&t1)
}

/// Reference matrix for C^n-NOT as produced by [`synth_cn_not`].
pub fn cn_not_matrix(n: usize, target: usize) -> CMat {
    let num_logical = n + 1;
    let dim = 1usize << num_logical;
    let tbit = 1usize << (target - 1);
    let controls: usize = (dim - 1) ^ tbit;
    let mut m = CMat::from_elem((dim, dim), Complex64::new(0.0, 0.0));
    for j in 0..dim {
        let out = if j & controls == controls {
            j ^ tbit
        } else {
            j
        };
        m[[out, j]] = Complex64::new(1.0, 0.0);
    }
    m
}

/// Reference matrix for C^n-SWAP as produced by [`synth_cn_swap`].
pub fn cn_swap_matrix(n: usize) -> CMat {
    let num_logical = n + 2;
    let dim = 1usize << num_logical;
    let controls: usize = ((1usize << n) - 1) << 2;
    let mut m = CMat::from_elem((dim, dim), Complex64::new(0.0, 0.0));
    for j in 0..dim {
        let out = if j & controls == controls {
            let b1 = j & 1;
            let b2 = (j >> 1) & 1;
            (j & !3) | (b1 << 1) | b2
        } else {
            j
        };
        m[[out, j]] = Complex64::new(1.0, 0.0);
    }
    m
}

/// Controlled-unitary synthesis on two logical qubits (control = logical 2,
/// target = logical 1) for the target gate `U = Rz(beta) Ry(gamma) Rz(delta)`.
///
/// Uses the standard three-rotation split `A = Rz(beta + pi/2) Rx(gamma/2)`,
/// `B = Rx(-gamma/2) Rz(-(beta+delta)/2)`, `C = Rz((delta-beta-pi)/2)` with
/// `ABC = I`; interleaving with controlled-Y gives `A Y B Y C =
/// Rz(beta) Ry(gamma) Rz(delta)` exactly, so no phase-correction gate is
/// needed. (Interleaving with CNOT or CZ does NOT close: X- or Z-conjugation
/// leaves a residual phase that Y-conjugation cancels.)
pub fn synth_controlled_unitary(beta: f64, gamma: f64, delta: f64) -> Result<MajoranaProgram> {
    let cy = catalog::find_entry("cy")?.program(&[])?;

    // C = Rz((delta - beta - pi)/2)
    let c_part = rz_on_logical(2, 1, (delta - beta - PI) / 2.0)?;
    // B = Rx(-gamma/2) Rz(-(beta+delta)/2): Rz first in application order
    let b_part =
        rz_on_logical(2, 1, -(beta + delta) / 2.0)?.then(&rx_on_logical(2, 1, -gamma / 2.0)?)?;
    // A = Rz(beta + pi/2) Rx(gamma/2): Rx first in application order
    let a_part = rx_on_logical(2, 1, gamma / 2.0)?.then(&rz_on_logical(2, 1, beta + FRAC_PI_2)?)?;

    c_part.then(&cy)?.then(&b_part)?.then(&cy)?.then(&a_part)
}

/// Reference matrix for [`synth_controlled_unitary`]: `|0><0| (x) I +
/// |1><1| (x) Rz(beta) Ry(gamma) Rz(delta)` with the control on logical 2.
pub fn controlled_unitary_matrix(beta: f64, gamma: f64, delta: f64) -> CMat {
    let u = catalog::rz_matrix(beta)
        .dot(&catalog::ry_matrix(gamma))
        .dot(&catalog::rz_matrix(delta));
    let mut m = identity(4);
    for i in 0..2 {
        for j in 0..2 {
            m[[2 + i, 2 + j]] = u[[i, j]];
        }
    }
    m
}

/// Embed a gate on the first `small` logical qubits of `big` logical qubits
/// (identity on the rest): reference-matrix helper `I (x) U`.
pub fn embed_low(u_small: &CMat, extra_qubits: usize) -> CMat {
    kron(&identity(1 << extra_qubits), u_small)
}
