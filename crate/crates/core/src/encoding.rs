//! Even-parity logical encoding.
//!
//! `N` logical qubits live inside `N+1` physical fermion modes (so `2(N+1)`
//! Majorana operators). Logical qubit `k` sits on physical qubit `k+1`
//! (Majoranas `{2k+1, 2k+2}`); physical qubit 1 is the parity qubit whose
//! occupation is fixed to the XOR of all logical bits, keeping every code
//! state in the even-parity sector. The encoding isometry is
//! `|l> -> |(l << 1) | parity(l)>` in basis indices.
//!
//! Why qubit 1: a Z on the parity qubit acts as the product of all logical
//! Zs, which pins its position uniquely against the one- and two-logical
//! qubit matrices used throughout the catalog.

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{CMat, CVec, ONE, ZERO};

pub use crate::matrix::equal_up_to_phase;

/// Leakage tolerance for code-space preservation checks.
pub const CODE_SPACE_TOL: f64 = 1e-10;

/// The even-parity logical encoding on `N` logical qubits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Encoding {
    num_logical: usize,
}

fn parity(x: usize) -> usize {
    (x.count_ones() % 2) as usize
}

impl Encoding {
    pub fn new(num_logical: usize) -> Self {
        assert!(num_logical >= 1, "need at least one logical qubit");
        Encoding { num_logical }
    }

    pub fn num_logical(&self) -> usize {
        self.num_logical
    }

    pub fn num_physical(&self) -> usize {
        self.num_logical + 1
    }

    pub fn num_majoranas(&self) -> usize {
        2 * self.num_physical()
    }

    pub fn logical_dimension(&self) -> usize {
        1 << self.num_logical
    }

    pub fn physical_dimension(&self) -> usize {
        1 << self.num_physical()
    }

    /// Physical basis index of logical basis index `l`.
    pub fn encode_index(&self, l: usize) -> Result<usize> {
        if l >= self.logical_dimension() {
            return Err(Error::IndexOutOfRange {
                index: l,
                what: "logical basis state",
                max: self.logical_dimension() - 1,
            });
        }
        Ok((l << 1) | parity(l))
    }

    /// Logical index of a physical index, if it lies in the code space.
    pub fn decode_index(&self, j: usize) -> Option<usize> {
        let l = j >> 1;
        if l < self.logical_dimension() && (j & 1) == parity(l) {
            Some(l)
        } else {
            None
        }
    }

    /// The `2^{N+1} x 2^N` encoding isometry `V` (columns are code states).
    pub fn isometry(&self) -> CMat {
        let mut v = Array2::from_elem((self.physical_dimension(), self.logical_dimension()), ZERO);
        for l in 0..self.logical_dimension() {
            v[[(l << 1) | parity(l), l]] = ONE;
        }
        v
    }

    /// Encode a logical state vector into the physical space.
    pub fn encode_state(&self, logical: &CVec) -> Result<CVec> {
        if logical.len() != self.logical_dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.logical_dimension(),
                got: logical.len(),
            });
        }
        let mut out = CVec::from_elem(self.physical_dimension(), ZERO);
        for l in 0..logical.len() {
            out[(l << 1) | parity(l)] = logical[l];
        }
        Ok(out)
    }

    /// Project a physical state back to the logical space; errors if weight
    /// outside the code space exceeds [`CODE_SPACE_TOL`].
    pub fn decode_state(&self, physical: &CVec) -> Result<CVec> {
        if physical.len() != self.physical_dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.physical_dimension(),
                got: physical.len(),
            });
        }
        let mut out = CVec::from_elem(self.logical_dimension(), ZERO);
        let mut leak = 0.0f64;
        for j in 0..physical.len() {
            match self.decode_index(j) {
                Some(l) => out[l] = physical[j],
                None => leak = leak.max(physical[j].norm()),
            }
        }
        if leak > CODE_SPACE_TOL {
            return Err(Error::NotCodeSpacePreserving {
                leakage: leak,
                tol: CODE_SPACE_TOL,
            });
        }
        Ok(out)
    }

    /// Largest matrix element routing a code state out of the code space.
    pub fn code_space_leakage(&self, u: &CMat) -> Result<f64> {
        if u.nrows() != self.physical_dimension() || u.ncols() != self.physical_dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.physical_dimension(),
                got: u.nrows(),
            });
        }
        let mut leak = 0.0f64;
        for l in 0..self.logical_dimension() {
            let col = (l << 1) | parity(l);
            for j in 0..self.physical_dimension() {
                if self.decode_index(j).is_none() {
                    leak = leak.max(u[[j, col]].norm());
                }
            }
        }
        Ok(leak)
    }

    /// Compress a code-space-preserving physical operator to its logical
    /// `2^N x 2^N` action (`V^dag U V`); errors with the measured leakage if
    /// the operator moves weight out of the code space.
    pub fn restrict_to_logical(&self, u: &CMat) -> Result<CMat> {
        let leak = self.code_space_leakage(u)?;
        if leak > CODE_SPACE_TOL {
            return Err(Error::NotCodeSpacePreserving {
                leakage: leak,
                tol: CODE_SPACE_TOL,
            });
        }
        let dim = self.logical_dimension();
        let mut out = Array2::from_elem((dim, dim), ZERO);
        for l in 0..dim {
            let cl = (l << 1) | parity(l);
            for m in 0..dim {
                let cm = (m << 1) | parity(m);
                out[[l, m]] = u[[cl, cm]];
            }
        }
        Ok(out)
    }

    /// Map a physical Z-support to the equivalent logical Z-support.
    ///
    /// A Z on physical qubit `k >= 2` is Z on logical `k-1`; a Z on the
    /// parity qubit equals the product of all logical Zs, so membership of
    /// qubit 1 toggles the complement.
    pub fn physical_to_logical_zsupport(&self, s_phys: &[usize]) -> Result<Vec<usize>> {
        let q = self.num_physical();
        let mut has_parity = false;
        let mut seen = vec![false; q + 1];
        for &k in s_phys {
            if k == 0 || k > q {
                return Err(Error::IndexOutOfRange {
                    index: k,
                    what: "physical qubit",
                    max: q,
                });
            }
            if seen[k] {
                return Err(Error::EqualIndices(k));
            }
            seen[k] = true;
            if k == 1 {
                has_parity = true;
            }
        }
        let mut out = Vec::new();
        for k in 1..=self.num_logical {
            let direct = seen[k + 1];
            let member = if has_parity { !direct } else { direct };
            if member {
                out.push(k);
            }
        }
        Ok(out)
    }

    /// Majorana index set realizing a logical Z-string.
    ///
    /// The two valid physical supports (with or without the parity qubit) are
    /// complementary; this picks the smaller one, breaking ties toward the
    /// support that excludes physical qubit 1.
    pub fn zstring_to_majorana_indices(&self, s_log: &[usize]) -> Result<Vec<usize>> {
        if s_log.is_empty() {
            return Err(Error::EmptySupport);
        }
        let n = self.num_logical;
        let mut seen = vec![false; n + 1];
        for &k in s_log {
            if k == 0 || k > n {
                return Err(Error::IndexOutOfRange {
                    index: k,
                    what: "logical qubit",
                    max: n,
                });
            }
            if seen[k] {
                return Err(Error::EqualIndices(k));
            }
            seen[k] = true;
        }
        // direct support: physical k+1 per logical k; complement adds qubit 1
        // and inverts the rest
        let direct: Vec<usize> = (1..=n).filter(|&k| seen[k]).map(|k| k + 1).collect();
        let complement: Vec<usize> = std::iter::once(1)
            .chain((1..=n).filter(|&k| !seen[k]).map(|k| k + 1))
            .collect();
        let phys = if complement.len() < direct.len() {
            complement
        } else {
            direct
        };
        let mut majoranas = Vec::with_capacity(2 * phys.len());
        for p in phys {
            majoranas.push(2 * p - 1);
            majoranas.push(2 * p);
        }
        Ok(majoranas)
    }

    /// Check that `u_big` (on this encoding's `N` logical qubits) acts as
    /// `u_small` (on `N-1`) when the top logical qubit is 0: compares the
    /// upper-left `2^{N-1}` block up to a global phase.
    pub fn ancilla_embed_check(
        &self,
        smaller: &Encoding,
        u_small: &CMat,
        u_big: &CMat,
        eps: f64,
    ) -> Result<bool> {
        if smaller.num_logical + 1 != self.num_logical {
            return Err(Error::DimensionMismatch {
                expected: self.num_logical - 1,
                got: smaller.num_logical,
            });
        }
        let d_small = smaller.logical_dimension();
        if u_small.nrows() != d_small || u_small.ncols() != d_small {
            return Err(Error::DimensionMismatch {
                expected: d_small,
                got: u_small.nrows(),
            });
        }
        if u_big.nrows() != self.logical_dimension() || u_big.ncols() != self.logical_dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.logical_dimension(),
                got: u_big.nrows(),
            });
        }
        let block = u_big.slice(ndarray::s![0..d_small, 0..d_small]).to_owned();
        let (eq, _) = equal_up_to_phase(&u_small.clone(), &block, eps)?;
        Ok(eq)
    }
}

/// Diagonal of `exp(-i theta Z_S)` on `n` qubits: entry `j` is
/// `exp(-i theta chi_S(j))` with `chi_S(j) = (-1)^{sum of j's bits in S}`.
pub fn zstring_exponential(n: usize, support: &[usize], theta: f64) -> CMat {
    let dim = 1usize << n;
    let mut out = Array2::from_elem((dim, dim), ZERO);
    let mask: usize = support.iter().map(|&k| 1usize << (k - 1)).sum();
    for j in 0..dim {
        let chi = if ((j & mask).count_ones()) % 2 == 0 {
            1.0
        } else {
            -1.0
        };
        out[[j, j]] = Complex64::from_polar(1.0, -theta * chi);
    }
    out
}
