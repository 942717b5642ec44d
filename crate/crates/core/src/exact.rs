//! Exact integer arithmetic for braid matrices.
//!
//! Every braid generator is `(I + gamma' gamma)/sqrt(2)` whose entries live
//! in the ring of integers of the 8th cyclotomic field: integer combinations
//! of `1, z, z^2, z^3` with `z = e^{i pi/4}` (so `z^4 = -1`), divided by a
//! power of `sqrt(2) = z - z^3`. A matrix is stored as integer ring entries
//! plus one global sqrt2 exponent, normalized to the minimal exponent; this
//! representation is unique, so matrix equality is bit equality.
//!
//! Projective (up-to-phase) equality is decidable too: the only unit-modulus
//! units of this ring are the powers of `z` itself, so two unitary matrices
//! over the ring are equal up to a global phase iff one is a `z^k` rotation
//! of the other. The canonical projective key is the lexicographically
//! smallest serialization over the 8 rotations.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{CMat, ZERO};

/// Ring element `a + b z + c z^2 + d z^3`, `z = e^{i pi/4}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Zeta8(pub [i32; 4]);

impl Zeta8 {
    pub const ZERO: Zeta8 = Zeta8([0, 0, 0, 0]);
    pub const ONE: Zeta8 = Zeta8([1, 0, 0, 0]);
    /// `i = z^2`.
    pub const I: Zeta8 = Zeta8([0, 0, 1, 0]);

    pub fn is_zero(&self) -> bool {
        self.0 == [0, 0, 0, 0]
    }

    /// Multiply by `z^k` (k mod 8); `z * (a,b,c,d) = (-d,a,b,c)`.
    pub fn rot(self, k: u32) -> Zeta8 {
        let mut v = self.0;
        for _ in 0..(k % 8) {
            v = [-v[3], v[0], v[1], v[2]];
        }
        Zeta8(v)
    }

    /// Exact division by `sqrt(2) = z - z^3`, if divisible.
    pub fn div_sqrt2(self) -> Option<Zeta8> {
        let [a, b, c, d] = self.0;
        if (a - c) % 2 != 0 || (b - d) % 2 != 0 {
            return None;
        }
        Some(Zeta8([(b - d) / 2, (a + c) / 2, (b + d) / 2, (c - a) / 2]))
    }

    pub fn to_complex(self) -> Complex64 {
        let [a, b, c, d] = self.0;
        let s = std::f64::consts::FRAC_1_SQRT_2;
        // z = (1+i)/sqrt2, z^2 = i, z^3 = (-1+i)/sqrt2
        Complex64::new(
            a as f64 + (b as f64 - d as f64) * s,
            c as f64 + (b as f64 + d as f64) * s,
        )
    }
}

impl std::ops::Neg for Zeta8 {
    type Output = Zeta8;
    fn neg(self) -> Zeta8 {
        let [a, b, c, d] = self.0;
        Zeta8([-a, -b, -c, -d])
    }
}

impl std::ops::Add for Zeta8 {
    type Output = Zeta8;
    fn add(self, o: Zeta8) -> Zeta8 {
        let [a, b, c, d] = self.0;
        let [e, f, g, h] = o.0;
        Zeta8([a + e, b + f, c + g, d + h])
    }
}

impl std::ops::Mul for Zeta8 {
    type Output = Zeta8;
    fn mul(self, o: Zeta8) -> Zeta8 {
        let x = &self.0;
        let y = &o.0;
        let mut full = [0i32; 7];
        for i in 0..4 {
            if x[i] == 0 {
                continue;
            }
            for j in 0..4 {
                full[i + j] += x[i] * y[j];
            }
        }
        // z^4 = -1
        Zeta8([
            full[0] - full[4],
            full[1] - full[5],
            full[2] - full[6],
            full[3],
        ])
    }
}

/// Dense matrix over the ring with a global `sqrt(2)^-exp` scale, kept in
/// the unique minimal-exponent form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    pub dim: usize,
    pub sqrt2_exp: u32,
    pub entries: Vec<Zeta8>,
}

impl ExactMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![Zeta8::ZERO; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Zeta8::ONE;
        }
        ExactMatrix {
            dim,
            sqrt2_exp: 0,
            entries,
        }
    }

    /// Build from raw parts, reducing to the minimal-exponent form.
    pub fn from_parts(dim: usize, sqrt2_exp: u32, entries: Vec<Zeta8>) -> Self {
        assert_eq!(entries.len(), dim * dim);
        let mut m = ExactMatrix {
            dim,
            sqrt2_exp,
            entries,
        };
        m.normalize();
        m
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> Zeta8 {
        self.entries[i * self.dim + j]
    }

    /// Reduce to the minimal sqrt2 exponent.
    fn normalize(&mut self) {
        'outer: while self.sqrt2_exp > 0 {
            let mut reduced = Vec::with_capacity(self.entries.len());
            for e in &self.entries {
                match e.div_sqrt2() {
                    Some(q) => reduced.push(q),
                    None => break 'outer,
                }
            }
            self.entries = reduced;
            self.sqrt2_exp -= 1;
        }
    }

    /// Full matrix product (used for small compositions; BFS uses the sparse
    /// generator application).
    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut entries = vec![Zeta8::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        entries[i * n + j] = entries[i * n + j] + a * b;
                    }
                }
            }
        }
        let mut out = ExactMatrix {
            dim: n,
            sqrt2_exp: self.sqrt2_exp + other.sqrt2_exp,
            entries,
        };
        out.normalize();
        out
    }

    /// Global phase rotation by `z^k`.
    pub fn rot(&self, k: u32) -> ExactMatrix {
        ExactMatrix {
            dim: self.dim,
            sqrt2_exp: self.sqrt2_exp,
            entries: self.entries.iter().map(|e| e.rot(k)).collect(),
        }
    }

    /// Exact serialization (i16 components; panics if an entry overflows,
    /// which cannot happen for products of braid unitaries at these sizes).
    pub fn serialize(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(1 + self.entries.len() * 8);
        out.push(u8::try_from(self.sqrt2_exp).expect("sqrt2 exponent fits u8"));
        for e in &self.entries {
            for &v in &e.0 {
                let v = i16::try_from(v).expect("entry fits i16");
                out.extend_from_slice(&v.to_le_bytes());
            }
        }
        out
    }

    /// Compact byte form with i8 coefficients, for breadth-first queues at
    /// larger dimensions (panics on overflow; braid-product coefficients at
    /// the sizes used stay far below the bound).
    pub fn pack_i8(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(1 + self.entries.len() * 4);
        out.push(u8::try_from(self.sqrt2_exp).expect("sqrt2 exponent fits u8"));
        for e in &self.entries {
            for &v in &e.0 {
                out.push(i8::try_from(v).expect("entry fits i8") as u8);
            }
        }
        out
    }

    /// Inverse of [`ExactMatrix::pack_i8`].
    pub fn unpack_i8(dim: usize, bytes: &[u8]) -> Self {
        assert_eq!(bytes.len(), 1 + dim * dim * 4);
        let entries = bytes[1..]
            .chunks_exact(4)
            .map(|c| {
                Zeta8([
                    c[0] as i8 as i32,
                    c[1] as i8 as i32,
                    c[2] as i8 as i32,
                    c[3] as i8 as i32,
                ])
            })
            .collect();
        ExactMatrix {
            dim,
            sqrt2_exp: bytes[0] as u32,
            entries,
        }
    }

    /// Canonical projective key: lexicographic minimum of the serializations
    /// of the 8 global `z^k` rotations.
    pub fn canonical_key(&self) -> Vec<u8> {
        self.canonical_rotation().1
    }

    /// The canonical key together with the rotation index achieving it
    /// (unique for nonzero matrices: a matrix fixed by a nontrivial `z^k`
    /// rotation would have to vanish). Two elements of the same projective
    /// class differ by `z^(k1 - k2)` where `k1, k2` are their rotation
    /// indices.
    pub fn canonical_rotation(&self) -> (u32, Vec<u8>) {
        let mut best_k = 0u32;
        let mut best = self.serialize();
        for k in 1..8 {
            let cand = self.rot(k).serialize();
            if cand < best {
                best = cand;
                best_k = k;
            }
        }
        (best_k, best)
    }

    /// The `k` with `rot(k).serialize() == rep`, if any. Used to recover the
    /// phase relating two elements of the same projective class.
    pub fn phase_delta_to(&self, rep: &[u8]) -> Option<u32> {
        (0..8).find(|&k| self.rot(k).serialize() == rep)
    }

    pub fn to_complex(&self) -> CMat {
        let scale = 2f64.powf(-(self.sqrt2_exp as f64) / 2.0);
        let mut m = CMat::from_elem((self.dim, self.dim), ZERO);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[[i, j]] = self.at(i, j).to_complex() * scale;
            }
        }
        m
    }

    /// Largest |coefficient| over all entries (diagnostics; stays tiny for
    /// braid-group elements).
    pub fn max_coefficient(&self) -> i32 {
        self.entries
            .iter()
            .flat_map(|e| e.0.iter().map(|v| v.abs()))
            .max()
            .unwrap_or(0)
    }
}

/// Exact signed-permutation form of one Majorana operator (same conventions
/// as the float model in [`crate::fock`]).
fn gamma_exact(num_majoranas: usize, alpha: usize) -> Result<(Vec<usize>, Vec<Zeta8>)> {
    if alpha == 0 || alpha > num_majoranas {
        return Err(Error::IndexOutOfRange {
            index: alpha,
            what: "Majorana operator",
            max: num_majoranas,
        });
    }
    let dim = 1usize << (num_majoranas / 2);
    let mode_bit = (alpha - 1) / 2;
    let y_type = alpha % 2 == 0;
    let low_mask = (1usize << mode_bit) - 1;
    let flip = 1usize << mode_bit;
    let mut target = vec![0usize; dim];
    let mut amp = vec![Zeta8::ZERO; dim];
    for j in 0..dim {
        let neg_string = (j & low_mask).count_ones() % 2 == 1;
        target[j] = j ^ flip;
        let a = if y_type {
            let neg_occ = j & flip != 0;
            if neg_string ^ neg_occ {
                -Zeta8::I
            } else {
                Zeta8::I
            }
        } else if neg_string {
            -Zeta8::ONE
        } else {
            Zeta8::ONE
        };
        amp[j] = a;
    }
    Ok((target, amp))
}

/// One braid generator `B_a^{+-1} = (I +- gamma_{a+1} gamma_a)/sqrt(2)` in a
/// form that left-multiplies an [`ExactMatrix`] in O(dim^2) ring operations.
pub struct ExactBraidGenerator {
    pub letter: i64,
    dim: usize,
    target: Vec<usize>,
    amp: Vec<Zeta8>,
}

impl ExactBraidGenerator {
    pub fn new(num_majoranas: usize, letter: i64) -> Result<Self> {
        if letter == 0 {
            return Err(Error::BadParams {
                name: "braid letter".into(),
                reason: "letter 0 is not a braid".into(),
            });
        }
        let a = letter.unsigned_abs() as usize;
        if a + 1 > num_majoranas {
            return Err(Error::IndexOutOfRange {
                index: a,
                what: "braid generator",
                max: num_majoranas - 1,
            });
        }
        // P = gamma_{a+1} gamma_a (gamma_a first)
        let (t1, a1) = gamma_exact(num_majoranas, a)?;
        let (t2, a2) = gamma_exact(num_majoranas, a + 1)?;
        let dim = t1.len();
        let mut target = vec![0usize; dim];
        let mut amp = vec![Zeta8::ZERO; dim];
        for j in 0..dim {
            target[j] = t2[t1[j]];
            let prod = a1[j] * a2[t1[j]];
            amp[j] = if letter > 0 { prod } else { -prod };
        }
        Ok(ExactBraidGenerator {
            letter,
            dim,
            target,
            amp,
        })
    }

    /// `(I +- P)/sqrt(2) * U`.
    pub fn apply(&self, u: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.dim, u.dim);
        let n = self.dim;
        let mut entries = u.entries.clone();
        for k in 0..n {
            let i = self.target[k];
            let a = self.amp[k];
            for j in 0..n {
                entries[i * n + j] = entries[i * n + j] + a * u.at(k, j);
            }
        }
        let mut out = ExactMatrix {
            dim: n,
            sqrt2_exp: u.sqrt2_exp + 1,
            entries,
        };
        out.normalize();
        out
    }
}

/// Run a quarter-turn-only program exactly (errors if any step is not an
/// adjacent-pair rotation at an odd multiple of pi/4).
pub fn run_braid_word_exact(num_majoranas: usize, word: &[i64]) -> Result<ExactMatrix> {
    let dim = 1usize << (num_majoranas / 2);
    let mut acc = ExactMatrix::identity(dim);
    for &letter in word {
        let g = ExactBraidGenerator::new(num_majoranas, letter)?;
        acc = g.apply(&acc);
    }
    Ok(acc)
}
