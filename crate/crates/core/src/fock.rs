//! Fermionic Fock space with Majorana operators and rotation programs.
//!
//! Conventions (fixed across the whole crate):
//!
//! * `m` Majorana operators pair into `q = m/2` fermion modes; the Fock basis
//!   index `j` stores the occupation of mode `b` in bit `b-1` (mode 1 = LSB).
//! * `c_b |..n_b..>` carries the string sign `(-1)^{n_1+...+n_{b-1}}`.
//! * `gamma_{2b-1} = c_b + c_b^dag`, `gamma_{2b} = i (c_b^dag - c_b)`; under
//!   Jordan-Wigner these are `Z...Z X` / `Z...Z Y` ending on qubit `b`.
//! * `pair_rotation(a, b, theta) = cos(theta) I + sin(theta) gamma_b gamma_a`
//!   (second index acts first inside the product); a braid is the `theta=pi/4`
//!   case on an adjacent pair.
//! * A 2k-body rotation on ascending indices `i_1 < ... < i_2k` is
//!   `cos(theta) I + i^{k-1} gamma_{i_2k} ... gamma_{i_1} sin(theta)`.
//!
//! Every gamma is a signed permutation of the basis, so products of gammas
//! and rotation applications are done in O(dim) / O(dim^2) instead of dense
//! matrix products.

use ndarray::Array2;
use num_complex::Complex64;
use std::f64::consts::FRAC_PI_4;

use crate::error::{Error, Result};
use crate::matrix::{identity, CMat, CVec, ONE, ZERO};
use crate::program::MajoranaProgram;

/// Default cap on the number of Majorana operators (dense 2^{m/2} matrices).
pub const DEFAULT_MAJORANA_CAP: usize = 24;

/// Environment variable overriding [`DEFAULT_MAJORANA_CAP`].
pub const MAJORANA_CAP_ENV: &str = "MAJORANA_CAP";

pub(crate) fn configured_cap() -> usize {
    match std::env::var(MAJORANA_CAP_ENV) {
        Ok(s) => s.trim().parse().unwrap_or(DEFAULT_MAJORANA_CAP),
        Err(_) => DEFAULT_MAJORANA_CAP,
    }
}

/// Signed basis permutation: `|j> -> amp[j] |target[j]>`.
///
/// Majorana operators and their products all have this shape.
#[derive(Debug, Clone)]
pub(crate) struct SignedPerm {
    pub target: Vec<usize>,
    pub amp: Vec<Complex64>,
}

impl SignedPerm {
    fn identity(dim: usize) -> Self {
        SignedPerm {
            target: (0..dim).collect(),
            amp: vec![ONE; dim],
        }
    }

    /// `self` first, then `after` (operator product `after * self`).
    fn then(&self, after: &SignedPerm) -> SignedPerm {
        let dim = self.target.len();
        let mut target = vec![0usize; dim];
        let mut amp = vec![ZERO; dim];
        for j in 0..dim {
            let mid = self.target[j];
            target[j] = after.target[mid];
            amp[j] = self.amp[j] * after.amp[mid];
        }
        SignedPerm { target, amp }
    }

    fn to_matrix(&self) -> CMat {
        let dim = self.target.len();
        let mut out = Array2::from_elem((dim, dim), ZERO);
        for j in 0..dim {
            out[[self.target[j], j]] = self.amp[j];
        }
        out
    }
}

/// A rotation step reduced to its action: `cos(theta) I + s P` with `P` a
/// signed permutation and `s = phase * sin(theta)`.
pub(crate) struct RotationAction {
    pub perm: SignedPerm,
    pub cos: f64,
    pub s: Complex64,
}

impl RotationAction {
    /// Left-multiply a dense matrix: `A <- (cos I + s P) A`.
    pub fn apply_left(&self, a: &CMat) -> CMat {
        let mut out = a.mapv(|z| z * self.cos);
        for j in 0..self.perm.target.len() {
            let coef = self.s * self.perm.amp[j];
            let src = a.row(j);
            let mut dst = out.row_mut(self.perm.target[j]);
            dst.zip_mut_with(&src, |d, &s| *d += coef * s);
        }
        out
    }

    /// Apply to a state vector.
    pub fn apply_state(&self, v: &CVec) -> CVec {
        let mut out = v.mapv(|z| z * self.cos);
        for j in 0..self.perm.target.len() {
            out[self.perm.target[j]] += self.s * self.perm.amp[j] * v[j];
        }
        out
    }
}

/// Dense-matrix model of `m` Majorana operators on `2^{m/2}` Fock states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockSpace {
    num_majoranas: usize,
}

impl FockSpace {
    /// Build a space for `num_majoranas` operators (must be even and within
    /// the cap; override the cap with the `MAJORANA_CAP` env var).
    pub fn new(num_majoranas: usize) -> Result<Self> {
        Self::with_cap(num_majoranas, configured_cap())
    }

    /// Cap-explicit constructor (used by tests; `new` reads the env var).
    pub fn with_cap(num_majoranas: usize, cap: usize) -> Result<Self> {
        if num_majoranas == 0 || num_majoranas % 2 != 0 {
            return Err(Error::OddMajoranaCount(num_majoranas));
        }
        if num_majoranas > cap {
            return Err(Error::CapExceeded {
                requested: num_majoranas,
                cap,
            });
        }
        Ok(FockSpace { num_majoranas })
    }

    pub fn num_majoranas(&self) -> usize {
        self.num_majoranas
    }

    /// Number of fermion modes (= physical qubits).
    pub fn num_modes(&self) -> usize {
        self.num_majoranas / 2
    }

    pub fn dimension(&self) -> usize {
        1 << self.num_modes()
    }

    fn check_index(&self, alpha: usize) -> Result<()> {
        if alpha == 0 || alpha > self.num_majoranas {
            Err(Error::IndexOutOfRange {
                index: alpha,
                what: "Majorana operator",
                max: self.num_majoranas,
            })
        } else {
            Ok(())
        }
    }

    /// Signed-permutation form of `gamma_alpha` (1-based).
    pub(crate) fn gamma_perm(&self, alpha: usize) -> Result<SignedPerm> {
        self.check_index(alpha)?;
        let dim = self.dimension();
        let mode_bit = (alpha - 1) / 2; // 0-based mode
        let y_type = alpha % 2 == 0;
        let low_mask = (1usize << mode_bit) - 1;
        let flip = 1usize << mode_bit;
        let mut target = vec![0usize; dim];
        let mut amp = vec![ZERO; dim];
        for j in 0..dim {
            let string_sign = if (j & low_mask).count_ones() % 2 == 0 {
                1.0
            } else {
                -1.0
            };
            target[j] = j ^ flip;
            amp[j] = if y_type {
                // i (c^dag - c): +i on creation, -i on annihilation
                let occ_sign = if j & flip == 0 { 1.0 } else { -1.0 };
                Complex64::new(0.0, string_sign * occ_sign)
            } else {
                Complex64::new(string_sign, 0.0)
            };
        }
        Ok(SignedPerm { target, amp })
    }

    /// Dense matrix of `gamma_alpha`.
    pub fn majorana(&self, alpha: usize) -> Result<CMat> {
        Ok(self.gamma_perm(alpha)?.to_matrix())
    }

    /// Dense matrix of the annihilator `c_b` for fermion mode `b` (1-based).
    pub fn annihilator(&self, mode: usize) -> Result<CMat> {
        if mode == 0 || mode > self.num_modes() {
            return Err(Error::IndexOutOfRange {
                index: mode,
                what: "fermion mode",
                max: self.num_modes(),
            });
        }
        let dim = self.dimension();
        let bit = 1usize << (mode - 1);
        let low_mask = bit - 1;
        let mut out = Array2::from_elem((dim, dim), ZERO);
        for j in 0..dim {
            if j & bit != 0 {
                let sign = if (j & low_mask).count_ones() % 2 == 0 {
                    1.0
                } else {
                    -1.0
                };
                out[[j ^ bit, j]] = Complex64::new(sign, 0.0);
            }
        }
        Ok(out)
    }

    /// Build the action of a 2k-body rotation without materializing it.
    pub(crate) fn rotation_action(&self, indices: &[usize], theta: f64) -> Result<RotationAction> {
        if indices.is_empty() {
            return Err(Error::EmptySupport);
        }
        if indices.len() % 2 != 0 {
            return Err(Error::OddCardinality(indices.len()));
        }
        for w in indices.windows(2) {
            if w[1] == w[0] {
                return Err(Error::EqualIndices(w[0]));
            }
            if w[1] < w[0] {
                return Err(Error::BadParams {
                    name: "rotation".into(),
                    reason: format!("indices not ascending: {} after {}", w[1], w[0]),
                });
            }
        }
        // product gamma_{i_2k} ... gamma_{i_1}: ascending list, first index
        // acts first
        let mut perm = SignedPerm::identity(self.dimension());
        for &alpha in indices {
            perm = perm.then(&self.gamma_perm(alpha)?);
        }
        let k = indices.len() / 2;
        let phase = Complex64::i().powu((k as u32 - 1) % 4);
        Ok(RotationAction {
            perm,
            cos: theta.cos(),
            s: phase * theta.sin(),
        })
    }

    /// 2k-body rotation `cos(theta) I + i^{k-1} gamma_{i_2k}...gamma_{i_1} sin(theta)`
    /// on strictly ascending 1-based indices.
    pub fn manybody_rotation(&self, indices: &[usize], theta: f64) -> Result<CMat> {
        let act = self.rotation_action(indices, theta)?;
        let dim = self.dimension();
        let mut out = identity(dim).mapv(|z| z * act.cos);
        for j in 0..dim {
            out[[act.perm.target[j], j]] += act.s * act.perm.amp[j];
        }
        Ok(out)
    }

    /// `cos(theta) I + sin(theta) gamma_beta gamma_alpha` for distinct indices.
    pub fn pair_rotation(&self, alpha: usize, beta: usize, theta: f64) -> Result<CMat> {
        self.check_index(alpha)?;
        self.check_index(beta)?;
        if alpha == beta {
            return Err(Error::EqualIndices(alpha));
        }
        let perm = self.gamma_perm(alpha)?.then(&self.gamma_perm(beta)?);
        let dim = self.dimension();
        let s = Complex64::new(theta.sin(), 0.0);
        let mut out = identity(dim).mapv(|z| z * theta.cos());
        for j in 0..dim {
            out[[perm.target[j], j]] += s * perm.amp[j];
        }
        Ok(out)
    }

    /// Braid generator `B_alpha = pair_rotation(alpha, alpha+1, pi/4)`.
    pub fn braid(&self, alpha: usize) -> Result<CMat> {
        self.braid_angle(alpha, FRAC_PI_4)
    }

    /// Inverse braid (`theta = -pi/4`).
    pub fn braid_inverse(&self, alpha: usize) -> Result<CMat> {
        self.braid_angle(alpha, -FRAC_PI_4)
    }

    /// Parametrized braid `B_alpha(theta)` on Majoranas `{alpha, alpha+1}`.
    pub fn braid_angle(&self, alpha: usize, theta: f64) -> Result<CMat> {
        if alpha == 0 || alpha + 1 > self.num_majoranas {
            return Err(Error::IndexOutOfRange {
                index: alpha,
                what: "braid generator",
                max: self.num_majoranas - 1,
            });
        }
        self.pair_rotation(alpha, alpha + 1, theta)
    }

    /// Total fermion parity `diag((-1)^{n_1+...+n_q})`.
    pub fn total_parity(&self) -> CMat {
        let dim = self.dimension();
        let mut out = identity(dim);
        for j in 0..dim {
            if (j as u32).count_ones() % 2 == 1 {
                out[[j, j]] = -ONE;
            }
        }
        out
    }

    /// Run a program: `prefactor * U(step_n) * ... * U(step_1)`.
    pub fn run_program(&self, program: &MajoranaProgram) -> Result<CMat> {
        if program.num_majoranas != self.num_majoranas {
            return Err(Error::DimensionMismatch {
                expected: self.num_majoranas,
                got: program.num_majoranas,
            });
        }
        let mut acc = identity(self.dimension());
        for step in &program.steps {
            let act = self.rotation_action(&step.indices, step.angle.value())?;
            acc = act.apply_left(&acc);
        }
        acc.mapv_inplace(|z| z * program.prefactor);
        Ok(acc)
    }

    /// Apply a program to a state vector (same order and prefactor as
    /// [`run_program`](Self::run_program), O(steps * dim)).
    pub fn apply_program(&self, program: &MajoranaProgram, state: &CVec) -> Result<CVec> {
        if program.num_majoranas != self.num_majoranas {
            return Err(Error::DimensionMismatch {
                expected: self.num_majoranas,
                got: program.num_majoranas,
            });
        }
        if state.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                got: state.len(),
            });
        }
        let mut v = state.clone();
        for step in &program.steps {
            let act = self.rotation_action(&step.indices, step.angle.value())?;
            v = act.apply_state(&v);
        }
        v.mapv_inplace(|z| z * program.prefactor);
        Ok(v)
    }

    /// Occupation-number label of basis index `j`, highest mode first.
    pub fn basis_label(&self, j: usize) -> String {
        let q = self.num_modes();
        let mut s = String::with_capacity(q + 2);
        s.push('|');
        for b in (0..q).rev() {
            s.push(if j >> b & 1 == 1 { '1' } else { '0' });
        }
        s.push('>');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{approx_eq, dagger, diag, from_rows, kron, max_abs_diff, I};
    use crate::program::MajoranaProgram;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pauli_x() -> CMat {
        from_rows(&[&[ZERO, ONE], &[ONE, ZERO]])
    }
    fn pauli_y() -> CMat {
        from_rows(&[&[ZERO, -I], &[I, ZERO]])
    }
    fn pauli_z() -> CMat {
        diag(&[ONE, -ONE])
    }

    #[test]
    fn constructor_validation() {
        assert!(matches!(FockSpace::new(5), Err(Error::OddMajoranaCount(5))));
        assert!(matches!(
            FockSpace::with_cap(26, 24),
            Err(Error::CapExceeded {
                requested: 26,
                cap: 24
            })
        ));
        let f = FockSpace::new(8).unwrap();
        assert_eq!(f.num_modes(), 4);
        assert_eq!(f.dimension(), 16);
    }

    #[test]
    fn jordan_wigner_forms_two_modes() {
        let f = FockSpace::new(4).unwrap();
        let id = identity(2);
        // mode 1 = low bits (second kron factor)
        assert!(approx_eq(
            &f.majorana(1).unwrap(),
            &kron(&id, &pauli_x()),
            0.0
        ));
        assert!(approx_eq(
            &f.majorana(2).unwrap(),
            &kron(&id, &pauli_y()),
            0.0
        ));
        assert!(approx_eq(
            &f.majorana(3).unwrap(),
            &kron(&pauli_x(), &pauli_z()),
            0.0
        ));
        assert!(approx_eq(
            &f.majorana(4).unwrap(),
            &kron(&pauli_y(), &pauli_z()),
            0.0
        ));
    }

    #[test]
    fn clifford_algebra_relations() {
        let f = FockSpace::new(6).unwrap();
        let id = identity(f.dimension());
        for a in 1..=6 {
            let ga = f.majorana(a).unwrap();
            assert!(approx_eq(&dagger(&ga), &ga, 1e-15), "hermiticity {a}");
            for b in a..=6 {
                let gb = f.majorana(b).unwrap();
                let anti = ga.dot(&gb) + gb.dot(&ga);
                let expect = if a == b {
                    id.mapv(|z| z * 2.0)
                } else {
                    Array2::from_elem(id.dim(), ZERO)
                };
                assert!(approx_eq(&anti, &expect, 1e-14), "anticommutator ({a},{b})");
            }
        }
    }

    #[test]
    fn annihilator_string_sign() {
        let f = FockSpace::new(4).unwrap();
        let c2 = f.annihilator(2).unwrap();
        // c_2 |11> = -|01>: the mode-1 occupation flips the sign
        assert_eq!(c2[[1, 3]], -ONE);
        // c_2 |10> = +|00>
        assert_eq!(c2[[0, 2]], ONE);
        // gamma reconstruction: gamma_3 = c_2 + c_2^dag
        let g3 = f.majorana(3).unwrap();
        assert!(approx_eq(&g3, &(c2.clone() + dagger(&c2)), 0.0));
    }

    #[test]
    fn braid_identities_exact() {
        let f = FockSpace::new(8).unwrap();
        let id = identity(f.dimension());
        for a in 1..8 {
            let b = f.braid(a).unwrap();
            let binv = f.braid_inverse(a).unwrap();
            assert!(max_abs_diff(&b.dot(&binv), &id) < 1e-15, "B B^-1 = I");
            assert!(approx_eq(&binv, &dagger(&b), 1e-15), "B^-1 = B^dag");
            let b2 = b.dot(&b);
            let b3 = b2.dot(&b);
            assert!(approx_eq(&b3, &binv.mapv(|z| -z), 1e-15), "B^3 = -B^-1");
            let b4 = b2.dot(&b2);
            assert!(approx_eq(&b4, &id.mapv(|z| -z), 1e-15), "B^4 = -I");
            assert!(approx_eq(&b4.dot(&b4), &id, 1e-15), "B^8 = I");
        }
    }

    #[test]
    fn artin_relations() {
        let f = FockSpace::new(8).unwrap();
        for a in 1..7 {
            let b1 = f.braid(a).unwrap();
            let b2 = f.braid(a + 1).unwrap();
            let lhs = b1.dot(&b2).dot(&b1);
            let rhs = b2.dot(&b1).dot(&b2);
            assert!(max_abs_diff(&lhs, &rhs) < 1e-15, "Artin at {a}");
        }
        for a in 1..8 {
            for b in a + 2..8 {
                let ba = f.braid(a).unwrap();
                let bb = f.braid(b).unwrap();
                assert!(
                    max_abs_diff(&ba.dot(&bb), &bb.dot(&ba)) < 1e-15,
                    "far commute ({a},{b})"
                );
            }
        }
    }

    #[test]
    fn paired_rotations_are_z_string_exponentials() {
        let f = FockSpace::new(8).unwrap();
        let theta = 0.37;
        // {1,2}: exp(-i theta Z_1)
        let u = f.manybody_rotation(&[1, 2], theta).unwrap();
        let mut expect = identity(16);
        for j in 0..16 {
            let z: f64 = if j & 1 == 0 { 1.0 } else { -1.0 };
            expect[[j, j]] = Complex64::from_polar(1.0, -theta * z);
        }
        assert!(approx_eq(&u, &expect, 1e-15));
        // {1,2,3,4}: exp(-i theta Z_1 Z_2)
        let u2 = f.manybody_rotation(&[1, 2, 3, 4], theta).unwrap();
        let mut expect2 = identity(16);
        for j in 0..16usize {
            let z: f64 = if (j & 3).count_ones() % 2 == 0 {
                1.0
            } else {
                -1.0
            };
            expect2[[j, j]] = Complex64::from_polar(1.0, -theta * z);
        }
        assert!(approx_eq(&u2, &expect2, 1e-15));
        // {1,2,3,4,5,6}: exp(-i theta Z_1 Z_2 Z_3). Each Majorana pair
        // contributes gamma_{2b} gamma_{2b-1} = -i Z_b, and the i^{k-1}
        // prefactor times (-i)^k is -i for every k, so the sign of the
        // exponent is the same for all paired index sets.
        let u3 = f.manybody_rotation(&[1, 2, 3, 4, 5, 6], theta).unwrap();
        let mut expect3 = identity(16);
        for j in 0..16usize {
            let z: f64 = if (j & 7).count_ones() % 2 == 0 {
                1.0
            } else {
                -1.0
            };
            expect3[[j, j]] = Complex64::from_polar(1.0, -theta * z);
        }
        assert!(approx_eq(&u3, &expect3, 1e-15));
    }

    #[test]
    fn manybody_squares_to_minus_identity_at_quarter_turn() {
        // M_alpha = rotation at pi/2 ... for 2k-body sets the pi/4 rotation
        // squared gives cos(pi/2) I + ... = the pure gamma product, whose
        // square is -I for 2k = 4,6,8 (and +-i^... checked numerically).
        let f = FockSpace::new(8).unwrap();
        let id = identity(16);
        for set in [
            vec![1, 2, 3, 4],
            vec![1, 2, 3, 4, 5, 6],
            vec![1, 2, 3, 4, 5, 6, 7, 8],
        ] {
            let u = f.manybody_rotation(&set, PI / 2.0).unwrap();
            // u = i^{k-1} * (gamma product); square it
            let sq = u.dot(&u);
            assert!(
                approx_eq(&sq, &id.mapv(|z| -z), 1e-14),
                "square at set {set:?}"
            );
        }
    }

    #[test]
    fn rotation_validation_errors() {
        let f = FockSpace::new(6).unwrap();
        assert!(matches!(
            f.manybody_rotation(&[], 0.1),
            Err(Error::EmptySupport)
        ));
        assert!(matches!(
            f.manybody_rotation(&[1, 2, 3], 0.1),
            Err(Error::OddCardinality(3))
        ));
        assert!(matches!(
            f.manybody_rotation(&[2, 2], 0.1),
            Err(Error::EqualIndices(2))
        ));
        assert!(matches!(
            f.manybody_rotation(&[1, 7], 0.1),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            f.pair_rotation(3, 3, 0.1),
            Err(Error::EqualIndices(3))
        ));
        assert!(matches!(f.braid(6), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn total_parity_is_gamma_product() {
        let f = FockSpace::new(4).unwrap();
        // P = (-i)^q gamma_1 gamma_2 ... gamma_2q
        let mut prod = identity(4);
        for a in 1..=4 {
            prod = prod.dot(&f.majorana(a).unwrap());
        }
        let scaled = prod.mapv(|z| z * c(0.0, -1.0).powu(2));
        assert!(approx_eq(&scaled, &f.total_parity(), 1e-15));
    }

    #[test]
    fn program_application_order() {
        let f = FockSpace::new(4).unwrap();
        let prog = MajoranaProgram::from_braid_word(4, &[1, 2]).unwrap();
        let u = f.run_program(&prog).unwrap();
        let expect = f.braid(2).unwrap().dot(&f.braid(1).unwrap());
        assert!(approx_eq(&u, &expect, 1e-15));
        // program on the wrong space
        let f6 = FockSpace::new(6).unwrap();
        assert!(matches!(
            f6.run_program(&prog),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn apply_program_matches_run_program() {
        let f = FockSpace::new(6).unwrap();
        let prog = MajoranaProgram::from_braid_word(6, &[1, -3, 5, 2, -4]).unwrap();
        let u = f.run_program(&prog).unwrap();
        let mut v = CVec::from_elem(f.dimension(), ZERO);
        v[3] = ONE;
        let direct = f.apply_program(&prog, &v).unwrap();
        let via_matrix = u.column(3).to_owned();
        assert!((0..f.dimension()).all(|i| (direct[i] - via_matrix[i]).norm() < 1e-14));
    }

    #[test]
    fn basis_labels() {
        let f = FockSpace::new(6).unwrap();
        assert_eq!(f.basis_label(0), "|000>");
        assert_eq!(f.basis_label(5), "|101>");
    }
}
