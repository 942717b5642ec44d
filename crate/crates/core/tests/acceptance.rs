//! Release acceptance gate.
//!
//! One test per criterion, each printing a single `criterion NN ...: PASS` or
//! `... FAIL (reason)` line (visible with `--nocapture`, and always visible
//! for failing criteria). Tolerances are pinned below and in the asserts.
//!
//! Two criteria assert quoted identities in their literal published form and
//! are expected to fail with diagnostics rather than be weakened:
//! criterion 01's Y identity realizes -iY, and criterion 10's fourth-power
//! identity realizes B^4 = -I (both hold projectively). Criterion 09's
//! claimed unreachable bit-flips are realized by explicit short words, so it
//! fails with the counterexamples; its W-state sub-claim does hold.

use majorana_core::catalog::{
    self, cnot_matrix, cz_matrix, h2_matrix, hadamard, pauli_x, pauli_y, pauli_z, rx_matrix,
    rz_matrix,
};
use majorana_core::encoding::zstring_exponential;
use majorana_core::exact::{run_braid_word_exact, ExactMatrix, Zeta8};
use majorana_core::matrix::{
    approx_eq, diag, equal_up_to_phase, identity, kron, max_abs_diff, phase_fidelity, ONE, ZERO,
};
use majorana_core::search::{
    check_diagonal_reachability, enumerate_group, orbit_states, search_word, EnumerationMode,
};
use majorana_core::synthesis::{
    cn_not_matrix, cn_swap_matrix, controlled_unitary_matrix, synth_cn_not, synth_cn_swap,
    synth_cn_z, synth_controlled_unitary, synth_diagonal,
};
use majorana_core::{CMat, CVec, Encoding, FockSpace, MajoranaProgram};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::time::{Duration, Instant};

const EXACT_TOL: f64 = 1e-12;
const SYNTH_TOL: f64 = 1e-9;

fn report(num: u32, name: &str, ok: bool, detail: &str) {
    if ok && detail.is_empty() {
        println!("criterion {num:02} {name}: PASS");
    } else if ok {
        println!("criterion {num:02} {name}: PASS ({detail})");
    } else {
        println!("criterion {num:02} {name}: FAIL ({detail})");
    }
}

fn realize_logical(prog: &MajoranaProgram, num_logical: usize) -> CMat {
    let enc = Encoding::new(num_logical);
    let f = FockSpace::new(enc.num_majoranas()).unwrap();
    enc.restrict_to_logical(&f.run_program(prog).unwrap())
        .unwrap()
}

fn basis_state(dim: usize, index: usize) -> CVec {
    let mut v = CVec::from_elem(dim, ZERO);
    v[index] = ONE;
    v
}

#[test]
fn criterion_01_one_qubit_identities() {
    let f = FockSpace::new(4).unwrap();
    let enc = Encoding::new(1);
    let r = |m: &CMat| enc.restrict_to_logical(m).unwrap();
    let b = |a: usize| f.braid(a).unwrap();
    let i = Complex64::i();

    let s_ref = diag(&[ONE, i]).mapv(|z| z * Complex64::from_polar(1.0, -FRAC_PI_4));
    let t_ref = diag(&[ONE, Complex64::from_polar(1.0, FRAC_PI_4)])
        .mapv(|z| z * Complex64::from_polar(1.0, -PI / 8.0));

    let b2sq = b(2).dot(&b(2));
    let b3sq = b(3).dot(&b(3));
    let checks: [(&str, CMat, CMat); 6] = [
        ("B1 = e^{-i pi/4} diag(1, i)", r(&b(1)), s_ref),
        ("Z = i B3^2", r(&b3sq.mapv(|z| z * i)), pauli_z()),
        ("X = i B2^2", r(&b2sq.mapv(|z| z * i)), pauli_x()),
        (
            "Y = -B2^2 B3^2",
            r(&b2sq.dot(&b3sq).mapv(|z| -z)),
            pauli_y(),
        ),
        (
            "H = i B2 B3 B2",
            r(&b(2).dot(&b(3)).dot(&b(2)).mapv(|z| z * i)),
            hadamard(),
        ),
        (
            "T = B1(pi/8)",
            r(&f.braid_angle(1, PI / 8.0).unwrap()),
            t_ref,
        ),
    ];

    let mut failures = Vec::new();
    for (label, got, want) in &checks {
        let err = max_abs_diff(got, want);
        if err > EXACT_TOL {
            let (proj, phase) = equal_up_to_phase(want, got, EXACT_TOL).unwrap();
            failures.push(format!(
                "{label}: entrywise error {err:.3e}{}",
                if proj {
                    format!(", holds up to phase {phase:.4}")
                } else {
                    String::new()
                }
            ));
        }
    }

    let ok = failures.is_empty();
    report(
        1,
        "one-qubit identities",
        ok,
        &if ok {
            String::new()
        } else {
            format!(
                "{}; the other {} forms are exact",
                failures.join("; "),
                6 - failures.len()
            )
        },
    );
    assert!(ok, "quoted identities not exact: {failures:?}");
}

#[test]
fn criterion_02_two_qubit_words() {
    // (name, pinned factor count); 0 = count not pinned
    let entries = [
        ("cz", 3),
        ("cnot", 7),
        ("swap", 7),
        ("acnot", 7),
        ("iswap", 6),
        ("dcnot", 8),
        ("ms", 0),
        ("cr", 0),
        ("h2", 0),
    ];
    let mut problems = Vec::new();
    for (name, steps) in entries {
        let entry = catalog::find_entry(name).unwrap();
        let params = catalog::sample_params(entry);
        let rep = catalog::verify_entry(name, &params, EXACT_TOL).unwrap();
        if !rep.pass {
            problems.push(format!("{name}: fidelity {:.12}", rep.fidelity));
        }
        if !rep.prefactor_exact {
            problems.push(format!(
                "{name}: prefactor off, entry error {:.3e}",
                rep.max_entry_err
            ));
        }
        if steps != 0 && rep.num_steps != steps {
            problems.push(format!(
                "{name}: {} factors, expected {steps}",
                rep.num_steps
            ));
        }
    }
    // U_H (x) U_H = U_CNOT * U_H^(2)
    let lhs = kron(&hadamard(), &hadamard());
    let rhs = cnot_matrix().dot(&h2_matrix());
    if !approx_eq(&lhs, &rhs, EXACT_TOL) {
        problems.push(format!(
            "H (x) H vs CNOT * H2: error {:.3e}",
            max_abs_diff(&lhs, &rhs)
        ));
    }

    let ok = problems.is_empty();
    report(2, "two-qubit braid words", ok, &problems.join("; "));
    assert!(ok, "{problems:?}");
}

#[test]
fn criterion_03_embedding_counterexample() {
    // e^{-i pi/4} B5^{-1} B3^{-1} B1 on three logical qubits, exactly.
    let u = run_braid_word_exact(8, &[1, -3, -5]).unwrap().rot(7);
    let enc = Encoding::new(3);
    let mut picked = Vec::with_capacity(64);
    for i in 0..8 {
        for j in 0..8 {
            picked.push(u.at(enc.encode_index(i).unwrap(), enc.encode_index(j).unwrap()));
        }
    }
    let restricted = ExactMatrix::from_parts(8, u.sqrt2_exp, picked);

    let one = Zeta8::ONE;
    let im = Zeta8::I;
    let want_diag = [one, one, one, -one, im, -im, -im, -im];
    let mut entries = vec![Zeta8::ZERO; 64];
    for (k, &z) in want_diag.iter().enumerate() {
        entries[k * 8 + k] = z;
    }
    let want = ExactMatrix::from_parts(8, 0, entries);
    let diagonal_exact = restricted.serialize() == want.serialize();

    // ... and it is NOT I (x) CZ, even up to a global phase
    let target = kron(&identity(2), &cz_matrix());
    let (is_embedded_cz, _) =
        equal_up_to_phase(&target, &restricted.to_complex(), SYNTH_TOL).unwrap();

    let ok = diagonal_exact && !is_embedded_cz;
    report(
        3,
        "embedding counterexample",
        ok,
        if ok {
            "restriction is diag(1,1,1,-1,i,-i,-i,-i) exactly and differs from I (x) CZ"
        } else {
            "unexpected restriction"
        },
    );
    assert!(diagonal_exact, "restriction is not the quoted diagonal");
    assert!(
        !is_embedded_cz,
        "restriction unexpectedly equals I (x) CZ up to phase"
    );
}

#[test]
fn criterion_04_zstring_tables() {
    // (majorana indices, physical Z support, logical Z support)
    let rows3: [(&[usize], &[usize], &[usize]); 15] = [
        (&[1, 2], &[1], &[1, 2, 3]),
        (&[3, 4], &[2], &[1]),
        (&[5, 6], &[3], &[2]),
        (&[7, 8], &[4], &[3]),
        (&[1, 2, 3, 4], &[1, 2], &[2, 3]),
        (&[1, 2, 5, 6], &[1, 3], &[1, 3]),
        (&[1, 2, 7, 8], &[1, 4], &[1, 2]),
        (&[3, 4, 5, 6], &[2, 3], &[1, 2]),
        (&[3, 4, 7, 8], &[2, 4], &[1, 3]),
        (&[5, 6, 7, 8], &[3, 4], &[2, 3]),
        (&[1, 2, 3, 4, 5, 6], &[1, 2, 3], &[3]),
        (&[1, 2, 3, 4, 7, 8], &[1, 2, 4], &[2]),
        (&[1, 2, 5, 6, 7, 8], &[1, 3, 4], &[1]),
        (&[3, 4, 5, 6, 7, 8], &[2, 3, 4], &[1, 2, 3]),
        (&[1, 2, 3, 4, 5, 6, 7, 8], &[1, 2, 3, 4], &[]),
    ];
    // (majorana indices, logical Z support) on five physical qubits
    let rows4: [(&[usize], &[usize]); 15] = [
        (&[1, 2], &[1, 2, 3, 4]),
        (&[3, 4], &[1]),
        (&[5, 6], &[2]),
        (&[7, 8], &[3]),
        (&[9, 10], &[4]),
        (&[1, 2, 3, 4], &[2, 3, 4]),
        (&[1, 2, 5, 6], &[1, 3, 4]),
        (&[1, 2, 7, 8], &[1, 2, 4]),
        (&[1, 2, 9, 10], &[1, 2, 3]),
        (&[3, 4, 5, 6], &[1, 2]),
        (&[3, 4, 7, 8], &[1, 3]),
        (&[3, 4, 9, 10], &[1, 4]),
        (&[5, 6, 7, 8], &[2, 3]),
        (&[5, 6, 9, 10], &[2, 4]),
        (&[7, 8, 9, 10], &[3, 4]),
    ];

    let mut rng = StdRng::seed_from_u64(7);
    let mut problems = Vec::new();

    let f8 = FockSpace::new(8).unwrap();
    let enc3 = Encoding::new(3);
    for (indices, phys, log) in rows3 {
        let theta: f64 = rng.gen_range(-PI..PI);
        let u = f8.manybody_rotation(indices, theta).unwrap();
        let phys_err = max_abs_diff(&u, &zstring_exponential(4, phys, theta));
        let log_err = max_abs_diff(
            &enc3.restrict_to_logical(&u).unwrap(),
            &zstring_exponential(3, log, theta),
        );
        if phys_err > EXACT_TOL || log_err > EXACT_TOL {
            problems.push(format!(
                "indices {indices:?}: physical err {phys_err:.3e}, logical err {log_err:.3e}"
            ));
        }
    }

    let f10 = FockSpace::new(10).unwrap();
    let enc4 = Encoding::new(4);
    for (indices, log) in rows4 {
        let theta: f64 = rng.gen_range(-PI..PI);
        let u = f10.manybody_rotation(indices, theta).unwrap();
        let log_err = max_abs_diff(
            &enc4.restrict_to_logical(&u).unwrap(),
            &zstring_exponential(4, log, theta),
        );
        if log_err > EXACT_TOL {
            problems.push(format!("indices {indices:?}: logical err {log_err:.3e}"));
        }
    }

    // complementary index sets act identically on the logical qubits
    let complements: [(&[usize], &[usize]); 7] = [
        (&[1, 2], &[3, 4, 5, 6, 7, 8]),
        (&[3, 4], &[1, 2, 5, 6, 7, 8]),
        (&[5, 6], &[1, 2, 3, 4, 7, 8]),
        (&[7, 8], &[1, 2, 3, 4, 5, 6]),
        (&[1, 2, 3, 4], &[5, 6, 7, 8]),
        (&[1, 2, 5, 6], &[3, 4, 7, 8]),
        (&[1, 2, 7, 8], &[3, 4, 5, 6]),
    ];
    for (s, sc) in complements {
        let theta: f64 = rng.gen_range(-PI..PI);
        let a = enc3
            .restrict_to_logical(&f8.manybody_rotation(s, theta).unwrap())
            .unwrap();
        let b = enc3
            .restrict_to_logical(&f8.manybody_rotation(sc, theta).unwrap())
            .unwrap();
        let (eq, _) = equal_up_to_phase(&a, &b, EXACT_TOL).unwrap();
        if !eq {
            problems.push(format!("complement pair {s:?} / {sc:?} differ"));
        }
    }

    let ok = problems.is_empty();
    report(
        4,
        "Z-string tables",
        ok,
        &if ok {
            "15 + 15 rows and 7 complement pairs".into()
        } else {
            problems.join("; ")
        },
    );
    assert!(ok, "{problems:?}");
}

#[test]
fn criterion_05_many_body_gates() {
    let mut problems = Vec::new();

    let ccz = catalog::find_entry("ccz").unwrap();
    let rep = catalog::verify_entry("ccz", &[], SYNTH_TOL).unwrap();
    if !(rep.pass && rep.prefactor_exact) {
        problems.push(format!("ccz: fidelity {:.12}", rep.fidelity));
    }
    if rep.num_steps != 7 {
        problems.push(format!("ccz: {} factors, expected 7", rep.num_steps));
    }
    let prefactor = ccz.program(&[]).unwrap().prefactor;
    if (prefactor - Complex64::from_polar(1.0, PI / 8.0)).norm() > EXACT_TOL {
        problems.push(format!("ccz prefactor {prefactor:.6} is not e^(i pi/8)"));
    }

    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..10 {
        let phi: f64 = rng.gen_range(-PI..PI);
        for name in ["ccphase", "c3phase"] {
            let rep = catalog::verify_entry(name, &[phi], SYNTH_TOL).unwrap();
            if !rep.pass {
                problems.push(format!("{name}({phi:.4}): fidelity {:.12}", rep.fidelity));
            }
        }
    }

    for name in ["ccnot", "cswap", "cz_23", "cz_13", "cz_12"] {
        let rep = catalog::verify_entry(name, &[], SYNTH_TOL).unwrap();
        if !rep.pass {
            problems.push(format!("{name}: fidelity {:.12}", rep.fidelity));
        }
    }

    let ok = problems.is_empty();
    report(5, "many-body constructions", ok, &problems.join("; "));
    assert!(ok, "{problems:?}");
}

#[test]
fn criterion_06_diagonal_synthesis_oracle() {
    let mut problems = Vec::new();
    let check_diag = |phases: &[f64], problems: &mut Vec<String>, label: &str| {
        let prog = synth_diagonal(3, phases).unwrap();
        let got = realize_logical(&prog, 3);
        let target = diag(
            &phases
                .iter()
                .map(|&p| Complex64::from_polar(1.0, p))
                .collect::<Vec<_>>(),
        );
        match equal_up_to_phase(&target, &got, SYNTH_TOL) {
            Ok((true, _)) => {}
            _ => problems.push(format!("diagonal target {label} not reproduced")),
        }
    };

    for mask in 0..256usize {
        let phases: Vec<f64> = (0..8)
            .map(|j| if mask >> j & 1 == 1 { PI } else { 0.0 })
            .collect();
        check_diag(&phases, &mut problems, &format!("mask {mask}"));
    }
    let mut rng = StdRng::seed_from_u64(13);
    for k in 0..100 {
        let phases: Vec<f64> = (0..8).map(|_| rng.gen_range(0.0..2.0 * PI)).collect();
        check_diag(&phases, &mut problems, &format!("random {k}"));
    }

    for n in 1..=3usize {
        let dim = 1usize << (n + 1);
        let mut entries = vec![ONE; dim];
        entries[dim - 1] = -ONE;
        let cnz_ref = diag(&entries);
        let got = realize_logical(&synth_cn_z(n).unwrap(), n + 1);
        if !approx_eq(&got, &cnz_ref, SYNTH_TOL) {
            problems.push(format!(
                "C^{n}Z mismatch {:.3e}",
                max_abs_diff(&got, &cnz_ref)
            ));
        }

        let got = realize_logical(&synth_cn_not(n, 1).unwrap(), n + 1);
        let want = cn_not_matrix(n, 1);
        if !approx_eq(&got, &want, SYNTH_TOL) {
            problems.push(format!(
                "C^{n}NOT mismatch {:.3e}",
                max_abs_diff(&got, &want)
            ));
        }

        let got = realize_logical(&synth_cn_swap(n).unwrap(), n + 2);
        let want = cn_swap_matrix(n);
        if !approx_eq(&got, &want, SYNTH_TOL) {
            problems.push(format!(
                "C^{n}SWAP mismatch {:.3e}",
                max_abs_diff(&got, &want)
            ));
        }
    }

    let ok = problems.is_empty();
    report(
        6,
        "diagonal synthesis oracle",
        ok,
        &if ok {
            "256 sign patterns, 100 random spectra, CnZ/CnNOT/CnSWAP n=1..3".into()
        } else {
            problems.join("; ")
        },
    );
    assert!(ok, "{problems:?}");
}

#[test]
fn criterion_07_group_orders() {
    let budget = Duration::from_secs(10);

    let t0 = Instant::now();
    let g4 = enumerate_group(4, EnumerationMode::Exact, 10_000).unwrap();
    let t4 = t0.elapsed();
    let t0 = Instant::now();
    let g6 = enumerate_group(6, EnumerationMode::Exact, 100_000).unwrap();
    let t6 = t0.elapsed();

    // cross-check the exact backend against plain float canonicalization
    let g4f = enumerate_group(4, EnumerationMode::Float, 10_000).unwrap();

    // quoted orders: 192 at four modes, 46080 at six modes
    let m4_kind = match (g4.order_projective, g4.order_linear) {
        (192, _) => "projective",
        (_, 192) => "linear",
        _ => "neither",
    };
    let m6_kind = match (g6.order_projective, g6.order_linear) {
        (46080, _) => "projective",
        (_, 46080) => "linear",
        _ => "neither",
    };

    let ok = g4.completed
        && g6.completed
        && m4_kind != "neither"
        && m6_kind != "neither"
        && g4f.order_projective == g4.order_projective
        && g4f.order_linear == g4.order_linear
        && t4 < budget
        && t6 < budget;
    report(
        7,
        "group enumeration",
        ok,
        &format!(
            "four modes: 192 is the {m4_kind} order (projective {}, linear {}, {t4:.2?}); \
             six modes: 46080 is the {m6_kind} order (projective {}, linear {}, {t6:.2?})",
            g4.order_projective, g4.order_linear, g6.order_projective, g6.order_linear
        ),
    );
    assert!(ok);
    assert_eq!(g4.order_projective, 192);
    assert_eq!(g6.order_linear, 46080);
}

#[test]
fn criterion_08_reachability() {
    let mut problems = Vec::new();

    let orb1 = orbit_states(1, &basis_state(2, 0), 1_000).unwrap();
    if !(orb1.completed && orb1.size() == 6) {
        problems.push(format!("|0> orbit has {} states, expected 6", orb1.size()));
    }

    let quarter = CVec::from_elem(4, Complex64::new(0.5, 0.0));
    let orb2 = orbit_states(2, &basis_state(4, 0), 10_000).unwrap();
    let equal_state = orb2.find_logical(&quarter, SYNTH_TOL).unwrap();
    match equal_state {
        Some((_, depth)) if depth <= 5 => {}
        Some((_, depth)) => problems.push(format!("equal-coefficient state at depth {depth} > 5")),
        None => problems.push("equal-coefficient state not in orbit".into()),
    }

    let targets = [
        ("I (x) CZ", kron(&identity(2), &cz_matrix())),
        ("CZ (x) I", kron(&cz_matrix(), &identity(2))),
        (
            "CCZ",
            catalog::find_entry("ccz").unwrap().reference(&[]).unwrap(),
        ),
    ];
    let mut cert_detail = String::new();
    for (name, target) in &targets {
        let cert = check_diagonal_reachability(3, target, name, 3).unwrap();
        if cert.combos_checked != 256 {
            problems.push(format!(
                "{name}: {} combos, expected 256",
                cert.combos_checked
            ));
        }
        if cert.distinct_projective_classes != 128 {
            problems.push(format!(
                "{name}: {} classes, expected 128",
                cert.distinct_projective_classes
            ));
        }
        if cert.reachable() {
            problems.push(format!("{name}: unexpectedly reachable"));
        }
        cert_detail = format!(
            "{} combos, {} classes",
            cert.combos_checked, cert.distinct_projective_classes
        );
    }

    let ok = problems.is_empty();
    report(
        8,
        "reachability",
        ok,
        &if ok {
            format!(
                "|0> orbit 6 states; equal-coefficient state at depth {}; \
                 {cert_detail}, all three CZ-type targets absent",
                equal_state.unwrap().1
            )
        } else {
            problems.join("; ")
        },
    );
    assert!(ok, "{problems:?}");
}

#[test]
fn criterion_09_impossibility_claims() {
    // Claimed: no braid word acts as X on logical qubit 1 of 2.
    let x_low = kron(&identity(2), &pauli_x());
    let out2 = search_word(2, &x_low, 6, 1_000_000, SYNTH_TOL).unwrap();

    // Claimed: no braid word acts as X on the middle qubit of 3.
    let x_mid = kron(&kron(&identity(2), &pauli_x()), &identity(2));
    let out3 = search_word(3, &x_mid, 6, 1_000_000, SYNTH_TOL).unwrap();

    // W-state absence, which does hold: every orbit state of |000> has a
    // power-of-two number of equal-magnitude amplitudes, and W has three.
    let s = 1.0 / 3f64.sqrt();
    let mut w = CVec::from_elem(8, ZERO);
    for idx in [1, 2, 4] {
        w[idx] = Complex64::new(s, 0.0);
    }
    let orb = orbit_states(3, &basis_state(8, 0), 5_000).unwrap();
    let w_hit = orb.find_logical(&w, SYNTH_TOL).unwrap();
    let supports_pow2 = orb.amplitude_histogram.keys().all(|&k| k.is_power_of_two());
    let w_absent = orb.completed && orb.size() == 840 && supports_pow2 && w_hit.is_none();

    let mut detail = Vec::new();
    if let Some(word) = &out2.word {
        detail.push(format!(
            "word {:?} realizes X on logical 1 of 2 (phase {:.4})",
            word,
            out2.phase.unwrap()
        ));
    }
    if let Some(word) = &out3.word {
        detail.push(format!(
            "word {:?} realizes X on the middle qubit of 3 (phase {:.4})",
            word,
            out3.phase.unwrap()
        ));
    }
    detail.push(if w_absent {
        format!(
            "W-state absence holds: orbit of |000> has {} states, amplitude supports {:?}",
            orb.size(),
            orb.amplitude_histogram
        )
    } else {
        "W-state sub-claim failed".into()
    });

    let ok = out2.word.is_none() && out3.word.is_none() && w_absent;
    report(9, "bit-flip impossibility", ok, &detail.join("; "));
    assert!(
        out2.word.is_none() && out3.word.is_none(),
        "claimed-unreachable gates are reachable: {detail:?}"
    );
    assert!(w_absent);
}

#[test]
fn criterion_10_braid_algebra() {
    let mut problems = Vec::new();
    let mut rng = StdRng::seed_from_u64(17);

    for m in [4usize, 6, 8] {
        let f = FockSpace::new(m).unwrap();
        let b = |a: usize| f.braid(a).unwrap();

        // Artin relations at theta = pi/4
        for a in 1..m - 2 {
            let lhs = b(a).dot(&b(a + 1)).dot(&b(a));
            let rhs = b(a + 1).dot(&b(a)).dot(&b(a + 1));
            if max_abs_diff(&lhs, &rhs) > EXACT_TOL {
                problems.push(format!("Artin braid relation fails at m={m}, a={a}"));
            }
        }
        for a in 1..m - 1 {
            for c in a + 2..m {
                let lhs = b(a).dot(&b(c));
                let rhs = b(c).dot(&b(a));
                if max_abs_diff(&lhs, &rhs) > EXACT_TOL {
                    problems.push(format!("distant braids do not commute: m={m}, {a},{c}"));
                }
            }
        }

        // parity commutation for generic angles
        let parity = f.total_parity();
        for a in 1..m {
            let theta: f64 = rng.gen_range(-PI..PI);
            let u = f.braid_angle(a, theta).unwrap();
            if max_abs_diff(&u.dot(&parity), &parity.dot(&u)) > EXACT_TOL {
                problems.push(format!("braid {a} breaks parity at m={m}"));
            }
        }

        // conjugation law: U gamma_a U^-1 = cos(2t) gamma_a + sin(2t) gamma_b
        let mut pairs: Vec<(usize, usize)> = (1..m).map(|a| (a, a + 1)).collect();
        pairs.push((1, m));
        for (a, c) in pairs {
            let theta: f64 = rng.gen_range(-PI..PI);
            let u = f.pair_rotation(a, c, theta).unwrap();
            let uinv = f.pair_rotation(a, c, -theta).unwrap();
            let ga = f.majorana(a).unwrap();
            let gc = f.majorana(c).unwrap();
            let cos2 = Complex64::new((2.0 * theta).cos(), 0.0);
            let sin2 = Complex64::new((2.0 * theta).sin(), 0.0);
            let lhs_a = u.dot(&ga).dot(&uinv);
            let rhs_a = ga.mapv(|z| z * cos2) + gc.mapv(|z| z * sin2);
            let lhs_c = u.dot(&gc).dot(&uinv);
            let rhs_c = ga.mapv(|z| -z * sin2) + gc.mapv(|z| z * cos2);
            if max_abs_diff(&lhs_a, &rhs_a) > EXACT_TOL || max_abs_diff(&lhs_c, &rhs_c) > EXACT_TOL
            {
                problems.push(format!("conjugation law fails at m={m}, pair ({a},{c})"));
            }
        }
    }

    // generalized four-body relations at eight modes
    let f8 = FockSpace::new(8).unwrap();
    let b4 = |a: usize| {
        f8.manybody_rotation(&[a, a + 1, a + 2, a + 3], FRAC_PI_4)
            .unwrap()
    };
    for (a, c) in [(1usize, 2usize), (2, 3), (3, 4), (4, 5), (1, 4), (2, 5)] {
        let (x, y) = (b4(a), b4(c));
        let braid_type = matches!(c - a, 1 | 3);
        let lhs;
        let rhs;
        if braid_type {
            lhs = x.dot(&y).dot(&x);
            rhs = y.dot(&x).dot(&y);
        } else {
            lhs = x.dot(&y);
            rhs = y.dot(&x);
        }
        if max_abs_diff(&lhs, &rhs) > EXACT_TOL {
            problems.push(format!("four-body relation fails for ({a},{c})"));
        }
    }
    // offset-2 and offset-4 four-body operators commute
    for (a, c) in [(1usize, 3usize), (2, 4), (3, 5), (1, 5)] {
        let (x, y) = (b4(a), b4(c));
        if max_abs_diff(&x.dot(&y), &y.dot(&x)) > EXACT_TOL {
            problems.push(format!("four-body operators ({a},{c}) do not commute"));
        }
    }
    // six-body: braid-type at odd offset, commuting at even offset
    let b6 = |a: usize| {
        f8.manybody_rotation(&[a, a + 1, a + 2, a + 3, a + 4, a + 5], FRAC_PI_4)
            .unwrap()
    };
    for (a, c) in [(1usize, 2usize), (2, 3)] {
        let (x, y) = (b6(a), b6(c));
        let lhs = x.dot(&y).dot(&x);
        let rhs = y.dot(&x).dot(&y);
        if max_abs_diff(&lhs, &rhs) > EXACT_TOL {
            problems.push(format!("six-body braid relation fails for ({a},{c})"));
        }
    }
    {
        let (x, y) = (b6(1), b6(3));
        if max_abs_diff(&x.dot(&y), &y.dot(&x)) > EXACT_TOL {
            problems.push("six-body operators (1,3) do not commute".into());
        }
    }

    // the quoted fourth-power identity, taken literally
    let mut b4_defect: f64 = 0.0;
    let mut b4_projective = true;
    let mut b8_ok = true;
    for m in [4usize, 6, 8] {
        let f = FockSpace::new(m).unwrap();
        for a in 1..m {
            let b = f.braid(a).unwrap();
            let b2 = b.dot(&b);
            let b4th = b2.dot(&b2);
            b4_defect = b4_defect.max(max_abs_diff(&b4th, &identity(b4th.nrows())));
            let (proj, _) = equal_up_to_phase(&identity(b4th.nrows()), &b4th, EXACT_TOL).unwrap();
            b4_projective &= proj;
            b8_ok &= max_abs_diff(&b4th.dot(&b4th), &identity(b4th.nrows())) <= EXACT_TOL;
        }
    }
    let fourth_power_ok = b4_defect <= EXACT_TOL;
    if !fourth_power_ok {
        problems.push(format!(
            "B^4 = I fails with defect {b4_defect:.1} (B^4 = -I: projective identity {}, B^8 = I {})",
            if b4_projective { "holds" } else { "fails" },
            if b8_ok { "holds" } else { "fails" }
        ));
    }

    let ok = problems.is_empty();
    report(10, "algebra invariants", ok, &problems.join("; "));
    assert!(ok, "{problems:?}");
}

#[test]
fn criterion_11_controlled_unitary() {
    let mut rng = StdRng::seed_from_u64(42);
    let mut problems = Vec::new();
    for k in 0..100 {
        let beta: f64 = rng.gen_range(-PI..PI);
        let gamma: f64 = rng.gen_range(-PI..PI);
        let delta: f64 = rng.gen_range(-PI..PI);

        let a = rz_matrix(beta + FRAC_PI_2).dot(&rx_matrix(gamma / 2.0));
        let b = rx_matrix(-gamma / 2.0).dot(&rz_matrix(-(beta + delta) / 2.0));
        let c = rz_matrix((delta - beta - PI) / 2.0);
        let abc = a.dot(&b).dot(&c);
        if max_abs_diff(&abc, &identity(2)) > EXACT_TOL {
            problems.push(format!("sample {k}: U_A U_B U_C != I"));
        }

        let prog = synth_controlled_unitary(beta, gamma, delta).unwrap();
        let got = realize_logical(&prog, 2);
        let want = controlled_unitary_matrix(beta, gamma, delta);
        let fid = phase_fidelity(&want, &got).unwrap();
        if fid < 1.0 - SYNTH_TOL {
            problems.push(format!("sample {k}: fidelity {fid:.12}"));
        }
    }

    let ok = problems.is_empty();
    report(
        11,
        "controlled-unitary decomposition",
        ok,
        &if ok {
            "U_A U_B U_C = I and 100 random programs match the reference".into()
        } else {
            problems.join("; ")
        },
    );
    assert!(ok, "{problems:?}");
}
