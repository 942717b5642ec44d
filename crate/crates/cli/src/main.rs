//! Command-line front end for the Majorana braid toolkit.
//!
//! Exit codes: 0 success, 1 verification failure or runtime error, 2 usage
//! error (from the argument parser), 3 target not found / walk truncated.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use majorana_core::catalog::{self, VerifyReport};
use majorana_core::matrix::{equal_up_to_phase, max_abs_diff, CMat};
use majorana_core::search::{
    check_diagonal_reachability, enumerate_group, enumerate_group_hashed, orbit_states,
    search_word, EnumerationMode,
};
use majorana_core::synthesis;
use majorana_core::{Encoding, Error, FockSpace, MajoranaProgram, ProgramDocument};

#[derive(Parser)]
#[command(
    name = "majorana",
    version,
    about = "Braid-program toolkit for Majorana-encoded qubits",
    propagate_version = true
)]
struct Cli {
    /// Fidelity tolerance for pass/fail decisions
    #[arg(long, global = true, default_value_t = 1e-9)]
    eps: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Replay catalog entries against their reference matrices
    Verify {
        /// Entry name; omit with --all to check the whole table
        name: Option<String>,
        /// Verify every catalog entry
        #[arg(long)]
        all: bool,
        /// Parameter list for parameterized entries (angle expressions)
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
        /// Also write the reports as JSON
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// List the catalog (or export it, programs included, as JSON)
    Catalog {
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Synthesize a braid program for a target gate
    Synth {
        #[command(subcommand)]
        kind: SynthKind,
    },
    /// Breadth-first search for the shortest braid word realizing an entry
    Search {
        /// Catalog entry to search for
        #[arg(long)]
        target: String,
        /// Parameters for the target entry
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
        /// Maximum word length
        #[arg(long, default_value_t = 12)]
        depth: usize,
        /// Cap on explored group elements
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
    /// Enumerate the group generated by all adjacent braids
    Enumerate {
        #[arg(long)]
        majoranas: usize,
        /// Use the floating-point backend instead of exact arithmetic
        #[arg(long)]
        float: bool,
        /// Use hashed class keys (memory-lean, for larger mode counts)
        #[arg(long)]
        hashed: bool,
        #[arg(long, default_value_t = 10_000_000)]
        cap: usize,
    },
    /// Orbit of a logical basis state under braiding
    Orbit {
        /// Number of logical qubits
        #[arg(long)]
        logical: usize,
        /// Initial logical basis index
        #[arg(long, default_value_t = 0)]
        state: usize,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
    /// Exhaustive reachability certificate for a diagonal catalog entry
    /// under the commuting single-pair braids
    Certify {
        #[arg(long)]
        target: String,
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
        #[arg(long, default_value_t = 3)]
        max_exponent: u32,
        /// Write the certificate JSON here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the matrix realized by a catalog entry or a program file
    Dump {
        /// Catalog entry name (alternative to --program)
        name: Option<String>,
        /// Program document (JSON) to realize instead of a catalog entry
        #[arg(long)]
        program: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
        /// "logical" (restricted to the code space) or "physical"
        #[arg(long, default_value = "logical")]
        basis: String,
        /// Also write the matrix as JSON
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SynthKind {
    /// Diagonal gate diag(e^{i phi_j}) from 2^n comma-separated phases
    Diag {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        phases: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Re-run the program and compare against the target
        #[arg(long)]
        check: bool,
    },
    /// n-controlled Z
    Cnz {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        check: bool,
    },
    /// n-controlled phase gate
    Cnphase {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        check: bool,
    },
    /// n-controlled NOT onto a chosen target qubit
    Cnnot {
        #[arg(long)]
        n: usize,
        /// Target logical qubit (1-based; controls are the others)
        #[arg(long, default_value_t = 1)]
        target: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        check: bool,
    },
    /// n-controlled SWAP of the two lowest logical qubits
    Cnswap {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        check: bool,
    },
    /// Controlled Rz(beta) Ry(gamma) Rz(delta) (control = high qubit)
    Cu {
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        check: bool,
    },
    /// Rx(theta) on one logical qubit
    Rx {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        check: bool,
    },
    /// Rz(theta) on one logical qubit
    Rz {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        check: bool,
    },
    /// Hadamard on one logical qubit
    H {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        check: bool,
    },
}

/// Matrix serialization: row-major entries as [re, im] pairs.
#[derive(Serialize, Deserialize)]
struct MatrixDocument {
    version: u32,
    dimension: usize,
    basis: String,
    entries: Vec<Vec<[f64; 2]>>,
}

impl MatrixDocument {
    fn from_matrix(m: &CMat, basis: &str) -> Self {
        MatrixDocument {
            version: 1,
            dimension: m.nrows(),
            basis: basis.to_string(),
            entries: m
                .rows()
                .into_iter()
                .map(|r| r.iter().map(|z| [z.re, z.im]).collect())
                .collect(),
        }
    }
}

/// Parse an angle expression: a float, or `[sign][coef]pi[/den]`
/// (e.g. "pi", "-pi/4", "3pi/8", "0.5pi").
fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim();
    if let Some(idx) = t.find("pi") {
        let (coef_str, rest) = (&t[..idx], &t[idx + 2..]);
        let coef = match coef_str.trim() {
            "" | "+" => 1.0,
            "-" => -1.0,
            c => c
                .parse::<f64>()
                .map_err(|_| format!("bad angle coefficient in {t:?}"))?,
        };
        let den = match rest.trim() {
            "" => 1.0,
            r => {
                let r = r
                    .strip_prefix('/')
                    .ok_or_else(|| format!("bad angle suffix in {t:?}"))?;
                let d: f64 = r
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad angle denominator in {t:?}"))?;
                if d == 0.0 {
                    return Err(format!("zero denominator in {t:?}"));
                }
                d
            }
        };
        Ok(coef * std::f64::consts::PI / den)
    } else {
        t.parse::<f64>().map_err(|_| format!("bad angle {t:?}"))
    }
}

fn parse_angle_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(parse_angle)
        .collect()
}

fn parse_params(opt: &Option<String>) -> Result<Vec<f64>, String> {
    match opt {
        None => Ok(Vec::new()),
        Some(s) => parse_angle_list(s),
    }
}

/// 17 significant digits, round-trip exact, with negative zero normalized.
fn fmt17(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    format!("{x:.16e}")
}

fn write_json(path: &Path, value: &impl Serialize) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn report_line(r: &VerifyReport) -> String {
    let status = if !r.pass {
        "FAIL"
    } else if !r.prefactor_exact {
        "PASS (phase flag)"
    } else {
        "PASS"
    };
    format!(
        "{:<22} fidelity={:.12} phase={:+.6}{:+.6}i entry_err={:.3e} steps={:>3}  {status}",
        r.name, r.fidelity, r.phase.re, r.phase.im, r.max_entry_err, r.num_steps
    )
}

#[derive(Serialize)]
struct VerifyReportDocument {
    name: String,
    params: Vec<f64>,
    fidelity: f64,
    phase: [f64; 2],
    prefactor_exact: bool,
    max_entry_err: f64,
    pass: bool,
    num_steps: usize,
}

impl From<&VerifyReport> for VerifyReportDocument {
    fn from(r: &VerifyReport) -> Self {
        VerifyReportDocument {
            name: r.name.clone(),
            params: r.params.clone(),
            fidelity: r.fidelity,
            phase: [r.phase.re, r.phase.im],
            prefactor_exact: r.prefactor_exact,
            max_entry_err: r.max_entry_err,
            pass: r.pass,
            num_steps: r.num_steps,
        }
    }
}

fn realize_logical(program: &MajoranaProgram) -> Result<CMat, Error> {
    let space = FockSpace::new(program.num_majoranas)?;
    let num_logical = program.num_majoranas / 2 - 1;
    let enc = Encoding::new(num_logical);
    enc.restrict_to_logical(&space.run_program(program)?)
}

/// Shared tail of every synth subcommand: optionally save, optionally check.
fn finish_synth(
    program: &MajoranaProgram,
    reference: Option<&CMat>,
    out: &Option<PathBuf>,
    check: bool,
    eps: f64,
) -> Result<ExitCode, String> {
    println!(
        "program: {} Majorana modes, {} steps, prefactor {:+.6}{:+.6}i",
        program.num_majoranas,
        program.steps.len(),
        program.prefactor.re,
        program.prefactor.im
    );
    if let Some(path) = out {
        write_json(path, &ProgramDocument::from(program))?;
        println!("wrote {}", path.display());
    }
    if check {
        let reference = reference.ok_or("no reference available for --check")?;
        let realized = realize_logical(program).map_err(|e| e.to_string())?;
        let err = max_abs_diff(reference, &realized);
        let (eq, _) = equal_up_to_phase(reference, &realized, eps).map_err(|e| e.to_string())?;
        println!("check: max entry error {:.3e}", err);
        if !(eq && err <= 1e-9) {
            println!("check FAILED");
            return Ok(ExitCode::from(1));
        }
        println!("check PASS");
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(
    name: Option<String>,
    all: bool,
    params: &Option<String>,
    json: &Option<PathBuf>,
    eps: f64,
) -> Result<ExitCode, String> {
    let reports: Vec<VerifyReport> = match name {
        Some(name) if !all => {
            let entry = catalog::find_entry(&name).map_err(stringify_not_found)?;
            let params = if params.is_some() {
                parse_params(params)?
            } else {
                catalog::sample_params(entry)
            };
            vec![catalog::verify_entry(&name, &params, eps).map_err(|e| e.to_string())?]
        }
        _ => catalog::verify_all(eps).map_err(|e| e.to_string())?,
    };
    for r in &reports {
        println!("{}", report_line(r));
    }
    let clean = reports.iter().all(|r| r.pass && r.prefactor_exact);
    let failed = reports.iter().filter(|r| !r.pass).count();
    let flagged = reports
        .iter()
        .filter(|r| r.pass && !r.prefactor_exact)
        .count();
    println!(
        "{} entries: {} clean, {} phase-flagged, {} failed",
        reports.len(),
        reports.len() - failed - flagged,
        flagged,
        failed
    );
    if let Some(path) = json {
        let docs: Vec<VerifyReportDocument> = reports.iter().map(Into::into).collect();
        write_json(path, &docs)?;
    }
    Ok(if clean {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn stringify_not_found(e: Error) -> String {
    format!("NOT_FOUND:{e}")
}

fn run_synth(kind: SynthKind, eps: f64) -> Result<ExitCode, String> {
    let core = |e: Error| e.to_string();
    match kind {
        SynthKind::Diag {
            n,
            phases,
            out,
            check,
        } => {
            let phis = parse_angle_list(&phases)?;
            let program = synthesis::synth_diagonal(n, &phis).map_err(core)?;
            let reference = majorana_core::matrix::diag(
                &phis
                    .iter()
                    .map(|&p| Complex64::from_polar(1.0, p))
                    .collect::<Vec<_>>(),
            );
            finish_synth(&program, Some(&reference), &out, check, eps)
        }
        SynthKind::Cnz { n, out, check } => {
            let program = synthesis::synth_cn_z(n).map_err(core)?;
            let dim = 1 << (n + 1);
            let mut reference = majorana_core::matrix::identity(dim);
            reference[[dim - 1, dim - 1]] = -Complex64::ONE;
            finish_synth(&program, Some(&reference), &out, check, eps)
        }
        SynthKind::Cnphase { n, phi, out, check } => {
            let phi = parse_angle(&phi)?;
            let program = synthesis::synth_cn_phase(n, phi).map_err(core)?;
            let dim = 1 << (n + 1);
            let mut reference = majorana_core::matrix::identity(dim);
            reference[[dim - 1, dim - 1]] = Complex64::from_polar(1.0, phi);
            finish_synth(&program, Some(&reference), &out, check, eps)
        }
        SynthKind::Cnnot {
            n,
            target,
            out,
            check,
        } => {
            let program = synthesis::synth_cn_not(n, target).map_err(core)?;
            let reference = synthesis::cn_not_matrix(n, target);
            finish_synth(&program, Some(&reference), &out, check, eps)
        }
        SynthKind::Cnswap { n, out, check } => {
            let program = synthesis::synth_cn_swap(n).map_err(core)?;
            let reference = synthesis::cn_swap_matrix(n);
            finish_synth(&program, Some(&reference), &out, check, eps)
        }
        SynthKind::Cu {
            beta,
            gamma,
            delta,
            out,
            check,
        } => {
            let (b, g, d) = (
                parse_angle(&beta)?,
                parse_angle(&gamma)?,
                parse_angle(&delta)?,
            );
            let program = synthesis::synth_controlled_unitary(b, g, d).map_err(core)?;
            let reference = synthesis::controlled_unitary_matrix(b, g, d);
            finish_synth(&program, Some(&reference), &out, check, eps)
        }
        SynthKind::Rx {
            n,
            k,
            theta,
            out,
            check,
        } => {
            let theta = parse_angle(&theta)?;
            let program = synthesis::rx_on_logical(n, k, theta).map_err(core)?;
            let reference =
                synthesis::embed_low(&one_qubit_on(k, n, &catalog::rx_matrix(theta)), 0);
            finish_synth(&program, Some(&reference), &out, check, eps)
        }
        SynthKind::Rz {
            n,
            k,
            theta,
            out,
            check,
        } => {
            let theta = parse_angle(&theta)?;
            let program = synthesis::rz_on_logical(n, k, theta).map_err(core)?;
            let reference =
                synthesis::embed_low(&one_qubit_on(k, n, &catalog::rz_matrix(theta)), 0);
            finish_synth(&program, Some(&reference), &out, check, eps)
        }
        SynthKind::H { n, k, out, check } => {
            let program = synthesis::hadamard_on_logical(n, k).map_err(core)?;
            let reference = synthesis::embed_low(&one_qubit_on(k, n, &catalog::hadamard()), 0);
            finish_synth(&program, Some(&reference), &out, check, eps)
        }
    }
}

/// `u` on logical qubit k of n (identity elsewhere).
fn one_qubit_on(k: usize, n: usize, u: &CMat) -> CMat {
    let mut m = u.clone();
    // qubits above k
    if n > k {
        m = majorana_core::matrix::kron(&majorana_core::matrix::identity(1 << (n - k)), &m);
    }
    // qubits below k
    if k > 1 {
        m = majorana_core::matrix::kron(&m, &majorana_core::matrix::identity(1 << (k - 1)));
    }
    m
}

fn run_dump(
    name: Option<String>,
    program_path: &Option<PathBuf>,
    params: &Option<String>,
    basis: &str,
    json: &Option<PathBuf>,
) -> Result<ExitCode, String> {
    let program: MajoranaProgram = match (&name, program_path) {
        (Some(n), None) => {
            let entry = catalog::find_entry(n).map_err(stringify_not_found)?;
            let p = if params.is_some() {
                parse_params(params)?
            } else {
                catalog::sample_params(entry)
            };
            entry.program(&p).map_err(|e| e.to_string())?
        }
        (None, Some(path)) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let doc: ProgramDocument =
                serde_json::from_str(&text).map_err(|e| format!("bad program JSON: {e}"))?;
            doc.into_program().map_err(|e| e.to_string())?
        }
        _ => return Err("give exactly one of NAME or --program FILE".to_string()),
    };

    let space = FockSpace::new(program.num_majoranas).map_err(|e| e.to_string())?;
    let physical = space.run_program(&program).map_err(|e| e.to_string())?;
    let matrix = match basis {
        "physical" => physical,
        "logical" => {
            let num_logical = program.num_majoranas / 2 - 1;
            Encoding::new(num_logical)
                .restrict_to_logical(&physical)
                .map_err(|e| e.to_string())?
        }
        other => return Err(format!("unknown basis {other:?} (logical|physical)")),
    };

    // buffered, and quietly stop if the reader closes the pipe early
    {
        use std::io::Write;
        let stdout = std::io::stdout();
        let mut out = std::io::BufWriter::new(stdout.lock());
        let mut emit = || -> std::io::Result<()> {
            writeln!(out, "dim {} basis {}", matrix.nrows(), basis)?;
            for i in 0..matrix.nrows() {
                for j in 0..matrix.ncols() {
                    let z = matrix[[i, j]];
                    writeln!(out, "{i} {j} {} {}", fmt17(z.re), fmt17(z.im))?;
                }
            }
            out.flush()
        };
        let _ = emit();
    }
    if let Some(path) = json {
        write_json(path, &MatrixDocument::from_matrix(&matrix, basis))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let eps = cli.eps;
    match cli.command {
        Command::Verify {
            name,
            all,
            params,
            json,
        } => run_verify(name, all, &params, &json, eps),
        Command::Catalog { json } => {
            for e in catalog::catalog() {
                println!(
                    "{:<22} {} logical qubit(s){}  {}",
                    e.name,
                    e.num_logical,
                    if e.params.is_empty() {
                        String::new()
                    } else {
                        format!(", params {:?}", e.params)
                    },
                    e.description
                );
            }
            if let Some(path) = json {
                write_json(&path, &catalog::export_catalog_json())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Synth { kind } => run_synth(kind, eps),
        Command::Search {
            target,
            params,
            depth,
            cap,
        } => {
            let entry = catalog::find_entry(&target).map_err(stringify_not_found)?;
            let p = if params.is_some() {
                parse_params(&params)?
            } else {
                catalog::sample_params(entry)
            };
            let reference = entry.reference(&p).map_err(|e| e.to_string())?;
            if entry.state_prep.is_some() {
                return Err("search targets must be gates, not state preparations".into());
            }
            let out = search_word(entry.num_logical, &reference, depth, cap, eps)
                .map_err(|e| e.to_string())?;
            match out.word {
                Some(word) => {
                    let phase = out.phase.unwrap();
                    let word_str = word
                        .iter()
                        .map(i64::to_string)
                        .collect::<Vec<_>>()
                        .join(" ");
                    println!(
                        "word: {word_str}\nlength {} phase {:+.6}{:+.6}i ({} classes explored)",
                        word.len(),
                        phase.re,
                        phase.im,
                        out.classes_explored
                    );
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!(
                        "not found: depth {} explored, {} classes, {}",
                        out.depth_reached,
                        out.classes_explored,
                        if out.group_exhausted {
                            "group exhausted (no braid word exists)"
                        } else {
                            "search truncated"
                        }
                    );
                    Ok(ExitCode::from(3))
                }
            }
        }
        Command::Enumerate {
            majoranas,
            float,
            hashed,
            cap,
        } => {
            let result = if hashed {
                enumerate_group_hashed(majoranas, cap)
            } else {
                let mode = if float {
                    EnumerationMode::Float
                } else {
                    EnumerationMode::Exact
                };
                enumerate_group(majoranas, mode, cap)
            }
            .map_err(|e| e.to_string())?;
            println!(
                "{}",
                serde_json::to_string_pretty(&result).map_err(|e| e.to_string())?
            );
            Ok(if result.completed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
        Command::Orbit {
            logical,
            state,
            cap,
        } => {
            let dim = 1usize << logical;
            if state >= dim {
                return Err(format!(
                    "state index {state} out of range for {logical} qubit(s)"
                ));
            }
            let mut v = ndarray::Array1::from_elem(dim, Complex64::new(0.0, 0.0));
            v[state] = Complex64::ONE;
            let orbit = orbit_states(logical, &v, cap).map_err(|e| e.to_string())?;
            let summary = serde_json::json!({
                "num_logical": orbit.num_logical,
                "num_majoranas": orbit.num_majoranas,
                "initial_state": state,
                "size": orbit.size(),
                "completed": orbit.completed,
                "max_depth": orbit.max_depth,
                "amplitude_histogram": orbit.amplitude_histogram,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&summary).map_err(|e| e.to_string())?
            );
            Ok(if orbit.completed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
        Command::Certify {
            target,
            params,
            max_exponent,
            out,
        } => {
            let entry = catalog::find_entry(&target).map_err(stringify_not_found)?;
            let p = if params.is_some() {
                parse_params(&params)?
            } else {
                catalog::sample_params(entry)
            };
            let reference = entry.reference(&p).map_err(|e| e.to_string())?;
            let cert =
                check_diagonal_reachability(entry.num_logical, &reference, &target, max_exponent)
                    .map_err(|e| e.to_string())?;
            println!(
                "{}",
                serde_json::to_string_pretty(&cert).map_err(|e| e.to_string())?
            );
            if let Some(path) = out {
                write_json(&path, &cert)?;
            }
            Ok(if cert.reachable() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
        Command::Dump {
            name,
            program,
            params,
            basis,
            json,
        } => run_dump(name, &program, &params, &basis, &json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            let (code, msg) = match msg.strip_prefix("NOT_FOUND:") {
                Some(rest) => (3, rest.to_string()),
                None => (1, msg),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
