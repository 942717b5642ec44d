//! Majorana rotation programs: the instruction format everything else
//! produces and consumes.
//!
//! A program is an ordered list of many-body rotation steps plus a global
//! prefactor. Steps apply left to right: the FIRST step in the list acts
//! FIRST on the state, i.e. the full operator is
//! `prefactor * U(step_n) * ... * U(step_1)`.
//!
//! Operator-product notation in the literature is the other way round (the
//! rightmost factor acts first), so a product written `B_a B_b` becomes the
//! step list `[b, a]` here. Braid-word constructors take words in
//! application order.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Rotation angle, optionally tagged as an exact rational multiple of pi.
///
/// Exactly-tagged angles let the search module switch to exact arithmetic
/// when every step is a quarter-turn braid; everything else evaluates them
/// as f64.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Angle {
    /// `numerator / denominator * pi`, denominator > 0.
    ExactPi {
        numerator: i64,
        denominator: i64,
    },
    Float(f64),
}

impl Angle {
    pub fn pi(numerator: i64, denominator: i64) -> Self {
        assert!(denominator > 0, "denominator must be positive");
        Angle::ExactPi {
            numerator,
            denominator,
        }
    }

    pub fn value(&self) -> f64 {
        match *self {
            Angle::ExactPi {
                numerator,
                denominator,
            } => numerator as f64 * PI / denominator as f64,
            Angle::Float(x) => x,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Angle::ExactPi { .. })
    }

    /// True when the angle is an odd multiple of +-pi/4 (a braid generator or
    /// its inverse), the case the exact-arithmetic backend handles.
    pub fn is_quarter_turn(&self) -> bool {
        match *self {
            Angle::ExactPi {
                numerator,
                denominator,
            } => {
                // reduce n/d*pi mod 2pi and test for odd multiples of pi/4
                let scaled = 4 * numerator;
                scaled % denominator == 0 && (scaled / denominator).rem_euclid(2) == 1
            }
            Angle::Float(_) => false,
        }
    }
}

/// One rotation step: strictly increasing 1-based Majorana indices of even
/// cardinality, plus the rotation angle.
#[derive(Debug, Clone, PartialEq)]
pub struct MajoranaStep {
    pub indices: Vec<usize>,
    pub angle: Angle,
}

impl MajoranaStep {
    pub fn new(indices: Vec<usize>, angle: Angle) -> Result<Self> {
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
                    name: "step".into(),
                    reason: format!("indices not ascending: {} after {}", w[1], w[0]),
                });
            }
        }
        Ok(MajoranaStep { indices, angle })
    }
}

/// Ordered rotation program on a fixed number of Majorana operators.
#[derive(Debug, Clone, PartialEq)]
pub struct MajoranaProgram {
    pub num_majoranas: usize,
    pub prefactor: Complex64,
    pub steps: Vec<MajoranaStep>,
}

impl MajoranaProgram {
    pub fn new(num_majoranas: usize) -> Self {
        MajoranaProgram {
            num_majoranas,
            prefactor: Complex64::new(1.0, 0.0),
            steps: Vec::new(),
        }
    }

    pub fn with_prefactor(mut self, prefactor: Complex64) -> Self {
        self.prefactor = prefactor;
        self
    }

    /// Push a step; panics on malformed input (builder for static tables;
    /// use `MajoranaStep::new` + `push_step` for untrusted data).
    pub fn step(mut self, indices: &[usize], angle: Angle) -> Self {
        self.steps
            .push(MajoranaStep::new(indices.to_vec(), angle).expect("malformed step"));
        self
    }

    pub fn push_step(&mut self, step: MajoranaStep) {
        self.steps.push(step);
    }

    /// Build a program from a braid word in APPLICATION order: letter `k > 0`
    /// is braid `B_k` (angle +pi/4 on Majoranas {k, k+1}), `-k` its inverse.
    pub fn from_braid_word(num_majoranas: usize, word: &[i64]) -> Result<Self> {
        let mut prog = MajoranaProgram::new(num_majoranas);
        for &letter in word {
            if letter == 0 {
                return Err(Error::BadParams {
                    name: "braid word".into(),
                    reason: "letter 0 is not a braid".into(),
                });
            }
            let k = letter.unsigned_abs() as usize;
            if k + 1 > num_majoranas {
                return Err(Error::IndexOutOfRange {
                    index: k,
                    what: "braid generator",
                    max: num_majoranas - 1,
                });
            }
            let angle = if letter > 0 {
                Angle::pi(1, 4)
            } else {
                Angle::pi(-1, 4)
            };
            prog.push_step(MajoranaStep::new(vec![k, k + 1], angle)?);
        }
        Ok(prog)
    }

    /// Extract the braid word (application order) if every step is a
    /// quarter-turn on an adjacent pair; None otherwise.
    pub fn as_braid_word(&self) -> Option<Vec<i64>> {
        let mut word = Vec::with_capacity(self.steps.len());
        for s in &self.steps {
            if s.indices.len() != 2 || s.indices[1] != s.indices[0] + 1 {
                return None;
            }
            let theta = s.angle.value();
            let k = s.indices[0] as i64;
            if (theta - PI / 4.0).abs() < 1e-15 {
                word.push(k);
            } else if (theta + PI / 4.0).abs() < 1e-15 {
                word.push(-k);
            } else {
                return None;
            }
        }
        Some(word)
    }

    /// True when every step is an exact odd multiple of pi/4 (exact backend
    /// applicable).
    pub fn all_quarter_turns(&self) -> bool {
        self.steps.iter().all(|s| s.angle.is_quarter_turn())
    }

    /// Program with the same steps reversed and angles negated (the inverse
    /// unitary, with conjugated prefactor).
    pub fn inverse(&self) -> Self {
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|s| MajoranaStep {
                indices: s.indices.clone(),
                angle: match s.angle {
                    Angle::ExactPi {
                        numerator,
                        denominator,
                    } => Angle::ExactPi {
                        numerator: -numerator,
                        denominator,
                    },
                    Angle::Float(x) => Angle::Float(-x),
                },
            })
            .collect();
        MajoranaProgram {
            num_majoranas: self.num_majoranas,
            prefactor: self.prefactor.conj(),
            steps,
        }
    }

    /// Concatenate: `self` runs first, then `other` (operator `other * self`).
    pub fn then(&self, other: &MajoranaProgram) -> Result<Self> {
        if self.num_majoranas != other.num_majoranas {
            return Err(Error::DimensionMismatch {
                expected: self.num_majoranas,
                got: other.num_majoranas,
            });
        }
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().cloned());
        Ok(MajoranaProgram {
            num_majoranas: self.num_majoranas,
            prefactor: self.prefactor * other.prefactor,
            steps,
        })
    }
}

// ---------------------------------------------------------------------------
// JSON document form
// ---------------------------------------------------------------------------

/// Serialized angle: either an exact rational multiple of pi or a float.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum AngleDocument {
    ExactPi {
        numerator: i64,
        denominator: i64,
        times_pi: bool,
    },
    Float {
        float: f64,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct StepDocument {
    pub indices: Vec<usize>,
    pub angle: AngleDocument,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ComplexDocument {
    pub re: f64,
    pub im: f64,
}

/// On-disk program format (schemas/program.schema.json).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ProgramDocument {
    pub version: u32,
    pub num_majoranas: usize,
    pub prefactor: ComplexDocument,
    pub steps: Vec<StepDocument>,
}

pub const PROGRAM_DOCUMENT_VERSION: u32 = 1;

impl From<&MajoranaProgram> for ProgramDocument {
    fn from(p: &MajoranaProgram) -> Self {
        ProgramDocument {
            version: PROGRAM_DOCUMENT_VERSION,
            num_majoranas: p.num_majoranas,
            prefactor: ComplexDocument {
                re: p.prefactor.re,
                im: p.prefactor.im,
            },
            steps: p
                .steps
                .iter()
                .map(|s| StepDocument {
                    indices: s.indices.clone(),
                    angle: match s.angle {
                        Angle::ExactPi {
                            numerator,
                            denominator,
                        } => AngleDocument::ExactPi {
                            numerator,
                            denominator,
                            times_pi: true,
                        },
                        Angle::Float(x) => AngleDocument::Float { float: x },
                    },
                })
                .collect(),
        }
    }
}

impl ProgramDocument {
    /// Validate and convert into a runnable program.
    pub fn into_program(self) -> Result<MajoranaProgram> {
        if self.version != PROGRAM_DOCUMENT_VERSION {
            return Err(Error::BadParams {
                name: "program document".into(),
                reason: format!(
                    "unsupported version {} (expected {})",
                    self.version, PROGRAM_DOCUMENT_VERSION
                ),
            });
        }
        let mut prog = MajoranaProgram::new(self.num_majoranas)
            .with_prefactor(Complex64::new(self.prefactor.re, self.prefactor.im));
        for sd in self.steps {
            let angle = match sd.angle {
                AngleDocument::ExactPi {
                    numerator,
                    denominator,
                    times_pi,
                } => {
                    if !times_pi {
                        return Err(Error::BadParams {
                            name: "angle".into(),
                            reason: "rational angles must set times_pi".into(),
                        });
                    }
                    if denominator <= 0 {
                        return Err(Error::BadParams {
                            name: "angle".into(),
                            reason: format!("denominator must be positive, got {denominator}"),
                        });
                    }
                    Angle::ExactPi {
                        numerator,
                        denominator,
                    }
                }
                AngleDocument::Float { float } => Angle::Float(float),
            };
            prog.push_step(MajoranaStep::new(sd.indices, angle)?);
        }
        Ok(prog)
    }
}
