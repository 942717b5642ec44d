//! Exhaustive reachability analysis for braid words.
//!
//! The group generated by the quarter-turn braids on a fixed number of
//! Majorana modes is finite, so reachability questions ("is there a braid
//! word realizing this gate?", "can braiding prepare this state?") are
//! decidable by complete enumeration. The enumeration runs over exact
//! matrices ([`crate::exact`]) so membership and distinctness are decided by
//! integer comparisons, not floating-point tolerances.
//!
//! Projective classes (elements up to global phase) are deduplicated with
//! the canonical rotation-minimal key. The linear order is recovered without
//! storing every phase copy: whenever a breadth-first edge lands in an
//! already-seen class, the phase offset `z^k` between the arriving element
//! and the stored class representative is recorded. The offsets observed
//! over all edges generate exactly the subgroup of global phases contained
//! in the group (tree edges carry offset zero by construction; any phase in
//! the group is the accumulated offset of some closed word), so
//! `linear order = classes * subgroup size`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::hash::{Hash, Hasher};

use num_complex::Complex64;
use serde::Serialize;

use crate::encoding::Encoding;
use crate::error::{Error, Result};
use crate::exact::{ExactBraidGenerator, ExactMatrix};
use crate::fock::FockSpace;
use crate::matrix::{canonical_state_key, equal_up_to_phase, max_abs_diff, CMat, CVec};

/// Backend for group enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EnumerationMode {
    /// Integer cyclotomic arithmetic; equality decisions are exact.
    Exact,
    /// Floating-point matrices with grid-snapped canonical keys. Used as an
    /// independent cross-check of the exact backend.
    Float,
}

/// Result of a breadth-first group enumeration.
#[derive(Debug, Clone, Serialize)]
pub struct GroupEnumeration {
    pub num_majoranas: usize,
    pub mode: EnumerationMode,
    /// Number of distinct elements up to global phase.
    pub order_projective: usize,
    /// Number of distinct elements including global phase.
    pub order_linear: usize,
    /// Size of the subgroup of global phases (`order_linear /
    /// order_projective`); always divides 8.
    pub phase_order: usize,
    /// Phase offsets (multiples of pi/4) observed on non-tree edges.
    pub phase_deltas: Vec<u32>,
    /// False if the class cap stopped the walk early; counts are then lower
    /// bounds.
    pub completed: bool,
    /// Largest generator count at which a new class appeared (the Cayley
    /// diameter when completed).
    pub depth: usize,
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn phase_subgroup_order(deltas: &[u32]) -> usize {
    let mut g = 8u32;
    for &d in deltas {
        if d % 8 != 0 {
            g = gcd(g, d % 8);
        }
    }
    (8 / g) as usize
}

fn validate_even_modes(num_majoranas: usize) -> Result<()> {
    if num_majoranas == 0 || num_majoranas % 2 != 0 {
        return Err(Error::OddMajoranaCount(num_majoranas));
    }
    let cap = crate::fock::configured_cap();
    if num_majoranas > cap {
        return Err(Error::CapExceeded {
            requested: num_majoranas,
            cap,
        });
    }
    Ok(())
}

/// All braid letters `1, -1, 2, -2, ...` on the given mode count. This fixed
/// order also defines the lexicographic tie-break for word search.
fn braid_alphabet(num_majoranas: usize) -> Vec<i64> {
    (1..num_majoranas as i64).flat_map(|a| [a, -a]).collect()
}

/// Enumerate the group generated by all adjacent braids `B_a^{+-1}`.
pub fn enumerate_group(
    num_majoranas: usize,
    mode: EnumerationMode,
    class_cap: usize,
) -> Result<GroupEnumeration> {
    match mode {
        EnumerationMode::Exact => enumerate_exact(num_majoranas, class_cap),
        EnumerationMode::Float => enumerate_float(num_majoranas, class_cap),
    }
}

fn enumerate_exact(num_majoranas: usize, class_cap: usize) -> Result<GroupEnumeration> {
    validate_even_modes(num_majoranas)?;
    let gens: Vec<ExactBraidGenerator> = braid_alphabet(num_majoranas)
        .into_iter()
        .map(|l| ExactBraidGenerator::new(num_majoranas, l))
        .collect::<Result<_>>()?;
    let dim = 1usize << (num_majoranas / 2);

    let id = ExactMatrix::identity(dim);
    let mut classes: HashMap<Vec<u8>, Vec<u8>> = HashMap::new();
    classes.insert(id.canonical_key(), id.serialize());
    let mut deltas_seen = [false; 8];
    let mut frontier = vec![id];
    let mut depth = 0usize;
    let mut completed = true;

    'bfs: while !frontier.is_empty() {
        let mut next = Vec::new();
        for u in &frontier {
            for g in &gens {
                let v = g.apply(u);
                let key = v.canonical_key();
                match classes.entry(key) {
                    std::collections::hash_map::Entry::Vacant(slot) => {
                        slot.insert(v.serialize());
                        next.push(v);
                    }
                    std::collections::hash_map::Entry::Occupied(slot) => {
                        let k = v
                            .phase_delta_to(slot.get())
                            .expect("same canonical key implies a z^k relation");
                        deltas_seen[k as usize] = true;
                    }
                }
            }
            if classes.len() > class_cap {
                completed = false;
                break 'bfs;
            }
        }
        if !next.is_empty() {
            depth += 1;
        }
        frontier = next;
    }

    let deltas: Vec<u32> = (0..8).filter(|&k| deltas_seen[k as usize]).collect();
    let phase_order = phase_subgroup_order(&deltas);
    Ok(GroupEnumeration {
        num_majoranas,
        mode: EnumerationMode::Exact,
        order_projective: classes.len(),
        order_linear: classes.len() * phase_order,
        phase_order,
        phase_deltas: deltas,
        completed,
        depth,
    })
}

fn enumerate_float(num_majoranas: usize, class_cap: usize) -> Result<GroupEnumeration> {
    let space = FockSpace::new(num_majoranas)?;
    let mut gens = Vec::new();
    for a in 1..num_majoranas {
        gens.push(space.braid(a)?);
        gens.push(space.braid_inverse(a)?);
    }

    let id = crate::matrix::identity(space.dimension());
    let mut classes: HashMap<Vec<u8>, CMat> = HashMap::new();
    classes.insert(crate::matrix::canonical_unitary_key(&id), id.clone());
    let mut deltas_seen = [false; 8];
    let mut frontier = vec![id];
    let mut depth = 0usize;
    let mut completed = true;

    'bfs: while !frontier.is_empty() {
        let mut next = Vec::new();
        for u in &frontier {
            for g in &gens {
                let v = g.dot(u);
                let key = crate::matrix::canonical_unitary_key(&v);
                match classes.entry(key) {
                    std::collections::hash_map::Entry::Vacant(slot) => {
                        slot.insert(v.clone());
                        next.push(v);
                    }
                    std::collections::hash_map::Entry::Occupied(slot) => {
                        let (eq, phase) = equal_up_to_phase(slot.get(), &v, 1e-6)?;
                        debug_assert!(eq, "canonical key collision without phase match");
                        // rep = z^k v, i.e. k = -arg(phase) in eighth turns
                        let k = (-phase.arg() / std::f64::consts::FRAC_PI_4).round() as i64;
                        deltas_seen[k.rem_euclid(8) as usize] = true;
                    }
                }
            }
            if classes.len() > class_cap {
                completed = false;
                break 'bfs;
            }
        }
        if !next.is_empty() {
            depth += 1;
        }
        frontier = next;
    }

    let deltas: Vec<u32> = (0..8).filter(|&k| deltas_seen[k as usize]).collect();
    let phase_order = phase_subgroup_order(&deltas);
    Ok(GroupEnumeration {
        num_majoranas,
        mode: EnumerationMode::Float,
        order_projective: classes.len(),
        order_linear: classes.len() * phase_order,
        phase_order,
        phase_deltas: deltas,
        completed,
        depth,
    })
}

/// Memory-lean variant for larger mode counts: projective classes are
/// tracked by 128-bit hashes of the canonical serializations rather than the
/// serializations themselves, and only the current breadth-first layer keeps
/// full matrices. Each class stores the rotation index of its first-seen
/// representative, so phase offsets on revisits come from the difference of
/// rotation indices and the linear order follows by the same subgroup
/// argument as the exact walk. Hash collisions over the group sizes involved
/// are negligible (p ~ n^2 / 2^128) but the counts are no longer certified
/// by exact comparisons.
pub fn enumerate_group_hashed(num_majoranas: usize, class_cap: usize) -> Result<GroupEnumeration> {
    validate_even_modes(num_majoranas)?;
    let gens: Vec<ExactBraidGenerator> = braid_alphabet(num_majoranas)
        .into_iter()
        .map(|l| ExactBraidGenerator::new(num_majoranas, l))
        .collect::<Result<_>>()?;
    let dim = 1usize << (num_majoranas / 2);

    fn hash128(bytes: &[u8]) -> u128 {
        let mut h1 = std::collections::hash_map::DefaultHasher::new();
        let mut h2 = std::collections::hash_map::DefaultHasher::new();
        0x9e37_79b9_7f4a_7c15u64.hash(&mut h1);
        0x517c_c1b7_2722_0a95u64.hash(&mut h2);
        bytes.hash(&mut h1);
        bytes.hash(&mut h2);
        ((h1.finish() as u128) << 64) | h2.finish() as u128
    }

    let id = ExactMatrix::identity(dim);
    // class hash -> rotation index of the stored representative
    let mut classes: HashMap<u128, u8> = HashMap::new();
    let (k0, key0) = id.canonical_rotation();
    classes.insert(hash128(&key0), k0 as u8);
    let mut deltas_seen = [false; 8];
    // plain FIFO of (depth, packed matrix): draining while expanding keeps
    // one copy of the pending set in memory instead of two full layers
    let mut queue: std::collections::VecDeque<(u8, Vec<u8>)> = std::collections::VecDeque::new();
    queue.push_back((0, id.pack_i8()));
    let mut depth = 0usize;
    let mut completed = true;

    'bfs: while let Some((d, packed)) = queue.pop_front() {
        let u = ExactMatrix::unpack_i8(dim, &packed);
        for g in &gens {
            let v = g.apply(&u);
            let (kv, key) = v.canonical_rotation();
            match classes.entry(hash128(&key)) {
                std::collections::hash_map::Entry::Vacant(slot) => {
                    slot.insert(kv as u8);
                    depth = depth.max(d as usize + 1);
                    queue.push_back((d + 1, v.pack_i8()));
                }
                std::collections::hash_map::Entry::Occupied(slot) => {
                    // rot(kv) v == rot(k_rep) rep, so rep = z^(kv-k_rep) v
                    let delta = (kv + 8 - *slot.get() as u32) % 8;
                    deltas_seen[delta as usize] = true;
                }
            }
        }
        if classes.len() > class_cap {
            completed = false;
            break 'bfs;
        }
    }

    let deltas: Vec<u32> = (0..8).filter(|&k| deltas_seen[k as usize]).collect();
    let phase_order = phase_subgroup_order(&deltas);
    Ok(GroupEnumeration {
        num_majoranas,
        mode: EnumerationMode::Exact,
        order_projective: classes.len(),
        order_linear: classes.len() * phase_order,
        phase_order,
        phase_deltas: deltas,
        completed,
        depth,
    })
}

/// Outcome of a shortest-word search.
#[derive(Debug, Clone)]
pub struct WordSearchOutcome {
    /// Shortest braid word whose restriction to the logical space equals the
    /// target up to a global phase, in application order (first letter acts
    /// first). Ties are broken by the alphabet order `1 < -1 < 2 < -2 < ...`.
    pub word: Option<Vec<i64>>,
    /// Phase with `realized = phase * target` for the returned word.
    pub phase: Option<Complex64>,
    pub depth_reached: usize,
    pub classes_explored: usize,
    /// True if the whole (finite) group was enumerated without a match, which
    /// makes the negative answer exhaustive rather than a depth cutoff.
    pub group_exhausted: bool,
}

/// Breadth-first search for the shortest braid word realizing `target` on
/// the logical space, up to global phase. One ancilla pair beyond the
/// logical modes is always included: `num_majoranas = 2 (num_logical + 1)`.
pub fn search_word(
    num_logical: usize,
    target_logical: &CMat,
    max_depth: usize,
    class_cap: usize,
    eps: f64,
) -> Result<WordSearchOutcome> {
    let enc = Encoding::new(num_logical);
    let m = enc.num_majoranas();
    validate_even_modes(m)?;
    if target_logical.nrows() != enc.logical_dimension()
        || target_logical.ncols() != enc.logical_dimension()
    {
        return Err(Error::DimensionMismatch {
            expected: enc.logical_dimension(),
            got: target_logical.nrows(),
        });
    }
    let gens: Vec<ExactBraidGenerator> = braid_alphabet(m)
        .into_iter()
        .map(|l| ExactBraidGenerator::new(m, l))
        .collect::<Result<_>>()?;
    let dim = 1usize << (m / 2);

    struct Node {
        parent: u32,
        letter: i64,
    }
    let mut nodes: Vec<Node> = Vec::new();
    let mut classes: HashMap<Vec<u8>, u32> = HashMap::new();

    let reconstruct = |nodes: &[Node], mut idx: u32| -> Vec<i64> {
        let mut word = Vec::new();
        while idx != u32::MAX {
            let n = &nodes[idx as usize];
            word.push(n.letter);
            idx = n.parent;
        }
        word.reverse();
        word
    };

    let matches_target = |u: &ExactMatrix| -> Result<Option<Complex64>> {
        let restricted = enc.restrict_to_logical(&u.to_complex())?;
        let (eq, phase) = equal_up_to_phase(target_logical, &restricted, eps)?;
        Ok(if eq { Some(phase) } else { None })
    };

    let id = ExactMatrix::identity(dim);
    classes.insert(id.canonical_key(), u32::MAX);
    if let Some(phase) = matches_target(&id)? {
        return Ok(WordSearchOutcome {
            word: Some(Vec::new()),
            phase: Some(phase),
            depth_reached: 0,
            classes_explored: 1,
            group_exhausted: false,
        });
    }

    let mut frontier: Vec<(ExactMatrix, u32)> = vec![(id, u32::MAX)];
    let mut depth = 0usize;
    let mut truncated = false;

    while !frontier.is_empty() && depth < max_depth {
        depth += 1;
        let mut next = Vec::new();
        'layer: for (u, parent) in &frontier {
            for g in &gens {
                let v = g.apply(u);
                let key = v.canonical_key();
                if let std::collections::hash_map::Entry::Vacant(slot) = classes.entry(key) {
                    let idx = nodes.len() as u32;
                    nodes.push(Node {
                        parent: *parent,
                        letter: g.letter,
                    });
                    slot.insert(idx);
                    if let Some(phase) = matches_target(&v)? {
                        return Ok(WordSearchOutcome {
                            word: Some(reconstruct(&nodes, idx)),
                            phase: Some(phase),
                            depth_reached: depth,
                            classes_explored: classes.len(),
                            group_exhausted: false,
                        });
                    }
                    next.push((v, idx));
                }
            }
            if classes.len() > class_cap {
                truncated = true;
                break 'layer;
            }
        }
        frontier = next;
        if truncated {
            break;
        }
    }

    Ok(WordSearchOutcome {
        word: None,
        phase: None,
        depth_reached: depth,
        classes_explored: classes.len(),
        group_exhausted: frontier.is_empty() && !truncated,
    })
}

/// Orbit of a logical state under all braid generators.
#[derive(Debug, Clone)]
pub struct StateOrbit {
    pub num_logical: usize,
    pub num_majoranas: usize,
    pub completed: bool,
    /// Depth at which the last new state appeared.
    pub max_depth: usize,
    /// Physical (code-space) state vectors, breadth-first order.
    pub states: Vec<CVec>,
    pub depths: Vec<usize>,
    /// Number of nonzero logical amplitudes -> number of orbit states.
    pub amplitude_histogram: BTreeMap<usize, usize>,
}

impl StateOrbit {
    pub fn size(&self) -> usize {
        self.states.len()
    }

    /// Index and depth of the first orbit state equal to `target_logical` up
    /// to phase.
    pub fn find_logical(&self, target_logical: &CVec, eps: f64) -> Result<Option<(usize, usize)>> {
        let enc = Encoding::new(self.num_logical);
        if target_logical.len() != enc.logical_dimension() {
            return Err(Error::DimensionMismatch {
                expected: enc.logical_dimension(),
                got: target_logical.len(),
            });
        }
        let norm: f64 = target_logical.iter().map(|z| z.norm_sqr()).sum();
        for (i, s) in self.states.iter().enumerate() {
            let logical = enc.decode_state(s)?;
            let overlap: Complex64 = target_logical
                .iter()
                .zip(logical.iter())
                .map(|(a, b)| a.conj() * b)
                .sum();
            if (overlap.norm() - norm).abs() <= eps {
                return Ok(Some((i, self.depths[i])));
            }
        }
        Ok(None)
    }
}

/// Breadth-first orbit of `initial_logical` under all braid generators
/// (states deduplicated up to global phase).
pub fn orbit_states(
    num_logical: usize,
    initial_logical: &CVec,
    state_cap: usize,
) -> Result<StateOrbit> {
    let enc = Encoding::new(num_logical);
    let space = FockSpace::new(enc.num_majoranas())?;
    let mut gens = Vec::new();
    for a in 1..space.num_majoranas() {
        gens.push(space.braid(a)?);
        gens.push(space.braid_inverse(a)?);
    }

    let initial = enc.encode_state(initial_logical)?;
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    seen.insert(canonical_state_key(&initial));
    let mut states = vec![initial.clone()];
    let mut depths = vec![0usize];
    let mut frontier = vec![initial];
    let mut depth = 0usize;
    let mut max_depth = 0usize;
    let mut completed = true;

    'bfs: while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for s in &frontier {
            for g in &gens {
                let t = g.dot(s);
                if seen.insert(canonical_state_key(&t)) {
                    states.push(t.clone());
                    depths.push(depth);
                    max_depth = depth;
                    next.push(t);
                }
            }
            if states.len() > state_cap {
                completed = false;
                break 'bfs;
            }
        }
        frontier = next;
    }

    let mut amplitude_histogram = BTreeMap::new();
    for s in &states {
        let logical = enc.decode_state(s)?;
        let support = logical.iter().filter(|z| z.norm() > 1e-9).count();
        *amplitude_histogram.entry(support).or_insert(0) += 1;
    }

    Ok(StateOrbit {
        num_logical,
        num_majoranas: enc.num_majoranas(),
        completed,
        max_depth,
        states,
        depths,
        amplitude_histogram,
    })
}

/// Exhaustive reachability certificate for a diagonal logical target under
/// the commuting single-pair braids `B_1, B_3, B_5, ...` (one per physical
/// qubit). Since the generators commute and each has order 8 with
/// `B^4 = -I`, exponents `0..=max_exponent` per generator cover every
/// projective product once `max_exponent >= 3`.
#[derive(Debug, Clone, Serialize)]
pub struct DiagonalCertificate {
    pub target: String,
    pub num_logical: usize,
    /// Braid letters used as generators (all odd: disjoint Majorana pairs).
    pub generator_letters: Vec<i64>,
    pub max_exponent: u32,
    pub combos_checked: usize,
    /// Distinct logical actions (up to global phase) among the checked
    /// products, counted on the exact restriction to the code space.
    pub distinct_projective_classes: usize,
    /// Exponents (same order as `generator_letters`) of the first product
    /// matching the target up to phase, if any.
    pub found_exponents: Option<Vec<u32>>,
    /// `[re, im]` of the phase with `realized = phase * target`.
    pub found_phase: Option<[f64; 2]>,
    pub method: String,
    pub generated_at_epoch_secs: u64,
}

impl DiagonalCertificate {
    pub fn reachable(&self) -> bool {
        self.found_exponents.is_some()
    }
}

/// Check a diagonal logical target against all products of the standard
/// odd-letter braids `B_1, B_3, ..., B_{2 num_logical + 1}`.
pub fn check_diagonal_reachability(
    num_logical: usize,
    target_logical: &CMat,
    target_name: &str,
    max_exponent: u32,
) -> Result<DiagonalCertificate> {
    let letters: Vec<i64> = (0..=num_logical as i64).map(|q| 2 * q + 1).collect();
    check_diagonal_reachability_with_generators(
        num_logical,
        target_logical,
        target_name,
        &letters,
        max_exponent,
    )
}

/// Same as [`check_diagonal_reachability`] with an explicit generator set.
/// The generators must commute (verified; the standard odd letters act on
/// disjoint Majorana pairs so they always do).
pub fn check_diagonal_reachability_with_generators(
    num_logical: usize,
    target_logical: &CMat,
    target_name: &str,
    letters: &[i64],
    max_exponent: u32,
) -> Result<DiagonalCertificate> {
    let enc = Encoding::new(num_logical);
    let m = enc.num_majoranas();
    validate_even_modes(m)?;
    let dim_l = enc.logical_dimension();
    if target_logical.nrows() != dim_l || target_logical.ncols() != dim_l {
        return Err(Error::DimensionMismatch {
            expected: dim_l,
            got: target_logical.nrows(),
        });
    }
    for i in 0..dim_l {
        for j in 0..dim_l {
            if i != j && target_logical[[i, j]].norm() > 1e-12 {
                return Err(Error::BadParams {
                    name: "diagonal target".into(),
                    reason: format!("entry ({i},{j}) is nonzero"),
                });
            }
        }
        if (target_logical[[i, i]].norm() - 1.0).abs() > 1e-9 {
            return Err(Error::BadParams {
                name: "diagonal target".into(),
                reason: format!("diagonal entry {i} is not unit modulus"),
            });
        }
    }
    if letters.is_empty() {
        return Err(Error::EmptySupport);
    }

    // commutation check on the float matrices
    let space = FockSpace::new(m)?;
    let float_gen = |letter: i64| -> Result<CMat> {
        let a = letter.unsigned_abs() as usize;
        if letter > 0 {
            space.braid(a)
        } else {
            space.braid_inverse(a)
        }
    };
    for (i, &la) in letters.iter().enumerate() {
        for &lb in letters.iter().skip(i + 1) {
            let ga = float_gen(la)?;
            let gb = float_gen(lb)?;
            let norm = max_abs_diff(&ga.dot(&gb), &gb.dot(&ga));
            if norm > 1e-12 {
                return Err(Error::NonCommutingGenerators {
                    a: la.unsigned_abs() as usize,
                    b: lb.unsigned_abs() as usize,
                    norm,
                });
            }
        }
    }

    // precompute exact powers of each generator
    let dim = 1usize << (m / 2);
    let mut powers: Vec<Vec<ExactMatrix>> = Vec::with_capacity(letters.len());
    for &letter in letters {
        let g = ExactBraidGenerator::new(m, letter)?;
        let mut row = vec![ExactMatrix::identity(dim)];
        for e in 1..=max_exponent {
            row.push(g.apply(&row[(e - 1) as usize]));
        }
        powers.push(row);
    }

    let base = max_exponent as usize + 1;
    let combos = base.pow(letters.len() as u32);
    let mut class_keys: HashSet<Vec<u8>> = HashSet::new();
    let mut found_exponents = None;
    let mut found_phase = None;

    for combo in 0..combos {
        // digits with the LAST letter least significant, so ascending
        // `combo` walks exponent vectors in lexicographic order
        let mut exps = vec![0u32; letters.len()];
        let mut rem = combo;
        for i in (0..letters.len()).rev() {
            exps[i] = (rem % base) as u32;
            rem /= base;
        }
        let mut product = ExactMatrix::identity(dim);
        for (i, &e) in exps.iter().enumerate() {
            product = product.mul(&powers[i][e as usize]);
        }
        // exact restriction to the code space (braid products always
        // preserve it): pick out the even-parity rows and columns
        let mut sub = vec![crate::exact::Zeta8::ZERO; dim_l * dim_l];
        for (r, row) in sub.chunks_mut(dim_l).enumerate() {
            let pr = enc.encode_index(r)?;
            for (c, slot) in row.iter_mut().enumerate() {
                *slot = product.at(pr, enc.encode_index(c)?);
            }
        }
        let restricted_exact = ExactMatrix::from_parts(dim_l, product.sqrt2_exp, sub);
        class_keys.insert(restricted_exact.canonical_key());
        if found_exponents.is_none() {
            let restricted = enc.restrict_to_logical(&product.to_complex())?;
            let (eq, phase) = equal_up_to_phase(target_logical, &restricted, 1e-9)?;
            if eq {
                found_exponents = Some(exps.clone());
                found_phase = Some([phase.re, phase.im]);
            }
        }
    }

    let now = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    Ok(DiagonalCertificate {
        target: target_name.to_string(),
        num_logical,
        generator_letters: letters.to_vec(),
        max_exponent,
        combos_checked: combos,
        distinct_projective_classes: class_keys.len(),
        found_exponents,
        found_phase,
        method: "exhaustive enumeration of commuting generator products".to_string(),
        generated_at_epoch_secs: now,
    })
}
