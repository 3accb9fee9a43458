//! Search campaigns over small ground sets.
//!
//! Campaigns split their input into independent work units, run them on a
//! rayon pool of the requested size and collect results in input order, so
//! every report is identical regardless of the worker count.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::canon::canonical_form;
use crate::cliques::maximal_homogeneous;
use crate::coloring::{Color, Coloring, TripleFamily, VertexSet};
use crate::error::{domain, Error, Result};
use crate::generators::{generate, GeneratorSpec};
use crate::reconstruct::{
    build_constraints, check_criterio_equiv, classify, constraints_of, critical_pairs,
    for_each_solution, four_suffices_certificate, is_reconstructible,
};
use crate::rng::SplitMix64;

/// Largest ground set for [`enumerate_canonical`].
pub const ENUMERATE_MAX: usize = 8;
/// Largest ground set surveyed exhaustively; beyond it surveys sample.
pub const EXHAUSTIVE_MAX: usize = 6;
/// Default number of random colorings drawn by a sampled survey.
pub const DEFAULT_SAMPLES: usize = 2000;
/// Default seed for sampled surveys.
pub const DEFAULT_SEED: u64 = 0x5EED;
/// Prefix sizes whose class count stays below this get an r-value.
const R_VALUE_CLASSES: usize = 20;

/// Runs `f` on a pool with `workers` threads (0 = rayon default).
pub fn with_workers<R: Send>(workers: usize, f: impl FnOnce() -> R + Send) -> Result<R> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Resource(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

fn collect_results<T: Send>(items: Vec<Result<T>>) -> Result<Vec<T>> {
    items.into_iter().collect()
}

/// One vertex more: `base` plus vertex `base.n()` whose 1-neighbours are the bits of `mask`.
fn add_vertex(base: &Coloring, mask: u64) -> Coloring {
    let n = base.n();
    Coloring::from_fn(n + 1, |i, j| {
        if j < n {
            base.get(i, j) == 1
        } else {
            (mask >> i) & 1 == 1
        }
    })
}

/// One representative per orbit under relabeling and complementation, in
/// increasing order. Every representative is its own canonical form.
pub fn enumerate_canonical(n: usize) -> Result<Vec<Coloring>> {
    if !(3..=ENUMERATE_MAX).contains(&n) {
        return domain(format!(
            "enumerate_canonical needs 3 <= n <= {ENUMERATE_MAX}, got {n}"
        ));
    }
    Ok(canonical_reps(n))
}

// Every coloring on k+1 vertices is some k-vertex representative plus one
// vertex, up to relabeling, so extending all representatives reaches every orbit.
fn canonical_reps(n: usize) -> Vec<Coloring> {
    let mut reps = vec![Coloring::zeros(n.min(1))];
    for k in 1..n {
        let found: Vec<Coloring> = reps
            .par_iter()
            .flat_map_iter(|r| {
                (0u64..1 << k).map(move |m| canonical_form(&add_vertex(r, m)).expect("n <= 8"))
            })
            .collect();
        reps = found
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
    }
    reps
}

/// How the colorings of a survey were chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurveyMode {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

/// A property that failed on a surveyed coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub coloring: Coloring,
    pub property: String,
    pub detail: String,
}

/// Outcome of [`survey`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyResult {
    pub n: usize,
    pub mode: SurveyMode,
    /// Distinct canonical colorings classified.
    pub total: usize,
    pub reconstructible: usize,
    pub unreconstructible_with_critical: usize,
    pub unreconstructible_without_critical: usize,
    /// r-value to number of colorings.
    pub r_histogram: BTreeMap<usize, usize>,
    pub violations: Vec<Violation>,
}

/// Options shared by campaigns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CampaignOptions {
    pub workers: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for CampaignOptions {
    fn default() -> Self {
        CampaignOptions {
            workers: 0,
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
        }
    }
}

struct Verdict {
    reconstructible: bool,
    critical: bool,
    r: usize,
    violations: Vec<Violation>,
}

fn violation(phi: &Coloring, property: &str, detail: impl Into<String>) -> Violation {
    Violation {
        coloring: phi.clone(),
        property: property.to_string(),
        detail: detail.into(),
    }
}

fn judge(phi: &Coloring) -> Result<Verdict> {
    let mut violations = Vec::new();
    let report = match classify(phi) {
        Ok(r) => r,
        Err(Error::Invariant(msg)) => {
            // classify refuses r = 2 and r = 1 without a critical pair
            violations.push(violation(phi, "r-value", msg));
            return Ok(Verdict {
                reconstructible: false,
                critical: false,
                r: 0,
                violations,
            });
        }
        Err(e) => return Err(e),
    };
    let critical = !report.critical_pairs.is_empty();
    if critical && report.reconstructible {
        violations.push(violation(
            phi,
            "critical-pair",
            "critical pair but reconstructible",
        ));
    }
    if !check_criterio_equiv(phi)? {
        violations.push(violation(
            phi,
            "single-vertex",
            "one-vertex reconstruction exists iff critical pair fails",
        ));
    }
    if phi.n() >= 4 {
        match four_suffices_certificate(phi) {
            Ok(_) => {}
            Err(Error::Invariant(msg)) => violations.push(violation(phi, "four-suffices", msg)),
            Err(e) => return Err(e),
        }
    }
    Ok(Verdict {
        reconstructible: report.reconstructible,
        critical,
        r: report.r_value,
        violations,
    })
}

/// Classifies every canonical coloring on `n` vertices (`3 <= n <= 6`), or a
/// seeded sample of them (`n = 7, 8`), and checks the proven identities on each.
pub fn survey(n: usize, opts: &CampaignOptions) -> Result<SurveyResult> {
    if !(3..=ENUMERATE_MAX).contains(&n) {
        return domain(format!("survey needs 3 <= n <= {ENUMERATE_MAX}, got {n}"));
    }
    with_workers(opts.workers, || {
        let (mode, reps) = if n <= EXHAUSTIVE_MAX {
            (SurveyMode::Exhaustive, canonical_reps(n))
        } else {
            if opts.samples == 0 {
                return domain("sampled survey needs samples >= 1");
            }
            let mut rng = SplitMix64::new(opts.seed);
            let seeds: Vec<u64> = (0..opts.samples).map(|_| rng.next_u64()).collect();
            let drawn: Vec<Coloring> = seeds
                .par_iter()
                .map(|&s| {
                    canonical_form(&crate::generators::random_coloring(n, s)).expect("n <= 8")
                })
                .collect();
            let mode = SurveyMode::Sampled {
                samples: opts.samples,
                seed: opts.seed,
            };
            (
                mode,
                drawn
                    .into_iter()
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect(),
            )
        };
        let verdicts = collect_results(reps.par_iter().map(judge).collect())?;
        let mut out = SurveyResult {
            n,
            mode,
            total: reps.len(),
            reconstructible: 0,
            unreconstructible_with_critical: 0,
            unreconstructible_without_critical: 0,
            r_histogram: BTreeMap::new(),
            violations: Vec::new(),
        };
        for v in verdicts {
            match (v.reconstructible, v.critical) {
                (true, _) => out.reconstructible += 1,
                (false, true) => out.unreconstructible_with_critical += 1,
                (false, false) => out.unreconstructible_without_critical += 1,
            }
            *out.r_histogram.entry(v.r).or_default() += 1;
            out.violations.extend(v.violations);
        }
        Ok(out)
    })?
}

/// Canonical colorings that are unreconstructible yet have no critical pair.
///
/// Accepts `3 <= n <= 7`; below 5 the list is expected to be empty.
pub fn hunt_no_critical(n: usize, workers: usize) -> Result<Vec<Coloring>> {
    if !(3..=7).contains(&n) {
        return domain(format!("hunt_no_critical needs 3 <= n <= 7, got {n}"));
    }
    with_workers(workers, || {
        let reps = canonical_reps(n);
        let keep = collect_results(
            reps.par_iter()
                .map(|phi| Ok(!is_reconstructible(phi)? && critical_pairs(phi)?.is_empty()))
                .collect(),
        )?;
        Ok(reps
            .into_iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(c, _)| c)
            .collect())
    })?
}

/// A reconstructible coloring whose prefixes of sizes `n0..n` are all unreconstructible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentWitness {
    pub coloring: Coloring,
    /// Some `m` in `n0..n` has a critical pair `{j, m}` in the prefix of size `m + 1`.
    pub critical_at_new_vertex: bool,
}

/// Colorings on `n` vertices that are reconstructible while every prefix on
/// `m` vertices, `n0 <= m < n`, is not. One witness per orbit under
/// relabeling and complementation, ordered by canonical form.
///
/// The search fixes the first `n0` vertices to a canonical representative
/// (relabeling them, or complementing everything, keeps the prefix
/// conditions) and extends one vertex at a time, pruning reconstructible
/// prefixes. Each orbit is reported by the least witness found for it.
pub fn hunt_segment_question(n: usize, n0: usize, workers: usize) -> Result<Vec<SegmentWitness>> {
    if !(3 <= n0 && n0 < n && n <= 7) {
        return domain(format!(
            "hunt_segment_question needs 3 <= n0 < n <= 7, got n0 = {n0}, n = {n}"
        ));
    }
    with_workers(workers, || {
        let bases = canonical_reps(n0);
        let unrec = collect_results(
            bases
                .par_iter()
                .map(|b| Ok(!is_reconstructible(b)?))
                .collect(),
        )?;
        let bases: Vec<Coloring> = bases
            .into_iter()
            .zip(unrec)
            .filter(|(_, u)| *u)
            .map(|(b, _)| b)
            .collect();
        let found = collect_results(
            bases
                .par_iter()
                .map(|b| {
                    let mut out = Vec::new();
                    extend_segment(b, n, &mut out)?;
                    Ok(out)
                })
                .collect(),
        )?;
        let mut by_orbit: BTreeMap<Coloring, Coloring> = BTreeMap::new();
        for phi in found.into_iter().flatten() {
            let key = canonical_form(&phi)?;
            match by_orbit.get(&key) {
                Some(old) if *old <= phi => {}
                _ => {
                    by_orbit.insert(key, phi);
                }
            }
        }
        by_orbit
            .into_values()
            .map(|phi| {
                let mut flag = false;
                for m in n0..n {
                    let p = phi.prefix(m + 1);
                    if critical_pairs(&p)?.iter().any(|&(_, y)| y == m) {
                        flag = true;
                        break;
                    }
                }
                Ok(SegmentWitness {
                    coloring: phi,
                    critical_at_new_vertex: flag,
                })
            })
            .collect()
    })?
}

fn extend_segment(cur: &Coloring, n: usize, out: &mut Vec<Coloring>) -> Result<()> {
    let k = cur.n();
    for mask in 0u64..1 << k {
        let next = add_vertex(cur, mask);
        let rec = is_reconstructible(&next)?;
        if k + 1 == n {
            if rec {
                out.push(next);
            }
        } else if !rec {
            extend_segment(&next, n, out)?;
        }
    }
    Ok(())
}

/// Reconstruction data of one prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixReport {
    pub m: usize,
    pub reconstructible: bool,
    pub critical_pairs: Vec<(usize, usize)>,
    /// Present when the prefix's system is small enough to enumerate.
    pub r_value: Option<usize>,
}

/// Reconstruction data for the prefixes of sizes `3..=n_max` of the coloring
/// generated by `spec`. Every family here is generated so that a longer run
/// extends a shorter one, except partitions and gadgets, whose prefixes are
/// simply the restrictions of the generated coloring.
pub fn prefix_profile(spec: &GeneratorSpec, n_max: usize) -> Result<Vec<PrefixReport>> {
    let phi = generate(spec)?;
    if n_max < 3 || n_max > phi.n() {
        return domain(format!(
            "prefix_profile needs 3 <= n_max <= {}, got {n_max}",
            phi.n()
        ));
    }
    (3..=n_max)
        .map(|m| {
            let p = phi.prefix(m);
            let cs = constraints_of(&p)?;
            let r_value = if cs.class_count() <= R_VALUE_CLASSES {
                Some(classify(&p)?.r_value)
            } else {
                None
            };
            Ok(PrefixReport {
                m,
                reconstructible: is_reconstructible(&p)?,
                critical_pairs: critical_pairs(&p)?,
                r_value,
            })
        })
        .collect()
}

/// Outcome of [`recognize_triples`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognitionOutcome {
    pub realizable: bool,
    /// Least coloring whose homogeneous triples are exactly the input.
    pub canonical_reconstruction: Option<Coloring>,
    /// A triple outside the input whose three pairs were forced equal.
    pub infeasibility_witness: Option<(usize, usize, usize)>,
}

/// Decides whether `t` is the homogeneous-triple family of some coloring.
pub fn recognize_triples(t: &TripleFamily) -> Result<RecognitionOutcome> {
    let cs = build_constraints(t)?;
    let mut least = None;
    for_each_solution(&cs, |c| {
        least = Some(c.clone());
        ControlFlow::Break(())
    });
    Ok(RecognitionOutcome {
        realizable: least.is_some(),
        infeasibility_witness: cs.infeasibility_witness(),
        canonical_reconstruction: least,
    })
}

/// Finite check of the two-maximal-sets structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoMaximalReport {
    pub maximal: Vec<VertexSet>,
    /// Exactly two maximal homogeneous sets.
    pub applies: bool,
    /// Every homogeneous set lies inside one of the two.
    pub covers_family: Option<bool>,
    /// Both maximal sets carry the same color.
    pub same_color: Option<bool>,
    /// At most one vertex lies outside their union.
    pub small_remainder: Option<bool>,
    pub remainder: Option<VertexSet>,
    pub unreconstructible: bool,
    /// Names of the checks that failed on this instance.
    pub flagged: Vec<String>,
}

/// Reports, for a coloring with exactly two maximal homogeneous sets, which
/// parts of the infinite-case structure survive on this finite instance.
pub fn two_maximal_analysis(phi: &Coloring) -> Result<TwoMaximalReport> {
    let n = phi.n();
    if n < 5 {
        return domain(format!("two_maximal_analysis needs n >= 5, got {n}"));
    }
    let maximal = maximal_homogeneous(phi)?;
    let unreconstructible = !is_reconstructible(phi)?;
    let mut report = TwoMaximalReport {
        applies: maximal.len() == 2,
        maximal,
        covers_family: None,
        same_color: None,
        small_remainder: None,
        remainder: None,
        unreconstructible,
        flagged: Vec::new(),
    };
    if !report.applies {
        return Ok(report);
    }
    let (h1, h2) = (&report.maximal[0], &report.maximal[1]);
    let covers = phi.hom_triples()?.triples().iter().all(|&(a, b, c)| {
        [h1, h2]
            .iter()
            .any(|h| h.contains(a) && h.contains(b) && h.contains(c))
    });
    let color_of = |h: &VertexSet| -> Option<Color> { phi.is_homogeneous(h) };
    let same = color_of(h1) == color_of(h2);
    let rest = h1.union(h2).complement();
    let small = rest.len() <= 1;
    for (ok, name) in [
        (covers, "covers-family"),
        (same, "same-color"),
        (small, "small-remainder"),
        (unreconstructible, "unreconstructible"),
    ] {
        if !ok {
            report.flagged.push(name.to_string());
        }
    }
    report.covers_family = Some(covers);
    report.same_color = Some(same);
    report.small_remainder = Some(small);
    report.remainder = Some(rest);
    Ok(report)
}
