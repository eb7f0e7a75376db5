//! Brute-force verification harness.
//!
//! Enumerates (or samples) pairs of small graphs, builds the join and
//! corona products, computes the true index values, evaluates the bound
//! formulas, and emits one [`VerificationRecord`] per pair, kind, and
//! formula variant. A sweep is fully determined by its [`SweepConfig`]:
//! identical configs produce byte-identical record streams.
//!
//! Record output is CSV or JSON-lines with the fixed field order
//! `g1,g2,kind,variant,true_value,alpha1,alpha2,lower_ok,upper_ok,gap_lower,gap_upper`;
//! the sweep summary serializes as a single JSON document.

use std::io::{self, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{bounds_for, BoundKind, BoundPair, FormulaVariant};
use crate::graph::{Graph, GraphError};
use crate::graph6::{write_graph6, Graph6Error};
use crate::numfmt::format_significant;
use crate::products::{corona, join, ProductKind};

/// Hard ceiling for exhaustive enumeration (2^21 graphs at order 7).
pub const MAX_ENUM_ORDER: usize = 7;

/// Absolute floor under the relative bracketing tolerance.
pub const TOLERANCE_FLOOR: f64 = 1e-12;

/// Errors from enumeration, generation, and sweep configuration.
#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("enumeration order {0} outside the supported range 1..={MAX_ENUM_ORDER}")]
    OrderOutOfRange(usize),
    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("invalid sweep config: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Codec(#[from] Graph6Error),
}

/// All labeled graphs on `n` vertices, in ascending bit-vector order
/// over the lexicographic pair list `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn enumerate_graphs(n: usize) -> Result<GraphEnumerator, VerifyError> {
    if n == 0 || n > MAX_ENUM_ORDER {
        return Err(VerifyError::OrderOutOfRange(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(GraphEnumerator {
        n,
        total: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

/// Iterator over all labeled graphs of a fixed order.
pub struct GraphEnumerator {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    total: u64,
}

impl Iterator for GraphEnumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.total {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask >> k & 1 == 1)
            .map(|(_, &pair)| pair)
            .collect();
        Some(Graph::from_edges(self.n, &edges).expect("enumerated edges are in range"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for GraphEnumerator {}

/// Erdős–Rényi style G(n, p): each of the n(n-1)/2 potential edges is
/// included independently with probability `p`, drawn from a ChaCha
/// stream seeded with `seed`. Deterministic for a fixed `(n, p, seed)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, VerifyError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(VerifyError::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("generated edges are in range"))
}

/// One bound check: the factor pair, the bound evaluated, the true index
/// of the constructed product, and the bracketing outcome.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationRecord {
    pub g1: String,
    pub g2: String,
    pub kind: BoundKind,
    pub variant: FormulaVariant,
    pub true_value: f64,
    pub alpha1: f64,
    pub alpha2: f64,
    pub lower_ok: bool,
    pub upper_ok: bool,
    pub gap_lower: f64,
    pub gap_upper: f64,
}

impl VerificationRecord {
    /// Field order shared by the CSV and JSON-lines encodings.
    pub const CSV_HEADER: &'static str =
        "g1,g2,kind,variant,true_value,alpha1,alpha2,lower_ok,upper_ok,gap_lower,gap_upper";

    fn new(g1: String, g2: String, bound: BoundPair, true_value: f64, tolerance: f64) -> Self {
        let slack =
            |reference: f64| TOLERANCE_FLOOR.max(tolerance * true_value.abs().max(reference.abs()));
        let raw_lower = true_value - bound.alpha1;
        let raw_upper = bound.alpha2 - true_value;
        let lower_ok = raw_lower >= -slack(bound.alpha1);
        let upper_ok = raw_upper >= -slack(bound.alpha2);
        // A passing check may sit a rounding error past the bound; clamp
        // so that gaps are non-negative whenever the flag is set.
        let clamp = |ok: bool, raw: f64| if ok && raw < 0.0 { 0.0 } else { raw };
        VerificationRecord {
            g1,
            g2,
            kind: bound.kind,
            variant: bound.variant,
            true_value,
            alpha1: bound.alpha1,
            alpha2: bound.alpha2,
            lower_ok,
            upper_ok,
            gap_lower: clamp(lower_ok, raw_lower),
            gap_upper: clamp(upper_ok, raw_upper),
        }
    }

    /// Whether both bracketing flags hold.
    pub fn ok(&self) -> bool {
        self.lower_ok && self.upper_ok
    }

    /// CSV row with numbers at `digits` significant digits.
    pub fn csv_line(&self, digits: usize) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.g1,
            self.g2,
            self.kind,
            self.variant,
            format_significant(self.true_value, digits),
            format_significant(self.alpha1, digits),
            format_significant(self.alpha2, digits),
            self.lower_ok,
            self.upper_ok,
            format_significant(self.gap_lower, digits),
            format_significant(self.gap_upper, digits),
        )
    }

    /// JSON object on one line, same fields and order as the CSV.
    pub fn json_line(&self, digits: usize) -> String {
        format!(
            "{{\"g1\":\"{}\",\"g2\":\"{}\",\"kind\":\"{}\",\"variant\":\"{}\",\"true_value\":{},\"alpha1\":{},\"alpha2\":{},\"lower_ok\":{},\"upper_ok\":{},\"gap_lower\":{},\"gap_upper\":{}}}",
            self.g1,
            self.g2,
            self.kind,
            self.variant,
            format_significant(self.true_value, digits),
            format_significant(self.alpha1, digits),
            format_significant(self.alpha2, digits),
            self.lower_ok,
            self.upper_ok,
            format_significant(self.gap_lower, digits),
            format_significant(self.gap_upper, digits),
        )
    }
}

/// Writes records as CSV with the fixed header line.
pub fn write_records_csv<W: Write>(
    mut w: W,
    records: &[VerificationRecord],
    digits: usize,
) -> io::Result<()> {
    writeln!(w, "{}", VerificationRecord::CSV_HEADER)?;
    for r in records {
        writeln!(w, "{}", r.csv_line(digits))?;
    }
    Ok(())
}

/// Writes records as JSON-lines.
pub fn write_records_jsonl<W: Write>(
    mut w: W,
    records: &[VerificationRecord],
    digits: usize,
) -> io::Result<()> {
    for r in records {
        writeln!(w, "{}", r.json_line(digits))?;
    }
    Ok(())
}

/// Evaluates the requested kinds and variants on one factor pair.
///
/// Variants multiply only the `eu-join` kind (the others have a single
/// formula, reported under `statement`). Records come out in the
/// canonical kind order, `statement` before `proof-conclusion`.
pub fn verify_pair(
    g1: &Graph,
    g2: &Graph,
    kinds: &[BoundKind],
    variants: &[FormulaVariant],
    tolerance: f64,
) -> Result<Vec<VerificationRecord>, VerifyError> {
    let p1 = g1.params()?;
    let p2 = g2.params()?;
    let g1_text = write_graph6(g1)?;
    let g2_text = write_graph6(g2)?;

    let join_product = if kinds.iter().any(|k| k.product_kind() == ProductKind::Join) {
        Some(join(g1, g2)?)
    } else {
        None
    };
    let corona_product = if kinds
        .iter()
        .any(|k| k.product_kind() == ProductKind::Corona)
    {
        Some(corona(g1, g2)?)
    } else {
        None
    };

    let mut out = Vec::new();
    for kind in BoundKind::ALL {
        if !kinds.contains(&kind) {
            continue;
        }
        let product = match kind.product_kind() {
            ProductKind::Join => join_product.as_ref().expect("join built above"),
            ProductKind::Corona => corona_product.as_ref().expect("corona built above"),
        };
        let true_value = kind.index_of(product)?;
        for variant in evaluated_variants(kind, variants) {
            let bound = bounds_for(kind, variant, &p1, &p2);
            out.push(VerificationRecord::new(
                g1_text.clone(),
                g2_text.clone(),
                bound,
                true_value,
                tolerance,
            ));
        }
    }
    Ok(out)
}

fn evaluated_variants(kind: BoundKind, requested: &[FormulaVariant]) -> Vec<FormulaVariant> {
    match kind {
        BoundKind::EuJoin => FormulaVariant::ALL
            .into_iter()
            .filter(|v| requested.contains(v))
            .collect(),
        _ => vec![FormulaVariant::Statement],
    }
}

/// How a sweep picks its factor pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepMode {
    /// Every labeled pair with orders up to the configured maxima.
    Exhaustive,
    /// `sample_count` seeded G(n, p) pairs with uniform order and
    /// edge probability.
    Random,
}

/// Fully determines a sweep; equal configs give identical output.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub max_order_1: usize,
    pub max_order_2: usize,
    pub mode: SweepMode,
    /// Number of pairs in random mode; ignored when exhaustive.
    pub sample_count: usize,
    /// Seed for random mode, echoed in the summary either way.
    pub rng_seed: u64,
    /// Relative bracketing tolerance (absolute floor [`TOLERANCE_FLOOR`]).
    pub tolerance: f64,
    pub kinds: Vec<BoundKind>,
    pub variants: Vec<FormulaVariant>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_order_1: 4,
            max_order_2: 4,
            mode: SweepMode::Exhaustive,
            sample_count: 1000,
            rng_seed: 0,
            tolerance: 1e-9,
            kinds: BoundKind::ALL.to_vec(),
            variants: FormulaVariant::ALL.to_vec(),
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.max_order_1 == 0 || self.max_order_2 == 0 {
            return Err(VerifyError::InvalidConfig(
                "orders must be at least 1".into(),
            ));
        }
        if self.mode == SweepMode::Exhaustive
            && (self.max_order_1 > MAX_ENUM_ORDER || self.max_order_2 > MAX_ENUM_ORDER)
        {
            return Err(VerifyError::InvalidConfig(format!(
                "exhaustive mode supports orders up to {MAX_ENUM_ORDER}"
            )));
        }
        if self.mode == SweepMode::Random && self.sample_count == 0 {
            return Err(VerifyError::InvalidConfig(
                "random mode needs sample_count >= 1".into(),
            ));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(VerifyError::InvalidConfig(
                "tolerance must be positive".into(),
            ));
        }
        if self.kinds.is_empty() {
            return Err(VerifyError::InvalidConfig(
                "at least one kind required".into(),
            ));
        }
        if self.variants.is_empty() {
            return Err(VerifyError::InvalidConfig(
                "at least one variant required".into(),
            ));
        }
        Ok(())
    }
}

/// A counterexample pair, stored as graph6 records.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub g1: String,
    pub g2: String,
}

/// Per-(kind, variant) sweep statistics. Gap ratios divide each gap by
/// `max(1, |true index|)`, so a negative minimum measures the worst
/// relative violation.
#[derive(Clone, Debug, Serialize)]
pub struct ComboSummary {
    pub kind: BoundKind,
    pub variant: FormulaVariant,
    /// Whether this is the variant the toolkit vouches for.
    pub corrected: bool,
    pub pairs: u64,
    pub failures: u64,
    /// Pairs where a factor has an isolated vertex (min degree 0),
    /// tallied separately because the bounds are unproven there.
    pub isolated_pairs: u64,
    pub isolated_failures: u64,
    pub min_gap_lower_ratio: f64,
    pub mean_gap_lower_ratio: f64,
    pub min_gap_upper_ratio: f64,
    pub mean_gap_upper_ratio: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_counterexample: Option<Counterexample>,
}

/// Whole-sweep result: config echo plus per-combination statistics.
#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub mode: SweepMode,
    pub max_order_1: usize,
    pub max_order_2: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_count: Option<usize>,
    pub rng_seed: u64,
    pub tolerance: f64,
    /// Factor pairs visited (each feeds every requested combination).
    pub pair_count: u64,
    /// Failures among corrected combinations only; the CLI exit status
    /// reflects this count.
    pub corrected_failures: u64,
    pub combos: Vec<ComboSummary>,
}

impl SweepSummary {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }
}

/// Records plus summary from one sweep.
#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub summary: SweepSummary,
    pub records: Vec<VerificationRecord>,
}

struct ComboStats {
    kind: BoundKind,
    variant: FormulaVariant,
    pairs: u64,
    failures: u64,
    isolated_pairs: u64,
    isolated_failures: u64,
    min_lower: f64,
    sum_lower: f64,
    min_upper: f64,
    sum_upper: f64,
    first_counterexample: Option<Counterexample>,
}

impl ComboStats {
    fn new(kind: BoundKind, variant: FormulaVariant) -> Self {
        ComboStats {
            kind,
            variant,
            pairs: 0,
            failures: 0,
            isolated_pairs: 0,
            isolated_failures: 0,
            min_lower: f64::INFINITY,
            sum_lower: 0.0,
            min_upper: f64::INFINITY,
            sum_upper: 0.0,
            first_counterexample: None,
        }
    }

    fn add(&mut self, record: &VerificationRecord, isolated: bool) {
        self.pairs += 1;
        let scale = record.true_value.abs().max(1.0);
        let lower_ratio = record.gap_lower / scale;
        let upper_ratio = record.gap_upper / scale;
        self.min_lower = self.min_lower.min(lower_ratio);
        self.min_upper = self.min_upper.min(upper_ratio);
        self.sum_lower += lower_ratio;
        self.sum_upper += upper_ratio;
        if isolated {
            self.isolated_pairs += 1;
        }
        if !record.ok() {
            self.failures += 1;
            if isolated {
                self.isolated_failures += 1;
            }
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(Counterexample {
                    g1: record.g1.clone(),
                    g2: record.g2.clone(),
                });
            }
        }
    }

    fn finish(self) -> ComboSummary {
        let denom = self.pairs.max(1) as f64;
        ComboSummary {
            kind: self.kind,
            variant: self.variant,
            corrected: self.kind.corrected_variant() == self.variant,
            pairs: self.pairs,
            failures: self.failures,
            isolated_pairs: self.isolated_pairs,
            isolated_failures: self.isolated_failures,
            min_gap_lower_ratio: if self.pairs == 0 { 0.0 } else { self.min_lower },
            mean_gap_lower_ratio: self.sum_lower / denom,
            min_gap_upper_ratio: if self.pairs == 0 { 0.0 } else { self.min_upper },
            mean_gap_upper_ratio: self.sum_upper / denom,
            first_counterexample: self.first_counterexample,
        }
    }
}

/// Runs a full sweep. Deterministic: the record stream and summary are
/// functions of the config alone.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepOutcome, VerifyError> {
    cfg.validate()?;

    let mut stats: Vec<ComboStats> = Vec::new();
    for kind in BoundKind::ALL {
        if !cfg.kinds.contains(&kind) {
            continue;
        }
        for variant in evaluated_variants(kind, &cfg.variants) {
            stats.push(ComboStats::new(kind, variant));
        }
    }

    let mut records: Vec<VerificationRecord> = Vec::new();
    let mut pair_count = 0u64;
    let process_pair = |g1: &Graph,
                        g2: &Graph,
                        records: &mut Vec<VerificationRecord>,
                        stats: &mut Vec<ComboStats>|
     -> Result<(), VerifyError> {
        let isolated = g1.params()?.min_deg == 0 || g2.params()?.min_deg == 0;
        let recs = verify_pair(g1, g2, &cfg.kinds, &cfg.variants, cfg.tolerance)?;
        for r in &recs {
            let slot = stats
                .iter_mut()
                .find(|s| s.kind == r.kind && s.variant == r.variant)
                .expect("combo registered");
            slot.add(r, isolated);
        }
        records.extend(recs);
        Ok(())
    };

    match cfg.mode {
        SweepMode::Exhaustive => {
            let pool2: Vec<Graph> = (1..=cfg.max_order_2)
                .flat_map(|n| enumerate_graphs(n).expect("validated order"))
                .collect();
            for n1 in 1..=cfg.max_order_1 {
                for g1 in enumerate_graphs(n1)? {
                    for g2 in &pool2 {
                        pair_count += 1;
                        process_pair(&g1, g2, &mut records, &mut stats)?;
                    }
                }
            }
        }
        SweepMode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
            for _ in 0..cfg.sample_count {
                let n1 = rng.random_range(1..=cfg.max_order_1);
                let n2 = rng.random_range(1..=cfg.max_order_2);
                let p1: f64 = rng.random();
                let p2: f64 = rng.random();
                let s1: u64 = rng.random();
                let s2: u64 = rng.random();
                let g1 = random_graph(n1, p1, s1)?;
                let g2 = random_graph(n2, p2, s2)?;
                pair_count += 1;
                process_pair(&g1, &g2, &mut records, &mut stats)?;
            }
        }
    }

    let combos: Vec<ComboSummary> = stats.into_iter().map(ComboStats::finish).collect();
    let corrected_failures = combos
        .iter()
        .filter(|c| c.corrected)
        .map(|c| c.failures)
        .sum();
    let summary = SweepSummary {
        mode: cfg.mode,
        max_order_1: cfg.max_order_1,
        max_order_2: cfg.max_order_2,
        sample_count: (cfg.mode == SweepMode::Random).then_some(cfg.sample_count),
        rng_seed: cfg.rng_seed,
        tolerance: cfg.tolerance,
        pair_count,
        corrected_failures,
        combos,
    };
    Ok(SweepOutcome { summary, records })
}
