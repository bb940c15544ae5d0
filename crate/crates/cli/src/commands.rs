use std::io::Write;

use pdneg_core::analysis::{
    self, CheckConfig, CheckReport, IterationTrace, LengthPolicy, LinearityVerdict,
};
use pdneg_core::sampling;
use pdneg_core::{entropy, max_entropy, DescriptorExpr, Distribution, EntropyReport, NegatorDescriptor};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::input::InputDocument;
use crate::output::{Emitter, Table};
use crate::{CliError, Outcome};

/// Probe value used by the independence check.
const PROBE_VALUE: f64 = 0.5;
const RANDOM_PROBE_CONTEXTS: usize = 6;

fn validate(doc: &InputDocument) -> Result<Vec<(&str, Distribution)>, CliError> {
    doc.distributions
        .iter()
        .map(|(label, values)| {
            Distribution::new(values.clone())
                .map(|d| (label.as_str(), d))
                .map_err(|source| CliError::Validation {
                    label: label.clone(),
                    source,
                })
        })
        .collect()
}

fn resolve(expr: &DescriptorExpr, n: usize) -> Result<NegatorDescriptor, CliError> {
    expr.resolve(Some(n)).map_err(CliError::Descriptor)
}

fn apply_error(label: &str) -> impl FnOnce(pdneg_core::Error) -> CliError + '_ {
    move |source| CliError::Apply {
        context: label.to_owned(),
        source,
    }
}

#[derive(Serialize)]
struct Document<T> {
    command: &'static str,
    results: Vec<T>,
}

#[derive(Serialize)]
struct NegateResult<'a> {
    label: &'a str,
    input: &'a Distribution,
    output: Distribution,
    entropy: EntropyReport,
}

pub fn negate(
    expr: &DescriptorExpr,
    doc: &InputDocument,
    em: &Emitter,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let inputs = validate(doc)?;
    let mut results = Vec::with_capacity(inputs.len());
    for (label, p) in &inputs {
        let d = resolve(expr, p.len())?;
        let output = d.apply(p).map_err(apply_error(label))?;
        results.push(NegateResult {
            label,
            input: p,
            entropy: EntropyReport::between(p, &output),
            output,
        });
    }
    em.emit(out, &Document { command: "negate", results: results.iter().collect() }, |em| {
        let mut t = Table::new(vec![
            "label", "index", "input", "output", "input_entropy", "output_entropy", "delta",
        ]);
        for r in &results {
            for (i, (x, y)) in r.input.values().iter().zip(r.output.values()).enumerate() {
                t.rows.push(vec![
                    r.label.to_owned(),
                    (i + 1).to_string(),
                    em.num(*x),
                    em.num(*y),
                    em.num(r.entropy.input_entropy),
                    em.num(r.entropy.output_entropy),
                    em.num(r.entropy.delta),
                ]);
            }
        }
        t
    })?;
    Ok(Outcome::Success)
}

#[derive(Serialize)]
struct EntropyResult<'a> {
    label: &'a str,
    n: usize,
    entropy: f64,
    max_entropy: f64,
}

pub fn entropy_cmd(doc: &InputDocument, em: &Emitter, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let inputs = validate(doc)?;
    let results: Vec<EntropyResult> = inputs
        .iter()
        .map(|(label, p)| EntropyResult {
            label,
            n: p.len(),
            entropy: entropy(p),
            max_entropy: max_entropy(p.len()),
        })
        .collect();
    em.emit(out, &Document { command: "entropy", results: results.iter().collect() }, |em| {
        let mut t = Table::new(vec!["label", "n", "entropy", "max_entropy"]);
        for r in &results {
            t.rows.push(vec![
                r.label.to_owned(),
                r.n.to_string(),
                em.num(r.entropy),
                em.num(r.max_entropy),
            ]);
        }
        t
    })?;
    Ok(Outcome::Success)
}

#[derive(Serialize)]
struct Step<'a> {
    step: usize,
    components: &'a Distribution,
    distance_to_uniform: f64,
    entropy: f64,
}

#[derive(Serialize)]
struct IterateResult<'a> {
    label: &'a str,
    steps: Vec<Step<'a>>,
}

fn trace_rows(trace: &IterationTrace) -> Vec<Step<'_>> {
    trace
        .steps
        .iter()
        .enumerate()
        .map(|(t, components)| Step {
            step: t,
            components,
            distance_to_uniform: trace.distances_to_uniform[t],
            entropy: trace.entropies[t],
        })
        .collect()
}

pub fn iterate(
    expr: &DescriptorExpr,
    steps: usize,
    doc: &InputDocument,
    em: &Emitter,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let inputs = validate(doc)?;
    let mut traces = Vec::with_capacity(inputs.len());
    for (label, p) in &inputs {
        let d = resolve(expr, p.len())?;
        let trace = analysis::iterate_negation(&d, p, steps).map_err(apply_error(label))?;
        traces.push((*label, trace));
    }
    let results: Vec<IterateResult> = traces
        .iter()
        .map(|(label, trace)| IterateResult {
            label,
            steps: trace_rows(trace),
        })
        .collect();
    em.emit(out, &Document { command: "iterate", results: results.iter().collect() }, |em| {
        let mut t = Table::new(vec![
            "label", "step", "index", "value", "distance_to_uniform", "entropy",
        ]);
        for r in &results {
            for s in &r.steps {
                for (i, v) in s.components.values().iter().enumerate() {
                    t.rows.push(vec![
                        r.label.to_owned(),
                        s.step.to_string(),
                        (i + 1).to_string(),
                        em.num(*v),
                        em.num(s.distance_to_uniform),
                        em.num(s.entropy),
                    ]);
                }
            }
        }
        t
    })?;
    Ok(Outcome::Success)
}

#[derive(Serialize)]
struct SweepRow {
    alpha: f64,
    output: Distribution,
    entropy: f64,
}

#[derive(Serialize)]
struct SweepResult<'a> {
    label: &'a str,
    input_entropy: f64,
    rows: Vec<SweepRow>,
}

pub fn sweep_alpha(
    n: Option<usize>,
    alpha_count: usize,
    doc: &InputDocument,
    em: &Emitter,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    if alpha_count < 2 {
        return Err(CliError::Argument("--alphas must be at least 2".into()));
    }
    let inputs = validate(doc)?;
    let mut results = Vec::with_capacity(inputs.len());
    for (label, p) in &inputs {
        if let Some(n) = n {
            if p.len() != n {
                return Err(CliError::Argument(format!(
                    "{label}: length {} does not match --n {n}",
                    p.len()
                )));
            }
        }
        let mut rows = Vec::with_capacity(alpha_count);
        for i in 0..alpha_count {
            let alpha = i as f64 / (alpha_count - 1) as f64;
            let d = NegatorDescriptor::linear(alpha).map_err(CliError::Descriptor)?;
            let output = d.apply(p).map_err(apply_error(label))?;
            rows.push(SweepRow {
                alpha,
                entropy: entropy(&output),
                output,
            });
        }
        results.push(SweepResult {
            label,
            input_entropy: entropy(p),
            rows,
        });
    }
    em.emit(out, &Document { command: "sweep-alpha", results: results.iter().collect() }, |em| {
        let mut t = Table::new(vec!["label", "alpha", "index", "value", "entropy"]);
        for r in &results {
            for row in &r.rows {
                for (i, v) in row.output.values().iter().enumerate() {
                    t.rows.push(vec![
                        r.label.to_owned(),
                        em.num(row.alpha),
                        (i + 1).to_string(),
                        em.num(*v),
                        em.num(row.entropy),
                    ]);
                }
            }
        }
        t
    })?;
    Ok(Outcome::Success)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Passed,
    Failed,
    Skipped,
    /// Evidence about a property the descriptor does not claim; never fails.
    Informational,
}

#[derive(Serialize)]
struct CheckEntry {
    name: &'static str,
    status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<CheckReport>,
}

impl CheckEntry {
    fn run(name: &'static str, report: CheckReport) -> Self {
        CheckEntry {
            name,
            status: if report.passed() {
                CheckStatus::Passed
            } else {
                CheckStatus::Failed
            },
            reason: None,
            report: Some(report),
        }
    }

    fn skipped(name: &'static str, reason: &str) -> Self {
        CheckEntry {
            name,
            status: CheckStatus::Skipped,
            reason: Some(reason.to_owned()),
            report: None,
        }
    }
}

#[derive(Serialize)]
struct LinearityEntry {
    status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<LinearityVerdict>,
}

#[derive(Serialize)]
struct CheckDocument {
    command: &'static str,
    descriptor: String,
    n: usize,
    claims_negator: bool,
    claims_pd_independent: bool,
    seed: u64,
    passed: bool,
    checks: Vec<CheckEntry>,
    linearity: LinearityEntry,
}

pub struct CheckOptions {
    pub n: usize,
    pub grid_size: usize,
    pub tolerance: f64,
    pub seed: u64,
    pub samples: usize,
}

fn probe_contexts(n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Distribution>, pdneg_core::Error> {
    let mut contexts = vec![
        sampling::spread_context(n, PROBE_VALUE)?,
        sampling::spread_context(n + 1, PROBE_VALUE)?,
    ];
    for _ in 0..RANDOM_PROBE_CONTEXTS {
        contexts.push(sampling::random_context(rng, n, PROBE_VALUE)?);
    }
    Ok(contexts)
}

pub fn check(
    expr: &DescriptorExpr,
    opts: &CheckOptions,
    em: &Emitter,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    if opts.n < 2 {
        return Err(CliError::Argument("--n must be at least 2".into()));
    }
    if opts.grid_size < 3 {
        return Err(CliError::Argument("--grid must be at least 3".into()));
    }
    let d = resolve(expr, opts.n)?;
    check_descriptor(&d, opts, em, out)
}

fn check_descriptor(
    d: &NegatorDescriptor,
    opts: &CheckOptions,
    em: &Emitter,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let n = opts.n;
    let config = CheckConfig {
        grid_size: opts.grid_size,
        tolerance: opts.tolerance,
    };
    let fail = |e| CliError::Apply {
        context: d.to_string(),
        source: e,
    };
    let is_negator = d.claims_negator();
    let is_independent = d.claims_pd_independent();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut checks = Vec::new();

    checks.push(CheckEntry::run(
        "fixed_point",
        analysis::fixed_point_check(d, n, &config).map_err(fail)?,
    ));

    if is_negator {
        let report = analysis::negation_sweep(d, n, opts.samples, &mut rng, opts.tolerance)
            .map_err(fail)?
            .with_seed(opts.seed);
        checks.push(CheckEntry::run("negation_axiom", report));
    } else {
        checks.push(CheckEntry::skipped("negation_axiom", "descriptor does not claim to be a negator"));
    }

    let contexts = probe_contexts(n, &mut rng).map_err(fail)?;
    let probe = analysis::independence_probe(d, PROBE_VALUE, &contexts, LengthPolicy::Auto, opts.tolerance)
        .map_err(fail)?
        .with_seed(opts.seed);
    let mut probe_entry = CheckEntry::run("independence_probe", probe);
    if !is_independent {
        probe_entry.status = CheckStatus::Informational;
        probe_entry.reason = Some(
            "descriptor does not claim pd-independence; violations are evidence of dependence".into(),
        );
    }
    checks.push(probe_entry);

    const NOT_INDEPENDENT: &str = "requires pd-independence";
    if is_independent {
        checks.push(CheckEntry::run(
            "functional_equation",
            analysis::functional_equation_check(d, n, &config).map_err(fail)?,
        ));
    } else {
        checks.push(CheckEntry::skipped("functional_equation", NOT_INDEPENDENT));
    }

    let linearity = if is_independent && is_negator {
        checks.push(CheckEntry::run(
            "boundary_range",
            analysis::boundary_range_check(d, n, &config).map_err(fail)?,
        ));
        let verdict = analysis::linearity_test(d, n, config.grid_size, config.tolerance).map_err(fail)?;
        LinearityEntry {
            status: CheckStatus::Informational,
            reason: None,
            verdict: Some(verdict),
        }
    } else {
        let reason = if is_independent {
            "requires a negator"
        } else {
            NOT_INDEPENDENT
        };
        checks.push(CheckEntry::skipped("boundary_range", reason));
        LinearityEntry {
            status: CheckStatus::Skipped,
            reason: Some(reason.into()),
            verdict: None,
        }
    };

    let passed = checks.iter().all(|c| c.status != CheckStatus::Failed);
    let doc = CheckDocument {
        command: "check",
        descriptor: d.to_string(),
        n,
        claims_negator: is_negator,
        claims_pd_independent: is_independent,
        seed: opts.seed,
        passed,
        checks,
        linearity,
    };
    em.emit(out, &doc, |em| {
        let mut t = Table::new(vec![
            "check", "status", "violations", "grid_size", "tolerance", "seed", "detail",
        ]);
        let status = |s: CheckStatus| {
            serde_json::to_value(s)
                .ok()
                .and_then(|v| v.as_str().map(str::to_owned))
                .unwrap_or_default()
        };
        for c in &doc.checks {
            let (count, grid, tol, seed) = match &c.report {
                Some(r) => (
                    r.violation_count().to_string(),
                    r.grid_size().to_string(),
                    em.num(r.tolerance()),
                    r.seed().map(|s| s.to_string()).unwrap_or_default(),
                ),
                None => Default::default(),
            };
            t.rows.push(vec![
                c.name.to_owned(),
                status(c.status),
                count,
                grid,
                tol,
                seed,
                c.reason.clone().unwrap_or_default(),
            ]);
        }
        let l = &doc.linearity;
        let detail = match &l.verdict {
            Some(v) => format!(
                "is_linear={} alpha_estimate={} max_residual={}",
                v.is_linear,
                em.opt(v.alpha_estimate),
                em.num(v.max_residual)
            ),
            None => l.reason.clone().unwrap_or_default(),
        };
        let (grid, tol) = match &l.verdict {
            Some(v) => (v.grid_size.to_string(), em.num(v.tolerance)),
            None => Default::default(),
        };
        t.rows.push(vec![
            "linearity".into(),
            status(l.status),
            String::new(),
            grid,
            tol,
            String::new(),
            detail,
        ]);
        t
    })?;
    Ok(if passed {
        Outcome::Success
    } else {
        Outcome::ChecksFailed
    })
}
