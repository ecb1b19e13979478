//! One thin wrapper per subcommand.

use std::path::Path;

use falsilab::dimensions::{format_set, growth_at, popper_profile};
use falsilab::families::{catalog, make_family, random_class};
use falsilab::render::{both, decimal, exact};
use falsilab::stats::{mle_search, prob_at_least_one_tails, tails_threshold, CoinData, ParameterSet};
use falsilab::surprise::{
    co_surprise, conditional_co_surprise, cylinder_class, epsilon_sample_bound, semi_measure, severe_surprise,
    surprise, surprise_ratio, worst_case_mu,
};
use falsilab::{
    adversarial_sample, analytic_bound, build_selector, expected_vc, popper_dimension, sauer_bound, surprise_trace,
    vc_dimension, ClassBody, HypothesisClass, PartialAssignment, Rational, SampleBound, SamplePrefix,
};
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::args::{ClassArgs, Command, SampleArgs};
use crate::classfile;
use crate::report::Report;
use crate::CliError;

/// Environment variable overriding the materialization cap.
pub const CAP_VAR: &str = "FALSILAB_CAP";

fn cap_override() -> Result<Option<usize>, CliError> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Input(format!("{CAP_VAR} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn apply_cap(class: HypothesisClass, cap: Option<usize>) -> HypothesisClass {
    match cap {
        Some(c) => class.with_cap(c),
        None => class,
    }
}

fn read_class_file(path: &Path, report: &mut Report) -> Result<HypothesisClass, CliError> {
    let shown = path.display();
    let bytes = std::fs::read(path).map_err(|e| CliError::Input(format!("cannot read class file {shown}: {e}")))?;
    report.input(&shown.to_string(), &bytes);
    let text = String::from_utf8(bytes).map_err(|_| CliError::Input(format!("{shown}: class file is not UTF-8")))?;
    let class = classfile::parse(&text).map_err(|e| CliError::Input(format!("{shown}: {e}")))?;
    Ok(apply_cap(class, cap_override()?))
}

fn load_class(args: &ClassArgs, report: &mut Report) -> Result<HypothesisClass, CliError> {
    let class = match (&args.class, args.seed, args.ground) {
        (Some(path), _, _) => return read_class_file(path, report),
        (None, Some(seed), Some(n)) => {
            report.input("random", format!("seed={seed} ground={n}").as_bytes());
            random_class(n, &mut StdRng::seed_from_u64(seed)).map_err(|e| CliError::Input(format!("--ground: {e}")))?
        }
        _ => return Err(CliError::Input("give --class FILE or --seed K --ground N".into())),
    };
    Ok(apply_cap(class, cap_override()?))
}

fn describe(class: &HypothesisClass) -> String {
    let source = match class.body() {
        ClassBody::Explicit(_) => "explicit".to_string(),
        ClassBody::Family(desc) => format!("family {}", desc.kind()),
    };
    format!("class: {source} ground={} size={}", class.ground_size(), class.len())
}

fn sample_prefix(args: &SampleArgs, class: &HypothesisClass) -> Result<SamplePrefix, CliError> {
    let prefix = SamplePrefix::new(args.sample.clone(), class.ground())
        .map_err(|e| CliError::Input(format!("--sample: {e}")))?;
    Ok(prefix.completed(class.ground()))
}

fn check_assignment(assign: &PartialAssignment, class: &HypothesisClass) -> Result<(), CliError> {
    assign.validate(class.ground()).map_err(|e| CliError::Input(format!("--assign: {e}")))
}

fn join(items: &[usize]) -> String {
    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

pub fn execute(command: &Command, report: &mut Report) -> Result<(), CliError> {
    match command {
        Command::Vc { class } => {
            let class = load_class(class, report)?;
            report.line(describe(&class));
            let vc = vc_dimension(&class)?;
            report.line(format!("vc={} witness={}", vc.dimension, format_set(&vc.witness)));
        }
        Command::Popper { class, assign, depth } => {
            let class = load_class(class, report)?;
            report.line(describe(&class));
            match depth {
                None => {
                    check_assignment(assign, &class)?;
                    report.line(format!("assign={assign}"));
                    report.line(format!("popper={}", popper_dimension(&class, assign)?));
                }
                Some(depth) => {
                    let profile = popper_profile(&class, *depth)?;
                    let max = profile.max_finite.map_or("none".to_string(), |v| v.to_string());
                    report.line(format!(
                        "depth={depth} assignments={} max_finite={max} unwitnessed={}",
                        profile.entries.len(),
                        profile.unwitnessed
                    ));
                    for (a, result) in &profile.entries {
                        report.line(format!("{a} popper={result}"));
                    }
                }
            }
        }
        Command::Growth { class, m } => {
            let class = load_class(class, report)?;
            report.line(describe(&class));
            let max_m = m.unwrap_or(class.ground_size());
            if max_m > class.ground_size() {
                return Err(CliError::Input(format!("--m {max_m} exceeds ground size {}", class.ground_size())));
            }
            let vc = vc_dimension(&class).ok().map(|v| v.dimension);
            report.line(format!("vc={}", vc.map_or("undefined".to_string(), |d| d.to_string())));
            for k in 0..=max_m {
                let entry = growth_at(&class, k)?;
                let mut line = format!("m={k} tau={} witness={}", entry.value, format_set(&entry.witness));
                if let Some(d) = vc {
                    line.push_str(&format!(" sauer={}", sauer_bound(k, d)));
                }
                report.line(line);
            }
        }
        Command::Sauer { m, d } => {
            report.line(format!("bound={}", sauer_bound(*m, *d)));
            match analytic_bound(*m, *d) {
                Some(v) => report.line(format!("analytic=(e*m/d)^d={v:.6}")),
                None => report.line("analytic=undefined (needs d >= 1 and m > d + 1)"),
            }
        }
        Command::Surprise { class, sample, n } => {
            let class = load_class(class, report)?;
            report.line(describe(&class));
            let prefix = sample_prefix(sample, &class)?;
            report.line(format!("sample={}", join(prefix.window(*n)?)));
            let mu = semi_measure(&class, &prefix, *n)?;
            let s = surprise(&class, &prefix, *n)?;
            report.line(format!("mu={}", both(&mu)));
            report.line(format!("S={}", both(&s)));
            report.line(format!("crucial={}", s > Rational::from_integer(0.into())));
        }
        Command::Severe { class, sample, n, epsilon, observed } => {
            let class = load_class(class, report)?;
            report.line(describe(&class));
            let prefix = sample_prefix(sample, &class)?;
            let n = n.unwrap_or(observed.width());
            report.line(format!("sample={} observed={observed} epsilon={}", join(prefix.window(n)?), exact(epsilon)));
            let v = severe_surprise(&class, &prefix, n, epsilon, observed)?;
            report.line(format!("S={}", both(&v.surprise)));
            report.line(format!("S_complement={}", both(&v.complement_surprise)));
            report.line(format!("observed_compatible={}", v.observed_compatible));
            report.line(format!("exceeds_threshold={}", v.exceeds_threshold));
            report.line(format!("dominates_complement={}", v.dominates_complement));
            report.line(format!("severe={}", if v.passed { "pass" } else { "fail" }));
        }
        Command::Cosurprise { class, sample, n, given, cylinder } => {
            let class = load_class(class, report)?;
            report.line(describe(&class));
            let prefix = sample_prefix(sample, &class)?;
            report.line(format!("sample={}", join(prefix.window(*n)?)));
            let condition = match (given, cylinder) {
                (Some(path), _) => Some(read_class_file(path, report)?),
                (None, Some(bits)) => {
                    let cap = cap_override()?;
                    Some(apply_cap(cylinder_class(class.ground_size(), &prefix, *n, bits)?, cap))
                }
                (None, None) => None,
            };
            report.line(format!("S_co={}", both(&co_surprise(&class, &prefix, *n)?)));
            if let Some(j) = condition {
                report.line(format!("S_co(J)={}", both(&co_surprise(&j, &prefix, *n)?)));
                report.line(format!("S_co(H|J)={}", both(&conditional_co_surprise(&class, &j, &prefix, *n)?)));
            }
        }
        Command::Ratio { class, sample, n } => {
            let class = load_class(class, report)?;
            report.line(describe(&class));
            let prefix = sample_prefix(sample, &class)?;
            report.line(format!("sample={}", join(prefix.window(*n)?)));
            report.line(format!("S={}", both(&surprise(&class, &prefix, *n)?)));
            report.line(format!("S_co={}", both(&co_surprise(&class, &prefix, *n)?)));
            match surprise_ratio(&class, &prefix, *n)? {
                Some(r) => report.line(format!("ratio={}", both(&r))),
                None => report.line("ratio=undefined (S=0)"),
            }
        }
        Command::Bound { class, epsilon } => {
            let class = load_class(class, report)?;
            report.line(describe(&class));
            report.line(format!("epsilon={}", exact(epsilon)));
            match epsilon_sample_bound(&class, epsilon)? {
                SampleBound::Reached(m) => {
                    report.line(format!("bound={m}"));
                    report.line(format!("worst_mu={}", both(&worst_case_mu(&class, m)?)));
                }
                SampleBound::Unreachable => {
                    report.line("bound=unreachable (tau(m)/2^m exceeds epsilon for every m up to the ground size)")
                }
            }
        }
        Command::Adversary { class, m } => {
            let class = load_class(class, report)?;
            report.line(describe(&class));
            let prefix = adversarial_sample(&class, *m)?;
            report.line(format!("sample={}", join(prefix.as_slice())));
            for r in surprise_trace(&class, &prefix, *m)? {
                report.line(format!("n={} S={}", r.prefix_length, both(&r.surprise)));
            }
        }
        Command::Selector { class, assign, stages } => {
            let class = load_class(class, report)?;
            report.line(describe(&class));
            check_assignment(assign, &class)?;
            let plan = build_selector(&class, assign, stages.unwrap_or(class.ground_size()))?;
            report.line(format!("seed={}", plan.seed));
            for (i, stage) in plan.stages.iter().enumerate() {
                report.line(format!(
                    "stage={} popper={} witness={} assume={}",
                    i + 1,
                    stage.popper_value,
                    format_set(&stage.witness),
                    stage.assumed_outcome
                ));
            }
            report.line(format!("order={}", join(plan.flattened_order.as_slice())));
        }
        Command::Trace { class, sample, n, csv, exact: exact_csv } => {
            let class = load_class(class, report)?;
            report.line(describe(&class));
            let prefix = sample_prefix(sample, &class)?;
            let up_to = n.unwrap_or(class.ground_size());
            report.line(format!("sample={}", join(prefix.window(up_to)?)));
            let rows = surprise_trace(&class, &prefix, up_to)?;
            for r in &rows {
                report.line(format!(
                    "n={} mu={} S={} S_co={} crucial={}",
                    r.prefix_length,
                    both(&r.mu),
                    both(&r.surprise),
                    both(&r.co_surprise),
                    r.crucial_experiment
                ));
            }
            if let Some(path) = csv {
                let cell = |v: &Rational| if *exact_csv { exact(v) } else { decimal(v, 6) };
                let fail = |e: csv::Error| CliError::Output(format!("cannot write CSV {}: {e}", path.display()));
                let mut w = csv::Writer::from_path(path).map_err(fail)?;
                w.write_record(["n", "mu", "surprise", "co_surprise", "crucial"]).map_err(fail)?;
                for r in &rows {
                    w.write_record([
                        r.prefix_length.to_string(),
                        cell(&r.mu),
                        cell(&r.surprise),
                        cell(&r.co_surprise),
                        r.crucial_experiment.to_string(),
                    ])
                    .map_err(fail)?;
                }
                w.flush().map_err(|e| CliError::Output(format!("cannot write CSV {}: {e}", path.display())))?;
                report.line(format!("csv={} rows={}", path.display(), rows.len()));
            }
        }
        Command::Family { ground, kind, write } => {
            let cap = cap_override()?;
            let classes = match kind {
                None => catalog(*ground)
                    .map_err(|e| CliError::Input(format!("--ground: {e}")))?
                    .into_iter()
                    .map(|d| apply_cap(make_family(d), cap))
                    .collect(),
                Some(spec) => {
                    let prefix = "kind family ";
                    let text = format!("ground {ground}\n{prefix}{spec}\n");
                    let class = classfile::parse(&text).map_err(|e| match e.line {
                        1 => CliError::Input(format!("--ground: {}", e.message)),
                        _ => CliError::Input(format!(
                            "--kind column {}: {}",
                            e.column.saturating_sub(prefix.len()).max(1),
                            e.message
                        )),
                    })?;
                    vec![apply_cap(class, cap)]
                }
            };
            for class in &classes {
                let desc = class.family().expect("built from a descriptor");
                let vc = vc_dimension(class).ok().map(|v| v.dimension);
                let show = |v: Option<usize>| v.map_or("undefined".to_string(), |d| d.to_string());
                report.line(format!(
                    "{}: size={} vc={} expected_vc={}",
                    desc.kind(),
                    class.len(),
                    show(vc),
                    show(expected_vc(desc))
                ));
            }
            if let (Some(path), [class]) = (write, &classes[..]) {
                std::fs::write(path, classfile::write(class))
                    .map_err(|e| CliError::Output(format!("cannot write {}: {e}", path.display())))?;
                report.line(format!("wrote={}", path.display()));
            }
        }
        Command::Mle { data, thetas, interval, exclude, step } => {
            let data: CoinData = data.parse().map_err(|e: falsilab::Error| CliError::Input(format!("--data: {e}")))?;
            report.input("data", data.to_string().as_bytes());
            let params = match interval {
                Some((lo, hi)) => {
                    ParameterSet::IntervalWithExclusions { lo: *lo, hi: *hi, excluded: exclude.clone(), step: *step }
                }
                None => ParameterSet::Finite(thetas.clone()),
            };
            report.line(format!("data={data} flips={} heads={}", data.len(), data.heads()));
            let r = mle_search(&params, &data)?;
            report.line(format!("sup={} attained={}", r.supremum, r.attained));
            if let Some(argmax) = &r.argmax {
                let shown: Vec<String> = argmax.iter().map(|t| t.to_string()).collect();
                report.line(format!("argmax={{{}}}", shown.join(",")));
            }
            if let Some(m) = r.analytic_maximizer {
                report.line(format!("closure_maximizer={m} excluded={}", r.maximizer_excluded));
            }
        }
        Command::Tails { epsilon, n } => {
            let eps = to_f64(epsilon);
            let t = tails_threshold(eps, *n)?;
            report.line(format!("epsilon={} flips={n}", exact(epsilon)));
            report.line(format!("threshold={t}"));
            for (label, p) in [("above", t + 1e-9), ("below", t - 1e-9)] {
                if (0.0..=1.0).contains(&p) {
                    report.line(format!("{label}: p={p} P(tails>=1)={}", prob_at_least_one_tails(p, *n)?));
                }
            }
        }
    }
    Ok(())
}
