//! One function per subcommand.

use std::time::Instant;

use anyhow::{bail, Context, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use strq::gadgets::ReductionReport;
use strq::grammar::LcpRmq;
use strq::ilf::IlfIndex;
use strq::measures::{delta_from_bundle, lz77_from_bundle, run_length_encode, LzPhrase};
use strq::predecessor::{Predecessor, SmallSet, StaticKeySet, YFastTrie};
use strq::range::rmq_scan;
use strq::text::lce_naive;
use strq::{build_bundle, Text};

use crate::args::{GadgetArgs, IlfArgs, IlfBenchArgs, InputArgs, InputFormat, LceArgs, LcpRmqArgs, PredFlavor};
use crate::harness::{self, Mode};
use crate::input::{read_numbers, read_pairs, read_text};
use crate::report::{decimal, Report};

/// A report and whether every checked invariant held.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Report,
    pub passed: bool,
}

impl Outcome {
    fn new(report: Report, passed: bool) -> Self {
        Self { report, passed }
    }
}

fn symbol_value(c: u32, format: InputFormat) -> Value {
    match (format, char::from_u32(c)) {
        (InputFormat::Ascii, Some(ch)) if (32..127).contains(&c) => Value::from(ch.to_string()),
        _ => Value::from(c),
    }
}

fn load(args: &InputArgs) -> Result<Text> {
    read_text(&args.input, args.format)
}

pub fn arrays(args: &InputArgs) -> Result<Outcome> {
    let text = load(args)?;
    let b = build_bundle(&text)?;
    let mut r = Report::new("arrays");
    r.push("n", text.len());
    r.push("sa", b.sa.as_slice());
    r.push("isa", b.isa.as_slice());
    r.push("lcp", b.lcp.as_slice());
    r.push("plcp", b.plcp.as_slice());
    match args.format {
        InputFormat::Ascii => {
            let s: String = b.bwt.iter().map(|&c| char::from_u32(c).unwrap_or('?')).collect();
            r.push("bwt", s);
        }
        InputFormat::Ints => r.push("bwt", b.bwt.as_slice()),
    }
    r.push("lf", b.lf.as_slice());
    r.push("ilf", b.ilf.as_slice());
    r.push("phi", b.phi.as_slice());
    r.push("inv_phi", b.inv_phi.as_slice());
    Ok(Outcome::new(r, true))
}

pub fn measures(args: &InputArgs) -> Result<Outcome> {
    let text = load(args)?;
    let b = build_bundle(&text)?;
    let n = text.len();
    let mut distinct = text.symbols().to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let lz = lz77_from_bundle(&text, &b);
    let z = lz.len();
    let r_runs = b.bwt_runs();
    let delta = delta_from_bundle(&b);
    let d = delta.to_f64();
    let log_n = (n as f64).log2();

    let mut r = Report::new("measures");
    r.push("n", n);
    r.push("sigma", distinct.len());
    r.push("rl_runs", run_length_encode(&text)?.len());
    r.push("z", z);
    r.push("r", r_runs);
    r.push("delta", delta.to_string());
    r.push("delta_decimal", decimal(d));
    r.push("delta_length", delta.arg_len);
    r.push("z_over_delta_log_n", decimal(z as f64 / (d * log_n)));
    r.push("r_over_delta_log2_n", decimal(r_runs as f64 / (d * log_n * log_n)));
    r.push("delta_over_z", decimal(d / z as f64));
    r.push("delta_over_r", decimal(d / r_runs as f64));
    let phrases: Vec<String> = lz
        .phrases
        .iter()
        .map(|p| match *p {
            LzPhrase::Literal(c) => format!("({},0)", human_symbol(c, args.format)),
            LzPhrase::Repeat { source, len } => format!("({source},{len})"),
        })
        .collect();
    r.push("lz77", phrases.join(" "));
    Ok(Outcome::new(r, true))
}

fn human_symbol(c: u32, format: InputFormat) -> String {
    match symbol_value(c, format) {
        Value::String(s) => s,
        v => v.to_string(),
    }
}

pub fn ilf(args: &IlfArgs) -> Result<Outcome> {
    let text = load(&args.text)?;
    match args.pred {
        PredFlavor::Yfast => ilf_with::<YFastTrie>(&text, args),
        PredFlavor::Binary => ilf_with::<StaticKeySet>(&text, args),
        PredFlavor::Small => ilf_with::<SmallSet>(&text, args),
    }
}

fn ilf_with<P: Predecessor>(text: &Text, args: &IlfArgs) -> Result<Outcome> {
    let n = text.len();
    let bundle = build_bundle(text)?;
    let idx: IlfIndex<P> = IlfIndex::build(text)?;
    let positions = match &args.queries {
        Some(p) => read_numbers(p)?,
        None => (1..=n).collect(),
    };
    let mut answers = Vec::with_capacity(positions.len());
    let mut mismatches = 0usize;
    let mut pred_queries = 0u64;
    for &i in &positions {
        let (v, trace) = idx.query_traced(i).with_context(|| format!("query {i}"))?;
        pred_queries += u64::from(trace.predecessor_queries);
        if v != bundle.ilf[i] {
            mismatches += 1;
        }
        answers.push(v);
    }
    let mut r = Report::new("ilf");
    r.push("n", n);
    r.push("pred", format!("{:?}", args.pred).to_lowercase());
    r.push("r", bundle.bwt_runs());
    r.push("boundary_count", idx.boundary_count());
    r.push("space_words", 2 * idx.boundary_count());
    r.push("queries", positions.len());
    r.push("predecessor_queries", pred_queries);
    r.push("mismatches", mismatches);
    if args.queries.is_some() {
        r.push("answers", answers);
    }
    Ok(Outcome::new(r, mismatches == 0))
}

fn random_text(len: usize, sigma: u32, seed: u64) -> Result<Text> {
    if len == 0 {
        bail!("the random text must be nonempty");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(Text::new((0..len).map(|_| rng.gen_range(0..sigma)).collect(), sigma)?)
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    xs[xs.len() / 2]
}

/// Median nanoseconds per call of `f` over `reps` timed passes after one warm-up.
fn time_per_query(reps: u32, queries: usize, mut f: impl FnMut() -> u64) -> (f64, u64) {
    let check = f();
    let samples = (0..reps)
        .map(|_| {
            let t = Instant::now();
            std::hint::black_box(f());
            t.elapsed().as_nanos() as f64 / queries.max(1) as f64
        })
        .collect();
    (median(samples), check)
}

pub fn ilf_bench(args: &IlfBenchArgs) -> Result<Outcome> {
    let text = match &args.input {
        Some(p) => read_text(p, args.format)?,
        None => random_text(args.len, args.sigma, args.seed)?,
    };
    let n = text.len();
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed ^ 0x9e37_79b9_7f4a_7c15);
    let qs: Vec<usize> = (0..args.queries).map(|_| rng.gen_range(1..=n)).collect();
    let bundle = build_bundle(&text)?;
    let expected: u64 = qs.iter().map(|&i| bundle.ilf[i] as u64).sum();

    let mut r = Report::new("ilf-bench");
    r.push("n", n);
    r.push("r", bundle.bwt_runs());
    r.push("queries", qs.len());
    r.push("reps", args.reps);
    let (ns, sum) = time_per_query(args.reps, qs.len(), || qs.iter().map(|&i| bundle.ilf[i] as u64).sum());
    r.push("ns_per_query_plain_array", decimal(ns));
    let mut ok = sum == expected;
    let mut bench = |name: &str, run: &dyn Fn() -> u64| {
        let (ns, sum) = time_per_query(args.reps, qs.len(), run);
        r.push(&format!("ns_per_query_{name}"), decimal(ns));
        ok &= sum == expected;
    };
    let y: IlfIndex<YFastTrie> = IlfIndex::build(&text)?;
    bench("yfast", &|| qs.iter().map(|&i| y.query(i).unwrap() as u64).sum());
    let b: IlfIndex<StaticKeySet> = IlfIndex::build(&text)?;
    bench("binary", &|| qs.iter().map(|&i| b.query(i).unwrap() as u64).sum());
    let s: IlfIndex<SmallSet> = IlfIndex::build(&text)?;
    bench("small", &|| qs.iter().map(|&i| s.query(i).unwrap() as u64).sum());
    r.push("boundary_count", y.boundary_count());
    r.push("checksums_agree", ok);
    Ok(Outcome::new(r, ok))
}

fn random_pairs(n: usize, count: usize, seed: u64, distinct: bool) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if distinct && n < 2 {
        return Vec::new();
    }
    (0..count)
        .map(|_| {
            if distinct {
                let b = rng.gen_range(0..n);
                (b, rng.gen_range(b + 1..=n))
            } else {
                (rng.gen_range(1..=n), rng.gen_range(1..=n))
            }
        })
        .collect()
}

fn grammar_fields(r: &mut Report, s: &LcpRmq, runs: usize, epsilon: f64) {
    let n = s.len() as f64;
    let g = s.grammar();
    r.push("epsilon", epsilon);
    r.push("widening", s.widening());
    r.push("rhs_bound", s.rhs_bound());
    r.push("max_rhs", g.max_rhs());
    r.push("grammar_rules", g.rule_count());
    r.push("grammar_size", g.size());
    r.push("grammar_height", g.height());
    r.push("slp_height", s.slp_height());
    r.push("size_over_r_log2_n", decimal(g.size() as f64 / (runs as f64 * n.log2() * n.log2())));
}

pub fn lcp_rmq(args: &LcpRmqArgs) -> Result<Outcome> {
    let text = load(&args.text)?;
    let n = text.len();
    let bundle = build_bundle(&text)?;
    let s = LcpRmq::build(&text, args.epsilon)?;
    let pairs = match &args.queries {
        Some(p) => read_pairs(p)?,
        None => random_pairs(n, args.random, args.seed, true),
    };
    let lcp = bundle.lcp.as_slice();
    let mut answers = Vec::with_capacity(pairs.len());
    let mut mismatches = 0usize;
    for &(b, e) in &pairs {
        let got = s.lcp_rmq(b, e).with_context(|| format!("range ({b}..{e}]"))?;
        if Some(got) != rmq_scan(lcp, b, e) {
            mismatches += 1;
        }
        answers.push(got);
    }
    let mut r = Report::new("lcp-rmq");
    r.push("n", n);
    r.push("r", bundle.bwt_runs());
    grammar_fields(&mut r, &s, bundle.bwt_runs(), args.epsilon);
    r.push("queries", pairs.len());
    r.push("mismatches", mismatches);
    if args.queries.is_some() {
        r.push("answers", answers);
    }
    if args.bench && !pairs.is_empty() {
        let (ns, _) = time_per_query(args.reps, pairs.len(), || {
            pairs.iter().map(|&(b, e)| s.lcp_rmq(b, e).unwrap() as u64).sum()
        });
        r.push("ns_per_query", decimal(ns));
        let (ns, _) = time_per_query(args.reps, pairs.len(), || {
            pairs.iter().map(|&(b, e)| rmq_scan(lcp, b, e).unwrap() as u64).sum()
        });
        r.push("ns_per_query_scan", decimal(ns));
    }
    Ok(Outcome::new(r, mismatches == 0))
}

pub fn lce(args: &LceArgs) -> Result<Outcome> {
    let text = load(&args.text)?;
    let n = text.len();
    let bundle = build_bundle(&text)?;
    let s = LcpRmq::build(&text, args.epsilon)?;
    let pairs = match &args.queries {
        Some(p) => read_pairs(p)?,
        None => random_pairs(n, args.random, args.seed, false),
    };
    let mut answers = Vec::with_capacity(pairs.len());
    let mut mismatches = 0usize;
    for &(i, j) in &pairs {
        let got = s.lce(i, j).with_context(|| format!("pair ({i}, {j})"))?;
        if got != lce_naive(&text, i, j)? {
            mismatches += 1;
        }
        answers.push(got);
    }
    let mut r = Report::new("lce");
    r.push("n", n);
    r.push("r", bundle.bwt_runs());
    grammar_fields(&mut r, &s, bundle.bwt_runs(), args.epsilon);
    r.push("queries", pairs.len());
    r.push("mismatches", mismatches);
    if args.queries.is_some() {
        r.push("answers", answers);
    }
    Ok(Outcome::new(r, mismatches == 0))
}

pub fn gadget_verify(args: &GadgetArgs) -> Result<Outcome> {
    let mode = match args.trials {
        Some(count) => Mode::Trials { count, seed: args.seed },
        None => Mode::Exhaustive,
    };
    let rep = harness::verify(args.kind, args.size, mode, args.workers as usize)?;
    let mut r = Report::new("gadget-verify");
    r.push("kind", args.kind.name());
    r.push("size", args.size);
    match mode {
        Mode::Exhaustive => r.push("mode", "exhaustive"),
        Mode::Trials { count, seed } => {
            r.push("mode", "trials");
            r.push("trials", count);
            r.push("seed", seed);
        }
    }
    push_reduction(&mut r, &rep);
    Ok(Outcome::new(r, rep.passed()))
}

/// Appends the fields of a reduction report.
pub fn push_reduction(r: &mut Report, rep: &ReductionReport) {
    r.push("instances", rep.instances);
    r.push("queries", rep.queries);
    r.push("mismatches", rep.mismatches);
    r.push("shape_failures", rep.shape_failures);
    r.push("anchor_failures", rep.anchor_failures);
    r.push("certificate_failures", rep.certificate_failures);
    r.push("max_text_len", rep.max_text_len);
    r.push("max_runs", rep.max_runs);
    r.push("max_certificate", rep.max_certificate);
    r.push("max_lz", rep.max_lz);
    let first = rep.first_failure.as_ref().map_or(Value::Null, |f| {
        let got = f.got.map_or("error".to_owned(), |g| g.to_string());
        Value::from(format!(
            "instance={} check={} args=({},{}) expected={} got={}",
            f.instance, f.check, f.args.0, f.args.1, f.expected, got
        ))
    });
    r.push("first_failure", first);
    r.push("status", if rep.passed() { "pass" } else { "fail" });
}
