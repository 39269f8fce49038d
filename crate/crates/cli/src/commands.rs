use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::io::{BufRead, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use dialect_forge::data::{self, shipped_profile};
use dialect_forge::survey::{binary_profiles, parse_bank, Profiles};
use dialect_forge::{
    catalog_universe, density_report, exact_match, feature_vector, load_profile, manhattan_distance, paired_bootstrap,
    parse_conllu, parse_universe, serialize_conllu, token_f1, transform_dataset, transform_document, DensityReport,
    DialectProfile, FeatureId, FieldSelector, Provenance, Session, TransformConfig,
};
use serde::{Deserialize, Serialize};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// A profile file path, or the name of a shipped profile.
pub fn resolve_profile(arg: &str) -> Result<DialectProfile> {
    let path = Path::new(arg);
    if path.is_file() {
        let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or(arg);
        return load_profile(name, &read(path)?).with_context(|| format!("profile {}", path.display()));
    }
    shipped_profile(arg).with_context(|| {
        format!(
            "{arg:?} is neither a profile file nor a shipped profile ({})",
            data::PROFILE_NAMES.join(", ")
        )
    })
}

pub struct TransformArgs<'a> {
    pub profile: &'a str,
    pub seed: u64,
    pub density: f64,
    pub threads: Option<usize>,
    pub conllu: Option<&'a Path>,
    pub jsonl: Option<&'a Path>,
    pub fields: &'a [String],
    pub parses: Option<&'a Path>,
    pub out: &'a Path,
    pub provenance: &'a Path,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransformSummary {
    pub units: usize,
    pub changed: usize,
    pub skips: usize,
}

fn provenance_lines(ps: &[Provenance]) -> Result<String> {
    let mut out = String::new();
    for p in ps {
        out.push_str(&serde_json::to_string(p)?);
        out.push('\n');
    }
    Ok(out)
}

pub fn transform(args: &TransformArgs) -> Result<TransformSummary> {
    let profile = resolve_profile(args.profile)?;
    let config = TransformConfig {
        seed: args.seed,
        density: args.density,
        threads: args.threads,
    };
    match args.jsonl {
        Some(jsonl) => {
            let parses = args.parses.context("--jsonl needs --parses <sidecar.conllu>")?;
            if args.fields.is_empty() {
                bail!("--jsonl needs --fields <selector,...>");
            }
            let selectors = args
                .fields
                .iter()
                .map(|f| FieldSelector::parse(f))
                .collect::<dialect_forge::Result<Vec<_>>>()?;
            let sidecar = parse_conllu(&read(parses)?).with_context(|| format!("parsing {}", parses.display()))?;
            let out = transform_dataset(&read(jsonl)?, &selectors, &sidecar, &profile, &config)?;
            let mut text = out.records.join("\n");
            if !text.is_empty() {
                text.push('\n');
            }
            write(args.out, &text)?;
            write(args.provenance, &provenance_lines(&out.provenance)?)?;
            Ok(TransformSummary {
                units: out.records.len(),
                changed: out.provenance.len(),
                skips: out.skips,
            })
        }
        None => {
            let input = args.conllu.context("--conllu <path> is required without --jsonl")?;
            let doc = parse_conllu(&read(input)?).with_context(|| format!("parsing {}", input.display()))?;
            let out = transform_document(&doc, &profile, &config)?;
            write(args.out, &serialize_conllu(&out.document))?;
            write(args.provenance, &provenance_lines(&out.provenance)?)?;
            Ok(TransformSummary {
                units: out.provenance.len(),
                changed: out.provenance.iter().filter(|p| p.is_changed()).count(),
                skips: out.skips,
            })
        }
    }
}

pub fn distance(a: &str, b: &str, universe: Option<&Path>) -> Result<f64> {
    let universe = match universe {
        Some(path) => parse_universe(&read(path)?).with_context(|| format!("universe {}", path.display()))?,
        None => catalog_universe(),
    };
    let va = feature_vector(&resolve_profile(a)?, &universe)?;
    let vb = feature_vector(&resolve_profile(b)?, &universe)?;
    Ok(manhattan_distance(&va, &vb)?)
}

pub fn density(provenance: &Path) -> Result<DensityReport> {
    let text = read(provenance)?;
    let mut all = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let p: Provenance =
            serde_json::from_str(line).with_context(|| format!("{} line {}", provenance.display(), i + 1))?;
        all.push(p);
    }
    Ok(density_report(&all))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    F1,
    Em,
}

#[derive(Debug, Deserialize)]
struct Answer {
    id: serde_json::Value,
    text: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub score_a: f64,
    pub score_b: f64,
    pub delta: f64,
    pub p_value: f64,
    pub n: usize,
}

fn id_key(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn answers(path: &Path) -> Result<Vec<(String, String)>> {
    let text = read(path)?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let a: Answer = serde_json::from_str(l)
                .with_context(|| format!("{} line {}: expected {{id, text}}", path.display(), i + 1))?;
            Ok((id_key(&a.id), a.text))
        })
        .collect()
}

fn scores(pred: &Path, gold: &[(String, String)], metric: Metric) -> Result<Vec<f64>> {
    let by_id: HashMap<String, String> = answers(pred)?.into_iter().collect();
    gold.iter()
        .map(|(id, g)| {
            let p = by_id
                .get(id)
                .with_context(|| format!("{} has no prediction for id {id}", pred.display()))?;
            Ok(match metric {
                Metric::F1 => token_f1(p, g),
                Metric::Em => f64::from(exact_match(p, g)),
            })
        })
        .collect()
}

pub fn eval(
    pred_a: &Path,
    pred_b: &Path,
    gold: &Path,
    metric: Metric,
    resamples: usize,
    seed: u64,
) -> Result<EvalReport> {
    let gold = answers(gold)?;
    if gold.is_empty() {
        bail!("gold file has no examples");
    }
    let a = scores(pred_a, &gold, metric)?;
    let b = scores(pred_b, &gold, metric)?;
    let boot = paired_bootstrap(&a, &b, resamples, seed)?;
    let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
    Ok(EvalReport {
        score_a: mean(&a),
        score_b: mean(&b),
        delta: boot.mean_delta,
        p_value: boot.p_value,
        n: gold.len(),
    })
}

/// Survey inputs: every `*.tsv` profile in `dir` (or the shipped set) minus
/// `exclude`, and the question bank (or the shipped one).
pub fn survey_inputs(
    dir: Option<&Path>,
    bank: Option<&Path>,
    exclude: &[String],
) -> Result<(Profiles, BTreeMap<FeatureId, String>)> {
    let mut profiles = Vec::new();
    match dir {
        Some(dir) => {
            let mut paths: Vec<_> = fs::read_dir(dir)
                .with_context(|| format!("reading {}", dir.display()))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "tsv"))
                .collect();
            paths.sort();
            for path in paths {
                let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or_default().to_owned();
                profiles
                    .push(load_profile(&name, &read(&path)?).with_context(|| format!("profile {}", path.display()))?);
            }
        }
        None => profiles = data::shipped_profiles(),
    }
    profiles.retain(|p| !exclude.contains(&p.name));
    if profiles.len() < 2 {
        bail!("a survey needs at least two dialect profiles");
    }
    let bank = match bank {
        Some(path) => parse_bank(&read(path)?).with_context(|| format!("bank {}", path.display()))?,
        None => parse_bank(data::QUESTION_BANK)?,
    };
    Ok((binary_profiles(&profiles), bank))
}

fn parse_answer(line: &str) -> Option<bool> {
    match line.trim().to_ascii_lowercase().as_str() {
        "y" | "yes" => Some(true),
        "n" | "no" => Some(false),
        _ => None,
    }
}

/// Runs one survey over a line-based terminal.
pub fn survey_terminal(mut session: Session, input: impl BufRead, mut out: impl Write) -> Result<Vec<String>> {
    let mut lines = input.lines();
    loop {
        let view = session.view();
        let Some(q) = view.question else {
            let result = view.result.unwrap_or_default();
            writeln!(out, "Closest dialect(s): {}", result.join(", "))?;
            return Ok(result);
        };
        writeln!(out, "\n{}\n  {}\n[y/n] ", q.prompt, q.sentence)?;
        out.flush()?;
        let answer = loop {
            let Some(line) = lines.next() else {
                bail!("input ended before the survey finished");
            };
            match parse_answer(&line?) {
                Some(a) => break a,
                None => writeln!(out, "Please answer y or n.")?,
            }
        };
        session.answer(q.feature, answer)?;
    }
}
