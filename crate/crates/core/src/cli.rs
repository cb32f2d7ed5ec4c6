//! Report-producing commands behind the `parahoric` binary.
//!
//! Every command returns a [`Report`] whose JSON form is deterministic for a
//! fixed input and tool version: object keys are sorted and no timing or
//! environment data is recorded.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::alcove::{fundamental_chamber, verify_closure_lemma, verify_kernel_inclusion};
use crate::error::Error;
use crate::levels::{
    factorization_matches, verify_neighborhood_estimate, verify_tower_additivity, verify_tui,
    verify_wbuwb,
};
use crate::parabolics::{
    admissibility_witness, check_psi_stability, dynkin_components_type_a, subsystem, MAX_SWEEP_RANK,
};
use crate::rootsys::{RootSystem, RootSystemSpec};
use crate::steinberg::{descent_count, presentation_report, steinberg_polynomial};
use crate::verdict::{Counterexample, Verdict};
use crate::weyl::{Subset, WeylGroup};

pub const SCHEMA_VERSION: &str = "1";
pub const TOOL: &str = "parahoric";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exit status of a command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Pass = 0,
    VerificationFailure = 1,
    Usage = 2,
    ResourceCap = 3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Which {
    All,
    Closure,
    Psi,
    Levels,
    Neighborhood,
    Kernel,
}

/// A command failure that produced no report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandError {
    pub code: ExitCode,
    pub message: String,
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::GroupTooLarge { .. } | Error::RankTooLarge { .. } | Error::Overflow => {
                ExitCode::ResourceCap
            }
            _ => ExitCode::Usage,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stamp {
    pub passed: bool,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl From<Verdict> for Stamp {
    fn from(v: Verdict) -> Self {
        Self {
            passed: v.passed(),
            checked: v.checked,
            counterexample: v.counterexample,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub tool: &'static str,
    pub version: &'static str,
    pub spec: String,
    pub command: String,
    pub results: Value,
    pub stamps: BTreeMap<String, Stamp>,
}

impl Report {
    fn new(spec: &RootSystemSpec, command: impl Into<String>, results: Value) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            tool: TOOL,
            version: VERSION,
            spec: spec.to_string(),
            command: command.into(),
            results,
            stamps: BTreeMap::new(),
        }
    }

    fn stamp(&mut self, name: &str, verdict: Verdict) {
        self.stamps.insert(name.to_string(), verdict.into());
    }

    pub fn all_passed(&self) -> bool {
        self.stamps.values().all(|s| s.passed)
    }

    pub fn exit_code(&self) -> ExitCode {
        if self.all_passed() {
            ExitCode::Pass
        } else {
            ExitCode::VerificationFailure
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One `path<TAB>value` line per JSON leaf.
    pub fn to_tsv(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut out = String::from("path\tvalue\n");
        flatten(&value, String::new(), &mut out);
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} {}: {} {}",
            self.tool, self.version, self.command, self.spec
        );
        let value = serde_json::to_value(&self.results).expect("results serialize");
        render_text(&value, 1, &mut out);
        if !self.stamps.is_empty() {
            out.push_str("checks:\n");
            for (name, s) in &self.stamps {
                let status = if s.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "  {status} {name} ({} cases)", s.checked);
                if let Some(c) = &s.counterexample {
                    let _ = writeln!(
                        out,
                        "       counterexample: {}",
                        serde_json::to_string(c).expect("counterexample serializes")
                    );
                }
            }
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Tsv => self.to_tsv(),
            Format::Text => self.to_text(),
        }
    }
}

fn leaf(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "null".into(),
        other => other.to_string(),
    }
}

fn flatten(v: &Value, path: String, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                let p = if path.is_empty() {
                    k.clone()
                } else {
                    format!("{path}.{k}")
                };
                flatten(child, p, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            for (k, child) in items.iter().enumerate() {
                flatten(child, format!("{path}[{k}]"), out);
            }
        }
        other => {
            let _ = writeln!(out, "{path}\t{}", leaf(other));
        }
    }
}

fn render_text(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                if child.is_object() || (child.is_array() && !is_flat(child)) {
                    let _ = writeln!(out, "{pad}{k}:");
                    render_text(child, depth + 1, out);
                } else {
                    let _ = writeln!(out, "{pad}{k}: {}", leaf(child));
                }
            }
        }
        Value::Array(items) => {
            for child in items {
                if child.is_object() || (child.is_array() && !is_flat(child)) {
                    let _ = writeln!(out, "{pad}-");
                    render_text(child, depth + 1, out);
                } else {
                    let _ = writeln!(out, "{pad}- {}", leaf(child));
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", leaf(other));
        }
    }
}

fn is_flat(v: &Value) -> bool {
    v.as_array()
        .is_some_and(|a| a.iter().all(|x| !x.is_object() && !x.is_array()))
}

fn parse_spec(spec: &str) -> Result<(RootSystemSpec, RootSystem), CommandError> {
    let parsed: RootSystemSpec = spec.parse()?;
    let rs = RootSystem::build(&parsed);
    Ok((parsed, rs))
}

fn check_sweep_rank(rs: &RootSystem) -> Result<(), CommandError> {
    if rs.rank() > MAX_SWEEP_RANK {
        return Err(Error::RankTooLarge {
            rank: rs.rank(),
            max: MAX_SWEEP_RANK,
        }
        .into());
    }
    Ok(())
}

/// Roots, marks, group order and alcove vertices.
pub fn cmd_info(spec: &str) -> Result<Report, CommandError> {
    let (parsed, rs) = parse_spec(spec)?;
    let components: Vec<Value> = rs
        .components()
        .iter()
        .map(|c| {
            json!({
                "type": format!("{}{}", c.kind.letter(), c.rank),
                "simple_roots": (c.offset + 1..=c.offset + c.rank).collect::<Vec<_>>(),
                "highest_root": rs.root(c.highest_root),
                "marks": c.marks,
            })
        })
        .collect();
    let positive: Vec<String> = rs.positive_roots().map(|(_, r)| r.to_string()).collect();
    let results = json!({
        "rank": rs.rank(),
        "cartan_matrix": rs.cartan(),
        "components": components,
        "num_roots": rs.num_roots(),
        "num_positive_roots": rs.num_positive_roots(),
        "positive_roots": positive,
        "weyl_order": rs.weyl_order().to_string(),
        "chamber_vertices": fundamental_chamber(&rs).vertices,
    });
    Ok(Report::new(&parsed, "info", results))
}

/// Admissibility of every subset, with a failing root for each
/// inadmissible one, cross-checked against the Dynkin-diagram criterion.
pub fn cmd_admissible(spec: &str) -> Result<Report, CommandError> {
    let (parsed, rs) = parse_spec(spec)?;
    check_sweep_rank(&rs)?;
    let mut admissible = Vec::new();
    let mut inadmissible = Vec::new();
    let mut oracle = Verdict::pass(0);
    for i in Subset::all(rs.rank()) {
        let witness = admissibility_witness(&rs, i);
        oracle.checked += 1;
        if witness.is_none() != dynkin_components_type_a(rs.cartan(), i) && oracle.passed() {
            oracle = Verdict::fail(
                oracle.checked,
                Counterexample::new("root criterion and diagram criterion disagree").subset(i),
            );
        }
        match witness {
            None => admissible.push(i),
            Some(w) => inadmissible.push(json!({
                "subset": i,
                "witness": rs.root(w),
                "witness_text": rs.root(w).to_string(),
            })),
        }
    }
    let results = json!({
        "admissible": admissible,
        "inadmissible": inadmissible,
    });
    let mut report = Report::new(&parsed, "admissible", results);
    report.stamp("dynkin_oracle", oracle);
    Ok(report)
}

/// Runs the selected sweeps over every `I ⊆ Δ`.
pub fn cmd_verify(spec: &str, which: Which) -> Result<Report, CommandError> {
    let (parsed, rs) = parse_spec(spec)?;
    check_sweep_rank(&rs)?;
    let wants = |w: Which| which == Which::All || which == w;
    let group = if wants(Which::Psi) || wants(Which::Levels) {
        Some(WeylGroup::generate(&rs)?)
    } else {
        None
    };
    let subsets: Vec<Subset> = Subset::all(rs.rank()).collect();
    let mut results = serde_json::Map::new();
    results.insert("subsets_checked".into(), json!(subsets.len()));
    if let Some(g) = &group {
        results.insert("weyl_order".into(), json!(g.order()));
    }
    let mut report = Report::new(
        &parsed,
        format!("verify {}", which_name(which)),
        Value::Null,
    );

    if wants(Which::Closure) {
        let v = sweep(&subsets, |i| verify_closure_lemma(&rs, i));
        report.stamp("closure_lemma", v);
    }
    if wants(Which::Psi) {
        let g = group.as_ref().expect("group generated");
        report.stamp(
            "psi_stability",
            sweep(&subsets, |i| check_psi_stability(&rs, g, i)),
        );
    }
    if wants(Which::Levels) {
        let g = group.as_ref().expect("group generated");
        report.stamp("wbuwb", verify_wbuwb(&rs, g));
        report.stamp("tui", sweep(&subsets, |i| verify_tui(&rs, i)));
        report.stamp(
            "iwahori_factorization",
            sweep(&subsets, |i| {
                if factorization_matches(&rs, i) {
                    Verdict::pass(1)
                } else {
                    Verdict::fail(
                        1,
                        Counterexample::new("restriction of U_C differs").subset(i),
                    )
                }
            }),
        );
    }
    if wants(Which::Neighborhood) {
        let mut minima = Vec::new();
        let v = sweep(&subsets, |i| {
            let est = verify_neighborhood_estimate(&rs, i);
            minima.push(json!({ "subset": i, "min_pairing": est.min_pairing }));
            est.verdict
        });
        report.stamp("neighborhood_estimate", v);
        report.stamp(
            "tower_additivity",
            sweep(&subsets, |i| verify_tower_additivity(&rs, i, 3)),
        );
        results.insert("neighborhood_minima".into(), Value::Array(minima));
    }
    if wants(Which::Kernel) {
        let mut rows = Vec::new();
        let v = sweep(&subsets, |i| {
            let k = verify_kernel_inclusion(&rs, i);
            let admissible = admissibility_witness(&rs, i).is_none();
            rows.push(
                json!({ "subset": i, "per_j": k.per_j, "all": k.all, "admissible": admissible }),
            );
            kernel_contract(&rs, i, &k.per_j, k.all, admissible)
        });
        report.stamp("kernel_inclusion", v);
        results.insert("kernel".into(), Value::Array(rows));
    }
    report.results = Value::Object(results);
    Ok(report)
}

fn which_name(which: Which) -> &'static str {
    match which {
        Which::All => "all",
        Which::Closure => "closure",
        Which::Psi => "psi",
        Which::Levels => "levels",
        Which::Neighborhood => "neighborhood",
        Which::Kernel => "kernel",
    }
}

fn sweep(subsets: &[Subset], mut f: impl FnMut(Subset) -> Verdict) -> Verdict {
    subsets
        .iter()
        .fold(Verdict::pass(0), |acc, &i| acc.and(f(i)))
}

/// `per_j[j]` must equal "every root of `Φ_I⁻` has `m_j ≥ −1`", and `all`
/// must equal admissibility.
fn kernel_contract(
    rs: &RootSystem,
    subset: Subset,
    per_j: &BTreeMap<usize, bool>,
    all: bool,
    admissible: bool,
) -> Verdict {
    let data = subsystem(rs, subset);
    for (&label, &got) in per_j {
        let j = label - 1;
        let bad = data.phi_minus(rs).find(|&r| rs.root(r).coeff(j) < -1);
        if got != bad.is_none() {
            let mut c = Counterexample::new(format!(
                "inclusion for j = {label} disagrees with m_j >= -1"
            ))
            .subset(subset);
            if let Some(r) = bad {
                c = c.root(rs.root(r).clone());
            }
            return Verdict::fail(per_j.len(), c);
        }
    }
    if all != admissible {
        return Verdict::fail(
            per_j.len(),
            Counterexample::new("inclusion disagrees with admissibility").subset(subset),
        );
    }
    Verdict::pass(per_j.len().max(1))
}

/// Steinberg polynomial of `I`, its value at `q`, the descent-count
/// cross-check and, when admissible, the presentation data.
pub fn cmd_steinberg(spec: &str, subset: &str, q: Option<i64>) -> Result<Report, CommandError> {
    let (parsed, rs) = parse_spec(spec)?;
    let subset = Subset::parse(subset, rs.rank())?;
    let group = WeylGroup::generate(&rs)?;
    let poly = steinberg_polynomial(&group, subset);
    let at_one = poly.evaluate(1)?;
    let descents = descent_count(&group, subset);
    let mut results = serde_json::Map::new();
    results.insert("subset".into(), json!(subset));
    results.insert("polynomial".into(), json!(poly));
    results.insert("polynomial_text".into(), json!(poly.to_string()));
    results.insert("value_at_1".into(), json!(at_one.to_string()));
    results.insert("descent_count".into(), json!(descents));
    if let Some(q) = q {
        results.insert("q".into(), json!(q));
        results.insert("value_at_q".into(), json!(poly.evaluate(q)?.to_string()));
    }
    let presentation = match presentation_report(&rs, subset) {
        Ok(p) => serde_json::to_value(p).expect("presentation serializes"),
        Err(Error::NotAdmissible { witness, .. }) => {
            json!({ "status": "not admissible", "witness": witness })
        }
        Err(e) => return Err(e.into()),
    };
    results.insert("presentation".into(), presentation);

    let mut report = Report::new(&parsed, "steinberg", Value::Object(results));
    let cross = if at_one == descents as i128 {
        Verdict::pass(1)
    } else {
        Verdict::fail(
            1,
            Counterexample::new(format!(
                "value at 1 is {at_one}, descent count is {descents}"
            ))
            .subset(subset),
        )
    };
    report.stamp("descent_cross_check", cross);
    let nonneg = if poly.has_nonnegative_coeffs() {
        Verdict::pass(poly.coeffs().len())
    } else {
        Verdict::fail(
            poly.coeffs().len(),
            Counterexample::new("negative coefficient").subset(subset),
        )
    };
    report.stamp("nonnegative_coefficients", nonneg);
    Ok(report)
}

/// The double cosets `W_{I1}\W/W_{I2}` with minimal representatives.
pub fn cmd_cosets(spec: &str, left: &str, right: &str) -> Result<Report, CommandError> {
    let (parsed, rs) = parse_spec(spec)?;
    let left = Subset::parse(left, rs.rank())?;
    let right = Subset::parse(right, rs.rank())?;
    let group = WeylGroup::generate(&rs)?;
    let table = group.double_cosets(left, right);
    let classes: Vec<Value> = table
        .classes()
        .iter()
        .map(|c| {
            let rep = group.element(c.representative);
            json!({
                "representative": rep.word_labels(),
                "length": rep.length(),
                "size": c.size,
            })
        })
        .collect();
    let results = json!({
        "left": left,
        "right": right,
        "weyl_order": group.order(),
        "count": table.len(),
        "classes": classes,
    });
    let mut report = Report::new(&parsed, "cosets", results);
    let total: usize = table.sizes().iter().sum();
    report.stamp(
        "sizes_sum_to_order",
        if total == group.order() {
            Verdict::pass(table.len())
        } else {
            Verdict::fail(
                table.len(),
                Counterexample::new(format!("sizes sum to {total}")),
            )
        },
    );
    let unique = table
        .classes()
        .iter()
        .find(|c| c.minimal_length_count != 1)
        .map(|c| {
            Counterexample::new("minimal representative not unique")
                .element(group.element(c.representative).word_labels())
        });
    report.stamp(
        "unique_minimal_representatives",
        Verdict {
            checked: table.len(),
            counterexample: unique,
        },
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn info_counts() {
        let r = cmd_info("A2").unwrap();
        assert_eq!(r.results["num_positive_roots"], 3);
        assert_eq!(r.results["weyl_order"], "6");
        let r = cmd_info("a1").unwrap();
        assert_eq!(r.results["num_positive_roots"], 1);
        assert_eq!(r.results["weyl_order"], "2");
        assert_eq!(cmd_info("Q9").unwrap_err().code, ExitCode::Usage);
    }

    #[test]
    fn admissible_lists() {
        let r = cmd_admissible("B2").unwrap();
        assert_eq!(r.results["admissible"], json!([[], [1], [2]]));
        assert_eq!(r.results["inadmissible"][0]["witness_text"], "a1+2a2");
        let r = cmd_admissible("A3").unwrap();
        assert_eq!(r.results["admissible"].as_array().unwrap().len(), 8);
        let r = cmd_admissible("G2").unwrap();
        assert_eq!(r.results["inadmissible"][0]["witness_text"], "3a1+2a2");
        assert!(r.all_passed());
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(
            cmd_verify("A2", Which::All).unwrap().exit_code(),
            ExitCode::Pass
        );
        assert_eq!(
            cmd_verify("F4", Which::Closure).unwrap().exit_code(),
            ExitCode::Pass
        );
        assert_eq!(
            cmd_verify("E8", Which::Psi).unwrap_err().code,
            ExitCode::ResourceCap
        );
    }

    #[test]
    fn steinberg_reports() {
        let r = cmd_steinberg("A2", "{}", Some(2)).unwrap();
        assert_eq!(r.results["polynomial_text"], "q^3");
        assert_eq!(r.results["value_at_q"], "8");
        let r = cmd_steinberg("A2", "1", None).unwrap();
        assert_eq!(r.results["polynomial_text"], "q + q^2");
        assert_eq!(r.results["descent_count"], 2);
        let r = cmd_steinberg("B2", "1,2", None).unwrap();
        assert_eq!(r.results["presentation"]["status"], "not admissible");
        assert_eq!(r.exit_code(), ExitCode::Pass);
    }

    #[test]
    fn coset_reports() {
        assert_eq!(cmd_cosets("A2", "1", "2").unwrap().results["count"], 2);
        assert_eq!(cmd_cosets("B3", "{}", "{}").unwrap().results["count"], 48);
        assert_eq!(cmd_cosets("B3", "all", "all").unwrap().results["count"], 1);
        assert_eq!(cmd_cosets("A2", "3", "").unwrap_err().code, ExitCode::Usage);
    }

    #[test]
    fn renderings() {
        let r = cmd_cosets("A2", "1", "2").unwrap();
        assert!(r.to_tsv().contains("results.count\t2\n"));
        let text = r.to_text();
        assert!(text.starts_with("parahoric "));
        assert!(text.contains("PASS sizes_sum_to_order"));
    }
}
