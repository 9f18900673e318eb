//! Per-map reports.

use std::time::Instant;

use jonq_core::jonq::plane_degree;
use jonq_core::mu::{
    classify_with, mu_non_base_wandering, mu_oracle_with_degrees, CaseTag, Method, Witnesses,
};
use jonq_core::parser::{parse_map, MapSource};
use jonq_core::{QMap, Result};
use serde::{Deserialize, Serialize};

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct Options {
    pub method: Method,
    pub kmax: usize,
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            method: Method::Both,
            kmax: jonq_core::mu::DEFAULT_KMAX,
            timings: false,
        }
    }
}

/// The map text as given.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub fiber: String,
    pub base: Option<String>,
    pub var: String,
}

impl From<&MapSource> for InputEcho {
    fn from(src: &MapSource) -> Self {
        InputEcho {
            fiber: src.fiber.clone(),
            base: src.base.clone(),
            var: src.var.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaumBott {
    pub value: String,
    pub is_constant: bool,
}

/// Degrees of the classification witnesses. Fields that do not apply to the
/// case are null.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDegrees {
    pub omega: Option<usize>,
    pub p_f: Option<usize>,
    pub s_f: Option<usize>,
    pub t_f: Option<usize>,
    pub p: Option<u32>,
    pub delta: Option<usize>,
    pub ratio_height: Option<usize>,
}

impl From<&Witnesses> for WitnessDegrees {
    fn from(w: &Witnesses) -> Self {
        match w {
            Witnesses::Roots { delta, ratio } => WitnessDegrees {
                delta: Some(delta.deg0()),
                ratio_height: Some(ratio.height()),
                ..Default::default()
            },
            Witnesses::Gcd {
                omega,
                p_f,
                s_f,
                t_f,
                p,
            } => WitnessDegrees {
                omega: Some(omega.deg0()),
                p_f: Some(p_f.deg0()),
                s_f: Some(s_f.deg0()),
                t_f: t_f.as_ref().map(|t| t.deg0()),
                p: *p,
                ..Default::default()
            },
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub parse: f64,
    pub classify: f64,
    pub oracle: f64,
    pub total: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub input: InputEcho,
    pub canonical: String,
    pub subgroup: String,
    pub degree: u64,
    pub trace: String,
    pub det: String,
    pub discriminant: String,
    pub bb: Option<BaumBott>,
    pub case_tag: Option<String>,
    pub witnesses: Option<WitnessDegrees>,
    pub normal_form: Option<String>,
    pub mu_formula: Option<u64>,
    pub mu_oracle: Option<u64>,
    /// `deg(f^k)` for `k = 1..=kmax`; empty when the oracle was not run.
    pub degree_sequence: Vec<u64>,
    pub consistent: bool,
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<Timings>,
}

impl Report {
    /// The formula value when there is one, else the oracle value.
    pub fn mu(&self) -> Option<u64> {
        self.mu_formula.or(self.mu_oracle)
    }
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Parses `src` and builds its report. A formula/oracle disagreement is
/// recorded in `consistent`, not returned as an error.
pub fn build_report(src: &MapSource, opts: &Options) -> Result<Report> {
    let start = Instant::now();
    let f = parse_map(src)?;
    let parse_ms = ms(start);
    let mut report = describe(src, &f);
    let mut timings = Timings {
        parse: parse_ms,
        ..Default::default()
    };
    let want_formula = !matches!(opts.method, Method::Oracle);
    let want_oracle = !matches!(opts.method, Method::Formula);

    let t = Instant::now();
    if f.is_j0() {
        let verdict = classify_with(&f, opts.kmax)?;
        report.case_tag = Some(verdict.case.to_string());
        report.witnesses = verdict.witnesses.as_ref().map(WitnessDegrees::from);
        report.normal_form = verdict
            .normal_form
            .as_ref()
            .map(|g| g.to_string_in(&src.var));
        if verdict.case == CaseTag::Unresolved {
            report
                .notes
                .push("no closed form applies; mu is measured by degree growth".into());
            report.mu_oracle = verdict.mu;
        } else if want_formula {
            report.mu_formula = verdict.mu;
        }
    } else {
        match f.base().order(jonq_core::mu::MOEBIUS_ORDER_MAX) {
            Some(l) => {
                report.notes.push(format!(
                    "base action of order {l}; mu computed through f^{l}"
                ));
                if want_formula {
                    report.mu_formula = Some(mu_non_base_wandering(&f, Method::Formula)?);
                }
            }
            None => report.notes.push("base-wandering: no closed form".into()),
        }
    }
    timings.classify = ms(t);

    let t = Instant::now();
    if want_oracle {
        let (mu, mut degrees) = mu_oracle_with_degrees(&f, opts.kmax, None)?;
        degrees.truncate(opts.kmax);
        report.mu_oracle = Some(mu);
        report.degree_sequence = degrees;
    }
    timings.oracle = ms(t);

    report.consistent = match (report.mu_formula, report.mu_oracle) {
        (Some(a), Some(b)) => a == b,
        _ => true,
    };
    timings.total = ms(start);
    if opts.timings {
        report.timings_ms = Some(timings);
    }
    Ok(report)
}

/// Method-independent part of the report.
fn describe(src: &MapSource, f: &QMap) -> Report {
    let var = &src.var;
    let m = f.fiber();
    let bb = f.baum_bott().ok().map(|bb| BaumBott {
        value: bb.to_string_in(var),
        is_constant: bb.is_constant(),
    });
    Report {
        input: src.into(),
        canonical: f.to_string_in(var),
        subgroup: f.subgroup().as_str().into(),
        degree: plane_degree(f),
        trace: m.trace().to_string_in(var),
        det: m.det().to_string_in(var),
        discriminant: m.discriminant().to_string_in(var),
        bb,
        case_tag: None,
        witnesses: None,
        normal_form: None,
        mu_formula: None,
        mu_oracle: None,
        degree_sequence: Vec::new(),
        consistent: true,
        notes: Vec::new(),
        timings_ms: None,
    }
}
