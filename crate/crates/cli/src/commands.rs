//! The subcommands, rendered to text or JSON.

use std::fmt::Write as _;

use jonq_core::jonq::base_points_of_degree;
use jonq_core::mu::{classify, degree_sequence, normal_form as normal_form_of};
use jonq_core::ns_lattice::{
    canonical_class, homaloidal_check, jonquieres_profile, ns_pushforward,
};
use jonq_core::parser::{parse_map, MapSource};
use jonq_core::{Error, Result};
use serde::{Deserialize, Serialize};

use crate::batch::{parse_input, run_batch, BatchOutput, EntryDefaults};
use crate::exit;
use crate::report::{build_report, InputEcho, Options, Report};

/// What a command prints and how it exits.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            ..Default::default()
        }
    }

    fn error(e: &Error) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: exit::code(e),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn finish<T: Serialize>(
    result: Result<T>,
    json: bool,
    render: impl FnOnce(&T) -> String,
) -> Outcome {
    match result {
        Ok(v) if json => Outcome::ok(to_json(&v)),
        Ok(v) => Outcome::ok(render(&v)),
        Err(e) => Outcome::error(&e),
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".into(), ToString::to_string)
}

fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:width$}  {v}");
    }
    out
}

fn mismatch_note(r: &Report) -> Option<String> {
    match (r.consistent, r.mu_formula, r.mu_oracle) {
        (false, Some(a), Some(b)) => Some(format!(
            "error: formula gives mu = {a}, degree growth gives mu = {b}\n"
        )),
        _ => None,
    }
}

fn with_mismatch(mut out: Outcome, r: &Report) -> Outcome {
    if let Some(msg) = mismatch_note(r) {
        out.stderr = msg;
        out.code = exit::MISMATCH;
    }
    out
}

pub fn render_report(r: &Report) -> String {
    let mut rows = vec![
        ("input", r.input.fiber.clone()),
        ("canonical", r.canonical.clone()),
        ("subgroup", r.subgroup.clone()),
        ("degree", r.degree.to_string()),
        ("trace", r.trace.clone()),
        ("det", r.det.clone()),
        ("discriminant", r.discriminant.clone()),
    ];
    if let Some(base) = &r.input.base {
        rows.insert(1, ("base", base.clone()));
    }
    if let Some(bb) = &r.bb {
        let kind = if bb.is_constant {
            "constant"
        } else {
            "non-constant"
        };
        rows.push(("baum-bott", format!("{} ({kind})", bb.value)));
    }
    rows.push(("case", opt(&r.case_tag)));
    if let Some(w) = &r.witnesses {
        let mut parts = Vec::new();
        for (name, v) in [
            ("deg Omega", w.omega),
            ("deg P", w.p_f),
            ("deg S", w.s_f),
            ("deg T", w.t_f),
            ("deg delta", w.delta),
            ("height a", w.ratio_height),
        ] {
            if let Some(v) = v {
                parts.push(format!("{name} = {v}"));
            }
        }
        if let Some(p) = w.p {
            parts.push(format!("p = {p}"));
        }
        rows.push(("witnesses", parts.join(", ")));
    }
    if let Some(g) = &r.normal_form {
        rows.push(("normal form", g.clone()));
    }
    rows.push(("mu (formula)", opt(&r.mu_formula)));
    rows.push(("mu (oracle)", opt(&r.mu_oracle)));
    if !r.degree_sequence.is_empty() {
        let degs: Vec<String> = r.degree_sequence.iter().map(u64::to_string).collect();
        rows.push(("degrees", degs.join(" ")));
    }
    rows.push(("consistent", if r.consistent { "yes" } else { "NO" }.into()));
    for note in &r.notes {
        rows.push(("note", note.clone()));
    }
    if let Some(t) = &r.timings_ms {
        rows.push((
            "timings (ms)",
            format!(
                "parse {:.3}, classify {:.3}, oracle {:.3}, total {:.3}",
                t.parse, t.classify, t.oracle, t.total
            ),
        ));
    }
    table(&rows)
}

pub fn cmd_classify(src: &MapSource, opts: &Options, json: bool) -> Outcome {
    match build_report(src, opts) {
        Ok(r) => {
            let out = Outcome::ok(if json { to_json(&r) } else { render_report(&r) });
            with_mismatch(out, &r)
        }
        Err(e) => Outcome::error(&e),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuOutput {
    pub input: InputEcho,
    pub case_tag: Option<String>,
    pub mu: Option<u64>,
    pub mu_formula: Option<u64>,
    pub mu_oracle: Option<u64>,
    pub consistent: bool,
}

pub fn cmd_mu(src: &MapSource, opts: &Options, json: bool) -> Outcome {
    let r = match build_report(src, opts) {
        Ok(r) => r,
        Err(e) => return Outcome::error(&e),
    };
    let m = MuOutput {
        input: r.input.clone(),
        case_tag: r.case_tag.clone(),
        mu: r.mu(),
        mu_formula: r.mu_formula,
        mu_oracle: r.mu_oracle,
        consistent: r.consistent,
    };
    let out = Outcome::ok(if json {
        to_json(&m)
    } else {
        format!("{}\n", opt(&m.mu))
    });
    with_mismatch(out, &r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IterateRow {
    pub k: usize,
    pub degree: u64,
    pub base_points: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IterateOutput {
    pub input: InputEcho,
    pub rows: Vec<IterateRow>,
}

pub fn cmd_iterate(src: &MapSource, k: usize, json: bool) -> Outcome {
    let result = (|| {
        if k == 0 {
            return Err(Error::Domain("iterate needs k >= 1".into()));
        }
        let f = parse_map(src)?;
        let seq = degree_sequence(&f, k);
        let rows = seq
            .degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| IterateRow {
                k: i + 1,
                degree: d,
                base_points: base_points_of_degree(d),
            })
            .collect();
        Ok(IterateOutput {
            input: src.into(),
            rows,
        })
    })();
    finish(result, json, |out| {
        let mut s = String::from("k\tdeg\tbase-points\n");
        for r in &out.rows {
            let _ = writeln!(s, "{}\t{}\t{}", r.k, r.degree, r.base_points);
        }
        s
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalFormOutput {
    pub input: InputEcho,
    pub case_tag: String,
    pub normal_form: String,
}

pub fn cmd_normal_form(src: &MapSource, json: bool) -> Outcome {
    let result = (|| {
        let f = parse_map(src)?;
        let verdict = classify(&f)?;
        let g = normal_form_of(&verdict)?;
        Ok(NormalFormOutput {
            input: src.into(),
            case_tag: verdict.case.to_string(),
            normal_form: g.to_string_in(&src.var),
        })
    })();
    finish(result, json, |out| {
        table(&[
            ("case", out.case_tag.clone()),
            ("normal form", out.normal_form.clone()),
        ])
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NsOutput {
    pub d: u32,
    /// Row-major matrix in the basis `(line, e_0, ..., e_{2d-2})`.
    pub rows: Vec<Vec<i64>>,
    pub preserves_form: bool,
    pub fixes_canonical_class: bool,
    pub canonical_class: Vec<i64>,
    pub jonquieres_profile: Vec<i64>,
    pub homaloidal: bool,
}

pub fn cmd_ns_matrix(d: u32, json: bool) -> Outcome {
    let result = ns_pushforward(d).map(|m| {
        let profile = jonquieres_profile(d);
        NsOutput {
            d,
            rows: m.rows(),
            preserves_form: m.preserves_form(),
            fixes_canonical_class: m.fixes_canonical_class(),
            canonical_class: canonical_class(d),
            homaloidal: homaloidal_check(d, &profile),
            jonquieres_profile: profile,
        }
    });
    finish(result, json, |out| {
        let width = out
            .rows
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        let mut s = String::new();
        for row in &out.rows {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            let _ = writeln!(s, "{}", cells.join(" "));
        }
        let yes = |b: bool| if b { "yes" } else { "no" };
        s.push_str(&table(&[
            ("preserves form", yes(out.preserves_form).into()),
            ("fixes K", yes(out.fixes_canonical_class).into()),
            ("homaloidal", yes(out.homaloidal).into()),
        ]));
        s
    })
}

pub fn render_batch(out: &BatchOutput) -> String {
    let mut s = String::new();
    for r in &out.records {
        match (&r.report, &r.error) {
            (Some(rep), _) => {
                let flag = if rep.consistent { "" } else { "  MISMATCH" };
                let _ = writeln!(
                    s,
                    "#{}\t{}\tmu={}\t{}{flag}",
                    r.index,
                    opt(&rep.case_tag),
                    opt(&rep.mu()),
                    rep.canonical
                );
            }
            (None, Some(e)) => {
                let _ = writeln!(s, "#{}\terror\t{}", r.index, e.message);
            }
            (None, None) => {}
        }
    }
    let sm = &out.summary;
    let cases: Vec<String> = sm.cases.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    let _ = writeln!(
        s,
        "total {}, reports {}, errors {}, mismatches {}",
        sm.total, sm.reports, sm.errors, sm.mismatches
    );
    let _ = writeln!(s, "cases {{{}}}", cases.join(", "));
    s
}

pub fn cmd_batch(
    text: &str,
    defaults: &EntryDefaults,
    opts: &Options,
    jobs: usize,
    strict: bool,
    json: bool,
) -> Outcome {
    let entries = match parse_input(text) {
        Ok(e) => e,
        Err(e) => return Outcome::error(&e),
    };
    let out = run_batch(&entries, defaults, opts, jobs);
    Outcome {
        stdout: if json {
            to_json(&out)
        } else {
            render_batch(&out)
        },
        stderr: String::new(),
        code: out.exit_code(strict),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_exit_codes() {
        let opts = Options::default();
        assert_eq!(
            cmd_classify(&MapSource::new("[[y,2*y^8],[y,1]]"), &opts, false).code,
            0
        );
        let singular = cmd_classify(&MapSource::new("[[y,0],[y,0]]"), &opts, false);
        assert_eq!(singular.code, exit::DOMAIN);
        assert!(singular.stderr.contains("singular"));
        assert_eq!(
            cmd_classify(&MapSource::new("[[y,"), &opts, true).code,
            exit::PARSE
        );
    }

    #[test]
    fn iterate_table() {
        let out = cmd_iterate(&MapSource::new("[[(1-y)*y, 0],[0, 1]]"), 5, false);
        assert_eq!(
            out.stdout,
            "k\tdeg\tbase-points\n1\t3\t5\n2\t5\t9\n3\t7\t13\n4\t9\t17\n5\t11\t21\n"
        );
        assert_eq!(
            cmd_iterate(&MapSource::new("[[y, 0],[0, 1]]"), 0, false).code,
            exit::DOMAIN
        );
    }

    #[test]
    fn normal_form_of_elliptic_is_a_domain_error() {
        assert_eq!(
            cmd_normal_form(&MapSource::new("[[2,0],[0,1]]"), false).code,
            exit::DOMAIN
        );
        let out = cmd_normal_form(&MapSource::new("[[-y^2, y],[1, 0]]"), true);
        assert_eq!(out.code, 0);
        let parsed: NormalFormOutput = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(parsed.case_tag, "Case2a");
    }

    #[test]
    fn ns_matrix_checks() {
        let out = cmd_ns_matrix(3, true);
        let parsed: NsOutput = serde_json::from_str(&out.stdout).unwrap();
        assert!(parsed.preserves_form && parsed.fixes_canonical_class && parsed.homaloidal);
        assert_eq!(parsed.rows.len(), 6);
        assert_eq!(cmd_ns_matrix(1, false).code, exit::DOMAIN);
    }
}
