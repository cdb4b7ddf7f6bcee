use std::fmt::Write as _;

use serde::Serialize;

use hopfres::classify::{
    classify, params_a, params_b, params_h, validate_character_a, validate_character_b, validate_character_h,
    Asymmetry,
};
use hopfres::complexes::{report, CohomologyReport, Cz2Character, Mode, ReportInput};
use hopfres::ncalg::{
    presentation_a, presentation_b, presentation_h, run_glued_embedding, run_hopf, run_resolution_complex,
    run_yd_colinearity, GluedVariant, Presentation, Status, SuiteStatus, VerificationReport, YdVariant,
};
use hopfres::{Qi, QiMatrix};

use crate::input::CharacterFile;

pub const OK: u8 = 0;
pub const FAILED: u8 = 1;
pub const INPUT: u8 = 2;
pub const UNDECIDED: u8 = 3;

/// What one run prints, in both renderings, and its exit code.
pub struct Outcome {
    pub code: u8,
    pub text: String,
    pub json: String,
}

pub type RunResult = Result<Outcome, String>;

fn err(e: hopfres::Error) -> String {
    e.to_string()
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Algebra {
    B,
    A,
    H,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CohomologyAlgebra {
    B,
    A,
    H,
    Cz2,
}

pub fn run_classify(f: &QiMatrix) -> RunResult {
    let c = classify(f).map_err(err)?;
    let asym = match c.asymmetry {
        Asymmetry::Yes => "yes",
        Asymmetry::No => "no",
        Asymmetry::UnknownNonDiagonalizable => "unknown (not diagonalizable)",
    };
    let text = format!(
        "n: {}\ntr(F): {}\ntr(F^-1): {}\nP: {}\nnormalizable: {}\ngeneric: {}\nasymmetry: {asym}\n",
        c.n, c.trace_f, c.trace_finv, c.p, c.normalizable, c.generic
    );
    Ok(Outcome { code: OK, text, json: to_json(&c) })
}

fn character_input(algebra: Algebra, param: &QiMatrix, ch: Option<&CharacterFile>) -> Result<ReportInput, String> {
    let n = param.rows();
    let m = ch.map(|c| c.matrix.clone()).unwrap_or_else(|| QiMatrix::identity(n));
    Ok(match algebra {
        Algebra::H => ReportInput::H(validate_character_h(param, &m).map_err(err)?),
        Algebra::B => ReportInput::B(validate_character_b(param, &m).map_err(err)?),
        Algebra::A => {
            let g = ch.and_then(|c| c.g.clone()).unwrap_or_else(Qi::one);
            ReportInput::A(validate_character_a(param, &m, &g).map_err(err)?)
        }
    })
}

pub fn run_character(algebra: Algebra, param: &QiMatrix, ch: &CharacterFile) -> RunResult {
    let input = character_input(algebra, param, Some(ch))?;
    let (derived, params) = match &input {
        ReportInput::H(c) => (Some(c.t.clone()), to_json(&params_h(c))),
        ReportInput::B(c) => (None, to_json(&params_b(c))),
        ReportInput::A(c) => (None, to_json(&params_a(c))),
        _ => unreachable!("matrix algebras only"),
    };
    let mut text = String::from("character: valid\n");
    if let Some(t) = &derived {
        write!(text, "T = S^-t:\n{t}").unwrap();
    }
    writeln!(text, "params: {}", params_line(&params)).unwrap();
    let json = match derived {
        Some(t) => format!("{{\"valid\":true,\"T\":{},\"params\":{params}}}", to_json(&t)),
        None => format!("{{\"valid\":true,\"params\":{params}}}"),
    };
    Ok(Outcome { code: OK, text, json })
}

/// `{"p":1,"d":3}` → `p=1 d=3`, keeping field order.
fn params_line(json: &str) -> String {
    let inner = json.trim_start_matches('{').trim_end_matches('}');
    if inner.is_empty() {
        return "none".into();
    }
    inner.split(',').map(|kv| kv.replacen(':', "=", 1).replace('"', "")).collect::<Vec<_>>().join(" ")
}

fn render_report(r: &CohomologyReport) -> Outcome {
    let dims = |v: &[String]| v.join(" ");
    let mut text = String::new();
    let len = r.dims_by_rank.as_ref().map(Vec::len).or(r.dims_by_formula.as_ref().map(Vec::len)).unwrap_or(0);
    if let Some(d) = &r.dims_by_rank {
        writeln!(text, "rank:    {}", dims(&d.iter().map(|x| x.to_string()).collect::<Vec<_>>())).unwrap();
    }
    if let Some(d) = &r.dims_by_formula {
        writeln!(text, "formula: {}", dims(&d.iter().map(|x| x.to_string()).collect::<Vec<_>>())).unwrap();
    }
    writeln!(text, "H^k = 0 for k >= {len}").unwrap();
    writeln!(text, "params: {}", params_line(&to_json(&r.params))).unwrap();
    writeln!(text, "agree: {}", r.agree).unwrap();
    for w in &r.warnings {
        writeln!(text, "warning: {w}").unwrap();
    }
    Outcome { code: if r.agree { OK } else { FAILED }, text, json: to_json(r) }
}

pub fn run_cohomology(algebra: Algebra, param: &QiMatrix, ch: Option<&CharacterFile>, mode: Mode) -> RunResult {
    let input = character_input(algebra, param, ch)?;
    Ok(render_report(&report(&input, mode).map_err(err)?))
}

pub fn run_cz2(tau: Cz2Character, mode: Mode) -> RunResult {
    Ok(render_report(&report(&ReportInput::Cz2(tau), mode).map_err(err)?))
}

pub fn run_bialgebra(algebra: Algebra, param: &QiMatrix, mode: Mode) -> RunResult {
    let input = match algebra {
        Algebra::H => ReportInput::BialgebraH(param.clone()),
        Algebra::A => ReportInput::BialgebraA(param.clone()),
        Algebra::B => return Err("bialgebra cohomology is available for h and a".into()),
    };
    Ok(render_report(&report(&input, mode).map_err(err)?))
}

#[derive(Debug, Clone, Copy)]
pub enum Suite {
    Complex(Algebra),
    Hopf(Algebra),
    Glued,
    Yd,
}

impl Suite {
    pub fn default_bound(self) -> usize {
        match self {
            Suite::Complex(_) => 3,
            Suite::Hopf(_) | Suite::Glued => 4,
            Suite::Yd => 6,
        }
    }
}

fn presentation(algebra: Algebra, param: &QiMatrix) -> Result<Presentation, String> {
    match algebra {
        Algebra::B => presentation_b(param),
        Algebra::A => presentation_a(param),
        Algebra::H => presentation_h(param),
    }
    .map_err(err)
}

/// Check labels grouped by the identity they come from, e.g. `d1*d2[0,3]` → `d1*d2`.
fn group_of(label: &str) -> &str {
    if let Some((head, _)) = label.split_once(' ') {
        head
    } else if let Some(i) = label.find("(r") {
        &label[..i]
    } else {
        label.split('[').next().unwrap_or(label)
    }
}

fn render_verification(r: &VerificationReport, certificates: bool) -> Outcome {
    let status = r.status();
    let mut text = format!("suite: {}\nbound: {}\nstatus: {}\n", r.suite, r.bound, to_json(&status).trim_matches('"'));
    let mut groups: Vec<(&str, usize, usize)> = Vec::new();
    for item in &r.items {
        let g = group_of(&item.label);
        let member = usize::from(item.outcome.is_member());
        match groups.iter_mut().find(|(name, ..)| *name == g) {
            Some(entry) => {
                entry.1 += 1;
                entry.2 += member;
            }
            None => groups.push((g, 1, member)),
        }
    }
    for (g, total, members) in &groups {
        writeln!(text, "  {g}: {members}/{total} certified").unwrap();
    }
    writeln!(text, "certificate terms: {}", r.certificate_terms()).unwrap();
    for item in r.items.iter().filter(|i| !i.outcome.is_member()) {
        let s = match item.outcome.status() {
            Status::NotMember => "not in the ideal",
            _ => "undecided at this bound",
        };
        writeln!(text, "  {}: {s}", item.label).unwrap();
    }
    let code = match status {
        SuiteStatus::Passed => OK,
        SuiteStatus::Failed => FAILED,
        SuiteStatus::Undecided => UNDECIDED,
    };
    Outcome { code, text, json: r.to_json(certificates).to_string() }
}

pub fn run_verify(suite: Suite, param: &QiMatrix, bound: usize, certificates: bool) -> RunResult {
    let report = match suite {
        Suite::Complex(a) => run_resolution_complex(&presentation(a, param)?, bound),
        Suite::Hopf(a) => run_hopf(&presentation(a, param)?, bound),
        Suite::Glued => run_glued_embedding(param, bound, GluedVariant::Standard),
        Suite::Yd => run_yd_colinearity(param, bound, YdVariant::Standard),
    }
    .map_err(err)?;
    Ok(render_verification(&report, certificates))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups() {
        assert_eq!(group_of("d1*d2[0,3]"), "d1*d2");
        assert_eq!(group_of("counit*d1[4]"), "counit*d1");
        assert_eq!(group_of("counit(r12)"), "counit");
        assert_eq!(group_of("S(u)*u[0,1]"), "S(u)*u");
        assert_eq!(group_of("Psi2[1,2] b=0 e=3"), "Psi2[1,2]");
        assert_eq!(group_of("S(g)*g"), "S(g)*g");
    }

    #[test]
    fn params_rendering() {
        assert_eq!(params_line(r#"{"p":1,"d":3,"t":2}"#), "p=1 d=3 t=2");
        assert_eq!(params_line("{}"), "none");
    }
}
