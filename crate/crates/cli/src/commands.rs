use std::fs;
use std::path::Path;

use revgrob::cancellativity::{
    cancellative_after_completion, gcomplete_obstruction, witness_search, Cancellation,
    Obstruction, Side,
};
use revgrob::groebner::g_complete;
use revgrob::presentation::{oracle_equivalent, PseudolengthVerdict};
use revgrob::reversing::{
    export_diagram, r_complete, r_completeness_check, reverse_first, reverse_to_empty,
    terminal_forms, Certification, Completeness,
};
use revgrob::{
    direct_product, Outcome, Presentation, PresentationFile, PseudolengthSpec, SearchBudget, Word,
};
use serde_json::{json, Value};

use crate::report::{self, presentation_json, Report, Status};
use crate::CliError;

pub fn load(path: &Path) -> Result<PresentationFile, CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    PresentationFile::parse(&text)
        .map_err(|e| CliError::Input(format!("{}:{}: {}", path.display(), e.line, e.kind)))
}

fn parse_word(p: &Presentation, text: &str) -> Result<Word, CliError> {
    p.alphabet()
        .parse_word(text)
        .map_err(|e| CliError::Input(format!("word `{text}`: {e}")))
}

/// The declared pseudolength, plain length when none is declared, or no
/// certificate at all.
fn certificate(f: &PresentationFile, uncertified: bool) -> Result<Certification, CliError> {
    if uncertified {
        return Ok(Certification::Uncertified);
    }
    let spec = f
        .pseudolength
        .clone()
        .unwrap_or(PseudolengthSpec::PlainLength);
    if let PseudolengthVerdict::Invalid(r) = spec.check(&f.presentation) {
        let a = f.presentation.alphabet();
        return Err(CliError::Input(format!(
            "pseudolength `{}` fails on relation {}; rerun with --uncertified",
            spec.display(a),
            r.display(a)
        )));
    }
    Ok(Certification::Certified(spec))
}

fn certification_lines(rep: &mut Report, cert: &Certification, p: &Presentation) {
    match cert {
        Certification::Certified(spec) => {
            rep.field("certified", true);
            rep.field("certificate", spec.display(p.alphabet()));
            rep.line(format!(
                "certified by pseudolength: {}",
                spec.display(p.alphabet())
            ));
        }
        Certification::Uncertified => {
            rep.field("certified", false);
            rep.field("certificate", Value::Null);
            rep.line("UNCERTIFIED: no pseudolength certificate; the criterion's hypothesis is not checked");
        }
    }
}

pub fn info(f: &PresentationFile) -> Report {
    let p = &f.presentation;
    let a = p.alphabet();
    let mut rep = Report::new("info", Status::Definite, None);
    rep.field("presentation", presentation_json(p));
    rep.line(format!("generators: {}", a.names().join(" < ")));
    rep.line(format!("relations: {}", p.len()));
    for r in p.relations() {
        rep.line(format!("  {}", r.display(a)));
    }
    let leading: Vec<String> = p
        .relations()
        .iter()
        .map(|r| a.format_word(r.lhs()))
        .collect();
    let length_preserving = p
        .relations()
        .iter()
        .filter(|r| r.lhs().len() == r.rhs().len())
        .count();
    rep.field(
        "orientation",
        json!({
            "leading_words": leading,
            "length_preserving": length_preserving,
            "length_decreasing": p.len() - length_preserving,
        }),
    );
    rep.line(format!(
        "orientation: leading word first; {} length-preserving, {} length-decreasing",
        length_preserving,
        p.len() - length_preserving
    ));
    let plain = PseudolengthSpec::PlainLength.check(p);
    match &plain {
        PseudolengthVerdict::Valid => {
            rep.line("homogeneous: yes (plain length)");
            rep.field(
                "homogeneous",
                json!({"valid": true, "failing_relation": Value::Null}),
            );
        }
        PseudolengthVerdict::Invalid(r) => {
            rep.line(format!(
                "homogeneous: no (plain length fails on {})",
                r.display(a)
            ));
            rep.field(
                "homogeneous",
                json!({"valid": false, "failing_relation": r.display(a)}),
            );
        }
    }
    match &f.pseudolength {
        Some(spec) if *spec != PseudolengthSpec::PlainLength => {
            let name = spec.display(a);
            match spec.check(p) {
                PseudolengthVerdict::Valid => {
                    rep.line(format!("pseudolength {name}: valid"));
                    rep.field(
                        "pseudolength",
                        json!({"spec": name, "valid": true, "failing_relation": Value::Null}),
                    );
                }
                PseudolengthVerdict::Invalid(r) => {
                    rep.line(format!("pseudolength {name}: invalid on {}", r.display(a)));
                    rep.field(
                        "pseudolength",
                        json!({"spec": name, "valid": false, "failing_relation": r.display(a)}),
                    );
                }
            }
        }
        _ => {
            rep.field("pseudolength", Value::Null);
        }
    }
    rep
}

pub fn gcomplete(f: &PresentationFile, budget: SearchBudget, log: bool) -> Report {
    let p = &f.presentation;
    let a = p.alphabet();
    let run = g_complete(p, &budget);
    let mut rep = Report::new("gcomplete", Status::of_completion(run.status), Some(budget));
    let basis: Vec<String> = report::relations(a, run.system.relations());
    let added = report::relations(a, run.added());
    let lines: Vec<String> = run.log.iter().map(|e| e.display(a)).collect();
    rep.line(format!("basis ({} relations):", basis.len()));
    for r in &basis {
        rep.line(format!("  {r}"));
    }
    rep.line(format!("added: {}", added.len()));
    if run.skipped > 0 {
        rep.line(format!("skipped over max-len: {}", run.skipped));
    }
    if log {
        rep.line("log:");
        for l in &lines {
            rep.line(format!("  {l}"));
        }
    }
    rep.field("basis", basis);
    rep.field("added", added);
    rep.field("log", lines);
    rep.field("skipped", run.skipped);
    rep
}

pub fn rcomplete(
    f: &PresentationFile,
    budget: SearchBudget,
    uncertified: bool,
    log: bool,
) -> Result<Report, CliError> {
    let p = &f.presentation;
    let a = p.alphabet();
    let cert = certificate(f, uncertified)?;
    let run = r_complete(p, &cert, &budget).map_err(|e| CliError::Input(e.to_string()))?;
    let mut rep = Report::new("rcomplete", Status::of_completion(run.status), Some(budget));
    certification_lines(&mut rep, &cert, p);
    let added = report::relations(a, run.added());
    let lines: Vec<String> = run.log.iter().map(|e| e.display(a)).collect();
    let final_rels = report::relations(a, run.presentation.relations());
    rep.line(format!("presentation ({} relations):", final_rels.len()));
    for r in &final_rels {
        rep.line(format!("  {r}"));
    }
    rep.line(format!("added: {}", added.len()));
    for r in &added {
        rep.line(format!("  {r}"));
    }
    if !run.skipped.is_empty() {
        rep.line(format!("skipped over max-len: {}", run.skipped.len()));
    }
    if let Some(l) = run.inconclusive {
        rep.line(format!("inconclusive sub-searches: some hit {l}"));
    }
    if log {
        rep.line("log:");
        for l in &lines {
            rep.line(format!("  {l}"));
        }
    }
    let skipped: Vec<Value> = run
        .skipped
        .iter()
        .map(|(su, tv)| json!({"su": report::word(a, su), "tv": report::word(a, tv)}))
        .collect();
    rep.field("relations", final_rels);
    rep.field("added", added);
    rep.field("log", lines);
    rep.field("skipped", skipped);
    rep.field("inconclusive", run.inconclusive.map(|l| l.name()));
    Ok(rep)
}

pub fn rcheck(
    f: &PresentationFile,
    budget: SearchBudget,
    uncertified: bool,
) -> Result<Report, CliError> {
    let p = &f.presentation;
    let a = p.alphabet();
    let cert = certificate(f, uncertified)?;
    let out =
        r_completeness_check(p, &cert, &budget).map_err(|e| CliError::Input(e.to_string()))?;
    let status = match &out {
        Outcome::Definite(Completeness::Complete) => Status::Definite,
        Outcome::Definite(Completeness::Incomplete { .. }) | Outcome::DefiniteNo(()) => {
            Status::DefiniteNo
        }
        Outcome::BudgetExhausted(l) => Status::exhausted(*l),
    };
    let mut rep = Report::new("rcheck", status, Some(budget));
    certification_lines(&mut rep, &cert, p);
    match out {
        Outcome::Definite(Completeness::Incomplete {
            su,
            tv,
            triple: (s, t, r),
        }) => {
            let triple = [a.name(s), a.name(t), a.name(r)];
            rep.line("incomplete");
            rep.line(format!(
                "witness: {} = {}",
                a.format_word(&su),
                a.format_word(&tv)
            ));
            rep.line(format!("from triple: {}", triple.join(",")));
            rep.field("verdict", "incomplete");
            rep.field(
                "witness",
                json!({"su": report::word(a, &su), "tv": report::word(a, &tv), "triple": triple}),
            );
        }
        Outcome::Definite(Completeness::Complete) => {
            rep.line("complete");
            rep.field("verdict", "complete");
            rep.field("witness", Value::Null);
        }
        _ => {
            rep.line("undecided");
            rep.field("verdict", "undecided");
            rep.field("witness", Value::Null);
        }
    }
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Groebner,
    Reversing,
    Oracle,
}

pub fn equiv(
    f: &PresentationFile,
    w1: &str,
    w2: &str,
    method: Method,
    budget: SearchBudget,
) -> Result<Report, CliError> {
    let p = &f.presentation;
    let a = p.alphabet();
    let (u, v) = (parse_word(p, w1)?, parse_word(p, w2)?);
    let words = json!([report::word(a, &u), report::word(a, &v)]);
    let pair = format!("{} ≡ {}", a.show_word(&u), a.show_word(&v));
    let rep = match method {
        Method::Groebner => {
            let run = g_complete(p, &budget);
            let (nu, nv) = (run.system.reduce_word(&u), run.system.reduce_word(&v));
            let complete = run.status.is_complete();
            let (status, verdict) = if nu == nv {
                (Status::Definite, "equal")
            } else if complete {
                (Status::DefiniteNo, "different")
            } else {
                (Status::of_completion(run.status), "undecided")
            };
            let mut rep = Report::new("equiv", status, Some(budget));
            rep.line(format!("{pair}: {verdict}"));
            rep.line(format!(
                "normal forms: {} | {}",
                a.show_word(&nu),
                a.show_word(&nv)
            ));
            rep.line(format!(
                "basis: {} relations, {}",
                run.system.len(),
                if complete { "complete" } else { "truncated" }
            ));
            rep.field("verdict", verdict);
            rep.field(
                "witness",
                json!({
                    "normal_forms": [report::word(a, &nu), report::word(a, &nv)],
                    "basis_complete": complete,
                    "basis_size": run.system.len(),
                }),
            );
            rep
        }
        Method::Reversing => match reverse_to_empty(&u, &v, p, &budget) {
            Outcome::Definite(trace) => {
                let mut rep = Report::new("equiv", Status::Definite, Some(budget));
                rep.line(format!("{pair}: equal"));
                let steps: Vec<String> =
                    trace.steps.iter().map(|(_, w)| a.show_signed(w)).collect();
                rep.line(format!(
                    "trace: {}",
                    std::iter::once(a.show_signed(&trace.start))
                        .chain(steps.iter().cloned())
                        .collect::<Vec<_>>()
                        .join(" → ")
                ));
                rep.field("verdict", "equal");
                rep.field(
                    "witness",
                    json!({"start": report::signed(a, &trace.start), "trace": steps}),
                );
                rep
            }
            Outcome::DefiniteNo(()) => {
                // a failed reversing separates the words only on a complete presentation
                let complete = match certificate(f, false) {
                    Ok(cert) => matches!(
                        r_completeness_check(p, &cert, &budget),
                        Ok(Outcome::Definite(Completeness::Complete))
                    ),
                    Err(_) => false,
                };
                let verdict = if complete { "different" } else { "not-proved" };
                let mut rep = Report::new("equiv", Status::DefiniteNo, Some(budget));
                rep.line(format!("{pair}: {verdict}"));
                if !complete {
                    rep.line("reversing fails, but the presentation is not known to be complete");
                }
                rep.field("verdict", verdict);
                rep.field("witness", json!({"complete": complete}));
                rep
            }
            Outcome::BudgetExhausted(l) => {
                let mut rep = Report::new("equiv", Status::exhausted(l), Some(budget));
                rep.line(format!("{pair}: undecided"));
                rep.field("verdict", "undecided");
                rep.field("witness", Value::Null);
                rep
            }
        },
        Method::Oracle => match oracle_equivalent(p, &u, &v, &budget) {
            Outcome::Definite(d) => {
                let mut rep = Report::new("equiv", Status::Definite, Some(budget));
                let steps: Vec<Value> = d
                    .steps
                    .iter()
                    .map(|s| {
                        json!({
                            "position": s.position,
                            "relation": s.relation + 1,
                            "forward": s.forward,
                            "word": report::word(a, &s.word),
                        })
                    })
                    .collect();
                rep.line(format!("{pair}: equal"));
                let chain: Vec<String> = std::iter::once(a.show_word(&d.start))
                    .chain(d.steps.iter().map(|s| a.show_word(&s.word)))
                    .collect();
                rep.line(format!("derivation: {}", chain.join(" → ")));
                rep.field("verdict", "equal");
                rep.field(
                    "witness",
                    json!({"start": report::word(a, &d.start), "derivation": steps}),
                );
                rep
            }
            Outcome::DefiniteNo(size) => {
                let mut rep = Report::new("equiv", Status::DefiniteNo, Some(budget));
                rep.line(format!(
                    "{pair}: different (class of the first word has {size} elements)"
                ));
                rep.field("verdict", "different");
                rep.field("witness", json!({"class_size": size}));
                rep
            }
            Outcome::BudgetExhausted(l) => {
                let mut rep = Report::new("equiv", Status::exhausted(l), Some(budget));
                rep.line(format!("{pair}: undecided"));
                rep.field("verdict", "undecided");
                rep.field("witness", Value::Null);
                rep
            }
        },
    };
    let mut rep = rep;
    rep.field("method", format!("{method:?}").to_lowercase());
    rep.field("words", words);
    Ok(rep)
}

pub fn reverse(
    f: &PresentationFile,
    text: &str,
    all: bool,
    dot: Option<&Path>,
    budget: SearchBudget,
) -> Result<Report, CliError> {
    let p = &f.presentation;
    let a = p.alphabet();
    let w = a
        .parse_signed_word(text)
        .map_err(|e| CliError::Input(format!("word `{text}`: {e}")))?;
    let (trace, limit) = reverse_first(&w, p, &budget);
    if let Some(path) = dot {
        fs::write(path, export_diagram(&trace, a))
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    let mut rep = if all {
        match terminal_forms(&w, p, &budget) {
            Outcome::Definite(set) => {
                let mut rep = Report::new("reverse", Status::Definite, Some(budget));
                let forms: Vec<String> = set
                    .forms
                    .iter()
                    .map(|t| a.show_signed(&t.u.to_signed().concat(&t.v.inverse())))
                    .collect();
                let stuck: Vec<String> = set.stuck.iter().map(|s| a.show_signed(s)).collect();
                rep.line(format!("terminal forms ({}):", forms.len()));
                for t in &forms {
                    rep.line(format!("  {t}"));
                }
                if !stuck.is_empty() {
                    rep.line(format!("stuck ({}):", stuck.len()));
                    for s in &stuck {
                        rep.line(format!("  {s}"));
                    }
                }
                let pairs: Vec<Value> = set
                    .forms
                    .iter()
                    .map(|t| json!({"u": report::word(a, &t.u), "v": report::word(a, &t.v)}))
                    .collect();
                rep.field("terminal_forms", pairs);
                rep.field(
                    "stuck",
                    set.stuck
                        .iter()
                        .map(|s| report::signed(a, s))
                        .collect::<Vec<_>>(),
                );
                rep
            }
            Outcome::DefiniteNo(()) => unreachable!("terminal_forms has no negative result"),
            Outcome::BudgetExhausted(l) => {
                let mut rep = Report::new("reverse", Status::exhausted(l), Some(budget));
                rep.line("terminal forms: search cut short");
                rep.field("terminal_forms", Value::Null);
                rep.field("stuck", Value::Null);
                rep
            }
        }
    } else {
        let status = limit.map_or(Status::Definite, Status::exhausted);
        let mut rep = Report::new("reverse", status, Some(budget));
        rep.line(format!("start: {}", a.show_signed(&trace.start)));
        for (i, (step, next)) in trace.steps.iter().enumerate() {
            rep.line(format!(
                "  {:>3}. at {}: {}",
                i + 1,
                step.position,
                a.show_signed(next)
            ));
        }
        let end = trace.end();
        let terminal = limit.is_none();
        let conforming = end.as_positive_negative().is_some();
        rep.line(format!("end: {}", a.show_signed(end)));
        if terminal && !conforming {
            rep.line("stuck: no relation applies at a negative-positive boundary");
        }
        let steps: Vec<Value> = trace
            .steps
            .iter()
            .map(|(s, n)| json!({"position": s.position, "word": report::signed(a, n)}))
            .collect();
        rep.field("steps", steps);
        rep.field("end", report::signed(a, end));
        rep.field("stuck", terminal && !conforming);
        rep
    };
    rep.field("start", report::signed(a, &w));
    rep.field("dot", dot.map(|d| d.display().to_string()));
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum CancelMethod {
    Reversing,
    Witness,
}

pub fn cancel(
    f: &PresentationFile,
    side: SideArg,
    method: CancelMethod,
    uncertified: bool,
    witness_len: usize,
    budget: SearchBudget,
) -> Result<Report, CliError> {
    let p = &f.presentation;
    let a = p.alphabet();
    let side_name = match side {
        SideArg::Left => "left",
        SideArg::Right => "right",
    };
    let mut rep = match method {
        CancelMethod::Reversing => {
            let cert = certificate(f, uncertified)?;
            let s = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let v = cancellative_after_completion(p, s, &cert, &budget)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let (status, verdict) = match &v.verdict {
                Outcome::Definite(Cancellation::Cancellative) => (Status::Definite, "cancellative"),
                Outcome::Definite(Cancellation::NotCancellative(_)) | Outcome::DefiniteNo(()) => {
                    (Status::DefiniteNo, "not-cancellative")
                }
                Outcome::BudgetExhausted(l) => (Status::exhausted(*l), "undecided"),
            };
            let mut rep = Report::new("cancel", status, Some(budget));
            certification_lines(&mut rep, &cert, p);
            rep.line(format!("{side_name} cancellative: {verdict}"));
            let completion = match v.status {
                revgrob::CompletionStatus::Complete => "complete".to_string(),
                revgrob::CompletionStatus::Exhausted(l) => format!("exhausted ({l})"),
            };
            rep.line(format!("completion: {completion}; added: {}", v.added));
            if !v.status.is_complete() {
                rep.line("the verdict concerns the partial completion");
            }
            let witness = match &v.verdict {
                Outcome::Definite(Cancellation::NotCancellative(w)) => {
                    rep.line(format!(
                        "witness: relation {} with s = {}, u = {}, v = {}",
                        w.relation.display(a),
                        a.name(w.s),
                        a.show_word(&w.u),
                        a.show_word(&w.v)
                    ));
                    json!({
                        "relation": w.relation.display(a),
                        "s": a.name(w.s),
                        "u": report::word(a, &w.u),
                        "v": report::word(a, &w.v),
                    })
                }
                _ => Value::Null,
            };
            rep.field("verdict", verdict);
            rep.field("witness", witness);
            rep.field(
                "completion",
                json!({
                    "status": if v.status.is_complete() { "complete" } else { "exhausted" },
                    "limit": match v.status {
                        revgrob::CompletionStatus::Exhausted(l) => json!(l.name()),
                        _ => Value::Null,
                    },
                    "added": v.added,
                }),
            );
            rep
        }
        CancelMethod::Witness => {
            let q = match side {
                SideArg::Left => p.clone(),
                SideArg::Right => p.mirror(),
            };
            let run = g_complete(&q, &budget);
            if !run.status.is_complete() {
                let mut rep =
                    Report::new("cancel", Status::of_completion(run.status), Some(budget));
                rep.line("Gröbner completion did not finish; no witness search");
                rep.field("verdict", "undecided");
                rep.field("witness", Value::Null);
                return Ok(finish_cancel(rep, side_name, method));
            }
            let basis = run.system.to_presentation();
            let obstruction = match side {
                SideArg::Left => match gcomplete_obstruction(&basis, &budget) {
                    Ok(Obstruction::NotLeftCancellative(w)) => json!(w.relation.display(a)),
                    _ => Value::Null,
                },
                SideArg::Right => Value::Null,
            };
            let found = witness_search(&q, &run.system, witness_len)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let mut rep = match found {
                Some((s, u, v)) => {
                    let (u, v) = match side {
                        SideArg::Left => (u, v),
                        SideArg::Right => (u.mirror(), v.mirror()),
                    };
                    let mut rep = Report::new("cancel", Status::DefiniteNo, Some(budget));
                    let sn = a.name(s);
                    let (us, vs) = (a.show_word(&u), a.show_word(&v));
                    match side {
                        SideArg::Left => rep.line(format!(
                            "witness: {sn}·({us}) ≡ {sn}·({vs}) but {us} ≢ {vs}"
                        )),
                        SideArg::Right => rep.line(format!(
                            "witness: ({us})·{sn} ≡ ({vs})·{sn} but {us} ≢ {vs}"
                        )),
                    };
                    rep.line(format!("{side_name} cancellative: not-cancellative"));
                    rep.field("verdict", "not-cancellative");
                    rep.field(
                        "witness",
                        json!({"s": sn, "u": report::word(a, &u), "v": report::word(a, &v)}),
                    );
                    rep
                }
                None => {
                    let mut rep = Report::new(
                        "cancel",
                        Status::Exhausted("max-witness-len".into()),
                        Some(budget),
                    );
                    rep.line(format!(
                        "no witness with words of length at most {witness_len}"
                    ));
                    rep.field("verdict", "no-witness");
                    rep.field("witness", Value::Null);
                    rep
                }
            };
            rep.field("max_witness_len", witness_len);
            rep.field("obstruction", obstruction);
            rep
        }
    };
    rep = finish_cancel(rep, side_name, method);
    Ok(rep)
}

fn finish_cancel(mut rep: Report, side: &str, method: CancelMethod) -> Report {
    rep.field("side", side);
    rep.field(
        "method",
        match method {
            CancelMethod::Reversing => "reversing",
            CancelMethod::Witness => "witness",
        },
    );
    rep
}

pub fn product(
    f1: &PresentationFile,
    f2: &PresentationFile,
    out: Option<&Path>,
) -> Result<(Report, Option<String>), CliError> {
    let p = direct_product(&f1.presentation, &f2.presentation);
    let text = PresentationFile {
        presentation: p.clone(),
        pseudolength: None,
    }
    .to_text();
    let mut rep = Report::new("product", Status::Definite, None);
    rep.field("presentation", presentation_json(&p));
    rep.field("output", out.map(|o| o.display().to_string()));
    match out {
        Some(path) => {
            fs::write(path, &text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            rep.line(format!(
                "wrote {} ({} generators, {} relations)",
                path.display(),
                p.alphabet().len(),
                p.len()
            ));
            Ok((rep, None))
        }
        None => Ok((rep, Some(text))),
    }
}
