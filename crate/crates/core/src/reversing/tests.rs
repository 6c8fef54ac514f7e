use super::diagram::summary;
use super::*;
use crate::budget::CompletionStatus;
use crate::presentation::{oracle_equivalent, PseudolengthSpec};
use crate::words::Letter;
use proptest::prelude::*;

fn pres(gens: &[&str], rels: &[&str]) -> Presentation {
    Presentation::parse(gens, rels).unwrap()
}

fn sw(p: &Presentation, s: &str) -> SignedWord {
    p.alphabet().parse_signed_word(s).unwrap()
}

fn w(p: &Presentation, s: &str) -> Word {
    p.alphabet().parse_word(s).unwrap()
}

fn small() -> SearchBudget {
    SearchBudget::default()
        .with_max_frontier(20_000)
        .with_max_steps(50_000)
        .with_max_signed_len(24)
}

fn plain() -> Certification {
    Certification::Certified(PseudolengthSpec::PlainLength)
}

#[test]
fn successors_of_braid_word() {
    let p = pres(&["a", "b"], &["b a b = a b a"]);
    let next: Vec<SignedWord> = reversing_successors(&sw(&p, "a' b^2"), &p)
        .into_iter()
        .map(|s| s.1)
        .collect();
    assert!(next.contains(&sw(&p, "b a b' a' b")));
    for (step, n) in reversing_successors(&sw(&p, "a' b^2"), &p) {
        assert_eq!(step.apply(&sw(&p, "a' b^2")), Some(n));
    }
}

#[test]
fn successors_of_b_inverse_b() {
    let p = pres(&["a", "b"], &["b a b = b a^2"]);
    let succ = reversing_successors(&sw(&p, "b' b"), &p);
    assert!(matches!(succ[0].0.kind, StepKind::Delete { .. }));
    assert_eq!(succ[0].1, SignedWord::empty());
    let next: Vec<SignedWord> = succ.into_iter().map(|s| s.1).collect();
    assert!(next.contains(&sw(&p, "a b a'^2")));
    assert!(next.contains(&sw(&p, "a^2 b' a'")));

    let free = pres(&["a", "b"], &[]);
    let next: Vec<SignedWord> = reversing_successors(&sw(&free, "b' b"), &free)
        .into_iter()
        .map(|s| s.1)
        .collect();
    assert_eq!(next, [SignedWord::empty()]);
}

#[test]
fn positive_words_have_no_successors() {
    let p = pres(&["a", "b"], &["b a b = a b a"]);
    assert!(reversing_successors(&sw(&p, "a b b a"), &p).is_empty());
    assert!(reversing_successors(&sw(&p, "a b a' b'"), &p).is_empty());
}

#[test]
fn reverse_to_empty_examples() {
    let p = pres(&["a", "b"], &["b a b = b a^2"]);
    let out = reverse_to_empty(&w(&p, "b a^2"), &w(&p, "b a b"), &p, &small());
    let t = out.definite().unwrap();
    assert!(t.verify());
    assert!(t.end().is_empty());
    assert_eq!(
        reverse_to_empty(&w(&p, "b a^4"), &w(&p, "b a^3 b"), &p, &small()),
        Outcome::DefiniteNo(())
    );
    let x = w(&p, "a b b a b");
    assert!(reverse_to_empty(&x, &x, &p, &small()).is_definite());
}

#[test]
fn terminal_forms_of_bbbb() {
    let p = pres(&["a", "b"], &["b a b = b a^2"]);
    let set = terminal_forms(&sw(&p, "b' b b' b"), &p, &small())
        .definite()
        .unwrap();
    let shown: Vec<(String, String)> = set
        .forms
        .iter()
        .map(|f| {
            (
                p.alphabet().format_word(&f.u),
                p.alphabet().format_word(&f.v),
            )
        })
        .collect();
    for pair in [
        ("a^4", "a^3 b"),
        ("a^2", "a b"),
        ("a^3 b", "a^4"),
        ("a b", "a^2"),
    ] {
        assert!(
            shown.contains(&(pair.0.into(), pair.1.into())),
            "{pair:?} in {shown:?}"
        );
    }
    let mut sorted = set.forms.clone();
    sorted.sort();
    assert_eq!(sorted, set.forms);
}

#[test]
fn stuck_and_empty_terminal_forms() {
    let p = pres(&["a", "b"], &["b a b = b a^2"]);
    let set = terminal_forms(&sw(&p, "a' b"), &p, &small())
        .definite()
        .unwrap();
    assert!(set.forms.is_empty());
    assert_eq!(set.stuck, [sw(&p, "a' b")]);
    let set = terminal_forms(&SignedWord::empty(), &p, &small())
        .definite()
        .unwrap();
    assert_eq!(
        set.forms,
        [TerminalForm {
            u: Word::empty(),
            v: Word::empty()
        }]
    );
}

#[test]
fn completeness_checks() {
    let p = pres(&["a", "b"], &["b a b = a b a"]);
    assert_eq!(
        r_completeness_check(&p, &plain(), &small()).unwrap(),
        Outcome::Definite(Completeness::Complete)
    );
    let p = pres(&["a", "b"], &["b a b = b a^2"]);
    match r_completeness_check(&p, &plain(), &small()).unwrap() {
        Outcome::Definite(Completeness::Incomplete { su, tv, triple }) => {
            assert_eq!((su, tv), (w(&p, "b a^4"), w(&p, "b a^3 b")));
            let b = Letter(1);
            assert_eq!(triple, (b, b, b));
        }
        o => panic!("{o:?}"),
    }
}

#[test]
fn certificate_is_required() {
    let p = pres(&["a", "b"], &["b a = b"]);
    assert!(r_completeness_check(&p, &plain(), &small()).is_err());
    assert!(r_complete(&p, &plain(), &small()).is_err());
}

fn heisenberg_cert(p: &Presentation) -> Certification {
    Certification::Certified(PseudolengthSpec::weighted([(
        p.alphabet().letter("a").unwrap(),
        p.alphabet().letter("b").unwrap(),
        1,
    )]))
}

#[test]
fn heisenberg_completed_is_complete() {
    let p = pres(
        &["a", "b", "c"],
        &["a b = b a c", "a c = c a", "b c = c b", "c b a = a b"],
    );
    assert_eq!(
        r_completeness_check(&p, &heisenberg_cert(&p), &small()).unwrap(),
        Outcome::Definite(Completeness::Complete)
    );
}

#[test]
fn heisenberg_r_completion() {
    let p = pres(&["a", "b", "c"], &["a b = b a c", "a c = c a", "b c = c b"]);
    let run = r_complete(&p, &heisenberg_cert(&p), &small()).unwrap();
    assert_eq!(run.status, CompletionStatus::Complete);
    assert!(run.certified);
    let added: Vec<String> = run.added().iter().map(|r| p.display_relation(r)).collect();
    assert_eq!(added, ["c b a = a b"]);
}

#[test]
fn bab_r_completion_under_relation_cap() {
    let p = pres(&["a", "b"], &["b a b = b a^2"]);
    let b = small().with_max_relations(5).with_max_signed_len(64);
    let run = r_complete(&p, &plain(), &b).unwrap();
    assert_eq!(
        run.status,
        CompletionStatus::Exhausted(BudgetLimit::Relations)
    );
    let added: Vec<String> = run.added().iter().map(|r| p.display_relation(r)).collect();
    assert_eq!(
        added,
        [
            "b a^3 b = b a^4",
            "b a^5 b = b a^6",
            "b a^7 b = b a^8",
            "b a^9 b = b a^10"
        ]
    );
    for e in &run.log {
        assert_eq!(e.su.len(), e.tv.len());
    }
}

#[test]
fn ba_b_uncertified_family() {
    let p = pres(&["a", "b"], &["b a = b"]);
    let run = r_complete(
        &p,
        &Certification::Uncertified,
        &small().with_max_relations(5),
    )
    .unwrap();
    assert!(!run.certified);
    let added: Vec<String> = run.added().iter().map(|r| p.display_relation(r)).collect();
    assert_eq!(added, ["b a^2 = b", "b a^3 = b", "b a^4 = b", "b a^5 = b"]);
}

#[test]
fn complete_input_adds_nothing() {
    let p = pres(&["a", "b"], &["b a b = a b a"]);
    let run = r_complete(&p, &plain(), &small()).unwrap();
    assert_eq!(run.status, CompletionStatus::Complete);
    assert!(run.log.is_empty());
}

#[test]
fn divergent_reversing_hits_budget() {
    let p = pres(&["a", "b"], &["b a = a^2 b"]);
    let (t, limit) = reverse_first(&sw(&p, "b' a b"), &p, &small());
    assert!(limit.is_some());
    assert!(t.verify());
    // a·b is alone in its class, so this one is settled
    let out = reverse_to_empty(&w(&p, "a b"), &w(&p, "b a"), &p, &small());
    assert!(matches!(out, Outcome::DefiniteNo(())));
    let out = terminal_forms(&sw(&p, "b' a b"), &p, &small());
    assert!(out.is_exhausted());
}

#[test]
fn single_trace_of_braid_word() {
    let p = pres(&["a", "b"], &["b a b = a b a"]);
    let (t, limit) = reverse_first(&sw(&p, "a' b b"), &p, &small());
    assert_eq!(limit, None);
    assert!(t.verify());
    assert_eq!(t.end(), &sw(&p, "b a a b' a'"));
    assert_eq!(t.steps.len(), 3);
    let dot = export_diagram(&t, p.alphabet());
    // 3 start edges, two cells adding |v'| + |u'| = 4 edges each, one
    // deletion cell closed by 2 ε-edges
    assert_eq!(summary(&dot), (3 + 4 + 4 + 2, 2));
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("rank=same"));
}

#[test]
fn diagram_of_positive_word_is_a_path() {
    let p = pres(&["a", "b"], &["b a b = a b a"]);
    let t = ReversingTrace::new(sw(&p, "a b"));
    let dot = export_diagram(&t, p.alphabet());
    assert_eq!(summary(&dot), (2, 0));
}

#[test]
fn diagram_with_stuck_cell() {
    let p = pres(&["a", "b"], &["b a b = b a^2"]);
    let (t, _) = reverse_first(&sw(&p, "a'^4 b' b a^3 b"), &p, &small());
    assert!(t.end().as_positive_negative().is_none());
    let dot = export_diagram(&t, p.alphabet());
    assert!(dot.contains("label=\"b\""));
}

#[test]
fn left_reversing_on_symmetric_presentation() {
    let p = pres(&["a", "b"], &["b a = a b"]);
    for (u, v) in [("a b", "b a"), ("a b b", "b a b"), ("a", "b")] {
        let (u, v) = (w(&p, u), w(&p, v));
        assert_eq!(
            reverse_to_empty(&u, &v, &p, &small()).is_definite(),
            left_reverse_to_empty(&u, &v, &p, &small()).is_definite()
        );
    }
    let x = w(&p, "a b a");
    assert!(left_reverse_to_empty(&x, &x, &p, &small()).is_definite());
}

#[test]
fn enumeration_is_deterministic() {
    let p = pres(&["a", "b"], &["b a b = b a^2"]);
    let x = sw(&p, "b' b b' b");
    assert_eq!(reversing_successors(&x, &p), reversing_successors(&x, &p));
    let a = r_complete(&p, &plain(), &small().with_max_relations(4)).unwrap();
    let b = r_complete(&p, &plain(), &small().with_max_relations(4)).unwrap();
    assert_eq!(a.log, b.log);
}

fn word(k: u32, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..k, 1..=max).prop_map(|v| v.into_iter().map(Letter).collect())
}

proptest! {
    #[test]
    fn free_reduction_of_w_inverse_w(x in word(3, 8)) {
        let p = pres(&["a", "b", "c"], &["c b = b c"]);
        let t = reverse_to_empty(&x, &x, &p, &small()).definite().unwrap();
        prop_assert!(t.steps.len() <= x.len());
        prop_assert!(t.verify());
    }

    #[test]
    fn reversing_is_sound(x in word(2, 5), y in word(2, 5)) {
        let p = pres(&["a", "b"], &["b a b = a b a", "b b a = a b a"]);
        if let Outcome::Definite(t) = reverse_to_empty(&x, &y, &p, &small()) {
            prop_assert!(t.verify());
            let ob = SearchBudget::default().with_max_word_len(5);
            prop_assert!(oracle_equivalent(&p, &x, &y, &ob).is_definite());
        }
    }
}

#[test]
fn added_relations_keep_the_certificate() {
    let p = pres(&["a", "b", "c"], &["a b = b a c", "a c = c a", "b c = c b"]);
    let cert = heisenberg_cert(&p);
    let run = r_complete(&p, &cert, &small()).unwrap();
    let Certification::Certified(spec) = &cert else {
        unreachable!()
    };
    for e in &run.log {
        assert_eq!(spec.value(&e.su), spec.value(&e.tv));
    }
}
