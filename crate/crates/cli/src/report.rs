use std::fmt::Write as _;

use revgrob::{
    Alphabet, BudgetLimit, CompletionStatus, Presentation, Relation, SearchBudget, SignedWord, Word,
};
use serde_json::{json, Map, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Definite,
    DefiniteNo,
    Exhausted(String),
}

impl Status {
    pub fn code(&self) -> u8 {
        match self {
            Status::Definite => 0,
            Status::DefiniteNo => 1,
            Status::Exhausted(_) => 2,
        }
    }

    pub fn of_completion(s: CompletionStatus) -> Status {
        match s {
            CompletionStatus::Complete => Status::Definite,
            CompletionStatus::Exhausted(l) => Status::exhausted(l),
        }
    }

    pub fn exhausted(l: BudgetLimit) -> Status {
        Status::Exhausted(l.name().to_string())
    }

    fn name(&self) -> &'static str {
        match self {
            Status::Definite => "definite",
            Status::DefiniteNo => "definite-no",
            Status::Exhausted(_) => "exhausted",
        }
    }
}

/// One command's result: a JSON document plus its plain-text rendering.
pub struct Report {
    pub command: &'static str,
    pub status: Status,
    pub budget: Option<SearchBudget>,
    pub fields: Map<String, Value>,
    pub lines: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, status: Status, budget: Option<SearchBudget>) -> Self {
        Report {
            command,
            status,
            budget,
            fields: Map::new(),
            lines: Vec::new(),
        }
    }

    pub fn field(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.fields.insert(key.to_string(), v.into());
        self
    }

    pub fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.lines.push(s.into());
        self
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command));
        m.insert("status".into(), json!(self.status.name()));
        let limit = match &self.status {
            Status::Exhausted(l) => json!(l),
            _ => Value::Null,
        };
        m.insert("limit".into(), limit);
        if let Some(b) = &self.budget {
            m.insert("budget".into(), budget_json(b));
        }
        m.extend(self.fields.clone());
        Value::Object(m)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for l in &self.lines {
            let _ = writeln!(s, "{l}");
        }
        match &self.status {
            Status::Exhausted(l) => {
                let _ = writeln!(s, "status: exhausted ({l})");
            }
            st => {
                let _ = writeln!(s, "status: {}", st.name());
            }
        }
        if let Some(b) = &self.budget {
            let _ = writeln!(s, "budget: {}", budget_text(b));
        }
        s
    }
}

pub fn budget_json(b: &SearchBudget) -> Value {
    json!({
        "max_relations": b.max_relations,
        "max_len": b.max_word_len,
        "max_steps": b.max_steps,
        "max_frontier": b.max_frontier,
        "max_signed_len": b.max_signed_len,
    })
}

fn budget_text(b: &SearchBudget) -> String {
    format!(
        "max-relations={} max-len={} max-steps={} max-frontier={} max-signed-len={}",
        b.max_relations, b.max_word_len, b.max_steps, b.max_frontier, b.max_signed_len
    )
}

pub fn word(a: &Alphabet, w: &Word) -> String {
    a.format_word(w)
}

pub fn signed(a: &Alphabet, w: &SignedWord) -> String {
    a.format_signed(w)
}

pub fn relation(a: &Alphabet, r: &Relation) -> String {
    r.display(a)
}

pub fn relations<'a>(a: &Alphabet, rs: impl IntoIterator<Item = &'a Relation>) -> Vec<String> {
    rs.into_iter().map(|r| relation(a, r)).collect()
}

pub fn presentation_json(p: &Presentation) -> Value {
    json!({
        "generators": p.alphabet().names(),
        "relations": relations(p.alphabet(), p.relations()),
    })
}
