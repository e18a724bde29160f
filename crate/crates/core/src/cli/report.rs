use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    InvalidInput,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::InvalidInput => "invalid-input",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail | Status::InvalidInput => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Section {
    pub title: String,
    pub entries: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub key: String,
    pub value: String,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Section {
            title: title.into(),
            entries: Vec::new(),
        }
    }

    pub fn put(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.entries.push(Entry {
            key: key.into(),
            value: value.to_string(),
        });
        self
    }
}

/// A failed check and the concrete cell, subset, parameter or pair behind it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub sections: Vec<Section>,
    pub counterexamples: Vec<Counterexample>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            status: Status::Pass,
            sections: Vec::new(),
            counterexamples: Vec::new(),
        }
    }

    pub fn section(&mut self, title: impl Into<String>) -> &mut Section {
        self.sections.push(Section::new(title));
        self.sections.last_mut().unwrap()
    }

    /// Records a counterexample and demotes a passing report to a failure.
    pub fn counterexample(&mut self, check: impl Into<String>, witness: impl Into<String>) {
        if self.status == Status::Pass {
            self.status = Status::Fail;
        }
        self.counterexamples.push(Counterexample {
            check: check.into(),
            witness: witness.into(),
        });
    }

    pub fn invalid(&mut self) {
        self.status = Status::InvalidInput;
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "report / command = {}", self.command).unwrap();
        writeln!(out, "report / status = {}", self.status.name()).unwrap();
        for s in &self.sections {
            for e in &s.entries {
                writeln!(out, "{} / {} = {}", s.title, e.key, e.value).unwrap();
            }
        }
        writeln!(
            out,
            "report / counterexamples = {}",
            self.counterexamples.len()
        )
        .unwrap();
        for c in &self.counterexamples {
            writeln!(out, "counterexample / {} = {}", c.check, c.witness).unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counterexample_forces_failure() {
        let mut r = Report::new("x");
        r.section("a").put("k", 1).put("j", "two");
        assert_eq!(r.exit_code(), 0);
        r.counterexample("law", "1 * 2 = 3");
        assert_eq!(r.status, Status::Fail);
        assert_eq!(
            r.to_text(),
            "report / command = x\nreport / status = fail\na / k = 1\na / j = two\n\
             report / counterexamples = 1\ncounterexample / law = 1 * 2 = 3\n"
        );
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["status"], "fail");
        assert_eq!(json["sections"][0]["entries"][1]["value"], "two");
    }
}
