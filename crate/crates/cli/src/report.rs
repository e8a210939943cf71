//! Check records and their rendering.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub check: String,
    pub inputs: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub records: Vec<Record>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
}

impl Report {
    pub fn push(&mut self, check: impl Into<String>, inputs: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.records.push(Record {
            check: check.into(),
            inputs: inputs.into(),
            status,
            detail: detail.into(),
            millis: None,
        });
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.status == Status::Pass)
    }

    fn counts(&self) -> (usize, usize, usize) {
        let c = |s| self.records.iter().filter(|r| r.status == s).count();
        (c(Status::Pass), c(Status::Fail), c(Status::Undecided))
    }

    /// One JSON object per record, then a summary object.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        let (p, f, u) = self.counts();
        let summary = serde_json::json!({ "summary": { "pass": p, "fail": f, "undecided": u } });
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }

    pub fn to_table(&self) -> String {
        let heads = ["check", "inputs", "status", "detail"];
        let rows: Vec<[String; 4]> = self
            .records
            .iter()
            .map(|r| {
                let s = match r.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Undecided => "UNDECIDED",
                };
                let detail = match r.millis {
                    Some(ms) => format!("{} [{ms} ms]", r.detail),
                    None => r.detail.clone(),
                };
                [r.check.clone(), r.inputs.clone(), s.to_string(), detail]
            })
            .collect();
        let mut w = [0; 3];
        for (k, h) in heads.iter().take(3).enumerate() {
            w[k] = rows.iter().map(|r| r[k].chars().count()).chain([h.len()]).max().unwrap_or(0);
        }
        let mut out = String::new();
        let line = |out: &mut String, c: [&str; 4]| {
            let _ = writeln!(out, "{:<a$}  {:<b$}  {:<s$}  {}", c[0], c[1], c[2], c[3], a = w[0], b = w[1], s = w[2]);
        };
        line(&mut out, heads);
        for r in &rows {
            line(&mut out, [&r[0], &r[1], &r[2], &r[3]]);
        }
        let (p, f, u) = self.counts();
        let _ = writeln!(out, "{p} passed, {f} failed, {u} undecided");
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json_lines(),
            Format::Table => self.to_table(),
        }
    }
}
