use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::Serialize;

/// Whether a predicate eliminates rows or is only reported alongside.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Role {
    Filter,
    Report,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Predicate {
    pub name: &'static str,
    pub role: Role,
    pub statement: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Verdict {
    Eliminated { by: &'static str },
    Open,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateRow {
    pub group: String,
    pub q: Option<u64>,
    pub d: Option<u64>,
    pub v: u64,
    pub k: Option<u64>,
    #[serde(serialize_with = "crate::analysis::serialize_big")]
    pub order: BigUint,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
}

impl CandidateRow {
    pub(crate) fn new(
        group: impl Into<String>,
        q: Option<u64>,
        d: Option<u64>,
        v: u64,
        k: Option<u64>,
        order: BigUint,
    ) -> Self {
        CandidateRow {
            group: group.into(),
            q,
            d,
            v,
            k,
            order,
            checks: Vec::new(),
            verdict: Verdict::Open,
        }
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.pass)
    }

    pub fn is_open(&self) -> bool {
        self.verdict == Verdict::Open
    }
}

/// Candidate rows of one family screen, with the predicates applied to them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateTable {
    pub family: String,
    pub predicates: Vec<Predicate>,
    pub rows: Vec<CandidateRow>,
}

impl CandidateTable {
    pub(crate) fn new(family: impl Into<String>, predicates: Vec<Predicate>) -> Self {
        CandidateTable {
            family: family.into(),
            predicates,
            rows: Vec::new(),
        }
    }

    /// Records the row's checks and sets its verdict from the first failing filter.
    pub(crate) fn push(&mut self, mut row: CandidateRow, checks: Vec<(&'static str, bool)>) {
        row.checks = checks
            .into_iter()
            .map(|(name, pass)| Check { name, pass })
            .collect();
        row.verdict = Verdict::Open;
        for c in &row.checks {
            let role = self
                .predicates
                .iter()
                .find(|p| p.name == c.name)
                .map_or(Role::Filter, |p| p.role);
            if role == Role::Filter && !c.pass {
                row.verdict = Verdict::Eliminated { by: c.name };
                break;
            }
        }
        self.rows.push(row);
    }

    pub fn open_rows(&self) -> impl Iterator<Item = &CandidateRow> {
        self.rows.iter().filter(|r| r.is_open())
    }

    /// Rows on which `predicate` was evaluated and held, whatever the verdict.
    pub fn passing(&self, predicate: &str) -> impl Iterator<Item = &CandidateRow> + '_ {
        let predicate = predicate.to_string();
        self.rows
            .iter()
            .filter(move |r| r.check(&predicate) == Some(true))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serialises") + "\n"
    }

    pub fn to_csv(&self) -> String {
        let names: Vec<&str> = self.predicates.iter().map(|p| p.name).collect();
        let mut out = format!("family,group,q,d,v,k,order,{},verdict,eliminated_by\n", names.join(","));
        let opt = |x: Option<u64>| x.map_or(String::new(), |x| x.to_string());
        for r in &self.rows {
            let cells: Vec<&str> = names
                .iter()
                .map(|n| match r.check(n) {
                    Some(true) => "pass",
                    Some(false) => "fail",
                    None => "",
                })
                .collect();
            let (verdict, by) = match &r.verdict {
                Verdict::Open => ("open", ""),
                Verdict::Eliminated { by } => ("eliminated", *by),
            };
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                self.family,
                r.group,
                opt(r.q),
                opt(r.d),
                r.v,
                opt(r.k),
                r.order,
                cells.join(","),
                verdict,
                by
            );
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("family {}\n", self.family);
        for p in &self.predicates {
            let role = match p.role {
                Role::Filter => "filter",
                Role::Report => "report",
            };
            let _ = writeln!(out, "  {:<28} {:<6} {}", p.name, role, p.statement);
        }
        for r in &self.rows {
            let mut label = r.group.clone();
            if let Some(d) = r.d {
                let _ = write!(label, " d={d}");
            }
            if let Some(q) = r.q {
                let _ = write!(label, " q={q}");
            }
            let _ = write!(label, " v={}", r.v);
            if let Some(k) = r.k {
                let _ = write!(label, " k={k}");
            }
            let verdict = match &r.verdict {
                Verdict::Open => "open".to_string(),
                Verdict::Eliminated { by } => format!("eliminated by {by}"),
            };
            let _ = writeln!(out, "{label:<36} {verdict}");
        }
        let open: Vec<String> = self
            .open_rows()
            .map(|r| {
                let mut s = r.group.clone();
                if let Some(d) = r.d {
                    let _ = write!(s, " d={d}");
                }
                if let Some(q) = r.q {
                    let _ = write!(s, " q={q}");
                }
                if let Some(k) = r.k {
                    let _ = write!(s, " k={k}");
                }
                s
            })
            .collect();
        let _ = writeln!(out, "open: {}", if open.is_empty() { "none".into() } else { open.join("; ") });
        out
    }
}
