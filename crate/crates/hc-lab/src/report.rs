use std::collections::BTreeMap;
use std::io::{self, Write};
use std::time::Duration;

use hc_lab_core::harness::{StatementCheck, SuiteReport, Tally, Verdict};
use serde::Serialize;

/// One line of `--format records` output.
#[derive(Debug, Serialize)]
pub struct Record<'a> {
    pub statement: &'a str,
    pub group: &'a str,
    pub params: &'a str,
    pub verdict: &'a str,
    pub witness: &'a str,
}

impl<'a> From<&'a StatementCheck> for Record<'a> {
    fn from(c: &'a StatementCheck) -> Self {
        Record {
            statement: c.statement,
            group: &c.group,
            params: &c.params,
            verdict: c.verdict.as_str(),
            witness: &c.witness,
        }
    }
}

pub fn write_records(report: &SuiteReport, w: &mut impl Write) -> io::Result<()> {
    for c in &report.checks {
        serde_json::to_writer(&mut *w, &Record::from(c))?;
        w.write_all(b"\n")?;
    }
    Ok(())
}

/// 0 green, 1 any FAIL, 3 skips without FAIL.
pub fn exit_code(report: &SuiteReport) -> u8 {
    let t = report.total();
    if t.fail > 0 {
        1
    } else if t.skipped > 0 {
        3
    } else {
        0
    }
}

fn tally_row(w: &mut impl Write, label: &str, t: &Tally) -> io::Result<()> {
    writeln!(
        w,
        "{label:<16} {:>7} {:>8} {:>5} {:>8} {:>12}",
        t.pass,
        t.vacuous,
        t.fail,
        t.skipped,
        t.non_vacuous()
    )
}

fn header(w: &mut impl Write, first: &str) -> io::Result<()> {
    writeln!(w, "{first:<16} {:>7} {:>8} {:>5} {:>8} {:>12}", "pass", "vacuous", "FAIL", "skipped", "hypothesis")
}

/// Human-readable summary. A single selected statement gets a per-group
/// table; otherwise one row per statement.
pub fn write_text(report: &SuiteReport, elapsed: Option<Duration>, w: &mut impl Write) -> io::Result<()> {
    if let [only] = report.statements.as_slice() {
        let mut by_group: Vec<(&str, Tally)> = Vec::new();
        for c in report.checks.iter().filter(|c| c.statement == *only) {
            if by_group.last().is_none_or(|(g, _)| *g != c.group) {
                by_group.push((&c.group, Tally::default()));
            }
            by_group.last_mut().unwrap().1.add(c.verdict);
        }
        writeln!(w, "{only}")?;
        header(w, "group")?;
        for (g, t) in &by_group {
            tally_row(w, g, t)?;
        }
    } else {
        header(w, "statement")?;
        for id in &report.statements {
            tally_row(w, id, &report.tallies[id])?;
        }
    }
    tally_row(w, "total", &report.total())?;

    let failures: Vec<&StatementCheck> = report.failures().collect();
    if !failures.is_empty() {
        writeln!(w, "\nfailures:")?;
        for c in failures {
            writeln!(w, "  {} {} {} | {}", c.statement, c.group, c.params, c.witness)?;
        }
    }
    let mut skips: BTreeMap<(&str, &str), &str> = BTreeMap::new();
    for c in report.checks.iter().filter(|c| c.verdict == Verdict::Skipped) {
        skips.insert((c.statement, &c.group), &c.witness);
    }
    if !skips.is_empty() {
        writeln!(w, "\nskipped:")?;
        for ((s, g), why) in skips {
            writeln!(w, "  {s} {g}: {why}")?;
        }
    }
    let vacuous = report.vacuous_statements();
    if !vacuous.is_empty() {
        writeln!(w, "\nno hypothesis-true instance: {}", vacuous.join(", "))?;
    }
    let status = match exit_code(report) {
        0 => "green",
        1 => "FAIL",
        _ => "incomplete (skips)",
    };
    match elapsed {
        Some(d) => writeln!(w, "\n{status} in {:.2}s", d.as_secs_f64()),
        None => writeln!(w, "\n{status}"),
    }
}
