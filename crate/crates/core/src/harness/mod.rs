//! Statement registry and evaluation. Each statement enumerates its
//! parameter tuples over a group, evaluates the hypothesis, and (when the
//! hypothesis holds, or always in diagnostic mode) the conclusion.

mod context;
mod statements;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use context::GroupContext;

use crate::embedding::HcRule;
use crate::error::{Error, Result};
use crate::group::{Caps, Group};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    Vacuous,
    Fail,
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Vacuous => "vacuous",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One evaluated parameter tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatementCheck {
    pub statement: &'static str,
    pub group: String,
    pub params: String,
    pub hypothesis: bool,
    /// `None` when the conclusion was not evaluated.
    pub conclusion: Option<bool>,
    pub verdict: Verdict,
    pub witness: String,
}

/// Whether a statement must have at least one non-vacuous instance on the
/// default corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coverage {
    Required,
    Optional,
}

pub struct Statement {
    pub id: &'static str,
    pub summary: &'static str,
    pub coverage: Coverage,
    eval: fn(&GroupContext, &mut Sink<'_>) -> Result<()>,
}

impl fmt::Debug for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Statement").field("id", &self.id).finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HarnessConfig {
    pub caps: Caps,
    /// Evaluate conclusions even when the hypothesis fails.
    pub diagnostic: bool,
    pub rule: HcRule,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            caps: Caps::default(),
            diagnostic: false,
            rule: HcRule::Standard,
        }
    }
}

/// Collects checks for one statement on one group.
pub struct Sink<'a> {
    statement: &'static str,
    group: &'a str,
    diagnostic: bool,
    out: &'a mut Vec<StatementCheck>,
}

impl Sink<'_> {
    /// Record a tuple. `hyp` carries the hypothesis value and a description;
    /// `concl` is only run when it is needed.
    pub fn record(
        &mut self,
        params: String,
        hyp: (bool, String),
        concl: impl FnOnce() -> Result<(bool, String)>,
    ) -> Result<()> {
        let (hypothesis, mut witness) = hyp;
        let conclusion = if hypothesis || self.diagnostic {
            let (c, w) = concl()?;
            if !w.is_empty() {
                if !witness.is_empty() {
                    witness.push_str("; ");
                }
                witness.push_str(&w);
            }
            Some(c)
        } else {
            None
        };
        let verdict = match (hypothesis, conclusion) {
            (true, Some(true)) => Verdict::Pass,
            (true, _) => Verdict::Fail,
            (false, _) => Verdict::Vacuous,
        };
        self.out.push(StatementCheck {
            statement: self.statement,
            group: self.group.into(),
            params,
            hypothesis,
            conclusion,
            verdict,
            witness,
        });
        Ok(())
    }

    /// Shorthand for statements with no hypothesis.
    pub fn fact(&mut self, params: String, concl: impl FnOnce() -> Result<(bool, String)>) -> Result<()> {
        self.record(params, (true, String::new()), concl)
    }
}

/// The statement registry, in id order.
pub fn registry() -> &'static [Statement] {
    statements::REGISTRY
}

/// Containments among the embedding properties (normal, Sylow and
/// self-normalizing subgroups are 𝓗; 𝓗 and weakly 𝓗 subgroups are 𝓗C).
pub fn hierarchy() -> &'static [Statement] {
    statements::HIERARCHY
}

/// Everything `all` runs: the registry followed by the hierarchy checks.
pub fn suite() -> impl Iterator<Item = &'static Statement> {
    registry().iter().chain(hierarchy())
}

pub fn lookup(id: &str) -> Option<&'static Statement> {
    suite().find(|s| s.id == id)
}

/// Resolve a list of ids (or `all`) in suite order, dropping duplicates.
pub fn select(ids: &[&str]) -> Result<Vec<&'static Statement>> {
    if ids.contains(&"all") {
        return Ok(suite().collect());
    }
    for &id in ids {
        if lookup(id).is_none() {
            return Err(Error::InvalidParameter(alloc::format!("unknown statement id `{id}`")));
        }
    }
    Ok(suite().filter(|s| ids.contains(&s.id)).collect())
}

fn skipped(stmts: &[&'static Statement], group: &str, reason: &Error) -> Vec<StatementCheck> {
    stmts
        .iter()
        .map(|s| StatementCheck {
            statement: s.id,
            group: group.into(),
            params: String::new(),
            hypothesis: false,
            conclusion: None,
            verdict: Verdict::Skipped,
            witness: alloc::format!("{reason}"),
        })
        .collect()
}

/// Evaluate the statements on one group, in registry order. A cap hit
/// inside a statement skips the rest of that statement on this group.
pub fn evaluate_group(stmts: &[&'static Statement], name: &str, g: &Group, config: &HarnessConfig) -> Vec<StatementCheck> {
    let ctx = match GroupContext::new(g, &config.caps, config.rule) {
        Ok(c) => c,
        Err(e) => return skipped(stmts, name, &e),
    };
    let mut out = Vec::new();
    for s in stmts {
        let start = out.len();
        let mut sink = Sink {
            statement: s.id,
            group: name,
            diagnostic: config.diagnostic,
            out: &mut out,
        };
        if let Err(e) = (s.eval)(&ctx, &mut sink) {
            out.truncate(start);
            out.extend(skipped(&[*s], name, &e));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub vacuous: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Tally {
    pub fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Vacuous => self.vacuous += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Skipped => self.skipped += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.vacuous + self.fail + self.skipped
    }

    /// Tuples whose hypothesis held.
    pub fn non_vacuous(&self) -> usize {
        self.pass + self.fail
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub checks: Vec<StatementCheck>,
    pub tallies: BTreeMap<&'static str, Tally>,
    pub statements: Vec<&'static str>,
}

impl SuiteReport {
    /// `checks` must already be in corpus order.
    pub fn assemble(stmts: &[&'static Statement], checks: Vec<StatementCheck>) -> SuiteReport {
        let mut tallies: BTreeMap<&'static str, Tally> = stmts.iter().map(|s| (s.id, Tally::default())).collect();
        for c in &checks {
            tallies.entry(c.statement).or_default().add(c.verdict);
        }
        SuiteReport {
            checks,
            tallies,
            statements: stmts.iter().map(|s| s.id).collect(),
        }
    }

    pub fn total(&self) -> Tally {
        let mut t = Tally::default();
        for c in &self.checks {
            t.add(c.verdict);
        }
        t
    }

    pub fn failures(&self) -> impl Iterator<Item = &StatementCheck> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    pub fn is_green(&self) -> bool {
        let t = self.total();
        t.fail == 0 && t.skipped == 0
    }

    /// Required statements with no instance whose hypothesis held.
    pub fn vacuous_statements(&self) -> Vec<&'static str> {
        self.statements
            .iter()
            .copied()
            .filter(|id| lookup(id).is_some_and(|s| s.coverage == Coverage::Required))
            .filter(|id| self.tallies.get(id).map_or(0, Tally::non_vacuous) == 0)
            .collect()
    }
}

/// Sequential suite run over named groups.
pub fn verify_suite(stmts: &[&'static Statement], corpus: &[(String, Group)], config: &HarnessConfig) -> SuiteReport {
    let mut checks = Vec::new();
    for (name, g) in corpus {
        checks.extend(evaluate_group(stmts, name, g, config));
    }
    SuiteReport::assemble(stmts, checks)
}
