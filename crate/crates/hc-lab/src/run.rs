use std::path::PathBuf;

use hc_lab_core::corpus::standard_corpus;
use hc_lab_core::harness::{evaluate_group, HarnessConfig, Statement, StatementCheck, SuiteReport};
use hc_lab_core::{Caps, Group};
use rayon::prelude::*;

use crate::{load_group, LabError};

pub fn default_corpus(caps: &Caps) -> Result<Vec<(String, Group)>, LabError> {
    Ok(standard_corpus(caps)?
        .into_iter()
        .map(|(spec, g)| (spec.canonical_name(), g))
        .collect())
}

/// Loads each file as a corpus member, named as by [`load_group`].
pub fn load_corpus(paths: &[PathBuf], caps: &Caps) -> Result<Vec<(String, Group)>, LabError> {
    paths
        .iter()
        .map(|p| {
            let g = load_group(p, caps)?;
            Ok((g.name().to_string(), g))
        })
        .collect()
}

/// Evaluates groups in parallel. Results are merged in corpus order, so the
/// report does not depend on `jobs`.
pub fn run_suite(
    stmts: &[&'static Statement],
    corpus: &[(String, Group)],
    config: &HarnessConfig,
    jobs: Option<usize>,
) -> Result<SuiteReport, LabError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| LabError::Usage(format!("cannot start worker pool: {e}")))?;
    let per_group: Vec<Vec<StatementCheck>> = pool.install(|| {
        corpus
            .par_iter()
            .map(|(name, g)| evaluate_group(stmts, name, g, config))
            .collect()
    });
    Ok(SuiteReport::assemble(stmts, per_group.into_iter().flatten().collect()))
}
