//! File loading, caps configuration, the parallel suite runner and report
//! formatting for the `hc-lab` command line.

mod caps;
mod error;
mod load;
mod query;
mod report;
mod run;

pub use caps::{caps_from, parse_caps, CAPS_ENV};
pub use error::LabError;
pub use load::{load_group, realize};
pub use query::{check, info, CheckPredicate, Selector};
pub use report::{exit_code, write_records, write_text, Record};
pub use run::{default_corpus, load_corpus, run_suite};
