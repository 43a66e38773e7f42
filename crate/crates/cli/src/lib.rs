//! Task specs, certificates, and the runner behind the `secantcat` binary.

pub mod certificate;
pub mod run;
pub mod spec;

pub use certificate::Certificate;
pub use run::{run_suite, run_task, RunOptions, SuiteLine, SuiteReport, TaskOutput};
pub use spec::{BudgetSpec, ModeSpec, ModelSpec, TaskKind, TaskSpec};
