//! Named module families and verification suites, plus report emission.

mod families;
mod report;
mod suites;

pub use families::{FamilyParams, FamilyRegistry, ModuleFamily};
pub use report::{emit_report, render_report, to_sorted_json, ReportFormat};
pub use suites::{Check, Suite, SuiteParams, SuiteRegistry, SuiteResult, SuiteRun, MAX_E, MAX_K, MAX_P};

/// Runs a registered suite from the standard registry.
pub fn run_suite(name: &str, params: &SuiteParams) -> crate::Result<SuiteResult> {
    SuiteRegistry::standard().run(name, params)
}

#[cfg(test)]
mod tests;
