use super::*;
use crate::error::Error;
use crate::variety::Predicate;

#[test]
fn families_build_expected_dimensions() {
    let reg = FamilyRegistry::standard();
    let fp = FamilyParams::new(3, 2);
    let dims = [("natural", 5), ("specht", 6), ("D1", 4), ("D(p-1)", 6), ("D(kp-p-1)", 6)];
    for (name, dim) in dims {
        assert_eq!(reg.get(name).unwrap().build(&fp).unwrap().dim(), dim, "{name}");
    }
    assert_eq!(reg.get("specht-hook").unwrap().build(&fp.with_r(2)).unwrap().dim(), 10);
    assert_eq!(reg.get("specht-hook-plus").unwrap().build(&fp.with_r(2)).unwrap().dim(), 15);
    assert_eq!(reg.get("D(kp-p-1)").unwrap().build(&FamilyParams::new(3, 3)).unwrap().dim(), 21);
    assert!(matches!(reg.get("Dr").unwrap().build(&fp), Err(Error::MissingParameter("r"))));
    assert!(matches!(reg.get("nope"), Err(Error::UnknownModule(_))));
    assert!(reg.get("D(p−1)").is_ok());
}

#[test]
fn family_predicates() {
    let reg = FamilyRegistry::standard();
    let fp = FamilyParams::new(5, 3);
    let dr = reg.get("Dr").unwrap();
    assert_eq!(dr.predicate(&fp.with_r(4)), Predicate::PZero);
    assert_eq!(dr.predicate(&fp.with_r(9)), Predicate::PZero);
    assert_eq!(dr.predicate(&fp.with_r(2)), Predicate::Everything);
    assert_eq!(dr.predicate(&fp.with_r(6)), Predicate::Unknown);
    assert_eq!(dr.claimed_complexity(&fp.with_r(9)), Some(2));
    assert_eq!(reg.get("specht").unwrap().predicate(&fp), Predicate::FZero);
}

#[test]
fn guardrails() {
    let ok = SuiteParams { p: Some(7), k: Some(4), e: Some(3), ..SuiteParams::default() };
    assert!(ok.check_guardrails().is_ok());
    let big = SuiteParams { p: Some(11), ..SuiteParams::default() };
    assert!(matches!(big.check_guardrails(), Err(Error::Unsupported { name: "p", .. })));
    let allowed = SuiteParams { p: Some(11), allow_large: true, ..SuiteParams::default() };
    assert!(allowed.check_guardrails().is_ok());
    let even = SuiteParams { p: Some(4), allow_large: true, ..SuiteParams::default() };
    assert!(matches!(even.check_guardrails(), Err(Error::NotOddPrime(4))));
    let e = SuiteParams { e: Some(4), ..SuiteParams::default() };
    assert!(matches!(e.check_guardrails(), Err(Error::Unsupported { name: "e", .. })));
}

#[test]
fn unknown_suite() {
    assert!(matches!(run_suite("nope", &SuiteParams::default()), Err(Error::UnknownSuite(_))));
}

#[test]
fn pass_means_every_check_passed() {
    let r = run_suite("annihilation", &SuiteParams { p: Some(3), ..SuiteParams::default() }).unwrap();
    assert!(r.pass);
    assert_eq!(r.checks.len(), 4);
    let r = run_suite("lr-sources", &SuiteParams { m: Some(3), case: Some(2), ..SuiteParams::default() }).unwrap();
    assert!(!r.pass);
    assert!(r.failed_checks().count() > 0);
}

#[test]
fn reports_are_deterministic_and_sorted() {
    let ps = SuiteParams { p: Some(3), k: Some(2), e: Some(2), seed: 5, ..SuiteParams::default() };
    let a = run_suite("d1-generic", &ps).unwrap();
    let b = run_suite("d1-generic", &ps).unwrap();
    let ja = render_report(&a, ReportFormat::Json).unwrap();
    assert_eq!(ja, render_report(&b, ReportFormat::Json).unwrap());
    assert!(ja.contains("\"pass\": true"));
    assert!(!ja.contains("elapsed"));
    let keys: Vec<&str> = ja.lines().filter(|l| l.starts_with("  \"")).map(|l| l.trim().split('"').nth(1).unwrap()).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let csv = render_report(&a, ReportFormat::Csv).unwrap();
    assert_eq!(csv.lines().count(), a.checks.len() + 1);
}

#[test]
fn emit_report_writes_and_reports_io_errors() {
    let r = run_suite("lr-example", &SuiteParams::default()).unwrap();
    let dir = std::env::temp_dir().join(format!("rankvar-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.json");
    emit_report(&r, ReportFormat::Json, &path).unwrap();
    assert!(std::fs::read_to_string(&path).unwrap().contains("\"suite\": \"lr-example\""));
    std::fs::remove_dir_all(&dir).unwrap();
    assert!(matches!(emit_report(&r, ReportFormat::Json, &dir.join("missing/r.json")), Err(Error::Io(_))));
}

#[test]
fn traceability_covers_every_suite() {
    let reg = SuiteRegistry::standard();
    let table = reg.traceability();
    assert_eq!(table.lines().count(), 2 + reg.suites().count());
    for s in reg.suites() {
        assert!(!s.statement().is_empty());
        assert!(table.contains(s.name()));
    }
}

#[test]
fn custom_suites_can_be_registered() {
    struct Trivial;
    impl Suite for Trivial {
        fn name(&self) -> &'static str {
            "trivial"
        }
        fn statement(&self) -> &'static str {
            "always holds"
        }
        fn sweep(&self) -> &'static str {
            "none"
        }
        fn run(&self, _: &SuiteParams, _: &FamilyRegistry, out: &mut SuiteRun) -> crate::Result<()> {
            out.check("tautology", true, "");
            out.count("n", 1);
            Ok(())
        }
    }
    let mut reg = SuiteRegistry::standard();
    reg.register(Box::new(Trivial));
    let r = reg.run("trivial", &SuiteParams::default()).unwrap();
    assert!(r.pass);
    assert_eq!(r.counters["n"], 1);
}
