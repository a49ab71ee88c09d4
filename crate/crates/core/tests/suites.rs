use zetaval_core::{run_suite, Suite, SuiteParams};

#[test]
fn every_suite_passes_at_default_size() {
    for suite in Suite::ALL {
        let report = run_suite(suite, &SuiteParams::default()).unwrap();
        assert!(report.all_passed(), "{report}");
        println!("{suite}: {} checks", report.len());
    }
}
