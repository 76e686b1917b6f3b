//! Fuzz target: every small graph the parser accepts must satisfy all
//! identity checks and agree with the brute-force reference.

#![no_main]

use libfuzzer_sys::fuzz_target;
use signed_indices::io::parse_sgl_with_limit;
use signed_indices::oracle::{check_identities, reference_indices};
use signed_indices::IndexSet;

fuzz_target!(|data: &[u8]| {
    let text = String::from_utf8_lossy(data);
    let Ok(graph) = parse_sgl_with_limit(&text, 48) else {
        return;
    };
    let report = check_identities(&graph);
    assert!(
        report.all_pass,
        "{:?}",
        report.failures().collect::<Vec<_>>()
    );
    assert_eq!(reference_indices(&graph), IndexSet::compute(&graph));
});
