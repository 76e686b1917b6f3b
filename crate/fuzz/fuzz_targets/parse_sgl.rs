//! Fuzz target: parse arbitrary text as `.sgl`.
//! Accepted documents must survive a canonical write/parse round trip.

#![no_main]

use libfuzzer_sys::fuzz_target;
use signed_indices::io::{parse_sgl_with_limit, write_sgl};

fuzz_target!(|data: &[u8]| {
    let text = String::from_utf8_lossy(data);
    if let Ok(graph) = parse_sgl_with_limit(&text, 4096) {
        let canonical = write_sgl(&graph);
        let reparsed = parse_sgl_with_limit(&canonical, 4096).expect("canonical text parses");
        assert_eq!(reparsed, graph);
        assert_eq!(write_sgl(&reparsed), canonical);
    }
});
