#![no_main]

use libfuzzer_sys::fuzz_target;
use signed_indices::generators::{path, SignPattern};

fuzz_target!(|data: &[u8]| {
    let text = String::from_utf8_lossy(data);
    if let Ok(pattern) = SignPattern::parse(&text, 7) {
        if let SignPattern::Random { p_plus, .. } = pattern {
            assert!((0.0..=1.0).contains(&p_plus));
        }
        path(8, pattern).expect("validated pattern generates");
    }
});
