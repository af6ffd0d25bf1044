#![no_main]

use libfuzzer_sys::fuzz_target;
use yb_core::rack::parse_rack_spec;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(rack) = parse_rack_spec(text) {
            assert!(rack.size() > 0);
        }
    }
});
