#![no_main]

use libfuzzer_sys::fuzz_target;
use yb_core::rack::Rack;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(rack) = Rack::from_json_str(text) {
            assert_eq!(Rack::from_json_str(&rack.canonical_string()).unwrap(), rack);
        }
    }
});
