#![no_main]

use libfuzzer_sys::fuzz_target;
use yb_core::json::lambda_from_json;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(params) = lambda_from_json(text, 4) {
            assert!(params.iter().all(|p| p.order() == 4));
        }
    }
});
