#![no_main]

use libfuzzer_sys::fuzz_target;
use yb_core::json::{poly_matrix_from_json, poly_matrix_to_json, rational_matrix_from_json};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(m) = poly_matrix_from_json(text, 3) {
            let again = poly_matrix_from_json(&poly_matrix_to_json(&m).to_string(), 3).unwrap();
            assert_eq!(again, m);
        }
        let _ = rational_matrix_from_json(text);
    }
});
