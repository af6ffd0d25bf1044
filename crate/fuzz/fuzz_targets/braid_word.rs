#![no_main]

use libfuzzer_sys::fuzz_target;
use yb_core::yb::BraidWord;

fuzz_target!(|data: &[u8]| {
    let Some((&strands, rest)) = data.split_first() else { return };
    if let Ok(text) = std::str::from_utf8(rest) {
        if let Ok(w) = BraidWord::parse(usize::from(strands % 8), text) {
            assert!(w.letters().iter().all(|&l| l != 0 && (l.unsigned_abs() as usize) < w.strands()));
        }
    }
});
