#![no_main]

use dioph::Real;
use libfuzzer_sys::fuzz_target;

// Parsing never panics; whatever parses re-parses from its display form to the same value.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(x) = s.parse::<Real>() {
        let back: Real = x.to_string().parse().expect("display form parses");
        assert_eq!(back, x);
    }
});
