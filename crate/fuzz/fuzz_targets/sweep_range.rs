#![no_main]

use dioph::dioph_sums::SweepRange;
use libfuzzer_sys::fuzz_target;

// Accepted ranges satisfy 1 <= start <= stop, step >= 1 and round-trip through display.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = s.parse::<SweepRange>() {
        assert!(r.start >= 1 && r.start <= r.stop && r.step >= 1);
        assert_eq!(r.to_string().parse::<SweepRange>().expect("display form parses"), r);
    }
});
