#![no_main]

use dioph::contfrac::parse_quotients;
use libfuzzer_sys::fuzz_target;

// Accepted lists are non-empty, positive and survive a bracketed comma join.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(a) = parse_quotients(s) {
        assert!(!a.is_empty() && a.iter().all(|v| *v > 0));
        let joined = format!("[{}]", a.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "));
        assert_eq!(parse_quotients(&joined).expect("canonical form parses"), a);
    }
});
