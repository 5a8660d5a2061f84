#![no_main]

use dioph::golden::GoldenFile;
use libfuzzer_sys::fuzz_target;

// Accepted files serialize and parse back to an equal file.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(g) = GoldenFile::parse(s) {
        let again = GoldenFile::parse(&g.to_json()).expect("serialized file parses");
        assert_eq!(again, g);
    }
});
