#![no_main]

use braidkit::format::AlgebraFile;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(file) = AlgebraFile::parse(text) else { return };
    // anything accepted must survive a canonical round trip
    let canon = file.to_canonical_string();
    let again = AlgebraFile::parse(&canon).expect("canonical output parses");
    assert_eq!(again.to_canonical_string(), canon);
    if file.dim() <= 8 {
        let _ = file.bialgebra(true);
        let _ = file.algebra(true);
    }
});
