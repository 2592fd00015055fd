#![no_main]

use braidkit::Field;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for field in [Field::Rational, Field::Prime(7), Field::Prime(65521)] {
        if let Ok(x) = field.parse_scalar(text) {
            let back = field.parse_scalar(&x.to_string()).expect("printed scalars parse");
            assert_eq!(back, x);
        }
    }
});
