#![no_main]

use braidkit::perm::Perm;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    let n = (n % 10) as usize;
    let Ok(text) = std::str::from_utf8(rest) else { return };
    if let Ok(p) = Perm::parse(text, n) {
        let word: Vec<String> = p.reduced_word().iter().map(|i| format!("s{i}")).collect();
        let back = Perm::parse(&word.join(" "), p.len()).expect("reduced words parse");
        assert_eq!(back, p);
        assert_eq!(p.then_after(&p.inverse()), Perm::identity(p.len()));
    }
});
