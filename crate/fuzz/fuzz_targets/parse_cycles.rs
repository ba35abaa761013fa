#![no_main]

use libfuzzer_sys::fuzz_target;
use ratgeom::parse_cycles;

fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else {
        return;
    };
    let degree = usize::from(first % 64) + 1;
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(p) = parse_cycles(text, degree) {
        assert_eq!(p.degree(), degree);
        assert_eq!(parse_cycles(&p.to_string(), degree).as_ref(), Ok(&p));
    }
});
