#![no_main]

use libfuzzer_sys::fuzz_target;
use ratgeom::spec::GroupSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(spec) = GroupSpec::parse(text) {
        assert_eq!(GroupSpec::parse(&spec.to_string()).as_ref(), Ok(&spec));
        let _ = spec.build(200);
    }
});
