#![no_main]

use fmc_core::io::{emit_spec, parse_spec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(spec) = parse_spec(text) else {
        return;
    };
    // canonical output must parse back to itself
    let once = emit_spec(&spec);
    let again = parse_spec(&once).expect("canonical output rejected");
    assert_eq!(emit_spec(&again), once);
});
