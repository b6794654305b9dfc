#![no_main]

use fmc_core::scalars::{CyclotomicField, Scalar};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&order, rest)) = data.split_first() else {
        return;
    };
    let Ok(field) = CyclotomicField::get(u32::from(order)) else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(a) = Scalar::parse(text, field) {
        assert_eq!(Scalar::parse(&a.to_literal(), field).unwrap(), a);
    }
});
