#![no_main]

use fmc_core::io::args::{parse_int_list, parse_int_matrix, parse_pool, parse_targets, SearchArgs};
use fmc_core::scalars::CyclotomicField;
use libfuzzer_sys::fuzz_target;

// One field per line: group, root order, bicharacter, dim, degrees,
// targets, pool. An empty line leaves an optional field unset.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let mut lines = text.split('\n');
    let mut next = || lines.next().unwrap_or("").to_string();
    let optional = |s: String| (!s.is_empty()).then_some(s);
    let (group, root_order, bichar, dim) = (next(), next(), next(), next());
    let (degrees, targets, pool) = (next(), next(), next());

    let _ = parse_int_list(&group);
    let _ = parse_int_matrix(&bichar);
    let _ = parse_targets(&targets);
    let _ = parse_pool(&pool, CyclotomicField::get(12).unwrap());
    let Ok(dim) = dim.trim().parse::<usize>() else {
        return;
    };
    let args = SearchArgs {
        group: optional(group),
        root_order: root_order.trim().parse().ok(),
        bichar: optional(bichar),
        dim,
        degrees: optional(degrees),
        targets,
        pool,
        trials: 1,
        seed: 0,
    };
    if let Ok(params) = args.resolve() {
        assert_eq!(params.degrees.len(), dim);
    }
});
