//! Shared inputs for the benchmarks.

use nondeg_core::Support;

pub fn front_page() -> Support {
    Support::from_i64(&[[4, 0, 0], [3, 2, 0], [0, 10, 0], [2, 0, 3], [0, 3, 4], [0, 0, 8]])
        .expect("valid support")
}

pub fn workload() -> Vec<(String, Support)> {
    let mut out = vec![("front-page".to_string(), front_page())];
    for (a, b, c) in [(2, 3, 7), (3, 4, 5), (2, 7, 11), (5, 7, 11)] {
        out.push((format!("brieskorn({a},{b},{c})"), Support::brieskorn(a, b, c)));
    }
    out
}
