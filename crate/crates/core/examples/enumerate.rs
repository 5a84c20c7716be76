//! One-dimensional enumeration and lifting to matrix codes, step by step,
//! for L=4, N=3, w=3.
//!
//! ```text
//! cargo run --example enumerate
//! cargo run --example enumerate -- 3 4 3
//! ```

use std::env;

use ooc::{enumerate_1d, filter_by_auto, lift_and_expand, MatrixCode};

fn main() {
    let args: Vec<u32> = env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (rows, columns, w) = match args.as_slice() {
        [l, n, w] => (*l, *n, *w),
        _ => (4, 3, 3),
    };
    let n = rows * columns;
    let codes: Vec<_> = enumerate_1d(n, w).unwrap().collect();
    println!("{} cyclic classes of length {n}, weight {w}", codes.len());
    for (i, c) in codes.iter().enumerate() {
        let lifted = MatrixCode::lift(c, rows).unwrap();
        let dop: Vec<String> = c.dop().iter().map(u32::to_string).collect();
        let wpr: Vec<String> = c.positions().iter().map(|p| (p + 1).to_string()).collect();
        println!(
            "{:>3}. DoP {{{}}}  WPR {{{}}}  bits {}  ->  {}  [DoPR {}]",
            i + 1,
            dop.join(" "),
            wpr.join(","),
            c.bit_string(),
            lifted,
            lifted.dopr_string()
        );
    }

    let pool = lift_and_expand(&codes, rows, columns).unwrap();
    println!("\n{} distinct matrix codes after row-shift expansion", pool.len());
    for max in 0..w {
        let kept = filter_by_auto(pool.iter().cloned(), max);
        println!("  lambda_a <= {max}: {} codes", kept.len());
    }
}
