//! Auto- and cross-correlation profiles by WPR intersection.
//!
//! ```text
//! cargo run --example correlation
//! cargo run --example correlation -- "1'0 2'1 3'1" "1'0 2'0 4'0" 4 3
//! ```

use std::env;

use ooc::correlation::intersection_count;
use ooc::{auto_profile, cross_profile, parse_code, set_constraints, Dims};

fn main() {
    let args: Vec<String> = env::args().skip(1).collect();
    let (a, b, dims) = match args.as_slice() {
        [a, b, l, n] => (a.clone(), b.clone(), Dims::new(l.parse().unwrap(), n.parse().unwrap())),
        _ => (
            "1'0 3'0 2'1 4'1 1'4 3'4 4'4".to_string(),
            "1'0 2'0 4'1 2'2 3'2 1'4 4'4".to_string(),
            Dims::new(4, 5),
        ),
    };
    let x = parse_code(&a, dims).unwrap();
    let y = parse_code(&b, dims).unwrap();

    println!("X = {x}");
    for tau in 1..x.columns() {
        let shifted = x.column_shift(tau);
        println!("  (X) n (X_{tau}) = {}", intersection_count(&x, &shifted).unwrap());
    }
    let pa = auto_profile(&x);
    println!("  lambda_a(X) = {}", pa.constraint());

    println!("Y = {y}");
    println!("  lambda_a(Y) = {}", auto_profile(&y).constraint());

    match cross_profile(&x, &y) {
        Ok(p) => {
            for (tau, v) in p.values().iter().enumerate() {
                println!("  (X) n (Y_{tau}) = {v}");
            }
            println!("  lambda_c(X, Y) = {}", p.constraint());
            let (la, lc) = set_constraints(&[x, y]).unwrap();
            println!("set {{X, Y}}: lambda_a = {la}, lambda_c = {lc}");
        }
        Err(e) => println!("cross-correlation: {e}"),
    }
}
