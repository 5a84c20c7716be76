//! WPR, DoPR and grid views of a matrix code, its column shifts and its
//! canonical form.
//!
//! ```text
//! cargo run --example representations
//! ```

use ooc::{parse_code, Dims, MatrixCode};

fn print_grid(code: &MatrixCode) {
    for row in code.grid() {
        let line: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
        println!("    {}", line.join(" "));
    }
}

fn main() {
    let x = parse_code("wpr: 1'0 3'0 2'1 4'1 1'4 3'4 4'4", Dims::new(4, 5)).unwrap();
    println!("code X ({}x{}, w={})", x.rows(), x.columns(), x.weight());
    print_grid(&x);
    println!("  WPR  {x}");
    println!("  DoPR {}", x.dopr_string());

    println!("\ncolumn shifts keep the DoPR up to rotation:");
    for p in 0..x.columns() {
        let s = x.column_shift(p);
        println!("  p={p}  WPR {s:<30} DoPR {}", s.dopr_string());
    }
    println!("canonical form: {}", x.canonical_form());

    println!("\nrow shifts give new codes:");
    for k in 1..x.rows() {
        let s = x.row_shift(k);
        println!("  k={k}  {s}  same code as X: {}", s == x);
    }

    let back = MatrixCode::from_dopr(x.rows(), x.columns(), &x.dopr()).unwrap();
    println!("\nDoPR -> WPR round trip: {back}");
}
