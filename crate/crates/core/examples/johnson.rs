//! Johnson bound table for a few grid shapes.
//!
//! ```text
//! cargo run --example johnson
//! ```

use ooc::johnson_bound;

fn main() {
    println!("  L   N   w | J_A for lambda = 0, 1, ..., w-1");
    for (l, n, w) in [(4, 3, 3), (4, 5, 4), (4, 5, 7), (8, 13, 4), (16, 31, 5)] {
        let bounds: Vec<String> = (0..w)
            .map(|lambda| johnson_bound(l, n, w, lambda).unwrap().to_string())
            .collect();
        println!("{l:>3} {n:>3} {w:>3} | {}", bounds.join(" "));
    }
}
