//! Maximum code sets from the full construction, checked against the
//! Johnson bound and re-verified on the grids.
//!
//! ```text
//! cargo run --release --example code_sets -- 4 3 3 1 1
//! ```

use std::env;

use ooc::{run_pipeline, verify_set, CodeParams, PipelineConfig, Thresholds};

fn main() {
    let args: Vec<u32> = env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (l, n, w, la, lc) = match args.as_slice() {
        [l, n, w, la, lc] => (*l, *n, *w, *la, *lc),
        _ => (4, 3, 3, 1, 1),
    };
    let params = CodeParams::new(l, n, w).unwrap();
    let limits = Thresholds::new(la, lc);
    let run = run_pipeline(&PipelineConfig::new(params, limits)).unwrap();

    println!("L={l} N={n} w={w}, lambda_a <= {la}, lambda_c <= {lc}");
    println!("{} candidates, {} pass the auto-correlation filter", run.generated, run.graph.len());
    println!("compatibility graph: {} edges", run.graph.adjacency().edge_count());
    match run.search.bound {
        Some(b) => println!("Johnson bound: {b}"),
        None => println!("Johnson bound: undefined for lambda >= w"),
    }
    println!("{} maximum set(s)", run.search.sets.len());
    for (i, set) in run.search.sets.iter().enumerate().take(3) {
        let report = verify_set(&run.set_codes(i), limits).unwrap();
        println!(
            "set {}: size {} lambda_a={} lambda_c={} verified={}",
            i + 1,
            set.size,
            set.lambda_a,
            set.lambda_c,
            report.passed()
        );
        for code in run.set_codes(i) {
            println!("    {code}");
        }
    }
    if run.search.sets.len() > 3 {
        println!("... {} more", run.search.sets.len() - 3);
    }
}
