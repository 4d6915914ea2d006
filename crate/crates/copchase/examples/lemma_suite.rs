//! Run every bound-check suite and print its verdict. Each suite sweeps a
//! documented domain (exhaustive small-graph enumeration, sized families,
//! or a fixed menagerie) and reports the worst margin it saw; a failing
//! suite would carry a concrete counterexample graph.
//!
//! The four-lemma and diam-delta suites enumerate all 1.87M connected
//! graphs on 7 labeled vertices, so expect this to run for ~20 seconds.
//!
//! Run with: cargo run --example lemma_suite

use copchase::analysis::{run_suite, LemmaSuite};
use std::time::Instant;

fn main() {
    let mut all_pass = true;
    for suite in LemmaSuite::ALL {
        let t0 = Instant::now();
        let r = run_suite(suite);
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        println!(
            "{verdict} {:<13} {:>9} checks, worst margin {:>10.3e}, {:.2}s",
            r.lemma,
            r.checks,
            r.worst_margin,
            t0.elapsed().as_secs_f64()
        );
        println!("     domain: {}", r.domain);
        if let Some(c) = &r.counterexample {
            println!("     counterexample: n={} edges={:?} {}", c.n, c.edges, c.witness);
        }
        all_pass &= r.pass;
    }
    println!("\noverall: {}", if all_pass { "PASS" } else { "FAIL" });
    std::process::exit(if all_pass { 0 } else { 1 });
}
