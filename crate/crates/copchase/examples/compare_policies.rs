//! Monte Carlo comparison of every cop policy on one graph. The same
//! master seed and per-trial RNG streams are used for each policy, so the
//! table is reproducible run to run and worker count never matters.
//!
//! Run with: cargo run --example compare_policies

use copchase::engine::PolicySpec;
use copchase::{monte_carlo, FamilySpec, GameConfig};

fn main() {
    let spec = FamilySpec::parse("lollipop:64,c=1").unwrap();
    let g = spec.build().unwrap();
    let (cop, drunk) = spec.default_starts(&g);
    let config = GameConfig::new(cop, drunk);
    let trials = 2000;

    println!("{spec}: cop {cop}, drunk {drunk}, {trials} trials per policy\n");
    println!(
        "{:<16} {:>10} {:>8} {:>6} {:>6}",
        "policy", "mean", "stderr", "min", "max"
    );
    for name in PolicySpec::NAMES {
        let policy = PolicySpec::parse(name).unwrap();
        let r = monte_carlo(&g, policy, &config, trials, 7, 0).expect("batch runs");
        println!(
            "{:<16} {:>10.2} {:>8.2} {:>6} {:>6}",
            r.policy, r.mean, r.stderr, r.min, r.max
        );
    }
}
