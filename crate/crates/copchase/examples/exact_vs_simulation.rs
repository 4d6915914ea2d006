//! The two ways to the same number: solve the absorbing chain for a
//! memoryless policy exactly, then check a Monte Carlo estimate lands
//! within a few standard errors. Includes the bipartite parity trap, where
//! greedy pursuit from the same side takes (a+b)/2 expected moves.
//!
//! Run with: cargo run --example exact_vs_simulation

use copchase::{
    exact_expected_capture, monte_carlo, FamilySpec, GameConfig, MemorylessPolicy, PolicySpec,
};

fn compare(spec_str: &str, policy_name: &str, mem: MemorylessPolicy) {
    let spec = FamilySpec::parse(spec_str).unwrap();
    let g = spec.build().unwrap();
    let (cop, drunk) = spec.default_starts(&g);

    let table = exact_expected_capture(&g, mem, 1e-10, false).expect("solver converges");
    let exact = table.value(cop, drunk);

    let policy = PolicySpec::parse(policy_name).unwrap();
    let config = GameConfig::new(cop, drunk);
    let r = monte_carlo(&g, policy, &config, 50_000, 1, 0).expect("batch runs");

    let gap = (r.mean - exact).abs();
    let ses = if r.stderr > 0.0 { gap / r.stderr } else { 0.0 };
    println!(
        "{spec_str:<24} {policy_name:<14} exact {exact:>9.4}  mc {:>9.4} +- {:.4}  ({ses:.2} SE off)",
        r.mean, r.stderr
    );
    assert!(gap <= 4.0 * r.stderr.max(1e-9), "estimate strayed past 4 SE");
}

fn main() {
    println!("50k trials each; estimates should sit within ~4 standard errors\n");
    compare("cycle:30", "greedy:lex", MemorylessPolicy::GreedyLex);
    compare("complete_bipartite:10,10", "greedy:lex", MemorylessPolicy::GreedyLex);
    compare("lollipop:24,c=1", "hitting", MemorylessPolicy::HittingTimeGreedy);
    compare("path:40", "oscillate", MemorylessPolicy::Oscillate);
    compare("random_connected:14,0.3,5", "random", MemorylessPolicy::RandomCop);

    // The bipartite number itself: same-side greedy on K_{b,b} is exactly b.
    let g = FamilySpec::parse("complete_bipartite:10,10").unwrap().build().unwrap();
    let t = exact_expected_capture(&g, MemorylessPolicy::GreedyLex, 1e-10, false).unwrap();
    println!("\nK(10,10) same-side greedy value: {:.10} (the parity trap: n/2)", t.value(0, 1));
}
