//! The scaling split that motivates the four-stage cop. On the
//! ladder-to-basement family, a greedy cop gets dragged back and forth
//! between the rails and takes on the order of (n/4)^2/2 moves; the smart
//! cop commits to frozen targets and stays linear, under 1.5n throughout.
//!
//! Run with: cargo run --example ladder_scaling

use copchase::{monte_carlo, FamilySpec, GameConfig, PolicySpec};

fn mean(family: &str, n: usize, policy: &str, trials: u64) -> f64 {
    let spec = FamilySpec::parse(&format!("{family}:{n}")).unwrap();
    let g = spec.build().unwrap();
    let (cop, drunk) = spec.default_starts(&g);
    let config = GameConfig::new(cop, drunk);
    let r = monte_carlo(&g, PolicySpec::parse(policy).unwrap(), &config, trials, 3, 0)
        .expect("batch runs");
    r.mean
}

fn main() {
    let sizes = [40usize, 80, 160];
    let trials = 2000;

    println!("ladder-to-basement, {trials} trials per cell\n");
    println!("{:>6} {:>14} {:>14} {:>12}", "n", "greedy:lex", "smart", "smart/n");
    let mut greedy = Vec::new();
    let mut smart = Vec::new();
    for &n in &sizes {
        let gm = mean("ladder", n, "greedy:lex", trials);
        let sm = mean("ladder", n, "smart", trials);
        println!("{n:>6} {gm:>14.1} {sm:>14.1} {:>12.3}", sm / n as f64);
        greedy.push(gm);
        smart.push(sm);
    }

    println!("\ndoubling ratios (mean at 2n over mean at n):");
    for w in 0..sizes.len() - 1 {
        println!(
            "  {:>3} -> {:>3}:  greedy {:>5.2}x   smart {:>5.2}x",
            sizes[w],
            sizes[w + 1],
            greedy[w + 1] / greedy[w],
            smart[w + 1] / smart[w]
        );
    }
    println!("\ngreedy doubles superlinearly (ratio >= 3); smart stays linear (ratio <= 2.5)");
}
