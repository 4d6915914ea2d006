//! The family showing a smart cop cannot beat n by much: a clique of size
//! ~n^(1/3) hanging off a long path. The cop must walk the whole path
//! (about n moves), and the drunk's confinement to the clique only shaves
//! a lower-order term, so the mean lands in [n - 6n^(1/3), n + 20n^(3/4)].
//!
//! Run with: cargo run --example lollipop_lower_bound

use copchase::{monte_carlo, FamilySpec, GameConfig, PolicySpec};

fn main() {
    let trials = 2000;
    println!("smart cop on lollipop(n, c=1), cop at the far path end, drunk in the clique");
    println!("{trials} trials per size\n");
    println!(
        "{:>6} {:>10} {:>8} {:>14} {:>14}",
        "n", "mean", "stderr", "n - 6n^(1/3)", "n + 20n^(3/4)"
    );
    for n in [64usize, 216, 512] {
        let spec = FamilySpec::parse(&format!("lollipop:{n},c=1")).unwrap();
        let g = spec.build().unwrap();
        let (cop, drunk) = spec.default_starts(&g);
        let config = GameConfig::new(cop, drunk);
        let r = monte_carlo(&g, PolicySpec::parse("smart").unwrap(), &config, trials, 13, 0)
            .expect("batch runs");
        let nf = n as f64;
        let lo = nf - 6.0 * nf.cbrt();
        let hi = nf + 20.0 * nf.powf(0.75);
        assert!(r.mean >= lo && r.mean <= hi, "mean {} outside [{lo}, {hi}]", r.mean);
        println!("{n:>6} {:>10.1} {:>8.2} {lo:>14.1} {hi:>14.1}", r.mean, r.stderr);
    }
    println!("\nevery mean sits in its window: capture takes n + o(n) and not less");
}
