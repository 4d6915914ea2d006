//! What the four-stage cop actually spends its time on. On a long cycle
//! the machinery engages in full: stage 1 walks to the drunk's start,
//! stage 2 to where the drunk ended up meanwhile, stage 3 retargets in
//! four-move blocks, and stage 4 is the distance-3 endgame. Trials where
//! the drunk wanders into the cop's path short-circuit straight to the
//! endgame; both counters show up in the summary.
//!
//! Run with: cargo run --example stage_telemetry

use copchase::{monte_carlo, FamilySpec, GameConfig, PolicySpec};

fn main() {
    let spec = FamilySpec::parse("cycle:200").unwrap();
    let g = spec.build().unwrap();
    let (cop, drunk) = spec.default_starts(&g);
    let d0 = g.dist(cop, drunk);
    let trials = 4000;

    let config = GameConfig::new(cop, drunk);
    let policy = PolicySpec::parse("smart").unwrap();
    let r = monte_carlo(&g, policy, &config, trials, 11, 0).expect("batch runs");
    let s = r.stages.expect("smart cop reports stages");

    println!("{spec}: cop {cop}, drunk {drunk}, d(cop,drunk) = {d0}, {trials} trials");
    println!("mean capture time {:.2} (stderr {:.2}), n = {}\n", r.mean, r.stderr, g.n());
    for (i, m) in s.mean_stage_moves.iter().enumerate() {
        println!("stage {}: {:>8.2} moves on average", i + 1, m);
    }
    println!();
    println!(
        "stage 1 completed {} of {trials} times; a completed opening march always takes \
         exactly d = {d0} moves",
        s.stage1_completions
    );
    if let Some(d1) = s.mean_d1 {
        println!(
            "at the stage-1 handoff the drunk had drifted {d1:.2} from its start on average \
         (the stage-2 leg)"
        );
    }
    if let Some(d2) = s.mean_d2 {
        println!(
            "stage 2 completed {} times, handing off at mean distance {d2:.2}",
            s.stage2_completions
        );
    }
    println!(
        "early endgame entries (drunk wandered within distance 3 of the cop): {}",
        s.early_exits
    );
    println!("\ncapture-time histogram:");
    for b in &r.histogram {
        println!("  [{:>5}, {:>5})  {:>5}", b.lo, b.hi, b.count);
    }
}
