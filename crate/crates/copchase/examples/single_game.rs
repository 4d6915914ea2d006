//! Play one pursuit on a lollipop graph and print the trajectory move by
//! move: the cop marches down the path while the drunk rattles around the
//! clique, and the endgame plays out at distance <= 3.
//!
//! Run with: cargo run --example single_game

use copchase::engine::{play_game, trial_rng, PolicyFactory};
use copchase::{FamilySpec, GameConfig, PolicySpec};

fn main() {
    let spec = FamilySpec::parse("lollipop:24,c=1").unwrap();
    let g = spec.build().unwrap();
    let (cop, drunk) = spec.default_starts(&g);
    println!("{spec}: n={}, cop starts at {cop}, drunk at {drunk}", g.n());

    let factory = PolicyFactory::new(PolicySpec::parse("smart").unwrap(), &g);
    let config = GameConfig::new(cop, drunk).with_trajectory();
    let mut rng = trial_rng(42, 0);
    let outcome = play_game(&g, &factory, &config, &mut rng).expect("valid game");

    let trajectory = outcome.trajectory.expect("recorded");
    for (t, (x, y)) in trajectory.iter().enumerate() {
        println!("move {t:>3}: cop {x:>3}  drunk {y:>3}  d={}", g.dist(*x, *y));
    }
    let capture = outcome.capture_time.expect("this chase ends");
    println!("captured on move {capture}");

    let telemetry = outcome.telemetry.expect("smart cop reports stages");
    println!(
        "stage moves: {:?}, d1={:?}, d2={:?}, early exit from stage {:?}",
        telemetry.stage_moves, telemetry.d1, telemetry.d2, telemetry.early_exit_from
    );
}
