//! Tour of the built-in graph families: build one instance of each and
//! print its vital statistics. Family specs are the same strings the rest
//! of the toolkit accepts (`path:100`, `lollipop:64,c=2`, `heawood`).
//!
//! Run with: cargo run --example families

use copchase::FamilySpec;

fn main() {
    let specs = [
        "path:12",
        "cycle:12",
        "complete_bipartite:4,6",
        "lollipop:27,c=1",
        "ladder:20",
        "heawood",
        "projective:3",
        "funnel:12",
        "random_connected:12,0.3,7",
        "random_tree:12,5",
    ];
    println!(
        "{:<28} {:>4} {:>6} {:>6} {:>7} {:>8} {:>6}",
        "spec", "n", "edges", "diam", "maxdeg", "regular", "girth"
    );
    for s in specs {
        let spec = FamilySpec::parse(s).expect("spec parses");
        let g = spec.build().expect("family builds");
        let girth = g
            .girth()
            .map(|c| c.to_string())
            .unwrap_or_else(|| "-".to_string());
        let regular = g
            .regularity()
            .map(|r| r.to_string())
            .unwrap_or_else(|| "-".to_string());
        println!(
            "{:<28} {:>4} {:>6} {:>6} {:>7} {:>8} {:>6}",
            spec.to_string(),
            g.n(),
            g.edge_count(),
            g.diameter(),
            g.max_degree(),
            regular,
            girth
        );
    }

    // The incidence graphs make the advertised shape concrete: 2(q^2+q+1)
    // vertices, (q+1)-regular, girth 6, diameter 3.
    for q in [2usize, 3] {
        let g = FamilySpec::ProjectiveIncidence { q }.build().unwrap();
        assert_eq!(g.n(), 2 * (q * q + q + 1));
        assert_eq!(g.regularity(), Some(q + 1));
        assert_eq!(g.girth(), Some(6));
        assert_eq!(g.diameter(), 3);
    }
    println!("\nincidence graphs check out: 2(q^2+q+1) vertices, (q+1)-regular, girth 6, diameter 3");
}
