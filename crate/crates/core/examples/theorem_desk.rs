//! Pure classical diagrams on three strands: virtual equality of the images
//! against classical equality, pair by pair. Optional argument: length cap.

use vbraid::campaign::{compare_pair, run_theorem_desk, TheoremBounds};
use vbraid::text::parse_diagram;

fn main() {
    let cap = std::env::args().nth(1).map_or(4, |s| s.parse().expect("length cap"));
    let bounds = TheoremBounds::default();

    let a = parse_diagram("n=3 s1 s1 s2 s2").unwrap();
    let b = parse_diagram("n=3 s2 s2 s1 s1").unwrap();
    println!("{a} vs {b}: {:?}", compare_pair(&a, &b, bounds).unwrap());

    let report = run_theorem_desk(3, cap, bounds);
    println!("{}", report.summary());
    for (k, v) in &report.counts {
        println!("    {k}: {v}");
    }
    for d in report.details.iter().take(5) {
        println!("    unknown: {} vs {}", d["a"], d["b"]);
    }
}
