//! Every verification campaign at its default size, with a summary line each.
//! Pass a seed as the first argument to change the random ones.

use vbraid::campaign::{run_named, CAMPAIGNS};

fn main() {
    let seed = std::env::args().nth(1).map_or(0, |s| s.parse().expect("seed"));
    for name in CAMPAIGNS.iter().filter(|&&n| n != "theorem") {
        let report = run_named(name, None, None, seed).unwrap();
        println!("{}", report.summary());
        for (k, v) in &report.counts {
            println!("    {k}: {v}");
        }
    }
}
