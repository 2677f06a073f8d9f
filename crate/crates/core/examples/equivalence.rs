//! The bounded equivalence oracle in the three group modes.

use vbraid::text::parse_word;
use vbraid::{equivalent, GroupMode, SearchBounds};

fn main() {
    let pairs = [
        ("n=3 a[1,2] a[1,3] a[2,3]", "n=3 a[2,3] a[1,3] a[1,2]"),
        ("n=3 a[1,2]", "n=3 a[2,1]"),
        ("n=3 a[1,2] a[1,2]", "n=3"),
        ("n=4 a[1,2] a[3,4] a[1,2]^-1", "n=4 a[3,4]"),
        ("n=3 a[1,2]", "n=3 a[1,2]^-1"),
    ];
    let bounds = SearchBounds {
        max_states: 50_000,
        ..SearchBounds::default()
    };
    for (a, b) in pairs {
        let (a, b) = (parse_word(a).unwrap(), parse_word(b).unwrap());
        println!("{a}  vs  {b}");
        for mode in GroupMode::ALL {
            let v = equivalent(&a, &b, mode, bounds).unwrap();
            let note = if v.distinct_by_invariant {
                " (exponent sums differ)".to_string()
            } else if v.is_equal() {
                format!(" ({} steps)", v.trace.len())
            } else {
                format!(" ({} states searched)", v.stats.states)
            };
            println!("  {:<9} {:?}{note}", mode.name(), v.status);
        }
    }
}
