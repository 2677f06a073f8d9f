//! Redraw an all-good, trivially acting word as a classical diagram, with the
//! letters that had to be virtualized.

use vbraid::text::parse_word;
use vbraid::{d_stab, o_map, reconstruct_classical};

fn main() {
    for text in [
        "n=3 a[1,2] a[2,1]",
        "n=3 a[2,1] a[1,2]^-1",
        "n=3 a[1,2] a[3,1] a[2,3] a[3,2] a[1,3] a[2,1]",
        "n=3 a[1,2] a[1,3]",
        "n=4 a[1,3] a[2,4] a[1,4] a[1,4]^-1 a[2,4]^-1 a[1,3]^-1",
    ] {
        let w = d_stab(&parse_word(text).unwrap());
        println!("{text}\n  stable: {w}");
        match reconstruct_classical(&w) {
            Ok(r) => {
                println!("  sigma:  {}", r.sigma_word);
                println!("  o back: {}", o_map(&r.sigma_word).unwrap());
                println!("  virtualized letters: {}", r.virtualization_count());
            }
            Err(e) => println!("  no reconstruction: {e}"),
        }
    }
}
