//! Diagrams in σ and v, their pictures, and the map to the a[i,j] generators.

use vbraid::render::render_diagram;
use vbraid::text::parse_diagram;
use vbraid::{classify, o_map};

fn main() {
    for text in ["n=2 s1 s1", "n=2 v1 s1 s1 v1", "n=3 s1 s2 s1 s1 s2 s1", "n=3 s1 v2 s1^-1 v2"] {
        let d = parse_diagram(text).unwrap();
        print!("{}", render_diagram(&d));
        match o_map(&d) {
            Ok(w) => println!("o = {w}   marks {}\n", classify(&w).marks()),
            Err(e) => println!("o undefined: {e}\n"),
        }
    }
}
