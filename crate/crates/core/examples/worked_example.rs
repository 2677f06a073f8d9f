//! The six-letter word on four strands: flags, projection and a trace to the
//! empty word.

use vbraid::render::render_evolution;
use vbraid::{classify, d_stab, delete_bad, equivalent, six_letter_example, GroupMode, SearchBounds};

fn main() {
    let beta = six_letter_example();
    println!("beta     = {beta}");
    println!("marks    = {}", classify(&beta).marks());
    print!("{}", render_evolution(&beta));

    let d1 = delete_bad(&beta);
    println!("d(beta)  = {d1}");
    println!("d2(beta) = {}", delete_bad(&d1));
    println!("stable   = {}", d_stab(&beta));

    let eps = vbraid::BraidWord::identity(4).unwrap();
    let v = equivalent(&beta, &eps, GroupMode::PureVirtual, SearchBounds::default()).unwrap();
    println!("beta ~ e in PBn: {:?}, {} steps", v.status, v.trace.len());
    for step in &v.trace {
        println!("  {:<16} {}", step.mv.to_string(), step.word);
    }
    assert_eq!(v.replay(&beta), Some(eps));
}
