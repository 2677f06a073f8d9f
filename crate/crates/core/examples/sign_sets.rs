//! Sign sets, the action of letters, realizability and adjacency.

use vbraid::text::parse_sign_set;
use vbraid::{act, adjacent, is_realizable, BraidWord, Letter, SignSet};

fn main() {
    let b = SignSet::canonical(4).unwrap();
    let w = BraidWord::new(4, vec![Letter::pos(1, 3), Letter::pos(2, 4)]).unwrap();
    let s = act(&w, b).unwrap();
    println!("B          = {b}");
    println!("B . {w:<20} = {s}");
    println!("realizable : {:?}", is_realizable(s).map(|r| r.order().to_vec()));
    println!("1,4 adjacent: {}", adjacent(s, 1, 4).unwrap());

    let cyclic = parse_sign_set("n=3 + - +").unwrap();
    println!("{cyclic} realizable: {}", is_realizable(cyclic).is_some());

    let n = 4;
    let total = SignSet::all(n).unwrap().count();
    let linear = SignSet::all(n).unwrap().filter(|&s| is_realizable(s).is_some()).count();
    println!("n={n}: {linear} of {total} sign sets come from a line order");
}
