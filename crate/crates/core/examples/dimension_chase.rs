//! Solving an exact sequence for the one term whose dimensions are unknown.
//!
//! ```bash
//! cargo run --example dimension_chase
//! ```

use ihodge::chase::{solve, solve_detailed, ExactSequenceProblem, RankAnnotation, RankRule};
use ihodge::mhs::BigradedDims;

fn main() {
    // 0 → A → B → ? → C → 0 with A ↪ B.
    let p = ExactSequenceProblem::new()
        .known("A", BigradedDims::weight_zero(1))
        .known("B", BigradedDims::weight_zero(3).with(1, 0, 1))
        .unknown("?")
        .known("C", BigradedDims::weight_one(2));
    let sol = solve_detailed(&p).expect("determined");
    println!("? = {}", sol.unknown);
    for c in &sol.components {
        println!("slot {:?}: dims {:?}, ranks {:?}", c.pq, c.dims, c.ranks);
    }

    // A rank annotation settles a sequence that the dimensions alone do not.
    let open = ExactSequenceProblem::new()
        .known("H0", BigradedDims::weight_zero(1))
        .known("H0'", BigradedDims::weight_zero(2))
        .unknown("H1")
        .placeholder("H1'")
        .known("H2", BigradedDims::zero());
    match solve(&open) {
        Ok(d) => println!("unexpectedly solved: {d}"),
        Err(e) => println!("without annotation: {e}"),
    }
    let closed = open.annotate(RankAnnotation::from_term("H1", RankRule::Zero));
    println!("with H1 → H1' zero: H1 = {}", solve(&closed).unwrap());
}
