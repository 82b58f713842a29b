//! `H¹` of nodal curves from the dual graph, checked against the
//! normalization sequence, and genus bookkeeping for double covers.
//!
//! ```bash
//! cargo run --example nodal_curves
//! ```

use ihodge::chase::solve;
use ihodge::curve::{curve_h1, riemann_hurwitz_double, wps_curve_genus, CurveData, Splitting};

fn main() {
    let curves = [
        ("nodal cubic", CurveData::irreducible("C", 0, 1)),
        ("cycle of three lines", CurveData::rational_cycle("L", 3)),
        ("elliptic curve", CurveData::smooth("E", 1)),
        ("two disjoint conics", CurveData::smooth("Q", 0).disjoint_union(&CurveData::smooth("Q", 0), "'")),
    ];
    for (name, c) in &curves {
        let h1 = curve_h1(c);
        assert_eq!(h1, solve(&c.normalization_sequence()).unwrap());
        println!(
            "{name:<22} components {} nodes {} p_a {} χ {:>2}  H¹ = {h1}",
            c.components().len(),
            c.node_count(),
            c.arithmetic_genus(),
            c.chi()
        );
    }

    println!();
    for (g, b) in [(0, 2), (0, 6), (1, 4)] {
        let cover = riemann_hurwitz_double(g, b, None).unwrap();
        println!("double cover of genus {g} branched at {b} points: genus {}", cover.genus_label());
    }
    // Unbranched covers need the splitting spelled out.
    println!("unbranched, undeclared: {}", riemann_hurwitz_double(2, 0, None).unwrap_err());
    let etale = riemann_hurwitz_double(2, 0, Some(Splitting::Connected)).unwrap();
    println!("connected unbranched cover of genus 2: genus {}", etale.genus_label());
    let split = riemann_hurwitz_double(0, 0, Some(Splitting::Split)).unwrap();
    println!("split unbranched cover of P¹: genus {}, χ {}", split.genus_label(), split.chi());

    println!();
    for m in 1..=6 {
        println!("curve of degree {m} in P(1,1,2): genus {}", wps_curve_genus(m).unwrap());
    }
}
