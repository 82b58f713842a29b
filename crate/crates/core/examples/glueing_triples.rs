//! Numerical conditions on a triple `(X̄, D̄, τ)` for the glued surface to be
//! an I-surface, with intersection numbers on `P(1,1,2)`.
//!
//! ```bash
//! cargo run --example glueing_triples
//! ```

use num_rational::Rational64;

use ihodge::curve::intersection_count;
use ihodge::scenario::{expand_cover, CoverSpec};
use ihodge::wps::{check_triple, log_canonical_square, TripleNumerics, WeightedPlane};

fn main() {
    let cone = WeightedPlane::new(1, 1, 2);
    println!("O(1)² on P(1,1,2) = {}", cone.o1_square());
    println!("a curve of degree 5 meets one of degree 2 in {} points", intersection_count(5, 2));

    for d in 1..=5 {
        let g = 10 - 2 * d;
        println!("(deg d, deg g) = ({d},{g}): (K+D)² = {}", log_canonical_square(g, d).unwrap());
    }
    println!("(deg d, deg g) = (1,6): {}", log_canonical_square(6, 1).unwrap_err());

    let general = expand_cover(&CoverSpec::general(3)).unwrap().numerics;
    println!(
        "\ndeg d = 3: χ(X̄) = {}, χ(D̄) = {}, χ(D) = {}, (K+D)² = {}\n    {}",
        general.chi_xbar,
        general.chi_dbar,
        general.chi_d,
        general.log_canonical_square,
        check_triple(&general)
    );

    let off = TripleNumerics { chi_d: 0, lc_flag: false, log_canonical_square: Rational64::new(1, 2), ..general };
    let report = check_triple(&off);
    println!("perturbed: {report}");
    let failed: Vec<String> = report.failures().iter().map(ToString::to_string).collect();
    println!("    failing: {}", failed.join(", "));
}
