//! Double covers of the quadric cone whose branch divisor contains a
//! non-reduced curve `2D`: one row per degree of `D`, with the glueing
//! triple checks.
//!
//! ```bash
//! cargo run --example cone_cover_table
//! ```

use ihodge::scenario::{build_nonnormal_cover, evaluate, cover_table_expected, CoverTableRow};

fn main() {
    println!("type | deg d | deg g | X̄ | g(D̄) | g(D)");
    for expected in cover_table_expected() {
        let cover = build_nonnormal_cover(expected.deg_d).unwrap();
        let ev = evaluate(&cover.scenario).unwrap();
        let s = &cover.summary;
        let row = CoverTableRow {
            hodge_type: ev.hodge_type,
            deg_d: s.deg_d,
            deg_g: s.deg_g,
            xbar: s.xbar.clone(),
            g_dbar: s.g_dbar.clone(),
            g_d: s.g_d,
        };
        assert_eq!(row, expected);
        println!("{}", row.format());
        println!(
            "    D̄ → D branched at {} points ({} with the vertex); {}",
            s.branch_points,
            s.branch_points_with_vertex,
            ev.triple.expect("cover scenarios carry a triple")
        );
    }
}
