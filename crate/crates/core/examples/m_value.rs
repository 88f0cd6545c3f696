//! The largest √3-multiplicity over graphs with χ ≤ 3, λ₄ ≤ √3 and no
//! induced 5-vertex subgraph with λ₁ > √3.

use sgspec::algebra::AlgebraicNumber;
use sgspec::search::{compute_m, forbidden_family, SearchOptions};

fn main() {
    let s3 = AlgebraicNumber::sqrt(3);
    let family = forbidden_family(&s3, 5).expect("h ≤ 6");
    println!("forbidden family: {} classes, degree cap {:?}", family.len(), family.degree_cap(3));
    let r = compute_m(&s3, 3, 7, &family, &SearchOptions::default()).expect("within limits");
    for row in r.details["by_order"].as_array().expect("rows") {
        println!("N = {}: M = {}", row["n"], row["m"]);
    }
}
