//! Exhaustive check of mult(√3) ≤ 3n/7 under χ ≤ 3, plus the cubic
//! A² = 3I reduction on orders 4, 6 and 8.

use num_bigint::BigInt;
use num_rational::BigRational;
use sgspec::algebra::AlgebraicNumber;
use sgspec::search::{reduce_order, verify_mult_bound, SearchOptions};

fn main() {
    let c = BigRational::new(BigInt::from(3), BigInt::from(7));
    let r = verify_mult_bound(&AlgebraicNumber::sqrt(3), 3, 6, &c, &SearchOptions::default()).expect("within limits");
    println!("verdict {:?}, largest ratio {}", r.pass, r.value.map_or("none".into(), |v| v.to_string()));
    println!("{}", serde_json::Value::Object(r.details.clone()));
    for n in [4, 6, 8] {
        let red = reduce_order(n);
        println!(
            "n = {n}: {} cubic graphs, {} signings with A² = 3I in {} classes, {} with χ ≤ 3",
            red.cubic_graphs, red.square_3i, red.square_3i_classes, red.chi_at_most_3
        );
    }
}
