//! Derived parameters and the leading-order size of two-distance sets.

use sgspec::codes::{derive_params, predicted_asymptotics, CodeParameters};
use sgspec::search::{spectral_radius_order, SearchOptions};

fn main() {
    for (a, b) in [((2, 5), (-1, 5)), ((1, 3), (-1, 3)), ((1, 5), (-1, 5)), ((1, 7), (-2, 7))] {
        let params = CodeParameters::from_rationals(a, b).expect("valid");
        let d = derive_params(&params).expect("derived");
        let k = spectral_radius_order(&d.lambda, 6, &SearchOptions::default()).expect("within limits");
        let report = predicted_asymptotics(&params, &[&k]).expect("dispatch");
        println!("α = {}/{}, β = {}/{}: {}", a.0, a.1, b.0, b.1, report.to_json());
    }
}
