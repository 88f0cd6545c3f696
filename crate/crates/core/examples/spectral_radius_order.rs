//! k(λ): the fewest vertices of a graph whose largest eigenvalue is λ.

use sgspec::io::{parse_number, signed_to_json};
use sgspec::search::{spectral_radius_order, SearchOptions};

fn main() {
    for spec in ["1", "2", "sqrt(2)", "sqrt(3)", "(1+sqrt(5))/2"] {
        let lambda = parse_number(spec).expect("parses");
        let r = spectral_radius_order(&lambda, 5, &SearchOptions::default()).expect("within limits");
        let k = r.value.map_or("> 5".to_string(), |v| v.to_string());
        let w = r.witnesses.first().map(signed_to_json);
        println!("k({spec}) = {k}, witness {}", w.map(|w| w.to_string()).unwrap_or_default());
    }
}
