//! k_p(λ): the least order-to-multiplicity ratio among signed graphs with
//! χ ≤ p and largest eigenvalue λ.

use sgspec::io::parse_number;
use sgspec::search::{kp_search, SearchOptions};

fn main() {
    for (spec, p, n_max) in [("1", 3, 5), ("sqrt(2)", 3, 4), ("sqrt(3)", 3, 7), ("2", 3, 6)] {
        let lambda = parse_number(spec).expect("parses");
        let r = kp_search(&lambda, p, n_max, &SearchOptions::default()).expect("within limits");
        println!(
            "k_{p}({spec}) over ≤ {n_max} vertices: {} ({} classes)  bounds {}",
            r.value.map_or("none".into(), |v| v.to_string()),
            r.counters.enumerated(),
            serde_json::Value::Object(r.bounds.clone())
        );
    }
}
