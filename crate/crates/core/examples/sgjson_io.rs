//! Reading and writing SG-JSON graph files.

use sgspec::constructions::k5_pm;
use sgspec::io::{parse_graph_json, signed_to_json};

fn main() {
    let text = signed_to_json(&k5_pm()).to_string();
    println!("{text}");
    let back = parse_graph_json(&text).expect("valid SG-JSON").to_signed();
    println!("read back {} vertices and {} edges", back.n(), back.edge_count());
    let err = parse_graph_json(r#"{"format":"sgjson/1","kind":"signed","n":2,"edges":[[0,1,2]]}"#).unwrap_err();
    println!("rejected: {err}");
}
