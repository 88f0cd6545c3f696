//! Verifies every named construction against its pinned invariants.

use sgspec::constructions::{build_named, gallery_items, verify_construction};

fn main() {
    for (name, params) in gallery_items() {
        let c = build_named(name, &params).expect("known construction");
        let r = verify_construction(&c);
        match r.first_failure() {
            None => println!("{:<24} ok ({} facts)", r.label(), r.checks.len()),
            Some(f) => println!("{:<24} FAILED {}: expected {}, got {}", r.label(), f.fact, f.expected, f.actual),
        }
    }
}
