//! Exact arithmetic and comparison in Q(√m).

use sgspec::algebra::{format_rational, AlgebraicNumber};
use sgspec::io::parse_number;

fn main() {
    let golden = parse_number("(1+sqrt(5))/2").expect("parses");
    let sq = golden.square();
    println!("φ = {golden}, φ² = {sq}, φ² − φ = {}", sq.clone() - golden.clone());
    println!("⌊φ²⌋ = {}", sq.floor());

    let a = parse_number("7/4").expect("parses");
    let s3 = AlgebraicNumber::sqrt(3);
    println!("√3 vs 7/4: {:?}", s3.cmp_exact(&a).expect("same field"));
    let mp: Vec<String> = parse_number("(1+sqrt(33))/2").expect("parses").minimal_polynomial().iter().map(format_rational).collect();
    println!("minimal polynomial of (1+√33)/2, constant term first: {mp:?}");
    println!("mixing fields fails: {:?}", s3.checked_add(&AlgebraicNumber::sqrt(2)).err());
}
