//! Exact eigenvalue multiplicities and largest-eigenvalue comparisons.

use sgspec::algebra::AlgebraicNumber;
use sgspec::constructions::{family_g, k5_pm};
use sgspec::io::parse_lambda;
use sgspec::spectral::{compare_top_eigenvalue, multiplicity, spectrum_float};

fn main() {
    let k5 = k5_pm();
    println!("K5± spectrum (float): {:?}", spectrum_float(&k5));

    let top = parse_lambda("(1+sqrt(33))/2").expect("parses");
    let g = family_g(4);
    let mult = multiplicity(&g, &top).expect("exact");
    let lambda = top.as_quadratic().expect("quadratic");
    let cmp = compare_top_eigenvalue(&g, lambda);
    println!("G_4±: {} vertices, mult((1+√33)/2) = {mult}, λ₁ vs λ: {:?}", g.n(), cmp.ordering);

    let below = compare_top_eigenvalue(&g, &AlgebraicNumber::from_int(3));
    println!("λ₁(G_4±) compared with 3: {:?}", below.ordering);
}
