//! Builds a spherical two-distance code from the Ĥ3± witness, certifies its
//! Gram matrix exactly and recovers the graph from floating-point vectors.

use sgspec::algebra::AlgebraicNumber;
use sgspec::codes::{associated_graph, build_code, realize_vectors, CodeParameters};
use sgspec::constructions::h3_hat;
use sgspec::graph::{canonical_form, chromatic_number, ColoringOutcome};

fn main() {
    let s3 = AlgebraicNumber::sqrt(3);
    let c = AlgebraicNumber::from_ratio(1, 23);
    let alpha = (AlgebraicNumber::from_int(6) * s3.clone() - AlgebraicNumber::from_int(4)) * c.clone();
    let beta = -((AlgebraicNumber::from_int(3) * s3 - AlgebraicNumber::from_int(2)) * c);
    let params = CodeParameters::new(alpha, beta).expect("valid");

    let g = h3_hat();
    let ColoringOutcome::Finite { certificate, .. } = chromatic_number(&g) else { unreachable!() };
    let code = build_code(&g, &certificate, &params, 43).expect("certified");
    println!("N = {} unit vectors in ℝ^{}, Gram rank {} (bound {})", code.size(), code.d, code.rank, code.rank_bound());

    let vectors = realize_vectors(&code).expect("numeric");
    let back = associated_graph(&vectors, &params, 1e-6).expect("two inner products");
    println!("round trip: {}", canonical_form(&back.with_sign(1)) == canonical_form(&code.graph.with_sign(1)));
}
