//! Signed chromatic numbers with their certificates.

use sgspec::constructions::{complete_negative, signed_hypercube};
use sgspec::graph::{chromatic_number, ColoringOutcome, SignedGraph};

fn describe(name: &str, g: &SignedGraph) {
    match chromatic_number(g) {
        ColoringOutcome::Finite { chi, certificate } => {
            println!("{name}: chi = {chi}, colors {:?}", certificate.colors());
        }
        ColoringOutcome::Infinite { u, v, path } => {
            println!("{name}: chi = infinite, negative edge {u}-{v} closes the positive path {path:?}");
        }
    }
}

fn main() {
    describe("all-negative K4", &complete_negative(4));
    describe("H2", &signed_hypercube(2).expect("built"));
    describe("H3", &signed_hypercube(3).expect("built"));
    let frustrated = SignedGraph::new(3, &[(0, 1, 1), (1, 2, 1), (0, 2, -1)]).expect("valid");
    describe("triangle ++-", &frustrated);
}
