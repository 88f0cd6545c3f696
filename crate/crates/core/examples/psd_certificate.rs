//! Exact semidefiniteness with pivot certificates or negative directions.

use sgspec::algebra::{AlgebraicNumber, ExactMatrix, PsdOutcome};
use sgspec::constructions::h3_hat;

fn main() {
    let g = h3_hat();
    let shifted = ExactMatrix::identity(g.n())
        .scale(&AlgebraicNumber::sqrt(3))
        .and_then(|m| m.sub(&g.adjacency_matrix()))
        .expect("one field");
    match shifted.psd_ldlt().expect("symmetric") {
        PsdOutcome::Psd { pivots } => {
            let zeros = pivots.iter().filter(|p| p.is_zero()).count();
            println!("√3·I − A(Ĥ3±) is PSD; {zeros} zero pivots, rank {}", shifted.rank_exact());
        }
        PsdOutcome::NotPsd { .. } => unreachable!(),
    }

    let neg = ExactMatrix::from_ints(2, 2, &[-1, 0, 0, -1]);
    if let PsdOutcome::NotPsd { witness, value } = neg.psd_ldlt().expect("symmetric") {
        let w: Vec<String> = witness.iter().map(|x| x.to_string()).collect();
        println!("−I is not PSD: x = {w:?}, xᵀMx = {value}");
    }
}
