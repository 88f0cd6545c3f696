//! Isomorphism classes of signed graphs by canonical augmentation.

use sgspec::search::{enumerate_signed, Constraints, Limits};

fn main() {
    let count = |c: &Constraints| {
        enumerate_signed(5, c, Limits::default(), Vec::new, |v: &mut Vec<usize>, cl| v.push(cl.graph.n()), |mut a, b| {
            a.extend(b);
            a
        })
        .expect("within limits")
    };
    let (all, counters) = count(&Constraints::default());
    for n in 1..=5 {
        println!("n = {n}: {} signed classes", all.iter().filter(|&&m| m == n).count());
    }
    println!("generated {} children, pruned {}", counters.generated, counters.pruned);

    let (two, _) = count(&Constraints { chi_max: Some(2), ..Default::default() });
    println!("classes on ≤ 5 vertices with χ ≤ 2: {}", two.len());
}
