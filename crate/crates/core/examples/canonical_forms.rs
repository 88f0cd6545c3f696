//! Canonical forms: relabelings agree, switching generally does not.

use sgspec::constructions::signed_hypercube;
use sgspec::graph::{canonical_form, canonical_labeling};

fn main() {
    let h3 = signed_hypercube(3).expect("built");
    let shuffled = h3.permute(&[5, 2, 7, 0, 3, 6, 1, 4]);
    println!("relabeled copy has the same key: {}", canonical_form(&h3) == canonical_form(&shuffled));

    let switched = h3.switch(&[0]);
    println!("switching vertex 0 keeps the key: {}", canonical_form(&h3) == canonical_form(&switched));

    let lab = canonical_labeling(&h3);
    println!("canonical positions {:?}, key {} bytes", lab.perm, lab.code.len());
}
