//! Characteristic polynomials of the asymmetric 6-vertex graphs and their
//! irreducibility certificates.

use sgspec::algebra::irreducibility_probe;
use sgspec::constructions::asymmetric6_all;
use sgspec::io::poly_to_json;
use sgspec::spectral::char_poly;

fn main() {
    for (i, g) in asymmetric6_all().iter().enumerate() {
        let p = char_poly(&g.with_sign(1));
        let probe = irreducibility_probe(&p);
        println!(
            "asymmetric6({}): coefficients {} -> {}",
            i + 1,
            poly_to_json(&p),
            serde_json::to_string(&probe).expect("serializable")
        );
    }
}
