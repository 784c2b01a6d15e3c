use segre::classes::*;
use segre::lattice::*;
use segre::weyl::*;
use segre::VariableTable;

fn main() {
    let shape = ThetaShape::grassmannian(1, 3).unwrap();
    let t = VariableTable::k_classes(3);
    let basis = build_basis(&shape, &t);
    for lambda in shape.all_strings() {
        for sigma in shape.all_strings() {
            let lhs = restrict_by_wiring(&lambda, &sigma, &shape, &t);
            let rhs = basis[&lambda].at(&sigma);
            println!(
                "S_{lambda}|_{sigma}: wiring {}  class {}   {}",
                lhs,
                rhs,
                if lhs.eq_sym(rhs) { "OK" } else { "MISMATCH" }
            );
        }
    }
}
