use segre::classes::*;
use segre::weyl::*;
use segre::VariableTable;
use std::time::Instant;

fn main() {
    for (k, n) in [(1usize, 3usize), (2, 4), (2, 5)] {
        let t = VariableTable::k_classes(n);
        let shape = ThetaShape::grassmannian(k, n).unwrap();
        let start = Instant::now();
        let basis = build_basis(&shape, &t);
        let tb = start.elapsed();
        let start = Instant::now();
        let strings = shape.all_strings();
        let mut count = 0;
        for l in &strings {
            for m in &strings {
                let c = structure_constants(l, m, &basis, &shape);
                count += c.len();
            }
        }
        let ts = start.elapsed();
        println!("Gr({k},{n}): basis {tb:?}, all {count} constants {ts:?}");
    }
}
