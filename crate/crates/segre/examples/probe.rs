use segre::classes::*;
use segre::sym::*;
use segre::weyl::*;

fn main() {
    let t = VariableTable::k_classes(3);
    let shape = ThetaShape::grassmannian(1, 3).unwrap();
    let basis = build_basis(&shape, &t);
    for (s, c) in &basis {
        for (sig, v) in &c.restrictions {
            eprintln!("S_{s}|_{sig}: num {} den {}", v.numerator().num_terms(), v.denominator().num_terms());
        }
    }
    eprintln!("--- product 001*010");
    let l: LabeledString = "001".parse().unwrap();
    let m: LabeledString = "010".parse().unwrap();
    let p = basis[&l].pointwise_mul(&basis[&m]);
    for (sig, v) in &p.restrictions {
        eprintln!("P|_{sig}: num {} den {}", v.numerator().num_terms(), v.denominator().num_terms());
    }
    eprintln!("--- expand");
    let order = shape.all_strings();
    let mut residual = p.clone();
    for nu in &order {
        let diag = basis[nu].at(nu);
        let c = (residual.at(nu) / diag).unwrap();
        eprintln!("c_{nu}: num {} den {}", c.numerator().num_terms(), c.denominator().num_terms());
        if !c.is_zero() {
            eprintln!("  scaling basis...");
            let scaled = basis[nu].scale(&(-&c));
            for (sig, v) in &scaled.restrictions {
                eprintln!("  scaled|_{sig}: num {} den {}", v.numerator().num_terms(), v.denominator().num_terms());
            }
            eprintln!("  adding...");
            residual = residual.add(&scaled);
            for (sig, v) in &residual.restrictions {
                eprintln!("  residual|_{sig}: num {} den {}", v.numerator().num_terms(), v.denominator().num_terms());
            }
        }
    }
    eprintln!("done");
}
