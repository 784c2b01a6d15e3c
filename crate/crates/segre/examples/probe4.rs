use segre::rmatrices::*;
use std::time::Instant;
fn main() {
    let start = Instant::now();
    let r = verify_ybe_suite();
    println!("ybe suite in {:?}", start.elapsed());
    for item in &r.items {
        if !item.pass {
            println!("{}: FAIL {}", item.name, item.detail.clone().unwrap_or_default());
        }
    }
    println!("all pass: {}", r.all_pass());
}
