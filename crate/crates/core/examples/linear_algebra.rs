//! Exact rational rank, kernel and solve.

use ddquiver::linalg::{kernel_basis, rank, ratio, solve};
use ddquiver::QMatrix;

fn main() {
    let m = QMatrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    println!("rank = {}", rank(&m));
    for v in kernel_basis(&m) {
        let shown: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        println!("kernel vector [{}]", shown.join(", "));
    }
    let b = vec![ratio(1, 2), ratio(1, 1), ratio(0, 1)];
    match solve(&m, &b) {
        Some(x) => {
            let shown: Vec<String> = x.iter().map(|c| c.to_string()).collect();
            println!("solution [{}]", shown.join(", "));
        }
        None => println!("inconsistent"),
    }
}
