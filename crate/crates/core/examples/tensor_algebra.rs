//! `T_B(M)` over `B = k³` with `M = B u⊗v B ⊕ B v⊗w B`, the tensor-algebra
//! form of the path algebra of `u -> v -> w`.

use ddquiver::algebra::{Summand, TensorFactor};
use ddquiver::Algebra;

fn main() -> ddquiver::Result<()> {
    let b = Algebra::diagonal(vec!["u".into(), "v".into(), "w".into()]);
    let e = |name: &str| b.parse_element(name);
    let summands = vec![
        Summand {
            name: "a".into(),
            source: e("u")?,
            target: e("v")?,
        },
        Summand {
            name: "b".into(),
            source: e("v")?,
            target: e("w")?,
        },
    ];
    let t = Algebra::tensor_over(&b, summands, Some(3))?;

    let a = t.parse_element("u|a|v")?;
    let bb = t.parse_element("v|b|w")?;
    println!("(u|a|v) * (v|b|w) = {}", a.mul(&bb)?);
    println!("(v|b|w) * (u|a|v) = {}", bb.mul(&a)?);

    let factors = [
        TensorFactor {
            summand: 0,
            left: e("u")?,
            right: e("v")?,
        },
        TensorFactor {
            summand: 1,
            left: e("v")?,
            right: e("w")?,
        },
    ];
    println!("flatten = {}", t.flatten(&factors)?);
    for d in 0..=3 {
        println!("dim degree {d} = {}", t.graded_basis(d)?.len());
    }
    Ok(())
}
