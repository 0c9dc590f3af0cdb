//! Partial double derivations of `T_k(k ⊕ k)`, the free algebra on two
//! letters, satisfy the hypotheses and have the base as constants.

use ddquiver::algebra::Summand;
use ddquiver::iso::constants_basis;
use ddquiver::{check_hypotheses, partial_double_derivations, Algebra, Family};

fn main() -> ddquiver::Result<()> {
    let b = Algebra::diagonal(vec!["e".into()]);
    let e = b.one();
    let summands = ["x", "y"]
        .map(|name| Summand {
            name: name.into(),
            source: e.clone(),
            target: e.clone(),
        })
        .to_vec();
    let t = Algebra::tensor_over(&b, summands, Some(4))?;

    let ds = partial_double_derivations(&t)?;
    let xy = t.parse_element("1|x|1|y|1")?;
    println!("d_x(xy) = {}", ds[0].apply(&xy)?);
    println!("d_y(xy) = {}", ds[1].apply(&xy)?);

    let family = Family::canonical(&t)?;
    print!("{}", check_hypotheses(&family)?);
    let c = constants_basis(&family, 4)?;
    println!("constants: dim {} (dim B = 1)", c.dim());
    Ok(())
}
