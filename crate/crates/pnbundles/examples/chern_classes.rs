//! Whitney sums, twists, duals and Euler characteristics of a few bundles on P^4.

use pnbundles::chowring::{chern_dual, chern_twist, euler_characteristic};
use pnbundles::monadlab::parse_expr;

fn main() -> pnbundles::Result<()> {
    let n = 4;
    for s in ["5*O(1)", "4*O(1) + T(-1)", "2*O(1) + Om(1,2)", "O(1) + T(-1) + Om(1,2)"] {
        let e = parse_expr(s)?;
        let c = e.chern(n)?;
        println!("{e:<24} {c}");
        println!("  dual       {}", chern_dual(&c));
        println!("  twist -1   {}", chern_twist(&c, -1));
        let chis: Vec<String> = (-3..=1).map(|l| euler_characteristic(&c, l).map(|x| x.to_string())).collect::<Result<_, _>>()?;
        println!("  χ(E(l)), l = -3..1: {}", chis.join(" "));
    }
    Ok(())
}
