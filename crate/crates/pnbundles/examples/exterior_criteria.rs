//! Surjectivity and generation criteria for maps between twisted differentials,
//! decided by multilinear algebra on 2-vectors.

use pnbundles::exterior::{
    decomposable_in_subspace, gg_omega12_check, horrocks_epi_check, horrocks_ker_gg_check, parse_multivector,
    sasakura_gg_check, skew_normal_form, Decomposable, GgVerdict,
};

fn main() -> pnbundles::Result<()> {
    // Ω^3(3) -> Ω^1(1) on P^5 is onto exactly when ω has full rank
    for s in ["e0^e1 + e2^e3 + e4^e5", "e0^e1 + e2^e3", "e0^e5 - 2*e1^e4 + e2^e3 + e0^e1"] {
        let w = parse_multivector(s, Some(6))?;
        let nf = skew_normal_form(&w)?;
        println!("{s:<34} rank {}  epi {}  kernel(1) gg {}", nf.rank, horrocks_epi_check(&w)?, horrocks_ker_gg_check(&w)?);
    }

    // Ω^3(3) ⊕ Ω^2(2) -> Ω^1(1) on P^4
    let w = parse_multivector("e0^e1 + e2^e3", Some(5))?;
    for v in ["e4", "e0", "e0 + e4"] {
        let v = parse_multivector(v, Some(5))?;
        println!("ω = {w}, v = {v}: onto {}", sasakura_gg_check(&w, &v)?);
    }

    // a pencil of 2-vectors always contains a decomposable one in dimension 4
    let a = parse_multivector("e0^e1 + e2^e3", Some(4))?;
    let b = parse_multivector("e0^e2 - e1^e3", Some(4))?;
    match decomposable_in_subspace(&[a.clone(), b.clone()])? {
        Decomposable::Found(x) => println!("decomposable in <{a}, {b}>: {x}"),
        other => println!("span <{a}, {b}>: {other:?}"),
    }

    let ws: Vec<_> = ["e0*^e1* + e2*^e3*", "e0*^e2* + e3*^e4*", "e1*^e4* + e0*^e3*"]
        .iter()
        .map(|s| parse_multivector(s, Some(5)))
        .collect::<Result<_, _>>()?;
    match gg_omega12_check(5, &ws)? {
        GgVerdict::NotGloballyGenerated(x) => println!("not generated; decomposable element in W^⊥: {x}"),
        v => println!("{v:?}"),
    }
    Ok(())
}
