//! The P-functor on Chern data: P(E) has c(P(E)) c(E^∨) = 1 and rank h^0(E) - rank E.

use pnbundles::chowring::{p_functor, schwarzenberger, ChernVector};
use pnbundles::monadlab::{h0_of, parse_expr};

fn main() -> pnbundles::Result<()> {
    for (n, s) in [(4, "2*O(1) + Om(2,3)"), (5, "O(1) + Om(1,2)"), (6, "Om(1,2)")] {
        let e = parse_expr(s)?;
        let c = e.chern(n)?;
        let h0 = i64::try_from(h0_of(&e, n, 0)?).expect("small");
        let p = p_functor(&c, h0);
        println!("P^{n}: {s}  h0 = {h0}");
        println!("  E    {c}");
        println!("  P(E) {p}");
        assert_eq!(p_functor(&p, h0), c);
    }

    // the congruence on P^4 tells admissible data from impossible data
    for c in [[5, 10, 10, 5], [5, 12, 16, 8], [5, 12, 16, 9]] {
        let e = ChernVector::from_ints(4, 5, &c)?;
        println!("congruence for {c:?}: {}", schwarzenberger(&e)?);
    }
    Ok(())
}
