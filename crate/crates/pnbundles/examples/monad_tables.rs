//! Cohomology of bundles given by short exact sequences and monads, with
//! entries the long exact sequences cannot fix left undetermined.

use num::BigInt;
use pnbundles::monadlab::{
    complex_cohomology_bundle, display_omega321, display_omega42, monad_cohomology_table, monad_cohomology_table_with,
    parse_expr, ComplexExpr, KnownDim,
};

fn main() -> pnbundles::Result<()> {
    let e = display_omega321().twist(1);
    println!("{e}\n  {}", complex_cohomology_bundle(&e, 4)?);
    println!("{}", monad_cohomology_table(&e, 4, -5, 1)?);

    let f = display_omega42().twist(1);
    println!("{f}\n  {}", complex_cohomology_bundle(&f, 5)?);
    println!("{}", monad_cohomology_table(&f, 5, -6, 1)?);

    // F(-2) for a rank 4 bundle F on P^3 with c = (5, 12, 8); h^0(F(-2)) is
    // not forced by the sequences, and supplying it fixes h^1(F(-2))
    let m = ComplexExpr::monad(parse_expr("O(-1)")?, parse_expr("4*O(0) + 2*O(-1)")?, parse_expr("O(2)")?);
    println!("{m}\n  twisted by 2: {}", complex_cohomology_bundle(&m.twist(2), 3)?);
    println!("{}", monad_cohomology_table(&m, 3, -2, 1)?);
    let known = [KnownDim { q: 0, l: 0, value: BigInt::from(0) }];
    println!("{}", monad_cohomology_table_with(&m, 3, -2, 1, &known)?);
    Ok(())
}
