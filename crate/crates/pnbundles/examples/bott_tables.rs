//! Cohomology tables of twisted differentials from Bott's formula.

use pnbundles::cohomtab::bott_table;

fn main() -> pnbundles::Result<()> {
    for (n, p, t) in [(4, 1, 2), (4, 2, 3), (5, 2, 2)] {
        println!("Ω^{p}({t}) on P^{n}");
        println!("{}", bott_table(n, p, t, -(n as i64) - 2, 1)?);
    }
    Ok(())
}
