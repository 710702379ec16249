//! Spectra of stable rank 3 bundles G on P^3 with c1 = -1 and the cohomology they determine.

use pnbundles::cohomtab::{enumerate_spectra, spectrum_h1, spectrum_h2};

fn main() -> pnbundles::Result<()> {
    for c2g in 1..=4 {
        for c3g in (-c2g..=c2g * c2g).filter(|c| (c + c2g) % 2 == 0) {
            let all = enumerate_spectra(c2g, c3g, false)?;
            if all.is_empty() {
                continue;
            }
            println!("c2 = {c2g}, c3 = {c3g}:");
            for s in &all {
                let h1: Vec<String> = (-4..=-1).map(|l| spectrum_h1(s, l).map(|x| x.to_string())).collect::<Result<_, _>>()?;
                let h2: Vec<String> = (-2..=1).map(|l| spectrum_h2(s, l).map(|x| x.to_string())).collect::<Result<_, _>>()?;
                println!("  {s:<16} h1(G(-4..-1)) = {}   h2(G(-2..1)) = {}", h1.join(","), h2.join(","));
            }
        }
    }
    Ok(())
}
