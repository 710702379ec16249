//! Admissible Chern data with c1 = 5 and c2 <= 12, with the rule trace behind each record.

use pnbundles::classifier::{filter_chern_records, RuleKind};

fn main() -> pnbundles::Result<()> {
    for n in 4..=6 {
        println!("P^{n}");
        for r in filter_chern_records(n, 0..=12)? {
            let (c2, c3, c4) = r.triple();
            let cited = r.rule_trace.iter().filter(|x| x.kind == RuleKind::Cited).count();
            println!(
                "  rank {:>2}  (c2,c3,c4) = ({c2},{c3},{c4})  {:<20} {} rules, {cited} cited",
                r.rank,
                r.construction,
                r.rule_trace.len()
            );
            if let Some(p) = &r.partner {
                println!("            P-partner {p}");
            }
        }
    }
    Ok(())
}
