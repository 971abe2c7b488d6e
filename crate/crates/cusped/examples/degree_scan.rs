//! Exhaustive feasibility scan: every transitive subgroup class of the
//! symmetric group of degree 3..6, its transitivity degree, and whether the
//! cusp-action classification admits it.

use cusped::theorems::exhaustive_degree_scan;

fn main() {
    for n in 3..=6 {
        println!("degree {n}:");
        for e in exhaustive_degree_scan(n).unwrap() {
            println!(
                "  {:>10}  order {:>4}  k={}  {}",
                e.name.to_string(),
                e.order,
                e.transitivity,
                if e.verdict.consistent {
                    "consistent".to_string()
                } else {
                    format!(
                        "ruled out: {}",
                        e.verdict.violation.as_deref().unwrap_or("inconsistent")
                    )
                }
            );
        }
    }
}
