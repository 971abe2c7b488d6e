//! The affine and semilinear groups of small finite fields, PGL(2,q) on the
//! projective line, and the exhaustive audit of the order-72 subgroups of
//! the semilinear group of F9.

use cusped::finfield::{
    frobenius_conjugation_check, gamma9_audit, gamma_group, pgl2, semilinear_compose, Field,
    SemilinearMap,
};

fn main() {
    for q in [2, 3, 5, 7, 9] {
        let gg = gamma_group(q).unwrap();
        println!(
            "Γ({q}): order {:>3}, {}-transitive, solvable: {}",
            gg.group.order(),
            gg.group.transitivity_degree(),
            gg.group.is_solvable()
        );
    }

    let f9 = Field::new(9).unwrap();
    let a = f9.multiplicative_generator();
    println!("\nF9 = F3[i], generator a = index {a} of multiplicative order 8");
    let frob = SemilinearMap { a: 1, b: 0, c: 1 };
    let square = semilinear_compose(&f9, &frob, &frob);
    println!("Frobenius squared is the identity: {}", square == SemilinearMap::identity());
    println!("conjugation identities hold: {}", frobenius_conjugation_check());

    for q in [5, 7] {
        let g = pgl2(q).unwrap();
        println!(
            "\nPGL(2,{q}): order {} on {} points, sharply 3-transitive: {}, {}",
            g.order(),
            g.degree(),
            g.is_sharply_transitive(3),
            g.identify()
        );
    }

    println!("\norder-72 audit of Γ(9):");
    let report = gamma9_audit();
    println!(
        "  {} subgroups in total, {} of order 72, {} qualifying",
        report.total_subgroups, report.order72_count, report.qualifying_count
    );
    for entry in &report.entries {
        if entry.qualifying {
            println!(
                "  qualifying subgroup: stabilizer {} = {{{}}}",
                entry
                    .stabilizer_class
                    .map(|c| c.to_string())
                    .unwrap_or_default(),
                entry.stabilizer_maps.join(", ")
            );
        } else {
            println!(
                "  non-qualifying subgroup (conjugation transitive: {})",
                entry.conjugation_transitive_on_translations
            );
        }
    }
    println!(
        "  dichotomy holds (C8 or Q8, never dihedral): {}",
        report.dichotomy_holds
    );
}
