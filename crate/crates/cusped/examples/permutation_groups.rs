//! Tour of the exact permutation-group engine: closure, transitivity
//! degrees, stabilizers, solvability, normal structure, identification.

use cusped::perm::{
    alternating, parse_permutation, regular_elementary_check, symmetric, PermGroup,
};

fn main() {
    // Build S4 from a group-file style generator list.
    let gens = vec![
        parse_permutation(4, "(0 1)").unwrap(),
        parse_permutation(4, "(0 1 2 3)").unwrap(),
    ];
    let s4 = PermGroup::close_generators(&gens).unwrap();
    println!("S4: order {}, degree {}", s4.order(), s4.degree());
    println!("  transitivity degree: {}", s4.transitivity_degree());
    println!("  sharply 4-transitive: {}", s4.is_sharply_transitive(4));
    println!("  solvable: {}", s4.is_solvable());

    let stab = s4.stabilizer_restricted(0);
    println!(
        "  point stabilizer: order {} on {} points, identified {}",
        stab.order(),
        stab.degree(),
        stab.identify()
    );

    println!("  abelian normal subgroups:");
    for n in s4.abelian_normal_subgroups().unwrap() {
        let points: Vec<usize> = (0..4).collect();
        println!(
            "    order {} (rank {}), regular elementary: {:?}",
            n.order(),
            if n.order() > 1 { n.abelian_rank() } else { 0 },
            regular_elementary_check(&n, &points)
        );
    }

    // The quotient by the Klein four-group is S3, computed as the coset
    // action.
    let v4 = s4
        .abelian_normal_subgroups()
        .unwrap()
        .into_iter()
        .find(|n| n.order() == 4)
        .unwrap();
    let q = s4.quotient_by(&v4);
    println!("  S4 / V4 = {} of order {}", q.identify(), q.order());

    // Induced actions: A5 on the 5 points collapses blocks only trivially,
    // but D4 on the square respects the diagonal blocks.
    let d4 = cusped::perm::dihedral(4);
    let act = d4.induced_action(&[0, 1, 0, 1]).unwrap();
    println!(
        "D4 on diagonals: image order {}, kernel order {}",
        act.image.order(),
        act.kernel.order()
    );

    // A5 is simple: its only abelian normal subgroup is trivial.
    let a5 = alternating(5);
    println!(
        "A5: k = {}, abelian normal subgroups: {}",
        a5.transitivity_degree(),
        a5.abelian_normal_subgroups().unwrap().len()
    );

    // Subgroup census of S4, up to conjugacy and in total.
    let classes = symmetric(4).subgroup_classes().unwrap();
    println!(
        "S4 subgroups: {} classes, {} total",
        classes.class_count(),
        classes.subgroup_count()
    );
}
