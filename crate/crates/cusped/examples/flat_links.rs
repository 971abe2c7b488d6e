//! Affine maps of flat cusp links: exact composition over the rationals,
//! the translation/linear splitting, and the rank bound for finite
//! subgroups of (Q/Z)².

use cusped::flat::{
    format_torus_map, parse_affine_group_file, project_linear, torus_subgroup_rank, Rat,
    TorusAffineMap,
};
use cusped::gl2z::{C, NEG_I};

fn main() {
    let half = Rat::new(1, 2);
    let third = Rat::new(1, 3);

    // Semidirect composition: linear part times translation.
    let f = TorusAffineMap::new(C, (third, Rat::new(0, 1)));
    let g = TorusAffineMap::new(C, (Rat::new(0, 1), third));
    let fg = f.compose(&g);
    println!("({} ) ∘ ( {} ) = {}", format_torus_map(&f), format_torus_map(&g), format_torus_map(&fg));

    // A mixed finite subgroup and its exact-sequence splitting.
    let gens = [
        TorusAffineMap::linear_only(NEG_I),
        TorusAffineMap::translation_only((half, half)),
    ];
    let mut group = vec![TorusAffineMap::identity()];
    loop {
        let mut new = Vec::new();
        for x in &group {
            for gen in &gens {
                let y = gen.compose(x);
                if !group.contains(&y) && !new.contains(&y) {
                    new.push(y);
                }
            }
        }
        if new.is_empty() {
            break;
        }
        group.extend(new);
    }
    let split = project_linear(&group).unwrap();
    println!(
        "\nmixed group of order {}: kernel {} translations × image {} matrices",
        group.len(),
        split.kernel_translations.len(),
        split.image.len()
    );

    // Rank of finite subgroups of (Q/Z)², via Smith normal form.
    println!("\nranks:");
    for gens in [
        vec![(half, Rat::new(0, 1)), (Rat::new(0, 1), half)],
        vec![(third, Rat::new(0, 1))],
        vec![
            (half, Rat::new(0, 1)),
            (Rat::new(1, 4), Rat::new(0, 1)),
            (Rat::new(0, 1), Rat::new(1, 6)),
        ],
        vec![(Rat::new(1, 5), Rat::new(2, 5)), (Rat::new(2, 5), Rat::new(4, 5))],
    ] {
        let shown: Vec<String> = gens
            .iter()
            .map(|(x, y)| format!("({x}, {y})"))
            .collect();
        println!("  {{{}}} -> rank {}", shown.join(", "), torus_subgroup_rank(&gens));
    }

    // The affine group file format.
    let text = "[[-1,0],[0,-1]] ; 0 0\n[[1,0],[0,1]] ; 1/2 1/2\n";
    let parsed = parse_affine_group_file(text).unwrap();
    println!("\nparsed {} maps from the `matrix ; translation` format", parsed.len());
}
