//! GL(2,Z) as an amalgamated free product: element orders, canonical normal
//! forms, finite-subgroup closure, and conjugation into the standard factors.

use cusped::gl2z::{
    amalgam_normal_form, conjugate_into_standard, element_order, finite_closure, FiniteClosure,
    IntMatrix2, A, B, C,
};

fn main() {
    println!("generators:");
    for (name, m) in [("A", A), ("B", B), ("C", C)] {
        println!("  {name} = {m}, order {:?}", element_order(&m));
    }
    let ac = A.mul(&C);
    let bc = B.mul(&C);
    println!("  AC = {ac}, order {:?}", element_order(&ac));
    println!("  BC = {bc}, order {:?}", element_order(&bc));

    println!("\nnormal forms:");
    for m in [
        A.mul(&B),
        IntMatrix2::new(0, -1, 1, 1).unwrap(),
        IntMatrix2::new(5, 2, 2, 1).unwrap(),
        IntMatrix2::new(1, 4, 0, -1).unwrap(),
    ] {
        let word = amalgam_normal_form(&m);
        println!("  {m}  ({} syllables)", word.syllable_count());
        println!("    = {word}");
        assert_eq!(word.product(), m);
    }

    println!("\nfinite subgroups:");
    let shear = IntMatrix2::new(1, 1, 0, 1).unwrap();
    match finite_closure(&[shear]) {
        FiniteClosure::Infinite => println!("  <[[1,1],[0,1]]> is infinite"),
        FiniteClosure::Finite(_) => unreachable!(),
    }
    // A conjugate of <AC> by a shear, recovered into a standard factor.
    let w = IntMatrix2::new(1, 3, 0, 1).unwrap();
    let conj = w.mul(&ac).mul(&w.inverse());
    if let FiniteClosure::Finite(h) = finite_closure(&[conj]) {
        println!("  <{conj}> is finite of order {}", h.len());
        let (g, side) = conjugate_into_standard(&h).unwrap();
        println!("  conjugated into {side:?} by g = {g}");
        for m in &h {
            let image = g.mul(m).mul(&g.inverse());
            println!("    {m}  ->  {image}");
        }
    }
}
