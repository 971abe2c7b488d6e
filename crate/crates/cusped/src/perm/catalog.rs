//! Catalog identification of small permutation groups by invariant
//! fingerprints.
//!
//! The fingerprint of a group is its order, element-order histogram,
//! abelianness, and (where needed) degree, sharp transitivity and solvability.
//! All catalog members are distinguishable by these invariants at the orders
//! in scope, so no explicit isomorphism search is performed. PGL(2,5) and
//! PGL(2,7) are recognized by (order, degree, sharp 3-transitivity): PGL(2,5)
//! is abstractly S5, but as a degree-6 group it gets the projective name.

use serde::Serialize;
use std::fmt;

use super::{is_prime, symmetric, PermGroup};

/// Names for the groups the catalog can recognize.
///
/// `Cyclic(n)` and `Dihedral(n)` carry the group order; `Dihedral(4)` is the
/// Klein four-group. Nonabelian order 6 is reported as `S3` rather than the
/// isomorphic dihedral group of order 6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CatalogName {
    Trivial,
    Cyclic(usize),
    Dihedral(usize),
    Quaternion8,
    S3,
    A4,
    S4,
    A5,
    S5,
    Pgl25,
    Pgl27,
    Gamma(usize),
    Other,
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogName::Trivial => write!(f, "1"),
            CatalogName::Cyclic(n) => write!(f, "C{n}"),
            CatalogName::Dihedral(n) => write!(f, "D{n}"),
            CatalogName::Quaternion8 => write!(f, "Q8"),
            CatalogName::S3 => write!(f, "S3"),
            CatalogName::A4 => write!(f, "A4"),
            CatalogName::S4 => write!(f, "S4"),
            CatalogName::A5 => write!(f, "A5"),
            CatalogName::S5 => write!(f, "S5"),
            CatalogName::Pgl25 => write!(f, "PGL(2,5)"),
            CatalogName::Pgl27 => write!(f, "PGL(2,7)"),
            CatalogName::Gamma(p) => write!(f, "Gamma({p})"),
            CatalogName::Other => write!(f, "Other"),
        }
    }
}

pub(super) fn identify(g: &PermGroup) -> CatalogName {
    let order = g.order();
    if order == 1 {
        return CatalogName::Trivial;
    }
    // Projective names come first: they are degree-specific.
    if order == 120 && g.degree() == 6 && g.is_sharply_transitive(3) {
        return CatalogName::Pgl25;
    }
    if order == 336 && g.degree() == 8 && g.is_sharply_transitive(3) {
        return CatalogName::Pgl27;
    }
    let hist = g.element_order_histogram();
    let max_order = hist.last().map(|&(o, _)| o).unwrap_or(1);
    if max_order == order {
        return CatalogName::Cyclic(order);
    }
    if order == 8 && !g.is_abelian() && involution_count(&hist) == 1 {
        return CatalogName::Quaternion8;
    }
    if order == 6 && !g.is_abelian() {
        return CatalogName::S3;
    }
    if is_dihedral(g, &hist) {
        return CatalogName::Dihedral(order);
    }
    if order == 12 && hist == super::alternating(4).element_order_histogram() {
        return CatalogName::A4;
    }
    if order == 24 && hist == symmetric(4).element_order_histogram() {
        return CatalogName::S4;
    }
    if order == 60 && hist == super::alternating(5).element_order_histogram() {
        return CatalogName::A5;
    }
    if order == 120 && hist == symmetric(5).element_order_histogram() {
        return CatalogName::S5;
    }
    let p = g.degree();
    if is_prime(p) && order == p * (p - 1) && g.transitivity_degree() >= 2 && g.is_solvable() {
        return CatalogName::Gamma(p);
    }
    CatalogName::Other
}

fn involution_count(hist: &[(usize, usize)]) -> usize {
    hist.iter()
        .find(|&&(o, _)| o == 2)
        .map(|&(_, c)| c)
        .unwrap_or(0)
}

/// Dihedral of order 2m: either the Klein four-group (m = 2) or a nonabelian
/// group with a cyclic subgroup of index 2 inverted by an involution.
fn is_dihedral(g: &PermGroup, _hist: &[(usize, usize)]) -> bool {
    let order = g.order();
    if order % 2 != 0 || order < 4 {
        return false;
    }
    if order == 4 {
        // Cyclic was ruled out by the caller, so this is the Klein four-group.
        return true;
    }
    if g.is_abelian() {
        return false;
    }
    let m = order / 2;
    let rotation = match g.elements().iter().find(|e| e.order() == m) {
        Some(r) => r,
        None => return false,
    };
    // An involution inverting a cycle of length m >= 3 cannot lie inside it,
    // so <rotation, s> is the whole group and the group is dihedral.
    let r_inv = rotation.inverse();
    g.elements()
        .iter()
        .any(|s| s.order() == 2 && s.compose(rotation).compose(&s.inverse()) == r_inv)
}

#[cfg(test)]
mod tests {
    use super::super::{
        alternating, cyclic, dihedral, klein_four, quaternion8, symmetric, PermGroup, Permutation,
    };
    use super::CatalogName;

    #[test]
    fn identifies_standard_groups() {
        assert_eq!(PermGroup::trivial(3).identify(), CatalogName::Trivial);
        assert_eq!(cyclic(8).identify(), CatalogName::Cyclic(8));
        assert_eq!(klein_four().identify(), CatalogName::Dihedral(4));
        assert_eq!(quaternion8().identify(), CatalogName::Quaternion8);
        assert_eq!(symmetric(3).identify(), CatalogName::S3);
        assert_eq!(dihedral(3).identify(), CatalogName::S3);
        assert_eq!(dihedral(4).identify(), CatalogName::Dihedral(8));
        assert_eq!(dihedral(6).identify(), CatalogName::Dihedral(12));
        assert_eq!(alternating(4).identify(), CatalogName::A4);
        assert_eq!(symmetric(4).identify(), CatalogName::S4);
        assert_eq!(alternating(5).identify(), CatalogName::A5);
        assert_eq!(symmetric(5).identify(), CatalogName::S5);
    }

    #[test]
    fn distinguishes_q8_from_d8() {
        // Both have order 8, but Q8 has a unique involution.
        let q8 = quaternion8();
        let d8 = dihedral(4);
        assert_eq!(q8.identify(), CatalogName::Quaternion8);
        assert_eq!(d8.identify(), CatalogName::Dihedral(8));
    }

    #[test]
    fn sl23_is_other() {
        // SL(2,3) has order 24 like S4 but a unique involution; it must not
        // be identified as S4. Built here from two order-3 matrices acting on
        // the 8 nonzero vectors of F3^2.
        let vecs: Vec<(u8, u8)> = (0..3)
            .flat_map(|a| (0..3).map(move |b| (a, b)))
            .filter(|&(a, b)| a != 0 || b != 0)
            .collect();
        let act = |m: [[u8; 2]; 2]| -> Permutation {
            let images: Vec<usize> = vecs
                .iter()
                .map(|&(x, y)| {
                    let nx = (m[0][0] * x + m[0][1] * y) % 3;
                    let ny = (m[1][0] * x + m[1][1] * y) % 3;
                    vecs.iter().position(|&v| v == (nx, ny)).unwrap()
                })
                .collect();
            Permutation::from_images(images).unwrap()
        };
        let a = act([[1, 1], [0, 1]]);
        let b = act([[1, 0], [1, 1]]);
        let sl23 = PermGroup::close_generators(&[a, b]).unwrap();
        assert_eq!(sl23.order(), 24);
        assert_eq!(sl23.identify(), CatalogName::Other);
    }
}
