//! Small finite fields and their affine and semilinear permutation groups.
//!
//! Supports the prime fields F2, F3, F5, F7 and the nine-element field
//! F9 = F3[i]/(i²+1). Over F9 the semilinear maps x ↦ a·x^(3^c) + b form
//! Γ(9) of order 9·8·2 = 144; over a prime field the affine maps x ↦ ax + b
//! form Γ(p) of order p(p−1). PGL(2,q) acts on the projective line
//! F_q ∪ {∞} for q = 5, 7.
//!
//! The audit at the end enumerates every subgroup of Γ(9) of order 72 and
//! classifies the zero-stabilizer part of each qualifying one as cyclic of
//! order 8 or quaternion, never dihedral.

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::perm::{CatalogName, PermGroup, Permutation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FinFieldError {
    #[error("unsupported field size {0}: expected 2, 3, 5, 7, or 9")]
    UnsupportedField(usize),
}

/// A finite field of order 2, 3, 5, 7 (prime) or 9 (= F3[i], i² = −1).
///
/// Elements are indexed 0..q; for F9 the element c0 + c1·i has index
/// c0 + 3·c1. Index 0 is zero and index 1 is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    q: usize,
    p: usize,
}

impl Field {
    pub fn new(q: usize) -> Result<Field, FinFieldError> {
        match q {
            2 | 3 | 5 | 7 => Ok(Field { q, p: q }),
            9 => Ok(Field { q: 9, p: 3 }),
            _ => Err(FinFieldError::UnsupportedField(q)),
        }
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    /// Frobenius exponent count: automorphism group order of the field.
    pub fn frobenius_order(&self) -> usize {
        if self.q == 9 {
            2
        } else {
            1
        }
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        if self.q == 9 {
            let (a0, a1) = (a % 3, a / 3);
            let (b0, b1) = (b % 3, b / 3);
            (a0 + b0) % 3 + 3 * ((a1 + b1) % 3)
        } else {
            (a + b) % self.q
        }
    }

    pub fn neg(&self, a: usize) -> usize {
        if self.q == 9 {
            let (a0, a1) = (a % 3, a / 3);
            (3 - a0) % 3 + 3 * ((3 - a1) % 3)
        } else {
            (self.q - a) % self.q
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        if self.q == 9 {
            let (a0, a1) = (a % 3, a / 3);
            let (b0, b1) = (b % 3, b / 3);
            // (a0 + a1 i)(b0 + b1 i) with i² = −1.
            let re = (a0 * b0 + 2 * a1 * b1) % 3;
            let im = (a0 * b1 + a1 * b0) % 3;
            re + 3 * im
        } else {
            (a * b) % self.q
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "zero has no inverse");
        (1..self.q).find(|&b| self.mul(a, b) == 1).unwrap()
    }

    /// x ↦ x^p, the Frobenius automorphism (identity on prime fields).
    pub fn frobenius(&self, a: usize) -> usize {
        let mut acc = 1;
        for _ in 0..self.p {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = 1;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: usize) -> usize {
        assert!(a != 0);
        let mut acc = a;
        let mut k = 1;
        while acc != 1 {
            acc = self.mul(acc, a);
            k += 1;
        }
        k
    }

    /// Smallest generator of the cyclic group F_q*.
    pub fn multiplicative_generator(&self) -> usize {
        (1..self.q)
            .find(|&a| self.multiplicative_order(a) == self.q - 1)
            .expect("F_q* is cyclic")
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.q
    }
}

/// A map x ↦ a·x^(p^c) + b with a ≠ 0; c = 0 always on prime fields.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct SemilinearMap {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl SemilinearMap {
    pub fn new(field: &Field, a: usize, b: usize, c: usize) -> SemilinearMap {
        assert!(a != 0 && a < field.order() && b < field.order());
        assert!(c < field.frobenius_order());
        SemilinearMap { a, b, c }
    }

    pub fn identity() -> SemilinearMap {
        SemilinearMap { a: 1, b: 0, c: 0 }
    }

    pub fn translation(b: usize) -> SemilinearMap {
        SemilinearMap { a: 1, b, c: 0 }
    }

    pub fn eval(&self, field: &Field, x: usize) -> usize {
        let mut y = x;
        for _ in 0..self.c {
            y = field.frobenius(y);
        }
        field.add(field.mul(self.a, y), self.b)
    }

    /// Display form like `a·x^3 + b` with field-element indices.
    pub fn describe(&self) -> String {
        let power = if self.c == 0 { "x" } else { "x^3" };
        match (self.a, self.b) {
            (1, 0) => power.to_string(),
            (a, 0) => format!("{a}·{power}"),
            (1, b) => format!("{power} + {b}"),
            (a, b) => format!("{a}·{power} + {b}"),
        }
    }
}

/// Exact composite (f ∘ g)(x) = f(g(x)) in the same normal form.
pub fn semilinear_compose(
    field: &Field,
    f: &SemilinearMap,
    g: &SemilinearMap,
) -> SemilinearMap {
    let e = field.frobenius_order();
    let frob = |x: usize, times: usize| {
        let mut y = x;
        for _ in 0..times {
            y = field.frobenius(y);
        }
        y
    };
    SemilinearMap {
        a: field.mul(f.a, frob(g.a, f.c)),
        b: field.add(field.mul(f.a, frob(g.b, f.c)), f.b),
        c: (f.c + g.c) % e,
    }
}

pub fn semilinear_inverse(field: &Field, f: &SemilinearMap) -> SemilinearMap {
    // Solve (f⁻¹ ∘ f) = id: with e the Frobenius period, c' = e − c mod e,
    // a' = frob^{c'}(a)⁻¹, b' = −a'·frob^{c'}(b).
    let e = field.frobenius_order();
    let cp = (e - f.c) % e;
    let frob = |x: usize, times: usize| {
        let mut y = x;
        for _ in 0..times {
            y = field.frobenius(y);
        }
        y
    };
    let ap = field.inv(frob(f.a, cp));
    let bp = field.neg(field.mul(ap, frob(f.b, cp)));
    SemilinearMap { a: ap, b: bp, c: cp }
}

/// The group Γ(q) of all semilinear permutations of F_q, together with its
/// realization as a permutation group on the field elements.
///
/// `maps[i]` is the semilinear form of `group.elements()[i]`.
pub struct GammaGroup {
    pub field: Field,
    pub group: PermGroup,
    pub maps: Vec<SemilinearMap>,
}

impl GammaGroup {
    pub fn map_of(&self, perm: &Permutation) -> Option<&SemilinearMap> {
        self.group.element_index(perm).map(|i| &self.maps[i])
    }
}

/// Builds Γ(q): all x ↦ a·x^(p^c) + b acting on the q field elements by
/// evaluation. |Γ(p)| = p(p−1) for primes; |Γ(9)| = 9·8·2 = 144.
pub fn gamma_group(q: usize) -> Result<GammaGroup, FinFieldError> {
    let field = Field::new(q)?;
    let mut pairs: Vec<(Permutation, SemilinearMap)> = Vec::new();
    for c in 0..field.frobenius_order() {
        for a in 1..q {
            for b in 0..q {
                let map = SemilinearMap { a, b, c };
                let images: Vec<usize> = field.elements().map(|x| map.eval(&field, x)).collect();
                let perm = Permutation::from_images(images)
                    .expect("semilinear maps with a != 0 permute the field");
                pairs.push((perm, map));
            }
        }
    }
    pairs.sort_by(|x, y| x.0.cmp(&y.0));
    pairs.dedup_by(|x, y| x.0 == y.0);
    let (perms, maps): (Vec<Permutation>, Vec<SemilinearMap>) = pairs.into_iter().unzip();
    let group = PermGroup::from_elements(perms).expect("Γ(q) is closed under composition");
    Ok(GammaGroup { field, group, maps })
}

/// PGL(2,q) acting on the q+1 points of the projective line F_q ∪ {∞}
/// (point q is ∞), generated by x↦x+1, x↦gx, and x↦1/x.
pub fn pgl2(q: usize) -> Result<PermGroup, FinFieldError> {
    if q != 5 && q != 7 {
        return Err(FinFieldError::UnsupportedField(q));
    }
    let field = Field::new(q)?;
    let inf = q;
    let translate = Permutation::from_images(
        (0..=q)
            .map(|x| if x == inf { inf } else { field.add(x, 1) })
            .collect(),
    )
    .unwrap();
    let g = field.multiplicative_generator();
    let scale = Permutation::from_images(
        (0..=q)
            .map(|x| if x == inf { inf } else { field.mul(g, x) })
            .collect(),
    )
    .unwrap();
    let invert = Permutation::from_images(
        (0..=q)
            .map(|x| {
                if x == inf {
                    0
                } else if x == 0 {
                    inf
                } else {
                    field.inv(x)
                }
            })
            .collect(),
    )
    .unwrap();
    Ok(PermGroup::close_generators(&[translate, scale, invert])
        .expect("PGL(2,q) stays within the order bound for q = 5, 7"))
}

/// Verifies the two conjugation identities used to steer the Γ(9) analysis:
/// (ax)(x+b)(ax)⁻¹ = x + ab for all a ∈ F9*, b ∈ F9, and
/// (x³)(x+b)(x³)⁻¹ = x + b³ for all b ∈ F9. Also checks (ax³)² = a⁴x.
pub fn frobenius_conjugation_check() -> bool {
    let field = Field::new(9).unwrap();
    let frob_map = SemilinearMap { a: 1, b: 0, c: 1 };
    for b in field.elements() {
        let tb = SemilinearMap::translation(b);
        // Frobenius conjugation sends x+b to x+b³.
        let lhs = semilinear_compose(
            &field,
            &semilinear_compose(&field, &frob_map, &tb),
            &semilinear_inverse(&field, &frob_map),
        );
        if lhs != SemilinearMap::translation(field.frobenius(b)) {
            return false;
        }
        for a in 1..9 {
            let ax = SemilinearMap { a, b: 0, c: 0 };
            let lhs = semilinear_compose(
                &field,
                &semilinear_compose(&field, &ax, &tb),
                &semilinear_inverse(&field, &ax),
            );
            if lhs != SemilinearMap::translation(field.mul(a, b)) {
                return false;
            }
        }
    }
    for a in 1..9 {
        let ax3 = SemilinearMap { a, b: 0, c: 1 };
        let square = semilinear_compose(&field, &ax3, &ax3);
        let expected = SemilinearMap {
            a: field.pow(a, 4),
            b: 0,
            c: 0,
        };
        if square != expected {
            return false;
        }
    }
    true
}

/// Per-subgroup record of the order-72 audit.
#[derive(Clone, Debug, Serialize)]
pub struct Gamma9Subgroup {
    /// Sorted list of the semilinear forms of the zero-stabilizer part.
    pub stabilizer_maps: Vec<String>,
    pub contains_translations: bool,
    pub conjugation_transitive_on_translations: bool,
    pub qualifying: bool,
    /// For qualifying subgroups: whether the unique nontrivial abelian
    /// normal subgroup is exactly the translation subgroup T.
    pub unique_abelian_normal_is_t: Option<bool>,
    /// Catalog name of H ∩ Γ₀(9) for qualifying subgroups.
    pub stabilizer_class: Option<CatalogName>,
}

/// Result of the exhaustive audit of the order-72 subgroups of Γ(9).
#[derive(Clone, Debug, Serialize)]
pub struct Gamma9Report {
    pub total_subgroups: usize,
    pub order72_count: usize,
    pub qualifying_count: usize,
    pub cyclic8_count: usize,
    pub quaternion8_count: usize,
    pub dihedral_count: usize,
    /// True when every qualifying subgroup has stabilizer part C8 or Q8 and
    /// the translation subgroup as its unique nontrivial abelian normal
    /// subgroup.
    pub dichotomy_holds: bool,
    pub entries: Vec<Gamma9Subgroup>,
}

/// Enumerates all order-72 subgroups H of Γ(9); for each, records whether
/// T ⊆ H and whether H conjugates the eight nontrivial translations
/// transitively, and classifies H ∩ Γ₀(9) for the qualifying ones.
pub fn gamma9_audit() -> Gamma9Report {
    let gamma9 = gamma_group(9).expect("9 is supported");
    let g = &gamma9.group;

    // Translation subgroup T and its nontrivial members, as group elements.
    let translation_indices: Vec<usize> = gamma9
        .maps
        .iter()
        .enumerate()
        .filter(|(_, m)| m.a == 1 && m.c == 0)
        .map(|(i, _)| i)
        .collect();
    assert_eq!(translation_indices.len(), 9);
    let t_elements: HashSet<Permutation> = translation_indices
        .iter()
        .map(|&i| g.element(i).clone())
        .collect();

    let classes = g.subgroup_classes().expect("|Γ(9)| = 144 is within bounds");
    let all = classes.all_subgroups();
    let total_subgroups = all.len();

    let mut entries = Vec::new();
    let mut qualifying_count = 0;
    let mut cyclic8 = 0;
    let mut quaternion8 = 0;
    let mut dihedral = 0;
    let mut dichotomy_holds = true;

    for h in all.iter().filter(|h| h.order() == 72) {
        let contains_t = t_elements.iter().all(|t| h.contains(t));
        // Conjugation orbit of the translation x+1 under H.
        let start = g
            .element(translation_indices[1])
            .clone();
        let orbit = {
            let mut seen: HashSet<Permutation> = HashSet::new();
            seen.insert(start.clone());
            let mut queue = vec![start.clone()];
            while let Some(t) = queue.pop() {
                for x in h.generators() {
                    let c = t.conjugated_by(x);
                    if seen.insert(c.clone()) {
                        queue.push(c);
                    }
                }
            }
            seen
        };
        let nontrivial_translations: HashSet<Permutation> = t_elements
            .iter()
            .filter(|t| !t.is_identity())
            .cloned()
            .collect();
        let transitive = orbit == nontrivial_translations;
        let qualifying = contains_t && transitive;

        let mut unique_is_t = None;
        let mut stab_class = None;
        if qualifying {
            qualifying_count += 1;
            let ans = h
                .abelian_normal_subgroups()
                .expect("order 72 is within bounds");
            let nontrivial: Vec<_> = ans.iter().filter(|n| n.order() > 1).collect();
            let is_t = nontrivial.len() == 1
                && nontrivial[0].order() == 9
                && nontrivial[0]
                    .elements()
                    .iter()
                    .all(|e| t_elements.contains(e));
            unique_is_t = Some(is_t);
            if !is_t {
                dichotomy_holds = false;
            }
            // H ∩ Γ₀(9): elements of H fixing the field element 0.
            let stab = h.stabilizer(0);
            assert_eq!(stab.order(), 8);
            let name = stab.identify();
            match name {
                CatalogName::Cyclic(8) => cyclic8 += 1,
                CatalogName::Quaternion8 => quaternion8 += 1,
                CatalogName::Dihedral(8) => {
                    dihedral += 1;
                    dichotomy_holds = false;
                }
                _ => {
                    dichotomy_holds = false;
                }
            }
            stab_class = Some(name);
            let mut stab_maps: Vec<String> = stab
                .elements()
                .iter()
                .map(|e| {
                    gamma9
                        .map_of(e)
                        .expect("stabilizer elements lie in Γ(9)")
                        .describe()
                })
                .collect();
            stab_maps.sort();
            entries.push(Gamma9Subgroup {
                stabilizer_maps: stab_maps,
                contains_translations: contains_t,
                conjugation_transitive_on_translations: transitive,
                qualifying,
                unique_abelian_normal_is_t: unique_is_t,
                stabilizer_class: stab_class,
            });
        } else {
            entries.push(Gamma9Subgroup {
                stabilizer_maps: Vec::new(),
                contains_translations: contains_t,
                conjugation_transitive_on_translations: transitive,
                qualifying,
                unique_abelian_normal_is_t: unique_is_t,
                stabilizer_class: stab_class,
            });
        }
    }

    let order72_count = entries.len();
    Gamma9Report {
        total_subgroups,
        order72_count,
        qualifying_count,
        cyclic8_count: cyclic8,
        quaternion8_count: quaternion8,
        dihedral_count: dihedral,
        dichotomy_holds,
        entries,
    }
}

/// Counts the 2×2 matrices over F3 of determinant 1; the order of SL(2,3).
pub fn sl23_order_by_count() -> usize {
    let field = Field::new(3).unwrap();
    let mut count = 0;
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                for d in 0..3 {
                    let det = field.add(field.mul(a, d), field.neg(field.mul(b, c)));
                    if det == 1 {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}
