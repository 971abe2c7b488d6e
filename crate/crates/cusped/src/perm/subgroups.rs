//! Exhaustive subgroup enumeration for small groups.
//!
//! Subgroups are found by cyclic extension: every subgroup K arises as
//! ⟨H, g⟩ for a maximal subgroup H of K and any g in K outside H, so closing
//! the set of known conjugacy-class representatives under one-element
//! extensions reaches every class. Extensions of a representative H only
//! range over orbit representatives of the conjugation action of the
//! normalizer N(H), which keeps the candidate count small.
//!
//! Classes are deduplicated by the lexicographically minimal conjugate of the
//! sorted element-index set.

use std::collections::HashSet;

use super::{PermError, PermGroup, Permutation, SUBGROUP_ENUM_BOUND};

/// All subgroups of a group, organized by conjugacy class.
pub struct SubgroupClasses {
    parent: PermGroup,
    conj: Vec<u16>,
    /// One sorted element-index set per conjugacy class.
    class_reps: Vec<Vec<u16>>,
}

impl SubgroupClasses {
    pub(super) fn enumerate(g: &PermGroup) -> Result<Self, PermError> {
        let m = g.order();
        if m > SUBGROUP_ENUM_BOUND {
            return Err(PermError::BoundExceeded {
                bound: SUBGROUP_ENUM_BOUND,
            });
        }
        let mult = multiplication_table(g);
        let inv = inversion_table(m, &mult);
        let conj = conjugation_table(m, &mult, &inv);

        let mut reps: Vec<Vec<u16>> = Vec::new();
        let mut by_canon: HashSet<Vec<u16>> = HashSet::new();
        let mut by_exact: HashSet<Vec<u16>> = HashSet::new();
        let mut worklist: Vec<usize> = Vec::new();

        let trivial = vec![0u16];
        by_canon.insert(canonical_conjugate(&trivial, m, &conj));
        by_exact.insert(trivial.clone());
        reps.push(trivial);
        worklist.push(0);

        while let Some(idx) = worklist.pop() {
            let h = reps[idx].clone();
            if h.len() == m {
                continue;
            }
            let in_h = index_set(&h, m);
            let normalizer: Vec<u16> = (0..m as u16)
                .filter(|&x| {
                    h.iter()
                        .all(|&e| in_h[conj[x as usize * m + e as usize] as usize])
                })
                .collect();
            // Orbit representatives of N(H)-conjugation on elements outside H.
            let mut orbit_seen = vec![false; m];
            for x in 0..m as u16 {
                if orbit_seen[x as usize] || in_h[x as usize] {
                    continue;
                }
                let mut stack = vec![x];
                orbit_seen[x as usize] = true;
                while let Some(y) = stack.pop() {
                    for &n in &normalizer {
                        let z = conj[n as usize * m + y as usize];
                        if !orbit_seen[z as usize] {
                            orbit_seen[z as usize] = true;
                            stack.push(z);
                        }
                    }
                }
                let k = index_closure(&h, x, &mult, m);
                if by_exact.contains(&k) {
                    continue;
                }
                let canon = canonical_conjugate(&k, m, &conj);
                by_exact.insert(k.clone());
                if by_canon.insert(canon) {
                    reps.push(k);
                    worklist.push(reps.len() - 1);
                }
            }
        }

        reps.sort_unstable_by(|a, b| (a.len(), &a[..]).cmp(&(b.len(), &b[..])));
        Ok(SubgroupClasses {
            parent: g.clone(),
            conj,
            class_reps: reps,
        })
    }

    pub fn class_count(&self) -> usize {
        self.class_reps.len()
    }

    /// One representative per conjugacy class, materialized as groups.
    pub fn representatives(&self) -> Vec<PermGroup> {
        self.class_reps
            .iter()
            .map(|r| self.materialize(r))
            .collect()
    }

    /// Every subgroup: all conjugates of all class representatives.
    pub fn all_subgroups(&self) -> Vec<PermGroup> {
        self.all_subgroup_index_sets()
            .iter()
            .map(|s| self.materialize(s))
            .collect()
    }

    /// Total number of subgroups.
    pub fn subgroup_count(&self) -> usize {
        self.all_subgroup_index_sets().len()
    }

    fn all_subgroup_index_sets(&self) -> Vec<Vec<u16>> {
        let m = self.parent.order();
        let mut seen: HashSet<Vec<u16>> = HashSet::new();
        for rep in &self.class_reps {
            for x in 0..m {
                let mut conjugated: Vec<u16> = rep
                    .iter()
                    .map(|&e| self.conj[x * m + e as usize])
                    .collect();
                conjugated.sort_unstable();
                seen.insert(conjugated);
            }
        }
        let mut sets: Vec<Vec<u16>> = seen.into_iter().collect();
        sets.sort_unstable_by(|a, b| (a.len(), &a[..]).cmp(&(b.len(), &b[..])));
        sets
    }

    fn materialize(&self, indices: &[u16]) -> PermGroup {
        let elems: Vec<Permutation> = indices
            .iter()
            .map(|&i| self.parent.element(i as usize).clone())
            .collect();
        PermGroup::from_elements(elems).expect("subgroup index sets are closed")
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }
}

fn multiplication_table(g: &PermGroup) -> Vec<u16> {
    let m = g.order();
    let mut table = vec![0u16; m * m];
    for (i, a) in g.elements().iter().enumerate() {
        for (j, b) in g.elements().iter().enumerate() {
            let prod = a.compose(b);
            table[i * m + j] = g
                .element_index(&prod)
                .expect("group is closed under composition") as u16;
        }
    }
    table
}

fn inversion_table(m: usize, mult: &[u16]) -> Vec<u16> {
    let mut inv = vec![0u16; m];
    for i in 0..m {
        for j in 0..m {
            if mult[i * m + j] == 0 {
                inv[i] = j as u16;
                break;
            }
        }
    }
    inv
}

fn conjugation_table(m: usize, mult: &[u16], inv: &[u16]) -> Vec<u16> {
    // conj[x*m + h] = x h x^{-1}
    let mut conj = vec![0u16; m * m];
    for x in 0..m {
        let xi = inv[x] as usize;
        for h in 0..m {
            let xh = mult[x * m + h] as usize;
            conj[x * m + h] = mult[xh * m + xi];
        }
    }
    conj
}

fn index_set(h: &[u16], m: usize) -> Vec<bool> {
    let mut set = vec![false; m];
    for &e in h {
        set[e as usize] = true;
    }
    set
}

/// Closure of H ∪ {x} inside the parent, via the multiplication table.
fn index_closure(h: &[u16], x: u16, mult: &[u16], m: usize) -> Vec<u16> {
    let mut in_k = index_set(h, m);
    in_k[x as usize] = true;
    let mut k: Vec<u16> = h.to_vec();
    k.push(x);
    // Repeatedly multiply pairs until no new element appears.
    let mut frontier: Vec<u16> = vec![x];
    while let Some(y) = frontier.pop() {
        let mut i = 0;
        while i < k.len() {
            let z = k[i];
            for &prod in &[
                mult[y as usize * m + z as usize],
                mult[z as usize * m + y as usize],
            ] {
                if !in_k[prod as usize] {
                    in_k[prod as usize] = true;
                    k.push(prod);
                    frontier.push(prod);
                }
            }
            i += 1;
        }
    }
    k.sort_unstable();
    k
}

/// Lexicographically minimal conjugate of the sorted index set.
fn canonical_conjugate(h: &[u16], m: usize, conj: &[u16]) -> Vec<u16> {
    let mut best: Option<Vec<u16>> = None;
    for x in 0..m {
        let mut c: Vec<u16> = h.iter().map(|&e| conj[x * m + e as usize]).collect();
        c.sort_unstable();
        match &best {
            Some(b) if &c >= b => {}
            _ => best = Some(c),
        }
    }
    best.unwrap()
}

#[cfg(test)]
mod tests {
    use super::super::{alternating, dihedral, quaternion8, symmetric};

    #[test]
    fn subgroup_classes_of_s4() {
        // S4 has 11 conjugacy classes of subgroups and 30 subgroups in total.
        let classes = symmetric(4).subgroup_classes().unwrap();
        assert_eq!(classes.class_count(), 11);
        assert_eq!(classes.subgroup_count(), 30);
    }

    #[test]
    fn subgroup_classes_of_a4() {
        // A4: trivial, C2 (3), C3 (4), V4, A4 => 5 classes, 10 subgroups.
        let classes = alternating(4).subgroup_classes().unwrap();
        assert_eq!(classes.class_count(), 5);
        assert_eq!(classes.subgroup_count(), 10);
    }

    #[test]
    fn subgroup_classes_of_q8_and_d8() {
        // Q8: 1, Z=C2, three C4, Q8 => 6 subgroups, 6 classes (all normal).
        let q8 = quaternion8().subgroup_classes().unwrap();
        assert_eq!(q8.subgroup_count(), 6);
        assert_eq!(q8.class_count(), 6);
        // D8: 10 subgroups, 8 classes.
        let d8 = dihedral(4).subgroup_classes().unwrap();
        assert_eq!(d8.subgroup_count(), 10);
        assert_eq!(d8.class_count(), 8);
    }

    #[test]
    fn subgroup_classes_of_s5() {
        let classes = symmetric(5).subgroup_classes().unwrap();
        assert_eq!(classes.class_count(), 19);
        assert_eq!(classes.subgroup_count(), 156);
    }

    #[test]
    fn every_representative_is_a_genuine_subgroup() {
        let s4 = symmetric(4);
        let classes = s4.subgroup_classes().unwrap();
        for rep in classes.representatives() {
            assert!(rep.is_subgroup_of(&s4));
            assert_eq!(s4.order() % rep.order(), 0);
        }
    }
}
