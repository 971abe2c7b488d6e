//! Exact permutation groups, fully enumerated.
//!
//! Groups in scope have order at most a few thousand and degree at most a few
//! hundred, so every group is stored as its complete element set. This makes
//! normal-subgroup search, solvability, and transitivity analysis exact
//! without stabilizer-chain machinery.
//!
//! Points are 0-indexed everywhere. Composition is right-to-left:
//! `(a * b)` applies `b` first, then `a`.

mod catalog;
mod parse;
mod subgroups;

pub use catalog::CatalogName;
pub use parse::{format_group_file, parse_group_file, parse_permutation};
pub use subgroups::SubgroupClasses;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// Default cap on the order of a group built by [`PermGroup::close_generators`].
pub const DEFAULT_ORDER_BOUND: usize = 10_000;

/// Cap on the order of groups whose normal or general subgroup structure is
/// enumerated exhaustively.
pub const SUBGROUP_ENUM_BOUND: usize = 1_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("images do not form a bijection on 0..{degree}: {detail}")]
    InvalidPermutation { degree: usize, detail: String },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group order exceeds bound {bound}")]
    BoundExceeded { bound: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("generator {generator} does not permute the blocks of the projection")]
    NotEquivariant { generator: usize },
    #[error("element set is not closed under composition")]
    NotClosed,
    #[error("parse error: {0}")]
    Parse(String),
}

/// A bijection of `{0, .., n-1}` stored densely by its image vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image vector, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::InvalidPermutation {
                degree: 0,
                detail: "degree must be at least 1".into(),
            });
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(PermError::InvalidPermutation {
                    degree: n,
                    detail: format!("image {x} out of range"),
                });
            }
            if seen[x] {
                return Err(PermError::InvalidPermutation {
                    degree: n,
                    detail: format!("image {x} repeated"),
                });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                if touched[p] {
                    return Err(PermError::InvalidPermutation {
                        degree,
                        detail: format!("point {p} appears in two cycles"),
                    });
                }
                touched[p] = true;
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugated_by(&self, g: &Permutation) -> Permutation {
        g.compose(self).compose(&g.inverse())
    }

    /// Multiplicative order: lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles_with_fixed_points()
            .iter()
            .fold(1, |acc, c| lcm(acc, c.len()))
    }

    /// Nontrivial cycles, each starting at its smallest point, sorted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles_with_fixed_points()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect()
    }

    fn cycles_with_fixed_points(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Cycle-type fingerprint: sorted list of cycle lengths (including 1s).
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self
            .cycles_with_fixed_points()
            .iter()
            .map(|c| c.len())
            .collect();
        t.sort_unstable();
        t
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::ops::Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Falling factorial n·(n−1)···(n−k+1) as u128 (no overflow in scope).
pub fn falling_factorial(n: usize, k: usize) -> u128 {
    (0..k).map(|i| (n - i) as u128).product()
}

/// A finite permutation group with its full element set enumerated.
///
/// Elements are stored sorted lexicographically by image vector, so the
/// identity sits at index 0 and element indices are canonical for a given
/// abstract subgroup of the symmetric group.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, order {}, gens {:?})",
            self.degree,
            self.order(),
            self.generators
        )
    }
}

impl PermGroup {
    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Self {
        let id = Permutation::identity(degree);
        let mut index = HashMap::new();
        index.insert(id.clone(), 0);
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: vec![id],
            index,
        }
    }

    /// Breadth-first closure of the generators, with the default order bound.
    pub fn close_generators(gens: &[Permutation]) -> Result<Self, PermError> {
        Self::close_generators_bounded(gens, DEFAULT_ORDER_BOUND)
    }

    /// Breadth-first closure with an explicit order bound.
    pub fn close_generators_bounded(
        gens: &[Permutation],
        bound: usize,
    ) -> Result<Self, PermError> {
        let degree = match gens.first() {
            Some(g) => g.degree(),
            None => {
                return Err(PermError::InvalidPermutation {
                    degree: 0,
                    detail: "no generators; use PermGroup::trivial for the trivial group".into(),
                })
            }
        };
        for g in gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let elements = close_elements(degree, gens, bound)?;
        Ok(Self::from_sorted_elements(
            degree,
            gens.to_vec(),
            elements,
        ))
    }

    /// Builds a group from a complete element list, verifying closure.
    ///
    /// A small generating set is extracted greedily.
    pub fn from_elements(elements: Vec<Permutation>) -> Result<Self, PermError> {
        let degree = match elements.first() {
            Some(e) => e.degree(),
            None => {
                return Err(PermError::InvalidPermutation {
                    degree: 0,
                    detail: "empty element set".into(),
                })
            }
        };
        let mut sorted: Vec<Permutation> = elements;
        sorted.sort_unstable();
        sorted.dedup();
        let index: HashMap<Permutation, usize> = sorted
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        if !sorted[0].is_identity() {
            return Err(PermError::NotClosed);
        }
        for e in &sorted {
            if e.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    found: e.degree(),
                });
            }
            if !index.contains_key(&e.inverse()) {
                return Err(PermError::NotClosed);
            }
        }
        for a in &sorted {
            for b in &sorted {
                if !index.contains_key(&a.compose(b)) {
                    return Err(PermError::NotClosed);
                }
            }
        }
        let generators = greedy_generators(degree, &sorted);
        Ok(PermGroup {
            degree,
            generators,
            elements: sorted,
            index,
        })
    }

    /// Builds a group from an element list that is closed by construction
    /// (e.g. the full automorphism set of a structure); skips the quadratic
    /// closure verification of [`PermGroup::from_elements`].
    pub(crate) fn from_closed_elements_unchecked(
        degree: usize,
        mut elements: Vec<Permutation>,
    ) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let generators = greedy_generators(degree, &elements);
        Self::from_sorted_elements(degree, generators, elements)
    }

    fn from_sorted_elements(
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
    ) -> Self {
        elements.sort_unstable();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        PermGroup {
            degree,
            generators,
            elements,
            index,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn element_index(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && other
                .generators
                .iter()
                .all(|g| self.elements.iter().all(|e| self.contains(&e.conjugated_by(g))))
    }

    /// Multiset of element orders as a sorted (order, count) list.
    pub fn element_order_histogram(&self) -> Vec<(usize, usize)> {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for e in &self.elements {
            *counts.entry(e.order()).or_insert(0) += 1;
        }
        let mut hist: Vec<(usize, usize)> = counts.into_iter().collect();
        hist.sort_unstable();
        hist
    }

    pub fn center_order(&self) -> usize {
        self.elements
            .iter()
            .filter(|e| self.generators.iter().all(|g| e.compose(g) == g.compose(e)))
            .count()
    }

    /// Orbit of a point under the group.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![x];
        seen[x] = true;
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for g in &self.generators {
                let q = g.image(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    /// Orbits of the natural action, sorted by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut orbits = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let orbit = self.orbit(x);
                for &p in &orbit {
                    seen[p] = true;
                }
                orbits.push(orbit);
            }
        }
        orbits
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    /// The largest `k` such that the group is `k`-transitive (0 if intransitive).
    ///
    /// Decided by computing the orbit of one ordered `k`-tuple of distinct
    /// points for ascending `k`. The `k`-tuple orbit has the full size
    /// n·(n−1)···(n−k+1) exactly when the action is `k`-transitive, and the
    /// ascent stops as soon as that size cannot divide the group order.
    pub fn transitivity_degree(&self) -> usize {
        let n = self.degree;
        let order = self.order() as u128;
        let mut k = 0;
        while k < n {
            let target = falling_factorial(n, k + 1);
            if target > order || order % target != 0 {
                break;
            }
            if !self.is_tuple_transitive(k + 1, target) {
                break;
            }
            k += 1;
        }
        k
    }

    fn is_tuple_transitive(&self, k: usize, target: u128) -> bool {
        // The orbit of a tuple is at most |G|, so memory stays bounded by the
        // group order regardless of n^k.
        let start: Vec<usize> = (0..k).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(start.clone());
        let mut queue = VecDeque::new();
        queue.push_back(start);
        while let Some(t) = queue.pop_front() {
            for g in &self.generators {
                let image: Vec<usize> = t.iter().map(|&p| g.image(p)).collect();
                if !seen.contains(&image) {
                    seen.insert(image.clone());
                    if seen.len() as u128 == target {
                        return true;
                    }
                    queue.push_back(image);
                }
            }
        }
        seen.len() as u128 == target
    }

    /// Sharp k-transitivity: k-transitive with order exactly n·(n−1)···(n−k+1).
    pub fn is_sharply_transitive(&self, k: usize) -> bool {
        if k == 0 || k > self.degree {
            return false;
        }
        self.order() as u128 == falling_factorial(self.degree, k)
            && self.transitivity_degree() >= k
    }

    /// Subgroup of elements fixing the point `x`, still of full degree.
    pub fn stabilizer(&self, x: usize) -> PermGroup {
        assert!(x < self.degree, "point out of range");
        let elems: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|e| e.image(x) == x)
            .cloned()
            .collect();
        let generators = greedy_generators(self.degree, &elems);
        PermGroup::from_sorted_elements(self.degree, generators, elems)
    }

    /// Point stabilizer with its action restricted to the remaining points,
    /// as a group of degree n−1 (points above `x` shift down by one).
    pub fn stabilizer_restricted(&self, x: usize) -> PermGroup {
        let stab = self.stabilizer(x);
        let relabel = |p: usize| if p < x { p } else { p - 1 };
        let elems: Vec<Permutation> = stab
            .elements
            .iter()
            .map(|e| {
                let mut images = vec![0; self.degree - 1];
                for p in 0..self.degree {
                    if p != x {
                        images[relabel(p)] = relabel(e.image(p));
                    }
                }
                Permutation { images }
            })
            .collect();
        let generators = greedy_generators(self.degree - 1, &elems);
        PermGroup::from_sorted_elements(self.degree - 1, generators, elems)
    }

    /// Commutator subgroup `[G, G]`, as the normal closure of the commutators
    /// of the generators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut seeds = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = a
                    .inverse()
                    .compose(&b.inverse())
                    .compose(a)
                    .compose(b);
                if !c.is_identity() {
                    seeds.push(c);
                }
            }
        }
        self.normal_closure(&seeds)
    }

    /// Smallest normal subgroup of `self` containing the given elements.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> PermGroup {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut have: HashSet<Permutation> = HashSet::new();
        let mut pending: VecDeque<Permutation> = seeds.iter().cloned().collect();
        let mut elements = vec![Permutation::identity(self.degree)];
        while let Some(s) = pending.pop_front() {
            if s.is_identity() || have.contains(&s) {
                continue;
            }
            // Is s already inside the current closure?
            if elements.binary_search(&s).is_ok() {
                have.insert(s);
                continue;
            }
            gens.push(s.clone());
            have.insert(s);
            elements = close_elements(self.degree, &gens, self.order())
                .expect("normal closure stays within the ambient group");
            elements.sort_unstable();
            let snapshot: Vec<Permutation> = elements.clone();
            for e in snapshot {
                for g in &self.generators {
                    let c = e.conjugated_by(g);
                    if elements.binary_search(&c).is_err() && !have.contains(&c) {
                        pending.push_back(c);
                    }
                }
            }
        }
        let generators = greedy_generators(self.degree, &elements);
        PermGroup::from_sorted_elements(self.degree, generators, elements)
    }

    /// Derived series down to stabilization; solvable iff it hits the trivial group.
    pub fn is_solvable(&self) -> bool {
        let mut current = self.clone();
        loop {
            let next = current.derived_subgroup();
            if next.order() == 1 {
                return true;
            }
            if next.order() == current.order() {
                return false;
            }
            current = next;
        }
    }

    /// All abelian normal subgroups, including the trivial one.
    ///
    /// Every abelian normal subgroup is a join of abelian normal closures of
    /// cyclic subgroups, so the search closes the set of such closures under
    /// pairwise join, keeping only abelian results. Each returned subgroup is
    /// re-verified normal and abelian.
    pub fn abelian_normal_subgroups(&self) -> Result<Vec<PermGroup>, PermError> {
        if self.order() > SUBGROUP_ENUM_BOUND {
            return Err(PermError::BoundExceeded {
                bound: SUBGROUP_ENUM_BOUND,
            });
        }
        let mut found: HashMap<Vec<Permutation>, PermGroup> = HashMap::new();
        let trivial = PermGroup::trivial(self.degree);
        found.insert(trivial.elements.clone(), trivial);
        for e in &self.elements {
            if e.is_identity() {
                continue;
            }
            let n = self.normal_closure(std::slice::from_ref(e));
            if n.is_abelian() {
                found.entry(n.elements.clone()).or_insert(n);
            }
        }
        loop {
            let snapshot: Vec<PermGroup> = found.values().cloned().collect();
            let mut added = false;
            for (i, x) in snapshot.iter().enumerate() {
                for y in &snapshot[i + 1..] {
                    let mut gens = x.generators.clone();
                    gens.extend_from_slice(&y.generators);
                    if gens.is_empty() {
                        continue;
                    }
                    let join = PermGroup::close_generators_bounded(&gens, self.order())?;
                    if join.is_abelian() && !found.contains_key(&join.elements) {
                        found.insert(join.elements.clone(), join);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        let mut result: Vec<PermGroup> = found.into_values().collect();
        for n in &result {
            assert!(n.is_normal_in(self), "abelian normal candidate not normal");
            assert!(n.is_abelian(), "abelian normal candidate not abelian");
        }
        result.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
        Ok(result)
    }

    /// Minimal number of generators of an abelian group: the largest p-rank
    /// over primes p dividing the order.
    ///
    /// Panics if the group is not abelian.
    pub fn abelian_rank(&self) -> usize {
        assert!(self.is_abelian(), "abelian_rank on a nonabelian group");
        let order = self.order();
        if order == 1 {
            return 0;
        }
        let mut rank = 0;
        for p in prime_divisors(order) {
            // In an abelian group the p-torsion {x : x^p = 1} has size p^r.
            let torsion = self
                .elements
                .iter()
                .filter(|e| pow(e, p).is_identity())
                .count();
            let mut r = 0;
            let mut t = torsion;
            while t % p == 0 && t > 1 {
                t /= p;
                r += 1;
            }
            rank = rank.max(r);
        }
        rank
    }

    /// Quotient of the group by a normal subgroup, realized faithfully as the
    /// permutation action on the left cosets of `n`.
    pub fn quotient_by(&self, n: &PermGroup) -> PermGroup {
        assert!(n.is_normal_in(self), "quotient by a non-normal subgroup");
        // Enumerate cosets by representatives.
        let mut coset_of: HashMap<usize, usize> = HashMap::new();
        let mut reps: Vec<usize> = Vec::new();
        for (i, e) in self.elements.iter().enumerate() {
            if coset_of.contains_key(&i) {
                continue;
            }
            let c = reps.len();
            reps.push(i);
            for h in &n.elements {
                let m = e.compose(h);
                let j = self.index[&m];
                coset_of.insert(j, c);
            }
        }
        let cosets = reps.len();
        let elems: Vec<Permutation> = self
            .elements
            .iter()
            .map(|g| {
                let images: Vec<usize> = reps
                    .iter()
                    .map(|&r| coset_of[&self.index[&g.compose(&self.elements[r])]])
                    .collect();
                Permutation { images }
            })
            .collect();
        PermGroup::from_closed_elements_unchecked(cosets, elems)
    }

    /// Quotient action on the blocks of a surjection `projection: points → blocks`.
    ///
    /// Fails with [`PermError::NotEquivariant`] if some generator does not map
    /// blocks to blocks. The kernel (elements acting trivially on blocks) is
    /// returned alongside the image.
    pub fn induced_action(&self, projection: &[usize]) -> Result<InducedAction, PermError> {
        if projection.len() != self.degree {
            return Err(PermError::DegreeMismatch {
                expected: self.degree,
                found: projection.len(),
            });
        }
        let blocks = match projection.iter().max() {
            Some(&b) => b + 1,
            None => 0,
        };
        let mut seen_block = vec![false; blocks];
        for &b in projection {
            seen_block[b] = true;
        }
        if seen_block.iter().any(|&s| !s) {
            return Err(PermError::Parse("projection misses a block index".into()));
        }
        let block_image = |e: &Permutation, gi: usize| -> Result<Vec<usize>, PermError> {
            let mut image = vec![usize::MAX; blocks];
            for p in 0..self.degree {
                let b = projection[p];
                let ib = projection[e.image(p)];
                if image[b] == usize::MAX {
                    image[b] = ib;
                } else if image[b] != ib {
                    return Err(PermError::NotEquivariant { generator: gi });
                }
            }
            let mut seen = vec![false; blocks];
            for &ib in &image {
                if ib == usize::MAX || seen[ib] {
                    return Err(PermError::NotEquivariant { generator: gi });
                }
                seen[ib] = true;
            }
            Ok(image)
        };
        for (gi, g) in self.generators.iter().enumerate() {
            block_image(g, gi)?;
        }
        // All elements then act on blocks as well; collect images and kernel.
        let mut kernel_elems = Vec::new();
        let mut image_elems = HashSet::new();
        for e in &self.elements {
            let img = block_image(e, usize::MAX)?;
            let perm = Permutation { images: img };
            if perm.is_identity() {
                kernel_elems.push(e.clone());
            }
            image_elems.insert(perm);
        }
        let mut image_sorted: Vec<Permutation> = image_elems.into_iter().collect();
        image_sorted.sort_unstable();
        let image_gens = greedy_generators(blocks, &image_sorted);
        let image = PermGroup::from_sorted_elements(blocks, image_gens, image_sorted);
        kernel_elems.sort_unstable();
        let kernel_gens = greedy_generators(self.degree, &kernel_elems);
        let kernel = PermGroup::from_sorted_elements(self.degree, kernel_gens, kernel_elems);
        Ok(InducedAction { image, kernel })
    }

    /// Identifies the group against the small catalog of named groups.
    pub fn identify(&self) -> CatalogName {
        catalog::identify(self)
    }

    /// Enumerates all subgroups up to conjugacy. See [`SubgroupClasses`].
    pub fn subgroup_classes(&self) -> Result<SubgroupClasses, PermError> {
        SubgroupClasses::enumerate(self)
    }
}

/// Image and kernel of a quotient action on blocks.
#[derive(Debug)]
pub struct InducedAction {
    pub image: PermGroup,
    pub kernel: PermGroup,
}

/// Checks whether `n` acts regularly on `points` as an elementary abelian
/// p-group; returns `(p, m)` with `|n| = p^m` if so.
pub fn regular_elementary_check(n: &PermGroup, points: &[usize]) -> Option<(u64, u32)> {
    if points.is_empty() || n.order() != points.len() {
        return None;
    }
    let point_set: HashSet<usize> = points.iter().copied().collect();
    // Invariance and transitivity on the given points.
    for g in n.generators() {
        for &p in points {
            if !point_set.contains(&g.image(p)) {
                return None;
            }
        }
    }
    let orbit = {
        let mut seen = HashSet::new();
        seen.insert(points[0]);
        let mut queue = vec![points[0]];
        while let Some(p) = queue.pop() {
            for g in n.generators() {
                let q = g.image(p);
                if seen.insert(q) {
                    queue.push(q);
                }
            }
        }
        seen
    };
    if orbit != point_set {
        return None;
    }
    if !n.is_abelian() {
        return None;
    }
    // Elementary abelian: all non-identity elements share one prime order.
    let mut p = 0usize;
    for e in n.elements() {
        if e.is_identity() {
            continue;
        }
        let o = e.order();
        if p == 0 {
            p = o;
        } else if p != o {
            return None;
        }
    }
    if p == 0 || !is_prime(p) {
        return None;
    }
    let mut m = 0u32;
    let mut rest = n.order();
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    if rest != 1 {
        return None;
    }
    Some((p as u64, m))
}

fn pow(e: &Permutation, k: usize) -> Permutation {
    let mut acc = Permutation::identity(e.degree());
    for _ in 0..k {
        acc = acc.compose(e);
    }
    acc
}

pub(crate) fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut primes = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            primes.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

/// BFS closure of a generator list; errors out past `bound` elements.
fn close_elements(
    degree: usize,
    gens: &[Permutation],
    bound: usize,
) -> Result<Vec<Permutation>, PermError> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::new();
    queue.push_back(id);
    let mut elements = Vec::new();
    while let Some(e) = queue.pop_front() {
        elements.push(e.clone());
        for g in gens {
            let f = g.compose(&e);
            if !seen.contains(&f) {
                if seen.len() >= bound {
                    return Err(PermError::BoundExceeded { bound });
                }
                seen.insert(f.clone());
                queue.push_back(f);
            }
        }
    }
    Ok(elements)
}

/// Extracts a small generating set from a sorted element list.
fn greedy_generators(degree: usize, sorted_elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut closed: HashSet<Permutation> = HashSet::new();
    closed.insert(Permutation::identity(degree));
    for e in sorted_elements {
        if !closed.contains(e) {
            gens.push(e.clone());
            let elems = close_elements(degree, &gens, sorted_elements.len())
                .expect("closure of a subset of a group stays within the group");
            closed = elems.into_iter().collect();
            if closed.len() == sorted_elements.len() {
                break;
            }
        }
    }
    gens
}

// ---------------------------------------------------------------------------
// Standard groups used as references and test material.
// ---------------------------------------------------------------------------

/// Symmetric group on n points (natural action).
pub fn symmetric(n: usize) -> PermGroup {
    assert!(n >= 1);
    if n == 1 {
        return PermGroup::trivial(1);
    }
    let transposition = Permutation::from_cycles(n, &[vec![0, 1]]).unwrap();
    let cycle = Permutation::from_cycles(n, &[(0..n).collect()]).unwrap();
    PermGroup::close_generators(&[transposition, cycle]).unwrap()
}

/// Alternating group on n points (natural action).
pub fn alternating(n: usize) -> PermGroup {
    assert!(n >= 3);
    let three_cycle = Permutation::from_cycles(n, &[vec![0, 1, 2]]).unwrap();
    let long = if n % 2 == 1 {
        Permutation::from_cycles(n, &[(0..n).collect()]).unwrap()
    } else {
        Permutation::from_cycles(n, &[(1..n).collect()]).unwrap()
    };
    PermGroup::close_generators(&[three_cycle, long]).unwrap()
}

/// Cyclic group of order n acting regularly on n points.
pub fn cyclic(n: usize) -> PermGroup {
    assert!(n >= 1);
    if n == 1 {
        return PermGroup::trivial(1);
    }
    let cycle = Permutation::from_cycles(n, &[(0..n).collect()]).unwrap();
    PermGroup::close_generators(&[cycle]).unwrap()
}

/// Dihedral group of order 2n acting on the vertices of an n-gon (n ≥ 3),
/// or the Klein four-group on 4 points for n = 2.
pub fn dihedral(n: usize) -> PermGroup {
    assert!(n >= 2);
    if n == 2 {
        return klein_four();
    }
    let rotation = Permutation::from_cycles(n, &[(0..n).collect()]).unwrap();
    let reflection =
        Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
    PermGroup::close_generators(&[rotation, reflection]).unwrap()
}

/// Klein four-group acting regularly on 4 points.
pub fn klein_four() -> PermGroup {
    let a = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
    let b = Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap();
    PermGroup::close_generators(&[a, b]).unwrap()
}

/// Quaternion group of order 8 in its regular action on 8 points.
///
/// Points are the elements 1, −1, i, −i, j, −j, k, −k in that order.
pub fn quaternion8() -> PermGroup {
    // Right multiplication by i and j.
    let i = Permutation::from_images(vec![2, 3, 1, 0, 7, 6, 4, 5]).unwrap();
    let j = Permutation::from_images(vec![4, 5, 6, 7, 1, 0, 3, 2]).unwrap();
    PermGroup::close_generators(&[i, j]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        // (a ∘ b)(1) = a(2) = 2; (a ∘ b)(2) = a(1) = 0.
        let ab = a.compose(&b);
        assert_eq!(ab.image(0), 1);
        assert_eq!(ab.image(1), 2);
        assert_eq!(ab.image(2), 0);
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
    }

    #[test]
    fn cycle_display_round_trip() {
        let p = Permutation::from_cycles(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
        assert_eq!(p.order(), 6);
        assert_eq!(Permutation::identity(4).to_string(), "()");
    }

    #[test]
    fn closure_of_transposition_has_order_two() {
        let t = Permutation::from_cycles(2, &[vec![0, 1]]).unwrap();
        let g = PermGroup::close_generators(&[t]).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn symmetric_group_orders() {
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(symmetric(5).order(), 120);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(alternating(6).order(), 360);
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(dihedral(6).order(), 12);
        assert_eq!(quaternion8().order(), 8);
    }

    #[test]
    fn closure_bound_is_enforced() {
        let t = Permutation::from_cycles(5, &[vec![0, 1]]).unwrap();
        let c = Permutation::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap();
        let err = PermGroup::close_generators_bounded(&[t, c], 100).unwrap_err();
        assert_eq!(err, PermError::BoundExceeded { bound: 100 });
    }

    #[test]
    fn transitivity_degrees_of_standard_groups() {
        assert_eq!(symmetric(4).transitivity_degree(), 4);
        assert_eq!(symmetric(5).transitivity_degree(), 5);
        assert_eq!(alternating(5).transitivity_degree(), 3);
        assert_eq!(alternating(6).transitivity_degree(), 4);
        assert_eq!(cyclic(6).transitivity_degree(), 1);
        assert_eq!(dihedral(5).transitivity_degree(), 1);
        assert_eq!(klein_four().transitivity_degree(), 1);
        // Intransitive group.
        let fix = Permutation::from_cycles(4, &[vec![0, 1]]).unwrap();
        let g = PermGroup::close_generators(&[fix]).unwrap();
        assert_eq!(g.transitivity_degree(), 0);
    }

    #[test]
    fn sharp_transitivity() {
        assert!(symmetric(4).is_sharply_transitive(4));
        assert!(!alternating(5).is_sharply_transitive(2));
        assert!(alternating(5).is_sharply_transitive(3));
        assert!(!symmetric(5).is_sharply_transitive(3));
    }

    #[test]
    fn stabilizer_of_s4_is_s3() {
        let s4 = symmetric(4);
        let stab = s4.stabilizer_restricted(0);
        assert_eq!(stab.degree(), 3);
        assert_eq!(stab.order(), 6);
        assert_eq!(stab.transitivity_degree(), 3);
    }

    #[test]
    fn solvability_by_derived_series() {
        assert!(symmetric(4).is_solvable());
        assert!(!alternating(5).is_solvable());
        assert!(!symmetric(5).is_solvable());
        assert!(dihedral(6).is_solvable());
        assert!(quaternion8().is_solvable());
    }

    #[test]
    fn solvability_matches_brute_force_commutator_oracle() {
        // Oracle: close the set of ALL pairwise commutators, iterate.
        fn oracle(g: &PermGroup) -> bool {
            let mut cur = g.clone();
            for _ in 0..10 {
                let mut comms = Vec::new();
                for a in cur.elements() {
                    for b in cur.elements() {
                        let c = a.inverse().compose(&b.inverse()).compose(a).compose(b);
                        if !c.is_identity() {
                            comms.push(c);
                        }
                    }
                }
                if comms.is_empty() {
                    return true;
                }
                comms.sort_unstable();
                comms.dedup();
                cur = PermGroup::close_generators_bounded(&comms, cur.order()).unwrap();
            }
            false
        }
        for g in [
            symmetric(3),
            symmetric(4),
            alternating(4),
            alternating(5),
            alternating(6),
            dihedral(4),
            dihedral(6),
            quaternion8(),
            cyclic(8),
            klein_four(),
            symmetric(5),
        ] {
            assert!(g.order() <= 400);
            assert_eq!(g.is_solvable(), oracle(&g), "disagreement on {g:?}");
        }
    }

    #[test]
    fn abelian_normal_subgroups_of_s4() {
        let s4 = symmetric(4);
        let ans = s4.abelian_normal_subgroups().unwrap();
        // Trivial plus the Klein four-group.
        assert_eq!(ans.len(), 2);
        assert_eq!(ans[0].order(), 1);
        assert_eq!(ans[1].order(), 4);
        assert_eq!(ans[1].abelian_rank(), 2);
    }

    #[test]
    fn abelian_normal_subgroups_of_a5_trivial_only() {
        let ans = alternating(5).abelian_normal_subgroups().unwrap();
        assert_eq!(ans.len(), 1);
        assert_eq!(ans[0].order(), 1);
    }

    #[test]
    fn abelian_normal_subgroups_of_abelian_group_are_all_subgroups() {
        // C6 has subgroups 1, C2, C3, C6: all abelian and normal.
        let ans = cyclic(6).abelian_normal_subgroups().unwrap();
        let orders: Vec<usize> = ans.iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }

    #[test]
    fn regular_elementary_check_examples() {
        let v4 = klein_four();
        let points: Vec<usize> = (0..4).collect();
        assert_eq!(regular_elementary_check(&v4, &points), Some((2, 2)));
        let c4 = cyclic(4);
        assert_eq!(regular_elementary_check(&c4, &points), None);
        let c5 = cyclic(5);
        assert_eq!(
            regular_elementary_check(&c5, &(0..5).collect::<Vec<_>>()),
            Some((5, 1))
        );
    }

    #[test]
    fn induced_action_identity_projection() {
        let s4 = symmetric(4);
        let act = s4.induced_action(&[0, 1, 2, 3]).unwrap();
        assert_eq!(act.image.order(), 24);
        assert_eq!(act.kernel.order(), 1);
    }

    #[test]
    fn induced_action_on_blocks() {
        // D4 acting on the square 0-1-2-3 preserves the diagonals {0,2},{1,3}.
        let d4 = dihedral(4);
        let act = d4.induced_action(&[0, 1, 0, 1]).unwrap();
        assert_eq!(act.image.order(), 2);
        assert_eq!(act.kernel.order(), 4);
    }

    #[test]
    fn induced_action_rejects_non_blocks() {
        let s4 = symmetric(4);
        let err = s4.induced_action(&[0, 0, 1, 1]).unwrap_err();
        assert!(matches!(err, PermError::NotEquivariant { .. }));
    }

    #[test]
    fn quotient_by_normal_subgroup() {
        let s4 = symmetric(4);
        let v4 = s4.abelian_normal_subgroups().unwrap()[1].clone();
        let q = s4.quotient_by(&v4);
        assert_eq!(q.order(), 6);
        assert_eq!(q.identify(), CatalogName::S3);
    }

    #[test]
    fn lagrange_and_tuple_divisibility_invariants() {
        for g in [
            symmetric(4),
            symmetric(5),
            alternating(5),
            dihedral(6),
            quaternion8(),
            cyclic(7),
        ] {
            let n = g.degree();
            // Order divides degree!.
            let fact: u128 = falling_factorial(n, n);
            assert_eq!(fact % g.order() as u128, 0);
            // k-transitive => n(n-1)...(n-k+1) divides order.
            let k = g.transitivity_degree();
            if k >= 1 {
                assert_eq!(g.order() as u128 % falling_factorial(n, k), 0);
            }
            // Stabilizer of a point of a k-transitive group is (k-1)-transitive.
            if k >= 1 && n > 1 {
                let stab = g.stabilizer_restricted(0);
                assert!(stab.transitivity_degree() + 1 >= k);
            }
        }
    }

    #[test]
    fn closure_is_idempotent() {
        for g in [symmetric(4), alternating(5), dihedral(6), quaternion8()] {
            let reclosed =
                PermGroup::close_generators_bounded(g.elements(), g.order()).unwrap();
            assert_eq!(reclosed.order(), g.order());
            assert!(reclosed.elements() == g.elements());
            let from_all = PermGroup::from_elements(g.elements().to_vec()).unwrap();
            assert!(from_all.elements() == g.elements());
        }
    }

    #[test]
    fn from_elements_detects_non_closure() {
        let t = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let c = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        let id = Permutation::identity(3);
        assert!(PermGroup::from_elements(vec![id.clone(), t.clone(), c.clone()]).is_err());
        let s3: Vec<Permutation> = symmetric(3).elements().to_vec();
        assert_eq!(PermGroup::from_elements(s3).unwrap().order(), 6);
    }
}
