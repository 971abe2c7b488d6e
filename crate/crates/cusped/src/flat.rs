//! Affine transformation groups of flat cusp links, over exact rationals.
//!
//! A flat torus link has affine group fitting in the exact sequence
//! 1 → R²/Z² → Aff(L) → GL(2,Z) → 1; every finite subgroup has rational
//! translation parts, so the rational model here is exact for everything in
//! scope. A flat Klein bottle link is modeled only at the level the
//! stabilizer arguments need: the (Z/2)² quotient and a rational kernel
//! coordinate in R/Z.
//!
//! Finite subgroups of (Q/Z)² have rank at most 2; the rank is computed by
//! lifting generators together with the standard lattice to an integer
//! lattice and reading off the Smith normal form.

use std::collections::HashSet;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::gl2z::{IntMatrix2, I};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FlatError {
    #[error("the given element set is not closed under composition")]
    NotClosed,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Rat = Rational64;

/// Reduces a rational into [0, 1).
pub fn mod1(q: Rat) -> Rat {
    let f = q.fract();
    if f.is_negative() {
        f + Rational64::from_integer(1)
    } else {
        f
    }
}

/// An affine map of the flat torus: x ↦ Mx + t with M in GL(2,Z) and the
/// translation taken modulo 1 in each coordinate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct TorusAffineMap {
    pub linear: IntMatrix2,
    pub translation: (Rat, Rat),
}

impl TorusAffineMap {
    pub fn new(linear: IntMatrix2, translation: (Rat, Rat)) -> Self {
        TorusAffineMap {
            linear,
            translation: (mod1(translation.0), mod1(translation.1)),
        }
    }

    pub fn identity() -> Self {
        TorusAffineMap::new(I, (Rat::zero(), Rat::zero()))
    }

    pub fn translation_only(t: (Rat, Rat)) -> Self {
        TorusAffineMap::new(I, t)
    }

    pub fn linear_only(m: IntMatrix2) -> Self {
        TorusAffineMap::new(m, (Rat::zero(), Rat::zero()))
    }

    /// (M₁,t₁)∘(M₂,t₂) = (M₁M₂, M₁t₂ + t₁ mod 1): applies the right map first.
    pub fn compose(&self, other: &TorusAffineMap) -> TorusAffineMap {
        let m = self.linear.mul(&other.linear);
        let rotated = apply_linear(&self.linear, other.translation);
        TorusAffineMap::new(
            m,
            (rotated.0 + self.translation.0, rotated.1 + self.translation.1),
        )
    }

    pub fn inverse(&self) -> TorusAffineMap {
        let mi = self.linear.inverse();
        let rotated = apply_linear(&mi, self.translation);
        TorusAffineMap::new(mi, (-rotated.0, -rotated.1))
    }
}

fn apply_linear(m: &IntMatrix2, t: (Rat, Rat)) -> (Rat, Rat) {
    (
        Rat::from_integer(m.a) * t.0 + Rat::from_integer(m.b) * t.1,
        Rat::from_integer(m.c) * t.0 + Rat::from_integer(m.d) * t.1,
    )
}

/// Splitting of a finite subgroup of Aff(torus) along the linear projection.
#[derive(Debug)]
pub struct LinearSplit {
    /// Translations in the kernel part K ∩ G1, as reduced rational pairs.
    pub kernel_translations: Vec<(Rat, Rat)>,
    /// Distinct linear parts: the image in GL(2,Z).
    pub image: Vec<IntMatrix2>,
}

/// Splits a composition-closed finite set of torus affine maps into its
/// pure-translation kernel and its linear image.
pub fn project_linear(group: &[TorusAffineMap]) -> Result<LinearSplit, FlatError> {
    let set: HashSet<TorusAffineMap> = group.iter().copied().collect();
    if set.is_empty() || !set.contains(&TorusAffineMap::identity()) {
        return Err(FlatError::NotClosed);
    }
    for f in &set {
        for g in &set {
            if !set.contains(&f.compose(g)) {
                return Err(FlatError::NotClosed);
            }
        }
    }
    let mut kernel_translations: Vec<(Rat, Rat)> = set
        .iter()
        .filter(|f| f.linear == I)
        .map(|f| f.translation)
        .collect();
    kernel_translations.sort_unstable();
    let mut image: Vec<IntMatrix2> = set
        .iter()
        .map(|f| f.linear)
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    image.sort_unstable_by_key(|m| (m.a, m.b, m.c, m.d));
    Ok(LinearSplit {
        kernel_translations,
        image,
    })
}

/// Rank of the finite subgroup of (Q/Z)² generated by rational pairs.
///
/// The generators and the standard lattice are lifted to an integer lattice
/// L with DZ² ⊆ L ⊆ Z² (D the common denominator); the Smith normal form of
/// a generating matrix of L gives H = L/DZ² ≅ Z/(D/d₁) ⊕ Z/(D/d₂), whence
/// the rank. Always at most 2.
pub fn torus_subgroup_rank(generators: &[(Rat, Rat)]) -> usize {
    if generators.is_empty() {
        return 0;
    }
    let reduced: Vec<(Rat, Rat)> = generators
        .iter()
        .map(|&(x, y)| (mod1(x), mod1(y)))
        .collect();
    let mut d: i64 = 1;
    for &(x, y) in &reduced {
        d = lcm(d, *x.denom());
        d = lcm(d, *y.denom());
    }
    let mut rows: Vec<[i128; 2]> = reduced
        .iter()
        .map(|&(x, y)| {
            [
                (*x.numer() as i128) * (d / x.denom()) as i128,
                (*y.numer() as i128) * (d / y.denom()) as i128,
            ]
        })
        .collect();
    rows.push([d as i128, 0]);
    rows.push([0, d as i128]);
    let diag = smith_diagonal(rows);
    debug_assert_eq!(diag.len(), 2);
    diag.iter()
        .filter(|&&di| {
            debug_assert!(di != 0 && (d as i128) % di == 0);
            (d as i128) / di > 1
        })
        .count()
}

fn gcd64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd64(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd64(a, b) * b
    }
}

/// Diagonal of the Smith normal form of an integer matrix given by rows.
///
/// Returns min(rows, cols) entries d₁ | d₂ | ..., nonnegative, padded with
/// zeros for rank deficiency.
pub fn smith_diagonal<const N: usize>(mut m: Vec<[i128; N]>) -> Vec<i128> {
    let rows = m.len();
    let cols = N;
    let k = rows.min(cols);
    let mut diag = vec![0i128; k];
    let mut t = 0;
    while t < k {
        // Find the nonzero entry of smallest absolute value in the submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0
                    && pivot.map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let (pi, pj) = match pivot {
            Some(p) => p,
            None => break,
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        // Clear row and column t; restart if a division leaves a remainder.
        let mut clean = true;
        for i in t + 1..rows {
            let q = m[i][t] / m[t][t];
            if q != 0 {
                for j in t..cols {
                    m[i][j] -= q * m[t][j];
                }
            }
            if m[i][t] != 0 {
                clean = false;
            }
        }
        for j in t + 1..cols {
            let q = m[t][j] / m[t][t];
            if q != 0 {
                for row in m.iter_mut().take(rows).skip(t) {
                    row[j] -= q * row[t];
                }
            }
            if m[t][j] != 0 {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // Divisibility: the pivot must divide every remaining entry.
        let mut fixed = false;
        'outer: for i in t + 1..rows {
            for j in t + 1..cols {
                if m[i][j] % m[t][t] != 0 {
                    for jj in t..cols {
                        let add = m[i][jj];
                        m[t][jj] += add;
                    }
                    fixed = true;
                    break 'outer;
                }
            }
        }
        if fixed {
            continue;
        }
        diag[t] = m[t][t].abs();
        t += 1;
    }
    diag
}

// ---------------------------------------------------------------------------
// Klein bottle model.
// ---------------------------------------------------------------------------

/// Image class and kernel coordinate of a Klein-bottle affine map, per the
/// exact sequence 1 → R/Z → Aff(L) → (Z/2)² → 1.
///
/// Only the structure the stabilizer arguments use is modeled: the class in
/// (Z/2)² and the rational kernel part. Composition realizes the semidirect
/// product in which the first Z/2 coordinate inverts the circle factor.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct KleinAffineDatum {
    pub klein_class: (bool, bool),
    pub kernel_part: Rat,
}

impl KleinAffineDatum {
    pub fn new(klein_class: (bool, bool), kernel_part: Rat) -> Self {
        KleinAffineDatum {
            klein_class,
            kernel_part: mod1(kernel_part),
        }
    }

    pub fn identity() -> Self {
        KleinAffineDatum::new((false, false), Rat::zero())
    }

    pub fn compose(&self, other: &KleinAffineDatum) -> KleinAffineDatum {
        let sign = if self.klein_class.0 { -1 } else { 1 };
        KleinAffineDatum::new(
            (
                self.klein_class.0 ^ other.klein_class.0,
                self.klein_class.1 ^ other.klein_class.1,
            ),
            self.kernel_part + Rat::from_integer(sign) * other.kernel_part,
        )
    }

    pub fn inverse(&self) -> KleinAffineDatum {
        let sign = if self.klein_class.0 { 1 } else { -1 };
        KleinAffineDatum::new(
            self.klein_class,
            Rat::from_integer(sign) * self.kernel_part,
        )
    }
}

/// Splitting of a closed finite set of Klein data into kernel and image.
#[derive(Debug)]
pub struct KleinSplit {
    pub kernel_parts: Vec<Rat>,
    pub image: Vec<(bool, bool)>,
}

pub fn klein_project(group: &[KleinAffineDatum]) -> Result<KleinSplit, FlatError> {
    let set: HashSet<KleinAffineDatum> = group.iter().copied().collect();
    if set.is_empty() || !set.contains(&KleinAffineDatum::identity()) {
        return Err(FlatError::NotClosed);
    }
    for f in &set {
        for g in &set {
            if !set.contains(&f.compose(g)) {
                return Err(FlatError::NotClosed);
            }
        }
    }
    let mut kernel_parts: Vec<Rat> = set
        .iter()
        .filter(|f| f.klein_class == (false, false))
        .map(|f| f.kernel_part)
        .collect();
    kernel_parts.sort_unstable();
    let mut image: Vec<(bool, bool)> = set
        .iter()
        .map(|f| f.klein_class)
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    image.sort_unstable();
    Ok(KleinSplit {
        kernel_parts,
        image,
    })
}

/// Parses one torus affine map from a `matrix ; translation` line, e.g.
/// `[[0,1],[1,0]] ; 1/3 0`.
pub fn parse_torus_map(line: &str) -> Result<TorusAffineMap, FlatError> {
    let (m, t) = line
        .split_once(';')
        .ok_or_else(|| FlatError::Parse(format!("expected `matrix ; translation` in {line:?}")))?;
    let linear = IntMatrix2::parse(m.trim())
        .map_err(|e| FlatError::Parse(format!("{e}")))?;
    let parts: Vec<&str> = t.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(FlatError::Parse(format!(
            "expected two rational components in {line:?}"
        )));
    }
    Ok(TorusAffineMap::new(
        linear,
        (parse_rational(parts[0])?, parse_rational(parts[1])?),
    ))
}

/// Parses a file of torus affine maps, one `matrix ; translation` per line.
pub fn parse_affine_group_file(text: &str) -> Result<Vec<TorusAffineMap>, FlatError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_torus_map)
        .collect()
}

/// Renders a torus affine map in the `matrix ; translation` line format.
pub fn format_torus_map(f: &TorusAffineMap) -> String {
    format!(
        "{} ; {} {}",
        f.linear, f.translation.0, f.translation.1
    )
}

/// Parses a rational `p/q` or integer `p`.
pub fn parse_rational(text: &str) -> Result<Rat, FlatError> {
    let s = text.trim();
    let parts: Vec<&str> = s.split('/').collect();
    let bad = || FlatError::Parse(format!("bad rational {s:?}"));
    match parts.as_slice() {
        [n] => n.parse::<i64>().map(Rat::from_integer).map_err(|_| bad()),
        [n, d] => {
            let num: i64 = n.parse().map_err(|_| bad())?;
            let den: i64 = d.parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(bad());
            }
            Ok(Rat::new(num, den))
        }
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl2z::{A, C, NEG_I};

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn half_translation_squares_to_identity() {
        let f = TorusAffineMap::translation_only((r(1, 2), Rat::zero()));
        assert_eq!(f.compose(&f), TorusAffineMap::identity());
    }

    #[test]
    fn conjugation_acts_linearly_on_translations() {
        // (A,0) ∘ (I,(x,y)) ∘ (A,0)⁻¹ = (I, (−x mod 1, y)).
        let a = TorusAffineMap::linear_only(A);
        let t = TorusAffineMap::translation_only((r(1, 3), r(1, 5)));
        let conj = a.compose(&t).compose(&a.inverse());
        assert_eq!(conj.linear, I);
        assert_eq!(conj.translation, (mod1(-r(1, 3)), r(1, 5)));
    }

    #[test]
    fn swap_composition_hand_check() {
        // (C,(1/3,0)) ∘ (C,(0,1/3)) = (C·C, C(0,1/3) + (1/3,0)) = (I,(2/3,0)).
        let f = TorusAffineMap::new(C, (r(1, 3), Rat::zero()));
        let g = TorusAffineMap::new(C, (Rat::zero(), r(1, 3)));
        let fg = f.compose(&g);
        assert_eq!(fg.linear, I);
        assert_eq!(fg.translation, (r(2, 3), Rat::zero()));
    }

    #[test]
    fn composition_is_associative_and_inverse_works() {
        let maps = [
            TorusAffineMap::new(A, (r(1, 2), r(1, 3))),
            TorusAffineMap::new(C, (r(1, 4), Rat::zero())),
            TorusAffineMap::new(NEG_I, (r(2, 5), r(3, 7))),
        ];
        for f in &maps {
            for g in &maps {
                for h in &maps {
                    assert_eq!(
                        f.compose(g).compose(h),
                        f.compose(&g.compose(h))
                    );
                }
            }
            assert_eq!(f.compose(&f.inverse()), TorusAffineMap::identity());
            assert_eq!(f.inverse().compose(f), TorusAffineMap::identity());
        }
    }

    fn closure(gens: &[TorusAffineMap]) -> Vec<TorusAffineMap> {
        let mut seen: HashSet<TorusAffineMap> = HashSet::new();
        seen.insert(TorusAffineMap::identity());
        let mut queue = vec![TorusAffineMap::identity()];
        while let Some(f) = queue.pop() {
            for g in gens {
                let fg = g.compose(&f);
                if seen.insert(fg) {
                    queue.push(fg);
                }
            }
        }
        seen.into_iter().collect()
    }

    #[test]
    fn project_linear_splits_orders() {
        // Pure translations.
        let g1 = closure(&[
            TorusAffineMap::translation_only((r(1, 2), Rat::zero())),
            TorusAffineMap::translation_only((Rat::zero(), r(1, 2))),
        ]);
        let split = project_linear(&g1).unwrap();
        assert_eq!(split.kernel_translations.len(), 4);
        assert_eq!(split.image, vec![I]);

        // Purely linear: the order-8 factor.
        let g2 = closure(&[
            TorusAffineMap::linear_only(A),
            TorusAffineMap::linear_only(C),
        ]);
        let split = project_linear(&g2).unwrap();
        assert_eq!(split.kernel_translations.len(), 1);
        assert_eq!(split.image.len(), 8);
        assert_eq!(g2.len(), split.kernel_translations.len() * split.image.len());

        // Mixed group of order 4 = 2 · 2.
        let g3 = closure(&[
            TorusAffineMap::linear_only(NEG_I),
            TorusAffineMap::translation_only((r(1, 2), r(1, 2))),
        ]);
        let split = project_linear(&g3).unwrap();
        assert_eq!(split.kernel_translations.len(), 2);
        assert_eq!(split.image.len(), 2);
        assert_eq!(g3.len(), 4);

        // Non-closed input is rejected.
        let not_closed = vec![
            TorusAffineMap::identity(),
            TorusAffineMap::translation_only((r(1, 3), Rat::zero())),
        ];
        assert_eq!(project_linear(&not_closed).unwrap_err(), FlatError::NotClosed);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(torus_subgroup_rank(&[]), 0);
        assert_eq!(
            torus_subgroup_rank(&[(r(1, 2), Rat::zero()), (Rat::zero(), r(1, 2))]),
            2
        );
        assert_eq!(torus_subgroup_rank(&[(r(1, 3), Rat::zero())]), 1);
        assert_eq!(
            torus_subgroup_rank(&[
                (r(1, 2), Rat::zero()),
                (r(1, 4), Rat::zero()),
                (Rat::zero(), r(1, 6))
            ]),
            2
        );
        // Integer generators are trivial mod 1.
        assert_eq!(
            torus_subgroup_rank(&[(Rat::from_integer(2), Rat::from_integer(-1))]),
            0
        );
        // Diagonal embedding of one cyclic group.
        assert_eq!(torus_subgroup_rank(&[(r(1, 5), r(2, 5))]), 1);
        assert_eq!(torus_subgroup_rank(&[(r(1, 5), r(2, 5)), (r(2, 5), r(4, 5))]), 1);
    }

    #[test]
    fn smith_diagonal_small_cases() {
        assert_eq!(smith_diagonal(vec![[2i128, 0], [0, 3]]), vec![1, 6]);
        assert_eq!(smith_diagonal(vec![[2i128, 0], [0, 2]]), vec![2, 2]);
        assert_eq!(smith_diagonal(vec![[1i128, 0], [0, 1]]), vec![1, 1]);
        assert_eq!(smith_diagonal(vec![[4i128, 2], [2, 4]]), vec![2, 6]);
        assert_eq!(smith_diagonal(vec![[0i128, 0], [0, 0]]), vec![0, 0]);
        assert_eq!(smith_diagonal(vec![[6i128, 4]]), vec![2]);
    }

    #[test]
    fn klein_model_bounds() {
        // Any closed finite set of Klein data has image inside (Z/2)² and a
        // cyclic kernel (rank at most 1).
        let gens = [
            KleinAffineDatum::new((true, false), Rat::zero()),
            KleinAffineDatum::new((false, true), r(1, 2)),
            KleinAffineDatum::new((false, false), r(1, 4)),
        ];
        let mut seen: HashSet<KleinAffineDatum> = HashSet::new();
        seen.insert(KleinAffineDatum::identity());
        let mut queue = vec![KleinAffineDatum::identity()];
        while let Some(f) = queue.pop() {
            for g in &gens {
                let fg = g.compose(&f);
                if seen.insert(fg) {
                    queue.push(fg);
                }
            }
        }
        let group: Vec<KleinAffineDatum> = seen.into_iter().collect();
        let split = klein_project(&group).unwrap();
        assert!(split.image.len() <= 4);
        // The kernel parts form a finite subgroup of Q/Z: cyclic, rank <= 1.
        let rank = torus_subgroup_rank(
            &split
                .kernel_parts
                .iter()
                .map(|&k| (k, Rat::zero()))
                .collect::<Vec<_>>(),
        );
        assert!(rank <= 1);
        assert_eq!(group.len(), split.kernel_parts.len() * split.image.len());
    }

    #[test]
    fn torus_map_file_round_trip() {
        let text = "# generators\n[[-1,0],[0,1]] ; 1/2 0\n[[1,0],[0,1]] ; 1/3 2/3\n";
        let maps = parse_affine_group_file(text).unwrap();
        assert_eq!(maps.len(), 2);
        assert_eq!(maps[0].linear, A);
        assert_eq!(maps[0].translation, (r(1, 2), Rat::zero()));
        for m in &maps {
            assert_eq!(parse_torus_map(&format_torus_map(m)).unwrap(), *m);
        }
        assert!(parse_torus_map("[[1,0],[0,1]] 1/2 0").is_err());
        assert!(parse_torus_map("[[1,0],[0,2]] ; 1/2 0").is_err());
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("1/2").unwrap(), r(1, 2));
        assert_eq!(parse_rational("-3/4").unwrap(), r(-3, 4));
        assert_eq!(parse_rational("5").unwrap(), Rat::from_integer(5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
