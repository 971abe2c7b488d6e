//! Executable stabilizer constraints for multiply transitive cusp actions.
//!
//! A finite group of isometries stabilizing a cusp acts effectively on the
//! cusp's flat link, hence embeds in the affine group of a torus or Klein
//! bottle. Pushing that through the exact sequences of those affine groups
//! gives concrete constraints on the induced permutation group G₁ of the
//! remaining cusps:
//!
//! - G₁ is solvable;
//! - some abelian normal subgroup N of G₁ of rank at most 2 (at most 1 for a
//!   Klein-bottle link) has quotient G₁/N isomorphic to a quotient of a
//!   subgroup of the dihedral group of order 8 or 12 (for a Klein bottle: of
//!   an elementary abelian group of order 4).
//!
//! [`classify_k_transitive`] combines the constraint with the degree table of
//! the classification (k = 5 forces 5 cusps; k = 4 forces 4; k = 3 allows 3,
//! 5, 6, 8 cusps with groups S3, A5, PGL(2,5), PGL(2,7)), and
//! [`exhaustive_degree_scan`] re-derives that table at degrees up to 6 by
//! brute force over all transitive subgroups of the symmetric group.

use std::sync::OnceLock;

use serde::Serialize;

use crate::perm::{
    dihedral, regular_elementary_check, symmetric, CatalogName, PermError, PermGroup,
};

/// The two flat link types of a cusp.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LinkKind {
    Torus,
    Klein,
}

impl LinkKind {
    pub fn name(&self) -> &'static str {
        match self {
            LinkKind::Torus => "torus",
            LinkKind::Klein => "klein",
        }
    }
}

/// Witness data for a satisfied stabilizer constraint.
#[derive(Clone, Debug, Serialize)]
pub struct StabilizerWitness {
    pub link: LinkKind,
    /// Order of the abelian normal subgroup N.
    pub normal_order: usize,
    /// Minimal generator count of N.
    pub normal_rank: usize,
    /// (p, m) when N acts regularly as an elementary abelian p-group on the
    /// stabilizer's points.
    pub regular_elementary: Option<(u64, u32)>,
    /// Catalog identification of the quotient G₁/N.
    pub quotient: CatalogName,
    pub quotient_order: usize,
}

/// Outcome of a constraint check: a witness or the violated step.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub consistent: bool,
    pub witness: Option<StabilizerWitness>,
    pub violation: Option<String>,
}

impl Verdict {
    fn ok(witness: StabilizerWitness) -> Verdict {
        Verdict {
            consistent: true,
            witness: Some(witness),
            violation: None,
        }
    }

    fn fail(violation: impl Into<String>) -> Verdict {
        Verdict {
            consistent: false,
            witness: None,
            violation: Some(violation.into()),
        }
    }
}

/// All subgroups of the two standard dihedral factors of GL(2,Z), realized
/// as permutation groups once.
fn dihedral_factor_subgroups() -> &'static Vec<PermGroup> {
    static SUBS: OnceLock<Vec<PermGroup>> = OnceLock::new();
    SUBS.get_or_init(|| {
        let mut all = Vec::new();
        for factor in [dihedral(4), dihedral(6)] {
            let classes = factor
                .subgroup_classes()
                .expect("dihedral groups are tiny");
            all.extend(classes.all_subgroups());
        }
        all
    })
}

/// Does some subgroup of the dihedral group of order 8 or 12 surject onto q?
///
/// Decided by exhaustive homomorphism search: generator images are chosen in
/// q and propagated along the subgroup's Cayley graph; any relation violation
/// rejects the assignment.
pub fn is_quotient_of_dihedral_factor(q: &PermGroup) -> bool {
    if q.order() == 1 {
        return true;
    }
    if q.order() > 12 {
        return false;
    }
    dihedral_factor_subgroups()
        .iter()
        .any(|s| s.order() % q.order() == 0 && has_epimorphism(s, q))
}

/// Quotients of subgroups of (Z/2)²: elementary abelian of order at most 4.
fn is_quotient_of_klein_four(q: &PermGroup) -> bool {
    q.order() <= 4 && q.is_abelian() && q.elements().iter().all(|e| e.order() <= 2)
}

fn has_epimorphism(s: &PermGroup, q: &PermGroup) -> bool {
    let gens = s.generators();
    if gens.is_empty() {
        return q.order() == 1;
    }
    let qn = q.order();
    let mut choice = vec![0usize; gens.len()];
    loop {
        if try_homomorphism(s, q, &choice) {
            return true;
        }
        // advance the mixed-radix counter of generator images
        let mut i = 0;
        loop {
            if i == choice.len() {
                return false;
            }
            choice[i] += 1;
            if choice[i] < qn {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn try_homomorphism(s: &PermGroup, q: &PermGroup, choice: &[usize]) -> bool {
    let m = s.order();
    let mut image = vec![usize::MAX; m];
    let id_s = s
        .element_index(&crate::perm::Permutation::identity(s.degree()))
        .unwrap();
    let id_q = q
        .element_index(&crate::perm::Permutation::identity(q.degree()))
        .unwrap();
    image[id_s] = id_q;
    let mut stack = vec![id_s];
    while let Some(e) = stack.pop() {
        for (gi, g) in s.generators().iter().enumerate() {
            let eg = s.element_index(&s.element(e).compose(g)).unwrap();
            let target = q
                .element_index(&q.element(image[e]).compose(q.element(choice[gi])))
                .unwrap();
            if image[eg] == usize::MAX {
                image[eg] = target;
                stack.push(eg);
            } else if image[eg] != target {
                return false;
            }
        }
    }
    let mut hit = vec![false; q.order()];
    let mut count = 0;
    for &v in &image {
        if v == usize::MAX {
            return false;
        }
        if !hit[v] {
            hit[v] = true;
            count += 1;
        }
    }
    count == q.order()
}

/// Checks the affine-group constraint on a cusp stabilizer's induced action.
///
/// Returns the first satisfying abelian normal subgroup (smallest order
/// first) as a witness, or names the violated step.
pub fn stabilizer_constraint(g1: &PermGroup, link: LinkKind) -> Result<Verdict, PermError> {
    if !g1.is_solvable() {
        return Ok(Verdict::fail(
            "point stabilizer is not solvable, but finite subgroups of the link's \
             affine group are",
        ));
    }
    let max_rank = match link {
        LinkKind::Torus => 2,
        LinkKind::Klein => 1,
    };
    let candidates = g1.abelian_normal_subgroups()?;
    for n in &candidates {
        let rank = n.abelian_rank();
        if rank > max_rank {
            continue;
        }
        let quotient = g1.quotient_by(n);
        let admissible = match link {
            LinkKind::Torus => is_quotient_of_dihedral_factor(&quotient),
            LinkKind::Klein => is_quotient_of_klein_four(&quotient),
        };
        if admissible {
            let points: Vec<usize> = (0..g1.degree()).collect();
            return Ok(Verdict::ok(StabilizerWitness {
                link,
                normal_order: n.order(),
                normal_rank: rank,
                regular_elementary: regular_elementary_check(n, &points),
                quotient: quotient.identify(),
                quotient_order: quotient.order(),
            }));
        }
    }
    Ok(Verdict::fail(format!(
        "no abelian normal subgroup of rank ≤ {max_rank} has a quotient \
         embeddable over the {} link",
        link.name()
    )))
}

/// Full verdict on a claimed k-transitive cusp action: stabilizer
/// constraints for both link kinds plus the degree table.
#[derive(Clone, Debug, Serialize)]
pub struct TransitivityVerdict {
    pub computed_k: usize,
    pub degree: usize,
    pub identification: CatalogName,
    pub torus: Verdict,
    pub klein: Verdict,
    pub consistent: bool,
    pub violation: Option<String>,
}

pub fn classify_k_transitive(
    g: &PermGroup,
    claimed_k: usize,
) -> Result<TransitivityVerdict, PermError> {
    let degree = g.degree();
    let identification = g.identify();
    if !g.is_transitive() {
        let fail = Verdict::fail("group is not transitive");
        return Ok(TransitivityVerdict {
            computed_k: 0,
            degree,
            identification,
            torus: fail.clone(),
            klein: fail,
            consistent: false,
            violation: Some("the action is not transitive".into()),
        });
    }
    let k = g.transitivity_degree();
    let stab = g.stabilizer_restricted(0);
    let torus = stabilizer_constraint(&stab, LinkKind::Torus)?;
    let klein = stabilizer_constraint(&stab, LinkKind::Klein)?;
    let mut violation: Option<String> = None;
    if claimed_k != k {
        violation = Some(format!(
            "claimed transitivity degree {claimed_k}, computed {k}"
        ));
    } else if !torus.consistent && !klein.consistent {
        violation = Some(
            "point stabilizer violates the affine constraint for both link kinds".into(),
        );
    } else {
        match k {
            0 => unreachable!("transitive groups have k >= 1"),
            1 | 2 => {}
            3 => {
                if ![3, 5, 6, 8].contains(&degree) {
                    violation = Some(format!(
                        "3-transitive (not 4-transitive) actions have 3, 5, 6 or 8 \
                         cusps, not {degree}"
                    ));
                } else if !matches!(
                    identification,
                    CatalogName::S3 | CatalogName::A5 | CatalogName::Pgl25 | CatalogName::Pgl27
                ) {
                    violation = Some(format!(
                        "3-transitive group {identification} is not one of S3, A5, \
                         PGL(2,5), PGL(2,7)"
                    ));
                }
            }
            4 => {
                if degree != 4 {
                    violation = Some(format!(
                        "4-transitive (not 5-transitive) actions have exactly 4 cusps, \
                         not {degree}"
                    ));
                }
            }
            5 => {
                if degree != 5 {
                    violation = Some(format!(
                        "5-transitive actions have exactly 5 cusps, not {degree}"
                    ));
                } else if !torus.consistent {
                    violation = Some(
                        "5-transitive actions require orientable cusps, but the torus \
                         constraint fails"
                            .into(),
                    );
                }
            }
            _ => {
                violation = Some(format!("transitivity degree {k} exceeds 5"));
            }
        }
    }
    Ok(TransitivityVerdict {
        computed_k: k,
        degree,
        identification,
        consistent: violation.is_none(),
        torus,
        klein,
        violation,
    })
}

/// One row of the exhaustive small-degree scan.
#[derive(Clone, Debug, Serialize)]
pub struct ScanEntry {
    pub name: CatalogName,
    pub order: usize,
    pub degree: usize,
    pub transitivity: usize,
    pub verdict: TransitivityVerdict,
}

/// Enumerates the transitive subgroups of the symmetric group of degree
/// n ≤ 6 up to conjugacy and reports the classification verdict of each.
pub fn exhaustive_degree_scan(n: usize) -> Result<Vec<ScanEntry>, PermError> {
    if n > 6 {
        return Err(PermError::BoundExceeded { bound: 6 });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let sn = symmetric(n);
    let classes = sn.subgroup_classes()?;
    let mut entries = Vec::new();
    for rep in classes.representatives() {
        if !rep.is_transitive() {
            continue;
        }
        let k = rep.transitivity_degree();
        let verdict = classify_k_transitive(&rep, k)?;
        entries.push(ScanEntry {
            name: rep.identify(),
            order: rep.order(),
            degree: n,
            transitivity: k,
            verdict,
        });
    }
    entries.sort_by(|a, b| {
        (a.order, a.transitivity, format!("{}", a.name)).cmp(&(
            b.order,
            b.transitivity,
            format!("{}", b.name),
        ))
    });
    Ok(entries)
}
