//! Exact computation with the symmetry groups that arise around the cusps of
//! finite-volume hyperbolic 3-manifolds.
//!
//! The crate has four computational pillars:
//!
//! - [`perm`]: a dense, fully enumerated permutation-group engine for groups
//!   of order up to a few thousand: closure, transitivity degrees, stabilizers,
//!   solvability, normal-subgroup structure, and catalog identification.
//! - [`gl2z`]: exact arithmetic in GL(2,Z) seen as an amalgamated free product
//!   of two dihedral groups, with canonical normal forms and conjugation of
//!   finite subgroups into the standard factors.
//! - [`flat`] and [`finfield`]: affine transformation groups of flat tori and
//!   Klein bottles over exact rationals, and the affine/semilinear groups of
//!   small finite fields together with PGL(2,q) on the projective line.
//! - [`tess`]: combinatorial Platonic tessellations of cusped 3-manifolds
//!   (ideal tetrahedra, octahedra, dodecahedra with face gluings), their flag
//!   automorphism groups, cusp links, and induced cusp actions.
//!
//! [`theorems`] ties the pillars together: it encodes the stabilizer
//! constraints that a multiply transitive cusp action must satisfy and scans
//! small degrees exhaustively for feasible actions. [`report`] wraps
//! everything for the `cusped` command-line tool.

pub mod finfield;
pub mod flat;
pub mod gl2z;
pub mod perm;
pub mod report;
pub mod tess;
pub mod theorems;
