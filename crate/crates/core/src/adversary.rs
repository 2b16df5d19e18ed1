//! Constructive refuters: given a triple that defeats the phi property (or
//! a quadruple that defeats theta under phi and psi), build a
//! pseudo-transitive one-vertex extension that no transitive reorientation
//! of the extended graph can accommodate while keeping the given order.
//!
//! Both builders grow the new vertex's relation as a staged fixpoint: each
//! round scans every undecided vertex against the current relation and
//! commits all additions at round end, so stages mirror the minimal-stage
//! reasoning the constructions rely on. Only arcs at the new vertex are
//! ever added, so the closure stabilizes within `n` rounds.

use crate::error::{Error, Violation, ViolationKind};
use crate::graph::{DeltaRel, ExtensionDelta, OGraph, Vertex};
use crate::order::Ght;
use crate::predicates::{phi_witness, theta_witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The transitive triangle obstruction: the 3-vertex triple ordered
/// `a ≺ c ≺ b` and the delta joining a fresh vertex to `c` alone, in the
/// direction all of `c`'s arcs already take.
pub fn gadget_transitive_triangle(side: Side) -> (Ght, ExtensionDelta) {
    let data = match side {
        Side::Left => crate::generators::fixture(crate::generators::Fixture::TtL),
        Side::Right => crate::generators::fixture(crate::generators::Fixture::TtR),
    };
    let mut delta = ExtensionDelta::isolated(3);
    delta.set(
        2,
        match side {
            Side::Left => DeltaRel::FromNew,
            Side::Right => DeltaRel::ToNew,
        },
    );
    (Ght::new(data.graph, data.order.unwrap()).unwrap(), delta)
}

/// The 2⊕2 obstruction: two disjoint arcs reoriented crosswise and the
/// delta attaching a fresh vertex below both tops (left) or above both
/// bottoms (right).
pub fn gadget_two_plus_two(side: Side) -> (Ght, ExtensionDelta) {
    let data = crate::generators::fixture(match side {
        Side::Left => crate::generators::Fixture::G22L,
        Side::Right => crate::generators::Fixture::G22R,
    });
    let mut delta = ExtensionDelta::isolated(4);
    match side {
        Side::Left => {
            delta.set(0, DeltaRel::ToNew);
            delta.set(1, DeltaRel::ToNew);
        }
        Side::Right => {
            delta.set(2, DeltaRel::FromNew);
            delta.set(3, DeltaRel::FromNew);
        }
    }
    (Ght::new(data.graph, data.order.unwrap()).unwrap(), delta)
}

fn require(cond: bool, clause: &str) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::invalid(format!("precondition failed: {clause}")))
    }
}

/// Whether the staged closure can reach `u` from the current relation:
/// some already-related `v` gives a path `x ⊸' v ⊸ u` or `u ⊸ v ⊸' x`.
fn reachable(g: &OGraph, rel: &[Option<DeltaRel>], u: Vertex) -> bool {
    (0..g.n()).any(|v| {
        (rel[v] == Some(DeltaRel::FromNew) && g.arrow(v, u))
            || (g.arrow(u, v) && rel[v] == Some(DeltaRel::ToNew))
    })
}

fn closure_to_delta(rel: Vec<Option<DeltaRel>>) -> ExtensionDelta {
    ExtensionDelta::new(rel.into_iter().map(|r| r.unwrap_or(DeltaRel::Incomparable)))
}

/// Builds the extension refuting extendibility at a triple where the phi
/// property fails: `a ⊸ c ← b`, `a ≺ c ≺ b`, and no phi chain exists.
///
/// Seeded with `x ⊸ c`; each round relates `x` to every newly reachable
/// vertex sitting under both `a` and `b` the same way the seed does. The
/// result is pseudo-transitive and leaves `x` incomparable with both `a`
/// and `b`, which pins `c` strictly between two non-neighbors of `x`.
pub fn break_phi(t: &Ght, a: Vertex, b: Vertex, c: Vertex) -> Result<ExtensionDelta, Error> {
    let g = t.g();
    let n = g.n();
    if a >= n || b >= n || c >= n {
        return Err(Error::invalid(format!("triple ({a}, {b}, {c}) out of range for n={n}")));
    }
    require(a != b && a != c && b != c, "a, b, c must be distinct")?;
    require(g.arrow(a, c), "a ⊸ c")?;
    require(g.arrow(b, c), "b ⊸ c")?;
    require(t.order().before(a, c), "a ≺ c")?;
    require(t.order().before(c, b), "c ≺ b")?;
    require(phi_witness(g, a, b, c)?.is_none(), "phi(a, b, c) must fail")?;

    let mut rel: Vec<Option<DeltaRel>> = vec![None; n];
    rel[c] = Some(DeltaRel::FromNew);
    for _round in 0..=n {
        let mut additions = Vec::new();
        for u in 0..n {
            if rel[u].is_some() || !reachable(g, &rel, u) {
                continue;
            }
            if g.arrow(a, u) && g.arrow(b, u) {
                additions.push((u, DeltaRel::FromNew));
            } else if g.arrow(u, a) && g.arrow(u, b) {
                additions.push((u, DeltaRel::ToNew));
            }
        }
        if additions.is_empty() {
            return Ok(closure_to_delta(rel));
        }
        for (u, r) in additions {
            rel[u] = Some(r);
        }
    }
    Err(Violation::new(ViolationKind::Internal, [a, b, c]).into())
}

/// Builds the extension refuting extendibility at a quadruple where theta
/// fails: `a ⊸ c`, `b ⊸ d`, `a | b`, `c | d`, `a ≺ c`, `d ≺ b`, no theta
/// chain. The triple is assumed to satisfy the phi and psi properties
/// (they are not re-verified here); without them the output is still
/// pseudo-transitive but the non-extendibility argument needs them.
///
/// Seeded with `a ⊸ x` and `b ⊸ x`; each round relates `x` to every newly
/// reachable vertex comparable with `c` or `d`, copying that direction.
/// `x` never touches `c` or `d` themselves.
pub fn break_theta(t: &Ght, a: Vertex, b: Vertex, c: Vertex, d: Vertex) -> Result<ExtensionDelta, Error> {
    let g = t.g();
    let n = g.n();
    if [a, b, c, d].iter().any(|&v| v >= n) {
        return Err(Error::invalid(format!("quadruple ({a}, {b}, {c}, {d}) out of range for n={n}")));
    }
    require(
        a != b && a != c && a != d && b != c && b != d && c != d,
        "a, b, c, d must be distinct",
    )?;
    require(g.arrow(a, c), "a ⊸ c")?;
    require(g.arrow(b, d), "b ⊸ d")?;
    require(g.incomparable(a, b), "a | b")?;
    require(g.incomparable(c, d), "c | d")?;
    require(t.order().before(a, c), "a ≺ c")?;
    require(t.order().before(d, b), "d ≺ b")?;
    require(theta_witness(g, a, b, c, d)?.is_none(), "theta(a, b, c, d) must fail")?;

    let mut rel: Vec<Option<DeltaRel>> = vec![None; n];
    rel[a] = Some(DeltaRel::ToNew);
    rel[b] = Some(DeltaRel::ToNew);
    for _round in 0..=n {
        let mut additions = Vec::new();
        for u in 0..n {
            if rel[u].is_some() || !reachable(g, &rel, u) {
                continue;
            }
            let outward = g.arrow(c, u) || g.arrow(d, u);
            let inward = g.arrow(u, c) || g.arrow(u, d);
            debug_assert!(!(outward && inward), "c | d rules out both directions at once");
            if outward {
                additions.push((u, DeltaRel::FromNew));
            } else if inward {
                additions.push((u, DeltaRel::ToNew));
            }
        }
        if additions.is_empty() {
            return Ok(closure_to_delta(rel));
        }
        for (u, r) in additions {
            rel[u] = Some(r);
        }
    }
    Err(Violation::new(ViolationKind::Internal, [a, b, c, d]).into())
}
