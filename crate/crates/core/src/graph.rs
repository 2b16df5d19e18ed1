//! Oriented graphs over dense vertex ids and one-vertex extensions.
//!
//! An *ograph* is a directed graph with at most one arc between any two
//! vertices: the arrow relation is irreflexive and asymmetric. Vertices are
//! the naturals `0..n`, and arrival order in the streaming engine is vertex
//! id order. The adjacency is a dense pair-indexed table, so orientation
//! queries are O(1) and all the triple scans below are straight loops.

use crate::bits::BitMatrix;
use crate::error::{Check, Error, Violation, ViolationKind};

pub type Vertex = usize;

/// How an ordered vertex pair `(u, v)` relates in an ograph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `u ⊸ v`
    Forward,
    /// `v ⊸ u`
    Backward,
    /// no arc between `u` and `v`
    Incomparable,
}

/// A finite oriented graph: irreflexive, asymmetric arrow relation over
/// vertex ids `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct OGraph {
    n: usize,
    arrows: BitMatrix,
}

impl OGraph {
    /// The edgeless ograph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        OGraph { n, arrows: BitMatrix::new(n) }
    }

    /// Builds an ograph from a list of arrows `u → v`.
    ///
    /// Rejects loops, out-of-range endpoints, and duplicate or symmetric
    /// pairs.
    pub fn from_arrows(n: usize, arrows: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, Error> {
        let mut g = OGraph::empty(n);
        for (u, v) in arrows {
            g.add_arrow(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the arrow `u → v`.
    pub fn add_arrow(&mut self, u: Vertex, v: Vertex) -> Result<(), Error> {
        if u >= self.n || v >= self.n {
            return Err(Error::invalid(format!("arrow ({u}, {v}) out of range for n={}", self.n)));
        }
        if u == v {
            return Err(Error::invalid(format!("loop at vertex {u}")));
        }
        if self.arrows.get(u, v) {
            return Err(Error::invalid(format!("duplicate arrow ({u}, {v})")));
        }
        if self.arrows.get(v, u) {
            return Err(Error::invalid(format!("symmetric arrow ({u}, {v}) conflicts with ({v}, {u})")));
        }
        self.arrows.set(u, v, true);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// True iff `u ⊸ v`. Panics on out-of-range ids.
    #[inline]
    pub fn arrow(&self, u: Vertex, v: Vertex) -> bool {
        self.arrows.get(u, v)
    }

    /// True iff `u − v`, i.e. some arc joins `u` and `v`.
    #[inline]
    pub fn comparable(&self, u: Vertex, v: Vertex) -> bool {
        self.arrow(u, v) || self.arrow(v, u)
    }

    /// True iff `u | v`: no arc joins `u` and `v`. Note `v | v` holds.
    #[inline]
    pub fn incomparable(&self, u: Vertex, v: Vertex) -> bool {
        !self.comparable(u, v)
    }

    /// Orientation of the pair `(u, v)`; `u` and `v` must be distinct
    /// in-range vertices.
    pub fn orientation(&self, u: Vertex, v: Vertex) -> Result<Orientation, Error> {
        if u >= self.n || v >= self.n {
            return Err(Error::invalid(format!("pair ({u}, {v}) out of range for n={}", self.n)));
        }
        if u == v {
            return Err(Error::invalid(format!("orientation of ({u}, {u}) is undefined")));
        }
        Ok(if self.arrow(u, v) {
            Orientation::Forward
        } else if self.arrow(v, u) {
            Orientation::Backward
        } else {
            Orientation::Incomparable
        })
    }

    /// The set of vertices comparable with `v`, ascending.
    pub fn neighborhood(&self, v: Vertex) -> Result<Vec<Vertex>, Error> {
        if v >= self.n {
            return Err(Error::invalid(format!("vertex {v} out of range for n={}", self.n)));
        }
        Ok((0..self.n).filter(|&u| u != v && self.comparable(u, v)).collect())
    }

    /// All arrows `(u, v)` in ascending lexicographic order.
    pub fn arrows(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| (0..self.n).filter(move |&v| self.arrow(u, v)).map(move |v| (u, v)))
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.count_ones()
    }

    /// Decides pseudo-transitivity: every path `a ⊸ b ⊸ c` forces `a − c`.
    /// On failure returns the least offending triple `[a, b, c]`.
    pub fn is_pseudo_transitive(&self) -> Check {
        for a in 0..self.n {
            for b in 0..self.n {
                if !self.arrow(a, b) {
                    continue;
                }
                for c in 0..self.n {
                    if c != a && self.arrow(b, c) && !self.comparable(a, c) {
                        return Err(Violation::new(ViolationKind::PseudoTransitivity, [a, b, c]));
                    }
                }
            }
        }
        Ok(())
    }

    /// Reverses an existing arrow in place.
    pub(crate) fn flip_arrow(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(self.arrow(u, v));
        self.arrows.set(u, v, false);
        self.arrows.set(v, u, true);
    }

    /// The ograph with every arrow reversed.
    pub fn reverse(&self) -> OGraph {
        let mut rev = OGraph::empty(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                if self.arrow(u, v) {
                    rev.arrows.set(v, u, true);
                }
            }
        }
        rev
    }

    /// The induced subgraph on vertices `0..k`.
    pub fn prefix(&self, k: usize) -> OGraph {
        assert!(k <= self.n);
        let mut g = OGraph::empty(k);
        for u in 0..k {
            for v in 0..k {
                if self.arrow(u, v) {
                    g.arrows.set(u, v, true);
                }
            }
        }
        g
    }

    /// The relation of the would-be vertex `k` to the prefix `0..k`, read
    /// off this graph. Streaming a graph replays these deltas in id order.
    pub fn delta_at(&self, k: Vertex) -> ExtensionDelta {
        assert!(k < self.n);
        ExtensionDelta::new((0..k).map(|v| {
            if self.arrow(v, k) {
                DeltaRel::ToNew
            } else if self.arrow(k, v) {
                DeltaRel::FromNew
            } else {
                DeltaRel::Incomparable
            }
        }))
    }
}

impl std::fmt::Debug for OGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OGraph(n={}, arrows={:?})", self.n, self.arrows().collect::<Vec<_>>())
    }
}

/// Relation of one existing vertex to the incoming vertex `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaRel {
    Incomparable,
    /// `v ⊸ x`
    ToNew,
    /// `x ⊸ v`
    FromNew,
}

/// A one-vertex extension: the relation of the new vertex `x` to every
/// existing vertex `0..x`. The new vertex id is implicit: it equals the
/// number of entries, which must match the host graph's vertex count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionDelta {
    rel: Vec<DeltaRel>,
}

impl ExtensionDelta {
    pub fn new(rel: impl IntoIterator<Item = DeltaRel>) -> Self {
        ExtensionDelta { rel: rel.into_iter().collect() }
    }

    /// The extension that leaves the new vertex isolated.
    pub fn isolated(n: usize) -> Self {
        ExtensionDelta { rel: vec![DeltaRel::Incomparable; n] }
    }

    /// Id of the incoming vertex.
    pub fn x(&self) -> Vertex {
        self.rel.len()
    }

    #[inline]
    pub fn rel(&self, v: Vertex) -> DeltaRel {
        self.rel[v]
    }

    pub fn set(&mut self, v: Vertex, rel: DeltaRel) {
        self.rel[v] = rel;
    }

    /// True iff `v − x` under this delta.
    #[inline]
    pub fn adjacent(&self, v: Vertex) -> bool {
        self.rel[v] != DeltaRel::Incomparable
    }

    /// Vertices adjacent to `x`, ascending.
    pub fn neighborhood(&self) -> Vec<Vertex> {
        (0..self.rel.len()).filter(|&v| self.adjacent(v)).collect()
    }

    fn check_host(&self, g: &OGraph) -> Result<(), Error> {
        if self.x() != g.n() {
            return Err(Error::invalid(format!(
                "delta introduces vertex {} but the graph has {} vertices",
                self.x(),
                g.n()
            )));
        }
        Ok(())
    }
}

/// Checks that extending a pseudo-transitive `g` by `d` stays
/// pseudo-transitive, scanning only the triples that involve the new vertex.
/// O(n²). On failure the violation carries the least triple `[a, b, c]`
/// with `a ⊸ b ⊸ c` and `a | c` in the extended graph.
pub fn delta_is_pseudo_transitive(g: &OGraph, d: &ExtensionDelta) -> Result<(), Error> {
    d.check_host(g)?;
    let n = g.n();
    let x = n;
    let mut best: Option<[Vertex; 3]> = None;
    let mut offer = |t: [Vertex; 3]| {
        if best.is_none_or(|b| t < b) {
            best = Some(t);
        }
    };
    for u in 0..n {
        match d.rel(u) {
            DeltaRel::ToNew => {
                // u ⊸ x ⊸ v  and  w ⊸ u ⊸ x
                for v in 0..n {
                    if d.rel(v) == DeltaRel::FromNew && !g.comparable(u, v) {
                        offer([u, x, v]);
                    }
                }
                for w in 0..n {
                    if g.arrow(w, u) && !d.adjacent(w) {
                        offer([w, u, x]);
                    }
                }
            }
            DeltaRel::FromNew => {
                // x ⊸ u ⊸ v
                for v in 0..n {
                    if g.arrow(u, v) && !d.adjacent(v) {
                        offer([x, u, v]);
                    }
                }
            }
            DeltaRel::Incomparable => {}
        }
    }
    match best {
        Some(t) => Err(Violation::new(ViolationKind::PseudoTransitivity, t).into()),
        None => Ok(()),
    }
}

/// The extended ograph on `n + 1` vertices, agreeing with `g` on old pairs
/// and with `d` on pairs involving the new vertex.
pub fn apply_delta(g: &OGraph, d: &ExtensionDelta) -> Result<OGraph, Error> {
    d.check_host(g)?;
    let n = g.n();
    let mut out = OGraph::empty(n + 1);
    for u in 0..n {
        for v in 0..n {
            if g.arrow(u, v) {
                out.arrows.set(u, v, true);
            }
        }
    }
    for v in 0..n {
        match d.rel(v) {
            DeltaRel::ToNew => out.arrows.set(v, n, true),
            DeltaRel::FromNew => out.arrows.set(n, v, true),
            DeltaRel::Incomparable => {}
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{fixture, Fixture};

    #[test]
    fn orientation_on_fixtures() {
        let c3 = fixture(Fixture::C3).graph;
        assert_eq!(c3.orientation(0, 1).unwrap(), Orientation::Forward);
        assert_eq!(c3.orientation(1, 0).unwrap(), Orientation::Backward);
        let g22 = fixture(Fixture::G22L).graph;
        assert_eq!(g22.orientation(0, 1).unwrap(), Orientation::Incomparable);
        assert!(c3.orientation(0, 3).is_err());
        assert!(c3.orientation(1, 1).is_err());
    }

    #[test]
    fn neighborhoods() {
        let c3 = fixture(Fixture::C3).graph;
        assert_eq!(c3.neighborhood(0).unwrap(), vec![1, 2]);
        let g22 = fixture(Fixture::G22L).graph;
        assert_eq!(g22.neighborhood(0).unwrap(), vec![2]);
        let empty = OGraph::empty(0);
        assert!(empty.neighborhood(0).is_err());
    }

    #[test]
    fn exactly_one_orientation_per_pair() {
        let g = fixture(Fixture::Theta5).graph;
        for u in 0..g.n() {
            for v in 0..g.n() {
                if u == v {
                    continue;
                }
                let cases = [g.arrow(u, v), g.arrow(v, u), g.incomparable(u, v)];
                assert_eq!(cases.iter().filter(|&&b| b).count(), 1);
            }
        }
    }

    #[test]
    fn construction_rejects_bad_arrows() {
        assert!(OGraph::from_arrows(2, [(0, 0)]).is_err());
        assert!(OGraph::from_arrows(2, [(0, 2)]).is_err());
        assert!(OGraph::from_arrows(2, [(0, 1), (0, 1)]).is_err());
        assert!(OGraph::from_arrows(2, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn pseudo_transitivity_on_fixtures() {
        assert!(fixture(Fixture::C3).graph.is_pseudo_transitive().is_ok());
        assert!(fixture(Fixture::Theta5).graph.is_pseudo_transitive().is_ok());
        // 0 → 1 → 2 with 0 | 2 breaks the defining clause
        let path = OGraph::from_arrows(3, [(0, 1), (1, 2)]).unwrap();
        let v = path.is_pseudo_transitive().unwrap_err();
        assert_eq!(v.kind, ViolationKind::PseudoTransitivity);
        assert_eq!(v.witnesses, vec![0, 1, 2]);
    }

    #[test]
    fn delta_check_examples() {
        // Transitive triangle gadget: x joined to the sink only.
        let tt = fixture(Fixture::TtL).graph;
        let mut d = ExtensionDelta::isolated(3);
        d.set(2, DeltaRel::FromNew);
        assert!(delta_is_pseudo_transitive(&tt, &d).is_ok());

        let g22 = fixture(Fixture::G22L).graph;
        let mut d = ExtensionDelta::isolated(4);
        d.set(0, DeltaRel::ToNew);
        d.set(1, DeltaRel::ToNew);
        assert!(delta_is_pseudo_transitive(&g22, &d).is_ok());

        // C3 with only 0 ⊸ x: 2 ⊸ 0 ⊸ x but 2 | x.
        let c3 = fixture(Fixture::C3).graph;
        let mut d = ExtensionDelta::isolated(3);
        d.set(0, DeltaRel::ToNew);
        let err = delta_is_pseudo_transitive(&c3, &d).unwrap_err();
        let v = err.violation().unwrap();
        assert_eq!(v.kind, ViolationKind::PseudoTransitivity);
        assert_eq!(v.witnesses, vec![2, 0, 3]);

        // Mismatched sizes are an argument error, not a violation.
        let d = ExtensionDelta::isolated(2);
        assert!(matches!(delta_is_pseudo_transitive(&c3, &d), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn apply_delta_reconstructs() {
        let single = apply_delta(&OGraph::empty(0), &ExtensionDelta::isolated(0)).unwrap();
        assert_eq!(single.n(), 1);
        assert_eq!(single.arrow_count(), 0);

        let c3 = fixture(Fixture::C3).graph;
        let prefix = c3.prefix(2);
        let rebuilt = apply_delta(&prefix, &c3.delta_at(2)).unwrap();
        assert_eq!(rebuilt, c3);

        let tt = fixture(Fixture::TtL).graph;
        let mut d = ExtensionDelta::isolated(3);
        d.set(2, DeltaRel::FromNew);
        let gadget = apply_delta(&tt, &d).unwrap();
        assert_eq!(gadget.n(), 4);
        assert!(gadget.arrow(3, 2));
        assert!(gadget.incomparable(3, 0) && gadget.incomparable(3, 1));
    }

    #[test]
    fn reverse_examples() {
        let c3 = fixture(Fixture::C3).graph;
        assert_eq!(c3.reverse().reverse(), c3);
        assert!(c3.reverse().arrow(1, 0));
        let t5 = fixture(Fixture::Theta5).graph;
        assert!(t5.reverse().arrow(2, 0));
    }

    #[test]
    fn degenerate_graphs_are_pseudo_transitive() {
        assert!(OGraph::empty(0).is_pseudo_transitive().is_ok());
        assert!(OGraph::empty(1).is_pseudo_transitive().is_ok());
    }
}
