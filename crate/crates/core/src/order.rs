//! Reorientations: binary order relations paired with an ograph.
//!
//! A reorientation of an ograph relates exactly the comparable pairs, in one
//! direction each; a transitive reorientation is a strict partial order. An
//! ograph together with a transitive reorientation of it is a [`Ght`].

use crate::bits::BitMatrix;
use crate::error::{Check, Error, Violation, ViolationKind};
use crate::graph::{OGraph, Vertex};

/// A binary relation `u ≺ v` over vertex ids `0..n`, stored densely.
///
/// Construction does not force any axioms beyond irreflexivity; whether the
/// relation is a (transitive) reorientation of a given graph is decided by
/// [`Ght::check`].
#[derive(Clone, PartialEq, Eq)]
pub struct Order {
    n: usize,
    before: BitMatrix,
}

impl Order {
    pub fn empty(n: usize) -> Self {
        Order { n, before: BitMatrix::new(n) }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, Error> {
        let mut o = Order::empty(n);
        for (u, v) in pairs {
            o.add_pair(u, v)?;
        }
        Ok(o)
    }

    /// Records `u ≺ v`. Rejects loops, out-of-range ids, and duplicate or
    /// symmetric pairs.
    pub fn add_pair(&mut self, u: Vertex, v: Vertex) -> Result<(), Error> {
        if u >= self.n || v >= self.n {
            return Err(Error::invalid(format!("order pair ({u}, {v}) out of range for n={}", self.n)));
        }
        if u == v {
            return Err(Error::invalid(format!("reflexive order pair at vertex {u}")));
        }
        if self.before.get(u, v) {
            return Err(Error::invalid(format!("duplicate order pair ({u}, {v})")));
        }
        if self.before.get(v, u) {
            return Err(Error::invalid(format!("symmetric order pair ({u}, {v}) conflicts with ({v}, {u})")));
        }
        self.before.set(u, v, true);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// True iff `u ≺ v`.
    #[inline]
    pub fn before(&self, u: Vertex, v: Vertex) -> bool {
        self.before.get(u, v)
    }

    /// All pairs `(u, v)` with `u ≺ v`, ascending lexicographically.
    pub fn pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| (0..self.n).filter(move |&v| self.before(u, v)).map(move |v| (u, v)))
    }

    pub fn pair_count(&self) -> usize {
        self.before.count_ones()
    }

    /// The restriction to vertices `0..k`.
    pub fn restriction(&self, k: usize) -> Order {
        assert!(k <= self.n);
        let mut o = Order::empty(k);
        for u in 0..k {
            for v in 0..k {
                if self.before(u, v) {
                    o.before.set(u, v, true);
                }
            }
        }
        o
    }

    /// The opposite order: `u ≺ v` becomes `v ≺ u`.
    pub fn reversed(&self) -> Order {
        let mut o = Order::empty(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                if self.before(u, v) {
                    o.before.set(v, u, true);
                }
            }
        }
        o
    }

    /// Grows the relation to `n + 1` vertices, relating the new vertex as
    /// told: `below` lists `v ≺ x`, `above` lists `x ≺ v`.
    pub(crate) fn extended(&self, below: &[Vertex], above: &[Vertex]) -> Order {
        let n = self.n + 1;
        let mut o = Order::empty(n);
        for u in 0..self.n {
            for v in 0..self.n {
                if self.before(u, v) {
                    o.before.set(u, v, true);
                }
            }
        }
        for &v in below {
            o.before.set(v, n - 1, true);
        }
        for &v in above {
            o.before.set(n - 1, v, true);
        }
        o
    }
}

impl std::fmt::Debug for Order {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Order(n={}, pairs={:?})", self.n, self.pairs().collect::<Vec<_>>())
    }
}

/// An ograph together with a reorientation order, ready for checking or for
/// one-vertex extension. `check` decides whether it really is a
/// Ghouila-Houri triple (pseudo-transitive graph + transitive
/// reorientation); construction only requires matching sizes, so refutable
/// candidates can be represented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ght {
    g: OGraph,
    order: Order,
}

impl Ght {
    pub fn new(g: OGraph, order: Order) -> Result<Self, Error> {
        if g.n() != order.n() {
            return Err(Error::invalid(format!(
                "graph has {} vertices but the order relates {}",
                g.n(),
                order.n()
            )));
        }
        Ok(Ght { g, order })
    }

    /// The empty triple, starting point of every stream.
    pub fn empty() -> Self {
        Ght { g: OGraph::empty(0), order: Order::empty(0) }
    }

    pub fn g(&self) -> &OGraph {
        &self.g
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    /// Verifies that the order is a reorientation of the graph and that it
    /// is transitive. Reorientation defects are reported before
    /// transitivity defects, each with the least witness tuple.
    pub fn check(&self) -> Check {
        let n = self.n();
        for u in 0..n {
            for v in (u + 1)..n {
                let related = (self.order.before(u, v) as usize) + (self.order.before(v, u) as usize);
                let expected = if self.g.comparable(u, v) { 1 } else { 0 };
                if related != expected {
                    return Err(Violation::new(ViolationKind::Reorientation, [u, v]));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !self.order.before(a, b) {
                    continue;
                }
                for c in 0..n {
                    if self.order.before(b, c) && !self.order.before(a, c) {
                        return Err(Violation::new(ViolationKind::Transitivity, [a, b, c]));
                    }
                }
            }
        }
        Ok(())
    }

    /// The triple with every arrow and every order pair reversed.
    pub fn reversed(&self) -> Ght {
        Ght { g: self.g.reverse(), order: self.order.reversed() }
    }

    /// The triple restricted to vertices `0..k`.
    pub fn prefix(&self, k: usize) -> Ght {
        Ght { g: self.g.prefix(k), order: self.order.restriction(k) }
    }
}

/// Standalone form of [`Ght::check`], matching the other deciders.
pub fn check_ght(t: &Ght) -> Check {
    t.check()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{fixture, Fixture};

    #[test]
    fn c3_smart_order_is_a_ght() {
        let c3 = fixture(Fixture::C3).graph;
        let order = Order::from_pairs(3, [(2, 0), (0, 1), (2, 1)]).unwrap();
        assert!(Ght::new(c3, order).unwrap().check().is_ok());
    }

    #[test]
    fn cyclic_order_fails_transitivity() {
        let c3 = fixture(Fixture::C3).graph;
        let order = Order::from_pairs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let v = Ght::new(c3, order).unwrap().check().unwrap_err();
        assert_eq!(v.kind, ViolationKind::Transitivity);
        assert_eq!(v.witnesses, vec![0, 1, 2]);
    }

    #[test]
    fn g22_order_is_a_ght() {
        let f = fixture(Fixture::G22L);
        assert!(Ght::new(f.graph, f.order.unwrap()).unwrap().check().is_ok());
    }

    #[test]
    fn missing_and_spurious_pairs_fail_reorientation() {
        let c3 = fixture(Fixture::C3).graph;
        let v = Ght::new(c3.clone(), Order::empty(3)).unwrap().check().unwrap_err();
        assert_eq!(v.kind, ViolationKind::Reorientation);
        assert_eq!(v.witnesses, vec![0, 1]);

        let spurious = Order::from_pairs(2, [(0, 1)]).unwrap();
        let v = Ght::new(OGraph::empty(2), spurious).unwrap().check().unwrap_err();
        assert_eq!(v.kind, ViolationKind::Reorientation);
    }

    #[test]
    fn checked_ghts_preserve_comparability() {
        let f = fixture(Fixture::Theta5);
        let t = Ght::new(f.graph, f.order.unwrap()).unwrap();
        assert!(t.check().is_ok());
        for u in 0..t.n() {
            for v in 0..t.n() {
                if u == v {
                    continue;
                }
                let in_order = t.order().before(u, v) || t.order().before(v, u);
                assert_eq!(t.g().comparable(u, v), in_order);
            }
        }
    }

    #[test]
    fn degenerate_triples_check() {
        assert!(Ght::empty().check().is_ok());
        assert!(Ght::new(OGraph::empty(1), Order::empty(1)).unwrap().check().is_ok());
        assert!(Ght::new(OGraph::empty(2), Order::empty(1)).is_err());
    }
}
