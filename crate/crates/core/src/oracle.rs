//! Brute-force ground truth for small instances.
//!
//! Everything here enumerates: direction assignments for reorientations,
//! base-3 counters for one-vertex extensions and whole ographs. Hard size
//! guards return a resource error instead of silently sampling: an oracle
//! that samples is not an oracle. Enumeration orders are fixed (counters
//! ascend, the relation to vertex 0 varies fastest), so witnesses and
//! counts are reproducible.

use crate::error::Error;
use crate::graph::{apply_delta, delta_is_pseudo_transitive, DeltaRel, ExtensionDelta, OGraph, Vertex};
use crate::order::{Ght, Order};

/// Largest edge count for [`all_transitive_reorientations`].
pub const MAX_REORIENTATION_EDGES: usize = 25;
/// Largest vertex count for [`enumerate_extensions`] and [`is_extendible`].
pub const MAX_EXTENSION_VERTICES: usize = 12;
/// Largest vertex count for whole-graph enumeration.
pub const MAX_ENUMERATION_VERTICES: usize = 5;

/// Every transitive reorientation of `g`: all `2^|E|` direction assignments
/// over the comparable pairs, filtered by transitivity. Assignment `k`
/// orients edge `i` (edges in ascending pair order) low-to-high when bit
/// `i` of `k` is clear.
pub fn all_transitive_reorientations(g: &OGraph) -> Result<Vec<Order>, Error> {
    let edges: Vec<(Vertex, Vertex)> = (0..g.n())
        .flat_map(|u| ((u + 1)..g.n()).map(move |v| (u, v)))
        .filter(|&(u, v)| g.comparable(u, v))
        .collect();
    if edges.len() > MAX_REORIENTATION_EDGES {
        return Err(Error::ResourceLimit(format!(
            "{} edges exceed the reorientation enumeration guard of {MAX_REORIENTATION_EDGES}",
            edges.len()
        )));
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << edges.len()) {
        let mut order = Order::empty(g.n());
        for (i, &(u, v)) in edges.iter().enumerate() {
            let (lo, hi) = if mask >> i & 1 == 0 { (u, v) } else { (v, u) };
            order.add_pair(lo, hi).expect("assignment pairs are fresh");
        }
        if is_transitive(&order) {
            out.push(order);
        }
    }
    Ok(out)
}

fn is_transitive(order: &Order) -> bool {
    let n = order.n();
    for a in 0..n {
        for b in 0..n {
            if !order.before(a, b) {
                continue;
            }
            for c in 0..n {
                if order.before(b, c) && !order.before(a, c) {
                    return false;
                }
            }
        }
    }
    true
}

/// All pseudo-transitive one-vertex extensions of `g`, in ascending
/// base-3 counter order over the per-vertex relation
/// (absent < toward the new vertex < away from it).
pub fn enumerate_extensions(g: &OGraph) -> Result<impl Iterator<Item = ExtensionDelta> + '_, Error> {
    let n = g.n();
    if n > MAX_EXTENSION_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "{n} vertices exceed the extension enumeration guard of {MAX_EXTENSION_VERTICES}"
        )));
    }
    let total = 3usize.pow(n as u32);
    Ok((0..total)
        .map(move |k| decode_delta(k, n))
        .filter(|d| delta_is_pseudo_transitive(g, d).is_ok()))
}

fn decode_delta(k: usize, n: usize) -> ExtensionDelta {
    let mut k = k;
    ExtensionDelta::new((0..n).map(|_| {
        let digit = k % 3;
        k /= 3;
        match digit {
            0 => DeltaRel::Incomparable,
            1 => DeltaRel::ToNew,
            _ => DeltaRel::FromNew,
        }
    }))
}

/// Searches for a transitive reorientation of `g + d` that extends the
/// order of `t`, trying each of the `2^|N(x)|` placements of the new vertex
/// with the old order fixed. Returns the first one found in mask order
/// (bit `i` set puts the i-th neighbor below the new vertex).
pub fn delta_admits_extension(t: &Ght, d: &ExtensionDelta) -> Result<Option<Order>, Error> {
    let extended = apply_delta(t.g(), d)?;
    let neighbors = d.neighborhood();
    if neighbors.len() > MAX_EXTENSION_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "{} neighbors exceed the placement search guard of {MAX_EXTENSION_VERTICES}",
            neighbors.len()
        )));
    }
    for mask in 0u64..(1u64 << neighbors.len()) {
        let mut below = Vec::new();
        let mut above = Vec::new();
        for (i, &v) in neighbors.iter().enumerate() {
            if mask >> i & 1 == 1 {
                below.push(v);
            } else {
                above.push(v);
            }
        }
        let candidate = t.order().extended(&below, &above);
        let ght = Ght::new(extended.clone(), candidate)?;
        if ght.check().is_ok() {
            return Ok(Some(ght.order().clone()));
        }
    }
    Ok(None)
}

/// Outcome of the extendibility oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extendibility {
    Extendible,
    /// The first enumerated pseudo-transitive extension admitting no
    /// transitive reorientation that extends the order.
    Obstructed(ExtensionDelta),
}

impl Extendibility {
    pub fn is_extendible(&self) -> bool {
        matches!(self, Extendibility::Extendible)
    }
}

/// Decides extendibility of `t` by exhausting every pseudo-transitive
/// one-vertex extension and every placement of the new vertex.
pub fn is_extendible(t: &Ght) -> Result<Extendibility, Error> {
    for d in enumerate_extensions(t.g())? {
        if delta_admits_extension(t, &d)?.is_none() {
            return Ok(Extendibility::Obstructed(d));
        }
    }
    Ok(Extendibility::Extendible)
}

/// All ographs on `n` labeled vertices, in ascending base-3 counter order
/// over the unordered pairs (pair `(0, 1)` varies fastest; absent <
/// low-to-high < high-to-low).
pub fn enumerate_ographs(n: usize) -> Result<impl Iterator<Item = OGraph>, Error> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "{n} vertices exceed the graph enumeration guard of {MAX_ENUMERATION_VERTICES}"
        )));
    }
    let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    let total = 3usize.pow(pairs.len() as u32);
    Ok((0..total).map(move |mut k| {
        let mut g = OGraph::empty(n);
        for &(u, v) in &pairs {
            match k % 3 {
                1 => g.add_arrow(u, v).unwrap(),
                2 => g.add_arrow(v, u).unwrap(),
                _ => {}
            }
            k /= 3;
        }
        g
    }))
}

/// The pseudo-transitive members of [`enumerate_ographs`], in the same
/// order.
pub fn enumerate_pseudo_transitive(n: usize) -> Result<impl Iterator<Item = OGraph>, Error> {
    Ok(enumerate_ographs(n)?.filter(|g| g.is_pseudo_transitive().is_ok()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{fixture, Fixture};

    #[test]
    fn c3_has_six_transitive_reorientations() {
        let g = fixture(Fixture::C3).graph;
        let all = all_transitive_reorientations(&g).unwrap();
        assert_eq!(all.len(), 6);
        // a complete base graph makes each of them a linear order
        for order in &all {
            assert_eq!(order.pair_count(), 3);
        }
    }

    #[test]
    fn single_edge_has_two_reorientations() {
        let g = OGraph::from_arrows(2, [(0, 1)]).unwrap();
        assert_eq!(all_transitive_reorientations(&g).unwrap().len(), 2);
    }

    #[test]
    fn edgeless_graph_has_the_empty_reorientation() {
        let all = all_transitive_reorientations(&OGraph::empty(3)).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].pair_count(), 0);
    }

    #[test]
    fn reorientation_guard_trips() {
        // transitive tournament on 8 vertices: 28 edges
        let mut g = OGraph::empty(8);
        for u in 0..8 {
            for v in (u + 1)..8 {
                g.add_arrow(u, v).unwrap();
            }
        }
        assert!(matches!(all_transitive_reorientations(&g), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn extension_counts() {
        let single = OGraph::empty(1);
        assert_eq!(enumerate_extensions(&single).unwrap().count(), 3);

        // pinned by the first run of this enumeration
        let c3 = fixture(Fixture::C3).graph;
        assert_eq!(enumerate_extensions(&c3).unwrap().count(), 12);

        let g22 = fixture(Fixture::G22L).graph;
        let mut obstruction = ExtensionDelta::isolated(4);
        obstruction.set(0, DeltaRel::ToNew);
        obstruction.set(1, DeltaRel::ToNew);
        assert!(enumerate_extensions(&g22).unwrap().any(|d| d == obstruction));
    }

    #[test]
    fn extension_guard_trips() {
        assert!(matches!(enumerate_extensions(&OGraph::empty(13)), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn tt_left_is_obstructed_by_the_sink_delta() {
        let f = fixture(Fixture::TtL);
        let t = Ght::new(f.graph, f.order.unwrap()).unwrap();
        let mut expected = ExtensionDelta::isolated(3);
        expected.set(2, DeltaRel::FromNew);
        assert_eq!(is_extendible(&t).unwrap(), Extendibility::Obstructed(expected));
    }

    #[test]
    fn g22_is_obstructed_by_the_below_delta() {
        let f = fixture(Fixture::G22L);
        let t = Ght::new(f.graph, f.order.unwrap()).unwrap();
        let mut expected = ExtensionDelta::isolated(4);
        expected.set(0, DeltaRel::ToNew);
        expected.set(1, DeltaRel::ToNew);
        assert_eq!(is_extendible(&t).unwrap(), Extendibility::Obstructed(expected));
    }

    #[test]
    fn c3_with_smart_order_is_extendible() {
        let t = crate::engine::smart_reorient(&fixture(Fixture::C3).graph).unwrap();
        assert!(is_extendible(&t).unwrap().is_extendible());
    }

    #[test]
    fn graph_enumeration_counts() {
        assert_eq!(enumerate_pseudo_transitive(0).unwrap().count(), 1);
        assert_eq!(enumerate_pseudo_transitive(2).unwrap().count(), 3);
        // pinned by the first run of this enumeration
        assert_eq!(enumerate_pseudo_transitive(3).unwrap().count(), 21);
        assert_eq!(enumerate_ographs(3).unwrap().count(), 27);
        assert!(matches!(enumerate_ographs(6), Err(Error::ResourceLimit(_))));
    }
}
