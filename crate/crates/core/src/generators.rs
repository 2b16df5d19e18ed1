//! Canonical fixtures, seeded random instance generation, and relabeling.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::graph::{OGraph, Vertex};
use crate::order::Order;

/// The named small instances used throughout the tests and the CLI.
///
/// Vertex ids follow the documented letter order: `a=0, b=1, c=2, d=3, e=4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixture {
    /// Oriented triangle 0→1→2→0: pseudo-transitive but not transitive.
    C3,
    /// Transitive triangle with all arcs at `c` pointing in, reoriented
    /// `a ≺ c ≺ b`: the sink-side obstruction base.
    TtL,
    /// Transitive triangle with all arcs at `c` pointing out, same order:
    /// the source-side obstruction base.
    TtR,
    /// Two disjoint arcs `a→c`, `b→d` ordered `a ≺ c`, `d ≺ b`; extended by
    /// a vertex below, this defeats any order extension.
    G22L,
    /// Same base; the obstruction vertex attaches above instead.
    G22R,
    /// Five vertices with `a→c`, `b→d`, `d→e`, `e→b`: the smallest instance
    /// where a 2⊕2 pattern is rescued by a one-hop witness chain.
    Theta5,
}

impl Fixture {
    pub const ALL: [Fixture; 6] = [
        Fixture::C3,
        Fixture::TtL,
        Fixture::TtR,
        Fixture::G22L,
        Fixture::G22R,
        Fixture::Theta5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::C3 => "C3",
            Fixture::TtL => "TT-L",
            Fixture::TtR => "TT-R",
            Fixture::G22L => "G22-L",
            Fixture::G22R => "G22-R",
            Fixture::Theta5 => "THETA5",
        }
    }
}

impl std::str::FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Fixture::ALL
            .iter()
            .copied()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::invalid(format!("unknown fixture {s:?}")))
    }
}

/// A fixture graph plus its canonical reorientation, where one is defined.
#[derive(Debug, Clone)]
pub struct FixtureData {
    pub graph: OGraph,
    pub order: Option<Order>,
}

type Pairs = &'static [(Vertex, Vertex)];

pub fn fixture(name: Fixture) -> FixtureData {
    let (n, arrows): (usize, Pairs) = match name {
        Fixture::C3 => (3, &[(0, 1), (1, 2), (2, 0)]),
        Fixture::TtL => (3, &[(0, 1), (1, 2), (0, 2)]),
        Fixture::TtR => (3, &[(0, 1), (2, 1), (2, 0)]),
        Fixture::G22L | Fixture::G22R => (4, &[(0, 2), (1, 3)]),
        Fixture::Theta5 => (5, &[(0, 2), (1, 3), (3, 4), (4, 1)]),
    };
    let order: Option<Pairs> = match name {
        Fixture::C3 => None,
        Fixture::TtL | Fixture::TtR => Some(&[(0, 2), (2, 1), (0, 1)]),
        Fixture::G22L | Fixture::G22R => Some(&[(0, 2), (3, 1)]),
        Fixture::Theta5 => Some(&[(0, 2), (3, 4), (4, 1), (3, 1)]),
    };
    FixtureData {
        graph: OGraph::from_arrows(n, arrows.iter().copied()).expect("fixture arrows are valid"),
        order: order.map(|pairs| Order::from_pairs(n, pairs.iter().copied()).expect("fixture order is valid")),
    }
}

/// Generates a pseudo-transitive ograph with a transitive reorientation
/// guaranteed by construction.
///
/// A random strict partial order is drawn first (the transitive closure of
/// a random DAG over a shuffled vertex order, each candidate arc kept with
/// probability `density`), then a `flips` fraction of its arcs is visited
/// in seeded random order and each arc is reversed when the reversal keeps
/// the graph pseudo-transitive. The generator is ChaCha8 seeded with
/// `seed`, so identical parameters reproduce the graph bit for bit on any
/// platform.
pub fn random_pseudo_transitive(n: usize, density: f64, flips: f64, seed: u64) -> OGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut position: Vec<usize> = (0..n).collect();
    position.shuffle(&mut rng);

    // DAG arcs run along the shuffled positions; close transitively with
    // one bitset row per vertex, sinks first.
    let words = n.div_ceil(64).max(1);
    let mut reach = vec![0u64; n * words];
    let mut direct = vec![false; n * n];
    for u in 0..n {
        for v in 0..n {
            if position[u] < position[v] && u != v && rng.gen_bool(density) {
                direct[u * n + v] = true;
            }
        }
    }
    let mut by_position: Vec<Vertex> = (0..n).collect();
    by_position.sort_by_key(|&v| std::cmp::Reverse(position[v]));
    for &u in &by_position {
        for v in 0..n {
            if direct[u * n + v] {
                reach[u * words + v / 64] |= 1 << (v % 64);
                for w in 0..words {
                    let bits = reach[v * words + w];
                    reach[u * words + w] |= bits;
                }
            }
        }
    }

    let mut g = OGraph::empty(n);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if reach[u * words + v / 64] >> (v % 64) & 1 == 1 {
                g.add_arrow(u, v).expect("closure arcs are loop-free and asymmetric");
                arcs.push((u, v));
            }
        }
    }

    arcs.shuffle(&mut rng);
    let attempts = (flips * arcs.len() as f64).round() as usize;
    for &(u, v) in arcs.iter().take(attempts.min(arcs.len())) {
        try_flip(&mut g, u, v);
    }
    g
}

/// Reverses `u ⊸ v` if the reversal keeps the graph pseudo-transitive.
/// Comparabilities are untouched by a flip, so only the two families of
/// paths through the new arc `v ⊸ u` need checking. O(n).
fn try_flip(g: &mut OGraph, u: Vertex, v: Vertex) {
    debug_assert!(g.arrow(u, v));
    for w in 0..g.n() {
        if g.arrow(w, v) && !g.comparable(w, u) && w != u {
            return;
        }
        if g.arrow(u, w) && !g.comparable(v, w) && w != v {
            return;
        }
    }
    g.flip_arrow(u, v);
}

/// The isomorphic copy with vertex `v` renamed to `perm[v]`.
pub fn relabel(g: &OGraph, perm: &[Vertex]) -> Result<OGraph, Error> {
    if perm.len() != g.n() {
        return Err(Error::invalid(format!(
            "permutation has {} entries for a graph on {} vertices",
            perm.len(),
            g.n()
        )));
    }
    let mut seen = vec![false; g.n()];
    for &p in perm {
        if p >= g.n() || seen[p] {
            return Err(Error::invalid("not a permutation of 0..n".to_string()));
        }
        seen[p] = true;
    }
    let mut out = OGraph::empty(g.n());
    for (u, v) in g.arrows() {
        out.add_arrow(perm[u], perm[v])?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::smart_reorient;
    use crate::format;

    #[test]
    fn theta5_edges_are_exact() {
        let g = fixture(Fixture::Theta5).graph;
        assert_eq!(g.arrows().collect::<Vec<_>>(), vec![(0, 2), (1, 3), (3, 4), (4, 1)]);
    }

    #[test]
    fn c3_is_the_oriented_triangle() {
        let g = fixture(Fixture::C3).graph;
        assert_eq!(g.arrows().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 0)]);
        assert!(g.is_pseudo_transitive().is_ok());
    }

    #[test]
    fn g22_has_the_stated_order() {
        let f = fixture(Fixture::G22L);
        assert_eq!(f.order.unwrap().pairs().collect::<Vec<_>>(), vec![(0, 2), (3, 1)]);
    }

    #[test]
    fn fixture_names_round_trip() {
        for f in Fixture::ALL {
            assert_eq!(f.name().parse::<Fixture>().unwrap(), f);
        }
        assert!("nope".parse::<Fixture>().is_err());
    }

    #[test]
    fn zero_flips_is_transitive_and_reorients_to_itself() {
        for seed in 0..5 {
            let g = random_pseudo_transitive(8, 0.5, 0.0, seed);
            // transitive: every 2-path closes
            for (a, b) in g.arrows().collect::<Vec<_>>() {
                for c in 0..g.n() {
                    if g.arrow(b, c) {
                        assert!(g.arrow(a, c));
                    }
                }
            }
            let t = smart_reorient(&g).unwrap();
            assert_eq!(t.order().pairs().collect::<Vec<_>>(), g.arrows().collect::<Vec<_>>());
        }
    }

    #[test]
    fn zero_density_is_empty() {
        let g = random_pseudo_transitive(10, 0.0, 0.5, 7);
        assert_eq!(g.arrow_count(), 0);
    }

    #[test]
    fn generated_graphs_are_pseudo_transitive() {
        for seed in 0..20 {
            let g = random_pseudo_transitive(9, 0.6, 0.7, seed);
            assert!(g.is_pseudo_transitive().is_ok(), "seed {seed}");
        }
    }

    #[test]
    fn generation_is_reproducible_byte_for_byte() {
        let a = random_pseudo_transitive(12, 0.4, 0.5, 99);
        let b = random_pseudo_transitive(12, 0.4, 0.5, 99);
        assert_eq!(format::write_ograph(&a, None), format::write_ograph(&b, None));
    }

    #[test]
    fn relabel_identity_and_inverse() {
        let g = fixture(Fixture::Theta5).graph;
        let id: Vec<usize> = (0..5).collect();
        assert_eq!(relabel(&g, &id).unwrap(), g);

        let perm = vec![2, 0, 4, 1, 3];
        let mut inverse = vec![0; 5];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p] = i;
        }
        let there = relabel(&g, &perm).unwrap();
        assert_eq!(relabel(&there, &inverse).unwrap(), g);
        assert!(relabel(&g, &[0, 0, 1, 2, 3]).is_err());
        assert!(relabel(&g, &[0, 1]).is_err());
    }

    #[test]
    fn relabeled_copies_still_reorient() {
        let g = random_pseudo_transitive(7, 0.5, 0.5, 3);
        let perm = vec![6, 2, 5, 0, 3, 1, 4];
        let h = relabel(&g, &perm).unwrap();
        assert!(h.is_pseudo_transitive().is_ok());
        assert!(smart_reorient(&h).unwrap().check().is_ok());
    }
}
