//! The on-line reorientation engine.
//!
//! Given a [`Ght`] and a pseudo-transitive one-vertex extension, the engine
//! classifies the new vertex's neighborhood, layers it into the S/T
//! partition, and extends the order by deciding the position of the new
//! vertex relative to each old vertex. Feeding vertices one at a time
//! through [`SmartStream`] maintains a transitive reorientation of the
//! accumulated graph; every emitted order extends the previous one, so the
//! engine never revisits a decision.
//!
//! Per-step cost is O(n²): the neighborhood classification scans all pairs,
//! the layering is a two-colored breadth-first sweep over incomparability
//! restricted to the new vertex's neighborhood, and the residue sweep looks
//! at already-decided vertices only.

use crate::error::{Error, Violation, ViolationKind};
use crate::graph::{apply_delta, delta_is_pseudo_transitive, DeltaRel, ExtensionDelta, OGraph, Vertex};
use crate::order::Ght;

/// The new vertex's neighbors whose entire up-set (`n_plus`) or down-set
/// (`n_minus`) in the current order stays inside the neighborhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NPartition {
    pub n_plus: Vec<Vertex>,
    pub n_minus: Vec<Vertex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Minus,
    Plus,
}

/// One layer of the S-partition: the vertices reached at this depth of the
/// incomparability sweep, per sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layer {
    pub minus: Vec<Vertex>,
    pub plus: Vec<Vertex>,
}

/// The layered split of the new vertex's neighborhood.
///
/// Layer 0 holds the one-sided neighbors (`n_minus \ n_plus` on the minus
/// side and vice versa); layer `i + 1` holds neighbors incomparable to some
/// same-signed member of layer `i`; `residue` is the untouched rest of the
/// neighborhood. Trailing empty layers are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SPartition {
    pub layers: Vec<Layer>,
    pub residue: Vec<Vertex>,
    pub np: NPartition,
}

impl SPartition {
    /// All minus-side vertices, ascending.
    pub fn s_minus(&self) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.layers.iter().flat_map(|l| l.minus.iter().copied()).collect();
        out.sort_unstable();
        out
    }

    /// All plus-side vertices, ascending.
    pub fn s_plus(&self) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.layers.iter().flat_map(|l| l.plus.iter().copied()).collect();
        out.sort_unstable();
        out
    }

    /// The layer and sign of `s`, if it lies in some layer.
    pub fn position(&self, s: Vertex) -> Option<(usize, Sign)> {
        for (i, layer) in self.layers.iter().enumerate() {
            if layer.minus.contains(&s) {
                return Some((i, Sign::Minus));
            }
            if layer.plus.contains(&s) {
                return Some((i, Sign::Plus));
            }
        }
        None
    }
}

/// A chain `ρ(0), …, ρ(k)` with `ρ(i)` in the i-th same-signed layer and
/// consecutive entries incomparable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarSequence {
    pub sign: Sign,
    pub seq: Vec<Vertex>,
}

fn ensure_delta(t: &Ght, d: &ExtensionDelta) -> Result<(), Error> {
    if d.x() != t.n() {
        return Err(Error::invalid(format!(
            "delta introduces vertex {} but the triple has {} vertices",
            d.x(),
            t.n()
        )));
    }
    Ok(())
}

/// Computes the neighborhood classes of the incoming vertex. O(n²).
pub fn classify_neighborhood(t: &Ght, d: &ExtensionDelta) -> Result<NPartition, Error> {
    ensure_delta(t, d)?;
    let n = t.n();
    let mut n_plus = Vec::new();
    let mut n_minus = Vec::new();
    for a in 0..n {
        if !d.adjacent(a) {
            continue;
        }
        if (0..n).all(|b| !t.order().before(a, b) || d.adjacent(b)) {
            n_plus.push(a);
        }
        if (0..n).all(|b| !t.order().before(b, a) || d.adjacent(b)) {
            n_minus.push(a);
        }
    }
    Ok(NPartition { n_plus, n_minus })
}

/// Computes the layered S/T partition by a two-colored breadth-first sweep
/// over incomparability restricted to the neighborhood of the new vertex.
///
/// Both colors advance in lockstep from the same already-assigned set, so a
/// vertex reached by both colors at its first layer is reported as an
/// `s_overlap` violation rather than silently tie-broken; with the engine's
/// preconditions intact this cannot happen.
pub fn s_partition(t: &Ght, d: &ExtensionDelta) -> Result<SPartition, Error> {
    let np = classify_neighborhood(t, d)?;
    let n = t.n();
    let in_plus: Vec<bool> = mask(n, &np.n_plus);
    let in_minus: Vec<bool> = mask(n, &np.n_minus);

    let mut assigned = vec![false; n];
    let mut cur_minus: Vec<Vertex> = (0..n).filter(|&v| in_minus[v] && !in_plus[v]).collect();
    let mut cur_plus: Vec<Vertex> = (0..n).filter(|&v| in_plus[v] && !in_minus[v]).collect();
    for &v in cur_minus.iter().chain(&cur_plus) {
        assigned[v] = true;
    }

    let mut layers = Vec::new();
    while !cur_minus.is_empty() || !cur_plus.is_empty() {
        let next_minus = frontier(t.g(), d, &assigned, &cur_minus);
        let next_plus = frontier(t.g(), d, &assigned, &cur_plus);
        for &v in &next_minus {
            if next_plus.contains(&v) {
                let sm = cur_minus.iter().copied().find(|&s| t.g().incomparable(v, s)).unwrap();
                let sp = cur_plus.iter().copied().find(|&s| t.g().incomparable(v, s)).unwrap();
                return Err(Violation::new(ViolationKind::SOverlap, [v, sm, sp]).into());
            }
        }
        for &v in next_minus.iter().chain(&next_plus) {
            assigned[v] = true;
        }
        layers.push(Layer { minus: cur_minus, plus: cur_plus });
        cur_minus = next_minus;
        cur_plus = next_plus;
    }

    let residue = (0..n).filter(|&v| d.adjacent(v) && !assigned[v]).collect();
    Ok(SPartition { layers, residue, np })
}

fn mask(n: usize, vs: &[Vertex]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in vs {
        m[v] = true;
    }
    m
}

/// Unassigned neighbors of the new vertex incomparable to some member of
/// the current layer.
fn frontier(g: &OGraph, d: &ExtensionDelta, assigned: &[bool], layer: &[Vertex]) -> Vec<Vertex> {
    (0..g.n())
        .filter(|&a| d.adjacent(a) && !assigned[a] && layer.iter().any(|&s| g.incomparable(a, s)))
        .collect()
}

/// Builds a star sequence ending at `s`, taking the least-id predecessor at
/// each backtrack step. `s` must lie in some layer of `p`.
pub fn star_sequence_to(p: &SPartition, g: &OGraph, s: Vertex) -> Result<StarSequence, Error> {
    let (layer, sign) = p
        .position(s)
        .ok_or_else(|| Error::invalid(format!("vertex {s} is not in any S layer")))?;
    let mut seq = vec![s];
    for i in (0..layer).rev() {
        let side = match sign {
            Sign::Minus => &p.layers[i].minus,
            Sign::Plus => &p.layers[i].plus,
        };
        let cur = *seq.last().unwrap();
        let prev = side
            .iter()
            .copied()
            .find(|&c| g.incomparable(c, cur))
            .expect("every layer member is incomparable to something one layer down");
        seq.push(prev);
    }
    seq.reverse();
    Ok(StarSequence { sign, seq })
}

/// How the engine placed one old vertex relative to the new one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Placement {
    /// Not a neighbor: left incomparable.
    Outside,
    /// In S⁻: put below the new vertex.
    LayerMinus,
    /// In S⁺: put above the new vertex.
    LayerPlus,
    /// In the residue, forced below by an already-decided `witness` with
    /// `v ≺ witness ≺' x`.
    ForcedBelow { witness: Vertex },
    /// In the residue, forced above by a witness with `x ≺' witness ≺ v`.
    ForcedAbove { witness: Vertex },
    /// In the residue with no forcing: the arc direction is kept.
    Kept,
}

/// A smart extension step together with its working data, for callers that
/// audit the run (step diagnostics, paranoid mode, tests).
#[derive(Debug, Clone)]
pub struct ExtensionOutcome {
    pub ght: Ght,
    pub partition: SPartition,
    pub placements: Vec<Placement>,
}

impl ExtensionOutcome {
    /// Order pairs involving the new vertex, ascending by old-vertex id.
    pub fn new_pairs(&self) -> Vec<(Vertex, Vertex)> {
        let x = self.ght.n() - 1;
        let order = self.ght.order();
        (0..x)
            .filter_map(|v| {
                if order.before(v, x) {
                    Some((v, x))
                } else if order.before(x, v) {
                    Some((x, v))
                } else {
                    None
                }
            })
            .collect()
    }
}

/// Extends the order of `t` across the extension `d`.
///
/// Requires `t` to pass its check and to satisfy the three global witness
/// properties, and `d` to be a pseudo-transitive extension; the streaming
/// engine guarantees all of that inductively. None of it is re-verified
/// here: with the preconditions broken the result may fail [`Ght::check`],
/// which is exactly what the refutation tooling inspects.
///
/// Non-neighbors stay incomparable to the new vertex; layered vertices go
/// below (minus) or above (plus); residue vertices are swept in increasing
/// id order so the forcing conditions quantify only over already-decided
/// vertices, and are tie-broken by the least witness id. A residue vertex
/// forced both ways is an `internal` violation.
pub fn smart_extend(t: &Ght, d: &ExtensionDelta) -> Result<Ght, Error> {
    Ok(smart_extend_outcome(t, d)?.ght)
}

/// [`smart_extend`] with the partition and per-vertex placements exposed.
pub fn smart_extend_outcome(t: &Ght, d: &ExtensionDelta) -> Result<ExtensionOutcome, Error> {
    let partition = s_partition(t, d)?;
    let n = t.n();

    #[derive(Clone, Copy, PartialEq)]
    enum Rel {
        Undecided,
        Below,
        Above,
        Outside,
    }
    let mut rel = vec![Rel::Undecided; n];
    let mut placements = vec![Placement::Outside; n];

    for (v, r) in rel.iter_mut().enumerate() {
        if !d.adjacent(v) {
            *r = Rel::Outside;
        }
    }
    for &v in &partition.s_minus() {
        rel[v] = Rel::Below;
        placements[v] = Placement::LayerMinus;
    }
    for &v in &partition.s_plus() {
        rel[v] = Rel::Above;
        placements[v] = Placement::LayerPlus;
    }

    for &v in &partition.residue {
        let below_witness = (0..v).find(|&u| rel[u] == Rel::Below && t.order().before(v, u));
        let above_witness = (0..v).find(|&u| rel[u] == Rel::Above && t.order().before(u, v));
        let (r, p) = match (below_witness, above_witness) {
            (Some(ua), Some(ub)) => {
                return Err(Violation::new(ViolationKind::Internal, [v, ua, ub]).into());
            }
            (Some(u), None) => (Rel::Below, Placement::ForcedBelow { witness: u }),
            (None, Some(u)) => (Rel::Above, Placement::ForcedAbove { witness: u }),
            (None, None) => {
                let r = if d.rel(v) == DeltaRel::ToNew { Rel::Below } else { Rel::Above };
                (r, Placement::Kept)
            }
        };
        rel[v] = r;
        placements[v] = p;
    }

    let below: Vec<Vertex> = (0..n).filter(|&v| rel[v] == Rel::Below).collect();
    let above: Vec<Vertex> = (0..n).filter(|&v| rel[v] == Rel::Above).collect();
    let g = apply_delta(t.g(), d)?;
    let order = t.order().extended(&below, &above);
    let ght = Ght::new(g, order)?;
    Ok(ExtensionOutcome { ght, partition, placements })
}

/// What one stream step decided, without the (cheaply readable) new triple.
#[derive(Debug, Clone)]
pub struct StepReport {
    /// Order pairs involving the new vertex, ascending by old-vertex id.
    pub new_pairs: Vec<(Vertex, Vertex)>,
    pub partition: SPartition,
    pub placements: Vec<Placement>,
}

/// The streaming engine: push extensions one vertex at a time, read back
/// the maintained triple after each step.
///
/// Each pushed delta is first checked for pseudo-transitivity against the
/// accumulated graph; a failing delta aborts the step with the offending
/// triple and leaves the state untouched. Snapshots are plain values and
/// safe to share; the stream itself is strictly sequential.
#[derive(Debug, Clone)]
pub struct SmartStream {
    ght: Ght,
}

impl Default for SmartStream {
    fn default() -> Self {
        Self::new()
    }
}

impl SmartStream {
    pub fn new() -> Self {
        SmartStream { ght: Ght::empty() }
    }

    /// The triple after the last accepted step.
    pub fn ght(&self) -> &Ght {
        &self.ght
    }

    /// Vertices accepted so far.
    pub fn len(&self) -> usize {
        self.ght.n()
    }

    pub fn is_empty(&self) -> bool {
        self.ght.n() == 0
    }

    /// Accepts the next vertex and returns the step report.
    pub fn push(&mut self, d: &ExtensionDelta) -> Result<StepReport, Error> {
        delta_is_pseudo_transitive(self.ght.g(), d)?;
        let outcome = smart_extend_outcome(&self.ght, d)?;
        let report = StepReport {
            new_pairs: outcome.new_pairs(),
            partition: outcome.partition,
            placements: outcome.placements,
        };
        self.ght = outcome.ght;
        Ok(report)
    }
}

/// Streams a whole graph in vertex id order and returns the final triple.
pub fn smart_reorient(g: &OGraph) -> Result<Ght, Error> {
    let mut stream = SmartStream::new();
    for k in 0..g.n() {
        stream.push(&g.delta_at(k))?;
    }
    Ok(stream.ght)
}
