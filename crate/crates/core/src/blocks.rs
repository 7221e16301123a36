//! Decomposition of a matroid-connected graph into its 3-blocks, and
//! shellable orderings of vertex-set families.
//!
//! The augmented graph adds an edge for every 2-separator; recursively
//! cleaving it along 2-separators until every piece is 3-connected yields the
//! blocks. Matroid-connected graphs have no crossing 2-separators, so the
//! block set does not depend on the cleaving order; the order used here is
//! fixed only to make runs reproducible.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pebble::{r2_components, R2Decomposition};

/// One 3-block: an induced subgraph of the augmented host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// sorted vertex set, in host ids
    pub vertices: Vec<usize>,
    /// sorted edge set of the augmented host induced on `vertices`
    pub edges: Vec<(usize, usize)>,
}

/// A 2-separator of the host together with how many blocks contain it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorInfo {
    pub pair: (usize, usize),
    /// number of blocks whose vertex set contains both endpoints
    pub multiplicity: usize,
    /// whether the pair was already an edge of the host (no virtual edge
    /// needed)
    pub in_host: bool,
}

/// The 3-blocks of a matroid-connected graph with virtual-edge bookkeeping.
#[derive(Debug, Clone)]
pub struct ThreeBlockTree {
    pub host: Graph,
    pub blocks: Vec<Block>,
    pub separators: Vec<SeparatorInfo>,
}

impl ThreeBlockTree {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Sum of (multiplicity - 1) over the separators.
    pub fn hinge_count(&self) -> usize {
        self.separators.iter().map(|s| s.multiplicity - 1).sum()
    }

    /// Block `i` as a standalone graph plus the new-to-old vertex map.
    pub fn block_graph(&self, i: usize) -> (Graph, Vec<usize>) {
        let block = &self.blocks[i];
        let map = block.vertices.clone();
        let pos = |v: usize| map.binary_search(&v).expect("block vertex");
        let edges: Vec<_> = block.edges.iter().map(|&(a, b)| (pos(a), pos(b))).collect();
        (Graph::new(map.len(), &edges).expect("block graph"), map)
    }

    /// A 2-shellable ordering of the block vertex sets whose first set
    /// induces the designated edge. Exists for every edge of the augmented
    /// host.
    pub fn two_shellable_ordering(&self, edge: (usize, usize)) -> Option<Vec<usize>> {
        let sets: Vec<Vec<usize>> = self.blocks.iter().map(|b| b.vertices.clone()).collect();
        let (u, v) = edge;
        for first in 0..sets.len() {
            if sets[first].binary_search(&u).is_ok() && sets[first].binary_search(&v).is_ok() {
                if let Some(order) = shellable_ordering_from(&sets, 2, Some(first)) {
                    return Some(order);
                }
            }
        }
        None
    }
}

fn require_r2_connected(h: &Graph) -> Result<R2Decomposition> {
    let decomp = r2_components(h);
    let ok = h.vertex_count() >= 4
        && decomp.components.len() == 1
        && !decomp.components[0].trivial
        && decomp.components[0].vertices.len() == h.vertex_count();
    if ok {
        Ok(decomp)
    } else {
        Err(Error::Precondition(
            "three_blocks requires a matroid-connected graph on at least 4 vertices".into(),
        ))
    }
}

/// Splits a matroid-connected graph (with at least 4 vertices) into its
/// 3-blocks.
pub fn three_blocks(h: &Graph) -> Result<ThreeBlockTree> {
    require_r2_connected(h)?;
    let separators = h.two_separators()?;
    let virtuals: Vec<(usize, usize)> =
        separators.iter().copied().filter(|&(a, b)| !h.has_edge(a, b)).collect();
    let augmented = h.with_edges(&virtuals)?;

    let mut block_sets: Vec<Vec<usize>> = Vec::new();
    let all: Vec<usize> = (0..h.vertex_count()).collect();
    cleave(&augmented, all, &mut block_sets)?;
    block_sets.sort();

    let blocks: Vec<Block> = block_sets
        .into_iter()
        .map(|vertices| {
            let edges: Vec<(usize, usize)> = augmented
                .edges()
                .iter()
                .copied()
                .filter(|&(a, b)| {
                    vertices.binary_search(&a).is_ok() && vertices.binary_search(&b).is_ok()
                })
                .collect();
            Block { vertices, edges }
        })
        .collect();

    let separators = separators
        .into_iter()
        .map(|pair| {
            let multiplicity = blocks
                .iter()
                .filter(|b| {
                    b.vertices.binary_search(&pair.0).is_ok()
                        && b.vertices.binary_search(&pair.1).is_ok()
                })
                .count();
            SeparatorInfo { pair, multiplicity, in_host: h.has_edge(pair.0, pair.1) }
        })
        .collect();

    Ok(ThreeBlockTree { host: h.clone(), blocks, separators })
}

/// Recursively cleaves `piece` (vertex set of the augmented graph) along
/// 2-separators until every piece is 3-connected. The side cleaved off first
/// is the smallest one (ties broken lexicographically), which keeps the
/// recursion deterministic.
fn cleave(augmented: &Graph, piece: Vec<usize>, out: &mut Vec<Vec<usize>>) -> Result<()> {
    let (pg, map) = augmented.induced(&piece);
    let seps = pg.two_separators().map_err(|_| {
        Error::OracleDisagreement("cleaving produced a piece that is not 2-connected".into())
    })?;
    if seps.is_empty() {
        out.push(piece);
        return Ok(());
    }
    let mut best: Option<(Vec<usize>, usize, usize)> = None;
    for &(a, b) in &seps {
        for comp in pg.components_without(&[a, b]) {
            let side: Vec<usize> = comp.iter().map(|&x| map[x]).collect();
            let better = match &best {
                None => true,
                Some((cur, _, _)) => (side.len(), &side) < (cur.len(), cur),
            };
            if better {
                best = Some((side, map[a], map[b]));
            }
        }
    }
    let (side, a, b) = best.expect("a 2-separator has at least two sides");
    let mut half: Vec<usize> = side.clone();
    half.extend([a, b]);
    half.sort_unstable();
    let rest: Vec<usize> =
        piece.into_iter().filter(|v| side.binary_search(v).is_err()).collect();
    cleave(augmented, half, out)?;
    cleave(augmented, rest, out)
}

/// A permutation of `sets` in which every set meets the union of its
/// predecessors in at most `m` vertices, or `None` if no such ordering
/// exists. Backtracking with memoized dead states; exact at the scale this
/// library targets.
pub fn shellable_ordering(sets: &[Vec<usize>], m: usize) -> Option<Vec<usize>> {
    shellable_ordering_from(sets, m, None)
}

pub(crate) fn shellable_ordering_from(
    sets: &[Vec<usize>],
    m: usize,
    first: Option<usize>,
) -> Option<Vec<usize>> {
    let p = sets.len();
    assert!(p <= 63, "shellable_ordering supports at most 63 sets");
    if p == 0 {
        return Some(Vec::new());
    }
    let top = 1 + sets.iter().flatten().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; top];
    let mut order = Vec::with_capacity(p);
    let mut failed: HashSet<u64> = HashSet::new();

    fn place(sets: &[Vec<usize>], i: usize, counts: &mut [usize], order: &mut Vec<usize>) {
        for &v in &sets[i] {
            counts[v] += 1;
        }
        order.push(i);
    }
    fn unplace(sets: &[Vec<usize>], counts: &mut [usize], order: &mut Vec<usize>) {
        let i = order.pop().expect("non-empty order");
        for &v in &sets[i] {
            counts[v] -= 1;
        }
    }
    fn rec(
        sets: &[Vec<usize>],
        m: usize,
        mask: u64,
        counts: &mut [usize],
        order: &mut Vec<usize>,
        failed: &mut HashSet<u64>,
    ) -> bool {
        if order.len() == sets.len() {
            return true;
        }
        if failed.contains(&mask) {
            return false;
        }
        for i in 0..sets.len() {
            if mask & (1 << i) != 0 {
                continue;
            }
            let overlap = sets[i].iter().filter(|&&v| counts[v] > 0).count();
            if overlap > m {
                continue;
            }
            place(sets, i, counts, order);
            if rec(sets, m, mask | (1 << i), counts, order, failed) {
                return true;
            }
            unplace(sets, counts, order);
        }
        failed.insert(mask);
        false
    }

    let mut mask = 0u64;
    if let Some(i) = first {
        place(sets, i, &mut counts, &mut order);
        mask |= 1 << i;
    }
    if rec(sets, m, mask, &mut counts, &mut order, &mut failed) {
        Some(order)
    } else {
        None
    }
}

/// Checks the shellability condition directly.
pub fn is_shellable_ordering(sets: &[Vec<usize>], order: &[usize], m: usize) -> bool {
    if order.len() != sets.len() {
        return false;
    }
    let mut union: BTreeSet<usize> = BTreeSet::new();
    for &i in order {
        let overlap = sets[i].iter().filter(|v| union.contains(v)).count();
        if overlap > m {
            return false;
        }
        union.extend(sets[i].iter().copied());
    }
    true
}
