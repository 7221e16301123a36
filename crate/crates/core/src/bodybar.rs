//! Body-bar frameworks in every dimension: the union of k graphic matroids
//! over a multigraph, its bridges and superbricks, (highly) k-tree-connected
//! tests, the body-bar graph construction, and the resulting rigidity and
//! linkedness decisions.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Multigraph};

/// A maximum edge set partitioned into k disjoint forests: a basis of the
/// union of k copies of the cycle matroid.
#[derive(Debug, Clone)]
pub struct ForestPacking {
    k: usize,
    /// forest index per edge id, `None` for edges outside the basis
    assignment: Vec<Option<usize>>,
}

impl ForestPacking {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Edge ids of forest `i`, ascending.
    pub fn forest(&self, i: usize) -> Vec<usize> {
        (0..self.assignment.len()).filter(|&e| self.assignment[e] == Some(i)).collect()
    }

    /// Size of the packed edge set = rank of the union matroid.
    pub fn rank(&self) -> usize {
        self.assignment.iter().filter(|a| a.is_some()).count()
    }
}

/// Endpoint tree-path of `edge` inside the forest, or `None` when its
/// endpoints are disconnected there (so the edge can join the forest).
fn forest_cycle(
    h: &Multigraph,
    assignment: &[Option<usize>],
    forest: usize,
    edge: usize,
    skip: Option<usize>,
) -> Option<Vec<usize>> {
    let n = h.vertex_count();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (e, assigned) in assignment.iter().enumerate() {
        if Some(e) == skip || *assigned != Some(forest) || e == edge {
            continue;
        }
        let (a, b) = h.edge(e);
        adj[a].push((b, e));
        adj[b].push((a, e));
    }
    let (s, t) = h.edge(edge);
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        if x == t {
            let mut path = Vec::new();
            let mut cur = t;
            while cur != s {
                let (p, e) = prev[cur].expect("path edge");
                path.push(e);
                cur = p;
            }
            path.sort_unstable();
            return Some(path);
        }
        for &(y, e) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                prev[y] = Some((x, e));
                queue.push_back(y);
            }
        }
    }
    None
}

/// Greedy basis construction for the union of `k` graphic matroids with
/// breadth-first augmenting paths in the exchange digraph: an arc `y -> z`
/// means z sits on the cycle y would close in z's forest, so z may leave to
/// let y in.
fn pack_forests(h: &Multigraph, k: usize, skip: Option<usize>) -> ForestPacking {
    assert!(k >= 1);
    let m = h.edge_count();
    let mut assignment: Vec<Option<usize>> = vec![None; m];
    for e in 0..m {
        if Some(e) == skip {
            continue;
        }
        augment(h, k, &mut assignment, e, skip);
    }
    ForestPacking { k, assignment }
}

fn augment(h: &Multigraph, k: usize, assignment: &mut [Option<usize>], start: usize, skip: Option<usize>) -> bool {
    let m = h.edge_count();
    // BFS over edge ids; parent arc records (predecessor edge, forest)
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; m];
    let mut seen = vec![false; m];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(y) = queue.pop_front() {
        for forest in 0..k {
            if assignment[y] == Some(forest) {
                continue;
            }
            match forest_cycle(h, assignment, forest, y, skip) {
                None => {
                    // y fits here; unwind the exchange path
                    let mut cur = y;
                    let mut dest = forest;
                    loop {
                        let prev = parent[cur];
                        assignment[cur] = Some(dest);
                        match prev {
                            None => return true,
                            Some((p, f)) => {
                                dest = f;
                                cur = p;
                            }
                        }
                    }
                }
                Some(cycle) => {
                    for z in cycle {
                        if !seen[z] {
                            seen[z] = true;
                            parent[z] = Some((y, forest));
                            queue.push_back(z);
                        }
                    }
                }
            }
        }
    }
    false
}

/// Maximum size of an edge set of `h` partitionable into `k` forests.
pub fn matroid_union_rank(h: &Multigraph, k: usize) -> usize {
    pack_forests(h, k, None).rank()
}

/// A maximum packing itself, for callers that want the forests.
pub fn matroid_union_packing(h: &Multigraph, k: usize) -> ForestPacking {
    pack_forests(h, k, None)
}

/// Edge ids whose removal drops the union-matroid rank (the coloops),
/// ascending. Rank is recomputed per edge; this is the complexity hot spot
/// but entirely adequate at the instance sizes this library targets.
pub fn matroid_union_bridges(h: &Multigraph, k: usize) -> Vec<usize> {
    let full = matroid_union_rank(h, k);
    (0..h.edge_count())
        .filter(|&e| pack_forests(h, k, Some(e)).rank() == full - 1)
        .collect()
}

/// Vertex partition into k-superbricks: connected components left after
/// the union-matroid bridges are removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperbrickPartition {
    /// sorted vertex sets, in canonical order
    pub parts: Vec<Vec<usize>>,
    /// the removed bridge edge ids
    pub bridges: Vec<usize>,
}

impl SuperbrickPartition {
    pub fn part_of(&self, v: usize) -> usize {
        self.parts
            .iter()
            .position(|p| p.binary_search(&v).is_ok())
            .expect("parts partition the vertex set")
    }
}

pub fn superbricks(h: &Multigraph, k: usize) -> SuperbrickPartition {
    let bridges = matroid_union_bridges(h, k);
    let keep: Vec<usize> = (0..h.edge_count()).filter(|e| !bridges.contains(e)).collect();
    SuperbrickPartition { parts: h.components_of_edges(&keep), bridges }
}

/// Whether `h` contains k edge-disjoint spanning trees; single vertices pass
/// vacuously and disconnected multigraphs fail.
pub fn is_k_tree_connected(h: &Multigraph, k: usize) -> bool {
    assert!(k >= 1);
    let n = h.vertex_count();
    if n <= 1 {
        return true;
    }
    matroid_union_rank(h, k) == k * (n - 1)
}

/// k-tree-connected even after deleting any single edge; a single vertex
/// passes for every k.
pub fn is_highly_k_tree_connected(h: &Multigraph, k: usize) -> bool {
    assert!(k >= 1);
    let n = h.vertex_count();
    if n <= 1 {
        return true;
    }
    if !is_k_tree_connected(h, k) {
        return false;
    }
    let target = k * (n - 1);
    (0..h.edge_count()).all(|e| pack_forests(h, k, Some(e)).rank() == target)
}

/// The body-bar graph of a multigraph: each vertex becomes a complete body
/// with one vertex per incident edge (slots ordered by edge id), each edge a
/// bar joining its slots, so the bars are pairwise disjoint.
#[derive(Debug, Clone)]
pub struct BodyBarGraph {
    pub graph: Graph,
    /// host vertex per body-bar vertex
    pub body_of: Vec<usize>,
    /// slot index within the body per body-bar vertex
    pub slot_of: Vec<usize>,
    /// bar endpoints per host edge id
    pub bar_of: Vec<(usize, usize)>,
    /// half-open range of body-bar vertex ids per host vertex
    pub body_range: Vec<(usize, usize)>,
}

pub fn body_bar_graph(h: &Multigraph) -> BodyBarGraph {
    let n = h.vertex_count();
    let mut body_range = Vec::with_capacity(n);
    let mut body_of = Vec::new();
    let mut slot_of = Vec::new();
    let mut slot_vertex: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n]; // (edge id, gv) per host
    let mut next = 0;
    for (w, slots) in slot_vertex.iter_mut().enumerate() {
        let incident = h.incident_edges(w);
        body_range.push((next, next + incident.len()));
        for (slot, &e) in incident.iter().enumerate() {
            slots.push((e, next));
            body_of.push(w);
            slot_of.push(slot);
            next += 1;
        }
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for &(lo, hi) in &body_range {
        for a in lo..hi {
            for b in a + 1..hi {
                edges.push((a, b));
            }
        }
    }
    let mut bar_of = Vec::with_capacity(h.edge_count());
    for e in 0..h.edge_count() {
        let (w, z) = h.edge(e);
        let gu = slot_vertex[w].iter().find(|&&(id, _)| id == e).expect("slot").1;
        let gv = slot_vertex[z].iter().find(|&&(id, _)| id == e).expect("slot").1;
        edges.push((gu.min(gv), gu.max(gv)));
        bar_of.push((gu, gv));
    }
    let graph = Graph::new(next, &edges).expect("body-bar graph is simple");
    BodyBarGraph { graph, body_of, slot_of, bar_of, body_range }
}

fn check_size(h: &Multigraph) -> Result<()> {
    if h.vertex_count() < 2 || h.edge_count() < 2 {
        return Err(Error::Precondition(
            "body-bar decisions require at least 2 vertices and 2 edges".into(),
        ));
    }
    Ok(())
}

fn tree_degree(d: usize) -> usize {
    d * (d + 1) / 2
}

/// Rigidity of the body-bar graph in dimension `d`, decided on the
/// multigraph via tree packing.
pub fn is_rigid_body_bar(h: &Multigraph, d: usize) -> Result<bool> {
    if d < 1 {
        return Err(Error::InvalidArgument("dimension must be at least 1".into()));
    }
    check_size(h)?;
    Ok(is_k_tree_connected(h, tree_degree(d)))
}

/// Global rigidity of the body-bar graph in dimension `d`.
pub fn is_globally_rigid_body_bar(h: &Multigraph, d: usize) -> Result<bool> {
    if d < 1 {
        return Err(Error::InvalidArgument("dimension must be at least 1".into()));
    }
    check_size(h)?;
    Ok(is_highly_k_tree_connected(h, tree_degree(d)))
}

/// Global linkedness of two body-bar vertices in dimension `d`: adjacency,
/// or one superbrick hosting both bodies.
pub fn is_globally_linked_body_bar(h: &Multigraph, d: usize, u: usize, v: usize) -> Result<bool> {
    if d < 1 {
        return Err(Error::InvalidArgument("dimension must be at least 1".into()));
    }
    check_size(h)?;
    let bb = body_bar_graph(h);
    let n = bb.graph.vertex_count();
    if u >= n || v >= n || u == v {
        return Err(Error::InvalidArgument(format!("bad body-bar vertex pair ({u},{v})")));
    }
    if bb.graph.has_edge(u, v) {
        return Ok(true);
    }
    let sb = superbricks(h, tree_degree(d));
    Ok(sb.part_of(bb.body_of[u]) == sb.part_of(bb.body_of[v]))
}
