//! The two-dimensional generic rigidity matroid of a graph, driven by an
//! incremental (2,3)-sparsity pebble game.
//!
//! Every vertex starts with two pebbles and accepted edges are kept oriented
//! so that `pebbles(v) + outdeg(v) = 2` for all `v`. An edge is accepted when
//! four pebbles can be gathered on its endpoints; the accepted set is then a
//! maximal subset satisfying `|E'| <= 2|V(E')| - 3` for every non-empty
//! sub-multiset, which certifies independence in the rigidity matroid.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Incremental sparsity certificate: orientation of the accepted edges plus
/// per-vertex pebble counts.
#[derive(Debug, Clone)]
pub struct PebbleGame {
    n: usize,
    pebbles: Vec<u8>,
    out: Vec<Vec<usize>>,
    accepted: Vec<(usize, usize)>,
}

impl PebbleGame {
    pub fn new(n: usize) -> Self {
        PebbleGame { n, pebbles: vec![2; n], out: vec![Vec::new(); n], accepted: Vec::new() }
    }

    /// Runs the game over the canonical edge order of `g`.
    pub fn from_graph(g: &Graph) -> Self {
        let mut game = PebbleGame::new(g.vertex_count());
        for &(u, v) in g.edges() {
            game.try_insert(u, v);
        }
        game
    }

    /// Number of accepted edges = rank of the inserted edge set.
    pub fn rank(&self) -> usize {
        self.accepted.len()
    }

    /// Accepted edges in insertion order, endpoints sorted.
    pub fn accepted(&self) -> &[(usize, usize)] {
        &self.accepted
    }

    /// Searches the orientation from `start` for a free pebble, avoiding the
    /// pebbles parked on `locked`. On success the path to the pebble is
    /// reversed and the pebble moves to `start`.
    fn gather(&mut self, start: usize, locked: usize) -> bool {
        let mut parent = vec![usize::MAX; self.n];
        let mut visited = vec![false; self.n];
        visited[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for i in 0..self.out[x].len() {
                let y = self.out[x][i];
                if visited[y] {
                    continue;
                }
                visited[y] = true;
                parent[y] = x;
                if y != locked && self.pebbles[y] > 0 {
                    self.pebbles[y] -= 1;
                    self.pebbles[start] += 1;
                    let mut cur = y;
                    while cur != start {
                        let p = parent[cur];
                        let pos = self.out[p].iter().position(|&z| z == cur).expect("oriented edge");
                        self.out[p].swap_remove(pos);
                        self.out[cur].push(p);
                        cur = p;
                    }
                    return true;
                }
                stack.push(y);
            }
        }
        false
    }

    /// Gathers pebbles onto `u` and `v` until either four are present or no
    /// further pebble is reachable. Alternating the two endpoints makes the
    /// collection maximal regardless of how path reversals reshuffle
    /// reachability.
    fn gather_pair(&mut self, u: usize, v: usize) -> bool {
        loop {
            if self.pebbles[u] + self.pebbles[v] >= 4 {
                return true;
            }
            let a = self.pebbles[u] < 2 && self.gather(u, v);
            let b = self.pebbles[v] < 2 && self.gather(v, u);
            if !a && !b {
                return self.pebbles[u] + self.pebbles[v] >= 4;
            }
        }
    }

    /// Tries to accept the edge `uv`; returns whether it was accepted.
    /// Rejected edges leave the accepted set unchanged (the orientation may
    /// still be reshuffled, which preserves the invariant).
    pub fn try_insert(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u},{v})");
        if !self.gather_pair(u, v) {
            return false;
        }
        self.pebbles[u] -= 1;
        self.out[u].push(v);
        self.accepted.push((u.min(v), u.max(v)));
        true
    }

    /// The unique circuit inside `accepted + uv` containing `uv`, for an edge
    /// that the game rejects. After a failed collection the vertices
    /// reachable from `u` and `v` span exactly the minimal tight set
    /// containing the pair, and the accepted edges inside it together with
    /// `uv` form the circuit.
    pub fn fundamental_circuit(&mut self, u: usize, v: usize) -> Result<Vec<(usize, usize)>> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::InvalidArgument(format!("bad edge ({u},{v})")));
        }
        if self.gather_pair(u, v) {
            return Err(Error::InvalidArgument(format!(
                "edge ({u},{v}) is independent of the accepted set"
            )));
        }
        let mut reach = vec![false; self.n];
        let mut stack = vec![u, v];
        reach[u] = true;
        reach[v] = true;
        while let Some(x) = stack.pop() {
            for &y in &self.out[x] {
                if !reach[y] {
                    reach[y] = true;
                    stack.push(y);
                }
            }
        }
        let mut circuit: Vec<(usize, usize)> =
            self.accepted.iter().copied().filter(|&(a, b)| reach[a] && reach[b]).collect();
        circuit.push((u.min(v), u.max(v)));
        circuit.sort_unstable();
        Ok(circuit)
    }

    #[cfg(test)]
    fn invariant_holds(&self) -> bool {
        (0..self.n).all(|v| self.pebbles[v] as usize + self.out[v].len() == 2)
    }
}

/// Rank of the edge set of `g` in the 2-dimensional rigidity matroid.
pub fn r2_rank(g: &Graph) -> usize {
    PebbleGame::from_graph(g).rank()
}

/// Rank of an arbitrary edge subset over `n` vertices.
pub fn r2_rank_of(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut game = PebbleGame::new(n);
    for &(u, v) in edges {
        game.try_insert(u, v);
    }
    game.rank()
}

/// True iff every edge of `g` is accepted, i.e. the rank equals `|E|`.
pub fn is_r2_independent(g: &Graph) -> bool {
    r2_rank(g) == g.edge_count()
}

/// Generic rigidity in the plane: rank `2n - 3` for `n >= 2`, vacuous below.
pub fn is_rigid_2d(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n <= 1 {
        return true;
    }
    r2_rank(g) == 2 * n - 3
}

/// Rigid, and still rigid after deleting any single edge. Equivalently rigid
/// with no bridge in the rigidity matroid.
pub fn is_redundantly_rigid_2d(g: &Graph) -> bool {
    is_rigid_2d(g) && r2_bridges(g).is_empty()
}

/// One connected component of the rigidity matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct R2Component {
    /// edges of the component, sorted
    pub edges: Vec<(usize, usize)>,
    /// vertices covered by those edges, sorted
    pub vertices: Vec<usize>,
    /// single-edge components are exactly the matroid bridges
    pub trivial: bool,
}

impl R2Component {
    /// The component as a standalone graph plus the new-to-old vertex map.
    pub fn graph(&self) -> (Graph, Vec<usize>) {
        let mut back = std::collections::BTreeMap::new();
        for (new, &old) in self.vertices.iter().enumerate() {
            back.insert(old, new);
        }
        let edges: Vec<_> = self.edges.iter().map(|&(a, b)| (back[&a], back[&b])).collect();
        (Graph::new(self.vertices.len(), &edges).expect("component graph is valid"), self.vertices.clone())
    }
}

/// The partition of the edge set into rigidity-matroid components.
#[derive(Debug, Clone)]
pub struct R2Decomposition {
    pub components: Vec<R2Component>,
}

impl R2Decomposition {
    pub fn nontrivial(&self) -> impl Iterator<Item = &R2Component> {
        self.components.iter().filter(|c| !c.trivial)
    }

    /// Edges forming trivial components.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> =
            self.components.iter().filter(|c| c.trivial).map(|c| c.edges[0]).collect();
        out.sort_unstable();
        out
    }

    /// Indices of non-trivial components whose vertex set contains both `u`
    /// and `v`.
    pub fn nontrivial_containing(&self, u: usize, v: usize) -> Vec<usize> {
        self.components
            .iter()
            .enumerate()
            .filter(|(_, c)| {
                !c.trivial && c.vertices.binary_search(&u).is_ok() && c.vertices.binary_search(&v).is_ok()
            })
            .map(|(i, _)| i)
            .collect()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        UnionFind { parent: (0..len).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Returns true when two distinct classes were merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Componentizes the rigidity matroid of `g`.
///
/// A pebble-game basis is fixed first; every non-basis edge then merges the
/// members of its fundamental circuit via union-find. Merging is re-iterated
/// until stable, and the closure is validated against a brute-force separator
/// check in the tests rather than assumed.
pub fn r2_components(g: &Graph) -> R2Decomposition {
    let edges = g.edges();
    let index: std::collections::BTreeMap<(usize, usize), usize> =
        edges.iter().copied().enumerate().map(|(i, e)| (e, i)).collect();
    let mut game = PebbleGame::new(g.vertex_count());
    let mut rejected = Vec::new();
    for &(u, v) in edges {
        if !game.try_insert(u, v) {
            rejected.push((u, v));
        }
    }
    let mut uf = UnionFind::new(edges.len());
    loop {
        let mut changed = false;
        for &(u, v) in &rejected {
            let circuit = game.fundamental_circuit(u, v).expect("rejected edge stays dependent");
            let base = index[&(u.min(v), u.max(v))];
            for e in circuit {
                if uf.union(base, index[&e]) {
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut classes: std::collections::BTreeMap<usize, Vec<(usize, usize)>> =
        std::collections::BTreeMap::new();
    for (i, &e) in edges.iter().enumerate() {
        classes.entry(uf.find(i)).or_default().push(e);
    }
    let components = classes
        .into_values()
        .map(|edges| {
            let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            vertices.sort_unstable();
            vertices.dedup();
            let trivial = edges.len() == 1;
            R2Component { edges, vertices, trivial }
        })
        .collect();
    R2Decomposition { components }
}

/// Edges whose deletion drops the rank, i.e. the trivial components.
pub fn r2_bridges(g: &Graph) -> Vec<(usize, usize)> {
    r2_components(g).bridges()
}
