//! Simple graphs, loopless multigraphs and the connectivity primitives the
//! rest of the library is built on.
//!
//! Vertices are dense integer ids `0..n`. External names, if any, are mapped
//! at the I/O layer.

use crate::error::{Error, Result};

/// A loopless simple undirected graph on vertices `0..n`.
///
/// The edge list is kept sorted with `u < v` per edge, so two graphs with the
/// same edge set compare equal and all derived output is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, parallel edges and out-of-range
    /// endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(Error::InvalidArgument(format!("loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({a},{b}) has an endpoint >= n = {n}"
                )));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if norm.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("parallel edge".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &norm {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: norm, adj })
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).expect("complete graph is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted canonical edge list, `u < v` per edge.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Returns `self` plus the given extra edges (duplicates are ignored).
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Graph> {
        let mut edges = self.edges.clone();
        for &(a, b) in extra {
            if a == b || a >= self.n || b >= self.n {
                return Err(Error::InvalidArgument(format!("bad edge ({a},{b})")));
            }
            if !self.has_edge(a, b) {
                edges.push((a.min(b), a.max(b)));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Graph::new(self.n, &edges)
    }

    /// Returns `self` minus one edge.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let (a, b) = (u.min(v), u.max(v));
        let edges: Vec<_> = self.edges.iter().copied().filter(|&e| e != (a, b)).collect();
        Graph::new(self.n, &edges).expect("removing an edge keeps the graph valid")
    }

    /// Subgraph induced by `verts`, relabelled to dense ids. Returns the new
    /// graph together with the new-to-old vertex map.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut map: Vec<usize> = verts.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut back = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            back[old] = new;
        }
        let mut edges = Vec::new();
        for &(a, b) in &self.edges {
            if back[a] != usize::MAX && back[b] != usize::MAX {
                edges.push((back[a], back[b]));
            }
        }
        let g = Graph::new(map.len(), &edges).expect("induced subgraph is valid");
        (g, map)
    }

    /// Connected components after deleting `removed`, as sorted vertex lists
    /// in canonical (smallest-vertex) order. Removed vertices appear in no
    /// component.
    pub fn components_without(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let mut dead = vec![false; self.n];
        for &r in removed {
            dead[r] = true;
        }
        let mut seen = dead.clone();
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_without(&[])
    }

    /// True when every vertex lies in one component (vacuously for n <= 1).
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidArgument(format!(
                "vertex pair ({u},{v}) out of range for n = {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("pair ({u},{u}) has equal endpoints")));
        }
        Ok(())
    }

    /// Maximum number of pairwise internally vertex-disjoint `u`-`v` paths.
    ///
    /// Computed as a unit-vertex-capacity maximum flow with vertex splitting.
    /// A direct `uv` edge counts as one path, so the value is defined for
    /// adjacent pairs as well.
    pub fn kappa(&self, u: usize, v: usize) -> Result<usize> {
        self.check_pair(u, v)?;
        // Split every vertex w into w_in = 2w and w_out = 2w + 1 joined by a
        // capacity-1 arc; each graph edge becomes two capacity-1 arcs between
        // the split halves. Source is u_out, sink is v_in, so u and v are
        // effectively uncapacitated.
        let mut net = FlowNetwork::new(2 * self.n);
        for w in 0..self.n {
            net.add_arc(2 * w, 2 * w + 1, 1);
        }
        for &(a, b) in &self.edges {
            net.add_arc(2 * a + 1, 2 * b, 1);
            net.add_arc(2 * b + 1, 2 * a, 1);
        }
        Ok(net.max_flow(2 * u + 1, 2 * v))
    }

    fn is_two_separator(&self, a: usize, b: usize) -> bool {
        self.components_without(&[a, b]).len() >= 2
    }

    /// All pairs `{a,b}` whose removal disconnects the graph, in lexicographic
    /// order. The graph must be 2-connected.
    pub fn two_separators(&self) -> Result<Vec<(usize, usize)>> {
        if !self.is_k_connected(2) {
            return Err(Error::Precondition("two_separators requires a 2-connected graph".into()));
        }
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.is_two_separator(a, b) {
                    out.push((a, b));
                }
            }
        }
        Ok(out)
    }

    /// True iff the graph has at least `k + 1` vertices and stays connected
    /// after deleting any set of fewer than `k` vertices.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if self.n < k + 1 {
            return false;
        }
        if !self.is_connected() {
            return false;
        }
        // Checking subsets of size exactly k - 1 suffices: a disconnecting
        // set of smaller size extends to one of size k - 1 while n >= k + 1.
        if k <= 1 {
            return true;
        }
        let mut subset: Vec<usize> = (0..k - 1).collect();
        loop {
            if self.components_without(&subset).len() >= 2 {
                return false;
            }
            // next (k-1)-subset of 0..n in lexicographic order
            let mut i = k - 1;
            loop {
                if i == 0 {
                    return true;
                }
                i -= 1;
                if subset[i] != i + self.n - (k - 1) {
                    break;
                }
            }
            subset[i] += 1;
            for j in i + 1..k - 1 {
                subset[j] = subset[j - 1] + 1;
            }
        }
    }

    /// True iff the endpoints of `s1` lie in different components of the
    /// graph minus `s2`. Both pairs must be 2-separators.
    pub fn crossing(&self, s1: (usize, usize), s2: (usize, usize)) -> Result<bool> {
        for (a, b) in [s1, s2] {
            self.check_pair(a, b)?;
            if !self.is_two_separator(a, b) {
                return Err(Error::Precondition(format!("({a},{b}) is not a 2-separator")));
            }
        }
        let comps = self.components_without(&[s2.0, s2.1]);
        let find = |x: usize| comps.iter().position(|c| c.binary_search(&x).is_ok());
        Ok(match (find(s1.0), find(s1.1)) {
            (Some(i), Some(j)) => i != j,
            // an endpoint of s1 inside s2 sits in no component
            _ => false,
        })
    }
}

/// A loopless multigraph on vertices `0..n`; parallel edges are allowed and
/// each edge is identified by its index in the list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut norm = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(Error::InvalidArgument(format!("loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({a},{b}) has an endpoint >= n = {n}"
                )));
            }
            norm.push((a.min(b), a.max(b)));
        }
        Ok(Multigraph { n, edges: norm })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge with the given id (endpoints sorted).
    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Ids of edges incident with `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| self.edges[e].0 == v || self.edges[e].1 == v)
            .collect()
    }

    /// The multigraph with edge `id` removed; remaining edges are re-indexed
    /// densely in the original order.
    pub fn without_edge(&self, id: usize) -> Multigraph {
        let mut edges = self.edges.clone();
        edges.remove(id);
        Multigraph { n: self.n, edges }
    }

    /// Number of edges joining distinct parts of the partition.
    pub fn crossing_edges(&self, partition: &VertexPartition) -> usize {
        let part = partition.part_index();
        self.edges.iter().filter(|&&(a, b)| part[a] != part[b]).count()
    }

    /// Connected components (isolated vertices included) of the multigraph
    /// restricted to the given edge ids.
    pub fn components_of_edges(&self, ids: &[usize]) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &e in ids {
            let (a, b) = self.edges[e];
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

/// A partition of the vertex set `0..n` into non-empty disjoint parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    n: usize,
    parts: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(n: usize, parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for part in &parts {
            if part.is_empty() {
                return Err(Error::InvalidArgument("empty part".into()));
            }
            for &v in part {
                if v >= n {
                    return Err(Error::InvalidArgument(format!("vertex {v} out of range")));
                }
                if seen[v] {
                    return Err(Error::InvalidArgument(format!("vertex {v} in two parts")));
                }
                seen[v] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::InvalidArgument("partition does not cover all vertices".into()));
        }
        let mut parts: Vec<Vec<usize>> = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect();
        parts.sort();
        Ok(VertexPartition { n, parts })
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// part index per vertex
    fn part_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                idx[v] = i;
            }
        }
        idx
    }

    /// Every partition of `0..n`. Exponential; intended for small test
    /// instances only.
    pub fn enumerate(n: usize) -> Vec<VertexPartition> {
        fn rec(v: usize, n: usize, acc: &mut Vec<Vec<usize>>, out: &mut Vec<VertexPartition>) {
            if v == n {
                out.push(
                    VertexPartition::new(n, acc.clone()).expect("enumerated partition is valid"),
                );
                return;
            }
            for i in 0..acc.len() {
                acc[i].push(v);
                rec(v + 1, n, acc, out);
                acc[i].pop();
            }
            acc.push(vec![v]);
            rec(v + 1, n, acc, out);
            acc.pop();
        }
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        rec(0, n, &mut Vec::new(), &mut out);
        out
    }
}

/// Minimal integer max-flow used by `kappa`. Capacities here are tiny, so
/// plain BFS augmentation is plenty.
struct FlowNetwork {
    // arcs stored as parallel arrays; arc i and i^1 are a residual pair
    head: Vec<usize>,
    residual: Vec<i64>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork { head: Vec::new(), residual: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i64) {
        let id = self.head.len();
        self.head.push(to);
        self.residual.push(cap);
        self.out[from].push(id);
        self.head.push(from);
        self.residual.push(0);
        self.out[to].push(id + 1);
    }

    fn max_flow(&mut self, source: usize, sink: usize) -> usize {
        let mut flow = 0;
        loop {
            let mut prev_arc = vec![usize::MAX; self.out.len()];
            let mut queue = std::collections::VecDeque::from([source]);
            let mut seen = vec![false; self.out.len()];
            seen[source] = true;
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                for &a in &self.out[x] {
                    let y = self.head[a];
                    if !seen[y] && self.residual[a] > 0 {
                        seen[y] = true;
                        prev_arc[y] = a;
                        queue.push_back(y);
                    }
                }
            }
            if !seen[sink] {
                return flow;
            }
            // unit capacities: every augmenting path carries exactly 1
            let mut x = sink;
            while x != source {
                let a = prev_arc[x];
                self.residual[a] -= 1;
                self.residual[a ^ 1] += 1;
                x = self.head[a ^ 1];
            }
            flow += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    /// two K4 glued along the edge (2,3); vertices 0..6
    pub(crate) fn two_k4() -> Graph {
        Graph::new(
            6,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
        )
        .unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(Graph::new(3, &[(0, 0)]).is_err());
        assert!(Graph::new(3, &[(0, 3)]).is_err());
        assert!(Graph::new(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Multigraph::new(2, &[(0, 1), (1, 0)]).is_ok());
        assert!(Multigraph::new(2, &[(1, 1)]).is_err());
    }

    #[test]
    fn kappa_examples() {
        let k4 = Graph::complete(4);
        for u in 0..4 {
            for v in u + 1..4 {
                assert_eq!(k4.kappa(u, v).unwrap(), 3);
            }
        }
        assert_eq!(path(3).kappa(0, 2).unwrap(), 1);
        assert_eq!(cycle(4).kappa(0, 2).unwrap(), 2);
        assert!(k4.kappa(1, 1).is_err());
    }

    #[test]
    fn kappa_symmetry_and_adjacent_edge_law() {
        let g = two_k4();
        for u in 0..6 {
            for v in u + 1..6 {
                let k = g.kappa(u, v).unwrap();
                assert_eq!(k, g.kappa(v, u).unwrap());
                if g.has_edge(u, v) {
                    assert_eq!(k, 1 + g.without_edge(u, v).kappa(u, v).unwrap());
                }
            }
        }
    }

    /// Brute-force Menger check for non-adjacent pairs: kappa equals the size
    /// of a minimum separating set disjoint from the pair.
    #[test]
    fn kappa_menger_brute_force() {
        let graphs = [two_k4(), cycle(6), path(5), Graph::complete(5)];
        for g in &graphs {
            let n = g.vertex_count();
            for u in 0..n {
                for v in u + 1..n {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let mut min_sep = usize::MAX;
                    for mask in 0u32..(1 << n) {
                        if mask & (1 << u) != 0 || mask & (1 << v) != 0 {
                            continue;
                        }
                        let removed: Vec<usize> =
                            (0..n).filter(|&w| mask & (1 << w) != 0).collect();
                        let comps = g.components_without(&removed);
                        let cu = comps.iter().position(|c| c.binary_search(&u).is_ok());
                        let cv = comps.iter().position(|c| c.binary_search(&v).is_ok());
                        if cu != cv {
                            min_sep = min_sep.min(removed.len());
                        }
                    }
                    assert_eq!(g.kappa(u, v).unwrap(), min_sep, "pair ({u},{v})");
                }
            }
        }
    }

    #[test]
    fn two_separator_examples() {
        // two triangles sharing the edge (0,1)
        let g = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        assert_eq!(g.two_separators().unwrap(), vec![(0, 1)]);
        assert_eq!(Graph::complete(4).two_separators().unwrap(), vec![]);
        assert_eq!(two_k4().two_separators().unwrap(), vec![(2, 3)]);
        // not 2-connected -> precondition error
        assert!(path(4).two_separators().is_err());
    }

    #[test]
    fn two_separators_match_brute_force() {
        let graphs = [two_k4(), cycle(8), Graph::complete(6)];
        for g in &graphs {
            let n = g.vertex_count();
            let mut brute = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if g.components_without(&[a, b]).len() >= 2 {
                        brute.push((a, b));
                    }
                }
            }
            assert_eq!(g.two_separators().unwrap(), brute);
        }
    }

    #[test]
    fn k_connectivity_examples() {
        assert!(Graph::complete(4).is_k_connected(3));
        assert!(!cycle(4).is_k_connected(3));
        assert!(cycle(4).is_k_connected(2));
        assert!(two_k4().is_k_connected(2));
        assert!(!two_k4().is_k_connected(3));
        assert!(!Graph::new(2, &[]).unwrap().is_k_connected(1));
        assert!(Graph::new(2, &[(0, 1)]).unwrap().is_k_connected(1));
        // k-connectivity needs at least k+1 vertices
        assert!(!Graph::complete(3).is_k_connected(3));
    }

    #[test]
    fn crossing_examples() {
        let c4 = cycle(4);
        assert!(c4.crossing((0, 2), (1, 3)).unwrap());
        assert!(c4.crossing((1, 3), (0, 2)).unwrap());
        let g = two_k4();
        assert!(g.crossing((0, 1), (2, 3)).is_err());
        assert!(!g.crossing((2, 3), (2, 3)).unwrap());
    }

    #[test]
    fn partition_enumeration_counts() {
        // Bell numbers 1, 1, 2, 5, 15, 52
        assert_eq!(VertexPartition::enumerate(1).len(), 1);
        assert_eq!(VertexPartition::enumerate(3).len(), 5);
        assert_eq!(VertexPartition::enumerate(5).len(), 52);
    }

    #[test]
    fn multigraph_crossing_edges() {
        let h = Multigraph::new(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        let p = VertexPartition::new(3, vec![vec![0], vec![1, 2]]).unwrap();
        assert_eq!(h.crossing_edges(&p), 2);
        let q = VertexPartition::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(h.crossing_edges(&q), 0);
    }
}
