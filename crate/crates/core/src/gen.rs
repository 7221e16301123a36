//! Seeded graph generators and small named fixtures, shared by the test
//! suites and the benchmarks. Everything here is deterministic per seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Multigraph};
use crate::pebble;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges).expect("path")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).expect("cycle")
}

/// Wheel with `rim` rim vertices `0..rim` and hub `rim`.
pub fn wheel(rim: usize) -> Graph {
    assert!(rim >= 3);
    let mut edges: Vec<_> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    edges.extend((0..rim).map(|i| (i, rim)));
    Graph::new(rim + 1, &edges).expect("wheel")
}

/// Triangular prism: triangles {0,1,2} and {3,4,5} plus rungs (i, i+3).
pub fn prism() -> Graph {
    Graph::new(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)])
        .expect("prism")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::new(a + b, &edges).expect("complete bipartite")
}

/// Two K4 glued along the edge (2,3): K4 on {0,1,2,3} and K4 on {2,3,4,5}.
pub fn two_k4() -> Graph {
    Graph::new(
        6,
        &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
    )
    .expect("two_k4")
}

/// G(n, p) with each pair included independently.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("random graph")
}

/// A connected random graph: a random spanning tree plus `extra` random
/// chords (fewer if the graph saturates).
pub fn random_connected_graph(n: usize, extra: usize, seed: u64) -> Graph {
    assert!(n >= 1);
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.push((u, v));
    }
    let mut g = Graph::new(n, &edges).expect("random tree");
    let mut attempts = 0;
    let mut added = 0;
    while added < extra && attempts < 20 * (extra + 1) {
        attempts += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) {
            g = g.with_edges(&[(u, v)]).expect("chord");
            added += 1;
        }
    }
    g
}

/// Random loopless multigraph with exactly `m` edges, repetition allowed.
pub fn random_multigraph(n: usize, m: usize, seed: u64) -> Multigraph {
    assert!(n >= 2);
    let mut rng = rng(seed);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n);
        while v == u {
            v = rng.gen_range(0..n);
        }
        edges.push((u, v));
    }
    Multigraph::new(n, &edges).expect("random multigraph")
}

/// Random loopless multigraph with `m` edges and no isolated vertex, so
/// every body of its body-bar graph is non-empty. Needs `m >= ceil(n / 2)`.
pub fn random_multigraph_spanning(n: usize, m: usize, seed: u64) -> Multigraph {
    assert!(n >= 2 && 2 * m >= n);
    let mut rng = rng(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut edges: Vec<(usize, usize)> = perm.chunks(2).filter(|c| c.len() == 2).map(|c| (c[0], c[1])).collect();
    if n % 2 == 1 {
        let lone = perm[n - 1];
        let mut other = rng.gen_range(0..n);
        while other == lone {
            other = rng.gen_range(0..n);
        }
        edges.push((lone, other));
    }
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n);
        while v == u {
            v = rng.gen_range(0..n);
        }
        edges.push((u, v));
    }
    Multigraph::new(n, &edges).expect("spanning multigraph")
}

/// `count` parallel edges between two vertices.
pub fn parallel_edges(count: usize) -> Multigraph {
    Multigraph::new(2, &vec![(0, 1); count]).expect("parallel edges")
}

/// A random circuit of the 2-dimensional rigidity matroid: K4 or a wheel.
pub fn random_r2_circuit(seed: u64) -> Graph {
    let mut rng = rng(seed);
    match rng.gen_range(0..4) {
        0 => Graph::complete(4),
        k => wheel(3 + k),
    }
}

/// Disjointly relabels `other` onto fresh vertices of `base` except that
/// `(a2, b2)` of `other` are identified with `(a1, b1)` of `base`; any
/// resulting duplicate edge is kept once.
pub fn glue_on_pair(
    base: &Graph,
    other: &Graph,
    (a1, b1): (usize, usize),
    (a2, b2): (usize, usize),
) -> Graph {
    assert!(a1 != b1 && a2 != b2);
    let n1 = base.vertex_count();
    let mut map = vec![usize::MAX; other.vertex_count()];
    map[a2] = a1;
    map[b2] = b1;
    let mut next = n1;
    for slot in map.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    let mut edges: Vec<(usize, usize)> = base.edges().to_vec();
    for &(u, v) in other.edges() {
        edges.push((map[u].min(map[v]), map[u].max(map[v])));
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::new(next, &edges).expect("glued graph")
}

/// Builds a matroid-connected graph by gluing `blocks` random circuits in a
/// chain, each along a randomly chosen edge or non-adjacent pair of the
/// current graph.
pub fn glued_circuit_graph(blocks: usize, seed: u64) -> Graph {
    assert!(blocks >= 1);
    let mut rng = rng(seed);
    let mut g = random_r2_circuit(seed.wrapping_mul(31).wrapping_add(7));
    for i in 1..blocks {
        let piece = random_r2_circuit(seed.wrapping_mul(131).wrapping_add(i as u64));
        let glue_edge = rng.gen_bool(0.6);
        let (a1, b1) = if glue_edge {
            g.edges()[rng.gen_range(0..g.edge_count())]
        } else {
            // any pair of distinct vertices of the host
            let a = rng.gen_range(0..g.vertex_count());
            let mut b = rng.gen_range(0..g.vertex_count());
            while b == a {
                b = rng.gen_range(0..g.vertex_count());
            }
            (a, b)
        };
        let (a2, b2) = piece.edges()[rng.gen_range(0..piece.edge_count())];
        g = glue_on_pair(&g, &piece, (a1, b1), (a2, b2));
    }
    debug_assert!({
        let d = pebble::r2_components(&g);
        d.components.len() == 1 && !d.components[0].trivial
    });
    g
}

/// Six K4 clusters arranged as three two-K4 components hinged in a triangle.
///
/// The six cluster sets form an alternating cycle of pair-overlaps (inside a
/// component) and single-vertex overlaps (between components), so whichever
/// set is placed last meets the union of the others in three vertices: no
/// ordering of the six sets keeps every overlap within two vertices.
pub fn six_k4_triangle() -> Graph {
    let two = two_k4(); // blocks {0,1,2,3} and {2,3,4,5}, hinge pair (2,3)
    // component copies at offsets 0, 6, 12, then identify 5~6, 11~12, 17~0
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for off in [0usize, 6, 12] {
        for &(u, v) in two.edges() {
            edges.push((u + off, v + off));
        }
    }
    let relabel = |v: usize| -> usize {
        match v {
            6 => 5,
            12 => 10,
            17 => 0,
            v if v > 12 => v - 2,
            v if v > 6 => v - 1,
            v => v,
        }
    };
    let edges: Vec<(usize, usize)> = edges
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (relabel(u), relabel(v));
            (a.min(b), a.max(b))
        })
        .collect();
    Graph::new(15, &edges).expect("six K4 triangle")
}

/// An instance for the reflection refuter: two random connected blobs joined
/// through a shared separator pair, plus the designated split pair (u, v).
/// Returns (graph, separator, side vertices, u, v).
pub fn separated_pair_instance(seed: u64) -> (Graph, (usize, usize), Vec<usize>, usize, usize) {
    let mut rng = rng(seed);
    let n1 = rng.gen_range(3..6);
    let n2 = rng.gen_range(3..6);
    let g1 = random_connected_graph(n1, rng.gen_range(0..4), seed.wrapping_add(1));
    let g2 = random_connected_graph(n2, rng.gen_range(0..4), seed.wrapping_add(2));
    // embed g1 on 0..n1, g2 on n1..n1+n2, then attach both sides to two
    // fresh separator vertices s1, s2
    let s1 = n1 + n2;
    let s2 = s1 + 1;
    let mut edges: Vec<(usize, usize)> = g1.edges().to_vec();
    edges.extend(g2.edges().iter().map(|&(u, v)| (u + n1, v + n1)));
    for side in 0..2 {
        let base = if side == 0 { 0 } else { n1 };
        let count = if side == 0 { n1 } else { n2 };
        let a = rng.gen_range(0..count) + base;
        let mut b = rng.gen_range(0..count) + base;
        while b == a && count > 1 {
            b = rng.gen_range(0..count) + base;
        }
        edges.push((a, s1));
        edges.push((b, s2));
    }
    let g = Graph::new(s2 + 1, &edges).expect("separated instance");
    let side: Vec<usize> = (0..n1).collect();
    let u = rng.gen_range(0..n1);
    let v = n1 + rng.gen_range(0..n2);
    (g, (s1, s2), side, u, v)
}
