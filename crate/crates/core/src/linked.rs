//! Globally linked vertex pairs in the plane, their closure and cluster
//! structure, global rigidity, and uniquely localizable vertices.
//!
//! A non-adjacent pair is globally linked in the plane exactly when some
//! non-trivial matroid component contains both vertices with three internally
//! disjoint paths between them inside the component; everything in this
//! module reduces to that test.

use std::collections::{BTreeMap, BTreeSet};

use crate::blocks::{is_shellable_ordering, shellable_ordering_from, three_blocks};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pebble::{r2_components, r2_rank};

/// Why a pair tested as globally linked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkWitness {
    /// the pair is an edge
    Edge,
    /// index of a non-trivial matroid component containing the pair with
    /// three disjoint paths inside it
    Component(usize),
}

/// Tests global linkedness in the plane and reports the witness.
pub fn globally_linked_2d_witness(g: &Graph, u: usize, v: usize) -> Result<Option<LinkWitness>> {
    check_pair(g, u, v)?;
    if g.has_edge(u, v) {
        return Ok(Some(LinkWitness::Edge));
    }
    let decomp = r2_components(g);
    for idx in decomp.nontrivial_containing(u, v) {
        let comp = &decomp.components[idx];
        let (cg, map) = comp.graph();
        let cu = map.binary_search(&u).expect("u in component");
        let cv = map.binary_search(&v).expect("v in component");
        if cg.kappa(cu, cv)? >= 3 {
            return Ok(Some(LinkWitness::Component(idx)));
        }
    }
    Ok(None)
}

pub fn is_globally_linked_2d(g: &Graph, u: usize, v: usize) -> Result<bool> {
    Ok(globally_linked_2d_witness(g, u, v)?.is_some())
}

/// On the line a pair is globally linked iff it is an edge or lies on a
/// cycle.
pub fn is_globally_linked_1d(g: &Graph, u: usize, v: usize) -> Result<bool> {
    check_pair(g, u, v)?;
    Ok(g.has_edge(u, v) || g.kappa(u, v)? >= 2)
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    if u == v || u >= g.vertex_count() || v >= g.vertex_count() {
        return Err(Error::InvalidArgument(format!("bad vertex pair ({u},{v})")));
    }
    Ok(())
}

/// The graph plus one edge per non-adjacent globally linked pair.
pub fn globally_linked_closure(g: &Graph) -> Graph {
    let decomp = r2_components(g);
    let mut added: Vec<(usize, usize)> = Vec::new();
    for comp in decomp.nontrivial() {
        let (cg, map) = comp.graph();
        let n = cg.vertex_count();
        for a in 0..n {
            for b in a + 1..n {
                if !cg.has_edge(a, b) && cg.kappa(a, b).expect("valid pair") >= 3 {
                    added.push((map[a], map[b]));
                }
            }
        }
    }
    g.with_edges(&added).expect("closure edges are valid")
}

/// Globally rigid in the plane: complete for up to three vertices, otherwise
/// 3-connected with a matroid that has a single (non-trivial) component.
pub fn is_globally_rigid_2d(g: &Graph) -> bool {
    if g.vertex_count() <= 3 {
        return g.is_complete();
    }
    g.is_k_connected(3) && is_r2_connected(g)
}

/// Whether the rigidity matroid of `g` consists of a single non-trivial
/// component.
pub fn is_r2_connected(g: &Graph) -> bool {
    let decomp = r2_components(g);
    decomp.components.len() == 1 && !decomp.components[0].trivial
}

/// The globally linked clusters of size at least four (vertex sets of the
/// 3-blocks of the non-trivial matroid components), the edges left uncovered,
/// pair multiplicities, and a verified 3-shellable ordering of the clusters.
#[derive(Debug, Clone)]
pub struct ClusterCover {
    /// cluster vertex sets, each of size >= 4, lexicographically sorted
    pub clusters: Vec<Vec<usize>>,
    /// edges covered by no cluster: exactly the matroid bridges
    pub uncovered: Vec<(usize, usize)>,
    /// pairs lying in at least two clusters, with their counts
    pub multiplicities: Vec<((usize, usize), usize)>,
    /// 3-shellable permutation of `clusters`
    pub ordering: Vec<usize>,
    /// rank of the graph, for the cover identity
    pub rank: usize,
}

impl ClusterCover {
    /// `(|F|, sum of 2|C|-3, sum of multiplicity-1)`; the cover identity says
    /// the rank equals the first plus the second minus the third.
    pub fn identity_terms(&self) -> (usize, usize, usize) {
        let f = self.uncovered.len();
        let c: usize = self.clusters.iter().map(|c| 2 * c.len() - 3).sum();
        let h: usize = self.multiplicities.iter().map(|&(_, h)| h - 1).sum();
        (f, c, h)
    }

    pub fn identity_holds(&self) -> bool {
        let (f, c, h) = self.identity_terms();
        self.rank + h == f + c
    }
}

/// Computes the cluster cover of `g`, verifying the cover identity and the
/// 3-shellability of the produced ordering; violation of either is a bug and
/// reported as oracle disagreement.
pub fn globally_linked_clusters(g: &Graph) -> Result<ClusterCover> {
    let decomp = r2_components(g);
    let rank = r2_rank(g);
    let uncovered = decomp.bridges();

    // blocks per non-trivial component, mapped back to host ids
    let nontrivial: Vec<usize> = decomp
        .components
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.trivial)
        .map(|(i, _)| i)
        .collect();
    let mut comp_cluster_sets: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    let mut comp_edges: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for &ci in &nontrivial {
        let comp = &decomp.components[ci];
        let (cg, map) = comp.graph();
        let tree = three_blocks(&cg)?;
        let sets: Vec<Vec<usize>> = tree
            .blocks
            .iter()
            .map(|b| b.vertices.iter().map(|&x| map[x]).collect())
            .collect();
        comp_cluster_sets.insert(ci, sets);
        comp_edges.insert(ci, comp.edges.clone());
    }

    let mut clusters: Vec<Vec<usize>> = comp_cluster_sets.values().flatten().cloned().collect();
    clusters.sort();
    let cluster_index: BTreeMap<Vec<usize>, usize> =
        clusters.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();

    let mut mult: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for cluster in &clusters {
        for (i, &a) in cluster.iter().enumerate() {
            for &b in &cluster[i + 1..] {
                *mult.entry((a, b)).or_insert(0) += 1;
            }
        }
    }
    let multiplicities: Vec<((usize, usize), usize)> =
        mult.into_iter().filter(|&(_, h)| h >= 2).collect();

    let mut cover = ClusterCover {
        clusters,
        uncovered,
        multiplicities,
        ordering: Vec::new(),
        rank,
    };
    if !cover.identity_holds() {
        let (f, c, h) = cover.identity_terms();
        return Err(Error::OracleDisagreement(format!(
            "cover identity failed: rank {rank} vs {f} + {c} - {h}"
        )));
    }

    cover.ordering = cluster_ordering(&decomp, &nontrivial, &comp_cluster_sets, &comp_edges, &cluster_index)?;
    let ok = cover.ordering.len() == cover.clusters.len()
        && is_shellable_ordering(&cover.clusters, &cover.ordering, 3);
    if !ok {
        return Err(Error::OracleDisagreement("cluster ordering is not 3-shellable".into()));
    }
    Ok(cover)
}

/// Builds the 3-shellable ordering by repeatedly peeling a component with at
/// most two attachment vertices (one always exists) and prepending a
/// 2-shellable ordering of its blocks whose first block covers an edge
/// incident with an attachment vertex.
fn cluster_ordering(
    decomp: &crate::pebble::R2Decomposition,
    nontrivial: &[usize],
    comp_cluster_sets: &BTreeMap<usize, Vec<Vec<usize>>>,
    comp_edges: &BTreeMap<usize, Vec<(usize, usize)>>,
    cluster_index: &BTreeMap<Vec<usize>, usize>,
) -> Result<Vec<usize>> {
    let mut remaining: BTreeSet<usize> = nontrivial.iter().copied().collect();
    let mut groups_rev: Vec<Vec<usize>> = Vec::new();
    while !remaining.is_empty() {
        let (pick, attachment) = if remaining.len() == 1 {
            (*remaining.iter().next().expect("non-empty"), BTreeSet::new())
        } else {
            let mut found = None;
            for &j in &remaining {
                let mine: BTreeSet<usize> =
                    decomp.components[j].vertices.iter().copied().collect();
                let attachment: BTreeSet<usize> = remaining
                    .iter()
                    .filter(|&&i| i != j)
                    .flat_map(|&i| decomp.components[i].vertices.iter().copied())
                    .filter(|v| mine.contains(v))
                    .collect();
                if attachment.len() <= 2 {
                    found = Some((j, attachment));
                    break;
                }
            }
            found.ok_or_else(|| {
                Error::OracleDisagreement(
                    "no component with at most two attachment vertices".into(),
                )
            })?
        };

        let sets = &comp_cluster_sets[&pick];
        let order = if let Some(&x) = attachment.iter().next() {
            let edges = &comp_edges[&pick];
            let mut order = None;
            'outer: for first in 0..sets.len() {
                let set = &sets[first];
                if set.binary_search(&x).is_err() {
                    continue;
                }
                // the first block must cover a component edge incident with x
                let covers = edges.iter().any(|&(a, b)| {
                    (a == x || b == x)
                        && set.binary_search(&a).is_ok()
                        && set.binary_search(&b).is_ok()
                });
                if !covers {
                    continue;
                }
                if let Some(o) = shellable_ordering_from(sets, 2, Some(first)) {
                    order = Some(o);
                    break 'outer;
                }
            }
            order
        } else {
            shellable_ordering_from(sets, 2, None)
        };
        let order = order.ok_or_else(|| {
            Error::OracleDisagreement("component blocks admit no 2-shellable ordering".into())
        })?;
        groups_rev.push(order.into_iter().map(|i| cluster_index[&sets[i]]).collect());
        remaining.remove(&pick);
    }
    Ok(groups_rev.into_iter().rev().flatten().collect())
}

/// Whether the position of `target` is pinned in every generic realization
/// once the anchors are pinned: the anchor set is completed to a clique and
/// the single-component criterion with three disjoint paths to every anchor
/// is applied.
pub fn uniquely_localizable(g: &Graph, anchors: &[usize], target: usize) -> Result<bool> {
    let n = g.vertex_count();
    if target >= n {
        return Err(Error::InvalidArgument(format!("target {target} out of range")));
    }
    let mut set: BTreeSet<usize> = BTreeSet::new();
    for &a in anchors {
        if a >= n {
            return Err(Error::InvalidArgument(format!("anchor {a} out of range")));
        }
        if a == target {
            return Err(Error::InvalidArgument("target must not be an anchor".into()));
        }
        set.insert(a);
    }
    if set.len() < 3 {
        return Ok(false);
    }
    let anchors: Vec<usize> = set.into_iter().collect();
    let mut clique = Vec::new();
    for (i, &a) in anchors.iter().enumerate() {
        for &b in &anchors[i + 1..] {
            clique.push((a, b));
        }
    }
    let gk = g.with_edges(&clique)?;
    let decomp = r2_components(&gk);
    'comp: for idx in decomp.nontrivial_containing(target, anchors[0]) {
        let comp = &decomp.components[idx];
        if anchors.iter().any(|a| comp.vertices.binary_search(a).is_err()) {
            continue;
        }
        let (cg, map) = comp.graph();
        let ct = map.binary_search(&target).expect("target in component");
        for &a in &anchors {
            let ca = map.binary_search(&a).expect("anchor in component");
            if cg.kappa(ct, ca)? < 3 {
                continue 'comp;
            }
        }
        return Ok(true);
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::pebble::is_redundantly_rigid_2d;

    #[test]
    fn linked_examples_2d() {
        // opposite rim vertices of a wheel: hub plus two rim arcs
        let w4 = gen::wheel(4);
        assert!(is_globally_linked_2d(&w4, 0, 2).unwrap());
        assert_eq!(
            globally_linked_2d_witness(&w4, 0, 2).unwrap(),
            Some(LinkWitness::Component(0))
        );

        // two triangles sharing a vertex: ends in different triangles
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(!is_globally_linked_2d(&g, 0, 3).unwrap());

        // the prism has only trivial components
        let prism = gen::prism();
        assert!(!is_globally_linked_2d(&prism, 0, 4).unwrap());

        // adjacent pairs are always linked
        assert_eq!(
            globally_linked_2d_witness(&prism, 0, 1).unwrap(),
            Some(LinkWitness::Edge)
        );
        assert!(is_globally_linked_2d(&prism, 0, 0).is_err());
    }

    #[test]
    fn linked_examples_1d() {
        let c4 = gen::cycle(4);
        assert!(is_globally_linked_1d(&c4, 0, 2).unwrap());
        let p3 = gen::path(3);
        assert!(!is_globally_linked_1d(&p3, 0, 2).unwrap());
        assert!(is_globally_linked_1d(&p3, 0, 1).unwrap());
    }

    #[test]
    fn closure_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(globally_linked_closure(&k4), k4);

        // the wheel gains both rim diagonals
        let w4 = gen::wheel(4);
        let glc = globally_linked_closure(&w4);
        assert_eq!(glc.edge_count(), 10);
        assert!(glc.has_edge(0, 2) && glc.has_edge(1, 3));

        let prism = gen::prism();
        assert_eq!(globally_linked_closure(&prism), prism);
    }

    #[test]
    fn globally_rigid_examples() {
        assert!(is_globally_rigid_2d(&Graph::complete(4)));
        assert!(is_globally_rigid_2d(&gen::wheel(4)));
        assert!(!is_globally_rigid_2d(&gen::two_k4()));
        assert!(!is_globally_rigid_2d(&gen::prism()));
        assert!(is_globally_rigid_2d(&Graph::complete(3)));
        assert!(!is_globally_rigid_2d(&gen::path(3)));
    }

    /// globally rigid iff every pair is globally linked; globally rigid
    /// graphs on >= 4 vertices are 3-connected and redundantly rigid
    #[test]
    fn global_rigidity_matches_all_pairs_linked() {
        for seed in 0..25 {
            let g = gen::random_graph(7, 0.55, 40 + seed);
            let n = g.vertex_count();
            let mut all_linked = true;
            for u in 0..n {
                for v in u + 1..n {
                    all_linked &= is_globally_linked_2d(&g, u, v).unwrap();
                }
            }
            assert_eq!(is_globally_rigid_2d(&g), all_linked, "seed {seed}");
            if is_globally_rigid_2d(&g) {
                assert!(g.is_k_connected(3));
                assert!(is_redundantly_rigid_2d(&g));
            }
        }
    }

    /// adding an edge never unlinks a pair
    #[test]
    fn linkedness_is_monotone_under_edge_addition() {
        for seed in 0..10 {
            let g = gen::random_graph(7, 0.45, 70 + seed);
            let linked: Vec<(usize, usize)> = {
                let glc = globally_linked_closure(&g);
                glc.edges().to_vec()
            };
            // add the first absent pair
            let n = g.vertex_count();
            let extra = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .find(|&(u, v)| !g.has_edge(u, v));
            let Some(e) = extra else { continue };
            let g2 = g.with_edges(&[e]).unwrap();
            let glc2 = globally_linked_closure(&g2);
            for &(u, v) in &linked {
                assert!(glc2.has_edge(u, v), "seed {seed}: pair ({u},{v})");
            }
        }
    }

    #[test]
    fn cluster_examples() {
        // two K4 sharing an edge: two clusters, nothing uncovered, 9 = 10 - 1
        let cover = globally_linked_clusters(&gen::two_k4()).unwrap();
        assert_eq!(cover.clusters, vec![vec![0, 1, 2, 3], vec![2, 3, 4, 5]]);
        assert!(cover.uncovered.is_empty());
        assert_eq!(cover.multiplicities, vec![((2, 3), 2)]);
        assert_eq!(cover.identity_terms(), (0, 10, 1));
        assert_eq!(cover.rank, 9);
        assert!(cover.identity_holds());

        // the prism has no clusters at all
        let cover = globally_linked_clusters(&gen::prism()).unwrap();
        assert!(cover.clusters.is_empty());
        assert_eq!(cover.uncovered.len(), 9);
        assert_eq!(cover.rank, 9);
        assert!(cover.identity_holds());

        let empty = globally_linked_clusters(&Graph::new(0, &[]).unwrap()).unwrap();
        assert!(empty.clusters.is_empty() && empty.uncovered.is_empty());
    }

    /// uncovered edges in the closure graph are exactly the bridges: the
    /// definitional route (edges of the closure induced by no cluster) agrees
    /// with the operational one
    #[test]
    fn uncovered_edges_match_closure_definition() {
        for seed in 0..15 {
            let g = gen::random_graph(8, 0.45, 110 + seed);
            let cover = globally_linked_clusters(&g).unwrap();
            let glc = globally_linked_closure(&g);
            let mut definitional: Vec<(usize, usize)> = glc
                .edges()
                .iter()
                .copied()
                .filter(|&(a, b)| {
                    !cover.clusters.iter().any(|c| {
                        c.binary_search(&a).is_ok() && c.binary_search(&b).is_ok()
                    })
                })
                .collect();
            definitional.sort_unstable();
            assert_eq!(cover.uncovered, definitional, "seed {seed}");
        }
    }

    /// clusters of size >= 4 are exactly the maximal cliques of that size in
    /// the closure graph (cross-check on small instances)
    #[test]
    fn clusters_match_maximal_cliques_of_closure() {
        for seed in 0..15 {
            let g = gen::random_graph(7, 0.5, 140 + seed);
            let cover = globally_linked_clusters(&g).unwrap();
            let glc = globally_linked_closure(&g);
            let n = glc.vertex_count();
            let mut cliques: Vec<Vec<usize>> = Vec::new();
            for mask in 0u32..(1 << n) {
                let verts: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
                if verts.len() < 4 {
                    continue;
                }
                let is_clique = verts.iter().enumerate().all(|(i, &a)| {
                    verts[i + 1..].iter().all(|&b| glc.has_edge(a, b))
                });
                if !is_clique {
                    continue;
                }
                let maximal = (0..n).all(|w| {
                    verts.contains(&w) || verts.iter().any(|&a| !glc.has_edge(a, w))
                });
                if maximal {
                    cliques.push(verts);
                }
            }
            cliques.sort();
            assert_eq!(cover.clusters, cliques, "seed {seed}");
        }
    }

    #[test]
    fn six_k4_fixture_has_six_clusters_and_no_two_shellable_ordering() {
        let g = gen::six_k4_triangle();
        let cover = globally_linked_clusters(&g).unwrap();
        assert_eq!(cover.clusters.len(), 6);
        assert!(cover.clusters.iter().all(|c| c.len() == 4));
        assert_eq!(crate::blocks::shellable_ordering(&cover.clusters, 2), None);
        assert!(is_shellable_ordering(&cover.clusters, &cover.ordering, 3));
    }

    #[test]
    fn localizable_examples() {
        let k4 = Graph::complete(4);
        assert!(uniquely_localizable(&k4, &[0, 1, 2], 3).unwrap());
        assert!(!uniquely_localizable(&k4, &[0, 1], 3).unwrap());

        // degree-2 target hanging off a K4 anchor clique
        let g = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)])
            .unwrap();
        assert!(!uniquely_localizable(&g, &[0, 1, 2, 3], 4).unwrap());

        assert!(uniquely_localizable(&k4, &[0, 1, 3], 3).is_err());
        assert!(uniquely_localizable(&k4, &[0, 1, 9], 3).is_err());
    }
}
