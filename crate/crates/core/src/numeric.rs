//! Independent linear-algebra verification of the combinatorial machinery:
//! rigidity matrices at random integer realizations, exact rank via
//! fraction-free elimination, and a reflection-based construction of
//! equivalent but non-congruent frameworks.
//!
//! All coordinates are exact rationals. Squared edge lengths are used
//! throughout so equivalence checks need no square roots.

use num::{BigInt, BigRational, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exact rational coordinate type used by frameworks.
pub type Coord = BigRational;

/// A `dim`-dimensional realization of a graph.
#[derive(Debug, Clone)]
pub struct Framework {
    pub graph: Graph,
    pub dim: usize,
    positions: Vec<Vec<Coord>>,
}

impl Framework {
    pub fn new(graph: Graph, dim: usize, positions: Vec<Vec<Coord>>) -> Result<Self> {
        if positions.len() != graph.vertex_count() {
            return Err(Error::InvalidArgument(format!(
                "expected {} position vectors, got {}",
                graph.vertex_count(),
                positions.len()
            )));
        }
        if positions.iter().any(|p| p.len() != dim) {
            return Err(Error::InvalidArgument(format!("every position must have {dim} coordinates")));
        }
        Ok(Framework { graph, dim, positions })
    }

    /// Exact framework from integer coordinates; handy for degenerate
    /// (e.g. collinear) test instances.
    pub fn from_integers(graph: Graph, dim: usize, coords: &[Vec<i64>]) -> Result<Self> {
        let positions = coords
            .iter()
            .map(|p| p.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
            .collect();
        Framework::new(graph, dim, positions)
    }

    pub fn position(&self, v: usize) -> &[Coord] {
        &self.positions[v]
    }

    pub fn positions(&self) -> &[Vec<Coord>] {
        &self.positions
    }

    /// Squared Euclidean distance between two vertex positions.
    pub fn squared_distance(&self, u: usize, v: usize) -> Coord {
        self.positions[u]
            .iter()
            .zip(&self.positions[v])
            .map(|(a, b)| {
                let d = a - b;
                &d * &d
            })
            .fold(BigRational::zero(), |acc, x| acc + x)
    }
}

/// Coordinates are drawn uniformly from a symmetric integer range of more
/// than 2^31 values; deterministic per seed.
pub fn realize_random(g: &Graph, dim: usize, seed: u64) -> Framework {
    assert!(dim >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound: i64 = 1 << 30;
    let positions = (0..g.vertex_count())
        .map(|_| {
            (0..dim)
                .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-bound..=bound))))
                .collect()
        })
        .collect();
    Framework::new(g.clone(), dim, positions).expect("random realization is well-formed")
}

/// One row per edge in canonical order; the row of `uv` carries
/// `p(u) - p(v)` in the columns of `u` and the negation in the columns of
/// `v`.
#[derive(Debug, Clone)]
pub struct RigidityMatrix {
    pub rows: Vec<Vec<Coord>>,
    pub cols: usize,
}

pub fn rigidity_matrix(f: &Framework) -> RigidityMatrix {
    let d = f.dim;
    let cols = d * f.graph.vertex_count();
    let rows = f
        .graph
        .edges()
        .iter()
        .map(|&(u, v)| {
            let mut row = vec![BigRational::zero(); cols];
            for c in 0..d {
                let diff = &f.position(u)[c] - &f.position(v)[c];
                row[d * u + c] = diff.clone();
                row[d * v + c] = -diff;
            }
            row
        })
        .collect();
    RigidityMatrix { rows, cols }
}

/// Exact rank by fraction-free (Bareiss) elimination: denominators are
/// cleared row-wise, after which every intermediate entry is a minor of the
/// integer matrix and the single division per step is exact.
pub fn exact_rank(m: &RigidityMatrix) -> usize {
    let ints: Vec<Vec<BigInt>> = m.rows.iter().map(|row| clear_denominators(row)).collect();
    bigint_rank(ints)
}

fn clear_denominators(row: &[Coord]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in row {
        lcm = num::integer::lcm(lcm, x.denom().clone());
    }
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

fn bigint_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = &m[r][c] * &m[rank][col] - &m[r][col] * &m[rank][c];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// True iff both frameworks realize the same graph in the same dimension with
/// every squared edge length within `tol`; with `tol = 0` the comparison is
/// exact.
pub fn check_equivalent(f1: &Framework, f2: &Framework, tol: &Coord) -> Result<bool> {
    if f1.graph != f2.graph || f1.dim != f2.dim {
        return Err(Error::InvalidArgument("frameworks must share graph and dimension".into()));
    }
    if tol.is_negative() {
        return Err(Error::InvalidArgument("tolerance must be non-negative".into()));
    }
    Ok(f1.graph.edges().iter().all(|&(u, v)| {
        (f1.squared_distance(u, v) - f2.squared_distance(u, v)).abs() <= *tol
    }))
}

/// Reflects the `side` of a 2-separator across the line through the two
/// separator positions, producing an equivalent framework. Returns the new
/// framework when the squared `u`-`v` distance actually changed, `None` for
/// degenerate positions that leave it fixed.
///
/// `side` must be a union of components of the graph minus the separator, so
/// every edge lies entirely inside `side + {a,b}` or entirely outside `side`;
/// reflection then preserves all edge lengths by construction.
pub fn reflection_witness(
    f: &Framework,
    separator: (usize, usize),
    side: &[usize],
    u: usize,
    v: usize,
) -> Result<Option<Framework>> {
    let n = f.graph.vertex_count();
    let (a, b) = separator;
    if u >= n || v >= n || u == v {
        return Err(Error::InvalidArgument(format!("bad vertex pair ({u},{v})")));
    }
    if f.dim != 2 {
        return Err(Error::Precondition("reflection witness requires dimension 2".into()));
    }
    if a == b || a >= n || b >= n {
        return Err(Error::InvalidArgument(format!("bad separator ({a},{b})")));
    }
    let comps = f.graph.components_without(&[a, b]);
    if comps.len() < 2 {
        return Err(Error::Precondition(format!("({a},{b}) is not a 2-separator")));
    }
    let mut in_side = vec![false; n];
    for &s in side {
        if s >= n {
            return Err(Error::InvalidArgument(format!("side vertex {s} out of range")));
        }
        in_side[s] = true;
    }
    if side.is_empty() || in_side[a] || in_side[b] {
        return Err(Error::Precondition("side must be non-empty and disjoint from the separator".into()));
    }
    let mut covers_any = false;
    let mut avoids_any = false;
    for comp in &comps {
        let inside = comp.iter().filter(|&&w| in_side[w]).count();
        if inside == comp.len() {
            covers_any = true;
        } else if inside == 0 {
            avoids_any = true;
        } else {
            return Err(Error::Precondition(
                "side must be a union of components of the graph minus the separator".into(),
            ));
        }
    }
    if !covers_any || !avoids_any {
        return Err(Error::Precondition(
            "side must cover some but not all components of the graph minus the separator".into(),
        ));
    }

    let pa = f.position(a);
    let pb = f.position(b);
    // normal of the mirror line; a degenerate line (coincident separator
    // positions) cannot define a reflection
    let nx = pa[1].clone() - pb[1].clone();
    let ny = pb[0].clone() - pa[0].clone();
    let nn = &nx * &nx + &ny * &ny;
    if nn.is_zero() {
        return Ok(None);
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let positions: Vec<Vec<Coord>> = (0..n)
        .map(|w| {
            if !in_side[w] {
                return f.position(w).to_vec();
            }
            let p = f.position(w);
            let dot = (&p[0] - &pa[0]) * &nx + (&p[1] - &pa[1]) * &ny;
            let scale = &two * &dot / &nn;
            vec![&p[0] - &scale * &nx, &p[1] - &scale * &ny]
        })
        .collect();
    let reflected = Framework::new(f.graph.clone(), 2, positions)?;
    debug_assert!(check_equivalent(f, &reflected, &BigRational::zero()).unwrap());
    if reflected.squared_distance(u, v) == f.squared_distance(u, v) {
        Ok(None)
    } else {
        Ok(Some(reflected))
    }
}
