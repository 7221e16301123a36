//! Command-line front end: parses graph documents, dispatches to the library
//! and emits machine-readable reports.
//!
//! Exit status: 0 on success, 2 on parse failure, 3 on violated
//! preconditions, 4 when two independent computations of the same quantity
//! disagree (a bug signal, never expected in normal operation).

mod document;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use document::{DocKind, GraphDocument};
use report::*;
use rigidity_core::blocks::is_shellable_ordering;
use rigidity_core::graph::{Graph, Multigraph};
use rigidity_core::pebble::{r2_components, r2_rank};
use rigidity_core::{
    body_bar_graph, exact_rank, globally_linked_2d_witness, globally_linked_closure,
    globally_linked_clusters, is_globally_linked_1d, is_globally_linked_body_bar,
    is_globally_rigid_body_bar, is_r2_connected, is_redundantly_rigid_2d, is_rigid_2d,
    realize_random, reflection_witness, rigidity_matrix, superbricks, three_blocks,
    uniquely_localizable, LinkWitness,
};

#[derive(Parser)]
#[command(name = "rigidity", version, about = "Rigidity, global rigidity and globally linked pairs of graphs in the plane, plus body-bar frameworks in any dimension")]
struct Cli {
    /// Render reports as plain text instead of JSON
    #[arg(long, global = true)]
    human: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Matroid rank, rigidity and redundant rigidity of a graph
    Rank { file: PathBuf },
    /// Matroid components and bridges
    Components { file: PathBuf },
    /// 3-block tree of every non-trivial component
    Blocks { file: PathBuf },
    /// Global linkedness of one vertex pair
    Linked {
        file: PathBuf,
        u: usize,
        v: usize,
        /// dimension (1 or 2)
        #[arg(short = 'd', long = "dim", default_value_t = 2)]
        dim: usize,
    },
    /// Edges added by the globally-linked closure
    LinkedAll { file: PathBuf },
    /// Globally linked clusters, cover identity and 3-shellable ordering
    Clusters { file: PathBuf },
    /// Global rigidity in the plane
    GloballyRigid { file: PathBuf },
    /// Whether a target vertex is pinned once the anchors are pinned
    Localizable {
        file: PathBuf,
        /// comma-separated anchor vertices
        #[arg(long, value_delimiter = ',', required = true)]
        anchors: Vec<usize>,
        #[arg(long)]
        target: usize,
    },
    /// Body-bar decisions over a multigraph
    Bodybar {
        file: PathBuf,
        /// dimension of the ambient space
        #[arg(short = 'd', long = "dim")]
        dim: usize,
        #[command(subcommand)]
        action: BodyBarAction,
    },
    /// Compare the combinatorial rank against exact numeric ranks at random
    /// realizations
    Verify {
        file: PathBuf,
        #[arg(short = 'd', long = "dim", default_value_t = 2)]
        dim: usize,
        /// number of seeded realizations
        #[arg(long, default_value_t = 16)]
        seeds: u64,
        /// base seed
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Construct an equivalent, non-congruent realization changing the
    /// distance of a pair split by a 2-separator
    Refute {
        file: PathBuf,
        u: usize,
        v: usize,
        /// base seed for the realization
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum BodyBarAction {
    /// Superbrick partition of the vertex set
    Superbricks,
    /// Rigidity of the body-bar graph
    Rigid,
    /// Global rigidity of the body-bar graph
    GloballyRigid,
    /// Global linkedness of two body-bar vertices
    Linked { u: usize, v: usize },
}

enum CliError {
    Parse(String),
    Precondition(String),
    Disagreement(String),
}

impl From<rigidity_core::Error> for CliError {
    fn from(e: rigidity_core::Error) -> Self {
        match e {
            rigidity_core::Error::InvalidArgument(m) | rigidity_core::Error::Precondition(m) => {
                CliError::Precondition(m)
            }
            rigidity_core::Error::OracleDisagreement(m) => CliError::Disagreement(m),
        }
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Disagreement(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Precondition(m) | CliError::Disagreement(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            println!("{}", output.text);
            ExitCode::from(output.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn load_document(path: &PathBuf) -> Result<GraphDocument, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    GraphDocument::parse(&text).map_err(|e| CliError::Parse(e.to_string()))
}

fn load_graph(path: &PathBuf) -> Result<Graph, CliError> {
    let doc = load_document(path)?;
    if doc.kind != DocKind::Graph {
        return Err(CliError::Precondition("this command needs a simple graph, got a multigraph".into()));
    }
    Ok(Graph::new(doc.n, &doc.edges)?)
}

fn load_multigraph(path: &PathBuf) -> Result<Multigraph, CliError> {
    let doc = load_document(path)?;
    Ok(Multigraph::new(doc.n, &doc.edges)?)
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Rank { file } => {
            let g = load_graph(file)?;
            let report = RankReport {
                n: g.vertex_count(),
                m: g.edge_count(),
                rank: r2_rank(&g),
                rigid: is_rigid_2d(&g),
                redundantly_rigid: is_redundantly_rigid_2d(&g),
            };
            Ok(render(cli, &report, human_rank))
        }
        Command::Components { file } => {
            let g = load_graph(file)?;
            let decomp = r2_components(&g);
            let report = ComponentsReport {
                components: decomp
                    .components
                    .iter()
                    .enumerate()
                    .map(|(id, c)| ComponentEntry {
                        id,
                        trivial: c.trivial,
                        vertices: c.vertices.clone(),
                        edges: c.edges.clone(),
                    })
                    .collect(),
                bridges: decomp.bridges(),
            };
            Ok(render(cli, &report, human_components))
        }
        Command::Blocks { file } => {
            let g = load_graph(file)?;
            let decomp = r2_components(&g);
            let mut components = Vec::new();
            for (id, comp) in decomp.components.iter().enumerate() {
                if comp.trivial {
                    continue;
                }
                let (cg, map) = comp.graph();
                let tree = three_blocks(&cg)?;
                components.push(ComponentBlocks {
                    component: id,
                    vertices: comp.vertices.clone(),
                    block_count: tree.block_count(),
                    hinge_count: tree.hinge_count(),
                    blocks: tree
                        .blocks
                        .iter()
                        .map(|b| BlockEntry {
                            vertices: b.vertices.iter().map(|&x| map[x]).collect(),
                            edges: b.edges.iter().map(|&(a, b)| (map[a], map[b])).collect(),
                        })
                        .collect(),
                    separators: tree
                        .separators
                        .iter()
                        .map(|s| SeparatorEntry {
                            pair: (map[s.pair.0], map[s.pair.1]),
                            multiplicity: s.multiplicity,
                            is_virtual: !s.in_host,
                        })
                        .collect(),
                });
            }
            Ok(render(cli, &BlocksReport { components }, human_blocks))
        }
        Command::Linked { file, u, v, dim } => {
            let g = load_graph(file)?;
            let (linked, witness, witness_component) = match dim {
                1 => (is_globally_linked_1d(&g, *u, *v)?, None, None),
                2 => match globally_linked_2d_witness(&g, *u, *v)? {
                    Some(LinkWitness::Edge) => (true, Some("edge".to_string()), None),
                    Some(LinkWitness::Component(c)) => (true, Some("component".to_string()), Some(c)),
                    None => (false, None, None),
                },
                d => {
                    return Err(CliError::Precondition(format!(
                        "linkedness is decided for dimensions 1 and 2, not {d}"
                    )))
                }
            };
            let report = LinkedReport { pair: (*u, *v), dim: *dim, linked, witness, witness_component };
            Ok(render(cli, &report, human_linked))
        }
        Command::LinkedAll { file } => {
            let g = load_graph(file)?;
            let closure = globally_linked_closure(&g);
            let added_edges: Vec<(usize, usize)> = closure
                .edges()
                .iter()
                .copied()
                .filter(|&(a, b)| !g.has_edge(a, b))
                .collect();
            Ok(render(cli, &LinkedAllReport { added_edges }, human_linked_all))
        }
        Command::Clusters { file } => {
            let g = load_graph(file)?;
            let cover = globally_linked_clusters(&g)?;
            let (f, c, h) = cover.identity_terms();
            let report = ClustersReport {
                clusters: cover.clusters.clone(),
                uncovered: cover.uncovered.clone(),
                multiplicities: cover
                    .multiplicities
                    .iter()
                    .map(|&(pair, count)| MultiplicityEntry { pair, count })
                    .collect(),
                ordering: cover.ordering.clone(),
                ordering_is_3_shellable: is_shellable_ordering(&cover.clusters, &cover.ordering, 3),
                identity: IdentityEntry {
                    rank: cover.rank,
                    uncovered_count: f,
                    cluster_term: c,
                    multiplicity_term: h,
                    holds: cover.identity_holds(),
                },
            };
            Ok(render(cli, &report, human_clusters))
        }
        Command::GloballyRigid { file } => {
            let g = load_graph(file)?;
            let report = if g.vertex_count() <= 3 {
                let rigid = g.is_complete();
                GloballyRigidReport {
                    globally_rigid: rigid,
                    failing: (!rigid).then(|| "completeness (fewer than four vertices)".to_string()),
                }
            } else {
                let three = g.is_k_connected(3);
                let conn = is_r2_connected(&g);
                let failing = if !three {
                    Some("3-connectivity".to_string())
                } else if !conn {
                    Some("matroid connectivity".to_string())
                } else {
                    None
                };
                GloballyRigidReport { globally_rigid: three && conn, failing }
            };
            Ok(render(cli, &report, human_globally_rigid))
        }
        Command::Localizable { file, anchors, target } => {
            let g = load_graph(file)?;
            let report = LocalizableReport {
                target: *target,
                anchors: anchors.clone(),
                localizable: uniquely_localizable(&g, anchors, *target)?,
            };
            Ok(render(cli, &report, human_localizable))
        }
        Command::Bodybar { file, dim, action } => {
            let h = load_multigraph(file)?;
            if *dim < 1 {
                return Err(CliError::Precondition("dimension must be at least 1".into()));
            }
            let k = dim * (dim + 1) / 2;
            match action {
                BodyBarAction::Superbricks => {
                    let sb = superbricks(&h, k);
                    let report = SuperbricksReport {
                        k,
                        parts: sb.parts.clone(),
                        bridge_edges: sb.bridges.iter().map(|&e| h.edge(e)).collect(),
                        bridges: sb.bridges,
                    };
                    Ok(render(cli, &report, human_superbricks))
                }
                BodyBarAction::Rigid => {
                    let report = BodyBarRigidReport {
                        dim: *dim,
                        k,
                        rigid: rigidity_core::is_rigid_body_bar(&h, *dim)?,
                    };
                    Ok(render(cli, &report, |r| format!("rigid (d = {}): {}", r.dim, r.rigid)))
                }
                BodyBarAction::GloballyRigid => {
                    let report = BodyBarGloballyRigidReport {
                        dim: *dim,
                        k,
                        globally_rigid: is_globally_rigid_body_bar(&h, *dim)?,
                    };
                    Ok(render(cli, &report, |r| {
                        format!("globally rigid (d = {}): {}", r.dim, r.globally_rigid)
                    }))
                }
                BodyBarAction::Linked { u, v } => {
                    let linked = is_globally_linked_body_bar(&h, *dim, *u, *v)?;
                    let bb = body_bar_graph(&h);
                    let report = BodyBarLinkedReport {
                        dim: *dim,
                        pair: (*u, *v),
                        hosts: (bb.body_of[*u], bb.body_of[*v]),
                        linked,
                    };
                    Ok(render(cli, &report, |r| {
                        format!(
                            "pair {:?} (bodies of {} and {}): linked = {}",
                            r.pair, r.hosts.0, r.hosts.1, r.linked
                        )
                    }))
                }
            }
        }
        Command::Verify { file, dim, seeds, seed } => {
            let g = load_graph(file)?;
            if *dim < 1 {
                return Err(CliError::Precondition("dimension must be at least 1".into()));
            }
            if *seeds == 0 {
                return Err(CliError::Precondition("need at least one seed".into()));
            }
            // only the line and the plane have combinatorial rank functions
            let combinatorial_rank = match dim {
                1 => Some(g.vertex_count() - g.components().len()),
                2 => Some(r2_rank(&g)),
                _ => None,
            };
            let numeric_ranks: Vec<SeedRank> = (*seed..seed + seeds)
                .map(|s| SeedRank {
                    seed: s,
                    rank: exact_rank(&rigidity_matrix(&realize_random(&g, *dim, s))),
                })
                .collect();
            let generic = numeric_ranks.iter().map(|r| r.rank).max().unwrap_or(0);
            let agree = numeric_ranks.iter().all(|r| r.rank == generic)
                && combinatorial_rank.is_none_or(|c| c == generic);
            let report = VerifyReport {
                dim: *dim,
                seed: *seed,
                seeds: *seeds,
                combinatorial_rank,
                numeric_ranks,
                agree,
            };
            let mut output = render(cli, &report, human_verify);
            if !agree {
                output.code = 4;
            }
            Ok(output)
        }
        Command::Refute { file, u, v, seed } => {
            let g = load_graph(file)?;
            let n = g.vertex_count();
            if *u >= n || *v >= n || u == v {
                return Err(CliError::Precondition(format!("bad vertex pair ({u},{v})")));
            }
            let mut witness_input = None;
            'search: for a in 0..n {
                for b in a + 1..n {
                    if a == *u || a == *v || b == *u || b == *v {
                        continue;
                    }
                    let comps = g.components_without(&[a, b]);
                    let cu = comps.iter().position(|c| c.binary_search(u).is_ok());
                    let cv = comps.iter().position(|c| c.binary_search(v).is_ok());
                    if let (Some(cu), Some(cv)) = (cu, cv) {
                        if cu != cv {
                            witness_input = Some(((a, b), comps[cu].clone()));
                            break 'search;
                        }
                    }
                }
            }
            let Some((separator, side)) = witness_input else {
                let report = RefuteReport {
                    pair: (*u, *v),
                    found: false,
                    reason: Some("no separator witness".into()),
                    separator: None,
                    side: None,
                    seed_used: None,
                    squared_distance_before: None,
                    squared_distance_after: None,
                    original: None,
                    reflected: None,
                };
                return Ok(render(cli, &report, human_refute));
            };
            for s in *seed..seed + 8 {
                let f = realize_random(&g, 2, s);
                if let Some(w) = reflection_witness(&f, separator, &side, *u, *v)? {
                    let positions = |fr: &rigidity_core::Framework| {
                        fr.positions()
                            .iter()
                            .map(|p| p.iter().map(|c| c.to_string()).collect())
                            .collect()
                    };
                    let report = RefuteReport {
                        pair: (*u, *v),
                        found: true,
                        reason: None,
                        separator: Some(separator),
                        side: Some(side),
                        seed_used: Some(s),
                        squared_distance_before: Some(f.squared_distance(*u, *v).to_string()),
                        squared_distance_after: Some(w.squared_distance(*u, *v).to_string()),
                        original: Some(positions(&f)),
                        reflected: Some(positions(&w)),
                    };
                    return Ok(render(cli, &report, human_refute));
                }
            }
            let report = RefuteReport {
                pair: (*u, *v),
                found: false,
                reason: Some("all seeded realizations were degenerate".into()),
                separator: Some(separator),
                side: Some(side),
                seed_used: None,
                squared_distance_before: None,
                squared_distance_after: None,
                original: None,
                reflected: None,
            };
            Ok(render(cli, &report, human_refute))
        }
    }
}

fn render<T: serde::Serialize>(cli: &Cli, report: &T, human: impl Fn(&T) -> String) -> Output {
    if cli.human {
        Output::human(human(report))
    } else {
        Output::json(report)
    }
}
