//! Report payloads. Every command emits one of these as pretty JSON, or as
//! plain text with `--human`. Field order and all collections are canonical,
//! so output is byte-identical across runs for the same input and seed.

use serde::Serialize;

#[derive(Serialize)]
pub struct RankReport {
    pub n: usize,
    pub m: usize,
    pub rank: usize,
    pub rigid: bool,
    pub redundantly_rigid: bool,
}

#[derive(Serialize)]
pub struct ComponentEntry {
    pub id: usize,
    pub trivial: bool,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
pub struct ComponentsReport {
    pub components: Vec<ComponentEntry>,
    pub bridges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
pub struct BlockEntry {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
pub struct SeparatorEntry {
    pub pair: (usize, usize),
    pub multiplicity: usize,
    #[serde(rename = "virtual")]
    pub is_virtual: bool,
}

#[derive(Serialize)]
pub struct ComponentBlocks {
    pub component: usize,
    pub vertices: Vec<usize>,
    pub block_count: usize,
    pub hinge_count: usize,
    pub blocks: Vec<BlockEntry>,
    pub separators: Vec<SeparatorEntry>,
}

#[derive(Serialize)]
pub struct BlocksReport {
    pub components: Vec<ComponentBlocks>,
}

#[derive(Serialize)]
pub struct LinkedReport {
    pub pair: (usize, usize),
    pub dim: usize,
    pub linked: bool,
    /// "edge" when the pair is adjacent; otherwise the witnessing component
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_component: Option<usize>,
}

#[derive(Serialize)]
pub struct LinkedAllReport {
    pub added_edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
pub struct IdentityEntry {
    pub rank: usize,
    pub uncovered_count: usize,
    pub cluster_term: usize,
    pub multiplicity_term: usize,
    pub holds: bool,
}

#[derive(Serialize)]
pub struct MultiplicityEntry {
    pub pair: (usize, usize),
    pub count: usize,
}

#[derive(Serialize)]
pub struct ClustersReport {
    pub clusters: Vec<Vec<usize>>,
    pub uncovered: Vec<(usize, usize)>,
    pub multiplicities: Vec<MultiplicityEntry>,
    pub ordering: Vec<usize>,
    pub ordering_is_3_shellable: bool,
    pub identity: IdentityEntry,
}

#[derive(Serialize)]
pub struct GloballyRigidReport {
    pub globally_rigid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing: Option<String>,
}

#[derive(Serialize)]
pub struct LocalizableReport {
    pub target: usize,
    pub anchors: Vec<usize>,
    pub localizable: bool,
}

#[derive(Serialize)]
pub struct SuperbricksReport {
    pub k: usize,
    pub parts: Vec<Vec<usize>>,
    pub bridges: Vec<usize>,
    pub bridge_edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
pub struct BodyBarRigidReport {
    pub dim: usize,
    pub k: usize,
    pub rigid: bool,
}

#[derive(Serialize)]
pub struct BodyBarGloballyRigidReport {
    pub dim: usize,
    pub k: usize,
    pub globally_rigid: bool,
}

#[derive(Serialize)]
pub struct BodyBarLinkedReport {
    pub dim: usize,
    pub pair: (usize, usize),
    pub hosts: (usize, usize),
    pub linked: bool,
}

#[derive(Serialize)]
pub struct SeedRank {
    pub seed: u64,
    pub rank: usize,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub dim: usize,
    pub seed: u64,
    pub seeds: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub combinatorial_rank: Option<usize>,
    pub numeric_ranks: Vec<SeedRank>,
    pub agree: bool,
}

#[derive(Serialize)]
pub struct RefuteReport {
    pub pair: (usize, usize),
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separator: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub side: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed_used: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub squared_distance_before: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub squared_distance_after: Option<String>,
    /// exact rational coordinates per vertex
    #[serde(skip_serializing_if = "Option::is_none")]
    pub original: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reflected: Option<Vec<Vec<String>>>,
}

/// The finished output of a command: a serialized report and the exit code
/// to use (nonzero only for the oracle-disagreement signal).
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    pub fn json<T: Serialize>(report: &T) -> Output {
        Output { text: serde_json::to_string_pretty(report).expect("report serializes"), code: 0 }
    }

    pub fn human(text: String) -> Output {
        Output { text, code: 0 }
    }
}

fn join<T: std::fmt::Debug>(items: &[T]) -> String {
    items.iter().map(|x| format!("{x:?}")).collect::<Vec<_>>().join(" ")
}

pub fn human_rank(r: &RankReport) -> String {
    format!(
        "vertices: {}\nedges: {}\nrank: {}\nrigid: {}\nredundantly rigid: {}",
        r.n, r.m, r.rank, r.rigid, r.redundantly_rigid
    )
}

pub fn human_components(r: &ComponentsReport) -> String {
    let mut out = String::new();
    for c in &r.components {
        out.push_str(&format!(
            "component {}{}: vertices {} | edges {}\n",
            c.id,
            if c.trivial { " (trivial)" } else { "" },
            join(&c.vertices),
            join(&c.edges)
        ));
    }
    out.push_str(&format!("bridges: {}", join(&r.bridges)));
    out
}

pub fn human_blocks(r: &BlocksReport) -> String {
    let mut out = String::new();
    for cb in &r.components {
        out.push_str(&format!(
            "component {}: {} blocks, {} hinges\n",
            cb.component, cb.block_count, cb.hinge_count
        ));
        for (i, b) in cb.blocks.iter().enumerate() {
            out.push_str(&format!("  block {}: vertices {}\n", i, join(&b.vertices)));
        }
        for s in &cb.separators {
            out.push_str(&format!(
                "  separator {:?} x{}{}\n",
                s.pair,
                s.multiplicity,
                if s.is_virtual { " (virtual)" } else { "" }
            ));
        }
    }
    if out.is_empty() {
        out.push_str("no non-trivial components");
    }
    out.trim_end().to_string()
}

pub fn human_linked(r: &LinkedReport) -> String {
    let mut out = format!("pair {:?} in dimension {}: linked = {}", r.pair, r.dim, r.linked);
    if let Some(w) = &r.witness {
        out.push_str(&format!(" (witness: {w}"));
        if let Some(c) = r.witness_component {
            out.push_str(&format!(" {c}"));
        }
        out.push(')');
    }
    out
}

pub fn human_linked_all(r: &LinkedAllReport) -> String {
    format!("closure adds {} edges: {}", r.added_edges.len(), join(&r.added_edges))
}

pub fn human_clusters(r: &ClustersReport) -> String {
    let mut out = String::new();
    for (i, c) in r.clusters.iter().enumerate() {
        out.push_str(&format!("cluster {}: {}\n", i, join(c)));
    }
    out.push_str(&format!("uncovered edges: {}\n", join(&r.uncovered)));
    for m in &r.multiplicities {
        out.push_str(&format!("pair {:?} lies in {} clusters\n", m.pair, m.count));
    }
    out.push_str(&format!(
        "identity: {} = {} + {} - {} ({})\n",
        r.identity.rank,
        r.identity.uncovered_count,
        r.identity.cluster_term,
        r.identity.multiplicity_term,
        if r.identity.holds { "verified" } else { "VIOLATED" }
    ));
    out.push_str(&format!(
        "3-shellable ordering: {} ({})",
        join(&r.ordering),
        if r.ordering_is_3_shellable { "verified" } else { "VIOLATED" }
    ));
    out
}

pub fn human_globally_rigid(r: &GloballyRigidReport) -> String {
    match &r.failing {
        Some(f) => format!("globally rigid: {} (fails {})", r.globally_rigid, f),
        None => format!("globally rigid: {}", r.globally_rigid),
    }
}

pub fn human_localizable(r: &LocalizableReport) -> String {
    format!(
        "target {} with anchors {}: uniquely localizable = {}",
        r.target,
        join(&r.anchors),
        r.localizable
    )
}

pub fn human_superbricks(r: &SuperbricksReport) -> String {
    let mut out = format!("k = {}\n", r.k);
    for (i, p) in r.parts.iter().enumerate() {
        out.push_str(&format!("part {}: {}\n", i, join(p)));
    }
    out.push_str(&format!("bridge edge ids: {}", join(&r.bridges)));
    out
}

pub fn human_verify(r: &VerifyReport) -> String {
    let mut out = format!("dimension {} with seeds {}..{}\n", r.dim, r.seed, r.seed + r.seeds);
    match r.combinatorial_rank {
        Some(c) => out.push_str(&format!("combinatorial rank: {c}\n")),
        None => out.push_str("combinatorial rank: n/a for this dimension\n"),
    }
    for s in &r.numeric_ranks {
        out.push_str(&format!("seed {}: numeric rank {}\n", s.seed, s.rank));
    }
    out.push_str(&format!("agree: {}", r.agree));
    out
}

pub fn human_refute(r: &RefuteReport) -> String {
    if !r.found {
        return format!(
            "pair {:?}: no witness ({})",
            r.pair,
            r.reason.as_deref().unwrap_or("unknown")
        );
    }
    let mut out = format!(
        "pair {:?}: witness via separator {:?}, seed {}\n",
        r.pair,
        r.separator.expect("separator"),
        r.seed_used.expect("seed")
    );
    out.push_str(&format!("reflected side: {}\n", join(r.side.as_deref().unwrap_or(&[]))));
    out.push_str(&format!(
        "squared distance: {} -> {}\n",
        r.squared_distance_before.as_deref().unwrap_or(""),
        r.squared_distance_after.as_deref().unwrap_or("")
    ));
    let fmt_positions = |ps: &Option<Vec<Vec<String>>>| {
        ps.as_deref()
            .unwrap_or(&[])
            .iter()
            .enumerate()
            .map(|(v, p)| format!("  {v}: ({})", p.join(", ")))
            .collect::<Vec<_>>()
            .join("\n")
    };
    out.push_str(&format!("original positions:\n{}\n", fmt_positions(&r.original)));
    out.push_str(&format!("reflected positions:\n{}", fmt_positions(&r.reflected)));
    out
}
