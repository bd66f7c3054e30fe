//! Combinatorial orbit spaces and their stratifications.
//!
//! Every orbit space arising in dimension at most three is one of a small
//! number of shapes: finitely many points, a circle, a closed surface, a
//! finite graph, or a 2-stratifold glued from surface pieces along circles.
//! This module computes their strata posets and links and checks the
//! pseudomanifold axioms on them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrataError {
    #[error("expected a 2-stratifold, found {0}")]
    NotAStratifold(&'static str),
    #[error("orbit space is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("invalid orbit space: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub name: String,
    pub ends: [String; 2],
}

impl Edge {
    pub fn new(name: impl Into<String>, a: impl Into<String>, b: impl Into<String>) -> Self {
        Edge {
            name: name.into(),
            ends: [a.into(), b.into()],
        }
    }

    pub fn is_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }
}

/// A compact surface whose boundary circles are glued onto singular circles.
/// Each attachment wraps one boundary circle `degree` times around its circle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfacePiece {
    pub name: String,
    pub orientable: bool,
    pub genus: u32,
    pub boundary: Vec<(String, u32)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OrbitSpace {
    Points(usize),
    Circle,
    /// The two-vertex path graph, with strata `v0`, `v1`, `e0`.
    Interval,
    Graph {
        vertices: Vec<String>,
        edges: Vec<Edge>,
    },
    ClosedSurface {
        orientable: bool,
        genus: u32,
    },
    Stratifold2 {
        circles: Vec<String>,
        pieces: Vec<SurfacePiece>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StratumId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub id: StratumId,
    pub name: String,
    pub dimension: usize,
    /// Lower strata contained in the closure of this one.
    pub closure_contains: Vec<StratumId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinkDescription {
    pub component_count: usize,
    pub points_per_component: Vec<usize>,
}

impl LinkDescription {
    fn points(n: usize) -> Self {
        LinkDescription {
            component_count: n,
            points_per_component: vec![1; n],
        }
    }

    pub fn is_empty(&self) -> bool {
        self.component_count == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfaceWithBoundary {
    pub orientable: bool,
    pub genus: u32,
    pub boundary_count: usize,
}

impl fmt::Display for SurfaceWithBoundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.orientable {
            "orientable"
        } else {
            "non-orientable"
        };
        write!(
            f,
            "{kind} surface of genus {} with {} boundary circle{}",
            self.genus,
            self.boundary_count,
            if self.boundary_count == 1 { "" } else { "s" }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptySpace,
    DuplicateName(String),
    DanglingReference {
        owner: String,
        missing: String,
    },
    /// A lower stratum in the closure of no top stratum.
    DensityFailure(String),
    NoTopStratum,
    /// A top stratum whose closure adds nothing, i.e. it is closed in `Q`.
    ClosedTopStratum(String),
    InvalidDegree {
        piece: String,
        circle: String,
    },
    DetachedPiece(String),
    InvalidSurface(String),
}

impl Violation {
    /// Short stable tag used by reports and tests.
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::EmptySpace => "empty space",
            Violation::DuplicateName(_) => "duplicate name",
            Violation::DanglingReference { .. } => "dangling reference",
            Violation::DensityFailure(_) => "density",
            Violation::NoTopStratum => "no top stratum",
            Violation::ClosedTopStratum(_) => "closed top stratum",
            Violation::InvalidDegree { .. } => "invalid degree",
            Violation::DetachedPiece(_) => "detached piece",
            Violation::InvalidSurface(_) => "invalid surface",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptySpace => write!(f, "orbit space is empty"),
            Violation::DuplicateName(n) => write!(f, "duplicate stratum name `{n}`"),
            Violation::DanglingReference { owner, missing } => {
                write!(f, "`{owner}` refers to unknown stratum `{missing}`")
            }
            Violation::DensityFailure(n) => write!(
                f,
                "density fails at {n}: it lies in the closure of no top stratum"
            ),
            Violation::NoTopStratum => write!(f, "no top stratum"),
            Violation::ClosedTopStratum(n) => {
                write!(f, "top stratum `{n}` is closed in its component")
            }
            Violation::InvalidDegree { piece, circle } => {
                write!(f, "piece `{piece}` attaches to `{circle}` with degree 0")
            }
            Violation::DetachedPiece(n) => write!(f, "piece `{n}` has no boundary attachment"),
            Violation::InvalidSurface(msg) => write!(f, "{msg}"),
        }
    }
}

impl OrbitSpace {
    /// Checked graph constructor.
    pub fn graph(vertices: Vec<String>, edges: Vec<Edge>) -> Result<Self, StrataError> {
        Self::checked(OrbitSpace::Graph { vertices, edges })
    }

    /// Checked graph constructor from vertex-name pairs; edges are named
    /// `e0`, `e1`, ...
    pub fn graph_from_pairs(
        vertices: &[&str],
        edges: &[(&str, &str)],
    ) -> Result<Self, StrataError> {
        Self::graph(
            vertices.iter().map(|s| s.to_string()).collect(),
            edges
                .iter()
                .enumerate()
                .map(|(i, (a, b))| Edge::new(format!("e{i}"), *a, *b))
                .collect(),
        )
    }

    pub fn single_loop() -> Self {
        Self::graph_from_pairs(&["v"], &[("v", "v")]).expect("a loop is a valid graph")
    }

    pub fn stratifold(
        circles: Vec<String>,
        pieces: Vec<SurfacePiece>,
    ) -> Result<Self, StrataError> {
        Self::checked(OrbitSpace::Stratifold2 { circles, pieces })
    }

    pub fn closed_surface(orientable: bool, genus: u32) -> Result<Self, StrataError> {
        Self::checked(OrbitSpace::ClosedSurface { orientable, genus })
    }

    fn checked(q: OrbitSpace) -> Result<Self, StrataError> {
        let violations = validate_pseudomanifold(&q);
        if let Some(v) = violations.first() {
            return Err(StrataError::Invalid(v.to_string()));
        }
        Ok(q)
    }

    pub fn variant_name(&self) -> &'static str {
        match self {
            OrbitSpace::Points(_) => "points",
            OrbitSpace::Circle => "circle",
            OrbitSpace::Interval => "interval",
            OrbitSpace::Graph { .. } => "graph",
            OrbitSpace::ClosedSurface { .. } => "closed surface",
            OrbitSpace::Stratifold2 { .. } => "2-stratifold",
        }
    }

    /// Filtration profile `(l, n)`: `l` is the dimension of the lowest
    /// skeleton, `n` the number of steps above it.
    pub fn filtration_dims(&self) -> (usize, usize) {
        match self {
            OrbitSpace::Points(_) => (0, 0),
            OrbitSpace::Circle => (1, 0),
            OrbitSpace::ClosedSurface { .. } => (2, 0),
            OrbitSpace::Interval | OrbitSpace::Graph { .. } => (0, 1),
            OrbitSpace::Stratifold2 { .. } => (1, 1),
        }
    }

    pub fn dimension(&self) -> usize {
        let (l, n) = self.filtration_dims();
        l + n
    }

    /// Graph view of `Interval` and `Graph`.
    pub fn as_graph(&self) -> Option<(Vec<String>, Vec<Edge>)> {
        match self {
            OrbitSpace::Interval => Some((
                vec!["v0".into(), "v1".into()],
                vec![Edge::new("e0", "v0", "v1")],
            )),
            OrbitSpace::Graph { vertices, edges } => Some((vertices.clone(), edges.clone())),
            _ => None,
        }
    }

    /// Splits into connected components, preserving stratum names.
    pub fn components(&self) -> Vec<OrbitSpace> {
        match self {
            OrbitSpace::Points(k) => vec![OrbitSpace::Points(1); *k],
            OrbitSpace::Graph { vertices, edges } => {
                let groups = graph_components(vertices, edges);
                if groups.len() <= 1 {
                    return vec![self.clone()];
                }
                groups
                    .into_iter()
                    .map(|vs| {
                        let set: BTreeSet<&String> = vs.iter().collect();
                        OrbitSpace::Graph {
                            edges: edges
                                .iter()
                                .filter(|e| set.contains(&e.ends[0]))
                                .cloned()
                                .collect(),
                            vertices: vs,
                        }
                    })
                    .collect()
            }
            OrbitSpace::Stratifold2 { circles, pieces } => {
                let groups = stratifold_components(circles, pieces);
                if groups.len() <= 1 {
                    return vec![self.clone()];
                }
                groups
                    .into_iter()
                    .map(|(cs, ps)| OrbitSpace::Stratifold2 {
                        circles: cs,
                        pieces: ps.into_iter().map(|i| pieces[i].clone()).collect(),
                    })
                    .collect()
            }
            _ => vec![self.clone()],
        }
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

fn graph_components(vertices: &[String], edges: &[Edge]) -> Vec<Vec<String>> {
    let index: BTreeMap<&String, usize> =
        vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    for e in edges {
        if let (Some(&a), Some(&b)) = (index.get(&e.ends[0]), index.get(&e.ends[1])) {
            union(&mut parent, a, b);
        }
    }
    let mut groups: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for (i, v) in vertices.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(v.clone());
    }
    groups.into_values().collect()
}

fn stratifold_components(
    circles: &[String],
    pieces: &[SurfacePiece],
) -> Vec<(Vec<String>, Vec<usize>)> {
    let nc = circles.len();
    let index: BTreeMap<&String, usize> = circles.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut parent: Vec<usize> = (0..nc + pieces.len()).collect();
    for (p, piece) in pieces.iter().enumerate() {
        for (c, _) in &piece.boundary {
            if let Some(&ci) = index.get(c) {
                union(&mut parent, ci, nc + p);
            }
        }
    }
    let mut groups: BTreeMap<usize, (Vec<String>, Vec<usize>)> = BTreeMap::new();
    for (i, c) in circles.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().0.push(c.clone());
    }
    for p in 0..pieces.len() {
        let r = find(&mut parent, nc + p);
        groups.entry(r).or_default().1.push(p);
    }
    groups.into_values().collect()
}

/// Strata with closure relations. Lower strata come first; ids index the
/// returned vector.
pub fn strata_poset(q: &OrbitSpace) -> Vec<Stratum> {
    let mut out = Vec::new();
    let mut push = |name: String, dimension: usize, closure_contains: Vec<StratumId>| {
        let id = StratumId(out.len());
        out.push(Stratum {
            id,
            name,
            dimension,
            closure_contains,
        });
        id
    };
    match q {
        OrbitSpace::Points(k) => {
            for i in 0..*k {
                push(format!("pt{i}"), 0, vec![]);
            }
        }
        OrbitSpace::Circle => {
            push("circle".into(), 1, vec![]);
        }
        OrbitSpace::ClosedSurface { .. } => {
            push("surface".into(), 2, vec![]);
        }
        OrbitSpace::Interval | OrbitSpace::Graph { .. } => {
            let (vertices, edges) = q.as_graph().expect("graph-like variant");
            let mut ids = BTreeMap::new();
            for v in &vertices {
                ids.entry(v.clone())
                    .or_insert_with(|| push(v.clone(), 0, vec![]));
            }
            for e in &edges {
                let mut below: Vec<StratumId> =
                    e.ends.iter().filter_map(|v| ids.get(v).copied()).collect();
                below.sort();
                below.dedup();
                push(e.name.clone(), 1, below);
            }
        }
        OrbitSpace::Stratifold2 { circles, pieces } => {
            let mut ids = BTreeMap::new();
            for c in circles {
                ids.entry(c.clone())
                    .or_insert_with(|| push(c.clone(), 1, vec![]));
            }
            for p in pieces {
                let mut below: Vec<StratumId> = p
                    .boundary
                    .iter()
                    .filter_map(|(c, _)| ids.get(c).copied())
                    .collect();
                below.sort();
                below.dedup();
                push(p.name.clone(), 2, below);
            }
        }
    }
    out
}

/// Strata of maximal dimension.
pub fn top_strata(q: &OrbitSpace) -> Vec<Stratum> {
    let dim = q.dimension();
    strata_poset(q)
        .into_iter()
        .filter(|s| s.dimension == dim)
        .collect()
}

/// Link of a stratum, described by its point count. Top strata have empty
/// links; every other stratum in these models has a 0-dimensional link.
pub fn link_of(q: &OrbitSpace, s: &Stratum) -> LinkDescription {
    if s.dimension == q.dimension() {
        return LinkDescription::default();
    }
    match q {
        OrbitSpace::Interval | OrbitSpace::Graph { .. } => {
            let (_, edges) = q.as_graph().expect("graph-like variant");
            let ends = edges
                .iter()
                .flat_map(|e| e.ends.iter())
                .filter(|v| **v == s.name)
                .count();
            LinkDescription::points(ends)
        }
        OrbitSpace::Stratifold2 { pieces, .. } => {
            let sheets: u32 = pieces
                .iter()
                .flat_map(|p| p.boundary.iter())
                .filter(|(c, _)| *c == s.name)
                .map(|(_, d)| *d)
                .sum();
            LinkDescription::points(sheets as usize)
        }
        _ => LinkDescription::default(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalityReport {
    pub normal: bool,
    /// `(stratum name, link)` for every non-top stratum.
    pub links: Vec<(String, LinkDescription)>,
}

impl NormalityReport {
    pub fn failures(&self) -> impl Iterator<Item = &(String, LinkDescription)> {
        self.links.iter().filter(|(_, l)| l.component_count != 1)
    }
}

/// Normal iff the link of every non-top stratum is connected.
pub fn is_normal(q: &OrbitSpace) -> NormalityReport {
    let dim = q.dimension();
    let links: Vec<(String, LinkDescription)> = strata_poset(q)
        .iter()
        .filter(|s| s.dimension < dim)
        .map(|s| (s.name.clone(), link_of(q, s)))
        .collect();
    let normal = links.iter().all(|(_, l)| l.component_count == 1);
    NormalityReport { normal, links }
}

/// Checks the pseudomanifold axioms on the combinatorial model. Never fails;
/// an empty list means the space is valid.
pub fn validate_pseudomanifold(q: &OrbitSpace) -> Vec<Violation> {
    let mut out = Vec::new();
    match q {
        OrbitSpace::Points(0) => out.push(Violation::EmptySpace),
        OrbitSpace::ClosedSurface { orientable, genus } => {
            if !orientable && *genus == 0 {
                out.push(Violation::InvalidSurface(
                    "non-orientable surface needs at least one crosscap".into(),
                ));
            }
        }
        OrbitSpace::Graph { vertices, edges } => {
            if vertices.is_empty() && edges.is_empty() {
                out.push(Violation::EmptySpace);
            }
            check_names(
                vertices.iter().chain(edges.iter().map(|e| &e.name)),
                &mut out,
            );
            let known: BTreeSet<&String> = vertices.iter().collect();
            for e in edges {
                for v in &e.ends {
                    if !known.contains(v) {
                        out.push(Violation::DanglingReference {
                            owner: e.name.clone(),
                            missing: v.clone(),
                        });
                    }
                }
            }
        }
        OrbitSpace::Stratifold2 { circles, pieces } => {
            if circles.is_empty() && pieces.is_empty() {
                out.push(Violation::EmptySpace);
            }
            check_names(
                circles.iter().chain(pieces.iter().map(|p| &p.name)),
                &mut out,
            );
            let known: BTreeSet<&String> = circles.iter().collect();
            for p in pieces {
                if p.boundary.is_empty() {
                    out.push(Violation::DetachedPiece(p.name.clone()));
                }
                if !p.orientable && p.genus == 0 {
                    out.push(Violation::InvalidSurface(format!(
                        "piece `{}` is non-orientable with no crosscap",
                        p.name
                    )));
                }
                for (c, d) in &p.boundary {
                    if !known.contains(c) {
                        out.push(Violation::DanglingReference {
                            owner: p.name.clone(),
                            missing: c.clone(),
                        });
                    }
                    if *d == 0 {
                        out.push(Violation::InvalidDegree {
                            piece: p.name.clone(),
                            circle: c.clone(),
                        });
                    }
                }
            }
        }
        _ => {}
    }
    if !out.is_empty() {
        return out;
    }

    let (_, n) = q.filtration_dims();
    let strata = strata_poset(q);
    let dim = q.dimension();
    let tops: Vec<&Stratum> = strata.iter().filter(|s| s.dimension == dim).collect();
    if tops.is_empty() {
        out.push(Violation::NoTopStratum);
        return out;
    }
    // every lower stratum lies in some top closure
    for s in strata.iter().filter(|s| s.dimension < dim) {
        if !tops.iter().any(|t| t.closure_contains.contains(&s.id)) {
            let what = match q {
                OrbitSpace::Stratifold2 { .. } => "circle",
                _ => "vertex",
            };
            out.push(Violation::DensityFailure(format!("{what} `{}`", s.name)));
        }
    }
    // with a nonempty singular skeleton, a top stratum must not be closed:
    // its frontier is a nonempty union of lower strata
    if n > 0 {
        for t in &tops {
            if t.closure_contains.is_empty() {
                out.push(Violation::ClosedTopStratum(t.name.clone()));
            }
        }
    }
    out
}

fn check_names<'a>(names: impl Iterator<Item = &'a String>, out: &mut Vec<Violation>) {
    let mut seen = BTreeSet::new();
    for n in names {
        if !seen.insert(n) {
            out.push(Violation::DuplicateName(n.clone()));
        }
    }
}

/// Poset axioms of a strata list: closure relations point strictly down in
/// dimension and are closed under composition. Returns offending pairs.
pub fn frontier_condition_failures(strata: &[Stratum]) -> Vec<(StratumId, StratumId)> {
    let mut bad = Vec::new();
    for s in strata {
        for &r in &s.closure_contains {
            let below = &strata[r.0];
            if below.dimension >= s.dimension {
                bad.push((r, s.id));
            }
            for &rr in &below.closure_contains {
                if !s.closure_contains.contains(&rr) {
                    bad.push((rr, s.id));
                }
            }
        }
    }
    bad
}

/// The compact surface underlying a connected normal 2-stratifold.
pub fn surface_with_boundary_form(
    q: &OrbitSpace,
) -> Result<Option<SurfaceWithBoundary>, StrataError> {
    let OrbitSpace::Stratifold2 { pieces, .. } = q else {
        return Err(StrataError::NotAStratifold(q.variant_name()));
    };
    if !is_normal(q).normal {
        return Ok(None);
    }
    let comps = connected_components(q);
    if comps != 1 {
        return Err(StrataError::Disconnected(comps));
    }
    // connected + normal leaves exactly one piece, each circle glued once
    let p = &pieces[0];
    Ok(Some(SurfaceWithBoundary {
        orientable: p.orientable,
        genus: p.genus,
        boundary_count: p.boundary.len(),
    }))
}

pub fn is_interval(q: &OrbitSpace) -> bool {
    match q {
        OrbitSpace::Interval => true,
        OrbitSpace::Graph { vertices, edges } => {
            vertices.len() == 2 && edges.len() == 1 && !edges[0].is_loop()
        }
        _ => false,
    }
}

pub fn is_single_loop(q: &OrbitSpace) -> bool {
    match q {
        OrbitSpace::Graph { vertices, edges } => {
            vertices.len() == 1 && edges.len() == 1 && edges[0].is_loop()
        }
        _ => false,
    }
}

pub fn connected_components(q: &OrbitSpace) -> usize {
    match q {
        OrbitSpace::Points(k) => *k,
        OrbitSpace::Graph { vertices, edges } => graph_components(vertices, edges).len(),
        OrbitSpace::Stratifold2 { circles, pieces } => stratifold_components(circles, pieces).len(),
        _ => 1,
    }
}
