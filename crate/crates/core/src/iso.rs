//! Strict and weak isomorphism of characteristic data.
//!
//! A weak isomorphism is a stratified homeomorphism `f` of the bases together
//! with an automorphism `psi` of `T^m` carrying every `lambda(S)` onto
//! `lambda'(f(S))` and matching Chern classes; a strict one has `psi = id`.
//! The search is complete for point, circle, surface and graph bases and for
//! normal 2-stratifolds. For non-normal 2-stratifolds only an incidence
//! invariant is compared, and agreement yields [`IsoVerdict::Unknown`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::chardata::{CharacteristicData, ChernClass, DataError, Lmn};
use crate::lattice::{
    content, det2, primitivize, solve_unimodular_map, unimodular_sending, IntMatrix,
    PrimitiveSubtorus, PrimitiveVector,
};
use crate::strata::{self, Edge, OrbitSpace, SurfacePiece, SurfaceWithBoundary};

/// Evidence for an isomorphism: a stratum bijection (by name), the torus
/// automorphism and the signs `psi(label_v) = sign * label'_{f(v)}` for
/// rank-one labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub stratum_map: BTreeMap<String, String>,
    pub psi: IntMatrix,
    pub signs: BTreeMap<String, i8>,
    /// The base map reverses orientation, acting on `H^2` by `-1`.
    pub reverses_orientation: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub invariant: String,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} vs {}", self.invariant, self.left, self.right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoVerdict {
    Isomorphic(Witness),
    NotIsomorphic(Certificate),
    Unknown(String),
}

impl IsoVerdict {
    pub fn kind(&self) -> &'static str {
        match self {
            IsoVerdict::Isomorphic(_) => "Isomorphic",
            IsoVerdict::NotIsomorphic(_) => "NotIsomorphic",
            IsoVerdict::Unknown(_) => "Unknown",
        }
    }

    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic(_))
    }
}

/// A fingerprint of the weak isomorphism class. Two weakly isomorphic data
/// always have equal fingerprints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakInvariants {
    pub lmn: Lmn,
    pub base: String,
    pub components: usize,
    /// Graphs: sorted vertex degrees. 2-stratifolds: sorted circle link sizes.
    pub degree_sequence: Vec<usize>,
    /// `|det(label_u, label_v)|` over unordered pairs of distinct vertices.
    pub det_multiset: Vec<BigInt>,
    /// `|det(label_u, label_v)|` over edges `uv`.
    pub edge_det_multiset: Vec<BigInt>,
    pub dependent_classes: usize,
    pub pieces: Vec<String>,
    pub surfaces: Vec<SurfaceWithBoundary>,
    pub chern: String,
}

impl WeakInvariants {
    pub fn fields(&self) -> Vec<(&'static str, String)> {
        let list = |v: &[BigInt]| {
            format!(
                "{{{}}}",
                v.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        };
        vec![
            ("dimension profile", self.lmn.to_string()),
            ("base", self.base.clone()),
            ("components", self.components.to_string()),
            ("degree sequence", format!("{:?}", self.degree_sequence)),
            ("det multiset", list(&self.det_multiset)),
            ("edge det multiset", list(&self.edge_det_multiset)),
            (
                "dependent label classes",
                self.dependent_classes.to_string(),
            ),
            ("surface pieces", format!("{:?}", self.pieces)),
            (
                "surfaces with boundary",
                self.surfaces
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join("; "),
            ),
            ("chern", self.chern.clone()),
        ]
    }
}

pub fn weak_iso_invariants(d: &CharacteristicData) -> WeakInvariants {
    let q = d.orbit_space();
    let mut inv = WeakInvariants {
        lmn: d.lmn(),
        base: base_summary(q),
        components: strata::connected_components(q),
        degree_sequence: Vec::new(),
        det_multiset: Vec::new(),
        edge_det_multiset: Vec::new(),
        dependent_classes: 0,
        pieces: Vec::new(),
        surfaces: Vec::new(),
        chern: chern_weak_class(d.chern()),
    };
    if let Some((vertices, edges)) = q.as_graph() {
        let g = GraphView::new(&vertices, &edges);
        inv.degree_sequence = sorted(g.degree.clone());
        let labels = d.vertex_labels();
        if d.m() == 2 {
            let ls: Vec<&PrimitiveVector> = vertices.iter().map(|v| &labels[v]).collect();
            for i in 0..ls.len() {
                for j in i + 1..ls.len() {
                    inv.det_multiset.push(abs_det(ls[i], ls[j]));
                }
            }
            inv.det_multiset.sort();
            inv.edge_det_multiset = sorted(
                edges
                    .iter()
                    .map(|e| abs_det(&labels[&e.ends[0]], &labels[&e.ends[1]]))
                    .collect(),
            );
            inv.dependent_classes = labels.values().collect::<BTreeSet<_>>().len();
        } else {
            inv.dependent_classes = usize::from(!vertices.is_empty());
        }
    }
    if let OrbitSpace::Stratifold2 { circles, pieces } = q {
        inv.degree_sequence = sorted(circles.iter().map(|c| circle_sheets(pieces, c)).collect());
        inv.pieces = sorted(pieces.iter().map(piece_signature).collect());
        if strata::is_normal(q).normal {
            inv.surfaces = sorted(
                q.components()
                    .iter()
                    .filter_map(|c| strata::surface_with_boundary_form(c).ok().flatten())
                    .collect(),
            );
        }
    }
    inv
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

fn abs_det(v: &PrimitiveVector, w: &PrimitiveVector) -> BigInt {
    det2(v, w).expect("graph labels live in Z^2").abs()
}

fn base_summary(q: &OrbitSpace) -> String {
    match q {
        OrbitSpace::Points(k) => format!("{k} point(s)"),
        OrbitSpace::Circle => "circle".into(),
        OrbitSpace::ClosedSurface { orientable, genus } => format!(
            "closed {} surface of genus {genus}",
            if *orientable {
                "orientable"
            } else {
                "non-orientable"
            }
        ),
        OrbitSpace::Interval | OrbitSpace::Graph { .. } => {
            let (v, e) = q.as_graph().expect("graph-like");
            let loops = e.iter().filter(|x| x.is_loop()).count();
            format!(
                "graph with {} vertices, {} edges, {loops} loops",
                v.len(),
                e.len()
            )
        }
        OrbitSpace::Stratifold2 { circles, pieces } => format!(
            "2-stratifold with {} circles, {} pieces",
            circles.len(),
            pieces.len()
        ),
    }
}

fn chern_weak_class(c: &ChernClass) -> String {
    match c {
        ChernClass::Zero => "0".into(),
        ChernClass::Free(v) => format!("divisibility {}", content(v)),
        ChernClass::Torsion(v) => {
            if v.iter().any(|&b| b) {
                "nonzero mod 2".into()
            } else {
                "0 mod 2".into()
            }
        }
    }
}

fn circle_sheets(pieces: &[SurfacePiece], circle: &str) -> usize {
    pieces
        .iter()
        .flat_map(|p| &p.boundary)
        .filter(|(c, _)| c == circle)
        .map(|(_, d)| *d as usize)
        .sum()
}

fn piece_signature(p: &SurfacePiece) -> String {
    let degrees = sorted(p.boundary.iter().map(|(_, d)| *d).collect::<Vec<_>>());
    format!(
        "{}{}:{:?}",
        if p.orientable { "o" } else { "n" },
        p.genus,
        degrees
    )
}

/// Decide (weak) isomorphism of two characteristic data.
pub fn decide_iso(
    d1: &CharacteristicData,
    d2: &CharacteristicData,
    weak: bool,
) -> Result<IsoVerdict, DataError> {
    if d1.lmn() != d2.lmn() {
        return Ok(IsoVerdict::NotIsomorphic(Certificate {
            invariant: "dimension profile".into(),
            left: d1.lmn().to_string(),
            right: d2.lmn().to_string(),
        }));
    }
    let (q1, q2) = (d1.orbit_space(), d2.orbit_space());
    match (q1, q2) {
        (OrbitSpace::Points(a), OrbitSpace::Points(b)) => {
            if a != b {
                return Ok(certify(d1, d2, weak));
            }
            let map = (0..*a)
                .map(|i| (format!("pt{i}"), format!("pt{i}")))
                .collect();
            Ok(IsoVerdict::Isomorphic(plain_witness(map, d1.m())))
        }
        (OrbitSpace::Circle, OrbitSpace::Circle) => Ok(IsoVerdict::Isomorphic(plain_witness(
            BTreeMap::from([("circle".into(), "circle".into())]),
            d1.m(),
        ))),
        (OrbitSpace::ClosedSurface { .. }, OrbitSpace::ClosedSurface { .. }) => {
            if q1 != q2 {
                return Ok(certify(d1, d2, weak));
            }
            surface_iso(d1, d2, weak)
        }
        (OrbitSpace::Stratifold2 { .. }, OrbitSpace::Stratifold2 { .. }) => {
            stratifold_iso(d1, d2, weak)
        }
        _ if q1.as_graph().is_some() && q2.as_graph().is_some() => graph_iso(d1, d2, weak),
        _ => Ok(certify(d1, d2, weak)),
    }
}

fn plain_witness(stratum_map: BTreeMap<String, String>, m: usize) -> Witness {
    Witness {
        stratum_map,
        psi: IntMatrix::identity(m),
        signs: BTreeMap::new(),
        reverses_orientation: false,
    }
}

/// Certificate from the first differing invariant. In strict mode the
/// exact labels and Chern class are compared after the weak fingerprint.
fn certify(d1: &CharacteristicData, d2: &CharacteristicData, weak: bool) -> IsoVerdict {
    let mut f1 = weak_iso_invariants(d1).fields();
    let mut f2 = weak_iso_invariants(d2).fields();
    if !weak {
        f1.extend(strict_fields(d1));
        f2.extend(strict_fields(d2));
    }
    for ((name, a), (_, b)) in f1.into_iter().zip(f2) {
        if a != b {
            return IsoVerdict::NotIsomorphic(Certificate {
                invariant: name.into(),
                left: a,
                right: b,
            });
        }
    }
    IsoVerdict::NotIsomorphic(Certificate {
        invariant: "exhaustive search".into(),
        left: "all invariants agree".into(),
        right: "no compatible stratified map exists".into(),
    })
}

fn strict_fields(d: &CharacteristicData) -> Vec<(&'static str, String)> {
    let mut out = Vec::new();
    if let Some((vertices, edges)) = d.orbit_space().as_graph() {
        let g = GraphView::new(&vertices, &edges);
        let labels = d.vertex_labels();
        let mut pairs: Vec<(usize, String)> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let l = labels
                    .get(v)
                    .map_or_else(|| "T".to_string(), |p| p.to_string());
                (g.degree[i], l)
            })
            .collect();
        pairs.sort();
        out.push(("labels by vertex degree", format!("{pairs:?}")));
    }
    let c = d.chern();
    let (a, b) = (c.to_string(), c.negated().to_string());
    out.push(("chern class up to sign", if a <= b { a } else { b }));
    out
}

fn surface_iso(
    d1: &CharacteristicData,
    d2: &CharacteristicData,
    weak: bool,
) -> Result<IsoVerdict, DataError> {
    let map = BTreeMap::from([("surface".to_string(), "surface".to_string())]);
    let (c1, c2) = (d1.chern(), d2.chern());
    let m = d1.m();
    let mut w = plain_witness(map, m);
    if !weak {
        if c1 == c2 {
            return Ok(IsoVerdict::Isomorphic(w));
        }
        if *c1 == c2.negated() {
            w.reverses_orientation = true;
            return Ok(IsoVerdict::Isomorphic(w));
        }
        return Ok(certify(d1, d2, weak));
    }
    let psi = match (c1, c2) {
        (ChernClass::Free(a), ChernClass::Free(b)) => {
            let (ga, gb) = (content(a), content(b));
            if ga != gb {
                return Ok(certify(d1, d2, weak));
            }
            if ga.is_zero() {
                IntMatrix::identity(m)
            } else {
                let psi = unimodular_sending(&primitivize(a)?, &primitivize(b)?)?;
                fix_sign(psi, a, b)
            }
        }
        (ChernClass::Torsion(a), ChernClass::Torsion(b)) => {
            let (za, zb) = (a.iter().all(|x| !x), b.iter().all(|x| !x));
            if za != zb {
                return Ok(certify(d1, d2, weak));
            }
            if za {
                IntMatrix::identity(m)
            } else {
                let lift =
                    |v: &[bool]| v.iter().map(|&x| BigInt::from(x as u8)).collect::<Vec<_>>();
                unimodular_sending(&primitivize(&lift(a))?, &primitivize(&lift(b))?)?
            }
        }
        _ => return Ok(certify(d1, d2, weak)),
    };
    w.psi = psi;
    Ok(IsoVerdict::Isomorphic(w))
}

// `unimodular_sending` works with sign-normalized vectors; flip psi when
// the actual vectors differ in sign from their canonical forms.
fn fix_sign(psi: IntMatrix, a: &[BigInt], b: &[BigInt]) -> IntMatrix {
    let img = psi.apply(a).expect("square of matching size");
    if img == b {
        return psi;
    }
    let mut neg = IntMatrix::zeros(psi.rows(), psi.cols());
    for i in 0..psi.rows() {
        for j in 0..psi.cols() {
            neg[(i, j)] = -&psi[(i, j)];
        }
    }
    neg
}

/// Multigraph with vertex indices, used by the backtracking search.
struct GraphView {
    n: usize,
    degree: Vec<usize>,
    mult: Vec<Vec<usize>>,
    /// Edge names between each unordered vertex pair (loops on the diagonal).
    edges_between: BTreeMap<(usize, usize), Vec<String>>,
}

impl GraphView {
    fn new(vertices: &[String], edges: &[Edge]) -> Self {
        let n = vertices.len();
        let index: BTreeMap<&String, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut degree = vec![0; n];
        let mut mult = vec![vec![0; n]; n];
        let mut edges_between: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
        for e in edges {
            let (a, b) = (index[&e.ends[0]], index[&e.ends[1]]);
            degree[a] += 1;
            degree[b] += 1;
            mult[a][b] += 1;
            if a != b {
                mult[b][a] += 1;
            }
            edges_between
                .entry((a.min(b), a.max(b)))
                .or_default()
                .push(e.name.clone());
        }
        GraphView {
            n,
            degree,
            mult,
            edges_between,
        }
    }
}

struct GraphSearch<'a> {
    g1: &'a GraphView,
    g2: &'a GraphView,
    l1: Vec<Option<PrimitiveVector>>,
    l2: Vec<Option<PrimitiveVector>>,
    weak: bool,
    assign: Vec<usize>,
    used: Vec<bool>,
}

impl GraphSearch<'_> {
    fn compatible(&self, v: usize, w: usize) -> bool {
        if self.used[w]
            || self.g1.degree[v] != self.g2.degree[w]
            || self.g1.mult[v][v] != self.g2.mult[w][w]
        {
            return false;
        }
        if !self.weak && self.l1[v] != self.l2[w] {
            return false;
        }
        for u in 0..v {
            let fu = self.assign[u];
            if self.g1.mult[u][v] != self.g2.mult[fu][w] {
                return false;
            }
            if self.weak {
                if let (Some(a), Some(b), Some(c), Some(d)) =
                    (&self.l1[u], &self.l1[v], &self.l2[fu], &self.l2[w])
                {
                    if abs_det(a, b) != abs_det(c, d) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Depth-first over vertex bijections; `leaf` decides each complete map.
    fn run<T>(&mut self, v: usize, leaf: &mut impl FnMut(&[usize]) -> Option<T>) -> Option<T> {
        if v == self.g1.n {
            return leaf(&self.assign);
        }
        for w in 0..self.g2.n {
            if !self.compatible(v, w) {
                continue;
            }
            self.assign[v] = w;
            self.used[w] = true;
            let found = self.run(v + 1, leaf);
            self.used[w] = false;
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// The torus automorphism realizing a vertex bijection, with signs.
fn find_psi(
    l1: &[Option<PrimitiveVector>],
    l2: &[Option<PrimitiveVector>],
    f: &[usize],
    m: usize,
) -> Option<(IntMatrix, Vec<i8>)> {
    let labels1: Vec<&PrimitiveVector> = l1.iter().flatten().collect();
    if labels1.len() != l1.len() {
        // m = 1: every vertex is labelled by the whole circle
        return Some((IntMatrix::identity(m), vec![1; l1.len()]));
    }
    if l1.is_empty() {
        return Some((IntMatrix::identity(m), vec![]));
    }
    let target = |v: usize| l2[f[v]].as_ref().expect("labels present on both sides");
    let first = 0;
    let second = (1..l1.len()).find(|&v| !abs_det(labels1[first], labels1[v]).is_zero());
    let candidates: Vec<IntMatrix> = match second {
        None => {
            let psi = unimodular_sending(labels1[first], target(first)).ok()?;
            vec![psi]
        }
        Some(b) => {
            let mut out = Vec::new();
            for signs in [[true, true], [true, false], [false, true], [false, false]] {
                if let Ok(Some(psi)) = solve_unimodular_map(
                    &[labels1[first].clone(), labels1[b].clone()],
                    &[target(first).clone(), target(b).clone()],
                    &signs,
                ) {
                    out.push(psi);
                }
            }
            out
        }
    };
    for psi in candidates {
        let mut signs = Vec::with_capacity(l1.len());
        let ok = (0..l1.len()).all(|v| {
            let img = psi.apply(labels1[v].coords()).expect("sizes agree");
            let t = target(v).coords();
            if img == t {
                signs.push(1);
                true
            } else if img.iter().zip(t).all(|(x, y)| *x == -y) {
                signs.push(-1);
                true
            } else {
                false
            }
        });
        if ok {
            return Some((psi, signs));
        }
    }
    None
}

fn graph_iso(
    d1: &CharacteristicData,
    d2: &CharacteristicData,
    weak: bool,
) -> Result<IsoVerdict, DataError> {
    let (v1, e1) = d1.orbit_space().as_graph().expect("graph base");
    let (v2, e2) = d2.orbit_space().as_graph().expect("graph base");
    if v1.len() != v2.len() || e1.len() != e2.len() {
        return Ok(certify(d1, d2, weak));
    }
    let (g1, g2) = (GraphView::new(&v1, &e1), GraphView::new(&v2, &e2));
    let (lab1, lab2) = (d1.vertex_labels(), d2.vertex_labels());
    let m = d1.m();
    let mut search = GraphSearch {
        g1: &g1,
        g2: &g2,
        l1: v1.iter().map(|v| lab1.get(v).cloned()).collect(),
        l2: v2.iter().map(|v| lab2.get(v).cloned()).collect(),
        weak,
        assign: vec![0; g1.n],
        used: vec![false; g2.n],
    };
    let (l1, l2) = (search.l1.clone(), search.l2.clone());
    let mut leaf = |f: &[usize]| -> Option<(Vec<usize>, IntMatrix, Vec<i8>)> {
        if weak {
            find_psi(&l1, &l2, f, m).map(|(psi, s)| (f.to_vec(), psi, s))
        } else {
            Some((f.to_vec(), IntMatrix::identity(m), vec![1; f.len()]))
        }
    };
    let Some((f, psi, signs)) = search.run(0, &mut leaf) else {
        return Ok(certify(d1, d2, weak));
    };

    let mut stratum_map = BTreeMap::new();
    for (i, v) in v1.iter().enumerate() {
        stratum_map.insert(v.clone(), v2[f[i]].clone());
    }
    for ((a, b), names) in &g1.edges_between {
        let (fa, fb) = (f[*a], f[*b]);
        let image = &g2.edges_between[&(fa.min(fb), fa.max(fb))];
        for (x, y) in names.iter().zip(image) {
            stratum_map.insert(x.clone(), y.clone());
        }
    }
    let sign_map = if m == 2 {
        v1.iter().cloned().zip(signs).collect()
    } else {
        BTreeMap::new()
    };
    Ok(IsoVerdict::Isomorphic(Witness {
        stratum_map,
        psi,
        signs: sign_map,
        reverses_orientation: false,
    }))
}

fn stratifold_iso(
    d1: &CharacteristicData,
    d2: &CharacteristicData,
    weak: bool,
) -> Result<IsoVerdict, DataError> {
    let (q1, q2) = (d1.orbit_space(), d2.orbit_space());
    let (n1, n2) = (strata::is_normal(q1).normal, strata::is_normal(q2).normal);
    if n1 != n2 {
        return Ok(certify(d1, d2, weak));
    }
    if n1 {
        return Ok(normal_stratifold_iso(d1, d2, weak));
    }
    let (
        OrbitSpace::Stratifold2 {
            circles: c1,
            pieces: p1,
        },
        OrbitSpace::Stratifold2 {
            circles: c2,
            pieces: p2,
        },
    ) = (q1, q2)
    else {
        unreachable!("both bases are 2-stratifolds")
    };
    if incidence_match(c1, p1, c2, p2) {
        Ok(IsoVerdict::Unknown(
            "bipartite invariant agrees; stratified homeomorphism not decided".into(),
        ))
    } else {
        match certify(d1, d2, weak) {
            IsoVerdict::NotIsomorphic(c) if c.invariant == "exhaustive search" => {
                Ok(IsoVerdict::NotIsomorphic(Certificate {
                    invariant: "circle/piece incidence structure".into(),
                    left: "all fingerprint fields agree".into(),
                    right: "no incidence-preserving bijection".into(),
                }))
            }
            other => Ok(other),
        }
    }
}

fn normal_stratifold_iso(
    d1: &CharacteristicData,
    d2: &CharacteristicData,
    weak: bool,
) -> IsoVerdict {
    let pieces = |q: &OrbitSpace| match q {
        OrbitSpace::Stratifold2 { pieces, .. } => pieces.clone(),
        _ => unreachable!(),
    };
    let (p1, p2) = (pieces(d1.orbit_space()), pieces(d2.orbit_space()));
    let key = |p: &SurfacePiece| (p.orientable, p.genus, p.boundary.len());
    let mut remaining: Vec<&SurfacePiece> = p2.iter().collect();
    let mut map = BTreeMap::new();
    for a in &p1 {
        let Some(pos) = remaining.iter().position(|b| key(b) == key(a)) else {
            return certify(d1, d2, weak);
        };
        let b = remaining.remove(pos);
        map.insert(a.name.clone(), b.name.clone());
        for ((ca, _), (cb, _)) in a.boundary.iter().zip(&b.boundary) {
            map.insert(ca.clone(), cb.clone());
        }
    }
    if !remaining.is_empty() {
        return certify(d1, d2, weak);
    }
    IsoVerdict::Isomorphic(plain_witness(map, 1))
}

/// Whether some circle bijection carries every piece (with its degrees and
/// surface type) onto a piece of the other side.
fn incidence_match(c1: &[String], p1: &[SurfacePiece], c2: &[String], p2: &[SurfacePiece]) -> bool {
    if c1.len() != c2.len() || p1.len() != p2.len() {
        return false;
    }
    let idx2: BTreeMap<&String, usize> = c2.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let sheets1: Vec<usize> = c1.iter().map(|c| circle_sheets(p1, c)).collect();
    let sheets2: Vec<usize> = c2.iter().map(|c| circle_sheets(p2, c)).collect();
    let target: Vec<String> = sorted(
        p2.iter()
            .map(|p| {
                let b = sorted(
                    p.boundary
                        .iter()
                        .map(|(c, d)| (idx2[c], *d))
                        .collect::<Vec<_>>(),
                );
                format!("{}{}{:?}", p.orientable, p.genus, b)
            })
            .collect(),
    );
    let idx1: BTreeMap<&String, usize> = c1.iter().enumerate().map(|(i, c)| (c, i)).collect();

    fn go(
        i: usize,
        f: &mut Vec<usize>,
        used: &mut Vec<bool>,
        check: &dyn Fn(&[usize]) -> bool,
        s1: &[usize],
        s2: &[usize],
    ) -> bool {
        if i == s1.len() {
            return check(f);
        }
        for j in 0..s2.len() {
            if used[j] || s1[i] != s2[j] {
                continue;
            }
            used[j] = true;
            f.push(j);
            if go(i + 1, f, used, check, s1, s2) {
                return true;
            }
            f.pop();
            used[j] = false;
        }
        false
    }

    let check = |f: &[usize]| {
        let image: Vec<String> = sorted(
            p1.iter()
                .map(|p| {
                    let b = sorted(
                        p.boundary
                            .iter()
                            .map(|(c, d)| (f[idx1[c]], *d))
                            .collect::<Vec<_>>(),
                    );
                    format!("{}{}{:?}", p.orientable, p.genus, b)
                })
                .collect(),
        );
        image == target
    };
    go(
        0,
        &mut Vec::new(),
        &mut vec![false; c2.len()],
        &check,
        &sheets1,
        &sheets2,
    )
}

/// Re-checks a witness by direct substitution.
pub fn verify_witness(
    d1: &CharacteristicData,
    d2: &CharacteristicData,
    w: &Witness,
    weak: bool,
) -> bool {
    let m = d1.m();
    if d2.m() != m || w.psi.rows() != m || w.psi.cols() != m {
        return false;
    }
    if !w.psi.det().is_ok_and(|d| d.abs().is_one()) {
        return false;
    }
    if !weak && w.psi != IntMatrix::identity(m) {
        return false;
    }
    let (q1, q2) = (d1.orbit_space(), d2.orbit_space());
    let (s1, s2) = (strata::strata_poset(q1), strata::strata_poset(q2));
    if s1.len() != s2.len() || w.stratum_map.len() != s1.len() {
        return false;
    }
    let by2: BTreeMap<&str, &strata::Stratum> = s2.iter().map(|s| (s.name.as_str(), s)).collect();
    let images: BTreeSet<&String> = w.stratum_map.values().collect();
    if images.len() != s2.len() {
        return false;
    }
    let lam1 = d1.functor().by_name(q1);
    let lam2 = d2.functor().by_name(q2);
    for s in &s1 {
        let Some(t) = w.stratum_map.get(&s.name).and_then(|n| by2.get(n.as_str())) else {
            return false;
        };
        if s.dimension != t.dimension {
            return false;
        }
        let closure1: BTreeSet<&String> = s
            .closure_contains
            .iter()
            .map(|r| &w.stratum_map[&s1[r.0].name])
            .collect();
        let closure2: BTreeSet<&String> =
            t.closure_contains.iter().map(|r| &s2[r.0].name).collect();
        if closure1 != closure2 {
            return false;
        }
        if strata::link_of(q1, s) != strata::link_of(q2, t) {
            return false;
        }
        let image: PrimitiveSubtorus = match lam1[&s.name].image(&w.psi) {
            Ok(x) => x,
            Err(_) => return false,
        };
        if image != lam2[&t.name] {
            return false;
        }
    }
    let Ok(pushed) = d1.chern().pushforward(&w.psi) else {
        return false;
    };
    let expected = if w.reverses_orientation {
        d2.chern().negated()
    } else {
        d2.chern().clone()
    };
    pushed == expected
}
