//! Naming the homeomorphism type and deciding manifold structure.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::chardata::{CharacteristicData, ChernClass, DataError, Lmn};
use crate::iso::decide_iso;
use crate::lattice::{det2, PrimitiveVector};
use crate::model::{build_canonical_complex, homology, HomologyProfile, ModelError};
use crate::strata::{self, Edge, OrbitSpace, StrataError, SurfacePiece, SurfaceWithBoundary};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("classification needs a connected base, found {0} components")]
    Disconnected(usize),
    #[error(transparent)]
    Data(#[from] DataError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Space(#[from] StrataError),
}

/// The coarse family fixed by the dimension profile and the kind of base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Torus,
    PrincipalOverCircle,
    OverGraph,
    PrincipalOverSurface,
    OverStratifold,
}

impl Family {
    pub fn of(lmn: Lmn) -> Family {
        match (lmn.l, lmn.n) {
            (0, 0) => Family::Torus,
            (1, 0) => Family::PrincipalOverCircle,
            (2, 0) => Family::PrincipalOverSurface,
            (0, _) => Family::OverGraph,
            _ => Family::OverStratifold,
        }
    }

    /// Name of the total space as it appears in the classification table.
    pub fn total_space(self, m: usize) -> String {
        match self {
            Family::Torus => format!("T^{m}"),
            Family::PrincipalOverCircle => format!("principal T^{m}-bundle ≅ S^1 × T^{m}"),
            Family::OverGraph => "over graph".into(),
            Family::PrincipalOverSurface => format!("principal T^{m}-bundle"),
            Family::OverStratifold => "over 2-stratifold".into(),
        }
    }

    pub fn base_name(self) -> &'static str {
        match self {
            Family::Torus => "{*}",
            Family::PrincipalOverCircle => "S^1",
            Family::OverGraph => "graph",
            Family::PrincipalOverSurface => "closed surface",
            Family::OverStratifold => "2-stratifold",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StratifoldSummary {
    Surface(SurfaceWithBoundary),
    Raw {
        circles: usize,
        pieces: usize,
        sheets: Vec<u32>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedType {
    Torus(usize),
    /// Always trivial, so `≅ S^1 × T^m`.
    PrincipalBundleOverCircle(usize),
    PrincipalBundleOverSurface {
        orientable: bool,
        genus: u32,
        m: usize,
        chern: ChernClass,
    },
    CanonicalOverGraph {
        vertices: usize,
        edges: usize,
        loops: usize,
    },
    CanonicalOverStratifold(StratifoldSummary),
    Sphere3,
    S2xS1,
    LensSpaceOrder(BigInt),
    QuasitoricCP1,
    MomentAngleS3,
}

impl fmt::Display for NamedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedType::Torus(m) => write!(f, "T^{m}"),
            NamedType::PrincipalBundleOverCircle(m) => {
                write!(f, "principal T^{m}-bundle over S^1 ≅ S^1 × T^{m}")
            }
            NamedType::PrincipalBundleOverSurface {
                orientable,
                genus,
                m,
                chern,
            } => {
                let kind = if *orientable {
                    "orientable"
                } else {
                    "non-orientable"
                };
                write!(
                    f,
                    "principal T^{m}-bundle over the {kind} closed surface of genus {genus}, chern class {chern}"
                )
            }
            NamedType::CanonicalOverGraph {
                vertices,
                edges,
                loops,
            } => write!(
                f,
                "canonical model over a graph ({vertices} vertices, {edges} edges, {loops} loops)"
            ),
            NamedType::CanonicalOverStratifold(StratifoldSummary::Surface(s)) => {
                write!(f, "canonical model over a 2-stratifold: {s}")
            }
            NamedType::CanonicalOverStratifold(StratifoldSummary::Raw {
                circles,
                pieces,
                sheets,
            }) => {
                let sheets: Vec<String> = sheets.iter().map(|s| s.to_string()).collect();
                write!(
                    f,
                    "canonical model over a 2-stratifold ({circles} circles, {pieces} pieces, sheets per circle [{}])",
                    sheets.join(", ")
                )
            }
            NamedType::Sphere3 => write!(f, "3-sphere"),
            NamedType::S2xS1 => write!(f, "S^2 × S^1"),
            NamedType::LensSpaceOrder(k) => write!(f, "lens space, order {k}"),
            NamedType::QuasitoricCP1 => write!(f, "quasitoric manifold CP^1"),
            NamedType::MomentAngleS3 => write!(f, "moment-angle manifold over an interval"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldVerdict {
    pub manifold: bool,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    pub lmn: Lmn,
    pub family: Family,
    pub named_type: NamedType,
    pub tags: Vec<NamedType>,
    pub is_manifold: ManifoldVerdict,
    pub homology: Option<HomologyProfile>,
}

impl ClassificationResult {
    /// One line: the name and the manifold verdict.
    pub fn summary(&self) -> String {
        format!(
            "{}; manifold: {}",
            self.named_type,
            if self.is_manifold.manifold {
                "yes"
            } else {
                "no"
            }
        )
    }
}

/// Manifold verdict: free actions always give manifolds; otherwise `X` is a
/// manifold exactly when `Q` is normal.
pub fn is_manifold(d: &CharacteristicData) -> ManifoldVerdict {
    let lmn = d.lmn();
    if lmn.n == 0 {
        return ManifoldVerdict {
            manifold: true,
            reason: "free action: principal bundle over a manifold".into(),
        };
    }
    let q = d.orbit_space();
    let report = strata::is_normal(q);
    if let Some((name, link)) = report.failures().next() {
        return ManifoldVerdict {
            manifold: false,
            reason: format!(
                "not normal: the link of `{name}` has {} components; total space is not a topological manifold",
                link.component_count
            ),
        };
    }
    let reason = match q {
        OrbitSpace::Stratifold2 { .. } => "orbit space is normal: a compact surface with boundary",
        _ if q.components().iter().all(strata::is_interval) => {
            "orbit space is normal: every component is an interval"
        }
        _ => "orbit space is normal",
    };
    ManifoldVerdict {
        manifold: true,
        reason: reason.into(),
    }
}

fn standard_interval() -> CharacteristicData {
    let e1 = PrimitiveVector::from_i64(&[1, 0]).expect("primitive");
    let e2 = PrimitiveVector::from_i64(&[0, 1]).expect("primitive");
    CharacteristicData::interval(&e1, &e2).expect("valid interval data")
}

/// Classifies data over a connected base.
pub fn classify(d: &CharacteristicData) -> Result<ClassificationResult, ClassifyError> {
    let q = d.orbit_space();
    let comps = strata::connected_components(q);
    if comps != 1 {
        return Err(ClassifyError::Disconnected(comps));
    }
    let lmn = d.lmn();
    let m = lmn.m;
    let family = Family::of(lmn);
    let mut tags = Vec::new();
    let mut hom = None;
    let named_type = match family {
        Family::Torus => NamedType::Torus(m),
        Family::PrincipalOverCircle => NamedType::PrincipalBundleOverCircle(m),
        Family::PrincipalOverSurface => match q {
            OrbitSpace::ClosedSurface { orientable, genus } => {
                NamedType::PrincipalBundleOverSurface {
                    orientable: *orientable,
                    genus: *genus,
                    m,
                    chern: d.chern().clone(),
                }
            }
            other => return Err(DataError::UnsupportedBase(other.variant_name()).into()),
        },
        Family::OverGraph => {
            let h = homology(&build_canonical_complex(d)?);
            let named = graph_type(d)?;
            if named == NamedType::Sphere3
                && decide_iso(d, &standard_interval(), true)?.is_isomorphic()
            {
                tags.push(NamedType::MomentAngleS3);
            }
            hom = Some(h);
            named
        }
        Family::OverStratifold => NamedType::CanonicalOverStratifold(stratifold_summary(q)?),
    };
    Ok(ClassificationResult {
        lmn,
        family,
        named_type,
        tags,
        is_manifold: is_manifold(d),
        homology: hom,
    })
}

fn graph_type(d: &CharacteristicData) -> Result<NamedType, ClassifyError> {
    let q = d.orbit_space();
    if strata::is_interval(q) {
        if d.m() == 1 {
            return Ok(NamedType::QuasitoricCP1);
        }
        let labels: Vec<PrimitiveVector> = d.vertex_labels().into_values().collect();
        if let [v, w] = labels.as_slice() {
            let k = det2(v, w).map_err(DataError::from)?.abs();
            return Ok(if k.is_zero() {
                NamedType::S2xS1
            } else if k.is_one() {
                NamedType::Sphere3
            } else {
                NamedType::LensSpaceOrder(k)
            });
        }
    }
    let (vertices, edges) = q.as_graph().expect("graph family has a graph base");
    Ok(NamedType::CanonicalOverGraph {
        vertices: vertices.len(),
        edges: edges.len(),
        loops: edges.iter().filter(|e| e.is_loop()).count(),
    })
}

fn stratifold_summary(q: &OrbitSpace) -> Result<StratifoldSummary, ClassifyError> {
    let form = strata::surface_with_boundary_form(q)?;
    if let Some(s) = form {
        return Ok(StratifoldSummary::Surface(s));
    }
    let OrbitSpace::Stratifold2 { circles, pieces } = q else {
        unreachable!("surface_with_boundary_form accepted a non-stratifold");
    };
    let sheets = circles
        .iter()
        .map(|c| {
            pieces
                .iter()
                .flat_map(|p| p.boundary.iter())
                .filter(|(name, _)| name == c)
                .map(|(_, deg)| deg)
                .sum()
        })
        .collect();
    Ok(StratifoldSummary::Raw {
        circles: circles.len(),
        pieces: pieces.len(),
        sheets,
    })
}

/// Classifies each connected component separately.
pub fn classify_components(
    d: &CharacteristicData,
) -> Result<Vec<ClassificationResult>, ClassifyError> {
    d.components()?.iter().map(classify).collect()
}

/// A coarse name for the base, used in the manifold table.
pub fn orbit_space_class(q: &OrbitSpace) -> &'static str {
    match q {
        OrbitSpace::Points(1) => "{*}",
        OrbitSpace::Points(_) => "finite set",
        OrbitSpace::Circle => "S^1",
        _ if strata::is_interval(q) => "interval",
        OrbitSpace::Interval | OrbitSpace::Graph { .. } => "graph",
        OrbitSpace::ClosedSurface { .. } => "closed surface",
        OrbitSpace::Stratifold2 { .. } => {
            if strata::is_normal(q).normal {
                "compact surface with boundary"
            } else {
                "2-stratifold"
            }
        }
    }
}

fn piece(name: &str, genus: u32, boundary: &[(&str, u32)]) -> SurfacePiece {
    SurfacePiece {
        name: name.into(),
        orientable: true,
        genus,
        boundary: boundary.iter().map(|(c, d)| (c.to_string(), *d)).collect(),
    }
}

/// Small connected bases of every kind admitted by the profile.
pub fn sample_bases(lmn: Lmn) -> Vec<OrbitSpace> {
    match Family::of(lmn) {
        Family::Torus => vec![OrbitSpace::Points(1)],
        Family::PrincipalOverCircle => vec![OrbitSpace::Circle],
        Family::PrincipalOverSurface => vec![
            OrbitSpace::ClosedSurface {
                orientable: true,
                genus: 0,
            },
            OrbitSpace::ClosedSurface {
                orientable: true,
                genus: 2,
            },
            OrbitSpace::ClosedSurface {
                orientable: false,
                genus: 1,
            },
        ],
        Family::OverGraph => {
            let star = OrbitSpace::graph(
                vec!["c".into(), "a".into(), "b".into(), "d".into()],
                vec![
                    Edge::new("e0", "c", "a"),
                    Edge::new("e1", "c", "b"),
                    Edge::new("e2", "c", "d"),
                ],
            );
            let theta =
                OrbitSpace::graph_from_pairs(&["a", "b"], &[("a", "b"), ("a", "b"), ("a", "b")]);
            let path = OrbitSpace::graph_from_pairs(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
            let mut out = vec![OrbitSpace::Interval, OrbitSpace::single_loop()];
            out.extend(
                [star, theta, path]
                    .into_iter()
                    .map(|g| g.expect("valid sample graph")),
            );
            out
        }
        Family::OverStratifold => {
            let samples = [
                (vec!["c"], vec![piece("d", 0, &[("c", 1)])]),
                (vec!["c", "c2"], vec![piece("a", 0, &[("c", 1), ("c2", 1)])]),
                (vec!["c"], vec![piece("d", 0, &[("c", 2)])]),
                (
                    vec!["c"],
                    vec![piece("d1", 0, &[("c", 1)]), piece("d2", 1, &[("c", 1)])],
                ),
            ];
            samples
                .into_iter()
                .map(|(cs, ps)| {
                    OrbitSpace::stratifold(cs.into_iter().map(String::from).collect(), ps)
                        .expect("valid sample stratifold")
                })
                .collect()
        }
    }
}

/// Sample data on a base: forced functor when unique, coordinate labels otherwise.
fn sample_data(q: OrbitSpace, m: usize) -> Result<CharacteristicData, DataError> {
    if m == 2 && q.as_graph().is_some() {
        let (vertices, _) = q.as_graph().expect("checked");
        let axes = [[1, 0], [0, 1]];
        let labels = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| Ok((v.clone(), PrimitiveVector::from_i64(&axes[i % 2])?)))
            .collect::<Result<_, DataError>>()?;
        return CharacteristicData::over_graph(q, &labels);
    }
    CharacteristicData::forced(q, m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tables {
    pub table1: String,
    pub table2: String,
    pub table3: String,
}

impl fmt::Display for Tables {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\n{}\n{}", self.table1, self.table2, self.table3)
    }
}

fn render(title: &str, header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = String>| -> String {
        let padded: Vec<String> = cells
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join(" | ").trim_end().to_string()
    };
    let mut out = format!("{title}\n");
    let _ = writeln!(out, "{}", line(&mut header.iter().map(|h| h.to_string())));
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    let _ = writeln!(out, "{}", rule.join("-+-"));
    for row in rows {
        let _ = writeln!(out, "{}", line(&mut row.iter().cloned()));
    }
    out
}

fn profile_cells(lmn: Lmn) -> Vec<String> {
    vec![
        lmn.dim_x().to_string(),
        lmn.dim_q().to_string(),
        lmn.l.to_string(),
        lmn.m.to_string(),
        lmn.n.to_string(),
    ]
}

/// Value set of the functor when the codimension rule forces it, else `λ`.
fn functor_label(lmn: Lmn) -> String {
    if lmn.n == 0 {
        "{1}".into()
    } else if lmn.n == lmn.m {
        "{1,T}".into()
    } else {
        "λ".into()
    }
}

/// `0` when `H^2(Q; Z^m)` vanishes on every sample base, else `c`.
fn chern_label(bases: &[OrbitSpace], m: usize) -> &'static str {
    if bases
        .iter()
        .all(|q| ChernClass::zero_for(q, m) == ChernClass::Zero)
    {
        "0"
    } else {
        "c"
    }
}

/// The three classification tables, produced by running the classifier on
/// sample data for every admissible profile.
pub fn enumerate_tables() -> Result<Tables, ClassifyError> {
    let profiles = Lmn::table();
    let header = ["dim X", "dim Q", "l", "m", "n"];
    let rows1: Vec<Vec<String>> = profiles.iter().map(|&p| profile_cells(p)).collect();

    let mut rows2 = Vec::new();
    let mut rows3 = Vec::new();
    for &lmn in &profiles {
        let bases = sample_bases(lmn);
        let mut families = BTreeSet::new();
        let mut manifold_classes = BTreeSet::new();
        for q in &bases {
            let d = sample_data(q.clone(), lmn.m)?;
            let r = classify(&d)?;
            debug_assert_eq!(r.lmn, lmn);
            families.insert(r.family);
            if r.is_manifold.manifold {
                manifold_classes.insert(orbit_space_class(q));
            }
        }
        let family = *families.iter().next().expect("at least one sample");
        debug_assert_eq!(families.len(), 1);
        let mut row = profile_cells(lmn);
        row.push(family.total_space(lmn.m));
        row.push(format!(
            "({}, {}, {})",
            family.base_name(),
            functor_label(lmn),
            chern_label(&bases, lmn.m)
        ));
        rows2.push(row);

        let mut row = profile_cells(lmn);
        row.push(manifold_classes.into_iter().collect::<Vec<_>>().join(", "));
        rows3.push(row);
    }
    let mut h2 = header.to_vec();
    h2.extend(["X", "characteristic data (Q, λ, c)"]);
    let mut h3 = header.to_vec();
    h3.push("orbit space");
    Ok(Tables {
        table1: render("Table 1: admissible triples (l, m, n)", &header, &rows1),
        table2: render(
            "Table 2: locally standard T-pseudomanifolds of dimension at most 3",
            &h2,
            &rows2,
        ),
        table3: render(
            "Table 3: orbit spaces of those that are topological manifolds",
            &h3,
            &rows3,
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(v: &[i64]) -> PrimitiveVector {
        PrimitiveVector::from_i64(v).unwrap()
    }

    #[test]
    fn interval_trichotomy() {
        let r =
            classify(&CharacteristicData::interval(&pv(&[1, 0]), &pv(&[0, 1])).unwrap()).unwrap();
        assert_eq!(r.named_type, NamedType::Sphere3);
        assert_eq!(r.tags, vec![NamedType::MomentAngleS3]);
        let r =
            classify(&CharacteristicData::interval(&pv(&[1, 0]), &pv(&[1, 0])).unwrap()).unwrap();
        assert_eq!(r.named_type, NamedType::S2xS1);
        let r =
            classify(&CharacteristicData::interval(&pv(&[1, 0]), &pv(&[2, 5])).unwrap()).unwrap();
        assert_eq!(r.named_type, NamedType::LensSpaceOrder(BigInt::from(5)));
        assert_eq!(r.summary(), "lens space, order 5; manifold: yes");
    }

    #[test]
    fn circle_actions() {
        let r = classify(&CharacteristicData::forced(OrbitSpace::Interval, 1).unwrap()).unwrap();
        assert_eq!(r.named_type, NamedType::QuasitoricCP1);
        let r =
            classify(&CharacteristicData::forced(OrbitSpace::single_loop(), 1).unwrap()).unwrap();
        assert!(!r.is_manifold.manifold);
        assert!(r.is_manifold.reason.contains("not normal"));
    }

    #[test]
    fn stratifolds() {
        let disk =
            OrbitSpace::stratifold(vec!["c".into()], vec![piece("d", 0, &[("c", 1)])]).unwrap();
        let r = classify(&CharacteristicData::forced(disk, 1).unwrap()).unwrap();
        assert!(r.is_manifold.manifold);
        assert_eq!(
            r.named_type,
            NamedType::CanonicalOverStratifold(StratifoldSummary::Surface(SurfaceWithBoundary {
                orientable: true,
                genus: 0,
                boundary_count: 1
            }))
        );
        let two =
            OrbitSpace::stratifold(vec!["c".into()], vec![piece("d", 0, &[("c", 2)])]).unwrap();
        let r = classify(&CharacteristicData::forced(two, 1).unwrap()).unwrap();
        assert!(!r.is_manifold.manifold);
    }

    #[test]
    fn surfaces_are_manifolds() {
        let q = OrbitSpace::ClosedSurface {
            orientable: false,
            genus: 2,
        };
        let d = CharacteristicData::new(
            q.clone(),
            crate::chardata::CharacteristicFunctor::forced(&q, 1),
            ChernClass::Torsion(vec![true]),
        )
        .unwrap();
        let r = classify(&d).unwrap();
        assert!(r.is_manifold.manifold);
        assert_eq!(r.lmn, Lmn::new(2, 1, 0));
    }

    #[test]
    fn disconnected_needs_components() {
        let q =
            OrbitSpace::graph_from_pairs(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap();
        let d = CharacteristicData::forced(q, 1).unwrap();
        assert_eq!(classify(&d), Err(ClassifyError::Disconnected(2)));
        let parts = classify_components(&d).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts
            .iter()
            .all(|r| r.named_type == NamedType::QuasitoricCP1));
    }

    #[test]
    fn tables_have_nine_rows() {
        let t = enumerate_tables().unwrap();
        for table in [&t.table1, &t.table2, &t.table3] {
            assert_eq!(table.lines().count(), 2 + 1 + 9);
        }
        assert!(t.table3.contains("compact surface with boundary"));
        assert!(t.table2.contains("(graph, {1,T}, 0)"));
    }
}
