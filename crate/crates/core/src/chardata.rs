//! Characteristic functors, Chern classes and the assembled data triple.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::lattice::{fmt_vec, IntMatrix, LatticeError, PrimitiveSubtorus, PrimitiveVector};
use crate::strata::{self, OrbitSpace, StratumId, Violation};

/// Dimension profile: `dim X = l + m + n`, `dim Q = l + n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lmn {
    pub l: usize,
    pub m: usize,
    pub n: usize,
}

impl Lmn {
    pub const fn new(l: usize, m: usize, n: usize) -> Self {
        Lmn { l, m, n }
    }

    pub fn dim_x(&self) -> usize {
        self.l + self.m + self.n
    }

    pub fn dim_q(&self) -> usize {
        self.l + self.n
    }

    /// Whether a locally standard pseudomanifold of dimension at most three
    /// can have this profile: `m >= 1`, `m >= n`, `l + m + n <= 3`,
    /// `l + n <= 2`.
    pub fn is_admissible(&self) -> bool {
        self.m >= 1 && self.m >= self.n && self.dim_x() <= 3 && self.dim_q() <= 2
    }

    /// All admissible profiles, ordered by `dim X`, then `dim Q`, then
    /// decreasing `l`.
    pub fn table() -> Vec<Lmn> {
        let mut rows: Vec<Lmn> = (0..=3)
            .flat_map(|l| (0..=3).flat_map(move |m| (0..=3).map(move |n| Lmn::new(l, m, n))))
            .filter(Lmn::is_admissible)
            .collect();
        rows.sort_by_key(|r| (r.dim_x(), r.dim_q(), std::cmp::Reverse(r.l)));
        rows
    }
}

impl fmt::Display for Lmn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.l, self.m, self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DataError {
    #[error("unsupported dimension profile {0}")]
    UnsupportedProfile(Lmn),
    #[error("invalid orbit space: {}", join(.0))]
    Space(Vec<Violation>),
    #[error("invalid characteristic functor: {}", join(.0))]
    Functor(Vec<FunctorViolation>),
    #[error("chern class {found} does not fit base {base} (expected {expected})")]
    Chern {
        base: &'static str,
        expected: &'static str,
        found: String,
    },
    #[error("condition does not apply to a {0} base")]
    UnsupportedBase(&'static str),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn infer_lmn(q: &OrbitSpace, m: usize) -> Result<Lmn, DataError> {
    let (l, n) = q.filtration_dims();
    let lmn = Lmn::new(l, m, n);
    if lmn.is_admissible() {
        Ok(lmn)
    } else {
        Err(DataError::UnsupportedProfile(lmn))
    }
}

/// Stratum-to-subtorus assignment, keyed by ids of [`strata::strata_poset`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicFunctor {
    pub m: usize,
    pub assignment: BTreeMap<StratumId, PrimitiveSubtorus>,
}

impl CharacteristicFunctor {
    /// The functor forced by codimension when `m` equals the codimension of
    /// every singular stratum: trivial on top strata, all of `T^m` below.
    pub fn forced(q: &OrbitSpace, m: usize) -> Self {
        let dim = q.dimension();
        let assignment = strata::strata_poset(q)
            .into_iter()
            .map(|s| {
                let t = if s.dimension == dim {
                    PrimitiveSubtorus::trivial(m)
                } else {
                    PrimitiveSubtorus::full(m)
                };
                (s.id, t)
            })
            .collect();
        CharacteristicFunctor { m, assignment }
    }

    /// Builds from stratum names; strata without an entry get the trivial
    /// subtorus.
    pub fn from_names(
        q: &OrbitSpace,
        m: usize,
        by_name: &BTreeMap<String, PrimitiveSubtorus>,
    ) -> Self {
        let assignment = strata::strata_poset(q)
            .into_iter()
            .map(|s| {
                let t = by_name
                    .get(&s.name)
                    .cloned()
                    .unwrap_or_else(|| PrimitiveSubtorus::trivial(m));
                (s.id, t)
            })
            .collect();
        CharacteristicFunctor { m, assignment }
    }

    /// Graph functor from one primitive label per vertex.
    pub fn from_vertex_labels(q: &OrbitSpace, labels: &BTreeMap<String, PrimitiveVector>) -> Self {
        let m = labels.values().next().map_or(2, PrimitiveVector::dim);
        let by_name = labels
            .iter()
            .map(|(k, v)| (k.clone(), PrimitiveSubtorus::circle(v)))
            .collect();
        Self::from_names(q, m, &by_name)
    }

    pub fn by_name(&self, q: &OrbitSpace) -> BTreeMap<String, PrimitiveSubtorus> {
        strata::strata_poset(q)
            .into_iter()
            .filter_map(|s| self.assignment.get(&s.id).map(|t| (s.name, t.clone())))
            .collect()
    }

    pub fn get(&self, id: StratumId) -> Option<&PrimitiveSubtorus> {
        self.assignment.get(&id)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctorViolation {
    Missing(String),
    AmbientRank {
        stratum: String,
        expected: usize,
        found: usize,
    },
    Codimension {
        stratum: String,
        codim: usize,
        rank: usize,
    },
    Monotonicity {
        lower: String,
        upper: String,
    },
    UnknownStratum(StratumId),
}

impl FunctorViolation {
    pub fn kind(&self) -> &'static str {
        match self {
            FunctorViolation::Missing(_) => "missing label",
            FunctorViolation::AmbientRank { .. } => "rank mismatch",
            FunctorViolation::Codimension { .. } => "codimension rule",
            FunctorViolation::Monotonicity { .. } => "monotonicity",
            FunctorViolation::UnknownStratum(_) => "unknown stratum",
        }
    }
}

impl fmt::Display for FunctorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctorViolation::Missing(s) => write!(f, "missing label: stratum `{s}` has no subtorus"),
            FunctorViolation::AmbientRank {
                stratum,
                expected,
                found,
            } => write!(
                f,
                "rank mismatch: `{stratum}` lives in T^{found}, expected T^{expected}"
            ),
            FunctorViolation::Codimension {
                stratum,
                codim,
                rank,
            } => write!(
                f,
                "codimension rule: `{stratum}` has codimension {codim} but a rank-{rank} subtorus"
            ),
            FunctorViolation::Monotonicity { lower, upper } => write!(
                f,
                "monotonicity: `{lower}` lies in the closure of `{upper}` but its subtorus does not contain that of `{upper}`"
            ),
            FunctorViolation::UnknownStratum(id) => write!(f, "unknown stratum id {}", id.0),
        }
    }
}

pub fn validate_functor(q: &OrbitSpace, lambda: &CharacteristicFunctor) -> Vec<FunctorViolation> {
    let strata = strata::strata_poset(q);
    let dim = q.dimension();
    let mut out = Vec::new();
    for id in lambda.assignment.keys() {
        if id.0 >= strata.len() {
            out.push(FunctorViolation::UnknownStratum(*id));
        }
    }
    for s in &strata {
        let Some(t) = lambda.assignment.get(&s.id) else {
            out.push(FunctorViolation::Missing(s.name.clone()));
            continue;
        };
        if t.ambient_rank() != lambda.m {
            out.push(FunctorViolation::AmbientRank {
                stratum: s.name.clone(),
                expected: lambda.m,
                found: t.ambient_rank(),
            });
            continue;
        }
        let codim = dim - s.dimension;
        if t.rank() != codim {
            out.push(FunctorViolation::Codimension {
                stratum: s.name.clone(),
                codim,
                rank: t.rank(),
            });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for upper in &strata {
        for lower in &upper.closure_contains {
            let (tl, tu) = (&lambda.assignment[lower], &lambda.assignment[&upper.id]);
            if !tl.contains(tu) {
                out.push(FunctorViolation::Monotonicity {
                    lower: strata[lower.0].name.clone(),
                    upper: upper.name.clone(),
                });
            }
        }
    }
    out
}

/// An element of `H^2(Q; Z^m)` for the bases that occur.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ChernClass {
    /// The group itself vanishes (or the class is forced to vanish).
    Zero,
    /// Orientable closed surface: `H^2 = Z^m`.
    Free(Vec<BigInt>),
    /// Non-orientable closed surface: `H^2 = (Z/2)^m`.
    Torsion(Vec<bool>),
}

impl ChernClass {
    pub fn zero_for(q: &OrbitSpace, m: usize) -> Self {
        match q {
            OrbitSpace::ClosedSurface {
                orientable: true, ..
            } => ChernClass::Free(vec![BigInt::zero(); m]),
            OrbitSpace::ClosedSurface {
                orientable: false, ..
            } => ChernClass::Torsion(vec![false; m]),
            _ => ChernClass::Zero,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ChernClass::Zero => true,
            ChernClass::Free(v) => v.iter().all(Zero::is_zero),
            ChernClass::Torsion(v) => v.iter().all(|b| !b),
        }
    }

    /// `psi_*` on coefficients.
    pub fn pushforward(&self, psi: &IntMatrix) -> Result<ChernClass, LatticeError> {
        Ok(match self {
            ChernClass::Zero => ChernClass::Zero,
            ChernClass::Free(v) => ChernClass::Free(psi.apply(v)?),
            ChernClass::Torsion(v) => {
                let lifted: Vec<BigInt> = v.iter().map(|&b| BigInt::from(b as u8)).collect();
                let img = psi.apply(&lifted)?;
                ChernClass::Torsion(img.iter().map(|x| x % 2 != BigInt::zero()).collect())
            }
        })
    }

    pub fn negated(&self) -> ChernClass {
        match self {
            ChernClass::Free(v) => ChernClass::Free(v.iter().map(|x| -x).collect()),
            other => other.clone(),
        }
    }
}

impl fmt::Display for ChernClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChernClass::Zero => write!(f, "0"),
            ChernClass::Free(v) => write!(f, "{}", fmt_vec(v)),
            ChernClass::Torsion(v) => {
                let bits: Vec<&str> = v.iter().map(|&b| if b { "1" } else { "0" }).collect();
                write!(f, "({}) mod 2", bits.join(","))
            }
        }
    }
}

fn check_chern(q: &OrbitSpace, m: usize, c: &ChernClass) -> Result<(), DataError> {
    let (ok, expected) = match (q, c) {
        (
            OrbitSpace::ClosedSurface {
                orientable: true, ..
            },
            ChernClass::Free(v),
        ) => (v.len() == m, "an integer vector of length m"),
        (
            OrbitSpace::ClosedSurface {
                orientable: false, ..
            },
            ChernClass::Torsion(v),
        ) => (v.len() == m, "a mod-2 vector of length m"),
        (
            OrbitSpace::ClosedSurface {
                orientable: true, ..
            },
            _,
        ) => (false, "an integer vector of length m"),
        (
            OrbitSpace::ClosedSurface {
                orientable: false, ..
            },
            _,
        ) => (false, "a mod-2 vector of length m"),
        (_, ChernClass::Zero) => (true, "0"),
        _ => (false, "0"),
    };
    if ok {
        Ok(())
    } else {
        Err(DataError::Chern {
            base: q.variant_name(),
            expected,
            found: c.to_string(),
        })
    }
}

/// A validated triple `(Q, lambda, c)` with its dimension profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicData {
    q: OrbitSpace,
    lambda: CharacteristicFunctor,
    c: ChernClass,
    lmn: Lmn,
}

impl CharacteristicData {
    pub fn new(
        q: OrbitSpace,
        lambda: CharacteristicFunctor,
        c: ChernClass,
    ) -> Result<Self, DataError> {
        let violations = strata::validate_pseudomanifold(&q);
        if !violations.is_empty() {
            return Err(DataError::Space(violations));
        }
        let lmn = infer_lmn(&q, lambda.m)?;
        let fv = validate_functor(&q, &lambda);
        if !fv.is_empty() {
            return Err(DataError::Functor(fv));
        }
        check_chern(&q, lambda.m, &c)?;
        Ok(CharacteristicData { q, lambda, c, lmn })
    }

    /// Data with the forced functor and zero Chern class; valid whenever the
    /// functor is determined by `(Q, m)` alone.
    pub fn forced(q: OrbitSpace, m: usize) -> Result<Self, DataError> {
        let c = ChernClass::zero_for(&q, m);
        let lambda = CharacteristicFunctor::forced(&q, m);
        Self::new(q, lambda, c)
    }

    /// Graph data with `T^2` and one primitive label per vertex.
    pub fn over_graph(
        q: OrbitSpace,
        labels: &BTreeMap<String, PrimitiveVector>,
    ) -> Result<Self, DataError> {
        let lambda = CharacteristicFunctor::from_vertex_labels(&q, labels);
        Self::new(q, lambda, ChernClass::Zero)
    }

    /// Interval with labels `v` at `v0` and `w` at `v1`.
    pub fn interval(v: &PrimitiveVector, w: &PrimitiveVector) -> Result<Self, DataError> {
        let labels = BTreeMap::from([("v0".to_string(), v.clone()), ("v1".to_string(), w.clone())]);
        Self::over_graph(OrbitSpace::Interval, &labels)
    }

    pub fn orbit_space(&self) -> &OrbitSpace {
        &self.q
    }

    pub fn functor(&self) -> &CharacteristicFunctor {
        &self.lambda
    }

    pub fn chern(&self) -> &ChernClass {
        &self.c
    }

    pub fn lmn(&self) -> Lmn {
        self.lmn
    }

    pub fn m(&self) -> usize {
        self.lmn.m
    }

    /// Rank-one labels of the vertices of a graph base, by vertex name.
    pub fn vertex_labels(&self) -> BTreeMap<String, PrimitiveVector> {
        let Some((vertices, _)) = self.q.as_graph() else {
            return BTreeMap::new();
        };
        let by_name = self.lambda.by_name(&self.q);
        vertices
            .into_iter()
            .filter_map(|v| {
                let dir = by_name.get(&v)?.direction()?;
                Some((v, dir))
            })
            .collect()
    }

    /// `psi · d`: the same base with every subtorus and the Chern class
    /// pushed forward along the automorphism `psi`.
    pub fn transformed(&self, psi: &IntMatrix) -> Result<Self, DataError> {
        let assignment = self
            .lambda
            .assignment
            .iter()
            .map(|(id, t)| Ok((*id, t.image(psi)?)))
            .collect::<Result<_, LatticeError>>()?;
        let lambda = CharacteristicFunctor {
            m: self.lambda.m,
            assignment,
        };
        Self::new(self.q.clone(), lambda, self.c.pushforward(psi)?)
    }

    /// Same data on a base whose strata are renamed by `rename`.
    pub fn renamed(
        &self,
        q: OrbitSpace,
        rename: &BTreeMap<String, String>,
    ) -> Result<Self, DataError> {
        let by_name: BTreeMap<String, PrimitiveSubtorus> = self
            .lambda
            .by_name(&self.q)
            .into_iter()
            .map(|(k, v)| (rename.get(&k).cloned().unwrap_or(k), v))
            .collect();
        let lambda = CharacteristicFunctor::from_names(&q, self.lambda.m, &by_name);
        Self::new(q, lambda, self.c.clone())
    }

    /// Restrictions to the connected components of the base.
    pub fn components(&self) -> Result<Vec<CharacteristicData>, DataError> {
        let comps = self.q.components();
        if comps.len() == 1 {
            return Ok(vec![self.clone()]);
        }
        let by_name = self.lambda.by_name(&self.q);
        comps
            .into_iter()
            .map(|q| {
                let lambda = CharacteristicFunctor::from_names(&q, self.lambda.m, &by_name);
                let c = ChernClass::zero_for(&q, self.lambda.m);
                CharacteristicData::new(q, lambda, c)
            })
            .collect()
    }
}

/// Whether `Q \ Q_{l+n-1} -> Q` is a homotopy equivalence, with the reason.
///
/// In these models the inclusion is an equivalence exactly when every
/// component of `Q` contains one top stratum onto whose closure it
/// retracts, which happens precisely for normal spaces.
pub fn check_homotopy_equivalence_condition(q: &OrbitSpace) -> (bool, String) {
    match q {
        OrbitSpace::Points(_) | OrbitSpace::Circle | OrbitSpace::ClosedSurface { .. } => (
            true,
            "no singular strata: the interior is the whole space".into(),
        ),
        OrbitSpace::Interval | OrbitSpace::Graph { .. } => {
            let comps = q.components();
            if comps.iter().all(strata::is_interval) {
                (
                    true,
                    "every component is an interval whose open edge is contractible, as is the interval".into(),
                )
            } else {
                (
                    false,
                    "some component is not a single interval: the open edges form contractible pieces that do not match the graph's homotopy type".into(),
                )
            }
        }
        OrbitSpace::Stratifold2 { .. } => {
            if strata::is_normal(q).normal {
                (
                    true,
                    "each component is a compact surface with boundary, homotopy equivalent to its interior".into(),
                )
            } else {
                (
                    false,
                    "a singular circle carries several sheets: removing it changes the homotopy type".into(),
                )
            }
        }
    }
}

/// Surjectivity of `H^2(Q; Z^m) -> H^2(Q_top; Z^m)` for the bases with
/// free orbits and fixed points only. Holds because the target vanishes.
pub fn check_condition_surjective(
    q: &OrbitSpace,
    _m: usize,
) -> Result<(bool, &'static str), DataError> {
    match q {
        OrbitSpace::Interval | OrbitSpace::Graph { .. } => {
            Ok((true, "H^2 of a 1-complex vanishes"))
        }
        OrbitSpace::Stratifold2 { .. } => Ok((
            true,
            "the top part is a non-compact surface, so its H^2 vanishes",
        )),
        other => Err(DataError::UnsupportedBase(other.variant_name())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strata::{Edge, SurfacePiece};

    fn pv(v: &[i64]) -> PrimitiveVector {
        PrimitiveVector::from_i64(v).unwrap()
    }

    fn disk_stratifold() -> OrbitSpace {
        OrbitSpace::stratifold(
            vec!["c".into()],
            vec![SurfacePiece {
                name: "d".into(),
                orientable: true,
                genus: 0,
                boundary: vec![("c".into(), 1)],
            }],
        )
        .unwrap()
    }

    #[test]
    fn table_has_nine_rows() {
        let t = Lmn::table();
        assert_eq!(t.len(), 9);
        assert_eq!(t[0], Lmn::new(0, 1, 0));
        assert_eq!(t[8], Lmn::new(1, 1, 1));
    }

    #[test]
    fn infer_examples() {
        let g = OrbitSpace::graph_from_pairs(&["a", "b"], &[("a", "b"), ("a", "b")]).unwrap();
        assert_eq!(infer_lmn(&g, 2).unwrap(), Lmn::new(0, 2, 1));
        assert_eq!(infer_lmn(&disk_stratifold(), 1).unwrap(), Lmn::new(1, 1, 1));
        let s = OrbitSpace::closed_surface(true, 1).unwrap();
        assert_eq!(infer_lmn(&s, 1).unwrap(), Lmn::new(2, 1, 0));
        assert!(matches!(
            infer_lmn(&s, 2),
            Err(DataError::UnsupportedProfile(_))
        ));
        assert_eq!(
            infer_lmn(&disk_stratifold(), 2).unwrap_err().to_string(),
            "unsupported dimension profile (1,2,1)"
        );
    }

    #[test]
    fn infer_is_exhaustively_in_table() {
        let table = Lmn::table();
        let spaces = [
            OrbitSpace::Points(1),
            OrbitSpace::Circle,
            OrbitSpace::Interval,
            OrbitSpace::single_loop(),
            OrbitSpace::closed_surface(false, 2).unwrap(),
            disk_stratifold(),
        ];
        let mut hits = 0;
        for q in &spaces {
            for m in 1..=3 {
                if let Ok(lmn) = infer_lmn(q, m) {
                    assert!(table.contains(&lmn));
                    hits += 1;
                }
            }
        }
        // points: m=1,2,3; circle: 1,2; interval & loop: 1,2; surface: 1; stratifold: 1
        assert_eq!(hits, 11);
    }

    #[test]
    fn functor_codimension_rule() {
        let mut lambda = CharacteristicFunctor::from_vertex_labels(
            &OrbitSpace::Interval,
            &BTreeMap::from([("v0".into(), pv(&[1, 0])), ("v1".into(), pv(&[0, 1]))]),
        );
        assert!(validate_functor(&OrbitSpace::Interval, &lambda).is_empty());

        lambda
            .assignment
            .insert(StratumId(0), PrimitiveSubtorus::trivial(2));
        let v = validate_functor(&OrbitSpace::Interval, &lambda);
        assert_eq!(v[0].kind(), "codimension rule");

        let mut lambda = CharacteristicFunctor::forced(&OrbitSpace::Interval, 2);
        lambda
            .assignment
            .insert(StratumId(0), PrimitiveSubtorus::circle(&pv(&[1, 0])));
        lambda
            .assignment
            .insert(StratumId(1), PrimitiveSubtorus::circle(&pv(&[1, 0])));
        lambda
            .assignment
            .insert(StratumId(2), PrimitiveSubtorus::circle(&pv(&[1, 0])));
        let v = validate_functor(&OrbitSpace::Interval, &lambda);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind(), "codimension rule");
    }

    #[test]
    fn forced_functor_for_circle_actions() {
        let g =
            OrbitSpace::graph_from_pairs(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")])
                .unwrap();
        let d = CharacteristicData::forced(g.clone(), 1).unwrap();
        for s in strata::strata_poset(&g) {
            let t = d.functor().get(s.id).unwrap();
            if s.dimension == 0 {
                assert_eq!(*t, PrimitiveSubtorus::full(1));
            } else {
                assert_eq!(*t, PrimitiveSubtorus::trivial(1));
            }
        }
    }

    #[test]
    fn sub_poset_restriction_stays_valid() {
        let g = OrbitSpace::Graph {
            vertices: vec!["a".into(), "b".into(), "c".into()],
            edges: vec![Edge::new("x", "a", "b"), Edge::new("y", "b", "c")],
        };
        let labels = BTreeMap::from([
            ("a".into(), pv(&[1, 0])),
            ("b".into(), pv(&[1, 1])),
            ("c".into(), pv(&[2, 3])),
        ]);
        let d = CharacteristicData::over_graph(g, &labels).unwrap();
        let sub = OrbitSpace::Graph {
            vertices: vec!["a".into(), "b".into()],
            edges: vec![Edge::new("x", "a", "b")],
        };
        assert!(d.renamed(sub, &BTreeMap::new()).is_ok());
    }

    #[test]
    fn chern_variant_must_match_base() {
        let s = OrbitSpace::closed_surface(false, 1).unwrap();
        let lambda = CharacteristicFunctor::forced(&s, 1);
        assert!(CharacteristicData::new(
            s.clone(),
            lambda.clone(),
            ChernClass::Free(vec![1.into()])
        )
        .is_err());
        assert!(CharacteristicData::new(s, lambda, ChernClass::Torsion(vec![true])).is_ok());
        let lambda = CharacteristicFunctor::forced(&OrbitSpace::Circle, 2);
        assert!(CharacteristicData::new(
            OrbitSpace::Circle,
            lambda,
            ChernClass::Torsion(vec![true, false])
        )
        .is_err());
    }

    #[test]
    fn homotopy_condition() {
        assert!(
            check_homotopy_equivalence_condition(&OrbitSpace::closed_surface(true, 2).unwrap()).0
        );
        let g = OrbitSpace::graph_from_pairs(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert!(!check_homotopy_equivalence_condition(&g).0);
        assert!(!check_homotopy_equivalence_condition(&OrbitSpace::single_loop()).0);
        assert!(check_homotopy_equivalence_condition(&OrbitSpace::Interval).0);
        assert!(check_homotopy_equivalence_condition(&disk_stratifold()).0);
    }

    #[test]
    fn surjectivity_condition() {
        assert_eq!(
            check_condition_surjective(&OrbitSpace::single_loop(), 2).unwrap(),
            (true, "H^2 of a 1-complex vanishes")
        );
        assert!(check_condition_surjective(&disk_stratifold(), 1).unwrap().0);
        assert!(
            check_condition_surjective(&OrbitSpace::closed_surface(true, 0).unwrap(), 1).is_err()
        );
    }
}
