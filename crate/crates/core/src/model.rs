//! Cellular chain complexes of canonical models over graphs.
//!
//! Over a graph the canonical model is a graph of spaces: each vertex `v`
//! contributes the quotient torus `T^m / lambda(v)` and each edge a cylinder
//! `T^m x I` whose ends are collapsed onto the vertex spaces. With the
//! standard product cell structure on `T^m` (all cellular boundaries zero)
//! the cylinder cells `sigma x I` have boundary
//!
//! ```text
//! d(sigma x I) = (d sigma) x I + (-1)^{dim sigma} (q1(sigma) - q0(sigma))
//! ```
//!
//! where `q0`, `q1` are the quotient chain maps at the two ends.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::chardata::{CharacteristicData, ChernClass};
use crate::lattice::{primitivize, smith_normal_form, IntMatrix, LatticeError, PrimitiveVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("canonical complexes are built over graph bases only, not {0}")]
    UnsupportedBase(&'static str),
    #[error("unsupported torus rank {0} (expected 1 or 2)")]
    UnsupportedRank(usize),
    #[error("nonzero chern class over a graph")]
    NonzeroChern,
    #[error("boundary {degree} has shape {found:?}, expected {expected:?}")]
    Shape {
        degree: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("boundary composition d{0} d{next} is nonzero", next = .0 + 1)]
    NotAComplex(usize),
    #[error("malformed complex dump at line {line}: {msg}")]
    Dump { line: usize, msg: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Free chain complex `C_top -> ... -> C_0` with integer boundary matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    dims: Vec<usize>,
    /// `boundaries[k]` is `d_{k+1} : C_{k+1} -> C_k`, a `dims[k] x dims[k+1]`
    /// matrix.
    boundaries: Vec<IntMatrix>,
    cell_names: Vec<Vec<String>>,
}

impl ChainComplex {
    pub fn new(
        dims: Vec<usize>,
        boundaries: Vec<IntMatrix>,
        cell_names: Vec<Vec<String>>,
    ) -> Result<Self, ModelError> {
        if boundaries.len() + 1 != dims.len().max(1) {
            return Err(ModelError::Shape {
                degree: boundaries.len(),
                expected: (dims.len().saturating_sub(1), 0),
                found: (boundaries.len(), 0),
            });
        }
        for (k, b) in boundaries.iter().enumerate() {
            let expected = (dims[k], dims[k + 1]);
            if (b.rows(), b.cols()) != expected {
                return Err(ModelError::Shape {
                    degree: k + 1,
                    expected,
                    found: (b.rows(), b.cols()),
                });
            }
        }
        for k in 1..boundaries.len() {
            if !boundaries[k - 1].mul(&boundaries[k])?.is_zero() {
                return Err(ModelError::NotAComplex(k));
            }
        }
        Ok(ChainComplex {
            dims,
            boundaries,
            cell_names,
        })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    /// `d_k : C_k -> C_{k-1}` for `1 <= k <= top`.
    pub fn boundary(&self, k: usize) -> Option<&IntMatrix> {
        k.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    pub fn cell_names(&self) -> &[Vec<String>] {
        &self.cell_names
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating(self.dims.iter().copied())
    }

    /// Whether every composite `d_k d_{k+1}` vanishes.
    pub fn is_complex(&self) -> bool {
        (1..self.boundaries.len()).all(|k| {
            self.boundaries[k - 1]
                .mul(&self.boundaries[k])
                .is_ok_and(|p| p.is_zero())
        })
    }

    /// Plain-text listing: ranks per degree, cell names, then every boundary
    /// matrix in row-major order.
    pub fn to_dump_text(&self) -> String {
        let mut out = String::from("chain-complex\n");
        for (k, &n) in self.dims.iter().enumerate() {
            let _ = writeln!(out, "degree {k} rank {n}");
        }
        for (k, names) in self.cell_names.iter().enumerate() {
            for (i, name) in names.iter().enumerate() {
                let _ = writeln!(out, "cell {k} {i} {name}");
            }
        }
        for (k, b) in self.boundaries.iter().enumerate() {
            let _ = writeln!(
                out,
                "boundary {} rows {} cols {}",
                k + 1,
                b.rows(),
                b.cols()
            );
            for i in 0..b.rows() {
                let row: Vec<String> = b.row(i).iter().map(|x| x.to_string()).collect();
                let _ = writeln!(out, "{}", row.join(" "));
            }
        }
        out
    }

    pub fn from_dump_text(text: &str) -> Result<Self, ModelError> {
        let err = |line: usize, msg: &str| ModelError::Dump {
            line: line + 1,
            msg: msg.to_string(),
        };
        let lines: Vec<&str> = text.lines().collect();
        if lines.first().map(|l| l.trim()) != Some("chain-complex") {
            return Err(err(0, "missing `chain-complex` header"));
        }
        let mut dims = Vec::new();
        let mut names: Vec<Vec<String>> = Vec::new();
        let mut boundaries = Vec::new();
        let mut i = 1;
        while i < lines.len() {
            let words: Vec<&str> = lines[i].split_whitespace().collect();
            match words.as_slice() {
                [] => {}
                ["degree", k, "rank", n] => {
                    let k: usize = k.parse().map_err(|_| err(i, "bad degree"))?;
                    if k != dims.len() {
                        return Err(err(i, "degrees must be listed in order"));
                    }
                    dims.push(n.parse().map_err(|_| err(i, "bad rank"))?);
                    names.push(Vec::new());
                }
                ["cell", k, _, ..] => {
                    let k: usize = k.parse().map_err(|_| err(i, "bad degree"))?;
                    let name = lines[i].splitn(4, ' ').nth(3).unwrap_or("").to_string();
                    names
                        .get_mut(k)
                        .ok_or_else(|| err(i, "cell in unknown degree"))?
                        .push(name);
                }
                ["boundary", _, "rows", r, "cols", c] => {
                    let r: usize = r.parse().map_err(|_| err(i, "bad row count"))?;
                    let c: usize = c.parse().map_err(|_| err(i, "bad column count"))?;
                    let mut rows = Vec::with_capacity(r);
                    for _ in 0..r {
                        i += 1;
                        let line = lines.get(i).ok_or_else(|| err(i, "truncated matrix"))?;
                        let row = line
                            .split_whitespace()
                            .map(|x| x.parse::<BigInt>())
                            .collect::<Result<Vec<_>, _>>()
                            .map_err(|_| err(i, "bad matrix entry"))?;
                        rows.push(row);
                    }
                    boundaries
                        .push(IntMatrix::from_rows(c, &rows).map_err(|e| err(i, &e.to_string()))?);
                }
                _ => return Err(err(i, "unrecognized line")),
            }
            i += 1;
        }
        ChainComplex::new(dims, boundaries, names)
    }
}

fn alternating(xs: impl Iterator<Item = usize>) -> i64 {
    xs.enumerate()
        .map(|(k, n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub free_rank: usize,
    /// Torsion coefficients `>= 2`, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn free(rank: usize) -> Self {
        HomologyGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// Integral homology in degrees `0..=top`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyProfile {
    pub groups: Vec<HomologyGroup>,
}

impl HomologyProfile {
    pub fn free_ranks(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.free_rank).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating(self.free_ranks().into_iter())
    }

    pub fn degree(&self, k: usize) -> Option<&HomologyGroup> {
        self.groups.get(k)
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.groups.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `H_k = ker d_k / im d_{k+1}`, read off Smith normal forms.
pub fn homology(c: &ChainComplex) -> HomologyProfile {
    let top = c.top_degree();
    if c.dims.is_empty() {
        return HomologyProfile::default();
    }
    // rank and invariant factors of d_k, k = 1..=top
    let snfs: Vec<Vec<BigInt>> = c
        .boundaries
        .iter()
        .map(|b| smith_normal_form(b).invariant_factors())
        .collect();
    let rank = |k: usize| -> usize {
        if k == 0 || k > top {
            0
        } else {
            snfs[k - 1].len()
        }
    };
    let groups = (0..=top)
        .map(|k| {
            let free_rank = c.dims[k] - rank(k) - rank(k + 1);
            let torsion = if k < top {
                snfs[k].iter().filter(|x| !x.is_one()).cloned().collect()
            } else {
                Vec::new()
            };
            HomologyGroup { free_rank, torsion }
        })
        .collect();
    HomologyProfile { groups }
}

/// The functional `Z^2 -> Z` killing the direction `v`: `primitive(q, -p)`.
pub fn quotient_functional(v: &PrimitiveVector) -> PrimitiveVector {
    let c = v.coords();
    primitivize(&[c[1].clone(), -&c[0]]).expect("primitive input is nonzero")
}

/// Cellular complex of the canonical model over a graph base.
pub fn build_canonical_complex(d: &CharacteristicData) -> Result<ChainComplex, ModelError> {
    let q = d.orbit_space();
    let Some((vertices, edges)) = q.as_graph() else {
        return Err(ModelError::UnsupportedBase(q.variant_name()));
    };
    let m = d.m();
    if m != 1 && m != 2 {
        return Err(ModelError::UnsupportedRank(m));
    }
    if *d.chern() != ChernClass::Zero {
        return Err(ModelError::NonzeroChern);
    }
    let vindex = |name: &str| {
        vertices
            .iter()
            .position(|v| v == name)
            .expect("edge ends are vertices")
    };
    let (nv, ne) = (vertices.len(), edges.len());
    let labels = d.vertex_labels();
    let alpha: Vec<Option<PrimitiveVector>> = vertices
        .iter()
        .map(|v| {
            labels
                .get(v)
                .filter(|l| l.dim() == 2)
                .map(quotient_functional)
        })
        .collect();

    let x = |v: &str| format!("x[{v}]");
    let mut names: Vec<Vec<String>> = vec![vertices.iter().map(|v| x(v)).collect()];
    if m == 1 {
        // C0: x_v | C1: (pt x I)_e | C2: (e x I)_e
        names.push(edges.iter().map(|e| format!("pt*I[{}]", e.name)).collect());
        names.push(edges.iter().map(|e| format!("e1*I[{}]", e.name)).collect());
        let mut d1 = IntMatrix::zeros(nv, ne);
        for (j, e) in edges.iter().enumerate() {
            let (a, b) = (vindex(&e.ends[0]), vindex(&e.ends[1]));
            d1[(b, j)] += BigInt::one();
            d1[(a, j)] -= BigInt::one();
        }
        // e1 maps to the point in both vertex spaces, so the ends cancel.
        let d2 = IntMatrix::zeros(ne, ne);
        return ChainComplex::new(vec![nv, ne, ne], vec![d1, d2], names);
    }

    // C0: x_v | C1: s_v, then (pt x I)_e | C2: (e1 x I)_e, (e2 x I)_e | C3: (F x I)_e
    let mut c1: Vec<String> = vertices.iter().map(|v| format!("s[{v}]")).collect();
    c1.extend(edges.iter().map(|e| format!("pt*I[{}]", e.name)));
    names.push(c1);
    let mut c2 = Vec::with_capacity(2 * ne);
    for e in &edges {
        c2.push(format!("e1*I[{}]", e.name));
        c2.push(format!("e2*I[{}]", e.name));
    }
    names.push(c2);
    names.push(edges.iter().map(|e| format!("F*I[{}]", e.name)).collect());

    let mut d1 = IntMatrix::zeros(nv, nv + ne);
    let mut d2 = IntMatrix::zeros(nv + ne, 2 * ne);
    for (j, e) in edges.iter().enumerate() {
        let (a, b) = (vindex(&e.ends[0]), vindex(&e.ends[1]));
        d1[(b, nv + j)] += BigInt::one();
        d1[(a, nv + j)] -= BigInt::one();
        let (alpha0, alpha1) = (alpha[a].as_ref(), alpha[b].as_ref());
        let (Some(alpha0), Some(alpha1)) = (alpha0, alpha1) else {
            return Err(ModelError::UnsupportedRank(m));
        };
        for i in 0..2 {
            // sign (-1)^1 for one-cells; e_i -> alpha_v(e_i) s_v
            d2[(b, 2 * j + i)] -= &alpha1.coords()[i];
            d2[(a, 2 * j + i)] += &alpha0.coords()[i];
        }
    }
    // F maps to zero in each circle, and d F = 0 in T^2.
    let d3 = IntMatrix::zeros(2 * ne, ne);
    ChainComplex::new(vec![nv, nv + ne, 2 * ne, ne], vec![d1, d2, d3], names)
}

/// Closed-form homology of the interval model with labels `v`, `w` in
/// `Z^2`: `H_1 = Z^2 / <v, w>`, `H_2 = Z^{2 - rank<v, w>}`, `H_0 = H_3 = Z`.
pub fn interval_closed_form(
    v: &PrimitiveVector,
    w: &PrimitiveVector,
) -> Result<HomologyProfile, ModelError> {
    for x in [v, w] {
        if x.dim() != 2 {
            return Err(LatticeError::DimensionMismatch {
                expected: 2,
                found: x.dim(),
            }
            .into());
        }
        // re-check primitivity of whatever the caller built
        PrimitiveVector::new(x.coords().to_vec())?;
    }
    let a = IntMatrix::from_rows(2, &[v.coords().to_vec(), w.coords().to_vec()])?;
    let factors = smith_normal_form(&a).invariant_factors();
    let rank = factors.len();
    Ok(HomologyProfile {
        groups: vec![
            HomologyGroup::free(1),
            HomologyGroup {
                free_rank: 2 - rank,
                torsion: factors
                    .into_iter()
                    .filter(|x| !x.is_one() && !x.is_zero())
                    .collect(),
            },
            HomologyGroup::free(2 - rank),
            HomologyGroup::free(1),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strata::OrbitSpace;

    fn pv(v: &[i64]) -> PrimitiveVector {
        PrimitiveVector::from_i64(v).unwrap()
    }

    fn profile(groups: &[(usize, &[i64])]) -> HomologyProfile {
        HomologyProfile {
            groups: groups
                .iter()
                .map(|(r, t)| HomologyGroup {
                    free_rank: *r,
                    torsion: t.iter().map(|&x| BigInt::from(x)).collect(),
                })
                .collect(),
        }
    }

    #[test]
    fn point_and_torus() {
        let pt = ChainComplex::new(vec![1], vec![], vec![vec!["x".into()]]).unwrap();
        assert_eq!(homology(&pt), profile(&[(1, &[])]));
        let t2 = ChainComplex::new(
            vec![1, 2, 1],
            vec![IntMatrix::zeros(1, 2), IntMatrix::zeros(2, 1)],
            vec![],
        )
        .unwrap();
        assert_eq!(homology(&t2), profile(&[(1, &[]), (2, &[]), (1, &[])]));
        assert_eq!(homology(&t2).to_string(), "(Z, Z^2, Z)");
    }

    #[test]
    fn rejects_non_complex() {
        let d1 = IntMatrix::from_i64(&[&[1]]);
        let d2 = IntMatrix::from_i64(&[&[1]]);
        assert_eq!(
            ChainComplex::new(vec![1, 1, 1], vec![d1, d2], vec![]),
            Err(ModelError::NotAComplex(1))
        );
    }

    #[test]
    fn interval_sphere() {
        let d = CharacteristicData::interval(&pv(&[1, 0]), &pv(&[0, 1])).unwrap();
        let c = build_canonical_complex(&d).unwrap();
        assert_eq!(c.dims(), &[2, 3, 2, 1]);
        assert_eq!(
            homology(&c),
            profile(&[(1, &[]), (0, &[]), (0, &[]), (1, &[])])
        );
    }

    #[test]
    fn interval_s2_x_s1() {
        let d = CharacteristicData::interval(&pv(&[1, 0]), &pv(&[1, 0])).unwrap();
        let h = homology(&build_canonical_complex(&d).unwrap());
        assert_eq!(h, profile(&[(1, &[]), (1, &[]), (1, &[]), (1, &[])]));
    }

    #[test]
    fn interval_lens() {
        let d = CharacteristicData::interval(&pv(&[1, 0]), &pv(&[3, 5])).unwrap();
        let h = homology(&build_canonical_complex(&d).unwrap());
        assert_eq!(h, profile(&[(1, &[]), (0, &[5]), (0, &[]), (1, &[])]));
    }

    #[test]
    fn loop_circle_action() {
        let d = CharacteristicData::forced(OrbitSpace::single_loop(), 1).unwrap();
        let c = build_canonical_complex(&d).unwrap();
        assert_eq!(c.dims(), &[1, 1, 1]);
        assert_eq!(homology(&c), profile(&[(1, &[]), (1, &[]), (1, &[])]));
    }

    #[test]
    fn interval_circle_action_is_sphere() {
        let d = CharacteristicData::forced(OrbitSpace::Interval, 1).unwrap();
        let h = homology(&build_canonical_complex(&d).unwrap());
        assert_eq!(h, profile(&[(1, &[]), (0, &[]), (1, &[])]));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            interval_closed_form(&pv(&[1, 0]), &pv(&[0, 1])).unwrap(),
            profile(&[(1, &[]), (0, &[]), (0, &[]), (1, &[])])
        );
        assert_eq!(
            interval_closed_form(&pv(&[1, 0]), &pv(&[1, 0])).unwrap(),
            profile(&[(1, &[]), (1, &[]), (1, &[]), (1, &[])])
        );
        assert_eq!(
            interval_closed_form(&pv(&[1, 0]), &pv(&[3, 5]))
                .unwrap()
                .groups[1]
                .torsion,
            vec![BigInt::from(5)]
        );
    }

    #[test]
    fn rejects_other_bases() {
        let d = CharacteristicData::forced(OrbitSpace::Circle, 2).unwrap();
        assert_eq!(
            build_canonical_complex(&d),
            Err(ModelError::UnsupportedBase("circle"))
        );
    }

    #[test]
    fn dump_round_trip() {
        let d = CharacteristicData::interval(&pv(&[2, 1]), &pv(&[1, 4])).unwrap();
        let c = build_canonical_complex(&d).unwrap();
        let text = c.to_dump_text();
        assert!(text.starts_with("chain-complex\ndegree 0 rank 2\n"));
        assert_eq!(ChainComplex::from_dump_text(&text).unwrap(), c);
    }

    #[test]
    fn functional_kills_direction() {
        for v in [[1, 0], [0, 1], [3, -5], [2, 7]] {
            let p = pv(&v);
            let a = quotient_functional(&p);
            let dot = &a.coords()[0] * &p.coords()[0] + &a.coords()[1] * &p.coords()[1];
            assert!(dot.is_zero());
        }
    }
}
