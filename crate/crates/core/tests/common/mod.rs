#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use num_bigint::BigInt;
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::Rng;
use torus_strata::document::{load, ParsedDocument};
use torus_strata::lattice::{IntMatrix, PrimitiveVector};
use torus_strata::strata::{
    self, frontier_condition_failures, strata_poset, validate_pseudomanifold,
};
use torus_strata::strata::{Edge, SurfacePiece};
use torus_strata::{CharacteristicData, OrbitSpace};

pub fn fixture(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(rel)
}

pub fn load_fixture(rel: &str) -> ParsedDocument {
    let text = std::fs::read_to_string(fixture(rel)).unwrap();
    load(&text).unwrap_or_else(|e| panic!("{rel}: {e}"))
}

pub fn fixture_names(dir: &str) -> Vec<String> {
    let mut out: Vec<String> = std::fs::read_dir(fixture(dir))
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".toml"))
        .collect();
    out.sort();
    out
}

pub fn pv(v: &[i64]) -> PrimitiveVector {
    PrimitiveVector::from_i64(v).unwrap()
}

pub fn random_primitive(rng: &mut impl Rng, bound: i64) -> PrimitiveVector {
    loop {
        let a = rng.gen_range(-bound..=bound);
        let b = rng.gen_range(-bound..=bound);
        if a.gcd(&b) == 1 {
            return pv(&[a, b]);
        }
    }
}

/// Product of up to `max_factors` elementary unimodular 2x2 matrices.
pub fn random_unimodular(rng: &mut impl Rng, max_factors: usize) -> IntMatrix {
    let mut psi = IntMatrix::identity(2);
    for _ in 0..rng.gen_range(0..=max_factors) {
        let e: IntMatrix = match rng.gen_range(0..4) {
            0 => IntMatrix::from_i64(&[&[1, rng.gen_range(-3..=3)], &[0, 1]]),
            1 => IntMatrix::from_i64(&[&[1, 0], &[rng.gen_range(-3..=3), 1]]),
            2 => IntMatrix::from_i64(&[&[0, 1], &[1, 0]]),
            _ => IntMatrix::from_i64(&[&[-1, 0], &[0, 1]]),
        };
        psi = e.mul(&psi).unwrap();
    }
    psi
}

/// Connected multigraph on at most `max_vertices` vertices, possibly with
/// loops and parallel edges.
pub fn random_connected_graph(rng: &mut impl Rng, max_vertices: usize) -> OrbitSpace {
    let n = rng.gen_range(1..=max_vertices);
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((j, i));
    }
    for _ in 0..rng.gen_range(0..=3) {
        edges.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    if edges.is_empty() {
        edges.push((0, 0));
    }
    let edges = edges
        .into_iter()
        .enumerate()
        .map(|(k, (a, b))| Edge::new(format!("e{k}"), vertices[a].clone(), vertices[b].clone()))
        .collect();
    OrbitSpace::graph(vertices, edges).unwrap()
}

pub fn random_graph_data(rng: &mut impl Rng, max_vertices: usize) -> CharacteristicData {
    let q = random_connected_graph(rng, max_vertices);
    let (vertices, _) = q.as_graph().unwrap();
    let labels: BTreeMap<String, PrimitiveVector> = vertices
        .into_iter()
        .map(|v| (v, random_primitive(rng, 4)))
        .collect();
    CharacteristicData::over_graph(q, &labels).unwrap()
}

/// The same data with vertices and edges renamed by a random permutation
/// and listed in shuffled order.
pub fn relabel(rng: &mut impl Rng, d: &CharacteristicData) -> CharacteristicData {
    let (vertices, edges) = d.orbit_space().as_graph().unwrap();
    let mut perm: Vec<usize> = (0..vertices.len()).collect();
    perm.shuffle(rng);
    let mut rename: BTreeMap<String, String> = vertices
        .iter()
        .zip(&perm)
        .map(|(v, &p)| (v.clone(), format!("w{p}")))
        .collect();
    for (k, e) in edges.iter().enumerate() {
        rename.insert(e.name.clone(), format!("f{k}"));
    }
    let mut new_vertices: Vec<String> = vertices.iter().map(|v| rename[v].clone()).collect();
    new_vertices.shuffle(rng);
    let mut new_edges: Vec<Edge> = edges
        .iter()
        .map(|e| {
            let (a, b) = (rename[&e.ends[0]].clone(), rename[&e.ends[1]].clone());
            if rng.gen_bool(0.5) {
                Edge::new(rename[&e.name].clone(), a, b)
            } else {
                Edge::new(rename[&e.name].clone(), b, a)
            }
        })
        .collect();
    new_edges.shuffle(rng);
    let q = OrbitSpace::graph(new_vertices, new_edges).unwrap();
    d.renamed(q, &rename).unwrap()
}

/// Random valid orbit space of any kind, not necessarily connected.
pub fn random_space(rng: &mut impl Rng) -> OrbitSpace {
    match rng.gen_range(0..5) {
        0 => OrbitSpace::Points(rng.gen_range(1..4)),
        1 => OrbitSpace::Circle,
        2 => OrbitSpace::ClosedSurface {
            orientable: rng.gen_bool(0.5),
            genus: rng.gen_range(1..4),
        },
        3 => {
            let mut parts = Vec::new();
            for c in 0..rng.gen_range(1..3) {
                let g = random_connected_graph(rng, 6);
                let (vs, es) = g.as_graph().unwrap();
                let tag = |s: &str| format!("{s}_{c}");
                parts.push((
                    vs.iter().map(|v| tag(v)).collect::<Vec<_>>(),
                    es.iter()
                        .map(|e| Edge::new(tag(&e.name), tag(&e.ends[0]), tag(&e.ends[1])))
                        .collect::<Vec<_>>(),
                ));
            }
            let (vs, es): (Vec<_>, Vec<_>) = parts.into_iter().unzip();
            OrbitSpace::graph(vs.concat(), es.concat()).unwrap()
        }
        _ => random_stratifold(rng),
    }
}

pub fn random_stratifold(rng: &mut impl Rng) -> OrbitSpace {
    let nc = rng.gen_range(1..4);
    let circles: Vec<String> = (0..nc).map(|i| format!("c{i}")).collect();
    let mut pieces = Vec::new();
    let mut used = BTreeSet::new();
    for p in 0..rng.gen_range(1..4) {
        let mut boundary = Vec::new();
        for _ in 0..rng.gen_range(1..3) {
            let c = rng.gen_range(0..nc);
            used.insert(c);
            boundary.push((circles[c].clone(), rng.gen_range(1..3)));
        }
        let orientable = rng.gen_bool(0.6);
        pieces.push(SurfacePiece {
            name: format!("p{p}"),
            orientable,
            genus: rng.gen_range(if orientable { 0 } else { 1 }..3),
            boundary,
        });
    }
    // every circle must bound some piece
    for (c, name) in circles.iter().enumerate() {
        if !used.contains(&c) {
            pieces[0].boundary.push((name.clone(), 1));
        }
    }
    OrbitSpace::stratifold(circles, pieces).unwrap()
}

/// Independent oracle for the interval model with labels `v`, `w`: since
/// `v` is primitive, `Z^2/<v, w>` is cyclic of order `|det(v, w)|`, or `Z`
/// when the determinant vanishes. Returns `(H1 free rank, H1 torsion, H2 rank)`.
pub fn interval_oracle(v: &PrimitiveVector, w: &PrimitiveVector) -> (usize, Vec<BigInt>, usize) {
    let (a, b) = (&v.coords()[0], &v.coords()[1]);
    let (c, d) = (&w.coords()[0], &w.coords()[1]);
    let det = num_traits::Signed::abs(&(a * d - b * c));
    if det == BigInt::from(0) {
        (1, vec![], 1)
    } else if det == BigInt::from(1) {
        (0, vec![], 0)
    } else {
        (0, vec![det], 0)
    }
}

/// Simplicial complex given by maximal simplices; homology ranks computed
/// by elimination over the rationals and over small primes.
pub struct Simplicial {
    pub simplices: Vec<Vec<Vec<usize>>>,
}

impl Simplicial {
    pub fn parse(text: &str) -> Self {
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut s: Vec<usize> = line
                .split_whitespace()
                .map(|x| x.parse().unwrap())
                .collect();
            s.sort();
            // all faces
            for mask in 1u32..(1 << s.len()) {
                let face: Vec<usize> = (0..s.len())
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| s[i])
                    .collect();
                all.insert(face);
            }
        }
        let top = all.iter().map(|s| s.len()).max().unwrap_or(1);
        let mut simplices = vec![Vec::new(); top];
        for s in all {
            simplices[s.len() - 1].push(s);
        }
        Simplicial { simplices }
    }

    fn boundary(&self, k: usize) -> Vec<Vec<i64>> {
        let rows = &self.simplices[k - 1];
        let index: BTreeMap<&Vec<usize>, usize> =
            rows.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut m = vec![vec![0i64; self.simplices[k].len()]; rows.len()];
        for (j, s) in self.simplices[k].iter().enumerate() {
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                m[index[&face]][j] += if i % 2 == 0 { 1 } else { -1 };
            }
        }
        m
    }

    /// Free ranks of homology, and whether every boundary has the same rank
    /// modulo 2, 3, 5 and 7 as over the rationals (no small torsion).
    #[allow(clippy::needless_range_loop)]
    pub fn homology(&self) -> (Vec<usize>, bool) {
        let top = self.simplices.len();
        let mut ranks_q = vec![0usize; top + 1];
        let mut torsion_free = true;
        for k in 1..top {
            let b = self.boundary(k);
            ranks_q[k] = rank_mod(&b, None);
            for p in [2, 3, 5, 7] {
                torsion_free &= rank_mod(&b, Some(p)) == ranks_q[k];
            }
        }
        let free = (0..top)
            .map(|k| self.simplices[k].len() - ranks_q[k] - ranks_q[k + 1])
            .collect();
        (free, torsion_free)
    }
}

/// Rank over `F_p`, or over the rationals (via a large prime) when `p` is
/// `None`. Entries here are tiny, so a large prime has no spurious drops.
fn rank_mod(m: &[Vec<i64>], p: Option<i64>) -> usize {
    let p = p.unwrap_or(1_000_000_007);
    let mut a: Vec<Vec<i64>> = m
        .iter()
        .map(|r| r.iter().map(|x| x.rem_euclid(p)).collect())
        .collect();
    let (rows, cols) = (a.len(), a.first().map_or(0, |r| r.len()));
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = modpow(a[rank][c], p - 2, p);
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c] * inv % p;
                let pivot_row = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn modpow(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Structural properties every valid orbit space satisfies. Returns the
/// first failing property.
pub fn appendix_properties(q: &OrbitSpace) -> Result<(), String> {
    if let Some(v) = validate_pseudomanifold(q).first() {
        return Err(format!("validator: {v}"));
    }
    let strata = strata_poset(q);
    if !frontier_condition_failures(&strata).is_empty() {
        return Err("frontier condition".into());
    }
    let dim = q.dimension();
    for s in &strata {
        if s.closure_contains
            .iter()
            .any(|r| strata[r.0].dimension >= s.dimension)
        {
            return Err(format!(
                "closure of `{}` meets a stratum of equal or higher dimension",
                s.name
            ));
        }
    }
    let tops: Vec<_> = strata.iter().filter(|s| s.dimension == dim).collect();
    for s in strata.iter().filter(|s| s.dimension < dim) {
        if !tops.iter().any(|t| t.closure_contains.contains(&s.id)) {
            return Err(format!("top strata are not dense near `{}`", s.name));
        }
    }
    for t in &tops {
        if strata.iter().any(|s| s.closure_contains.contains(&t.id)) {
            return Err(format!("top stratum `{}` is not open", t.name));
        }
    }
    if let Some((vertices, edges)) = q.as_graph() {
        if edges.is_empty() {
            return Err("graph without edges".into());
        }
        for s in strata.iter().filter(|s| s.dimension == 1) {
            if s.closure_contains.is_empty() || s.closure_contains.len() > 2 {
                return Err(format!(
                    "edge `{}` does not end in one or two vertices",
                    s.name
                ));
            }
        }
        if strata.iter().filter(|s| s.dimension == 0).count() != vertices.len() {
            return Err("vertex strata do not match vertices".into());
        }
    }
    let report = strata::is_normal(q);
    if report.normal != report.links.iter().all(|(_, l)| l.component_count == 1) {
        return Err("normality disagrees with links".into());
    }
    Ok(())
}

/// First line of each broken fixture reads `# expect: <violation kind>`.
pub fn broken_fixture_results() -> Vec<(String, String, Result<(), String>)> {
    fixture_names("broken")
        .into_iter()
        .map(|name| {
            let text = std::fs::read_to_string(fixture(&format!("broken/{name}"))).unwrap();
            let expected = text
                .lines()
                .next()
                .and_then(|l| l.strip_prefix("# expect: "))
                .unwrap_or_else(|| panic!("{name}: missing expect line"))
                .trim()
                .to_string();
            let outcome = match load(&text) {
                Ok(_) => Err("accepted".to_string()),
                Err(e) if e.kinds().contains(&expected) => Ok(()),
                Err(e) => Err(format!("wrong violation: {e} (kinds {:?})", e.kinds())),
            };
            (name, expected, outcome)
        })
        .collect()
}
