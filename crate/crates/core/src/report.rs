//! Structured (JSON) renderings of results. Object keys are sorted and
//! integers that fit in 64 bits are numbers; larger ones are decimal strings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::chardata::{CharacteristicData, Lmn};
use crate::classify::{ClassificationResult, ManifoldVerdict, NamedType, StratifoldSummary};
use crate::document::{DocumentError, ParsedDocument};
use crate::iso::IsoVerdict;
use crate::lattice::IntMatrix;
use crate::model::HomologyProfile;

pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn matrix(m: &IntMatrix) -> Value {
    Value::Array(m.row_vecs().iter().map(|r| ints(r)).collect())
}

pub fn lmn(p: Lmn) -> Value {
    json!([p.l, p.m, p.n])
}

pub fn homology(h: &HomologyProfile) -> Value {
    Value::Array(
        h.groups
            .iter()
            .map(|g| json!({ "free_rank": g.free_rank, "torsion": ints(&g.torsion) }))
            .collect(),
    )
}

pub fn named_type(t: &NamedType) -> Value {
    let (kind, mut extra) = match t {
        NamedType::Torus(m) => ("Torus", json!({ "m": m })),
        NamedType::PrincipalBundleOverCircle(m) => ("PrincipalBundleOverCircle", json!({ "m": m })),
        NamedType::PrincipalBundleOverSurface {
            orientable,
            genus,
            m,
            chern,
        } => (
            "PrincipalBundleOverSurface",
            json!({ "orientable": orientable, "genus": genus, "m": m, "chern": chern.to_string() }),
        ),
        NamedType::CanonicalOverGraph {
            vertices,
            edges,
            loops,
        } => (
            "CanonicalOverGraph",
            json!({ "vertices": vertices, "edges": edges, "loops": loops }),
        ),
        NamedType::CanonicalOverStratifold(StratifoldSummary::Surface(s)) => (
            "CanonicalOverStratifold",
            json!({ "surface": { "orientable": s.orientable, "genus": s.genus, "boundary_count": s.boundary_count } }),
        ),
        NamedType::CanonicalOverStratifold(StratifoldSummary::Raw {
            circles,
            pieces,
            sheets,
        }) => (
            "CanonicalOverStratifold",
            json!({ "circles": circles, "pieces": pieces, "sheets": sheets }),
        ),
        NamedType::Sphere3 => ("Sphere3", json!({})),
        NamedType::S2xS1 => ("S2xS1", json!({})),
        NamedType::LensSpaceOrder(k) => ("LensSpaceOrder", json!({ "order": int(k) })),
        NamedType::QuasitoricCP1 => ("QuasitoricCP1", json!({})),
        NamedType::MomentAngleS3 => ("MomentAngleS3", json!({})),
    };
    let obj = extra.as_object_mut().expect("object literal");
    obj.insert("kind".into(), json!(kind));
    obj.insert("name".into(), json!(t.to_string()));
    extra
}

pub fn manifold(v: &ManifoldVerdict) -> Value {
    json!({ "manifold": v.manifold, "reason": v.reason })
}

pub fn classification(r: &ClassificationResult) -> Value {
    json!({
        "lmn": lmn(r.lmn),
        "family": format!("{:?}", r.family),
        "named_type": named_type(&r.named_type),
        "tags": r.tags.iter().map(named_type).collect::<Vec<_>>(),
        "is_manifold": manifold(&r.is_manifold),
        "homology": r.homology.as_ref().map(homology),
        "summary": r.summary(),
    })
}

pub fn verdict(v: &IsoVerdict) -> Value {
    match v {
        IsoVerdict::Isomorphic(w) => json!({
            "verdict": "Isomorphic",
            "witness": {
                "psi": matrix(&w.psi),
                "stratum_map": w.stratum_map,
                "signs": w.signs,
                "reverses_orientation": w.reverses_orientation,
            }
        }),
        IsoVerdict::NotIsomorphic(c) => json!({
            "verdict": "NotIsomorphic",
            "certificate": { "invariant": c.invariant, "left": c.left, "right": c.right },
        }),
        IsoVerdict::Unknown(why) => json!({ "verdict": "Unknown", "reason": why }),
    }
}

pub fn document_error(e: &DocumentError) -> Value {
    json!({
        "path": e.path(),
        "kinds": e.kinds(),
        "message": e.to_string(),
    })
}

pub fn data_summary(d: &CharacteristicData) -> Value {
    let labels: serde_json::Map<String, Value> = d
        .functor()
        .by_name(d.orbit_space())
        .into_iter()
        .filter(|(_, t)| t.rank() > 0)
        .map(|(k, t)| (k, matrix(t.basis())))
        .collect();
    json!({
        "base": d.orbit_space().variant_name(),
        "lmn": lmn(d.lmn()),
        "labels": labels,
        "chern": d.chern().to_string(),
    })
}

pub fn parsed(p: &ParsedDocument) -> Value {
    json!({ "data": data_summary(&p.data), "notes": p.notes })
}
