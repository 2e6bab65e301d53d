//! Canonical JSON text for every object and morphism kind.
//!
//! Subsets travel as index arrays (emitted strictly increasing), covering
//! pairs as `[lower, upper]` arrays sorted lexicographically, and object
//! keys alphabetically, so emission is deterministic and `emit` after
//! `parse` is the canonical form of any accepted input.  Parse errors name
//! the offending field by path.

use serde_json::{json, Map, Value};

use crate::bitop::{BiFrame, BiFrameHom, BiSpace, BiSpaceMap};
use crate::bits::{self, Bits};
use crate::error::{Error, Result};
use crate::family::SubsetFamily;
use crate::frith::{FrithHom, FrithPair};
use crate::lattice::{FinLattice, LatticeHom};
use crate::pervin::{PervinMap, PervinSpace};

/// Any object or morphism the tool reads and writes.
#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Lattice(FinLattice),
    Pervin(PervinSpace),
    Frith(FrithPair),
    Bispace(BiSpace),
    Biframe(BiFrame),
    LatticeMap(LatticeHom),
    PervinMap(PervinMap),
    FrithMap(FrithHom),
    BispaceMap(BiSpaceMap),
    BiframeMap(BiFrameHom),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Lattice(_) => "lattice",
            Payload::Pervin(_) => "pervin",
            Payload::Frith(_) => "frith",
            Payload::Bispace(_) => "bispace",
            Payload::Biframe(_) => "biframe",
            Payload::LatticeMap(_) => "lattice-map",
            Payload::PervinMap(_) => "pervin-map",
            Payload::FrithMap(_) => "frith-map",
            Payload::BispaceMap(_) => "bispace-map",
            Payload::BiframeMap(_) => "biframe-map",
        }
    }
}

fn schema(path: &str, msg: impl AsRef<str>) -> Error {
    Error::Schema(format!("{path}: {}", msg.as_ref()))
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| schema(path, "expected an object"))
}

fn get<'a>(m: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    m.get(key).ok_or_else(|| schema(path, format!("missing field `{key}`")))
}

fn string_list(v: &Value, path: &str) -> Result<Vec<String>> {
    let arr = v.as_array().ok_or_else(|| schema(path, "expected an array of strings"))?;
    arr.iter()
        .enumerate()
        .map(|(i, s)| {
            s.as_str()
                .map(str::to_owned)
                .ok_or_else(|| schema(&format!("{path}[{i}]"), "expected a string"))
        })
        .collect()
}

fn index_at(v: &Value, bound: usize, path: &str) -> Result<usize> {
    let n = v
        .as_u64()
        .ok_or_else(|| schema(path, "expected a non-negative integer"))? as usize;
    if n >= bound {
        return Err(schema(path, format!("index {n} out of range (size {bound})")));
    }
    Ok(n)
}

fn index_list(v: &Value, bound: usize, path: &str) -> Result<Vec<usize>> {
    let arr = v.as_array().ok_or_else(|| schema(path, "expected an array of indices"))?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| index_at(x, bound, &format!("{path}[{i}]")))
        .collect()
}

fn subset_bits(v: &Value, bound: usize, path: &str) -> Result<Bits> {
    let idx = index_list(v, bound, path)?;
    let mut out: Bits = 0;
    for (i, &p) in idx.iter().enumerate() {
        if bits::has(out, p) {
            return Err(schema(&format!("{path}[{i}]"), format!("duplicate index {p}")));
        }
        out |= bits::bit(p);
    }
    Ok(out)
}

fn subset_list(v: &Value, bound: usize, path: &str) -> Result<Vec<Bits>> {
    let arr = v.as_array().ok_or_else(|| schema(path, "expected an array of subsets"))?;
    arr.iter()
        .enumerate()
        .map(|(i, s)| subset_bits(s, bound, &format!("{path}[{i}]")))
        .collect()
}

fn indices_value(b: Bits) -> Value {
    json!(bits::to_vec(b))
}

fn subsets_value(members: &[Bits]) -> Value {
    Value::Array(members.iter().map(|&m| indices_value(m)).collect())
}

fn lattice_value(l: &FinLattice) -> Value {
    let covers: Vec<Value> = l.poset().covers().iter().map(|&(a, b)| json!([a, b])).collect();
    json!({
        "kind": "lattice",
        "elements": l.names(),
        "covers": covers,
    })
}

fn lattice_from(v: &Value, path: &str) -> Result<FinLattice> {
    let m = as_object(v, path)?;
    let names = string_list(get(m, "elements", path)?, &format!("{path}.elements"))?;
    let raw = get(m, "covers", path)?
        .as_array()
        .ok_or_else(|| schema(&format!("{path}.covers"), "expected an array of pairs"))?;
    let covers = raw
        .iter()
        .enumerate()
        .map(|(i, pair)| {
            let p = format!("{path}.covers[{i}]");
            let arr = pair.as_array().ok_or_else(|| schema(&p, "expected a pair"))?;
            if arr.len() != 2 {
                return Err(schema(&p, "expected exactly two indices"));
            }
            Ok((
                index_at(&arr[0], names.len(), &format!("{p}[0]"))?,
                index_at(&arr[1], names.len(), &format!("{p}[1]"))?,
            ))
        })
        .collect::<Result<Vec<(usize, usize)>>>()?;
    FinLattice::from_covers(names.len(), &covers, names)
}

fn pervin_value(p: &PervinSpace) -> Value {
    json!({
        "kind": "pervin",
        "ground": p.names(),
        "sets": subsets_value(p.family().members()),
    })
}

fn pervin_from(v: &Value, path: &str) -> Result<PervinSpace> {
    let m = as_object(v, path)?;
    let names = string_list(get(m, "ground", path)?, &format!("{path}.ground"))?;
    let sets = subset_list(get(m, "sets", path)?, names.len(), &format!("{path}.sets"))?;
    let n = names.len();
    PervinSpace::new(names, SubsetFamily::new(n, sets)?)
}

fn frith_value(f: &FrithPair) -> Value {
    json!({
        "kind": "frith",
        "lattice": lattice_value(f.lattice()),
        "sub": indices_value(f.sub()),
    })
}

fn frith_from(v: &Value, path: &str) -> Result<FrithPair> {
    let m = as_object(v, path)?;
    let lattice = lattice_from(get(m, "lattice", path)?, &format!("{path}.lattice"))?;
    let sub = subset_bits(get(m, "sub", path)?, lattice.size(), &format!("{path}.sub"))?;
    FrithPair::new(lattice, sub)
}

fn bispace_value(x: &BiSpace) -> Value {
    json!({
        "kind": "bispace",
        "ground": x.names(),
        "opens_pos": subsets_value(x.pos().members()),
        "opens_neg": subsets_value(x.neg().members()),
    })
}

fn bispace_from(v: &Value, path: &str) -> Result<BiSpace> {
    let m = as_object(v, path)?;
    let names = string_list(get(m, "ground", path)?, &format!("{path}.ground"))?;
    let n = names.len();
    let pos = subset_list(get(m, "opens_pos", path)?, n, &format!("{path}.opens_pos"))?;
    let neg = subset_list(get(m, "opens_neg", path)?, n, &format!("{path}.opens_neg"))?;
    BiSpace::new(
        names,
        SubsetFamily::new(n, pos)?,
        SubsetFamily::new(n, neg)?,
    )
}

fn biframe_value(l: &BiFrame) -> Value {
    json!({
        "kind": "biframe",
        "main": lattice_value(l.main()),
        "pos": indices_value(l.pos()),
        "neg": indices_value(l.neg()),
    })
}

fn biframe_from(v: &Value, path: &str) -> Result<BiFrame> {
    let m = as_object(v, path)?;
    let main = lattice_from(get(m, "main", path)?, &format!("{path}.main"))?;
    let pos = subset_bits(get(m, "pos", path)?, main.size(), &format!("{path}.pos"))?;
    let neg = subset_bits(get(m, "neg", path)?, main.size(), &format!("{path}.neg"))?;
    BiFrame::new(main, pos, neg)
}

fn map_value(kind: &str, dom: Value, cod: Value, map: &[usize]) -> Value {
    json!({
        "kind": kind,
        "dom": dom,
        "cod": cod,
        "map": map,
    })
}

fn assignment_from(
    m: &Map<String, Value>,
    dom_size: usize,
    cod_size: usize,
    path: &str,
) -> Result<Vec<usize>> {
    let map = index_list(get(m, "map", path)?, cod_size, &format!("{path}.map"))?;
    if map.len() != dom_size {
        return Err(schema(
            &format!("{path}.map"),
            format!("expected {dom_size} entries, found {}", map.len()),
        ));
    }
    Ok(map)
}

/// The canonical JSON value of a payload.
pub fn value_of(p: &Payload) -> Value {
    match p {
        Payload::Lattice(l) => lattice_value(l),
        Payload::Pervin(x) => pervin_value(x),
        Payload::Frith(f) => frith_value(f),
        Payload::Bispace(x) => bispace_value(x),
        Payload::Biframe(l) => biframe_value(l),
        Payload::LatticeMap(h) => {
            map_value("lattice-map", lattice_value(&h.dom), lattice_value(&h.cod), &h.map)
        }
        Payload::PervinMap(f) => {
            map_value("pervin-map", pervin_value(&f.dom), pervin_value(&f.cod), &f.map)
        }
        Payload::FrithMap(h) => {
            map_value("frith-map", frith_value(&h.dom), frith_value(&h.cod), &h.hom.map)
        }
        Payload::BispaceMap(f) => {
            map_value("bispace-map", bispace_value(&f.dom), bispace_value(&f.cod), &f.map)
        }
        Payload::BiframeMap(h) => {
            map_value("biframe-map", biframe_value(&h.dom), biframe_value(&h.cod), &h.hom.map)
        }
    }
}

/// Canonical text: pretty-printed JSON with alphabetical keys and a
/// trailing newline.
pub fn emit(p: &Payload) -> String {
    let mut text = serde_json::to_string_pretty(&value_of(p)).expect("JSON values serialize");
    text.push('\n');
    text
}

/// Parse any payload kind, validating it fully.
pub fn parse(text: &str) -> Result<Payload> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::Schema(format!("invalid JSON: {e}")))?;
    payload_from(&v, "$")
}

fn payload_from(v: &Value, path: &str) -> Result<Payload> {
    let m = as_object(v, path)?;
    let kind = get(m, "kind", path)?
        .as_str()
        .ok_or_else(|| schema(&format!("{path}.kind"), "expected a string"))?;
    match kind {
        "lattice" => Ok(Payload::Lattice(lattice_from(v, path)?)),
        "pervin" => Ok(Payload::Pervin(pervin_from(v, path)?)),
        "frith" => Ok(Payload::Frith(frith_from(v, path)?)),
        "bispace" => Ok(Payload::Bispace(bispace_from(v, path)?)),
        "biframe" => Ok(Payload::Biframe(biframe_from(v, path)?)),
        "lattice-map" => {
            let dom = lattice_from(get(m, "dom", path)?, &format!("{path}.dom"))?;
            let cod = lattice_from(get(m, "cod", path)?, &format!("{path}.cod"))?;
            let map = assignment_from(m, dom.size(), cod.size(), path)?;
            Ok(Payload::LatticeMap(LatticeHom::new(dom, cod, map)?))
        }
        "pervin-map" => {
            let dom = pervin_from(get(m, "dom", path)?, &format!("{path}.dom"))?;
            let cod = pervin_from(get(m, "cod", path)?, &format!("{path}.cod"))?;
            let map = assignment_from(m, dom.points(), cod.points(), path)?;
            Ok(Payload::PervinMap(PervinMap::new(dom, cod, map)?))
        }
        "frith-map" => {
            let dom = frith_from(get(m, "dom", path)?, &format!("{path}.dom"))?;
            let cod = frith_from(get(m, "cod", path)?, &format!("{path}.cod"))?;
            let map = assignment_from(m, dom.lattice().size(), cod.lattice().size(), path)?;
            let hom = LatticeHom::new(dom.lattice().clone(), cod.lattice().clone(), map)?;
            Ok(Payload::FrithMap(FrithHom::new(dom, cod, hom)?))
        }
        "bispace-map" => {
            let dom = bispace_from(get(m, "dom", path)?, &format!("{path}.dom"))?;
            let cod = bispace_from(get(m, "cod", path)?, &format!("{path}.cod"))?;
            let map = assignment_from(m, dom.points(), cod.points(), path)?;
            Ok(Payload::BispaceMap(BiSpaceMap::new(dom, cod, map)?))
        }
        "biframe-map" => {
            let dom = biframe_from(get(m, "dom", path)?, &format!("{path}.dom"))?;
            let cod = biframe_from(get(m, "cod", path)?, &format!("{path}.cod"))?;
            let map = assignment_from(m, dom.main().size(), cod.main().size(), path)?;
            let hom = LatticeHom::new(dom.main().clone(), cod.main().clone(), map)?;
            Ok(Payload::BiframeMap(BiFrameHom::new(dom, cod, hom)?))
        }
        other => Err(schema(
            &format!("{path}.kind"),
            format!(
                "unknown kind `{other}` (expected lattice, pervin, frith, bispace, biframe, \
                 or one of their -map forms)"
            ),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::pervin;

    fn roundtrip(p: Payload) {
        let text = emit(&p);
        let back = parse(&text).unwrap();
        assert_eq!(back, p);
        assert_eq!(emit(&back), text);
    }

    #[test]
    fn every_kind_roundtrips() {
        roundtrip(Payload::Lattice(catalog::b4()));
        roundtrip(Payload::Pervin(catalog::sier()));
        roundtrip(Payload::Frith(FrithPair::full(catalog::c3()).unwrap()));
        roundtrip(Payload::Bispace(catalog::sier_bispace()));
        roundtrip(Payload::Biframe(catalog::biframe_332()));
        roundtrip(Payload::LatticeMap(LatticeHom::identity(&catalog::b4())));
        roundtrip(Payload::PervinMap(PervinMap::identity(&catalog::p3())));
        roundtrip(Payload::FrithMap(FrithHom::identity(
            &FrithPair::full(catalog::c2()).unwrap(),
        )));
        roundtrip(Payload::BispaceMap(BiSpaceMap::identity(&catalog::sier_bispace())));
        let m = pervin::pervin_maps(&catalog::sier(), &catalog::indisc());
        roundtrip(Payload::PervinMap(m[0].clone()));
    }

    #[test]
    fn parse_normalizes_to_canonical_form() {
        let loose = r#"{
            "kind": "pervin",
            "ground": ["a", "b"],
            "sets": [[1, 0], [], [0]]
        }"#;
        let p = parse(loose).unwrap();
        assert_eq!(p, Payload::Pervin(catalog::sier()));
        let canon = emit(&p);
        assert_eq!(canon, emit(&Payload::Pervin(catalog::sier())));
        assert_eq!(parse(&canon).unwrap(), p);
    }

    #[test]
    fn schema_errors_name_the_offending_field() {
        let missing = r#"{"kind": "lattice", "elements": ["0", "1"]}"#;
        let err = parse(missing).unwrap_err().to_string();
        assert!(err.contains("covers"), "{err}");

        let out_of_range = r#"{"kind": "frith",
            "lattice": {"kind":"lattice","elements":["0","1"],"covers":[[0,1]]},
            "sub": [0, 7]}"#;
        let err = parse(out_of_range).unwrap_err().to_string();
        assert!(err.contains("$.sub[1]"), "{err}");

        let bad_kind = r#"{"kind": "poset"}"#;
        let err = parse(bad_kind).unwrap_err().to_string();
        assert!(err.contains("unknown kind"), "{err}");
    }

    #[test]
    fn structurally_broken_payloads_are_rejected() {
        // A family that is not closed under union is not a Pervin space.
        let bad = r#"{"kind": "pervin", "ground": ["a","b","c"],
                      "sets": [[], [0], [1], [0,1,2]]}"#;
        assert!(parse(bad).is_err());
        // An assignment that is not a homomorphism is rejected.
        let text = r#"{"kind": "lattice-map",
            "dom": {"kind":"lattice","elements":["0","m","1"],"covers":[[0,1],[1,2]]},
            "cod": {"kind":"lattice","elements":["0","1"],"covers":[[0,1]]},
            "map": [0, 0, 0]}"#;
        assert!(parse(text).is_err());
    }
}
