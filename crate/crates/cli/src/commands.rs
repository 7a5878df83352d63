use std::io::Read;

use serde::de::DeserializeOwned;
use serde_json::{json, Map, Value};

use polychrome::bits::Subset;
use polychrome::decomp::{
    chromatic_number, chromatic_polynomial_of, enumerate_decompositions, indecomposability_certificate,
    polymatroid_graph_witness, SearchOptions, Verdict, DEFAULT_BUDGET,
};
use polychrome::error::Error;
use polychrome::format::{subset_to_list, GraphJson, HypergraphJson, PolymatroidJson, PolynomialJson};
use polychrome::gallery;
use polychrome::matroid::Matroid;
use polychrome::mixing::{all_pair_decompositions, mixing_graph};
use polychrome::poly::Poly;
use polychrome::polymatroid::Polymatroid;
use polychrome::quotient::{excluded_minor_search, rank_difference, recover_chain, ChainFailure, ChainOutcome};

use crate::report::Failure;

pub type Results = Map<String, Value>;

/// Raw bytes of a file, or of standard input for `-`.
pub fn read_input(path: &str) -> Result<Vec<u8>, Failure> {
    let io = |e: std::io::Error| Failure::Io {
        path: path.to_string(),
        message: e.to_string(),
    };
    if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map_err(io)?;
        Ok(buf)
    } else {
        std::fs::read(path).map_err(io)
    }
}

/// Parse either the bare document or the `results.<field>` member of a
/// report printed by an earlier command.
fn parse_document<T: DeserializeOwned>(bytes: &[u8], field: &str) -> Result<T, Error> {
    let value: Value = serde_json::from_slice(bytes)?;
    let inner = match value.get("results").and_then(|r| r.get(field)) {
        Some(v) if value.get("command").is_some() => v.clone(),
        _ => value,
    };
    Ok(serde_json::from_value(inner)?)
}

pub fn parse_polymatroid(bytes: &[u8]) -> Result<Polymatroid, Error> {
    parse_document::<PolymatroidJson>(bytes, "polymatroid")?.to_polymatroid()
}

fn poly_json(p: &Poly) -> Value {
    json!({
        "coeffs": PolynomialJson::from(p).coeffs,
        "display": p.to_string(),
    })
}

fn lists(sets: &[Subset]) -> Vec<Vec<usize>> {
    sets.iter().map(|&s| subset_to_list(s)).collect()
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::Indecomposable(reason) => json!({ "verdict": "indecomposable", "reason": reason }),
        Verdict::Unknown => json!({ "verdict": "unknown" }),
    }
}

/// Node budget: an explicit flag wins, then `POLYCHROME_BUDGET`, then the
/// library default.
pub fn search_options(budget: Option<u64>, max_parts: Option<usize>) -> Result<SearchOptions, Error> {
    let budget = match budget {
        Some(b) => b,
        None => match std::env::var("POLYCHROME_BUDGET") {
            Ok(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Format(format!("POLYCHROME_BUDGET is not a node count: {s:?}")))?,
            Err(_) => DEFAULT_BUDGET,
        },
    };
    Ok(SearchOptions {
        max_parts,
        budget,
        ..SearchOptions::default()
    })
}

pub fn validate(bytes: &[u8]) -> Result<Results, Failure> {
    let p = parse_polymatroid(bytes)?;
    let mut r = Results::new();
    r.insert("valid".into(), json!(true));
    r.insert("n".into(), json!(p.n()));
    r.insert("total_rank".into(), json!(p.total_rank()));
    r.insert("max_singleton_rank".into(), json!(p.max_singleton_rank()));
    r.insert("is_matroid".into(), json!(p.is_matroid()));
    r.insert("connected".into(), json!(p.is_connected()));
    r.insert("blocks".into(), json!(lists(&p.connectivity_split())));
    Ok(r)
}

pub fn chromatic(bytes: &[u8], number: bool, opts: &SearchOptions) -> Result<Results, Failure> {
    let p = parse_polymatroid(bytes)?;
    let mut r = Results::new();
    if number {
        r.insert("chromatic_number".into(), json!(chromatic_number(&p, opts)?));
    } else {
        let ds = enumerate_decompositions(&p, opts)?;
        r.insert("polynomial".into(), poly_json(&chromatic_polynomial_of(&ds)));
        r.insert("decompositions".into(), json!(ds.len()));
    }
    if let Some(m) = opts.max_parts {
        r.insert("max_parts".into(), json!(m));
    }
    Ok(r)
}

pub fn decompose(bytes: &[u8], opts: &SearchOptions) -> Result<Results, Failure> {
    let p = parse_polymatroid(bytes)?;
    let ds = enumerate_decompositions(&p, opts)?;
    let mut r = Results::new();
    r.insert("count".into(), json!(ds.len()));
    r.insert(
        "decompositions".into(),
        json!(ds
            .iter()
            .map(|d| d.parts().iter().map(|m| m.table().to_vec()).collect::<Vec<_>>())
            .collect::<Vec<_>>()),
    );
    if ds.is_empty() {
        r.insert("certificate".into(), verdict_json(&indecomposability_certificate(&p)));
    }
    Ok(r)
}

pub fn hyper(bytes: &[u8], build: bool, props: bool, linegraph: bool) -> Result<Results, Failure> {
    let doc = parse_document::<HypergraphJson>(bytes, "hypergraph")?;
    let (h, t) = doc.to_hypergraph()?;
    let all = !(build || props || linegraph);
    let mut r = Results::new();
    if all || props {
        let mut v = serde_json::to_value(h.properties()).map_err(Error::from)?;
        if let Some(t) = &t {
            v["t_condition"] = json!(h.check_t(t));
        }
        r.insert("properties".into(), v);
    }
    if all || linegraph {
        r.insert("line_graph".into(), json!(GraphJson::from(&h.line_graph()?)));
    }
    if all || build {
        let t = t.unwrap_or_else(|| vec![1; h.edges().len()]);
        let p = h.build_polymatroid(&t)?;
        r.insert("thresholds".into(), json!(t));
        r.insert("polymatroid".into(), json!(PolymatroidJson::from(&p)));
    }
    Ok(r)
}

pub fn gallery(name: &str, params: &[i64]) -> Result<Results, Failure> {
    let item = gallery::by_name(name, params)?;
    let mut r = Results::new();
    r.insert("name".into(), json!(item.name));
    r.insert("params".into(), json!(item.params));
    r.insert("polymatroid".into(), json!(PolymatroidJson::from(&item.polymatroid)));
    if let Some((h, t)) = &item.hypergraph {
        r.insert("hypergraph".into(), json!(HypergraphJson::from_hypergraph(h, Some(t))));
    }
    let mut expected = Map::new();
    if let Some(chi) = item.expected.chromatic_number {
        expected.insert("chromatic_number".into(), json!(chi));
    }
    if let Some(p) = &item.expected.polynomial {
        expected.insert("polynomial".into(), poly_json(p));
    }
    r.insert("expected".into(), Value::Object(expected));
    Ok(r)
}

pub fn dual(bytes: &[u8], i: u32) -> Result<Results, Failure> {
    let p = parse_polymatroid(bytes)?;
    let d = p.i_dual(i)?;
    let mut r = Results::new();
    r.insert("i".into(), json!(i));
    r.insert("polymatroid".into(), json!(PolymatroidJson::from(&d)));
    Ok(r)
}

fn failure_json(f: &ChainFailure) -> Value {
    let mut v = serde_json::to_value(f).expect("chain failures serialize");
    if let ChainFailure::IllDefined { set, .. } | ChainFailure::SumMismatch { set } = f {
        v["set"] = json!(subset_to_list(*set));
    }
    v
}

pub fn quotient(bytes: &[u8], k: usize) -> Result<Results, Failure> {
    let p = parse_polymatroid(bytes)?;
    let mut r = Results::new();
    r.insert("k".into(), json!(k));
    match recover_chain(&p, k)? {
        ChainOutcome::Chain(chain) => {
            r.insert("is_quotient".into(), json!(true));
            r.insert(
                "chain".into(),
                json!(chain.parts().iter().map(|m| m.table().to_vec()).collect::<Vec<_>>()),
            );
            if chain.len() == 2 {
                r.insert("rank_difference".into(), json!(rank_difference(&chain)?));
            }
        }
        ChainOutcome::Failure(f) => {
            r.insert("is_quotient".into(), json!(false));
            r.insert("failure".into(), failure_json(&f));
        }
    }
    let minor = excluded_minor_search(&p, k)?.map(|w| {
        json!({
            "deleted": subset_to_list(w.deleted),
            "contracted": subset_to_list(w.contracted),
            "e": w.e,
            "f": w.f,
            "a": w.a,
            "b": w.b,
            "c": w.c,
        })
    });
    r.insert("excluded_minor".into(), minor.unwrap_or(Value::Null));
    Ok(r)
}

pub fn mixing(first: &[u8], second: &[u8]) -> Result<Results, Failure> {
    let m1 = Matroid::new(parse_polymatroid(first)?)?;
    let m2 = Matroid::new(parse_polymatroid(second)?)?;
    let g = mixing_graph(&m1, &m2)?;
    let mut r = Results::new();
    r.insert("vertices".into(), json!(lists(g.vertices())));
    r.insert("component_count".into(), json!(g.component_count()));
    r.insert(
        "components".into(),
        json!(g.components().iter().map(|c| lists(c)).collect::<Vec<_>>()),
    );
    r.insert(
        "pairs".into(),
        json!(all_pair_decompositions(&m1, &m2)?
            .iter()
            .map(|(a, b)| [a.table().to_vec(), b.table().to_vec()])
            .collect::<Vec<_>>()),
    );
    Ok(r)
}

pub fn witness(bytes: &[u8], max_vertices: usize, opts: &SearchOptions) -> Result<Results, Failure> {
    let p = parse_polymatroid(bytes)?;
    let mut r = Results::new();
    match polymatroid_graph_witness(&p, max_vertices, opts)? {
        Some((g, s)) => {
            r.insert("found".into(), json!(true));
            r.insert("graph".into(), json!(GraphJson::from(&g)));
            r.insert("scale".into(), json!(s.to_string()));
        }
        None => {
            r.insert("found".into(), json!(false));
        }
    }
    Ok(r)
}
