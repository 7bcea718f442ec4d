//! Canonical JSON encodings shared by the command line tool and the
//! Python bindings.
//!
//! Values are built on serde_json's default object map, which keeps
//! keys sorted, and every unordered collection is emitted in its
//! canonical internal order, so a value serializes to the same byte
//! string on every platform and run. Numbers that can exceed the
//! double range (coefficients, exponents) travel as strings; small
//! structural numbers (sizes, indices) as JSON integers.
//!
//! Formats:
//! - base ring: "Z", "Q", or "Fp:p"
//! - exponent vector: array of coordinate strings, e.g. ["2", "1/2"]
//! - term list: array of [exponents, coefficient] pairs in increasing
//!   exponent order
//! - ring element: {"base", "monoid", "terms"}
//! - matrix: {"n", "ring", "entries"} with entries a 2n x 2n array of
//!   term lists (the ring is hoisted out of the entries)
//! - generator word: {"n", "ring", "tokens"}, each token an object
//!   with "kind" one of "se", "se_diag", "sw", "delta_conj"

use crate::error::{Error, Result};
use crate::factor::{BruhatSplit, FactorStats, FactorizationResult};
use crate::geometry::{
    AxiomOutcome, MonoidInfo, PolarizedReport, PolarizedTriple, PyramidSplit, RationalCone,
};
use crate::lab::LemmaReport;
use crate::ring::monoid::MonoidKind;
use crate::ring::{BaseRing, ExponentVector, MonoidSpec, RingDesc, RingElement};
use crate::symplectic::{GenWord, IndexSet, SympMatrix, Token, WordToken};
use serde_json::{json, Map, Value};
use std::sync::Arc;

fn bad(ctx: &str) -> Error {
    Error::Parse(format!("json: {ctx}"))
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| bad(&format!("missing key {key}")))
}

fn as_obj(v: &Value) -> Result<&Map<String, Value>> {
    v.as_object().ok_or_else(|| bad("expected an object"))
}

fn as_arr(v: &Value) -> Result<&Vec<Value>> {
    v.as_array().ok_or_else(|| bad("expected an array"))
}

fn as_usize(v: &Value) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| bad("expected a nonnegative integer"))
}

fn as_str(v: &Value) -> Result<&str> {
    v.as_str().ok_or_else(|| bad("expected a string"))
}

pub fn base_to_value(base: &BaseRing) -> Value {
    Value::String(base.label())
}

pub fn base_from_value(v: &Value) -> Result<BaseRing> {
    BaseRing::parse(as_str(v)?)
}

pub fn exponents_to_value(e: &ExponentVector) -> Value {
    Value::Array(e.coord_strings().into_iter().map(Value::String).collect())
}

pub fn exponents_from_value(v: &Value) -> Result<ExponentVector> {
    let parts: Vec<String> = as_arr(v)?
        .iter()
        .map(|x| Ok(as_str(x)?.to_string()))
        .collect::<Result<_>>()?;
    ExponentVector::parse_coords(&parts)
}

pub fn monoid_to_value(m: &MonoidSpec) -> Value {
    match m.kind() {
        MonoidKind::FreeMixed { free } => match m.as_free_mixed() {
            Some((poly, laurent)) => json!({
                "kind": "free_mixed",
                "poly": poly,
                "laurent": laurent,
            }),
            None => json!({
                "kind": "free_mixed",
                "free": free.clone(),
            }),
        },
        MonoidKind::Affine { generators } => json!({
            "kind": "affine",
            "rank": m.rank(),
            "generators": generators.iter().map(exponents_to_value).collect::<Vec<_>>(),
        }),
        MonoidKind::CDivisibleTruncation { base, c, level } => json!({
            "kind": "c_divisible",
            "base": monoid_to_value(base),
            "c": c,
            "level": level,
        }),
    }
}

pub fn monoid_from_value(v: &Value) -> Result<Arc<MonoidSpec>> {
    let obj = as_obj(v)?;
    match as_str(get(obj, "kind")?)? {
        "free_mixed" => {
            if let Some(free) = obj.get("free") {
                let flags: Vec<bool> = as_arr(free)?
                    .iter()
                    .map(|x| x.as_bool().ok_or_else(|| bad("expected a boolean flag")))
                    .collect::<Result<_>>()?;
                MonoidSpec::free_mixed_axes(flags)
            } else {
                let poly = as_usize(get(obj, "poly")?)?;
                let laurent = as_usize(get(obj, "laurent")?)?;
                MonoidSpec::free_mixed(poly, laurent)
            }
        }
        "affine" => {
            let rank = as_usize(get(obj, "rank")?)?;
            let gens: Vec<ExponentVector> = as_arr(get(obj, "generators")?)?
                .iter()
                .map(exponents_from_value)
                .collect::<Result<_>>()?;
            MonoidSpec::affine(rank, gens)
        }
        "c_divisible" => {
            let base = monoid_from_value(get(obj, "base")?)?;
            let c = as_usize(get(obj, "c")?)? as u32;
            let level = as_usize(get(obj, "level")?)? as u32;
            MonoidSpec::c_divisible(base, c, level)
        }
        other => Err(bad(&format!("unknown monoid kind {other}"))),
    }
}

pub fn ring_to_value(ring: &RingDesc) -> Value {
    json!({
        "base": base_to_value(&ring.base),
        "monoid": monoid_to_value(&ring.monoid),
    })
}

pub fn ring_from_value(v: &Value) -> Result<RingDesc> {
    let obj = as_obj(v)?;
    Ok(RingDesc::new(
        base_from_value(get(obj, "base")?)?,
        monoid_from_value(get(obj, "monoid")?)?,
    ))
}

/// The term list of an element, without its ring.
pub fn terms_to_value(e: &RingElement) -> Value {
    Value::Array(
        e.terms()
            .map(|(exp, c)| {
                json!([
                    exponents_to_value(exp),
                    e.base().coeff_string(c),
                ])
            })
            .collect(),
    )
}

/// Rebuild an element from a term list in a known ring.
pub fn terms_from_value(ring: &RingDesc, v: &Value) -> Result<RingElement> {
    let mut terms = Vec::new();
    for pair in as_arr(v)? {
        let pair = as_arr(pair)?;
        if pair.len() != 2 {
            return Err(bad("term must be [exponents, coefficient]"));
        }
        let exp = exponents_from_value(&pair[0])?;
        let coeff = ring.base.parse_coeff(as_str(&pair[1])?)?;
        terms.push((exp, coeff));
    }
    RingElement::from_term_list(ring.clone(), terms)
}

pub fn element_to_value(e: &RingElement) -> Value {
    json!({
        "base": base_to_value(e.base()),
        "monoid": monoid_to_value(e.monoid()),
        "terms": terms_to_value(e),
    })
}

pub fn element_from_value(v: &Value) -> Result<RingElement> {
    let obj = as_obj(v)?;
    let ring = RingDesc::new(
        base_from_value(get(obj, "base")?)?,
        monoid_from_value(get(obj, "monoid")?)?,
    );
    terms_from_value(&ring, get(obj, "terms")?)
}

pub fn matrix_to_value(m: &SympMatrix) -> Value {
    let rows: Vec<Value> = (1..=m.size())
        .map(|i| {
            Value::Array(
                (1..=m.size())
                    .map(|j| terms_to_value(m.get(i, j)))
                    .collect(),
            )
        })
        .collect();
    json!({
        "n": m.n(),
        "ring": ring_to_value(m.ring()),
        "entries": rows,
    })
}

pub fn matrix_from_value(v: &Value) -> Result<SympMatrix> {
    let obj = as_obj(v)?;
    let n = as_usize(get(obj, "n")?)?;
    let ring = ring_from_value(get(obj, "ring")?)?;
    let rows = as_arr(get(obj, "entries")?)?;
    if rows.len() != 2 * n {
        return Err(bad(&format!("expected {} rows", 2 * n)));
    }
    let mut entries = Vec::with_capacity(4 * n * n);
    for row in rows {
        let row = as_arr(row)?;
        if row.len() != 2 * n {
            return Err(bad(&format!("expected {} columns", 2 * n)));
        }
        for cell in row {
            entries.push(terms_from_value(&ring, cell)?);
        }
    }
    SympMatrix::new(n, ring, entries)
}

pub fn index_set_to_value(s: &IndexSet) -> Value {
    Value::Array(s.members().iter().map(|i| json!(i)).collect())
}

pub fn index_set_from_value(n: usize, v: &Value) -> Result<IndexSet> {
    let members: Vec<usize> = as_arr(v)?.iter().map(as_usize).collect::<Result<_>>()?;
    IndexSet::new(n, &members)
}

fn token_to_value(wt: &WordToken) -> Value {
    let mut obj = match &wt.token {
        Token::Se { i, j, lam } => json!({
            "kind": "se",
            "i": i,
            "j": j,
            "lam": terms_to_value(lam),
        }),
        Token::SeDiag { i, lam } => json!({
            "kind": "se_diag",
            "i": i,
            "lam": terms_to_value(lam),
        }),
        Token::Sw { i, j, u } => json!({
            "kind": "sw",
            "i": i,
            "j": j,
            "u": terms_to_value(u),
        }),
        Token::DeltaConj { set, direction } => json!({
            "kind": "delta_conj",
            "set": index_set_to_value(set),
            "direction": direction,
        }),
    };
    obj.as_object_mut()
        .expect("token value is an object")
        .insert("inv".into(), Value::Bool(wt.inv));
    obj
}

fn token_from_value(n: usize, ring: &RingDesc, v: &Value) -> Result<WordToken> {
    let obj = as_obj(v)?;
    let inv = match obj.get("inv") {
        Some(b) => b.as_bool().ok_or_else(|| bad("inv must be a boolean"))?,
        None => false,
    };
    let token = match as_str(get(obj, "kind")?)? {
        "se" => Token::Se {
            i: as_usize(get(obj, "i")?)?,
            j: as_usize(get(obj, "j")?)?,
            lam: terms_from_value(ring, get(obj, "lam")?)?,
        },
        "se_diag" => Token::SeDiag {
            i: as_usize(get(obj, "i")?)?,
            lam: terms_from_value(ring, get(obj, "lam")?)?,
        },
        "sw" => Token::Sw {
            i: as_usize(get(obj, "i")?)?,
            j: as_usize(get(obj, "j")?)?,
            u: terms_from_value(ring, get(obj, "u")?)?,
        },
        "delta_conj" => {
            let direction = get(obj, "direction")?
                .as_i64()
                .ok_or_else(|| bad("direction must be an integer"))?;
            Token::DeltaConj {
                set: index_set_from_value(n, get(obj, "set")?)?,
                direction: direction as i32,
            }
        }
        other => return Err(bad(&format!("unknown token kind {other}"))),
    };
    Ok(WordToken { token, inv })
}

/// Words carry a ring so their scalar tokens can be rebuilt; the ring
/// must be supplied even for words that happen to be scalar-free.
pub fn word_to_value(w: &GenWord, ring: &RingDesc) -> Value {
    json!({
        "n": w.n,
        "ring": ring_to_value(ring),
        "tokens": w.tokens.iter().map(token_to_value).collect::<Vec<_>>(),
    })
}

pub fn word_from_value(v: &Value) -> Result<(GenWord, RingDesc)> {
    let obj = as_obj(v)?;
    let n = as_usize(get(obj, "n")?)?;
    let ring = ring_from_value(get(obj, "ring")?)?;
    let tokens: Vec<WordToken> = as_arr(get(obj, "tokens")?)?
        .iter()
        .map(|t| token_from_value(n, &ring, t))
        .collect::<Result<_>>()?;
    Ok((GenWord { n, tokens }, ring))
}

pub fn monoid_info_to_value(info: &MonoidInfo) -> Value {
    json!({
        "rank": info.rank,
        "kind": info.kind,
        "positive": info.positive,
        "denominator_bound": info.denominator_bound,
        "generators": info.generators.iter().map(exponents_to_value).collect::<Vec<_>>(),
        "cone": match &info.cone {
            Some(c) => json!({
                "dim": c.dim(),
                "pointed": c.is_pointed(),
                "rays": int_rows(c.rays()),
                "facet_normals": int_rows(c.facet_normals()),
            }),
            None => Value::Null,
        },
    })
}

/// Integer row lists (rays, normals) as arrays of decimal strings so
/// the width of the integer type never leaks into the format.
fn int_rows(rows: &[Vec<i128>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect()))
            .collect(),
    )
}

fn int_row(r: &[i128]) -> Value {
    Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect())
}

fn int_row_from(v: &Value) -> Result<Vec<i128>> {
    as_arr(v)?
        .iter()
        .map(|x| {
            as_str(x)?
                .parse::<i128>()
                .map_err(|_| bad("expected a decimal integer string"))
        })
        .collect()
}

fn int_rows_from(v: &Value) -> Result<Vec<Vec<i128>>> {
    as_arr(v)?.iter().map(int_row_from).collect()
}

pub fn factorization_to_value(r: &FactorizationResult) -> Value {
    json!({
        "complete": r.is_complete(),
        "residual": matrix_to_value(&r.residual),
        "stats": json!({
            "pivot_steps": r.stats.pivot_steps,
            "token_count": r.stats.token_count,
        }),
        "word": word_to_value(&r.word, r.residual.ring()),
    })
}

pub fn factorization_from_value(v: &Value) -> Result<FactorizationResult> {
    let obj = as_obj(v)?;
    let (word, _) = word_from_value(get(obj, "word")?)?;
    let residual = matrix_from_value(get(obj, "residual")?)?;
    let stats = as_obj(get(obj, "stats")?)?;
    let stats = FactorStats {
        token_count: as_usize(get(stats, "token_count")?)?,
        pivot_steps: as_usize(get(stats, "pivot_steps")?)?,
    };
    Ok(FactorizationResult {
        word,
        residual,
        stats,
    })
}

pub fn bruhat_split_to_value(s: &BruhatSplit) -> Value {
    let ring = s.beta2.ring();
    json!({
        "beta1": word_to_value(&s.beta1, ring),
        "beta2": matrix_to_value(&s.beta2),
        "beta3": word_to_value(&s.beta3, ring),
    })
}

pub fn bruhat_split_from_value(v: &Value) -> Result<BruhatSplit> {
    let obj = as_obj(v)?;
    let (beta1, _) = word_from_value(get(obj, "beta1")?)?;
    let beta2 = matrix_from_value(get(obj, "beta2")?)?;
    let (beta3, _) = word_from_value(get(obj, "beta3")?)?;
    Ok(BruhatSplit {
        beta1,
        beta2,
        beta3,
    })
}

pub fn lemma_report_to_value(r: &LemmaReport) -> Value {
    json!({
        "failures": r.failures,
        "instances_run": r.instances_run,
        "lemma_id": r.lemma_id,
        "mode": r.mode,
        "notes": r.notes,
    })
}

pub fn lemma_report_from_value(v: &Value) -> Result<LemmaReport> {
    let obj = as_obj(v)?;
    let failures: Vec<String> = as_arr(get(obj, "failures")?)?
        .iter()
        .map(|x| Ok(as_str(x)?.to_string()))
        .collect::<Result<_>>()?;
    Ok(LemmaReport {
        lemma_id: as_str(get(obj, "lemma_id")?)?.to_string(),
        mode: as_str(get(obj, "mode")?)?.to_string(),
        instances_run: as_usize(get(obj, "instances_run")?)?,
        failures,
        notes: as_str(get(obj, "notes")?)?.to_string(),
    })
}

/// The document emitted by a suite run: the seed it was run with, the
/// per-lemma reports in run order, and a single rolled-up verdict.
pub fn report_set_to_value(reports: &[LemmaReport], seed: u64) -> Value {
    json!({
        "all_passed": reports.iter().all(|r| r.failures.is_empty()),
        "reports": reports.iter().map(lemma_report_to_value).collect::<Vec<_>>(),
        "seed": seed,
    })
}

pub fn report_set_from_value(v: &Value) -> Result<(Vec<LemmaReport>, u64)> {
    let obj = as_obj(v)?;
    let reports: Vec<LemmaReport> = as_arr(get(obj, "reports")?)?
        .iter()
        .map(lemma_report_from_value)
        .collect::<Result<_>>()?;
    let seed = get(obj, "seed")?
        .as_u64()
        .ok_or_else(|| bad("seed must be a nonnegative integer"))?;
    Ok((reports, seed))
}

/// Cones serialize with their derived data (dimension, pointedness,
/// facet normals) for readers, but only the rank and the rays define
/// the value; parsing recomputes the rest.
pub fn cone_to_value(c: &RationalCone) -> Value {
    json!({
        "dim": c.dim(),
        "facet_normals": int_rows(c.facet_normals()),
        "pointed": c.is_pointed(),
        "rank": c.rank(),
        "rays": int_rows(c.rays()),
    })
}

pub fn cone_from_value(v: &Value) -> Result<RationalCone> {
    let obj = as_obj(v)?;
    let rank = as_usize(get(obj, "rank")?)?;
    let rays = int_rows_from(get(obj, "rays")?)?;
    RationalCone::new(rank, rays)
}

pub fn polarized_to_value(t: &PolarizedTriple) -> Value {
    json!({
        "apex_ray": int_row(&t.apex_ray),
        "base": cone_to_value(&t.base_polytope),
        "bound": t.generation_bound,
        "monoid": monoid_to_value(&t.monoid),
        "t": exponents_to_value(&t.t_exponent),
    })
}

pub fn polarized_from_value(v: &Value) -> Result<PolarizedTriple> {
    let obj = as_obj(v)?;
    PolarizedTriple::new(
        monoid_from_value(get(obj, "monoid")?)?,
        int_row_from(get(obj, "apex_ray")?)?,
        cone_from_value(get(obj, "base")?)?,
        exponents_from_value(get(obj, "t")?)?,
        as_usize(get(obj, "bound")?)? as u32,
    )
}

fn outcome_to_value(o: &AxiomOutcome) -> Value {
    json!({
        "detail": o.detail,
        "passed": o.passed,
        "witnesses": o.witnesses,
    })
}

fn outcome_from_value(v: &Value) -> Result<AxiomOutcome> {
    let obj = as_obj(v)?;
    let witnesses: Vec<String> = as_arr(get(obj, "witnesses")?)?
        .iter()
        .map(|x| Ok(as_str(x)?.to_string()))
        .collect::<Result<_>>()?;
    Ok(AxiomOutcome {
        passed: get(obj, "passed")?
            .as_bool()
            .ok_or_else(|| bad("passed must be a boolean"))?,
        detail: as_str(get(obj, "detail")?)?.to_string(),
        witnesses,
    })
}

pub fn polarized_report_to_value(r: &PolarizedReport) -> Value {
    json!({
        "all_passed": r.all_passed,
        "axioms": json!({
            "i": outcome_to_value(&r.axiom_i),
            "ii": outcome_to_value(&r.axiom_ii),
            "iii": outcome_to_value(&r.axiom_iii),
            "t": outcome_to_value(&r.t_check),
        }),
    })
}

pub fn polarized_report_from_value(v: &Value) -> Result<PolarizedReport> {
    let obj = as_obj(v)?;
    let axioms = as_obj(get(obj, "axioms")?)?;
    Ok(PolarizedReport {
        axiom_i: outcome_from_value(get(axioms, "i")?)?,
        axiom_ii: outcome_from_value(get(axioms, "ii")?)?,
        axiom_iii: outcome_from_value(get(axioms, "iii")?)?,
        t_check: outcome_from_value(get(axioms, "t")?)?,
        all_passed: get(obj, "all_passed")?
            .as_bool()
            .ok_or_else(|| bad("all_passed must be a boolean"))?,
    })
}

pub fn pyramid_split_to_value(s: &PyramidSplit) -> Value {
    json!({
        "apex": int_row(&s.apex),
        "delta": cone_to_value(&s.delta),
        "functional": int_row(&s.functional),
        "gamma": cone_to_value(&s.gamma),
        "shared": cone_to_value(&s.shared),
    })
}

pub fn pyramid_split_from_value(v: &Value) -> Result<PyramidSplit> {
    let obj = as_obj(v)?;
    Ok(PyramidSplit {
        apex: int_row_from(get(obj, "apex")?)?,
        delta: cone_from_value(get(obj, "delta")?)?,
        gamma: cone_from_value(get(obj, "gamma")?)?,
        shared: cone_from_value(get(obj, "shared")?)?,
        functional: int_row_from(get(obj, "functional")?)?,
    })
}

/// Compact one-line canonical serialization, newline terminated.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("serialization of tree values cannot fail");
    s.push('\n');
    s
}
