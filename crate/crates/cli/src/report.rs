//! JSON payloads. Every payload carries `schema_version`; the matching
//! schemas live in `docs/schema/`. Indices and positions are 1-based.

use serde::Serialize;
use wfp_core::bounds::BoundReport;
use wfp_core::codes::{Analysis, Code, DirectViolation, StructuralReason, StructuralViolation};
use wfp_core::oracles::{Instance, OracleCertificate, Witness};
use wfp_core::search::SearchResult;
use wfp_core::setfam::{Family, Subset};

pub const SCHEMA_VERSION: u32 = 1;

pub fn positions(s: Subset) -> Vec<usize> {
    s.positions().collect()
}

pub fn family_sets(f: &Family) -> Vec<Vec<usize>> {
    f.iter().map(|&s| positions(s)).collect()
}

pub fn word_string(w: &[u8]) -> String {
    w.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
pub struct CodeJson {
    pub n: usize,
    pub q: usize,
    pub m: usize,
    pub words: Vec<Vec<u8>>,
}

impl From<&Code> for CodeJson {
    fn from(c: &Code) -> Self {
        CodeJson { n: c.n(), q: c.q(), m: c.len(), words: c.words().to_vec() }
    }
}

#[derive(Serialize)]
pub struct DirectJson {
    pub frameproof: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coalition: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub framed: Option<usize>,
}

impl DirectJson {
    pub fn new(v: Option<&DirectViolation>) -> Self {
        DirectJson {
            frameproof: v.is_none(),
            coalition: v.map(|v| v.coalition.iter().map(|x| x + 1).collect()),
            framed: v.map(|v| v.framed + 1),
        }
    }
}

#[derive(Serialize)]
pub struct StructuralJson {
    pub frameproof: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<[usize; 2]>,
}

impl StructuralJson {
    pub fn new(v: Option<&StructuralViolation>) -> Self {
        let (reason, pair) = match v.map(|v| v.reason) {
            Some(StructuralReason::Containment { inner, outer }) => (Some("containment"), Some([inner + 1, outer + 1])),
            Some(StructuralReason::Covering { a, b }) => (Some("covering"), Some([a + 1, b + 1])),
            None => (None, None),
        };
        StructuralJson { frameproof: v.is_none(), word: v.map(|v| v.word + 1), reason, pair }
    }
}

#[derive(Serialize)]
pub struct VerifyJson {
    pub schema_version: u32,
    pub t: usize,
    pub method: &'static str,
    pub frameproof: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direct: Option<DirectJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structural: Option<StructuralJson>,
}

#[derive(Serialize)]
pub struct ProfileJson {
    pub index: usize,
    pub family: Vec<Vec<usize>>,
    pub min_size: usize,
    pub max_size: usize,
    pub spread: usize,
    pub is_sperner: bool,
    pub is_non_2_covering: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub middle_layer_intersecting: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub low_high_cross_intersecting: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_small: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_large: Option<bool>,
    pub cases: Vec<&'static str>,
}

#[derive(Serialize)]
pub struct AnalyzeJson {
    pub schema_version: u32,
    pub n: usize,
    pub q: usize,
    pub m: usize,
    pub min_spread: usize,
    pub profiles: Vec<ProfileJson>,
}

impl AnalyzeJson {
    pub fn new(code: &Code, a: &Analysis) -> Self {
        let profiles = a
            .profiles
            .iter()
            .map(|p| ProfileJson {
                index: p.index + 1,
                family: family_sets(&p.family),
                min_size: p.min_size,
                max_size: p.max_size,
                spread: p.spread(),
                is_sperner: p.is_sperner,
                is_non_2_covering: p.is_non_2_covering,
                middle_layer_intersecting: p.middle_layer_intersecting,
                low_high_cross_intersecting: p.low_high_cross_intersecting,
                all_small: p.all_small,
                all_large: p.all_large,
                cases: p.cases.iter().map(|c| c.label()).collect(),
            })
            .collect();
        AnalyzeJson { schema_version: SCHEMA_VERSION, n: code.n(), q: code.q(), m: code.len(), min_spread: a.min_spread, profiles }
    }
}

#[derive(Serialize)]
pub struct BoundJson {
    pub method: &'static str,
    pub applicable: bool,
    pub value: Option<u64>,
    pub formula_value: Option<u64>,
    pub conditions: &'static str,
    pub citation: &'static str,
}

impl From<&BoundReport> for BoundJson {
    fn from(r: &BoundReport) -> Self {
        BoundJson {
            method: r.method.label(),
            applicable: r.applicable(),
            value: r.value,
            formula_value: r.formula_value,
            conditions: r.conditions,
            citation: r.citation(),
        }
    }
}

#[derive(Serialize)]
pub struct BoundRowJson {
    pub n: u64,
    pub stinson_wei: BoundJson,
    pub panoui: BoundJson,
    pub improved: BoundJson,
    pub best: Option<u64>,
    pub winner: &'static str,
}

#[derive(Serialize)]
pub struct BoundsJson {
    pub schema_version: u32,
    pub rows: Vec<BoundRowJson>,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InstanceJson {
    Code { n: usize, q: usize, t: usize },
    Family { n: usize, min_size: usize, max_size: usize, must_hit: Vec<[usize; 2]>, non_2_covering: bool },
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum WitnessJson {
    Code(CodeJson),
    Family(Vec<Vec<usize>>),
}

#[derive(Serialize)]
pub struct CertificateJson {
    pub schema_version: u32,
    pub instance: InstanceJson,
    pub status: &'static str,
    pub optimum: Option<usize>,
    pub witness: Option<WitnessJson>,
    /// Decimal string; the count can exceed 2^53.
    pub search_space_size: String,
    pub nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_seconds: Option<f64>,
}

impl From<&OracleCertificate> for CertificateJson {
    fn from(c: &OracleCertificate) -> Self {
        let instance = match &c.instance {
            Instance::Code { n, q, t } => InstanceJson::Code { n: *n, q: *q, t: *t },
            Instance::Family(f) => InstanceJson::Family {
                n: f.n,
                min_size: f.sizes.lo,
                max_size: f.sizes.hi,
                must_hit: f.must_hit.iter().map(|r| [r.lo, r.hi]).collect(),
                non_2_covering: f.non_2_covering,
            },
        };
        let witness = c.witness.as_ref().map(|w| match w {
            Witness::Code(code) => WitnessJson::Code(code.into()),
            Witness::Family(f) => WitnessJson::Family(family_sets(f)),
        });
        CertificateJson {
            schema_version: SCHEMA_VERSION,
            instance,
            status: c.status.label(),
            optimum: c.optimum,
            witness,
            search_space_size: c.search_space_size.to_string(),
            nodes: c.nodes,
            elapsed_seconds: c.elapsed.map(|d| d.as_secs_f64()),
        }
    }
}

#[derive(Serialize)]
pub struct SearchJson {
    pub schema_version: u32,
    pub n: usize,
    pub q: usize,
    pub t: usize,
    pub budget: u64,
    pub seed: u64,
    pub size: usize,
    pub status: &'static str,
    pub nodes_explored: u64,
    pub best_code: CodeJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_seconds: Option<f64>,
}

impl SearchJson {
    pub fn new(r: &SearchResult, t: usize, budget: u64) -> Self {
        SearchJson {
            schema_version: SCHEMA_VERSION,
            n: r.best_code.n(),
            q: r.best_code.q(),
            t,
            budget,
            seed: r.seed,
            size: r.size,
            status: r.status.label(),
            nodes_explored: r.nodes_explored,
            best_code: (&r.best_code).into(),
            wall_time_seconds: r.wall_time.map(|d| d.as_secs_f64()),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
