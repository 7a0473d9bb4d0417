//! Stable, versioned JSON records shared by the CLI and the verification
//! harness; every intermediate valuation is included so that runs are
//! auditable without re-execution.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::invariants::{compute_invariants, InvariantSet, SexticForm};
use crate::ramification::{Parity, RamData};
use crate::stable::ResidueReports;
use crate::twist::{Classification, TwistParity, TwistReport};
use crate::valuation::LocalContext;
use crate::Rat;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveRecordJson {
    pub schema_version: u32,
    pub id: String,
    pub prime: u64,
    pub coefficients: Vec<String>,
    /// ν of each invariant (null = +∞, the invariant vanishes).
    pub valuations: BTreeMap<String, Option<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<BTreeMap<String, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stable_shape: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residue_reports: Option<ResidueReports>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub degrees: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ram: Option<RamJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub type_x: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub twist: Option<TwistJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RamJson {
    pub n: u32,
    pub r: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_k: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_k: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j2_parity: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TwistJson {
    pub d: String,
    pub parity: String,
    pub type_x_chi: String,
    pub wild: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primed: Option<PrimedJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PrimedJson {
    pub n: u32,
    pub r: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub degrees: Vec<i64>,
}

pub fn ram_json(ram: &RamData, omega: Option<&str>) -> RamJson {
    RamJson {
        n: ram.n,
        r: ram.r,
        q: ram.q,
        d_k: ram.d_k.map(|f| f.to_string()),
        r_k: ram.r_k.map(|f| f.to_string()),
        d: ram.d,
        j2_parity: ram.j2_parity.map(|p| {
            match p {
                Parity::Even => "even",
                Parity::Odd => "odd",
            }
            .to_string()
        }),
        omega: omega.map(|s| s.to_string()),
    }
}

pub fn valuation_map(
    form: &SexticForm,
    inv: &InvariantSet,
    ctx: &LocalContext,
) -> BTreeMap<String, Option<i64>> {
    let mut map = BTreeMap::new();
    let mut put = |name: &str, value: &Rat| {
        map.insert(name.to_string(), ctx.val(value).finite());
    };
    put("J2", &inv.j2);
    put("J4", &inv.j4);
    put("J6", &inv.j6);
    put("J8", &inv.j8);
    put("J10", &inv.j10);
    put("I2", &inv.i2);
    put("I4", &inv.i4);
    put("I6", &inv.i6);
    put("I8", &inv.i8);
    put("I12", &inv.i12);
    put("A2", &inv.a2);
    put("A3", &inv.a3);
    put("A4", &inv.a4);
    put("A5", &inv.a5);
    put("B2", &inv.b2);
    put("a0", form.coeff(0));
    map
}

pub fn invariant_map(inv: &InvariantSet) -> BTreeMap<String, String> {
    let mut map = BTreeMap::new();
    let mut put = |name: &str, value: &Rat| {
        map.insert(name.to_string(), value.to_string());
    };
    put("J2", &inv.j2);
    put("J4", &inv.j4);
    put("J6", &inv.j6);
    put("J8", &inv.j8);
    put("J10", &inv.j10);
    put("I2", &inv.i2);
    put("I4", &inv.i4);
    put("I6", &inv.i6);
    put("I8", &inv.i8);
    put("I12", &inv.i12);
    put("A2", &inv.a2);
    put("A3", &inv.a3);
    put("A4", &inv.a4);
    put("A5", &inv.a5);
    put("B2", &inv.b2);
    map
}

fn base_record(id: &str, form: &SexticForm, ctx: &LocalContext) -> CurveRecordJson {
    let inv = compute_invariants(form);
    CurveRecordJson {
        schema_version: SCHEMA_VERSION,
        id: id.to_string(),
        prime: ctx.prime(),
        coefficients: form.coeffs().iter().map(|c| c.to_string()).collect(),
        valuations: valuation_map(form, &inv, ctx),
        invariants: None,
        stable_shape: None,
        residue_reports: None,
        degrees: Vec::new(),
        ram: None,
        type_x: None,
        twist: None,
        errors: Vec::new(),
    }
}

/// Record for the `invariants` view: exact values plus valuations.
pub fn invariants_record(id: &str, form: &SexticForm, ctx: &LocalContext) -> CurveRecordJson {
    let mut rec = base_record(id, form, ctx);
    rec.invariants = Some(invariant_map(&compute_invariants(form)));
    rec
}

/// Record for a full classification.
pub fn classification_record(
    id: &str,
    form: &SexticForm,
    ctx: &LocalContext,
    cls: &Classification,
) -> CurveRecordJson {
    let mut rec = base_record(id, form, ctx);
    rec.stable_shape = Some(cls.fiber.kind.name().to_string());
    rec.residue_reports = Some(cls.fiber.reports.clone());
    rec.degrees = cls.degrees.map(|d| d.all_degrees()).unwrap_or_default();
    rec.ram = Some(ram_json(&cls.ram, Some(cls.omega.name())));
    rec.type_x = Some(cls.type_x.to_string());
    rec
}

/// Record for a full twist computation.
pub fn twist_record(
    id: &str,
    form: &SexticForm,
    d: &Rat,
    ctx: &LocalContext,
    report: &TwistReport,
) -> CurveRecordJson {
    let mut rec = base_record(id, form, ctx);
    rec.stable_shape = Some(report.shape.name().to_string());
    rec.residue_reports = Some(report.fiber.reports.clone());
    rec.degrees = report.degrees.map(|deg| deg.all_degrees()).unwrap_or_default();
    rec.ram = report
        .ram
        .as_ref()
        .map(|ram| ram_json(ram, report.omega.map(|o| o.name())));
    rec.type_x = Some(report.type_x.to_string());
    rec.twist = Some(TwistJson {
        d: d.to_string(),
        parity: match report.parity {
            TwistParity::Trivial => "trivial".to_string(),
            TwistParity::Ramified => "ramified".to_string(),
        },
        type_x_chi: report.type_x_chi.to_string(),
        wild: report.wild,
        primed: report.ram_twisted.as_ref().map(|ram| PrimedJson {
            n: ram.n,
            r: ram.r,
            q: ram.q,
            d: ram.d,
            degrees: report
                .degrees_twisted
                .map(|deg| deg.all_degrees())
                .unwrap_or_default(),
        }),
    });
    rec
}

/// Record for a failed computation, with the stage-tagged message.
pub fn error_record(
    id: &str,
    form: Option<&SexticForm>,
    ctx: Option<&LocalContext>,
    error: &crate::Error,
) -> CurveRecordJson {
    let mut rec = match (form, ctx) {
        (Some(form), Some(ctx)) => base_record(id, form, ctx),
        _ => CurveRecordJson {
            schema_version: SCHEMA_VERSION,
            id: id.to_string(),
            prime: ctx.map(|c| c.prime()).unwrap_or(0),
            coefficients: Vec::new(),
            valuations: BTreeMap::new(),
            invariants: None,
            stable_shape: None,
            residue_reports: None,
            degrees: Vec::new(),
            ram: None,
            type_x: None,
            twist: None,
            errors: Vec::new(),
        },
    };
    rec.errors.push(error.to_string());
    rec
}
