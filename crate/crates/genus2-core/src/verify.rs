//! Internal oracle and table audits.
//!
//! The oracle classifies the twisted equation `y² = D·P(x)` directly
//! through the untwisted pipeline and compares the result with the
//! table-driven prediction; the audits check the encoded tables for
//! involution under twisting and row disjointness.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Error;
use crate::invariants::SexticForm;
use crate::ramification::{OmegaStatus, Parity, RamData, Regime};
use crate::stable::{SingularityDegrees, StableFiberKind};
use crate::tables::{self, char5_twist_table, LookupInput, ReductionSymbol};
use crate::twist::{classify_curve, run_twist, twist_ram_data, Classification, TwistQuery};
use crate::valuation::LocalContext;
use crate::{Frac, Rat};

/// Compact trace of one route through the pipeline.
#[derive(Debug, Clone, Serialize)]
pub struct RouteTrace {
    pub shape: String,
    pub omega: String,
    pub n: u32,
    pub r: u32,
    pub q: Option<u32>,
    pub d: Option<i64>,
    pub degrees: Vec<i64>,
    pub symbols: Vec<String>,
}

fn trace_of(cls: &Classification, symbols: Vec<String>) -> RouteTrace {
    RouteTrace {
        shape: cls.fiber.kind.name().to_string(),
        omega: cls.omega.name().to_string(),
        n: cls.ram.n,
        r: cls.ram.r,
        q: cls.ram.q,
        d: cls.ram.d,
        degrees: cls.degrees.map(|d| d.all_degrees()).unwrap_or_default(),
        symbols,
    }
}

/// Result of comparing the two routes on one sample.
#[derive(Debug, Clone, Serialize)]
pub struct VerifySample {
    pub prime: u64,
    pub coefficients: Vec<String>,
    pub d: String,
    pub outcome: SampleOutcome,
}

#[derive(Debug, Clone, Serialize)]
pub enum SampleOutcome {
    /// Both routes classified; `agree` compares the symbol sets (singletons
    /// except on the flag-dependent rows, where the unordered candidate
    /// pair is compared).
    Compared {
        agree: bool,
        shape: String,
        predicted: Vec<String>,
        direct: Vec<String>,
        remark_pair: bool,
        trace_a: Box<RouteTrace>,
        trace_b: Box<RouteTrace>,
    },
    /// Exactly one route classified.
    RouteMismatch { classified: &'static str, error: String },
    /// Neither route classified (wild regime, degenerate input, ...).
    Skipped { stage: String },
}

/// Route A (table prediction) vs route B (direct classification of D·P).
pub fn cross_check(form: &SexticForm, d: &Rat, ctx: &LocalContext) -> VerifySample {
    let coeffs = form.coeffs().iter().map(|c| c.to_string()).collect();
    let d_str = d.to_string();

    let route_a = predict_symbols(form, d, ctx);
    let twisted = form.scale(d);
    let route_b = direct_symbols(&twisted, ctx);

    let outcome = match (route_a, route_b) {
        (Ok((pa, ta, rem_a)), Ok((pb, tb, rem_b))) => {
            let sa: BTreeSet<String> = pa.iter().cloned().collect();
            let sb: BTreeSet<String> = pb.iter().cloned().collect();
            SampleOutcome::Compared {
                agree: sa == sb,
                shape: ta.shape.clone(),
                predicted: pa,
                direct: pb,
                remark_pair: rem_a || rem_b,
                trace_a: Box::new(ta),
                trace_b: Box::new(tb),
            }
        }
        (Ok(_), Err(e)) => SampleOutcome::RouteMismatch {
            classified: "table-prediction",
            error: e.to_string(),
        },
        (Err(e), Ok(_)) => SampleOutcome::RouteMismatch {
            classified: "direct",
            error: e.to_string(),
        },
        (Err(e), Err(_)) => SampleOutcome::Skipped {
            stage: e.to_string(),
        },
    };
    VerifySample {
        prime: ctx.prime(),
        coefficients: coeffs,
        d: d_str,
        outcome,
    }
}

type RouteResult = Result<(Vec<String>, RouteTrace, bool), Error>;

fn predict_symbols(form: &SexticForm, d: &Rat, ctx: &LocalContext) -> RouteResult {
    match run_twist(&TwistQuery::new(form.clone(), d.clone(), *ctx)) {
        Ok(report) => {
            let ram = report.ram.clone().unwrap_or(RamData {
                n: 0,
                r: 0,
                q: None,
                d_k: None,
                r_k: None,
                d: None,
                j2_parity: None,
            });
            Ok((
                vec![report.type_x_chi.to_string()],
                RouteTrace {
                    shape: report.shape.name().to_string(),
                    omega: report.omega.map(|o| o.name()).unwrap_or("-").to_string(),
                    n: ram.n,
                    r: ram.r,
                    q: ram.q,
                    d: ram.d,
                    degrees: report.degrees.map(|d| d.all_degrees()).unwrap_or_default(),
                    symbols: vec![report.type_x.to_string(), report.type_x_chi.to_string()],
                },
                false,
            ))
        }
        Err(Error::RemarkFlagRequired) => {
            let mut symbols = Vec::new();
            let mut trace = None;
            for flag in [true, false] {
                let mut q = TwistQuery::new(form.clone(), d.clone(), *ctx);
                q.e1_smooth = Some(flag);
                let report = run_twist(&q)?;
                symbols.push(report.type_x_chi.to_string());
                if trace.is_none() {
                    let ram = report.ram.clone().unwrap();
                    trace = Some(RouteTrace {
                        shape: report.shape.name().to_string(),
                        omega: report.omega.map(|o| o.name()).unwrap_or("-").to_string(),
                        n: ram.n,
                        r: ram.r,
                        q: ram.q,
                        d: ram.d,
                        degrees: report.degrees.map(|d| d.all_degrees()).unwrap_or_default(),
                        symbols: Vec::new(),
                    });
                }
            }
            Ok((symbols, trace.unwrap(), true))
        }
        Err(e) => Err(e),
    }
}

fn direct_symbols(twisted: &SexticForm, ctx: &LocalContext) -> RouteResult {
    match classify_curve(twisted, ctx, None) {
        Ok(cls) => {
            let symbol = cls.type_x.to_string();
            Ok((vec![symbol.clone()], trace_of(&cls, vec![symbol]), false))
        }
        Err(Error::RemarkFlagRequired) => {
            let mut symbols = Vec::new();
            let mut trace = None;
            for flag in [true, false] {
                let cls = classify_curve(twisted, ctx, Some(flag))?;
                symbols.push(cls.type_x.to_string());
                if trace.is_none() {
                    trace = Some(trace_of(&cls, Vec::new()));
                }
            }
            Ok((symbols, trace.unwrap(), true))
        }
        Err(e) => Err(e),
    }
}

/// Seeded generator of curves biased toward non-smooth stable reduction:
/// cluster-picture root patterns mixed with plain random coefficients,
/// random unit or p-divisible leading scalings, and occasional shifts and
/// reversals to move ω relative to the clusters.
pub struct CurveGenerator {
    rng: ChaCha8Rng,
    p: u64,
}

impl CurveGenerator {
    pub fn new(seed: u64, p: u64) -> Self {
        CurveGenerator {
            rng: ChaCha8Rng::seed_from_u64(seed ^ (p << 32)),
            p,
        }
    }

    pub fn next_form(&mut self) -> SexticForm {
        loop {
            if let Some(form) = self.try_form() {
                if !crate::invariants::compute_invariants(&form).j10.is_zero() {
                    return form;
                }
            }
        }
    }

    fn try_form(&mut self) -> Option<SexticForm> {
        let p = self.p as i64;
        let rng = &mut self.rng;
        let q = |n: i64| Rat::from(BigInt::from(n));

        if rng.gen_ratio(1, 5) {
            // plain random coefficients; occasionally degree 5
            let mut a = [0i64; 7];
            for slot in a.iter_mut() {
                *slot = rng.gen_range(-15..=15);
            }
            if rng.gen_ratio(1, 8) {
                a[0] = 0;
                if a[1] == 0 {
                    a[1] = 1;
                }
            } else if a[0] == 0 {
                a[0] = 1;
            }
            return SexticForm::new(a.map(q)).ok();
        }

        // cluster-picture construction over base points distinct mod p
        let mut base = [0i64, 1, 2, 3, 4, 5];
        for i in (1..base.len()).rev() {
            let j = rng.gen_range(0..=i);
            base.swap(i, j);
        }
        let unit = |rng: &mut ChaCha8Rng| rng.gen_range(1..p.min(7));
        let depth = |rng: &mut ChaCha8Rng| {
            if rng.gen_ratio(1, 4) {
                2u32
            } else {
                1
            }
        };
        let pd = |d: u32| p.checked_pow(d).unwrap_or(p);

        let template = rng.gen_range(0..7u32);
        let b = base;
        let mut roots: [i64; 6] = match template {
            // one collision
            0 => [b[0], b[0] + unit(rng) * pd(depth(rng)), b[1], b[2], b[3], b[4]],
            // two equal-depth collisions
            1 => {
                let d1 = depth(rng);
                [
                    b[0],
                    b[0] + unit(rng) * pd(d1),
                    b[1],
                    b[1] + unit(rng) * pd(d1),
                    b[2],
                    b[3],
                ]
            }
            // two collisions, mixed depths
            2 => [
                b[0],
                b[0] + unit(rng) * pd(1),
                b[1],
                b[1] + unit(rng) * pd(2),
                b[2],
                b[3],
            ],
            // three collisions
            3 => {
                let d1 = depth(rng);
                [
                    b[0],
                    b[0] + unit(rng) * pd(d1),
                    b[1],
                    b[1] + unit(rng) * pd(d1),
                    b[2],
                    b[2] + unit(rng) * pd(d1),
                ]
            }
            // two triples (two smooth components)
            4 => {
                let d1 = depth(rng);
                let (u1, u2) = distinct_units(rng, p);
                let (u3, u4) = distinct_units(rng, p);
                [
                    b[0],
                    b[0] + u1 * pd(d1),
                    b[0] + u2 * pd(d1),
                    b[1],
                    b[1] + u3 * pd(d1),
                    b[1] + u4 * pd(d1),
                ]
            }
            // triple plus triple-with-subcluster (one smooth component)
            5 => {
                let (u1, u2) = distinct_units(rng, p);
                let u3 = unit(rng);
                [
                    b[0],
                    b[0] + u1 * p,
                    b[0] + u2 * p,
                    b[1],
                    b[1] + u3 * p,
                    b[1] + u3 * p + pd(2 + depth(rng)),
                ]
            }
            // both triples with subclusters (two singular components)
            _ => {
                let u1 = unit(rng);
                let u3 = unit(rng);
                [
                    b[0],
                    b[0] + u1 * p,
                    b[0] + u1 * p + pd(2),
                    b[1],
                    b[1] + u3 * p,
                    b[1] + u3 * p + pd(2 + depth(rng) - 1),
                ]
            }
        };
        if roots.iter().collect::<std::collections::HashSet<_>>().len() != 6 {
            roots[5] += p * p * p;
        }

        let a0 = match rng.gen_range(0..8u32) {
            0 => q(2),
            1 => q(3),
            2 => q(p),
            3 => q(2 * p),
            4 => q(p * p),
            _ => q(1),
        };
        let mut form = SexticForm::from_roots(a0, &roots.map(q));

        if rng.gen_ratio(1, 2) {
            // move a nearby point to infinity to vary the ω-status
            for _ in 0..8 {
                let s = rng.gen_range(-2..=7i64);
                let shifted = form.shifted(&q(s));
                if !shifted.coeff(6).is_zero() {
                    form = shifted.reversed();
                    break;
                }
            }
        }
        Some(form)
    }
}

fn distinct_units(rng: &mut ChaCha8Rng, p: i64) -> (i64, i64) {
    let hi = p.min(7);
    let u1 = rng.gen_range(1..hi);
    let mut u2 = rng.gen_range(1..hi);
    if u1 == u2 {
        u2 = if u2 + 1 < hi { u2 + 1 } else { 1.max(u2 - 1) };
    }
    if u1 == u2 {
        (1, 2.min(hi - 1).max(1))
    } else {
        (u1, u2)
    }
}

/// Aggregate of one verification sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub seed: u64,
    pub total: usize,
    pub compared: usize,
    pub agreed: usize,
    pub disagreed: usize,
    pub route_mismatch: usize,
    pub skipped: usize,
    pub non_smooth_compared: usize,
    pub shape_counts: Vec<(String, usize)>,
    pub disagreements: Vec<VerifySample>,
}

impl SweepReport {
    pub fn agreement_is_total(&self) -> bool {
        self.disagreed == 0
    }

    /// Fraction of compared samples with non-smooth stable reduction.
    pub fn non_smooth_fraction(&self) -> f64 {
        if self.compared == 0 {
            0.0
        } else {
            self.non_smooth_compared as f64 / self.compared as f64
        }
    }
}

/// Run `samples` cross-checks per prime with twist scalar D = p^d_exp.
pub fn sweep(seed: u64, samples: usize, primes: &[u64], d_exp: u32) -> SweepReport {
    let mut report = SweepReport {
        seed,
        total: 0,
        compared: 0,
        agreed: 0,
        disagreed: 0,
        route_mismatch: 0,
        skipped: 0,
        non_smooth_compared: 0,
        shape_counts: Vec::new(),
        disagreements: Vec::new(),
    };
    let mut shape_counts: std::collections::BTreeMap<String, usize> = Default::default();
    for &p in primes {
        let ctx = LocalContext::new(p).expect("odd prime");
        let mut gen = CurveGenerator::new(seed, p);
        let d = Rat::from(BigInt::from(p)).pow(d_exp as i32);
        for _ in 0..samples {
            let form = gen.next_form();
            let sample = cross_check(&form, &d, &ctx);
            report.total += 1;
            match &sample.outcome {
                SampleOutcome::Compared { agree, shape, .. } => {
                    report.compared += 1;
                    *shape_counts.entry(shape.clone()).or_default() += 1;
                    if shape != StableFiberKind::Smooth.name() {
                        report.non_smooth_compared += 1;
                    }
                    if *agree {
                        report.agreed += 1;
                    } else {
                        report.disagreed += 1;
                        report.disagreements.push(sample);
                    }
                }
                SampleOutcome::RouteMismatch { .. } => report.route_mismatch += 1,
                SampleOutcome::Skipped { .. } => report.skipped += 1,
            }
        }
    }
    report.shape_counts = shape_counts.into_iter().collect();
    report
}

fn shape_and_regime(table: &str) -> (StableFiberKind, Regime) {
    match table {
        "smooth" => (StableFiberKind::Smooth, Regime::Smooth),
        "one-node" => (StableFiberKind::IrreducibleOneNode, Regime::IrreducibleSingular),
        "two-nodes" => (StableFiberKind::IrreducibleTwoNodes, Regime::IrreducibleSingular),
        "three-nodes" => (
            StableFiberKind::TwoRationalThreeNodes,
            Regime::IrreducibleSingular,
        ),
        "two-elliptic-even" | "two-elliptic-odd" => {
            (StableFiberKind::TwoSmoothOneNode, Regime::NotIrreducible)
        }
        "two-rational" => (StableFiberKind::TwoSingularOneNode, Regime::NotIrreducible),
        "one-elliptic" => (StableFiberKind::OneSmoothOneSingular, Regime::NotIrreducible),
        _ => unreachable!(),
    }
}

/// Realizable ramification data for one regime: every (n, r, q, d) a row
/// can legitimately see, enumerated from the defining valuations of the
/// propositions rather than from bare residues (the denominators of r/n and
/// q/n are constrained by which valuation each is divided by).
fn ram_candidates(table: &str) -> Vec<(RamData, OmegaStatus)> {
    let mut out = Vec::new();
    let rd = |rho: Frac, sigma: Frac| -> Option<RamData> {
        let n = crate::valuation::lcd(&[rho, sigma]).ok()?;
        let r = (rho * Frac::from(n as i64)).to_integer().rem_euclid(n as i64) as u32;
        let q = (sigma * Frac::from(n as i64)).to_integer().rem_euclid(n as i64) as u32;
        Some(RamData {
            n,
            r,
            q: Some(q),
            d_k: None,
            r_k: None,
            d: None,
            j2_parity: None,
        })
    };
    match table {
        "smooth" => {
            // non-ramified: u1 = 10·ν(a0) − ν(J10), u2 = 5·ν(a0) − ν(J10)
            for a in 0..6i64 {
                for w in 0..30i64 {
                    if let Some(ram) = rd(Frac::new(10 * a - w, 30), Frac::new(5 * a - w, 10)) {
                        out.push((ram, OmegaStatus::NonRamified));
                    }
                }
            }
            // ramified: v1 = ν(J10) − 2·ν(A5), v2 = 5·ν(J10) − 6·ν(A5)
            for al in 0..20i64 {
                for w in 0..40i64 {
                    if let Some(ram) = rd(Frac::new(w - 2 * al, 20), Frac::new(5 * w - 6 * al, 40))
                    {
                        out.push((ram, OmegaStatus::RamifiedRegularPreimage));
                    }
                }
            }
        }
        "one-node" | "two-nodes" | "three-nodes" => {
            // ν(J12) is free for I12, a multiple of 3 for I4³ and of 6 for
            // J2⁶; the three ω-status families correlate the two defining
            // valuations through ν(a0), ν(A5), ν(B2)
            let step = match table {
                "three-nodes" => 6usize,
                "two-nodes" => 3,
                _ => 1,
            };
            for w in (0..36i64).step_by(step) {
                // (a): u1 = 12·ν(a0) − w, u2 = 6·ν(a0) − w
                for a in 0..6i64 {
                    if let Some(ram) = rd(Frac::new(12 * a - w, 36), Frac::new(6 * a - w, 12)) {
                        out.push((ram, OmegaStatus::NonRamified));
                    }
                }
                // (b): σ = (36·ν(A5) − 25·w)/240, q = nσ, r = −2q
                for al in 0..20i64 {
                    let sigma = Frac::new(36 * al - 25 * w, 240);
                    if let Ok(n) = crate::valuation::lcd(&[sigma]) {
                        let q = (sigma * Frac::from(n as i64))
                            .to_integer()
                            .rem_euclid(n as i64) as u32;
                        let r = (-2 * (q as i64)).rem_euclid(n as i64) as u32;
                        out.push((
                            RamData {
                                n,
                                r,
                                q: Some(q),
                                d_k: None,
                                r_k: None,
                                d: None,
                                j2_parity: None,
                            },
                            OmegaStatus::RamifiedRegularPreimage,
                        ));
                    }
                }
                // (c): u1 = w − 6·ν(B2), u2 = w − 9·ν(B2)
                for b in 0..8i64 {
                    if let Some(ram) = rd(Frac::new(w - 6 * b, 12), Frac::new(w - 9 * b, 12)) {
                        out.push((ram, OmegaStatus::RamifiedSingularPreimage));
                    }
                }
            }
        }
        "two-elliptic-even" | "two-rational" | "one-elliptic" => {
            even_two_component(&mut out);
            if table == "two-rational" {
                odd_two_component(&mut out);
            }
        }
        "two-elliptic-odd" => odd_two_component(&mut out),
        _ => unreachable!(),
    }
    out
}

/// Even-ν(J2) two-component data: d_K with denominator dividing 12 (4 for
/// two singular components, a subset); σ with denominator dividing 24
/// covers the four ω-status sources (6, 8, 4, and the r_K denominators).
fn even_two_component(out: &mut Vec<(RamData, OmegaStatus)>) {
    for m in 1..=48i64 {
        let d_k = Frac::new(m, 12);
        for k in 0..48i64 {
            let sigma = Frac::new(k, 24);
            let Ok(n) = crate::valuation::lcd(&[d_k, sigma]) else {
                continue;
            };
            let r = (sigma * Frac::from(n as i64))
                .to_integer()
                .rem_euclid(n as i64) as u32;
            let d = (d_k * Frac::from(n as i64)).to_integer();
            out.push((
                RamData {
                    n,
                    r,
                    q: None,
                    d_k: Some(d_k),
                    r_k: None,
                    d: Some(d),
                    j2_parity: Some(Parity::Even),
                },
                OmegaStatus::NonRamified,
            ));
        }
    }
}

/// Odd-ν(J2) two-component data: n = 2m with m the least denominator of
/// d_K (m = 1 allowed: d_K integral), r = m·d_K mod n, d = n·d_K.
fn odd_two_component(out: &mut Vec<(RamData, OmegaStatus)>) {
    for m in 1..=48i64 {
        let d_k = Frac::new(m, 12);
        let den = *d_k.denom();
        let n = (2 * den) as u32;
        let r = (d_k * Frac::from(den)).to_integer().rem_euclid(n as i64) as u32;
        let d = (d_k * Frac::from(n as i64)).to_integer();
        out.push((
            RamData {
                n,
                r,
                q: None,
                d_k: Some(d_k),
                r_k: None,
                d: Some(d),
                j2_parity: Some(Parity::Odd),
            },
            OmegaStatus::NonRamified,
        ));
    }
}

fn degree_choices(shape: StableFiberKind, d: Option<i64>) -> Vec<Option<SingularityDegrees>> {
    let ds: Vec<i64> = (1..=24).collect();
    match shape {
        StableFiberKind::Smooth => vec![None],
        StableFiberKind::IrreducibleOneNode => ds
            .iter()
            .map(|&e| Some(SingularityDegrees::OneNode { e }))
            .collect(),
        StableFiberKind::IrreducibleTwoNodes => {
            let mut out = Vec::new();
            for e1 in [1i64, 2, 3, 4, 6, 8, 12] {
                for e2 in [e1, e1 * 2, e1 + 2, e1 + 6] {
                    out.push(Some(SingularityDegrees::TwoNodes {
                        e1,
                        e2: e2.max(e1),
                    }));
                }
            }
            out
        }
        StableFiberKind::TwoRationalThreeNodes => {
            let mut out = Vec::new();
            for e1 in [1i64, 2, 3, 4, 6, 12] {
                out.push(Some(SingularityDegrees::ThreeNodes {
                    e1,
                    e2: e1,
                    e3: e1,
                }));
                out.push(Some(SingularityDegrees::ThreeNodes {
                    e1,
                    e2: e1,
                    e3: e1 + 4,
                }));
                out.push(Some(SingularityDegrees::ThreeNodes {
                    e1,
                    e2: e1 + 2,
                    e3: e1 + 4,
                }));
            }
            out
        }
        // the intersection degree is d itself
        StableFiberKind::TwoSmoothOneNode => {
            vec![Some(SingularityDegrees::Intersection { e: d.unwrap_or(1) })]
        }
        StableFiberKind::OneSmoothOneSingular => [1i64, 2, 3, 4, 6, 8, 12]
            .iter()
            .map(|&e1| {
                Some(SingularityDegrees::SmoothPlusSingular {
                    e0: d.unwrap_or(1),
                    e1,
                })
            })
            .collect(),
        StableFiberKind::TwoSingularOneNode => [1i64, 2, 3, 4, 6, 8, 12]
            .iter()
            .flat_map(|&e1| {
                [
                    Some(SingularityDegrees::TwoSingular {
                        e0: d.unwrap_or(1),
                        e1,
                        e2: e1,
                    }),
                    Some(SingularityDegrees::TwoSingular {
                        e0: d.unwrap_or(1),
                        e1,
                        e2: e1 + 2,
                    }),
                ]
            })
            .collect(),
    }
}

/// Concrete samples satisfying one row, built from realizable data and
/// filtered to those the row's templates (and the degree rescaling) accept.
fn row_samples(table: &str, row: &tables::Row) -> Vec<LookupInput> {
    let (shape, regime) = shape_and_regime(table);
    let flags: &[Option<bool>] = if table == "one-elliptic" {
        &[Some(true), Some(false)]
    } else {
        &[None]
    };
    let mut out = Vec::new();
    for (ram, omega) in ram_candidates(table) {
        if ram.n != row.n {
            continue;
        }
        for &flag in flags {
            for degrees in degree_choices(shape, ram.d) {
                let input = LookupInput {
                    shape,
                    ram: ram.clone(),
                    degrees,
                    e1_smooth: flag,
                    q_remark: Some(4),
                    omega,
                };
                let Ok(matched) = tables::find_row(&input) else {
                    continue;
                };
                if !std::ptr::eq(matched, row) {
                    continue;
                }
                // skip synthesis artifacts: degree shapes or divisibility
                // the row rejects, and degree tuples no real curve with
                // this (n, n') could carry
                if let Some(deg) = &input.degrees {
                    if row.check_deg_shape(&deg.component_degrees()).is_err() {
                        continue;
                    }
                }
                if tables::reduction_type_of_twist(&input).is_err() {
                    continue;
                }
                let Ok(ram_t) = twist_ram_data(&input.ram, regime) else {
                    continue;
                };
                if let Some(deg) = &input.degrees {
                    if deg.rescale(input.ram.n, ram_t.n).is_err() {
                        continue;
                    }
                }
                out.push(input);
                if out.len() >= 400 {
                    return out;
                }
            }
        }
    }
    out
}

/// Apply the twist transform to every encoded row and check the pair
/// returns to its start; returns human-readable violations (empty when the
/// tables are involutive).
pub fn table_involution_audit() -> Vec<String> {
    let mut violations = Vec::new();
    for (table, rows) in tables::all_tables() {
        let (_, regime) = shape_and_regime(table);
        for (idx, row) in rows.iter().enumerate() {
            let samples = row_samples(table, row);
            if samples.is_empty() {
                violations.push(format!("{table} row {idx}: no valid sample found"));
                continue;
            }
            for input in samples {
                match involution_step(&input, regime) {
                    Ok(()) => {}
                    Err(msg) => {
                        violations.push(format!("{table} row {idx}: {msg}"));
                        break;
                    }
                }
            }
        }
    }
    // the wild tables
    violations.extend(wild_involution_violations());
    violations
}

fn involution_step(input: &LookupInput, regime: Regime) -> Result<(), String> {
    let (x, chi) =
        tables::reduction_type_of_twist(input).map_err(|e| format!("lookup failed: {e}"))?;
    let ram_t = twist_ram_data(&input.ram, regime).map_err(|e| format!("transform: {e}"))?;
    let degrees_t = match &input.degrees {
        Some(deg) => Some(
            deg.rescale(input.ram.n, ram_t.n)
                .map_err(|e| format!("rescale: {e}"))?,
        ),
        None => None,
    };
    let twisted_input = LookupInput {
        shape: input.shape,
        ram: ram_t.clone(),
        degrees: degrees_t,
        e1_smooth: input.e1_smooth,
        q_remark: input.q_remark,
        omega: input.omega,
    };
    let (x2, chi2) = tables::reduction_type_of_twist(&twisted_input)
        .map_err(|e| format!("twisted lookup failed ({:?} -> n'={}): {e}", input.ram, ram_t.n))?;
    if x2 != chi {
        return Err(format!(
            "twisted row X = {x2} but original χ-column said {chi}"
        ));
    }
    if chi2 != x {
        return Err(format!(
            "twisted χ-column = {chi2} does not return to {x}"
        ));
    }
    Ok(())
}

fn wild_involution_violations() -> Vec<String> {
    let mut out = Vec::new();
    // char 5: the eight-symbol table must be an involution
    let table = char5_twist_table();
    for (x, chi) in &table {
        let Some(back) = table.iter().find(|(from, _)| from == chi) else {
            out.push(format!("char-5 table: {chi} has no row"));
            continue;
        };
        if &back.1 != x {
            out.push(format!("char-5 table: {x} -> {chi} -> {} (not {x})", back.1));
        }
    }
    // char 3: [III_N] <-> [III*_N]
    let ctx = LocalContext::new(3).unwrap();
    let q = |n: i64| Rat::from(BigInt::from(n));
    let cs = [q(1), q(1), q(3), q(3), q(9), q(9)];
    let x = tables::wild_char3_type(&q(1), &cs, None, &ctx).unwrap();
    let chi = tables::wild_char3_type(&q(1), &cs, Some(&q(3)), &ctx).unwrap();
    let back = tables::wild_char3_type(&q(3), &cs, Some(&q(3)), &ctx).unwrap();
    if x == chi {
        out.push("char-3 swap: twist did not change the type".into());
    }
    if back != x {
        out.push(format!("char-3 swap: {x} -> {chi} -> {back}"));
    }
    out
}

/// Exhaustive disjointness check: within each regime no two row predicates
/// match the same key.
pub fn row_disjointness_audit() -> Vec<String> {
    let mut violations = Vec::new();
    for (table, rows) in tables::all_tables() {
        let ns: BTreeSet<u32> = rows.iter().map(|r| r.n).collect();
        for &n in &ns {
            for r in 0..n {
                for q in 0..n {
                    for d_res in 0..n {
                        for omega in [
                            OmegaStatus::NonRamified,
                            OmegaStatus::RamifiedRegularPreimage,
                            OmegaStatus::RamifiedSingularPreimage,
                            OmegaStatus::OmegaSingular,
                        ] {
                            for parity in [Parity::Even, Parity::Odd] {
                                for remark_first in [true, false] {
                                    let key = tables::MatchKey {
                                        n,
                                        r,
                                        q: Some(q),
                                        d_mod: Some(d_res),
                                        parity: Some(parity),
                                        omega,
                                        remark_first: Some(remark_first),
                                    };
                                    let hits: Vec<usize> = rows
                                        .iter()
                                        .enumerate()
                                        .filter(|(_, row)|

                                            row.matches_key(&key)
                                                && remark_compatible(row, remark_first)
                                        )
                                        .map(|(i, _)| i)
                                        .collect();
                                    if hits.len() > 1 {
                                        violations.push(format!(
                                            "{table}: rows {hits:?} all match n={n} r={r} q={q} d={d_res} ω={} parity={parity:?} first={remark_first}",
                                            omega.name(),
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    violations
}

fn remark_compatible(row: &tables::Row, first: bool) -> bool {
    match row.remark {
        tables::RemarkSel::Any => true,
        tables::RemarkSel::First => first,
        tables::RemarkSel::Second => !first,
    }
}

/// The characteristic-5 wild table must agree with the smooth-regime
/// n = 5 / n = 10 rows as a map on {VIII-m, IX-m}.
pub fn wild_tame_concordance_char5() -> Vec<String> {
    let mut tame_map: Vec<(ReductionSymbol, ReductionSymbol)> = Vec::new();
    for row in tables::SMOOTH_ROWS.iter() {
        if row.n == 5 || row.n == 10 {
            let vars_input = LookupInput {
                shape: StableFiberKind::Smooth,
                ram: RamData {
                    n: row.n,
                    r: first_residue(row),
                    q: Some(0),
                    d_k: None,
                    r_k: None,
                    d: None,
                    j2_parity: None,
                },
                degrees: None,
                e1_smooth: None,
                q_remark: None,
                omega: OmegaStatus::NonRamified,
            };
            if let Ok((x, chi)) = tables::reduction_type_of_twist(&vars_input) {
                tame_map.push((x, chi));
            }
        }
    }
    let mut violations = Vec::new();
    let wild = char5_twist_table();
    if tame_map.len() != wild.len() {
        violations.push(format!(
            "tame rows ({}) and wild table ({}) have different sizes",
            tame_map.len(),
            wild.len()
        ));
    }
    for (x, chi) in &wild {
        match tame_map.iter().find(|(tx, _)| tx == x) {
            None => violations.push(format!("no tame row for {x}")),
            Some((_, tame_chi)) if tame_chi != chi => {
                violations.push(format!("{x}: tame gives {tame_chi}, wild gives {chi}"))
            }
            _ => {}
        }
    }
    violations
}

fn first_residue(row: &tables::Row) -> u32 {
    // the n=5/10 smooth rows carry a single r residue
    for r in 0..row.n {
        let key = tables::MatchKey {
            n: row.n,
            r,
            q: Some(0),
            d_mod: None,
            parity: None,
            omega: OmegaStatus::NonRamified,
            remark_first: None,
        };
        if row.matches_key(&key) {
            return r;
        }
    }
    0
}
