//! The twist pipeline: parity normalization of D, twisted invariants and
//! ramification data per the transformation lemmas, stable-shape transfer,
//! and the final table lookup.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{compute_invariants, select_j12, InvariantSet, J12Selector, SexticForm};
use crate::ramification::{
    normalize_model, omega_status, ram_data_irreducible_singular, ram_data_not_irreducible,
    ram_data_smooth, rational_branch_points, ModelChange, OmegaStatus, Parity, RamData, Regime,
};
use crate::stable::{
    classify_stable, regime_tame, singularity_degrees, special_fiber_tests, SingularityDegrees,
    SpecialFiberTests, StableFiberKind, StableFiberType,
};
use crate::tables::{
    reduction_type_of_twist, reduction_type_of_x, wild_char3_type, wild_char5_type, LookupInput,
    ReductionSymbol,
};
use crate::valuation::{lcd, ExtValuation, LocalContext};
use crate::{Frac, Rat};

/// Parity class of the twisting scalar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TwistParity {
    /// ν(D) even: the twist is by an unramified extension and the minimal
    /// regular models are isomorphic.
    Trivial,
    /// ν(D) odd: the ramified case the tables cover.
    Ramified,
}

/// Classify D by the parity of its valuation.  Returns the parity and D
/// itself (the representative used downstream; only ν(D) mod 2 matters).
pub fn twist_parity(d: &Rat, ctx: &LocalContext) -> Result<(TwistParity, Rat)> {
    if d.is_zero() {
        return Err(Error::InvalidInput("twist by D = 0".into()));
    }
    let v = ctx.val(d).finite().expect("nonzero rational");
    let parity = if v.rem_euclid(2) == 0 {
        TwistParity::Trivial
    } else {
        TwistParity::Ramified
    };
    Ok((parity, d.clone()))
}

/// The stable-fiber shape of the twist: the case tag is preserved.
pub fn twist_stable_shape(shape: &StableFiberType) -> StableFiberType {
    shape.clone()
}

/// Transform (n, r, q, d) to the twisted curve's (n′, r′, q′, d′) per the
/// regime's lemma.  Only the congruence data enters: the lemmas shift the
/// defining rationals by half-integers, which depends on (r/n, q/n, d_K)
/// alone.
pub fn twist_ram_data(ram: &RamData, regime: Regime) -> Result<RamData> {
    let n = ram.n as i64;
    match regime {
        Regime::Smooth | Regime::IrreducibleSingular => {
            let q = ram
                .q
                .ok_or(Error::DegenerateInvariant("q (required for this regime)"))? as i64;
            let rho = Frac::new(ram.r as i64, n);
            let sigma_shifted = Frac::new(q, n) - Frac::new(1, 2);
            let n_prime = lcd(&[rho, sigma_shifted])?;
            let r_prime = reduce(rho * Frac::from(n_prime as i64), n_prime)?;
            let q_prime = reduce(sigma_shifted * Frac::from(n_prime as i64), n_prime)?;
            Ok(RamData {
                n: n_prime,
                r: r_prime,
                q: Some(q_prime),
                d_k: None,
                r_k: None,
                d: None,
                j2_parity: None,
            })
        }
        Regime::NotIrreducible => {
            let d_k = ram
                .d_k
                .ok_or(Error::DegenerateInvariant("d_K (two-component regime)"))?;
            match ram.j2_parity {
                Some(Parity::Even) => {
                    let sigma_shifted = Frac::new(ram.r as i64, n) + Frac::new(1, 2);
                    let n_prime = lcd(&[d_k, sigma_shifted])?;
                    let r_prime = reduce(sigma_shifted * Frac::from(n_prime as i64), n_prime)?;
                    let d_prime = (d_k * Frac::from(n_prime as i64)).to_integer();
                    Ok(RamData {
                        n: n_prime,
                        r: r_prime,
                        q: None,
                        d_k: Some(d_k),
                        r_k: ram.r_k.map(|r_k| r_k + Frac::new(1, 2)),
                        d: Some(d_prime),
                        j2_parity: Some(Parity::Even),
                    })
                }
                Some(Parity::Odd) => Ok(RamData {
                    r_k: ram.r_k.map(|r_k| r_k + Frac::new(1, 2)),
                    ..ram.clone()
                }),
                None => Err(Error::DegenerateInvariant("ν(J2) parity")),
            }
        }
    }
}

fn reduce(value: Frac, n: u32) -> Result<u32> {
    if *value.denom() != 1 {
        return Err(Error::NonIntegralDegree("twisted residue", value.to_string()));
    }
    Ok(value.numer().rem_euclid(n as i64) as u32)
}

/// Wild characteristic-3 normal form `z² = a0·Q(u)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Char3NormalForm {
    pub a0: Rat,
    /// c1..c6 of `Q = (u³+c1u²+c2u+c3)² + c4u²+c5u+c6`.
    pub c: [Rat; 6],
}

/// Wild characteristic-5 normal form `z² = b0u⁶+…+b6`.
#[derive(Debug, Clone, PartialEq)]
pub struct Char5NormalForm {
    pub b: [Rat; 7],
}

/// One twist query: the curve, the scalar, and the optional extras some
/// corners of the tables need.
#[derive(Debug, Clone)]
pub struct TwistQuery {
    pub curve: SexticForm,
    pub d: Rat,
    pub ctx: LocalContext,
    /// Smoothness of the component E1 (ω̄ side), for the
    /// one-elliptic-one-rational n = 2, d odd rows.
    pub e1_smooth: Option<bool>,
    pub wild_char3: Option<Char3NormalForm>,
    pub wild_char5: Option<Char5NormalForm>,
}

impl TwistQuery {
    pub fn new(curve: SexticForm, d: Rat, ctx: LocalContext) -> Self {
        TwistQuery {
            curve,
            d,
            ctx,
            e1_smooth: None,
            wild_char3: None,
            wild_char5: None,
        }
    }
}

/// Everything the classification pipeline derives for one curve.
#[derive(Debug, Clone)]
pub struct Classification {
    pub invariants: InvariantSet,
    pub fiber: StableFiberType,
    pub model_change: ModelChange,
    pub tests: Option<SpecialFiberTests>,
    pub two_rational_branch_points: bool,
    pub tame: bool,
    pub omega: OmegaStatus,
    pub j12: Option<J12Selector>,
    pub ram: RamData,
    pub degrees: Option<SingularityDegrees>,
    pub q_remark: Option<i64>,
    pub type_x: ReductionSymbol,
}

struct PipelineCore {
    normalized: SexticForm,
    change: ModelChange,
    inv: InvariantSet,
    inv_norm: InvariantSet,
    fiber: StableFiberType,
    tests: Option<SpecialFiberTests>,
    two_rbp: bool,
    omega: OmegaStatus,
    j12: Option<J12Selector>,
    tame: bool,
}

fn pipeline_core(form: &SexticForm, ctx: &LocalContext) -> Result<PipelineCore> {
    let inv = compute_invariants(form);
    if inv.j10.is_zero() {
        return Err(Error::InvalidInput(
            "J10 = 0: P has a repeated root (degenerate curve)".into(),
        ));
    }
    let fiber = classify_stable(&inv, ctx)?;
    let shape = fiber.kind;
    if shape.is_two_component() && ctx.prime() == 3 {
        return Err(Error::Char3TwoComponent);
    }
    let (normalized, change) = normalize_model(form, ctx)?;
    let inv_norm = if change.is_identity() {
        inv.clone()
    } else {
        compute_invariants(&normalized)
    };
    let regime = Regime::of(shape);
    let j12 = match regime {
        Regime::IrreducibleSingular => Some(select_j12(&inv_norm, shape)?),
        _ => None,
    };
    let j12_val = j12.as_ref().map(|s| ctx.val(&s.value));
    let omega = omega_status(&inv_norm, &normalized, ctx, regime, j12_val)?;
    let tests = match ctx.prime() {
        3 | 5 => Some(special_fiber_tests(&inv, ctx)?),
        _ => None,
    };
    let two_rbp = rational_branch_points(form) >= 2;
    let tame = regime_tame(shape, tests.as_ref(), Some(omega), two_rbp, ctx)?;
    Ok(PipelineCore {
        normalized,
        change,
        inv,
        inv_norm,
        fiber,
        tests,
        two_rbp,
        omega,
        j12,
        tame,
    })
}

fn q_remark_value(inv: &InvariantSet, ctx: &LocalContext) -> Option<i64> {
    if inv.i12.is_zero() {
        return None;
    }
    let q = &inv.j2 * &inv.j10 / &inv.i12;
    ctx.val(&q).finite()
}

/// Classify one curve end to end: invariants, stable shape, tameness,
/// ramification data, degrees, and the reduction type of its minimal
/// regular model.  Errors with `WildNormalFormRequired` on the wild cases.
pub fn classify_curve(
    form: &SexticForm,
    ctx: &LocalContext,
    e1_smooth: Option<bool>,
) -> Result<Classification> {
    let core = pipeline_core(form, ctx)?;
    if !core.tame {
        let needed = if ctx.prime() == 3 { "c1..c6" } else { "b0..b6" };
        return Err(Error::WildNormalFormRequired {
            p: ctx.prime(),
            needed,
        });
    }
    let shape = core.fiber.kind;
    let regime = Regime::of(shape);
    let ram = match regime {
        Regime::Smooth => ram_data_smooth(&core.inv_norm, &core.normalized, ctx, core.omega)?,
        Regime::IrreducibleSingular => {
            let j12 = core.j12.as_ref().expect("selector set for this regime");
            ram_data_irreducible_singular(
                &core.inv_norm,
                &core.normalized,
                ctx,
                ctx.val(&j12.value),
                core.omega,
            )?
        }
        Regime::NotIrreducible => {
            ram_data_not_irreducible(&core.inv_norm, &core.normalized, ctx, core.omega, shape)?
        }
    };
    let degrees = if shape == StableFiberKind::Smooth {
        None
    } else {
        Some(singularity_degrees(
            shape,
            &core.inv_norm,
            ExtValuation::new(ram.n),
            ctx,
        )?)
    };
    let q_remark = if shape == StableFiberKind::OneSmoothOneSingular {
        q_remark_value(&core.inv, ctx)
    } else {
        None
    };
    let input = LookupInput {
        shape,
        ram: ram.clone(),
        degrees,
        e1_smooth,
        q_remark,
        omega: core.omega,
    };
    let type_x = reduction_type_of_x(&input)?;
    Ok(Classification {
        invariants: core.inv,
        fiber: core.fiber,
        model_change: core.change,
        tests: core.tests,
        two_rational_branch_points: core.two_rbp,
        tame: core.tame,
        omega: core.omega,
        j12: core.j12,
        ram,
        degrees,
        q_remark,
        type_x,
    })
}

/// The full report of one twist computation.
#[derive(Debug, Clone)]
pub struct TwistReport {
    pub parity: TwistParity,
    pub shape: StableFiberKind,
    pub fiber: StableFiberType,
    pub tame: bool,
    pub wild: bool,
    pub model_change: ModelChange,
    pub omega: Option<OmegaStatus>,
    /// ω-status of the twisted curve (preserved by the lemmas).
    pub omega_twisted: Option<OmegaStatus>,
    pub ram: Option<RamData>,
    pub ram_twisted: Option<RamData>,
    pub degrees: Option<SingularityDegrees>,
    pub degrees_twisted: Option<SingularityDegrees>,
    pub type_x: ReductionSymbol,
    pub type_x_chi: ReductionSymbol,
}

/// Run the full twist pipeline.
///
/// Trivial parity (ν(D) even) short-circuits: the twisted type equals the
/// untwisted type verbatim.  The wild cases classify only when the matching
/// normal-form coefficients are supplied on the query.
pub fn run_twist(query: &TwistQuery) -> Result<TwistReport> {
    let ctx = &query.ctx;
    let (parity, d) = twist_parity(&query.d, ctx)?;

    if parity == TwistParity::Trivial {
        let cls = classify_curve(&query.curve, ctx, query.e1_smooth)?;
        return Ok(TwistReport {
            parity,
            shape: cls.fiber.kind,
            fiber: cls.fiber.clone(),
            tame: cls.tame,
            wild: false,
            model_change: cls.model_change.clone(),
            omega: Some(cls.omega),
            omega_twisted: Some(cls.omega),
            ram: Some(cls.ram.clone()),
            ram_twisted: Some(cls.ram.clone()),
            degrees: cls.degrees,
            degrees_twisted: cls.degrees,
            type_x: cls.type_x.clone(),
            type_x_chi: cls.type_x,
        });
    }

    let core = pipeline_core(&query.curve, ctx)?;
    let shape = core.fiber.kind;

    if !core.tame {
        return wild_twist(query, &core, &d);
    }

    let regime = Regime::of(shape);
    let ram = match regime {
        Regime::Smooth => ram_data_smooth(&core.inv_norm, &core.normalized, ctx, core.omega)?,
        Regime::IrreducibleSingular => {
            let j12 = core.j12.as_ref().expect("selector set for this regime");
            ram_data_irreducible_singular(
                &core.inv_norm,
                &core.normalized,
                ctx,
                ctx.val(&j12.value),
                core.omega,
            )?
        }
        Regime::NotIrreducible => {
            ram_data_not_irreducible(&core.inv_norm, &core.normalized, ctx, core.omega, shape)?
        }
    };
    let degrees = if shape == StableFiberKind::Smooth {
        None
    } else {
        Some(singularity_degrees(
            shape,
            &core.inv_norm,
            ExtValuation::new(ram.n),
            ctx,
        )?)
    };
    let q_remark = if shape == StableFiberKind::OneSmoothOneSingular {
        q_remark_value(&core.inv, ctx)
    } else {
        None
    };
    let input = LookupInput {
        shape,
        ram: ram.clone(),
        degrees,
        e1_smooth: query.e1_smooth,
        q_remark,
        omega: core.omega,
    };
    let (type_x, type_x_chi) = reduction_type_of_twist(&input)?;
    let ram_twisted = twist_ram_data(&ram, regime)?;
    let degrees_twisted = match degrees {
        Some(deg) => Some(deg.rescale(ram.n, ram_twisted.n)?),
        None => None,
    };
    Ok(TwistReport {
        parity,
        shape,
        fiber: core.fiber.clone(),
        tame: true,
        wild: false,
        model_change: core.change,
        omega: Some(core.omega),
        omega_twisted: Some(core.omega),
        ram: Some(ram),
        ram_twisted: Some(ram_twisted),
        degrees,
        degrees_twisted,
        type_x,
        type_x_chi,
    })
}

fn wild_twist(query: &TwistQuery, core: &PipelineCore, d: &Rat) -> Result<TwistReport> {
    let ctx = &query.ctx;
    let p = ctx.prime();
    let (type_x, type_x_chi) = match p {
        3 => {
            let Some(nf) = &query.wild_char3 else {
                return Err(Error::WildNormalFormRequired {
                    p,
                    needed: "c1..c6",
                });
            };
            (
                wild_char3_type(&nf.a0, &nf.c, None, ctx)?,
                wild_char3_type(&nf.a0, &nf.c, Some(d), ctx)?,
            )
        }
        5 => {
            let Some(nf) = &query.wild_char5 else {
                return Err(Error::WildNormalFormRequired {
                    p,
                    needed: "b0..b6",
                });
            };
            (
                wild_char5_type(&nf.b, false, ctx)?,
                wild_char5_type(&nf.b, true, ctx)?,
            )
        }
        _ => unreachable!("wild cases occur only for p in {{3, 5}}"),
    };
    Ok(TwistReport {
        parity: TwistParity::Ramified,
        shape: core.fiber.kind,
        fiber: core.fiber.clone(),
        tame: false,
        wild: true,
        model_change: core.change.clone(),
        omega: Some(core.omega),
        omega_twisted: Some(core.omega),
        ram: None,
        ram_twisted: None,
        degrees: None,
        degrees_twisted: None,
        type_x,
        type_x_chi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rat {
        Rat::from(BigInt::from(n))
    }

    fn roots(rs: [i64; 6]) -> SexticForm {
        SexticForm::from_roots(q(1), &rs.map(q))
    }

    #[test]
    fn parity_examples() {
        let ctx = LocalContext::new(7).unwrap();
        assert_eq!(
            twist_parity(&q(49), &ctx).unwrap().0,
            TwistParity::Trivial
        );
        assert_eq!(twist_parity(&q(1), &ctx).unwrap().0, TwistParity::Trivial);
        assert_eq!(twist_parity(&q(7), &ctx).unwrap().0, TwistParity::Ramified);
        assert!(twist_parity(&Rat::zero(), &ctx).is_err());
    }

    #[test]
    fn good_reduction_twist() {
        let ctx = LocalContext::new(7).unwrap();
        let form = roots([0, 1, 2, 3, 4, 5]);
        let query = TwistQuery::new(form, q(7), ctx);
        let report = run_twist(&query).unwrap();
        assert_eq!(report.shape, StableFiberKind::Smooth);
        assert_eq!(report.type_x.to_string(), "I[0,0,0]");
        assert_eq!(report.type_x_chi.to_string(), "Istar[0,0,0]");
    }

    #[test]
    fn trivial_twist_returns_same_type() {
        let ctx = LocalContext::new(7).unwrap();
        let form = roots([0, 1, 2, 3, 4, 7]);
        let query = TwistQuery::new(form, q(49), ctx);
        let report = run_twist(&query).unwrap();
        assert_eq!(report.parity, TwistParity::Trivial);
        assert_eq!(report.type_x, report.type_x_chi);
    }

    #[test]
    fn one_node_twist_doubles_degree() {
        let ctx = LocalContext::new(7).unwrap();
        let form = roots([0, 1, 2, 3, 4, 7]);
        let query = TwistQuery::new(form.clone(), q(7), ctx);
        let report = run_twist(&query).unwrap();
        assert_eq!(report.shape, StableFiberKind::IrreducibleOneNode);
        assert_eq!(report.type_x.to_string(), "I[2,0,0]");
        assert_eq!(report.type_x_chi.to_string(), "Istar[2,0,0]");
        let ram = report.ram.unwrap();
        let ram_t = report.ram_twisted.unwrap();
        assert_eq!(ram.n, 1);
        assert_eq!(ram_t.n, 2);
        assert_eq!(
            report.degrees.unwrap(),
            SingularityDegrees::OneNode { e: 2 }
        );
        assert_eq!(
            report.degrees_twisted.unwrap(),
            SingularityDegrees::OneNode { e: 4 }
        );
    }

    #[test]
    fn twist_ram_data_double_application_is_identity() {
        // smooth/irreducible regimes
        for (n, r, q_res) in [(1u32, 0u32, 0u32), (2, 1, 1), (3, 1, 0), (6, 5, 3), (4, 1, 3)] {
            let ram = RamData {
                n,
                r,
                q: Some(q_res),
                d_k: None,
                r_k: None,
                d: None,
                j2_parity: None,
            };
            let once = twist_ram_data(&ram, Regime::Smooth).unwrap();
            let twice = twist_ram_data(&once, Regime::Smooth).unwrap();
            assert_eq!(twice, ram, "n={n} r={r} q={q_res}");
        }
        // two-component even regime
        for (n, r, d) in [(1u32, 0u32, 3i64), (2, 1, 5), (3, 2, 7), (6, 1, 13)] {
            let ram = RamData {
                n,
                r,
                q: None,
                d_k: Some(Frac::new(d, n as i64)),
                r_k: None,
                d: Some(d),
                j2_parity: Some(Parity::Even),
            };
            let once = twist_ram_data(&ram, Regime::NotIrreducible).unwrap();
            let twice = twist_ram_data(&once, Regime::NotIrreducible).unwrap();
            assert_eq!(twice, ram, "n={n} r={r} d={d}");
        }
        // odd regime is fixed
        let ram = RamData {
            n: 4,
            r: 3,
            q: None,
            d_k: Some(Frac::new(3, 2)),
            r_k: Some(Frac::new(3, 2)),
            d: Some(6),
            j2_parity: Some(Parity::Odd),
        };
        let once = twist_ram_data(&ram, Regime::NotIrreducible).unwrap();
        assert_eq!((once.n, once.r, once.d), (ram.n, ram.r, ram.d));
    }

    #[test]
    fn smooth_lemma_examples() {
        // n=1 → n'=2, r'=0
        let ram = RamData {
            n: 1,
            r: 0,
            q: Some(0),
            d_k: None,
            r_k: None,
            d: None,
            j2_parity: None,
        };
        let t = twist_ram_data(&ram, Regime::Smooth).unwrap();
        assert_eq!((t.n, t.r), (2, 0));
        // n=2, r=0 → n'=1
        let ram = RamData {
            n: 2,
            r: 0,
            q: Some(1),
            d_k: None,
            r_k: None,
            d: None,
            j2_parity: None,
        };
        let t = twist_ram_data(&ram, Regime::Smooth).unwrap();
        assert_eq!(t.n, 1);
        // two-component odd: everything fixed
        let ram = RamData {
            n: 6,
            r: 4,
            q: None,
            d_k: Some(Frac::new(4, 3)),
            r_k: None,
            d: Some(8),
            j2_parity: Some(Parity::Odd),
        };
        let t = twist_ram_data(&ram, Regime::NotIrreducible).unwrap();
        assert_eq!((t.n, t.r, t.d), (6, 4, Some(8)));
    }

    #[test]
    fn wild_twist_requires_normal_form() {
        let ctx = LocalContext::new(5).unwrap();
        // y² = 5x⁶ + x⁵ + 25: smooth shape, reduction ≅ C0, ω̄ ramified,
        // no rational branch points — genuinely wild at 5
        let form = SexticForm::from_i64([5, 1, 0, 0, 0, 0, 25]).unwrap();
        let query = TwistQuery::new(form.clone(), q(5), ctx);
        let err = run_twist(&query).unwrap_err();
        assert!(matches!(err, Error::WildNormalFormRequired { p: 5, .. }));

        // the curve is its own char-5 normal form (b0 ∈ 𝔪, b1 unit,
        // ν(b6) = 2): supplying it yields the wild types
        let mut query = TwistQuery::new(form, q(5), ctx);
        let b = [q(5), q(1), q(0), q(0), q(0), q(0), q(25)];
        query.wild_char5 = Some(Char5NormalForm { b });
        let report = run_twist(&query).unwrap();
        assert!(report.wild);
        assert_eq!(report.type_x.to_string(), "IX[1]");
        assert_eq!(report.type_x_chi.to_string(), "VIII[3]");
    }

    #[test]
    fn c0_curve_with_rational_branch_points_is_tame() {
        // y² = x⁵ - x itself has good reduction at 5 (and four rational
        // branch points), so it is tame with n = 1
        let ctx = LocalContext::new(5).unwrap();
        let form = SexticForm::from_i64([0, 1, 0, 0, 0, -1, 0]).unwrap();
        let cls = classify_curve(&form, &ctx, None).unwrap();
        assert!(cls.tame);
        assert_eq!(cls.fiber.kind, StableFiberKind::Smooth);
        assert_eq!(cls.ram.n, 1);
        assert_eq!(cls.type_x.to_string(), "I[0,0,0]");
    }

    #[test]
    fn lemma_relations_on_engineered_sample() {
        // shapes both II; n r' = n' r exactly
        let ctx = LocalContext::new(7).unwrap();
        let form = roots([0, 1, 2, 3, 4, 7]);
        let report = run_twist(&TwistQuery::new(form, q(7), ctx)).unwrap();
        let ram = report.ram.unwrap();
        let ram_t = report.ram_twisted.unwrap();
        assert_eq!(
            ram.n as i64 * ram_t.r as i64,
            ram_t.n as i64 * ram.r as i64
        );
    }
}
