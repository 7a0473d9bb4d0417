//! Classification of the special fiber of the stable model, tameness
//! criteria, and degrees of singularity.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::InvariantSet;
use crate::ramification::OmegaStatus;
use crate::valuation::{ExtValuation, LocalContext, Val};
use crate::Frac;

/// The characteristic-dependent exponent ε: 1 if p ∉ {2,3}, 3 if p = 3
/// (4 would correspond to p = 2, which is excluded).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Epsilon(u8);

impl Epsilon {
    pub fn value(self) -> u32 {
        self.0 as u32
    }

    /// The invariant I_{2ε}: I2 for ε = 1, I6 for ε = 3, I8 for ε = 4.
    pub(crate) fn i2e(self) -> Inv {
        match self.0 {
            1 => Inv::I2,
            3 => Inv::I6,
            _ => Inv::I8,
        }
    }
}

/// ε for the residue characteristic of the context.
pub fn epsilon(ctx: &LocalContext) -> Epsilon {
    if ctx.prime() == 3 {
        Epsilon(3)
    } else {
        Epsilon(1)
    }
}

/// Identifier of one invariant inside a [`ValProfile`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[allow(clippy::upper_case_acronyms)]
pub(crate) enum Inv {
    J2,
    J4,
    J6,
    J8,
    J10,
    I2,
    I4,
    I6,
    I8,
    I12,
}

/// Precomputed valuations of the projective invariants of one equation; the
/// classification conditions read only these.
#[derive(Debug, Clone)]
pub struct ValProfile {
    vals: [Val; 10],
}

impl ValProfile {
    pub fn new(inv: &InvariantSet, ctx: &LocalContext) -> Self {
        let v = |x| ctx.val(x);
        ValProfile {
            vals: [
                v(&inv.j2),
                v(&inv.j4),
                v(&inv.j6),
                v(&inv.j8),
                v(&inv.j10),
                v(&inv.i2),
                v(&inv.i4),
                v(&inv.i6),
                v(&inv.i8),
                v(&inv.i12),
            ],
        }
    }

    pub(crate) fn get(&self, id: Inv) -> Val {
        self.vals[id as usize]
    }

    /// ν of the monomial `∏ num^e / ∏ den^e`, or `None` when a denominator
    /// factor vanishes (the element of K is undefined / "∞").
    pub(crate) fn quotient(&self, num: &[(Inv, u32)], den: &[(Inv, u32)]) -> Option<Val> {
        let mut acc = Val::Finite(0);
        for (id, e) in den {
            let v = self.get(*id);
            if v.is_infinite() {
                return None;
            }
            acc = acc + v.scale(-(*e as i64));
        }
        for (id, e) in num {
            acc = acc + self.get(*id).scale(*e as i64);
        }
        Some(acc)
    }

    fn in_r(&self, num: &[(Inv, u32)], den: &[(Inv, u32)]) -> bool {
        self.quotient(num, den).map_or(false, Val::in_ring)
    }

    fn in_m(&self, num: &[(Inv, u32)], den: &[(Inv, u32)]) -> bool {
        self.quotient(num, den)
            .map_or(false, Val::in_maximal_ideal)
    }

    fn unit(&self, num: &[(Inv, u32)], den: &[(Inv, u32)]) -> bool {
        self.quotient(num, den).map_or(false, Val::is_unit)
    }
}

/// The seven shapes of the special fiber of the stable model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StableFiberKind {
    /// (I) smooth.
    Smooth,
    /// (II) irreducible with one ordinary double point.
    IrreducibleOneNode,
    /// (III) irreducible with two ordinary double points.
    IrreducibleTwoNodes,
    /// (IV) two rational curves meeting transversally in three points.
    TwoRationalThreeNodes,
    /// (V) two smooth components meeting in one point.
    TwoSmoothOneNode,
    /// (VI) one smooth and one singular component meeting in one point.
    OneSmoothOneSingular,
    /// (VII) two singular components meeting in one point.
    TwoSingularOneNode,
}

impl StableFiberKind {
    pub fn name(self) -> &'static str {
        match self {
            StableFiberKind::Smooth => "smooth",
            StableFiberKind::IrreducibleOneNode => "irreducible-one-node",
            StableFiberKind::IrreducibleTwoNodes => "irreducible-two-nodes",
            StableFiberKind::TwoRationalThreeNodes => "two-rational-three-nodes",
            StableFiberKind::TwoSmoothOneNode => "two-smooth-one-node",
            StableFiberKind::OneSmoothOneSingular => "one-smooth-one-singular",
            StableFiberKind::TwoSingularOneNode => "two-singular-one-node",
        }
    }

    /// True for the three shapes whose quotient by the hyperelliptic
    /// involution is the union of two curves (V, VI, VII).
    pub fn is_two_component(self) -> bool {
        matches!(
            self,
            StableFiberKind::TwoSmoothOneNode
                | StableFiberKind::OneSmoothOneSingular
                | StableFiberKind::TwoSingularOneNode
        )
    }

    pub const ALL: [StableFiberKind; 7] = [
        StableFiberKind::Smooth,
        StableFiberKind::IrreducibleOneNode,
        StableFiberKind::IrreducibleTwoNodes,
        StableFiberKind::TwoRationalThreeNodes,
        StableFiberKind::TwoSmoothOneNode,
        StableFiberKind::OneSmoothOneSingular,
        StableFiberKind::TwoSingularOneNode,
    ];
}

impl std::fmt::Display for StableFiberKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Residue-level reports attached to a classified fiber; each is present
/// only when the quantity reduces to prime-field arithmetic.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueReports {
    /// j-invariant of the elliptic normalization (one-node fiber).
    pub j: Option<u64>,
    /// j-invariant of the smooth component (one-smooth-one-singular fiber).
    pub j_smooth: Option<u64>,
    /// Residue of (j1·j2)^ε for the two-smooth fiber.
    pub j_pair_product: Option<u64>,
    /// Residue of (j1+j2)^ε for the two-smooth fiber.
    pub j_pair_sum: Option<u64>,
    /// Individual component invariants, when the quadratic splits over 𝔽_p.
    pub j_components: Option<(u64, u64)>,
}

/// A classified special fiber: the case tag plus residue reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableFiberType {
    pub kind: StableFiberKind,
    pub reports: ResidueReports,
}

const JS: [Inv; 5] = [Inv::J2, Inv::J4, Inv::J6, Inv::J8, Inv::J10];

fn block_matches(profile: &ValProfile, eps: Epsilon, kind: StableFiberKind) -> bool {
    use Inv::*;
    let e = eps.value();
    let i2e = eps.i2e();
    let vstar = || {
        profile.in_m(&[(I4, e)], &[(i2e, 2)])
            && profile.in_m(&[(J10, e)], &[(i2e, 5)])
            && profile.in_m(&[(I12, e)], &[(i2e, 6)])
    };
    match kind {
        StableFiberKind::Smooth => (1..=5u32).all(|i| {
            profile.in_r(&[(JS[i as usize - 1], 5)], &[(J10, i)])
        }),
        StableFiberKind::IrreducibleOneNode => {
            (1..=5u32).all(|i| profile.in_r(&[(JS[i as usize - 1], 6)], &[(I12, i)]))
                && profile.in_m(&[(J10, 6)], &[(I12, 5)])
        }
        StableFiberKind::IrreducibleTwoNodes => {
            (1..=5u32).all(|i| profile.in_r(&[(JS[i as usize - 1], 2)], &[(I4, i)]))
                && profile.in_m(&[(J10, 2)], &[(I4, 5)])
                && profile.in_m(&[(I12, 1)], &[(I4, 3)])
                && (profile.unit(&[(J4, 1)], &[(I4, 1)])
                    || profile.unit(&[(J6, 2)], &[(I4, 3)]))
        }
        StableFiberKind::TwoRationalThreeNodes => {
            (2..=5u32).all(|i| profile.in_m(&[(JS[i as usize - 1], 2)], &[(I4, i)]))
        }
        StableFiberKind::TwoSmoothOneNode => {
            vstar()
                && profile.in_r(&[(I4, 3 * e)], &[(J10, e), (i2e, 1)])
                && profile.in_r(&[(I12, e)], &[(J10, e), (i2e, 1)])
        }
        StableFiberKind::OneSmoothOneSingular => {
            vstar()
                && profile.in_r(&[(I4, 3)], &[(I12, 1)])
                && profile.in_m(&[(J10, e), (i2e, 1)], &[(I12, e)])
        }
        StableFiberKind::TwoSingularOneNode => {
            vstar()
                && profile.in_m(&[(I12, 1)], &[(I4, 3)])
                && profile.in_m(&[(J10, e), (i2e, 1)], &[(I4, 3 * e)])
        }
    }
}

/// All condition blocks that match, in the theorem's order.  A valid input
/// matches exactly one; the debug view exists to detect drift.
pub fn classify_blocks(inv: &InvariantSet, ctx: &LocalContext) -> Vec<StableFiberKind> {
    let profile = ValProfile::new(inv, ctx);
    let eps = epsilon(ctx);
    StableFiberKind::ALL
        .into_iter()
        .filter(|k| block_matches(&profile, eps, *k))
        .collect()
}

/// Decide the shape of the special fiber of the stable model.
///
/// Requires `J10 ≠ 0` (smooth generic fiber).  The seven blocks are
/// evaluated in the printed order and the first match wins; residue-level
/// j-invariant reports are attached when computable over 𝔽_p.
pub fn classify_stable(inv: &InvariantSet, ctx: &LocalContext) -> Result<StableFiberType> {
    use num_traits::Zero;
    if inv.j10.is_zero() {
        return Err(Error::InvalidInput(
            "J10 = 0: the generic fiber is not smooth (P has a repeated root)".into(),
        ));
    }
    let profile = ValProfile::new(inv, ctx);
    let eps = epsilon(ctx);
    let kind = StableFiberKind::ALL
        .into_iter()
        .find(|k| block_matches(&profile, eps, *k))
        .ok_or(Error::Unclassifiable)?;
    let reports = residue_reports(inv, ctx, eps, kind);
    Ok(StableFiberType { kind, reports })
}

fn residue_reports(
    inv: &InvariantSet,
    ctx: &LocalContext,
    eps: Epsilon,
    kind: StableFiberKind,
) -> ResidueReports {
    use crate::invariants::pow_rational;
    use num_traits::Zero;
    let mut reports = ResidueReports::default();
    let ratio = |num: crate::Rat, den: &crate::Rat| -> Option<u64> {
        if den.is_zero() {
            return None;
        }
        ctx.residue(&(num / den))
    };
    match kind {
        StableFiberKind::IrreducibleOneNode => {
            reports.j = ratio(pow_rational(&inv.i4, 3), &inv.i12);
        }
        StableFiberKind::OneSmoothOneSingular => {
            reports.j_smooth = ratio(pow_rational(&inv.i4, 3), &inv.i12);
        }
        StableFiberKind::TwoSmoothOneNode => {
            let e = eps.value();
            let i2e = match eps.i2e() {
                Inv::I2 => inv.i2.clone(),
                Inv::I6 => inv.i6.clone(),
                _ => inv.i8.clone(),
            };
            let den = pow_rational(&inv.j10, e) * &i2e;
            let prod = ratio(pow_rational(&inv.i4, 3 * e), &den);
            let sum = ratio(pow_rational(&inv.i12, e), &den).map(|s| {
                let p = ctx.prime();
                let c = (1728u64) % p; // 2^6 · 3^3
                (c + s) % p
            });
            reports.j_pair_product = prod;
            reports.j_pair_sum = sum;
            if let (Some(pr), Some(s)) = (prod, sum) {
                reports.j_components = split_pair(pr, s, eps, ctx.prime());
            }
        }
        _ => {}
    }
    reports
}

/// Recover {j1, j2} from (j1·j2)^ε and (j1+j2)^ε over 𝔽_p, when possible.
/// x^ε with ε ∈ {1, 3} is the identity on the prime field (cubing is the
/// Frobenius on 𝔽_3), so the inputs already equal j1·j2 and j1+j2; the pair
/// splits exactly when X² − s·X + pr has its roots in 𝔽_p.
fn split_pair(prod_e: u64, sum_e: u64, _eps: Epsilon, p: u64) -> Option<(u64, u64)> {
    let (pr, s) = (prod_e % p, sum_e % p);
    let d = ((s as u128 * s as u128 + 4 * (p as u128) * (p as u128) - 4 * pr as u128)
        % p as u128) as u64;
    let r = sqrt_mod(d, p)?;
    let inv2 = (p + 1) / 2;
    let j1 = ((s + r) as u128 * inv2 as u128 % p as u128) as u64;
    let j2 = ((s + p - r) as u128 * inv2 as u128 % p as u128) as u64;
    Some(if j1 <= j2 { (j1, j2) } else { (j2, j1) })
}

fn mod_pow(b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut bb: u128 = (b % p) as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % p as u128;
        }
        bb = bb * bb % p as u128;
        e >>= 1;
    }
    acc as u64
}

/// Square root mod an odd prime (Tonelli–Shanks); `None` for non-residues.
fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if mod_pow(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(mod_pow(a, (p + 1) / 4, p));
    }
    // Tonelli–Shanks
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while mod_pow(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = mod_pow(z, q, p);
    let mut t = mod_pow(a, q, p);
    let mut r = mod_pow(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0u32;
        let mut tt = t;
        while tt != 1 {
            tt = (tt as u128 * tt as u128 % p as u128) as u64;
            i += 1;
            if i == m {
                return None;
            }
        }
        let b = mod_pow(c, 1 << (m - i - 1), p);
        m = i;
        c = (b as u128 * b as u128 % p as u128) as u64;
        t = (t as u128 * c as u128 % p as u128) as u64;
        r = (r as u128 * b as u128 % p as u128) as u64;
    }
    Some(r)
}

/// Outcome of the characteristic-specific special-fiber tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialFiberTests {
    /// p = 3: the reduction lies in the family z² = v⁶+v⁴+v²+a, a ∈ k^×.
    pub gamma_member: bool,
    /// p = 5: the reduction is isomorphic to z² = v⁵ − v.
    pub c0_iso: bool,
}

/// Run the Γ-membership test (p = 3) or the C₀-isomorphism test (p = 5).
/// Errors for any other residue characteristic.
pub fn special_fiber_tests(inv: &InvariantSet, ctx: &LocalContext) -> Result<SpecialFiberTests> {
    use num_traits::Zero;
    match ctx.prime() {
        3 => {
            let gamma = if inv.j2.is_zero() {
                false
            } else {
                let j2_2 = &inv.j2 * &inv.j2;
                let j2_3 = &j2_2 * &inv.j2;
                let j2_5 = &j2_3 * &j2_2;
                let q4 = &inv.j4 / &j2_2;
                let q10 = &inv.j10 / &j2_5;
                let q6 = &inv.j6 / &j2_3;
                ctx.in_maximal_ideal(&q4)
                    && ctx.is_unit(&q10)
                    && ctx.in_maximal_ideal(&(q6 - q10))
            };
            Ok(SpecialFiberTests {
                gamma_member: gamma,
                c0_iso: false,
            })
        }
        5 => {
            // J2i^5 J10^-i ∈ 𝔪 for i ≤ 4 (i = 5 gives a unit identically)
            let v10 = ctx.val(&inv.j10);
            let c0 = match v10 {
                Val::Infinite => false,
                Val::Finite(w10) => [&inv.j2, &inv.j4, &inv.j6, &inv.j8]
                    .iter()
                    .zip(1i64..)
                    .all(|(j, i)| match ctx.val(j) {
                        Val::Infinite => true,
                        Val::Finite(w) => 5 * w - i * w10 >= 1,
                    }),
            };
            Ok(SpecialFiberTests {
                gamma_member: false,
                c0_iso: c0,
            })
        }
        _ => Err(Error::IrrelevantCharacteristic),
    }
}

/// Tameness of L/K by the four printed sufficient conditions: p ∉ {3,5};
/// two rational branch points; p = 3 with ω̄ ramified or fiber ∉ Γ; p = 5
/// with ω̄ non-ramified or fiber ≇ C₀.
pub fn is_tame(
    _shape: StableFiberKind,
    tests: Option<&SpecialFiberTests>,
    omega: Option<OmegaStatus>,
    two_rational_branch_points: bool,
    ctx: &LocalContext,
) -> bool {
    let p = ctx.prime();
    if p != 3 && p != 5 {
        return true;
    }
    if two_rational_branch_points {
        return true;
    }
    let omega_ramified = matches!(
        omega,
        Some(OmegaStatus::RamifiedRegularPreimage) | Some(OmegaStatus::RamifiedSingularPreimage)
    );
    match p {
        3 => omega_ramified || !tests.map_or(false, |t| t.gamma_member),
        5 => {
            matches!(omega, Some(OmegaStatus::NonRamified))
                || !tests.map_or(false, |t| t.c0_iso)
        }
        _ => unreachable!(),
    }
}

/// Regime-precise tameness used by the pipeline: the smooth regime follows
/// the smooth proposition, the irreducible-quotient regime treats the
/// characteristic-3 two-rational-curves fiber with non-ramified ω̄ as wild,
/// and the two-component regime requires p ≠ 3.
pub fn regime_tame(
    shape: StableFiberKind,
    tests: Option<&SpecialFiberTests>,
    omega: Option<OmegaStatus>,
    two_rational_branch_points: bool,
    ctx: &LocalContext,
) -> Result<bool> {
    let p = ctx.prime();
    if shape.is_two_component() && p == 3 {
        return Err(Error::Char3TwoComponent);
    }
    if p != 3 && p != 5 {
        return Ok(true);
    }
    if two_rational_branch_points {
        return Ok(true);
    }
    let omega_ramified = matches!(
        omega,
        Some(OmegaStatus::RamifiedRegularPreimage) | Some(OmegaStatus::RamifiedSingularPreimage)
    );
    Ok(match (p, shape) {
        (3, StableFiberKind::Smooth) => {
            omega_ramified || !tests.map_or(false, |t| t.gamma_member)
        }
        (3, StableFiberKind::TwoRationalThreeNodes) => omega_ramified,
        (3, _) => true,
        (5, StableFiberKind::Smooth) => {
            matches!(omega, Some(OmegaStatus::NonRamified))
                || !tests.map_or(false, |t| t.c0_iso)
        }
        (5, _) => true,
        _ => unreachable!(),
    })
}

/// Degrees of singularity of the singular points of the stable fiber,
/// measured in the normalized valuation of L.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SingularityDegrees {
    /// Case II.
    OneNode { e: i64 },
    /// Case III, e1 ≤ e2.
    TwoNodes { e1: i64, e2: i64 },
    /// Case IV, e1 ≤ e2 ≤ e3.
    ThreeNodes { e1: i64, e2: i64, e3: i64 },
    /// Case V: the single intersection point.
    Intersection { e: i64 },
    /// Case VI: e0 at the intersection, e1 on the singular component.
    SmoothPlusSingular { e0: i64, e1: i64 },
    /// Case VII: e0 at the intersection, e1 ≤ e2 on the components.
    TwoSingular { e0: i64, e1: i64, e2: i64 },
}

impl SingularityDegrees {
    /// The degrees of the non-intersection nodes, smallest first (empty for
    /// the smooth-components case).
    pub fn component_degrees(&self) -> Vec<i64> {
        match *self {
            SingularityDegrees::OneNode { e } => vec![e],
            SingularityDegrees::TwoNodes { e1, e2 } => vec![e1, e2],
            SingularityDegrees::ThreeNodes { e1, e2, e3 } => vec![e1, e2, e3],
            SingularityDegrees::Intersection { .. } => vec![],
            SingularityDegrees::SmoothPlusSingular { e1, .. } => vec![e1],
            SingularityDegrees::TwoSingular { e1, e2, .. } => vec![e1, e2],
        }
    }

    pub fn all_degrees(&self) -> Vec<i64> {
        match *self {
            SingularityDegrees::OneNode { e } => vec![e],
            SingularityDegrees::TwoNodes { e1, e2 } => vec![e1, e2],
            SingularityDegrees::ThreeNodes { e1, e2, e3 } => vec![e1, e2, e3],
            SingularityDegrees::Intersection { e } => vec![e],
            SingularityDegrees::SmoothPlusSingular { e0, e1 } => vec![e0, e1],
            SingularityDegrees::TwoSingular { e0, e1, e2 } => vec![e0, e1, e2],
        }
    }

    /// Scale every degree by n'/n (degrees are measured in ν_L and every
    /// defining quotient is degree-balanced, hence twist-invariant).
    pub(crate) fn rescale(&self, n: u32, n_prime: u32) -> Result<SingularityDegrees> {
        let f = |e: i64| -> Result<i64> {
            let scaled = e
                .checked_mul(n_prime as i64)
                .ok_or_else(|| Error::NonIntegralDegree("rescale", "overflow".into()))?;
            if scaled % n as i64 != 0 {
                return Err(Error::NonIntegralDegree(
                    "rescale",
                    format!("{e}·{n_prime}/{n}"),
                ));
            }
            Ok(scaled / n as i64)
        };
        Ok(match *self {
            SingularityDegrees::OneNode { e } => SingularityDegrees::OneNode { e: f(e)? },
            SingularityDegrees::TwoNodes { e1, e2 } => SingularityDegrees::TwoNodes {
                e1: f(e1)?,
                e2: f(e2)?,
            },
            SingularityDegrees::ThreeNodes { e1, e2, e3 } => SingularityDegrees::ThreeNodes {
                e1: f(e1)?,
                e2: f(e2)?,
                e3: f(e3)?,
            },
            SingularityDegrees::Intersection { e } => {
                SingularityDegrees::Intersection { e: f(e)? }
            }
            SingularityDegrees::SmoothPlusSingular { e0, e1 } => {
                SingularityDegrees::SmoothPlusSingular {
                    e0: f(e0)?,
                    e1: f(e1)?,
                }
            }
            SingularityDegrees::TwoSingular { e0, e1, e2 } => SingularityDegrees::TwoSingular {
                e0: f(e0)?,
                e1: f(e1)?,
                e2: f(e2)?,
            },
        })
    }
}

fn finite(v: Option<Val>, what: &'static str) -> Result<i64> {
    match v {
        Some(Val::Finite(x)) => Ok(x),
        _ => Err(Error::DegenerateInvariant(what)),
    }
}

fn as_integer(f: Frac, what: &'static str) -> Result<i64> {
    if *f.denom() == 1 {
        Ok(*f.numer())
    } else {
        Err(Error::NonIntegralDegree(what, f.to_string()))
    }
}

fn check_positive(vals: &[i64], what: &'static str) -> Result<()> {
    if vals.iter().any(|&v| v < 1) {
        return Err(Error::NonIntegralDegree(what, format!("{vals:?}")));
    }
    Ok(())
}

/// Degrees of singularity per the case formulas, measured in ν_L with
/// `ext` carrying n = [L:K].
pub fn singularity_degrees(
    shape: StableFiberKind,
    inv: &InvariantSet,
    ext: ExtValuation,
    ctx: &LocalContext,
) -> Result<SingularityDegrees> {
    use Inv::*;
    let profile = ValProfile::new(inv, ctx);
    let eps = epsilon(ctx);
    let e = eps.value();
    let i2e = eps.i2e();
    let n = ext.degree() as i64;
    let vl = |num: &[(Inv, u32)], den: &[(Inv, u32)], what: &'static str| -> Result<i64> {
        finite(profile.quotient(num, den), what).map(|v| v * n)
    };

    match shape {
        StableFiberKind::Smooth => Err(Error::InvalidInput(
            "a smooth fiber has no singular points".into(),
        )),
        StableFiberKind::IrreducibleOneNode => {
            let v = vl(&[(J10, 6)], &[(I12, 5)], "J10^6 I12^-5")?;
            let e_deg = as_integer(Frac::new(v, 6), "e = ν_L(J10^6 I12^-5)/6")?;
            check_positive(&[e_deg], "one-node degree")?;
            Ok(SingularityDegrees::OneNode { e: e_deg })
        }
        StableFiberKind::IrreducibleTwoNodes => {
            let w1 = vl(&[(I12, 1)], &[(I4, 3)], "I12 I4^-3")?;
            let s = vl(&[(J10, 2)], &[(I4, 5)], "J10^2 I4^-5")?;
            let e1f = Frac::new(w1, 1).min(Frac::new(s, 4));
            let e1 = as_integer(e1f, "two-node e1")?;
            let e2 = as_integer(Frac::new(s, 2) - Frac::new(e1, 1), "two-node e2")?;
            check_positive(&[e1, e2], "two-node degrees")?;
            if e1 > e2 {
                return Err(Error::NonIntegralDegree(
                    "two-node ordering",
                    format!("e1={e1} > e2={e2}"),
                ));
            }
            Ok(SingularityDegrees::TwoNodes { e1, e2 })
        }
        StableFiberKind::TwoRationalThreeNodes => {
            let l = vl(&[(J10, 1)], &[(J2, 5)], "J10 J2^-5")?;
            let nn = vl(&[(I12, 1)], &[(J2, 6)], "I12 J2^-6")?;
            let m = vl(&[(J4, 1)], &[(J2, 2)], "J4 J2^-2")?;
            let e1f = Frac::new(l, 3).min(Frac::new(nn, 2)).min(Frac::new(m, 1));
            let e1 = as_integer(e1f, "three-node e1")?;
            let e2f = Frac::new(l - e1, 2).min(Frac::new(nn - e1, 1));
            let e2 = as_integer(e2f, "three-node e2")?;
            let e3 = l - e1 - e2;
            check_positive(&[e1, e2, e3], "three-node degrees")?;
            Ok(SingularityDegrees::ThreeNodes { e1, e2, e3 })
        }
        StableFiberKind::TwoSmoothOneNode => {
            let v = vl(&[(J10, e)], &[(i2e, 5)], "J10^ε I2ε^-5")?;
            let e_deg = as_integer(Frac::new(v, 12 * e as i64), "ν_L(J10^ε I2ε^-5)/12ε")?;
            check_positive(&[e_deg], "intersection degree")?;
            Ok(SingularityDegrees::Intersection { e: e_deg })
        }
        StableFiberKind::OneSmoothOneSingular => {
            let v0 = vl(&[(I12, e)], &[(i2e, 6)], "I12^ε I2ε^-6")?;
            let e0 = as_integer(Frac::new(v0, 12 * e as i64), "ν_L(I12^ε I2ε^-6)/12ε")?;
            let v1 = vl(&[(J10, e), (i2e, 1)], &[(I12, e)], "J10^ε I2ε I12^-ε")?;
            let e1 = as_integer(Frac::new(v1, e as i64), "ν_L(J10^ε I2ε I12^-ε)/ε")?;
            check_positive(&[e0, e1], "smooth+singular degrees")?;
            Ok(SingularityDegrees::SmoothPlusSingular { e0, e1 })
        }
        StableFiberKind::TwoSingularOneNode => {
            let e0 = vl(&[(I4, e)], &[(i2e, 2)], "I4^ε I2ε^-2")?;
            let w1 = vl(&[(I12, 1)], &[(I4, 3)], "I12 I4^-3")?;
            let s = vl(&[(J10, e), (i2e, 1)], &[(I4, 3 * e)], "J10^ε I2ε I4^-3ε")?;
            let e1f = Frac::new(w1, 1).min(Frac::new(s, 2 * e as i64));
            let e1 = as_integer(e1f, "two-singular e1")?;
            let e2 = as_integer(Frac::new(s, e as i64) - Frac::new(e1, 1), "two-singular e2")?;
            check_positive(&[e0, e1, e2], "two-singular degrees")?;
            if e1 > e2 {
                return Err(Error::NonIntegralDegree(
                    "two-singular ordering",
                    format!("e1={e1} > e2={e2}"),
                ));
            }
            Ok(SingularityDegrees::TwoSingular { e0, e1, e2 })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{compute_invariants, SexticForm};
    use crate::Rat;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rat {
        Rat::from(BigInt::from(n))
    }

    fn roots(rs: [i64; 6]) -> SexticForm {
        SexticForm::from_roots(q(1), &rs.map(q))
    }

    fn classify_roots(rs: [i64; 6], p: u64) -> StableFiberKind {
        let form = roots(rs);
        let inv = compute_invariants(&form);
        let ctx = LocalContext::new(p).unwrap();
        classify_stable(&inv, &ctx).unwrap().kind
    }

    #[test]
    fn epsilon_values() {
        assert_eq!(epsilon(&LocalContext::new(7).unwrap()).value(), 1);
        assert_eq!(epsilon(&LocalContext::new(3).unwrap()).value(), 3);
        assert_eq!(epsilon(&LocalContext::new(5).unwrap()).value(), 1);
    }

    #[test]
    fn engineered_cluster_shapes() {
        let p = 7i64;
        assert_eq!(classify_roots([0, 1, 2, 3, 4, p], 7), StableFiberKind::IrreducibleOneNode);
        assert_eq!(
            classify_roots([0, p, 1, 1 + p, 2, 3], 7),
            StableFiberKind::IrreducibleTwoNodes
        );
        assert_eq!(
            classify_roots([0, p, 1, 1 + p, 2, 2 + p], 7),
            StableFiberKind::TwoRationalThreeNodes
        );
        assert_eq!(
            classify_roots([0, p, 2 * p, 1, 1 + p, 1 + 2 * p], 7),
            StableFiberKind::TwoSmoothOneNode
        );
        assert_eq!(
            classify_roots([0, p, 2 * p, 1, 1 + p, 1 + p + p * p * p], 7),
            StableFiberKind::OneSmoothOneSingular
        );
        assert_eq!(
            classify_roots([0, p, p + p * p, 1, 1 + p, 1 + p + p * p], 7),
            StableFiberKind::TwoSingularOneNode
        );
    }

    #[test]
    fn integral_with_unit_j10_is_smooth() {
        let form = roots([0, 1, 2, 3, 4, 5]);
        let inv = compute_invariants(&form);
        let ctx = LocalContext::new(11).unwrap();
        assert!(ctx.is_unit(&(&inv.j10 * q(4096))) || ctx.in_ring(&inv.j10));
        assert_eq!(classify_stable(&inv, &ctx).unwrap().kind, StableFiberKind::Smooth);
    }

    #[test]
    fn exactly_one_block_matches_on_engineered_inputs() {
        let p = 7i64;
        for rs in [
            [0, 1, 2, 3, 4, 5],
            [0, 1, 2, 3, 4, p],
            [0, p, 1, 1 + p, 2, 3],
            [0, p, 1, 1 + p, 2, 2 + p],
            [0, p, 2 * p, 1, 1 + p, 1 + 2 * p],
            [0, p, 2 * p, 1, 1 + p, 1 + p + p * p * p],
            [0, p, p + p * p, 1, 1 + p, 1 + p + p * p],
        ] {
            let form = roots(rs);
            let inv = compute_invariants(&form);
            let ctx = LocalContext::new(7).unwrap();
            let blocks = classify_blocks(&inv, &ctx);
            assert_eq!(blocks.len(), 1, "roots {rs:?} matched {blocks:?}");
        }
    }

    #[test]
    fn one_node_reports_j_invariant() {
        let form = roots([0, 1, 2, 3, 4, 7]);
        let inv = compute_invariants(&form);
        let ctx = LocalContext::new(7).unwrap();
        let fiber = classify_stable(&inv, &ctx).unwrap();
        assert_eq!(fiber.kind, StableFiberKind::IrreducibleOneNode);
        assert!(fiber.reports.j.is_some());
    }

    #[test]
    fn special_fiber_tests_by_characteristic() {
        // Γ family member at p = 3
        let form = SexticForm::from_i64([1, 0, 1, 0, 1, 0, 1]).unwrap();
        let inv = compute_invariants(&form);
        let t = special_fiber_tests(&inv, &LocalContext::new(3).unwrap()).unwrap();
        assert!(t.gamma_member);
        assert!(!t.c0_iso);

        // C0 at p = 5
        let form = SexticForm::from_i64([0, 1, 0, 0, 0, -1, 0]).unwrap();
        let inv = compute_invariants(&form);
        let t = special_fiber_tests(&inv, &LocalContext::new(5).unwrap()).unwrap();
        assert!(t.c0_iso);
        assert!(!t.gamma_member);

        // p = 7: undefined
        assert!(matches!(
            special_fiber_tests(&inv, &LocalContext::new(7).unwrap()),
            Err(Error::IrrelevantCharacteristic)
        ));
    }

    #[test]
    fn tameness_conditions() {
        let ctx7 = LocalContext::new(7).unwrap();
        assert!(is_tame(StableFiberKind::Smooth, None, None, false, &ctx7));

        let ctx3 = LocalContext::new(3).unwrap();
        let in_gamma = SpecialFiberTests {
            gamma_member: true,
            c0_iso: false,
        };
        // char 3, fiber in Γ, ω̄ non-ramified: wild candidate
        assert!(!is_tame(
            StableFiberKind::Smooth,
            Some(&in_gamma),
            Some(OmegaStatus::NonRamified),
            false,
            &ctx3
        ));
        // ...but ramified ω̄ restores tameness
        assert!(is_tame(
            StableFiberKind::Smooth,
            Some(&in_gamma),
            Some(OmegaStatus::RamifiedRegularPreimage),
            false,
            &ctx3
        ));

        let ctx5 = LocalContext::new(5).unwrap();
        let not_c0 = SpecialFiberTests {
            gamma_member: false,
            c0_iso: false,
        };
        assert!(is_tame(
            StableFiberKind::Smooth,
            Some(&not_c0),
            Some(OmegaStatus::RamifiedRegularPreimage),
            false,
            &ctx5
        ));
        // char 5, fiber ≅ C0, ω̄ ramified: wild candidate
        let c0 = SpecialFiberTests {
            gamma_member: false,
            c0_iso: true,
        };
        assert!(!is_tame(
            StableFiberKind::Smooth,
            Some(&c0),
            Some(OmegaStatus::RamifiedRegularPreimage),
            false,
            &ctx5
        ));
        // two rational branch points always suffice
        assert!(is_tame(StableFiberKind::Smooth, Some(&c0), None, true, &ctx5));
    }

    #[test]
    fn regime_tame_char3_c000_corner() {
        let ctx3 = LocalContext::new(3).unwrap();
        // two-component shapes are outside the paper in char 3
        assert!(matches!(
            regime_tame(StableFiberKind::TwoSmoothOneNode, None, None, false, &ctx3),
            Err(Error::Char3TwoComponent)
        ));
        // C000 fiber with non-ramified ω̄ is wild in char 3
        assert_eq!(
            regime_tame(
                StableFiberKind::TwoRationalThreeNodes,
                None,
                Some(OmegaStatus::NonRamified),
                false,
                &ctx3
            )
            .unwrap(),
            false
        );
        assert_eq!(
            regime_tame(
                StableFiberKind::TwoRationalThreeNodes,
                None,
                Some(OmegaStatus::RamifiedSingularPreimage),
                false,
                &ctx3
            )
            .unwrap(),
            true
        );
    }

    #[test]
    fn degrees_one_node() {
        // ν(J10) = 2, ν(I12) = 0, n = 1 → e = 2
        let form = roots([0, 1, 2, 3, 4, 7]);
        let inv = compute_invariants(&form);
        let ctx = LocalContext::new(7).unwrap();
        let deg = singularity_degrees(
            StableFiberKind::IrreducibleOneNode,
            &inv,
            ExtValuation::new(1),
            &ctx,
        )
        .unwrap();
        assert_eq!(deg, SingularityDegrees::OneNode { e: 2 });
    }

    #[test]
    fn degrees_two_nodes_sum_identity() {
        let p = 7i64;
        for rs in [[0, p, 1, 1 + p, 2, 3], [0, p, 1, 1 + p * p, 2, 3]] {
            let form = roots(rs);
            let inv = compute_invariants(&form);
            let ctx = LocalContext::new(7).unwrap();
            let deg = singularity_degrees(
                StableFiberKind::IrreducibleTwoNodes,
                &inv,
                ExtValuation::new(1),
                &ctx,
            )
            .unwrap();
            let SingularityDegrees::TwoNodes { e1, e2 } = deg else {
                panic!()
            };
            assert!(e1 <= e2 && e1 >= 1);
            // e1+e2 = ν_L(J10² I4⁻⁵)/2
            let v = ctx
                .val(&(&inv.j10 * &inv.j10 / crate::invariants::pow_rational(&inv.i4, 5)))
                .finite()
                .unwrap();
            assert_eq!(e1 + e2, v / 2);
        }
    }

    #[test]
    fn degrees_three_nodes() {
        let form = roots([0, 7, 1, 8, 2, 9]);
        let inv = compute_invariants(&form);
        let ctx = LocalContext::new(7).unwrap();
        let deg = singularity_degrees(
            StableFiberKind::TwoRationalThreeNodes,
            &inv,
            ExtValuation::new(1),
            &ctx,
        )
        .unwrap();
        assert_eq!(deg, SingularityDegrees::ThreeNodes { e1: 2, e2: 2, e3: 2 });
    }

    #[test]
    fn degrees_two_component_cases() {
        let p = 7i64;
        let ctx = LocalContext::new(7).unwrap();

        let form = roots([0, p, 2 * p, 1, 1 + p, 1 + 2 * p]);
        let inv = compute_invariants(&form);
        let deg = singularity_degrees(
            StableFiberKind::TwoSmoothOneNode,
            &inv,
            ExtValuation::new(1),
            &ctx,
        )
        .unwrap();
        assert_eq!(deg, SingularityDegrees::Intersection { e: 1 });

        let form = roots([0, p, 2 * p, 1, 1 + p, 1 + p + p * p * p]);
        let inv = compute_invariants(&form);
        let deg = singularity_degrees(
            StableFiberKind::OneSmoothOneSingular,
            &inv,
            ExtValuation::new(1),
            &ctx,
        )
        .unwrap();
        assert_eq!(deg, SingularityDegrees::SmoothPlusSingular { e0: 1, e1: 4 });

        let form = roots([0, p, p + p * p, 1, 1 + p, 1 + p + p * p]);
        let inv = compute_invariants(&form);
        let deg = singularity_degrees(
            StableFiberKind::TwoSingularOneNode,
            &inv,
            ExtValuation::new(1),
            &ctx,
        )
        .unwrap();
        let SingularityDegrees::TwoSingular { e0, e1, e2 } = deg else {
            panic!()
        };
        assert_eq!((e1, e2), (2, 2));
        assert!(e0 >= 1);
    }
}
