//! ω-ramification status and tame-extension data (n, r, q, d_K, r_K, d)
//! for the three stable-fiber regimes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{InvariantSet, SexticForm};
use crate::stable::StableFiberKind;
use crate::valuation::{lcd, LocalContext, Val};
use crate::{Frac, Rat};

/// Position of the point ω (x = ∞) relative to the quotient fiber and the
/// double cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OmegaStatus {
    /// ω̄ is a regular point and f is non-ramified above it.
    NonRamified,
    /// f is ramified above the regular point ω̄ with regular preimage.
    RamifiedRegularPreimage,
    /// f is ramified above the regular point ω̄ with singular preimage.
    RamifiedSingularPreimage,
    /// ω̄ itself is a singular point of the quotient fiber (two-component
    /// regime only).
    OmegaSingular,
}

impl OmegaStatus {
    pub fn is_ramified(self) -> bool {
        matches!(
            self,
            OmegaStatus::RamifiedRegularPreimage | OmegaStatus::RamifiedSingularPreimage
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            OmegaStatus::NonRamified => "non-ramified",
            OmegaStatus::RamifiedRegularPreimage => "ramified-regular-preimage",
            OmegaStatus::RamifiedSingularPreimage => "ramified-singular-preimage",
            OmegaStatus::OmegaSingular => "omega-singular",
        }
    }
}

/// The three pipeline regimes, keyed by the shape of the quotient fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    /// Stable fiber smooth.
    Smooth,
    /// Quotient irreducible, stable fiber singular (shapes II, III, IV).
    IrreducibleSingular,
    /// Quotient not irreducible (shapes V, VI, VII).
    NotIrreducible,
}

impl Regime {
    pub fn of(shape: StableFiberKind) -> Regime {
        match shape {
            StableFiberKind::Smooth => Regime::Smooth,
            StableFiberKind::IrreducibleOneNode
            | StableFiberKind::IrreducibleTwoNodes
            | StableFiberKind::TwoRationalThreeNodes => Regime::IrreducibleSingular,
            _ => Regime::NotIrreducible,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Regime::Smooth => "smooth",
            Regime::IrreducibleSingular => "irreducible-singular",
            Regime::NotIrreducible => "not-irreducible",
        }
    }
}

/// Parity of ν(J2), which splits the two-component tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(v: i64) -> Parity {
        if v.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// The tame-extension data: n = [L:K] and the residues describing the
/// Galois action, plus the two-component quantities where defined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamData {
    /// Degree of the extension over which the stable model appears.
    pub n: u32,
    /// r mod n.
    pub r: u32,
    /// q mod n, in the regimes whose tables consume it.
    pub q: Option<u32>,
    /// d_K (two-component regime).
    pub d_k: Option<Frac>,
    /// r_K (ω-singular subcase, and the odd-ν(J2) identity).
    pub r_k: Option<Frac>,
    /// Degree d = n·d_K of the intersection node (two-component regime).
    pub d: Option<i64>,
    /// Parity of ν(J2) (two-component regime).
    pub j2_parity: Option<Parity>,
}

impl RamData {
    fn plain(n: u32, r: u32, q: Option<u32>) -> RamData {
        RamData {
            n,
            r,
            q,
            d_k: None,
            r_k: None,
            d: None,
            j2_parity: None,
        }
    }
}

/// How a degree-5 model was normalized to finite ν(a0).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelChange {
    /// The integral shift x ↦ x + c applied first, if any.
    pub shift: Option<i64>,
    /// Whether the coordinates were reversed (x ↦ 1/x).
    pub reversed: bool,
}

impl ModelChange {
    pub fn identity() -> Self {
        ModelChange {
            shift: None,
            reversed: false,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.shift.is_none() && !self.reversed
    }
}

/// Produce a model with a0 ≠ 0 (finite ν(a0)), which the ramification
/// propositions require.  Degree-6 inputs pass through; degree-5 inputs are
/// reversed, after an integral shift when the constant term also vanishes.
/// Unit values P(c) are preferred so that the normalized ν(a0) is 0 when
/// possible.  The Igusa invariants are untouched by these changes; the
/// affine invariants and (r, q) refer to the normalized model.
pub fn normalize_model(form: &SexticForm, ctx: &LocalContext) -> Result<(SexticForm, ModelChange)> {
    if !form.coeff(0).is_zero() {
        return Ok((form.clone(), ModelChange::identity()));
    }
    if !form.coeff(6).is_zero() {
        // plain reversal: new a0 = old a6
        return Ok((
            form.reversed(),
            ModelChange {
                shift: None,
                reversed: true,
            },
        ));
    }
    let p = ctx.prime();
    let limit = (3 * p).min(p + 8).max(12) as i64;
    let mut fallback: Option<i64> = None;
    for c in 1..=limit {
        let value = form.eval(&Rat::from(BigInt::from(c)));
        if value.is_zero() {
            continue;
        }
        if ctx.is_unit(&value) {
            let shifted = form.shifted(&Rat::from(BigInt::from(c)));
            return Ok((
                shifted.reversed(),
                ModelChange {
                    shift: Some(c),
                    reversed: true,
                },
            ));
        }
        if fallback.is_none() {
            fallback = Some(c);
        }
    }
    if let Some(c) = fallback {
        let shifted = form.shifted(&Rat::from(BigInt::from(c)));
        return Ok((
            shifted.reversed(),
            ModelChange {
                shift: Some(c),
                reversed: true,
            },
        ));
    }
    Err(Error::NormalizationFailed)
}

/// Number of rational points of P¹ over which f: C → P¹ is ramified: the
/// distinct rational roots of P, plus the point at infinity when deg P = 5.
pub fn rational_branch_points(form: &SexticForm) -> u32 {
    let mut count = rational_roots(form).len() as u32;
    if form.degree() == 5 {
        count += 1;
    }
    count
}

/// The distinct rational roots of the form.
pub fn rational_roots(form: &SexticForm) -> Vec<Rat> {
    // clear denominators to a primitive integer polynomial, leading first
    let mut den = BigInt::one();
    for c in form.coeffs() {
        den = den.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = form
        .coeffs()
        .iter()
        .map(|c| (c * Rat::from(den.clone())).to_integer())
        .collect();
    while ints.first().map_or(false, Zero::is_zero) {
        ints.remove(0);
    }
    let mut roots = Vec::new();
    // strip roots at zero
    while ints.last().map_or(false, Zero::is_zero) {
        ints.pop();
        if !roots.iter().any(|r: &Rat| r.is_zero()) {
            roots.push(Rat::zero());
        }
    }
    if ints.len() <= 1 {
        return roots;
    }
    let lead_divs = divisors(ints.first().unwrap());
    let const_divs = divisors(ints.last().unwrap());
    for u in &const_divs {
        for v in &lead_divs {
            for sign in [1i64, -1] {
                let cand = Rat::new(u * BigInt::from(sign), v.clone());
                if roots.contains(&cand) {
                    continue;
                }
                if form.eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots
}

/// All positive divisors of n (n ≠ 0), via trial division plus Pollard rho
/// for any large cofactor.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut m = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let push = |p: BigInt, primes: &mut Vec<(BigInt, u32)>| {
        if let Some(last) = primes.iter_mut().find(|(q, _)| *q == p) {
            last.1 += 1;
        } else {
            primes.push((p, 1));
        }
    };
    let mut d = BigInt::from(2);
    while &d * &d <= m && d < BigInt::from(1 << 20) {
        while (&m % &d).is_zero() {
            m = &m / &d;
            push(d.clone(), &mut primes);
        }
        d += 1;
    }
    if !m.is_one() {
        // factor the remaining cofactor with Pollard rho
        let mut stack = vec![m];
        while let Some(x) = stack.pop() {
            if is_probable_prime(&x) {
                push(x, &mut primes);
            } else if let Some(f) = pollard_rho(&x) {
                stack.push(&x / &f);
                stack.push(f);
            } else {
                // give up on this cofactor; treat it as prime (divisor set
                // stays correct for all candidates it generates)
                push(x, &mut primes);
            }
        }
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d0 in &divs {
            let mut acc = d0.clone();
            next.push(acc.clone());
            for _ in 0..e {
                acc = &acc * &p;
                next.push(acc.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    divs
}

fn is_probable_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for small in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let s = BigInt::from(small);
        if n == &s {
            return true;
        }
        if (n % &s).is_zero() {
            return false;
        }
    }
    // Miller-Rabin with fixed bases
    let one = BigInt::one();
    let n1 = n - &one;
    let mut d = n1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d /= 2;
        s += 1;
    }
    'outer: for base in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigInt::from(base).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2u32), n);
            if x == n1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigInt) -> Option<BigInt> {
    if n.is_even() {
        return Some(BigInt::from(2));
    }
    for c in 1u32..20 {
        let f = |x: &BigInt| (x * x + BigInt::from(c)) % n;
        let mut x = BigInt::from(2u32);
        let mut y = x.clone();
        let mut d = BigInt::one();
        let mut iters = 0u32;
        while d.is_one() && iters < 1 << 18 {
            x = f(&x);
            y = f(&f(&y));
            let diff = (&x - &y).abs();
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
            iters += 1;
        }
        if !d.is_one() && &d != n {
            return Some(d);
        }
    }
    None
}

/// Signed valuation of a monomial in invariants: Σ e·ν(x) with `None` when
/// a negative exponent meets a vanishing invariant.
fn combine(terms: &[(Val, i64)]) -> Option<Val> {
    let mut acc = 0i64;
    let mut inf = false;
    for (v, e) in terms {
        match v {
            Val::Infinite => {
                if *e < 0 {
                    return None;
                }
                if *e > 0 {
                    inf = true;
                }
            }
            Val::Finite(w) => acc += w * e,
        }
    }
    Some(if inf { Val::Infinite } else { Val::Finite(acc) })
}

fn in_r(q: Option<Val>) -> bool {
    q.map_or(false, Val::in_ring)
}

fn in_m(q: Option<Val>) -> bool {
    q.map_or(false, Val::in_maximal_ideal)
}

fn unit(q: Option<Val>) -> bool {
    q.map_or(false, Val::is_unit)
}

struct OmegaVals {
    a0: Val,
    j2: Val,
    j10: Val,
    a3: Val,
    a5: Val,
    b2: Val,
}

fn omega_vals(inv: &InvariantSet, form: &SexticForm, ctx: &LocalContext) -> OmegaVals {
    OmegaVals {
        a0: ctx.val(form.coeff(0)),
        j2: ctx.val(&inv.j2),
        j10: ctx.val(&inv.j10),
        a3: ctx.val(&inv.a3),
        a5: ctx.val(&inv.a5),
        b2: ctx.val(&inv.b2),
    }
}

/// Decide the ω-status for the given regime from the printed valuation
/// conditions.  `j12` must be the valuation of the selected J12 in the
/// irreducible-singular regime, and is ignored otherwise.
///
/// Requires ν(a0) finite (normalize degree-5 models first).
pub fn omega_status(
    inv: &InvariantSet,
    form: &SexticForm,
    ctx: &LocalContext,
    regime: Regime,
    j12: Option<Val>,
) -> Result<OmegaStatus> {
    let v = omega_vals(inv, form, ctx);
    if v.a0.is_infinite() {
        return Err(Error::DegenerateInvariant("a0 (normalize the model first)"));
    }
    match regime {
        Regime::Smooth => {
            let ramified =
                !v.a5.is_infinite() && in_m(combine(&[(v.a0, 20), (v.j10, 1), (v.a5, -6)]));
            Ok(if ramified {
                OmegaStatus::RamifiedRegularPreimage
            } else {
                OmegaStatus::NonRamified
            })
        }
        Regime::IrreducibleSingular => {
            let j12 = j12.ok_or(Error::DegenerateInvariant("J12 (selector required)"))?;
            if j12.is_infinite() {
                return Err(Error::DegenerateInvariant("J12"));
            }
            let non_ram = in_r(combine(&[(v.a0, -6), (v.b2, 9), (j12, -1)]))
                && in_r(combine(&[(v.a0, -120), (v.a5, 36), (j12, -5)]));
            let ram_regular = in_m(combine(&[(v.a0, 120), (v.a5, -36), (j12, 5)]))
                && in_r(combine(&[(v.b2, 60), (v.a5, -12), (j12, -5)]));
            let ram_singular = in_m(combine(&[(v.a0, 6), (v.b2, -9), (j12, 1)]))
                && in_m(combine(&[(v.b2, -60), (v.a5, 12), (j12, 5)]));
            pick_unique(
                &[
                    (OmegaStatus::NonRamified, non_ram),
                    (OmegaStatus::RamifiedRegularPreimage, ram_regular),
                    (OmegaStatus::RamifiedSingularPreimage, ram_singular),
                ],
                "irreducible-singular",
            )
        }
        Regime::NotIrreducible => {
            let first = combine(&[(v.a0, -2), (v.b2, 3), (v.j2, -2)]);
            let second = combine(&[(v.a0, -4), (v.a3, 2), (v.j2, -1)]);
            let third = combine(&[(v.a0, -20), (v.a5, 6), (v.j2, -5)]);
            let non_ram = in_r(first)
                && in_r(second)
                && in_r(third)
                && (unit(second) || unit(third));
            let ram_regular = in_m(combine(&[(v.a0, 20), (v.a5, -6), (v.j2, 5)]))
                && in_r(combine(&[(v.b2, 10), (v.a5, -2), (v.j2, -5)]));
            let ram_singular = in_m(combine(&[(v.a0, 2), (v.b2, -3), (v.j2, 2)]))
                && in_m(combine(&[(v.b2, -10), (v.a5, 2), (v.j2, 5)]));
            let omega_singular = in_r(first) && in_m(second) && in_m(third);
            pick_unique(
                &[
                    (OmegaStatus::NonRamified, non_ram),
                    (OmegaStatus::RamifiedRegularPreimage, ram_regular),
                    (OmegaStatus::RamifiedSingularPreimage, ram_singular),
                    (OmegaStatus::OmegaSingular, omega_singular),
                ],
                "not-irreducible",
            )
        }
    }
}

fn pick_unique(
    options: &[(OmegaStatus, bool)],
    regime: &'static str,
) -> Result<OmegaStatus> {
    let matches: Vec<OmegaStatus> = options
        .iter()
        .filter(|(_, ok)| *ok)
        .map(|(s, _)| *s)
        .collect();
    match matches.as_slice() {
        [one] => Ok(*one),
        _ => Err(Error::IndeterminateOmega(regime)),
    }
}

fn reduce_mod(value: Frac, n: u32) -> Result<u32> {
    if *value.denom() != 1 {
        return Err(Error::NonIntegralDegree("residue", value.to_string()));
    }
    Ok(value.numer().rem_euclid(n as i64) as u32)
}

fn finite_val(v: Option<Val>, what: &'static str) -> Result<i64> {
    match v {
        Some(Val::Finite(x)) => Ok(x),
        _ => Err(Error::DegenerateInvariant(what)),
    }
}

/// (n, r, q) from two defining rationals: n is their least common
/// denominator, r = n·ρ mod n, q = n·σ mod n.
fn n_r_q(rho: Frac, sigma: Frac) -> Result<(u32, u32, u32)> {
    let n = lcd(&[rho, sigma])?;
    let r = reduce_mod(rho * Frac::from(n as i64), n)?;
    let q = reduce_mod(sigma * Frac::from(n as i64), n)?;
    Ok((n, r, q))
}

/// Ramification data in the smooth regime.
pub fn ram_data_smooth(
    inv: &InvariantSet,
    form: &SexticForm,
    ctx: &LocalContext,
    omega: OmegaStatus,
) -> Result<RamData> {
    let v = omega_vals(inv, form, ctx);
    if v.a0.is_infinite() {
        return Err(Error::DegenerateInvariant("a0 (normalize the model first)"));
    }
    let (rho, sigma) = if omega.is_ramified() {
        let v1 = finite_val(combine(&[(v.a5, -2), (v.j10, 1)]), "A5^-2 J10")?;
        let v2 = finite_val(combine(&[(v.a5, -6), (v.j10, 5)]), "A5^-6 J10^5")?;
        (Frac::new(v1, 20), Frac::new(v2, 40))
    } else {
        let u1 = finite_val(combine(&[(v.a0, 10), (v.j10, -1)]), "a0^10 J10^-1")?;
        let u2 = finite_val(combine(&[(v.a0, 5), (v.j10, -1)]), "a0^5 J10^-1")?;
        (Frac::new(u1, 30), Frac::new(u2, 10))
    };
    let (n, r, q) = n_r_q(rho, sigma)?;
    Ok(RamData::plain(n, r, Some(q)))
}

/// Ramification data in the irreducible-singular regime (shapes II–IV).
pub fn ram_data_irreducible_singular(
    inv: &InvariantSet,
    form: &SexticForm,
    ctx: &LocalContext,
    j12: Val,
    omega: OmegaStatus,
) -> Result<RamData> {
    let v = omega_vals(inv, form, ctx);
    if v.a0.is_infinite() {
        return Err(Error::DegenerateInvariant("a0 (normalize the model first)"));
    }
    match omega {
        OmegaStatus::NonRamified => {
            let u1 = finite_val(combine(&[(v.a0, 12), (j12, -1)]), "a0^12 J12^-1")?;
            let u2 = finite_val(combine(&[(v.a0, 6), (j12, -1)]), "a0^6 J12^-1")?;
            let (n, r, q) = n_r_q(Frac::new(u1, 36), Frac::new(u2, 12))?;
            Ok(RamData::plain(n, r, Some(q)))
        }
        OmegaStatus::RamifiedRegularPreimage => {
            let w = finite_val(combine(&[(v.a5, 36), (j12, -25)]), "A5^36 J12^-25")?;
            let sigma = Frac::new(w, 240);
            let n = lcd(&[sigma])?;
            let q = reduce_mod(sigma * Frac::from(n as i64), n)?;
            let r = (-2 * q as i64).rem_euclid(n as i64) as u32;
            Ok(RamData::plain(n, r, Some(q)))
        }
        OmegaStatus::RamifiedSingularPreimage => {
            let u1 = finite_val(combine(&[(v.b2, -6), (j12, 1)]), "B2^-6 J12")?;
            let u2 = finite_val(combine(&[(v.b2, -9), (j12, 1)]), "B2^-9 J12")?;
            let (n, r, q) = n_r_q(Frac::new(u1, 12), Frac::new(u2, 12))?;
            Ok(RamData::plain(n, r, Some(q)))
        }
        OmegaStatus::OmegaSingular => Err(Error::IndeterminateOmega(
            "irreducible-singular regime has no ω-singular case",
        )),
    }
}

/// Ramification data in the two-component regime (shapes V–VII); requires
/// residue characteristic ≠ 3.
pub fn ram_data_not_irreducible(
    inv: &InvariantSet,
    form: &SexticForm,
    ctx: &LocalContext,
    omega: OmegaStatus,
    shape: StableFiberKind,
) -> Result<RamData> {
    if ctx.prime() == 3 {
        return Err(Error::Char3TwoComponent);
    }
    let v = omega_vals(inv, form, ctx);
    if v.a0.is_infinite() {
        return Err(Error::DegenerateInvariant("a0 (normalize the model first)"));
    }
    let j2 = finite_val(Some(v.j2), "J2")?;
    let d_k = match shape {
        StableFiberKind::TwoSmoothOneNode => {
            Frac::new(finite_val(combine(&[(v.j10, 1), (v.j2, -5)]), "J10 J2^-5")?, 12)
        }
        StableFiberKind::OneSmoothOneSingular => Frac::new(
            finite_val(
                combine(&[(ctx.val(&inv.i12), 1), (v.j2, -6)]),
                "I12 J2^-6",
            )?,
            12,
        ),
        StableFiberKind::TwoSingularOneNode => Frac::new(
            finite_val(combine(&[(ctx.val(&inv.i4), 1), (v.j2, -2)]), "I4 J2^-2")?,
            4,
        ),
        _ => {
            return Err(Error::InvalidInput(
                "two-component ramification data requires shapes V, VI or VII".into(),
            ))
        }
    };
    let parity = Parity::of(j2);
    if parity == Parity::Even {
        let (sigma, r_k) = match omega {
            OmegaStatus::NonRamified => (
                Frac::new(finite_val(combine(&[(v.a0, 1), (v.j2, 1)]), "a0 J2")?, 6),
                None,
            ),
            OmegaStatus::RamifiedRegularPreimage => (
                Frac::new(
                    finite_val(combine(&[(v.a5, 2), (v.j2, 1)]), "A5^2 J2")?,
                    8,
                ),
                None,
            ),
            OmegaStatus::RamifiedSingularPreimage => {
                (Frac::new(finite_val(Some(v.b2), "B2")?, 4), None)
            }
            OmegaStatus::OmegaSingular => {
                let r_k = omega_singular_r_k(inv, ctx, v.a0, d_k)?;
                (r_k, Some(r_k))
            }
        };
        let n = lcd(&[d_k, sigma])?;
        let r = reduce_mod(sigma * Frac::from(n as i64), n)?;
        let d = (d_k * Frac::from(n as i64)).to_integer();
        Ok(RamData {
            n,
            r,
            q: None,
            d_k: Some(d_k),
            r_k,
            d: Some(d),
            j2_parity: Some(Parity::Even),
        })
    } else {
        let m = lcd(&[d_k])?;
        let n = 2 * m;
        let r = reduce_mod(d_k * Frac::from(m as i64), n)?;
        let d = (d_k * Frac::from(n as i64)).to_integer();
        // d_K + ν(a0) = 2 r_K in the odd case
        let a0v = finite_val(Some(v.a0), "a0")?;
        let r_k = (d_k + Frac::from(a0v)) / Frac::from(2);
        Ok(RamData {
            n,
            r,
            q: None,
            d_k: Some(d_k),
            r_k: Some(r_k),
            d: Some(d),
            j2_parity: Some(Parity::Odd),
        })
    }
}

fn omega_singular_r_k(
    inv: &InvariantSet,
    ctx: &LocalContext,
    a0: Val,
    d_k: Frac,
) -> Result<Frac> {
    let va2 = ctx.val(&inv.a2);
    let va3 = ctx.val(&inv.a3);
    let compound = &inv.a2 * &inv.a3 - Rat::from(BigInt::from(3)) * &inv.a5;
    let vc = ctx.val(&compound);
    let t1 = d_k / Frac::from(2);
    let t2 = Frac::new(
        finite_val(combine(&[(va2, -3), (va3, 2)]), "A2^-3 A3^2")?,
        8,
    );
    let t3 = Frac::new(
        finite_val(combine(&[(va2, -5), (vc, 2)]), "A2^-5 (A2 A3 - 3 A5)^2")?,
        12,
    );
    let a0v = finite_val(Some(a0), "a0")?;
    Ok(Frac::new(a0v, 2) + t1.min(t2).min(t3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::compute_invariants;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rat {
        Rat::from(BigInt::from(n))
    }

    #[test]
    fn normalize_degree_six_is_identity() {
        let ctx = LocalContext::new(7).unwrap();
        let form = SexticForm::from_i64([1, 0, 0, 0, 0, 0, -1]).unwrap();
        let (normalized, change) = normalize_model(&form, &ctx).unwrap();
        assert!(change.is_identity());
        assert_eq!(normalized, form);
    }

    #[test]
    fn normalize_degree_five_reverses() {
        let ctx = LocalContext::new(7).unwrap();
        // x^5 - x: constant term zero, so shift first
        let form = SexticForm::from_i64([0, 1, 0, 0, 0, -1, 0]).unwrap();
        let (normalized, change) = normalize_model(&form, &ctx).unwrap();
        assert!(change.reversed);
        assert!(!normalized.coeff(0).is_zero());
        // Igusa invariants are untouched
        let before = compute_invariants(&form);
        let after = compute_invariants(&normalized);
        assert_eq!(before.j10, after.j10);
        assert_eq!(before.j2, after.j2);

        // x^5 - 1: constant nonzero, plain reversal
        let form = SexticForm::from_i64([0, 1, 0, 0, 0, 0, -1]).unwrap();
        let (normalized, change) = normalize_model(&form, &ctx).unwrap();
        assert_eq!(change.shift, None);
        assert!(change.reversed);
        assert!(!normalized.coeff(0).is_zero());
    }

    #[test]
    fn rational_root_counting() {
        let g = SexticForm::from_roots(q(2), &[q(0), q(1), q(2), q(3), q(4), q(5)].map(|r| r));
        assert_eq!(rational_branch_points(&g), 6);

        // x^5 - x = x(x-1)(x+1)(x^2+1): roots 0, ±1 plus ω
        let h = SexticForm::from_i64([0, 1, 0, 0, 0, -1, 0]).unwrap();
        assert_eq!(rational_branch_points(&h), 4);

        // irreducible-ish sextic with half-integer root
        let k = SexticForm::from_i64([2, -1, 0, 0, 0, 0, -1]).unwrap();
        let roots = rational_roots(&k);
        for r in &roots {
            assert!(k.eval(r).is_zero());
        }
    }

    #[test]
    fn smooth_omega_status() {
        let ctx = LocalContext::new(7).unwrap();
        // x^6 - 1 has A5 = 0: ω̄ non-ramified
        let form = SexticForm::from_i64([1, 0, 0, 0, 0, 0, -1]).unwrap();
        let inv = compute_invariants(&form);
        assert_eq!(
            omega_status(&inv, &form, &ctx, Regime::Smooth, None).unwrap(),
            OmegaStatus::NonRamified
        );
    }

    #[test]
    fn ram_data_smooth_examples() {
        // good reduction: everything integral, n = 1
        let ctx = LocalContext::new(7).unwrap();
        let form = SexticForm::from_i64([1, 0, 0, 0, 0, 0, -1]).unwrap();
        let inv = compute_invariants(&form);
        let ram = ram_data_smooth(&inv, &form, &ctx, OmegaStatus::NonRamified).unwrap();
        assert_eq!((ram.n, ram.r, ram.q), (1, 0, Some(0)));
    }

    #[test]
    fn n_r_q_frozen_examples() {
        // ν(a0^10 J10^-1)=15, ν(a0^5 J10^-1)=5 → n=2, r=1, q=1
        let (n, r, q) = n_r_q(Frac::new(15, 30), Frac::new(5, 10)).unwrap();
        assert_eq!((n, r, q), (2, 1, 1));
        // ν=10, ν=10 → n=3, r=1, q=0
        let (n, r, q) = n_r_q(Frac::new(10, 30), Frac::new(10, 10)).unwrap();
        assert_eq!((n, r, q), (3, 1, 0));
        // integral ratios → n=1
        let (n, r, q) = n_r_q(Frac::new(0, 30), Frac::new(0, 10)).unwrap();
        assert_eq!((n, r, q), (1, 0, 0));
        // irreducible-singular (a): ν=18, ν=6 → n=2, r=1, q=1
        let (n, r, q) = n_r_q(Frac::new(18, 36), Frac::new(6, 12)).unwrap();
        assert_eq!((n, r, q), (2, 1, 1));
    }

    #[test]
    fn ram_case_b_least_denominator() {
        // ν(A5^36 J12^-25) = 60 → σ = 1/4 → n=4, q=1, r=-2 mod 4 = 2
        let sigma = Frac::new(60, 240);
        let n = lcd(&[sigma]).unwrap();
        assert_eq!(n, 4);
        let q = reduce_mod(sigma * Frac::from(n as i64), n).unwrap();
        assert_eq!(q, 1);
        let r = (-2i64 * q as i64).rem_euclid(n as i64) as u32;
        assert_eq!(r, 2);
    }
}
