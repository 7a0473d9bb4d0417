//! Exact rational arithmetic with a normalized discrete valuation.
//!
//! The base field is the rationals equipped with the p-adic valuation ν for
//! an odd prime p; the uniformizer is t = p, ν(t) = 1.  Every membership
//! test of the classification ("∈ R", "∈ 𝔪", "invertible in R") reduces to
//! a comparison of ν against 0.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::ops::Add;

use crate::error::{Error, Result};
use crate::{Frac, Rat};

/// Value of a normalized discrete valuation: an integer or +∞ (ν(0) = +∞).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Val {
    /// ν of a nonzero element.
    Finite(i64),
    /// ν(0); absorbs addition and compares greater than every integer.
    Infinite,
}

impl Val {
    /// The finite value, if any.
    pub fn finite(self) -> Option<i64> {
        match self {
            Val::Finite(v) => Some(v),
            Val::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Val::Infinite)
    }

    /// ν ≥ 0: the element lies in the valuation ring R.
    pub fn in_ring(self) -> bool {
        match self {
            Val::Finite(v) => v >= 0,
            Val::Infinite => true,
        }
    }

    /// ν > 0: the element lies in the maximal ideal 𝔪.
    pub fn in_maximal_ideal(self) -> bool {
        match self {
            Val::Finite(v) => v > 0,
            Val::Infinite => true,
        }
    }

    /// ν = 0: the element is a unit of R.
    pub fn is_unit(self) -> bool {
        self == Val::Finite(0)
    }

    /// Multiply by an integer exponent (ν(x^k) = k·ν(x)); the exponent of an
    /// infinite valuation must be positive for the product to stay defined,
    /// which callers guarantee by checking denominators first.
    pub fn scale(self, k: i64) -> Val {
        match self {
            Val::Finite(v) => Val::Finite(v * k),
            Val::Infinite => Val::Infinite,
        }
    }
}

impl Add for Val {
    type Output = Val;
    fn add(self, rhs: Val) -> Val {
        match (self, rhs) {
            (Val::Finite(a), Val::Finite(b)) => Val::Finite(a + b),
            _ => Val::Infinite,
        }
    }
}

impl PartialOrd for Val {
    fn partial_cmp(&self, other: &Val) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Val {
    fn cmp(&self, other: &Val) -> Ordering {
        match (self, other) {
            (Val::Finite(a), Val::Finite(b)) => a.cmp(b),
            (Val::Finite(_), Val::Infinite) => Ordering::Less,
            (Val::Infinite, Val::Finite(_)) => Ordering::Greater,
            (Val::Infinite, Val::Infinite) => Ordering::Equal,
        }
    }
}

impl std::fmt::Display for Val {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Val::Finite(v) => write!(f, "{v}"),
            Val::Infinite => write!(f, "inf"),
        }
    }
}

/// The base field: ℚ with the p-adic valuation, p an odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalContext {
    p: u64,
}

impl LocalContext {
    /// Build a context for the odd prime `p`.
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::InvalidInput(format!(
                "residue characteristic must be an odd prime, got {p}"
            )));
        }
        Ok(LocalContext { p })
    }

    /// Residue characteristic.
    pub fn prime(&self) -> u64 {
        self.p
    }

    /// ν(x) for an exact rational x.
    pub fn val(&self, x: &Rat) -> Val {
        if x.is_zero() {
            return Val::Infinite;
        }
        let p = BigInt::from(self.p);
        Val::Finite(int_val(x.numer(), &p) - int_val(x.denom(), &p))
    }

    pub fn in_ring(&self, x: &Rat) -> bool {
        self.val(x).in_ring()
    }

    pub fn in_maximal_ideal(&self, x: &Rat) -> bool {
        self.val(x).in_maximal_ideal()
    }

    pub fn is_unit(&self, x: &Rat) -> bool {
        self.val(x).is_unit()
    }

    /// The residue of x in 𝔽_p = R/𝔪, when x ∈ R; `None` for x ∉ R.
    pub fn residue(&self, x: &Rat) -> Option<u64> {
        if x.is_zero() {
            return Some(0);
        }
        if !self.in_ring(x) {
            return None;
        }
        let p = BigInt::from(self.p);
        let num = x.numer().mod_floor(&p);
        let den = x.denom().mod_floor(&p);
        let den_inv = mod_inverse(&den, &p)?;
        let r = (num * den_inv).mod_floor(&p);
        r.try_into().ok()
    }
}

/// ν_p of a nonzero integer.
fn int_val(n: &BigInt, p: &BigInt) -> i64 {
    debug_assert!(!n.is_zero());
    let mut n = n.abs();
    let mut v = 0i64;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        n = q;
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let e = p - BigInt::from(2);
    if a.is_zero() {
        return None;
    }
    Some(a.modpow(&e, p))
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map_or(false, |s| s <= n) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// ν_p(x): free-standing form of [`LocalContext::val`].
pub fn val(x: &Rat, ctx: &LocalContext) -> Val {
    ctx.val(x)
}

/// Least common denominator: the smallest positive integer m with m·v ∈ ℤ
/// for every entry v.
pub fn lcd(values: &[Frac]) -> Result<u32> {
    if values.is_empty() {
        return Err(Error::InvalidInput("lcd of an empty list".into()));
    }
    let mut m: i64 = 1;
    for v in values {
        let d = *v.denom();
        m = m.lcm(&d);
    }
    u32::try_from(m).map_err(|_| Error::InvalidInput("lcd overflow".into()))
}

/// A finite extension L/K tracked by its ramification index n = [L:K];
/// ν_L(x) = n·ν(x) for x in the base field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtValuation {
    n: u32,
}

impl ExtValuation {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1);
        ExtValuation { n }
    }

    /// [L:K].
    pub fn degree(&self) -> u32 {
        self.n
    }

    /// ν_L applied to a base-field valuation.
    pub fn extend(&self, v: Val) -> Val {
        v.scale(self.n as i64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn val_of_zero_is_infinite() {
        let ctx = LocalContext::new(5).unwrap();
        assert_eq!(ctx.val(&Rat::zero()), Val::Infinite);
        assert!(ctx.in_ring(&Rat::zero()));
        assert!(ctx.in_maximal_ideal(&Rat::zero()));
        assert!(!ctx.is_unit(&Rat::zero()));
    }

    #[test]
    fn val_examples() {
        let ctx = LocalContext::new(5).unwrap();
        // 5^2 * 3
        assert_eq!(ctx.val(&q(75, 1)), Val::Finite(2));
        // 9/5 = 3^2 * 5^-1
        assert_eq!(ctx.val(&q(9, 5)), Val::Finite(-1));
        assert_eq!(ctx.val(&Rat::one()), Val::Finite(0));
    }

    #[test]
    fn val_is_multiplicative() {
        let ctx = LocalContext::new(7).unwrap();
        let samples = [q(14, 3), q(-49, 2), q(3, 7), q(5, 1), q(343, 6), q(1, 98)];
        for a in &samples {
            for b in &samples {
                let prod = ctx.val(&(a * b)).finite().unwrap();
                let va = ctx.val(a).finite().unwrap();
                let vb = ctx.val(b).finite().unwrap();
                assert_eq!(prod, va + vb);
                let quot = ctx.val(&(a / b)).finite().unwrap();
                assert_eq!(quot, va - vb);
            }
        }
    }

    #[test]
    fn membership_predicates_consistent() {
        let ctx = LocalContext::new(3).unwrap();
        for x in [q(0, 1), q(3, 1), q(1, 3), q(2, 5), q(9, 2), q(5, 27)] {
            let unit = ctx.is_unit(&x);
            assert_eq!(unit, ctx.in_ring(&x) && !ctx.in_maximal_ideal(&x));
        }
    }

    #[test]
    fn infinite_absorbs_and_dominates() {
        assert_eq!(Val::Infinite + Val::Finite(-3), Val::Infinite);
        assert!(Val::Infinite > Val::Finite(i64::MAX));
        assert_eq!(Val::Finite(2) + Val::Finite(3), Val::Finite(5));
    }

    #[test]
    fn lcd_examples() {
        let f = |n, d| Frac::new(n, d);
        assert_eq!(lcd(&[f(1, 2), f(1, 2)]).unwrap(), 2);
        assert_eq!(lcd(&[f(1, 3), f(1, 2)]).unwrap(), 6);
        assert_eq!(lcd(&[f(2, 1), f(3, 1)]).unwrap(), 1);
        assert_eq!(lcd(&[f(-1, 6), f(3, 10)]).unwrap(), 30);
        assert!(lcd(&[]).is_err());
    }

    #[test]
    fn context_rejects_non_odd_primes() {
        assert!(LocalContext::new(2).is_err());
        assert!(LocalContext::new(9).is_err());
        assert!(LocalContext::new(1).is_err());
        assert!(LocalContext::new(13).is_ok());
    }

    #[test]
    fn ext_valuation_scales() {
        let ext = ExtValuation::new(3);
        assert_eq!(ext.extend(Val::Finite(2)), Val::Finite(6));
        assert_eq!(ext.extend(Val::Infinite), Val::Infinite);
    }

    #[test]
    fn residues() {
        let ctx = LocalContext::new(7).unwrap();
        assert_eq!(ctx.residue(&q(10, 1)), Some(3));
        assert_eq!(ctx.residue(&q(1, 2)), Some(4)); // 2*4 = 8 = 1 mod 7
        assert_eq!(ctx.residue(&q(1, 7)), None);
        assert_eq!(ctx.residue(&q(7, 2)), Some(0));
    }
}
