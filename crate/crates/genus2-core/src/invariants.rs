//! Igusa, derived, and affine invariants of a binary sextic, plus the
//! case-dependent J12 and the invariant transformation under a quadratic
//! twist.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::igusa_tables::*;
use crate::stable::StableFiberKind;
use crate::Rat;

/// The sextic (or quintic) `P(x) = a0 x^6 + a1 x^5 + ... + a6` defining the
/// curve `y^2 = P(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SexticForm {
    a: [Rat; 7],
}

impl SexticForm {
    /// Build a form from `a0..a6`.  Requires degree 5 or 6, i.e. `a0 ≠ 0` or
    /// `a1 ≠ 0`.
    pub fn new(a: [Rat; 7]) -> Result<Self> {
        if a[0].is_zero() && a[1].is_zero() {
            return Err(Error::InvalidInput(
                "the form must have degree 5 or 6 (a0 ≠ 0 or a1 ≠ 0)".into(),
            ));
        }
        Ok(SexticForm { a })
    }

    pub fn from_i64(a: [i64; 7]) -> Result<Self> {
        Self::new(a.map(|c| Rat::from(BigInt::from(c))))
    }

    /// Monic form with the given roots, scaled by `a0`: `a0·∏(x − rᵢ)`.
    pub fn from_roots(a0: Rat, roots: &[Rat; 6]) -> Self {
        let mut cs = vec![Rat::one()];
        for r in roots {
            let mut next = vec![Rat::zero(); cs.len() + 1];
            for (i, c) in cs.iter().enumerate() {
                next[i] += c;
                next[i + 1] -= c * r;
            }
            cs = next;
        }
        let mut a: [Rat; 7] = Default::default();
        for (i, c) in cs.into_iter().enumerate() {
            a[i] = &a0 * c;
        }
        SexticForm { a }
    }

    pub fn coeffs(&self) -> &[Rat; 7] {
        &self.a
    }

    pub fn coeff(&self, i: usize) -> &Rat {
        &self.a[i]
    }

    /// 6 when `a0 ≠ 0`, otherwise 5.
    pub fn degree(&self) -> u32 {
        if self.a[0].is_zero() {
            5
        } else {
            6
        }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut v = Rat::zero();
        for c in &self.a {
            v = v * x + c;
        }
        v
    }

    /// The scaled form `k·P`.
    pub fn scale(&self, k: &Rat) -> SexticForm {
        SexticForm {
            a: self.a.clone().map(|c| c * k),
        }
    }

    /// Coefficient reversal `x ↦ 1/x`, i.e. `x^6·P(1/x)`.
    pub fn reversed(&self) -> SexticForm {
        let mut a = self.a.clone();
        a.reverse();
        SexticForm { a }
    }

    /// The integral shift `x ↦ x + c`.
    pub fn shifted(&self, c: &Rat) -> SexticForm {
        // Taylor shift by repeated Horner, lowest-degree coefficients first.
        let mut p: Vec<Rat> = self.a.iter().rev().cloned().collect();
        let n = p.len() - 1;
        for k in 0..n {
            for j in (k..n).rev() {
                let add = c * &p[j + 1];
                p[j] += add;
            }
        }
        p.reverse();
        SexticForm {
            a: p.try_into().unwrap(),
        }
    }
}

/// Every invariant attached to one hyperelliptic equation: Igusa `J2..J10`,
/// derived `I2, I4, I6, I8, I12`, affine `A2..A5, B2`.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantSet {
    pub j2: Rat,
    pub j4: Rat,
    pub j6: Rat,
    pub j8: Rat,
    pub j10: Rat,
    pub i2: Rat,
    pub i4: Rat,
    pub i6: Rat,
    pub i8: Rat,
    pub i12: Rat,
    pub a2: Rat,
    pub a3: Rat,
    pub a4: Rat,
    pub a5: Rat,
    pub b2: Rat,
}

fn eval_table(terms: &[(i64, [u8; 7])], den: i64, a: &[Rat; 7]) -> Rat {
    // the tables use exponents up to 10; memoize powers per coefficient
    let mut pows: Vec<Vec<Rat>> = Vec::with_capacity(7);
    for c in a {
        let mut row = vec![Rat::one()];
        for e in 1..=10usize {
            let prev = row[e - 1].clone();
            row.push(prev * c);
        }
        pows.push(row);
    }
    let mut acc = Rat::zero();
    for (c, exps) in terms {
        let mut term = Rat::from(BigInt::from(*c));
        for (i, e) in exps.iter().enumerate() {
            if *e > 0 {
                term *= &pows[i][*e as usize];
            }
        }
        acc += term;
    }
    acc / Rat::from(BigInt::from(den))
}

/// Compute all invariants of the form.
///
/// The Igusa invariants are evaluated from frozen coefficient tables (see
/// `tools/gen_igusa.py`); the derived ones satisfy the exact identities
/// `I4 = J2² − 24·J4`, `4·J8 = J2·J6 − J4²`,
/// `I12 = (J2²J4² − 32J4³ − J2³J6 + 36J2J4J6 − 108J6²)/4`,
/// `I2 = J2/12`, `I6 = J6`, `I8 = J8`.
pub fn compute_invariants(form: &SexticForm) -> InvariantSet {
    let a = form.coeffs();
    let j2 = eval_table(&J2_TERMS, DEN_J2, a);
    let j4 = eval_table(&J4_TERMS, DEN_J4, a);
    let j6 = eval_table(&J6_TERMS, DEN_J6, a);
    let j8 = eval_table(&J8_TERMS, DEN_J8, a);
    let j10 = eval_table(&J10_TERMS, DEN_J10, a);

    let n = |k: i64| Rat::from(BigInt::from(k));
    let i4 = &j2 * &j2 - n(24) * &j4;
    let i12 = (&j2 * &j2 * &j4 * &j4 - n(32) * &j4 * &j4 * &j4 - &j2 * &j2 * &j2 * &j6
        + n(36) * &j2 * &j4 * &j6
        - n(108) * &j6 * &j6)
        / n(4);
    let i2 = &j2 / n(12);

    let (a0, a1, c2, c3, c4, c5) = (&a[0], &a[1], &a[2], &a[3], &a[4], &a[5]);
    let a2 = n(-5) * a1 * a1 + n(12) * a0 * c2;
    let a3 = n(5) * a1 * a1 * a1 + n(9) * a0 * (n(-2) * c2 * a1 + n(3) * a0 * c3);
    let a4 =
        n(-5) * a1 * a1 * a1 * a1 + n(24) * a0 * (c2 * a1 * a1 - n(3) * c3 * a0 * a1 + n(6) * c4 * a0 * a0);
    let a5 = a1 * a1 * a1 * a1 * a1
        + n(3)
            * a0
            * (n(-2) * c2 * a1 * a1 * a1 + n(9) * a0 * c3 * a1 * a1 - n(36) * a0 * a0 * c4 * a1
                + n(108) * a0 * a0 * a0 * c5);
    let b2 = n(2) * c2 * c2 - n(5) * a1 * c3 + n(10) * a0 * c4;

    InvariantSet {
        i6: j6.clone(),
        i8: j8.clone(),
        j2,
        j4,
        j6,
        j8,
        j10,
        i2,
        i4,
        i12,
        a2,
        a3,
        a4,
        a5,
        b2,
    }
}

/// The discriminant of `P`, computed from a Sylvester resultant and hence
/// independent of the Igusa coefficient tables.
///
/// Degree-6 convention: `disc = (−1)^{15}·Res(P, P′)/a0`.  For degree 5 the
/// binary-form convention applies, `a1²·disc₅(P)`, which is the
/// specialization of the sextic-form discriminant at `a0 = 0`.
pub fn discriminant(form: &SexticForm) -> Rat {
    let a = form.coeffs();
    if !a[0].is_zero() {
        let p: Vec<Rat> = a.to_vec();
        let dp = derivative(&p);
        -resultant(&p, &dp) / &a[0]
    } else {
        let p: Vec<Rat> = a[1..].to_vec();
        let dp = derivative(&p);
        resultant(&p, &dp) * &a[1]
    }
}

fn derivative(p: &[Rat]) -> Vec<Rat> {
    let n = p.len() - 1;
    p[..n]
        .iter()
        .enumerate()
        .map(|(i, c)| c * Rat::from(BigInt::from((n - i) as i64)))
        .collect()
}

/// Resultant via the Sylvester matrix; coefficients leading-first, nonzero
/// leading coefficients.
fn resultant(p: &[Rat], q: &[Rat]) -> Rat {
    let n = p.len() - 1;
    let m = q.len() - 1;
    let size = n + m;
    let mut mat = vec![vec![Rat::zero(); size]; size];
    for r in 0..m {
        for (j, c) in p.iter().enumerate() {
            mat[r][r + j] = c.clone();
        }
    }
    for r in 0..n {
        for (j, c) in q.iter().enumerate() {
            mat[m + r][r + j] = c.clone();
        }
    }
    determinant(mat)
}

fn determinant(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pv;
            for c in col..n {
                let sub = &f * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Which degree-12 quantity plays the role of J12 in the ramification data
/// of the irreducible-quotient regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum J12Source {
    /// Fiber irreducible with one node (elliptic normalization).
    I12,
    /// Fiber irreducible and rational (two nodes).
    I4Cubed,
    /// Fiber is the union of two rational curves through three points.
    J2Sixth,
}

/// The selected J12 together with its provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct J12Selector {
    pub value: Rat,
    pub source: J12Source,
}

/// Select J12 for the stable-fiber shape: `I12` for an irreducible fiber
/// with one node, `I4³` for the irreducible rational fiber (two nodes),
/// `J2⁶` for the two-rational-curves fiber.  Undefined for the two-component
/// shapes.
pub fn select_j12(inv: &InvariantSet, shape: StableFiberKind) -> Result<J12Selector> {
    match shape {
        StableFiberKind::IrreducibleOneNode => Ok(J12Selector {
            value: inv.i12.clone(),
            source: J12Source::I12,
        }),
        StableFiberKind::IrreducibleTwoNodes => Ok(J12Selector {
            value: &inv.i4 * &inv.i4 * &inv.i4,
            source: J12Source::I4Cubed,
        }),
        StableFiberKind::TwoRationalThreeNodes => Ok(J12Selector {
            value: pow_rational(&inv.j2, 6),
            source: J12Source::J2Sixth,
        }),
        other => Err(Error::J12Undefined(other.name())),
    }
}

/// x^e for a small nonnegative exponent.
pub fn pow_rational(x: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// Invariants of the twisted equation `y² = D·P(x)`: every invariant of
/// homogeneous degree k in the coefficients picks up the factor `D^k`.
pub fn twist_invariants(inv: &InvariantSet, d: &Rat) -> Result<InvariantSet> {
    if d.is_zero() {
        return Err(Error::InvalidInput("twist by D = 0".into()));
    }
    let dk = |k: u32| pow_rational(d, k);
    Ok(InvariantSet {
        j2: &inv.j2 * dk(2),
        j4: &inv.j4 * dk(4),
        j6: &inv.j6 * dk(6),
        j8: &inv.j8 * dk(8),
        j10: &inv.j10 * dk(10),
        i2: &inv.i2 * dk(2),
        i4: &inv.i4 * dk(4),
        i6: &inv.i6 * dk(6),
        i8: &inv.i8 * dk(8),
        i12: &inv.i12 * dk(12),
        a2: &inv.a2 * dk(2),
        a3: &inv.a3 * dk(3),
        a4: &inv.a4 * dk(4),
        a5: &inv.a5 * dk(5),
        b2: &inv.b2 * dk(2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stable::StableFiberKind;

    fn q(n: i64) -> Rat {
        Rat::from(BigInt::from(n))
    }

    fn form(a: [i64; 7]) -> SexticForm {
        SexticForm::from_i64(a).unwrap()
    }

    #[test]
    fn affine_invariant_hand_values() {
        // A2 = -5 a1^2 + 12 a0 a2 at a0=1, a1=0, a2=1
        let inv = compute_invariants(&form([1, 0, 1, 0, 0, 0, 0]));
        assert_eq!(inv.a2, q(12));
        // A3 = 5 a1^3 + 9 a0 (-2 a2 a1 + 3 a0 a3) at a0=a1=1, a2=a3=0
        let inv = compute_invariants(&form([1, 1, 0, 0, 0, 1, 0]));
        assert_eq!(inv.a3, q(5));
    }

    #[test]
    fn printed_identities_hold() {
        for a in [
            [1, 2, -3, 0, 5, 1, -7],
            [2, 0, 0, 1, 0, 0, 9],
            [0, 1, 4, 4, -2, 3, 6],
        ] {
            let inv = compute_invariants(&form(a));
            assert_eq!(inv.i4, &inv.j2 * &inv.j2 - q(24) * &inv.j4);
            assert_eq!(q(4) * &inv.j8, &inv.j2 * &inv.j6 - &inv.j4 * &inv.j4);
            assert_eq!(inv.i2, &inv.j2 / q(12));
            assert_eq!(inv.i6, inv.j6);
            assert_eq!(inv.i8, inv.j8);
        }
    }

    #[test]
    fn homogeneity() {
        let p = form([3, -1, 2, 7, 0, 4, -5]);
        let inv = compute_invariants(&p);
        for lam in [q(2), Rat::new(BigInt::from(-3), BigInt::from(5))] {
            let scaled = compute_invariants(&p.scale(&lam));
            assert_eq!(scaled.j2, &inv.j2 * pow_rational(&lam, 2));
            assert_eq!(scaled.j4, &inv.j4 * pow_rational(&lam, 4));
            assert_eq!(scaled.j6, &inv.j6 * pow_rational(&lam, 6));
            assert_eq!(scaled.j8, &inv.j8 * pow_rational(&lam, 8));
            assert_eq!(scaled.j10, &inv.j10 * pow_rational(&lam, 10));
            assert_eq!(scaled.i12, &inv.i12 * pow_rational(&lam, 12));
            assert_eq!(scaled.a5, &inv.a5 * pow_rational(&lam, 5));
            assert_eq!(scaled.b2, &inv.b2 * pow_rational(&lam, 2));
        }
    }

    #[test]
    fn discriminant_of_x6_minus_1() {
        // resultant oracle: disc(x^n + c) = (-1)^{n(n-1)/2} n^n c^{n-1},
        // so disc(x^6 - 1) = (-1)^15 · 6^6 · (-1)^5 = 6^6
        let d = discriminant(&form([1, 0, 0, 0, 0, 0, -1]));
        assert_eq!(d, q(46656));
    }

    #[test]
    fn discriminant_vanishes_on_repeated_root() {
        // (x-1)^2 (x^4 + x + 1)
        let p = SexticForm::from_roots(
            q(1),
            &[q(1), q(1), q(2), q(3), q(4), q(5)].map(|r| r),
        );
        assert!(discriminant(&p).is_zero());
        let inv = compute_invariants(&p);
        assert!(inv.j10.is_zero());
    }

    #[test]
    fn j10_is_disc_over_4096() {
        for a in [
            [1, 2, -3, 0, 5, 1, -7],
            [1, 0, 0, 0, 0, 0, -1],
            [0, 1, 0, 0, 0, -1, 0], // x^5 - x
            [0, 2, 1, 0, 0, 0, -7], // quintic
            [5, -2, 3, 3, -1, 1, 2],
        ] {
            let p = form(a);
            let inv = compute_invariants(&p);
            assert_eq!(q(4096) * &inv.j10, discriminant(&p));
        }
    }

    #[test]
    fn shift_and_reverse_are_correct() {
        let p = form([1, 2, -3, 0, 5, 1, -7]);
        let c = q(3);
        let sh = p.shifted(&c);
        for x in [q(0), q(1), q(-2), q(5)] {
            assert_eq!(sh.eval(&x), p.eval(&(&x + &c)));
        }
        let rev = p.reversed();
        let x = q(2);
        // x^6 P(1/x)
        assert_eq!(
            rev.eval(&x),
            pow_rational(&x, 6) * p.eval(&(Rat::one() / &x))
        );
    }

    #[test]
    fn igusa_invariants_are_unimodular_invariant() {
        // J's are invariant under x -> x + c and x -> 1/x
        let p = form([1, 2, -3, 0, 5, 1, -7]);
        let inv = compute_invariants(&p);
        let shifted = compute_invariants(&p.shifted(&q(2)));
        let reversed = compute_invariants(&p.reversed());
        for (a, b) in [(&inv, &shifted), (&inv, &reversed)] {
            assert_eq!(a.j2, b.j2);
            assert_eq!(a.j4, b.j4);
            assert_eq!(a.j6, b.j6);
            assert_eq!(a.j8, b.j8);
            assert_eq!(a.j10, b.j10);
        }
    }

    #[test]
    fn twist_matches_recompute() {
        let p = form([1, 2, -3, 0, 5, 1, -7]);
        let inv = compute_invariants(&p);
        for d in [q(7), Rat::new(BigInt::from(3), BigInt::from(2)), q(-1)] {
            let twisted = twist_invariants(&inv, &d).unwrap();
            let recomputed = compute_invariants(&p.scale(&d));
            assert_eq!(twisted, recomputed);
            // untwisting brings everything back
            let back = twist_invariants(&twisted, &(Rat::one() / &d)).unwrap();
            assert_eq!(back, inv);
        }
        assert!(twist_invariants(&inv, &Rat::zero()).is_err());
    }

    #[test]
    fn j12_selection() {
        let inv = compute_invariants(&form([1, 2, -3, 0, 5, 1, -7]));
        let s = select_j12(&inv, StableFiberKind::IrreducibleOneNode).unwrap();
        assert_eq!(s.source, J12Source::I12);
        assert_eq!(s.value, inv.i12);
        let s = select_j12(&inv, StableFiberKind::IrreducibleTwoNodes).unwrap();
        assert_eq!(s.source, J12Source::I4Cubed);
        assert_eq!(s.value, pow_rational(&inv.i4, 3));
        let s = select_j12(&inv, StableFiberKind::TwoRationalThreeNodes).unwrap();
        assert_eq!(s.source, J12Source::J2Sixth);
        assert_eq!(s.value, pow_rational(&inv.j2, 6));
        assert!(select_j12(&inv, StableFiberKind::TwoSmoothOneNode).is_err());
    }

    /// Root-based dual route for the Igusa tables: the frozen coefficient
    /// tables must reproduce the classical symmetric root-difference
    /// definitions on split forms.
    #[test]
    fn tables_match_root_definitions() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..12 {
            let mut roots: [Rat; 6] = Default::default();
            loop {
                let picks: Vec<i64> = (0..6).map(|_| rng.gen_range(-10..=10)).collect();
                let mut sorted = picks.clone();
                sorted.dedup();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() == 6 {
                    for (slot, v) in roots.iter_mut().zip(picks) {
                        *slot = q(v);
                    }
                    break;
                }
            }
            let a0 = q(rng.gen_range(1..=4));
            let p = SexticForm::from_roots(a0.clone(), &roots);
            let inv = compute_invariants(&p);

            let d = |i: usize, j: usize| &roots[i] - &roots[j];
            // IC2 over the 15 pairings
            let mut ic2 = Rat::zero();
            let pairings: [[usize; 6]; 15] = [
                [0, 1, 2, 3, 4, 5],
                [0, 1, 2, 4, 3, 5],
                [0, 1, 2, 5, 3, 4],
                [0, 2, 1, 3, 4, 5],
                [0, 2, 1, 4, 3, 5],
                [0, 2, 1, 5, 3, 4],
                [0, 3, 1, 2, 4, 5],
                [0, 3, 1, 4, 2, 5],
                [0, 3, 1, 5, 2, 4],
                [0, 4, 1, 2, 3, 5],
                [0, 4, 1, 3, 2, 5],
                [0, 4, 1, 5, 2, 3],
                [0, 5, 1, 2, 3, 4],
                [0, 5, 1, 3, 2, 4],
                [0, 5, 1, 4, 2, 3],
            ];
            for pm in pairings {
                let t = d(pm[0], pm[1]) * d(pm[2], pm[3]) * d(pm[4], pm[5]);
                ic2 += &t * &t;
            }
            ic2 *= pow_rational(&a0, 2);
            assert_eq!(inv.j2, ic2 / q(8));

            // IC10 = a0^10 prod (ri - rj)^2 = 4096 J10
            let mut ic10 = pow_rational(&a0, 10);
            for i in 0..6 {
                for j in (i + 1)..6 {
                    let t = d(i, j);
                    ic10 *= &t * &t;
                }
            }
            assert_eq!(q(4096) * &inv.j10, ic10);

            // IC4 over the 10 triple splits pins J4 via I4 = J2^2 - 24 J4
            let mut ic4 = Rat::zero();
            let tri = |t: &[usize; 3]| {
                let v = d(t[0], t[1]) * d(t[1], t[2]) * d(t[2], t[0]);
                &v * &v
            };
            let splits: [([usize; 3], [usize; 3]); 10] = [
                ([0, 1, 2], [3, 4, 5]),
                ([0, 1, 3], [2, 4, 5]),
                ([0, 1, 4], [2, 3, 5]),
                ([0, 1, 5], [2, 3, 4]),
                ([0, 2, 3], [1, 4, 5]),
                ([0, 2, 4], [1, 3, 5]),
                ([0, 2, 5], [1, 3, 4]),
                ([0, 3, 4], [1, 2, 5]),
                ([0, 3, 5], [1, 2, 4]),
                ([0, 4, 5], [1, 2, 3]),
            ];
            for (t1, t2) in &splits {
                ic4 += tri(t1) * tri(t2);
            }
            ic4 *= pow_rational(&a0, 4);
            let i4_expected = (q(4) * &inv.j2 * &inv.j2 - &ic4) / q(96) * q(-24)
                + &inv.j2 * &inv.j2;
            assert_eq!(inv.i4, i4_expected);
            assert_eq!(inv.j4, (q(4) * &inv.j2 * &inv.j2 - ic4) / q(96));
        }
    }
}
