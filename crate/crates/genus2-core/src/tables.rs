//! The tame reduction-type tables and the wild-case results, encoded as
//! declarative row lists with disjoint predicates, plus the symbol grammar.
//!
//! Every row carries the reduction type of the minimal regular model of the
//! curve and of its quadratic twist (ν(D) = 1), with the twist column's
//! parameters expressed in the untwisted quantities exactly as in the
//! source tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ramification::{OmegaStatus, Parity, RamData};
use crate::stable::{SingularityDegrees, StableFiberKind};
use crate::valuation::{LocalContext, Val};
use crate::Rat;

/// One component name of a reduction-type symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[allow(clippy::upper_case_acronyms)]
pub enum Atom {
    I,
    Istar,
    II,
    IIstar,
    III,
    IIIstar,
    IV,
    IVstar,
    V,
    Vstar,
    VI,
    VII,
    VIIstar,
    VIII,
    IX,
    TwoI,
    TwoIstar,
    TwoII,
    TwoIIstar,
    TwoIII,
    TwoIIIstar,
    TwoIV,
    TwoIVstar,
}

impl Atom {
    pub fn as_str(self) -> &'static str {
        match self {
            Atom::I => "I",
            Atom::Istar => "Istar",
            Atom::II => "II",
            Atom::IIstar => "IIstar",
            Atom::III => "III",
            Atom::IIIstar => "IIIstar",
            Atom::IV => "IV",
            Atom::IVstar => "IVstar",
            Atom::V => "V",
            Atom::Vstar => "Vstar",
            Atom::VI => "VI",
            Atom::VII => "VII",
            Atom::VIIstar => "VIIstar",
            Atom::VIII => "VIII",
            Atom::IX => "IX",
            Atom::TwoI => "2I",
            Atom::TwoIstar => "2Istar",
            Atom::TwoII => "2II",
            Atom::TwoIIstar => "2IIstar",
            Atom::TwoIII => "2III",
            Atom::TwoIIIstar => "2IIIstar",
            Atom::TwoIV => "2IV",
            Atom::TwoIVstar => "2IVstar",
        }
    }

    fn from_str(s: &str) -> Option<Atom> {
        Some(match s {
            "I" => Atom::I,
            "Istar" => Atom::Istar,
            "II" => Atom::II,
            "IIstar" => Atom::IIstar,
            "III" => Atom::III,
            "IIIstar" => Atom::IIIstar,
            "IV" => Atom::IV,
            "IVstar" => Atom::IVstar,
            "V" => Atom::V,
            "Vstar" => Atom::Vstar,
            "VI" => Atom::VI,
            "VII" => Atom::VII,
            "VIIstar" => Atom::VIIstar,
            "VIII" => Atom::VIII,
            "IX" => Atom::IX,
            "2I" => Atom::TwoI,
            "2Istar" => Atom::TwoIstar,
            "2II" => Atom::TwoII,
            "2IIstar" => Atom::TwoIIstar,
            "2III" => Atom::TwoIII,
            "2IIIstar" => Atom::TwoIIIstar,
            "2IV" => Atom::TwoIV,
            "2IVstar" => Atom::TwoIVstar,
            _ => return None,
        })
    }
}

/// A structured reduction-type symbol: a family (one or two atoms joined by
/// "-") and its integer parameters.
///
/// Grammar (bit-exact): atoms in ASCII joined by "-", parameters as decimal
/// integers in one bracket list, e.g. `Istar[2,0,0]`, `IX[3]`, `IV-II[5]`,
/// `I-Istar[0,4,7]`, `2I[2,0]`, `II` (no parameters).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReductionSymbol {
    pub atoms: Vec<Atom>,
    pub params: Vec<i64>,
}

impl ReductionSymbol {
    pub fn new(atoms: Vec<Atom>, params: Vec<i64>) -> Self {
        ReductionSymbol { atoms, params }
    }
}

impl std::fmt::Display for ReductionSymbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let family: Vec<&str> = self.atoms.iter().map(|a| a.as_str()).collect();
        write!(f, "{}", family.join("-"))?;
        if !self.params.is_empty() {
            let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
            write!(f, "[{}]", ps.join(","))?;
        }
        Ok(())
    }
}

impl std::str::FromStr for ReductionSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (family, params) = match s.find('[') {
            None => (s, Vec::new()),
            Some(i) => {
                let rest = &s[i + 1..];
                let Some(end) = rest.find(']') else {
                    return Err(Error::SymbolParse(format!("missing ']' in {s:?}")));
                };
                if !rest[end + 1..].trim().is_empty() {
                    return Err(Error::SymbolParse(format!("trailing junk in {s:?}")));
                }
                let body = rest[..end].trim();
                let params: Vec<i64> = if body.is_empty() {
                    Vec::new()
                } else {
                    body.split(',')
                        .map(|p| {
                            p.trim()
                                .parse::<i64>()
                                .map_err(|_| Error::SymbolParse(format!("bad parameter in {s:?}")))
                        })
                        .collect::<Result<_>>()?
                };
                (&s[..i], params)
            }
        };
        let atoms: Vec<Atom> = family
            .split('-')
            .map(|a| {
                Atom::from_str(a.trim())
                    .ok_or_else(|| Error::SymbolParse(format!("unknown family atom {a:?}")))
            })
            .collect::<Result<_>>()?;
        if atoms.is_empty() {
            return Err(Error::SymbolParse("empty family".into()));
        }
        Ok(ReductionSymbol { atoms, params })
    }
}

/// Named quantities the table templates may reference.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Var {
    /// Degree of the distinguished node (the unique node, or the
    /// intersection point in the two-component regime).
    D,
    /// Sorted non-intersection node degrees, ascending.
    S1,
    S2,
    S3,
    /// The repeated degree and the remaining one, when exactly two of the
    /// three node degrees agree.
    Rep,
    Oth,
    /// q = ν(J2·J10·I12⁻¹) of the one-elliptic-one-rational disambiguation.
    QRem,
    /// The residue r itself (odd-ν(J2) doubled types).
    R,
}

/// Template parameter: a constant or (var + add)/den with exact division.
#[derive(Debug, Clone, Copy)]
pub(crate) enum PExpr {
    C(i64),
    A(Var, i64, i64),
}

const fn c(v: i64) -> PExpr {
    PExpr::C(v)
}

const fn v(var: Var) -> PExpr {
    PExpr::A(var, 0, 1)
}

const fn a(var: Var, add: i64, den: i64) -> PExpr {
    PExpr::A(var, add, den)
}

/// Values bound to the template variables for one lookup.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Vars {
    d: i64,
    s1: i64,
    s2: i64,
    s3: i64,
    rep: i64,
    oth: i64,
    q_rem: i64,
    r: i64,
}

impl PExpr {
    fn eval(&self, vars: &Vars) -> Result<i64> {
        match *self {
            PExpr::C(k) => Ok(k),
            PExpr::A(var, add, den) => {
                let base = match var {
                    Var::D => vars.d,
                    Var::S1 => vars.s1,
                    Var::S2 => vars.s2,
                    Var::S3 => vars.s3,
                    Var::Rep => vars.rep,
                    Var::Oth => vars.oth,
                    Var::QRem => vars.q_rem,
                    Var::R => vars.r,
                };
                let num = base + add;
                if num % den != 0 {
                    return Err(Error::ParamConstraint(format!(
                        "({base} + {add}) not divisible by {den}"
                    )));
                }
                Ok(num / den)
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Template {
    atoms: &'static [Atom],
    params: &'static [PExpr],
}

const fn t(atoms: &'static [Atom], params: &'static [PExpr]) -> Template {
    Template { atoms, params }
}

impl Template {
    fn instantiate(&self, vars: &Vars) -> Result<ReductionSymbol> {
        let params: Vec<i64> = self
            .params
            .iter()
            .map(|p| p.eval(vars))
            .collect::<Result<_>>()?;
        Ok(ReductionSymbol {
            atoms: self.atoms.to_vec(),
            params,
        })
    }
}

/// Residue constraint on r, q or d (mod n unless stated otherwise).
#[derive(Debug, Clone, Copy)]
pub(crate) enum Res {
    Any,
    In(&'static [u32]),
}

impl Res {
    fn matches(&self, value: u32) -> bool {
        match self {
            Res::Any => true,
            Res::In(set) => set.contains(&value),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum OmegaSel {
    Any,
    /// f⁻¹(ω̄) regular: non-ramified ω̄ or ramified with regular preimage.
    RegularPreimage,
    /// f⁻¹(ω̄) singular.
    SingularPreimage,
}

impl OmegaSel {
    fn matches(&self, omega: OmegaStatus) -> bool {
        match self {
            OmegaSel::Any => true,
            OmegaSel::RegularPreimage => matches!(
                omega,
                OmegaStatus::NonRamified | OmegaStatus::RamifiedRegularPreimage
            ),
            OmegaSel::SingularPreimage => {
                matches!(omega, OmegaStatus::RamifiedSingularPreimage)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ParSel {
    Any,
    Even,
    Odd,
}

impl ParSel {
    fn matches(&self, parity: Option<Parity>) -> bool {
        match self {
            ParSel::Any => true,
            ParSel::Even => parity == Some(Parity::Even),
            ParSel::Odd => parity == Some(Parity::Odd),
        }
    }
}

/// The one-elliptic-one-rational n = 2, d odd disambiguation: the fiber's
/// type is the `First` symbol when (E1 smooth and r even) or (E1 singular
/// and r odd), and the `Second` symbol otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum RemarkSel {
    Any,
    First,
    Second,
}

/// Structural requirement on the non-intersection node degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum DegShape {
    Any,
    /// All listed degrees equal.
    AllEqual,
    /// Exactly two of the three equal (binding Rep/Oth).
    TwoEqual,
}

/// One table row: a predicate over (n, r, q, d, ω, parity, remark) and the
/// symbol templates for X and X^χ.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Row {
    pub(crate) n: u32,
    r: Res,
    q: Res,
    d: Res,
    /// Paired (r, q) constraints, overriding `r`/`q` when present.
    rq: Option<&'static [(u32, u32)]>,
    /// Residue of r mod n/2 (odd-ν(J2) doubled types).
    r_half: Res,
    omega: OmegaSel,
    parity: ParSel,
    pub(crate) remark: RemarkSel,
    deg_shape: DegShape,
    pub(crate) x: Template,
    pub(crate) chi: Template,
}

impl Row {
    const fn new(n: u32, x: Template, chi: Template) -> Row {
        Row {
            n,
            r: Res::Any,
            q: Res::Any,
            d: Res::Any,
            rq: None,
            r_half: Res::Any,
            omega: OmegaSel::Any,
            parity: ParSel::Any,
            remark: RemarkSel::Any,
            deg_shape: DegShape::Any,
            x,
            chi,
        }
    }

    const fn r(mut self, set: &'static [u32]) -> Row {
        self.r = Res::In(set);
        self
    }

    const fn q(mut self, set: &'static [u32]) -> Row {
        self.q = Res::In(set);
        self
    }

    const fn d(mut self, set: &'static [u32]) -> Row {
        self.d = Res::In(set);
        self
    }

    const fn rq(mut self, pairs: &'static [(u32, u32)]) -> Row {
        self.rq = Some(pairs);
        self
    }

    const fn r_half(mut self, set: &'static [u32]) -> Row {
        self.r_half = Res::In(set);
        self
    }

    const fn omega(mut self, sel: OmegaSel) -> Row {
        self.omega = sel;
        self
    }

    const fn parity(mut self, sel: ParSel) -> Row {
        self.parity = sel;
        self
    }

    const fn remark(mut self, sel: RemarkSel) -> Row {
        self.remark = sel;
        self
    }

    const fn degs(mut self, shape: DegShape) -> Row {
        self.deg_shape = shape;
        self
    }

    pub(crate) fn matches_key(&self, key: &MatchKey) -> bool {
        if self.n != key.n {
            return false;
        }
        if let Some(pairs) = self.rq {
            let Some(q) = key.q else { return false };
            if !pairs.contains(&(key.r, q)) {
                return false;
            }
        } else {
            if !self.r.matches(key.r) {
                return false;
            }
            if let Res::In(_) = self.q {
                let Some(q) = key.q else { return false };
                if !self.q.matches(q) {
                    return false;
                }
            }
        }
        if let Res::In(_) = self.d {
            let Some(dm) = key.d_mod else { return false };
            if !self.d.matches(dm) {
                return false;
            }
        }
        if let Res::In(_) = self.r_half {
            if !self.r_half.matches(key.r % (self.n / 2).max(1)) {
                return false;
            }
        }
        if !self.omega.matches(key.omega) {
            return false;
        }
        if !self.parity.matches(key.parity) {
            return false;
        }
        true
    }

    pub(crate) fn check_deg_shape(&self, degs: &[i64]) -> Result<()> {
        match self.deg_shape {
            DegShape::Any => Ok(()),
            DegShape::AllEqual => {
                if degs.windows(2).all(|w| w[0] == w[1]) {
                    Ok(())
                } else {
                    Err(Error::ParamConstraint(format!(
                        "row requires equal node degrees, got {degs:?}"
                    )))
                }
            }
            DegShape::TwoEqual => {
                if repeated_pair(degs).is_some() {
                    Ok(())
                } else {
                    Err(Error::ParamConstraint(format!(
                        "row requires a repeated node degree, got {degs:?}"
                    )))
                }
            }
        }
    }
}

fn repeated_pair(degs: &[i64]) -> Option<(i64, i64)> {
    if degs.len() != 3 {
        return None;
    }
    let (a, b, c) = (degs[0], degs[1], degs[2]);
    if a == b {
        Some((a, c))
    } else if b == c {
        Some((b, a))
    } else if a == c {
        Some((a, b))
    } else {
        None
    }
}

/// Everything a table lookup needs.
#[derive(Debug, Clone)]
pub struct LookupInput {
    pub shape: StableFiberKind,
    pub ram: RamData,
    pub degrees: Option<SingularityDegrees>,
    /// Whether the component E1 (the one with ω̄ in its image) is smooth;
    /// required only by the one-elliptic-one-rational n = 2, d odd rows.
    pub e1_smooth: Option<bool>,
    /// ν(J2·J10·I12⁻¹), consumed by the same rows.
    pub q_remark: Option<i64>,
    pub omega: OmegaStatus,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct MatchKey {
    pub n: u32,
    pub r: u32,
    pub q: Option<u32>,
    pub d_mod: Option<u32>,
    pub parity: Option<Parity>,
    pub omega: OmegaStatus,
    pub remark_first: Option<bool>,
}

use Atom::*;
use Var::*;

pub(crate) static SMOOTH_ROWS: [Row; 18] = [
    Row::new(1, t(&[I], &[c(0), c(0), c(0)]), t(&[Istar], &[c(0), c(0), c(0)])),
    Row::new(2, t(&[Istar], &[c(0), c(0), c(0)]), t(&[I], &[c(0), c(0), c(0)])).r(&[0]),
    Row::new(2, t(&[II], &[]), t(&[II], &[])).r(&[1]),
    Row::new(3, t(&[III], &[]), t(&[IV], &[])),
    Row::new(4, t(&[VI], &[]), t(&[VI], &[])),
    Row::new(5, t(&[IX], &[c(3)]), t(&[VIII], &[c(1)])).r(&[1]),
    Row::new(5, t(&[IX], &[c(1)]), t(&[VIII], &[c(3)])).r(&[2]),
    Row::new(5, t(&[IX], &[c(4)]), t(&[VIII], &[c(2)])).r(&[3]),
    Row::new(5, t(&[IX], &[c(2)]), t(&[VIII], &[c(4)])).r(&[4]),
    Row::new(6, t(&[V], &[]), t(&[Vstar], &[])).rq(&[(1, 0), (5, 3)]),
    Row::new(6, t(&[Vstar], &[]), t(&[V], &[])).rq(&[(1, 3), (5, 0)]),
    Row::new(6, t(&[IV], &[]), t(&[III], &[])).r(&[2, 4]),
    Row::new(8, t(&[VIIstar], &[]), t(&[VII], &[])).q(&[1, 3]),
    Row::new(8, t(&[VII], &[]), t(&[VIIstar], &[])).q(&[5, 7]),
    Row::new(10, t(&[VIII], &[c(1)]), t(&[IX], &[c(3)])).r(&[2]),
    Row::new(10, t(&[VIII], &[c(3)]), t(&[IX], &[c(1)])).r(&[4]),
    Row::new(10, t(&[VIII], &[c(2)]), t(&[IX], &[c(4)])).r(&[6]),
    Row::new(10, t(&[VIII], &[c(4)]), t(&[IX], &[c(2)])).r(&[8]),
];

pub(crate) static ONE_NODE_ROWS: [Row; 12] = [
    Row::new(1, t(&[I], &[v(D), c(0), c(0)]), t(&[Istar], &[v(D), c(0), c(0)])),
    Row::new(
        2,
        t(&[Istar], &[a(D, 0, 2), c(0), c(0)]),
        t(&[I], &[a(D, 0, 2), c(0), c(0)]),
    )
    .r(&[0]),
    Row::new(
        2,
        t(&[IIstar], &[a(D, 0, 2), c(0)]),
        t(&[II], &[a(D, 0, 2), c(0)]),
    )
    .r(&[1])
    .q(&[0]),
    Row::new(
        2,
        t(&[II], &[a(D, 0, 2), c(0)]),
        t(&[IIstar], &[a(D, 0, 2), c(0)]),
    )
    .r(&[1])
    .q(&[1]),
    Row::new(
        3,
        t(&[IV, II], &[a(D, -2, 3)]),
        t(&[IIstar, IIstar], &[a(D, -2, 3)]),
    )
    .r(&[1]),
    Row::new(
        3,
        t(&[IVstar, II], &[a(D, -1, 3)]),
        t(&[II, IIstar], &[a(D, -1, 3)]),
    )
    .r(&[2]),
    Row::new(
        4,
        t(&[III, II], &[a(D, -2, 4)]),
        t(&[IIIstar, IIstar], &[a(D, -2, 4)]),
    )
    .r(&[1])
    .q(&[1]),
    Row::new(
        4,
        t(&[IIIstar, IIstar], &[a(D, -2, 4)]),
        t(&[III, II], &[a(D, -2, 4)]),
    )
    .r(&[1])
    .q(&[3]),
    Row::new(
        4,
        t(&[III, IIstar], &[a(D, -2, 4)]),
        t(&[IIIstar, II], &[a(D, -2, 4)]),
    )
    .r(&[3])
    .q(&[1]),
    Row::new(
        4,
        t(&[IIIstar, II], &[a(D, -2, 4)]),
        t(&[III, IIstar], &[a(D, -2, 4)]),
    )
    .r(&[3])
    .q(&[3]),
    Row::new(
        6,
        t(&[IIstar, IIstar], &[a(D, -4, 6)]),
        t(&[IV, II], &[a(D, -4, 6)]),
    )
    .r(&[2]),
    Row::new(
        6,
        t(&[II, IIstar], &[a(D, -2, 6)]),
        t(&[IVstar, II], &[a(D, -2, 6)]),
    )
    .r(&[4]),
];

pub(crate) static TWO_NODES_ROWS: [Row; 5] = [
    Row::new(
        1,
        t(&[I], &[v(S1), v(S2), c(0)]),
        t(&[Istar], &[v(S1), v(S2), c(0)]),
    ),
    Row::new(
        2,
        t(&[Istar], &[a(S1, 0, 2), a(S2, 0, 2), c(0)]),
        t(&[I], &[a(S1, 0, 2), a(S2, 0, 2), c(0)]),
    )
    .r(&[0]),
    Row::new(2, t(&[TwoI], &[v(S1), c(0)]), t(&[TwoI], &[v(S1), c(0)]))
        .r(&[1])
        .omega(OmegaSel::RegularPreimage)
        .degs(DegShape::AllEqual),
    Row::new(
        2,
        t(&[II], &[a(S1, 0, 2), a(S2, 0, 2)]),
        t(&[II], &[a(S1, 0, 2), a(S2, 0, 2)]),
    )
    .r(&[1])
    .omega(OmegaSel::SingularPreimage),
    Row::new(4, t(&[III], &[a(S1, 0, 2)]), t(&[III], &[a(S1, 0, 2)]))
        .degs(DegShape::AllEqual),
];

pub(crate) static THREE_NODES_ROWS: [Row; 6] = [
    Row::new(
        1,
        t(&[I], &[v(S1), v(S2), v(S3)]),
        t(&[Istar], &[v(S1), v(S2), v(S3)]),
    ),
    Row::new(
        2,
        t(&[Istar], &[a(S1, 0, 2), a(S2, 0, 2), a(S3, 0, 2)]),
        t(&[I], &[a(S1, 0, 2), a(S2, 0, 2), a(S3, 0, 2)]),
    )
    .r(&[0]),
    Row::new(
        2,
        t(&[IIstar], &[a(Rep, 0, 2), v(Oth)]),
        t(&[II], &[a(Rep, 0, 2), v(Oth)]),
    )
    .r(&[1])
    .q(&[0])
    .degs(DegShape::TwoEqual),
    Row::new(
        2,
        t(&[II], &[a(Rep, 0, 2), v(Oth)]),
        t(&[IIstar], &[a(Rep, 0, 2), v(Oth)]),
    )
    .r(&[1])
    .q(&[1])
    .degs(DegShape::TwoEqual),
    Row::new(3, t(&[III], &[v(S1)]), t(&[IIIstar], &[v(S1)])).degs(DegShape::AllEqual),
    // the n = 6 case is proved for even r (the odd residues cannot arise
    // from the J2-power J12 with this n)
    Row::new(6, t(&[IIIstar], &[a(S1, 0, 2)]), t(&[III], &[a(S1, 0, 2)]))
        .r(&[2, 4])
        .degs(DegShape::AllEqual),
];

pub(crate) static TWO_ELLIPTIC_EVEN_ROWS: [Row; 36] = [
    Row::new(
        1,
        t(&[I, I], &[c(0), c(0), v(D)]),
        t(&[Istar, Istar], &[c(0), c(0), a(D, -1, 1)]),
    ),
    Row::new(
        2,
        t(&[Istar, Istar], &[c(0), c(0), a(D, -2, 2)]),
        t(&[I, I], &[c(0), c(0), a(D, 0, 2)]),
    )
    .d(&[0]),
    Row::new(
        2,
        t(&[I, Istar], &[c(0), c(0), a(D, -1, 2)]),
        t(&[I, Istar], &[c(0), c(0), a(D, -1, 2)]),
    )
    .d(&[1]),
    Row::new(
        3,
        t(&[IV, IVstar], &[a(D, -3, 3)]),
        t(&[II, IIstar], &[a(D, -3, 3)]),
    )
    .d(&[0]),
    Row::new(
        3,
        t(&[I, IV], &[c(0), a(D, -1, 3)]),
        t(&[Istar, IIstar], &[c(0), a(D, -4, 3)]),
    )
    .d(&[1])
    .r(&[0, 1]),
    Row::new(
        3,
        t(&[IVstar, IVstar], &[a(D, -4, 3)]),
        t(&[II, II], &[a(D, -1, 3)]),
    )
    .d(&[1])
    .r(&[2]),
    Row::new(
        3,
        t(&[I, IVstar], &[c(0), a(D, -2, 3)]),
        t(&[Istar, II], &[c(0), a(D, -2, 3)]),
    )
    .d(&[2])
    .r(&[0, 2]),
    Row::new(
        3,
        t(&[IV, IV], &[a(D, -2, 3)]),
        t(&[IIstar, IIstar], &[a(D, -5, 3)]),
    )
    .d(&[2])
    .r(&[1]),
    Row::new(
        4,
        t(&[III, IIIstar], &[a(D, -4, 4)]),
        t(&[III, IIIstar], &[a(D, -4, 4)]),
    )
    .d(&[0]),
    Row::new(
        4,
        t(&[I, III], &[c(0), a(D, -1, 4)]),
        t(&[Istar, IIIstar], &[c(0), a(D, -5, 4)]),
    )
    .d(&[1])
    .r(&[0, 1]),
    Row::new(
        4,
        t(&[Istar, IIIstar], &[c(0), a(D, -5, 4)]),
        t(&[I, III], &[c(0), a(D, -1, 4)]),
    )
    .d(&[1])
    .r(&[2, 3]),
    Row::new(
        4,
        t(&[III, III], &[a(D, -2, 4)]),
        t(&[IIIstar, IIIstar], &[a(D, -6, 4)]),
    )
    .d(&[2])
    .r(&[1]),
    Row::new(
        4,
        t(&[IIIstar, IIIstar], &[a(D, -6, 4)]),
        t(&[III, III], &[a(D, -2, 4)]),
    )
    .d(&[2])
    .r(&[3]),
    Row::new(
        4,
        t(&[I, IIIstar], &[c(0), a(D, -3, 4)]),
        t(&[Istar, III], &[c(0), a(D, -3, 4)]),
    )
    .d(&[3])
    .r(&[0, 3]),
    Row::new(
        4,
        t(&[Istar, III], &[c(0), a(D, -3, 4)]),
        t(&[I, IIIstar], &[c(0), a(D, -3, 4)]),
    )
    .d(&[3])
    .r(&[1, 2]),
    Row::new(
        6,
        t(&[II, IIstar], &[a(D, -6, 6)]),
        t(&[IV, IVstar], &[a(D, -6, 6)]),
    )
    .d(&[0]),
    Row::new(
        6,
        t(&[I, II], &[c(0), a(D, -1, 6)]),
        t(&[Istar, IVstar], &[c(0), a(D, -7, 6)]),
    )
    .d(&[1])
    .r(&[0, 1]),
    Row::new(
        6,
        t(&[IIstar, IV], &[a(D, -7, 6)]),
        t(&[IIstar, IV], &[a(D, -7, 6)]),
    )
    .d(&[1])
    .r(&[2, 5]),
    Row::new(
        6,
        t(&[Istar, IVstar], &[c(0), a(D, -7, 6)]),
        t(&[I, II], &[c(0), a(D, -1, 6)]),
    )
    .d(&[1])
    .r(&[3, 4]),
    Row::new(
        6,
        t(&[II, II], &[a(D, -2, 6)]),
        t(&[IVstar, IVstar], &[a(D, -8, 6)]),
    )
    .d(&[2])
    .r(&[1]),
    Row::new(
        6,
        t(&[Istar, IIstar], &[c(0), a(D, -8, 6)]),
        t(&[I, IV], &[c(0), a(D, -2, 6)]),
    )
    .d(&[2])
    .r(&[3, 5]),
    Row::new(
        6,
        t(&[II, IV], &[a(D, -3, 6)]),
        t(&[IIstar, IVstar], &[a(D, -9, 6)]),
    )
    .d(&[3])
    .r(&[1, 2]),
    Row::new(
        6,
        t(&[IIstar, IVstar], &[a(D, -9, 6)]),
        t(&[II, IV], &[a(D, -3, 6)]),
    )
    .d(&[3])
    .r(&[4, 5]),
    Row::new(
        6,
        t(&[Istar, II], &[c(0), a(D, -4, 6)]),
        t(&[I, IVstar], &[c(0), a(D, -4, 6)]),
    )
    .d(&[4])
    .r(&[1, 3]),
    Row::new(
        6,
        t(&[IIstar, IIstar], &[a(D, -10, 6)]),
        t(&[IV, IV], &[a(D, -4, 6)]),
    )
    .d(&[4])
    .r(&[5]),
    Row::new(
        6,
        t(&[I, IIstar], &[c(0), a(D, -5, 6)]),
        t(&[Istar, IV], &[c(0), a(D, -5, 6)]),
    )
    .d(&[5])
    .r(&[0, 5]),
    Row::new(
        6,
        t(&[II, IVstar], &[a(D, -5, 6)]),
        t(&[II, IVstar], &[a(D, -5, 6)]),
    )
    .d(&[5])
    .r(&[1, 4]),
    Row::new(
        6,
        t(&[Istar, IV], &[c(0), a(D, -5, 6)]),
        t(&[I, IIstar], &[c(0), a(D, -5, 6)]),
    )
    .d(&[5])
    .r(&[2, 3]),
    Row::new(
        12,
        t(&[IIstar, III], &[a(D, -13, 12)]),
        t(&[IV, IIIstar], &[a(D, -13, 12)]),
    )
    .d(&[1])
    .r(&[3, 10]),
    Row::new(
        12,
        t(&[IV, IIIstar], &[a(D, -13, 12)]),
        t(&[IIstar, III], &[a(D, -13, 12)]),
    )
    .d(&[1])
    .r(&[4, 9]),
    Row::new(
        12,
        t(&[II, III], &[a(D, -5, 12)]),
        t(&[IVstar, IIIstar], &[a(D, -17, 12)]),
    )
    .d(&[5])
    .r(&[2, 3]),
    Row::new(
        12,
        t(&[IVstar, IIIstar], &[a(D, -17, 12)]),
        t(&[II, III], &[a(D, -5, 12)]),
    )
    .d(&[5])
    .r(&[8, 9]),
    Row::new(
        12,
        t(&[IV, III], &[a(D, -7, 12)]),
        t(&[IIstar, IIIstar], &[a(D, -19, 12)]),
    )
    .d(&[7])
    .r(&[3, 4]),
    Row::new(
        12,
        t(&[IIstar, IIIstar], &[a(D, -19, 12)]),
        t(&[IV, III], &[a(D, -7, 12)]),
    )
    .d(&[7])
    .r(&[9, 10]),
    Row::new(
        12,
        t(&[IVstar, III], &[a(D, -11, 12)]),
        t(&[II, IIIstar], &[a(D, -11, 12)]),
    )
    .d(&[11])
    .r(&[3, 8]),
    Row::new(
        12,
        t(&[II, IIIstar], &[a(D, -11, 12)]),
        t(&[IVstar, III], &[a(D, -11, 12)]),
    )
    .d(&[11])
    .r(&[2, 9]),
];

pub(crate) static TWO_ELLIPTIC_ODD_ROWS: [Row; 8] = [
    Row::new(2, t(&[TwoI], &[c(0), v(R)]), t(&[TwoI], &[c(0), v(R)])),
    Row::new(
        4,
        t(&[TwoIstar], &[c(0), a(R, -1, 2)]),
        t(&[TwoIstar], &[c(0), a(R, -1, 2)]),
    ),
    Row::new(6, t(&[TwoIV], &[a(R, -1, 3)]), t(&[TwoIV], &[a(R, -1, 3)])).r_half(&[1]),
    Row::new(
        6,
        t(&[TwoIVstar], &[a(R, -2, 3)]),
        t(&[TwoIVstar], &[a(R, -2, 3)]),
    )
    .r_half(&[2]),
    Row::new(8, t(&[TwoIII], &[a(R, -1, 4)]), t(&[TwoIII], &[a(R, -1, 4)])).r_half(&[1]),
    Row::new(
        8,
        t(&[TwoIIIstar], &[a(R, -3, 4)]),
        t(&[TwoIIIstar], &[a(R, -3, 4)]),
    )
    .r_half(&[3]),
    Row::new(12, t(&[TwoII], &[a(R, -1, 6)]), t(&[TwoII], &[a(R, -1, 6)])).r_half(&[1]),
    Row::new(
        12,
        t(&[TwoIIstar], &[a(R, -5, 6)]),
        t(&[TwoIIstar], &[a(R, -5, 6)]),
    )
    .r_half(&[5]),
];

pub(crate) static TWO_RATIONAL_ROWS: [Row; 5] = [
    Row::new(
        1,
        t(&[I, I], &[v(S1), v(S2), v(D)]),
        t(&[Istar, Istar], &[v(S1), v(S2), a(D, -1, 1)]),
    )
    .parity(ParSel::Even),
    Row::new(
        2,
        t(&[Istar, Istar], &[a(S1, 0, 2), a(S2, 0, 2), a(D, -2, 2)]),
        t(&[I, I], &[a(S1, 0, 2), a(S2, 0, 2), a(D, 0, 2)]),
    )
    .parity(ParSel::Even)
    .d(&[0]),
    Row::new(
        2,
        t(&[I, Istar], &[a(S1, 0, 2), a(S2, 0, 2), a(D, -1, 2)]),
        t(&[I, Istar], &[a(S1, 0, 2), a(S2, 0, 2), a(D, -1, 2)]),
    )
    .parity(ParSel::Even)
    .d(&[1]),
    Row::new(
        2,
        t(&[TwoI], &[v(S1), a(D, 0, 2)]),
        t(&[TwoI], &[v(S1), a(D, 0, 2)]),
    )
    .parity(ParSel::Odd)
    .degs(DegShape::AllEqual),
    Row::new(
        4,
        t(&[TwoIstar], &[a(S1, 0, 2), a(D, -2, 4)]),
        t(&[TwoIstar], &[a(S1, 0, 2), a(D, -2, 4)]),
    )
    .parity(ParSel::Odd)
    .degs(DegShape::AllEqual),
];

pub(crate) static ONE_ELLIPTIC_ROWS: [Row; 16] = [
    Row::new(
        1,
        t(&[I, I], &[v(S1), c(0), v(D)]),
        t(&[Istar, Istar], &[c(0), v(S1), a(D, -1, 1)]),
    ),
    Row::new(
        2,
        t(&[Istar, Istar], &[c(0), a(S1, 0, 2), a(D, -2, 2)]),
        t(&[I, I], &[a(S1, 0, 2), c(0), a(D, 0, 2)]),
    )
    .d(&[0]),
    Row::new(
        2,
        t(&[I, Istar], &[c(0), v(QRem), a(D, -1, 2)]),
        t(&[I, Istar], &[v(QRem), c(0), a(D, -1, 2)]),
    )
    .d(&[1])
    .remark(RemarkSel::First),
    Row::new(
        2,
        t(&[I, Istar], &[v(QRem), c(0), a(D, -1, 2)]),
        t(&[I, Istar], &[c(0), v(QRem), a(D, -1, 2)]),
    )
    .d(&[1])
    .remark(RemarkSel::Second),
    Row::new(
        3,
        t(&[IV, I], &[a(S1, 0, 3), a(D, -1, 3)]),
        t(&[IIstar, Istar], &[a(S1, 0, 3), a(D, -4, 3)]),
    )
    .d(&[1]),
    Row::new(
        3,
        t(&[IVstar, I], &[a(S1, 0, 3), a(D, -2, 3)]),
        t(&[II, Istar], &[a(S1, 0, 3), a(D, -2, 3)]),
    )
    .d(&[2]),
    Row::new(
        4,
        t(&[III, I], &[a(S1, 0, 4), a(D, -1, 4)]),
        t(&[IIIstar, Istar], &[a(S1, 0, 4), a(D, -5, 4)]),
    )
    .d(&[1])
    .r(&[0, 1]),
    Row::new(
        4,
        t(&[IIIstar, Istar], &[a(S1, 0, 4), a(D, -5, 4)]),
        t(&[III, I], &[a(S1, 0, 4), a(D, -1, 4)]),
    )
    .d(&[1])
    .r(&[2, 3]),
    Row::new(
        4,
        t(&[IIIstar, I], &[a(S1, 0, 4), a(D, -3, 4)]),
        t(&[III, Istar], &[a(S1, 0, 4), a(D, -3, 4)]),
    )
    .d(&[3])
    .r(&[0, 3]),
    Row::new(
        4,
        t(&[III, Istar], &[a(S1, 0, 4), a(D, -3, 4)]),
        t(&[IIIstar, I], &[a(S1, 0, 4), a(D, -3, 4)]),
    )
    .d(&[3])
    .r(&[1, 2]),
    Row::new(
        6,
        t(&[II, I], &[a(S1, 0, 6), a(D, -1, 6)]),
        t(&[IVstar, Istar], &[a(S1, 0, 6), a(D, -7, 6)]),
    )
    .d(&[1])
    .r(&[0, 1]),
    Row::new(
        6,
        t(&[IVstar, Istar], &[a(S1, 0, 6), a(D, -7, 6)]),
        t(&[II, I], &[a(S1, 0, 6), a(D, -1, 6)]),
    )
    .d(&[1])
    .r(&[3, 4]),
    Row::new(
        6,
        t(&[IIstar, Istar], &[a(S1, 0, 6), a(D, -8, 6)]),
        t(&[IV, I], &[a(S1, 0, 6), a(D, -2, 6)]),
    )
    .d(&[2]),
    Row::new(
        6,
        t(&[II, Istar], &[a(S1, 0, 6), a(D, -4, 6)]),
        t(&[IVstar, I], &[a(S1, 0, 6), a(D, -4, 6)]),
    )
    .d(&[4]),
    Row::new(
        6,
        t(&[IIstar, I], &[a(S1, 0, 6), a(D, -5, 6)]),
        t(&[IV, Istar], &[a(S1, 0, 6), a(D, -5, 6)]),
    )
    .d(&[5])
    .r(&[0, 5]),
    Row::new(
        6,
        t(&[IV, Istar], &[a(S1, 0, 6), a(D, -5, 6)]),
        t(&[IIstar, I], &[a(S1, 0, 6), a(D, -5, 6)]),
    )
    .d(&[5])
    .r(&[2, 3]),
];

/// Which row list serves a given (shape, ν(J2) parity).
pub(crate) fn table_for(
    shape: StableFiberKind,
    parity: Option<Parity>,
) -> Result<&'static [Row]> {
    Ok(match shape {
        StableFiberKind::Smooth => &SMOOTH_ROWS,
        StableFiberKind::IrreducibleOneNode => &ONE_NODE_ROWS,
        StableFiberKind::IrreducibleTwoNodes => &TWO_NODES_ROWS,
        StableFiberKind::TwoRationalThreeNodes => &THREE_NODES_ROWS,
        StableFiberKind::TwoSmoothOneNode => match parity {
            Some(Parity::Even) => &TWO_ELLIPTIC_EVEN_ROWS,
            Some(Parity::Odd) => &TWO_ELLIPTIC_ODD_ROWS,
            None => {
                return Err(Error::NoMatchingRow(
                    "two-smooth shape without ν(J2) parity".into(),
                ))
            }
        },
        StableFiberKind::OneSmoothOneSingular => &ONE_ELLIPTIC_ROWS,
        StableFiberKind::TwoSingularOneNode => &TWO_RATIONAL_ROWS,
    })
}

fn build_vars(input: &LookupInput) -> Result<Vars> {
    let mut vars = Vars::default();
    vars.r = input.ram.r as i64;
    vars.q_rem = input.q_remark.unwrap_or(0);
    if let Some(d) = input.ram.d {
        vars.d = d;
    }
    if let Some(deg) = &input.degrees {
        match *deg {
            SingularityDegrees::OneNode { e } => {
                vars.d = e;
            }
            SingularityDegrees::TwoNodes { e1, e2 } => {
                vars.s1 = e1;
                vars.s2 = e2;
            }
            SingularityDegrees::ThreeNodes { e1, e2, e3 } => {
                vars.s1 = e1;
                vars.s2 = e2;
                vars.s3 = e3;
                if let Some((rep, oth)) = repeated_pair(&[e1, e2, e3]) {
                    vars.rep = rep;
                    vars.oth = oth;
                }
            }
            SingularityDegrees::Intersection { .. } => {}
            SingularityDegrees::SmoothPlusSingular { e1, .. } => {
                vars.s1 = e1;
            }
            SingularityDegrees::TwoSingular { e1, e2, .. } => {
                vars.s1 = e1;
                vars.s2 = e2;
            }
        }
    }
    Ok(vars)
}

fn build_key(input: &LookupInput) -> MatchKey {
    let ram = &input.ram;
    let remark_first = input.e1_smooth.map(|smooth| {
        let r_even = ram.r % 2 == 0;
        (smooth && r_even) || (!smooth && !r_even)
    });
    MatchKey {
        n: ram.n,
        r: ram.r,
        q: ram.q,
        d_mod: ram.d.map(|d| d.rem_euclid(ram.n as i64) as u32),
        parity: ram.j2_parity,
        omega: input.omega,
        remark_first,
    }
}

pub(crate) fn find_row(input: &LookupInput) -> Result<&'static Row> {
    let rows = table_for(input.shape, input.ram.j2_parity)?;
    let key = build_key(input);
    for row in rows {
        if !row.matches_key(&key) {
            continue;
        }
        match row.remark {
            RemarkSel::Any => return Ok(row),
            RemarkSel::First | RemarkSel::Second => {
                let Some(first) = key.remark_first else {
                    return Err(Error::RemarkFlagRequired);
                };
                let want_first = row.remark == RemarkSel::First;
                if first == want_first {
                    return Ok(row);
                }
            }
        }
    }
    Err(Error::NoMatchingRow(format!(
        "shape={} n={} r={} q={:?} d={:?} ω={} parity={:?}",
        input.shape.name(),
        key.n,
        key.r,
        key.q,
        key.d_mod,
        key.omega.name(),
        key.parity,
    )))
}

fn instantiate_row(row: &Row, input: &LookupInput) -> Result<(ReductionSymbol, ReductionSymbol)> {
    if let Some(deg) = &input.degrees {
        row.check_deg_shape(&deg.component_degrees())?;
    }
    let vars = build_vars(input)?;
    Ok((row.x.instantiate(&vars)?, row.chi.instantiate(&vars)?))
}

/// The reduction type of the minimal regular model of the curve.
pub fn reduction_type_of_x(input: &LookupInput) -> Result<ReductionSymbol> {
    let row = find_row(input)?;
    instantiate_row(row, input).map(|(x, _)| x)
}

/// Both columns of the matched row: the reduction type of X and of X^χ
/// (ν(D) = 1), parameters expressed in the untwisted quantities.
pub fn reduction_type_of_twist(
    input: &LookupInput,
) -> Result<(ReductionSymbol, ReductionSymbol)> {
    let row = find_row(input)?;
    instantiate_row(row, input)
}

/// Reduction type in the wild characteristic-3 case, from the normal form
/// `z² = a0·Q(u)`, `Q = (u³+c1u²+c2u+c3)² + c4u²+c5u+c6` with ν(c3) ∈ {1,2}.
///
/// `N = min{3ν(cᵢ) − i·ν(c3) : 4 ≤ i ≤ 6}`; the type is `[III_N]` when
/// 2 | ν(a0) and `[III*_N]` otherwise.  A twisting scalar of odd valuation
/// flips the parity of ν(a0) and hence swaps the two families.
pub fn wild_char3_type(
    a0: &Rat,
    c_coeffs: &[Rat; 6],
    twist: Option<&Rat>,
    ctx: &LocalContext,
) -> Result<ReductionSymbol> {
    if ctx.prime() != 3 {
        return Err(Error::WildPrecondition(
            "characteristic-3 normal form needs p = 3".into(),
        ));
    }
    let v3 = ctx.val(&c_coeffs[2]);
    let Val::Finite(v3) = v3 else {
        return Err(Error::WildPrecondition("ν(c3) must be 1 or 2, got ∞".into()));
    };
    if v3 != 1 && v3 != 2 {
        return Err(Error::WildPrecondition(format!(
            "ν(c3) must be 1 or 2, got {v3}"
        )));
    }
    let mut n_val: Option<i64> = None;
    for (i, c) in [(4i64, &c_coeffs[3]), (5, &c_coeffs[4]), (6, &c_coeffs[5])] {
        if let Val::Finite(vc) = ctx.val(c) {
            let cand = 3 * vc - i * v3;
            n_val = Some(n_val.map_or(cand, |cur: i64| cur.min(cand)));
        }
    }
    let Some(n_val) = n_val else {
        return Err(Error::WildPrecondition(
            "c4 = c5 = c6 = 0: the equation is a perfect square".into(),
        ));
    };
    let Val::Finite(va0) = ctx.val(a0) else {
        return Err(Error::WildPrecondition("a0 = 0".into()));
    };
    let mut parity = va0.rem_euclid(2);
    if let Some(d) = twist {
        let Val::Finite(vd) = ctx.val(d) else {
            return Err(Error::WildPrecondition("twist by D = 0".into()));
        };
        parity = (parity + vd).rem_euclid(2);
    }
    let atom = if parity == 0 { Atom::III } else { Atom::IIIstar };
    Ok(ReductionSymbol::new(vec![atom], vec![n_val]))
}

fn char5_symbol(v6: i64) -> Result<ReductionSymbol> {
    if !(1..=9).contains(&v6) || v6 == 5 {
        return Err(Error::WildPrecondition(format!(
            "ν(b6) must lie in 1..9 and differ from 5, got {v6}"
        )));
    }
    if v6 % 2 == 0 {
        let m = v6 / 2;
        Ok(ReductionSymbol::new(vec![Atom::IX], vec![m]))
    } else {
        let m = (v6 + 1) / 2;
        let idx = if m <= 2 { m } else { m - 1 };
        Ok(ReductionSymbol::new(vec![Atom::VIII], vec![idx]))
    }
}

/// Reduction type in the wild characteristic-5 case, from the normal form
/// `z² = b0u⁶+…+b6` with b0 ∈ 𝔪, b1 ∈ R^×, 1 ≤ ν(b6) ≤ 9, ν(b6) ≠ 5.
///
/// With `twist`, the substitutions `b6 ↦ D·t⁴·b6` followed by `u ↦ t²·u`
/// when ν exceeds 9 shift ν(b6) by +5 mod 10 before classifying.
pub fn wild_char5_type(b: &[Rat; 7], twist: bool, ctx: &LocalContext) -> Result<ReductionSymbol> {
    if ctx.prime() != 5 {
        return Err(Error::WildPrecondition(
            "characteristic-5 normal form needs p = 5".into(),
        ));
    }
    if !ctx.in_maximal_ideal(&b[0]) {
        return Err(Error::WildPrecondition("b0 must lie in 𝔪".into()));
    }
    if !ctx.is_unit(&b[1]) {
        return Err(Error::WildPrecondition("b1 must be a unit".into()));
    }
    let Val::Finite(v6) = ctx.val(&b[6]) else {
        return Err(Error::WildPrecondition("b6 = 0".into()));
    };
    char5_symbol(v6)?; // validate the untwisted range
    let v_eff = if twist {
        let shifted = v6 + 5;
        if shifted > 9 {
            shifted - 10
        } else {
            shifted
        }
    } else {
        v6
    };
    char5_symbol(v_eff)
}

/// The characteristic-5 twist table of the corollary, as (X, X^χ) pairs.
pub fn char5_twist_table() -> Vec<(ReductionSymbol, ReductionSymbol)> {
    let s = |atom: Atom, m: i64| ReductionSymbol::new(vec![atom], vec![m]);
    vec![
        (s(Atom::IX, 1), s(Atom::VIII, 3)),
        (s(Atom::IX, 2), s(Atom::VIII, 4)),
        (s(Atom::IX, 3), s(Atom::VIII, 1)),
        (s(Atom::IX, 4), s(Atom::VIII, 2)),
        (s(Atom::VIII, 1), s(Atom::IX, 3)),
        (s(Atom::VIII, 2), s(Atom::IX, 4)),
        (s(Atom::VIII, 3), s(Atom::IX, 1)),
        (s(Atom::VIII, 4), s(Atom::IX, 2)),
    ]
}

impl Var {
    fn render(self) -> &'static str {
        match self {
            Var::D => "d",
            Var::S1 => "e1",
            Var::S2 => "e2",
            Var::S3 => "e3",
            Var::Rep => "erep",
            Var::Oth => "eoth",
            Var::QRem => "q",
            Var::R => "r",
        }
    }
}

impl PExpr {
    fn render(self) -> String {
        match self {
            PExpr::C(k) => k.to_string(),
            PExpr::A(v, 0, 1) => v.render().to_string(),
            PExpr::A(v, 0, den) => format!("{}/{den}", v.render()),
            PExpr::A(v, add, 1) => format!("({}{add:+})", v.render()),
            PExpr::A(v, add, den) => format!("({}{add:+})/{den}", v.render()),
        }
    }
}

impl Template {
    fn render(self) -> String {
        let family: Vec<&str> = self.atoms.iter().map(|a| a.as_str()).collect();
        let mut out = family.join("-");
        if !self.params.is_empty() {
            let ps: Vec<String> = self.params.iter().map(|p| p.render()).collect();
            out.push('[');
            out.push_str(&ps.join(","));
            out.push(']');
        }
        out
    }
}

fn render_res(res: Res) -> String {
    match res {
        Res::Any => "*".to_string(),
        Res::In(set) => set
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(","),
    }
}

impl Row {
    fn render(&self) -> String {
        let rq = match self.rq {
            None => "*".to_string(),
            Some(pairs) => pairs
                .iter()
                .map(|(r, q)| format!("({r},{q})"))
                .collect::<Vec<_>>()
                .join("|"),
        };
        let omega = match self.omega {
            OmegaSel::Any => "*",
            OmegaSel::RegularPreimage => "regular",
            OmegaSel::SingularPreimage => "singular",
        };
        let parity = match self.parity {
            ParSel::Any => "*",
            ParSel::Even => "even",
            ParSel::Odd => "odd",
        };
        let remark = match self.remark {
            RemarkSel::Any => "*",
            RemarkSel::First => "first",
            RemarkSel::Second => "second",
        };
        let degs = match self.deg_shape {
            DegShape::Any => "*",
            DegShape::AllEqual => "all-equal",
            DegShape::TwoEqual => "two-equal",
        };
        format!(
            "n={}|r={}|q={}|d={}|rq={}|rh={}|om={}|par={}|rem={}|deg={}|{}|{}",
            self.n,
            render_res(self.r),
            render_res(self.q),
            render_res(self.d),
            rq,
            render_res(self.r_half),
            omega,
            parity,
            remark,
            degs,
            self.x.render(),
            self.chi.render(),
        )
    }
}

/// Human- and machine-checkable rendering of every encoded table row, the
/// cross-listing document used by the golden audit.
pub fn render_tables() -> Vec<(String, Vec<String>)> {
    all_tables()
        .iter()
        .map(|(name, rows)| {
            (
                name.to_string(),
                rows.iter().map(|row| row.render()).collect(),
            )
        })
        .collect()
}

/// All encoded tame tables, for audits.
pub(crate) fn all_tables() -> [(&'static str, &'static [Row]); 8] {
    [
        ("smooth", &SMOOTH_ROWS),
        ("one-node", &ONE_NODE_ROWS),
        ("two-nodes", &TWO_NODES_ROWS),
        ("three-nodes", &THREE_NODES_ROWS),
        ("two-elliptic-even", &TWO_ELLIPTIC_EVEN_ROWS),
        ("two-elliptic-odd", &TWO_ELLIPTIC_ODD_ROWS),
        ("two-rational", &TWO_RATIONAL_ROWS),
        ("one-elliptic", &ONE_ELLIPTIC_ROWS),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use std::str::FromStr;

    #[test]
    fn symbol_format_and_parse() {
        let cases = [
            "Istar[2,0,0]",
            "IX[3]",
            "IV-II[5]",
            "II",
            "I-Istar[0,4,7]",
            "2I[2,0]",
            "III[-1]",
            "2IIIstar[4]",
            "VII",
        ];
        for s in cases {
            let sym = ReductionSymbol::from_str(s).unwrap();
            assert_eq!(sym.to_string(), s);
        }
        assert!(ReductionSymbol::from_str("X[1]").is_err());
        assert!(ReductionSymbol::from_str("II[1").is_err());
        assert!(ReductionSymbol::from_str("II[a]").is_err());
    }

    #[test]
    fn smooth_lookup_examples() {
        let input = |n: u32, r: u32, q: u32| LookupInput {
            shape: StableFiberKind::Smooth,
            ram: RamData {
                n,
                r,
                q: Some(q),
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
        assert_eq!(
            reduction_type_of_x(&input(3, 1, 0)).unwrap().to_string(),
            "III"
        );
        let (x, chi) = reduction_type_of_twist(&input(5, 1, 0)).unwrap();
        assert_eq!(x.to_string(), "IX[3]");
        assert_eq!(chi.to_string(), "VIII[1]");
        let (x, chi) = reduction_type_of_twist(&input(1, 0, 0)).unwrap();
        assert_eq!(x.to_string(), "I[0,0,0]");
        assert_eq!(chi.to_string(), "Istar[0,0,0]");
        // V at (r,q)=(5,3), V* at (5,0)
        assert_eq!(reduction_type_of_x(&input(6, 5, 3)).unwrap().to_string(), "V");
        assert_eq!(
            reduction_type_of_x(&input(6, 5, 0)).unwrap().to_string(),
            "Vstar"
        );
        assert!(reduction_type_of_x(&input(7, 0, 0)).is_err());
    }

    #[test]
    fn one_node_lookup_doubles_degree_across_twist() {
        let input = LookupInput {
            shape: StableFiberKind::IrreducibleOneNode,
            ram: RamData {
                n: 1,
                r: 0,
                q: Some(0),
                d_k: None,
                r_k: None,
                d: None,
                j2_parity: None,
            },
            degrees: Some(SingularityDegrees::OneNode { e: 2 }),
            e1_smooth: None,
            q_remark: None,
            omega: OmegaStatus::NonRamified,
        };
        let (x, chi) = reduction_type_of_twist(&input).unwrap();
        assert_eq!(x.to_string(), "I[2,0,0]");
        assert_eq!(chi.to_string(), "Istar[2,0,0]");
    }

    #[test]
    fn two_component_lookup() {
        let input = LookupInput {
            shape: StableFiberKind::TwoSmoothOneNode,
            ram: RamData {
                n: 1,
                r: 0,
                q: None,
                d_k: Some(crate::Frac::new(1, 1)),
                r_k: None,
                d: Some(1),
                j2_parity: Some(Parity::Even),
            },
            degrees: Some(SingularityDegrees::Intersection { e: 1 }),
            e1_smooth: None,
            q_remark: None,
            omega: OmegaStatus::NonRamified,
        };
        let (x, chi) = reduction_type_of_twist(&input).unwrap();
        assert_eq!(x.to_string(), "I-I[0,0,1]");
        assert_eq!(chi.to_string(), "Istar-Istar[0,0,0]");
    }

    #[test]
    fn remark_rows_require_flag() {
        let mk = |e1_smooth: Option<bool>| LookupInput {
            shape: StableFiberKind::OneSmoothOneSingular,
            ram: RamData {
                n: 2,
                r: 1,
                q: None,
                d_k: Some(crate::Frac::new(3, 2)),
                r_k: None,
                d: Some(3),
                j2_parity: Some(Parity::Even),
            },
            degrees: Some(SingularityDegrees::SmoothPlusSingular { e0: 3, e1: 2 }),
            e1_smooth,
            q_remark: Some(4),
            omega: OmegaStatus::NonRamified,
        };
        assert!(matches!(
            reduction_type_of_x(&mk(None)),
            Err(Error::RemarkFlagRequired)
        ));
        // E1 smooth, r odd → second symbol [I_q - I*_0 - ...]
        let x = reduction_type_of_x(&mk(Some(true))).unwrap();
        assert_eq!(x.to_string(), "I-Istar[4,0,1]");
        // E1 singular, r odd → first symbol [I_0 - I*_q - ...]
        let x = reduction_type_of_x(&mk(Some(false))).unwrap();
        assert_eq!(x.to_string(), "I-Istar[0,4,1]");
    }

    #[test]
    fn equal_degree_constraint_is_enforced() {
        let input = LookupInput {
            shape: StableFiberKind::IrreducibleTwoNodes,
            ram: RamData {
                n: 2,
                r: 1,
                q: Some(0),
                d_k: None,
                r_k: None,
                d: None,
                j2_parity: None,
            },
            degrees: Some(SingularityDegrees::TwoNodes { e1: 2, e2: 4 }),
            e1_smooth: None,
            q_remark: None,
            omega: OmegaStatus::NonRamified,
        };
        assert!(matches!(
            reduction_type_of_x(&input),
            Err(Error::ParamConstraint(_))
        ));
    }

    #[test]
    fn wild_char3_examples() {
        let ctx = LocalContext::new(3).unwrap();
        let q = |n: i64| Rat::from(BigInt::from(n));
        // ν(c3)=1, ν(c4)=1, ν(c5)=2, ν(c6)=2 → N = min{-1, 1, 0} = -1
        let cs = [q(1), q(1), q(3), q(3), q(9), q(9)];
        let sym = wild_char3_type(&q(1), &cs, None, &ctx).unwrap();
        assert_eq!(sym.to_string(), "III[-1]");
        let sym = wild_char3_type(&q(1), &cs, Some(&q(3)), &ctx).unwrap();
        assert_eq!(sym.to_string(), "IIIstar[-1]");
        // twist of even valuation does not swap
        let sym = wild_char3_type(&q(1), &cs, Some(&q(9)), &ctx).unwrap();
        assert_eq!(sym.to_string(), "III[-1]");
        // ν(c3) = 3 rejected
        let bad = [q(1), q(1), q(27), q(3), q(9), q(9)];
        assert!(wild_char3_type(&q(1), &bad, None, &ctx).is_err());
    }

    #[test]
    fn wild_char5_examples() {
        let ctx = LocalContext::new(5).unwrap();
        let q = |n: i64| Rat::from(BigInt::from(n));
        let mk = |v6: u32| {
            let mut b: [Rat; 7] = Default::default();
            b[0] = q(5);
            b[1] = q(1);
            b[6] = q(5i64.pow(v6));
            b
        };
        assert_eq!(
            wild_char5_type(&mk(2), false, &ctx).unwrap().to_string(),
            "IX[1]"
        );
        assert_eq!(
            wild_char5_type(&mk(2), true, &ctx).unwrap().to_string(),
            "VIII[3]"
        );
        assert_eq!(
            wild_char5_type(&mk(6), true, &ctx).unwrap().to_string(),
            "VIII[1]"
        );
        assert_eq!(
            wild_char5_type(&mk(1), false, &ctx).unwrap().to_string(),
            "VIII[1]"
        );
        assert_eq!(
            wild_char5_type(&mk(9), false, &ctx).unwrap().to_string(),
            "VIII[4]"
        );
        assert!(wild_char5_type(&mk(5), false, &ctx).is_err());
        // b1 not a unit
        let mut b = mk(2);
        b[1] = q(5);
        assert!(wild_char5_type(&b, false, &ctx).is_err());
    }

    #[test]
    fn char5_substitution_pipeline_matches_table() {
        let ctx = LocalContext::new(5).unwrap();
        let q = |n: i64| Rat::from(BigInt::from(n));
        for v6 in [1i64, 2, 3, 4, 6, 7, 8, 9] {
            let mut b: [Rat; 7] = Default::default();
            b[0] = q(5);
            b[1] = q(2);
            b[6] = q(5i64.pow(v6 as u32));
            let x = wild_char5_type(&b, false, &ctx).unwrap();
            let chi = wild_char5_type(&b, true, &ctx).unwrap();
            let table = char5_twist_table();
            let expected = table.iter().find(|(from, _)| *from == x).unwrap();
            assert_eq!(chi, expected.1);
        }
    }
}
