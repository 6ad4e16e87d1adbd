//! The N=2 superconformal algebra: modes, parity, grading, and the bracket.
//!
//! Basis modes are `L_n`, `T_n` (n integral), `G+_r`, `G-_r` (r half-odd) and
//! the central element `C`. All mode indices are stored doubled (`index2`), so
//! L/T/C carry even values and G modes odd values; no fractional index ever
//! appears in arithmetic. The central element is kept symbolic in brackets and
//! only turns into a scalar when a module representation evaluates it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;
use std::collections::BTreeMap;

use crate::error::EngineError;
use crate::rat::Rat;

/// Mode family. The declaration order L < T < G+ < G- is also the block order
/// used by canonically sorted basis words.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum ModeKind {
    L,
    T,
    #[serde(rename = "Gplus")]
    GPlus,
    #[serde(rename = "Gminus")]
    GMinus,
    C,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
}

/// A single basis mode with doubled index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct Mode {
    pub kind: ModeKind,
    pub index2: i64,
}

impl Mode {
    pub fn l(n: i64) -> Mode {
        Mode { kind: ModeKind::L, index2: 2 * n }
    }

    pub fn t(n: i64) -> Mode {
        Mode { kind: ModeKind::T, index2: 2 * n }
    }

    /// G+ mode; `r2` is the doubled (odd) index, e.g. -1 for G+_{-1/2}.
    pub fn g_plus(r2: i64) -> Mode {
        assert!(r2 % 2 != 0, "G modes carry half-odd indices");
        Mode { kind: ModeKind::GPlus, index2: r2 }
    }

    /// G- mode; `r2` is the doubled (odd) index.
    pub fn g_minus(r2: i64) -> Mode {
        assert!(r2 % 2 != 0, "G modes carry half-odd indices");
        Mode { kind: ModeKind::GMinus, index2: r2 }
    }

    pub fn central() -> Mode {
        Mode { kind: ModeKind::C, index2: 0 }
    }

    pub fn parity(&self) -> Parity {
        match self.kind {
            ModeKind::GPlus | ModeKind::GMinus => Parity::Odd,
            _ => Parity::Even,
        }
    }

    pub fn is_odd(&self) -> bool {
        self.parity() == Parity::Odd
    }

    /// Ad-grading: a mode of index r has level -r, so creation operators
    /// (negative index) raise the level.
    pub fn grade(&self) -> Grade {
        let charge = match self.kind {
            ModeKind::GPlus => 1,
            ModeKind::GMinus => -1,
            _ => 0,
        };
        Grade { level2: -self.index2, charge }
    }

    pub fn is_creation(&self) -> bool {
        self.index2 < 0
    }

    pub fn is_annihilation(&self) -> bool {
        self.index2 > 0
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = |f: &mut fmt::Formatter<'_>, i2: i64| {
            if i2 % 2 == 0 {
                write!(f, "{}", i2 / 2)
            } else {
                write!(f, "{}/2", i2)
            }
        };
        match self.kind {
            ModeKind::L => {
                write!(f, "L(")?;
                idx(f, self.index2)?;
                write!(f, ")")
            }
            ModeKind::T => {
                write!(f, "T(")?;
                idx(f, self.index2)?;
                write!(f, ")")
            }
            ModeKind::GPlus => {
                write!(f, "G+(")?;
                idx(f, self.index2)?;
                write!(f, ")")
            }
            ModeKind::GMinus => {
                write!(f, "G-(")?;
                idx(f, self.index2)?;
                write!(f, ")")
            }
            ModeKind::C => write!(f, "C"),
        }
    }
}

/// (level, relative charge) of a homogeneous object. Levels live in (1/2)Z and
/// are stored doubled.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Grade {
    pub level2: i64,
    pub charge: i64,
}

impl Grade {
    pub fn new(level2: i64, charge: i64) -> Grade {
        Grade { level2, charge }
    }

    /// Validates that `level` is a half-integer.
    pub fn checked(level: &Rat, charge: i64) -> Result<Grade, EngineError> {
        match level.doubled() {
            Some(level2) => Ok(Grade { level2, charge }),
            None => Err(EngineError::BadLevel(level.clone())),
        }
    }

    pub fn level(&self) -> Rat {
        Rat::from_half(self.level2)
    }

    pub fn zero() -> Grade {
        Grade { level2: 0, charge: 0 }
    }
}

impl Add for Grade {
    type Output = Grade;
    fn add(self, rhs: Grade) -> Grade {
        Grade { level2: self.level2 + rhs.level2, charge: self.charge + rhs.charge }
    }
}

impl Sub for Grade {
    type Output = Grade;
    fn sub(self, rhs: Grade) -> Grade {
        Grade { level2: self.level2 - rhs.level2, charge: self.charge - rhs.charge }
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level2 % 2 == 0 {
            write!(f, "({}, {})", self.level2 / 2, self.charge)
        } else {
            write!(f, "({}/2, {})", self.level2, self.charge)
        }
    }
}

impl Serialize for Grade {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Grade", 2)?;
        s.serialize_field("level", &self.level())?;
        s.serialize_field("charge", &self.charge)?;
        s.end()
    }
}

/// Finite linear combination of modes plus a scalar. Brackets only ever
/// populate the mode part (central contributions ride on `C`); the scalar slot
/// exists so module-side evaluation can stay in this type.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlgebraElement {
    pub terms: BTreeMap<Mode, Rat>,
    pub constant: Rat,
}

impl AlgebraElement {
    pub fn zero() -> AlgebraElement {
        AlgebraElement::default()
    }

    pub fn from_mode(m: Mode) -> AlgebraElement {
        let mut e = AlgebraElement::zero();
        e.add_term(m, Rat::one());
        e
    }

    pub fn add_term(&mut self, m: Mode, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rat::zero);
        *entry = &*entry + &coeff;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.constant.is_zero()
    }

    pub fn scaled(&self, k: &Rat) -> AlgebraElement {
        if k.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
            constant: &self.constant * k,
        }
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(mut self, rhs: AlgebraElement) -> AlgebraElement {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self.constant = &self.constant + &rhs.constant;
        self
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
            constant: -self.constant,
        }
    }
}

impl Mul<&Rat> for AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, k: &Rat) -> AlgebraElement {
        self.scaled(k)
    }
}

/// Super bracket [a, b] of two basis modes.
///
/// The sign conventions follow the commutation table rather than any
/// normal-ordering trick: for two odd modes this is the anticommutator.
pub fn bracket(a: Mode, b: Mode) -> AlgebraElement {
    use ModeKind::*;
    let mut out = AlgebraElement::zero();
    let (ai, bi) = (a.index2, b.index2);
    let sum = ai + bi;
    match (a.kind, b.kind) {
        (C, _) | (_, C) => {}

        // [L_m, L_n] = (m-n) L_{m+n} + (C/12)(m^3-m) delta_{m+n,0}
        (L, L) => {
            out.add_term(Mode { kind: L, index2: sum }, Rat::new(ai - bi, 2));
            if sum == 0 {
                out.add_term(Mode::central(), Rat::new(ai * ai * ai - 4 * ai, 96));
            }
        }

        // [L_m, T_n] = -n T_{m+n}
        (L, T) => out.add_term(Mode { kind: T, index2: sum }, Rat::new(-bi, 2)),
        (T, L) => out.add_term(Mode { kind: T, index2: sum }, Rat::new(ai, 2)),

        // [L_m, G_r] = (m/2 - r) G_{m+r}
        (L, GPlus) => out.add_term(Mode { kind: GPlus, index2: sum }, Rat::new(ai - 2 * bi, 4)),
        (L, GMinus) => out.add_term(Mode { kind: GMinus, index2: sum }, Rat::new(ai - 2 * bi, 4)),
        (GPlus, L) => out.add_term(Mode { kind: GPlus, index2: sum }, Rat::new(2 * ai - bi, 4)),
        (GMinus, L) => out.add_term(Mode { kind: GMinus, index2: sum }, Rat::new(2 * ai - bi, 4)),

        // [T_m, T_n] = (C/3) m delta_{m+n,0}
        (T, T) => {
            if sum == 0 {
                out.add_term(Mode::central(), Rat::new(ai, 6));
            }
        }

        // [T_m, G±_r] = ±G±_{m+r}
        (T, GPlus) => out.add_term(Mode { kind: GPlus, index2: sum }, Rat::one()),
        (T, GMinus) => out.add_term(Mode { kind: GMinus, index2: sum }, -Rat::one()),
        (GPlus, T) => out.add_term(Mode { kind: GPlus, index2: sum }, -Rat::one()),
        (GMinus, T) => out.add_term(Mode { kind: GMinus, index2: sum }, Rat::one()),

        // {G+_r, G-_s} = 2 L_{r+s} + (r-s) T_{r+s} + (C/3)(r^2 - 1/4) delta_{r+s,0}
        (GPlus, GMinus) => {
            out.add_term(Mode { kind: L, index2: sum }, Rat::from_int(2));
            out.add_term(Mode { kind: T, index2: sum }, Rat::new(ai - bi, 2));
            if sum == 0 {
                out.add_term(Mode::central(), Rat::new(ai * ai - 1, 12));
            }
        }
        (GMinus, GPlus) => {
            out.add_term(Mode { kind: L, index2: sum }, Rat::from_int(2));
            out.add_term(Mode { kind: T, index2: sum }, Rat::new(bi - ai, 2));
            if sum == 0 {
                out.add_term(Mode::central(), Rat::new(bi * bi - 1, 12));
            }
        }

        (GPlus, GPlus) | (GMinus, GMinus) => {}
    }
    out
}

/// Bilinear extension of [`bracket`]; scalar parts are central.
pub fn bracket_elem(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (ma, ca) in &x.terms {
        for (mb, cb) in &y.terms {
            out = out + bracket(*ma, *mb).scaled(&(ca * cb));
        }
    }
    out
}
