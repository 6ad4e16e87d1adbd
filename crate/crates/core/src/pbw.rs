//! Canonically ordered basis words for highest-weight modules.
//!
//! A basis word is a product of creation modes in block order L, T, G+, G-,
//! with |index| non-decreasing inside each block. Bosonic modes may repeat;
//! G modes square to zero, so inside a G block the indices are strictly
//! increasing in magnitude. The empty word stands for the highest-weight
//! vector itself.

use std::cmp::Ordering;
use std::fmt;

use crate::algebra::{Grade, Mode};
use crate::error::EngineError;

/// Order in which a mode may appear inside a canonical word: block first,
/// then |index| ascending. Only meaningful for creation modes.
pub fn canonical_mode_cmp(a: &Mode, b: &Mode) -> Ordering {
    (a.kind, a.index2.unsigned_abs()).cmp(&(b.kind, b.index2.unsigned_abs()))
}

/// May `a` stand immediately left of `b` in a canonical word?
pub(crate) fn pair_ok(a: &Mode, b: &Mode) -> bool {
    match canonical_mode_cmp(a, b) {
        Ordering::Less => true,
        Ordering::Equal => !a.is_odd(), // equal fermionic modes annihilate
        Ordering::Greater => false,
    }
}

/// A canonical basis word. Modes act right to left: the last mode hits the
/// highest-weight vector first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PbwWord(Vec<Mode>);

impl PbwWord {
    pub fn empty() -> PbwWord {
        PbwWord(Vec::new())
    }

    /// Validates canonical form: creation modes only, block-sorted, no
    /// repeated G mode.
    pub fn from_modes(modes: Vec<Mode>) -> Result<PbwWord, EngineError> {
        for m in &modes {
            if !m.is_creation() {
                return Err(EngineError::Internal(format!(
                    "{m} is not a creation mode; basis words hold creation modes only"
                )));
            }
        }
        for pair in modes.windows(2) {
            if !pair_ok(&pair[0], &pair[1]) {
                return Err(EngineError::Internal(format!(
                    "{} may not precede {} in a canonical word",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(PbwWord(modes))
    }

    /// Caller promises canonical form; checked in debug builds.
    pub(crate) fn from_modes_unchecked(modes: Vec<Mode>) -> PbwWord {
        debug_assert!(PbwWord::from_modes(modes.clone()).is_ok());
        PbwWord(modes)
    }

    pub fn modes(&self) -> &[Mode] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn grade(&self) -> Grade {
        self.0
            .iter()
            .fold(Grade::zero(), |acc, m| acc + m.grade())
    }
}

impl PartialOrd for PbwWord {
    fn partial_cmp(&self, other: &PbwWord) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PbwWord {
    /// Deterministic basis order: elementwise canonical comparison, then
    /// shorter word first.
    fn cmp(&self, other: &PbwWord) -> Ordering {
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            match canonical_mode_cmp(a, b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl fmt::Display for PbwWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Floor of the square root, for small non-negative inputs.
pub(crate) fn isqrt(n: i64) -> i64 {
    let mut r = 0;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Multiset partitions of `total` into parts >= 1, parts ascending.
fn partitions(total: i64) -> Vec<Vec<i64>> {
    fn rec(total: i64, min: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if total == 0 {
            out.push(prefix.clone());
            return;
        }
        let mut p = min;
        while p <= total {
            prefix.push(p);
            rec(total - p, p, prefix, out);
            prefix.pop();
            p += 1;
        }
    }
    let mut out = Vec::new();
    rec(total, 1, &mut Vec::new(), &mut out);
    out
}

/// Partitions of the doubled total into exactly `count` distinct odd parts,
/// strictly ascending.
fn distinct_odd_partitions(total2: i64, count: usize) -> Vec<Vec<i64>> {
    fn rec(total2: i64, count: usize, min: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if count == 0 {
            if total2 == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        // remaining parts are distinct odds >= p, so their sum is at least
        // p + (p+2) + ... ; prune on that bound
        let mut p = min;
        while p * (count as i64) + ((count as i64) * (count as i64 - 1)) <= total2 {
            prefix.push(p);
            rec(total2 - p, count - 1, p + 2, prefix, out);
            prefix.pop();
            p += 2;
        }
    }
    let mut out = Vec::new();
    rec(total2, count, 1, &mut Vec::new(), &mut out);
    out
}

/// All canonical words of the given grade, in basis order.
pub fn basis_words(g: Grade) -> Vec<PbwWord> {
    if g.level2 < 0 {
        return Vec::new();
    }
    if g.level2 == 0 {
        return if g.charge == 0 { vec![PbwWord::empty()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let level2 = g.level2;
    for n_plus in 0..=isqrt(level2) {
        let n_minus = n_plus - g.charge;
        if n_minus < 0 || n_plus * n_plus + n_minus * n_minus > level2 {
            continue;
        }
        for c2 in (n_plus * n_plus)..=(level2 - n_minus * n_minus) {
            for gp in distinct_odd_partitions(c2, n_plus as usize) {
                for d2 in (n_minus * n_minus)..=(level2 - c2) {
                    let rem2 = level2 - c2 - d2;
                    if rem2 % 2 != 0 {
                        continue;
                    }
                    for gm in distinct_odd_partitions(d2, n_minus as usize) {
                        let rem = rem2 / 2;
                        for a in 0..=rem {
                            for lp in partitions(a) {
                                for tp in partitions(rem - a) {
                                    let mut modes = Vec::new();
                                    modes.extend(lp.iter().map(|n| Mode::l(-n)));
                                    modes.extend(tp.iter().map(|n| Mode::t(-n)));
                                    modes.extend(gp.iter().map(|r2| Mode::g_plus(-r2)));
                                    modes.extend(gm.iter().map(|r2| Mode::g_minus(-r2)));
                                    out.push(PbwWord::from_modes_unchecked(modes));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}
