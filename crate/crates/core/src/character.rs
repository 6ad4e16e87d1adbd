//! Graded dimensions from the character product, independent of word
//! enumeration.
//!
//! The generating function is
//!
//! ```text
//! prod_{n>=1} (1 + q^{n-1/2} z)(1 + q^{n-1/2} z^{-1}) / (1 - q^n)^2
//! ```
//!
//! whose coefficient at q^level z^charge counts basis words of that grade.
//! The series is expanded with exact integer coefficients up to a level
//! cutoff; factors beyond the cutoff cannot contribute and are skipped.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::algebra::Grade;
use crate::error::EngineError;

/// Truncated character table. Keys are (doubled level, charge).
pub struct CharacterTable {
    cutoff2: i64,
    coeffs: BTreeMap<(i64, i64), BigUint>,
}

impl CharacterTable {
    pub fn new(cutoff2: i64) -> CharacterTable {
        let mut coeffs = BTreeMap::new();
        coeffs.insert((0, 0), BigUint::one());

        // 1/(1-q^n)^2 = sum_k (k+1) q^{nk}, one factor per bosonic pair L_{-n}, T_{-n}
        let mut n2 = 2;
        while n2 <= cutoff2 {
            let mut next: BTreeMap<(i64, i64), BigUint> = BTreeMap::new();
            for (&(l2, ch), c) in &coeffs {
                let mut k = 0;
                while l2 + k * n2 <= cutoff2 {
                    let add = c * BigUint::from((k + 1) as u64);
                    *next.entry((l2 + k * n2, ch)).or_default() += add;
                    k += 1;
                }
            }
            coeffs = next;
            n2 += 2;
        }

        // (1 + q^r z) and (1 + q^r z^{-1}) for each half-odd r
        let mut r2 = 1;
        while r2 <= cutoff2 {
            for dq in [1i64, -1] {
                let mut next = coeffs.clone();
                for (&(l2, ch), c) in &coeffs {
                    if l2 + r2 <= cutoff2 {
                        *next.entry((l2 + r2, ch + dq)).or_default() += c;
                    }
                }
                coeffs = next;
            }
            r2 += 2;
        }

        CharacterTable { cutoff2, coeffs }
    }

    pub fn cutoff2(&self) -> i64 {
        self.cutoff2
    }

    /// Coefficient at the given grade; grades above the cutoff are an error.
    pub fn dim(&self, g: Grade) -> Result<usize, EngineError> {
        if g.level2 > self.cutoff2 {
            return Err(EngineError::CutoffExceeded {
                requested: g.level(),
                cutoff: crate::rat::Rat::from_half(self.cutoff2),
            });
        }
        Ok(self
            .coeffs
            .get(&(g.level2, g.charge))
            .map(|c| c.to_usize().expect("graded dimension exceeds usize"))
            .unwrap_or(0))
    }
}
