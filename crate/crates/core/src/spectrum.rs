//! Classification data attached to an admissible level t/u: the central
//! charge c = 3t/(t+2u), the spin set S, the weight table W, and membership
//! on the charged curves D (fractional levels only).

use num_integer::Integer;
use serde::Serialize;

use crate::error::EngineError;
use crate::rat::Rat;
use crate::singular::{family_one_closed_form, predicted_weights, table_weight};

/// A level m = t/u in lowest terms with u >= 1 and 2u + t - 2 >= 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdmissibleLevel {
    t: i64,
    u: i64,
}

/// Admissibility test behind [`AdmissibleLevel::new`]: gcd(t, u) = 1 and
/// 2u + t - 2 >= 0. A non-positive u is a usage error, not inadmissibility.
pub fn is_admissible(t: i64, u: i64) -> Result<bool, EngineError> {
    if u <= 0 {
        return Err(EngineError::NonPositiveU(u));
    }
    Ok(t.gcd(&u) == 1 && 2 * u + t - 2 >= 0)
}

impl AdmissibleLevel {
    pub fn new(t: i64, u: i64) -> Result<Self, EngineError> {
        if u <= 0 {
            return Err(EngineError::NonPositiveU(u));
        }
        if t.gcd(&u) != 1 {
            return Err(EngineError::NotAdmissible {
                t,
                u,
                reason: "t/u is not in lowest terms".to_string(),
            });
        }
        let n = 2 * u + t - 2;
        if n < 0 {
            return Err(EngineError::NotAdmissible {
                t,
                u,
                reason: format!("2u + t - 2 = {n} is negative"),
            });
        }
        Ok(AdmissibleLevel { t, u })
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    pub fn u(&self) -> i64 {
        self.u
    }

    pub fn m(&self) -> Rat {
        Rat::new(self.t, self.u)
    }

    /// The range bound N = 2u + t - 2 >= 0.
    pub fn n_bound(&self) -> i64 {
        2 * self.u + self.t - 2
    }

    pub fn is_integral(&self) -> bool {
        self.u == 1
    }

    /// c = 3m/(m+2) = 3t/(t+2u). The denominator is N + 2 >= 2.
    pub fn central_charge(&self) -> Rat {
        Rat::new(3 * self.t, self.t + 2 * self.u)
    }
}

/// S = { n - k(m+2) : 0 <= n <= N, 0 <= k <= u-1 }, ascending. The u*(N+1)
/// members are pairwise distinct because t and u are coprime.
pub fn s_set(lvl: &AdmissibleLevel) -> Vec<Rat> {
    let m2 = &lvl.m() + &Rat::from_int(2);
    let mut out = Vec::with_capacity((lvl.u() * (lvl.n_bound() + 1)) as usize);
    for n in 0..=lvl.n_bound() {
        for k in 0..lvl.u() {
            out.push(&Rat::from_int(n) - &(&Rat::from_int(k) * &m2));
        }
    }
    out.sort();
    debug_assert!(out.windows(2).all(|w| w[0] != w[1]));
    out
}

/// One point of the weight table W: labels j, k positive half-odd with
/// j + k <= N + 1, weight h = (jk - 1/4)/(m+2), charge q = (j-k)/(m+2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WPoint {
    pub j2: i64,
    pub k2: i64,
    pub h: Rat,
    pub q: Rat,
}

impl WPoint {
    pub fn j(&self) -> Rat {
        Rat::from_half(self.j2)
    }

    pub fn k(&self) -> Rat {
        Rat::from_half(self.k2)
    }
}

impl Serialize for WPoint {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("WPoint", 4)?;
        s.serialize_field("j", &self.j())?;
        s.serialize_field("k", &self.k())?;
        s.serialize_field("h", &self.h)?;
        s.serialize_field("q", &self.q)?;
        s.end()
    }
}

/// The weight table W, ordered by (j, k) ascending. For integral m it has
/// (m+1)(m+2)/2 points.
pub fn w_set(lvl: &AdmissibleLevel) -> Vec<WPoint> {
    let cap2 = 2 * lvl.n_bound() + 2; // doubled bound on j + k
    let m2 = &lvl.m() + &Rat::from_int(2);
    let quarter = Rat::new(1, 4);
    let mut out = Vec::new();
    let mut j2 = 1;
    while j2 < cap2 {
        let mut k2 = 1;
        while j2 + k2 <= cap2 {
            let j = Rat::from_half(j2);
            let k = Rat::from_half(k2);
            let h = (&(&j * &k) - &quarter).checked_div(&m2).expect("m + 2 > 0");
            let q = (&j - &k).checked_div(&m2).expect("m + 2 > 0");
            out.push(WPoint { j2, k2, h, q });
            k2 += 2;
        }
        j2 += 2;
    }
    out
}

/// Membership test for the charged curves D at fractional level: is there a
/// non-integral r in S with q^2 + 4h/(m+2) = r(r+2)/(m+2)^2? Returns the
/// largest witness; the curve constant is symmetric about r = -1, so matches
/// can come in mirror pairs. Integral levels have no curves and raise an
/// error.
pub fn d_membership(
    lvl: &AdmissibleLevel,
    h: &Rat,
    q: &Rat,
) -> Result<Option<Rat>, EngineError> {
    if lvl.is_integral() {
        return Err(EngineError::CurveUndefined(lvl.m()));
    }
    let m2 = &lvl.m() + &Rat::from_int(2);
    let m2sq = &m2 * &m2;
    let lhs = &(q * q) + &(&Rat::from_int(4) * h).checked_div(&m2).expect("m + 2 > 0");
    for r in s_set(lvl).into_iter().rev() {
        if r.is_integer() {
            continue;
        }
        let rhs = (&r * &(&r + &Rat::from_int(2))).checked_div(&m2sq).expect("m + 2 > 0");
        if lhs == rhs {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// One disjointness violation: a family weight that landed back inside the
/// weight table.
#[derive(Clone, Debug, Serialize)]
pub struct DisjointnessViolation {
    pub j2: i64,
    pub k2: i64,
    pub family: u8,
    pub i: u32,
    pub h: Rat,
    pub q: Rat,
}

/// Sweep result: every predicted family weight over every table point,
/// checked against membership in the table itself, plus the closed-form
/// identity for family 1.
pub struct DisjointnessReport {
    pub m: i64,
    pub i_max: u32,
    pub points_checked: usize,
    pub evaluations: usize,
    pub violations: Vec<DisjointnessViolation>,
    pub identity_checked: usize,
    pub identity_ok: bool,
}

impl DisjointnessReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.identity_ok
    }
}

/// At integral level m, no predicted family weight (h', q') coincides with a
/// weight-table point: modules over the table stay outside it under the
/// families. Also re-derives family 1 through its closed form.
pub fn disjointness_check(m: i64, i_max: u32) -> Result<DisjointnessReport, EngineError> {
    let lvl = AdmissibleLevel::new(m, 1)?;
    if !lvl.is_integral() || m < 1 {
        return Err(EngineError::NotAdmissible {
            t: m,
            u: 1,
            reason: "the disjointness sweep needs a positive integral level".to_string(),
        });
    }
    let table = w_set(&lvl);
    let table_weights: std::collections::BTreeSet<(Rat, Rat)> = table
        .iter()
        .map(|p| (p.h.clone(), p.q.clone()))
        .collect();

    let mut violations = Vec::new();
    let mut evaluations = 0usize;
    let mut identity_checked = 0usize;
    let mut identity_ok = true;
    for point in &table {
        debug_assert_eq!(table_weight(m, point.j2, point.k2), (point.h.clone(), point.q.clone()));
        for w in predicted_weights(m, point.j2, point.k2, i_max)? {
            evaluations += 1;
            if table_weights.contains(&(w.h.clone(), w.q.clone())) {
                violations.push(DisjointnessViolation {
                    j2: point.j2,
                    k2: point.k2,
                    family: w.family,
                    i: w.i,
                    h: w.h.clone(),
                    q: w.q.clone(),
                });
            }
            if w.family == 1 {
                identity_checked += 1;
                if w.h != family_one_closed_form(m, point.j2, point.k2, w.i as i64) {
                    identity_ok = false;
                }
            }
        }
    }
    Ok(DisjointnessReport {
        m,
        i_max,
        points_checked: table.len(),
        evaluations,
        violations,
        identity_checked,
        identity_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissibility_clauses() {
        assert!(is_admissible(1, 1).unwrap());
        assert!(is_admissible(1, 2).unwrap());
        assert!(is_admissible(-1, 2).unwrap()); // 2u + t - 2 = 1
        assert!(!is_admissible(2, 4).unwrap()); // not coprime
        assert!(!is_admissible(-3, 2).unwrap()); // 2u + t - 2 = -1
        assert!(is_admissible(0, 1).unwrap()); // m = 0, N = 0
        assert!(matches!(is_admissible(1, 0), Err(EngineError::NonPositiveU(0))));
        assert!(matches!(
            AdmissibleLevel::new(2, 4),
            Err(EngineError::NotAdmissible { .. })
        ));
    }

    #[test]
    fn central_charges_of_small_levels() {
        let cases = [
            ((1, 1), Rat::one()),
            ((2, 1), Rat::new(3, 2)),
            ((1, 2), Rat::new(3, 5)),
            ((-1, 2), Rat::from_int(-1)),
            ((0, 1), Rat::zero()),
        ];
        for ((t, u), c) in cases {
            assert_eq!(AdmissibleLevel::new(t, u).unwrap().central_charge(), c);
        }
    }

    #[test]
    fn spin_set_at_level_one_half() {
        // t/u = 1/2: N = 3, m + 2 = 5/2
        let lvl = AdmissibleLevel::new(1, 2).unwrap();
        let s = s_set(&lvl);
        let expected: Vec<Rat> = [
            Rat::new(-5, 2),
            Rat::new(-3, 2),
            Rat::new(-1, 2),
            Rat::zero(),
            Rat::new(1, 2),
            Rat::one(),
            Rat::from_int(2),
            Rat::from_int(3),
        ]
        .into();
        assert_eq!(s, expected);
    }

    #[test]
    fn weight_table_sizes_at_integral_levels() {
        for m in 1..=12 {
            let lvl = AdmissibleLevel::new(m, 1).unwrap();
            assert_eq!(w_set(&lvl).len() as i64, (m + 1) * (m + 2) / 2, "m = {m}");
        }
    }

    #[test]
    fn weight_table_at_level_one() {
        let lvl = AdmissibleLevel::new(1, 1).unwrap();
        let table = w_set(&lvl);
        assert_eq!(table.len(), 3);
        assert_eq!(table[0].h, Rat::zero());
        assert_eq!(table[0].q, Rat::zero());
        assert_eq!(table[1].h, Rat::new(1, 6));
        assert_eq!(table[1].q, Rat::new(-1, 3));
        assert_eq!(table[2].h, Rat::new(1, 6));
        assert_eq!(table[2].q, Rat::new(1, 3));
    }

    #[test]
    fn curve_membership_at_level_one_half() {
        let lvl = AdmissibleLevel::new(1, 2).unwrap();
        // h = 1/8, q = 0: both sides equal 1/5; the mirror pair {-5/2, 1/2}
        // both match and the larger witness is reported
        let hit = d_membership(&lvl, &Rat::new(1, 8), &Rat::zero()).unwrap();
        assert_eq!(hit, Some(Rat::new(1, 2)));
        let miss = d_membership(&lvl, &Rat::zero(), &Rat::zero()).unwrap();
        assert_eq!(miss, None);
    }

    #[test]
    fn curves_are_undefined_at_integral_level() {
        let lvl = AdmissibleLevel::new(3, 1).unwrap();
        assert!(matches!(
            d_membership(&lvl, &Rat::zero(), &Rat::zero()),
            Err(EngineError::CurveUndefined(_))
        ));
    }

    #[test]
    fn disjointness_holds_at_the_first_two_levels() {
        for m in [1, 2] {
            let report = disjointness_check(m, 12).unwrap();
            assert!(report.passed(), "m = {m}");
            assert_eq!(report.points_checked as i64, (m + 1) * (m + 2) / 2);
            assert_eq!(report.evaluations, report.points_checked * 6 * 12);
        }
    }
}
