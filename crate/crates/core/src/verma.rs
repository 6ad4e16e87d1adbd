//! Highest-weight modules and their normal-ordered mode action.
//!
//! A [`Module`] is a Verma module over the highest weight (h, q, c), possibly
//! presented as a quotient by the submodule generated by a list of singular
//! vectors. Elements are homogeneous linear combinations of canonical basis
//! words; the action of any mode is computed by straightening the raw product
//! against the bracket until every term is canonical, evaluating annihilators
//! and zero modes on the highest-weight vector as it goes.
//!
//! Straightening terminates: swapping an out-of-order pair either shortens a
//! term (the bracket part), walks an annihilator strictly closer to the
//! highest-weight vector, or removes an inversion among creation modes, and
//! all of this happens inside one fixed grade, where word length is bounded.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use serde::Serialize;

use crate::algebra::{bracket, AlgebraElement, Grade, Mode, ModeKind};
use crate::character::CharacterTable;
use crate::error::EngineError;
use crate::linalg::{rref, Rref};
use crate::pbw::{basis_words, pair_ok, PbwWord};
use crate::rat::Rat;

/// Highest weight: L_0, T_0 and central eigenvalues.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HighestWeight {
    pub h: Rat,
    pub q: Rat,
    pub c: Rat,
}

impl HighestWeight {
    pub fn new(h: Rat, q: Rat, c: Rat) -> HighestWeight {
        HighestWeight { h, q, c }
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.h, self.q, self.c)
    }
}

/// Homogeneous module element: a coefficient per canonical word, all words of
/// one grade. The zero element keeps its grade so arithmetic stays total.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleElement {
    grade: Grade,
    terms: BTreeMap<PbwWord, Rat>,
}

impl ModuleElement {
    pub fn zero(grade: Grade) -> ModuleElement {
        ModuleElement { grade, terms: BTreeMap::new() }
    }

    pub fn grade(&self) -> Grade {
        self.grade
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwWord, &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &PbwWord) -> Rat {
        self.terms.get(w).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, w: PbwWord, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scaled(&self, k: &Rat) -> ModuleElement {
        if k.is_zero() {
            return ModuleElement::zero(self.grade);
        }
        ModuleElement {
            grade: self.grade,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// Sum; grades must agree unless one side is zero.
    pub fn checked_add(&self, other: &ModuleElement) -> Result<ModuleElement, EngineError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.grade != other.grade {
            return Err(EngineError::MixedGrades {
                expected: self.grade.to_string(),
                found: other.grade.to_string(),
            });
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    /// Coordinates with respect to a sorted basis of the element's grade.
    pub fn coords(&self, basis: &[PbwWord]) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); basis.len()];
        for (w, c) in &self.terms {
            let i = basis
                .binary_search(w)
                .expect("element term outside the graded basis");
            v[i] = c.clone();
        }
        v
    }

    pub fn from_coords(grade: Grade, basis: &[PbwWord], v: &[Rat]) -> ModuleElement {
        let mut out = ModuleElement::zero(grade);
        for (w, c) in basis.iter().zip(v) {
            if !c.is_zero() {
                out.terms.insert(w.clone(), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·{w}")?;
        }
        Ok(())
    }
}

/// Span of the quotient generators inside one Verma graded piece.
pub struct SpanInfo {
    pub basis: Rc<Vec<PbwWord>>,
    pub rref: Rref,
}

type ActCache = RefCell<HashMap<(Mode, PbwWord), Rc<Vec<(PbwWord, Rat)>>>>;

/// A Verma module or a quotient presentation of one.
pub struct Module {
    hw: HighestWeight,
    quotient_generators: Vec<ModuleElement>,
    cutoff2: i64,
    basis_cache: RefCell<HashMap<Grade, Rc<Vec<PbwWord>>>>,
    span_cache: RefCell<HashMap<Grade, Rc<SpanInfo>>>,
    act_cache: ActCache,
    character: RefCell<Option<Rc<CharacterTable>>>,
}

impl Module {
    pub fn verma(hw: HighestWeight, cutoff2: i64) -> Module {
        Module {
            hw,
            quotient_generators: Vec::new(),
            cutoff2,
            basis_cache: RefCell::new(HashMap::new()),
            span_cache: RefCell::new(HashMap::new()),
            act_cache: RefCell::new(HashMap::new()),
            character: RefCell::new(None),
        }
    }

    /// Quotient presentation. Generators must be nonzero homogeneous Verma
    /// elements; the submodule they span is applied grade by grade.
    pub fn with_quotient(
        hw: HighestWeight,
        generators: Vec<ModuleElement>,
        cutoff2: i64,
    ) -> Result<Module, EngineError> {
        for g in &generators {
            if g.is_zero() {
                return Err(EngineError::Internal(
                    "zero quotient generator".to_string(),
                ));
            }
        }
        let mut m = Module::verma(hw, cutoff2);
        m.quotient_generators = generators;
        Ok(m)
    }

    /// The vacuum quotient at central charge c: weight (0, 0, c) modulo the
    /// submodule generated by G+_{-1/2} and G-_{-1/2} applied to the vacuum.
    pub fn vacuum_quotient(c: Rat, cutoff2: i64) -> Module {
        let hw = HighestWeight::new(Rat::zero(), Rat::zero(), c);
        let verma = Module::verma(hw.clone(), cutoff2);
        let vac = verma.highest_weight_vector();
        let gens = vec![
            verma.act(Mode::g_plus(-1), &vac).expect("verma action is total"),
            verma.act(Mode::g_minus(-1), &vac).expect("verma action is total"),
        ];
        Module::with_quotient(hw, gens, cutoff2).expect("generators are nonzero")
    }

    pub fn hw(&self) -> &HighestWeight {
        &self.hw
    }

    pub fn cutoff2(&self) -> i64 {
        self.cutoff2
    }

    pub fn is_quotient(&self) -> bool {
        !self.quotient_generators.is_empty()
    }

    pub fn quotient_generators(&self) -> &[ModuleElement] {
        &self.quotient_generators
    }

    pub fn highest_weight_vector(&self) -> ModuleElement {
        let mut e = ModuleElement::zero(Grade::zero());
        e.terms.insert(PbwWord::empty(), Rat::one());
        e
    }

    pub fn element_from_word(&self, w: PbwWord) -> Result<ModuleElement, EngineError> {
        self.element_from_terms(vec![(w, Rat::one())])
    }

    /// Builds an element, enforcing homogeneity; quotient presentations keep
    /// elements reduced to their canonical representative.
    pub fn element_from_terms(
        &self,
        terms: Vec<(PbwWord, Rat)>,
    ) -> Result<ModuleElement, EngineError> {
        let mut grade: Option<Grade> = None;
        for (w, c) in &terms {
            if c.is_zero() {
                continue;
            }
            let g = w.grade();
            match grade {
                None => grade = Some(g),
                Some(g0) if g0 != g => {
                    return Err(EngineError::MixedGrades {
                        expected: g0.to_string(),
                        found: g.to_string(),
                    })
                }
                _ => {}
            }
        }
        let mut e = ModuleElement::zero(grade.unwrap_or_else(Grade::zero));
        for (w, c) in terms {
            e.add_term(w, c);
        }
        self.reduce(e)
    }

    fn check_cutoff(&self, g: Grade) -> Result<(), EngineError> {
        if g.level2 > self.cutoff2 {
            return Err(EngineError::CutoffExceeded {
                requested: g.level(),
                cutoff: Rat::from_half(self.cutoff2),
            });
        }
        Ok(())
    }

    /// Canonical words of the ambient Verma module at this grade.
    pub fn basis(&self, g: Grade) -> Result<Rc<Vec<PbwWord>>, EngineError> {
        self.check_cutoff(g)?;
        if let Some(b) = self.basis_cache.borrow().get(&g) {
            return Ok(Rc::clone(b));
        }
        let b = Rc::new(basis_words(g));
        self.basis_cache.borrow_mut().insert(g, Rc::clone(&b));
        Ok(b)
    }

    /// Graded dimension of this presentation: Verma word count, minus the
    /// submodule rank in a quotient.
    pub fn graded_dim(&self, g: Grade) -> Result<usize, EngineError> {
        let n = self.basis(g)?.len();
        if !self.is_quotient() {
            return Ok(n);
        }
        Ok(n - self.submodule_span(g)?.rref.rank())
    }

    /// Independent count of the same Verma dimension from the character
    /// product.
    pub fn graded_dim_gf(&self, g: Grade) -> Result<usize, EngineError> {
        self.check_cutoff(g)?;
        let table = {
            let mut slot = self.character.borrow_mut();
            if slot.is_none() {
                *slot = Some(Rc::new(CharacterTable::new(self.cutoff2)));
            }
            Rc::clone(slot.as_ref().unwrap())
        };
        table.dim(g)
    }

    /// Normal-ordered action of one mode. In a quotient presentation the
    /// result is reduced to its canonical coset representative, which may
    /// push past the cutoff; the plain Verma action never errors.
    pub fn act(&self, m: Mode, v: &ModuleElement) -> Result<ModuleElement, EngineError> {
        self.reduce(self.act_verma(m, v))
    }

    /// Linear extension of [`Module::act`] to an algebra element; the scalar
    /// part acts as itself.
    pub fn act_elem(
        &self,
        x: &AlgebraElement,
        v: &ModuleElement,
    ) -> Result<ModuleElement, EngineError> {
        let mut acc = v.scaled(&x.constant);
        for (m, coeff) in &x.terms {
            let part = self.act(*m, v)?.scaled(coeff);
            acc = acc.checked_add(&part)?;
        }
        Ok(acc)
    }

    /// Applies a product of modes, rightmost factor first.
    pub fn act_word(&self, modes: &[Mode], v: &ModuleElement) -> Result<ModuleElement, EngineError> {
        let mut cur = v.clone();
        for m in modes.iter().rev() {
            cur = self.act(*m, &cur)?;
        }
        Ok(cur)
    }

    fn act_verma(&self, m: Mode, v: &ModuleElement) -> ModuleElement {
        let target = v.grade + m.grade();
        let mut out = ModuleElement::zero(target);
        for (w, coeff) in &v.terms {
            let img = self.act_mode_on_word(m, w);
            for (w2, c2) in img.iter() {
                out.add_term(w2.clone(), coeff * c2);
            }
        }
        out
    }

    fn act_mode_on_word(&self, m: Mode, w: &PbwWord) -> Rc<Vec<(PbwWord, Rat)>> {
        let key = (m, w.clone());
        if let Some(hit) = self.act_cache.borrow().get(&key) {
            return Rc::clone(hit);
        }

        let mut initial = Vec::with_capacity(w.len() + 1);
        initial.push(m);
        initial.extend_from_slice(w.modes());
        let mut work: Vec<(Vec<Mode>, Rat)> = vec![(initial, Rat::one())];
        let mut out: BTreeMap<PbwWord, Rat> = BTreeMap::new();

        while let Some((word, coeff)) = work.pop() {
            // longest suffix already in canonical creation form
            let k = word.len();
            let mut p = k;
            while p > 0 {
                let x = &word[p - 1];
                if !x.is_creation() {
                    break;
                }
                if p < k && !pair_ok(x, &word[p]) {
                    break;
                }
                p -= 1;
            }
            if p == 0 {
                let entry = out
                    .entry(PbwWord::from_modes_unchecked(word))
                    .or_insert_with(Rat::zero);
                *entry = &*entry + &coeff;
                continue;
            }
            let x = word[p - 1];

            if x.kind == ModeKind::C {
                // central: a scalar wherever it sits
                let mut rest = word.clone();
                rest.remove(p - 1);
                work.push((rest, coeff * &self.hw.c));
                continue;
            }

            if p == k {
                // annihilator or zero mode meets the highest-weight vector
                if x.is_annihilation() {
                    continue;
                }
                let scalar = match x.kind {
                    ModeKind::L => self.hw.h.clone(),
                    ModeKind::T => self.hw.q.clone(),
                    _ => unreachable!("G modes have no zero mode"),
                };
                let mut rest = word;
                rest.pop();
                work.push((rest, coeff * &scalar));
                continue;
            }

            let y = word[p];
            if x == y && x.is_odd() {
                // square of a fermionic mode
                continue;
            }
            // x y = ± y x + [x, y]
            let sign_flip = x.is_odd() && y.is_odd();
            let mut swapped = word.clone();
            swapped.swap(p - 1, p);
            work.push((swapped, if sign_flip { -coeff.clone() } else { coeff.clone() }));
            for (bm, bc) in &bracket(x, y).terms {
                let mut contracted = Vec::with_capacity(word.len() - 1);
                contracted.extend_from_slice(&word[..p - 1]);
                contracted.push(*bm);
                contracted.extend_from_slice(&word[p + 1..]);
                work.push((contracted, &coeff * bc));
            }
        }

        out.retain(|_, c| !c.is_zero());
        let result = Rc::new(out.into_iter().collect::<Vec<_>>());
        self.act_cache.borrow_mut().insert(key, Rc::clone(&result));
        result
    }

    /// Row space of U(creation modes) applied to the quotient generators,
    /// inside the Verma piece at `g`, as a reduced echelon basis.
    pub fn submodule_span(&self, g: Grade) -> Result<Rc<SpanInfo>, EngineError> {
        self.check_cutoff(g)?;
        if let Some(s) = self.span_cache.borrow().get(&g) {
            return Ok(Rc::clone(s));
        }
        let basis = self.basis(g)?;
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for gen in &self.quotient_generators {
            let comp = g - gen.grade();
            if comp.level2 < 0 {
                continue;
            }
            for u in basis_words(comp) {
                let mut img = gen.clone();
                for mode in u.modes().iter().rev() {
                    img = self.act_verma(*mode, &img);
                }
                if !img.is_zero() {
                    rows.push(img.coords(&basis));
                }
            }
        }
        let info = Rc::new(SpanInfo { basis: Rc::clone(&basis), rref: rref(&rows, basis.len()) });
        self.span_cache.borrow_mut().insert(g, Rc::clone(&info));
        Ok(info)
    }

    /// Canonical representative modulo the quotient span (identity on plain
    /// Verma modules).
    pub fn reduce(&self, v: ModuleElement) -> Result<ModuleElement, EngineError> {
        if !self.is_quotient() || v.is_zero() {
            return Ok(v);
        }
        let span = self.submodule_span(v.grade)?;
        if span.rref.rank() == 0 {
            return Ok(v);
        }
        let mut coords = v.coords(&span.basis);
        span.rref.reduce_in_place(&mut coords);
        Ok(ModuleElement::from_coords(v.grade, &span.basis, &coords))
    }
}

/// One annihilation probe from a singularity audit.
#[derive(Clone, Debug)]
pub struct AnnihilationCheck {
    pub generator: Mode,
    pub residual: ModuleElement,
}

impl AnnihilationCheck {
    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Result of [`Module::is_singular`]: the candidate is singular iff every
/// probe annihilated it.
#[derive(Clone, Debug)]
pub struct SingularityCheck {
    pub checks: Vec<AnnihilationCheck>,
}

impl SingularityCheck {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(AnnihilationCheck::passed)
    }
}

/// Positive modes whose vanishing forces every other positive mode to vanish:
/// L_1 = {G+_{1/2}, G-_{1/2}}/2, T_1 completes the generating triple, and the
/// higher modes follow by bracketing.
pub fn base_positive_probes() -> Vec<Mode> {
    vec![Mode::t(1), Mode::g_plus(1), Mode::g_minus(1)]
}

/// Every positive mode of level at most `level2`/2, block order.
pub fn paranoid_positive_probes(level2: i64) -> Vec<Mode> {
    let mut out = Vec::new();
    let mut n = 1;
    while 2 * n <= level2 {
        out.push(Mode::l(n));
        n += 1;
    }
    let mut n = 1;
    while 2 * n <= level2 {
        out.push(Mode::t(n));
        n += 1;
    }
    let mut r2 = 1;
    while r2 <= level2 {
        out.push(Mode::g_plus(r2));
        r2 += 2;
    }
    let mut r2 = 1;
    while r2 <= level2 {
        out.push(Mode::g_minus(r2));
        r2 += 2;
    }
    out
}

impl Module {
    /// Audits whether `v` is singular: nonzero and annihilated by every
    /// positive mode. The base probe set is {T_1, G+_{1/2}, G-_{1/2}};
    /// `paranoid` swaps in every positive mode up to the candidate's level.
    pub fn is_singular(
        &self,
        v: &ModuleElement,
        paranoid: bool,
    ) -> Result<SingularityCheck, EngineError> {
        if v.is_zero() {
            return Err(EngineError::ZeroCandidate);
        }
        let probes = if paranoid {
            paranoid_positive_probes(v.grade().level2)
        } else {
            base_positive_probes()
        };
        let mut checks = Vec::with_capacity(probes.len());
        for m in probes {
            let residual = self.act(m, v)?;
            checks.push(AnnihilationCheck { generator: m, residual });
        }
        Ok(SingularityCheck { checks })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn generic_hw() -> HighestWeight {
        HighestWeight::new(Rat::new(3, 7), Rat::new(-2, 5), Rat::new(11, 3))
    }

    fn single(m: &Module, modes: Vec<Mode>) -> ModuleElement {
        m.element_from_word(PbwWord::from_modes(modes).unwrap()).unwrap()
    }

    #[test]
    fn charged_rim_pairing_reads_off_the_weight() {
        let hw = generic_hw();
        let m = Module::verma(hw.clone(), 12);
        let v = single(&m, vec![Mode::g_minus(-1)]);
        let out = m.act(Mode::g_plus(1), &v).unwrap();
        // G+_{1/2} G-_{-1/2} |hw> = (2h + q)|hw>
        let want = Rat::new(2, 1) * &hw.h + &hw.q;
        assert_eq!(out.coeff(&PbwWord::empty()), want);
        assert_eq!(out.len(), 1);

        let v = single(&m, vec![Mode::g_plus(-1)]);
        let out = m.act(Mode::g_minus(1), &v).unwrap();
        let want = Rat::new(2, 1) * &hw.h - &hw.q;
        assert_eq!(out.coeff(&PbwWord::empty()), want);
    }

    #[test]
    fn rim_supercharges_annihilate_the_uncharged_vacuum_pairing() {
        let m = Module::verma(
            HighestWeight::new(Rat::zero(), Rat::zero(), Rat::new(7, 11)),
            12,
        );
        let v = single(&m, vec![Mode::g_plus(-1)]);
        assert!(m.act(Mode::g_minus(1), &v).unwrap().is_zero());
        let v = single(&m, vec![Mode::g_minus(-1)]);
        assert!(m.act(Mode::g_plus(1), &v).unwrap().is_zero());
    }

    #[test]
    fn positive_heisenberg_mode_annihilates_charged_rim_vector() {
        let m = Module::verma(generic_hw(), 12);
        let v = single(&m, vec![Mode::g_plus(-1)]);
        assert!(m.act(Mode::t(1), &v).unwrap().is_zero());
    }

    #[test]
    fn fermionic_square_kills_the_term() {
        let m = Module::verma(generic_hw(), 12);
        let v = single(&m, vec![Mode::g_plus(-1)]);
        assert!(m.act(Mode::g_plus(-1), &v).unwrap().is_zero());
    }

    #[test]
    fn creation_modes_stack_into_canonical_words() {
        let m = Module::verma(generic_hw(), 12);
        let vac = m.highest_weight_vector();
        let v = m.act(Mode::l(-1), &vac).unwrap();
        assert_eq!(v.coeff(&PbwWord::from_modes(vec![Mode::l(-1)]).unwrap()), Rat::one());
        // T_{-1} L_{-1} |hw> = L_{-1} T_{-1} |hw> - T_{-2} |hw>
        let w = m.act(Mode::t(-1), &v).unwrap();
        let lt = PbwWord::from_modes(vec![Mode::l(-1), Mode::t(-1)]).unwrap();
        let t2 = PbwWord::from_modes(vec![Mode::t(-2)]).unwrap();
        assert_eq!(w.coeff(&lt), Rat::one());
        assert_eq!(w.coeff(&t2), -Rat::one());
        assert_eq!(w.len(), 2);
    }

    #[test]
    fn graded_dims_match_hand_counts() {
        let m = Module::verma(generic_hw(), 12);
        assert_eq!(m.graded_dim(Grade::new(2, 0)).unwrap(), 3);
        assert_eq!(m.graded_dim(Grade::new(1, -1)).unwrap(), 1);
        assert_eq!(m.graded_dim(Grade::new(0, 0)).unwrap(), 1);
        assert_eq!(m.graded_dim_gf(Grade::new(2, 0)).unwrap(), 3);
    }

    #[test]
    fn vacuum_quotient_kills_rim_states_and_translated_vacuum() {
        let m = Module::vacuum_quotient(Rat::new(7, 11), 12);
        assert_eq!(m.graded_dim(Grade::new(1, 1)).unwrap(), 0);
        assert_eq!(m.graded_dim(Grade::new(1, -1)).unwrap(), 0);
        // L_{-1}|0> lies in the submodule, T_{-1}|0> survives
        assert_eq!(m.graded_dim(Grade::new(2, 0)).unwrap(), 1);
        let vac = m.highest_weight_vector();
        assert!(m.act(Mode::l(-1), &vac).unwrap().is_zero());
        assert!(!m.act(Mode::t(-1), &vac).unwrap().is_zero());
    }

    #[test]
    fn vacuum_quotient_keeps_the_charged_weight_three_halves_states() {
        let m = Module::vacuum_quotient(Rat::new(7, 11), 12);
        // span rank 2 out of 3 Verma words; the G±_{-3/2} state survives
        let span = m.submodule_span(Grade::new(3, 1)).unwrap();
        assert_eq!(span.rref.rank(), 2);
        assert_eq!(m.graded_dim(Grade::new(3, 1)).unwrap(), 1);
        assert_eq!(m.graded_dim(Grade::new(3, -1)).unwrap(), 1);
        let vac = m.highest_weight_vector();
        assert!(!m.act(Mode::g_plus(-3), &vac).unwrap().is_zero());
    }

    #[test]
    fn mixed_grades_are_rejected() {
        let m = Module::verma(generic_hw(), 12);
        let err = m.element_from_terms(vec![
            (PbwWord::from_modes(vec![Mode::l(-1)]).unwrap(), Rat::one()),
            (PbwWord::from_modes(vec![Mode::l(-2)]).unwrap(), Rat::one()),
        ]);
        assert!(matches!(err, Err(EngineError::MixedGrades { .. })));
    }

    #[test]
    fn cutoff_guards_enumeration() {
        let m = Module::verma(generic_hw(), 4);
        assert!(m.basis(Grade::new(6, 0)).is_err());
        assert!(m.graded_dim(Grade::new(6, 0)).is_err());
    }

    #[test]
    fn singularity_audit_on_the_rim_vectors() {
        let m = Module::verma(
            HighestWeight::new(Rat::zero(), Rat::zero(), Rat::one()),
            12,
        );
        let v = single(&m, vec![Mode::g_plus(-1)]);
        assert!(m.is_singular(&v, false).unwrap().passed());
        assert!(m.is_singular(&v, true).unwrap().passed());

        // zero candidate is rejected outright
        let z = ModuleElement::zero(Grade::new(1, 1));
        assert!(matches!(m.is_singular(&z, false), Err(EngineError::ZeroCandidate)));

        // with 2h - q != 0 the same word is no longer singular
        let m2 = Module::verma(generic_hw(), 12);
        let v2 = single(&m2, vec![Mode::g_plus(-1)]);
        assert!(!m2.is_singular(&v2, false).unwrap().passed());
    }
}
