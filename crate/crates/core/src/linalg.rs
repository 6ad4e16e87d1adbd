//! Exact linear algebra over the rationals.
//!
//! Rows are scaled to integers and forward elimination runs fraction-free
//! (Bareiss), so intermediate entries stay integral. Pivoting is
//! deterministic: earliest column, then the candidate of smallest magnitude,
//! then lowest row index. The reduced echelon form is unique for a given
//! column order, so every downstream artifact (spans, coset representatives,
//! nullspace bases) is reproducible bit for bit.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::Rat;

/// Reduced row echelon form: nonzero rows only, pivot columns ascending,
/// pivot entries 1, pivot columns cleared elsewhere.
#[derive(Clone, Debug)]
pub struct Rref {
    pub cols: usize,
    pub rows: Vec<Vec<Rat>>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Canonical coset representative: subtracts multiples of the span rows
    /// until every pivot coordinate of `v` is zero.
    pub fn reduce_in_place(&self, v: &mut [Rat]) {
        assert_eq!(v.len(), self.cols);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let k = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = &*x - &(&k * r);
            }
        }
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w.iter().all(Rat::is_zero)
    }
}

fn clear_denominators(row: &[Rat]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in row {
        l = l.lcm(x.denom());
    }
    row.iter()
        .map(|x| x.numer() * (&l / x.denom()))
        .collect()
}

/// Fraction-free forward elimination; returns the echelon matrix and pivot
/// columns. Every surviving entry is an integer minor of the input.
fn bareiss_echelon(mut m: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..cols {
        if r >= m.len() {
            break;
        }
        let mut best: Option<(usize, BigUint)> = None;
        for (i, row) in m.iter().enumerate().skip(r) {
            if row[col].is_zero() {
                continue;
            }
            let mag = row[col].abs().to_biguint().unwrap();
            match &best {
                Some((_, b)) if *b <= mag => {}
                _ => best = Some((i, mag)),
            }
        }
        let Some((pi, _)) = best else { continue };
        m.swap(r, pi);
        let pivot_row = m[r].clone();
        let pivot = pivot_row[col].clone();
        for row in m.iter_mut().skip(r + 1) {
            let factor = row[col].clone();
            for (k, cell) in row.iter_mut().enumerate() {
                let num = &pivot * &*cell - &factor * &pivot_row[k];
                debug_assert!((&num % &prev).is_zero(), "fraction-free step not exact");
                *cell = num / &prev;
            }
        }
        prev = pivot;
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Reduced row echelon form of the row span.
pub fn rref(rows: &[Vec<Rat>], cols: usize) -> Rref {
    let int_rows: Vec<Vec<BigInt>> = rows
        .iter()
        .inspect(|r| assert_eq!(r.len(), cols, "ragged row"))
        .filter(|r| !r.iter().all(Rat::is_zero))
        .map(|r| clear_denominators(r))
        .collect();
    let (ech, pivots) = bareiss_echelon(int_rows, cols);

    let mut out: Vec<Vec<Rat>> = ech
        .iter()
        .zip(&pivots)
        .map(|(row, &p)| {
            let inv = Rat::from_big(BigInt::one(), row[p].clone()).expect("nonzero pivot");
            row.iter()
                .map(|x| Rat::from_big(x.clone(), BigInt::one()).unwrap() * &inv)
                .collect::<Vec<Rat>>()
        })
        .collect();

    // clear above the pivots, bottom-up
    for i in (0..out.len()).rev() {
        let p = pivots[i];
        let src = out[i].clone();
        for row in out.iter_mut().take(i) {
            if row[p].is_zero() {
                continue;
            }
            let k = row[p].clone();
            for (cell, s) in row.iter_mut().zip(&src) {
                let delta = &k * s;
                *cell = &*cell - &delta;
            }
        }
    }

    Rref { cols, rows: out, pivots }
}

/// Basis of the right nullspace {x : A x = 0}, one vector per free column in
/// ascending column order, with a 1 in the free coordinate.
pub fn nullspace(rows: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let r = rref(rows, cols);
    let mut basis = Vec::new();
    let mut next_pivot = 0;
    for f in 0..cols {
        if next_pivot < r.pivots.len() && r.pivots[next_pivot] == f {
            next_pivot += 1;
            continue;
        }
        let mut v = vec![Rat::zero(); cols];
        v[f] = Rat::one();
        for (row, &p) in r.rows.iter().zip(&r.pivots) {
            v[p] = -&row[f];
        }
        basis.push(v);
    }
    basis
}
