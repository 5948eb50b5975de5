//! Brute-force reference computations for cross-checking.
//!
//! Nothing here calls into the blade kernel, the sparse multivector product
//! or the echelon code used by ideals. Blade signs come from literally
//! bubble-sorting the concatenated index word, products go through a dense
//! Cayley table, and ideals are grown to a fixpoint one generator at a time.
//! Everything is exponential and only meant for small algebras.

use num_traits::{One, Zero};

use crate::blade::{BasisBlade, Signature};
use crate::error::{Error, Result};
use crate::multivector::{Multivector, Nilpotency, Rational};

pub const TABLE_LIMIT: usize = 10;
pub const CLOSURE_LIMIT: usize = 8;

fn check_size(sig: &Signature, limit: usize) -> Result<usize> {
    let n = sig.p() + sig.q() + sig.z();
    if n > limit {
        return Err(Error::CapExceeded {
            requested: n,
            cap: limit,
        });
    }
    Ok(n)
}

fn square_of(sig: &Signature, index: usize) -> i8 {
    if index < sig.p() {
        1
    } else if index < sig.p() + sig.q() {
        -1
    } else {
        0
    }
}

/// Product of two blades by sorting the index word with adjacent swaps and
/// then contracting equal neighbours.
pub fn oracle_blade_mul(sig: &Signature, a: BasisBlade, b: BasisBlade) -> Result<(i8, BasisBlade)> {
    let n = check_size(sig, TABLE_LIMIT)?;
    let mut word: Vec<usize> = Vec::new();
    for blade in [a, b] {
        for i in 0..32 {
            if blade.mask() >> i & 1 == 1 {
                if i >= n {
                    return Err(Error::IndexOutOfRange { index: i, count: n });
                }
                word.push(i);
            }
        }
    }
    let mut sign: i8 = 1;
    for end in (1..word.len()).rev() {
        for j in 0..end {
            if word[j] > word[j + 1] {
                word.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    let mut rest = Vec::new();
    let mut j = 0;
    while j < word.len() {
        if j + 1 < word.len() && word[j] == word[j + 1] {
            sign *= square_of(sig, word[j]);
            j += 2;
        } else {
            rest.push(word[j]);
            j += 1;
        }
    }
    let mask = rest.iter().fold(0u32, |m, i| m | (1 << i));
    Ok((sign, BasisBlade::from_mask(mask)))
}

/// Full `2^n × 2^n` table of blade products.
#[derive(Clone, Debug)]
pub struct DenseTable {
    sig: Signature,
    size: usize,
    table: Vec<(i8, u32)>,
}

impl DenseTable {
    pub fn new(sig: &Signature) -> Result<Self> {
        let n = check_size(sig, TABLE_LIMIT)?;
        let size = 1usize << n;
        let mut table = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                let (s, c) = oracle_blade_mul(
                    sig,
                    BasisBlade::from_mask(a as u32),
                    BasisBlade::from_mask(b as u32),
                )?;
                table.push((s, c.mask()));
            }
        }
        Ok(DenseTable {
            sig: *sig,
            size,
            table,
        })
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, a: BasisBlade, b: BasisBlade) -> (i8, BasisBlade) {
        let (s, c) = self.table[a.mask() as usize * self.size + b.mask() as usize];
        (s, BasisBlade::from_mask(c))
    }

    pub fn to_dense(&self, u: &Multivector) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.size];
        for (b, c) in u.terms() {
            v[b.mask() as usize] = c.clone();
        }
        v
    }

    pub fn from_dense(&self, v: &[Rational]) -> Multivector {
        Multivector::from_terms(
            self.sig,
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (BasisBlade::from_mask(i as u32), c.clone())),
        )
        .expect("dense index within table size")
    }

    pub fn mul_dense(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.size];
        for (i, a) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let (s, c) = self.table[i * self.size + j];
                match s {
                    0 => {}
                    1 => out[c as usize] += a * b,
                    _ => out[c as usize] -= a * b,
                }
            }
        }
        out
    }

    pub fn mul(&self, x: &Multivector, y: &Multivector) -> Multivector {
        self.from_dense(&self.mul_dense(&self.to_dense(x), &self.to_dense(y)))
    }
}

/// Dense row echelon form without back-substitution until requested.
struct Echelon {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [Rational]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
    }

    fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = Rational::one() / &v[p];
        for x in v.iter_mut() {
            *x *= &inv;
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, v));
        true
    }

    /// Back-substituted rows in ascending pivot order.
    fn reduced_rows(&self) -> Vec<Vec<Rational>> {
        let mut rows: Vec<(usize, Vec<Rational>)> = self.rows.clone();
        for k in (0..rows.len()).rev() {
            let (p, pivot_row) = rows[k].clone();
            for (_, row) in rows.iter_mut().take(k) {
                if !row[p].is_zero() {
                    let c = row[p].clone();
                    for (x, r) in row.iter_mut().zip(&pivot_row) {
                        *x -= &c * r;
                    }
                }
            }
        }
        rows.into_iter().map(|(_, r)| r).collect()
    }

    fn same_span(&self, other: &Echelon) -> bool {
        self.dim() == other.dim() && self.reduced_rows() == other.reduced_rows()
    }
}

/// Grows `span(gens)` under left and right multiplication by generators
/// until nothing new appears; returns the reduced echelon basis.
pub fn oracle_closure_fixpoint(sig: &Signature, gens: &[Multivector]) -> Result<Vec<Multivector>> {
    let n = check_size(sig, CLOSURE_LIMIT)?;
    let table = DenseTable::new(sig)?;
    let generators: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut v = vec![Rational::zero(); table.size];
            v[1 << i] = Rational::one();
            v
        })
        .collect();
    let mut span = Echelon::new();
    let mut queue: Vec<Vec<Rational>> = Vec::new();
    for g in gens {
        let v = table.to_dense(g);
        if span.insert(v.clone()) {
            queue.push(v);
        }
    }
    while let Some(v) = queue.pop() {
        if span.dim() == table.size {
            break;
        }
        for g in &generators {
            for w in [table.mul_dense(g, &v), table.mul_dense(&v, g)] {
                if span.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
    }
    Ok(span
        .reduced_rows()
        .iter()
        .map(|r| table.from_dense(r))
        .collect())
}

/// Powers of the ideal spanned by `basis`, each the span of all products of
/// the previous power with the ideal, until they vanish or stop shrinking.
pub fn oracle_nilpotency(sig: &Signature, basis: &[Multivector]) -> Result<Nilpotency> {
    check_size(sig, CLOSURE_LIMIT)?;
    let table = DenseTable::new(sig)?;
    let ideal: Vec<Vec<Rational>> = basis.iter().map(|u| table.to_dense(u)).collect();
    let mut power = Echelon::new();
    for v in &ideal {
        power.insert(v.clone());
    }
    if power.dim() == 0 {
        return Ok(Nilpotency::Index(1));
    }
    let bound = table.size + 1;
    let mut k = 1;
    while k < bound {
        let mut next = Echelon::new();
        for a in power.reduced_rows() {
            for b in &ideal {
                next.insert(table.mul_dense(&a, b));
            }
        }
        k += 1;
        if next.dim() == 0 {
            return Ok(Nilpotency::Index(k));
        }
        if next.same_span(&power) {
            return Ok(Nilpotency::NotNilpotent);
        }
        power = next;
    }
    Ok(Nilpotency::NotNilpotent)
}
