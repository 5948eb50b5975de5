//! Two-sided ideals of `C(p, q, z)` as exact subspaces.
//!
//! An [`Ideal`] is stored as the reduced row-echelon basis of its underlying
//! subspace, with coordinates indexed by blade mask. Every ideal produced by
//! this module carries a closure certificate: multiplying any basis vector by
//! any generator, on either side, stays inside the span.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::blade::{blade_mul, BasisBlade, Signature};
use crate::error::{Error, Result};
use crate::linalg::{SparseVec, Subspace};
use crate::multivector::{Multivector, Nilpotency};
use crate::parse::{parse_expression, parse_signature};
use crate::structure::{classify_pq, AlgebraClass};

pub(crate) fn to_coords(u: &Multivector) -> SparseVec {
    u.terms()
        .map(|(b, c)| (b.mask() as u64, c.clone()))
        .collect()
}

fn from_row(sig: Signature, row: &[(u64, crate::multivector::Rational)]) -> Multivector {
    Multivector::from_map_unchecked(
        sig,
        row.iter()
            .map(|(col, c)| (BasisBlade::from_mask(*col as u32), c.clone()))
            .collect(),
    )
}

fn blade_times(sig: &Signature, blade: BasisBlade, v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (col, c) in v {
        let (sign, b) = blade_mul(sig, blade, BasisBlade::from_mask(*col as u32));
        push_signed(&mut out, sign, b, c);
    }
    out
}

fn times_blade(sig: &Signature, v: &SparseVec, blade: BasisBlade) -> SparseVec {
    let mut out = SparseVec::new();
    for (col, c) in v {
        let (sign, b) = blade_mul(sig, BasisBlade::from_mask(*col as u32), blade);
        push_signed(&mut out, sign, b, c);
    }
    out
}

// Left or right multiplication by a fixed blade permutes blades, so no two
// terms collide and plain insertion is enough.
fn push_signed(out: &mut SparseVec, sign: i8, b: BasisBlade, c: &crate::multivector::Rational) {
    match sign {
        0 => {}
        1 => {
            out.insert(b.mask() as u64, c.clone());
        }
        _ => {
            out.insert(b.mask() as u64, -c);
        }
    }
}

fn row_vec(row: &[(u64, crate::multivector::Rational)]) -> SparseVec {
    row.iter().cloned().collect()
}

/// A two-sided ideal given by an echelonized basis.
#[derive(Clone, Debug)]
pub struct Ideal {
    sig: Signature,
    space: Subspace,
    closed: bool,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.sig == other.sig && self.space == other.space
    }
}

impl Eq for Ideal {}

impl Ideal {
    pub fn zero(sig: Signature) -> Self {
        Ideal {
            sig,
            space: Subspace::new(),
            closed: true,
        }
    }

    pub fn whole(sig: Signature) -> Self {
        Ideal {
            sig,
            space: blade_span(sig, |_| true),
            closed: true,
        }
    }

    /// The span of `vectors`, not yet certified as an ideal.
    pub fn span(sig: Signature, vectors: &[Multivector]) -> Result<Self> {
        check_sigs(sig, vectors)?;
        Ok(Ideal {
            sig,
            space: Subspace::span(vectors.iter().map(to_coords)),
            closed: false,
        })
    }

    /// Checks two-sided closure and sets the certificate.
    pub fn certify(mut self) -> Result<Self> {
        if !self.closure_holds() {
            return Err(Error::domain(
                "span is not closed under multiplication by generators",
            ));
        }
        self.closed = true;
        Ok(self)
    }

    fn certified(sig: Signature, space: Subspace, what: &str) -> Result<Self> {
        let ideal = Ideal {
            sig,
            space,
            closed: false,
        };
        if !ideal.closure_holds() {
            return Err(Error::InternalContradiction(format!(
                "{what} is not a two-sided ideal"
            )));
        }
        Ok(Ideal {
            closed: true,
            ..ideal
        })
    }

    /// For every basis vector `v` and generator `g`, `g·v` and `v·g` reduce
    /// to zero against the basis.
    pub fn closure_holds(&self) -> bool {
        let sig = &self.sig;
        let gens: Vec<BasisBlade> = (0..sig.generators())
            .map(|i| BasisBlade::from_mask(1 << i))
            .collect();
        self.space.rows().all(|row| {
            let v = row_vec(row);
            gens.iter().all(|g| {
                self.space.contains(&blade_times(sig, *g, &v))
                    && self.space.contains(&times_blade(sig, &v, *g))
            })
        })
    }

    /// Smallest two-sided ideal containing `gens`: the span of every
    /// `e_A · g · e_B`, built as the left span of `e_A · g` followed by its
    /// right span under every `e_B`.
    pub fn generated_by(sig: Signature, gens: &[Multivector]) -> Result<Self> {
        check_sigs(sig, gens)?;
        let full = sig.dim();
        let mut left = Subspace::new();
        'gens: for g in gens {
            let gv = to_coords(g);
            if gv.is_empty() {
                continue;
            }
            for a in sig.blades() {
                left.insert(blade_times(&sig, a, &gv));
                if left.dim() == full {
                    break 'gens;
                }
            }
        }
        if left.dim() == full {
            return Ok(Ideal::whole(sig));
        }
        let mut space = left.clone();
        'rows: for row in left.rows() {
            let v = row_vec(row);
            for b in sig.blades() {
                space.insert(times_blade(&sig, &v, b));
                if space.dim() == full {
                    break 'rows;
                }
            }
        }
        Ideal::certified(sig, space, "generated ideal")
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn is_whole(&self) -> bool {
        self.dim() == self.sig.dim()
    }

    /// Reduced row-echelon basis in ascending pivot order.
    pub fn basis(&self) -> Vec<Multivector> {
        self.space.rows().map(|r| from_row(self.sig, r)).collect()
    }

    /// Every basis vector has only null-containing blades, which is exactly
    /// membership in the nil radical.
    pub fn is_in_radical(&self) -> bool {
        let null = self.sig.null_mask() as u64;
        self.space
            .rows()
            .all(|r| r.iter().all(|(col, _)| col & null != 0))
    }

    fn require_closed(&self) -> Result<()> {
        if self.closed {
            Ok(())
        } else {
            Err(Error::NotClosed)
        }
    }

    fn same_sig(&self, other: &Ideal) -> Result<()> {
        if self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                left: self.sig.to_string(),
                right: other.sig.to_string(),
            })
        }
    }

    pub fn contains(&self, u: &Multivector) -> Result<bool> {
        if u.sig() != self.sig {
            return Err(Error::SignatureMismatch {
                left: self.sig.to_string(),
                right: u.sig().to_string(),
            });
        }
        Ok(self.space.contains(&to_coords(u)))
    }

    pub fn is_subideal_of(&self, other: &Ideal) -> Result<bool> {
        self.same_sig(other)?;
        Ok(self.space.is_subspace_of(&other.space))
    }

    fn binary_pre(&self, other: &Ideal) -> Result<()> {
        self.same_sig(other)?;
        self.require_closed()?;
        other.require_closed()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.binary_pre(other)?;
        Ideal::certified(self.sig, self.space.sum(&other.space), "ideal sum")
    }

    /// `IJ`, spanned by the products of basis vectors.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.binary_pre(other)?;
        let lhs = self.basis();
        let rhs = other.basis();
        let mut space = Subspace::new();
        for a in &lhs {
            for b in &rhs {
                space.insert(to_coords(&(a * b)));
            }
        }
        Ideal::certified(self.sig, space, "ideal product")
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.binary_pre(other)?;
        let offset = self.sig.dim() as u64;
        Ideal::certified(
            self.sig,
            self.space.intersect(&other.space, offset),
            "ideal intersection",
        )
    }

    /// Smallest `n` with `I^n = 0`, searched up to `z + 1`.
    pub fn nilpotency_index(&self) -> Result<Nilpotency> {
        self.require_closed()?;
        if self.is_zero() {
            return Ok(Nilpotency::Index(1));
        }
        let mut power = self.clone();
        for n in 2..=self.sig.z() + 1 {
            power = power.product(self)?;
            if power.is_zero() {
                return Ok(Nilpotency::Index(n));
            }
        }
        Ok(Nilpotency::NotNilpotent)
    }

    /// Canonical and minimal null supports; the ideal must lie in the radical.
    pub fn null_support(&self) -> Result<NullSupport> {
        self.require_closed()?;
        if !self.is_in_radical() {
            return Err(Error::domain("ideal is not contained in the nil radical"));
        }
        let null = self.sig.null_mask();
        let k_parts: BTreeSet<u32> = self
            .space
            .rows()
            .flat_map(|r| r.iter().map(move |(col, _)| *col as u32 & null))
            .collect();
        let canonical_mask = k_parts.iter().fold(0, |m, k| m | k);
        let canonical: Vec<usize> = BasisBlade::from_mask(canonical_mask).indices().collect();
        let minimal = (0..=canonical.len())
            .find_map(|size| {
                combinations(&canonical, size).find(|s| {
                    let mask = s.iter().fold(0u32, |m, i| m | (1 << i));
                    k_parts.iter().all(|k| k & mask != 0)
                })
            })
            .expect("the canonical support always hits every null part");
        Ok(NullSupport {
            canonical: canonical.into_iter().collect(),
            minimal: minimal.into_iter().collect(),
        })
    }

    /// A finite list of generators whose closure is this ideal, pruned from
    /// the echelon basis.
    pub fn generating_witness(&self) -> Result<Vec<Multivector>> {
        self.require_closed()?;
        if !self.is_in_radical() {
            return Err(Error::domain("ideal is not contained in the nil radical"));
        }
        let mut kept: Vec<Multivector> = Vec::new();
        let mut generated = Ideal::zero(self.sig);
        for v in self.basis() {
            if !generated.contains(&v)? {
                generated =
                    generated.sum(&Ideal::generated_by(self.sig, std::slice::from_ref(&v))?)?;
                kept.push(v);
            }
        }
        let mut i = kept.len();
        while i > 0 {
            i -= 1;
            let mut rest = kept.clone();
            rest.remove(i);
            if Ideal::generated_by(self.sig, &rest)? == *self {
                kept = rest;
            }
        }
        if Ideal::generated_by(self.sig, &kept)? != *self {
            return Err(Error::InternalContradiction(
                "pruned generators lost part of the ideal".into(),
            ));
        }
        Ok(kept)
    }

    pub fn to_record(&self) -> IdealRecord {
        IdealRecord {
            signature: self.sig.to_string(),
            dim: self.dim(),
            basis: self.basis().iter().map(|v| v.to_string()).collect(),
        }
    }

    /// Rebuilds and re-certifies an ideal from its serialized form.
    pub fn from_record(record: &IdealRecord) -> Result<Ideal> {
        let sig = parse_signature(&record.signature)?.sig;
        let vectors = record
            .basis
            .iter()
            .map(|t| parse_expression(&sig, t))
            .collect::<Result<Vec<_>>>()?;
        let ideal = Ideal::span(sig, &vectors)?.certify()?;
        if ideal.dim() != record.dim {
            return Err(Error::domain(format!(
                "record claims dimension {} but its basis spans {}",
                record.dim,
                ideal.dim()
            )));
        }
        Ok(ideal)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ideal of C({}) dim {}", self.sig, self.dim())
    }
}

fn check_sigs(sig: Signature, vectors: &[Multivector]) -> Result<()> {
    match vectors.iter().find(|v| v.sig() != sig) {
        Some(v) => Err(Error::SignatureMismatch {
            left: sig.to_string(),
            right: v.sig().to_string(),
        }),
        None => Ok(()),
    }
}

/// Subsets of `items` of the given size in lexicographic order.
fn combinations(items: &[usize], size: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
    let n = items.len();
    let mut idx: Option<Vec<usize>> = (size <= n).then(|| (0..size).collect());
    std::iter::from_fn(move || {
        let current = idx.as_ref()?.clone();
        let out = current.iter().map(|&i| items[i]).collect();
        // advance
        let mut next = current;
        let mut k = size;
        loop {
            if k == 0 {
                idx = None;
                break;
            }
            k -= 1;
            if next[k] < n - size + k {
                next[k] += 1;
                for j in k + 1..size {
                    next[j] = next[j - 1] + 1;
                }
                idx = Some(next);
                break;
            }
        }
        Some(out)
    })
}

/// Serialized ideal: signature header plus canonical basis strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRecord {
    pub signature: String,
    pub dim: usize,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullSupport {
    /// Union of the null supports of the basis vectors.
    pub canonical: BTreeSet<usize>,
    /// A smallest `S` with `I ⊆ I_S`, smallest indices first on ties.
    pub minimal: BTreeSet<usize>,
}

fn blade_span(sig: Signature, keep: impl Fn(BasisBlade) -> bool) -> Subspace {
    Subspace::span(
        sig.blades()
            .filter(|b| keep(*b))
            .map(|b| SparseVec::from([(b.mask() as u64, crate::multivector::Rational::one())])),
    )
}

/// The ideal generated by the null generators, checked against the span of
/// all blades with a null factor.
pub fn nil_radical(sig: Signature) -> Result<Ideal> {
    let gens = sig
        .null_indices()
        .map(|i| Multivector::generator(sig, i))
        .collect::<Result<Vec<_>>>()?;
    let ideal = Ideal::generated_by(sig, &gens)?;
    let null = sig.null_mask();
    if ideal.space != blade_span(sig, |b| b.mask() & null != 0) {
        return Err(Error::InternalContradiction(format!(
            "nil radical of {sig} differs from the null-blade span"
        )));
    }
    debug_assert_eq!(ideal.dim(), sig.body_dim() * ((1 << sig.z()) - 1));
    Ok(ideal)
}

/// The Jacobson radical, which coincides with the nil radical here.
pub fn jacobson_radical(sig: Signature) -> Result<Ideal> {
    nil_radical(sig)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Zero,
    ContainedInRadical,
    C1PlusRadicalPart,
    C2PlusRadicalPart,
    WholeAlgebra,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Zero => "zero",
            Verdict::ContainedInRadical => "contained in radical",
            Verdict::C1PlusRadicalPart => "C1 + (I ∩ R)",
            Verdict::C2PlusRadicalPart => "C2 + (I ∩ R)",
            Verdict::WholeAlgebra => "whole algebra",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub verdict: Verdict,
    pub radical_intersection: Ideal,
    pub dim: usize,
    pub radical_intersection_dim: usize,
}

/// `e·C(p, q)` for a central idempotent `e` of `C(p, q)`.
pub fn component_space(sig: Signature, idempotent: &Multivector) -> Subspace {
    let e = to_coords(idempotent);
    Subspace::span(sig.body_blades().map(|b| times_blade(&sig, &e, b)))
}

/// Places a closed ideal in the classification of two-sided ideals.
///
/// Over a simple `C(p, q)` a proper nonzero ideal lies in the radical. Over
/// a split `C(p, q) = C₁ ⊕ C₂` an ideal outside the radical contains exactly
/// one `Cᵢ` and equals `Cᵢ ⊕ (I ∩ R)`. Any other outcome is reported as an
/// internal contradiction.
pub fn classify(ideal: &Ideal) -> Result<ClassificationReport> {
    ideal.require_closed()?;
    let sig = ideal.sig;
    let radical = nil_radical(sig)?;
    let inter = ideal.intersect(&radical)?;
    let report = |verdict| ClassificationReport {
        verdict,
        dim: ideal.dim(),
        radical_intersection_dim: inter.dim(),
        radical_intersection: inter.clone(),
    };
    if ideal.is_zero() {
        return Ok(report(Verdict::Zero));
    }
    if inter.dim() == ideal.dim() {
        return Ok(report(Verdict::ContainedInRadical));
    }
    if ideal.is_whole() {
        return Ok(report(Verdict::WholeAlgebra));
    }
    match classify_pq(&sig)? {
        AlgebraClass::Simple => Err(Error::InternalContradiction(format!(
            "proper ideal of dim {} escapes the radical of simple C({})",
            ideal.dim(),
            sig
        ))),
        AlgebraClass::Split { e1, e2 } => {
            let c1 = component_space(sig, &e1);
            let c2 = component_space(sig, &e2);
            let has1 = c1.is_subspace_of(&ideal.space);
            let has2 = c2.is_subspace_of(&ideal.space);
            let half = sig.body_dim() / 2;
            let direct_sum = ideal.dim() == half + inter.dim();
            match (has1, has2, direct_sum) {
                (true, false, true) => Ok(report(Verdict::C1PlusRadicalPart)),
                (false, true, true) => Ok(report(Verdict::C2PlusRadicalPart)),
                _ => Err(Error::InternalContradiction(format!(
                    "ideal of dim {} outside the radical of C({}) is not Cᵢ ⊕ (I ∩ R)",
                    ideal.dim(),
                    sig
                ))),
            }
        }
    }
}

/// `[R]` over a simple `C(p, q)`, else `[C₁ ⊕ R, C₂ ⊕ R]`.
pub fn prime_ideals(sig: Signature) -> Result<Vec<Ideal>> {
    let radical = nil_radical(sig)?;
    match classify_pq(&sig)? {
        AlgebraClass::Simple => Ok(vec![radical]),
        AlgebraClass::Split { e1, e2 } => [e1, e2]
            .iter()
            .map(|e| Ideal::generated_by(sig, std::slice::from_ref(e))?.sum(&radical))
            .collect(),
    }
}

/// `I_S`, the ideal generated by the null generators indexed by `set`.
pub fn ideal_from_null_set(sig: Signature, set: &BTreeSet<usize>) -> Result<Ideal> {
    let mut mask = 0u32;
    let mut gens = Vec::with_capacity(set.len());
    for &i in set {
        if sig.role(i)? != crate::blade::Role::Null {
            return Err(Error::domain(format!(
                "e{i} is not a null generator of C({sig})"
            )));
        }
        mask |= 1 << i;
        gens.push(Multivector::generator(sig, i)?);
    }
    let ideal = Ideal::generated_by(sig, &gens)?;
    if ideal.space != blade_span(sig, |b| b.mask() & mask != 0) {
        return Err(Error::InternalContradiction(format!(
            "I_S for S = {set:?} differs from the span of blades meeting S"
        )));
    }
    Ok(ideal)
}

fn chain_pre(sig: Signature, k: usize) -> Result<Vec<usize>> {
    if k > sig.z() {
        return Err(Error::domain(format!(
            "chain length {k} exceeds the {} null generators of C({sig})",
            sig.z()
        )));
    }
    Ok(sig.null_indices().take(k).collect())
}

/// `(n₀) ⊋ (n₀n₁) ⊋ … ⊋ (n₀⋯n_{k-1})` over the first `k` null generators.
pub fn descending_chain(sig: Signature, k: usize) -> Result<Vec<Ideal>> {
    let nulls = chain_pre(sig, k)?;
    let mut chain: Vec<Ideal> = Vec::with_capacity(k);
    for i in 0..k {
        let blade = BasisBlade::from_indices(nulls[..=i].iter().copied())?;
        let ideal = Ideal::generated_by(sig, &[Multivector::blade(sig, blade)?])?;
        if let Some(prev) = chain.last() {
            if !(ideal.is_subideal_of(prev)? && ideal.dim() < prev.dim()) {
                return Err(Error::InternalContradiction(format!(
                    "descending chain stalls at step {i}"
                )));
            }
        }
        chain.push(ideal);
    }
    Ok(chain)
}

/// `(n₀) ⊊ (n₀, n₁) ⊊ … ⊊ (n₀, …, n_{k-1})`.
pub fn ascending_chain(sig: Signature, k: usize) -> Result<Vec<Ideal>> {
    let nulls = chain_pre(sig, k)?;
    let mut chain: Vec<Ideal> = Vec::with_capacity(k);
    for i in 0..k {
        let gens = nulls[..=i]
            .iter()
            .map(|&n| Multivector::generator(sig, n))
            .collect::<Result<Vec<_>>>()?;
        let ideal = Ideal::generated_by(sig, &gens)?;
        if let Some(prev) = chain.last() {
            if !(prev.is_subideal_of(&ideal)? && prev.dim() < ideal.dim()) {
                return Err(Error::InternalContradiction(format!(
                    "ascending chain stalls at step {i}"
                )));
            }
        }
        chain.push(ideal);
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::central_idempotents;

    fn sig(p: usize, q: usize, z: usize) -> Signature {
        Signature::new(p, q, z).unwrap()
    }

    fn e(s: Signature, ix: &[usize]) -> Multivector {
        Multivector::blade(s, BasisBlade::from_indices(ix.iter().copied()).unwrap()).unwrap()
    }

    fn gen(s: Signature, g: &[Multivector]) -> Ideal {
        Ideal::generated_by(s, g).unwrap()
    }

    fn set(ix: &[usize]) -> BTreeSet<usize> {
        ix.iter().copied().collect()
    }

    #[test]
    fn closure_examples() {
        let s = sig(1, 1, 1);
        assert_eq!(gen(s, &[Multivector::one(s)]).dim(), 8);
        let i = gen(s, &[e(s, &[2])]);
        assert_eq!(i.dim(), 4);
        assert!(i.is_closed() && i.closure_holds());
        assert!(gen(s, &[]).is_zero());
        assert!(gen(s, &[Multivector::zero(s)]).is_zero());
    }

    #[test]
    fn membership() {
        let s = sig(1, 1, 1);
        let r = nil_radical(s).unwrap();
        let u = &e(s, &[2]) * &(&Multivector::one(s) + &e(s, &[0]));
        assert!(r.contains(&u).unwrap());
        assert!(!Ideal::zero(s).contains(&Multivector::one(s)).unwrap());
        assert!(gen(s, &[e(s, &[2])]).contains(&e(s, &[0, 2])).unwrap());
        assert!(r.contains(&e(sig(1, 1, 0), &[0])).is_err());
    }

    #[test]
    fn lattice_operations() {
        let s = sig(1, 1, 2);
        let a = gen(s, &[e(s, &[2])]);
        assert_eq!(a.sum(&Ideal::zero(s)).unwrap(), a);
        assert_eq!(a.intersect(&a).unwrap(), a);

        let s = sig(1, 0, 0);
        let (e1, e2) = central_idempotents(&s).unwrap();
        let c1 = gen(s, &[e1]);
        let c2 = gen(s, &[e2]);
        assert!(c1.product(&c2).unwrap().is_zero());
        assert!(c1.intersect(&c2).unwrap().is_zero());
        assert!(c1.sum(&c2).unwrap().is_whole());
    }

    #[test]
    fn uncertified_span_is_rejected_by_products() {
        let s = sig(1, 0, 1);
        let span = Ideal::span(s, &[e(s, &[1])]).unwrap();
        assert!(!span.is_closed());
        assert_eq!(span.product(&span), Err(Error::NotClosed));
        assert!(span.certify().is_err());
        let ok = Ideal::span(s, &[e(s, &[1]), e(s, &[0, 1])])
            .unwrap()
            .certify()
            .unwrap();
        assert_eq!(ok, nil_radical(s).unwrap());
    }

    #[test]
    fn radicals() {
        assert_eq!(nil_radical(sig(1, 1, 1)).unwrap().dim(), 4);
        assert!(nil_radical(sig(2, 1, 0)).unwrap().is_zero());
        let r = nil_radical(sig(0, 0, 2)).unwrap();
        assert_eq!(
            r.basis(),
            vec![
                e(sig(0, 0, 2), &[0]),
                e(sig(0, 0, 2), &[1]),
                e(sig(0, 0, 2), &[0, 1])
            ]
        );
        assert_eq!(jacobson_radical(sig(1, 1, 1)).unwrap().dim(), 4);
        assert!(jacobson_radical(sig(2, 0, 0)).unwrap().is_zero());
        assert_eq!(
            jacobson_radical(sig(0, 0, 1)).unwrap().basis(),
            vec![e(sig(0, 0, 1), &[0])]
        );
    }

    #[test]
    fn classification() {
        let s = sig(1, 1, 1);
        let r = classify(&gen(s, &[e(s, &[2])])).unwrap();
        assert_eq!(r.verdict, Verdict::ContainedInRadical);
        assert_eq!(
            classify(&Ideal::whole(s)).unwrap().verdict,
            Verdict::WholeAlgebra
        );
        assert_eq!(classify(&Ideal::zero(s)).unwrap().verdict, Verdict::Zero);

        let s = sig(1, 0, 1);
        let (e1, e2) = central_idempotents(&s).unwrap();
        let r = classify(&gen(s, &[e1])).unwrap();
        assert_eq!(r.verdict, Verdict::C1PlusRadicalPart);
        assert_eq!((r.dim, r.radical_intersection_dim), (3, 2));
        assert_eq!(
            classify(&gen(s, &[e2])).unwrap().verdict,
            Verdict::C2PlusRadicalPart
        );
    }

    #[test]
    fn primes() {
        let p = prime_ideals(sig(1, 1, 1)).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0], nil_radical(sig(1, 1, 1)).unwrap());
        let dims: Vec<_> = prime_ideals(sig(1, 0, 1))
            .unwrap()
            .iter()
            .map(Ideal::dim)
            .collect();
        assert_eq!(dims, vec![3, 3]);
        let dims: Vec<_> = prime_ideals(sig(1, 0, 0))
            .unwrap()
            .iter()
            .map(Ideal::dim)
            .collect();
        assert_eq!(dims, vec![1, 1]);
    }

    #[test]
    fn nilpotency() {
        let s = sig(1, 1, 1);
        assert_eq!(
            gen(s, &[e(s, &[2])]).nilpotency_index().unwrap(),
            Nilpotency::Index(2)
        );
        assert_eq!(
            Ideal::whole(s).nilpotency_index().unwrap(),
            Nilpotency::NotNilpotent
        );
        assert_eq!(
            Ideal::zero(s).nilpotency_index().unwrap(),
            Nilpotency::Index(1)
        );
        let s = sig(0, 0, 2);
        assert_eq!(
            nil_radical(s).unwrap().nilpotency_index().unwrap(),
            Nilpotency::Index(3)
        );
    }

    #[test]
    fn null_sets() {
        let s = sig(0, 0, 2);
        assert_eq!(
            ideal_from_null_set(s, &set(&[0, 1])).unwrap(),
            nil_radical(s).unwrap()
        );
        assert!(ideal_from_null_set(s, &set(&[])).unwrap().is_zero());
        let i = ideal_from_null_set(s, &set(&[0])).unwrap();
        assert_eq!(i.basis(), vec![e(s, &[0]), e(s, &[0, 1])]);
        assert!(matches!(
            ideal_from_null_set(sig(1, 0, 1), &set(&[0])),
            Err(Error::Domain(_))
        ));
        assert!(ideal_from_null_set(s, &set(&[2])).is_err());
    }

    #[test]
    fn supports() {
        let s = sig(1, 1, 1);
        let ns = gen(s, &[e(s, &[2])]).null_support().unwrap();
        assert_eq!((ns.canonical, ns.minimal), (set(&[2]), set(&[2])));

        let s = sig(0, 0, 2);
        let ns = gen(s, &[e(s, &[0, 1])]).null_support().unwrap();
        assert_eq!((ns.canonical, ns.minimal), (set(&[0, 1]), set(&[0])));

        let ns = Ideal::zero(s).null_support().unwrap();
        assert!(ns.canonical.is_empty() && ns.minimal.is_empty());

        assert!(Ideal::whole(s).null_support().is_err());
    }

    #[test]
    fn chains() {
        let s = sig(0, 0, 3);
        let d: Vec<_> = descending_chain(s, 3)
            .unwrap()
            .iter()
            .map(Ideal::dim)
            .collect();
        assert_eq!(d, vec![4, 2, 1]);
        let a: Vec<_> = ascending_chain(s, 3)
            .unwrap()
            .iter()
            .map(Ideal::dim)
            .collect();
        assert_eq!(a, vec![4, 6, 7]);
        assert_eq!(descending_chain(s, 1).unwrap(), vec![gen(s, &[e(s, &[0])])]);
        assert_eq!(ascending_chain(s, 1).unwrap(), vec![gen(s, &[e(s, &[0])])]);
        assert!(descending_chain(s, 0).unwrap().is_empty());
        assert!(ascending_chain(s, 0).unwrap().is_empty());
        assert!(descending_chain(s, 4).is_err());
        assert!(ascending_chain(s, 4).is_err());
    }

    #[test]
    fn witnesses() {
        let s = sig(1, 1, 1);
        assert_eq!(
            gen(s, &[e(s, &[2])]).generating_witness().unwrap(),
            vec![e(s, &[2])]
        );
        let s = sig(0, 0, 2);
        assert_eq!(
            nil_radical(s).unwrap().generating_witness().unwrap(),
            vec![e(s, &[0]), e(s, &[1])]
        );
        assert!(Ideal::zero(s).generating_witness().unwrap().is_empty());
        assert!(Ideal::whole(s).generating_witness().is_err());
    }

    #[test]
    fn combinations_are_lexicographic() {
        let c: Vec<_> = combinations(&[1, 4, 7], 2).collect();
        assert_eq!(c, vec![vec![1, 4], vec![1, 7], vec![4, 7]]);
        assert_eq!(
            combinations(&[1, 4], 0).collect::<Vec<_>>(),
            vec![Vec::<usize>::new()]
        );
        assert_eq!(combinations(&[1], 2).count(), 0);
    }

    #[test]
    fn records_round_trip() {
        let s = sig(1, 0, 1);
        for p in prime_ideals(s).unwrap() {
            assert_eq!(Ideal::from_record(&p.to_record()).unwrap(), p);
        }
    }
}
