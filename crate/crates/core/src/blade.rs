//! Signatures, basis blades and the generator-level product.
//!
//! Generators are labelled canonically: indices `0..p` square to `+1`,
//! `p..p+q` square to `-1` and `p+q..p+q+z` square to `0`. A basis blade is
//! the product of its member generators in ascending index order, so under
//! this labelling every blade is literally `e_I e_J e_K` with `I` the
//! positive, `J` the negative and `K` the null members.

use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};

/// Default upper bound on `p + q + z`.
pub const DEFAULT_GENERATOR_CAP: usize = 16;

/// Hard limit imposed by the `u32` blade mask.
pub const MAX_GENERATOR_CAP: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Plus,
    Minus,
    Null,
}

impl Role {
    pub fn square(self) -> i8 {
        match self {
            Role::Plus => 1,
            Role::Minus => -1,
            Role::Null => 0,
        }
    }
}

/// The triple `(p, q, z)` of generator counts for `C(p, q, z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    p: usize,
    q: usize,
    z: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize, z: usize) -> Result<Self> {
        Self::with_cap(p, q, z, DEFAULT_GENERATOR_CAP)
    }

    /// Like [`Signature::new`] with a caller-chosen generator cap, itself
    /// bounded by [`MAX_GENERATOR_CAP`].
    pub fn with_cap(p: usize, q: usize, z: usize, cap: usize) -> Result<Self> {
        let cap = cap.min(MAX_GENERATOR_CAP);
        let requested = p.saturating_add(q).saturating_add(z);
        if requested > cap {
            return Err(Error::CapExceeded { requested, cap });
        }
        Ok(Signature { p, q, z })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn z(&self) -> usize {
        self.z
    }

    /// Total number of generators.
    pub fn generators(&self) -> usize {
        self.p + self.q + self.z
    }

    /// Dimension `2^(p+q+z)` of the algebra.
    pub fn dim(&self) -> usize {
        1usize << self.generators()
    }

    /// Dimension `2^(p+q)` of the non-degenerate subalgebra.
    pub fn body_dim(&self) -> usize {
        1usize << (self.p + self.q)
    }

    pub fn plus_indices(&self) -> Range<usize> {
        0..self.p
    }

    pub fn minus_indices(&self) -> Range<usize> {
        self.p..self.p + self.q
    }

    pub fn null_indices(&self) -> Range<usize> {
        self.p + self.q..self.generators()
    }

    pub fn role(&self, index: usize) -> Result<Role> {
        if index < self.p {
            Ok(Role::Plus)
        } else if index < self.p + self.q {
            Ok(Role::Minus)
        } else if index < self.generators() {
            Ok(Role::Null)
        } else {
            Err(Error::IndexOutOfRange {
                index,
                count: self.generators(),
            })
        }
    }

    fn range_mask(range: Range<usize>) -> u32 {
        range.fold(0u32, |m, i| m | (1u32 << i))
    }

    pub fn minus_mask(&self) -> u32 {
        Self::range_mask(self.minus_indices())
    }

    pub fn null_mask(&self) -> u32 {
        Self::range_mask(self.null_indices())
    }

    /// Mask of all positive and negative generators.
    pub fn body_mask(&self) -> u32 {
        Self::range_mask(0..self.p + self.q)
    }

    pub fn full_mask(&self) -> u32 {
        Self::range_mask(0..self.generators())
    }

    pub fn contains(&self, blade: BasisBlade) -> bool {
        blade.0 & !self.full_mask() == 0
    }

    pub fn check_blade(&self, blade: BasisBlade) -> Result<()> {
        if self.contains(blade) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: 31 - blade.0.leading_zeros() as usize,
                count: self.generators(),
            })
        }
    }

    pub fn generator(&self, index: usize) -> Result<BasisBlade> {
        self.role(index)?;
        Ok(BasisBlade(1 << index))
    }

    /// Every basis blade, in ascending mask order.
    pub fn blades(&self) -> impl Iterator<Item = BasisBlade> {
        (0..self.dim() as u64).map(|m| BasisBlade(m as u32))
    }

    /// The blades of the non-degenerate subalgebra `C(p, q)`.
    pub fn body_blades(&self) -> impl Iterator<Item = BasisBlade> {
        (0..self.body_dim() as u64).map(|m| BasisBlade(m as u32))
    }

    /// `(p - q) mod 8` as a non-negative residue.
    pub fn pq_residue(&self) -> usize {
        (self.p as i64 - self.q as i64).rem_euclid(8) as usize
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.p, self.q, self.z)
    }
}

/// A basis blade stored as the bit mask of its member generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BasisBlade(u32);

impl BasisBlade {
    pub const SCALAR: BasisBlade = BasisBlade(0);

    pub const fn from_mask(mask: u32) -> Self {
        BasisBlade(mask)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        let mut mask = 0u32;
        for i in indices {
            if i >= MAX_GENERATOR_CAP {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    count: MAX_GENERATOR_CAP,
                });
            }
            if mask & (1 << i) != 0 {
                return Err(Error::domain(format!("generator e{i} repeated in blade")));
            }
            mask |= 1 << i;
        }
        Ok(BasisBlade(mask))
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_scalar(self) -> bool {
        self.0 == 0
    }

    pub fn has(self, index: usize) -> bool {
        index < MAX_GENERATOR_CAP && self.0 & (1 << index) != 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// The null members `K` of this blade.
    pub fn null_part(self, sig: &Signature) -> BasisBlade {
        BasisBlade(self.0 & sig.null_mask())
    }

    /// The non-null members `I ∪ J` of this blade.
    pub fn body_part(self, sig: &Signature) -> BasisBlade {
        BasisBlade(self.0 & sig.body_mask())
    }
}

impl fmt::Display for BasisBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "e{i}")?;
        }
        Ok(())
    }
}

pub fn generator_square(sig: &Signature, index: usize) -> Result<i8> {
    Ok(sig.role(index)?.square())
}

/// Number of transpositions needed to sort the word `a ++ b`, i.e. the
/// pairs `(i in a, j in b)` with `i > j`.
fn reorder_swaps(a: u32, b: u32) -> u32 {
    let mut swaps = 0;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += a.checked_shr(j + 1).unwrap_or(0).count_ones();
        rest &= rest - 1;
    }
    swaps
}

/// Product of two basis blades: `a * b = sign * blade`.
///
/// `sign` is zero exactly when the blades share a null generator. Both
/// blades must be valid for `sig`.
pub fn blade_mul(sig: &Signature, a: BasisBlade, b: BasisBlade) -> (i8, BasisBlade) {
    debug_assert!(sig.contains(a) && sig.contains(b));
    let common = a.0 & b.0;
    let product = BasisBlade(a.0 ^ b.0);
    if common & sig.null_mask() != 0 {
        return (0, product);
    }
    let flips = reorder_swaps(a.0, b.0) + (common & sig.minus_mask()).count_ones();
    (if flips.is_multiple_of(2) { 1 } else { -1 }, product)
}

/// The role-restricted member sets `(I, J, K)` of a blade.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BladeParts {
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
    pub null: Vec<usize>,
}

impl BladeParts {
    pub fn grade(&self) -> usize {
        self.plus.len() + self.minus.len() + self.null.len()
    }
}

pub fn blade_parts(sig: &Signature, blade: BasisBlade) -> Result<BladeParts> {
    sig.check_blade(blade)?;
    let mut parts = BladeParts::default();
    for i in blade.indices() {
        match sig.role(i)? {
            Role::Plus => parts.plus.push(i),
            Role::Minus => parts.minus.push(i),
            Role::Null => parts.null.push(i),
        }
    }
    Ok(parts)
}
