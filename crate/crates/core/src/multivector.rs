//! Sparse multivectors with exact rational coefficients.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::blade::{blade_mul, BasisBlade, Signature};
use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Outcome of a nilpotency search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Nilpotency {
    /// Smallest `n` with `x^n = 0`.
    Index(usize),
    NotNilpotent,
}

impl Nilpotency {
    pub fn index(self) -> Option<usize> {
        match self {
            Nilpotency::Index(n) => Some(n),
            Nilpotency::NotNilpotent => None,
        }
    }
}

/// A finite linear combination of basis blades.
///
/// Terms are kept in ascending blade-mask order and never store a zero
/// coefficient, so structural equality is algebraic equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multivector {
    sig: Signature,
    terms: BTreeMap<BasisBlade, Rational>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, Rational::one())
    }

    pub fn scalar(sig: Signature, c: Rational) -> Self {
        Self::term(sig, c, BasisBlade::SCALAR)
    }

    /// `c * blade`; the blade must be valid for `sig`.
    pub fn term(sig: Signature, c: Rational, blade: BasisBlade) -> Self {
        debug_assert!(sig.contains(blade));
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(blade, c);
        }
        Multivector { sig, terms }
    }

    pub fn blade(sig: Signature, blade: BasisBlade) -> Result<Self> {
        sig.check_blade(blade)?;
        Ok(Self::term(sig, Rational::one(), blade))
    }

    pub fn generator(sig: Signature, index: usize) -> Result<Self> {
        let b = sig.generator(index)?;
        Ok(Self::term(sig, Rational::one(), b))
    }

    /// Builds a multivector from `(blade, coefficient)` pairs, summing
    /// repeated blades.
    pub fn from_terms<I>(sig: Signature, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BasisBlade, Rational)>,
    {
        let mut acc = BTreeMap::new();
        for (b, c) in terms {
            sig.check_blade(b)?;
            accumulate(&mut acc, b, c);
        }
        Ok(Multivector { sig, terms: acc })
    }

    pub(crate) fn from_map_unchecked(
        sig: Signature,
        mut terms: BTreeMap<BasisBlade, Rational>,
    ) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Multivector { sig, terms }
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (BasisBlade, &Rational)> + '_ {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn blades(&self) -> impl Iterator<Item = BasisBlade> + '_ {
        self.terms.keys().copied()
    }

    pub fn coefficient(&self, blade: BasisBlade) -> Rational {
        self.terms
            .get(&blade)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&BasisBlade::SCALAR)
                .is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_sig(&self, other: &Self) -> Result<()> {
        if self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                left: self.sig.to_string(),
                right: other.sig.to_string(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_sig(other)?;
        let mut terms = self.terms.clone();
        for (b, c) in &other.terms {
            accumulate(&mut terms, *b, c.clone());
        }
        Ok(Multivector {
            sig: self.sig,
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    /// Bilinear extension of [`blade_mul`].
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_sig(other)?;
        let mut terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (sign, blade) = blade_mul(&self.sig, *a, *b);
                if sign == 0 {
                    continue;
                }
                let c = ca * cb;
                accumulate(&mut terms, blade, if sign < 0 { -c } else { c });
            }
        }
        Ok(Multivector {
            sig: self.sig,
            terms,
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.sig);
        }
        Multivector {
            sig: self.sig,
            terms: self.terms.iter().map(|(b, x)| (*b, x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.sig);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    fn filter(&self, keep: impl Fn(BasisBlade) -> bool) -> Self {
        Multivector {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(**b))
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    /// The `C(p, q)` component: terms with no null generator.
    pub fn body(&self) -> Self {
        let null = self.sig.null_mask();
        self.filter(|b| b.mask() & null == 0)
    }

    /// The nil radical component: terms containing a null generator.
    pub fn radical_part(&self) -> Self {
        let null = self.sig.null_mask();
        self.filter(|b| b.mask() & null != 0)
    }

    /// `(body, radical)` with `body + radical == self`.
    pub fn radical_split(&self) -> (Self, Self) {
        (self.body(), self.radical_part())
    }

    /// Null generator indices occurring in any term.
    pub fn null_support(&self) -> BTreeSet<usize> {
        let mask = self
            .terms
            .keys()
            .fold(0u32, |m, b| m | b.null_part(&self.sig).mask());
        BasisBlade::from_mask(mask).indices().collect()
    }

    /// Terms whose null part has exactly `grade` members; `grade` starts at 1.
    pub fn radical_grade_component(&self, grade: usize) -> Result<Self> {
        if grade == 0 {
            return Err(Error::domain(
                "radical grading starts at 1; use the body for grade 0",
            ));
        }
        let sig = self.sig;
        Ok(self.filter(|b| b.null_part(&sig).grade() == grade))
    }

    /// Smallest `n` with `self^n = 0`, searched up to `dim + 1`.
    ///
    /// Powers are first squared until they vanish, which brackets the index
    /// in `(2^(m-1), 2^m]`; a linear scan inside that bracket finds it.
    pub fn nilpotency_index(&self) -> Nilpotency {
        if self.is_zero() {
            return Nilpotency::Index(1);
        }
        let bound = self.sig.dim() + 1;
        let mut exponent = 1usize;
        let mut power = self.clone();
        loop {
            if exponent >= bound {
                return Nilpotency::NotNilpotent;
            }
            let squared = &power * &power;
            if squared.is_zero() {
                break;
            }
            power = squared;
            exponent *= 2;
        }
        // power = self^exponent != 0 and self^(2*exponent) == 0
        let mut k = exponent;
        while k < bound.min(2 * exponent) {
            power = &power * self;
            k += 1;
            if power.is_zero() {
                return Nilpotency::Index(k);
            }
        }
        Nilpotency::NotNilpotent
    }

    /// Inverse of `1 + x` for `x` in the nil radical, as `1 - x + x^2 - ...`.
    pub fn invert_unipotent(&self) -> Result<Self> {
        let (body, x) = self.radical_split();
        if !body.is_one() {
            return Err(Error::domain(format!(
                "expected 1 + x with x in the radical, body is {body}"
            )));
        }
        let minus_x = -&x;
        let mut inverse = Self::one(self.sig);
        let mut power = Self::one(self.sig);
        // any product of z + 1 radical elements repeats a null generator
        for _ in 0..=self.sig.z() {
            power = &power * &minus_x;
            if power.is_zero() {
                break;
            }
            inverse = &inverse + &power;
        }
        if !power.is_zero() {
            return Err(Error::InternalContradiction(format!(
                "radical element {x} is not nilpotent"
            )));
        }
        if !(self * &inverse).is_one() || !(&inverse * self).is_one() {
            return Err(Error::InternalContradiction(format!(
                "geometric series failed to invert {self}"
            )));
        }
        Ok(inverse)
    }
}

fn accumulate(terms: &mut BTreeMap<BasisBlade, Rational>, blade: BasisBlade, c: Rational) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match terms.entry(blade) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

// Operator forms panic on a signature mismatch; use the `checked_*`
// methods when operands may come from different algebras.

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.checked_add(rhs).expect("multivector addition")
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.checked_sub(rhs).expect("multivector subtraction")
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.checked_mul(rhs).expect("multivector product")
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector {
            sig: self.sig,
            terms: self.terms.iter().map(|(b, c)| (*b, -c)).collect(),
        }
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}

fn write_magnitude(f: &mut fmt::Formatter<'_>, c: &Rational, blade: BasisBlade) -> fmt::Result {
    let mag = c.abs();
    if blade.is_scalar() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        write!(f, "{blade}")
    } else {
        write!(f, "{mag}*{blade}")
    }
}

/// Canonical text: `3 + 2*e0 - 5/2*e0*e2`, terms in ascending mask order.
impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_magnitude(f, c, *b)?;
        }
        Ok(())
    }
}
