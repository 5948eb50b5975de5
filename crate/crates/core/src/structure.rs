//! Simple-versus-split classification of the non-degenerate part `C(p, q)`.
//!
//! `C(p, q)` is simple unless `(p - q) mod 8` is 1 or 5. In the split case
//! `p + q` is odd and the volume element `ω` of the non-null generators is
//! central in `C(p, q)` with `ω² = 1`, so `(1 ± ω) / 2` are the two central
//! idempotents cutting it into `C₁ ⊕ C₂`.

use crate::blade::{BasisBlade, Signature};
use crate::error::{Error, Result};
use crate::multivector::{rational, Multivector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraClass {
    Simple,
    Split { e1: Multivector, e2: Multivector },
}

impl AlgebraClass {
    pub fn is_split(&self) -> bool {
        matches!(self, AlgebraClass::Split { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            AlgebraClass::Simple => "simple",
            AlgebraClass::Split { .. } => "split",
        }
    }
}

pub fn is_split(sig: &Signature) -> bool {
    matches!(sig.pq_residue(), 1 | 5)
}

pub fn classify_pq(sig: &Signature) -> Result<AlgebraClass> {
    if is_split(sig) {
        let (e1, e2) = central_idempotents(sig)?;
        Ok(AlgebraClass::Split { e1, e2 })
    } else {
        Ok(AlgebraClass::Simple)
    }
}

/// Product of every positive and negative generator, ascending.
pub fn volume_element(sig: &Signature) -> Multivector {
    Multivector::term(*sig, rational(1, 1), BasisBlade::from_mask(sig.body_mask()))
}

/// `((1 + ω) / 2, (1 - ω) / 2)`, checked before being returned.
pub fn central_idempotents(sig: &Signature) -> Result<(Multivector, Multivector)> {
    if !is_split(sig) {
        return Err(Error::domain(format!(
            "C({},{}) is simple; (p - q) mod 8 = {}",
            sig.p(),
            sig.q(),
            sig.pq_residue()
        )));
    }
    let one = Multivector::one(*sig);
    let omega = volume_element(sig);
    let half = rational(1, 2);
    let e1 = (&one + &omega).scale(&half);
    let e2 = (&one - &omega).scale(&half);
    check_idempotents(sig, &e1, &e2)?;
    Ok((e1, e2))
}

fn check_idempotents(sig: &Signature, e1: &Multivector, e2: &Multivector) -> Result<()> {
    let fail = |what: &str| {
        Err(Error::InternalContradiction(format!(
            "idempotents of {sig}: {what}"
        )))
    };
    if !(e1 + e2).is_one() {
        return fail("e1 + e2 != 1");
    }
    if &(e1 * e1) != e1 || &(e2 * e2) != e2 {
        return fail("not idempotent");
    }
    if !(e1 * e2).is_zero() || !(e2 * e1).is_zero() {
        return fail("not orthogonal");
    }
    for i in 0..sig.p() + sig.q() {
        let g = Multivector::generator(*sig, i)?;
        if &g * e1 != e1 * &g {
            return fail("e1 does not commute with a non-null generator");
        }
    }
    Ok(())
}

/// Projections of `u` onto `C₁`, `C₂` and the radical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitParts {
    pub c1: Multivector,
    pub c2: Multivector,
    pub rad: Multivector,
}

pub fn split_decompose(u: &Multivector) -> Result<SplitParts> {
    let sig = u.sig();
    let (e1, e2) = central_idempotents(&sig)?;
    let (body, rad) = u.radical_split();
    Ok(SplitParts {
        c1: &e1 * &body,
        c2: &e2 * &body,
        rad,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multivector::integer;

    fn sig(p: usize, q: usize, z: usize) -> Signature {
        Signature::new(p, q, z).unwrap()
    }

    fn e(s: Signature, ix: &[usize]) -> Multivector {
        Multivector::blade(s, BasisBlade::from_indices(ix.iter().copied()).unwrap()).unwrap()
    }

    #[test]
    fn classes() {
        assert!(classify_pq(&sig(1, 0, 0)).unwrap().is_split());
        assert!(!classify_pq(&sig(1, 1, 1)).unwrap().is_split());
        assert!(classify_pq(&sig(0, 3, 0)).unwrap().is_split());
        assert!(classify_pq(&sig(2, 1, 3)).unwrap().is_split());
    }

    #[test]
    fn volume_elements() {
        assert_eq!(volume_element(&sig(1, 0, 0)), e(sig(1, 0, 0), &[0]));
        assert_eq!(volume_element(&sig(1, 1, 0)), e(sig(1, 1, 0), &[0, 1]));
        assert!(volume_element(&sig(0, 0, 2)).is_one());
    }

    #[test]
    fn idempotents() {
        let s = sig(1, 0, 0);
        let (e1, e2) = central_idempotents(&s).unwrap();
        let half = rational(1, 2);
        assert_eq!(e1, (&Multivector::one(s) + &e(s, &[0])).scale(&half));
        assert_eq!(e2, (&Multivector::one(s) - &e(s, &[0])).scale(&half));

        let s = sig(2, 1, 0);
        let (e1, _) = central_idempotents(&s).unwrap();
        assert_eq!(e1, (&Multivector::one(s) + &e(s, &[0, 1, 2])).scale(&half));

        assert!(matches!(
            central_idempotents(&sig(1, 1, 0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn decomposition() {
        let s = sig(1, 0, 0);
        let (e1, e2) = central_idempotents(&s).unwrap();
        let parts = split_decompose(&Multivector::one(s)).unwrap();
        assert_eq!((parts.c1, parts.c2), (e1.clone(), e2.clone()));
        assert!(parts.rad.is_zero());

        let parts = split_decompose(&e(s, &[0])).unwrap();
        assert_eq!(parts.c1, e1);
        assert_eq!(parts.c2, -e2);

        let s = sig(1, 0, 1);
        let parts = split_decompose(&e(s, &[1])).unwrap();
        assert!(parts.c1.is_zero() && parts.c2.is_zero());
        assert_eq!(parts.rad, e(s, &[1]));

        assert!(split_decompose(&Multivector::one(sig(1, 1, 0))).is_err());
    }

    #[test]
    fn decomposition_is_a_projection() {
        let s = sig(2, 1, 1);
        let u = &(&e(s, &[0, 3]).scale(&integer(3)) + &e(s, &[1])) - &Multivector::one(s);
        let parts = split_decompose(&u).unwrap();
        assert_eq!(&(&parts.c1 + &parts.c2) + &parts.rad, u);
        let again = split_decompose(&parts.c1).unwrap();
        assert_eq!(again.c1, parts.c1);
        assert!(again.c2.is_zero());
    }
}
