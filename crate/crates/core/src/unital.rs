//! The multiplicative monoid R¹.

use crate::ring::{Elem, FiniteRing, RingError};

/// An element of R¹: either a ring element or the formal identity adjoined to a
/// non-unital ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mult {
    FormalOne,
    Of(Elem),
}

impl Mult {
    pub fn as_elem(self) -> Result<Elem, RingError> {
        match self {
            Mult::Of(e) => Ok(e),
            Mult::FormalOne => Err(RingError::FormalIdentity),
        }
    }
}

impl From<Elem> for Mult {
    fn from(e: Elem) -> Self {
        Mult::Of(e)
    }
}

/// R¹ as a multiplier domain over a base ring.
///
/// If the base already has an identity nothing is adjoined. Only multiplication
/// is available; the formal identity never takes part in additions and is never
/// returned as a ring element.
#[derive(Clone, Copy, Debug)]
pub struct UnitalExtension<'r> {
    base: &'r FiniteRing,
    has_formal_one: bool,
}

pub fn adjoin_identity(r: &FiniteRing) -> UnitalExtension<'_> {
    UnitalExtension::new(r)
}

impl<'r> UnitalExtension<'r> {
    pub fn new(base: &'r FiniteRing) -> Self {
        UnitalExtension { base, has_formal_one: base.one().is_none() }
    }

    pub fn base(&self) -> &'r FiniteRing {
        self.base
    }

    pub fn has_formal_one(&self) -> bool {
        self.has_formal_one
    }

    /// Number of elements of R¹.
    pub fn size(&self) -> usize {
        self.base.size() + usize::from(self.has_formal_one)
    }

    /// The identity of R¹.
    pub fn one(&self) -> Mult {
        match self.base.one() {
            Some(e) => Mult::Of(e),
            None => Mult::FormalOne,
        }
    }

    /// All elements of R¹: the formal identity first (when adjoined), then the
    /// base elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Mult> + '_ {
        self.has_formal_one
            .then_some(Mult::FormalOne)
            .into_iter()
            .chain(self.base.elements().map(Mult::Of))
    }

    /// `y · x` with `x` in the base ring.
    #[inline]
    pub fn mul_left(&self, y: Mult, x: Elem) -> Elem {
        match y {
            Mult::FormalOne => x,
            Mult::Of(e) => self.base.mul(e, x),
        }
    }

    /// `x · y` with `x` in the base ring.
    #[inline]
    pub fn mul_right(&self, x: Elem, y: Mult) -> Elem {
        match y {
            Mult::FormalOne => x,
            Mult::Of(e) => self.base.mul(x, e),
        }
    }

    /// Product inside R¹.
    pub fn mul(&self, a: Mult, b: Mult) -> Mult {
        match (a, b) {
            (Mult::FormalOne, other) | (other, Mult::FormalOne) => other,
            (Mult::Of(x), Mult::Of(y)) => Mult::Of(self.base.mul(x, y)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{make_matrix_ring, make_zmod, subring_closure};

    #[test]
    fn unital_base_is_trivial() {
        let z6 = make_zmod(6).unwrap();
        let ext = adjoin_identity(&z6);
        assert!(!ext.has_formal_one());
        assert_eq!(ext.size(), 6);
        assert_eq!(ext.one(), Mult::Of(Elem(1)));
    }

    #[test]
    fn johnson_gets_formal_one() {
        let m3 = make_matrix_ring(3, 2).unwrap();
        let gens: Vec<Elem> = ["e11", "e21", "e22", "e31"]
            .iter()
            .map(|l| m3.find_label(l).unwrap())
            .collect();
        let r = subring_closure(&m3, &gens).unwrap();
        let ext = adjoin_identity(&r);
        assert!(ext.has_formal_one());
        assert_eq!(ext.elements().count(), 17);
        let e31 = r.find_label("e31").unwrap();
        assert_eq!(ext.mul_left(Mult::FormalOne, e31), e31);
        assert_eq!(ext.mul_right(e31, Mult::FormalOne), e31);
        assert_eq!(Mult::FormalOne.as_elem(), Err(RingError::FormalIdentity));
    }
}
