//! Subset-valued objects of a ring: annihilators, principal multiple-sets,
//! kernels, commutants.
//!
//! A [`RingContext`] precomputes the per-element masks once. After that, every
//! membership test is one bit lookup and every inclusion one bitwise pass, which
//! is what the inverse solvers and the theorem scans lean on.

use alloc::vec::Vec;

use crate::mask::SubsetMask;
use crate::ring::{Elem, FiniteRing};
use crate::unital::UnitalExtension;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Which sandwich set to build, see [`RingContext::sandwich_set`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sandwich {
    /// `{b·s·x}`
    BSX,
    /// `{x·s·c}`
    XSC,
}

#[derive(Clone, Debug)]
pub struct RingContext {
    ring: FiniteRing,
    left_ann: Vec<SubsetMask>,
    right_ann: Vec<SubsetMask>,
    right_mult: Vec<SubsetMask>,
    left_mult: Vec<SubsetMask>,
    commutant: Vec<SubsetMask>,
    left_kernel: SubsetMask,
    right_kernel: SubsetMask,
}

impl RingContext {
    pub fn new(ring: FiniteRing) -> RingContext {
        let n = ring.size();
        let mut left_ann = Vec::with_capacity(n);
        let mut right_ann = Vec::with_capacity(n);
        let mut right_mult = Vec::with_capacity(n);
        let mut left_mult = Vec::with_capacity(n);
        let mut commutant = Vec::with_capacity(n);
        for a in ring.elements() {
            let mut la = SubsetMask::empty(n);
            let mut ra = SubsetMask::empty(n);
            let mut rm = SubsetMask::empty(n);
            let mut lm = SubsetMask::empty(n);
            let mut cm = SubsetMask::empty(n);
            for x in ring.elements() {
                let xa = ring.mul(x, a);
                let ax = ring.mul(a, x);
                if ring.is_zero(xa) {
                    la.insert(x);
                }
                if ring.is_zero(ax) {
                    ra.insert(x);
                }
                rm.insert(ax);
                lm.insert(xa);
                if xa == ax {
                    cm.insert(x);
                }
            }
            left_ann.push(la);
            right_ann.push(ra);
            right_mult.push(rm);
            left_mult.push(lm);
            commutant.push(cm);
        }
        let left_kernel = SubsetMask::from_elems(
            n,
            ring.elements().filter(|&x| ring.elements().all(|r| ring.is_zero(ring.mul(x, r)))),
        );
        let right_kernel = SubsetMask::from_elems(
            n,
            ring.elements().filter(|&x| ring.elements().all(|r| ring.is_zero(ring.mul(r, x)))),
        );
        RingContext {
            ring,
            left_ann,
            right_ann,
            right_mult,
            left_mult,
            commutant,
            left_kernel,
            right_kernel,
        }
    }

    #[inline]
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn into_ring(self) -> FiniteRing {
        self.ring
    }

    pub fn unital(&self) -> UnitalExtension<'_> {
        UnitalExtension::new(&self.ring)
    }

    pub fn size(&self) -> usize {
        self.ring.size()
    }

    /// °a = {x : xa = 0}
    #[inline]
    pub fn left_annihilator(&self, a: Elem) -> &SubsetMask {
        &self.left_ann[a.idx()]
    }

    /// a° = {x : ax = 0}
    #[inline]
    pub fn right_annihilator(&self, a: Elem) -> &SubsetMask {
        &self.right_ann[a.idx()]
    }

    /// bR = {b·s : s ∈ R}
    #[inline]
    pub fn right_multiples(&self, b: Elem) -> &SubsetMask {
        &self.right_mult[b.idx()]
    }

    /// Rb = {s·b : s ∈ R}
    #[inline]
    pub fn left_multiples(&self, b: Elem) -> &SubsetMask {
        &self.left_mult[b.idx()]
    }

    /// `t ∈ bR`
    #[inline]
    pub fn in_right_multiples(&self, t: Elem, b: Elem) -> bool {
        self.right_mult[b.idx()].contains(t)
    }

    /// `t ∈ Rb`
    #[inline]
    pub fn in_left_multiples(&self, t: Elem, b: Elem) -> bool {
        self.left_mult[b.idx()].contains(t)
    }

    /// `t ∈ bR¹`
    #[inline]
    pub fn in_right_multiples_unit(&self, t: Elem, b: Elem) -> bool {
        t == b || self.in_right_multiples(t, b)
    }

    /// `t ∈ R¹b`
    #[inline]
    pub fn in_left_multiples_unit(&self, t: Elem, b: Elem) -> bool {
        t == b || self.in_left_multiples(t, b)
    }

    /// `bR` (side right) or `Rb` (side left); with `with_unit` the element itself
    /// is added, giving `bR¹` / `R¹b`.
    pub fn multiples(&self, b: Elem, side: Side, with_unit: bool) -> SubsetMask {
        let mut m = match side {
            Side::Right => self.right_mult[b.idx()].clone(),
            Side::Left => self.left_mult[b.idx()].clone(),
        };
        if with_unit {
            m.insert(b);
        }
        m
    }

    /// `{b·s·x : s ∈ R}` or `{x·s·c : s ∈ R}`; `with_unit` adds `b·x` / `x·c`.
    pub fn sandwich_set(&self, pattern: Sandwich, outer: Elem, x: Elem, with_unit: bool) -> SubsetMask {
        let r = &self.ring;
        let n = r.size();
        let mut m = SubsetMask::empty(n);
        match pattern {
            Sandwich::BSX => {
                for s in r.elements() {
                    m.insert(r.mul3(outer, s, x));
                }
                if with_unit {
                    m.insert(r.mul(outer, x));
                }
            }
            Sandwich::XSC => {
                for s in r.elements() {
                    m.insert(r.mul3(x, s, outer));
                }
                if with_unit {
                    m.insert(r.mul(x, outer));
                }
            }
        }
        m
    }

    /// °R = {x : xr = 0 for all r}
    pub fn left_kernel(&self) -> &SubsetMask {
        &self.left_kernel
    }

    /// R° = {x : rx = 0 for all r}
    pub fn right_kernel(&self) -> &SubsetMask {
        &self.right_kernel
    }

    /// (°R, R°)
    pub fn ring_kernels(&self) -> (&SubsetMask, &SubsetMask) {
        (&self.left_kernel, &self.right_kernel)
    }

    pub fn is_left_faithful(&self) -> bool {
        self.left_kernel.count() == 1
    }

    pub fn is_right_faithful(&self) -> bool {
        self.right_kernel.count() == 1
    }

    /// {h : ha = ah}
    #[inline]
    pub fn commutant(&self, a: Elem) -> &SubsetMask {
        &self.commutant[a.idx()]
    }

    /// comm²{a}: elements commuting with everything in the commutant of `a`.
    pub fn bicommutant(&self, a: Elem) -> SubsetMask {
        let mut out = SubsetMask::full(self.size());
        for h in self.commutant(a).iter() {
            out.intersect_with(&self.commutant[h.idx()]);
        }
        out
    }
}
