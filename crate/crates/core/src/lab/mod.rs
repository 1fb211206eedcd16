//! Exhaustive theorem checkers.
//!
//! A [`Lab`] is built once per ring. It holds the certificate inventories
//! (every annihilator (b,c)-inverse and every (b,c)-inverse, by triple), the
//! one-sided solution sets, Drazin inverses and bicommutants. Each [`Theorem`]
//! is then a sequence of *parts*; a part is an outer index space whose points
//! expand into the instances of one statement. [`Lab::scan`] runs any
//! contiguous range of the concatenated outer space, which is how callers split
//! work across threads while keeping results order-deterministic.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::inverses::{ann_solutions, bc_solutions, drazin_solutions, is_outer};
use crate::mask::SubsetMask;
use crate::ring::{Elem, FiniteRing};
use crate::sets::RingContext;
use crate::unital::{Mult, UnitalExtension};

mod cline;
mod intertwining;
mod laws;
mod search;
mod sided;

/// Checkable statements. Search targets collect instances rather than assert.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    Uniqueness,
    SidedComposition,
    SidedPropositions,
    FaithfulUniqueness,
    DrazinRegularization,
    IntertwiningAnn,
    DrazinAnnEquivalence,
    IntertwiningBc,
    CentralizerSufficiency,
    IntertwineVariantsAnn,
    IntertwineVariantsBc,
    Absorption,
    ReverseOrderAnn,
    ReverseOrderBc,
    Cline,
    DefinitionForms,
    Facts,
    MpCorrespondence,
    SearchNonuniqueSided,
    SearchNonregularSided,
    SearchReverseOrderOpen,
}

impl Theorem {
    /// Every checkable theorem, in report order. Search targets are excluded.
    pub const ALL: [Theorem; 18] = [
        Theorem::Uniqueness,
        Theorem::SidedComposition,
        Theorem::SidedPropositions,
        Theorem::FaithfulUniqueness,
        Theorem::DrazinRegularization,
        Theorem::IntertwiningAnn,
        Theorem::DrazinAnnEquivalence,
        Theorem::IntertwiningBc,
        Theorem::CentralizerSufficiency,
        Theorem::IntertwineVariantsAnn,
        Theorem::IntertwineVariantsBc,
        Theorem::Absorption,
        Theorem::ReverseOrderAnn,
        Theorem::ReverseOrderBc,
        Theorem::Cline,
        Theorem::DefinitionForms,
        Theorem::Facts,
        Theorem::MpCorrespondence,
    ];

    pub const SEARCHES: [Theorem; 3] = [
        Theorem::SearchNonuniqueSided,
        Theorem::SearchNonregularSided,
        Theorem::SearchReverseOrderOpen,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Uniqueness => "uniqueness",
            Theorem::SidedComposition => "sided-composition",
            Theorem::SidedPropositions => "sided-propositions",
            Theorem::FaithfulUniqueness => "faithful-uniqueness",
            Theorem::DrazinRegularization => "drazin-regularization",
            Theorem::IntertwiningAnn => "intertwining-ann",
            Theorem::DrazinAnnEquivalence => "drazin-ann-equivalence",
            Theorem::IntertwiningBc => "intertwining-bc",
            Theorem::CentralizerSufficiency => "centralizer-sufficiency",
            Theorem::IntertwineVariantsAnn => "intertwine-variants-ann",
            Theorem::IntertwineVariantsBc => "intertwine-variants-bc",
            Theorem::Absorption => "absorption",
            Theorem::ReverseOrderAnn => "reverse-order-ann",
            Theorem::ReverseOrderBc => "reverse-order-bc",
            Theorem::Cline => "cline",
            Theorem::DefinitionForms => "definition-forms",
            Theorem::Facts => "facts",
            Theorem::MpCorrespondence => "mp-correspondence",
            Theorem::SearchNonuniqueSided => "search:nonunique-sided",
            Theorem::SearchNonregularSided => "search:nonregular-sided",
            Theorem::SearchReverseOrderOpen => "search:reverse-order-open",
        }
    }

    pub fn from_id(id: &str) -> Option<Theorem> {
        Theorem::ALL
            .iter()
            .chain(Theorem::SEARCHES.iter())
            .copied()
            .find(|t| t.id() == id)
    }

    pub fn is_search(self) -> bool {
        Theorem::SEARCHES.contains(&self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LabConfig {
    /// Let `y` (and μ, ν, centralizer translations) range over R¹ rather than R.
    pub include_formal_one: bool,
    /// Largest exponent `n` in the power form of the Cline transport.
    pub cline_max_exponent: u32,
}

impl Default for LabConfig {
    fn default() -> Self {
        LabConfig { include_formal_one: true, cline_max_exponent: 3 }
    }
}

/// A value bound to a variable of a counterexample.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Elem(Elem),
    /// The identity adjoined to a non-unital ring.
    FormalOne,
    Int(u64),
}

impl From<Elem> for Value {
    fn from(e: Elem) -> Self {
        Value::Elem(e)
    }
}

impl From<Mult> for Value {
    fn from(m: Mult) -> Self {
        match m {
            Mult::FormalOne => Value::FormalOne,
            Mult::Of(e) => Value::Elem(e),
        }
    }
}

/// A failed clause with the full variable assignment that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub vars: Vec<(&'static str, Value)>,
    pub clause: &'static str,
    /// 1-based position of the instance within the scanned range.
    pub at: u64,
}

/// Collects the outcome of a scan over part of a theorem's instance space.
#[derive(Clone, Debug)]
pub struct Sink {
    limit: u64,
    keep: usize,
    ticks: u64,
    exhausted: bool,
    found: Vec<Counterexample>,
}

impl Sink {
    /// `limit` caps the number of instances examined; `keep` caps the number of
    /// counterexamples retained (the earliest ones are kept).
    pub fn new(limit: u64, keep: usize) -> Sink {
        Sink { limit, keep, ticks: 0, exhausted: false, found: Vec::new() }
    }

    pub fn unlimited() -> Sink {
        Sink::new(u64::MAX, usize::MAX)
    }

    /// Registers one more instance. Returns `false` (and marks the sink
    /// exhausted) once the limit is reached; the instance must then be skipped.
    #[inline]
    pub fn tick(&mut self) -> bool {
        if self.ticks >= self.limit {
            self.exhausted = true;
            return false;
        }
        self.ticks += 1;
        true
    }

    #[inline]
    pub fn expect(&mut self, ok: bool, clause: &'static str, vars: impl FnOnce() -> Vec<(&'static str, Value)>) {
        if !ok {
            self.record(clause, vars());
        }
    }

    /// Checks both directions of `lhs ⟺ rhs`, reporting them separately.
    #[inline]
    pub fn iff(
        &mut self,
        lhs: bool,
        rhs: bool,
        forward: &'static str,
        backward: &'static str,
        vars: impl FnOnce() -> Vec<(&'static str, Value)>,
    ) {
        if lhs && !rhs {
            self.record(forward, vars());
        } else if rhs && !lhs {
            self.record(backward, vars());
        }
    }

    pub fn record(&mut self, clause: &'static str, vars: Vec<(&'static str, Value)>) {
        if self.found.len() < self.keep {
            self.found.push(Counterexample { vars, clause, at: self.ticks });
        }
    }

    pub fn ticks(&self) -> u64 {
        self.ticks
    }

    pub fn exhausted(&self) -> bool {
        self.exhausted
    }

    pub fn counterexamples(&self) -> &[Counterexample] {
        &self.found
    }

    pub fn into_counterexamples(self) -> Vec<Counterexample> {
        self.found
    }
}

/// An inventory entry: `x` is the inverse of `a` relative to `(b, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cert {
    pub a: Elem,
    pub b: Elem,
    pub c: Elem,
    pub x: Elem,
}

impl Cert {
    fn vars(&self, names: [&'static str; 4]) -> [(&'static str, Value); 4] {
        [
            (names[0], self.a.into()),
            (names[1], self.b.into()),
            (names[2], self.c.into()),
            (names[3], self.x.into()),
        ]
    }
}

fn pair_vars(c1: &Cert, c2: &Cert) -> Vec<(&'static str, Value)> {
    let mut v = Vec::with_capacity(9);
    v.extend(c1.vars(["a1", "b1", "c1", "x1"]));
    v.extend(c2.vars(["a2", "b2", "c2", "x2"]));
    v
}

/// Solutions per triple, stored flat; triple `(a,b,c)` has index `(a·n+b)·n+c`.
#[derive(Clone, Debug, Default)]
struct SolutionTable {
    offsets: Vec<u32>,
    data: Vec<Elem>,
}

impl SolutionTable {
    fn build(triples: usize, mut solve: impl FnMut(usize) -> Vec<Elem>) -> SolutionTable {
        let mut offsets = Vec::with_capacity(triples + 1);
        let mut data = Vec::new();
        offsets.push(0);
        for t in 0..triples {
            data.extend(solve(t));
            offsets.push(data.len() as u32);
        }
        SolutionTable { offsets, data }
    }

    fn get(&self, t: usize) -> &[Elem] {
        &self.data[self.offsets[t] as usize..self.offsets[t + 1] as usize]
    }
}

/// Every annihilator (b,c)-certificate of a ring, ascending by `(a, b, c)`.
///
/// A triple with more than one solution contributes each of them, so a
/// downstream uniqueness check still sees the multiplicity.
pub fn ann_inventory(ctx: &RingContext) -> Vec<Cert> {
    let mut out = Vec::new();
    for a in ctx.ring().elements() {
        for b in ctx.ring().elements() {
            for c in ctx.ring().elements() {
                out.extend(ann_solutions(ctx, a, b, c).into_iter().map(|x| Cert { a, b, c, x }));
            }
        }
    }
    out
}

/// The residuals of an intertwining instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntertwiningResiduals {
    /// `y·a₁ − a₂·y`
    pub eps1: Elem,
    /// `y·b₁ − b₂·y`
    pub eps2: Elem,
    /// `y·c₁ − c₂·y`
    pub eps3: Elem,
    /// `y·x₁ − x₂·y`
    pub tau: Elem,
    /// `y·a₁x₁ − a₂x₂·y`
    pub tau1: Elem,
    /// `y·x₁a₁ − x₂a₂·y`
    pub tau2: Elem,
    /// `y·a₁x₁ − x₂a₂·y`
    pub tau3: Elem,
    /// `y·x₁a₁ − a₂x₂·y`
    pub tau4: Elem,
}

impl IntertwiningResiduals {
    pub fn compute(r: &FiniteRing, c1: &Cert, c2: &Cert, y: Mult) -> IntertwiningResiduals {
        let ext = UnitalExtension::new(r);
        let ly = |e: Elem| ext.mul_left(y, e);
        let ry = |e: Elem| ext.mul_right(e, y);
        let a1x1 = r.mul(c1.a, c1.x);
        let x1a1 = r.mul(c1.x, c1.a);
        let a2x2 = r.mul(c2.a, c2.x);
        let x2a2 = r.mul(c2.x, c2.a);
        IntertwiningResiduals {
            eps1: r.sub(ly(c1.a), ry(c2.a)),
            eps2: r.sub(ly(c1.b), ry(c2.b)),
            eps3: r.sub(ly(c1.c), ry(c2.c)),
            tau: r.sub(ly(c1.x), ry(c2.x)),
            tau1: r.sub(ly(a1x1), ry(a2x2)),
            tau2: r.sub(ly(x1a1), ry(x2a2)),
            tau3: r.sub(ly(a1x1), ry(x2a2)),
            tau4: r.sub(ly(x1a1), ry(a2x2)),
        }
    }

    /// The three identities tying `τ` to the `ε`'s. They follow from
    /// `x₁a₁x₁ = x₁`, `x₁a₁b₁ = b₁`, `c₁a₁x₁ = c₁` (and the same for index 2)
    /// alone, so they hold for every pair of certificates and every `y`.
    pub fn identities(&self, r: &FiniteRing, c1: &Cert, c2: &Cert) -> [bool; 3] {
        let (a1, b1, x1) = (c1.a, c1.b, c1.x);
        let (a2, c2_, x2) = (c2.a, c2.c, c2.x);
        let t = self.tau;
        let tau_form = r.add(r.add(r.mul3(t, a1, x1), r.mul3(x2, a2, t)), r.mul3(x2, self.eps1, x1));
        let tab_form = r.sub(r.sub(self.eps2, r.mul3(x2, a2, self.eps2)), r.mul3(x2, self.eps1, b1));
        let cat_form = r.sub(r.sub(self.eps3, r.mul3(self.eps3, a1, x1)), r.mul3(c2_, self.eps1, x1));
        [t == tau_form, r.mul3(t, a1, b1) == tab_form, r.mul3(c2_, a2, t) == cat_form]
    }

    /// `τᵢ = τᵢ·u + v·τᵢ` for the four variant residuals.
    pub fn variant_identities(&self, r: &FiniteRing, c1: &Cert, c2: &Cert) -> [bool; 4] {
        let a1x1 = r.mul(c1.a, c1.x);
        let x1a1 = r.mul(c1.x, c1.a);
        let a2x2 = r.mul(c2.a, c2.x);
        let x2a2 = r.mul(c2.x, c2.a);
        let holds = |t: Elem, right: Elem, left: Elem| t == r.add(r.mul(t, right), r.mul(left, t));
        [
            holds(self.tau1, a1x1, a2x2),
            holds(self.tau2, x1a1, x2a2),
            holds(self.tau3, a1x1, x2a2),
            holds(self.tau4, x1a1, a2x2),
        ]
    }
}

/// Outcome of running (part of) a theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanResult {
    pub tuples: u64,
    pub exhausted: bool,
    pub counterexamples: Vec<Counterexample>,
}

type PartFn = fn(&Lab, usize, &mut Sink);

#[derive(Clone, Copy)]
struct Part {
    len: usize,
    run: PartFn,
}

/// Per-ring precomputation shared by every checker.
#[derive(Clone, Debug)]
pub struct Lab {
    ctx: RingContext,
    config: LabConfig,
    ann: Vec<Option<Elem>>,
    ann_multi: Vec<bool>,
    bc: Vec<Option<Elem>>,
    bc_multi: Vec<bool>,
    ann_certs: Vec<Cert>,
    bc_certs: Vec<Cert>,
    ann_by_a: Vec<Range<usize>>,
    bc_by_a: Vec<Range<usize>>,
    lann: SolutionTable,
    rann: SolutionTable,
    drazin: Vec<Option<(Elem, u32)>>,
    drazin_multi: Vec<bool>,
    bicommutant: Vec<SubsetMask>,
}

fn group_by_a(n: usize, certs: &[Cert]) -> Vec<Range<usize>> {
    let mut out = vec![0..0; n];
    let mut i = 0;
    while i < certs.len() {
        let a = certs[i].a;
        let start = i;
        while i < certs.len() && certs[i].a == a {
            i += 1;
        }
        out[a.idx()] = start..i;
    }
    out
}

impl Lab {
    pub fn new(ctx: RingContext, config: LabConfig) -> Lab {
        let n = ctx.size();
        let triples = n * n * n;
        let triple = |t: usize| (Elem((t / (n * n)) as u16), Elem((t / n % n) as u16), Elem((t % n) as u16));

        let mut ann = vec![None; triples];
        let mut ann_multi = vec![false; triples];
        let mut bc = vec![None; triples];
        let mut bc_multi = vec![false; triples];
        let mut ann_certs = Vec::new();
        let mut bc_certs = Vec::new();
        for t in 0..triples {
            let (a, b, c) = triple(t);
            let sols = ann_solutions(&ctx, a, b, c);
            ann[t] = sols.first().copied();
            ann_multi[t] = sols.len() > 1;
            ann_certs.extend(sols.first().map(|&x| Cert { a, b, c, x }));
            let sols = bc_solutions(&ctx, a, b, c);
            bc[t] = sols.first().copied();
            bc_multi[t] = sols.len() > 1;
            bc_certs.extend(sols.first().map(|&x| Cert { a, b, c, x }));
        }
        let ann_by_a = group_by_a(n, &ann_certs);
        let bc_by_a = group_by_a(n, &bc_certs);

        let lann = SolutionTable::build(triples, |t| {
            let (a, b, c) = triple(t);
            ctx.ring().elements().filter(|&x| crate::inverses::is_lann(&ctx, a, b, c, x)).collect()
        });
        let rann = SolutionTable::build(triples, |t| {
            let (a, b, c) = triple(t);
            ctx.ring().elements().filter(|&y| crate::inverses::is_rann(&ctx, a, b, c, y)).collect()
        });

        let mut drazin = Vec::with_capacity(n);
        let mut drazin_multi = Vec::with_capacity(n);
        for a in ctx.ring().elements() {
            let sols = drazin_solutions(&ctx, a);
            drazin.push(sols.first().copied());
            drazin_multi.push(sols.len() > 1);
        }
        let bicommutant = ctx.ring().elements().map(|a| ctx.bicommutant(a)).collect();

        Lab {
            ctx,
            config,
            ann,
            ann_multi,
            bc,
            bc_multi,
            ann_certs,
            bc_certs,
            ann_by_a,
            bc_by_a,
            lann,
            rann,
            drazin,
            drazin_multi,
            bicommutant,
        }
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn ring(&self) -> &FiniteRing {
        self.ctx.ring()
    }

    pub fn config(&self) -> &LabConfig {
        &self.config
    }

    pub fn size(&self) -> usize {
        self.ctx.size()
    }

    fn ext(&self) -> UnitalExtension<'_> {
        self.ctx.unital()
    }

    pub fn triple_index(&self, a: Elem, b: Elem, c: Elem) -> usize {
        let n = self.size();
        (a.idx() * n + b.idx()) * n + c.idx()
    }

    fn triple(&self, t: usize) -> (Elem, Elem, Elem) {
        let n = self.size();
        (Elem((t / (n * n)) as u16), Elem((t / n % n) as u16), Elem((t % n) as u16))
    }

    /// The annihilator (b,c)-inverse from the inventory.
    pub fn ann(&self, a: Elem, b: Elem, c: Elem) -> Option<Elem> {
        self.ann[self.triple_index(a, b, c)]
    }

    /// The (b,c)-inverse from the inventory.
    pub fn bc(&self, a: Elem, b: Elem, c: Elem) -> Option<Elem> {
        self.bc[self.triple_index(a, b, c)]
    }

    pub fn ann_certs(&self) -> &[Cert] {
        &self.ann_certs
    }

    pub fn bc_certs(&self) -> &[Cert] {
        &self.bc_certs
    }

    pub fn ann_certs_of(&self, a: Elem) -> &[Cert] {
        &self.ann_certs[self.ann_by_a[a.idx()].clone()]
    }

    pub fn bc_certs_of(&self, a: Elem) -> &[Cert] {
        &self.bc_certs[self.bc_by_a[a.idx()].clone()]
    }

    pub fn lann_set(&self, a: Elem, b: Elem, c: Elem) -> &[Elem] {
        self.lann.get(self.triple_index(a, b, c))
    }

    pub fn rann_set(&self, a: Elem, b: Elem, c: Elem) -> &[Elem] {
        self.rann.get(self.triple_index(a, b, c))
    }

    /// Drazin inverse and index of `a`.
    pub fn drazin(&self, a: Elem) -> Option<(Elem, u32)> {
        self.drazin[a.idx()]
    }

    pub fn bicommutant(&self, a: Elem) -> &SubsetMask {
        &self.bicommutant[a.idx()]
    }

    /// The range of `y` (and of R¹-valued auxiliaries).
    fn ys(&self) -> Vec<Mult> {
        if self.config.include_formal_one {
            self.ext().elements().collect()
        } else {
            self.ring().elements().map(Mult::Of).collect()
        }
    }

    #[inline]
    fn ly(&self, y: Mult, e: Elem) -> Elem {
        match y {
            Mult::FormalOne => e,
            Mult::Of(y) => self.ring().mul(y, e),
        }
    }

    #[inline]
    fn ry(&self, e: Elem, y: Mult) -> Elem {
        match y {
            Mult::FormalOne => e,
            Mult::Of(y) => self.ring().mul(e, y),
        }
    }

    #[inline]
    fn is_outer(&self, a: Elem, x: Elem) -> bool {
        is_outer(&self.ctx, a, x)
    }

    /// Why a theorem cannot run on this ring, if it cannot.
    pub fn skip_reason(&self, theorem: Theorem) -> Option<&'static str> {
        match theorem {
            Theorem::MpCorrespondence if !self.ring().has_star() => Some("no involution"),
            _ => None,
        }
    }

    fn parts(&self, theorem: Theorem) -> Vec<Part> {
        let n = self.size();
        let triples = n * n * n;
        let ys = self.ys().len();
        let ann = self.ann_certs.len();
        let bc = self.bc_certs.len();
        let p = |len: usize, run: PartFn| Part { len, run };
        match theorem {
            Theorem::Uniqueness => vec![p(triples, sided::uniqueness)],
            Theorem::SidedComposition => vec![p(triples, sided::sided_composition)],
            Theorem::SidedPropositions => vec![
                p(ann, sided::sided_propositions),
                p(triples, sided::two_sided_solution),
            ],
            Theorem::FaithfulUniqueness => vec![p(ann, sided::faithful_uniqueness)],
            Theorem::DrazinRegularization => vec![p(triples, sided::drazin_regularization)],
            Theorem::DrazinAnnEquivalence => vec![p(n, sided::drazin_ann_equivalence)],
            Theorem::DefinitionForms => vec![p(triples, sided::definition_forms), p(n * n, sided::along_forms)],
            Theorem::Facts => vec![
                p(bc, sided::facts_bc),
                p(ann, sided::facts_ann),
                p(n * n, sided::facts_outer),
            ],
            Theorem::MpCorrespondence => {
                if self.ring().has_star() {
                    vec![p(n, sided::mp_correspondence)]
                } else {
                    Vec::new()
                }
            }
            Theorem::IntertwiningAnn => vec![p(ann, intertwining::intertwining_ann)],
            Theorem::IntertwiningBc => vec![
                p(bc, intertwining::intertwining_bc),
                p(ys * n, intertwining::one_sided_sufficiency),
                p(ys * n, intertwining::one_sided_necessity),
                p(bc, intertwining::same_element_special_case),
            ],
            Theorem::CentralizerSufficiency => vec![p(bc, intertwining::centralizer_sufficiency)],
            Theorem::IntertwineVariantsAnn => vec![
                p(ann, intertwining::variants_ann),
                p(ann, intertwining::variant_masks),
            ],
            Theorem::IntertwineVariantsBc => vec![
                p(bc, intertwining::variants_bc),
                p(bc, intertwining::four_way_equivalence),
            ],
            Theorem::Absorption => vec![
                p(n * n, laws::sided_absorption_shared_b),
                p(n * n, laws::sided_absorption_shared_c),
                p(ann, laws::absorption_pairs),
            ],
            Theorem::ReverseOrderAnn => vec![p(ann, laws::reverse_order_ann)],
            Theorem::ReverseOrderBc => vec![p(bc, laws::reverse_order_bc)],
            Theorem::Cline => vec![
                p(n * n, cline::cline_power),
                p(n * n, cline::cline_commuting),
                p(n * n, cline::cline_semigroup),
                p(n * n, cline::cline_third_factor),
                p(n * n, cline::index_bound),
            ],
            Theorem::SearchNonuniqueSided => vec![p(ann, search::nonunique_sided)],
            Theorem::SearchNonregularSided => vec![p(ann, search::nonregular_sided)],
            Theorem::SearchReverseOrderOpen => vec![p(bc, search::reverse_order_open)],
        }
    }

    /// Size of the concatenated outer index space of `theorem`.
    pub fn outer_len(&self, theorem: Theorem) -> usize {
        self.parts(theorem).iter().map(|p| p.len).sum()
    }

    /// Runs the outer indices in `range`, stopping early if the sink is
    /// exhausted.
    pub fn scan(&self, theorem: Theorem, range: Range<usize>, sink: &mut Sink) {
        let parts = self.parts(theorem);
        let mut base = 0;
        for part in parts {
            let lo = range.start.max(base);
            let hi = range.end.min(base + part.len);
            for i in lo..hi {
                (part.run)(self, i - base, sink);
                if sink.exhausted() {
                    return;
                }
            }
            base += part.len;
        }
    }

    /// Runs a whole theorem on the current thread.
    pub fn run(&self, theorem: Theorem, budget: u64, keep: usize) -> ScanResult {
        let mut sink = Sink::new(budget, keep);
        self.scan(theorem, 0..self.outer_len(theorem), &mut sink);
        ScanResult { tuples: sink.ticks(), exhausted: sink.exhausted(), counterexamples: sink.into_counterexamples() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::make_zmod;

    #[test]
    fn ids_round_trip() {
        for t in Theorem::ALL.iter().chain(Theorem::SEARCHES.iter()) {
            assert_eq!(Theorem::from_id(t.id()), Some(*t));
        }
        assert_eq!(Theorem::from_id("nope"), None);
    }

    #[test]
    fn sink_budget_and_iff() {
        let mut s = Sink::new(2, 10);
        assert!(s.tick());
        s.iff(true, false, "fwd", "bwd", Vec::new);
        assert!(s.tick());
        s.iff(false, true, "fwd", "bwd", Vec::new);
        assert!(!s.tick());
        assert!(s.exhausted());
        let clauses: Vec<_> = s.counterexamples().iter().map(|c| (c.clause, c.at)).collect();
        assert_eq!(clauses, vec![("fwd", 1), ("bwd", 2)]);
    }

    #[test]
    fn z6_inventory() {
        let lab = Lab::new(RingContext::new(make_zmod(6).unwrap()), LabConfig::default());
        assert_eq!(lab.ann(Elem(2), Elem(4), Elem(4)), Some(Elem(2)));
        assert_eq!(lab.bc(Elem(0), Elem(0), Elem(0)), Some(Elem(0)));
        assert_eq!(lab.drazin(Elem(3)), Some((Elem(3), 1)));
        assert!(lab.ann_certs_of(Elem(2)).iter().all(|c| c.a == Elem(2)));
        assert_eq!(ann_inventory(lab.ctx()).len(), lab.ann_certs().len());
    }

    #[test]
    fn scan_ranges_compose() {
        let lab = Lab::new(RingContext::new(make_zmod(4).unwrap()), LabConfig::default());
        let whole = lab.run(Theorem::IntertwiningAnn, u64::MAX, usize::MAX);
        let len = lab.outer_len(Theorem::IntertwiningAnn);
        let mut ticks = 0;
        for lo in (0..len).step_by(3) {
            let mut s = Sink::unlimited();
            lab.scan(Theorem::IntertwiningAnn, lo..(lo + 3).min(len), &mut s);
            ticks += s.ticks();
        }
        assert_eq!(ticks, whole.tuples);
        assert!(whole.counterexamples.is_empty());
    }
}
