//! Window-truncated enveloping algebras.
//!
//! `U_HLie(L)`, `F_HAs(V)` and `U_HLeib(L)` are quotients of a free algebra
//! by the ideal generated by a family of relations and closed under both
//! products and α. Here everything is cut down to a [`Window`]: the ideal is
//! closed inside the padded window, intersected with the target window, and
//! row reduced. The non-pivot monomials are the standard monomials of the
//! quotient.
//!
//! The closure is a fixpoint over a set of coordinate boxes. Multiplying by
//! a monomial `u` of arity `a` and weight `w` keeps a vector inside the
//! padded window exactly when the vector lies in the box
//! `arity ≤ N′ − a, weight ≤ W′ − w`; α has the box
//! `arity = 1 or weight ≤ W′ − 1`. One echelon form per box, with the
//! forbidden coordinates ordered first, exposes the intersection of the
//! ideal with that box incrementally: each new row whose leading coordinate
//! is allowed is a new direction to multiply.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::algebra::{
    check_hom_associative, check_hom_leibniz, check_hom_lie, check_lie_morphism, Axiom, HomAlgebra, HomModule,
    Violation, Violations,
};
use crate::error::{Error, Result};
use crate::free::{Element, FreeAlgebra, FreeLabel, Monomial, UniversalMap, Window};
use crate::linalg::{Echelon, Matrix, SparseVec};
use crate::scalar::Scalar;
use crate::trees::{DiWeight, Side, VertexLabel};

/// Which enveloping construction a quotient realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EnvelopeKind {
    HLie,
    FHas,
    HLeib,
}

impl fmt::Display for EnvelopeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnvelopeKind::HLie => "hlie",
            EnvelopeKind::FHas => "fhas",
            EnvelopeKind::HLeib => "hleib",
        })
    }
}

fn require<S: Scalar>(name: &'static str, v: Violations<S>) -> Result<()> {
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::Hypothesis {
            hypothesis: name,
            violations: v.iter().map(ToString::to_string).collect(),
        })
    }
}

/// Window basis grouped by arity.
fn by_arity<L: VertexLabel>(basis: &[Monomial<L>], max_arity: usize) -> Vec<Vec<Monomial<L>>> {
    let mut out = vec![Vec::new(); max_arity + 1];
    for m in basis {
        out[m.arity()].push(m.clone());
    }
    out
}

/// Instantiates `make(a, b, c)` on every monomial triple whose arities and
/// weights could fit `window`, keeping the results that actually fit.
fn triple_generators<S, L>(
    fa: &FreeAlgebra<S, L>,
    window: &Window,
    mut make: impl FnMut(&Element<S, L>, &Element<S, L>, &Element<S, L>, &mut Vec<Element<S, L>>) -> Result<()>,
) -> Result<Vec<Element<S, L>>>
where
    S: Scalar,
    L: FreeLabel,
{
    let basis = fa.basis_window(window)?;
    let groups = by_arity(&basis, window.max_arity);
    let w_max = u64::from(window.max_weight);
    let mut out = Vec::new();
    let mut scratch = Vec::new();
    for p in 1..=window.max_arity {
        for q in 1..=window.max_arity.saturating_sub(p) {
            for r in 1..=window.max_arity.saturating_sub(p + q) {
                for a in &groups[p] {
                    for b in &groups[q] {
                        if a.total_weight() + b.total_weight() > w_max {
                            continue;
                        }
                        for c in &groups[r] {
                            if a.total_weight() + b.total_weight() + c.total_weight() > w_max {
                                continue;
                            }
                            let (ea, eb, ec) = (
                                Element::monomial(a.clone()),
                                Element::monomial(b.clone()),
                                Element::monomial(c.clone()),
                            );
                            scratch.clear();
                            make(&ea, &eb, &ec, &mut scratch)?;
                            out.append(&mut scratch);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `lhs − rhs` if both sides fit the window.
fn relation<S: Scalar, L: VertexLabel>(
    window: &Window,
    lhs: Element<S, L>,
    rhs: Element<S, L>,
) -> Option<Element<S, L>> {
    (window.contains_element(&lhs) && window.contains_element(&rhs)).then(|| lhs.sub(&rhs))
}

/// `(ab)α(c) − α(a)(bc)` for all monomial triples fitting `window`.
pub fn fhas_ideal_generators<S: Scalar>(v: &HomModule<S>, window: &Window) -> Result<Vec<Element<S, u32>>> {
    let fa = FreeAlgebra::<S, u32>::new(v.clone());
    triple_generators(&fa, window, |a, b, c, out| {
        let lhs = fa.mu(&fa.mu(a, b)?, &fa.alpha(c)?)?;
        let rhs = fa.mu(&fa.alpha(a)?, &fa.mu(b, c)?)?;
        out.extend(relation(window, lhs, rhs));
        Ok(())
    })
}

/// The Hom-associativity family followed by
/// `Σ_k b[i][j][k] x_k − (x_i x_j − x_j x_i)` for all generator pairs.
/// Bracket relations that do not fit `window` are left out.
pub fn hlie_ideal_generators<S: Scalar>(l: &HomAlgebra<S>, window: &Window) -> Result<Vec<Element<S, u32>>> {
    require("hom-lie", check_hom_lie(l))?;
    let fa = FreeAlgebra::<S, u32>::new(l.module.clone());
    let mut out = fhas_ideal_generators(&l.module, window)?;
    for i in 0..l.dim() {
        for j in 0..l.dim() {
            let (xi, xj) = (fa.generator(i)?, fa.generator(j)?);
            let bracket = Element::from_generator_coords(l.mul.basis_product(i, j));
            let commutator = fa.mu(&xi, &xj)?.sub(&fa.mu(&xj, &xi)?);
            out.extend(relation(window, bracket, commutator));
        }
    }
    Ok(out)
}

/// The five Hom-dialgebra axiom differences (numbered as the axioms) for
/// every monomial triple, then `[x_i, x_j] − (x_i ⊣ x_j − x_j ⊢ x_i)`.
pub fn hleib_ideal_generators<S: Scalar>(l: &HomAlgebra<S>, window: &Window) -> Result<Vec<Element<S, DiWeight>>> {
    require("hom-leibniz", check_hom_leibniz(l))?;
    let fa = FreeAlgebra::<S, DiWeight>::new(l.module.clone());
    let (lt, rt) = (Side::Left, Side::Right);
    let mut out = triple_generators(&fa, window, |x, y, z, out| {
        let (ax, az) = (fa.alpha(x)?, fa.alpha(z)?);
        let a_ll = fa.dimu(&ax, &fa.dimu(y, z, lt)?, lt)?;
        let ll_a = fa.dimu(&fa.dimu(x, y, lt)?, &az, lt)?;
        let a_lr = fa.dimu(&ax, &fa.dimu(y, z, rt)?, lt)?;
        let rl_a = fa.dimu(&fa.dimu(x, y, rt)?, &az, lt)?;
        let a_rl = fa.dimu(&ax, &fa.dimu(y, z, lt)?, rt)?;
        let lr_a = fa.dimu(&fa.dimu(x, y, lt)?, &az, rt)?;
        let a_rr = fa.dimu(&ax, &fa.dimu(y, z, rt)?, rt)?;
        let rr_a = fa.dimu(&fa.dimu(x, y, rt)?, &az, rt)?;
        out.extend(relation(window, a_ll, ll_a.clone()));
        out.extend(relation(window, ll_a, a_lr));
        out.extend(relation(window, rl_a, a_rl));
        out.extend(relation(window, lr_a, a_rr.clone()));
        out.extend(relation(window, a_rr, rr_a));
        Ok(())
    })?;
    for i in 0..l.dim() {
        for j in 0..l.dim() {
            let (xi, xj) = (fa.generator(i)?, fa.generator(j)?);
            let bracket = Element::from_generator_coords(l.mul.basis_product(i, j));
            let difference = fa.dimu(&xi, &xj, lt)?.sub(&fa.dimu(&xj, &xi, rt)?);
            out.extend(relation(window, bracket, difference));
        }
    }
    Ok(out)
}

/// Indexed window basis.
#[derive(Clone, Debug)]
struct Indexed<L> {
    basis: Vec<Monomial<L>>,
    index: HashMap<Monomial<L>, usize>,
}

impl<L: FreeLabel> Indexed<L> {
    fn new(basis: Vec<Monomial<L>>) -> Self {
        let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Indexed { basis, index }
    }

    fn len(&self) -> usize {
        self.basis.len()
    }

    fn vector<S: Scalar>(&self, e: &Element<S, L>) -> Result<SparseVec<S>> {
        let entries = e
            .terms()
            .map(|(m, c)| {
                self.index
                    .get(m)
                    .map(|&i| (i, c.clone()))
                    .ok_or_else(|| Error::OutOfWindow(m.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseVec::from_entries(entries))
    }

    fn element<S: Scalar>(&self, v: &SparseVec<S>) -> Element<S, L> {
        let mut e = Element::zero();
        for (i, c) in v.entries() {
            e.add_term(self.basis[*i].clone(), c.clone());
        }
        e
    }
}

/// The closure of a set of generators inside a window.
#[derive(Clone, Debug)]
pub struct IdealSpan<S, L> {
    window: Window,
    space: Indexed<L>,
    generators: Vec<Element<S, L>>,
    span: Echelon<S>,
    rounds: usize,
    complete: bool,
}

impl<S: Scalar, L: FreeLabel> IdealSpan<S, L> {
    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn basis(&self) -> &[Monomial<L>] {
        &self.space.basis
    }

    pub fn generators(&self) -> &[Element<S, L>] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.span.rank()
    }

    /// Closure rounds performed; the generators alone are round 0.
    pub fn rounds(&self) -> usize {
        self.rounds
    }

    /// False if the fixpoint was cut short by a round limit.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Fully reduced spanning rows in canonical monomial order.
    pub fn rows(&self) -> Vec<Element<S, L>> {
        self.span.rref().0.iter().map(|r| self.space.element(r)).collect()
    }

    pub fn contains(&self, e: &Element<S, L>) -> Result<bool> {
        Ok(self.span.contains(&self.space.vector(e)?))
    }
}

/// One coordinate box of the closure, with its own echelon form.
struct ClosureBox<S> {
    allowed: Vec<bool>,
    echelon: Echelon<S>,
    multipliers: Vec<usize>,
    alpha: bool,
}

impl<S: Scalar> ClosureBox<S> {
    fn new(allowed: Vec<bool>, multipliers: Vec<usize>, alpha: bool) -> Self {
        let mut order: Vec<usize> = (0..allowed.len()).filter(|&c| !allowed[c]).collect();
        order.extend((0..allowed.len()).filter(|&c| allowed[c]));
        ClosureBox {
            allowed,
            echelon: Echelon::with_order(order),
            multipliers,
            alpha,
        }
    }
}

/// Least subspace of the `window` span that contains `generators` and is
/// closed under multiplication on either side by window monomials and under
/// α, wherever the result stays in the window. `max_rounds` stops the
/// fixpoint early (only useful to demonstrate an under-closed ideal).
pub fn ideal_closure<S, L>(
    module: &HomModule<S>,
    generators: Vec<Element<S, L>>,
    window: &Window,
    max_rounds: Option<usize>,
) -> Result<IdealSpan<S, L>>
where
    S: Scalar,
    L: FreeLabel,
{
    let fa = FreeAlgebra::<S, L>::new(module.clone());
    for g in &generators {
        fa.check_element(g)?;
    }
    let space = Indexed::new(fa.basis_window(window)?);
    let n = space.len();
    let vectors = generators
        .iter()
        .map(|g| space.vector(g))
        .collect::<Result<Vec<_>>>()?;

    let (max_a, max_w) = (window.max_arity, u64::from(window.max_weight));
    let mut boxes: Vec<ClosureBox<S>> = Vec::new();
    for a in 1..max_a {
        for w in 0..=max_w {
            let multipliers: Vec<usize> = (0..n)
                .filter(|&i| space.basis[i].arity() == a && space.basis[i].total_weight() == w)
                .collect();
            if multipliers.is_empty() {
                continue;
            }
            let allowed = space
                .basis
                .iter()
                .map(|m| m.arity() + a <= max_a && m.total_weight() + w <= max_w)
                .collect();
            boxes.push(ClosureBox::new(allowed, multipliers, false));
        }
    }
    let allowed_alpha = space
        .basis
        .iter()
        .map(|m| m.is_generator() || m.total_weight() < max_w)
        .collect();
    boxes.push(ClosureBox::new(allowed_alpha, Vec::new(), true));

    let roots = L::products();
    let mut span = Echelon::new(n);
    let mut frontier = vectors;
    let mut rounds = 0;
    let mut complete = true;
    loop {
        // Insert the frontier; collect the new box directions it creates.
        let mut fresh: Vec<(usize, SparseVec<S>)> = Vec::new();
        for v in &frontier {
            if let Some(row) = span.insert(v) {
                for (b, bx) in boxes.iter_mut().enumerate() {
                    if let Some(r) = bx.echelon.insert(&row) {
                        if r.entries().iter().all(|(c, _)| bx.allowed[*c]) {
                            fresh.push((b, r));
                        }
                    }
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        if max_rounds.is_some_and(|m| rounds >= m) {
            complete = false;
            break;
        }
        rounds += 1;
        frontier = Vec::new();
        for (b, r) in fresh {
            let bx = &boxes[b];
            if bx.alpha {
                let mut out = Element::zero();
                for (i, c) in r.entries() {
                    fa.alpha_monomial_into(&space.basis[*i], c, &mut out);
                }
                frontier.push(space.vector(&out)?);
                continue;
            }
            for &u in &bx.multipliers {
                let um = &space.basis[u];
                for root in &roots {
                    let mut left = Vec::with_capacity(r.entries().len());
                    let mut right = Vec::with_capacity(r.entries().len());
                    for (i, c) in r.entries() {
                        let m = &space.basis[*i];
                        left.push((space.index[&um.graft(m, root.clone())], c.clone()));
                        right.push((space.index[&m.graft(um, root.clone())], c.clone()));
                    }
                    frontier.push(SparseVec::from_entries(left));
                    frontier.push(SparseVec::from_entries(right));
                }
            }
        }
    }
    Ok(IdealSpan {
        window: *window,
        space,
        generators,
        span,
        rounds,
        complete,
    })
}

/// Dimensions of one (arity, total weight) cell of a windowed quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CellDims {
    pub arity: usize,
    pub weight: u64,
    pub window_dim: usize,
    pub ideal_rank: usize,
    pub quotient_dim: usize,
}

/// A windowed quotient `F / I` with partial operation tables.
///
/// Coordinates of quotient elements are taken over the standard monomials.
/// Table entries whose product or α-image leaves the window are absent.
#[derive(Clone, Debug)]
pub struct QuotientPresentation<S, L> {
    kind: EnvelopeKind,
    window: Window,
    module: HomModule<S>,
    space: Indexed<L>,
    rows: Vec<SparseVec<S>>,
    pivots: Vec<usize>,
    pivot_row: HashMap<usize, usize>,
    standard: Vec<usize>,
    standard_pos: Vec<Option<usize>>,
    roots: Vec<L>,
    products: Vec<BTreeMap<(usize, usize), SparseVec<S>>>,
    alpha: BTreeMap<usize, SparseVec<S>>,
    ideal: IdealSpan<S, L>,
}

pub type HomAssocQuotient<S> = QuotientPresentation<S, u32>;
pub type DialgebraQuotient<S> = QuotientPresentation<S, DiWeight>;

impl<S: Scalar, L: FreeLabel> QuotientPresentation<S, L> {
    fn build(
        kind: EnvelopeKind,
        module: &HomModule<S>,
        window: &Window,
        ideal: IdealSpan<S, L>,
    ) -> Result<Self> {
        let fa = FreeAlgebra::<S, L>::new(module.clone());
        let target = Indexed::new(fa.basis_window(window)?);
        let inside: Vec<bool> = ideal.space.basis.iter().map(|m| window.contains(m)).collect();
        let mut echelon = Echelon::new(target.len());
        for r in ideal.span.intersect_coordinates(|c| inside[c]) {
            let moved = r.remap(|c| target.index.get(&ideal.space.basis[c]).copied());
            echelon.insert(&moved);
        }
        let (rows, pivots) = echelon.rref();
        let pivot_row = pivots.iter().enumerate().map(|(r, &p)| (p, r)).collect::<HashMap<_, _>>();
        let standard: Vec<usize> = (0..target.len()).filter(|c| !pivot_row.contains_key(c)).collect();
        let mut standard_pos = vec![None; target.len()];
        for (k, &c) in standard.iter().enumerate() {
            standard_pos[c] = Some(k);
        }
        let mut q = QuotientPresentation {
            kind,
            window: *window,
            module: module.clone(),
            space: target,
            rows,
            pivots,
            pivot_row,
            standard,
            standard_pos,
            roots: L::products(),
            products: Vec::new(),
            alpha: BTreeMap::new(),
            ideal,
        };
        q.fill_tables(&fa)?;
        Ok(q)
    }

    fn fill_tables(&mut self, fa: &FreeAlgebra<S, L>) -> Result<()> {
        let mut products = Vec::new();
        for root in &self.roots {
            let mut table = BTreeMap::new();
            for (i, &ci) in self.standard.iter().enumerate() {
                for (j, &cj) in self.standard.iter().enumerate() {
                    let p = self.space.basis[ci].graft(&self.space.basis[cj], root.clone());
                    if let Some(&k) = self.space.index.get(&p) {
                        table.insert((i, j), self.reduce_vector(SparseVec::from_entries(vec![(k, S::one())])));
                    }
                }
            }
            products.push(table);
        }
        let mut alpha = BTreeMap::new();
        for (i, &ci) in self.standard.iter().enumerate() {
            let mut image = Element::zero();
            fa.alpha_monomial_into(&self.space.basis[ci], &S::one(), &mut image);
            if self.window.contains_element(&image) {
                alpha.insert(i, self.reduce_vector(self.space.vector(&image)?));
            }
        }
        self.products = products;
        self.alpha = alpha;
        Ok(())
    }

    /// Normal form over the standard monomials of a window vector.
    fn reduce_vector(&self, mut v: SparseVec<S>) -> SparseVec<S> {
        // Rows are fully reduced, so one pass over the pivots suffices.
        for (&p, &r) in &self.pivot_row {
            if let Some(c) = v.get(p).cloned() {
                v = v.axpy(&-c, &self.rows[r]);
            }
        }
        v.remap(|c| self.standard_pos[c])
    }

    pub fn kind(&self) -> EnvelopeKind {
        self.kind
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn module(&self) -> &HomModule<S> {
        &self.module
    }

    /// Number of standard monomials.
    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    /// Number of monomials in the (unpadded) window.
    pub fn window_dim(&self) -> usize {
        self.space.len()
    }

    /// Rank of the ideal intersected with the window.
    pub fn ideal_rank(&self) -> usize {
        self.rows.len()
    }

    pub fn standard_monomials(&self) -> Vec<&Monomial<L>> {
        self.standard.iter().map(|&c| &self.space.basis[c]).collect()
    }

    /// The windowed ideal as fully reduced rows.
    pub fn ideal_rows(&self) -> Vec<Element<S, L>> {
        self.rows.iter().map(|r| self.space.element(r)).collect()
    }

    pub fn padded_ideal(&self) -> &IdealSpan<S, L> {
        &self.ideal
    }

    /// Root labels of the products, in table order.
    pub fn product_labels(&self) -> &[L] {
        &self.roots
    }

    /// Coordinates over the standard monomials of the coset of `e`.
    pub fn reduce(&self, e: &Element<S, L>) -> Result<Vec<S>> {
        Ok(self.reduce_vector(self.space.vector(e)?).to_dense(self.dim()))
    }

    /// The standard representative with coordinates `coords`.
    pub fn lift(&self, coords: &[S]) -> Result<Element<S, L>> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for a quotient of dimension {}",
                coords.len(),
                self.dim()
            )));
        }
        let mut e = Element::zero();
        for (k, c) in coords.iter().enumerate() {
            e.add_term(self.space.basis[self.standard[k]].clone(), c.clone());
        }
        Ok(e)
    }

    /// Product number `which` (see [`Self::product_labels`]) of two quotient
    /// elements, or `None` if a needed table entry is outside the window.
    pub fn mul(&self, which: usize, x: &[S], y: &[S]) -> Option<Vec<S>> {
        let table = &self.products[which];
        let mut out = SparseVec::new();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                out = out.axpy(&(a.clone() * b.clone()), table.get(&(i, j))?);
            }
        }
        Some(out.to_dense(self.dim()))
    }

    pub fn alpha(&self, x: &[S]) -> Option<Vec<S>> {
        let mut out = SparseVec::new();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            out = out.axpy(a, self.alpha.get(&i)?);
        }
        Some(out.to_dense(self.dim()))
    }

    /// Defined entries of product `which`: `(i, j) ↦ s_i s_j`.
    pub fn product_table(&self, which: usize) -> impl Iterator<Item = ((usize, usize), Vec<S>)> + '_ {
        self.products[which].iter().map(|(&k, v)| (k, v.to_dense(self.dim())))
    }

    pub fn alpha_table(&self) -> impl Iterator<Item = (usize, Vec<S>)> + '_ {
        self.alpha.iter().map(|(&k, v)| (k, v.to_dense(self.dim())))
    }

    /// Per-cell dimensions in canonical (arity, weight) order.
    pub fn table(&self) -> Vec<CellDims> {
        let mut cells: BTreeMap<(usize, u64), CellDims> = BTreeMap::new();
        for n in 1..=self.window.max_arity {
            for w in 0..=u64::from(self.window.max_weight) {
                if n == 1 && w > 0 {
                    continue;
                }
                cells.insert(
                    (n, w),
                    CellDims {
                        arity: n,
                        weight: w,
                        window_dim: 0,
                        ideal_rank: 0,
                        quotient_dim: 0,
                    },
                );
            }
        }
        let key = |c: usize| {
            let m = &self.space.basis[c];
            (m.arity(), m.total_weight())
        };
        for c in 0..self.space.len() {
            cells.get_mut(&key(c)).expect("cell").window_dim += 1;
        }
        for &p in &self.pivots {
            cells.get_mut(&key(p)).expect("cell").ideal_rank += 1;
        }
        for &s in &self.standard {
            cells.get_mut(&key(s)).expect("cell").quotient_dim += 1;
        }
        cells.into_values().collect()
    }

    /// `j: L → Q`, `x_i ↦ [x_i]`, as a `dim Q × dim L` matrix.
    pub fn unit_map_j(&self) -> Matrix<S> {
        let d = self.module.dim();
        let mut m = Matrix::zeros(self.dim(), d);
        for i in 0..d {
            let col = self.reduce(&Element::monomial(Monomial::generator(i))).expect("generators lie in every window");
            for (k, c) in col.into_iter().enumerate() {
                m[(k, i)] = c;
            }
        }
        m
    }
}

fn build<S: Scalar, L: FreeLabel>(
    kind: EnvelopeKind,
    module: &HomModule<S>,
    window: &Window,
    generators: impl FnOnce(&Window) -> Result<Vec<Element<S, L>>>,
    max_rounds: Option<usize>,
) -> Result<QuotientPresentation<S, L>> {
    let padded = window.padded();
    let gens = generators(&padded)?;
    let ideal = ideal_closure(module, gens, &padded, max_rounds)?;
    QuotientPresentation::build(kind, module, window, ideal)
}

/// `U_HLie(L)` truncated to `window`.
pub fn u_hlie<S: Scalar>(l: &HomAlgebra<S>, window: &Window) -> Result<HomAssocQuotient<S>> {
    u_hlie_with_rounds(l, window, None)
}

/// [`u_hlie`] with the closure stopped after `max_rounds` rounds.
pub fn u_hlie_with_rounds<S: Scalar>(
    l: &HomAlgebra<S>,
    window: &Window,
    max_rounds: Option<usize>,
) -> Result<HomAssocQuotient<S>> {
    require("hom-lie", check_hom_lie(l))?;
    build(EnvelopeKind::HLie, &l.module, window, |w| hlie_ideal_generators(l, w), max_rounds)
}

/// `F_HAs(V)` truncated to `window`.
pub fn f_has<S: Scalar>(v: &HomModule<S>, window: &Window) -> Result<HomAssocQuotient<S>> {
    f_has_with_rounds(v, window, None)
}

pub fn f_has_with_rounds<S: Scalar>(
    v: &HomModule<S>,
    window: &Window,
    max_rounds: Option<usize>,
) -> Result<HomAssocQuotient<S>> {
    build(EnvelopeKind::FHas, v, window, |w| fhas_ideal_generators(v, w), max_rounds)
}

/// `U_HLeib(L)` truncated to `window`.
pub fn u_hleib<S: Scalar>(l: &HomAlgebra<S>, window: &Window) -> Result<DialgebraQuotient<S>> {
    u_hleib_with_rounds(l, window, None)
}

pub fn u_hleib_with_rounds<S: Scalar>(
    l: &HomAlgebra<S>,
    window: &Window,
    max_rounds: Option<usize>,
) -> Result<DialgebraQuotient<S>> {
    require("hom-leibniz", check_hom_leibniz(l))?;
    build(EnvelopeKind::HLeib, &l.module, window, |w| hleib_ideal_generators(l, w), max_rounds)
}

/// An axiom with its two sides evaluated.
type Identity<S> = (Axiom, Vec<S>, Vec<S>);

/// Outcome of [`check_quotient_axioms`].
#[derive(Clone, Debug)]
pub struct QuotientCheck<S> {
    pub violations: Violations<S>,
    pub checked: usize,
    /// Triples with a needed product or α-image outside the window.
    pub skipped: usize,
}

impl<S> QuotientCheck<S> {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Hom-associativity (one product) or the five Hom-dialgebra axioms (two
/// products) on every triple of standard monomials, computed through the
/// partial tables.
pub fn check_quotient_axioms<S: Scalar, L: FreeLabel>(q: &QuotientPresentation<S, L>) -> QuotientCheck<S> {
    let d = q.dim();
    let unit = |i: usize| {
        let mut v = vec![S::zero(); d];
        v[i] = S::one();
        v
    };
    let mut out = QuotientCheck {
        violations: Vec::new(),
        checked: 0,
        skipped: 0,
    };
    let two = q.product_labels().len() == 2;
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let (ex, ey, ez) = (unit(x), unit(y), unit(z));
                let pairs: Option<Vec<Identity<S>>> = (|| {
                    let ax = q.alpha(&ex)?;
                    let az = q.alpha(&ez)?;
                    if !two {
                        let lhs = q.mul(0, &ax, &q.mul(0, &ey, &ez)?)?;
                        let rhs = q.mul(0, &q.mul(0, &ex, &ey)?, &az)?;
                        return Some(vec![(Axiom::HomAssociativity, lhs, rhs)]);
                    }
                    let (l, r) = (0, 1);
                    let a_ll = q.mul(l, &ax, &q.mul(l, &ey, &ez)?)?;
                    let ll_a = q.mul(l, &q.mul(l, &ex, &ey)?, &az)?;
                    let a_lr = q.mul(l, &ax, &q.mul(r, &ey, &ez)?)?;
                    let rl_a = q.mul(l, &q.mul(r, &ex, &ey)?, &az)?;
                    let a_rl = q.mul(r, &ax, &q.mul(l, &ey, &ez)?)?;
                    let lr_a = q.mul(r, &q.mul(l, &ex, &ey)?, &az)?;
                    let a_rr = q.mul(r, &ax, &q.mul(r, &ey, &ez)?)?;
                    let rr_a = q.mul(r, &q.mul(r, &ex, &ey)?, &az)?;
                    Some(vec![
                        (Axiom::Dialgebra(1), a_ll, ll_a.clone()),
                        (Axiom::Dialgebra(2), ll_a, a_lr),
                        (Axiom::Dialgebra(3), rl_a, a_rl),
                        (Axiom::Dialgebra(4), lr_a, a_rr.clone()),
                        (Axiom::Dialgebra(5), a_rr, rr_a),
                    ])
                })();
                let Some(pairs) = pairs else {
                    out.skipped += 1;
                    continue;
                };
                out.checked += 1;
                for (axiom, lhs, rhs) in pairs {
                    let diff: Vec<S> = lhs.iter().zip(&rhs).map(|(a, b)| a.clone() - b.clone()).collect();
                    if diff.iter().any(|c| !c.is_zero()) {
                        out.violations.push(Violation {
                            axiom,
                            indices: vec![x, y, z],
                            discrepancy: diff,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Result of checking the induced morphism `h: U_HLie(L) → A` on a window.
#[derive(Clone, Debug, Default)]
pub struct AdjunctionReport {
    /// Padded generators, padded closure rows and windowed ideal rows
    /// evaluated under `g`.
    pub ideal_elements_checked: usize,
    pub generators_checked: usize,
    pub table_entries_checked: usize,
    pub failures: Vec<String>,
    pub quotient_dim: usize,
}

impl AdjunctionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Memoized `g` on monomials: `g(τ1 ∨ τ2)[r] = α^r(g(τ1) g(τ2))`.
struct GCache<'a, S: Scalar> {
    g: UniversalMap<'a, S, HomAlgebra<S>>,
    target: &'a HomAlgebra<S>,
    memo: HashMap<Monomial<u32>, Vec<S>>,
}

impl<S: Scalar> GCache<'_, S> {
    fn monomial(&mut self, m: &Monomial<u32>) -> Result<Vec<S>> {
        if let Some(v) = self.memo.get(m) {
            return Ok(v.clone());
        }
        let v = match m.split() {
            None => self.g.eval_monomial(m)?,
            Some((l, r, w)) => {
                let mut v = self.target.mul(&self.monomial(&l)?, &self.monomial(&r)?);
                for _ in 0..w {
                    v = self.target.alpha(&v);
                }
                v
            }
        };
        self.memo.insert(m.clone(), v.clone());
        Ok(v)
    }

    fn element(&mut self, e: &Element<S, u32>) -> Result<Vec<S>> {
        let mut out = vec![S::zero(); self.target.dim()];
        for (m, c) in e.terms() {
            let v = self.monomial(m)?;
            for (o, x) in out.iter_mut().zip(v) {
                *o = o.clone() + c.clone() * x;
            }
        }
        Ok(out)
    }
}

/// Instance check of the adjunction `U_HLie ⊣ HLie`: with `g: F(L) → A`
/// the universal map extending `f` and `h` its factorization through the
/// windowed quotient, verifies (i) `g` kills the ideal, (ii) `h ∘ j = f`,
/// (iii) `h` respects the partial μ and α tables.
///
/// Fails with [`Error::Hypothesis`] unless `L` is Hom-Lie, `A` is
/// Hom-associative and `f` is a morphism `L → HLie(A)`.
pub fn induced_morphism_check<S: Scalar>(
    l: &HomAlgebra<S>,
    a: &HomAlgebra<S>,
    f: &Matrix<S>,
    window: &Window,
) -> Result<AdjunctionReport> {
    require("hom-lie", check_hom_lie(l))?;
    require("hom-associativity", check_hom_associative(a))?;
    require("f is a morphism L -> HLie(A)", check_lie_morphism(f, l, a)?)?;
    let q = u_hlie(l, window)?;
    let mut g = GCache {
        g: UniversalMap::new::<u32>(&l.module, a, f)?,
        target: a,
        memo: HashMap::new(),
    };
    let mut report = AdjunctionReport {
        quotient_dim: q.dim(),
        ..Default::default()
    };

    let ideal = q.padded_ideal();
    for (k, gen) in ideal.generators().iter().enumerate() {
        report.generators_checked += 1;
        if g.element(gen)?.iter().any(|c| !c.is_zero()) {
            report.failures.push(format!("g does not vanish on generator {k}: {gen}"));
        }
    }
    for (k, row) in ideal.rows().iter().chain(q.ideal_rows().iter()).enumerate() {
        report.ideal_elements_checked += 1;
        if g.element(row)?.iter().any(|c| !c.is_zero()) {
            report.failures.push(format!("g does not vanish on ideal row {k}: {row}"));
        }
    }

    let h: Vec<Vec<S>> = q
        .standard_monomials()
        .into_iter()
        .map(|m| g.monomial(m))
        .collect::<Result<_>>()?;
    let apply_h = |coords: &[S]| {
        let mut out = vec![S::zero(); a.dim()];
        for (c, v) in coords.iter().zip(&h) {
            for (o, x) in out.iter_mut().zip(v) {
                *o = o.clone() + c.clone() * x.clone();
            }
        }
        out
    };

    let j = q.unit_map_j();
    for i in 0..l.dim() {
        if apply_h(&j.column(i)) != f.column(i) {
            report.failures.push(format!("h(j(x{i})) differs from f(x{i})"));
        }
    }
    for ((i, k), v) in q.product_table(0) {
        report.table_entries_checked += 1;
        if apply_h(&v) != a.mul(&h[i], &h[k]) {
            report.failures.push(format!("h does not respect the product of standard monomials {i} and {k}"));
        }
    }
    for (i, v) in q.alpha_table() {
        report.table_entries_checked += 1;
        if apply_h(&v) != a.alpha(&h[i]) {
            report.failures.push(format!("h does not commute with alpha on standard monomial {i}"));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::StructureConstants;
    use num_rational::BigRational;
    use num_traits::Zero;

    type Q = BigRational;

    fn abelian(dim: usize) -> HomAlgebra<Q> {
        HomAlgebra::zero(dim)
    }

    fn win(n: usize, w: u32, pad: u32) -> Window {
        Window::new(n, w, pad).unwrap()
    }

    #[test]
    fn associator_is_the_only_small_generator() {
        let gens = hlie_ideal_generators(&abelian(1), &win(3, 0, 0)).unwrap();
        let nonzero: Vec<String> = gens.iter().filter(|g| !g.is_zero()).map(ToString::to_string).collect();
        assert_eq!(nonzero, vec!["-1 * (x0,x0,x0)_(i v (i v i)) + 1 * (x0,x0,x0)_((i v i) v i)"]);
        assert_eq!(gens.len(), 2);
    }

    #[test]
    fn empty_closure() {
        let span = ideal_closure::<Q, u32>(&HomModule::identity(1), Vec::new(), &win(3, 1, 0), None).unwrap();
        assert_eq!(span.rank(), 0);
        assert!(span.is_complete());
    }

    #[test]
    fn small_envelopes() {
        assert_eq!(u_hlie(&abelian(1), &win(2, 1, 0)).unwrap().dim(), 3);
        assert_eq!(u_hlie(&abelian(1), &win(3, 0, 0)).unwrap().dim(), 3);
        assert_eq!(u_hleib(&abelian(1), &win(2, 0, 0)).unwrap().dim(), 2);
        assert_eq!(f_has(&HomModule::<Q>::identity(2), &win(1, 3, 1)).unwrap().dim(), 2);
    }

    #[test]
    fn table_accounts_for_every_monomial() {
        let q = u_hlie(&abelian(1), &win(3, 1, 1)).unwrap();
        let cells = q.table();
        assert_eq!(cells.iter().map(|c| c.window_dim).sum::<usize>(), q.window_dim());
        assert_eq!(cells.iter().map(|c| c.ideal_rank).sum::<usize>(), q.ideal_rank());
        assert_eq!(q.window_dim(), q.ideal_rank() + q.dim());
        assert!(cells.iter().all(|c| c.window_dim == c.ideal_rank + c.quotient_dim));
    }

    #[test]
    fn reduce_and_lift() {
        let q = u_hlie(&abelian(1), &win(3, 0, 1)).unwrap();
        let assoc: Element<Q, u32> = "1 * (x0,x0,x0)_(i v (i v i)) - 1 * (x0,x0,x0)_((i v i) v i)".parse().unwrap();
        assert!(q.reduce(&assoc).unwrap().iter().all(|c| c.is_zero()));
        let e = q.lift(&[Q::from_i64(1), Q::from_i64(2), Q::from_i64(3)]).unwrap();
        assert_eq!(q.reduce(&e).unwrap(), vec![Q::from_i64(1), Q::from_i64(2), Q::from_i64(3)]);
        let far: Element<Q, u32> = "1 * (x0,x0)_(i v i)[1]".parse().unwrap();
        assert!(matches!(q.reduce(&far), Err(Error::OutOfWindow(_))));
    }

    #[test]
    fn quotients_satisfy_their_axioms() {
        let q = u_hlie(&abelian(1), &win(4, 1, 1)).unwrap();
        let c = check_quotient_axioms(&q);
        assert!(c.passed(), "{:?}", c.violations);
        assert!(c.checked > 0);
        let d = u_hleib(&abelian(1), &win(3, 0, 1)).unwrap();
        assert!(check_quotient_axioms(&d).passed());
    }

    #[test]
    fn under_closed_ideal_is_detected() {
        let q = f_has_with_rounds(&HomModule::<Q>::identity(1), &win(4, 1, 0), Some(0)).unwrap();
        assert!(!q.padded_ideal().is_complete());
        assert!(!check_quotient_axioms(&q).passed());
        let full = f_has(&HomModule::<Q>::identity(1), &win(4, 1, 0)).unwrap();
        assert!(check_quotient_axioms(&full).passed());
    }

    #[test]
    fn bracket_relation_holds_after_projection() {
        // Heisenberg-type bracket [x0, x1] = x2 with α = Id.
        let mut b = StructureConstants::square(3);
        b.set(0, 1, 2, Q::from_i64(1));
        b.set(1, 0, 2, Q::from_i64(-1));
        let l = HomAlgebra::new(HomModule::identity(3), b).unwrap();
        let q = u_hlie(&l, &win(2, 0, 1)).unwrap();
        let fa = FreeAlgebra::<Q, u32>::new(l.module.clone());
        let (x0, x1) = (fa.generator(0).unwrap(), fa.generator(1).unwrap());
        let comm = fa.mu(&x0, &x1).unwrap().sub(&fa.mu(&x1, &x0).unwrap());
        assert_eq!(q.reduce(&comm).unwrap(), q.reduce(&fa.generator(2).unwrap()).unwrap());
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        let mut b = StructureConstants::square(1);
        b.set(0, 0, 0, Q::from_i64(1));
        let not_lie = HomAlgebra::new(HomModule::identity(1), b).unwrap();
        assert!(matches!(u_hlie(&not_lie, &win(2, 0, 0)), Err(Error::Hypothesis { .. })));
    }
}
