//! The free Hom-nonassociative algebra `F(V)` and its two-product analogue.
//!
//! A basis element is a [`Monomial`]: a weighted tree with generator indices
//! on its leaves, standing for `(x_{l1} ⋯ x_{ln})_τ`. The product grafts
//! trees and concatenates labels; α shifts the lowest weight by one, except
//! on generators where it acts through the matrix of `α_V`. The dialgebra
//! side is the same construction over diweighted trees with one product per
//! [`Side`].

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{HomAlgebra, HomDialgebra, HomModule};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::trees::{
    enumerate_diweighted, enumerate_weighted, Cursor, DiWeight, PlanarTree, Shiftable, Side, VertexLabel,
};

/// Vertex labels usable in a free algebra: weighted (`u32`) or diweighted.
pub trait FreeLabel: Shiftable {
    /// Root labels of the available products: one for `F(V)`, two (⊣, ⊢)
    /// for the dialgebra analogue.
    fn products() -> Vec<Self>;

    /// All trees of arity `n` with total weight at most `max_weight`, in
    /// canonical order.
    fn enumerate(n: usize, max_weight: u32) -> Result<Vec<PlanarTree<Self>>>;
}

impl FreeLabel for u32 {
    fn products() -> Vec<Self> {
        vec![0]
    }

    fn enumerate(n: usize, max_weight: u32) -> Result<Vec<PlanarTree<Self>>> {
        enumerate_weighted(n, max_weight)
    }
}

impl FreeLabel for DiWeight {
    fn products() -> Vec<Self> {
        Side::BOTH.iter().map(|&s| DiWeight::new(0, s)).collect()
    }

    fn enumerate(n: usize, max_weight: u32) -> Result<Vec<PlanarTree<Self>>> {
        enumerate_diweighted(n, max_weight)
    }
}

/// `(x_{l1} ⋯ x_{ln})_τ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial<L> {
    tree: PlanarTree<L>,
    labels: Vec<usize>,
}

pub type FreeMonomial = Monomial<u32>;
pub type DiMonomial = Monomial<DiWeight>;

impl<L: VertexLabel> Monomial<L> {
    pub fn new(tree: PlanarTree<L>, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != tree.arity() {
            return Err(Error::InvalidArgument(format!(
                "{} labels for a tree of arity {}",
                labels.len(),
                tree.arity()
            )));
        }
        Ok(Monomial { tree, labels })
    }

    pub fn generator(index: usize) -> Self {
        Monomial {
            tree: PlanarTree::Leaf,
            labels: vec![index],
        }
    }

    pub fn tree(&self) -> &PlanarTree<L> {
        &self.tree
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn arity(&self) -> usize {
        self.tree.arity()
    }

    pub fn total_weight(&self) -> u64 {
        self.tree.total_weight()
    }

    pub fn is_generator(&self) -> bool {
        self.tree.is_leaf()
    }

    pub fn max_label(&self) -> usize {
        self.labels.iter().copied().max().unwrap_or(0)
    }

    /// Grafts `self` and `other` under a new root labeled `root`.
    pub fn graft(&self, other: &Self, root: L) -> Self {
        let mut labels = Vec::with_capacity(self.labels.len() + other.labels.len());
        labels.extend_from_slice(&self.labels);
        labels.extend_from_slice(&other.labels);
        Monomial {
            tree: PlanarTree::join(self.tree.clone(), other.tree.clone(), root),
            labels,
        }
    }

    /// Splits at the lowest vertex: `(left factor, right factor, label)`.
    pub fn split(&self) -> Option<(Self, Self, L)> {
        let (l, r, label) = self.tree.split()?;
        let p = l.arity();
        Some((
            Monomial {
                tree: l.clone(),
                labels: self.labels[..p].to_vec(),
            },
            Monomial {
                tree: r.clone(),
                labels: self.labels[p..].to_vec(),
            },
            label.clone(),
        ))
    }
}

impl<L: Shiftable> Monomial<L> {
    /// `τ ↦ τ[m]` on a monomial of arity at least 2.
    pub fn shift(&self, m: u32) -> Result<Self> {
        Ok(Monomial {
            tree: self.tree.shift(m)?,
            labels: self.labels.clone(),
        })
    }
}

/// Canonical order: arity, total weight, tree, labels.
impl<L: VertexLabel> Ord for Monomial<L> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.arity()
            .cmp(&other.arity())
            .then_with(|| self.total_weight().cmp(&other.total_weight()))
            .then_with(|| self.tree.cmp(&other.tree))
            .then_with(|| self.labels.cmp(&other.labels))
    }
}

impl<L: VertexLabel> PartialOrd for Monomial<L> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<L: VertexLabel> fmt::Display for Monomial<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels.iter().map(|l| format!("x{l}")).collect();
        write!(f, "({})_{}", labels.join(","), self.tree)
    }
}

/// A finite linear combination of monomials with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element<S, L> {
    terms: BTreeMap<Monomial<L>, S>,
}

pub type FreeElement<S> = Element<S, u32>;
pub type DiElement<S> = Element<S, DiWeight>;

impl<S: Scalar, L: VertexLabel> Default for Element<S, L> {
    fn default() -> Self {
        Element { terms: BTreeMap::new() }
    }
}

impl<S: Scalar, L: VertexLabel> Element<S, L> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Monomial<L>) -> Self {
        Self::term(S::one(), m)
    }

    pub fn term(c: S, m: Monomial<L>) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    /// `Σ_i v[i] x_i`.
    pub fn from_generator_coords(v: &[S]) -> Self {
        let mut e = Self::zero();
        for (i, c) in v.iter().enumerate() {
            e.add_term(Monomial::generator(i), c.clone());
        }
        e
    }

    pub fn add_term(&mut self, m: Monomial<L>, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<L>, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial<L>) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Element {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.clone() * c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn max_arity(&self) -> usize {
        self.terms.keys().map(Monomial::arity).max().unwrap_or(0)
    }

    pub fn max_weight(&self) -> u64 {
        self.terms.keys().map(Monomial::total_weight).max().unwrap_or(0)
    }
}

impl<S: Scalar, L: VertexLabel> fmt::Display for Element<S, L> {
    /// `c * (x0,x1)_(i v i)[1] + ...`; the zero element prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c} * {m}")?;
        }
        Ok(())
    }
}

impl<S: Scalar, L: VertexLabel> std::str::FromStr for Element<S, L> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let mut out = Self::zero();
        if cur.peek() == Some('0') {
            let save = cur.pos;
            cur.pos += 1;
            if cur.at_end() {
                return Ok(out);
            }
            cur.pos = save;
        }
        let mut sign = S::one();
        if cur.eat('-') {
            sign = -sign;
        } else {
            cur.eat('+');
        }
        loop {
            if cur.eat('-') {
                sign = -sign;
            }
            cur.skip_ws();
            let start = cur.pos;
            let coef_text = cur.take_while(|c| c.is_ascii_digit() || c == '/');
            let coef = if coef_text.is_empty() {
                S::one()
            } else {
                let c = S::parse_scalar(&coef_text).map_err(|_| Error::Parse {
                    pos: start,
                    msg: format!("bad coefficient {coef_text:?}"),
                })?;
                cur.expect('*')?;
                c
            };
            let m = parse_monomial::<L>(&mut cur)?;
            out.add_term(m, sign.clone() * coef);
            if cur.eat('+') {
                sign = S::one();
            } else if cur.eat('-') {
                sign = -S::one();
            } else if cur.at_end() {
                return Ok(out);
            } else {
                return Err(cur.error("expected '+', '-' or end of input"));
            }
        }
    }
}

fn parse_monomial<L: VertexLabel>(cur: &mut Cursor) -> Result<Monomial<L>> {
    cur.expect('(')?;
    let mut labels = Vec::new();
    loop {
        cur.expect('x')?;
        labels.push(cur.parse_u32()? as usize);
        if cur.eat(')') {
            break;
        }
        cur.expect(',')?;
    }
    cur.expect('_')?;
    let pos = cur.pos;
    let tree = cur.parse_tree::<L>()?;
    Monomial::new(tree, labels).map_err(|e| Error::Parse {
        pos,
        msg: e.to_string(),
    })
}

/// Truncation parameters: monomials of arity at most `max_arity` and total
/// weight at most `max_weight`; `pad` widens both bounds for ideal
/// computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub max_arity: usize,
    pub max_weight: u32,
    pub pad: u32,
}

impl Window {
    pub fn new(max_arity: usize, max_weight: u32, pad: u32) -> Result<Self> {
        if max_arity == 0 {
            return Err(Error::InvalidArgument("window arity bound must be at least 1".into()));
        }
        Ok(Window {
            max_arity,
            max_weight,
            pad,
        })
    }

    /// `(N + pad, W + pad)` with no further padding.
    pub fn padded(&self) -> Window {
        Window {
            max_arity: self.max_arity + self.pad as usize,
            max_weight: self.max_weight + self.pad,
            pad: 0,
        }
    }

    pub fn fits(&self, arity: usize, weight: u64) -> bool {
        arity <= self.max_arity && weight <= u64::from(self.max_weight)
    }

    pub fn contains<L: VertexLabel>(&self, m: &Monomial<L>) -> bool {
        self.fits(m.arity(), m.total_weight())
    }

    pub fn contains_element<S: Scalar, L: VertexLabel>(&self, e: &Element<S, L>) -> bool {
        e.terms().all(|(m, _)| self.contains(m))
    }
}

/// `F(V)` (for `L = u32`) or its dialgebra analogue (for `L = DiWeight`)
/// over a Hom-module `V`.
#[derive(Clone, Debug)]
pub struct FreeAlgebra<S, L> {
    module: HomModule<S>,
    _label: std::marker::PhantomData<L>,
}

pub type FreeHomNonAs<S> = FreeAlgebra<S, u32>;
pub type FreeDi<S> = FreeAlgebra<S, DiWeight>;

impl<S: Scalar, L: FreeLabel> FreeAlgebra<S, L> {
    pub fn new(module: HomModule<S>) -> Self {
        FreeAlgebra {
            module,
            _label: std::marker::PhantomData,
        }
    }

    pub fn module(&self) -> &HomModule<S> {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn generator(&self, i: usize) -> Result<Element<S, L>> {
        if i >= self.dim() {
            return Err(Error::GeneratorRange { index: i, dim: self.dim() });
        }
        Ok(Element::monomial(Monomial::generator(i)))
    }

    pub fn check_element(&self, e: &Element<S, L>) -> Result<()> {
        match e.terms().map(|(m, _)| m.max_label()).max() {
            Some(top) if top >= self.dim() => Err(Error::GeneratorRange {
                index: top,
                dim: self.dim(),
            }),
            _ => Ok(()),
        }
    }

    /// Bilinear extension of `(m, m′) ↦ m ∨_root m′`.
    pub fn product(&self, a: &Element<S, L>, b: &Element<S, L>, root: &L) -> Result<Element<S, L>> {
        self.check_element(a)?;
        self.check_element(b)?;
        let mut out = Element::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                out.add_term(ma.graft(mb, root.clone()), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    /// `α_F`: the matrix of `α_V` on generators, `τ ↦ τ[1]` otherwise.
    pub fn alpha(&self, a: &Element<S, L>) -> Result<Element<S, L>> {
        self.check_element(a)?;
        let mut out = Element::zero();
        for (m, c) in a.terms() {
            self.alpha_monomial_into(m, c, &mut out);
        }
        Ok(out)
    }

    pub(crate) fn alpha_monomial_into(&self, m: &Monomial<L>, c: &S, out: &mut Element<S, L>) {
        if m.is_generator() {
            let i = m.labels()[0];
            let alpha = self.module.alpha();
            for j in 0..self.dim() {
                let a = &alpha[(j, i)];
                if !a.is_zero() {
                    out.add_term(Monomial::generator(j), a.clone() * c.clone());
                }
            }
        } else {
            out.add_term(m.shift(1).expect("arity >= 2"), c.clone());
        }
    }

    /// All monomials inside `window`, in canonical order.
    pub fn basis_window(&self, window: &Window) -> Result<Vec<Monomial<L>>> {
        let d = self.dim();
        let mut out = Vec::new();
        if d == 0 {
            return Ok(out);
        }
        for n in 1..=window.max_arity {
            let trees = L::enumerate(n, window.max_weight)?;
            let words = words(d, n);
            for t in &trees {
                for w in &words {
                    out.push(Monomial {
                        tree: t.clone(),
                        labels: w.clone(),
                    });
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

impl<S: Scalar> FreeAlgebra<S, u32> {
    /// `μ_F`.
    pub fn mu(&self, a: &FreeElement<S>, b: &FreeElement<S>) -> Result<FreeElement<S>> {
        self.product(a, b, &0)
    }
}

impl<S: Scalar> FreeAlgebra<S, DiWeight> {
    /// `⊣` (`Side::Left`) or `⊢` (`Side::Right`).
    pub fn dimu(&self, a: &DiElement<S>, b: &DiElement<S>, side: Side) -> Result<DiElement<S>> {
        self.product(a, b, &DiWeight::new(0, side))
    }
}

/// All words of length `n` over `0..d` in lexicographic order.
fn words(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..d).map(move |i| {
                    let mut w = w.clone();
                    w.push(i);
                    w
                })
            })
            .collect();
    }
    out
}

/// A Hom-algebra in which weighted (or diweighted) trees can be evaluated.
pub trait TreeAlgebra<S: Scalar, L: VertexLabel> {
    fn dim(&self) -> usize;
    fn alpha_matrix(&self) -> &Matrix<S>;
    /// The product recorded by the vertex label (its weight is ignored).
    fn product(&self, label: &L, x: &[S], y: &[S]) -> Vec<S>;
}

impl<S: Scalar> TreeAlgebra<S, u32> for HomAlgebra<S> {
    fn dim(&self) -> usize {
        HomAlgebra::dim(self)
    }

    fn alpha_matrix(&self) -> &Matrix<S> {
        self.module.alpha()
    }

    fn product(&self, _label: &u32, x: &[S], y: &[S]) -> Vec<S> {
        self.mul(x, y)
    }
}

impl<S: Scalar> TreeAlgebra<S, DiWeight> for HomDialgebra<S> {
    fn dim(&self) -> usize {
        HomDialgebra::dim(self)
    }

    fn alpha_matrix(&self) -> &Matrix<S> {
        self.module.alpha()
    }

    fn product(&self, label: &DiWeight, x: &[S], y: &[S]) -> Vec<S> {
        match label.side {
            Side::Left => self.left(x, y),
            Side::Right => self.right(x, y),
        }
    }
}

/// `(x_1 ⋯ x_n)_τ`: leaves take their arguments, and a vertex of weight `r`
/// applies `α^r` to the product of its two branches.
pub fn eval_tree_product<S, L, A>(a: &A, tree: &PlanarTree<L>, args: &[Vec<S>]) -> Result<Vec<S>>
where
    S: Scalar,
    L: VertexLabel,
    A: TreeAlgebra<S, L> + ?Sized,
{
    if args.len() != tree.arity() {
        return Err(Error::InvalidArgument(format!(
            "{} arguments for a tree of arity {}",
            args.len(),
            tree.arity()
        )));
    }
    if let Some(bad) = args.iter().find(|v| v.len() != a.dim()) {
        return Err(Error::DimensionMismatch(format!(
            "argument of length {} in an algebra of dimension {}",
            bad.len(),
            a.dim()
        )));
    }
    Ok(eval_rec(a, tree, args))
}

fn eval_rec<S, L, A>(a: &A, tree: &PlanarTree<L>, args: &[Vec<S>]) -> Vec<S>
where
    S: Scalar,
    L: VertexLabel,
    A: TreeAlgebra<S, L> + ?Sized,
{
    match tree.split() {
        None => args[0].clone(),
        Some((l, r, label)) => {
            let p = l.arity();
            let x = eval_rec(a, l, &args[..p]);
            let y = eval_rec(a, r, &args[p..]);
            let mut v = a.product(label, &x, &y);
            for _ in 0..label.weight() {
                v = a.alpha_matrix().mul_vec(&v);
            }
            v
        }
    }
}

/// The unique morphism `g: F(V) → A` extending a Hom-module morphism
/// `f: V → A` (`f` is a `dim A × dim V` matrix).
pub struct UniversalMap<'a, S, A> {
    target: &'a A,
    images: Vec<Vec<S>>,
}

impl<'a, S: Scalar, A> UniversalMap<'a, S, A> {
    /// Fails unless `f ∘ α_V = α_A ∘ f`.
    pub fn new<L>(v: &HomModule<S>, target: &'a A, f: &Matrix<S>) -> Result<Self>
    where
        L: VertexLabel,
        A: TreeAlgebra<S, L>,
    {
        if f.rows() != target.dim() || f.cols() != v.dim() {
            return Err(Error::DimensionMismatch(format!(
                "f is {}x{}, expected {}x{}",
                f.rows(),
                f.cols(),
                target.dim(),
                v.dim()
            )));
        }
        let lhs = f.mul(v.alpha())?;
        let rhs = target.alpha_matrix().mul(f)?;
        if lhs != rhs {
            let bad: Vec<String> = (0..v.dim())
                .filter(|&i| lhs.column(i) != rhs.column(i))
                .map(|i| format!("f∘α_V and α_A∘f differ on generator x{i}"))
                .collect();
            return Err(Error::Hypothesis {
                hypothesis: "f is a morphism of Hom-modules",
                violations: bad,
            });
        }
        Ok(UniversalMap {
            target,
            images: (0..v.dim()).map(|i| f.column(i)).collect(),
        })
    }

    pub fn eval_monomial<L>(&self, m: &Monomial<L>) -> Result<Vec<S>>
    where
        L: VertexLabel,
        A: TreeAlgebra<S, L>,
    {
        let args = m
            .labels()
            .iter()
            .map(|&i| {
                self.images.get(i).cloned().ok_or(Error::GeneratorRange {
                    index: i,
                    dim: self.images.len(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        eval_tree_product(self.target, m.tree(), &args)
    }

    pub fn eval<L>(&self, e: &Element<S, L>) -> Result<Vec<S>>
    where
        L: VertexLabel,
        A: TreeAlgebra<S, L>,
    {
        let mut out = vec![S::zero(); self.target.dim()];
        for (m, c) in e.terms() {
            let v = self.eval_monomial(m)?;
            for (o, x) in out.iter_mut().zip(v) {
                *o = o.clone() + c.clone() * x;
            }
        }
        Ok(out)
    }
}

/// `g(e)` for the universal map extending `f`.
pub fn universal_map<S, L, A>(v: &HomModule<S>, target: &A, f: &Matrix<S>, e: &Element<S, L>) -> Result<Vec<S>>
where
    S: Scalar,
    L: VertexLabel,
    A: TreeAlgebra<S, L>,
{
    UniversalMap::new::<L>(v, target, f)?.eval(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{graft_weighted, WeightedTree};
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    fn free(dim: usize) -> FreeHomNonAs<Q> {
        FreeAlgebra::new(HomModule::identity(dim))
    }

    #[test]
    fn product_of_generators() {
        let f = free(3);
        let p = f.mu(&f.generator(1).unwrap(), &f.generator(2).unwrap()).unwrap();
        assert_eq!(p.to_string(), "1 * (x1,x2)_(i v i)");
    }

    #[test]
    fn nonassociative_products_differ() {
        let f = free(3);
        let (x, y, z) = (f.generator(0).unwrap(), f.generator(1).unwrap(), f.generator(2).unwrap());
        let left = f.mu(&f.mu(&x, &y).unwrap(), &z).unwrap();
        let right = f.mu(&x, &f.mu(&y, &z).unwrap()).unwrap();
        assert_ne!(left, right);
    }

    #[test]
    fn alpha_on_generators_uses_matrix() {
        let f: FreeHomNonAs<Q> = FreeAlgebra::new(HomModule::new(Matrix::scalar(1, q(2))).unwrap());
        let x = f.generator(0).unwrap();
        assert_eq!(f.alpha(&x).unwrap(), x.scale(&q(2)));
        let xx = f.mu(&x, &x).unwrap();
        assert_eq!(f.alpha(&xx).unwrap().to_string(), "1 * (x0,x0)_(i v i)[1]");
    }

    #[test]
    fn generator_range_is_checked() {
        let f = free(1);
        assert!(matches!(f.generator(1), Err(Error::GeneratorRange { index: 1, dim: 1 })));
        let big: FreeElement<Q> = "1 * (x3)_i".parse().unwrap();
        assert!(f.mu(&big, &big).is_err());
    }

    #[test]
    fn window_bases() {
        let f = free(1);
        let b = f.basis_window(&Window::new(2, 1, 0).unwrap()).unwrap();
        let shown: Vec<String> = b.iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["(x0)_i", "(x0,x0)_(i v i)", "(x0,x0)_(i v i)[1]"]);
        assert_eq!(f.basis_window(&Window::new(3, 0, 0).unwrap()).unwrap().len(), 4);
        assert_eq!(free(3).basis_window(&Window::new(1, 5, 0).unwrap()).unwrap().len(), 3);
        assert!(free(0).basis_window(&Window::new(3, 3, 0).unwrap()).unwrap().is_empty());
        assert!(Window::new(0, 1, 0).is_err());
    }

    #[test]
    fn element_text_round_trip() {
        let e: FreeElement<Q> = "1 * (x0,x1)_(i v i)[1] - 1/2 * (x0)_i + 3 * (x1,x0,x0)_((i v i) v i)"
            .parse()
            .unwrap();
        assert_eq!(e.len(), 3);
        let back: FreeElement<Q> = e.to_string().parse().unwrap();
        assert_eq!(back, e);
        let z: FreeElement<Q> = "0".parse().unwrap();
        assert!(z.is_zero());
        let d: DiElement<Q> = "2 * (x0,x0)_(i vl i)".parse().unwrap();
        assert_eq!(d.to_string(), "2 * (x0,x0)_(i vl i)");
        assert!("1 * (x0,x0)_i".parse::<FreeElement<Q>>().is_err());
        assert!("1 * (x0)_i +".parse::<FreeElement<Q>>().is_err());
    }

    #[test]
    fn dialgebra_products_record_side() {
        let f: FreeDi<Q> = FreeAlgebra::new(HomModule::identity(2));
        let (x, y) = (f.generator(0).unwrap(), f.generator(1).unwrap());
        assert_eq!(f.dimu(&x, &y, Side::Left).unwrap().to_string(), "1 * (x0,x1)_(i vl i)");
        assert_eq!(f.dimu(&x, &y, Side::Right).unwrap().to_string(), "1 * (x0,x1)_(i vr i)");
    }

    #[test]
    fn eval_rejects_arity_mismatch() {
        let a = HomAlgebra::<Q>::zero(1);
        let t = graft_weighted(&WeightedTree::Leaf, &WeightedTree::Leaf);
        assert!(eval_tree_product(&a, &t, &[vec![q(1)]]).is_err());
        assert_eq!(eval_tree_product(&a, &WeightedTree::Leaf, &[vec![q(5)]]).unwrap(), vec![q(5)]);
    }
}
