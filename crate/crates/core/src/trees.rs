//! Planar binary trees, weighted trees and diweighted trees.
//!
//! All three kinds share one representation, [`PlanarTree<L>`], where `L` is
//! the label carried by each internal vertex:
//!
//! * `()` for plain trees ([`Tree`]),
//! * a non-negative weight `u32` ([`WeightedTree`]),
//! * a weight paired with a product side ([`DiweightedTree`]).
//!
//! Trees are immutable and share subtrees through `Arc`, so grafting is O(1).
//!
//! Text notation (whitespace-insensitive):
//!
//! ```text
//! tree   := "i" | "(" tree op tree ")" suffix?
//! op     := "v" | "vl" | "vr"
//! suffix := "[" nonneg-int "]"
//! ```
//!
//! A missing suffix means weight 0. The parser also accepts `{ }` as
//! brackets, `∨`, `∨_l`, `∨_r` for the operators, and redundant outer
//! parentheses around a tree.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Which of the two products an internal vertex of a diweighted tree
/// records: `Left` is ⊣ (`vl`), `Right` is ⊢ (`vr`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Left, Side::Right];

    pub fn symbol(self) -> &'static str {
        match self {
            Side::Left => "⊣",
            Side::Right => "⊢",
        }
    }
}

/// Label of an internal vertex of a diweighted tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiWeight {
    pub weight: u32,
    pub side: Side,
}

impl DiWeight {
    pub fn new(weight: u32, side: Side) -> Self {
        DiWeight { weight, side }
    }
}

/// The operator token read by the parser.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpToken {
    Plain,
    Left,
    Right,
}

/// Data stored at an internal vertex.
pub trait VertexLabel: Clone + Eq + Ord + std::hash::Hash + fmt::Debug + Send + Sync {
    /// The weight (power of α) at this vertex; 0 for plain trees.
    fn weight(&self) -> u32;

    fn op_token(&self) -> &'static str;

    fn from_parts(op: OpToken, weight: Option<u32>) -> std::result::Result<Self, &'static str>;
}

/// Labels whose weight can be raised, i.e. everything except plain trees.
pub trait Shiftable: VertexLabel {
    fn shifted(&self, m: u32) -> Self;
}

impl VertexLabel for () {
    fn weight(&self) -> u32 {
        0
    }

    fn op_token(&self) -> &'static str {
        "v"
    }

    fn from_parts(op: OpToken, weight: Option<u32>) -> std::result::Result<Self, &'static str> {
        match (op, weight) {
            (OpToken::Plain, None) => Ok(()),
            (OpToken::Plain, Some(_)) => Err("weights are not allowed in plain trees"),
            _ => Err("\"vl\"/\"vr\" are only legal in diweighted trees"),
        }
    }
}

impl VertexLabel for u32 {
    fn weight(&self) -> u32 {
        *self
    }

    fn op_token(&self) -> &'static str {
        "v"
    }

    fn from_parts(op: OpToken, weight: Option<u32>) -> std::result::Result<Self, &'static str> {
        match op {
            OpToken::Plain => Ok(weight.unwrap_or(0)),
            _ => Err("\"vl\"/\"vr\" are only legal in diweighted trees"),
        }
    }
}

impl Shiftable for u32 {
    fn shifted(&self, m: u32) -> Self {
        self + m
    }
}

impl VertexLabel for DiWeight {
    fn weight(&self) -> u32 {
        self.weight
    }

    fn op_token(&self) -> &'static str {
        match self.side {
            Side::Left => "vl",
            Side::Right => "vr",
        }
    }

    fn from_parts(op: OpToken, weight: Option<u32>) -> std::result::Result<Self, &'static str> {
        let side = match op {
            OpToken::Left => Side::Left,
            OpToken::Right => Side::Right,
            OpToken::Plain => return Err("\"v\" is not legal in diweighted trees; use \"vl\" or \"vr\""),
        };
        Ok(DiWeight::new(weight.unwrap_or(0), side))
    }
}

impl Shiftable for DiWeight {
    fn shifted(&self, m: u32) -> Self {
        DiWeight::new(self.weight + m, self.side)
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Node<L> {
    pub left: PlanarTree<L>,
    pub right: PlanarTree<L>,
    pub label: L,
    arity: usize,
    total_weight: u64,
}

/// A planar binary tree whose internal vertices carry labels of type `L`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PlanarTree<L> {
    Leaf,
    Node(Arc<Node<L>>),
}

pub type Tree = PlanarTree<()>;
pub type WeightedTree = PlanarTree<u32>;
pub type DiweightedTree = PlanarTree<DiWeight>;

impl<L: VertexLabel> PlanarTree<L> {
    pub fn leaf() -> Self {
        PlanarTree::Leaf
    }

    /// Joins two trees at a new lowest internal vertex labeled `label`.
    pub fn join(left: Self, right: Self, label: L) -> Self {
        let arity = left.arity() + right.arity();
        let total_weight = left.total_weight() + right.total_weight() + u64::from(label.weight());
        PlanarTree::Node(Arc::new(Node {
            left,
            right,
            label,
            arity,
            total_weight,
        }))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, PlanarTree::Leaf)
    }

    /// Number of leaves.
    pub fn arity(&self) -> usize {
        match self {
            PlanarTree::Leaf => 1,
            PlanarTree::Node(n) => n.arity,
        }
    }

    pub fn internal_vertices(&self) -> usize {
        self.arity() - 1
    }

    /// Sum of all internal-vertex weights.
    pub fn total_weight(&self) -> u64 {
        match self {
            PlanarTree::Leaf => 0,
            PlanarTree::Node(n) => n.total_weight,
        }
    }

    /// Label of the lowest internal vertex, if any.
    pub fn root_label(&self) -> Option<&L> {
        match self {
            PlanarTree::Leaf => None,
            PlanarTree::Node(n) => Some(&n.label),
        }
    }

    /// `(left, right, label)` at the lowest internal vertex.
    pub fn split(&self) -> Option<(&Self, &Self, &L)> {
        match self {
            PlanarTree::Leaf => None,
            PlanarTree::Node(n) => Some((&n.left, &n.right, &n.label)),
        }
    }

    /// Labels of the internal vertices in pre-order (root, left, right).
    pub fn labels_preorder(&self) -> Vec<L> {
        let mut out = Vec::with_capacity(self.internal_vertices());
        self.push_labels(&mut out);
        out
    }

    fn push_labels(&self, out: &mut Vec<L>) {
        if let PlanarTree::Node(n) = self {
            out.push(n.label.clone());
            n.left.push_labels(out);
            n.right.push_labels(out);
        }
    }

    /// The underlying unlabeled tree.
    pub fn shape(&self) -> Tree {
        match self {
            PlanarTree::Leaf => Tree::Leaf,
            PlanarTree::Node(n) => Tree::join(n.left.shape(), n.right.shape(), ()),
        }
    }

    /// Replaces the labels of `shape` in pre-order by `labels`.
    pub fn with_shape<M>(shape: &PlanarTree<M>, labels: &[L]) -> Result<Self>
    where
        M: VertexLabel,
    {
        if labels.len() != shape.internal_vertices() {
            return Err(Error::InvalidArgument(format!(
                "{} labels supplied for a tree with {} internal vertices",
                labels.len(),
                shape.internal_vertices()
            )));
        }
        let mut it = labels.iter();
        Ok(Self::relabel(shape, &mut it))
    }

    fn relabel<'a, M: VertexLabel>(shape: &PlanarTree<M>, it: &mut std::slice::Iter<'a, L>) -> Self
    where
        L: 'a,
    {
        match shape {
            PlanarTree::Leaf => PlanarTree::Leaf,
            PlanarTree::Node(n) => {
                let label = it.next().expect("label count checked").clone();
                let left = Self::relabel(&n.left, it);
                let right = Self::relabel(&n.right, it);
                Self::join(left, right, label)
            }
        }
    }

    /// Compares underlying shapes only: arity, then left-subtree arity,
    /// then left shape, then right shape.
    pub fn cmp_shape<M: VertexLabel>(&self, other: &PlanarTree<M>) -> Ordering {
        self.arity()
            .cmp(&other.arity())
            .then_with(|| self.cmp_shape_same_arity(other))
    }

    fn cmp_shape_same_arity<M: VertexLabel>(&self, other: &PlanarTree<M>) -> Ordering {
        match (self, other) {
            (PlanarTree::Leaf, PlanarTree::Leaf) => Ordering::Equal,
            (PlanarTree::Leaf, _) => Ordering::Less,
            (_, PlanarTree::Leaf) => Ordering::Greater,
            (PlanarTree::Node(a), PlanarTree::Node(b)) => a
                .left
                .arity()
                .cmp(&b.left.arity())
                .then_with(|| a.left.cmp_shape_same_arity(&b.left))
                .then_with(|| a.right.cmp_shape_same_arity(&b.right)),
        }
    }
}

/// Canonical order: arity, then shape, then pre-order label sequence.
impl<L: VertexLabel> Ord for PlanarTree<L> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_shape(other)
            .then_with(|| self.labels_preorder().cmp(&other.labels_preorder()))
    }
}

impl<L: VertexLabel> PartialOrd for PlanarTree<L> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<L: Shiftable> PlanarTree<L> {
    /// `τ[m]`: adds `m` to the weight of the lowest internal vertex.
    pub fn shift(&self, m: u32) -> Result<Self> {
        match self {
            PlanarTree::Leaf => Err(Error::NoLowestVertex),
            PlanarTree::Node(n) => Ok(Self::join(
                n.left.clone(),
                n.right.clone(),
                n.label.shifted(m),
            )),
        }
    }
}

/// Grafting of plain trees.
pub fn graft(left: &Tree, right: &Tree) -> Tree {
    Tree::join(left.clone(), right.clone(), ())
}

/// Grafting of weighted trees; the new lowest vertex has weight 0.
pub fn graft_weighted(left: &WeightedTree, right: &WeightedTree) -> WeightedTree {
    WeightedTree::join(left.clone(), right.clone(), 0)
}

/// Left (`Side::Left`) or right grafting of diweighted trees.
pub fn graft_di(left: &DiweightedTree, right: &DiweightedTree, side: Side) -> DiweightedTree {
    DiweightedTree::join(left.clone(), right.clone(), DiWeight::new(0, side))
}

pub fn shift_weight(tree: &WeightedTree, m: u32) -> Result<WeightedTree> {
    tree.shift(m)
}

pub fn shift_di(tree: &DiweightedTree, m: u32) -> Result<DiweightedTree> {
    tree.shift(m)
}

/// The unique `(τ1, τ2, r)` with `τ = (τ1 ∨ τ2)[r]`.
pub fn decompose_weighted(tree: &WeightedTree) -> Result<(WeightedTree, WeightedTree, u32)> {
    match tree {
        PlanarTree::Leaf => Err(Error::NoLowestVertex),
        PlanarTree::Node(n) => Ok((n.left.clone(), n.right.clone(), n.label)),
    }
}

/// The unique `(τ1, τ2, side, m)` with `τ = (τ1 ∨_side τ2)[m]`.
pub fn decompose_di(tree: &DiweightedTree) -> Result<(DiweightedTree, DiweightedTree, Side, u32)> {
    match tree {
        PlanarTree::Leaf => Err(Error::NoLowestVertex),
        PlanarTree::Node(n) => Ok((n.left.clone(), n.right.clone(), n.label.side, n.label.weight)),
    }
}

/// Catalan number `C_n = (2n)! / (n! (n+1)!)`.
pub fn catalan(n: u64) -> BigUint {
    // binom(2n, n) built as a running product stays integral at every step.
    let mut binom = BigUint::one();
    for k in 1..=n {
        binom = binom * BigUint::from(n + k) / BigUint::from(k);
    }
    binom / BigUint::from(n + 1)
}

/// All plain trees with `n` leaves in canonical order.
pub fn enumerate_trees(n: usize) -> Result<Vec<Tree>> {
    if n == 0 {
        return Err(Error::InvalidArgument("arity must be at least 1".into()));
    }
    let mut by_arity: Vec<Vec<Tree>> = vec![Vec::new(), vec![Tree::Leaf]];
    for m in 2..=n {
        let mut level = Vec::new();
        for left_arity in 1..m {
            for l in &by_arity[left_arity] {
                for r in &by_arity[m - left_arity] {
                    level.push(Tree::join(l.clone(), r.clone(), ()));
                }
            }
        }
        by_arity.push(level);
    }
    Ok(by_arity.swap_remove(n))
}

/// All label sequences of length `len` whose weights sum to at most
/// `max_weight`, lexicographically ordered; `alphabet(w)` lists the labels
/// of weight `w` in increasing order.
fn label_sequences<L: VertexLabel>(len: usize, max_weight: u32, alphabet: &dyn Fn(u32) -> Vec<L>) -> Vec<Vec<L>> {
    fn go<L: VertexLabel>(
        len: usize,
        budget: u32,
        alphabet: &dyn Fn(u32) -> Vec<L>,
        prefix: &mut Vec<L>,
        out: &mut Vec<Vec<L>>,
    ) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for w in 0..=budget {
            for label in alphabet(w) {
                prefix.push(label);
                go(len, budget - w, alphabet, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(len, max_weight, alphabet, &mut Vec::with_capacity(len), &mut out);
    out
}

fn enumerate_labeled<L: VertexLabel>(
    n: usize,
    max_weight: u32,
    alphabet: &dyn Fn(u32) -> Vec<L>,
) -> Result<Vec<PlanarTree<L>>> {
    let shapes = enumerate_trees(n)?;
    let seqs = label_sequences(n - 1, max_weight, alphabet);
    let mut out = Vec::with_capacity(shapes.len() * seqs.len());
    for shape in &shapes {
        for seq in &seqs {
            out.push(PlanarTree::with_shape(shape, seq)?);
        }
    }
    Ok(out)
}

/// All weighted trees with `n` leaves and total weight at most `max_weight`,
/// in canonical order.
pub fn enumerate_weighted(n: usize, max_weight: u32) -> Result<Vec<WeightedTree>> {
    enumerate_labeled(n, max_weight, &|w| vec![w])
}

/// All diweighted trees with `n` leaves and total weight at most
/// `max_weight`, in canonical order.
pub fn enumerate_diweighted(n: usize, max_weight: u32) -> Result<Vec<DiweightedTree>> {
    enumerate_labeled(n, max_weight, &|w| {
        Side::BOTH.iter().map(|&s| DiWeight::new(w, s)).collect()
    })
}

impl<L: VertexLabel> fmt::Display for PlanarTree<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarTree::Leaf => f.write_str("i"),
            PlanarTree::Node(n) => {
                write!(f, "({} {} {})", n.left, n.label.op_token(), n.right)?;
                match n.label.weight() {
                    0 => Ok(()),
                    w => write!(f, "[{w}]"),
                }
            }
        }
    }
}

/// Character cursor shared by the tree and element parsers.
pub(crate) struct Cursor {
    chars: Vec<char>,
    pub(crate) pos: usize,
}

impl Cursor {
    pub(crate) fn new(src: &str) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected {c:?}")))
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    /// Reads a run of characters satisfying `pred` without skipping
    /// whitespace inside the run.
    pub(crate) fn take_while(&mut self, pred: impl Fn(char) -> bool) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|&c| pred(c)) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    pub(crate) fn parse_u32(&mut self) -> Result<u32> {
        let start = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        digits.parse().map_err(|_| Error::Parse {
            pos: start,
            msg: "expected a non-negative integer".into(),
        })
    }

    pub(crate) fn parse_tree<L: VertexLabel>(&mut self) -> Result<PlanarTree<L>> {
        match self.peek() {
            Some('i') => {
                self.pos += 1;
                Ok(PlanarTree::Leaf)
            }
            Some(open @ ('(' | '{')) => {
                self.pos += 1;
                let close = if open == '(' { ')' } else { '}' };
                let left = self.parse_tree::<L>()?;
                if self.eat(close) {
                    // redundant brackets around a complete tree
                    return Ok(left);
                }
                let op_pos = self.pos;
                let op = self.parse_op()?;
                let right = self.parse_tree::<L>()?;
                self.expect(close)?;
                let weight = if self.eat('[') {
                    let w = self.parse_u32()?;
                    self.expect(']')?;
                    Some(w)
                } else {
                    None
                };
                let label = L::from_parts(op, weight).map_err(|msg| Error::Parse {
                    pos: op_pos,
                    msg: msg.into(),
                })?;
                let tree = PlanarTree::join(left, right, label);
                Ok(tree)
            }
            Some(c) => Err(self.error(format!("unexpected character {c:?}"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn parse_op(&mut self) -> Result<OpToken> {
        match self.peek() {
            Some('v') | Some('∨') => {
                self.pos += 1;
                self.eat('_');
                Ok(match self.peek() {
                    Some('l') => {
                        self.pos += 1;
                        OpToken::Left
                    }
                    Some('r') => {
                        self.pos += 1;
                        OpToken::Right
                    }
                    _ => OpToken::Plain,
                })
            }
            _ => Err(self.error("expected an operator \"v\", \"vl\" or \"vr\"")),
        }
    }
}

impl<L: VertexLabel> FromStr for PlanarTree<L> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let tree = cur.parse_tree()?;
        if !cur.at_end() {
            return Err(cur.error("trailing input after tree"));
        }
        Ok(tree)
    }
}

/// A parsed tree of whichever kind the notation implies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyTree {
    Weighted(WeightedTree),
    Diweighted(DiweightedTree),
}

/// Parses either kind: `vl`/`vr` operators select a diweighted tree,
/// anything else a weighted tree (plain trees are weighted trees with all
/// weights zero).
pub fn parse_any(s: &str) -> Result<AnyTree> {
    match s.parse::<WeightedTree>() {
        Ok(t) => Ok(AnyTree::Weighted(t)),
        Err(weighted_err) => s
            .parse::<DiweightedTree>()
            .map(AnyTree::Diweighted)
            .map_err(|_| weighted_err),
    }
}
