//! Cantor normal forms as validated binary trees.
//!
//! A tree is a normal form when for every node `(s, t)` the left subtree of
//! `t` is at most `s` under the lexicographic tree order; such trees are in
//! bijection with the ordinals below epsilon_0. Everything here is decidable:
//! comparison, arithmetic, subtraction, division, and the
//! zero/successor/limit classification.

mod arith;
mod classify;
mod render;

pub use arith::{add, divmod, mul, omega_pow, sub};
pub use classify::{classify, fund_eval, CnfClass, FundamentalSeq};
pub use render::{render, terms};

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CnfError {
    #[error("tree violates the Cantor-normal-form condition")]
    NotNormal,
    #[error("subtraction requires the left operand to be at most the right operand")]
    SubtractionUnderflow,
    #[error("division by zero")]
    DivisionByZero,
    #[error("value is not a limit")]
    NotALimit,
}

/// Unlabeled binary tree, the raw carrier underneath [`Cnf`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CnfTree {
    Leaf,
    Node(Box<CnfTree>, Box<CnfTree>),
}

impl CnfTree {
    /// Left subtree; the leaf is its own left subtree.
    pub fn left(&self) -> &CnfTree {
        match self {
            CnfTree::Leaf => self,
            CnfTree::Node(l, _) => l,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, CnfTree::Leaf)
    }
}

/// The lexicographic order: leaf below every node, then left subtree first.
impl Ord for CnfTree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (CnfTree::Leaf, CnfTree::Leaf) => Ordering::Equal,
            (CnfTree::Leaf, CnfTree::Node(..)) => Ordering::Less,
            (CnfTree::Node(..), CnfTree::Leaf) => Ordering::Greater,
            (CnfTree::Node(a, b), CnfTree::Node(c, d)) => a.cmp(c).then_with(|| b.cmp(d)),
        }
    }
}

impl PartialOrd for CnfTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The normal-form predicate, checked at every node.
pub fn is_cnf(t: &CnfTree) -> bool {
    match t {
        CnfTree::Leaf => true,
        CnfTree::Node(s, u) => is_cnf(s) && is_cnf(u) && u.left() <= s,
    }
}

/// A validated Cantor normal form. Values can only be built through the
/// checked constructors or the arithmetic operations, so the normal-form
/// invariant holds everywhere by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cnf(CnfTree);

impl Cnf {
    pub fn zero() -> Cnf {
        Cnf(CnfTree::Leaf)
    }

    pub fn one() -> Cnf {
        Cnf::from_nat(1)
    }

    /// omega = the first infinite ordinal, the tree `(1, 0)`.
    pub fn omega() -> Cnf {
        Cnf(CnfTree::Node(
            Box::new(nat_tree(1)),
            Box::new(CnfTree::Leaf),
        ))
    }

    /// Order embedding of the naturals: n is a right spine of n nodes.
    pub fn from_nat(n: u64) -> Cnf {
        Cnf(nat_tree(n))
    }

    /// Validates an arbitrary tree.
    pub fn from_tree(t: CnfTree) -> Result<Cnf, CnfError> {
        if is_cnf(&t) {
            Ok(Cnf(t))
        } else {
            Err(CnfError::NotNormal)
        }
    }

    /// Builds the node `(a, b)` = omega^a + b. Both subtrees are already
    /// validated, so only the root condition left(b) <= a needs checking.
    pub fn node(a: Cnf, b: Cnf) -> Result<Cnf, CnfError> {
        if b.0.left() <= &a.0 {
            Ok(Cnf(CnfTree::Node(Box::new(a.0), Box::new(b.0))))
        } else {
            Err(CnfError::NotNormal)
        }
    }

    /// Wraps a tree that is known to satisfy the invariant (arithmetic
    /// results). Verified in debug builds.
    pub(crate) fn from_tree_unchecked(t: CnfTree) -> Cnf {
        debug_assert!(is_cnf(&t), "arithmetic produced a non-normal tree");
        Cnf(t)
    }

    pub fn tree(&self) -> &CnfTree {
        &self.0
    }

    pub fn left(&self) -> &CnfTree {
        self.0.left()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_leaf()
    }

    /// Some(n) exactly when the value is the natural number n.
    pub fn as_nat(&self) -> Option<u64> {
        let mut t = &self.0;
        let mut n = 0;
        while let CnfTree::Node(l, r) = t {
            if !l.is_leaf() {
                return None;
            }
            n += 1;
            t = r;
        }
        Some(n)
    }

    pub fn succ(&self) -> Cnf {
        add(self, &Cnf::one())
    }
}

/// Total order on normal forms, inherited from the tree order.
pub fn compare(a: &Cnf, b: &Cnf) -> Ordering {
    a.0.cmp(&b.0)
}

impl Ord for Cnf {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self, other)
    }
}

impl PartialOrd for Cnf {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, false))
    }
}

fn nat_tree(n: u64) -> CnfTree {
    let mut t = CnfTree::Leaf;
    for _ in 0..n {
        t = CnfTree::Node(Box::new(CnfTree::Leaf), Box::new(t));
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf() -> CnfTree {
        CnfTree::Leaf
    }

    fn node(a: CnfTree, b: CnfTree) -> CnfTree {
        CnfTree::Node(Box::new(a), Box::new(b))
    }

    #[test]
    fn left_projects() {
        assert_eq!(leaf().left(), &leaf());
        assert_eq!(node(leaf(), leaf()).left(), &leaf());
        assert_eq!(
            node(node(leaf(), leaf()), leaf()).left(),
            &node(leaf(), leaf())
        );
    }

    #[test]
    fn is_cnf_examples() {
        assert!(is_cnf(&leaf()));
        // (0, 1): left(1) = 0 <= 0
        assert!(is_cnf(&node(leaf(), node(leaf(), leaf()))));
        // (0, omega): left(omega) = 1 > 0
        assert!(!is_cnf(&node(
            leaf(),
            node(node(leaf(), leaf()), leaf())
        )));
    }

    #[test]
    fn compare_generating_rules() {
        let zero = Cnf::zero();
        let one = Cnf::one();
        let omega = Cnf::omega();
        assert_eq!(compare(&zero, &one), Ordering::Less);
        assert_eq!(compare(&omega, &omega), Ordering::Equal);
        // (1, 0) < (1, 1): right subtrees decide when lefts agree
        let w = Cnf::omega();
        let w1 = Cnf::node(Cnf::one(), Cnf::one()).unwrap();
        assert_eq!(compare(&w, &w1), Ordering::Less);
        // left subtrees decide first
        let w2 = Cnf::node(Cnf::from_nat(2), Cnf::zero()).unwrap();
        assert_eq!(compare(&w1, &w2), Ordering::Less);
    }

    #[test]
    fn node_checks_root_condition() {
        // (0, omega) breaks left(omega) = 1 <= 0
        assert!(Cnf::node(Cnf::zero(), Cnf::omega()).is_err());
        // (1, omega) = omega + omega is fine: left(omega) = 1 <= 1
        assert!(Cnf::node(Cnf::one(), Cnf::omega()).is_ok());
        assert!(Cnf::node(Cnf::one(), Cnf::from_nat(3)).is_ok());
    }

    #[test]
    fn from_nat_shapes() {
        assert_eq!(Cnf::from_nat(0), Cnf::zero());
        assert_eq!(
            Cnf::from_nat(2).tree(),
            &node(leaf(), node(leaf(), leaf()))
        );
        assert_eq!(Cnf::from_nat(7).as_nat(), Some(7));
        assert_eq!(Cnf::omega().as_nat(), None);
    }
}
