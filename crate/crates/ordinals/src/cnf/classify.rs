//! Zero / successor / limit classification and fundamental sequences.

use super::arith::{mul, omega_pow};
use super::{Cnf, CnfError, CnfTree};

/// Classification of a normal form. The three cases are mutually exclusive:
/// a node `(a, b)` is a successor exactly when `a = 0` or `b` is a successor,
/// and everything that is neither zero nor a successor is a limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CnfClass {
    Zero,
    /// Carries the predecessor: `pred + 1` equals the classified value.
    Successor(Cnf),
    /// Carries a fundamental sequence for the classified limit.
    Limit(FundamentalSeq),
}

/// A fundamental sequence: strictly increasing, pointwise below its limit,
/// and cofinal in it. Evaluated on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalSeq {
    value: Cnf,
}

impl FundamentalSeq {
    pub fn value(&self) -> &Cnf {
        &self.value
    }

    pub fn at(&self, n: u64) -> Cnf {
        Cnf::from_tree_unchecked(fund_tree(self.value.tree(), n))
    }
}

pub fn classify(a: &Cnf) -> CnfClass {
    if a.is_zero() {
        return CnfClass::Zero;
    }
    match pred_tree(a.tree()) {
        Some(p) => CnfClass::Successor(Cnf::from_tree_unchecked(p)),
        None => CnfClass::Limit(FundamentalSeq { value: a.clone() }),
    }
}

/// n-th element of the fundamental sequence of a limit.
pub fn fund_eval(a: &Cnf, n: u64) -> Result<Cnf, CnfError> {
    match classify(a) {
        CnfClass::Limit(f) => Ok(f.at(n)),
        _ => Err(CnfError::NotALimit),
    }
}

/// Some(p) exactly when t = p + 1: a node `(a, b)` with `a = 0` is `b + 1`,
/// and `(a, b)` with `b` a successor of `p` is `(a, p) + 1`.
fn pred_tree(t: &CnfTree) -> Option<CnfTree> {
    match t {
        CnfTree::Leaf => None,
        CnfTree::Node(a, b) => {
            if a.is_leaf() {
                Some((**b).clone())
            } else {
                let p = pred_tree(b)?;
                Some(CnfTree::Node(a.clone(), Box::new(p)))
            }
        }
    }
}

/// Wainer-style assignment. For `(a, b)` with `b` a limit the sequence runs
/// inside `b`; for omega^(p+1) it is omega^p * n; for omega^a with `a` a
/// limit it is omega^(fund(a, n)). Precondition: `t` is a limit.
fn fund_tree(t: &CnfTree, n: u64) -> CnfTree {
    let CnfTree::Node(a, b) = t else {
        unreachable!("zero is not a limit")
    };
    if !b.is_leaf() {
        // b must itself be a limit, otherwise t would be a successor
        debug_assert!(pred_tree(b).is_none());
        return CnfTree::Node(a.clone(), Box::new(fund_tree(b, n)));
    }
    // t = omega^a with a != 0
    match pred_tree(a) {
        Some(p) => {
            let pow = omega_pow(&Cnf::from_tree_unchecked(p));
            mul(&pow, &Cnf::from_nat(n)).tree().clone()
        }
        None => CnfTree::Node(Box::new(fund_tree(a, n)), Box::new(CnfTree::Leaf)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::{add, compare};
    use std::cmp::Ordering;

    fn w() -> Cnf {
        Cnf::omega()
    }

    fn n(k: u64) -> Cnf {
        Cnf::from_nat(k)
    }

    #[test]
    fn classify_cases() {
        assert_eq!(classify(&Cnf::zero()), CnfClass::Zero);
        // omega + 1 is the successor of omega
        let w1 = add(&w(), &n(1));
        match classify(&w1) {
            CnfClass::Successor(p) => {
                assert_eq!(p, w());
                assert_eq!(add(&p, &n(1)), w1);
            }
            other => panic!("expected successor, got {other:?}"),
        }
        // omega is a limit with fund(n) = n
        match classify(&w()) {
            CnfClass::Limit(f) => {
                assert_eq!(f.at(0), n(0));
                assert_eq!(f.at(3), n(3));
            }
            other => panic!("expected limit, got {other:?}"),
        }
    }

    #[test]
    fn successors_recompose() {
        for v in [n(1), n(5), add(&w(), &n(3)), add(&mul(&w(), &w()), &n(1))] {
            match classify(&v) {
                CnfClass::Successor(p) => assert_eq!(add(&p, &n(1)), v),
                other => panic!("{v}: expected successor, got {other:?}"),
            }
        }
    }

    #[test]
    fn fund_examples() {
        // fund(omega, 3) = 3
        assert_eq!(fund_eval(&w(), 3).unwrap(), n(3));
        // fund(omega^omega, 2) = omega^2
        let ww = omega_pow(&w());
        assert_eq!(fund_eval(&ww, 2).unwrap(), omega_pow(&n(2)));
        // fund(omega*2, 4) = omega + 4
        let w2 = mul(&w(), &n(2));
        assert_eq!(fund_eval(&w2, 4).unwrap(), add(&w(), &n(4)));
        // not a limit
        assert_eq!(fund_eval(&n(3), 0), Err(CnfError::NotALimit));
        assert_eq!(fund_eval(&Cnf::zero(), 0), Err(CnfError::NotALimit));
    }

    #[test]
    fn fund_increasing_and_bounded() {
        let limits = [
            w(),
            mul(&w(), &n(3)),
            omega_pow(&w()),
            omega_pow(&add(&w(), &n(1))),
            mul(&omega_pow(&n(2)), &n(2)),
        ];
        for a in &limits {
            let CnfClass::Limit(f) = classify(a) else {
                panic!("{a} should be a limit")
            };
            let mut prev = f.at(0);
            assert_eq!(compare(&prev, a), Ordering::Less);
            for i in 1..8 {
                let cur = f.at(i);
                assert_eq!(compare(&prev, &cur), Ordering::Less, "{a} at {i}");
                assert_eq!(compare(&cur, a), Ordering::Less, "{a} at {i}");
                prev = cur;
            }
        }
    }
}
