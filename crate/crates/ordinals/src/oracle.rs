//! Independent exponent-list model of the ordinals below omega^omega.
//!
//! An ordinal below omega^omega is a finite sum of omega-powers with natural
//! exponents; we store the exponents as a descending list, one entry per
//! summand (so omega^2*2 + 3 is `[2, 2, 0, 0, 0]`). Addition, multiplication
//! and comparison are the textbook list operations. Nothing here touches the
//! tree representation in [`crate::cnf`] except the two conversion functions,
//! which only read and build raw trees — they never call tree arithmetic.
//! This keeps the module usable as ground truth in differential tests.

use std::cmp::Ordering;

use crate::cnf::{Cnf, CnfTree};

/// Ordinal below omega^omega as a descending list of natural exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpList(Vec<u64>);

impl ExpList {
    pub fn zero() -> Self {
        ExpList(Vec::new())
    }

    /// Builds from exponents in any order; sorts descending.
    pub fn from_exponents(mut exps: Vec<u64>) -> Self {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        ExpList(exps)
    }

    pub fn from_nat(n: u64) -> Self {
        ExpList(vec![0; n as usize])
    }

    pub fn exponents(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

/// Lexicographic comparison of descending exponent lists; a proper prefix is
/// smaller (omega^2 < omega^2 + 1).
pub fn cmp(a: &ExpList, b: &ExpList) -> Ordering {
    for (x, y) in a.0.iter().zip(b.0.iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.0.len().cmp(&b.0.len())
}

/// Textbook addition: terms of the left operand strictly below the leading
/// exponent of the right operand are absorbed.
pub fn add(a: &ExpList, b: &ExpList) -> ExpList {
    match b.0.first() {
        None => a.clone(),
        Some(&lead) => {
            let mut out: Vec<u64> = a.0.iter().copied().filter(|&e| e >= lead).collect();
            out.extend_from_slice(&b.0);
            ExpList(out)
        }
    }
}

/// Textbook multiplication, term by term on the right: for a nonzero left
/// operand, a * omega^e = omega^(a0 + e) when e > 0 and a * omega^0 = a,
/// summed left to right over the terms of `b`.
pub fn mul(a: &ExpList, b: &ExpList) -> ExpList {
    if a.is_zero() || b.is_zero() {
        return ExpList::zero();
    }
    let a0 = a.0[0];
    let mut acc = ExpList::zero();
    for &e in &b.0 {
        let term = if e == 0 {
            a.clone()
        } else {
            ExpList(vec![a0 + e])
        };
        acc = add(&acc, &term);
    }
    acc
}

/// Reads a CNF tree below omega^omega into an exponent list. Returns `None`
/// if some exponent is itself infinite (the value is >= omega^omega).
pub fn from_cnf(a: &Cnf) -> Option<ExpList> {
    let mut exps = Vec::new();
    let mut t = a.tree();
    while let CnfTree::Node(l, r) = t {
        exps.push(nat_of_tree(l)?);
        t = r;
    }
    Some(ExpList(exps))
}

/// Builds the CNF tree for an exponent list directly (right spine of
/// omega-powers) and validates it; no tree arithmetic involved.
pub fn to_cnf(a: &ExpList) -> Cnf {
    let mut t = CnfTree::Leaf;
    for &e in a.0.iter().rev() {
        t = CnfTree::Node(Box::new(nat_tree(e)), Box::new(t));
    }
    Cnf::from_tree(t).expect("descending exponent lists are valid CNFs")
}

fn nat_tree(n: u64) -> CnfTree {
    let mut t = CnfTree::Leaf;
    for _ in 0..n {
        t = CnfTree::Node(Box::new(CnfTree::Leaf), Box::new(t));
    }
    t
}

fn nat_of_tree(mut t: &CnfTree) -> Option<u64> {
    let mut n = 0;
    while let CnfTree::Node(l, r) = t {
        if !matches!(**l, CnfTree::Leaf) {
            return None;
        }
        n += 1;
        t = r;
    }
    Some(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u64) -> ExpList {
        ExpList::from_nat(n)
    }

    fn omega() -> ExpList {
        ExpList(vec![1])
    }

    #[test]
    fn addition_absorbs_smaller_terms() {
        // 1 + omega = omega
        assert_eq!(add(&nat(1), &omega()), omega());
        // omega + 1 = [1, 0]
        assert_eq!(add(&omega(), &nat(1)), ExpList(vec![1, 0]));
        // (omega^2 + omega + 1) + omega = omega^2 + omega*2
        let a = ExpList(vec![2, 1, 0]);
        assert_eq!(add(&a, &omega()), ExpList(vec![2, 1, 1]));
    }

    #[test]
    fn multiplication_textbook_cases() {
        // omega * 2 = omega + omega
        assert_eq!(mul(&omega(), &nat(2)), ExpList(vec![1, 1]));
        // 2 * omega = omega
        assert_eq!(mul(&nat(2), &omega()), omega());
        // (omega + 1) * omega = omega^2
        assert_eq!(mul(&ExpList(vec![1, 0]), &omega()), ExpList(vec![2]));
        // (omega + 1) * 2 = omega*2 + 1
        assert_eq!(mul(&ExpList(vec![1, 0]), &nat(2)), ExpList(vec![1, 1, 0]));
        // omega^2 * omega = omega^3
        assert_eq!(mul(&ExpList(vec![2]), &omega()), ExpList(vec![3]));
    }

    #[test]
    fn comparison_is_lexicographic_with_prefix_rule() {
        assert_eq!(cmp(&nat(0), &nat(1)), Ordering::Less);
        assert_eq!(cmp(&omega(), &omega()), Ordering::Equal);
        assert_eq!(cmp(&ExpList(vec![2]), &ExpList(vec![2, 0])), Ordering::Less);
        assert_eq!(cmp(&ExpList(vec![2, 1]), &ExpList(vec![2, 0])), Ordering::Greater);
        assert_eq!(cmp(&omega(), &nat(17)), Ordering::Greater);
    }

    #[test]
    fn cnf_round_trip() {
        for exps in [vec![], vec![0], vec![2, 1, 1, 0], vec![5, 5, 3, 0, 0]] {
            let e = ExpList(exps);
            let c = to_cnf(&e);
            assert_eq!(from_cnf(&c), Some(e));
        }
    }
}
