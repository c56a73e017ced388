//! Arithmetic on Cantor normal forms: addition, multiplication, base-omega
//! exponentiation, and the exact inverses (subtraction and division).

use std::cmp::Ordering;

use super::{compare, Cnf, CnfError, CnfTree};

/// Ordinal addition by the four-clause recursion on trees.
pub fn add(a: &Cnf, b: &Cnf) -> Cnf {
    Cnf::from_tree_unchecked(add_tree(a.tree(), b.tree()))
}

/// Ordinal multiplication by the four-clause recursion on trees.
pub fn mul(a: &Cnf, b: &Cnf) -> Cnf {
    Cnf::from_tree_unchecked(mul_tree(a.tree(), b.tree()))
}

/// omega^a, the tree `(a, 0)`. Always a valid normal form.
pub fn omega_pow(a: &Cnf) -> Cnf {
    Cnf::from_tree_unchecked(CnfTree::Node(
        Box::new(a.tree().clone()),
        Box::new(CnfTree::Leaf),
    ))
}

/// Left subtraction: the unique c with a + c = b, defined when a <= b.
pub fn sub(a: &Cnf, b: &Cnf) -> Result<Cnf, CnfError> {
    if compare(a, b) == Ordering::Greater {
        return Err(CnfError::SubtractionUnderflow);
    }
    Ok(Cnf::from_tree_unchecked(sub_tree(a.tree(), b.tree())))
}

/// Division with remainder: (c, d) with b*c + d = a and d < b, for b > 0.
pub fn divmod(a: &Cnf, b: &Cnf) -> Result<(Cnf, Cnf), CnfError> {
    if b.is_zero() {
        return Err(CnfError::DivisionByZero);
    }
    let (q, r) = divmod_tree(a.tree(), b.tree());
    Ok((Cnf::from_tree_unchecked(q), Cnf::from_tree_unchecked(r)))
}

fn add_tree(a: &CnfTree, b: &CnfTree) -> CnfTree {
    match (a, b) {
        (CnfTree::Leaf, _) => b.clone(),
        (_, CnfTree::Leaf) => a.clone(),
        (CnfTree::Node(a1, a2), CnfTree::Node(b1, _)) => {
            if a1 < b1 {
                b.clone()
            } else {
                CnfTree::Node(a1.clone(), Box::new(add_tree(a2, b)))
            }
        }
    }
}

fn mul_tree(a: &CnfTree, b: &CnfTree) -> CnfTree {
    match (a, b) {
        (CnfTree::Leaf, _) | (_, CnfTree::Leaf) => CnfTree::Leaf,
        (CnfTree::Node(a1, _), CnfTree::Node(b1, b2)) => {
            if b1.is_leaf() {
                // a * (1 + d) = a + a*d
                add_tree(a, &mul_tree(a, b2))
            } else {
                // a * (omega^b1 + d) = omega^(a1 + b1) + a*d
                let head = CnfTree::Node(Box::new(add_tree(a1, b1)), Box::new(CnfTree::Leaf));
                add_tree(&head, &mul_tree(a, b2))
            }
        }
    }
}

/// c with a + c = b; precondition a <= b is the caller's.
fn sub_tree(a: &CnfTree, b: &CnfTree) -> CnfTree {
    if a == b {
        return CnfTree::Leaf;
    }
    match (a, b) {
        (CnfTree::Leaf, _) => b.clone(),
        (CnfTree::Node(a1, a2), CnfTree::Node(b1, b2)) => {
            if a1 < b1 {
                // a is absorbed: a + b = b
                b.clone()
            } else {
                // a1 = b1 since a < b, so peel the common leading term
                sub_tree(a2, b2)
            }
        }
        (CnfTree::Node(..), CnfTree::Leaf) => unreachable!("subtraction precondition violated"),
    }
}

/// (q, r) with b*q + r = a and r < b; precondition b > 0. Each recursive
/// call shrinks the dividend to a suffix of its own right spine.
fn divmod_tree(a: &CnfTree, b: &CnfTree) -> (CnfTree, CnfTree) {
    if a < b {
        return (CnfTree::Leaf, a.clone());
    }
    let (CnfTree::Node(a1, a2), CnfTree::Node(b1, _)) = (a, b) else {
        unreachable!("a >= b > 0 means both are nodes")
    };
    if a1 > b1 {
        // b * omega^e = omega^a1 where b1 + e = a1, so a = b*omega^e + a2
        let e = sub_tree(b1, a1);
        let pow = CnfTree::Node(Box::new(e), Box::new(CnfTree::Leaf));
        let (q, r) = divmod_tree(a2, b);
        (add_tree(&pow, &q), r)
    } else {
        // equal leading exponents: a = b + s with s inside a's right spine
        let s = sub_tree(b, a);
        let (q, r) = divmod_tree(&s, b);
        let one = CnfTree::Node(Box::new(CnfTree::Leaf), Box::new(CnfTree::Leaf));
        (add_tree(&one, &q), r)
    }
}
