//! Arithmetic on Brouwer trees by recursion on the second argument, and the
//! embedding of Cantor normal forms.
//!
//! Limit cases map the operation over the sequence and rebuild through
//! `mk_limit`; multiplication and exponentiation first split on the
//! decidable shape of the base so that the mapped sequence stays strictly
//! increasing. Certificates propagate whenever both inputs carry them (for
//! exponentiation with a limit exponent, when the base is the certified
//! omega), so certified arithmetic mirrors the CNF operations exactly.

use super::{Brw, BrwKind, BrwSeq};
use crate::cnf::{self, Cnf};

/// Default sample budget for the strict-increase tripwire in
/// [`Brw::mk_limit`]. Arithmetic skips the tripwire altogether: its mapped
/// sequences are strictly increasing by the monotonicity lemmas, and eager
/// sampling would re-materialise every nested sequence, which costs
/// exponential work in the nesting depth.
pub const DEFAULT_SAMPLE_BUDGET: u64 = 8;

pub fn add(x: &Brw, y: &Brw) -> Brw {
    match y.kind() {
        BrwKind::Zero => x.clone(),
        BrwKind::Succ(b) => Brw::succ(&add(x, b)),
        BrwKind::Limit(g) => {
            let xs = x.clone();
            let gs = g.clone();
            let seq = BrwSeq::new(format!("k \u{21a6} x + [{}](k)", g.tag()), move |k| {
                add(&xs, &gs.at(k))
            });
            Brw::limit_raw(seq).with_cert(binary_cert(x, y, cnf::add))
        }
    }
}

pub fn mul(x: &Brw, y: &Brw) -> Brw {
    match y.kind() {
        BrwKind::Zero => Brw::zero(),
        BrwKind::Succ(b) => add(&mul(x, b), x),
        BrwKind::Limit(g) => {
            // a sequence multiplied by zero collapses; otherwise x >= 1 and
            // the mapped sequence is strictly increasing
            if x.is_zero() {
                return Brw::zero();
            }
            let xs = x.clone();
            let gs = g.clone();
            let seq = BrwSeq::new(format!("k \u{21a6} x\u{b7}[{}](k)", g.tag()), move |k| {
                mul(&xs, &gs.at(k))
            });
            Brw::limit_raw(seq).with_cert(binary_cert(x, y, cnf::mul))
        }
    }
}

pub fn exp(x: &Brw, y: &Brw) -> Brw {
    match y.kind() {
        BrwKind::Zero => Brw::one(),
        BrwKind::Succ(b) => mul(&exp(x, b), x),
        BrwKind::Limit(g) => {
            if x.is_zero() {
                return Brw::zero();
            }
            if x.is_finite() == Some(1) {
                // the mapped sequence would be constantly one
                return Brw::one();
            }
            let xs = x.clone();
            let gs = g.clone();
            let seq = BrwSeq::new(format!("k \u{21a6} x^[{}](k)", g.tag()), move |k| {
                exp(&xs, &gs.at(k))
            });
            let v = Brw::limit_raw(seq);
            let cert = match (x.cert(), y.cert()) {
                (Some(cx), Some(cy)) if *cx == Cnf::omega() => Some(cnf::omega_pow(cy)),
                _ => None,
            };
            v.with_cert(cert)
        }
    }
}

/// Embeds a normal form: zero goes to zero and (a, b) to omega^a + b. The
/// result carries the input as its certificate.
pub fn ctob(a: &Cnf) -> Brw {
    let v = ctob_tree(a.tree());
    debug_assert_eq!(v.cert(), Some(a), "embedding must certify its input");
    v
}

fn ctob_tree(t: &cnf::CnfTree) -> Brw {
    match t {
        cnf::CnfTree::Leaf => Brw::zero(),
        cnf::CnfTree::Node(l, r) => {
            let le = Cnf::from_tree_unchecked((**l).clone());
            let head = exp(&Brw::omega(), &ctob(&le));
            add(&head, &ctob_tree(r))
        }
    }
}

fn binary_cert(x: &Brw, y: &Brw, op: fn(&Cnf, &Cnf) -> Cnf) -> Option<Cnf> {
    match (x.cert(), y.cert()) {
        (Some(a), Some(b)) => Some(op(a, b)),
        _ => None,
    }
}
