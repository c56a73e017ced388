//! Brouwer trees: zero, successor, and limits of strictly increasing
//! sequences of naturals-indexed trees.
//!
//! Unlike the normal forms in [`crate::cnf`], order on Brouwer trees is not
//! decidable. Queries run under an explicit fuel budget and return a
//! three-valued [`Verdict`]; exhausting the budget yields `Unknown`, never a
//! wrong definite answer. Values may carry a CNF certificate recording their
//! provenance — certified pairs compare through the decidable CNF order,
//! which is the only source of positive answers for limit-versus-limit
//! queries. Equality of limits is exposed purely through refutation, see
//! [`bisim_refute`].

mod arith;
mod order;

pub use arith::{add, ctob, exp, mul, DEFAULT_SAMPLE_BUDGET};
pub use order::{bisim_refute, leq_fuel, lt_fuel, BisimVerdict};

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::cnf::{self, Cnf};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BrwError {
    #[error("sequence is not strictly increasing at index {0}")]
    NotIncreasing(u64),
    #[error("value is not finite")]
    NotFinite,
}

/// Outcome of a fuel-bounded query. Definite answers are sound; `Unknown`
/// only reports budget exhaustion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    DefTrue,
    DefFalse,
    Unknown,
}

impl Verdict {
    pub fn is_definite(self) -> bool {
        self != Verdict::Unknown
    }

    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::DefTrue
        } else {
            Verdict::DefFalse
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::DefTrue => "true",
            Verdict::DefFalse => "false",
            Verdict::Unknown => "unknown",
        })
    }
}

/// An indexed family of Brouwer trees with a human-readable tag. Evaluation
/// must be pure: the same index always yields the same value. Elements are
/// memoized behind a mutex; this is semantically invisible and keeps nested
/// limits from re-materialising their sequences on every query.
#[derive(Clone)]
pub struct BrwSeq {
    eval: Arc<dyn Fn(u64) -> Brw + Send + Sync>,
    memo: Arc<Mutex<HashMap<u64, Brw>>>,
    tag: Arc<str>,
    checked_up_to: Option<u64>,
}

impl BrwSeq {
    pub fn new(tag: impl Into<String>, eval: impl Fn(u64) -> Brw + Send + Sync + 'static) -> Self {
        BrwSeq {
            eval: Arc::new(eval),
            memo: Arc::new(Mutex::new(HashMap::new())),
            tag: tag.into().into(),
            checked_up_to: None,
        }
    }

    pub fn at(&self, n: u64) -> Brw {
        if let Some(v) = self.memo.lock().unwrap().get(&n) {
            return v.clone();
        }
        // computed outside the lock: evaluation is pure, so a racing
        // recomputation yields the same value
        let v = (self.eval)(n);
        self.memo.lock().unwrap().insert(n, v.clone());
        v
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    /// Largest index k for which f(k) < f(k+1) was confirmed at
    /// construction; `None` for sequences built without the tripwire.
    pub fn checked_up_to(&self) -> Option<u64> {
        self.checked_up_to
    }
}

impl fmt::Debug for BrwSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BrwSeq")
            .field("tag", &self.tag)
            .field("checked_up_to", &self.checked_up_to)
            .finish()
    }
}

#[derive(Debug, Clone)]
pub enum BrwKind {
    Zero,
    Succ(Brw),
    Limit(BrwSeq),
}

/// A Brouwer tree, immutable and cheaply shareable. `cert` records CNF
/// provenance: when present, the value denotes exactly that normal form.
#[derive(Clone)]
pub struct Brw(Arc<Inner>);

struct Inner {
    kind: BrwKind,
    cert: Option<Cnf>,
}

impl Brw {
    pub fn zero() -> Brw {
        Brw(Arc::new(Inner {
            kind: BrwKind::Zero,
            cert: Some(Cnf::zero()),
        }))
    }

    pub fn succ(x: &Brw) -> Brw {
        let cert = x.cert().map(|c| c.succ());
        Brw(Arc::new(Inner {
            kind: BrwKind::Succ(x.clone()),
            cert,
        }))
    }

    pub fn one() -> Brw {
        Brw::succ(&Brw::zero())
    }

    /// Embedding of the naturals as finite trees.
    pub fn iota(n: u64) -> Brw {
        let mut v = Brw::zero();
        for _ in 0..n {
            v = Brw::succ(&v);
        }
        v
    }

    /// omega = limit of the naturals.
    pub fn omega() -> Brw {
        let seq = BrwSeq::new("\u{3b9}", Brw::iota);
        Brw::mk_limit(seq, DEFAULT_SAMPLE_BUDGET)
            .expect("iota is increasing")
            .with_cert(Some(Cnf::omega()))
    }

    /// omega towers: tower(0) = 1, tower(k+1) = omega^tower(k).
    pub fn omega_tower(k: u64) -> Brw {
        let mut v = Brw::one();
        for _ in 0..k {
            v = exp(&Brw::omega(), &v);
        }
        v
    }

    /// epsilon_0 = limit of the omega towers. Never certified: it lies above
    /// every normal form.
    pub fn epsilon0() -> Brw {
        let seq = BrwSeq::new("k \u{21a6} \u{3c9}\u{2191}\u{2191}k", Brw::omega_tower);
        Brw::mk_limit(seq, 3).expect("omega towers are increasing")
    }

    /// Limit constructor. Samples indices 0..=budget and refuses the
    /// sequence if strict increase is refuted at any of them; passing the
    /// check is a tripwire, not a proof.
    pub fn mk_limit(f: BrwSeq, sample_budget: u64) -> Result<Brw, BrwError> {
        for k in 0..=sample_budget {
            let cur = f.at(k);
            let next = f.at(k + 1);
            if lt_fuel(&cur, &next, order::INCREASE_CHECK_FUEL) == Verdict::DefFalse {
                return Err(BrwError::NotIncreasing(k));
            }
        }
        let mut f = f;
        f.checked_up_to = Some(sample_budget);
        Ok(Brw(Arc::new(Inner {
            kind: BrwKind::Limit(f),
            cert: None,
        })))
    }

    /// Limit constructor without the increase tripwire. Used by the
    /// arithmetic operations, whose mapped sequences are strictly increasing
    /// by the monotonicity lemmas; sampling here would re-materialise every
    /// nested sequence and blow up exponentially in the nesting depth.
    pub(crate) fn limit_raw(f: BrwSeq) -> Brw {
        Brw(Arc::new(Inner {
            kind: BrwKind::Limit(f),
            cert: None,
        }))
    }

    pub fn kind(&self) -> &BrwKind {
        &self.0.kind
    }

    /// The stored certificate; never recomputed.
    pub fn cert(&self) -> Option<&Cnf> {
        self.0.cert.as_ref()
    }

    /// Alias for the certificate round-trip.
    pub fn reify_cnf(&self) -> Option<Cnf> {
        self.0.cert.clone()
    }

    pub(crate) fn with_cert(self, cert: Option<Cnf>) -> Brw {
        Brw(Arc::new(Inner {
            kind: self.0.kind.clone(),
            cert,
        }))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0.kind, BrwKind::Zero)
    }

    /// Stable identity of the shared node, used for query memoization.
    pub(crate) fn addr(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    /// Some(n) exactly when the value is the n-th successor of zero; any
    /// limit anywhere in the spine means the value is infinite.
    pub fn is_finite(&self) -> Option<u64> {
        let mut v = self;
        let mut n = 0;
        loop {
            match v.kind() {
                BrwKind::Zero => return Some(n),
                BrwKind::Succ(x) => {
                    n += 1;
                    v = x;
                }
                BrwKind::Limit(_) => return None,
            }
        }
    }

    /// Hereditarily removes certificates, leaving the bare structure.
    pub fn strip_cert(&self) -> Brw {
        let kind = match self.kind() {
            BrwKind::Zero => BrwKind::Zero,
            BrwKind::Succ(x) => BrwKind::Succ(x.strip_cert()),
            BrwKind::Limit(f) => {
                let inner = f.clone();
                BrwKind::Limit(BrwSeq {
                    eval: Arc::new(move |n| inner.at(n).strip_cert()),
                    memo: Arc::new(Mutex::new(HashMap::new())),
                    tag: f.tag.clone(),
                    checked_up_to: f.checked_up_to,
                })
            }
        };
        Brw(Arc::new(Inner { kind, cert: None }))
    }
}

impl fmt::Debug for Brw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            BrwKind::Zero => write!(f, "zero")?,
            BrwKind::Succ(x) => write!(f, "succ({x:?})")?,
            BrwKind::Limit(s) => write!(f, "limit[{}]", s.tag())?,
        }
        if let Some(c) = self.cert() {
            write!(f, "@{}", cnf::render(c, false))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_distinction() {
        assert!(Brw::zero().is_zero());
        assert!(!Brw::one().is_zero());
        assert!(!Brw::omega().is_zero());
        assert_eq!(Brw::iota(2).is_finite(), Some(2));
        assert_eq!(Brw::zero().is_finite(), Some(0));
        assert_eq!(Brw::omega().is_finite(), None);
        assert_eq!(Brw::succ(&Brw::omega()).is_finite(), None);
    }

    #[test]
    fn mk_limit_accepts_iota_and_towers() {
        let w = Brw::mk_limit(BrwSeq::new("\u{3b9}", Brw::iota), 8).unwrap();
        assert!(matches!(w.kind(), BrwKind::Limit(f) if f.checked_up_to() == Some(8)));
        let e0 = Brw::mk_limit(BrwSeq::new("towers", Brw::omega_tower), 3).unwrap();
        assert!(matches!(e0.kind(), BrwKind::Limit(_)));
        assert!(e0.cert().is_none());
    }

    #[test]
    fn mk_limit_refutes_constant_sequences() {
        let constant = BrwSeq::new("const 0", |_| Brw::zero());
        assert_eq!(
            Brw::mk_limit(constant, 1).unwrap_err(),
            BrwError::NotIncreasing(0)
        );
    }

    #[test]
    fn certificates_round_trip() {
        let w = Brw::omega();
        assert_eq!(w.reify_cnf(), Some(Cnf::omega()));
        assert_eq!(w.strip_cert().reify_cnf(), None);
        assert_eq!(Brw::iota(5).reify_cnf(), Some(Cnf::from_nat(5)));
        assert_eq!(Brw::epsilon0().reify_cnf(), None);
    }

    #[test]
    fn strip_cert_is_hereditary() {
        let w = Brw::omega().strip_cert();
        let BrwKind::Limit(f) = w.kind() else {
            panic!("omega is a limit")
        };
        assert!(f.at(3).cert().is_none());
        assert_eq!(f.at(3).is_finite(), Some(3));
    }
}
