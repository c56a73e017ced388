//! The three shipped instances: normal forms (fully decidable), certified
//! Brouwer trees (decided through certificates), and finite extensional
//! wellfounded orders up to a size cap (decided by exhaustive simulation
//! search).

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{AxClass, Family, OrdinalInstance};
use crate::brouwer::{self, Brw, BrwKind, Verdict};
use crate::cnf::{self, Cnf, CnfClass, CnfTree};
use crate::ewo::{self, FiniteOrder};
use crate::sample::CnfSampler;

#[derive(Debug, Clone, Default)]
pub struct CnfInstance {
    pub sampler: CnfSampler,
}

impl OrdinalInstance for CnfInstance {
    type Elem = Cnf;

    fn name(&self) -> &'static str {
        "cnf"
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Cnf {
        self.sampler.sample(rng)
    }

    fn describe(&self, e: &Cnf) -> String {
        cnf::render(e, false)
    }

    fn lt(&self, a: &Cnf, b: &Cnf) -> Verdict {
        Verdict::from_bool(a < b)
    }

    fn leq(&self, a: &Cnf, b: &Cnf) -> Verdict {
        Verdict::from_bool(a <= b)
    }

    fn eq(&self, a: &Cnf, b: &Cnf) -> Verdict {
        Verdict::from_bool(a == b)
    }

    fn zero(&self) -> Option<Cnf> {
        Some(Cnf::zero())
    }

    fn succ(&self, a: &Cnf) -> Option<Cnf> {
        Some(a.succ())
    }

    fn family(&self, rng: &mut ChaCha8Rng) -> Option<Family<Cnf>> {
        let limit = self.sampler.sample_limit(rng);
        let CnfClass::Limit(f) = cnf::classify(&limit) else {
            unreachable!("sample_limit returns limits")
        };
        let tag = format!("fund({})", cnf::render(&limit, false));
        Some(Family {
            at: Box::new(move |i| f.at(i)),
            sup: limit,
            tag,
        })
    }

    fn add(&self, a: &Cnf, b: &Cnf) -> Option<Cnf> {
        Some(cnf::add(a, b))
    }

    /// Independent second route: merge the term decompositions directly.
    fn alt_add(&self, a: &Cnf, b: &Cnf) -> Option<Cnf> {
        Some(term_merge_add(a, b))
    }

    fn mul(&self, a: &Cnf, b: &Cnf) -> Option<Cnf> {
        Some(cnf::mul(a, b))
    }

    fn exp_base(&self) -> Option<Cnf> {
        Some(Cnf::omega())
    }

    fn exp(&self, base: &Cnf, e: &Cnf) -> Option<Cnf> {
        if *base == Cnf::omega() {
            Some(cnf::omega_pow(e))
        } else {
            None
        }
    }

    fn classify(&self, a: &Cnf) -> Option<AxClass<Cnf>> {
        Some(match cnf::classify(a) {
            CnfClass::Zero => AxClass::Zero,
            CnfClass::Successor(p) => AxClass::Successor(p),
            CnfClass::Limit(f) => AxClass::Limit(Box::new(move |i| f.at(i))),
        })
    }
}

/// Addition by merging term lists: terms of the left operand strictly below
/// the right operand's leading exponent are absorbed, equal leading
/// exponents merge coefficients. Built from the decomposition only, so it
/// shares no code with the tree recursion it double-checks.
fn term_merge_add(a: &Cnf, b: &Cnf) -> Cnf {
    let bt = cnf::terms(b);
    let Some((lead, _)) = bt.first() else {
        return a.clone();
    };
    let mut merged: Vec<(Cnf, u64)> = cnf::terms(a)
        .into_iter()
        .filter(|(e, _)| e >= lead)
        .collect();
    for (e, k) in bt {
        match merged.last_mut() {
            Some((le, lk)) if *le == e => *lk += k,
            _ => merged.push((e, k)),
        }
    }
    let mut tree = CnfTree::Leaf;
    for (e, k) in merged.iter().rev() {
        for _ in 0..*k {
            tree = CnfTree::Node(Box::new(e.tree().clone()), Box::new(tree));
        }
    }
    Cnf::from_tree(tree).expect("merged descending terms are normal")
}

/// Brouwer trees sampled as embedded normal forms, so every sample carries
/// a certificate and the order queries come back definite.
#[derive(Debug, Clone)]
pub struct BrwInstance {
    pub sampler: CnfSampler,
    pub fuel: u32,
}

impl Default for BrwInstance {
    fn default() -> Self {
        BrwInstance {
            sampler: CnfSampler::default(),
            fuel: 8,
        }
    }
}

impl OrdinalInstance for BrwInstance {
    type Elem = Brw;

    fn name(&self) -> &'static str {
        "brw"
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Brw {
        brouwer::ctob(&self.sampler.sample(rng))
    }

    fn describe(&self, e: &Brw) -> String {
        match e.cert() {
            Some(c) => format!("ctob({})", cnf::render(c, false)),
            None => format!("{e:?}"),
        }
    }

    fn lt(&self, a: &Brw, b: &Brw) -> Verdict {
        brouwer::lt_fuel(a, b, self.fuel)
    }

    fn leq(&self, a: &Brw, b: &Brw) -> Verdict {
        brouwer::leq_fuel(a, b, self.fuel)
    }

    /// Equality through certificates; uncertified values stay unknown and
    /// are thereby excluded from equality-dependent checks.
    fn eq(&self, a: &Brw, b: &Brw) -> Verdict {
        match (a.cert(), b.cert()) {
            (Some(ca), Some(cb)) => Verdict::from_bool(ca == cb),
            _ => Verdict::Unknown,
        }
    }

    fn zero(&self) -> Option<Brw> {
        Some(Brw::zero())
    }

    fn succ(&self, a: &Brw) -> Option<Brw> {
        Some(Brw::succ(a))
    }

    fn family(&self, rng: &mut ChaCha8Rng) -> Option<Family<Brw>> {
        let base = self.sample(rng);
        let tag = format!("{} + \u{3b9}", self.describe(&base));
        let at_base = base.clone();
        Some(Family {
            at: Box::new(move |i| brouwer::add(&at_base, &Brw::iota(i))),
            sup: brouwer::add(&base, &Brw::omega()),
            tag,
        })
    }

    fn add(&self, a: &Brw, b: &Brw) -> Option<Brw> {
        Some(brouwer::add(a, b))
    }

    fn mul(&self, a: &Brw, b: &Brw) -> Option<Brw> {
        Some(brouwer::mul(a, b))
    }

    fn exp_base(&self) -> Option<Brw> {
        Some(Brw::omega())
    }

    fn exp(&self, base: &Brw, e: &Brw) -> Option<Brw> {
        Some(brouwer::exp(base, e))
    }

    fn classify(&self, a: &Brw) -> Option<AxClass<Brw>> {
        Some(match a.kind() {
            BrwKind::Zero => AxClass::Zero,
            BrwKind::Succ(p) => AxClass::Successor(p.clone()),
            BrwKind::Limit(f) => {
                let f = f.clone();
                AxClass::Limit(Box::new(move |i| f.at(i)))
            }
        })
    }
}

/// Finite extensional wellfounded orders up to a size cap, compared by
/// simulation search. Validated orders are linear, so up to isomorphism the
/// carrier is the chains.
#[derive(Debug, Clone)]
pub struct EwoInstance {
    pub max_size: usize,
}

impl Default for EwoInstance {
    fn default() -> Self {
        EwoInstance { max_size: 4 }
    }
}

impl OrdinalInstance for EwoInstance {
    type Elem = FiniteOrder;

    fn name(&self) -> &'static str {
        "ewo"
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> FiniteOrder {
        FiniteOrder::chain(rng.gen_range(0..=self.max_size))
    }

    fn describe(&self, e: &FiniteOrder) -> String {
        format!("order(size {})", e.size())
    }

    fn lt(&self, a: &FiniteOrder, b: &FiniteOrder) -> Verdict {
        Verdict::from_bool(ewo::find_bounded_simulation(a, b).is_some())
    }

    fn leq(&self, a: &FiniteOrder, b: &FiniteOrder) -> Verdict {
        Verdict::from_bool(!ewo::find_simulations(a, b).is_empty())
    }

    fn eq(&self, a: &FiniteOrder, b: &FiniteOrder) -> Verdict {
        let iso = !ewo::find_simulations(a, b).is_empty()
            && !ewo::find_simulations(b, a).is_empty();
        Verdict::from_bool(iso)
    }

    fn zero(&self) -> Option<FiniteOrder> {
        Some(FiniteOrder::chain(0))
    }

    fn succ(&self, a: &FiniteOrder) -> Option<FiniteOrder> {
        Some(ewo::successor(a))
    }

    fn add(&self, a: &FiniteOrder, b: &FiniteOrder) -> Option<FiniteOrder> {
        Some(ewo::sum(a, b))
    }

    fn mul(&self, a: &FiniteOrder, b: &FiniteOrder) -> Option<FiniteOrder> {
        Some(ewo::product(a, b))
    }

    fn classify(&self, a: &FiniteOrder) -> Option<AxClass<FiniteOrder>> {
        if a.size() == 0 {
            return Some(AxClass::Zero);
        }
        let ranks = ewo::accessibility_ranks(a);
        let top = (0..a.size())
            .max_by_key(|&i| ranks[i].expect("validated orders are wellfounded"))
            .expect("non-empty");
        let pred = ewo::initial_segment(a, top).expect("top element is in range");
        Some(AxClass::Successor(pred))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axiom::{
        check_arithmetic_spec, check_assumptions, check_classification_unique,
        check_zero_suc_sup, run_full_suite, Outcome,
    };

    fn assert_clean(report: &crate::axiom::SuiteReport) {
        for c in &report.checks {
            match &c.outcome {
                Outcome::Pass => {}
                Outcome::Fail { counterexample, .. } => {
                    panic!("{} failed: {}\n{}", c.name, counterexample, report.render_text())
                }
                Outcome::Inconclusive { unknown_rate } => {
                    panic!("{} inconclusive at {unknown_rate}", c.name)
                }
            }
        }
    }

    #[test]
    fn cnf_instance_passes_everything() {
        let inst = CnfInstance::default();
        let report = run_full_suite(&inst, 120, 0xC0FFEE);
        assert!(!report.checks.is_empty());
        assert_clean(&report);
    }

    #[test]
    fn brw_instance_passes_everything() {
        let inst = BrwInstance {
            sampler: CnfSampler::small(),
            fuel: 8,
        };
        let report = run_full_suite(&inst, 60, 0xBEEF);
        assert_clean(&report);
    }

    #[test]
    fn ewo_instance_passes_everything() {
        let inst = EwoInstance::default();
        let report = run_full_suite(&inst, 80, 0xABBA);
        assert_clean(&report);
    }

    #[test]
    fn reports_replay_deterministically() {
        let inst = CnfInstance::default();
        let a = check_assumptions(&inst, 50, 7).render_text();
        let b = check_assumptions(&inst, 50, 7).render_text();
        assert_eq!(a, b);
    }

    #[test]
    fn term_merge_add_matches_on_examples() {
        let w = Cnf::omega();
        let vals = [
            Cnf::zero(),
            Cnf::from_nat(3),
            w.clone(),
            cnf::add(&w, &Cnf::one()),
            cnf::omega_pow(&w),
            cnf::mul(&cnf::omega_pow(&w), &Cnf::from_nat(2)),
        ];
        for a in &vals {
            for b in &vals {
                assert_eq!(term_merge_add(a, b), cnf::add(a, b), "{a} + {b}");
            }
        }
    }

    #[test]
    fn missing_structure_is_reported() {
        struct Bare;
        impl OrdinalInstance for Bare {
            type Elem = u8;
            fn name(&self) -> &'static str {
                "bare"
            }
            fn sample(&self, rng: &mut ChaCha8Rng) -> u8 {
                rng.gen_range(0..10)
            }
            fn describe(&self, e: &u8) -> String {
                e.to_string()
            }
            fn lt(&self, a: &u8, b: &u8) -> Verdict {
                Verdict::from_bool(a < b)
            }
            fn leq(&self, a: &u8, b: &u8) -> Verdict {
                Verdict::from_bool(a <= b)
            }
            fn eq(&self, a: &u8, b: &u8) -> Verdict {
                Verdict::from_bool(a == b)
            }
        }
        assert!(check_zero_suc_sup(&Bare, 10, 1).is_err());
        assert!(check_classification_unique(&Bare, 10, 1).is_err());
        assert!(check_arithmetic_spec(&Bare, 10, 1).is_err());
        // but the base assumptions always run
        assert!(!check_assumptions(&Bare, 10, 1).has_failures());
    }
}
