//! Instance-parameterized property suite for ordinal-like carriers.
//!
//! A carrier plugs in through [`OrdinalInstance`]: a seeded sampler, the
//! order queries (three-valued, since not every carrier decides them), and
//! whatever optional structure it has — zero, successor, increasing
//! families with suprema, arithmetic, a classifier. The checks run the
//! shared axioms over finite samples: strict/weak order laws, the
//! zero/successor/supremum characterisations, uniqueness of classification,
//! and the defining clauses of addition, multiplication and exponentiation.
//!
//! Universal statements are read as seeded finite sampling; `Unknown`
//! verdicts are counted and never treated as a pass. Every failure carries
//! a counterexample that replays from the seed.

mod instances;

pub use instances::{BrwInstance, CnfInstance, EwoInstance};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::brouwer::Verdict;

/// How many family indices the supremum bound clauses sample.
const SUP_POINTS: u64 = 8;
/// Indices probed when searching for a family element strictly above a
/// sampled value. Families are increasing, so the witness set is upward
/// closed and the probe at the largest index decides; the small indices are
/// cheap early exits and keep reported witnesses small.
const SCAN_POINTS: [u64; 12] = [0, 1, 2, 3, 4, 5, 6, 7, 8, 16, 32, 64];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AxiomError {
    #[error("instance does not supply the structure for {0}")]
    MissingStructure(&'static str),
}

/// An increasing indexed family together with its supremum.
pub struct Family<E> {
    pub at: Box<dyn Fn(u64) -> E>,
    pub sup: E,
    pub tag: String,
}

/// Classification of an element as seen by the instance's classifier.
pub enum AxClass<E> {
    Zero,
    Successor(E),
    Limit(Box<dyn Fn(u64) -> E>),
}

/// A carrier with its order queries and optional structure. Queries must be
/// pure; `sample` must depend only on the rng state.
pub trait OrdinalInstance {
    type Elem: Clone;

    fn name(&self) -> &'static str;
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Elem;
    fn describe(&self, e: &Self::Elem) -> String;
    fn lt(&self, a: &Self::Elem, b: &Self::Elem) -> Verdict;
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> Verdict;
    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> Verdict;

    fn zero(&self) -> Option<Self::Elem> {
        None
    }
    fn succ(&self, _a: &Self::Elem) -> Option<Self::Elem> {
        None
    }
    fn family(&self, _rng: &mut ChaCha8Rng) -> Option<Family<Self::Elem>> {
        None
    }
    fn add(&self, _a: &Self::Elem, _b: &Self::Elem) -> Option<Self::Elem> {
        None
    }
    /// Second addition candidate for the pointwise-uniqueness check.
    fn alt_add(&self, _a: &Self::Elem, _b: &Self::Elem) -> Option<Self::Elem> {
        None
    }
    fn mul(&self, _a: &Self::Elem, _b: &Self::Elem) -> Option<Self::Elem> {
        None
    }
    /// The base used for the exponentiation clauses.
    fn exp_base(&self) -> Option<Self::Elem> {
        None
    }
    fn exp(&self, _base: &Self::Elem, _e: &Self::Elem) -> Option<Self::Elem> {
        None
    }
    fn classify(&self, _a: &Self::Elem) -> Option<AxClass<Self::Elem>> {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail {
        counterexample: String,
        sample_index: u64,
    },
    Inconclusive {
        unknown_rate: f64,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub samples: u64,
    pub unknowns: u64,
    pub seed: u64,
    #[serde(flatten)]
    pub outcome: Outcome,
}

impl CheckResult {
    pub fn is_fail(&self) -> bool {
        matches!(self.outcome, Outcome::Fail { .. })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub instance: String,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(CheckResult::is_fail)
    }

    pub fn merge(mut self, other: SuiteReport) -> SuiteReport {
        self.checks.extend(other.checks);
        self
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("suite [{}] seed {}\n", self.instance, self.seed);
        for c in &self.checks {
            let line = match &c.outcome {
                Outcome::Pass => format!(
                    "  PASS {} ({} samples, {} unknown)",
                    c.name, c.samples, c.unknowns
                ),
                Outcome::Fail {
                    counterexample,
                    sample_index,
                } => format!(
                    "  FAIL {} @ sample {}: {} [replay: seed {}]",
                    c.name, sample_index, counterexample, c.seed
                ),
                Outcome::Inconclusive { unknown_rate } => format!(
                    "  INCONCLUSIVE {} ({:.0}% unknown of {} samples)",
                    c.name,
                    unknown_rate * 100.0,
                    c.samples
                ),
            };
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// One sampled evaluation of a law.
enum Step {
    Holds,
    Unknown,
    Violated(String),
}

impl Step {
    /// Definite-true premises license a conclusion check; anything unknown
    /// taints the sample, a definite false conclusion breaks it.
    fn implication(premises: &[Verdict], conclusion: Verdict, message: impl Fn() -> String) -> Step {
        if premises.iter().any(|v| *v == Verdict::Unknown) {
            return Step::Unknown;
        }
        if premises.iter().any(|v| *v == Verdict::DefFalse) {
            return Step::Holds;
        }
        match conclusion {
            Verdict::DefTrue => Step::Holds,
            Verdict::Unknown => Step::Unknown,
            Verdict::DefFalse => Step::Violated(message()),
        }
    }
}

/// Runs one law over n seeded samples. Stops at the first violation; more
/// than 20% unknown samples downgrade a pass to inconclusive.
fn run_check(
    name: &str,
    n: u64,
    seed: u64,
    mut law: impl FnMut(u64, &mut ChaCha8Rng) -> Step,
) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut unknowns = 0;
    for i in 0..n {
        match law(i, &mut rng) {
            Step::Holds => {}
            Step::Unknown => unknowns += 1,
            Step::Violated(counterexample) => {
                return CheckResult {
                    name: name.to_string(),
                    samples: i + 1,
                    unknowns,
                    seed,
                    outcome: Outcome::Fail {
                        counterexample,
                        sample_index: i,
                    },
                };
            }
        }
    }
    let unknown_rate = if n == 0 { 0.0 } else { unknowns as f64 / n as f64 };
    let outcome = if unknown_rate > 0.2 {
        Outcome::Inconclusive { unknown_rate }
    } else {
        Outcome::Pass
    };
    CheckResult {
        name: name.to_string(),
        samples: n,
        unknowns,
        seed,
        outcome,
    }
}

/// Strict and weak order laws plus the two mixed-transitivity inclusions.
pub fn check_assumptions<I: OrdinalInstance>(inst: &I, n: u64, seed: u64) -> SuiteReport {
    let mut checks = Vec::new();

    checks.push(run_check("lt-irreflexive", n, seed, |_, rng| {
        let a = inst.sample(rng);
        match inst.lt(&a, &a) {
            Verdict::DefTrue => Step::Violated(format!("{} < itself", inst.describe(&a))),
            Verdict::DefFalse => Step::Holds,
            Verdict::Unknown => Step::Unknown,
        }
    }));

    checks.push(run_check("lt-transitive", n, seed, |_, rng| {
        let (a, b, c) = (inst.sample(rng), inst.sample(rng), inst.sample(rng));
        Step::implication(&[inst.lt(&a, &b), inst.lt(&b, &c)], inst.lt(&a, &c), || {
            format!(
                "{} < {} < {} but not {0} < {2}",
                inst.describe(&a),
                inst.describe(&b),
                inst.describe(&c)
            )
        })
    }));

    checks.push(run_check("leq-reflexive", n, seed, |_, rng| {
        let a = inst.sample(rng);
        Step::implication(&[], inst.leq(&a, &a), || {
            format!("{} not <= itself", inst.describe(&a))
        })
    }));

    checks.push(run_check("leq-transitive", n, seed, |_, rng| {
        let (a, b, c) = (inst.sample(rng), inst.sample(rng), inst.sample(rng));
        Step::implication(&[inst.leq(&a, &b), inst.leq(&b, &c)], inst.leq(&a, &c), || {
            format!(
                "{} <= {} <= {} but not {0} <= {2}",
                inst.describe(&a),
                inst.describe(&b),
                inst.describe(&c)
            )
        })
    }));

    checks.push(run_check("leq-antisymmetric", n, seed, |_, rng| {
        let (a, b) = (inst.sample(rng), inst.sample(rng));
        Step::implication(&[inst.leq(&a, &b), inst.leq(&b, &a)], inst.eq(&a, &b), || {
            format!(
                "{} and {} below each other yet distinct",
                inst.describe(&a),
                inst.describe(&b)
            )
        })
    }));

    checks.push(run_check("lt-implies-leq", n, seed, |_, rng| {
        let (a, b) = (inst.sample(rng), inst.sample(rng));
        Step::implication(&[inst.lt(&a, &b)], inst.leq(&a, &b), || {
            format!(
                "{} < {} but not {0} <= {1}",
                inst.describe(&a),
                inst.describe(&b)
            )
        })
    }));

    checks.push(run_check("lt-leq-mixed-transitive", n, seed, |_, rng| {
        let (a, b, c) = (inst.sample(rng), inst.sample(rng), inst.sample(rng));
        Step::implication(&[inst.lt(&c, &b), inst.leq(&b, &a)], inst.lt(&c, &a), || {
            format!(
                "{} < {} <= {} but not {0} < {2}",
                inst.describe(&c),
                inst.describe(&b),
                inst.describe(&a)
            )
        })
    }));

    SuiteReport {
        instance: inst.name().to_string(),
        seed,
        checks,
    }
}

/// Zero is least; the successor satisfies both successor clauses, the
/// strong-successor clause, and the characterisation `b < x` iff
/// `succ b <= x`; sampled suprema satisfy both bound clauses.
pub fn check_zero_suc_sup<I: OrdinalInstance>(
    inst: &I,
    n: u64,
    seed: u64,
) -> Result<SuiteReport, AxiomError> {
    if inst.zero().is_none() && inst.succ(&sample_one(inst, seed)).is_none() {
        return Err(AxiomError::MissingStructure("zero or successor"));
    }
    let mut checks = Vec::new();

    if let Some(z) = inst.zero() {
        checks.push(run_check("zero-least", n, seed, |_, rng| {
            let a = inst.sample(rng);
            Step::implication(&[], inst.leq(&z, &a), || {
                format!("zero not below {}", inst.describe(&a))
            })
        }));
    }

    if inst.succ(&sample_one(inst, seed)).is_some() {
        checks.push(run_check("succ-strictly-above", n, seed, |_, rng| {
            let b = inst.sample(rng);
            let sb = inst.succ(&b).expect("successor supplied");
            Step::implication(&[], inst.lt(&b, &sb), || {
                format!("{} not below its successor", inst.describe(&b))
            })
        }));

        checks.push(run_check("succ-least-above", n, seed, |_, rng| {
            let (b, x) = probe_pair(inst, rng);
            let sb = inst.succ(&b).expect("successor supplied");
            Step::implication(&[inst.lt(&b, &x)], inst.leq(&sb, &x), || {
                format!(
                    "{} < {} but succ = {} not <= {1}",
                    inst.describe(&b),
                    inst.describe(&x),
                    inst.describe(&sb)
                )
            })
        }));

        checks.push(run_check("succ-strong", n, seed, |_, rng| {
            let (b, x) = probe_pair(inst, rng);
            let sb = inst.succ(&b).expect("successor supplied");
            Step::implication(&[inst.lt(&x, &sb)], inst.leq(&x, &b), || {
                format!(
                    "{} < succ {} but not {0} <= {1}",
                    inst.describe(&x),
                    inst.describe(&b)
                )
            })
        }));

        checks.push(run_check("succ-characterisation", n, seed, |_, rng| {
            let (b, x) = probe_pair(inst, rng);
            let sb = inst.succ(&b).expect("successor supplied");
            // the forward direction is succ-least-above; here the converse
            Step::implication(&[inst.leq(&sb, &x)], inst.lt(&b, &x), || {
                format!(
                    "succ {} <= {} but not {0} < {1}",
                    inst.describe(&b),
                    inst.describe(&x)
                )
            })
        }));
    }

    if inst.family(&mut ChaCha8Rng::seed_from_u64(seed)).is_some() {
        checks.push(run_check("sup-upper-bound", n, seed, |_, rng| {
            let Some(fam) = inst.family(rng) else {
                return Step::Unknown;
            };
            for i in 0..SUP_POINTS {
                match inst.leq(&(fam.at)(i), &fam.sup) {
                    Verdict::DefTrue => {}
                    Verdict::Unknown => return Step::Unknown,
                    Verdict::DefFalse => {
                        return Step::Violated(format!(
                            "element {i} of [{}] above its supremum {}",
                            fam.tag,
                            inst.describe(&fam.sup)
                        ))
                    }
                }
            }
            Step::Holds
        }));

        checks.push(run_check("sup-least-bound", n, seed, |_, rng| {
            let Some(fam) = inst.family(rng) else {
                return Step::Unknown;
            };
            let x = inst.sample(rng);
            match family_bound_status(inst, &*fam.at, &x) {
                BoundStatus::NotABound => Step::Holds,
                BoundStatus::Undetermined => Step::Unknown,
                BoundStatus::Bounds => {
                    Step::implication(&[], inst.leq(&fam.sup, &x), || {
                        format!(
                            "{} bounds [{}] but sits below its supremum {}",
                            inst.describe(&x),
                            fam.tag,
                            inst.describe(&fam.sup)
                        )
                    })
                }
            }
        }));
    }

    Ok(SuiteReport {
        instance: inst.name().to_string(),
        seed,
        checks,
    })
}

/// The three classification cases refute each other through the order
/// queries, following the uniqueness theorem's proof shape.
pub fn check_classification_unique<I: OrdinalInstance>(
    inst: &I,
    n: u64,
    seed: u64,
) -> Result<SuiteReport, AxiomError> {
    if inst.classify(&sample_one(inst, seed)).is_none() {
        return Err(AxiomError::MissingStructure("classifier"));
    }
    let mut checks = Vec::new();

    checks.push(run_check("classify-zero-case", n, seed, |_, rng| {
        let a = inst.sample(rng);
        let x = inst.sample(rng);
        match inst.classify(&a) {
            Some(AxClass::Zero) => {
                // zero lies below everything and nothing lies below it
                match (inst.leq(&a, &x), inst.lt(&x, &a)) {
                    (Verdict::DefFalse, _) => Step::Violated(format!(
                        "{} classified zero but not below {}",
                        inst.describe(&a),
                        inst.describe(&x)
                    )),
                    (_, Verdict::DefTrue) => Step::Violated(format!(
                        "{} lies below the zero {}",
                        inst.describe(&x),
                        inst.describe(&a)
                    )),
                    (Verdict::Unknown, _) | (_, Verdict::Unknown) => Step::Unknown,
                    _ => Step::Holds,
                }
            }
            Some(_) => Step::Holds,
            None => Step::Unknown,
        }
    }));

    checks.push(run_check("classify-successor-case", n, seed, |_, rng| {
        let a = inst.sample(rng);
        let x = inst.sample(rng);
        match inst.classify(&a) {
            Some(AxClass::Successor(p)) => {
                match inst.lt(&p, &a) {
                    Verdict::DefFalse => {
                        return Step::Violated(format!(
                            "predecessor {} not below {}",
                            inst.describe(&p),
                            inst.describe(&a)
                        ))
                    }
                    Verdict::Unknown => return Step::Unknown,
                    Verdict::DefTrue => {}
                }
                // nothing sits strictly between the predecessor and a
                if inst.lt(&p, &x) == Verdict::DefTrue && inst.lt(&x, &a) == Verdict::DefTrue {
                    return Step::Violated(format!(
                        "{} strictly between {} and its successor {}",
                        inst.describe(&x),
                        inst.describe(&p),
                        inst.describe(&a)
                    ));
                }
                // strong: everything strictly below a stays at or below p
                Step::implication(&[inst.lt(&x, &a)], inst.leq(&x, &p), || {
                    format!(
                        "{} < {} but above the predecessor {}",
                        inst.describe(&x),
                        inst.describe(&a),
                        inst.describe(&p)
                    )
                })
            }
            Some(_) => Step::Holds,
            None => Step::Unknown,
        }
    }));

    checks.push(run_check("classify-limit-case", n, seed, |_, rng| {
        let a = inst.sample(rng);
        let x = inst.sample(rng);
        match inst.classify(&a) {
            Some(AxClass::Limit(f)) => {
                let mut prev: Option<I::Elem> = None;
                for i in 0..SUP_POINTS {
                    let fi = f(i);
                    match inst.lt(&fi, &a) {
                        Verdict::DefFalse => {
                            return Step::Violated(format!(
                                "family element {i} not below the limit {}",
                                inst.describe(&a)
                            ))
                        }
                        Verdict::Unknown => return Step::Unknown,
                        Verdict::DefTrue => {}
                    }
                    if let Some(p) = prev {
                        if inst.lt(&p, &fi) == Verdict::DefFalse {
                            return Step::Violated(format!(
                                "fundamental family of {} not increasing at {i}",
                                inst.describe(&a)
                            ));
                        }
                    }
                    prev = Some(fi);
                }
                // cofinality: anything strictly below the limit is overtaken,
                // which is exactly what refutes a successor classification
                if inst.lt(&x, &a) == Verdict::DefTrue {
                    return match family_bound_status(inst, &|i| f(i), &x) {
                        BoundStatus::NotABound => Step::Holds,
                        BoundStatus::Undetermined => Step::Unknown,
                        BoundStatus::Bounds => Step::Violated(format!(
                            "{} below the limit {} but never overtaken by its family",
                            inst.describe(&x),
                            inst.describe(&a)
                        )),
                    };
                }
                Step::Holds
            }
            Some(_) => Step::Holds,
            None => Step::Unknown,
        }
    }));

    Ok(SuiteReport {
        instance: inst.name().to_string(),
        seed,
        checks,
    })
}

/// Defining clauses of the arithmetic operations, plus pointwise agreement
/// with an alternative addition when one is registered.
pub fn check_arithmetic_spec<I: OrdinalInstance>(
    inst: &I,
    n: u64,
    seed: u64,
) -> Result<SuiteReport, AxiomError> {
    let probe = sample_one(inst, seed);
    if inst.add(&probe, &probe).is_none() {
        return Err(AxiomError::MissingStructure("addition"));
    }
    let mut checks = Vec::new();
    let zero = inst.zero();
    let has_succ = inst.succ(&probe).is_some();
    let has_mul = inst.mul(&probe, &probe).is_some();
    let has_family = inst.family(&mut ChaCha8Rng::seed_from_u64(seed)).is_some();
    let exp_base = inst.exp_base();

    if let Some(z) = zero.clone() {
        checks.push(run_check("add-zero-clause", n, seed, |_, rng| {
            let c = inst.sample(rng);
            let lhs = inst.add(&c, &z).expect("addition supplied");
            Step::implication(&[], inst.eq(&lhs, &c), || {
                format!("{} + 0 = {}", inst.describe(&c), inst.describe(&lhs))
            })
        }));
    }

    if has_succ {
        checks.push(run_check("add-successor-clause", n, seed, |_, rng| {
            let (c, b) = (inst.sample(rng), inst.sample(rng));
            let sb = inst.succ(&b).expect("successor supplied");
            let lhs = inst.add(&c, &sb).expect("addition supplied");
            let rhs = inst.succ(&inst.add(&c, &b).expect("addition supplied"))
                .expect("successor supplied");
            Step::implication(&[], inst.eq(&lhs, &rhs), || {
                format!(
                    "{} + succ {} gave {} instead of {}",
                    inst.describe(&c),
                    inst.describe(&b),
                    inst.describe(&lhs),
                    inst.describe(&rhs)
                )
            })
        }));
    }

    if has_family {
        checks.push(run_check("add-limit-clause", n, seed, |_, rng| {
            let Some(fam) = inst.family(rng) else {
                return Step::Unknown;
            };
            let c = inst.sample(rng);
            let x = inst.sample(rng);
            let lhs = inst.add(&c, &fam.sup).expect("addition supplied");
            let shifted = |i: u64| inst.add(&c, &(fam.at)(i)).expect("addition supplied");
            sup_clause(inst, &lhs, &shifted, &x, &fam.tag)
        }));
    }

    if has_mul {
        if let Some(z) = zero.clone() {
            checks.push(run_check("mul-zero-clause", n, seed, |_, rng| {
                let c = inst.sample(rng);
                let lhs = inst.mul(&c, &z).expect("multiplication supplied");
                Step::implication(&[], inst.eq(&lhs, &z), || {
                    format!("{} * 0 = {}", inst.describe(&c), inst.describe(&lhs))
                })
            }));
        }
        if has_succ {
            checks.push(run_check("mul-successor-clause", n, seed, |_, rng| {
                let (c, b) = (inst.sample(rng), inst.sample(rng));
                let sb = inst.succ(&b).expect("successor supplied");
                let lhs = inst.mul(&c, &sb).expect("multiplication supplied");
                let cb = inst.mul(&c, &b).expect("multiplication supplied");
                let rhs = inst.add(&cb, &c).expect("addition supplied");
                Step::implication(&[], inst.eq(&lhs, &rhs), || {
                    format!(
                        "{} * succ {} gave {} instead of {}",
                        inst.describe(&c),
                        inst.describe(&b),
                        inst.describe(&lhs),
                        inst.describe(&rhs)
                    )
                })
            }));
        }
        if has_family {
            checks.push(run_check("mul-limit-clause", n, seed, |_, rng| {
                let Some(fam) = inst.family(rng) else {
                    return Step::Unknown;
                };
                let c = inst.sample(rng);
                let x = inst.sample(rng);
                let lhs = inst.mul(&c, &fam.sup).expect("multiplication supplied");
                let scaled = |i: u64| inst.mul(&c, &(fam.at)(i)).expect("multiplication supplied");
                sup_clause(inst, &lhs, &scaled, &x, &fam.tag)
            }));
        }
    }

    if let (Some(base), Some(z), true) = (exp_base.clone(), zero.clone(), has_succ) {
        checks.push(run_check("exp-zero-exponent-clause", n, seed, |_, _rng| {
            let one = inst.succ(&z).expect("successor supplied");
            let lhs = inst.exp(&base, &z).expect("exponentiation supplied");
            Step::implication(&[], inst.eq(&lhs, &one), || {
                format!("base^0 = {}", inst.describe(&lhs))
            })
        }));

        checks.push(run_check("exp-successor-clause", n, seed, |_, rng| {
            let b = inst.sample(rng);
            let sb = inst.succ(&b).expect("successor supplied");
            let lhs = inst.exp(&base, &sb).expect("exponentiation supplied");
            let eb = inst.exp(&base, &b).expect("exponentiation supplied");
            let rhs = inst.mul(&eb, &base).expect("multiplication supplied");
            Step::implication(&[], inst.eq(&lhs, &rhs), || {
                format!(
                    "base^succ {} gave {} instead of {}",
                    inst.describe(&b),
                    inst.describe(&lhs),
                    inst.describe(&rhs)
                )
            })
        }));

        if has_family {
            checks.push(run_check("exp-limit-clause", n, seed, |_, rng| {
                let Some(fam) = inst.family(rng) else {
                    return Step::Unknown;
                };
                let x = inst.sample(rng);
                let lhs = inst.exp(&base, &fam.sup).expect("exponentiation supplied");
                let powered = |i: u64| inst.exp(&base, &(fam.at)(i)).expect("exponentiation supplied");
                sup_clause(inst, &lhs, &powered, &x, &fam.tag)
            }));
        }
    }

    if inst.alt_add(&probe, &probe).is_some() {
        checks.push(run_check("add-unique-pairwise", n, seed, |_, rng| {
            let (a, b) = (inst.sample(rng), inst.sample(rng));
            let lhs = inst.add(&a, &b).expect("addition supplied");
            let Some(rhs) = inst.alt_add(&a, &b) else {
                return Step::Unknown;
            };
            Step::implication(&[], inst.eq(&lhs, &rhs), || {
                format!(
                    "two registered additions disagree at {} + {}: {} vs {}",
                    inst.describe(&a),
                    inst.describe(&b),
                    inst.describe(&lhs),
                    inst.describe(&rhs)
                )
            })
        }));
    }

    Ok(SuiteReport {
        instance: inst.name().to_string(),
        seed,
        checks,
    })
}

/// Runs every check the instance has structure for.
pub fn run_full_suite<I: OrdinalInstance>(inst: &I, n: u64, seed: u64) -> SuiteReport {
    let mut report = check_assumptions(inst, n, seed);
    if let Ok(r) = check_zero_suc_sup(inst, n, seed) {
        report = report.merge(r);
    }
    if let Ok(r) = check_classification_unique(inst, n, seed) {
        report = report.merge(r);
    }
    if let Ok(r) = check_arithmetic_spec(inst, n, seed) {
        report = report.merge(r);
    }
    report
}

fn sample_one<I: OrdinalInstance>(inst: &I, seed: u64) -> I::Elem {
    inst.sample(&mut ChaCha8Rng::seed_from_u64(seed))
}

/// Probe pairs for the successor laws: plain sample pairs, plus
/// (predecessor, sample) pairs when the classifier identifies a successor —
/// those sit exactly one step apart and expose off-by-more successors.
fn probe_pair<I: OrdinalInstance>(inst: &I, rng: &mut ChaCha8Rng) -> (I::Elem, I::Elem) {
    let x = inst.sample(rng);
    if let Some(AxClass::Successor(p)) = inst.classify(&x) {
        if rand::Rng::gen_bool(rng, 0.5) {
            return (p, x);
        }
    }
    (inst.sample(rng), x)
}

enum BoundStatus {
    Bounds,
    NotABound,
    Undetermined,
}

/// Decides whether x bounds the whole family, searching for a family
/// element strictly above x. The search bound is honest for the shipped
/// samplers: their fundamental families overtake any sampled value well
/// inside the scan window.
fn family_bound_status<I: OrdinalInstance>(
    inst: &I,
    at: &dyn Fn(u64) -> I::Elem,
    x: &I::Elem,
) -> BoundStatus {
    let mut undetermined = false;
    for i in 0..COFINAL_SCAN {
        match inst.lt(x, &at(i)) {
            Verdict::DefTrue => return BoundStatus::NotABound,
            Verdict::Unknown => undetermined = true,
            Verdict::DefFalse => {}
        }
    }
    if undetermined {
        BoundStatus::Undetermined
    } else {
        BoundStatus::Bounds
    }
}

/// Both halves of "lhs is the supremum of the mapped family": lhs bounds
/// the family, and any sampled bound of the family dominates lhs.
fn sup_clause<I: OrdinalInstance>(
    inst: &I,
    lhs: &I::Elem,
    mapped: &dyn Fn(u64) -> I::Elem,
    x: &I::Elem,
    tag: &str,
) -> Step {
    for i in 0..SUP_POINTS {
        match inst.leq(&mapped(i), lhs) {
            Verdict::DefTrue => {}
            Verdict::Unknown => return Step::Unknown,
            Verdict::DefFalse => {
                return Step::Violated(format!(
                    "mapped element {i} of [{tag}] exceeds the claimed supremum {}",
                    inst.describe(lhs)
                ))
            }
        }
    }
    match family_bound_status(inst, mapped, x) {
        BoundStatus::NotABound => Step::Holds,
        BoundStatus::Undetermined => Step::Unknown,
        BoundStatus::Bounds => Step::implication(&[], inst.leq(lhs, x), || {
            format!(
                "{} bounds the mapped family [{tag}] but not the claimed supremum {}",
                inst.describe(x),
                inst.describe(lhs)
            )
        }),
    }
}
