//! Finite extensional wellfounded orders.
//!
//! An order is a carrier size together with a strict-relation matrix.
//! [`FiniteOrder::validate`] checks transitivity, extensionality and
//! wellfoundedness with concrete counterexamples; validated orders are
//! exactly the finite linear orders. Simulation search, the classical
//! constructions (sum, reverse-lexicographic product, successor, initial
//! segment, limits of weakly increasing chains) and the finite fragment of
//! the Brouwer-tree interpretation live here too.

mod construct;
mod json;
mod sim;

pub use construct::{initial_segment, limit_chain, product, successor, sum};
pub use json::{from_json, to_json};
pub use sim::{find_bounded_simulation, find_simulations, is_simulation, Simulation};

use thiserror::Error;

use crate::brouwer::Brw;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("relation matrix is not square")]
    MalformedMatrix,
    #[error("pair ({0}, {1}) is out of range")]
    IndexOutOfRange(usize, usize),
    #[error("duplicate pair ({0}, {1})")]
    DuplicatePair(usize, usize),
    #[error("labels must match the carrier size")]
    LabelMismatch,
    #[error("no simulation from chain element {0} into element {1}")]
    NotAChain(usize, usize),
    #[error("value is not finite")]
    NotFinite,
    #[error("invalid order file: {0}")]
    Format(String),
}

/// A finite carrier with a strict relation; `lt(i, j)` reads "i precedes j".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteOrder {
    size: usize,
    lt: Vec<bool>,
    labels: Option<Vec<String>>,
}

impl FiniteOrder {
    /// Builds from the strict pairs. Out-of-range and duplicate pairs are
    /// rejected; the relation is stored exactly as given, not closed.
    pub fn from_pairs(
        size: usize,
        pairs: &[(usize, usize)],
        labels: Option<Vec<String>>,
    ) -> Result<FiniteOrder, OrderError> {
        if let Some(ls) = &labels {
            if ls.len() != size {
                return Err(OrderError::LabelMismatch);
            }
        }
        let mut lt = vec![false; size * size];
        for &(i, j) in pairs {
            if i >= size || j >= size {
                return Err(OrderError::IndexOutOfRange(i, j));
            }
            if lt[i * size + j] {
                return Err(OrderError::DuplicatePair(i, j));
            }
            lt[i * size + j] = true;
        }
        Ok(FiniteOrder { size, lt, labels })
    }

    /// Builds from a boolean matrix, which must be square.
    pub fn from_matrix(rows: Vec<Vec<bool>>) -> Result<FiniteOrder, OrderError> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(OrderError::MalformedMatrix);
        }
        Ok(FiniteOrder {
            size,
            lt: rows.into_iter().flatten().collect(),
            labels: None,
        })
    }

    /// The transitively closed chain 0 < 1 < ... < n-1.
    pub fn chain(n: usize) -> FiniteOrder {
        let mut lt = vec![false; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                lt[i * n + j] = true;
            }
        }
        FiniteOrder {
            size: n,
            lt,
            labels: None,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.lt[i * self.size + j]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(ls) => ls[i].clone(),
            None => i.to_string(),
        }
    }

    /// The strict pairs in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.size {
            for j in 0..self.size {
                if self.lt(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn predecessors(&self, j: usize) -> Vec<usize> {
        (0..self.size).filter(|&i| self.lt(i, j)).collect()
    }

    pub fn validate(&self) -> OrderReport {
        validate(self)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().all_hold()
    }
}

/// Validation outcome with concrete counterexamples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderReport {
    pub transitive: bool,
    /// (i, j, k) with i < j, j < k but not i < k.
    pub transitivity_witness: Option<(usize, usize, usize)>,
    pub extensional: bool,
    /// Two distinct elements with identical predecessor sets.
    pub extensionality_witness: Option<(usize, usize)>,
    pub wellfounded: bool,
    /// A cycle i0 < i1 < ... < i0 among inaccessible elements.
    pub cycle: Option<Vec<usize>>,
    /// Accessibility rank per element; `None` marks inaccessible elements.
    pub ranks: Vec<Option<usize>>,
}

impl OrderReport {
    pub fn all_hold(&self) -> bool {
        self.transitive && self.extensional && self.wellfounded
    }
}

fn validate(order: &FiniteOrder) -> OrderReport {
    let n = order.size;
    let mut transitivity_witness = None;
    'trans: for i in 0..n {
        for j in 0..n {
            if !order.lt(i, j) {
                continue;
            }
            for k in 0..n {
                if order.lt(j, k) && !order.lt(i, k) {
                    transitivity_witness = Some((i, j, k));
                    break 'trans;
                }
            }
        }
    }

    let mut extensionality_witness = None;
    'ext: for a in 0..n {
        for b in (a + 1)..n {
            if (0..n).all(|c| order.lt(c, a) == order.lt(c, b)) {
                extensionality_witness = Some((a, b));
                break 'ext;
            }
        }
    }

    let ranks = accessibility_ranks(order);
    let cycle = if ranks.iter().all(Option::is_some) {
        None
    } else {
        Some(find_cycle(order, &ranks))
    };

    OrderReport {
        transitive: transitivity_witness.is_none(),
        transitivity_witness,
        extensional: extensionality_witness.is_none(),
        extensionality_witness,
        wellfounded: cycle.is_none(),
        cycle,
        ranks,
    }
}

/// Least-fixpoint accessibility: an element gets the smallest rank strictly
/// above all of its predecessors' ranks; elements whose rank never settles
/// are inaccessible.
pub fn accessibility_ranks(order: &FiniteOrder) -> Vec<Option<usize>> {
    let n = order.size;
    let mut ranks: Vec<Option<usize>> = vec![None; n];
    loop {
        let mut progressed = false;
        for j in 0..n {
            if ranks[j].is_some() {
                continue;
            }
            let preds = order.predecessors(j);
            if preds.iter().all(|&i| ranks[i].is_some()) {
                let rank = preds
                    .iter()
                    .map(|&i| ranks[i].unwrap() + 1)
                    .max()
                    .unwrap_or(0);
                ranks[j] = Some(rank);
                progressed = true;
            }
        }
        if !progressed {
            return ranks;
        }
    }
}

/// Walks predecessors among the inaccessible elements until one repeats.
fn find_cycle(order: &FiniteOrder, ranks: &[Option<usize>]) -> Vec<usize> {
    let start = ranks
        .iter()
        .position(Option::is_none)
        .expect("a cycle needs an inaccessible element");
    let mut path = vec![start];
    let mut cur = start;
    loop {
        let next = order
            .predecessors(cur)
            .into_iter()
            .find(|&p| ranks[p].is_none())
            .expect("inaccessible elements have inaccessible predecessors");
        if let Some(pos) = path.iter().position(|&x| x == next) {
            let mut cycle = path[pos..].to_vec();
            cycle.reverse();
            return cycle;
        }
        path.push(next);
        cur = next;
    }
}

/// The order of finite trees strictly below a finite Brouwer tree: the
/// n-chain for the n-th successor of zero. Limits are out of range.
pub fn btoo_finite(x: &Brw) -> Result<FiniteOrder, OrderError> {
    match x.is_finite() {
        Some(n) => Ok(FiniteOrder::chain(n as usize)),
        None => Err(OrderError::NotFinite),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_relation_on_two_points_is_not_extensional() {
        let o = FiniteOrder::from_pairs(2, &[], None).unwrap();
        let r = o.validate();
        assert!(r.transitive && r.wellfounded);
        assert!(!r.extensional);
        assert_eq!(r.extensionality_witness, Some((0, 1)));
    }

    #[test]
    fn three_chain_validates_with_ranks() {
        let o = FiniteOrder::chain(3);
        let r = o.validate();
        assert!(r.all_hold());
        assert_eq!(r.ranks, vec![Some(0), Some(1), Some(2)]);
    }

    #[test]
    fn two_cycle_is_not_wellfounded() {
        let o = FiniteOrder::from_pairs(2, &[(0, 1), (1, 0)], None).unwrap();
        let r = o.validate();
        assert!(!r.wellfounded);
        let mut cycle = r.cycle.unwrap();
        cycle.sort_unstable();
        assert_eq!(cycle, vec![0, 1]);
    }

    #[test]
    fn transitivity_counterexample_is_concrete() {
        let o = FiniteOrder::from_pairs(3, &[(0, 1), (1, 2)], None).unwrap();
        let r = o.validate();
        assert!(!r.transitive);
        let (i, j, k) = r.transitivity_witness.unwrap();
        assert!(o.lt(i, j) && o.lt(j, k) && !o.lt(i, k));
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            FiniteOrder::from_pairs(2, &[(0, 5)], None),
            Err(OrderError::IndexOutOfRange(0, 5))
        );
        assert_eq!(
            FiniteOrder::from_pairs(2, &[(0, 1), (0, 1)], None),
            Err(OrderError::DuplicatePair(0, 1))
        );
        assert_eq!(
            FiniteOrder::from_matrix(vec![vec![false], vec![false, false]]),
            Err(OrderError::MalformedMatrix)
        );
    }

    #[test]
    fn btoo_finite_gives_chains() {
        assert_eq!(btoo_finite(&Brw::zero()).unwrap(), FiniteOrder::chain(0));
        assert_eq!(btoo_finite(&Brw::iota(2)).unwrap(), FiniteOrder::chain(2));
        assert_eq!(btoo_finite(&Brw::omega()), Err(OrderError::NotFinite));
    }
}
