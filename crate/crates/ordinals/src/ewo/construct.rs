//! Order constructions: disjoint sum, reverse-lexicographic product,
//! successor, initial segments, and limits of weakly increasing chains.

use super::{accessibility_ranks, find_simulations, FiniteOrder, OrderError};

/// A + B: the A block below the B block, orders kept inside each block.
pub fn sum(a: &FiniteOrder, b: &FiniteOrder) -> FiniteOrder {
    let (na, nb) = (a.size(), b.size());
    let n = na + nb;
    let mut rows = vec![vec![false; n]; n];
    for i in 0..na {
        for j in 0..na {
            rows[i][j] = a.lt(i, j);
        }
    }
    for i in 0..nb {
        for j in 0..nb {
            rows[na + i][na + j] = b.lt(i, j);
        }
    }
    for i in 0..na {
        for j in 0..nb {
            rows[i][na + j] = true;
        }
    }
    FiniteOrder::from_matrix(rows).expect("sum matrix is square")
}

/// A * B with the reverse-lexicographic order: (x, y) precedes (x', y') when
/// y precedes y', or y = y' and x precedes x'. Pair (x, y) has index
/// x + y * |A|.
pub fn product(a: &FiniteOrder, b: &FiniteOrder) -> FiniteOrder {
    let (na, nb) = (a.size(), b.size());
    let n = na * nb;
    let mut rows = vec![vec![false; n]; n];
    for y in 0..nb {
        for x in 0..na {
            for y2 in 0..nb {
                for x2 in 0..na {
                    let precedes = b.lt(y, y2) || (y == y2 && a.lt(x, x2));
                    rows[x + y * na][x2 + y2 * na] = precedes;
                }
            }
        }
    }
    FiniteOrder::from_matrix(rows).expect("product matrix is square")
}

/// The strong successor A + 1.
pub fn successor(a: &FiniteOrder) -> FiniteOrder {
    sum(a, &FiniteOrder::chain(1))
}

/// The suborder of elements strictly below x, reindexed in ascending order.
pub fn initial_segment(a: &FiniteOrder, x: usize) -> Result<FiniteOrder, OrderError> {
    if x >= a.size() {
        return Err(OrderError::IndexOutOfRange(x, x));
    }
    let elements: Vec<usize> = (0..a.size()).filter(|&y| a.lt(y, x)).collect();
    let rows = elements
        .iter()
        .map(|&i| elements.iter().map(|&j| a.lt(i, j)).collect())
        .collect();
    FiniteOrder::from_matrix(rows)
}

/// Limit of a weakly increasing chain: the disjoint union quotiented by
/// order-isomorphism of initial segments, classes ordered by strict segment
/// embedding. Validated finite orders are linear, so a segment's isomorphism
/// class is determined by its accessibility rank; the quotient is the set of
/// ranks occurring anywhere in the chain, ordered as naturals.
pub fn limit_chain(chain: &[FiniteOrder]) -> Result<FiniteOrder, OrderError> {
    for i in 0..chain.len().saturating_sub(1) {
        if find_simulations(&chain[i], &chain[i + 1]).is_empty() {
            return Err(OrderError::NotAChain(i, i + 1));
        }
    }
    let mut ranks: Vec<usize> = Vec::new();
    for order in chain {
        for r in accessibility_ranks(order) {
            let r = r.expect("chain members must be validated orders");
            if !ranks.contains(&r) {
                ranks.push(r);
            }
        }
    }
    ranks.sort_unstable();
    let n = ranks.len();
    let rows = (0..n)
        .map(|i| (0..n).map(|j| ranks[i] < ranks[j]).collect())
        .collect();
    FiniteOrder::from_matrix(rows)
}
