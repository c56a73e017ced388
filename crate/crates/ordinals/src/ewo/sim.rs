//! Simulation search between finite orders.
//!
//! A simulation is a monotone map under which every predecessor of an image
//! is the image of a predecessor; a bounded simulation is additionally an
//! order-isomorphism onto the initial segment below its bound. Search is
//! exhaustive backtracking, results in lexicographic order.

use super::FiniteOrder;

/// An element mapping, with the bound index when the simulation is bounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simulation {
    pub map: Vec<usize>,
    pub bound: Option<usize>,
}

/// Checks the two simulation conditions for a full map.
pub fn is_simulation(a: &FiniteOrder, b: &FiniteOrder, map: &[usize]) -> bool {
    if map.len() != a.size() || map.iter().any(|&y| y >= b.size()) {
        return false;
    }
    // monotone
    for i in 0..a.size() {
        for j in 0..a.size() {
            if a.lt(i, j) && !b.lt(map[i], map[j]) {
                return false;
            }
        }
    }
    // predecessors of images are images of predecessors
    for x in 0..a.size() {
        for y in 0..b.size() {
            if b.lt(y, map[x]) && !(0..a.size()).any(|x0| a.lt(x0, x) && map[x0] == y) {
                return false;
            }
        }
    }
    true
}

/// All simulations from `a` into `b`, in lexicographic order of the map.
/// Validated orders admit at most one.
pub fn find_simulations(a: &FiniteOrder, b: &FiniteOrder) -> Vec<Simulation> {
    let mut out = Vec::new();
    let mut map = Vec::with_capacity(a.size());
    search(a, b, &mut map, &mut out);
    out
}

fn search(a: &FiniteOrder, b: &FiniteOrder, map: &mut Vec<usize>, out: &mut Vec<Simulation>) {
    if map.len() == a.size() {
        if is_simulation(a, b, map) {
            out.push(Simulation {
                map: map.clone(),
                bound: None,
            });
        }
        return;
    }
    let i = map.len();
    'cand: for y in 0..b.size() {
        // prune on monotonicity against the assigned prefix
        for j in 0..i {
            if a.lt(j, i) && !b.lt(map[j], y) {
                continue 'cand;
            }
            if a.lt(i, j) && !b.lt(y, map[j]) {
                continue 'cand;
            }
        }
        map.push(y);
        search(a, b, map, out);
        map.pop();
    }
}

/// The simulation whose image is exactly the initial segment below some
/// bound, if one exists.
pub fn find_bounded_simulation(a: &FiniteOrder, b: &FiniteOrder) -> Option<Simulation> {
    for sim in find_simulations(a, b) {
        for bound in 0..b.size() {
            let segment: Vec<bool> = (0..b.size()).map(|y| b.lt(y, bound)).collect();
            let image_matches = segment.iter().filter(|&&in_seg| in_seg).count() == a.size()
                && sim.map.iter().all(|&y| segment[y]);
            if image_matches {
                return Some(Simulation {
                    map: sim.map,
                    bound: Some(bound),
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_into_longer_chain_is_unique_inclusion() {
        let sims = find_simulations(&FiniteOrder::chain(2), &FiniteOrder::chain(3));
        assert_eq!(sims.len(), 1);
        assert_eq!(sims[0].map, vec![0, 1]);
    }

    #[test]
    fn no_simulation_into_shorter_chain() {
        assert!(find_simulations(&FiniteOrder::chain(3), &FiniteOrder::chain(2)).is_empty());
    }

    #[test]
    fn self_simulation_is_the_identity() {
        for n in 0..5 {
            let a = FiniteOrder::chain(n);
            let sims = find_simulations(&a, &a);
            assert_eq!(sims.len(), 1);
            assert_eq!(sims[0].map, (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn bounded_simulation_finds_the_segment_bound() {
        let sim = find_bounded_simulation(&FiniteOrder::chain(2), &FiniteOrder::chain(3)).unwrap();
        assert_eq!(sim.map, vec![0, 1]);
        assert_eq!(sim.bound, Some(2));
        // an order never bounds into itself
        let a = FiniteOrder::chain(3);
        assert!(find_bounded_simulation(&a, &a).is_none());
        // the empty order sits below the singleton with bound 0
        let sim = find_bounded_simulation(&FiniteOrder::chain(0), &FiniteOrder::chain(1)).unwrap();
        assert_eq!(sim.map, Vec::<usize>::new());
        assert_eq!(sim.bound, Some(0));
    }
}
