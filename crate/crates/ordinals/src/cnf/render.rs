//! Canonical textual rendering: descending omega-powers with decimal
//! coefficients, e.g. `w^(w^1*2) + w^2*3 + 5`. The output re-parses to the
//! same value under the expression grammar (`^` binds tighter than `*`,
//! which binds tighter than `+`).

use super::{Cnf, CnfTree};

/// Decomposes into terms (exponent, coefficient) with strictly descending
/// exponents and coefficients >= 1. Zero decomposes into no terms.
pub fn terms(a: &Cnf) -> Vec<(Cnf, u64)> {
    let mut out: Vec<(Cnf, u64)> = Vec::new();
    let mut t = a.tree();
    while let CnfTree::Node(l, r) = t {
        let exp = Cnf::from_tree_unchecked((**l).clone());
        match out.last_mut() {
            Some((e, k)) if *e == exp => *k += 1,
            _ => out.push((exp, 1)),
        }
        t = r;
    }
    out
}

/// Canonical string: `w` by default, the Greek letter with `unicode`.
pub fn render(a: &Cnf, unicode: bool) -> String {
    let w = if unicode { "\u{3c9}" } else { "w" };
    let parts = terms(a);
    if parts.is_empty() {
        return "0".to_string();
    }
    let rendered: Vec<String> = parts
        .iter()
        .map(|(e, k)| {
            if e.is_zero() {
                return k.to_string();
            }
            let es = render(e, unicode);
            let base = if es.contains('+') || es.contains('*') {
                format!("{w}^({es})")
            } else {
                format!("{w}^{es}")
            };
            if *k == 1 {
                base
            } else {
                format!("{base}*{k}")
            }
        })
        .collect();
    rendered.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::{add, mul, omega_pow};

    fn w() -> Cnf {
        Cnf::omega()
    }

    fn n(k: u64) -> Cnf {
        Cnf::from_nat(k)
    }

    #[test]
    fn renders_canonical_sums() {
        assert_eq!(render(&Cnf::zero(), false), "0");
        assert_eq!(render(&n(3), false), "3");
        assert_eq!(render(&w(), false), "w^1");
        let v = add(&mul(&w(), &n(2)), &n(3));
        assert_eq!(render(&v, false), "w^1*2 + 3");
        let big = add(&mul(&omega_pow(&w()), &n(1)), &add(&mul(&w(), &n(2)), &n(3)));
        assert_eq!(render(&big, false), "w^w^1 + w^1*2 + 3");
    }

    #[test]
    fn parenthesizes_compound_exponents() {
        let e = add(&w(), &n(1));
        assert_eq!(render(&omega_pow(&e), false), "w^(w^1 + 1)");
        let e2 = mul(&w(), &n(2));
        assert_eq!(render(&omega_pow(&e2), false), "w^(w^1*2)");
        // pure towers stay bare
        assert_eq!(render(&omega_pow(&omega_pow(&w())), false), "w^w^w^1");
    }

    #[test]
    fn unicode_flag_swaps_symbol() {
        let v = add(&w(), &n(1));
        assert_eq!(render(&v, true), "\u{3c9}^1 + 1");
    }

    #[test]
    fn terms_group_equal_exponents() {
        let v = add(&mul(&w(), &n(3)), &n(2));
        let ts = terms(&v);
        assert_eq!(ts.len(), 2);
        assert_eq!(ts[0], (n(1), 3));
        assert_eq!(ts[1], (Cnf::zero(), 2));
    }
}
