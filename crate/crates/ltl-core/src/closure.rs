//! Subformula closure: all distinct subformulas in bottom-up order.

use std::collections::HashMap;

use crate::formula::{FNode, Formula};

/// All distinct subformulas of `f`, children before parents, duplicates
/// merged structurally. The order is deterministic across runs: a
/// post-order walk of the tree (left child first), keeping first
/// occurrences only.
pub fn closure(f: &Formula) -> Vec<Formula> {
    let mut out: Vec<Formula> = Vec::new();
    let mut seen: HashMap<Formula, usize> = HashMap::new();
    // Explicit stack; reduction formulas nest too deep for recursion-comfort.
    let mut stack: Vec<(Formula, bool)> = vec![(f.clone(), false)];
    while let Some((g, expanded)) = stack.pop() {
        if seen.contains_key(&g) {
            continue;
        }
        if expanded {
            if !seen.contains_key(&g) {
                seen.insert(g.clone(), out.len());
                out.push(g);
            }
            continue;
        }
        stack.push((g.clone(), true));
        match g.node() {
            FNode::True | FNode::False | FNode::Atom(_) => {}
            FNode::Not(a) | FNode::Next(a) | FNode::Eventually(a) | FNode::Globally(a) => {
                stack.push((a.clone(), false));
            }
            FNode::And(a, b)
            | FNode::Or(a, b)
            | FNode::Implies(a, b)
            | FNode::Iff(a, b)
            | FNode::Until(a, b)
            | FNode::Release(a, b) => {
                // Right pushed first so the left child is visited first.
                stack.push((b.clone(), false));
                stack.push((a.clone(), false));
            }
        }
    }
    out
}

/// Closure plus an index map from each subformula to its position.
pub fn indexed_closure(f: &Formula) -> (Vec<Formula>, HashMap<Formula, usize>) {
    let list = closure(f);
    let map = list
        .iter()
        .enumerate()
        .map(|(i, g)| (g.clone(), i))
        .collect();
    (list, map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atom::AtomSet;
    use crate::parse::parse;

    fn ap() -> AtomSet {
        AtomSet::new::<&str>(&[], &["p", "q"]).unwrap()
    }

    #[test]
    fn bottom_up_order() {
        let ap = ap();
        let f = parse("p U q", &ap).unwrap();
        let c = closure(&f);
        let strs: Vec<String> = c.iter().map(|g| g.to_string()).collect();
        assert_eq!(strs, vec!["p", "q", "(p U q)"]);

        let f = parse("X p & p", &ap).unwrap();
        let strs: Vec<String> = closure(&f).iter().map(|g| g.to_string()).collect();
        assert_eq!(strs, vec!["p", "(X p)", "((X p) & p)"]);

        let f = parse("p", &ap).unwrap();
        assert_eq!(closure(&f).len(), 1);
    }

    #[test]
    fn duplicates_merge_and_children_precede_parents() {
        let ap = ap();
        let f = parse("(p U q) & (p U q)", &ap).unwrap();
        let c = closure(&f);
        assert_eq!(c.len(), 4);
        assert!(c.len() <= f.size());
        let (_, idx) = indexed_closure(&f);
        for g in &c {
            match g.node() {
                crate::formula::FNode::Until(a, b) => {
                    assert!(idx[a] < idx[g]);
                    assert!(idx[b] < idx[g]);
                }
                _ => {}
            }
        }
    }
}
