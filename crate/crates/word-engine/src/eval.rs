//! Two independent decision procedures for `u.v^ω ⊨ φ`.
//!
//! `eval_direct` walks positions forward, resolving each until/release by
//! a bounded scan around the lasso. `eval_backward` propagates subformula
//! sets backwards through the positions with the wrap-around rules and
//! returns the full satisfaction table. They share no evaluation logic,
//! so agreement between them (and the automaton route in the tree engine)
//! is a meaningful check.

use std::collections::HashMap;

use ltl_core::{desugar, indexed_closure, FNode, Formula};

use crate::word::UltimatelyPeriodicWord;

/// Per-position satisfaction sets `C_j` over the closure of the evaluated
/// (desugared) formula: `contains(i, j)` holds iff `formulas[i]` is
/// satisfied at position `j` of `u.v^ω`.
#[derive(Debug, Clone)]
pub struct SatisfactionTable {
    formulas: Vec<Formula>,
    rows: Vec<Vec<bool>>,
}

impl SatisfactionTable {
    /// Subformulas indexing the table, children before parents.
    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn positions(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn contains(&self, formula_idx: usize, position: usize) -> bool {
        self.rows[formula_idx][position]
    }

    /// The set `C_j` as formulas.
    pub fn set_at(&self, j: usize) -> Vec<Formula> {
        self.formulas
            .iter()
            .enumerate()
            .filter(|(i, _)| self.rows[*i][j])
            .map(|(_, f)| f.clone())
            .collect()
    }

    /// Checks every local-consistency rule, the two wrap-around
    /// requirements, and the until eventuality condition. Returns the
    /// first violated rule as text.
    pub fn check_consistency(&self, w: &UltimatelyPeriodicWord) -> Result<(), String> {
        let k = w.total_len();
        let idx: HashMap<&Formula, usize> = self
            .formulas
            .iter()
            .enumerate()
            .map(|(i, f)| (f, i))
            .collect();
        let loop_start = w.loop_start();
        for (i, f) in self.formulas.iter().enumerate() {
            for j in 0..k {
                let here = self.rows[i][j];
                let succ = w.succ(j);
                let ok = match f.node() {
                    FNode::True => here,
                    FNode::False => !here,
                    FNode::Atom(a) => here == w.letter(j).contains(a),
                    FNode::Not(g) => here != self.rows[idx[g]][j],
                    FNode::And(a, b) => here == (self.rows[idx[a]][j] && self.rows[idx[b]][j]),
                    FNode::Or(a, b) => here == (self.rows[idx[a]][j] || self.rows[idx[b]][j]),
                    FNode::Next(a) => here == self.rows[idx[a]][succ],
                    FNode::Until(a, b) => {
                        here == (self.rows[idx[b]][j]
                            || (self.rows[idx[a]][j] && self.rows[i][succ]))
                    }
                    FNode::Release(a, b) => {
                        here == (self.rows[idx[b]][j]
                            && (self.rows[idx[a]][j] || self.rows[i][succ]))
                    }
                    _ => return Err(format!("non-core operator in table: {}", f)),
                };
                if !ok {
                    return Err(format!("rule violated for {} at position {}", f, j));
                }
            }
            // Eventuality: an until asserted anywhere in the period needs a
            // witness for its right argument within the period.
            if let FNode::Until(_, b) = f.node() {
                let asserted = (loop_start..k).any(|j| self.rows[i][j]);
                let witnessed = (loop_start..k).any(|j| self.rows[idx[b]][j]);
                if asserted && !witnessed {
                    return Err(format!("eventuality violated for {}", f));
                }
            }
        }
        Ok(())
    }
}

/// Standard LTL semantics on `u.v^ω`, decided by forward scanning.
/// Depends only on the induced infinite word, not on the split.
pub fn eval_direct(f: &Formula, w: &UltimatelyPeriodicWord) -> bool {
    let core = desugar(f);
    let (cl, idx) = indexed_closure(&core);
    let k = w.total_len();
    let mut rows: Vec<Vec<bool>> = Vec::with_capacity(cl.len());
    for g in &cl {
        let row: Vec<bool> = match g.node() {
            FNode::True => vec![true; k],
            FNode::False => vec![false; k],
            FNode::Atom(a) => (0..k).map(|j| w.letter(j).contains(a)).collect(),
            FNode::Not(a) => rows[idx[a]].iter().map(|b| !b).collect(),
            FNode::And(a, b) => {
                let (ra, rb) = (&rows[idx[a]], &rows[idx[b]]);
                (0..k).map(|j| ra[j] && rb[j]).collect()
            }
            FNode::Or(a, b) => {
                let (ra, rb) = (&rows[idx[a]], &rows[idx[b]]);
                (0..k).map(|j| ra[j] || rb[j]).collect()
            }
            FNode::Next(a) => {
                let ra = &rows[idx[a]];
                (0..k).map(|j| ra[w.succ(j)]).collect()
            }
            FNode::Until(a, b) => {
                let (ra, rb) = (&rows[idx[a]], &rows[idx[b]]);
                (0..k).map(|j| scan_until(ra, rb, j, w)).collect()
            }
            FNode::Release(a, b) => {
                let (ra, rb) = (&rows[idx[a]], &rows[idx[b]]);
                (0..k).map(|j| scan_release(ra, rb, j, w)).collect()
            }
            _ => unreachable!("desugared formula"),
        };
        rows.push(row);
    }
    rows[idx[&core]][0]
}

/// Walks forward from `j`; after `k` steps every reachable position has
/// been inspected, so an unresolved until is false.
fn scan_until(c1: &[bool], c2: &[bool], j: usize, w: &UltimatelyPeriodicWord) -> bool {
    let mut p = j;
    for _ in 0..=w.total_len() {
        if c2[p] {
            return true;
        }
        if !c1[p] {
            return false;
        }
        p = w.succ(p);
    }
    false
}

fn scan_release(c1: &[bool], c2: &[bool], j: usize, w: &UltimatelyPeriodicWord) -> bool {
    let mut p = j;
    for _ in 0..=w.total_len() {
        if !c2[p] {
            return false;
        }
        if c1[p] {
            return true;
        }
        p = w.succ(p);
    }
    true
}

/// Backward propagation of the satisfaction sets `C_j`.
///
/// Atoms come from the letters; boolean operators are resolved locally;
/// next- and until-formulas propagate backwards, with the wrap rule
/// relating the last position to the loop start. The nondeterministic
/// guess of the last set is determinized: until rows start empty and grow
/// to the least fixpoint (which builds the eventuality requirement in),
/// release rows start full and shrink to the greatest fixpoint. Two
/// backward sweeps over the cycle normally suffice; sweeping repeats to
/// stability regardless.
pub fn eval_backward(
    f: &Formula,
    w: &UltimatelyPeriodicWord,
) -> (bool, SatisfactionTable) {
    let core = desugar(f);
    let (cl, idx) = indexed_closure(&core);
    let k = w.total_len();
    let mut rows: Vec<Vec<bool>> = Vec::with_capacity(cl.len());
    for g in &cl {
        let row: Vec<bool> = match g.node() {
            FNode::True => vec![true; k],
            FNode::False => vec![false; k],
            FNode::Atom(a) => (0..k).map(|j| w.letter(j).contains(a)).collect(),
            FNode::Not(a) => rows[idx[a]].iter().map(|b| !b).collect(),
            FNode::And(a, b) => {
                let (ra, rb) = (&rows[idx[a]], &rows[idx[b]]);
                (0..k).map(|j| ra[j] && rb[j]).collect()
            }
            FNode::Or(a, b) => {
                let (ra, rb) = (&rows[idx[a]], &rows[idx[b]]);
                (0..k).map(|j| ra[j] || rb[j]).collect()
            }
            FNode::Next(a) => {
                let ra = &rows[idx[a]];
                (0..k).map(|j| ra[w.succ(j)]).collect()
            }
            FNode::Until(a, b) => {
                let (ra, rb) = (&rows[idx[a]], &rows[idx[b]]);
                let mut row = vec![false; k];
                loop {
                    let mut changed = false;
                    for j in (0..k).rev() {
                        let v = rb[j] || (ra[j] && row[w.succ(j)]);
                        if v != row[j] {
                            row[j] = v;
                            changed = true;
                        }
                    }
                    if !changed {
                        break;
                    }
                }
                row
            }
            FNode::Release(a, b) => {
                let (ra, rb) = (&rows[idx[a]], &rows[idx[b]]);
                let mut row = vec![true; k];
                loop {
                    let mut changed = false;
                    for j in (0..k).rev() {
                        let v = rb[j] && (ra[j] || row[w.succ(j)]);
                        if v != row[j] {
                            row[j] = v;
                            changed = true;
                        }
                    }
                    if !changed {
                        break;
                    }
                }
                row
            }
            _ => unreachable!("desugared formula"),
        };
        rows.push(row);
    }
    let verdict = rows[idx[&core]][0];
    (
        verdict,
        SatisfactionTable {
            formulas: cl,
            rows,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use ltl_core::{parse, AtomSet};

    fn ap() -> AtomSet {
        AtomSet::new::<&str>(&[], &["p", "q"]).unwrap()
    }

    fn word(ap: &AtomSet, prefix: &[&[&str]], period: &[&[&str]]) -> UltimatelyPeriodicWord {
        let mk = |ls: &[&[&str]]| {
            ls.iter()
                .map(|names| ap.letter(names).unwrap())
                .collect::<Vec<_>>()
        };
        UltimatelyPeriodicWord::new(mk(prefix), mk(period)).unwrap()
    }

    #[test]
    fn direct_basics() {
        let ap = ap();
        let gp = parse("G p", &ap).unwrap();
        assert!(eval_direct(&gp, &word(&ap, &[], &[&["p"]])));
        let puq = parse("p U q", &ap).unwrap();
        assert!(eval_direct(&puq, &word(&ap, &[&["p"]], &[&["q"]])));
        // F G p on ({p}, ∅^ω): p fails forever after the prefix.
        let fgp = parse("F G p", &ap).unwrap();
        assert!(!eval_direct(&fgp, &word(&ap, &[&["p"]], &[&[]])));
    }

    #[test]
    fn backward_wrap_example() {
        // X p on (∅, ({p})^ω): position 1 wraps to itself.
        let ap = ap();
        let f = parse("X p", &ap).unwrap();
        let w = word(&ap, &[&[]], &[&["p"]]);
        let (sat, table) = eval_backward(&f, &w);
        assert!(sat);
        let c0: Vec<String> = table.set_at(0).iter().map(|f| f.to_string()).collect();
        let c1: Vec<String> = table.set_at(1).iter().map(|f| f.to_string()).collect();
        assert_eq!(c0, vec!["(X p)"]);
        assert_eq!(c1, vec!["p", "(X p)"]);
        table.check_consistency(&w).unwrap();
    }

    #[test]
    fn backward_eventuality_fails_without_witness() {
        // p U q on (ε, ({p} ∅)^ω): no position satisfies q.
        let ap = ap();
        let f = parse("p U q", &ap).unwrap();
        let w = word(&ap, &[], &[&["p"], &[]]);
        let (sat, table) = eval_backward(&f, &w);
        assert!(!sat);
        table.check_consistency(&w).unwrap();
    }

    #[test]
    fn evaluators_agree_on_random_instances() {
        let ap = AtomSet::new::<&str>(&[], &["p", "q", "r"]).unwrap();
        let mut rng = ltl_core::gen::rng(7);
        for _ in 0..400 {
            let f = ltl_core::gen::random_formula(&mut rng, &ap, 6);
            let k = 1 + (f.size() % 6);
            let (prefix, period) = ltl_core::gen::random_lasso(&mut rng, &ap, k);
            let w = UltimatelyPeriodicWord::new(prefix, period).unwrap();
            let d = eval_direct(&f, &w);
            let (b, table) = eval_backward(&f, &w);
            assert_eq!(d, b, "disagreement on {} / {:?}", f, w);
            table.check_consistency(&w).unwrap();
            // Split invariance: same infinite word, different pair.
            assert_eq!(d, eval_direct(&f, &w.unrolled_once()));
        }
    }

    #[test]
    fn table_rows_match_direct_per_subformula() {
        let ap = ap();
        let f = parse("(p U q) & X (q R p)", &ap).unwrap();
        let w = word(&ap, &[&["p"]], &[&["p", "q"], &[]]);
        let (_, table) = eval_backward(&f, &w);
        for (i, sub) in table.formulas().iter().enumerate() {
            for j in 0..w.total_len() {
                // Shift the word so position j becomes position 0.
                let shifted = shift(&w, j);
                assert_eq!(
                    table.contains(i, j),
                    eval_direct(sub, &shifted),
                    "sub {} at {}",
                    sub,
                    j
                );
            }
        }
    }

    /// The suffix word starting at position j, as a fresh lasso.
    fn shift(w: &UltimatelyPeriodicWord, j: usize) -> UltimatelyPeriodicWord {
        let prefix: Vec<_> = (j..w.total_len()).map(|i| w.letter(i)).collect();
        let period: Vec<_> = (0..w.period().len())
            .map(|i| w.period()[i])
            .collect();
        // prefix here covers positions j..k; the period then repeats.
        UltimatelyPeriodicWord::new(prefix, period).unwrap()
    }
}
