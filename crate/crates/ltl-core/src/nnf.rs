//! Negation normal form and operator desugaring.

use crate::formula::{FNode, Formula};

/// Rewrites into negation normal form: negations appear only on atoms,
/// and `F`, `G`, `->`, `<->` are eliminated in favor of `U`, `R`, `&`, `|`.
/// The result is semantically equivalent on every infinite word.
pub fn negation_normal_form(f: &Formula) -> Formula {
    nnf(f, false)
}

fn nnf(f: &Formula, negated: bool) -> Formula {
    match f.node() {
        FNode::True => {
            if negated {
                Formula::ff()
            } else {
                Formula::tt()
            }
        }
        FNode::False => {
            if negated {
                Formula::tt()
            } else {
                Formula::ff()
            }
        }
        FNode::Atom(_) => {
            if negated {
                Formula::not(f.clone())
            } else {
                f.clone()
            }
        }
        FNode::Not(a) => nnf(a, !negated),
        FNode::And(a, b) => {
            if negated {
                Formula::or(nnf(a, true), nnf(b, true))
            } else {
                Formula::and(nnf(a, false), nnf(b, false))
            }
        }
        FNode::Or(a, b) => {
            if negated {
                Formula::and(nnf(a, true), nnf(b, true))
            } else {
                Formula::or(nnf(a, false), nnf(b, false))
            }
        }
        FNode::Implies(a, b) => {
            // a -> b  ==  !a | b
            if negated {
                Formula::and(nnf(a, false), nnf(b, true))
            } else {
                Formula::or(nnf(a, true), nnf(b, false))
            }
        }
        FNode::Iff(a, b) => {
            // a <-> b  ==  (a & b) | (!a & !b)
            if negated {
                Formula::or(
                    Formula::and(nnf(a, false), nnf(b, true)),
                    Formula::and(nnf(a, true), nnf(b, false)),
                )
            } else {
                Formula::or(
                    Formula::and(nnf(a, false), nnf(b, false)),
                    Formula::and(nnf(a, true), nnf(b, true)),
                )
            }
        }
        FNode::Next(a) => Formula::next(nnf(a, negated)),
        FNode::Until(a, b) => {
            if negated {
                Formula::release(nnf(a, true), nnf(b, true))
            } else {
                Formula::until(nnf(a, false), nnf(b, false))
            }
        }
        FNode::Release(a, b) => {
            if negated {
                Formula::until(nnf(a, true), nnf(b, true))
            } else {
                Formula::release(nnf(a, false), nnf(b, false))
            }
        }
        FNode::Eventually(a) => {
            // F a == true U a;  !F a == false R !a
            if negated {
                Formula::release(Formula::ff(), nnf(a, true))
            } else {
                Formula::until(Formula::tt(), nnf(a, false))
            }
        }
        FNode::Globally(a) => {
            // G a == false R a;  !G a == true U !a
            if negated {
                Formula::until(Formula::tt(), nnf(a, true))
            } else {
                Formula::release(Formula::ff(), nnf(a, false))
            }
        }
    }
}

/// Eliminates `->`, `<->`, `F`, `G` in favor of the core operators,
/// keeping general negation. Evaluators work on this core form so they
/// have fewer cases and a smaller closure.
pub fn desugar(f: &Formula) -> Formula {
    match f.node() {
        FNode::True | FNode::False | FNode::Atom(_) => f.clone(),
        FNode::Not(a) => Formula::not(desugar(a)),
        FNode::And(a, b) => Formula::and(desugar(a), desugar(b)),
        FNode::Or(a, b) => Formula::or(desugar(a), desugar(b)),
        FNode::Implies(a, b) => Formula::or(Formula::not(desugar(a)), desugar(b)),
        FNode::Iff(a, b) => {
            let (da, db) = (desugar(a), desugar(b));
            Formula::or(
                Formula::and(da.clone(), db.clone()),
                Formula::and(Formula::not(da), Formula::not(db)),
            )
        }
        FNode::Next(a) => Formula::next(desugar(a)),
        FNode::Until(a, b) => Formula::until(desugar(a), desugar(b)),
        FNode::Release(a, b) => Formula::release(desugar(a), desugar(b)),
        FNode::Eventually(a) => Formula::until(Formula::tt(), desugar(a)),
        FNode::Globally(a) => Formula::release(Formula::ff(), desugar(a)),
    }
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
    fn textbook_dualities() {
        let ap = ap();
        let nnf = |s: &str| negation_normal_form(&parse(s, &ap).unwrap());
        assert_eq!(nnf("!(p U q)"), parse("(!p) R (!q)", &ap).unwrap());
        assert_eq!(nnf("!(X p)"), parse("X (!p)", &ap).unwrap());
        assert_eq!(nnf("G p"), parse("false R p", &ap).unwrap());
        assert_eq!(nnf("!!p"), parse("p", &ap).unwrap());
    }

    #[test]
    fn nnf_only_negates_atoms() {
        let ap = ap();
        let g = negation_normal_form(&parse("!((p -> q) U (G (p <-> q)))", &ap).unwrap());
        fn check(f: &Formula) {
            match f.node() {
                FNode::Not(a) => assert!(matches!(a.node(), FNode::Atom(_))),
                FNode::Implies(_, _)
                | FNode::Iff(_, _)
                | FNode::Eventually(_)
                | FNode::Globally(_) => panic!("sugar survived: {}", f),
                FNode::And(a, b)
                | FNode::Or(a, b)
                | FNode::Until(a, b)
                | FNode::Release(a, b) => {
                    check(a);
                    check(b);
                }
                FNode::Next(a) => check(a),
                _ => {}
            }
        }
        check(&g);
    }
}
