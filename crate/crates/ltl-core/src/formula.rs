//! LTL formulas as immutable, shareable syntax trees.

use std::fmt;
use std::sync::Arc;

use crate::atom::Atom;

/// One node of an LTL syntax tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FNode {
    True,
    False,
    Atom(Atom),
    Not(Formula),
    And(Formula, Formula),
    Or(Formula, Formula),
    Implies(Formula, Formula),
    Iff(Formula, Formula),
    Next(Formula),
    Until(Formula, Formula),
    Release(Formula, Formula),
    Eventually(Formula),
    Globally(Formula),
}

/// An LTL formula. Cheap to clone; structurally compared and hashed.
/// Immutable after construction and safe to share across threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Formula(Arc<FNode>);

// Generated formulas are deep chains; the default recursive drop of an
// owned chain overflows the 2 MiB test-thread stack. Children of uniquely
// owned nodes are detached onto an explicit worklist instead.
impl Drop for Formula {
    fn drop(&mut self) {
        if matches!(
            self.0.as_ref(),
            FNode::True | FNode::False | FNode::Atom(_)
        ) {
            return;
        }
        let mut work: Vec<Formula> = Vec::new();
        if let Some(node) = Arc::get_mut(&mut self.0) {
            detach_children(node, &mut work);
        }
        while let Some(mut f) = work.pop() {
            if let Some(node) = Arc::get_mut(&mut f.0) {
                detach_children(node, &mut work);
            }
        }
    }
}

fn detach_children(node: &mut FNode, out: &mut Vec<Formula>) {
    fn take(slot: &mut Formula, out: &mut Vec<Formula>) {
        static SENTINEL: std::sync::OnceLock<Arc<FNode>> = std::sync::OnceLock::new();
        let sentinel = SENTINEL.get_or_init(|| Arc::new(FNode::True)).clone();
        out.push(std::mem::replace(slot, Formula(sentinel)));
    }
    match node {
        FNode::True | FNode::False | FNode::Atom(_) => {}
        FNode::Not(a) | FNode::Next(a) | FNode::Eventually(a) | FNode::Globally(a) => {
            take(a, out)
        }
        FNode::And(a, b)
        | FNode::Or(a, b)
        | FNode::Implies(a, b)
        | FNode::Iff(a, b)
        | FNode::Until(a, b)
        | FNode::Release(a, b) => {
            take(a, out);
            take(b, out);
        }
    }
}

impl Formula {
    pub fn node(&self) -> &FNode {
        &self.0
    }

    /// Stable pointer identity, usable as a memoization key while the
    /// formula is alive.
    pub fn id(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    pub fn tt() -> Formula {
        Formula(Arc::new(FNode::True))
    }

    pub fn ff() -> Formula {
        Formula(Arc::new(FNode::False))
    }

    pub fn atom(a: Atom) -> Formula {
        Formula(Arc::new(FNode::Atom(a)))
    }

    pub fn not(f: Formula) -> Formula {
        Formula(Arc::new(FNode::Not(f)))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula(Arc::new(FNode::And(l, r)))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula(Arc::new(FNode::Or(l, r)))
    }

    pub fn implies(l: Formula, r: Formula) -> Formula {
        Formula(Arc::new(FNode::Implies(l, r)))
    }

    pub fn iff(l: Formula, r: Formula) -> Formula {
        Formula(Arc::new(FNode::Iff(l, r)))
    }

    pub fn next(f: Formula) -> Formula {
        Formula(Arc::new(FNode::Next(f)))
    }

    pub fn until(l: Formula, r: Formula) -> Formula {
        Formula(Arc::new(FNode::Until(l, r)))
    }

    pub fn release(l: Formula, r: Formula) -> Formula {
        Formula(Arc::new(FNode::Release(l, r)))
    }

    pub fn eventually(f: Formula) -> Formula {
        Formula(Arc::new(FNode::Eventually(f)))
    }

    pub fn globally(f: Formula) -> Formula {
        Formula(Arc::new(FNode::Globally(f)))
    }

    /// `X^n f` as n nested next nodes.
    pub fn next_n(f: Formula, n: usize) -> Formula {
        let mut out = f;
        for _ in 0..n {
            out = Formula::next(out);
        }
        out
    }

    /// Conjunction of a list; empty list is `true`. Right-nested.
    pub fn and_all<I: IntoIterator<Item = Formula>>(fs: I) -> Formula {
        let items: Vec<Formula> = fs.into_iter().collect();
        match items.len() {
            0 => Formula::tt(),
            _ => {
                let mut it = items.into_iter().rev();
                let mut acc = it.next().unwrap();
                for f in it {
                    acc = Formula::and(f, acc);
                }
                acc
            }
        }
    }

    /// Disjunction of a list; empty list is `false`. Right-nested.
    pub fn or_all<I: IntoIterator<Item = Formula>>(fs: I) -> Formula {
        let items: Vec<Formula> = fs.into_iter().collect();
        match items.len() {
            0 => Formula::ff(),
            _ => {
                let mut it = items.into_iter().rev();
                let mut acc = it.next().unwrap();
                for f in it {
                    acc = Formula::or(f, acc);
                }
                acc
            }
        }
    }

    /// Number of syntax nodes (iterative; trees can be deep X-chains).
    pub fn size(&self) -> usize {
        let mut count = 0;
        let mut stack = vec![self.clone()];
        while let Some(f) = stack.pop() {
            count += 1;
            match f.node() {
                FNode::True | FNode::False | FNode::Atom(_) => {}
                FNode::Not(a)
                | FNode::Next(a)
                | FNode::Eventually(a)
                | FNode::Globally(a) => stack.push(a.clone()),
                FNode::And(a, b)
                | FNode::Or(a, b)
                | FNode::Implies(a, b)
                | FNode::Iff(a, b)
                | FNode::Until(a, b)
                | FNode::Release(a, b) => {
                    stack.push(a.clone());
                    stack.push(b.clone());
                }
            }
        }
        count
    }

    /// Maximum nesting of `X` along any path of the tree.
    pub fn x_depth(&self) -> usize {
        // Iterative post-order; depth values memoized per node pointer.
        use std::collections::HashMap;
        let mut depth: HashMap<usize, usize> = HashMap::new();
        let mut stack: Vec<(Formula, bool)> = vec![(self.clone(), false)];
        while let Some((f, visited)) = stack.pop() {
            if visited {
                let d = |g: &Formula| depth[&g.id()];
                let v = match f.node() {
                    FNode::True | FNode::False | FNode::Atom(_) => 0,
                    FNode::Not(a) | FNode::Eventually(a) | FNode::Globally(a) => d(a),
                    FNode::Next(a) => d(a) + 1,
                    FNode::And(a, b)
                    | FNode::Or(a, b)
                    | FNode::Implies(a, b)
                    | FNode::Iff(a, b)
                    | FNode::Until(a, b)
                    | FNode::Release(a, b) => d(a).max(d(b)),
                };
                depth.insert(f.id(), v);
            } else {
                stack.push((f.clone(), true));
                match f.node() {
                    FNode::True | FNode::False | FNode::Atom(_) => {}
                    FNode::Not(a)
                    | FNode::Next(a)
                    | FNode::Eventually(a)
                    | FNode::Globally(a) => stack.push((a.clone(), false)),
                    FNode::And(a, b)
                    | FNode::Or(a, b)
                    | FNode::Implies(a, b)
                    | FNode::Iff(a, b)
                    | FNode::Until(a, b)
                    | FNode::Release(a, b) => {
                        stack.push((a.clone(), false));
                        stack.push((b.clone(), false));
                    }
                }
            }
        }
        depth[&self.id()]
    }

    /// True if the formula contains no temporal operator other than `X`.
    pub fn is_x_bounded(&self) -> bool {
        let mut stack = vec![self.clone()];
        while let Some(f) = stack.pop() {
            match f.node() {
                FNode::True | FNode::False | FNode::Atom(_) => {}
                FNode::Until(_, _)
                | FNode::Release(_, _)
                | FNode::Eventually(_)
                | FNode::Globally(_) => return false,
                FNode::Not(a) | FNode::Next(a) => stack.push(a.clone()),
                FNode::And(a, b)
                | FNode::Or(a, b)
                | FNode::Implies(a, b)
                | FNode::Iff(a, b) => {
                    stack.push(a.clone());
                    stack.push(b.clone());
                }
            }
        }
        true
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Canonical text form. `parse(print(f))` is structurally equal to `f`:
/// every compound is fully parenthesized. Written with an explicit stack
/// since reduction formulas are deep X-chains.
impl fmt::Display for Formula {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        enum Item {
            F(Formula),
            Str(&'static str),
        }
        fn push_bin(stack: &mut Vec<Item>, a: &Formula, b: &Formula, op: &'static str) {
            stack.push(Item::Str(")"));
            stack.push(Item::F(b.clone()));
            stack.push(Item::Str(op));
            stack.push(Item::F(a.clone()));
            stack.push(Item::Str("("));
        }
        let mut stack = vec![Item::F(self.clone())];
        while let Some(item) = stack.pop() {
            match item {
                Item::Str(s) => out.write_str(s)?,
                Item::F(f) => match f.node() {
                    FNode::True => out.write_str("true")?,
                    FNode::False => out.write_str("false")?,
                    FNode::Atom(a) => write!(out, "{}", a.name())?,
                    FNode::Not(a) => {
                        stack.push(Item::Str(")"));
                        stack.push(Item::F(a.clone()));
                        stack.push(Item::Str("(! "));
                    }
                    FNode::Next(a) => {
                        stack.push(Item::Str(")"));
                        stack.push(Item::F(a.clone()));
                        stack.push(Item::Str("(X "));
                    }
                    FNode::Eventually(a) => {
                        stack.push(Item::Str(")"));
                        stack.push(Item::F(a.clone()));
                        stack.push(Item::Str("(F "));
                    }
                    FNode::Globally(a) => {
                        stack.push(Item::Str(")"));
                        stack.push(Item::F(a.clone()));
                        stack.push(Item::Str("(G "));
                    }
                    FNode::And(a, b) => push_bin(&mut stack, a, b, " & "),
                    FNode::Or(a, b) => push_bin(&mut stack, a, b, " | "),
                    FNode::Implies(a, b) => push_bin(&mut stack, a, b, " -> "),
                    FNode::Iff(a, b) => push_bin(&mut stack, a, b, " <-> "),
                    FNode::Until(a, b) => push_bin(&mut stack, a, b, " U "),
                    FNode::Release(a, b) => push_bin(&mut stack, a, b, " R "),
                },
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atom::AtomSet;

    #[test]
    fn prints_canonically() {
        let ap = AtomSet::new::<&str>(&[], &["p", "q", "a"]).unwrap();
        let p = Formula::atom(ap.lookup("p").unwrap().clone());
        let q = Formula::atom(ap.lookup("q").unwrap().clone());
        let a = Formula::atom(ap.lookup("a").unwrap().clone());
        assert_eq!(Formula::until(p.clone(), q).to_string(), "(p U q)");
        assert_eq!(
            Formula::next(Formula::next(p.clone())).to_string(),
            "(X (X p))"
        );
        assert_eq!(Formula::globally(a).to_string(), "(G a)");
        assert_eq!(Formula::next_n(p.clone(), 0), p);
    }

    #[test]
    fn size_and_depth() {
        let ap = AtomSet::new::<&str>(&[], &["p"]).unwrap();
        let p = Formula::atom(ap.lookup("p").unwrap().clone());
        let f = Formula::and(Formula::next_n(p.clone(), 3), p.clone());
        assert_eq!(f.size(), 6);
        assert_eq!(f.x_depth(), 3);
        assert!(f.is_x_bounded());
        assert!(!Formula::until(p.clone(), p).is_x_bounded());
    }

    #[test]
    fn deep_chains_do_not_overflow() {
        let ap = AtomSet::new::<&str>(&[], &["p"]).unwrap();
        let p = Formula::atom(ap.lookup("p").unwrap().clone());
        let f = Formula::next_n(p, 100_000);
        assert_eq!(f.x_depth(), 100_000);
        assert_eq!(f.size(), 100_001);
        assert!(f.to_string().starts_with("(X (X "));
    }
}
