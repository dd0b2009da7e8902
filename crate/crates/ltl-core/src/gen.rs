//! Seeded random generators for formulas and letters, shared by the test
//! suites of the engine crates.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::atom::{AtomSet, Letter};
use crate::formula::Formula;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random formula over `atoms` with roughly `ops` operator nodes.
pub fn random_formula(rng: &mut StdRng, atoms: &AtomSet, ops: usize) -> Formula {
    if ops == 0 || atoms.is_empty() {
        return random_leaf(rng, atoms);
    }
    // Binary operators split the remaining budget.
    match rng.gen_range(0..10) {
        0 => Formula::not(random_formula(rng, atoms, ops - 1)),
        1 => Formula::next(random_formula(rng, atoms, ops - 1)),
        2 => Formula::eventually(random_formula(rng, atoms, ops - 1)),
        3 => Formula::globally(random_formula(rng, atoms, ops - 1)),
        n => {
            let left = rng.gen_range(0..ops);
            let (l, r) = (
                random_formula(rng, atoms, left),
                random_formula(rng, atoms, ops - 1 - left),
            );
            match n {
                4 | 5 => Formula::and(l, r),
                6 => Formula::or(l, r),
                7 => Formula::implies(l, r),
                8 => Formula::until(l, r),
                _ => Formula::release(l, r),
            }
        }
    }
}

fn random_leaf(rng: &mut StdRng, atoms: &AtomSet) -> Formula {
    if atoms.is_empty() {
        return if rng.gen() { Formula::tt() } else { Formula::ff() };
    }
    match rng.gen_range(0..8) {
        0 => Formula::tt(),
        1 => Formula::ff(),
        _ => {
            let i = rng.gen_range(0..atoms.len());
            Formula::atom(atoms.get(i).clone())
        }
    }
}

pub fn random_letter(rng: &mut StdRng, atoms: &AtomSet) -> Letter {
    let bound: u64 = if atoms.len() >= 63 {
        u64::MAX
    } else {
        (1u64 << atoms.len()) - 1
    };
    Letter::from_mask(rng.gen_range(0..=bound))
}

/// Random prefix/period letter lists with `|prefix| + |period| = k`
/// and a nonempty period.
pub fn random_lasso(rng: &mut StdRng, atoms: &AtomSet, k: usize) -> (Vec<Letter>, Vec<Letter>) {
    assert!(k >= 1);
    let period_len = rng.gen_range(1..=k);
    let prefix_len = k - period_len;
    let prefix = (0..prefix_len).map(|_| random_letter(rng, atoms)).collect();
    let period = (0..period_len).map(|_| random_letter(rng, atoms)).collect();
    (prefix, period)
}
