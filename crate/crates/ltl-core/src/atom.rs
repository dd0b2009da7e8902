//! Atomic propositions, atom sets, and letters.
//!
//! The atom set `AP = I ∪ O` is partitioned into input and output
//! propositions. A `Letter` is a subset of a declared `AtomSet`,
//! represented as a bitmask over the set's atom indices.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::LtlError;

/// Maximum number of atoms in a single `AtomSet`. Letters are `u64` masks.
pub const MAX_ATOMS: usize = 64;

/// Whether an atom is an input (environment) or output (system) proposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AtomKind {
    Input,
    Output,
}

/// An atomic proposition. Atoms are created through an [`AtomSet`] and carry
/// their index within it, so letters can be tested with bit operations.
#[derive(Debug, Clone)]
pub struct Atom {
    name: Arc<str>,
    kind: AtomKind,
    index: usize,
}

impl Atom {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> AtomKind {
        self.kind
    }

    /// Index of this atom within its declaring `AtomSet`.
    pub fn index(&self) -> usize {
        self.index
    }
}

impl PartialEq for Atom {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index && self.name == other.name && self.kind == other.kind
    }
}

impl Eq for Atom {}

impl std::hash::Hash for Atom {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.name.hash(state);
        self.index.hash(state);
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// Words reserved by the formula grammar; they can never name atoms.
const RESERVED: &[&str] = &["true", "false", "X", "F", "G", "U", "R"];

fn valid_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A declared, ordered set of atomic propositions partitioned into inputs
/// and outputs. Immutable after construction.
#[derive(Debug, Clone)]
pub struct AtomSet {
    atoms: Vec<Atom>,
    by_name: HashMap<Arc<str>, usize>,
    input_mask: u64,
}

impl AtomSet {
    /// Builds an atom set from input and output names, in the given order
    /// (inputs first). Names must be unique, grammar-valid, and not reserved.
    pub fn new<S: AsRef<str>>(inputs: &[S], outputs: &[S]) -> Result<Self, LtlError> {
        let mut set = AtomSet {
            atoms: Vec::new(),
            by_name: HashMap::new(),
            input_mask: 0,
        };
        for name in inputs {
            set.push(name.as_ref(), AtomKind::Input)?;
        }
        for name in outputs {
            set.push(name.as_ref(), AtomKind::Output)?;
        }
        Ok(set)
    }

    fn push(&mut self, name: &str, kind: AtomKind) -> Result<(), LtlError> {
        if !valid_atom_name(name) || RESERVED.contains(&name) {
            return Err(LtlError::InvalidAtomName(name.to_string()));
        }
        if self.by_name.contains_key(name) {
            return Err(LtlError::DuplicateAtom(name.to_string()));
        }
        if self.atoms.len() >= MAX_ATOMS {
            return Err(LtlError::TooManyAtoms);
        }
        let index = self.atoms.len();
        let name: Arc<str> = Arc::from(name);
        if kind == AtomKind::Input {
            self.input_mask |= 1 << index;
        }
        self.atoms.push(Atom {
            name: name.clone(),
            kind,
            index,
        });
        self.by_name.insert(name, index);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn get(&self, index: usize) -> &Atom {
        &self.atoms[index]
    }

    pub fn lookup(&self, name: &str) -> Option<&Atom> {
        self.by_name.get(name).map(|&i| &self.atoms[i])
    }

    pub fn inputs(&self) -> impl Iterator<Item = &Atom> {
        self.atoms.iter().filter(|a| a.kind == AtomKind::Input)
    }

    pub fn outputs(&self) -> impl Iterator<Item = &Atom> {
        self.atoms.iter().filter(|a| a.kind == AtomKind::Output)
    }

    pub fn input_count(&self) -> usize {
        self.input_mask.count_ones() as usize
    }

    pub fn output_count(&self) -> usize {
        self.len() - self.input_count()
    }

    pub fn input_mask(&self) -> u64 {
        self.input_mask
    }

    /// The full-alphabet letter (all atoms present).
    pub fn full_letter(&self) -> Letter {
        if self.atoms.len() == MAX_ATOMS {
            Letter { mask: u64::MAX }
        } else {
            Letter {
                mask: (1u64 << self.atoms.len()) - 1,
            }
        }
    }

    /// Builds a letter from atom names; errors on unknown names.
    pub fn letter<S: AsRef<str>>(&self, names: &[S]) -> Result<Letter, LtlError> {
        let mut mask = 0u64;
        for n in names {
            let a = self
                .lookup(n.as_ref())
                .ok_or_else(|| LtlError::UnknownAtom(n.as_ref().to_string()))?;
            mask |= 1 << a.index();
        }
        Ok(Letter { mask })
    }

    /// All `2^|AP|` letters in mask order.
    pub fn all_letters(&self) -> Vec<Letter> {
        let n = self.atoms.len();
        assert!(n < 32, "alphabet too large to enumerate");
        (0u64..(1 << n)).map(|mask| Letter { mask }).collect()
    }

    /// Sorted names of a letter's atoms (used by serialized formats).
    pub fn letter_names(&self, letter: Letter) -> Vec<String> {
        let mut names: Vec<String> = self
            .atoms
            .iter()
            .filter(|a| letter.contains(a))
            .map(|a| a.name.to_string())
            .collect();
        names.sort();
        names
    }
}

/// A letter: a subset of the atoms of one `AtomSet`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Letter {
    mask: u64,
}

impl Letter {
    pub const EMPTY: Letter = Letter { mask: 0 };

    pub fn from_mask(mask: u64) -> Self {
        Letter { mask }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, atom: &Atom) -> bool {
        self.mask & (1 << atom.index()) != 0
    }

    pub fn contains_index(&self, index: usize) -> bool {
        self.mask & (1 << index) != 0
    }

    pub fn with(&self, atom: &Atom) -> Letter {
        Letter {
            mask: self.mask | (1 << atom.index()),
        }
    }

    pub fn without(&self, atom: &Atom) -> Letter {
        Letter {
            mask: self.mask & !(1 << atom.index()),
        }
    }

    pub fn union(&self, other: Letter) -> Letter {
        Letter {
            mask: self.mask | other.mask,
        }
    }

    pub fn is_subset_of_set(&self, set: &AtomSet) -> bool {
        if set.len() == MAX_ATOMS {
            true
        } else {
            self.mask & !((1u64 << set.len()) - 1) == 0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atom_set_partitions_inputs_and_outputs() {
        let ap = AtomSet::new(&["i0"], &["o0", "o1"]).unwrap();
        assert_eq!(ap.input_count(), 1);
        assert_eq!(ap.output_count(), 2);
        assert_eq!(ap.lookup("o1").unwrap().index(), 2);
        assert_eq!(ap.lookup("i0").unwrap().kind(), AtomKind::Input);
    }

    #[test]
    fn rejects_bad_names() {
        assert!(AtomSet::new::<&str>(&[], &["1abc"]).is_err());
        assert!(AtomSet::new::<&str>(&[], &["X"]).is_err());
        assert!(AtomSet::new::<&str>(&[], &["true"]).is_err());
        assert!(AtomSet::new(&["p"], &["p"]).is_err());
    }

    #[test]
    fn letter_membership() {
        let ap = AtomSet::new::<&str>(&[], &["p", "q"]).unwrap();
        let l = ap.letter(&["q"]).unwrap();
        assert!(!l.contains(ap.lookup("p").unwrap()));
        assert!(l.contains(ap.lookup("q").unwrap()));
        assert_eq!(ap.all_letters().len(), 4);
        assert_eq!(ap.letter_names(l), vec!["q".to_string()]);
    }
}
