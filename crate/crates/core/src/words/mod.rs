//! Permutations, packed words, decorated words and their shuffles.

mod algebras;

pub use algebras::{
    wqsym_d_to_csh_d, DecoratedFQSym, DecoratedWQSym, FQSym, QuasiShuffleAlgebra, ShuffleAlgebra,
    WQSym, WQSymStar,
};

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::forest::{Atom, Label};

/// A word over positive integers: a permutation or a packed word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn is_packed(&self) -> bool {
        pack(&self.0) == self.0
    }

    pub fn is_permutation(&self) -> bool {
        self.is_packed() && self.max() as usize == self.len()
    }

    /// Parses `(2 1 3)`, `(213)` (one digit per letter) or `1` for the empty word.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s == "()" {
            return Ok(Word::empty());
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(0, "a word is written `(a1 a2 ... an)`"))?;
        let letters: Option<Vec<u32>> = if inner.contains(char::is_whitespace) {
            inner.split_whitespace().map(u32::parse_label).collect()
        } else {
            inner.chars().map(|c| u32::parse_label(&c.to_string())).collect()
        };
        letters
            .map(Word)
            .ok_or_else(|| Error::parse(1, "word letters must be positive integers"))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(" "))
    }
}

/// Order-preserving relettering of the letters onto `{1..k}`.
pub fn pack(w: &[u32]) -> Vec<u32> {
    let mut v = w.to_vec();
    u32::repack(&mut v);
    v
}

/// Standardization of a word with distinct letters.
pub fn standardize(w: &[u32]) -> Result<Vec<u32>> {
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return Err(Error::Contract(format!(
            "standardization needs distinct letters, got {}",
            Word(w.to_vec())
        )));
    }
    Ok(pack(w))
}

/// The (k,l)-shuffles ζ, each written as the word ζ(1)…ζ(k+l).
pub fn shuffles(k: usize, l: usize) -> Vec<Vec<u32>> {
    sjshuffles(k, l)
        .into_iter()
        .filter(|z| z.iter().copied().max().unwrap_or(0) as usize == k + l)
        .collect()
}

/// The (k,l)-surjective shuffles: surjections onto `{1..m}` increasing on
/// `{1..k}` and on `{k+1..k+l}`.
pub fn sjshuffles(k: usize, l: usize) -> Vec<Vec<u32>> {
    fn go(i: usize, j: usize, k: usize, l: usize, next: u32, zeta: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == k && j == l {
            out.push(zeta.clone());
            return;
        }
        if i < k {
            zeta[i] = next;
            go(i + 1, j, k, l, next + 1, zeta, out);
        }
        if j < l {
            zeta[k + j] = next;
            go(i, j + 1, k, l, next + 1, zeta, out);
        }
        if i < k && j < l {
            zeta[i] = next;
            zeta[k + j] = next;
            go(i + 1, j + 1, k, l, next + 1, zeta, out);
        }
    }
    let mut out = Vec::new();
    go(0, 0, k, l, 1, &mut vec![0; k + l], &mut out);
    out.sort();
    out
}

/// A (k,l)-quasi-shuffle: a surjective shuffle whose fibers have one or two
/// elements, one from each block.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QuasiShuffle {
    pub k: usize,
    pub l: usize,
    pub zeta: Vec<u32>,
}

impl QuasiShuffle {
    /// The type r = k + l − |image|.
    pub fn r(&self) -> usize {
        self.k + self.l - self.zeta.iter().copied().max().unwrap_or(0) as usize
    }

    /// For each output position, the input positions mapped to it.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let m = self.zeta.iter().copied().max().unwrap_or(0) as usize;
        let mut fib = vec![Vec::new(); m];
        for (i, &z) in self.zeta.iter().enumerate() {
            fib[z as usize - 1].push(i);
        }
        fib
    }
}

pub fn quasi_shuffles(k: usize, l: usize) -> Vec<QuasiShuffle> {
    sjshuffles(k, l)
        .into_iter()
        .map(|zeta| QuasiShuffle { k, l, zeta })
        .collect()
}

/// A letter of a decorated word: a nonempty multiset of atoms, the element
/// `[a1 … ap]` of the free commutative semigroup on the atoms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(Vec<Atom>);

impl Letter {
    pub fn atom(a: Atom) -> Self {
        Letter(vec![a])
    }

    pub fn from_atoms(mut atoms: Vec<Atom>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::Contract("a letter needs at least one atom".into()));
        }
        atoms.sort();
        Ok(Letter(atoms))
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn union(&self, other: &Letter) -> Letter {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        v.sort();
        Letter(v)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let atoms: Option<Vec<Atom>> = inner.split_whitespace().map(Atom::parse_label).collect();
            return Letter::from_atoms(atoms.ok_or_else(|| Error::parse(0, format!("bad bracket letter `{s}`")))?);
        }
        Atom::parse_label(s)
            .map(Letter::atom)
            .ok_or_else(|| Error::parse(0, format!("bad letter `{s}`")))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        let parts: Vec<&str> = self.0.iter().map(Atom::as_str).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// A word of letters, basis of Sh^D and Csh^D.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct DWord(pub Vec<Letter>);

impl DWord {
    pub fn empty() -> Self {
        DWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn from_atoms(atoms: &[&str]) -> Self {
        DWord(atoms.iter().map(|a| Letter::atom(Atom::new(a))).collect())
    }

    pub fn concat(&self, other: &DWord) -> DWord {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        DWord(v)
    }

    /// Parses `(a [b c] d)` or `1`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s == "()" {
            return Ok(DWord::empty());
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(0, "a decorated word is written `(a [b c] d)`"))?;
        let mut letters = Vec::new();
        let mut rest = inner.trim_start();
        while !rest.is_empty() {
            let end = if rest.starts_with('[') {
                rest.find(']').map(|i| i + 1)
            } else {
                Some(rest.find(char::is_whitespace).unwrap_or(rest.len()))
            }
            .ok_or_else(|| Error::parse(0, "unclosed bracket letter"))?;
            letters.push(Letter::parse(&rest[..end])?);
            rest = rest[end..].trim_start();
        }
        Ok(DWord(letters))
    }
}

impl fmt::Display for DWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(Letter::to_string).collect();
        write!(f, "({})", parts.join(" "))
    }
}

/// The associative commutative product `[·,·]` on letters.
#[derive(Clone, Debug)]
pub enum Bracket {
    /// Free commutative semigroup: multiset union.
    Free,
    /// `[a b] = 0`: quasi-shuffles of positive type vanish.
    Zero,
    /// A finite table on atoms, assumed associative and commutative.
    Table(Arc<BTreeMap<(Atom, Atom), Atom>>),
}

impl Bracket {
    /// Builds a table bracket, checking closure, commutativity and associativity.
    pub fn table(entries: BTreeMap<(Atom, Atom), Atom>) -> Result<Self> {
        let atoms: Vec<Atom> = entries
            .keys()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .chain(entries.values().cloned())
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        let get = |a: &Atom, b: &Atom| entries.get(&(a.clone(), b.clone())).or_else(|| entries.get(&(b.clone(), a.clone())));
        for a in &atoms {
            for b in &atoms {
                let ab = get(a, b).ok_or_else(|| Error::Contract(format!("bracket table misses [{a} {b}]")))?;
                if let (Some(x), Some(y)) = (entries.get(&(a.clone(), b.clone())), entries.get(&(b.clone(), a.clone()))) {
                    if x != y {
                        return Err(Error::Contract(format!("bracket table is not commutative at [{a} {b}]")));
                    }
                }
                for c in &atoms {
                    let left = get(ab, c);
                    let bc = get(b, c).expect("closed");
                    let right = get(a, bc);
                    if left != right {
                        return Err(Error::Contract(format!("bracket table is not associative at {a}, {b}, {c}")));
                    }
                }
            }
        }
        Ok(Bracket::Table(Arc::new(entries)))
    }

    pub fn merge(&self, a: &Letter, b: &Letter) -> Option<Letter> {
        match self {
            Bracket::Free => Some(a.union(b)),
            Bracket::Zero => None,
            Bracket::Table(t) => {
                let (x, y) = (a.atoms(), b.atoms());
                if x.len() != 1 || y.len() != 1 {
                    return None;
                }
                t.get(&(x[0].clone(), y[0].clone()))
                    .or_else(|| t.get(&(y[0].clone(), x[0].clone())))
                    .map(|c| Letter::atom(c.clone()))
            }
        }
    }
}

/// A word with one decoration per position, drawn as two superposed rows.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct DecoWord {
    pub word: Vec<u32>,
    pub deco: Vec<Atom>,
}

impl DecoWord {
    pub fn new(word: Vec<u32>, deco: Vec<Atom>) -> Result<Self> {
        if word.len() != deco.len() {
            return Err(Error::Contract("word and decoration rows differ in length".into()));
        }
        Ok(DecoWord { word, deco })
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Parses `(2 1 1 | y x z)`, `(211 | yxz)` or `1`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s == "()" {
            return Ok(DecoWord::default());
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(0, "a decorated word is written `(2 1 1 | y x z)`"))?;
        let (w, d) = inner
            .split_once('|')
            .ok_or_else(|| Error::parse(0, "missing `|` between the rows"))?;
        let word = Word::parse(&format!("({})", w.trim()))?.0;
        let d = d.trim();
        let deco: Option<Vec<Atom>> = if d.contains(char::is_whitespace) {
            d.split_whitespace().map(Atom::parse_label).collect()
        } else {
            d.chars().map(|c| Atom::parse_label(&c.to_string())).collect()
        };
        DecoWord::new(word, deco.ok_or_else(|| Error::parse(0, "bad decoration row"))?)
    }
}

impl fmt::Display for DecoWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        let w: Vec<String> = self.word.iter().map(u32::to_string).collect();
        let d: Vec<&str> = self.deco.iter().map(Atom::as_str).collect();
        write!(f, "({} | {})", w.join(" "), d.join(" "))
    }
}
