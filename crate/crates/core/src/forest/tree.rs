use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An opaque decoration, interned as a shared string.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(s: &str) -> Self {
        Atom(Arc::from(s))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Whether `s` is usable as an atom in the text grammar.
    pub fn is_valid(s: &str) -> bool {
        let mut chars = s.chars();
        match chars.next() {
            Some(c) if c.is_alphabetic() || c == '_' => {}
            _ => return false,
        }
        chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Parses a comma separated atom list such as `a,b,c`.
pub fn atoms(list: &str) -> Vec<Atom> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(Atom::new)
        .collect()
}

/// A vertex label.
pub trait Label: Clone + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    fn write_label(&self, out: &mut String);
    fn parse_label(s: &str) -> Option<Self>;

    /// Position in the total (pre)order; zero for unordered labels.
    fn level(&self) -> u32 {
        0
    }

    fn with_level(&self, _level: u32) -> Self {
        self.clone()
    }

    /// Replaces the levels by their packing. No-op for unordered labels.
    fn repack(_labels: &mut [Self]) {}
}

impl Label for () {
    fn write_label(&self, out: &mut String) {
        out.push('*');
    }

    fn parse_label(s: &str) -> Option<Self> {
        (s == "*").then_some(())
    }
}

impl Label for u32 {
    fn write_label(&self, out: &mut String) {
        out.push_str(&self.to_string());
    }

    fn parse_label(s: &str) -> Option<Self> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        s.parse().ok().filter(|&v| v > 0)
    }

    fn level(&self) -> u32 {
        *self
    }

    fn with_level(&self, level: u32) -> Self {
        level
    }

    fn repack(labels: &mut [Self]) {
        let mut values: Vec<u32> = labels.to_vec();
        values.sort_unstable();
        values.dedup();
        for l in labels.iter_mut() {
            *l = values.binary_search(l).expect("value present") as u32 + 1;
        }
    }
}

impl Label for Atom {
    fn write_label(&self, out: &mut String) {
        out.push_str(self.as_str());
    }

    fn parse_label(s: &str) -> Option<Self> {
        Atom::is_valid(s).then(|| Atom::new(s))
    }
}

/// An edge label; `()` for undecorated edges.
pub trait EdgeLabel: Clone + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    const DECORATED: bool;
    fn write_edge(&self, out: &mut String);
    fn parse_edge(s: &str) -> Option<Self>;
}

impl EdgeLabel for () {
    const DECORATED: bool = false;
    fn write_edge(&self, _out: &mut String) {}
    fn parse_edge(_s: &str) -> Option<Self> {
        Some(())
    }
}

impl EdgeLabel for Atom {
    const DECORATED: bool = true;
    fn write_edge(&self, out: &mut String) {
        out.push_str(self.as_str());
        out.push(':');
    }
    fn parse_edge(s: &str) -> Option<Self> {
        Atom::is_valid(s).then(|| Atom::new(s))
    }
}

/// A rooted tree; each child hangs from an edge carrying an `E` label.
///
/// The derived order compares the root label, then the children list, with
/// each child compared by edge label first. Canonical trees keep children
/// sorted in this order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tree<V, E = ()> {
    pub label: V,
    pub children: Vec<(E, Tree<V, E>)>,
}

impl<V: Label, E: EdgeLabel> Tree<V, E> {
    pub fn leaf(label: V) -> Self {
        Tree {
            label,
            children: Vec::new(),
        }
    }

    pub fn new(label: V, children: Vec<(E, Tree<V, E>)>) -> Self {
        Tree { label, children }
    }

    pub fn vertex_count(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(|(_, c)| c.vertex_count())
            .sum::<usize>()
    }

    pub fn edge_count(&self) -> usize {
        self.vertex_count() - 1
    }

    pub fn canonicalize(&mut self) {
        for (_, c) in self.children.iter_mut() {
            c.canonicalize();
        }
        self.children.sort();
    }

    pub fn canonical(mut self) -> Self {
        self.canonicalize();
        self
    }

    pub fn is_canonical(&self) -> bool {
        self.children.windows(2).all(|w| w[0] <= w[1])
            && self.children.iter().all(|(_, c)| c.is_canonical())
    }

    pub(crate) fn write(&self, out: &mut String) {
        self.label.write_label(out);
        out.push('[');
        for (i, (e, c)) in self.children.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            e.write_edge(out);
            c.write(out);
        }
        out.push(']');
    }

    /// Parses a single tree without canonicalizing it.
    pub fn parse(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let t = p.tree::<V, E>()?;
        p.finish()?;
        Ok(t)
    }

    pub fn into_forest(self) -> Forest<V, E> {
        Forest { trees: vec![self] }
    }
}

impl<V: Label, E: EdgeLabel> fmt::Display for Tree<V, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write(&mut s);
        f.write_str(&s)
    }
}

/// A rooted forest. Commutative families keep it canonical (trees sorted);
/// planar families keep the tree sequence verbatim.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Forest<V, E = ()> {
    pub trees: Vec<Tree<V, E>>,
}

impl<V, E> Default for Forest<V, E> {
    fn default() -> Self {
        Forest { trees: Vec::new() }
    }
}

impl<V: Label, E: EdgeLabel> Forest<V, E> {
    /// The empty forest, unit of every algebra of forests.
    pub fn one() -> Self {
        Forest { trees: Vec::new() }
    }

    /// Canonical forest from a multiset of trees.
    pub fn from_trees(trees: Vec<Tree<V, E>>) -> Self {
        Forest { trees }.canonical()
    }

    /// Planar forest: tree and sibling orders are kept as given.
    pub fn planar(trees: Vec<Tree<V, E>>) -> Self {
        Forest { trees }
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// Number of trees.
    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.trees.iter().map(Tree::vertex_count).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.vertex_count() - self.trees.len()
    }

    pub fn canonicalize(&mut self) {
        for t in self.trees.iter_mut() {
            t.canonicalize();
        }
        self.trees.sort();
    }

    pub fn canonical(mut self) -> Self {
        self.canonicalize();
        self
    }

    pub fn is_canonical(&self) -> bool {
        self.trees.windows(2).all(|w| w[0] <= w[1]) && self.trees.iter().all(Tree::is_canonical)
    }

    /// Largest level among the labels (the `max` of a (pre)ordered forest).
    pub fn max_level(&self) -> u32 {
        fn walk<V: Label, E>(t: &Tree<V, E>) -> u32 {
            t.children
                .iter()
                .map(|(_, c)| walk(c))
                .fold(t.label.level(), u32::max)
        }
        self.trees.iter().map(walk).max().unwrap_or(0)
    }

    /// Adds `k` to every level.
    pub fn shifted(&self, k: u32) -> Self {
        fn walk<V: Label, E: Clone>(t: &Tree<V, E>, k: u32) -> Tree<V, E> {
            Tree {
                label: t.label.with_level(t.label.level() + k),
                children: t
                    .children
                    .iter()
                    .map(|(e, c)| (e.clone(), walk(c, k)))
                    .collect(),
            }
        }
        if k == 0 {
            return self.clone();
        }
        Forest {
            trees: self.trees.iter().map(|t| walk(t, k)).collect(),
        }
    }

    /// Parses without canonicalizing.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Forest::one());
        }
        let mut p = Parser::new(s);
        let mut trees = vec![p.tree::<V, E>()?];
        loop {
            p.skip_spaces();
            if p.at_end() {
                break;
            }
            trees.push(p.tree::<V, E>()?);
        }
        Ok(Forest { trees })
    }

    /// Parses and canonicalizes.
    pub fn parse_canonical(s: &str) -> Result<Self> {
        Ok(Self::parse(s)?.canonical())
    }
}

impl<V: Label, E: EdgeLabel> fmt::Display for Forest<V, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trees.is_empty() {
            return f.write_str("1");
        }
        let mut s = String::new();
        for (i, t) in self.trees.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            t.write(&mut s);
        }
        f.write_str(&s)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn skip_spaces(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(
                self.pos,
                format!("expected `{}`", c as char),
            ))
        }
    }

    fn token(&mut self, stop: &[u8]) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if stop.contains(&c) || c == b' ' {
                break;
            }
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn tree<V: Label, E: EdgeLabel>(&mut self) -> Result<Tree<V, E>> {
        self.skip_spaces();
        let start = self.pos;
        let tok = self.token(b"[],:");
        let label = V::parse_label(tok)
            .ok_or_else(|| Error::parse(start, format!("invalid vertex label `{tok}`")))?;
        self.expect(b'[')?;
        let mut children = Vec::new();
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(Tree { label, children });
        }
        loop {
            let edge = if E::DECORATED {
                let at = self.pos;
                let tok = self.token(b"[],:");
                let e = E::parse_edge(tok)
                    .ok_or_else(|| Error::parse(at, format!("invalid edge decoration `{tok}`")))?;
                self.expect(b':')?;
                e
            } else {
                E::parse_edge("").expect("undecorated edge")
            };
            let child = self.tree::<V, E>()?;
            children.push((edge, child));
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b']') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(Error::parse(self.pos, "expected `,` or `]`")),
            }
        }
        Ok(Tree { label, children })
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_spaces();
        if self.at_end() {
            Ok(())
        } else {
            Err(Error::parse(self.pos, "trailing input"))
        }
    }
}
