//! Hopf morphisms from H_CK^D and C_CK^D into the (quasi-)shuffle algebras,
//! determined by a seed on trees. Each is computed twice: by lifting through
//! the cofree coproduct degree by degree, and by closed sums over orders,
//! preorders and (contracted) generalized partitions.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::One;

use crate::bialgebra::{reduced_delta, GradedBialgebra};
use crate::contraction::{cont_flat, for_each_edge_subset, normal_form_flat};
use crate::error::{Error, Result};
use crate::forest::{Atom, EdgeLabel, EdgeTree, Flat, Forest, Label, Tree};
use crate::linear::{LinComb, Tensor, Q};
use crate::words::{Bracket, DWord, Letter};

/// Vertex-decorated trees, the generators of H_CK^D.
pub type VTree = Tree<Atom>;

/// Trees a seed can be evaluated on.
pub trait SeedTree: Clone + Ord + fmt::Display {
    /// The decoration of the one-generator tree (`•_a` or `E(a)`), if any.
    fn generator(&self) -> Option<Atom>;
    fn parse_tree(s: &str) -> Result<Self>;
}

impl SeedTree for VTree {
    fn generator(&self) -> Option<Atom> {
        self.children.is_empty().then(|| self.label.clone())
    }

    fn parse_tree(s: &str) -> Result<Self> {
        Ok(Tree::parse(s)?.canonical())
    }
}

impl SeedTree for EdgeTree {
    fn generator(&self) -> Option<Atom> {
        match self.children.as_slice() {
            [(a, leaf)] if leaf.children.is_empty() => Some(a.clone()),
            _ => None,
        }
    }

    fn parse_tree(s: &str) -> Result<Self> {
        Ok(Tree::parse(s)?.canonical())
    }
}

/// The linear map φ from trees to letters that determines the morphism.
#[derive(Clone, Debug)]
pub enum Seed<T: Ord> {
    /// Finite table, zero elsewhere.
    Table(BTreeMap<T, LinComb<Letter>>),
    /// `•_a ↦ a` (or `E(a) ↦ a`), zero on larger trees.
    Arborification,
    /// Each tree is sent to its own fresh letter `φ(T)`; every other seed
    /// is a specialization of this one.
    Symbolic,
}

impl<T: SeedTree> Seed<T> {
    pub fn value(&self, t: &T) -> LinComb<Letter> {
        match self {
            Seed::Table(map) => map.get(t).cloned().unwrap_or_default(),
            Seed::Arborification => t
                .generator()
                .map(|a| LinComb::basis(Letter::atom(a)))
                .unwrap_or_default(),
            Seed::Symbolic => LinComb::basis(Letter::atom(Atom::new(&format!("φ({t})")))),
        }
    }

    /// Parses lines `tree => value`, where the value is `0` or a sum of
    /// optionally scaled letters such as `a + 2*[b c]`. `#` starts a comment.
    pub fn parse_table(text: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (lhs, rhs) = line
                .split_once("=>")
                .ok_or_else(|| Error::parse(lineno + 1, "seed lines read `tree => value`"))?;
            let tree = T::parse_tree(lhs.trim())?;
            let value = parse_letter_sum(rhs.trim()).map_err(|e| Error::parse(lineno + 1, e.to_string()))?;
            map.insert(tree, value);
        }
        Ok(Seed::Table(map))
    }
}

fn parse_letter_sum(s: &str) -> Result<LinComb<Letter>> {
    let mut out = LinComb::zero();
    if s == "0" {
        return Ok(out);
    }
    for term in s.split('+') {
        let term = term.trim();
        let (coef, letter) = match term.split_once('*') {
            Some((c, l)) => (
                c.trim()
                    .parse::<Q>()
                    .map_err(|_| Error::parse(0, format!("bad coefficient `{c}`")))?,
                l.trim(),
            ),
            None => (Q::one(), term),
        };
        out.add_term(Letter::parse(letter)?, coef);
    }
    Ok(out)
}

/// The codomain: shuffle algebra, or quasi-shuffle algebra with a bracket.
#[derive(Clone, Debug)]
pub enum Target {
    Shuffle,
    QuasiShuffle(Bracket),
}

impl Target {
    fn bracket(&self) -> Option<&Bracket> {
        match self {
            Target::Shuffle => None,
            Target::QuasiShuffle(b) => Some(b),
        }
    }

    /// Product in the target algebra.
    pub fn mul(&self, x: &LinComb<DWord>, y: &LinComb<DWord>) -> LinComb<DWord> {
        use crate::words::{QuasiShuffleAlgebra, ShuffleAlgebra};
        match self {
            Target::Shuffle => {
                let sh = ShuffleAlgebra { atoms: Vec::new() };
                x.bilinear(y, |a, b| sh.mul(a, b))
            }
            Target::QuasiShuffle(bracket) => {
                let csh = QuasiShuffleAlgebra {
                    atoms: Vec::new(),
                    bracket: bracket.clone(),
                    max_letter: 1,
                };
                x.bilinear(y, |a, b| csh.mul(a, b))
            }
        }
    }

    /// `[x1 … xn]` extended multilinearly; zero for the shuffle target
    /// unless `n = 1`.
    pub fn bracket_all(&self, parts: &[LinComb<Letter>]) -> LinComb<Letter> {
        let (first, rest) = parts.split_first().expect("nonempty bracket");
        let mut acc = first.clone();
        for p in rest {
            acc = match self.bracket() {
                None => LinComb::zero(),
                Some(b) => acc.bilinear(p, |x, y| {
                    b.merge(x, y).map(LinComb::basis).unwrap_or_default()
                }),
            };
        }
        acc
    }
}

/// Concatenation of letter combinations into words.
fn word_of(letters: &[LinComb<Letter>]) -> LinComb<DWord> {
    let mut acc = LinComb::basis(DWord::empty());
    for l in letters {
        acc = acc.bilinear(l, |w, x| {
            let mut v = w.0.clone();
            v.push(x.clone());
            LinComb::basis(DWord(v))
        });
    }
    acc
}

/// Reduced deconcatenation.
fn reduced_deconcatenation(x: &LinComb<DWord>) -> LinComb<Tensor<DWord, DWord>> {
    x.map_linear(|w| {
        LinComb::from_basis_iter(
            (1..w.len()).map(|i| Tensor(DWord(w.0[..i].to_vec()), DWord(w.0[i..].to_vec()))),
        )
    })
}

/// The morphism obtained by lifting through the cofree target: for a tree,
/// `(Φ⊗Φ)Δ̃(T)` is the reduced coproduct of a unique element without
/// letters of length one, read off from the first-letter splits, and the
/// seed supplies the length-one part. Forests go through the product.
pub struct Lift<'a, V: Label, E: EdgeLabel, H> {
    source: &'a H,
    target: Target,
    seed: &'a Seed<Tree<V, E>>,
    cache: RefCell<HashMap<Forest<V, E>, LinComb<DWord>>>,
}

impl<'a, V, E, H> Lift<'a, V, E, H>
where
    V: Label,
    E: EdgeLabel,
    Tree<V, E>: SeedTree,
    H: GradedBialgebra<B = Forest<V, E>>,
{
    pub fn new(source: &'a H, target: Target, seed: &'a Seed<Tree<V, E>>) -> Self {
        Lift {
            source,
            target,
            seed,
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn apply(&self, f: &Forest<V, E>) -> Result<LinComb<DWord>> {
        if let Some(v) = self.cache.borrow().get(f) {
            return Ok(v.clone());
        }
        let value = match f.trees.as_slice() {
            [] => LinComb::basis(DWord::empty()),
            [t] => self.apply_tree(f, t)?,
            trees => {
                let mut acc = LinComb::basis(DWord::empty());
                for t in trees {
                    let ft = Forest::from_trees(vec![t.clone()]);
                    acc = self.target.mul(&acc, &self.apply(&ft)?);
                }
                acc
            }
        };
        self.cache.borrow_mut().insert(f.clone(), value.clone());
        Ok(value)
    }

    pub fn apply_lin(&self, x: &LinComb<Forest<V, E>>) -> Result<LinComb<DWord>> {
        let mut out = LinComb::zero();
        for (b, c) in x.iter() {
            out.add_scaled(&self.apply(b)?, c);
        }
        Ok(out)
    }

    fn apply_tree(&self, f: &Forest<V, E>, t: &Tree<V, E>) -> Result<LinComb<DWord>> {
        let mut x = LinComb::zero();
        for (Tensor(l, r), c) in reduced_delta(self.source, f).iter() {
            let (pl, pr) = (self.apply(l)?, self.apply(r)?);
            x.add_scaled(&crate::linear::tensor(&pl, &pr), c);
        }
        let mut w = LinComb::zero();
        for (Tensor(u, v), c) in x.iter() {
            if u.len() == 1 {
                w.add_term(u.concat(v), c.clone());
            }
        }
        if reduced_deconcatenation(&w) != x {
            return Err(Error::Contract(format!(
                "(Φ⊗Φ)Δ̃({f}) is not a reduced coproduct in the target"
            )));
        }
        Ok(&w + &word_of(&[self.seed.value(t)]))
    }
}

/// Component roots of the kept edges, and for every vertex its component root.
fn components<V: Label, E: EdgeLabel>(flat: &Flat<V, E>, kept: &[bool]) -> (Vec<usize>, Vec<usize>) {
    let mut root = vec![0; flat.len()];
    for v in 0..flat.len() {
        root[v] = if kept[v] {
            root[flat.parent[v].expect("kept edge")]
        } else {
            v
        };
    }
    let roots = (0..flat.len()).filter(|&v| !kept[v]).collect();
    (roots, root)
}

/// Calls `visit` on each ordered partition of `items` into blocks such that
/// an item comes in a strictly earlier block than its `below` item. Blocks
/// are singletons unless `merge` is set.
fn upper_first_orders(
    items: &[usize],
    below: &dyn Fn(usize) -> Option<usize>,
    merge: bool,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    fn go(
        items: &[usize],
        below: &dyn Fn(usize) -> Option<usize>,
        merge: bool,
        placed: &mut Vec<bool>,
        blocks: &mut Vec<Vec<usize>>,
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if placed.iter().all(|&p| p) {
            visit(blocks);
            return;
        }
        let available: Vec<usize> = (0..items.len())
            .filter(|&i| {
                !placed[i]
                    && (0..items.len()).all(|j| placed[j] || below(items[j]) != Some(items[i]))
            })
            .collect();
        let max_mask: u64 = 1 << available.len();
        for mask in 1..max_mask {
            if !merge && mask.count_ones() != 1 {
                continue;
            }
            let block: Vec<usize> = available
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &i)| i)
                .collect();
            for &i in &block {
                placed[i] = true;
            }
            blocks.push(block.iter().map(|&i| items[i]).collect());
            go(items, below, merge, placed, blocks, visit);
            blocks.pop();
            for &i in &block {
                placed[i] = false;
            }
        }
    }
    go(items, below, merge, &mut vec![false; items.len()], &mut Vec::new(), visit);
}

/// Closed form on H_CK^D: sum over edge subsets `e` and over linear orders
/// (shuffle target) or linear preorders (quasi-shuffle target) of
/// `Cont_e(F)`, reading the seeds of the components of `Part_e(F)` from the
/// top down and bracketing the ones at the same level.
pub fn phi_hck_closed(f: &Forest<Atom>, seed: &Seed<VTree>, target: &Target) -> LinComb<DWord> {
    let flat = Flat::from_forest(f);
    let merge = matches!(target, Target::QuasiShuffle(_));
    let mut out = LinComb::zero();
    for_each_edge_subset(&flat, |kept| {
        let (roots, root) = components(&flat, kept);
        let letters: HashMap<usize, LinComb<Letter>> = roots
            .iter()
            .map(|&r| {
                let keep: Vec<bool> = (0..flat.len()).map(|v| root[v] == r).collect();
                let tree = flat.restrict(&keep).to_forest().trees.remove(0);
                (r, seed.value(&tree))
            })
            .collect();
        let below = |r: usize| flat.parent[r].map(|p| root[p]);
        upper_first_orders(&roots, &below, merge, &mut |blocks| {
            let parts: Vec<LinComb<Letter>> = blocks
                .iter()
                .map(|b| target.bracket_all(&b.iter().map(|r| letters[r].clone()).collect::<Vec<_>>()))
                .collect();
            out.add_assign(&word_of(&parts));
        });
    });
    out
}

/// An ordered sequence of groups of edge blocks, edges named by their
/// upper vertex in the depth-first order of the canonical forest. Groups
/// of size one throughout make a generalized partition.
pub type GroupedPartition = Vec<Vec<Vec<usize>>>;

/// Calls `visit` on every sequence of groups of blocks covering the edges,
/// where with the earlier groups contracted, each block is connected and
/// the blocks of a group share no vertex.
fn grouped_partitions<V: Label, E: EdgeLabel>(
    flat: &Flat<V, E>,
    max_group: usize,
    visit: &mut dyn FnMut(&GroupedPartition),
) {
    fn class_of<V: Label, E: EdgeLabel>(flat: &Flat<V, E>, contracted: &[bool]) -> Vec<usize> {
        let mut c = vec![0; flat.len()];
        for v in 0..flat.len() {
            c[v] = if contracted[v] {
                c[flat.parent[v].expect("edge")]
            } else {
                v
            };
        }
        c
    }
    fn connected_vertices<V: Label, E: EdgeLabel>(
        flat: &Flat<V, E>,
        class: &[usize],
        block: &[usize],
    ) -> Option<Vec<usize>> {
        let mut verts: Vec<usize> = Vec::new();
        let mut links: Vec<(usize, usize)> = Vec::new();
        for &v in block {
            let (a, b) = (class[v], class[flat.parent[v].expect("edge")]);
            verts.extend([a, b]);
            links.push((a, b));
        }
        verts.sort_unstable();
        verts.dedup();
        let mut reached = vec![verts[0]];
        let mut grew = true;
        while grew {
            grew = false;
            for &(a, b) in &links {
                let (ha, hb) = (reached.contains(&a), reached.contains(&b));
                if ha != hb {
                    reached.push(if ha { b } else { a });
                    grew = true;
                }
            }
        }
        (reached.len() == verts.len()).then_some(verts)
    }
    fn go<V: Label, E: EdgeLabel>(
        flat: &Flat<V, E>,
        max_group: usize,
        contracted: &mut Vec<bool>,
        remaining: &[usize],
        groups: &mut GroupedPartition,
        visit: &mut dyn FnMut(&GroupedPartition),
    ) {
        if remaining.is_empty() {
            visit(groups);
            return;
        }
        let class = class_of(flat, contracted);
        let mut blocks: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for mask in 1u64..1 << remaining.len() {
            let block: Vec<usize> = remaining
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            if let Some(verts) = connected_vertices(flat, &class, &block) {
                blocks.push((block, verts));
            }
        }
        // Groups are sets: choose blocks in increasing index order.
        let mut chosen: Vec<usize> = Vec::new();
        fn pick<V: Label, E: EdgeLabel>(
            start: usize,
            blocks: &[(Vec<usize>, Vec<usize>)],
            chosen: &mut Vec<usize>,
            max_group: usize,
            flat: &Flat<V, E>,
            contracted: &mut Vec<bool>,
            remaining: &[usize],
            groups: &mut GroupedPartition,
            visit: &mut dyn FnMut(&GroupedPartition),
        ) {
            if !chosen.is_empty() {
                let group: Vec<Vec<usize>> = chosen.iter().map(|&i| blocks[i].0.clone()).collect();
                let used: Vec<usize> = group.concat();
                for &e in &used {
                    contracted[e] = true;
                }
                let rest: Vec<usize> = remaining.iter().copied().filter(|e| !used.contains(e)).collect();
                groups.push(group);
                go(flat, max_group, contracted, &rest, groups, visit);
                groups.pop();
                for &e in &used {
                    contracted[e] = false;
                }
            }
            if chosen.len() == max_group {
                return;
            }
            for i in start..blocks.len() {
                let disjoint = chosen.iter().all(|&j| {
                    blocks[j].1.iter().all(|v| !blocks[i].1.contains(v))
                });
                if disjoint {
                    chosen.push(i);
                    pick(i + 1, blocks, chosen, max_group, flat, contracted, remaining, groups, visit);
                    chosen.pop();
                }
            }
        }
        pick(0, &blocks, &mut chosen, max_group, flat, contracted, remaining, groups, visit);
    }
    let edges = flat.edges();
    go(flat, max_group, &mut vec![false; flat.len()], &edges, &mut Vec::new(), visit);
}

/// Generalized partitions of a forest, as ordered lists of edge blocks.
pub fn generalized_partitions<V: Label, E: EdgeLabel>(f: &Forest<V, E>) -> Vec<Vec<Vec<usize>>> {
    let flat = Flat::from_forest(f);
    let mut out = Vec::new();
    grouped_partitions(&flat, 1, &mut |g| out.push(g.iter().map(|grp| grp[0].clone()).collect()));
    out
}

/// Generalized contracted partitions: ordered lists of groups of blocks.
pub fn generalized_contracted_partitions<V: Label, E: EdgeLabel>(f: &Forest<V, E>) -> Vec<GroupedPartition> {
    let flat = Flat::from_forest(f);
    let mut out = Vec::new();
    grouped_partitions(&flat, usize::MAX, &mut |g| out.push(g.clone()));
    out
}

/// `Cont` of all edges outside `block`, as a tree.
pub fn block_tree<V: Label, E: EdgeLabel>(flat: &Flat<V, E>, block: &[usize]) -> Tree<V, E> {
    let kept: Vec<bool> = (0..flat.len())
        .map(|v| flat.parent[v].is_some() && !block.contains(&v))
        .collect();
    let mut nf = normal_form_flat(&cont_flat(flat, &kept));
    assert_eq!(nf.len(), 1, "a block contracts to a single tree");
    nf.trees.remove(0)
}

/// Closed form on C_CK^D: sum over generalized partitions (shuffle target)
/// or generalized contracted partitions (quasi-shuffle target) of the words
/// of block seeds, the blocks of a group bracketed together.
pub fn phi_cck_closed(f: &Forest<(), Atom>, seed: &Seed<EdgeTree>, target: &Target) -> LinComb<DWord> {
    let flat = Flat::from_forest(f);
    let max_group = if matches!(target, Target::QuasiShuffle(_)) { usize::MAX } else { 1 };
    let mut out = LinComb::zero();
    grouped_partitions(&flat, max_group, &mut |groups| {
        let parts: Vec<LinComb<Letter>> = groups
            .iter()
            .map(|grp| {
                let seeds: Vec<LinComb<Letter>> =
                    grp.iter().map(|b| seed.value(&block_tree(&flat, b))).collect();
                target.bracket_all(&seeds)
            })
            .collect();
        out.add_assign(&word_of(&parts));
    });
    out
}

/// Renders a grouped partition with edge decorations, e.g. `[b c] a`.
pub fn render_groups(f: &Forest<(), Atom>, groups: &GroupedPartition) -> String {
    let flat = Flat::from_forest(f);
    let block = |b: &Vec<usize>| {
        let names: Vec<String> = b
            .iter()
            .map(|&v| flat.edge[v].as_ref().expect("edge").to_string())
            .collect();
        format!("{{{}}}", names.join(","))
    };
    groups
        .iter()
        .map(|g| {
            if g.len() == 1 {
                block(&g[0])
            } else {
                let mut names: Vec<String> = g.iter().map(block).collect();
                names.sort();
                format!("[{}]", names.join(" "))
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}
