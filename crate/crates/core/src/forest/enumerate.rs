//! Exhaustive, duplicate-free enumeration of forests by degree.

use std::collections::BTreeSet;

use super::family::{Family, Grading};
use super::flat::Flat;
use super::tree::{Atom, EdgeLabel, Forest, Label, Tree};
use crate::error::{Error, Result};

/// Rooted forests with `n` vertices, canonical and sorted.
fn shapes_by_vertices(n: usize) -> Vec<Forest<()>> {
    let mut level: BTreeSet<Forest<()>> = BTreeSet::from([Forest::one()]);
    for _ in 0..n {
        let mut next = BTreeSet::new();
        for f in &level {
            let flat = Flat::from_forest(f);
            for parent in std::iter::once(None).chain((0..flat.len()).map(Some)) {
                let mut g = flat.clone();
                g.parent.push(parent);
                g.label.push(());
                g.edge.push(parent.map(|_| ()));
                next.insert(g.to_forest());
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// Rooted forests with `n` edges and no isolated vertex.
fn shapes_by_edges_quotient(n: usize) -> Vec<Forest<()>> {
    let mut level: BTreeSet<Forest<()>> = BTreeSet::from([Forest::one()]);
    let ladder = Tree::new((), vec![((), Tree::leaf(()))]);
    for _ in 0..n {
        let mut next = BTreeSet::new();
        for f in &level {
            let mut with_new_tree = f.clone();
            with_new_tree.trees.push(ladder.clone());
            next.insert(with_new_tree.canonical());
            let flat = Flat::from_forest(f);
            for parent in 0..flat.len() {
                let mut g = flat.clone();
                g.parent.push(Some(parent));
                g.label.push(());
                g.edge.push(Some(()));
                next.insert(g.to_forest());
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

fn has_isolated<V: Label, E: EdgeLabel>(f: &Forest<V, E>) -> bool {
    f.trees.iter().any(|t| t.children.is_empty())
}

/// Rooted (unlabeled) forest shapes of degree `n`.
pub fn rooted(grading: Grading, n: usize, quotient: bool) -> Result<Vec<Forest<()>>> {
    match (grading, quotient) {
        (Grading::Vertices, false) => Ok(shapes_by_vertices(n)),
        (Grading::Vertices, true) => Ok(shapes_by_vertices(n)
            .into_iter()
            .filter(|f| !has_isolated(f))
            .collect()),
        (Grading::Edges, true) => Ok(shapes_by_edges_quotient(n)),
        (Grading::Edges, false) => Err(Error::Contract(
            "edge grading is finite only for quotient forests (no isolated vertices)".into(),
        )),
    }
}

fn planar_trees(n: usize) -> Vec<Tree<()>> {
    if n == 0 {
        return Vec::new();
    }
    planar_forests_by_vertices(n - 1)
        .into_iter()
        .map(|f| Tree::new((), f.trees.into_iter().map(|t| ((), t)).collect()))
        .collect()
}

fn planar_forests_by_vertices(n: usize) -> Vec<Forest<()>> {
    if n == 0 {
        return vec![Forest::one()];
    }
    let mut out = Vec::new();
    for k in 1..=n {
        let rest = planar_forests_by_vertices(n - k);
        for t in planar_trees(k) {
            for r in &rest {
                let mut trees = vec![t.clone()];
                trees.extend(r.trees.iter().cloned());
                out.push(Forest::planar(trees));
            }
        }
    }
    out
}

fn planar_forests_by_edges_quotient(n: usize) -> Vec<Forest<()>> {
    if n == 0 {
        return vec![Forest::one()];
    }
    let mut out = Vec::new();
    for k in 1..=n {
        let rest = planar_forests_by_edges_quotient(n - k);
        for t in planar_trees(k + 1) {
            for r in &rest {
                let mut trees = vec![t.clone()];
                trees.extend(r.trees.iter().cloned());
                out.push(Forest::planar(trees));
            }
        }
    }
    out
}

/// Planar forests of degree `n`, sorted.
pub fn planar(grading: Grading, n: usize, quotient: bool) -> Result<Vec<Forest<()>>> {
    let mut out = match (grading, quotient) {
        (Grading::Vertices, false) => planar_forests_by_vertices(n),
        (Grading::Vertices, true) => planar_forests_by_vertices(n)
            .into_iter()
            .filter(|f| !has_isolated(f))
            .collect(),
        (Grading::Edges, true) => planar_forests_by_edges_quotient(n),
        (Grading::Edges, false) => {
            return Err(Error::Contract(
                "edge grading is finite only for quotient forests (no isolated vertices)".into(),
            ))
        }
    };
    out.sort();
    Ok(out)
}

/// All permutations of `1..=n` as words.
pub fn permutation_words(n: usize) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i as u32 + 1);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// All packed words of length `n`, in lexicographic order.
pub fn packed_word_list(n: usize) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, n: usize, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            let max = prefix.iter().copied().max().unwrap_or(0);
            let mut seen = vec![false; max as usize + 1];
            for &l in prefix.iter() {
                seen[l as usize] = true;
            }
            if seen[1..].iter().all(|&s| s) {
                out.push(prefix.clone());
            }
            return;
        }
        for l in 1..=n as u32 {
            prefix.push(l);
            go(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

fn with_labels<V: Label, W: Label>(shape: &Flat<W, ()>, labels: &[V]) -> Forest<V> {
    Flat {
        parent: shape.parent.clone(),
        label: labels.to_vec(),
        edge: shape.edge.clone(),
    }
    .to_forest()
}

/// Labeled forests of a labeled family, canonical and sorted.
pub fn labeled(family: Family, grading: Grading, n: usize, quotient: bool) -> Result<Vec<Forest<u32>>> {
    if !family.is_labeled() {
        return Err(Error::Contract(format!("{family} is not a labeled family")));
    }
    let mut out = BTreeSet::new();
    for shape in rooted(grading, n, quotient)? {
        let flat = Flat::from_forest(&shape);
        let labelings = if family.is_ordered() {
            permutation_words(flat.len())
        } else {
            packed_word_list(flat.len())
        };
        for l in labelings {
            if family.is_heap()
                && (0..flat.len()).any(|v| flat.parent[v].is_some_and(|p| l[v] <= l[p]))
            {
                continue;
            }
            out.insert(with_labels(&flat, &l));
        }
    }
    Ok(out.into_iter().collect())
}

/// All words of length `n` over `alphabet`, in lexicographic order.
pub fn words_over<T: Clone>(alphabet: &[T], n: usize) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |a| {
                    let mut w = w.clone();
                    w.push(a.clone());
                    w
                })
            })
            .collect();
    }
    out
}

/// Vertex-decorated forests over `atoms`.
pub fn vertex_decorated(atoms: &[Atom], grading: Grading, n: usize, quotient: bool) -> Result<Vec<Forest<Atom>>> {
    let mut out = BTreeSet::new();
    for shape in rooted(grading, n, quotient)? {
        let flat = Flat::from_forest(&shape);
        for decos in words_over(atoms, flat.len()) {
            out.insert(with_labels(&flat, &decos));
        }
    }
    Ok(out.into_iter().collect())
}

/// Vertex-decorated planar forests over `atoms`, graded by vertices.
pub fn planar_vertex_decorated(atoms: &[Atom], n: usize) -> Vec<Forest<Atom>> {
    let mut out = Vec::new();
    for shape in planar_forests_by_vertices(n) {
        let flat = Flat::from_forest(&shape);
        for decos in words_over(atoms, flat.len()) {
            out.push(
                Flat {
                    parent: flat.parent.clone(),
                    label: decos,
                    edge: flat.edge.clone(),
                }
                .to_planar_forest(),
            );
        }
    }
    out.sort();
    out
}

/// Edge-decorated forests with `n` edges and no isolated vertex.
pub fn edge_decorated(atoms: &[Atom], n: usize) -> Vec<Forest<(), Atom>> {
    let mut out = BTreeSet::new();
    for shape in shapes_by_edges_quotient(n) {
        let flat = Flat::from_forest(&shape);
        let edges = flat.edges();
        for decos in words_over(atoms, edges.len()) {
            let mut edge: Vec<Option<Atom>> = vec![None; flat.len()];
            for (&v, d) in edges.iter().zip(decos) {
                edge[v] = Some(d);
            }
            out.insert(
                Flat {
                    parent: flat.parent.clone(),
                    label: flat.label.clone(),
                    edge,
                }
                .to_forest(),
            );
        }
    }
    out.into_iter().collect()
}

/// Keeps only the forests that are single trees.
pub fn trees_only<V: Label, E: EdgeLabel>(forests: Vec<Forest<V, E>>) -> Vec<Tree<V, E>> {
    forests
        .into_iter()
        .filter(|f| f.len() == 1)
        .map(|mut f| f.trees.pop().expect("one tree"))
        .collect()
}
