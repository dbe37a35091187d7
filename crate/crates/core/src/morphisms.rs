//! Morphisms from labeled forests to words: Θ into FQSym, Φ into WQSym*,
//! the maximal word m(F) and the heap-ordered forest to permutation map.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::bialgebra::GradedBialgebra;
use crate::cut_hopf::h_labeled;
use crate::error::{Error, Result};
use crate::forest::enumerate::{self, permutation_words};
use crate::forest::{Family, Flat, Grading, LabeledForest, Tree};
use crate::linear::{q, rank, LinComb, Tensor};
use crate::words::{FQSym, WQSymStar, Word};

/// Σ over orderings of the vertices putting every vertex before the ones
/// below it, of the word of labels read in that order.
fn extension_words(f: &LabeledForest) -> LinComb<Word> {
    let flat = Flat::from_forest(f);
    let ch = flat.children();
    let n = flat.len();
    // A vertex is available once all its children are placed.
    let mut waiting: Vec<usize> = ch.iter().map(Vec::len).collect();
    let mut placed = vec![false; n];
    let mut word = Vec::with_capacity(n);
    let mut out = BTreeMap::<Vec<u32>, u64>::new();
    fn go(
        flat: &Flat<u32, ()>,
        waiting: &mut [usize],
        placed: &mut [bool],
        word: &mut Vec<u32>,
        out: &mut BTreeMap<Vec<u32>, u64>,
    ) {
        if word.len() == flat.len() {
            *out.entry(word.clone()).or_default() += 1;
            return;
        }
        for v in 0..flat.len() {
            if placed[v] || waiting[v] > 0 {
                continue;
            }
            placed[v] = true;
            word.push(flat.label[v]);
            if let Some(p) = flat.parent[v] {
                waiting[p] -= 1;
            }
            go(flat, waiting, placed, word, out);
            if let Some(p) = flat.parent[v] {
                waiting[p] += 1;
            }
            word.pop();
            placed[v] = false;
        }
    }
    go(&flat, &mut waiting, &mut placed, &mut word, &mut out);
    LinComb::from_terms(out.into_iter().map(|(w, c)| (Word(w), q(c as i64))))
}

/// Θ: H_o → FQSym.
pub fn theta(f: &LabeledForest) -> Result<LinComb<Word>> {
    Family::Ordered.validate(f)?;
    Ok(extension_words(f))
}

/// Φ: H_po → WQSym*, `Φ(F) = Σ_τ card(S^τ_F) τ`.
pub fn phi_wqsym(f: &LabeledForest) -> Result<LinComb<Word>> {
    Family::Preordered.validate(f)?;
    Ok(extension_words(f))
}

/// Tail-lexicographic order: words compared from their last letters; a
/// proper suffix is smaller.
pub fn tail_lex_cmp(u: &[u32], v: &[u32]) -> Ordering {
    for (a, b) in u.iter().rev().zip(v.iter().rev()) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    u.len().cmp(&v.len())
}

pub fn tail_lex_less(u: &[u32], v: &[u32]) -> bool {
    tail_lex_cmp(u, v) == Ordering::Less
}

fn tree_max_word(t: &Tree<u32>) -> Vec<u32> {
    let mut w = forest_max_word(t.children.iter().map(|(_, c)| c));
    w.push(t.label);
    w
}

fn forest_max_word<'a>(trees: impl Iterator<Item = &'a Tree<u32>>) -> Vec<u32> {
    let mut words: Vec<Vec<u32>> = trees.map(tree_max_word).collect();
    words.sort_by(|a, b| tail_lex_cmp(a, b));
    words.concat()
}

/// The tail-lex maximal word of Φ(F) for a forest whose labels strictly
/// increase away from the roots.
pub fn max_word(f: &LabeledForest) -> Result<Word> {
    let flat = Flat::from_forest(f);
    for v in 0..flat.len() {
        if let Some(p) = flat.parent[v] {
            if flat.label[v] <= flat.label[p] {
                return Err(Error::validation(
                    "heap_preordered",
                    "decorations must strictly increase away from the roots",
                ));
            }
        }
    }
    Ok(Word(forest_max_word(f.trees.iter())))
}

/// The bijection from heap-ordered forests to permutations built by removing
/// the largest vertex: isolated, it becomes a fixed point; attached at `k`,
/// it is inserted after `k` in the cycle of `k`.
pub fn heap_ordered_to_permutation(f: &LabeledForest) -> Result<Word> {
    Family::HeapOrdered.validate(f)?;
    let mut flat = Flat::from_forest(f);
    let mut removed = Vec::new();
    while !flat.is_empty() {
        let n = flat.len() as u32;
        let v = flat.label.iter().position(|&l| l == n).expect("labels are 1..n");
        removed.push(flat.parent[v].map(|p| flat.label[p]));
        let keep: Vec<bool> = (0..flat.len()).map(|u| u != v).collect();
        flat = flat.restrict(&keep);
    }
    let mut tau: Vec<u32> = Vec::new();
    for (i, attach) in removed.into_iter().rev().enumerate() {
        let n = i as u32 + 1;
        match attach {
            None => tau.push(n),
            Some(k) => {
                let next = tau[k as usize - 1];
                tau[k as usize - 1] = n;
                tau.push(next);
            }
        }
    }
    Ok(Word(tau))
}

/// Forests of `family` up to `max_degree` where `map` fails to commute with
/// products or coproducts into `target`.
fn morphism_violations<W: GradedBialgebra<B = Word>>(
    family: Family,
    target: &W,
    map: impl Fn(&LabeledForest) -> LinComb<Word>,
    max_degree: usize,
) -> Vec<String> {
    let h = h_labeled(family);
    let map_lin = |x: &LinComb<LabeledForest>| x.map_linear(&map);
    let mut bad = Vec::new();
    let bases: Vec<Vec<LabeledForest>> = (0..=max_degree).map(|d| h.basis(d)).collect();
    for basis in &bases {
        for f in basis {
            let lhs = h
                .delta(f)
                .map_linear(|Tensor(l, r)| crate::linear::tensor(&map(l), &map(r)));
            let rhs = map(f).map_linear(|w| target.delta(w));
            if lhs != rhs {
                bad.push(format!("coproduct at {f}"));
            }
        }
    }
    for da in 1..=max_degree {
        for db in 1..=max_degree - da {
            for a in &bases[da] {
                for b in &bases[db] {
                    let lhs = map_lin(&h.mul(a, b));
                    let rhs = map(a).bilinear(&map(b), |x, y| target.mul(x, y));
                    if lhs != rhs {
                        bad.push(format!("product at {a} · {b}"));
                    }
                }
            }
        }
    }
    bad
}

pub fn theta_violations(max_degree: usize) -> Vec<String> {
    morphism_violations(Family::Ordered, &FQSym, extension_words, max_degree)
}

pub fn phi_violations(max_degree: usize) -> Vec<String> {
    morphism_violations(Family::Preordered, &WQSymStar, extension_words, max_degree)
}

/// Rank of the matrix of Θ restricted to heap-ordered forests of degree `n`,
/// in the basis of permutations.
pub fn theta_heap_rank(n: usize) -> (usize, usize) {
    let perms: Vec<Word> = permutation_words(n).into_iter().map(Word).collect();
    let forests = enumerate::labeled(Family::HeapOrdered, Grading::Vertices, n, false).expect("labeled family");
    let rows: Vec<Vec<BigInt>> = forests
        .iter()
        .map(|f| {
            let img = extension_words(f);
            perms
                .iter()
                .map(|p| img.coeff(p).to_integer())
                .collect()
        })
        .collect();
    (rank(&rows), forests.len())
}
