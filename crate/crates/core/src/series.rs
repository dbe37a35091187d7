//! Dimension tables of the forest and word algebras, the C_ho length
//! recursion, the C_NCK closed forms, and checks on the heap-ordered forest
//! to permutation bijection.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::binomial;

use crate::error::{Error, Result};
use crate::forest::enumerate::{self, packed_word_list, permutation_words};
use crate::forest::{Family, Flat, Forest, Grading, LabeledForest};
use crate::morphisms::heap_ordered_to_permutation;

/// What a table counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Forests,
    Trees,
}

/// A table of counts printed alongside its source, indexed from `first`.
#[derive(Clone, Copy, Debug)]
pub struct Embedded {
    pub name: &'static str,
    /// `None` for packed words.
    pub family: Option<Family>,
    pub grading: Grading,
    pub quotient: bool,
    pub shape: Shape,
    /// The row leaves out the empty forest.
    pub nonempty: bool,
    pub first: usize,
    pub values: &'static [u64],
    pub source: &'static str,
}

macro_rules! table {
    ($name:expr, $fam:expr, $gr:ident, $q:expr, $shape:ident, $ne:expr, $first:expr, [$($v:expr),*], $src:expr) => {
        Embedded {
            name: $name,
            family: $fam,
            grading: Grading::$gr,
            quotient: $q,
            shape: Shape::$shape,
            nonempty: $ne,
            first: $first,
            values: &[$($v),*],
            source: $src,
        }
    };
}

pub const EMBEDDED: &[Embedded] = &[
    table!("H_CK", Some(Family::Rooted), Vertices, false, Forests, false, 0,
        [1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842],
        "f_n^{H_CK} &1&1&2&4&9&20&48&115&286&719&1842"),
    table!("H_NCK", Some(Family::Planar), Vertices, false, Forests, false, 0,
        [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796],
        "f_n^{H_NCK} &1&1&2&5&14&42&132&429&1430&4862&16796"),
    table!("H_o", Some(Family::Ordered), Vertices, false, Forests, false, 0,
        [1, 1, 3, 16, 125, 1296, 16807],
        "(n+1)^{n-1} ordered forests in vertices degree n"),
    table!("H_ho", Some(Family::HeapOrdered), Vertices, false, Forests, false, 0,
        [1, 1, 2, 6, 24, 120, 720],
        "heap-ordered forests of degree n are in bijection with permutations (n!)"),
    table!("H_po", Some(Family::Preordered), Vertices, false, Forests, false, 0,
        [1, 1, 5, 38, 424, 6284],
        "f_n^{H_po} &1&1&5&38&424&6284"),
    table!("H_hpo", Some(Family::HeapPreordered), Vertices, false, Forests, false, 0,
        [1, 1, 3, 12, 64, 428],
        "f_n^{H_hpo} &1&1&3&12&64&428"),
    table!("WQSym*", None, Vertices, false, Forests, false, 0,
        [1, 1, 3, 13, 75, 541, 4683, 47293],
        "f^{WQSym*}_n &1&1&3&13&75&541&4683&47293"),
    table!("C_CK trees", Some(Family::Rooted), Edges, true, Trees, false, 0,
        [1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842],
        "t_n^{C_CK} &1&1&2&4&9&20&48&115&286&719&1842"),
    table!("C_CK", Some(Family::Rooted), Edges, true, Forests, false, 0,
        [1, 1, 3, 7, 19, 47, 127, 330, 889, 2378, 6450],
        "f_n^{C_CK} &1&1&3&7&19&47&127&330&889&2378&6450"),
    table!("C_o", Some(Family::Ordered), Edges, true, Forests, false, 1,
        [2, 9, 76, 805, 10626, 167839, 3091768, 65127465],
        "f_n^{C_o} &2&9&76&805&10626&167839&3091768&65127465"),
    table!("C_ho", Some(Family::HeapOrdered), Edges, true, Forests, true, 0,
        [0, 1, 5, 41, 469, 6889, 123605],
        "f_n^{C_ho} & 0&1&5&41&469&6889&123605"),
    table!("C_NCK trees", Some(Family::Planar), Edges, true, Trees, false, 1,
        [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796],
        "t_n^{C_NCK} &1&2&5&14&42&132&429&1430&4862&16796"),
    table!("C_NCK", Some(Family::Planar), Edges, true, Forests, false, 1,
        [1, 3, 10, 35, 126, 462, 1716, 6435, 24310, 92378],
        "f_n^{C_NCK} &1&3&10&35&126&462&1716&6435&24310&92378"),
];

/// The C_ho sub-table `f_{n,l}`, rows `n = 0..=5`, columns `l = 0..=5`.
pub const CHO_BY_LENGTH: [[u64; 6]; 6] = [
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 2, 3, 0, 0, 0],
    [0, 6, 20, 15, 0, 0],
    [0, 24, 130, 210, 105, 0],
    [0, 120, 924, 2380, 2520, 945],
];

impl Embedded {
    pub fn expected(&self, n: usize) -> Option<u64> {
        n.checked_sub(self.first).and_then(|i| self.values.get(i)).copied()
    }
}

/// The embedded table matching a query, if one was printed.
pub fn embedded(family: Option<Family>, grading: Grading, quotient: bool, shape: Shape) -> Option<&'static Embedded> {
    EMBEDDED.iter().find(|e| {
        e.family == family && e.grading == grading && e.quotient == quotient && e.shape == shape
    })
}

/// The embedded table with a given name (`H_po`, `C_NCK trees`, ...).
pub fn embedded_by_name(name: &str) -> Option<&'static Embedded> {
    EMBEDDED.iter().find(|e| e.name.eq_ignore_ascii_case(name))
}

fn count_forests(family: Family, grading: Grading, n: usize, quotient: bool) -> Result<Vec<usize>> {
    // Tree counts by component number, index 0 for the empty forest.
    let lens: Vec<usize> = match family {
        Family::Rooted => enumerate::rooted(grading, n, quotient)?.iter().map(Forest::len).collect(),
        Family::Planar => enumerate::planar(grading, n, quotient)?.iter().map(Forest::len).collect(),
        _ => enumerate::labeled(family, grading, n, quotient)?.iter().map(Forest::len).collect(),
    };
    let mut by_len = vec![0; lens.iter().copied().max().unwrap_or(0) + 1];
    for l in lens {
        by_len[l] += 1;
    }
    Ok(by_len)
}

/// Number of objects of degree `n`, counted by enumeration.
///
/// Trees graded by edges are counted as trees with `n + 1` vertices, so the
/// one-vertex tree stands in degree 0.
pub fn live_count(
    family: Option<Family>,
    grading: Grading,
    quotient: bool,
    shape: Shape,
    nonempty: bool,
    n: usize,
) -> Result<u64> {
    let Some(family) = family else {
        return Ok(packed_word_list(n).len() as u64);
    };
    let count = match (shape, grading) {
        (Shape::Forests, _) => {
            let by_len = count_forests(family, grading, n, quotient)?;
            by_len.iter().skip(usize::from(nonempty)).sum::<usize>()
        }
        (Shape::Trees, Grading::Vertices) => {
            count_forests(family, grading, n, quotient)?.get(1).copied().unwrap_or(0)
        }
        (Shape::Trees, Grading::Edges) => {
            count_forests(family, Grading::Vertices, n + 1, false)?.get(1).copied().unwrap_or(0)
        }
    };
    Ok(count as u64)
}

/// One row of a dimension table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub n: usize,
    pub live: u64,
    pub expected: Option<u64>,
}

/// Live counts next to the printed ones.
#[derive(Clone, Debug)]
pub struct DimensionTable {
    pub name: String,
    pub rows: Vec<Row>,
}

impl DimensionTable {
    pub fn mismatches(&self) -> Vec<String> {
        self.rows
            .iter()
            .filter_map(|r| match r.expected {
                Some(e) if e != r.live => Some(format!("{} at n={}: counted {}, printed {}", self.name, r.n, r.live, e)),
                _ => None,
            })
            .collect()
    }

    pub fn passed(&self) -> bool {
        self.mismatches().is_empty()
    }

    pub fn live(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.live).collect()
    }

    /// Fails with the first mismatch.
    pub fn verified(self) -> Result<Self> {
        match self.mismatches().into_iter().next() {
            Some(m) => Err(Error::Contract(m)),
            None => Ok(self),
        }
    }
}

impl fmt::Display for DimensionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cell = |v: Option<u64>| v.map_or("-".to_string(), |v| v.to_string());
        let w = self
            .rows
            .iter()
            .flat_map(|r| [r.live.to_string().len(), cell(r.expected).len()])
            .max()
            .unwrap_or(1)
            .max(6);
        writeln!(f, "{}", self.name)?;
        writeln!(f, "{:>3}  {:>w$}  {:>w$}  status", "n", "counted", "printed")?;
        for r in &self.rows {
            let status = match r.expected {
                Some(e) if e == r.live => "ok",
                Some(_) => "MISMATCH",
                None => "-",
            };
            writeln!(f, "{:>3}  {:>w$}  {:>w$}  {status}", r.n, r.live, cell(r.expected))?;
        }
        Ok(())
    }
}

fn build(
    name: String,
    family: Option<Family>,
    grading: Grading,
    quotient: bool,
    shape: Shape,
    n_max: usize,
) -> Result<DimensionTable> {
    let emb = embedded(family, grading, quotient, shape);
    let nonempty = emb.is_some_and(|e| e.nonempty);
    let first = emb.map_or(0, |e| e.first);
    let rows = (first..=n_max)
        .map(|n| {
            Ok(Row {
                n,
                live: live_count(family, grading, quotient, shape, nonempty, n)?,
                expected: emb.and_then(|e| e.expected(n)),
            })
        })
        .collect::<Result<_>>()?;
    Ok(DimensionTable {
        name: emb.map_or(name, |e| e.name.to_string()),
        rows,
    })
}

/// Forest counts of a family up to `n_max` with the printed values, if any.
pub fn dimension_table(family: Family, grading: Grading, quotient: bool, n_max: usize) -> Result<DimensionTable> {
    let name = format!("{family} forests, {grading:?} grading{}", if quotient { ", quotient" } else { "" });
    build(name, Some(family), grading, quotient, Shape::Forests, n_max)
}

/// Tree counts of a family up to `n_max` with the printed values, if any.
pub fn tree_table(family: Family, grading: Grading, quotient: bool, n_max: usize) -> Result<DimensionTable> {
    let name = format!("{family} trees, {grading:?} grading{}", if quotient { ", quotient" } else { "" });
    build(name, Some(family), grading, quotient, Shape::Trees, n_max)
}

/// Packed words of length up to `n_max`.
pub fn packed_word_table(n_max: usize) -> DimensionTable {
    build(String::new(), None, Grading::Vertices, false, Shape::Forests, n_max).expect("packed words")
}

/// `f_{n,l}` for C_ho: forests with `n` edges and `l` trees, by
/// `f_{n,l} = (n+l-1)(f_{n-1,l} + f_{n-1,l-1})`.
pub fn cho_recursion(n: usize, l: usize) -> u128 {
    let mut f = vec![vec![0u128; l + 1]; n + 1];
    for i in 0..=n {
        for j in 0..=l {
            f[i][j] = match (i, j) {
                (0, 0) | (1, 1) => 1,
                (0, _) | (1, _) | (_, 0) => 0,
                _ => (i + j - 1) as u128 * (f[i - 1][j] + f[i - 1][j - 1]),
            };
        }
    }
    f[n][l]
}

/// Heap-ordered forests on `vertices` vertices with `roots` trees and no
/// isolated vertex, built by inserting vertices in label order.
pub fn heap_ordered_without_isolated(vertices: usize, roots: usize) -> Vec<LabeledForest> {
    fn go(
        parent: &mut Vec<Option<usize>>,
        degree: &mut Vec<usize>,
        vertices: usize,
        roots: usize,
        out: &mut BTreeSet<LabeledForest>,
    ) {
        let k = parent.len();
        let isolated = (0..k).filter(|&v| parent[v].is_none() && degree[v] == 0).count();
        let root_count = parent.iter().filter(|p| p.is_none()).count();
        // Each later vertex can end isolation of at most one vertex.
        if root_count > roots || isolated > vertices - k {
            return;
        }
        if k == vertices {
            if root_count == roots {
                out.insert(
                    Flat::<u32, ()> {
                        parent: parent.clone(),
                        label: (1..=vertices as u32).collect(),
                        edge: parent.iter().map(|p| p.map(|_| ())).collect(),
                    }
                    .to_forest(),
                );
            }
            return;
        }
        for attach in std::iter::once(None).chain((0..k).map(Some)) {
            parent.push(attach);
            degree.push(0);
            if let Some(p) = attach {
                degree[p] += 1;
            }
            go(parent, degree, vertices, roots, out);
            if let Some(p) = attach {
                degree[p] -= 1;
            }
            degree.pop();
            parent.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(&mut Vec::new(), &mut Vec::new(), vertices, roots, &mut out);
    out.into_iter().collect()
}

/// The C_ho sub-table counted live, rows `n = 0..=n_max`, columns `l = 0..=l_max`.
pub fn cho_table_live(n_max: usize, l_max: usize) -> Vec<Vec<u64>> {
    (0..=n_max)
        .map(|n| {
            (0..=l_max)
                .map(|l| heap_ordered_without_isolated(n + l, l).len() as u64)
                .collect()
        })
        .collect()
}

/// `(t_n, f_n) = (C(2n,n)/(n+1), C(2n-1,n))`, the numbers of trees and
/// forests of C_NCK with `n ≥ 1` edges.
pub fn cnck_closed_forms(n: usize) -> (u128, u128) {
    assert!(n >= 1, "closed forms hold for n >= 1");
    let n = n as u128;
    (binomial(2 * n, n) / (n + 1), binomial(2 * n - 1, n))
}

fn cycle_count(tau: &[u32]) -> usize {
    let mut seen = vec![false; tau.len()];
    let mut cycles = 0;
    for start in 0..tau.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = tau[i] as usize - 1;
        }
    }
    cycles
}

/// Properties of the heap-ordered forest to permutation map in one degree.
#[derive(Clone, Debug)]
pub struct PermutationReport {
    pub n: usize,
    pub forests: usize,
    pub distinct_images: usize,
    pub onto_permutations: bool,
    pub cycles_match_trees: bool,
    pub quotient_forests: usize,
    pub quotient_distinct_images: usize,
    pub quotient_fixed_point_free: bool,
    pub derangements: usize,
}

impl PermutationReport {
    pub fn passed(&self) -> bool {
        self.distinct_images == self.forests
            && self.onto_permutations
            && self.cycles_match_trees
            && self.quotient_distinct_images == self.quotient_forests
            && self.quotient_fixed_point_free
            && self.quotient_forests == self.derangements
    }
}

/// Checks bijectivity onto `Σ_n`, one cycle per tree, and that forests
/// without isolated vertices go injectively onto fixed-point-free
/// permutations.
pub fn ho_permutation_check(n: usize) -> PermutationReport {
    let forests = enumerate::labeled(Family::HeapOrdered, Grading::Vertices, n, false).expect("labeled family");
    let mut images = BTreeSet::new();
    let mut quotient_images = BTreeSet::new();
    let mut cycles_match_trees = true;
    let mut quotient_fixed_point_free = true;
    let mut quotient_forests = 0;
    for f in &forests {
        let tau = heap_ordered_to_permutation(f).expect("heap-ordered").0;
        cycles_match_trees &= cycle_count(&tau) == f.len();
        if f.trees.iter().all(|t| !t.children.is_empty()) {
            quotient_forests += 1;
            quotient_fixed_point_free &= tau.iter().enumerate().all(|(i, &x)| x as usize != i + 1);
            quotient_images.insert(tau.clone());
        }
        images.insert(tau);
    }
    let perms: BTreeSet<Vec<u32>> = permutation_words(n).into_iter().collect();
    let derangements = perms
        .iter()
        .filter(|p| p.iter().enumerate().all(|(i, &x)| x as usize != i + 1))
        .count();
    PermutationReport {
        n,
        forests: forests.len(),
        distinct_images: images.len(),
        onto_permutations: images == perms,
        cycles_match_trees,
        quotient_forests,
        quotient_distinct_images: quotient_images.len(),
        quotient_fixed_point_free,
        derangements,
    }
}
