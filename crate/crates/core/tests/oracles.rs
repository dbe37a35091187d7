//! Brute-force recounts of the dimension tables and term counts. Every count
//! here comes from raw parent arrays or a textbook recursion, never from the
//! library enumerators it is compared against.

use std::collections::BTreeSet;

use hopf_forests::bialgebra::GradedBialgebra;
use hopf_forests::forest::{atoms, enumerate, Family, Grading};
use hopf_forests::morphisms::heap_ordered_to_permutation;
use hopf_forests::series::{
    cho_recursion, cho_table_live, cnck_closed_forms, dimension_table, embedded_by_name, packed_word_table,
    tree_table, DimensionTable, CHO_BY_LENGTH,
};
use hopf_forests::words::{DWord, FQSym, Letter, QuasiShuffleAlgebra, ShuffleAlgebra, WQSym, Word};

fn live_at(t: &DimensionTable, n: usize) -> u64 {
    t.rows.iter().find(|r| r.n == n).map(|r| r.live).expect("row present")
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Every parent array on `m` vertices (`None` marks a root) without cycles.
fn parent_arrays(m: usize) -> Vec<Vec<Option<usize>>> {
    let mut out = Vec::new();
    let mut p = vec![None; m];
    fn acyclic(p: &[Option<usize>]) -> bool {
        (0..p.len()).all(|start| {
            let mut v = start;
            for _ in 0..=p.len() {
                match p[v] {
                    None => return true,
                    Some(u) => v = u,
                }
            }
            false
        })
    }
    fn go(i: usize, p: &mut Vec<Option<usize>>, out: &mut Vec<Vec<Option<usize>>>) {
        if i == p.len() {
            if acyclic(p) {
                out.push(p.clone());
            }
            return;
        }
        for choice in std::iter::once(None).chain((0..p.len()).filter(|&u| u != i).map(Some)) {
            p[i] = choice;
            go(i + 1, p, out);
        }
    }
    go(0, &mut p, &mut out);
    out
}

fn has_isolated(p: &[Option<usize>]) -> bool {
    (0..p.len()).any(|v| p[v].is_none() && !p.contains(&Some(v)))
}

/// Sorted-string canonical form of a labeled forest on a parent array.
fn canon(p: &[Option<usize>], label: &[u32]) -> String {
    fn tree(v: usize, p: &[Option<usize>], label: &[u32]) -> String {
        let mut kids: Vec<String> = (0..p.len()).filter(|&u| p[u] == Some(v)).map(|u| tree(u, p, label)).collect();
        kids.sort();
        format!("{}[{}]", label[v], kids.join(","))
    }
    let mut roots: Vec<String> = (0..p.len()).filter(|&v| p[v].is_none()).map(|v| tree(v, p, label)).collect();
    roots.sort();
    roots.join(" ")
}

fn packed_words(m: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut w = vec![1u32; m];
    loop {
        let max = w.iter().copied().max().unwrap_or(0);
        if (1..=max).all(|k| w.contains(&k)) {
            out.push(w.clone());
        }
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if (w[i] as usize) < m {
                w[i] += 1;
                break;
            }
            w[i] = 1;
        }
    }
}

/// Distinct labeled forests on `m` vertices, labels from packed words.
fn preordered_count(m: usize, heap: bool) -> u64 {
    let mut seen = BTreeSet::new();
    let arrays = parent_arrays(m);
    for w in packed_words(m) {
        for p in &arrays {
            if heap && (0..m).any(|v| p[v].is_some_and(|u| w[v] <= w[u])) {
                continue;
            }
            seen.insert(canon(p, &w));
        }
    }
    seen.len() as u64
}

/// Rooted unlabeled trees by vertex count, from the classical recursion.
fn rooted_trees(max: usize) -> Vec<u64> {
    let mut a = vec![0u64; max + 1];
    if max >= 1 {
        a[1] = 1;
    }
    for n in 1..max {
        let mut s = 0;
        for k in 1..=n {
            let d_sum: u64 = (1..=k).filter(|d| k % d == 0).map(|d| d as u64 * a[d]).sum();
            s += d_sum * a[n - k + 1];
        }
        a[n + 1] = s / n as u64;
    }
    a
}

/// Multisets over the weighted kinds `kinds[k]` (k >= 1), by total weight.
fn euler_transform(kinds: &[u64], max: usize) -> Vec<u64> {
    let mut f = vec![0u64; max + 1];
    f[0] = 1;
    for (k, &count) in kinds.iter().enumerate().skip(1).take(max) {
        for _ in 0..count {
            for n in k..=max {
                f[n] += f[n - k];
            }
        }
    }
    f
}

/// Set partitions of `[m]` into `k` blocks of size at least two, each block
/// of size `s` weighted by the `s^(s-1)` rooted labeled trees on it.
fn labeled_forests_without_isolated(m: usize, k: usize) -> u64 {
    if m == 0 {
        return u64::from(k == 0);
    }
    if k == 0 {
        return 0;
    }
    (2..=m)
        .map(|s| binom(m as u64 - 1, s as u64 - 1) * (s as u64).pow(s as u32 - 1) * labeled_forests_without_isolated(m - s, k - 1))
        .sum()
}

#[test]
fn ordered_forests_by_vertices() {
    let t = dimension_table(Family::Ordered, Grading::Vertices, false, 5).unwrap();
    for m in 0..=5 {
        assert_eq!(live_at(&t, m), parent_arrays(m).len() as u64, "m = {m}");
        assert_eq!(live_at(&t, m), if m == 0 { 1 } else { (m as u64 + 1).pow(m as u32 - 1) });
    }
}

#[test]
fn preordered_forests_by_vertices() {
    let po = dimension_table(Family::Preordered, Grading::Vertices, false, 4).unwrap();
    let hpo = dimension_table(Family::HeapPreordered, Grading::Vertices, false, 4).unwrap();
    for m in 0..=4 {
        assert_eq!(live_at(&po, m), preordered_count(m, false), "po m = {m}");
        assert_eq!(live_at(&hpo, m), preordered_count(m, true), "hpo m = {m}");
    }
    assert_eq!(preordered_count(5, false), 6284);
    assert_eq!(preordered_count(5, true), 428);
}

#[test]
fn heap_ordered_forests_are_permutations() {
    for m in 0..=6 {
        let forests = enumerate::labeled(Family::HeapOrdered, Grading::Vertices, m, false).unwrap();
        let words: BTreeSet<Word> = forests.iter().map(|f| heap_ordered_to_permutation(f).unwrap()).collect();
        let perms: usize = (1..=m).product();
        assert_eq!(forests.len(), perms, "m = {m}");
        assert_eq!(words.len(), perms, "not injective at m = {m}");
        assert!(words.iter().all(Word::is_permutation));
    }
}

#[test]
fn rooted_and_planar_counts() {
    let a = rooted_trees(12);
    let hck = dimension_table(Family::Rooted, Grading::Vertices, false, 7).unwrap();
    for n in 0..=7 {
        assert_eq!(live_at(&hck, n), a[n + 1], "H_CK n = {n}");
    }
    let printed = embedded_by_name("H_CK").unwrap();
    for (i, v) in printed.values.iter().enumerate() {
        assert_eq!(*v, a[i + 1]);
    }

    // C_CK forests by edges: multisets of trees with at least one edge.
    let trees_by_edges: Vec<u64> = (0..=11).map(|k| if k == 0 { 0 } else { a[k + 1] }).collect();
    let cck = euler_transform(&trees_by_edges, 10);
    let live = dimension_table(Family::Rooted, Grading::Edges, true, 6).unwrap();
    for n in 0..=6 {
        assert_eq!(live_at(&live, n), cck[n], "C_CK n = {n}");
    }
    assert_eq!(embedded_by_name("C_CK").unwrap().values, &cck[..=10]);

    // Planar: Catalan trees, forests as sequences of trees with an edge.
    let mut cat = vec![1u64; 11];
    for n in 1..=10 {
        cat[n] = (0..n).map(|i| cat[i] * cat[n - 1 - i]).sum();
    }
    let mut seq = vec![0u64; 11];
    seq[0] = 1;
    for n in 1..=10 {
        seq[n] = (1..=n).map(|k| cat[k] * seq[n - k]).sum();
    }
    let trees = tree_table(Family::Planar, Grading::Edges, true, 5).unwrap();
    let forests = dimension_table(Family::Planar, Grading::Edges, true, 5).unwrap();
    for n in 1..=5 {
        assert_eq!(live_at(&trees, n), cat[n]);
        assert_eq!(live_at(&forests, n), seq[n]);
    }
    for n in 1..=10 {
        assert_eq!(cnck_closed_forms(n), (cat[n] as u128, seq[n] as u128), "n = {n}");
    }
}

#[test]
fn c_o_counts_by_edges_and_by_vertices() {
    let by_edges: Vec<u64> = (1..=4)
        .map(|n| (n + 1..=2 * n).map(|m| labeled_forests_without_isolated(m, m - n)).sum())
        .collect();
    assert_eq!(by_edges, [2, 21, 364, 8815]);
    let live = dimension_table(Family::Ordered, Grading::Edges, true, 4).unwrap();
    assert_eq!(&live.live()[..4], &by_edges[..]);

    // The printed row counts the same forests by number of vertices minus one.
    let printed = embedded_by_name("C_o").unwrap().values;
    let by_vertices: Vec<u64> = (2..=9)
        .map(|m| (1..=m / 2).map(|k| labeled_forests_without_isolated(m, k)).sum())
        .collect();
    assert_eq!(printed, &by_vertices[..]);
    for m in 2..=5 {
        let brute = parent_arrays(m).iter().filter(|p| !has_isolated(p)).count() as u64;
        let library = enumerate::labeled(Family::Ordered, Grading::Vertices, m, true).unwrap().len() as u64;
        assert_eq!(brute, printed[m - 2]);
        assert_eq!(library, brute);
    }
}

#[test]
fn c_ho_by_edges_and_length() {
    // Vertex i may hang below any earlier vertex, so labels increase downward.
    let mut brute = [[0u64; 6]; 6];
    for m in 0..=10usize {
        let mut p: Vec<Option<usize>> = vec![None; m];
        fn go(i: usize, p: &mut Vec<Option<usize>>, brute: &mut [[u64; 6]; 6]) {
            if i == p.len() {
                if !has_isolated(p) {
                    let l = p.iter().filter(|x| x.is_none()).count();
                    let n = p.len() - l;
                    if n < 6 && l < 6 {
                        brute[n][l] += 1;
                    }
                }
                return;
            }
            for choice in std::iter::once(None).chain((0..i).map(Some)) {
                p[i] = choice;
                go(i + 1, p, brute);
            }
        }
        go(0, &mut p, &mut brute);
    }
    assert_eq!(brute, CHO_BY_LENGTH);
    for n in 0..6 {
        for l in 0..6 {
            assert_eq!(cho_recursion(n, l), brute[n][l] as u128, "f_({n},{l})");
        }
    }
    let live = cho_table_live(4, 4);
    for n in 0..=4 {
        assert_eq!(&live[n][..], &brute[n][..5]);
    }
    for n in 1..=8 {
        let fact: u128 = (1..=n as u128).product();
        assert_eq!(cho_recursion(n, 1), fact);
    }
}

#[test]
fn packed_words_are_fubini_numbers() {
    let mut fubini = vec![1u64; 8];
    for n in 1..8 {
        fubini[n] = (1..=n).map(|k| binom(n as u64, k as u64) * fubini[n - k]).sum();
    }
    let t = packed_word_table(6);
    for n in 0..=6 {
        assert_eq!(live_at(&t, n), fubini[n]);
        assert_eq!(packed_words(n).len() as u64, fubini[n]);
    }
    assert_eq!(embedded_by_name("WQSym*").unwrap().values, &fubini[..]);
}

fn distinct_word(atom_names: &[&str]) -> DWord {
    DWord(atom_names.iter().map(|a| Letter::parse(a).unwrap()).collect())
}

#[test]
fn product_term_counts() {
    let names = ["a", "b", "c", "d", "e", "f"];
    let sh = ShuffleAlgebra { atoms: atoms("a,b,c,d,e,f") };
    let csh = QuasiShuffleAlgebra::free(atoms("a,b,c,d,e,f"), 6);
    for p in 0..=3 {
        for q in 0..=3 {
            let u = distinct_word(&names[..p]);
            let v = distinct_word(&names[3..3 + q]);
            let delannoy: u64 = (0..=p.min(q) as u64).map(|k| (binom(p as u64, k) * binom(q as u64, k)) << k).sum();
            assert_eq!(csh.mul(&u, &v).iter().count() as u64, delannoy, "Csh {p} {q}");
            assert_eq!(sh.mul(&u, &v).iter().count() as u64, binom((p + q) as u64, p as u64), "Sh {p} {q}");
        }
    }
    for p in 0..=3 {
        for q in 0..=3 {
            for s in enumerate::permutation_words(p) {
                for t in enumerate::permutation_words(q) {
                    let n = FQSym.mul(&Word(s.clone()), &Word(t.clone())).iter().count() as u64;
                    assert_eq!(n, binom((p + q) as u64, p as u64));
                }
            }
        }
    }
    for n in 0..=4 {
        for w in enumerate::packed_word_list(n) {
            let max = w.iter().copied().max().unwrap_or(0) as usize;
            assert_eq!(WQSym.delta(&Word(w.clone())).iter().count(), max + 1, "{w:?}");
        }
    }
}
