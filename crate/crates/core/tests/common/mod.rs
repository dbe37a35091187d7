#![allow(dead_code)]

use std::fmt::Display;

use hopf_forests::bialgebra::{Antipode, GradedBialgebra};
use hopf_forests::contraction::{c_ck, c_ck_d, c_labeled, normal_form};
use hopf_forests::cut_hopf::{h_ck, h_ck_d, h_labeled};
use hopf_forests::forest::{atoms, DecoratedForest, EdgeForest, EdgeTree, Family, LabeledForest, RootedForest};
use hopf_forests::linear::{q, LinComb, Tensor};
use hopf_forests::morphisms::{phi_wqsym, theta};
use hopf_forests::universal::{Lift, Seed, SeedTree, Target, VTree};
use hopf_forests::words::{
    Bracket, DWord, DecoWord, DecoratedFQSym, DecoratedWQSym, FQSym, Letter, QuasiShuffleAlgebra, ShuffleAlgebra,
    WQSym, WQSymStar, Word,
};

pub fn rf(s: &str) -> RootedForest {
    RootedForest::parse_canonical(s).unwrap()
}

pub fn lf(s: &str) -> LabeledForest {
    LabeledForest::parse_canonical(s).unwrap()
}

pub fn vf(s: &str) -> DecoratedForest {
    DecoratedForest::parse_canonical(s).unwrap()
}

pub fn ef(s: &str) -> EdgeForest {
    EdgeForest::parse_canonical(s).unwrap()
}

pub fn c_rf(s: &str) -> RootedForest {
    normal_form(&rf(s))
}

pub fn c_lf(s: &str) -> LabeledForest {
    normal_form(&lf(s))
}

pub fn word(s: &str) -> Word {
    Word::parse(s).unwrap()
}

pub fn dword(s: &str) -> DWord {
    DWord::parse(s).unwrap()
}

pub fn deco(s: &str) -> DecoWord {
    DecoWord::parse(s).unwrap()
}

pub fn lin<B: Ord + Clone>(terms: &[(i64, &str)], parse: impl Fn(&str) -> B) -> LinComb<B> {
    LinComb::from_terms(terms.iter().map(|&(c, s)| (parse(s), q(c))))
}

pub fn tensors<B: Ord + Clone>(terms: &[(i64, &str, &str)], parse: impl Fn(&str) -> B) -> LinComb<Tensor<B, B>> {
    LinComb::from_terms(terms.iter().map(|&(c, l, r)| (Tensor(parse(l), parse(r)), q(c))))
}

/// Sums words `x | y+z | w` where each token is a tree (or a bare atom,
/// expanded by `generator`) sent to its symbolic letter, `+` inside a token
/// merges letters, and an optional `k*` prefix scales the word.
pub fn symbolic_words<T: SeedTree>(terms: &[String], generator: fn(&str) -> String) -> LinComb<DWord> {
    let seed = Seed::<T>::Symbolic;
    let letter = |tok: &str| -> Letter {
        let tok = tok.trim();
        let tree = if tok.contains('[') { tok.to_string() } else { generator(tok) };
        seed.value(&T::parse_tree(&tree).unwrap())
            .basis_elements()
            .next()
            .unwrap()
            .clone()
    };
    LinComb::from_terms(terms.iter().map(|t| {
        let (c, body) = match t.split_once('*') {
            Some((c, b)) if c.trim().parse::<i64>().is_ok() => (c.trim().parse().unwrap(), b),
            _ => (1, t.as_str()),
        };
        let letters = body
            .split('|')
            .map(|tok| tok.split('+').map(letter).reduce(|a, b| a.union(&b)).unwrap())
            .collect();
        (DWord(letters), q(c))
    }))
}

pub fn vertex_generator(a: &str) -> String {
    format!("{a}[]")
}

pub fn edge_generator(a: &str) -> String {
    format!("*[{a}:*[]]")
}

/// Every ordering of the tokens, joined as one word each.
pub fn perm(tokens: &[&str]) -> Vec<String> {
    if tokens.len() <= 1 {
        return vec![tokens.join(" | ")];
    }
    let mut out = Vec::new();
    for i in 0..tokens.len() {
        let mut rest = tokens.to_vec();
        let head = rest.remove(i);
        for tail in perm(&rest) {
            out.push(format!("{head} | {tail}"));
        }
    }
    out
}

pub fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

// Edge-decorated trees under their usual drawing names.
pub fn e3un(a: &str, b: &str) -> String {
    format!("*[{a}:*[],{b}:*[]]")
}
pub fn e3deux(a: &str, b: &str) -> String {
    format!("*[{a}:*[{b}:*[]]]")
}
pub fn e4un(a: &str, b: &str, c: &str) -> String {
    format!("*[{a}:*[],{b}:*[],{c}:*[]]")
}
pub fn e4deux(x: &str, y: &str, z: &str) -> String {
    format!("*[{x}:*[],{y}:*[{z}:*[]]]")
}
pub fn e4quatre(x: &str, y: &str, z: &str) -> String {
    format!("*[{x}:*[{y}:*[],{z}:*[]]]")
}
pub fn e5six(a: &str, b: &str, c: &str, d: &str) -> String {
    format!("*[{b}:*[],{a}:*[{c}:*[],{d}:*[]]]")
}

/// A displayed computation: what the library prints next to the expected
/// text rebuilt from the printed terms.
pub struct GalleryItem {
    pub name: &'static str,
    pub actual: String,
    pub expected: String,
}

impl GalleryItem {
    pub fn passed(&self) -> bool {
        self.actual == self.expected
    }
}

/// Items whose printed version disagrees with the algebra; see the
/// decisions ledger. They stay in the gallery and are expected to fail.
pub const KNOWN_MISPRINTS: &[&str] = &[
    "S_CCK list",
    "S_Cpo list",
    "quasi-shuffle 11-term display",
    "H_CK^D to Csh^D displays",
];

fn item(name: &'static str, actual: impl Display, expected: impl Display) -> GalleryItem {
    GalleryItem {
        name,
        actual: actual.to_string(),
        expected: expected.to_string(),
    }
}

fn lines<B: Display, V: Display>(entries: impl IntoIterator<Item = (B, V)>, op: &str) -> String {
    entries
        .into_iter()
        .map(|(b, v)| format!("{op}({b}) = {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn antipode_list<H: GradedBialgebra>(h: &H, rows: &[(H::B, LinComb<H::B>)]) -> (String, String) {
    let s = Antipode::new(h).unwrap();
    let actual = lines(rows.iter().map(|(b, _)| (b.clone(), s.apply_basis(b))), "S");
    let expected = lines(rows.iter().map(|(b, v)| (b.clone(), v.clone())), "S");
    (actual, expected)
}

pub fn s_cck_printed() -> Vec<(RootedForest, LinComb<RootedForest>)> {
    let l2 = "*[*[]]";
    let t31 = "*[*[],*[]]";
    let t32 = "*[*[*[]]]";
    let t = "*[*[],*[*[]]]";
    let p = c_rf;
    vec![
        (p("*[]"), lin(&[(1, "1")], p)),
        (p(l2), lin(&[(-1, l2), (-1, "1")], p)),
        (p(t31), lin(&[(-1, t31), (2, "*[*[]] *[*[]]"), (2, l2)], p)),
        (p(t32), lin(&[(-1, t32), (2, "*[*[]] *[*[]]"), (2, l2)], p)),
        (
            p(t),
            lin(
                &[
                    (-1, t),
                    (3, "*[*[]] *[*[],*[]]"),
                    (2, t31),
                    (2, "*[*[]] *[*[*[]]]"),
                    (1, t32),
                    (-5, "*[*[]] *[*[]] *[*[]]"),
                    (-6, "*[*[]] *[*[]]"),
                    (-1, l2),
                ],
                p,
            ),
        ),
    ]
}

pub fn s_cpo_printed() -> Vec<(LabeledForest, LinComb<LabeledForest>)> {
    let p = c_lf;
    let mut rows = vec![(p("1[]"), lin(&[(1, "1")], p))];
    for x in ["1[1[]]", "1[2[]]", "2[1[]]"] {
        rows.push((p(x), lin(&[(-1, x), (-1, "1")], p)));
    }
    let f = "1[2[],2[]]";
    rows.push((p(f), lin(&[(-1, f), (2, "1[2[]] 3[4[]]"), (2, "1[2[]]")], p)));
    let f = "2[3[],1[]]";
    rows.push((
        p(f),
        lin(&[(-1, f), (1, "2[1[]] 3[4[]]"), (1, "1[2[]] 4[3[]]"), (1, "1[2[]]"), (1, "2[1[]]")], p),
    ));
    let f = "1[2[1[]]]";
    rows.push((
        p(f),
        lin(&[(-1, f), (1, "1[2[]] 3[3[]]"), (1, "2[1[]] 3[4[]]"), (1, "1[1[]]"), (1, "1[2[]]")], p),
    ));
    let f = "2[3[]] 3[1[]]";
    rows.push((
        p(f),
        lin(&[(-1, f), (1, "1[2[]] 4[3[]]"), (1, "2[1[]] 3[4[]]"), (1, "2[1[]]"), (1, "1[2[]]")], p),
    ));
    let f = "2[3[],3[1[]]]";
    rows.push((
        p(f),
        lin(
            &[
                (-1, f),
                (1, "2[3[]] 3[1[]] 4[5[]]"),
                (-1, "1[2[]] 4[3[]] 5[6[]]"),
                (-1, "2[1[]] 3[4[]] 5[6[]]"),
                (-1, "2[1[]] 3[4[]]"),
                (-1, "1[2[]] 3[4[]]"),
                (1, "1[2[],2[]] 4[3[]]"),
                (-2, "1[2[]] 3[4[]] 6[5[]]"),
                (-2, "1[2[]] 4[3[]]"),
                (1, "2[3[1[]]] 3[4[]]"),
                (-1, "2[1[]] 3[4[]] 5[6[]]"),
                (-1, "1[2[]] 3[4[]]"),
                (-1, "1[2[]] 4[3[]] 5[6[]]"),
                (-1, "2[1[]] 3[4[]]"),
                (1, "1[2[]] 4[5[3[]]]"),
                (1, "2[3[1[]]]"),
                (1, "2[1[]] 3[4[],4[]]"),
                (1, "1[2[],2[]]"),
                (1, "1[2[]] 4[5[],3[]]"),
                (1, "2[3[],1[]]"),
            ],
            p,
        ),
    ));
    rows
}

/// The eleven printed terms of `(v1 v2) ⧢ (v3 v4)` in Csh.
pub const CSH_PRINTED: &[&str] = &[
    "(v1 v2 v3 v4)",
    "(v1 v3 v2 v4)",
    "(v3 v1 v2 v4)",
    "(v1 v3 v4 v2)",
    "(v3 v1 v4 v2)",
    "(v3 v4 v1 v2)",
    "(v1 [v2 v3] v4)",
    "([v1 v3] v2 v4)",
    "(v1 v3 [v2 v4])",
    "(v3 [v1 v4] v2)",
    "([v1 v3] [v2 v4])",
];

pub fn csh_product() -> LinComb<DWord> {
    QuasiShuffleAlgebra::free(atoms("v1,v2,v3,v4"), 4).mul(&dword("(v1 v2)"), &dword("(v3 v4)"))
}

/// Printed values of Φ: H_po → WQSym*.
pub const PHI_PRINTED: &[(&str, &[(i64, &str)])] = &[
    ("1[]", &[(1, "(1)")]),
    ("1[] 1[]", &[(2, "(1 1)")]),
    ("1[] 2[]", &[(1, "(1 2)"), (1, "(2 1)")]),
    ("1[2[]]", &[(1, "(2 1)")]),
    ("1[] 1[] 1[]", &[(6, "(1 1 1)")]),
    ("1[2[]] 2[]", &[(1, "(2 1 2)"), (2, "(2 2 1)")]),
    ("2[1[],2[]]", &[(1, "(1 2 2)"), (1, "(2 1 2)")]),
    ("2[] 3[1[]]", &[(1, "(2 1 3)"), (1, "(1 2 3)"), (1, "(1 3 2)")]),
    ("1[3[2[]]]", &[(1, "(2 3 1)")]),
    ("1[] 3[2[]]", &[(1, "(1 2 3)"), (1, "(2 1 3)"), (1, "(2 3 1)")]),
    ("1[2[],2[]]", &[(2, "(2 2 1)")]),
    ("1[] 1[] 2[]", &[(2, "(1 1 2)"), (2, "(1 2 1)"), (2, "(2 1 1)")]),
];

/// Printed displays of the morphism H^D_CK → Sh^D under the symbolic seed,
/// as (forest, words); the quasi-shuffle version adds `extra`.
pub struct SymbolicDisplay {
    pub forest: String,
    pub shuffle: Vec<String>,
    pub extra: Vec<String>,
}

fn display(forest: &str, shuffle: &[&str], extra: &[&str]) -> SymbolicDisplay {
    SymbolicDisplay {
        forest: forest.into(),
        shuffle: strs(shuffle),
        extra: strs(extra),
    }
}

pub fn hck_displays() -> Vec<SymbolicDisplay> {
    vec![
        display("a[]", &["a"], &[]),
        display("a[b[]]", &["b | a", "a[b[]]"], &[]),
        display("a[] b[]", &["a | b", "b | a"], &["a+b"]),
        display(
            "a[c[],b[]]",
            &["b | c | a", "c | b | a", "b | a[c[]]", "c | a[b[]]", "a[c[],b[]]"],
            &["b+c | a"],
        ),
        display("a[b[c[]]]", &["c | b | a", "c | a[b[]]", "b[c[]] | a", "a[b[c[]]]"], &[]),
        display(
            "a[d[],b[c[]]]",
            &[
                "c | b | d | a",
                "c | d | b | a",
                "d | c | b | a",
                "c | b | a[d[]]",
                "c | d | a[b[]]",
                "d | c | a[b[]]",
                "b[c[]] | d | a",
                "d | b[c[]] | a",
                "b[c[]] | a[d[]]",
                "c | a[d[],b[]]",
                "d | a[b[c[]]]",
                "a[d[],b[c[]]]",
            ],
            &["c | b+d | a", "c+d | b | a", "b[c[]]+d | a"],
        ),
    ]
}

pub fn cck_displays() -> Vec<SymbolicDisplay> {
    let mut out = vec![
        display("*[a:*[]]", &["*[a:*[]]"], &[]),
        SymbolicDisplay {
            forest: e3un("b", "a"),
            shuffle: vec![e3un("b", "a"), "a | b".into(), "b | a".into()],
            extra: vec![],
        },
        SymbolicDisplay {
            forest: e3deux("a", "b"),
            shuffle: vec![e3deux("a", "b"), "a | b".into(), "b | a".into()],
            extra: vec![],
        },
    ];
    let mut sh = vec![e4un("a", "b", "c")];
    for (x, y, z) in [("a", "c", "b"), ("b", "c", "a"), ("c", "b", "a")] {
        sh.push(format!("{x} | {}", e3un(y, z)));
        sh.push(format!("{} | {x}", e3un(y, z)));
    }
    sh.extend(perm(&["a", "b", "c"]));
    out.push(SymbolicDisplay {
        forest: e4un("a", "b", "c"),
        shuffle: sh,
        extra: vec![],
    });
    let mut sh = vec![e4quatre("a", "b", "c")];
    for (x, y) in [("a", e3un("c", "b")), ("c", e3deux("a", "b")), ("b", e3deux("a", "c"))] {
        sh.push(format!("{x} | {y}"));
        sh.push(format!("{y} | {x}"));
    }
    sh.extend(perm(&["a", "b", "c"]));
    out.push(SymbolicDisplay {
        forest: e4quatre("a", "b", "c"),
        shuffle: sh,
        extra: vec![],
    });
    let mut sh = vec![e4deux("b", "a", "c"), format!("a | {}", e3un("b", "c"))];
    for (x, y) in [("b", e3deux("a", "c")), ("c", e3un("b", "a"))] {
        sh.push(format!("{x} | {y}"));
        sh.push(format!("{y} | {x}"));
    }
    sh.extend(perm(&["a", "b", "c"]));
    out.push(SymbolicDisplay {
        forest: e4deux("b", "a", "c"),
        shuffle: sh,
        extra: vec!["b+c | a".into()],
    });
    out.push(adcinqsix_display());
    out
}

fn adcinqsix_display() -> SymbolicDisplay {
    let (ba, dc, cb, db) = (e3un("b", "a"), e3un("d", "c"), e3un("c", "b"), e3un("d", "b"));
    let (ad, ac, bc, bd) = (e3deux("a", "d"), e3deux("a", "c"), e3un("b", "c"), e3un("b", "d"));
    let mut sh = vec![e5six("a", "b", "c", "d"), format!("a | {}", e4un("c", "d", "b"))];
    for (x, y) in [
        ("b".to_string(), e4quatre("a", "c", "d")),
        ("c".to_string(), e4deux("b", "a", "d")),
        ("d".to_string(), e4deux("b", "a", "c")),
        (ba.clone(), dc.clone()),
    ] {
        sh.push(format!("{x} | {y}"));
        sh.push(format!("{y} | {x}"));
    }
    sh.push(format!("{ad} | {bc}"));
    sh.push(format!("{ac} | {bd}"));
    sh.extend(perm(&[&ba, "c", "d"]));
    sh.extend(perm(&[&dc, "a", "b"]));
    sh.extend(perm(&[&ad, "b", "c"]));
    sh.extend(perm(&[&ac, "b", "d"]));
    for (x, y) in [(&cb, "d"), (&db, "c")] {
        sh.push(format!("a | {x} | {y}"));
        sh.push(format!("a | {y} | {x}"));
        sh.push(format!("{y} | a | {x}"));
    }
    sh.extend(perm(&["a", "b", "c", "d"]));
    let extra = vec![
        format!("b+c | {ad}"),
        format!("b+d | {ac}"),
        format!("b+{dc} | a"),
        "c | b+d | a".into(),
        "b+d | a | c".into(),
        "b+d | c | a".into(),
        "b+c | a | d".into(),
        "b+c | d | a".into(),
        "d | b+c | a".into(),
    ];
    SymbolicDisplay {
        forest: e5six("a", "b", "c", "d"),
        shuffle: sh,
        extra,
    }
}

/// Arborification on H^D_CK: forest and its image as plain words.
pub const ARBORIFICATION: &[(&str, &[&str])] = &[
    ("a[]", &["(a)"]),
    ("a[b[]]", &["(b a)"]),
    ("a[] b[]", &["(a b)", "(b a)"]),
    ("a[c[],b[]]", &["(b c a)", "(c b a)"]),
    ("a[b[c[]]]", &["(c b a)"]),
    ("a[d[],b[c[]]]", &["(c b d a)", "(c d b a)", "(d c b a)"]),
];

pub fn abcd() -> Vec<hopf_forests::forest::Atom> {
    atoms("a,b,c,d")
}

/// Displays of the universal morphisms under the symbolic seed, and of
/// arborification, as five (name, actual, expected) items.
fn symbolic_gallery() -> Vec<GalleryItem> {
    let h = h_ck_d(abcd());
    let c = c_ck_d(abcd());
    let hseed = Seed::<VTree>::Symbolic;
    let cseed = Seed::<EdgeTree>::Symbolic;
    let csh = Target::QuasiShuffle(Bracket::Free);
    let mut rows: [(Vec<String>, Vec<String>); 5] = Default::default();
    for d in hck_displays() {
        let f = vf(&d.forest);
        let e_sh = symbolic_words::<VTree>(&d.shuffle, vertex_generator);
        let e_qs = &e_sh + &symbolic_words::<VTree>(&d.extra, vertex_generator);
        rows[0].0.push(format!("{f}: {}", Lift::new(&h, Target::Shuffle, &hseed).apply(&f).unwrap()));
        rows[0].1.push(format!("{f}: {e_sh}"));
        rows[1].0.push(format!("{f}: {}", Lift::new(&h, csh.clone(), &hseed).apply(&f).unwrap()));
        rows[1].1.push(format!("{f}: {e_qs}"));
    }
    for d in cck_displays() {
        let f = ef(&d.forest);
        let e_sh = symbolic_words::<EdgeTree>(&d.shuffle, edge_generator);
        let e_qs = &e_sh + &symbolic_words::<EdgeTree>(&d.extra, edge_generator);
        rows[2].0.push(format!("{f}: {}", Lift::new(&c, Target::Shuffle, &cseed).apply(&f).unwrap()));
        rows[2].1.push(format!("{f}: {e_sh}"));
        rows[3].0.push(format!("{f}: {}", Lift::new(&c, csh.clone(), &cseed).apply(&f).unwrap()));
        rows[3].1.push(format!("{f}: {e_qs}"));
    }
    for (f, words) in ARBORIFICATION {
        let f = vf(f);
        let got = Lift::new(&h, Target::Shuffle, &Seed::Arborification).apply(&f).unwrap();
        rows[4].0.push(format!("{f}: {got}"));
        rows[4].1.push(format!("{f}: {}", LinComb::from_basis_iter(words.iter().map(|w| dword(w)))));
    }
    let names = [
        "H_CK^D to Sh^D displays",
        "H_CK^D to Csh^D displays",
        "C_CK^D to Sh^D displays",
        "C_CK^D to Csh^D displays",
        "arborification displays",
    ];
    names
        .into_iter()
        .zip(rows)
        .map(|(name, (a, e))| item(name, a.join("\n"), e.join("\n")))
        .collect()
}

pub fn gallery() -> Vec<GalleryItem> {
    let mut out = Vec::new();

    let hck = h_ck();
    let t = "*[*[],*[*[]]]";
    out.push(item(
        "Δ_HCK(tquatredeux)",
        hck.delta(&rf(t)),
        tensors(
            &[
                (1, t, "1"),
                (1, "1", t),
                (1, "*[]", "*[*[],*[]]"),
                (1, "*[*[]]", "*[*[]]"),
                (1, "*[]", "*[*[*[]]]"),
                (1, "*[] *[]", "*[*[]]"),
                (1, "*[*[]] *[]", "*[]"),
            ],
            rf,
        ),
    ));

    let f = "a[d[],b[c[]]]";
    out.push(item(
        "Δ_HCKD(tdquatredeux)",
        h_ck_d(abcd()).delta(&vf(f)),
        tensors(
            &[
                (1, f, "1"),
                (1, "1", f),
                (1, "c[]", "a[d[],b[]]"),
                (1, "b[c[]]", "a[d[]]"),
                (1, "d[]", "a[b[c[]]]"),
                (1, "c[] d[]", "a[b[]]"),
                (1, "b[c[]] d[]", "a[]"),
            ],
            vf,
        ),
    ));

    let f = "2[3[],4[1[]]]";
    out.push(item(
        "Δ_Ho(tdquatredeux)",
        h_labeled(Family::Ordered).delta(&lf(f)),
        tensors(
            &[
                (1, f, "1"),
                (1, "1", f),
                (1, "1[]", "1[3[],2[]]"),
                (1, "2[1[]]", "1[2[]]"),
                (1, "1[]", "2[3[1[]]]"),
                (1, "1[] 2[]", "1[2[]]"),
                (1, "3[1[]] 2[]", "1[]"),
            ],
            lf,
        ),
    ));

    let f = "1[3[],2[1[]]]";
    out.push(item(
        "Δ_Hpo(tdquatredeux)",
        h_labeled(Family::Preordered).delta(&lf(f)),
        tensors(
            &[
                (1, f, "1"),
                (1, "1", f),
                (1, "1[]", "1[3[],2[]]"),
                (1, "2[1[]]", "1[2[]]"),
                (1, "1[]", "1[2[1[]]]"),
                (1, "1[] 2[]", "1[2[]]"),
                (1, "2[1[]] 3[]", "1[]"),
            ],
            lf,
        ),
    ));

    out.push(item(
        "Δ_CCK(tquatredeux)",
        c_ck().delta(&c_rf(t)),
        tensors(
            &[
                (1, "1", t),
                (1, t, "1"),
                (2, "*[*[]]", "*[*[],*[]]"),
                (1, "*[*[]]", "*[*[*[]]]"),
                (1, "*[*[*[]]]", "*[*[]]"),
                (1, "*[*[],*[]]", "*[*[]]"),
                (1, "*[*[]] *[*[]]", "*[*[]]"),
            ],
            c_rf,
        ),
    ));

    let f = e4deux("b", "a", "c");
    let e_ = |s: &str| normal_form(&ef(s));
    out.push(item(
        "Δ_CCKD(adquatredeux)",
        c_ck_d(abcd()).delta(&e_(&f)),
        tensors(
            &[
                (1, f.as_str(), "1"),
                (1, "1", f.as_str()),
                (1, "*[c:*[]]", "*[b:*[],a:*[]]"),
                (1, "*[a:*[]]", "*[b:*[],c:*[]]"),
                (1, "*[b:*[]]", "*[a:*[c:*[]]]"),
                (1, "*[c:*[]] *[b:*[]]", "*[a:*[]]"),
                (1, "*[b:*[],a:*[]]", "*[c:*[]]"),
                (1, "*[a:*[c:*[]]]", "*[b:*[]]"),
            ],
            e_,
        ),
    ));

    let cpo = c_labeled(Family::Preordered);
    let small = [
        ("1[]", tensors(&[(1, "1", "1")], c_lf)),
        ("2[1[]]", tensors(&[(1, "2[1[]]", "1"), (1, "1", "2[1[]]")], c_lf)),
        (
            "2[2[],1[]]",
            tensors(
                &[
                    (1, "2[2[],1[]]", "1"),
                    (1, "1", "2[2[],1[]]"),
                    (1, "2[1[]]", "1[1[]]"),
                    (1, "1[1[]]", "2[1[]]"),
                ],
                c_lf,
            ),
        ),
        (
            "2[4[]] 3[1[]]",
            tensors(
                &[
                    (1, "2[4[]] 3[1[]]", "1"),
                    (1, "1", "2[4[]] 3[1[]]"),
                    (1, "1[2[]]", "2[1[]]"),
                    (1, "2[1[]]", "1[2[]]"),
                ],
                c_lf,
            ),
        ),
    ];
    out.push(item(
        "Δ_Cpo display (up to four vertices)",
        lines(small.iter().map(|(f, _)| (c_lf(f), cpo.delta(&c_lf(f)))), "Δ"),
        lines(small.iter().map(|(f, v)| (c_lf(f), v.clone())), "Δ"),
    ));
    let large = [
        (
            "2[3[],3[1[]]]",
            tensors(
                &[
                    (1, "2[3[],3[1[]]]", "1"),
                    (1, "1", "2[3[],3[1[]]]"),
                    (1, "2[3[]] 3[1[]]", "1[2[]]"),
                    (1, "1[2[],2[]]", "2[1[]]"),
                    (1, "2[3[1[]]]", "1[2[]]"),
                    (1, "1[2[]]", "2[3[1[]]]"),
                    (1, "2[1[]]", "1[2[],2[]]"),
                    (1, "1[2[]]", "2[3[],1[]]"),
                ],
                c_lf,
            ),
        ),
        (
            "3[5[],2[]] 4[1[]]",
            tensors(
                &[
                    (1, "3[5[],2[]] 4[1[]]", "1"),
                    (1, "1", "3[5[],2[]] 4[1[]]"),
                    (1, "2[1[]]", "2[4[]] 3[1[]]"),
                    (1, "1[2[]]", "3[2[]] 4[1[]]"),
                    (1, "2[1[]]", "2[3[],1[]]"),
                    (1, "3[2[]] 4[1[]]", "1[2[]]"),
                    (1, "2[4[]] 3[1[]]", "2[1[]]"),
                    (1, "2[3[],1[]]", "2[1[]]"),
                ],
                c_lf,
            ),
        ),
    ];
    out.push(item(
        "Δ_Cpo display (five and six vertices)",
        lines(large.iter().map(|(f, _)| (c_lf(f), cpo.delta(&c_lf(f)))), "Δ"),
        lines(large.iter().map(|(f, v)| (c_lf(f), v.clone())), "Δ"),
    ));

    let (a, e) = antipode_list(&c_ck(), &s_cck_printed());
    out.push(item("S_CCK list", a, e));
    let (a, e) = antipode_list(&cpo, &s_cpo_printed());
    out.push(item("S_Cpo list", a, e));

    let fq_prod = lin(
        &[
            (1, "(1 2 3 5 4)"),
            (1, "(1 2 5 3 4)"),
            (1, "(1 5 2 3 4)"),
            (1, "(5 1 2 3 4)"),
            (1, "(1 2 5 4 3)"),
            (1, "(1 5 2 4 3)"),
            (1, "(5 1 2 4 3)"),
            (1, "(1 5 4 2 3)"),
            (1, "(5 1 4 2 3)"),
            (1, "(5 4 1 2 3)"),
        ],
        word,
    );
    let fq_cop = tensors(
        &[
            (1, "1", "(4 1 3 2 5)"),
            (1, "(1)", "(1 3 2 4)"),
            (1, "(2 1)", "(2 1 3)"),
            (1, "(3 1 2)", "(1 2)"),
            (1, "(4 1 3 2)", "(1)"),
            (1, "(4 1 3 2 5)", "1"),
        ],
        word,
    );
    out.push(item(
        "FQSym product and coproduct",
        format!(
            "{}\n{}",
            FQSym.mul(&word("(1 2 3)"), &word("(2 1)")),
            FQSym.delta(&word("(4 1 3 2 5)"))
        ),
        format!("{fq_prod}\n{fq_cop}"),
    ));

    let wq_prod = lin(
        &[
            (1, "(1 1 2 4 3)"),
            (1, "(1 1 4 2 3)"),
            (1, "(1 4 1 2 3)"),
            (1, "(4 1 1 2 3)"),
            (1, "(1 1 4 3 2)"),
            (1, "(1 4 1 3 2)"),
            (1, "(4 1 1 3 2)"),
            (1, "(1 4 3 1 2)"),
            (1, "(4 1 3 1 2)"),
            (1, "(4 3 1 1 2)"),
        ],
        word,
    );
    let wq_cop = tensors(
        &[
            (1, "1", "(2 1 1 3 2)"),
            (1, "(1)", "(1 1 3 2)"),
            (1, "(2 1)", "(1 3 2)"),
            (1, "(2 1 1)", "(2 1)"),
            (1, "(2 1 1 3)", "(1)"),
            (1, "(2 1 1 3 2)", "1"),
        ],
        word,
    );
    let wq_dual = tensors(
        &[
            (1, "1", "(2 1 3 1 2 2 4 5)"),
            (1, "(1 1)", "(1 2 1 1 3 4)"),
            (1, "(2 1 1 2 2)", "(1 2 3)"),
            (1, "(2 1 3 1 2 2)", "(1 2)"),
            (1, "(2 1 3 1 2 2 4)", "(1)"),
            (1, "(2 1 3 1 2 2 4 5)", "1"),
        ],
        word,
    );
    out.push(item(
        "WQSym* product and coproduct",
        format!(
            "{}\n{}\n{}",
            WQSymStar.mul(&word("(1 1 2)"), &word("(2 1)")),
            WQSymStar.delta(&word("(2 1 1 3 2)")),
            WQSym.delta(&word("(2 1 3 1 2 2 4 5)"))
        ),
        format!("{wq_prod}\n{wq_cop}\n{wq_dual}"),
    ));

    out.push(item(
        "quasi-shuffle 11-term display",
        csh_product(),
        LinComb::from_basis_iter(CSH_PRINTED.iter().map(|w| dword(w))),
    ));

    let mut actual = Vec::new();
    let mut expected = Vec::new();
    for (f, terms) in PHI_PRINTED {
        let f = lf(f);
        let e = lin(terms, word);
        actual.push(format!("Φ({f}) = {}", phi_wqsym(&f).unwrap()));
        expected.push(format!("Φ({f}) = {e}"));
        if Family::Ordered.contains(&f) {
            actual.push(format!("Θ({f}) = {}", theta(&f).unwrap()));
            expected.push(format!("Θ({f}) = {e}"));
        }
    }
    out.push(item("Φ/Θ value lists", actual.join("\n"), expected.join("\n")));

    out.extend(symbolic_gallery());

    let xyzt = atoms("x,y,z,t");
    let dfq = DecoratedFQSym { atoms: xyzt.clone() };
    out.push(item(
        "decorated FQSym displays",
        format!(
            "{}\n{}",
            dfq.mul(&deco("(2 1 3 | y x z)"), &deco("(1 | t)")),
            dfq.delta(&deco("(4 3 2 1 | t z y x)"))
        ),
        format!(
            "{}\n{}",
            lin(
                &[
                    (1, "(2 1 3 4 | y x z t)"),
                    (1, "(2 1 4 3 | y x t z)"),
                    (1, "(2 4 1 3 | y t x z)"),
                    (1, "(4 2 1 3 | t y x z)"),
                ],
                deco
            ),
            tensors(
                &[
                    (1, "(4 3 2 1 | t z y x)", "1"),
                    (1, "(3 2 1 | t z y)", "(1 | x)"),
                    (1, "(2 1 | t z)", "(2 1 | y x)"),
                    (1, "(1 | t)", "(3 2 1 | z y x)"),
                    (1, "1", "(4 3 2 1 | t z y x)"),
                ],
                deco
            )
        ),
    ));
    let dwq = DecoratedWQSym { atoms: xyzt };
    out.push(item(
        "decorated WQSym displays",
        format!(
            "{}\n{}",
            dwq.mul(&deco("(2 1 1 | y x z)"), &deco("(1 | t)")),
            dwq.delta(&deco("(2 1 1 3 | y x z t)"))
        ),
        format!(
            "{}\n{}",
            lin(
                &[
                    (1, "(2 1 1 1 | y x z t)"),
                    (1, "(2 1 1 2 | y x z t)"),
                    (1, "(2 1 1 3 | y x z t)"),
                    (1, "(3 2 2 1 | y x z t)"),
                    (1, "(3 1 1 2 | y x z t)"),
                ],
                deco
            ),
            tensors(
                &[
                    (1, "(2 1 1 3 | y x z t)", "1"),
                    (1, "(1 1 | x z)", "(1 2 | y t)"),
                    (1, "(2 1 1 | y x z)", "(1 | t)"),
                    (1, "1", "(2 1 1 3 | y x z t)"),
                ],
                deco
            )
        ),
    ));
    let sh = ShuffleAlgebra {
        atoms: atoms("v1,v2,v3,v4,v5"),
    };
    out.push(item(
        "decorated shuffle displays",
        format!(
            "{}\n{}",
            sh.mul(&dword("(v1 v2 v3)"), &dword("(v4 v5)")),
            sh.delta(&dword("(v1 v2 v3 v4)"))
        ),
        format!(
            "{}\n{}",
            lin(
                &[
                    (1, "(v1 v2 v3 v4 v5)"),
                    (1, "(v1 v2 v4 v3 v5)"),
                    (1, "(v1 v4 v2 v3 v5)"),
                    (1, "(v4 v1 v2 v3 v5)"),
                    (1, "(v1 v2 v4 v5 v3)"),
                    (1, "(v1 v4 v2 v5 v3)"),
                    (1, "(v4 v1 v2 v5 v3)"),
                    (1, "(v1 v4 v5 v2 v3)"),
                    (1, "(v4 v1 v5 v2 v3)"),
                    (1, "(v4 v5 v1 v2 v3)"),
                ],
                dword
            ),
            tensors(
                &[
                    (1, "(v1 v2 v3 v4)", "1"),
                    (1, "(v1 v2 v3)", "(v4)"),
                    (1, "(v1 v2)", "(v3 v4)"),
                    (1, "(v1)", "(v2 v3 v4)"),
                    (1, "1", "(v1 v2 v3 v4)"),
                ],
                dword
            )
        ),
    ));
    out
}

/// Lines that differ, with the terms present on only one side.
pub fn diff(actual: &str, expected: &str) -> String {
    let mut out = String::new();
    for (a, e) in actual.lines().zip(expected.lines()) {
        if a == e {
            continue;
        }
        let split = |s: &str| -> Vec<String> { s.split(" + ").map(str::to_string).collect() };
        let (ta, te) = (split(a), split(e));
        let only_a: Vec<&String> = ta.iter().filter(|t| !te.contains(t)).collect();
        let only_e: Vec<&String> = te.iter().filter(|t| !ta.contains(t)).collect();
        out += &format!("  line `{}`\n    extra:   {only_a:?}\n    missing: {only_e:?}\n", &a[..a.len().min(60)]);
    }
    if actual.lines().count() != expected.lines().count() {
        out += "  line counts differ\n";
    }
    out
}

/// Trees whose symbolic letters occur in `x`.
pub fn relevant_trees<T: SeedTree>(x: &LinComb<DWord>) -> Vec<T> {
    let mut out: Vec<T> = Vec::new();
    for w in x.basis_elements() {
        for letter in &w.0 {
            for a in letter.atoms() {
                let inner = a.as_str().strip_prefix("φ(").and_then(|s| s.strip_suffix(')')).unwrap();
                let t = T::parse_tree(inner).unwrap();
                if !out.contains(&t) {
                    out.push(t);
                }
            }
        }
    }
    out.sort();
    out
}

/// The seed giving `trees[i]` the value `values[choice[i]]`.
pub fn table_seed<T: SeedTree>(trees: &[T], values: &[LinComb<Letter>], choice: &[usize]) -> Seed<T> {
    Seed::Table(
        trees
            .iter()
            .zip(choice)
            .map(|(t, &i)| (t.clone(), values[i].clone()))
            .collect(),
    )
}

/// Replaces each symbolic letter of `x` by its seed value, merging bracketed
/// letters with the target bracket.
pub fn specialize<T: SeedTree>(x: &LinComb<DWord>, seed: &Seed<T>, target: &Target) -> LinComb<DWord> {
    let value = |letter: &Letter| -> LinComb<Letter> {
        let parts: Vec<LinComb<Letter>> = letter
            .atoms()
            .iter()
            .map(|a| {
                let inner = a.as_str().strip_prefix("φ(").and_then(|s| s.strip_suffix(')')).unwrap();
                seed.value(&T::parse_tree(inner).unwrap())
            })
            .collect();
        if parts.len() == 1 {
            parts.into_iter().next().unwrap()
        } else {
            target.bracket_all(&parts)
        }
    };
    x.map_linear(|w| {
        w.0.iter().fold(LinComb::basis(DWord::empty()), |acc, letter| {
            acc.bilinear(&value(letter), |u, l| {
                let mut v = u.0.clone();
                v.push(l.clone());
                LinComb::basis(DWord(v))
            })
        })
    })
}

/// Seed values used by the cross-validation: zero and the two atoms.
pub fn zero_or_letter(ab: &[hopf_forests::forest::Atom]) -> Vec<LinComb<Letter>> {
    let mut v = vec![LinComb::zero()];
    v.extend(ab.iter().map(|a| LinComb::basis(Letter::atom(a.clone()))));
    v
}
