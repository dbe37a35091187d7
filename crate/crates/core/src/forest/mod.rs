//! Rooted forests of every family: representation, parsing, enumeration and cuts.

pub mod enumerate;
mod family;
mod flat;
mod tree;

pub use family::{Family, Grading};
pub use flat::{admissible_cuts, is_admissible, split_cut, Flat};
pub use tree::{atoms, Atom, EdgeLabel, Forest, Label, Tree};

use crate::error::{Error, Result};

/// Rooted forests (basis of H_CK).
pub type RootedForest = Forest<()>;
/// Forests labeled by an order or a preorder.
pub type LabeledForest = Forest<u32>;
/// Vertex-decorated forests (basis of H_CK^D).
pub type DecoratedForest = Forest<Atom>;
/// Edge-decorated forests (basis of C_CK^D).
pub type EdgeForest = Forest<(), Atom>;
/// Edge-decorated trees.
pub type EdgeTree = Tree<(), Atom>;

/// Product of canonical forests: disjoint union, with the second factor's
/// levels shifted above the first's (by `max(F)`, which is `|F|_v` for
/// ordered forests).
pub fn graded_product<V: Label, E: EdgeLabel>(f: &Forest<V, E>, g: &Forest<V, E>) -> Forest<V, E> {
    let mut trees = f.trees.clone();
    trees.extend(g.shifted(f.max_level()).trees);
    Forest::from_trees(trees)
}

/// Product of planar forests: concatenation.
pub fn planar_product<V: Label, E: EdgeLabel>(f: &Forest<V, E>, g: &Forest<V, E>) -> Forest<V, E> {
    let mut trees = f.trees.clone();
    trees.extend(g.trees.iter().cloned());
    Forest::planar(trees)
}

/// Canonicalizes a labeled forest after checking its family rules.
pub fn canonicalize_labeled(f: &LabeledForest, family: Family) -> Result<LabeledForest> {
    family.validate(f)?;
    Ok(f.clone().canonical())
}

/// The map φ from planar forests to heap-ordered forests: vertices are
/// numbered depth first, root before subtrees, left to right.
pub fn planar_to_ordered(p: &RootedForest) -> LabeledForest {
    let flat = Flat::from_forest(p);
    Flat {
        parent: flat.parent.clone(),
        label: (1..=flat.len() as u32).collect(),
        edge: flat.edge.clone(),
    }
    .to_forest()
}

/// The map ψ from ordered forests to planar forests: roots and siblings
/// ordered by increasing label, labels forgotten.
pub fn ordered_to_planar(f: &LabeledForest) -> Result<RootedForest> {
    Family::Ordered.validate(f)?;
    let mut sorted = f.clone();
    sorted.canonicalize();
    fn strip(t: &Tree<u32>) -> Tree<()> {
        Tree::new((), t.children.iter().map(|(_, c)| ((), strip(c))).collect())
    }
    Ok(Forest::planar(sorted.trees.iter().map(strip).collect()))
}

/// Whether an ordered forest lies in the image of φ.
pub fn in_planar_image(f: &LabeledForest) -> bool {
    match ordered_to_planar(f) {
        Ok(p) => planar_to_ordered(&p) == *f,
        Err(_) => false,
    }
}

/// Parses a forest of the given labeled family and canonicalizes it.
pub fn parse_labeled(s: &str, family: Family) -> Result<LabeledForest> {
    let f = LabeledForest::parse(s)?;
    canonicalize_labeled(&f, family)
}

/// Rejects a mismatch between two families.
pub fn same_family(a: Family, b: Family) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::Contract(format!("family mismatch: {a} vs {b}")))
    }
}
