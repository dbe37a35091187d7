//! Contraction coproducts `Δ(F) = Σ_e Part_e(F) ⊗ Cont_e(F)` on forests
//! without isolated vertices.

use std::sync::Arc;

use crate::bialgebra::GradedBialgebra;
use crate::error::{Error, Result};
use crate::forest::enumerate;
use crate::forest::{
    graded_product, in_planar_image, planar_to_ordered, Atom, EdgeLabel, Family, Flat, Forest,
    Grading, Label, LabeledForest,
};
use crate::linear::{LinComb, Tensor};

/// Edges of a flat forest are its non-root vertices; `kept[v]` says whether
/// the edge above `v` belongs to the subset.
fn edge_mask<V: Label, E: EdgeLabel>(flat: &Flat<V, E>, subset: &[usize]) -> Result<Vec<bool>> {
    let edges = flat.edges();
    let mut kept = vec![false; flat.len()];
    for &i in subset {
        let v = *edges
            .get(i)
            .ok_or_else(|| Error::Contract(format!("edge {i} out of range (forest has {} edges)", edges.len())))?;
        kept[v] = true;
    }
    Ok(kept)
}

/// All vertices, only the kept edges; labels untouched.
pub fn part_flat<V: Label, E: EdgeLabel>(flat: &Flat<V, E>, kept: &[bool]) -> Flat<V, E> {
    Flat {
        parent: (0..flat.len())
            .map(|v| flat.parent[v].filter(|_| kept[v]))
            .collect(),
        label: flat.label.clone(),
        edge: (0..flat.len())
            .map(|v| flat.edge[v].clone().filter(|_| kept[v]))
            .collect(),
    }
}

/// One vertex per component of the kept edges, labeled by the component
/// root; the remaining edges keep their labels. Labels are repacked.
pub fn cont_flat<V: Label, E: EdgeLabel>(flat: &Flat<V, E>, kept: &[bool]) -> Flat<V, E> {
    let comp_root = |mut v: usize| {
        while kept[v] {
            v = flat.parent[v].expect("kept edges have a parent");
        }
        v
    };
    let mut index = vec![usize::MAX; flat.len()];
    let mut out = Flat {
        parent: Vec::new(),
        label: Vec::new(),
        edge: Vec::new(),
    };
    for r in (0..flat.len()).filter(|&v| !kept[v]) {
        index[r] = out.len();
        out.parent.push(flat.parent[r].map(|p| index[comp_root(p)]));
        out.label.push(flat.label[r].clone());
        out.edge.push(flat.edge[r].clone());
    }
    out.repack();
    out
}

/// Deletes isolated vertices and repacks the labels.
pub fn normal_form_flat<V: Label, E: EdgeLabel>(flat: &Flat<V, E>) -> Forest<V, E> {
    let mut has_edge = vec![false; flat.len()];
    for v in 0..flat.len() {
        if let Some(p) = flat.parent[v] {
            has_edge[v] = true;
            has_edge[p] = true;
        }
    }
    let mut g = flat.restrict(&has_edge);
    g.repack();
    g.to_forest()
}

/// Quotient normal form of a forest: isolated vertices removed, labels
/// repacked (standardized for ordered forests). The unit is the empty forest.
pub fn normal_form<V: Label, E: EdgeLabel>(f: &Forest<V, E>) -> Forest<V, E> {
    normal_form_flat(&Flat::from_forest(f))
}

/// `Part_e(F)` for edge indices in canonical depth-first order, before
/// normalization.
pub fn part<V: Label, E: EdgeLabel>(f: &Forest<V, E>, e: &[usize]) -> Result<Forest<V, E>> {
    let flat = Flat::from_forest(&f.clone().canonical());
    let kept = edge_mask(&flat, e)?;
    Ok(part_flat(&flat, &kept).to_forest())
}

/// `Cont_e(F)` for edge indices in canonical depth-first order.
pub fn cont<V: Label, E: EdgeLabel>(f: &Forest<V, E>, e: &[usize]) -> Result<Forest<V, E>> {
    let flat = Flat::from_forest(&f.clone().canonical());
    let kept = edge_mask(&flat, e)?;
    Ok(cont_flat(&flat, &kept).to_forest())
}

/// Calls `visit(kept)` for each of the `2^|E|` edge subsets.
pub fn for_each_edge_subset<V: Label, E: EdgeLabel>(flat: &Flat<V, E>, mut visit: impl FnMut(&[bool])) {
    let edges = flat.edges();
    assert!(edges.len() < 64, "too many edges to enumerate subsets");
    let mut kept = vec![false; flat.len()];
    for mask in 0u64..1 << edges.len() {
        for (i, &v) in edges.iter().enumerate() {
            kept[v] = mask >> i & 1 == 1;
        }
        visit(&kept);
    }
}

/// The contraction coproduct, both legs in normal form, duplicates summed.
pub fn contraction_coproduct<V: Label, E: EdgeLabel>(
    f: &Forest<V, E>,
) -> LinComb<Tensor<Forest<V, E>, Forest<V, E>>> {
    let flat = Flat::from_forest(f);
    let mut out = LinComb::zero();
    for_each_edge_subset(&flat, |kept| {
        let p = normal_form_flat(&part_flat(&flat, kept));
        let c = normal_form_flat(&cont_flat(&flat, kept));
        out.add_term(Tensor(p, c), crate::linear::q(1));
    });
    out
}

type BasisFn<V, E> = Arc<dyn Fn(usize) -> Vec<Forest<V, E>> + Send + Sync>;

/// A forest algebra graded by edges with the contraction coproduct.
#[derive(Clone)]
pub struct ContractionHopf<V: Label, E: EdgeLabel = ()> {
    name: String,
    basis_fn: BasisFn<V, E>,
}

impl<V: Label, E: EdgeLabel> std::fmt::Debug for ContractionHopf<V, E> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ContractionHopf").field("name", &self.name).finish()
    }
}

/// Calaque–Ebrahimi-Fard–Manchon algebra C_CK.
pub fn c_ck() -> ContractionHopf<()> {
    ContractionHopf {
        name: "c_ck".into(),
        basis_fn: Arc::new(|n| enumerate::rooted(Grading::Edges, n, true).expect("quotient grading")),
    }
}

/// Edge-decorated C_CK^D.
pub fn c_ck_d(atoms: Vec<Atom>) -> ContractionHopf<(), Atom> {
    ContractionHopf {
        name: "c_ck_d".into(),
        basis_fn: Arc::new(move |n| enumerate::edge_decorated(&atoms, n)),
    }
}

/// The labeled quotients C_po, C_o, C_ho and C_hpo.
pub fn c_labeled(family: Family) -> ContractionHopf<u32> {
    let name = match family {
        Family::Ordered => "c_o",
        Family::HeapOrdered => "c_ho",
        Family::Preordered => "c_po",
        Family::HeapPreordered => "c_hpo",
        Family::Rooted | Family::Planar => panic!("{family} forests carry no labels"),
    };
    ContractionHopf {
        name: name.into(),
        basis_fn: Arc::new(move |n| enumerate::labeled(family, Grading::Edges, n, true).expect("labeled family")),
    }
}

impl<V: Label, E: EdgeLabel> GradedBialgebra for ContractionHopf<V, E> {
    type B = Forest<V, E>;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn one(&self) -> Forest<V, E> {
        Forest::one()
    }

    fn degree(&self, b: &Forest<V, E>) -> usize {
        b.edge_count()
    }

    fn mul(&self, a: &Forest<V, E>, b: &Forest<V, E>) -> LinComb<Forest<V, E>> {
        LinComb::basis(graded_product(a, b))
    }

    fn delta(&self, b: &Forest<V, E>) -> LinComb<Tensor<Forest<V, E>, Forest<V, E>>> {
        contraction_coproduct(b)
    }

    fn basis(&self, degree: usize) -> Vec<Forest<V, E>> {
        (self.basis_fn)(degree)
    }
}

/// Number of terms of `Δ^(k)(F)` counted with multiplicity before
/// collection, iterating on the left leg.
pub fn iterated_term_count<V: Label, E: EdgeLabel>(f: &Forest<V, E>, k: usize) -> u128 {
    if k == 0 {
        return 1;
    }
    let flat = Flat::from_forest(f);
    let mut total = 0;
    for_each_edge_subset(&flat, |kept| {
        total += iterated_term_count(&normal_form_flat(&part_flat(&flat, kept)), k - 1);
    });
    total
}

/// Result of the C_NCK comodule check.
#[derive(Clone, Debug, Default)]
pub struct CoactionReport {
    pub max_edges: usize,
    pub forests_checked: usize,
    pub terms_checked: usize,
    pub violations: Vec<String>,
}

impl CoactionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `Δ_ho(φ(P))` lies in `C_ho ⊗ φ(C_NCK)` for every planar
/// forest `P` without isolated vertices and with at most `max_edges` edges,
/// and that both legs of `Δ_ho` stay in C_ho on all of C_ho.
pub fn coaction_check(max_edges: usize) -> CoactionReport {
    let mut rep = CoactionReport {
        max_edges,
        ..Default::default()
    };
    let ho = Family::HeapOrdered;
    for n in 0..=max_edges {
        for p in enumerate::planar(Grading::Edges, n, true).expect("quotient grading") {
            rep.forests_checked += 1;
            let f = planar_to_ordered(&p);
            for Tensor(l, r) in contraction_coproduct(&f).basis_elements() {
                rep.terms_checked += 1;
                if !ho.contains(l) {
                    rep.violations.push(format!("{p}: left leg {l} is not heap-ordered"));
                }
                if !in_planar_image(r) {
                    rep.violations.push(format!("{p}: right leg {r} is not planar ({l} ⊗ {r})"));
                }
            }
        }
        for f in enumerate::labeled(ho, Grading::Edges, n, true).expect("labeled family") {
            for Tensor(l, r) in contraction_coproduct(&f).basis_elements() {
                rep.terms_checked += 1;
                if !ho.contains(l) || !ho.contains(r) {
                    rep.violations.push(format!("{f}: {l} ⊗ {r} leaves C_ho"));
                }
            }
        }
    }
    rep
}

/// Terms of `Δ_ho(φ(P))` whose left leg is not the image of a planar forest:
/// witnesses that φ(C_NCK) is not a Hopf subalgebra.
pub fn non_planar_left_legs(f: &LabeledForest) -> Vec<Tensor<LabeledForest, LabeledForest>> {
    contraction_coproduct(f)
        .basis_elements()
        .filter(|Tensor(l, _)| !in_planar_image(l))
        .cloned()
        .collect()
}
