//! Forest Hopf algebras with the admissible-cut coproduct.

use std::sync::Arc;

use crate::bialgebra::GradedBialgebra;
use crate::forest::enumerate::{self, planar_vertex_decorated};
use crate::forest::{
    admissible_cuts, graded_product, planar_product, planar_to_ordered, split_cut, Atom, EdgeLabel,
    Family, Flat, Forest, Grading, Label, LabeledForest, RootedForest,
};
use crate::linear::{LinComb, Tensor};

type BasisFn<V> = Arc<dyn Fn(usize) -> Vec<Forest<V>> + Send + Sync>;

/// Cut coproduct `Δ(F) = Σ_c Lea_c(F) ⊗ Roo_c(F)` over admissible cuts,
/// labels restricted and repacked. Planar forests keep their order.
pub fn cut_coproduct<V: Label, E: EdgeLabel>(
    f: &Forest<V, E>,
    planar: bool,
) -> LinComb<Tensor<Forest<V, E>, Forest<V, E>>> {
    let flat = Flat::from_forest(f);
    LinComb::from_basis_iter(admissible_cuts(&flat).into_iter().map(|cut| {
        let (lea, roo) = split_cut(&flat, &cut);
        if planar {
            Tensor(lea.to_planar_forest(), roo.to_planar_forest())
        } else {
            Tensor(lea.to_forest(), roo.to_forest())
        }
    }))
}

/// A forest algebra graded by vertices with the cut coproduct.
#[derive(Clone)]
pub struct CutHopf<V: Label> {
    name: String,
    planar: bool,
    basis_fn: BasisFn<V>,
}

impl<V: Label> std::fmt::Debug for CutHopf<V> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CutHopf").field("name", &self.name).finish()
    }
}

impl<V: Label> CutHopf<V> {
    pub fn is_planar(&self) -> bool {
        self.planar
    }
}

/// Connes–Kreimer algebra H_CK.
pub fn h_ck() -> CutHopf<()> {
    CutHopf {
        name: "h_ck".into(),
        planar: false,
        basis_fn: Arc::new(|n| enumerate::rooted(Grading::Vertices, n, false).expect("vertex grading")),
    }
}

/// Foissy–Holtkamp algebra H_NCK of planar forests.
pub fn h_nck() -> CutHopf<()> {
    CutHopf {
        name: "h_nck".into(),
        planar: true,
        basis_fn: Arc::new(|n| enumerate::planar(Grading::Vertices, n, false).expect("vertex grading")),
    }
}

/// Vertex-decorated H_CK^D.
pub fn h_ck_d(atoms: Vec<Atom>) -> CutHopf<Atom> {
    CutHopf {
        name: "h_ck_d".into(),
        planar: false,
        basis_fn: Arc::new(move |n| {
            enumerate::vertex_decorated(&atoms, Grading::Vertices, n, false).expect("vertex grading")
        }),
    }
}

/// Vertex-decorated planar forests.
pub fn h_nck_d(atoms: Vec<Atom>) -> CutHopf<Atom> {
    CutHopf {
        name: "h_nck_d".into(),
        planar: true,
        basis_fn: Arc::new(move |n| planar_vertex_decorated(&atoms, n)),
    }
}

/// The labeled algebras H_o, H_ho, H_po and H_hpo.
pub fn h_labeled(family: Family) -> CutHopf<u32> {
    let name = match family {
        Family::Ordered => "h_o",
        Family::HeapOrdered => "h_ho",
        Family::Preordered => "h_po",
        Family::HeapPreordered => "h_hpo",
        Family::Rooted | Family::Planar => panic!("{family} forests carry no labels"),
    };
    CutHopf {
        name: name.into(),
        planar: false,
        basis_fn: Arc::new(move |n| {
            enumerate::labeled(family, Grading::Vertices, n, false).expect("labeled family")
        }),
    }
}

impl<V: Label> GradedBialgebra for CutHopf<V> {
    type B = Forest<V>;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn one(&self) -> Forest<V> {
        Forest::one()
    }

    fn degree(&self, b: &Forest<V>) -> usize {
        b.vertex_count()
    }

    fn mul(&self, a: &Forest<V>, b: &Forest<V>) -> LinComb<Forest<V>> {
        LinComb::basis(if self.planar {
            planar_product(a, b)
        } else {
            graded_product(a, b)
        })
    }

    fn delta(&self, b: &Forest<V>) -> LinComb<Tensor<Forest<V>, Forest<V>>> {
        cut_coproduct(b, self.planar)
    }

    fn basis(&self, degree: usize) -> Vec<Forest<V>> {
        (self.basis_fn)(degree)
    }
}

/// Checks that the coproduct of every forest of a labeled family up to
/// `max_degree` stays in the family. Returns the offending terms.
pub fn closure_violations(family: Family, max_degree: usize) -> Vec<String> {
    let h = h_labeled(family);
    let mut bad = Vec::new();
    for d in 0..=max_degree {
        for f in h.basis(d) {
            for Tensor(l, r) in h.delta(&f).basis_elements() {
                if !family.contains(l) || !family.contains(r) {
                    bad.push(format!("Δ({f}) ∋ {l} ⊗ {r}"));
                }
            }
        }
        for da in 1..d {
            for a in h.basis(da) {
                for b in h.basis(d - da) {
                    for p in h.mul(&a, &b).basis_elements() {
                        if !family.contains(p) {
                            bad.push(format!("{a} · {b} = {p}"));
                        }
                    }
                }
            }
        }
    }
    bad
}

/// Checks `(φ⊗φ)∘Δ_NCK = Δ_ho∘φ` on all planar forests up to `max_degree`.
pub fn planar_map_violations(max_degree: usize) -> Vec<RootedForest> {
    let ho = h_labeled(Family::HeapOrdered);
    let mut bad = Vec::new();
    for d in 0..=max_degree {
        for p in h_nck().basis(d) {
            let image: LinComb<Tensor<LabeledForest, LabeledForest>> = cut_coproduct(&p, true)
                .map_basis(|Tensor(l, r)| Tensor(planar_to_ordered(l), planar_to_ordered(r)));
            if image != ho.delta(&planar_to_ordered(&p)) {
                bad.push(p);
            }
        }
    }
    bad
}
