//! The commutative prelie structure on edge-decorated trees: `⋎` merges
//! roots, `▷` grafts the first tree onto the non-root vertices of the second.

use crate::error::{Error, Result};
use crate::forest::enumerate::{edge_decorated, trees_only};
use crate::forest::{Atom, EdgeTree, Tree};
use crate::linear::{EchelonBasis, LinComb};

fn require_edges(t: &EdgeTree, side: &str) -> Result<()> {
    if t.children.is_empty() {
        return Err(Error::Contract(format!("{side} operand {t} has no edge")));
    }
    Ok(())
}

/// `T1 ∘_s T2`: the root of `T1` identified with the vertex of `T2` of
/// preorder index `s`.
pub fn compose(t1: &EdgeTree, s: usize, t2: &EdgeTree) -> EdgeTree {
    fn go(t: &EdgeTree, s: usize, counter: &mut usize, extra: &[(Atom, EdgeTree)]) -> EdgeTree {
        let here = *counter;
        *counter += 1;
        let mut children: Vec<(Atom, EdgeTree)> = t
            .children
            .iter()
            .map(|(e, c)| (e.clone(), go(c, s, counter, extra)))
            .collect();
        if here == s {
            children.extend(extra.iter().cloned());
        }
        Tree::new((), children)
    }
    go(t2, s, &mut 0, &t1.children).canonical()
}

/// The edge tree `E(a)`.
pub fn edge(a: Atom) -> EdgeTree {
    Tree::new((), vec![(a, Tree::leaf(()))])
}

/// `T1 ⋎ T2`.
pub fn graft_root(t1: &EdgeTree, t2: &EdgeTree) -> Result<EdgeTree> {
    require_edges(t1, "left")?;
    require_edges(t2, "right")?;
    Ok(compose(t1, 0, t2))
}

/// `T1 ▷ T2 = Σ_{s ∈ V*(T2)} T1 ∘_s T2`.
pub fn graft_below(t1: &EdgeTree, t2: &EdgeTree) -> Result<LinComb<EdgeTree>> {
    require_edges(t1, "left")?;
    require_edges(t2, "right")?;
    Ok(LinComb::from_basis_iter(
        (1..t2.vertex_count()).map(|s| compose(t1, s, t2)),
    ))
}

/// `B_{d1…dk}(T1, …, Tk)`: a new root carrying edges `d_i` with `T_i` above;
/// `None` stands for the one-vertex tree.
pub fn b_graft(decos: &[Atom], subtrees: &[Option<EdgeTree>]) -> Result<EdgeTree> {
    if decos.len() != subtrees.len() {
        return Err(Error::Contract(format!(
            "{} decorations for {} subtrees",
            decos.len(),
            subtrees.len()
        )));
    }
    Ok(Tree::new(
        (),
        decos
            .iter()
            .zip(subtrees)
            .map(|(d, t)| (d.clone(), t.clone().unwrap_or_else(|| Tree::leaf(()))))
            .collect(),
    )
    .canonical())
}

pub fn root_lin(x: &LinComb<EdgeTree>, y: &LinComb<EdgeTree>) -> LinComb<EdgeTree> {
    x.bilinear(y, |a, b| LinComb::basis(compose(a, 0, b)))
}

pub fn below_lin(x: &LinComb<EdgeTree>, y: &LinComb<EdgeTree>) -> LinComb<EdgeTree> {
    x.bilinear(y, |a, b| {
        LinComb::from_basis_iter((1..b.vertex_count()).map(|s| compose(a, s, b)))
    })
}

/// Outcome of checking the ComPreLie identities on one triple.
#[derive(Clone, Debug, Default)]
pub struct ComPreLieReport {
    pub failures: Vec<&'static str>,
}

impl ComPreLieReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks commutativity and associativity of `⋎`, the left prelie identity
/// for `▷`, and `x ▷ (y ⋎ z) = (x ▷ y) ⋎ z + (x ▷ z) ⋎ y`.
pub fn compre_lie_check(
    x: &LinComb<EdgeTree>,
    y: &LinComb<EdgeTree>,
    z: &LinComb<EdgeTree>,
) -> ComPreLieReport {
    let mut rep = ComPreLieReport::default();
    if root_lin(x, y) != root_lin(y, x) {
        rep.failures.push("⋎ commutative");
    }
    if root_lin(&root_lin(x, y), z) != root_lin(x, &root_lin(y, z)) {
        rep.failures.push("⋎ associative");
    }
    let assoc = |a, b, c| &below_lin(a, &below_lin(b, c)) - &below_lin(&below_lin(a, b), c);
    if assoc(x, y, z) != assoc(y, x, z) {
        rep.failures.push("▷ left prelie");
    }
    let lhs = below_lin(x, &root_lin(y, z));
    let rhs = &root_lin(&below_lin(x, y), z) + &root_lin(&below_lin(x, z), y);
    if lhs != rhs {
        rep.failures.push("▷ distributes over ⋎");
    }
    rep
}

/// Span dimension versus tree count, per edge degree.
#[derive(Clone, Debug)]
pub struct GenerationReport {
    pub atoms: Vec<Atom>,
    pub rows: Vec<(usize, usize, usize)>,
}

impl GenerationReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|&(_, span, trees)| span == trees)
    }
}

/// Closes the span of the `E(d)` under `⋎` and `▷` one degree at a time and
/// compares its dimension to the number of trees.
pub fn generation_span(max_edges: usize, atoms: &[Atom]) -> GenerationReport {
    let mut spans: Vec<EchelonBasis<EdgeTree>> = vec![EchelonBasis::new()];
    let mut rows = Vec::new();
    for d in 1..=max_edges {
        let mut span = EchelonBasis::new();
        if d == 1 {
            for a in atoms {
                span.insert(&LinComb::basis(edge(a.clone())));
            }
        }
        for i in 1..d {
            let left: Vec<LinComb<EdgeTree>> = spans[i].vectors().cloned().collect();
            let right: Vec<LinComb<EdgeTree>> = spans[d - i].vectors().cloned().collect();
            for x in &left {
                for y in &right {
                    span.insert(&root_lin(x, y));
                    span.insert(&below_lin(x, y));
                }
            }
        }
        let trees = trees_only(edge_decorated(atoms, d)).len();
        rows.push((d, span.dim(), trees));
        spans.push(span);
    }
    GenerationReport {
        atoms: atoms.to_vec(),
        rows,
    }
}

/// The two sides of `E(a) ▷ (E(b) ▷ E(c)) = (E(a) ⋎ E(b)) ▷ E(c) + (E(a) ▷ E(b)) ▷ E(c)`.
pub fn freeness_relation(a: &Atom, b: &Atom, c: &Atom) -> (LinComb<EdgeTree>, LinComb<EdgeTree>) {
    let (ea, eb, ec) = (
        LinComb::basis(edge(a.clone())),
        LinComb::basis(edge(b.clone())),
        LinComb::basis(edge(c.clone())),
    );
    let lhs = below_lin(&ea, &below_lin(&eb, &ec));
    let rhs = &below_lin(&root_lin(&ea, &eb), &ec) + &below_lin(&below_lin(&ea, &eb), &ec);
    (lhs, rhs)
}
