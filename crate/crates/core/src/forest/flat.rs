use super::tree::{EdgeLabel, Forest, Label, Tree};

/// Index-based view of a forest used by cut and contraction algorithms.
///
/// Vertices are numbered in depth-first preorder (roots in forest order,
/// children in stored order). `edge[v]` is the label of the edge from `v` to
/// its parent; edges are identified with their upper vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat<V, E> {
    pub parent: Vec<Option<usize>>,
    pub label: Vec<V>,
    pub edge: Vec<Option<E>>,
}

impl<V: Label, E: EdgeLabel> Flat<V, E> {
    pub fn from_forest(f: &Forest<V, E>) -> Self {
        let mut flat = Flat {
            parent: Vec::new(),
            label: Vec::new(),
            edge: Vec::new(),
        };
        for t in &f.trees {
            flat.push_tree(t, None, None);
        }
        flat
    }

    pub fn from_tree(t: &Tree<V, E>) -> Self {
        let mut flat = Flat {
            parent: Vec::new(),
            label: Vec::new(),
            edge: Vec::new(),
        };
        flat.push_tree(t, None, None);
        flat
    }

    fn push_tree(&mut self, t: &Tree<V, E>, parent: Option<usize>, edge: Option<E>) {
        let v = self.parent.len();
        self.parent.push(parent);
        self.label.push(t.label.clone());
        self.edge.push(edge);
        for (e, c) in &t.children {
            self.push_tree(c, Some(v), Some(e.clone()));
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Non-root vertices, which index the edges.
    pub fn edges(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.parent[v].is_some()).collect()
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.parent[v].is_none()).collect()
    }

    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut ch = vec![Vec::new(); self.len()];
        for v in 0..self.len() {
            if let Some(p) = self.parent[v] {
                ch[p].push(v);
            }
        }
        ch
    }

    /// Whether `upper` lies strictly above `lower` (`upper ↠ lower`).
    pub fn is_above(&self, upper: usize, lower: usize) -> bool {
        let mut v = self.parent[upper];
        while let Some(p) = v {
            if p == lower {
                return true;
            }
            v = self.parent[p];
        }
        false
    }

    pub fn root_of(&self, mut v: usize) -> usize {
        while let Some(p) = self.parent[v] {
            v = p;
        }
        v
    }

    /// Induced subforest on the vertices with `keep[v]`, in index order.
    pub fn restrict(&self, keep: &[bool]) -> Self {
        let mut index = vec![usize::MAX; self.len()];
        let mut out = Flat {
            parent: Vec::new(),
            label: Vec::new(),
            edge: Vec::new(),
        };
        for v in 0..self.len() {
            if !keep[v] {
                continue;
            }
            index[v] = out.parent.len();
            let parent = self.parent[v].filter(|&p| keep[p]).map(|p| index[p]);
            out.parent.push(parent);
            out.label.push(self.label[v].clone());
            out.edge.push(if parent.is_some() {
                self.edge[v].clone()
            } else {
                None
            });
        }
        out
    }

    /// Replaces labels by their packing.
    pub fn repack(&mut self) {
        V::repack(&mut self.label);
    }

    fn build(&self, children: &[Vec<usize>], v: usize) -> Tree<V, E> {
        Tree {
            label: self.label[v].clone(),
            children: children[v]
                .iter()
                .map(|&c| {
                    (
                        self.edge[c].clone().expect("non-root vertex has an edge"),
                        self.build(children, c),
                    )
                })
                .collect(),
        }
    }

    /// Forest with tree and sibling order taken from vertex indices.
    pub fn to_planar_forest(&self) -> Forest<V, E> {
        let ch = self.children();
        Forest::planar(self.roots().into_iter().map(|r| self.build(&ch, r)).collect())
    }

    /// Canonical forest.
    pub fn to_forest(&self) -> Forest<V, E> {
        self.to_planar_forest().canonical()
    }
}

/// All admissible cuts (antichains of vertices), including the empty and
/// the total cut.
pub fn admissible_cuts<V: Label, E: EdgeLabel>(f: &Flat<V, E>) -> Vec<Vec<usize>> {
    let ch = f.children();
    fn below(v: usize, ch: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let mut out = vec![vec![v]];
        out.extend(product(ch[v].iter().map(|&c| below(c, ch)).collect()));
        out
    }
    fn product(options: Vec<Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
        let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
        for opts in options {
            let mut next = Vec::with_capacity(acc.len() * opts.len());
            for a in &acc {
                for o in &opts {
                    let mut c = a.clone();
                    c.extend_from_slice(o);
                    next.push(c);
                }
            }
            acc = next;
        }
        acc
    }
    product(f.roots().into_iter().map(|r| below(r, &ch)).collect())
}

/// Whether `cut` is a nonempty-or-empty antichain of `f`.
pub fn is_admissible<V: Label, E: EdgeLabel>(f: &Flat<V, E>, cut: &[usize]) -> bool {
    cut.iter().all(|&v| v < f.len())
        && cut.iter().enumerate().all(|(i, &a)| {
            cut.iter()
                .enumerate()
                .all(|(j, &b)| i == j || (a != b && !f.is_above(a, b)))
        })
}

/// Splits along a cut into (Lea, Roo): the vertices at or above the cut and
/// the rest. Labels are restricted and repacked.
pub fn split_cut<V: Label, E: EdgeLabel>(f: &Flat<V, E>, cut: &[usize]) -> (Flat<V, E>, Flat<V, E>) {
    let mut upper = vec![false; f.len()];
    for v in 0..f.len() {
        upper[v] = cut.iter().any(|&c| c == v || f.is_above(v, c));
    }
    let lower: Vec<bool> = upper.iter().map(|u| !u).collect();
    let mut lea = f.restrict(&upper);
    let mut roo = f.restrict(&lower);
    lea.repack();
    roo.repack();
    (lea, roo)
}
