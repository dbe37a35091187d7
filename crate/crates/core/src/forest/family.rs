use std::fmt;

use super::flat::Flat;
use super::tree::Forest;
use crate::error::{Error, Result};

/// The six forest families.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    Rooted,
    Planar,
    Ordered,
    HeapOrdered,
    Preordered,
    HeapPreordered,
}

/// How forests are graded.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Grading {
    Vertices,
    Edges,
}

const FAMILY_NAMES: [&str; 6] = [
    "rooted",
    "planar",
    "ordered",
    "heap_ordered",
    "preordered",
    "heap_preordered",
];

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Rooted,
        Family::Planar,
        Family::Ordered,
        Family::HeapOrdered,
        Family::Preordered,
        Family::HeapPreordered,
    ];

    pub fn name(self) -> &'static str {
        FAMILY_NAMES[self as usize]
    }

    pub fn parse(s: &str) -> Result<Self> {
        let norm = s.replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| Error::unknown("family", s, &FAMILY_NAMES))
    }

    pub fn is_labeled(self) -> bool {
        !matches!(self, Family::Rooted | Family::Planar)
    }

    pub fn is_heap(self) -> bool {
        matches!(self, Family::HeapOrdered | Family::HeapPreordered)
    }

    pub fn is_ordered(self) -> bool {
        matches!(self, Family::Ordered | Family::HeapOrdered)
    }

    /// Checks the labeling rules of a labeled family.
    pub fn validate(self, f: &Forest<u32>) -> Result<()> {
        if !self.is_labeled() {
            return Ok(());
        }
        let flat = Flat::from_forest(f);
        let mut labels = flat.label.clone();
        labels.sort_unstable();
        let q = labels.last().copied().unwrap_or(0) as usize;
        if self.is_ordered() {
            if labels.iter().enumerate().any(|(i, &l)| l as usize != i + 1) {
                return Err(Error::validation(
                    self.name(),
                    "labels must be a bijection onto {1..n}",
                ));
            }
        } else {
            labels.dedup();
            if labels.len() != q {
                return Err(Error::validation(
                    self.name(),
                    "labels must be a surjection onto {1..max}",
                ));
            }
        }
        if self.is_heap() {
            for v in 0..flat.len() {
                if let Some(p) = flat.parent[v] {
                    if flat.label[v] <= flat.label[p] {
                        return Err(Error::validation(
                            self.name(),
                            "labels must strictly increase from a vertex to its children",
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn contains(self, f: &Forest<u32>) -> bool {
        self.validate(f).is_ok()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Grading {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "vertices" | "v" => Ok(Grading::Vertices),
            "edges" | "e" => Ok(Grading::Edges),
            _ => Err(Error::unknown("grading", s, &["vertices", "edges"])),
        }
    }

    pub fn degree<V: super::Label, E: super::EdgeLabel>(self, f: &Forest<V, E>) -> usize {
        match self {
            Grading::Vertices => f.vertex_count(),
            Grading::Edges => f.edge_count(),
        }
    }
}
