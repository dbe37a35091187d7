//! Lookup of every algebra by its command-line name, behind a string-level
//! interface.

use std::fmt;

use crate::bialgebra::{check_axioms, mul_lin, Antipode, AxiomReport, GradedBialgebra};
use crate::contraction::{c_ck, c_ck_d, c_labeled, normal_form};
use crate::cut_hopf::{h_ck, h_ck_d, h_labeled, h_nck, h_nck_d};
use crate::error::{Error, Result};
use crate::forest::{Atom, DecoratedForest, EdgeForest, Family, Forest, LabeledForest, RootedForest};
use crate::linear::{fmt_q, LinComb, Tensor};
use crate::words::{
    Bracket, DWord, DecoWord, DecoratedFQSym, DecoratedWQSym, FQSym, QuasiShuffleAlgebra, ShuffleAlgebra, WQSym,
    WQSymStar, Word,
};

pub const ALGEBRA_NAMES: &[&str] = &[
    "h-ck", "h-ck-d", "h-nck", "h-nck-d", "h-o", "h-ho", "h-po", "h-hpo", "c-ck", "c-ck-d", "c-o", "c-ho", "c-po",
    "c-hpo", "fqsym", "fqsym-d", "wqsym", "wqsym-star", "wqsym-d", "sh-d", "csh-d",
];

/// A rendered linear combination, kept both as one line and term by term
/// (coefficient, then one string per tensor factor).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub plain: String,
    pub terms: Vec<(String, Vec<String>)>,
}

impl Expr {
    fn from_lin<B: Ord + Clone + fmt::Display>(x: &LinComb<B>) -> Self {
        Expr {
            plain: x.to_string(),
            terms: x.iter().map(|(b, c)| (fmt_q(c), vec![b.to_string()])).collect(),
        }
    }

    fn from_tensors<B: Ord + Clone + fmt::Display>(x: &LinComb<Tensor<B, B>>) -> Self {
        Expr {
            plain: x.to_string(),
            terms: x
                .iter()
                .map(|(Tensor(l, r), c)| (fmt_q(c), vec![l.to_string(), r.to_string()]))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// One line per term, fields separated by tabs.
    pub fn tsv(&self) -> String {
        self.terms
            .iter()
            .map(|(c, fs)| format!("{c}\t{}\n", fs.join("\t")))
            .collect()
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.plain)
    }
}

/// String-level access to a graded bialgebra.
pub trait DynAlgebra {
    fn name(&self) -> String;
    /// Parses and canonicalizes one basis element.
    fn canonical(&self, s: &str) -> Result<String>;
    fn degree(&self, s: &str) -> Result<usize>;
    fn basis(&self, degree: usize) -> Vec<String>;
    /// Product of one or more basis elements, left to right.
    fn product(&self, factors: &[&str]) -> Result<Expr>;
    fn coproduct(&self, s: &str) -> Result<Expr>;
    fn antipode(&self, s: &str) -> Result<Expr>;
    fn check(&self, max_degree: usize) -> AxiomReport;
}

struct Wrapped<H, P> {
    h: H,
    parse: P,
}

impl<H, P> DynAlgebra for Wrapped<H, P>
where
    H: GradedBialgebra,
    P: Fn(&str) -> Result<H::B>,
{
    fn name(&self) -> String {
        self.h.name()
    }

    fn canonical(&self, s: &str) -> Result<String> {
        Ok((self.parse)(s)?.to_string())
    }

    fn degree(&self, s: &str) -> Result<usize> {
        Ok(self.h.degree(&(self.parse)(s)?))
    }

    fn basis(&self, degree: usize) -> Vec<String> {
        self.h.basis(degree).iter().map(ToString::to_string).collect()
    }

    fn product(&self, factors: &[&str]) -> Result<Expr> {
        let mut acc = LinComb::basis(self.h.one());
        for s in factors {
            acc = mul_lin(&self.h, &acc, &LinComb::basis((self.parse)(s)?));
        }
        Ok(Expr::from_lin(&acc))
    }

    fn coproduct(&self, s: &str) -> Result<Expr> {
        Ok(Expr::from_tensors(&self.h.delta(&(self.parse)(s)?)))
    }

    fn antipode(&self, s: &str) -> Result<Expr> {
        let b = (self.parse)(s)?;
        Ok(Expr::from_lin(&Antipode::new(&self.h)?.apply_basis(&b)))
    }

    fn check(&self, max_degree: usize) -> AxiomReport {
        check_axioms(&self.h, max_degree)
    }
}

fn boxed<H, P>(h: H, parse: P) -> Box<dyn DynAlgebra>
where
    H: GradedBialgebra + 'static,
    P: Fn(&str) -> Result<H::B> + 'static,
{
    Box::new(Wrapped { h, parse })
}

fn labeled(family: Family) -> impl Fn(&str) -> Result<LabeledForest> {
    move |s| {
        let f = LabeledForest::parse_canonical(s)?;
        family.validate(&f)?;
        Ok(f)
    }
}

fn contracted(family: Family) -> impl Fn(&str) -> Result<LabeledForest> {
    move |s| {
        let f = normal_form(&LabeledForest::parse_canonical(s)?);
        family.validate(&f)?;
        Ok(f)
    }
}

fn packed(s: &str) -> Result<Word> {
    let w = Word::parse(s)?;
    if !w.is_packed() {
        return Err(Error::validation("packed word", format!("{w} is not packed")));
    }
    Ok(w)
}

fn permutation(s: &str) -> Result<Word> {
    let w = Word::parse(s)?;
    if !w.is_permutation() {
        return Err(Error::validation("permutation", format!("{w} is not a permutation")));
    }
    Ok(w)
}

fn deco_word(check: fn(&Word) -> bool, what: &'static str) -> impl Fn(&str) -> Result<DecoWord> {
    move |s| {
        let w = DecoWord::parse(s)?;
        if !check(&Word(w.word.clone())) {
            return Err(Error::validation(what, format!("{w} has a bad letter row")));
        }
        Ok(w)
    }
}

/// Options of the decorated algebras.
#[derive(Clone, Debug)]
pub struct Options {
    pub atoms: Vec<Atom>,
    pub bracket: Bracket,
    /// Largest letter size enumerated by `csh-d`.
    pub max_letter: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            atoms: vec![Atom::new("a"), Atom::new("b")],
            bracket: Bracket::Free,
            max_letter: 4,
        }
    }
}

/// The algebra registered under `name`; `_` and `-` are interchangeable.
pub fn algebra(name: &str, opts: &Options) -> Result<Box<dyn DynAlgebra>> {
    let atoms = opts.atoms.clone();
    Ok(match name.replace('_', "-").as_str() {
        "h-ck" => boxed(h_ck(), RootedForest::parse_canonical),
        "h-ck-d" => boxed(h_ck_d(atoms), DecoratedForest::parse_canonical),
        "h-nck" => boxed(h_nck(), RootedForest::parse),
        "h-nck-d" => boxed(h_nck_d(atoms), Forest::<Atom>::parse),
        "h-o" => boxed(h_labeled(Family::Ordered), labeled(Family::Ordered)),
        "h-ho" => boxed(h_labeled(Family::HeapOrdered), labeled(Family::HeapOrdered)),
        "h-po" => boxed(h_labeled(Family::Preordered), labeled(Family::Preordered)),
        "h-hpo" => boxed(h_labeled(Family::HeapPreordered), labeled(Family::HeapPreordered)),
        "c-ck" => boxed(c_ck(), |s| Ok(normal_form(&RootedForest::parse_canonical(s)?))),
        "c-ck-d" => boxed(c_ck_d(atoms), |s| Ok(normal_form(&EdgeForest::parse_canonical(s)?))),
        "c-o" => boxed(c_labeled(Family::Ordered), contracted(Family::Ordered)),
        "c-ho" => boxed(c_labeled(Family::HeapOrdered), contracted(Family::HeapOrdered)),
        "c-po" => boxed(c_labeled(Family::Preordered), contracted(Family::Preordered)),
        "c-hpo" => boxed(c_labeled(Family::HeapPreordered), contracted(Family::HeapPreordered)),
        "fqsym" => boxed(FQSym, permutation),
        "fqsym-d" => boxed(
            DecoratedFQSym { atoms },
            deco_word(Word::is_permutation, "decorated permutation"),
        ),
        "wqsym" => boxed(WQSym, packed),
        "wqsym-star" => boxed(WQSymStar, packed),
        "wqsym-d" => boxed(DecoratedWQSym { atoms }, deco_word(Word::is_packed, "decorated packed word")),
        "sh-d" => boxed(ShuffleAlgebra { atoms }, DWord::parse),
        "csh-d" => boxed(
            QuasiShuffleAlgebra {
                atoms,
                bracket: opts.bracket.clone(),
                max_letter: opts.max_letter,
            },
            DWord::parse,
        ),
        _ => return Err(Error::unknown("algebra", name, ALGEBRA_NAMES)),
    })
}
