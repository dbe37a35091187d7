use crate::bialgebra::GradedBialgebra;
use crate::forest::enumerate::{packed_word_list, permutation_words, words_over};
use crate::forest::Atom;
use crate::linear::{q, LinComb, Tensor};

use super::{pack, quasi_shuffles, shuffles, sjshuffles, Bracket, DWord, DecoWord, Letter, Word};

/// Applies a shuffle ζ to the concatenation of two sequences.
fn shuffle_into<T: Clone>(zeta: &[u32], items: &[T]) -> Vec<T> {
    let mut out: Vec<Option<T>> = vec![None; items.len()];
    for (i, &z) in zeta.iter().enumerate() {
        out[z as usize - 1] = Some(items[i].clone());
    }
    out.into_iter().map(|x| x.expect("ζ is a bijection")).collect()
}

fn shifted(w: &[u32], by: u32) -> Vec<u32> {
    w.iter().map(|&x| x + by).collect()
}

fn concat<T: Clone>(a: &[T], b: &[T]) -> Vec<T> {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    v
}

/// Malvenuto–Reutenauer algebra on permutations.
#[derive(Clone, Debug, Default)]
pub struct FQSym;

impl GradedBialgebra for FQSym {
    type B = Word;

    fn name(&self) -> String {
        "fqsym".into()
    }

    fn one(&self) -> Word {
        Word::empty()
    }

    fn degree(&self, b: &Word) -> usize {
        b.len()
    }

    fn mul(&self, a: &Word, b: &Word) -> LinComb<Word> {
        let letters = concat(&a.0, &shifted(&b.0, a.len() as u32));
        LinComb::from_basis_iter(
            shuffles(a.len(), b.len())
                .iter()
                .map(|z| Word(shuffle_into(z, &letters))),
        )
    }

    fn delta(&self, b: &Word) -> LinComb<Tensor<Word, Word>> {
        LinComb::from_basis_iter((0..=b.len()).map(|i| {
            Tensor(Word(pack(&b.0[..i])), Word(pack(&b.0[i..])))
        }))
    }

    fn basis(&self, degree: usize) -> Vec<Word> {
        permutation_words(degree).into_iter().map(Word).collect()
    }
}

/// Permutations decorated position by position.
#[derive(Clone, Debug)]
pub struct DecoratedFQSym {
    pub atoms: Vec<Atom>,
}

fn split_deco(w: &DecoWord, keep: impl Fn(usize) -> bool) -> DecoWord {
    let idx: Vec<usize> = (0..w.len()).filter(|&i| keep(i)).collect();
    DecoWord {
        word: pack(&idx.iter().map(|&i| w.word[i]).collect::<Vec<_>>()),
        deco: idx.iter().map(|&i| w.deco[i].clone()).collect(),
    }
}

fn deco_basis(words: Vec<Vec<u32>>, atoms: &[Atom]) -> Vec<DecoWord> {
    let mut out = Vec::new();
    for w in words {
        for d in words_over(atoms, w.len()) {
            out.push(DecoWord { word: w.clone(), deco: d });
        }
    }
    out.sort();
    out
}

impl GradedBialgebra for DecoratedFQSym {
    type B = DecoWord;

    fn name(&self) -> String {
        "fqsym_d".into()
    }

    fn one(&self) -> DecoWord {
        DecoWord::default()
    }

    fn degree(&self, b: &DecoWord) -> usize {
        b.len()
    }

    fn mul(&self, a: &DecoWord, b: &DecoWord) -> LinComb<DecoWord> {
        let letters: Vec<(u32, Atom)> = concat(&a.word, &shifted(&b.word, a.len() as u32))
            .into_iter()
            .zip(concat(&a.deco, &b.deco))
            .collect();
        LinComb::from_basis_iter(shuffles(a.len(), b.len()).iter().map(|z| {
            let (word, deco) = shuffle_into(z, &letters).into_iter().unzip();
            DecoWord { word, deco }
        }))
    }

    fn delta(&self, b: &DecoWord) -> LinComb<Tensor<DecoWord, DecoWord>> {
        LinComb::from_basis_iter(
            (0..=b.len()).map(|i| Tensor(split_deco(b, |j| j < i), split_deco(b, |j| j >= i))),
        )
    }

    fn basis(&self, degree: usize) -> Vec<DecoWord> {
        deco_basis(permutation_words(degree), &self.atoms)
    }
}

/// Packed words with the shifted shuffle product and deconcatenation.
#[derive(Clone, Debug, Default)]
pub struct WQSymStar;

impl GradedBialgebra for WQSymStar {
    type B = Word;

    fn name(&self) -> String {
        "wqsym_star".into()
    }

    fn one(&self) -> Word {
        Word::empty()
    }

    fn degree(&self, b: &Word) -> usize {
        b.len()
    }

    fn mul(&self, a: &Word, b: &Word) -> LinComb<Word> {
        let letters = concat(&a.0, &shifted(&b.0, a.max()));
        LinComb::from_basis_iter(
            shuffles(a.len(), b.len())
                .iter()
                .map(|z| Word(shuffle_into(z, &letters))),
        )
    }

    fn delta(&self, b: &Word) -> LinComb<Tensor<Word, Word>> {
        LinComb::from_basis_iter((0..=b.len()).map(|i| {
            Tensor(Word(pack(&b.0[..i])), Word(pack(&b.0[i..])))
        }))
    }

    fn basis(&self, degree: usize) -> Vec<Word> {
        packed_word_list(degree).into_iter().map(Word).collect()
    }
}

/// Packed words: product over packed words splitting into the factors,
/// coproduct by cutting the alphabet.
#[derive(Clone, Debug, Default)]
pub struct WQSym;

/// Words γ with `pack(γ[..k]) = a` and `pack(γ[k..]) = b`, as values of
/// surjective shuffles on the alphabets.
fn wqsym_products(a: &[u32], b: &[u32]) -> Vec<Vec<u32>> {
    let (ma, mb) = (
        a.iter().copied().max().unwrap_or(0),
        b.iter().copied().max().unwrap_or(0),
    );
    sjshuffles(ma as usize, mb as usize)
        .into_iter()
        .map(|z| {
            a.iter()
                .map(|&x| z[x as usize - 1])
                .chain(b.iter().map(|&x| z[(ma + x) as usize - 1]))
                .collect()
        })
        .collect()
}

impl GradedBialgebra for WQSym {
    type B = Word;

    fn name(&self) -> String {
        "wqsym".into()
    }

    fn one(&self) -> Word {
        Word::empty()
    }

    fn degree(&self, b: &Word) -> usize {
        b.len()
    }

    fn mul(&self, a: &Word, b: &Word) -> LinComb<Word> {
        LinComb::from_basis_iter(wqsym_products(&a.0, &b.0).into_iter().map(Word))
    }

    fn delta(&self, b: &Word) -> LinComb<Tensor<Word, Word>> {
        LinComb::from_basis_iter((0..=b.max()).map(|k| {
            let low: Vec<u32> = b.0.iter().copied().filter(|&x| x <= k).collect();
            let high: Vec<u32> = b.0.iter().copied().filter(|&x| x > k).collect();
            Tensor(Word(low), Word(pack(&high)))
        }))
    }

    fn basis(&self, degree: usize) -> Vec<Word> {
        packed_word_list(degree).into_iter().map(Word).collect()
    }
}

/// Packed words decorated position by position.
#[derive(Clone, Debug)]
pub struct DecoratedWQSym {
    pub atoms: Vec<Atom>,
}

impl GradedBialgebra for DecoratedWQSym {
    type B = DecoWord;

    fn name(&self) -> String {
        "wqsym_d".into()
    }

    fn one(&self) -> DecoWord {
        DecoWord::default()
    }

    fn degree(&self, b: &DecoWord) -> usize {
        b.len()
    }

    fn mul(&self, a: &DecoWord, b: &DecoWord) -> LinComb<DecoWord> {
        let deco = concat(&a.deco, &b.deco);
        LinComb::from_basis_iter(wqsym_products(&a.word, &b.word).into_iter().map(|word| DecoWord {
            word,
            deco: deco.clone(),
        }))
    }

    fn delta(&self, b: &DecoWord) -> LinComb<Tensor<DecoWord, DecoWord>> {
        let max = b.word.iter().copied().max().unwrap_or(0);
        LinComb::from_basis_iter((0..=max).map(|k| {
            Tensor(
                split_deco(b, |i| b.word[i] <= k),
                split_deco(b, |i| b.word[i] > k),
            )
        }))
    }

    fn basis(&self, degree: usize) -> Vec<DecoWord> {
        deco_basis(packed_word_list(degree), &self.atoms)
    }
}

/// The map WQSym^D → Csh^D: letter `j` gathers the decorations of the
/// positions holding `j`.
pub fn wqsym_d_to_csh_d(w: &DecoWord) -> DWord {
    let max = w.word.iter().copied().max().unwrap_or(0);
    DWord(
        (1..=max)
            .map(|j| {
                let atoms = (0..w.len())
                    .filter(|&i| w.word[i] == j)
                    .map(|i| w.deco[i].clone())
                    .collect();
                Letter::from_atoms(atoms).expect("packed words hit every value")
            })
            .collect(),
    )
}

fn deconcatenation(w: &DWord) -> LinComb<Tensor<DWord, DWord>> {
    LinComb::from_basis_iter(
        (0..=w.len()).map(|i| Tensor(DWord(w.0[..i].to_vec()), DWord(w.0[i..].to_vec()))),
    )
}

/// Shuffle algebra on words over the atoms.
#[derive(Clone, Debug)]
pub struct ShuffleAlgebra {
    pub atoms: Vec<Atom>,
}

impl GradedBialgebra for ShuffleAlgebra {
    type B = DWord;

    fn name(&self) -> String {
        "sh_d".into()
    }

    fn one(&self) -> DWord {
        DWord::empty()
    }

    fn degree(&self, b: &DWord) -> usize {
        b.0.iter().map(Letter::size).sum()
    }

    fn mul(&self, a: &DWord, b: &DWord) -> LinComb<DWord> {
        let letters = a.concat(b).0;
        LinComb::from_basis_iter(
            shuffles(a.len(), b.len())
                .iter()
                .map(|z| DWord(shuffle_into(z, &letters))),
        )
    }

    fn delta(&self, b: &DWord) -> LinComb<Tensor<DWord, DWord>> {
        deconcatenation(b)
    }

    fn basis(&self, degree: usize) -> Vec<DWord> {
        let letters: Vec<Letter> = self.atoms.iter().cloned().map(Letter::atom).collect();
        words_over(&letters, degree).into_iter().map(DWord).collect()
    }
}

/// Quasi-shuffle algebra: letters that meet are merged by the bracket.
#[derive(Clone, Debug)]
pub struct QuasiShuffleAlgebra {
    pub atoms: Vec<Atom>,
    pub bracket: Bracket,
    /// Largest letter size listed by `basis` under the free bracket.
    pub max_letter: usize,
}

impl QuasiShuffleAlgebra {
    pub fn free(atoms: Vec<Atom>, max_letter: usize) -> Self {
        QuasiShuffleAlgebra {
            atoms,
            bracket: Bracket::Free,
            max_letter,
        }
    }

    /// Letters used for enumeration.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out: Vec<Letter> = self.atoms.iter().cloned().map(Letter::atom).collect();
        if matches!(self.bracket, Bracket::Free) {
            let mut layer = out.clone();
            for _ in 1..self.max_letter {
                let mut next = Vec::new();
                for l in &layer {
                    let last = l.atoms().last().expect("nonempty");
                    for a in self.atoms.iter().filter(|a| *a >= last) {
                        next.push(l.union(&Letter::atom(a.clone())));
                    }
                }
                out.extend(next.iter().cloned());
                layer = next;
            }
        }
        out.sort();
        out
    }
}

impl GradedBialgebra for QuasiShuffleAlgebra {
    type B = DWord;

    fn name(&self) -> String {
        "csh_d".into()
    }

    fn one(&self) -> DWord {
        DWord::empty()
    }

    fn degree(&self, b: &DWord) -> usize {
        b.0.iter().map(Letter::size).sum()
    }

    fn filtered_product(&self) -> bool {
        matches!(self.bracket, Bracket::Table(_))
    }

    fn mul(&self, a: &DWord, b: &DWord) -> LinComb<DWord> {
        let letters = a.concat(b).0;
        let mut out = LinComb::zero();
        'outer: for qs in quasi_shuffles(a.len(), b.len()) {
            let mut word = Vec::new();
            for fiber in qs.fibers() {
                match fiber.as_slice() {
                    [i] => word.push(letters[*i].clone()),
                    [i, j] => match self.bracket.merge(&letters[*i], &letters[*j]) {
                        Some(l) => word.push(l),
                        None => continue 'outer,
                    },
                    _ => unreachable!("fibers of a quasi-shuffle have one or two points"),
                }
            }
            out.add_term(DWord(word), q(1));
        }
        out
    }

    fn delta(&self, b: &DWord) -> LinComb<Tensor<DWord, DWord>> {
        deconcatenation(b)
    }

    fn basis(&self, degree: usize) -> Vec<DWord> {
        let letters = self.letters();
        fn go(rest: usize, letters: &[Letter], prefix: &mut Vec<Letter>, out: &mut Vec<DWord>) {
            if rest == 0 {
                out.push(DWord(prefix.clone()));
                return;
            }
            for l in letters.iter().filter(|l| l.size() <= rest) {
                prefix.push(l.clone());
                go(rest - l.size(), letters, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(degree, &letters, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}
