//! Sparse linear combinations with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Q = BigRational;

/// Builds the rational `n`.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Builds the rational `num/den`.
pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational as `p` or `p/q`.
pub fn fmt_q(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Ordered pair of basis elements, rendered `a ⊗ b`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tensor<A, B>(pub A, pub B);

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Tensor<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {}", self.0, self.1)
    }
}

/// A finite formal sum of basis elements with nonzero rational coefficients.
///
/// Terms are kept in the basis order, so iteration and rendering are
/// deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Q>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, Q::one())
    }

    pub fn term(b: B, c: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (B, Q)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }

    /// Sums basis elements with coefficient one each, collecting repeats.
    pub fn from_basis_iter<I: IntoIterator<Item = B>>(iter: I) -> Self {
        let mut out = Self::zero();
        for b in iter {
            out.add_term(b, Q::one());
        }
        out
    }

    pub fn add_term(&mut self, b: B, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (b, d) in &other.terms {
            self.add_term(b.clone(), d * c);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.add_scaled(other, &Q::one());
    }

    pub fn scaled(&self, c: &Q) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn coeff(&self, b: &B) -> Q {
        self.terms.get(b).cloned().unwrap_or_else(Q::zero)
    }

    pub fn contains(&self, b: &B) -> bool {
        self.terms.contains_key(b)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Q)> {
        self.terms.iter()
    }

    pub fn basis_elements(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> Q {
        self.terms.values().fold(Q::zero(), |acc, c| acc + c)
    }

    /// Linear extension of a map defined on basis elements.
    pub fn map_linear<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Bilinear extension of a map defined on pairs of basis elements.
    pub fn bilinear<C: Ord + Clone, D: Ord + Clone>(
        &self,
        other: &LinComb<C>,
        mut f: impl FnMut(&B, &C) -> LinComb<D>,
    ) -> LinComb<D> {
        let mut out = LinComb::zero();
        for (b, c1) in &self.terms {
            for (d, c2) in &other.terms {
                let c = c1 * c2;
                out.add_scaled(&f(b, d), &c);
            }
        }
        out
    }

    /// Relabels basis elements, collecting collisions.
    pub fn map_basis<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> C) -> LinComb<C> {
        LinComb::from_terms(self.terms.iter().map(|(b, c)| (f(b), c.clone())))
    }

    /// Keeps the terms whose basis element satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&B) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }
}

/// Linear extension of `f` to `x`.
pub fn lin_extend_1<B: Ord + Clone, C: Ord + Clone>(
    f: impl FnMut(&B) -> LinComb<C>,
    x: &LinComb<B>,
) -> LinComb<C> {
    x.map_linear(f)
}

/// Bilinear extension of `f` to `(x, y)`.
pub fn lin_extend_2<A: Ord + Clone, B: Ord + Clone, C: Ord + Clone>(
    f: impl FnMut(&A, &B) -> LinComb<C>,
    x: &LinComb<A>,
    y: &LinComb<B>,
) -> LinComb<C> {
    x.bilinear(y, f)
}

impl<B: Ord + Clone> IntoIterator for LinComb<B> {
    type Item = (B, Q);
    type IntoIter = std::collections::btree_map::IntoIter<B, Q>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<B: Ord + Clone> Add for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: Self) -> LinComb<B> {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl<B: Ord + Clone> Sub for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: Self) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Q::one());
        out
    }
}

impl<B: Ord + Clone> Neg for &LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        self.scaled(&-Q::one())
    }
}

impl<B: Ord + Clone> Mul<&Q> for &LinComb<B> {
    type Output = LinComb<B>;
    fn mul(self, rhs: &Q) -> LinComb<B> {
        self.scaled(rhs)
    }
}

impl<B: Ord + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (b, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*{}", fmt_q(c), b)?;
        }
        Ok(())
    }
}

/// Tensor product of two linear combinations.
pub fn tensor<A: Ord + Clone, B: Ord + Clone>(
    x: &LinComb<A>,
    y: &LinComb<B>,
) -> LinComb<Tensor<A, B>> {
    x.bilinear(y, |a, b| LinComb::basis(Tensor(a.clone(), b.clone())))
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut r = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            for j in col + 1..ncols {
                let v = (&m[r][col] * &m[i][j] - &m[i][col] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[r][col].abs();
        if prev.is_zero() {
            prev = BigInt::one();
        }
        r += 1;
    }
    r
}

/// Incremental row echelon basis over Q, used to grow spans one vector at a time.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis<B: Ord> {
    rows: Vec<(B, LinComb<B>)>,
}

impl<B: Ord + Clone> EchelonBasis<B> {
    pub fn new() -> Self {
        EchelonBasis { rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &LinComb<B>) -> LinComb<B> {
        let mut v = v.clone();
        for (pivot, row) in &self.rows {
            let c = v.coeff(pivot);
            if !c.is_zero() {
                v.add_scaled(row, &-c);
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &LinComb<B>) -> bool {
        let r = self.reduce(v);
        let Some((pivot, c)) = r.iter().next().map(|(b, c)| (b.clone(), c.clone())) else {
            return false;
        };
        let r = r.scaled(&(Q::one() / c));
        for (_, row) in self.rows.iter_mut() {
            let d = row.coeff(&pivot);
            if !d.is_zero() {
                row.add_scaled(&r, &-d);
            }
        }
        self.rows.push((pivot, r));
        true
    }

    pub fn contains(&self, v: &LinComb<B>) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn vectors(&self) -> impl Iterator<Item = &LinComb<B>> {
        self.rows.iter().map(|(_, r)| r)
    }
}
