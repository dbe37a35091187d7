//! Generic graded connected bialgebras: antipode and exhaustive axiom checks.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::Mutex;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linear::{LinComb, Tensor, Q};

/// Bounds shared by every basis type.
pub trait Basis: Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {}

impl<T: Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static> Basis for T {}

/// A graded connected bialgebra given on a basis.
pub trait GradedBialgebra: Sync {
    type B: Basis;

    fn name(&self) -> String;
    fn one(&self) -> Self::B;
    fn degree(&self, b: &Self::B) -> usize;
    fn mul(&self, a: &Self::B, b: &Self::B) -> LinComb<Self::B>;
    fn delta(&self, b: &Self::B) -> LinComb<Tensor<Self::B, Self::B>>;
    /// All basis elements of the given degree, used by the exhaustive checks.
    fn basis(&self, degree: usize) -> Vec<Self::B>;

    /// True when products only respect a filtration (degrees may drop).
    fn filtered_product(&self) -> bool {
        false
    }

    fn counit(&self, b: &Self::B) -> Q {
        if *b == self.one() {
            Q::one()
        } else {
            Q::zero()
        }
    }
}

pub fn mul_lin<H: GradedBialgebra>(h: &H, x: &LinComb<H::B>, y: &LinComb<H::B>) -> LinComb<H::B> {
    x.bilinear(y, |a, b| h.mul(a, b))
}

pub fn delta_lin<H: GradedBialgebra>(h: &H, x: &LinComb<H::B>) -> LinComb<Tensor<H::B, H::B>> {
    x.map_linear(|b| h.delta(b))
}

pub fn counit_lin<H: GradedBialgebra>(h: &H, x: &LinComb<H::B>) -> Q {
    x.iter()
        .fold(Q::zero(), |acc, (b, c)| acc + c * h.counit(b))
}

/// Componentwise product in `H ⊗ H`.
pub fn mul_tensor<H: GradedBialgebra>(
    h: &H,
    x: &LinComb<Tensor<H::B, H::B>>,
    y: &LinComb<Tensor<H::B, H::B>>,
) -> LinComb<Tensor<H::B, H::B>> {
    x.bilinear(y, |Tensor(a1, a2), Tensor(b1, b2)| {
        let l = h.mul(a1, b1);
        let r = h.mul(a2, b2);
        crate::linear::tensor(&l, &r)
    })
}

/// Δ(b) − b⊗1 − 1⊗b for a basis element of positive degree.
pub fn reduced_delta<H: GradedBialgebra>(h: &H, b: &H::B) -> LinComb<Tensor<H::B, H::B>> {
    let one = h.one();
    let mut d = h.delta(b);
    d.add_term(Tensor(b.clone(), one.clone()), -Q::one());
    d.add_term(Tensor(one, b.clone()), -Q::one());
    d
}

/// Reduced coproduct of an element without unit component.
pub fn reduced_coproduct<H: GradedBialgebra>(
    h: &H,
    x: &LinComb<H::B>,
) -> Result<LinComb<Tensor<H::B, H::B>>> {
    let one = h.one();
    if x.contains(&one) {
        return Err(Error::Contract(format!(
            "reduced coproduct in {} applied to an element with a unit component",
            h.name()
        )));
    }
    Ok(x.map_linear(|b| reduced_delta(h, b)))
}

/// Antipode by the left recursion S(b) = −b − Σ S(b′) b″ over Δ̃(b), memoized.
pub struct Antipode<'a, H: GradedBialgebra> {
    h: &'a H,
    memo: Mutex<HashMap<H::B, LinComb<H::B>>>,
}

impl<'a, H: GradedBialgebra> Antipode<'a, H> {
    /// Rejects algebras whose degree-zero part is not spanned by the unit.
    pub fn new(h: &'a H) -> Result<Self> {
        let zero = h.basis(0);
        if zero != vec![h.one()] || h.degree(&h.one()) != 0 {
            return Err(Error::Contract(format!(
                "{} is not graded connected: degree 0 basis has {} elements",
                h.name(),
                zero.len()
            )));
        }
        Ok(Antipode {
            h,
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn apply_basis(&self, b: &H::B) -> LinComb<H::B> {
        if let Some(v) = self.memo.lock().expect("antipode memo poisoned").get(b) {
            return v.clone();
        }
        let h = self.h;
        let value = if *b == h.one() {
            LinComb::basis(b.clone())
        } else {
            let mut s = LinComb::term(b.clone(), -Q::one());
            for (Tensor(l, r), c) in reduced_delta(h, b).iter() {
                let sl = self.apply_basis(l);
                let prod = mul_lin(h, &sl, &LinComb::basis(r.clone()));
                s.add_scaled(&prod, &-c.clone());
            }
            s
        };
        self.memo
            .lock()
            .expect("antipode memo poisoned")
            .insert(b.clone(), value.clone());
        value
    }

    pub fn apply(&self, x: &LinComb<H::B>) -> LinComb<H::B> {
        x.map_linear(|b| self.apply_basis(b))
    }
}

/// m ∘ (f ⊗ g) ∘ Δ applied to a basis element.
pub fn convolve<H: GradedBialgebra>(
    h: &H,
    b: &H::B,
    f: impl Fn(&H::B) -> LinComb<H::B>,
    g: impl Fn(&H::B) -> LinComb<H::B>,
) -> LinComb<H::B> {
    let mut out = LinComb::zero();
    for (Tensor(l, r), c) in h.delta(b).iter() {
        out.add_scaled(&mul_lin(h, &f(l), &g(r)), c);
    }
    out
}

/// One failed identity.
#[derive(Clone, Debug)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    pub element: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails on {}: {} != {}",
            self.axiom, self.element, self.lhs, self.rhs
        )
    }
}

/// Outcome of [`check_axioms`].
#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub algebra: String,
    pub max_degree: usize,
    pub basis_sizes: Vec<usize>,
    pub checks: usize,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes: Vec<String> = self.basis_sizes.iter().map(|s| s.to_string()).collect();
        write!(
            f,
            "{} up to degree {}: basis sizes [{}], {} identities checked, {}",
            self.algebra,
            self.max_degree,
            sizes.join(","),
            self.checks,
            if self.passed() {
                "PASS".to_string()
            } else {
                format!("FAIL ({} failures)", self.failures.len())
            }
        )?;
        for fail in self.failures.iter().take(10) {
            write!(f, "\n  {fail}")?;
        }
        Ok(())
    }
}

struct Recorder {
    checks: usize,
    failures: Vec<AxiomFailure>,
}

impl Recorder {
    fn eq<T: PartialEq + fmt::Display>(&mut self, axiom: &'static str, element: &dyn fmt::Display, lhs: &T, rhs: &T) {
        self.checks += 1;
        if lhs != rhs {
            self.failures.push(AxiomFailure {
                axiom,
                element: element.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    fn holds(&mut self, axiom: &'static str, element: &dyn fmt::Display, ok: bool, detail: String) {
        self.checks += 1;
        if !ok {
            self.failures.push(AxiomFailure {
                axiom,
                element: element.to_string(),
                lhs: detail,
                rhs: String::new(),
            });
        }
    }
}

struct Pair<'a, B>(&'a B, &'a B);

impl<B: fmt::Display> fmt::Display for Pair<'_, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

struct Triple<'a, B>(&'a B, &'a B, &'a B);

impl<B: fmt::Display> fmt::Display for Triple<'_, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0, self.1, self.2)
    }
}

/// Exhaustively checks the bialgebra and Hopf identities on all basis
/// elements (and pairs, triples) of total degree at most `max_degree`.
pub fn check_axioms<H: GradedBialgebra>(h: &H, max_degree: usize) -> AxiomReport {
    let bases: Vec<Vec<H::B>> = (0..=max_degree).map(|d| h.basis(d)).collect();
    let mut rec = Recorder {
        checks: 0,
        failures: Vec::new(),
    };
    let one = h.one();
    let one_lc = LinComb::basis(one.clone());
    let antipode = match Antipode::new(h) {
        Ok(s) => Some(s),
        Err(e) => {
            rec.holds("connectedness", &h.name(), false, e.to_string());
            None
        }
    };

    for (d, basis) in bases.iter().enumerate() {
        for b in basis {
            rec.holds(
                "basis degree",
                b,
                h.degree(b) == d,
                format!("degree {} listed under {}", h.degree(b), d),
            );
            let x = LinComb::basis(b.clone());
            let db = h.delta(b);

            let homogeneous = db
                .basis_elements()
                .all(|Tensor(l, r)| h.degree(l) + h.degree(r) == d);
            rec.holds("coproduct homogeneity", b, homogeneous, db.to_string());

            let left = db.map_linear(|Tensor(l, r)| LinComb::term(r.clone(), h.counit(l)));
            rec.eq("left counit", b, &left, &x);
            let right = db.map_linear(|Tensor(l, r)| LinComb::term(l.clone(), h.counit(r)));
            rec.eq("right counit", b, &right, &x);

            let lhs = db.map_linear(|Tensor(l, r)| {
                h.delta(l)
                    .map_basis(|Tensor(a, bb)| (a.clone(), bb.clone(), r.clone()))
            });
            let rhs = db.map_linear(|Tensor(l, r)| {
                h.delta(r)
                    .map_basis(|Tensor(bb, c)| (l.clone(), bb.clone(), c.clone()))
            });
            rec.eq(
                "coassociativity",
                b,
                &lhs.map_basis(|(a, bb, c)| Tensor(Tensor(a.clone(), bb.clone()), c.clone())),
                &rhs.map_basis(|(a, bb, c)| Tensor(Tensor(a.clone(), bb.clone()), c.clone())),
            );

            rec.eq("left unit", b, &h.mul(&one, b), &x);
            rec.eq("right unit", b, &h.mul(b, &one), &x);

            if let Some(s) = &antipode {
                let eps = one_lc.scaled(&h.counit(b));
                let s_id = convolve(h, b, |y| s.apply_basis(y), |y| LinComb::basis(y.clone()));
                rec.eq("S*Id = u.eps", b, &s_id, &eps);
                let id_s = convolve(h, b, |y| LinComb::basis(y.clone()), |y| s.apply_basis(y));
                rec.eq("Id*S = u.eps", b, &id_s, &eps);
            }
        }
    }

    for da in 1..=max_degree {
        for db_ in 1..=max_degree - da {
            for a in &bases[da] {
                for b in &bases[db_] {
                    let ab = h.mul(a, b);
                    let homogeneous = ab.basis_elements().all(|t| {
                        h.degree(t) == da + db_ || (h.filtered_product() && h.degree(t) < da + db_)
                    });
                    rec.holds("product homogeneity", &Pair(a, b), homogeneous, ab.to_string());
                    let lhs = delta_lin(h, &ab);
                    let rhs = mul_tensor(h, &h.delta(a), &h.delta(b));
                    rec.eq("multiplicativity of coproduct", &Pair(a, b), &lhs, &rhs);
                }
            }
        }
    }

    for da in 1..=max_degree {
        for db_ in 1..=max_degree - da {
            for dc in 1..=max_degree - da - db_ {
                for a in &bases[da] {
                    for b in &bases[db_] {
                        let ab = LinComb::basis(a.clone());
                        let ab = mul_lin(h, &ab, &LinComb::basis(b.clone()));
                        for c in &bases[dc] {
                            let cl = LinComb::basis(c.clone());
                            let lhs = mul_lin(h, &ab, &cl);
                            let bc = h.mul(b, c);
                            let rhs = mul_lin(h, &LinComb::basis(a.clone()), &bc);
                            rec.eq("associativity", &Triple(a, b, c), &lhs, &rhs);
                        }
                    }
                }
            }
        }
    }

    AxiomReport {
        algebra: h.name(),
        max_degree,
        basis_sizes: bases.iter().map(|b| b.len()).collect(),
        checks: rec.checks,
        failures: rec.failures,
    }
}
