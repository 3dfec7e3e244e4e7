//! Exact sparse multivariate polynomial arithmetic over the rationals.
//!
//! The public ring is k[x0, x1, x2, y] with the variables in that fixed
//! order. Polynomials store their terms sorted under one fixed internal
//! order (degrevlex in variable-index order), independent of the order a
//! caller views them under; equality of polynomials is term-list equality.

mod order;
pub mod text;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

pub use order::{MonomialOrder, OrderKind};

use crate::error::{Error, Result};

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// Number of variables of the public ring (x0, x1, x2, y).
pub const NVARS: usize = 4;

pub(crate) const VAR_NAMES: [&str; 5] = ["x0", "x1", "x2", "y", "t"];

pub(crate) fn var_name(i: usize) -> &'static str {
    VAR_NAMES.get(i).copied().unwrap_or("?")
}

pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(n.into())
}

/// A power product of the ring variables, stored as an exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    /// The constant monomial 1 in the 4-variable ring.
    pub fn one() -> Self {
        Monomial {
            exps: vec![0; NVARS],
        }
    }

    /// The monomial x_i in the 4-variable ring.
    pub fn var(i: usize) -> Self {
        assert!(i < NVARS);
        let mut exps = vec![0; NVARS];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: [u32; NVARS]) -> Self {
        Monomial {
            exps: exps.to_vec(),
        }
    }

    pub(crate) fn from_vec(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub(crate) fn one_n(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub(crate) fn var_n(i: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Total degree: the sum of the exponents.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// True when `self` divides `other` componentwise.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` when the division is exact.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        debug_assert_eq!(self.nvars(), weights.len());
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }

    /// Pad with zero exponents up to `nvars` variables.
    pub(crate) fn extended(&self, nvars: usize) -> Monomial {
        debug_assert!(nvars >= self.nvars());
        let mut exps = self.exps.clone();
        exps.resize(nvars, 0);
        Monomial { exps }
    }

    /// Drop the trailing variables; `None` if any of them has a nonzero
    /// exponent.
    pub(crate) fn restricted(&self, nvars: usize) -> Option<Monomial> {
        if self.exps[nvars..].iter().any(|&e| e != 0) {
            return None;
        }
        Some(Monomial {
            exps: self.exps[..nvars].to_vec(),
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", var_name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Fixed internal storage order: degrevlex in variable-index order.
pub(crate) fn canonical_cmp(u: &Monomial, v: &Monomial) -> Ordering {
    u.degree().cmp(&v.degree()).then_with(|| {
        for i in (0..u.nvars()).rev() {
            match u.exp(i).cmp(&v.exp(i)) {
                Ordering::Equal => {}
                other => return other.reverse(),
            }
        }
        Ordering::Equal
    })
}

/// A nonzero coefficient together with a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coeff,
    pub monomial: Monomial,
}

impl Term {
    pub fn new(coeff: Coeff, monomial: Monomial) -> Self {
        Term { coeff, monomial }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomial.is_one() {
            write!(f, "{}", self.coeff)
        } else if self.coeff.is_one() {
            write!(f, "{}", self.monomial)
        } else if (-&self.coeff).is_one() {
            write!(f, "-{}", self.monomial)
        } else {
            write!(f, "{}*{}", self.coeff, self.monomial)
        }
    }
}

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept strictly descending under the internal canonical order,
/// with no zero coefficients and no duplicate monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Normalizing constructor: merges duplicate monomials, drops zeros.
    pub fn from_terms(terms: Vec<Term>) -> Self {
        let mut terms: Vec<Term> = terms.into_iter().filter(|t| !t.coeff.is_zero()).collect();
        terms.sort_by(|a, b| canonical_cmp(&b.monomial, &a.monomial));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coeff += t.coeff;
                    if last.coeff.is_zero() {
                        merged.pop();
                    }
                }
                _ => merged.push(t),
            }
        }
        Polynomial { terms: merged }
    }

    pub fn term(coeff: Coeff, monomial: Monomial) -> Self {
        Polynomial::from_terms(vec![Term::new(coeff, monomial)])
    }

    pub fn monomial(monomial: Monomial) -> Self {
        Polynomial::term(Coeff::one(), monomial)
    }

    /// The variable x_i of the 4-variable ring as a polynomial.
    pub fn var(i: usize) -> Self {
        Polynomial::monomial(Monomial::var(i))
    }

    pub fn constant(c: Coeff) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn nvars(&self) -> Option<usize> {
        self.terms.first().map(|t| t.monomial.nvars())
    }

    /// Maximum total degree among the terms; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    /// Total degree when every term has the same one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.monomial.degree();
        self.terms
            .iter()
            .all(|t| t.monomial.degree() == d)
            .then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// True when the polynomial is a nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_one()
    }

    /// The maximal term under `ord`.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<&Term> {
        self.terms
            .iter()
            .reduce(|best, t| {
                if ord.compare(&t.monomial, &best.monomial) == Ordering::Greater {
                    t
                } else {
                    best
                }
            })
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Result<&Monomial> {
        Ok(&self.leading_term(ord)?.monomial)
    }

    /// Degree spread deg(f) - deg(LM(f)); the reducer-selection measure of
    /// the local normal form algorithm.
    pub fn ecart(&self, ord: &MonomialOrder) -> Result<u32> {
        let lead = self.leading_term(ord)?.monomial.degree();
        Ok(self.degree().unwrap() - lead)
    }

    /// Scale so the leading coefficient under `ord` becomes 1.
    pub fn monic(&self, ord: &MonomialOrder) -> Result<Polynomial> {
        let lc = self.leading_term(ord)?.coeff.clone();
        Ok(self.scale(&lc.recip()))
    }

    /// The sum of all terms of minimal total degree.
    pub fn least_homogeneous_form(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let min = self.terms.iter().map(|t| t.monomial.degree()).min().unwrap();
        Ok(Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|t| t.monomial.degree() == min)
                .cloned()
                .collect(),
        })
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.monomial.clone()))
                .collect(),
        }
    }

    /// Multiply by the single term c * m.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.monomial.mul(m)))
                .collect(),
        }
    }

    pub(crate) fn extended(&self, nvars: usize) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(t.coeff.clone(), t.monomial.extended(nvars)))
                .collect(),
        }
    }

    /// Restrict to the first `nvars` variables; `None` if a dropped variable
    /// occurs.
    pub(crate) fn restricted(&self, nvars: usize) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term::new(t.coeff.clone(), t.monomial.restricted(nvars)?));
        }
        Some(Polynomial { terms })
    }

    /// Image under x_i -> t^{w_i}, collected as exponent -> coefficient.
    pub fn substitute_t_powers(&self, weights: &[u64]) -> BTreeMap<u64, Coeff> {
        let mut out: BTreeMap<u64, Coeff> = BTreeMap::new();
        for t in &self.terms {
            let e = t.monomial.weighted_degree(weights);
            let entry = out.entry(e).or_insert_with(Coeff::zero);
            *entry += &t.coeff;
            if entry.is_zero() {
                out.remove(&e);
            }
        }
        out
    }
}

/// S-polynomial: with L = lcm(LM f, LM g), returns (L/LT f)*f - (L/LT g)*g.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Result<Polynomial> {
    let lf = f.leading_term(ord)?;
    let lg = g.leading_term(ord)?;
    let l = lf.monomial.lcm(&lg.monomial);
    let uf = l.div(&lf.monomial).unwrap();
    let ug = l.div(&lg.monomial).unwrap();
    Ok(&f.mul_term(&lf.coeff.clone().recip(), &uf) - &g.mul_term(&lg.coeff.clone().recip(), &ug))
}

/// One reduction step h - (LT h / LT g) * g; the leading terms cancel.
pub(crate) fn reduce_step(
    h: &Polynomial,
    lt_h: &Term,
    g: &Polynomial,
    lt_g: &Term,
) -> Polynomial {
    let m = lt_h.monomial.div(&lt_g.monomial).expect("divisible leading monomials");
    let c = &lt_h.coeff / &lt_g.coeff;
    h - &g.mul_term(&c, &m)
}

fn add_sorted(a: &[Term], b: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match canonical_cmp(&a[i].monomial, &b[j].monomial) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let c = &a[i].coeff + &b[j].coeff;
                if !c.is_zero() {
                    out.push(Term::new(c, a[i].monomial.clone()));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial {
            terms: add_sorted(&self.terms, &rhs.terms),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(-t.coeff.clone(), t.monomial.clone()))
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for t in &self.terms {
            acc = &acc + &rhs.mul_term(&t.coeff, &t.monomial);
        }
        acc
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_polynomial;
    use proptest::prelude::*;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    fn mono(e: [u32; 4]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn compare_ds_paper_cases() {
        let ds = MonomialOrder::local_ds();
        // x1^2 > x0*x2 under ds: equal degree, revlex tie-break.
        assert_eq!(
            ds.compare(&mono([0, 2, 0, 0]), &mono([1, 0, 1, 0])),
            Ordering::Greater
        );
        // Lower total degree is greater under the local order.
        assert_eq!(
            ds.compare(&mono([1, 0, 0, 0]), &mono([0, 2, 0, 0])),
            Ordering::Greater
        );
        assert_eq!(
            ds.compare(&mono([1, 0, 0, 1]), &mono([1, 0, 0, 1])),
            Ordering::Equal
        );
        // 1 > u for every non-constant u under the local order.
        assert_eq!(
            ds.compare(&Monomial::one(), &mono([0, 0, 1, 0])),
            Ordering::Greater
        );
    }

    #[test]
    fn compare_degrevlex() {
        let ord = MonomialOrder::default_global();
        // Classic: y^2 beats x0*x1 only when x0 is revlex-last.
        assert_eq!(
            ord.compare(&mono([1, 1, 0, 0]), &mono([0, 0, 0, 2])),
            Ordering::Greater
        );
        let cm = MonomialOrder::degrevlex_x0_last();
        assert_eq!(
            cm.compare(&mono([1, 1, 0, 0]), &mono([0, 0, 0, 2])),
            Ordering::Less
        );
        // Global orders: u > 1 for non-constant u.
        assert_eq!(
            ord.compare(&mono([0, 0, 1, 0]), &Monomial::one()),
            Ordering::Greater
        );
    }

    #[test]
    fn leading_terms_from_the_standard_basis_argument() {
        let ds = MonomialOrder::local_ds();
        // theta for a=1, d=1, b=1.
        let theta = p("y^2-x0^2*x2");
        assert_eq!(
            theta.leading_monomial(&ds).unwrap(),
            &mono([0, 0, 0, 2])
        );
        // psi_1 for a=1, d=1, b=1.
        let psi1 = p("x2*y-x0^2*x1");
        assert_eq!(
            psi1.leading_monomial(&ds).unwrap(),
            &mono([0, 0, 1, 1])
        );
        let single = p("x0^3");
        assert_eq!(single.leading_monomial(&ds).unwrap(), &mono([3, 0, 0, 0]));
        assert_eq!(
            Polynomial::zero().leading_term(&ds),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn ecart_cases() {
        let ds = MonomialOrder::local_ds();
        // theta = y^{a+1} - x0^{a+d}*x2 has ecart d; here a=2, d=3.
        let theta = p("y^3-x0^5*x2");
        assert_eq!(theta.ecart(&ds).unwrap(), 3);
        let xi = p("x1^2-x0*x2");
        assert_eq!(xi.ecart(&ds).unwrap(), 0);
        assert_eq!(p("x0^4").ecart(&ds).unwrap(), 0);
    }

    #[test]
    fn s_polynomial_ds_cases() {
        let ds = MonomialOrder::local_ds();
        let xi = p("x1^2-x0*x2");
        let phi0 = p("x1*x2-x0*y");
        let phi1 = p("x2^2-x1*y");
        assert_eq!(s_polynomial(&xi, &phi0, &ds).unwrap(), p("x0*x1*y-x0*x2^2"));
        assert_eq!(
            s_polynomial(&phi0, &phi1, &ds).unwrap(),
            p("x1^2*y-x0*x2*y")
        );
        assert!(s_polynomial(&xi, &xi, &ds).unwrap().is_zero());
    }

    #[test]
    fn least_homogeneous_form_cases() {
        // psi_0 and theta for a=1, d=1, b=1.
        assert_eq!(p("x1*y-x0^3").least_homogeneous_form().unwrap(), p("x1*y"));
        assert_eq!(p("y^2-x0^2*x2").least_homogeneous_form().unwrap(), p("y^2"));
        let h = p("x1^2-x0*x2");
        assert_eq!(h.least_homogeneous_form().unwrap(), h);
    }

    fn arb_monomial() -> impl Strategy<Value = Monomial> {
        proptest::array::uniform4(0u32..5).prop_map(Monomial::from_exps)
    }

    fn arb_order() -> impl Strategy<Value = MonomialOrder> {
        let kinds = prop_oneof![
            Just(OrderKind::Lex),
            Just(OrderKind::DegLex),
            Just(OrderKind::DegRevLex),
            Just(OrderKind::NegDegRevLex),
        ];
        (kinds, Just(())).prop_perturb(|(kind, ()), mut rng| {
            let mut priority: Vec<usize> = (0..4).collect();
            for i in (1..4).rev() {
                let j = (rng.next_u32() as usize) % (i + 1);
                priority.swap(i, j);
            }
            MonomialOrder::new(kind, priority).unwrap()
        })
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((arb_monomial(), -4i64..5), 0..6).prop_map(|ts| {
            Polynomial::from_terms(
                ts.into_iter()
                    .map(|(m, c)| Term::new(coeff(c), m))
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn order_is_multiplicative(ord in arb_order(), u in arb_monomial(), v in arb_monomial(), w in arb_monomial()) {
            prop_assert_eq!(ord.compare(&u, &v), ord.compare(&u.mul(&w), &v.mul(&w)));
        }

        #[test]
        fn order_is_antisymmetric_total(ord in arb_order(), u in arb_monomial(), v in arb_monomial()) {
            let ab = ord.compare(&u, &v);
            let ba = ord.compare(&v, &u);
            prop_assert_eq!(ab, ba.reverse());
            prop_assert_eq!(ab == Ordering::Equal, u == v);
        }

        #[test]
        fn spoly_cancels_below_lcm(ord in arb_order(), f in arb_poly(), g in arb_poly()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let l = f.leading_monomial(&ord).unwrap().lcm(g.leading_monomial(&ord).unwrap());
            let s = s_polynomial(&f, &g, &ord).unwrap();
            for t in s.terms() {
                prop_assert_eq!(ord.compare(&t.monomial, &l), Ordering::Less);
            }
        }

        #[test]
        fn least_form_is_homogeneous_summand(f in arb_poly()) {
            prop_assume!(!f.is_zero());
            let lf = f.least_homogeneous_form().unwrap();
            prop_assert!(lf.is_homogeneous());
            let d = lf.homogeneous_degree().unwrap();
            let rest = &f - &lf;
            for t in rest.terms() {
                prop_assert!(t.monomial.degree() > d);
            }
        }

        #[test]
        fn ring_axioms(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        }

        #[test]
        fn ecart_zero_for_homogeneous(f in arb_poly(), ord in arb_order()) {
            prop_assume!(!f.is_zero());
            if f.is_homogeneous() {
                prop_assert_eq!(f.ecart(&ord).unwrap(), 0);
            }
            let e = f.ecart(&ord).unwrap();
            prop_assert_eq!(
                e == 0,
                f.degree().unwrap() == f.leading_monomial(&ord).unwrap().degree()
            );
        }
    }
}
