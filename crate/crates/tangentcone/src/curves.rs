//! The curve family: parameter validation, the explicit binomial generating
//! set of the defining ideal, tangent-cone generators, and the
//! Cohen-Macaulayness certificate.
//!
//! Curves are parameterized by degrees m0 < m1 < m2 < m3 in arithmetic
//! progression with common difference d, where m0 = 3a + b with a >= 1 and
//! b in {1, 2, 3}, and gcd(m0, d) = 1.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grobner::{buchberger, normal_form_global};
use crate::mora;
use crate::poly::{s_polynomial, Monomial, MonomialOrder, Polynomial};

/// Validated curve parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CurveSpec {
    pub m: [u64; 4],
    pub a: u64,
    pub b: u64,
    pub d: u64,
}

/// Derive and validate the parameters from the four degrees.
pub fn validate_spec(m: [u64; 4]) -> Result<CurveSpec> {
    if m[0] == 0 || !m.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::NotIncreasing);
    }
    let d = m[1] - m[0];
    if m[2] != m[0] + 2 * d || m[3] != m[0] + 3 * d {
        return Err(Error::NotArithmetic);
    }
    if m[0] <= 3 {
        return Err(Error::TooSmall);
    }
    if m[0].gcd(&d) != 1 {
        return Err(Error::GcdNotOne);
    }
    let b = (m[0] - 1) % 3 + 1;
    let a = (m[0] - b) / 3;
    Ok(CurveSpec { m, a, b, d })
}

impl CurveSpec {
    /// Build the degrees from (a, b, d) and validate.
    pub fn from_abd(a: u64, b: u64, d: u64) -> Result<CurveSpec> {
        if a < 1 {
            return Err(Error::TooSmall);
        }
        if !(1..=3).contains(&b) {
            return Err(Error::NotArithmetic);
        }
        let m0 = 3 * a + b;
        validate_spec([m0, m0 + d, m0 + 2 * d, m0 + 3 * d])
    }
}

/// The binomial generating set of the defining ideal, in the fixed order
/// xi11, phi_0, phi_1, psi_0.., theta.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorSet {
    pub xi11: Polynomial,
    pub phi: [Polynomial; 2],
    pub psi: Vec<Polynomial>,
    pub theta: Polynomial,
}

impl GeneratorSet {
    /// All generators in the fixed order.
    pub fn all(&self) -> Vec<Polynomial> {
        let mut out = vec![self.xi11.clone(), self.phi[0].clone(), self.phi[1].clone()];
        out.extend(self.psi.iter().cloned());
        out.push(self.theta.clone());
        out
    }

    pub fn len(&self) -> usize {
        3 + self.psi.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

fn binomial(u: Monomial, v: Monomial) -> Polynomial {
    &Polynomial::monomial(u) - &Polynomial::monomial(v)
}

fn power(var: usize, e: u64) -> Monomial {
    let mut exps = [0u32; 4];
    exps[var] = u32::try_from(e).expect("exponent fits in u32");
    Monomial::from_exps(exps)
}

/// The explicit minimal generating set of the defining ideal:
/// xi11 = x1^2 - x0*x2, phi_i = x_{i+1}*x2 - x_i*y,
/// psi_j = x_{b+j}*y^a - x0^{a+d}*x_j (only for b <= 2, 0 <= j <= 2-b),
/// theta = y^{a+1} - x0^{a+d}*x_{3-b}.
pub fn patil_generators(spec: &CurveSpec) -> GeneratorSet {
    let (a, b, d) = (spec.a, spec.b, spec.d);
    let xi11 = binomial(Monomial::from_exps([0, 2, 0, 0]), Monomial::from_exps([1, 0, 1, 0]));
    let phi = [
        // x1*x2 - x0*y
        binomial(Monomial::from_exps([0, 1, 1, 0]), Monomial::from_exps([1, 0, 0, 1])),
        // x2^2 - x1*y
        binomial(Monomial::from_exps([0, 0, 2, 0]), Monomial::from_exps([0, 1, 0, 1])),
    ];
    let mut psi = Vec::new();
    if b <= 2 {
        for j in 0..=(2 - b) {
            let lead = power(usize::try_from(b + j).unwrap(), 1).mul(&power(3, a));
            let tail = power(0, a + d).mul(&power(usize::try_from(j).unwrap(), 1));
            psi.push(binomial(lead, tail));
        }
    }
    let theta = binomial(
        power(3, a + 1),
        power(0, a + d).mul(&power(usize::try_from(3 - b).unwrap(), 1)),
    );
    GeneratorSet { xi11, phi, psi, theta }
}

/// Generators of the tangent-cone ideal: the least homogeneous summands of
/// the standard-basis elements.
pub fn tangent_cone_generators(spec: &CurveSpec) -> Vec<Polynomial> {
    patil_generators(spec)
        .all()
        .iter()
        .map(|g| g.least_homogeneous_form().expect("nonzero generator"))
        .collect()
}

/// Certificate that the tangent cone is Cohen-Macaulay: the generators are a
/// Groebner basis under a degrevlex order penalizing x0, and no leading
/// monomial is divisible by x0.
///
/// The `literal_order_*` fields record the same data under the degrevlex
/// order with x0 > y > x1 > x2; under that reading x0 can divide a leading
/// monomial, so the conclusion is based on the working order only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CmCertificate {
    pub order: MonomialOrder,
    pub leading_monomials: Vec<Monomial>,
    pub is_groebner: bool,
    pub x0_free: bool,
    pub conclusion: bool,
    pub literal_order: MonomialOrder,
    pub literal_order_leading_monomials: Vec<Monomial>,
    pub literal_order_x0_free: bool,
}

/// Run the x0-divisibility check for an arbitrary generating set and global
/// order. The conclusion certifies Cohen-Macaulayness only when the
/// generators cut out a tangent cone and x0 is the penalized variable.
pub fn cm_certificate_for_generators(
    gens: &[Polynomial],
    order: &MonomialOrder,
) -> Result<CmCertificate> {
    if !order.is_global() {
        return Err(Error::NotGlobalOrder);
    }
    let leading_monomials: Vec<Monomial> = gens
        .iter()
        .map(|g| g.leading_monomial(order).cloned())
        .collect::<Result<_>>()?;
    // The set is a Groebner basis iff completion adds nothing, i.e. every
    // S-polynomial reduces to zero against the set itself.
    let mut is_groebner = true;
    'outer: for j in 0..gens.len() {
        for i in 0..j {
            let s = s_polynomial(&gens[i], &gens[j], order)?;
            if !crate::grobner::reduce_full(&s, gens, order).is_zero() {
                is_groebner = false;
                break 'outer;
            }
        }
    }
    let x0_free = leading_monomials.iter().all(|m| m.exp(0) == 0);
    let literal_order = MonomialOrder::degrevlex_x0_y_x1_x2();
    let literal_order_leading_monomials: Vec<Monomial> = gens
        .iter()
        .map(|g| g.leading_monomial(&literal_order).cloned())
        .collect::<Result<_>>()?;
    let literal_order_x0_free = literal_order_leading_monomials
        .iter()
        .all(|m| m.exp(0) == 0);
    Ok(CmCertificate {
        order: order.clone(),
        leading_monomials,
        is_groebner,
        conclusion: is_groebner && x0_free,
        x0_free,
        literal_order,
        literal_order_leading_monomials,
        literal_order_x0_free,
    })
}

/// Cohen-Macaulayness certificate for the tangent cone of the curve.
pub fn cohen_macaulay_certificate(spec: &CurveSpec) -> Result<CmCertificate> {
    cm_certificate_for_generators(
        &tangent_cone_generators(spec),
        &MonomialOrder::degrevlex_x0_last(),
    )
}

/// True when every generator vanishes under x_i -> t^{m_i}.
pub fn vanishes_on_curve(f: &Polynomial, m: &[u64; 4]) -> bool {
    f.substitute_t_powers(m).is_empty()
}

/// Each generator lies outside the ideal of the others.
pub fn generators_are_minimal(gens: &[Polynomial], ord: &MonomialOrder) -> Result<bool> {
    for i in 0..gens.len() {
        let others: Vec<Polynomial> = gens
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let gb = buchberger(&others, ord)?;
        if normal_form_global(&gens[i], &gb).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Standard-basis check of the defining-ideal generators under the local
/// order, i.e. the computational content of the standard-basis lemma.
pub fn standard_basis_report(spec: &CurveSpec) -> Result<mora::StdBasisReport> {
    mora::is_standard_basis(&patil_generators(spec).all(), &MonomialOrder::local_ds())
}

/// Helper for tests and the CLI: a deterministic list of valid specs.
pub fn spec_grid(a_max: u64, d_list: &[u64]) -> Vec<CurveSpec> {
    let mut out = Vec::new();
    for a in 1..=a_max {
        for b in 1..=3 {
            for &d in d_list {
                if let Ok(spec) = CurveSpec::from_abd(a, b, d) {
                    out.push(spec);
                }
            }
        }
    }
    out
}
