//! Buchberger's algorithm, reduced Groebner bases, ideal membership and
//! quotients, and the elimination-based toric ideal of a monomial curve.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_integer::Integer;


use crate::error::{Error, Result};
use crate::poly::{s_polynomial, Monomial, MonomialOrder, Polynomial, Term};

/// Generators of an ideal together with the order they were computed under.
/// Values produced by [`buchberger`] are reduced Groebner bases: leading
/// coefficients are 1 and no monomial of an element is divisible by the
/// leading monomial of another element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBasis {
    pub generators: Vec<Polynomial>,
    pub order: MonomialOrder,
}

/// Remainder of `f` under multivariate division by `basis`: no monomial of
/// the result is divisible by any leading monomial of the basis. When the
/// basis is a Groebner basis the remainder is 0 exactly for ideal members.
pub fn normal_form_global(f: &Polynomial, basis: &IdealBasis) -> Polynomial {
    reduce_full(f, &basis.generators, &basis.order)
}

pub(crate) fn reduce_full(f: &Polynomial, gens: &[Polynomial], ord: &MonomialOrder) -> Polynomial {
    debug_assert!(ord.is_global());
    let leads: Vec<Term> = gens
        .iter()
        .map(|g| g.leading_term(ord).expect("nonzero generator").clone())
        .collect();
    let mut remainder = Polynomial::zero();
    let mut h = f.clone();
    while !h.is_zero() {
        let lt = h.leading_term(ord).unwrap().clone();
        match leads.iter().position(|l| l.monomial.divides(&lt.monomial)) {
            Some(i) => {
                h = crate::poly::reduce_step(&h, &lt, &gens[i], &leads[i]);
            }
            None => {
                let single = Polynomial::term(lt.coeff.clone(), lt.monomial.clone());
                remainder = &remainder + &single;
                h = &h - &single;
            }
        }
    }
    remainder
}

/// Division with a single divisor, keeping the quotient; `None` when the
/// remainder is nonzero.
fn div_exact(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Option<Polynomial> {
    let lg = g.leading_term(ord).ok()?;
    let mut quotient = Polynomial::zero();
    let mut h = f.clone();
    while !h.is_zero() {
        let lt = h.leading_term(ord).unwrap().clone();
        let m = lt.monomial.div(&lg.monomial)?;
        let c = &lt.coeff / &lg.coeff;
        quotient = &quotient + &Polynomial::term(c.clone(), m.clone());
        h = &h - &g.mul_term(&c, &m);
    }
    Some(quotient)
}

#[derive(PartialEq, Eq)]
struct Pair {
    lcm_degree: u32,
    i: usize,
    j: usize,
    lcm: Monomial,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        // BinaryHeap is a max-heap; reverse for smallest-lcm-degree first.
        (other.lcm_degree, other.i, other.j).cmp(&(self.lcm_degree, self.i, self.j))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Reduced Groebner basis of the ideal generated by `gens`, canonical for a
/// fixed global order.
pub fn buchberger(gens: &[Polynomial], ord: &MonomialOrder) -> Result<IdealBasis> {
    if !ord.is_global() {
        return Err(Error::NotGlobalOrder);
    }
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    let mut leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(ord).unwrap().clone())
        .collect();

    let mut pairs = BinaryHeap::new();
    let push_pairs = |pairs: &mut BinaryHeap<Pair>, leads: &[Monomial], j: usize| {
        for i in 0..j {
            let lcm = leads[i].lcm(&leads[j]);
            // Buchberger's product criterion: coprime leading monomials
            // reduce to zero.
            if lcm == leads[i].mul(&leads[j]) {
                continue;
            }
            pairs.push(Pair {
                lcm_degree: lcm.degree(),
                i,
                j,
                lcm,
            });
        }
    };
    for j in 0..basis.len() {
        push_pairs(&mut pairs, &leads, j);
    }

    while let Some(pair) = pairs.pop() {
        // Chain criterion: skip if some later element's lead divides the lcm
        // strictly between the pair's leads.
        let chained = leads.iter().enumerate().any(|(k, lm)| {
            k != pair.i
                && k != pair.j
                && lm.divides(&pair.lcm)
                && leads[pair.i].lcm(lm) != pair.lcm
                && leads[pair.j].lcm(lm) != pair.lcm
        });
        if chained {
            continue;
        }
        let s = s_polynomial(&basis[pair.i], &basis[pair.j], ord)?;
        let h = reduce_full(&s, &basis, ord);
        if !h.is_zero() {
            let h = h.monic(ord)?;
            leads.push(h.leading_monomial(ord)?.clone());
            basis.push(h);
            push_pairs(&mut pairs, &leads, basis.len() - 1);
        }
    }

    Ok(IdealBasis {
        generators: reduce_basis(basis, ord),
        order: ord.clone(),
    })
}

/// Interreduce a Groebner basis into the reduced Groebner basis, sorted by
/// descending leading monomial.
fn reduce_basis(basis: Vec<Polynomial>, ord: &MonomialOrder) -> Vec<Polynomial> {
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(ord).unwrap().clone())
        .collect();
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let redundant = (0..basis.len()).any(|j| {
            j != i
                && leads[j].divides(&leads[i])
                && (leads[j] != leads[i] || keep.contains(&j))
        });
        if !redundant {
            keep.push(i);
        }
    }
    let minimal: Vec<Polynomial> = keep.iter().map(|&i| basis[i].clone()).collect();
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let g = reduce_full(&minimal[i], &others, ord).monic(ord).unwrap();
        reduced.push(g);
    }
    reduced.sort_by(|a, b| {
        ord.compare(
            b.leading_monomial(ord).unwrap(),
            a.leading_monomial(ord).unwrap(),
        )
    });
    reduced
}

/// True iff the two generator lists generate the same ideal, decided by
/// comparing reduced Groebner bases.
pub fn ideal_equal(f1: &[Polynomial], f2: &[Polynomial], ord: &MonomialOrder) -> Result<bool> {
    let z1 = f1.iter().all(|f| f.is_zero());
    let z2 = f2.iter().all(|f| f.is_zero());
    if z1 || z2 {
        return Ok(z1 == z2);
    }
    Ok(buchberger(f1, ord)?.generators == buchberger(f2, ord)?.generators)
}

const ELIM_NVARS: usize = crate::poly::NVARS + 1;
const ELIM_VAR: usize = crate::poly::NVARS;

/// Elements of a 5-variable basis that do not involve the elimination
/// variable, restricted back to the curve ring.
fn eliminate(basis: &IdealBasis) -> Vec<Polynomial> {
    basis
        .generators
        .iter()
        .filter_map(|g| g.restricted(crate::poly::NVARS))
        .collect()
}

/// Groebner basis of `(I : f) = {g : g*f in I}` for `I` spanned by `basis`,
/// via the elimination formulation `(t*I + (1-t)*<f>) intersect k[x]` and
/// exact division of the intersection generators by `f`.
pub fn ideal_quotient(basis: &IdealBasis, f: &Polynomial) -> Result<IdealBasis> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let t = Polynomial::monomial(Monomial::var_n(ELIM_VAR, ELIM_NVARS));
    let one = Polynomial::term(crate::poly::coeff(1), Monomial::one_n(ELIM_NVARS));
    let mut big: Vec<Polynomial> = basis
        .generators
        .iter()
        .map(|g| &t * &g.extended(ELIM_NVARS))
        .collect();
    big.push(&(&one - &t) * &f.extended(ELIM_NVARS));
    let elim_ord = MonomialOrder::elimination(ELIM_NVARS, ELIM_VAR);
    let gb = buchberger(&big, &elim_ord)?;
    let intersection = eliminate(&gb);
    let mut quotient_gens = Vec::with_capacity(intersection.len());
    for h in &intersection {
        let q = div_exact(h, f, &basis.order)
            .expect("intersection with a principal ideal divides exactly");
        quotient_gens.push(q);
    }
    buchberger(&quotient_gens, &basis.order)
}

/// Defining ideal of the monomial curve x_i = t^{m_i}: the kernel of the
/// substitution map, computed by eliminating t from <x_i - t^{m_i}> and
/// returned as the reduced Groebner basis under the default global order.
pub fn toric_ideal(m: [u64; 4]) -> Result<IdealBasis> {
    if m[0] == 0 || !m.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::NotIncreasing);
    }
    let gcd = m.iter().fold(0u64, |acc, &v| acc.gcd(&v));
    if gcd != 1 {
        return Err(Error::GcdNotOne);
    }
    let gens: Vec<Polynomial> = (0..4)
        .map(|i| {
            let xi = Polynomial::monomial(Monomial::var_n(i, ELIM_NVARS));
            let mut exps = vec![0u32; ELIM_NVARS];
            exps[ELIM_VAR] = u32::try_from(m[i]).expect("exponent fits in u32");
            let tm = Polynomial::monomial(Monomial::from_vec(exps));
            &xi - &tm
        })
        .collect();
    let elim_ord = MonomialOrder::elimination(ELIM_NVARS, ELIM_VAR);
    let gb = buchberger(&gens, &elim_ord)?;
    let kernel = eliminate(&gb);
    // The t-free part of the reduced elimination basis is the reduced
    // Groebner basis of the kernel under the inner degrevlex order.
    let ord = MonomialOrder::default_global();
    let mut generators = kernel;
    generators.sort_by(|a, b| {
        ord.compare(
            b.leading_monomial(&ord).unwrap(),
            a.leading_monomial(&ord).unwrap(),
        )
    });
    Ok(IdealBasis { generators, order: ord })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_polynomial;
    use crate::poly::coeff;
    
    use proptest::prelude::*;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    fn polys(ss: &[&str]) -> Vec<Polynomial> {
        ss.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn principal_ideal_basis() {
        let ord = MonomialOrder::default_global();
        let b = buchberger(&[p("2*x0^2-2*x1")], &ord).unwrap();
        assert_eq!(b.generators, polys(&["x0^2-x1"]));
        assert_eq!(
            buchberger(&[Polynomial::zero()], &ord),
            Err(Error::EmptyIdeal)
        );
    }

    #[test]
    fn buchberger_completes_one_pair() {
        // The S-polynomial of the two quadrics reduces to a new element with
        // leading monomial x0*x2^2; checked by hand against the completion.
        let ord = MonomialOrder::default_global();
        let b = buchberger(&polys(&["x1^2-x0*x2", "x1*x2-x0*y"]), &ord).unwrap();
        assert_eq!(
            b.generators,
            polys(&["x0*x2^2-x0*x1*y", "x1^2-x0*x2", "x1*x2-x0*y"])
        );
    }

    #[test]
    fn buchberger_is_idempotent() {
        let ord = MonomialOrder::default_global();
        let b = buchberger(&polys(&["x1^2-x0*x2", "x1*x2-x0*y"]), &ord).unwrap();
        let again = buchberger(&b.generators, &ord).unwrap();
        assert_eq!(b.generators, again.generators);
    }

    #[test]
    fn rejects_local_order() {
        assert_eq!(
            buchberger(&polys(&["x0"]), &MonomialOrder::local_ds()),
            Err(Error::NotGlobalOrder)
        );
    }

    #[test]
    fn normal_form_examples() {
        let ord = MonomialOrder::default_global();
        let b = buchberger(&polys(&["x1^2-x0*x2", "x1*x2-x0*y"]), &ord).unwrap();
        // Ideal member reduces to zero.
        let member = &p("x1^2-x0*x2") * &p("x2*y-3*x0+1");
        assert!(normal_form_global(&member, &b).is_zero());
        assert!(normal_form_global(&Polynomial::zero(), &b).is_zero());
        // x0 is not divisible by any leading monomial.
        assert_eq!(normal_form_global(&p("x0"), &b), p("x0"));
    }

    #[test]
    fn ideal_equality() {
        let ord = MonomialOrder::default_global();
        assert!(!ideal_equal(&polys(&["x0"]), &polys(&["x0^2"]), &ord).unwrap());
        assert!(ideal_equal(&polys(&["x0", "x1"]), &polys(&["x1", "x0"]), &ord).unwrap());
        assert!(ideal_equal(&[], &[Polynomial::zero()], &ord).unwrap());
        assert!(!ideal_equal(&[], &polys(&["x0"]), &ord).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let ord = MonomialOrder::default_global();
        let x0 = buchberger(&polys(&["x0"]), &ord).unwrap();
        let q = ideal_quotient(&x0, &p("x1")).unwrap();
        assert_eq!(q.generators, polys(&["x0"]));

        let x0x1 = buchberger(&polys(&["x0*x1"]), &ord).unwrap();
        let q = ideal_quotient(&x0x1, &p("x1")).unwrap();
        assert_eq!(q.generators, polys(&["x0"]));

        // Quotient of <g1^2> by g2^2 for coprime irreducible quadrics.
        let g1sq = buchberger(&[&p("x1^2-x0*x2") * &p("x1^2-x0*x2")], &ord).unwrap();
        let g2sq = &p("x1*x2-x0*y") * &p("x1*x2-x0*y");
        let q = ideal_quotient(&g1sq, &g2sq).unwrap();
        assert_eq!(q.generators, g1sq.generators);

        assert_eq!(
            ideal_quotient(&x0, &Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn toric_ideal_4567_matches_known_generators() {
        let b = toric_ideal([4, 5, 6, 7]).unwrap();
        let expected = polys(&[
            "x1^2-x0*x2",
            "x1*x2-x0*y",
            "x2^2-x1*y",
            "x1*y-x0^3",
            "x2*y-x0^2*x1",
            "y^2-x0^2*x2",
        ]);
        assert!(ideal_equal(&b.generators, &expected, &b.order).unwrap());
    }

    #[test]
    fn toric_ideal_6789_matches_known_generators() {
        let b = toric_ideal([6, 7, 8, 9]).unwrap();
        let expected = polys(&["x1^2-x0*x2", "x1*x2-x0*y", "x2^2-x1*y", "y^2-x0^3"]);
        assert!(ideal_equal(&b.generators, &expected, &b.order).unwrap());
    }

    #[test]
    fn toric_ideal_rejects_bad_input() {
        assert_eq!(toric_ideal([4, 6, 8, 10]), Err(Error::GcdNotOne));
        assert_eq!(toric_ideal([5, 5, 6, 7]), Err(Error::NotIncreasing));
        assert_eq!(toric_ideal([0, 1, 2, 3]), Err(Error::NotIncreasing));
    }

    #[test]
    fn toric_elements_vanish_on_the_curve() {
        for m in [[4u64, 5, 6, 7], [5, 6, 7, 8], [7, 9, 11, 13], [4, 11, 18, 25]] {
            let b = toric_ideal(m).unwrap();
            assert!(!b.generators.is_empty());
            for g in &b.generators {
                assert!(g.substitute_t_powers(&m).is_empty(), "{g} on {m:?}");
            }
        }
    }

    fn arb_small_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((proptest::array::uniform4(0u32..3), -3i64..4), 0..4).prop_map(
            |ts| {
                Polynomial::from_terms(
                    ts.into_iter()
                        .map(|(e, c)| crate::poly::Term::new(coeff(c), Monomial::from_exps(e)))
                        .collect(),
                )
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn membership_soundness(
            f1 in arb_small_poly(),
            f2 in arb_small_poly(),
            q1 in arb_small_poly(),
            q2 in arb_small_poly(),
        ) {
            prop_assume!(!f1.is_zero() || !f2.is_zero());
            let ord = MonomialOrder::default_global();
            let gb = buchberger(&[f1.clone(), f2.clone()], &ord).unwrap();
            let combo = &(&q1 * &f1) + &(&q2 * &f2);
            prop_assert!(normal_form_global(&combo, &gb).is_zero());
        }

        #[test]
        fn quotient_soundness(f1 in arb_small_poly(), f in arb_small_poly()) {
            prop_assume!(!f1.is_zero() && !f.is_zero());
            let ord = MonomialOrder::default_global();
            let gb = buchberger(&[f1.clone()], &ord).unwrap();
            let q = ideal_quotient(&gb, &f).unwrap();
            for g in &q.generators {
                prop_assert!(normal_form_global(&(g * &f), &gb).is_zero());
            }
        }
    }
}
