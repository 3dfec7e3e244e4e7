//! Mora's weak normal form for local degree orders, standard-basis
//! completion, and the verification report used to certify that a generating
//! set is a standard basis.
//!
//! The reducer choice is the ecart rule: among the elements of the growing
//! reducer pool whose leading monomial divides the current one, pick one of
//! minimal ecart, ties broken by earliest insertion; when the chosen ecart
//! exceeds the current polynomial's, the current polynomial joins the pool
//! first. With this fixed tie-break the reduction traces are reproducible.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{reduce_step, s_polynomial, MonomialOrder, Polynomial};

/// A generating set whose S-polynomials all have weak normal form zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardBasis {
    pub elements: Vec<Polynomial>,
    pub order: MonomialOrder,
}

/// Which polynomial a reduction step used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reducer {
    /// Index into the basis the normal form was taken against.
    Basis(usize),
    /// Index into the intermediate pool grown during the same call.
    Intermediate(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub reducer: Reducer,
    /// The polynomial after this step.
    pub result: Polynomial,
}

/// Weak normal form: `h` with `u*f` in `<G> + <h>` for some unit `u`, and
/// `LM(h)` not divisible by any `LM(g)` for `g` in `G`.
pub fn weak_normal_form(f: &Polynomial, gens: &[Polynomial], ord: &MonomialOrder) -> Result<Polynomial> {
    Ok(weak_normal_form_traced(f, gens, ord)?.0)
}

/// Weak normal form together with the reduction chain actually taken.
pub fn weak_normal_form_traced(
    f: &Polynomial,
    gens: &[Polynomial],
    ord: &MonomialOrder,
) -> Result<(Polynomial, Vec<ReductionStep>)> {
    if ord.is_global() {
        return Err(Error::NotLocalOrder);
    }
    struct PoolEntry {
        poly: Polynomial,
        ecart: u32,
        id: Reducer,
    }
    let mut pool: Vec<PoolEntry> = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        pool.push(PoolEntry {
            ecart: g.ecart(ord)?,
            poly: g.clone(),
            id: Reducer::Basis(i),
        });
    }
    let mut intermediates = 0usize;
    let mut steps = Vec::new();
    let mut h = f.clone();
    while !h.is_zero() {
        let lt_h = h.leading_term(ord).unwrap().clone();
        let chosen = pool
            .iter()
            .enumerate()
            .filter(|(_, e)| {
                e.poly
                    .leading_monomial(ord)
                    .unwrap()
                    .divides(&lt_h.monomial)
            })
            .min_by_key(|(idx, e)| (e.ecart, *idx))
            .map(|(idx, _)| idx);
        let Some(idx) = chosen else { break };
        let ecart_h = h.ecart(ord)?;
        if pool[idx].ecart > ecart_h {
            pool.push(PoolEntry {
                poly: h.clone(),
                ecart: ecart_h,
                id: Reducer::Intermediate(intermediates),
            });
            intermediates += 1;
        }
        let lt_g = pool[idx].poly.leading_term(ord).unwrap().clone();
        h = reduce_step(&h, &lt_h, &pool[idx].poly, &lt_g);
        steps.push(ReductionStep {
            reducer: pool[idx].id,
            result: h.clone(),
        });
    }
    Ok((h, steps))
}

/// Standard-basis completion: Buchberger's loop driven by the weak normal
/// form. The leading ideal grows strictly with every inserted element, so
/// the loop terminates.
pub fn standard_basis(gens: &[Polynomial], ord: &MonomialOrder) -> Result<StandardBasis> {
    if ord.is_global() {
        return Err(Error::NotLocalOrder);
    }
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic(ord))
        .collect::<Result<_>>()?;
    if basis.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            queue.push((i, j));
        }
    }
    let mut next = 0usize;
    while next < queue.len() {
        let (i, j) = queue[next];
        next += 1;
        let s = s_polynomial(&basis[i], &basis[j], ord)?;
        let h = weak_normal_form(&s, &basis, ord)?;
        if !h.is_zero() {
            let h = h.monic(ord)?;
            for i in 0..basis.len() {
                queue.push((i, basis.len()));
            }
            basis.push(h);
        }
    }
    Ok(StandardBasis {
        elements: basis,
        order: ord.clone(),
    })
}

/// Verification trace for one S-pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairTrace {
    pub i: usize,
    pub j: usize,
    pub s_polynomial: Polynomial,
    pub steps: Vec<ReductionStep>,
    pub normal_form: Polynomial,
}

impl PairTrace {
    pub fn reduced_to_zero(&self) -> bool {
        self.normal_form.is_zero()
    }
}

/// Per-pair report of the standard-basis check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StdBasisReport {
    pub order: MonomialOrder,
    pub pairs: Vec<PairTrace>,
    pub is_standard_basis: bool,
}

/// Check every S-pair of `gens` against the weak normal form; the report
/// records the reduction chain of each pair.
pub fn is_standard_basis(gens: &[Polynomial], ord: &MonomialOrder) -> Result<StdBasisReport> {
    if ord.is_global() {
        return Err(Error::NotLocalOrder);
    }
    let mut pairs = Vec::new();
    let mut all_zero = true;
    for j in 0..gens.len() {
        for i in 0..j {
            let s = s_polynomial(&gens[i], &gens[j], ord)?;
            let (nf, steps) = weak_normal_form_traced(&s, gens, ord)?;
            all_zero &= nf.is_zero();
            pairs.push(PairTrace {
                i,
                j,
                s_polynomial: s,
                steps,
                normal_form: nf,
            });
        }
    }
    Ok(StdBasisReport {
        order: ord.clone(),
        pairs,
        is_standard_basis: all_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    fn polys(ss: &[&str]) -> Vec<Polynomial> {
        ss.iter().map(|s| p(s)).collect()
    }

    // G for b=1, a=1, d=1 (degrees 4,5,6,7), in the fixed order
    // xi11, phi0, phi1, psi0, psi1, theta.
    fn g_4567() -> Vec<Polynomial> {
        polys(&[
            "x1^2-x0*x2",
            "x1*x2-x0*y",
            "x2^2-x1*y",
            "x1*y-x0^3",
            "x2*y-x0^2*x1",
            "y^2-x0^2*x2",
        ])
    }

    #[test]
    fn rejects_global_order() {
        let ord = MonomialOrder::default_global();
        assert_eq!(
            weak_normal_form(&p("x0"), &[p("x1")], &ord),
            Err(Error::NotLocalOrder)
        );
        assert_eq!(
            standard_basis(&[p("x0")], &ord).err(),
            Some(Error::NotLocalOrder)
        );
    }

    #[test]
    fn single_step_chain_for_xi_phi0() {
        let ds = MonomialOrder::local_ds();
        let g = g_4567();
        let s = s_polynomial(&g[0], &g[1], &ds).unwrap();
        assert_eq!(s, p("x0*x1*y-x0*x2^2"));
        let (nf, steps) = weak_normal_form_traced(&s, &g, &ds).unwrap();
        assert!(nf.is_zero());
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].reducer, Reducer::Basis(2));
    }

    #[test]
    fn two_step_chain_for_phi0_psi1() {
        let ds = MonomialOrder::local_ds();
        let g = g_4567();
        let s = s_polynomial(&g[1], &g[4], &ds).unwrap();
        assert_eq!(s, p("x0^2*x1^2-x0*y^2"));
        let (nf, steps) = weak_normal_form_traced(&s, &g, &ds).unwrap();
        assert!(nf.is_zero());
        let reducers: Vec<Reducer> = steps.iter().map(|s| s.reducer).collect();
        assert_eq!(reducers, vec![Reducer::Basis(5), Reducer::Basis(0)]);
        // Intermediate result after the theta step.
        assert_eq!(steps[0].result, p("x0^2*x1^2-x0^3*x2"));
    }

    #[test]
    fn weak_nf_leaves_unreducible_input() {
        let ds = MonomialOrder::local_ds();
        let g = g_4567();
        assert_eq!(weak_normal_form(&p("x0"), &g, &ds).unwrap(), p("x0"));
    }

    #[test]
    fn g_is_standard_basis_with_15_pairs() {
        let ds = MonomialOrder::local_ds();
        let report = is_standard_basis(&g_4567(), &ds).unwrap();
        assert!(report.is_standard_basis);
        assert_eq!(report.pairs.len(), 15);
    }

    #[test]
    fn partial_set_is_not_standard_basis() {
        let ds = MonomialOrder::local_ds();
        let pair = polys(&["x1^2-x0*x2", "x1*x2-x0*y"]);
        let report = is_standard_basis(&pair, &ds).unwrap();
        assert!(!report.is_standard_basis);
    }

    #[test]
    fn completion_adds_the_missing_element() {
        let ds = MonomialOrder::local_ds();
        let pair = polys(&["x1^2-x0*x2", "x1*x2-x0*y"]);
        let sb = standard_basis(&pair, &ds).unwrap();
        assert!(sb.elements.len() > 2);
        let has_x0x2sq = sb.elements.iter().any(|g| {
            g.leading_monomial(&ds).unwrap()
                == &crate::poly::Monomial::from_exps([1, 0, 2, 0])
        });
        assert!(has_x0x2sq);
        assert!(is_standard_basis(&sb.elements, &ds)
            .unwrap()
            .is_standard_basis);
    }

    #[test]
    fn principal_is_its_own_basis() {
        let ds = MonomialOrder::local_ds();
        let sb = standard_basis(&[p("x0")], &ds).unwrap();
        assert_eq!(sb.elements, polys(&["x0"]));
    }
}
