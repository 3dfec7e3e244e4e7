//! Generic resolution via iterated syzygies of a Groebner basis.
//!
//! Each level's syzygies are read off the S-polynomial reductions of the
//! previous level's basis; under the induced module orders those syzygies
//! are already a basis of the syzygy module, so no completion is needed.
//! Sorting every level by decreasing lex leading monomial within a leading
//! component bounds the length of the iteration by the number of variables.
//! The tower of free modules is then minimalized.

use std::cmp::Ordering;

use super::{minimalize, FreeComplex, PolyMatrix};
use crate::error::{Error, Result};
use crate::grobner::buchberger;
use crate::poly::{canonical_cmp, Coeff, Monomial, MonomialOrder, OrderKind, Polynomial, Term};

#[derive(Debug, Clone)]
struct MTerm {
    coeff: Coeff,
    mono: Monomial,
    comp: usize,
}

#[derive(Debug, Clone)]
struct MPoly {
    terms: Vec<MTerm>,
}

impl MPoly {
    fn from_terms(mut terms: Vec<MTerm>) -> MPoly {
        use num_traits::Zero;
        terms.retain(|t| !t.coeff.is_zero());
        terms.sort_by(|a, b| {
            a.comp
                .cmp(&b.comp)
                .then_with(|| canonical_cmp(&b.mono, &a.mono))
        });
        let mut merged: Vec<MTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.comp == t.comp && last.mono == t.mono => {
                    last.coeff += t.coeff;
                    if last.coeff.is_zero() {
                        merged.pop();
                    }
                }
                _ => merged.push(t),
            }
        }
        MPoly { terms: merged }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn mul_term(&self, c: &Coeff, m: &Monomial) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|t| MTerm {
                    coeff: &t.coeff * c,
                    mono: t.mono.mul(m),
                    comp: t.comp,
                })
                .collect(),
        }
    }

    fn sub(&self, other: &MPoly) -> MPoly {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().map(|t| MTerm {
            coeff: -t.coeff.clone(),
            mono: t.mono.clone(),
            comp: t.comp,
        }));
        MPoly::from_terms(terms)
    }

    fn component(&self, comp: usize) -> Polynomial {
        Polynomial::from_terms(
            self.terms
                .iter()
                .filter(|t| t.comp == comp)
                .map(|t| Term::new(t.coeff.clone(), t.mono.clone()))
                .collect(),
        )
    }
}

/// Induced orders of the syzygy tower. `leads[k]` holds the leading
/// (monomial, component) of each level-(k+1) basis element; level-1 elements
/// live in the ring itself and carry component 0.
struct Tower {
    ring: MonomialOrder,
    leads: Vec<Vec<(Monomial, usize)>>,
}

impl Tower {
    /// Compare module terms of the depth-level module: depth 0 is the ring,
    /// depth k compares through the level-k leads with the
    /// smaller-component-wins tie-break at each level, innermost first.
    fn cmp(&self, depth: usize, u: &MTerm, v: &MTerm) -> Ordering {
        let mut um = u.mono.clone();
        let mut uc = u.comp;
        let mut vm = v.mono.clone();
        let mut vc = v.comp;
        let mut uchain = Vec::with_capacity(depth);
        let mut vchain = Vec::with_capacity(depth);
        for k in (1..=depth).rev() {
            uchain.push(uc);
            vchain.push(vc);
            let (mu, pu) = &self.leads[k - 1][uc];
            um = um.mul(mu);
            uc = *pu;
            let (mv, pv) = &self.leads[k - 1][vc];
            vm = vm.mul(mv);
            vc = *pv;
        }
        self.ring.compare(&um, &vm).then_with(|| {
            for (a, b) in uchain.iter().rev().zip(vchain.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => {}
                    other => return other.reverse(),
                }
            }
            Ordering::Equal
        })
    }

    fn leading<'a>(&self, depth: usize, h: &'a MPoly) -> &'a MTerm {
        h.terms
            .iter()
            .reduce(|best, t| {
                if self.cmp(depth, t, best) == Ordering::Greater {
                    t
                } else {
                    best
                }
            })
            .expect("nonzero module element")
    }
}

/// Syzygies of a basis whose S-element reductions all terminate at zero.
/// Components of the result index the input basis; the leading term of the
/// (i, j) syzygy is (lcm / LT_i) e_i.
fn syzygies(tower: &Tower, depth: usize, basis: &[MPoly]) -> Vec<MPoly> {
    let leads: Vec<&MTerm> = basis.iter().map(|h| tower.leading(depth, h)).collect();
    let mut out = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            if leads[i].comp != leads[j].comp {
                continue;
            }
            let l = leads[i].mono.lcm(&leads[j].mono);
            let ui = l.div(&leads[i].mono).unwrap();
            let uj = l.div(&leads[j].mono).unwrap();
            let ci = leads[i].coeff.clone().recip();
            let cj = leads[j].coeff.clone().recip();
            let mut s = basis[i].mul_term(&ci, &ui).sub(&basis[j].mul_term(&cj, &uj));
            let mut syz_terms = vec![
                MTerm {
                    coeff: ci,
                    mono: ui,
                    comp: i,
                },
                MTerm {
                    coeff: -cj,
                    mono: uj,
                    comp: j,
                },
            ];
            while !s.is_zero() {
                let lt = tower.leading(depth, &s).clone();
                let nu = (0..basis.len())
                    .find(|&nu| {
                        leads[nu].comp == lt.comp && leads[nu].mono.divides(&lt.mono)
                    })
                    .expect("S-element of a basis reduces to zero");
                let q = &lt.coeff / &leads[nu].coeff;
                let m = lt.mono.div(&leads[nu].mono).unwrap();
                s = s.sub(&basis[nu].mul_term(&q, &m));
                syz_terms.push(MTerm {
                    coeff: -q,
                    mono: m,
                    comp: nu,
                });
            }
            out.push(MPoly::from_terms(syz_terms));
        }
    }
    out
}

fn matrix_of(basis: &[MPoly], rows: usize) -> PolyMatrix {
    PolyMatrix::from_rows(
        (0..rows)
            .map(|r| basis.iter().map(|h| h.component(r)).collect())
            .collect(),
    )
}

/// Minimal graded free resolution of R/<gens> for homogeneous generators:
/// Groebner basis, iterated syzygies with the induced orders, then
/// elimination of constant entries.
pub fn schreyer_resolution(gens: &[Polynomial], ord: &MonomialOrder) -> Result<FreeComplex> {
    if !ord.is_global() {
        return Err(Error::NotGlobalOrder);
    }
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    let gb = buchberger(gens, ord)?;
    let nvars = gb.generators[0].nvars().unwrap_or(crate::poly::NVARS);
    let lex = MonomialOrder::new(OrderKind::Lex, (0..nvars).collect())?;
    let mut level1 = gb.generators;
    level1.sort_by(|a, b| {
        lex.compare(
            b.leading_monomial(ord).unwrap(),
            a.leading_monomial(ord).unwrap(),
        )
    });

    let mut levels: Vec<Vec<i64>> = vec![vec![0]];
    levels.push(
        level1
            .iter()
            .map(|g| i64::from(g.homogeneous_degree().expect("homogeneous basis")))
            .collect(),
    );
    let mut maps = vec![PolyMatrix::from_rows(vec![level1.clone()])];

    let mut tower = Tower {
        ring: ord.clone(),
        leads: Vec::new(),
    };
    let mut basis: Vec<MPoly> = level1
        .iter()
        .map(|g| {
            MPoly::from_terms(
                g.terms()
                    .iter()
                    .map(|t| MTerm {
                        coeff: t.coeff.clone(),
                        mono: t.monomial.clone(),
                        comp: 0,
                    })
                    .collect(),
            )
        })
        .collect();
    let mut depth = 0usize;
    loop {
        assert!(depth <= nvars + 1, "syzygy tower exceeded the variable bound");
        tower
            .leads
            .push(basis.iter().map(|h| {
                let lt = tower.leading(depth, h);
                (lt.mono.clone(), lt.comp)
            })
            .collect());
        let mut syz = syzygies(&tower, depth, &basis);
        if syz.is_empty() {
            break;
        }
        // Sort by leading component, then decreasing lex leading monomial.
        let mut keyed: Vec<(usize, Monomial, MPoly)> = syz
            .drain(..)
            .map(|h| {
                let lt = tower.leading(depth + 1, &h);
                (lt.comp, lt.mono.clone(), h.clone())
            })
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| lex.compare(&b.1, &a.1)));
        let syz: Vec<MPoly> = keyed.into_iter().map(|(_, _, h)| h).collect();

        let prev_degrees = levels.last().unwrap().clone();
        let col_degrees: Vec<i64> = syz
            .iter()
            .map(|h| {
                let lt = tower.leading(depth + 1, h);
                i64::from(lt.mono.degree()) + prev_degrees[lt.comp]
            })
            .collect();
        maps.push(matrix_of(&syz, basis.len()));
        levels.push(col_degrees);
        basis = syz;
        depth += 1;
    }

    minimalize(&FreeComplex { levels, maps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{tangent_cone_generators, validate_spec};
    use crate::poly::text::parse_polynomial;
    use crate::resolution::{betti_numbers, verify_complex};

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn koszul_on_one_variable() {
        let ord = MonomialOrder::default_global();
        let c = schreyer_resolution(&[p("x0")], &ord).unwrap();
        assert_eq!(c.levels, vec![vec![0], vec![1]]);
        assert_eq!(*c.maps[0].entry(0, 0), p("x0"));
    }

    #[test]
    fn koszul_on_two_variables() {
        let ord = MonomialOrder::default_global();
        let c = schreyer_resolution(&[p("x0"), p("x1")], &ord).unwrap();
        assert!(verify_complex(&c).unwrap());
        let t = betti_numbers(&c).unwrap();
        assert_eq!(t.betti, vec![1, 2, 1]);
        assert_eq!(t.shifts, vec![vec![0], vec![1, 1], vec![2]]);
    }

    #[test]
    fn rejects_inhomogeneous_input() {
        let ord = MonomialOrder::default_global();
        assert_eq!(
            schreyer_resolution(&[p("x0-1")], &ord).err(),
            Some(Error::NotHomogeneous)
        );
        assert_eq!(
            schreyer_resolution(&[p("x0")], &MonomialOrder::local_ds()).err(),
            Some(Error::NotGlobalOrder)
        );
    }

    #[test]
    fn tangent_cone_betti_matches_explicit_resolution() {
        let ord = MonomialOrder::default_global();
        for (m, betti) in [
            ([4u64, 5, 6, 7], vec![1usize, 6, 8, 3]),
            ([5, 6, 7, 8], vec![1, 5, 5, 1]),
            ([6, 7, 8, 9], vec![1, 4, 5, 2]),
        ] {
            let spec = validate_spec(m).unwrap();
            let c = schreyer_resolution(&tangent_cone_generators(&spec), &ord).unwrap();
            assert!(verify_complex(&c).unwrap(), "complex for {m:?}");
            let t = betti_numbers(&c).unwrap();
            assert_eq!(t.betti, betti, "betti for {m:?}");
        }
    }

    #[test]
    fn tangent_cone_shifts_match_the_twists() {
        let ord = MonomialOrder::default_global();
        // a = 2, b = 1: shifts are distinguishable from the quadric block.
        let spec = validate_spec([7, 8, 9, 10]).unwrap();
        let c = schreyer_resolution(&tangent_cone_generators(&spec), &ord).unwrap();
        let t = betti_numbers(&c).unwrap();
        assert_eq!(
            t.shifts,
            vec![
                vec![0],
                vec![2, 2, 2, 3, 3, 3],
                vec![3, 3, 4, 4, 4, 4, 4, 4],
                vec![5, 5, 5]
            ]
        );
    }
}
