//! Hilbert function of the associated graded ring by three independent
//! routes: the closed binomial formulas, the alternating sum over the
//! shifts of a graded free resolution, and a semigroup order-counting
//! oracle based on maximal factorization lengths.

use serde::Serialize;

use crate::curves::CurveSpec;
use crate::resolution::FreeComplex;

/// C(n, 3) with the convention C(n, 3) = 0 for n < 3; the only convention
/// under which the closed formulas give H(0) = 1 and H(1) = 4.
fn choose3(n: i64) -> i64 {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Closed-form value of the Hilbert function at degree `i`.
pub fn hilbert_formula(spec: &CurveSpec, i: u32) -> u64 {
    let i = i64::from(i);
    let a = i64::try_from(spec.a).unwrap();
    let v = match spec.b {
        1 => {
            choose3(i + 3) - 3 * choose3(i + 1) - 3 * choose3(i - a + 2)
                + 2 * choose3(i)
                + 6 * choose3(i - a + 1)
                - 3 * choose3(i - a)
        }
        2 => {
            choose3(i + 3) - 3 * choose3(i + 1) - 2 * choose3(i - a + 2)
                + 2 * choose3(i)
                + 3 * choose3(i - a + 1)
                - choose3(i - a - 1)
        }
        _ => {
            choose3(i + 3) - 3 * choose3(i + 1) - choose3(i - a + 2)
                + 2 * choose3(i)
                + 3 * choose3(i - a)
                - 2 * choose3(i - a - 1)
        }
    };
    u64::try_from(v).expect("Hilbert function value is non-negative")
}

/// Alternating sum of graded free ranks: sum over levels j and shifts s of
/// (-1)^j * C(i - s + 3, 3). Valid for any graded resolution over the
/// 4-variable ring; level 0 contributes C(i + 3, 3).
pub fn hilbert_from_complex(c: &FreeComplex, i: u32) -> i64 {
    let i = i64::from(i);
    let mut total = 0i64;
    for (j, level) in c.levels.iter().enumerate() {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        for &s in level {
            total += sign * choose3(i - s + 3);
        }
    }
    total
}

/// Number of semigroup elements whose maximal factorization length is
/// exactly `i`. Any element of maximal order i is at most i * m3, so the
/// dynamic program over [0, i * m3] is complete.
pub fn hilbert_semigroup_oracle(spec: &CurveSpec, i: u32) -> u64 {
    let bound = (u64::from(i) * spec.m[3]) as usize;
    // maxord[s] = longest factorization of s into the generators; None when
    // s is not in the semigroup.
    let mut maxord: Vec<Option<u32>> = vec![None; bound + 1];
    maxord[0] = Some(0);
    for s in 1..=bound {
        let mut best: Option<u32> = None;
        for &m in &spec.m {
            let m = m as usize;
            if s >= m {
                if let Some(o) = maxord[s - m] {
                    best = Some(best.map_or(o + 1, |b| b.max(o + 1)));
                }
            }
        }
        maxord[s] = best;
    }
    maxord.iter().filter(|&&o| o == Some(i)).count() as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HilbertMethod {
    Formula,
    Complex,
    SemigroupOracle,
}

/// Hilbert function values H(0..=max_degree) computed by one method.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertValues {
    pub spec: CurveSpec,
    pub method: HilbertMethod,
    pub values: Vec<u64>,
}

pub fn hilbert_values(spec: &CurveSpec, method: HilbertMethod, max_degree: u32) -> HilbertValues {
    let values = match method {
        HilbertMethod::Formula => (0..=max_degree).map(|i| hilbert_formula(spec, i)).collect(),
        HilbertMethod::Complex => {
            let c = crate::resolution::paper_resolution(spec);
            (0..=max_degree)
                .map(|i| u64::try_from(hilbert_from_complex(&c, i)).expect("non-negative"))
                .collect()
        }
        HilbertMethod::SemigroupOracle => (0..=max_degree)
            .map(|i| hilbert_semigroup_oracle(spec, i))
            .collect(),
    };
    HilbertValues {
        spec: *spec,
        method,
        values,
    }
}

/// First index at which the values have stabilized to the multiplicity m0,
/// if they have by the end of the computed range.
pub fn stabilization_index(values: &[u64], multiplicity: u64) -> Option<usize> {
    let mut idx = None;
    for (i, &v) in values.iter().enumerate() {
        if v == multiplicity {
            idx.get_or_insert(i);
        } else {
            idx = None;
        }
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::validate_spec;
    use crate::resolution::paper_resolution;

    #[test]
    fn formula_spot_values() {
        let s1 = validate_spec([4, 5, 6, 7]).unwrap();
        assert_eq!(hilbert_formula(&s1, 0), 1);
        assert_eq!(hilbert_formula(&s1, 1), 4);
        assert_eq!(hilbert_formula(&s1, 2), 4);
        assert_eq!(hilbert_formula(&s1, 5), 4);
        let s3 = validate_spec([6, 7, 8, 9]).unwrap();
        assert_eq!(hilbert_formula(&s3, 1), 4);
        assert_eq!(hilbert_formula(&s3, 2), 6);
        assert_eq!(hilbert_formula(&s3, 3), 6);
    }

    #[test]
    fn complex_route_matches_formula() {
        for m in [[4u64, 5, 6, 7], [5, 6, 7, 8], [6, 7, 8, 9], [7, 8, 9, 10]] {
            let spec = validate_spec(m).unwrap();
            let c = paper_resolution(&spec);
            for i in 0..=30 {
                assert_eq!(
                    hilbert_from_complex(&c, i),
                    i64::try_from(hilbert_formula(&spec, i)).unwrap(),
                    "degree {i} for {m:?}"
                );
            }
        }
    }

    #[test]
    fn oracle_spot_values() {
        let s1 = validate_spec([4, 5, 6, 7]).unwrap();
        assert_eq!(hilbert_semigroup_oracle(&s1, 0), 1);
        assert_eq!(hilbert_semigroup_oracle(&s1, 1), 4);
        let s2 = validate_spec([5, 6, 7, 8]).unwrap();
        assert_eq!(hilbert_semigroup_oracle(&s2, 2), 5);
        assert_eq!(hilbert_formula(&s2, 2), 5);
    }

    #[test]
    fn degree_zero_of_positive_complex_is_one() {
        let c = paper_resolution(&validate_spec([4, 5, 6, 7]).unwrap());
        assert_eq!(hilbert_from_complex(&c, 0), 1);
    }

    #[test]
    fn stabilizes_at_multiplicity() {
        let spec = validate_spec([7, 9, 11, 13]).unwrap();
        let values = hilbert_values(&spec, HilbertMethod::Formula, 20);
        let idx = stabilization_index(&values.values, spec.m[0]).expect("stabilizes");
        assert!(idx <= spec.a as usize + 2);
        assert_eq!(values.values[1], 4);
    }
}
