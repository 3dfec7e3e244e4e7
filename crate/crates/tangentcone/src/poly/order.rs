//! Monomial orders: global (lex, deglex, degrevlex) and local (negdegrevlex).
//!
//! An order carries a priority permutation of the variables, listed from the
//! highest-priority variable down. The revlex tie-break scans exponents from
//! the lowest-priority variable upward; at the first difference the monomial
//! with the smaller exponent is the greater one.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use super::{var_name, Monomial};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegLex,
    DegRevLex,
    NegDegRevLex,
}

impl OrderKind {
    /// Global orders satisfy `u > 1` for every non-constant monomial `u`.
    pub fn is_global(self) -> bool {
        !matches!(self, OrderKind::NegDegRevLex)
    }

    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::DegLex => "deglex",
            OrderKind::DegRevLex => "degrevlex",
            OrderKind::NegDegRevLex => "negdegrevlex",
        }
    }
}

/// A total multiplicative order on monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
    // When set, the first priority variable forms an elimination block that is
    // compared before the remaining variables. Used internally for the
    // auxiliary variable t; never exposed through public constructors.
    elim_first: bool,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let n = priority.len();
        let mut seen = vec![false; n];
        for &p in &priority {
            if p >= n || seen[p] {
                return Err(Error::BadPriority(format!("{priority:?}")));
            }
            seen[p] = true;
        }
        Ok(MonomialOrder {
            kind,
            priority,
            elim_first: false,
        })
    }

    /// The local order used for standard-basis work: negdegrevlex with
    /// x0 > x1 > x2 > y.
    pub fn local_ds() -> Self {
        MonomialOrder {
            kind: OrderKind::NegDegRevLex,
            priority: vec![0, 1, 2, 3],
            elim_first: false,
        }
    }

    /// The fixed global order used for canonical ideal comparisons:
    /// degrevlex with x0 > x1 > x2 > y.
    pub fn default_global() -> Self {
        MonomialOrder {
            kind: OrderKind::DegRevLex,
            priority: vec![0, 1, 2, 3],
            elim_first: false,
        }
    }

    /// Degrevlex with x1 > x2 > y > x0, so that x0 is the revlex-penalized
    /// variable. This is the order under which the Cohen-Macaulay check
    /// looks for x0-free leading monomials.
    pub fn degrevlex_x0_last() -> Self {
        MonomialOrder {
            kind: OrderKind::DegRevLex,
            priority: vec![1, 2, 3, 0],
            elim_first: false,
        }
    }

    /// Degrevlex with x0 > y > x1 > x2, the literal reading of the order
    /// named in the Cohen-Macaulay argument. Kept for reporting.
    pub fn degrevlex_x0_y_x1_x2() -> Self {
        MonomialOrder {
            kind: OrderKind::DegRevLex,
            priority: vec![0, 3, 1, 2],
            elim_first: false,
        }
    }

    /// Block order eliminating the variable with index `elim_var` from a ring
    /// with `nvars` variables: the eliminated variable is compared first, ties
    /// fall through to degrevlex on the remaining variables in index order.
    pub(crate) fn elimination(nvars: usize, elim_var: usize) -> Self {
        let mut priority = vec![elim_var];
        priority.extend((0..nvars).filter(|&v| v != elim_var));
        MonomialOrder {
            kind: OrderKind::DegRevLex,
            priority,
            elim_first: true,
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn is_global(&self) -> bool {
        self.kind.is_global()
    }

    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Ordering {
        debug_assert_eq!(u.nvars(), v.nvars());
        debug_assert_eq!(u.nvars(), self.priority.len());
        if self.elim_first {
            let t = self.priority[0];
            match u.exp(t).cmp(&v.exp(t)) {
                Ordering::Equal => {}
                other => return other,
            }
            return compare_kind(self.kind, &self.priority[1..], u, v);
        }
        compare_kind(self.kind, &self.priority, u, v)
    }

    /// Greatest of two monomials under this order (first argument on ties).
    pub fn max<'a>(&self, u: &'a Monomial, v: &'a Monomial) -> &'a Monomial {
        if self.compare(u, v) == Ordering::Less {
            v
        } else {
            u
        }
    }
}

fn compare_kind(kind: OrderKind, pr: &[usize], u: &Monomial, v: &Monomial) -> Ordering {
    let deg = |m: &Monomial| pr.iter().map(|&i| m.exp(i)).sum::<u32>();
    match kind {
        OrderKind::Lex => lex(pr, u, v),
        OrderKind::DegLex => deg(u).cmp(&deg(v)).then_with(|| lex(pr, u, v)),
        OrderKind::DegRevLex => deg(u).cmp(&deg(v)).then_with(|| revlex(pr, u, v)),
        OrderKind::NegDegRevLex => deg(v).cmp(&deg(u)).then_with(|| revlex(pr, u, v)),
    }
}

fn lex(pr: &[usize], u: &Monomial, v: &Monomial) -> Ordering {
    for &i in pr {
        match u.exp(i).cmp(&v.exp(i)) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

fn revlex(pr: &[usize], u: &Monomial, v: &Monomial) -> Ordering {
    for &i in pr.iter().rev() {
        match u.exp(i).cmp(&v.exp(i)) {
            Ordering::Equal => {}
            // Smaller exponent at the first difference from the bottom wins.
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<&str> = self.priority.iter().map(|&i| var_name(i)).collect();
        write!(f, "{}({})", self.kind.name(), vars.join(">"))
    }
}

impl Serialize for MonomialOrder {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
