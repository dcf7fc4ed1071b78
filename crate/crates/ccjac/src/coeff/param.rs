//! Sparse polynomials in the two parameters `a`, `b` with rational
//! coefficients. These are the values stored inside parametric coefficient
//! domains; the subring membership predicate lives in the parent module.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::monomial::Exp2;

/// A polynomial in `a` and `b` over the rationals. No zero coefficients are
/// stored; the zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Exp2, BigRational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn one() -> Self {
        ParamPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exp2::ZERO, c);
        }
        ParamPoly { terms }
    }

    /// `c * a^i * b^j`
    pub fn monomial(c: BigRational, a_exp: u32, b_exp: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exp2::new(a_exp, b_exp), c);
        }
        ParamPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Exp2::is_zero)
    }

    /// The constant value, if this polynomial has degree zero.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            self.terms.get(&Exp2::ZERO).cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp2, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Exp2::total)
    }

    /// Leading (graded-lex greatest) term.
    pub fn leading_term(&self) -> Option<(&Exp2, &BigRational)> {
        self.terms.iter().next_back()
    }

    fn insert_add(terms: &mut BTreeMap<Exp2, BigRational>, key: Exp2, val: BigRational) {
        if val.is_zero() {
            return;
        }
        match terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(val);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += val;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            Self::insert_add(&mut terms, *k, v.clone());
        }
        ParamPoly { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            Self::insert_add(&mut terms, *k, -v.clone());
        }
        ParamPoly { terms }
    }

    pub fn neg(&self) -> Self {
        ParamPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, -v.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (k1, v1) in &self.terms {
            for (k2, v2) in &other.terms {
                Self::insert_add(&mut terms, k1.add(k2), v1 * v2);
            }
        }
        ParamPoly { terms }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Exact polynomial division. Returns `None` unless `divisor` divides
    /// `self` with zero remainder.
    ///
    /// Leading terms multiply without cancellation over a domain, so repeated
    /// leading-term elimination under the graded-lex order succeeds exactly
    /// when the division is exact.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (dk, dc) = divisor.leading_term().expect("nonzero divisor");
        let (dk, dc) = (*dk, dc.clone());
        let mut rem = self.clone();
        let mut quo = BTreeMap::new();
        while let Some((rk, rc)) = rem.leading_term() {
            let qk = rk.checked_sub(&dk)?;
            let qc = rc / &dc;
            Self::insert_add(&mut quo, qk, qc.clone());
            let piece = ParamPoly::monomial(qc, qk.e1, qk.e2).mul(divisor);
            rem = rem.sub(&piece);
        }
        Some(ParamPoly { terms: quo })
    }

    /// Sign used when rendering a leading `-`: the sign of the graded-lex
    /// leading rational coefficient.
    pub fn is_lead_negative(&self) -> bool {
        self.leading_term()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false)
    }
}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Render one `c * a^i * b^j` term as factors joined by `*`. `1` and `-1`
/// coefficients are elided in front of a nonempty monomial.
pub(crate) fn push_term_factors(out: &mut String, c: &BigRational, factors: &[(char, u32)]) {
    let monomial_empty = factors.iter().all(|&(_, e)| e == 0);
    let mut first = true;
    if monomial_empty || !(c.is_one() || (-c).is_one()) {
        out.push_str(&fmt_rational(c));
        first = false;
    } else if (-c).is_one() {
        out.push('-');
    }
    for &(var, exp) in factors {
        if exp == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push(var);
        if exp >= 2 {
            out.push('^');
            out.push_str(&exp.to_string());
        }
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            let mut term = String::new();
            push_term_factors(&mut term, c, &[('a', k.e1), ('b', k.e2)]);
            if i == 0 {
                s.push_str(&term);
            } else if let Some(stripped) = term.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(stripped);
            } else {
                s.push_str(" + ");
                s.push_str(&term);
            }
        }
        write!(f, "{s}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn arithmetic_basics() {
        let a = ParamPoly::monomial(q(1, 1), 1, 0);
        let b = ParamPoly::monomial(q(1, 1), 0, 1);
        let s = a.add(&b);
        // (a + b)^2 = a^2 + 2ab + b^2
        let sq = s.mul(&s);
        let expected = ParamPoly::monomial(q(1, 1), 2, 0)
            .add(&ParamPoly::monomial(q(2, 1), 1, 1))
            .add(&ParamPoly::monomial(q(1, 1), 0, 2));
        assert_eq!(sq, expected);
        assert!(s.sub(&s).is_zero());
    }

    #[test]
    fn exact_division() {
        let a3b3 = ParamPoly::monomial(q(1, 1), 3, 3);
        let ab = ParamPoly::monomial(q(1, 1), 1, 1);
        assert_eq!(
            a3b3.exact_div(&ab),
            Some(ParamPoly::monomial(q(1, 1), 2, 2))
        );

        // (a^2 - b^2) / (a + b) = a - b even though both are multi-term
        let num = ParamPoly::monomial(q(1, 1), 2, 0).sub(&ParamPoly::monomial(q(1, 1), 0, 2));
        let den = ParamPoly::monomial(q(1, 1), 1, 0).add(&ParamPoly::monomial(q(1, 1), 0, 1));
        let quo = num.exact_div(&den).unwrap();
        assert_eq!(quo.mul(&den), num);

        // a^2*b / (a^3) fails
        let n = ParamPoly::monomial(q(1, 1), 2, 1);
        let d = ParamPoly::monomial(q(1, 1), 3, 0);
        assert_eq!(n.exact_div(&d), None);
    }

    #[test]
    fn display_is_stable() {
        let p = ParamPoly::monomial(q(2, 1), 1, 1)
            .add(&ParamPoly::monomial(q(-1, 3), 0, 2))
            .add(&ParamPoly::constant(q(5, 1)));
        assert_eq!(p.to_string(), "2*a*b - 1/3*b^2 + 5");
    }
}
