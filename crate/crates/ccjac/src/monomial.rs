//! Exponent pairs with a graded-lexicographic order.
//!
//! The same key type serves the three sparse representations in this crate:
//! exponents of `(x, y)` in commutative polynomials, of `(a, b)` inside
//! parametric coefficients, and of `(X, Y)` in normal-ordered Weyl elements.

use std::cmp::Ordering;

/// An exponent pair `(e1, e2)` ordered graded-lexicographically: lower total
/// degree first, ties broken by the first exponent. Iterating a `BTreeMap`
/// keyed by `Exp2` therefore visits terms from the constant term up to the
/// leading term.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Exp2 {
    pub e1: u32,
    pub e2: u32,
}

impl Exp2 {
    pub const fn new(e1: u32, e2: u32) -> Self {
        Exp2 { e1, e2 }
    }

    pub const ZERO: Exp2 = Exp2 { e1: 0, e2: 0 };

    pub fn total(&self) -> u32 {
        self.e1 + self.e2
    }

    pub fn is_zero(&self) -> bool {
        self.e1 == 0 && self.e2 == 0
    }

    /// Componentwise sum (monomial product).
    pub fn add(&self, other: &Exp2) -> Exp2 {
        Exp2::new(self.e1 + other.e1, self.e2 + other.e2)
    }

    /// Componentwise difference, if `other` divides `self` monomial-wise.
    pub fn checked_sub(&self, other: &Exp2) -> Option<Exp2> {
        if self.e1 >= other.e1 && self.e2 >= other.e2 {
            Some(Exp2::new(self.e1 - other.e1, self.e2 - other.e2))
        } else {
            None
        }
    }

    /// Swap the two exponents.
    pub fn transposed(&self) -> Exp2 {
        Exp2::new(self.e2, self.e1)
    }
}

impl Ord for Exp2 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then(self.e1.cmp(&other.e1))
    }
}

impl PartialOrd for Exp2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        // 1 < y < x < y^2 < xy < x^2
        let mut keys = vec![
            Exp2::new(2, 0),
            Exp2::new(0, 0),
            Exp2::new(1, 1),
            Exp2::new(0, 1),
            Exp2::new(1, 0),
            Exp2::new(0, 2),
        ];
        keys.sort();
        assert_eq!(
            keys,
            vec![
                Exp2::new(0, 0),
                Exp2::new(0, 1),
                Exp2::new(1, 0),
                Exp2::new(0, 2),
                Exp2::new(1, 1),
                Exp2::new(2, 0),
            ]
        );
    }
}
