//! Sparse multivariate polynomials over the rationals.
//!
//! The variable table is fixed: the six curve parameters, the expansion
//! parameter `u`, and the ten entries of a symbolic lower-triangular 4x4
//! matrix. Exponent vectors over this table are the term keys; a `BTreeMap`
//! keyed by them gives a canonical term order, so polynomial equality is
//! structural equality and "identically zero" is map emptiness.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{format_rational, int, Rational};

/// Number of symbols in the fixed variable table.
pub const NUM_VARS: usize = 17;

/// The fixed variable table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Alpha,
    Beta,
    Gamma,
    AlphaBar,
    BetaBar,
    GammaBar,
    U,
    G00,
    G10,
    G11,
    G20,
    G21,
    G22,
    G30,
    G31,
    G32,
    G33,
}

impl Var {
    pub const ALL: [Var; NUM_VARS] = [
        Var::Alpha,
        Var::Beta,
        Var::Gamma,
        Var::AlphaBar,
        Var::BetaBar,
        Var::GammaBar,
        Var::U,
        Var::G00,
        Var::G10,
        Var::G11,
        Var::G20,
        Var::G21,
        Var::G22,
        Var::G30,
        Var::G31,
        Var::G32,
        Var::G33,
    ];

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&v| v == self).unwrap()
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Alpha => "alpha",
            Var::Beta => "beta",
            Var::Gamma => "gamma",
            Var::AlphaBar => "alpha_bar",
            Var::BetaBar => "beta_bar",
            Var::GammaBar => "gamma_bar",
            Var::U => "u",
            Var::G00 => "g00",
            Var::G10 => "g10",
            Var::G11 => "g11",
            Var::G20 => "g20",
            Var::G21 => "g21",
            Var::G22 => "g22",
            Var::G30 => "g30",
            Var::G31 => "g31",
            Var::G32 => "g32",
            Var::G33 => "g33",
        }
    }

    /// The entry variable for row `i`, column `j` of the symbolic
    /// lower-triangular matrix; None above the diagonal.
    pub fn g_entry(i: usize, j: usize) -> Option<Var> {
        const G: [[Option<Var>; 4]; 4] = [
            [Some(Var::G00), None, None, None],
            [Some(Var::G10), Some(Var::G11), None, None],
            [Some(Var::G20), Some(Var::G21), Some(Var::G22), None],
            [Some(Var::G30), Some(Var::G31), Some(Var::G32), Some(Var::G33)],
        ];
        G[i][j]
    }
}

/// Exponent vector over the fixed variable table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exponents([u8; NUM_VARS]);

impl Exponents {
    fn mul(&self, other: &Exponents) -> Exponents {
        let mut out = [0u8; NUM_VARS];
        for i in 0..NUM_VARS {
            out[i] = self.0[i]
                .checked_add(other.0[i])
                .expect("exponent overflow");
        }
        Exponents(out)
    }

    pub fn exponent(&self, v: Var) -> u8 {
        self.0[v.index()]
    }

    fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

/// A sparse multivariate polynomial with exact rational coefficients.
///
/// Invariant: no stored coefficient is zero; the zero polynomial is the
/// empty map. Together with the canonical term order this makes `==`
/// decide polynomial identity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(int(1))
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MultiPoly::default();
        if !c.is_zero() {
            p.terms.insert(Exponents::default(), c);
        }
        p
    }

    pub fn var(v: Var) -> Self {
        let mut exps = [0u8; NUM_VARS];
        exps[v.index()] = 1;
        let mut p = MultiPoly::default();
        p.terms.insert(Exponents(exps), int(1));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Some(c) when the polynomial is the constant c (including zero).
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(int(0)),
            1 => {
                let (exps, coeff) = self.terms.iter().next().unwrap();
                exps.is_constant().then(|| coeff.clone())
            }
            _ => None,
        }
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|e| e.exponent(v) > 0)
    }

    pub fn degree_in(&self, v: Var) -> u8 {
        self.terms
            .keys()
            .map(|e| e.exponent(v))
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, exps: Exponents, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + &coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, q)| (*e, q * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut out = MultiPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Substitution homomorphism with rational values; unbound variables
    /// remain symbolic. With a full binding the result is a constant.
    pub fn eval(&self, bindings: &[(Var, Rational)]) -> MultiPoly {
        let map: Vec<(Var, MultiPoly)> = bindings
            .iter()
            .map(|(v, r)| (*v, MultiPoly::constant(r.clone())))
            .collect();
        self.subst(&map)
    }

    /// Full evaluation; None if any variable of the polynomial is unbound.
    pub fn eval_rational(&self, bindings: &[(Var, Rational)]) -> Option<Rational> {
        self.eval(bindings).as_rational()
    }

    /// General substitution homomorphism `Var -> MultiPoly`.
    pub fn subst(&self, map: &[(Var, MultiPoly)]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (exps, coeff) in &self.terms {
            let mut term = MultiPoly::constant(coeff.clone());
            let mut residual = [0u8; NUM_VARS];
            for (i, &e) in exps.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let var = Var::ALL[i];
                if let Some((_, image)) = map.iter().find(|(v, _)| *v == var) {
                    term = &term * &image.pow(e as u32);
                } else {
                    residual[i] = e;
                }
            }
            let residual_mono = MultiPoly {
                terms: BTreeMap::from([(Exponents(residual), int(1))]),
            };
            out = &out + &(&term * &residual_mono);
        }
        out
    }

    /// Coefficients `c_0..c_d` of `self` viewed as a polynomial in `v`,
    /// so that `sum c_m v^m` reconstructs `self` and `c_d` is nonzero.
    /// The zero polynomial yields an empty list.
    pub fn coeffs_in(&self, v: Var) -> Vec<MultiPoly> {
        if self.is_zero() {
            return Vec::new();
        }
        let degree = self.degree_in(v) as usize;
        let mut coeffs = vec![MultiPoly::zero(); degree + 1];
        let idx = v.index();
        for (exps, coeff) in &self.terms {
            let m = exps.0[idx] as usize;
            let mut stripped = *exps;
            stripped.0[idx] = 0;
            coeffs[m].add_term(stripped, coeff.clone());
        }
        coeffs
    }

    /// Coefficient of `v^m` (with `v` stripped from the term keys).
    pub fn coeff_of(&self, v: Var, m: u8) -> MultiPoly {
        let idx = v.index();
        let mut out = MultiPoly::zero();
        for (exps, coeff) in &self.terms {
            if exps.0[idx] == m {
                let mut stripped = *exps;
                stripped.0[idx] = 0;
                out.add_term(stripped, coeff.clone());
            }
        }
        out
    }
}

impl From<i64> for MultiPoly {
    fn from(n: i64) -> Self {
        MultiPoly::constant(int(n))
    }
}

impl From<Rational> for MultiPoly {
    fn from(r: Rational) -> Self {
        MultiPoly::constant(r)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (exps, coeff) in &rhs.terms {
            out.add_term(*exps, coeff.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (exps, coeff) in &rhs.terms {
            out.add_term(*exps, -coeff.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.mul(eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, -c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in &self.terms {
            let mut piece = String::new();
            let abs = coeff.clone();
            let negative = abs < Rational::from_integer(0.into());
            let abs = if negative { -abs } else { abs };
            if !abs.is_one() || exps.is_constant() {
                piece.push_str(&format_rational(&abs));
            }
            for (i, &e) in exps.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !piece.is_empty() {
                    piece.push('*');
                }
                piece.push_str(Var::ALL[i].name());
                if e > 1 {
                    piece.push_str(&format!("^{e}"));
                }
            }
            if first {
                if negative {
                    write!(f, "-{piece}")?;
                } else {
                    write!(f, "{piece}")?;
                }
                first = false;
            } else if negative {
                write!(f, " - {piece}")?;
            } else {
                write!(f, " + {piece}")?;
            }
        }
        Ok(())
    }
}

/// The variable `v` as a polynomial.
pub fn v(var: Var) -> MultiPoly {
    MultiPoly::var(var)
}

/// The integer `n` as a constant polynomial.
pub fn c(n: i64) -> MultiPoly {
    MultiPoly::from(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn beta() -> MultiPoly {
        v(Var::Beta)
    }
    fn beta_bar() -> MultiPoly {
        v(Var::BetaBar)
    }

    #[test]
    fn monomial_product() {
        let p = &beta() * &beta_bar();
        assert_eq!(p.num_terms(), 1);
        let coeffs = p.coeffs_in(Var::BetaBar);
        assert_eq!(coeffs.len(), 2);
        assert_eq!(coeffs[1], beta());
    }

    #[test]
    fn additive_inverse_cancels_to_empty_map() {
        let a = &beta() - &c(3);
        let b = &c(3) - &beta();
        let sum = &a + &b;
        assert!(sum.is_zero());
        assert_eq!(sum.num_terms(), 0);
    }

    #[test]
    fn h22_factorization_expands_consistently() {
        // (3-beta-beta_bar)*(beta_bar-beta) multiplied by 4*beta*(beta-3)
        // equals the product computed in the other association order.
        let f1 = &(&c(3) - &beta()) - &beta_bar();
        let f2 = &beta_bar() - &beta();
        let f3 = &(&c(4) * &beta()) * &(&beta() - &c(3));
        let left = &(&f1 * &f2) * &f3;
        let right = &f1 * &(&f2 * &f3);
        assert_eq!(left, right);
        assert!(!left.is_zero());
        // Spot-check one expansion coefficient: the beta^3*beta_bar term.
        // 4b(b-3)(3-b-bb)(bb-b) has bb-coefficient polynomials in b; the
        // coefficient of bb^1 is 4b(b-3)(3-b) + 4b(b-3)b = 12b(b-3).
        let coeffs = left.coeffs_in(Var::BetaBar);
        let expected = &(&c(12) * &beta()) * &(&beta() - &c(3));
        assert_eq!(coeffs[1], expected);
    }

    #[test]
    fn eval_curvature_bound() {
        // (1/2)*beta*(3-beta) at beta = 3/2 is 9/8.
        let p = (&beta() * &(&c(3) - &beta())).scale(&rat(1, 2));
        assert_eq!(p.eval_rational(&[(Var::Beta, rat(3, 2))]), Some(rat(9, 8)));
        let q = &beta() - &c(3);
        assert_eq!(q.eval_rational(&[(Var::Beta, int(3))]), Some(int(0)));
    }

    #[test]
    fn eval_h22_on_complementary_betas() {
        // 4*beta*(beta-3)*(3-beta-beta_bar)*(beta_bar-beta) vanishes when
        // beta + beta_bar = 3.
        let p = &(&(&c(4) * &beta()) * &(&beta() - &c(3)))
            * &(&(&(&c(3) - &beta()) - &beta_bar()) * &(&beta_bar() - &beta()));
        let value = p.eval_rational(&[(Var::Beta, rat(1, 10)), (Var::BetaBar, rat(29, 10))]);
        assert_eq!(value, Some(int(0)));
    }

    #[test]
    fn partial_eval_keeps_symbols() {
        let p = &(&beta() * &beta_bar()) + &c(1);
        let partial = p.eval(&[(Var::Beta, int(2))]);
        assert_eq!(partial, &(&c(2) * &beta_bar()) + &c(1));
        assert_eq!(partial.as_rational(), None);
    }

    #[test]
    fn coeffs_in_examples() {
        // u^2 + beta*u -> [0, beta, 1]
        let u = v(Var::U);
        let p = &u.pow(2) + &(&beta() * &u);
        let coeffs = p.coeffs_in(Var::U);
        assert_eq!(coeffs.len(), 3);
        assert!(coeffs[0].is_zero());
        assert_eq!(coeffs[1], beta());
        assert_eq!(coeffs[2], c(1));

        assert!(MultiPoly::zero().coeffs_in(Var::U).is_empty());
    }

    #[test]
    fn display_is_readable() {
        let p = &(&beta() * &beta()).scale(&rat(-9, 2)) + &c(1);
        assert_eq!(p.to_string(), "1 - 9/2*beta^2");
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        let term = (
            prop::sample::select(vec![Var::Alpha, Var::Beta, Var::GammaBar, Var::U]),
            0u8..3,
            -6i64..7,
        );
        prop::collection::vec(term, 0..6).prop_map(|terms| {
            let mut p = MultiPoly::zero();
            for (var, e, coeff) in terms {
                let mono = MultiPoly::var(var).pow(e as u32).scale(&int(coeff));
                p = &p + &mono;
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), d in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &d, &a + &(&b + &d));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &d, &a * &(&b * &d));
            prop_assert_eq!(&a * &(&b + &d), &(&a * &b) + &(&a * &d));
        }

        #[test]
        fn eval_is_a_homomorphism(a in arb_poly(), b in arb_poly(), n in -5i64..6, m in -5i64..6, k in -5i64..6, j in -5i64..6) {
            let bindings = [
                (Var::Alpha, int(n)),
                (Var::Beta, int(m)),
                (Var::GammaBar, int(k)),
                (Var::U, int(j)),
            ];
            let prod = (&a * &b).eval_rational(&bindings).unwrap();
            let parts = a.eval_rational(&bindings).unwrap() * b.eval_rational(&bindings).unwrap();
            prop_assert_eq!(prod, parts);
        }

        #[test]
        fn coeffs_in_reconstructs(a in arb_poly()) {
            let u = MultiPoly::var(Var::U);
            let mut rebuilt = MultiPoly::zero();
            for (m, coeff) in a.coeffs_in(Var::U).into_iter().enumerate() {
                rebuilt = &rebuilt + &(&coeff * &u.pow(m as u32));
            }
            prop_assert_eq!(rebuilt, a);
        }
    }
}
