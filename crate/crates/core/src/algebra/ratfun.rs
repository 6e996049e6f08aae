//! Reduced univariate rational functions over the rationals.

use super::cyclo::{cyclo_factorize_default, CycloFactorization};
use super::{AlgebraError, Field, Poly, Rat};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A ratio of polynomials kept fully reduced: `gcd(num, den) = 1` and the
/// denominator's lowest nonzero coefficient is +1 (so `1-x`, `1+x`,
/// `1+x+x^2` keep their familiar shapes).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RationalFunction {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree().map_or(false, |d| d >= 1) {
            (
                num.try_exact_div(&g).unwrap(),
                den.try_exact_div(&g).unwrap(),
            )
        } else {
            (num, den)
        };
        let (_, low) = den.lowest_term().unwrap();
        if !low.is_one() {
            let inv = low.clone();
            num = num.scale(&(Rat::one() / &inv));
            den = den.scale(&(Rat::one() / &inv));
        }
        RationalFunction { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RationalFunction::from_poly(Poly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        RationalFunction::constant(super::rat(n))
    }

    /// `x` as a rational function.
    pub fn var() -> Self {
        RationalFunction::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The polynomial content when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn eval(&self, x: &Rat) -> Result<Rat, AlgebraError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(AlgebraError::EvaluationPole(x.to_string()));
        }
        Ok(self.num.eval(x) / d)
    }

    /// Order of vanishing at `x = a` (negative for a pole).
    pub fn order_at(&self, a: &Rat) -> i64 {
        let factor = Poly::new(vec![-a.clone(), Rat::one()]);
        self.num.multiplicity_of(&factor) as i64 - self.den.multiplicity_of(&factor) as i64
    }

    /// Cyclotomic factorization of the reduced denominator.
    pub fn den_cyclo(&self) -> CycloFactorization {
        cyclo_factorize_default(&self.den)
    }

    /// Substitutes `x -> p(x)`.
    pub fn compose_poly(&self, p: &Poly) -> Result<Self, AlgebraError> {
        let den = self.den.compose(p);
        if den.is_zero() {
            return Err(AlgebraError::EvaluationPole(format!("x := {}", p)));
        }
        Ok(RationalFunction::new(self.num.compose(p), den))
    }

    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RationalFunction::new(num, &self.den * &self.den)
    }

    pub fn pow(&self, e: usize) -> Self {
        RationalFunction::new(self.num.pow(e), self.den.pow(e))
    }

    /// Exact square root, when both numerator and denominator are perfect
    /// squares of polynomials. Returns the branch whose lowest term is
    /// positive.
    pub fn sqrt_exact(&self) -> Option<Self> {
        let n = poly_sqrt(&self.num)?;
        let d = poly_sqrt(&self.den)?;
        Some(RationalFunction::new(n, d))
    }
}

/// Exact polynomial square root, if one exists with rational coefficients.
fn poly_sqrt(p: &Poly) -> Option<Poly> {
    if p.is_zero() {
        return Some(Poly::zero());
    }
    let deg = p.degree().unwrap();
    if deg % 2 != 0 {
        return None;
    }
    let (low_idx, low) = p.lowest_term().unwrap();
    if low_idx % 2 != 0 {
        return None;
    }
    // Work from the lowest term upward: r_0 = sqrt(low), then match
    // coefficients one at a time.
    let shifted = p.shift_down(low_idx).unwrap();
    let c0 = shifted.coeff(0);
    let r0 = rat_sqrt(&c0)?;
    let half = deg - low_idx;
    let mut r = vec![Rat::zero(); half / 2 + 1];
    r[0] = r0;
    for k in 1..r.len() {
        // coefficient of x^k in r^2: sum_{i+j=k} r_i r_j
        let mut acc = Rat::zero();
        for i in 1..k {
            acc += &r[i] * &r[k - i];
        }
        let target = shifted.coeff(k) - acc;
        let two_r0 = &r[0] + &r[0];
        r[k] = target / two_r0;
    }
    let cand = Poly::new(r).shift_up(low_idx / 2);
    if &(&cand * &cand) == p {
        Some(cand)
    } else {
        None
    }
}

fn rat_sqrt(c: &Rat) -> Option<Rat> {
    if c < &Rat::zero() {
        return None;
    }
    let n = c.numer().sqrt();
    let d = c.denom().sqrt();
    let cand = Rat::new(n, d);
    (&cand * &cand == *c).then_some(cand)
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Field for RationalFunction {
    fn zero() -> Self {
        RationalFunction::from_poly(Poly::zero())
    }
    fn one() -> Self {
        RationalFunction::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        RationalFunction::from_int(n)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RF({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn reduction_and_normalization() {
        // (1 - x^2) / (1 - x) = 1 + x
        let f = RationalFunction::new(Poly::one_minus_xk(2), Poly::one_minus_xk(1));
        assert_eq!(f.as_poly().unwrap(), &Poly::from_ints(&[1, 1]));
        // denominator normalized to lowest coefficient +1
        let g = RationalFunction::new(Poly::one(), Poly::from_ints(&[-2, 2]));
        assert_eq!(g.den(), &Poly::from_ints(&[1, -1]));
        assert_eq!(g.num(), &Poly::constant(rat(-1) / rat(2)));
    }

    #[test]
    fn field_ops_cancel() {
        let x = RationalFunction::var();
        let one = RationalFunction::one();
        // x/(1-x) + x^2/(1-x) = x(1+x)/(1-x)
        let den = &one - &x;
        let a = &x / &den;
        let b = &(&x * &x) / &den;
        let s = &a + &b;
        assert_eq!(s.num(), &Poly::from_ints(&[0, 1, 1]));
        assert_eq!(s.den(), &Poly::from_ints(&[1, -1]));
    }

    #[test]
    fn exact_sqrt() {
        // ((1-q)/(1+q))^2
        let f = RationalFunction::new(
            Poly::from_ints(&[1, -2, 1]),
            Poly::from_ints(&[1, 2, 1]),
        );
        let r = f.sqrt_exact().unwrap();
        assert_eq!(r.num(), &Poly::from_ints(&[1, -1]));
        assert_eq!(r.den(), &Poly::from_ints(&[1, 1]));
        assert!(RationalFunction::var().sqrt_exact().is_none());
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dx [x/(1-x)] = 1/(1-x)^2
        let x = RationalFunction::var();
        let f = &x / &(&RationalFunction::one() - &x);
        let d = f.derivative();
        assert_eq!(d.num(), &Poly::one());
        assert_eq!(d.den(), &Poly::from_ints(&[1, -2, 1]));
    }
}
