//! Dense univariate polynomials over the rationals.
//!
//! The representation is a coefficient vector indexed by degree with the
//! invariant that the last entry is nonzero (the zero polynomial is the
//! empty vector). All polynomials in scope have modest degree, so dense
//! storage is the right trade-off.

use super::{rat, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// Builds a polynomial from coefficients (index = degree), trimming
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// `x` itself.
    pub fn x() -> Self {
        Poly::from_ints(&[0, 1])
    }

    /// `1 - x^k`.
    pub fn one_minus_xk(k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[0] = rat(1);
        coeffs[k] = rat(-1);
        Poly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Index and value of the lowest nonzero coefficient.
    pub fn lowest_term(&self) -> Option<(usize, &Rat)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divides by `x^k` exactly; `None` if a lower coefficient is nonzero.
    pub fn shift_down(&self, k: usize) -> Option<Self> {
        if k == 0 || self.is_zero() {
            return Some(self.clone());
        }
        if self.coeffs.len() < k || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitutes another polynomial for the variable (Horner scheme).
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat(i as i64 + 1))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: usize) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division, returning `(quotient, remainder)`.
    pub fn divrem(&self, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let dd = div.degree().unwrap();
        if self.degree().map_or(true, |d| d < dd) {
            return (Poly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let lead = div.leading().unwrap().clone();
        let qd = rem.len() - 1 - dd;
        let mut quot = vec![Rat::zero(); qd + 1];
        for i in (0..=qd).rev() {
            let c = &rem[i + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in div.coeffs.iter().enumerate() {
                let t = dc * &c;
                rem[i + j] = &rem[i + j] - &t;
            }
            quot[i] = c;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn try_exact_div(&self, div: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(div);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Multiplicity of `factor` in `self` (0 when it does not divide).
    pub fn multiplicity_of(&self, factor: &Poly) -> usize {
        assert!(factor.degree().map_or(false, |d| d >= 1));
        let mut p = self.clone();
        let mut m = 0;
        while let Some(q) = p.try_exact_div(factor) {
            p = q;
            m += 1;
            if p.is_zero() {
                break;
            }
        }
        m
    }

    /// Greatest common divisor, normalized to be primitive over the
    /// integers with positive leading coefficient.
    ///
    /// Uses a primitive pseudo-remainder sequence over the integers, which
    /// keeps intermediate coefficients small compared to naive monic
    /// Euclid over the rationals.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.primitive_int_form();
        }
        if other.is_zero() {
            return self.primitive_int_form();
        }
        let mut a = self.to_int_primitive();
        let mut b = other.to_int_primitive();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = int_pseudo_rem(&a, &b);
            if r.is_empty() {
                return Poly::from_int_vec(&b);
            }
            a = b;
            b = int_primitive(r);
        }
    }

    /// The same polynomial scaled so that integer coefficients are coprime
    /// and the leading one is positive.
    pub fn primitive_int_form(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        Poly::from_int_vec(&self.to_int_primitive())
    }

    fn to_int_primitive(&self) -> Vec<BigInt> {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        int_primitive(ints)
    }

    fn from_int_vec(v: &[BigInt]) -> Poly {
        Poly::new(v.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }

    /// True when the coefficient list reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    pub fn all_coeffs_positive(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(|c| c > &Rat::zero())
    }

    /// True when coefficients rise to a single peak and then fall.
    pub fn is_unimodal(&self) -> bool {
        let mut rising = true;
        for w in self.coeffs.windows(2) {
            if rising {
                if w[1] < w[0] {
                    rising = false;
                }
            } else if w[1] > w[0] {
                return false;
            }
        }
        true
    }
}

fn int_content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        if !c.is_zero() {
            g = g.gcd(c);
        }
    }
    g
}

fn int_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut content = int_content(&v);
    if v.last().unwrap().is_negative() {
        content = -content;
    }
    if !content.is_one() {
        for c in &mut v {
            *c = &*c / &content;
        }
    }
    v
}

/// Pseudo-remainder of integer coefficient vectors.
fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lead = b.last().unwrap().clone();
    let mut rem: Vec<BigInt> = a.to_vec();
    while rem.len() > db {
        let da = rem.len() - 1;
        let c = rem.last().unwrap().clone();
        if c.is_zero() {
            rem.pop();
            continue;
        }
        // rem = lead * rem - c * x^(da-db) * b
        for x in rem.iter_mut() {
            *x = &*x * &lead;
        }
        let shift = da - db;
        for (j, bc) in b.iter().enumerate() {
            rem[shift + j] = &rem[shift + j] - bc * &c;
        }
        while rem.last().map_or(false, |x| x.is_zero()) {
            rem.pop();
        }
    }
    rem
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::new(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::new(out)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rat::zero();
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !abs.is_one() || i == 0;
            if show_coeff {
                write!(f, "{}", abs)?;
            }
            if i > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_trailing_zeros() {
        let p = Poly::new(vec![rat(1), rat(0), rat(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(Poly::new(vec![rat(0)]).is_zero());
    }

    #[test]
    fn divrem_roundtrip() {
        let a = Poly::from_ints(&[1, 2, 0, -4, 7]);
        let b = Poly::from_ints(&[3, 1, 2]);
        let (q, r) = a.divrem(&b);
        let back = &(&q * &b) + &r;
        assert_eq!(back, a);
        assert!(r.degree().unwrap() < b.degree().unwrap());
    }

    #[test]
    fn gcd_of_common_factor() {
        let f = Poly::from_ints(&[1, -1]); // 1 - x
        let a = &f * &Poly::from_ints(&[1, 2, 3]);
        let b = &f * &Poly::from_ints(&[5, 0, 1]);
        let g = a.gcd(&b);
        // gcd is primitive with positive leading coefficient: x - 1
        assert_eq!(g, Poly::from_ints(&[-1, 1]));
        assert!(a.try_exact_div(&g).is_some());
        assert!(b.try_exact_div(&g).is_some());
    }

    #[test]
    fn multiplicity_counts_powers() {
        let f = Poly::from_ints(&[1, -1]);
        let p = &f.pow(3) * &Poly::from_ints(&[2, 1]);
        assert_eq!(p.multiplicity_of(&f), 3);
    }

    #[test]
    fn palindrome_and_unimodal() {
        assert!(Poly::from_ints(&[1, 2, 4, 2, 1]).is_palindromic());
        assert!(Poly::from_ints(&[1, 2, 4, 2, 1]).is_unimodal());
        assert!(!Poly::from_ints(&[1, 3, 2, 3, 1]).is_unimodal());
        assert!(!Poly::from_ints(&[1, 2, 1, 2]).is_palindromic());
    }
}
