//! Dense univariate polynomials over a generic field.
//!
//! Used for polynomials in an outer variable whose coefficients are
//! themselves rational functions: polynomials in `t` over Q(s, x) for the
//! partial-fraction machinery, and polynomials in `s` over Q(x) inside the
//! bivariate gcd.

use super::Field;

#[derive(Clone, PartialEq)]
pub struct UPoly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> UPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        UPoly::new(vec![c])
    }

    /// `c0 + c1·v` as a convenience for the ubiquitous `(1 - alpha v)`.
    pub fn linear(c0: F, c1: F) -> Self {
        UPoly::new(vec![c0, c1])
    }

    /// `1 - alpha·v`.
    pub fn one_minus_alpha_v(alpha: &F) -> Self {
        UPoly::linear(F::one(), alpha.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        UPoly::new(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn divrem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let dd = div.degree().unwrap();
        if self.degree().map_or(true, |d| d < dd) {
            return (UPoly::zero(), self.clone());
        }
        let lead = div.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let qd = rem.len() - 1 - dd;
        let mut quot = vec![F::zero(); qd + 1];
        for i in (0..=qd).rev() {
            let c = rem[i + dd].div(&lead);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in div.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub(&dc.mul(&c));
            }
            quot[i] = c;
        }
        (UPoly::new(quot), UPoly::new(rem))
    }

    pub fn try_exact_div(&self, div: &Self) -> Option<Self> {
        let (q, r) = self.divrem(div);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Monic gcd over the coefficient field.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if let Some(lead) = a.leading() {
            if !lead.is_one() {
                let inv = lead.clone();
                return UPoly::new(a.coeffs.iter().map(|c| c.div(&inv)).collect());
            }
        }
        a
    }

    pub fn eval(&self, at: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        UPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.mul(&F::from_i64(i as i64 + 1)))
                .collect(),
        )
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> UPoly<G> {
        UPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<F: Field> std::fmt::Debug for UPoly<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "UPoly{:?}", self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Rat};

    #[test]
    fn generic_divrem_and_gcd() {
        let a = UPoly::<Rat>::new(vec![rat(2), rat(3), rat(1)]); // (1+x)(2+x)
        let b = UPoly::<Rat>::new(vec![rat(1), rat(1)]);
        let (q, r) = a.divrem(&b);
        assert!(r.is_zero());
        assert_eq!(q, UPoly::new(vec![rat(2), rat(1)]));
        let g = a.gcd(&b);
        assert_eq!(g, b); // already monic
    }
}
