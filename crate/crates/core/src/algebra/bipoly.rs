//! Bivariate polynomials in `(s, x)` stored densely as a polynomial in `s`
//! whose coefficients are polynomials in `x`.

use super::{Poly, Rat, RationalFunction, UPoly};
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiPoly {
    /// Coefficient of `s^i` is `coeffs[i]`, a polynomial in `x`.
    coeffs: Vec<Poly>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<Poly>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        BiPoly::from_poly(Poly::one())
    }

    /// Embeds an `x`-polynomial as the `s^0` coefficient.
    pub fn from_poly(p: Poly) -> Self {
        BiPoly::new(vec![p])
    }

    pub fn constant(c: Rat) -> Self {
        BiPoly::from_poly(Poly::constant(c))
    }

    /// `s` itself.
    pub fn s() -> Self {
        BiPoly::new(vec![Poly::zero(), Poly::one()])
    }

    /// `x` itself.
    pub fn x() -> Self {
        BiPoly::from_poly(Poly::x())
    }

    /// The monomial `s^a x^b`.
    pub fn monomial(a: usize, b: usize) -> Self {
        let mut coeffs = vec![Poly::zero(); a + 1];
        coeffs[a] = Poly::monomial(Rat::one(), b);
        BiPoly::new(coeffs)
    }

    /// `1 - s x^k` (for `k = 0` this is `1 - s`).
    pub fn one_minus_s_xk(k: usize) -> Self {
        BiPoly::new(vec![Poly::one(), Poly::monomial(-Rat::one(), k)])
    }

    /// `s - x^k`.
    pub fn s_minus_xk(k: usize) -> Self {
        BiPoly::new(vec![Poly::monomial(-Rat::one(), k), Poly::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn s_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.degree()).max()
    }

    pub fn s_coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn s_coeff(&self, i: usize) -> Poly {
        self.coeffs.get(i).cloned().unwrap_or_else(Poly::zero)
    }

    /// Coefficient of `s^a x^b`.
    pub fn coeff(&self, a: usize, b: usize) -> Rat {
        self.coeffs
            .get(a)
            .map(|p| p.coeff(b))
            .unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::new((0..n).map(|i| &self.s_coeff(i) + &rhs.s_coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::new((0..n).map(|i| &self.s_coeff(i) - &rhs.s_coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![Poly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
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
        BiPoly::new(out)
    }

    pub fn scale_poly(&self, p: &Poly) -> Self {
        if p.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        self.scale_poly(&Poly::constant(c.clone()))
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = BiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Formal partial derivative in `s`.
    pub fn derivative_s(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return BiPoly::zero();
        }
        BiPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&Rat::from_integer((i as i64 + 1).into())))
                .collect(),
        )
    }

    /// Substitutes `s := p(x)` (Horner).
    pub fn subst_s_poly(&self, p: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * p) + c;
        }
        acc
    }

    pub fn subst_s_one(&self) -> Poly {
        let mut acc = Poly::zero();
        for c in &self.coeffs {
            acc = &acc + c;
        }
        acc
    }

    pub fn subst_s_zero(&self) -> Poly {
        self.s_coeff(0)
    }

    /// Substitutes `s := x^k` cheaply (coefficient shifts).
    pub fn subst_s_xpow(&self, k: usize) -> Poly {
        let mut acc = Poly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc = &acc + &c.shift_up(i * k);
        }
        acc
    }

    /// Substitutes `s := s * x`, staying bivariate.
    pub fn subst_s_times_x(&self) -> Self {
        BiPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.shift_up(i))
                .collect(),
        )
    }

    /// Content: gcd over `Q[x]` of all `s`-coefficients.
    pub fn content(&self) -> Poly {
        let mut g = Poly::zero();
        for c in &self.coeffs {
            if !c.is_zero() {
                g = g.gcd(c);
                if g.degree() == Some(0) {
                    break;
                }
            }
        }
        g
    }

    /// Divides every `s`-coefficient by an exact `x`-polynomial divisor.
    pub fn div_content(&self, g: &Poly) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if c.is_zero() {
                out.push(Poly::zero());
            } else {
                out.push(c.try_exact_div(g)?);
            }
        }
        Some(BiPoly::new(out))
    }

    /// Exact division by `1 - s x^k`, if it divides.
    pub fn try_div_one_minus_s_xk(&self, k: usize) -> Option<Self> {
        if self.is_zero() {
            return Some(BiPoly::zero());
        }
        let xk = Poly::monomial(Rat::one(), k);
        let d = self.coeffs.len();
        // p_i = q_i - x^k q_{i-1}  =>  q_i = p_i + x^k q_{i-1}
        let mut q: Vec<Poly> = Vec::with_capacity(d);
        for i in 0..d {
            let prev = if i == 0 {
                Poly::zero()
            } else {
                &q[i - 1] * &xk
            };
            q.push(&self.coeffs[i] + &prev);
        }
        if q.last().map_or(true, |c| c.is_zero()) {
            q.pop();
            Some(BiPoly::new(q))
        } else {
            None
        }
    }

    /// Exact division by `s - x^k`, if it divides.
    pub fn try_div_s_minus_xk(&self, k: usize) -> Option<Self> {
        if self.is_zero() {
            return Some(BiPoly::zero());
        }
        let d = self.coeffs.len();
        if d < 2 {
            return None;
        }
        let xk = Poly::monomial(Rat::one(), k);
        // p_i = q_{i-1} - x^k q_i  =>  q_{i-1} = p_i + x^k q_i
        let mut q = vec![Poly::zero(); d - 1];
        q[d - 2] = self.coeffs[d - 1].clone();
        for i in (1..d - 1).rev() {
            q[i - 1] = &self.coeffs[i] + &(&q[i] * &xk);
        }
        let check = &self.coeffs[0] + &(&q[0] * &xk);
        if check.is_zero() {
            Some(BiPoly::new(q))
        } else {
            None
        }
    }

    /// General exact division via the field of rational functions in `x`.
    pub fn try_exact_div(&self, div: &BiPoly) -> Option<Self> {
        if self.is_zero() {
            return Some(BiPoly::zero());
        }
        if div.is_zero() {
            return None;
        }
        let a = self.to_s_upoly();
        let b = div.to_s_upoly();
        let q = a.try_exact_div(&b)?;
        BiPoly::from_s_upoly(&q)
    }

    /// View as a univariate polynomial in `s` over Q(x).
    pub fn to_s_upoly(&self) -> UPoly<RationalFunction> {
        UPoly::new(
            self.coeffs
                .iter()
                .map(|c| RationalFunction::from_poly(c.clone()))
                .collect(),
        )
    }

    /// Back-conversion; `None` if any coefficient is non-polynomial.
    pub fn from_s_upoly(p: &UPoly<RationalFunction>) -> Option<Self> {
        let mut out = Vec::with_capacity(p.coeffs().len());
        for c in p.coeffs() {
            out.push(c.as_poly()?.clone());
        }
        Some(BiPoly::new(out))
    }

    /// Primitive-part gcd in `s` over `Q[x]`, combined with the content
    /// gcd, i.e. the full bivariate gcd up to a rational unit.
    pub fn gcd(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let ca = self.content();
        let cb = other.content();
        let content_gcd = ca.gcd(&cb);
        let pa = self.div_content(&ca).unwrap();
        let pb = other.div_content(&cb).unwrap();
        let pp_gcd = primitive_prs_gcd(&pa, &pb);
        pp_gcd.scale_poly(&content_gcd)
    }

    /// Specializes `x := x0`, returning the univariate polynomial in `s`.
    pub fn specialize_x(&self, x0: &Rat) -> UPoly<Rat> {
        UPoly::new(self.coeffs.iter().map(|c| c.eval(x0)).collect())
    }
}

/// Gcd of primitive (content-free) bivariate polynomials by a primitive
/// pseudo-remainder sequence in `s`.
fn primitive_prs_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let (mut a, mut b) = if a.s_degree() >= b.s_degree() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    loop {
        if b.is_zero() {
            let c = a.content();
            return a.div_content(&c).unwrap();
        }
        if b.s_degree() == Some(0) {
            // A nonzero x-polynomial: primitive inputs share no content,
            // so the primitive-part gcd is trivial.
            return BiPoly::one();
        }
        let r = pseudo_rem_s(&a, &b);
        a = b;
        b = match r {
            None => BiPoly::zero(),
            Some(r) => {
                let c = r.content();
                r.div_content(&c).unwrap()
            }
        };
    }
}

/// Pseudo-remainder of `a` by `b` in the variable `s`; `None` for zero.
fn pseudo_rem_s(a: &BiPoly, b: &BiPoly) -> Option<BiPoly> {
    let db = b.s_degree().unwrap();
    let lead = b.s_coeffs().last().unwrap().clone();
    let mut rem = a.clone();
    while let Some(da) = rem.s_degree() {
        if da < db {
            break;
        }
        let c = rem.s_coeffs().last().unwrap().clone();
        // rem = lead * rem - c * s^(da-db) * b
        let shifted = shift_s(b, da - db).scale_poly(&c);
        rem = rem.scale_poly(&lead).sub(&shifted);
    }
    if rem.is_zero() {
        None
    } else {
        Some(rem)
    }
}

fn shift_s(p: &BiPoly, k: usize) -> BiPoly {
    if k == 0 || p.is_zero() {
        return p.clone();
    }
    let mut coeffs = vec![Poly::zero(); k];
    coeffs.extend(p.s_coeffs().iter().cloned());
    BiPoly::new(coeffs)
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "({})", c)?;
            } else if i == 1 {
                write!(f, "({})*s", c)?;
            } else {
                write!(f, "({})*s^{}", c, i)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structured_division() {
        let f = BiPoly::one_minus_s_xk(2);
        let g = BiPoly::s_minus_xk(1);
        let p = f.mul(&g).mul(&BiPoly::monomial(1, 3));
        let q = p.try_div_one_minus_s_xk(2).unwrap();
        assert_eq!(q, g.mul(&BiPoly::monomial(1, 3)));
        let r = q.try_div_s_minus_xk(1).unwrap();
        assert_eq!(r, BiPoly::monomial(1, 3));
        assert!(p.try_div_one_minus_s_xk(5).is_none());
    }

    #[test]
    fn bivariate_gcd_finds_common_factor() {
        let common = BiPoly::one_minus_s_xk(1).mul(&BiPoly::from_poly(Poly::from_ints(&[1, 1])));
        let a = common.mul(&BiPoly::s());
        let b = common.mul(&BiPoly::one_minus_s_xk(3));
        let g = a.gcd(&b);
        // Same factor up to a rational unit.
        assert!(g.try_exact_div(&common).map_or(false, |q| q.s_degree() == Some(0)));
        assert!(common.try_exact_div(&g).is_some());
    }

    #[test]
    fn substitutions() {
        // p = s x / (nothing) -> check plain substitutions on s*x + s^2
        let p = BiPoly::new(vec![Poly::zero(), Poly::x()]).add(&BiPoly::monomial(2, 0));
        assert_eq!(p.subst_s_one(), Poly::from_ints(&[1, 1]));
        assert_eq!(p.subst_s_xpow(1), &Poly::from_ints(&[0, 0, 1]) + &Poly::from_ints(&[0, 0, 1]));
        assert_eq!(p.subst_s_zero(), Poly::zero());
        let q = p.subst_s_times_x();
        assert_eq!(q.coeff(1, 2), Rat::one());
        assert_eq!(q.coeff(2, 2), Rat::one());
    }

    #[test]
    fn derivative_in_s() {
        let p = BiPoly::monomial(2, 0); // s^2
        assert_eq!(p.derivative_s(), BiPoly::new(vec![Poly::zero(), Poly::from_ints(&[2])]));
        assert_eq!(BiPoly::x().derivative_s(), BiPoly::zero());
    }
}
