//! Truncated power series over a generic exact field.

use super::{AlgebraError, Field, UPoly};

/// A truncated series: exactly the first `order + 1` coefficients, with a
/// variable tag carried for display and serialization.
#[derive(Clone, PartialEq, Debug)]
pub struct Series<F: Field> {
    pub var: String,
    coeffs: Vec<F>,
}

impl<F: Field> Series<F> {
    /// Builds a series of the given truncation order, zero-padding.
    pub fn new(var: impl Into<String>, mut coeffs: Vec<F>, order: usize) -> Self {
        coeffs.truncate(order + 1);
        while coeffs.len() < order + 1 {
            coeffs.push(F::zero());
        }
        Series {
            var: var.into(),
            coeffs,
        }
    }

    pub fn zero(var: impl Into<String>, order: usize) -> Self {
        Series::new(var, Vec::new(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series::new(self.var.clone(), self.coeffs.clone(), order)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Series::new(
            self.var.clone(),
            (0..=order).map(|i| self.coeffs[i].add(&rhs.coeffs[i])).collect(),
            order,
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Series::new(
            self.var.clone(),
            (0..=order).map(|i| self.coeffs[i].sub(&rhs.coeffs[i])).collect(),
            order,
        )
    }

    pub fn scale(&self, c: &F) -> Self {
        Series {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = vec![F::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if !rhs.coeffs[j].is_zero() {
                    out[i + j] = out[i + j].add(&self.coeffs[i].mul(&rhs.coeffs[j]));
                }
            }
        }
        Series::new(self.var.clone(), out, order)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Series<G> {
        Series {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

/// Taylor coefficients of `num/den` at the origin of the expansion
/// variable, exact, to the requested order. Fails when the denominator has
/// no constant term.
pub fn series_of_ratio<F: Field>(
    var: &str,
    num: &UPoly<F>,
    den: &UPoly<F>,
    order: usize,
) -> Result<Series<F>, AlgebraError> {
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(AlgebraError::NonExpandable);
    }
    let mut out = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = num.coeff(n);
        for j in 1..=n.min(den.degree().unwrap_or(0)) {
            let dj = den.coeff(j);
            if !dj.is_zero() {
                acc = acc.sub(&dj.mul(&out[n - j]));
            }
        }
        out.push(acc.div(&d0));
    }
    Ok(Series::new(var, out, order))
}

/// Square root of a series with constant term 1, to the same order.
pub fn series_sqrt<F: Field>(a: &Series<F>) -> Result<Series<F>, AlgebraError> {
    let a0 = a.coeff(0);
    if !a0.is_one() {
        return Err(AlgebraError::SqrtConstantTerm(format!("{:?}", a0)));
    }
    let order = a.order();
    let two = F::from_i64(2);
    let mut b = Vec::with_capacity(order + 1);
    b.push(F::one());
    for n in 1..=order {
        // a_n = 2 b_n + sum_{j=1}^{n-1} b_j b_{n-j}
        let mut acc = F::zero();
        for j in 1..n {
            acc = acc.add(&b[j].mul(&b[n - j]));
        }
        b.push(a.coeff(n).sub(&acc).div(&two));
    }
    Ok(Series::new(a.var.clone(), b, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Poly, Rat, RationalFunction};

    fn upoly(coeffs: &[i64]) -> UPoly<Rat> {
        UPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn expand_inverse_cube() {
        // 1/(1-x)^3 -> 1, 3, 6, 10
        let den = upoly(&[1, -3, 3, -1]);
        let s = series_of_ratio("x", &UPoly::one(), &den, 3).unwrap();
        assert_eq!(s.coeffs(), &[rat(1), rat(3), rat(6), rat(10)]);
    }

    #[test]
    fn expand_geometric() {
        let s = series_of_ratio("x", &UPoly::one(), &upoly(&[1, -1]), 2).unwrap();
        assert_eq!(s.coeffs(), &[rat(1), rat(1), rat(1)]);
    }

    #[test]
    fn expand_x_over_square() {
        // x/(1-x)^2 -> 0,1,2,3,4
        let s = series_of_ratio("x", &upoly(&[0, 1]), &upoly(&[1, -2, 1]), 4).unwrap();
        assert_eq!(s.coeffs(), &[rat(0), rat(1), rat(2), rat(3), rat(4)]);
    }

    #[test]
    fn expansion_needs_constant_term() {
        let err = series_of_ratio("x", &UPoly::one(), &upoly(&[0, 1]), 3).unwrap_err();
        assert_eq!(err, AlgebraError::NonExpandable);
    }

    #[test]
    fn sqrt_of_one_and_perfect_square() {
        let one = Series::new("q", vec![rat(1)], 4);
        assert_eq!(series_sqrt(&one).unwrap().coeffs()[0], rat(1));
        let sq = Series::new("q", vec![rat(1), rat(2), rat(1)], 4);
        let r = series_sqrt(&sq).unwrap();
        assert_eq!(&r.coeffs()[..2], &[rat(1), rat(1)]);
        assert!(r.coeffs()[2..].iter().all(|c| c == &Rat::from_integer(0.into())));
    }

    #[test]
    fn sqrt_constant_term_must_be_one() {
        let s = Series::new("q", vec![rat(2)], 3);
        assert!(matches!(
            series_sqrt(&s),
            Err(AlgebraError::SqrtConstantTerm(_))
        ));
    }

    #[test]
    fn series_over_rational_function_field() {
        // Expand 1/(1 - s·x) in s over Q(x): coefficients 1, x, x^2, ...
        let x = RationalFunction::var();
        let den = UPoly::new(vec![RationalFunction::one(), -&x]);
        let s = series_of_ratio("s", &UPoly::one(), &den, 3).unwrap();
        let xp = |k: usize| RationalFunction::from_poly(Poly::monomial(rat(1), k));
        assert_eq!(s.coeffs(), &[xp(0), xp(1), xp(2), xp(3)]);
    }
}
