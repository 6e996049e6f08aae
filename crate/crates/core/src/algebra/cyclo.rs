//! Cyclotomic polynomials and greedy cyclotomic factorization.
//!
//! The normalization used throughout has constant term +1, so the first
//! index is `1 - x` (the standard monic first cyclotomic differs by a
//! unit: `x - 1 = -(1 - x)`; every later index agrees with the monic
//! convention). With this choice `1 - x^n` is exactly the product of the
//! polynomials at the divisors of `n`.

use super::{Poly, Rat};
use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;

static CACHE: Mutex<Vec<Poly>> = Mutex::new(Vec::new());

/// The `k`-th cyclotomic polynomial with constant term +1.
///
/// Computed by exact division of `1 - x^k` by the product over proper
/// divisors, and memoized.
pub fn cyclotomic(k: usize) -> Poly {
    assert!(k >= 1, "cyclotomic index must be positive");
    {
        let cache = CACHE.lock().unwrap();
        if let Some(p) = cache.get(k - 1) {
            if !p.is_zero() {
                return p.clone();
            }
        }
    }
    let result = if k == 1 {
        Poly::from_ints(&[1, -1])
    } else {
        let mut den = Poly::one();
        for d in 1..k {
            if k % d == 0 {
                den = &den * &cyclotomic(d);
            }
        }
        Poly::one_minus_xk(k)
            .try_exact_div(&den)
            .expect("cyclotomic division is exact")
    };
    let mut cache = CACHE.lock().unwrap();
    if cache.len() < k {
        cache.resize(k, Poly::zero());
    }
    cache[k - 1] = result.clone();
    result
}

/// A factorization `input = prod_k psi_k^mult * remainder` where the
/// remainder has no cyclotomic factor up to the scanned bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloFactorization {
    pub factors: BTreeMap<usize, usize>,
    pub remainder: Poly,
    /// Largest index that was trial-divided.
    pub k_max: usize,
}

impl CycloFactorization {
    /// Multiplies the factorization back together; equals the input exactly.
    pub fn recombine(&self) -> Poly {
        let mut p = self.remainder.clone();
        for (&k, &m) in &self.factors {
            p = &p * &cyclotomic(k).pow(m);
        }
        p
    }

    pub fn multiplicity(&self, k: usize) -> usize {
        self.factors.get(&k).copied().unwrap_or(0)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.factors.keys().next_back().copied()
    }

    /// True when nothing but cyclotomic factors (and a constant) remain.
    pub fn is_pure_cyclotomic(&self) -> bool {
        self.remainder.degree() == Some(0)
    }

    /// Renders the factored form, e.g. `(1-x)^5*(1+x)`.
    pub fn factored_string(&self) -> String {
        let mut parts = Vec::new();
        if !self.remainder.is_one() {
            parts.push(format!("({})", self.remainder));
        }
        for (&k, &m) in &self.factors {
            let base = format!("({})", compact(&cyclotomic(k)));
            if m == 1 {
                parts.push(base);
            } else {
                parts.push(format!("{}^{}", base, m));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for CycloFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.factored_string())
    }
}

fn compact(p: &Poly) -> String {
    // Compact polynomial rendering without spaces, for factored output.
    p.to_string().replace(' ', "")
}

/// Greedily strips cyclotomic factors with index up to `k_max`.
pub fn cyclo_factorize(p: &Poly, k_max: usize) -> CycloFactorization {
    assert!(!p.is_zero(), "cannot factorize the zero polynomial");
    assert!(k_max >= 1);
    let mut rem = p.clone();
    let mut factors = BTreeMap::new();
    for k in 1..=k_max {
        if rem.degree() == Some(0) {
            break;
        }
        let psi = cyclotomic(k);
        if psi.degree().unwrap() > rem.degree().unwrap_or(0) {
            // Degrees only grow with k in blocks; keep scanning since
            // psi_k degree is phi(k), which is not monotone.
            continue;
        }
        let mut m = 0;
        while let Some(q) = rem.try_exact_div(&psi) {
            rem = q;
            m += 1;
            if rem.degree() == Some(0) {
                break;
            }
        }
        if m > 0 {
            factors.insert(k, m);
        }
    }
    CycloFactorization {
        factors,
        remainder: rem,
        k_max,
    }
}

/// Default scan bound for a polynomial of the given degree: a cyclotomic
/// factor of a degree-d polynomial has small index at these sizes, and the
/// brute scan is cheap.
pub fn default_k_max(degree: usize) -> usize {
    2 * degree + 2
}

/// Factorizes with the default bound.
pub fn cyclo_factorize_default(p: &Poly) -> CycloFactorization {
    let d = p.degree().unwrap_or(0).max(1);
    cyclo_factorize(p, default_k_max(d))
}

/// Builds `prod_k psi_k^mult` from an index -> multiplicity map.
pub fn cyclo_product(factors: &[(usize, usize)]) -> Poly {
    let mut p = Poly::one();
    for &(k, m) in factors {
        p = &p * &cyclotomic(k).pow(m);
    }
    p
}

/// True when `psi_k` divides `p`.
pub fn has_cyclo_factor(p: &Poly, k: usize) -> bool {
    p.try_exact_div(&cyclotomic(k)).is_some()
}

/// The numerator is coprime to `psi_k` iff this returns true.
pub fn coprime_to_cyclo(p: &Poly, k: usize) -> bool {
    if p.is_zero() {
        return false;
    }
    let g = p.gcd(&cyclotomic(k));
    g.degree() == Some(0)
}

#[allow(unused)]
fn rat_one() -> Rat {
    Rat::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_indices() {
        assert_eq!(cyclotomic(1), Poly::from_ints(&[1, -1]));
        assert_eq!(cyclotomic(2), Poly::from_ints(&[1, 1]));
        assert_eq!(cyclotomic(3), Poly::from_ints(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), Poly::from_ints(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), Poly::from_ints(&[1, -1, 1]));
    }

    #[test]
    fn product_over_divisors_is_one_minus_xk() {
        for k in 1..=64 {
            let mut prod = Poly::one();
            for d in 1..=k {
                if k % d == 0 {
                    prod = &prod * &cyclotomic(d);
                }
            }
            assert_eq!(prod, Poly::one_minus_xk(k), "failed at k = {}", k);
        }
    }

    #[test]
    fn factorize_printed_denominator() {
        // (1-x)^5 (1+x)
        let p = &cyclotomic(1).pow(5) * &cyclotomic(2);
        let f = cyclo_factorize(&p, 12);
        assert_eq!(f.multiplicity(1), 5);
        assert_eq!(f.multiplicity(2), 1);
        assert!(f.remainder.is_one());
        assert_eq!(f.recombine(), p);
    }

    #[test]
    fn factorize_cyclo_free() {
        let p = Poly::from_ints(&[2, 0, 1]);
        let f = cyclo_factorize(&p, 16);
        assert!(f.factors.is_empty());
        assert_eq!(f.remainder, p);
    }

    #[test]
    fn factorize_one_minus_x6() {
        let f = cyclo_factorize(&Poly::one_minus_xk(6), 12);
        let expect: Vec<(usize, usize)> = vec![(1, 1), (2, 1), (3, 1), (6, 1)];
        assert_eq!(f.factors.into_iter().collect::<Vec<_>>(), expect);
        assert!(f.remainder.is_one());
    }

    #[test]
    fn factored_rendering() {
        let p = &cyclotomic(1).pow(2) * &cyclotomic(3);
        let f = cyclo_factorize(&p, 8);
        assert_eq!(f.factored_string(), "(1-x)^2*(1+x+x^2)");
    }
}
