//! Truncated Laurent expansions at infinity.
//!
//! A value represents `P(z) + sum_{m=0}^{M} t_m z^{-m} + O(z^{-(M+1)})` where
//! `P` collects the strictly positive powers. The truncation order `M` is part
//! of the value and every operation recomputes the order actually justified by
//! its inputs; claiming coefficients beyond the order is impossible by
//! construction.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{Coeff, Cplx, Exact};
use rug::Float;

#[derive(Clone, PartialEq, Debug)]
pub struct Laurent<S: Coeff> {
    /// Coefficients of z^1 .. z^D (index k = power k+1).
    upper: Vec<S>,
    /// Coefficients of z^0, z^-1, .., z^-M; length M+1.
    tail: Vec<S>,
}

impl<S: Coeff> Laurent<S> {
    /// Pure tail from coefficients of z^0 .. z^-M.
    pub fn from_tail(tail: Vec<S>) -> Self {
        assert!(!tail.is_empty(), "tail needs at least the z^0 coefficient");
        Laurent { upper: Vec::new(), tail }
    }

    /// A polynomial viewed as a Laurent value with the given (exactly known)
    /// truncation order.
    pub fn from_poly(p: &Poly<S>, order: usize, zero: &S) -> Self {
        let mut tail = vec![zero.zero_like(); order + 1];
        if let Some(c0) = p.coeff(0) {
            tail[0] = c0.clone();
        }
        let upper = match p.degree() {
            Some(d) if d >= 1 => p.coeffs()[1..=d].to_vec(),
            _ => Vec::new(),
        };
        Laurent { upper, tail }
    }

    pub fn order(&self) -> usize {
        self.tail.len() - 1
    }

    pub fn deg_upper(&self) -> usize {
        self.upper.len()
    }

    pub fn tail_coeffs(&self) -> &[S] {
        &self.tail
    }

    /// Coefficient of z^k (any sign); `None` beyond the truncation order.
    pub fn coeff(&self, k: i64) -> Option<&S> {
        if k >= 1 {
            self.upper.get((k - 1) as usize)
        } else {
            self.tail.get((-k) as usize)
        }
    }

    fn zero_scalar(&self) -> S {
        self.tail[0].zero_like()
    }

    pub fn truncated(&self, order: usize) -> Self {
        let mut t = self.clone();
        t.tail.truncate(order + 1);
        t
    }

    pub fn add(&self, o: &Self) -> Self {
        let order = self.order().min(o.order());
        let zero = self.zero_scalar();
        let mut tail = Vec::with_capacity(order + 1);
        for m in 0..=order {
            tail.push(self.tail[m].add(&o.tail[m]));
        }
        let du = self.upper.len().max(o.upper.len());
        let mut upper = Vec::with_capacity(du);
        for k in 0..du {
            let a = self.upper.get(k).unwrap_or(&zero);
            let b = o.upper.get(k).unwrap_or(&zero);
            upper.push(a.add(b));
        }
        Laurent { upper, tail }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&self.zero_scalar().from_i64_like(-1)))
    }

    pub fn scale(&self, s: &S) -> Self {
        Laurent {
            upper: self.upper.iter().map(|c| c.mul(s)).collect(),
            tail: self.tail.iter().map(|c| c.mul(s)).collect(),
        }
    }

    /// Product. The result order is `min(Ma - deg_b, Mb - deg_a)`: terms the
    /// truncation error of one factor can pollute are not claimed.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        let ma = self.order() as i64;
        let mb = o.order() as i64;
        let da = self.upper.len() as i64;
        let db = o.upper.len() as i64;
        let order = (ma - db).min(mb - da);
        if order < 0 {
            return Err(Error::TruncationTooShort {
                needed: (db - ma).max(da - mb) as usize,
                have: 0,
            });
        }
        let zero = self.zero_scalar();
        let top = da + db;
        // accumulate coefficients for powers top .. -order
        let len = (top + order + 1) as usize;
        let mut acc = vec![zero.clone(); len];
        let idx = |power: i64| (top - power) as usize;
        for i in -ma..=da {
            let a = self.coeff(i).unwrap();
            if a.is_zero() {
                continue;
            }
            for j in -mb..=db {
                let power = i + j;
                if power < -order || power > top {
                    continue;
                }
                let b = o.coeff(j).unwrap();
                if b.is_zero() {
                    continue;
                }
                let k = idx(power);
                acc[k] = acc[k].add(&a.mul(b));
            }
        }
        let upper: Vec<S> = (1..=top).map(|p| acc[idx(p)].clone()).collect();
        let tail: Vec<S> = (0..=order).map(|m| acc[idx(-m)].clone()).collect();
        Ok(Laurent { upper, tail })
    }

    /// Multiply by an exact polynomial; order drops by `deg p`.
    pub fn mul_poly(&self, p: &Poly<S>) -> Result<Self> {
        let rhs = Laurent::from_poly(p, 0, &self.zero_scalar());
        // a poly is exact: emulate with order large enough that min() picks ours
        let dp = p.degree().map_or(0, |d| d) as i64;
        let order = self.order() as i64 - dp;
        if order < 0 {
            return Err(Error::TruncationTooShort {
                needed: dp as usize,
                have: self.order(),
            });
        }
        let mut padded = rhs;
        padded.tail.resize((self.order() as i64 + dp + 1) as usize, self.zero_scalar());
        self.mul(&padded)
    }

    /// Reciprocal of a pure tail with nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        if !self.upper.is_empty() && self.upper.iter().any(|c| !c.is_zero()) {
            return Err(Error::StructureMismatch(
                "reciprocal of a laurent value with positive powers".into(),
            ));
        }
        if self.tail[0].is_zero() {
            return Err(Error::ReciprocalConstantTerm);
        }
        let a0 = &self.tail[0];
        let mut out: Vec<S> = Vec::with_capacity(self.tail.len());
        out.push(a0.one_like().div(a0));
        for m in 1..self.tail.len() {
            let mut s = a0.zero_like();
            for j in 1..=m {
                s = s.add(&self.tail[j].mul(&out[m - j]));
            }
            out.push(s.neg().div(a0));
        }
        Ok(Laurent { upper: Vec::new(), tail: out })
    }

    /// Formal derivative; the order increases by one since the derivative of
    /// an O(z^-(M+1)) error is O(z^-(M+2)).
    pub fn derive(&self) -> Self {
        let zero = self.zero_scalar();
        let mut upper = Vec::new();
        if self.upper.len() > 1 {
            for k in 1..self.upper.len() {
                // d/dz c z^{k+1} = c(k+1) z^k
                upper.push(self.upper[k].mul(&zero.from_i64_like(k as i64 + 1)));
            }
        }
        let mut tail = Vec::with_capacity(self.tail.len() + 1);
        // z^0 coefficient comes from the z^1 term
        tail.push(self.upper.first().cloned().unwrap_or_else(|| zero.clone()));
        tail.push(zero.clone()); // z^-1 never appears in a derivative
        for m in 1..self.tail.len() {
            // t_m z^-m -> -m t_m z^-(m+1)
            tail.push(self.tail[m].mul(&zero.from_i64_like(-(m as i64))));
        }
        Laurent { upper, tail }
    }

    /// First index `m >= from` with a nonzero z^-m coefficient.
    pub fn first_nonzero_tail(&self, from: usize) -> Option<(usize, &S)> {
        (from..self.tail.len()).find_map(|m| {
            if self.tail[m].is_zero() {
                None
            } else {
                Some((m, &self.tail[m]))
            }
        })
    }
}

impl Laurent<Exact> {
    /// Recognize an exactly polynomial value: every strictly negative power
    /// must vanish identically.
    pub fn poly_from_tail(&self) -> Result<Poly<Exact>> {
        for (m, c) in self.tail.iter().enumerate().skip(1) {
            if !c.is_zero() {
                return Err(Error::NonPolynomialTail {
                    index: m,
                    magnitude: c.to_string(),
                });
            }
        }
        let mut coeffs = vec![self.tail[0].clone()];
        coeffs.extend(self.upper.iter().cloned());
        Ok(Poly::new(coeffs))
    }
}

impl Laurent<Cplx> {
    /// Float-regime variant: negative powers must be below `tol` in modulus.
    pub fn poly_from_tail(&self, tol: &Float) -> Result<Poly<Cplx>> {
        for (m, c) in self.tail.iter().enumerate().skip(1) {
            if c.abs() >= *tol {
                return Err(Error::NonPolynomialTail {
                    index: m,
                    magnitude: format!("{}", c),
                });
            }
        }
        let mut coeffs = vec![self.tail[0].clone()];
        coeffs.extend(self.upper.iter().cloned());
        Ok(Poly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::pow10;

    fn tail_i64(cs: &[i64]) -> Laurent<Exact> {
        Laurent::from_tail(cs.iter().map(|&c| Exact::from_int(c)).collect())
    }

    #[test]
    fn mul_truncates_to_min_order() {
        // (1 - 1/z)(1 + 1/z) = 1 - 1/z^2
        let a = tail_i64(&[1, -1, 0, 0]);
        let b = tail_i64(&[1, 1, 0, 0]);
        let p = a.mul(&b).unwrap();
        assert_eq!(p.order(), 3);
        assert_eq!(p.tail_coeffs(), tail_i64(&[1, 0, -1, 0]).tail_coeffs());
    }

    #[test]
    fn reciprocal_geometric() {
        // 1/(1 - 1/z) = 1 + 1/z + 1/z^2 + ...
        let a = tail_i64(&[1, -1, 0, 0, 0]);
        let r = a.reciprocal().unwrap();
        assert_eq!(r.tail_coeffs(), tail_i64(&[1, 1, 1, 1, 1]).tail_coeffs());
        // reciprocal of a series with vanishing constant term fails
        assert!(tail_i64(&[0, 1]).reciprocal().is_err());
    }

    #[test]
    fn derive_tail() {
        // d/dz (1/z) = -1/z^2
        let a = tail_i64(&[0, 1, 0]);
        let d = a.derive();
        assert_eq!(d.coeff(-2), Some(&Exact::from_int(-1)));
        assert_eq!(d.coeff(-1), Some(&Exact::zero()));
        assert_eq!(d.order(), 3);
    }

    #[test]
    fn poly_from_tail_exact() {
        // z + 0/z + 0/z^2 -> z
        let z = Poly::from_i64_coeffs(&[0, 1]);
        let t = Laurent::from_poly(&z, 2, &Exact::zero());
        assert_eq!(t.poly_from_tail().unwrap(), z);
        // 1 + 0.5/z is not a polynomial
        let bad = Laurent::from_tail(vec![Exact::one(), Exact::from_ratio(1, 2)]);
        assert!(matches!(
            bad.poly_from_tail(),
            Err(Error::NonPolynomialTail { index: 1, .. })
        ));
    }

    #[test]
    fn poly_from_tail_float_tolerance() {
        let prec = 256;
        let one = Cplx::one(prec);
        // z^2 - 1 + 1e-40/z passes at tol 1e-30
        let p = Poly::new(vec![
            one.from_i64_like(-1),
            one.zero_like(),
            one.one_like(),
        ]);
        let mut t = Laurent::from_poly(&p, 1, &one.zero_like());
        let small = Cplx::from_real(pow10(-40, prec));
        t.tail[1] = small;
        let tol = pow10(-30, prec);
        let back = t.poly_from_tail(&tol).unwrap();
        assert_eq!(back.degree(), Some(2));
        // but a 1e-20 leftover fails
        t.tail[1] = Cplx::from_real(pow10(-20, prec));
        assert!(t.poly_from_tail(&tol).is_err());
    }

    #[test]
    fn mul_poly_drops_order() {
        let a = tail_i64(&[1, 2, 3, 4]);
        let z = Poly::from_i64_coeffs(&[0, 1]);
        let p = a.mul_poly(&z).unwrap();
        assert_eq!(p.order(), 2);
        assert_eq!(p.coeff(1), Some(&Exact::one()));
        assert_eq!(p.coeff(0), Some(&Exact::from_int(2)));
        assert_eq!(p.coeff(-1), Some(&Exact::from_int(3)));
        assert_eq!(p.coeff(-2), Some(&Exact::from_int(4)));
    }
}
