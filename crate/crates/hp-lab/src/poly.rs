//! Dense univariate polynomials over either scalar regime.
//!
//! Coefficients are stored by ascending power and kept trimmed: the leading
//! coefficient is nonzero unless the polynomial is zero (empty vector).
//! Degrees stay small at desk scale, so all products are schoolbook.

use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::scalar::{Coeff, Cplx, Exact};

#[derive(Clone, PartialEq, Debug)]
pub struct Poly<S: Coeff> {
    coeffs: Vec<S>,
}

impl<S: Coeff> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Poly::new(vec![c])
    }

    /// Monomial c * z^k.
    pub fn monomial(c: S, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![c.zero_like(); k];
        v.push(c);
        Poly { coeffs: v }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> Option<&S> {
        self.coeffs.get(k)
    }

    pub fn lead(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            match (self.coeffs.get(k), o.coeffs.get(k)) {
                (Some(a), Some(b)) => out.push(a.add(b)),
                (Some(a), None) => out.push(a.clone()),
                (None, Some(b)) => out.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        Poly::new(out)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, s: &S) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.mul(s)).collect())
    }

    /// Formal derivative.
    pub fn derive(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.mul(&c.from_i64_like(k as i64)));
        }
        Poly::new(out)
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn divmod(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        if self.is_zero() || self.coeffs.len() < d.coeffs.len() {
            return Ok((Poly::zero(), self.clone()));
        }
        let dl = d.lead().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let dn = d.coeffs.len();
        let qn = rem.len() - dn + 1;
        let zero = dl.zero_like();
        let mut q = vec![zero; qn];
        for k in (0..qn).rev() {
            let t = rem[k + dn - 1].div(&dl);
            if !t.is_zero() {
                for j in 0..dn {
                    rem[k + j] = rem[k + j].sub(&t.mul(&d.coeffs[j]));
                }
            }
            q[k] = t;
        }
        rem.truncate(dn - 1);
        Ok((Poly::new(q), Poly::new(rem)))
    }

    /// Horner evaluation at a point of the same scalar type.
    pub fn eval(&self, x: &S) -> S {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Scale so the leading coefficient is one. No-op on zero.
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => {
                if l == &l.one_like() {
                    self.clone()
                } else {
                    let inv = l.one_like().div(l);
                    self.scale(&inv)
                }
            }
        }
    }

    pub fn map<T: Coeff>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl Poly<Exact> {
    /// `prod (z - r_j)` over the given roots.
    pub fn from_roots(roots: &[Exact]) -> Self {
        let mut p = Poly::constant(Exact::one());
        for r in roots {
            p = p.mul(&Poly::new(vec![r.neg(), Exact::one()]));
        }
        p
    }

    pub fn from_i64_coeffs(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| Exact::from_int(c)).collect())
    }

    pub fn to_cplx(&self, prec: u32) -> Poly<Cplx> {
        self.map(|c| c.to_cplx(prec))
    }

    /// Monic gcd over Q(i)[z] by the Euclidean algorithm.
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.monic();
        let mut b = o.monic();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("gcd division");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Divide all coefficients by their Gaussian-integer content after
    /// clearing denominators; the result has coprime integer coefficient
    /// data and the same roots. Sign/phase is not normalized here.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = Integer::from(1);
        for c in &self.coeffs {
            lcm = lcm.lcm(c.re.denom());
            lcm = lcm.lcm(c.im.denom());
        }
        let mut gcd = Integer::new();
        let scaled: Vec<Exact> = self
            .coeffs
            .iter()
            .map(|c| c.scale_int(&lcm))
            .collect();
        for c in &scaled {
            gcd = gcd.gcd(c.re.numer());
            gcd = gcd.gcd(c.im.numer());
        }
        if gcd == 0 {
            return self.clone();
        }
        let g = Exact::from_rational(Rational::from(gcd));
        Poly::new(scaled.iter().map(|c| c.div(&g)).collect())
    }

    /// Exact division; error if the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.divmod(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::StructureMismatch(
                "exact polynomial division left a remainder".into(),
            ))
        }
    }
}

impl Poly<Cplx> {
    /// Horner with a complex argument, returning at operand precision.
    pub fn eval_c(&self, x: &Cplx) -> Cplx {
        self.eval(x)
    }
}

/// Determinant of a small square matrix of polynomials by minor expansion.
pub fn poly_det<S: Coeff>(m: &[Vec<Poly<S>>]) -> Poly<S> {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n));
    if n == 1 {
        return m[0][0].clone();
    }
    if n == 2 {
        return m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0]));
    }
    let mut det = Poly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly<S>>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&poly_det(&minor));
        det = if j % 2 == 0 { det.add(&term) } else { det.sub(&term) };
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Exact {
        Exact::from_ratio(n, d)
    }

    #[test]
    fn derive_and_mul() {
        // derive(z^2 - 1) = 2z
        let p = Poly::from_i64_coeffs(&[-1, 0, 1]);
        assert_eq!(p.derive(), Poly::from_i64_coeffs(&[0, 2]));
        // (z-1)(z+1) = z^2 - 1
        let a = Poly::from_i64_coeffs(&[-1, 1]);
        let b = Poly::from_i64_coeffs(&[1, 1]);
        assert_eq!(a.mul(&b), p);
    }

    #[test]
    fn divmod_long_division() {
        // z^3 = z * (z^2 - 1) + z
        let num = Poly::from_i64_coeffs(&[0, 0, 0, 1]);
        let den = Poly::from_i64_coeffs(&[-1, 0, 1]);
        let (quo, rem) = num.divmod(&den).unwrap();
        assert_eq!(quo, Poly::from_i64_coeffs(&[0, 1]));
        assert_eq!(rem, Poly::from_i64_coeffs(&[0, 1]));
        assert!(num.divmod(&Poly::zero()).is_err());
    }

    #[test]
    fn zero_polynomial_degree() {
        assert_eq!(Poly::<Exact>::zero().degree(), None);
        assert_eq!(Poly::new(vec![Exact::zero()]).degree(), None);
        assert_eq!(Poly::from_i64_coeffs(&[3]).degree(), Some(0));
    }

    #[test]
    fn gcd_monic() {
        // gcd((z-1)(z+2), (z-1)(z-3)) = z - 1
        let a = Poly::from_roots(&[q(1, 1), q(-2, 1)]);
        let b = Poly::from_roots(&[q(1, 1), q(3, 1)]);
        let g = a.gcd(&b);
        assert_eq!(g, Poly::from_roots(&[q(1, 1)]));
    }

    #[test]
    fn det_3x3() {
        // det of companion-ish matrix with polynomial entries, cross-checked by hand:
        // | 1  z   0 |
        // | 0  1   z |   = 1*(1 - 0) - z*(0 - z^2) = 1 + z^3
        // | z  0   1 |
        let z = Poly::from_i64_coeffs(&[0, 1]);
        let one = Poly::from_i64_coeffs(&[1]);
        let zero = Poly::<Exact>::zero();
        let m = vec![
            vec![one.clone(), z.clone(), zero.clone()],
            vec![zero.clone(), one.clone(), z.clone()],
            vec![z.clone(), zero.clone(), one.clone()],
        ];
        assert_eq!(poly_det(&m), Poly::from_i64_coeffs(&[1, 0, 0, 1]));
    }

    #[test]
    fn primitive_part_clears_content() {
        let p = Poly::new(vec![q(2, 3), q(4, 3), q(-2, 1)]);
        let pp = p.primitive_part();
        assert_eq!(pp, Poly::from_i64_coeffs(&[1, 2, -3]));
    }
}
