//! Univariate polynomials over exact rationals, just enough for symbolic
//! determinants of evaluated sandwich matrices and their rational roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::Rational;

/// A polynomial with rational coefficients, little-endian, normalized so the
/// leading coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Poly { coeffs: vec![c] }.normalized()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    /// The monomial `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Poly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Poly { coeffs }.normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Poly { coeffs: out }.normalized()
    }

    pub fn neg(&self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly { coeffs: out }.normalized()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// Determinant of a square matrix of polynomials by cofactor expansion along
/// the first row. Fine for the small sandwich matrices this library handles.
pub fn det_poly(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "square matrix required");
    match n {
        0 => Poly::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut det = Poly::zero();
            for (j, entry) in m[0].iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = entry.mul(&det_poly(&minor));
                det = if j % 2 == 0 { det.add(&term) } else { det.sub(&term) };
            }
            det
        }
    }
}

const DIVISOR_SEARCH_BOUND: u64 = 1_000_000_000_000;

/// The nonzero rational roots of a polynomial, sorted ascending. Returns
/// `None` when the coefficient magnitudes defeat the bounded divisor search
/// (never the case for the built-in sandwich data).
pub fn nonzero_rational_roots(p: &Poly) -> Option<Vec<Rational>> {
    if p.is_zero() {
        return None;
    }
    // Strip powers of x: zero roots are not wanted.
    let mut coeffs = p.coeffs().to_vec();
    let first_nonzero = coeffs.iter().position(|c| !c.is_zero()).expect("nonzero poly");
    coeffs.drain(..first_nonzero);
    if coeffs.len() == 1 {
        return Some(Vec::new());
    }
    // Clear denominators to get an integer polynomial.
    let mut lcm = BigInt::one();
    for c in &coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let a0 = ints.first().expect("nonempty").abs();
    let an = ints.last().expect("nonempty").abs();
    let p_divs = bounded_divisors(&a0)?;
    let q_divs = bounded_divisors(&an)?;
    let mut roots = Vec::new();
    for num in &p_divs {
        for den in &q_divs {
            for sign in [1i64, -1] {
                let cand = Rational::new(num * BigInt::from(sign), den.clone());
                if p.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

fn bounded_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n: u64 = n.abs().try_into().ok().filter(|&v| v <= DIVISOR_SEARCH_BOUND)?;
    if n == 0 {
        return None;
    }
    let mut divs = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            divs.push(BigInt::from(d));
            if d != n / d {
                divs.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(divs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn arithmetic_and_eval() {
        // (x - 1)^2 = x^2 - 2x + 1
        let x = Poly::monomial(1);
        let p = x.sub(&Poly::one());
        let sq = p.mul(&p);
        assert_eq!(sq.coeffs(), &[rat(1), rat(-2), rat(1)]);
        assert_eq!(sq.eval(&rat(3)), rat(4));
        assert_eq!(sq.degree(), Some(2));
    }

    #[test]
    fn det_poly_matches_scalar_det() {
        // Entries 1 and x arranged so the determinant is -(x-1)^2.
        let one = Poly::one();
        let x = Poly::monomial(1);
        let m = vec![
            vec![one.clone(), one.clone(), one.clone()],
            vec![one.clone(), one.clone(), x.clone()],
            vec![one.clone(), x.clone(), x.clone()],
        ];
        let det = det_poly(&m);
        let expected = Poly::from_coeffs(vec![rat(-1), rat(2), rat(-1)]);
        assert_eq!(det, expected);
    }

    #[test]
    fn roots_of_small_polys() {
        // -x^2 - x has nonzero root -1.
        let p = Poly::from_coeffs(vec![rat(0), rat(-1), rat(-1)]);
        assert_eq!(nonzero_rational_roots(&p), Some(vec![rat(-1)]));
        // x^2 - 1/4 has roots +-1/2.
        let q = Poly::from_coeffs(vec![Rational::new(BigInt::from(-1), BigInt::from(4)), rat(0), rat(1)]);
        let roots = nonzero_rational_roots(&q).unwrap();
        assert_eq!(
            roots,
            vec![
                Rational::new(BigInt::from(-1), BigInt::from(2)),
                Rational::new(BigInt::from(1), BigInt::from(2))
            ]
        );
        // No rational roots.
        let r = Poly::from_coeffs(vec![rat(1), rat(0), rat(1)]);
        assert_eq!(nonzero_rational_roots(&r), Some(vec![]));
    }
}
