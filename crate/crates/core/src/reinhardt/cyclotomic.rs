//! Integer polynomial arithmetic for deciding vanishing sums of roots of
//! unity exactly.
//!
//! A sum of 2n-th roots of unity with integer multiplicities vanishes
//! exactly when the corresponding polynomial (exponents taken mod 2n) is
//! divisible by the 2n-th cyclotomic polynomial: the cyclotomic polynomial
//! is the minimal polynomial of a primitive 2n-th root over ℚ, and since it
//! is monic, divisibility over ℚ and over ℤ coincide. Everything here stays
//! in `i64`; the coefficients involved are tiny at the orders we use.

/// Dense integer polynomial, coefficients from constant term upward. The
/// zero polynomial is the empty vector; otherwise the top coefficient is
/// nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub(crate) fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub(crate) fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// `x^k - 1`.
    fn x_pow_minus_one(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[0] = -1;
        coeffs[k] = 1;
        IntPoly { coeffs }
    }

    /// Long division by a monic divisor; exact over the integers.
    pub(crate) fn div_rem(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        assert_eq!(divisor.coeffs[d], 1, "divisor must be monic");
        if self.coeffs.len() <= d {
            return (IntPoly::new(vec![]), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0i64; self.coeffs.len() - d];
        for i in (d..self.coeffs.len()).rev() {
            let c = rem[i];
            if c != 0 {
                quot[i - d] = c;
                for (j, &dc) in divisor.coeffs.iter().enumerate() {
                    rem[i - d + j] -= c * dc;
                }
            }
        }
        rem.truncate(d);
        (IntPoly::new(quot), IntPoly::new(rem))
    }
}

/// The k-th cyclotomic polynomial, by dividing `x^k - 1` by the cyclotomic
/// polynomials of all proper divisors of `k`.
pub(crate) fn cyclotomic(k: usize) -> IntPoly {
    assert!(k >= 1);
    let mut poly = IntPoly::x_pow_minus_one(k);
    for d in 1..k {
        if k % d == 0 {
            let (quot, rem) = poly.div_rem(&cyclotomic(d));
            debug_assert!(rem.is_zero());
            poly = quot;
        }
    }
    poly
}

/// Residues of `x^e mod modulus` for `e = 0 .. count-1`, each as a
/// fixed-length coefficient vector of the modulus degree. Lets callers
/// reduce sums of monomials by plain vector addition.
pub(crate) fn monomial_residues(modulus: &IntPoly, count: usize) -> Vec<Vec<i64>> {
    let deg = modulus.degree().expect("modulus must be nonzero");
    let mut out = Vec::with_capacity(count);
    let mut cur = vec![0i64; deg];
    if deg > 0 {
        cur[0] = 1;
    }
    for _ in 0..count {
        out.push(cur.clone());
        // Multiply by x: shift up, then fold the overflowing top term back
        // using x^deg = -(lower terms of the monic modulus).
        let top = cur[deg - 1];
        for i in (1..deg).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for (i, c) in cur.iter_mut().enumerate() {
                *c -= top * modulus.coeffs()[i];
            }
        }
    }
    out
}
