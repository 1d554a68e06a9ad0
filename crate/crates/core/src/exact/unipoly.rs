use super::ring::{Rational, Ring};
use super::ExactError;

/// Dense univariate polynomial over a coefficient ring, stored by
/// ascending degree with the trailing zeros trimmed, so the zero
/// polynomial owns no coefficients and equality is structural.
///
/// The variable is positional, not named. Names are attached at the text
/// boundary; nesting `UniPoly<UniPoly<R>>` introduces a second variable
/// without any capture bookkeeping.
#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn variable() -> Self {
        UniPoly { coeffs: vec![R::zero(), R::one()] }
    }

    pub fn monomial(c: R, k: usize) -> Self {
        if c.is_zero() {
            return Ring::zero();
        }
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> R {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Ring::one();
        for _ in 0..k {
            acc = Ring::mul(&acc, self);
        }
        acc
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Substitute `x -> r*x` for a fresh variable `r`: the result lives in
    /// `(R[r])[x]`, with `x`-coefficient `a_i * r^i` in degree `i`.
    pub fn scale_argument(&self) -> UniPoly<UniPoly<R>> {
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| UniPoly::monomial(a.clone(), i))
                .collect(),
        )
    }

    /// View the coefficients as constants of `(R[r])[x]`.
    pub fn lift(&self) -> UniPoly<UniPoly<R>> {
        self.map_coeffs(|a| UniPoly::constant(a.clone()))
    }

    /// Division that must be exact; errors are the library-level wrappers
    /// around `Ring::exact_div` on polynomials.
    pub fn exact_divide(&self, rhs: &Self) -> Result<Self, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::ZeroPolynomial("division by the zero polynomial"));
        }
        Ring::exact_div(self, rhs).ok_or(ExactError::InexactDivision)
    }
}

impl<R: Ring> Ring for UniPoly<R> {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        UniPoly { coeffs: vec![R::one()] }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i).add(&rhs.coeff(i)));
        }
        Self::from_coeffs(coeffs)
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Ring::zero();
        }
        let mut coeffs = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(coeffs)
    }

    fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(R::neg).collect() }
    }

    /// Long division, requiring every leading-coefficient division to be
    /// exact and the remainder to vanish.
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Ring::zero());
        }
        let dr = rhs.degree().unwrap();
        let lead = rhs.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![R::zero(); self.coeffs.len().saturating_sub(dr)];
        while let Some(d) = rem.degree() {
            if d < dr {
                return None;
            }
            let c = rem.leading().unwrap().exact_div(lead)?;
            let k = d - dr;
            let step = UniPoly::monomial(c.clone(), k).mul(rhs);
            rem = rem.sub(&step);
            if rem.degree().is_some_and(|nd| nd >= d) {
                return None;
            }
            quot[k] = c;
        }
        Some(Self::from_coeffs(quot))
    }

    fn uses_var(&self, name: &str) -> bool {
        self.coeffs.iter().any(|c| c.uses_var(name))
    }
}

impl UniPoly<Rational> {
    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    /// Divide out the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Ring::zero(),
            Some(lead) if Ring::is_one(lead) => self.clone(),
            Some(lead) => {
                let one: Rational = Ring::one();
                self.scale(&(&one / lead))
            }
        }
    }

    /// Quotient and remainder over the rational field. Panics on a zero
    /// divisor.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        let dr = rhs.degree().expect("division by the zero polynomial");
        let lead = rhs.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![<Rational as Ring>::zero(); self.coeffs.len().saturating_sub(dr)];
        while let Some(d) = rem.degree() {
            if d < dr {
                break;
            }
            let c = rem.leading().unwrap() / &lead;
            let k = d - dr;
            let step = UniPoly::monomial(c.clone(), k).mul(rhs);
            rem = rem.sub(&step);
            quot[k] = c;
        }
        (Self::from_coeffs(quot), rem)
    }

    /// Monic greatest common divisor by the Euclidean algorithm; the gcd
    /// with zero is the other argument made monic.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun square-free decomposition: returns pairs (factor, multiplicity)
    /// with every factor monic and square-free, pairwise coprime, and
    /// `self = lc * prod factor^multiplicity`.
    pub fn square_free_decomposition(&self) -> Vec<(Self, usize)> {
        let p = self.monic();
        if p.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let dp = p.derivative();
        let a = p.gcd(&dp);
        if a.degree() == Some(0) {
            return vec![(p, 1)];
        }
        let mut b = p.exact_divide(&a).unwrap();
        let mut c = dp.exact_divide(&a).unwrap();
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        let mut i = 1usize;
        while b.degree().unwrap_or(0) > 0 {
            let f = b.gcd(&d);
            if f.degree().unwrap_or(0) > 0 {
                out.push((f.clone(), i));
            }
            b = b.exact_divide(&f).unwrap();
            c = d.exact_divide(&f).unwrap();
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }
}
