use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;

use super::ring::{Rational, Ring};

/// Exponent vectors mapped to nonzero coefficients.
type TermMap = BTreeMap<Vec<u32>, Rational>;

/// Sparse multivariate polynomial with rational coefficients.
///
/// Variables are explicit names. The representation is kept normalized:
/// no zero coefficients are stored, the variable list is sorted, and
/// variables that no longer occur are compacted away, so structural
/// equality coincides with polynomial equality.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    vars: Vec<String>,
    /// Exponents aligned with `vars`.
    terms: TermMap,
}

impl MPoly {
    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MPoly { vars: Vec::new(), terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rational::from_integer(1.into()));
        MPoly { vars: vec![name.to_string()], terms }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    /// The value of a constant polynomial, `None` otherwise.
    pub fn as_constant(&self) -> Option<Rational> {
        if !self.is_constant() {
            return None;
        }
        Some(
            self.terms
                .get(&Vec::new())
                .cloned()
                .unwrap_or_else(Ring::zero),
        )
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Terms in descending graded-lexicographic order, for rendering.
    pub fn terms_desc(&self) -> Vec<(Vec<(String, u32)>, Rational)> {
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| grlex(b, a));
        keys.into_iter()
            .map(|k| {
                let mono = k
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| (self.vars[i].clone(), e))
                    .collect();
                (mono, self.terms[k].clone())
            })
            .collect()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = <Self as Ring>::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluate with every variable assigned. `None` if one is missing.
    pub fn eval(&self, vals: &BTreeMap<String, Rational>) -> Option<Rational> {
        let points: Vec<&Rational> = self
            .vars
            .iter()
            .map(|v| vals.get(v))
            .collect::<Option<_>>()?;
        let mut acc: Rational = Ring::zero();
        for (expts, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (i, &e) in expts.iter().enumerate() {
                for _ in 0..e {
                    term *= points[i];
                }
            }
            acc += term;
        }
        Some(acc)
    }

    /// Rebuild in normal form: drop zero coefficients and unused variables.
    fn normalized(vars: Vec<String>, terms: BTreeMap<Vec<u32>, Rational>) -> Self {
        let mut used = vec![false; vars.len()];
        let mut any_zero = false;
        for (expts, coeff) in &terms {
            if coeff.is_zero() {
                any_zero = true;
                continue;
            }
            for (i, &e) in expts.iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        if !any_zero && used.iter().all(|&u| u) {
            return MPoly { vars, terms };
        }
        let keep: Vec<usize> = (0..vars.len()).filter(|&i| used[i]).collect();
        let new_vars: Vec<String> = keep.iter().map(|&i| vars[i].clone()).collect();
        let mut new_terms = BTreeMap::new();
        for (expts, coeff) in terms {
            if coeff.is_zero() {
                continue;
            }
            let key: Vec<u32> = keep.iter().map(|&i| expts[i]).collect();
            new_terms.insert(key, coeff);
        }
        MPoly { vars: new_vars, terms: new_terms }
    }

    /// Re-express both polynomials over the union of their variables.
    fn aligned(&self, other: &Self) -> (Vec<String>, TermMap, TermMap) {
        let mut vars: Vec<String> = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars.sort();
        let remap = |p: &MPoly| {
            let positions: Vec<usize> = p
                .vars
                .iter()
                .map(|v| vars.iter().position(|w| w == v).unwrap())
                .collect();
            p.terms
                .iter()
                .map(|(expts, coeff)| {
                    let mut key = vec![0u32; vars.len()];
                    for (i, &e) in expts.iter().enumerate() {
                        key[positions[i]] = e;
                    }
                    (key, coeff.clone())
                })
                .collect::<BTreeMap<_, _>>()
        };
        let a = remap(self);
        let b = remap(other);
        (vars, a, b)
    }

}

/// Graded-lexicographic comparison of exponent vectors of equal length.
fn grlex(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl Ring for MPoly {
    fn zero() -> Self {
        MPoly { vars: Vec::new(), terms: BTreeMap::new() }
    }

    fn one() -> Self {
        Self::from_int(1)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let (vars, mut a, b) = self.aligned(rhs);
        for (key, coeff) in b {
            let slot = a.entry(key).or_insert_with(Ring::zero);
            *slot += coeff;
        }
        Self::normalized(vars, a)
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        let (vars, a, b) = self.aligned(rhs);
        let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let key: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let slot = terms.entry(key).or_insert_with(Ring::zero);
                *slot += ca * cb;
            }
        }
        Self::normalized(vars, terms)
    }

    fn neg(&self) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    /// Exact multivariate division. Because coefficients form a field,
    /// repeatedly cancelling graded-lex leading terms either terminates
    /// with zero remainder or proves the quotient does not exist.
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Ring::zero());
        }
        let (vars, mut rem, g) = self.aligned(rhs);
        let (g_expts, g_coeff) = g
            .iter()
            .max_by(|(a, _), (b, _)| grlex(a, b))
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        let mut quot: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        while let Some((r_expts, r_coeff)) = rem
            .iter()
            .max_by(|(a, _), (b, _)| grlex(a, b))
            .map(|(e, c)| (e.clone(), c.clone()))
        {
            if r_expts.iter().zip(&g_expts).any(|(r, g)| r < g) {
                return None;
            }
            let key: Vec<u32> = r_expts.iter().zip(&g_expts).map(|(r, g)| r - g).collect();
            let coeff = r_coeff / &g_coeff;
            for (eg, cg) in &g {
                let target: Vec<u32> = key.iter().zip(eg).map(|(x, y)| x + y).collect();
                let slot = rem.entry(target.clone()).or_insert_with(Ring::zero);
                *slot -= &coeff * cg;
                if slot.is_zero() {
                    rem.remove(&target);
                }
            }
            quot.insert(key, coeff);
        }
        Some(Self::normalized(vars, quot))
    }

    fn uses_var(&self, name: &str) -> bool {
        self.vars.iter().any(|v| v == name)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (mono, coeff)) in self.terms_desc().into_iter().enumerate() {
            let neg = coeff.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.abs();
            let mut pieces: Vec<String> = Vec::new();
            if !mag.is_one() || mono.is_empty() {
                pieces.push(mag.to_string());
            }
            for (var, e) in mono {
                if e == 1 {
                    pieces.push(var);
                } else {
                    pieces.push(format!("{var}^{e}"));
                }
            }
            write!(f, "{}", pieces.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}
