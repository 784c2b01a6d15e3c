//! Sparse multivariate Laurent polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Terms are kept sorted in descending graded-lexicographic order (total
//! degree first, then the table's symbol order), so equal polynomials have
//! identical term sequences and a canonical printed form.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::vars::{same_table, VariableTable};

pub type Exponents = Box<[i32]>;

/// Compare exponent vectors in graded-lexicographic order.
pub fn grlex(a: &[i32], b: &[i32]) -> Ordering {
    let da: i64 = a.iter().map(|&e| e as i64).sum();
    let db: i64 = b.iter().map(|&e| e as i64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

#[derive(Clone, Debug)]
pub struct Polynomial {
    table: Arc<VariableTable>,
    /// Nonzero terms, descending graded-lex.
    terms: Vec<(Exponents, BigInt)>,
}

impl Polynomial {
    pub fn zero(table: &Arc<VariableTable>) -> Self {
        Polynomial {
            table: table.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(table: &Arc<VariableTable>) -> Self {
        Self::integer(table, 1)
    }

    pub fn integer(table: &Arc<VariableTable>, n: i64) -> Self {
        Self::constant(table, BigInt::from(n))
    }

    pub fn constant(table: &Arc<VariableTable>, c: BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(table);
        }
        let exps = vec![0i32; table.len()].into_boxed_slice();
        Polynomial {
            table: table.clone(),
            terms: vec![(exps, c)],
        }
    }

    /// The symbol `name` as a polynomial.
    pub fn symbol(table: &Arc<VariableTable>, name: &str) -> Self {
        Self::symbol_pow(table, name, 1)
    }

    pub fn symbol_pow(table: &Arc<VariableTable>, name: &str, e: i32) -> Self {
        let idx = table
            .index_of(name)
            .unwrap_or_else(|| panic!("unknown symbol {name} in table {table}"));
        assert!(
            e >= 0 || table.laurent(idx),
            "negative exponent on non-laurent symbol {name}"
        );
        let mut exps = vec![0i32; table.len()];
        exps[idx] = e;
        Polynomial {
            table: table.clone(),
            terms: vec![(exps.into_boxed_slice(), BigInt::one())],
        }
    }

    pub fn monomial(table: &Arc<VariableTable>, exps: &[i32], coeff: i64) -> Self {
        Self::from_terms(
            table,
            vec![(exps.to_vec().into_boxed_slice(), BigInt::from(coeff))],
        )
    }

    /// Build from unsorted terms, combining duplicates and dropping zeros.
    pub fn from_terms(table: &Arc<VariableTable>, terms: Vec<(Exponents, BigInt)>) -> Self {
        let mut map: HashMap<Exponents, BigInt> = HashMap::with_capacity(terms.len());
        for (e, c) in terms {
            assert_eq!(e.len(), table.len(), "exponent vector length mismatch");
            *map.entry(e).or_insert_with(BigInt::zero) += c;
        }
        let mut terms: Vec<(Exponents, BigInt)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|x, y| grlex(&y.0, &x.0));
        let p = Polynomial {
            table: table.clone(),
            terms,
        };
        p.debug_check_laurent();
        p
    }

    fn debug_check_laurent(&self) {
        debug_assert!(self.terms.iter().all(|(e, _)| e
            .iter()
            .enumerate()
            .all(|(i, &x)| x >= 0 || self.table.laurent(i))));
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.is_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// Some(c) when the polynomial is the constant c (including 0).
    pub fn is_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 if self.terms[0].0.iter().all(|&e| e == 0) => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_ref(), c))
    }

    pub fn leading(&self) -> Option<(&[i32], &BigInt)> {
        self.terms.first().map(|(e, c)| (e.as_ref(), c))
    }

    /// Positive gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_content(&self, g: &BigInt) -> Self {
        if g.is_one() || self.is_zero() {
            return self.clone();
        }
        Polynomial {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c / g)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.table);
        }
        Polynomial {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&BigInt::from(c))
    }

    /// Multiply by a single monomial (exponent shift).
    pub fn mul_monomial(&self, shift: &[i32], coeff: &BigInt) -> Self {
        if coeff.is_zero() {
            return Self::zero(&self.table);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne: Vec<i32> = e.to_vec();
                for (x, s) in ne.iter_mut().zip(shift) {
                    *x += s;
                }
                (ne.into_boxed_slice(), c * coeff)
            })
            .collect();
        // A monomial shift is strictly monotone for grlex, so order survives.
        let p = Polynomial {
            table: self.table.clone(),
            terms,
        };
        p.debug_check_laurent();
        p
    }

    /// Per-variable minimum exponent over all terms (None when zero).
    pub fn min_exponents(&self) -> Option<Vec<i32>> {
        let mut it = self.terms.iter();
        let first = it.next()?;
        let mut mins: Vec<i32> = first.0.to_vec();
        for (e, _) in it {
            for (m, &x) in mins.iter_mut().zip(e.iter()) {
                if x < *m {
                    *m = x;
                }
            }
        }
        Some(mins)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.table);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division: returns Some(q) with `self = q * p` when `p` divides
    /// `self` in the Laurent ring declared by the table, None otherwise.
    pub fn exact_div(&self, p: &Polynomial) -> Option<Polynomial> {
        assert!(same_table(&self.table, &p.table), "table mismatch");
        assert!(!p.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero(&self.table));
        }
        if let Some(c) = p.is_constant() {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (e, k) in &self.terms {
                let (q, r) = k.div_rem(&c);
                if !r.is_zero() {
                    return None;
                }
                terms.push((e.clone(), q));
            }
            return Some(Polynomial {
                table: self.table.clone(),
                terms,
            });
        }
        // Strip Laurent monomial parts so both operands live in N^k, where
        // graded-lex is a well-order and single-divisor division terminates.
        let mf = self.min_exponents().unwrap();
        let mp = p.min_exponents().unwrap();
        let shift: Vec<i32> = mf.iter().zip(&mp).map(|(a, b)| a - b).collect();
        for (i, &s) in shift.iter().enumerate() {
            if s < 0 && !self.table.laurent(i) {
                return None;
            }
        }
        let neg = |v: &[i32]| v.iter().map(|&x| -x).collect::<Vec<i32>>();
        let f0 = self.mul_monomial(&neg(&mf), &BigInt::one());
        let p0 = p.mul_monomial(&neg(&mp), &BigInt::one());

        let (lp_e, lp_c) = p0.leading().unwrap();
        let lp_e: Vec<i32> = lp_e.to_vec();
        let lp_c = lp_c.clone();
        let mut rem = f0;
        let mut quo_terms: Vec<(Exponents, BigInt)> = Vec::new();
        while !rem.is_zero() {
            let (lr_e, lr_c) = rem.leading().unwrap();
            let qe: Vec<i32> = lr_e.iter().zip(&lp_e).map(|(a, b)| a - b).collect();
            if qe.iter().any(|&x| x < 0) {
                return None;
            }
            let (qc, r) = lr_c.div_rem(&lp_c);
            if !r.is_zero() {
                return None;
            }
            let t = p0.mul_monomial(&qe, &qc);
            rem = &rem - &t;
            quo_terms.push((qe.into_boxed_slice(), qc));
        }
        let quo = Polynomial {
            table: self.table.clone(),
            terms: {
                quo_terms.sort_by(|x, y| grlex(&y.0, &x.0));
                quo_terms
            },
        };
        Some(quo.mul_monomial(&shift, &BigInt::one()))
    }

    /// Total order on canonical term sequences (for factor-list sorting).
    pub fn cmp_terms(&self, other: &Polynomial) -> Ordering {
        for ((ea, ca), (eb, cb)) in self.terms.iter().zip(&other.terms) {
            let ord = grlex(ea, eb).then_with(|| ca.cmp(cb));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }

    /// Exchange two symbols in every exponent vector.
    pub fn swap_symbols(&self, a: &str, b: &str) -> Self {
        let ia = self.table.index_of(a).expect("unknown symbol");
        let ib = self.table.index_of(b).expect("unknown symbol");
        assert_eq!(
            self.table.laurent(ia),
            self.table.laurent(ib),
            "swapping symbols with different exponent conventions"
        );
        let mut terms: Vec<(Exponents, BigInt)> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = e.to_vec();
                ne.swap(ia, ib);
                (ne.into_boxed_slice(), c.clone())
            })
            .collect();
        terms.sort_by(|x, y| grlex(&y.0, &x.0));
        Polynomial {
            table: self.table.clone(),
            terms,
        }
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            table: self.table.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert!(same_table(&self.table, &rhs.table), "table mismatch");
        // Merge two descending-sorted term lists.
        let mut terms = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &rhs.terms[j];
            match grlex(eb, ea) {
                Ordering::Less => {
                    terms.push((ea.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    terms.push((eb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        terms.push((ea.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(self.terms[i..].iter().cloned());
        terms.extend(rhs.terms[j..].iter().cloned());
        Polynomial {
            table: self.table.clone(),
            terms,
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(same_table(&self.table, &rhs.table), "table mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.table);
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return rhs.mul_monomial(e, c);
        }
        if rhs.terms.len() == 1 {
            let (e, c) = &rhs.terms[0];
            return self.mul_monomial(e, c);
        }
        let mut map: HashMap<Exponents, BigInt> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<i32> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                *map.entry(e.into_boxed_slice()).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        let mut terms: Vec<(Exponents, BigInt)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|x, y| grlex(&y.0, &x.0));
        Polynomial {
            table: self.table.clone(),
            terms,
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (i, &x) in e.iter().enumerate() {
                if x == 1 {
                    factors.push(self.table.name(i).to_owned());
                } else if x != 0 {
                    factors.push(format!("{}^{}", self.table.name(i), x));
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t2() -> Arc<VariableTable> {
        VariableTable::new(&[("b", true), ("q", true), ("z1", true), ("z2", true)])
    }

    #[test]
    fn binomial_product() {
        let t = t2();
        let one = Polynomial::one(&t);
        let z = Polynomial::symbol(&t, "z1");
        let p = &(&one - &z) * &(&one + &z);
        let z2 = &z * &z;
        assert_eq!(p, &one - &z2);
    }

    #[test]
    fn laurent_inverse_cancels() {
        let t = t2();
        let a = Polynomial::symbol_pow(&t, "z1", 1);
        let b = Polynomial::symbol_pow(&t, "z2", -1);
        let c = Polynomial::symbol_pow(&t, "z1", -1);
        let d = Polynomial::symbol_pow(&t, "z2", 1);
        let p = &(&a * &b) * &(&c * &d);
        assert!(p.is_one());
    }

    #[test]
    fn canonical_order_and_display() {
        let t = t2();
        // q^2*z1^-1*z2 - b : degree 2 term sorts before degree 1.
        let m = Polynomial::monomial(&t, &[0, 2, -1, 1], 1);
        let b = Polynomial::symbol(&t, "b");
        let p = &m - &b;
        assert_eq!(p.to_string(), "q^2*z1^-1*z2 - b");
    }

    #[test]
    fn exact_division() {
        let t = t2();
        let z1 = Polynomial::symbol(&t, "z1");
        let z2 = Polynomial::symbol(&t, "z2");
        let sum = &z1 + &z2;
        let diff = &z1 - &z2;
        let prod = &sum * &diff;
        let q = prod.exact_div(&diff).expect("divisible");
        assert_eq!(q, sum);
        assert!(sum.exact_div(&diff).is_none());
    }

    #[test]
    fn exact_division_laurent_shift() {
        let t = t2();
        // (z1 + z1^3) / (z1^2 + z1^4) = z1^-1
        let f = &Polynomial::symbol_pow(&t, "z1", 1) + &Polynomial::symbol_pow(&t, "z1", 3);
        let p = &Polynomial::symbol_pow(&t, "z1", 2) + &Polynomial::symbol_pow(&t, "z1", 4);
        let q = f.exact_div(&p).expect("divisible in the Laurent ring");
        assert_eq!(q, Polynomial::symbol_pow(&t, "z1", -1));
    }

    #[test]
    fn content_is_positive_gcd() {
        let t = t2();
        let p = &Polynomial::integer(&t, -4) * &Polynomial::symbol(&t, "q");
        let r = &p + &Polynomial::integer(&t, 6);
        assert_eq!(r.content(), BigInt::from(2));
    }
}
