//! The fraction field over [`Polynomial`].
//!
//! A fraction is stored as a numerator (a Laurent polynomial carrying every
//! monomial unit) over a factored denominator: a positive integer times a
//! multiset of primitive polynomial factors with positive leading
//! coefficients. Denominators only ever arise as products of the factors
//! they were built from, so reduction is by exact trial division of the
//! numerator against those factors; no multivariate gcd is attempted and
//! equality is decided by cross-multiplication, never by structural
//! comparison of unreduced parts.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::poly::Polynomial;
use super::vars::{same_table, VariableTable};

#[derive(Debug, Error)]
pub enum SymError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("denominator factor vanishes identically under the substitution: {0}")]
    VanishingDenominator(String),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("unknown symbol {0}")]
    UnknownSymbol(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    /// Positive integer part of the denominator.
    den_int: BigInt,
    /// Primitive, positive-leading, non-constant factors with multiplicity,
    /// sorted for canonical form.
    den_factors: Vec<(Polynomial, u32)>,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, SymError> {
        if den.is_zero() {
            return Err(SymError::DivisionByZero);
        }
        let mut rf = RationalFunction {
            num,
            den_int: BigInt::one(),
            den_factors: Vec::new(),
        };
        rf.push_factor(den);
        rf.reduce();
        Ok(rf)
    }

    pub fn from_poly(num: Polynomial) -> Self {
        RationalFunction {
            num,
            den_int: BigInt::one(),
            den_factors: Vec::new(),
        }
    }

    pub fn zero(table: &Arc<VariableTable>) -> Self {
        Self::from_poly(Polynomial::zero(table))
    }

    pub fn one(table: &Arc<VariableTable>) -> Self {
        Self::from_poly(Polynomial::one(table))
    }

    pub fn integer(table: &Arc<VariableTable>, n: i64) -> Self {
        Self::from_poly(Polynomial::integer(table, n))
    }

    pub fn symbol(table: &Arc<VariableTable>, name: &str) -> Self {
        Self::from_poly(Polynomial::symbol(table, name))
    }

    /// Fold one denominator polynomial into normalized factor form:
    /// integer content into `den_int`, the invertible part of the monomial
    /// content into the numerator, the primitive rest onto the factor list.
    fn push_factor(&mut self, den: Polynomial) {
        debug_assert!(!den.is_zero());
        let table = den.table().clone();
        // Integer content and sign.
        let mut c = den.content();
        if den.leading().map(|(_, k)| k.is_negative()).unwrap_or(false) {
            c = -c;
        }
        let mut f = den.div_content(&c);
        if c.is_negative() {
            self.num = -&self.num;
            self.den_int *= -c;
        } else {
            self.den_int *= c;
        }
        // Laurent monomial content moves to the numerator as a unit.
        if let Some(mins) = f.min_exponents() {
            let shift: Vec<i32> = (0..table.len())
                .map(|i| if table.laurent(i) { -mins[i] } else { 0 })
                .collect();
            if shift.iter().any(|&s| s != 0) {
                f = f.mul_monomial(&shift, &BigInt::one());
                self.num = self.num.mul_monomial(&shift, &BigInt::one());
            }
        }
        if !f.is_one() {
            self.insert_factor(f, 1);
        }
    }

    fn insert_factor(&mut self, f: Polynomial, mult: u32) {
        debug_assert!(!f.is_one() && !f.is_zero());
        match self
            .den_factors
            .iter_mut()
            .find(|(g, _)| *g == f)
        {
            Some((_, m)) => *m += mult,
            None => {
                self.den_factors.push((f, mult));
                self.den_factors.sort_by(|a, b| {
                    super::poly::grlex(
                        a.0.leading().map(|(e, _)| e).unwrap_or(&[]),
                        b.0.leading().map(|(e, _)| e).unwrap_or(&[]),
                    )
                    .then_with(|| a.0.cmp_terms(&b.0))
                });
            }
        }
    }

    /// Cancel the numerator against the stored factors and integer part.
    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den_int = BigInt::one();
            self.den_factors.clear();
            return;
        }
        let mut factors = std::mem::take(&mut self.den_factors);
        for (f, mult) in &mut factors {
            while *mult > 0 {
                match self.num.exact_div(f) {
                    Some(q) => {
                        self.num = q;
                        *mult -= 1;
                    }
                    None => break,
                }
            }
        }
        factors.retain(|(_, m)| *m > 0);
        self.den_factors = factors;
        if !self.den_int.is_one() {
            let g = self.num.content().gcd(&self.den_int);
            if !g.is_one() {
                self.num = self.num.div_content(&g);
                self.den_int /= g;
            }
        }
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        self.num.table()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    /// The denominator, materialized as a single polynomial.
    pub fn denominator(&self) -> Polynomial {
        let mut den = Polynomial::constant(self.num.table(), self.den_int.clone());
        for (f, m) in &self.den_factors {
            for _ in 0..*m {
                den = &den * f;
            }
        }
        den
    }

    pub fn den_factors(&self) -> &[(Polynomial, u32)] {
        &self.den_factors
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den_factors.is_empty()
            && self
                .num
                .is_constant()
                .map(|c| c == self.den_int)
                .unwrap_or(false)
    }

    /// A cheap size proxy for pivot selection.
    pub fn complexity(&self) -> usize {
        self.num.num_terms()
            + self
                .den_factors
                .iter()
                .map(|(f, m)| f.num_terms() * (*m as usize))
                .sum::<usize>()
    }

    pub fn inverse(&self) -> Result<Self, SymError> {
        if self.num.is_zero() {
            return Err(SymError::DivisionByZero);
        }
        let table = self.table().clone();
        let mut num = Polynomial::constant(&table, self.den_int.clone());
        for (f, m) in &self.den_factors {
            for _ in 0..*m {
                num = &num * f;
            }
        }
        let mut rf = RationalFunction {
            num,
            den_int: BigInt::one(),
            den_factors: Vec::new(),
        };
        rf.push_factor(self.num.clone());
        rf.reduce();
        Ok(rf)
    }

    pub fn pow(&self, e: i32) -> Result<Self, SymError> {
        if e == 0 {
            return Ok(Self::one(self.table()));
        }
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let k = e.unsigned_abs();
        let num = base.num.pow(k);
        let mut den_int = BigInt::one();
        for _ in 0..k {
            den_int *= &base.den_int;
        }
        let den_factors = base
            .den_factors
            .iter()
            .map(|(f, m)| (f.clone(), m * k))
            .collect();
        // Content of a power can meet den_int; reduce once.
        let mut rf = RationalFunction {
            num,
            den_int,
            den_factors,
        };
        rf.reduce();
        Ok(rf)
    }

    /// Equality by cross-multiplication, after cancelling shared factors.
    pub fn eq_sym(&self, other: &RationalFunction) -> bool {
        assert!(same_table(self.table(), other.table()), "table mismatch");
        let mut lhs = self.num.scale(&other.den_int);
        let mut rhs = other.num.scale(&self.den_int);
        // Multiply each side by the factors missing from the other.
        for (f, m) in &other.den_factors {
            let shared = self
                .den_factors
                .iter()
                .find(|(g, _)| g == f)
                .map(|(_, k)| *k)
                .unwrap_or(0);
            for _ in 0..m.saturating_sub(shared) {
                lhs = &lhs * f;
            }
        }
        for (f, m) in &self.den_factors {
            let shared = other
                .den_factors
                .iter()
                .find(|(g, _)| g == f)
                .map(|(_, k)| *k)
                .unwrap_or(0);
            for _ in 0..m.saturating_sub(shared) {
                rhs = &rhs * f;
            }
        }
        lhs == rhs
    }

    /// Exchange two symbols (an exponent relabeling, not a substitution).
    pub fn swap_symbols(&self, a: &str, b: &str) -> Self {
        let mut rf = RationalFunction {
            num: self.num.swap_symbols(a, b),
            den_int: self.den_int.clone(),
            den_factors: Vec::new(),
        };
        for (f, m) in &self.den_factors {
            let g = f.swap_symbols(a, b);
            // Re-normalize: a swap can disturb leading-coefficient sign.
            for _ in 0..*m {
                rf.push_factor(g.clone());
            }
        }
        rf
    }

    /// Simultaneous exact substitution into a target table.
    ///
    /// Bound symbols are replaced by fractions over `target`; unbound
    /// symbols must exist in `target` by name. Errors when a denominator
    /// factor collapses to zero, naming the offending factor.
    pub fn substitute_into(
        &self,
        target: &Arc<VariableTable>,
        bindings: &BTreeMap<&str, RationalFunction>,
    ) -> Result<Self, SymError> {
        let mut acc = eval_poly(&self.num, target, bindings)?;
        let int = RationalFunction::from_poly(Polynomial::constant(
            target,
            self.den_int.clone(),
        ));
        acc = (&acc / &int)?;
        for (f, m) in &self.den_factors {
            let image = eval_poly(f, target, bindings)?;
            if image.is_zero() {
                return Err(SymError::VanishingDenominator(f.to_string()));
            }
            for _ in 0..*m {
                acc = (&acc / &image)?;
            }
        }
        Ok(acc)
    }

    /// Substitution within the same table.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<&str, RationalFunction>,
    ) -> Result<Self, SymError> {
        let table = self.table().clone();
        self.substitute_into(&table, bindings)
    }

    /// Exact numeric evaluation at an integer point, as a (num, den) pair
    /// with den > 0. None when the denominator vanishes at the point.
    pub fn eval_i64(&self, point: &[i64]) -> Option<(BigInt, BigInt)> {
        let (nn, nd) = eval_poly_i64(&self.num, point)?;
        let mut dn = self.den_int.clone();
        let mut dd = BigInt::one();
        for (f, m) in &self.den_factors {
            let (fn_, fd) = eval_poly_i64(f, point)?;
            if fn_.is_zero() {
                return None;
            }
            for _ in 0..*m {
                dn *= &fn_;
                dd *= &fd;
            }
        }
        let mut n = nn * dd;
        let mut d = nd * dn;
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g.is_zero() {
            Some((n, d))
        } else {
            Some((n / &g, d / g))
        }
    }
}

/// Evaluate a Laurent polynomial at an integer point as an exact rational.
/// None when a negative power of zero occurs.
fn eval_poly_i64(p: &Polynomial, point: &[i64]) -> Option<(BigInt, BigInt)> {
    let mut acc_num = BigInt::zero();
    let mut acc_den = BigInt::one();
    for (e, c) in p.terms() {
        let mut tn = c.clone();
        let mut td = BigInt::one();
        for (i, &x) in e.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let base = BigInt::from(point[i]);
            if x > 0 {
                tn *= base.pow(x as u32);
            } else {
                if base.is_zero() {
                    return None;
                }
                td *= base.pow((-x) as u32);
            }
        }
        acc_num = &acc_num * &td + &tn * &acc_den;
        acc_den *= td;
    }
    Some((acc_num, acc_den))
}

fn eval_poly(
    p: &Polynomial,
    target: &Arc<VariableTable>,
    bindings: &BTreeMap<&str, RationalFunction>,
) -> Result<RationalFunction, SymError> {
    let src = p.table();
    let mut images: Vec<RationalFunction> = Vec::with_capacity(src.len());
    for i in 0..src.len() {
        let name = src.name(i);
        if let Some(rf) = bindings.get(name) {
            assert!(
                same_table(rf.table(), target),
                "binding for {name} is over the wrong table"
            );
            images.push(rf.clone());
        } else {
            if target.index_of(name).is_none() {
                return Err(SymError::UnknownSymbol(name.to_owned()));
            }
            images.push(RationalFunction::symbol(target, name));
        }
    }
    let mut acc = RationalFunction::zero(target);
    for (e, c) in p.terms() {
        let mut term = RationalFunction::from_poly(Polynomial::constant(target, c.clone()));
        for (i, &x) in e.iter().enumerate() {
            if x != 0 {
                term = &term * &images[i].pow(x)?;
            }
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.eq_sym(other)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den_int: self.den_int.clone(),
            den_factors: self.den_factors.clone(),
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(same_table(self.table(), rhs.table()), "table mismatch");
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // Common denominator: lcm of the integer parts, per-factor maximum
        // multiplicity. Each numerator is scaled by what its side lacks.
        let gi = self.den_int.gcd(&rhs.den_int);
        let mut lhs_num = self.num.scale(&(&rhs.den_int / &gi));
        let mut rhs_num = rhs.num.scale(&(&self.den_int / &gi));
        let den_int = &self.den_int / &gi * &rhs.den_int;

        let mut factors: Vec<(Polynomial, u32)> = self.den_factors.clone();
        for (f, m) in &rhs.den_factors {
            match factors.iter_mut().find(|(g, _)| g == f) {
                Some((_, k)) => {
                    if *m > *k {
                        *k = *m;
                    }
                }
                None => factors.push((f.clone(), *m)),
            }
        }
        for (f, m) in &factors {
            let in_self = self
                .den_factors
                .iter()
                .find(|(g, _)| g == f)
                .map(|(_, k)| *k)
                .unwrap_or(0);
            let in_rhs = rhs
                .den_factors
                .iter()
                .find(|(g, _)| g == f)
                .map(|(_, k)| *k)
                .unwrap_or(0);
            for _ in 0..(m - in_self) {
                lhs_num = &lhs_num * f;
            }
            for _ in 0..(m - in_rhs) {
                rhs_num = &rhs_num * f;
            }
        }
        let mut rf = RationalFunction {
            num: &lhs_num + &rhs_num,
            den_int,
            den_factors: factors,
        };
        rf.den_factors.sort_by(|a, b| {
            super::poly::grlex(
                a.0.leading().map(|(e, _)| e).unwrap_or(&[]),
                b.0.leading().map(|(e, _)| e).unwrap_or(&[]),
            )
            .then_with(|| a.0.cmp_terms(&b.0))
        });
        rf.reduce();
        rf
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(same_table(self.table(), rhs.table()), "table mismatch");
        let mut rf = RationalFunction {
            num: &self.num * &rhs.num,
            den_int: &self.den_int * &rhs.den_int,
            den_factors: self.den_factors.clone(),
        };
        for (f, m) in &rhs.den_factors {
            rf.insert_factor(f.clone(), *m);
        }
        rf.reduce();
        rf
    }
}

impl Div for &RationalFunction {
    type Output = Result<RationalFunction, SymError>;
    fn div(self, rhs: &RationalFunction) -> Result<RationalFunction, SymError> {
        if rhs.is_zero() {
            return Err(SymError::DivisionByZero);
        }
        Ok(self * &rhs.inverse()?)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.denominator();
        if den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> Arc<VariableTable> {
        VariableTable::new(&[("b", true), ("q", true), ("z1", true), ("z2", true)])
    }

    fn sym(t: &Arc<VariableTable>, s: &str) -> RationalFunction {
        RationalFunction::symbol(t, s)
    }

    #[test]
    fn factor_cancellation_via_cross_multiplication() {
        let t = table();
        let one = RationalFunction::one(&t);
        let z = sym(&t, "z1");
        let z2 = &z * &z;
        // (z^2-1)/(z-1) == z+1
        let lhs = (&(&z2 - &one) / &(&z - &one)).unwrap();
        let rhs = &z + &one;
        assert!(lhs.eq_sym(&rhs));
        assert_eq!(lhs, rhs);
        // and the stored form is actually reduced
        assert!(lhs.den_factors().is_empty());
    }

    #[test]
    fn inequality_detected() {
        let t = table();
        let one = RationalFunction::one(&t);
        let bz = &sym(&t, "b") * &sym(&t, "z1");
        let lhs = (&one / &(&one - &bz)).unwrap();
        let rhs = &one + &bz;
        assert!(!lhs.eq_sym(&rhs));
    }

    #[test]
    fn q_of_beta_q_identity() {
        // Q(b,q) - q^2 == b(1-q^2)
        let t = table();
        let b = sym(&t, "b");
        let q = sym(&t, "q");
        let one = RationalFunction::one(&t);
        let q2 = &q * &q;
        let big_q = &(&q2 + &b) - &(&q2 * &b);
        let lhs = &big_q - &q2;
        let rhs = &b * &(&one - &q2);
        assert!(lhs.eq_sym(&rhs));
    }

    #[test]
    fn sums_over_a_common_denominator_stay_small() {
        let t = table();
        let one = RationalFunction::one(&t);
        let z = sym(&t, "z1");
        let d = &one - &(&sym(&t, "q") * &z);
        let a = (&one / &d).unwrap();
        let b = (&z / &d).unwrap();
        let s = &a + &b;
        assert_eq!(s.den_factors().len(), 1);
        assert_eq!(s.numerator().num_terms(), 2);
    }

    #[test]
    fn substitution_swaps_and_specializes() {
        let t = table();
        let z1 = sym(&t, "z1");
        let z2 = sym(&t, "z2");
        let ratio = (&z2 / &z1).unwrap();
        let mut bind = BTreeMap::new();
        bind.insert("z1", z2.clone());
        let r = ratio.substitute(&bind).unwrap();
        assert!(r.is_one());
    }

    #[test]
    fn vanishing_denominator_reported() {
        let t = table();
        let one = RationalFunction::one(&t);
        let z1 = sym(&t, "z1");
        let inv = (&one / &(&z1 - &one)).unwrap();
        let mut bind = BTreeMap::new();
        bind.insert("z1", one.clone());
        assert!(matches!(
            inv.substitute(&bind),
            Err(SymError::VanishingDenominator(_))
        ));
    }

    #[test]
    fn laurent_denominators_normalize_to_polynomial_factors() {
        let t = table();
        let one = RationalFunction::one(&t);
        // 1/(1 - z2/z1) has factor z1 - z2 and numerator z1
        let e = (&sym(&t, "z2") / &sym(&t, "z1")).unwrap();
        let r = (&one / &(&one - &e)).unwrap();
        assert_eq!(r.den_factors().len(), 1);
        assert_eq!(r.den_factors()[0].0.to_string(), "z1 - z2");
        assert_eq!(r.numerator().to_string(), "z1");
    }

    #[test]
    fn integer_content_in_denominator() {
        let t = table();
        let two = RationalFunction::integer(&t, 2);
        let half = (&RationalFunction::one(&t) / &two).unwrap();
        let one = &half + &half;
        assert!(one.is_one());
    }

    #[test]
    fn evaluation_agreement_after_arithmetic() {
        // b(1-q^2)/(Q - q^2 z) + q(1-z)/(Q - q^2 z) equals the hand-built
        // combined fraction; cross-validated at 5 random integer points.
        let t = table();
        let one = RationalFunction::one(&t);
        let b = sym(&t, "b");
        let q = sym(&t, "q");
        let z = sym(&t, "z1");
        let q2 = &q * &q;
        let big_q = &(&q2 + &b) - &(&q2 * &b);
        let den = &big_q - &(&q2 * &z);
        let lhs = &(&(&b * &(&one - &q2)) / &den).unwrap() + &(&(&q * &(&one - &z)) / &den).unwrap();
        let rhs = (&(&(&b * &(&one - &q2)) + &(&q * &(&one - &z))) / &den).unwrap();
        assert!(lhs.eq_sym(&rhs));
        let mut seed = 7u64;
        for _ in 0..5 {
            let pt = crate::testutil::random_point(&t, &mut seed);
            match (lhs.eval_i64(&pt), rhs.eval_i64(&pt)) {
                (Some((an, ad)), Some((bn, bd))) => assert_eq!(an * bd, bn * ad),
                (None, None) => {}
                _ => panic!("evaluability differs at {pt:?}"),
            }
        }
    }
}
