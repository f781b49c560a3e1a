//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients over named variables.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors ordered
//! graded-lexicographically, so iteration and the text form are
//! deterministic. The variable list is always kept in canonical order
//! (see [`var_order_key`]); binary operations first align both operands to
//! the union of their variables.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::parse;
use super::rat::Rat;
use crate::error::{Error, Result};

/// Exponent vector, one entry per variable of the owning polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` if every exponent of `other` is at most ours.
    fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

// graded lex: total degree first, then lexicographic on the exponent vector
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

const KNOWN_VARS: [&str; 11] = ["i", "m", "n", "k", "j", "s", "t", "u", "x", "y", "z"];

/// Sort key placing the variables used throughout the crate in a fixed
/// order (`i, m, n, k, ...`) and anything else alphabetically after them.
pub fn var_order_key(name: &str) -> (usize, &str) {
    let rank = KNOWN_VARS
        .iter()
        .position(|v| *v == name)
        .unwrap_or(KNOWN_VARS.len());
    (rank, name)
}

fn union_vars(a: &[String], b: &[String]) -> Vec<String> {
    let mut out: Vec<String> = a.to_vec();
    for v in b {
        if !out.contains(v) {
            out.push(v.clone());
        }
    }
    out.sort_by(|x, y| var_order_key(x).cmp(&var_order_key(y)));
    out
}

#[derive(Clone, Debug, Default)]
pub struct MPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(vec![]), c);
        }
        Self { vars: vec![], terms }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), BigInt::one());
        Self {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs over `vars`.
    /// Variables are reordered canonically; repeated monomials are summed.
    pub fn from_terms<I>(vars: &[&str], terms: I) -> Self
    where
        I: IntoIterator<Item = (BigInt, Vec<u32>)>,
    {
        let given: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let canon = union_vars(&given, &[]);
        let perm: Vec<usize> = canon
            .iter()
            .map(|v| given.iter().position(|g| g == v).unwrap())
            .collect();
        let mut out = BTreeMap::new();
        for (c, exps) in terms {
            assert_eq!(exps.len(), given.len(), "exponent arity mismatch");
            let mono = Monomial(perm.iter().map(|&p| exps[p]).collect());
            accumulate(&mut out, mono, c);
        }
        Self {
            vars: canon,
            terms: out,
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.vars.iter().position(|v| v == var) {
            Some(ix) => self.terms.keys().map(|m| m.0[ix]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Variables that occur with a positive exponent in some term.
    pub fn occurring_vars(&self) -> Vec<String> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(ix, _)| self.terms.keys().any(|m| m.0[*ix] > 0))
            .map(|(_, v)| v.clone())
            .collect()
    }

    /// Coefficient of the monomial given as `(var, exponent)` pairs; absent
    /// variables have exponent zero.
    pub fn coeff(&self, exps: &[(&str, u32)]) -> BigInt {
        let mut mono = vec![0u32; self.vars.len()];
        for (v, e) in exps {
            match self.vars.iter().position(|x| x == v) {
                Some(ix) => mono[ix] = *e,
                None if *e == 0 => {}
                None => return BigInt::zero(),
            }
        }
        self.terms
            .get(&Monomial(mono))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&[])
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Same polynomial expressed over a superset of its variables.
    pub fn aligned(&self, vars: &[String]) -> MPoly {
        if vars == self.vars.as_slice() {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|w| w == v)
                    .expect("alignment target must contain every variable")
            })
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; vars.len()];
                for (src, dst) in map.iter().enumerate() {
                    e[*dst] = m.0[src];
                }
                (Monomial(e), c.clone())
            })
            .collect();
        MPoly {
            vars: vars.to_vec(),
            terms,
        }
    }

    fn aligned_pair(&self, other: &MPoly) -> (MPoly, MPoly) {
        let vars = union_vars(&self.vars, &other.vars);
        (self.aligned(&vars), other.aligned(&vars))
    }

    /// Drops variables that no longer occur.
    pub fn trimmed(&self) -> MPoly {
        let keep: Vec<String> = self.occurring_vars();
        let idx: Vec<usize> = keep
            .iter()
            .map(|v| self.vars.iter().position(|w| w == v).unwrap())
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial(idx.iter().map(|&i| m.0[i]).collect()), c.clone()))
            .collect();
        MPoly { vars: keep, terms }
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Positive gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Splits off the content so that the remaining polynomial is primitive
    /// with a positive leading coefficient. Returns `(content, primitive)`.
    pub fn primitive_split(&self) -> (BigInt, MPoly) {
        if self.is_zero() {
            return (BigInt::zero(), self.clone());
        }
        let mut g = self.content();
        if self.leading_term().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            g = -g;
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c / &g))
            .collect();
        (
            g,
            MPoly {
                vars: self.vars.clone(),
                terms,
            },
        )
    }

    /// Exact evaluation. Every occurring variable must be assigned.
    pub fn eval(&self, point: &BTreeMap<String, Rat>) -> Result<Rat> {
        let mut powers: Vec<Vec<Rat>> = Vec::with_capacity(self.vars.len());
        for (ix, v) in self.vars.iter().enumerate() {
            let maxe = self.terms.keys().map(|m| m.0[ix]).max().unwrap_or(0);
            if maxe == 0 {
                powers.push(vec![Rat::one()]);
                continue;
            }
            let x = point
                .get(v)
                .ok_or_else(|| Error::MissingVariable(v.clone()))?;
            let mut p = Vec::with_capacity(maxe as usize + 1);
            p.push(Rat::one());
            for e in 1..=maxe as usize {
                let next = &p[e - 1] * x;
                p.push(next);
            }
            powers.push(p);
        }
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = Rat::from_integer(c.clone());
            for (ix, e) in m.0.iter().enumerate() {
                if *e > 0 {
                    t *= &powers[ix][*e as usize];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Convenience wrapper over [`MPoly::eval`] for small literal points.
    pub fn eval_at(&self, point: &[(&str, Rat)]) -> Result<Rat> {
        let map = point
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        self.eval(&map)
    }

    /// Evaluation at integer points, staying in `BigInt`.
    pub fn eval_int(&self, point: &[(&str, i64)]) -> Result<BigInt> {
        let vals: Vec<Option<BigInt>> = self
            .vars
            .iter()
            .map(|v| {
                point
                    .iter()
                    .find(|(k, _)| k == v)
                    .map(|(_, x)| BigInt::from(*x))
            })
            .collect();
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (ix, e) in m.0.iter().enumerate() {
                if *e > 0 {
                    let x = vals[ix]
                        .as_ref()
                        .ok_or_else(|| Error::MissingVariable(self.vars[ix].clone()))?;
                    t *= num_traits::pow(x.clone(), *e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Simultaneous substitution of variables by polynomials.
    pub fn substitute(&self, subs: &[(&str, MPoly)]) -> MPoly {
        // build, per variable, its replacement polynomial and a power cache
        let mut repl: Vec<MPoly> = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            match subs.iter().find(|(name, _)| name == v) {
                Some((_, p)) => repl.push(p.clone()),
                None => repl.push(MPoly::var(v)),
            }
        }
        let mut caches: Vec<Vec<MPoly>> = repl.iter().map(|p| vec![MPoly::one(), p.clone()]).collect();
        let mut acc = MPoly::zero();
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(c.clone());
            for (ix, e) in m.0.iter().enumerate() {
                let e = *e as usize;
                if e == 0 {
                    continue;
                }
                while caches[ix].len() <= e {
                    let next = &caches[ix][caches[ix].len() - 1] * &repl[ix];
                    caches[ix].push(next);
                }
                t = &t * &caches[ix][e];
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Shift `var -> var + offset`.
    pub fn shift(&self, var: &str, offset: i64) -> MPoly {
        self.substitute(&[(var, &MPoly::var(var) + &MPoly::constant(offset))])
    }

    /// Exact division in `Z[vars]`: `Some(q)` iff `self = q * divisor`
    /// with `q` having integer coefficients.
    pub fn div_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        let (mut rem, d) = self.aligned_pair(divisor);
        let (lm, lc) = {
            let (m, c) = d.leading_term().unwrap();
            (m.clone(), c.clone())
        };
        let mut quot = BTreeMap::new();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.checked_div(&lm)?;
            let (qc, r) = c.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            let step = MPoly {
                vars: rem.vars.clone(),
                terms: std::iter::once((qm.clone(), qc.clone())).collect(),
            };
            rem = &rem - &(&step * &d);
            accumulate(&mut quot, qm, qc);
        }
        Some(MPoly {
            vars: rem.vars,
            terms: quot,
        })
    }

    /// Deterministic text form: terms in descending graded-lex order, each
    /// written `coeff*v1^e1*v2^e2` (exponent 1 omitted, zero-exponent
    /// variables omitted), joined with ` + ` / ` - `.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&mag.to_string());
            for (ix, e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => {
                        out.push('*');
                        out.push_str(&self.vars[ix]);
                    }
                    _ => {
                        out.push('*');
                        out.push_str(&self.vars[ix]);
                        out.push('^');
                        out.push_str(&e.to_string());
                    }
                }
            }
        }
        out
    }

    /// Coefficients of a univariate polynomial in `var`, lowest degree
    /// first. Fails if another variable occurs.
    pub fn univariate_coeffs(&self, var: &str) -> Result<Vec<BigInt>> {
        let occ = self.occurring_vars();
        if occ.iter().any(|v| v != var) {
            return Err(Error::Domain(format!(
                "polynomial is not univariate in `{var}`: {occ:?}"
            )));
        }
        let deg = self.degree_in(var) as usize;
        let mut out = vec![BigInt::zero(); deg + 1];
        let ix = self.vars.iter().position(|v| v == var);
        for (m, c) in &self.terms {
            let e = ix.map(|ix| m.0[ix]).unwrap_or(0) as usize;
            out[e] += c;
        }
        Ok(out)
    }
}

fn accumulate(terms: &mut BTreeMap<Monomial, BigInt>, m: Monomial, c: BigInt) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// True iff `p - q` is the zero polynomial.
pub fn mpoly_equal(p: &MPoly, q: &MPoly) -> bool {
    (p - q).is_zero()
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        mpoly_equal(self, other)
    }
}

impl Eq for MPoly {}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let (mut a, b) = self.aligned_pair(rhs);
        for (m, c) in b.terms {
            accumulate(&mut a.terms, m, c);
        }
        a
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let (mut a, b) = self.aligned_pair(rhs);
        for (m, c) in b.terms {
            accumulate(&mut a.terms, m, -c);
        }
        a
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let (a, b) = self.aligned_pair(rhs);
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(a.terms.len() * b.terms.len());
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let m = ma.mul(mb);
                let prod = ca * cb;
                match acc.get_mut(&m) {
                    Some(x) => *x += prod,
                    None => {
                        acc.insert(m, prod);
                    }
                }
            }
        }
        MPoly {
            vars: a.vars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -(&self)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for MPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse::parse_poly(s)
    }
}

/// Shorthand used by tests and data tables: parse or panic.
pub fn poly(s: &str) -> MPoly {
    s.parse()
        .unwrap_or_else(|e| panic!("invalid polynomial literal `{s}`: {e}"))
}
