//! Polynomials over small finite fields `F_q`, `q = p^d`.
//!
//! Field elements are encoded as integers in `[0, q)`: the base-`p` digits of
//! the encoding are the coefficients of the element as a polynomial of degree
//! `< d` modulo the defining polynomial. Factorization is deterministic:
//! squarefree decomposition, distinct-degree splitting, then equal-degree
//! splitting by exhaustive search over monic candidates.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::intpoly::{write_poly, IntPoly};
use crate::{Error, Result};

const MAX_DEGREE: usize = 16;
/// Upper bound on the number of candidates tried by equal-degree splitting.
const MAX_CANDIDATES: u64 = 50_000_000;

/// The field `F_p[t]/(m(t))` for a monic irreducible `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaloisField {
    p: u64,
    modulus: Vec<u64>,
    order: u64,
}

impl GaloisField {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Arc<Self>> {
        crate::arith::check_prime(p)?;
        if p >= 1 << 31 {
            return Err(Error::PrimeTooLarge(p));
        }
        Ok(Arc::new(GaloisField { p, modulus: vec![0, 1], order: p }))
    }

    /// `F_p[t]/(modulus)`; `modulus` is given lowest degree first and must be
    /// monic and irreducible over `F_p`.
    pub fn extension(p: u64, modulus: &[u64]) -> Result<Arc<Self>> {
        let base = Self::prime(p)?;
        let poly = FieldPoly::new(base.clone(), modulus.iter().map(|c| c % p).collect());
        let deg = poly.degree().ok_or(Error::ZeroPolynomial)?;
        if !poly.is_monic() || deg == 0 {
            return Err(Error::NotMonic(poly.to_string()));
        }
        if deg > MAX_DEGREE {
            return Err(Error::FieldTooLarge(format!("{p}^{deg}")));
        }
        let order = (p as u128).pow(deg as u32);
        if order > 1 << 40 {
            return Err(Error::FieldTooLarge(format!("{p}^{deg}")));
        }
        if !poly.is_irreducible() {
            return Err(Error::ReducibleModulus(poly.to_string()));
        }
        Ok(Arc::new(GaloisField { p, modulus: poly.coeffs, order: order as u64 }))
    }

    /// The residue field `F_p[x]/(phi)` of an irreducible polynomial over `F_p`.
    pub fn residue_field(phi: &FieldPoly) -> Result<Arc<Self>> {
        if phi.field.degree() != 1 {
            return Err(Error::FieldMismatch);
        }
        let (_, monic) = phi.monic()?;
        Self::extension(phi.field.p, &monic.coeffs)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Defining polynomial, lowest degree first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn digits(&self, mut a: u64) -> [u64; MAX_DEGREE] {
        let mut out = [0; MAX_DEGREE];
        for slot in out.iter_mut().take(self.degree()) {
            *slot = a % self.p;
            a /= self.p;
        }
        out
    }

    fn encode(&self, digits: &[u64]) -> u64 {
        digits[..self.degree()].iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.degree() == 1 {
            return (a + b) % self.p;
        }
        let (x, y) = (self.digits(a), self.digits(b));
        let mut z = [0; MAX_DEGREE];
        for i in 0..self.degree() {
            z[i] = (x[i] + y[i]) % self.p;
        }
        self.encode(&z)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.degree() == 1 {
            return (self.p - a) % self.p;
        }
        let mut x = self.digits(a);
        for d in x.iter_mut().take(self.degree()) {
            *d = (self.p - *d) % self.p;
        }
        self.encode(&x)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let d = self.degree();
        if d == 1 {
            return (a * b) % self.p;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let (x, y) = (self.digits(a), self.digits(b));
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..d {
            if x[i] == 0 {
                continue;
            }
            for j in 0..d {
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % self.p;
            }
        }
        for i in (d..2 * d - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..d {
                let sub = (c * self.modulus[j]) % self.p;
                prod[i - d + j] = (prod[i - d + j] + self.p - sub) % self.p;
            }
        }
        self.encode(&prod)
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        (a != 0).then(|| self.pow(a, self.order - 2))
    }

    /// The unique `p`-th root (inverse Frobenius).
    pub fn pth_root(&self, a: u64) -> u64 {
        self.pow(a, self.order / self.p)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: &BigInt) -> u64 {
        crate::arith::residue(n, self.p)
    }

    /// The class of a polynomial over `F_p` (coefficients lowest first).
    pub fn from_poly(&self, coeffs: &[u64]) -> u64 {
        let d = self.degree();
        let mut work: Vec<u64> = coeffs.iter().map(|c| c % self.p).collect();
        for i in (d..work.len()).rev() {
            let c = work[i];
            if c == 0 {
                continue;
            }
            work[i] = 0;
            for j in 0..d {
                let sub = (c * self.modulus[j]) % self.p;
                work[i - d + j] = (work[i - d + j] + self.p - sub) % self.p;
            }
        }
        work.resize(d.max(work.len()), 0);
        self.encode(&work)
    }

    /// Coefficients (lowest first) of the polynomial representing `a`.
    pub fn element_coeffs(&self, a: u64) -> Vec<u64> {
        self.digits(a)[..self.degree()].to_vec()
    }

    fn format_element(&self, a: u64) -> String {
        if self.degree() == 1 || a < self.p {
            return a.to_string();
        }
        let digits = self.digits(a);
        let poly = FieldPoly {
            field: Arc::new(GaloisField { p: self.p, modulus: vec![0, 1], order: self.p }),
            coeffs: digits[..self.degree()].to_vec(),
        }
        .normalized();
        format!("({})", poly.display_var("t"))
    }
}

/// A polynomial over `F_q`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldPoly {
    field: Arc<GaloisField>,
    coeffs: Vec<u64>,
}

/// Complete factorization into monic irreducibles: `unit * prod f^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: u64,
    pub factors: Vec<(FieldPoly, u32)>,
    field: Arc<GaloisField>,
}

impl Factorization {
    pub fn product(&self) -> FieldPoly {
        let mut out = FieldPoly::constant(self.field.clone(), self.unit);
        for (f, k) in &self.factors {
            for _ in 0..*k {
                out = &out * f;
            }
        }
        out
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, k)| *k == 1)
    }

    /// Degrees of the irreducible factors, repeated by multiplicity.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (f, k) in &self.factors {
            for _ in 0..*k {
                out.push(f.degree().unwrap_or(0));
            }
        }
        out
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_var("x").fmt(f)
    }
}

impl Factorization {
    pub fn display_var<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        struct Shown<'a>(&'a Factorization, &'a str);
        impl fmt::Display for Shown<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let fac = self.0;
                if fac.unit != 1 || fac.factors.is_empty() {
                    f.write_str(&fac.field.format_element(fac.unit))?;
                }
                for (g, k) in &fac.factors {
                    write!(f, "({})", g.display_var(self.1))?;
                    if *k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
                Ok(())
            }
        }
        Shown(self, var)
    }
}

impl FieldPoly {
    /// Builds a polynomial from encoded field elements.
    pub fn new(field: Arc<GaloisField>, coeffs: Vec<u64>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < field.order));
        FieldPoly { field, coeffs }.normalized()
    }

    /// Builds a polynomial from integer coefficients in the prime subfield.
    pub fn from_ints(field: Arc<GaloisField>, coeffs: &[i64]) -> Self {
        let p = field.p as i64;
        let c = coeffs.iter().map(|&c| c.rem_euclid(p) as u64).collect();
        Self::new(field, c)
    }

    /// Reduction of an integer polynomial into the prime subfield.
    pub fn from_int_poly(field: Arc<GaloisField>, f: &IntPoly) -> Self {
        let c = f.coeffs().iter().map(|c| field.from_int(c)).collect();
        Self::new(field, c)
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        self
    }

    pub fn zero(field: Arc<GaloisField>) -> Self {
        FieldPoly { field, coeffs: Vec::new() }
    }

    pub fn constant(field: Arc<GaloisField>, c: u64) -> Self {
        Self::new(field, vec![c])
    }

    pub fn one(field: Arc<GaloisField>) -> Self {
        Self::constant(field, 1)
    }

    pub fn x(field: Arc<GaloisField>) -> Self {
        Self::new(field, vec![0, 1])
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Lift to `Z[x]` with coefficients in `[0, p)`; prime fields only.
    pub fn to_int_poly(&self) -> Result<IntPoly> {
        if self.field.degree() != 1 {
            return Err(Error::FieldMismatch);
        }
        Ok(IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect()))
    }

    pub fn eval(&self, x: u64) -> u64 {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn scale(&self, k: u64) -> Self {
        let f = &self.field;
        Self::new(self.field.clone(), self.coeffs.iter().map(|&c| f.mul(c, k)).collect())
    }

    /// Leading coefficient and the monic associate.
    pub fn monic(&self) -> Result<(u64, Self)> {
        let lc = self.leading();
        let inv = self.field.inv(lc).ok_or(Error::ZeroPolynomial)?;
        Ok((lc, self.scale(inv)))
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, (i as u64) % f.p))
            .collect();
        Self::new(self.field.clone(), coeffs)
    }

    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if self.field != divisor.field {
            return Err(Error::FieldMismatch);
        }
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let f = &self.field;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(f.clone()), self.clone()));
        }
        let inv_lc = f.inv(divisor.leading()).ok_or(Error::ZeroPolynomial)?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = f.mul(rem[i + dd], inv_lc);
            rem[i + dd] = 0;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs[..dd].iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, d));
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(f.clone(), quot), Self::new(f.clone(), rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Exact quotient; callers guarantee divisibility.
    fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.divrem(divisor).expect("nonzero divisor");
        debug_assert!(r.is_zero());
        q
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        match a.monic() {
            Ok((_, m)) => m,
            Err(_) => a,
        }
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m).expect("nonzero modulus");
        let mut acc = Self::one(self.field.clone()).rem(m).expect("nonzero modulus");
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(m).expect("nonzero modulus");
            }
            base = (&base * &base).rem(m).expect("nonzero modulus");
            e >>= 1;
        }
        acc
    }

    /// Inverse of the Frobenius on a polynomial whose derivative vanishes.
    fn pth_root(&self) -> Self {
        let f = &self.field;
        let p = f.p as usize;
        let coeffs = self.coeffs.iter().step_by(p).map(|&c| f.pth_root(c)).collect();
        Self::new(f.clone(), coeffs)
    }

    /// Rabin's test: `x^(q^n) = x mod f` and `gcd(x^(q^(n/r)) - x, f) = 1` for
    /// every prime `r | n`.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else { return false };
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let Ok((_, f)) = self.monic() else { return false };
        let q = f.field.order;
        let x = Self::x(f.field.clone());
        let mut frob = vec![x.rem(&f).expect("nonzero")];
        for _ in 0..n {
            let next = frob.last().unwrap().pow_mod(q, &f);
            frob.push(next);
        }
        if frob[n] != x.rem(&f).expect("nonzero") {
            return false;
        }
        let mut m = n;
        let mut r = 2;
        while m > 1 {
            if m % r == 0 {
                while m % r == 0 {
                    m /= r;
                }
                if !(&frob[n / r] - &x).gcd(&f).is_one() {
                    return false;
                }
            }
            r += 1;
        }
        true
    }

    /// Squarefree decomposition of a monic polynomial: pairwise coprime
    /// squarefree parts with their multiplicities.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        if let Ok((_, f)) = self.monic() {
            squarefree_rec(&f, 1, &mut out);
        }
        out
    }

    /// Distinct-degree splitting of a monic squarefree polynomial into
    /// products of irreducibles of a common degree.
    pub fn distinct_degree(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        let Ok((_, mut f)) = self.monic() else { return out };
        let q = f.field.order;
        let x = Self::x(f.field.clone());
        let mut h = x.clone();
        let mut i = 1;
        while f.degree().unwrap_or(0) >= 2 * i {
            h = h.pow_mod(q, &f);
            let g = (&h - &x).gcd(&f);
            if !g.is_one() {
                f = f.div_exact(&g);
                h = h.rem(&f).expect("nonzero");
                out.push((g, i));
            }
            i += 1;
        }
        if f.degree().unwrap_or(0) > 0 {
            let d = f.degree().unwrap();
            out.push((f, d));
        }
        out
    }

    /// Splits a monic product of distinct irreducibles of degree `k` by
    /// trial division over all monic polynomials of degree `k`.
    pub fn equal_degree(&self, k: usize) -> Result<Vec<Self>> {
        let n = self.degree().ok_or(Error::ZeroPolynomial)?;
        if n == k {
            return Ok(vec![self.clone()]);
        }
        let field = self.field.clone();
        let q = field.order;
        let total = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        if total > MAX_CANDIDATES as u128 {
            return Err(Error::FieldTooLarge(format!("{q}^{k} candidates")));
        }
        let mut rest = self.clone();
        let mut found = Vec::new();
        for index in 0..total as u64 {
            let mut coeffs = Vec::with_capacity(k + 1);
            let mut m = index;
            for _ in 0..k {
                coeffs.push(m % q);
                m /= q;
            }
            coeffs.push(1);
            let cand = Self::new(field.clone(), coeffs);
            let (quot, r) = rest.divrem(&cand)?;
            if r.is_zero() {
                found.push(cand);
                rest = quot;
                if rest.degree() == Some(k) {
                    found.push(rest);
                    break;
                }
            }
        }
        Ok(found)
    }

    /// Degrees of the irreducible factors with multiplicity, without
    /// splitting equal-degree parts.
    pub fn factor_degrees(&self) -> Result<Vec<usize>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Vec::new();
        for (part, mult) in self.squarefree_decomposition() {
            for (g, k) in part.distinct_degree() {
                let count = g.degree().unwrap() / k;
                out.extend(std::iter::repeat_n(k, count * mult as usize));
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Complete factorization into monic irreducibles.
    pub fn factor(&self) -> Result<Factorization> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (unit, _) = self.monic()?;
        let mut factors = Vec::new();
        for (part, mult) in self.squarefree_decomposition() {
            for (g, k) in part.distinct_degree() {
                for h in g.equal_degree(k)? {
                    factors.push((h, mult));
                }
            }
        }
        factors.sort_by(|(f, _), (g, _)| {
            (f.degree(), f.coeffs.iter().rev().collect::<Vec<_>>())
                .cmp(&(g.degree(), g.coeffs.iter().rev().collect::<Vec<_>>()))
        });
        Ok(Factorization { unit, factors, field: self.field.clone() })
    }

    pub fn display_var<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        struct Shown<'a>(&'a FieldPoly, &'a str);
        impl fmt::Display for Shown<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let field = &self.0.field;
                write_poly(f, &self.0.coeffs, self.1, |&c| {
                    if c == 0 {
                        None
                    } else if c == 1 {
                        Some((false, String::new()))
                    } else {
                        Some((false, field.format_element(c)))
                    }
                })
            }
        }
        Shown(self, var)
    }
}

fn squarefree_rec(f: &FieldPoly, mult: u32, out: &mut Vec<(FieldPoly, u32)>) {
    if f.degree().unwrap_or(0) == 0 {
        return;
    }
    let p = f.field.p as u32;
    let fp = f.derivative();
    if fp.is_zero() {
        squarefree_rec(&f.pth_root(), mult * p, out);
        return;
    }
    let mut c = f.gcd(&fp);
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if !z.is_one() {
            out.push((z, i * mult));
        }
        i += 1;
        c = c.div_exact(&y);
        w = y;
    }
    if !c.is_one() {
        squarefree_rec(&c.pth_root(), mult * p, out);
    }
}

impl std::ops::Add for &FieldPoly {
    type Output = FieldPoly;
    fn add(self, rhs: &FieldPoly) -> FieldPoly {
        assert_eq!(self.field, rhs.field, "mismatched fields");
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FieldPoly::new(f.clone(), (0..n).map(|i| f.add(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl std::ops::Sub for &FieldPoly {
    type Output = FieldPoly;
    fn sub(self, rhs: &FieldPoly) -> FieldPoly {
        assert_eq!(self.field, rhs.field, "mismatched fields");
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FieldPoly::new(f.clone(), (0..n).map(|i| f.sub(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl std::ops::Mul for &FieldPoly {
    type Output = FieldPoly;
    fn mul(self, rhs: &FieldPoly) -> FieldPoly {
        assert_eq!(self.field, rhs.field, "mismatched fields");
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return FieldPoly::zero(f.clone());
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        FieldPoly::new(f.clone(), out)
    }
}

impl fmt::Display for FieldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_var("x").fmt(f)
    }
}

/// Image of `x^9 + a x + b` in `F_p[x]`.
pub fn reduce_mod_p(a: &BigInt, b: &BigInt, p: u64) -> Result<FieldPoly> {
    let field = GaloisField::prime(p)?;
    Ok(FieldPoly::from_int_poly(field, &IntPoly::trinomial(a, b)))
}

fn mobius(mut n: u32) -> i32 {
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Number of monic irreducible polynomials of degree `f` over `F_p`.
pub fn count_monic_irreducible(p: u64, f: u32) -> BigUint {
    assert!(f >= 1, "degree must be positive");
    let mut sum = BigInt::zero();
    for d in (1..=f).filter(|d| f.is_multiple_of(*d)) {
        let term = num_traits::pow(BigInt::from(p), (f / d) as usize);
        match mobius(d) {
            1 => sum += term,
            -1 => sum -= term,
            _ => {}
        }
    }
    let (q, r) = sum.div_rem(&BigInt::from(f));
    debug_assert!(r.is_zero());
    q.to_biguint().unwrap_or_else(BigUint::one)
}
