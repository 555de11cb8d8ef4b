//! First-order Newton polygons (Ore's method).
//!
//! For a monic `F` and a lift `phi` of an irreducible factor of `F mod p`,
//! the principal polygon of the phi-expansion gives the ramification data,
//! the residual polynomials of its sides give the residue degrees, and when
//! every residual polynomial is squarefree (`F` is regular) the splitting of
//! `p` and the p-part of the index `(Z_K : Z[alpha])` follow exactly.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{check_prime, prime_power, Valuation};
use crate::gf::{Factorization, FieldPoly, GaloisField};
use crate::intpoly::IntPoly;
use crate::{Error, Result};

/// Lifts tried per irreducible factor before giving up on regularity.
const MAX_LIFT_ATTEMPTS: usize = 64;

/// `F = sum a_i(x) phi(x)^i` with `deg a_i < deg phi`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiExpansion {
    base: IntPoly,
    coeffs: Vec<IntPoly>,
}

impl PhiExpansion {
    pub fn base(&self) -> &IntPoly {
        &self.base
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    pub fn reconstruct(&self) -> IntPoly {
        let mut acc = IntPoly::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &self.base) + a;
        }
        acc
    }

    /// `v_p(a_i)` for every coefficient, the valuation of a polynomial being
    /// the minimum over its coefficients.
    pub fn valuations(&self, p: u64) -> Vec<Valuation> {
        self.coeffs.iter().map(|a| a.valuation(p)).collect()
    }
}

pub fn phi_expand(f: &IntPoly, phi: &IntPoly) -> Result<PhiExpansion> {
    if !phi.is_monic() {
        return Err(Error::NotMonic(phi.to_string()));
    }
    if phi.degree() == Some(0) {
        return Err(Error::NotMonic(format!("{phi} has degree 0")));
    }
    let mut coeffs = Vec::new();
    let mut rest = f.clone();
    while !rest.is_zero() {
        let (q, r) = rest.divrem_monic(phi)?;
        coeffs.push(r);
        rest = q;
    }
    Ok(PhiExpansion { base: phi.clone(), coeffs })
}

/// A side of slope `-h/e` from `start` to `end`; `length = e * degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Side {
    pub start: (u32, u32),
    pub end: (u32, u32),
    pub h: u32,
    pub e: u32,
    pub length: u32,
    pub degree: u32,
}

impl Side {
    fn between(start: (u32, u32), end: (u32, u32)) -> Self {
        let length = end.0 - start.0;
        let height = start.1 - end.1;
        let g = length.gcd(&height);
        Side { start, end, h: height / g, e: length / g, length, degree: g }
    }

    /// `floor` of the side's height above abscissa `x`.
    fn floor_height(&self, x: u32) -> u32 {
        let num = self.start.1 as u64 * self.length as u64 - (x - self.start.0) as u64 * (self.start.1 - self.end.1) as u64;
        (num / self.length as u64) as u32
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{})->({},{}) slope -{}/{} length {} degree {}",
            self.start.0, self.start.1, self.end.0, self.end.1, self.h, self.e, self.length, self.degree
        )
    }
}

/// The principal part `N^+` of the phi-Newton polygon.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrincipalPolygon {
    pub points: Vec<(u32, Valuation)>,
    pub vertices: Vec<(u32, u32)>,
    pub sides: Vec<Side>,
}

impl PrincipalPolygon {
    /// Abscissa of the last vertex: the multiplicity of `phi mod p` in `F mod p`.
    pub fn length(&self) -> u32 {
        self.vertices.last().map_or(0, |v| v.0)
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }
}

impl fmt::Display for PrincipalPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(|(x, y)| format!("({x},{y})")).collect();
        write!(f, "vertices {}", vs.join(", "))
    }
}

pub fn principal_polygon(exp: &PhiExpansion, p: u64) -> Result<PrincipalPolygon> {
    check_prime(p)?;
    let vals = exp.valuations(p);
    Ok(polygon_from_valuations(&vals))
}

fn polygon_from_valuations(vals: &[Valuation]) -> PrincipalPolygon {
    let Some(l) = vals.iter().position(|v| *v == Valuation::Finite(0)) else {
        return PrincipalPolygon::default();
    };
    let points: Vec<(u32, Valuation)> = vals[..=l].iter().enumerate().map(|(i, v)| (i as u32, *v)).collect();
    if l == 0 {
        return PrincipalPolygon { points, ..Default::default() };
    }
    let mut hull: Vec<(u32, u32)> = Vec::new();
    for &(x, v) in &points {
        let Some(y) = v.finite() else { continue };
        let y = y as i64;
        while hull.len() >= 2 {
            let (x1, y1) = hull[hull.len() - 2];
            let (x2, y2) = hull[hull.len() - 1];
            // drop the middle point unless it lies strictly below the chord
            let cross = (x2 as i64 - x1 as i64) * (y - y1 as i64) - (y2 as i64 - y1 as i64) * (x as i64 - x1 as i64);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push((x, y as u32));
    }
    let sides = hull.windows(2).map(|w| Side::between(w[0], w[1])).collect();
    PrincipalPolygon { points, vertices: hull, sides }
}

/// `deg(phi)` times the number of lattice points `(i, j)`, `i, j >= 1`, on
/// or below the polygon.
pub fn ore_index(poly: &PrincipalPolygon, phi_degree: u32) -> u64 {
    let mut count = 0u64;
    for side in &poly.sides {
        for x in side.start.0.max(1)..side.end.0 {
            count += side.floor_height(x) as u64;
        }
    }
    count * phi_degree as u64
}

/// Residual polynomial of `side` over `F_phi`; `side` must be a side of the
/// principal polygon of `exp`.
pub fn residual_poly(exp: &PhiExpansion, p: u64, side: &Side) -> Result<FieldPoly> {
    let poly = principal_polygon(exp, p)?;
    if !poly.sides.contains(side) {
        return Err(Error::SideNotOnPolygon);
    }
    let phi_bar = FieldPoly::from_int_poly(GaloisField::prime(p)?, exp.base());
    let field = GaloisField::residue_field(&phi_bar)?;
    Ok(residual_in(exp, p, side, field))
}

fn residual_in(exp: &PhiExpansion, p: u64, side: &Side, field: Arc<GaloisField>) -> FieldPoly {
    let coeffs = (0..=side.degree)
        .map(|i| {
            let x = (side.start.0 + i * side.e) as usize;
            let y = side.start.1 - i * side.h;
            let a = &exp.coeffs[x];
            if a.valuation(p) != Valuation::Finite(y) {
                return 0;
            }
            let scaled = a.div_exact(&prime_power(p, y));
            let digits: Vec<u64> = scaled.coeffs().iter().map(|c| crate::arith::residue(c, p)).collect();
            field.from_poly(&digits)
        })
        .collect();
    FieldPoly::new(field, coeffs)
}

/// Ramification index / residue degree pairs of the primes above `p`,
/// kept sorted by `(f, e)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SplittingType {
    primes: Vec<(u32, u32)>,
}

impl SplittingType {
    /// Builds a splitting from `(e, f)` pairs in any order.
    pub fn new(mut primes: Vec<(u32, u32)>) -> Self {
        primes.sort_by_key(|&(e, f)| (f, e));
        SplittingType { primes }
    }

    pub fn primes(&self) -> &[(u32, u32)] {
        &self.primes
    }

    /// `sum e * f`, the degree of the field.
    pub fn mass(&self) -> u32 {
        self.primes.iter().map(|(e, f)| e * f).sum()
    }

    /// Number of primes of residue degree `f`.
    pub fn count_of_degree(&self, f: u32) -> usize {
        self.primes.iter().filter(|p| p.1 == f).count()
    }

    pub fn residue_degrees(&self) -> Vec<u32> {
        let mut fs: Vec<u32> = self.primes.iter().map(|p| p.1).collect();
        fs.dedup();
        fs
    }

    pub fn is_tame(&self, p: u64) -> bool {
        self.primes.iter().all(|(e, _)| !(*e as u64).is_multiple_of(p))
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.primes.iter().map(|(e, g)| format!("({e},{g})")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Polygon data of one side together with its residual polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideAnalysis {
    pub side: Side,
    pub residual: FieldPoly,
    pub factors: Factorization,
}

/// Everything the first-order method says about one lift `phi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiAnalysis {
    pub phi: IntPoly,
    pub expansion: PhiExpansion,
    pub polygon: PrincipalPolygon,
    pub sides: Vec<SideAnalysis>,
    pub index: u64,
}

impl PhiAnalysis {
    pub fn multiplicity(&self) -> u32 {
        self.polygon.length()
    }

    pub fn is_regular(&self) -> bool {
        self.sides.iter().all(|s| s.factors.is_squarefree())
    }

    /// Primes contributed by this factor (meaningful only when regular).
    pub fn primes(&self) -> Vec<(u32, u32)> {
        let deg = self.phi.degree().unwrap_or(0) as u32;
        let mut out = Vec::new();
        for s in &self.sides {
            for (psi, _) in &s.factors.factors {
                out.push((s.side.e, deg * psi.degree().unwrap_or(0) as u32));
            }
        }
        out
    }
}

pub fn analyze_phi(f: &IntPoly, phi: &IntPoly, p: u64) -> Result<PhiAnalysis> {
    check_prime(p)?;
    let expansion = phi_expand(f, phi)?;
    let polygon = polygon_from_valuations(&expansion.valuations(p));
    if polygon.length() == 0 {
        return Err(Error::PhiNotAFactor(p));
    }
    let phi_bar = FieldPoly::from_int_poly(GaloisField::prime(p)?, phi);
    let field = GaloisField::residue_field(&phi_bar)?;
    let mut sides = Vec::with_capacity(polygon.sides.len());
    for side in &polygon.sides {
        let residual = residual_in(&expansion, p, side, field.clone());
        let factors = residual.factor()?;
        sides.push(SideAnalysis { side: *side, residual, factors });
    }
    let index = ore_index(&polygon, phi.degree().unwrap_or(0) as u32);
    Ok(PhiAnalysis { phi: phi.clone(), expansion, polygon, sides, index })
}

/// Outcome of Ore's theorem for a regular `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreDecomposition {
    pub splitting: SplittingType,
    /// `v_p((Z_K : Z[alpha]))`.
    pub index: u64,
    /// Accepted lift analyses for the repeated factors of `F mod p`.
    pub analyses: Vec<PhiAnalysis>,
}

/// Per-factor regularity with the first lift tried for each factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    pub regular: bool,
    pub analyses: Vec<PhiAnalysis>,
}

fn repeated_factors(f: &IntPoly, p: u64) -> Result<(Vec<FieldPoly>, Vec<(u32, u32)>)> {
    if !f.is_monic() {
        return Err(Error::NotMonic(f.to_string()));
    }
    let fbar = FieldPoly::from_int_poly(GaloisField::prime(p)?, f);
    let mut repeated = Vec::new();
    let mut simple = Vec::new();
    for (phi, m) in fbar.factor()?.factors {
        if m == 1 {
            simple.push((1, phi.degree().unwrap() as u32));
        } else {
            repeated.push(phi);
        }
    }
    Ok((repeated, simple))
}

fn matching_hint<'a>(phi_bar: &FieldPoly, hints: &'a [IntPoly]) -> impl Iterator<Item = &'a IntPoly> + 'a {
    let phi_bar = phi_bar.clone();
    hints
        .iter()
        .filter(move |h| h.is_monic() && FieldPoly::from_int_poly(phi_bar.field().clone(), h) == phi_bar)
}

/// Regularity of `F` at `p` using one lift per repeated factor: the first
/// matching hint, otherwise the canonical lift.
pub fn regularity(f: &IntPoly, p: u64, hints: &[IntPoly]) -> Result<RegularityReport> {
    let (repeated, _) = repeated_factors(f, p)?;
    let mut analyses = Vec::new();
    for phi_bar in repeated {
        let lift = match matching_hint(&phi_bar, hints).next() {
            Some(h) => h.clone(),
            None => phi_bar.to_int_poly()?,
        };
        analyses.push(analyze_phi(f, &lift, p)?);
    }
    let regular = analyses.iter().all(PhiAnalysis::is_regular);
    Ok(RegularityReport { regular, analyses })
}

pub fn is_p_regular(f: &IntPoly, p: u64) -> Result<bool> {
    Ok(regularity(f, p, &[])?.regular)
}

/// Lifts `phi - c(x) p^h` for every repeated linear factor `y - c` of a
/// residual polynomial on an integral-slope side.
fn refinements(an: &PhiAnalysis, p: u64) -> Vec<IntPoly> {
    let mut out = Vec::new();
    for s in &an.sides {
        if s.side.e != 1 {
            continue;
        }
        for (psi, m) in &s.factors.factors {
            if *m < 2 || psi.degree() != Some(1) {
                continue;
            }
            let field = psi.field();
            let root = field.neg(psi.coeff(0));
            let c: Vec<BigInt> = field.element_coeffs(root).into_iter().map(BigInt::from).collect();
            let shift = IntPoly::new(c).scale(&prime_power(p, s.side.h));
            out.push(&an.phi - &shift);
        }
    }
    out
}

/// Ore's theorem: splitting of `p` and `v_p` of the index, searching over
/// lifts (canonical, then `hints`, then refinements of non-regular sides)
/// for one that makes every factor regular.
pub fn ore_decompose(f: &IntPoly, p: u64, hints: &[IntPoly]) -> Result<OreDecomposition> {
    let (repeated, mut primes) = repeated_factors(f, p)?;
    let mut analyses = Vec::new();
    let mut index = 0;
    for phi_bar in repeated {
        let mut queue: VecDeque<IntPoly> = VecDeque::new();
        queue.push_back(phi_bar.to_int_poly()?);
        queue.extend(matching_hint(&phi_bar, hints).cloned());
        let mut seen: Vec<IntPoly> = Vec::new();
        let mut accepted = None;
        while let Some(lift) = queue.pop_front() {
            if seen.len() >= MAX_LIFT_ATTEMPTS {
                break;
            }
            if seen.contains(&lift) {
                continue;
            }
            seen.push(lift.clone());
            let an = analyze_phi(f, &lift, p)?;
            if an.is_regular() {
                accepted = Some(an);
                break;
            }
            queue.extend(refinements(&an, p));
        }
        let an = accepted.ok_or(Error::NotRegular(p))?;
        primes.extend(an.primes());
        index += an.index;
        analyses.push(an);
    }
    Ok(OreDecomposition { splitting: SplittingType::new(primes), index, analyses })
}

pub fn ore_split(f: &IntPoly, p: u64) -> Result<SplittingType> {
    Ok(ore_decompose(f, p, &[])?.splitting)
}

/// Dedekind's criterion: with `F = prod phi_i^{l_i} mod p`, `g = prod phi_i`,
/// `h = F/g mod p` and `T = (g h - F)/p`, `p` divides `(Z_K : Z[alpha])` iff
/// `gcd(g, h, T) != 1` mod `p`.
pub fn dedekind_divides(f: &IntPoly, p: u64) -> Result<bool> {
    if !f.is_monic() {
        return Err(Error::NotMonic(f.to_string()));
    }
    let field = GaloisField::prime(p)?;
    let fbar = FieldPoly::from_int_poly(field.clone(), f);
    let fac = fbar.factor()?;
    let mut gbar = FieldPoly::one(field.clone());
    for (phi, _) in &fac.factors {
        gbar = &gbar * phi;
    }
    let hbar = fbar.divrem(&gbar)?.0;
    let g = gbar.to_int_poly()?;
    let h = hbar.to_int_poly()?;
    let diff = &(&g * &h) - f;
    let pb = BigInt::from(p);
    debug_assert!(diff.coeffs().iter().all(|c| c.mod_floor(&pb).is_zero()));
    let t = FieldPoly::from_int_poly(field, &diff.div_exact(&pb));
    Ok(!gbar.gcd(&hbar).gcd(&t).is_one())
}
