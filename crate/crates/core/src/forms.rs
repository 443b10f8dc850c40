//! Indefinite binary quadratic forms `ax^2 + bxy + cy^2`.
//!
//! Classes are taken under `PSL(2,Z)` (narrow classes). Every comparison
//! with `sqrt(D)` is done on integers.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::word::Mat;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadForm {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl QuadForm {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Self {
        QuadForm { a, b, c }
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Self {
        QuadForm::new(a.into(), b.into(), c.into())
    }

    pub fn discriminant(&self) -> BigInt {
        &self.b * &self.b - 4 * &self.a * &self.c
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x * x + &self.b * x * y + &self.c * y * y
    }

    pub fn content(&self) -> BigInt {
        self.a.gcd(&self.b).gcd(&self.c)
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// `(a, -b, c)`, the inverse class.
    pub fn opposite(&self) -> QuadForm {
        QuadForm::new(self.a.clone(), -&self.b, self.c.clone())
    }

    /// Change of variables `f(px + qy, rx + sy)`. This is a right action:
    /// acting by `m1 m2` is acting by `m1`, then by `m2`.
    pub fn act(&self, m: &Mat) -> QuadForm {
        let (p, q, r, s) = (&m.p, &m.q, &m.r, &m.s);
        QuadForm {
            a: self.eval(p, r),
            b: 2 * &self.a * p * q + &self.b * (p * s + q * r) + 2 * &self.c * r * s,
            c: self.eval(q, s),
        }
    }

    /// Checks the module scope: positive non-square discriminant and a
    /// primitive form. Returns the discriminant.
    pub fn validate(&self) -> Result<BigInt> {
        let d = self.discriminant();
        check_discriminant_sign(&d)?;
        if !self.is_primitive() {
            return Err(Error::NotPrimitive(self.to_string()));
        }
        Ok(d)
    }

    /// `0 < b < sqrt(D)` and `sqrt(D) - b < 2|a| < sqrt(D) + b`.
    pub fn is_reduced(&self) -> bool {
        let d = self.discriminant();
        if !d.is_positive() || !self.b.is_positive() || &self.b * &self.b >= d {
            return false;
        }
        let a2 = 2 * self.a.abs();
        let lo: BigInt = &a2 + &self.b;
        if lo.pow(2) <= d {
            return false;
        }
        let hi: BigInt = &a2 - &self.b;
        !hi.is_positive() || hi.pow(2) < d
    }

    /// One reduction step `(a, b, c) -> (c, b', c')` with `b' = -b mod 2c`.
    /// Returns the new form and the matrix `S T^k` of the step.
    pub fn rho_with_matrix(&self) -> (QuadForm, Mat) {
        let d = self.discriminant();
        let s = d.sqrt();
        let c_abs = self.c.abs();
        let m = 2 * &c_abs;
        let b_new = if &c_abs * &c_abs < d {
            &s - (&s + &self.b).mod_floor(&m)
        } else {
            let r = (-&self.b).mod_floor(&m);
            if r > c_abs {
                r - &m
            } else {
                r
            }
        };
        let k = (&b_new + &self.b) / (2 * &self.c);
        let c_new = (&b_new * &b_new - &d) / (4 * &self.c);
        let step = Mat::new(BigInt::zero(), -BigInt::one(), BigInt::one(), k)
            .expect("determinant one");
        (QuadForm::new(self.c.clone(), b_new, c_new), step)
    }

    pub fn rho(&self) -> QuadForm {
        self.rho_with_matrix().0
    }

    /// A reduced form `g` and a matrix `m` with `act(m, f) = g`.
    pub fn reduce(&self) -> Result<(QuadForm, Mat)> {
        self.validate()?;
        Ok(self.reduce_unchecked())
    }

    fn reduce_unchecked(&self) -> (QuadForm, Mat) {
        let mut f = self.clone();
        let mut m = Mat::identity();
        while !f.is_reduced() {
            let (g, step) = f.rho_with_matrix();
            m = m.mul(&step);
            f = g;
        }
        (f, m)
    }

    /// Number of steps [`QuadForm::reduce`] takes.
    pub fn reduction_steps(&self) -> Result<usize> {
        self.validate()?;
        let mut f = self.clone();
        let mut n = 0;
        while !f.is_reduced() {
            f = f.rho();
            n += 1;
        }
        Ok(n)
    }

    pub fn cycle(&self) -> Result<FormClass> {
        let (start, _) = self.reduce()?;
        Ok(FormClass::from_reduced(start))
    }

    pub fn equivalent(&self, other: &QuadForm) -> Result<bool> {
        let (d1, d2) = (self.discriminant(), other.discriminant());
        if d1 != d2 {
            return Err(Error::DiscriminantMismatch(d1.to_string(), d2.to_string()));
        }
        Ok(self.cycle()? == other.cycle()?)
    }

    /// The least positive value of the form on nonzero integer vectors.
    pub fn minimum(&self) -> Result<BigInt> {
        let class = self.cycle()?;
        Ok(class
            .forms()
            .iter()
            .map(|g| g.a.clone())
            .filter(|a| a.is_positive())
            .min()
            .expect("every cycle holds forms of both signs"))
    }

    /// The fundamental automorph `((t - bu)/2, -cu; au, (t + bu)/2)`.
    pub fn automorph(&self) -> Result<Mat> {
        let d = self.validate()?;
        let PellSolution { t, u } = pell_fundamental(&d)?;
        Ok(Mat::new(
            (&t - &self.b * &u) / 2,
            -&self.c * &u,
            &self.a * &u,
            (&t + &self.b * &u) / 2,
        )
        .expect("Pell identity gives determinant one"))
    }

    /// Decides whether `f(x, y) = n` is solvable, with a witness.
    pub fn represents(&self, n: &BigInt) -> Result<Representation> {
        if n.is_zero() {
            return Err(Error::ZeroTarget);
        }
        let d = self.validate()?;
        let (start, to_start) = self.reduce_unchecked();
        // every reduced form of the class, with a matrix from `self` to it
        let mut members = Vec::new();
        let mut g = start.clone();
        let mut m = to_start;
        loop {
            members.push((g.clone(), m.clone()));
            let (h, step) = g.rho_with_matrix();
            m = m.mul(&step);
            g = h;
            if g == start {
                break;
            }
        }

        let mut candidates = Vec::new();
        let abs_n = n.abs();
        let mut e = BigInt::one();
        while &e * &e <= abs_n {
            if (n % (&e * &e)).is_zero() {
                let k = n / (&e * &e);
                let modulus = 4 * k.abs();
                let mut beta = BigInt::zero();
                let top = 2 * k.abs();
                while beta < top {
                    if (&beta * &beta - &d).mod_floor(&modulus).is_zero() {
                        let cand = QuadForm::new(k.clone(), beta.clone(), (&beta * &beta - &d) / (4 * &k));
                        if cand.is_primitive() {
                            let (red, to_red) = cand.reduce_unchecked();
                            if let Some((_, to_member)) = members.iter().find(|(f, _)| *f == red) {
                                // act(to_member * to_red^-1, self) = cand, and cand(1, 0) = k
                                let p = to_member.mul(&to_red.inverse());
                                let x = &p.p * &e;
                                let y = &p.r * &e;
                                debug_assert_eq!(&self.eval(&x, &y), n);
                                return Ok(Representation::Present { x, y });
                            }
                            candidates.push(cand);
                        }
                    }
                    beta += 1;
                }
            }
            e += 1;
        }
        Ok(Representation::Absent { candidates })
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

impl FromStr for QuadForm {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::parse("form", text);
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(&t);
        let parts: Vec<&str> = t.split(',').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let n: Vec<BigInt> = parts
            .iter()
            .map(|p| p.parse::<BigInt>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        Ok(QuadForm::new(n[0].clone(), n[1].clone(), n[2].clone()))
    }
}

/// The reduced forms of one class, in `rho` order.
#[derive(Debug, Clone)]
pub struct FormClass {
    forms: Vec<QuadForm>,
}

impl FormClass {
    fn from_reduced(start: QuadForm) -> Self {
        let mut forms = vec![start.clone()];
        let mut g = start.rho();
        while g != start {
            forms.push(g.clone());
            g = g.rho();
        }
        FormClass { forms }
    }

    /// Starting from the reduced form reached by [`QuadForm::reduce`].
    pub fn forms(&self) -> &[QuadForm] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn discriminant(&self) -> BigInt {
        self.forms[0].discriminant()
    }

    /// The least member; equal classes have equal keys.
    pub fn key(&self) -> &QuadForm {
        self.forms.iter().min().expect("nonempty cycle")
    }

    pub fn contains(&self, f: &QuadForm) -> bool {
        self.forms.contains(f)
    }
}

impl PartialEq for FormClass {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for FormClass {}

fn is_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}

fn check_discriminant_sign(d: &BigInt) -> Result<()> {
    if d.is_negative() {
        return Err(Error::BadDiscriminant(d.to_string()));
    }
    if is_square(d) {
        return Err(Error::SquareDiscriminant(d.to_string()));
    }
    Ok(())
}

/// Positive, non-square and `0` or `1` mod 4.
pub fn check_discriminant(d: &BigInt) -> Result<()> {
    let r = d.mod_floor(&BigInt::from(4));
    if !d.is_positive() || is_square(d) || r > BigInt::one() {
        return Err(Error::BadDiscriminant(d.to_string()));
    }
    Ok(())
}

/// `(1, s, (s^2 - D)/4)` with `s = D mod 2`.
pub fn principal_form(d: &BigInt) -> Result<QuadForm> {
    check_discriminant(d)?;
    let s = d.mod_floor(&BigInt::from(2));
    let c = (&s * &s - d) / 4;
    Ok(QuadForm::new(BigInt::one(), s, c))
}

/// Gauss product of two primitive forms of the same discriminant, reduced.
pub fn compose(f1: &QuadForm, f2: &QuadForm) -> Result<QuadForm> {
    let d = f1.validate()?;
    let d2 = f2.validate()?;
    if d != d2 {
        return Err(Error::DiscriminantMismatch(d.to_string(), d2.to_string()));
    }
    let (a1, b1) = (&f1.a, &f1.b);
    let (a2, b2, c2) = (&f2.a, &f2.b, &f2.c);
    let s = (b1 + b2) / 2;
    let n = b2 - &s;
    // u a1 + v a2 + w s = e
    let g1 = a1.extended_gcd(a2);
    let g2 = g1.gcd.extended_gcd(&s);
    let e = g2.gcd;
    let (v, w) = (&g1.y * &g2.x, g2.y);
    let a3 = a1 * a2 / (&e * &e);
    let shift: BigInt = 2 * (a2 / &e) * (-&v * &n - &w * c2);
    let b3 = (b2 + shift).mod_floor(&(2 * a3.abs()));
    let num: BigInt = &b3 * &b3 - &d;
    let den: BigInt = 4 * &a3;
    debug_assert!((&num % &den).is_zero());
    let f3 = QuadForm::new(a3, b3, num / den);
    Ok(f3.reduce_unchecked().0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellSolution {
    pub t: BigInt,
    pub u: BigInt,
}

/// Least positive `(t, u)` with `t^2 - D u^2 = 4`, from the continued
/// fraction of `(s + sqrt(D))/2` (`s = D mod 2`) when `D` is `0` or `1`
/// mod 4, and of `sqrt(D)` otherwise.
pub fn pell_fundamental(d: &BigInt) -> Result<PellSolution> {
    if !d.is_positive() {
        return Err(Error::BadDiscriminant(d.to_string()));
    }
    if is_square(d) {
        return Err(Error::SquareDiscriminant(d.to_string()));
    }
    let r4 = d.mod_floor(&BigInt::from(4));
    let half = r4 <= BigInt::one();
    let sigma = if half { d.mod_floor(&BigInt::from(2)) } else { BigInt::zero() };
    let root = d.sqrt();
    let (mut p, mut q) = if half { (sigma.clone(), BigInt::from(2)) } else { (BigInt::zero(), BigInt::one()) };
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let four = BigInt::from(4);
    loop {
        let a = if q.is_positive() {
            (&p + &root).div_floor(&q)
        } else {
            -(&p + &root).div_floor(&-&q) - 1
        };
        let h = &a * &h1 + &h0;
        let k = &a * &k1 + &k0;
        let (t, u) = if half {
            (2 * &h - &k * &sigma, k.clone())
        } else {
            (2 * &h, 2 * &k)
        };
        if &t * &t - d * &u * &u == four {
            return Ok(PellSolution { t, u });
        }
        h0 = std::mem::replace(&mut h1, h);
        k0 = std::mem::replace(&mut k1, k);
        p = &a * &q - &p;
        q = (d - &p * &p) / &q;
    }
}

/// Outcome of [`QuadForm::represents`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Representation {
    Present { x: BigInt, y: BigInt },
    /// Every primitive form `(k, beta, .)` with `k e^2 = N` that could carry
    /// a representation, none of them in the class of `f`.
    Absent { candidates: Vec<QuadForm> },
}

impl Representation {
    pub fn is_present(&self) -> bool {
        matches!(self, Representation::Present { .. })
    }
}

/// Sharding options for [`class_number_with`].
#[derive(Debug, Clone, Copy)]
pub struct ClassNumberOptions {
    /// Largest discriminant accepted.
    pub limit: Option<u128>,
    pub jobs: usize,
}

impl Default for ClassNumberOptions {
    fn default() -> Self {
        ClassNumberOptions { limit: None, jobs: 1 }
    }
}

pub const DEFAULT_CLASS_NUMBER_LIMIT: u128 = 1_000_000_000;

fn reduced_forms_for_b(d: u128, root: u128, b: u128, out: &mut Vec<(i128, i128, i128)>) {
    let m = (d - b * b) / 4;
    let ok = |a: u128| {
        let a2 = 2 * a;
        // sqrt(D) - b < 2|a| < sqrt(D) + b
        a2 + b > root && (a2 <= b || a2 - b <= root)
    };
    let mut push = |a: u128| {
        if ok(a) {
            let (a, c) = (a as i128, (m / a) as i128);
            let bi = b as i128;
            if a.gcd(&bi).gcd(&c) == 1 {
                out.push((a, bi, -c));
                out.push((-a, bi, c));
            }
        }
    };
    let mut x = 1;
    while x * x <= m {
        if m % x == 0 {
            push(x);
            if x * x != m {
                push(m / x);
            }
        }
        x += 1;
    }
}

/// Every primitive reduced form of discriminant `D`, sorted.
pub fn reduced_forms(d: &BigInt) -> Result<Vec<QuadForm>> {
    reduced_forms_with(d, ClassNumberOptions::default())
}

fn reduced_forms_with(d: &BigInt, opts: ClassNumberOptions) -> Result<Vec<QuadForm>> {
    check_discriminant(d)?;
    let limit = opts.limit.unwrap_or(DEFAULT_CLASS_NUMBER_LIMIT);
    let dd = match d.to_u128() {
        Some(x) if x <= limit => x,
        _ => return Err(Error::LimitExceeded(format!("discriminant {d}"), limit.to_string())),
    };
    // with sqrt(D) irrational, b < sqrt(D) iff b <= isqrt(D)
    let root = dd.sqrt();
    let bs: Vec<u128> = (1..=root).filter(|b| (dd - b * b) % 4 == 0).collect();
    let jobs = opts.jobs.max(1).min(bs.len().max(1));
    let mut all: Vec<(i128, i128, i128)> = if jobs == 1 {
        let mut out = Vec::new();
        for &b in &bs {
            reduced_forms_for_b(dd, root, b, &mut out);
        }
        out
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|j| {
                    let bs = &bs;
                    scope.spawn(move || {
                        let mut out = Vec::new();
                        for &b in bs.iter().skip(j).step_by(jobs) {
                            reduced_forms_for_b(dd, root, b, &mut out);
                        }
                        out
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("worker panicked"))
                .collect()
        })
    };
    all.sort_unstable();
    Ok(all
        .into_iter()
        .map(|(a, b, c)| QuadForm::new(a.into(), b.into(), c.into()))
        .collect())
}

/// The reduced forms of discriminant `D`, split into `rho` cycles.
pub fn classes(d: &BigInt) -> Result<Vec<FormClass>> {
    classes_with(d, ClassNumberOptions::default())
}

pub fn classes_with(d: &BigInt, opts: ClassNumberOptions) -> Result<Vec<FormClass>> {
    let forms = reduced_forms_with(d, opts)?;
    let mut seen: HashSet<QuadForm> = HashSet::with_capacity(forms.len());
    let mut out = Vec::new();
    for f in forms {
        if seen.contains(&f) {
            continue;
        }
        let class = FormClass::from_reduced(f);
        seen.extend(class.forms().iter().cloned());
        out.push(class);
    }
    Ok(out)
}

/// Number of narrow classes of primitive forms of discriminant `D`.
pub fn class_number(d: &BigInt) -> Result<usize> {
    class_number_with(d, ClassNumberOptions::default())
}

pub fn class_number_with(d: &BigInt, opts: ClassNumberOptions) -> Result<usize> {
    Ok(classes_with(d, opts)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(a: i64, b: i64, c: i64) -> QuadForm {
        QuadForm::from_i64(a, b, c)
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn discriminants() {
        assert_eq!(f(1, 1, -1).discriminant(), big(5));
        assert_eq!(f(1, 0, -2).discriminant(), big(8));
        assert_eq!(f(0, 1, 0).discriminant(), big(1));
    }

    #[test]
    fn action() {
        let s = Mat::from_i64(0, -1, 1, 0).unwrap();
        assert_eq!(f(1, 1, -1).act(&s), f(-1, -1, 1));
        assert_eq!(f(3, 5, -7).act(&Mat::identity()), f(3, 5, -7));
        let g = f(1, -1, -1);
        assert_eq!(g.act(&g.automorph().unwrap()), g);
    }

    #[test]
    fn reducedness() {
        assert!(f(1, 1, -1).is_reduced());
        assert!(f(1, 3, -1).is_reduced());
        assert!(!f(5, 1, -1).is_reduced());
    }

    #[test]
    fn rho_steps() {
        assert_eq!(f(1, 1, -1).rho(), f(-1, 1, 1));
        assert_eq!(f(-1, 1, 1).rho(), f(1, 1, -1));
        assert!(f(3, 1, -1).reduction_steps().unwrap() <= 3);
        for g in [f(1, 5, 5), f(-1, -1, 1), f(17, 41, -3)] {
            let (r, m) = g.reduce().unwrap();
            assert!(r.is_reduced());
            assert_eq!(g.act(&m), r);
        }
        assert_eq!(f(1, 1, -1).reduce().unwrap(), (f(1, 1, -1), Mat::identity()));
    }

    #[test]
    fn cycles() {
        assert_eq!(f(1, 1, -1).cycle().unwrap().forms(), &[f(1, 1, -1), f(-1, 1, 1)]);
        let c = f(1, 0, -2).cycle().unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.contains(&f(1, 2, -1)) && c.contains(&f(-1, 2, 1)));
        assert_eq!(f(1, 3, -1).cycle().unwrap().len(), 2);
    }

    #[test]
    fn errors() {
        assert_eq!(f(1, 0, -1).reduce().unwrap_err().code(), "SquareDiscriminant");
        assert_eq!(f(2, 2, -2).reduce().unwrap_err().code(), "NotPrimitive");
        assert_eq!(class_number(&big(7)).unwrap_err().code(), "BadDiscriminant");
        assert_eq!(class_number(&big(16)).unwrap_err().code(), "BadDiscriminant");
        assert_eq!(f(1, 1, -1).represents(&big(0)).unwrap_err(), Error::ZeroTarget);
        assert_eq!(
            f(1, 1, -1).equivalent(&f(1, 0, -2)).unwrap_err().code(),
            "DiscriminantMismatch"
        );
        assert_eq!(pell_fundamental(&big(9)).unwrap_err().code(), "SquareDiscriminant");
    }

    #[test]
    fn class_numbers() {
        for (d, h) in [(5, 1), (8, 1), (12, 2), (13, 1), (60, 4), (145, 4)] {
            assert_eq!(class_number(&big(d)).unwrap(), h, "D={d}");
        }
        let opts = ClassNumberOptions { limit: None, jobs: 4 };
        assert_eq!(class_number_with(&big(1_000_001), opts).unwrap(), class_number(&big(1_000_001)).unwrap());
        let opts = ClassNumberOptions { limit: Some(100), jobs: 1 };
        assert_eq!(class_number_with(&big(101), opts).unwrap_err().code(), "LimitExceeded");
    }

    #[test]
    fn principal_forms() {
        assert_eq!(principal_form(&big(5)).unwrap(), f(1, 1, -1));
        assert_eq!(principal_form(&big(8)).unwrap(), f(1, 0, -2));
        assert_eq!(principal_form(&big(13)).unwrap(), f(1, 1, -3));
    }

    #[test]
    fn pell() {
        let sol = |d: i64| {
            let p = pell_fundamental(&big(d)).unwrap();
            (p.t, p.u)
        };
        assert_eq!(sol(5), (big(3), big(1)));
        assert_eq!(sol(8), (big(6), big(2)));
        assert_eq!(sol(13), (big(11), big(3)));
        assert_eq!(sol(2), (big(6), big(4)));
        assert_eq!(sol(3), (big(4), big(2)));
    }

    #[test]
    fn composition() {
        let d = big(12);
        let p = principal_form(&d).unwrap();
        let g = f(-1, 2, 2);
        assert!(compose(&p, &g).unwrap().equivalent(&g).unwrap());
        assert!(compose(&g, &g).unwrap().equivalent(&p).unwrap());
        assert!(compose(&g, &g.opposite()).unwrap().equivalent(&p).unwrap());
    }

    #[test]
    fn minima() {
        assert_eq!(f(1, 1, -1).minimum().unwrap(), big(1));
        assert_eq!(f(-1, 1, 1).minimum().unwrap(), big(1));
        assert_eq!(f(-1, 2, 2).minimum().unwrap(), big(2));
    }

    #[test]
    fn representations() {
        let g = f(1, -1, -1);
        match g.represents(&big(5)).unwrap() {
            Representation::Present { x, y } => assert_eq!(g.eval(&x, &y), big(5)),
            r => panic!("{r:?}"),
        }
        assert!(!g.represents(&big(2)).unwrap().is_present());
        let h = f(7, 3, -2);
        assert!(h.represents(&big(7)).unwrap().is_present());
        // imprimitive: 4 = f(2, 0)
        match g.represents(&big(4)).unwrap() {
            Representation::Present { x, y } => assert_eq!(g.eval(&x, &y), big(4)),
            r => panic!("{r:?}"),
        }
    }

    #[test]
    fn equivalence() {
        assert!(f(1, 1, -1).equivalent(&f(-1, 1, 1)).unwrap());
        assert!(!f(1, 2, -2).equivalent(&f(-1, 2, 2)).unwrap());
    }
}
