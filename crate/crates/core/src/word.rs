//! Exact algebra in the modular group `PSL(2,Z) = Z/2 * Z/3`.
//!
//! Elements are kept as reduced words over the generators
//!
//! ```text
//! S = ( 0 -1 )      L = ( 1 -1 )
//!     ( 1  0 )          ( 1  0 )
//! ```
//!
//! with `S^2 = L^3 = 1`. A reduced word alternates between `S` and one of
//! `L`, `LL`; this normal form is unique, so word equality is group
//! equality. [`Mat`] is the matching integer matrix, stored with the sign
//! chosen so that the first nonzero entry is positive.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A letter of a reduced word. The derived order `L < LL < S` is the one
/// used to pick conjugacy representatives, so a cyclically reduced word of
/// even length is always represented starting with `L` or `LL`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    L,
    LL,
    S,
}

impl Letter {
    /// Exponent of `L` carried by the letter, `0` for `S`.
    fn l_exponent(self) -> u8 {
        match self {
            Letter::S => 0,
            Letter::L => 1,
            Letter::LL => 2,
        }
    }

    fn from_l_exponent(e: u8) -> Option<Letter> {
        match e % 3 {
            0 => None,
            1 => Some(Letter::L),
            _ => Some(Letter::LL),
        }
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::S => Letter::S,
            Letter::L => Letter::LL,
            Letter::LL => Letter::L,
        }
    }

    pub fn matrix(self) -> Mat {
        match self {
            Letter::S => Mat::raw(0, -1, 1, 0),
            Letter::L => Mat::raw(1, -1, 1, 0),
            Letter::LL => Mat::raw(0, -1, 1, -1),
        }
    }
}

/// Unreduced input token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RawLetter {
    S,
    L,
    LInv,
    LL,
}

impl From<Letter> for RawLetter {
    fn from(l: Letter) -> Self {
        match l {
            Letter::S => RawLetter::S,
            Letter::L => RawLetter::L,
            Letter::LL => RawLetter::LL,
        }
    }
}

/// Reduced word in `S`, `L`, `LL`. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

/// Rewrites `L^-1 -> LL`, `SS -> 1`, `LLL -> 1` until nothing changes.
pub fn normalize(raw: &[RawLetter]) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(raw.len());
    for &tok in raw {
        let exp = match tok {
            RawLetter::S => {
                if out.last() == Some(&Letter::S) {
                    out.pop();
                } else {
                    out.push(Letter::S);
                }
                continue;
            }
            RawLetter::L => 1,
            RawLetter::LL | RawLetter::LInv => 2,
        };
        match out.last().copied() {
            Some(top) if top != Letter::S => {
                out.pop();
                if let Some(l) = Letter::from_l_exponent(top.l_exponent() + exp) {
                    out.push(l);
                }
            }
            _ => out.push(Letter::from_l_exponent(exp).expect("nonzero exponent")),
        }
    }
    Word(out)
}

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from letters, reducing as needed.
    pub fn from_letters(letters: &[Letter]) -> Self {
        let raw: Vec<RawLetter> = letters.iter().map(|&l| l.into()).collect();
        normalize(&raw)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Group product `self * other`.
    pub fn mul(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word::from_letters(&letters)
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.0);
        }
        Word::from_letters(&letters)
    }

    pub fn invert(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// `g * self * g^-1`.
    pub fn conjugate_by(&self, g: &Word) -> Word {
        g.mul(self).mul(&g.invert())
    }

    pub fn to_matrix(&self) -> Mat {
        self.0
            .iter()
            .fold(Mat::identity(), |acc, l| acc.mul(&l.matrix()))
    }

    pub fn classify(&self) -> TraceClass {
        TraceClass::of_matrix(&self.to_matrix())
    }

    /// Cyclic reduction: conjugates away matching first and last letters.
    pub fn cyclically_reduced(&self) -> Word {
        let mut v = self.0.clone();
        while v.len() >= 2 {
            let (first, last) = (v[0], v[v.len() - 1]);
            match (first, last) {
                (Letter::S, Letter::S) => {
                    v.pop();
                    v.remove(0);
                }
                (a, b) if a != Letter::S && b != Letter::S => {
                    v.pop();
                    match Letter::from_l_exponent(a.l_exponent() + b.l_exponent()) {
                        Some(l) => v[0] = l,
                        None => {
                            v.remove(0);
                        }
                    }
                }
                _ => break,
            }
        }
        Word(v)
    }

    /// Canonical representative of the conjugacy class: the least rotation
    /// of the cyclic reduction under `L < LL < S`.
    pub fn cyclic_normal_form(&self) -> Word {
        let reduced = self.cyclically_reduced();
        Word(least_rotation(&reduced.0))
    }

    pub fn is_conjugate_to(&self, other: &Word) -> bool {
        self.cyclic_normal_form() == other.cyclic_normal_form()
    }

    /// All reduced words of exactly `len` letters, in lexicographic order.
    pub fn enumerate(len: usize) -> Vec<Word> {
        fn rec(prefix: &mut Vec<Letter>, len: usize, out: &mut Vec<Word>) {
            if prefix.len() == len {
                out.push(Word(prefix.clone()));
                return;
            }
            let choices: &[Letter] = match prefix.last() {
                None => &[Letter::L, Letter::LL, Letter::S],
                Some(Letter::S) => &[Letter::L, Letter::LL],
                Some(_) => &[Letter::S],
            };
            for &c in choices {
                prefix.push(c);
                rec(prefix, len, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::with_capacity(len), len, &mut out);
        out
    }

    /// All reduced words with at most `max_len` letters.
    pub fn enumerate_up_to(max_len: usize) -> Vec<Word> {
        (0..=max_len).flat_map(Word::enumerate).collect()
    }
}

/// Lexicographically least rotation (naive, fine for desk-size words).
pub(crate) fn least_rotation<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    let n = v.len();
    (0..n.max(1))
        .map(|k| {
            let mut r = v[k.min(n)..].to_vec();
            r.extend_from_slice(&v[..k.min(n)]);
            r
        })
        .min()
        .unwrap_or_default()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            f.write_str(match l {
                Letter::S => "S",
                Letter::L => "L",
                Letter::LL => "LL",
            })?;
        }
        Ok(())
    }
}

/// Parses words such as `LSLLS`, `(LS)^6`, `L^-1 S` or `1`.
///
/// Letters are case-insensitive and whitespace is ignored. A parenthesised
/// group or a single letter may carry an integer exponent, negative
/// exponents meaning the inverse.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let raw = parse_seq(&chars, &mut pos, s)?;
        if pos != chars.len() {
            return Err(Error::parse("word", chars[pos..].iter().collect::<String>()));
        }
        Ok(normalize(&raw))
    }
}

fn parse_seq(chars: &[char], pos: &mut usize, src: &str) -> Result<Vec<RawLetter>> {
    let mut out = Vec::new();
    while *pos < chars.len() {
        let c = chars[*pos];
        let item: Vec<RawLetter> = match c.to_ascii_uppercase() {
            'S' => {
                *pos += 1;
                vec![RawLetter::S]
            }
            'L' => {
                *pos += 1;
                vec![RawLetter::L]
            }
            '1' => {
                *pos += 1;
                Vec::new()
            }
            '(' => {
                *pos += 1;
                let inner = parse_seq(chars, pos, src)?;
                if chars.get(*pos) != Some(&')') {
                    return Err(Error::parse("word", src));
                }
                *pos += 1;
                inner
            }
            ')' => break,
            _ => return Err(Error::parse("word", c.to_string())),
        };
        let exp = parse_exponent(chars, pos)?;
        let item = if exp < 0 { invert_raw(&item) } else { item };
        for _ in 0..exp.unsigned_abs() {
            out.extend_from_slice(&item);
        }
    }
    Ok(out)
}

fn parse_exponent(chars: &[char], pos: &mut usize) -> Result<i64> {
    if chars.get(*pos) != Some(&'^') {
        return Ok(1);
    }
    *pos += 1;
    let start = *pos;
    if chars.get(*pos) == Some(&'-') {
        *pos += 1;
    }
    while chars.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
        *pos += 1;
    }
    let tok: String = chars[start..*pos].iter().collect();
    tok.parse::<i64>()
        .ok()
        .filter(|e| e.unsigned_abs() <= 1 << 20)
        .ok_or_else(|| Error::parse("exponent", tok))
}

fn invert_raw(raw: &[RawLetter]) -> Vec<RawLetter> {
    raw.iter()
        .rev()
        .map(|r| match r {
            RawLetter::S => RawLetter::S,
            RawLetter::L => RawLetter::LInv,
            RawLetter::LInv | RawLetter::LL => RawLetter::L,
        })
        .collect()
}

/// A 2x2 integer matrix of determinant 1, up to sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    pub p: BigInt,
    pub q: BigInt,
    pub r: BigInt,
    pub s: BigInt,
}

impl Mat {
    fn raw(p: i64, q: i64, r: i64, s: i64) -> Mat {
        Mat::canonical(p.into(), q.into(), r.into(), s.into())
    }

    /// Checked constructor: the determinant must be exactly 1.
    pub fn new(p: BigInt, q: BigInt, r: BigInt, s: BigInt) -> Result<Mat> {
        let det = &p * &s - &q * &r;
        if !det.is_one() {
            return Err(Error::BadDeterminant(det.to_string()));
        }
        Ok(Mat::canonical(p, q, r, s))
    }

    pub fn from_i64(p: i64, q: i64, r: i64, s: i64) -> Result<Mat> {
        Mat::new(p.into(), q.into(), r.into(), s.into())
    }

    fn canonical(p: BigInt, q: BigInt, r: BigInt, s: BigInt) -> Mat {
        let negate = [&p, &q, &r, &s]
            .into_iter()
            .find(|x| !x.is_zero())
            .is_some_and(|x| x.is_negative());
        if negate {
            Mat { p: -p, q: -q, r: -r, s: -s }
        } else {
            Mat { p, q, r, s }
        }
    }

    pub fn identity() -> Mat {
        Mat::raw(1, 0, 0, 1)
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity()
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        Mat::canonical(
            &self.p * &o.p + &self.q * &o.r,
            &self.p * &o.q + &self.q * &o.s,
            &self.r * &o.p + &self.s * &o.r,
            &self.r * &o.q + &self.s * &o.s,
        )
    }

    pub fn inverse(&self) -> Mat {
        Mat::canonical(self.s.clone(), -&self.q, -&self.r, self.p.clone())
    }

    pub fn abs_trace(&self) -> BigInt {
        (&self.p + &self.s).abs()
    }

    /// Entries of the sign representative with non-negative trace.
    pub fn positive_trace_entries(&self) -> [BigInt; 4] {
        let e = [self.p.clone(), self.q.clone(), self.r.clone(), self.s.clone()];
        if (&self.p + &self.s).is_negative() {
            e.map(|x| -x)
        } else {
            e
        }
    }

    /// Inverse of [`Word::to_matrix`], by Euclidean descent on the first
    /// column: peel off `T^k` with `T = LS`, then an `S`, until the lower
    /// left entry vanishes.
    pub fn to_word(&self) -> Word {
        let (mut p, mut q, mut r, mut s) =
            (self.p.clone(), self.q.clone(), self.r.clone(), self.s.clone());
        let mut raw = Vec::new();
        while !r.is_zero() {
            let k = p.div_floor(&r);
            push_translation(&mut raw, &k);
            let np = &p - &k * &r;
            let nq = &q - &k * &s;
            raw.push(RawLetter::S);
            // remaining factor is S^-1 (np nq; r s)
            p = r;
            q = s;
            r = -np;
            s = -nq;
        }
        if p.is_negative() {
            q = -q;
        }
        push_translation(&mut raw, &q);
        normalize(&raw)
    }
}

/// Appends `T^k` where `T = LS` and `T^-1 = S LL`.
fn push_translation(raw: &mut Vec<RawLetter>, k: &BigInt) {
    let n = k.magnitude();
    let mut i = num_bigint::BigUint::zero();
    while &i < n {
        if k.is_positive() {
            raw.extend_from_slice(&[RawLetter::L, RawLetter::S]);
        } else {
            raw.extend_from_slice(&[RawLetter::S, RawLetter::LL]);
        }
        i += 1u32;
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.p, self.q, self.r, self.s)
    }
}

/// Parses `p,q;r,s`, optionally wrapped in parentheses.
impl FromStr for Mat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mat> {
        let body: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')')
            .collect();
        let rows: Vec<&str> = body.split(';').collect();
        let entries: Vec<&str> = rows.iter().flat_map(|r| r.split(',')).collect();
        if rows.len() != 2 || entries.len() != 4 {
            return Err(Error::parse("matrix", s));
        }
        let mut nums = Vec::with_capacity(4);
        for e in entries {
            nums.push(e.parse::<BigInt>().map_err(|_| Error::parse("matrix entry", e))?);
        }
        let [p, q, r, s]: [BigInt; 4] = nums.try_into().expect("four entries");
        Mat::new(p, q, r, s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TraceKind {
    Identity,
    Elliptic { order: u8 },
    Parabolic,
    Hyperbolic,
}

/// Conjugacy type of an element, read off its absolute trace.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TraceClass {
    pub kind: TraceKind,
    pub abs_trace: BigInt,
}

impl TraceClass {
    pub fn of_matrix(m: &Mat) -> TraceClass {
        let t = m.abs_trace();
        let kind = if t.is_zero() {
            TraceKind::Elliptic { order: 2 }
        } else if t.is_one() {
            TraceKind::Elliptic { order: 3 }
        } else if t == BigInt::from(2) {
            if m.is_identity() {
                TraceKind::Identity
            } else {
                TraceKind::Parabolic
            }
        } else {
            TraceKind::Hyperbolic
        };
        TraceClass { kind, abs_trace: t }
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.kind == TraceKind::Hyperbolic
    }
}

impl fmt::Display for TraceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            TraceKind::Identity => write!(f, "identity trace={}", self.abs_trace),
            TraceKind::Elliptic { order } => {
                write!(f, "elliptic order={} trace={}", order, self.abs_trace)
            }
            TraceKind::Parabolic => write!(f, "parabolic trace={}", self.abs_trace),
            TraceKind::Hyperbolic => write!(f, "hyperbolic trace={}", self.abs_trace),
        }
    }
}
