//! Carks: quotient graphs of cyclic hyperbolic subgroups.
//!
//! A cyclically reduced hyperbolic word factors uniquely, up to rotation,
//! into blocks `P = LS` and `M = LLS`. The cyclic block word is the spine
//! of the quotient graph: every block is one bullet on the spine with its
//! Farey branch on one side.

use std::f64::consts::PI;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::forms::QuadForm;
use crate::word::{least_rotation, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    P,
    M,
}

impl Block {
    fn swap(self) -> Block {
        match self {
            Block::P => Block::M,
            Block::M => Block::P,
        }
    }

    fn letters(self) -> [Letter; 2] {
        match self {
            Block::P => [Letter::L, Letter::S],
            Block::M => [Letter::LL, Letter::S],
        }
    }
}

/// A cyclic block word, stored as its least rotation, with the number of
/// times its primitive root repeats.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cark {
    spine: Vec<Block>,
    multiplicity: usize,
}

impl Cark {
    pub fn from_blocks(blocks: &[Block]) -> Result<Cark> {
        if !blocks.contains(&Block::P) || !blocks.contains(&Block::M) {
            return Err(Error::NotHyperbolic);
        }
        let spine = least_rotation(blocks);
        let n = spine.len();
        let period = (1..=n)
            .find(|&p| n % p == 0 && (p..n).all(|i| spine[i] == spine[i - p]))
            .expect("the full length is a period");
        Ok(Cark {
            spine,
            multiplicity: n / period,
        })
    }

    /// The full spine, including repeats.
    pub fn spine(&self) -> &[Block] {
        &self.spine
    }

    pub fn root(&self) -> &[Block] {
        &self.spine[..self.spine.len() / self.multiplicity]
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn inverse(&self) -> Cark {
        let rev: Vec<Block> = self.spine.iter().rev().map(|b| b.swap()).collect();
        Cark::from_blocks(&rev).expect("both block types present")
    }

    /// Whether the element is conjugate to its inverse.
    pub fn is_reciprocal(&self) -> bool {
        self.inverse() == *self
    }

    pub fn to_word(&self) -> Word {
        let letters: Vec<Letter> = self.spine.iter().flat_map(|b| b.letters()).collect();
        Word::from_letters(&letters)
    }

    /// SVG drawing of the spine: `2n` edges around a circle, bullets at the
    /// even positions. `P` branches point outward, `M` branches inward; the
    /// dashed tail stands for the Farey branch.
    pub fn to_svg(&self) -> String {
        let n = self.spine.len();
        let radius = 80.0 + 20.0 * n as f64;
        let size = 2.0 * (radius + 80.0);
        let centre = size / 2.0;
        let point = |k: usize, r: f64| {
            let theta = -PI / 2.0 + PI * k as f64 / n as f64;
            (centre + r * theta.cos(), centre + r * theta.sin())
        };
        let mut out = String::new();
        let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size:.3}" height="{size:.3}" viewBox="0 0 {size:.3} {size:.3}">"#
        );
        let _ = writeln!(out, "<title>{self}</title>");
        let _ = writeln!(out, r#"<g stroke="black" stroke-width="2" fill="none">"#);
        for k in 0..2 * n {
            let (x1, y1) = point(k, radius);
            let (x2, y2) = point((k + 1) % (2 * n), radius);
            let _ = writeln!(out, r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#);
        }
        for (i, b) in self.spine.iter().enumerate() {
            let dir = match b {
                Block::P => 1.0,
                Block::M => -1.0,
            };
            let (x1, y1) = point(2 * i, radius);
            let (x2, y2) = point(2 * i, radius + dir * 30.0);
            let (x3, y3) = point(2 * i, radius + dir * 55.0);
            let _ = writeln!(out, r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#);
            let _ = writeln!(
                out,
                r#"<line x1="{x2:.3}" y1="{y2:.3}" x2="{x3:.3}" y2="{y3:.3}" stroke-dasharray="4 3"/>"#
            );
            let _ = writeln!(out, r#"<circle cx="{x2:.3}" cy="{y2:.3}" r="5" fill="white"/>"#);
        }
        for k in 0..2 * n {
            let (x, y) = point(k, radius);
            let fill = if k % 2 == 0 { "black" } else { "white" };
            let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="6" fill="{fill}"/>"#);
        }
        out.push_str("</g>\n</svg>\n");
        out
    }
}

impl fmt::Display for Cark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.root() {
            f.write_str(match b {
                Block::P => "P",
                Block::M => "M",
            })?;
        }
        if self.multiplicity > 1 {
            write!(f, "^{}", self.multiplicity)?;
        }
        Ok(())
    }
}

/// `PMM`, `PM^2` (the root `PM` repeated twice), case-insensitive.
impl FromStr for Cark {
    type Err = Error;

    fn from_str(text: &str) -> Result<Cark> {
        let bad = || Error::parse("cark", text);
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (body, power) = match t.split_once('^') {
            Some((body, k)) => (body, k.parse::<usize>().map_err(|_| bad())?),
            None => (t.as_str(), 1),
        };
        if power == 0 || body.is_empty() {
            return Err(bad());
        }
        let root: Vec<Block> = body
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'P' => Ok(Block::P),
                'M' => Ok(Block::M),
                _ => Err(bad()),
            })
            .collect::<Result<_>>()?;
        Cark::from_blocks(&root.repeat(power))
    }
}

/// The cark of a hyperbolic element.
pub fn word_to_cark(w: &Word) -> Result<Cark> {
    if !w.classify().is_hyperbolic() {
        return Err(Error::NotHyperbolic);
    }
    let cr = w.cyclically_reduced();
    let letters = cr.letters();
    let shift = if letters[0] == Letter::S { 1 } else { 0 };
    let n = letters.len();
    let blocks: Vec<Block> = (0..n / 2)
        .map(|i| match letters[(shift + 2 * i) % n] {
            Letter::L => Block::P,
            Letter::LL => Block::M,
            Letter::S => unreachable!("hyperbolic words alternate"),
        })
        .collect();
    Cark::from_blocks(&blocks)
}

pub fn cark_to_word(c: &Cark) -> Word {
    c.to_word()
}

pub fn carks_conjugate(a: &Cark, b: &Cark) -> bool {
    a == b
}

pub fn is_reciprocal(c: &Cark) -> bool {
    c.is_reciprocal()
}

/// The form `rx^2 + (s - p)xy - qy^2` whose roots are the fixed points of
/// `(p, q; r, s)`, made primitive. The matrix is taken with positive trace,
/// which makes the map equivariant: conjugating `w` by `g` moves the form
/// by `g^-1`.
pub fn word_to_form(w: &Word) -> Result<QuadForm> {
    let m = w.to_matrix();
    if !w.classify().is_hyperbolic() {
        return Err(Error::NotHyperbolic);
    }
    let [p, q, r, s] = m.positive_trace_entries();
    let (a, b, c) = (r, s - p, -q);
    let g = a.gcd(&b).gcd(&c).abs();
    Ok(QuadForm::new(a / &g, b / &g, c / &g))
}

/// The word of the fundamental automorph of `f`.
pub fn form_to_word(f: &QuadForm) -> Result<Word> {
    Ok(f.automorph()?.to_word())
}

pub fn cark_svg(c: &Cark) -> String {
    c.to_svg()
}
