use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Serialize, Serializer};

use super::groups::FiniteGroupTable;
use crate::error::{Error, Result};
use crate::rational::Slope;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    /// 0 for `a`, 1 for `b`.
    pub generator: u8,
    pub inverse: bool,
}

impl Letter {
    pub const A: Letter = Letter { generator: 0, inverse: false };
    pub const B: Letter = Letter { generator: 1, inverse: false };

    pub fn inv(self) -> Letter {
        Letter {
            inverse: !self.inverse,
            ..self
        }
    }

    fn with_sign(self, positive: bool) -> Letter {
        if positive {
            self
        } else {
            self.inv()
        }
    }

    fn char(self) -> char {
        match (self.generator, self.inverse) {
            (0, false) => 'a',
            (0, true) => 'A',
            (_, false) => 'b',
            (_, true) => 'B',
        }
    }
}

fn invert(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().map(|l| l.inv()).collect()
}

/// Cancels adjacent inverse pairs.
pub fn free_reduce(word: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// A two-generator one-relator presentation `<a, b | relator>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    relator: Vec<Letter>,
}

impl Presentation {
    pub fn new(relator: Vec<Letter>) -> Result<Self> {
        let reduced = free_reduce(&relator);
        if reduced.is_empty() || reduced.len() != relator.len() {
            return Err(Error::Parse(word_text(&relator)));
        }
        Ok(Presentation { relator })
    }

    pub fn relator(&self) -> &[Letter] {
        &self.relator
    }

    pub fn relator_text(&self) -> String {
        word_text(&self.relator)
    }

    /// Exponent sums of `a` and `b` in the relator.
    pub fn exponent_sums(&self) -> (i64, i64) {
        let mut sums = [0i64; 2];
        for l in &self.relator {
            sums[l.generator as usize] += if l.inverse { -1 } else { 1 };
        }
        (sums[0], sums[1])
    }

    /// Whether `a -> x`, `b -> y` kills the relator in `g`.
    pub fn satisfied_by(&self, g: &FiniteGroupTable, x: usize, y: usize) -> bool {
        let (xi, yi) = (g.inv(x), g.inv(y));
        let mut acc = g.identity();
        for l in &self.relator {
            let e = match (l.generator, l.inverse) {
                (0, false) => x,
                (0, true) => xi,
                (_, false) => y,
                (_, true) => yi,
            };
            acc = g.mul(acc, e);
        }
        acc == g.identity()
    }
}

fn word_text(w: &[Letter]) -> String {
    w.iter().map(|l| l.char()).collect()
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨a,b | {}⟩", self.relator_text())
    }
}

impl Serialize for Presentation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Schubert normal form presentation of the 2-bridge link group `G(q/p)`.
///
/// `w = b^e1 a^e2 b^e3 ...` has `p - 1` letters with `e_i = (-1)^floor(i q/p)`;
/// knots use `a w b^-1 w^-1` with `q` odd, links use `a w a^-1 w^-1`.
pub fn riley_presentation(r: &Slope) -> Result<Presentation> {
    if r.is_infinite() || r.den() < &BigInt::from(2) {
        return Err(Error::OutOfRange(r.to_string()));
    }
    let p = r.den();
    let mut q = r.num().clone();
    if q.is_even() {
        q += p;
    }
    let len = u64::try_from(p).map_err(|_| Error::OutOfRange(r.to_string()))? - 1;
    let mut w = Vec::with_capacity(len as usize);
    for i in 1..=len {
        let e = (&q * BigInt::from(i)).div_floor(p);
        let gen = if i % 2 == 1 { Letter::B } else { Letter::A };
        w.push(gen.with_sign(e.is_even()));
    }
    let closing = if p.is_odd() { Letter::B.inv() } else { Letter::A.inv() };
    let mut rel = vec![Letter::A];
    rel.extend(&w);
    rel.push(closing);
    rel.extend(invert(&w));
    Presentation::new(rel)
}

/// Number of homomorphisms from the presented group to `g`.
pub fn hom_count(pres: &Presentation, g: &FiniteGroupTable) -> usize {
    let n = g.order();
    (0..n)
        .map(|x| (0..n).filter(|&y| pres.satisfied_by(g, x, y)).count())
        .sum()
}

/// Two reflections of `D_p` satisfying the relator of the knot `q/p` whose
/// product generates the rotations, if any.
pub fn dihedral_witness(r: &Slope) -> Result<Option<(usize, usize)>> {
    let pres = riley_presentation(r)?;
    let p: usize = r
        .den_u64()
        .and_then(|p| usize::try_from(p).ok())
        .ok_or_else(|| Error::OutOfRange(r.to_string()))?;
    let d = FiniteGroupTable::dihedral(p);
    for x in p..2 * p {
        for y in p..2 * p {
            if x != y
                && d.element_order(d.mul(x, y)) == p
                && pres.satisfied_by(&d, x, y)
            {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}
