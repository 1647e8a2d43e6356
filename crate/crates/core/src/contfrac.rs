//! Even and positive continued-fraction expansions
//! `q/p = 1/(c1 + 1/(c2 + ... + 1/cn))` and the symmetry predicates that
//! detect extra symmetries of 2-bridge links.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{mod_inverse, residue_class, Slope};

/// Even expansion `[2b1, ..., 2bn]`, stored by its halves `b_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EvenCF {
    half_entries: Vec<BigInt>,
}

impl EvenCF {
    pub fn half_entries(&self) -> &[BigInt] {
        &self.half_entries
    }

    /// The doubled entries `2b_i`.
    pub fn entries(&self) -> Vec<BigInt> {
        self.half_entries.iter().map(|b| b * 2u8).collect()
    }

    pub fn len(&self) -> usize {
        self.half_entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.half_entries.is_empty()
    }
}

impl fmt::Display for EvenCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_entries(f, &self.entries())
    }
}

/// Positive expansion `[a1, ..., an]` with `a1 >= 2` and `an >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PosCF {
    entries: Vec<BigInt>,
}

impl PosCF {
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for PosCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_entries(f, &self.entries)
    }
}

fn write_entries(f: &mut fmt::Formatter<'_>, entries: &[BigInt]) -> fmt::Result {
    f.write_str("[")?;
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
    }
    f.write_str("]")
}

/// Parses `"[c1,c2,...]"`.
pub fn parse_entries(s: &str) -> Result<Vec<BigInt>> {
    let bad = || Error::Parse(s.to_string());
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(bad)?;
    if inner.trim().is_empty() {
        return Err(bad());
    }
    inner
        .split(',')
        .map(|t| t.trim().parse::<BigInt>().map_err(|_| bad()))
        .collect()
}

/// Exact value of `1/(c1 + 1/(c2 + ... + 1/cn))`.
pub fn cf_eval(entries: &[BigInt]) -> Result<Slope> {
    if entries.is_empty() || entries.iter().any(Zero::is_zero) {
        return Err(Error::ZeroEntry);
    }
    // tail = num/den, evaluated from the back
    let mut num = entries[entries.len() - 1].clone();
    let mut den = BigInt::one();
    for c in entries[..entries.len() - 1].iter().rev() {
        if num.is_zero() {
            return Err(Error::DivisionCollapse);
        }
        // c + den/num
        let next_num = c * &num + &den;
        den = num;
        num = next_num;
    }
    if num.is_zero() {
        return Err(Error::DivisionCollapse);
    }
    Slope::new(den, num)
}

fn in_open_unit_range(r: &Slope) -> Result<()> {
    if r.is_infinite() {
        return Err(Error::InfinityInput);
    }
    if !r.num().is_positive() || r.num() >= r.den() {
        return Err(Error::OutOfRange(r.to_string()));
    }
    Ok(())
}

fn in_lower_half(r: &Slope) -> Result<()> {
    in_open_unit_range(r)?;
    if r.num() * 2u8 > *r.den() {
        return Err(Error::OutOfRange(r.to_string()));
    }
    Ok(())
}

/// Even expansion of `q/p` with `0 < q < p` and exactly one of `p, q` even,
/// by nearest-even-quotient division.
pub fn cf_even(r: &Slope) -> Result<EvenCF> {
    in_open_unit_range(r)?;
    if r.num().is_odd() && r.den().is_odd() {
        return Err(Error::BothOdd(r.to_string()));
    }
    // current tail x = num/den, starting from 1/r
    let mut num = r.den().clone();
    let mut den = r.num().clone();
    let mut halves = Vec::new();
    loop {
        if den.is_one() {
            // parity is preserved at every step, so an integral tail is even
            debug_assert!(num.is_even());
            halves.push(num / 2u8);
            break;
        }
        // the even integer at distance < 1 from num/den
        let k = num.div_floor(&den);
        let even = if k.is_even() { k } else { k + 1u8 };
        let rem = &num - &even * &den;
        halves.push(even / 2u8);
        num = den;
        den = rem;
        if den.is_negative() {
            num = -num;
            den = -den;
        }
    }
    Ok(EvenCF {
        half_entries: halves,
    })
}

/// Positive expansion of `q/p` with `0 < q <= p/2`.
pub fn cf_positive(r: &Slope) -> Result<PosCF> {
    in_lower_half(r)?;
    let mut num = r.den().clone();
    let mut den = r.num().clone();
    let mut entries = Vec::new();
    while !den.is_zero() {
        let (a, rem) = num.div_mod_floor(&den);
        entries.push(a);
        num = den;
        den = rem;
    }
    if entries.len() > 1 && entries.last().is_some_and(One::is_one) {
        entries.pop();
        *entries.last_mut().expect("nonempty") += 1u8;
    }
    Ok(PosCF { entries })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EvenSymmetry {
    Antipalindromic,
    Palindromic,
    Asymmetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PosSymmetry {
    SymEvenMiddle,
    SymOddMiddle,
    Asymmetric,
}

/// Symmetry type of the even expansion; requires `0 < q <= p/2`.
pub fn even_symmetry_class(r: &Slope) -> Result<EvenSymmetry> {
    in_lower_half(r)?;
    let cf = cf_even(r)?;
    let b = cf.half_entries();
    let n = b.len();
    if (0..n).all(|i| b[i] == -&b[n - 1 - i]) {
        Ok(EvenSymmetry::Antipalindromic)
    } else if (0..n).all(|i| b[i] == b[n - 1 - i]) {
        Ok(EvenSymmetry::Palindromic)
    } else {
        Ok(EvenSymmetry::Asymmetric)
    }
}

pub fn pos_symmetry_class(r: &Slope) -> Result<PosSymmetry> {
    let cf = cf_positive(r)?;
    let a = cf.entries();
    let n = a.len();
    let palindromic = (0..n).all(|i| a[i] == a[n - 1 - i]);
    if n % 2 == 0 || !palindromic {
        return Ok(PosSymmetry::Asymmetric);
    }
    if a[n / 2].is_even() {
        Ok(PosSymmetry::SymEvenMiddle)
    } else {
        Ok(PosSymmetry::SymOddMiddle)
    }
}

/// Representative `c/p` of the class of `r` (inverse residues and mirrors
/// allowed) with `0 < c <= p/2` and `c, p` not both odd. The flag records
/// whether a mirror image was needed.
pub fn cf_normal_rep(r: &Slope) -> Result<(Slope, bool)> {
    if r.is_infinite() {
        return Err(Error::InfinityInput);
    }
    let p = r.den().clone();
    if p < BigInt::from(2u8) {
        return Err(Error::IntegerSlope(r.to_string()));
    }
    let q = residue_class(r)?;
    let qi = mod_inverse(&q, &p).expect("reduced");
    let candidates = [
        (q.clone(), false),
        (qi.clone(), false),
        (&p - &q, true),
        (&p - &qi, true),
    ];
    for (c, mirror) in candidates {
        if c.is_positive() && &c * 2u8 <= p && !(c.is_odd() && p.is_odd()) {
            return Ok((Slope::new(c, p.clone())?, mirror));
        }
    }
    Err(Error::NoRepresentative(r.to_string()))
}
