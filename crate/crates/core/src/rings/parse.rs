//! Text form of group-ring elements, e.g. `1 - t1 + t1^2*t2^-1*s`.
//!
//! `t` is accepted as a synonym for `t1`.

use num_traits::{One, Zero};

use super::laurent::{Mono, ZH};
use super::{RingError, Z};

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, RingError> {
        Err(RingError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn int_exponent(&mut self) -> Result<i64, RingError> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.digits().and_then(|d| d.parse::<i64>().ok()) {
            Some(v) => Ok(if neg { -v } else { v }),
            None => self.err("expected exponent"),
        }
    }
}

/// Parse an element of `Z[Z^r x Z/m]`.
pub fn parse_zh(text: &str, m: u32) -> Result<ZH, RingError> {
    let m = m.max(1);
    let mut lx = Lexer {
        s: text.as_bytes(),
        pos: 0,
    };
    let mut acc = ZH::zero_with(m);
    let mut first = true;
    loop {
        let neg = match lx.peek() {
            None if first => return lx.err("empty expression"),
            None => break,
            Some(b'+') if !first => {
                lx.pos += 1;
                false
            }
            Some(b'-') => {
                lx.pos += 1;
                true
            }
            Some(_) if first => false,
            Some(c) => return lx.err(format!("unexpected '{}'", c as char)),
        };
        first = false;
        let (c, h) = term(&mut lx, m)?;
        let c = if neg { -c } else { c };
        acc = acc + ZH::term(c, h, m);
    }
    Ok(acc)
}

fn term(lx: &mut Lexer<'_>, m: u32) -> Result<(Z, Mono), RingError> {
    let mut coef = Z::one();
    let mut h = Mono::identity();
    let mut need_factor = true;
    if let Some(d) = lx.digits() {
        coef = d.parse::<Z>().expect("digits");
        if lx.peek() == Some(b'*') {
            lx.pos += 1;
            need_factor = true;
        } else {
            return Ok((coef, h));
        }
    }
    loop {
        match lx.peek() {
            Some(b't') => {
                lx.pos += 1;
                let idx = match lx.s.get(lx.pos) {
                    Some(c) if c.is_ascii_digit() => {
                        lx.digits().and_then(|d| d.parse::<usize>().ok())
                    }
                    _ => Some(1),
                };
                let Some(i) = idx.filter(|&i| i >= 1) else {
                    return lx.err("variable index must be at least 1");
                };
                let e = lx.int_exponent()?;
                h = h.mul(&Mono::var(i - 1, e), m);
            }
            Some(b's') => {
                lx.pos += 1;
                if m == 1 {
                    return lx.err("torsion generator s used in a torsion-free ring");
                }
                let e = lx.int_exponent()?;
                h = h.mul(&Mono::new(vec![], e.rem_euclid(m as i64) as u32), m);
            }
            Some(c) if c.is_ascii_digit() => {
                let d = lx.digits().expect("digit");
                coef *= d.parse::<Z>().expect("digits");
            }
            _ if need_factor => return lx.err("expected a factor"),
            _ => break,
        }
        if lx.peek() == Some(b'*') {
            lx.pos += 1;
            need_factor = true;
        } else {
            break;
        }
    }
    if coef.is_zero() {
        return Ok((coef, Mono::identity()));
    }
    Ok((coef, h))
}
