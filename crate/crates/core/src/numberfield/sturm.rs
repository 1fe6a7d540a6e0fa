use crate::arith::{sign_of, IntPoly, RatPoly, Rational};
use crate::error::{Error, Result};

/// `f` scaled by a positive rational so that it has coprime integer
/// coefficients. Signs of values are unchanged.
fn positive_primitive(f: &RatPoly) -> RatPoly {
    let (c, g) = IntPoly::from_rat_primitive(f);
    let g = g.to_rat();
    if sign_of(&c) < 0 {
        -g
    } else {
        g
    }
}

/// The Sturm chain `f, f', -rem(f, f'), ...`, each term primitive.
pub fn sturm_chain(f: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![positive_primitive(f), positive_primitive(&f.derivative())];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        chain.push(positive_primitive(&-r));
    }
    chain
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign_at_infinity(f: &RatPoly, negative: bool) -> i32 {
    let s = f.lc().map(sign_of).unwrap_or(0);
    if negative && f.degree().unwrap_or(0) % 2 == 1 {
        -s
    } else {
        s
    }
}

/// Number of distinct real roots of a squarefree polynomial.
pub fn sturm_real_roots(f: &RatPoly) -> Result<usize> {
    match f.degree() {
        None => return Err(Error::NotSquarefree),
        Some(0) => return Ok(0),
        _ => {}
    }
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    Ok(count_distinct_real_roots(f))
}

/// Distinct real roots of any nonzero polynomial (the Sturm count does not
/// need squarefreeness when read on the whole line).
pub(crate) fn count_distinct_real_roots(f: &RatPoly) -> usize {
    if f.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let chain = sturm_chain(f);
    let at_neg = sign_changes(chain.iter().map(|g| sign_at_infinity(g, true)));
    let at_pos = sign_changes(chain.iter().map(|g| sign_at_infinity(g, false)));
    at_neg - at_pos
}

/// Distinct real roots in the half-open interval `(a, b]`.
pub fn sturm_roots_in(f: &RatPoly, a: &Rational, b: &Rational) -> usize {
    let chain = sturm_chain(f);
    let at = |x: &Rational| sign_changes(chain.iter().map(|g| sign_of(&g.eval(x))));
    at(a).saturating_sub(at(b))
}
