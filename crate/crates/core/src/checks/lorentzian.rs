use std::collections::BTreeSet;

use super::mconvex::{is_mconvex_set, SetMode};
use super::CheckError;
use crate::kernel::Rational;
use crate::poly::{degree_of, Exponent, MultiPoly};
use crate::verdict::{Certificate, Verdict, Witness};

/// Exact Lorentzian test: nonnegative coefficients, homogeneity, M-convex
/// support, and at most one positive eigenvalue for the Hessian of every
/// order-`(d−2)` derivative.
pub fn is_lorentzian(f: &MultiPoly) -> Result<Verdict, CheckError> {
    if f.is_zero() {
        return Err(CheckError::ZeroPolynomial);
    }
    if let Some((e, c)) = f.terms().find(|(_, c)| c.is_negative()) {
        return Ok(Verdict::fail(Witness::NegativeCoefficient { exponent: e.clone(), coeff: c.clone() }));
    }
    let (first, _) = f.terms().next().expect("nonzero polynomial");
    let d = degree_of(first);
    if let Some((other, _)) = f.terms().find(|(e, _)| degree_of(e) != d) {
        return Ok(Verdict::fail(Witness::NotHomogeneous { exponent: first.clone(), other: other.clone() }));
    }
    if d <= 1 {
        return Ok(Verdict::certified(Certificate::Lorentzian { degree: d, hessians: 0 }));
    }
    let support = f.support();
    let exchange = is_mconvex_set(&support, SetMode::Exchange)?;
    if exchange.is_fail() {
        return Ok(exchange);
    }
    let n = f.nvars();
    let origin = vec![Rational::zero(); n];
    let mut hessians = 0u64;
    for alpha in derivative_orders(&support, d - 2) {
        let g = f.derivative(&alpha)?;
        if g.is_zero() {
            continue;
        }
        hessians += 1;
        let signature = g.hessian_at(&origin)?.eigen_signature()?;
        if signature.positive > 1 {
            return Ok(Verdict::fail(Witness::HessianSignature { alpha, signature }).with_relations(hessians));
        }
    }
    Ok(Verdict::certified(Certificate::Lorentzian { degree: d, hessians }).with_relations(hessians))
}

/// Every `α` with `|α| = order` lying below some support point; other
/// derivatives of that order vanish.
fn derivative_orders(support: &BTreeSet<Exponent>, order: usize) -> BTreeSet<Exponent> {
    let mut out = BTreeSet::new();
    for e in support {
        below(e, order, 0, &mut vec![0; e.len()], &mut out);
    }
    out
}

fn below(e: &[u32], remaining: usize, pos: usize, cur: &mut Exponent, out: &mut BTreeSet<Exponent>) {
    if remaining == 0 {
        out.insert(cur.clone());
        return;
    }
    if pos == e.len() {
        return;
    }
    for take in (0..=e[pos].min(remaining as u32)).rev() {
        cur[pos] = take;
        below(e, remaining - take as usize, pos + 1, cur, out);
    }
    cur[pos] = 0;
}
