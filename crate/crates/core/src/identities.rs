//! Binomial identities obtained by equating the two Hilbert numerators of
//! `K[Δ(n_1, ..., n_e)]`: the fat-forest form and the f-vector form at
//! `k = n - 1`. Each degree of `t` gives one identity.

use std::fmt::Write;

use num_traits::Signed;
use thiserror::Error;

use crate::closed::{fatforest_numerator, skeleton_numerator, ClosedFormError, SkeletonQuery};
use crate::exact::{binomial, sign, Integer};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdentityError {
    #[error(transparent)]
    Sizes(#[from] ClosedFormError),
    #[error("degree {degree} is outside 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("cannot parse rendered identity: {0}")]
    Parse(String),
}

/// `coefficient * binom(top, bottom)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialTerm {
    pub coefficient: Integer,
    pub top: i64,
    pub bottom: i64,
}

impl BinomialTerm {
    fn new(coefficient: Integer, top: i64, bottom: i64) -> Self {
        Self { coefficient, top, bottom }
    }

    pub fn value(&self) -> Integer {
        &self.coefficient * binomial(self.top, self.bottom)
    }
}

/// One degree of the identity family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityRecord {
    pub degree: usize,
    /// Terms of `sum_s (1-t)^{N-n_s} - (e-1)(1-t)^{N-1}` at `t^degree`.
    pub lhs_terms: Vec<BinomialTerm>,
    /// Terms of `(1-t)^N + N t (1-t)^{N-1} + sum_i c_i t^i (1-t)^{N-i}` at `t^degree`.
    pub rhs_terms: Vec<BinomialTerm>,
    /// Coefficient of the fat-forest numerator.
    pub lhs_value: Integer,
    /// Coefficient of the skeleton numerator at `k = n - 1`.
    pub rhs_value: Integer,
    pub equal: bool,
}

/// Evaluation of one of the identities exactly as printed in the literature
/// for `e = 1` or `e = 2` with equal sizes. Recorded, never asserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedFormCheck {
    pub family: &'static str,
    pub degree: usize,
    pub lhs: Integer,
    pub rhs: Integer,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub sizes: Vec<usize>,
    pub n_vars: usize,
    pub records: Vec<IdentityRecord>,
    pub printed_forms: Vec<PrintedFormCheck>,
}

impl IdentityReport {
    pub fn all_equal(&self) -> bool {
        self.records.iter().all(|r| r.equal)
    }

    pub fn failed_degrees(&self) -> Vec<usize> {
        self.records.iter().filter(|r| !r.equal).map(|r| r.degree).collect()
    }
}

pub fn identity_report(sizes: &[usize]) -> Result<IdentityReport, IdentityError> {
    let full = SkeletonQuery::new(sizes.to_vec(), sizes.iter().copied().max().unwrap_or(2) - 1)?;
    let n = full.n_vertices() as i64;
    let top = full.max_size() as i64;
    let e = sizes.len() as i64;
    let left = fatforest_numerator(sizes)?;
    let right = skeleton_numerator(&full);

    let records = (0..=n)
        .map(|s| {
            let mut lhs_terms: Vec<BinomialTerm> =
                sizes.iter().map(|&ns| BinomialTerm::new(sign(s), n - ns as i64, s)).collect();
            if e > 1 {
                lhs_terms.push(BinomialTerm::new(-Integer::from(e - 1) * sign(s), n - 1, s));
            }
            let mut rhs_terms = vec![
                BinomialTerm::new(sign(s), n, s),
                BinomialTerm::new(Integer::from(n) * sign(s - 1), n - 1, s - 1),
            ];
            rhs_terms
                .extend((2..=top).map(|i| BinomialTerm::new(full.c(i as usize) * sign(s - i), n - i, s - i)));

            let lhs_value = left.coeff(s as usize);
            let rhs_value = right.coeff(s as usize);
            debug_assert_eq!(sum_terms(&lhs_terms), lhs_value);
            debug_assert_eq!(sum_terms(&rhs_terms), rhs_value);
            IdentityRecord {
                degree: s as usize,
                equal: lhs_value == rhs_value,
                lhs_terms,
                rhs_terms,
                lhs_value,
                rhs_value,
            }
        })
        .collect();

    Ok(IdentityReport {
        sizes: sizes.to_vec(),
        n_vars: n as usize,
        records,
        printed_forms: printed_forms(sizes),
    })
}

fn sum_terms(terms: &[BinomialTerm]) -> Integer {
    terms.iter().map(BinomialTerm::value).sum()
}

fn printed_forms(sizes: &[usize]) -> Vec<PrintedFormCheck> {
    let c = |a: i64, b: i64| binomial(a, b);
    match *sizes {
        [n] => {
            let n = n as i64;
            (1..=n)
                .map(|i| {
                    let lhs: Integer = (0..=n).map(|k| sign(n - k) * c(n - k, i - k)).sum();
                    PrintedFormCheck {
                        family: "e=1",
                        degree: i as usize,
                        holds: lhs == Integer::from(0),
                        lhs,
                        rhs: Integer::from(0),
                    }
                })
                .collect()
        }
        [a, b] if a == b => {
            let n = a as i64;
            (0..=n)
                .map(|j| {
                    let lhs = sign(j + 1) * c(n - 1, j);
                    let rhs = sign(j) * c(n, j)
                        + Integer::from(2 * n - 1) * sign(j - 1) * c(n - 1, j - 1)
                        + (2..=n).map(|i| sign(j - i) * 2 * c(n, i) * c(n - i, j - i)).sum::<Integer>();
                    PrintedFormCheck { family: "e=2", degree: j as usize, holds: lhs == rhs, lhs, rhs }
                })
                .collect()
        }
        _ => Vec::new(),
    }
}

fn render_terms(out: &mut String, terms: &[BinomialTerm]) {
    for (idx, t) in terms.iter().enumerate() {
        let neg = t.coefficient.is_negative();
        match (idx, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        let _ = write!(out, "{}*C({},{})", t.coefficient.abs(), t.top, t.bottom);
    }
    if terms.is_empty() {
        out.push('0');
    }
}

/// `<lhs terms> = <rhs terms>  =>  L = R`, where every term is `c*C(a,b)`.
pub fn render_identity(report: &IdentityReport, degree: usize) -> Result<String, IdentityError> {
    let record = report
        .records
        .get(degree)
        .ok_or(IdentityError::DegreeOutOfRange { degree, max: report.records.len().saturating_sub(1) })?;
    let mut out = String::new();
    render_terms(&mut out, &record.lhs_terms);
    out.push_str(" = ");
    render_terms(&mut out, &record.rhs_terms);
    let _ = write!(out, "  =>  {} = {}", record.lhs_value, record.rhs_value);
    Ok(out)
}

/// Values recovered from a rendered identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedIdentity {
    /// Sum of the left-hand binomial terms.
    pub lhs_terms_value: Integer,
    /// Sum of the right-hand binomial terms.
    pub rhs_terms_value: Integer,
    pub lhs_total: Integer,
    pub rhs_total: Integer,
}

/// Re-evaluates the output of [`render_identity`].
pub fn parse_rendered_identity(text: &str) -> Result<ParsedIdentity, IdentityError> {
    let err = |m: &str| IdentityError::Parse(m.to_string());
    let (equation, totals) = text.split_once("  =>  ").ok_or_else(|| err("missing `=>`"))?;
    let (lhs, rhs) = equation.split_once(" = ").ok_or_else(|| err("missing `=` in equation"))?;
    let (lt, rt) = totals.split_once(" = ").ok_or_else(|| err("missing `=` in totals"))?;
    let int = |s: &str| s.trim().parse::<Integer>().map_err(|_| err(&format!("bad integer `{s}`")));
    Ok(ParsedIdentity {
        lhs_terms_value: eval_side(lhs)?,
        rhs_terms_value: eval_side(rhs)?,
        lhs_total: int(lt)?,
        rhs_total: int(rt)?,
    })
}

fn eval_side(side: &str) -> Result<Integer, IdentityError> {
    let err = |m: String| IdentityError::Parse(m);
    let side = side.trim();
    if side == "0" {
        return Ok(Integer::from(0));
    }
    // normalise to a leading sign then split on the separators we emit
    let normalised = match side.strip_prefix('-') {
        Some(rest) => format!("- {rest}"),
        None => format!("+ {side}"),
    };
    let tokens: Vec<&str> = normalised.split(' ').collect();
    if !tokens.len().is_multiple_of(2) {
        return Err(err(format!("unbalanced terms in `{side}`")));
    }
    let mut total = Integer::from(0);
    for pair in tokens.chunks(2) {
        let negative = match pair[0] {
            "+" => false,
            "-" => true,
            other => return Err(err(format!("expected sign, found `{other}`"))),
        };
        let (coef, binom) =
            pair[1].split_once("*C(").ok_or_else(|| err(format!("bad term `{}`", pair[1])))?;
        let args = binom.strip_suffix(')').ok_or_else(|| err(format!("bad term `{}`", pair[1])))?;
        let (a, b) = args.split_once(',').ok_or_else(|| err(format!("bad term `{}`", pair[1])))?;
        let parse_i64 = |s: &str| s.parse::<i64>().map_err(|_| err(format!("bad number `{s}`")));
        let coef: Integer = coef.parse().map_err(|_| err(format!("bad coefficient `{coef}`")))?;
        let value = coef * binomial(parse_i64(a)?, parse_i64(b)?);
        total += if negative { -value } else { value };
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_degree_one() {
        let r = identity_report(&[2]).unwrap();
        let rec = &r.records[1];
        assert_eq!((rec.lhs_value.clone(), rec.rhs_value.clone()), (Integer::from(0), Integer::from(0)));
        // corrected e=1 form: sum_j C(2,j)(-1)^{1-j} C(2-j,1-j) = -2 + 2
        let corrected: Integer = (0..=2).map(|j| binomial(2, j) * sign(1 - j) * binomial(2 - j, 1 - j)).sum();
        assert_eq!(corrected, Integer::from(0));
        assert!(r.all_equal());
    }

    #[test]
    fn single_simplex_family() {
        for n in 2..=12 {
            let r = identity_report(&[n]).unwrap();
            assert_eq!(r.records.len(), n + 1);
            assert!(r.all_equal());
            assert_eq!(r.records[0].lhs_value, Integer::from(1));
            assert!(r.records[1..].iter().all(|rec| rec.lhs_value == Integer::from(0)));
        }
    }

    #[test]
    fn printed_single_facet_form_is_reported_not_enforced() {
        let r = identity_report(&[2]).unwrap();
        let first = &r.printed_forms[0];
        assert_eq!((first.family, first.degree), ("e=1", 1));
        assert!(!first.holds);
        assert_eq!(first.lhs, Integer::from(1));
        assert!(r.all_equal());
    }

    #[test]
    fn printed_two_facet_form_holds_past_degree_zero() {
        for n in 2..=9 {
            let r = identity_report(&[n, n]).unwrap();
            assert!(r.all_equal());
            assert_eq!(r.printed_forms.len(), n + 1);
            assert!(!r.printed_forms[0].holds);
            assert!(r.printed_forms[1..].iter().all(|p| p.holds), "n = {n}");
        }
    }

    #[test]
    fn two_facet_terms_have_expected_shape() {
        let r = identity_report(&[4, 4]).unwrap();
        let rec = &r.records[3];
        assert_eq!(rec.lhs_terms.len(), 3);
        assert_eq!(rec.lhs_terms[2], BinomialTerm::new(Integer::from(1), 6, 3));
        // (1-t)^N, N t (1-t)^{N-1}, then c_2 .. c_4
        assert_eq!(rec.rhs_terms.len(), 5);
        assert_eq!(rec.rhs_terms[1].coefficient, Integer::from(7));
        assert_eq!(rec.rhs_terms[2].coefficient, Integer::from(-12));
    }

    #[test]
    fn render_examples() {
        let r = identity_report(&[5]).unwrap();
        let s = render_identity(&r, 0).unwrap();
        assert!(s.ends_with("=>  1 = 1"), "{s}");
        let r = identity_report(&[2, 2]).unwrap();
        let s = render_identity(&r, 2).unwrap();
        assert!(s.ends_with("=>  -1 = -1"), "{s}");
        let r = identity_report(&[3, 3]).unwrap();
        let s = render_identity(&r, 3).unwrap();
        let parsed = parse_rendered_identity(&s).unwrap();
        assert_eq!(parsed.lhs_total, parsed.rhs_total);
        assert_eq!(
            render_identity(&r, 99).unwrap_err(),
            IdentityError::DegreeOutOfRange { degree: 99, max: 5 }
        );
    }

    #[test]
    fn rendered_identities_round_trip() {
        for sizes in [vec![2], vec![6], vec![2, 2], vec![3, 4, 5], vec![4, 2, 4, 3]] {
            let r = identity_report(&sizes).unwrap();
            for rec in &r.records {
                let parsed = parse_rendered_identity(&render_identity(&r, rec.degree).unwrap()).unwrap();
                assert_eq!(parsed.lhs_terms_value, rec.lhs_value);
                assert_eq!(parsed.rhs_terms_value, rec.rhs_value);
                assert_eq!(parsed.lhs_total, rec.lhs_value);
                assert_eq!(parsed.rhs_total, rec.rhs_value);
            }
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rendered_identity("1 = 1").is_err());
        assert!(parse_rendered_identity("1*C(2,1) = x  =>  2 = 2").is_err());
    }

    #[test]
    fn rejects_invalid_sizes() {
        assert!(identity_report(&[1]).is_err());
        assert!(identity_report(&[]).is_err());
    }
}
