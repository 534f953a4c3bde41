//! Plain-text and LaTeX rendering of polynomials and basis states.

use std::fmt::Write;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use schwinger_core::basis::{BasisKey, NormalizedState};
use schwinger_core::catalog::{half_str, third_str};
use schwinger_core::scalar::rational_sqrt;
use schwinger_core::{Polynomial, Scalar};

const TEX_NAMES: [&str; 6] = ["z_{1}", "z_{2}", "z_{3}", "w_{1}", "w_{2}", "w_{3}"];

fn tex_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
    }
}

fn tex_scalar(c: &Scalar) -> String {
    let rat = c.rat();
    match c.surd_ref() {
        None => tex_rational(rat),
        Some(s) => {
            let surd = format!("{}\\sqrt{{3}}", tex_rational(s));
            if rat.is_zero() {
                surd
            } else if s.is_negative() {
                format!("\\left({}{}\\right)", tex_rational(rat), surd)
            } else {
                format!("\\left({}+{}\\right)", tex_rational(rat), surd)
            }
        }
    }
}

pub fn poly_latex(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in f.terms().enumerate() {
        let negative = c.is_rational() && c.rat().is_negative();
        let mag = if negative { -c } else { c.clone() };
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let vars: Vec<String> = m
            .exps()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    TEX_NAMES[i].to_string()
                } else {
                    format!("{}^{{{}}}", TEX_NAMES[i], e)
                }
            })
            .collect();
        let is_one = mag == Scalar::one();
        if !is_one || vars.is_empty() {
            out.push_str(&tex_scalar(&mag));
            if !vars.is_empty() {
                out.push(' ');
            }
        }
        out.push_str(&vars.join(" "));
    }
    out
}

fn key_label(key: &BasisKey) -> (String, String, String, String) {
    (
        half_str(key.weight.i2 as i32),
        half_str(key.weight.m2),
        third_str(key.weight.y3),
        half_str(key.m2 as i32),
    )
}

/// `\left|p,q; I M Y; m\right\rangle = \frac{1}{\sqrt{N}} (…)`.
pub fn state_latex(s: &NormalizedState) -> String {
    let (i, m, y, mm) = key_label(&s.key);
    let mut out = format!(
        "\\left|{},{};\\,{},{},{};\\,{}\\right\\rangle = ",
        s.key.rep.p, s.key.rep.q, i, m, y, mm
    );
    let body = poly_latex(&s.poly);
    if s.norm_sq.is_one() {
        out.push_str(&body);
        return out;
    }
    let prefactor = match rational_sqrt(&s.norm_sq) {
        Some(r) => tex_rational(&(BigRational::one() / r)),
        None => format!("\\frac{{1}}{{\\sqrt{{{}}}}}", tex_rational(&s.norm_sq)),
    };
    let _ = write!(out, "{prefactor}\\left({body}\\right)");
    out
}

pub fn state_text(s: &NormalizedState) -> String {
    let (i, m, y, mm) = key_label(&s.key);
    format!(
        "|{},{}; I={} M={} Y={}; m={}> = ({}) / sqrt({})\n",
        s.key.rep.p, s.key.rep.q, i, m, y, mm, s.poly, s.norm_sq
    )
}
