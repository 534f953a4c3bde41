//! Combinatorial bookkeeping for SU(3) irreps `(p, q)`.
//!
//! Half-integers are carried doubled (`i2 = 2I`, `m2 = 2M`) and
//! hypercharge tripled (`y3 = 3Y`) so every label is an exact integer.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrrepLabel {
    pub p: u32,
    pub q: u32,
}

impl IrrepLabel {
    pub fn new(p: u32, q: u32) -> Self {
        IrrepLabel { p, q }
    }

    /// `d(p,q) = ½(p+1)(q+1)(p+q+2)`.
    pub fn dim(&self) -> u64 {
        let (p, q) = (self.p as u64, self.q as u64);
        (p + 1) * (q + 1) * (p + q + 2) / 2
    }

    /// Twice the lowest Sp(2,R) weight: `2k = p + q + 3`.
    pub fn k2(&self) -> u32 {
        self.p + self.q + 3
    }

    pub fn conjugate(&self) -> IrrepLabel {
        IrrepLabel::new(self.q, self.p)
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

pub fn dim(rep: IrrepLabel) -> u64 {
    rep.dim()
}

pub fn k_of(rep: IrrepLabel) -> u32 {
    rep.k2()
}

/// Canonical U(2) labels of a state inside `(p, q)`, together with the
/// `(r, s)` integers that index its isospin–hypercharge multiplet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightLabel {
    pub i2: u32,
    pub m2: i32,
    pub y3: i32,
    pub r: u32,
    pub s: u32,
}

impl WeightLabel {
    /// The highest-isospin member (`M = I`).
    pub fn top(&self) -> WeightLabel {
        WeightLabel {
            m2: self.i2 as i32,
            ..*self
        }
    }

    pub fn with_m2(&self, m2: i32) -> Result<WeightLabel> {
        check_m2(self.i2, m2)?;
        Ok(WeightLabel { m2, ..*self })
    }
}

fn check_m2(i2: u32, m2: i32) -> Result<()> {
    if m2.unsigned_abs() > i2 || (i2 as i32 - m2) % 2 != 0 {
        return Err(Error::InvalidWeight(format!(
            "M = {} not in the isospin-{} multiplet",
            half_str(m2),
            half_str(i2 as i32)
        )));
    }
    Ok(())
}

/// One isospin–hypercharge multiplet of `(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpectrumEntry {
    pub r: u32,
    pub s: u32,
    pub i2: u32,
    pub y3: i32,
    pub multiplicity: u32,
}

impl SpectrumEntry {
    /// Number of states: `2I + 1`.
    pub fn size(&self) -> u64 {
        self.i2 as u64 + 1
    }
}

/// `I = ½(r+s)`, `Y = r − s + ⅔(q − p)` for `0 ≤ r ≤ p`, `0 ≤ s ≤ q`,
/// ordered by `(r, s)`.
pub fn iy_spectrum(rep: IrrepLabel) -> Vec<SpectrumEntry> {
    let mut out = Vec::with_capacity(((rep.p + 1) * (rep.q + 1)) as usize);
    for r in 0..=rep.p {
        for s in 0..=rep.q {
            let (i2, y3) = rs_to_iy(rep, r, s);
            out.push(SpectrumEntry {
                r,
                s,
                i2,
                y3,
                multiplicity: 1,
            });
        }
    }
    out
}

fn rs_to_iy(rep: IrrepLabel, r: u32, s: u32) -> (u32, i32) {
    let i2 = r + s;
    let y3 = 3 * (r as i32 - s as i32) + 2 * (rep.q as i32 - rep.p as i32);
    (i2, y3)
}

/// `(p,0) ⊗ (0,q) = ⊕_{ρ=0}^{min(p,q)} (p−ρ, q−ρ)`.
pub fn cg_series(p: u32, q: u32) -> Vec<IrrepLabel> {
    (0..=p.min(q))
        .map(|rho| IrrepLabel::new(p - rho, q - rho))
        .collect()
}

/// Subgroups whose trivial representation induces the representations
/// tabulated by [`induced_multiplicity`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subgroup {
    U1xU1,
    SU2,
    U2,
    SO3,
}

impl Subgroup {
    pub const ALL: [Subgroup; 4] = [Subgroup::U1xU1, Subgroup::SU2, Subgroup::U2, Subgroup::SO3];

    pub fn name(&self) -> &'static str {
        match self {
            Subgroup::U1xU1 => "U1xU1",
            Subgroup::SU2 => "SU2",
            Subgroup::U2 => "U2",
            Subgroup::SO3 => "SO3",
        }
    }

    pub fn parse(s: &str) -> Result<Subgroup> {
        Subgroup::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Argument(format!("unknown subgroup {s:?}")))
    }
}

/// Multiplicity of `(p, q)` in the representation induced from the trivial
/// representation of `subgroup`.
pub fn induced_multiplicity(subgroup: Subgroup, rep: IrrepLabel) -> u32 {
    let (p, q) = (rep.p, rep.q);
    match subgroup {
        Subgroup::U1xU1 => {
            if p % 3 == q % 3 {
                p.min(q) + 1
            } else {
                0
            }
        }
        Subgroup::SU2 => 1,
        Subgroup::U2 => u32::from(p == q),
        Subgroup::SO3 => u32::from(p % 2 == 0 && q % 2 == 0),
    }
}

/// Either coordinate system for a multiplet inside `(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightInput {
    RS { r: i64, s: i64 },
    IY { i2: i64, y3: i64 },
}

/// Converts between `(r, s)` and `(I, Y)`; `M` is set to `I`.
///
/// `r = I + Y/2 + (p−q)/3`, `s = I − Y/2 + (q−p)/3`.
pub fn weight_conversion(rep: IrrepLabel, arg: WeightInput) -> Result<WeightLabel> {
    let (r, s) = match arg {
        WeightInput::RS { r, s } => (r, s),
        WeightInput::IY { i2, y3 } => {
            let p = rep.p as i64;
            let q = rep.q as i64;
            let r6 = 3 * i2 + y3 + 2 * (p - q);
            let s6 = 3 * i2 - y3 + 2 * (q - p);
            if i2 < 0 || r6 % 6 != 0 || s6 % 6 != 0 {
                return Err(Error::InvalidWeight(format!(
                    "(I, Y) = ({}, {}) is not a multiplet of {rep}",
                    half_str(i2 as i32),
                    third_str(y3 as i32)
                )));
            }
            (r6 / 6, s6 / 6)
        }
    };
    if r < 0 || s < 0 || r > rep.p as i64 || s > rep.q as i64 {
        return Err(Error::InvalidWeight(format!(
            "(r, s) = ({r}, {s}) outside [0,{}]x[0,{}]",
            rep.p, rep.q
        )));
    }
    let (i2, y3) = rs_to_iy(rep, r as u32, s as u32);
    Ok(WeightLabel {
        i2,
        m2: i2 as i32,
        y3,
        r: r as u32,
        s: s as u32,
    })
}

/// Full validation of `(I, M, Y)` inside `rep`.
pub fn weight(rep: IrrepLabel, i2: i64, m2: i64, y3: i64) -> Result<WeightLabel> {
    let w = weight_conversion(rep, WeightInput::IY { i2, y3 })?;
    let m2 = i32::try_from(m2).map_err(|_| Error::InvalidWeight(format!("M2 = {m2}")))?;
    w.with_m2(m2)
}

/// Decimal rendering of a doubled half-integer (`3` → `"1.5"`).
pub fn half_str(x2: i32) -> String {
    if x2 % 2 == 0 {
        format!("{}", x2 / 2)
    } else {
        let sign = if x2 < 0 { "-" } else { "" };
        format!("{sign}{}.5", x2.unsigned_abs() / 2)
    }
}

/// Fraction rendering of a tripled third-integer (`-2` → `"-2/3"`).
pub fn third_str(x3: i32) -> String {
    if x3 % 3 == 0 {
        format!("{}", x3 / 3)
    } else {
        format!("{x3}/3")
    }
}
