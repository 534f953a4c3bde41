//! JSON wire formats for polynomials, basis states and sphere functions.
//!
//! Integers travel as decimal strings. Terms are written in lexicographic
//! order of the exponent vector `(z1, z2, z3, w1, w2, w3)`, so serializing a
//! parsed document reproduces it byte for byte.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use schwinger_core::basis::{BasisKey, NormalizedState};
use schwinger_core::induced::{is_traceless, SphereFunction};
use schwinger_core::{Error, Monomial, Polynomial, Result, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRecord {
    pub exps: [u32; 6],
    pub num: String,
    pub den: String,
    pub surd_num: String,
    pub surd_den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalRecord {
    pub num: String,
    pub den: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(non_snake_case)]
pub struct KeyRecord {
    pub p: u32,
    pub q: u32,
    pub I2: i64,
    pub M2: i64,
    pub Y3: i64,
    pub m2: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateRecord {
    pub key: KeyRecord,
    pub terms: Vec<TermRecord>,
    pub norm_sq: RationalRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelRecord {
    pub p: u32,
    pub q: u32,
    pub scale_sq: RationalRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SphereRecord {
    pub terms: Vec<TermRecord>,
    pub traceless: bool,
    pub channels: Vec<ChannelRecord>,
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.parse()
        .map_err(|_| Error::Argument(format!("not a decimal integer: {s:?}")))
}

fn rational(num: &str, den: &str) -> Result<BigRational> {
    let d = parse_int(den)?;
    if d == BigInt::from(0) {
        return Err(Error::Argument("zero denominator".into()));
    }
    Ok(BigRational::new(parse_int(num)?, d))
}

pub fn rational_record(r: &BigRational) -> RationalRecord {
    RationalRecord {
        num: r.numer().to_string(),
        den: r.denom().to_string(),
    }
}

pub fn rational_from_record(r: &RationalRecord) -> Result<BigRational> {
    rational(&r.num, &r.den)
}

pub fn poly_records(f: &Polynomial) -> Vec<TermRecord> {
    f.terms()
        .map(|(m, c)| {
            let surd = c.surd();
            TermRecord {
                exps: *m.exps(),
                num: c.rat().numer().to_string(),
                den: c.rat().denom().to_string(),
                surd_num: surd.numer().to_string(),
                surd_den: surd.denom().to_string(),
            }
        })
        .collect()
}

pub fn poly_from_records(terms: &[TermRecord]) -> Result<Polynomial> {
    let mut out = Polynomial::zero();
    for t in terms {
        let c = Scalar::new(
            rational(&t.num, &t.den)?,
            rational(&t.surd_num, &t.surd_den)?,
        );
        out.add_term(Monomial::new(t.exps), &c);
    }
    Ok(out)
}

pub fn key_record(key: &BasisKey) -> KeyRecord {
    KeyRecord {
        p: key.rep.p,
        q: key.rep.q,
        I2: key.weight.i2 as i64,
        M2: key.weight.m2 as i64,
        Y3: key.weight.y3 as i64,
        m2: key.m2 as i64,
    }
}

pub fn key_from_record(k: &KeyRecord) -> Result<BasisKey> {
    BasisKey::new(k.p, k.q, k.I2, k.M2, k.Y3, k.m2)
}

pub fn state_record(s: &NormalizedState) -> StateRecord {
    StateRecord {
        key: key_record(&s.key),
        terms: poly_records(&s.poly),
        norm_sq: rational_record(&s.norm_sq),
    }
}

pub fn state_from_record(r: &StateRecord) -> Result<NormalizedState> {
    let norm_sq = rational_from_record(&r.norm_sq)?;
    if norm_sq <= BigRational::from_integer(0.into()) {
        return Err(Error::Argument("norm_sq must be positive".into()));
    }
    Ok(NormalizedState {
        poly: poly_from_records(&r.terms)?,
        norm_sq,
        key: key_from_record(&r.key)?,
    })
}

pub fn sphere_record(psi: &SphereFunction) -> SphereRecord {
    SphereRecord {
        terms: poly_records(&psi.poly),
        traceless: psi.traceless,
        channels: psi
            .channel_scale_sq
            .iter()
            .map(|(&(p, q), s)| ChannelRecord {
                p,
                q,
                scale_sq: rational_record(s),
            })
            .collect(),
    }
}

pub fn sphere_from_record(r: &SphereRecord) -> Result<SphereFunction> {
    let poly = poly_from_records(&r.terms)?;
    if r.traceless && !is_traceless(&poly) {
        return Err(Error::NotTraceless);
    }
    let mut channel_scale_sq = BTreeMap::new();
    for c in &r.channels {
        channel_scale_sq.insert((c.p, c.q), rational_from_record(&c.scale_sq)?);
    }
    Ok(SphereFunction {
        poly,
        traceless: r.traceless,
        channel_scale_sq,
    })
}

fn to_pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("records always serialize");
    s.push('\n');
    s
}

fn from_str<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Argument(format!("invalid JSON: {e}")))
}

pub fn poly_to_json(f: &Polynomial) -> String {
    to_pretty(&poly_records(f))
}

pub fn poly_from_json(s: &str) -> Result<Polynomial> {
    poly_from_records(&from_str::<Vec<TermRecord>>(s)?)
}

pub fn state_to_json(s: &NormalizedState) -> String {
    to_pretty(&state_record(s))
}

pub fn state_from_json(s: &str) -> Result<NormalizedState> {
    state_from_record(&from_str::<StateRecord>(s)?)
}

pub fn sphere_to_json(psi: &SphereFunction) -> String {
    to_pretty(&sphere_record(psi))
}

pub fn sphere_from_json(s: &str) -> Result<SphereFunction> {
    sphere_from_record(&from_str::<SphereRecord>(s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use schwinger_core::basis::basis_state;
    use schwinger_core::induced::equivalence_map;
    use schwinger_core::Mode;

    #[test]
    fn poly_round_trip() {
        let f = &Polynomial::var(Mode::A1).scale(&Scalar::from_frac(-3, 4))
            + &Polynomial::var(Mode::B3).scale(&Scalar::new(
                schwinger_core::scalar::int(1),
                schwinger_core::scalar::frac(1, 3),
            ));
        let s = poly_to_json(&f);
        assert_eq!(poly_from_json(&s).unwrap(), f);
        assert_eq!(poly_to_json(&poly_from_json(&s).unwrap()), s);
        let recs: Vec<TermRecord> = serde_json::from_str(&s).unwrap();
        assert_eq!(recs[0].exps, [0, 0, 0, 0, 0, 1]);
        assert_eq!(recs[1].exps, [1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn state_round_trip() {
        let key = BasisKey::new(2, 1, 1, -1, 1, 8).unwrap();
        let st = basis_state(&key).unwrap();
        let s = state_to_json(&st);
        let back = state_from_json(&s).unwrap();
        assert_eq!(back, st);
        assert_eq!(state_to_json(&back), s);
    }

    #[test]
    fn sphere_round_trip() {
        let psi = equivalence_map(&Polynomial::var(Mode::A2)).unwrap();
        let s = sphere_to_json(&psi);
        assert_eq!(sphere_from_json(&s).unwrap(), psi);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(poly_from_json("{").is_err());
        assert!(poly_from_json(
            r#"[{"exps":[0,0,0,0,0,0],"num":"1","den":"0","surd_num":"0","surd_den":"1"}]"#
        )
        .is_err());
        assert!(poly_from_json(
            r#"[{"exps":[0,0,0,0,0,0],"num":"x","den":"1","surd_num":"0","surd_den":"1"}]"#
        )
        .is_err());
    }
}
