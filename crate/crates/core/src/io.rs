//! JSON file formats for cones, cone combinations, germs, Gram families and
//! evaluation points. Rationals are written as `"p/q"` strings; integers may
//! be plain JSON numbers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::cones::{ConeElement, LatticeCone};
use crate::error::{Error, Result};
use crate::germs::{Denominator, LinearForm, MeromorphicGerm, Polynomial, EXACT};
use crate::linalg::{format_rational, parse_rational, InnerProductForm, RatVector, Rational};

/// A number in a file: a JSON integer, a JSON float (points only) or a
/// `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Float(f64),
    Str(String),
}

impl Num {
    pub fn from_rational(r: &Rational) -> Num {
        match r.is_integer().then(|| r.to_integer().to_i64()).flatten() {
            Some(i) => Num::Int(i),
            None => Num::Str(format_rational(r)),
        }
    }

    pub fn from_bigint(i: &BigInt) -> Num {
        i.to_i64().map_or_else(|| Num::Str(i.to_string()), Num::Int)
    }

    fn to_rational(&self, field: &str) -> Result<Rational> {
        match self {
            Num::Int(i) => Ok(Rational::from_integer((*i).into())),
            Num::Str(s) => parse_rational(s).map_err(|_| Error::Input(format!("{field}: invalid rational {s:?}"))),
            Num::Float(x) => Err(Error::Input(format!("{field}: expected an exact rational, found {x}"))),
        }
    }

    fn to_f64(&self, field: &str) -> Result<f64> {
        match self {
            Num::Float(x) => Ok(*x),
            Num::Int(i) => Ok(*i as f64),
            Num::Str(_) => Ok(crate::germs::to_f64(&self.to_rational(field)?)),
        }
    }
}

fn rational_row(row: &[Num], field: &str) -> Result<RatVector> {
    row.iter()
        .enumerate()
        .map(|(j, x)| x.to_rational(&format!("{field}[{j}]")))
        .collect::<Result<Vec<_>>>()
        .map(RatVector::new)
}

fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if path == "." {
            Error::Input(inner.to_string())
        } else {
            Error::Input(format!("{path}: {inner}"))
        }
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serialisable")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeFile {
    pub ambient_dim: usize,
    pub generators: Vec<Vec<Num>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<Vec<Vec<Num>>>,
}

impl ConeFile {
    pub fn from_cone(c: &LatticeCone) -> ConeFile {
        let k = c.ambient_dim();
        let pad = |v: RatVector| v.padded(k).coords().iter().map(Num::from_rational).collect::<Vec<_>>();
        ConeFile {
            ambient_dim: k,
            generators: c.generator_vectors().into_iter().map(pad).collect(),
            lattice: (!c.is_zero()).then(|| c.lattice().basis().into_iter().map(pad).collect()),
        }
    }

    pub fn to_cone(&self) -> Result<LatticeCone> {
        self.to_cone_at("")
    }

    fn to_cone_at(&self, prefix: &str) -> Result<LatticeCone> {
        let k = self.ambient_dim;
        let rows = |rows: &[Vec<Num>], name: &str| -> Result<Vec<RatVector>> {
            rows.iter()
                .enumerate()
                .map(|(i, r)| {
                    let field = format!("{prefix}{name}[{i}]");
                    if r.len() != k {
                        return Err(Error::Input(format!("{field}: expected {k} entries, found {}", r.len())));
                    }
                    rational_row(r, &field)
                })
                .collect()
        };
        let gens = rows(&self.generators, "generators")?;
        if self.generators.is_empty() {
            return Ok(LatticeCone::zero(k));
        }
        let lattice = self.lattice.as_ref().map(|l| rows(l, "lattice")).transpose()?;
        let c = LatticeCone::from_rational(&gens, lattice.as_deref())
            .map_err(|e| Error::Input(format!("{prefix}generators: {e}")))?;
        Ok(pad_cone(c, k))
    }
}

fn pad_cone(c: LatticeCone, k: usize) -> LatticeCone {
    c.with_ambient_dim(k)
}

pub fn parse_cone(text: &str) -> Result<LatticeCone> {
    parse_json::<ConeFile>(text)?.to_cone()
}

pub fn cone_to_json(c: &LatticeCone) -> String {
    to_json(&ConeFile::from_cone(c))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeTermFile {
    pub coeff: Num,
    pub cone: ConeFile,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeElementFile {
    pub terms: Vec<ConeTermFile>,
}

impl ConeElementFile {
    pub fn from_element(x: &ConeElement) -> Self {
        ConeElementFile {
            terms: x
                .iter()
                .map(|(c, q)| ConeTermFile { coeff: Num::Str(format_rational(q)), cone: ConeFile::from_cone(c) })
                .collect(),
        }
    }

    pub fn to_element(&self) -> Result<ConeElement> {
        let mut out = ConeElement::zero();
        for (i, t) in self.terms.iter().enumerate() {
            let coeff = t.coeff.to_rational(&format!("terms[{i}].coeff"))?;
            out.add_term(coeff, t.cone.to_cone_at(&format!("terms[{i}].cone."))?);
        }
        Ok(out)
    }
}

pub fn parse_cone_element(text: &str) -> Result<ConeElement> {
    parse_json::<ConeElementFile>(text)?.to_element()
}

pub fn cone_element_to_json(x: &ConeElement) -> String {
    to_json(&ConeElementFile::from_element(x))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorFile {
    pub form: Vec<Num>,
    pub pow: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialFile {
    pub exps: Vec<u32>,
    pub coeff: Num,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GermTermFile {
    pub den: Vec<FactorFile>,
    pub num: Vec<MonomialFile>,
}

/// `valid_up_to` is `null` for germs known exactly in every degree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GermFile {
    pub ambient_dim: usize,
    pub valid_up_to: Option<i64>,
    pub terms: Vec<GermTermFile>,
}

impl GermFile {
    pub fn from_germ(g: &MeromorphicGerm) -> GermFile {
        let k = g.ambient_dim();
        let terms = g
            .terms()
            .map(|(d, p)| GermTermFile {
                den: d
                    .factors()
                    .iter()
                    .map(|(l, s)| FactorFile {
                        form: l.vector().padded(k).coords().iter().map(Num::from_rational).collect(),
                        pow: *s,
                    })
                    .collect(),
                num: p
                    .terms()
                    .map(|(m, c)| {
                        let mut exps = m.clone();
                        exps.resize(k.max(exps.len()), 0);
                        MonomialFile { exps, coeff: Num::Str(format_rational(c)) }
                    })
                    .collect(),
            })
            .collect();
        let v = g.valid_up_to();
        GermFile { ambient_dim: k, valid_up_to: (v != EXACT).then_some(v), terms }
    }

    pub fn to_germ(&self) -> Result<MeromorphicGerm> {
        let k = self.ambient_dim;
        let mut terms = Vec::new();
        for (i, t) in self.terms.iter().enumerate() {
            let mut scale = Rational::one();
            let mut factors = Vec::new();
            for (j, f) in t.den.iter().enumerate() {
                let field = format!("terms[{i}].den[{j}]");
                if f.form.len() > k {
                    return Err(Error::Input(format!("{field}.form: longer than ambient_dim {k}")));
                }
                if f.pow == 0 {
                    return Err(Error::Input(format!("{field}.pow: must be positive")));
                }
                let v = rational_row(&f.form, &format!("{field}.form"))?;
                let (l, c) = LinearForm::normalize(&v)
                    .ok_or_else(|| Error::Input(format!("{field}.form: zero linear form")))?;
                scale /= num_traits::pow(c, f.pow as usize);
                factors.push((l, f.pow));
            }
            let mut p = Polynomial::zero();
            for (j, m) in t.num.iter().enumerate() {
                let field = format!("terms[{i}].num[{j}]");
                if m.exps.len() > k {
                    return Err(Error::Input(format!("{field}.exps: longer than ambient_dim {k}")));
                }
                p.add_term(m.exps.clone(), m.coeff.to_rational(&format!("{field}.coeff"))?);
            }
            terms.push((Denominator::from_factors(factors), p.scale(&scale)));
        }
        Ok(MeromorphicGerm::from_terms(terms, k, self.valid_up_to.unwrap_or(EXACT)))
    }
}

pub fn parse_germ(text: &str) -> Result<MeromorphicGerm> {
    parse_json::<GermFile>(text)?.to_germ()
}

pub fn germ_to_json(g: &MeromorphicGerm) -> String {
    to_json(&GermFile::from_germ(g))
}

/// `{"dims": [k, ...], "gram": {"k": [[...]]}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GramFile {
    pub dims: Vec<usize>,
    pub gram: BTreeMap<String, Vec<Vec<Num>>>,
}

impl GramFile {
    pub fn to_form(&self) -> Result<InnerProductForm> {
        let mut family = BTreeMap::new();
        for k in &self.dims {
            let rows = self
                .gram
                .get(&k.to_string())
                .ok_or_else(|| Error::Input(format!("gram: missing matrix for dimension {k}")))?;
            let m = rows
                .iter()
                .enumerate()
                .map(|(i, r)| rational_row(r, &format!("gram.{k}[{i}]")).map(RatVector::into_coords))
                .collect::<Result<Vec<_>>>()?;
            family.insert(*k, m);
        }
        for key in self.gram.keys() {
            if !self.dims.iter().any(|k| k.to_string() == *key) {
                return Err(Error::Input(format!("gram.{key}: dimension not listed in dims")));
            }
        }
        InnerProductForm::from_family(family)
    }
}

pub fn parse_gram(text: &str) -> Result<InnerProductForm> {
    parse_json::<GramFile>(text)?.to_form()
}

/// An evaluation point: `{"point": [x, ...]}` with real coordinates given
/// as numbers or rational strings, or `{"re": [...], "im": [...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointFile {
    Real { point: Vec<Num> },
    Complex { re: Vec<Num>, im: Vec<Num> },
}

impl PointFile {
    pub fn to_point(&self) -> Result<Vec<Complex64>> {
        match self {
            PointFile::Real { point } => point
                .iter()
                .enumerate()
                .map(|(i, x)| Ok(Complex64::new(x.to_f64(&format!("point[{i}]"))?, 0.0)))
                .collect(),
            PointFile::Complex { re, im } => {
                if re.len() != im.len() {
                    return Err(Error::Input("im: length differs from re".into()));
                }
                re.iter()
                    .zip(im)
                    .enumerate()
                    .map(|(i, (a, b))| {
                        Ok(Complex64::new(a.to_f64(&format!("re[{i}]"))?, b.to_f64(&format!("im[{i}]"))?))
                    })
                    .collect()
            }
        }
    }
}

pub fn parse_point(text: &str) -> Result<Vec<Complex64>> {
    parse_json::<PointFile>(text)?.to_point()
}
