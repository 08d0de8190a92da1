//! JSON encoding shared by every emitted polynomial:
//! `{"vars": ["x","y"], "terms": [[ex, ey, "coeff"], ...]}` with terms in
//! rendering order and coefficients as decimal strings. Univariate
//! polynomials use the one-variable form `{"vars": ["z"], "terms": [[e, "coeff"], ...]}`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{BiPoly, UniPoly, Var};
use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiPolyJson {
    pub vars: [String; 2],
    pub terms: Vec<(u32, u32, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniPolyJson {
    pub vars: [String; 1],
    pub terms: Vec<(u32, String)>,
}

fn parse_coeff(s: &str) -> Result<BigInt, Error> {
    let c: BigInt = s
        .parse()
        .map_err(|_| Error::Decode(format!("bad coefficient `{s}`")))?;
    if c.is_zero() {
        return Err(Error::Decode("zero coefficient stored".into()));
    }
    Ok(c)
}

impl From<&BiPoly> for BiPolyJson {
    fn from(p: &BiPoly) -> Self {
        let [a, b] = p.vars();
        BiPolyJson {
            vars: [a.name().to_string(), b.name().to_string()],
            terms: p
                .sorted_terms()
                .into_iter()
                .map(|((i, j), c)| (i, j, c.to_string()))
                .collect(),
        }
    }
}

impl TryFrom<BiPolyJson> for BiPoly {
    type Error = Error;

    fn try_from(j: BiPolyJson) -> Result<Self, Error> {
        let vars: [Var; 2] = [j.vars[0].parse()?, j.vars[1].parse()?];
        if vars[0] == vars[1] {
            return Err(Error::Decode("repeated variable".into()));
        }
        let mut seen = BTreeSet::new();
        let mut terms = Vec::with_capacity(j.terms.len());
        for (a, b, c) in j.terms {
            if !seen.insert((a, b)) {
                return Err(Error::Decode(format!("repeated exponent ({a}, {b})")));
            }
            terms.push(((a, b), parse_coeff(&c)?));
        }
        Ok(BiPoly::from_terms(vars, terms))
    }
}

impl From<&UniPoly> for UniPolyJson {
    fn from(p: &UniPoly) -> Self {
        UniPolyJson {
            vars: [p.var().name().to_string()],
            terms: p
                .coeffs()
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as u32, c.to_string()))
                .collect(),
        }
    }
}

impl TryFrom<UniPolyJson> for UniPoly {
    type Error = Error;

    fn try_from(j: UniPolyJson) -> Result<Self, Error> {
        let var: Var = j.vars[0].parse()?;
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (e, c) in j.terms {
            let e = e as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            if !coeffs[e].is_zero() {
                return Err(Error::Decode(format!("repeated exponent {e}")));
            }
            coeffs[e] = parse_coeff(&c)?;
        }
        Ok(UniPoly::new(var, coeffs))
    }
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        BiPolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        BiPolyJson::deserialize(d)?
            .try_into()
            .map_err(serde::de::Error::custom)
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        UniPolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        UniPolyJson::deserialize(d)?
            .try_into()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipoly_encoding_is_sorted_and_stringly() {
        let p = BiPoly::from_i64_terms([Var::X, Var::Z], &[(0, 2, 1), (2, 1, -1), (0, 0, -1), (2, 0, 2)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"vars":["x","z"],"terms":[[2,1,"-1"],[2,0,"2"],[0,2,"1"],[0,0,"-1"]]}"#
        );
        let back: BiPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn big_coefficients_survive() {
        let big: BigInt = "123456789012345678901234567890123456789".parse().unwrap();
        let p = UniPoly::new(Var::Z, vec![big.clone(), -big]);
        let back: UniPoly = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn rejects_non_canonical_input() {
        for bad in [
            r#"{"vars":["x","x"],"terms":[]}"#,
            r#"{"vars":["x","y"],"terms":[[0,0,"0"]]}"#,
            r#"{"vars":["x","y"],"terms":[[0,0,"1"],[0,0,"2"]]}"#,
            r#"{"vars":["x","q"],"terms":[]}"#,
            r#"{"vars":["x","y"],"terms":[[0,0,"1.5"]]}"#,
        ] {
            assert!(serde_json::from_str::<BiPoly>(bad).is_err(), "{bad}");
        }
    }
}
