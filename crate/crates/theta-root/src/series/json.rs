//! JSON wire format for series.
//!
//! A univariate series serializes as
//! `{"var":"q","order":N,"coeffs":["1","1","2",...]}` with coefficients as
//! decimal text so arbitrary precision survives the round trip. A series
//! with polynomial coefficients nests each polynomial as an array of decimal
//! text, lowest degree first:
//! `{"var":"q","order":N,"coeffs":[["0","1"],["0","1"],...]}`.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::tpoly::TPoly;
use super::{QSeries, Series, TQSeries};
use crate::Error;

#[derive(Serialize, Deserialize)]
struct QSeriesWire {
    var: String,
    order: usize,
    coeffs: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct TQSeriesWire {
    var: String,
    order: usize,
    coeffs: Vec<Vec<String>>,
}

impl QSeries {
    pub fn to_json(&self) -> String {
        let wire = QSeriesWire {
            var: "q".to_string(),
            order: self.order(),
            coeffs: self.coeffs().iter().map(|c| c.to_string()).collect(),
        };
        serde_json::to_string(&wire).expect("series serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        let wire: QSeriesWire =
            serde_json::from_str(text).map_err(|e| Error::InvalidSeriesJson(e.to_string()))?;
        if wire.var != "q" {
            return Err(Error::InvalidSeriesJson(format!(
                "expected variable \"q\", found {:?}",
                wire.var
            )));
        }
        if wire.coeffs.len() != wire.order + 1 {
            return Err(Error::InvalidSeriesJson(format!(
                "order {} requires {} coefficients, found {}",
                wire.order,
                wire.order + 1,
                wire.coeffs.len()
            )));
        }
        let coeffs = wire
            .coeffs
            .iter()
            .map(|s| parse_decimal(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Series::from_coeffs(coeffs))
    }
}

impl TQSeries {
    pub fn to_json(&self) -> String {
        let wire = TQSeriesWire {
            var: "q".to_string(),
            order: self.order(),
            coeffs: self
                .coeffs()
                .iter()
                .map(|p| p.coeffs().iter().map(|c| c.to_string()).collect())
                .collect(),
        };
        serde_json::to_string(&wire).expect("series serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        let wire: TQSeriesWire =
            serde_json::from_str(text).map_err(|e| Error::InvalidSeriesJson(e.to_string()))?;
        if wire.var != "q" {
            return Err(Error::InvalidSeriesJson(format!(
                "expected variable \"q\", found {:?}",
                wire.var
            )));
        }
        if wire.coeffs.len() != wire.order + 1 {
            return Err(Error::InvalidSeriesJson(format!(
                "order {} requires {} coefficient polynomials, found {}",
                wire.order,
                wire.order + 1,
                wire.coeffs.len()
            )));
        }
        let coeffs = wire
            .coeffs
            .iter()
            .map(|poly| {
                poly.iter()
                    .map(|s| parse_decimal(s))
                    .collect::<Result<Vec<_>, _>>()
                    .map(TPoly::new)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Series::from_coeffs(coeffs))
    }
}

fn parse_decimal(s: &str) -> Result<BigInt, Error> {
    BigInt::from_str(s)
        .map_err(|_| Error::InvalidSeriesJson(format!("not a decimal integer: {:?}", s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qseries_round_trip() {
        let s = QSeries::from_ints(&[1, 1, 2, 4, 9]);
        let json = s.to_json();
        assert_eq!(
            json,
            r#"{"var":"q","order":4,"coeffs":["1","1","2","4","9"]}"#
        );
        assert_eq!(QSeries::from_json(&json).unwrap(), s);
    }

    #[test]
    fn tqseries_round_trip() {
        let t = TQSeries::t(2);
        let json = t.to_json();
        assert_eq!(json, r#"{"var":"q","order":2,"coeffs":[["0","1"],[],[]]}"#);
        assert_eq!(TQSeries::from_json(&json).unwrap(), t);
    }

    #[test]
    fn rejects_wrong_lengths_and_variables() {
        assert!(QSeries::from_json(r#"{"var":"q","order":3,"coeffs":["1"]}"#).is_err());
        assert!(QSeries::from_json(r#"{"var":"z","order":0,"coeffs":["1"]}"#).is_err());
        assert!(QSeries::from_json(r#"{"var":"q","order":0,"coeffs":["x"]}"#).is_err());
    }

    #[test]
    fn huge_coefficients_survive() {
        let big = BigInt::from_str("123456789012345678901234567890123456789").unwrap();
        let s = QSeries::from_coeffs(vec![BigInt::from(1), big.clone()]);
        let back = QSeries::from_json(&s.to_json()).unwrap();
        assert_eq!(back.coeff(1), &big);
    }
}
