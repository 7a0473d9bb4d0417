//! Exact-rational parsing and batch-file ingestion (CSV and JSON lines).

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Deserialize;

use genus2_core::{Error, Rat, SexticForm};

/// Parse an exact rational written as `123`, `-4/7`, or a plain decimal
/// like `0.25`.
pub fn parse_rational(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let bad = |_| Error::InvalidInput(format!("not an exact rational: {s:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(bad)?;
        let den: BigInt = den.trim().parse().map_err(bad)?;
        if den.is_zero() {
            return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
        }
        return Ok(Rat::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let digits = frac.trim();
        let scale = BigInt::from(10u32).pow(digits.len() as u32);
        let int_part: BigInt = if int.trim().is_empty() || int.trim() == "-" {
            BigInt::zero()
        } else {
            int.trim().parse().map_err(bad)?
        };
        let frac_part: BigInt = digits.parse().map_err(bad)?;
        let negative = s.trim_start().starts_with('-');
        let total = int_part.magnitude().clone() * scale.magnitude().clone()
            + frac_part.magnitude().clone();
        let mut value = Rat::new(BigInt::from(total), scale);
        if negative {
            value = -value;
        }
        return Ok(value);
    }
    let n: BigInt = s.parse().map_err(bad)?;
    Ok(Rat::from(n))
}

/// Parse "a0,a1,...,a6" into a sextic form.
pub fn parse_coeffs(s: &str) -> Result<SexticForm, Error> {
    let parts: Vec<Rat> = s
        .split(',')
        .map(parse_rational)
        .collect::<Result<_, _>>()?;
    let arr: [Rat; 7] = parts.try_into().map_err(|v: Vec<Rat>| {
        Error::InvalidInput(format!("expected 7 coefficients a0..a6, got {}", v.len()))
    })?;
    SexticForm::new(arr)
}

/// One ingested curve record.
#[derive(Debug, Clone)]
pub struct InputRecord {
    pub id: String,
    pub form: SexticForm,
    pub p: u64,
    pub d: Option<Rat>,
}

#[derive(Deserialize)]
struct JsonRecord {
    id: String,
    #[serde(alias = "coefficients")]
    a: Vec<String>,
    p: u64,
    #[serde(default)]
    d: Option<String>,
}

/// Read a batch file: `.jsonl`/`.json` (one JSON object per line) or CSV
/// with columns `id,a0,..,a6,p[,D]` (header row optional).
pub fn read_records(path: &str) -> Result<Vec<InputRecord>, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
    if path.ends_with(".json") || path.ends_with(".jsonl") {
        return text
            .lines()
            .filter(|line| !line.trim().is_empty())
            .map(|line| {
                let rec: JsonRecord = serde_json::from_str(line)
                    .map_err(|e| Error::InvalidInput(format!("bad JSON line: {e}")))?;
                let coeffs: Vec<Rat> = rec
                    .a
                    .iter()
                    .map(|c| parse_rational(c))
                    .collect::<Result<_, _>>()?;
                let arr: [Rat; 7] = coeffs.try_into().map_err(|v: Vec<Rat>| {
                    Error::InvalidInput(format!("record {}: expected 7 coefficients, got {}", rec.id, v.len()))
                })?;
                Ok(InputRecord {
                    id: rec.id,
                    form: SexticForm::new(arr)?,
                    p: rec.p,
                    d: rec.d.as_deref().map(parse_rational).transpose()?,
                })
            })
            .collect();
    }
    // CSV
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if lineno == 0 && fields.first() == Some(&"id") {
            continue; // header
        }
        if fields.len() != 9 && fields.len() != 10 {
            return Err(Error::InvalidInput(format!(
                "line {}: expected id,a0..a6,p[,D] (9 or 10 fields), got {}",
                lineno + 1,
                fields.len()
            )));
        }
        let id = fields[0].to_string();
        let mut coeffs = Vec::with_capacity(7);
        for f in &fields[1..8] {
            coeffs.push(parse_rational(f)?);
        }
        let arr: [Rat; 7] = coeffs.try_into().unwrap();
        let p: u64 = fields[8]
            .parse()
            .map_err(|_| Error::InvalidInput(format!("line {}: bad prime", lineno + 1)))?;
        let d = match fields.get(9) {
            Some(f) if !f.is_empty() => Some(parse_rational(f)?),
            _ => None,
        };
        out.push(InputRecord {
            id,
            form: SexticForm::new(arr)?,
            p,
            d,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3").unwrap().to_string(), "3");
        assert_eq!(parse_rational("-4/7").unwrap().to_string(), "-4/7");
        assert_eq!(parse_rational("0.25").unwrap().to_string(), "1/4");
        assert_eq!(parse_rational("-1.5").unwrap().to_string(), "-3/2");
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn coeff_parsing() {
        let form = parse_coeffs("1,0,0,0,0,0,-1").unwrap();
        assert_eq!(form.degree(), 6);
        assert!(parse_coeffs("1,2,3").is_err());
        assert!(parse_coeffs("0,0,1,1,1,1,1").is_err());
    }
}
