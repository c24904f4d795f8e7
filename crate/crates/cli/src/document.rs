//! JSON multivector documents:
//! `{"signature": {"p": 2, "q": 0}, "terms": [{"indices": [1, 2], "re": 1, "im": 0}]}`.
//! Coefficients are integers, written as JSON numbers or decimal strings.

use std::collections::BTreeSet;
use std::fmt;

use clifford_brackets::{Blade, Coefficient, ExactMultivector, Signature};
use num_bigint::BigInt;
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocumentError {
    /// Malformed JSON, with 1-based position.
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    Validation(String),
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::Parse {
                line,
                column,
                message,
            } => {
                write!(f, "parse error at line {line}, column {column}: {message}")
            }
            DocumentError::Validation(m) => write!(f, "invalid document: {m}"),
        }
    }
}

impl std::error::Error for DocumentError {}

#[derive(Debug, Clone, PartialEq)]
pub struct MultivectorDocument {
    pub signature: Signature,
    pub value: ExactMultivector,
}

fn invalid(msg: impl Into<String>) -> DocumentError {
    DocumentError::Validation(msg.into())
}

fn integer(v: &Value, what: &str) -> Result<BigInt, DocumentError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.trim().to_owned(),
        _ => return Err(invalid(format!("{what} must be an integer"))),
    };
    text.parse::<BigInt>()
        .map_err(|_| invalid(format!("{what} must be an integer, got {text}")))
}

fn small(v: &Value, what: &str) -> Result<usize, DocumentError> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| invalid(format!("{what} must be a non-negative integer")))
}

fn object<'a>(
    v: &'a Value,
    what: &str,
) -> Result<&'a serde_json::Map<String, Value>, DocumentError> {
    v.as_object()
        .ok_or_else(|| invalid(format!("{what} must be an object")))
}

fn field<'a>(
    m: &'a serde_json::Map<String, Value>,
    key: &str,
    what: &str,
) -> Result<&'a Value, DocumentError> {
    m.get(key)
        .ok_or_else(|| invalid(format!("{what} is missing \"{key}\"")))
}

impl MultivectorDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let root: Value = serde_json::from_str(text).map_err(|e| DocumentError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let root = object(&root, "document")?;
        let sig = object(field(root, "signature", "document")?, "signature")?;
        let p = small(field(sig, "p", "signature")?, "p")?;
        let q = small(field(sig, "q", "signature")?, "q")?;
        let signature = Signature::new(p, q).map_err(|e| invalid(e.to_string()))?;
        let n = signature.dim();

        let terms = field(root, "terms", "document")?
            .as_array()
            .ok_or_else(|| invalid("terms must be an array"))?;
        let mut seen = BTreeSet::new();
        let mut value = ExactMultivector::zero();
        for (i, term) in terms.iter().enumerate() {
            let what = format!("terms[{i}]");
            let t = object(term, &what)?;
            let indices: Vec<usize> = field(t, "indices", &what)?
                .as_array()
                .ok_or_else(|| invalid(format!("{what}.indices must be an array")))?
                .iter()
                .map(|x| small(x, &format!("{what}.indices")))
                .collect::<Result<_, _>>()?;
            if let Some(bad) = indices.iter().find(|&&a| a == 0 || a > n) {
                return Err(invalid(format!("{what}: index {bad} outside [1, {n}]")));
            }
            let blade = Blade::from_indices(&indices)
                .map_err(|_| invalid(format!("{what}: indices must be strictly ascending")))?;
            if !seen.insert(blade) {
                return Err(invalid(format!("{what}: duplicate blade {blade}")));
            }
            let re = t
                .get("re")
                .map_or(Ok(BigInt::from(0)), |v| integer(v, &format!("{what}.re")))?;
            let im = t
                .get("im")
                .map_or(Ok(BigInt::from(0)), |v| integer(v, &format!("{what}.im")))?;
            value.add_term(blade, Coefficient::new(re, im));
        }
        Ok(MultivectorDocument { signature, value })
    }
}

fn coefficient_text(c: &Coefficient) -> String {
    let zero = BigInt::from(0);
    let imag = |im: &BigInt| match im.to_string().as_str() {
        "1" => "i".to_owned(),
        "-1" => "-i".to_owned(),
        s => format!("{s}i"),
    };
    if c.im == zero {
        c.re.to_string()
    } else if c.re == zero {
        imag(&c.im)
    } else if c.im < zero {
        format!("({}-{})", c.re, imag(&-c.im.clone()))
    } else {
        format!("({}+{})", c.re, imag(&c.im))
    }
}

/// Compact rendering such as `2e^{1} - 3i e^{12}`.
pub fn render(x: &ExactMultivector) -> String {
    if x.is_zero() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (i, (blade, c)) in x.terms().enumerate() {
        let mut coef = coefficient_text(c);
        if i > 0 {
            match coef.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    coef = rest.to_owned();
                }
                None => out.push_str(" + "),
            }
        }
        let sep = if coef.ends_with('i') { " " } else { "" };
        let coef = match coef.as_str() {
            "1" => String::new(),
            "-1" => "-".to_owned(),
            _ => coef + sep,
        };
        out.push_str(&format!("{coef}{blade}"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_numbers_and_strings() {
        let doc = MultivectorDocument::parse(
            r#"{"signature":{"p":2,"q":1},"terms":[
                {"indices":[],"re":1,"im":0},
                {"indices":[1,3],"re":"-123456789012345678901234567890","im":2}]}"#,
        )
        .unwrap();
        assert_eq!(doc.signature, Signature::new(2, 1).unwrap());
        assert_eq!(doc.value.len(), 2);
        let big = "-123456789012345678901234567890".parse::<BigInt>().unwrap();
        assert_eq!(
            doc.value.get(Blade::from_indices(&[1, 3]).unwrap()),
            Some(&Coefficient::new(big, BigInt::from(2)))
        );
    }

    #[test]
    fn syntax_errors_carry_location() {
        let err = MultivectorDocument::parse("{\n  \"signature\": {\"p\": 1,, }\n}").unwrap_err();
        assert!(matches!(err, DocumentError::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn validation_errors() {
        let cases = [
            r#"{"signature":{"p":1,"q":0},"terms":[{"indices":[2],"re":1}]}"#,
            r#"{"signature":{"p":2,"q":0},"terms":[{"indices":[2,1],"re":1}]}"#,
            r#"{"signature":{"p":2,"q":0},"terms":[{"indices":[1],"re":1},{"indices":[1],"im":1}]}"#,
            r#"{"signature":{"p":2,"q":0},"terms":[{"indices":[0],"re":1}]}"#,
            r#"{"signature":{"p":2,"q":0},"terms":[{"indices":[1],"re":1.5}]}"#,
            r#"{"signature":{"p":2,"q":0}}"#,
            r#"{"signature":{"p":20,"q":0},"terms":[]}"#,
        ];
        for c in cases {
            assert!(
                matches!(
                    MultivectorDocument::parse(c),
                    Err(DocumentError::Validation(_))
                ),
                "{c}"
            );
        }
    }

    #[test]
    fn rendering() {
        let e1 = Blade::generator(1);
        let e12 = Blade::from_indices(&[1, 2]).unwrap();
        let c = |re: i64, im: i64| Coefficient::new(BigInt::from(re), BigInt::from(im));
        let x = ExactMultivector::from_terms([(e1, c(2, 0))]);
        assert_eq!(render(&x), "2e^{1}");
        let y = ExactMultivector::from_terms([(Blade::IDENTITY, c(-1, 0)), (e12, c(0, -3))]);
        assert_eq!(render(&y), "-e - 3i e^{12}");
        let z = ExactMultivector::from_terms([(e12, c(1, 1))]);
        assert_eq!(render(&z), "(1+i)e^{12}");
        assert_eq!(render(&ExactMultivector::zero()), "0");
    }
}
