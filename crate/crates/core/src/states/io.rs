//! Plain-text density-matrix files.
//!
//! ```text
//! # optional comments
//! dim=4
//! basis=computational
//! 0.5+0i 0+0i 0+0i 0.5+0i
//! ...
//! ```
//!
//! `basis` is `computational`, `bell` or `custom`. A custom basis is followed
//! by a second block of `dim` rows holding the basis unitary (columns are the
//! basis vectors). Entries are written with the shortest representation that
//! round-trips exactly.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_complex::Complex64;

use super::{BasisSpec, DensityMatrix};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses `a+bi` / `a-bi`, a bare real `a` or a bare imaginary `bi`.
fn parse_complex(token: &str, line: usize) -> Result<Complex64> {
    let number = |s: &str| {
        s.parse::<f64>()
            .map_err(|_| parse_error(line, format!("'{s}' in entry '{token}' is not a number")))
    };
    let Some(body) = token.strip_suffix('i') else {
        return Ok(Complex64::new(number(token)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => Ok(Complex64::new(number(&body[..k])?, number(body[k..].trim_start_matches('+'))?)),
        None => Ok(Complex64::new(0.0, number(body)?)),
    }
}

fn format_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", z.re, sign, z.im.abs())
}

pub fn parse_density_matrix(text: &str) -> Result<DensityMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let mut header = |key: &str| -> Result<(usize, String)> {
        let (no, line) = lines
            .next()
            .ok_or_else(|| parse_error(0, format!("missing '{key}=' header")))?;
        let value = line
            .strip_prefix(key)
            .and_then(|rest| rest.trim_start().strip_prefix('='))
            .ok_or_else(|| parse_error(no, format!("expected '{key}=<value>', found '{line}'")))?;
        Ok((no, value.trim().to_string()))
    };

    let (dim_line, dim_text) = header("dim")?;
    let dim: usize = dim_text
        .parse()
        .ok()
        .filter(|&d| d > 0)
        .ok_or_else(|| parse_error(dim_line, format!("invalid dimension '{dim_text}'")))?;
    let (basis_line, basis_name) = header("basis")?;

    let mut read_block = |what: &str| -> Result<ComplexMatrix> {
        let mut entries = Vec::with_capacity(dim * dim);
        for row in 0..dim {
            let (no, line) = lines.next().ok_or_else(|| {
                parse_error(0, format!("{what}: expected {dim} rows, found {row}"))
            })?;
            let parsed = line
                .split_whitespace()
                .map(|tok| parse_complex(tok, no))
                .collect::<Result<Vec<_>>>()?;
            if parsed.len() != dim {
                return Err(parse_error(
                    no,
                    format!("{what}: expected {dim} entries, found {}", parsed.len()),
                ));
            }
            entries.extend(parsed);
        }
        Ok(ComplexMatrix::from_vec(entries))
    };

    let matrix = read_block("matrix")?;
    let basis = match basis_name.as_str() {
        "computational" => BasisSpec::Computational,
        "bell" => BasisSpec::Bell,
        "custom" => BasisSpec::custom(read_block("custom basis")?)?,
        other => return Err(parse_error(basis_line, format!("unknown basis '{other}'"))),
    };
    if let Some((no, line)) = lines.next() {
        return Err(parse_error(no, format!("unexpected trailing content '{line}'")));
    }
    DensityMatrix::new(matrix, basis)
}

pub fn load_density_matrix(path: impl AsRef<Path>) -> Result<DensityMatrix> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_density_matrix(&text)
}

pub fn write_density_matrix(rho: &DensityMatrix) -> String {
    let mut out = String::new();
    let dim = rho.dim();
    let _ = writeln!(out, "dim={dim}");
    let _ = writeln!(out, "basis={}", rho.basis().name());
    let mut block = |m: &ComplexMatrix| {
        for i in 0..dim {
            let row: Vec<String> = (0..dim).map(|j| format_complex(m[(i, j)])).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    };
    block(rho.matrix());
    if let BasisSpec::Custom(u) = rho.basis() {
        block(u);
    }
    out
}

pub fn save_density_matrix(rho: &DensityMatrix, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, write_density_matrix(rho)).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Invariant;
    use crate::states::{class2_state, BellKind, Ket};

    #[test]
    fn complex_tokens() {
        assert_eq!(parse_complex("0.5+0i", 1).unwrap(), Complex64::new(0.5, 0.0));
        assert_eq!(
            parse_complex("-0.25-0.125i", 1).unwrap(),
            Complex64::new(-0.25, -0.125)
        );
        assert_eq!(
            parse_complex("1e-3+2.5E-4i", 1).unwrap(),
            Complex64::new(1e-3, 2.5e-4)
        );
        assert_eq!(parse_complex("-1e+2-3e-1i", 1).unwrap(), Complex64::new(-100.0, -0.3));
        assert_eq!(parse_complex("0.5", 3).unwrap(), Complex64::new(0.5, 0.0));
        assert_eq!(parse_complex("-0.5i", 3).unwrap(), Complex64::new(0.0, -0.5));
        assert!(parse_complex("0.5+i", 3).is_err());
        assert!(parse_complex("abc+1i", 3).is_err());
    }

    #[test]
    fn round_trip_is_exact() {
        let rho = class2_state(BellKind::PsiPlus, Ket::K00, 0.3).unwrap();
        let back = parse_density_matrix(&write_density_matrix(&rho)).unwrap();
        assert!(back.matrix().approx_eq(rho.matrix(), 1e-15));
        assert_eq!(back.basis(), rho.basis());
    }

    #[test]
    fn bell_and_custom_bases_round_trip() {
        let rho = class2_state(BellKind::PsiPlus, Ket::K00, 0.3).unwrap();
        let in_bell = rho.express_in_basis(&BasisSpec::Bell).unwrap();
        let back = parse_density_matrix(&write_density_matrix(&in_bell)).unwrap();
        assert_eq!(back.basis(), &BasisSpec::Bell);
        assert!(back.matrix().approx_eq(in_bell.matrix(), 1e-15));

        let h = std::f64::consts::FRAC_1_SQRT_2;
        let hadamard = ComplexMatrix::from_real(&[h, h, h, -h]);
        let u = crate::linalg::kron(&hadamard, &hadamard);
        let custom = rho.express_in_basis(&BasisSpec::custom(u).unwrap()).unwrap();
        let back = parse_density_matrix(&write_density_matrix(&custom)).unwrap();
        assert_eq!(back.basis(), custom.basis());
        assert!(back.matrix().approx_eq(custom.matrix(), 1e-15));
    }

    #[test]
    fn comments_are_ignored() {
        let text = "# maximally mixed\ndim=2\n# basis next\nbasis=computational\n0.5+0i 0+0i\n0+0i 0.5+0i\n";
        let rho = parse_density_matrix(text).unwrap();
        assert_eq!(rho.dim(), 2);
    }

    #[test]
    fn trace_violation_is_named() {
        let text = "dim=2\nbasis=computational\n0.5+0i 0+0i\n0+0i 0.4+0i\n";
        match parse_density_matrix(text) {
            Err(Error::Validation { invariant, .. }) => assert_eq!(invariant, Invariant::Trace),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn hermiticity_violation_is_named() {
        let text = "dim=2\nbasis=computational\n0.5+0i 0.2+0i\n0+0i 0.5+0i\n";
        match parse_density_matrix(text) {
            Err(Error::Validation { invariant, .. }) => {
                assert_eq!(invariant, Invariant::Hermiticity)
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn structural_errors_report_lines() {
        let short_row = "dim=2\nbasis=computational\n0.5+0i\n0+0i 0.5+0i\n";
        assert!(matches!(
            parse_density_matrix(short_row),
            Err(Error::Parse { line: 3, .. })
        ));
        let bad_basis = "dim=2\nbasis=hadamard\n0.5+0i 0+0i\n0+0i 0.5+0i\n";
        assert!(matches!(
            parse_density_matrix(bad_basis),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_density_matrix("basis=bell\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
