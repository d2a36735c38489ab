use std::fmt;

use serde::Serialize;

use super::FieldSpec;
use crate::error::{Error, Result};

/// Largest field for which the full table is materialized.
pub const MAX_TABLE_SIZE: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldTableRow {
    /// `None` for the zero row.
    pub exponent: Option<u32>,
    pub index: u32,
    pub power: String,
    pub polynomial: String,
    /// Coefficients printed from highest to lowest degree.
    pub tuple: String,
}

/// Every element of a field in three representations: as a power of the
/// primitive element, as a polynomial in it, and as a coefficient tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldTable {
    pub p: u32,
    pub m: u32,
    pub modulus: String,
    pub rows: Vec<FieldTableRow>,
}

pub(crate) const SYMBOL: &str = "α";

impl FieldTable {
    pub(crate) fn build(field: &FieldSpec) -> Result<Self> {
        if field.q() > MAX_TABLE_SIZE {
            return Err(Error::TableTooLarge(field.q() as u64));
        }
        if !field.is_primitive() {
            return Err(Error::NoPrimitiveElement);
        }
        let row = |exponent: Option<u32>, index: u32| {
            let e = field.wrap(index);
            let power = match exponent {
                None => "0".to_string(),
                Some(0) => "1".to_string(),
                Some(1) => SYMBOL.to_string(),
                Some(t) => format!("{SYMBOL}^{t}"),
            };
            let digits: Vec<String> = field.coeffs(e).iter().rev().map(u32::to_string).collect();
            FieldTableRow {
                exponent,
                index,
                power,
                polynomial: field.format_element(e, SYMBOL),
                tuple: format!("({})", digits.join(",")),
            }
        };
        let mut rows = vec![row(None, 0)];
        rows.extend((0..field.q() - 1).map(|t| row(Some(t), field.exp_idx(t))));
        let g = super::FqPoly::from_indices(field.modulus().to_vec());
        Ok(Self {
            p: field.p(),
            m: field.m(),
            modulus: g.display(),
            rows,
        })
    }
}

impl fmt::Display for FieldTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let headers = [
            format!("as powers of {SYMBOL}"),
            "as polynomials".to_string(),
            format!("as {}-tuples in Z_{}^{}", self.m, self.p, self.m),
        ];
        let widths: Vec<usize> = (0..3)
            .map(|c| {
                self.rows
                    .iter()
                    .map(|r| [&r.power, &r.polynomial, &r.tuple][c].chars().count())
                    .chain(std::iter::once(headers[c].chars().count()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |f: &mut fmt::Formatter<'_>, cells: [&str; 3]| -> fmt::Result {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            writeln!(f, "{}", padded.join(" | ").trim_end())
        };
        writeln!(f, "GF({}^{}) modulo {}", self.p, self.m, self.modulus)?;
        line(f, [&headers[0], &headers[1], &headers[2]])?;
        for r in &self.rows {
            line(f, [&r.power, &r.polynomial, &r.tuple])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2_and_f4_tables() {
        let t = FieldSpec::prime(2).unwrap().table().unwrap();
        assert_eq!(t.rows.len(), 2);
        assert_eq!(t.rows[1].polynomial, "1");

        let t = FieldSpec::new(2, 2, Some(&[1, 1, 1]))
            .unwrap()
            .table()
            .unwrap();
        let a2 = t.rows.iter().find(|r| r.exponent == Some(2)).unwrap();
        assert_eq!(a2.polynomial, "1+α");
        assert_eq!(a2.tuple, "(1,1)");
    }

    #[test]
    fn exponents_cover_group_once() {
        let t = FieldSpec::new(3, 2, None).unwrap().table().unwrap();
        assert_eq!(t.rows.len(), 9);
        let mut idx: Vec<u32> = t.rows.iter().map(|r| r.index).collect();
        idx.sort_unstable();
        assert_eq!(idx, (0..9).collect::<Vec<_>>());
    }

    #[test]
    fn too_large() {
        let f = FieldSpec::new(2, 17, None).unwrap();
        assert_eq!(f.table().unwrap_err(), Error::TableTooLarge(1 << 17));
    }
}
