//! Rendering and fingerprinting of the signed basis-product matrix.

use nk6_core::octonion::CANONICAL_TRIPLES;
use nk6_core::ProductTable;
use serde::Serialize;
use sha2::{Digest, Sha256};

/// `+k` / `-k` for `eᵢeⱼ = ±e_k`; the diagonal `eᵢ² = −1` is written `-0`.
pub fn entry(table: &ProductTable, i: usize, j: usize) -> String {
    if i == j {
        return "-0".into();
    }
    let (k, sign) = table.basis_product(i, j);
    format!("{}{k}", if sign > 0 { '+' } else { '-' })
}

pub fn matrix(table: &ProductTable) -> Vec<Vec<String>> {
    (1..=7).map(|i| (1..=7).map(|j| entry(table, i, j)).collect()).collect()
}

/// Aligned text form; row `i`, column `j` holds `eᵢeⱼ`.
pub fn render_text(table: &ProductTable) -> String {
    let mut out = String::from("    ");
    for j in 1..=7 {
        out.push_str(&format!(" {:>3}", format!("e{j}")));
    }
    out.push('\n');
    for (i, row) in matrix(table).iter().enumerate() {
        out.push_str(&format!("{:>4}", format!("e{}", i + 1)));
        for cell in row {
            out.push_str(&format!(" {cell:>3}"));
        }
        out.push('\n');
    }
    out
}

/// SHA-256 of the text form.
pub fn fingerprint(table: &ProductTable) -> String {
    hex::encode(Sha256::digest(render_text(table).as_bytes()))
}

#[derive(Serialize)]
pub struct TableJson {
    pub triples: Vec<[u8; 3]>,
    pub matrix: Vec<Vec<String>>,
    pub fingerprint: String,
}

pub fn table_json(table: &ProductTable) -> TableJson {
    TableJson { triples: CANONICAL_TRIPLES.to_vec(), matrix: matrix(table), fingerprint: fingerprint(table) }
}
