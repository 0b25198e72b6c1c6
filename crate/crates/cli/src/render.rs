//! Text renderings of Stirling triangles reduced modulo `m`.

use fubini_core::stirling::{stirling_matrix_mod, StirlingKind};

pub const MAX_SIZE: usize = 1024;

fn cell(residue: u64) -> char {
    match residue {
        0 => '.',
        1..=35 => char::from_digit(residue as u32, 36).expect("radix-36 digit"),
        _ => '#',
    }
}

/// One line per row `n`: `.` for zero, `1-9a-z` for residues 1 to 35, `#`
/// above that.
pub fn ascii(kind: StirlingKind, modulus: u64, size: usize) -> String {
    let rows = stirling_matrix_mod(kind, size, modulus);
    let mut out = String::with_capacity(size * (size + 1));
    for row in rows {
        out.extend(row.into_iter().map(cell));
        out.push('\n');
    }
    out
}

/// Plain (P1) PBM with a black pixel wherever the residue is nonzero.
pub fn pbm(kind: StirlingKind, modulus: u64, size: usize) -> String {
    let rows = stirling_matrix_mod(kind, size, modulus);
    let mut out = format!("P1\n{size} {size}\n");
    for row in rows {
        out.extend(row.into_iter().map(|r| if r == 0 { '0' } else { '1' }));
        out.push('\n');
    }
    out
}
