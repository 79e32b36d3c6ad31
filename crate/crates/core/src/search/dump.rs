//! Binary distance-field dump, version 1.
//!
//! Layout: `HCDF`, version byte, `k` (u8), `n` (u32 LE), piece code (u8),
//! source ordinal (u64 LE), then one byte per vertex in ordinal order with
//! `0xFF` for unreachable vertices.

use std::io::{Read, Write};

use super::{DistanceField, UNREACHED};
use crate::error::{Error, Result};
use crate::lattice::{index_vertex, Board};
use crate::pieces::PieceId;

pub const HCDF_MAGIC: &[u8; 4] = b"HCDF";
pub const HCDF_VERSION: u8 = 1;
const UNREACHABLE_BYTE: u8 = 0xFF;

pub fn write_field<W: Write>(field: &DistanceField, mut out: W) -> Result<()> {
    let board = field.board;
    let k = u8::try_from(board.k())
        .map_err(|_| Error::Format(format!("k={} does not fit the header", board.k())))?;
    let mut body = Vec::with_capacity(field.len());
    for (i, &raw) in field.raw().iter().enumerate() {
        body.push(match raw {
            UNREACHED => UNREACHABLE_BYTE,
            d if d < u16::from(UNREACHABLE_BYTE) => d as u8,
            d => {
                return Err(Error::Format(format!(
                    "distance {d} at {} does not fit in a version-1 dump",
                    index_vertex(&board, i)
                )))
            }
        });
    }
    let source = board.encode(field.source.coords()) as u64;
    out.write_all(HCDF_MAGIC)?;
    out.write_all(&[HCDF_VERSION, k])?;
    out.write_all(&board.n().to_le_bytes())?;
    out.write_all(&[field.piece.code()])?;
    out.write_all(&source.to_le_bytes())?;
    out.write_all(&body)?;
    out.flush()?;
    Ok(())
}

pub fn read_field<R: Read>(mut input: R) -> Result<DistanceField> {
    let mut header = [0u8; 19];
    input
        .read_exact(&mut header)
        .map_err(|e| Error::Format(format!("truncated header: {e}")))?;
    if &header[..4] != HCDF_MAGIC {
        return Err(Error::Format("bad magic".into()));
    }
    if header[4] != HCDF_VERSION {
        return Err(Error::Format(format!("unsupported version {}", header[4])));
    }
    let k = u32::from(header[5]);
    let n = u32::from_le_bytes(header[6..10].try_into().unwrap());
    let piece = PieceId::from_code(header[10])
        .ok_or_else(|| Error::Format(format!("unknown piece code {}", header[10])))?;
    let source = u64::from_le_bytes(header[11..19].try_into().unwrap());
    let board = Board::new(n, k).map_err(|e| Error::Format(e.to_string()))?;
    if source >= board.vertex_count() as u64 {
        return Err(Error::Format(format!("source ordinal {source} outside {board}")));
    }
    let mut body = vec![0u8; board.vertex_count()];
    input
        .read_exact(&mut body)
        .map_err(|e| Error::Format(format!("truncated body: {e}")))?;
    let mut extra = [0u8; 1];
    if input.read(&mut extra)? != 0 {
        return Err(Error::Format("trailing bytes after body".into()));
    }
    let values = body
        .into_iter()
        .map(|b| if b == UNREACHABLE_BYTE { UNREACHED } else { u16::from(b) })
        .collect();
    Ok(DistanceField::from_raw(
        board,
        piece,
        index_vertex(&board, source as usize),
        values,
    ))
}
