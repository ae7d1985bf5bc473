//! The OF3B on-disk field format.
//!
//! Little-endian, fixed layout:
//!
//! ```text
//! magic   4 bytes  "OF3B"
//! version u32      currently 1
//! domain  u8       0 = space, 1 = frequency
//! dims    3 x u64
//! spacing 3 x f64
//! origin  3 x f64
//! payload N1*N2*N3*8 f64, row-major, third index fastest,
//!         coefficients c0..c7 contiguous per point
//! ```
//!
//! Binary over text because fields are large and the tolerance tests need
//! the exact bytes back.

use std::fmt;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::field::{Domain, OctField3, SamplingGrid};
use crate::octonion::Octonion;

pub const MAGIC: [u8; 4] = *b"OF3B";
pub const VERSION: u32 = 1;

#[derive(Debug)]
pub enum Of3bError {
    Io(io::Error),
    BadMagic([u8; 4]),
    BadVersion(u32),
    BadDomain(u8),
    BadShape([u64; 3]),
}

impl fmt::Display for Of3bError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Of3bError::Io(e) => write!(f, "i/o error: {e}"),
            Of3bError::BadMagic(m) => write!(f, "not an OF3B file (magic {m:02x?})"),
            Of3bError::BadVersion(v) => write!(f, "unsupported OF3B version {v}"),
            Of3bError::BadDomain(d) => write!(f, "invalid domain flag {d}"),
            Of3bError::BadShape(s) => write!(f, "invalid field shape {s:?}"),
        }
    }
}

impl std::error::Error for Of3bError {}

impl From<io::Error> for Of3bError {
    fn from(e: io::Error) -> Self {
        Of3bError::Io(e)
    }
}

/// Refuse shapes whose payload would not fit in memory anyway.
const MAX_POINTS: u64 = 1 << 32;

pub fn write<W: Write>(writer: &mut W, field: &OctField3) -> Result<(), Of3bError> {
    writer.write_all(&MAGIC)?;
    writer.write_all(&VERSION.to_le_bytes())?;
    let domain: u8 = match field.domain {
        Domain::Space => 0,
        Domain::Frequency => 1,
    };
    writer.write_all(&[domain])?;
    for a in 0..3 {
        writer.write_all(&(field.grid.shape[a] as u64).to_le_bytes())?;
    }
    for a in 0..3 {
        writer.write_all(&field.grid.spacing[a].to_le_bytes())?;
    }
    for a in 0..3 {
        writer.write_all(&field.grid.origin[a].to_le_bytes())?;
    }
    for o in field.data() {
        for &c in &o.c {
            writer.write_all(&c.to_le_bytes())?;
        }
    }
    Ok(())
}

pub fn read<R: Read>(reader: &mut R) -> Result<OctField3, Of3bError> {
    let mut magic = [0u8; 4];
    reader.read_exact(&mut magic)?;
    if magic != MAGIC {
        return Err(Of3bError::BadMagic(magic));
    }
    let version = read_u32(reader)?;
    if version != VERSION {
        return Err(Of3bError::BadVersion(version));
    }
    let mut domain_byte = [0u8; 1];
    reader.read_exact(&mut domain_byte)?;
    let domain = match domain_byte[0] {
        0 => Domain::Space,
        1 => Domain::Frequency,
        other => return Err(Of3bError::BadDomain(other)),
    };
    let dims = [read_u64(reader)?, read_u64(reader)?, read_u64(reader)?];
    let total = dims[0]
        .checked_mul(dims[1])
        .and_then(|p| p.checked_mul(dims[2]))
        .filter(|&p| p > 0 && p <= MAX_POINTS)
        .ok_or(Of3bError::BadShape(dims))?;
    let spacing = [read_f64(reader)?, read_f64(reader)?, read_f64(reader)?];
    let origin = [read_f64(reader)?, read_f64(reader)?, read_f64(reader)?];
    if spacing.iter().any(|&d| !d.is_finite() || d <= 0.0) {
        return Err(Of3bError::Io(io::Error::new(
            io::ErrorKind::InvalidData,
            "non-positive grid spacing",
        )));
    }

    let mut data = Vec::with_capacity(total as usize);
    for _ in 0..total {
        let mut c = [0.0f64; 8];
        for slot in &mut c {
            *slot = read_f64(reader)?;
        }
        data.push(Octonion::new(c));
    }
    let grid = SamplingGrid::new(
        [dims[0] as usize, dims[1] as usize, dims[2] as usize],
        spacing,
        origin,
    );
    Ok(OctField3::from_data(grid, domain, data))
}

pub fn write_file(path: &Path, field: &OctField3) -> Result<(), Of3bError> {
    let mut writer = BufWriter::new(File::create(path)?);
    write(&mut writer, field)?;
    writer.flush()?;
    Ok(())
}

pub fn read_file(path: &Path) -> Result<OctField3, Of3bError> {
    let mut reader = BufReader::new(File::open(path)?);
    let field = read(&mut reader)?;
    // trailing bytes mean the header lied about the shape
    let mut probe = [0u8; 1];
    if reader.read(&mut probe)? != 0 {
        return Err(Of3bError::Io(io::Error::new(
            io::ErrorKind::InvalidData,
            "trailing bytes after payload",
        )));
    }
    Ok(field)
}

fn read_u32<R: Read>(reader: &mut R) -> Result<u32, Of3bError> {
    let mut buf = [0u8; 4];
    reader.read_exact(&mut buf)?;
    Ok(u32::from_le_bytes(buf))
}

fn read_u64<R: Read>(reader: &mut R) -> Result<u64, Of3bError> {
    let mut buf = [0u8; 8];
    reader.read_exact(&mut buf)?;
    Ok(u64::from_le_bytes(buf))
}

fn read_f64<R: Read>(reader: &mut R) -> Result<f64, Of3bError> {
    let mut buf = [0u8; 8];
    reader.read_exact(&mut buf)?;
    Ok(f64::from_le_bytes(buf))
}
