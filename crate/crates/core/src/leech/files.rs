//! The vector-set file format.
//!
//! A file holds one or more sections. Each section starts with a header
//! line `dim=24 denom_sq=8 count=N` (optionally followed by `role=anchor`),
//! then `N` lines of 24 space-separated integer coordinates. Sections are
//! written sorted, so files are bit-reproducible.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use thiserror::Error;

use super::vector::ScaledVector;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error("malformed header line: `{0}`")]
    Header(String),
    #[error("line {line}: expected 24 integer coordinates")]
    Coordinates { line: usize },
    #[error("section declared {declared} vectors but {found} were read")]
    Count { declared: usize, found: usize },
    #[error("unsupported format: dim={dim} denom_sq={denom_sq}")]
    Unsupported { dim: usize, denom_sq: usize },
}

/// One header-delimited block of vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorSection {
    pub role: Option<String>,
    pub vectors: Vec<ScaledVector>,
}

pub fn write_vector_sections(path: &Path, sections: &[VectorSection]) -> Result<(), FileError> {
    let mut w = BufWriter::new(File::create(path)?);
    for section in sections {
        write!(w, "dim=24 denom_sq=8 count={}", section.vectors.len())?;
        if let Some(role) = &section.role {
            write!(w, " role={role}")?;
        }
        writeln!(w)?;
        for v in &section.vectors {
            writeln!(w, "{v}")?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn read_vector_sections(path: &Path) -> Result<Vec<VectorSection>, FileError> {
    let reader = BufReader::new(File::open(path)?);
    let mut sections: Vec<VectorSection> = Vec::new();
    let mut pending: Option<(usize, VectorSection)> = None;
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with("dim=") {
            if let Some((declared, section)) = pending.take() {
                if section.vectors.len() != declared {
                    return Err(FileError::Count {
                        declared,
                        found: section.vectors.len(),
                    });
                }
                sections.push(section);
            }
            let mut dim = 0usize;
            let mut denom_sq = 0usize;
            let mut count = 0usize;
            let mut role = None;
            for field in line.split_whitespace() {
                let (key, value) = field
                    .split_once('=')
                    .ok_or_else(|| FileError::Header(line.to_string()))?;
                match key {
                    "dim" => dim = value.parse().map_err(|_| FileError::Header(line.into()))?,
                    "denom_sq" => {
                        denom_sq = value.parse().map_err(|_| FileError::Header(line.into()))?
                    }
                    "count" => count = value.parse().map_err(|_| FileError::Header(line.into()))?,
                    "role" => role = Some(value.to_string()),
                    _ => return Err(FileError::Header(line.to_string())),
                }
            }
            if dim != 24 || denom_sq != 8 {
                return Err(FileError::Unsupported { dim, denom_sq });
            }
            pending = Some((
                count,
                VectorSection {
                    role,
                    vectors: Vec::with_capacity(count),
                },
            ));
        } else {
            let (_, section) = pending
                .as_mut()
                .ok_or_else(|| FileError::Header(line.to_string()))?;
            let mut coords = [0i8; 24];
            let mut n = 0;
            for tok in line.split_whitespace() {
                if n == 24 {
                    return Err(FileError::Coordinates { line: lineno + 1 });
                }
                coords[n] = tok
                    .parse()
                    .map_err(|_| FileError::Coordinates { line: lineno + 1 })?;
                n += 1;
            }
            if n != 24 {
                return Err(FileError::Coordinates { line: lineno + 1 });
            }
            section.vectors.push(ScaledVector::new(coords));
        }
    }
    if let Some((declared, section)) = pending.take() {
        if section.vectors.len() != declared {
            return Err(FileError::Count {
                declared,
                found: section.vectors.len(),
            });
        }
        sections.push(section);
    }
    Ok(sections)
}

/// Writes a single anonymous section, sorted.
pub fn write_vector_set(path: &Path, vectors: &[ScaledVector]) -> Result<(), FileError> {
    let mut sorted = vectors.to_vec();
    sorted.sort_unstable();
    write_vector_sections(
        path,
        &[VectorSection {
            role: None,
            vectors: sorted,
        }],
    )
}

/// Reads a file expected to contain exactly one anonymous section.
pub fn read_vector_set(path: &Path) -> Result<Vec<ScaledVector>, FileError> {
    let sections = read_vector_sections(path)?;
    match <[VectorSection; 1]>::try_from(sections) {
        Ok([section]) => Ok(section.vectors),
        Err(sections) => Err(FileError::Header(format!(
            "expected a single section, found {}",
            sections.len()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tmp(name: &str) -> std::path::PathBuf {
        let mut p = std::env::temp_dir();
        p.push(format!("spherecode-test-{}-{name}", std::process::id()));
        p
    }

    #[test]
    fn set_round_trip_is_bit_reproducible() {
        let mut a = [0i8; 24];
        a[0] = 4;
        a[1] = -4;
        let mut b = [0i8; 24];
        b[3] = 2;
        b[10] = -3;
        let vecs = vec![ScaledVector::new(a), ScaledVector::new(b)];
        let path = tmp("roundtrip.txt");
        write_vector_set(&path, &vecs).unwrap();
        let first = std::fs::read(&path).unwrap();
        let back = read_vector_set(&path).unwrap();
        write_vector_set(&path, &back).unwrap();
        let second = std::fs::read(&path).unwrap();
        assert_eq!(first, second);
        let mut sorted = vecs;
        sorted.sort_unstable();
        assert_eq!(back, sorted);
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn sections_with_roles() {
        let anchor = ScaledVector::new([1; 24]);
        let member = ScaledVector::new([-1; 24]);
        let path = tmp("sections.txt");
        write_vector_sections(
            &path,
            &[
                VectorSection {
                    role: Some("anchor".into()),
                    vectors: vec![anchor],
                },
                VectorSection {
                    role: None,
                    vectors: vec![member],
                },
            ],
        )
        .unwrap();
        let sections = read_vector_sections(&path).unwrap();
        assert_eq!(sections.len(), 2);
        assert_eq!(sections[0].role.as_deref(), Some("anchor"));
        assert_eq!(sections[0].vectors, vec![anchor]);
        assert_eq!(sections[1].role, None);
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn count_mismatch_rejected() {
        let path = tmp("badcount.txt");
        std::fs::write(
            &path,
            "dim=24 denom_sq=8 count=2\n0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n",
        )
        .unwrap();
        assert!(matches!(
            read_vector_sections(&path),
            Err(FileError::Count {
                declared: 2,
                found: 1
            })
        ));
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn wrong_width_rejected() {
        let path = tmp("badwidth.txt");
        std::fs::write(&path, "dim=24 denom_sq=8 count=1\n1 2 3\n").unwrap();
        assert!(matches!(
            read_vector_sections(&path),
            Err(FileError::Coordinates { .. })
        ));
        std::fs::remove_file(&path).ok();
    }
}
