//! Reader and writer for DIMACS shortest-path `.gr` files.
//!
//! ```text
//! c comment
//! p sp <n> <m>
//! a <u> <v> <w>
//! ```
//!
//! Vertex ids are 1-based in the file and 0-based in memory. Gzip-compressed
//! files are recognised by their magic bytes.

use std::fs::File;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use flate2::read::MultiGzDecoder;

use crate::graph::{build_bigraph, Arc, BiGraph, VertexId};
use crate::{Error, Result};

const GZIP_MAGIC: [u8; 2] = [0x1f, 0x8b];

/// Parses one `.gr` stream into `(n, arcs)`. Duplicate arcs are preserved.
pub fn parse_dimacs_gr<R: BufRead>(reader: R) -> Result<(usize, Vec<Arc>)> {
    let mut header: Option<(usize, usize)> = None;
    let mut arcs = Vec::new();

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let mut fields = line.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        match tag {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(Error::Format {
                        line: lineno,
                        msg: "duplicate problem line".into(),
                    });
                }
                let kind = fields.next();
                if kind != Some("sp") {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("expected `p sp <n> <m>`, got problem type {kind:?}"),
                    });
                }
                let n = parse_field::<usize>(fields.next(), lineno, "vertex count")?;
                let m = parse_field::<usize>(fields.next(), lineno, "arc count")?;
                expect_end(fields, lineno)?;
                if n > u32::MAX as usize {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("vertex count {n} too large"),
                    });
                }
                arcs.reserve(m);
                header = Some((n, m));
            }
            "a" => {
                let Some((n, _)) = header else {
                    return Err(Error::Format {
                        line: lineno,
                        msg: "arc line before problem line".into(),
                    });
                };
                let u = parse_field::<u64>(fields.next(), lineno, "arc source")?;
                let v = parse_field::<u64>(fields.next(), lineno, "arc target")?;
                let w = parse_field::<i64>(fields.next(), lineno, "arc weight")?;
                expect_end(fields, lineno)?;
                for id in [u, v] {
                    if id == 0 || id > n as u64 {
                        return Err(Error::VertexRange {
                            line: lineno,
                            id,
                            n,
                        });
                    }
                }
                if w < 0 {
                    return Err(Error::NegativeWeight {
                        line: lineno,
                        weight: w,
                    });
                }
                arcs.push((VertexId(u as u32 - 1), VertexId(v as u32 - 1), w as u64));
            }
            other => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("unknown line type `{other}`"),
                });
            }
        }
    }

    let Some((n, m)) = header else {
        return Err(Error::Format {
            line: 0,
            msg: "missing problem line".into(),
        });
    };
    if arcs.len() != m {
        return Err(Error::Format {
            line: 0,
            msg: format!(
                "problem line announces {m} arcs, file contains {}",
                arcs.len()
            ),
        });
    }
    Ok((n, arcs))
}

fn parse_field<T: std::str::FromStr>(field: Option<&str>, line: usize, what: &str) -> Result<T> {
    let field = field.ok_or_else(|| Error::Parse {
        line,
        msg: format!("missing {what}"),
    })?;
    field.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("bad {what} `{field}`"),
    })
}

fn expect_end<'a>(mut fields: impl Iterator<Item = &'a str>, line: usize) -> Result<()> {
    match fields.next() {
        None => Ok(()),
        Some(extra) => Err(Error::Parse {
            line,
            msg: format!("unexpected trailing field `{extra}`"),
        }),
    }
}

/// Opens a file for reading, transparently decompressing gzip.
pub fn open_maybe_gz(path: impl AsRef<Path>) -> Result<Box<dyn BufRead>> {
    let mut reader = BufReader::new(File::open(path)?);
    let is_gz = reader.fill_buf()?.starts_with(&GZIP_MAGIC);
    if is_gz {
        Ok(Box::new(BufReader::new(MultiGzDecoder::new(reader))))
    } else {
        Ok(Box::new(reader))
    }
}

/// Same as [`parse_dimacs_gr`] for an arbitrary byte stream, decompressing
/// gzip input.
pub fn parse_dimacs_gr_bytes<R: Read>(reader: R) -> Result<(usize, Vec<Arc>)> {
    let mut reader = BufReader::new(reader);
    if reader.fill_buf()?.starts_with(&GZIP_MAGIC) {
        parse_dimacs_gr(BufReader::new(MultiGzDecoder::new(reader)))
    } else {
        parse_dimacs_gr(reader)
    }
}

pub fn read_dimacs_gr(path: impl AsRef<Path>) -> Result<(usize, Vec<Arc>)> {
    parse_dimacs_gr(open_maybe_gz(path)?)
}

/// Loads a distance file and a time file and pairs their arcs.
pub fn load_bigraph(gr1: impl AsRef<Path>, gr2: impl AsRef<Path>) -> Result<BiGraph> {
    let (n1, arcs1) = read_dimacs_gr(gr1)?;
    let (n2, arcs2) = read_dimacs_gr(gr2)?;
    if n1 != n2 {
        return Err(Error::Consistency {
            index: 0,
            msg: format!("vertex counts differ: {n1} vs {n2}"),
        });
    }
    build_bigraph(n1, &arcs1, &arcs2)
}

pub fn write_dimacs_gr<W: Write>(
    mut out: W,
    n: usize,
    arcs: &[Arc],
    comment: Option<&str>,
) -> Result<()> {
    if let Some(comment) = comment {
        for line in comment.lines() {
            writeln!(out, "c {line}")?;
        }
    }
    writeln!(out, "p sp {n} {}", arcs.len())?;
    for &(u, v, w) in arcs {
        writeln!(out, "a {} {} {w}", u.0 + 1, v.0 + 1)?;
    }
    out.flush()?;
    Ok(())
}

/// Writes `g` as a distance/time file pair.
pub fn write_bigraph(g: &BiGraph, gr1: impl AsRef<Path>, gr2: impl AsRef<Path>) -> Result<()> {
    let (a1, a2) = g.to_arc_lists();
    write_dimacs_gr(
        std::io::BufWriter::new(File::create(gr1)?),
        g.vertex_count(),
        &a1,
        Some("first criterion"),
    )?;
    write_dimacs_gr(
        std::io::BufWriter::new(File::create(gr2)?),
        g.vertex_count(),
        &a2,
        Some("second criterion"),
    )?;
    Ok(())
}
