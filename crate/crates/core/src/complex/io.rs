use super::{Complex, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Parse `.dat` text: a count line followed by that many rows of '0'/'1'.
///
/// Rows may come in any order; duplicates and mixed cardinalities are
/// rejected. The universe size is the row length.
pub fn parse_complex(text: &str) -> Result<Complex> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end_matches('\r')));
    let (ln, head) = lines.next().ok_or_else(|| perr(1, "missing count line"))?;
    let q: usize = head.trim().parse().map_err(|_| perr(ln, format!("bad count {head:?}")))?;
    let mut m: Option<usize> = None;
    let mut card: Option<usize> = None;
    let mut facets = Vec::with_capacity(q);
    for _ in 0..q {
        let (ln, row) = lines.next().ok_or_else(|| perr(ln + facets.len() + 1, "fewer rows than the count"))?;
        let len = row.len();
        match m {
            None => {
                if len == 0 || len > MAX_VERTICES {
                    return Err(perr(ln, format!("row length {len} outside 1..={MAX_VERTICES}")));
                }
                m = Some(len);
            }
            Some(m) if m != len => return Err(perr(ln, format!("row length {len}, expected {m}"))),
            _ => {}
        }
        let mut bits = 0u32;
        for (i, c) in row.bytes().enumerate() {
            match c {
                b'1' => bits |= 1 << i,
                b'0' => {}
                _ => return Err(perr(ln, format!("character {:?} is not 0 or 1", c as char))),
            }
        }
        let s = VertexSet(bits);
        match card {
            None => card = Some(s.len()),
            Some(c) if c != s.len() => {
                return Err(perr(ln, format!("row has {} ones, expected {c}", s.len())))
            }
            _ => {}
        }
        facets.push((s, ln));
    }
    if let Some((ln, rest)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(perr(ln, format!("unexpected trailing content {rest:?}")));
    }
    let mut sorted = facets.clone();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(perr(w[1].1.max(w[0].1), "duplicate row"));
    }
    Complex::new(m.unwrap_or(0), facets.into_iter().map(|(s, _)| s).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_row() {
        let k = parse_complex("1\n111111111110111011100000000").unwrap();
        let expect = VertexSet::from_vertices((1..=11).chain([13, 14, 15, 17, 18, 19]));
        assert_eq!(k.facets(), &[expect]);
        assert_eq!(k.m(), 27);
        assert_eq!(expect.len(), 17);
        let full = parse_complex("1\n111\n").unwrap();
        assert_eq!(full.facets(), &[VertexSet::full(3)]);
    }

    #[test]
    fn errors_name_the_line() {
        let e = parse_complex("2\n110\n11\n").unwrap_err().to_string();
        assert!(e.starts_with("line 3"), "{e}");
        let e = parse_complex("2\n110\n1x0\n").unwrap_err().to_string();
        assert!(e.starts_with("line 3"), "{e}");
        let e = parse_complex("2\n110\n110\n").unwrap_err().to_string();
        assert!(e.starts_with("line 3"), "{e}");
        let e = parse_complex("2\n110\n111\n").unwrap_err().to_string();
        assert!(e.starts_with("line 3"), "{e}");
        assert!(parse_complex("3\n110\n").is_err());
        assert!(parse_complex("x\n").is_err());
    }

    #[test]
    fn round_trip() {
        let text = "3\n110\n101\n011\n";
        assert_eq!(parse_complex(text).unwrap().to_dat(), text);
        assert_eq!(parse_complex("0\n").unwrap().to_dat(), "0\n");
    }
}
