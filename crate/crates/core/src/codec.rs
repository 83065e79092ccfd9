//! Text formats: digraph6 and plain edge lists.
//!
//! digraph6 layout: optional `>>digraph6<<` header, then `&`, then the order
//! `n` (one byte `n + 63` for `n <= 62`, otherwise `~` plus three bytes, or
//! `~~` plus six bytes, each carrying 6 bits big-endian), then the `n * n`
//! adjacency bits row-major, diagonal included, zero-padded to a multiple of 6
//! and emitted six at a time as `group + 63`.

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub const DIGRAPH6_HEADER: &str = ">>digraph6<<";

fn push_size(out: &mut String, n: usize) {
    let push6 = |out: &mut String, value: usize, groups: u32| {
        for g in (0..groups).rev() {
            out.push(char::from(((value >> (6 * g)) & 0x3f) as u8 + 63));
        }
    };
    if n <= 62 {
        out.push(char::from(n as u8 + 63));
    } else if n <= 258_047 {
        out.push('~');
        push6(out, n, 3);
    } else {
        out.push_str("~~");
        push6(out, n, 6);
    }
}

/// Encodes without the optional header.
pub fn to_digraph6(d: &Digraph) -> String {
    let n = d.order();
    let mut out = String::from("&");
    push_size(&mut out, n);
    let total = n * n;
    let mut group = 0u8;
    for idx in 0..total.div_ceil(6) * 6 {
        let bit = idx < total && d.has_dart(idx / n, idx % n);
        group = group << 1 | bit as u8;
        if idx % 6 == 5 {
            out.push(char::from(group + 63));
            group = 0;
        }
    }
    out
}

/// Decodes a single digraph6 string; `line` is used for error positions.
pub fn from_digraph6_line(text: &str, line: usize) -> Result<Digraph> {
    let err = |offset: usize, message: String| Error::Parse {
        line,
        offset,
        message,
    };
    let trimmed = text.trim_end();
    let (body, mut offset) = match trimmed.strip_prefix(DIGRAPH6_HEADER) {
        Some(rest) => (rest, DIGRAPH6_HEADER.len()),
        None => (trimmed, 0),
    };
    let bytes = body.as_bytes();
    if bytes.first() != Some(&b'&') {
        return Err(err(offset, "digraph6 data must start with '&'".into()));
    }
    let mut pos = 1;
    let six = |pos: usize| -> Result<usize> {
        match bytes.get(pos) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
            Some(&b) => Err(err(
                offset + pos,
                format!("invalid digraph6 byte 0x{b:02x}"),
            )),
            None => Err(err(
                offset + pos,
                "digraph6 data ends inside the size field".into(),
            )),
        }
    };
    let n = if bytes.get(pos) == Some(&b'~') {
        let (start, groups) = if bytes.get(pos + 1) == Some(&b'~') {
            (pos + 2, 6)
        } else {
            (pos + 1, 3)
        };
        let mut n = 0usize;
        for g in 0..groups {
            n = n << 6 | six(start + g)?;
        }
        pos = start + groups;
        n
    } else {
        let n = six(pos)?;
        pos += 1;
        n
    };
    offset += pos;
    let data = &bytes[pos..];
    let total = n
        .checked_mul(n)
        .ok_or_else(|| err(offset, format!("order {n} is too large")))?;
    let expected = total.div_ceil(6);
    if data.len() != expected {
        return Err(err(
            offset + data.len().min(expected),
            format!(
                "expected {expected} adjacency bytes for order {n}, found {}",
                data.len()
            ),
        ));
    }
    let mut matrix = vec![false; total];
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(offset + i, format!("invalid digraph6 byte 0x{b:02x}")));
        }
        let group = b - 63;
        for k in 0..6 {
            let idx = i * 6 + k;
            let bit = group >> (5 - k) & 1 == 1;
            if idx < total {
                matrix[idx] = bit;
            } else if bit {
                return Err(err(offset + i, "nonzero padding bit".into()));
            }
        }
    }
    if let Some(v) = (0..n).find(|&v| matrix[v * n + v]) {
        return Err(err(offset + (v * n + v) / 6, format!("loop at vertex {v}")));
    }
    Digraph::from_matrix(n, &matrix)
}

pub fn from_digraph6(text: &str) -> Result<Digraph> {
    from_digraph6_line(text, 1)
}

/// One digraph per nonempty line.
pub fn read_digraph6_lines(text: &str) -> Result<Vec<Digraph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| from_digraph6_line(l, i + 1))
        .collect()
}

/// Edge-list text: a line `n m`, then `m` lines `u v` (0-based). Blank lines
/// and lines starting with `#` are ignored.
pub fn from_edge_list(text: &str) -> Result<Digraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let fields: Vec<&str> = l.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line,
                offset: 0,
                message: format!("expected two integers, found `{l}`"),
            });
        }
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line,
                offset: l.find(s).unwrap_or(0),
                message: format!("`{s}` is not a non-negative integer"),
            })
        };
        Ok((parse(fields[0])?, parse(fields[1])?))
    };
    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        offset: 0,
        message: "empty edge list: expected `n m`".into(),
    })?;
    let (n, m) = pair(line, header)?;
    let mut darts = Vec::with_capacity(m);
    for (line, l) in lines {
        let (u, v) = pair(line, l)?;
        if u >= n || v >= n || u == v {
            return Err(Error::Parse {
                line,
                offset: 0,
                message: format!("invalid dart ({u}, {v}) for order {n}"),
            });
        }
        darts.push((u, v));
    }
    if darts.len() != m {
        return Err(Error::Parse {
            line,
            offset: 0,
            message: format!("header announces {m} darts, found {}", darts.len()),
        });
    }
    Digraph::new(n, &darts)
}

pub fn to_edge_list(d: &Digraph) -> String {
    let mut out = format!("{} {}\n", d.order(), d.size());
    for (u, v) in d.darts() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn digon_encodes_as_spec_example() {
        let digon = Digraph::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(to_digraph6(&digon), "&AW");
        assert_eq!(from_digraph6("&AW").unwrap(), digon);
        assert_eq!(from_digraph6(">>digraph6<<&AW\n").unwrap(), digon);
    }

    #[test]
    fn small_cases() {
        assert_eq!(to_digraph6(&Digraph::empty(0)), "&?");
        assert_eq!(to_digraph6(&Digraph::empty(1)), "&@?");
        // 0->1, 1->2, 2->0: bits 010 001 100 -> 010001 100000
        let c3 = Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(to_digraph6(&c3), "&BP_");
    }

    #[test]
    fn large_order_header() {
        let d = Digraph::new(63, &[(0, 62), (62, 1)]).unwrap();
        let s = to_digraph6(&d);
        assert!(s.starts_with("&~??~"));
        assert_eq!(from_digraph6(&s).unwrap(), d);
    }

    #[test]
    fn decode_errors_carry_positions() {
        assert!(matches!(
            from_digraph6("AW"),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(from_digraph6("&AWW"), Err(Error::Parse { .. })));
        // diagonal bit set: 1000 -> 100000 = 32 -> '_'
        let e = from_digraph6("&A_").unwrap_err();
        assert!(e.to_string().contains("loop"), "{e}");
        // padding bit set: 0110 01 -> 25 -> 'X'
        assert!(from_digraph6("&AX").is_err());
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let text = "3 3\n0 1\n# comment\n1 2\n2 0\n";
        let d = from_edge_list(text).unwrap();
        assert_eq!(d.size(), 3);
        assert_eq!(from_edge_list(&to_edge_list(&d)).unwrap(), d);
        let e = from_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(e.to_string().contains("announces 2"));
        let e = from_edge_list("3 1\n0 x\n").unwrap_err();
        assert!(matches!(
            e,
            Error::Parse {
                line: 2,
                offset: 2,
                ..
            }
        ));
        assert!(from_edge_list("2 1\n1 1\n").is_err());
    }

    fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
                let darts: Vec<_> = (0..n * n)
                    .filter(|&i| bits[i] && i / n != i % n)
                    .map(|i| (i / n, i % n))
                    .collect();
                Digraph::new(n, &darts).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn digraph6_round_trip(d in arb_digraph(40)) {
            prop_assert_eq!(from_digraph6(&to_digraph6(&d)).unwrap(), d);
        }

        #[test]
        fn edge_list_agrees_with_digraph6(d in arb_digraph(12)) {
            let via_edges = from_edge_list(&to_edge_list(&d)).unwrap();
            let via_d6 = from_digraph6(&to_digraph6(&d)).unwrap();
            prop_assert_eq!(via_edges, via_d6);
        }
    }
}
