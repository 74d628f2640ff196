//! Degree syntax: either a comma-separated integer vector (`"-3"`,
//! `"1,0,-1"`) or a signed sum of generators (`"-h3"`, `"-h(2)-h(5)"`,
//! `"h1-2h(4)"`). Generator numbers are 1-based.

use toric_core::{Error, IntVector, Result};

pub fn parse_degree(text: &str, generators: &[IntVector], ambient_dim: usize) -> Result<IntVector> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::Input("empty degree".into()));
    }
    if t.contains('h') {
        let terms = parse_symbolic(&t)?;
        let mut a = IntVector::zeros(ambient_dim);
        for (coeff, k) in terms {
            if k == 0 || k > generators.len() {
                return Err(Error::Input(format!("generator h{k} outside h1..h{}", generators.len())));
            }
            let scaled = IntVector::new(generators[k - 1].iter().map(|x| x * coeff).collect());
            a = &a + &scaled;
        }
        return Ok(a);
    }
    let entries = t
        .split(',')
        .map(|s| s.parse::<i64>().map_err(|_| Error::Input(format!("bad degree entry {s:?} in {text:?}"))))
        .collect::<Result<Vec<_>>>()?;
    if entries.len() != ambient_dim {
        return Err(Error::DimensionMismatch { expected: ambient_dim, found: entries.len() });
    }
    Ok(IntVector::from_i64s(&entries))
}

/// `[(coefficient, generator number)]`.
fn parse_symbolic(t: &str) -> Result<Vec<(i64, usize)>> {
    let bad = || Error::Input(format!("cannot parse symbolic degree {t:?}"));
    let b = t.as_bytes();
    let mut pos = 0;
    let mut out = Vec::new();
    let digits = |pos: &mut usize| {
        let start = *pos;
        while *pos < b.len() && b[*pos].is_ascii_digit() {
            *pos += 1;
        }
        &t[start..*pos]
    };
    while pos < b.len() {
        let sign = match b[pos] {
            b'-' => {
                pos += 1;
                -1
            }
            b'+' => {
                pos += 1;
                1
            }
            _ if out.is_empty() => 1,
            _ => return Err(bad()),
        };
        let c = digits(&mut pos);
        let coeff: i64 = if c.is_empty() { 1 } else { c.parse().map_err(|_| bad())? };
        if pos >= b.len() || b[pos] != b'h' {
            return Err(bad());
        }
        pos += 1;
        let paren = pos < b.len() && b[pos] == b'(';
        if paren {
            pos += 1;
        }
        let k: usize = digits(&mut pos).parse().map_err(|_| bad())?;
        if paren {
            if pos >= b.len() || b[pos] != b')' {
                return Err(bad());
            }
            pos += 1;
        }
        out.push((sign * coeff, k));
    }
    Ok(out)
}
