//! 1-based disjoint cycle notation, e.g. `(1,2)(3,14,9,20)`.

use crate::error::{Error, Result};
use crate::group::Permutation;

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<(usize, u64)> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected a point number"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        let value = text
            .parse::<u64>()
            .map_err(|_| Error::parse(start, format!("point {text} is too large")))?;
        Ok((start, value))
    }
}

/// Parses disjoint cycles on the points `1..=degree`. Whitespace is ignored,
/// and both `""` and `"()"` denote the identity.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    if degree == 0 {
        return Err(Error::invalid("permutation degree must be positive"));
    }
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    loop {
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(b'(') => cur.pos += 1,
            Some(_) => return Err(Error::parse(cur.pos, "expected '('")),
        }
        cur.skip_ws();
        if cur.peek() == Some(b')') {
            cur.pos += 1;
            continue;
        }
        let mut cycle: Vec<u32> = Vec::new();
        loop {
            cur.skip_ws();
            let (at, point) = cur.number()?;
            if point == 0 || point > degree as u64 {
                return Err(Error::parse(
                    at,
                    format!("point {point} outside 1..={degree}"),
                ));
            }
            let x = (point - 1) as usize;
            if used[x] {
                return Err(Error::parse(at, format!("point {point} repeated")));
            }
            used[x] = true;
            cycle.push(x as u32);
            cur.skip_ws();
            match cur.peek() {
                Some(b',') => cur.pos += 1,
                Some(b')') => {
                    cur.pos += 1;
                    break;
                }
                Some(_) => return Err(Error::parse(cur.pos, "expected ',' or ')'")),
                None => return Err(Error::parse(cur.pos, "unterminated cycle")),
            }
        }
        for (i, &x) in cycle.iter().enumerate() {
            images[x as usize] = cycle[(i + 1) % cycle.len()];
        }
    }
    Permutation::from_images(images)
}

/// Inverse of [`parse_cycles`]: 1-based, comma separated, `()` for the identity.
pub fn emit_cycles(p: &Permutation) -> String {
    let cycles = p.cycles();
    if cycles.is_empty() {
        return "()".to_string();
    }
    cycles
        .iter()
        .map(|c| {
            let points: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            format!("({})", points.join(","))
        })
        .collect()
}
