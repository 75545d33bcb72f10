//! Constructor expressions such as `DirectProduct(Sym(3),Alt(4))`.
//!
//! ```text
//! spec  := name '(' arg (',' arg)* ')'
//! arg   := integer | spec | '"' cycles '"'
//! ```
//!
//! Recognised constructors: `Sym(n)`, `Alt(n)`, `PSL2(q)`, `SL2(q)`,
//! `PGL2(q)`, `AffineFrobenius(q,n)`, `DirectProduct(a,b)`, `Power(a,k)`,
//! `ExtraspecialSemidirect(p,r)` and `Generators(degree,"cycles",...)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Sym(u64),
    Alt(u64),
    Psl2(u64),
    Sl2(u64),
    Pgl2(u64),
    AffineFrobenius {
        q: u64,
        n: u64,
    },
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    Power(Box<GroupSpec>, u64),
    ExtraspecialSemidirect {
        p: u64,
        r: u64,
    },
    /// Degree and 1-based cycle-notation generators.
    Generators {
        degree: u64,
        cycles: Vec<String>,
    },
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Sym(n) => write!(f, "Sym({n})"),
            GroupSpec::Alt(n) => write!(f, "Alt({n})"),
            GroupSpec::Psl2(q) => write!(f, "PSL2({q})"),
            GroupSpec::Sl2(q) => write!(f, "SL2({q})"),
            GroupSpec::Pgl2(q) => write!(f, "PGL2({q})"),
            GroupSpec::AffineFrobenius { q, n } => write!(f, "AffineFrobenius({q},{n})"),
            GroupSpec::DirectProduct(a, b) => write!(f, "DirectProduct({a},{b})"),
            GroupSpec::Power(a, k) => write!(f, "Power({a},{k})"),
            GroupSpec::ExtraspecialSemidirect { p, r } => {
                write!(f, "ExtraspecialSemidirect({p},{r})")
            }
            GroupSpec::Generators { degree, cycles } => {
                write!(f, "Generators({degree}")?;
                for c in cycles {
                    let compact: String = c.chars().filter(|ch| !ch.is_whitespace()).collect();
                    write!(f, ",\"{compact}\"")?;
                }
                f.write_str(")")
            }
        }
    }
}

enum Arg {
    Int(u64),
    Spec(GroupSpec),
    Text(String),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += self.src[self.pos..].chars().next().unwrap().len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{c}'")))
        }
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        self.skip_ws();
        let start = self.pos;
        let name_len = self.src[start..]
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(self.src.len() - start);
        if name_len == 0 {
            return Err(Error::parse(start, "expected a constructor name"));
        }
        let name = &self.src[start..start + name_len];
        self.pos += name_len;
        self.expect('(')?;
        let mut args = Vec::new();
        loop {
            self.skip_ws();
            let at = self.pos;
            args.push((at, self.arg()?));
            self.skip_ws();
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(')') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(Error::parse(self.pos, "expected ',' or ')'")),
            }
        }
        build(name, start, args)
    }

    fn arg(&mut self) -> Result<Arg> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let len = self.src[start..]
                    .find(|c: char| !c.is_ascii_digit())
                    .unwrap_or(self.src.len() - start);
                self.pos += len;
                self.src[start..self.pos]
                    .parse()
                    .map(Arg::Int)
                    .map_err(|_| Error::parse(start, "integer too large"))
            }
            Some('"') => {
                let start = self.pos;
                let close = self.src[start + 1..]
                    .find('"')
                    .ok_or_else(|| Error::parse(start, "unterminated string"))?;
                let text = self.src[start + 1..start + 1 + close].to_string();
                self.pos = start + close + 2;
                Ok(Arg::Text(text))
            }
            Some(c) if c.is_ascii_alphabetic() => self.spec().map(Arg::Spec),
            _ => Err(Error::parse(self.pos, "expected an argument")),
        }
    }
}

fn build(name: &str, at: usize, args: Vec<(usize, Arg)>) -> Result<GroupSpec> {
    let arity = |n: usize| -> Result<()> {
        if args.len() == n {
            Ok(())
        } else {
            Err(Error::parse(
                at,
                format!("{name} takes {n} argument(s), got {}", args.len()),
            ))
        }
    };
    let int = |i: usize| -> Result<u64> {
        match &args[i] {
            (_, Arg::Int(v)) => Ok(*v),
            (pos, _) => Err(Error::parse(
                *pos,
                format!("{name} expects an integer here"),
            )),
        }
    };
    let spec = |i: usize| -> Result<Box<GroupSpec>> {
        match &args[i] {
            (_, Arg::Spec(s)) => Ok(Box::new(s.clone())),
            (pos, _) => Err(Error::parse(*pos, format!("{name} expects a group here"))),
        }
    };
    Ok(match name {
        "Sym" => {
            arity(1)?;
            GroupSpec::Sym(int(0)?)
        }
        "Alt" => {
            arity(1)?;
            GroupSpec::Alt(int(0)?)
        }
        "PSL2" => {
            arity(1)?;
            GroupSpec::Psl2(int(0)?)
        }
        "SL2" => {
            arity(1)?;
            GroupSpec::Sl2(int(0)?)
        }
        "PGL2" => {
            arity(1)?;
            GroupSpec::Pgl2(int(0)?)
        }
        "AffineFrobenius" => {
            arity(2)?;
            GroupSpec::AffineFrobenius {
                q: int(0)?,
                n: int(1)?,
            }
        }
        "DirectProduct" => {
            arity(2)?;
            GroupSpec::DirectProduct(spec(0)?, spec(1)?)
        }
        "Power" => {
            arity(2)?;
            GroupSpec::Power(spec(0)?, int(1)?)
        }
        "ExtraspecialSemidirect" => {
            arity(2)?;
            GroupSpec::ExtraspecialSemidirect {
                p: int(0)?,
                r: int(1)?,
            }
        }
        "Generators" => {
            if args.len() < 2 {
                return Err(Error::parse(
                    at,
                    "Generators takes a degree and at least one cycle string",
                ));
            }
            let degree = int(0)?;
            let cycles = args[1..]
                .iter()
                .map(|(pos, a)| match a {
                    Arg::Text(t) => Ok(t.clone()),
                    _ => Err(Error::parse(
                        *pos,
                        "Generators expects quoted cycle strings",
                    )),
                })
                .collect::<Result<Vec<_>>>()?;
            GroupSpec::Generators { degree, cycles }
        }
        other => return Err(Error::parse(at, format!("unknown constructor {other:?}"))),
    })
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = Parser { src: s, pos: 0 };
        let spec = parser.spec()?;
        parser.skip_ws();
        if parser.pos != s.len() {
            return Err(Error::parse(parser.pos, "trailing input"));
        }
        Ok(spec)
    }
}
