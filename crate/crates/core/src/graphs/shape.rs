use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::divisor::{DivisorGraph, GraphKind, GraphStats};

/// Shape verdict. Path and cycle lengths count edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ShapeTag {
    Empty,
    Path(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    Complete(usize),
    /// Edge counts of the components, descending.
    UnionOfPaths(Vec<usize>),
    Regular(usize),
    Other,
}

impl fmt::Display for ShapeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeTag::Empty => f.write_str("empty"),
            ShapeTag::Path(n) => write!(f, "path:{n}"),
            ShapeTag::Cycle(n) => write!(f, "cycle:{n}"),
            ShapeTag::CompleteBipartite(m, n) => write!(f, "kmn:{m},{n}"),
            ShapeTag::Complete(n) => write!(f, "complete:{n}"),
            ShapeTag::UnionOfPaths(parts) => write!(f, "union_paths:{}", join(parts)),
            ShapeTag::Regular(k) => write!(f, "regular:{k}"),
            ShapeTag::Other => f.write_str("other"),
        }
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeClass {
    pub tag: ShapeTag,
    pub components: usize,
    pub diameter: usize,
    pub order: usize,
}

/// Per-component structure shared by the classifier and the claim checks.
struct Analysis {
    stats: GraphStats,
    /// Edge counts of components that are paths; `None` if some component
    /// is not a path.
    path_components: Option<Vec<usize>>,
}

fn analyse(g: &DivisorGraph) -> Analysis {
    let stats = g.stats();
    let labels = g.component_labels();
    let mut max_degree = vec![0usize; stats.components];
    for (v, &d) in stats.degrees.iter().enumerate() {
        max_degree[labels[v]] = max_degree[labels[v]].max(d);
    }
    let mut vertices = vec![0usize; stats.components];
    let mut edges = vec![0usize; stats.components];
    for &l in &labels {
        vertices[l] += 1;
    }
    for &(a, _) in &g.edges {
        edges[labels[a]] += 1;
    }
    let path_components = (0..stats.components)
        .map(|c| (max_degree[c] <= 2 && edges[c] + 1 == vertices[c]).then_some(edges[c]))
        .collect::<Option<Vec<usize>>>()
        .map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        });
    Analysis {
        stats,
        path_components,
    }
}

fn is_cycle(a: &Analysis) -> Option<usize> {
    let s = &a.stats;
    (s.components == 1 && s.order >= 3 && s.regular == Some(2)).then_some(s.edge_count)
}

fn is_path(a: &Analysis) -> Option<usize> {
    match &a.path_components {
        Some(parts) if parts.len() == 1 => Some(parts[0]),
        _ => None,
    }
}

/// Part sizes if the graph is connected complete bipartite. For B the parts
/// are (primes, numbers); otherwise (smaller, larger).
fn complete_bipartite_parts(g: &DivisorGraph, a: &Analysis) -> Option<(usize, usize)> {
    if a.stats.components != 1 || a.stats.order < 2 {
        return None;
    }
    let colors = g.two_coloring()?;
    let m = colors.iter().filter(|&&c| c == 0).count();
    let n = colors.len() - m;
    if a.stats.edge_count != m * n {
        return None;
    }
    if g.kind == GraphKind::B {
        Some((g.prime_vertices.len(), g.number_vertices.len()))
    } else {
        Some((m.min(n), m.max(n)))
    }
}

fn is_complete(a: &Analysis) -> Option<usize> {
    let n = a.stats.order;
    (n >= 1 && a.stats.edge_count == n * (n - 1) / 2).then_some(n)
}

pub fn classify_shape(g: &DivisorGraph) -> ShapeClass {
    let a = analyse(g);
    let tag = if a.stats.order == 0 {
        ShapeTag::Empty
    } else if let Some(n) = is_cycle(&a) {
        ShapeTag::Cycle(n)
    } else if let Some(n) = is_path(&a) {
        ShapeTag::Path(n)
    } else if let Some((m, n)) = complete_bipartite_parts(g, &a) {
        ShapeTag::CompleteBipartite(m, n)
    } else if let Some(n) = is_complete(&a) {
        ShapeTag::Complete(n)
    } else if let Some(parts) = a.path_components.clone() {
        ShapeTag::UnionOfPaths(parts)
    } else if let Some(k) = a.stats.regular {
        ShapeTag::Regular(k)
    } else {
        ShapeTag::Other
    };
    ShapeClass {
        tag,
        components: a.stats.components,
        diameter: a.stats.diameter,
        order: a.stats.order,
    }
}

/// One checkable statement about a graph, as written in the corpus.
///
/// Claims are predicates rather than a single verdict, so `kmn:2,1` holds
/// for a graph the classifier calls `path:2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ShapePredicate {
    Empty,
    Path(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    Complete(usize),
    UnionOfPaths(Vec<usize>),
    Regular(usize),
    Components(usize),
    Order(usize),
    Edges(usize),
    Diameter(usize),
    Other,
}

impl ShapePredicate {
    fn holds(&self, g: &DivisorGraph, a: &Analysis) -> bool {
        match self {
            ShapePredicate::Empty => a.stats.order == 0,
            ShapePredicate::Path(n) => is_path(a) == Some(*n),
            ShapePredicate::Cycle(n) => is_cycle(a) == Some(*n),
            ShapePredicate::CompleteBipartite(m, n) => {
                let want = if g.kind == GraphKind::B {
                    (*m, *n)
                } else {
                    (*m.min(n), *m.max(n))
                };
                complete_bipartite_parts(g, a) == Some(want)
            }
            ShapePredicate::Complete(n) => a.stats.components == 1 && is_complete(a) == Some(*n),
            ShapePredicate::UnionOfPaths(parts) => {
                let mut want = parts.clone();
                want.sort_unstable_by(|x, y| y.cmp(x));
                a.path_components.as_ref() == Some(&want)
            }
            ShapePredicate::Regular(k) => a.stats.regular == Some(*k),
            ShapePredicate::Components(n) => a.stats.components == *n,
            ShapePredicate::Order(n) => a.stats.order == *n,
            ShapePredicate::Edges(n) => a.stats.edge_count == *n,
            ShapePredicate::Diameter(n) => a.stats.diameter == *n,
            ShapePredicate::Other => classify_shape(g).tag == ShapeTag::Other,
        }
    }
}

impl fmt::Display for ShapePredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapePredicate::Empty => f.write_str("empty"),
            ShapePredicate::Path(n) => write!(f, "path:{n}"),
            ShapePredicate::Cycle(n) => write!(f, "cycle:{n}"),
            ShapePredicate::CompleteBipartite(m, n) => write!(f, "kmn:{m},{n}"),
            ShapePredicate::Complete(n) => write!(f, "complete:{n}"),
            ShapePredicate::UnionOfPaths(parts) => write!(f, "union_paths:{}", join(parts)),
            ShapePredicate::Regular(k) => write!(f, "regular:{k}"),
            ShapePredicate::Components(n) => write!(f, "components:{n}"),
            ShapePredicate::Order(n) => write!(f, "order:{n}"),
            ShapePredicate::Edges(n) => write!(f, "edges:{n}"),
            ShapePredicate::Diameter(n) => write!(f, "diameter:{n}"),
            ShapePredicate::Other => f.write_str("other"),
        }
    }
}

fn numbers(tag: &str, args: &str, want: Option<usize>) -> Result<Vec<usize>> {
    let parsed: Vec<usize> = args
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::invalid(format!("bad arguments {args:?} for shape tag {tag}")))?;
    if let Some(n) = want {
        if parsed.len() != n {
            return Err(Error::invalid(format!(
                "shape tag {tag} takes {n} argument(s), got {}",
                parsed.len()
            )));
        }
    }
    Ok(parsed)
}

impl FromStr for ShapePredicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (tag, args) = match s.split_once(':') {
            Some((t, a)) => (t.trim(), Some(a)),
            None => (s, None),
        };
        let need = |n: usize| -> Result<Vec<usize>> {
            let args =
                args.ok_or_else(|| Error::invalid(format!("shape tag {tag} needs arguments")))?;
            numbers(tag, args, Some(n))
        };
        let pred = match tag {
            "empty" if args.is_none() => ShapePredicate::Empty,
            "other" if args.is_none() => ShapePredicate::Other,
            "path" => ShapePredicate::Path(need(1)?[0]),
            "cycle" => ShapePredicate::Cycle(need(1)?[0]),
            "kmn" => {
                let v = need(2)?;
                ShapePredicate::CompleteBipartite(v[0], v[1])
            }
            "complete" => ShapePredicate::Complete(need(1)?[0]),
            "union_paths" => {
                let args = args.ok_or_else(|| Error::invalid("union_paths needs arguments"))?;
                ShapePredicate::UnionOfPaths(numbers(tag, args, None)?)
            }
            "regular" => ShapePredicate::Regular(need(1)?[0]),
            "components" => ShapePredicate::Components(need(1)?[0]),
            "order" => ShapePredicate::Order(need(1)?[0]),
            "edges" => ShapePredicate::Edges(need(1)?[0]),
            "diameter" => ShapePredicate::Diameter(need(1)?[0]),
            _ => return Err(Error::invalid(format!("unknown shape claim {s:?}"))),
        };
        Ok(pred)
    }
}

/// A conjunction of predicates, written `a & b & ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeClaim(pub Vec<ShapePredicate>);

impl ShapeClaim {
    pub fn holds(&self, g: &DivisorGraph) -> bool {
        let a = analyse(g);
        self.0.iter().all(|p| p.holds(g, &a))
    }

    /// The predicates that fail on `g`.
    pub fn failures(&self, g: &DivisorGraph) -> Vec<ShapePredicate> {
        let a = analyse(g);
        self.0.iter().filter(|p| !p.holds(g, &a)).cloned().collect()
    }
}

impl FromStr for ShapeClaim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let preds = s
            .split('&')
            .map(str::parse)
            .collect::<Result<Vec<ShapePredicate>>>()?;
        if preds.is_empty() {
            return Err(Error::invalid("empty shape claim"));
        }
        Ok(ShapeClaim(preds))
    }
}

impl fmt::Display for ShapeClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("&"))
    }
}
