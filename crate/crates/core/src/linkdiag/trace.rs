use std::collections::{BTreeMap, BTreeSet};

use super::{EdgeLabel, LinkError, PDCode};
use crate::Sign;

// positions within a crossing quadruple
const A: usize = 0;
const D: usize = 3;

fn partner(pos: usize) -> usize {
    pos ^ 2
}

fn is_under(pos: usize) -> bool {
    pos.is_multiple_of(2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramCrossing {
    pub labels: [EdgeLabel; 4],
    pub under: usize,
    pub over: usize,
    pub sign: Sign,
}

/// An oriented link diagram: each component is its cyclic sequence of edge
/// labels in orientation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    pub components: Vec<Vec<EdgeLabel>>,
    pub crossings: Vec<DiagramCrossing>,
}

/// One pass of a strand through a crossing.
#[derive(Debug, Clone, Copy)]
struct Passage {
    crossing: usize,
    enter: usize,
    exit: usize,
}

impl Passage {
    fn reversed(self) -> Passage {
        Passage { crossing: self.crossing, enter: self.exit, exit: self.enter }
    }
}

struct Strand {
    edges: Vec<EdgeLabel>,
    passages: Vec<Passage>,
}

impl Strand {
    fn reverse(&mut self) {
        self.passages.reverse();
        for p in self.passages.iter_mut() {
            *p = p.reversed();
        }
        // edge i sits between passages i-1 and i; keep that alignment
        self.edges.reverse();
        self.edges.rotate_right(1);
    }
}

/// Edge labels counted `+1` along a traversal (wrapping max → min).
fn consecutive_steps(edges: &[EdgeLabel]) -> usize {
    let (Some(&lo), Some(&hi)) = (edges.iter().min(), edges.iter().max()) else {
        return 0;
    };
    let n = edges.len();
    (0..n)
        .filter(|&i| {
            let (cur, next) = (edges[i], edges[(i + 1) % n]);
            next == cur + 1 || (cur == hi && next == lo && n > 1)
        })
        .count()
}

pub fn trace_components(code: &PDCode) -> Result<LinkDiagram, LinkError> {
    code.validate()?;

    let mut occurrences: BTreeMap<EdgeLabel, Vec<(usize, usize)>> = BTreeMap::new();
    for (x, c) in code.crossings.iter().enumerate() {
        for (pos, &l) in c.labels.iter().enumerate() {
            occurrences.entry(l).or_default().push((x, pos));
        }
    }
    let loops: BTreeSet<EdgeLabel> = code.loops.iter().copied().collect();
    let all: BTreeSet<EdgeLabel> = occurrences.keys().copied().chain(loops.iter().copied()).collect();

    let mut visited: BTreeSet<EdgeLabel> = BTreeSet::new();
    let mut strands: Vec<Strand> = Vec::new();
    for &start in &all {
        if visited.contains(&start) {
            continue;
        }
        if loops.contains(&start) {
            visited.insert(start);
            strands.push(Strand { edges: vec![start], passages: Vec::new() });
            continue;
        }
        let mut strand = Strand { edges: Vec::new(), passages: Vec::new() };
        let mut label = start;
        let mut arrive = occurrences[&start][1];
        loop {
            visited.insert(label);
            strand.edges.push(label);
            let (x, enter) = arrive;
            let exit = partner(enter);
            strand.passages.push(Passage { crossing: x, enter, exit });
            let next = code.crossings[x].labels[exit];
            let occ = &occurrences[&next];
            arrive = if occ[0] == (x, exit) { occ[1] } else { occ[0] };
            label = next;
            if label == start && arrive == occurrences[&start][1] {
                break;
            }
        }
        // edges[i] is the edge entering passages[i]
        strands.push(strand);
    }

    for strand in strands.iter_mut() {
        orient(strand, code)?;
    }

    let mut under = vec![usize::MAX; code.crossings.len()];
    let mut over = vec![(usize::MAX, Sign::Plus); code.crossings.len()];
    for (id, s) in strands.iter().enumerate() {
        for p in &s.passages {
            if is_under(p.enter) {
                under[p.crossing] = id;
            } else {
                let sign = if p.enter == D { Sign::Plus } else { Sign::Minus };
                over[p.crossing] = (id, sign);
            }
        }
    }

    let crossings = code
        .crossings
        .iter()
        .enumerate()
        .map(|(x, c)| {
            let (over_id, sign) = over[x];
            if c.sign.is_some_and(|s| s != sign) {
                return Err(LinkError::InconsistentOrientation { crossing: x });
            }
            Ok(DiagramCrossing { labels: c.labels, under: under[x], over: over_id, sign })
        })
        .collect::<Result<Vec<_>, _>>()?;

    Ok(LinkDiagram { components: strands.into_iter().map(|s| s.edges).collect(), crossings })
}

/// Picks the traversal direction: under-passages are authoritative
/// (`a → c`), then explicit crossing signs, then the consecutive-label rule.
fn orient(strand: &mut Strand, code: &PDCode) -> Result<(), LinkError> {
    let mut forward = None::<usize>;
    let mut backward = None::<usize>;
    for p in strand.passages.iter().filter(|p| is_under(p.enter)) {
        if p.enter == A {
            forward.get_or_insert(p.crossing);
        } else {
            backward.get_or_insert(p.crossing);
        }
    }
    match (forward, backward) {
        (Some(_), Some(x)) => return Err(LinkError::InconsistentOrientation { crossing: x }),
        (Some(_), None) => return Ok(()),
        (None, Some(_)) => {
            strand.reverse();
            return Ok(());
        }
        (None, None) => {}
    }

    // over-only strand: a positive crossing means the over-strand runs d → b
    let mut want = None::<(bool, usize)>;
    for p in &strand.passages {
        if let Some(sign) = code.crossings[p.crossing].sign {
            let forward_ok = (p.enter == D) == (sign == Sign::Plus);
            match want {
                Some((w, _)) if w != forward_ok => {
                    return Err(LinkError::InconsistentOrientation { crossing: p.crossing })
                }
                Some(_) => {}
                None => want = Some((forward_ok, p.crossing)),
            }
        }
    }
    let keep = match want {
        Some((w, _)) => w,
        None => {
            let fwd = consecutive_steps(&strand.edges);
            let mut rev = strand.edges.clone();
            rev.reverse();
            fwd >= consecutive_steps(&rev)
        }
    };
    if !keep {
        strand.reverse();
    }
    Ok(())
}

impl LinkDiagram {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.as_i64()).sum()
    }

    /// The same diagram with component `id` reversed: every crossing between
    /// it and another component changes sign.
    pub fn reverse_component(&self, id: usize) -> Result<LinkDiagram, LinkError> {
        if id >= self.components.len() {
            return Err(LinkError::UnknownComponent { id, count: self.components.len() });
        }
        let mut out = self.clone();
        out.components[id].reverse();
        for c in out.crossings.iter_mut() {
            if (c.under == id) != (c.over == id) {
                c.sign = -c.sign;
            }
        }
        Ok(out)
    }

    pub fn linking_number(&self, c1: usize, c2: usize) -> Result<i64, LinkError> {
        linking_number(self, c1, c2)
    }
}

/// Half the sign sum over crossings between components `c1` and `c2`.
pub fn linking_number(d: &LinkDiagram, c1: usize, c2: usize) -> Result<i64, LinkError> {
    let count = d.components.len();
    for id in [c1, c2] {
        if id >= count {
            return Err(LinkError::UnknownComponent { id, count });
        }
    }
    if c1 == c2 {
        return Err(LinkError::SameComponent { id: c1 });
    }
    let sum: i64 = d
        .crossings
        .iter()
        .filter(|c| (c.under == c1 && c.over == c2) || (c.under == c2 && c.over == c1))
        .map(|c| c.sign.as_i64())
        .sum();
    if sum % 2 != 0 {
        return Err(LinkError::OddMixedSignSum { sum });
    }
    Ok(sum / 2)
}
