//! Tree diagrams of branch separation.
//!
//! A node is a group of branches that agree up to the column it sits in.
//! Its children are the groups it splits into at the next exponent where
//! any of its branches separate. Sibling groups whose coefficients are
//! complex conjugates, and whose branches have no real parametrization,
//! are joined by a brace.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::{fmt_rat, parse_rat, Rat};
use crate::error::{Error, Result};
use crate::puiseux::{contact_exponent, ProBranch};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    /// Column of this vertex; zero for the root.
    pub exponent: Rat,
    pub children: Vec<Node>,
    /// Braced pairs of children, by index.
    pub brace_pairs: Vec<(usize, usize)>,
    pub leaf_count: usize,
    /// Branch indices below this vertex, increasing.
    pub branches: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub root: Node,
}

impl Node {
    fn leaf(exponent: Rat, branch: usize) -> Node {
        Node {
            exponent,
            children: Vec::new(),
            brace_pairs: Vec::new(),
            leaf_count: 1,
            branches: vec![branch],
        }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Exponent at which this vertex splits.
    pub fn split_exponent(&self) -> Option<&Rat> {
        self.children.first().map(|c| &c.exponent)
    }
}

/// Index of each branch's complex-conjugate partner.
pub fn conjugate_partners(branches: &[ProBranch]) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(branches.len());
    for a in branches {
        let found = branches.iter().position(|b| {
            a.terms.len() == b.terms.len()
                && a.terms.iter().zip(&b.terms).all(|(s, t)| {
                    s.exponent == t.exponent && s.coeff.is_conjugate_of(&t.coeff)
                })
        });
        out.push(found.ok_or(Error::NotConjugationClosed)?);
    }
    Ok(out)
}

/// Builds the diagram of a set of branches from one expansion.
pub fn build_diagram(branches: &[ProBranch]) -> Result<Diagram> {
    let n = branches.len();
    let mut contact = vec![vec![Rat::default(); n]; n];
    for a in 0..n {
        for b in a + 1..n {
            let c = contact_exponent(&branches[a], &branches[b])?;
            contact[a][b] = c.clone();
            contact[b][a] = c;
        }
    }
    let partner = conjugate_partners(branches)?;
    let real: Vec<bool> = branches.iter().map(|b| b.real_representable).collect();
    let all: Vec<usize> = (0..n).collect();
    Ok(Diagram { root: build_node(Rat::default(), &all, &contact, &partner, &real) })
}

fn build_node(exponent: Rat, set: &[usize], contact: &[Vec<Rat>], partner: &[usize], real: &[bool]) -> Node {
    if set.len() == 1 {
        return Node::leaf(exponent, set[0]);
    }
    let split = set
        .iter()
        .flat_map(|&a| set.iter().filter(move |&&b| b != a).map(move |&b| &contact[a][b]))
        .min()
        .expect("two branches")
        .clone();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &a in set {
        match groups.iter_mut().find(|g| contact[g[0]][a] > split) {
            Some(g) => g.push(a),
            None => groups.push(vec![a]),
        }
    }
    let children: Vec<Node> = groups
        .iter()
        .map(|g| build_node(split.clone(), g, contact, partner, real))
        .collect();
    let mut brace_pairs = Vec::new();
    for (i, g) in groups.iter().enumerate() {
        let conj: BTreeSet<usize> = g.iter().map(|&b| partner[b]).collect();
        let mine: BTreeSet<usize> = g.iter().copied().collect();
        if conj == mine || g.iter().any(|&b| real[b]) {
            continue;
        }
        if let Some(j) = groups.iter().position(|h| h.iter().copied().collect::<BTreeSet<_>>() == conj) {
            if i < j {
                brace_pairs.push((i, j));
            }
        }
    }
    let mut branches = set.to_vec();
    branches.sort_unstable();
    Node { exponent, leaf_count: set.len(), children, brace_pairs, branches }
}

fn node_code(n: &Node) -> String {
    if n.is_leaf() {
        return "•".into();
    }
    let codes: Vec<String> = n.children.iter().map(node_code).collect();
    let mut sorted = codes.clone();
    sorted.sort();
    let mut braced: Vec<String> = n.brace_pairs.iter().map(|&(i, _)| codes[i].clone()).collect();
    braced.sort();
    format!(
        "({}:{}|braces:{})",
        fmt_rat(n.split_exponent().expect("inner node")),
        sorted.join(","),
        braced.join(",")
    )
}

impl Diagram {
    /// Text encoding that is equal for two diagrams exactly when they agree
    /// up to reordering siblings.
    pub fn canonical_code(&self) -> String {
        node_code(&self.root)
    }

    pub fn equals(&self, other: &Diagram) -> bool {
        self.canonical_code() == other.canonical_code()
    }

    pub fn leaf_count(&self) -> usize {
        self.root.leaf_count
    }

    /// Exponents of all columns where something splits, increasing.
    pub fn exponents(&self) -> Vec<Rat> {
        let mut set = BTreeSet::new();
        fn walk(n: &Node, set: &mut BTreeSet<Rat>) {
            if let Some(e) = n.split_exponent() {
                set.insert(e.clone());
            }
            n.children.iter().for_each(|c| walk(c, set));
        }
        walk(&self.root, &mut set);
        set.into_iter().collect()
    }

    pub fn braced_leaf_count(&self) -> usize {
        fn walk(n: &Node) -> usize {
            let here: usize = n
                .brace_pairs
                .iter()
                .map(|&(i, j)| n.children[i].leaf_count + n.children[j].leaf_count)
                .sum();
            here + n.children.iter().map(walk).sum::<usize>()
        }
        walk(&self.root)
    }

    pub fn to_json(&self) -> Value {
        let doc = DiagramDoc {
            exponents: self.exponents().iter().map(fmt_rat).collect(),
            tree: NodeDoc::from_node(&self.root),
            code: self.canonical_code(),
        };
        serde_json::to_value(doc).expect("serializable")
    }

    pub fn from_json(v: &Value) -> Result<Diagram> {
        let doc: DiagramDoc = serde_json::from_value(v.clone())
            .map_err(|e| Error::Syntax { pos: 0, msg: e.to_string() })?;
        Ok(Diagram { root: doc.tree.to_node()? })
    }

    /// Draws the tree with one row per branch under a header of exponents.
    /// Braced vertices are drawn as `*`; branch numbers are 1-based.
    pub fn render_ascii(&self) -> String {
        if self.root.is_leaf() {
            return "•\n".into();
        }
        let mut cols = vec![Rat::default()];
        cols.extend(self.exponents());
        const W: usize = 7;
        let width = W * (cols.len() - 1) + 1;
        let rows = self.root.leaf_count;
        let mut grid = vec![vec![' '; width]; rows];
        let mut labels = vec![String::new(); rows];
        let mut notes = Vec::new();
        let col_of = |e: &Rat| cols.iter().position(|c| c == e).expect("column");
        draw(&self.root, 0, false, &col_of, &mut grid, &mut labels, &mut notes, W);

        let mut out = String::new();
        let mut header = vec![' '; width + 8];
        for (k, c) in cols.iter().enumerate() {
            for (o, ch) in fmt_rat(c).chars().enumerate() {
                if k * W + o < header.len() {
                    header[k * W + o] = ch;
                }
            }
        }
        let _ = writeln!(out, "{}", header.iter().collect::<String>().trim_end());
        for (r, row) in grid.iter().enumerate() {
            let _ = writeln!(out, "{}  {}", row.iter().collect::<String>(), labels[r]);
        }
        for n in notes {
            let _ = writeln!(out, "{n}");
        }
        out
    }
}

#[allow(clippy::too_many_arguments)]
fn draw(
    n: &Node,
    top: usize,
    braced: bool,
    col_of: &dyn Fn(&Rat) -> usize,
    grid: &mut [Vec<char>],
    labels: &mut [String],
    notes: &mut Vec<String>,
    w: usize,
) {
    let x = col_of(&n.exponent) * w;
    grid[top][x] = if braced { '*' } else { 'o' };
    let last = grid[top].len() - 1;
    if n.is_leaf() {
        if x < last {
            for c in &mut grid[top][x + 1..last] {
                *c = '-';
            }
            grid[top][last] = 'o';
        }
        labels[top] = format!("#{}", n.branches[0] + 1);
        return;
    }
    let junction = x + 3;
    let cx = col_of(n.split_exponent().expect("inner")) * w;
    let mut row = top;
    let nchildren = n.children.len();
    for (i, ch) in n.children.iter().enumerate() {
        if i == 0 {
            for c in &mut grid[row][x + 1..junction] {
                *c = '-';
            }
        }
        grid[row][junction] = if i + 1 == nchildren && i > 0 { '`' } else { '+' };
        for c in &mut grid[row][junction + 1..cx] {
            *c = '-';
        }
        if i + 1 < nchildren {
            for r in row + 1..row + ch.leaf_count {
                grid[r][junction] = '|';
            }
        }
        let is_braced = n.brace_pairs.iter().any(|&(a, b)| a == i || b == i);
        draw(ch, row, is_braced, col_of, grid, labels, notes, w);
        row += ch.leaf_count;
    }
    for &(a, b) in &n.brace_pairs {
        let fmt_group = |k: usize| {
            n.children[k]
                .branches
                .iter()
                .map(|b| format!("#{}", b + 1))
                .collect::<Vec<_>>()
                .join(",")
        };
        notes.push(format!(
            "brace at {}: {{{}}} ~ {{{}}}",
            fmt_rat(&n.children[a].exponent),
            fmt_group(a),
            fmt_group(b)
        ));
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramDoc {
    exponents: Vec<String>,
    tree: NodeDoc,
    code: String,
}

#[derive(Serialize, Deserialize)]
struct NodeDoc {
    e: String,
    children: Vec<NodeDoc>,
    braces: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    branch: Option<usize>,
}

impl NodeDoc {
    fn from_node(n: &Node) -> NodeDoc {
        NodeDoc {
            e: fmt_rat(&n.exponent),
            children: n.children.iter().map(NodeDoc::from_node).collect(),
            braces: n.brace_pairs.iter().map(|&(a, b)| [a, b]).collect(),
            branch: n.is_leaf().then(|| n.branches[0]),
        }
    }

    fn to_node(&self) -> Result<Node> {
        let exponent = parse_rat(&self.e)
            .ok_or_else(|| Error::Syntax { pos: 0, msg: format!("bad exponent {}", self.e) })?;
        if self.children.is_empty() {
            return Ok(Node::leaf(exponent, self.branch.unwrap_or(0)));
        }
        let children = self.children.iter().map(NodeDoc::to_node).collect::<Result<Vec<_>>>()?;
        let mut branches: Vec<usize> = children.iter().flat_map(|c| c.branches.clone()).collect();
        branches.sort_unstable();
        Ok(Node {
            exponent,
            leaf_count: children.iter().map(|c| c.leaf_count).sum(),
            brace_pairs: self.braces.iter().map(|b| (b[0], b[1])).collect(),
            children,
            branches,
        })
    }
}

#[cfg(test)]
mod tests;
