//! Generic crystal machinery: string lengths, Weyl group action, derived odd
//! operators, component exploration and axiom checking.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weight of an element, one coordinate per letter of the alphabet.
pub type Weight = Vec<i64>;

/// Longest chain of raising or lowering operators followed before giving up.
const STRING_LIMIT: usize = 100_000;

pub const DEFAULT_VERTEX_CAP: usize = 1_000_000;

/// Operator colour: an even index `1..n-1` or the odd index `1̄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Even(usize),
    Bar1,
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Even(i) => write!(f, "{i}"),
            Color::Bar1 => write!(f, "b1"),
        }
    }
}

impl FromStr for Color {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "b1" {
            return Ok(Color::Bar1);
        }
        match s.parse::<usize>() {
            Ok(i) if i >= 1 => Ok(Color::Even(i)),
            _ => Err(Error::Parse(format!("bad colour {s:?}"))),
        }
    }
}

/// All primitive colours of a rank `n` crystal.
pub fn colors(n: usize) -> Vec<Color> {
    let mut out: Vec<Color> = (1..n).map(Color::Even).collect();
    if n >= 2 {
        out.push(Color::Bar1);
    }
    out
}

/// `<wt, h_i>`
pub fn pairing(wt: &[i64], i: usize) -> i64 {
    wt[i - 1] - wt[i]
}

/// `wt + sign * alpha_i`
pub fn shift_by_root(wt: &[i64], i: usize, sign: i64) -> Weight {
    let mut out = wt.to_vec();
    out[i - 1] += sign;
    out[i] -= sign;
    out
}

/// A set equipped with raising and lowering operators for every colour.
pub trait Crystal {
    type Elem: Clone + Eq + Hash;

    fn rank(&self) -> usize;
    fn weight(&self, x: &Self::Elem) -> Weight;
    fn raise(&self, c: Color, x: &Self::Elem) -> Result<Option<Self::Elem>>;
    fn lower(&self, c: Color, x: &Self::Elem) -> Result<Option<Self::Elem>>;
    /// Canonical text encoding, used for vertex names and ordering.
    fn encode(&self, x: &Self::Elem) -> String;
}

fn string_length<C: Crystal>(cr: &C, c: Color, x: &C::Elem, up: bool) -> Result<usize> {
    let mut cur = x.clone();
    for k in 0..STRING_LIMIT {
        let next = if up { cr.raise(c, &cur)? } else { cr.lower(c, &cur)? };
        match next {
            Some(y) => cur = y,
            None => return Ok(k),
        }
    }
    Err(Error::Structural(format!(
        "string through {} exceeds {STRING_LIMIT}",
        cr.encode(x)
    )))
}

/// `ε_c(x)`: how many times `c` can be raised.
pub fn epsilon<C: Crystal>(cr: &C, c: Color, x: &C::Elem) -> Result<usize> {
    string_length(cr, c, x, true)
}

/// `φ_c(x)`: how many times `c` can be lowered.
pub fn phi<C: Crystal>(cr: &C, c: Color, x: &C::Elem) -> Result<usize> {
    string_length(cr, c, x, false)
}

/// Simple reflection `S_i`.
pub fn weyl_s<C: Crystal>(cr: &C, i: usize, x: &C::Elem) -> Result<C::Elem> {
    let k = pairing(&cr.weight(x), i);
    let mut cur = x.clone();
    for _ in 0..k.unsigned_abs() {
        let next = if k >= 0 {
            cr.lower(Color::Even(i), &cur)?
        } else {
            cr.raise(Color::Even(i), &cur)?
        };
        cur = next.ok_or_else(|| Error::Structural(format!("S_{i} undefined on {}", cr.encode(x))))?;
    }
    Ok(cur)
}

/// `S_{s_{j1} ... s_{jk}}`; the rightmost reflection acts first.
pub fn weyl_w<C: Crystal>(cr: &C, word: &[usize], x: &C::Elem) -> Result<C::Elem> {
    let mut cur = x.clone();
    for &i in word.iter().rev() {
        cur = weyl_s(cr, i, &cur)?;
    }
    Ok(cur)
}

/// `w_i = s_2 ... s_i s_1 ... s_{i-1}`
pub fn w_i(i: usize) -> Vec<usize> {
    (2..=i).chain(1..i).collect()
}

/// Longest element `(s_1 ... s_{n-1})(s_1 ... s_{n-2}) ... (s_1)`.
pub fn w0(n: usize) -> Vec<usize> {
    (1..n).rev().flat_map(|k| 1..=k).collect()
}

fn odd_op<C: Crystal>(cr: &C, i: usize, x: &C::Elem, up: bool) -> Result<Option<C::Elem>> {
    let op = |y: &C::Elem| {
        if up {
            cr.raise(Color::Bar1, y)
        } else {
            cr.lower(Color::Bar1, y)
        }
    };
    if i == 1 {
        return op(x);
    }
    let w = w_i(i);
    let y = weyl_w(cr, &w, x)?;
    match op(&y)? {
        None => Ok(None),
        Some(z) => {
            let inv: Vec<usize> = w.iter().rev().copied().collect();
            Ok(Some(weyl_w(cr, &inv, &z)?))
        }
    }
}

/// `ẽ_ī = S_{w_i^{-1}} ẽ_1̄ S_{w_i}`
pub fn odd_raise<C: Crystal>(cr: &C, i: usize, x: &C::Elem) -> Result<Option<C::Elem>> {
    odd_op(cr, i, x, true)
}

/// `f̃_ī = S_{w_i^{-1}} f̃_1̄ S_{w_i}`
pub fn odd_lower<C: Crystal>(cr: &C, i: usize, x: &C::Elem) -> Result<Option<C::Elem>> {
    odd_op(cr, i, x, false)
}

/// Killed by every `ẽ_i` and every `ẽ_ī`.
pub fn is_highest<C: Crystal>(cr: &C, x: &C::Elem) -> Result<bool> {
    let n = cr.rank();
    for i in 1..n {
        if cr.raise(Color::Even(i), x)?.is_some() || odd_raise(cr, i, x)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The unique highest weight element among `elems`.
pub fn find_highest_of<C: Crystal>(cr: &C, elems: &[C::Elem]) -> Result<C::Elem> {
    let mut found = Vec::new();
    for x in elems {
        if is_highest(cr, x)? {
            found.push(x.clone());
        }
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        k => Err(Error::Structural(format!("{k} highest weight elements"))),
    }
}

/// The unique element whose `S_{w_0}` image is the highest weight element.
pub fn find_lowest_of<C: Crystal>(cr: &C, elems: &[C::Elem]) -> Result<C::Elem> {
    let top = find_highest_of(cr, elems)?;
    let w = w0(cr.rank());
    let mut found = Vec::new();
    for x in elems {
        if weyl_w(cr, &w, x)? == top {
            found.push(x.clone());
        }
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        k => Err(Error::Structural(format!("{k} lowest weight elements"))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: usize,
    pub color: Color,
    pub dst: usize,
}

/// A crystal graph with vertices named by their canonical encodings.
///
/// `edges` are lowering edges `src --f_c--> dst`; `raising` are raising edges
/// `src --e_c--> dst`. Vertices are sorted by encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalComponent {
    rank: usize,
    vertices: Vec<String>,
    weights: Vec<Weight>,
    edges: Vec<Edge>,
    raising: Vec<Edge>,
    index: HashMap<String, usize>,
    lower_map: HashMap<(usize, Color), Vec<usize>>,
    raise_map: HashMap<(usize, Color), Vec<usize>>,
}

impl CrystalComponent {
    pub fn new(
        rank: usize,
        vertices: Vec<String>,
        weights: Vec<Weight>,
        mut edges: Vec<Edge>,
        mut raising: Vec<Edge>,
    ) -> Result<Self> {
        if weights.len() != vertices.len() {
            return Err(Error::Invalid("one weight per vertex required".into()));
        }
        let mut index = HashMap::new();
        for (k, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), k).is_some() {
                return Err(Error::Invalid(format!("duplicate vertex {v}")));
            }
        }
        for e in edges.iter().chain(&raising) {
            if e.src >= vertices.len() || e.dst >= vertices.len() {
                return Err(Error::Invalid("edge endpoint out of range".into()));
            }
        }
        edges.sort();
        raising.sort();
        let mut lower_map: HashMap<(usize, Color), Vec<usize>> = HashMap::new();
        for e in &edges {
            lower_map.entry((e.src, e.color)).or_default().push(e.dst);
        }
        let mut raise_map: HashMap<(usize, Color), Vec<usize>> = HashMap::new();
        for e in &raising {
            raise_map.entry((e.src, e.color)).or_default().push(e.dst);
        }
        Ok(CrystalComponent {
            rank,
            vertices,
            weights,
            edges,
            raising,
            index,
            lower_map,
            raise_map,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn raising_edges(&self) -> &[Edge] {
        &self.raising
    }

    pub fn weight_of(&self, v: usize) -> &Weight {
        &self.weights[v]
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Retargets the first lowering edge with this source and colour. Used to
    /// build corrupted fixtures for negative tests.
    pub fn retarget_edge(&mut self, src: usize, color: Color, new_dst: usize) -> bool {
        let Some(pos) = self.edges.iter().position(|e| e.src == src && e.color == color) else {
            return false;
        };
        self.edges[pos].dst = new_dst;
        let rebuilt = CrystalComponent::new(
            self.rank,
            self.vertices.clone(),
            self.weights.clone(),
            self.edges.clone(),
            self.raising.clone(),
        )
        .expect("retargeted component stays well formed");
        *self = rebuilt;
        true
    }

    /// Edges listed in DOT, one vertex and one edge per line.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for v in &self.vertices {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                self.vertices[e.src], self.vertices[e.dst], e.color
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let json = ComponentJson {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeJson {
                    src: self.vertices[e.src].clone(),
                    color: e.color.to_string(),
                    dst: self.vertices[e.dst].clone(),
                })
                .collect(),
            weights: self
                .vertices
                .iter()
                .cloned()
                .zip(self.weights.iter().cloned())
                .collect(),
        };
        serde_json::to_value(json).expect("component serialises")
    }

    /// Reads the JSON form. Raising edges are taken to be the reversed
    /// lowering edges.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let json: ComponentJson = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let index: HashMap<&str, usize> = json.vertices.iter().enumerate().map(|(k, v)| (v.as_str(), k)).collect();
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::Parse(format!("unknown vertex {name}")))
        };
        let mut edges = Vec::new();
        for e in &json.edges {
            edges.push(Edge {
                src: lookup(&e.src)?,
                color: e.color.parse()?,
                dst: lookup(&e.dst)?,
            });
        }
        let raising = edges
            .iter()
            .map(|e| Edge {
                src: e.dst,
                color: e.color,
                dst: e.src,
            })
            .collect();
        let mut weights = Vec::new();
        for v in &json.vertices {
            let w = json
                .weights
                .get(v)
                .ok_or_else(|| Error::Parse(format!("missing weight for {v}")))?;
            weights.push(w.clone());
        }
        let rank = weights.first().map_or(0, |w| w.len());
        CrystalComponent::new(rank, json.vertices, weights, edges, raising)
    }

    pub fn find_highest(&self) -> Result<usize> {
        let all: Vec<usize> = (0..self.len()).collect();
        find_highest_of(self, &all)
    }

    pub fn find_lowest(&self) -> Result<usize> {
        let all: Vec<usize> = (0..self.len()).collect();
        find_lowest_of(self, &all)
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    src: String,
    color: String,
    dst: String,
}

#[derive(Serialize, Deserialize)]
struct ComponentJson {
    vertices: Vec<String>,
    edges: Vec<EdgeJson>,
    weights: BTreeMap<String, Weight>,
}

impl Crystal for CrystalComponent {
    type Elem = usize;

    fn rank(&self) -> usize {
        self.rank
    }

    fn weight(&self, x: &usize) -> Weight {
        self.weights[*x].clone()
    }

    fn raise(&self, c: Color, x: &usize) -> Result<Option<usize>> {
        graph_step(&self.raise_map, c, *x)
    }

    fn lower(&self, c: Color, x: &usize) -> Result<Option<usize>> {
        graph_step(&self.lower_map, c, *x)
    }

    fn encode(&self, x: &usize) -> String {
        self.vertices[*x].clone()
    }
}

fn graph_step(map: &HashMap<(usize, Color), Vec<usize>>, c: Color, x: usize) -> Result<Option<usize>> {
    match map.get(&(x, c)).map(Vec::as_slice) {
        None | Some([]) => Ok(None),
        Some([y]) => Ok(Some(*y)),
        Some(_) => Err(Error::Structural(format!("colour {c} is not a function at vertex {x}"))),
    }
}

/// A component together with the elements behind its vertex names.
#[derive(Clone, Debug)]
pub struct Explored<E> {
    pub elements: Vec<E>,
    pub component: CrystalComponent,
}

/// Breadth-first closure of `seed` under every primitive operator.
pub fn explore<C: Crystal>(cr: &C, seed: &C::Elem, cap: usize) -> Result<Explored<C::Elem>> {
    let cols = colors(cr.rank());
    let mut found: Vec<C::Elem> = vec![seed.clone()];
    let mut index: HashMap<C::Elem, usize> = HashMap::from([(seed.clone(), 0)]);
    let mut raw_lower = Vec::new();
    let mut raw_raise = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        let x = found[k].clone();
        for &c in &cols {
            for up in [false, true] {
                let y = if up { cr.raise(c, &x)? } else { cr.lower(c, &x)? };
                let Some(y) = y else { continue };
                let j = match index.get(&y) {
                    Some(&j) => j,
                    None => {
                        if found.len() >= cap {
                            return Err(Error::CapExceeded { cap });
                        }
                        index.insert(y.clone(), found.len());
                        found.push(y);
                        queue.push_back(found.len() - 1);
                        found.len() - 1
                    }
                };
                let e = Edge {
                    src: k,
                    color: c,
                    dst: j,
                };
                if up {
                    raw_raise.push(e);
                } else {
                    raw_lower.push(e);
                }
            }
        }
    }
    let names: Vec<String> = found.iter().map(|x| cr.encode(x)).collect();
    let mut order: Vec<usize> = (0..found.len()).collect();
    order.sort_by(|&a, &b| names[a].cmp(&names[b]));
    let mut rank_of = vec![0; found.len()];
    for (new, &old) in order.iter().enumerate() {
        rank_of[old] = new;
    }
    let remap = |e: Edge| Edge {
        src: rank_of[e.src],
        color: e.color,
        dst: rank_of[e.dst],
    };
    let elements: Vec<C::Elem> = order.iter().map(|&k| found[k].clone()).collect();
    let component = CrystalComponent::new(
        cr.rank(),
        order.iter().map(|&k| names[k].clone()).collect(),
        elements.iter().map(|x| cr.weight(x)).collect(),
        raw_lower.into_iter().map(remap).collect(),
        raw_raise.into_iter().map(remap).collect(),
    )?;
    Ok(Explored { elements, component })
}

/// Outcome of one axiom over a vertex set.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ConditionReport {
    pub condition: String,
    pub checked: usize,
    pub violations: usize,
    pub witness: Option<String>,
}

impl ConditionReport {
    fn new(condition: &str) -> Self {
        ConditionReport {
            condition: condition.into(),
            checked: 0,
            violations: 0,
            witness: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct AxiomReport {
    pub conditions: Vec<ConditionReport>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.conditions.iter().all(ConditionReport::passed)
    }

    pub fn get(&self, condition: &str) -> Option<&ConditionReport> {
        self.conditions.iter().find(|c| c.condition == condition)
    }

    pub fn failures(&self) -> Vec<&ConditionReport> {
        self.conditions.iter().filter(|c| !c.passed()).collect()
    }

    fn merge(&mut self, other: AxiomReport) {
        self.conditions.extend(other.conditions);
    }
}

fn ok_or_witness<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Checks the `gl(n)` axioms on a vertex set that is closed under every
/// operator.
pub fn check_gl_axioms<C: Crystal>(cr: &C, elems: &[C::Elem]) -> AxiomReport {
    let n = cr.rank();
    let members: HashSet<&C::Elem> = elems.iter().collect();
    let mut closure = ConditionReport::new("closure");
    let mut c1 = ConditionReport::new("gl1");
    let mut c2 = ConditionReport::new("gl2");
    let mut c3 = ConditionReport::new("gl3");
    let mut c4 = ConditionReport::new("gl4");
    for x in elems {
        let wt = cr.weight(x);
        for i in 1..n {
            let c = Color::Even(i);
            let name = || format!("{} (colour {i})", cr.encode(x));
            let strings = ok_or_witness(epsilon(cr, c, x).and_then(|e| Ok((e, phi(cr, c, x)?))));
            let (eps, ph) = match strings {
                Ok(p) => p,
                Err(msg) => {
                    c1.record(false, || format!("{}: {msg}", name()));
                    continue;
                }
            };
            c1.record(ph as i64 == eps as i64 + pairing(&wt, i), name);
            for up in [true, false] {
                let report = if up { &mut c2 } else { &mut c3 };
                let step = if up { cr.raise(c, x) } else { cr.lower(c, x) };
                let y = match ok_or_witness(step) {
                    Ok(Some(y)) => y,
                    Ok(None) => continue,
                    Err(msg) => {
                        report.record(false, || format!("{}: {msg}", name()));
                        continue;
                    }
                };
                closure.record(members.contains(&y), || format!("{} leaves the set", name()));
                let sign = if up { 1 } else { -1 };
                let ok = match (epsilon(cr, c, &y), phi(cr, c, &y)) {
                    (Ok(ey), Ok(py)) => {
                        cr.weight(&y) == shift_by_root(&wt, i, sign)
                            && ey as i64 == eps as i64 - sign
                            && py as i64 == ph as i64 + sign
                    }
                    _ => false,
                };
                report.record(ok, name);
                let back = if up { cr.lower(c, &y) } else { cr.raise(c, &y) };
                c4.record(matches!(back, Ok(Some(ref z)) if z == x), name);
            }
        }
    }
    AxiomReport {
        conditions: vec![closure, c1, c2, c3, c4],
    }
}

/// Checks the `gl(n)` axioms and the additional queer conditions.
pub fn check_q_axioms<C: Crystal>(cr: &C, elems: &[C::Elem]) -> AxiomReport {
    let mut report = check_gl_axioms(cr, elems);
    let n = cr.rank();
    let mut q2 = ConditionReport::new("q2");
    let mut q3 = ConditionReport::new("q3");
    let mut q4 = ConditionReport::new("q4");
    let mut q5 = ConditionReport::new("q5");
    for x in elems {
        let wt = cr.weight(x);
        q2.record(wt.iter().all(|&w| w >= 0), || cr.encode(x));
        if n < 2 {
            continue;
        }
        for up in [true, false] {
            let step = if up {
                cr.raise(Color::Bar1, x)
            } else {
                cr.lower(Color::Bar1, x)
            };
            match step {
                Ok(None) => {}
                Ok(Some(y)) => {
                    let sign = if up { 1 } else { -1 };
                    q3.record(cr.weight(&y) == shift_by_root(&wt, 1, sign), || cr.encode(x));
                    let back = if up {
                        cr.lower(Color::Bar1, &y)
                    } else {
                        cr.raise(Color::Bar1, &y)
                    };
                    q4.record(matches!(back, Ok(Some(ref z)) if z == x), || cr.encode(x));
                }
                Err(e) => q3.record(false, || format!("{}: {e}", cr.encode(x))),
            }
        }
        for i in 3..n {
            let c = Color::Even(i);
            let name = || format!("{} (colour {i})", cr.encode(x));
            let compose = |first_bar: bool, bar_up: bool, even_up: bool| -> Result<Option<C::Elem>> {
                let bar = |y: &C::Elem| {
                    if bar_up {
                        cr.raise(Color::Bar1, y)
                    } else {
                        cr.lower(Color::Bar1, y)
                    }
                };
                let even = |y: &C::Elem| if even_up { cr.raise(c, y) } else { cr.lower(c, y) };
                let mid = if first_bar { bar(x)? } else { even(x)? };
                match mid {
                    None => Ok(None),
                    Some(y) => {
                        if first_bar {
                            even(&y)
                        } else {
                            bar(&y)
                        }
                    }
                }
            };
            for bar_up in [true, false] {
                for even_up in [true, false] {
                    let a = compose(true, bar_up, even_up);
                    let b = compose(false, bar_up, even_up);
                    q5.record(matches!((&a, &b), (Ok(p), Ok(q)) if p == q), name);
                }
            }
            if let Ok(Some(y)) = cr.raise(Color::Bar1, x) {
                let same = |z: &C::Elem| -> Result<(usize, usize)> { Ok((epsilon(cr, c, z)?, phi(cr, c, z)?)) };
                q5.record(matches!((same(x), same(&y)), (Ok(p), Ok(q)) if p == q), name);
            }
        }
    }
    report.merge(AxiomReport {
        conditions: vec![q2, q3, q4, q5],
    });
    report
}

/// Axiom check on a stored graph: adds a functionality test so that
/// duplicated or retargeted edges are reported under condition (4).
pub fn check_component(comp: &CrystalComponent, queer: bool) -> AxiomReport {
    let all: Vec<usize> = (0..comp.len()).collect();
    let mut report = if queer {
        check_q_axioms(comp, &all)
    } else {
        check_gl_axioms(comp, &all)
    };
    let mut functional = ConditionReport::new("gl4");
    let mut incoming: HashMap<(usize, Color), usize> = HashMap::new();
    for e in comp.edges() {
        *incoming.entry((e.dst, e.color)).or_default() += 1;
    }
    let mut outgoing: Vec<_> = comp
        .lower_map
        .iter()
        .chain(comp.raise_map.iter())
        .map(|(&(src, c), dsts)| (src, c, dsts.len()))
        .collect();
    outgoing.sort();
    for (src, c, k) in outgoing {
        functional.record(k <= 1, || format!("{} has several {c} edges", comp.vertices[src]));
    }
    let mut targets: Vec<_> = incoming.into_iter().collect();
    targets.sort();
    for ((dst, c), k) in targets {
        functional.record(k <= 1, || format!("{} has {k} incoming {c} edges", comp.vertices[dst]));
    }
    if let Some(gl4) = report.conditions.iter_mut().find(|c| c.condition == "gl4") {
        gl4.checked += functional.checked;
        gl4.violations += functional.violations;
        if gl4.witness.is_none() {
            gl4.witness = functional.witness;
        }
    }
    report
}
