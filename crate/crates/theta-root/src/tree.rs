//! Enriched plane rooted trees, exhaustively.
//!
//! An enriched tree carries a polyomino decoration at every vertex, and the
//! decoration's size parameter must equal the vertex out-degree: the rise
//! for a stack polyomino, the width for a (Durfee-constrained) Ferrers
//! diagram. The empty decoration has size zero, so leaves carry either the
//! empty decoration or, under the stack species, a rise-0 stack.
//!
//! Which species decorates a vertex depends only on its level, given by a
//! [`SigmaWord`] letter (extended periodically by its last letter). The
//! census of these trees by total decoration area is the combinatorial
//! ground truth for the series in [`crate::theta`]: counted by area alone
//! they reproduce `xi(q)` for every species word, and counted by area and
//! vertices they reproduce `A(t, q)`, `A~(t, q)` and `A_sigma(t, q)`.
//!
//! Counting uses memoized recursion over (level, remaining area) with
//! decorations drawn from the exhaustive enumerators in
//! [`crate::polyomino`]; full materialization is intended for small areas
//! (the object counts grow like the coefficients of `xi`).

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::polyomino::{for_each_ferrers, for_each_stack, FerrersDiagram, StackPolyomino};
use crate::series::ring::Ring;
use crate::series::tpoly::TPoly;
use crate::series::{QSeries, Series, TQSeries};
use crate::theta::{SigmaWord, Species};
use crate::Error;

/// The decoration at a tree vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Decoration {
    /// The empty polyomino: size 0, area 0.
    Empty,
    /// A stack polyomino; its size parameter is the rise.
    Stack(StackPolyomino),
    /// A Ferrers diagram satisfying the Durfee condition; its size
    /// parameter is the width.
    Ferrers(FerrersDiagram),
}

impl Decoration {
    /// The size parameter that must match the vertex out-degree.
    pub fn size(&self) -> usize {
        match self {
            Decoration::Empty => 0,
            Decoration::Stack(s) => s.rise(),
            Decoration::Ferrers(d) => d.width(),
        }
    }

    pub fn area(&self) -> usize {
        match self {
            Decoration::Empty => 0,
            Decoration::Stack(s) => s.area(),
            Decoration::Ferrers(d) => d.area(),
        }
    }

    /// Whether this decoration may appear at a level of the given species.
    /// The empty decoration belongs to both species.
    pub fn fits_species(&self, species: Species) -> bool {
        match self {
            Decoration::Empty => true,
            Decoration::Stack(_) => species == Species::Stack,
            Decoration::Ferrers(_) => species == Species::Ferrers,
        }
    }

    fn label(&self) -> String {
        match self {
            Decoration::Empty => "()".to_string(),
            Decoration::Stack(s) => {
                let hs: Vec<String> = s.heights().iter().map(|h| h.to_string()).collect();
                format!("S({})", hs.join(","))
            }
            Decoration::Ferrers(d) => {
                let rs: Vec<String> = d.rows().iter().map(|r| r.to_string()).collect();
                format!("F({})", rs.join(","))
            }
        }
    }
}

/// A plane rooted tree whose every vertex carries a decoration of size
/// equal to its out-degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EnrichedTree {
    decoration: Decoration,
    children: Vec<EnrichedTree>,
}

impl EnrichedTree {
    /// Builds a vertex, enforcing the size-matching rule and, for Ferrers
    /// decorations, the Durfee condition.
    pub fn new(decoration: Decoration, children: Vec<EnrichedTree>) -> Result<Self, Error> {
        if decoration.size() != children.len() {
            return Err(Error::InvalidTree(format!(
                "decoration size {} does not match child count {}",
                decoration.size(),
                children.len()
            )));
        }
        if let Decoration::Ferrers(d) = &decoration {
            if !d.satisfies_durfee_condition() {
                return Err(Error::InvalidTree(
                    "Ferrers decoration must have its n-th largest row of length n".to_string(),
                ));
            }
        }
        Ok(EnrichedTree {
            decoration,
            children,
        })
    }

    /// A single vertex with the empty decoration: the unique area-0 tree.
    pub fn empty_vertex() -> Self {
        EnrichedTree {
            decoration: Decoration::Empty,
            children: Vec::new(),
        }
    }

    pub fn decoration(&self) -> &Decoration {
        &self.decoration
    }

    pub fn children(&self) -> &[EnrichedTree] {
        &self.children
    }

    /// Sum of decoration areas over all vertices.
    pub fn total_area(&self) -> usize {
        self.decoration.area() + self.children.iter().map(EnrichedTree::total_area).sum::<usize>()
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(EnrichedTree::vertex_count).sum::<usize>()
    }

    /// Root at level 0; a single vertex has height 0.
    pub fn height(&self) -> usize {
        self.children
            .iter()
            .map(|c| c.height() + 1)
            .max()
            .unwrap_or(0)
    }

    /// True when every decoration is a stack polyomino or empty.
    pub fn is_all_stack(&self) -> bool {
        !matches!(self.decoration, Decoration::Ferrers(_))
            && self.children.iter().all(EnrichedTree::is_all_stack)
    }

    /// Recursively re-checks the size-matching rule and species assignment
    /// against a level word (used by the invariant tests).
    pub fn respects(&self, sigma: &SigmaWord, level: usize) -> bool {
        self.decoration.size() == self.children.len()
            && self.decoration.fits_species(sigma.species_at(level))
            && self.children.iter().all(|c| c.respects(sigma, level + 1))
    }

    /// Injective, deterministic serialization: the decoration label followed
    /// by the bracketed child list (omitted for leaves).
    pub fn canonical_encoding(&self) -> String {
        let mut out = String::new();
        self.encode_into(&mut out);
        out
    }

    fn encode_into(&self, out: &mut String) {
        out.push_str(&self.decoration.label());
        if !self.children.is_empty() {
            out.push('[');
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                c.encode_into(out);
            }
            out.push(']');
        }
    }

    /// Parses [`canonical_encoding`](Self::canonical_encoding) output.
    pub fn from_encoding(text: &str) -> Result<Self, Error> {
        let mut parser = Parser {
            bytes: text.as_bytes(),
            pos: 0,
        };
        let tree = parser.tree()?;
        if parser.pos != parser.bytes.len() {
            return Err(Error::InvalidTreeEncoding(format!(
                "trailing input at byte {}",
                parser.pos
            )));
        }
        Ok(tree)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn fail<T>(&self, what: &str) -> Result<T, Error> {
        Err(Error::InvalidTreeEncoding(format!(
            "{what} at byte {}",
            self.pos
        )))
    }

    fn eat(&mut self, b: u8) -> Result<(), Error> {
        if self.bytes.get(self.pos) == Some(&b) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(&format!("expected {:?}", b as char))
        }
    }

    fn numbers(&mut self) -> Result<Vec<u32>, Error> {
        let mut out = Vec::new();
        loop {
            let start = self.pos;
            while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
                self.pos += 1;
            }
            if start == self.pos {
                return self.fail("expected a digit");
            }
            let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
            out.push(
                text.parse::<u32>()
                    .map_err(|e| Error::InvalidTreeEncoding(e.to_string()))?,
            );
            if self.bytes.get(self.pos) == Some(&b',') {
                self.pos += 1;
            } else {
                return Ok(out);
            }
        }
    }

    fn tree(&mut self) -> Result<EnrichedTree, Error> {
        let decoration = match self.bytes.get(self.pos) {
            Some(b'(') => {
                self.eat(b'(')?;
                self.eat(b')')?;
                Decoration::Empty
            }
            Some(b'S') => {
                self.pos += 1;
                self.eat(b'(')?;
                let heights = self.numbers()?;
                self.eat(b')')?;
                Decoration::Stack(StackPolyomino::new(heights).map_err(|e| {
                    Error::InvalidTreeEncoding(e.to_string())
                })?)
            }
            Some(b'F') => {
                self.pos += 1;
                self.eat(b'(')?;
                let rows = self.numbers()?;
                self.eat(b')')?;
                Decoration::Ferrers(FerrersDiagram::new(rows).map_err(|e| {
                    Error::InvalidTreeEncoding(e.to_string())
                })?)
            }
            _ => return self.fail("expected (), S(...) or F(...)"),
        };
        let mut children = Vec::new();
        if self.bytes.get(self.pos) == Some(&b'[') {
            self.pos += 1;
            loop {
                children.push(self.tree()?);
                match self.bytes.get(self.pos) {
                    Some(b',') => self.pos += 1,
                    Some(b']') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return self.fail("expected ',' or ']'"),
                }
            }
        }
        EnrichedTree::new(decoration, children)
            .map_err(|e| Error::InvalidTreeEncoding(e.to_string()))
    }
}

/// The area-increasing injection on stack-enriched trees.
///
/// A tree of area 0 (the single empty-decorated vertex) maps to the unique
/// area-1 tree: its vertex decorated by the single-cell stack. A tree of
/// positive area has a stack of positive area at its root; appending a cell
/// to the right of that stack's bottom row adds one to the area and leaves
/// the rise — hence the tree shape — unchanged. Images of distinct trees
/// are distinct, which forces the area census to be monotone.
pub fn injection_step(tree: &EnrichedTree) -> Result<EnrichedTree, Error> {
    if !tree.is_all_stack() {
        return Err(Error::InjectionNeedsStackTree);
    }
    if tree.total_area() == 0 {
        let cell = StackPolyomino::new(vec![1]).expect("single cell is a valid stack");
        return EnrichedTree::new(Decoration::Stack(cell), Vec::new());
    }
    match &tree.decoration {
        Decoration::Stack(s) => EnrichedTree::new(
            Decoration::Stack(s.widen_bottom_row()),
            tree.children.clone(),
        ),
        _ => unreachable!("a valid all-stack tree of positive area has a stack at its root"),
    }
}

/// Decoration counts for one species as sorted `(size, area, count)` rows.
fn census(species: Species, max_area: usize) -> Vec<(usize, usize, u64)> {
    let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    match species {
        Species::Stack => for_each_stack(max_area, |s| {
            *counts.entry((s.rise(), s.area())).or_insert(0) += 1;
        }),
        Species::Ferrers => for_each_ferrers(max_area, |d| {
            if d.satisfies_durfee_condition() {
                *counts.entry((d.width(), d.area())).or_insert(0) += 1;
            }
        }),
    }
    counts.into_iter().map(|((s, a), c)| (s, a, c)).collect()
}

/// Decoration objects for one species, keyed by `(size, area)`.
fn census_items(species: Species, max_area: usize) -> BTreeMap<(usize, usize), Vec<Decoration>> {
    let mut items: BTreeMap<(usize, usize), Vec<Decoration>> = BTreeMap::new();
    match species {
        Species::Stack => for_each_stack(max_area, |s| {
            items
                .entry((s.rise(), s.area()))
                .or_default()
                .push(Decoration::Stack(s.clone()));
        }),
        Species::Ferrers => for_each_ferrers(max_area, |d| {
            if d.satisfies_durfee_condition() {
                items
                    .entry((d.width(), d.area()))
                    .or_default()
                    .push(Decoration::Ferrers(d.clone()));
            }
        }),
    }
    items
}

struct Counter<'a> {
    sigma: &'a SigmaWord,
    max_height: Option<usize>,
    stack_counts: Vec<(usize, usize, u64)>,
    ferrers_counts: Vec<(usize, usize, u64)>,
    // keyed by (level key, area); with an unbounded height the species map
    // is constant from the last letter on, so deep levels share one key
    memo_tree: HashMap<(usize, usize), TPoly>,
    memo_forest: HashMap<(usize, usize, usize), TPoly>,
}

impl Counter<'_> {
    fn level_key(&self, level: usize) -> usize {
        match self.max_height {
            Some(_) => level,
            None => level.min(self.sigma.len() - 1),
        }
    }

    /// Vertex-count polynomial of trees rooted at `level` with exact area.
    fn tree_poly(&mut self, level: usize, area: usize) -> TPoly {
        if self.max_height.is_some_and(|h| level > h) {
            return TPoly::zero();
        }
        let key = (self.level_key(level), area);
        if let Some(p) = self.memo_tree.get(&key) {
            return p.clone();
        }
        let species = self.sigma.species_at(level);
        let mut total = TPoly::zero();
        if area == 0 {
            total.add_assign(&TPoly::constant(1)); // the empty decoration
        }
        let rows = match species {
            Species::Stack => self.stack_counts.len(),
            Species::Ferrers => self.ferrers_counts.len(),
        };
        for i in 0..rows {
            let (size, dec_area, count) = match species {
                Species::Stack => self.stack_counts[i],
                Species::Ferrers => self.ferrers_counts[i],
            };
            if dec_area > area {
                continue;
            }
            if size == 0 {
                if dec_area == area && area > 0 {
                    total.add_assign(&TPoly::constant(count));
                }
                continue;
            }
            // every size >= 1 decoration has positive area, so the child
            // budget strictly decreases and the recursion is well-founded
            let forest = self.forest_poly(level + 1, size, area - dec_area);
            if !forest.is_zero() {
                total.add_assign(&TPoly::constant(count).mul(&forest));
            }
        }
        let total = total.mul_t(); // the root vertex itself
        self.memo_tree.insert(key, total.clone());
        total
    }

    /// Vertex-count polynomial of an ordered forest of `size` trees rooted
    /// at `level` with exact total area.
    fn forest_poly(&mut self, level: usize, size: usize, area: usize) -> TPoly {
        if size == 0 {
            return if area == 0 { TPoly::constant(1) } else { TPoly::zero() };
        }
        let key = (self.level_key(level), size, area);
        if let Some(p) = self.memo_forest.get(&key) {
            return p.clone();
        }
        let mut total = TPoly::zero();
        for first in 0..=area {
            let head = self.tree_poly(level, first);
            if head.is_zero() {
                continue;
            }
            let rest = self.forest_poly(level, size - 1, area - first);
            if !rest.is_zero() {
                total.add_assign(&head.mul(&rest));
            }
        }
        self.memo_forest.insert(key, total.clone());
        total
    }
}

/// Exact counts of enriched trees keyed by `(total area, vertex count)`,
/// for all areas up to `max_area`. The species at level `i` is
/// `sigma.species_at(i)`; with `max_height` set, trees taller than that are
/// excluded (levels beyond it are unreachable and need no species).
pub fn enumerate_trees(
    sigma: &SigmaWord,
    max_area: usize,
    max_height: Option<usize>,
) -> BTreeMap<(usize, usize), BigInt> {
    assert!(!sigma.is_empty(), "species word must be non-empty");
    let mut counter = Counter {
        sigma,
        max_height,
        stack_counts: census(Species::Stack, max_area),
        ferrers_counts: census(Species::Ferrers, max_area),
        memo_tree: HashMap::new(),
        memo_forest: HashMap::new(),
    };
    let mut table = BTreeMap::new();
    for area in 0..=max_area {
        let poly = counter.tree_poly(0, area);
        for (vertices, count) in poly.coeffs().iter().enumerate() {
            if !count.is_zero() {
                table.insert((area, vertices), count.clone());
            }
        }
    }
    table
}

/// Marginal of [`enumerate_trees`] over the vertex count: the exact number
/// of enriched trees of each total area, as a q-series. By the
/// equinumerosity of all species words this equals `xi(q)` through
/// `q^max_area` whenever the height is unbounded.
pub fn count_by_area(sigma: &SigmaWord, max_area: usize, max_height: Option<usize>) -> QSeries {
    let table = enumerate_trees(sigma, max_area, max_height);
    let mut coeffs = vec![<BigInt as Ring>::zero(); max_area + 1];
    for ((area, _), count) in &table {
        coeffs[*area] += count;
    }
    Series::from_coeffs(coeffs)
}

/// The `(area, vertices) -> count` table of a refined series, for comparison
/// with [`enumerate_trees`] output.
pub fn refinement_table(series: &TQSeries) -> BTreeMap<(usize, usize), BigInt> {
    let mut table = BTreeMap::new();
    for (area, poly) in series.coeffs().iter().enumerate() {
        for (vertices, count) in poly.coeffs().iter().enumerate() {
            if !count.is_zero() {
                table.insert((area, vertices), count.clone());
            }
        }
    }
    table
}

/// Materializes every enriched tree with total area at most `max_area`.
///
/// Object counts grow like the coefficients of `xi(q)`, so this is meant
/// for small areas; counting should use [`enumerate_trees`].
pub fn all_trees(
    sigma: &SigmaWord,
    max_area: usize,
    max_height: Option<usize>,
) -> Vec<EnrichedTree> {
    assert!(!sigma.is_empty(), "species word must be non-empty");
    let builder = Builder {
        sigma,
        max_height,
        stack_items: census_items(Species::Stack, max_area),
        ferrers_items: census_items(Species::Ferrers, max_area),
    };
    let mut out = Vec::new();
    for area in 0..=max_area {
        out.extend(builder.trees(0, area));
    }
    out
}

struct Builder<'a> {
    sigma: &'a SigmaWord,
    max_height: Option<usize>,
    stack_items: BTreeMap<(usize, usize), Vec<Decoration>>,
    ferrers_items: BTreeMap<(usize, usize), Vec<Decoration>>,
}

impl Builder<'_> {
    fn trees(&self, level: usize, area: usize) -> Vec<EnrichedTree> {
        if self.max_height.is_some_and(|h| level > h) {
            return Vec::new();
        }
        let mut out = Vec::new();
        if area == 0 {
            out.push(EnrichedTree::empty_vertex());
        }
        let items = match self.sigma.species_at(level) {
            Species::Stack => &self.stack_items,
            Species::Ferrers => &self.ferrers_items,
        };
        for ((size, dec_area), decorations) in items {
            if *dec_area > area {
                continue;
            }
            if *size == 0 {
                if *dec_area == area && area > 0 {
                    for d in decorations {
                        out.push(EnrichedTree {
                            decoration: d.clone(),
                            children: Vec::new(),
                        });
                    }
                }
                continue;
            }
            for children in self.forests(level + 1, *size, area - dec_area) {
                for d in decorations {
                    out.push(EnrichedTree {
                        decoration: d.clone(),
                        children: children.clone(),
                    });
                }
            }
        }
        out
    }

    fn forests(&self, level: usize, size: usize, area: usize) -> Vec<Vec<EnrichedTree>> {
        if size == 0 {
            return if area == 0 { vec![Vec::new()] } else { Vec::new() };
        }
        let mut out = Vec::new();
        for first in 0..=area {
            for head in self.trees(level, first) {
                for rest in self.forests(level, size - 1, area - first) {
                    let mut forest = Vec::with_capacity(size);
                    forest.push(head.clone());
                    forest.extend(rest);
                    out.push(forest);
                }
            }
        }
        out
    }
}

/// Renders trees as a DOT digraph, one component per tree, vertices labeled
/// by their decorations. A debugging aid for small areas.
pub fn trees_to_dot(trees: &[EnrichedTree]) -> String {
    let mut out = String::from("digraph enriched_trees {\n  node [shape=box];\n");
    for (i, tree) in trees.iter().enumerate() {
        let mut next_id = 0usize;
        dot_vertex(tree, i, &mut next_id, &mut out);
    }
    out.push_str("}\n");
    out
}

fn dot_vertex(tree: &EnrichedTree, component: usize, next_id: &mut usize, out: &mut String) -> usize {
    let id = *next_id;
    *next_id += 1;
    let _ = writeln!(
        out,
        "  t{}_n{} [label=\"{}\"];",
        component,
        id,
        tree.decoration.label()
    );
    for child in &tree.children {
        let child_id = dot_vertex(child, component, next_id, out);
        let _ = writeln!(out, "  t{}_n{} -> t{}_n{};", component, id, component, child_id);
    }
    id
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::{a_refined, a_sigma_extended, atilde_refined, xi_via_theta};

    fn word(text: &str) -> SigmaWord {
        SigmaWord::parse(text).unwrap()
    }

    fn stack(heights: &[u32]) -> Decoration {
        Decoration::Stack(StackPolyomino::new(heights.to_vec()).unwrap())
    }

    #[test]
    fn size_matching_is_enforced() {
        // rise-1 stack needs exactly one child
        let d = stack(&[1, 2]);
        assert!(EnrichedTree::new(d.clone(), vec![]).is_err());
        let child = EnrichedTree::empty_vertex();
        assert!(EnrichedTree::new(d, vec![child]).is_ok());
        // Ferrers decorations must satisfy the Durfee condition
        let bad = Decoration::Ferrers(FerrersDiagram::new(vec![2, 1]).unwrap());
        assert!(EnrichedTree::new(bad, vec![EnrichedTree::empty_vertex(), EnrichedTree::empty_vertex()]).is_err());
    }

    #[test]
    fn area_zero_census_is_single_empty_tree() {
        for text in ["0", "1", "01"] {
            let table = enumerate_trees(&word(text), 0, None);
            assert_eq!(table.len(), 1);
            assert_eq!(table[&(0, 1)], BigInt::from(1));
        }
    }

    #[test]
    fn all_stack_tables_match_refined_series() {
        let table = enumerate_trees(&word("0"), 7, None);
        assert_eq!(table, refinement_table(&a_refined(7)));
    }

    #[test]
    fn all_ferrers_tables_match_refined_series() {
        let table = enumerate_trees(&word("1"), 7, None);
        assert_eq!(table, refinement_table(&atilde_refined(7)));
    }

    #[test]
    fn mixed_words_match_their_series() {
        for text in ["10", "110", "01", "101"] {
            let table = enumerate_trees(&word(text), 6, None);
            let series = a_sigma_extended(&word(text), 6).unwrap();
            assert_eq!(table, refinement_table(&series), "sigma {text}");
        }
    }

    #[test]
    fn figure_counts_six_and_eight() {
        // six stack-enriched trees with 5 vertices and total area 7
        let stacks = enumerate_trees(&word("0"), 7, None);
        assert_eq!(stacks[&(7, 5)], BigInt::from(6));
        // eight Ferrers-enriched trees with 3 vertices and total area 7
        let ferrers = enumerate_trees(&word("1"), 7, None);
        assert_eq!(ferrers[&(7, 3)], BigInt::from(8));
    }

    #[test]
    fn count_by_area_is_word_independent() {
        // uniform species to area 9: 1,1,2,4,9,21,52,133,351,948
        let xi9 = xi_via_theta(9);
        assert_eq!(count_by_area(&word("0"), 9, None), xi9);
        assert_eq!(count_by_area(&word("1"), 9, None), xi9);
        // mixed words, including alternating species by level
        let xi = xi9.truncated(7);
        for text in ["01", "10", "0110", "111000"] {
            assert_eq!(count_by_area(&word(text), 7, None), xi, "sigma {text}");
        }
    }

    #[test]
    fn materialization_agrees_with_counting() {
        for text in ["0", "1", "10"] {
            let sigma = word(text);
            let trees = all_trees(&sigma, 6, None);
            let mut table: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
            for t in &trees {
                assert!(t.respects(&sigma, 0), "{}", t.canonical_encoding());
                *table
                    .entry((t.total_area(), t.vertex_count()))
                    .or_insert_with(<BigInt as Ring>::zero) += 1;
            }
            assert_eq!(table, enumerate_trees(&sigma, 6, None), "sigma {text}");
            // no duplicates
            let mut encodings: Vec<String> =
                trees.iter().map(EnrichedTree::canonical_encoding).collect();
            encodings.sort();
            encodings.dedup();
            assert_eq!(encodings.len(), trees.len());
        }
    }

    #[test]
    fn finite_words_bound_height() {
        // length N+1 word with bounded height: all trees have height <= N,
        // and for max_area <= N the bounded and unbounded counts coincide
        let sigma = word("010");
        for t in all_trees(&sigma, 5, Some(2)) {
            assert!(t.height() <= 2);
        }
        assert_eq!(
            enumerate_trees(&sigma, 2, Some(2)),
            enumerate_trees(&sigma, 2, None)
        );
        // the bounded table matches the exact finite-word series
        let bounded = enumerate_trees(&sigma, 5, Some(2));
        let series = crate::theta::a_sigma(&sigma, 5).unwrap();
        assert_eq!(bounded, refinement_table(&series));
    }

    #[test]
    fn max_height_zero_leaves_only() {
        // only single-vertex trees: empty decoration or rise-0 stacks
        let table = enumerate_trees(&word("0"), 4, Some(0));
        assert_eq!(table[&(0, 1)], BigInt::from(1));
        assert_eq!(table[&(3, 1)], BigInt::from(3)); // (3), (2,1), (1,1,1)
        assert!(table.keys().all(|&(_, v)| v == 1));
    }

    #[test]
    fn injection_maps_empty_tree_to_single_cell() {
        let image = injection_step(&EnrichedTree::empty_vertex()).unwrap();
        assert_eq!(image.total_area(), 1);
        assert_eq!(image.vertex_count(), 1);
        assert_eq!(image.canonical_encoding(), "S(1)");
    }

    #[test]
    fn injection_widens_bottom_row() {
        // root decorated (2,1), rise 0, area 3 -> (2,1,1), area 4
        let t = EnrichedTree::new(stack(&[2, 1]), vec![]).unwrap();
        let image = injection_step(&t).unwrap();
        assert_eq!(image.canonical_encoding(), "S(2,1,1)");
        assert_eq!(image.total_area(), 4);
    }

    #[test]
    fn injection_rejects_ferrers_trees() {
        let d = Decoration::Ferrers(FerrersDiagram::new(vec![1]).unwrap());
        let t = EnrichedTree::new(d, vec![EnrichedTree::empty_vertex()]).unwrap();
        assert!(matches!(
            injection_step(&t),
            Err(Error::InjectionNeedsStackTree)
        ));
    }

    #[test]
    fn injection_is_injective_and_area_increasing() {
        let sigma = word("0");
        let trees = all_trees(&sigma, 6, None);
        let mut by_area: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for t in &trees {
            let image = injection_step(t).unwrap();
            assert_eq!(image.total_area(), t.total_area() + 1);
            assert!(image.is_all_stack());
            assert!(image.respects(&sigma, 0));
            by_area
                .entry(t.total_area())
                .or_default()
                .push(image.canonical_encoding());
        }
        for (area, mut images) in by_area {
            let n = images.len();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), n, "collision among images of area {area}");
        }
    }

    #[test]
    fn encoding_round_trips() {
        assert_eq!(EnrichedTree::empty_vertex().canonical_encoding(), "()");
        for text in ["0", "1", "10"] {
            let sigma = word(text);
            for t in all_trees(&sigma, 5, None) {
                let enc = t.canonical_encoding();
                assert_eq!(EnrichedTree::from_encoding(&enc).unwrap(), t, "{enc}");
            }
        }
    }

    #[test]
    fn encoding_rejects_malformed_input() {
        for bad in ["", "S()", "S(1", "()[", "()[()]", "S(2,1)[()]", "() ", "X(1)"] {
            assert!(EnrichedTree::from_encoding(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn distinct_trees_have_distinct_encodings() {
        let trees = all_trees(&word("0"), 7, None);
        let pairs: Vec<(String, &EnrichedTree)> = trees
            .iter()
            .map(|t| (t.canonical_encoding(), t))
            .collect();
        let mut seen = std::collections::HashSet::new();
        for (enc, _) in &pairs {
            assert!(seen.insert(enc.clone()), "duplicate encoding {enc}");
        }
    }

    #[test]
    fn dot_output_is_well_formed() {
        let trees = all_trees(&word("0"), 3, None);
        let dot = trees_to_dot(&trees);
        assert!(dot.starts_with("digraph"));
        assert!(dot.ends_with("}\n"));
        assert!(dot.contains("->"));
        assert!(dot.contains("S(1,2)"));
    }
}
