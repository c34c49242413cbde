//! Character co-occurrence graph over canonical forms.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::conll::Corpus;
use crate::etype::EntityType;
use crate::listing::EntityKey;
use crate::registry::AliasTable;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("window must be at least one sentence")]
    ZeroWindow,
    #[error("{} character aliases have no canonical form: {}", .0.len(), join_keys(.0))]
    Uncovered(Vec<EntityKey>),
    #[error("edge {0:?}-{1:?} joins a node to itself or to an unknown node")]
    BadEdge(String, String),
}

fn join_keys(keys: &[EntityKey]) -> String {
    let parts: Vec<String> = keys.iter().map(|k| alloc::format!("{k}")).collect();
    parts.join(", ")
}

/// Undirected weighted graph. Nodes are canonical character names; an edge
/// weight counts the window positions where both characters occur.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CharacterGraph {
    nodes: BTreeSet<String>,
    edges: BTreeMap<(String, String), u64>,
}

impl CharacterGraph {
    /// Build from explicit parts. Edge endpoints are stored in order; a
    /// repeated edge adds its weight.
    pub fn from_parts<I, E>(nodes: I, edges: E) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = String>,
        E: IntoIterator<Item = (String, String, u64)>,
    {
        let nodes: BTreeSet<String> = nodes.into_iter().collect();
        let mut g = CharacterGraph {
            nodes,
            edges: BTreeMap::new(),
        };
        for (a, b, w) in edges {
            if a == b || !g.nodes.contains(&a) || !g.nodes.contains(&b) {
                return Err(GraphError::BadEdge(a, b));
            }
            let key = if a < b { (a, b) } else { (b, a) };
            *g.edges.entry(key).or_insert(0) += w;
        }
        Ok(g)
    }

    pub fn nodes(&self) -> impl Iterator<Item = &str> {
        self.nodes.iter().map(String::as_str)
    }

    /// Edges as `(a, b, weight)` with `a < b`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, u64)> {
        self.edges.iter().map(|((a, b), w)| (a.as_str(), b.as_str(), *w))
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn weight(&self, a: &str, b: &str) -> u64 {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges
            .iter()
            .find(|((x, y), _)| x == key.0 && y == key.1)
            .map_or(0, |(_, w)| *w)
    }
}

/// Co-occurrence of characters within a sliding window of `window`
/// sentences. Windows stay inside a chapter: a chapter of `n` sentences has
/// `n - window + 1` positions, or one position when it is shorter than the
/// window. Each position adds one to every pair of distinct canonical forms
/// present in it. Every character alias must have a canonical form.
pub fn build_cooccurrence(corpus: &Corpus, table: &AliasTable, window: usize) -> Result<CharacterGraph, GraphError> {
    if window == 0 {
        return Err(GraphError::ZeroWindow);
    }
    let mut canon: BTreeMap<EntityKey, &str> = BTreeMap::new();
    let mut uncovered = BTreeSet::new();
    for m in corpus.mentions().iter().filter(|m| m.etype == EntityType::Chr) {
        let key = m.key();
        if canon.contains_key(&key) || uncovered.contains(&key) {
            continue;
        }
        match table.get(&key).and_then(|r| r.filled_canonical()) {
            Some(c) => {
                canon.insert(key, c.trim());
            }
            None => {
                uncovered.insert(key);
            }
        }
    }
    if !uncovered.is_empty() {
        return Err(GraphError::Uncovered(uncovered.into_iter().collect()));
    }

    let mut edges: BTreeMap<(&str, &str), u64> = BTreeMap::new();
    for ch in corpus.chapters() {
        // canonical ids present in each sentence
        let lines: Vec<BTreeSet<&str>> = (1..=ch.sentences().len())
            .map(|line| {
                corpus
                    .mentions_at(ch.index(), line)
                    .iter()
                    .filter(|m| m.etype == EntityType::Chr)
                    .map(|m| canon[&m.key()])
                    .collect()
            })
            .collect();
        let positions = lines.len().saturating_sub(window) + 1;
        for p in 0..positions {
            let present: BTreeSet<&str> = lines[p..(p + window).min(lines.len())]
                .iter()
                .flatten()
                .copied()
                .collect();
            let present: Vec<&str> = present.into_iter().collect();
            for (i, a) in present.iter().enumerate() {
                for b in &present[i + 1..] {
                    *edges.entry((a, b)).or_insert(0) += 1;
                }
            }
        }
    }
    Ok(CharacterGraph {
        nodes: canon.values().map(|c| String::from(*c)).collect(),
        edges: edges
            .into_iter()
            .map(|((a, b), w)| ((String::from(a), String::from(b)), w))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conll::parse_chapter;
    use crate::listing::{annotate_identity, build_entity_list};
    use alloc::string::ToString;
    use alloc::vec;

    fn corpus(chapters: &[&str]) -> Corpus {
        Corpus::from_parsed(
            chapters
                .iter()
                .enumerate()
                .map(|(i, t)| parse_chapter(t, i + 1, "c").unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn identity(c: &Corpus) -> AliasTable {
        AliasTable::new(annotate_identity(&build_entity_list(c)), None).unwrap()
    }

    const CH: &str = "Athos\tB-CHR\nand\tO\nPorthos\tB-CHR\n\nAramis\tB-CHR\n\nran\tO\n\nAthos\tB-CHR\n";

    #[test]
    fn window_one_counts_same_sentence() {
        let c = corpus(&[CH]);
        let g = build_cooccurrence(&c, &identity(&c), 1).unwrap();
        let e: Vec<_> = g.edges().collect();
        assert_eq!(e, [("Athos", "Porthos", 1)]);
        assert_eq!(g.node_count(), 3);
    }

    #[test]
    fn window_two_slides() {
        let c = corpus(&[CH]);
        let g = build_cooccurrence(&c, &identity(&c), 2).unwrap();
        // positions: {1,2} {2,3} {3,4}
        assert_eq!(g.weight("Athos", "Porthos"), 1);
        assert_eq!(g.weight("Aramis", "Athos"), 1);
        assert_eq!(g.weight("Porthos", "Aramis"), 1);
        let big = build_cooccurrence(&c, &identity(&c), 50).unwrap();
        assert_eq!(big.edge_count(), 3);
        assert!(big.edges().all(|(_, _, w)| w == 1));
    }

    #[test]
    fn windows_do_not_cross_chapters() {
        let c = corpus(&["Athos\tB-CHR\n", "Porthos\tB-CHR\n"]);
        let g = build_cooccurrence(&c, &identity(&c), 5).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn aliases_merge_and_no_self_loops() {
        let c = corpus(&["Athos\tB-CHR\nand\tO\nOlivier\tB-CHR\n"]);
        let rows = build_entity_list(&c)
            .into_iter()
            .map(|r| r.with_canonical("Olivier de La Fère"))
            .collect();
        let t = AliasTable::new(rows, None).unwrap();
        let g = build_cooccurrence(&c, &t, 3).unwrap();
        assert_eq!(g.node_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn errors() {
        let c = corpus(&[CH]);
        assert_eq!(build_cooccurrence(&c, &identity(&c), 0), Err(GraphError::ZeroWindow));
        let rows = build_entity_list(&c);
        let t = AliasTable::new(rows, None).unwrap();
        match build_cooccurrence(&c, &t, 1) {
            Err(GraphError::Uncovered(keys)) => assert_eq!(keys.len(), 3),
            other => panic!("{other:?}"),
        }
        assert!(CharacterGraph::from_parts(vec!["a".to_string()], vec![("a".into(), "a".into(), 1)]).is_err());
    }
}
