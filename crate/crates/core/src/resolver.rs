//! Alias cluster suggestion and cluster-quality metrics.
//!
//! Two aliases of one type are linked when they share a name part: a token
//! outside the leading honorific run that is not a particle and is at least
//! `min_part_len` characters long, compared case-insensitively. A name made
//! only of honorifics ("Milady") keeps them as parts. Clusters are
//! the connected components of that relation. Shared family names therefore
//! over-merge (Athos as "Comte de la Fère" and Milady as "Comtesse de la
//! Fère"); suggestions are for review, not for direct use.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::canon::{is_particle, tokens_after_honorifics, HonorificLexicon, LintConfig};
use crate::etype::EntityType;
use crate::listing::{EntityKey, EntityRecord};
use crate::registry::AliasTable;
use crate::text::{fold_case, nfc};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResolveError {
    #[error("cluster suggestion needs records of one type, found {0} and {1}")]
    MixedTypes(EntityType, EntityType),
    #[error("duplicate record {0}")]
    Duplicate(EntityKey),
    #[error("predicted key {0} is not in the gold table")]
    UnknownKey(EntityKey),
}

/// Folded name parts of a surface form.
pub fn name_parts(surface: &str, lex: &HonorificLexicon, min_len: usize) -> BTreeSet<String> {
    let surface = nfc(surface);
    tokens_after_honorifics(&surface, lex)
        .into_iter()
        .map(|t| t.trim_end_matches(','))
        .filter(|t| !is_particle(t) && t.chars().count() >= min_len)
        .map(fold_case)
        .collect()
}

/// One suggested cluster with its proposed canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cluster {
    /// Members in collation order.
    pub members: Vec<EntityKey>,
    /// The member with the most name parts, then the highest frequency,
    /// then the first in collation order.
    pub candidate: EntityKey,
}

/// A partition of entity keys, ordered by candidate.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClusterSet {
    clusters: Vec<Cluster>,
}

impl ClusterSet {
    pub fn new(mut clusters: Vec<Cluster>) -> Self {
        for c in &mut clusters {
            c.members.sort();
        }
        clusters.sort_by(|a, b| a.candidate.cmp(&b.candidate));
        ClusterSet { clusters }
    }

    pub fn clusters(&self) -> &[Cluster] {
        &self.clusters
    }

    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    pub fn keys(&self) -> impl Iterator<Item = &EntityKey> {
        self.clusters.iter().flat_map(|c| c.members.iter())
    }

    /// Records annotated with their cluster's candidate surface.
    pub fn annotate(&self, records: &[EntityRecord]) -> Vec<EntityRecord> {
        let mut canon: BTreeMap<&EntityKey, &str> = BTreeMap::new();
        for c in &self.clusters {
            for m in &c.members {
                canon.insert(m, &c.candidate.surface);
            }
        }
        records
            .iter()
            .map(|r| match canon.get(&r.key) {
                Some(c) => r.clone().with_canonical(*c),
                None => r.clone(),
            })
            .collect()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Cluster the aliases of one entity type.
pub fn suggest_clusters(records: &[EntityRecord], cfg: &LintConfig) -> Result<ClusterSet, ResolveError> {
    if let Some(first) = records.first() {
        if let Some(other) = records.iter().find(|r| r.key.etype != first.key.etype) {
            return Err(ResolveError::MixedTypes(first.key.etype, other.key.etype));
        }
    }
    let mut seen = BTreeSet::new();
    for r in records {
        if !seen.insert(&r.key) {
            return Err(ResolveError::Duplicate(r.key.clone()));
        }
    }
    let parts: Vec<BTreeSet<String>> = records
        .iter()
        .map(|r| name_parts(&r.key.surface, &cfg.honorifics, cfg.min_part_len))
        .collect();
    let mut uf = UnionFind::new(records.len());
    let mut owner: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, ps) in parts.iter().enumerate() {
        for p in ps {
            match owner.get(p.as_str()) {
                Some(&j) => uf.union(i, j),
                None => {
                    owner.insert(p, i);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..records.len() {
        groups.entry(uf.find(i)).or_default().push(i);
    }
    let clusters = groups
        .into_values()
        .map(|idx| {
            let best = idx
                .iter()
                .copied()
                .min_by(|&a, &b| {
                    parts[b]
                        .len()
                        .cmp(&parts[a].len())
                        .then(records[b].frequency.cmp(&records[a].frequency))
                        .then_with(|| records[a].key.cmp(&records[b].key))
                })
                .expect("non-empty group");
            Cluster {
                members: idx.iter().map(|&i| records[i].key.clone()).collect(),
                candidate: records[best].key.clone(),
            }
        })
        .collect();
    Ok(ClusterSet::new(clusters))
}

/// Suggest clusters separately for every type present in `records`.
pub fn suggest_all(records: &[EntityRecord], cfg: &LintConfig) -> Result<ClusterSet, ResolveError> {
    let mut by_type: BTreeMap<EntityType, Vec<EntityRecord>> = BTreeMap::new();
    for r in records {
        by_type.entry(r.key.etype).or_default().push(r.clone());
    }
    let mut all = Vec::new();
    for group in by_type.values() {
        all.extend(suggest_clusters(group, cfg)?.clusters);
    }
    Ok(ClusterSet::new(all))
}

/// Pairwise and B-cubed precision, recall and F1 of a suggestion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClusterMetrics {
    pub pairwise_precision: f64,
    pub pairwise_recall: f64,
    pub pairwise_f1: f64,
    pub b3_precision: f64,
    pub b3_recall: f64,
    pub b3_f1: f64,
}

fn f1(p: f64, r: f64) -> f64 {
    if p + r == 0.0 {
        0.0
    } else {
        2.0 * p * r / (p + r)
    }
}

fn pairs(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// Score `predicted` against the gold canonical forms in `gold`.
///
/// Gold clusters group keys with the same canonical form within a type,
/// restricted to the predicted keys; keys with a blank canonical form are
/// gold singletons. With no predicted pairs pairwise precision is
/// 1, with no gold pairs pairwise recall is 1.
pub fn evaluate_clusters(predicted: &ClusterSet, gold: &AliasTable) -> Result<ClusterMetrics, ResolveError> {
    if let Some(k) = predicted.keys().find(|k| gold.get(k).is_none()) {
        return Err(ResolveError::UnknownKey(k.clone()));
    }
    let gold_canon: BTreeMap<&EntityKey, &str> = gold
        .records()
        .iter()
        .filter_map(|r| r.filled_canonical().map(|c| (&r.key, c)))
        .collect();
    // gold cluster id: (type, canonical) or the key itself for singletons
    #[derive(PartialEq, Eq, PartialOrd, Ord)]
    enum GoldId<'a> {
        Canon(EntityType, &'a str),
        Alone(&'a EntityKey),
    }
    let mut cell: BTreeMap<(usize, GoldId<'_>), u64> = BTreeMap::new();
    let mut pred_size: Vec<u64> = Vec::new();
    let mut gold_size: BTreeMap<GoldId<'_>, u64> = BTreeMap::new();
    for (pi, c) in predicted.clusters.iter().enumerate() {
        pred_size.push(c.members.len() as u64);
        for k in &c.members {
            let gid = || match gold_canon.get(k) {
                Some(canon) => GoldId::Canon(k.etype, canon),
                None => GoldId::Alone(k),
            };
            *cell.entry((pi, gid())).or_insert(0) += 1;
            *gold_size.entry(gid()).or_insert(0) += 1;
        }
    }
    let n: u64 = pred_size.iter().sum();
    let pred_pairs: u64 = pred_size.iter().map(|&s| pairs(s)).sum();
    let gold_pairs: u64 = gold_size.values().map(|&s| pairs(s)).sum();
    let correct: u64 = cell.values().map(|&s| pairs(s)).sum();
    let pairwise_precision = if pred_pairs == 0 { 1.0 } else { correct as f64 / pred_pairs as f64 };
    let pairwise_recall = if gold_pairs == 0 { 1.0 } else { correct as f64 / gold_pairs as f64 };
    let (mut bp, mut br) = (0.0, 0.0);
    for ((pi, gid), &c) in &cell {
        let c = c as f64;
        bp += c * c / pred_size[*pi] as f64;
        br += c * c / gold_size[gid] as f64;
    }
    let (b3_precision, b3_recall) = if n == 0 {
        (1.0, 1.0)
    } else {
        (bp / n as f64, br / n as f64)
    };
    Ok(ClusterMetrics {
        pairwise_precision,
        pairwise_recall,
        pairwise_f1: f1(pairwise_precision, pairwise_recall),
        b3_precision,
        b3_recall,
        b3_f1: f1(b3_precision, b3_recall),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn chr(s: &str, f: u64) -> EntityRecord {
        EntityRecord::new(EntityKey::new(s, EntityType::Chr), f)
    }

    fn surfaces(set: &ClusterSet) -> Vec<(String, Vec<String>)> {
        set.clusters()
            .iter()
            .map(|c| {
                (
                    c.candidate.surface.clone(),
                    c.members.iter().map(|m| m.surface.clone()).collect(),
                )
            })
            .collect()
    }

    #[test]
    fn links_through_shared_parts() {
        let recs = vec![
            chr("Constance", 5),
            chr("Madame Bonacieux", 4),
            chr("Constance Bonacieux", 2),
            chr("Athos", 9),
            chr("Monsieur Bonacieux", 3),
        ];
        let set = suggest_clusters(&recs, &LintConfig::default()).unwrap();
        let got = surfaces(&set);
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].0, "Athos");
        assert_eq!(got[1].0, "Constance Bonacieux");
        assert_eq!(got[1].1.len(), 4);
    }

    #[test]
    fn particles_and_short_parts_do_not_link() {
        let recs = vec![chr("Comte de Wardes", 2), chr("Duc de Guise", 2), chr("Al Bo", 1), chr("Bo", 1)];
        let set = suggest_clusters(&recs, &LintConfig::default()).unwrap();
        assert_eq!(set.len(), 4);
        let cfg = LintConfig {
            min_part_len: 2,
            ..LintConfig::default()
        };
        assert_eq!(suggest_clusters(&recs, &cfg).unwrap().len(), 3);
    }

    #[test]
    fn musketeer_groupings() {
        let cfg = LintConfig::default();
        let recs: Vec<EntityRecord> = ["Harry Potter", "Harry", "Potter", "Hermione"]
            .iter()
            .map(|s| chr(s, 1))
            .collect();
        assert_eq!(suggest_clusters(&recs, &cfg).unwrap().len(), 2);
        let recs: Vec<EntityRecord> = [
            "Comte de Wardes",
            "De Wardes",
            "M. de Wardes",
            "Monsieur de Wardes",
            "Monsieur le Comte de Wardes",
            "Comte de la Fère",
            "Milady",
            "Anne de Breuil",
        ]
        .iter()
        .map(|s| chr(s, 1))
        .collect();
        let set = suggest_clusters(&recs, &cfg).unwrap();
        let sizes: Vec<usize> = set.clusters().iter().map(|c| c.members.len()).collect();
        assert_eq!(sizes, [1, 1, 5, 1]);
        assert_eq!(set.clusters()[2].candidate.surface, "Comte de Wardes");
    }

    #[test]
    fn mixed_types_rejected() {
        let recs = vec![chr("Paris", 1), EntityRecord::new(EntityKey::new("Paris", EntityType::Loc), 1)];
        assert!(matches!(
            suggest_clusters(&recs, &LintConfig::default()),
            Err(ResolveError::MixedTypes(..))
        ));
        let all = suggest_all(&recs, &LintConfig::default()).unwrap();
        assert_eq!(all.len(), 2);
    }

    #[test]
    fn candidate_tie_breaks() {
        let recs = vec![chr("Porthos", 3), chr("Monsieur Porthos", 3), chr("porthos", 7)];
        let set = suggest_clusters(&recs, &LintConfig::default()).unwrap();
        assert_eq!(set.clusters()[0].candidate.surface, "porthos");
        let recs = vec![chr("Porthos", 3), chr("Monsieur Porthos", 3)];
        let set = suggest_clusters(&recs, &LintConfig::default()).unwrap();
        assert_eq!(set.clusters()[0].candidate.surface, "Monsieur Porthos");
    }

    fn keyed(names: &[&[&str]]) -> ClusterSet {
        ClusterSet::new(
            names
                .iter()
                .map(|g| {
                    let members: Vec<EntityKey> =
                        g.iter().map(|s| EntityKey::new(s, EntityType::Chr)).collect();
                    Cluster {
                        candidate: members[0].clone(),
                        members,
                    }
                })
                .collect(),
        )
    }

    fn gold(rows: &[(&str, &str)]) -> AliasTable {
        AliasTable::new(rows.iter().map(|(s, c)| chr(s, 1).with_canonical(*c)).collect(), None).unwrap()
    }

    #[test]
    fn metrics_worked_example() {
        let g = gold(&[("a", "X"), ("b", "X"), ("c", "Y"), ("d", "Y")]);
        let m = evaluate_clusters(&keyed(&[&["a", "b", "c"], &["d"]]), &g).unwrap();
        assert!((m.pairwise_precision - 1.0 / 3.0).abs() < 1e-12);
        assert!((m.pairwise_recall - 0.5).abs() < 1e-12);
        assert!((m.pairwise_f1 - 0.4).abs() < 1e-12);
        assert!((m.b3_precision - 2.0 / 3.0).abs() < 1e-12);
        assert!((m.b3_recall - 0.75).abs() < 1e-12);
        assert!((m.b3_f1 - 12.0 / 17.0).abs() < 1e-12);
    }

    #[test]
    fn metrics_degenerate_cases() {
        let g = gold(&[("a", "X"), ("b", "Y")]);
        let m = evaluate_clusters(&keyed(&[&["a"], &["b"]]), &g).unwrap();
        assert_eq!((m.pairwise_precision, m.pairwise_recall, m.b3_f1), (1.0, 1.0, 1.0));
        let g = gold(&[("a", "X"), ("b", "X")]);
        let m = evaluate_clusters(&keyed(&[&["a"], &["b"]]), &g).unwrap();
        assert_eq!((m.pairwise_precision, m.pairwise_recall, m.pairwise_f1), (1.0, 0.0, 0.0));
        // blank canonical forms are singletons in gold
        let g = AliasTable::new(vec![chr("a", 1), chr("b", 1)], None).unwrap();
        let m = evaluate_clusters(&keyed(&[&["a", "b"]]), &g).unwrap();
        assert_eq!((m.pairwise_precision, m.pairwise_recall), (0.0, 1.0));
        assert!(matches!(
            evaluate_clusters(&keyed(&[&["a", "z"]]), &g),
            Err(ResolveError::UnknownKey(_))
        ));
    }
}
