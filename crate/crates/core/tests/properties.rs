use std::collections::{BTreeMap, BTreeSet};

use aliaskit_core::canon::{demonym_canonical, strip_honorifics, HonorificLexicon};
use aliaskit_core::conll::{parse_chapter, serialize_chapter, Comment, Corpus};
use aliaskit_core::graph::build_cooccurrence;
use aliaskit_core::listing::{annotate_identity, build_entity_list, build_mention_list};
use aliaskit_core::resolver::{evaluate_clusters, name_parts, suggest_clusters, Cluster, ClusterSet};
use aliaskit_core::validation::{check_consistency, check_coverage, diff_tables};
use aliaskit_core::{AliasTable, Chapter, EntityKey, EntityRecord, EntityType, LintConfig, Tag, Token};
use proptest::prelude::*;

const WORDS: [&str; 10] = ["Athos", "Porthos", "de", "la", "Fère", "#", "#x", "ran", "Paris", "l'Anglais"];

fn etype() -> impl Strategy<Value = EntityType> {
    prop::sample::select(EntityType::ALL.to_vec())
}

/// A sentence as tokens with well-formed IOB2 tags.
fn sentence() -> impl Strategy<Value = Vec<Token>> {
    prop::collection::vec((prop::sample::select(WORDS.to_vec()), 0u8..3, etype()), 1..8).prop_map(|raw| {
        let mut open: Option<EntityType> = None;
        raw.into_iter()
            .map(|(w, kind, t)| {
                let tag = match (kind, open) {
                    (0, _) => Tag::Outside,
                    (2, Some(o)) => Tag::Inside(o),
                    _ => Tag::Begin(t),
                };
                open = tag.etype();
                Token::new(w, tag).unwrap()
            })
            .collect()
    })
}

fn chapter(index: usize) -> impl Strategy<Value = Chapter> {
    (
        prop::collection::vec(sentence(), 1..6),
        prop::collection::vec((0usize..8, 0usize..9), 0..4),
        any::<bool>(),
    )
        .prop_map(move |(sentences, raw_anchors, space)| {
            let mut anchors: Vec<(usize, usize)> = raw_anchors
                .into_iter()
                .map(|(s, o)| {
                    if s >= sentences.len() {
                        (sentences.len(), 0)
                    } else {
                        (s, o.min(sentences[s].len()))
                    }
                })
                .collect();
            anchors.sort();
            let comments = anchors
                .into_iter()
                .enumerate()
                .map(|(k, (sentence, offset))| Comment {
                    sentence,
                    offset,
                    text: format!("#note{k}"),
                })
                .collect();
            Chapter::new(index, "chapter.conll", sentences, comments)
                .unwrap()
                .with_separator(if space { ' ' } else { '\t' })
        })
}

fn corpus() -> impl Strategy<Value = Corpus> {
    (chapter(1), chapter(2), chapter(3)).prop_map(|(a, b, c)| Corpus::new(vec![a, b, c]).unwrap())
}

proptest! {
    #[test]
    fn conll_round_trip(ch in chapter(1)) {
        let text = serialize_chapter(&ch);
        let parsed = parse_chapter(&text, 1, "chapter.conll").unwrap();
        prop_assert!(parsed.findings.is_empty());
        prop_assert_eq!(&parsed.chapter, &ch);
        prop_assert_eq!(serialize_chapter(&parsed.chapter), text);
    }

    #[test]
    fn frequencies_conserve_mentions(c in corpus()) {
        let list = build_entity_list(&c);
        let total: u64 = list.iter().map(|r| r.frequency).sum();
        prop_assert_eq!(total as usize, c.mentions().len());
        prop_assert_eq!(build_mention_list(&c).len(), c.mentions().len());
        let keys: BTreeSet<EntityKey> = c.mentions().iter().map(|m| m.key()).collect();
        prop_assert_eq!(keys.len(), list.len());
        prop_assert!(list.windows(2).all(|w| w[0].key < w[1].key));
    }

    #[test]
    fn identity_table_is_consistent(c in corpus()) {
        let table = AliasTable::new(annotate_identity(&build_entity_list(&c)), None).unwrap();
        prop_assert!(check_coverage(&table).is_empty());
        prop_assert!(check_consistency(&c, &table).is_empty());
    }

    #[test]
    fn diff_is_symmetric(canon_a in prop::collection::vec(prop::option::of("[ab]{0,2}"), 6),
                         canon_b in prop::collection::vec(prop::option::of("[ab]{0,2}"), 6),
                         keep_a in prop::collection::vec(any::<bool>(), 6),
                         keep_b in prop::collection::vec(any::<bool>(), 6)) {
        let names = ["Athos", "athos", "Porthos", "Aramis", "Paris", "Tréville"];
        let build = |canon: &[Option<String>], keep: &[bool]| {
            let rows = names.iter().zip(canon).zip(keep).filter(|(_, k)| **k).map(|((n, c), _)| {
                let mut r = EntityRecord::new(EntityKey::new(n, EntityType::Chr), 1);
                r.canonical = c.clone();
                r
            }).collect();
            AliasTable::new(rows, None).unwrap()
        };
        let (a, b) = (build(&canon_a, &keep_a), build(&canon_b, &keep_b));
        let ab = diff_tables(&a, &b);
        let ba = diff_tables(&b, &a);
        prop_assert_eq!(&ab.only_in_v1, &ba.only_in_v2);
        prop_assert_eq!(&ab.only_in_v2, &ba.only_in_v1);
        prop_assert_eq!(ab.mismatches.len(), ba.mismatches.len());
        for (x, y) in ab.mismatches.iter().zip(&ba.mismatches) {
            prop_assert_eq!(&x.key, &y.key);
            prop_assert_eq!(&x.v1, &y.v2);
            prop_assert_eq!(&x.v2, &y.v1);
        }
        prop_assert!(diff_tables(&a, &a).is_empty());
    }

    #[test]
    fn strip_is_idempotent(words in prop::collection::vec(prop::sample::select(vec![
        "Monsieur", "le", "Comte", "de", "Wardes", "Madame", "Bonacieux", "Cardinal", "the",
        "Lady", "Anne", "M.", "la", "Fère", "Sir", "Duc", "Constance",
    ]), 1..6)) {
        let lex = HonorificLexicon::default();
        let name = words.join(" ");
        let once = strip_honorifics(&name, &lex);
        prop_assert_eq!(strip_honorifics(&once, &lex), once.clone());
        prop_assert!(!once.is_empty());
    }

    #[test]
    fn demonym_rule_is_scale_invariant(counts in prop::collection::vec(0u64..50, 5), k in 1u64..20) {
        let names = ["Englishman", "Englishmen", "Englishwoman", "Englishwomen", "English"];
        let v: Vec<(&str, u64)> = names.iter().copied().zip(counts.iter().copied()).collect();
        let scaled: Vec<(&str, u64)> = v.iter().map(|(n, c)| (*n, c * k)).collect();
        prop_assert_eq!(demonym_canonical(&v).unwrap(), demonym_canonical(&scaled).unwrap());
    }

    #[test]
    fn clusters_match_transitive_closure(picks in prop::collection::vec(
        prop::collection::vec(prop::sample::select(vec![
            "Athos", "Porthos", "de", "la", "Fère", "Comte", "Olivier", "Bo", "Mousqueton", "Madame",
        ]), 1..4), 1..10)) {
        let mut seen = BTreeSet::new();
        let recs: Vec<EntityRecord> = picks.iter()
            .map(|w| w.join(" "))
            .filter(|s| seen.insert(s.clone()))
            .map(|s| EntityRecord::new(EntityKey::new(&s, EntityType::Chr), 1))
            .collect();
        let cfg = LintConfig::default();
        let got = suggest_clusters(&recs, &cfg).unwrap();
        // oracle: boolean reachability to a fixpoint over the direct link relation
        let n = recs.len();
        let parts: Vec<_> = recs.iter().map(|r| name_parts(&r.key.surface, &cfg.honorifics, 3)).collect();
        let mut reach = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                reach[i][j] = i == j || !parts[i].is_disjoint(&parts[j]);
            }
        }
        for k in 0..n { for i in 0..n { for j in 0..n {
            if reach[i][k] && reach[k][j] { reach[i][j] = true; }
        }}}
        let mut cluster_of: BTreeMap<&EntityKey, usize> = BTreeMap::new();
        for (ci, c) in got.clusters().iter().enumerate() {
            for m in &c.members { cluster_of.insert(m, ci); }
        }
        prop_assert_eq!(cluster_of.len(), n);
        for i in 0..n { for j in 0..n {
            prop_assert_eq!(reach[i][j], cluster_of[&recs[i].key] == cluster_of[&recs[j].key]);
        }}
    }

    #[test]
    fn metrics_match_pair_enumeration(pred in prop::collection::vec(0usize..4, 1..10),
                                      gold in prop::collection::vec(prop::option::of(0usize..3), 10)) {
        let keys: Vec<EntityKey> = (0..pred.len()).map(|i| EntityKey::new(&format!("k{i}"), EntityType::Chr)).collect();
        let mut groups: BTreeMap<usize, Vec<EntityKey>> = BTreeMap::new();
        for (k, p) in keys.iter().zip(&pred) { groups.entry(*p).or_default().push(k.clone()); }
        let set = ClusterSet::new(groups.into_values().map(|m| Cluster { candidate: m[0].clone(), members: m }).collect());
        let records: Vec<EntityRecord> = keys.iter().zip(&gold).map(|(k, g)| {
            let r = EntityRecord::new(k.clone(), 1);
            match g { Some(c) => r.with_canonical(format!("G{c}")), None => r }
        }).collect();
        let gold_table = AliasTable::new(records, None).unwrap();
        let m = evaluate_clusters(&set, &gold_table).unwrap();
        let n = keys.len();
        let same_gold = |i: usize, j: usize| i == j || matches!((gold[i], gold[j]), (Some(a), Some(b)) if a == b);
        let same_pred = |i: usize, j: usize| pred[i] == pred[j];
        let (mut pp, mut gp, mut both) = (0u32, 0u32, 0u32);
        let (mut bp, mut br) = (0.0f64, 0.0f64);
        for i in 0..n {
            let pi: Vec<usize> = (0..n).filter(|&j| same_pred(i, j)).collect();
            let gi: Vec<usize> = (0..n).filter(|&j| same_gold(i, j)).collect();
            let inter = pi.iter().filter(|j| gi.contains(j)).count() as f64;
            bp += inter / pi.len() as f64;
            br += inter / gi.len() as f64;
            for j in i + 1..n {
                let (p, g) = (same_pred(i, j), same_gold(i, j));
                pp += p as u32; gp += g as u32; both += (p && g) as u32;
            }
        }
        let p = if pp == 0 { 1.0 } else { both as f64 / pp as f64 };
        let r = if gp == 0 { 1.0 } else { both as f64 / gp as f64 };
        prop_assert!((m.pairwise_precision - p).abs() < 1e-9);
        prop_assert!((m.pairwise_recall - r).abs() < 1e-9);
        prop_assert!((m.b3_precision - bp / n as f64).abs() < 1e-9);
        prop_assert!((m.b3_recall - br / n as f64).abs() < 1e-9);
    }

    #[test]
    fn graph_matches_mention_pair_scan(c in corpus(), window in 1usize..5) {
        let table = AliasTable::new(annotate_identity(&build_entity_list(&c)), None).unwrap();
        let g = build_cooccurrence(&c, &table, window).unwrap();
        // oracle: per window position, scan all pairs of character mentions
        let mut expected: BTreeMap<(String, String), u64> = BTreeMap::new();
        for ch in c.chapters() {
            let n = ch.sentences().len();
            let positions = if n >= window { n - window + 1 } else { 1 };
            for p in 1..=positions {
                let ms: Vec<_> = c.mentions().iter()
                    .filter(|m| m.chapter == ch.index() && m.etype == EntityType::Chr && m.line >= p && m.line < p + window)
                    .collect();
                let mut pairs = BTreeSet::new();
                for a in &ms { for b in &ms {
                    if a.surface < b.surface { pairs.insert((a.surface.clone(), b.surface.clone())); }
                }}
                for pr in pairs { *expected.entry(pr).or_insert(0) += 1; }
            }
        }
        let got: BTreeMap<(String, String), u64> = g.edges().map(|(a, b, w)| ((a.to_string(), b.to_string()), w)).collect();
        prop_assert_eq!(got, expected);
    }
}
