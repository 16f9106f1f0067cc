use grtame::artame::{ArKind, TameContext};
use grtame::grengine::GrEngine;
use grtame::homlin::{exists_epi, exists_mono, hom_basis, RankOptions};
use grtame::linalg::q;
use grtame::qkit::{cycle_quiver, enumerate_strings, parse_string, QuiverDoc};
use grtame::strmod::{band_to_rep, string_to_rep};
use grtame::{Error, GrMeasure};

fn toks(s: &str) -> Vec<String> {
    s.split_whitespace().map(str::to_string).collect()
}

#[test]
fn quiver_documents() {
    let k = QuiverDoc::parse(r#"{"cycle": "+-"}"#).unwrap();
    assert_eq!(k.vertex_count(), 2);
    assert!(k.is_cycle());
    assert!(matches!(QuiverDoc::parse(r#"{"cycle": "+++"}"#), Err(Error::CyclicOrientation)));
    assert!(matches!(QuiverDoc::parse("[1, 2]"), Err(Error::Parse(_))));
}

#[test]
fn malformed_strings_are_rejected() {
    let q = cycle_quiver("++-").unwrap();
    assert!(matches!(parse_string(&q, &toks("a0 -a0")), Err(Error::Unreduced { .. })));
    assert!(matches!(parse_string(&q, &toks("b7")), Err(Error::UnknownArrow(_))));
    assert!(parse_string(&q, &toks("a0 a0")).is_err());
}

#[test]
fn string_counts_grow_linearly_on_kronecker() {
    // two strings for each number of letters
    let k = cycle_quiver("+-").unwrap();
    let counts: Vec<usize> = (0..6).map(|n| enumerate_strings(&k, n).len()).collect();
    assert_eq!(counts, vec![2, 4, 6, 8, 10, 12]);
}

#[test]
fn hom_spaces_of_kronecker_bands() {
    let k = cycle_quiver("+-").unwrap();
    let b = grtame::qkit::band_words(&k).remove(0);
    let h1 = band_to_rep(&k, &b, 1, &q(1)).unwrap();
    let h2 = band_to_rep(&k, &b, 2, &q(1)).unwrap();
    let other = band_to_rep(&k, &b, 1, &q(2)).unwrap();
    assert_eq!(hom_basis(&k, &h1, &h2).dim(), 1);
    assert_eq!(hom_basis(&k, &h1, &other).dim(), 0);
    let opts = RankOptions::default();
    assert!(exists_mono(&k, &h1, &h2, opts));
    assert!(exists_epi(&k, &h2, &h1, opts));
    assert!(!exists_mono(&k, &h2, &h1, opts));
}

#[test]
fn simple_projective_embeds_in_string() {
    let q = cycle_quiver("+-").unwrap();
    let p = string_to_rep(&q, &parse_string(&q, &toks("e1")).unwrap());
    let m = string_to_rep(&q, &parse_string(&q, &toks("a0 -a1")).unwrap());
    assert!(exists_mono(&q, &p, &m, RankOptions::default()));
}

#[test]
fn tube_ranks_of_a32() {
    let q = cycle_quiver("+++--").unwrap();
    let t = TameContext::new(&q).unwrap();
    let mut ranks: Vec<usize> = t.tubes().iter().map(|t| t.rank).collect();
    ranks.sort();
    assert_eq!(ranks, vec![2, 3]);
    assert_eq!(t.delta_len(), 5);
}

#[test]
fn classification_by_defect() {
    let q = cycle_quiver("+-").unwrap();
    let e = GrEngine::with_defaults(&q).unwrap();
    let kinds: Vec<(String, ArKind)> =
        e.catalog(3).unwrap().into_iter().map(|c| (c.label().to_string(), e.kind(&c).unwrap())).collect();
    assert_eq!(kinds.iter().filter(|k| k.1 == ArKind::Preprojective).count(), 2);
    assert_eq!(kinds.iter().filter(|k| k.1 == ArKind::Regular).count(), 3);
    assert_eq!(kinds.iter().filter(|k| k.1 == ArKind::Preinjective).count(), 2);
}

#[test]
fn measure_validation() {
    assert!(GrMeasure::new(vec![3, 1]).is_err());
    assert!(GrMeasure::new(vec![0]).is_err());
    assert_eq!(GrMeasure::new(vec![1, 2]).unwrap().to_string(), "{1,2}");
}

#[test]
fn gr_count_of_h1_bounded_by_projective_cover() {
    // the top of H_1 sits at the sources, one projective summand each
    for n in 1..=5 {
        for bits in 0u32..(1 << (n + 1)) {
            let word: String = (0..=n).map(|i| if bits >> i & 1 == 1 { '+' } else { '-' }).collect();
            let Ok(q) = cycle_quiver(&word) else { continue };
            let sources = (0..q.vertex_count()).filter(|&v| q.arrows().iter().all(|a| a.target != v)).count();
            let e = GrEngine::with_defaults(&q).unwrap();
            let r = e.gr_submodules(&e.homogeneous(1).unwrap()).unwrap();
            assert!(r.gr_count <= sources, "{word}: gr(H_1) = {} > {sources}", r.gr_count);
        }
    }
}

#[test]
fn hook_extensions_are_monos() {
    use grtame::strmod::{irreducible_mono_extensions, is_substring_submodule};
    for word in ["+-", "++-", "+++--", "+-+-", "++-+--"] {
        let q = cycle_quiver(word).unwrap();
        for s in enumerate_strings(&q, 6) {
            let x = string_to_rep(&q, &s);
            for t in irreducible_mono_extensions(&q, &s) {
                assert!(t.module_length() > s.module_length());
                assert!(is_substring_submodule(&q, &s, &t), "{word}: {}", t.display(&q));
                assert!(exists_mono(&q, &x, &string_to_rep(&q, &t), RankOptions::default()));
            }
        }
    }
}
