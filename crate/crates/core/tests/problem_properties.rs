use std::collections::BTreeSet;

use prefixdp_core::gmr::SolveOptions;
use prefixdp_core::oracle::{enumerate_one_ended, huffman_greedy, OracleBudget};
use prefixdp_core::one_ended::{oe_predecessors, solve_one_ended, solve_one_ended_naive};
use prefixdp_core::problems::*;
use prefixdp_core::{Algorithm, Error, WeightSeq};
use proptest::prelude::*;

fn weights(max_n: usize) -> impl Strategy<Value = WeightSeq> {
    prop::collection::vec(0u64..60, 1..=max_n).prop_map(|w| WeightSeq::new(&w).unwrap())
}

/// Cheapest assignment of non-decreasing lengths from `allowed` to the sorted
/// weights that satisfies Kraft over an `r`-ary alphabet, optionally limited
/// to `distinct` different lengths.
fn best_length_assignment(w: &WeightSeq, r: u64, allowed: &[u64], distinct: Option<usize>) -> Option<u64> {
    fn go(
        w: &WeightSeq,
        r: u64,
        allowed: &[u64],
        distinct: Option<usize>,
        chosen: &mut Vec<u64>,
        best: &mut Option<u64>,
    ) {
        let n = w.n();
        if chosen.len() == n {
            let used: BTreeSet<_> = chosen.iter().collect();
            if distinct.is_some_and(|g| used.len() > g) {
                return;
            }
            let deepest = *chosen.last().unwrap() as u32;
            let slots: u128 = chosen.iter().map(|&l| (r as u128).pow(deepest - l as u32)).sum();
            if slots > (r as u128).pow(deepest) {
                return;
            }
            let cost = chosen.iter().enumerate().map(|(t, &l)| l * w.weight(t + 1)).sum();
            *best = Some(best.map_or(cost, |b: u64| b.min(cost)));
            return;
        }
        let floor = chosen.last().copied().unwrap_or(0);
        for &l in allowed.iter().filter(|&&l| l >= floor) {
            chosen.push(l);
            go(w, r, allowed, distinct, chosen, best);
            chosen.pop();
        }
    }
    let mut best = None;
    go(w, r, allowed, distinct, &mut Vec::new(), &mut best);
    best
}

fn lambda() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::btree_set(1u64..=6, 1..=3).prop_map(|s| s.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn reserved_given_matches_length_search(w in weights(6), r in 2usize..=3, l in lambda()) {
        let spec = ReservedSpec::new(r, l.clone()).unwrap();
        let expected = best_length_assignment(&w, r as u64, &l, None);
        for alg in [Algorithm::Naive, Algorithm::Batched] {
            match solve_reserved_given_with(&w, &spec, SolveOptions::new(alg)) {
                Ok(s) => {
                    prop_assert_eq!(Some(s.cost), expected);
                    let book = s.codebook.unwrap();
                    prop_assert!(book.is_prefix_free());
                    prop_assert!(book.lengths().iter().all(|&x| l.contains(&(x as u64))));
                    prop_assert!(book.words.iter().flatten().all(|&c| c < r));
                }
                Err(Error::NoFeasibleTree) => prop_assert_eq!(expected, None),
                Err(e) => prop_assert!(false, "{e}"),
            }
        }
    }

    #[test]
    fn reserved_g_matches_length_search(w in weights(6), r in 2usize..=3, g in 1usize..=3) {
        let spec = GLengthsSpec::new(r, g).unwrap();
        let all: Vec<u64> = (1..=w.n() as u64).collect();
        let expected = best_length_assignment(&w, r as u64, &all, Some(g)).unwrap();
        let s = solve_reserved_g_with(&w, &spec, SolveOptions::new(Algorithm::Batched)).unwrap();
        prop_assert_eq!(s.cost, expected);
        let book = s.codebook.unwrap();
        prop_assert!(book.is_prefix_free());
        prop_assert!(book.lengths().iter().collect::<BTreeSet<_>>().len() <= g);
        let naive = solve_reserved_g_with(&w, &spec, SolveOptions::new(Algorithm::Naive)).unwrap();
        prop_assert_eq!(naive.codebook.unwrap(), book);
    }

    #[test]
    fn g_lengths_envelope(w in weights(12), r in 2usize..=3) {
        let mut prev = u64::MAX;
        for g in 1..=w.n() {
            let c = solve_reserved_g(&w, &GLengthsSpec::new(r, g).unwrap()).unwrap().cost;
            prop_assert!(c <= prev);
            prev = c;
        }
        prop_assert_eq!(prev, huffman_greedy(&w, r).unwrap());
    }

    #[test]
    fn uniform_mixed_radix_is_huffman_adapter(w in weights(20), r in 2usize..=5) {
        let a = solve_mixed_radix(&w, &MixedRadixSpec::new(vec![r]).unwrap()).unwrap();
        let b = solve_huffman_reference_adapter(&w, r).unwrap();
        prop_assert_eq!(a.cost, huffman_greedy(&w, r).unwrap());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn mixed_radix_symbols_in_range(w in weights(20), t in prop::collection::vec(2usize..=5, 1..6)) {
        let spec = MixedRadixSpec::new(t.clone()).unwrap();
        let book = solve_mixed_radix(&w, &spec).unwrap();
        prop_assert!(book.is_prefix_free());
        for word in &book.words {
            for (i, &sym) in word.iter().enumerate() {
                prop_assert!(sym < *t.get(i).unwrap_or(t.last().unwrap()));
            }
        }
    }
}

/// Minimum cost over every set of `n` prefix-free binary words ending in `1`
/// with length at most `max_len`.
fn one_ended_word_search(w: &WeightSeq, max_len: usize) -> u64 {
    let mut words: Vec<Vec<u8>> = Vec::new();
    for len in 1..=max_len {
        for bits in 0..1u32 << (len - 1) {
            let mut word: Vec<u8> = (0..len - 1).map(|k| (bits >> k & 1) as u8).collect();
            word.push(1);
            words.push(word);
        }
    }
    fn go(w: &WeightSeq, words: &[Vec<u8>], from: usize, picked: &mut Vec<usize>, best: &mut u64) {
        if picked.len() == w.n() {
            let mut lengths: Vec<u64> = picked.iter().map(|&i| words[i].len() as u64).collect();
            lengths.sort();
            let cost = lengths.iter().enumerate().map(|(t, l)| l * w.weight(t + 1)).sum();
            *best = (*best).min(cost);
            return;
        }
        for i in from..words.len() {
            let clash = picked.iter().any(|&j| words[i].starts_with(&words[j]) || words[j].starts_with(&words[i]));
            if !clash {
                picked.push(i);
                go(w, words, i + 1, picked, best);
                picked.pop();
            }
        }
    }
    let mut best = u64::MAX;
    go(w, &words, 0, &mut Vec::new(), &mut best);
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn one_ended_matches_oracles(w in weights(4)) {
        let batched = solve_one_ended(&w).unwrap();
        let naive = solve_one_ended_naive(&w).unwrap();
        prop_assert_eq!(batched.cost, naive.cost);
        prop_assert_eq!(batched.cost, enumerate_one_ended(&w, w.n() + 2, OracleBudget::ONE_ENDED).unwrap());
        prop_assert_eq!(batched.cost, one_ended_word_search(&w, w.n() + 1));
    }

    #[test]
    fn one_ended_naive_and_batched_agree(w in weights(40)) {
        let a = solve_one_ended(&w).unwrap();
        let b = solve_one_ended_naive(&w).unwrap();
        prop_assert_eq!(&a.table, &b.table);
        prop_assert_eq!(&a.expansion, &b.expansion);
        prop_assert_eq!(&a.codebook, &b.codebook);
    }

    #[test]
    fn one_ended_code_shape(w in weights(25)) {
        let r = solve_one_ended(&w).unwrap();
        let book = &r.codebook;
        prop_assert!(book.is_prefix_free());
        prop_assert!(book.words.iter().all(|x| x.last() == Some(&1)));
        let depth = r.expansion.len() - 1;
        // internal nodes reached by a 1-edge sit above level depth - 1
        for word in &book.words {
            for k in 1..word.len() {
                if word[k - 1] == 1 {
                    prop_assert!(k < depth.saturating_sub(1), "1-internal node at level {} of {}", k, depth);
                }
            }
        }
    }
}

#[test]
fn one_ended_predecessor_order() {
    let n = 8;
    for m in 0..=n {
        for b in 1..2 * n {
            let preds = oe_predecessors(prefixdp_core::gmr::Signature::new(m, b), n);
            assert!(preds.windows(2).all(|p| p[0].b < p[1].b));
            for p in preds {
                assert!(p.m < m || (p.m == m && b == 2 * p.b));
            }
        }
    }
}
