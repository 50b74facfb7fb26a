use std::collections::BTreeSet;

use clanhess::clan::{clan_count, Clan};
use clanhess::poset::InclusionPoset;
use clanhess::weak_order::{w_set, WSetMemo, WeakOrderGraph};
use proptest::prelude::*;

fn arb_clan() -> impl Strategy<Value = Clan> {
    (1usize..=4, 0usize..=2)
        .prop_flat_map(|(q, extra)| {
            let p = q + extra;
            let clans = Clan::enumerate(p, q).unwrap();
            let len = clans.len();
            (Just(clans), 0..len)
        })
        .prop_map(|(clans, i)| clans[i].clone())
}

// Brute-force count: sequences over {+, -, 1..} with sign balance p - q whose
// labels each occur exactly twice, counted up to relabelling.
fn brute_count(p: usize, q: usize) -> usize {
    fn go(pos: usize, n: usize, plus: usize, minus: usize, open: usize, p: usize, q: usize) -> usize {
        if pos == n {
            return usize::from(open == 0 && plus + (n - plus - minus) / 2 == p && minus + (n - plus - minus) / 2 == q);
        }
        let mut total = go(pos + 1, n, plus + 1, minus, open, p, q) + go(pos + 1, n, plus, minus + 1, open, p, q);
        // Opening a new label in first-occurrence order.
        total += go(pos + 1, n, plus, minus, open + 1, p, q);
        // Closing one of the open labels.
        if open > 0 {
            total += open * go(pos + 1, n, plus, minus, open - 1, p, q);
        }
        total
    }
    go(0, p + q, 0, 0, 0, p, q)
}

#[test]
fn counting_formula_matches_brute_force() {
    for n in 2..=8 {
        for q in 1..=n / 2 {
            let p = n - q;
            assert_eq!(clan_count(p, q), brute_count(p, q) as u128, "({p},{q})");
            assert_eq!(Clan::enumerate(p, q).unwrap().len(), brute_count(p, q), "({p},{q})");
        }
    }
}

#[test]
fn sign_clans_are_minimal_and_gamma0_is_maximum() {
    for (p, q) in [(2, 1), (2, 2), (3, 2), (3, 3)] {
        let poset = InclusionPoset::new(p, q).unwrap();
        let top = poset.index_of(&Clan::gamma0(p, q).unwrap()).unwrap();
        for i in 0..poset.len() {
            assert!(poset.leq(i, top));
        }
        for low in [Clan::sigma(p, q).unwrap(), Clan::tau(p, q).unwrap()] {
            let idx = poset.index_of(&low).unwrap();
            assert_eq!(poset.down_set(idx).count_ones(..), 1, "{low}");
        }
    }
}

#[test]
fn closed_orbits_are_the_sign_clans() {
    // Closed orbits have the dimension of K/B_K.
    for (p, q) in [(2, 1), (2, 2), (3, 2)] {
        let base = p * (p - 1) / 2 + q * (q - 1) / 2;
        let closed: BTreeSet<Clan> = Clan::enumerate(p, q)
            .unwrap()
            .into_iter()
            .filter(|c| c.orbit_dimension() == base)
            .collect();
        let signs: BTreeSet<Clan> = Clan::enumerate(p, q)
            .unwrap()
            .into_iter()
            .filter(|c| c.pair_count() == 0)
            .collect();
        assert_eq!(closed, signs);
    }
}

#[test]
fn graph_w_sets_match_memo_on_full_graphs() {
    for (p, q) in [(2, 2), (3, 2), (4, 2)] {
        let graph = WeakOrderGraph::build(p, q, false).unwrap();
        let mut memo = WSetMemo::new();
        for (clan, set) in graph.nodes.iter().zip(graph.w_sets()) {
            assert_eq!(&set, memo.get(clan), "{clan}");
        }
    }
}

proptest! {
    #[test]
    fn w_set_lengths_equal_codimension(g in arb_clan()) {
        let codim = g.codimension();
        let set = w_set(&g);
        prop_assert!(!set.is_empty());
        for w in &set {
            prop_assert_eq!(w.length(), codim, "{} {}", g, w);
        }
    }

    #[test]
    fn statistics_order_is_reflexive_and_compatible_with_dimension(g in arb_clan(), h in arb_clan()) {
        prop_assert!(g.inclusion_leq(&g).unwrap());
        if g.p() == h.p() && g.q() == h.q() && g != h && g.inclusion_leq(&h).unwrap() {
            prop_assert!(g.orbit_dimension() < h.orbit_dimension());
            prop_assert!(!h.inclusion_leq(&g).unwrap());
        }
    }

    #[test]
    fn gamma0_dimension_is_full(q in 1usize..=4, extra in 0usize..=3) {
        let p = q + extra;
        let n = p + q;
        prop_assert_eq!(Clan::gamma0(p, q).unwrap().orbit_dimension(), n * (n - 1) / 2);
    }

    #[test]
    fn serde_round_trips(g in arb_clan()) {
        let json = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<Clan>(&json).unwrap(), g.clone());
        let stats = g.statistics();
        let json = serde_json::to_string(&g.to_matching()).unwrap();
        let back: clanhess::clan::ChargedMatching = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(Clan::from_matching(&back).unwrap().statistics(), stats);
    }
}
