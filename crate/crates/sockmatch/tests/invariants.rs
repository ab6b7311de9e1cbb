//! Cross-module invariants, checked exhaustively at small sizes and by
//! property tests on seeded random structures.

use proptest::prelude::*;

use sockmatch::enumerate::{brute_max_subset, for_each_matching};
use sockmatch::exact::whole;
use sockmatch::patterns::{classify_pair, z_clique, Pattern};
use sockmatch::persecute;
use sockmatch::randgen::{random_r_matching, random_word, SeedSpec};
use sockmatch::sockproc::{edge_lengths, largest_bipartite_submatching, sock_number, sockuence};
use sockmatch::wordio::{parse_word, render_word, WordFormat};
use sockmatch::{GaussWord, Word};

#[test]
fn sock_sum_equals_length_sum_exhaustively() {
    // r = 2 up to n = 7 and r = 3 up to n = 4
    let sizes: Vec<(usize, usize)> = (1..=7)
        .map(|n| (n, 2))
        .chain((1..=4).map(|n| (n, 3)))
        .collect();
    for (n, r) in sizes {
        for_each_matching(n, r, |m| {
            let s = sockuence(m);
            let l = edge_lengths(m);
            let xsum: u64 = s.xs.iter().map(|&x| x as u64).sum();
            assert_eq!(xsum, l.total);
            assert_eq!(l.avg, s.avg.clone() * whole(r as u64));
        })
        .unwrap();
    }
}

#[test]
fn three_faces_of_the_sock_number() {
    // max of the sockuence, height of the trace, and the brute-force
    // largest bipartite sub-matching agree for every pair matching n <= 6
    for n in 1..=6usize {
        for_each_matching(n, 2, |m| {
            let y = sock_number(m);
            assert_eq!(y, m.dyck_trace().unwrap().height());
            assert_eq!(y, largest_bipartite_submatching(m).unwrap());
            let oracle = brute_max_subset(m, |a, b| !(a[1] < b[0] || b[1] < a[0])).unwrap();
            assert_eq!(y, oracle);
        })
        .unwrap();
    }
}

#[test]
fn per_cut_means_match_the_formula_at_n7() {
    // one size beyond the acceptance grid
    let (n, r) = (7usize, 2usize);
    let rn = r * n;
    let mut sums = vec![0u64; rn + 1];
    let mut count = 0u64;
    for_each_matching(n, r, |m| {
        for (k, &x) in sockuence(m).xs.iter().enumerate() {
            sums[k + 1] += x as u64;
        }
        count += 1;
    })
    .unwrap();
    #[allow(clippy::needless_range_loop)]
    for k in 1..=rn {
        assert_eq!(
            sockmatch::exact::ratio(sums[k], count),
            sockmatch::formulas::expected_xk(n, r, k).unwrap(),
            "k = {k}"
        );
    }
}

#[test]
fn sweeps_concentrate_and_respect_sqrt_log_bands() {
    use sockmatch::experiments::{sweep, BandScale, BandSpec, ExperimentSpec, Statistic};

    // the average pile fraction tightens toward 1/3 as n grows
    let avg = ExperimentSpec {
        n: 100,
        r: 2,
        samples: 300,
        seed: 42,
        statistic: Statistic::SockAverage,
        band: None,
    };
    let summaries = sweep(&avg, &[100, 10_000]).unwrap();
    let dev: Vec<f64> = summaries
        .iter()
        .map(|s| (s.mean / s.n as f64 - 1.0 / 3.0).abs())
        .collect();
    assert!(dev[1] < dev[0], "deviations {dev:?}");

    // the pile maximum stays within 5 sqrt(n log n) of n/2 at every size
    let max = ExperimentSpec {
        n: 100,
        r: 2,
        samples: 300,
        seed: 42,
        statistic: Statistic::SockMax,
        band: Some(BandSpec {
            center: 0.0, // centered manually below
            half_width: 5.0,
            scale: BandScale::SqrtNLogN,
        }),
    };
    for s in sweep(&max, &[100, 1_000, 10_000]).unwrap() {
        let nf = s.n as f64;
        let tol = 5.0 * (nf * nf.ln()).sqrt();
        assert!(
            (s.mean - nf / 2.0).abs() <= tol,
            "n = {}: mean {} vs n/2 {}",
            s.n,
            s.mean,
            nf / 2.0
        );
    }
}

#[test]
fn fast_clique_paths_match_brute_force_on_1000_samples() {
    let singles = [
        Pattern::alignment(2),
        Pattern::nesting(2),
        Pattern::crossing(2),
    ];
    for i in 0..1000u64 {
        let n = 1 + (i % 8) as usize;
        let m = random_r_matching(n, 2, SeedSpec::new(2024, i));
        for p in &singles {
            let fast = z_clique(&m, std::slice::from_ref(p)).unwrap();
            let brute = brute_max_subset(&m, |a, b| classify_pair(a, b).unwrap() == *p).unwrap();
            assert_eq!(fast, brute, "pattern {p} on {}", m.to_word());
        }
    }
}

#[test]
fn generic_clique_solver_matches_brute_force() {
    // arbitrary allowed sets over triple matchings exercise the
    // branch-and-bound path end to end
    use sockmatch::patterns::all_patterns;
    let pats = all_patterns(3);
    for i in 0..200u64 {
        let n = 2 + (i % 9) as usize;
        let m = random_r_matching(n, 3, SeedSpec::new(4096, i));
        // a single pattern, a pair, and a triple of patterns per sample
        let picks: Vec<Vec<Pattern>> = vec![
            vec![pats[(i as usize) % pats.len()].clone()],
            vec![
                pats[(i as usize) % pats.len()].clone(),
                pats[(i as usize + 3) % pats.len()].clone(),
            ],
            vec![
                pats[(i as usize) % pats.len()].clone(),
                pats[(i as usize + 3) % pats.len()].clone(),
                pats[(i as usize + 7) % pats.len()].clone(),
            ],
        ];
        for allowed in picks {
            let solver = z_clique(&m, &allowed).unwrap();
            let brute =
                brute_max_subset(&m, |a, b| allowed.contains(&classify_pair(a, b).unwrap()))
                    .unwrap();
            assert_eq!(solver, brute, "allowed {allowed:?} on {}", m.to_word());
        }
    }
}

#[test]
fn single_pattern_cliques_have_sqrt_scale() {
    // at n = 2000 each of the three pair patterns yields cliques within
    // a generous sqrt(n) band
    let n = 2000usize;
    let lo = 0.5 * (n as f64).sqrt();
    let hi = 4.0 * (n as f64).sqrt();
    for (si, p) in [
        Pattern::alignment(2),
        Pattern::nesting(2),
        Pattern::crossing(2),
    ]
    .iter()
    .enumerate()
    {
        for i in 0..10u64 {
            let m = random_r_matching(n, 2, SeedSpec::new(7 + si as u64, i));
            let size = z_clique(&m, std::slice::from_ref(p)).unwrap() as f64;
            assert!(size >= lo && size <= hi, "pattern {p}: size {size}");
        }
    }
}

proptest! {
    #[test]
    fn word_matching_round_trip(n in 1usize..8, r in 2usize..5, stream in 0u64..256) {
        let m = random_r_matching(n, r, SeedSpec::new(99, stream));
        let w = m.to_word();
        prop_assert_eq!(w.to_matching(), m);
        prop_assert_eq!(GaussWord::from_word(w.as_word()).unwrap(), w);
    }

    #[test]
    fn traces_satisfy_the_dyck_property(n in 0usize..40, stream in 0u64..256) {
        let m = random_r_matching(n, 2, SeedSpec::new(5, stream));
        let t = m.dyck_trace().unwrap();
        let mut h = 0i64;
        for &s in t.steps() {
            h += s as i64;
            prop_assert!(h >= 0);
        }
        prop_assert_eq!(h, 0);
    }

    #[test]
    fn sockuence_steps_and_bounds(n in 0usize..30, r in 2usize..5, stream in 0u64..128) {
        let m = random_r_matching(n, r, SeedSpec::new(17, stream));
        let s = sockuence(&m);
        let rn = r * n;
        let mut prev = 0i64;
        for (k, &x) in s.xs.iter().enumerate() {
            let k = k + 1;
            let d = x as i64 - prev;
            prop_assert!(d == 1 || d == 1 - r as i64);
            prop_assert!(x <= k.min((r - 1) * (rn - k)));
            prev = x as i64;
        }
        if rn > 0 {
            prop_assert_eq!(s.xs[rn - 1], 0);
        }
    }

    #[test]
    fn word_io_round_trips(letters in proptest::collection::vec(0u32..30, 1..40)) {
        let w = Word::new(letters);
        let tokens = render_word(&w, WordFormat::IntegerTokens).unwrap();
        prop_assert_eq!(parse_word(&tokens, WordFormat::IntegerTokens).unwrap(), w.clone());
        if w.letters().iter().all(|&l| l < 26) {
            let compact = render_word(&w, WordFormat::CompactLetters).unwrap();
            prop_assert_eq!(parse_word(&compact, WordFormat::CompactLetters).unwrap(), w);
        } else {
            prop_assert!(render_word(&w, WordFormat::CompactLetters).is_err());
        }
    }

    #[test]
    fn persecution_is_online(len in 1usize..40, k in 1usize..5, stream in 0u64..64) {
        let u = random_word(len, k, SeedSpec::new(31, stream));
        let family = [
            parse_word("AA", WordFormat::CompactLetters).unwrap(),
            parse_word("ABA", WordFormat::CompactLetters).unwrap(),
        ];
        let full = persecute::reduce(&u, &family).unwrap();
        let cut = 1 + (stream as usize) % len;
        let partial = persecute::reduce(&u.prefix(cut), &family).unwrap();
        prop_assert_eq!(&partial.survivor_lengths[..], &full.survivor_lengths[..cut]);
        prop_assert_eq!(partial.y(), *full.survivor_lengths[..cut].iter().max().unwrap());
    }

    #[test]
    fn persecuting_packs_replays_the_sock_process(n in 1usize..6, r in 2usize..4, stream in 0u64..64) {
        let m = random_r_matching(n, r, SeedSpec::new(47, stream));
        let w = m.to_word();
        let family = [Word::new(vec![0; r])];
        let run = persecute::reduce(w.as_word(), &family).unwrap();
        let s = sockuence(&m);
        prop_assert_eq!(run.y(), s.y);
        prop_assert_eq!(run.survivor_lengths, s.xs);
    }
}
