mod common;

use common::{all_graphs, pe_zero_prob_direct, pe_zero_via_dirac, random_suite, spearman, G};
use qbetti::homology::{spectrum, ChainComplex, Laplacian};
use qbetti::qsim::phase::{p_zero, zero_leakage_bound};
use qbetti::qsim::{
    end_to_end_betti, pe_distribution, register_sizing, register_sizing_with_norm,
    block_lambda_max, SimConfig,
};

#[test]
fn sector_route_matches_dirac_eigendecomposition() {
    let mut graphs = random_suite(25, 3, 7, 99);
    graphs.push(G::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap());
    for g in graphs {
        let cx = ChainComplex::build(&g).unwrap();
        let b = cx.dirac().unwrap();
        let dense = b.to_dense();
        let norm_sq = block_lambda_max::<f64>(&cx).unwrap();
        for k in 1..=cx.top() {
            let rep = spectrum::<f64>(&cx.laplacian(k).unwrap()).unwrap();
            let s = register_sizing_with_norm(&rep, norm_sq, 2).unwrap();
            let model = pe_distribution(&rep, s.t, s.c).unwrap();
            let oracle = pe_zero_via_dirac(&dense, b.sector_range(k), s.t, s.c);
            assert!((model.p_zero - oracle).abs() < 1e-9, "{} vs {oracle}", model.p_zero);
        }
    }
}

#[test]
fn full_distribution_matches_dirac_route() {
    // single edge: sector 1 has Δ_1 spectrum {0, 2}
    let g = G::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
    let cx = ChainComplex::build(&g).unwrap();
    let rep = spectrum::<f64>(&cx.laplacian(2).unwrap()).unwrap();
    let (t, c) = (5, 2.5);
    let model = pe_distribution(&rep, t, c).unwrap();
    let n = 1usize << t;
    for y in 0..n {
        // ±√λ each with weight ½ per nonzero eigenvalue
        let mut want = rep.kernel_dim as f64 * if y == 0 { 1.0 } else { 0.0 };
        for &l in rep.nonzero_eigenvalues() {
            let phi = l.sqrt() / (2.0 * std::f64::consts::PI * c);
            let shift = y as f64 / n as f64;
            want += 0.5 * pe_zero_prob_direct(t, phi - shift);
            want += 0.5 * pe_zero_prob_direct(t, -phi - shift);
        }
        want /= rep.dim() as f64;
        assert!((model.distribution[y] - want).abs() < 1e-12, "y = {y}");
    }
}

#[test]
fn p_zero_bounds_and_convergence() {
    for g in random_suite(30, 3, 8, 7) {
        let cx = ChainComplex::build(&g).unwrap();
        for k in 1..=cx.top() {
            let rep = spectrum::<f64>(&cx.laplacian(k).unwrap()).unwrap();
            let s = register_sizing(&rep, 0).unwrap();
            let ideal = rep.kernel_dim as f64 / rep.dim() as f64;
            let mut last = f64::INFINITY;
            for t in [s.t, s.t + 2, s.t + 4, s.t + 8, s.t + 14] {
                let p = p_zero(&rep, t, s.c).unwrap();
                let excess = p - ideal;
                assert!(excess >= -1e-12);
                let worst = rep
                    .lambda_min
                    .map_or(0.0, |lm| zero_leakage_bound(t, lm.sqrt() / (2.0 * std::f64::consts::PI * s.c)));
                let frac = (rep.dim() - rep.kernel_dim) as f64 / rep.dim() as f64;
                assert!(excess <= frac * worst + 1e-12);
                assert!(excess <= last + 1e-12 || excess < 1e-6);
                last = excess;
            }
            assert!(last < 1e-5);
        }
    }
}

#[test]
fn mixture_is_basis_invariant() {
    for (i, g) in random_suite(15, 4, 8, 3).into_iter().enumerate() {
        let cx = ChainComplex::build(&g).unwrap();
        for k in 1..=cx.top() {
            let l = cx.laplacian(k).unwrap();
            let size = l.dim();
            // a fixed derangement-ish permutation
            let perm: Vec<usize> = (0..size).map(|j| (j * 7 + i + 3) % size).collect();
            let mut seen = perm.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != size {
                continue;
            }
            let permuted = Laplacian {
                k,
                matrix: l.matrix.permute_symmetric(&perm),
            };
            let a = spectrum::<f64>(&l).unwrap();
            let b = spectrum::<f64>(&permuted).unwrap();
            let s = register_sizing(&a, 4).unwrap();
            let pa = p_zero(&a, s.t, s.c).unwrap();
            let pb = p_zero(&b, s.t, s.c).unwrap();
            assert!((pa - pb).abs() < 1e-12);
        }
    }
}

#[test]
fn end_to_end_agrees_with_oracle_up_to_n8() {
    let mut graphs: Vec<G> = (1..=4).flat_map(all_graphs).collect();
    graphs.extend(random_suite(60, 5, 8, 1234));
    let cfg = SimConfig::default();
    for g in &graphs {
        let cx = ChainComplex::build(g).unwrap();
        for k in 1..=g.n() {
            let run = end_to_end_betti(g, k, &cfg).unwrap();
            assert_eq!(run.beta_exact, cx.betti(k).unwrap() as u64);
            assert!(run.agrees(), "n = {}, k = {k}: {} vs {}", g.n(), run.beta_exact, run.beta_quantum);
        }
    }
}

#[test]
fn runs_are_deterministic() {
    let g = random_suite(1, 8, 8, 77).pop().unwrap();
    let cfg = SimConfig {
        shots: 5000,
        seed: 17,
        ..SimConfig::default()
    };
    let a = serde_json::to_string(&end_to_end_betti(&g, 2, &cfg).unwrap()).unwrap();
    let b = serde_json::to_string(&end_to_end_betti(&g, 2, &cfg).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn eq1_tracks_simulated_cost_in_rank() {
    let mut predicted = Vec::new();
    let mut simulated = Vec::new();
    for g in random_suite(80, 5, 9, 2024) {
        for k in 1..=3 {
            let run = end_to_end_betti(&g, k, &SimConfig::default()).unwrap();
            let Some(ledger) = run.ledger else { continue };
            let Some(eq1) = ledger.eq1_total else { continue };
            predicted.push(eq1.value);
            simulated.push(ledger.simulated.gates);
        }
    }
    let rho = spearman(&predicted, &simulated);
    println!("spearman over {} instances: {rho:.3}", predicted.len());
    assert!(rho >= 0.8, "rank correlation {rho}");
}
