//! Acceptance gate. Each test covers one release criterion and prints a
//! single pass/fail line; run with `cargo test --test acceptance -- --nocapture`
//! to see the lines for passing criteria too.

use bispec_core::catalog;
use bispec_core::characterize::{classify, Verdict};
use bispec_core::enumerate::{sweep_shapes, BipartiteEnumerator};
use bispec_core::graph::{bipartition, biregular_degrees, distance_matrices, Graph};
use bispec_core::matrix::Mat;
use bispec_core::oracle::{
    brute_force_walk_count, constant_distance2_common_neighbors, cross_validate, oracle_is_drg,
};
use bispec_core::poly::{predistance_system, spectral_excess_closed_form, spectral_inner_product};
use bispec_core::spectral::{distinct_spectrum, eigen_symmetric, idempotents, walk_count_spectral};
use bispec_core::Tolerances;

const RESIDUAL: f64 = 1e-8;

struct Criterion {
    label: &'static str,
    failures: Vec<String>,
}

impl Criterion {
    fn new(label: &'static str) -> Self {
        Criterion { label, failures: Vec::new() }
    }

    fn require(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(detail());
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("acceptance: {} ... PASS", self.label);
        } else {
            println!("acceptance: {} ... FAIL", self.label);
            for f in &self.failures {
                println!("  - {f}");
            }
            panic!("{}: {} failure(s)", self.label, self.failures.len());
        }
    }
}

/// Every connected bipartite labeled graph with part sizes up to (m1, m2).
fn corpus(m1: usize, m2: usize) -> impl Iterator<Item = Graph> {
    sweep_shapes(m1, m2)
        .into_iter()
        .flat_map(|(n1, n2)| BipartiteEnumerator::new(n1, n2, true).unwrap())
}

fn named_drgs() -> Vec<(&'static str, Graph, &'static str)> {
    vec![
        ("C4", catalog::cycle(4), "{2,1;1,2}"),
        ("C6", catalog::cycle(6), "{2,1,1;1,1,2}"),
        ("C8", catalog::cycle(8), "{2,1,1,1;1,1,1,2}"),
        ("K_{2,2}", catalog::complete_bipartite(2, 2), "{2,1;1,2}"),
        ("K_{3,3}", catalog::complete_bipartite(3, 3), "{3,2;1,3}"),
        ("Q3", catalog::hypercube(3), "{3,2,1;1,2,3}"),
        ("Q4", catalog::hypercube(4), "{4,3,2,1;1,2,3,4}"),
        ("Heawood", catalog::heawood(), "{3,2,2;1,1,3}"),
    ]
}

const DRG_CHECKS: &[&str] = &[
    "thm4.1a",
    "thm4.1b",
    "thm4.2a",
    "thm4.2b",
    "thm4.2c",
    "set",
    "set-bipartite",
];

#[test]
fn criterion_1_exhaustive_oracle_equivalence() {
    let mut c = Criterion::new("criterion 1: exhaustive oracle equivalence at (4,4)");
    let tols = Tolerances::default();
    let report = cross_validate(corpus(4, 4), &tols).unwrap();
    c.require(report.total_graphs == 38410, || {
        format!("expected 38410 connected graphs, saw {}", report.total_graphs)
    });
    c.require(report.drg_count == 106, || {
        format!("expected 106 distance-regular graphs, saw {}", report.drg_count)
    });
    for id in ["thm4.2a", "thm4.2b", "thm4.2c", "set", "set-bipartite"] {
        c.require(report.comparisons.get(id).copied().unwrap_or(0) > 0, || {
            format!("no comparisons recorded for {id}")
        });
    }
    for r in &report.records {
        c.require(false, || r.to_line());
    }

    // the (4,5) shapes are heavier; opt in via environment
    if std::env::var("BS_ACCEPT_LARGE").is_ok() {
        let shapes = (1..=4).map(|n1| BipartiteEnumerator::with_cap(n1, 5, true, 20).unwrap());
        let large = cross_validate(shapes.flatten(), &tols).unwrap();
        for r in &large.records {
            c.require(false, || format!("(4,5): {}", r.to_line()));
        }
    }
    c.finish();
}

#[test]
fn criterion_2_named_graph_regression() {
    let mut c = Criterion::new("criterion 2: named-graph regression");
    let tols = Tolerances::default();

    for (name, g, array) in named_drgs() {
        let r = classify(&g, &tols).unwrap();
        c.require(r.distance_regular, || format!("{name} not oracle-DRG"));
        let got = r.intersection_array.as_ref().map(|a| a.to_string());
        c.require(got.as_deref() == Some(array), || {
            format!("{name}: intersection array {got:?}, expected {array}")
        });
        for id in DRG_CHECKS {
            let check = &r.checks[*id];
            c.require(check.verdict != Verdict::Fail, || {
                format!("{name}: {id} failed: {:?}", check.witness)
            });
        }
        c.require(r.checks["hoffman"].passed(), || format!("{name}: hoffman failed"));
        c.require(r.checks["walk-regular"].passed(), || {
            format!("{name}: walk-regular failed")
        });
    }

    // P4 plus the first non-DRG bipartite graphs the oracle finds in the
    // exhaustive corpus: no applicable check may claim distance-regularity.
    let mut non_drg = vec![("P4".to_string(), catalog::path(4))];
    for g in corpus(3, 4) {
        if non_drg.len() >= 11 {
            break;
        }
        if oracle_is_drg(&g).is_none() {
            non_drg.push((format!("corpus #{}", non_drg.len()), g));
        }
    }
    c.require(non_drg.len() == 11, || {
        format!("only {} non-DRG graphs collected", non_drg.len() - 1)
    });
    for (name, g) in &non_drg {
        let r = classify(g, &tols).unwrap();
        c.require(!r.distance_regular, || format!("{name} claimed DRG by oracle"));
        for id in DRG_CHECKS {
            let check = &r.checks[*id];
            c.require(check.verdict != Verdict::Pass, || {
                format!("{name}: {id} passed on a non-DRG graph")
            });
        }
    }
    c.finish();
}

#[test]
fn criterion_3_spectral_excess_cross_route() {
    let mut c = Criterion::new("criterion 3: spectral-excess cross-route");
    let tols = Tolerances::default();
    for g in corpus(4, 4) {
        let e = eigen_symmetric(&g.adjacency()).unwrap();
        let s = distinct_spectrum(&e, &tols).unwrap();
        let ps = predistance_system(&s, tols.tol_eig).unwrap();
        let route1 = ps.polys[s.d()].eval(s.thetas[0]);
        let route2 = spectral_excess_closed_form(&s);
        c.require((route1 - route2).abs() <= 1e-6, || {
            format!("routes differ on n={}: {route1} vs {route2}", g.n())
        });
    }
    let c4 = catalog::cycle(4);
    let e = eigen_symmetric(&c4.adjacency()).unwrap();
    let s = distinct_spectrum(&e, &tols).unwrap();
    let anchor = predistance_system(&s, tols.tol_eig).unwrap().polys[s.d()].eval(s.thetas[0]);
    c.require((anchor - 1.0).abs() <= 1e-9, || {
        format!("C4 anchor p_d(theta_0) = {anchor}, expected 1")
    });
    c.finish();
}

#[test]
fn criterion_4_hoffman_and_biregularity_equivalences() {
    let mut c = Criterion::new("criterion 4: Hoffman and biregularity equivalences");
    let tols = Tolerances::default();
    for g in corpus(4, 4) {
        let constant_degree = (0..g.n()).all(|u| g.degree(u) == g.degree(0));
        let e = eigen_symmetric(&g.adjacency()).unwrap();
        let s = distinct_spectrum(&e, &tols).unwrap();
        let ps = predistance_system(&s, tols.tol_eig).unwrap();
        let avg = 2.0 * g.edge_count() as f64 / g.n() as f64;
        let by_eigenvalue = (avg - s.thetas[0]).abs() <= tols.tol_eig;
        let ha = ps.hoffman.eval_on_matrix(&g.adjacency());
        let by_hoffman = ha.sub(&Mat::ones(g.n())).norm_inf() <= 1e-6;
        c.require(by_eigenvalue == constant_degree && by_hoffman == constant_degree, || {
            format!(
                "regularity routes disagree (degree={constant_degree}, \
                 eigenvalue={by_eigenvalue}, hoffman={by_hoffman}) on n={}",
                g.n()
            )
        });

        let b = bipartition(&g).unwrap();
        let biregular = biregular_degrees(&g, &b).is_some();
        let r = classify(&g, &tols).unwrap();
        for id in ["prop3.1", "thm3.2", "thm3.3"] {
            let check = &r.checks[id];
            c.require(check.verdict != Verdict::NotApplicable, || {
                format!("{id} not applicable on a bipartite graph")
            });
            c.require(check.passed() == biregular, || {
                format!("{id} verdict {:?} vs biregular={biregular}", check.verdict)
            });
        }
    }

    // K_{2,3} anchor: the odd part of H maps A onto alpha times the
    // antidiagonal block matrix, alpha = 5 / (2 sqrt 6).
    let k23 = catalog::complete_bipartite(2, 3);
    let e = eigen_symmetric(&k23.adjacency()).unwrap();
    let s = distinct_spectrum(&e, &tols).unwrap();
    let ps = predistance_system(&s, tols.tol_eig).unwrap();
    let h1a = ps.hoffman_odd.eval_on_matrix(&k23.adjacency());
    let alpha = 5.0 / (2.0 * 6.0_f64.sqrt());
    let b = bipartition(&k23).unwrap();
    for u in 0..k23.n() {
        for v in 0..k23.n() {
            let target = if b.same_part(u, v) { 0.0 } else { alpha };
            c.require((h1a[(u, v)] - target).abs() <= 1e-9, || {
                format!("K_{{2,3}}: H1(A)[{u},{v}] = {}, expected {target}", h1a[(u, v)])
            });
        }
    }
    c.finish();
}

#[test]
fn criterion_5_numerical_invariant_suite() {
    let mut c = Criterion::new("criterion 5: numerical invariant suite");
    let tols = Tolerances::default();
    let mut graphs: Vec<Graph> = named_drgs().into_iter().map(|(_, g, _)| g).collect();
    graphs.push(catalog::path(4));
    graphs.push(catalog::petersen());
    graphs.extend(corpus(3, 3));

    for g in &graphs {
        let n = g.n();
        let a = g.adjacency();
        let e = eigen_symmetric(&a).unwrap();
        let s = distinct_spectrum(&e, &tols).unwrap();
        let idem = idempotents(&e, &s);

        // idempotent algebra residuals
        let mut sum = Mat::zeros(n);
        let mut weighted = Mat::zeros(n);
        for (i, ei) in idem.mats.iter().enumerate() {
            sum.add_scaled(ei, 1.0);
            weighted.add_scaled(ei, s.thetas[i]);
        }
        c.require(sum.sub(&Mat::identity(n)).norm_inf() <= RESIDUAL, || {
            format!("sum E_i != I on n={n}")
        });
        c.require(weighted.sub(&a).norm_inf() <= RESIDUAL, || {
            format!("sum theta_i E_i != A on n={n}")
        });
        for i in 0..idem.mats.len() {
            for j in 0..idem.mats.len() {
                let prod = idem.mats[i].mul(&idem.mats[j]);
                let target = if i == j { idem.mats[i].clone() } else { Mat::zeros(n) };
                c.require(prod.sub(&target).norm_inf() <= RESIDUAL, || {
                    format!("E_{i} E_{j} residual on n={n}")
                });
            }
        }

        // predistance orthogonality and three-term recurrence residuals
        let ps = predistance_system(&s, tols.tol_eig).unwrap();
        for i in 0..=s.d() {
            for j in 0..=s.d() {
                let ip = spectral_inner_product(&ps.polys[i], &ps.polys[j], &s);
                let target = if i == j { ps.polys[i].eval(s.thetas[0]) } else { 0.0 };
                c.require((ip - target).abs() <= RESIDUAL, || {
                    format!("<p_{i},p_{j}> residual on n={n}")
                });
            }
        }
        for i in 0..=s.d() {
            // x p_i = beta_{i-1} p_{i-1} + alpha_i p_i + gamma_{i+1} p_{i+1}
            let mut rhs = ps.polys[i].scaled(ps.alphas[i]);
            if i > 0 {
                rhs = rhs.add(&ps.polys[i - 1].scaled(ps.betas[i - 1]));
            }
            if i < s.d() {
                rhs = rhs.add(&ps.polys[i + 1].scaled(ps.gammas[i]));
            }
            let lhs = ps.polys[i].mul_x();
            if i < s.d() {
                c.require(lhs.max_coeff_diff(&rhs) <= RESIDUAL, || {
                    format!("recurrence residual at i={i} on n={n}")
                });
            } else {
                // at i = d the recurrence holds only on the spectrum
                for &t in &s.thetas {
                    c.require((lhs.eval(t) - rhs.eval(t)).abs() <= 1e-7, || {
                        format!("recurrence at i=d fails at theta={t} on n={n}")
                    });
                }
            }
        }

        // bipartite symmetries
        if let Ok(b) = bipartition(g) {
            let d = s.d();
            for i in 0..=d {
                c.require((s.thetas[i] + s.thetas[d - i]).abs() <= RESIDUAL, || {
                    format!("spectrum asymmetric at i={i} on n={n}")
                });
                for u in 0..n {
                    for v in 0..n {
                        let sign = if b.same_part(u, v) { 1.0 } else { -1.0 };
                        let diff = idem.mats[d - i][(u, v)] - sign * idem.mats[i][(u, v)];
                        c.require(diff.abs() <= RESIDUAL, || {
                            format!("crossed multiplicity parity at ({u},{v}) on n={n}")
                        });
                    }
                }
            }
        }

        // walk-count triple agreement, exact after snapping
        for len in 0..=8usize {
            let power = g.adjacency_int().pow(len);
            for u in 0..n {
                for v in u..n {
                    let brute = brute_force_walk_count(g, u, v, len).unwrap();
                    c.require(brute as u128 == power[(u, v)], || {
                        format!("brute vs power at ({u},{v}), len {len}, n={n}")
                    });
                    let crossed = idem.crossed_multiplicities(u, v);
                    let spectral = walk_count_spectral(&s, &crossed, len);
                    c.require(spectral.round() as u64 == brute, || {
                        format!("spectral {spectral} vs brute {brute} at ({u},{v}), len {len}, n={n}")
                    });
                }
            }
        }
    }
    c.finish();
}

#[test]
fn criterion_6_corollary_sweep() {
    let mut c = Criterion::new("criterion 6: four/five-eigenvalue corollary sweep");
    let tols = Tolerances::default();
    let (mut checked_a, mut checked_b) = (0usize, 0usize);
    for g in corpus(4, 4) {
        if (0..g.n()).any(|u| g.degree(u) != g.degree(0)) {
            continue;
        }
        let e = eigen_symmetric(&g.adjacency()).unwrap();
        let s = distinct_spectrum(&e, &tols).unwrap();
        let dm = distance_matrices(&g).unwrap();
        if s.d() == 3 && dm.diameter() == 3 {
            checked_a += 1;
            c.require(oracle_is_drg(&g).is_some(), || {
                format!("4 eigenvalues, D=3, not DRG (n={})", g.n())
            });
        }
        if s.d() == 4
            && dm.diameter() == 4
            && constant_distance2_common_neighbors(&g).is_some()
        {
            checked_b += 1;
            c.require(oracle_is_drg(&g).is_some(), || {
                format!("5 eigenvalues, D=4, constant c2, not DRG (n={})", g.n())
            });
        }
    }
    c.require(checked_a > 0, || "no 4-eigenvalue candidates in corpus".into());
    c.require(checked_b > 0, || "no 5-eigenvalue candidates in corpus".into());
    c.finish();
}
