mod common;

use bentguide::oracle::{
    default_z_half_width, radial_fd_eigen, radial_operator, tridiag_eigenvalues, z_fd_eigen,
    Tridiag, DEFAULT_POINTS,
};
use bentguide::radial::interior_sign_changes;
use bentguide::slab::solve_z_modes;
use bentguide::{assemble_catalog, Geometry, SolverOptions};
use common::table_geometry;
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_tridiag(rng: &mut ChaCha8Rng, n: usize) -> Tridiag {
    let diag = (0..n).map(|_| rng.gen_range(-5.0..5.0)).collect();
    let off = (0..n - 1).map(|_| rng.gen_range(-2.0..2.0)).collect();
    Tridiag::new(diag, off).unwrap()
}

fn dense(t: &Tridiag) -> DMatrix<f64> {
    let n = t.len();
    DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            t.diag[i]
        } else if i + 1 == j {
            t.offdiag[i]
        } else if j + 1 == i {
            t.offdiag[j]
        } else {
            0.0
        }
    })
}

#[test]
fn random_50_by_50_against_dense_solver() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let t = random_tridiag(&mut rng, 50);
        let mut want: Vec<f64> = dense(&t)
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .cloned()
            .collect();
        want.sort_by(f64::total_cmp);
        let got = tridiag_eigenvalues(&t, -100.0, 100.0);
        assert_eq!(got.len(), 50);
        for (a, b) in got.iter().zip(&want) {
            assert!((a - b).abs() <= 1e-8 * b.abs().max(1.0), "{a} vs {b}");
        }
    }
}

// det(T − xI) by the three-term recurrence of leading minors.
fn char_poly(t: &Tridiag, x: f64) -> f64 {
    let (mut p0, mut p1) = (1.0, t.diag[0] - x);
    for i in 1..t.len() {
        let p2 = (t.diag[i] - x) * p1 - t.offdiag[i - 1].powi(2) * p0;
        p0 = p1;
        p1 = p2;
    }
    p1
}

#[test]
fn small_instances_against_characteristic_polynomial() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 2..=6 {
        let t = random_tridiag(&mut rng, n);
        let mut roots = Vec::new();
        let samples = 400_000;
        let (a, b) = (-12.0, 12.0);
        let step = (b - a) / samples as f64;
        let mut prev = char_poly(&t, a);
        for j in 1..=samples {
            let x = a + step * j as f64;
            let cur = char_poly(&t, x);
            if prev.signum() != cur.signum() {
                let (mut lo, mut hi) = (x - step, x);
                for _ in 0..80 {
                    let mid = 0.5 * (lo + hi);
                    if char_poly(&t, mid).signum() == char_poly(&t, lo).signum() {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                roots.push(0.5 * (lo + hi));
            }
            prev = cur;
        }
        let got = tridiag_eigenvalues(&t, a, b);
        assert_eq!(got.len(), roots.len(), "n = {n}");
        for (x, y) in got.iter().zip(&roots) {
            assert!((x - y).abs() <= 1e-8 * y.abs().max(1.0));
        }
    }
}

#[test]
fn sturm_count_consistency() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let t = random_tridiag(&mut rng, 30);
        let lo = rng.gen_range(-6.0..0.0);
        let hi = rng.gen_range(0.0..6.0);
        let ev = tridiag_eigenvalues(&t, lo, hi);
        assert_eq!(ev.len(), t.count_below(hi) - t.count_below(lo));
        assert!(ev.iter().all(|&e| e >= lo && e <= hi));
    }
}

#[test]
fn vertical_oracle_matches_slab() {
    let g = table_geometry();
    let analytic: Vec<f64> = solve_z_modes(&g).iter().map(|z| z.h).collect();
    let fd = z_fd_eigen(
        &g,
        DEFAULT_POINTS,
        g.z0() + 10.0 / solve_z_modes(&g)[2].beta_s,
    )
    .unwrap();
    assert_eq!(fd.len(), analytic.len());
    for (a, b) in fd.iter().zip(&analytic) {
        assert!((a - b).abs() <= 1e-3 * b, "{a} vs {b}");
    }
}

fn ratio(coarse: f64, fine: f64) -> f64 {
    coarse.abs() / fine.abs()
}

#[test]
fn vertical_oracle_converges_at_second_order() {
    let g = table_geometry();
    let hw = default_z_half_width(&g);
    let exact: Vec<f64> = solve_z_modes(&g).iter().map(|z| z.h).collect();
    let e1 = z_fd_eigen(&g, 1001, hw).unwrap()[0] - exact[0];
    let e2 = z_fd_eigen(&g, 2001, hw).unwrap()[0] - exact[0];
    let r = ratio(e1, e2);
    println!("vertical convergence ratio {r:.3}");
    assert!((3.5..=4.5).contains(&r), "{r}");
}

#[test]
fn radial_oracle_converges_at_second_order() {
    let g = table_geometry();
    let cat = assemble_catalog(&g, &SolverOptions::default()).unwrap();
    let f = &cat[0];
    let e1 = radial_fd_eigen(f.m, &g, 1001).unwrap()[0] - f.h;
    let e2 = radial_fd_eigen(f.m, &g, 2001).unwrap()[0] - f.h;
    let r = ratio(e1, e2);
    println!("radial convergence ratio {r:.3}");
    assert!((3.5..=4.5).contains(&r), "{r}");
}

#[test]
fn radial_oracle_examples() {
    let g = table_geometry();
    let first = radial_fd_eigen(20.54, &g, DEFAULT_POINTS).unwrap()[0];
    assert!((first - 17.35).abs() <= 5e-3 * 17.35, "{first}");
    let third = radial_fd_eigen(4.56, &g, DEFAULT_POINTS).unwrap()[2];
    assert!((third - 10.82).abs() <= 5e-3 * 10.82, "{third}");
}

#[test]
fn radial_oracle_width_scaling() {
    let wide = Geometry::new(100.0, 101.0, 0.5, 2.3, 1.0, 0.8).unwrap();
    let narrow = Geometry::new(100.0, 100.5, 0.5, 2.3, 1.0, 0.8).unwrap();
    let a = radial_fd_eigen(0.0, &wide, 2001).unwrap()[0];
    let b = radial_fd_eigen(0.0, &narrow, 2001).unwrap()[0];
    assert!((b / a - 2.0).abs() < 1e-3, "{}", b / a);
}

#[test]
fn every_physical_mode_cross_validates() {
    let g = table_geometry();
    let cat = assemble_catalog(&g, &SolverOptions::default()).unwrap();
    let z = z_fd_eigen(&g, DEFAULT_POINTS, default_z_half_width(&g)).unwrap();
    for m in cat.iter().filter(|m| m.physical) {
        let hz = z[m.i - 1];
        let hr = radial_fd_eigen(m.m, &g, DEFAULT_POINTS).unwrap()[m.l - 1];
        assert!((hz - m.h).abs() < 5e-3 * m.h);
        assert!((hr - m.h).abs() < 5e-3 * m.h);
    }
}

#[test]
fn eigenvector_nodes_match_analytic_profile() {
    let g = table_geometry();
    let cat = assemble_catalog(&g, &SolverOptions::default()).unwrap();
    for m in &cat {
        let op = radial_operator(m.m, &g, 2001).unwrap();
        let lam = tridiag_eigenvalues(&op.matrix, 0.0, (g.k() * g.n_w).powi(2))[m.l - 1];
        let v = op.matrix.eigenvector(lam);
        let nodes = v.windows(2).filter(|w| w[0] * w[1] < 0.0).count();
        assert_eq!(nodes, m.l - 1);
        assert_eq!(interior_sign_changes(&m.radial, &g, 10_000).unwrap(), nodes);
    }
}

#[test]
fn invalid_grids() {
    let g = table_geometry();
    assert!(z_fd_eigen(&g, 199, 1.0).is_err());
    assert!(z_fd_eigen(&g, 400, 1.0).is_err());
    assert!(z_fd_eigen(&g, 401, 0.1).is_err());
    assert!(radial_fd_eigen(1.0, &g, 100).is_err());
    assert!(Tridiag::new(vec![1.0, 2.0], vec![]).is_err());
}
