//! End-to-end acceptance checks.  Every check is exact: the arithmetic is
//! rational throughout, so equality always means equality, never closeness.
//! Each test covers one headline guarantee and prints a single PASS line;
//! a panic from any assertion is the corresponding FAIL.

use octarsk_core::algebraic::{
    det_elimination, dodgson_determinant, genetic_from_g, genetic_to_pyramid,
    is_totally_positive_solid, matrix_from_genetic, solid_minor_pyramid, RationalMatrix,
};
use octarsk_core::grid::{CornerGrid, GeneticArray, SquareArray};
use octarsk_core::pyramid::PyramidTable;
use octarsk_core::rsk::{
    classical_rsk, diagonal_sum, evacuation, plane_partition_from_tableaux, rsk_forward,
    rsk_inverse, shape, PlanePartition,
};
use octarsk_core::tropical::{
    differentiate, integrate, or_map, or_map_inverse, phi, phi_bruteforce, restrict_alpha,
    restrict_beta, TropicalPyramid,
};
use octarsk_core::{rat, ratio, Rat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// ==================== shared generators ====================

fn random_int_array(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> SquareArray {
    let rows: Vec<Vec<Rat>> = (0..n)
        .map(|_| (0..n).map(|_| rat(rng.random_range(lo..=hi))).collect())
        .collect();
    SquareArray::from_rows(rows).expect("generated rows are square")
}

fn random_corner_grid(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> CornerGrid {
    let rows: Vec<Vec<Rat>> = (0..n)
        .map(|_| (0..n).map(|_| rat(rng.random_range(lo..=hi))).collect())
        .collect();
    CornerGrid::from_inner(rows).expect("generated rows are square")
}

fn random_rational_matrix(rng: &mut ChaCha8Rng, n: usize) -> RationalMatrix {
    let rows: Vec<Vec<Rat>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| ratio(rng.random_range(-9..=9), rng.random_range(1..=9)))
                .collect()
        })
        .collect();
    RationalMatrix::from_rows(rows).expect("generated rows are square")
}

fn random_positive_weights(rng: &mut ChaCha8Rng, n: usize) -> GeneticArray {
    let rows: Vec<Vec<Rat>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| ratio(rng.random_range(1..=9), rng.random_range(1..=9)))
                .collect()
        })
        .collect();
    GeneticArray::from_rows(rows).expect("generated rows are square")
}

// suffix sums of a non-negative bump table decrease weakly along both axes
fn random_plane_partition(rng: &mut ChaCha8Rng, n: usize, hi: i64) -> PlanePartition {
    let bump: Vec<Vec<i64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.random_range(0..=hi)).collect())
        .collect();
    let rows: Vec<Vec<Rat>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| {
                    let total: i64 = (i..n).map(|a| (j..n).map(|b| bump[b][a]).sum::<i64>()).sum();
                    rat(total)
                })
                .collect()
        })
        .collect();
    PlanePartition::from_rows(rows).expect("suffix sums decrease weakly")
}

fn assert_integer_file(f: &TropicalPyramid) {
    for p in f.table().points() {
        assert!(f.value(p).is_integer(), "non-integer value at {p}");
    }
}

fn assert_integer_grid(g: &CornerGrid) {
    for j in 0..=g.n() {
        for i in 0..=g.n() {
            assert!(g.get(i, j).is_integer(), "non-integer value at ({i}, {j})");
        }
    }
}

// ==================== 1: worked example, end to end ====================

#[test]
fn worked_example_reproduces_published_pipeline() {
    let s = SquareArray::from_int_rows(&[&[2, 3, 1], &[1, 1, 5], &[1, 2, 2]]).unwrap();

    let g = integrate(&s);
    let expected_g =
        CornerGrid::from_int_rows(&[&[2, 5, 6], &[3, 7, 13], &[4, 10, 18]]).unwrap();
    assert_eq!(g, expected_g);

    let f = phi(&s);
    assert!(f.is_polarized());
    assert_eq!(f.apex(), &rat(18));
    assert_eq!(restrict_alpha(&f), g);

    let h = restrict_beta(&f);
    let expected_h =
        CornerGrid::from_int_rows(&[&[11, 7, 4], &[8, 17, 10], &[6, 13, 18]]).unwrap();
    assert_eq!(h, expected_h);
    assert_eq!(or_map(&g), expected_h);

    let (p, lower, upper) = rsk_forward(&s).unwrap();
    let expected_p =
        PlanePartition::from_int_rows(&[&[11, 7, 4], &[8, 6, 3], &[6, 5, 1]]).unwrap();
    assert_eq!(p, expected_p);

    let sh = shape(&p).unwrap();
    assert_eq!(sh.parts(), &[11, 6, 1]);
    assert_eq!(sh.to_string(), "(11, 6, 1)");

    assert_eq!(
        lower.rows(),
        vec![
            vec![1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3],
            vec![2, 2, 2, 3, 3, 3],
            vec![3],
        ]
    );
    assert_eq!(
        upper.rows(),
        vec![
            vec![1, 1, 1, 1, 1, 1, 2, 2, 3, 3, 3],
            vec![2, 2, 2, 2, 2, 3],
            vec![3],
        ]
    );
    assert_eq!(lower.shape().parts(), &[11, 6, 1]);
    assert_eq!(upper.shape().parts(), &[11, 6, 1]);

    assert_eq!(rsk_inverse(&p), s);

    println!("PASS: worked example pipeline reproduces g, h, p, shape, and both tableaux");
}

// ==================== 2: closed-form files ====================

#[test]
fn indicator_and_ones_arrays_have_closed_form_files() {
    for n in 1..=6usize {
        let delta_rows: Vec<Vec<Rat>> = (1..=n)
            .map(|j| (1..=n).map(|i| rat((i == j) as i64)).collect())
            .collect();
        let delta = SquareArray::from_rows(delta_rows).unwrap();
        let ones = SquareArray::from_rows(vec![vec![rat(1); n]; n]).unwrap();

        let f_delta = phi(&delta);
        let f_ones = phi(&ones);
        for p in f_delta.table().points() {
            // a diagonal array rewards one node per level
            assert_eq!(f_delta.value(p), &rat(p.k), "delta file at {p}, n = {n}");
            // the all-ones array counts nodes: the t-th path visits
            // (i-k)/2 + t + (j-k)/2 + t - 1 nodes, so a k-tuple at
            // (i, j, k) visits k(i+j)/2 nodes in total
            assert_eq!(
                f_ones.value(p),
                &ratio(p.k * (p.i + p.j), 2),
                "ones file at {p}, n = {n}"
            );
        }
        assert!(f_delta.is_polarized());
        assert!(f_ones.is_polarized());

        // the file v(i,j,k) = (i+j-1)k is polarized on its own: around any
        // center, each diagonal of the octahedron sums to 2(i+j-1)k
        let mut table = PyramidTable::zeros(n);
        for p in table.points() {
            table.set(p, rat((p.i + p.j - 1) * p.k));
        }
        assert!(TropicalPyramid::from_table(table).is_polarized());
    }
    println!("PASS: closed forms hold at every point for sides 1 through 6");
}

// ==================== 3: oracle equivalence ====================

#[test]
fn growth_map_matches_exhaustive_path_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(1003);
    for n in 2..=4usize {
        for _ in 0..200 {
            let s = random_int_array(&mut rng, n, -5, 5);
            let fast = phi(&s);
            let slow = phi_bruteforce(&s).unwrap();
            assert_eq!(fast.table(), slow.table(), "oracle mismatch for n = {n}");
        }
    }
    println!("PASS: growth map equals the exhaustive path-tuple oracle on 600 random arrays");
}

// ==================== 4: bijections ====================

#[test]
fn forward_and_inverse_transforms_cancel() {
    let mut rng = ChaCha8Rng::seed_from_u64(1004);

    // (a) the array is recovered from its file
    for n in 1..=5usize {
        for _ in 0..40 {
            let s = random_int_array(&mut rng, n, -6, 6);
            assert_eq!(differentiate(&restrict_alpha(&phi(&s))), s);
        }
        // rational entries round trip the same way
        let rows: Vec<Vec<Rat>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| ratio(rng.random_range(-9..=9), rng.random_range(1..=4)))
                    .collect()
            })
            .collect();
        let s = SquareArray::from_rows(rows).unwrap();
        assert_eq!(differentiate(&restrict_alpha(&phi(&s))), s);
    }

    // (b) the corner transform and its inverse cancel in both orders
    for n in 1..=5usize {
        for _ in 0..40 {
            let g = random_corner_grid(&mut rng, n, -9, 9);
            assert_eq!(or_map_inverse(&or_map(&g)), g);
            assert_eq!(or_map(&or_map_inverse(&g)), g);
        }
    }

    // (c) the full correspondence, exhaustively over all 3x3 arrays with
    // entries 0, 1, 2 (19,683 cases)
    let mut cases = 0usize;
    for code in 0..19_683usize {
        let mut digits = code;
        let rows: Vec<Vec<Rat>> = (0..3)
            .map(|_| {
                (0..3)
                    .map(|_| {
                        let d = digits % 3;
                        digits /= 3;
                        rat(d as i64)
                    })
                    .collect()
            })
            .collect();
        let s = SquareArray::from_rows(rows).unwrap();
        let (p, lower, upper) = rsk_forward(&s).unwrap();
        assert_eq!(rsk_inverse(&p), s, "round trip failed for case {code}");
        assert_eq!(
            plane_partition_from_tableaux(&lower, &upper).unwrap(),
            p,
            "tableau pair does not rebuild the plane partition for case {code}"
        );
        cases += 1;
    }
    assert_eq!(cases, 19_683);

    println!("PASS: transforms invert each other, including all 19,683 exhaustive cases");
}

// ==================== 5: supermodular <-> inframodular ====================

#[test]
fn correspondence_exchanges_supermodular_and_inframodular() {
    let mut rng = ChaCha8Rng::seed_from_u64(1005);

    for _ in 0..500 {
        let n = rng.random_range(1..=5usize);
        let s = random_int_array(&mut rng, n, 0, 6);
        let h = or_map(&integrate(&s));
        assert!(h.is_inframodular(), "image not inframodular for n = {n}");
        assert!(
            h.get(n - 1, n - 1) <= h.get(n, n),
            "corner condition failed for n = {n}"
        );
    }

    for _ in 0..500 {
        let n = rng.random_range(1..=5usize);
        let p = random_plane_partition(&mut rng, n, 3);
        let g = or_map_inverse(&diagonal_sum(&p));
        assert!(g.is_supermodular(), "preimage not supermodular for n = {n}");
    }

    println!("PASS: 1000 random inputs confirm the supermodular/inframodular exchange");
}

// ==================== 6: determinant pyramids ====================

#[test]
fn determinant_pyramids_obey_the_condensation_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(1006);

    // the multiplicative relation holds at every center of a minor pyramid
    for _ in 0..100 {
        let n = rng.random_range(1..=5usize);
        let x = random_rational_matrix(&mut rng, n);
        assert!(solid_minor_pyramid(&x).is_polarized());
    }

    // growing from weights agrees with taking minors of the weighted path
    // matrix, the rectangle products give the weights back, and positive
    // weights force strictly positive solid minors
    for n in 1..=4usize {
        for _ in 0..25 {
            let w = random_positive_weights(&mut rng, n);
            let grown = genetic_to_pyramid(&w).unwrap();
            let x = matrix_from_genetic(&w).unwrap();
            assert_eq!(grown.table(), solid_minor_pyramid(&x).table());
            assert_eq!(genetic_from_g(&grown.extract_g()).unwrap(), w);
            assert!(is_totally_positive_solid(&x));
        }
    }

    // condensation with elimination fallback equals plain elimination,
    // singular matrices included
    for round in 0..200 {
        let mut x = {
            let rows: Vec<Vec<Rat>> = (0..5)
                .map(|_| (0..5).map(|_| rat(rng.random_range(-9..=9))).collect())
                .collect();
            RationalMatrix::from_rows(rows).unwrap()
        };
        if round % 4 == 0 {
            // overwrite the last row with the sum of the first two
            for c in 1..=5 {
                let v = x.get(1, c) + x.get(2, c);
                x.set(5, c, v);
            }
        }
        let det = dodgson_determinant(&x);
        assert_eq!(det, det_elimination(&x));
        if round % 4 == 0 {
            assert_eq!(det, rat(0));
        }
    }

    println!("PASS: condensation identity, weight growth, and determinants all agree");
}

// ==================== 7: classical insertion cross-check ====================

#[test]
fn octahedron_tableaux_match_classical_insertion() {
    let mut rng = ChaCha8Rng::seed_from_u64(1007);

    let pairing_names = [
        "identity",
        "first side evacuated",
        "second side evacuated",
        "both sides evacuated",
    ];
    let mut alive = [true; 4];

    for _ in 0..500 {
        let n = rng.random_range(1..=4usize);
        let s = random_int_array(&mut rng, n, 0, 4);
        let (_, lower, upper) = rsk_forward(&s).unwrap();
        let (ins, rec) = classical_rsk(&s).unwrap();

        assert_eq!(ins.shape(), lower.shape());
        assert_eq!(rec.shape(), upper.shape());
        assert_eq!(ins.content(), lower.content());
        assert_eq!(rec.content(), upper.content());

        for (idx, (flip_first, flip_second)) in
            [(false, false), (true, false), (false, true), (true, true)]
                .into_iter()
                .enumerate()
        {
            if !alive[idx] {
                continue;
            }
            let first = if flip_first { evacuation(&ins) } else { ins.clone() };
            let second = if flip_second { evacuation(&rec) } else { rec.clone() };
            if first != lower || second != upper {
                alive[idx] = false;
            }
        }
    }

    let survivors: Vec<&str> = alive
        .iter()
        .zip(pairing_names)
        .filter_map(|(&ok, name)| ok.then_some(name))
        .collect();
    assert!(
        !survivors.is_empty(),
        "no fixed evacuation pairing reconciles the tableau pairs"
    );

    println!(
        "PASS: classical insertion matches on 500 arrays; reconciling pairing(s): {}",
        survivors.join(", ")
    );
}

// ==================== 8: integrality ====================

#[test]
fn integer_inputs_yield_integer_values_throughout() {
    let mut rng = ChaCha8Rng::seed_from_u64(1008);

    for n in 2..=4usize {
        for _ in 0..60 {
            let s = random_int_array(&mut rng, n, -5, 5);
            assert_integer_file(&phi(&s));
        }
    }

    for _ in 0..200 {
        let n = rng.random_range(1..=5usize);
        let g = random_corner_grid(&mut rng, n, -9, 9);
        assert_integer_grid(&or_map(&g));
        assert_integer_grid(&or_map_inverse(&g));
    }

    for _ in 0..200 {
        let n = rng.random_range(1..=5usize);
        let s = random_int_array(&mut rng, n, 0, 6);
        let (p, _, _) = rsk_forward(&s).unwrap();
        assert_eq!(p.first_non_integer(), None);
        let back = rsk_inverse(&p);
        for j in 1..=n {
            for i in 1..=n {
                assert!(back.get(i, j).is_integer());
            }
        }
        let q = random_plane_partition(&mut rng, n, 3);
        assert_integer_grid(&or_map_inverse(&diagonal_sum(&q)));
    }

    println!("PASS: integer inputs stay integral through every transform");
}
