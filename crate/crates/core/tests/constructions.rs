use designforge::arrays::{check_conditions, summarize, ArrayKind};
use designforge::biplane::{construct_array, hussain_chains, ShippedBiplane};
use designforge::designs::{develop, is_difference_set, AbelianGroup};
use designforge::format::{parse_array, write_array};
use designforge::latin::{canonical_phi2, construct_latin_sesqui, cyclic_latin, LatinSquare};
use designforge::sylvester;
use proptest::prelude::*;

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn fixture_triple_arrays() {
    let a = parse_array(&fixture("triple_4x9.txt")).unwrap();
    assert_eq!(check_conditions(&a).unwrap().kind, ArrayKind::Triple);
    let big = parse_array(&fixture("triple_28x9.txt"))
        .unwrap()
        .transpose();
    let cls = check_conditions(&big).unwrap();
    assert_eq!(
        (cls.kind, cls.rows, cls.cols, cls.v, cls.k),
        (ArrayKind::Triple, 9, 28, 36, Some(7))
    );
}

#[test]
fn constructed_arrays_round_trip_through_text() {
    let mut arrays = vec![
        sylvester::construct(None, &sylvester::default_sigmas())
            .unwrap()
            .array,
    ];
    for n in 2..=5 {
        arrays.push(designforge::latin::construct_default(n).unwrap());
    }
    for s in ShippedBiplane::ALL {
        arrays.push(construct_array(&s.load().unwrap(), 0).unwrap().array);
    }
    for a in arrays {
        assert_eq!(parse_array(&write_array(&a)).unwrap(), a);
    }
}

#[test]
fn thirty_seven_point_scan() {
    // the development is cyclic, so every block behaves alike
    let bp = ShippedBiplane::ThirtySeven.load().unwrap();
    let first = designforge::biplane::block_chain_report(&bp, 0).unwrap();
    for block in 1..37 {
        let r = designforge::biplane::block_chain_report(&bp, block).unwrap();
        assert_eq!(r.histogram, first.histogram);
    }
    assert!(!first.all_triangles);
}

#[test]
fn repeated_letters_come_from_four_cycles() {
    let bp = ShippedBiplane::Seven.load().unwrap();
    let chains = hussain_chains(&bp, 2).unwrap();
    let built = construct_array(&bp, 2).unwrap();
    for (j, q) in built.col_points.iter().enumerate() {
        let column = built.array.column(j);
        for cycle in chains[q].cycles().iter().filter(|c| c.len() == 4) {
            // opposite corners of a 4-cycle have the same pair of neighbours
            for p in [cycle[0], cycle[1]] {
                let i = built.row_points.iter().position(|&x| x == p).unwrap();
                let letter = column[i];
                assert_eq!(column.iter().filter(|&&x| x == letter).count(), 2);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn latin_construction_is_isotopy_invariant(n in 2usize..6, seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut perm = |m: usize| { let mut p: Vec<usize> = (0..m).collect(); p.shuffle(&mut rng); p };
        let phi1 = cyclic_latin(n).isotope(&perm(n), &perm(n), &perm(n));
        let phi3: LatinSquare = cyclic_latin(n + 1).isotope(&perm(n + 1), &perm(n + 1), &perm(n + 1));
        let a = construct_latin_sesqui(&phi1, &canonical_phi2(n), &phi3).unwrap();
        let cls = check_conditions(&a).unwrap();
        prop_assert_eq!(cls.kind, ArrayKind::Sesqui);
        prop_assert_eq!(cls.gamma, vec![0, 1, n]);
    }

    #[test]
    fn difference_sets_agree_with_pair_counts(n in 4usize..20, bits in any::<u32>()) {
        let g = AbelianGroup::cyclic(n).unwrap();
        let set: Vec<usize> = (0..n).filter(|i| bits >> i & 1 == 1).collect();
        prop_assume!(set.len() >= 2);
        let d = develop(std::slice::from_ref(&set), &g).unwrap();
        prop_assume!(d.blocks().len() == n);
        let conc = designforge::designs::concurrence_matrix(&d).off_diagonal_values();
        for lambda in 1..=set.len() {
            prop_assert_eq!(is_difference_set(&set, &g, lambda), conc == vec![lambda as i64]);
        }
    }

    #[test]
    fn biplane_arrays_have_constant_row_column_meets(block in 0usize..16) {
        let bp = ShippedBiplane::Sixteen.load().unwrap();
        let a = construct_array(&bp, block).unwrap().array;
        let s = summarize(&a);
        prop_assert!((0..a.rows()).all(|i| s.row_col_intersections.row(i).iter().all(|&x| x == 4)));
    }
}
