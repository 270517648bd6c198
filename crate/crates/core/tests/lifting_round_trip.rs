use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twolevel_core::geometry::Coord;
use twolevel_core::lifting::{
    flatten, lift_instance, lift_tree, normalize_single_edges, project_to_two_level, LiftedTree, LiftedVertex,
};
use twolevel_core::oracle::oracle_height;
use twolevel_core::rsmt::SteinerSubroutine;
use twolevel_core::twolevel::{solve_adjusted, solve_bbox_center, solve_simple, Instance};
use twolevel_core::Point;

fn instance_from(groups: Vec<Vec<(i64, i64)>>) -> Instance {
    Instance::new(groups.into_iter().map(|g| g.into_iter().map(|(x, y)| Point::int(x, y)).collect()).collect()).unwrap()
}

fn arb_instance() -> impl Strategy<Value = Instance> {
    (2usize..=4)
        .prop_flat_map(|k| prop::collection::vec(prop::collection::vec((-5i64..=5, -5i64..=5), 1..=4), k))
        .prop_map(instance_from)
}

/// A random lifted Steiner tree: every terminal hangs off a random earlier
/// vertex by an axis-by-axis path through a random intermediate point at
/// arbitrary heights in `[0, K]`.
fn random_lifted_tree(inst: &Instance, height: &Coord, seed: u64) -> LiftedTree {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = inst.k();
    let terminals = lift_instance(inst, height).unwrap();
    let targets: Vec<LiftedVertex> = terminals.iter().map(|t| t.to_vertex(k, height)).collect();
    let mut vertices = vec![targets[0].clone()];
    let mut edges = Vec::new();
    let random_height = |rng: &mut ChaCha8Rng| {
        let steps = 4;
        height * &Coord::ratio(rng.gen_range(0..=steps), steps)
    };
    for target in &targets[1..] {
        let from = rng.gen_range(0..vertices.len());
        let mut via = target.clone();
        via.base = Point::int(rng.gen_range(-5..=5), rng.gen_range(-5..=5));
        for h in via.lift.iter_mut() {
            if rng.gen_bool(0.5) {
                *h = random_height(&mut rng);
            }
        }
        let mut cur = from;
        for goal in [via, target.clone()] {
            let mut axes: Vec<usize> = (0..k + 2).collect();
            for i in (1..axes.len()).rev() {
                axes.swap(i, rng.gen_range(0..=i));
            }
            for axis in axes {
                let mut next = vertices[cur].clone();
                match axis {
                    0 => next.base.x = goal.base.x.clone(),
                    1 => next.base.y = goal.base.y.clone(),
                    j => next.lift[j - 2] = goal.lift[j - 2].clone(),
                }
                if next != vertices[cur] {
                    vertices.push(next);
                    edges.push((cur, vertices.len() - 1));
                    cur = vertices.len() - 1;
                }
            }
        }
    }
    LiftedTree::new(k, vertices, edges, terminals).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn heuristic_solutions_survive_the_round_trip(inst in arb_instance()) {
        let height = oracle_height(&inst);
        let k = Coord::from_int(inst.k() as i64);
        let sub = SteinerSubroutine::rmst();
        for t in [
            solve_simple(&inst, &sub).unwrap(),
            solve_bbox_center(&inst, &sub).unwrap(),
            solve_adjusted(&inst, &Coord::ratio(7, 13), &sub).unwrap(),
        ] {
            let lifted = lift_tree(&inst, &t, &height).unwrap();
            prop_assert_eq!(lifted.length(), t.total_length() + &k * &height);
            prop_assert!(lifted.validate(&height).is_ok());
            let flat = flatten(&lifted, &height).unwrap();
            prop_assert!(flat.length() <= lifted.length());
            let single = normalize_single_edges(&flat, &height).unwrap();
            prop_assert!(single.length() <= flat.length());
            let back = project_to_two_level(&single, &height).unwrap();
            prop_assert_eq!(back.validate(&inst), Ok(()));
            prop_assert!(back.total_length() <= t.total_length());
            prop_assert_eq!(back.total_length(), single.length() - &k * &height);
        }
    }

    #[test]
    fn arbitrary_lifted_trees_flatten_and_project(inst in arb_instance(), seed in any::<u64>()) {
        let height = oracle_height(&inst);
        let tree = random_lifted_tree(&inst, &height, seed);
        prop_assert!(tree.validate(&height).is_ok());
        let flat = flatten(&tree, &height).unwrap();
        prop_assert!(flat.length() <= tree.length());
        prop_assert!(flat.tree().validate(&height).is_ok());
        let single = normalize_single_edges(&flat, &height).unwrap();
        prop_assert!(single.length() <= flat.length());
        for layer in 1..=inst.k() {
            prop_assert_eq!(single.vertical_edge_count(layer), 1);
        }
        let back = project_to_two_level(&single, &height).unwrap();
        prop_assert_eq!(back.validate(&inst), Ok(()));
        let k = Coord::from_int(inst.k() as i64);
        prop_assert_eq!(back.total_length() + &k * &height, single.length());
    }
}
