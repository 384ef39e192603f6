use platcalc_core::foliation::{
    find_reducible_vertex, random_valid_tiling, reduce, reducible_vertex_exists, TileKind,
    TilingTree,
};

fn corpus() -> impl Iterator<Item = (u64, usize, TilingTree)> {
    (0..500u64).map(|seed| {
        let n = 1 + (seed % 5) as usize;
        (seed, n, random_valid_tiling(seed, n, 12))
    })
}

#[test]
fn generated_tilings_satisfy_the_euler_and_counting_identities() {
    let mut decorated = 0;
    for (seed, n, t) in corpus() {
        assert!(t.is_valid(), "seed {seed}: {:?}", t.validate());
        assert_eq!(t.euler_characteristic().unwrap(), 1, "seed {seed}");
        assert!(t.check_counting_identity(), "seed {seed}");
        let c = t.census();
        assert_eq!((c.t110, c.t440), (2 * n, n - 1), "seed {seed}");
        assert_eq!(t.edges.len() + 1, t.tiles.len());
        if c.t001 > 0 {
            decorated += 1;
        }
    }
    assert!(decorated > 300, "generator rarely adds tiles: {decorated}");
}

#[test]
fn reductions_descend_to_a_trivial_tiling() {
    let mut conditions = [0usize; 3];
    for (seed, n, t) in corpus() {
        let mut cur = t;
        let mut steps = 0;
        while let Some(r) = find_reducible_vertex(&cur).unwrap() {
            assert!(reducible_vertex_exists(&cur).unwrap());
            let next = reduce(&cur, r).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
            assert!(next.is_valid(), "seed {seed}: {:?}", next.validate());
            assert!(
                next.complexity().unwrap() < cur.complexity().unwrap(),
                "seed {seed}"
            );
            assert_eq!(next.euler_characteristic().unwrap(), 1);
            assert!(next.check_counting_identity());
            conditions[r.condition as usize] += 1;
            cur = next;
            steps += 1;
            assert!(steps < 100);
        }
        assert!(
            reducible_vertex_exists(&cur).unwrap(),
            "seed {seed}: stuck at\n{cur}"
        );
        assert!(cur.is_trivial(), "seed {seed}");
        assert_eq!(cur.bridge_index, 1);
        assert!(cur.bridge_index <= n);
    }
    assert!(conditions.iter().all(|&c| c > 0), "{conditions:?}");
}

#[test]
fn nesting_is_exercised() {
    let nested = corpus()
        .filter(|(_, _, t)| t.edges.iter().any(|e| e.inside.is_some()))
        .count();
    assert!(nested > 50, "{nested}");
    let pants = corpus()
        .filter(|(_, _, t)| t.tiles.iter().any(|x| matches!(x.kind, TileKind::T003(_))))
        .count();
    assert!(pants > 50, "{pants}");
}

#[test]
fn text_round_trip() {
    for (_, _, t) in corpus().step_by(25) {
        assert_eq!(TilingTree::parse(&t.to_text()).unwrap(), t);
    }
}
